//! Seeded random elements and extension specs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElement, Monomial};
use crate::extension::ExtSpec;
use crate::module::{LinMap, ModVector, SimpleDesc};
use crate::scalar::{self, Scalar};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// `p/q` with `|p| <= 5`, `1 <= q <= 3`; possibly zero.
    pub fn scalar(&mut self) -> Scalar {
        scalar::frac(self.rng.gen_range(-5..=5), self.rng.gen_range(1..=3))
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let c = self.scalar();
            if c != scalar::int(0) {
                return c;
            }
        }
    }

    pub fn lambda(&mut self) -> Scalar {
        const POOL: [(i64, i64); 6] = [(1, 1), (2, 1), (-1, 1), (1, 2), (3, 1), (-2, 3)];
        let (p, q) = POOL[self.rng.gen_range(0..POOL.len())];
        scalar::frac(p, q)
    }

    pub fn monomial(&mut self, max_degree: u32) -> Monomial {
        let d = self.rng.gen_range(0..=max_degree);
        let i = self.rng.gen_range(0..=d);
        Monomial::new(i, d - i)
    }

    pub fn element(&mut self, max_degree: u32, max_terms: usize) -> AlgebraElement {
        let n = self.rng.gen_range(0..=max_terms);
        let terms: Vec<_> = (0..n)
            .map(|_| (self.monomial(max_degree), self.scalar()))
            .collect();
        AlgebraElement::from_terms(terms)
    }

    pub fn nonzero_element(&mut self, max_degree: u32, max_terms: usize) -> AlgebraElement {
        loop {
            let a = self.element(max_degree, max_terms.max(1));
            if !a.is_zero() {
                return a;
            }
        }
    }

    pub fn vector(&mut self, desc: &SimpleDesc, max_index: usize) -> ModVector {
        match desc {
            SimpleDesc::Fin(_) => ModVector::Fin(self.scalar()),
            SimpleDesc::InfShift => {
                let n = self.rng.gen_range(0..=3);
                ModVector::from_coords(
                    (0..n).map(|_| (self.rng.gen_range(0..=max_index), self.scalar())),
                )
            }
        }
    }

    pub fn desc(&mut self) -> SimpleDesc {
        if self.rng.gen_bool(0.5) {
            SimpleDesc::InfShift
        } else {
            SimpleDesc::Fin(self.lambda())
        }
    }

    /// Valid spec with `V` the shift module; `δ(x)` has support at most `max_support`.
    pub fn inf_quotient_spec(&mut self, u: SimpleDesc, max_support: usize) -> ExtSpec {
        let v = SimpleDesc::InfShift;
        let cols = self.rng.gen_range(0..=3);
        let columns: Vec<_> = (0..cols)
            .map(|_| {
                (
                    self.rng.gen_range(0..=max_support),
                    self.vector(&u, max_support),
                )
            })
            .collect();
        let dx = LinMap::new(v.clone(), u.clone(), columns).expect("shapes match");
        let free = self.vector(&u, max_support);
        ExtSpec::completed(u, v, dx, Some(free)).expect("completion of a valid map")
    }

    /// Valid spec with `V = k_lambda`.
    pub fn fin_quotient_spec(
        &mut self,
        u: SimpleDesc,
        lambda: Scalar,
        max_support: usize,
    ) -> ExtSpec {
        let image = self.vector(&u, max_support);
        ExtSpec::onto_fin(u, lambda, image).expect("lambda nonzero")
    }

    pub fn spec(&mut self, max_support: usize) -> ExtSpec {
        let u = self.desc();
        if self.rng.gen_bool(0.5) {
            self.inf_quotient_spec(u, max_support)
        } else {
            let lambda = self.lambda();
            self.fin_quotient_spec(u, lambda, max_support)
        }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::validate_delta;

    #[test]
    fn deterministic_and_valid() {
        let (mut a, mut b) = (Sampler::new(7), Sampler::new(7));
        for _ in 0..30 {
            let (sa, sb) = (a.spec(6), b.spec(6));
            assert_eq!(sa, sb);
            assert!(validate_delta(&sa).is_ok());
        }
        assert!(!a.nonzero_element(4, 3).is_zero());
    }
}
