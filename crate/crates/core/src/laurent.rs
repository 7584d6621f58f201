//! The Laurent quotient `R / <1 - xy> = k[t, t^-1]` and the embedding of `R`
//! into operators on `k[t]`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::AlgebraElement;
use crate::scalar::{self, Scalar};

/// Dense univariate polynomial, coefficient `k` belongs to `t^k`; no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![scalar::one()])
    }

    /// `t^n`
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![Scalar::zero(); n + 1];
        c[n] = scalar::one();
        Self::new(c)
    }

    /// `t - root`
    pub fn linear(root: &Scalar) -> Self {
        Self::new(vec![-root.clone(), scalar::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                out[a + b] += ca * cb;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, at: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * at + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * scalar::int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = &rem[rem.len() - 1] * &lead_inv;
            for (n, c) in divisor.coeffs.iter().enumerate() {
                rem[k + n] -= &q * c;
            }
            quot[k] = q;
            rem.pop();
            while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            Some(lead) => self.scale(&lead.recip()),
            None => Self::zero(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lp = LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (k as i64, c.clone())),
        );
        write!(f, "{}", lp.to_string().replace('t', "x"))
    }
}

/// Element of `k[t, t^-1]`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Scalar)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    /// `t^e`
    pub fn power(e: i64) -> Self {
        Self::from_terms([(e, scalar::one())])
    }

    pub fn add_term(&mut self, e: i64, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> Scalar {
        self.terms.get(&e).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Scalar)> {
        self.terms.iter()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a + b, &(ca * cb));
            }
        }
        out
    }

    pub fn eval(&self, at: &Scalar) -> Scalar {
        self.terms
            .iter()
            .map(|(e, c)| c * scalar::pow(at, *e))
            .sum()
    }

    /// Splits off the unit `t^k` with `k` the lowest exponent: `self = t^k * p(t)`
    /// with `p(0) != 0`. Zero maps to `(0, 0)`.
    pub fn strip_unit(&self) -> (i64, Poly) {
        let Some(low) = self.terms.keys().next().copied() else {
            return (0, Poly::zero());
        };
        let high = *self.terms.keys().next_back().unwrap();
        let mut coeffs = vec![Scalar::zero(); (high - low) as usize + 1];
        for (e, c) in &self.terms {
            coeffs[(e - low) as usize] = c.clone();
        }
        (low, Poly::new(coeffs))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            let neg = scalar::is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let var = match e {
                0 => String::new(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            };
            match (var.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{}", scalar::format(&abs))?,
                (false, true) => write!(f, "{var}")?,
                (false, false) => write!(f, "{}*{var}", scalar::format(&abs))?,
            }
        }
        Ok(())
    }
}

/// The algebra map `x -> t`, `y -> t^-1`; its kernel is the ideal `<1 - xy>`.
pub fn laurent_image(a: &AlgebraElement) -> LaurentPoly {
    LaurentPoly::from_terms(a.terms().map(|(m, c)| (m.i as i64 - m.j as i64, c.clone())))
}

fn euler_inverse(p: &Poly) -> Poly {
    Poly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(n, c)| c / scalar::int(n as i64 + 1))
            .collect(),
    )
}

/// Action of `a` on `k[t]` with `x` as multiplication by `t` and `y` as `H^-1 d/dt`.
pub fn diffop_action(a: &AlgebraElement, p: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in a.terms() {
        let mut v = p.clone();
        for _ in 0..m.j {
            v = euler_inverse(&v.derivative());
        }
        v = v.mul(&Poly::monomial(m.i as usize));
        out = out.add(&v.scale(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix_unit;
    use crate::scalar::{frac, int};

    /// `H(f) = d/dt (t f)`, i.e. `t^n -> (n + 1) t^n`.
    fn euler(p: &Poly) -> Poly {
        Poly::new(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| c * scalar::int(n as i64 + 1))
                .collect(),
        )
    }

    #[test]
    fn laurent_examples() {
        let idem = AlgebraElement::one() - AlgebraElement::xy(1, 1);
        assert!(laurent_image(&idem).is_zero());
        assert_eq!(
            laurent_image(&AlgebraElement::xy(2, 1)),
            LaurentPoly::power(1)
        );
        assert_eq!(laurent_image(&AlgebraElement::one()), LaurentPoly::power(0));
        assert!(laurent_image(&matrix_unit(3, 1)).is_zero());
    }

    #[test]
    fn diffop_examples() {
        let y = AlgebraElement::y();
        assert_eq!(diffop_action(&y, &Poly::monomial(3)), Poly::monomial(2));
        assert!(diffop_action(&y, &Poly::one()).is_zero());
        assert_eq!(
            diffop_action(&AlgebraElement::x(), &Poly::monomial(2)),
            Poly::monomial(3)
        );
    }

    #[test]
    fn euler_operator_round_trip() {
        let p = Poly::new(vec![int(1), frac(2, 3), int(-4)]);
        assert_eq!(euler_inverse(&euler(&p)), p);
        // H(f) = d/dt(t f)
        assert_eq!(euler(&p), p.mul(&Poly::monomial(1)).derivative());
    }

    #[test]
    fn gcd_and_division() {
        let a = Poly::linear(&int(1)).mul(&Poly::linear(&int(2)));
        let b = Poly::linear(&int(2)).mul(&Poly::linear(&int(3)));
        assert_eq!(a.gcd(&b), Poly::linear(&int(2)));
        let (q, r) = a.div_rem(&Poly::linear(&int(1)));
        assert_eq!(q, Poly::linear(&int(2)));
        assert!(r.is_zero());
        assert_eq!(
            Poly::linear(&int(1)).gcd(&Poly::linear(&int(2))),
            Poly::one()
        );
    }

    #[test]
    fn strip_unit_normalizes() {
        let p = LaurentPoly::from_terms([(-2, int(3)), (0, int(-3))]);
        let (k, poly) = p.strip_unit();
        assert_eq!(k, -2);
        assert_eq!(poly, Poly::new(vec![int(3), int(0), int(-3)]));
    }
}
