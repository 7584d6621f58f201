//! Witnesses that `R` is neither noetherian nor Goldie: a strictly ascending
//! chain of left annihilators, and the essentiality of `F`.

use num_traits::Zero;
use serde_json::json;

use crate::algebra::{matrix_unit, AlgebraElement, Monomial};
use crate::error::{Error, Result};
use crate::ideal::{DegreeSlice, SliceKey};
use crate::laurent::laurent_image;
use crate::linalg::{nullspace, SparseVec};
use crate::matrix::to_matrix;
use crate::report::{ClaimEntry, Verdict};
use crate::scalar::{self, Scalar};

/// `{r : deg r <= D, r x^n = 0}`.
pub fn lann_slice(n: u32, max_degree: u32) -> DegreeSlice {
    let unknowns: Vec<SliceKey> = Monomial::up_to_degree(max_degree).map(SliceKey).collect();
    let xn = Monomial::new(n, 0);
    let mut rows: std::collections::BTreeMap<Monomial, SparseVec<SliceKey>> = Default::default();
    for &k in &unknowns {
        rows.entry(k.0.mul(xn))
            .or_default()
            .add_at(k, &scalar::one());
    }
    let rows: Vec<_> = rows.into_values().collect();
    let basis = nullspace(&rows, &unknowns);
    DegreeSlice::from_elements(
        max_degree,
        basis
            .iter()
            .map(|v| AlgebraElement::from_sparse(v, |k| k.0)),
    )
    .expect("kernel lies in the window")
}

/// Window of `span{M_ij : j < n}`; the top terms `x^(i+1) y^(j+1)` are distinct,
/// so a combination has degree `max(i + j + 2)`.
fn matrix_unit_columns(n: u32, max_degree: u32) -> DegreeSlice {
    let mut units = Vec::new();
    for j in 0..n {
        for i in 0..=max_degree {
            if i + j + 2 <= max_degree {
                units.push(matrix_unit(i, j));
            }
        }
    }
    DegreeSlice::from_elements(max_degree, units).expect("degrees checked")
}

pub fn lann_chain_check(n_max: u32, max_degree: u32) -> Result<ClaimEntry> {
    if n_max == 0 {
        return Err(Error::Precondition("n_max must be at least 1".into()));
    }
    let slices: Vec<DegreeSlice> = (0..=n_max).map(|n| lann_slice(n, max_degree)).collect();
    let oracle_ok = slices
        .iter()
        .enumerate()
        .all(|(n, s)| *s == matrix_unit_columns(n as u32, max_degree));
    let idem = AlgebraElement::one() - AlgebraElement::xy(1, 1);
    let idem_in_lann_x = slices[1].contains(&idem);
    let mut steps = Vec::new();
    let mut strict = slices[0].dim() == 0;
    for n in 0..n_max as usize {
        let witness = slices[n + 1].witness_outside(&slices[n]);
        let ok = slices[n].is_subspace_of(&slices[n + 1]) && witness.is_some();
        strict &= ok;
        steps.push(json!({
            "n": n,
            "dim": slices[n].dim(),
            "next_dim": slices[n + 1].dim(),
            "witness": witness.map(|w| w.to_string()),
        }));
    }
    let verdict = if !oracle_ok || !idem_in_lann_x {
        Verdict::Fail
    } else if strict {
        Verdict::Pass
    } else {
        Verdict::Discrepancy
    };
    Ok(ClaimEntry::new(
        "algebra.lann_chain",
        "lann(x) < lann(x^2) < ... is a non-stabilizing chain of left annihilators; (1 - xy)x = 0",
        verdict,
        format!(
            "dims {:?} at D = {max_degree}",
            slices.iter().map(DegreeSlice::dim).collect::<Vec<_>>()
        ),
        json!({
            "max_degree": max_degree,
            "matches_matrix_unit_span": oracle_ok,
            "one_minus_xy_in_lann_x": idem_in_lann_x,
            "steps": steps,
        }),
    ))
}

/// `M_(0,p) r M_(q,0) = coefficient M_(0,0)` with `coefficient != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialWitness {
    pub p: u32,
    pub q: u32,
    pub coefficient: Scalar,
    pub sandwich: AlgebraElement,
    /// `r` itself lies in `F`.
    pub in_f: bool,
}

impl EssentialWitness {
    pub fn replay(&self, r: &AlgebraElement) -> bool {
        let s = matrix_unit(0, self.p).mul(r).mul(&matrix_unit(self.q, 0));
        !self.coefficient.is_zero()
            && s == self.sandwich
            && s == matrix_unit(0, 0).scale(&self.coefficient)
            && self.in_f == laurent_image(r).is_zero()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "p": self.p,
            "q": self.q,
            "coefficient": scalar::format(&self.coefficient),
            "sandwich": self.sandwich.to_string(),
            "in_F": self.in_f,
        })
    }
}

/// Finds a nonzero element of `F` in the two-sided ideal of `r` from the
/// first nonzero entry of its matrix.
pub fn essential_check(r: &AlgebraElement) -> Result<EssentialWitness> {
    let d = r.degree().ok_or(Error::ZeroElement)?;
    let m = to_matrix(r, d as usize + 2)?;
    let (p, q) = m
        .first_nonzero()
        .expect("nonzero element has a nonzero entry");
    let coefficient = m.get(p, q).clone();
    let (p, q) = (p as u32, q as u32);
    let sandwich = matrix_unit(0, p).mul(r).mul(&matrix_unit(q, 0));
    Ok(EssentialWitness {
        p,
        q,
        coefficient,
        sandwich,
        in_f: laurent_image(r).is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_element;

    #[test]
    fn lann_examples() {
        assert_eq!(lann_slice(0, 5).dim(), 0);
        assert!(lann_slice(1, 3).contains(&parse_element("1 - x*y").unwrap()));
        let e = lann_chain_check(4, 8).unwrap();
        assert_eq!(e.verdict, Verdict::Pass, "{}", e.detail);
        assert!(lann_chain_check(0, 8).is_err());
    }

    #[test]
    fn essential_examples() {
        let x = AlgebraElement::x();
        let w = essential_check(&x).unwrap();
        assert_eq!((w.p, w.q), (1, 0));
        assert_eq!(w.sandwich, matrix_unit(0, 0));
        assert!(w.replay(&x));

        let idem = parse_element("1 - x*y").unwrap();
        assert!(essential_check(&idem).unwrap().in_f);

        let w = essential_check(&AlgebraElement::one()).unwrap();
        assert_eq!((w.p, w.q), (0, 0));
        assert_eq!(
            essential_check(&AlgebraElement::zero()),
            Err(Error::ZeroElement)
        );
    }
}
