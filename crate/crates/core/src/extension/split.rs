//! Exact split testing.
//!
//! `V` infinite: `a = b_0 - x δ(y) b_0` is killed by `y`, and `b_n -> x^n a`
//! is a section.
//! `V = k_lambda`: a section is `d -> w ⊕ d` with `(lambda - α(x)) w = δ(x)(d)`.
//! On the shift module this reads `lambda w_i - w_(i-1) = δ(x)_i`, which is
//! triangular; beyond the support `N` of `δ(x)` it forces `w_i = w_(i-1)/lambda`,
//! so a finite-support solution exists iff the recursion ends with `w_N = 0`.

use num_traits::Zero;
use serde_json::{json, Value};

use super::{validate_delta, ExtSpec, ExtVector};
use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::linalg::{solve, SparseVec};
use crate::module::{is_module_map, ModVector, SimpleDesc};
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Section {
    /// `s(b_n) = x^n · generator`.
    Generated { generator: ExtVector },
    /// `s(d) = image`.
    Image { image: ExtVector },
}

impl Section {
    pub fn image_of(&self, spec: &ExtSpec, n: usize) -> Result<ExtVector> {
        match self {
            Section::Generated { generator } => {
                spec.act(&AlgebraElement::xy(n as u32, 0), generator)
            }
            Section::Image { image } if n == 0 => Ok(image.clone()),
            Section::Image { .. } => Err(Error::ShapeMismatch(format!("k_lambda has no b_{n}"))),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Section::Generated { generator } => {
                json!({ "kind": "generated", "generator": generator })
            }
            Section::Image { image } => json!({ "kind": "image", "image": image }),
        }
    }
}

/// Equations `rows · w = rhs` over unknown coordinates `w_0, w_1, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub rows: Vec<SparseVec<usize>>,
    pub rhs: Vec<Scalar>,
}

impl LinearSystem {
    fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| {
                let coeffs: serde_json::Map<String, Value> = row
                    .iter()
                    .map(|(k, c)| (format!("w{k}"), Value::String(scalar::format(c))))
                    .collect();
                json!({ "coeffs": coeffs, "rhs": scalar::format(b) })
            })
            .collect();
        Value::Array(rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonsplitCertificate {
    /// Section equations; they have no solution.
    pub system: LinearSystem,
    /// Final value of the triangular recursion (`w_N` for the shift module,
    /// `δ(x)` itself for `k_mu`); nonzero.
    pub residue: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitResult {
    Split(Section),
    Nonsplit(NonsplitCertificate),
}

impl SplitResult {
    pub fn is_split(&self) -> bool {
        matches!(self, SplitResult::Split(_))
    }

    pub fn verdict(&self) -> &'static str {
        if self.is_split() {
            "split"
        } else {
            "nonsplit"
        }
    }

    /// Re-checks the certificate against `spec` without reusing the oracle:
    /// a section must be a module map projecting to the identity on `V`;
    /// a nonsplit system must match the section equations and be inconsistent
    /// under independent elimination.
    pub fn replay(&self, spec: &ExtSpec) -> bool {
        match self {
            SplitResult::Split(section) => replay_section(spec, section).unwrap_or(false),
            SplitResult::Nonsplit(cert) => {
                let Ok(expected) = section_system(spec) else {
                    return false;
                };
                !cert.residue.is_zero()
                    && expected == cert.system
                    && solve(&cert.system.rows, &cert.system.rhs).is_none()
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            SplitResult::Split(section) => {
                json!({ "verdict": "split", "section": section.to_json() })
            }
            SplitResult::Nonsplit(cert) => json!({
                "verdict": "nonsplit",
                "residue": scalar::format(&cert.residue),
                "system": cert.system.to_json(),
            }),
        }
    }
}

fn replay_section(spec: &ExtSpec, section: &Section) -> Result<bool> {
    let bound = match spec.v() {
        SimpleDesc::Fin(_) => 0,
        SimpleDesc::InfShift => spec.support_bound() + 3,
    };
    if let Section::Generated { generator } = section {
        if !spec.act(&AlgebraElement::y(), generator)?.is_zero() {
            return Ok(false);
        }
    }
    for n in 0..=bound {
        let img = section.image_of(spec, n)?;
        if Some(img.v) != spec.v().basis(n) {
            return Ok(false);
        }
    }
    let s = |n: usize| section.image_of(spec, n).expect("index checked above");
    Ok(is_module_map(&s, spec.v(), spec, bound)?.holds())
}

/// Section equations `(lambda - α(x)) w = δ(x)(d)` for `V = k_lambda`.
///
/// On the shift module a finite solution has support at most `N` (the last
/// index of `δ(x)(d)`): the component `N + 1` equation reads `-w_N = 0` and
/// every later one propagates that. Unknowns are `w_0..=w_N`, equations are
/// components `0..=N+1`.
pub fn section_system(spec: &ExtSpec) -> Result<LinearSystem> {
    let SimpleDesc::Fin(lambda) = spec.v() else {
        return Err(Error::ShapeMismatch(
            "section equations need V one-dimensional".into(),
        ));
    };
    let dx = spec.delta().delta_x.column(0);
    Ok(match spec.u() {
        SimpleDesc::Fin(mu) => LinearSystem {
            rows: vec![SparseVec::from_entries([(0, lambda - mu)])],
            rhs: vec![dx.coord(0)],
        },
        SimpleDesc::InfShift => {
            let n = dx.max_index().unwrap_or(0);
            let mut rows = Vec::with_capacity(n + 2);
            let mut rhs = Vec::with_capacity(n + 2);
            for i in 0..=n + 1 {
                let mut row = SparseVec::new();
                if i <= n {
                    row.add_at(i, lambda);
                }
                if i >= 1 {
                    row.add_at(i - 1, &-scalar::one());
                }
                rows.push(row);
                rhs.push(dx.coord(i));
            }
            LinearSystem { rows, rhs }
        }
    })
}

pub fn split_test(spec: &ExtSpec) -> Result<SplitResult> {
    validate_delta(spec).map_err(|e| Error::InvalidSpec(e.to_string()))?;
    match spec.v() {
        SimpleDesc::InfShift => {
            let b0 = ModVector::shift_basis(0);
            let dy_b0 = spec.delta().delta_y.apply(&b0)?;
            let x_dy = spec.u().act(&AlgebraElement::x(), &dy_b0)?;
            let generator = ExtVector::new(x_dy.neg(), b0);
            Ok(SplitResult::Split(Section::Generated { generator }))
        }
        SimpleDesc::Fin(lambda) => {
            let dx = spec.delta().delta_x.column(0);
            let d = ModVector::Fin(scalar::one());
            match spec.u() {
                SimpleDesc::Fin(mu) => {
                    let target = dx.coord(0);
                    if lambda != mu {
                        let w = ModVector::Fin(target / (lambda - mu));
                        Ok(SplitResult::Split(Section::Image {
                            image: ExtVector::new(w, d),
                        }))
                    } else if target.is_zero() {
                        Ok(SplitResult::Split(Section::Image {
                            image: spec.from_v(d),
                        }))
                    } else {
                        Ok(SplitResult::Nonsplit(NonsplitCertificate {
                            system: section_system(spec)?,
                            residue: target,
                        }))
                    }
                }
                SimpleDesc::InfShift => {
                    let n = dx.max_index().unwrap_or(0);
                    let mut w = Vec::with_capacity(n + 1);
                    let mut prev = Scalar::zero();
                    for i in 0..=n {
                        let wi = (&prev + dx.coord(i)) / lambda;
                        w.push(wi.clone());
                        prev = wi;
                    }
                    if prev.is_zero() {
                        let w = ModVector::from_coords(w.into_iter().enumerate());
                        Ok(SplitResult::Split(Section::Image {
                            image: ExtVector::new(w, d),
                        }))
                    } else {
                        Ok(SplitResult::Nonsplit(NonsplitCertificate {
                            system: section_system(spec)?,
                            residue: prev,
                        }))
                    }
                }
            }
        }
    }
}
