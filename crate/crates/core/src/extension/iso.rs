//! Exact intertwiner search between two extensions of the same shape.
//!
//! A candidate `f : E_A -> E_B` is linear in a few unknowns:
//! shift `⊕ k_lambda`: `f(e_i) = a e_i`, `f(d) = w ⊕ b d`;
//! `k_mu ⊕ k_lambda`: `f(u) = a u + leak d`, `f(d) = w u + b d`.
//! Intertwining `x` and `y` on a basis gives a homogeneous linear system. On
//! the shift module the `x`-equation on `d` reads `(lambda - α(x)) w = known`,
//! so `w` vanishes past the supports of both `δ(x)`; one extra index is kept.

use num_traits::Zero;
use serde_json::{json, Value};

use super::{validate_delta, ExtSpec, ExtVector};
use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, solve, SparseVec};
use crate::module::{is_module_map, BasedModule, ModVector, SimpleDesc};
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwiner {
    pub a: Scalar,
    pub b: Scalar,
    /// Component of `f(u)` along `d`; always zero when `U` is the shift module.
    pub leak: Scalar,
    pub w: ModVector,
}

impl Intertwiner {
    pub fn identity(spec: &ExtSpec) -> Self {
        Self {
            a: scalar::one(),
            b: scalar::one(),
            leak: Scalar::zero(),
            w: spec.u().zero(),
        }
    }

    pub fn apply(&self, v: &ExtVector) -> Result<ExtVector> {
        let c = v.v.coord(0);
        let u = v.u.scale(&self.a).add(&self.w.scale(&c))?;
        let mut d = &self.b * &c;
        if let ModVector::Fin(uc) = &v.u {
            d += &self.leak * uc;
        } else if !self.leak.is_zero() {
            return Err(Error::ShapeMismatch(
                "leak needs a one-dimensional U".into(),
            ));
        }
        Ok(ExtVector::new(u, ModVector::Fin(d)))
    }

    /// Block triangular on the shift module, a 2x2 matrix otherwise.
    pub fn is_bijective(&self) -> bool {
        match &self.w {
            ModVector::Inf(_) => self.leak.is_zero() && !self.a.is_zero() && !self.b.is_zero(),
            ModVector::Fin(w) => !(&self.a * &self.b - &self.leak * w).is_zero(),
        }
    }

    /// Checks bijectivity and intertwining of `x`, `y` on every basis vector
    /// of `E_A` that meets a nonzero part of either spec.
    pub fn verify(&self, spec_a: &ExtSpec, spec_b: &ExtSpec) -> Result<bool> {
        check_shapes(spec_a, spec_b)?;
        if !self.is_bijective() {
            return Ok(false);
        }
        let bound = match spec_a.u() {
            SimpleDesc::Fin(_) => 1,
            SimpleDesc::InfShift => {
                let w_end = self.w.max_index().unwrap_or(0);
                spec_a
                    .support_bound()
                    .max(spec_b.support_bound())
                    .max(w_end)
                    + 4
            }
        };
        let f = |n: usize| {
            let b = spec_a.basis(n).expect("basis index in range");
            self.apply(&b).expect("shapes checked")
        };
        Ok(is_module_map(&f, spec_a, spec_b, bound)?.holds())
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &Intertwiner) -> Result<Intertwiner> {
        let w = self.w.scale(&g.a).add(&g.w.scale(&self.b))?;
        let (w_self, w_g) = (fin_coord(&self.w), fin_coord(&g.w));
        Ok(Intertwiner {
            a: &g.a * &self.a + w_g * &self.leak,
            b: &g.b * &self.b + &g.leak * w_self,
            leak: &g.leak * &self.a + &g.b * &self.leak,
            w,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": scalar::format(&self.a),
            "b": scalar::format(&self.b),
            "leak": scalar::format(&self.leak),
            "w": self.w,
        })
    }

    fn scaled(&self, c: &Scalar) -> Self {
        Self {
            a: &self.a * c,
            b: &self.b * c,
            leak: &self.leak * c,
            w: self.w.scale(c),
        }
    }
}

fn fin_coord(v: &ModVector) -> Scalar {
    match v {
        ModVector::Fin(c) => c.clone(),
        ModVector::Inf(_) => Scalar::zero(),
    }
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoResult {
    Iso(Intertwiner),
    NoIso(String),
}

impl IsoResult {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoResult::Iso(_))
    }

    pub fn intertwiner(&self) -> Option<&Intertwiner> {
        match self {
            IsoResult::Iso(f) => Some(f),
            IsoResult::NoIso(_) => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            IsoResult::Iso(f) => json!({ "verdict": "iso", "intertwiner": f.to_json() }),
            IsoResult::NoIso(reason) => json!({ "verdict": "no_iso", "reason": reason }),
        }
    }
}

fn check_shapes(a: &ExtSpec, b: &ExtSpec) -> Result<()> {
    let shape = |s: &ExtSpec| (s.u().is_finite(), s.v().is_finite());
    if !a.v().is_finite() || !b.v().is_finite() {
        return Err(Error::ShapeMismatch(
            "isomorphism search needs V one-dimensional in both specs".into(),
        ));
    }
    if shape(a) != shape(b) {
        return Err(Error::ShapeMismatch(format!(
            "cannot compare {} by {} with {} by {}",
            a.u(),
            a.v(),
            b.u(),
            b.v()
        )));
    }
    Ok(())
}

/// One intertwiner per unknown, with that unknown set to 1.
fn unknown_basis(spec_a: &ExtSpec, spec_b: &ExtSpec) -> Vec<Intertwiner> {
    let zero = Intertwiner {
        a: Scalar::zero(),
        b: Scalar::zero(),
        leak: Scalar::zero(),
        w: spec_a.u().zero(),
    };
    let mut out = vec![
        Intertwiner {
            a: scalar::one(),
            ..zero.clone()
        },
        Intertwiner {
            b: scalar::one(),
            ..zero.clone()
        },
    ];
    match spec_a.u() {
        SimpleDesc::Fin(_) => {
            out.push(Intertwiner {
                leak: scalar::one(),
                ..zero.clone()
            });
            out.push(Intertwiner {
                w: ModVector::Fin(scalar::one()),
                ..zero
            });
        }
        SimpleDesc::InfShift => {
            let w_len = spec_a.support_bound().max(spec_b.support_bound()) + 2;
            for k in 0..w_len {
                out.push(Intertwiner {
                    w: ModVector::shift_basis(k),
                    ..zero.clone()
                });
            }
        }
    }
    out
}

const A: usize = 0;
const B: usize = 1;
const LEAK: usize = 2;

fn combine(basis: &[Intertwiner], coeffs: &SparseVec<usize>) -> Result<Intertwiner> {
    let mut out = basis[0].scaled(&Scalar::zero());
    for (k, c) in coeffs.iter() {
        let t = basis[*k].scaled(c);
        out = Intertwiner {
            a: &out.a + &t.a,
            b: &out.b + &t.b,
            leak: &out.leak + &t.leak,
            w: out.w.add(&t.w)?,
        };
    }
    Ok(out)
}

/// Rows of the intertwining system, one per coordinate of each residual
/// `f(g β) - g f(β)`.
fn intertwining_rows(
    spec_a: &ExtSpec,
    spec_b: &ExtSpec,
    basis: &[Intertwiner],
) -> Result<Vec<SparseVec<usize>>> {
    let n_basis = match spec_a.u() {
        SimpleDesc::Fin(_) => 2,
        SimpleDesc::InfShift => basis.len() + 2,
    };
    let mut rows = Vec::new();
    for n in 0..n_basis {
        let beta = spec_a.basis(n).expect("basis index in range");
        for g in [AlgebraElement::x(), AlgebraElement::y()] {
            let g_beta = spec_a.act(&g, &beta)?;
            let mut by_coord: std::collections::BTreeMap<usize, SparseVec<usize>> =
                Default::default();
            for (k, f) in basis.iter().enumerate() {
                let lhs = f.apply(&g_beta)?;
                let rhs = spec_b.act(&g, &f.apply(&beta)?)?;
                let residual = lhs.add(&rhs.scale(&-scalar::one()))?;
                for (coord, c) in spec_b.coordinates(&residual) {
                    by_coord.entry(coord).or_default().add_at(k, &c);
                }
            }
            rows.extend(by_coord.into_values().filter(|r| !r.is_zero()));
        }
    }
    Ok(rows)
}

fn search(spec_a: &ExtSpec, spec_b: &ExtSpec, preserve_u: bool) -> Result<IsoResult> {
    check_shapes(spec_a, spec_b)?;
    for s in [spec_a, spec_b] {
        validate_delta(s).map_err(|e| Error::InvalidSpec(e.to_string()))?;
    }
    let basis = unknown_basis(spec_a, spec_b);
    let mut rows = intertwining_rows(spec_a, spec_b, &basis)?;
    if preserve_u && spec_a.u().is_finite() {
        rows.push(SparseVec::from_entries([(LEAK, scalar::one())]));
    }

    // First try the normalized form a = b = 1.
    let mut pinned = rows.clone();
    let mut rhs = vec![Scalar::zero(); rows.len()];
    pinned.push(SparseVec::from_entries([(A, scalar::one())]));
    pinned.push(SparseVec::from_entries([(B, scalar::one())]));
    rhs.extend([scalar::one(), scalar::one()]);
    if let Some(sol) = solve(&pinned, &rhs) {
        let f = combine(&basis, &sol)?;
        if f.is_bijective() {
            return Ok(IsoResult::Iso(f));
        }
    }

    let unknowns: Vec<usize> = (0..basis.len()).collect();
    let kernel = nullspace(&rows, &unknowns);
    if kernel.is_empty() {
        return Ok(IsoResult::NoIso("no nonzero module map".into()));
    }
    // The bijectivity test is a polynomial of degree <= 2 in the kernel
    // coordinates, so it cannot vanish on all of {0,1,2}^dim unless it is zero.
    let dim = kernel.len();
    let points = 3usize.checked_pow(dim as u32).unwrap_or(usize::MAX);
    for p in 1..points {
        let mut coeffs = SparseVec::new();
        let mut rest = p;
        for v in &kernel {
            let c = scalar::int((rest % 3) as i64);
            rest /= 3;
            coeffs.axpy(&c, v);
        }
        let f = combine(&basis, &coeffs)?;
        if f.is_bijective() {
            let f = if f.a.is_zero() {
                f
            } else {
                f.scaled(&f.a.recip())
            };
            return Ok(IsoResult::Iso(f));
        }
    }
    let reason = if spec_a.u() != spec_b.u() || spec_a.v() != spec_b.v() {
        "composition factors differ"
    } else {
        "every module map is singular"
    };
    Ok(IsoResult::NoIso(reason.into()))
}

/// Decides `E_A ≅ E_B` as modules.
pub fn iso_test(spec_a: &ExtSpec, spec_b: &ExtSpec) -> Result<IsoResult> {
    let r = search(spec_a, spec_b, false)?;
    debug_assert!(r
        .intertwiner()
        .is_none_or(|f| f.verify(spec_a, spec_b).unwrap_or(false)));
    Ok(r)
}

/// Decides equivalence of the two sequences: an isomorphism carrying `U` onto `U'`.
pub fn equivalence_test(spec_a: &ExtSpec, spec_b: &ExtSpec) -> Result<bool> {
    match search(spec_a, spec_b, true)? {
        IsoResult::NoIso(_) => Ok(false),
        IsoResult::Iso(f) => {
            let keeps_u = match spec_a.u().basis(0) {
                Some(u0) => f.apply(&spec_a.from_u(u0))?.v.is_zero(),
                None => false,
            };
            Ok(keeps_u && f.verify(spec_a, spec_b)?)
        }
    }
}
