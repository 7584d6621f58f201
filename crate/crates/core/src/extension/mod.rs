//! Extensions `0 -> U -> E -> V -> 0` of simple modules.
//!
//! As a vector space `E = U ⊕ V`, and `r` acts by the block matrix
//! `[[α(r), δ(r)], [0, β(r)]]` where `α`, `β` are the actions on `U`, `V`.
//! Since `R` is free on `x`, `y` modulo `yx = 1`, an extension is any pair
//! `δ(x), δ(y) : V -> U` for which `ρ(y)ρ(x) = id`, i.e.
//! `α(y)δ(x) + δ(y)β(x) = 0`.

mod classify;
mod iso;
mod split;

pub use classify::{classify, Case, Classification, Comparison};
pub use iso::{equivalence_test, iso_test, Intertwiner, IsoResult};
pub use split::{split_test, LinearSystem, NonsplitCertificate, Section, SplitResult};

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::module::{BasedModule, LeftModule, LinMap, ModVector, SimpleDesc};
use crate::scalar::{self, Scalar};

/// The off-diagonal data `δ(x), δ(y) ∈ Hom_k(V, U)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaMap {
    pub delta_x: LinMap,
    pub delta_y: LinMap,
}

impl DeltaMap {
    pub fn zero(u: &SimpleDesc, v: &SimpleDesc) -> Self {
        Self {
            delta_x: LinMap::zero(v.clone(), u.clone()),
            delta_y: LinMap::zero(v.clone(), u.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.delta_x.is_zero() && self.delta_y.is_zero()
    }
}

/// Vector of `E = U ⊕ V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtVector {
    pub u: ModVector,
    pub v: ModVector,
}

impl ExtVector {
    pub fn new(u: ModVector, v: ModVector) -> Self {
        Self { u, v }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        Ok(Self {
            u: self.u.add(&rhs.u)?,
            v: self.v.add(&rhs.v)?,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            u: self.u.scale(c),
            v: self.v.scale(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
}

impl std::fmt::Display for ExtVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}) ⊕ ({})", self.u, self.v)
    }
}

/// A candidate extension `E_δ` of `U` by `V`. Construction does not check
/// compatibility; see [`validate_delta`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SpecJson", into = "SpecJsonOut")]
pub struct ExtSpec {
    u: SimpleDesc,
    v: SimpleDesc,
    delta: DeltaMap,
}

impl ExtSpec {
    pub fn new(u: SimpleDesc, v: SimpleDesc, delta: DeltaMap) -> Result<Self> {
        for (name, map) in [("delta_x", &delta.delta_x), ("delta_y", &delta.delta_y)] {
            if map.source() != &v || map.target() != &u {
                return Err(Error::ShapeMismatch(format!("{name} must map {v} to {u}")));
            }
        }
        Ok(Self { u, v, delta })
    }

    /// Spec with `δ(y)` completed from `δ(x)` (and the free part when `V` is infinite).
    pub fn completed(
        u: SimpleDesc,
        v: SimpleDesc,
        delta_x: LinMap,
        free_part: Option<ModVector>,
    ) -> Result<Self> {
        let delta = complete_delta(&u, &v, &delta_x, free_part)?;
        Self::new(u, v, delta)
    }

    /// `U` shift module or `k_mu`, `V = k_lambda`, `δ(x)(d) = image`.
    pub fn onto_fin(u: SimpleDesc, lambda: Scalar, image: ModVector) -> Result<Self> {
        let v = SimpleDesc::fin(lambda)?;
        let dx = LinMap::from_image(v.clone(), u.clone(), image)?;
        Self::completed(u, v, dx, None)
    }

    pub fn split_sum(u: SimpleDesc, v: SimpleDesc) -> Self {
        let delta = DeltaMap::zero(&u, &v);
        Self { u, v, delta }
    }

    pub fn u(&self) -> &SimpleDesc {
        &self.u
    }

    pub fn v(&self) -> &SimpleDesc {
        &self.v
    }

    pub fn delta(&self) -> &DeltaMap {
        &self.delta
    }

    pub fn check(&self, w: &ExtVector) -> Result<()> {
        self.u.check(&w.u)?;
        self.v.check(&w.v)
    }

    pub fn zero(&self) -> ExtVector {
        ExtVector::new(self.u.zero(), self.v.zero())
    }

    /// Inclusion of `U`.
    pub fn from_u(&self, u: ModVector) -> ExtVector {
        ExtVector::new(u, self.v.zero())
    }

    /// The vector `0 ⊕ v`.
    pub fn from_v(&self, v: ModVector) -> ExtVector {
        ExtVector::new(self.u.zero(), v)
    }

    pub fn apply_x(&self, w: &ExtVector) -> Result<ExtVector> {
        let x = AlgebraElement::x();
        let u = self
            .u
            .act(&x, &w.u)?
            .add(&self.delta.delta_x.apply(&w.v)?)?;
        Ok(ExtVector::new(u, self.v.act(&x, &w.v)?))
    }

    pub fn apply_y(&self, w: &ExtVector) -> Result<ExtVector> {
        let y = AlgebraElement::y();
        let u = self
            .u
            .act(&y, &w.u)?
            .add(&self.delta.delta_y.apply(&w.v)?)?;
        Ok(ExtVector::new(u, self.v.act(&y, &w.v)?))
    }

    /// `ρ_δ(a) w`, with `x^i y^j` acting as `ρ(x)^i ρ(y)^j`.
    pub fn act(&self, a: &AlgebraElement, w: &ExtVector) -> Result<ExtVector> {
        self.check(w)?;
        let mut out = self.zero();
        for (m, c) in a.terms() {
            let mut t = w.clone();
            for _ in 0..m.j {
                t = self.apply_y(&t)?;
            }
            for _ in 0..m.i {
                t = self.apply_x(&t)?;
            }
            out = out.add(&t.scale(c))?;
        }
        Ok(out)
    }

    /// Largest basis index touched by `δ` on either side, if any.
    pub(crate) fn support_bound(&self) -> usize {
        let mut bound = 0;
        for map in [&self.delta.delta_x, &self.delta.delta_y] {
            if let Some(n) = map.support_end() {
                bound = bound.max(n);
            }
            for (_, col) in map.columns() {
                bound = bound.max(col.max_index().unwrap_or(0));
            }
        }
        bound
    }
}

impl LeftModule for ExtSpec {
    type Elem = ExtVector;

    fn zero(&self) -> ExtVector {
        ExtSpec::zero(self)
    }

    fn add(&self, a: &ExtVector, b: &ExtVector) -> Result<ExtVector> {
        self.check(a)?;
        a.add(b)
    }

    fn scale(&self, c: &Scalar, v: &ExtVector) -> ExtVector {
        v.scale(c)
    }

    fn act(&self, a: &AlgebraElement, v: &ExtVector) -> Result<ExtVector> {
        ExtSpec::act(self, a, v)
    }
}

/// Basis of `U ⊕ V`, interleaved so both halves stay reachable:
/// `k_mu ⊕ k_lambda`: `u, d`; shift `⊕ k_lambda`: `d, e_0, e_1, ...`;
/// `k_mu ⊕` shift: `u, b_0, b_1, ...`; shift `⊕` shift: `e_0, b_0, e_1, b_1, ...`.
impl BasedModule for ExtSpec {
    fn basis(&self, n: usize) -> Option<ExtVector> {
        let (u, v) = (&self.u, &self.v);
        match (u.is_finite(), v.is_finite()) {
            (true, true) => match n {
                0 => Some(self.from_u(u.basis(0)?)),
                1 => Some(self.from_v(v.basis(0)?)),
                _ => None,
            },
            (false, true) => match n {
                0 => Some(self.from_v(v.basis(0)?)),
                n => Some(self.from_u(u.basis(n - 1)?)),
            },
            (true, false) => match n {
                0 => Some(self.from_u(u.basis(0)?)),
                n => Some(self.from_v(v.basis(n - 1)?)),
            },
            (false, false) if n.is_multiple_of(2) => Some(self.from_u(u.basis(n / 2)?)),
            (false, false) => Some(self.from_v(v.basis(n / 2)?)),
        }
    }

    fn coordinates(&self, w: &ExtVector) -> Vec<(usize, Scalar)> {
        let (uf, vf) = (self.u.is_finite(), self.v.is_finite());
        let ui = |k: usize| match (uf, vf) {
            (true, _) => 0,
            (false, true) => k + 1,
            (false, false) => 2 * k,
        };
        let vi = |k: usize| match (uf, vf) {
            (_, true) => usize::from(uf),
            (true, false) => k + 1,
            (false, false) => 2 * k + 1,
        };
        let mut out: Vec<(usize, Scalar)> =
            w.u.coords().into_iter().map(|(k, c)| (ui(k), c)).collect();
        out.extend(w.v.coords().into_iter().map(|(k, c)| (vi(k), c)));
        out.sort_by_key(|(n, _)| *n);
        out
    }
}

/// Checks `α(y)δ(x)(v) + δ(y)(β(x)v) = 0` on every basis vector of `V` where
/// either term can be nonzero. Past the support of both maps every term vanishes.
pub fn validate_delta(spec: &ExtSpec) -> Result<()> {
    let (u, v, d) = (&spec.u, &spec.v, &spec.delta);
    let last = match v {
        SimpleDesc::Fin(_) => 0,
        SimpleDesc::InfShift => {
            let ends = [d.delta_x.support_end(), d.delta_y.support_end()];
            ends.iter().flatten().max().map(|n| n + 1).unwrap_or(0)
        }
    };
    let (x, y) = (AlgebraElement::x(), AlgebraElement::y());
    for n in 0..=last {
        let b = v.basis(n).expect("index within V");
        let lhs = u.act(&y, &d.delta_x.apply(&b)?)?;
        let rhs = d.delta_y.apply(&v.act(&x, &b)?)?;
        let residual = lhs.add(&rhs)?;
        if !residual.is_zero() {
            return Err(Error::IncompatibleDelta { index: n, residual });
        }
    }
    Ok(())
}

/// Solves the compatibility condition for `δ(y)`.
///
/// `V = k_lambda`: `δ(y)(d) = -lambda^-1 α(y) δ(x)(d)`, so on the shift module
/// `δ(y)_i = -lambda^-1 δ(x)_(i+1)` for every `i >= 0`, and on `U = k_mu`
/// `δ(y) = -(mu lambda)^-1 δ(x)`.
/// `V` shift module: `δ(y)(b_(n+1)) = -α(y) δ(x)(b_n)`; `δ(y)(b_0)` is free and
/// taken from `free_part` (zero when absent).
pub fn complete_delta(
    u: &SimpleDesc,
    v: &SimpleDesc,
    delta_x: &LinMap,
    free_part: Option<ModVector>,
) -> Result<DeltaMap> {
    if delta_x.source() != v || delta_x.target() != u {
        return Err(Error::ShapeMismatch(format!("delta_x must map {v} to {u}")));
    }
    let y = AlgebraElement::y();
    let mut delta_y = LinMap::zero(v.clone(), u.clone());
    match v {
        SimpleDesc::Fin(lambda) => {
            if free_part.is_some() {
                return Err(Error::Precondition(
                    "a free part only exists when V is infinite-dimensional".into(),
                ));
            }
            let image = u.act(&y, &delta_x.column(0))?.scale(&-lambda.recip());
            delta_y.set_column(0, image)?;
        }
        SimpleDesc::InfShift => {
            if let Some(f) = free_part {
                delta_y.set_column(0, f)?;
            }
            for (n, col) in delta_x.columns() {
                delta_y.set_column(n + 1, u.act(&y, col)?.scale(&-scalar::one()))?;
            }
        }
    }
    Ok(DeltaMap {
        delta_x: delta_x.clone(),
        delta_y,
    })
}

// JSON: {"U":…, "V":…, "delta_x":…, "delta_y":… (optional), "free_part":… (optional)}.

#[derive(Deserialize)]
#[serde(untagged)]
enum MapJson {
    /// Image of the first basis vector (`d` for `k_lambda`).
    Image(ModVector),
    Columns {
        columns: std::collections::BTreeMap<String, ModVector>,
    },
}

impl MapJson {
    fn into_map(self, v: &SimpleDesc, u: &SimpleDesc) -> std::result::Result<LinMap, String> {
        let cols: Vec<(usize, ModVector)> = match self {
            MapJson::Image(img) => vec![(0, img)],
            MapJson::Columns { columns } => columns
                .into_iter()
                .map(|(k, m)| {
                    k.parse()
                        .map(|n| (n, m))
                        .map_err(|_| format!("bad column `{k}`"))
                })
                .collect::<std::result::Result<_, _>>()?,
        };
        LinMap::new(v.clone(), u.clone(), cols).map_err(|e| e.to_string())
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum MapJsonOut {
    Image(ModVector),
    Columns {
        columns: std::collections::BTreeMap<usize, ModVector>,
    },
}

impl From<&LinMap> for MapJsonOut {
    fn from(map: &LinMap) -> Self {
        if map.source().is_finite() {
            MapJsonOut::Image(map.column(0))
        } else {
            MapJsonOut::Columns {
                columns: map.columns().map(|(n, c)| (*n, c.clone())).collect(),
            }
        }
    }
}

#[derive(Deserialize)]
struct SpecJson {
    #[serde(rename = "U")]
    u: SimpleDesc,
    #[serde(rename = "V")]
    v: SimpleDesc,
    delta_x: MapJson,
    #[serde(default)]
    delta_y: Option<MapJson>,
    #[serde(default)]
    free_part: Option<ModVector>,
}

#[derive(Serialize)]
struct SpecJsonOut {
    #[serde(rename = "U")]
    u: SimpleDesc,
    #[serde(rename = "V")]
    v: SimpleDesc,
    delta_x: MapJsonOut,
    delta_y: MapJsonOut,
}

impl TryFrom<SpecJson> for ExtSpec {
    type Error = String;
    fn try_from(s: SpecJson) -> std::result::Result<Self, String> {
        let dx = s.delta_x.into_map(&s.v, &s.u)?;
        let spec = match s.delta_y {
            Some(dy) => {
                if s.free_part.is_some() {
                    return Err("give either delta_y or free_part, not both".into());
                }
                let dy = dy.into_map(&s.v, &s.u)?;
                ExtSpec::new(
                    s.u,
                    s.v,
                    DeltaMap {
                        delta_x: dx,
                        delta_y: dy,
                    },
                )
            }
            None => ExtSpec::completed(s.u, s.v, dx, s.free_part),
        };
        spec.map_err(|e| e.to_string())
    }
}

impl From<ExtSpec> for SpecJsonOut {
    fn from(s: ExtSpec) -> Self {
        SpecJsonOut {
            delta_x: (&s.delta.delta_x).into(),
            delta_y: (&s.delta.delta_y).into(),
            u: s.u,
            v: s.v,
        }
    }
}
