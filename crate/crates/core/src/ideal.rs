//! Two-sided ideals seen through finite degree windows.
//!
//! A [`DegreeSlice`] is `I ∩ R_{<=D}` for an ideal `I`, stored as a fully
//! reduced echelon basis whose pivots are the highest-degree monomials. The
//! slice of a generated ideal is approximated from below by the span of
//! `m1 g m2` with `deg m1 + deg g + deg m2 <= D + slack`; rows whose pivot
//! lies in the window then span exactly the window part of that span.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::algebra::{AlgebraElement, Monomial};
use crate::error::{Error, Result};
use crate::laurent::{laurent_image, Poly};
use crate::linalg::{nullspace, Echelon, SparseVec};
use crate::module::SimpleDesc;
use crate::scalar;

/// Column key putting higher-degree monomials first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SliceKey(pub Monomial);

impl Ord for SliceKey {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.graded_index().cmp(&self.0.graded_index())
    }
}

impl PartialOrd for SliceKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn keyed(a: &AlgebraElement) -> SparseVec<SliceKey> {
    SparseVec::from_entries(a.terms().map(|(m, c)| (SliceKey(*m), c.clone())))
}

fn unkeyed(v: &SparseVec<SliceKey>) -> AlgebraElement {
    AlgebraElement::from_sparse(v, |k| k.0)
}

/// Generators of a nonzero two-sided ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealGens {
    gens: Vec<AlgebraElement>,
}

impl IdealGens {
    pub fn new(gens: Vec<AlgebraElement>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Precondition(
                "an ideal needs at least one generator".into(),
            ));
        }
        if gens.iter().any(AlgebraElement::is_zero) {
            return Err(Error::Precondition("generators must be nonzero".into()));
        }
        Ok(Self { gens })
    }

    /// `<1 - xy>`
    pub fn f() -> Self {
        Self {
            gens: vec![AlgebraElement::one() - AlgebraElement::xy(1, 1)],
        }
    }

    /// `<1 - xy, x - lambda>`
    pub fn p(lambda: &scalar::Scalar) -> Self {
        let x_minus = AlgebraElement::x() - AlgebraElement::scalar(lambda.clone());
        Self {
            gens: vec![AlgebraElement::one() - AlgebraElement::xy(1, 1), x_minus],
        }
    }

    pub fn elements(&self) -> &[AlgebraElement] {
        &self.gens
    }
}

impl fmt::Display for IdealGens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// Window `I ∩ R_{<=D}` of a subspace of `R`.
#[derive(Clone, Debug)]
pub struct DegreeSlice {
    max_degree: u32,
    slack: u32,
    space: Echelon<SliceKey>,
}

/// Equality ignores the slack: two slices are equal iff their windows and
/// canonical bases agree.
impl PartialEq for DegreeSlice {
    fn eq(&self, other: &Self) -> bool {
        self.max_degree == other.max_degree && self.space.rows().eq(other.space.rows())
    }
}

impl Eq for DegreeSlice {}

impl DegreeSlice {
    fn from_space(max_degree: u32, slack: u32, space: Echelon<SliceKey>) -> Self {
        Self {
            max_degree,
            slack,
            space,
        }
    }

    pub fn zero(max_degree: u32) -> Self {
        Self::from_space(max_degree, 0, Echelon::new())
    }

    pub fn from_elements<I: IntoIterator<Item = AlgebraElement>>(
        max_degree: u32,
        it: I,
    ) -> Result<Self> {
        let mut space = Echelon::new();
        for a in it {
            if a.degree().is_some_and(|d| d > max_degree) {
                return Err(Error::Precondition(format!(
                    "{a} lies outside the degree-{max_degree} window"
                )));
            }
            space.insert(keyed(&a));
        }
        Ok(Self::from_space(max_degree, 0, space))
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn slack(&self) -> u32 {
        self.slack
    }

    pub fn dim(&self) -> usize {
        self.space.rank()
    }

    pub fn basis(&self) -> Vec<AlgebraElement> {
        self.space.rows().map(unkeyed).collect()
    }

    pub fn contains(&self, a: &AlgebraElement) -> bool {
        a.degree().is_none_or(|d| d <= self.max_degree) && self.space.contains(&keyed(a))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.space.is_subspace_of(&other.space)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        same_window(self, other)?;
        let slack = self.slack.max(other.slack);
        Ok(Self::from_space(
            self.max_degree,
            slack,
            self.space.intersect(&other.space),
        ))
    }

    /// First basis vector of `self` outside `other`.
    pub fn witness_outside(&self, other: &Self) -> Option<AlgebraElement> {
        self.space
            .rows()
            .find(|r| !other.space.contains(r))
            .map(unkeyed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_degree": self.max_degree,
            "slack": self.slack,
            "dim": self.dim(),
            "basis": self.basis().iter().map(ToString::to_string).collect::<Vec<_>>(),
        })
    }
}

fn same_window(a: &DegreeSlice, b: &DegreeSlice) -> Result<()> {
    if a.max_degree != b.max_degree {
        return Err(Error::MismatchedWindows(a.max_degree, b.max_degree));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SliceOrder {
    Equal,
    Less,
    Greater,
    Incomparable,
}

impl fmt::Display for SliceOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SliceOrder::Equal => "equal",
            SliceOrder::Less => "A<B",
            SliceOrder::Greater => "B<A",
            SliceOrder::Incomparable => "incomparable",
        })
    }
}

pub fn slice_compare(a: &DegreeSlice, b: &DegreeSlice) -> Result<SliceOrder> {
    same_window(a, b)?;
    Ok(match (a.is_subspace_of(b), b.is_subspace_of(a)) {
        (true, true) => SliceOrder::Equal,
        (true, false) => SliceOrder::Less,
        (false, true) => SliceOrder::Greater,
        (false, false) => SliceOrder::Incomparable,
    })
}

/// Span of `l p r` over pairs `(p, rest)` and monomials with
/// `deg l + deg r <= rest`, cut down to degree `max_degree`.
fn sandwich_window(
    items: &[(AlgebraElement, u32)],
    budget: u32,
    max_degree: u32,
) -> Echelon<SliceKey> {
    let full = Monomial::up_to_degree(budget).count();
    let mut span = Echelon::new();
    'items: for (p, rest) in items {
        for l in Monomial::up_to_degree(*rest) {
            for r in Monomial::up_to_degree(rest - l.degree()) {
                span.insert(keyed(&p.sandwich(l, r)));
                if span.rank() == full {
                    break 'items;
                }
            }
        }
    }
    Echelon::from_vectors(
        span.rows()
            .filter(|row| {
                row.leading()
                    .is_some_and(|(k, _)| k.0.degree() <= max_degree)
            })
            .cloned(),
    )
}

/// An ideal built from generated ideals by products and intersections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealExpr {
    Zero,
    Gens(IdealGens),
    /// `IJ`, generated by `g m h` with `g`, `h` generators and `m` a monomial.
    Product(IdealGens, IdealGens),
    Meet(Box<IdealExpr>, Box<IdealExpr>),
}

impl IdealExpr {
    pub fn meet(a: IdealExpr, b: IdealExpr) -> Self {
        IdealExpr::Meet(Box::new(a), Box::new(b))
    }

    /// Slice at a fixed slack; nondecreasing in `slack`.
    pub fn slice(&self, max_degree: u32, slack: u32) -> DegreeSlice {
        let budget = max_degree + slack;
        let space = match self {
            IdealExpr::Zero => Echelon::new(),
            IdealExpr::Gens(g) => {
                let items: Vec<_> = g
                    .elements()
                    .iter()
                    .filter_map(|a| Some((a.clone(), budget.checked_sub(a.degree()?)?)))
                    .collect();
                sandwich_window(&items, budget, max_degree)
            }
            IdealExpr::Product(i, j) => {
                // The budget counts factor degrees, since `g m h` can be
                // shorter than its factors.
                let mut items = Vec::new();
                for g in i.elements() {
                    for h in j.elements() {
                        let used = g.degree().unwrap_or(0) + h.degree().unwrap_or(0);
                        let Some(left) = budget.checked_sub(used) else {
                            continue;
                        };
                        for m in Monomial::up_to_degree(left) {
                            let p = g.mul(&AlgebraElement::monomial(m)).mul(h);
                            if !p.is_zero() {
                                items.push((p, left - m.degree()));
                            }
                        }
                    }
                }
                sandwich_window(&items, budget, max_degree)
            }
            IdealExpr::Meet(a, b) => {
                return a
                    .slice(max_degree, slack)
                    .intersect(&b.slice(max_degree, slack))
                    .expect("same window");
            }
        };
        DegreeSlice::from_space(max_degree, slack, space)
    }

    /// Slice at the least slack `s <= cap - 2` with `slice(s) == slice(s + 2)`.
    pub fn stabilized(&self, max_degree: u32, slack_cap: u32) -> Result<DegreeSlice> {
        let mut slices: Vec<DegreeSlice> = Vec::new();
        for s in 0..=slack_cap {
            slices.push(self.slice(max_degree, s));
            if s >= 2 && slices[(s - 2) as usize] == slices[s as usize] {
                return Ok(slices.swap_remove((s - 2) as usize));
            }
        }
        Err(Error::StabilizationFailure {
            max_slack: slack_cap,
        })
    }
}

/// Slice of `<gens>` at a fixed slack.
pub fn ideal_slice(gens: &IdealGens, max_degree: u32, slack: u32) -> DegreeSlice {
    IdealExpr::Gens(gens.clone()).slice(max_degree, slack)
}

/// Every nonzero ideal contains `<1 - xy>` and is the preimage of a principal
/// ideal `(f)` of `k[t, t^-1]`. Returns `{a : deg a <= D, laurent_image(a) ∈ (f)}`
/// computed directly from the Laurent map (`f = 0` gives `<1 - xy>` itself).
pub fn preimage_slice(f: &Poly, max_degree: u32) -> DegreeSlice {
    let unknowns: Vec<SliceKey> = Monomial::up_to_degree(max_degree).map(SliceKey).collect();
    let shift = max_degree as i64;
    let mut rows: std::collections::BTreeMap<usize, SparseVec<SliceKey>> = Default::default();
    for &k in &unknowns {
        let m = k.0;
        // t^D * t^(i - j) is a polynomial of degree <= 2D.
        let e = (m.i as i64 - m.j as i64 + shift) as usize;
        let rem = if f.is_zero() {
            Poly::monomial(e)
        } else {
            Poly::monomial(e).div_rem(f).1
        };
        for (n, c) in rem.coeffs().iter().enumerate() {
            if !c.is_zero() {
                rows.entry(n).or_default().add_at(k, c);
            }
        }
    }
    let rows: Vec<_> = rows.into_values().collect();
    let space = Echelon::from_vectors(nullspace(&rows, &unknowns));
    DegreeSlice::from_space(max_degree, 0, space)
}

/// Annihilator of a simple module inside the window.
///
/// `k_lambda`: kernel of `Σ c_ij lambda^(i-j)`. Shift module: the action on
/// `b_0..=b_D` is triangular (`b_n` detects the coefficients with `j = n`),
/// so only zero survives.
pub fn annihilator(desc: &SimpleDesc, max_degree: u32) -> DegreeSlice {
    let unknowns: Vec<SliceKey> = Monomial::up_to_degree(max_degree).map(SliceKey).collect();
    let probes = match desc {
        SimpleDesc::Fin(_) => 0,
        SimpleDesc::InfShift => max_degree as usize,
    };
    let mut rows: std::collections::BTreeMap<(usize, usize), SparseVec<SliceKey>> =
        Default::default();
    for &k in &unknowns {
        for n in 0..=probes {
            let b = desc.basis(n).expect("basis index");
            let image = desc.act_monomial(k.0, &b).expect("same module");
            for (out, c) in image.coords() {
                rows.entry((n, out)).or_default().add_at(k, &c);
            }
        }
    }
    let rows: Vec<_> = rows.into_values().collect();
    let space = Echelon::from_vectors(nullspace(&rows, &unknowns));
    DegreeSlice::from_space(max_degree, 0, space)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealClass {
    Zero,
    WholeRing,
    F,
    /// `<1 - xy, f(x)>` with `f` monic, `f(0) != 0`, of positive degree.
    Pair(Poly),
}

impl fmt::Display for IdealClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealClass::Zero => write!(f, "0"),
            IdealClass::WholeRing => write!(f, "R"),
            IdealClass::F => write!(f, "<1 - x*y>"),
            IdealClass::Pair(p) => write!(f, "<1 - x*y, {p}>"),
        }
    }
}

/// Classifies `<gens>` through its Laurent image: the image is the principal
/// ideal generated by the gcd of the images with their unit parts `t^k` removed.
pub fn ideal_classify(gens: &IdealGens) -> IdealClass {
    classify_elements(gens.elements())
}

pub fn classify_elements(gens: &[AlgebraElement]) -> IdealClass {
    if gens.iter().all(AlgebraElement::is_zero) {
        return IdealClass::Zero;
    }
    let g = gens
        .iter()
        .map(|a| laurent_image(a).strip_unit().1)
        .fold(Poly::zero(), |acc, p| acc.gcd(&p));
    match g.degree() {
        None => IdealClass::F,
        Some(0) => IdealClass::WholeRing,
        Some(_) => IdealClass::Pair(g),
    }
}

impl IdealClass {
    /// Generator of the Laurent image; `None` for the zero ideal.
    pub fn laurent_generator(&self) -> Option<Poly> {
        match self {
            IdealClass::Zero => None,
            IdealClass::WholeRing => Some(Poly::one()),
            IdealClass::F => Some(Poly::zero()),
            IdealClass::Pair(p) => Some(p.clone()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix_unit;
    use crate::parse::parse_element;
    use crate::scalar::{frac, int};

    fn el(s: &str) -> AlgebraElement {
        parse_element(s).unwrap()
    }

    #[test]
    fn slice_examples() {
        let f = ideal_slice(&IdealGens::f(), 2, 2);
        assert_eq!(f, DegreeSlice::from_elements(2, [el("1 - x*y")]).unwrap());
        assert_eq!(f.basis(), vec![el("x*y - 1")]);

        let unit = ideal_slice(&IdealGens::new(vec![el("1")]).unwrap(), 3, 0);
        assert_eq!(unit.dim(), Monomial::up_to_degree(3).count());

        let f5 = ideal_slice(&IdealGens::f(), 5, 2);
        for i in 0..=3 {
            for j in 0..=3 - i {
                assert!(f5.contains(&matrix_unit(i, j)), "M_{i}{j}");
            }
        }
    }

    #[test]
    fn monotone_and_stable() {
        let p = IdealExpr::Gens(IdealGens::p(&int(2)));
        let slices: Vec<_> = (0..5).map(|s| p.slice(4, s)).collect();
        for w in slices.windows(2) {
            assert!(w[0].is_subspace_of(&w[1]));
        }
        let st = p.stabilized(4, 6).unwrap();
        assert_eq!(st, preimage_slice(&Poly::linear(&int(2)), 4));
    }

    #[test]
    fn compare_examples() {
        let f = IdealExpr::Gens(IdealGens::f()).stabilized(4, 6).unwrap();
        let p1 = IdealExpr::Gens(IdealGens::p(&int(1)))
            .stabilized(4, 6)
            .unwrap();
        let p2 = IdealExpr::Gens(IdealGens::p(&int(2)))
            .stabilized(4, 6)
            .unwrap();
        assert_eq!(slice_compare(&f, &f).unwrap(), SliceOrder::Equal);
        assert_eq!(slice_compare(&f, &p1).unwrap(), SliceOrder::Less);
        assert_eq!(slice_compare(&p1, &p2).unwrap(), SliceOrder::Incomparable);
        let other = IdealExpr::Gens(IdealGens::f()).slice(3, 0);
        assert_eq!(
            slice_compare(&f, &other),
            Err(Error::MismatchedWindows(4, 3))
        );
    }

    #[test]
    fn preimage_oracle_matches_laurent_kernel() {
        let f = preimage_slice(&Poly::zero(), 4);
        // dim = #monomials - #distinct exponents i - j
        assert_eq!(f.dim(), 15 - 9);
        for b in f.basis() {
            assert!(laurent_image(&b).is_zero());
        }
        let p = preimage_slice(&Poly::linear(&frac(1, 2)), 3);
        for b in p.basis() {
            assert!(laurent_image(&b).eval(&frac(1, 2)).is_zero());
        }
        assert_eq!(p.dim(), 10 - 1);
    }

    #[test]
    fn annihilators() {
        assert_eq!(annihilator(&SimpleDesc::InfShift, 5).dim(), 0);
        let a = annihilator(&SimpleDesc::fin(int(3)).unwrap(), 1);
        assert!(a.contains(&el("x - 3")));
        assert_eq!(a, preimage_slice(&Poly::linear(&int(3)), 1));
    }

    #[test]
    fn classification() {
        assert_eq!(ideal_classify(&IdealGens::f()), IdealClass::F);
        let pair = IdealGens::new(vec![el("1 - x*y"), el("x - 1")]).unwrap();
        assert_eq!(
            ideal_classify(&pair),
            IdealClass::Pair(Poly::linear(&int(1)))
        );
        let whole = IdealGens::new(vec![el("1 - x*y"), el("x")]).unwrap();
        assert_eq!(ideal_classify(&whole), IdealClass::WholeRing);
        // t^-1 (t - 1)(t - 2) normalizes to x^2 - 3x + 2
        let g = IdealGens::new(vec![el("x - 3 + 2*y")]).unwrap();
        let expected = Poly::linear(&int(1)).mul(&Poly::linear(&int(2)));
        assert_eq!(ideal_classify(&g), IdealClass::Pair(expected));
        assert!(IdealGens::new(vec![]).is_err());
    }
}
