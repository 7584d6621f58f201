//! Elements of `R = k<x,y>/(yx - 1)` on the monomial basis `x^i y^j`.
//!
//! The basis is closed under multiplication: `yx = 1` lets every word be
//! rewritten to `x^i y^j`, and the product of two normal monomials is
//! `(x^a y^b)(x^c y^d) = x^(a+c-t) y^(b+d-t)` with `t = min(b, c)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{nullspace, SparseVec};
use crate::scalar::{self, Scalar};

/// Normal-form monomial `x^i y^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { i: 0, j: 0 };
    pub const X: Monomial = Monomial { i: 1, j: 0 };
    pub const Y: Monomial = Monomial { i: 0, j: 1 };

    pub fn new(i: u32, j: u32) -> Self {
        Self { i, j }
    }

    pub fn degree(self) -> u32 {
        self.i + self.j
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: Monomial) -> Monomial {
        let t = self.j.min(rhs.i);
        Monomial {
            i: self.i + rhs.i - t,
            j: self.j + rhs.j - t,
        }
    }

    /// All monomials of degree at most `d`, in graded order.
    pub fn up_to_degree(d: u32) -> impl Iterator<Item = Monomial> {
        (0..=d).flat_map(|deg| (0..=deg).rev().map(move |i| Monomial { i, j: deg - i }))
    }

    /// Position of this monomial in the graded enumeration of [`Self::up_to_degree`].
    pub fn graded_index(self) -> usize {
        let d = self.degree() as usize;
        d * (d + 1) / 2 + self.j as usize
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.i {
            0 => {}
            1 => parts.push("x".to_string()),
            n => parts.push(format!("x^{n}")),
        }
        match self.j {
            0 => {}
            1 => parts.push("y".to_string()),
            n => parts.push(format!("y^{n}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Finite linear combination of normal monomials. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE)
    }

    pub fn x() -> Self {
        Self::monomial(Monomial::X)
    }

    pub fn y() -> Self {
        Self::monomial(Monomial::Y)
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(scalar::one(), m)
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, &c);
        e
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (m, c) in it {
            e.add_term(m, &c);
        }
        e
    }

    /// `x^i y^j`
    pub fn xy(i: u32, j: u32) -> Self {
        Self::monomial(Monomial::new(i, j))
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest `i + j` in the support; `None` stands for the degree of zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, a)| (*m, a * c)))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(*mb), &(ca * cb));
            }
        }
        out
    }

    /// Left and right multiplication by monomials, `l · self · r`.
    pub fn sandwich(&self, l: Monomial, r: Monomial) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (l.mul(*m).mul(r), c.clone())),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// The involution `x <-> y`, extended as an anti-automorphism:
    /// `x^i y^j` goes to `x^j y^i` and products reverse order.
    pub fn involution(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.j, m.i), c.clone())),
        )
    }

    /// Coordinates keyed by monomial.
    pub fn to_sparse(&self) -> SparseVec<Monomial> {
        SparseVec::from_entries(self.terms.iter().map(|(m, c)| (*m, c.clone())))
    }

    pub fn from_sparse<K: Ord + Clone>(v: &SparseVec<K>, key: impl Fn(&K) -> Monomial) -> Self {
        Self::from_terms(v.iter().map(|(k, c)| (key(k), c.clone())))
    }
}

/// `M_ij = x^i (1 - xy) y^j = x^i y^j - x^(i+1) y^(j+1)`.
pub fn matrix_unit(i: u32, j: u32) -> AlgebraElement {
    let idem = AlgebraElement::one() - AlgebraElement::xy(1, 1);
    AlgebraElement::xy(i, 0)
        .mul(&idem)
        .mul(&AlgebraElement::xy(0, j))
}

/// Basis of the central elements of degree at most `max_degree`.
pub fn center_slice(max_degree: u32) -> Vec<AlgebraElement> {
    let unknowns: Vec<Monomial> = Monomial::up_to_degree(max_degree).collect();
    // One equation per (generator, output monomial) of the commutators.
    let mut eqs: BTreeMap<(u8, Monomial), SparseVec<Monomial>> = BTreeMap::new();
    for &m in &unknowns {
        for (g, gen) in [(0u8, Monomial::X), (1u8, Monomial::Y)] {
            let mut comm = AlgebraElement::monomial(m.mul(gen));
            comm.add_term(gen.mul(m), &-scalar::one());
            for (out, c) in comm.terms() {
                eqs.entry((g, *out)).or_default().add_at(m, c);
            }
        }
    }
    let rows: Vec<_> = eqs.into_values().collect();
    nullspace(&rows, &unknowns)
        .iter()
        .map(|v| AlgebraElement::from_sparse(v, |m| *m))
        .collect()
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let neg = scalar::is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{}", scalar::format(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", scalar::format(&abs))?;
            }
        }
        Ok(())
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, &c);
        }
        self
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: Self) -> AlgebraElement {
        AlgebraElement::mul(self, rhs)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    i: u32,
    j: u32,
    #[serde(with = "scalar::serde_str")]
    c: Scalar,
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|(m, c)| JsonTerm {
                i: m.i,
                j: m.j,
                c: c.clone(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(d)?;
        Ok(Self::from_terms(
            terms.into_iter().map(|t| (Monomial::new(t.i, t.j), t.c)),
        ))
    }
}
