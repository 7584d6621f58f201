//! Sparse exact linear algebra over the rationals.
//!
//! Vectors are finite maps from an ordered column key to a nonzero scalar.
//! The column order is the pivot order: an [`Echelon`] keeps its rows in
//! fully reduced row-echelon form, so two echelons built over the same key
//! order span the same space iff their row lists are equal.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVec<K: Ord> {
    entries: BTreeMap<K, Scalar>,
}

impl<K: Ord + Clone> Default for SparseVec<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> SparseVec<K> {
    pub fn new() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries<I: IntoIterator<Item = (K, Scalar)>>(it: I) -> Self {
        let mut v = Self::new();
        for (k, c) in it {
            v.add_at(k, &c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, k: &K) -> Scalar {
        self.entries.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_at(&mut self, k: K, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry(k.clone()).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.entries.remove(&k);
        }
    }

    /// `self += factor * other`
    pub fn axpy(&mut self, factor: &Scalar, other: &Self) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.entries {
            self.add_at(k.clone(), &(factor * c));
        }
    }

    pub fn scale(&mut self, factor: &Scalar) {
        if factor.is_zero() {
            self.entries.clear();
            return;
        }
        for c in self.entries.values_mut() {
            *c *= factor;
        }
    }

    pub fn leading(&self) -> Option<(&K, &Scalar)> {
        self.entries.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn map_keys<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> SparseVec<L> {
        SparseVec::from_entries(self.entries.iter().map(|(k, c)| (f(k), c.clone())))
    }
}

/// Row space in reduced row-echelon form, rows keyed by pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon<K: Ord> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self {
            rows: BTreeMap::new(),
        }
    }

    pub fn from_vectors<I: IntoIterator<Item = SparseVec<K>>>(it: I) -> Self {
        let mut e = Self::new();
        for v in it {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Remainder of `v` modulo the row space. Zero iff `v` lies in the span.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut out = v.clone();
        // Rows are fully reduced, so each pivot is cleared exactly once.
        let hits: Vec<K> = v
            .entries
            .keys()
            .filter(|k| self.rows.contains_key(*k))
            .cloned()
            .collect();
        for k in hits {
            let c = out.get(&k);
            if !c.is_zero() {
                out.axpy(&-c, &self.rows[&k]);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let mut r = self.reduce(&v);
        let (pivot, lead) = match r.leading() {
            Some((k, c)) => (k.clone(), c.clone()),
            None => return false,
        };
        r.scale(&lead.recip());
        for row in self.rows.values_mut() {
            let c = row.get(&pivot);
            if !c.is_zero() {
                row.axpy(&-c, &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    /// Subspace intersection (Zassenhaus).
    pub fn intersect(&self, other: &Self) -> Self {
        let mut z: Echelon<(u8, K)> = Echelon::new();
        for row in self.rows() {
            let mut v = row.map_keys(|k| (0u8, k.clone()));
            for (k, c) in row.iter() {
                v.add_at((1u8, k.clone()), c);
            }
            z.insert(v);
        }
        for row in other.rows() {
            z.insert(row.map_keys(|k| (0u8, k.clone())));
        }
        Echelon::from_vectors(
            z.rows()
                .filter(|r| {
                    r.leading()
                        .map(|((side, _), _)| *side == 1)
                        .unwrap_or(false)
                })
                .map(|r| {
                    SparseVec::from_entries(r.iter().map(|((_, k), c)| (k.clone(), c.clone())))
                }),
        )
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.rows().all(|r| other.contains(r))
    }
}

/// Basis of `{ v : rows · v = 0 }` over the given unknowns.
pub fn nullspace<K: Ord + Clone>(rows: &[SparseVec<K>], unknowns: &[K]) -> Vec<SparseVec<K>> {
    let ech = Echelon::from_vectors(rows.iter().cloned());
    unknowns
        .iter()
        .filter(|u| !ech.rows.contains_key(*u))
        .map(|free| {
            let mut v = SparseVec::new();
            v.add_at(free.clone(), &crate::scalar::one());
            for (pivot, row) in &ech.rows {
                let c = row.get(free);
                if !c.is_zero() {
                    v.add_at(pivot.clone(), &-c);
                }
            }
            v
        })
        .collect()
}

/// One solution of `rows · v = rhs`, or `None` when the system is inconsistent.
///
/// Each equation is a row over unknown keys; `rhs[i]` is its right-hand side.
pub fn solve<K: Ord + Clone>(rows: &[SparseVec<K>], rhs: &[Scalar]) -> Option<SparseVec<K>> {
    assert_eq!(rows.len(), rhs.len(), "one right-hand side per equation");
    // The right-hand side is an extra column ordered after every unknown;
    // a pivot there is a row reading 0 = 1.
    let mut ech: Echelon<Augmented<K>> = Echelon::new();
    for (row, b) in rows.iter().zip(rhs) {
        let mut v: SparseVec<Augmented<K>> = row.map_keys(|k| Augmented(Some(k.clone())));
        v.add_at(Augmented(None), b);
        ech.insert(v);
    }
    if ech.rows.contains_key(&Augmented(None)) {
        return None;
    }
    let mut sol = SparseVec::new();
    for (pivot, row) in &ech.rows {
        if let Augmented(Some(k)) = pivot {
            sol.add_at(k.clone(), &row.get(&Augmented(None)));
        }
    }
    Some(sol)
}

/// Column key that sorts the augmented (`None`) column after all unknowns.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Augmented<K>(Option<K>);

impl<K: Ord> PartialOrd for Augmented<K> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<K: Ord> Ord for Augmented<K> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (&self.0, &other.0) {
            (None, None) => Equal,
            (None, Some(_)) => Greater,
            (Some(_), None) => Less,
            (Some(a), Some(b)) => a.cmp(b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn v(entries: &[(usize, i64)]) -> SparseVec<usize> {
        SparseVec::from_entries(entries.iter().map(|&(k, c)| (k, int(c))))
    }

    #[test]
    fn echelon_is_canonical() {
        let a = Echelon::from_vectors([v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)])]);
        let b = Echelon::from_vectors([v(&[(0, 1), (2, -1)]), v(&[(0, 2), (1, 2)])]);
        assert_eq!(a, b);
        assert_eq!(a.rank(), 2);
        assert!(a.contains(&v(&[(0, 1), (1, 2), (2, 1)])));
        assert!(!a.contains(&v(&[(2, 1)])));
    }

    #[test]
    fn nullspace_of_single_equation() {
        let ns = nullspace(&[v(&[(0, 1), (1, 1), (2, 1)])], &[0, 1, 2]);
        assert_eq!(ns.len(), 2);
        for n in &ns {
            let dot: Scalar = n.iter().map(|(_, c)| c.clone()).sum();
            assert_eq!(dot, int(0));
        }
    }

    #[test]
    fn solve_detects_inconsistency() {
        // x = 1, x = 2
        assert!(solve(&[v(&[(0, 1)]), v(&[(0, 1)])], &[int(1), int(2)]).is_none());
        let s = solve(&[v(&[(0, 2), (1, 1)]), v(&[(1, 3)])], &[int(1), int(3)]).unwrap();
        assert_eq!(s.get(&1), int(1));
        assert_eq!(s.get(&0), frac(0, 1));
    }

    #[test]
    fn intersection_of_planes() {
        let a = Echelon::from_vectors([v(&[(0, 1)]), v(&[(1, 1)])]);
        let b = Echelon::from_vectors([v(&[(1, 1)]), v(&[(2, 1)])]);
        let i = a.intersect(&b);
        assert_eq!(i, Echelon::from_vectors([v(&[(1, 1)])]));
        assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
    }
}
