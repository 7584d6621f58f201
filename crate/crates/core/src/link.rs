//! Primes of `R`, links between them, and the annihilator data of nonsplit
//! extensions.
//!
//! Every nonzero ideal contains `F = <1 - xy>` and is the preimage of a
//! principal ideal of `k[t, t^-1]`, which gives each slice an independent
//! oracle ([`preimage_slice`]).

use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::extension::{split_test, Case, ExtSpec};
use crate::ideal::{
    annihilator, preimage_slice, slice_compare, DegreeSlice, IdealExpr, IdealGens, SliceOrder,
};
use crate::laurent::{laurent_image, Poly};
use crate::module::{BasedModule, SimpleDesc};
use crate::report::{ClaimEntry, Verdict};
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimeId {
    Zero,
    F,
    P(Scalar),
}

impl PrimeId {
    pub fn p(lambda: Scalar) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::Precondition("P_lambda needs lambda != 0".into()));
        }
        Ok(PrimeId::P(lambda))
    }

    pub fn gens(&self) -> Option<IdealGens> {
        match self {
            PrimeId::Zero => None,
            PrimeId::F => Some(IdealGens::f()),
            PrimeId::P(l) => Some(IdealGens::p(l)),
        }
    }

    pub fn expr(&self) -> IdealExpr {
        self.gens().map_or(IdealExpr::Zero, IdealExpr::Gens)
    }

    /// Generator of the Laurent image; `None` for `(0)`.
    pub fn laurent_generator(&self) -> Option<Poly> {
        match self {
            PrimeId::Zero => None,
            PrimeId::F => Some(Poly::zero()),
            PrimeId::P(l) => Some(Poly::linear(l)),
        }
    }

    /// The annihilator of a simple module.
    pub fn of_module(desc: &SimpleDesc) -> Self {
        match desc {
            SimpleDesc::InfShift => PrimeId::Zero,
            SimpleDesc::Fin(l) => PrimeId::P(l.clone()),
        }
    }
}

impl fmt::Display for PrimeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeId::Zero => write!(f, "(0)"),
            PrimeId::F => write!(f, "F"),
            PrimeId::P(l) => write!(f, "P_{}", scalar::format(l)),
        }
    }
}

impl Serialize for PrimeId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `a ∈ φ^-1((f))` for the Laurent map `φ`.
fn laurent_divisible(a: &AlgebraElement, f: &Poly) -> bool {
    let p = laurent_image(a).strip_unit().1;
    if f.is_zero() {
        p.is_zero()
    } else {
        p.div_rem(f).1.is_zero()
    }
}

fn poly_lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    a.mul(b).div_rem(&a.gcd(b)).0.monic()
}

fn meet_and_product(
    p: &PrimeId,
    q: &PrimeId,
    max_degree: u32,
    slack_cap: u32,
) -> Result<(DegreeSlice, DegreeSlice)> {
    match (p.gens(), q.gens()) {
        (Some(gp), Some(gq)) => {
            let meet = IdealExpr::meet(IdealExpr::Gens(gp.clone()), IdealExpr::Gens(gq.clone()))
                .stabilized(max_degree, slack_cap)?;
            let product = IdealExpr::Product(gp, gq).stabilized(max_degree, slack_cap)?;
            Ok((meet, product))
        }
        _ => Ok((DegreeSlice::zero(max_degree), DegreeSlice::zero(max_degree))),
    }
}

/// Window data for `P ⤳ Q` with `I = PQ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkCertificate {
    pub p: PrimeId,
    pub q: PrimeId,
    pub meet: DegreeSlice,
    pub product: DegreeSlice,
    /// Element of `P ∩ Q` outside `PQ`.
    pub witness: Option<AlgebraElement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkResult {
    pub linked: bool,
    pub certificate: LinkCertificate,
}

impl LinkResult {
    /// Recomputes both slices, checks them against the Laurent preimage
    /// oracle, and re-checks the witness.
    pub fn replay(&self, slack_cap: u32) -> Result<bool> {
        let c = &self.certificate;
        let d = c.meet.max_degree();
        let (meet, product) = meet_and_product(&c.p, &c.q, d, slack_cap)?;
        if meet != c.meet || product != c.product {
            return Ok(false);
        }
        if let (Some(fp), Some(fq)) = (c.p.laurent_generator(), c.q.laurent_generator()) {
            let (lcm, prod) = (poly_lcm(&fp, &fq), fp.mul(&fq));
            if meet != preimage_slice(&lcm, d) || product != preimage_slice(&prod, d) {
                return Ok(false);
            }
            if let Some(w) = &c.witness {
                if !laurent_divisible(w, &lcm) || laurent_divisible(w, &prod) {
                    return Ok(false);
                }
            }
        }
        Ok(match &c.witness {
            Some(w) => self.linked && meet.contains(w) && !product.contains(w),
            None => !self.linked && meet == product,
        })
    }

    pub fn to_json(&self) -> Value {
        let c = &self.certificate;
        json!({
            "from": c.p,
            "to": c.q,
            "linked": self.linked,
            "max_degree": c.meet.max_degree(),
            "meet_dim": c.meet.dim(),
            "product_dim": c.product.dim(),
            "meet_slack": c.meet.slack(),
            "product_slack": c.product.slack(),
            "witness": c.witness.as_ref().map(ToString::to_string),
        })
    }
}

/// Decides `P ⤳ Q` inside the degree window, taking `I = PQ` (the largest
/// quotient). A nonzero quotient is torsionfree in the defining sense on both
/// sides, since `1` acts as the identity on it.
pub fn link_test(p: &PrimeId, q: &PrimeId, max_degree: u32, slack_cap: u32) -> Result<LinkResult> {
    let (meet, product) = meet_and_product(p, q, max_degree, slack_cap)?;
    let witness = meet.witness_outside(&product);
    Ok(LinkResult {
        linked: witness.is_some(),
        certificate: LinkCertificate {
            p: p.clone(),
            q: q.clone(),
            meet,
            product,
            witness,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraph {
    pub vertices: Vec<PrimeId>,
    pub edges: Vec<LinkResult>,
}

impl LinkGraph {
    pub fn edge_pairs(&self) -> Vec<(PrimeId, PrimeId)> {
        self.edges
            .iter()
            .map(|e| (e.certificate.p.clone(), e.certificate.q.clone()))
            .collect()
    }

    /// Vertex sets of the connected components, ignoring edge direction.
    pub fn cliques(&self) -> Vec<Vec<PrimeId>> {
        let n = self.vertices.len();
        let idx = |p: &PrimeId| {
            self.vertices
                .iter()
                .position(|v| v == p)
                .expect("edge vertex")
        };
        let mut comp: Vec<usize> = (0..n).collect();
        fn root(comp: &mut [usize], mut i: usize) -> usize {
            while comp[i] != i {
                comp[i] = comp[comp[i]];
                i = comp[i];
            }
            i
        }
        for (p, q) in self.edge_pairs() {
            let (a, b) = (root(&mut comp, idx(&p)), root(&mut comp, idx(&q)));
            comp[a.max(b)] = a.min(b);
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<PrimeId>> = Default::default();
        for i in 0..n {
            let r = root(&mut comp, i);
            groups.entry(r).or_default().push(self.vertices[i].clone());
        }
        groups.into_values().collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph links {\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for (p, q) in self.edge_pairs() {
            out.push_str(&format!("  \"{p}\" -> \"{q}\";\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices,
            "edges": self.edges.iter().map(LinkResult::to_json).collect::<Vec<_>>(),
            "cliques": self.cliques(),
        })
    }
}

/// All links among `(0)`, `F` and the `P_lambda`. Every ordered pair is tested.
pub fn link_graph(lambdas: &[Scalar], max_degree: u32, slack_cap: u32) -> Result<LinkGraph> {
    let mut ls = lambdas.to_vec();
    ls.sort();
    ls.dedup();
    if ls.len() != lambdas.len() {
        return Err(Error::Precondition("lambdas must be distinct".into()));
    }
    let mut vertices = vec![PrimeId::Zero, PrimeId::F];
    for l in ls {
        vertices.push(PrimeId::p(l)?);
    }
    let mut edges = Vec::new();
    for p in &vertices {
        for q in &vertices {
            let r = link_test(p, q, max_degree, slack_cap)?;
            if r.linked {
                edges.push(r);
            }
        }
    }
    Ok(LinkGraph { vertices, edges })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityItem {
    pub name: &'static str,
    pub holds: bool,
    /// Element of one side missing from the other.
    pub witness: Option<AlgebraElement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeIdentities {
    pub lambda: Scalar,
    pub lambda2: Scalar,
    pub items: Vec<IdentityItem>,
    /// `F <= P_lambda`
    pub f_below_p: bool,
    /// Slices that disagree with the Laurent preimage oracle.
    pub oracle_mismatches: Vec<&'static str>,
    pub dims: Vec<(&'static str, usize)>,
}

/// The seven slice equalities `F = F^2 = F∩P = FP = PF = P∩P' = PP'`,
/// split as `F = F^2`, `F = F∩P`, `F = FP`, `F = PF`, `P∩P' = PP'`,
/// `F = P∩P'`, `F = PP'`.
pub fn prime_identities(
    lambda: &Scalar,
    lambda2: &Scalar,
    max_degree: u32,
    slack_cap: u32,
) -> Result<PrimeIdentities> {
    if lambda == lambda2 {
        return Err(Error::Precondition("the two lambdas must differ".into()));
    }
    let (f, p, p2) = (IdealGens::f(), IdealGens::p(lambda), IdealGens::p(lambda2));
    let g = IdealExpr::Gens;
    let both = Poly::linear(lambda).mul(&Poly::linear(lambda2));
    let named: Vec<(&'static str, IdealExpr, Poly)> = vec![
        ("F", g(f.clone()), Poly::zero()),
        ("P", g(p.clone()), Poly::linear(lambda)),
        (
            "F^2",
            IdealExpr::Product(f.clone(), f.clone()),
            Poly::zero(),
        ),
        (
            "F∩P",
            IdealExpr::meet(g(f.clone()), g(p.clone())),
            Poly::zero(),
        ),
        ("FP", IdealExpr::Product(f.clone(), p.clone()), Poly::zero()),
        ("PF", IdealExpr::Product(p.clone(), f), Poly::zero()),
        (
            "P∩P'",
            IdealExpr::meet(g(p.clone()), g(p2.clone())),
            both.clone(),
        ),
        ("PP'", IdealExpr::Product(p, p2), both),
    ];
    let mut slices = std::collections::BTreeMap::new();
    let mut oracle_mismatches = Vec::new();
    let mut dims = Vec::new();
    for (name, expr, oracle) in named {
        let s = expr.stabilized(max_degree, slack_cap)?;
        if s != preimage_slice(&oracle, max_degree) {
            oracle_mismatches.push(name);
        }
        dims.push((name, s.dim()));
        slices.insert(name, s);
    }
    let eq = |name: &'static str, a: &str, b: &str| {
        let (sa, sb) = (&slices[a], &slices[b]);
        let witness = sa.witness_outside(sb).or_else(|| sb.witness_outside(sa));
        IdentityItem {
            name,
            holds: witness.is_none(),
            witness,
        }
    };
    let items = vec![
        eq("F = F^2", "F", "F^2"),
        eq("F = F∩P", "F", "F∩P"),
        eq("F = FP", "F", "FP"),
        eq("F = PF", "F", "PF"),
        eq("P∩P' = PP'", "P∩P'", "PP'"),
        eq("F = P∩P'", "F", "P∩P'"),
        eq("F = PP'", "F", "PP'"),
    ];
    Ok(PrimeIdentities {
        lambda: lambda.clone(),
        lambda2: lambda2.clone(),
        items,
        f_below_p: slices["F"].is_subspace_of(&slices["P"]),
        oracle_mismatches,
        dims,
    })
}

pub fn prime_identities_check(
    lambda: &Scalar,
    lambda2: &Scalar,
    max_degree: u32,
    slack_cap: u32,
) -> Result<ClaimEntry> {
    let r = prime_identities(lambda, lambda2, max_degree, slack_cap)?;
    let failing: Vec<&str> = r
        .items
        .iter()
        .filter(|i| !i.holds)
        .map(|i| i.name)
        .collect();
    let verdict = if !r.oracle_mismatches.is_empty() || !r.f_below_p {
        Verdict::Fail
    } else if failing.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Discrepancy
    };
    let detail = if failing.is_empty() {
        format!("all seven equalities hold at D = {max_degree}")
    } else {
        format!("fails at D = {max_degree}: {}", failing.join(", "))
    };
    let cert = json!({
        "lambda": scalar::format(&r.lambda),
        "lambda2": scalar::format(&r.lambda2),
        "max_degree": max_degree,
        "F_below_P": r.f_below_p,
        "oracle_mismatches": r.oracle_mismatches,
        "dims": r.dims.iter().map(|(n, d)| json!({"slice": n, "dim": d})).collect::<Vec<_>>(),
        "items": r.items.iter().map(|i| json!({
            "identity": i.name,
            "holds": i.holds,
            "witness": i.witness.as_ref().map(ToString::to_string),
        })).collect::<Vec<_>>(),
    });
    Ok(ClaimEntry::new(
        format!(
            "ideals.prime_identities.{}_{}",
            scalar::format(lambda),
            scalar::format(lambda2)
        ),
        "F = F^2 = F∩P_λ = FP_λ = P_λF = P_λ∩P_λ' = P_λP_λ' for λ ≠ λ'",
        verdict,
        detail,
        cert,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JategaonkarOutcome {
    /// `ann(U)`
    pub q: PrimeId,
    /// `ann(V)`
    pub p: PrimeId,
    pub annihilators_match: bool,
    pub p_below_q: bool,
    pub p_kills_e: bool,
    pub link: LinkResult,
}

impl JategaonkarOutcome {
    pub fn alternative_i(&self) -> bool {
        self.p_below_q && self.p_kills_e
    }

    pub fn alternative_ii(&self) -> bool {
        self.link.linked
    }
}

/// Evaluates both alternatives of the Jategaonkar main lemma for a nonsplit extension.
pub fn jategaonkar(spec: &ExtSpec, max_degree: u32, slack_cap: u32) -> Result<JategaonkarOutcome> {
    if split_test(spec)?.is_split() {
        return Err(Error::NotNonsplit);
    }
    let q = PrimeId::of_module(spec.u());
    let p = PrimeId::of_module(spec.v());
    let mut annihilators_match = true;
    for (desc, prime) in [(spec.u(), &q), (spec.v(), &p)] {
        let ann = annihilator(desc, max_degree);
        annihilators_match &= ann == prime.expr().stabilized(max_degree, slack_cap)?;
    }
    let sp = p.expr().stabilized(max_degree, slack_cap)?;
    let sq = q.expr().stabilized(max_degree, slack_cap)?;
    let p_below_q = slice_compare(&sp, &sq)? == SliceOrder::Less;
    let mut p_kills_e = true;
    if let Some(gens) = p.gens() {
        let bound = match spec.u() {
            SimpleDesc::Fin(_) => 1,
            SimpleDesc::InfShift => spec.support_bound() + max_degree as usize + 2,
        };
        'outer: for g in gens.elements() {
            for n in 0..=bound {
                let Some(b) = spec.basis(n) else { break };
                if !spec.act(g, &b)?.is_zero() {
                    p_kills_e = false;
                    break 'outer;
                }
            }
        }
    }
    let link = link_test(&p, &q, max_degree, slack_cap)?;
    Ok(JategaonkarOutcome {
        q,
        p,
        annihilators_match,
        p_below_q,
        p_kills_e,
        link,
    })
}

/// Reports which alternative holds; the stated finding is that neither does.
pub fn jategaonkar_check(spec: &ExtSpec, max_degree: u32, slack_cap: u32) -> Result<ClaimEntry> {
    let o = jategaonkar(spec, max_degree, slack_cap)?;
    let (alt_i, alt_ii) = (o.alternative_i(), o.alternative_ii());
    let verdict = if !o.annihilators_match || !o.link.replay(slack_cap)? {
        Verdict::Fail
    } else if !alt_i && !alt_ii {
        Verdict::Pass
    } else {
        Verdict::Discrepancy
    };
    let holding = match (alt_i, alt_ii) {
        (false, false) => "neither alternative holds".to_string(),
        (true, false) => "alternative (i) holds".to_string(),
        (false, true) => format!("alternative (ii) holds: {} ⤳ {}", o.p, o.q),
        (true, true) => "both alternatives hold".to_string(),
    };
    let case = Case::of(spec);
    Ok(ClaimEntry::new(
        format!("ideals.jategaonkar.case_{case}"),
        "no link P ⤳ Q and not P < Q for the nonsplit extension",
        verdict,
        format!(
            "Q = {}, P = {}; {holding} (window-verified at D = {max_degree})",
            o.q, o.p
        ),
        json!({
            "spec": spec,
            "Q": o.q,
            "P": o.p,
            "annihilators_match": o.annihilators_match,
            "P_below_Q": o.p_below_q,
            "P_kills_E": o.p_kills_e,
            "alternative_i": alt_i,
            "alternative_ii": alt_ii,
            "link": o.link.to_json(),
        }),
    ))
}
