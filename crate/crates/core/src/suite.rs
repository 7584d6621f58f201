//! The full verification run: one report entry per checked claim.
//!
//! Every entry is computed from a fixed configuration, so two runs with the
//! same [`RunConfig`] produce identical reports.

use serde_json::{json, Value};

use crate::algebra::{center_slice, matrix_unit, AlgebraElement, Monomial};
use crate::error::{Error, Result};
use crate::extension::{
    classify, equivalence_test, iso_test, split_test, validate_delta, Case, Comparison, DeltaMap,
    ExtSpec, ExtVector, Intertwiner, IsoResult, Section, SplitResult,
};
use crate::ideal::{
    annihilator, classify_elements, preimage_slice, IdealClass, IdealExpr, IdealGens,
};
use crate::laurent::{diffop_action, laurent_image, Poly};
use crate::link::{
    jategaonkar_check, link_graph, link_test, prime_identities_check, LinkGraph, PrimeId,
};
use crate::matrix::to_matrix;
use crate::module::{column_intertwiner_check, LinMap, ModVector, SimpleDesc};
use crate::report::{ClaimEntry, ClaimReport, Verdict};
use crate::sample::Sampler;
use crate::scalar::{self, frac, int, Scalar};
use crate::witness::{essential_check, lann_chain_check};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub max_degree: u32,
    pub slack_cap: u32,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            max_degree: 6,
            slack_cap: 6,
            seed: 2023,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteOutput {
    pub report: ClaimReport,
    /// `None` when the graph could not be computed; the report then has a FAIL.
    pub graph: Option<LinkGraph>,
}

pub fn verify(config: &RunConfig) -> Result<SuiteOutput> {
    if config.max_degree == 0 {
        return Err(Error::Precondition("max_degree must be at least 1".into()));
    }
    let (d, cap, seed) = (config.max_degree, config.slack_cap, config.seed);
    let mut entries = Vec::new();
    let mut push = |id: &str, claim: &str, r: Result<ClaimEntry>| {
        entries.push(r.unwrap_or_else(|e| {
            ClaimEntry::new(id, claim, Verdict::Fail, format!("error: {e}"), Value::Null)
        }));
    };

    push("algebra.relations", RELATIONS, relations());
    push("algebra.associativity", ASSOC, associativity(4));
    push("algebra.matrix_units", UNITS, matrix_units(5));
    push(
        "algebra.representation_border",
        BORDER,
        representation_border(4, 16),
    );
    push("algebra.diffop", DIFFOP, diffop(10, 6));
    push("algebra.involution", INVOLUTION, involution(seed));
    push("algebra.laurent", LAURENT, laurent(seed, d));
    push("algebra.center", CENTER, center(d));
    push(
        "algebra.column_decomposition",
        "",
        Ok(column_intertwiner_check(3, d)),
    );
    push(
        "algebra.ideal_classification",
        IDEALS,
        ideal_classification(d, cap),
    );
    push("algebra.lann_chain", "", lann_chain_check(4, d + 2));
    push("algebra.essential", ESSENTIAL, essential(seed));
    push("algebra.annihilators", ANN, annihilators(d, cap));

    push("ext.compatibility", COMPAT, compatibility(seed));
    push("ext.ring_homomorphism", HOM, ring_homomorphism(seed));
    push(
        "ext.inf_quotient_split",
        INF_QUOTIENT_SPLIT,
        inf_quotient_split(seed),
    );
    push("ext.compat_sign", COMPAT_SIGN, compat_sign());
    push(
        "ext.nonsplit_iff_nonzero",
        NONSPLIT_IFF,
        nonsplit_iff_nonzero(),
    );
    push("ext.iso_proportional", ISO_PROP, iso_proportional());
    push(
        "ext.oracle_consistency",
        CONSISTENCY,
        oracle_consistency(seed),
    );
    push("ext.case_i", CASE_I, case_i(seed));
    push("ext.case_ii", CASE_II, case_ii());
    push("ext.case_iii", CASE_III, case_iii());

    for (l, l2) in [(int(1), int(2)), (int(-1), frac(1, 2)), (int(2), int(-1))] {
        let id = format!(
            "ideals.prime_identities.{}_{}",
            scalar::format(&l),
            scalar::format(&l2)
        );
        push(&id, "", prime_identities_check(&l, &l2, d, cap));
    }
    push("ideals.p_mod_p2", P_MOD_P2, p_mod_p2(d, cap));
    let graph = link_graph(&[int(1), int(2)], d, cap);
    match &graph {
        Ok(g) => {
            push("ideals.link_graph", GRAPH, graph_entry(g, cap));
            push("ideals.links_at_zero", AT_ZERO, Ok(links_at_zero(g, d)));
            push("ideals.cliques_countable", CLIQUES, Ok(cliques(g)));
        }
        Err(e) => {
            for (id, claim) in [
                ("ideals.link_graph", GRAPH),
                ("ideals.links_at_zero", AT_ZERO),
                ("ideals.cliques_countable", CLIQUES),
            ] {
                push(id, claim, Err(e.clone()));
            }
        }
    }
    push(
        "ideals.jategaonkar.case_ii",
        "",
        case2_spec(int(1), e(0)).and_then(|s| jategaonkar_check(&s, d, cap)),
    );
    push(
        "ideals.jategaonkar.case_iii",
        "",
        case3_spec(int(1), int(1), int(1)).and_then(|s| jategaonkar_check(&s, d, cap)),
    );

    Ok(SuiteOutput {
        report: ClaimReport::new(entries),
        graph: graph.ok(),
    })
}

const RELATIONS: &str = "yx = 1, y(1-xy) = (1-xy)x = 0";
const ASSOC: &str = "(ab)c = a(bc) on monomials x^i y^j";
const UNITS: &str = "M_ij M_kl = δ_jk M_il with M_ij = x^i(1-xy)y^j";
const BORDER: &str = "ρ(ab) = ρ(a)ρ(b) for the shift representation";
const DIFFOP: &str = "x = t, y = H^-1 d/dt with H(f) = d/dt(tf) on k[t]";
const INVOLUTION: &str = "η: x <-> y is an involution of R";
const LAURENT: &str = "R/<1-xy> ≅ k[t, t^-1], x -> t, y -> t^-1";
const CENTER: &str = "Z(R) = k";
const IDEALS: &str = "proper ideals of R: 0, <1-xy>, <1-xy, f(x)> with f not a monomial";
const ESSENTIAL: &str = "F = <1-xy> is an essential left and right ideal";
const ANN: &str = "ann(k[x]) = 0, ann(k_λ) = P_λ = <1-xy, x-λ>";
const COMPAT: &str = "ρ_δ is a representation iff α(y)δ(x) + δ(y)β(x) = 0";
const HOM: &str = "ρ_δ(rs) = ρ_δ(r)ρ_δ(s)";
const INF_QUOTIENT_SPLIT: &str = "V = k[x]: 0 -> U -> E -> V -> 0 always splits";
const COMPAT_SIGN: &str = "V = k_λ, U = k[x]: δ(y)_i = λ^-1 δ(x)_(i+1), i >= 1";
const NONSPLIT_IFF: &str = "V = k_λ, U = k[x]: E_δ nonsplit iff δ != 0";
const ISO_PROP: &str = "E_δ ≅ E_δ' iff λ = λ' and δ'(x) = cδ(x)";
const CONSISTENCY: &str = "split and isomorphism oracles are mutually consistent";
const CASE_I: &str = "V infinite-dimensional: always split";
const CASE_II: &str = "U = k[x], V = k_λ: nonsplit iff δ != 0";
const CASE_III: &str = "U = k_λ', V = k_λ: nonsplit iff δ != 0 and λ = λ'";
const P_MOD_P2: &str = "P_λ/P_λ^2 ≅ (x-λ)/(x-λ)^2";
const GRAPH: &str = "the graph of links has a self-loop at each P_λ and no other edges";
const AT_ZERO: &str = "(0) is isolated in the graph of links";
const CLIQUES: &str = "cliques in the graph of links are countable";

fn e(n: usize) -> ModVector {
    ModVector::shift_basis(n)
}

fn vec_of(coords: &[(usize, i64)]) -> ModVector {
    ModVector::from_coords(coords.iter().map(|&(n, c)| (n, int(c))))
}

fn case2_spec(lambda: Scalar, image: ModVector) -> Result<ExtSpec> {
    ExtSpec::onto_fin(SimpleDesc::InfShift, lambda, image)
}

fn case3_spec(mu: Scalar, lambda: Scalar, delta: Scalar) -> Result<ExtSpec> {
    ExtSpec::onto_fin(SimpleDesc::fin(mu)?, lambda, ModVector::Fin(delta))
}

fn first_failure(failures: &[String]) -> String {
    failures.first().cloned().unwrap_or_default()
}

pub fn relations() -> Result<ClaimEntry> {
    let (x, y, one) = (
        AlgebraElement::x(),
        AlgebraElement::y(),
        AlgebraElement::one(),
    );
    let idem = one.clone() - AlgebraElement::xy(1, 1);
    let checks = [
        ("yx = 1", y.mul(&x) == one),
        ("y(1-xy) = 0", y.mul(&idem).is_zero()),
        ("(1-xy)x = 0", idem.mul(&x).is_zero()),
        ("(1-xy)^2 = 1-xy", idem.mul(&idem) == idem),
        ("xy != 1", AlgebraElement::xy(1, 1) != one),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    Ok(ClaimEntry::checked(
        "algebra.relations",
        RELATIONS,
        failed.is_empty(),
        Verdict::Fail,
        if failed.is_empty() {
            "all relations hold exactly".into()
        } else {
            format!("failed: {}", failed.join(", "))
        },
        json!({ "checked": checks.iter().map(|c| json!({"identity": c.0, "holds": c.1})).collect::<Vec<_>>() }),
    ))
}

/// Normal form of a word in `x`, `y` by cancelling `yx` pairs.
fn word_normal_form(word: &[u8]) -> Monomial {
    let mut stack: Vec<u8> = Vec::with_capacity(word.len());
    for &c in word {
        if c == b'x' && stack.last() == Some(&b'y') {
            stack.pop();
        } else {
            stack.push(c);
        }
    }
    let i = stack.iter().take_while(|&&c| c == b'x').count();
    debug_assert!(stack[i..].iter().all(|&c| c == b'y'));
    Monomial::new(i as u32, (stack.len() - i) as u32)
}

fn word(m: Monomial) -> Vec<u8> {
    let mut w = vec![b'x'; m.i as usize];
    w.extend(std::iter::repeat_n(b'y', m.j as usize));
    w
}

fn small_monomials(bound: u32) -> Vec<Monomial> {
    (0..=bound)
        .flat_map(|i| (0..=bound).map(move |j| Monomial::new(i, j)))
        .collect()
}

pub fn associativity(bound: u32) -> Result<ClaimEntry> {
    let monos = small_monomials(bound);
    let mut failures = Vec::new();
    let mut triples = 0usize;
    for &a in &monos {
        for &b in &monos {
            let ab = a.mul(b);
            let mut w = word(a);
            w.extend(word(b));
            if word_normal_form(&w) != ab {
                failures.push(format!("{a} * {b}"));
            }
            for &c in &monos {
                triples += 1;
                let left = AlgebraElement::monomial(ab).mul(&AlgebraElement::monomial(c));
                let right = AlgebraElement::monomial(a).mul(&AlgebraElement::monomial(b.mul(c)));
                if left != right {
                    failures.push(format!("({a} * {b}) * {c}"));
                }
            }
        }
    }
    Ok(ClaimEntry::checked(
        "algebra.associativity",
        ASSOC,
        failures.is_empty(),
        Verdict::Fail,
        if failures.is_empty() {
            format!(
                "{triples} triples with exponents <= {bound}; products agree with word reduction"
            )
        } else {
            format!(
                "{} failures, first {}",
                failures.len(),
                first_failure(&failures)
            )
        },
        json!({ "exponent_bound": bound, "triples": triples, "failures": failures.len() }),
    ))
}

pub fn matrix_units(bound: u32) -> Result<ClaimEntry> {
    let units: Vec<Vec<AlgebraElement>> = (0..=bound)
        .map(|i| (0..=bound).map(|j| matrix_unit(i, j)).collect())
        .collect();
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for i in 0..=bound as usize {
        for j in 0..=bound as usize {
            for k in 0..=bound as usize {
                for l in 0..=bound as usize {
                    checked += 1;
                    let lhs = units[i][j].mul(&units[k][l]);
                    let ok = if j == k {
                        lhs == units[i][l]
                    } else {
                        lhs.is_zero()
                    };
                    if !ok {
                        failures.push(format!("M_{i}{j} M_{k}{l}"));
                    }
                }
            }
        }
    }
    Ok(ClaimEntry::checked(
        "algebra.matrix_units",
        UNITS,
        failures.is_empty(),
        Verdict::Fail,
        if failures.is_empty() {
            format!("{checked} products with indices <= {bound}")
        } else {
            format!(
                "{} failures, first {}",
                failures.len(),
                first_failure(&failures)
            )
        },
        json!({ "index_bound": bound, "products": checked, "failures": failures.len() }),
    ))
}

pub fn representation_border(bound: u32, n: usize) -> Result<ClaimEntry> {
    let monos = small_monomials(bound);
    let mats = monos
        .iter()
        .map(|&m| to_matrix(&AlgebraElement::monomial(m), n))
        .collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    let mut pairs = 0usize;
    for (a, ma) in monos.iter().zip(&mats) {
        for (b, mb) in monos.iter().zip(&mats) {
            pairs += 1;
            let k = n - (a.degree() + b.degree()) as usize;
            let prod = to_matrix(&AlgebraElement::monomial(a.mul(*b)), n)?;
            if prod.block(k) != ma.mul(mb).block(k) {
                failures.push(format!("{a} * {b}"));
            }
        }
    }
    let faithful = (0..n as u32)
        .flat_map(|i| (0..n as u32 - i).map(move |j| Monomial::new(i, j)))
        .filter(|m| (m.degree() as usize) < n)
        .all(|m| {
            to_matrix(&AlgebraElement::monomial(m), n)
                .map(|t| t.first_nonzero().is_some())
                .unwrap_or(false)
        });
    Ok(ClaimEntry::checked(
        "algebra.representation_border",
        BORDER,
        failures.is_empty() && faithful,
        Verdict::Fail,
        if failures.is_empty() {
            format!(
                "top-left (n - deg a - deg b) block agrees for {pairs} monomial pairs at n = {n}"
            )
        } else {
            format!(
                "{} failures, first {}",
                failures.len(),
                first_failure(&failures)
            )
        },
        json!({ "n": n, "exponent_bound": bound, "pairs": pairs, "failures": failures.len(), "monomials_nonzero": faithful }),
    ))
}

fn poly_of(v: &ModVector) -> Poly {
    let end = v.max_index().map_or(0, |m| m + 1);
    Poly::new((0..end).map(|k| v.coord(k)).collect())
}

pub fn diffop(n_max: usize, deg: u32) -> Result<ClaimEntry> {
    let shift = SimpleDesc::InfShift;
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for m in Monomial::up_to_degree(deg) {
        for n in 0..=n_max {
            checked += 1;
            let via_op = diffop_action(&AlgebraElement::monomial(m), &Poly::monomial(n));
            let via_shift = poly_of(&shift.act_monomial(m, &e(n))?);
            if via_op != via_shift {
                failures.push(format!("{m} on t^{n}"));
            }
        }
    }
    Ok(ClaimEntry::checked(
        "algebra.diffop",
        DIFFOP,
        failures.is_empty(),
        Verdict::Fail,
        if failures.is_empty() {
            format!("{checked} (monomial, t^n) pairs agree with the shift module, n <= {n_max}, degree <= {deg}")
        } else {
            format!(
                "{} failures, first {}",
                failures.len(),
                first_failure(&failures)
            )
        },
        json!({ "n_max": n_max, "max_degree": deg, "checked": checked, "failures": failures.len() }),
    ))
}

fn involution(seed: u64) -> Result<ClaimEntry> {
    let mut rng = Sampler::new(seed ^ 0x11);
    let mut failures = Vec::new();
    let gens_ok = AlgebraElement::x().involution() == AlgebraElement::y()
        && AlgebraElement::y().involution() == AlgebraElement::x();
    for k in 0..100 {
        let (a, b) = (rng.element(5, 4), rng.element(5, 4));
        if a.involution().involution() != a {
            failures.push(format!("sample {k}: η(η(a)) != a"));
        }
        if a.mul(&b).involution() != b.involution().mul(&a.involution()) {
            failures.push(format!("sample {k}: η(ab) != η(b)η(a)"));
        }
    }
    let reverses = AlgebraElement::xy(2, 1).involution() == AlgebraElement::xy(1, 2);
    Ok(ClaimEntry::checked(
        "algebra.involution",
        INVOLUTION,
        failures.is_empty() && gens_ok && reverses,
        Verdict::Fail,
        if failures.is_empty() {
            "η(ab) = η(b)η(a) and η^2 = id on 100 random pairs; η is an anti-automorphism".into()
        } else {
            first_failure(&failures)
        },
        json!({ "samples": 100, "swaps_generators": gens_ok, "failures": failures }),
    ))
}

fn laurent(seed: u64, d: u32) -> Result<ClaimEntry> {
    let mut rng = Sampler::new(seed ^ 0x12);
    let mut failures = Vec::new();
    for k in 0..100 {
        let (a, b) = (rng.element(5, 4), rng.element(5, 4));
        if laurent_image(&a.mul(&b)) != laurent_image(&a).mul(&laurent_image(&b)) {
            failures.push(format!("sample {k}: image not multiplicative"));
        }
    }
    for i in 0..=5 {
        for j in 0..=5 {
            if !laurent_image(&matrix_unit(i, j)).is_zero() {
                failures.push(format!("M_{i}{j} not in the kernel"));
            }
        }
    }
    let kernel = preimage_slice(&Poly::zero(), d);
    let f = IdealExpr::Gens(IdealGens::f()).stabilized(d, 6)?;
    if kernel != f {
        failures.push("kernel slice differs from <1-xy>".into());
    }
    Ok(ClaimEntry::checked(
        "algebra.laurent",
        LAURENT,
        failures.is_empty(),
        Verdict::Fail,
        if failures.is_empty() {
            format!(
                "multiplicative on 100 random pairs; kernel equals <1-xy> at D = {d} (dim {})",
                f.dim()
            )
        } else {
            first_failure(&failures)
        },
        json!({ "samples": 100, "max_degree": d, "kernel_dim": kernel.dim(), "failures": failures }),
    ))
}

fn center(d: u32) -> Result<ClaimEntry> {
    let basis = center_slice(d);
    let ok = basis.len() == 1 && basis[0] == AlgebraElement::one();
    let comm = AlgebraElement::xy(1, 1) - AlgebraElement::y().mul(&AlgebraElement::x());
    Ok(ClaimEntry::checked(
        "algebra.center",
        CENTER,
        ok && !comm.is_zero(),
        Verdict::Discrepancy,
        format!(
            "central elements of degree <= {d} span {}-dimensional space; xy - yx = {comm}",
            basis.len()
        ),
        json!({ "max_degree": d, "basis": basis.iter().map(ToString::to_string).collect::<Vec<_>>() }),
    ))
}

fn ideal_classification(d: u32, cap: u32) -> Result<ClaimEntry> {
    let el = |s: &str| crate::parse::parse_element(s);
    let cases: Vec<(&str, Vec<AlgebraElement>, IdealClass)> = vec![
        ("<1-xy>", vec![el("1 - x*y")?], IdealClass::F),
        (
            "<1-xy, x-1>",
            vec![el("1 - x*y")?, el("x - 1")?],
            IdealClass::Pair(Poly::linear(&int(1))),
        ),
        (
            "<1-xy, x>",
            vec![el("1 - x*y")?, el("x")?],
            IdealClass::WholeRing,
        ),
        (
            "<x-1>",
            vec![el("x - 1")?],
            IdealClass::Pair(Poly::linear(&int(1))),
        ),
        (
            "<1-xy, x^2 - 3x + 2>",
            vec![el("1 - x*y")?, el("x^2 - 3*x + 2")?],
            IdealClass::Pair(Poly::linear(&int(1)).mul(&Poly::linear(&int(2)))),
        ),
        (
            "<x^2 y - x y^2>",
            vec![el("x^2*y - x*y^2")?],
            IdealClass::Pair(Poly::new(vec![int(-1), int(0), int(1)])),
        ),
    ];
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    for (name, gens, expected) in cases {
        let got = classify_elements(&gens);
        let generator = got.laurent_generator().expect("nonzero generators");
        let slice = IdealExpr::Gens(IdealGens::new(gens)?).stabilized(d, cap)?;
        let matches_preimage = slice == preimage_slice(&generator, d);
        if got != expected || !matches_preimage {
            failures.push(format!(
                "{name}: got {got}, slice matches preimage: {matches_preimage}"
            ));
        }
        rows.push(json!({
            "ideal": name,
            "class": got.to_string(),
            "slice_dim": slice.dim(),
            "slack": slice.slack(),
            "slice_matches_preimage": matches_preimage,
        }));
    }
    Ok(ClaimEntry::checked(
        "algebra.ideal_classification",
        IDEALS,
        failures.is_empty(),
        Verdict::Fail,
        if failures.is_empty() {
            format!("each ideal equals the preimage of its Laurent image at D = {d}")
        } else {
            first_failure(&failures)
        },
        json!({ "max_degree": d, "ideals": rows }),
    ))
}

pub fn essential(seed: u64) -> Result<ClaimEntry> {
    let mut rng = Sampler::new(seed ^ 0x13);
    let mut failures = Vec::new();
    let mut in_f = 0usize;
    for k in 0..100 {
        let r = rng.nonzero_element(5, 4);
        let w = essential_check(&r)?;
        in_f += usize::from(w.in_f);
        if !w.replay(&r) || !laurent_image(&w.sandwich).is_zero() {
            failures.push(format!("sample {k}: {r}"));
        }
    }
    Ok(ClaimEntry::checked(
        "algebra.essential",
        ESSENTIAL,
        failures.is_empty(),
        Verdict::Fail,
        if failures.is_empty() {
            format!("M_0p r M_q0 = c M_00 with c != 0 for 100 random r of degree <= 5 ({in_f} already in F)")
        } else {
            first_failure(&failures)
        },
        json!({ "samples": 100, "in_F": in_f, "failures": failures }),
    ))
}

fn annihilators(d: u32, cap: u32) -> Result<ClaimEntry> {
    let mut failures = Vec::new();
    let shift_dim = annihilator(&SimpleDesc::InfShift, d).dim();
    if shift_dim != 0 {
        failures.push(format!("ann(k[x]) has dimension {shift_dim}"));
    }
    let mut rows = Vec::new();
    for l in [int(1), int(2), int(-1), frac(1, 2)] {
        let ann = annihilator(&SimpleDesc::fin(l.clone())?, d);
        let p = IdealExpr::Gens(IdealGens::p(&l)).stabilized(d, cap)?;
        let x_minus = AlgebraElement::x() - AlgebraElement::scalar(l.clone());
        let ok = ann == p && ann.contains(&x_minus);
        if !ok {
            failures.push(format!("λ = {}", scalar::format(&l)));
        }
        rows.push(json!({ "lambda": scalar::format(&l), "dim": ann.dim(), "slack": p.slack(), "equal": ok }));
    }
    Ok(ClaimEntry::checked(
        "algebra.annihilators",
        ANN,
        failures.is_empty(),
        Verdict::Fail,
        if failures.is_empty() {
            format!("ann(k[x]) = 0 and ann(k_λ) = P_λ at D = {d} for λ in 1, 2, -1, 1/2")
        } else {
            first_failure(&failures)
        },
        json!({ "max_degree": d, "shift_dim": shift_dim, "fin": rows }),
    ))
}

fn compatibility(seed: u64) -> Result<ClaimEntry> {
    let mut rng = Sampler::new(seed ^ 0x21);
    let mut failures = Vec::new();
    let (u, v) = (SimpleDesc::InfShift, SimpleDesc::fin(int(1))?);
    let bad = DeltaMap {
        delta_x: LinMap::from_image(v.clone(), u.clone(), e(1))?,
        delta_y: LinMap::zero(v.clone(), u.clone()),
    };
    let rejected = match validate_delta(&ExtSpec::new(u, v, bad)?) {
        Err(Error::IncompatibleDelta { index, residual }) => index == 0 && residual == e(0),
        _ => false,
    };
    if !rejected {
        failures.push("δ(x) = e_1, δ(y) = 0 was not rejected with residual e_0".into());
    }
    let one = AlgebraElement::one();
    for k in 0..30 {
        let spec = rng.spec(5);
        for _ in 0..3 {
            let w = draw_vector(&mut rng, &spec);
            if spec.apply_y(&spec.apply_x(&w)?)? != w || spec.act(&one, &w)? != w {
                failures.push(format!("spec {k}: yx does not act as the identity"));
            }
        }
    }
    Ok(ClaimEntry::checked(
        "ext.compatibility",
        COMPAT,
        failures.is_empty(),
        Verdict::Fail,
        if failures.is_empty() {
            "incompatible δ rejected with its residual; yx = id on 30 random valid specs".into()
        } else {
            first_failure(&failures)
        },
        json!({ "random_specs": 30, "rejected_incompatible": rejected, "failures": failures }),
    ))
}

fn draw_vector(rng: &mut Sampler, spec: &ExtSpec) -> ExtVector {
    ExtVector::new(rng.vector(spec.u(), 6), rng.vector(spec.v(), 6))
}

fn ring_homomorphism(seed: u64) -> Result<ClaimEntry> {
    let mut rng = Sampler::new(seed ^ 0x22);
    let mut failures = Vec::new();
    for k in 0..30 {
        let spec = rng.spec(5);
        for _ in 0..3 {
            let (r, s) = (rng.element(4, 3), rng.element(4, 3));
            let w = draw_vector(&mut rng, &spec);
            if spec.act(&r.mul(&s), &w)? != spec.act(&r, &spec.act(&s, &w)?)? {
                failures.push(format!("spec {k}: ({r})({s})"));
            }
        }
    }
    Ok(ClaimEntry::checked(
        "ext.ring_homomorphism",
        HOM,
        failures.is_empty(),
        Verdict::Fail,
        if failures.is_empty() {
            "90 random (r, s, v) triples over 30 random specs".into()
        } else {
            first_failure(&failures)
        },
        json!({ "specs": 30, "triples": 90, "failures": failures }),
    ))
}

pub fn inf_quotient_split(seed: u64) -> Result<ClaimEntry> {
    let mut rng = Sampler::new(seed ^ 0x23);
    let mut failures = Vec::new();
    let mut nonsplit = 0usize;
    for k in 0..50 {
        let u = if k % 2 == 0 {
            SimpleDesc::InfShift
        } else {
            SimpleDesc::Fin(rng.lambda())
        };
        let spec = rng.inf_quotient_spec(u, 5);
        let result = split_test(&spec)?;
        let SplitResult::Split(Section::Generated { generator }) = &result else {
            nonsplit += 1;
            continue;
        };
        let dy_b0 = spec.delta().delta_y.apply(&e(0))?;
        let expected_u = spec.u().act(&AlgebraElement::x(), &dy_b0)?.neg();
        let killed = spec.apply_y(generator)?.is_zero();
        if !killed || generator.u != expected_u || generator.v != e(0) || !result.replay(&spec) {
            failures.push(format!("spec {k}"));
        }
    }
    let verdict = if !failures.is_empty() {
        Verdict::Fail
    } else if nonsplit > 0 {
        Verdict::Discrepancy
    } else {
        Verdict::Pass
    };
    Ok(ClaimEntry::new(
        "ext.inf_quotient_split",
        INF_QUOTIENT_SPLIT,
        verdict,
        if failures.is_empty() {
            format!(
                "50 random specs split via a = -xδ(y)b_0 + b_0 with ya = 0 ({nonsplit} nonsplit)"
            )
        } else {
            first_failure(&failures)
        },
        json!({ "specs": 50, "nonsplit": nonsplit, "failures": failures }),
    ))
}

fn compat_sign() -> Result<ClaimEntry> {
    let lambda = int(2);
    let (u, v) = (SimpleDesc::InfShift, SimpleDesc::fin(lambda.clone())?);
    let dx = LinMap::from_image(v.clone(), u.clone(), e(2))?;
    let stated = DeltaMap {
        delta_x: dx.clone(),
        delta_y: LinMap::from_image(v.clone(), u.clone(), e(1).scale(&lambda.recip()))?,
    };
    let stated_result = ExtSpec::new(u.clone(), v.clone(), stated).and_then(|s| validate_delta(&s));
    let derived = ExtSpec::completed(u, v, dx, None)?;
    let derived_dy = derived.delta().delta_y.column(0);
    let derived_ok = derived_dy == e(1).scale(&-lambda.recip());
    let residual = match &stated_result {
        Err(Error::IncompatibleDelta { index, residual }) => {
            json!({ "index": index, "residual": residual })
        }
        Err(e) => json!(e.to_string()),
        Ok(_) => Value::Null,
    };
    let verdict = if !derived_ok {
        Verdict::Fail
    } else if stated_result.is_ok() {
        Verdict::Pass
    } else {
        Verdict::Discrepancy
    };
    Ok(ClaimEntry::new(
        "ext.compat_sign",
        COMPAT_SIGN,
        verdict,
        if stated_result.is_ok() {
            "the stated relation gives a valid extension".to_string()
        } else {
            "with λ = 2, δ(x) = e_2 the stated δ(y) = e_1/2 violates α(y)δ(x) + δ(y)β(x) = 0; \
             the compatible solution is δ(y)_i = -λ^-1 δ(x)_(i+1) for all i >= 0"
                .to_string()
        },
        json!({
            "lambda": "2",
            "delta_x": e(2),
            "stated_delta_y": e(1).scale(&lambda.recip()),
            "stated_residual": residual,
            "derived_delta_y": derived_dy,
        }),
    ))
}

pub fn nonsplit_iff_nonzero() -> Result<ClaimEntry> {
    let lambda = int(1);
    // δ(x) = (α(x) - λ)(e_0)
    let probe = case2_spec(lambda.clone(), e(1).add(&e(0).scale(&-lambda.clone()))?)?;
    let plain = case2_spec(lambda, e(0))?;
    let (rp, rq) = (split_test(&probe)?, split_test(&plain)?);
    let replayed = rp.replay(&probe) && rq.replay(&plain);
    let agrees = !rp.is_split() && !rq.is_split();
    let verdict = if !replayed {
        Verdict::Fail
    } else if agrees {
        Verdict::Pass
    } else {
        Verdict::Discrepancy
    };
    Ok(ClaimEntry::new(
        "ext.nonsplit_iff_nonzero",
        NONSPLIT_IFF,
        verdict,
        format!(
            "λ = 1: δ(x) = e_1 - e_0 is {} (comparison {}); δ(x) = e_0 is {}",
            rp.verdict(),
            if agrees { "AGREES" } else { "DISCREPANCY" },
            rq.verdict()
        ),
        json!({
            "comparison": if agrees { "AGREES" } else { "DISCREPANCY" },
            "coboundary_probe": { "spec": probe, "split_test": rp.to_json(), "replays": rp.replay(&probe) },
            "nonzero_control": { "spec": plain, "split_test": rq.to_json(), "replays": rq.replay(&plain) },
        }),
    ))
}

fn iso_proportional() -> Result<ClaimEntry> {
    let cases = [
        (
            "λ = 1: e_0 vs 2e_0",
            (int(1), e(0)),
            (int(1), e(0).scale(&int(2))),
            true,
        ),
        (
            "e_0 at λ = 1 vs λ = 2",
            (int(1), e(0)),
            (int(2), e(0)),
            false,
        ),
        ("λ = 1: e_0 vs e_1", (int(1), e(0)), (int(1), e(1)), false),
        (
            "λ = 2: e_0 vs e_0 + e_3",
            (int(2), e(0)),
            (int(2), vec_of(&[(0, 1), (3, 1)])),
            false,
        ),
    ];
    let mut rows = Vec::new();
    let mut disagree = Vec::new();
    let mut broken = false;
    for (name, (la, da), (lb, db), stated) in cases {
        let (a, b) = (case2_spec(la, da)?, case2_spec(lb, db)?);
        let r = iso_test(&a, &b)?;
        if let IsoResult::Iso(f) = &r {
            broken |= !f.verify(&a, &b)?;
        }
        if r.is_iso() != stated {
            disagree.push(name);
        }
        rows.push(json!({ "pair": name, "stated_iso": stated, "oracle": r.to_json() }));
    }
    let verdict = if broken {
        Verdict::Fail
    } else if disagree.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Discrepancy
    };
    Ok(ClaimEntry::new(
        "ext.iso_proportional",
        ISO_PROP,
        verdict,
        if disagree.is_empty() {
            "oracle agrees on every pair".to_string()
        } else {
            format!(
                "oracle finds an isomorphism where δ(x) is not proportional: {}",
                disagree.join("; ")
            )
        },
        json!({ "pairs": rows }),
    ))
}

fn consistency_pool(rng: &mut Sampler) -> Result<Vec<ExtSpec>> {
    let images: [&[(usize, i64)]; 8] = [
        &[],
        &[(0, 1)],
        &[(0, 2)],
        &[(1, 1)],
        &[(0, -1), (1, 1)],
        &[(2, 1)],
        &[(0, -1), (1, 3)],
        &[(3, 5)],
    ];
    let mut pool = Vec::new();
    for l in [int(1), int(2)] {
        for im in images {
            pool.push(case2_spec(l.clone(), vec_of(im))?);
        }
        for _ in 0..2 {
            pool.push(rng.fin_quotient_spec(SimpleDesc::InfShift, l.clone(), 4));
        }
    }
    Ok(pool)
}

pub fn oracle_consistency(seed: u64) -> Result<ClaimEntry> {
    let mut rng = Sampler::new(seed ^ 0x24);
    let pool = consistency_pool(&mut rng)?;
    let n = pool.len();
    let mut failures = Vec::new();
    let splits = pool.iter().map(split_test).collect::<Result<Vec<_>>>()?;
    for (k, (s, r)) in pool.iter().zip(&splits).enumerate() {
        if !r.replay(s) {
            failures.push(format!("split certificate {k} does not replay"));
        }
    }
    let mut maps: Vec<Vec<Option<Intertwiner>>> = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            if let IsoResult::Iso(f) = iso_test(&pool[i], &pool[j])? {
                if !f.verify(&pool[i], &pool[j])? {
                    failures.push(format!("intertwiner {i} -> {j} does not verify"));
                }
                maps[i][j] = Some(f);
            }
        }
    }
    let mut compositions = 0usize;
    for i in 0..n {
        if maps[i][i].is_none() {
            failures.push(format!("{i} not isomorphic to itself"));
        }
        for j in 0..n {
            if maps[i][j].is_some() != maps[j][i].is_some() {
                failures.push(format!("asymmetric pair {i}, {j}"));
            }
            if maps[i][j].is_some() && splits[i].is_split() != splits[j].is_split() {
                failures.push(format!("isomorphic {i}, {j} differ in splitting"));
            }
            let Some(f) = &maps[i][j] else { continue };
            for k in 0..n {
                let Some(g) = &maps[j][k] else { continue };
                compositions += 1;
                if !f.then(g)?.verify(&pool[i], &pool[k])? {
                    failures.push(format!("composite {i} -> {j} -> {k} does not verify"));
                }
            }
        }
    }
    // coboundary closure: δ(x) = (α(x) - λ)u splits with w = -u
    let mut closures = 0usize;
    for k in 0..10 {
        let lambda = rng.lambda();
        let u = rng.vector(&SimpleDesc::InfShift, 5);
        let image = SimpleDesc::InfShift
            .act(&AlgebraElement::x(), &u)?
            .add(&u.scale(&-lambda.clone()))?;
        let spec = case2_spec(lambda, image)?;
        let r = split_test(&spec)?;
        closures += 1;
        let ok = match &r {
            SplitResult::Split(Section::Image { image }) => image.u == u.neg() && r.replay(&spec),
            _ => false,
        };
        if !ok {
            failures.push(format!("coboundary {k} did not split with w = -u"));
        }
    }
    let classes = (0..n)
        .filter(|&i| (0..i).all(|j| maps[j][i].is_none()))
        .count();
    Ok(ClaimEntry::checked(
        "ext.oracle_consistency",
        CONSISTENCY,
        failures.is_empty(),
        Verdict::Fail,
        if failures.is_empty() {
            format!(
                "{n}-spec pool: certificates replay, isomorphism is an equivalence relation \
                 ({classes} classes, {compositions} composites verified); {closures} coboundaries split"
            )
        } else {
            format!(
                "{} failures, first {}",
                failures.len(),
                first_failure(&failures)
            )
        },
        json!({
            "pool": n,
            "classes": classes,
            "composites_verified": compositions,
            "coboundary_closures": closures,
            "failures": failures,
        }),
    ))
}

fn case_i(seed: u64) -> Result<ClaimEntry> {
    let mut rng = Sampler::new(seed ^ 0x25);
    let mut failures = Vec::new();
    let mut disagree = 0usize;
    for k in 0..20 {
        let u = rng.desc();
        let spec = rng.inf_quotient_spec(u, 5);
        let c = classify(&spec)?;
        if c.case != Case::I || !c.oracle.replay(&spec) {
            failures.push(format!("spec {k}"));
        }
        disagree += usize::from(c.comparison == Comparison::Discrepancy);
    }
    let verdict = if !failures.is_empty() {
        Verdict::Fail
    } else if disagree > 0 {
        Verdict::Discrepancy
    } else {
        Verdict::Pass
    };
    Ok(ClaimEntry::new(
        "ext.case_i",
        CASE_I,
        verdict,
        if failures.is_empty() {
            format!("20 random specs, {disagree} disagreements")
        } else {
            first_failure(&failures)
        },
        json!({ "specs": 20, "disagreements": disagree, "failures": failures }),
    ))
}

fn case_ii() -> Result<ClaimEntry> {
    let inputs: [(i64, &[(usize, i64)]); 6] = [
        (1, &[]),
        (1, &[(0, 1)]),
        (1, &[(2, 3)]),
        (1, &[(0, -1), (1, 1)]),
        (2, &[(0, 1)]),
        (2, &[(0, -2), (1, 1)]),
    ];
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    let mut disagree = Vec::new();
    for (l, im) in inputs {
        let spec = case2_spec(int(l), vec_of(im))?;
        let c = classify(&spec)?;
        let mapped = match &c.intertwiner {
            Some(f) => f.verify(&spec, &c.representative)?,
            None => false,
        };
        if c.case != Case::II || !c.oracle.replay(&spec) || !mapped {
            failures.push(format!("λ = {l}, δ(x) = {im:?}"));
        }
        if c.comparison == Comparison::Discrepancy {
            disagree.push(format!("λ = {l}, δ(x) = {}", poly_of(&vec_of(im))));
        }
        rows.push(json!({ "lambda": l, "delta_x": vec_of(im), "classification": c.to_json() }));
    }
    let verdict = if !failures.is_empty() {
        Verdict::Fail
    } else if disagree.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Discrepancy
    };
    Ok(ClaimEntry::new(
        "ext.case_ii",
        CASE_II,
        verdict,
        if !failures.is_empty() {
            first_failure(&failures)
        } else if disagree.is_empty() {
            "oracle agrees on every input".to_string()
        } else {
            format!(
                "nonzero δ splits (δ(x) written with e_n = x^n): {}",
                disagree.join("; ")
            )
        },
        json!({ "inputs": rows }),
    ))
}

pub fn case_iii() -> Result<ClaimEntry> {
    let lambdas = [int(1), int(2), int(-1), frac(1, 2)];
    let deltas = [int(0), int(1), int(5)];
    let mut failures = Vec::new();
    let mut disagree = Vec::new();
    let mut nonsplit = Vec::new();
    let mut specs = 0usize;
    for mu in &lambdas {
        for l in &lambdas {
            for dlt in &deltas {
                specs += 1;
                let spec = case3_spec(mu.clone(), l.clone(), dlt.clone())?;
                let c = classify(&spec)?;
                let stated_split = mu != l || dlt == &int(0);
                if !c.oracle.replay(&spec) || c.case != Case::III {
                    failures.push(format!("μ = {mu}, λ = {l}, δ = {dlt}"));
                }
                if c.oracle.is_split() != stated_split {
                    disagree.push(format!("μ = {mu}, λ = {l}, δ = {dlt}"));
                }
                if !c.oracle.is_split() {
                    nonsplit.push((l.clone(), spec));
                }
            }
        }
    }
    let mut pairs = 0usize;
    for (la, a) in &nonsplit {
        for (lb, b) in &nonsplit {
            pairs += 1;
            if equivalence_test(a, b)? != (la == lb) {
                disagree.push(format!("equivalence of λ = {la} and λ = {lb}"));
            }
        }
    }
    let verdict = if !failures.is_empty() {
        Verdict::Fail
    } else if disagree.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Discrepancy
    };
    Ok(ClaimEntry::new(
        "ext.case_iii",
        CASE_III,
        verdict,
        if !failures.is_empty() {
            first_failure(&failures)
        } else if disagree.is_empty() {
            format!("{specs} grid specs agree; {pairs} nonsplit pairs equivalent iff λ equal")
        } else {
            format!(
                "{} disagreements, first {}",
                disagree.len(),
                first_failure(&disagree)
            )
        },
        json!({
            "lambdas": ["1", "2", "-1", "1/2"],
            "deltas": ["0", "1", "5"],
            "specs": specs,
            "nonsplit": nonsplit.len(),
            "equivalence_pairs": pairs,
            "disagreements": disagree,
        }),
    ))
}

fn p_mod_p2(d: u32, cap: u32) -> Result<ClaimEntry> {
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for l in [int(1), int(2)] {
        let p = IdealGens::p(&l);
        let sp = IdealExpr::Gens(p.clone()).stabilized(d, cap)?;
        let sp2 = IdealExpr::Product(p.clone(), p).stabilized(d, cap)?;
        let lin = Poly::linear(&l);
        let oracle = sp == preimage_slice(&lin, d) && sp2 == preimage_slice(&lin.mul(&lin), d);
        let gen = AlgebraElement::x() - AlgebraElement::scalar(l.clone());
        let quotient = sp.dim() as i64 - sp2.dim() as i64;
        let ok = oracle
            && sp2.is_subspace_of(&sp)
            && quotient == 1
            && sp.contains(&gen)
            && !sp2.contains(&gen);
        if !ok {
            failures.push(format!("λ = {}", scalar::format(&l)));
        }
        let link = link_test(&PrimeId::P(l.clone()), &PrimeId::P(l.clone()), d, cap)?;
        rows.push(json!({
            "lambda": scalar::format(&l),
            "P_dim": sp.dim(),
            "P2_dim": sp2.dim(),
            "quotient_dim": quotient,
            "generator": gen.to_string(),
            "matches_preimage": oracle,
            "self_link_witness": link.certificate.witness.as_ref().map(ToString::to_string),
        }));
    }
    Ok(ClaimEntry::checked(
        "ideals.p_mod_p2",
        P_MOD_P2,
        failures.is_empty(),
        Verdict::Fail,
        if failures.is_empty() {
            format!("P/P^2 is one-dimensional at D = {d}, spanned by x - λ")
        } else {
            first_failure(&failures)
        },
        json!({ "max_degree": d, "lambdas": rows }),
    ))
}

pub fn graph_entry(g: &LinkGraph, cap: u32) -> Result<ClaimEntry> {
    let expected: Vec<(PrimeId, PrimeId)> = g
        .vertices
        .iter()
        .filter(|v| matches!(v, PrimeId::P(_)))
        .map(|v| (v.clone(), v.clone()))
        .collect();
    let mut replayed = true;
    for edge in &g.edges {
        replayed &= edge.replay(cap)?;
    }
    let matches = g.edge_pairs() == expected;
    let verdict = if !replayed {
        Verdict::Fail
    } else if matches {
        Verdict::Pass
    } else {
        Verdict::Discrepancy
    };
    let edges: Vec<String> = g
        .edge_pairs()
        .iter()
        .map(|(p, q)| format!("{p} -> {q}"))
        .collect();
    Ok(ClaimEntry::new(
        "ideals.link_graph",
        GRAPH,
        verdict,
        format!("edges: {} (window-verified)", edges.join(", ")),
        g.to_json(),
    ))
}

fn links_at_zero(g: &LinkGraph, d: u32) -> ClaimEntry {
    let touching: Vec<String> = g
        .edge_pairs()
        .iter()
        .filter(|(p, q)| *p == PrimeId::Zero || *q == PrimeId::Zero)
        .map(|(p, q)| format!("{p} -> {q}"))
        .collect();
    ClaimEntry::checked(
        "ideals.links_at_zero",
        AT_ZERO,
        touching.is_empty(),
        Verdict::Discrepancy,
        if touching.is_empty() {
            format!("no link touches (0) at D = {d} (window-verified)")
        } else {
            format!("links at (0): {}", touching.join(", "))
        },
        json!({ "max_degree": d, "window_verified": true, "edges": touching }),
    )
}

fn cliques(g: &LinkGraph) -> ClaimEntry {
    let cliques = g.cliques();
    let largest = cliques.iter().map(Vec::len).max().unwrap_or(0);
    ClaimEntry::checked(
        "ideals.cliques_countable",
        CLIQUES,
        largest <= 1,
        Verdict::Discrepancy,
        format!(
            "{} cliques among the tested primes, largest has {largest} vertex",
            cliques.len()
        ),
        json!({ "cliques": cliques }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_reduction() {
        assert_eq!(word_normal_form(b"yx"), Monomial::ONE);
        assert_eq!(word_normal_form(b"xyyxxy"), Monomial::new(1, 1));
        assert_eq!(word_normal_form(b"yyxxx"), Monomial::X);
    }

    #[test]
    fn cheap_entries_pass() {
        for entry in [
            relations(),
            associativity(2),
            matrix_units(3),
            diffop(4, 3),
            center(4),
        ] {
            let entry = entry.unwrap();
            assert_eq!(
                entry.verdict,
                Verdict::Pass,
                "{}: {}",
                entry.id,
                entry.detail
            );
        }
        assert_eq!(representation_border(2, 8).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn extension_entries() {
        assert_eq!(compat_sign().unwrap().verdict, Verdict::Discrepancy);
        assert_eq!(
            nonsplit_iff_nonzero().unwrap().verdict,
            Verdict::Discrepancy
        );
        assert_eq!(iso_proportional().unwrap().verdict, Verdict::Discrepancy);
        assert_eq!(case_iii().unwrap().verdict, Verdict::Pass);
        assert_eq!(inf_quotient_split(1).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn zero_degree_rejected() {
        let config = RunConfig {
            max_degree: 0,
            ..RunConfig::default()
        };
        assert!(verify(&config).is_err());
    }
}
