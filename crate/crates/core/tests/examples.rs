//! Worked examples for every operation, checked against hand computations
//! that do not go through the code under test.

use bicyclic::extension::{
    complete_delta, equivalence_test, iso_test, split_test, validate_delta, Case, Comparison,
    DeltaMap, ExtSpec, ExtVector, IsoResult, Section, SplitResult,
};
use bicyclic::ideal::{
    annihilator, ideal_classify, ideal_slice, slice_compare, DegreeSlice, IdealClass, IdealExpr,
    IdealGens, SliceOrder,
};
use bicyclic::link::{jategaonkar, link_graph, link_test, prime_identities, PrimeId};
use bicyclic::module::{is_module_map, Intertwining, RegularModule};
use bicyclic::scalar::{frac, int, one, zero};
use bicyclic::witness::{essential_check, lann_slice};
use bicyclic::{
    center_slice, diffop_action, laurent_image, matrix_unit, parse_element, to_matrix,
    AlgebraElement, Error, LaurentPoly, LinMap, ModVector, Monomial, Poly, SimpleDesc,
};

fn el(s: &str) -> AlgebraElement {
    parse_element(s).unwrap()
}

fn e(n: usize) -> ModVector {
    ModVector::shift_basis(n)
}

fn fin(l: i64) -> SimpleDesc {
    SimpleDesc::fin(int(l)).unwrap()
}

fn onto_fin(u: SimpleDesc, lambda: i64, image: ModVector) -> ExtSpec {
    ExtSpec::onto_fin(u, int(lambda), image).unwrap()
}

/// Dense `n x n` matrix with `1` at the listed entries.
fn ones_at(n: usize, at: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    for &(r, c) in at {
        m[r][c] = 1;
    }
    m
}

fn as_ints(m: &bicyclic::TruncMatrix) -> Vec<Vec<i64>> {
    m.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| {
                    assert!(c.is_integer());
                    i64::try_from(c.to_integer()).unwrap()
                })
                .collect()
        })
        .collect()
}

#[test]
fn multiplication_examples() {
    assert_eq!(el("y").mul(&el("x")), AlgebraElement::one());
    assert!(el("y").mul(&el("1 - x*y")).is_zero());
    let xy = el("x*y");
    assert_eq!(xy.mul(&xy), xy);
    // (xy)^2 through the shift representation: diag(0, 1, 1, ...)^2
    let m = to_matrix(&xy, 6).unwrap();
    assert_eq!(m.mul(&m).block(4), m.block(4));
    let a = el("3*x^2*y - y^3 + 1/2");
    assert_eq!(AlgebraElement::one().mul(&a), a);
}

#[test]
fn involution_examples() {
    assert_eq!(el("x").involution(), el("y"));
    // x x y reversed is y x x; swapping letters gives x y y
    assert_eq!(el("x^2*y").involution(), el("x*y^2"));
    assert_eq!(AlgebraElement::one().involution(), AlgebraElement::one());
}

#[test]
fn matrix_unit_examples() {
    assert_eq!(matrix_unit(0, 1).mul(&matrix_unit(1, 0)), matrix_unit(0, 0));
    assert!(matrix_unit(0, 1).mul(&matrix_unit(2, 0)).is_zero());
    // (1 - xy)^2 = 1 - 2xy + xyxy = 1 - xy
    let idem = el("1 - x*y");
    assert_eq!(matrix_unit(0, 0), idem);
    assert_eq!(idem.mul(&idem), idem);
}

#[test]
fn representation_examples() {
    let x3 = to_matrix(&el("x"), 3).unwrap();
    assert_eq!(as_ints(&x3), ones_at(3, &[(1, 0), (2, 1)]));
    let id = to_matrix(&AlgebraElement::one(), 5).unwrap();
    assert_eq!(
        as_ints(&id),
        ones_at(5, &[(0, 0), (1, 1), (2, 2), (3, 3), (4, 4)])
    );
    let m00 = to_matrix(&matrix_unit(0, 0), 4).unwrap();
    assert_eq!(as_ints(&m00), ones_at(4, &[(0, 0)]));
    assert_eq!(to_matrix(&el("x"), 0), Err(Error::ZeroDimension));
}

#[test]
fn laurent_examples() {
    assert!(laurent_image(&el("1 - x*y")).is_zero());
    assert_eq!(laurent_image(&el("x^2*y")), LaurentPoly::power(1));
    assert_eq!(laurent_image(&AlgebraElement::one()), LaurentPoly::power(0));
}

#[test]
fn diffop_examples() {
    // H^-1(d/dt t^3) = H^-1(3 t^2) = t^2
    assert_eq!(
        diffop_action(&el("y"), &Poly::monomial(3)),
        Poly::monomial(2)
    );
    assert!(diffop_action(&el("y"), &Poly::one()).is_zero());
    assert_eq!(
        diffop_action(&el("x"), &Poly::monomial(2)),
        Poly::monomial(3)
    );
}

#[test]
fn center_examples() {
    assert_eq!(center_slice(0), vec![AlgebraElement::one()]);
    assert_eq!(center_slice(4), vec![AlgebraElement::one()]);
    let comm = el("x").mul(&el("y")) - el("y").mul(&el("x"));
    assert_eq!(comm, el("x*y - 1"));
}

#[test]
fn simple_module_examples() {
    let k = SimpleDesc::fin(frac(3, 2)).unwrap();
    assert_eq!(
        k.act(&el("x"), &ModVector::Fin(one())).unwrap(),
        ModVector::Fin(frac(3, 2))
    );
    let s = SimpleDesc::InfShift;
    assert!(s.act(&el("y"), &e(0)).unwrap().is_zero());
    assert_eq!(s.act(&el("x"), &e(2)).unwrap(), e(3));
    for n in 0..5 {
        let img = s.act(&el("1 - x*y"), &e(n)).unwrap();
        assert_eq!(img, if n == 0 { e(0) } else { s.zero() });
    }
    assert!(SimpleDesc::fin(zero()).is_err());
}

#[test]
fn module_map_examples() {
    let s = SimpleDesc::InfShift;
    let id = |n: usize| e(n);
    assert!(is_module_map(&id, &s, &s, 6).unwrap().holds());

    // b_i -> 2^i b_i: f(x b_0) = 2 b_1 but x f(b_0) = b_1
    let scaled = |n: usize| e(n).scale(&int(1 << n));
    match is_module_map(&scaled, &s, &s, 6).unwrap() {
        Intertwining::Fails(c) => {
            assert_eq!((c.generator, c.basis_index), ('x', 0));
            assert_eq!((c.lhs, c.rhs), (e(1).scale(&int(2)), e(1)));
        }
        Intertwining::Holds { .. } => panic!("scaling is not a module map"),
    }

    let column = |n: usize| matrix_unit(n as u32, 0);
    assert!(is_module_map(&column, &s, &RegularModule, 8)
        .unwrap()
        .holds());
    assert!(el("y").mul(&matrix_unit(0, 3)).is_zero());
}

#[test]
fn column_decomposition_examples() {
    use bicyclic::module::column_intertwiner_check;
    use bicyclic::Verdict;
    assert_eq!(column_intertwiner_check(0, 4).verdict, Verdict::Pass);
    assert_eq!(column_intertwiner_check(3, 4).verdict, Verdict::Pass);
}

#[test]
fn validate_examples() {
    let (u, v) = (SimpleDesc::InfShift, fin(1));
    let zero = ExtSpec::split_sum(u.clone(), v.clone());
    assert!(validate_delta(&zero).is_ok());

    let with = |image: ModVector| {
        let delta = DeltaMap {
            delta_x: LinMap::from_image(v.clone(), u.clone(), image).unwrap(),
            delta_y: LinMap::zero(v.clone(), u.clone()),
        };
        ExtSpec::new(u.clone(), v.clone(), delta).unwrap()
    };
    assert!(validate_delta(&with(e(0))).is_ok());
    // y e_1 = e_0 is left over
    assert_eq!(
        validate_delta(&with(e(1))),
        Err(Error::IncompatibleDelta {
            index: 0,
            residual: e(0)
        })
    );
}

#[test]
fn completion_examples() {
    let lambda = frac(2, 3);
    let v = SimpleDesc::fin(lambda.clone()).unwrap();
    let u = SimpleDesc::InfShift;
    let dx = LinMap::from_image(v.clone(), u.clone(), e(1)).unwrap();
    // y e_1 + δ(y) λ = 0
    let d = complete_delta(&u, &v, &dx, None).unwrap();
    assert_eq!(d.delta_y.column(0), e(0).scale(&-lambda.recip()));

    let dx = LinMap::from_image(v.clone(), u.clone(), e(0)).unwrap();
    assert!(complete_delta(&u, &v, &dx, None).unwrap().delta_y.is_zero());

    let inf = SimpleDesc::InfShift;
    let none = LinMap::zero(inf.clone(), u.clone());
    assert!(complete_delta(&u, &inf, &none, Some(u.zero()))
        .unwrap()
        .is_zero());

    // U = k_2, V = k_3, δ(x) = 5: μ^-1 · 5 + 3 δ(y) = 0
    let (u, v) = (fin(2), fin(3));
    let dx = LinMap::from_image(v.clone(), u.clone(), ModVector::Fin(int(5))).unwrap();
    let d = complete_delta(&u, &v, &dx, None).unwrap();
    assert_eq!(d.delta_y.column(0), ModVector::Fin(frac(-5, 6)));
}

#[test]
fn block_action_examples() {
    let s = onto_fin(SimpleDesc::InfShift, 1, e(0));
    let d = ExtVector::new(SimpleDesc::InfShift.zero(), ModVector::Fin(one()));
    assert_eq!(
        s.apply_x(&d).unwrap(),
        ExtVector::new(e(0), ModVector::Fin(one()))
    );
    assert_eq!(s.apply_y(&s.apply_x(&d).unwrap()).unwrap(), d);

    let split = ExtSpec::split_sum(SimpleDesc::InfShift, fin(2));
    let w = ExtVector::new(e(3), ModVector::Fin(int(7)));
    let a = el("x^2*y + 4");
    let expect = ExtVector::new(
        SimpleDesc::InfShift.act(&a, &e(3)).unwrap(),
        fin(2).act(&a, &ModVector::Fin(int(7))).unwrap(),
    );
    assert_eq!(split.act(&a, &w).unwrap(), expect);
}

#[test]
fn split_examples() {
    // V infinite: a = -x δ(y) b_0 + b_0
    let u = fin(1);
    let v = SimpleDesc::InfShift;
    let dx = LinMap::new(v.clone(), u.clone(), [(3, ModVector::Fin(int(2)))]).unwrap();
    let s = ExtSpec::completed(u, v, dx, Some(ModVector::Fin(int(4)))).unwrap();
    let r = split_test(&s).unwrap();
    let SplitResult::Split(Section::Generated { generator }) = &r else {
        panic!("expected a generator")
    };
    assert_eq!(generator.u, ModVector::Fin(int(-4)));
    assert!(s.apply_y(generator).unwrap().is_zero());
    assert!(r.replay(&s));

    // w_i = (w_(i-1) + δ_i)/λ = 1 for all i never terminates
    let s = onto_fin(SimpleDesc::InfShift, 1, e(0));
    let r = split_test(&s).unwrap();
    assert!(!r.is_split() && r.replay(&s));

    // (λ - X) w = e_1 - e_0 has the solution w = -e_0
    let s = onto_fin(SimpleDesc::InfShift, 1, e(1).add(&e(0).neg()).unwrap());
    match split_test(&s).unwrap() {
        SplitResult::Split(Section::Image { image }) => assert_eq!(image.u, e(0).neg()),
        other => panic!("expected a split, got {other:?}"),
    }

    // diag(1, 2) after a change of basis
    let s = onto_fin(fin(1), 2, ModVector::Fin(one()));
    assert!(split_test(&s).unwrap().is_split());
    // Jordan block
    let s = onto_fin(fin(1), 1, ModVector::Fin(one()));
    assert!(!split_test(&s).unwrap().is_split());
}

#[test]
fn iso_examples() {
    let base = onto_fin(SimpleDesc::InfShift, 1, e(0));
    let doubled = onto_fin(SimpleDesc::InfShift, 1, e(0).scale(&int(2)));
    let other_lambda = onto_fin(SimpleDesc::InfShift, 2, e(0));
    let shifted = onto_fin(SimpleDesc::InfShift, 1, e(1));

    let r = iso_test(&base, &doubled).unwrap();
    assert!(r.intertwiner().unwrap().verify(&base, &doubled).unwrap());
    assert!(!iso_test(&base, &other_lambda).unwrap().is_iso());

    // f(b_n) = b_n, f(d) = e_0 + d maps E_(e_1) onto E_(e_0)
    match iso_test(&shifted, &base).unwrap() {
        IsoResult::Iso(f) => {
            assert_eq!(
                (f.a.clone(), f.b.clone(), f.w.clone()),
                (one(), one(), e(0))
            );
            assert!(f.verify(&shifted, &base).unwrap());
        }
        IsoResult::NoIso(why) => panic!("{why}"),
    }
    let back = iso_test(&base, &shifted).unwrap();
    assert_eq!(back.intertwiner().unwrap().w, e(0).neg());

    let same = iso_test(&base, &base).unwrap();
    let f = same.intertwiner().unwrap();
    assert_eq!(
        (f.a.clone(), f.b.clone(), f.w.is_zero()),
        (one(), one(), true)
    );
}

#[test]
fn equivalence_examples() {
    let a = onto_fin(fin(1), 1, ModVector::Fin(one()));
    let b = onto_fin(fin(1), 1, ModVector::Fin(int(5)));
    let c = onto_fin(fin(2), 2, ModVector::Fin(one()));
    assert!(equivalence_test(&a, &b).unwrap());
    assert!(!equivalence_test(&a, &c).unwrap());
    assert!(equivalence_test(&a, &a).unwrap());
}

#[test]
fn classify_examples() {
    use bicyclic::extension::classify;
    let u = fin(1);
    let v = SimpleDesc::InfShift;
    let dx = LinMap::new(v.clone(), u.clone(), [(0, ModVector::Fin(int(3)))]).unwrap();
    let c = classify(&ExtSpec::completed(u.clone(), v, dx, None).unwrap()).unwrap();
    assert_eq!(
        (c.case, c.oracle.is_split(), c.comparison),
        (Case::I, true, Comparison::Agrees)
    );

    let c = classify(&onto_fin(SimpleDesc::InfShift, 1, e(0))).unwrap();
    assert_eq!(
        (c.case, c.oracle.is_split(), c.comparison),
        (Case::II, false, Comparison::Agrees)
    );

    let c = classify(&ExtSpec::split_sum(u.clone(), u)).unwrap();
    assert_eq!(
        (c.case, c.oracle.is_split(), c.comparison),
        (Case::III, true, Comparison::Agrees)
    );
}

#[test]
fn ideal_slice_examples() {
    let f = IdealGens::f();
    assert_eq!(
        ideal_slice(&f, 2, 2),
        DegreeSlice::from_elements(2, [el("1 - x*y")]).unwrap()
    );
    let unit = ideal_slice(&IdealGens::new(vec![AlgebraElement::one()]).unwrap(), 4, 0);
    assert_eq!(unit.dim(), Monomial::up_to_degree(4).count());
    let f6 = ideal_slice(&f, 6, 2);
    for i in 0..=4 {
        for j in 0..=4 - i {
            assert!(f6.contains(&matrix_unit(i, j)), "M_{i}{j}");
        }
    }
}

#[test]
fn slice_compare_examples() {
    let d = 4;
    let f = IdealExpr::Gens(IdealGens::f()).stabilized(d, 6).unwrap();
    let p1 = IdealExpr::Gens(IdealGens::p(&int(1)))
        .stabilized(d, 6)
        .unwrap();
    let p2 = IdealExpr::Gens(IdealGens::p(&int(2)))
        .stabilized(d, 6)
        .unwrap();
    assert_eq!(slice_compare(&f, &f).unwrap(), SliceOrder::Equal);
    assert_eq!(slice_compare(&f, &p1).unwrap(), SliceOrder::Less);
    assert!(!f.contains(&el("x - 1")));
    assert_eq!(slice_compare(&p1, &p2).unwrap(), SliceOrder::Incomparable);
    assert!(!p2.contains(&el("x - 1")) && !p1.contains(&el("x - 2")));
    let other = IdealExpr::Gens(IdealGens::f()).stabilized(3, 6).unwrap();
    assert_eq!(
        slice_compare(&f, &other),
        Err(Error::MismatchedWindows(4, 3))
    );
}

#[test]
fn classify_ideal_examples() {
    let g = |v: &[&str]| IdealGens::new(v.iter().map(|s| el(s)).collect()).unwrap();
    assert_eq!(ideal_classify(&g(&["1 - x*y"])), IdealClass::F);
    assert_eq!(
        ideal_classify(&g(&["1 - x*y", "x - 1"])),
        IdealClass::Pair(Poly::linear(&int(1)))
    );
    // xy = x * y and 1 - xy both lie in the ideal
    assert_eq!(ideal_classify(&g(&["1 - x*y", "x"])), IdealClass::WholeRing);
}

#[test]
fn annihilator_examples() {
    assert_eq!(annihilator(&SimpleDesc::InfShift, 5).dim(), 0);
    let p1 = IdealExpr::Gens(IdealGens::p(&int(1)))
        .stabilized(3, 6)
        .unwrap();
    assert_eq!(annihilator(&fin(1), 3), p1);
    let l = frac(-3, 4);
    let ann = annihilator(&SimpleDesc::fin(l.clone()).unwrap(), 1);
    assert!(ann.contains(&(el("x") - AlgebraElement::scalar(l))));
}

#[test]
fn prime_identity_examples() {
    let r = prime_identities(&int(1), &int(2), 4, 6).unwrap();
    assert!(r.f_below_p);
    assert!(r.oracle_mismatches.is_empty());
    let holds: Vec<_> = r.items.iter().map(|i| (i.name, i.holds)).collect();
    assert_eq!(
        holds,
        vec![
            ("F = F^2", true),
            ("F = F∩P", true),
            ("F = FP", true),
            ("F = PF", true),
            ("P∩P' = PP'", true),
            ("F = P∩P'", false),
            ("F = PP'", false),
        ]
    );
    // (x-1)(x-2) lies in P_1 P_2 but not in F
    let both = el("x^2 - 3*x + 2");
    let item = r.items.iter().find(|i| i.name == "F = PP'").unwrap();
    let w = item.witness.as_ref().unwrap();
    assert!(!laurent_image(w).is_zero());
    assert!(prime_identities(&int(1), &int(1), 4, 6).is_err());
    let pp = IdealExpr::Product(IdealGens::p(&int(1)), IdealGens::p(&int(2)))
        .stabilized(4, 6)
        .unwrap();
    assert!(pp.contains(&both));
}

#[test]
fn link_examples() {
    let p1 = PrimeId::p(int(1)).unwrap();
    let p2 = PrimeId::p(int(2)).unwrap();
    let r = link_test(&p1, &p1, 6, 6).unwrap();
    assert!(r.linked && r.replay(6).unwrap());
    assert!(!link_test(&p1, &p2, 6, 6).unwrap().linked);
    assert!(!link_test(&PrimeId::F, &p1, 6, 6).unwrap().linked);

    let g = link_graph(&[], 4, 6).unwrap();
    assert_eq!(g.vertices, vec![PrimeId::Zero, PrimeId::F]);
    assert!(g.edges.is_empty());
}

#[test]
fn jategaonkar_examples() {
    let o = jategaonkar(&onto_fin(SimpleDesc::InfShift, 1, e(0)), 6, 6).unwrap();
    assert!(o.annihilators_match);
    assert!(!o.alternative_i() && !o.alternative_ii());

    // Q = P = P_1 and P_1 links to itself
    let o = jategaonkar(&onto_fin(fin(1), 1, ModVector::Fin(one())), 6, 6).unwrap();
    assert!(!o.alternative_i());
    assert!(o.alternative_ii());

    let split = ExtSpec::split_sum(SimpleDesc::InfShift, fin(1));
    assert_eq!(jategaonkar(&split, 4, 6).unwrap_err(), Error::NotNonsplit);
}

#[test]
fn lann_examples() {
    assert!(lann_slice(1, 3).contains(&el("1 - x*y")));
    assert!(el("1 - x*y").mul(&el("x")).is_zero());
    assert_eq!(lann_slice(0, 6).dim(), 0);
    let dims: Vec<usize> = (0..=4).map(|n| lann_slice(n, 8).dim()).collect();
    assert!(dims.windows(2).all(|w| w[0] < w[1]), "{dims:?}");
    // count of M_ij with j < n and i + j + 2 <= 8
    let expect: Vec<usize> = (0..=4).map(|n| (0..n).map(|j| 7 - j).sum()).collect();
    assert_eq!(dims, expect);
}

#[test]
fn essential_examples() {
    let w = essential_check(&el("x")).unwrap();
    assert_eq!((w.p, w.q, w.sandwich.clone()), (1, 0, matrix_unit(0, 0)));
    assert!(essential_check(&el("1 - x*y")).unwrap().in_f);
    let w = essential_check(&AlgebraElement::one()).unwrap();
    assert_eq!((w.p, w.q, w.sandwich), (0, 0, matrix_unit(0, 0)));
    assert_eq!(
        essential_check(&AlgebraElement::zero()),
        Err(Error::ZeroElement)
    );
}
