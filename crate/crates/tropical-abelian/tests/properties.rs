//! Randomized invariants, 100+ cases each.

mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use tropical_abelian::curve::{self, Mark, MarkedCurve, ParamCurve};
use tropical_abelian::enumerate::{assemble_invariants, audit_solution, enumerate_genus2};
use tropical_abelian::exactmath::{
    format_rational, laurent_eval_one, laurent_substitute, maximal_minor_gcd, maximal_minor_gcd_bruteforce,
    parse_rational, quantum_integer, rat, smith_normal_form, IntMatrix, LaurentHalf,
};
use tropical_abelian::lifting;
use tropical_abelian::multiplicity::{build_theta, build_theta_oriented, classical_multiplicity, lattice_multiplicity};
use tropical_abelian::torus::{is_realizable, reduce_to_fundamental, sample_generic_points, CurveClass, TropicalTorus};
use tropical_abelian::{io, plane};

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

fn laurent() -> impl Strategy<Value = LaurentHalf> {
    prop::collection::vec((-8i64..=8, -20i64..=20), 0..6)
        .prop_map(|t| LaurentHalf::from_terms(t.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

/// Random marks on `g` edges whose complement is a spanning tree.
fn random_marking(c: &ParamCurve, order: &[usize], fracs: &[(i64, i64)]) -> Option<MarkedCurve> {
    let g = curve::genus(c);
    let n = c.edges().len();
    let mut edges: Vec<usize> = Vec::new();
    for &k in order {
        let e = k % n;
        if !edges.contains(&e) {
            edges.push(e);
        }
        if edges.len() == g {
            break;
        }
    }
    if edges.len() < g {
        return None;
    }
    let marks: Vec<Mark> =
        edges.iter().zip(fracs).map(|(&e, &(p, q))| Mark { edge: e, t: &c.edges()[e].length * rat(p, q) }).collect();
    lifting::cut_and_lift(c, &marks).ok().filter(|pc| pc.genus() == 0)?;
    Some(MarkedCurve { curve: c.clone(), marks })
}

fn fracs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((2i64..=40).prop_flat_map(|q| (1..q, Just(q))), 5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn smith_form_matches_minor_gcd(rows in matrix(6, 8)) {
        let m = IntMatrix::from_rows(&rows);
        prop_assert_eq!(maximal_minor_gcd(&m), maximal_minor_gcd_bruteforce(&m));
        let snf = smith_normal_form(&m);
        for w in snf.divisors.windows(2) {
            prop_assert!((&w[1] % &w[0]) == BigInt::from(0));
        }
    }

    #[test]
    fn smith_form_is_unimodular_invariant(rows in matrix(4, 5), ops in prop::collection::vec((0usize..4, 0usize..4, -3i64..=3), 0..12)) {
        let m = IntMatrix::from_rows(&rows);
        let r = m.rows();
        let mut u = IntMatrix::identity(r);
        for (i, j, k) in ops {
            let (i, j) = (i % r, j % r);
            if i != j {
                for col in 0..r {
                    let v = &u[(j, col)] * BigInt::from(k);
                    u[(i, col)] += v;
                }
            }
        }
        prop_assert_eq!(u.determinant(), BigInt::from(1));
        prop_assert_eq!(smith_normal_form(&u.mul(&m)), smith_normal_form(&m));
    }

    #[test]
    fn quantum_integer_identities(a in 1i64..60, b in 1i64..8) {
        let qa = quantum_integer(a).unwrap();
        prop_assert_eq!(laurent_eval_one(&qa), BigInt::from(a));
        prop_assert!(qa.is_symmetric());
        prop_assert_eq!(quantum_integer(a * b).unwrap(), &quantum_integer(b).unwrap() * &laurent_substitute(&qa, b as u64));
    }

    #[test]
    fn substitution_keeps_the_value_at_one(p in laurent(), m in 1u64..6) {
        prop_assert_eq!(laurent_eval_one(&laurent_substitute(&p, m)), laurent_eval_one(&p));
    }

    #[test]
    fn lifts_satisfy_menelaus_and_gluing(idx in 0usize..32, order in prop::collection::vec(0usize..64, 12), fr in fracs()) {
        let curves = common::corpus_curves();
        let (_, c) = &curves[idx % curves.len()];
        let mc = random_marking(c, &order, &fr);
        prop_assume!(mc.is_some());
        let mc = mc.unwrap();
        let pc = lifting::cut_and_lift(&mc.curve, &mc.marks).unwrap();
        prop_assert!(pc.is_consistent() && pc.is_balanced());
        prop_assert!(lifting::check_menelaus(&pc));
        prop_assert!(lifting::check_gluing(&mc.curve, &mc.marks));
        let (back, cuts) = lifting::reglue(&pc, &mc.curve).unwrap();
        prop_assert_eq!(back, mc.curve.clone());
        prop_assert_eq!(cuts, mc.marks.clone());
    }

    #[test]
    fn theta_torsion_ignores_orientation(idx in 0usize..64, order in prop::collection::vec(0usize..64, 12), fr in fracs(), flips in prop::collection::vec(any::<bool>(), 40)) {
        let curves = common::corpus_curves();
        let (_, c) = &curves[idx % curves.len()];
        let mc = random_marking(c, &order, &fr);
        prop_assume!(mc.is_some());
        let mc = mc.unwrap();
        let a = build_theta(&mc).unwrap();
        let b = build_theta_oriented(&mc, &flips).unwrap();
        prop_assert_eq!(smith_normal_form(&a.matrix), smith_normal_form(&b.matrix));
        prop_assert!(a.phi_times_theta().iter().all(|x| *x == BigInt::from(0)));
        prop_assert_eq!(
            lattice_multiplicity(&mc).unwrap(),
            BigInt::from(curve::curve_gcd(&mc.curve).unwrap() * classical_multiplicity(&mc.curve).unwrap())
        );
    }

    #[test]
    fn scaling_multiplies_class_and_multiplicities(idx in 0usize..32, k in 1i64..5) {
        let curves = common::corpus_curves();
        let (_, c) = &curves[idx % curves.len()];
        let s = curve::scale_curve(c, k);
        let class = curve::degree_class(c).unwrap();
        prop_assert_eq!(curve::degree_class(&s).unwrap(), class.scaled(k));
        prop_assert_eq!(curve::degree_class_by_crossings(&s).unwrap(), class.scaled(k));
        prop_assert_eq!(curve::curve_gcd(&s).unwrap(), k * curve::curve_gcd(c).unwrap());
        let v = c.num_vertices() as u32;
        prop_assert_eq!(classical_multiplicity(&s).unwrap(), k.pow(2 * v) * classical_multiplicity(c).unwrap());
        prop_assert!(tropical_abelian::multiplicity::check_parity(&s).unwrap());
        prop_assert!(is_realizable(&class.scaled(k), &c.torus));
    }

    #[test]
    fn realizability_is_scale_invariant(m in prop::array::uniform4(-4i64..=4), k in 1i64..5, s in prop::array::uniform4(-9i64..=9)) {
        let t = TropicalTorus::from_i64([[s[0], s[1]], [s[2], s[3]]]);
        prop_assume!(t.is_ok());
        let t = t.unwrap();
        let c = CurveClass::from_flat(m);
        prop_assert_eq!(is_realizable(&c, &t), is_realizable(&c.scaled(k), &t));
    }

    #[test]
    fn reduction_is_idempotent(x in (-500i64..500, 1i64..50), y in (-500i64..500, 1i64..50), idx in 0usize..3) {
        let t = &common::tori_2i()[idx];
        let p = [rat(x.0, x.1), rat(y.0, y.1)];
        let (r, w) = reduce_to_fundamental(&p, t);
        prop_assert_eq!(t.to_plane(&plane::add(r.coords(), &plane::ipoint(w))), p);
        let (again, w2) = reduce_to_fundamental(&r.in_plane(t), t);
        prop_assert_eq!(again, r);
        prop_assert_eq!(w2, [0, 0]);
    }

    #[test]
    fn rationals_and_laurent_round_trip(n in any::<i64>(), d in 1i64..i64::MAX, p in laurent()) {
        let r = rat(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        prop_assert_eq!(io::parse_laurent(&io::laurent_value(&p)).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn enumeration_is_point_invariant(seed in any::<u64>()) {
        let t = &common::tori_2i()[(seed % 3) as usize];
        let c = common::class([[2, 0], [0, 2]]);
        let set = enumerate_genus2(t, &c, &sample_generic_points(t, 2, seed), None);
        prop_assume!(set.is_ok());
        let set = set.unwrap();
        let table = assemble_invariants(&set);
        prop_assert_eq!(table.n, BigInt::from(120));
        prop_assert_eq!(table.m, BigInt::from(88));
        for s in &set.solutions {
            let audit = audit_solution(&set, s);
            prop_assert!(audit.passed(), "{:?}", audit);
            let text = io::curve_to_json(&s.marked);
            prop_assert_eq!(io::parse_curve(&text).unwrap(), s.marked.clone());
        }
    }
}
