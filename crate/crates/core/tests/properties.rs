//! Randomized invariants. The proptest RNG is seeded deterministically by
//! proptest's default configuration plus the fixed case counts below.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use proptest::prelude::*;

use genassoc::geometry::linalg::Q;
use genassoc::geometry::polytope::{minkowski_sum, polytope_equal};
use genassoc::geometry::{polytope_from_clusters, section, mesh_violations, project_pi};
use genassoc::verify::{Ceilings, Context};
use genassoc::{CTuple, DynkinQuiver, DynkinType, IceQuiver, LaurentPoly, Seed, TranslationWindow, VarSet};

fn vars() -> VarSet {
    VarSet::new(["a", "b", "c"]).unwrap()
}

type Dense = BTreeMap<Vec<i32>, i64>;

fn poly_strategy() -> impl Strategy<Value = Dense> {
    prop::collection::btree_map(prop::collection::vec(-2i32..=2, 3), -4i64..=4, 0..5)
        .prop_map(|m| m.into_iter().filter(|(_, c)| *c != 0).collect())
}

fn positive_poly_strategy() -> impl Strategy<Value = Dense> {
    prop::collection::btree_map(prop::collection::vec(-2i32..=2, 3), 1i64..=4, 1..5)
}

fn to_poly(d: &Dense) -> LaurentPoly {
    LaurentPoly::from_terms(&vars(), d.iter().map(|(e, &c)| (e.clone(), BigInt::from(c))))
}

/// Schoolbook product on the dense map, independent of the library.
fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn dense_add(a: &Dense, b: &Dense) -> Dense {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(e.clone()).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn random_quiver(t: DynkinType, flips: u64) -> DynkinQuiver {
    let arrows = t
        .edges()
        .into_iter()
        .enumerate()
        .map(|(k, (a, b))| if flips >> k & 1 == 1 { (b, a) } else { (a, b) })
        .collect();
    DynkinQuiver::new(t.rank(), arrows).unwrap()
}

fn small_type() -> impl Strategy<Value = DynkinType> {
    prop_oneof![
        (1usize..=5).prop_map(DynkinType::A),
        (4usize..=5).prop_map(DynkinType::D),
        Just(DynkinType::E(6)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_operations_match_dense_schoolbook(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        let (pa, pb, pc) = (to_poly(&a), to_poly(&b), to_poly(&c));
        prop_assert_eq!(&pa * &pb, to_poly(&dense_mul(&a, &b)));
        prop_assert_eq!(&pa + &pb, to_poly(&dense_add(&a, &b)));
        prop_assert_eq!(&pa * &pb, &pb * &pa);
        prop_assert_eq!(&(&pa * &pb) * &pc, &pa * &(&pb * &pc));
        prop_assert_eq!(&pa * &(&pb + &pc), &(&pa * &pb) + &(&pa * &pc));
        prop_assert!((&pa - &pa).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly_strategy(), b in positive_poly_strategy()) {
        let (pa, pb) = (to_poly(&a), to_poly(&b));
        prop_assert_eq!((&pa * &pb).div_exact(&pb).unwrap(), pa);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(a in poly_strategy(), b in poly_strategy(), img in prop::collection::vec(-2i32..=2, 2)) {
        let target = VarSet::new(["s", "t"]).unwrap();
        let mut images = HashMap::new();
        images.insert("a".to_string(), LaurentPoly::monomial(&target, vec![img[0], 1], BigInt::from(1)));
        images.insert("b".to_string(), LaurentPoly::monomial(&target, vec![1, img[1]], BigInt::from(-1)));
        images.insert("c".to_string(), LaurentPoly::monomial(&target, vec![0, 1], BigInt::from(1)));
        let (pa, pb) = (to_poly(&a), to_poly(&b));
        let s = |p: &LaurentPoly| p.substitute(&target, &images).unwrap();
        prop_assert_eq!(s(&(&pa * &pb)), &s(&pa) * &s(&pb));
        prop_assert_eq!(s(&(&pa + &pb)), &s(&pa) + &s(&pb));
    }

    #[test]
    fn tropical_evaluation_is_multiplicative(a in positive_poly_strategy(), b in positive_poly_strategy()) {
        let (pa, pb) = (to_poly(&a), to_poly(&b));
        let names = ["a", "b", "c"];
        let t = |p: &LaurentPoly| p.tropical_eval(&names).unwrap();
        prop_assert_eq!(t(&(&pa * &pb)), &t(&pa) * &t(&pb));
        // componentwise minimum of the exponents, computed directly
        let min: Vec<i32> = (0..3).map(|k| a.keys().map(|e| e[k]).min().unwrap()).collect();
        let ta = t(&pa);
        prop_assert_eq!(ta.as_monomial().unwrap().0, min.as_slice());
    }

    #[test]
    fn string_and_json_forms_round_trip(a in poly_strategy()) {
        let p = to_poly(&a);
        prop_assert_eq!(LaurentPoly::parse(&vars(), &p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn mutation_is_an_involution(t in small_type(), flips in any::<u64>(), path in prop::collection::vec(0usize..8, 0..6), k in 0usize..8) {
        let q = random_quiver(t, flips);
        let n = q.n();
        let mut seed = Seed::initial(&q.framed()).unwrap();
        for step in path {
            seed = seed.mutate(step % n + 1).unwrap();
            let b = seed.matrix();
            for i in 0..n {
                for j in 0..n {
                    prop_assert_eq!(b[i][j], -b[j][i]);
                }
            }
        }
        let k = k % n + 1;
        prop_assert_eq!(seed.mutate(k).unwrap().mutate(k).unwrap(), seed);
    }

    #[test]
    fn opposite_is_an_involution_with_negated_exchange_matrix(t in small_type(), flips in any::<u64>()) {
        let q = random_quiver(t, flips);
        prop_assert_eq!(q.opposite().opposite(), q.clone());
        prop_assert_eq!(q.opposite().dynkin_type(), t);
        let b = q.exchange_matrix();
        let bo = q.opposite().exchange_matrix();
        prop_assert!(b.is_skew_symmetric());
        for i in 1..=q.n() {
            for j in 1..=q.n() {
                prop_assert_eq!(b.get(i, j), -bo.get(i, j));
            }
        }
    }

    #[test]
    fn dimension_vectors_are_the_positive_roots(t in small_type(), flips in any::<u64>()) {
        let q = random_quiver(t, flips);
        let w = TranslationWindow::build(&q).unwrap();
        let n = q.n();
        let mut seen = std::collections::BTreeSet::new();
        for &p in w.iplus() {
            let d = w.dim(p);
            // Tits form of a simply-laced graph is 1 exactly on real roots
            let tits: i64 = d.iter().map(|x| x * x).sum::<i64>()
                - t.edges().iter().map(|&(a, b)| d[a - 1] * d[b - 1]).sum::<i64>();
            prop_assert_eq!(tits, 1);
            prop_assert!(d.iter().all(|&x| x >= 0));
            prop_assert!(seen.insert(d.to_vec()));
        }
        prop_assert_eq!(seen.len(), t.positive_root_count());
        prop_assert_eq!(w.len(), t.positive_root_count() + n);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn section_solves_the_mesh_relations(flips in any::<u64>(), n in 2usize..=4, c in prop::collection::vec(0i64..=6, 10), x in prop::collection::vec(-9i64..=9, 4)) {
        let q = random_quiver(DynkinType::A(n), flips);
        let w = TranslationWindow::build(&q).unwrap();
        let c = CTuple::from_integers(&w, &c[..w.iplus().len()]).unwrap();
        let x: Vec<Q> = x[..n].iter().map(|&v| Q::from_integer(v.into())).collect();
        let p = section(&w, &c, &x);
        prop_assert!(mesh_violations(&w, &c, &p).is_empty());
        prop_assert_eq!(project_pi(&w, &p), x);
    }

    #[test]
    fn cluster_vertices_are_additive_in_c(t in prop_oneof![(2usize..=4).prop_map(DynkinType::A), Just(DynkinType::D(4))], flips in any::<u64>(), a in prop::collection::vec(1i64..=5, 12), b in prop::collection::vec(1i64..=5, 12)) {
        let q = random_quiver(t, flips);
        let ctx = Context::new(&q, Ceilings::default()).unwrap();
        let w = &ctx.window;
        let m = w.iplus().len();
        let ca = CTuple::from_integers(w, &a[..m]).unwrap();
        let cb = CTuple::from_integers(w, &b[..m]).unwrap();
        let clusters = ctx.compatible_clusters().to_vec();
        let full = |c: &CTuple| polytope_from_clusters(w, &ctx.hom, &ctx.compat, c, &clusters).unwrap().1;
        let (fa, fb, fab) = (full(&ca), full(&cb), full(&ca.add(&cb)));
        for k in 0..clusters.len() {
            let sum: Vec<Q> = fa[k].iter().zip(&fb[k]).map(|(x, y)| x + y).collect();
            prop_assert_eq!(&sum, &fab[k]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn polytopes_are_additive_in_c(n in 2usize..=4, flips in any::<u64>(), a in prop::collection::vec(1i64..=5, 10), b in prop::collection::vec(1i64..=5, 10)) {
        let q = random_quiver(DynkinType::A(n), flips);
        let ctx = Context::new(&q, Ceilings::default()).unwrap();
        let w = &ctx.window;
        let m = w.iplus().len();
        let ca = CTuple::from_integers(w, &a[..m]).unwrap();
        let cb = CTuple::from_integers(w, &b[..m]).unwrap();
        let clusters = ctx.compatible_clusters().to_vec();
        let poly = |c: &CTuple| polytope_from_clusters(w, &ctx.hom, &ctx.compat, c, &clusters).unwrap().0;
        let sum = minkowski_sum(&poly(&ca), &poly(&cb)).unwrap();
        prop_assert!(polytope_equal(&sum, &poly(&ca.add(&cb))).unwrap());
    }
}

#[test]
fn separation_holds_for_random_ice_quivers() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for t in ["A2", "A3", "A4", "D4"] {
        let q = t.parse::<DynkinType>().unwrap().standard_quiver();
        let ctx = Context::new(&q, Ceilings::default()).unwrap();
        for _ in 0..3 {
            let m = rng.random_range(1..=3);
            let rows: Vec<Vec<i64>> = (0..m)
                .map(|_| (0..q.n()).map(|_| rng.random_range(-2..=2)).collect())
                .collect();
            let names = (0..m).map(|k| format!("u{k}")).collect();
            let ice = IceQuiver::new(q.clone(), rows, names).unwrap();
            let r = genassoc::verify::check_separation(&ctx, &ice);
            assert!(r.passed(), "{}", r.to_json());
        }
    }
}

/// Facets of a full-dimensional set in R^3 from all vertex triples.
fn brute_force_facets_3d(v: &[Vec<Q>]) -> std::collections::BTreeSet<Vec<usize>> {
    let mut out = std::collections::BTreeSet::new();
    let sub = |a: &Vec<Q>, b: &Vec<Q>| -> Vec<Q> { a.iter().zip(b).map(|(x, y)| x - y).collect() };
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            for k in j + 1..v.len() {
                let (a, b) = (sub(&v[j], &v[i]), sub(&v[k], &v[i]));
                let n = [
                    &a[1] * &b[2] - &a[2] * &b[1],
                    &a[2] * &b[0] - &a[0] * &b[2],
                    &a[0] * &b[1] - &a[1] * &b[0],
                ];
                if n.iter().all(|x| *x == Q::from_integer(0.into())) {
                    continue;
                }
                let side: Vec<Q> = v
                    .iter()
                    .map(|p| sub(p, &v[i]).iter().zip(&n).map(|(x, y)| x * y).sum())
                    .collect();
                let zero = Q::from_integer(0.into());
                if side.iter().all(|s| *s >= zero) || side.iter().all(|s| *s <= zero) {
                    out.insert((0..v.len()).filter(|&t| side[t] == zero).collect());
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn facets_match_brute_force(points in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 5..14)) {
        let pts: Vec<Vec<Q>> = points
            .iter()
            .map(|p| p.iter().map(|&x| Q::from_integer(x.into())).collect())
            .collect();
        let poly = genassoc::VPolytope::new(3, pts);
        prop_assume!(poly.affine_dimension() == Some(3));
        let got: std::collections::BTreeSet<Vec<usize>> =
            poly.facets().into_iter().map(|f| f.vertices).collect();
        prop_assert_eq!(got, brute_force_facets_3d(poly.vertices()));
    }
}
