//! Property tests for the algebraic invariants.

use clusterkit::laurent::LaurentPoly;
use clusterkit::polygon::{triangulations, Triangulation};
use clusterkit::qp::{cyclic_derivative, mutate_qp, triangle_potential, ArrowQuiver, Potential, QP};
use clusterkit::quiver::Quiver;
use clusterkit::seed::{random_path, Seed};
use clusterkit::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;

fn quiver_strategy(max_n: usize, max_mult: i64) -> impl Strategy<Value = Quiver> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(-max_mult..=max_mult, n * (n - 1) / 2).prop_map(move |upper| {
            let mut m = vec![vec![0i64; n]; n];
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in (i + 1)..n {
                    let v = it.next().unwrap();
                    m[i][j] = v;
                    m[j][i] = -v;
                }
            }
            Quiver::from_matrix(n, 0, &m).unwrap()
        })
    })
}

fn acyclic_strategy(max_n: usize) -> impl Strategy<Value = Quiver> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0i64..=1, n * (n - 1) / 2).prop_map(move |upper| {
            let mut arrows = Vec::new();
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in (i + 1)..n {
                    let v = it.next().unwrap();
                    if v > 0 {
                        arrows.push((i, j, v));
                    }
                }
            }
            Quiver::from_arrows(n, 0, &arrows).unwrap()
        })
    })
}

fn laurent_strategy(nvars: usize) -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((proptest::collection::vec(-2i32..=2, nvars), -3i64..=3), 0..5).prop_map(move |terms| {
        LaurentPoly::from_terms(
            nvars,
            terms.into_iter().map(|(e, c)| (e, BigRational::from_integer(c.into()))),
        )
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

// ---- Quivers ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn mutation_is_an_involution(q in quiver_strategy(5, 2), k in 0usize..5) {
        let k = k % q.n();
        let once = q.mutate(k).unwrap();
        prop_assert_eq!(once.mutate(k).unwrap(), q);
    }

    #[test]
    fn mutation_keeps_skew_symmetry(q in quiver_strategy(5, 2), k in 0usize..5) {
        let m = q.mutate(k % q.n()).unwrap();
        for i in 0..m.n() {
            prop_assert_eq!(m.b(i, i), 0);
            for j in 0..m.n() {
                prop_assert_eq!(m.b(i, j), -m.b(j, i));
            }
        }
    }

    #[test]
    fn canonical_form_is_relabelling_invariant(
        (q, perm) in quiver_strategy(6, 2).prop_flat_map(|q| { let n = q.n(); (Just(q), permutation(n)) })
    ) {
        let relabelled = q.permute(&perm);
        prop_assert_eq!(q.canonical_form().0, relabelled.canonical_form().0);
        let isos = q.isomorphisms(&relabelled);
        prop_assert!(!isos.is_empty());
        for f in isos {
            for i in 0..q.n() {
                for j in 0..q.n() {
                    prop_assert_eq!(relabelled.b(f[i], f[j]), q.b(i, j));
                }
            }
        }
    }

    #[test]
    fn json_round_trip(q in quiver_strategy(5, 3)) {
        prop_assert_eq!(Quiver::from_json(&q.to_json()).unwrap(), q);
    }
}

// ---- Laurent polynomials ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in laurent_strategy(2), b in laurent_strategy(2), c in laurent_strategy(2)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(2), a.clone());
    }

    #[test]
    fn exact_division(a in laurent_strategy(3), b in laurent_strategy(3)) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.try_div(&b).unwrap(), a);
    }

    #[test]
    fn text_round_trip(a in laurent_strategy(3)) {
        prop_assert_eq!(LaurentPoly::parse(&a.to_string(), 3).unwrap(), a.clone());
        prop_assert_eq!(LaurentPoly::parse(&a.to_term_string(), 3).unwrap(), a.clone());
        prop_assert_eq!(LaurentPoly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn denominator_clears_negative_exponents(a in laurent_strategy(2)) {
        prop_assume!(!a.is_zero());
        let d = a.denominator_vector().unwrap();
        let denom = LaurentPoly::monomial(d.iter().map(|&x| x as i32).collect(), BigRational::from_integer(1.into()));
        let numer = &a * &denom;
        let (lo, _) = numer.exponent_bounds();
        prop_assert!(lo.iter().all(|&x| x >= 0));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in laurent_strategy(2), b in laurent_strategy(2), x in 1i64..20, y in 1i64..20) {
        let pt = [BigRational::new(x.into(), 3.into()), BigRational::new(y.into(), 7.into())];
        prop_assert_eq!((&a * &b).eval(&pt).unwrap(), a.eval(&pt).unwrap() * b.eval(&pt).unwrap());
        prop_assert_eq!((&a + &b).eval(&pt).unwrap(), a.eval(&pt).unwrap() + b.eval(&pt).unwrap());
    }
}

// ---- Seeds ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn seed_mutation_is_an_involution(q in acyclic_strategy(4), rng_seed in 0u64..1000) {
        let mut rng = rand::rngs::StdRng::seed_from_u64(rng_seed);
        let path = random_path(q.n(), 4, &mut rng);
        let mut s = Seed::initial(&q);
        for &k in &path {
            s = s.mutate(k).unwrap();
        }
        let k = path[path.len() - 1];
        let back = s.mutate(k).unwrap().mutate(k).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn random_paths_never_repeat(n in 2usize..6, depth in 0usize..30, rng_seed in 0u64..1000) {
        let mut rng = rand::rngs::StdRng::seed_from_u64(rng_seed);
        let p = random_path(n, depth, &mut rng);
        prop_assert_eq!(p.len(), depth);
        prop_assert!(p.windows(2).all(|w| w[0] != w[1]));
        prop_assert!(p.iter().all(|&k| k < n));
    }
}

// ---- Quivers with potential ----

/// Cycles in the complete 3-vertex quiver `x:1→2, y:2→3, z:3→1`.
fn triangle_word(reps: usize, rot: usize) -> Vec<String> {
    let base = ["z", "y", "x"];
    let mut w: Vec<String> = (0..reps).flat_map(|_| base.iter().map(|s| s.to_string())).collect();
    let len = w.len();
    w.rotate_left(rot % len);
    w
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn derivative_ignores_rotation(reps in 1usize..4, r1 in 0usize..12, r2 in 0usize..12, c in 1i64..5) {
        let mut w1 = Potential::zero();
        w1.add_cycle(&triangle_word(reps, r1), BigRational::from_integer(c.into()));
        let mut w2 = Potential::zero();
        w2.add_cycle(&triangle_word(reps, r2), BigRational::from_integer(c.into()));
        for a in ["x", "y", "z"] {
            prop_assert_eq!(cyclic_derivative(&w1, a), cyclic_derivative(&w2, a));
        }
    }

    #[test]
    fn euler_relation(reps in 1usize..4, c in 1i64..5) {
        // Σ_a a·∂W/∂a = deg(W)·W for a homogeneous potential
        let mut w = Potential::zero();
        w.add_cycle(&triangle_word(reps, 0), BigRational::from_integer(c.into()));
        let mut total = Potential::zero();
        for a in ["x", "y", "z"] {
            for (p, coef) in cyclic_derivative(&w, a).0 {
                let mut cyc = p.clone();
                cyc.push(a.to_string());
                total.add_cycle(&cyc, coef);
            }
        }
        let mut want = Potential::zero();
        want.add_cycle(&triangle_word(reps, 0), BigRational::from_integer((c * 3 * reps as i64).into()));
        prop_assert_eq!(total, want);
    }

    #[test]
    fn qp_mutation_matches_quiver_mutation(q in acyclic_strategy(5), k1 in 0usize..5, k2 in 0usize..5) {
        let q1 = q.mutate(k1 % q.n()).unwrap();
        let aq = ArrowQuiver::from_quiver(&q1);
        let qp = QP::new(aq.clone(), triangle_potential(&aq)).unwrap();
        let k = k2 % q.n();
        match mutate_qp(&qp, k, 12) {
            Ok(m) => {
                prop_assert_eq!(m.quiver.to_quiver(), q1.mutate(k).unwrap());
                prop_assert!(m.potential.terms().keys().all(|w| w.len() != 2));
            }
            Err(e) => prop_assert!(matches!(e, clusterkit::qp::QpError::ReductionIncomplete(_))),
        }
    }
}

// ---- Polygons ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn flips_are_mutations(ngon in 4usize..9, pick in 0usize..1000, k in 0usize..6) {
        let ts = triangulations(ngon).unwrap();
        let t: &Triangulation = &ts[pick % ts.len()];
        let k = k % t.diagonals().len();
        let (f, order) = t.flip_at(k).unwrap();
        prop_assert_eq!(&f.flip(order[k]).unwrap(), t);
        // quiver of the flip, in the order of `order`, is the mutated quiver
        let perm: Vec<usize> = order.iter().map(|d| f.diagonals().iter().position(|x| x == d).unwrap()).collect();
        prop_assert_eq!(f.quiver().permute(&perm), t.quiver().mutate(k).unwrap());
    }
}
