use proptest::prelude::*;
use prunix::geometry::excludable;
use prunix::identity::{identity_sum, rng_from_seed, TOLERANCE};
use prunix::lattice::{build_lattice, is_distributive};
use prunix::random::{random_kcnf, random_planted_kcnf, random_rooted_sets};
use prunix::sat::{
    classify_vars, compress, core, geometry_from_assignment, geometry_intersection_witness,
    is_valid, poset_below, total_weight, verify_sat_identity,
};
use prunix::{CnfFormula, ElementSet, GroundSet, PartialAssignment, SetFamily, WeightVector};
use rand::Rng;

fn planted(seed: u64, max_n: usize, k: usize) -> (CnfFormula, PartialAssignment) {
    let mut rng = rng_from_seed(seed);
    let n = rng.gen_range(k..=max_n);
    let m = rng.gen_range(1..=3 * n);
    let (f, truth) = random_planted_kcnf(n, m, k, &mut rng);
    (f, PartialAssignment::from_bools(&truth))
}

/// Whether `x` is satisfiable, by trying all `2^n` assignments.
fn satisfiable(f: &CnfFormula) -> bool {
    let n = f.num_vars();
    (0u32..1 << n).any(|bits| {
        let truth: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
        is_valid(f, &PartialAssignment::from_bools(&truth)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(64) })]

    #[test]
    fn supports_below_a_form_the_clause_geometry(seed in any::<u64>(), k in 2usize..=3) {
        let (f, a) = planted(seed, 9, k);
        let g = geometry_from_assignment(&f, &a).unwrap();
        let within = a.numeric();
        let poset = poset_below(&f, &a).unwrap();
        let supports = SetFamily::new(
            g.ground().clone(),
            poset.supports().into_iter().map(|s| compress(s, within)).collect::<Vec<_>>(),
        );
        prop_assert_eq!(&supports, g.family());
        for b in poset.assignments() {
            let cls = classify_vars(&f, b).unwrap();
            let local = compress(cls.numeric, within);
            prop_assert_eq!(compress(cls.unconstrained, within), excludable(g.family(), local).unwrap());
        }
    }

    #[test]
    fn multivariate_identity(seed in any::<u64>(), k in 2usize..=3) {
        let (f, a) = planted(seed, 10, k);
        let mut rng = rng_from_seed(seed.wrapping_add(1));
        let w = WeightVector::random(f.num_vars(), &mut rng);
        let s = verify_sat_identity(&f, &a, &w).unwrap();
        prop_assert!((s - 1.0).abs() < TOLERANCE);
        let g = geometry_from_assignment(&f, &a).unwrap();
        let local = WeightVector::new(a.numeric().iter().map(|i| w.p(i)).collect()).unwrap();
        prop_assert_eq!(s, identity_sum(g.family(), &local));
    }

    #[test]
    fn scalar_identity(seed in any::<u64>(), p in 0.05f64..0.95) {
        let (f, a) = planted(seed, 8, 3);
        let poset = poset_below(&f, &a).unwrap();
        let total: f64 = poset
            .assignments()
            .iter()
            .map(|b| {
                let cls = classify_vars(&f, b).unwrap();
                p.powi(cls.stars.len() as i32) * (1.0 - p).powi(cls.unconstrained.len() as i32)
            })
            .sum();
        prop_assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn two_sat_posets_are_distributive(seed in any::<u64>()) {
        let (f, a) = planted(seed, 9, 2);
        let g = geometry_from_assignment(&f, &a).unwrap();
        prop_assert!(is_distributive(&build_lattice(&g).unwrap()).unwrap().holds());
    }

    #[test]
    fn whitening_is_order_independent(seed in any::<u64>()) {
        let (f, a) = planted(seed, 10, 3);
        let first = core(&f, &a, 0).unwrap();
        for s in 1..20 {
            prop_assert_eq!(&core(&f, &a, s).unwrap(), &first);
        }
        prop_assert!(classify_vars(&f, &first).unwrap().unconstrained.is_empty());
        let poset = poset_below(&f, &a).unwrap();
        prop_assert_eq!(poset.assignments().last().unwrap(), &first);
    }

    #[test]
    fn satisfiable_formulas_have_total_weight_at_least_one(seed in any::<u64>()) {
        let (f, _) = planted(seed, 6, 3);
        let w = WeightVector::random(f.num_vars(), &mut rng_from_seed(seed));
        prop_assert!(total_weight(&f, &w).unwrap() >= 1.0 - TOLERANCE);
    }

    #[test]
    fn clause_encoding_of_rooted_sets(seed in any::<u64>(), n in 1usize..=7) {
        // Root positive, the rest negative; the all-true assignment satisfies
        // each clause through its root alone.
        let mut rng = rng_from_seed(seed);
        let count = rng.gen_range(0..=6);
        let rooted = random_rooted_sets(n, count, 1, 4, &mut rng);
        let clauses = rooted
            .iter()
            .map(|r| {
                r.set()
                    .iter()
                    .map(|v| if v == r.root() { v as i32 + 1 } else { -(v as i32 + 1) })
                    .collect()
            })
            .collect();
        let f = CnfFormula::new(n, clauses).unwrap();
        let g = geometry_from_assignment(&f, &PartialAssignment::all_ones(n)).unwrap();
        let direct = prunix::geometry::generate_from_circuits(&rooted, &GroundSet::numbered(n)).unwrap();
        prop_assert_eq!(g.family().members(), direct.family().members());
    }
}

#[test]
fn intersections_of_satisfying_assignments() {
    let mut rng = rng_from_seed(77);
    let (mut checked, mut held, mut unique_top, mut held_at_top) = (0, 0, 0, 0);
    for _ in 0..1000 {
        let n = rng.gen_range(3..=8);
        let f = random_kcnf(n, rng.gen_range(1..=2 * n), 3, &mut rng);
        let sols: Vec<PartialAssignment> = (0u32..1 << n)
            .map(|bits| PartialAssignment::from_bools(&(0..n).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>()))
            .filter(|x| is_valid(&f, x).unwrap())
            .collect();
        if sols.len() < 2 {
            continue;
        }
        let a = &sols[rng.gen_range(0..sols.len())];
        let b = &sols[rng.gen_range(0..sols.len())];
        match geometry_intersection_witness(&f, a, b) {
            Ok(w) => {
                checked += 1;
                held += usize::from(w.holds);
                unique_top += usize::from(w.maximal.is_some());
                held_at_top += usize::from(w.holds_at_maximal);
                if a == b {
                    assert!(w.holds);
                }
            }
            Err(prunix::Error::EmptyIntersection) => {}
            Err(e) => panic!("{e}"),
        }
    }
    assert!(checked > 50);
    // Whenever the common part has a unique top, it is the poset below that
    // top. Reading c as the agreement pattern instead can fail.
    assert_eq!(held_at_top, unique_top);
    println!(
        "{checked} pairs: agreement-pattern c held on {held}; unique top on {unique_top}, held on {held_at_top}"
    );
}

#[test]
fn unsatisfiable_formulas_total_weight() {
    // Only the satisfiable direction is a theorem; this records how the
    // converse behaves on small unsatisfiable instances.
    let mut rng = rng_from_seed(99);
    let (mut unsat, mut below_one) = (0, 0);
    for _ in 0..400 {
        let n = rng.gen_range(3..=6);
        let f = random_kcnf(n, rng.gen_range(2 * n..=6 * n), rng.gen_range(2..=3), &mut rng);
        if satisfiable(&f) {
            continue;
        }
        unsat += 1;
        let w = WeightVector::random(n, &mut rng);
        below_one += usize::from(total_weight(&f, &w).unwrap() < 1.0);
    }
    assert!(unsat > 20);
    println!("total weight below 1 on {below_one} of {unsat} unsatisfiable formulas");
}

#[test]
fn unsatisfiable_formula_with_total_weight_above_one() {
    // All eight sign patterns on three variables. Valid partial assignments
    // are (*,*,*) and the six with one numeric variable, each of which can
    // be starred back, so the total is p³ + 6p²q.
    let clauses = (0..8)
        .map(|signs: i32| (1..=3).map(|v| if signs >> (v - 1) & 1 == 1 { v } else { -v }).collect())
        .collect();
    let f = CnfFormula::new(3, clauses).unwrap();
    assert!(!satisfiable(&f));
    for p in [0.3, 0.5, 0.9] {
        let expected = p * p * p + 6.0 * p * p * (1.0 - p);
        let total = total_weight(&f, &WeightVector::uniform(3, p).unwrap()).unwrap();
        assert!((total - expected).abs() < 1e-12);
    }
    assert!(total_weight(&f, &WeightVector::uniform(3, 0.9).unwrap()).unwrap() > 1.0);
}

#[test]
fn single_assignment_checks() {
    let f = prunix::fixtures::sat_example_formula();
    let a = PartialAssignment::all_ones(4);
    let poset = poset_below(&f, &a).unwrap();
    assert_eq!(poset.len(), 11);
    assert_eq!(poset.supports()[0], ElementSet::full(4));
    assert_eq!(core(&f, &a, 7).unwrap().to_string(), "****");
}
