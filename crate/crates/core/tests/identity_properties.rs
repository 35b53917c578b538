use num_traits::One;
use proptest::prelude::*;
use prunix::geometry::check_convex_geometry;
use prunix::identity::{
    classify, coverage_counts, expectation_check, identity_sum, identity_sum_exact,
    interval_cover, pi2_exact, product_term, pushforward_empirical, rng_from_seed,
    verify_interval_partition, ExactWeights, TOLERANCE,
};
use prunix::random::{random_circuit_geometry, random_family};
use prunix::{ElementSet, GroundSet, SetFamily, WeightVector};
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(128) })]

    #[test]
    fn geometries_classify_true(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = rng_from_seed(seed);
        let g = random_circuit_geometry(n, 6, 4, &mut rng);
        let c = classify(g.family(), 4, seed).unwrap();
        prop_assert!(c.is_geometry && c.is_partition && c.identity_holds);
    }

    #[test]
    fn random_families_classify_consistently(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = rng_from_seed(seed);
        let f = random_family(n, rng.gen_range(0.2..0.9), &mut rng);
        prop_assert!(classify(&f, 4, seed).unwrap().agree());
    }

    #[test]
    fn per_interval_factorization(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = rng_from_seed(seed);
        let g = random_circuit_geometry(n, 6, 4, &mut rng);
        let w = ExactWeights::random(n, &mut rng);
        for (ex, a) in interval_cover(g.family()).pairs {
            let direct = ex
                .interval(a)
                .map(|d| product_term(w.ps(), d, d))
                .fold(num_rational::BigRational::from_integer(0.into()), |acc, t| acc + t);
            prop_assert_eq!(direct, product_term(w.ps(), a, ex));
        }
    }

    #[test]
    fn indicator_weights_count_intervals(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = rng_from_seed(seed);
        let f = random_family(n, 0.5, &mut rng);
        let counts = coverage_counts(&f).unwrap();
        for d in ElementSet::full(n).subsets() {
            let p: Vec<i64> = (0..n).map(|i| i64::from(!d.contains(i))).collect();
            prop_assert_eq!(
                prunix::identity::identity_sum_with(&f, &p),
                i64::from(counts[d.bits() as usize])
            );
        }
    }

    #[test]
    fn float_and_exact_sums(seed in any::<u64>(), n in 1usize..=8) {
        let mut rng = rng_from_seed(seed);
        let g = random_circuit_geometry(n, 8, 4, &mut rng);
        let w = WeightVector::random(n, &mut rng);
        prop_assert!((identity_sum(g.family(), &w) - 1.0).abs() < TOLERANCE);
        prop_assert!(identity_sum_exact(g.family(), &w.to_exact()).is_one());
        let d = pi2_exact(&g, &w).unwrap();
        prop_assert!((d.probabilities().iter().sum::<f64>() - 1.0).abs() < TOLERANCE);
    }

    #[test]
    fn expectation_of_closure_invariant_functions(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = rng_from_seed(seed);
        let g = random_circuit_geometry(n, 6, 4, &mut rng);
        let w = WeightVector::random(n, &mut rng);
        let weights: Vec<f64> = (0..1 << n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let f = |d: ElementSet| weights[g.closure(d).bits() as usize];
        let (l, r) = expectation_check(&g, &w, f).unwrap();
        prop_assert!((l - r).abs() < TOLERANCE);
    }
}

#[test]
fn all_families_on_three_points_containing_e() {
    let g = GroundSet::letters(3);
    let top = 7u32;
    let mut seen = 0;
    for bits in 0u32..128 {
        let members = (0..7u32)
            .filter(|s| bits >> s & 1 == 1)
            .chain([top])
            .map(ElementSet::from_bits);
        let f = SetFamily::new(g.clone(), members.collect::<Vec<_>>());
        let c = classify(&f, 8, u64::from(bits)).unwrap();
        assert!(c.agree(), "{f:?}: {c:?}");
        assert_eq!(c.is_geometry, check_convex_geometry(&f).holds());
        assert_eq!(c.is_partition, verify_interval_partition(&f).unwrap().holds());
        seen += 1;
    }
    assert_eq!(seen, 128);
}

#[test]
fn closure_pushforward_matches_pi2() {
    let mut rng = rng_from_seed(2024);
    for _ in 0..3 {
        let n = rng.gen_range(2..=6);
        let g = random_circuit_geometry(n, 5, 3, &mut rng);
        let w = WeightVector::random(n, &mut rng);
        let exact = pi2_exact(&g, &w).unwrap();
        let empirical = pushforward_empirical(&g, &w, 100_000, rng.gen()).unwrap();
        assert!(exact.total_variation(&empirical) < 0.01);
    }
}

#[test]
fn exact_identity_fails_off_geometries() {
    let g = GroundSet::letters(2);
    let f = SetFamily::new(g.clone(), [ElementSet::empty(), g.full()]);
    let mut rng = rng_from_seed(0);
    let w = ExactWeights::random(2, &mut rng);
    assert!(!identity_sum_exact(&f, &w).is_one());
}
