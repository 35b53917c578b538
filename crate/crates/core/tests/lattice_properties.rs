use proptest::prelude::*;
use prunix::geometry::{check_convex_geometry, generate_from_circuits};
use prunix::identity::rng_from_seed;
use prunix::lattice::{
    build_lattice, is_distributive, is_k_distributive, is_meet_distributive, ClosedSetLattice,
};
use prunix::random::{random_circuit_geometry, random_family, random_rooted_sets};
use prunix::{ElementSet, GroundSet, RootedSet, SetFamily};
use rand::Rng;

/// Closes a family under intersection and adds `E`.
fn meet_closure(f: &SetFamily) -> SetFamily {
    let mut members: Vec<ElementSet> = f.members().to_vec();
    members.push(f.top());
    loop {
        let mut grown = members.clone();
        for &a in &members {
            for &b in &members {
                grown.push(a & b);
            }
        }
        grown.sort_unstable();
        grown.dedup();
        if grown.len() == members.len() {
            return SetFamily::new(f.ground().clone(), grown);
        }
        members = grown;
    }
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(64) })]

    #[test]
    fn geometries_are_meet_distributive(seed in any::<u64>(), n in 1usize..=6) {
        let g = random_circuit_geometry(n, 6, 4, &mut rng_from_seed(seed));
        let l = build_lattice(&g).unwrap();
        prop_assert!(is_meet_distributive(&l).holds());
        let generic = ClosedSetLattice::from_family(g.family()).unwrap();
        prop_assert_eq!(generic.covers(), l.covers());
    }

    #[test]
    fn meet_distributivity_characterizes_geometries(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = rng_from_seed(seed);
        let f = meet_closure(&random_family(n, rng.gen_range(0.1..0.6), &mut rng));
        let l = ClosedSetLattice::from_family(&f).unwrap();
        prop_assert_eq!(is_meet_distributive(&l).holds(), check_convex_geometry(&f).holds());
    }

    #[test]
    fn rooted_pairs_give_distributive_lattices(seed in any::<u64>(), n in 1usize..=7) {
        let mut rng = rng_from_seed(seed);
        let count = rng.gen_range(0..=8);
        let rooted = random_rooted_sets(n, count, 2, 2, &mut rng);
        let g = generate_from_circuits(&rooted, &GroundSet::letters(n)).unwrap();
        prop_assert!(is_distributive(&build_lattice(&g).unwrap()).unwrap().holds());
    }

    #[test]
    fn k_distributivity_is_monotone(seed in any::<u64>(), n in 1usize..=5) {
        let g = random_circuit_geometry(n, 5, 4, &mut rng_from_seed(seed));
        let l = build_lattice(&g).unwrap();
        let verdicts: Vec<bool> = (1..=3).map(|k| is_k_distributive(&l, k).unwrap().holds()).collect();
        prop_assert_eq!(verdicts[0], is_distributive(&l).unwrap().holds());
        prop_assert!(!verdicts[0] || verdicts[1]);
        prop_assert!(!verdicts[1] || verdicts[2]);
    }

    #[test]
    fn small_circuits_bound_distributivity(seed in any::<u64>(), n in 1usize..=6, size in 2usize..=4) {
        let mut rng = rng_from_seed(seed);
        let count = rng.gen_range(0..=6);
        let rooted = random_rooted_sets(n, count, 2, size, &mut rng);
        let g = generate_from_circuits(&rooted, &GroundSet::letters(n)).unwrap();
        let circuits = prunix::geometry::rooted_circuits(&g).unwrap();
        let largest = circuits.iter().map(|c| c.set().len()).max().unwrap_or(2).max(2);
        let l = build_lattice(&g).unwrap();
        prop_assert!(is_k_distributive(&l, largest - 1).unwrap().holds());
    }
}

/// Disjoint chains with `x_i` forcing `x_{i+1}`; closed sets are unions of
/// suffixes, so the lattice should be the product of chains of the given lengths.
fn chains_geometry(lengths: &[usize]) -> (GroundSet, Vec<RootedSet>, Vec<Vec<usize>>) {
    let n: usize = lengths.iter().sum();
    let mut chains = Vec::new();
    let mut rooted = Vec::new();
    let mut next = 0;
    for &len in lengths {
        let chain: Vec<usize> = (next..next + len).collect();
        for w in chain.windows(2) {
            rooted.push(RootedSet::new(ElementSet::from_indices([w[0], w[1]]), w[1]).unwrap());
        }
        next += len;
        chains.push(chain);
    }
    (GroundSet::letters(n), rooted, chains)
}

#[test]
fn distributive_catalog_arises_from_rooted_pairs() {
    // Chains, products of chains, and Boolean lattices up to rank 3.
    let catalog: &[&[usize]] = &[&[1], &[2], &[3], &[4], &[2, 1], &[2, 2], &[3, 2], &[1, 1], &[1, 1, 1]];
    for lengths in catalog {
        let (ground, rooted, chains) = chains_geometry(lengths);
        let g = generate_from_circuits(&rooted, &ground).unwrap();
        let l = build_lattice(&g).unwrap();
        assert!(is_distributive(&l).unwrap().holds());
        let coords = |s: ElementSet| -> Vec<usize> {
            chains.iter().map(|c| c.iter().filter(|&&v| s.contains(v)).count()).collect()
        };
        let expected: usize = lengths.iter().map(|&len| len + 1).product();
        assert_eq!(l.len(), expected, "{lengths:?}");
        let mut images: Vec<Vec<usize>> = l.elements().iter().map(coords).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), expected);
        for a in l.elements().iter() {
            for b in l.elements().iter() {
                let le = coords(a).iter().zip(coords(b)).all(|(x, y)| *x <= y);
                assert_eq!(a.is_subset(b), le);
            }
        }
    }
}

#[test]
fn size_three_circuits_break_distributivity() {
    let g = GroundSet::letters(3);
    let geo = generate_from_circuits(&[RootedSet::new(g.full(), 1).unwrap()], &g).unwrap();
    let l = build_lattice(&geo).unwrap();
    assert!(!is_distributive(&l).unwrap().holds());
    assert!(is_k_distributive(&l, 2).unwrap().holds());
}
