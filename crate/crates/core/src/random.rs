//! Seeded instance generators for property corpora. Each takes the RNG
//! explicitly, so a corpus is reproducible from its seed.

use rand::seq::index::sample;
use rand::Rng;

use crate::geometry::{generate_from_circuits, ConvexGeometry};
use crate::pruning::Graph;
use crate::sat::CnfFormula;
use crate::sets::{ElementSet, GroundSet, RootedSet, SetFamily};

/// A uniformly random `size`-subset of `0..n` with a uniform root inside it.
pub fn random_rooted_set<R: Rng + ?Sized>(n: usize, size: usize, rng: &mut R) -> RootedSet {
    let set: ElementSet = sample(rng, n, size).into_iter().collect();
    let root = set
        .iter()
        .nth(rng.gen_range(0..size))
        .expect("size is positive");
    RootedSet::new(set, root).expect("root drawn from the set")
}

/// `count` rooted sets with sizes uniform in `min_size..=max_size` (capped at `n`).
pub fn random_rooted_sets<R: Rng + ?Sized>(
    n: usize,
    count: usize,
    min_size: usize,
    max_size: usize,
    rng: &mut R,
) -> Vec<RootedSet> {
    let hi = max_size.min(n);
    let lo = min_size.clamp(1, hi.max(1));
    if n == 0 {
        return Vec::new();
    }
    (0..count)
        .map(|_| {
            let size = rng.gen_range(lo..=hi);
            random_rooted_set(n, size, rng)
        })
        .collect()
}

/// Geometry on `a, b, …` generated by up to `max_circuits` random rooted sets.
pub fn random_circuit_geometry<R: Rng + ?Sized>(
    n: usize,
    max_circuits: usize,
    max_size: usize,
    rng: &mut R,
) -> ConvexGeometry {
    let count = rng.gen_range(0..=max_circuits);
    let rooted = random_rooted_sets(n, count, 2, max_size, rng);
    generate_from_circuits(&rooted, &GroundSet::letters(n)).expect("small ground set")
}

/// Each subset of `{a, b, …}` included independently with probability `density`.
pub fn random_family<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> SetFamily {
    let ground = GroundSet::letters(n);
    let members: Vec<ElementSet> = ground
        .full()
        .subsets()
        .filter(|_| rng.gen_bool(density))
        .collect();
    SetFamily::new(ground, members)
}

/// Erdős–Rényi graph on `a, b, …`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, edge_prob: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(GroundSet::letters(n), &edges).expect("simple graph")
}

fn random_clause<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Vec<i32> {
    sample(rng, n, k)
        .into_iter()
        .map(|v| {
            let lit = v as i32 + 1;
            if rng.gen_bool(0.5) {
                lit
            } else {
                -lit
            }
        })
        .collect()
}

/// `m` clauses of `k` distinct variables with uniform signs.
pub fn random_kcnf<R: Rng + ?Sized>(n: usize, m: usize, k: usize, rng: &mut R) -> CnfFormula {
    let clauses = (0..m).map(|_| random_clause(n, k, rng)).collect();
    CnfFormula::new(n, clauses).expect("clauses use distinct variables")
}

/// Like [`random_kcnf`], but clauses violated by a uniformly random planted
/// assignment are redrawn; returns the formula and the planted assignment.
pub fn random_planted_kcnf<R: Rng + ?Sized>(
    n: usize,
    m: usize,
    k: usize,
    rng: &mut R,
) -> (CnfFormula, Vec<bool>) {
    let planted: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let satisfied = |c: &[i32]| {
        c.iter()
            .any(|&l| planted[l.unsigned_abs() as usize - 1] == (l > 0))
    };
    let clauses = (0..m)
        .map(|_| loop {
            let c = random_clause(n, k, rng);
            if satisfied(&c) {
                break c;
            }
        })
        .collect();
    (
        CnfFormula::new(n, clauses).expect("clauses use distinct variables"),
        planted,
    )
}
