//! Interval partitions of the Boolean lattice and the weight identity
//!
//! ```text
//!   Σ_{A ∈ 𝒩}  Π_{i ∉ A} p_i  Π_{j ∈ ex(A)} q_j  = 1,     p_i + q_i = 1,
//! ```
//!
//! which holds exactly when `𝒩` is the family of closed sets of a convex
//! geometry, exactly when the intervals `[ex(A), A]` partition `2^E`.
//! Also the product distribution `π₁` on subsets and its closure
//! pushforward `π₂` on closed sets.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::geometry::{check_convex_geometry, excludable_unchecked, ConvexGeometry};
use crate::report::{Axiom, AxiomReport, Witness};
use crate::sets::{ensure_enumerable, ElementSet, GroundSet, SetFamily, MAX_ENUMERATION};

/// Tolerance for floating-point evaluations of the identity.
pub const TOLERANCE: f64 = 1e-12;

/// Random weights are drawn from this range.
pub const WEIGHT_RANGE: (f64, f64) = (0.05, 0.95);

/// The seedable generator used for every random draw in the crate.
pub type PortableRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> PortableRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Per-element deletion probabilities `p`; `q = 1 − p` is derived, never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector {
    p: Vec<f64>,
}

impl WeightVector {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if let Some(bad) = p.iter().find(|x| !(0.0..=1.0).contains(*x)) {
            return Err(Error::InvalidWeight(format!("{bad} is outside [0, 1]")));
        }
        Ok(WeightVector { p })
    }

    pub fn uniform(n: usize, p: f64) -> Result<Self> {
        Self::new(vec![p; n])
    }

    /// `p_a = 0` for `a ∈ d` and `1` elsewhere.
    pub fn indicator(n: usize, d: ElementSet) -> Self {
        WeightVector {
            p: (0..n).map(|i| if d.contains(i) { 0.0 } else { 1.0 }).collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        WeightVector {
            p: (0..n)
                .map(|_| rng.gen_range(WEIGHT_RANGE.0..=WEIGHT_RANGE.1))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn p(&self, i: usize) -> f64 {
        self.p[i]
    }

    pub fn q(&self, i: usize) -> f64 {
        1.0 - self.p[i]
    }

    pub fn ps(&self) -> &[f64] {
        &self.p
    }

    /// `label=value` pairs separated by commas, or one bare value for all elements.
    pub fn parse(ground: &GroundSet, text: &str) -> Result<Self> {
        let text = text.trim();
        if !text.contains('=') {
            let p = parse_prob(text)?;
            return Self::uniform(ground.len(), p);
        }
        let mut map = HashMap::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (label, value) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidWeight(format!("expected label=value, got {part:?}")))?;
            map.insert(ground.index_of(label.trim())?, parse_prob(value)?);
        }
        Self::from_index_map(ground, &map)
    }

    /// `{"p": {"a": 0.3, ...}}`.
    pub fn from_json(ground: &GroundSet, text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Doc {
            p: HashMap<String, f64>,
        }
        let doc: Doc = serde_json::from_str(text)?;
        let map = doc
            .p
            .iter()
            .map(|(l, &v)| Ok((ground.index_of(l)?, v)))
            .collect::<Result<HashMap<_, _>>>()?;
        Self::from_index_map(ground, &map)
    }

    fn from_index_map(ground: &GroundSet, map: &HashMap<usize, f64>) -> Result<Self> {
        let p = (0..ground.len())
            .map(|i| {
                map.get(&i)
                    .copied()
                    .ok_or_else(|| Error::InvalidWeight(format!("no weight for {:?}", ground.label(i))))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(p)
    }

    /// The exact rational values of these doubles.
    pub fn to_exact(&self) -> ExactWeights {
        ExactWeights {
            p: self
                .p
                .iter()
                .map(|&x| BigRational::from_float(x).expect("weights are finite"))
                .collect(),
        }
    }
}

fn parse_prob(text: &str) -> Result<f64> {
    text.trim()
        .parse::<f64>()
        .map_err(|e| Error::InvalidWeight(format!("{text:?}: {e}")))
}

/// Exact rational weights.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactWeights {
    p: Vec<BigRational>,
}

impl ExactWeights {
    pub fn new(p: Vec<BigRational>) -> Result<Self> {
        if p.iter().any(|x| *x < BigRational::zero() || *x > BigRational::one()) {
            return Err(Error::InvalidWeight("exact weight outside [0, 1]".into()));
        }
        Ok(ExactWeights { p })
    }

    /// `k / 1000` with `k` uniform in `50..=950`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let den = BigInt::from(1000);
        ExactWeights {
            p: (0..n)
                .map(|_| BigRational::new(BigInt::from(rng.gen_range(50..=950)), den.clone()))
                .collect(),
        }
    }

    pub fn ps(&self) -> &[BigRational] {
        &self.p
    }
}

/// `Π_{i ∉ a} p_i · Π_{j ∈ ex} q_j` over a ground set of size `p.len()`, in index order.
pub fn product_term<T: Num + Clone>(p: &[T], a: ElementSet, ex: ElementSet) -> T {
    let n = p.len();
    let absent = a
        .complement(n)
        .iter()
        .fold(T::one(), |acc, i| acc * p[i].clone());
    ex.iter()
        .fold(absent, |acc, j| acc * (T::one() - p[j].clone()))
}

/// Pairwise summation in a fixed tree shape; bit-stable for a given input order.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        len if len <= 8 => xs.iter().sum(),
        len => {
            let (l, r) = xs.split_at(len / 2);
            pairwise_sum(l) + pairwise_sum(r)
        }
    }
}

/// The pairs `(ex(A), A)` for every member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalCover {
    pub pairs: Vec<(ElementSet, ElementSet)>,
}

pub fn interval_cover(f: &SetFamily) -> IntervalCover {
    IntervalCover {
        pairs: f
            .iter()
            .map(|a| (excludable_unchecked(f, a), a))
            .collect(),
    }
}

/// The identity's left-hand side, evaluated in any commutative ring.
pub fn identity_sum_with<T: Num + Clone>(f: &SetFamily, p: &[T]) -> T {
    assert_eq!(p.len(), f.n(), "one weight per ground element");
    interval_cover(f)
        .pairs
        .into_iter()
        .fold(T::zero(), |acc, (ex, a)| acc + product_term(p, a, ex))
}

/// The identity's left-hand side in double precision (pairwise summation
/// over members in canonical order).
pub fn identity_sum(f: &SetFamily, w: &WeightVector) -> f64 {
    assert_eq!(w.len(), f.n(), "one weight per ground element");
    let terms: Vec<f64> = interval_cover(f)
        .pairs
        .iter()
        .map(|&(ex, a)| product_term(w.ps(), a, ex))
        .collect();
    pairwise_sum(&terms)
}

pub fn identity_sum_exact(f: &SetFamily, w: &ExactWeights) -> BigRational {
    identity_sum_with(f, w.ps())
}

/// The unique member `A` with `ex(A) ⊆ d ⊆ A`.
pub fn phi(f: &SetFamily, d: ElementSet) -> Result<ElementSet> {
    let mut hits = interval_cover(f)
        .pairs
        .into_iter()
        .filter(|&(ex, a)| ex.is_subset(d) && d.is_subset(a))
        .map(|(_, a)| a);
    match (hits.next(), hits.next()) {
        (Some(a), None) => Ok(a),
        (None, _) => Err(Error::NoCoveringInterval(d)),
        (Some(first), Some(second)) => Err(Error::MultipleCoveringIntervals {
            set: d,
            first,
            second,
        }),
    }
}

/// How many intervals `[ex(A), A]` contain each subset, indexed by bitmask.
pub fn coverage_counts(f: &SetFamily) -> Result<Vec<u32>> {
    ensure_enumerable(f.n(), MAX_ENUMERATION)?;
    let mut counts = vec![0u32; 1 << f.n()];
    for (ex, a) in interval_cover(f).pairs {
        for d in ex.interval(a) {
            counts[d.bits() as usize] += 1;
        }
    }
    Ok(counts)
}

/// Checks that every `D ⊆ E` lies in exactly one interval; the witness is
/// the canonically first offending `D`.
pub fn verify_interval_partition(f: &SetFamily) -> Result<AxiomReport> {
    let counts = coverage_counts(f)?;
    let mut report = AxiomReport::default();
    let bad = f
        .top()
        .subsets()
        .filter(|d| counts[d.bits() as usize] != 1)
        .min();
    if let Some(d) = bad {
        report.push(
            Axiom::IntervalPartition,
            Witness::Coverage {
                set: d,
                count: counts[d.bits() as usize] as usize,
            },
        );
    }
    Ok(report)
}

/// Three verdicts that agree exactly when the family is a convex geometry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_geometry: bool,
    pub is_partition: bool,
    pub identity_holds: bool,
}

impl Classification {
    pub fn agree(&self) -> bool {
        self.is_geometry == self.is_partition && self.is_partition == self.identity_holds
    }
}

/// Evaluates the three conditions independently: the axioms N1–N3; exact
/// interval coverage of `2^E`; and the identity, in exact arithmetic, at the
/// 0/1 indicator weights of every `D ⊆ E` plus `trials` random rational weights.
pub fn classify(f: &SetFamily, trials: usize, seed: u64) -> Result<Classification> {
    ensure_enumerable(f.n(), 16)?;
    let n = f.n();
    let is_geometry = check_convex_geometry(f).holds();
    let is_partition = verify_interval_partition(f)?.holds();

    let indicators_hold = ElementSet::full(n).subsets().par_bridge().all(|d| {
        let p: Vec<i64> = (0..n).map(|i| i64::from(!d.contains(i))).collect();
        identity_sum_with(f, &p) == 1
    });
    let mut rng = rng_from_seed(seed);
    let identity_holds = indicators_hold
        && (0..trials).all(|_| identity_sum_exact(f, &ExactWeights::random(n, &mut rng)).is_one());
    Ok(Classification {
        is_geometry,
        is_partition,
        identity_holds,
    })
}

/// Keeps each element independently with probability `q_e`.
pub fn sample_pi1_with<R: Rng + ?Sized>(w: &WeightVector, rng: &mut R) -> ElementSet {
    (0..w.len()).filter(|&i| rng.gen::<f64>() >= w.p(i)).collect()
}

pub fn sample_pi1(w: &WeightVector, seed: u64) -> ElementSet {
    sample_pi1_with(w, &mut rng_from_seed(seed))
}

/// A finite distribution on members of a family.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution {
    support: SetFamily,
    prob: Vec<f64>,
}

impl Distribution {
    /// Rejects negative masses and totals further than [`TOLERANCE`] from 1.
    pub fn new(support: SetFamily, prob: Vec<f64>) -> Result<Self> {
        assert_eq!(support.len(), prob.len());
        if prob.iter().any(|&x| x < 0.0) {
            return Err(Error::InvalidWeight("negative probability".into()));
        }
        let total = pairwise_sum(&prob);
        if (total - 1.0).abs() > TOLERANCE {
            return Err(Error::InvalidWeight(format!("probabilities sum to {total}")));
        }
        Ok(Distribution { support, prob })
    }

    pub fn support(&self) -> &SetFamily {
        &self.support
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.prob
    }

    pub fn prob_of(&self, a: ElementSet) -> f64 {
        self.support.position(a).map_or(0.0, |i| self.prob[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (ElementSet, f64)> + '_ {
        self.support.iter().zip(self.prob.iter().copied())
    }

    pub fn total_variation(&self, other: &Distribution) -> f64 {
        let mut keys: Vec<ElementSet> = self.support.iter().chain(other.support.iter()).collect();
        keys.sort_unstable();
        keys.dedup();
        0.5 * keys
            .iter()
            .map(|&k| (self.prob_of(k) - other.prob_of(k)).abs())
            .sum::<f64>()
    }
}

/// `Pr(A) = Π_{i ∉ A} p_i · Π_{j ∈ ex(A)} q_j` on the closed sets.
pub fn pi2_exact(g: &ConvexGeometry, w: &WeightVector) -> Result<Distribution> {
    let f = g.family();
    let prob = interval_cover(f)
        .pairs
        .iter()
        .map(|&(ex, a)| product_term(w.ps(), a, ex))
        .collect();
    Distribution::new(f.clone(), prob)
}

/// Empirical distribution of `τ(X)` for `samples` draws `X ~ π₁`.
pub fn pushforward_empirical(
    g: &ConvexGeometry,
    w: &WeightVector,
    samples: usize,
    seed: u64,
) -> Result<Distribution> {
    let mut rng = rng_from_seed(seed);
    let mut counts = vec![0u64; g.family().len()];
    for _ in 0..samples {
        let c = g.closure(sample_pi1_with(w, &mut rng));
        counts[g.family().position(c).expect("closures are closed")] += 1;
    }
    let prob = counts
        .iter()
        .map(|&c| c as f64 / samples as f64)
        .collect();
    Distribution::new(g.family().clone(), prob)
}

/// `(E_{π₁}[f], E_{π₂}[f])` as exact finite sums, after checking that `f`
/// is constant on closure classes.
pub fn expectation_check<F>(g: &ConvexGeometry, w: &WeightVector, f: F) -> Result<(f64, f64)>
where
    F: Fn(ElementSet) -> f64 + Sync,
{
    ensure_enumerable(g.n(), MAX_ENUMERATION)?;
    let all: Vec<ElementSet> = g.ground().full().subsets().collect();
    if let Some(&d) = all.iter().find(|&&d| f(d) != f(g.closure(d))) {
        return Err(Error::NotClosureInvariant {
            set: d,
            closure: g.closure(d),
        });
    }
    let lhs_terms: Vec<f64> = all
        .par_iter()
        .map(|&d| f(d) * product_term(w.ps(), d, d))
        .collect();
    let rhs_terms: Vec<f64> = interval_cover(g.family())
        .pairs
        .iter()
        .map(|&(ex, a)| f(a) * product_term(w.ps(), a, ex))
        .collect();
    Ok((pairwise_sum(&lhs_terms), pairwise_sum(&rhs_terms)))
}
