//! Convex geometries and antimatroids: axiom checks, closure, extreme
//! points, duality, and generation from rooted circuits or rooted paths.

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::report::{Axiom, AxiomReport, Witness};
use crate::sets::{
    ensure_enumerable, ElementSet, GroundSet, RootedSet, SetFamily, SimpleWord, MAX_ENUMERATION,
};

/// Checks N1 (`E` closed), N2 (intersection closure, every pair) and N3
/// (accessibility from the top). Reports the first witness of each failure.
pub fn check_convex_geometry(f: &SetFamily) -> AxiomReport {
    let mut report = AxiomReport::default();
    let top = f.top();
    if !f.contains(top) {
        report.push(Axiom::N1, Witness::Sets(vec![top]));
    }

    let members = f.members();
    let n2 = (0..members.len()).into_par_iter().find_map_first(|i| {
        members[i + 1..]
            .iter()
            .find(|&&b| !f.contains(members[i] & b))
            .map(|&b| vec![members[i], b, members[i] & b])
    });
    if let Some(w) = n2 {
        report.push(Axiom::N2, Witness::Sets(w));
    }

    let n3 = f.iter().find(|&a| {
        a != top
            && !a
                .complement(f.n())
                .iter()
                .any(|x| f.contains(a.with(x)))
    });
    if let Some(a) = n3 {
        report.push(Axiom::N3, Witness::Sets(vec![a]));
    }
    report
}

/// `ex(A) = {a ∈ A : A − a ∈ f}`, the excludable elements of a member.
pub fn excludable(f: &SetFamily, a: ElementSet) -> Result<ElementSet> {
    if !f.contains(a) {
        return Err(Error::NotInFamily(a));
    }
    Ok(excludable_unchecked(f, a))
}

pub(crate) fn excludable_unchecked(f: &SetFamily, a: ElementSet) -> ElementSet {
    a.iter().filter(|&x| f.contains(a.without(x))).collect()
}

/// Complements every member.
pub fn dual(f: &SetFamily) -> SetFamily {
    let n = f.n();
    f.map(|m| m.complement(n))
}

/// A family of closed sets satisfying N1–N3.
#[derive(Clone)]
pub struct ConvexGeometry {
    family: SetFamily,
    closure_table: OnceLock<Vec<ElementSet>>,
}

impl ConvexGeometry {
    pub fn new(family: SetFamily) -> Result<Self> {
        let report = check_convex_geometry(&family);
        if !report.holds() {
            return Err(Error::NotAConvexGeometry(report.describe(family.ground())));
        }
        Ok(Self::from_valid(family))
    }

    pub(crate) fn from_valid(family: SetFamily) -> Self {
        debug_assert!(check_convex_geometry(&family).holds());
        ConvexGeometry {
            family,
            closure_table: OnceLock::new(),
        }
    }

    /// The free geometry `2^E`.
    pub fn free(ground: &GroundSet) -> Result<Self> {
        Ok(Self::from_valid(crate::sets::boolean_lattice(ground)?))
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn ground(&self) -> &GroundSet {
        self.family.ground()
    }

    pub fn n(&self) -> usize {
        self.family.n()
    }

    pub fn is_closed(&self, a: ElementSet) -> bool {
        self.family.contains(a)
    }

    /// The smallest closed set, i.e. the intersection of all closed sets.
    pub fn bottom(&self) -> ElementSet {
        self.family.members()[0]
    }

    /// `τ(A)`: the intersection of all closed supersets of `A`.
    pub fn closure(&self, a: ElementSet) -> ElementSet {
        match self.table() {
            Some(t) => t[a.bits() as usize],
            None => self
                .family
                .iter()
                .filter(|&c| a.is_subset(c))
                .fold(self.family.top(), |acc, c| acc & c),
        }
    }

    /// Extreme points of a closed set.
    pub fn extreme_points(&self, a: ElementSet) -> Result<ElementSet> {
        excludable(&self.family, a)
    }

    /// `A` is free iff `ex(τ(A)) = A`.
    pub fn is_free(&self, a: ElementSet) -> bool {
        excludable_unchecked(&self.family, self.closure(a)) == a
    }

    /// Closure of every subset, indexed by bitmask; `None` above the enumeration limit.
    pub fn table(&self) -> Option<&[ElementSet]> {
        if self.n() > MAX_ENUMERATION {
            return None;
        }
        Some(self.closure_table.get_or_init(|| {
            // The intervals [ex(A), A] partition 2^E and τ is constant A on each.
            let mut t = vec![ElementSet::empty(); 1 << self.n()];
            for a in self.family.iter() {
                for d in excludable_unchecked(&self.family, a).interval(a) {
                    t[d.bits() as usize] = a;
                }
            }
            t
        }))
    }

    /// Feasible sets of the corresponding antimatroid.
    pub fn to_antimatroid(&self) -> Antimatroid {
        Antimatroid {
            feasible: dual(&self.family),
        }
    }
}

impl std::fmt::Debug for ConvexGeometry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_tuple("ConvexGeometry").field(&self.family).finish()
    }
}

impl PartialEq for ConvexGeometry {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
    }
}

/// Closure of an arbitrary family: `τ(A)` as the intersection of all members
/// containing `A`, or `None` when no member contains `A`.
pub fn closure_in(f: &SetFamily, a: ElementSet) -> Option<ElementSet> {
    f.iter()
        .filter(|&c| a.is_subset(c))
        .reduce(|acc, c| acc & c)
}

/// An antimatroid given by its feasible sets.
#[derive(Clone, Debug, PartialEq)]
pub struct Antimatroid {
    feasible: SetFamily,
}

impl Antimatroid {
    /// Accepts `F` iff `{E − F}` is a convex geometry.
    pub fn from_feasible(feasible: SetFamily) -> Result<Self> {
        ConvexGeometry::new(dual(&feasible))?;
        Ok(Antimatroid { feasible })
    }

    pub fn feasible(&self) -> &SetFamily {
        &self.feasible
    }

    pub fn to_geometry(&self) -> ConvexGeometry {
        ConvexGeometry::from_valid(dual(&self.feasible))
    }

    /// Words all of whose prefixes have feasible support.
    pub fn words(&self, budget: usize) -> Result<Vec<SimpleWord>> {
        feasible_language(&self.feasible, budget)
    }
}

/// The language of simple words every prefix of which (including the empty
/// prefix) has its support in `f`. Empty if `∅ ∉ f`.
pub fn feasible_language(f: &SetFamily, budget: usize) -> Result<Vec<SimpleWord>> {
    let mut out = Vec::new();
    if !f.contains(ElementSet::empty()) {
        return Ok(out);
    }
    let mut stack = vec![SimpleWord::empty()];
    while let Some(w) = stack.pop() {
        let support = w.support();
        for x in support.complement(f.n()).iter() {
            if f.contains(support.with(x)) {
                stack.push(w.extended(x).expect("x is outside the support"));
            }
        }
        out.push(w);
        if out.len() > budget {
            return Err(Error::StateSpaceTooLarge(budget));
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Checks L1–L3 literally on an explicit finite language.
pub fn check_antimatroid_words(words: &[SimpleWord], ground: &GroundSet) -> Result<AxiomReport> {
    for w in words {
        if let Some(&bad) = w.letters().iter().find(|&&l| l >= ground.len()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: ground.len(),
            });
        }
    }
    let mut lang: Vec<&SimpleWord> = words.iter().collect();
    lang.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    lang.dedup();
    let set: HashSet<&[usize]> = lang.iter().map(|w| w.letters()).collect();
    let mut report = AxiomReport::default();

    // L1: every beginning section is in the language.
    let l1 = lang.iter().find_map(|w| {
        (0..w.len())
            .find(|&k| !set.contains(&w.letters()[..k]))
            .map(|k| vec![(*w).clone(), w.prefix(k)])
    });
    if let Some(ws) = l1 {
        report.push(Axiom::L1, Witness::Words(ws));
    }

    // L2: if |α| > |β| then some letter x of α has βx in the language.
    let l2 = lang.iter().find_map(|alpha| {
        lang.iter()
            .take_while(|beta| beta.len() < alpha.len())
            .find(|beta| {
                !alpha.letters().iter().any(|&x| {
                    beta.extended(x)
                        .is_some_and(|bx| set.contains(bx.letters()))
                })
            })
            .map(|beta| vec![(*alpha).clone(), (*beta).clone()])
    });
    if let Some(ws) = l2 {
        report.push(Axiom::L2, Witness::Words(ws));
    }

    // L3: αx and αβ in the language with x ∉ β force αβx.
    let l3 = lang.iter().filter(|w| !w.is_empty()).find_map(|ax| {
        let k = ax.len() - 1;
        let alpha = &ax.letters()[..k];
        let x = ax.letters()[k];
        lang.iter()
            .filter(|ab| ab.len() >= k && &ab.letters()[..k] == alpha)
            .find(|ab| {
                !ab.letters()[k..].contains(&x)
                    && !ab.extended(x).is_some_and(|w| set.contains(w.letters()))
            })
            .map(|ab| vec![(*ax).clone(), (*ab).clone()])
    });
    if let Some(ws) = l3 {
        report.push(Axiom::L3, Witness::Words(ws));
    }
    Ok(report)
}

/// Is `f` the feasible-set family of an antimatroid? Rebuilds the word
/// language from `f`, checks L1–L3 on it, requires the empty word, and
/// requires the supports of the words to be exactly `f`.
pub fn check_antimatroid_family(f: &SetFamily, budget: usize) -> Result<AxiomReport> {
    let words = feasible_language(f, budget)?;
    let mut report = check_antimatroid_words(&words, f.ground())?;
    if words.is_empty() {
        report.push(Axiom::L1, Witness::Words(vec![SimpleWord::empty()]));
    }
    let supports: HashSet<ElementSet> = words.iter().map(SimpleWord::support).collect();
    if let Some(m) = f.iter().find(|m| !supports.contains(m)) {
        report.push(Axiom::Supports, Witness::Sets(vec![m]));
    }
    Ok(report)
}

fn check_rooted(rooted: &[RootedSet], ground: &GroundSet) -> Result<()> {
    let full = ground.full();
    for r in rooted {
        if !r.set().is_subset(full) {
            return Err(Error::IndexOutOfRange {
                index: r.set().iter().last().unwrap_or(0),
                size: ground.len(),
            });
        }
    }
    Ok(())
}

fn is_full(s: ElementSet, rooted: &[RootedSet]) -> bool {
    rooted
        .iter()
        .all(|r| s.contains(r.root()) || !r.stem().is_subset(s))
}

/// All `S` such that no rooted set has its root as the only element missing from `S`.
pub fn full_sets(rooted: &[RootedSet], ground: &GroundSet) -> Result<SetFamily> {
    ensure_enumerable(ground.len(), MAX_ENUMERATION)?;
    check_rooted(rooted, ground)?;
    Ok(SetFamily::new(
        ground.clone(),
        ground.full().subsets().filter(|&s| is_full(s, rooted)),
    ))
}

/// Members of `candidates` reachable from `E` by one-element removals
/// through members of `candidates`.
fn accessible_from_top(n: usize, candidate: impl Fn(ElementSet) -> bool) -> Vec<ElementSet> {
    let top = ElementSet::full(n);
    let mut out = Vec::new();
    if !candidate(top) {
        return out;
    }
    let mut seen = vec![false; 1 << n];
    let mut queue = VecDeque::from([top]);
    seen[top.bits() as usize] = true;
    while let Some(s) = queue.pop_front() {
        out.push(s);
        for x in s.iter() {
            let t = s.without(x);
            if !seen[t.bits() as usize] && candidate(t) {
                seen[t.bits() as usize] = true;
                queue.push_back(t);
            }
        }
    }
    out
}

/// The geometry of full sets accessible from `E` through full sets.
pub fn generate_from_circuits(rooted: &[RootedSet], ground: &GroundSet) -> Result<ConvexGeometry> {
    ensure_enumerable(ground.len(), MAX_ENUMERATION)?;
    check_rooted(rooted, ground)?;
    let closed = accessible_from_top(ground.len(), |s| is_full(s, rooted));
    Ok(ConvexGeometry::from_valid(SetFamily::new(
        ground.clone(),
        closed,
    )))
}

/// The geometry generated by rooted paths.
///
/// A set `R` of removed elements is path-full when every `e ∈ R` owns a path
/// `(P, e)` with `P ⊆ R`. Closed sets are the complements `E − R` of the
/// path-full sets reachable from `∅` by adding one element at a time through
/// path-full sets. Every element must own at least one path.
pub fn generate_from_paths(paths: &[RootedSet], ground: &GroundSet) -> Result<ConvexGeometry> {
    ensure_enumerable(ground.len(), MAX_ENUMERATION)?;
    check_rooted(paths, ground)?;
    let n = ground.len();
    if let Some(e) = (0..n).find(|&e| !paths.iter().any(|p| p.root() == e)) {
        return Err(Error::PathlessElement(ground.label(e).to_string()));
    }
    let path_full = |removed: ElementSet| {
        removed.iter().all(|e| {
            paths
                .iter()
                .any(|p| p.root() == e && p.set().is_subset(removed))
        })
    };
    // Walk the removed sets upward from ∅, i.e. the closed sets downward from E.
    let closed = accessible_from_top(n, |s| path_full(s.complement(n)));
    Ok(ConvexGeometry::from_valid(SetFamily::new(
        ground.clone(),
        closed,
    )))
}

/// Minimal non-free sets with their roots. The root of a circuit `C` is the
/// unique `a ∈ C` with `a ∈ τ(C − a)`.
pub fn rooted_circuits(g: &ConvexGeometry) -> Result<Vec<RootedSet>> {
    ensure_enumerable(g.n(), MAX_ENUMERATION)?;
    let n = g.n();
    let mut free = vec![false; 1 << n];
    for a in ElementSet::full(n).subsets() {
        free[a.bits() as usize] = g.is_free(a);
    }
    let mut out = Vec::new();
    let mut candidates: Vec<ElementSet> = ElementSet::full(n).subsets().collect();
    candidates.sort_unstable();
    for c in candidates {
        if free[c.bits() as usize] || !c.iter().all(|x| free[c.without(x).bits() as usize]) {
            continue;
        }
        let roots: Vec<usize> = c.iter().filter(|&a| g.closure(c.without(a)).contains(a)).collect();
        match roots.as_slice() {
            [root] => out.push(RootedSet::new(c, *root)?),
            _ => {
                return Err(Error::Inconsistent(format!(
                    "circuit {} has {} candidate roots",
                    g.ground().format_set(c),
                    roots.len()
                )))
            }
        }
    }
    Ok(out)
}
