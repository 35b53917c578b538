//! Removal processes given by a removability predicate, the pruning
//! property, and the graph and hypergraph rules that peel to a k-core or to
//! the identifiable vertices.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::geometry::ConvexGeometry;
use crate::report::{Axiom, AxiomReport, Witness};
use crate::sets::{
    ensure_enumerable, ElementSet, GroundSet, RootedSet, SetFamily, SimpleWord, MAX_ENUMERATION,
};

/// Cap on the number of words [`removal_words`] will produce.
pub const WORD_BUDGET: usize = 1_000_000;

/// A removal process: which element may be removed from the current set.
///
/// Implementations must be deterministic and are only asked about elements
/// of `current`.
pub trait RemovalRule: Sync {
    fn ground(&self) -> &GroundSet;

    fn removable(&self, current: ElementSet, element: usize) -> bool;

    fn removable_set(&self, current: ElementSet) -> ElementSet {
        current.iter().filter(|&e| self.removable(current, e)).collect()
    }
}

impl<R: RemovalRule + ?Sized> RemovalRule for &R {
    fn ground(&self) -> &GroundSet {
        (**self).ground()
    }

    fn removable(&self, current: ElementSet, element: usize) -> bool {
        (**self).removable(current, element)
    }
}

/// A rule backed by a closure.
pub struct FnRule<F> {
    ground: GroundSet,
    predicate: F,
}

impl<F: Fn(ElementSet, usize) -> bool + Sync> FnRule<F> {
    pub fn new(ground: GroundSet, predicate: F) -> Self {
        FnRule { ground, predicate }
    }
}

impl<F: Fn(ElementSet, usize) -> bool + Sync> RemovalRule for FnRule<F> {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn removable(&self, current: ElementSet, element: usize) -> bool {
        (self.predicate)(current, element)
    }
}

/// A simple undirected graph.
#[derive(Clone, Debug)]
pub struct Graph {
    vertices: GroundSet,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<ElementSet>,
}

impl Graph {
    pub fn new(vertices: GroundSet, edges: &[(usize, usize)]) -> Result<Self> {
        let n = vertices.len();
        let mut neighbors = vec![ElementSet::empty(); n];
        let mut list = Vec::new();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::IndexOutOfRange { index: w, size: n });
                }
            }
            if u == v {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("loop at vertex {:?}", vertices.label(u)),
                });
            }
            if !neighbors[u].contains(v) {
                neighbors[u] = neighbors[u].with(v);
                neighbors[v] = neighbors[v].with(u);
                list.push((u.min(v), u.max(v)));
            }
        }
        Ok(Graph {
            vertices,
            edges: list,
            neighbors,
        })
    }

    /// Builds a graph from label pairs; vertices are numbered in order of first appearance.
    pub fn from_labels<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let pairs: Vec<(usize, usize)> = edges
            .iter()
            .map(|(u, v)| (intern(&mut labels, u.as_ref()), intern(&mut labels, v.as_ref())))
            .collect();
        Graph::new(GroundSet::new(labels)?, &pairs)
    }

    pub fn vertices(&self) -> &GroundSet {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> ElementSet {
        self.neighbors[v]
    }

    pub fn degree_in(&self, v: usize, current: ElementSet) -> usize {
        (self.neighbors[v] & current).len()
    }
}

/// A hypergraph; every edge is a non-empty vertex set.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    vertices: GroundSet,
    edges: Vec<ElementSet>,
}

impl Hypergraph {
    pub fn new(vertices: GroundSet, edges: Vec<ElementSet>) -> Result<Self> {
        let full = vertices.full();
        for e in &edges {
            if e.is_empty() || !e.is_subset(full) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("hyperedge {e:?} is empty or leaves the vertex set"),
                });
            }
        }
        Ok(Hypergraph { vertices, edges })
    }

    pub fn vertices(&self) -> &GroundSet {
        &self.vertices
    }

    pub fn edges(&self) -> &[ElementSet] {
        &self.edges
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then(|| (i + 1, line.split_whitespace().collect()))
    })
}

fn intern(labels: &mut Vec<String>, l: &str) -> usize {
    match labels.iter().position(|x| x == l) {
        Some(i) => i,
        None => {
            labels.push(l.to_string());
            labels.len() - 1
        }
    }
}

/// One edge per line, two whitespace-separated labels; `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for (line, fields) in data_lines(text) {
        let [u, v] = fields[..] else {
            return Err(Error::Parse {
                line,
                message: format!("expected two vertex labels, found {}", fields.len()),
            });
        };
        if u == v {
            return Err(Error::Parse {
                line,
                message: format!("edge endpoints must be distinct, got {u:?} twice"),
            });
        }
        edges.push((intern(&mut labels, u), intern(&mut labels, v)));
    }
    if labels.len() > crate::sets::MAX_GROUND {
        return Err(Error::GroundTooLarge {
            size: labels.len(),
            limit: crate::sets::MAX_GROUND,
        });
    }
    Graph::new(GroundSet::new(labels)?, &edges)
}

/// One hyperedge per line, whitespace-separated labels; `#` starts a comment.
pub fn parse_hyperedge_list(text: &str) -> Result<Hypergraph> {
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for (line, fields) in data_lines(text) {
        let mut idx = Vec::with_capacity(fields.len());
        for f in &fields {
            let i = intern(&mut labels, f);
            if idx.contains(&i) {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex {f:?} repeated in a hyperedge"),
                });
            }
            idx.push(i);
        }
        edges.push(idx);
    }
    if labels.len() > crate::sets::MAX_GROUND {
        return Err(Error::GroundTooLarge {
            size: labels.len(),
            limit: crate::sets::MAX_GROUND,
        });
    }
    let ground = GroundSet::new(labels)?;
    Hypergraph::new(ground, edges.into_iter().map(ElementSet::from_indices).collect())
}

/// `v` is removable while its degree inside the current set is below `k`.
#[derive(Clone, Debug)]
pub struct DegreeRule {
    graph: Graph,
    k: usize,
}

impl DegreeRule {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

impl RemovalRule for DegreeRule {
    fn ground(&self) -> &GroundSet {
        &self.graph.vertices
    }

    fn removable(&self, current: ElementSet, v: usize) -> bool {
        self.graph.degree_in(v, current) < self.k
    }
}

/// Peeling to the k-core. Panics if `k == 0`.
pub fn kcore_rule(graph: Graph, k: usize) -> DegreeRule {
    assert!(k >= 1, "k-core rule needs k >= 1");
    DegreeRule { graph, k }
}

/// Leaf removal; the fixpoint is the 2-core.
pub fn leaf_rule(graph: Graph) -> DegreeRule {
    kcore_rule(graph, 2)
}

/// `v` is removable once some hyperedge through `v` has lost all its other vertices.
#[derive(Clone, Debug)]
pub struct IdentifiableRule {
    hypergraph: Hypergraph,
}

impl RemovalRule for IdentifiableRule {
    fn ground(&self) -> &GroundSet {
        &self.hypergraph.vertices
    }

    fn removable(&self, current: ElementSet, v: usize) -> bool {
        self.hypergraph
            .edges
            .iter()
            .any(|&h| h.contains(v) && (h.without(v) & current).is_empty())
    }
}

pub fn identifiable_rule(hypergraph: Hypergraph) -> IdentifiableRule {
    IdentifiableRule { hypergraph }
}

/// Circuit-style rule: `e` is removable once every `(C, e)` has lost an element of `C − e`.
#[derive(Clone, Debug)]
pub struct CircuitRule {
    ground: GroundSet,
    rooted: Vec<RootedSet>,
}

impl CircuitRule {
    pub fn new(ground: GroundSet, rooted: Vec<RootedSet>) -> Self {
        CircuitRule { ground, rooted }
    }
}

impl RemovalRule for CircuitRule {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn removable(&self, current: ElementSet, e: usize) -> bool {
        self.rooted
            .iter()
            .filter(|r| r.root() == e)
            .all(|r| !r.stem().is_subset(current))
    }
}

/// Path-style rule: `e` is removable once some `(P, e)` has lost all of `P − e`.
#[derive(Clone, Debug)]
pub struct PathRule {
    ground: GroundSet,
    paths: Vec<RootedSet>,
}

impl PathRule {
    pub fn new(ground: GroundSet, paths: Vec<RootedSet>) -> Self {
        PathRule { ground, paths }
    }
}

impl RemovalRule for PathRule {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn removable(&self, current: ElementSet, e: usize) -> bool {
        self.paths
            .iter()
            .any(|p| p.root() == e && (p.stem() & current).is_empty())
    }
}

/// Rooted circuits of k-core peeling: `v` with every k-subset of its neighbours.
pub fn kcore_circuits(graph: &Graph, k: usize) -> Vec<RootedSet> {
    let mut out = Vec::new();
    for v in 0..graph.vertices.len() {
        for t in graph.neighbors(v).subsets_of_size(k) {
            out.push(RootedSet::new(t.with(v), v).expect("v is added to its own set"));
        }
    }
    out
}

/// Rooted paths of k-core peeling: `v` with every `(d − k + 1)`-subset of its
/// `d` neighbours, or the singleton path when `d < k`.
pub fn kcore_paths(graph: &Graph, k: usize) -> Vec<RootedSet> {
    let mut out = Vec::new();
    for v in 0..graph.vertices.len() {
        let nb = graph.neighbors(v);
        let need = (nb.len() + 1).saturating_sub(k);
        for t in nb.subsets_of_size(need) {
            out.push(RootedSet::new(t.with(v), v).expect("v is added to its own set"));
        }
    }
    out
}

/// Rooted paths of identifiable-vertex peeling: `(h, v)` for each hyperedge `h ∋ v`.
pub fn identifiable_paths(h: &Hypergraph) -> Vec<RootedSet> {
    let mut out = Vec::new();
    for &edge in &h.edges {
        for v in edge.iter() {
            out.push(RootedSet::new(edge, v).expect("v is in the edge"));
        }
    }
    out.sort();
    out.dedup();
    out
}

fn bfs_states<R: RemovalRule + ?Sized>(rule: &R, start: ElementSet, keep: ElementSet) -> Vec<ElementSet> {
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(s) = queue.pop_front() {
        out.push(s);
        for e in s.difference(keep).iter() {
            if rule.removable(s, e) {
                let t = s.without(e);
                if seen.insert(t) {
                    queue.push_back(t);
                }
            }
        }
    }
    out
}

/// Every set reachable from `E` by single removals the rule allows.
pub fn reachable_sets<R: RemovalRule + ?Sized>(rule: &R) -> Result<SetFamily> {
    let ground = rule.ground();
    ensure_enumerable(ground.len(), MAX_ENUMERATION)?;
    let states = bfs_states(rule, ground.full(), ElementSet::empty());
    Ok(SetFamily::new(ground.clone(), states))
}

/// Reachable sets as a convex geometry; fails if the rule is not a pruning process.
pub fn geometry_of<R: RemovalRule + ?Sized>(rule: &R) -> Result<ConvexGeometry> {
    ConvexGeometry::new(reachable_sets(rule)?)
}

/// Checks that removability persists: for each reachable `S`, each removable
/// `e`, and each other removable `f`, `e` stays removable in `S − f`.
/// Inductively this covers every later stage reachable from `S`.
pub fn is_pruning_process<R: RemovalRule + ?Sized>(rule: &R) -> Result<AxiomReport> {
    let reachable = reachable_sets(rule)?;
    let mut report = AxiomReport::default();
    for s in reachable.iter().rev() {
        let removable = rule.removable_set(s);
        for f in removable.iter() {
            let later = s.without(f);
            if let Some(e) = removable
                .without(f)
                .iter()
                .find(|&e| !rule.removable(later, e))
            {
                report.push(
                    Axiom::Pruning,
                    Witness::Removal {
                        state: s,
                        later,
                        element: e,
                    },
                );
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// A removal run from `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PruningTrace {
    pub word: SimpleWord,
    pub states: Vec<ElementSet>,
}

impl PruningTrace {
    pub fn last(&self) -> ElementSet {
        *self.states.last().expect("a trace starts at E")
    }
}

/// Greedy run from `E` that never removes elements of `keep`; at each step
/// removes the first removable element in `priority` order (elements absent
/// from `priority` come after, by index).
pub fn prune_keeping<R: RemovalRule + ?Sized>(
    rule: &R,
    keep: ElementSet,
    priority: &[usize],
) -> PruningTrace {
    let n = rule.ground().len();
    let rest = ElementSet::full(n).difference(priority.iter().copied().collect());
    let order: Vec<usize> = priority.iter().copied().chain(rest.iter()).collect();
    let mut current = ElementSet::full(n);
    let mut states = vec![current];
    let mut letters = Vec::new();
    while let Some(&e) = order
        .iter()
        .find(|&&e| current.contains(e) && !keep.contains(e) && rule.removable(current, e))
    {
        current = current.without(e);
        letters.push(e);
        states.push(current);
    }
    PruningTrace {
        word: SimpleWord::new(letters).expect("each element is removed once"),
        states,
    }
}

/// Runs the process to its fixpoint, removing the lowest-index removable element each step.
pub fn prune<R: RemovalRule + ?Sized>(rule: &R) -> PruningTrace {
    prune_keeping(rule, ElementSet::empty(), &[])
}

/// All terminal states of runs that never remove elements of `s`, i.e. the
/// minimal achievable sets containing `s`.
pub fn minimal_reachable_supersets<R: RemovalRule + ?Sized>(
    rule: &R,
    s: ElementSet,
) -> Result<Vec<ElementSet>> {
    let ground = rule.ground();
    ensure_enumerable(ground.len(), MAX_ENUMERATION)?;
    let mut terminal: Vec<ElementSet> = bfs_states(rule, ground.full(), s)
        .into_iter()
        .filter(|&t| {
            !t.difference(s).iter().any(|e| rule.removable(t, e))
        })
        .collect();
    terminal.sort_unstable();
    Ok(terminal)
}

/// The unique minimal achievable set containing `s`.
///
/// Runs greedily with lowest-index-first and highest-index-first priority;
/// if the two runs end in different sets the rule is not a pruning process
/// and both outcomes are reported.
pub fn tau_min_reachable<R: RemovalRule + ?Sized>(rule: &R, s: ElementSet) -> Result<ElementSet> {
    let n = rule.ground().len();
    let forward = prune_keeping(rule, s, &[]).last();
    let reversed: Vec<usize> = (0..n).rev().collect();
    let backward = prune_keeping(rule, s, &reversed).last();
    if forward != backward {
        return Err(Error::NonUniqueMinimum {
            first: forward,
            second: backward,
        });
    }
    Ok(forward)
}

/// Every removal sequence from `E` of length at most `max_len`, shortest first.
pub fn removal_words<R: RemovalRule + ?Sized>(rule: &R, max_len: usize) -> Result<Vec<SimpleWord>> {
    ensure_enumerable(rule.ground().len(), 12)?;
    let mut out = Vec::new();
    let mut stack = vec![(SimpleWord::empty(), rule.ground().full())];
    while let Some((w, current)) = stack.pop() {
        if w.len() < max_len {
            for e in rule.removable_set(current).iter() {
                stack.push((w.extended(e).expect("e is still present"), current.without(e)));
            }
        }
        out.push(w);
        if out.len() > WORD_BUDGET {
            return Err(Error::StateSpaceTooLarge(WORD_BUDGET));
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Minimal sets `A ⊆ E − x` such that `x` is removable in `E − A`.
pub fn precedences<R: RemovalRule + ?Sized>(rule: &R, x: usize) -> Result<Vec<ElementSet>> {
    let ground = rule.ground();
    ensure_enumerable(ground.len(), 16)?;
    let top = ground.full();
    let mut hits: Vec<ElementSet> = top
        .without(x)
        .subsets()
        .filter(|&a| rule.removable(top.difference(a), x))
        .collect();
    hits.sort_unstable();
    let mut minimal: Vec<ElementSet> = Vec::new();
    for a in hits {
        if !minimal.iter().any(|m| m.is_subset(a)) {
            minimal.push(a);
        }
    }
    Ok(minimal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::geometry::{check_antimatroid_words, generate_from_circuits, generate_from_paths};

    fn set(g: &GroundSet, s: &str) -> ElementSet {
        g.parse_set(s).unwrap()
    }

    #[test]
    fn triangle_has_no_leaves() {
        let g = Graph::from_labels(&[("x", "y"), ("y", "z"), ("z", "x")]).unwrap();
        let rule = leaf_rule(g);
        assert_eq!(rule.removable_set(rule.ground().full()), ElementSet::empty());
        assert_eq!(reachable_sets(&rule).unwrap().len(), 1);
    }

    #[test]
    fn fixture_initial_leaves() {
        let rule = leaf_rule(fixtures::figure_one_graph());
        let v = rule.ground().clone();
        assert_eq!(rule.removable_set(v.full()), set(&v, "b,d"));
    }

    #[test]
    fn fixture_precedences_of_c() {
        let rule = leaf_rule(fixtures::figure_one_graph());
        let v = rule.ground().clone();
        let c = v.index_of("c").unwrap();
        let h = precedences(&rule, c).unwrap();
        let mut expected = vec![set(&v, "a,b"), set(&v, "a,e"), set(&v, "b,e")];
        expected.sort();
        assert_eq!(h, expected);
    }

    #[test]
    fn fixture_closure_and_core() {
        let rule = leaf_rule(fixtures::figure_one_graph());
        let v = rule.ground().clone();
        assert_eq!(
            tau_min_reachable(&rule, set(&v, "a,f,g")).unwrap(),
            set(&v, "a,c,e,f,g")
        );
        assert_eq!(prune(&rule).last(), set(&v, "e,f,g"));
        let reach = reachable_sets(&rule).unwrap();
        assert_eq!(reach.members()[0], set(&v, "e,f,g"));
        assert_eq!(*reach.members().last().unwrap(), v.full());
        assert_eq!(tau_min_reachable(&rule, v.full()).unwrap(), v.full());
    }

    #[test]
    fn fixture_word_dabc() {
        let rule = leaf_rule(fixtures::figure_one_graph());
        let v = rule.ground().clone();
        let words = removal_words(&rule, 7).unwrap();
        let dabc = SimpleWord::from_labels(&v, &["d", "a", "b", "c"]).unwrap();
        assert!(words.contains(&dabc));
        assert!(check_antimatroid_words(&words, &v).unwrap().holds());
        assert!(is_pruning_process(&rule).unwrap().holds());
    }

    #[test]
    fn never_removable_gives_only_empty_word() {
        let rule = FnRule::new(GroundSet::letters(3), |_, _| false);
        assert_eq!(removal_words(&rule, 3).unwrap(), vec![SimpleWord::empty()]);
    }

    #[test]
    fn always_removable() {
        let g = GroundSet::letters(3);
        let rule = FnRule::new(g.clone(), |_, _| true);
        assert_eq!(reachable_sets(&rule).unwrap().len(), 8);
        assert_eq!(precedences(&rule, 1).unwrap(), vec![ElementSet::empty()]);
        assert!(is_pruning_process(&rule).unwrap().holds());
    }

    #[test]
    fn even_cardinality_rule() {
        // With n = 3 nothing is removable from E, so no later stage exists to
        // break persistence. With n = 4 the first removal strands the rest.
        let rule3 = FnRule::new(GroundSet::letters(3), |s: ElementSet, _| s.len().is_multiple_of(2));
        assert!(is_pruning_process(&rule3).unwrap().holds());
        let g = GroundSet::letters(4);
        let rule4 = FnRule::new(g.clone(), |s: ElementSet, _| s.len().is_multiple_of(2));
        let report = is_pruning_process(&rule4).unwrap();
        assert_eq!(
            report.witness(Axiom::Pruning),
            Some(&Witness::Removal {
                state: g.full(),
                later: set(&g, "b,c,d"),
                element: 1
            })
        );
        assert!(matches!(
            tau_min_reachable(&rule4, ElementSet::empty()),
            Err(Error::NonUniqueMinimum { .. })
        ));
        assert_eq!(minimal_reachable_supersets(&rule4, ElementSet::empty()).unwrap().len(), 4);
    }

    #[test]
    fn hyperedge_needs_both_others_gone() {
        let h = parse_hyperedge_list("x y z\n").unwrap();
        let v = h.vertices().clone();
        let rule = identifiable_rule(h);
        let x = v.index_of("x").unwrap();
        assert!(!rule.removable(v.full(), x));
        assert!(!rule.removable(set(&v, "x,z"), x));
        assert!(rule.removable(set(&v, "x"), x));
    }

    #[test]
    fn identifiable_rule_matches_paths() {
        let h = parse_hyperedge_list("x y\ny z\n").unwrap();
        let v = h.vertices().clone();
        let paths = identifiable_paths(&h);
        let rule = identifiable_rule(h);
        let reach = reachable_sets(&rule).unwrap();
        assert_eq!(generate_from_paths(&paths, &v).unwrap().family(), &reach);
        // Nothing can start the peeling.
        assert_eq!(reach.len(), 1);
        let h2 = parse_hyperedge_list("x\nx y\ny z\n").unwrap();
        let v2 = h2.vertices().clone();
        let paths2 = identifiable_paths(&h2);
        let reach2 = reachable_sets(&identifiable_rule(h2)).unwrap();
        assert_eq!(generate_from_paths(&paths2, &v2).unwrap().family(), &reach2);
        assert_eq!(reach2.describe(), vec!["{}", "{z}", "{y,z}", "{x,y,z}"]);
    }

    #[test]
    fn kcore_encodings_agree() {
        let graph = fixtures::figure_one_graph();
        let v = graph.vertices().clone();
        for k in 1..=3 {
            let rule = kcore_rule(graph.clone(), k);
            let reach = reachable_sets(&rule).unwrap();
            let by_circuits = generate_from_circuits(&kcore_circuits(&graph, k), &v).unwrap();
            let by_paths = generate_from_paths(&kcore_paths(&graph, k), &v).unwrap();
            assert_eq!(by_circuits.family(), &reach, "k = {k}");
            assert_eq!(by_paths.family(), &reach, "k = {k}");
        }
    }

    #[test]
    fn kcore_precedences_are_subsets_of_neighbours() {
        let graph = fixtures::figure_one_graph();
        for k in 1..=3 {
            let rule = kcore_rule(graph.clone(), k);
            for v in 0..graph.vertices().len() {
                let nb = graph.neighbors(v);
                let d = nb.len();
                let mut expected: Vec<ElementSet> = if d < k {
                    vec![ElementSet::empty()]
                } else {
                    nb.subsets_of_size(d - k + 1).collect()
                };
                expected.sort();
                assert_eq!(precedences(&rule, v).unwrap(), expected);
            }
        }
    }

    #[test]
    fn edge_list_parsing() {
        let g = parse_edge_list("# comment\na b\n\nb c # trailing\n").unwrap();
        assert_eq!(g.vertices().labels(), &["a", "b", "c"]);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(matches!(parse_edge_list("a a\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("a b c\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_hyperedge_list("a b a\n"), Err(Error::Parse { .. })));
    }
}
