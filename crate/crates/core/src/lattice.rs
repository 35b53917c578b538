//! Closed sets ordered by inclusion, as a lattice: meet is intersection, join
//! is the closure of the union.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::ConvexGeometry;
use crate::report::{Axiom, AxiomReport, Witness};
use crate::sets::{ensure_enumerable, ElementSet, SetFamily, MAX_ENUMERATION};

/// Upper bound on law evaluations for the distributivity scans.
pub const LAW_BUDGET: u128 = 100_000_000;

#[derive(Clone, Debug)]
pub struct ClosedSetLattice {
    elements: SetFamily,
    /// Lower covers of each element, as indices into `elements`.
    lower: Vec<Vec<usize>>,
    /// Least member containing each subset, indexed by bitmask.
    closure: Vec<ElementSet>,
}

/// Closure table of an intersection-closed family containing the top:
/// `τ(X) = ∩_{i ∉ X} τ(X + i)` for non-members `X`.
fn closure_table(f: &SetFamily) -> Vec<ElementSet> {
    let n = f.n();
    let full = ElementSet::full(n);
    let mut table = vec![full; 1 << n];
    let mut all: Vec<ElementSet> = full.subsets().collect();
    all.sort_unstable_by(|a, b| b.cmp(a));
    for x in all {
        if f.contains(x) {
            table[x.bits() as usize] = x;
        } else if x != full {
            table[x.bits() as usize] = x
                .complement(n)
                .iter()
                .fold(full, |acc, i| acc & table[x.with(i).bits() as usize]);
        }
    }
    table
}

/// Lattice of a convex geometry; covers are the pairs differing in one element.
pub fn build_lattice(g: &ConvexGeometry) -> Result<ClosedSetLattice> {
    ensure_enumerable(g.n(), MAX_ENUMERATION)?;
    let f = g.family().clone();
    let lower = f
        .iter()
        .map(|a| {
            let mut covers: Vec<usize> = a
                .iter()
                .filter_map(|i| f.position(a.without(i)))
                .collect();
            covers.sort_unstable();
            covers
        })
        .collect();
    let closure = closure_table(&f);
    Ok(ClosedSetLattice {
        elements: f,
        lower,
        closure,
    })
}

impl ClosedSetLattice {
    /// Any family that contains `E` and is closed under intersection, with
    /// covers found by transitive reduction.
    pub fn from_family(f: &SetFamily) -> Result<Self> {
        ensure_enumerable(f.n(), MAX_ENUMERATION)?;
        if !f.contains(f.top()) {
            return Err(Error::NotALattice("the ground set is not a member".into()));
        }
        for (i, &a) in f.members().iter().enumerate() {
            for &b in &f.members()[i + 1..] {
                if !f.contains(a & b) {
                    return Err(Error::NotALattice(format!(
                        "{} ∩ {} is not a member",
                        f.ground().format_set(a),
                        f.ground().format_set(b)
                    )));
                }
            }
        }
        let m = f.members();
        let lower = m
            .iter()
            .map(|&a| {
                (0..m.len())
                    .filter(|&j| {
                        let b = m[j];
                        b.is_proper_subset(a)
                            && !m
                                .iter()
                                .any(|&c| b.is_proper_subset(c) && c.is_proper_subset(a))
                    })
                    .collect()
            })
            .collect();
        Ok(ClosedSetLattice {
            elements: f.clone(),
            lower,
            closure: closure_table(f),
        })
    }

    pub fn elements(&self) -> &SetFamily {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn top(&self) -> ElementSet {
        self.elements.top()
    }

    pub fn bottom(&self) -> ElementSet {
        self.elements.members()[0]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    /// `(upper, lower)` index pairs.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.lower
            .iter()
            .enumerate()
            .flat_map(|(i, ls)| ls.iter().map(move |&j| (i, j)))
            .collect()
    }

    pub fn meet(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        a & b
    }

    pub fn join(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        self.closure[(a | b).bits() as usize]
    }

    fn tables(&self) -> (Vec<u32>, Vec<u32>) {
        let m = self.elements.members();
        let idx = |s: ElementSet| self.elements.position(s).expect("lattice is closed") as u32;
        let mut meet = Vec::with_capacity(m.len() * m.len());
        let mut join = Vec::with_capacity(m.len() * m.len());
        for &a in m {
            for &b in m {
                meet.push(idx(self.meet(a, b)));
                join.push(idx(self.join(a, b)));
            }
        }
        (meet, join)
    }
}

/// `[m(x), x]` must contain every set in between, where `m(x)` is the meet
/// of the lower covers of `x`.
pub fn is_meet_distributive(l: &ClosedSetLattice) -> AxiomReport {
    let mut report = AxiomReport::default();
    let m = l.elements.members();
    for (i, &x) in m.iter().enumerate() {
        let Some(mx) = l.lower[i]
            .iter()
            .map(|&j| m[j])
            .reduce(|a, b| a & b)
        else {
            continue;
        };
        if let Some(missing) = mx.interval(x).find(|&s| !l.elements.contains(s)) {
            report.push(Axiom::MeetDistributive, Witness::Sets(vec![x, mx, missing]));
            break;
        }
    }
    report
}

pub fn is_distributive(l: &ClosedSetLattice) -> Result<AxiomReport> {
    scan(l, 1, Axiom::Distributive)
}

/// `x ∧ (y₀ ∨ ⋯ ∨ y_k) = ⋁_j (x ∧ ⋁_{i ≠ j} y_i)`; `k = 1` is ordinary
/// distributivity. Repeated `y`s satisfy the law trivially, so only distinct
/// unordered `y`-tuples are scanned. The witness is `[x, y₀, …, y_k]`.
pub fn is_k_distributive(l: &ClosedSetLattice, k: usize) -> Result<AxiomReport> {
    assert!(k >= 1, "k must be at least 1");
    scan(l, k, Axiom::KDistributive(k))
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn scan(l: &ClosedSetLattice, k: usize, axiom: Axiom) -> Result<AxiomReport> {
    let m = l.len();
    let needed = (m as u128).saturating_mul(binomial(m as u128, k as u128 + 1));
    if needed > LAW_BUDGET {
        return Err(Error::BudgetExceeded {
            needed,
            budget: LAW_BUDGET,
        });
    }
    let (meet, join) = l.tables();
    let meet = |a: u32, b: u32| meet[a as usize * m + b as usize];
    let join = |a: u32, b: u32| join[a as usize * m + b as usize];
    let bottom = 0u32;
    let width = k + 1;

    let violation = (0..m as u32).into_par_iter().find_map_first(|x| {
        let mut ys: Vec<u32> = (0..width as u32).collect();
        if width > m {
            return None;
        }
        let mut suffix = vec![bottom; width + 1];
        loop {
            for i in (0..width).rev() {
                suffix[i] = join(ys[i], suffix[i + 1]);
            }
            let lhs = meet(x, suffix[0]);
            let mut prefix = bottom;
            let mut rhs = bottom;
            for j in 0..width {
                rhs = join(rhs, meet(x, join(prefix, suffix[j + 1])));
                prefix = join(prefix, ys[j]);
            }
            if lhs != rhs {
                return Some((x, ys.clone()));
            }
            if !next_combination(&mut ys, m as u32) {
                return None;
            }
        }
    });

    let mut report = AxiomReport::default();
    if let Some((x, ys)) = violation {
        let members = l.elements.members();
        let mut sets = vec![members[x as usize]];
        sets.extend(ys.iter().map(|&y| members[y as usize]));
        report.push(axiom, Witness::Sets(sets));
    }
    Ok(report)
}

/// Advances a strictly increasing tuple over `0..m` in lexicographic order.
fn next_combination(c: &mut [u32], m: u32) -> bool {
    let w = c.len() as u32;
    for i in (0..c.len()).rev() {
        if c[i] < m - w + i as u32 {
            c[i] += 1;
            for j in i + 1..c.len() {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram with the top first; an edge label names the elements
/// removed along the cover.
pub fn export_dot(l: &ClosedSetLattice, edge_labels: bool) -> String {
    let ground = l.elements.ground();
    let m = l.len();
    // Node ids count down from the top in canonical order.
    let node = |i: usize| m - 1 - i;
    let mut out = String::from("digraph lattice {\n  rankdir=TB;\n  node [shape=box];\n");
    for i in (0..m).rev() {
        let label = dot_escape(&ground.format_set(l.elements.members()[i]));
        let _ = writeln!(out, "  n{} [label=\"{label}\"];", node(i));
    }
    for i in (0..m).rev() {
        let mut lower = l.lower[i].clone();
        lower.sort_unstable_by(|a, b| b.cmp(a));
        for j in lower {
            let _ = write!(out, "  n{} -> n{}", node(i), node(j));
            if edge_labels {
                let removed = l.elements.members()[i] - l.elements.members()[j];
                let text = ground.labels_of(removed).join(",");
                let _ = write!(out, " [label=\"{}\"]", dot_escape(&text));
            }
            out.push_str(";\n");
        }
    }
    out.push_str("}\n");
    out
}
