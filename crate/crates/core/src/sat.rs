//! CNF formulas and partial assignments over `{0, 1, *}`.
//!
//! A partial assignment is valid when no clause is all-false and no clause has
//! a single `*` literal with every other literal false. Below a valid `a`
//! (reached by starring numeric variables one at a time, staying valid) the
//! numeric supports form the closed sets of a convex geometry on `N(a)`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use rand::seq::IteratorRandom;

use crate::error::{Error, Result};
use crate::geometry::{generate_from_circuits, ConvexGeometry};
use crate::identity::{pairwise_sum, product_term, rng_from_seed, WeightVector};
use crate::sets::{ensure_enumerable, ElementSet, GroundSet, RootedSet, MAX_ENUMERATION, MAX_GROUND};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    /// Literals are nonzero DIMACS integers; a variable may occur once per clause.
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        if num_vars > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size: num_vars,
                limit: MAX_GROUND,
            });
        }
        for (c, clause) in clauses.iter().enumerate() {
            let mut seen = ElementSet::empty();
            for &lit in clause {
                let v = lit.unsigned_abs() as usize;
                if lit == 0 || v > num_vars {
                    return Err(Error::InvalidClause {
                        clause: c,
                        message: format!("literal {lit} out of range for {num_vars} variables"),
                    });
                }
                if seen.contains(v - 1) {
                    return Err(Error::InvalidClause {
                        clause: c,
                        message: format!("variable {v} repeated"),
                    });
                }
                seen = seen.with(v - 1);
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Variables `1..=n`, labelled by number.
    pub fn variables(&self) -> GroundSet {
        GroundSet::numbered(self.num_vars)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for lit in c {
                out.push_str(&lit.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        if line.starts_with('p') {
            if header.is_some() {
                return Err(err("second header".into()));
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["p", "cnf", n, m] => {
                    let n = n.parse().map_err(|_| err(format!("bad variable count {n:?}")))?;
                    let m = m.parse().map_err(|_| err(format!("bad clause count {m:?}")))?;
                    header = Some((n, m));
                }
                _ => return Err(err(format!("malformed header {line:?}"))),
            }
            continue;
        }
        if header.is_none() {
            return Err(err("clause before the `p cnf` header".into()));
        }
        for tok in line.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| err(format!("bad literal {tok:?}")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
        last_line = line_no;
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing `p cnf` header".into(),
    })?;
    if !current.is_empty() {
        return Err(Error::Parse {
            line: last_line,
            message: "last clause is not terminated by 0".into(),
        });
    }
    if clauses.len() != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("header declares {m} clauses, found {}", clauses.len()),
        });
    }
    CnfFormula::new(n, clauses)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Zero,
    One,
    Star,
}

impl Value {
    fn symbol(self) -> char {
        match self {
            Value::Zero => '0',
            Value::One => '1',
            Value::Star => '*',
        }
    }
}

/// Variable `i` (0-based) holds `values[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialAssignment {
    values: Vec<Value>,
}

impl PartialAssignment {
    pub fn new(values: Vec<Value>) -> Self {
        PartialAssignment { values }
    }

    pub fn all_ones(n: usize) -> Self {
        Self::new(vec![Value::One; n])
    }

    pub fn all_stars(n: usize) -> Self {
        Self::new(vec![Value::Star; n])
    }

    /// Full assignment with variable `i` true iff `truth[i]`.
    pub fn from_bools(truth: &[bool]) -> Self {
        Self::new(
            truth
                .iter()
                .map(|&t| if t { Value::One } else { Value::Zero })
                .collect(),
        )
    }

    /// `1,1,*,0` or `11*0`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let symbols: Vec<String> = if text.contains(',') {
            text.split(',').map(|s| s.trim().to_string()).collect()
        } else {
            text.chars().map(String::from).collect()
        };
        let values = symbols
            .iter()
            .map(|s| match s.as_str() {
                "0" => Ok(Value::Zero),
                "1" => Ok(Value::One),
                "*" | "⋆" => Ok(Value::Star),
                other => Err(Error::InvalidSymbol(other.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        if values.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size: values.len(),
                limit: MAX_GROUND,
            });
        }
        Ok(Self::new(values))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    pub fn get(&self, i: usize) -> Value {
        self.values[i]
    }

    pub fn stars(&self) -> ElementSet {
        (0..self.len())
            .filter(|&i| self.values[i] == Value::Star)
            .collect()
    }

    pub fn numeric(&self) -> ElementSet {
        ElementSet::full(self.len()) - self.stars()
    }

    pub fn with_star(&self, i: usize) -> Self {
        let mut values = self.values.clone();
        values[i] = Value::Star;
        Self::new(values)
    }

    /// Keeps the values of `self` on `numeric` and stars everything else.
    pub fn restrict(&self, numeric: ElementSet) -> Self {
        Self::new(
            (0..self.len())
                .map(|i| if numeric.contains(i) { self.values[i] } else { Value::Star })
                .collect(),
        )
    }

    /// `1,1,*,0` form.
    pub fn to_comma_string(&self) -> String {
        self.values
            .iter()
            .map(|v| v.symbol().to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for PartialAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.values {
            write!(f, "{}", v.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PartialAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_comma_string())
    }
}

fn check_length(f: &CnfFormula, x: &PartialAssignment) -> Result<()> {
    if x.len() != f.num_vars {
        return Err(Error::AssignmentLength {
            expected: f.num_vars,
            got: x.len(),
        });
    }
    Ok(())
}

fn satisfies(lit: i32, v: Value) -> bool {
    matches!((lit > 0, v), (true, Value::One) | (false, Value::Zero))
}

fn var(lit: i32) -> usize {
    lit.unsigned_abs() as usize - 1
}

fn clause_ok(clause: &[i32], x: &PartialAssignment) -> bool {
    let mut stars = 0;
    for &lit in clause {
        match x.get(var(lit)) {
            Value::Star => stars += 1,
            v if satisfies(lit, v) => return true,
            _ => {}
        }
    }
    stars >= 2
}

/// Index of the first clause the assignment violates.
pub fn first_invalid_clause(f: &CnfFormula, x: &PartialAssignment) -> Result<Option<usize>> {
    check_length(f, x)?;
    Ok(f.clauses.iter().position(|c| !clause_ok(c, x)))
}

pub fn is_valid(f: &CnfFormula, x: &PartialAssignment) -> Result<bool> {
    Ok(first_invalid_clause(f, x)?.is_none())
}

fn require_valid(f: &CnfFormula, x: &PartialAssignment) -> Result<()> {
    match first_invalid_clause(f, x)? {
        Some(c) => Err(Error::InvalidAssignment(c)),
        None => Ok(()),
    }
}

/// Stars `S`, numeric `N = U ⊔ C`; variables as 0-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarClassification {
    pub stars: ElementSet,
    pub unconstrained: ElementSet,
    pub constrained: ElementSet,
    pub numeric: ElementSet,
}

/// A numeric variable is constrained iff starring it alone breaks validity.
pub fn classify_vars(f: &CnfFormula, b: &PartialAssignment) -> Result<VarClassification> {
    require_valid(f, b)?;
    let numeric = b.numeric();
    let constrained: ElementSet = numeric
        .iter()
        .filter(|&i| {
            let starred = b.with_star(i);
            f.clauses.iter().any(|c| !clause_ok(c, &starred))
        })
        .collect();
    Ok(VarClassification {
        stars: b.stars(),
        unconstrained: numeric - constrained,
        constrained,
        numeric,
    })
}

/// Valid assignments below `top`, ordered by numeric support from the top
/// down (reverse canonical order), with `(upper, lower)` cover pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    assignments: Vec<PartialAssignment>,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    pub fn assignments(&self) -> &[PartialAssignment] {
        &self.assignments
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn supports(&self) -> Vec<ElementSet> {
        self.assignments.iter().map(PartialAssignment::numeric).collect()
    }

    pub fn contains(&self, x: &PartialAssignment) -> bool {
        self.assignments.contains(x)
    }
}

fn reachable_supports(f: &CnfFormula, a: &PartialAssignment) -> Vec<ElementSet> {
    let start = a.numeric();
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for i in s.iter() {
            let t = s.without(i);
            if !seen.contains(&t) && f.clauses.iter().all(|c| clause_ok(c, &a.restrict(t))) {
                seen.insert(t);
                queue.push_back(t);
            }
        }
    }
    let mut out: Vec<ElementSet> = seen.into_iter().collect();
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

pub fn poset_below(f: &CnfFormula, a: &PartialAssignment) -> Result<Poset> {
    require_valid(f, a)?;
    ensure_enumerable(a.numeric().len(), MAX_ENUMERATION)?;
    let supports = reachable_supports(f, a);
    let index = |s: ElementSet| supports.iter().position(|&t| t == s);
    let mut covers = Vec::new();
    for (i, &s) in supports.iter().enumerate() {
        let mut lower: Vec<usize> = s.iter().filter_map(|v| index(s.without(v))).collect();
        lower.sort_unstable();
        covers.extend(lower.into_iter().map(|j| (i, j)));
    }
    Ok(Poset {
        assignments: supports.iter().map(|&s| a.restrict(s)).collect(),
        covers,
    })
}

/// `N(a)` as its own ground set, labelled by variable number.
pub fn numeric_ground(a: &PartialAssignment) -> GroundSet {
    GroundSet::new(a.numeric().iter().map(|i| (i + 1).to_string()))
        .expect("variable numbers are distinct")
}

/// Re-indexes a subset of `within` onto `0..|within|`, preserving order.
pub fn compress(set: ElementSet, within: ElementSet) -> ElementSet {
    within
        .iter()
        .enumerate()
        .filter(|&(_, v)| set.contains(v))
        .map(|(i, _)| i)
        .collect()
}

pub fn expand(set: ElementSet, within: ElementSet) -> ElementSet {
    within
        .iter()
        .enumerate()
        .filter(|&(i, _)| set.contains(i))
        .map(|(_, v)| v)
        .collect()
}

/// Rooted sets `(clause variables, satisfier)` for the clauses that `a`
/// satisfies through exactly one literal with every other literal numeric.
pub fn unique_satisfier_circuits(f: &CnfFormula, a: &PartialAssignment) -> Result<Vec<RootedSet>> {
    require_valid(f, a)?;
    let within = a.numeric();
    let mut out: Vec<RootedSet> = Vec::new();
    for c in &f.clauses {
        if c.iter().any(|&l| a.get(var(l)) == Value::Star) {
            continue;
        }
        let sat: Vec<usize> = c
            .iter()
            .filter(|&&l| satisfies(l, a.get(var(l))))
            .map(|&l| var(l))
            .collect();
        if let [root] = sat.as_slice() {
            let vars: ElementSet = c.iter().map(|&l| var(l)).collect();
            let root = compress(ElementSet::singleton(*root), within)
                .first()
                .expect("root is numeric");
            let r = RootedSet::new(compress(vars, within), root)?;
            if !out.contains(&r) {
                out.push(r);
            }
        }
    }
    Ok(out)
}

/// The geometry on `N(a)` of the supports below `a`, generated from the
/// uniquely satisfied clauses.
pub fn geometry_from_assignment(f: &CnfFormula, a: &PartialAssignment) -> Result<ConvexGeometry> {
    let rooted = unique_satisfier_circuits(f, a)?;
    generate_from_circuits(&rooted, &numeric_ground(a))
}

/// `Π_{i ∈ S(b)} p_i · Π_{j ∈ U(b)} q_j`.
pub fn weight(f: &CnfFormula, b: &PartialAssignment, w: &WeightVector) -> Result<f64> {
    let cls = classify_vars(f, b)?;
    Ok(product_term(w.ps(), cls.numeric, cls.unconstrained))
}

/// `Σ_{b ≤ a} Π_{i ∈ N(a) − N(b)} p_i · Π_{j ∈ U(b)} q_j`, with terms in the
/// canonical order of `N(b)` inside `N(a)`. For fully assigned `a` the first
/// product runs over `S(b)`.
pub fn verify_sat_identity(f: &CnfFormula, a: &PartialAssignment, w: &WeightVector) -> Result<f64> {
    if w.len() != f.num_vars {
        return Err(Error::InvalidWeight(format!(
            "{} weights for {} variables",
            w.len(),
            f.num_vars
        )));
    }
    let poset = poset_below(f, a)?;
    let within = a.numeric();
    let local = WeightVector::new(within.iter().map(|i| w.p(i)).collect())?;
    let mut terms: Vec<(ElementSet, f64)> = poset
        .assignments()
        .iter()
        .map(|b| {
            let cls = classify_vars(f, b)?;
            let s = compress(cls.numeric, within);
            let u = compress(cls.unconstrained, within);
            Ok((s, product_term(local.ps(), s, u)))
        })
        .collect::<Result<_>>()?;
    terms.sort_unstable_by_key(|&(s, _)| s);
    Ok(pairwise_sum(&terms.iter().map(|&(_, t)| t).collect::<Vec<_>>()))
}

/// Sum of `weight` over every valid partial assignment (`3^n` candidates).
pub fn total_weight(f: &CnfFormula, w: &WeightVector) -> Result<f64> {
    ensure_enumerable(f.num_vars, 12)?;
    let n = f.num_vars;
    let mut terms = Vec::new();
    let mut values = vec![Value::Zero; n];
    loop {
        let x = PartialAssignment::new(values.clone());
        if is_valid(f, &x)? {
            terms.push(weight(f, &x, w)?);
        }
        // Odometer over {0, 1, *}^n.
        let mut i = 0;
        loop {
            if i == n {
                return Ok(pairwise_sum(&terms));
            }
            values[i] = match values[i] {
                Value::Zero => Value::One,
                Value::One => Value::Star,
                Value::Star => Value::Zero,
            };
            if values[i] != Value::Zero {
                break;
            }
            i += 1;
        }
    }
}

/// Whitening: star a uniformly random unconstrained variable until none is left.
pub fn core(f: &CnfFormula, a: &PartialAssignment, seed: u64) -> Result<PartialAssignment> {
    let mut rng = rng_from_seed(seed);
    let mut b = a.clone();
    loop {
        let cls = classify_vars(f, &b)?;
        match cls.unconstrained.iter().choose(&mut rng) {
            Some(i) => b = b.with_star(i),
            None => return Ok(b),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionWitness {
    /// Stars where `a` and `b` disagree, their common value elsewhere.
    pub agreement: PartialAssignment,
    /// `agreement` if valid, else its unique valid restriction of maximal
    /// numeric support.
    pub c: PartialAssignment,
    /// Assignments below both `a` and `b`, sorted.
    pub intersection: Vec<PartialAssignment>,
    /// Whether `intersection` is exactly the poset below `c`.
    pub holds: bool,
    /// The unique element of `intersection` with inclusion-maximal numeric
    /// support, if there is one.
    pub maximal: Option<PartialAssignment>,
    /// Whether `intersection` is exactly the poset below `maximal`.
    pub holds_at_maximal: bool,
}

/// Builds `c` from the coordinates where `a` and `b` agree and compares the
/// assignments below both with those below `c`.
pub fn geometry_intersection_witness(
    f: &CnfFormula,
    a: &PartialAssignment,
    b: &PartialAssignment,
) -> Result<IntersectionWitness> {
    let pa = poset_below(f, a)?;
    let pb = poset_below(f, b)?;
    let mut intersection: Vec<PartialAssignment> = pa
        .assignments()
        .iter()
        .filter(|x| pb.contains(x))
        .cloned()
        .collect();
    if intersection.is_empty() {
        return Err(Error::EmptyIntersection);
    }
    intersection.sort();
    let agreement = PartialAssignment::new(
        (0..a.len())
            .map(|i| if a.get(i) == b.get(i) { a.get(i) } else { Value::Star })
            .collect(),
    );
    let c = match first_invalid_clause(f, &agreement)? {
        None => agreement.clone(),
        Some(clause) => {
            let within = agreement.numeric();
            ensure_enumerable(within.len(), MAX_ENUMERATION)?;
            let valid: Vec<ElementSet> = within
                .subsets()
                .filter(|&s| f.clauses.iter().all(|c| clause_ok(c, &agreement.restrict(s))))
                .collect();
            let maximal: Vec<ElementSet> = valid
                .iter()
                .copied()
                .filter(|s| !valid.iter().any(|t| s.is_proper_subset(*t)))
                .collect();
            match maximal.as_slice() {
                [] => return Err(Error::InvalidAssignment(clause)),
                [s] => agreement.restrict(*s),
                _ => return Err(Error::AmbiguousIntersection),
            }
        }
    };
    let sorted_below = |x: &PartialAssignment| -> Result<Vec<PartialAssignment>> {
        let mut v = poset_below(f, x)?.assignments().to_vec();
        v.sort();
        Ok(v)
    };
    let tops: Vec<&PartialAssignment> = intersection
        .iter()
        .filter(|x| {
            !intersection
                .iter()
                .any(|y| x.numeric().is_proper_subset(y.numeric()))
        })
        .collect();
    let maximal = match tops.as_slice() {
        [m] => Some((*m).clone()),
        _ => None,
    };
    let holds_at_maximal = match &maximal {
        Some(m) => sorted_below(m)? == intersection,
        None => false,
    };
    Ok(IntersectionWitness {
        holds: sorted_below(&c)? == intersection,
        agreement,
        c,
        intersection,
        maximal,
        holds_at_maximal,
    })
}
