use std::path::Path;

use num_traits::One;
use prunix::geometry::{
    check_antimatroid_family, check_antimatroid_words, check_convex_geometry, closure_in, dual,
    excludable, feasible_language, full_sets, generate_from_circuits, generate_from_paths,
    rooted_circuits,
};
use prunix::identity::{
    classify, expectation_check, identity_sum, identity_sum_exact, interval_cover, phi, pi2_exact,
    product_term, pushforward_empirical, rng_from_seed, sample_pi1_with, verify_interval_partition,
    TOLERANCE,
};
use prunix::lattice::{
    build_lattice, export_dot, is_distributive, is_k_distributive, is_meet_distributive,
};
use prunix::pruning::{
    identifiable_paths, identifiable_rule, kcore_circuits, kcore_paths, kcore_rule, leaf_rule,
    parse_edge_list, parse_hyperedge_list, precedences, prune_keeping, reachable_sets,
    removal_words, tau_min_reachable, minimal_reachable_supersets, CircuitRule, PathRule,
};
use prunix::random::random_circuit_geometry;
use prunix::sets::{
    boolean_lattice, parse_family, parse_rooted, parse_words, serialize_family, serialize_rooted,
    RootedKind,
};
use prunix::{
    AxiomReport, ClosedSetLattice, ConvexGeometry, ElementSet, Error, Graph, GroundSet,
    Hypergraph, RemovalRule, SetFamily, SimpleWord, WeightVector,
};
use serde_json::{json, Value};

use crate::args::{
    CheckArgs, CheckMode, ClosureArgs, Encoding, GenerateCommand, IdentityArgs, LatticeCommand,
    PruneAction, PruneArgs, SampleCommand, Statistic, WeightArgs,
};
use crate::{Fail, Output, Res};

pub fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| Fail(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: prunix::Result<T>) -> Res<T> {
    r.map_err(|e| Fail(format!("{}: {e}", path.display())))
}

pub fn load_family(path: &Path) -> Res<SetFamily> {
    in_file(path, parse_family(&read(path)?))
}

fn load_geometry(path: &Path) -> Res<ConvexGeometry> {
    in_file(path, ConvexGeometry::new(load_family(path)?))
}

pub fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn set_json(ground: &GroundSet, s: ElementSet) -> Value {
    json!(ground.labels_of(s))
}

fn word_text(ground: &GroundSet, w: &SimpleWord) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        ground.format_word(w)
    }
}

/// Weights from `--p`, `--weights` or `--indicator`; random from the seed otherwise.
pub fn weights(ground: &GroundSet, a: &WeightArgs, seed: u64) -> Res<WeightVector> {
    if let Some(text) = &a.p {
        return Ok(WeightVector::parse(ground, text)?);
    }
    if let Some(path) = &a.weights {
        return in_file(path, WeightVector::from_json(ground, &read(path)?));
    }
    if let Some(text) = &a.indicator {
        return Ok(WeightVector::indicator(ground.len(), ground.parse_set(text)?));
    }
    Ok(WeightVector::random(ground.len(), &mut rng_from_seed(seed)))
}

fn family_output(f: &SetFamily) -> Output {
    let text = serialize_family(f);
    let json: Value = serde_json::from_str(&text).expect("serialized family is JSON");
    Output::new(text, json)
}

fn report_output(property: &str, report: &AxiomReport, ground: &GroundSet) -> Output {
    let violations: Vec<String> = report.violations().iter().map(|v| v.describe(ground)).collect();
    Output::new(
        format!("{property}: {}", yes(report.holds())),
        json!({ "property": property, "holds": report.holds(), "violations": violations }),
    )
    .verdict(report.holds(), || format!("{property} fails:\n{}", report.describe(ground)))
}

pub fn check(a: CheckArgs, seed: u64) -> Res<Output> {
    if let Some(path) = &a.feasible {
        let f = load_family(path)?;
        let report = check_antimatroid_family(&f, 1_000_000)?;
        return Ok(report_output("antimatroid", &report, f.ground()));
    }
    if let Some(path) = &a.words {
        let (ground, words) = in_file(path, parse_words(&read(path)?))?;
        let report = check_antimatroid_words(&words, &ground)?;
        return Ok(report_output("antimatroid", &report, &ground));
    }
    let path = a.family.as_deref().expect("clap requires one input");
    let f = load_family(path)?;
    Ok(match a.mode {
        CheckMode::Axioms => report_output("convex geometry", &check_convex_geometry(&f), f.ground()),
        CheckMode::Partition => {
            report_output("interval partition", &verify_interval_partition(&f)?, f.ground())
        }
        CheckMode::Classify => {
            let c = classify(&f, a.trials, seed)?;
            let text = format!(
                "convex geometry: {}\ninterval partition: {}\nidentity: {}",
                yes(c.is_geometry),
                yes(c.is_partition),
                yes(c.identity_holds)
            );
            let json = json!({
                "convex_geometry": c.is_geometry,
                "interval_partition": c.is_partition,
                "identity": c.identity_holds,
            });
            Output::new(text, json).verdict(c.agree() && c.is_geometry, || {
                if c.agree() {
                    "not a convex geometry".to_string()
                } else {
                    "verdicts disagree".to_string()
                }
            })
        }
    })
}

pub fn generate(g: GenerateCommand, seed: u64) -> Res<Output> {
    let rooted_file = |path: &Path| in_file(path, parse_rooted(&read(path)?));
    match g {
        GenerateCommand::Circuits { rooted } => {
            let (ground, _, r) = rooted_file(&rooted)?;
            Ok(family_output(generate_from_circuits(&r, &ground)?.family()))
        }
        GenerateCommand::Paths { rooted } => {
            let (ground, _, r) = rooted_file(&rooted)?;
            Ok(family_output(generate_from_paths(&r, &ground)?.family()))
        }
        GenerateCommand::Full { rooted } => {
            let (ground, _, r) = rooted_file(&rooted)?;
            Ok(family_output(&full_sets(&r, &ground)?))
        }
        GenerateCommand::RootedCircuits { family } => {
            let geo = load_geometry(&family)?;
            let circuits = rooted_circuits(&geo)?;
            let text = serialize_rooted(geo.ground(), RootedKind::Circuits, &circuits);
            let json = serde_json::from_str(&text).expect("serialized rooted sets are JSON");
            Ok(Output::new(text, json))
        }
        GenerateCommand::Dual { family } => Ok(family_output(&dual(&load_family(&family)?))),
        GenerateCommand::Boolean { ground } => {
            Ok(family_output(&boolean_lattice(&GroundSet::new(ground)?)?))
        }
        GenerateCommand::Language { feasible, budget } => {
            let f = load_family(&feasible)?;
            let words = feasible_language(&f, budget)?;
            let ground = f.ground();
            let text: Vec<String> = words.iter().map(|w| word_text(ground, w)).collect();
            let json = json!({
                "ground": ground.labels(),
                "words": words.iter().map(|w| w.letters().iter().map(|&i| ground.label(i)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            Ok(Output::new(text.join("\n"), json))
        }
        GenerateCommand::Random { n, circuits, max_size } => {
            if n > 16 {
                return Err(Error::GroundTooLarge { size: n, limit: 16 }.into());
            }
            let geo = random_circuit_geometry(n, circuits, max_size.max(1), &mut rng_from_seed(seed));
            Ok(family_output(geo.family()))
        }
    }
}

pub fn closure(a: ClosureArgs) -> Res<Output> {
    let f = load_family(&a.family)?;
    let ground = f.ground();
    let s = ground.parse_set(&a.set)?;
    let c = closure_in(&f, s).ok_or_else(|| Fail("no member of the family contains the set".into()))?;
    let ex = excludable(&f, c)?;
    let mut text = format!("closure: {}\nextreme points: {}", ground.format_set(c), ground.format_set(ex));
    let mut json = json!({ "closure": set_json(ground, c), "extreme_points": set_json(ground, ex) });
    let mut witness = None;
    if a.interval {
        match phi(&f, s) {
            Ok(top) => {
                let low = excludable(&f, top)?;
                text.push_str(&format!("\ninterval: [{}, {}]", ground.format_set(low), ground.format_set(top)));
                json["interval"] = json!([set_json(ground, low), set_json(ground, top)]);
            }
            Err(e @ (Error::NoCoveringInterval(_) | Error::MultipleCoveringIntervals { .. })) => {
                witness = Some(e.to_string());
            }
            Err(e) => return Err(e.into()),
        }
    }
    let out = Output::new(text, json);
    Ok(match witness {
        Some(w) => out.verdict(false, || w),
        None => out,
    })
}

pub fn identity(a: IdentityArgs, seed: u64) -> Res<Output> {
    let f = load_family(&a.family)?;
    let ground = f.ground();
    let w = weights(ground, &a.weights, seed)?;
    let mut lines = Vec::new();
    let mut terms = Vec::new();
    if a.terms {
        let exact = w.to_exact();
        for (ex, top) in interval_cover(&f).pairs {
            let label = format!("[{}, {}]", ground.format_set(ex), ground.format_set(top));
            if a.exact {
                let t = product_term(exact.ps(), top, ex);
                lines.push(format!("{label} {t}"));
                terms.push(json!({ "ex": set_json(ground, ex), "set": set_json(ground, top), "term": t.to_string() }));
            } else {
                let t = product_term(w.ps(), top, ex);
                lines.push(format!("{label} {t:.12}"));
                terms.push(json!({ "ex": set_json(ground, ex), "set": set_json(ground, top), "term": t }));
            }
        }
    }
    let (sum_text, sum_json, holds) = if a.exact {
        let s = identity_sum_exact(&f, &w.to_exact());
        (s.to_string(), json!(s.to_string()), s.is_one())
    } else {
        let s = identity_sum(&f, &w);
        (format!("{s:.12}"), json!(s), (s - 1.0).abs() < TOLERANCE)
    };
    lines.push(sum_text.clone());
    let mut json = json!({ "sum": sum_json, "holds": holds });
    if a.terms {
        json["terms"] = Value::Array(terms);
    }
    Ok(Output::new(lines.join("\n"), json).verdict(holds, || format!("identity sum is {sum_text}, not 1")))
}

fn statistic(g: &ConvexGeometry, s: Statistic) -> impl Fn(ElementSet) -> f64 + Sync + '_ {
    let top = g.ground().full();
    move |d| match s {
        Statistic::One => 1.0,
        Statistic::ClosureSize => g.closure(d).len() as f64,
        Statistic::Top => f64::from(u8::from(g.closure(d) == top)),
    }
}

pub fn sample(s: SampleCommand, seed: u64) -> Res<Output> {
    match s {
        SampleCommand::Pi1 { family, weights: wa, samples } => {
            let f = load_family(&family)?;
            let ground = f.ground();
            let w = weights(ground, &wa, seed.wrapping_add(1))?;
            let mut rng = rng_from_seed(seed);
            let draws: Vec<ElementSet> = (0..samples).map(|_| sample_pi1_with(&w, &mut rng)).collect();
            let text: Vec<String> = draws.iter().map(|&d| ground.format_set(d)).collect();
            let json: Vec<Value> = draws.iter().map(|&d| set_json(ground, d)).collect();
            Ok(Output::new(text.join("\n"), json!(json)))
        }
        SampleCommand::Pi2 { family, weights: wa, samples, expect } => {
            let g = load_geometry(&family)?;
            let ground = g.ground();
            let w = weights(ground, &wa, seed.wrapping_add(1))?;
            let exact = pi2_exact(&g, &w)?;
            let empirical = if samples > 0 {
                Some(pushforward_empirical(&g, &w, samples, seed)?)
            } else {
                None
            };
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            for (set, p) in exact.iter() {
                let mut row = json!({ "set": set_json(ground, set), "p": p });
                match &empirical {
                    Some(e) => {
                        let q = e.prob_of(set);
                        lines.push(format!("{}\t{p:.12}\t{q:.6}", ground.format_set(set)));
                        row["empirical"] = json!(q);
                    }
                    None => lines.push(format!("{}\t{p:.12}", ground.format_set(set))),
                }
                rows.push(row);
            }
            let mut json = json!({ "distribution": rows });
            if let Some(e) = &empirical {
                let tv = exact.total_variation(e);
                lines.push(format!("total variation: {tv:.6}"));
                json["total_variation"] = json!(tv);
            }
            let mut holds = true;
            if let Some(stat) = expect {
                let (l, r) = expectation_check(&g, &w, statistic(&g, stat))?;
                holds = (l - r).abs() < TOLERANCE;
                lines.push(format!("expectation: {l:.12} {r:.12}"));
                json["expectation"] = json!([l, r]);
            }
            Ok(Output::new(lines.join("\n"), json).verdict(holds, || "the two expectations differ".into()))
        }
    }
}

fn lattice_of(f: &SetFamily) -> Res<ClosedSetLattice> {
    Ok(match ConvexGeometry::new(f.clone()) {
        Ok(g) => build_lattice(&g)?,
        Err(_) => ClosedSetLattice::from_family(f)?,
    })
}

pub fn lattice(l: LatticeCommand) -> Res<Output> {
    match l {
        LatticeCommand::Props { family, k } => {
            let lat = lattice_of(&load_family(&family)?)?;
            let meet = is_meet_distributive(&lat).holds();
            let mut lines = vec![format!("elements: {}", lat.len()), format!("meet-distributive: {}", yes(meet))];
            let mut json = json!({ "elements": lat.len(), "meet_distributive": meet });
            let mut kd = serde_json::Map::new();
            for j in 1..=k.max(1) {
                let verdict = if j == 1 { is_distributive(&lat) } else { is_k_distributive(&lat, j) };
                let (text, value) = match verdict {
                    Ok(r) => (yes(r.holds()).to_string(), json!(r.holds())),
                    Err(e @ Error::BudgetExceeded { .. }) => (format!("skipped ({e})"), Value::Null),
                    Err(e) => return Err(e.into()),
                };
                if j == 1 {
                    lines.push(format!("distributive: {text}"));
                    json["distributive"] = value;
                } else {
                    lines.push(format!("{j}-distributive: {text}"));
                    kd.insert(j.to_string(), value);
                }
            }
            json["k_distributive"] = Value::Object(kd);
            Ok(Output::new(lines.join("\n"), json))
        }
        LatticeCommand::Dot { family, labels } => {
            let lat = lattice_of(&load_family(&family)?)?;
            let dot = export_dot(&lat, labels);
            Ok(Output::new(dot.clone(), json!({ "dot": dot })))
        }
    }
}

enum Source {
    Graph(Graph, usize),
    Hyper(Hypergraph),
    Rooted,
}

fn build_rule(p: &PruneArgs) -> Res<(Box<dyn RemovalRule>, Source)> {
    let graph = || -> Res<Graph> {
        let path = p.graph.as_deref().ok_or_else(|| Fail("this rule needs --graph".into()))?;
        in_file(path, parse_edge_list(&read(path)?))
    };
    let rooted = || -> Res<_> {
        let path = p.rooted.as_deref().ok_or_else(|| Fail("this rule needs --rooted".into()))?;
        in_file(path, parse_rooted(&read(path)?))
    };
    let name = match (&p.rule, &p.rooted) {
        (Some(r), _) => r.as_str(),
        (None, Some(_)) => "rooted",
        (None, None) => return Err(Fail("give --rule or --rooted".into())),
    };
    Ok(match name {
        "leaf" => {
            let g = graph()?;
            (Box::new(leaf_rule(g.clone())), Source::Graph(g, 2))
        }
        "identifiable" => {
            let path = p.hypergraph.as_deref().ok_or_else(|| Fail("identifiable needs --hypergraph".into()))?;
            let h = in_file(path, parse_hyperedge_list(&read(path)?))?;
            (Box::new(identifiable_rule(h.clone())), Source::Hyper(h))
        }
        "circuits" | "paths" | "rooted" => {
            let (ground, kind, r) = rooted()?;
            let as_paths = name == "paths" || (name == "rooted" && kind == RootedKind::Paths);
            if as_paths {
                (Box::new(PathRule::new(ground, r)), Source::Rooted)
            } else {
                (Box::new(CircuitRule::new(ground, r)), Source::Rooted)
            }
        }
        other => match other.strip_prefix("kcore:").map(str::parse::<usize>) {
            Some(Ok(k)) if k >= 1 => {
                let g = graph()?;
                (Box::new(kcore_rule(g.clone(), k)), Source::Graph(g, k))
            }
            _ => return Err(Fail(format!("unknown rule {other:?}; use leaf, kcore:K, identifiable, circuits or paths"))),
        },
    })
}

pub fn prune(p: PruneArgs) -> Res<Output> {
    let (rule, source) = build_rule(&p)?;
    let ground = rule.ground().clone();
    let g = &ground;
    match p.action {
        PruneAction::Run { keep, order } => {
            let keep = g.parse_set(&keep)?;
            let order: Vec<usize> = order
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|l| g.index_of(l))
                .collect::<prunix::Result<_>>()?;
            let trace = prune_keeping(&*rule, keep, &order);
            let last = trace.last();
            let text = format!("removed: {}\nremaining: {}", word_text(g, &trace.word), g.format_set(last));
            let json = json!({
                "removed": trace.word.letters().iter().map(|&i| g.label(i)).collect::<Vec<_>>(),
                "remaining": set_json(g, last),
                "states": trace.states.iter().map(|&s| set_json(g, s)).collect::<Vec<_>>(),
            });
            Ok(Output::new(text, json))
        }
        PruneAction::Tau { set } => {
            let s = g.parse_set(&set)?;
            match tau_min_reachable(&*rule, s) {
                Ok(t) => Ok(Output::new(format!("tau: {}", g.format_set(t)), json!({ "tau": set_json(g, t) }))),
                Err(Error::NonUniqueMinimum { .. }) => {
                    let minima = minimal_reachable_supersets(&*rule, s)?;
                    let listed: Vec<String> = minima.iter().map(|&m| g.format_set(m)).collect();
                    Ok(Output::new(
                        format!("tau: none\nminimal reachable supersets: {}", listed.join(" ")),
                        json!({ "tau": Value::Null, "minimal": minima.iter().map(|&m| set_json(g, m)).collect::<Vec<_>>() }),
                    )
                    .verdict(false, || format!("no unique minimal reachable superset: {}", listed.join(" "))))
                }
                Err(e) => Err(e.into()),
            }
        }
        PruneAction::Words { max_len } => {
            let words = removal_words(&*rule, max_len.unwrap_or(g.len()))?;
            let text: Vec<String> = words.iter().map(|w| word_text(g, w)).collect();
            let json: Vec<Vec<&str>> = words.iter().map(|w| w.letters().iter().map(|&i| g.label(i)).collect()).collect();
            Ok(Output::new(text.join("\n"), json!({ "ground": g.labels(), "words": json })))
        }
        PruneAction::Precedences { element } => {
            let x = g.index_of(&element)?;
            let sets = precedences(&*rule, x)?;
            let text: Vec<String> = sets.iter().map(|&s| g.format_set(s)).collect();
            let json: Vec<Value> = sets.iter().map(|&s| set_json(g, s)).collect();
            Ok(Output::new(text.join("\n"), json!(json)))
        }
        PruneAction::Check => {
            let report = prunix::pruning::is_pruning_process(&*rule)?;
            Ok(report_output("pruning process", &report, g))
        }
        PruneAction::Geometry => Ok(family_output(&reachable_sets(&*rule)?)),
        PruneAction::Encode { r#as } => {
            let (kind, rooted) = match (source, r#as) {
                (Source::Graph(graph, k), Encoding::Circuits) => (RootedKind::Circuits, kcore_circuits(&graph, k)),
                (Source::Graph(graph, k), Encoding::Paths) => (RootedKind::Paths, kcore_paths(&graph, k)),
                (Source::Hyper(h), Encoding::Paths) => (RootedKind::Paths, identifiable_paths(&h)),
                (Source::Hyper(_), Encoding::Circuits) => {
                    return Err(Fail("the identifiable rule is encoded by paths; use --as paths".into()))
                }
                (Source::Rooted, _) => return Err(Fail("the rule is already given by rooted sets".into())),
            };
            let text = serialize_rooted(g, kind, &rooted);
            let json = serde_json::from_str(&text).expect("serialized rooted sets are JSON");
            Ok(Output::new(text, json))
        }
    }
}
