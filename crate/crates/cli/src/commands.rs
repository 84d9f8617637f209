use std::fmt::Write as _;
use std::path::Path;

use ordspace::census::{run_census, BallExtreme, CensusOptions, Filter};
use ordspace::euclid::{check_r2_necessary, decide_embeddable, embed_heuristic, menger_probe, BoundCheck, HeuristicBudget, Verdict};
use ordspace::io::{parse_comparisons, parse_distance_csv, parse_rank_matrix};
use ordspace::line::{classify_four_point, embed_line, find_majorizing_enumeration, FourPointClass};
use ordspace::orddist::{d_ord, d_ord_oracle};
use ordspace::{
    ball_set, from_comparisons, hasse, hasse_isomorphic, is_isomorphic, ordinal_type, Error, Guard,
    OrdinalSpace,
};
use serde_json::{json, Value};

use crate::args::{BudgetArgs, Cli, Command, FilterArg};
use crate::render::{mapping, matrix_json, point, points, q, set};
use crate::{at, envelope, Failure, Response};

type Res = Result<Response, Failure>;

pub fn name(c: &Command) -> &'static str {
    match c {
        Command::Ordtype { .. } => "ordtype",
        Command::Validate { .. } => "validate",
        Command::Iso { .. } => "iso",
        Command::Dord { .. } => "dord",
        Command::Balls { .. } => "balls",
        Command::Hasse { .. } => "hasse",
        Command::Embed1d { .. } => "embed1d",
        Command::FourPoint { .. } => "t10",
        Command::Embednd { .. } => "embednd",
        Command::CheckR2 { .. } => "check-r2",
        Command::Census { .. } => "census",
        Command::MengerProbe { .. } => "menger-probe",
    }
}

pub fn dispatch(cli: &Cli) -> Res {
    let g = &cli.global;
    let guard = Guard { max_points: g.max_points, max_vertices: g.max_vertices };
    let budget = |b: &BudgetArgs| HeuristicBudget { restarts: b.restarts, iterations: b.iterations, seed: g.seed };
    match &cli.command {
        Command::Ordtype { input } => ordtype(input),
        Command::Validate { input } => validate(input),
        Command::Iso { first, second } => iso(&load(first)?, &load(second)?, guard),
        Command::Dord { first, second, oracle } => dord(&load(first)?, &load(second)?, *oracle, guard),
        Command::Balls { input } => balls(&load(input)?),
        Command::Hasse { input, .. } => hasse_cmd(&load(input)?),
        Command::Embed1d { input } => embed1d(&load(input)?, guard),
        Command::FourPoint { input } => four_point(&load(input)?),
        Command::Embednd { input, dim, budget: b } => embednd(&load(input)?, *dim, guard, budget(b)),
        Command::CheckR2 { input } => check_r2(&load(input)?),
        Command::Census { n, filter, huge, out, timing } => {
            let filter = match filter {
                FilterArg::All => Filter::All,
                FilterArg::Injective => Filter::Injective,
            };
            let r = census(*n, filter, *huge, *timing)?;
            match out {
                None => Ok(r),
                Some(path) => {
                    let body = if path.extension().is_some_and(|e| e == "json") {
                        let mut s = serde_json::to_string_pretty(&envelope(cli, r.json.clone())).expect("serializable");
                        s.push('\n');
                        s
                    } else {
                        r.text.clone()
                    };
                    std::fs::write(path, body)
                        .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
                    Ok(Response {
                        text: format!("{}wrote {}\n", r.text, path.display()),
                        ..r
                    })
                }
            }
        }
        Command::MengerProbe { input, dim, budget: b } => probe(&load(input)?, *dim, guard, budget(b)),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

/// Space from a rank matrix, a distance CSV or a comparison list, by
/// extension.
fn load(path: &Path) -> Result<OrdinalSpace, Failure> {
    let text = read(path)?;
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let parsed = match ext {
        "csv" => parse_distance_csv(&text).map(|d| ordinal_type(&d)),
        "cmp" => parse_comparisons(&text).and_then(|c| from_comparisons(&c)),
        _ => parse_rank_matrix(&text),
    };
    parsed.map_err(|e| at(path, e))
}

fn space_json(s: &OrdinalSpace) -> Value {
    json!({ "n": s.n(), "k": s.k(), "rank_matrix": matrix_json(s) })
}

fn ordtype(input: &Path) -> Res {
    let d = parse_distance_csv(&read(input)?).map_err(|e| at(input, e))?;
    let s = ordinal_type(&d);
    Ok(Response {
        negative: false,
        text: s.to_string(),
        json: json!({ "space": space_json(&s), "metric": d.is_metric() }),
        dot: None,
    })
}

fn validate(input: &Path) -> Res {
    let c = parse_comparisons(&read(input)?).map_err(|e| at(input, e))?;
    match from_comparisons(&c) {
        Ok(s) => Ok(Response {
            negative: false,
            text: format!("valid ordinal space\n{s}"),
            json: json!({ "valid": true, "space": space_json(&s) }),
            dot: None,
        }),
        Err(Error::AxiomViolation { axiom, witness }) => {
            let quads: Vec<String> = witness.iter().map(|w| points(w)).collect();
            Ok(Response {
                negative: true,
                text: format!("axiom {axiom} violated by: {}\n", quads.join("; ")),
                json: json!({ "valid": false, "axiom": axiom.name(), "witness": quads }),
                dot: None,
            })
        }
        Err(Error::Underdetermined { first, second }) => Ok(Response {
            negative: true,
            text: format!(
                "comparisons leave {} and {} unordered\n",
                set(&[first.0, first.1]),
                set(&[second.0, second.1])
            ),
            json: json!({ "valid": false, "unordered": [set(&[first.0, first.1]), set(&[second.0, second.1])] }),
            dot: None,
        }),
        Err(e) => Err(at(input, e)),
    }
}

fn iso(a: &OrdinalSpace, b: &OrdinalSpace, guard: Guard) -> Res {
    let hasse_iso = if a.n() == b.n() {
        hasse_isomorphic(&hasse(&ball_set(a)), &hasse(&ball_set(b)), guard)?.is_some()
    } else {
        false
    };
    let yes_no = if hasse_iso { "yes" } else { "no" };
    Ok(match is_isomorphic(a, b) {
        Some(w) => {
            // relabeling the second space by `w` gives the first
            Response {
                negative: false,
                text: format!("isomorphic\nwitness: {}\nHasse diagrams isomorphic: {yes_no}\n", mapping(&w)),
                json: json!({ "isomorphic": true, "witness": w, "hasse_isomorphic": hasse_iso }),
                dot: None,
            }
        }
        None => Response {
            negative: true,
            text: format!("not isomorphic; Hasse diagrams isomorphic: {yes_no}\n"),
            json: json!({ "isomorphic": false, "hasse_isomorphic": hasse_iso }),
            dot: None,
        },
    })
}

fn dord(a: &OrdinalSpace, b: &OrdinalSpace, oracle: bool, guard: Guard) -> Res {
    let r = d_ord(a, b, guard)?;
    let mut text = format!("d_ord = {}\nwitness: {}\n", r.value, mapping(&r.witness));
    let pair = |p: (usize, usize)| set(&[p.0, p.1]);
    let dis: Vec<String> = r.disagreements.iter().map(|&(p, q)| format!("{} vs {}", pair(p), pair(q))).collect();
    for d in &dis {
        let _ = writeln!(text, "disagree: {d}");
    }
    let mut body = json!({ "d_ord": r.value, "witness": r.witness, "disagreements": dis });
    if oracle {
        let (v, divisible) = d_ord_oracle(a, b, guard)?;
        let _ = writeln!(text, "oracle: {v} (ordered quadruples / 8, divisible: {})", if divisible { "yes" } else { "no" });
        body["oracle"] = json!({ "value": v, "divisible": divisible, "agrees": v == r.value });
    }
    Ok(Response { negative: false, text, json: body, dot: None })
}

fn balls(s: &OrdinalSpace) -> Res {
    let bs = ball_set(s);
    let mut text = format!("{}\n", bs.len());
    let mut list = Vec::new();
    for (i, b) in bs.balls().iter().enumerate() {
        let prov: Vec<String> = bs.provenance(i).iter().map(|&(c, t)| format!("{}@{t}", point(c))).collect();
        let _ = writeln!(text, "{}  [{}]", set(b), prov.join(" "));
        list.push(json!({ "members": set(b), "provenance": prov }));
    }
    Ok(Response {
        negative: false,
        text,
        json: json!({ "count": bs.len(), "balls": list }),
        dot: None,
    })
}

fn hasse_cmd(s: &OrdinalSpace) -> Res {
    let h = hasse(&ball_set(s));
    let v = h.vertices();
    let mut arcs = h.arcs().to_vec();
    arcs.sort_unstable();
    let mut text = format!(
        "vertices: {}\narcs: {}\ntree: {}\n",
        h.vertex_count(),
        arcs.len(),
        if h.is_tree() { "yes" } else { "no" }
    );
    let arc_strings: Vec<String> = arcs.iter().map(|&(a, b)| format!("{} -> {}", set(&v[a]), set(&v[b]))).collect();
    for a in &arc_strings {
        let _ = writeln!(text, "{a}");
    }
    Ok(Response {
        negative: false,
        text,
        json: json!({
            "vertices": v.iter().map(|x| set(x)).collect::<Vec<_>>(),
            "arcs": arc_strings,
            "tree": h.is_tree(),
        }),
        dot: Some(h.to_dot()),
    })
}

fn embed1d(s: &OrdinalSpace, guard: Guard) -> Res {
    match embed_line(s, guard)? {
        Some(w) => {
            let coords = w.coordinates();
            let placed: Vec<String> = (0..s.n()).map(|i| format!("{}={}", point(i), q(&coords[i]))).collect();
            Ok(Response {
                negative: false,
                text: format!("embeddable in R^1\nordering: {}\ncoordinates: {}\n", points(&w.ordering), placed.join(" ")),
                json: json!({
                    "embeddable": true,
                    "ordering": w.ordering,
                    "coordinates": coords.iter().map(q).collect::<Vec<_>>(),
                }),
                dot: None,
            })
        }
        None => {
            let top = s.pair_ranks().iter().filter(|&&r| r == s.k()).count();
            let note = if top > 1 {
                format!("the largest distance is attained by {top} pairs; on a line it is unique")
            } else if find_majorizing_enumeration(s, guard)?.is_none() {
                "no enumeration of the points has the majorization property".to_string()
            } else {
                "no ordering of the points admits a realization (exact LP)".to_string()
            };
            Ok(Response {
                negative: true,
                text: format!("not embeddable in R^1\nobstruction: {note}\n"),
                json: json!({ "embeddable": false, "obstruction": note }),
                dot: None,
            })
        }
    }
}

fn four_point(s: &OrdinalSpace) -> Res {
    let c = classify_four_point(s)?;
    Ok(match &c {
        FourPointClass::Embeddable { case, enumeration } => Response {
            negative: false,
            text: format!("{case}\nenumeration: {}\n", points(enumeration)),
            json: json!({ "class": case.to_string(), "enumeration": enumeration }),
            dot: None,
        },
        FourPointClass::NotEmbeddable => Response {
            negative: true,
            text: format!("{c}\n"),
            json: json!({ "class": c.to_string() }),
            dot: None,
        },
    })
}

fn embednd(s: &OrdinalSpace, dim: usize, guard: Guard, budget: HeuristicBudget) -> Res {
    if dim == 0 {
        return Err(Failure::Input("dimension must be at least 1".into()));
    }
    let verdict = decide_embeddable(s, dim, guard, budget)?;
    let mut text = format!("R^{dim}: {verdict}\n");
    let mut body = json!({ "dim": dim, "verdict": verdict.to_string() });
    if verdict == Verdict::Embeddable && dim >= 2 && s.n() > dim + 1 {
        let out = embed_heuristic(s, dim, budget);
        if let Some(w) = out.witness {
            let _ = writeln!(text, "axis weights: {}", w.axis_weights.iter().map(q).collect::<Vec<_>>().join(" "));
            for (i, c) in w.coords.iter().enumerate() {
                let _ = writeln!(text, "{}: {}", point(i), c.iter().map(q).collect::<Vec<_>>().join(" "));
            }
            body["axis_weights"] = json!(w.axis_weights.iter().map(q).collect::<Vec<_>>());
            body["coordinates"] = json!(w.coords.iter().map(|c| c.iter().map(q).collect::<Vec<_>>()).collect::<Vec<_>>());
            body["restarts_used"] = json!(out.restarts_used);
        }
    }
    if dim == 2 {
        let r = check_r2_necessary(s);
        let _ = writeln!(text, "planar counting conditions: {}", if r.all_hold() { "hold" } else { "violated" });
        body["planar_conditions_hold"] = json!(r.all_hold());
    }
    Ok(Response {
        negative: verdict == Verdict::NotEmbeddable,
        text,
        json: body,
        dot: None,
    })
}

fn bound_line(b: &BoundCheck) -> (String, Value) {
    let status = match (b.applicable, b.holds) {
        (false, _) => "n/a",
        (true, true) => "ok",
        (true, false) => "FAIL",
    };
    (
        format!("{}: {}: {} vs {} {status}", b.clause, b.description, b.value, b.bound),
        json!({
            "clause": b.clause, "description": b.description, "value": b.value,
            "bound": b.bound, "applicable": b.applicable, "holds": b.holds,
        }),
    )
}

fn check_r2(s: &OrdinalSpace) -> Res {
    let r = check_r2_necessary(s);
    let mut text = String::from("necessary conditions for R^2 (passing proves nothing)\n");
    let mut checks = Vec::new();
    for b in std::iter::once(&r.diametrical).chain(&r.class_bounds) {
        let (line, j) = bound_line(b);
        let _ = writeln!(text, "{line}");
        checks.push(j);
    }
    let _ = writeln!(text, "{}", if r.all_hold() { "all hold" } else { "not embeddable in R^2" });
    Ok(Response {
        negative: !r.all_hold(),
        text,
        json: json!({ "n": r.n, "checks": checks, "all_hold": r.all_hold() }),
        dot: None,
    })
}

fn extreme(label: &str, e: &Option<BallExtreme>, text: &mut String) -> Value {
    match e {
        None => {
            let _ = writeln!(text, "{label}: not enumerated");
            Value::Null
        }
        Some(e) => {
            let expected = e.expected.map_or("none".to_string(), |x| x.to_string());
            let _ = writeln!(
                text,
                "{label}: {} (expected {expected}, {} attainers) {}\nwitness:\n{}",
                e.value, e.attainers, e.verdict, e.witness
            );
            json!({
                "value": e.value, "expected": e.expected, "attainers": e.attainers,
                "verdict": e.verdict.to_string(), "witness": matrix_json(&e.witness),
            })
        }
    }
}

fn census(n: usize, filter: Filter, huge: bool, timing: bool) -> Res {
    let r = run_census(n, filter, CensusOptions { huge })?;
    let mut text = format!(
        "n: {n}\nfilter: {filter}\nclasses: {}\nburnside count: {}\n",
        r.total_nonisomorphic, r.burnside_count
    );
    let max = extreme("max balls (all spaces)", &r.max_balls, &mut text);
    let min = extreme("min balls (injective ranks)", &r.min_balls_distinct, &mut text);
    match r.r1_embeddable_count {
        Some(c) => {
            let _ = writeln!(text, "line-embeddable classes: {c}");
        }
        None => text.push_str("line-embeddable classes: not computed\n"),
    }
    let _ = writeln!(text, "maximum sequence: {}\ntriangular minimum: {}", r.matches_a263511, r.matches_triangular);
    let mut body = json!({
        "n": n,
        "filter": filter.to_string(),
        "total_nonisomorphic": r.total_nonisomorphic,
        "burnside_count": r.burnside_count.to_string(),
        "max_balls": max,
        "min_balls_distinct": min,
        "r1_embeddable_count": r.r1_embeddable_count,
        "matches_A263511": r.matches_a263511.to_string(),
        "matches_triangular": r.matches_triangular.to_string(),
    });
    if timing {
        let ms = r.elapsed.as_millis();
        let _ = writeln!(text, "elapsed: {ms} ms");
        body["elapsed_ms"] = json!(ms as u64);
    }
    Ok(Response { negative: false, text, json: body, dot: None })
}

fn probe(s: &OrdinalSpace, dim: usize, guard: Guard, budget: HeuristicBudget) -> Res {
    let r = menger_probe(s, dim, guard, budget)?;
    let refuted: Vec<String> = r.refuted.iter().map(|x| set(x)).collect();
    let inconclusive: Vec<String> = r.inconclusive.iter().map(|x| set(x)).collect();
    let mut text = format!(
        "R^{dim}, subsets up to {} points: {} checked\nwhole space: {}\nrefuted subsets: {}\ninconclusive subsets: {}\n",
        r.max_subset,
        r.subsets_checked,
        r.whole,
        if refuted.is_empty() { "none".into() } else { refuted.join(" ") },
        if inconclusive.is_empty() { "none".into() } else { inconclusive.join(" ") },
    );
    let status = if r.is_counterexample() {
        "COUNTEREXAMPLE: every small subset embeds but the whole space does not"
    } else if r.consistent() {
        "consistent with the subset criterion"
    } else {
        "INCONSISTENT: a refuted subset inside an embedded space"
    };
    let _ = writeln!(text, "{status}");
    Ok(Response {
        negative: false,
        text,
        json: json!({
            "dim": dim, "max_subset": r.max_subset, "subsets_checked": r.subsets_checked,
            "whole": r.whole.to_string(), "refuted": refuted, "inconclusive": inconclusive,
            "counterexample": r.is_counterexample(), "consistent": r.consistent(),
        }),
        dot: None,
    })
}
