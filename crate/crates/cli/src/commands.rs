use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use forestprob::formulas::{audit_complete_bipartite, p1_family, p_complete_bipartite};
use forestprob::graph::family::classify as classify_graph;
use forestprob::process::distribution::{fraction, ratio_to_f64};
use forestprob::process::{
    estimate_with_stderr, exact_bruteforce_with, exact_subset_dp, exact_subset_dp_forced, monte_carlo_parallel,
    BruteForceOptions, McEstimate, BRUTE_FORCE_EDGE_LIMIT, SUBSET_DP_VERTEX_LIMIT,
};
use forestprob::search::{self, SweepEngine, SweepFamily};
use forestprob::{Classification, Error, FamilySpec, Graph, TreeDistribution};
use serde_json::{json, Value};

use crate::source::{load, CliError, CliResult, Loaded};
use crate::{ClassifyArgs, ComputeArgs, Engine, FormulaArgs, SearchArgs, SimulateArgs, VerifyArgs};

fn tool() -> Value {
    json!({ "name": "forestprob", "version": env!("CARGO_PKG_VERSION") })
}

fn distribution_json(d: &TreeDistribution) -> Value {
    d.iter()
        .map(|(k, p)| {
            json!({
                "k": k,
                "num": p.numer().to_string(),
                "den": p.denom().to_string(),
                "decimal": ratio_to_f64(p),
            })
        })
        .collect()
}

fn distribution_text(d: &TreeDistribution) -> String {
    let mut out = format!("distribution: {}\n", d.summary());
    for (k, p) in d.iter() {
        let _ = writeln!(out, "{k}: {} ({:.12})", fraction(p), ratio_to_f64(p));
    }
    out
}

fn estimate_json(e: &McEstimate) -> Value {
    e.counts
        .iter()
        .map(|(&k, &count)| {
            let (p, se) = estimate_with_stderr(e, k);
            json!({ "k": k, "count": count, "estimate": p, "stderr": se })
        })
        .collect()
}

fn estimate_text(e: &McEstimate) -> String {
    let mut out = format!("trials: {} seed: {} workers: {}\n", e.trials, e.seed, e.workers);
    for (&k, &count) in &e.counts {
        let (p, se) = estimate_with_stderr(e, k);
        let _ = writeln!(out, "{k}: {p:.6} ± {se:.6} ({count}/{})", e.trials);
    }
    out
}

fn print_json(doc: &Value) {
    println!("{}", serde_json::to_string_pretty(doc).expect("JSON values always serialize"));
}

fn write_or_print(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// The family spec of a loaded graph: as given, or by classification.
fn family_of(loaded: &Loaded) -> CliResult<Option<FamilySpec>> {
    if loaded.spec.is_some() {
        return Ok(loaded.spec);
    }
    match classify_graph(&loaded.graph.strip_isolated())? {
        Classification::Family(spec) => Ok(Some(spec)),
        Classification::Unclassified(_) => Ok(None),
    }
}

fn exact(g: &Graph, engine: Engine, args: &ComputeArgs) -> CliResult<TreeDistribution> {
    let opts = BruteForceOptions { force: args.force, workers: args.workers };
    Ok(match engine {
        Engine::Brute => exact_bruteforce_with(g, opts)?,
        Engine::Dp if args.force => exact_subset_dp_forced(g)?,
        Engine::Dp => exact_subset_dp(g)?,
        _ => unreachable!("only exact graph engines"),
    })
}

pub fn compute(args: &ComputeArgs) -> CliResult<ExitCode> {
    let loaded = load(&args.input)?;
    let g = &loaded.graph;
    if g.m() == 0 {
        return Err(Error::EmptyGraph.into());
    }

    if args.engine == Engine::Mc {
        let e = monte_carlo_parallel(g, args.trials, args.seed, args.workers)?;
        if args.json {
            print_json(&json!({
                "tool": tool(),
                "command": "compute",
                "input": loaded.echo,
                "graph": { "n": g.n(), "m": g.m() },
                "engine": "mc",
                "trials": e.trials,
                "seed": e.seed,
                "workers": e.workers,
                "estimates": estimate_json(&e),
            }));
        } else {
            print!("engine: mc\n{}", estimate_text(&e));
        }
        return Ok(ExitCode::SUCCESS);
    }

    let family = match args.engine {
        Engine::Auto | Engine::Formula => family_of(&loaded)?,
        _ => None,
    };
    let closed = family.map(|spec| p1_family(&spec));
    let (engine, dist) = match (args.engine, closed) {
        (Engine::Formula, Some(r)) => ("formula", r?),
        (Engine::Formula, None) => {
            return Err(Error::NoClosedForm("graph is not a member of a named family".into()).into())
        }
        (Engine::Auto, Some(Ok(d))) => ("formula", d),
        (Engine::Auto, _) => {
            let n = g.strip_isolated().n();
            if n <= SUBSET_DP_VERTEX_LIMIT || args.force {
                ("dp", exact(g, Engine::Dp, args)?)
            } else if g.m() <= BRUTE_FORCE_EDGE_LIMIT {
                ("brute", exact(g, Engine::Brute, args)?)
            } else {
                return Err(Error::TooManyVertices { vertices: n, limit: SUBSET_DP_VERTEX_LIMIT }.into());
            }
        }
        (Engine::Brute, _) => ("brute", exact(g, Engine::Brute, args)?),
        (Engine::Dp, _) => ("dp", exact(g, Engine::Dp, args)?),
        (Engine::Mc, _) => unreachable!("handled above"),
    };

    if args.json {
        print_json(&json!({
            "tool": tool(),
            "command": "compute",
            "input": loaded.echo,
            "graph": { "n": g.n(), "m": g.m() },
            "family": family.map(|s| s.to_string()),
            "engine": engine,
            "workers": args.workers,
            "distribution": distribution_json(&dist),
        }));
    } else {
        print!("engine: {engine}\n{}", distribution_text(&dist));
    }
    Ok(ExitCode::SUCCESS)
}

pub fn simulate(args: &SimulateArgs) -> CliResult<ExitCode> {
    let loaded = load(&args.input)?;
    let e = monte_carlo_parallel(&loaded.graph, args.trials, args.seed, args.workers)?;
    if args.json {
        print_json(&json!({
            "tool": tool(),
            "command": "simulate",
            "input": loaded.echo,
            "graph": { "n": loaded.graph.n(), "m": loaded.graph.m() },
            "engine": "mc",
            "trials": e.trials,
            "seed": e.seed,
            "workers": e.workers,
            "estimates": estimate_json(&e),
        }));
    } else {
        print!("{}", estimate_text(&e));
    }
    Ok(ExitCode::SUCCESS)
}

pub fn classify(args: &ClassifyArgs) -> CliResult<ExitCode> {
    let loaded = load(&args.input)?;
    let c = classify_graph(&loaded.graph)?;
    if args.json {
        let family = match c {
            Classification::Family(spec) => Some(spec.to_string()),
            Classification::Unclassified(_) => None,
        };
        print_json(&json!({
            "tool": tool(),
            "command": "classify",
            "input": loaded.echo,
            "classification": c.to_string(),
            "family": family,
        }));
    } else {
        println!("{c}");
    }
    Ok(ExitCode::SUCCESS)
}

pub fn search(args: &SearchArgs) -> CliResult<ExitCode> {
    let family: SweepFamily = args.family.parse()?;
    let engine: SweepEngine = args.engine.parse()?;
    let report = search::sweep(family, args.max_vertices, engine, args.workers)?;
    let text = if args.json {
        let doc = json!({
            "tool": tool(),
            "command": "search",
            "input": { "family": family.to_string(), "max_vertices": args.max_vertices },
            "engine": engine.to_string(),
            "report": report,
        });
        serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
    } else {
        report.to_string()
    };
    write_or_print(args.output.as_deref(), &text)?;
    if let Some(path) = &args.output {
        println!("{} groups written to {}", report.groups.len(), path.display());
    }
    Ok(ExitCode::SUCCESS)
}

pub fn verify_known(args: &VerifyArgs) -> CliResult<ExitCode> {
    if args.max_t == 0 {
        return Err(CliError::Usage("--max-t must be at least 1".into()));
    }
    let mut summary = search::verify_known(args.max_t);
    for group in &args.groups {
        let members = group
            .split('/')
            .map(|s| s.parse::<FamilySpec>())
            .collect::<Result<Vec<_>, _>>()?;
        if members.len() < 2 {
            return Err(CliError::Usage(format!("--group {group:?} needs at least two specs")));
        }
        summary.items.push(search::verify_group(format!("group {group}"), &members));
    }
    let text = if args.json {
        let doc = json!({
            "tool": tool(),
            "command": "verify-known",
            "input": { "max_t": args.max_t, "groups": args.groups },
            "engine": "formula",
            "all_passed": summary.all_passed(),
            "summary": summary,
        });
        serde_json::to_string_pretty(&doc).expect("summary serializes") + "\n"
    } else {
        summary.to_string()
    };
    write_or_print(args.output.as_deref(), &text)?;
    Ok(if summary.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(3) })
}

pub fn formula(args: &FormulaArgs) -> CliResult<ExitCode> {
    if let Some(max_total) = args.audit_kst {
        return audit(max_total, args.json);
    }
    let spec: FamilySpec = args.spec.as_deref().expect("clap requires a spec").parse()?;
    match (p1_family(&spec), spec) {
        (Ok(d), _) => {
            if args.json {
                print_json(&json!({
                    "tool": tool(),
                    "command": "formula",
                    "input": { "family": spec.to_string() },
                    "engine": "formula",
                    "distribution": distribution_json(&d),
                }));
            } else {
                print!("{}", distribution_text(&d));
            }
        }
        (Err(Error::NoClosedForm(_)), FamilySpec::CompleteBipartite(s, t)) if args.printed => {
            let (s, t) = (s as u64, t as u64);
            let values: Vec<(u64, _)> = (1..=s.min(t)).map(|k| (k, p_complete_bipartite(s, t, k))).collect();
            if args.json {
                let rows: Vec<Value> = values
                    .iter()
                    .map(|(k, p)| json!({ "k": k, "num": p.numer().to_string(), "den": p.denom().to_string() }))
                    .collect();
                print_json(&json!({
                    "tool": tool(),
                    "command": "formula",
                    "input": { "family": spec.to_string(), "printed": true },
                    "engine": "published-formula",
                    "normalized": false,
                    "values": rows,
                }));
            } else {
                println!("# published K_(s,t) formula; values need not sum to 1");
                for (k, p) in &values {
                    println!("{k}: {}", fraction(p));
                }
            }
        }
        (Err(e), _) => return Err(e.into()),
    }
    Ok(ExitCode::SUCCESS)
}

fn audit(max_total: u64, as_json: bool) -> CliResult<ExitCode> {
    let rows = audit_complete_bipartite(max_total)?;
    if as_json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|r| {
                let formula: Vec<Value> = r
                    .formula
                    .iter()
                    .map(|(k, p)| json!({ "k": k, "num": p.numer().to_string(), "den": p.denom().to_string() }))
                    .collect();
                json!({
                    "s": r.s,
                    "t": r.t,
                    "formula": formula,
                    "formula_sum": { "num": r.formula_sum.numer().to_string(), "den": r.formula_sum.denom().to_string() },
                    "oracle": distribution_json(&r.oracle),
                    "mismatches": r.mismatches,
                })
            })
            .collect();
        print_json(&json!({
            "tool": tool(),
            "command": "formula",
            "input": { "audit_kst": max_total },
            "engine": "dp",
            "rows": rows,
        }));
    } else {
        for r in &rows {
            let formula: Vec<String> = r.formula.iter().map(|(k, p)| format!("{k}: {}", fraction(p))).collect();
            let status = if r.agrees() {
                "agrees".to_string()
            } else {
                let ks: Vec<String> = r.mismatches.iter().map(|k| k.to_string()).collect();
                format!("MISMATCH at k = {}", ks.join(","))
            };
            println!(
                "kst:{},{} | formula: {} (sum {}) | oracle: {} | {status}",
                r.s,
                r.t,
                formula.join(", "),
                fraction(&r.formula_sum),
                r.oracle.summary()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}
