use std::collections::HashMap;
use std::fs;
use std::io::Read;
use std::path::Path;

use effectors::generators::{
    gen_dominating_set, gen_independent_set, gen_mcc, gen_random, gen_set_cover, gen_stcon, MccInput,
    RandomParams, SetSystem, SimpleGraph,
};
use effectors::propagation::{monte_carlo_cost, probabilities, simulate_run, CostBreakdown, Method};
use effectors::rational::{format_rational, parse_rational, BigInt};
use effectors::solvers::{self, auto_algorithm, precondition, Algorithm, Strategy};
use effectors::{Budget, Instance, NodeSet};
use serde_json::{json, Map, Value};

use crate::args::{Cli, Command, CostMethod, Family, Format, GraphArgs};
use crate::Failure;

pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn json(value: &Value) -> Self {
        let mut stdout = serde_json::to_string_pretty(value).expect("JSON values always serialize");
        stdout.push('\n');
        Outcome { stdout, code: 0 }
    }
}

type CmdResult = Result<Outcome, Failure>;

pub fn run(cli: &Cli) -> CmdResult {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Validate { .. } | Command::Generate(_)) {
        return Err(Failure::usage("--format dot applies only to `validate` and `generate`"));
    }
    match &cli.command {
        Command::Validate { instance } => validate(cli, &load(instance)?),
        Command::Cost { instance, effectors, method, samples } => {
            let instance = load(instance)?;
            let x = parse_effectors(&instance, effectors)?;
            cost(cli, &instance, &x, *method, *samples)
        }
        Command::Solve { instance, algorithm } => solve(cli, &load(instance)?, algorithm),
        Command::Simulate { instance, effectors, runs } => {
            let instance = load(instance)?;
            let x = parse_effectors(&instance, effectors)?;
            simulate(cli, &instance, &x, *runs)
        }
        Command::Generate(args) => generate(cli, &args.family, args.out.as_deref()),
    }
}

fn load(path: &Path) -> Result<Instance, Failure> {
    let bytes = if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        fs::read(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?
    };
    Instance::parse(&bytes).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn split_list(list: &str, sep: char) -> impl Iterator<Item = &str> {
    list.split(sep).map(str::trim).filter(|s| !s.is_empty())
}

fn parse_effectors(instance: &Instance, list: &str) -> Result<NodeSet, Failure> {
    Ok(instance.graph.node_set(split_list(list, ','))?)
}

fn budget_json(b: Budget) -> Value {
    match b {
        Budget::Finite(b) => json!(b),
        Budget::Infinite => json!("infinite"),
    }
}

fn parameters(instance: &Instance) -> Map<String, Value> {
    let g = &instance.graph;
    let mut map = Map::new();
    map.insert("n".into(), json!(g.node_count()));
    map.insert("m".into(), json!(g.arc_count()));
    map.insert("r".into(), json!(g.probabilistic_arc_count()));
    map.insert("a".into(), json!(instance.target_count()));
    map.insert("b".into(), budget_json(instance.budget));
    map.insert("c".into(), json!(instance.cost_bound.as_ref().map(format_rational)));
    map
}

fn validate(cli: &Cli, instance: &Instance) -> CmdResult {
    if cli.format == Format::Dot {
        return Ok(Outcome { stdout: instance.to_dot(), code: 0 });
    }
    let g = &instance.graph;
    let dag = g.is_acyclic();
    let mut report = parameters(instance);
    report.insert("dag".into(), json!(dag));
    report.insert(
        "summary".into(),
        json!(format!(
            "n={} m={} r={}, {}",
            g.node_count(),
            g.arc_count(),
            g.probabilistic_arc_count(),
            if dag { "a DAG" } else { "not a DAG" }
        )),
    );
    let algorithms: Map<String, Value> = Algorithm::ALL
        .into_iter()
        .map(|a| {
            let status = match precondition(instance, a) {
                Ok(()) => json!({ "applicable": true }),
                Err(e) => json!({ "applicable": false, "reason": e.to_string() }),
            };
            (a.name().to_string(), status)
        })
        .collect();
    report.insert("algorithms".into(), Value::Object(algorithms));
    report.insert("auto".into(), json!(auto_algorithm(instance).name()));
    Ok(Outcome::json(&Value::Object(report)))
}

fn cost(cli: &Cli, instance: &Instance, x: &NodeSet, method: CostMethod, samples: u64) -> CmdResult {
    let g = &instance.graph;
    let limits = cli.limits();
    let method = match method {
        CostMethod::Exact => Method::Recursive,
        CostMethod::LiveEdge => Method::LiveEdge,
        CostMethod::Montecarlo => {
            let mc = monte_carlo_cost(g, &instance.targets, x, samples, cli.seed)?;
            return Ok(Outcome::json(&json!({
                "method": "montecarlo",
                "effectors": g.set_labels(x),
                "estimate": mc.estimate,
                "standard_error": mc.standard_error,
                "samples": mc.samples,
                "seed": cli.seed,
            })));
        }
    };
    let probs = probabilities(g, x, method, &limits)?;
    let breakdown = CostBreakdown::from_probabilities(g, &instance.targets, &probs);
    let costs = breakdown.to_json(g);
    Ok(Outcome::json(&json!({
        "method": if method == Method::Recursive { "exact" } else { "live-edge" },
        "effectors": g.set_labels(x),
        "probabilities": probs.to_json(g),
        "per_node": costs["per_node"],
        "total": costs["total"],
    })))
}

fn solve(cli: &Cli, instance: &Instance, algorithm: &str) -> CmdResult {
    let strategy: Strategy = algorithm.parse()?;
    let report = solvers::solve(instance, strategy, &cli.limits())?;
    let mut out = Outcome::json(&report.to_json(&instance.graph));
    if report.decision == Some(false) {
        out.code = 1;
    }
    Ok(out)
}

fn simulate(cli: &Cli, instance: &Instance, x: &NodeSet, runs: u64) -> CmdResult {
    let g = &instance.graph;
    let traces = (0..runs)
        .map(|run| simulate_run(g, x, cli.seed, run).map(|t| t.to_json(g)))
        .collect::<effectors::Result<Vec<_>>>()?;
    Ok(Outcome::json(&json!({
        "seed": cli.seed,
        "effectors": g.set_labels(x),
        "runs": traces,
    })))
}

fn parse_pairs(list: &str, sep: char) -> Result<Vec<(String, String)>, Failure> {
    split_list(list, ',')
        .map(|item| {
            item.split_once(sep)
                .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
                .filter(|(a, b)| !a.is_empty() && !b.is_empty())
                .ok_or_else(|| Failure::usage(format!("expected `u{sep}v`, got `{item}`")))
        })
        .collect()
}

fn labels(list: &str) -> Vec<String> {
    split_list(list, ',').map(String::from).collect()
}

fn undirected(args: &GraphArgs) -> Result<SimpleGraph, Failure> {
    Ok(SimpleGraph::undirected(&labels(&args.vertices), &parse_pairs(&args.edges, '-')?)?)
}

fn parse_colors(graph: &SimpleGraph, list: &str) -> Result<Vec<usize>, Failure> {
    let given: HashMap<String, usize> = parse_pairs(list, '=')?
        .into_iter()
        .map(|(v, c)| {
            c.parse()
                .map(|c| (v, c))
                .map_err(|_| Failure::usage(format!("colour `{c}` is not a positive integer")))
        })
        .collect::<Result<_, _>>()?;
    if let Some(extra) = given.keys().find(|v| !graph.vertices.contains(v)) {
        return Err(Failure::usage(format!("colour given for unknown vertex `{extra}`")));
    }
    graph
        .vertices
        .iter()
        .map(|v| given.get(v).copied().ok_or_else(|| Failure::usage(format!("vertex `{v}` has no colour"))))
        .collect()
}

fn generate(cli: &Cli, family: &Family, out: Option<&Path>) -> CmdResult {
    let mut extra = Map::new();
    let (name, instance) = match family {
        Family::Mcc { graph, colors, k } => {
            let graph = undirected(graph)?;
            let colors = parse_colors(&graph, colors)?;
            ("mcc", gen_mcc(&MccInput::new(graph, colors, *k)?)?)
        }
        Family::Domset { graph, k } => ("domset", gen_dominating_set(&undirected(graph)?, *k)?),
        Family::Setcover { sets, universe, h } => {
            let sets: Vec<Vec<String>> = split_list(sets, ';').map(labels).collect();
            ("setcover", gen_set_cover(&SetSystem::new(&labels(universe), &sets)?, *h)?)
        }
        Family::Indepset { graph, k } => ("indepset", gen_independent_set(&undirected(graph)?, *k)?),
        Family::Stcon { arcs, vertices, s, t, z } => {
            let dag = SimpleGraph::directed(&labels(vertices), &parse_pairs(arcs, '>')?)?;
            let z: BigInt = z.trim().parse().map_err(|_| Failure::usage(format!("threshold `{z}` is not an integer")))?;
            let red = gen_stcon(&dag, s, t, &z)?;
            let names = |set: &std::collections::BTreeSet<usize>| -> Vec<&str> {
                set.iter().map(|&v| dag.vertices[v].as_str()).collect()
            };
            extra.insert("v_st".into(), json!(names(&red.v_st)));
            extra.insert("w".into(), json!(names(&red.w)));
            extra.insert("e_st".into(), json!(red.e_st.len()));
            extra.insert("z_prime".into(), json!(red.z_prime.to_string()));
            extra.insert("p_z_prime".into(), json!(format_rational(&red.p_z_prime)));
            ("stcon", red.instance)
        }
        Family::Random {
            nodes,
            arc_density,
            prob_fraction,
            target_fraction,
            weight_grid,
            max_prob_arcs,
            budget,
            cost_bound,
        } => {
            let params = RandomParams {
                nodes: *nodes,
                arc_density: *arc_density,
                prob_fraction: *prob_fraction,
                target_fraction: *target_fraction,
                weight_grid: *weight_grid,
                max_probabilistic: *max_prob_arcs,
                budget: budget.parse()?,
                cost_bound: cost_bound.as_deref().map(parse_rational).transpose()?,
                seed: cli.seed,
            };
            ("random", gen_random(&params)?)
        }
    };
    let rendered = match cli.format {
        Format::Json => String::from_utf8(instance.serialize()).expect("serialized JSON is UTF-8"),
        Format::Dot => instance.to_dot(),
    };
    let mut summary = parameters(&instance);
    summary.insert("family".into(), json!(name));
    summary.extend(extra);
    match out {
        Some(path) => {
            fs::write(path, rendered).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
            summary.insert("out".into(), json!(path.display().to_string()));
            Ok(Outcome::json(&Value::Object(summary)))
        }
        None => {
            log::info!("generated {}", Value::Object(summary));
            Ok(Outcome { stdout: rendered, code: 0 })
        }
    }
}
