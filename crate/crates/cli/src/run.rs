use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use semihom::gadgets::{
    certify_reduction, named_target, reduce_ac, reduce_c3tail, GadgetError, ReductionKind,
    ReductionOutput,
};
use semihom::oracle::{homomorphic_product, solve_backtracking, solve_via_product};
use semihom::random::{random_bipartite_digraph, random_costs, random_dag, random_digraph};
use semihom::{
    classify, solve_poly, Classification, ExactConfig, HomInstance, InstanceError, Objective,
    OracleError, Outcome, Solution,
};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::args::{Cli, Command, InstanceArgs, Kind, Method, Shape};
use crate::format::{self, FormatError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    /// 3 when the exact solver gave up on size, 2 for every input problem.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Oracle(_) => 3,
            _ => 2,
        }
    }
}

/// Runs one command. Returns what belongs on standard output; files named by
/// `--out` are written here.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Classify { target, out } => {
            let h = read_with(target, format::parse_digraph)?;
            emit(classification_json(&classify(&h)), out.as_deref())
        }
        Command::Solve {
            instance,
            exact,
            force_exact,
            out,
        } => {
            let inst = load_instance(instance)?;
            let cfg = ExactConfig::with_limit(exact.limit as usize);
            emit(solve(&inst, &cfg, *force_exact)?, out.as_deref())
        }
        Command::Oracle {
            instance,
            exact,
            method,
            out,
        } => {
            let inst = load_instance(instance)?;
            let cfg = ExactConfig::with_limit(exact.limit as usize);
            let sol = match method {
                Method::Backtracking => solve_backtracking(&inst, &cfg)?,
                Method::Product => solve_via_product(&inst, &cfg)?,
            };
            let mut v = solution_json(&inst, &sol);
            v.insert("method".into(), json!("exact"));
            emit(Value::Object(v), out.as_deref())
        }
        Command::Product { instance, out } => {
            let inst = load_instance(instance)?;
            let text = product_text(&inst);
            match out {
                Some(p) => write_file(p, &text).map(|_| String::new()),
                None => Ok(text),
            }
        }
        Command::Reduce {
            kind,
            graph,
            out,
            pair_mode,
            strict_gadget_costs,
            certify,
            limit,
        } => {
            let g = read_with(graph, format::parse_graph)?;
            let r = match kind {
                Kind::Ac => reduce_ac(&g, (*pair_mode).into())?,
                Kind::C3tail => reduce_c3tail(&g, *strict_gadget_costs)?,
            };
            let cfg = certify.then(|| ExactConfig::with_limit(*limit as usize));
            let summary = write_reduction(&r, out, cfg.as_ref())?;
            emit(summary, None)
        }
        Command::Generate {
            target,
            vertices,
            shape,
            density,
            max_cost,
            seed,
            out,
        } => {
            if !(0.0..=1.0).contains(density) {
                return Err(CliError::Invalid(format!(
                    "density {density} is not in [0, 1]"
                )));
            }
            let h = named_target(target)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let d = match shape {
                Shape::Dag => random_dag(&mut rng, *vertices, *density),
                Shape::Digraph => random_digraph(&mut rng, *vertices, *density),
                Shape::Bipartite => random_bipartite_digraph(&mut rng, *vertices, *density),
            };
            let costs = random_costs(&mut rng, &d, &h, *max_cost);
            let files = [
                (suffixed(out, "d.dg"), format::write_digraph(&d)),
                (suffixed(out, "h.dg"), format::write_digraph(&h)),
                (suffixed(out, "costs.tsv"), format::write_costs(&costs)),
            ];
            for (p, text) in &files {
                write_file(p, text)?;
            }
            emit(
                json!({
                    "target": target,
                    "seed": seed,
                    "d": files[0].0.display().to_string(),
                    "h": files[1].0.display().to_string(),
                    "costs": files[2].0.display().to_string(),
                }),
                None,
            )
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn read_with<T>(
    path: &Path,
    parse: impl Fn(&str) -> Result<T, FormatError>,
) -> Result<T, CliError> {
    parse(&read(path)?).map_err(|source| CliError::Format {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

fn suffixed(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(suffix);
    PathBuf::from(s)
}

/// JSON text for standard output, or written to `out` (then nothing is printed).
fn emit(v: Value, out: Option<&Path>) -> Result<String, CliError> {
    let text = format!(
        "{}\n",
        serde_json::to_string(&v).expect("JSON values serialise")
    );
    match out {
        Some(p) => write_file(p, &text).map(|_| String::new()),
        None => Ok(text),
    }
}

pub fn load_instance(args: &InstanceArgs) -> Result<HomInstance, CliError> {
    let h = read_with(&args.target, format::parse_digraph)?;
    let d = read_with(&args.input, format::parse_digraph)?;
    let costs = read_with(&args.costs, format::parse_costs)?;
    let inst = HomInstance::new(d, h, costs, args.objective())?;
    match &args.allow {
        None => Ok(inst),
        Some(p) => {
            let allowed = read_with(p, |t| format::parse_allowed(t, inst.d(), inst.h()))?;
            Ok(inst.restrict_colors(&allowed)?)
        }
    }
}

pub fn classification_json(c: &Classification) -> Value {
    let mut v = Map::new();
    v.insert("verdict".into(), json!(c.verdict()));
    match c {
        Classification::Polynomial { tag, .. } => {
            v.insert("tag".into(), json!(tag.name()));
            v.insert("k".into(), json!(c.k()));
        }
        Classification::NpHard(case) => {
            v.insert("case".into(), json!(case.label()));
        }
        Classification::Open => {}
        Classification::Unsupported(reason) => {
            v.insert("reason".into(), json!(reason));
        }
    }
    Value::Object(v)
}

fn solution_json(inst: &HomInstance, sol: &Solution) -> Map<String, Value> {
    let mut v = Map::new();
    match &sol.outcome {
        Outcome::Optimal { assignment, cost } => {
            v.insert("status".into(), json!("optimal"));
            v.insert("cost".into(), json!(cost));
            let colours: Map<String, Value> = assignment
                .iter()
                .enumerate()
                .map(|(u, &i)| (inst.d().label(u).to_string(), json!(inst.h().label(i))))
                .collect();
            v.insert("assignment".into(), Value::Object(colours));
        }
        Outcome::Infeasible => {
            v.insert("status".into(), json!("infeasible"));
        }
    }
    v.insert("solver".into(), json!(sol.solver));
    v.insert("objective".into(), json!(inst.objective().as_str()));
    v
}

/// Classifies the target and dispatches: polynomial algorithm when one
/// applies, exact search under the size limit otherwise.
pub fn solve(inst: &HomInstance, cfg: &ExactConfig, force_exact: bool) -> Result<Value, CliError> {
    let cls = classify(inst.h());
    let (sol, method) = if cls.is_polynomial() && !force_exact {
        let sol = solve_poly(inst, &cls).map_err(|e| CliError::Invalid(e.to_string()))?;
        (sol, "polynomial")
    } else {
        (solve_backtracking(inst, cfg)?.with_solver("exact"), "exact")
    };
    let mut v = solution_json(inst, &sol);
    v.insert("method".into(), json!(method));
    v.insert("classification".into(), classification_json(&cls));
    if method == "exact" {
        let warning = match &cls {
            Classification::NpHard(_) => "target is NP-hard; exact search is exponential in the input size",
            Classification::Open => "complexity of this target is open; exact search is exponential in the input size",
            Classification::Unsupported(_) => "target is not semicomplete multipartite; exact search is exponential in the input size",
            Classification::Polynomial { .. } => "exact search forced; exponential in the input size",
        };
        v.insert("warning".into(), json!(warning));
    }
    Ok(Value::Object(v))
}

/// `node <u>:<i> <weight>` and `edge <u>:<i> <v>:<j>` lines; minimisation
/// instances are complemented first.
pub fn product_text(inst: &HomInstance) -> String {
    let work = match inst.objective() {
        Objective::Min => inst.complement_costs(),
        Objective::Max => inst.clone(),
    };
    let p = homomorphic_product(&work);
    let mut out = String::new();
    for (node, w) in p.weights.iter().enumerate() {
        writeln!(out, "node {} {}", p.graph.label(node), w).expect("writing to a string");
    }
    for (a, b) in p.graph.edges() {
        writeln!(out, "edge {} {}", p.graph.label(a), p.graph.label(b))
            .expect("writing to a string");
    }
    out
}

fn write_reduction(
    r: &ReductionOutput,
    prefix: &Path,
    certify: Option<&ExactConfig>,
) -> Result<Value, CliError> {
    let files = [
        (suffixed(prefix, "d.dg"), format::write_digraph(&r.d)),
        (suffixed(prefix, "h.dg"), format::write_digraph(&r.h)),
        (suffixed(prefix, "costs.tsv"), format::write_costs(&r.costs)),
    ];
    for (p, text) in &files {
        write_file(p, text)?;
    }
    let g = &r.source;
    let gadgets: Vec<Value> = r
        .gadgets
        .iter()
        .map(|c| {
            json!({
                "index": c.index,
                "ends": [g.label(c.ends.0), g.label(c.ends.1)],
                "vertices": c.vertices.iter().map(|&v| r.d.label(v)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut v = Map::new();
    v.insert("kind".into(), json!(r.kind.name()));
    match r.kind {
        ReductionKind::Ac(mode) => v.insert("pair_mode".into(), json!(mode.as_str())),
        ReductionKind::C3Tail { strict } => v.insert("strict".into(), json!(strict)),
    };
    v.insert("source_vertices".into(), json!(g.len()));
    v.insert("source_edges".into(), json!(g.edge_count()));
    v.insert("d_vertices".into(), json!(r.d.len()));
    v.insert("d_arcs".into(), json!(r.d.arc_count()));
    v.insert(
        "files".into(),
        json!({
            "d": files[0].0.display().to_string(),
            "h": files[1].0.display().to_string(),
            "costs": files[2].0.display().to_string(),
        }),
    );
    v.insert("gadgets".into(), Value::Array(gadgets));
    if let Some(cfg) = certify {
        let c = certify_reduction(r, cfg)?;
        let checks: Vec<Value> = c
            .checks
            .iter()
            .map(|f| json!({"name": f.name, "predicted": f.predicted, "holds": f.holds}))
            .collect();
        v.insert(
            "certificate".into(),
            json!({
                "optimum": c.optimum,
                "extracted": c.extracted.iter().map(|&u| g.label(u)).collect::<Vec<_>>(),
                "structure_holds": c.structure_holds,
                "checks": checks,
            }),
        );
    }
    let v = Value::Object(v);
    let text = format!(
        "{}\n",
        serde_json::to_string_pretty(&v).expect("JSON values serialise")
    );
    write_file(&suffixed(prefix, "json"), &text)?;
    Ok(v)
}
