use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use templab::constructions::{
    adhoc, combined_cactus, generator_cycle, happy_adhoc, hypercube, parity, pivot_tree,
    ConstructionResult, Family,
};
use templab::cycle::{
    enumerate_dominating, enumerate_maximal, is_dominating, necessary_pair_check,
};
use templab::io::{parse, read_input, serialize, JsonGraph, JSON_VERSION};
use templab::ptgen::{self, Config, Footprint, Mode};
use templab::random::{random_cactus, random_tree, seed_from_env};
use templab::render::{
    render_labelled_graph, render_link_stream, Format, Highlight, RenderSpec, PALETTE,
};
use templab::temporal::{
    check_global_bounds, density, is_minimal, is_temporally_connected, reachability_graph,
    redundant_contacts, validate, Class, TemporalGraph,
};
use templab::{Error, Result};

#[derive(Parser)]
#[command(
    name = "templab",
    version,
    about = "Minimal temporally connected labellings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a labelling: trees N, cacti N C, hypercube D, adhoc K, happy-adhoc K,
    /// parity N, generator N (also cycles-even N, cycles-odd N)
    Construct {
        family: String,
        params: Vec<usize>,
        /// Seed for the random footprints of `trees` and `cacti` (default: $TEMPLAB_SEED or 0)
        #[arg(long)]
        seed: Option<u64>,
        /// Print a JSON report instead of the text format
        #[arg(long)]
        json: bool,
    },
    /// Check class validity, temporal connectivity, minimality and the global bounds
    Verify {
        file: String,
        #[arg(long, default_value = "proper")]
        class: Class,
    },
    /// Print the density report
    Measure { file: String },
    /// Dominating journeys and pair checks of a cycle labelling
    AnalyzeCycle { file: String },
    /// Exhaustive search for minimal temporally connected labellings
    Generate {
        /// A labelled-graph file (labels ignored), `cycle:N` or `path:N`
        #[arg(long)]
        footprint: String,
        #[arg(long, default_value = "proper")]
        mode: Mode,
        #[arg(long)]
        no_symmetry: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        node_budget: Option<u64>,
        /// Stop after storing a labelling with at least this temporality
        #[arg(long)]
        target_tau: Option<usize>,
        #[arg(long, default_value_t = 3)]
        split_depth: usize,
        /// Output file (JSON lines); stdout by default
        #[arg(long)]
        out: Option<String>,
    },
    /// Draw a labelling
    Render {
        file: String,
        #[arg(long, default_value = "ascii")]
        format: Format,
        /// `link-stream` (cycles only) or `graph`
        #[arg(long, default_value = "link-stream")]
        view: String,
        /// Highlight every dominating journey
        #[arg(long)]
        dominating: bool,
        #[arg(long, default_value_t = 40)]
        column_width: usize,
        #[arg(long, default_value_t = 24)]
        row_height: usize,
    },
}

fn load(path: &str) -> Result<TemporalGraph> {
    parse(&read_input(path)?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable report")
}

fn construct(family: &str, params: &[usize], seed: Option<u64>) -> Result<ConstructionResult> {
    let seed = seed.unwrap_or_else(|| seed_from_env(0));
    let one = || -> Result<usize> {
        match params {
            [p] => Ok(*p),
            _ => Err(Error::Param(format!("`{family}` takes 1 parameter"))),
        }
    };
    match family {
        "generator" => generator_cycle(one()?),
        "cycles-even" if one()? % 2 == 0 => generator_cycle(one()?),
        "cycles-odd" if one()? % 2 == 1 => generator_cycle(one()?),
        "cycles-even" | "cycles-odd" => Err(Error::Param(format!("wrong parity for `{family}`"))),
        _ => match Family::parse(family, params)? {
            Family::Trees { n } => pivot_tree(&random_tree(n, seed)?, 0),
            Family::Cactus { n, c } => combined_cactus(&random_cactus(n, c, seed)?),
            Family::Hypercube { d } => hypercube(d),
            Family::Adhoc { k } => adhoc(k),
            Family::HappyAdhoc { k } => happy_adhoc(k),
            Family::Parity { n } => parity(n),
            Family::EvenCycle { n } | Family::OddCycle { n } => generator_cycle(n),
        },
    }
}

fn footprint(spec: &str) -> Result<Footprint> {
    let size = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Param(format!("bad size in `{spec}`")))
    };
    if let Some(n) = spec.strip_prefix("cycle:") {
        Footprint::cycle(size(n)?)
    } else if let Some(n) = spec.strip_prefix("path:") {
        Footprint::path(size(n)?)
    } else {
        Footprint::new(&load(spec)?)
    }
}

/// Runs a command; `Ok(false)` means a requested check failed.
fn run(cmd: Cmd, out: &mut dyn Write) -> Result<bool> {
    let io = |e: std::io::Error| Error::Io(e.to_string());
    match cmd {
        Cmd::Construct {
            family,
            params,
            seed,
            json,
        } => {
            let r = construct(&family, &params, seed)?;
            if json {
                let report = json!({
                    "v": JSON_VERSION,
                    "family": r.family,
                    "params": r.params,
                    "predicted": r.predicted,
                    "measured": r.measured(),
                    "matches_prediction": r.matches_prediction(),
                    "notes": r.notes,
                    "graph": JsonGraph::from(&r.graph),
                });
                writeln!(out, "{}", to_json(&report)).map_err(io)?;
            } else {
                write!(out, "{}", serialize(&r.graph)).map_err(io)?;
            }
            Ok(true)
        }
        Cmd::Verify { file, class } => {
            let g = load(&file)?;
            let validity = validate(&g, class);
            let reach = reachability_graph(&g);
            let unreachable = reach.unreachable_pairs();
            let redundant = redundant_contacts(&g);
            let d = density(&g);
            let bounds_ok = check_global_bounds(&d);
            let ok = validity.ok()
                && unreachable.is_empty()
                && redundant.is_empty()
                && (class == Class::Strict || bounds_ok);
            let report = json!({
                "v": JSON_VERSION,
                "class": class,
                "valid": validity.ok(),
                "violations": validity.violations,
                "temporally_connected": unreachable.is_empty(),
                "unreachable": unreachable.iter().take(20).collect::<Vec<_>>(),
                "minimal": redundant.is_empty(),
                "redundant": redundant,
                "n": d.n,
                "m": d.m,
                "T": d.total,
                "tau": d.temporality,
                "bounds_ok": bounds_ok,
                "ok": ok,
            });
            writeln!(out, "{}", to_json(&report)).map_err(io)?;
            Ok(ok)
        }
        Cmd::Measure { file } => {
            let g = load(&file)?;
            let d = density(&g);
            let report = json!({
                "v": JSON_VERSION,
                "n": d.n,
                "m": d.m,
                "T": d.total,
                "tau": d.temporality,
                "max_label": d.max_label,
                "class": d.class,
                "temporally_connected": is_temporally_connected(&g),
                "minimal": is_minimal(&g),
                "bounds_ok": check_global_bounds(&d),
            });
            writeln!(out, "{}", to_json(&report)).map_err(io)?;
            Ok(true)
        }
        Cmd::AnalyzeCycle { file } => {
            let g = load(&file)?;
            let dominating = enumerate_dominating(&g)?;
            let maximal = enumerate_maximal(&g)?
                .iter()
                .map(|j| is_dominating(&g, j))
                .collect::<Result<Vec<_>>>()?;
            let pairs = (0..g.n())
                .map(|v| necessary_pair_check(&g, v))
                .collect::<Result<Vec<_>>>()?;
            let report = json!({
                "v": JSON_VERSION,
                "n": g.n(),
                "dominating": dominating,
                "maximal": maximal,
                "pairs": pairs,
            });
            writeln!(out, "{}", to_json(&report)).map_err(io)?;
            Ok(true)
        }
        Cmd::Generate {
            footprint: spec,
            mode,
            no_symmetry,
            threads,
            node_budget,
            target_tau,
            split_depth,
            out: path,
        } => {
            let fp = footprint(&spec)?;
            let cfg = Config {
                mode,
                symmetry: !no_symmetry,
                threads,
                node_budget,
                split_depth,
                target_temporality: target_tau,
            };
            let mut buf = String::new();
            let stats = ptgen::generate(&fp, &cfg, |f| {
                let g = fp.graph(&f.labels);
                let line = json!({
                    "v": JSON_VERSION,
                    "edges": g.edges().map(|((u, v), ls)| json!([u, v, ls])).collect::<Vec<_>>(),
                    "T": f.total(),
                    "tau": f.temporality(),
                    "canonical": f.canonical,
                });
                buf.push_str(&line.to_string());
                buf.push('\n');
            });
            buf.push_str(&json!({ "v": JSON_VERSION, "stats": stats }).to_string());
            buf.push('\n');
            match path {
                Some(p) => std::fs::write(&p, buf).map_err(io)?,
                None => out.write_all(buf.as_bytes()).map_err(io)?,
            }
            Ok(true)
        }
        Cmd::Render {
            file,
            format,
            view,
            dominating,
            column_width,
            row_height,
        } => {
            let g = load(&file)?;
            let doc = match view.as_str() {
                "graph" => render_labelled_graph(&g, format),
                "link-stream" => {
                    let mut spec = RenderSpec::new(&g, format);
                    spec.column_width = column_width;
                    spec.row_height = row_height;
                    if dominating {
                        for (k, j) in enumerate_dominating(&g)?.into_iter().enumerate() {
                            spec.highlights.push(Highlight {
                                journey: j.journey,
                                color: PALETTE[k % PALETTE.len()].into(),
                            });
                        }
                    }
                    render_link_stream(&spec)?
                }
                other => return Err(Error::Param(format!("unknown view `{other}`"))),
            };
            write!(out, "{doc}").map_err(io)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli.cmd, &mut lock) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Param(_) | Error::UnknownFamily(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
