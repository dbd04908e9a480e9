use std::io::Write;
use std::num::NonZeroU64;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use certdom::analysis::{
    bound_report, edge_effects, nordhaus_gaddum, vertex_effects, BoundStatus, EdgeScope, ModificationReport,
    VertexScope,
};
use certdom::domination::{classify_all, is_2dominating, is_certified_dominating, is_dominating};
use certdom::graph::{encode_graph6, to_edge_list, FamilySpec};
use certdom::harness::{parse_claim_list, run_suite, GraphSource, SuiteConfig};
use certdom::solver::{find_dd2_pair, gamma_cer_solve, gamma_solve, SolverConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

mod input;

use input::{parse_edge, parse_vertex_list, read_graph, vertex_set, Format};

/// Exact certified domination numbers with certificates.
///
/// Graphs are read as graph6 or as a 0-based edge list: a header line
/// `n <count>` followed by one `u v` pair per line.
#[derive(Parser)]
#[command(name = "certdom", version)]
struct Cli {
    /// Input format; `auto` detects graph6 or edge list from the first line.
    #[arg(long, global = true, value_enum, default_value_t = Format::Auto)]
    format: Format,

    /// Human-readable output instead of JSON lines.
    #[arg(long, global = true)]
    human: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// Input file; `-` or absent reads standard input.
    input: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute γ or γ_cer with a certificate.
    Solve {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value_t = Param::GammaCer)]
        param: Param,
        /// Disable support forcing and the constructive bounds.
        #[arg(long)]
        no_reductions: bool,
        /// Skip closed-form shortcuts for recognized classes.
        #[arg(long)]
        no_closed_forms: bool,
        /// Stop after this many search nodes; the result is then an upper bound.
        #[arg(long)]
        node_limit: Option<NonZeroU64>,
    },
    /// Check a vertex set against a domination predicate.
    Verify {
        #[command(flatten)]
        input: InputArg,
        /// Comma-separated vertices, e.g. `0,3,5`.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, value_enum)]
        predicate: Predicate,
    },
    /// Build a graph from a family spec such as `wheel 8` or `corona(cycle 5, complete 1)`.
    Family {
        spec: String,
        #[arg(long, value_enum, default_value_t = Emit::Graph6)]
        emit: Emit,
    },
    /// Bounds, modification sweeps and Nordhaus–Gaddum quantities.
    Analyze {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum)]
        report: Report,
        /// Edge report: evaluate all edge additions instead of deletions.
        #[arg(long, conflicts_with_all = ["delete_edge", "add_edge"])]
        additions: bool,
        /// Edge report: delete the single edge `u,v`.
        #[arg(long, conflicts_with = "add_edge")]
        delete_edge: Option<String>,
        /// Edge report: add the single edge `u,v`.
        #[arg(long)]
        add_edge: Option<String>,
        /// Vertex report: add one vertex with these neighbours instead of
        /// deleting each vertex.
        #[arg(long)]
        add_vertex: Option<String>,
    },
    /// Find a dominating set `D` whose complement is 2-dominating, minimizing |D|.
    Dd2 {
        #[command(flatten)]
        input: InputArg,
        /// Only accept pairs with |D| at most this.
        #[arg(long)]
        max_d: Option<usize>,
    },
    /// Run the claim suite over an enumeration or a graph6 batch file.
    Suite {
        /// Largest order to enumerate.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Check the graphs in this file (one graph6 per line) instead of enumerating.
        #[arg(long)]
        graph6_file: Option<PathBuf>,
        /// Comma-separated claim ids; all claims when absent.
        #[arg(long)]
        claims: Option<String>,
        /// Worker threads.
        #[arg(long, env = "CERTDOM_JOBS")]
        jobs: Option<usize>,
        /// Allow enumeration beyond order 7.
        #[arg(long)]
        unsafe_large: bool,
        /// Only emit reports for graphs with a failing claim.
        #[arg(long)]
        failures_only: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Param {
    Gamma,
    GammaCer,
}

#[derive(Clone, Copy, ValueEnum)]
enum Predicate {
    Dominating,
    Certified,
    #[value(name = "2dominating")]
    TwoDominating,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum Report {
    Bounds,
    Edges,
    Vertices,
    Ng,
}

/// Outcome of a command that ran to completion.
enum Verdict {
    Pass,
    ClaimFailure,
}

struct Out {
    human: bool,
    stdout: std::io::StdoutLock<'static>,
}

impl Out {
    fn json(&mut self, value: &impl Serialize) -> Result<()> {
        serde_json::to_writer(&mut self.stdout, value)?;
        writeln!(self.stdout)?;
        Ok(())
    }

    fn line(&mut self, text: impl std::fmt::Display) -> Result<()> {
        writeln!(self.stdout, "{text}")?;
        Ok(())
    }
}

fn set_text(vs: impl IntoIterator<Item = usize>) -> String {
    let items: Vec<String> = vs.into_iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out {
        human: cli.human,
        stdout: std::io::stdout().lock(),
    };
    match run(cli, &mut out) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::ClaimFailure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli, out: &mut Out) -> Result<Verdict> {
    let format = cli.format;
    match cli.command {
        Command::Solve {
            input,
            param,
            no_reductions,
            no_closed_forms,
            node_limit,
        } => {
            let g = read_graph(input.input.as_deref(), format)?;
            let cfg = SolverConfig {
                use_reductions: !no_reductions,
                use_closed_forms: !no_closed_forms,
                node_limit,
            };
            let (name, r) = match param {
                Param::Gamma => ("gamma", gamma_solve(&g, &cfg)),
                Param::GammaCer => ("gamma_cer", gamma_cer_solve(&g, &cfg)),
            };
            if out.human {
                let bound = if r.proven {
                    ""
                } else {
                    " (upper bound, node limit reached)"
                };
                out.line(format_args!("{name} = {}{bound}", r.value))?;
                out.line(format_args!("certificate: {}", set_text(r.certificate.iter())))?;
                out.line(format_args!("nodes expanded: {}", r.stats.nodes_expanded))?;
            } else {
                out.json(&json!({"n": g.order(), "param": name, "result": r}))?;
            }
            Ok(Verdict::Pass)
        }
        Command::Verify { input, set, predicate } => {
            let g = read_graph(input.input.as_deref(), format)?;
            let d = vertex_set(&g, &parse_vertex_list(&set)?)?;
            let (name, holds) = match predicate {
                Predicate::Dominating => ("dominating", is_dominating(&g, &d)),
                Predicate::Certified => ("certified", is_certified_dominating(&g, &d)),
                Predicate::TwoDominating => ("2dominating", is_2dominating(&g, &d)),
            };
            let statuses = classify_all(&g, &d);
            if out.human {
                out.line(format_args!("{name}: {holds}"))?;
                for (v, s) in statuses.iter().enumerate() {
                    out.line(format_args!(
                        "  {v}: {}",
                        serde_json::to_value(s)?.as_str().unwrap_or("?")
                    ))?;
                }
            } else {
                out.json(&json!({"predicate": name, "set": d, "holds": holds, "statuses": statuses}))?;
            }
            Ok(Verdict::Pass)
        }
        Command::Family { spec, emit } => {
            let g = spec.parse::<FamilySpec>()?.build()?;
            match emit {
                Emit::Graph6 => out.line(encode_graph6(&g))?,
                Emit::Edgelist => write!(out.stdout, "{}", to_edge_list(&g))?,
            }
            Ok(Verdict::Pass)
        }
        Command::Analyze {
            input,
            report,
            additions,
            delete_edge,
            add_edge,
            add_vertex,
        } => {
            let g = read_graph(input.input.as_deref(), format)?;
            let edge_flags = additions || delete_edge.is_some() || add_edge.is_some();
            match report {
                Report::Edges if add_vertex.is_some() => anyhow::bail!("--add-vertex applies to --report vertices"),
                Report::Vertices if edge_flags => anyhow::bail!("edge flags apply to --report edges"),
                Report::Bounds | Report::Ng if edge_flags || add_vertex.is_some() => {
                    anyhow::bail!("modification flags apply to --report edges or vertices")
                }
                _ => {}
            }
            match report {
                Report::Bounds => {
                    let r = bound_report(&g);
                    if out.human {
                        out.line(format_args!(
                            "n = {}, gamma = {}, gamma_cer = {}",
                            r.n, r.gamma, r.gamma_cer
                        ))?;
                        for b in &r.bounds {
                            out.line(format_args!(
                                "  {:<28} {} <= {}  {}",
                                b.name,
                                b.lhs,
                                b.rhs,
                                if b.holds { "ok" } else { "VIOLATED" }
                            ))?;
                        }
                    } else {
                        out.json(&r)?;
                    }
                    Ok(if r.bounds.iter().all(|b| b.holds) {
                        Verdict::Pass
                    } else {
                        Verdict::ClaimFailure
                    })
                }
                Report::Edges => {
                    let scope = if additions {
                        EdgeScope::AllAdditions
                    } else if let Some(e) = delete_edge {
                        let (u, v) = parse_edge(&e)?;
                        EdgeScope::Delete(u, v)
                    } else if let Some(e) = add_edge {
                        let (u, v) = parse_edge(&e)?;
                        EdgeScope::Add(u, v)
                    } else {
                        EdgeScope::AllDeletions
                    };
                    emit_modifications(out, edge_effects(&g, scope)?)
                }
                Report::Vertices => {
                    let scope = match add_vertex {
                        Some(nb) => VertexScope::Add(vertex_set(&g, &parse_vertex_list(&nb)?)?),
                        None => VertexScope::AllDeletions,
                    };
                    emit_modifications(out, vertex_effects(&g, &scope)?)
                }
                Report::Ng => {
                    let r = nordhaus_gaddum(&g)?;
                    if out.human {
                        out.line(format_args!(
                            "gamma_cer(G) = {}, gamma_cer(complement) = {}, sum = {}, product = {}",
                            r.gcer_g, r.gcer_gbar, r.sum, r.product
                        ))?;
                        for c in &r.checks {
                            out.line(format_args!(
                                "  {:<18} {}  {}",
                                c.theorem,
                                c.bound,
                                if c.holds { "ok" } else { "FAILED" }
                            ))?;
                        }
                    } else {
                        out.json(&r)?;
                    }
                    Ok(if r.checks.iter().all(|c| c.holds) {
                        Verdict::Pass
                    } else {
                        Verdict::ClaimFailure
                    })
                }
            }
        }
        Command::Dd2 { input, max_d } => {
            let g = read_graph(input.input.as_deref(), format)?;
            let pair = find_dd2_pair(&g, max_d);
            match (&pair, out.human) {
                (None, true) => out.line("none")?,
                (Some(p), true) => {
                    out.line(format_args!("D  = {}", set_text(p.d.iter())))?;
                    out.line(format_args!("D2 = {}", set_text(p.d2.iter())))?;
                }
                (_, false) => out.json(&json!({"pair": pair}))?,
            }
            Ok(Verdict::Pass)
        }
        Command::Suite {
            n_max,
            graph6_file,
            claims,
            jobs,
            unsafe_large,
            failures_only,
        } => {
            let cfg = SuiteConfig {
                n_max,
                source: graph6_file.map_or(GraphSource::Enumeration, GraphSource::Graph6File),
                claims: claims.as_deref().map(parse_claim_list).transpose()?.unwrap_or_default(),
                jobs,
                allow_large: unsafe_large,
            };
            let mut write_err = None;
            let human = out.human;
            let summary = run_suite(&cfg, |report| {
                if report.failed > 0 {
                    for c in report.failures() {
                        eprintln!("FAIL {} {}", c.claim, report.graph_id);
                    }
                }
                if human || (failures_only && report.failed == 0) || write_err.is_some() {
                    return;
                }
                if let Err(e) = out.json(report) {
                    write_err = Some(e);
                }
            })
            .context("suite aborted")?;
            if let Some(e) = write_err {
                return Err(e);
            }
            if human {
                out.line(format_args!("{} graphs", summary.graphs))?;
                for (claim, t) in &summary.claims {
                    out.line(format_args!(
                        "  {claim:<18} applicable {:>7}  failed {:>5}",
                        t.applicable, t.failed
                    ))?;
                }
            } else {
                out.json(&json!({"summary": summary}))?;
            }
            Ok(if summary.passed() {
                Verdict::Pass
            } else {
                Verdict::ClaimFailure
            })
        }
    }
}

fn emit_modifications(out: &mut Out, report: ModificationReport) -> Result<Verdict> {
    if out.human {
        out.line(format_args!("base gamma_cer = {}", report.base_value))?;
        for m in &report.records {
            let change = serde_json::to_value(&m.change)?;
            let status = serde_json::to_value(m.bound)?;
            out.line(format_args!(
                "  {change}  -> {} ({:+}) {}",
                m.new_value,
                m.delta,
                status.as_str().unwrap_or("?")
            ))?;
        }
    } else {
        for m in &report.records {
            out.json(m)?;
        }
        out.json(
            &json!({"base_value": report.base_value, "records": report.records.len(), "violations": report.violations}),
        )?;
    }
    Ok(if report.records.iter().any(|m| m.bound == BoundStatus::Violated) {
        Verdict::ClaimFailure
    } else {
        Verdict::Pass
    })
}
