//! Command-line front end: construct and inspect graphs, run the coloring,
//! detection, spectral, audit, and search operations, and emit byte-stable
//! CSV/text/graph6 reports with the resolved configuration echoed in a
//! header line.

use clap::{Args, Parser, Subcommand, ValueEnum};
use squarecycle::coloring;
use squarecycle::detector;
use squarecycle::error::Error;
use squarecycle::graph::{self, family, Graph};
use squarecycle::prooflab;
use squarecycle::search;
use squarecycle::spectral;
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "squarecycle", version, about = "squared-cycle extremal toolkit")]
struct Cli {
    /// Worker threads (default: SQUARECYCLE_THREADS or all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output file (default: stdout)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
struct GraphInput {
    /// Family name: cycle, path, cycle-square, path-square, turan, gn, multipartite
    #[arg(long)]
    family: Option<FamilyName>,
    /// Order for turan/gn
    #[arg(long)]
    n: Option<usize>,
    /// Length for cycle/path families
    #[arg(long)]
    ell: Option<usize>,
    /// Part count for turan
    #[arg(long, default_value_t = 3)]
    r: usize,
    /// Comma-separated part sizes for multipartite
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    /// Read the graph from a graph6 (.g6) or DIMACS (.col) file instead
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyName {
    Cycle,
    Path,
    CycleSquare,
    PathSquare,
    Turan,
    Gn,
    Multipartite,
}

impl GraphInput {
    fn describe(&self) -> String {
        if let Some(path) = &self.input {
            return format!("input={}", path.display());
        }
        let mut s = format!("family={:?}", self.family);
        if let Some(n) = self.n {
            write!(s, " n={n}").unwrap();
        }
        if let Some(ell) = self.ell {
            write!(s, " ell={ell}").unwrap();
        }
        if matches!(self.family, Some(FamilyName::Turan)) {
            write!(s, " r={}", self.r).unwrap();
        }
        if !self.parts.is_empty() {
            write!(s, " parts={:?}", self.parts).unwrap();
        }
        s
    }

    fn load(&self) -> Result<Graph, Error> {
        if let Some(path) = &self.input {
            let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
                path: path.display().to_string(),
                source,
            })?;
            return if path.extension().is_some_and(|e| e == "col") {
                graph::read_dimacs(&text)
            } else {
                // skip config-echo header and blank lines
                let line = text
                    .lines()
                    .map(str::trim)
                    .find(|l| !l.is_empty() && !l.starts_with('#'))
                    .unwrap_or("");
                graph::read_graph6(line)
            };
        }
        let need = |x: Option<usize>, what: &'static str| {
            x.ok_or(Error::ParamOutOfRange {
                what,
                got: 0,
                bound: "flag is required for this family",
            })
        };
        match self.family {
            Some(FamilyName::Cycle) => family::cycle(need(self.ell, "--ell")?),
            Some(FamilyName::Path) => family::path(need(self.ell, "--ell")?),
            Some(FamilyName::CycleSquare) => family::squared_cycle(need(self.ell, "--ell")?),
            Some(FamilyName::PathSquare) => family::squared_path(need(self.ell, "--ell")?),
            Some(FamilyName::Turan) => family::turan(need(self.n, "--n")?, self.r),
            Some(FamilyName::Gn) => family::gn(need(self.n, "--n")?),
            Some(FamilyName::Multipartite) => family::complete_multipartite(&self.parts),
            None => Err(Error::ParamOutOfRange {
                what: "--family/--input",
                got: 0,
                bound: "one of the two must be given",
            }),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph and write it out
    Construct {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value_t = WireFormat::Graph6)]
        format: WireFormat,
    },
    /// Order, size, and degree statistics
    Edges {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Maximum matching
    Matching {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Exact chromatic number with a coloring certificate
    Chromatic {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Residue 3-partition of the squared path/cycle and its uniqueness check
    GoodPartition {
        #[arg(long)]
        ell: usize,
        /// Check the squared cycle's explicit near-3-coloring instead
        #[arg(long, default_value_t = false)]
        cycle: bool,
    },
    /// Decide squared-cycle containment
    Detect {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        pattern_ell: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Spectral radius and Perron vector profile
    Spectral {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = spectral::DEFAULT_TOL)]
        tol: f64,
        /// Also run the dense eigensolver cross-check
        #[arg(long, default_value_t = false)]
        check: bool,
    },
    /// Perron-entry balance of the join of a vertex with a complete tripartite graph
    EigenBalance {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        n3: usize,
        #[arg(long, default_value_t = spectral::DEFAULT_TOL)]
        tol: f64,
    },
    /// Structural predicate audit over the max-cross tripartition
    Audit {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = prooflab::DEFAULT_ETA)]
        eta: f64,
        #[arg(long, value_enum, default_value_t = CutModeName::Local)]
        mode: CutModeName,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Maximum-cross-edge tripartition
    Maxcut3 {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value_t = CutModeName::Local)]
        mode: CutModeName,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        restarts: u32,
    },
    /// Extremal search over squared-cycle-free graphs
    Search {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ObjectiveName::Edges)]
        objective: ObjectiveName,
        #[arg(long, value_enum, default_value_t = SearchMode::Exhaustive)]
        mode: SearchMode,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Freeness and comparison table for the candidate extremal constructions
    VerifyTheorem {
        #[arg(long, value_delimiter = ',', required = true)]
        ell: Vec<usize>,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WireFormat {
    Graph6,
    Dimacs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CutModeName {
    Exact,
    Local,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ObjectiveName {
    Edges,
    Spectral,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SearchMode {
    Exhaustive,
    Hillclimb,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are successes, not usage errors
            let benign = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            std::process::exit(if benign { 0 } else { 1 });
        }
    };
    let threads = cli.threads.or_else(|| {
        std::env::var("SQUARECYCLE_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    if let Some(t) = threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let mut body = String::new();
    let code = match run(&cli.command, &mut body) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } => 2,
                Error::InternalCheck(_) => 3,
                _ => 1,
            }
        }
    };
    if !body.is_empty() {
        match &cli.out {
            Some(path) => {
                if let Err(e) = std::fs::write(path, &body) {
                    eprintln!("error: {}: {e}", path.display());
                    std::process::exit(1);
                }
            }
            None => print!("{body}"),
        }
    }
    std::process::exit(code);
}

fn header(out: &mut String, command: &str, config: &str) {
    let _ = writeln!(out, "# squarecycle {command} {config}");
}

fn run(command: &Command, out: &mut String) -> Result<i32, Error> {
    match command {
        Command::Construct { graph, format } => {
            let g = graph.load()?;
            let config = format!("{} format={format:?}", graph.describe());
            match format {
                // DIMACS gets its config echo as a standard 'c' comment
                WireFormat::Dimacs => {
                    let _ = writeln!(out, "c squarecycle construct {config}");
                }
                WireFormat::Graph6 => header(out, "construct", &config),
            }
            match format {
                WireFormat::Graph6 => {
                    let line = graph::write_graph6(&g);
                    // round trip before emission
                    if graph::read_graph6(&line)? != g {
                        return Err(Error::InternalCheck("graph6 round trip mismatch".into()));
                    }
                    let _ = writeln!(out, "{line}");
                }
                WireFormat::Dimacs => out.push_str(&graph::write_dimacs(&g)),
            }
            Ok(0)
        }
        Command::Edges { graph } => {
            let g = graph.load()?;
            header(out, "edges", &graph.describe());
            let _ = writeln!(out, "n={}", g.n());
            let _ = writeln!(out, "edges={}", g.edge_count());
            let _ = writeln!(out, "min_degree={}", g.min_degree());
            let _ = writeln!(out, "max_degree={}", g.max_degree());
            let _ = writeln!(out, "connected={}", g.is_connected());
            Ok(0)
        }
        Command::Matching { graph } => {
            let g = graph.load()?;
            header(out, "matching", &graph.describe());
            let m = graph::max_matching(&g);
            let _ = writeln!(out, "nu={}", m.size());
            let _ = writeln!(out, "u,v");
            for &(u, v) in &m.edges {
                let _ = writeln!(out, "{u},{v}");
            }
            Ok(0)
        }
        Command::Chromatic { graph, budget } => {
            let g = graph.load()?;
            header(
                out,
                "chromatic",
                &format!("{} budget={budget:?}", graph.describe()),
            );
            let (chi, cert) = coloring::chromatic_number(&g, *budget)?;
            if !cert.is_valid(&g) {
                return Err(Error::InternalCheck("invalid coloring certificate".into()));
            }
            let _ = writeln!(out, "chi={chi}");
            let _ = writeln!(out, "vertex,color");
            for (v, c) in cert.colors.iter().enumerate() {
                let _ = writeln!(out, "{v},{c}");
            }
            Ok(0)
        }
        Command::GoodPartition { ell, cycle } => {
            header(out, "good-partition", &format!("ell={ell} cycle={cycle}"));
            let gp = if *cycle {
                coloring::residue_coloring_cycle(*ell)?
            } else {
                coloring::residue_coloring_path(*ell)?
            };
            for (i, part) in gp.parts.iter().enumerate() {
                let ids: Vec<String> = part.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "part{}={}", i + 1, ids.join(" "));
            }
            if !cycle {
                let unique = coloring::good_partition_uniqueness_check(*ell, None)?;
                let _ = writeln!(out, "unique_up_to_relabeling={unique}");
            }
            Ok(0)
        }
        Command::Detect {
            graph,
            pattern_ell,
            budget,
        } => {
            let g = graph.load()?;
            header(
                out,
                "detect",
                &format!("{} pattern_ell={pattern_ell} budget={budget:?}", graph.describe()),
            );
            match detector::contains_squared_cycle(&g, *pattern_ell, *budget)? {
                Some(emb) => {
                    if detector::verify_embedding(&g, &emb)? != detector::EmbeddingCheck::Valid {
                        return Err(Error::InternalCheck("embedding failed re-verification".into()));
                    }
                    let ids: Vec<String> = emb.ordering.iter().map(|v| v.to_string()).collect();
                    let _ = writeln!(out, "contains=true");
                    let _ = writeln!(out, "ordering={}", ids.join(" "));
                }
                None => {
                    let _ = writeln!(out, "contains=false");
                }
            }
            Ok(0)
        }
        Command::Spectral { graph, tol, check } => {
            let g = graph.load()?;
            header(
                out,
                "spectral",
                &format!("{} tol={tol:e} check={check}", graph.describe()),
            );
            let r = spectral::spectral_radius(&g, *tol)?;
            let _ = writeln!(out, "rho={:.12}", r.rho);
            let _ = writeln!(out, "residual={:.12e}", r.residual);
            let _ = writeln!(out, "iterations={}", r.iterations);
            let _ = writeln!(out, "connected={}", r.connected);
            let _ = writeln!(out, "rayleigh_lower_bound={:.12}", spectral::rayleigh_lower_bound(&g));
            if *check {
                let dense = spectral::jacobi::spectral_radius_dense(&g);
                let _ = writeln!(out, "rho_dense={dense:.12}");
                if (dense - r.rho).abs() > 1e-8 {
                    return Err(Error::InternalCheck(format!(
                        "power iteration {:.12} vs dense {:.12}",
                        r.rho, dense
                    )));
                }
            }
            Ok(0)
        }
        Command::EigenBalance { n1, n2, n3, tol } => {
            header(
                out,
                "eigen-balance",
                &format!("n1={n1} n2={n2} n3={n3} tol={tol:e}"),
            );
            let b = spectral::eigenvector_balance_check(*n1, *n2, *n3, *tol)?;
            let _ = writeln!(out, "rho={:.12}", b.rho);
            let _ = writeln!(out, "hub_entry={:.12}", b.hub_entry);
            for i in 0..3 {
                let _ = writeln!(out, "part{}_entry={:.12}", i + 1, b.part_entries[i]);
            }
            let _ = writeln!(out, "within_part_spread={:.12e}", b.within_part_spread);
            let _ = writeln!(out, "closed_form_error={:.12e}", b.closed_form_error);
            let _ = writeln!(out, "linear_system_error={:.12e}", b.linear_system_error);
            let _ = writeln!(out, "imbalance_sign={:.12}", b.imbalance_sign);
            Ok(0)
        }
        Command::Audit { graph, eta, mode, seed } => {
            let g = graph.load()?;
            header(
                out,
                "audit",
                &format!("{} eta={eta:e} mode={mode:?} seed={seed}", graph.describe()),
            );
            let reports = prooflab::lemma_audit(&g, *eta, cut_mode(*mode, *seed))?;
            let _ = writeln!(out, "check,holds,quantities");
            for r in &reports {
                let qs: Vec<String> = r
                    .quantities
                    .iter()
                    .map(|(k, v)| format!("{k}={v:.12}"))
                    .collect();
                let _ = writeln!(out, "{},{},{}", r.lemma, r.holds, qs.join(" "));
            }
            Ok(0)
        }
        Command::Maxcut3 {
            graph,
            mode,
            seed,
            restarts,
        } => {
            let g = graph.load()?;
            header(
                out,
                "maxcut3",
                &format!(
                    "{} mode={mode:?} seed={seed} restarts={restarts}",
                    graph.describe()
                ),
            );
            let m = match mode {
                CutModeName::Exact => prooflab::CutMode::Exact,
                CutModeName::Local => prooflab::CutMode::Local {
                    restarts: *restarts,
                    seed: *seed,
                },
            };
            let t = prooflab::max_cross_tripartition(&g, m)?;
            let _ = writeln!(out, "cross_edges={}", t.cross_edges);
            let _ = writeln!(out, "internal_edges={}", t.internal_edges);
            for (i, part) in t.parts.iter().enumerate() {
                let ids: Vec<String> = part.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "part{}={}", i + 1, ids.join(" "));
            }
            Ok(0)
        }
        Command::Search {
            ell,
            n,
            objective,
            mode,
            budget,
            seed,
        } => {
            header(
                out,
                "search",
                &format!(
                    "ell={ell} n={n} objective={objective:?} mode={mode:?} budget={budget:?} seed={seed}"
                ),
            );
            let obj = match objective {
                ObjectiveName::Edges => search::Objective::Edges,
                ObjectiveName::Spectral => search::Objective::Spectral,
            };
            let report = match mode {
                SearchMode::Exhaustive => search::exhaustive_extremal(*ell, *n, obj, *budget)?,
                SearchMode::Hillclimb => {
                    search::hillclimb_extremal(*ell, *n, obj, *budget, *seed, None)?
                }
            };
            // every witness must still verify as free
            for w in &report.witnesses {
                let g = graph::read_graph6(w)?;
                if *ell <= g.n()
                    && !matches!(detector::contains_squared_cycle(&g, *ell, None), Ok(None))
                {
                    return Err(Error::InternalCheck(format!("witness {w} is not free")));
                }
            }
            let _ = writeln!(out, "best_value={:.12}", report.best_value);
            let _ = writeln!(out, "graphs_enumerated={}", report.graphs_enumerated);
            let _ = writeln!(out, "exhaustive={}", report.exhaustive);
            for w in &report.witnesses {
                let _ = writeln!(out, "witness={w}");
            }
            Ok(if matches!(mode, SearchMode::Exhaustive) && !report.exhaustive {
                2
            } else {
                0
            })
        }
        Command::VerifyTheorem {
            ell,
            n_min,
            n_max,
            budget,
        } => {
            header(
                out,
                "verify-theorem",
                &format!("ell={ell:?} n_min={n_min} n_max={n_max} budget={budget:?}"),
            );
            let rows = search::theorem_consistency(ell, *n_min, *n_max, *budget)?;
            let _ = writeln!(out, "ell,n,candidate,free,edges,rho,edges_vs_gn,rho_vs_gn");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{:.12},{},{}",
                    r.ell, r.n, r.candidate, r.free, r.edges, r.rho, r.edges_vs_gn, r.rho_vs_gn
                );
            }
            Ok(0)
        }
    }
}

fn cut_mode(mode: CutModeName, seed: u64) -> prooflab::CutMode {
    match mode {
        CutModeName::Exact => prooflab::CutMode::Exact,
        CutModeName::Local => prooflab::CutMode::Local { restarts: 8, seed },
    }
}
