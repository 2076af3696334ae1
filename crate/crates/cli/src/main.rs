//! `motif`: exact pattern counting from the command line.

mod selftest;

use clap::{Args, Parser, Subcommand, ValueEnum};
use motif_core::colored::{
    build_guarded_decomposition, count_colored_embeddings, count_colored_sub, count_colorful_subgraphs_ie,
};
use motif_core::decomp::{exact_treewidth, normalize_width2, to_nice};
use motif_core::graph::{parse_edge_list, parse_graph6, ColoredGraph, Graph};
use motif_core::homcount::{count_colored_hom, Engine};
use motif_core::motif::{change_basis, count_pattern_with, evaluate_with, parse_motif, Basis};
use motif_core::oracle::{BruteForce, CountKind};
use motif_core::partitions::sub_to_hom_vector;
use motif_core::Error;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "motif", version, about = "Exact subgraph and homomorphism counting for small patterns")]
struct Cli {
    /// Cap the number of worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count occurrences of a pattern in a host; prints one integer.
    Count(CountArgs),
    /// Count in colored graphs (edge-list files with `c` lines); prints one integer.
    ColoredCount(ColoredArgs),
    /// List the spasm of a pattern with the coefficient of each graph in the
    /// homomorphism expansion of the subgraph count.
    Spasm { pattern: String },
    /// Rewrite a motif-parameter file in another basis.
    Basis {
        #[arg(long)]
        from: BasisArg,
        #[arg(long)]
        to: BasisArg,
        #[arg(long)]
        input: String,
    },
    /// Evaluate a motif-parameter file on a host; prints one rational.
    Eval {
        #[arg(long)]
        param: String,
        #[arg(long)]
        host: String,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
    },
    /// Print a decomposition of a pattern, one node per line.
    Decompose(DecomposeArgs),
    /// Run the built-in reference fixtures and cross-checks.
    Selftest,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    /// graph6 code, or @file holding graph6 or an edge list.
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    host: String,
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    engine: EngineArg,
    /// Treat both graphs as colored (hom, emb and sub only).
    #[arg(long)]
    colored: bool,
}

#[derive(Args)]
struct ColoredArgs {
    #[arg(long, value_enum)]
    kind: ColoredKind,
    #[arg(long)]
    pattern: String,
    /// For `colorful`, host colors name pattern vertices.
    #[arg(long)]
    host: String,
    /// Use the brute-force oracle instead.
    #[arg(long)]
    brute: bool,
}

#[derive(Args)]
struct DecomposeArgs {
    /// graph6 code or @file.
    pattern: Option<String>,
    /// Nice decomposition (leaf / introduce / forget / join).
    #[arg(long, group = "mode")]
    nice: bool,
    /// Width-2 normal form with relabeled vertices.
    #[arg(long, group = "mode")]
    width2: bool,
    /// Guarded cutvertex decomposition of a colored pattern.
    #[arg(long, value_name = "SOURCE", group = "mode")]
    guarded: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Hom,
    Sub,
    Indsub,
    Emb,
    Strembed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ColoredKind {
    Hom,
    Emb,
    Sub,
    Colorful,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Hom,
    Sub,
    Indsub,
    Emb,
    Strembed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Auto,
    Dp,
    Mm,
    Brute,
}

impl From<KindArg> for Basis {
    fn from(k: KindArg) -> Basis {
        match k {
            KindArg::Hom => Basis::Hom,
            KindArg::Sub => Basis::Sub,
            KindArg::Indsub => Basis::IndSub,
            KindArg::Emb => Basis::Emb,
            KindArg::Strembed => Basis::StrEmb,
        }
    }
}

impl From<BasisArg> for Basis {
    fn from(k: BasisArg) -> Basis {
        match k {
            BasisArg::Hom => Basis::Hom,
            BasisArg::Sub => Basis::Sub,
            BasisArg::Indsub => Basis::IndSub,
            BasisArg::Emb => Basis::Emb,
            BasisArg::Strembed => Basis::StrEmb,
        }
    }
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Auto => Engine::Auto,
            EngineArg::Dp => Engine::Dp,
            EngineArg::Mm => Engine::Mm,
            EngineArg::Brute => Engine::Brute,
        }
    }
}

/// Exit status plus a one-line diagnostic.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        // malformed inputs are usage errors; everything else is a domain or capacity failure
        let code = if matches!(e, Error::Parse { .. }) { 2 } else { 1 };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn read_file(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
}

/// Inline graph6, or `@file` holding either graph6 or the edge-list format.
fn read_source(src: &str) -> Result<(Graph, Option<Vec<usize>>), Failure> {
    let Some(path) = src.strip_prefix('@') else {
        return Ok((parse_graph6(src)?, None));
    };
    let text = read_file(path)?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    let is_edge_list = matches!(first.split_whitespace().next(), Some("n" | "e" | "c"));
    if is_edge_list {
        Ok(parse_edge_list(&text)?)
    } else {
        let code = first.strip_prefix(">>graph6<<").unwrap_or(first);
        Ok((parse_graph6(code)?, None))
    }
}

fn read_graph(src: &str) -> Result<Graph, Failure> {
    Ok(read_source(src)?.0)
}

fn read_colored(src: &str) -> Result<ColoredGraph, Failure> {
    let (g, colors) = read_source(src)?;
    Ok(match colors {
        Some(c) => ColoredGraph::new(g, c)?,
        None => ColoredGraph::monochromatic(g),
    })
}

fn colored_count(kind: ColoredKind, pattern: &str, host: &str, brute: bool) -> Result<String, Failure> {
    let oracle = BruteForce::from_env();
    if kind == ColoredKind::Colorful {
        let f = read_graph(pattern)?;
        let g = read_colored(host)?;
        let n = if brute {
            oracle.colorful_partitioned(&f, g.graph(), g.colors())?
        } else {
            count_colorful_subgraphs_ie(&f, g.graph(), g.colors())?
        };
        return Ok(n.to_string());
    }
    let h = read_colored(pattern)?;
    let g = read_colored(host)?;
    let n = match (kind, brute) {
        (ColoredKind::Hom, false) => count_colored_hom(&h, &g)?,
        (ColoredKind::Hom, true) => oracle.count_colored(CountKind::ColoredHom, &h, &g)?,
        (ColoredKind::Emb, false) => count_colored_embeddings(&h, &g)?,
        (ColoredKind::Emb, true) => oracle.count_colored(CountKind::ColoredEmb, &h, &g)?,
        (ColoredKind::Sub, false) => count_colored_sub(&h, &g)?,
        (ColoredKind::Sub, true) => {
            let emb = oracle.count_colored(CountKind::ColoredEmb, &h, &g)?;
            emb / motif_core::graph::colored_automorphism_count(&h)
        }
        (ColoredKind::Colorful, _) => unreachable!(),
    };
    Ok(n.to_string())
}

fn run(cli: Cli) -> Result<String, Failure> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(usage("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| usage(format!("cannot configure threads: {e}")))?;
    }
    match cli.command {
        Command::Count(a) => {
            if a.colored {
                let kind = match a.kind {
                    KindArg::Hom => ColoredKind::Hom,
                    KindArg::Emb => ColoredKind::Emb,
                    KindArg::Sub => ColoredKind::Sub,
                    _ => return Err(Failure { code: 1, message: "colored counting supports hom, emb and sub".into() }),
                };
                return colored_count(kind, &a.pattern, &a.host, a.engine == EngineArg::Brute);
            }
            let h = read_graph(&a.pattern)?;
            let g = read_graph(&a.host)?;
            Ok(count_pattern_with(a.kind.into(), &h, &g, a.engine.into())?.to_string())
        }
        Command::ColoredCount(a) => colored_count(a.kind, &a.pattern, &a.host, a.brute),
        Command::Spasm { pattern } => {
            let h = read_graph(&pattern)?;
            let lines: Vec<String> =
                sub_to_hom_vector(&h)?.into_iter().map(|(f, c)| format!("{} {c}", f.key())).collect();
            Ok(lines.join("\n"))
        }
        Command::Basis { from, to, input } => {
            let p = parse_motif(&read_file(&input)?)?;
            let from: Basis = from.into();
            if p.basis() != from {
                return Err(usage(format!("{input} is in the {} basis, not {from}", p.basis())));
            }
            Ok(change_basis(&p, to.into())?.to_string().trim_end().to_string())
        }
        Command::Eval { param, host, engine } => {
            let p = parse_motif(&read_file(&param)?)?;
            let g = read_graph(&host)?;
            Ok(evaluate_with(&p, &g, engine.into())?.to_string())
        }
        Command::Decompose(a) => decompose(a),
        Command::Selftest => {
            let (report, ok) = selftest::run();
            if ok {
                Ok(report)
            } else {
                emit(&report);
                Err(Failure { code: 1, message: "self-test failed".into() })
            }
        }
    }
}

fn decompose(a: DecomposeArgs) -> Result<String, Failure> {
    if let Some(src) = a.guarded {
        let h = read_colored(&src)?;
        let d = build_guarded_decomposition(&h)?;
        return Ok(format!(
            "# guard size {}, at most {} colors per bag, flower bound {}, contracted width {}\n{}",
            d.guard_size(),
            d.max_colors_per_bag(&h),
            d.flower_bound(),
            d.contracted_width(),
            d.dump().trim_end()
        ));
    }
    let src = a.pattern.ok_or_else(|| usage("decompose needs a pattern"))?;
    let g = read_graph(&src)?;
    let (w, td) = exact_treewidth(&g)?;
    if a.nice {
        return Ok(to_nice(&td, &g)?.dump().trim_end().to_string());
    }
    if a.width2 {
        let d = normalize_width2(&td, &g)?;
        let relabel: Vec<String> = d.relabel.iter().enumerate().map(|(v, r)| format!("{v}:{r}")).collect();
        return Ok(format!("{}\n# relabel {}", d.td.dump(&|_| "bag".into()).trim_end(), relabel.join(",")));
    }
    Ok(format!("# width {w}\n{}", td.dump(&|_| "bag".into()).trim_end()))
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("motif: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
