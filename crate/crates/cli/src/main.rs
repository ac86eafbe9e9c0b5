mod output;
mod verify;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use colpart::closed_forms::Family;
use colpart::fixtures::{fixture_gf, FixtureId};
use colpart::graphs::GraphSpec;
use colpart::oracle::distribution_bruteforce_capped;
use colpart::transfer::{color_classes, km_prism_gf, prism_distribution_with, EngineConfig};
use colpart::{BigRational, BlockDistribution, Error, Graph};
use serde::Serialize;

use output::{
    classes_csv, decimal, dist_csv, exact, gf_csv, series_csv, verify_text, y_map, ClassRow,
    ClassesDoc, DistDoc, GfDoc, SeriesDoc, SeriesTerm,
};

const MAX_SERIES: usize = 64;

#[derive(Parser)]
#[command(
    name = "colpart",
    version,
    about = "Exact block-count distributions of colored graph partitions"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Transfer,
    Closed,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Transfer => "transfer",
            Method::Closed => "closed",
        }
    }
}

#[derive(clap::Args)]
struct GraphArgs {
    /// Graph description, e.g. `complete:4` or `product(complete:3,path:4)`.
    #[arg(long)]
    graph: String,
    #[arg(long)]
    k: u32,
    /// Take the product of the graph with `path:N`.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "brute")]
    method: Method,
    /// Brute force: maximum colorings enumerated. Transfer: maximum slice colorings.
    #[arg(long)]
    cap: Option<u64>,
    /// Also render the expectation in decimal with this many digits.
    #[arg(long)]
    decimals: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Block-count distribution and its expectation.
    Dist(GraphArgs),
    /// Expected number of blocks only.
    Expect(GraphArgs),
    /// Coefficients of x^0..x^N of a published generating function.
    Series {
        #[arg(long)]
        fixture: FixtureId,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long = "N", value_name = "N")]
        max_n: usize,
    },
    /// Print a generating function in the polynomial syntax.
    Gf {
        #[arg(
            long,
            conflicts_with = "complete",
            required_unless_present = "complete"
        )]
        fixture: Option<FixtureId>,
        /// Use the reduced system for `K_m x P_n` instead of a fixture.
        #[arg(long, requires = "k")]
        complete: Option<usize>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Color classes of the k-colorings of K_m.
    Classes {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "quick")]
        suite: verify::Suite,
        /// Corrupt one published coefficient before checking.
        #[arg(long, hide = true)]
        corrupt_fixture: bool,
    },
}

enum Failure {
    Lib(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => 3,
                _ => 2,
            })
        }
    }
}

fn emit<T: Serialize>(format: Format, doc: &T, csv: impl Fn(&T) -> String) {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(doc).expect("serializable") + "\n",
        Format::Csv => csv(doc),
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Dist(a) => emit(cli.format, &graph_doc(a, true)?, dist_csv),
        Command::Expect(a) => emit(cli.format, &graph_doc(a, false)?, dist_csv),
        Command::Series { fixture, k, max_n } => {
            emit(cli.format, &series_doc(*fixture, *k, *max_n)?, series_csv)
        }
        Command::Gf {
            fixture,
            complete,
            k,
        } => emit(cli.format, &gf_doc(*fixture, *complete, *k)?, gf_csv),
        Command::Classes { m, k } => emit(cli.format, &classes_doc(*m, *k)?, classes_csv),
        Command::Verify {
            suite,
            corrupt_fixture,
        } => {
            let ctx = verify::Ctx {
                corrupt_fixture: *corrupt_fixture,
            };
            let doc = verify::run(*suite, &ctx);
            emit(cli.format, &doc, verify_text);
            if doc.failed > 0 {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

/// The graph spec after applying `--n`.
fn effective_spec(a: &GraphArgs) -> Result<GraphSpec, Error> {
    let spec = GraphSpec::parse(&a.graph)?;
    Ok(match a.n {
        Some(n) => GraphSpec::Product(Box::new(spec), Box::new(GraphSpec::Path(n))),
        None => spec,
    })
}

fn recognize(spec: &GraphSpec, g: &Graph) -> Option<Family> {
    match spec {
        GraphSpec::Pbt(h) => Some(Family::PerfectBinaryTree { height: *h }),
        GraphSpec::Cycle(n) => Some(Family::Cycle { n: *n }),
        GraphSpec::Complete(n) => Some(Family::Complete { n: *n }),
        GraphSpec::Bipartite(n, m) => Some(Family::Bipartite { n: *n, m: *m }),
        _ => match spec.as_path_product() {
            Some((GraphSpec::Complete(l), n)) => Some(Family::CompletePrism { l: *l, n }),
            _ if g.is_tree() => Some(Family::Tree {
                n: g.vertex_count(),
            }),
            _ => None,
        },
    }
}

enum Computed {
    Dist(BlockDistribution),
    Expected(BigRational),
}

fn compute(a: &GraphArgs, spec: &GraphSpec, g: &Graph, want_dist: bool) -> Result<Computed, Error> {
    let d = match a.method {
        Method::Brute => {
            let cap = a
                .cap
                .map_or(colpart::oracle::DEFAULT_ENUMERATION_CAP, u128::from);
            distribution_bruteforce_capped(g, a.k, cap)?
        }
        Method::Transfer => {
            let (slice, n) = spec.as_path_product().ok_or_else(|| {
                Error::InvalidParameter("transfer needs product(G,path:n) or --n".into())
            })?;
            let mut cfg = EngineConfig::default();
            if let Some(c) = a.cap {
                cfg.max_colorings = c;
            }
            prism_distribution_with(&slice.build()?, a.k, n, &cfg)?
        }
        Method::Closed => {
            let fam = recognize(spec, g)
                .ok_or_else(|| Error::InvalidParameter(format!("no closed form for {spec}")))?;
            if !want_dist {
                return Ok(Computed::Expected(fam.expected(a.k)?));
            }
            fam.distribution(a.k)?
        }
    };
    Ok(Computed::Dist(d))
}

fn graph_doc(a: &GraphArgs, want_dist: bool) -> Result<DistDoc, Error> {
    let start = Instant::now();
    let spec = effective_spec(a)?;
    let g = spec.build()?;
    if a.k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let (distribution, total, expected) = match compute(a, &spec, &g, want_dist)? {
        Computed::Dist(d) => {
            let total = want_dist.then(|| d.total().to_string());
            let map = want_dist.then(|| DistDoc::distribution_of(&d));
            (map, total, d.expected())
        }
        Computed::Expected(e) => (None, None, e),
    };
    Ok(DistDoc {
        command: if want_dist { "dist" } else { "expect" },
        graph: spec.to_string(),
        k: a.k,
        method: a.method.name().into(),
        vertices: g.vertex_count(),
        distribution,
        total,
        expected_decimal: a.decimals.map(|d| decimal(&expected, d)),
        expected: exact(&expected),
        decimals: a.decimals,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn series_doc(id: FixtureId, k: Option<u32>, max_n: usize) -> Result<SeriesDoc, Error> {
    let start = Instant::now();
    if max_n > MAX_SERIES {
        return Err(Error::InvalidParameter(format!(
            "N must be at most {MAX_SERIES}"
        )));
    }
    let colors = id.colors(k)?;
    let coeffs = fixture_gf(id, k)?.series(max_n)?;
    let series = coeffs
        .iter()
        .enumerate()
        .map(|(n, p)| SeriesTerm {
            n,
            coefficients: y_map(p),
        })
        .collect();
    Ok(SeriesDoc {
        command: "series",
        source: id.to_string(),
        k: colors,
        max_n,
        series,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn gf_doc(
    fixture: Option<FixtureId>,
    complete: Option<usize>,
    k: Option<u32>,
) -> Result<GfDoc, Error> {
    let (source, colors, gf) = match (fixture, complete) {
        (Some(id), _) => (id.to_string(), id.colors(k)?, fixture_gf(id, k)?),
        (None, Some(m)) => {
            let k = k.ok_or_else(|| Error::InvalidParameter("--complete needs --k".into()))?;
            (format!("complete:{m}"), k, km_prism_gf(m, k as usize)?)
        }
        (None, None) => {
            return Err(Error::InvalidParameter(
                "give --fixture or --complete".into(),
            ))
        }
    };
    Ok(GfDoc {
        command: "gf",
        source,
        k: colors,
        num: gf.num.to_string(),
        den: gf.den.to_string(),
        num_poly: gf.num,
        den_poly: gf.den,
    })
}

fn classes_doc(m: usize, k: usize) -> Result<ClassesDoc, Error> {
    let classes = color_classes(m, k)?;
    let total: num_bigint::BigInt = classes.iter().map(|c| &c.class_size).sum();
    Ok(ClassesDoc {
        command: "classes",
        m,
        k,
        count: classes.len(),
        total: total.to_string(),
        classes: classes
            .iter()
            .map(|c| ClassRow {
                parts: c.part_sizes().into_iter().filter(|&p| p > 0).collect(),
                representative: c.representative.clone(),
                size: c.class_size.to_string(),
                support: c.support,
            })
            .collect(),
    })
}
