//! Command-line front end: generate point configurations, analyze point-set
//! files, run the self-verification suites, and benchmark frame-potential
//! evaluation.
//!
//! Exit codes: 0 = ran to completion (identity failures are data),
//! 2 = input/parameter error, 3 = hypothesis violation under `--strict`.

mod analyze;
mod manifest;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use spherechord::core::{PointConfig, Tolerances};
use spherechord::frames;
use spherechord::generators::{self, GeneratedConfig};
use spherechord::verify::{self, CheckRow};
use spherechord::{io as scio, Error};

use manifest::RunManifest;

#[derive(Parser)]
#[command(
    name = "spherechord",
    version,
    about = "Chord sums, distance spectra, and frame potentials of point sets on unit n-spheres"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalArgs,
}

#[derive(Args, Clone)]
struct GlobalArgs {
    /// Set all three tolerances at once.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Sphere-membership tolerance (absolute); overrides --tolerance.
    #[arg(long, global = true)]
    on_sphere_tol: Option<f64>,
    /// Squared-length clustering tolerance (absolute); overrides --tolerance.
    #[arg(long, global = true)]
    dedup_tol: Option<f64>,
    /// Route-agreement tolerance (relative); overrides --tolerance.
    #[arg(long, global = true)]
    identity_tol: Option<f64>,
    /// Exit 3 when a hypothesis check fails instead of reporting it as data.
    #[arg(long, global = true)]
    strict: bool,
    /// Write output to this file instead of stdout; the run manifest lands
    /// beside it as <out>.manifest.json.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format for generated point sets and verify rows.
    #[arg(long, global = true, value_enum, default_value_t = FileFormat::Json)]
    format: FileFormat,
    /// RNG seed for random generation and the verification suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

impl GlobalArgs {
    fn tolerances(&self) -> Result<Tolerances, Error> {
        let base = self.tolerance.map(Tolerances::uniform).unwrap_or_default();
        let tol = Tolerances {
            on_sphere_tol: self.on_sphere_tol.unwrap_or(base.on_sphere_tol),
            dedup_tol: self.dedup_tol.unwrap_or(base.dedup_tol),
            identity_tol: self.identity_tol.unwrap_or(base.identity_tol),
        };
        tol.check()?;
        Ok(tol)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a point configuration from a named family.
    Generate {
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// Analyze a point-set file (JSON or CSV): chords, spectrum, symmetry,
    /// frames, and the symmetric-sum identity or symmetrization bounds when
    /// their hypotheses hold.
    Analyze {
        /// Input point-set file.
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Run the self-verification suites and print one row per check.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Time the naive Θ(nV²) frame potential against the Θ(n²V) operator
    /// route; emits a CSV timing table.
    Bench {
        #[arg(long, default_value_t = 8)]
        dim: usize,
        /// Point counts to benchmark, comma-separated.
        #[arg(long, value_delimiter = ',', default_values_t = vec![64usize, 256, 1024, 4096, 16384])]
        counts: Vec<usize>,
        /// Timing repetitions per count (the minimum is reported).
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Regular E-gon inscribed in the unit circle.
    Polygon {
        #[arg(long)]
        edges: usize,
    },
    /// Regular simplex: n+1 unit vectors in R^n with pairwise inner
    /// product −1/n.
    Simplex {
        #[arg(long)]
        dim: usize,
    },
    /// The 2n points ±e_1..±e_n.
    CrossPolytope {
        #[arg(long)]
        dim: usize,
    },
    /// The 2^n points (±1,…,±1)/√n.
    Hypercube {
        #[arg(long)]
        dim: usize,
    },
    /// Two aligned regular polygon rings at polar angles ±polar-angle.
    Prism {
        #[arg(long)]
        base_edges: usize,
        #[arg(long)]
        polar_angle: f64,
    },
    /// Like prism, with the lower ring rotated by π/base-edges.
    Antiprism {
        #[arg(long)]
        base_edges: usize,
        #[arg(long)]
        polar_angle: f64,
    },
    /// All n! permutations of (1..n), centered and scaled to the unit sphere.
    Permutahedron {
        #[arg(long)]
        dim: usize,
    },
    /// Orbit of a unit seed point under coordinate permutations (and sign
    /// flips with --signs). Omitting --seed-point draws a random unit seed
    /// from --seed.
    Orbit {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        signs: bool,
        /// Comma-separated coordinates of a unit vector.
        #[arg(long)]
        seed_point: Option<String>,
    },
    /// V points uniform on S^{n−1}, deterministic for a given --seed.
    Random {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        count: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Chords,
    Spectrum,
    Frames,
    All,
}

fn main() {
    let cli = Cli::parse();
    let strict = cli.global.strict;
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = if e.is_hypothesis_violation() && strict {
                3
            } else {
                2
            };
            std::process::exit(code);
        }
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    let tol = cli.global.tolerances()?;
    match cli.command {
        Command::Generate { family } => cmd_generate(family, &cli.global, tol),
        Command::Analyze { input } => cmd_analyze(&input, &cli.global, tol),
        Command::Verify { suite } => cmd_verify(suite, &cli.global, tol),
        Command::Bench {
            dim,
            counts,
            repeats,
        } => cmd_bench(dim, &counts, repeats, &cli.global, tol),
    }
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

fn build_family(family: FamilyCmd, seed: u64) -> Result<GeneratedConfig, Error> {
    match family {
        FamilyCmd::Polygon { edges } => generators::regular_polygon(edges),
        FamilyCmd::Simplex { dim } => generators::regular_simplex(dim),
        FamilyCmd::CrossPolytope { dim } => generators::cross_polytope(dim),
        FamilyCmd::Hypercube { dim } => generators::hypercube(dim),
        FamilyCmd::Prism {
            base_edges,
            polar_angle,
        } => generators::prism(base_edges, polar_angle),
        FamilyCmd::Antiprism {
            base_edges,
            polar_angle,
        } => generators::antiprism(base_edges, polar_angle),
        FamilyCmd::Permutahedron { dim } => generators::permutahedron(dim),
        FamilyCmd::Orbit {
            dim,
            signs,
            seed_point,
        } => {
            let seed_point = match seed_point {
                Some(text) => parse_seed_point(&text, dim)?,
                None => generators::random_unit_vector(dim, seed)?,
            };
            generators::signed_perm_orbit(&seed_point, signs)
        }
        FamilyCmd::Random { dim, count } => generators::random_sphere(dim, count, seed),
    }
}

fn parse_seed_point(text: &str, dim: usize) -> Result<Vec<f64>, Error> {
    let coords: Result<Vec<f64>, _> = text.split(',').map(|t| t.trim().parse::<f64>()).collect();
    let coords = coords.map_err(|e| Error::Parse(format!("--seed-point: {e}")))?;
    if coords.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: coords.len(),
        });
    }
    Ok(coords)
}

fn cmd_generate(family: FamilyCmd, global: &GlobalArgs, tol: Tolerances) -> Result<i32, Error> {
    let generated = build_family(family, global.seed)?;
    let content = match global.format {
        FileFormat::Json => scio::generated_to_json_string(&generated),
        FileFormat::Csv => scio::to_csv_string(&generated.config),
    };
    let m = RunManifest::new("generate", tol)
        .param("family", generated.family)
        .param("family_params", &generated.params)
        .param("seed", global.seed)
        .param(
            "format",
            match global.format {
                FileFormat::Json => "json",
                FileFormat::Csv => "csv",
            },
        );
    manifest::emit(m, &content, global.out.as_ref())?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

fn cmd_analyze(input: &PathBuf, global: &GlobalArgs, tol: Tolerances) -> Result<i32, Error> {
    let bytes = std::fs::read(input)?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|e| Error::Parse(format!("{}: {e}", input.display())))?;
    let format = scio::detect_format(input).unwrap_or(scio::Format::Json);
    let config: PointConfig = scio::parse(&text, format)?;

    let (report, hypothesis_failures) = analyze::analyze(&config, &tol);
    let mut content = serde_json::to_string_pretty(&report)?;
    content.push('\n');

    let m = RunManifest::new("analyze", tol).with_input(input, &bytes);
    manifest::emit(m, &content, global.out.as_ref())?;

    if global.strict && !hypothesis_failures.is_empty() {
        for failure in &hypothesis_failures {
            eprintln!("hypothesis violation: {failure}");
        }
        return Ok(3);
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn render_rows_csv(rows: &[CheckRow]) -> String {
    let mut out = String::from("name,residual,tolerance,pass,detail\n");
    for row in rows {
        out.push_str(&format!(
            "{},{:e},{:e},{},{}\n",
            row.name,
            row.residual,
            row.tolerance,
            if row.pass { "PASS" } else { "FAIL" },
            row.detail.as_deref().unwrap_or("").replace(',', ";"),
        ));
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    out.push_str(&format!("# {} checks, {} failed\n", rows.len(), failed));
    out
}

fn cmd_verify(suite: Suite, global: &GlobalArgs, tol: Tolerances) -> Result<i32, Error> {
    let rows = match suite {
        Suite::Chords => verify::chords_suite(global.seed),
        Suite::Spectrum => verify::spectrum_suite(global.seed),
        Suite::Frames => verify::frames_suite(global.seed),
        Suite::All => verify::all_suites(global.seed),
    };
    let content = match global.format {
        FileFormat::Json => {
            let mut s = serde_json::to_string_pretty(&rows)?;
            s.push('\n');
            s
        }
        FileFormat::Csv => render_rows_csv(&rows),
    };
    let m = RunManifest::new("verify", tol)
        .param(
            "suite",
            match suite {
                Suite::Chords => "chords",
                Suite::Spectrum => "spectrum",
                Suite::Frames => "frames",
                Suite::All => "all",
            },
        )
        .param("seed", global.seed);
    manifest::emit(m, &content, global.out.as_ref())?;

    let failed = rows.iter().filter(|r| !r.pass).count();
    if global.strict && failed > 0 {
        return Ok(3);
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

fn time_min<F: FnMut() -> f64>(repeats: usize, mut f: F) -> (f64, f64) {
    let mut best = f64::INFINITY;
    let mut value = 0.0;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        value = f();
        best = best.min(start.elapsed().as_secs_f64());
    }
    (best, value)
}

fn cmd_bench(
    dim: usize,
    counts: &[usize],
    repeats: usize,
    global: &GlobalArgs,
    tol: Tolerances,
) -> Result<i32, Error> {
    let mut csv = String::new();
    csv.push_str(
        "# cost model: the naive double sum is Theta(n*V^2); the frame-operator route is \
         Theta(n^2*V) + Theta(n^2). An n*V-operation evaluation of ||S||_F^2 is not \
         attainable: S alone has n^2 entries.\n",
    );
    csv.push_str("dim,count,repeats,naive_seconds,operator_seconds,speedup,rel_discrepancy\n");

    for (i, &count) in counts.iter().enumerate() {
        let config = generators::random_sphere(dim, count, global.seed.wrapping_add(i as u64))?
            .config;
        let (naive_seconds, naive_value) =
            time_min(repeats, || frames::frame_potential_naive(&config, &tol).unwrap());
        let (operator_seconds, operator_value) = time_min(repeats, || {
            frames::frame_potential_operator(&config, &tol).unwrap().0
        });
        let rel = (naive_value - operator_value).abs() / naive_value.abs().max(1.0);
        csv.push_str(&format!(
            "{dim},{count},{repeats},{naive_seconds:.6e},{operator_seconds:.6e},{:.3},{rel:.3e}\n",
            naive_seconds / operator_seconds
        ));
    }

    let m = RunManifest::new("bench", tol)
        .param("dim", dim)
        .param("counts", counts)
        .param("repeats", repeats)
        .param("seed", global.seed);
    manifest::emit(m, &csv, global.out.as_ref())?;
    Ok(0)
}
