//! `amc`: colouring constructions, almost-monochromatic searches, Ramsey
//! engines, and plane-geometry probes with machine-checkable witnesses.
//!
//! Exit codes: 0 = witness found / construction succeeded; 3 = exhausted /
//! none exists; 2 = usage or data error.

mod geomio;
mod parse;
mod render;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use amc::colouring::certify_shell_ap_free;
use amc::error::Error;
use amc::incidence::{
    check_smiling, place_scaled_copy, SmilingTarget,
};
use amc::rational::{format_rat, parse_rat, rat};
use amc::search::{
    grid_expand, probe_mono_ap, search_am_homothet, search_am_similar_2d, search_mono_homothet,
    GridExpandParams, SearchOptions, WitnessKind,
};
use amc::structure::{analyze_z_colouring, egyptian_bound, enumerate_unit_fraction_solutions};
use amc::udg::{
    moser_spindle, solve_bichromatic_origin, solve_proper, unit_triangle, BichromaticOutcome,
    SolveOutcome, UnitDistanceGraph,
};
use amc::ramsey;

const EXIT_FOUND: i32 = 0;
const EXIT_ERROR: i32 = 2;
const EXIT_EXHAUSTED: i32 = 3;

#[derive(Parser)]
#[command(name = "amc", version, about = "Exact colouring constructions and witness searches")]
struct Cli {
    /// Worker count for the parallel searches (1 = fully sequential).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Write the main output (witness JSON, SVG, report) to this file
    /// instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Record a run manifest (parameters, digests, timing) to this file.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate or render colouring constructions.
    Colouring {
        #[command(subcommand)]
        action: ColouringCmd,
    },
    /// Witness searches over finite windows.
    Search {
        #[command(subcommand)]
        action: SearchCmd,
    },
    /// Van der Waerden, Hales-Jewett, and Gallai engines.
    Ramsey {
        #[command(subcommand)]
        action: RamseyCmd,
    },
    /// Integer-colouring structure analysis and Egyptian fractions.
    Structure {
        #[command(subcommand)]
        action: StructureCmd,
    },
    /// Bouquets, pencils, smiling checks, and rotatable lattices.
    Geometry {
        #[command(subcommand)]
        action: GeometryCmd,
    },
    /// Unit-distance graphs.
    Udg {
        #[command(subcommand)]
        action: UdgCmd,
    },
    /// Replay a witness file's evidence against its named oracle.
    Verify {
        /// Witness JSON produced by a search subcommand.
        #[arg(long)]
        witness: PathBuf,
        /// Override the oracle spec (defaults to the witness's own name).
        #[arg(long)]
        colouring: Option<String>,
    },
    /// Re-run the command recorded in a manifest.
    Replay {
        manifest: PathBuf,
    },
}

#[derive(Subcommand)]
enum ColouringCmd {
    /// Emit (point, colour) pairs over a window as JSON lines.
    Sample {
        #[arg(long)]
        colouring: String,
        #[arg(long, allow_hyphen_values = true)]
        window: String,
    },
    /// Render a 2-D window as a deterministic SVG raster.
    Render {
        #[arg(long)]
        colouring: String,
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        /// Grid resolution `COLSxROWS`, e.g. 200x200.
        #[arg(long, default_value = "200x200")]
        resolution: String,
    },
    /// Emit the structural AP-freeness certificate of a shell colouring.
    Certify {
        #[arg(long)]
        colouring: String,
    },
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Almost-monochromatic copies under positive homothets (and, with
    /// --rot-param, rational-rotation similarities in the plane).
    Am(AmArgs),
    /// Monochromatic arithmetic progressions.
    Ap {
        #[arg(long)]
        colouring: String,
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long, default_value_t = 3)]
        n_terms: u32,
        #[arg(long, allow_hyphen_values = true)]
        t_max: String,
    },
    /// Monochromatic positive homothets with integer ratio (ground truth
    /// for the Hales-Jewett route).
    Gallai {
        #[arg(long)]
        colouring: String,
        /// Base point set, e.g. `0,1,2` or `(0,0),(1,0),(0,1)`.
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long, default_value_t = 8)]
        lambda_max: u64,
    },
    /// Grid expansion: an AM copy or a monochromatic scaled sublattice.
    Grid {
        #[arg(long)]
        colouring: String,
        #[arg(long, allow_hyphen_values = true)]
        pattern: String,
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long, default_value_t = 2)]
        ball_radius: u64,
        #[arg(long, default_value_t = 4)]
        lambda_max: u64,
        #[arg(long, default_value_t = 3)]
        rot_param: u64,
    },
}

#[derive(Args)]
struct AmArgs {
    #[arg(long)]
    colouring: String,
    /// Pattern with distinguished point, e.g. `1,2,3@2`.
    #[arg(long, allow_hyphen_values = true)]
    pattern: String,
    #[arg(long, allow_hyphen_values = true)]
    window: String,
    #[arg(long, allow_hyphen_values = true)]
    lambda_max: String,
    /// Enumerate rational rotations up to this parameter (2-D only).
    #[arg(long)]
    rot_param: Option<u64>,
}

#[derive(Subcommand)]
enum RamseyCmd {
    /// Van der Waerden number by complete backtracking.
    Vdw {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, default_value_t = 64)]
        nmax: u32,
    },
    /// Scan a cube colouring for a monochromatic combinatorial line.
    Hj {
        #[arg(long)]
        n: u8,
        #[arg(long = "N")]
        big_n: u32,
        /// Cube colouring: `digitsum:<k>` (sum of letters mod k).
        #[arg(long, default_value = "digitsum:2")]
        cube: String,
    },
    /// Monochromatic homothet through the cube embedding.
    Gallai {
        #[arg(long)]
        colouring: String,
        /// Base point set (alias: --pattern).
        #[arg(long, alias = "pattern", allow_hyphen_values = true)]
        points: String,
        #[arg(long = "N")]
        big_n: u32,
    },
}

#[derive(Subcommand)]
enum StructureCmd {
    /// AP-partition analysis of an integer colouring window.
    Analyze {
        #[arg(long)]
        colouring: String,
        /// 1-D integer window `lo:hi`.
        #[arg(long, allow_hyphen_values = true)]
        window: String,
    },
    /// Egyptian-fraction bound, optionally with the full solution list.
    Egyptian {
        #[arg(long)]
        k: u32,
        /// Target sum (default 1).
        #[arg(long, default_value = "1")]
        c: String,
        #[arg(long)]
        enumerate: bool,
    },
}

#[derive(Subcommand)]
enum GeometryCmd {
    /// Place a scaled congruent copy on a bouquet.
    Place {
        #[arg(long)]
        bouquet: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Search for a smiling copy of a bouquet or pencil.
    Smiling {
        #[arg(long)]
        colouring: String,
        #[arg(long)]
        bouquet: Option<PathBuf>,
        #[arg(long)]
        pencil: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        density: u64,
    },
    /// Rotatability witness for a rational lattice.
    Rotatable {
        /// Basis, e.g. `(1,0);(0,1)` or `z2`.
        #[arg(long, allow_hyphen_values = true)]
        lattice: String,
        #[arg(long, allow_hyphen_values = true)]
        lo: f64,
        #[arg(long, allow_hyphen_values = true)]
        hi: f64,
        #[arg(long, default_value_t = 12)]
        max_param: u64,
    },
}

#[derive(Subcommand)]
enum UdgCmd {
    /// Proper colouring, optionally with a bichromatic origin.
    Solve {
        /// `moser`, `triangle`, or a graph JSON path.
        #[arg(long)]
        graph: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        bichromatic_origin: bool,
        /// Override the origin vertex id.
        #[arg(long)]
        origin: Option<String>,
    },
    /// Unit-length validation report.
    Validate {
        #[arg(long)]
        graph: String,
    },
}

#[derive(Serialize, Deserialize)]
struct Manifest {
    schema: String,
    argv: Vec<String>,
    /// SHA-256 of every argument that names a readable input file.
    input_digests: std::collections::BTreeMap<String, String>,
    witness_path: Option<String>,
    wall_time_ms: u128,
    jobs: usize,
}

fn input_digests(argv: &[String], skip: &[&Option<PathBuf>]) -> std::collections::BTreeMap<String, String> {
    let skip: Vec<String> = skip
        .iter()
        .filter_map(|p| p.as_ref().map(|p| p.display().to_string()))
        .collect();
    argv.iter()
        .skip(1)
        .filter(|a| !a.starts_with('-') && !skip.contains(a))
        .filter_map(|a| {
            let data = std::fs::read(a).ok()?;
            use sha2::Digest;
            let mut h = sha2::Sha256::new();
            h.update(&data);
            Some((a.clone(), format!("sha256:{:x}", h.finalize())))
        })
        .collect()
}

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(run(argv));
}

fn run(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with its own formatting.
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_FOUND };
        }
    };
    let started = Instant::now();
    let result = dispatch(&cli);
    let code = match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    };
    if let Some(path) = &cli.manifest {
        let stripped = strip_manifest_flag(&argv);
        let manifest = Manifest {
            schema: "amc.manifest/1".into(),
            input_digests: input_digests(&stripped, &[&cli.out]),
            argv: stripped,
            witness_path: cli.out.as_ref().map(|p| p.display().to_string()),
            wall_time_ms: started.elapsed().as_millis(),
            jobs: cli.jobs,
        };
        let body = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
        if let Err(e) = std::fs::write(path, body + "\n") {
            eprintln!("error: cannot write manifest: {e}");
            return EXIT_ERROR;
        }
    }
    code
}

fn strip_manifest_flag(argv: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(argv.len());
    let mut skip = false;
    for a in argv {
        if skip {
            skip = false;
            continue;
        }
        if a == "--manifest" {
            skip = true;
            continue;
        }
        if a.starts_with("--manifest=") {
            continue;
        }
        out.push(a.clone());
    }
    out
}

fn emit(out: &Option<PathBuf>, body: &str) -> amc::Result<()> {
    match out {
        Some(path) => std::fs::write(path, body).map_err(|e| {
            Error::Parse(format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .map_err(|e| Error::Parse(format!("cannot write stdout: {e}")))
        }
    }
}

fn witness_exit(kind: WitnessKind) -> i32 {
    if kind == WitnessKind::Exhausted {
        EXIT_EXHAUSTED
    } else {
        EXIT_FOUND
    }
}

fn dispatch(cli: &Cli) -> amc::Result<i32> {
    let opts = SearchOptions::with_jobs(cli.jobs);
    match &cli.command {
        Command::Colouring { action } => colouring_cmd(cli, action),
        Command::Search { action } => search_cmd(cli, action, opts),
        Command::Ramsey { action } => ramsey_cmd(cli, action),
        Command::Structure { action } => structure_cmd(cli, action),
        Command::Geometry { action } => geometry_cmd(cli, action),
        Command::Udg { action } => udg_cmd(cli, action),
        Command::Verify { witness, colouring } => verify_cmd(witness, colouring.as_deref()),
        Command::Replay { manifest } => replay_cmd(manifest),
    }
}

fn colouring_cmd(cli: &Cli, action: &ColouringCmd) -> amc::Result<i32> {
    match action {
        ColouringCmd::Sample { colouring, window } => {
            let oracle = parse::parse_colouring(colouring)?;
            let window = parse::parse_window(window)?;
            let mut body = String::new();
            for p in window.points() {
                let colour = oracle.colour(&p)?;
                body.push_str(&serde_json::to_string(&serde_json::json!({
                    "point": p.to_strings(),
                    "colour": colour,
                }))
                .expect("sample serializes"));
                body.push('\n');
            }
            emit(&cli.out, &body)?;
            Ok(EXIT_FOUND)
        }
        ColouringCmd::Render {
            colouring,
            window,
            resolution,
        } => {
            let oracle = parse::parse_colouring(colouring)?;
            let window = parse::parse_window(window)?;
            let (nx, ny) = resolution
                .split_once('x')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                .ok_or_else(|| Error::Parse(format!("bad resolution {resolution:?}")))?;
            let svg = render::render_colouring(&oracle, &window, nx, ny)?;
            emit(&cli.out, &svg)?;
            Ok(EXIT_FOUND)
        }
        ColouringCmd::Certify { colouring } => {
            let oracle = parse::parse_colouring(colouring)?;
            let cert = certify_shell_ap_free(&oracle)?;
            let body = serde_json::to_string_pretty(&serde_json::json!({
                "schema": "amc.certificate/1",
                "construction": cert.construction,
                "statement": cert.statement,
                "difference_bound": cert.difference_bound.as_ref().map(format_rat),
            }))
            .expect("certificate serializes")
                + "\n";
            emit(&cli.out, &body)?;
            Ok(EXIT_FOUND)
        }
    }
}

fn search_cmd(cli: &Cli, action: &SearchCmd, opts: SearchOptions) -> amc::Result<i32> {
    let witness = match action {
        SearchCmd::Am(args) => {
            let oracle = parse::parse_colouring(&args.colouring)?;
            let pattern = parse::parse_pattern(&args.pattern)?;
            let window = parse::parse_window(&args.window)?;
            let lambda_max = parse_rat(&args.lambda_max)?;
            match args.rot_param {
                Some(rp) => search_am_similar_2d(&oracle, &pattern, &window, &lambda_max, rp, opts)?,
                None => search_am_homothet(&oracle, &pattern, &window, &lambda_max, opts)?,
            }
        }
        SearchCmd::Ap {
            colouring,
            window,
            n_terms,
            t_max,
        } => {
            let oracle = parse::parse_colouring(colouring)?;
            let window = parse::parse_window(window)?;
            probe_mono_ap(&oracle, &window, *n_terms, &parse_rat(t_max)?)?
        }
        SearchCmd::Gallai {
            colouring,
            points,
            window,
            lambda_max,
        } => {
            let oracle = parse::parse_colouring(colouring)?;
            let pts = parse::parse_points(points)?;
            let window = parse::parse_window(window)?;
            search_mono_homothet(&oracle, &pts, &window, *lambda_max, opts)?
        }
        SearchCmd::Grid {
            colouring,
            pattern,
            window,
            ball_radius,
            lambda_max,
            rot_param,
        } => {
            let oracle = parse::parse_colouring(colouring)?;
            let pattern = parse::parse_pattern(pattern)?;
            let window = parse::parse_window(window)?;
            grid_expand(
                &oracle,
                &pattern,
                &window,
                &GridExpandParams {
                    ball_radius: *ball_radius,
                    lambda_max: *lambda_max,
                    max_rot_param: *rot_param,
                },
                opts,
            )?
        }
    };
    emit(&cli.out, &witness.to_json())?;
    Ok(witness_exit(witness.kind))
}

fn ramsey_cmd(cli: &Cli, action: &RamseyCmd) -> amc::Result<i32> {
    match action {
        RamseyCmd::Vdw { k, l, nmax } => {
            let (outcome, log) = ramsey::vdw_number(*k, *l, *nmax)?;
            let (code, body) = match &outcome {
                ramsey::VdwOutcome::Exact { value, witness } => (
                    EXIT_FOUND,
                    serde_json::json!({
                        "schema": "amc.vdw/1",
                        "k": k, "l": l, "n_max": nmax,
                        "outcome": "exact",
                        "value": value,
                        "ap_free_witness": witness,
                        "log": log,
                    }),
                ),
                ramsey::VdwOutcome::BeyondCap { n_max, witness } => (
                    EXIT_EXHAUSTED,
                    serde_json::json!({
                        "schema": "amc.vdw/1",
                        "k": k, "l": l, "n_max": n_max,
                        "outcome": "beyond_cap",
                        "ap_free_witness": witness,
                        "log": log,
                    }),
                ),
            };
            if let ramsey::VdwOutcome::Exact { value, .. } = &outcome {
                println!("{value}");
            }
            emit(&cli.out, &(serde_json::to_string_pretty(&body).unwrap() + "\n"))?;
            Ok(code)
        }
        RamseyCmd::Hj { n, big_n, cube } => {
            let cube = build_cube(*n, *big_n, cube)?;
            let line = ramsey::hj_find_line(&cube)?;
            let (code, body) = match line {
                Some(line) => (
                    EXIT_FOUND,
                    serde_json::json!({
                        "schema": "amc.hjline/1",
                        "n": n, "N": big_n,
                        "template": line
                            .template
                            .iter()
                            .map(|t| match t {
                                Some(v) => v.to_string(),
                                None => "*".into(),
                            })
                            .collect::<Vec<_>>(),
                        "points": line.points(*n),
                    }),
                ),
                None => (
                    EXIT_EXHAUSTED,
                    serde_json::json!({
                        "schema": "amc.hjline/1",
                        "n": n, "N": big_n,
                        "outcome": "no monochromatic line at this dimension",
                        "lines_scanned": ramsey::line_count(*n, *big_n),
                    }),
                ),
            };
            emit(&cli.out, &(serde_json::to_string_pretty(&body).unwrap() + "\n"))?;
            Ok(code)
        }
        RamseyCmd::Gallai {
            colouring,
            points,
            big_n,
        } => {
            let oracle = parse::parse_colouring(colouring)?;
            let pts = parse::parse_points(points)?;
            // AMC_LAB_CACHE keeps completed pullback scans keyed by the
            // parameter digest; cached witnesses are revalidated before use.
            let cache_entry = std::env::var("AMC_LAB_CACHE").ok().map(|dir| {
                let key = amc::search::digest(&format!(
                    "gallai|{}|{}|{}",
                    oracle.name(),
                    points,
                    big_n
                ));
                PathBuf::from(dir).join(format!("{}.json", &key[7..23]))
            });
            if let Some(path) = &cache_entry {
                if let Ok(data) = std::fs::read_to_string(path) {
                    if let Ok(witness) = amc::Witness::from_json(&data) {
                        if witness.revalidate(&oracle).is_ok() {
                            emit(&cli.out, &witness.to_json())?;
                            return Ok(witness_exit(witness.kind));
                        }
                    }
                }
            }
            let witness = ramsey::gallai_via_hj(&oracle, &pts, *big_n)?;
            if let Some(path) = &cache_entry {
                if let Some(dir) = path.parent() {
                    let _ = std::fs::create_dir_all(dir);
                }
                let _ = std::fs::write(path, witness.to_json());
            }
            emit(&cli.out, &witness.to_json())?;
            Ok(witness_exit(witness.kind))
        }
    }
}

fn build_cube(n: u8, big_n: u32, spec: &str) -> amc::Result<ramsey::HJCube> {
    if let Some(k) = spec.strip_prefix("digitsum:") {
        let k: u32 = k
            .parse()
            .map_err(|_| Error::Parse(format!("bad digitsum modulus {k:?}")))?;
        return ramsey::HJCube::new(
            n,
            big_n,
            std::sync::Arc::new(move |w: &ramsey::Word| {
                Ok(w.iter().map(|&l| l as u32).sum::<u32>() % k)
            }),
        );
    }
    Err(Error::Parse(format!("unknown cube colouring {spec:?}")))
}

fn structure_cmd(cli: &Cli, action: &StructureCmd) -> amc::Result<i32> {
    match action {
        StructureCmd::Analyze { colouring, window } => {
            let oracle = parse::parse_colouring(colouring)?;
            let w = parse::parse_window(window)?;
            if w.dim() != 1 {
                return Err(Error::InvalidParameter(
                    "structure analysis runs on 1-D integer windows".into(),
                ));
            }
            let lo = rat_to_i64(w.lower().x())?;
            let hi = rat_to_i64(w.upper().x())?;
            match analyze_z_colouring(&oracle, lo, hi) {
                Ok(amc::structure::ZAnalysis::Partition(p)) => {
                    let body = serde_json::json!({
                        "schema": "amc.appartition/1",
                        "period": p.period,
                        "density_sum": format_rat(&p.density_sum()),
                        "classes": p.classes.iter().map(|c| serde_json::json!({
                            "first": c.first,
                            "difference": c.difference,
                            "colour": c.colour,
                        })).collect::<Vec<_>>(),
                    });
                    emit(&cli.out, &(serde_json::to_string_pretty(&body).unwrap() + "\n"))?;
                    Ok(EXIT_FOUND)
                }
                Ok(amc::structure::ZAnalysis::AmWitness(witness)) => {
                    emit(&cli.out, &witness.to_json())?;
                    Ok(EXIT_FOUND)
                }
                Err(Error::WindowTooShort(msg)) => {
                    eprintln!("inconclusive: {msg}");
                    Ok(EXIT_EXHAUSTED)
                }
                Err(e) => Err(e),
            }
        }
        StructureCmd::Egyptian { k, c, enumerate } => {
            let target = parse_rat(c)?;
            let bound = egyptian_bound(*k, &target)?;
            let body = if *enumerate && target == rat(1) {
                let sols = enumerate_unit_fraction_solutions(*k)?;
                serde_json::json!({
                    "schema": "amc.egyptian/1",
                    "k": k, "c": format_rat(&target),
                    "bound": bound,
                    "solutions": sols,
                })
            } else {
                serde_json::json!({
                    "schema": "amc.egyptian/1",
                    "k": k, "c": format_rat(&target),
                    "bound": bound,
                })
            };
            emit(&cli.out, &(serde_json::to_string_pretty(&body).unwrap() + "\n"))?;
            Ok(EXIT_FOUND)
        }
    }
}

fn rat_to_i64(r: &amc::Rat) -> amc::Result<i64> {
    amc::rational::rat_to_i64(r).ok_or_else(|| {
        Error::InvalidParameter(format!("expected an integer bound, got {}", format_rat(r)))
    })
}

fn geometry_cmd(cli: &Cli, action: &GeometryCmd) -> amc::Result<i32> {
    match action {
        GeometryCmd::Place { bouquet, lambda } => {
            let b = geomio::load_bouquet(bouquet)?;
            let lam = parse_rat(lambda)?;
            let placed = place_scaled_copy(&b, &lam)?;
            let body = serde_json::json!({
                "schema": "amc.placed/1",
                "lambda": format_rat(&lam),
                "angle": placed.angle,
                "points": placed.points,
                "exact": placed.exact_points.as_ref().map(|pts| {
                    pts.iter().map(|p| p.to_strings()).collect::<Vec<_>>()
                }),
                "max_on_circle_residual": placed.max_on_circle_residual(&b),
                "max_congruence_residual": placed.max_congruence_residual(&b),
            });
            emit(&cli.out, &(serde_json::to_string_pretty(&body).unwrap() + "\n"))?;
            Ok(EXIT_FOUND)
        }
        GeometryCmd::Smiling {
            colouring,
            bouquet,
            pencil,
            density,
        } => {
            let oracle = parse::parse_colouring(colouring)?;
            let target = match (bouquet, pencil) {
                (Some(b), None) => SmilingTarget::Bouquet(geomio::load_bouquet(b)?),
                (None, Some(p)) => SmilingTarget::Pencil(geomio::load_pencil(p)?),
                _ => {
                    return Err(Error::InvalidParameter(
                        "pass exactly one of --bouquet or --pencil".into(),
                    ))
                }
            };
            let placement = amc::SimilarityMap::identity(2)?;
            match check_smiling(&oracle, &target, &placement, *density)? {
                Some(w) => {
                    let body = serde_json::json!({
                        "schema": "amc.smiling/1",
                        "colour": w.colour,
                        "origin_colour": w.origin_colour,
                        "witness_points": w
                            .witness_points
                            .iter()
                            .map(|p| p.to_strings())
                            .collect::<Vec<_>>(),
                    });
                    emit(&cli.out, &(serde_json::to_string_pretty(&body).unwrap() + "\n"))?;
                    Ok(EXIT_FOUND)
                }
                None => {
                    eprintln!("no smiling witness at probe density {density}");
                    Ok(EXIT_EXHAUSTED)
                }
            }
        }
        GeometryCmd::Rotatable {
            lattice,
            lo,
            hi,
            max_param,
        } => {
            let lat = geomio::parse_lattice(lattice)?;
            match amc::geometry::find_rotatability_witness(&lat, *lo, *hi, *max_param)? {
                Some(w) => {
                    let body = serde_json::json!({
                        "schema": "amc.rotatable/1",
                        "angle": w.rotation.angle(),
                        "params": w.rotation.params,
                        "cos": format_rat(&w.rotation.cos()),
                        "sin": format_rat(&w.rotation.sin()),
                        "scale": format_rat(&w.scale),
                    });
                    emit(&cli.out, &(serde_json::to_string_pretty(&body).unwrap() + "\n"))?;
                    Ok(EXIT_FOUND)
                }
                None => {
                    eprintln!("no rotation witness up to parameter {max_param}");
                    Ok(EXIT_EXHAUSTED)
                }
            }
        }
    }
}

fn load_graph(spec: &str) -> amc::Result<UnitDistanceGraph> {
    match spec {
        "moser" => Ok(moser_spindle()),
        "triangle" => Ok(unit_triangle()),
        path => {
            let data = std::fs::read_to_string(Path::new(path))
                .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
            UnitDistanceGraph::from_json(&data)
        }
    }
}

fn udg_cmd(cli: &Cli, action: &UdgCmd) -> amc::Result<i32> {
    match action {
        UdgCmd::Solve {
            graph,
            k,
            bichromatic_origin,
            origin,
        } => {
            let mut g = load_graph(graph)?;
            if let Some(o) = origin {
                g = g.with_origin(o)?;
            }
            if *bichromatic_origin {
                match solve_bichromatic_origin(&g, *k)? {
                    BichromaticOutcome::Coloured(oc) => {
                        let body = serde_json::json!({
                            "schema": "amc.udgcolouring/1",
                            "k": k,
                            "origin": g.origin().map(|v| g.id(v)),
                            "origin_pair": [oc.origin_pair.0, oc.origin_pair.1],
                            "colours": g
                                .ids()
                                .iter()
                                .enumerate()
                                .map(|(i, id)| {
                                    if Some(i) == g.origin() {
                                        serde_json::json!({"id": id, "pair": [oc.origin_pair.0, oc.origin_pair.1]})
                                    } else {
                                        serde_json::json!({"id": id, "colour": oc.colours[i]})
                                    }
                                })
                                .collect::<Vec<_>>(),
                        });
                        emit(&cli.out, &(serde_json::to_string_pretty(&body).unwrap() + "\n"))?;
                        Ok(EXIT_FOUND)
                    }
                    BichromaticOutcome::NoneExists(log) => {
                        let body = serde_json::json!({
                            "schema": "amc.udgcolouring/1",
                            "k": k,
                            "origin": g.origin().map(|v| g.id(v)),
                            "outcome": "none",
                            "log": log,
                        });
                        emit(&cli.out, &(serde_json::to_string_pretty(&body).unwrap() + "\n"))?;
                        Ok(EXIT_EXHAUSTED)
                    }
                }
            } else {
                match solve_proper(&g, *k)? {
                    SolveOutcome::Coloured(colours) => {
                        let body = serde_json::json!({
                            "schema": "amc.udgcolouring/1",
                            "k": k,
                            "colours": g
                                .ids()
                                .iter()
                                .enumerate()
                                .map(|(i, id)| serde_json::json!({"id": id, "colour": colours[i]}))
                                .collect::<Vec<_>>(),
                        });
                        emit(&cli.out, &(serde_json::to_string_pretty(&body).unwrap() + "\n"))?;
                        Ok(EXIT_FOUND)
                    }
                    SolveOutcome::NoneExists(log) => {
                        let body = serde_json::json!({
                            "schema": "amc.udgcolouring/1",
                            "k": k,
                            "outcome": "none",
                            "log": log,
                        });
                        emit(&cli.out, &(serde_json::to_string_pretty(&body).unwrap() + "\n"))?;
                        Ok(EXIT_EXHAUSTED)
                    }
                }
            }
        }
        UdgCmd::Validate { graph } => {
            let g = load_graph(graph)?;
            let report = g.validate_unit_distances();
            let body = serde_json::to_string_pretty(&report).unwrap() + "\n";
            emit(&cli.out, &body)?;
            Ok(if report.ok() { EXIT_FOUND } else { EXIT_EXHAUSTED })
        }
    }
}

fn verify_cmd(witness_path: &Path, colouring: Option<&str>) -> amc::Result<i32> {
    let data = std::fs::read_to_string(witness_path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", witness_path.display())))?;
    let witness = amc::Witness::from_json(&data)?;
    let spec = colouring.map(str::to_owned).unwrap_or_else(|| witness.colouring.clone());
    let oracle = parse::parse_colouring(&spec)?;
    witness.revalidate(&oracle)?;
    println!("witness verifies against {spec}");
    Ok(EXIT_FOUND)
}

fn replay_cmd(path: &Path) -> amc::Result<i32> {
    let data = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let manifest: Manifest =
        serde_json::from_str(&data).map_err(|e| Error::Parse(format!("bad manifest: {e}")))?;
    Ok(run(manifest.argv))
}
