use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use planar_profile::cutset::{find_cutset_with, verify_cutset, CutsetConfig, CutsetResult};
use planar_profile::experiments::{
    measure_instance, nash_williams_with, render_svg, srw_displacement, standard_radii, Overlays,
};
use planar_profile::generators::{generate, Family, FamilySpec};
use planar_profile::io::{graph_to_string, read_graph};
use planar_profile::metrics::{
    brute_profile, corollary_check, doubling_constant, growth_exponent, min_vertex_cut, CenterSpec,
};
use planar_profile::{Error, PlanarEmbeddedGraph, VertexId};

const FORMATS: &str = "\
Output formats (see FORMATS.md for the full field list):
  graph    {\"vertices\":[0..n], \"rotations\":{\"id\":[ccw neighbors]}, \"outer_face_dart\":[u,w], \"coords\"?:{\"id\":[x,y]}}
  cutset   {case, n, v, omega_size, boundary_size, bound_used, ratio, curve_is_simple, paths, path_roles, c_hat, omega, boundary, diagnostics}
  verify   {ball_inside, boundary_consistent, boundary_within_6n, omega_connected, separation, horizon_disjoint, boundary_on_curve, size_bound, ratio, curve_is_simple, failures}
  CSV      header row, one row per sample, floats with 6 decimals
Exit codes: 0 success, 1 verification failure, 2 input or precondition error.";

#[derive(Parser)]
#[command(name = "planar-profile", version, about = "Small-boundary domains around balls in plane graphs", after_help = FORMATS)]
struct Cli {
    /// Host graph file (JSON).
    #[arg(long, global = true)]
    graph: Option<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Center vertex id, or `auto` for the vertex farthest from the horizon.
    #[arg(long, global = true, default_value = "auto")]
    center: String,
    #[arg(long, global = true)]
    radius: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Grid,
    Triangular,
    Hexagonal,
    Spider,
    Tree,
    Substitution,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a host graph.
    #[command(after_help = "Writes the graph JSON. With --manifest, appends one JSON line \
{file, spec, vertices, edges, center, c_hat, d_hat, excluded} to the manifest.")]
    Generate {
        #[arg(long, value_enum)]
        family: FamilyName,
        #[arg(long, default_value_t = 0)]
        width: u32,
        #[arg(long, default_value_t = 0)]
        height: u32,
        #[arg(long, default_value_t = 4)]
        arms: u32,
        #[arg(long, default_value_t = 0)]
        length: u32,
        #[arg(long, default_value_t = 2)]
        branching: u32,
        #[arg(long, default_value_t = 0)]
        depth: u32,
        #[arg(long, default_value_t = 0)]
        rule: u32,
        #[arg(long, default_value_t = 1)]
        iterations: u32,
        /// Radius of the triangular patch the substitution starts from.
        #[arg(long, default_value_t = 3)]
        base: u32,
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Mark the manifest entry excluded above this measured doubling constant.
        #[arg(long)]
        max_c_hat: Option<f64>,
    },
    /// Build a small-boundary domain around --center at --radius.
    #[command(after_help = "JSON: the cutset report. CSV: one row \
case,n,v,omega_size,boundary_size,bound_used,ratio,curve_is_simple,c_hat.")]
    Cutset {
        /// Doubling constant for the size allowance; estimated locally when absent.
        #[arg(long)]
        c_hat: Option<f64>,
    },
    /// Recheck a cutset report against the host.
    #[command(after_help = "Exits 1 when any clause fails. CSV: one row clause,pass.")]
    Verify {
        /// Cutset report produced by `cutset`.
        #[arg(long)]
        result: PathBuf,
    },
    /// Estimate the doubling constant.
    #[command(after_help = "CSV columns: n,a,b,v_a_2n,v_b_n,ratio (worst pair per radius).")]
    Doubling {
        /// Radii, comma separated; defaults to 1..=--radius.
        #[arg(long, value_delimiter = ',')]
        radii: Vec<u32>,
        /// Center set: `all`, `sample:<count>` (seeded by --seed) or `list:<id>,<id>,...`.
        #[arg(long, default_value = "all")]
        centers: String,
    },
    /// Fit the volume growth exponent at --center.
    #[command(after_help = "CSV columns: r,volume. JSON: {exponent, max_residual, volumes}.")]
    Growth {
        #[arg(long, value_delimiter = ',', required = true)]
        radii: Vec<u32>,
    },
    /// Exact profile by enumeration, or upper bounds from cutsets.
    #[command(after_help = "CSV columns: n,value,phi_n,radius,omega_size,alpha_ratio (empty when not applicable).")]
    Profile {
        /// Enumerate all subsets (hosts of at most 18 vertices) up to this size.
        #[arg(long, conflicts_with = "n_values")]
        exact: Option<u64>,
        /// Volumes n for the constructed upper bounds at --center.
        #[arg(long, value_delimiter = ',')]
        n_values: Vec<u64>,
    },
    /// Minimum vertex cut between B(center, radius) and distance outer + 1.
    #[command(after_help = "JSON: {cut, size, flow, feasible}. CSV: one row size,flow,feasible.")]
    Mincut {
        #[arg(long)]
        outer: u32,
    },
    /// Simple random walk displacement from --center.
    #[command(after_help = "CSV columns: t,mean_displacement. JSON: the walk report.")]
    Walk {
        #[arg(long, default_value_t = 10_000)]
        t_max: u64,
        #[arg(long, default_value_t = 2000)]
        trials: u64,
    },
    /// Nested disjoint cutsets and the sum of their reciprocal sizes.
    #[command(after_help = "Exits 1 when the cutsets overlap or fail to separate. \
CSV columns: k,radius,size,case,separates.")]
    Nashwilliams {
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        /// Explicit radius schedule instead of n_1 = 1, n_(k+1) = 6 n_k + 1.
        #[arg(long, value_delimiter = ',')]
        radii: Vec<u32>,
    },
    /// Draw the host as SVG, optionally with a cutset overlay.
    #[command(after_help = "Layers: edges, vertices, omega, ball, contour, curve, boundary.")]
    Render {
        /// Cutset report to overlay; otherwise --radius builds one.
        #[arg(long)]
        result: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_verification() { 1 } else { 2 },
            msg: e.to_string(),
        }
    }
}

fn input_error(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

type CliResult<T> = Result<T, Failure>;

fn load_graph(path: &Option<PathBuf>) -> CliResult<PlanarEmbeddedGraph> {
    let path = path.as_ref().ok_or_else(|| input_error("--graph is required"))?;
    let file = fs::File::open(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    Ok(read_graph(std::io::BufReader::new(file))?)
}

fn parse_center(g: &PlanarEmbeddedGraph, s: &str) -> CliResult<VertexId> {
    if s == "auto" {
        return Ok(g.deepest_vertex());
    }
    let id: u32 = s.parse().map_err(|_| input_error(format!("bad --center {s:?}")))?;
    g.check_vertex(VertexId(id))?;
    Ok(VertexId(id))
}

fn need_radius(r: Option<u32>) -> CliResult<u32> {
    r.ok_or_else(|| input_error("--radius is required"))
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| input_error(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| input_error(e.to_string()))
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn csv(header: &str, rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut s = format!("{header}\n");
    for row in rows {
        s.push_str(&row.join(","));
        s.push('\n');
    }
    s
}

fn f6(x: f64) -> String {
    format!("{x:.6}")
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn read_result(path: &Path) -> CliResult<CutsetResult> {
    let text = fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> CliResult<()> {
    let Cli {
        graph,
        out,
        format,
        seed,
        center,
        radius,
        command,
    } = cli;
    match command {
        Command::Generate {
            family,
            width,
            height,
            arms,
            length,
            branching,
            depth,
            rule,
            iterations,
            base,
            manifest,
            max_c_hat,
        } => {
            let family = match family {
                FamilyName::Grid => Family::Grid { width, height },
                FamilyName::Triangular => Family::Triangular {
                    radius: need_radius(radius)?,
                },
                FamilyName::Hexagonal => Family::Hexagonal { width, height },
                FamilyName::Spider => Family::Spider { arms, length },
                FamilyName::Tree => Family::Tree { branching, depth },
                FamilyName::Substitution => Family::Substitution {
                    rule,
                    iterations,
                    base,
                },
            };
            let spec = FamilySpec { family, seed };
            let g = generate(&spec)?;
            emit(&out, &graph_to_string(&g))?;
            if let Some(path) = manifest {
                let file = out.as_ref().map(|p| p.display().to_string()).unwrap_or_else(|| "-".into());
                let entry = measure_instance(&g, &file, &spec, max_c_hat);
                let mut line = serde_json::to_string(&entry).expect("entry serializes");
                line.push('\n');
                fs::OpenOptions::new()
                    .create(true)
                    .append(true)
                    .open(&path)
                    .and_then(|mut f| f.write_all(line.as_bytes()))
                    .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
            }
        }
        Command::Cutset { c_hat } => {
            let g = load_graph(&graph)?;
            let v = parse_center(&g, &center)?;
            let config = CutsetConfig {
                c_hat,
                ..CutsetConfig::default()
            };
            let r = find_cutset_with(&g, v, need_radius(radius)?, &config)?;
            let text = match format {
                Format::Json => json(&r),
                Format::Csv => csv(
                    "case,n,v,omega_size,boundary_size,bound_used,ratio,curve_is_simple,c_hat",
                    [vec![
                        serde_json::to_value(r.case).unwrap().as_str().unwrap().to_string(),
                        r.n.to_string(),
                        r.v.to_string(),
                        r.omega_size.to_string(),
                        r.boundary_size.to_string(),
                        r.bound_used.to_string(),
                        f6(r.ratio),
                        r.curve_is_simple.to_string(),
                        f6(r.c_hat),
                    ]],
                ),
            };
            emit(&out, &text)?;
        }
        Command::Verify { result } => {
            let g = load_graph(&graph)?;
            let r = read_result(&result)?;
            let v = if center == "auto" { r.v } else { parse_center(&g, &center)? };
            let n = radius.unwrap_or(r.n);
            let report = verify_cutset(&g, v, n, &r);
            let text = match format {
                Format::Json => json(&report),
                Format::Csv => {
                    let clauses = [
                        ("ball_inside", report.ball_inside),
                        ("boundary_consistent", report.boundary_consistent),
                        ("boundary_within_6n", report.boundary_within_6n),
                        ("omega_connected", report.omega_connected),
                        ("separation", report.separation),
                        ("horizon_disjoint", report.horizon_disjoint),
                        ("boundary_on_curve", report.boundary_on_curve),
                        ("size_bound", report.size_bound),
                    ];
                    csv(
                        "clause,pass",
                        clauses.iter().map(|(c, p)| vec![c.to_string(), p.to_string()]),
                    )
                }
            };
            emit(&out, &text)?;
            if !report.all_pass() {
                return Err(Failure {
                    code: 1,
                    msg: format!("verification failed: {}", report.failures.join("; ")),
                });
            }
        }
        Command::Doubling { radii, centers } => {
            let g = load_graph(&graph)?;
            let radii = if radii.is_empty() {
                (1..=need_radius(radius)?).collect()
            } else {
                radii
            };
            let spec = if centers == "all" {
                CenterSpec::All
            } else if let Some(k) = centers.strip_prefix("sample:") {
                let count = k.parse().map_err(|_| input_error(format!("bad --centers {centers:?}")))?;
                CenterSpec::Sample { count, seed }
            } else if let Some(list) = centers.strip_prefix("list:") {
                let ids = list
                    .split(',')
                    .map(|s| parse_center(&g, s.trim()))
                    .collect::<CliResult<Vec<_>>>()?;
                CenterSpec::List(ids)
            } else {
                return Err(input_error(format!("bad --centers {centers:?}")));
            };
            let est = doubling_constant(&g, &spec, &radii)?;
            let text = match format {
                Format::Json => json(&est),
                Format::Csv => csv(
                    "n,a,b,v_a_2n,v_b_n,ratio",
                    est.samples.iter().map(|s| {
                        vec![
                            s.n.to_string(),
                            s.a.to_string(),
                            s.b.to_string(),
                            s.big.to_string(),
                            s.small.to_string(),
                            f6(s.ratio()),
                        ]
                    }),
                ),
            };
            emit(&out, &text)?;
        }
        Command::Growth { radii } => {
            let g = load_graph(&graph)?;
            let v = parse_center(&g, &center)?;
            let fit = growth_exponent(&g, v, &radii)?;
            let text = match format {
                Format::Json => json(&fit),
                Format::Csv => csv(
                    "r,volume",
                    fit.volumes.iter().map(|(r, n)| vec![r.to_string(), n.to_string()]),
                ),
            };
            emit(&out, &text)?;
        }
        Command::Profile { exact, n_values } => {
            let g = load_graph(&graph)?;
            let table = match exact {
                Some(n_max) => brute_profile(&g, n_max)?,
                None => {
                    if n_values.is_empty() {
                        return Err(input_error("profile needs --exact or --n-values"));
                    }
                    corollary_check(&g, parse_center(&g, &center)?, &n_values)?
                }
            };
            let text = match format {
                Format::Json => json(&table),
                Format::Csv => csv(
                    "n,value,phi_n,radius,omega_size,alpha_ratio",
                    table.entries.iter().map(|e| {
                        vec![
                            e.n.to_string(),
                            e.value.to_string(),
                            opt(e.phi_n),
                            opt(e.radius),
                            opt(e.omega_size),
                            e.alpha_ratio.map(f6).unwrap_or_default(),
                        ]
                    }),
                ),
            };
            emit(&out, &text)?;
        }
        Command::Mincut { outer } => {
            let g = load_graph(&graph)?;
            let v = parse_center(&g, &center)?;
            let cut = min_vertex_cut(&g, v, need_radius(radius)?, outer)?;
            let text = match format {
                Format::Json => json(&cut),
                Format::Csv => csv(
                    "size,flow,feasible",
                    [vec![cut.size.to_string(), cut.flow.to_string(), cut.feasible.to_string()]],
                ),
            };
            emit(&out, &text)?;
            if !cut.feasible {
                return Err(Failure {
                    code: 1,
                    msg: "cut does not separate".into(),
                });
            }
        }
        Command::Walk { t_max, trials } => {
            let g = load_graph(&graph)?;
            let v = parse_center(&g, &center)?;
            let report = srw_displacement(&g, v, t_max, trials, seed)?;
            let text = match format {
                Format::Json => json(&report),
                Format::Csv => csv(
                    "t,mean_displacement",
                    report
                        .times
                        .iter()
                        .zip(&report.mean_displacement)
                        .map(|(t, m)| vec![t.to_string(), f6(*m)]),
                ),
            };
            emit(&out, &text)?;
        }
        Command::Nashwilliams { k_max, radii } => {
            let g = load_graph(&graph)?;
            let v = parse_center(&g, &center)?;
            let radii = if radii.is_empty() { standard_radii(k_max) } else { radii };
            let report = nash_williams_with(&g, v, &radii, &CutsetConfig::default())?;
            let text = match format {
                Format::Json => json(&report),
                Format::Csv => csv(
                    "k,radius,size,case,separates",
                    report.cutsets.iter().enumerate().map(|(k, c)| {
                        vec![
                            (k + 1).to_string(),
                            c.radius.to_string(),
                            c.size.to_string(),
                            serde_json::to_value(c.case).unwrap().as_str().unwrap().to_string(),
                            c.separates.to_string(),
                        ]
                    }),
                ),
            };
            emit(&out, &text)?;
            if !(report.disjointness_verified && report.separation_verified) {
                return Err(Failure {
                    code: 1,
                    msg: "cutsets overlap or fail to separate".into(),
                });
            }
        }
        Command::Render { result } => {
            let g = load_graph(&graph)?;
            let overlays = match (result, radius) {
                (Some(path), _) => Overlays::from_cutset(&g, &read_result(&path)?)?,
                (None, Some(n)) => {
                    let v = parse_center(&g, &center)?;
                    let r = find_cutset_with(&g, v, n, &CutsetConfig::default())?;
                    Overlays::from_cutset(&g, &r)?
                }
                (None, None) => Overlays::default(),
            };
            emit(&out, &render_svg(&g, &overlays)?)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
