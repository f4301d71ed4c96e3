//! `posgeom` — evaluate Wachspress coordinates, canonical rational
//! functions, polar duals, adjoints and the conic form from the command
//! line, plus a seeded invariant checker.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 failed checks.

pub mod check;
pub mod fmt;
pub mod svg;

use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use posgeom::{
    conic_canonical, extract_adjoint, polytope_canonical, wachspress_canonical,
    wachspress_classical, wachspress_dual, BaryWeights, ConicQ, ConvexPolygon, Route,
};

use fmt::g12;

#[derive(Parser)]
#[command(
    name = "posgeom",
    version,
    about = "Canonical rational functions and Wachspress coordinates over convex polygons"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Barycentric weights at query points (stdin when --point is absent)
    Coords {
        /// Polygon file (JSON with a "vertices" list of [x, y] pairs)
        polygon: PathBuf,
        /// Query point as X,Y
        #[arg(long, value_parser = parse_point)]
        point: Option<[f64; 2]>,
        /// Weight construction to use
        #[arg(long, value_enum, default_value_t = RouteArg::Classical)]
        route: RouteArg,
    },
    /// Canonical rational function sampled on a grid, as CSV (x,y,value)
    Canonical {
        polygon: PathBuf,
        /// Grid resolution as NX,NY cells
        #[arg(long, value_parser = parse_grid)]
        grid: (usize, usize),
        /// Bounding box XMIN,XMAX,YMIN,YMAX (defaults to the polygon's box)
        #[arg(long, value_parser = parse_bbox)]
        bbox: Option<[f64; 4]>,
        /// Fraction of the diameter to exclude near the boundary
        #[arg(long, default_value_t = 0.0)]
        margin: f64,
        /// Also write a log-scale heatmap SVG to this path
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Polar dual polygon about an interior point, as JSON
    Dual {
        polygon: PathBuf,
        #[arg(long, value_parser = parse_point)]
        point: [f64; 2],
    },
    /// Adjoint polynomial coefficients and fit residual
    Adjoint { polygon: PathBuf },
    /// Run the invariant suite; exit 0 iff every property passes
    Check {
        polygon: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random interior query points
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Evaluate the conic canonical function at a point
    Conic {
        /// Upper-triangular entries q00,q01,q02,q11,q12,q22 of the symmetric matrix
        #[arg(long, value_parser = parse_q)]
        q: [f64; 6],
        #[arg(long, value_parser = parse_point)]
        point: [f64; 2],
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum RouteArg {
    Classical,
    Canonical,
    Dual,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Classical => Route::Classical,
            RouteArg::Canonical => Route::Canonical,
            RouteArg::Dual => Route::Dual,
        }
    }
}

/// Polygon input document: a "vertices" list of [x, y] pairs plus an
/// optional "name".
#[derive(Deserialize)]
struct PolygonFile {
    #[serde(default)]
    name: Option<String>,
    vertices: Vec<[f64; 2]>,
}

fn parse_floats<const N: usize>(s: &str, what: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated numbers for {what}, got {}", parts.len()));
    }
    let mut out = [0.0; N];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p
            .parse::<f64>()
            .map_err(|_| format!("invalid number {p:?} in {what}"))?;
        if !slot.is_finite() {
            return Err(format!("non-finite number in {what}"));
        }
    }
    Ok(out)
}

fn parse_point(s: &str) -> Result<[f64; 2], String> {
    // accept "X,Y" and whitespace-separated "X Y"
    let normalized = s.trim().replace(char::is_whitespace, ",");
    let squeezed: String = {
        let mut prev_comma = false;
        normalized
            .chars()
            .filter(|&c| {
                let keep = !(c == ',' && prev_comma);
                prev_comma = c == ',';
                keep
            })
            .collect()
    };
    parse_floats::<2>(&squeezed, "point")
}

fn parse_bbox(s: &str) -> Result<[f64; 4], String> {
    let b = parse_floats::<4>(s, "bbox")?;
    if b[0] >= b[1] || b[2] >= b[3] {
        return Err("bbox must satisfy xmin < xmax and ymin < ymax".to_string());
    }
    Ok(b)
}

fn parse_q(s: &str) -> Result<[f64; 6], String> {
    parse_floats::<6>(s, "--q")
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err("expected NX,NY".to_string());
    }
    let nx = parts[0].parse::<usize>().map_err(|_| "invalid grid size".to_string())?;
    let ny = parts[1].parse::<usize>().map_err(|_| "invalid grid size".to_string())?;
    if nx < 2 || ny < 2 {
        return Err("grid resolution must be at least 2,2".to_string());
    }
    Ok((nx, ny))
}

fn load_polygon(
    path: &Path,
    stderr: &mut dyn Write,
) -> Result<(ConvexPolygon, Option<String>), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let file: PolygonFile =
        serde_json::from_str(&text).map_err(|e| format!("cannot parse {}: {e}", path.display()))?;
    let polygon = ConvexPolygon::from_vertices(&file.vertices)
        .map_err(|e| format!("invalid polygon in {}: {e}", path.display()))?;
    if polygon.input_reversed() {
        let _ = writeln!(
            stderr,
            "note: input polygon was clockwise; vertices were reversed to counterclockwise"
        );
    }
    Ok((polygon, file.name))
}

fn weights_line(w: &BaryWeights) -> String {
    w.values().iter().map(|v| g12(*v)).collect::<Vec<_>>().join(" ")
}

/// Entry point shared by the binary and the tests; returns the exit code.
pub fn run(
    args: &[String],
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let argv = std::iter::once("posgeom".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    1
                }
            };
        }
    };
    match dispatch(cli.cmd, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn dispatch(
    cmd: Cmd,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, String> {
    match cmd {
        Cmd::Coords { polygon, point, route } => {
            let (poly, _) = load_polygon(&polygon, stderr)?;
            let route = Route::from(route);
            let eval = |x: [f64; 2]| -> Result<String, String> {
                let w = match route {
                    Route::Classical => wachspress_classical(&poly, x),
                    Route::Canonical => wachspress_canonical(&poly, x),
                    Route::Dual => wachspress_dual(&poly, x),
                }
                .map_err(|e| format!("at point {},{}: {e}", g12(x[0]), g12(x[1])))?;
                Ok(weights_line(&w))
            };
            match point {
                Some(x) => {
                    let line = eval(x)?;
                    writeln!(stdout, "{line}").map_err(|e| e.to_string())?;
                }
                None => {
                    for raw in stdin.lines() {
                        let raw = raw.map_err(|e| e.to_string())?;
                        let trimmed = raw.trim();
                        if trimmed.is_empty() || trimmed.starts_with('#') {
                            continue;
                        }
                        let x = parse_point(trimmed)?;
                        let line = eval(x)?;
                        writeln!(stdout, "{line}").map_err(|e| e.to_string())?;
                    }
                }
            }
            Ok(0)
        }

        Cmd::Canonical { polygon, grid, bbox, margin, svg } => {
            let (poly, _) = load_polygon(&polygon, stderr)?;
            if !(0.0..0.5).contains(&margin) {
                return Err("margin must lie in [0, 0.5)".to_string());
            }
            let (nx, ny) = grid;
            let (xmin, xmax, ymin, ymax) = match bbox {
                Some(b) => (b[0], b[1], b[2], b[3]),
                None => poly.bbox(),
            };
            let cutoff = margin * poly.diameter();
            let dx = (xmax - xmin) / nx as f64;
            let dy = (ymax - ymin) / ny as f64;

            // fans are built lazily per stable base; individual fan terms are
            // singular along their diagonals, so the base follows the point
            let mut fans: Vec<Option<posgeom::CanonicalFn>> = vec![None; poly.len()];
            let mut value_at = |x: [f64; 2]| -> f64 {
                let b = poly.stable_fan_base(x);
                let fan = fans[b]
                    .get_or_insert_with(|| polytope_canonical(&poly, b).expect("valid base"));
                fan.eval_xy(x[0], x[1])
            };

            let mut cells = Vec::new();
            writeln!(stdout, "x,y,value").map_err(|e| e.to_string())?;
            for iy in 0..ny {
                for ix in 0..nx {
                    let x = xmin + (ix as f64 + 0.5) * dx;
                    let y = ymin + (iy as f64 + 0.5) * dy;
                    if !poly.is_strictly_interior([x, y])
                        || poly.min_facet_value([x, y]) <= cutoff
                    {
                        continue;
                    }
                    let v = value_at([x, y]);
                    writeln!(stdout, "{},{},{}", g12(x), g12(y), g12(v))
                        .map_err(|e| e.to_string())?;
                    cells.push(svg::HeatmapCell { ix, iy, value: v });
                }
            }
            if let Some(path) = svg {
                let doc =
                    svg::render((xmin, xmax, ymin, ymax), nx, ny, &cells, poly.vertices());
                std::fs::write(&path, doc)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            Ok(0)
        }

        Cmd::Dual { polygon, point } => {
            let (poly, name) = load_polygon(&polygon, stderr)?;
            let dual = poly
                .polar_dual(point)
                .map_err(|e| format!("cannot dualize: {e}"))?;
            let verts: Vec<String> = dual
                .vertices()
                .iter()
                .map(|v| format!("[{},{}]", g12(v[0]), g12(v[1])))
                .collect();
            let label = match name {
                Some(n) => format!("dual of {n}"),
                None => "dual".to_string(),
            };
            writeln!(
                stdout,
                "{{\"name\":\"{label}\",\"vertices\":[{}],\"base_point\":[{},{}]}}",
                verts.join(","),
                g12(point[0]),
                g12(point[1])
            )
            .map_err(|e| e.to_string())?;
            Ok(0)
        }

        Cmd::Adjoint { polygon } => {
            let (poly, _) = load_polygon(&polygon, stderr)?;
            let adj = extract_adjoint(&poly).map_err(|e| e.to_string())?;
            writeln!(stdout, "degree {}", adj.degree()).map_err(|e| e.to_string())?;
            for ((i, j), c) in adj.monomials().iter().zip(adj.coeffs()) {
                writeln!(stdout, "c[{}] {}", monomial_label(*i, *j), g12(*c))
                    .map_err(|e| e.to_string())?;
            }
            writeln!(stdout, "residual {}", g12(adj.residual())).map_err(|e| e.to_string())?;
            Ok(0)
        }

        Cmd::Check { polygon, seed, trials } => {
            let (poly, _) = load_polygon(&polygon, stderr)?;
            if trials == 0 {
                return Err("--trials must be positive".to_string());
            }
            let results = check::run_suite(&poly, seed, trials);
            let mut all_ok = true;
            for r in &results {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                all_ok &= r.passed();
                writeln!(
                    stdout,
                    "{status} {} (max err {}, tol {})",
                    r.name,
                    g12(r.max_err),
                    g12(r.tol)
                )
                .map_err(|e| e.to_string())?;
            }
            Ok(if all_ok { 0 } else { 2 })
        }

        Cmd::Conic { q, point } => {
            let conic = ConicQ::from_upper(q).map_err(|e| e.to_string())?;
            let value = conic_canonical(&conic).eval_xy(point[0], point[1]);
            if !value.is_finite() {
                return Err("evaluation point lies on the conic (pole)".to_string());
            }
            writeln!(stdout, "{}", g12(value)).map_err(|e| e.to_string())?;
            Ok(0)
        }
    }
}

fn monomial_label(i: usize, j: usize) -> String {
    let part = |sym: &str, p: usize| match p {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{p}"),
    };
    let (xs, ys) = (part("x", i), part("y", j));
    match (xs.is_empty(), ys.is_empty()) {
        (true, true) => "1".to_string(),
        (false, true) => xs,
        (true, false) => ys,
        (false, false) => format!("{xs}*{ys}"),
    }
}
