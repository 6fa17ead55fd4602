//! Command-line surface for the Λ-function library.
//!
//! Subcommands: `lambda`, `scan`, `verify`, `spectrum`, `bounds`.
//! Exit codes: 0 success, 1 failed verification, 2 argument/parse failure,
//! 3 mathematical domain error, 4 unwritable output path.

mod curvespec;
mod dump;
mod scan;
mod verify;

use cauchy_szego_core::geometry::Curve;
use cauchy_szego_core::kernels::DomainSide;
use cauchy_szego_core::lambda::{cauchy_norm_bounds, default_grid, lambda};
use cauchy_szego_core::operator::{operator_norm, spectrum_a, szego_system};
use curvespec::{parse_curve, parse_point, CurveRequest};
use std::collections::BTreeMap;
use std::process::ExitCode;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_MATH: u8 = 3;
const EXIT_IO: u8 = 4;

const USAGE: &str = "usage: cauchy-szego <command> [flags]

commands:
  lambda    --curve <spec> --z <a+bi|inf> [--nodes N]
  scan      --curve <spec> (--box x0,x1,y0,y1 --res NX,NY | --ray r=R,n=N
            | --rscan r0,r1,N)  [--out PATH] [--format csv|json] [--nodes N]
  verify    [--level quick|full] [--out PATH]
  spectrum  --curve <spec> [--count K] [--nodes N] [--dump PATH]
  bounds    --curve <spec> [--nodes N]

curve specifications (case-sensitive):
  circle:cx=0,cy=0,r=1
  ellipse:r=2
  wedge:theta=0.7853981634
  mobius(a,b,c,d)*<curve>     complex coefficients, e.g. mobius(1,0,0.1i,1)*ellipse:r=2
";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(failure) => failure.emit(),
    }
}

enum Failure {
    Parse(String),
    Math(cauchy_szego_core::Error),
    Io(String),
}

impl Failure {
    fn emit(&self) -> ExitCode {
        match self {
            Failure::Parse(msg) => {
                eprintln!("error: {msg}");
                eprintln!("{USAGE}");
                ExitCode::from(EXIT_PARSE)
            }
            Failure::Math(err) => {
                eprintln!("error: {err}");
                ExitCode::from(EXIT_MATH)
            }
            Failure::Io(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(EXIT_IO)
            }
        }
    }
}

impl From<cauchy_szego_core::Error> for Failure {
    fn from(e: cauchy_szego_core::Error) -> Self {
        Failure::Math(e)
    }
}

/// Flag parser: `--key value` pairs after the subcommand.
struct Flags {
    values: BTreeMap<String, String>,
}

impl Flags {
    fn parse(args: &[String]) -> Result<Self, Failure> {
        let mut values = BTreeMap::new();
        let mut it = args.iter();
        while let Some(arg) = it.next() {
            let key = arg
                .strip_prefix("--")
                .ok_or_else(|| Failure::Parse(format!("unexpected argument `{arg}`")))?;
            let value = it
                .next()
                .ok_or_else(|| Failure::Parse(format!("flag --{key} needs a value")))?;
            values.insert(key.to_string(), value.clone());
        }
        Ok(Self { values })
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(|s| s.as_str())
    }

    fn require(&self, key: &str) -> Result<&str, Failure> {
        self.get(key)
            .ok_or_else(|| Failure::Parse(format!("missing required flag --{key}")))
    }

    fn nodes(&self) -> Result<usize, Failure> {
        match self.get("nodes") {
            None => Ok(512),
            Some(v) => v
                .parse::<usize>()
                .map_err(|_| Failure::Parse(format!("--nodes expects an integer, got `{v}`"))),
        }
    }
}

fn run(args: &[String]) -> Result<ExitCode, Failure> {
    let Some(command) = args.first() else {
        return Err(Failure::Parse("missing command".into()));
    };
    let flags = Flags::parse(&args[1..])?;
    match command.as_str() {
        "lambda" => cmd_lambda(&flags),
        "scan" => cmd_scan(&flags),
        "verify" => cmd_verify(&flags),
        "spectrum" => cmd_spectrum(&flags),
        "bounds" => cmd_bounds(&flags),
        other => Err(Failure::Parse(format!("unknown command `{other}`"))),
    }
}

fn load_curve(flags: &Flags) -> Result<(CurveRequest, Curve), Failure> {
    let spec = flags.require("curve")?;
    let request = parse_curve(spec).map_err(Failure::Parse)?;
    let curve = request.build(flags.nodes()?)?;
    Ok((request, curve))
}

fn write_output(path: Option<&str>, content: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| Failure::Io(format!("cannot write `{p}`: {e}"))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_lambda(flags: &Flags) -> Result<ExitCode, Failure> {
    let (_, curve) = load_curve(flags)?;
    let z = parse_point(flags.require("z")?).map_err(Failure::Parse)?;
    let lv = lambda(&curve, z, None)?;
    println!("value = {:.16e}", lv.value);
    println!("regime = {}", lv.regime);
    println!("accuracy = {:.3e}", lv.accuracy);
    Ok(ExitCode::SUCCESS)
}

fn cmd_scan(flags: &Flags) -> Result<ExitCode, Failure> {
    let (_, curve) = load_curve(flags)?;
    let format = match flags.get("format") {
        None | Some("csv") => scan::Format::Csv,
        Some("json") => scan::Format::Json,
        Some(other) => {
            return Err(Failure::Parse(format!(
                "--format expects csv or json, got `{other}`"
            )))
        }
    };
    let region = if let Some(spec) = flags.get("box") {
        let parts: Vec<&str> = spec.split(',').collect();
        if parts.len() != 4 {
            return Err(Failure::Parse("--box expects x0,x1,y0,y1".into()));
        }
        let mut vals = [0.0; 4];
        for (slot, part) in vals.iter_mut().zip(&parts) {
            *slot = part
                .parse()
                .map_err(|_| Failure::Parse(format!("bad box coordinate `{part}`")))?;
        }
        let res = flags.require("res")?;
        let (nx, ny) = res
            .split_once(',')
            .ok_or_else(|| Failure::Parse("--res expects NX,NY".into()))?;
        let nx: usize = nx
            .parse()
            .map_err(|_| Failure::Parse(format!("bad resolution `{nx}`")))?;
        let ny: usize = ny
            .parse()
            .map_err(|_| Failure::Parse(format!("bad resolution `{ny}`")))?;
        if nx == 0 || ny == 0 || nx > scan::MAX_RESOLUTION || ny > scan::MAX_RESOLUTION {
            return Err(Failure::Parse(format!(
                "resolution must lie in 1..={} per axis",
                scan::MAX_RESOLUTION
            )));
        }
        scan::Region::Box(scan::BoxRegion {
            x0: vals[0],
            x1: vals[1],
            y0: vals[2],
            y1: vals[3],
            nx,
            ny,
        })
    } else if let Some(spec) = flags.get("ray") {
        let mut r = 1.0;
        let mut samples = 500usize;
        for kv in spec.split(',') {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Failure::Parse(format!("bad ray parameter `{kv}`")))?;
            match k {
                "r" => {
                    r = v
                        .parse()
                        .map_err(|_| Failure::Parse(format!("bad ray radius `{v}`")))?
                }
                "n" => {
                    samples = v
                        .parse()
                        .map_err(|_| Failure::Parse(format!("bad ray sample count `{v}`")))?
                }
                other => return Err(Failure::Parse(format!("unknown ray parameter `{other}`"))),
            }
        }
        if samples == 0 || samples > 100_000 {
            return Err(Failure::Parse("ray sample count must lie in 1..=100000".into()));
        }
        scan::Region::Ray(scan::RayRegion { r, samples })
    } else if let Some(spec) = flags.get("rscan") {
        let parts: Vec<&str> = spec.split(',').collect();
        if parts.len() != 3 {
            return Err(Failure::Parse("--rscan expects r0,r1,N".into()));
        }
        let r0: f64 = parts[0]
            .parse()
            .map_err(|_| Failure::Parse(format!("bad sweep start `{}`", parts[0])))?;
        let r1: f64 = parts[1]
            .parse()
            .map_err(|_| Failure::Parse(format!("bad sweep end `{}`", parts[1])))?;
        let samples: usize = parts[2]
            .parse()
            .map_err(|_| Failure::Parse(format!("bad sweep sample count `{}`", parts[2])))?;
        if !(1.0..=100.0).contains(&r0) || r1 < r0 || samples == 0 || samples > 100_000 {
            return Err(Failure::Parse(
                "sweep needs 1 ≤ r0 ≤ r1 and 1..=100000 samples".into(),
            ));
        }
        scan::Region::Sweep(scan::SweepRegion { r0, r1, samples })
    } else {
        return Err(Failure::Parse("scan needs --box, --ray, or --rscan".into()));
    };
    let content = scan::run(&curve, &region, format, flags.nodes()?)?;
    write_output(flags.get("out"), &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(flags: &Flags) -> Result<ExitCode, Failure> {
    let level = match flags.get("level") {
        None | Some("quick") => verify::Level::Quick,
        Some("full") => verify::Level::Full,
        Some(other) => {
            return Err(Failure::Parse(format!(
                "--level expects quick or full, got `{other}`"
            )))
        }
    };
    let checks = verify::run(level);
    let mut failed = 0;
    for c in &checks {
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        println!(
            "{verdict} {name:<34} observed {obs:>12.3e}  tolerance {tol:>9.1e}  margin {margin:>12.3e}",
            name = c.name,
            obs = c.observed,
            tol = c.tolerance,
            margin = c.tolerance - c.observed
        );
        if !c.pass {
            failed += 1;
        }
    }
    let json = verify::render_json(level, &checks);
    match flags.get("out") {
        Some(p) => {
            std::fs::write(p, &json).map_err(|e| Failure::Io(format!("cannot write `{p}`: {e}")))?
        }
        None => print!("{json}"),
    }
    if failed > 0 {
        eprintln!("{failed} check(s) failed");
        Ok(ExitCode::from(EXIT_VERIFY_FAILED))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_spectrum(flags: &Flags) -> Result<ExitCode, Failure> {
    let (request, curve) = load_curve(flags)?;
    if request.is_mapped() || matches!(curve, Curve::Wedge { .. }) {
        return Err(Failure::Parse(
            "spectrum expects a circle or ellipse specification".into(),
        ));
    }
    let count: usize = match flags.get("count") {
        None => 6,
        Some(v) => v
            .parse()
            .map_err(|_| Failure::Parse(format!("--count expects an integer, got `{v}`")))?,
    };
    let n = flags.nodes()?;
    let (cmat, amat) = szego_system(&curve, DomainSide::Interior, n)?;
    let spec = spectrum_a(&amat, count.max(2))?;
    for (l, v) in spec.iter().enumerate() {
        println!("lambda_{} = {:.16e}", l + 1, v);
    }
    for pair in spec.chunks(2) {
        if pair.len() == 2 {
            println!("pairing residual = {:.3e}", (pair[0] - pair[1]).abs());
        }
    }
    let nrm = operator_norm(&cmat)?;
    println!("operator norm = {:.16e}", nrm);
    println!(
        "sqrt(norm^2 - 1) = {:.16e}  (lambda_1 cross-check residual {:.3e})",
        (nrm * nrm - 1.0).max(0.0).sqrt(),
        (spec[0] - (nrm * nrm - 1.0).max(0.0).sqrt()).abs()
    );
    if let Curve::Ellipse { r } = curve {
        if r > 1.0 {
            println!(
                "bolt ratio lambda_1 * 2(r+1)/(r-1) = {:.6}",
                spec[0] * 2.0 * (r + 1.0) / (r - 1.0)
            );
        }
    }
    if let Some(path) = flags.get("dump") {
        let file = std::fs::File::create(path)
            .map_err(|e| Failure::Io(format!("cannot write `{path}`: {e}")))?;
        dump::write_kstmat(std::io::BufWriter::new(file), &amat)
            .map_err(|e| Failure::Io(format!("cannot write `{path}`: {e}")))?;
        println!("kerzman-stein matrix dumped to {path}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bounds(flags: &Flags) -> Result<ExitCode, Failure> {
    let (_, curve) = load_curve(flags)?;
    let grid = default_grid(&curve)?;
    let report = if curve.node_count().is_some() {
        // Sampled curves go through the cached-factorization evaluator; the
        // generic path would rebuild the Kerzman–Stein system per point.
        let engine = scan::Engine::new(curve.clone(), flags.nodes()?)?;
        let mut lower = f64::NEG_INFINITY;
        let mut argmax = cauchy_szego_core::geometry::ScalarPoint::Infinity;
        for z in &grid {
            if let cauchy_szego_core::geometry::ScalarPoint::Finite(p) = z {
                let (value, _) = engine.eval(*p)?;
                if value > lower {
                    lower = value;
                    argmax = *z;
                }
            }
        }
        cauchy_szego_core::lambda::NormBoundsReport {
            lower,
            upper: None,
            argmax,
        }
    } else {
        cauchy_norm_bounds(&curve, &grid)?
    };
    println!("lower bound (sup lambda) = {:.16e}", report.lower);
    println!("argmax = {}", report.argmax);
    match report.upper {
        Some(u) => println!("upper bound (FKS) = {:.16e}", u),
        None => println!("upper bound (FKS) = n/a"),
    }
    if curve.is_bounded() {
        let n = flags.nodes()?;
        let (cmat, _) = szego_system(&curve, DomainSide::Interior, n)?;
        let nrm = operator_norm(&cmat)?;
        println!("numerical operator norm = {:.16e}", nrm);
        let mut ok = report.lower <= nrm + 1e-6;
        if let Some(u) = report.upper {
            ok = ok && nrm <= u + 1e-6;
        }
        println!("sandwich ordering holds = {ok}");
    } else {
        println!("numerical operator norm = n/a (unbounded curve)");
    }
    Ok(ExitCode::SUCCESS)
}
