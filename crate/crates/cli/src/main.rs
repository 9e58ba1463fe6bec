use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use twisted_cubic::algebra::{parse_coords, parse_field_spec, Field, FieldElem};
use twisted_cubic::census::{self, verify_all, VerifyOptions, DEFAULT_BOUND};
use twisted_cubic::elliptic::{self, hasse_ok};
use twisted_cubic::forms::BinaryForm;
use twisted_cubic::incidence::{brute_decompose, classify_line, decompose, LineClass};
use twisted_cubic::klein::{line_from_pencil, point_classify, Line, PointP3};
use twisted_cubic::Error;

#[derive(Parser)]
#[command(name = "tcubic", version, about = "Twisted cubic orbits in PG(3,q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit of a point given as a binary cubic.
    ClassifyPoint {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "c0,c1,c2,c3")]
        cubic: String,
    },
    /// Coordinates, binary quartic and nature of a line.
    ClassifyLine {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        line: LineArgs,
    },
    /// Point-orbit distribution on a line.
    Incidence {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        line: LineArgs,
        /// Compare against brute force and exit 1 on mismatch.
        #[arg(long)]
        check: bool,
    },
    /// Elliptic curve attached to a generic line.
    Elliptic {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        line: LineArgs,
    },
    /// Exhaustive orbit census of points and lines.
    Census {
        #[command(flatten)]
        common: Common,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the per-orbit CSV table here.
        #[arg(long)]
        tables: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Closed-form tables for the given q.
    Tables {
        #[command(flatten)]
        common: Common,
    },
    /// Census checks plus the randomised identity suite.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    /// "p", "p^k" or "p^k/c0,...,ck".
    #[arg(long)]
    field: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct LineArgs {
    /// Klein coordinates z0,...,z5.
    #[arg(long)]
    z: Option<String>,
    /// Two binary cubics spanning the line, "u0,u1,u2,u3:v0,v1,v2,v3".
    #[arg(long)]
    pencil: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

enum Failure {
    Usage(String),
    Domain(Error),
    Verify(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) => Failure::Usage(msg),
            e => Failure::Domain(e),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn enc(x: FieldElem<'_>) -> u32 {
    x.encoding()
}

fn encs(xs: &[FieldElem<'_>]) -> Vec<u32> {
    xs.iter().map(|&x| enc(x)).collect()
}

fn join(xs: &[u32]) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn form<'f>(field: &'f Field, text: &str, len: usize) -> Result<BinaryForm<'f>, Failure> {
    Ok(BinaryForm::new(parse_coords(field, text, Some(len))?)?)
}

fn line<'f>(field: &'f Field, args: &LineArgs) -> Result<Line<'f>, Failure> {
    if let Some(z) = &args.z {
        return Ok(Line::from_slice(&parse_coords(field, z, Some(6))?)?);
    }
    let pencil = args.pencil.as_deref().unwrap_or_default();
    let (u, v) = pencil
        .split_once(':')
        .ok_or_else(|| Failure::Usage(format!("--pencil expects u:v, got {pencil:?}")))?;
    Ok(line_from_pencil(&form(field, u, 4)?, &form(field, v, 4)?)?)
}

fn set_threads(threads: Option<usize>) {
    if let Some(n) = threads {
        // fails only if the pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn emit_json(value: &impl Serialize) -> Outcome {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn emit_csv<T: Serialize>(rows: &[T], w: impl Write) -> Outcome {
    let mut w = csv::Writer::from_writer(w);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

fn no_csv(format: Format) -> Outcome {
    if format == Format::Csv {
        return Err(Failure::Usage(
            "csv output is only available for census and tables".into(),
        ));
    }
    Ok(())
}

fn classify_point(common: &Common, cubic: &str) -> Outcome {
    no_csv(common.format)?;
    let field = parse_field_spec(&common.field)?;
    let p = PointP3::new(form(&field, cubic, 4)?)?;
    let orbit = format!("O{}", point_classify(&p));
    match common.format {
        Format::Json => emit_json(&json!({ "point": encs(p.coords()), "orbit": orbit })),
        _ => {
            println!("{orbit}");
            Ok(())
        }
    }
}

fn classify_line_cmd(common: &Common, args: &LineArgs) -> Outcome {
    no_csv(common.format)?;
    let field = parse_field_spec(&common.field)?;
    let l = line(&field, args)?;
    let class = classify_line(&l)?;
    let (z, plucker, phi) = (encs(l.z()), encs(&l.plucker()), encs(l.phi().coords()));
    let nature = l.nature();
    match common.format {
        Format::Json => emit_json(&json!({
            "z": z,
            "plucker": plucker,
            "phi": phi,
            "z5": enc(l.z5()),
            "nature": nature,
            "orbit_class": class.label(),
        })),
        _ => {
            println!("z        {}", join(&z));
            println!("plucker  {}", join(&plucker));
            println!("phi      {}", join(&phi));
            println!("z5       {}", enc(l.z5()));
            println!(
                "nature   generic={} meets_C={} in_osculating={}",
                nature.generic, nature.meets_c, nature.in_osculating
            );
            println!("orbit    {} ({})", class.symbol(), class.label());
            Ok(())
        }
    }
}

fn incidence(common: &Common, args: &LineArgs, check: bool) -> Outcome {
    no_csv(common.format)?;
    let field = parse_field_spec(&common.field)?;
    let l = line(&field, args)?;
    let class = classify_line(&l)?;
    let p = decompose(&l)?;
    match common.format {
        Format::Json => emit_json(&json!({
            "counts": p.counts,
            "eta": p.eta,
            "nu": p.nu,
            "e_count": p.e_count,
            "orbit_class": class.label(),
        }))?,
        _ => {
            let opt = |x: Option<u64>| x.map_or("-".to_string(), |x| x.to_string());
            println!("counts   {:?}", p.counts);
            println!("eta      {}", opt(p.eta.map(|x| x as u64)));
            println!("nu       {}", opt(p.nu.map(|x| x as u64)));
            println!("e_count  {}", opt(p.e_count));
            println!("orbit    {} ({})", class.symbol(), class.label());
        }
    }
    if check {
        let brute = brute_decompose(&l);
        if brute.counts != p.counts {
            return Err(Failure::Verify(format!(
                "formula {:?} but brute force {:?}",
                p.counts, brute.counts
            )));
        }
    }
    Ok(())
}

fn elliptic_cmd(common: &Common, args: &LineArgs) -> Outcome {
    no_csv(common.format)?;
    let field = parse_field_spec(&common.field)?;
    let l = line(&field, args)?;
    let c = elliptic::curve(&l)?;
    let count = c.count_points();
    let (g2, g3, q) = (enc(c.g2), enc(c.g3), field.q());
    let (hasse, div3) = (hasse_ok(count, q), count % 3 == 0);
    match common.format {
        Format::Json => emit_json(
            &json!({ "g2": g2, "g3": g3, "count": count, "hasse_ok": hasse, "div3": div3 }),
        ),
        _ => {
            println!("y^2 = 4x^3 - {g2}x - {g3}");
            println!("count    {count}");
            println!("hasse_ok {hasse}");
            println!("div3     {div3}");
            Ok(())
        }
    }
}

fn print_checks(report: &census::Report) {
    for c in &report.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        println!("{status} {:<32} {}", c.name, c.detail);
    }
    let failed = report.failures().count();
    println!("{} checks, {failed} failed", report.checks.len());
}

fn census_cmd(
    common: &Common,
    out: Option<&PathBuf>,
    tables: Option<&PathBuf>,
    threads: Option<usize>,
) -> Outcome {
    set_threads(threads);
    let field = parse_field_spec(&common.field)?;
    let c = census::line_census(&field, DEFAULT_BOUND)?;
    let jsets = census::j_set_census(&field, DEFAULT_BOUND)?;
    let checks = census::census_checks(&c, &jsets, census::point_classes_are_orbits(&field));
    let passed = checks.iter().all(|c| c.passed);
    let report = census::Report {
        field: field.to_string(),
        q: field.q(),
        checks,
        passed,
    };
    let rows = c.rows();
    if let Some(path) = out {
        serde_json::to_writer_pretty(
            File::create(path)?,
            &json!({ "report": report, "orbits": rows }),
        )
        .map_err(io::Error::from)?;
    }
    if let Some(path) = tables {
        emit_csv(&rows, File::create(path)?)?;
    }
    match common.format {
        Format::Json => emit_json(&report)?,
        Format::Csv => emit_csv(&rows, io::stdout().lock())?,
        Format::Text => {
            println!(
                "{}: {} lines in {} orbits",
                report.field,
                c.line_count,
                c.orbits.len()
            );
            print_checks(&report);
        }
    }
    if !passed {
        return Err(Failure::Verify("census checks failed".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct TableRow {
    orbit: &'static str,
    class: &'static str,
    size: u64,
    c1: usize,
    c2: usize,
    c3: usize,
    c4: usize,
    c5: usize,
}

fn tables(common: &Common) -> Outcome {
    let field = parse_field_spec(&common.field)?;
    let (q, mu) = (field.q(), field.mu());
    let rows = LineClass::NONGENERIC
        .iter()
        .map(|&c| {
            let [c1, c2, c3, c4, c5] = c.table_row(q, mu)?;
            Ok(TableRow {
                orbit: c.symbol(),
                class: c.label(),
                size: c.size(q),
                c1,
                c2,
                c3,
                c4,
                c5,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let generic_count = census::expected_generic_orbit_count(q, mu);
    let histogram = census::expected_generic_histogram(q, mu);
    let j_sizes = census::expected_j_set_sizes(q, mu);
    let j_plus = census::expected_j_plus_sizes(q, mu);
    match common.format {
        Format::Csv => emit_csv(&rows, io::stdout().lock()),
        Format::Json => emit_json(&json!({
            "q": q,
            "mu": mu,
            "nongeneric": rows,
            "generic_orbit_count": generic_count,
            "generic_histogram": histogram,
            "j_set_sizes": j_sizes,
            "j_plus_sizes": j_plus,
        })),
        Format::Text => {
            println!("q = {q}, mu = {mu}");
            println!(
                "{:<8} {:<22} {:>8}  {:>4} {:>4} {:>4} {:>4} {:>4}",
                "orbit", "class", "size", "O1", "O2", "O3", "O4", "O5"
            );
            for r in &rows {
                println!(
                    "{:<8} {:<22} {:>8}  {:>4} {:>4} {:>4} {:>4} {:>4}",
                    r.orbit, r.class, r.size, r.c1, r.c2, r.c3, r.c4, r.c5
                );
            }
            println!("generic orbits: {generic_count}");
            println!("by size |G|, |G|/2, |G|/3, |G|/4, |G|/12: {histogram:?}");
            println!("|J1|, |J2|, |J4|: {j_sizes:?}");
            println!("|J1+|, |J2+|, |J4+|: {j_plus:?}");
            Ok(())
        }
    }
}

fn verify(
    common: &Common,
    opts: VerifyOptions,
    threads: Option<usize>,
    out: Option<&PathBuf>,
) -> Outcome {
    no_csv(common.format)?;
    set_threads(threads);
    let field = parse_field_spec(&common.field)?;
    let report = verify_all(&field, opts)?;
    if let Some(path) = out {
        serde_json::to_writer_pretty(File::create(path)?, &report).map_err(io::Error::from)?;
    }
    match common.format {
        Format::Json => emit_json(&report)?,
        _ => print_checks(&report),
    }
    if !report.passed {
        return Err(Failure::Verify(format!(
            "{} checks failed",
            report.failures().count()
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::ClassifyPoint { common, cubic } => classify_point(common, cubic),
        Command::ClassifyLine { common, line } => classify_line_cmd(common, line),
        Command::Incidence {
            common,
            line,
            check,
        } => incidence(common, line, *check),
        Command::Elliptic { common, line } => elliptic_cmd(common, line),
        Command::Census {
            common,
            out,
            tables: t,
            threads,
        } => census_cmd(common, out.as_ref(), t.as_ref(), *threads),
        Command::Tables { common } => tables(common),
        Command::Verify {
            common,
            seed,
            trials,
            threads,
            out,
        } => verify(
            common,
            VerifyOptions {
                seed: *seed,
                trials: *trials,
                bound: DEFAULT_BOUND,
            },
            *threads,
            out.as_ref(),
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
