//! Command-line front end of `pluecker-verify`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::complexes::FreeComplex;
use crate::error::{Error, Result};
use crate::field::{Field, Fp};
use crate::grassmann::GrassmannContext;
use crate::ideal::Ideal;
use crate::io::{ComplexFile, ComplexTask, IdealFile, IdealTask};
use crate::monomial::MonomialOrder;
use crate::verify::fields::{parse_primes, FieldSpec};
use crate::verify::grassmann_checks::SECTION_MAX_M;
use crate::verify::{self, P2Options, VerificationReport};
use crate::zerodim::{quotient_dimension, variety_points, zero_dim_radical};

/// Thread count for the rayon pool; unset means one per core.
pub const THREADS_ENV: &str = "PLUECKER_THREADS";

#[derive(Debug, Parser)]
#[command(name = "pluecker-verify", version, about = "Exact checks on Pluecker ideals, Koszul complexes and zero-dimensional schemes")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Internal degrees LO..HI for homology checks.
    #[arg(long, value_parser = parse_window, global = true)]
    pub degree_window: Option<(i64, i64)>,
    /// Record wall-clock timings in reports.
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification report; exit status 0 iff every claim passes.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Reduced Gröbner basis of an ideal file.
    Gb {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
    },
    /// Saturation by a second ideal file, or by the irrelevant ideal.
    Saturate {
        file: PathBuf,
        #[arg(long)]
        by: Option<PathBuf>,
    },
    /// Hilbert series, projective dimension and degree of a homogeneous ideal.
    Hilbert { file: PathBuf },
    /// Radical and rational points of a zero-dimensional affine ideal.
    Radical0 { file: PathBuf },
    /// Plücker ideal of G(d, m) as an ideal file.
    Pluecker {
        #[arg(long, value_parser = parse_grassmann)]
        grassmann: (usize, usize),
        #[arg(long, default_value = "Q")]
        field: FieldSpec,
    },
    /// Graded homology dimensions of a JSON complex file.
    Homology { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Koszul complexes on P^2 and the chain map between them.
    P2 {
        #[arg(long, hide = true)]
        perturb: bool,
    },
    /// The two-point scheme X ∩ V on G(2, 4).
    TwoPoints {
        #[arg(long, default_value = "2,3,5,7")]
        primes: String,
    },
    /// Reduced section at e_{1m} via the affine chart.
    Section {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "2,3,5")]
        primes: String,
        #[arg(long, default_value_t = SECTION_MAX_M)]
        max_m: usize,
    },
    /// Zero-dimensional fibres of X ∩ V on G(2, m).
    ZeroDim {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "2,3,5,7")]
        primes: String,
    },
    /// Schubert decomposition of the sections I_X + (l_k, …, l_{2m-1}).
    Richardson {
        #[arg(long)]
        m: usize,
    },
    /// Non-reducedness of the nine-form sections of G(3, 6).
    G36 {
        #[arg(long, default_value_t = 101)]
        prime: u32,
    },
}

fn parse_window(s: &str) -> std::result::Result<(i64, i64), String> {
    let (lo, hi) = s.split_once("..").ok_or("expected LO..HI")?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad bound `{lo}`"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad bound `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty window {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn parse_grassmann(s: &str) -> std::result::Result<(usize, usize), String> {
    let (d, m) = s.split_once(',').ok_or("expected d,m")?;
    Ok((
        d.trim().parse().map_err(|_| format!("bad d `{d}`"))?,
        m.trim().parse().map_err(|_| format!("bad m `{m}`"))?,
    ))
}

enum Outcome {
    Report(VerificationReport),
    Text(String, serde_json::Value),
}

fn run_verify(cli: &Cli, cmd: &VerifyCommand) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = match cmd {
        VerifyCommand::P2 { perturb } => verify::cmd_verify_p2(&P2Options {
            window: cli.degree_window,
            perturb: *perturb,
        }),
        VerifyCommand::TwoPoints { primes } => verify::cmd_verify_two_points(&parse_primes(primes)?),
        VerifyCommand::Section { m, primes, max_m } => verify::cmd_verify_section(*m, &parse_primes(primes)?, *max_m)?,
        VerifyCommand::ZeroDim { m, primes } => verify::cmd_verify_zero_dim(*m, &parse_primes(primes)?)?,
        VerifyCommand::Richardson { m } => verify::cmd_verify_richardson(*m)?,
        VerifyCommand::G36 { prime } => verify::cmd_search_g36(*prime, cli.timings)?,
    };
    if cli.timings {
        report.timing("total", start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

fn ideal_output<K: Field>(ideal: &Ideal<K>, extra: serde_json::Value) -> Outcome {
    let file = IdealFile::from_ideal(ideal);
    let mut value = json!({
        "vars": file.vars,
        "field": file.field.label(),
        "generators": file.polys,
    });
    if let (Some(obj), serde_json::Value::Object(more)) = (value.as_object_mut(), extra) {
        obj.extend(more);
    }
    Outcome::Text(file.to_string(), value)
}

struct Gb(MonomialOrder);

impl IdealTask for Gb {
    type Output = Outcome;

    fn run<K: Field>(&self, ideal: Ideal<K>) -> Result<Outcome> {
        let gb = ideal.groebner_with(self.0);
        let basis = Ideal::new(ideal.ring(), gb.elements().to_vec());
        Ok(ideal_output(&basis, json!({ "order": format!("{:?}", self.0).to_lowercase() })))
    }
}

struct Saturate(Option<IdealFile>);

impl IdealTask for Saturate {
    type Output = Outcome;

    fn run<K: Field>(&self, ideal: Ideal<K>) -> Result<Outcome> {
        let by = match &self.0 {
            Some(f) => {
                if f.vars != ideal.ring().var_names() {
                    return Err(Error::RingMismatch);
                }
                f.ideal(ideal.ring())?
            }
            None => Ideal::irrelevant(ideal.ring()),
        };
        Ok(ideal_output(&ideal.saturate(&by).minimalized(), json!({})))
    }
}

struct Hilbert;

impl IdealTask for Hilbert {
    type Output = Outcome;

    fn run<K: Field>(&self, ideal: Ideal<K>) -> Result<Outcome> {
        let h = ideal.hilbert_data()?;
        let text = format!(
            "numerator: {:?}\nreduced numerator: {:?}\nprojective dimension: {}\ndegree: {}\n",
            h.numerator, h.reduced_numerator, h.proj_dim, h.degree
        );
        Ok(Outcome::Text(text, serde_json::to_value(&h).expect("serializable")))
    }
}

struct Radical0;

impl IdealTask for Radical0 {
    type Output = Outcome;

    fn run<K: Field>(&self, ideal: Ideal<K>) -> Result<Outcome> {
        let rad = zero_dim_radical(&ideal)?;
        let length = quotient_dimension(&ideal)?;
        let reduced = quotient_dimension(&rad)?;
        let points: Vec<String> = variety_points(&ideal)?.iter().map(|p| p.to_string()).collect();
        let Outcome::Text(mut text, value) = ideal_output(
            &rad,
            json!({ "length": length, "radical_length": reduced, "rational_points": points }),
        ) else {
            unreachable!()
        };
        text.push_str(&format!("# length of R/I: {length}\n# length of R/rad: {reduced}\n"));
        text.push_str(&format!("# rational points: {}\n", if points.is_empty() { "none".into() } else { points.join(", ") }));
        Ok(Outcome::Text(text, value))
    }
}

struct Homology(Option<(i64, i64)>);

impl ComplexTask for Homology {
    type Output = Outcome;

    fn run<K: Field>(&self, c: FreeComplex<K>) -> Result<Outcome> {
        if let Some((pos, entry)) = c.first_nonzero_square() {
            return Err(Error::InvalidArgument(format!("not a complex: d^2 leaving position {pos} has entry {entry}")));
        }
        let window = self.0.unwrap_or_else(|| c.default_window());
        let positions: Vec<i64> = (c.low()..=c.high()).collect();
        let table = c.homology_table(&positions, window)?;
        let mut text = format!("degree window: {}..{}\n", window.0, window.1);
        for &(p, d, h) in &table {
            if h != 0 {
                text.push_str(&format!("H_{p} in degree {d}: {h}\n"));
            }
        }
        if table.iter().all(|t| t.2 == 0) {
            text.push_str("all homology vanishes in the window\n");
        }
        let value = json!({
            "window": [window.0, window.1],
            "homology": table.iter().map(|&(p, d, h)| json!({"position": p, "degree": d, "dimension": h})).collect::<Vec<_>>(),
        });
        Ok(Outcome::Text(text, value))
    }
}

fn pluecker_output<K: Field>(d: usize, m: usize, ctx: K::Ctx) -> Result<Outcome> {
    let g = GrassmannContext::<K>::new(d, m, ctx)?;
    Ok(ideal_output(&g.pluecker_ideal(), json!({ "grassmannian": [d, m] })))
}

fn execute(cli: &Cli) -> Result<Outcome> {
    Ok(match &cli.command {
        Command::Verify(cmd) => Outcome::Report(run_verify(cli, cmd)?),
        Command::Gb { file, order } => {
            let order = match order {
                OrderArg::Grevlex => MonomialOrder::Grevlex,
                OrderArg::Lex => MonomialOrder::Lex,
            };
            IdealFile::read(file)?.dispatch(&Gb(order))?
        }
        Command::Saturate { file, by } => {
            let by = by.as_ref().map(IdealFile::read).transpose()?;
            IdealFile::read(file)?.dispatch(&Saturate(by))?
        }
        Command::Hilbert { file } => IdealFile::read(file)?.dispatch(&Hilbert)?,
        Command::Radical0 { file } => IdealFile::read(file)?.dispatch(&Radical0)?,
        Command::Pluecker { grassmann: (d, m), field } => match field {
            FieldSpec::Rationals => pluecker_output::<crate::field::Rational>(*d, *m, ())?,
            FieldSpec::Prime(p) => pluecker_output::<Fp>(*d, *m, *p)?,
        },
        Command::Homology { file } => ComplexFile::read(file)?.dispatch(&Homology(cli.degree_window))?,
    })
}

/// Runs the CLI on `args`, writing to `out` and `err`; returns the exit code:
/// 0 on success, 1 when a report has a failing claim, 2 on errors.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(Outcome::Report(r)) => {
            let body = match cli.format {
                Format::Text => r.to_text(),
                Format::Json => r.to_json(),
            };
            let _ = writeln!(out, "{}", body.trim_end());
            if r.pass {
                0
            } else {
                1
            }
        }
        Ok(Outcome::Text(text, value)) => {
            let _ = match cli.format {
                Format::Text => write!(out, "{text}"),
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable")),
            };
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Entry point of the binary.
pub fn main() -> i32 {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
