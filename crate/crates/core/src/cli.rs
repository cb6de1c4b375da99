//! The `perspow` command line.
//!
//! [`run`] takes explicit streams so the whole front end can be exercised
//! in-process. Output is assembled completely before anything is written:
//! a failing command prints only a JSON error object on stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::complex::{
    build_persistence_complex, parse_filtered_complex, parse_points, rips_filtration, Filtration,
    PersistenceComplex,
};
use crate::error::{Error, Result};
use crate::exec::{Limits, Strategy};
use crate::field::{parse_rational, Field};
use crate::homology::{all_degrees, Method, PersistenceModule};
use crate::power::{
    algebra_presentation, cyclic_power, dihedral_power, exterior_power, group_power,
    symmetric_power, tensor_power, Flavor, ModuleDescriptor, PermGroup,
};
use crate::verify::{counting_sweep, degenerate_battery, power_sweep, render_table, SweepConfig};

#[derive(Debug, Parser)]
#[command(name = "perspow", version, about = "Persistent (co)homology and powers of persistence modules")]
struct Cli {
    /// Run every data-parallel loop on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Persistent homology of a filtration or filtered chain complex.
    Homology(HomologyArgs),
    /// Persistent cohomology (same as `homology --cohomology`).
    Cohomology(HomologyArgs),
    /// Tensor, symmetric, exterior or group power of a module.
    Power(PowerArgs),
    /// Generator/relation presentation of T(M), S(M) or Λ(M).
    Present(PresentArgs),
    /// Vietoris-Rips filtration of a point cloud, in filtration format.
    Rips(RipsArgs),
    /// Compare the power formulas with brute-force oracles.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Both,
    Graded,
}

#[derive(Debug, Args)]
struct HomologyArgs {
    /// Input file (`steps` filtration or `gens` chain complex); `-` reads stdin.
    file: PathBuf,
    #[arg(long)]
    cohomology: bool,
    /// Only this degree; all degrees when omitted.
    #[arg(long)]
    dim: Option<usize>,
    /// `q` for the rationals or `p:P` for a prime field.
    #[arg(long, default_value = "q")]
    field: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Also write the barcode as CSV (`dim,birth,death`).
    #[arg(long)]
    barcode: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "both")]
    method: MethodArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PowerKind {
    Tensor,
    Sym,
    Ext,
    Cyclic,
    Dihedral,
    Group,
}

#[derive(Debug, Args)]
struct PowerArgs {
    #[arg(value_enum)]
    kind: PowerKind,
    #[arg(short = 'n')]
    n: usize,
    /// Group generators in cycle notation, e.g. "(1 2 3);(1 2)".
    #[arg(long)]
    group: Option<String>,
    /// Module as "r=2; t^2, t^3".
    #[arg(long)]
    module: String,
    #[arg(long, default_value = "q")]
    field: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct PresentArgs {
    /// free, sym or ext.
    flavor: String,
    #[arg(long)]
    module: String,
    #[arg(long, default_value = "q")]
    field: String,
}

#[derive(Debug, Args)]
struct RipsArgs {
    /// One point per line; `-` reads stdin.
    points: PathBuf,
    /// Strictly increasing radii, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    radii: Vec<String>,
    #[arg(long, default_value_t = 2)]
    max_dim: usize,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long, default_value_t = 3)]
    max_s: usize,
    #[arg(long, default_value_t = 2)]
    max_r: u64,
    #[arg(long, default_value_t = 4)]
    max_exp: u32,
    /// Largest color count in the counting checks.
    #[arg(long, default_value_t = 4)]
    count_r: u64,
    /// Largest arity in the counting checks.
    #[arg(long, default_value_t = 6)]
    count_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "q")]
    field: String,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    error: ErrorDetail<'a>,
}

#[derive(Serialize)]
struct ErrorDetail<'a> {
    code: &'a str,
    message: String,
    location: Option<Location>,
}

#[derive(Serialize)]
struct Location {
    file: Option<String>,
    line: Option<usize>,
}

/// A failure together with the input it came from.
struct Failure {
    error: Error,
    file: Option<String>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Failure {
        Failure { error, file: None }
    }
}

trait InFile<T> {
    fn in_file(self, path: &Path) -> std::result::Result<T, Failure>;
}

impl<T> InFile<T> for Result<T> {
    fn in_file(self, path: &Path) -> std::result::Result<T, Failure> {
        self.map_err(|error| Failure {
            error,
            file: Some(path.display().to_string()),
        })
    }
}

/// Successful command output.
struct Output {
    stdout: String,
    files: Vec<(PathBuf, String)>,
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return 0;
            }
            let msg = e.render().to_string();
            let msg = msg.lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            return report(stderr, Failure::from(Error::Usage(msg)));
        }
    };
    let strategy = if cli.sequential {
        Strategy::Sequential
    } else {
        Strategy::default()
    };
    let limits = Limits::from_env();
    let result = match cli.command {
        Command::Homology(a) => homology(a, false, stdin, strategy),
        Command::Cohomology(a) => homology(a, true, stdin, strategy),
        Command::Power(a) => power(a, &limits, strategy),
        Command::Present(a) => present(a),
        Command::Rips(a) => rips(a, stdin),
        Command::Verify(a) => verify(a, &limits, strategy),
    };
    let out = result.and_then(|out| {
        for (path, contents) in &out.files {
            fs::write(path, contents)
                .map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))
                .in_file(path)?;
        }
        Ok(out)
    });
    match out {
        Ok(out) => {
            if stdout.write_all(out.stdout.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err(f) => report(stderr, f),
    }
}

fn report(stderr: &mut dyn Write, f: Failure) -> i32 {
    let line = f.error.line();
    let location = (f.file.is_some() || line.is_some()).then_some(Location { file: f.file, line });
    let body = ErrorBody {
        error: ErrorDetail {
            code: f.error.code(),
            message: f.error.to_string(),
            location,
        },
    };
    let _ = writeln!(stderr, "{}", serde_json::to_string(&body).expect("serialisable"));
    1
}

fn parse_field(s: &str) -> Result<Field> {
    s.parse()
}

fn read_input(path: &Path, stdin: &mut dyn Read) -> std::result::Result<String, Failure> {
    let mut text = String::new();
    if path == Path::new("-") {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Error::Io(format!("cannot read stdin: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))
        .in_file(path)
}

/// `steps` files are filtrations, anything else a generic chain complex.
fn load_complex(text: &str, field: Field) -> Result<PersistenceComplex> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with("steps") => {
            Ok(build_persistence_complex(&Filtration::parse(text)?, field))
        }
        _ => parse_filtered_complex(text, field),
    }
}

fn homology(
    a: HomologyArgs,
    cohomology_cmd: bool,
    stdin: &mut dyn Read,
    strategy: Strategy,
) -> std::result::Result<Output, Failure> {
    let field = parse_field(&a.field)?;
    let text = read_input(&a.file, stdin)?;
    let complex = load_complex(&text, field).in_file(&a.file)?;
    let cohomology = cohomology_cmd || a.cohomology;
    let method = match a.method {
        MethodArg::Both => Method::Both,
        MethodArg::Graded => Method::Graded,
    };
    let modules = all_degrees(&complex, cohomology, method, strategy)?;
    let selected: Vec<(usize, PersistenceModule)> = match a.dim {
        Some(n) => vec![(n, modules.get(n).cloned().unwrap_or_default())],
        None => modules.into_iter().enumerate().collect(),
    };

    let stdout = match a.format {
        Format::Json => {
            let views: Vec<_> = selected.iter().map(|(n, m)| m.json_view(*n, field)).collect();
            let json = match a.dim {
                Some(_) => serde_json::to_string(&views[0]),
                None => serde_json::to_string(&views),
            };
            json.expect("serialisable") + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            let symbol = if cohomology { "H^" } else { "H_" };
            for (n, m) in &selected {
                let _ = writeln!(s, "{symbol}{n}: {}", m.iso_type());
                for (birth, death) in m.barcode() {
                    let death = death.map_or("inf".to_string(), |d| d.to_string());
                    let _ = writeln!(s, "  [{birth}, {death})");
                }
            }
            s
        }
    };
    let mut files = Vec::new();
    if let Some(path) = a.barcode {
        let mut csv = String::from("dim,birth,death\n");
        for (n, m) in &selected {
            for (birth, death) in m.barcode() {
                let death = death.map_or("inf".to_string(), |d| d.to_string());
                let _ = writeln!(csv, "{n},{birth},{death}");
            }
        }
        files.push((path, csv));
    }
    Ok(Output { stdout, files })
}

fn power(a: PowerArgs, limits: &Limits, strategy: Strategy) -> std::result::Result<Output, Failure> {
    let field = parse_field(&a.field)?;
    let m = ModuleDescriptor::parse(field, &a.module)?;
    if a.group.is_some() && !matches!(a.kind, PowerKind::Group) {
        return Err(Error::Usage("--group only applies to `power group`".into()).into());
    }
    let out = match a.kind {
        PowerKind::Tensor => tensor_power(&m, a.n),
        PowerKind::Sym => symmetric_power(&m, a.n),
        PowerKind::Ext => exterior_power(&m, a.n),
        PowerKind::Cyclic => cyclic_power(&m, a.n, limits, strategy)?,
        PowerKind::Dihedral => dihedral_power(&m, a.n, limits, strategy)?,
        PowerKind::Group => {
            let spec = a
                .group
                .ok_or_else(|| Error::Usage("`power group` needs --group".into()))?;
            let g = PermGroup::parse(a.n, &spec)?;
            group_power(&m, a.n, &g, limits, strategy)?
        }
    };
    let stdout = match a.format {
        Format::Json => serde_json::to_string(&out.json_view()).expect("serialisable") + "\n",
        Format::Text => format!("{out}\n"),
    };
    Ok(Output {
        stdout,
        files: Vec::new(),
    })
}

fn present(a: PresentArgs) -> std::result::Result<Output, Failure> {
    let field = parse_field(&a.field)?;
    let flavor: Flavor = a.flavor.parse()?;
    let m = ModuleDescriptor::parse(field, &a.module)?;
    Ok(Output {
        stdout: format!("{}\n", algebra_presentation(&m, flavor)?),
        files: Vec::new(),
    })
}

fn rips(a: RipsArgs, stdin: &mut dyn Read) -> std::result::Result<Output, Failure> {
    let text = read_input(&a.points, stdin)?;
    let points = parse_points(&text).in_file(&a.points)?;
    let radii = a
        .radii
        .iter()
        .map(|r| parse_rational(r.trim()))
        .collect::<Result<Vec<_>>>()?;
    let f = rips_filtration(&points, &radii, a.max_dim)?;
    Ok(Output {
        stdout: f.to_text(),
        files: Vec::new(),
    })
}

fn verify(a: VerifyArgs, limits: &Limits, strategy: Strategy) -> std::result::Result<Output, Failure> {
    let cfg = SweepConfig {
        field: parse_field(&a.field)?,
        max_r: a.max_r,
        max_s: a.max_s,
        max_exp: a.max_exp,
        max_n: a.max_n,
        seed: a.seed,
    };
    let mut results = power_sweep(&cfg, limits, strategy);
    results.extend(counting_sweep(a.count_r, a.count_n, a.seed, limits, strategy));
    results.push(degenerate_battery(&cfg));
    let failed = results.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        return Err(Error::VerificationFailed(failed).into());
    }
    Ok(Output {
        stdout: render_table(&results),
        files: Vec::new(),
    })
}
