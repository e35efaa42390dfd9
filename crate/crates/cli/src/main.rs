mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use piercing::counterexample::{escape_index, generate, unpierceability_certificate, SequenceConfig};
use piercing::io::{parse_family, parse_points, parse_rational, parse_table, serialize_family};
use piercing::kernel::radon_partition;
use piercing::pq::has_pq_property;
use piercing::reduction::{run_reduction, DEFAULT_PIERCING_BOUND};
use piercing::render::{render_svg, ClipBox};
use piercing::solver::piercing_number;
use piercing::{Error, Family, Point, Rational};

#[derive(Parser)]
#[command(name = "piercing", version, about = "Exact piercing numbers and (p,q)-property checks for planar convex families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s)
}

#[derive(Subcommand)]
enum Command {
    /// Write the first N members of the wedge family.
    Gen {
        #[arg(long)]
        n: usize,
        /// File of `t s` rows for n = 3, 4, ... (default: t_n = 1 - 1/n, s_n = -n).
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check the (p,q)-property exhaustively.
    CheckPq {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        file: PathBuf,
    },
    /// Compute the exact piercing number and a minimum transversal.
    Pierce {
        file: PathBuf,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Escape index of a point from the standard wedge family.
    Escape {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        y: Rational,
        #[arg(long, default_value_t = 20)]
        window: usize,
    },
    /// Find a wedge missed by every point of a point file.
    CertifyUnpierceable {
        #[arg(long)]
        points: PathBuf,
    },
    /// Clip by the hull of two disjoint compact members and pierce the result.
    Theorem2 {
        file: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, default_value_t = DEFAULT_PIERCING_BOUND)]
        bound: usize,
    },
    /// Radon partition of four points given as X1 Y1 ... X4 Y4.
    Radon {
        #[arg(num_args = 8, value_parser = rational, allow_negative_numbers = true,
              value_names = ["X1", "Y1", "X2", "Y2", "X3", "Y3", "X4", "Y4"])]
        coords: Vec<Rational>,
    },
    /// Draw a family as SVG, clipping unbounded regions to a box.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// X0 Y0 X1 Y1 (default -2 -3 3 4).
        #[arg(long, num_args = 4, value_parser = rational, allow_negative_numbers = true)]
        clip_box: Option<Vec<Rational>>,
    },
}

enum Failure {
    /// Exit 1: a check ran and failed.
    Check(String),
    /// Exit 2: bad invocation or unreadable input.
    Usage(String),
    Domain(Error),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Domain(e) => match e {
                Error::Parse { .. }
                | Error::DuplicateLabel(_)
                | Error::UnknownLabel(_)
                | Error::BadParams(_)
                | Error::ZeroNormal
                | Error::InvalidInput(_) => 2,
                Error::HypothesisViolated(_) | Error::NotCompact(_) | Error::NotDisjoint(..) => 3,
                _ => 1,
            },
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_family(path: &Path) -> Result<Family, Failure> {
    Ok(parse_family(&read(path)?)?)
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Gen { n, table, out } => {
            let cfg = match table {
                Some(path) => SequenceConfig::Table(parse_table(&read(&path)?)?),
                None => SequenceConfig::Standard,
            };
            let f = generate(n, &cfg)?;
            write(&out, &serialize_family(&f))?;
            println!("wrote {} regions to {}", f.len(), out.display());
        }
        Command::CheckPq { p, q, file } => {
            let f = load_family(&file)?;
            let rep = has_pq_property(&f, p, q)?;
            print!("{}", report::pq(&f, &rep));
            if !rep.holds {
                return Err(Failure::Check(format!("({p},{q})-property fails")));
            }
        }
        Command::Pierce { file, max_size } => {
            let f = load_family(&file)?;
            let res = piercing_number(&f, max_size)?;
            print!("{}", report::piercing(&f, &res));
        }
        Command::Escape { x, y, window } => {
            let trace = escape_index(&Point::new(x, y), &SequenceConfig::Standard, window)?;
            print!("{}", report::escape(&trace));
        }
        Command::CertifyUnpierceable { points } => {
            let pts = parse_points(&read(&points)?)?;
            let cert = unpierceability_certificate(&pts, &SequenceConfig::Standard)?;
            print!("{}", report::certificate(&cert));
        }
        Command::Theorem2 { file, a, b, bound } => {
            let f = load_family(&file)?;
            let rep = run_reduction(&f, &a, &b, bound)?;
            print!("{}", report::reduction(&rep));
            let ok = rep.hull_meets.ok
                && rep.triples_ok
                && rep.clipped_all_bounded
                && rep.clipped_pq_holds
                && rep.bound_satisfied
                && rep.pierces_original;
            if !ok {
                return Err(Failure::Check("reduction checks failed".into()));
            }
        }
        Command::Radon { coords } => {
            let pts: [Point; 4] = std::array::from_fn(|i| Point::new(coords[2 * i].clone(), coords[2 * i + 1].clone()));
            print!("{}", report::radon(&radon_partition(&pts)));
        }
        Command::Render { file, out, clip_box } => {
            let f = load_family(&file)?;
            let clip = match clip_box {
                Some(v) => {
                    let [x0, y0, x1, y1] = <[Rational; 4]>::try_from(v).unwrap();
                    if x0 >= x1 || y0 >= y1 {
                        return Err(Failure::Usage("clip box must have X0 < X1 and Y0 < Y1".into()));
                    }
                    ClipBox { x0, y0, x1, y1 }
                }
                None => ClipBox::default(),
            };
            write(&out, &render_svg(&f, &clip))?;
            println!("wrote {} shapes to {}", f.len(), out.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let code = failure.exit_code();
            match failure {
                Failure::Check(msg) | Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Domain(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(code)
        }
    }
}
