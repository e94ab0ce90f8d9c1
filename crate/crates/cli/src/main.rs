use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use divforge_cli::commands::{self, Emitter};
use divforge_cli::ringspec::parse_ring;
use divforge_cli::CliError;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact divisor arithmetic: coprime bases, divisor lattices, quadratic
/// Krull rings and the determinantal coordinate ring.
#[derive(Parser, Debug)]
#[command(name = "divforge", version, about)]
struct Cli {
    /// Emit one JSON object per result
    #[arg(long, global = true)]
    json: bool,

    /// Run commands from FILE, one command line per line
    #[arg(long, global = true, value_name = "FILE")]
    batch: Option<PathBuf>,

    #[command(subcommand)]
    verb: Option<Verb>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Pairwise-coprime decomposition basis of a family of elements
    Refine {
        /// Ring selector: z, q[vars] or fp[vars]:p
        #[arg(long)]
        ring: String,
        /// Elements of the ring
        #[arg(required = true, allow_hyphen_values = true)]
        elems: Vec<String>,
    },
    /// Lattice operations on divisors given as element lists
    Dv {
        /// Ring selector: z, q[vars] or fp[vars]:p
        #[arg(long)]
        ring: String,
        /// Operation: meet, join, add or leq
        op: String,
        /// Comma-separated element lists, one per operand
        #[arg(required = true, allow_hyphen_values = true)]
        operands: Vec<String>,
    },
    /// Kronecker star product of two coefficient lists
    Star {
        /// Ring selector (defaults to z)
        #[arg(long, default_value = "z")]
        ring: String,
        /// First list, a `;`, then the second list
        #[arg(required = true, allow_hyphen_values = true)]
        lists: Vec<String>,
    },
    /// Divisorial Nagata-ring membership and divisibility for A[X]
    Nagata {
        /// Ring selector: z, q[vars] or fp[vars]:p
        #[arg(long)]
        ring: String,
        /// Mode: member or divides
        mode: String,
        /// Polynomial in X
        #[arg(allow_hyphen_values = true)]
        f: String,
        /// Second polynomial (divides mode)
        #[arg(allow_hyphen_values = true)]
        g: Option<String>,
    },
    /// Quadratic integer ring operations
    Quad {
        /// Squarefree d of Q(sqrt d)
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        /// split p | dv x | approx atom:exp,... | half atom:exp,... a | four a b | norm x
        #[arg(required = true, allow_hyphen_values = true)]
        rest: Vec<String>,
    },
    /// Coordinate ring k[a,b,c,d]/(ad-bc) over F_p
    Case {
        /// Field characteristic
        #[arg(long)]
        p: u64,
        /// divides x y | sgcd1 xs... | dv xs... | idv x ; gens...
        #[arg(required = true, allow_hyphen_values = true)]
        rest: Vec<String>,
    },
}

fn dispatch(verb: Verb, em: &Emitter) -> Result<(), CliError> {
    match verb {
        Verb::Refine { ring, elems } => commands::run_refine(parse_ring(&ring)?, &elems, em),
        Verb::Dv { ring, op, operands } => commands::run_dv(parse_ring(&ring)?, &op, &operands, em),
        Verb::Star { ring, lists } => commands::run_star(parse_ring(&ring)?, &lists, em),
        Verb::Nagata { ring, mode, f, g } => {
            commands::run_nagata(parse_ring(&ring)?, &mode, &f, g.as_deref(), em)
        }
        Verb::Quad { d, rest } => commands::run_quad(d, &rest, em),
        Verb::Case { p, rest } => commands::run_case(p, &rest, em),
    }
}

/// Minimal shell-like splitter for batch lines: whitespace separates,
/// single or double quotes group.
fn split_line(line: &str) -> Result<Vec<String>, CliError> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut quote: Option<char> = None;
    let mut had_token = false;
    for c in line.chars() {
        match quote {
            Some(q) if c == q => quote = None,
            Some(_) => cur.push(c),
            None => match c {
                '\'' | '"' => {
                    quote = Some(c);
                    had_token = true;
                }
                c if c.is_whitespace() => {
                    if had_token {
                        out.push(std::mem::take(&mut cur));
                        had_token = false;
                    }
                }
                _ => {
                    cur.push(c);
                    had_token = true;
                }
            },
        }
    }
    if quote.is_some() {
        return Err(CliError::Usage(format!("unterminated quote in `{line}`")));
    }
    if had_token {
        out.push(cur);
    }
    Ok(out)
}

fn run_batch(path: &PathBuf, json: bool) -> Result<(), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut argv = vec!["divforge".to_string()];
        argv.extend(split_line(line)?);
        let parsed = Cli::try_parse_from(&argv)
            .map_err(|e| CliError::Usage(format!("in batch line `{line}`: {e}")))?;
        if parsed.batch.is_some() {
            return Err(CliError::Usage("batch files cannot nest --batch".into()));
        }
        let verb = parsed
            .verb
            .ok_or_else(|| CliError::Usage(format!("batch line `{line}` has no command")))?;
        let em = Emitter {
            json: json || parsed.json,
        };
        dispatch(verb, &em)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match (cli.batch, cli.verb) {
        (Some(path), None) => run_batch(&path, cli.json),
        (Some(_), Some(_)) => Err(CliError::Usage(
            "--batch and a command are mutually exclusive".into(),
        )),
        (None, Some(verb)) => dispatch(verb, &Emitter { json: cli.json }),
        (None, None) => Err(CliError::Usage(
            "nothing to do: give a command or --batch FILE (see --help)".into(),
        )),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
