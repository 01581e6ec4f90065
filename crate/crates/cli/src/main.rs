//! Command-line front end.
//!
//! Exit codes: 0 success with every check passing, 1 a check failed,
//! 2 a precondition or validation failure, 3 an I/O or parse error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use startrans::complex::{koszul, validate_sop};
use startrans::corpus::standard_corpus;
use startrans::format::{emit_problem, emit_star, parse_field, parse_star, read_problem, Problem};
use startrans::groebner::colon;
use startrans::poly::parse_polynomial_list;
use startrans::verify::{maximal_ideal, run, saturate, star_iteration_driver, verify_star, StopReason};
use startrans::{BaseRing, Error, Field, PolyRing, Polynomial, Submodule};

#[derive(Parser)]
#[command(name = "startrans", version, about = "Star-transforms of graded free resolutions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FieldArg {
    /// Coefficient field: `rational` or `p:<prime>`. Overrides the input file.
    #[arg(long)]
    field: Option<String>,
}

impl FieldArg {
    fn get(&self) -> Result<Option<Field>, Error> {
        self.field.as_deref().map(parse_field).transpose()
    }
}

#[derive(Args)]
struct RingArgs {
    /// Comma-separated variables, optionally with degrees (`x,y:2`). Inferred
    /// from the polynomials in order of appearance when omitted.
    #[arg(long)]
    variables: Option<String>,
    #[command(flatten)]
    field: FieldArg,
}

#[derive(Subcommand)]
enum Command {
    /// Writes the Koszul complex of `--ideal` as a problem file.
    Koszul {
        /// Generators of the complete intersection to resolve.
        #[arg(long)]
        ideal: String,
        /// Parameters to transform by; defaults to the variables.
        #[arg(long)]
        sop: Option<String>,
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Transforms a problem file.
    Star {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Runs every check and embeds the report in the output.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Re-checks a written result against its problem.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Result file written by `star`.
        #[arg(long)]
        star: PathBuf,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Prints the reduced Gröbner basis of `module : ideal`.
    Colon {
        #[arg(long)]
        module: String,
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Iterates `module ← module : ideal` to a fixpoint.
    Saturate {
        #[arg(long)]
        module: String,
        /// Defaults to the maximal homogeneous ideal.
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, default_value_t = 32)]
        max_iter: usize,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Applies the transform repeatedly.
    Iterate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        rounds: usize,
        /// Writes round `k` to `<output>.<k>.json`.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Prints ranks, twists and the parameters of a problem file.
    Info {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Writes the example corpus as problem files, or lists it.
    Corpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Directory for the problem files.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Checks(String),
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Io(_) => 3,
        Error::PreconditionFailed(_) | Error::Validation(_) | Error::NotASop { .. } => 2,
        _ => 1,
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

/// Identifiers in order of first appearance.
fn infer_variables(texts: &[&str]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for t in texts {
        let chars: Vec<char> = t.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            if is_ident_start(chars[i]) {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                if !out.contains(&name) {
                    out.push(name);
                }
            } else {
                i += 1;
            }
        }
    }
    out
}

fn build_ring(args: &RingArgs, texts: &[&str]) -> Result<Arc<PolyRing>, Error> {
    let field = args.field.get()?.unwrap_or(Field::Rational);
    let (names, weights) = match &args.variables {
        Some(spec) => {
            let mut names = Vec::new();
            let mut weights = Vec::new();
            for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let (name, w) = match item.split_once(':') {
                    Some((n, w)) => {
                        let w = w
                            .trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad degree in {item:?}")))?;
                        (n.trim(), w)
                    }
                    None => (item, 1),
                };
                names.push(name.to_string());
                weights.push(w);
            }
            (names, weights)
        }
        None => {
            let names = infer_variables(texts);
            let n = names.len();
            (names, vec![1; n])
        }
    };
    PolyRing::new(field, names, weights)
}

fn ideal_of(base: &BaseRing, gens: &[Polynomial]) -> Result<Submodule, Error> {
    Submodule::ideal(&base.unit_module(), gens)
}

fn join(ps: impl IntoIterator<Item = String>) -> String {
    ps.into_iter().collect::<Vec<_>>().join(", ")
}

fn print_ideal(m: &Submodule) {
    println!("{}", join(m.basis().iter().map(|v| v.coords[0].to_string())));
}

fn report_lines(problem: &Problem, star: &startrans::transform::StarComplex) -> Result<(), Failure> {
    let report = verify_star(&problem.complex, &problem.sop, star);
    eprint!("{report}");
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Checks(format!("{} checks failed", report.failures().count())))
    }
}

fn execute(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Koszul {
            ideal,
            sop,
            ring,
            output,
        } => {
            let texts = [ideal.as_str(), sop.as_deref().unwrap_or("")];
            let r = build_ring(&ring, &texts)?;
            let base = BaseRing::polynomial(r.clone());
            let gens = validate_sop(&base, parse_polynomial_list(&ideal, &r)?)?;
            let params = match &sop {
                Some(s) => parse_polynomial_list(s, &r)?,
                None => (0..r.nvars()).map(|i| Polynomial::var(&r, i)).collect(),
            };
            let params = validate_sop(&base, params)?;
            let k = koszul(&gens)?;
            write_out(output.as_deref(), &emit_problem(&k.complex, &params))?;
        }
        Command::Star {
            input,
            output,
            verify,
            field,
        } => {
            let problem = read_problem(&input, field.get()?)?;
            let t = startrans::transform::star_transform(&problem.complex, &problem.sop)?;
            let report = verify.then(|| verify_star(&problem.complex, &problem.sop, &t.star));
            write_out(output.as_deref(), &emit_star(&t.star, &problem.sop, report.as_ref()))?;
            if let Some(report) = report {
                eprint!("{report}");
                if !report.passed() {
                    return Err(Failure::Checks(format!("{} checks failed", report.failures().count())));
                }
            }
        }
        Command::Verify { input, star, field } => {
            let field = field.get()?;
            let problem = read_problem(&input, field)?;
            let text = fs::read_to_string(&star).map_err(|e| Error::Io(format!("{}: {e}", star.display())))?;
            let parsed = parse_star(&text, field)?;
            if emit_star(&parsed.star, &parsed.sop, parsed.report.as_ref()) != text {
                eprintln!("FAIL  round trip: re-emitting the result changes it");
                return Err(Failure::Checks("round trip is not bit-identical".into()));
            }
            report_lines(&problem, &parsed.star)?;
        }
        Command::Colon { module, ideal, ring } => {
            let r = build_ring(&ring, &[&module, &ideal])?;
            let base = BaseRing::polynomial(r.clone());
            let m = ideal_of(&base, &parse_polynomial_list(&module, &r)?)?;
            let c = colon(&m, &parse_polynomial_list(&ideal, &r)?)?;
            print_ideal(&c);
        }
        Command::Saturate {
            module,
            ideal,
            max_iter,
            ring,
        } => {
            let r = build_ring(&ring, &[&module, ideal.as_deref().unwrap_or("")])?;
            let base = BaseRing::polynomial(r.clone());
            let m = ideal_of(&base, &parse_polynomial_list(&module, &r)?)?;
            let j = match &ideal {
                Some(t) => parse_polynomial_list(t, &r)?,
                None => maximal_ideal(&m),
            };
            let s = saturate(&m, &j, max_iter)?;
            print_ideal(&s.module);
            eprintln!("{} iterations", s.iterations);
        }
        Command::Iterate {
            input,
            rounds,
            output,
            field,
        } => {
            let problem = read_problem(&input, field.get()?)?;
            let result = star_iteration_driver(&problem.complex, &problem.sop, rounds)?;
            for (k, round) in result.rounds.iter().enumerate() {
                let star = &round.transform.star;
                let gens = star.complex.image(1)?;
                println!(
                    "round {}: ranks {:?}, checks {}, oracle {}, Im ∗φ1 = ({})",
                    k + 1,
                    star.complex.ranks(),
                    if round.report.passed() { "pass" } else { "FAIL" },
                    if round.colon_matches_oracle {
                        "agrees"
                    } else {
                        "DISAGREES"
                    },
                    join(gens.basis().iter().map(|v| v.to_string()))
                );
                if let Some(prefix) = &output {
                    let path = PathBuf::from(format!("{}.{}.json", prefix.display(), k + 1));
                    write_out(Some(&path), &emit_star(star, &problem.sop, Some(&round.report)))?;
                }
            }
            match &result.stop {
                StopReason::Completed => println!("completed {} rounds", result.rounds.len()),
                StopReason::TopVanished { round } => println!("top module vanished in round {round}"),
                StopReason::PreconditionFailed { round, reason } => {
                    println!("stopped before round {round}: {reason}")
                }
            }
            if !result.passed() {
                return Err(Failure::Checks("a round failed its checks".into()));
            }
        }
        Command::Info { input, field } => {
            let p = read_problem(&input, field.get()?)?;
            let c = &p.complex;
            println!("ring: {} variables over {:?}", c.ring().nvars(), c.ring().field());
            if let Some(q) = c.base().quotient_spec() {
                println!("quotient by: {}", join(q.generators().iter().map(|g| g.to_string())));
            }
            println!("length: {}", c.length());
            println!("ranks: {:?}", c.ranks());
            for k in 0..=c.length() {
                println!("degrees F_{k}: {:?}", c.degrees(k));
            }
            println!("sop: {}", join(p.sop.elements().iter().map(|x| x.to_string())));
            if let Some(l) = p.sop.colength() {
                println!("dim R/Q: {l}");
            }
        }
        Command::Corpus { seed, count, output } => {
            let insts = standard_corpus(seed, count);
            if let Some(dir) = &output {
                fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
            }
            for inst in &insts {
                let summary = match run(&inst.complex, &inst.sop) {
                    Ok((t, report)) => format!(
                        "ranks {:?} -> {:?}{}, checks {}",
                        inst.complex.ranks(),
                        t.star.complex.ranks(),
                        if t.star.top_vanished { " (top vanished)" } else { "" },
                        if report.passed() { "pass" } else { "FAIL" }
                    ),
                    Err(e) => format!("error: {e}"),
                };
                println!("{:<16} {summary}", inst.name);
                if let Some(dir) = &output {
                    let path = dir.join(format!("{}.json", inst.name));
                    write_out(Some(&path), &emit_problem(&inst.complex, &inst.sop))?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
