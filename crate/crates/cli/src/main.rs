//! Command-line front door: parse codes and motifs, run the maximal-motif,
//! canonical-form, prime, and polarization operations, and drive the
//! property suites. Results go to stdout, diagnostics to stderr.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use neural_codes::code::{max_mot_complement, Code};
use neural_codes::error::{Error, Result};
use neural_codes::ideal::{
    cf_of_pm_ideal, min_primes, neural_ideal_cf, primary_decomposition, CanonicalForm,
    MotivicPrime, PseudoMonomial, VariableSpace,
};
use neural_codes::motif::Motif;
use neural_codes::oracle::{exhaustive_codes, seeded_codes, ORACLE_MOTIF_CAP};
use neural_codes::polar::{formal_polarize, gjs_check, polarize_code, polarize_motif};
use neural_codes::verify::{all_ok, full_suite, gjs_suite, oracle_suite, Check};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "ncode", version, about = "Combinatorial codes, their vanishing ideals, and polarization")]
struct Cli {
    /// Code file, one word per line (`#` comments); stdin when omitted.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Emit JSON ({"n", "doubled", "motifs", "cf", "primes"} as applicable).
    #[arg(long, global = true)]
    json: bool,

    /// Suppress results; communicate through the exit status only.
    #[arg(long, global = true)]
    quiet: bool,

    /// Word length / space dimension (required when the input is empty).
    #[arg(long, global = true, value_name = "N")]
    n: Option<usize>,

    /// Treat input of even length 2n as a doubled space (X/Y variables).
    #[arg(long, global = true)]
    doubled: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Maximal motifs of the input code.
    Maxmot,
    /// Maximal motifs of the complement, from the code's own maximal motifs.
    ComplementMaxmot,
    /// Canonical form of the code's vanishing ideal.
    Cf,
    /// Canonical form of the ideal spanned by listed pseudo-monomials.
    CfIdeal,
    /// One motif sent to the doubled space.
    PolarizeMotif {
        /// Motif over 0/1/*, e.g. `1*0`.
        motif: String,
    },
    /// Word list of the polarized code.
    PolarizeCode,
    /// Word list of the formal polarization.
    FormalPolarize,
    /// Minimal primes of the code's vanishing ideal.
    Minprimes,
    /// Irredundant primary decomposition of the vanishing ideal.
    Decompose,
    /// Deactivation criterion for a doubled-space motif against the code.
    GjsCheck {
        /// Doubled-space motif of length 2n, `|` separator optional.
        #[arg(long)]
        motif: String,
    },
    /// Run the property suites over a code family.
    Verify {
        /// Every code of this length (1..=3).
        #[arg(long, value_name = "N", conflicts_with_all = ["random", "seed"])]
        exhaustive_n: Option<usize>,
        /// This many seeded random codes; needs --n and --seed.
        #[arg(long, value_name = "K")]
        random: Option<usize>,
        /// RNG seed for --random.
        #[arg(long, value_name = "S", requires = "random")]
        seed: Option<u64>,
    },
    /// Brute-force oracles against the fast paths on the input code.
    OracleCompare,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Usage errors exit 1; --help/--version land here with status 0.
            let status = u8::from(e.use_stderr());
            let _ = e.print();
            return ExitCode::from(status);
        }
    };
    match run(&cli) {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.cmd {
        Cmd::Maxmot => {
            let code = read_code(cli)?;
            let space = space_dim(code.len(), cli.doubled)?;
            emit_motifs(cli, space, &code.max_mot()?);
            Ok(0)
        }
        Cmd::ComplementMaxmot => {
            let code = read_code(cli)?;
            let space = space_dim(code.len(), cli.doubled)?;
            let mm = code.max_mot()?;
            emit_motifs(cli, space, &max_mot_complement(code.len(), &mm)?);
            Ok(0)
        }
        Cmd::Cf => {
            let code = read_code(cli)?;
            let space = space_dim(code.len(), cli.doubled)?;
            emit_cf(cli, space, &neural_ideal_cf(&code, space)?);
            Ok(0)
        }
        Cmd::CfIdeal => {
            let dim = cli
                .n
                .ok_or_else(|| Error::Parse("cf-ideal needs --n for the space dimension".into()))?;
            let space = space_dim(dim, cli.doubled)?;
            let gens = read_generators(cli, space)?;
            emit_cf(cli, space, &cf_of_pm_ideal(space, &gens)?);
            Ok(0)
        }
        Cmd::PolarizeMotif { motif } => {
            base_only(cli)?;
            let a = Motif::parse(motif)?;
            emit_motifs(cli, VariableSpace::doubled(a.len()), &[polarize_motif(&a)]);
            Ok(0)
        }
        Cmd::PolarizeCode => {
            base_only(cli)?;
            let code = read_code(cli)?;
            emit_words(cli, code.len(), &polarize_code(&code)?);
            Ok(0)
        }
        Cmd::FormalPolarize => {
            base_only(cli)?;
            let code = read_code(cli)?;
            emit_words(cli, code.len(), &formal_polarize(&code)?);
            Ok(0)
        }
        Cmd::Minprimes => {
            let code = read_code(cli)?;
            let space = space_dim(code.len(), cli.doubled)?;
            emit_primes(cli, space, &min_primes(&code, space)?);
            Ok(0)
        }
        Cmd::Decompose => {
            let code = read_code(cli)?;
            let space = space_dim(code.len(), cli.doubled)?;
            emit_primes(cli, space, &primary_decomposition(&code, space)?);
            Ok(0)
        }
        Cmd::GjsCheck { motif } => {
            base_only(cli)?;
            let code = read_code(cli)?;
            let g = gjs_check(&Motif::parse(motif)?, &code)?;
            if cli.json {
                let inactive: Vec<usize> = g.inactive.iter().copied().collect();
                say(
                    cli,
                    &json!({
                        "doubled": true,
                        "holds": g.holds,
                        "inactive": inactive,
                        "motifs": [g.partial_motif.to_string()],
                        "n": code.len(),
                    })
                    .to_string(),
                );
            } else {
                say(cli, &format!("holds {}", g.holds));
                say(cli, &format!("partial {}", g.partial_motif));
                let list: String = g.inactive.iter().map(|i| format!(" {i}")).collect();
                say(cli, &format!("inactive{list}"));
            }
            Ok(0)
        }
        Cmd::Verify { exhaustive_n, random, seed } => {
            let codes = verify_family(cli, *exhaustive_n, *random, *seed)?;
            let mut checks = full_suite(&codes)?;
            checks.extend(gjs_suite(&codes)?);
            report_checks(cli, &checks)
        }
        Cmd::OracleCompare => {
            let code = read_code(cli)?;
            if code.len() > ORACLE_MOTIF_CAP {
                return Err(Error::OverCap {
                    len: code.len(),
                    cap: ORACLE_MOTIF_CAP,
                    what: "oracle comparison",
                });
            }
            let checks = oracle_suite(&[code])?;
            report_checks(cli, &checks)
        }
    }
}

/// The code family `verify` runs over; exactly one selection mode.
fn verify_family(
    cli: &Cli,
    exhaustive_n: Option<usize>,
    random: Option<usize>,
    seed: Option<u64>,
) -> Result<Vec<Code>> {
    match (exhaustive_n, random) {
        (Some(k), None) => {
            if !(1..=3).contains(&k) {
                return Err(Error::Parse(
                    "--exhaustive-n supports 1..=3 (2^2^n codes beyond that)".into(),
                ));
            }
            Ok(exhaustive_codes(k))
        }
        (None, Some(count)) => {
            let n = cli.n.ok_or_else(|| Error::Parse("--random needs --n".into()))?;
            let seed = seed.ok_or_else(|| Error::Parse("--random needs --seed".into()))?;
            if !(1..=7).contains(&n) {
                return Err(Error::Parse("--random supports --n 1..=7".into()));
            }
            Ok(seeded_codes(n, count, seed))
        }
        _ => Err(Error::Parse(
            "verify needs exactly one of --exhaustive-n or --random".into(),
        )),
    }
}

/// Rejects `--doubled` for subcommands whose input lives in the base space.
fn base_only(cli: &Cli) -> Result<()> {
    if cli.doubled {
        return Err(Error::AlreadyDoubled);
    }
    Ok(())
}

/// The whole input: the `--input` file, or stdin.
fn read_input(cli: &Cli) -> Result<String> {
    match &cli.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            Ok(buf)
        }
    }
}

/// The input code, cross-checked against `--n` when given.
fn read_code(cli: &Cli) -> Result<Code> {
    let text = read_input(cli)?;
    let code = Code::parse_with_hint(&text, cli.n)?;
    if cli.doubled && !code.len().is_multiple_of(2) {
        return Err(Error::OddLength { len: code.len() });
    }
    Ok(code)
}

/// One pseudo-monomial per input line, same comment rules as code files.
fn read_generators(cli: &Cli, space: VariableSpace) -> Result<Vec<PseudoMonomial>> {
    let text = read_input(cli)?;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.find('#').map_or(raw, |at| &raw[..at]).trim();
        if line.is_empty() {
            continue;
        }
        let f = PseudoMonomial::parse(space, line)
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        gens.push(f);
    }
    Ok(gens)
}

/// The variable space for a `dim`-symbol rendering, split in half if doubled.
fn space_dim(dim: usize, doubled: bool) -> Result<VariableSpace> {
    if doubled {
        if !dim.is_multiple_of(2) {
            return Err(Error::OddLength { len: dim });
        }
        Ok(VariableSpace::doubled(dim / 2))
    } else {
        Ok(VariableSpace::plain(dim))
    }
}

fn say(cli: &Cli, text: &str) {
    if cli.quiet {
        return;
    }
    // A closed pipe downstream is the reader's way of saying "enough".
    if writeln!(std::io::stdout(), "{text}").is_err() {
        std::process::exit(0);
    }
}

/// Doubled spaces render motifs with the `|` separator.
fn motif_string(m: &Motif, space: VariableSpace) -> String {
    if space.is_doubled() {
        m.to_doubled_string()
    } else {
        m.to_string()
    }
}

fn emit_motifs(cli: &Cli, space: VariableSpace, motifs: &[Motif]) {
    if cli.json {
        let arr: Vec<String> = motifs.iter().map(|m| motif_string(m, space)).collect();
        say(
            cli,
            &json!({"doubled": space.is_doubled(), "motifs": arr, "n": space.n()}).to_string(),
        );
    } else {
        for m in motifs {
            say(cli, &motif_string(m, space));
        }
    }
}

/// Word lists are star-free, so they print without the `|` separator.
fn emit_words(cli: &Cli, base_n: usize, code: &Code) {
    if cli.json {
        let arr: Vec<String> = code.words().map(ToString::to_string).collect();
        say(cli, &json!({"doubled": true, "motifs": arr, "n": base_n}).to_string());
    } else {
        for w in code.words() {
            say(cli, &w.to_string());
        }
    }
}

fn emit_cf(cli: &Cli, space: VariableSpace, cf: &CanonicalForm) {
    if cli.json {
        let arr: Vec<String> = cf.terms().iter().map(PseudoMonomial::term_string).collect();
        say(
            cli,
            &json!({"cf": arr, "doubled": space.is_doubled(), "n": space.n()}).to_string(),
        );
    } else {
        for t in cf.terms() {
            say(cli, &t.term_string());
        }
    }
}

fn emit_primes(cli: &Cli, space: VariableSpace, primes: &[MotivicPrime]) {
    if cli.json {
        let arr: Vec<Vec<String>> = primes.iter().map(MotivicPrime::generator_strings).collect();
        say(
            cli,
            &json!({"doubled": space.is_doubled(), "n": space.n(), "primes": arr}).to_string(),
        );
    } else {
        for p in primes {
            say(cli, &p.to_string());
        }
    }
}

/// Prints per-check summaries; exit 2 signals a verification failure.
fn report_checks(cli: &Cli, checks: &[Check]) -> Result<u8> {
    if cli.json {
        let arr: Vec<Value> = checks
            .iter()
            .map(|c| json!({"checked": c.checked, "failures": c.failures, "name": c.name}))
            .collect();
        say(cli, &json!({"checks": arr, "ok": all_ok(checks)}).to_string());
    } else {
        for c in checks {
            say(cli, &c.summary());
        }
    }
    Ok(if all_ok(checks) { 0 } else { 2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_space_dim_splits_doubled() {
        assert_eq!(space_dim(6, true).unwrap(), VariableSpace::doubled(3));
        assert_eq!(space_dim(3, false).unwrap(), VariableSpace::plain(3));
        assert!(space_dim(3, true).is_err());
    }

    #[test]
    fn test_motif_string_separator() {
        let m = Motif::parse("0*1*").unwrap();
        assert_eq!(motif_string(&m, VariableSpace::doubled(2)), "0*|1*");
        assert_eq!(motif_string(&m, VariableSpace::plain(4)), "0*1*");
    }
}
