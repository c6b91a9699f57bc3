//! Command-line front end: prime search, power tables, code construction,
//! encode/corrupt/decode, and the verification suite.
//!
//! Exit codes: 0 ok, 1 usage/parse/precondition failure, 2 uncorrectable
//! received word, 3 verification failure.

mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qmcodes_core::arith;
use qmcodes_core::{
    decode, parse_word, word_text, CodeSpec, DecodeStatus, K1Element, Modulus, SyndromeTable,
};

#[derive(Parser)]
#[command(
    name = "qmcodes",
    about = "Cyclic codes over quaternion integer rings, exactly",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Represent a rational prime p as a prime element of H(K1).
    Prime {
        #[arg(long)]
        p: i64,
    },
    /// Print the power table of a generator of the unit group mod pi^power.
    Table {
        /// Prime element, e.g. `2,1` or `2+1w`.
        #[arg(long, allow_hyphen_values = true)]
        pi: String,
        #[arg(long, default_value_t = 2)]
        power: u32,
        /// Optional generator candidate to pin, e.g. `1,-1w`.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Number of rows; defaults to the unit group order.
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the length p(p-1)/2 code over H(K1) mod pi^2 and write its spec.
    Build {
        #[arg(long, allow_hyphen_values = true)]
        pi: String,
        #[arg(long, default_value_t = 2)]
        power: u32,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build the length phi(p_target) code over H(K1) mod pi1*pi2.
    BuildCrt {
        #[arg(long, allow_hyphen_values = true)]
        pi1: String,
        #[arg(long, allow_hyphen_values = true)]
        pi2: String,
        /// Which prime sets the length: 1 or 2.
        #[arg(long)]
        target: u8,
        #[arg(long)]
        out: PathBuf,
    },
    /// Encode a message polynomial with a built code.
    Encode {
        #[arg(long)]
        code: PathBuf,
        /// Up to n-1 comma-separated coefficients, constant term first.
        #[arg(long, allow_hyphen_values = true)]
        message: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Add a +1/-1 error to a word, at a chosen or seeded-random position.
    Corrupt {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        pos: Option<usize>,
        /// `+1` or `-1`; random when omitted.
        #[arg(long, allow_hyphen_values = true)]
        sign: Option<String>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Syndrome-decode a received word.
    Decode {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the oracle suite and per-code checks; exit 3 on any failure.
    Verify {
        #[arg(long)]
        code: Option<PathBuf>,
        /// Random messages per decode round-trip batch.
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

fn run(cli: Cli) -> CliResult<u8> {
    match cli.cmd {
        Cmd::Prime { p } => cmd_prime(p),
        Cmd::Table {
            pi,
            power,
            alpha,
            limit,
            out,
        } => cmd_table(&pi, power, alpha.as_deref(), limit, out.as_deref()),
        Cmd::Build {
            pi,
            power,
            alpha,
            out,
        } => cmd_build(&pi, power, alpha.as_deref(), &out),
        Cmd::BuildCrt {
            pi1,
            pi2,
            target,
            out,
        } => cmd_build_crt(&pi1, &pi2, target, &out),
        Cmd::Encode { code, message, out } => cmd_encode(&code, &message, out.as_deref()),
        Cmd::Corrupt {
            code,
            word,
            pos,
            sign,
            seed,
            out,
        } => cmd_corrupt(&code, &word, pos, sign.as_deref(), seed, out.as_deref()),
        Cmd::Decode { code, word, out } => cmd_decode(&code, &word, out.as_deref()),
        Cmd::Verify { code, trials, seed } => cmd_verify(code.as_deref(), trials, seed),
    }
}

/// Writes a one-or-more-line payload to --out or stdout.
fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn parse_element(s: &str) -> CliResult<K1Element> {
    Ok(s.parse::<K1Element>()?)
}

fn load_code(path: &Path) -> CliResult<CodeSpec> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Ok(CodeSpec::from_json_str(&text)?)
}

fn cmd_prime(p: i64) -> CliResult<u8> {
    if !arith::is_prime(p) {
        return Err(format!("{p} is not a rational prime").into());
    }
    match qmcodes_core::represent_prime(p) {
        Some(pi) => {
            println!("pi = {pi}  (norm {})", pi.norm());
            Ok(0)
        }
        None => Err(format!("no H(K1) representation for p = {p}").into()),
    }
}

fn cmd_table(
    pi: &str,
    power: u32,
    alpha: Option<&str>,
    limit: Option<u64>,
    out: Option<&Path>,
) -> CliResult<u8> {
    let pi = parse_element(pi)?;
    let modulus = Modulus::prime_power(pi, power)?;
    let candidate = alpha.map(parse_element).transpose()?;
    let root = modulus.find_primitive_root(candidate)?;
    let limit = limit.unwrap_or(modulus.unit_group_order());
    let mut rows = Vec::with_capacity(limit as usize);
    let mut power_of_root = modulus.one();
    for s in 0..limit {
        rows.push(format!("{s}\t{}", power_of_root.rep()));
        power_of_root = &power_of_root * &root;
    }
    emit(out, &rows.join("\n"))?;
    Ok(0)
}

fn cmd_build(pi: &str, power: u32, alpha: Option<&str>, out: &Path) -> CliResult<u8> {
    if power != 2 {
        return Err("the prime-square family is built with --power 2".into());
    }
    let pi = parse_element(pi)?;
    let candidate = alpha.map(parse_element).transpose()?;
    let code = CodeSpec::build_pi2(pi, candidate)?;
    fs::write(out, format!("{}\n", code.to_json_string()))?;
    eprintln!(
        "wrote {} (length {}, ring norm {})",
        out.display(),
        code.length(),
        code.ring().norm()
    );
    Ok(0)
}

fn cmd_build_crt(pi1: &str, pi2: &str, target: u8, out: &Path) -> CliResult<u8> {
    let pi1 = parse_element(pi1)?;
    let pi2 = parse_element(pi2)?;
    let code = CodeSpec::build_crt(pi1, pi2, target)?;
    fs::write(out, format!("{}\n", code.to_json_string()))?;
    eprintln!(
        "wrote {} (length {}, ring norm {})",
        out.display(),
        code.length(),
        code.ring().norm()
    );
    Ok(0)
}

fn cmd_encode(code: &Path, message: &str, out: Option<&Path>) -> CliResult<u8> {
    let code = load_code(code)?;
    let msg = parse_word(code.ring(), message, code.length() - 1)?;
    let word = code.encode(&msg)?;
    emit(out, &word_text(&word))?;
    Ok(0)
}

fn parse_sign(s: &str) -> CliResult<K1Element> {
    match s {
        "+1" | "1" | "+" => Ok(K1Element::ONE),
        "-1" | "-" => Ok(K1Element::MINUS_ONE),
        other => Err(format!("sign must be +1 or -1, got {other:?}").into()),
    }
}

fn fmt_error_value(v: K1Element) -> String {
    match v {
        K1Element::ONE => "+1".into(),
        K1Element::MINUS_ONE => "-1".into(),
        other => other.to_string(),
    }
}

fn cmd_corrupt(
    code: &Path,
    word: &str,
    pos: Option<usize>,
    sign: Option<&str>,
    seed: u64,
    out: Option<&Path>,
) -> CliResult<u8> {
    let code = load_code(code)?;
    let n = code.length();
    let mut received = parse_word(code.ring(), word, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pos = match pos {
        Some(p) if p < n => p,
        Some(p) => return Err(format!("position {p} out of range 0..{n}").into()),
        None => rng.random_range(0..n),
    };
    let value = match sign {
        Some(s) => parse_sign(s)?,
        None => {
            if rng.random_bool(0.5) {
                K1Element::ONE
            } else {
                K1Element::MINUS_ONE
            }
        }
    };
    received[pos] = &received[pos] + &code.ring().reduce(value);
    eprintln!("injected: {} @ {pos}", fmt_error_value(value));
    emit(out, &word_text(&received))?;
    Ok(0)
}

fn cmd_decode(code: &Path, word: &str, out: Option<&Path>) -> CliResult<u8> {
    let code = load_code(code)?;
    let received = parse_word(code.ring(), word, code.length())?;
    let table = SyndromeTable::build(&code, None)?;
    let result = decode(&code, &table, &received)?;
    let status_line = match result.status {
        DecodeStatus::Clean => "clean".to_string(),
        DecodeStatus::Corrected => {
            let (pos, value) = result.error.expect("corrected result carries its error");
            format!("corrected: yes  error: {} @ {pos}", fmt_error_value(value))
        }
        DecodeStatus::Uncorrectable => "uncorrectable".to_string(),
    };
    emit(out, &format!("{status_line}\n{}", word_text(&result.corrected)))?;
    Ok(if result.status == DecodeStatus::Uncorrectable {
        2
    } else {
        0
    })
}

fn cmd_verify(code: Option<&Path>, trials: u64, seed: u64) -> CliResult<u8> {
    let code = match code {
        Some(path) => load_code(path)?,
        // The stock demonstration code: p = 7, generator 1-1w.
        None => CodeSpec::build_pi2(K1Element::new(2, 1), Some(K1Element::new(1, -1)))?,
    };
    if verify::run(&code, trials, seed) {
        println!("verification passed");
        Ok(0)
    } else {
        println!("verification FAILED");
        Ok(3)
    }
}
