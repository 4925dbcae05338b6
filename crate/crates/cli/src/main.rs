use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use alternant::codespec::{load_code, SpecError};
use alternant::demo;
use alternant::linalg::Vector;
use alternant::oracle::{brute_force_decode, min_distance, verify_structure, BruteForce, OracleBudget, OracleError};
use alternant::pgz::{decode, rd_error_vector, Algorithm, DecodeReport};
use alternant::AlternantCode;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Parser, Debug)]
#[command(name = "alternant", version, about = "Alternant codes and PGZ decoding over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print n, k, r, t, the distance bound and the rate of a code
    Params(CodeArg),
    /// Encode messages of length k, one per line
    Encode(Stream),
    /// Add seeded random errors of a fixed weight
    Corrupt(CorruptArgs),
    /// Decode received vectors, one per line
    Decode(DecodeArgs),
    /// Check the bundled worked examples
    Demo,
    /// Time PGZ against PGZm on seeded random errors
    Bench(BenchArgs),
    /// Cross-check the decoders against brute-force search
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
struct CodeArg {
    /// Code-spec TOML file
    #[arg(long)]
    code: PathBuf,
}

#[derive(Args, Debug)]
struct Stream {
    #[command(flatten)]
    code: CodeArg,
    /// Input vectors (default: stdin)
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output file (default: stdout)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CorruptArgs {
    #[command(flatten)]
    stream: Stream,
    #[arg(long)]
    seed: u64,
    /// Number of errors per vector (default: t)
    #[arg(long)]
    weight: Option<usize>,
}

#[derive(Args, Debug)]
struct DecodeArgs {
    #[command(flatten)]
    stream: Stream,
    #[arg(long, value_enum, default_value_t = Alg::Pgz)]
    alg: Alg,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[command(flatten)]
    code: CodeArg,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Only this weight (default: every weight 1..=t)
    #[arg(long)]
    weight: Option<usize>,
}

#[derive(Args, Debug)]
struct SelftestArgs {
    #[command(flatten)]
    code: CodeArg,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Maximum number of candidates the brute-force search may enumerate
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Alg {
    Pgz,
    Pgzm,
}

impl From<Alg> for Algorithm {
    fn from(a: Alg) -> Algorithm {
        match a {
            Alg::Pgz => Algorithm::Pgz,
            Alg::Pgzm => Algorithm::Pgzm,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Budget(#[from] OracleError),
    #[error("{0}")]
    Io(String),
    #[error("line {line}: {msg}")]
    Input { line: usize, msg: String },
    /// Decode failures; the reasons were already written to stderr.
    #[error("{0} vector(s) could not be decoded")]
    Decode(usize),
    #[error("{0}")]
    Check(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Spec(_) => 3,
            CliError::Budget(OracleError::BudgetExceeded { .. } | OracleError::Timeout(_)) => 4,
            CliError::Decode(_) => 2,
            _ => 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Params(a) => params(&a),
        Command::Encode(a) => encode(&a),
        Command::Corrupt(a) => corrupt(&a),
        Command::Decode(a) => decode_cmd(&a),
        Command::Demo => run_demo(),
        Command::Bench(a) => bench(&a),
        Command::Selftest(a) => selftest(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("alternant: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| CliError::Io(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(e.to_string()))?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string())),
    }
}

/// Non-blank lines parsed as vectors over `field`, with 1-based line numbers.
fn read_vectors(s: &Stream, field: &alternant::Field, len: usize) -> Result<Vec<Vector>, CliError> {
    let text = read_input(s.input.as_deref())?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let v = Vector::parse(field, line).map_err(|e| CliError::Input { line: i + 1, msg: e.to_string() })?;
        if v.len() != len {
            return Err(CliError::Input { line: i + 1, msg: format!("expected {len} entries, got {}", v.len()) });
        }
        out.push(v);
    }
    Ok(out)
}

fn params(a: &CodeArg) -> Result<(), CliError> {
    let c = load_code(&a.code)?;
    let (n, k) = (c.n(), c.dimension());
    println!("code: {}", c.label());
    println!("field: {} over {}", c.ext_field().describe(), c.base_field());
    println!("n={n} k={k} t={} rate={k}/{n}", c.t());
    let d = if c.kind().is_mds() { "d" } else { "d>" };
    println!("r={} {d}={}", c.r(), c.distance_bound());
    println!("{}", c.parameters());
    Ok(())
}

fn encode(s: &Stream) -> Result<(), CliError> {
    let c = load_code(&s.code.code)?;
    let mut out = String::new();
    for m in read_vectors(s, c.base_field(), c.dimension())? {
        let x = c.encode(&m).map_err(|e| CliError::Check(e.to_string()))?;
        out.push_str(&format!("{x}\n"));
    }
    write_output(s.out.as_deref(), &out)
}

fn corrupt(a: &CorruptArgs) -> Result<(), CliError> {
    let c = load_code(&a.stream.code.code)?;
    let w = a.weight.unwrap_or(c.t());
    if w > c.n() {
        return Err(CliError::Check(format!("weight {w} exceeds length {}", c.n())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut out = String::new();
    for x in read_vectors(&a.stream, c.base_field(), c.n())? {
        let e = rd_error_vector(c.base_field(), c.n(), w, &mut rng);
        let y = x.add(&e).map_err(|e| CliError::Check(e.to_string()))?;
        out.push_str(&format!("{y}\n"));
    }
    write_output(a.stream.out.as_deref(), &out)
}

fn decode_cmd(a: &DecodeArgs) -> Result<(), CliError> {
    let c = load_code(&a.stream.code.code)?;
    // entries may be written over the extension as long as they lie in K
    let received = read_vectors(&a.stream, c.ext_field(), c.n())?;
    let mut out = String::new();
    let mut failures = 0;
    for (i, y) in received.iter().enumerate() {
        let rep = decode(a.alg.into(), y, &c).map_err(|e| CliError::Input { line: i + 1, msg: e.to_string() })?;
        if let Some(reason) = rep.failure() {
            eprintln!("vector {}: {} ({reason:?})", i + 1, rep.summary_line());
            failures += 1;
        }
        out.push_str(&rep.render());
        out.push('\n');
    }
    write_output(a.stream.out.as_deref(), &out)?;
    if failures > 0 {
        Err(CliError::Decode(failures))
    } else {
        Ok(())
    }
}

fn run_demo() -> Result<(), CliError> {
    let outcomes = demo::run_all(&demo::cases());
    let mut total = Duration::ZERO;
    for o in &outcomes {
        print!("{o}");
        total += o.elapsed;
    }
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    println!("{} cases, {failed} failed, {total:.2?}", outcomes.len());
    if failed > 0 {
        Err(CliError::Check(format!("{failed} demo case(s) failed")))
    } else {
        Ok(())
    }
}

fn random_codeword(c: &AlternantCode, rng: &mut ChaCha8Rng) -> Vector {
    let base = c.base_field();
    let msg: Vec<_> = (0..c.dimension()).map(|_| base.element(rng.random_range(0..base.order())).unwrap()).collect();
    c.encode(&Vector::new(base, msg)).expect("message has length k")
}

fn same_outcome(a: &DecodeReport, b: &DecodeReport) -> bool {
    a.status == b.status && a.positions == b.positions && a.values == b.values
}

struct Timing {
    mean: Duration,
    median: Duration,
}

fn timing(mut samples: Vec<Duration>) -> Timing {
    samples.sort_unstable();
    let total: Duration = samples.iter().sum();
    Timing { mean: total / samples.len() as u32, median: samples[samples.len() / 2] }
}

fn bench(a: &BenchArgs) -> Result<(), CliError> {
    let c = load_code(&a.code.code)?;
    let weights: Vec<usize> = match a.weight {
        Some(w) if w == 0 || w > c.t() => return Err(CliError::Check(format!("weight must be in 1..={}", c.t()))),
        Some(w) => vec![w],
        None => (1..=c.t()).collect(),
    };
    println!("{} trials per weight, seed {}", a.trials, a.seed);
    println!("{:>3}  {:<5} {:>12} {:>12}", "w", "alg", "mean", "median");
    if a.trials == 0 {
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut mismatches = 0;
    for w in weights {
        let mut times = [Vec::with_capacity(a.trials), Vec::with_capacity(a.trials)];
        for _ in 0..a.trials {
            let x = random_codeword(&c, &mut rng);
            let y = x.add(&rd_error_vector(c.base_field(), c.n(), w, &mut rng)).expect("same field");
            let mut reps = Vec::with_capacity(2);
            for (slot, alg) in [Algorithm::Pgz, Algorithm::Pgzm].into_iter().enumerate() {
                let start = Instant::now();
                let rep = decode(alg, &y, &c).expect("well-formed input");
                times[slot].push(start.elapsed());
                reps.push(rep);
            }
            if !same_outcome(&reps[0], &reps[1]) {
                mismatches += 1;
            }
        }
        for (alg, samples) in [Algorithm::Pgz, Algorithm::Pgzm].into_iter().zip(times) {
            let t = timing(samples);
            println!("{w:>3}  {:<5} {:>12.2?} {:>12.2?}", alg.prefix(), t.mean, t.median);
        }
    }
    if mismatches > 0 {
        return Err(CliError::Check(format!("PGZ and PGZm disagreed on {mismatches} trial(s)")));
    }
    Ok(())
}

fn selftest(a: &SelftestArgs) -> Result<(), CliError> {
    let c = load_code(&a.code.code)?;
    let budget = OracleBudget { max_count: a.budget, max_duration: None };
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut bad = 0;
    println!("{} {}", c.label(), c.parameters());
    for w in 1..=c.t() {
        let mut agree = 0;
        for _ in 0..a.trials {
            let x = random_codeword(&c, &mut rng);
            let e = rd_error_vector(c.base_field(), c.n(), w, &mut rng);
            let y = x.add(&e).expect("same field");
            let oracle = brute_force_decode(&c, &y, c.t(), budget)?;
            let mut ok = oracle == BruteForce::Found(e.clone());
            for alg in [Algorithm::Pgz, Algorithm::Pgzm] {
                let rep = decode(alg, &y, &c).expect("well-formed input");
                let s = rep.hankel.clone().expect("nonzero syndrome");
                ok &= rep.corrected.as_ref() == Some(&x) && verify_structure(&s, &rep, &c);
            }
            if ok {
                agree += 1;
            } else {
                bad += 1;
            }
        }
        println!("w={w} trials={} agree={agree}", a.trials);
    }
    match min_distance(&c, budget) {
        Ok(d) => {
            println!("min distance {d} (bound {})", c.distance_bound());
            if d < c.distance_bound() {
                bad += 1;
            }
        }
        Err(e) => println!("min distance skipped: {e}"),
    }
    if bad > 0 {
        Err(CliError::Check(format!("{bad} check(s) disagreed with brute force")))
    } else {
        Ok(())
    }
}
