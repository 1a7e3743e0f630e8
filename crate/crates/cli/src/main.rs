//! `srcodes`: build, decode and analyse binary sum-rank codes with 2×2
//! blocks.
//!
//! Exit codes: 0 success, 1 construction or file error, 2 usage or domain
//! error, 3 search budget exceeded, 4 decoding failure.

mod load;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use srcodes::codes::{
    bch_build, cyclotomic_coset, default_locators, first_irreducible, goppa_build, min_distance_bruteforce, BaseField,
    BchSpec, DefiningSet, DEFAULT_BUDGET,
};
use srcodes::formats::{word_from_text, word_to_text, CodeFile};
use srcodes::gf2m::{weight, FieldContext, Poly};
use srcodes::srdec::{check_decoder_config, simulate, sr_decode, sr_oracle_decode, SimulationConfig, SrStatus};
use srcodes::sumrank::{
    decodable_gv_rate, embedding_gv_rate, entropy_q, gv_rate, singleton_bound, sr_encode, sr_min_distance_bruteforce,
    sumrank_weight,
};
use srcodes::{tables, Error, Fe};

#[derive(Parser)]
#[command(name = "srcodes", version, about = "Binary sum-rank codes with 2×2 blocks from quaternary components")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the cyclotomic coset of s under multiplication by q modulo n.
    Coset {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        q: usize,
        #[arg(long)]
        s: usize,
    },
    /// Build a quaternary BCH code and write its code file.
    BuildBch(BuildBch),
    /// Build a Goppa code over GF(2^m) and write its code file.
    BuildGoppa(BuildGoppa),
    /// Combine two code files into SR(C1, C2) and print its manifest.
    BuildSr {
        #[command(flatten)]
        pair: Pair,
        /// Write the manifest here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recompute a reference dimension table (CSV unless --pretty).
    Tables {
        /// 1, 2 or 3; all tables when omitted.
        #[arg(long)]
        table: Option<u8>,
        #[arg(long)]
        pretty: bool,
    },
    /// Print entropy and rate bounds over a grid of relative distances.
    Bounds {
        /// Comma-separated values or start:step:stop.
        #[arg(long, default_value = "0:0.01:0.24")]
        delta_grid: String,
    },
    /// Encode a message into a word of SR(C1, C2).
    Encode {
        #[command(flatten)]
        pair: Pair,
        /// Message bits as a 0/1 string, C1 bits first.
        #[arg(long, conflicts_with = "random")]
        message: Option<String>,
        /// Encode a random message drawn from the seed.
        #[arg(long)]
        random: bool,
        #[arg(long, env = "SRCODES_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decode a received word.
    Decode {
        #[command(flatten)]
        pair: Pair,
        /// Word file holding the received word.
        #[arg(long)]
        word: PathBuf,
        /// Target distance; defaults to the largest one the components support.
        #[arg(long)]
        d_sr: Option<usize>,
        /// Exhaustive nearest-codeword decoding instead of the reduction decoder.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write the decoded codeword here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Monte Carlo decoding over errors of fixed sum-rank weight.
    Simulate {
        #[command(flatten)]
        pair: Pair,
        /// Comma-separated sum-rank error weights.
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<usize>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, env = "SRCODES_SEED", default_value_t = 0)]
        seed: u64,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        d_sr: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Drop the timing column so output depends only on flags and seed.
        #[arg(long)]
        no_timing: bool,
    },
    /// Exact minimum distance by enumeration, with a minimum-weight codeword.
    Mindist {
        /// A single component: prints its Hamming distance.
        #[arg(long, conflicts_with_all = ["c1", "c2"])]
        code: Option<PathBuf>,
        #[arg(long, requires = "c2")]
        c1: Option<PathBuf>,
        #[arg(long, requires = "c1")]
        c2: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Args)]
struct Pair {
    /// Code file for C1, the x² coefficient.
    #[arg(long)]
    c1: PathBuf,
    /// Code file for C2, the x coefficient.
    #[arg(long)]
    c2: PathBuf,
}

#[derive(Args)]
struct BuildBch {
    /// Code length; must divide 4^h − 1 for some h ≤ 10.
    #[arg(long)]
    n: usize,
    /// Coset representatives of the defining set.
    #[arg(long, value_delimiter = ',', group = "zeros")]
    cosets: Option<Vec<usize>>,
    /// Exponents of the defining set (closed under multiplication by 4).
    #[arg(long, value_delimiter = ',', group = "zeros")]
    exponents: Option<Vec<usize>>,
    /// Designed distance δ: zeros α^b, …, α^(b+δ−2) and their conjugates.
    #[arg(long, group = "zeros")]
    designed: Option<usize>,
    #[arg(long, default_value_t = 1, requires = "designed")]
    b: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BuildGoppa {
    /// Extension degree of the locator field GF(2^m).
    #[arg(long)]
    m: u32,
    /// Field modulus in hex; the default table entry when omitted.
    #[arg(long, value_parser = parse_hex)]
    modulus: Option<u32>,
    /// Degree of the first irreducible Goppa polynomial to use.
    #[arg(long, group = "goppa_poly")]
    degree: Option<usize>,
    /// Explicit Goppa polynomial, coefficients in hex from the constant term.
    #[arg(long, value_delimiter = ',', value_parser = parse_hex, group = "goppa_poly")]
    poly: Option<Vec<u32>>,
    /// Keep only the first L locators.
    #[arg(long)]
    length: Option<usize>,
    /// Alphabet of the code: gf2 or gf4.
    #[arg(long, default_value = "gf2", value_parser = parse_base)]
    base: BaseField,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn parse_hex(s: &str) -> Result<u32, String> {
    u32::from_str_radix(s.trim_start_matches("0x"), 16).map_err(|e| format!("'{s}': {e}"))
}

fn parse_base(s: &str) -> Result<BaseField, String> {
    match s {
        "gf2" => Ok(BaseField::Gf2),
        "gf4" => Ok(BaseField::Gf4),
        _ => Err(format!("unknown base field '{s}'; use gf2 or gf4")),
    }
}

enum Failure {
    Lib(Error),
    Io(String),
    Usage(String),
    Decode(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Budget { .. }) => 3,
            Failure::Lib(Error::Range(_) | Error::Domain(_) | Error::Config(_)) | Failure::Usage(_) => 2,
            Failure::Lib(_) | Failure::Io(_) => 1,
            Failure::Decode(_) => 4,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(s) | Failure::Usage(s) | Failure::Decode(s) => f.write_str(s),
        }
    }
}

type Outcome = Result<(), Failure>;

fn emit(output: Option<&Path>, text: &str) -> Outcome {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn distance_label(d: Option<usize>) -> String {
    d.map_or_else(|| "\"inf\"".to_string(), |d| d.to_string())
}

fn cmd_coset(n: usize, q: usize, s: usize) -> Outcome {
    let c = cyclotomic_coset(s, q, n).map_err(|e| Failure::Usage(e.to_string()))?;
    println!("{}", c.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","));
    Ok(())
}

fn cmd_build_bch(a: BuildBch) -> Outcome {
    let spec = match (a.cosets, a.exponents, a.designed) {
        (Some(reps), _, _) => BchSpec::DefiningSet(DefiningSet::from_cosets(4, a.n, &reps)?),
        (_, Some(exps), _) => BchSpec::DefiningSet(DefiningSet::from_exponents(4, a.n, exps)?),
        (_, _, Some(delta)) => BchSpec::Designed { b: a.b, delta },
        _ => return Err(Failure::Usage("give one of --cosets, --exponents or --designed".into())),
    };
    let code = bch_build(a.n, spec)?;
    emit(a.output.as_deref(), &CodeFile::from_bch(&code).to_text())?;
    if a.output.is_some() {
        let c = code.code();
        println!("[{},{},{}] quaternary BCH code", c.length(), c.dimension(), code.defining_set().bch_bound());
    }
    Ok(())
}

fn cmd_build_goppa(a: BuildGoppa) -> Outcome {
    let field = match a.modulus {
        Some(m) => Arc::new(FieldContext::new(a.m, Some(m))?),
        None => FieldContext::shared(a.m)?,
    };
    let g = match (a.degree, a.poly) {
        (_, Some(coeffs)) => {
            Poly::from_coeffs(coeffs.into_iter().map(|c| field.element(c)).collect::<Result<Vec<Fe>, _>>()?)
        }
        (Some(r), None) => first_irreducible(&field, r)?,
        (None, None) => return Err(Failure::Usage("give --degree or --poly".into())),
    };
    let mut locators = default_locators(&field, &g);
    if let Some(len) = a.length {
        if len > locators.len() {
            return Err(Failure::Lib(Error::Construction(format!(
                "only {} locators avoid the roots of G",
                locators.len()
            ))));
        }
        locators.truncate(len);
    }
    let code = goppa_build(field, locators, g, a.base)?;
    emit(a.output.as_deref(), &CodeFile::from_goppa(&code).to_text())?;
    if a.output.is_some() {
        let c = code.code();
        let d = c.distance_lower_bound().unwrap_or(0);
        println!("[{},{},≥{}] {} Goppa code", c.length(), c.dimension(), d, a.base.as_str());
    }
    Ok(())
}

fn cmd_build_sr(pair: Pair, output: Option<PathBuf>) -> Outcome {
    let (_, _, code) = load::load_pair(&pair.c1, &pair.c2)?;
    let (d1, d2) = code.component_distances();
    let mut m = String::new();
    let _ = writeln!(m, "c1 = {:?}", pair.c1.display().to_string());
    let _ = writeln!(m, "c2 = {:?}", pair.c2.display().to_string());
    let _ = writeln!(m, "length = {}", code.length());
    let _ = writeln!(m, "f2_dimension = {}", code.f2_dimension());
    let _ = writeln!(m, "c1_f2_dimension = {}", code.c1().f2_dimension());
    let _ = writeln!(m, "c2_f2_dimension = {}", code.c2().f2_dimension());
    let _ = writeln!(m, "d1 = {}", distance_label(d1));
    let _ = writeln!(m, "d2 = {}", distance_label(d2));
    let _ = writeln!(m, "d_sr_lower = {}", distance_label(code.d_sr_lower()));
    let _ = writeln!(m, "decodable_distance = {}", distance_label(code.decodable_distance()));
    let _ = writeln!(m, "decoder_ready = {}", code.decoder_ready());
    if let Some(d) = code.d_sr_lower().filter(|&d| d <= 2 * code.length()) {
        let s = singleton_bound(code.length(), d)?;
        let _ = writeln!(m, "singleton_f2_dimension = {s}");
        let _ = writeln!(m, "singleton_gap = {}", s - code.f2_dimension());
    }
    emit(output.as_deref(), &m)
}

fn cmd_tables(table: Option<u8>, pretty: bool) -> Outcome {
    let which = table.map_or_else(|| vec![1, 2, 3], |t| vec![t]);
    let mut rows = Vec::new();
    for t in which {
        rows.extend(tables::table_rows(t)?);
    }
    print!("{}", tables::render(&rows, pretty));
    Ok(())
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, Failure> {
    let num =
        |s: &str| s.trim().parse::<f64>().map_err(|_| Failure::Usage(format!("bad number '{s}' in --delta-grid")));
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [start, step, stop] => {
            let (start, step, stop) = (num(start)?, num(step)?, num(stop)?);
            if step.is_nan() || step <= 0.0 || stop < start {
                return Err(Failure::Usage("grid needs step > 0 and stop ≥ start".into()));
            }
            let count = ((stop - start) / step + 1e-9).floor() as usize;
            Ok((0..=count).map(|i| start + i as f64 * step).collect())
        }
        [list] => list.split(',').map(num).collect(),
        _ => Err(Failure::Usage("--delta-grid takes a list or start:step:stop".into())),
    }
}

fn cmd_bounds(grid: &str) -> Outcome {
    let mut out = String::from("delta,h4_delta,h4_2delta,gv_rate,decodable_gv_rate,embedding_gv_rate\n");
    for delta in parse_grid(grid)? {
        let _ = writeln!(
            out,
            "{delta:.6},{:.12},{:.12},{:.12},{:.12},{:.12}",
            entropy_q(4.0, delta)?,
            entropy_q(4.0, 2.0 * delta)
                .map_err(|_| Error::Domain(format!("relative distance {delta} outside [0, 1/4)")))?,
            gv_rate(delta)?,
            decodable_gv_rate(delta)?,
            embedding_gv_rate(delta)?,
        );
    }
    print!("{out}");
    Ok(())
}

fn cmd_encode(pair: Pair, message: Option<String>, random: bool, seed: u64, output: Option<PathBuf>) -> Outcome {
    let (_, _, code) = load::load_pair(&pair.c1, &pair.c2)?;
    let k = code.f2_dimension();
    let bits: Vec<bool> = match (message, random) {
        (Some(m), _) => m
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Failure::Usage(format!("message symbol '{c}' is not a bit"))),
            })
            .collect::<Result<_, _>>()?,
        (None, true) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..k).map(|_| rng.gen()).collect()
        }
        (None, false) => return Err(Failure::Usage("give --message or --random".into())),
    };
    if bits.len() != k {
        return Err(Failure::Usage(format!("message has {} bits, the code needs {k}", bits.len())));
    }
    emit(output.as_deref(), &word_to_text(&sr_encode(&code, &bits)?))
}

fn target_distance(code: &srcodes::sumrank::SumRankCode, d_sr: Option<usize>) -> Result<usize, Failure> {
    d_sr.or(code.decodable_distance())
        .ok_or_else(|| Failure::Lib(Error::Config("no target distance meets the decoder preconditions".into())))
}

fn cmd_decode(
    pair: Pair,
    word: &Path,
    d_sr: Option<usize>,
    oracle: bool,
    budget: u64,
    output: Option<PathBuf>,
) -> Outcome {
    let (f1, f2, code) = load::load_pair(&pair.c1, &pair.c2)?;
    let text = std::fs::read_to_string(word).map_err(|e| Failure::Io(format!("{}: {e}", word.display())))?;
    let received = word_from_text(&text)?;
    let out = if oracle {
        sr_oracle_decode(&code, &received, budget)?
    } else {
        let d = target_distance(&code, d_sr)?;
        let (t1, t2) = load::required_radii(d);
        let dec1 = load::component_decoder(&f1, t1, budget)?;
        let dec2 = load::component_decoder(&f2, t2, budget)?;
        sr_decode(&code, dec1.as_ref(), dec2.as_ref(), &received, d)?
    };
    let branch = out.succeeded_branch.map_or_else(|| "none".to_string(), |b| b.symbol().to_string());
    println!("status = {}", out.status.as_str());
    println!("branch = {branch}");
    if out.status != SrStatus::Success {
        return Err(Failure::Decode(format!("decoding failed: {}", out.status.as_str())));
    }
    println!("error_weight = {}", sumrank_weight(&out.error));
    emit(output.as_deref(), &word_to_text(&out.codeword))
}

#[allow(clippy::too_many_arguments)]
fn cmd_simulate(
    pair: Pair,
    weights: Vec<usize>,
    trials: u64,
    seed: u64,
    jobs: usize,
    d_sr: Option<usize>,
    budget: u64,
    no_timing: bool,
) -> Outcome {
    let (f1, f2, code) = load::load_pair(&pair.c1, &pair.c2)?;
    let d = target_distance(&code, d_sr)?;
    let (t1, t2) = load::required_radii(d);
    let dec1 = load::component_decoder(&f1, t1, budget)?;
    let dec2 = load::component_decoder(&f2, t2, budget)?;
    check_decoder_config(&code, dec1.as_ref(), dec2.as_ref(), d)?;
    if let Some(&w) = weights.iter().find(|&&w| w > 2 * code.length()) {
        return Err(Failure::Usage(format!("weight {w} exceeds the maximum {}", 2 * code.length())));
    }
    let config = SimulationConfig { weights, trials, seed, jobs, d_sr: Some(d) };
    let rows = simulate(&code, dec1.as_ref(), dec2.as_ref(), &config)?;
    let csv = srcodes::srdec::tally_csv(&rows);
    if no_timing {
        for line in csv.lines() {
            println!("{}", line.rsplit_once(',').map_or(line, |(head, _)| head));
        }
    } else {
        print!("{csv}");
    }
    Ok(())
}

fn cmd_mindist(code: Option<PathBuf>, c1: Option<PathBuf>, c2: Option<PathBuf>, budget: u64) -> Outcome {
    match (code, c1, c2) {
        (Some(path), _, _) => {
            let file = CodeFile::load(&path)?;
            let cert = min_distance_bruteforce(&file.component, budget)?;
            println!("distance = {}", cert.distance);
            println!("witness = {}", srcodes::gf2m::to_symbols(&cert.witness));
            println!("witness_weight = {}", weight(&cert.witness));
            Ok(())
        }
        (None, Some(c1), Some(c2)) => {
            let (_, _, code) = load::load_pair(&c1, &c2)?;
            let cert = sr_min_distance_bruteforce(&code, budget)?;
            println!("distance = {}", cert.distance);
            print!("{}", word_to_text(&cert.witness));
            Ok(())
        }
        _ => Err(Failure::Usage("give --code, or both --c1 and --c2".into())),
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Coset { n, q, s } => cmd_coset(n, q, s),
        Command::BuildBch(a) => cmd_build_bch(a),
        Command::BuildGoppa(a) => cmd_build_goppa(a),
        Command::BuildSr { pair, output } => cmd_build_sr(pair, output),
        Command::Tables { table, pretty } => cmd_tables(table, pretty),
        Command::Bounds { delta_grid } => cmd_bounds(&delta_grid),
        Command::Encode { pair, message, random, seed, output } => cmd_encode(pair, message, random, seed, output),
        Command::Decode { pair, word, d_sr, oracle, budget, output } => {
            cmd_decode(pair, &word, d_sr, oracle, budget, output)
        }
        Command::Simulate { pair, weights, trials, seed, jobs, d_sr, budget, no_timing } => {
            cmd_simulate(pair, weights, trials, seed, jobs, d_sr, budget, no_timing)
        }
        Command::Mindist { code, c1, c2, budget } => cmd_mindist(code, c1, c2, budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
