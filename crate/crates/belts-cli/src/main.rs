//! `belts`: evaluate braid words, canonicalize belts, compute Jones
//! polynomials of knotted boundaries, identify knots, run census scans, and
//! print particle labels.

mod census;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use belts::braid::BraidWord;
use belts::canonical::{braid_only_word, CanonicalError};
use belts::halfint::HalfInt;
use belts::jones::{boundary_report, jones_closed, JonesError};
use belts::knot::{KnotTable, KnotTableError};
use belts::laurent::LaurentError;
use belts::particle::{
    check_family_row, family_hint, fermion_families, finkelstein_label, helon_charge, RotationSign,
};
use belts::twist::TwistVector;

use census::CensusError;

#[derive(Parser)]
#[command(
    name = "belts",
    version,
    about = "Exact algebra of braided 3-belts: twist invariants, canonical words, Jones polynomials of knotted boundaries",
    after_help = "Braid words are whitespace-separated tokens 1, 2, 3, -1, -2, -3 \
                  (leftmost token acts last). Twist values are integers or fractions \
                  over 2, e.g. `3/2 1/2 -1/2`. Knot names are Jones-polynomial \
                  consistent matches, not proofs of knot type."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format (csv applies to census only)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct TwistArgs {
    /// Three twist values, e.g. `3/2 1/2 -1/2`
    #[arg(num_args = 3, allow_hyphen_values = true, value_name = "TWIST")]
    twists: Vec<String>,
}

impl TwistArgs {
    fn parse(&self) -> Result<TwistVector, CliError> {
        self.twists
            .join(" ")
            .parse()
            .map_err(|e: belts::twist::ParseTwistError| CliError::Parse(e.to_string()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a braid word to its pure twist word
    Eval {
        /// Braid word tokens, e.g. `2 1` for σ₂σ₁ (may be empty)
        #[arg(num_args = 0.., allow_hyphen_values = true, value_name = "LETTER")]
        word: Vec<String>,
    },
    /// Canonical braid-only word of an orientable twist vector
    Braidword {
        #[command(flatten)]
        twists: TwistArgs,
        /// Re-evaluate the word and check it reproduces the input
        #[arg(long)]
        verify: bool,
    },
    /// Jones polynomial of the knotted boundary (all twists half-odd)
    Jones {
        #[command(flatten)]
        twists: TwistArgs,
    },
    /// Boundary link analysis: component count, knot flag, Jones value
    Boundary {
        #[command(flatten)]
        twists: TwistArgs,
    },
    /// Identify the boundary knot by Jones polynomial lookup
    Identify {
        #[command(flatten)]
        twists: TwistArgs,
        /// Merge extra knot records from a CSV file (name,exp:coef;...)
        #[arg(long, value_name = "FILE")]
        knot_table: Option<PathBuf>,
    },
    /// Particle mappings
    #[command(subcommand)]
    Particle(ParticleCommand),
    /// Enumerate knotted boundary classes
    Census {
        /// Enumerate all words of this odd length
        #[arg(long, conflicts_with_all = ["max_sum", "table1", "table2"])]
        length: Option<usize>,
        /// Keep only classes with this twist sum (with --length)
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["max_sum", "table1", "table2"])]
        sum: Option<String>,
        /// Enumerate all half-odd classes with entries and |sum| up to this bound
        #[arg(long, allow_hyphen_values = true)]
        max_sum: Option<String>,
        /// Shorthand for --length 3 --sum 3/2
        #[arg(long, conflicts_with_all = ["max_sum", "table2"])]
        table1: bool,
        /// Shorthand for --length 3 --sum 1/2
        #[arg(long, conflicts_with = "max_sum")]
        table2: bool,
        /// Keep raw ordered twist vectors instead of sorted classes
        #[arg(long)]
        no_orbit: bool,
        /// Merge extra knot records from a CSV file (name,exp:coef;...)
        #[arg(long, value_name = "FILE")]
        knot_table: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ParticleCommand {
    /// Helon charge readout of an integer twist vector
    Helon {
        #[command(flatten)]
        twists: TwistArgs,
    },
    /// Quantum-group label of a classical knot (crossings, writhe, rotation)
    Finkelstein {
        #[arg(value_name = "N")]
        crossings: i64,
        #[arg(value_name = "W", allow_hyphen_values = true)]
        writhe: i64,
        #[arg(value_name = "R", allow_hyphen_values = true)]
        rotation: i64,
        /// Use the minus sign choice m' = (-r+1)/2
        #[arg(long)]
        minus_r: bool,
    },
}

enum CliError {
    Io(String),
    Parse(String),
    NonOrientable(String),
    Unsupported(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::NonOrientable(_) => 3,
            CliError::Unsupported(_) => 4,
            CliError::Internal(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Io(m)
            | CliError::Parse(m)
            | CliError::NonOrientable(m)
            | CliError::Unsupported(m)
            | CliError::Internal(m) => m,
        }
    }
}

impl From<CanonicalError> for CliError {
    fn from(e: CanonicalError) -> Self {
        match e {
            CanonicalError::NonOrientable(_) => CliError::NonOrientable(e.to_string()),
            CanonicalError::NotPure(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<JonesError> for CliError {
    fn from(e: JonesError) -> Self {
        match e {
            JonesError::NotHalfOdd(_) => CliError::Unsupported(e.to_string()),
            JonesError::Laurent(inner) => CliError::from(inner),
        }
    }
}

impl From<LaurentError> for CliError {
    fn from(e: LaurentError) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<KnotTableError> for CliError {
    fn from(e: KnotTableError) -> Self {
        match e {
            KnotTableError::Io(_) => CliError::Io(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<CensusError> for CliError {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::EvenLength(_) => CliError::Parse(e.to_string()),
            CensusError::Jones(inner) => CliError::from(inner),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn require_not_csv(format: Format) -> Result<(), CliError> {
    if format == Format::Csv {
        return Err(CliError::Parse(
            "csv output is only available for the census command".into(),
        ));
    }
    Ok(())
}

fn load_table(extra: Option<&PathBuf>) -> Result<KnotTable, CliError> {
    let mut table = KnotTable::seeded();
    if let Some(path) = extra {
        table.merge_csv_file(path)?;
    }
    Ok(table)
}

fn parse_half(s: &str) -> Result<HalfInt, CliError> {
    s.parse()
        .map_err(|e: belts::halfint::ParseHalfIntError| CliError::Parse(e.to_string()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Eval { word } => {
            require_not_csv(cli.format)?;
            let word: BraidWord = word
                .join(" ")
                .parse()
                .map_err(|e: belts::braid::ParseWordError| CliError::Parse(e.to_string()))?;
            let t = word.evaluate_from_zero();
            let perm = word.permutation();
            match cli.format {
                Format::Json => print_json(&json!({
                    "word": word.to_string(),
                    "twists": t.to_string(),
                    "doubled": t.entries().map(|e| e.doubled()),
                    "orientable": t.is_orientable(),
                    "pure": t.is_pure(),
                    "permutation": perm.to_string(),
                })),
                _ => {
                    println!("{t}");
                    println!("orientable={}", t.is_orientable());
                    println!("pure={}", t.is_pure());
                    println!("permutation={perm}");
                }
            }
        }
        Command::Braidword { twists, verify } => {
            require_not_csv(cli.format)?;
            let t = twists.parse()?;
            let word = braid_only_word(t)?;
            if verify && word.evaluate_from_zero() != t {
                return Err(CliError::Internal(format!(
                    "canonical word `{word}` does not evaluate back to {t}"
                )));
            }
            match cli.format {
                Format::Json => print_json(&json!({
                    "twists": t.to_string(),
                    "word": word.to_string(),
                    "length": word.len(),
                    "verified": verify.then_some(true),
                })),
                _ => {
                    println!("{word}");
                    if verify {
                        println!("ok: evaluates to {t}");
                    }
                }
            }
        }
        Command::Jones { twists } => {
            require_not_csv(cli.format)?;
            let t = twists.parse()?;
            let v = jones_closed(t)?;
            match cli.format {
                Format::Json => print_json(&json!({
                    "twists": t.to_string(),
                    "jones": v,
                    "jones_text": v.to_string(),
                })),
                _ => println!("{v}"),
            }
        }
        Command::Boundary { twists } => {
            require_not_csv(cli.format)?;
            let t = twists.parse()?;
            let report = boundary_report(t)?;
            match cli.format {
                Format::Json => print_json(&json!({
                    "twists": t.to_string(),
                    "components": report.components,
                    "knot": report.is_knot,
                    "orientable": t.is_orientable(),
                    "jones": report.jones,
                    "jones_text": report.jones.as_ref().map(|v| v.to_string()),
                })),
                _ => {
                    println!("components={}", report.components);
                    println!("knot={}", report.is_knot);
                    println!("orientable={}", t.is_orientable());
                    match &report.jones {
                        Some(v) => println!("jones={v}"),
                        None if report.is_knot => println!("jones=unsupported"),
                        None => {}
                    }
                }
            }
        }
        Command::Identify { twists, knot_table } => {
            require_not_csv(cli.format)?;
            let t = twists.parse()?;
            let table = load_table(knot_table.as_ref())?;
            let v = jones_closed(t)?;
            let name = table.identify(&v);
            match cli.format {
                Format::Json => print_json(&json!({
                    "twists": t.to_string(),
                    "jones": v,
                    "jones_text": v.to_string(),
                    "name": name,
                })),
                _ => println!("{}", name.as_deref().unwrap_or("unidentified")),
            }
        }
        Command::Particle(cmd) => run_particle(cmd, cli.format)?,
        Command::Census {
            length,
            sum,
            max_sum,
            table1,
            table2,
            no_orbit,
            knot_table,
        } => {
            let table = load_table(knot_table.as_ref())?;
            let orbit = !no_orbit;
            let rows = if table1 {
                census::census_by_length(3, Some(HalfInt::from_doubled(3)), orbit, &table)?
            } else if table2 {
                census::census_by_length(3, Some(HalfInt::from_doubled(1)), orbit, &table)?
            } else if let Some(bound) = max_sum {
                if length.is_some() || sum.is_some() {
                    return Err(CliError::Parse(
                        "--max-sum cannot be combined with --length/--sum".into(),
                    ));
                }
                let bound = parse_half(&bound)?;
                if bound.is_integer() || bound.doubled() <= 0 {
                    return Err(CliError::Parse(
                        "--max-sum must be a positive half-odd bound like 9/2".into(),
                    ));
                }
                census::census_by_max_sum(bound, orbit, &table)?
            } else if let Some(n) = length {
                let sum_filter = sum.as_deref().map(parse_half).transpose()?;
                census::census_by_length(n, sum_filter, orbit, &table)?
            } else {
                return Err(CliError::Parse(
                    "census needs one of --length, --max-sum, --table1, --table2".into(),
                ));
            };
            match cli.format {
                Format::Csv => print!("{}", census::to_csv(&rows)),
                Format::Json => print_json(&census::to_json(&rows)),
                Format::Text => print!("{}", census::to_text(&rows)),
            }
        }
    }
    Ok(())
}

fn run_particle(cmd: ParticleCommand, format: Format) -> Result<(), CliError> {
    require_not_csv(format)?;
    match cmd {
        ParticleCommand::Helon { twists } => {
            let t = twists.parse()?;
            let a = helon_charge(t).map_err(|e| CliError::Unsupported(e.to_string()))?;
            match format {
                Format::Json => print_json(&json!({
                    "twists": t.to_string(),
                    "charge_thirds": a.charge_thirds,
                    "charge": a.charge().to_string(),
                    "kind": a.kind.to_string(),
                    "no_charge_mixing": a.no_charge_mixing,
                })),
                _ => {
                    println!("charge={} e", a.charge());
                    println!("kind={}", a.kind);
                    println!("no_charge_mixing={}", a.no_charge_mixing);
                }
            }
        }
        ParticleCommand::Finkelstein {
            crossings,
            writhe,
            rotation,
            minus_r,
        } => {
            let sign = if minus_r {
                RotationSign::Minus
            } else {
                RotationSign::Plus
            };
            let label = finkelstein_label(crossings, writhe, rotation, sign);
            let family = (crossings == 3)
                .then(|| family_hint(writhe, rotation))
                .flatten();
            // published-table comparison, when this is one of the four rows
            let row_check = fermion_families()
                .into_iter()
                .find(|r| crossings == 3 && r.writhe == writhe && r.rotation == rotation)
                .map(check_family_row);
            match format {
                Format::Json => print_json(&json!({
                    "N": label.crossings,
                    "w": label.writhe,
                    "r": label.rotation,
                    "j": label.j.to_string(),
                    "m": label.m.to_string(),
                    "m_prime": label.m_prime.to_string(),
                    "Q": label.charge().to_string(),
                    "family_hint": family.map(|f| f.to_string()),
                    "table_check": row_check.map(|c| json!({
                        "quoted_m_prime": c.row.quoted_m_prime.to_string(),
                        "m_prime_consistent": c.m_prime_consistent,
                        "quoted_charge": c.row.quoted_charge.to_string(),
                        "charge_consistent": c.charge_consistent,
                    })),
                })),
                _ => {
                    println!("j={} m={} m_prime={}", label.j, label.m, label.m_prime);
                    println!("Q={} e", label.charge());
                    if let Some(f) = family {
                        println!("family={f}");
                    }
                    if let Some(c) = row_check {
                        if !c.m_prime_consistent {
                            println!(
                                "note: published table quotes m_prime={} for this row, (r+1)/2 gives {}",
                                c.row.quoted_m_prime, c.label.m_prime
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON output")
    );
}
