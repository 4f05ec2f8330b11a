//! Command-line interface for h-fold sumset computations: representation
//! counts, threshold sumsets, fringe structure, Frobenius numbers, duality,
//! corpus verification, and explicit witnesses.
//!
//! Exit codes: 0 = success (including principled "empty for all folds"
//! answers), 1 = a verification check was falsified, 2 = usage or parameter
//! error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hfold::{
    check_duality_sweep, check_inclusion_lemma_sweep, check_interval_lemma_sweep,
    construct_witnesses, denormalize_sumset, dual_fringes, dual_set, extract_fringes,
    frobenius_sequence, normalize, parse_set_literal, rep_count_table, sample_sets,
    threshold_bounds, threshold_sumset, verify_structure, CountMode, Error, FringeOutcome,
    FringeReport, NormalizationRecord, NormalizedSet, RawSet,
};

#[derive(Parser)]
#[command(
    name = "hfold",
    version,
    about = "h-fold sumsets, threshold structure, and generalized Frobenius numbers",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Cap argument for `repr`: a positive integer or the word `exact`.
#[derive(Clone, Copy)]
enum CapArg {
    Exact,
    Capped(u32),
}

fn parse_cap(s: &str) -> Result<CapArg, String> {
    if s.eq_ignore_ascii_case("exact") {
        return Ok(CapArg::Exact);
    }
    match s.parse::<u32>() {
        Ok(v) if v >= 1 => Ok(CapArg::Capped(v)),
        _ => Err(String::from("must be a positive integer or 'exact'")),
    }
}

fn positive_u32() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..)
}

#[derive(Subcommand)]
enum Command {
    /// Print the representation-count table n -> r_{A,h}(n)
    Repr {
        /// Set literal: comma-separated integers, e.g. "0,2,3"
        #[arg(long)]
        set: String,
        /// Number of summands h
        #[arg(long, value_parser = positive_u32())]
        h: u32,
        /// Count cap (saturating) or "exact" for arbitrary precision
        #[arg(long, default_value = "exact", value_parser = parse_cap)]
        cap: CapArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the threshold sumset (hA)^(t) = { n : r_{A,h}(n) >= t }
    Sumset {
        #[arg(long)]
        set: String,
        #[arg(long, value_parser = positive_u32())]
        h: u32,
        /// Representation threshold t
        #[arg(long, default_value_t = 1, value_parser = positive_u32())]
        t: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute the fringe decomposition of (hA)^(t) with a verified h-range
    Structure {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 1, value_parser = positive_u32())]
        t: u32,
        /// Verify the decomposition for h in [h_t, h_t + WINDOW]
        #[arg(long, default_value_t = 2)]
        verify_window: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the generalized Frobenius numbers FN_1(A) .. FN_t(A)
    Frobenius {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 1, value_parser = positive_u32())]
        t: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a randomized verification sweep over a corpus of sampled sets
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of distinct sets to sample
        #[arg(long, default_value_t = 25)]
        count: usize,
        /// Largest number of nonzero elements per sampled set
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        /// Largest allowed element value in sampled sets
        #[arg(long, default_value_t = 10)]
        a_max: i64,
        /// Check thresholds t = 1 .. t_max
        #[arg(long, default_value_t = 2, value_parser = positive_u32())]
        t_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the dual set A* = max(A) - A and its fringe structure
    Dual {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 1, value_parser = positive_u32())]
        t: u32,
        /// Verify the dual decomposition for h in [h_t, h_t + WINDOW]
        #[arg(long, default_value_t = 2)]
        verify_window: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Construct t explicit representations of n as a sum of h elements
    Witness {
        #[arg(long)]
        set: String,
        /// Target value, in the coordinate space of the input set
        #[arg(long)]
        n: i64,
        #[arg(long, value_parser = positive_u32())]
        h: u32,
        #[arg(long, default_value_t = 1, value_parser = positive_u32())]
        t: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

/// Verification failures exit 1; everything else that errors is a usage or
/// parameter problem and exits 2.
fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        Error::StructureMismatch { .. }
        | Error::ContainmentFalsified { .. } => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Repr { set, h, cap, format } => cmd_repr(&set, h, cap, format),
        Command::Sumset { set, h, t, format } => cmd_sumset(&set, h, t, format),
        Command::Structure { set, t, verify_window, format } => {
            cmd_structure(&set, t, verify_window, format)
        }
        Command::Frobenius { set, t, format } => cmd_frobenius(&set, t, format),
        Command::Verify { seed, count, k_max, a_max, t_max, format } => {
            cmd_verify(seed, count, k_max, a_max, t_max, format)
        }
        Command::Dual { set, t, verify_window, format } => {
            cmd_dual(&set, t, verify_window, format)
        }
        Command::Witness { set, n, h, t, format } => cmd_witness(&set, n, h, t, format),
    }
}

// ---------------------------------------------------------------------------
// Input handling: every subcommand accepts raw (unnormalized, unsorted) sets.
// ---------------------------------------------------------------------------

struct Input {
    /// Sorted, deduplicated elements exactly as the user gave them.
    raw_elements: Vec<i64>,
    record: NormalizationRecord,
    had_duplicates: bool,
}

impl Input {
    fn normalized(&self) -> &NormalizedSet {
        self.record.normalized()
    }
}

fn read_set(literal: &str) -> Result<Input, Error> {
    let mut elements = parse_set_literal(literal)?;
    let before = elements.len();
    elements.sort_unstable();
    elements.dedup();
    let had_duplicates = elements.len() != before;
    let raw = RawSet::new(elements)?;
    let raw_elements = raw.elements().to_vec();
    let record = normalize(&raw)?;
    Ok(Input { raw_elements, record, had_duplicates })
}

fn set_braces(elements: &[i64]) -> String {
    let inner: Vec<String> = elements.iter().map(|a| a.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

/// Echo the normalization applied to the input. In text mode this is part of
/// the report on stdout; in json/csv mode it goes to stderr so the payload
/// keeps its documented shape.
fn echo_normalization(input: &Input, format: Format) {
    let mut lines = Vec::new();
    if input.had_duplicates {
        lines.push(format!(
            "note: duplicate elements removed; using {}",
            set_braces(&input.raw_elements)
        ));
    }
    if input.record.is_identity() {
        if format == Format::Text {
            lines.push(format!("A = {}", input.normalized()));
        }
    } else {
        lines.push(format!(
            "normalized: {} -> A = {} via n = {} + {} * m",
            set_braces(&input.raw_elements),
            input.normalized(),
            input.record.offset(),
            input.record.scale(),
        ));
    }
    for line in lines {
        match format {
            Format::Text => println!("{line}"),
            Format::Json | Format::Csv => eprintln!("{line}"),
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable output"));
}

/// Subcommands whose output has no tabular shape reject `--format csv` as a
/// usage error (exit code 2).
fn reject_csv(format: Format) -> Option<Result<ExitCode, Error>> {
    if format == Format::Csv {
        eprintln!("error: csv format is not available for this subcommand; use text or json");
        Some(Ok(ExitCode::from(2)))
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// repr
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ReprRow {
    n: i64,
    /// Decimal string so exact counts never lose precision in JSON.
    count: String,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    capped: bool,
}

#[derive(Serialize)]
struct ReprOut {
    set: Vec<i64>,
    normalized: Vec<i64>,
    offset: i64,
    scale: i64,
    h: u32,
    cap: serde_json::Value,
    rows: Vec<ReprRow>,
}

fn cmd_repr(literal: &str, h: u32, cap: CapArg, format: Format) -> Result<ExitCode, Error> {
    let input = read_set(literal)?;
    echo_normalization(&input, format);
    let mode = match cap {
        CapArg::Exact => CountMode::Exact,
        CapArg::Capped(c) => CountMode::Capped(c),
    };
    let table = rep_count_table(input.normalized(), h, mode)?;

    // Row indices live on the normalized set; report them in the coordinate
    // space of the input via n = h*offset + scale*m.
    let normalized_ns: Vec<i64> = (0..table.len() as i64).collect();
    let raw_ns = denormalize_sumset(&input.record, h, &normalized_ns)?;

    let mut rows = Vec::with_capacity(table.len());
    match mode {
        CountMode::Exact => {
            for (n, count) in raw_ns.iter().zip(table.exact_counts().expect("exact mode")) {
                rows.push(ReprRow { n: *n, count: count.to_string(), capped: false });
            }
        }
        CountMode::Capped(c) => {
            let (_, cells) = table.capped_counts().expect("capped mode");
            for (n, count) in raw_ns.iter().zip(cells) {
                rows.push(ReprRow { n: *n, count: count.to_string(), capped: *count == c });
            }
        }
    }

    match format {
        Format::Text => {
            println!("n,count");
            for row in &rows {
                let marker = if row.capped { "+" } else { "" };
                println!("{},{}{}", row.n, row.count, marker);
            }
        }
        Format::Csv => {
            println!("n,count");
            for row in &rows {
                println!("{},{}", row.n, row.count);
            }
        }
        Format::Json => {
            let cap_value = match cap {
                CapArg::Exact => serde_json::Value::from("exact"),
                CapArg::Capped(c) => serde_json::Value::from(c),
            };
            print_json(&ReprOut {
                set: input.raw_elements.clone(),
                normalized: input.normalized().elements().to_vec(),
                offset: input.record.offset(),
                scale: input.record.scale(),
                h,
                cap: cap_value,
                rows,
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// sumset
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct SumsetOut {
    set: Vec<i64>,
    normalized: Vec<i64>,
    offset: i64,
    scale: i64,
    h: u32,
    t: u32,
    members: Vec<i64>,
}

fn cmd_sumset(literal: &str, h: u32, t: u32, format: Format) -> Result<ExitCode, Error> {
    let input = read_set(literal)?;
    echo_normalization(&input, format);
    let sumset = threshold_sumset(input.normalized(), h, t)?;
    let members = denormalize_sumset(&input.record, h, &sumset.to_vec())?;
    match format {
        Format::Text => {
            println!(
                "({h}A)^({t}) has {} element(s): {}",
                members.len(),
                set_braces(&members)
            );
        }
        Format::Csv => {
            println!("n");
            for n in &members {
                println!("{n}");
            }
        }
        Format::Json => {
            print_json(&SumsetOut {
                set: input.raw_elements.clone(),
                normalized: input.normalized().elements().to_vec(),
                offset: input.record.offset(),
                scale: input.record.scale(),
                h,
                t,
                members,
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// structure
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct EmptyOut {
    set: Vec<i64>,
    t: u32,
    empty_for_all_h: bool,
}

fn report_empty(set: &NormalizedSet, t: u32, format: Format) -> Result<ExitCode, Error> {
    match format {
        Format::Text => {
            println!(
                "(hA)^({t}) is empty for every h: each n has at most one representation over A = {set}"
            );
        }
        Format::Json => print_json(&EmptyOut {
            set: set.elements().to_vec(),
            t,
            empty_for_all_h: true,
        }),
        Format::Csv => unreachable!("csv is rejected before structural output"),
    }
    Ok(ExitCode::SUCCESS)
}

fn print_structure_text(report: &FringeReport) {
    println!("t = {}", report.t);
    println!("h_t = {} (decomposition holds for all h >= h_t)", report.h_t);
    println!("c_t = {}, C_t = {}", report.c_t, set_braces(&report.c_fringe));
    println!("d_t = {}, D_t = {}", report.d_t, set_braces(&report.d_fringe));
    println!(
        "bounds: c'_t = {}, d'_t = {}",
        report.c_prime_t, report.d_prime_t
    );
    println!(
        "(hA)^({t}) = C_t u [{c}, {a}h - {d}] u ({a}h - D_t), verified for h in [{lo}, {hi}]",
        t = report.t,
        c = report.c_t,
        a = report.set.last().copied().unwrap_or(0),
        d = report.d_t,
        lo = report.verified_h[0],
        hi = report.verified_h[1],
    );
}

fn cmd_structure(
    literal: &str,
    t: u32,
    verify_window: u32,
    format: Format,
) -> Result<ExitCode, Error> {
    if let Some(result) = reject_csv(format) {
        return result;
    }
    let input = read_set(literal)?;
    echo_normalization(&input, format);
    let set = input.normalized();

    // Pair sets (k = 1) have a principled outcome rather than an error.
    if set.k() == 1 && t >= 2 {
        return report_empty(set, t, format);
    }

    let h_t = fold_onset(set, t)?;
    let certificate = verify_structure(set, t, h_t, h_t + verify_window)?;
    let report = FringeReport::from_certificate(&certificate);
    match format {
        Format::Text => {
            print_structure_text(&report);
        }
        Format::Json => print_json(&report),
        Format::Csv => unreachable!("rejected above"),
    }
    Ok(ExitCode::SUCCESS)
}

/// First fold index at which the decomposition is guaranteed, as a u32.
fn fold_onset(set: &NormalizedSet, t: u32) -> Result<u32, Error> {
    let bounds = if set.k() == 1 {
        // threshold_bounds rejects pair sets; t = 1 still has the closed form
        // computed by extract_fringes, whose h_t is always 1 here.
        return Ok(1);
    } else {
        threshold_bounds(set, t)?
    };
    u32::try_from(bounds.h_t()).map_err(|_| Error::RangeTooLarge {
        h: bounds.h_t() as u64,
        a_max: set.a_max(),
    })
}

// ---------------------------------------------------------------------------
// frobenius
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct FrobeniusOut {
    set: Vec<i64>,
    normalized: Vec<i64>,
    t_max: u32,
    values: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    infinite_from_t: Option<u32>,
}

fn cmd_frobenius(literal: &str, t: u32, format: Format) -> Result<ExitCode, Error> {
    let input = read_set(literal)?;
    echo_normalization(&input, format);
    let set = input.normalized();

    // Pair sets: FN_1 = -1 (every n >= 0 is representable for some h), and no
    // n ever reaches two representations, so FN_t is infinite for t >= 2.
    let (values, infinite_from) = if set.k() == 1 {
        (vec![-1], if t >= 2 { Some(2) } else { None })
    } else {
        (frobenius_sequence(set, t)?, None)
    };

    match format {
        Format::Text => {
            let mut parts: Vec<String> = values
                .iter()
                .enumerate()
                .map(|(i, fnt)| format!("FN_{} = {}", i + 1, fnt))
                .collect();
            if let Some(from) = infinite_from {
                for tt in from..=t {
                    parts.push(format!("FN_{tt} = infinite"));
                }
            }
            println!("{}", parts.join(", "));
        }
        Format::Csv => {
            println!("t,fn");
            for (i, fnt) in values.iter().enumerate() {
                println!("{},{}", i + 1, fnt);
            }
            if let Some(from) = infinite_from {
                for tt in from..=t {
                    println!("{tt},infinite");
                }
            }
        }
        Format::Json => {
            print_json(&FrobeniusOut {
                set: input.raw_elements.clone(),
                normalized: set.elements().to_vec(),
                t_max: t,
                values,
                infinite_from_t: infinite_from,
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct VerifyOut {
    seed: u64,
    count: usize,
    k_max: usize,
    a_max: i64,
    t_max: u32,
    structure_checks: usize,
    folds_verified: usize,
    interval_checks: usize,
    inclusion_checks: usize,
    duality_checks: usize,
    swap_checks: usize,
    violations: Vec<String>,
    passed: bool,
}

/// Largest fold index swept by the interval-lemma check per (set, t).
const INTERVAL_SWEEP_CAP: u32 = 1000;
/// Folds verified beyond h_t for the structure, inclusion, and duality checks.
const VERIFY_WINDOW: u32 = 2;

fn cmd_verify(
    seed: u64,
    count: usize,
    k_max: usize,
    a_max: i64,
    t_max: u32,
    format: Format,
) -> Result<ExitCode, Error> {
    if let Some(result) = reject_csv(format) {
        return result;
    }
    let corpus = sample_sets(seed, count, k_max, a_max)?;

    let mut out = VerifyOut {
        seed,
        count,
        k_max,
        a_max,
        t_max,
        structure_checks: 0,
        folds_verified: 0,
        interval_checks: 0,
        inclusion_checks: 0,
        duality_checks: 0,
        swap_checks: 0,
        violations: Vec::new(),
        passed: true,
    };

    for set in &corpus {
        for t in 1..=t_max {
            let h_t = fold_onset(set, t)?;
            let h_hi = h_t + VERIFY_WINDOW;
            let label = format!("A = {set}, t = {t}");

            match verify_structure(set, t, h_t, h_hi) {
                Ok(_) => {
                    out.structure_checks += 1;
                    out.folds_verified += (h_hi - h_t + 1) as usize;
                }
                Err(err) => out.violations.push(format!("structure: {label}: {err}")),
            }

            let interval_hi = (2 * h_t).min(INTERVAL_SWEEP_CAP).max(h_t);
            match check_interval_lemma_sweep(set, t, interval_hi) {
                Ok(true) => out.interval_checks += 1,
                Ok(false) => out.violations.push(format!("interval lemma: {label}: falsified")),
                Err(err) => out.violations.push(format!("interval lemma: {label}: {err}")),
            }

            match check_inclusion_lemma_sweep(set, t, h_hi) {
                Ok(true) => out.inclusion_checks += 1,
                Ok(false) => out.violations.push(format!("inclusion lemma: {label}: falsified")),
                Err(err) => out.violations.push(format!("inclusion lemma: {label}: {err}")),
            }

            match check_duality_sweep(set, t, h_hi) {
                Ok(true) => out.duality_checks += 1,
                Ok(false) => out.violations.push(format!("duality: {label}: falsified")),
                Err(err) => out.violations.push(format!("duality: {label}: {err}")),
            }

            // The dual fringe obtained by swapping must equal the fringe
            // extracted directly from the dual set.
            let swapped = match extract_fringes(set, t)? {
                FringeOutcome::Structure(fringe) => Some(dual_fringes(&fringe)),
                FringeOutcome::EmptyForAllFolds { .. } => None,
            };
            let direct = match extract_fringes(&dual_set(set), t)? {
                FringeOutcome::Structure(fringe) => Some(fringe),
                FringeOutcome::EmptyForAllFolds { .. } => None,
            };
            let ok = match (&swapped, &direct) {
                (Some(a), Some(b)) => {
                    a.c_t() == b.c_t()
                        && a.d_t() == b.d_t()
                        && a.c_set() == b.c_set()
                        && a.d_set() == b.d_set()
                }
                (None, None) => true,
                _ => false,
            };
            if ok {
                out.swap_checks += 1;
            } else {
                out.violations
                    .push(format!("dual fringe swap: {label}: swap != direct extraction"));
            }
        }
    }

    out.passed = out.violations.is_empty();

    match format {
        Format::Text => {
            println!(
                "corpus: {} sets (seed {}, k in [2, {}], elements <= {}), t in [1, {}]",
                corpus.len(),
                seed,
                k_max,
                a_max,
                t_max
            );
            println!(
                "structure certificates: {} ({} folds verified)",
                out.structure_checks, out.folds_verified
            );
            println!("interval lemma sweeps: {}", out.interval_checks);
            println!("inclusion lemma sweeps: {}", out.inclusion_checks);
            println!("duality sweeps: {}", out.duality_checks);
            println!("dual fringe swap checks: {}", out.swap_checks);
            for violation in &out.violations {
                println!("FAIL {violation}");
            }
            if out.passed {
                println!("PASS: 0 violations");
            } else {
                println!("FAIL: {} violation(s)", out.violations.len());
            }
        }
        Format::Json => print_json(&out),
        Format::Csv => unreachable!("rejected above"),
    }

    Ok(if out.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

// ---------------------------------------------------------------------------
// dual
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct DualOut {
    set: Vec<i64>,
    dual: Vec<i64>,
    fringe: FringeReport,
}

fn cmd_dual(
    literal: &str,
    t: u32,
    verify_window: u32,
    format: Format,
) -> Result<ExitCode, Error> {
    if let Some(result) = reject_csv(format) {
        return result;
    }
    let input = read_set(literal)?;
    echo_normalization(&input, format);
    let set = input.normalized();
    let dual = dual_set(set);

    if set.k() == 1 && t >= 2 {
        if format == Format::Text {
            println!("A  = {set}");
            println!("A* = {dual}");
        }
        return report_empty(&dual, t, format);
    }

    // The fringe of A* equals the swap of A's fringe; certifying A* directly
    // with verify_structure yields the same decomposition plus an honest
    // verified h-range.
    let h_t = fold_onset(&dual, t)?;
    let certificate = verify_structure(&dual, t, h_t, h_t + verify_window)?;
    let report = FringeReport::from_certificate(&certificate);

    match format {
        Format::Text => {
            println!("A  = {set}");
            println!("A* = {dual}");
            print_structure_text(&report);
        }
        Format::Json => {
            print_json(&DualOut {
                set: set.elements().to_vec(),
                dual: dual.elements().to_vec(),
                fringe: report,
            });
        }
        Format::Csv => unreachable!("rejected above"),
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// witness
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct WitnessEntry {
    exponents: Vec<i64>,
    zeros: i64,
}

#[derive(Serialize)]
struct WitnessOut {
    set: Vec<i64>,
    normalized: Vec<i64>,
    offset: i64,
    scale: i64,
    n: i64,
    h: u32,
    t: u32,
    witnesses: Vec<WitnessEntry>,
}

fn cmd_witness(literal: &str, n: i64, h: u32, t: u32, format: Format) -> Result<ExitCode, Error> {
    if let Some(result) = reject_csv(format) {
        return result;
    }
    let input = read_set(literal)?;
    echo_normalization(&input, format);
    let set = input.normalized();

    // n is given in the input's coordinate space; pull it back through the
    // normalization map n = h*offset + scale*m.
    let shifted = n
        .checked_sub((h as i64).checked_mul(input.record.offset()).ok_or(Error::Overflow(
            "witness target out of range",
        ))?)
        .ok_or(Error::Overflow("witness target out of range"))?;
    if shifted.rem_euclid(input.record.scale()) != 0 {
        eprintln!(
            "error: {n} is not attainable as a sum of {h} elements of {}: \
             n - {h} * {} must be divisible by {}",
            set_braces(&input.raw_elements),
            input.record.offset(),
            input.record.scale(),
        );
        return Ok(ExitCode::from(2));
    }
    let m = shifted.div_euclid(input.record.scale());

    let witnesses = construct_witnesses(set, t, h, m)?;
    let entries: Vec<WitnessEntry> = witnesses
        .vectors()
        .iter()
        .map(|x| WitnessEntry {
            exponents: x.clone(),
            zeros: h as i64 - x.iter().sum::<i64>(),
        })
        .collect();

    match format {
        Format::Text => {
            println!(
                "{n} admits at least {t} representation(s) as a sum of {h} elements of {}:",
                set_braces(&input.raw_elements)
            );
            for (i, entry) in entries.iter().enumerate() {
                let mut terms: Vec<String> = entry
                    .exponents
                    .iter()
                    .zip(&input.raw_elements[1..])
                    .filter(|(x, _)| **x > 0)
                    .map(|(x, b)| format!("{x}*{b}"))
                    .collect();
                if entry.zeros > 0 || terms.is_empty() {
                    terms.push(format!("{}*{}", entry.zeros, input.raw_elements[0]));
                }
                println!("  witness {}: {n} = {}", i + 1, terms.join(" + "));
            }
        }
        Format::Json => {
            print_json(&WitnessOut {
                set: input.raw_elements.clone(),
                normalized: set.elements().to_vec(),
                offset: input.record.offset(),
                scale: input.record.scale(),
                n,
                h,
                t,
                witnesses: entries,
            });
        }
        Format::Csv => unreachable!("rejected above"),
    }
    Ok(ExitCode::SUCCESS)
}
