//! Command-line front end: analysis, enumeration, classification, bound
//! verification, generators and an exhaustive self-test.
//!
//! Exit codes: 0 all good; 1 bound or lemma violation; 2 usage or I/O
//! error; 3 internal oracle mismatch.

use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use stringology::bounds::{self, BoundReport};
use stringology::bwt;
use stringology::bwt_map::{
    check_injectivity, check_nonextendability, period_certificates, run_boundary_pairs,
};
use stringology::corpus::{self, Family, GeneratorSpec};
use stringology::lce::LceIndex;
use stringology::lz77::{lz77_from, FactorKind};
use stringology::oracle;
use stringology::periodicity::{
    fourth_power_runs, max_exponent, q_free_witness, MAX_EXPONENT_CAP,
};
use stringology::repeats::{
    cdawg_stats_from, enumerate_maximal_repeats_from, for_each_maximal_pair,
    ClassTable, MaximalPair, ENUMERATION_CAP,
};
use stringology::taxonomy::{classify, nonextendable_one_side_strict};
use stringology::text::{render_escaped, render_human, Text};
use stringology::{Error, Result};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ORACLE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "stringology",
    about = "Repetitiveness measures and their combinatorial bounds",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputOpts {
    /// Inline input string.
    #[arg(long, conflicts_with = "input")]
    text: Option<String>,
    /// Input file; stdin is read when neither --text nor --input is given.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Keep one trailing newline instead of stripping it.
    #[arg(long)]
    keep_newline: bool,
}

impl InputOpts {
    fn read(&self) -> Result<Text> {
        let strip = !self.keep_newline;
        if let Some(t) = &self.text {
            return Text::new(t.clone().into_bytes());
        }
        if let Some(path) = &self.input {
            return Text::from_path(path, strip);
        }
        Text::from_reader(std::io::stdin().lock(), strip)
    }

    fn id(&self) -> String {
        if self.text.is_some() {
            "inline".into()
        } else if let Some(p) = &self.input {
            p.display().to_string()
        } else {
            "stdin".into()
        }
    }
}

#[derive(Args, Clone, Copy)]
struct FormatOpts {
    /// Emit JSON.
    #[arg(long)]
    json: bool,
    /// Emit CSV.
    #[arg(long, conflicts_with = "json")]
    csv: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Human,
    Json,
    Csv,
}

impl FormatOpts {
    /// Defaults to human on a terminal, JSON otherwise.
    fn resolve(self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else if std::io::stdout().is_terminal() {
            Format::Human
        } else {
            Format::Json
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateWhat {
    Pairs,
    Repeats,
    Cdawg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Fibonacci,
    ThueMorse,
    UnaryPower,
    PaperExample,
    Random,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Fibonacci => Family::Fibonacci,
            FamilyArg::ThueMorse => Family::ThueMorse,
            FamilyArg::UnaryPower => Family::UnaryPower,
            FamilyArg::PaperExample => Family::PaperExample,
            FamilyArg::Random => Family::Random,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full report: measures, pair classifications and all bound rows.
    Analyze {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        format: FormatOpts,
        /// Power-freeness order; defaults to the smallest valid one.
        #[arg(long)]
        q: Option<u32>,
        /// Length cap for the quadratic stages.
        #[arg(long, default_value_t = ENUMERATION_CAP)]
        cap: usize,
        /// One-sided reading of the nonextendability label.
        #[arg(long)]
        strict_variants: bool,
        /// Classify over all indices of the occurrence intervals instead
        /// of LZ77 factor starts.
        #[arg(long)]
        all_indices: bool,
    },
    /// Enumerate maximal pairs, maximal repeats or CDAWG counts.
    Enumerate {
        what: EnumerateWhat,
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        format: FormatOpts,
        #[arg(long, default_value_t = ENUMERATION_CAP)]
        cap: usize,
        /// Sample this many random position pairs instead of enumerating
        /// exhaustively (marks the output as non-exhaustive).
        #[arg(long)]
        sample: Option<usize>,
        /// Seed for --sample.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// One CSV row per (pair class, i, j) with boolean label columns.
    Classify {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long, default_value_t = ENUMERATION_CAP)]
        cap: usize,
        #[arg(long)]
        strict_variants: bool,
        #[arg(long)]
        all_indices: bool,
    },
    /// Evaluate all bound rows; nonzero exit if any row is violated.
    Verify {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        format: FormatOpts,
        #[arg(long)]
        q: Option<u32>,
        /// Verify every file in this directory instead of one input.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Burrows-Wheeler transform of S$ and its run decomposition.
    Bwt {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        format: FormatOpts,
        /// Sentinel-free cyclic-rotation variant.
        #[arg(long)]
        cyclic: bool,
    },
    /// Run boundary to maximal pair table with period certificates (JSON).
    BwtMap {
        #[command(flatten)]
        input: InputOpts,
    },
    /// Maximum exponent, power-freeness order and periodic extensions.
    Periodicity {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        format: FormatOpts,
        /// Also list the periodic extensions of all fourth powers.
        #[arg(long)]
        extensions: bool,
    },
    /// Self-referential LZ77 factorization (JSON records).
    Lz77 {
        #[command(flatten)]
        input: InputOpts,
    },
    /// Write a generated string as raw bytes.
    Generate {
        family: FamilyArg,
        /// Family-specific parameter (index, length or power).
        parameter: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Alphabet size for the random family.
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive oracle and lemma suites; nonzero exit on any failure.
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Analyze { input, format, q, cap, strict_variants, all_indices } => {
            cmd_analyze(&input, format.resolve(), q, cap, strict_variants, all_indices)
        }
        Command::Enumerate { what, input, format, cap, sample, seed } => {
            cmd_enumerate(what, &input, format.resolve(), cap, sample, seed)
        }
        Command::Classify { input, q, cap, strict_variants, all_indices } => {
            cmd_classify(&input, q, cap, strict_variants, all_indices)
        }
        Command::Verify { input, format, q, corpus } => {
            cmd_verify(&input, format.resolve(), q, corpus.as_deref())
        }
        Command::Bwt { input, format, cyclic } => cmd_bwt(&input, format.resolve(), cyclic),
        Command::BwtMap { input } => cmd_bwt_map(&input),
        Command::Periodicity { input, format, extensions } => {
            cmd_periodicity(&input, format.resolve(), extensions)
        }
        Command::Lz77 { input } => cmd_lz77(&input),
        Command::Generate { family, parameter, seed, alphabet, output } => {
            cmd_generate(family, parameter, seed, alphabet, output.as_deref())
        }
        Command::Selftest => Ok(cmd_selftest()),
    }
}

fn check_cap(t: &Text, cap: usize) -> Result<()> {
    if t.len() > cap {
        return Err(Error::SizeCapExceeded { stage: "enumerate", len: t.len(), cap, flag: "--cap" });
    }
    Ok(())
}

/// Maximal pairs, either exhaustively or from sampled position pairs.
fn collect_pairs(
    t: &Text,
    index: &LceIndex,
    cap: usize,
    sample: Option<usize>,
    seed: u64,
) -> Result<(Vec<MaximalPair>, bool)> {
    if let Some(count) = sample {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let len = t.len();
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for _ in 0..count {
            let n = rng.gen_range(1..=len);
            let m = rng.gen_range(1..=len);
            if n == m || t.sym(n.min(m) - 1) == t.sym(n.max(m) - 1) {
                continue;
            }
            let (n, m) = (n.min(m), n.max(m));
            let l = index.lce(n, m);
            if l >= 1 && seen.insert((n, m)) {
                out.push(MaximalPair { n, m, l });
            }
        }
        out.sort();
        return Ok((out, true));
    }
    check_cap(t, cap)?;
    let mut out = Vec::new();
    for_each_maximal_pair(t, index, |p| out.push(p));
    Ok((out, false))
}

/// (class id per pair, class representatives) for an already-collected set.
fn class_ids(t: &Text, index: &LceIndex, pairs: &[MaximalPair]) -> (Vec<u32>, Vec<MaximalPair>) {
    let mut table = ClassTable::new(t, index);
    let ids = pairs.iter().map(|&p| table.class_of(p)).collect();
    (ids, table.representatives().to_vec())
}

fn body_prefix(t: &Text, p: &MaximalPair) -> String {
    let end = p.n + p.l.min(16) - 1;
    let mut s = render_human(t.slice(p.n, end));
    if p.l > 16 {
        s.push_str("...");
    }
    s
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

// ---------------------------------------------------------------------------
// analyze

fn classification_rows(
    t: &Text,
    parse: &stringology::lz77::Lz77Parse,
    pairs: &[MaximalPair],
    ids: &[u32],
    reps: &[MaximalPair],
    q: u32,
    strict: bool,
    all_indices: bool,
) -> Vec<serde_json::Value> {
    let starts = parse.factor_starts();
    let mut rows = Vec::new();
    for (cid, rep) in reps.iter().enumerate() {
        let members: Vec<&MaximalPair> = ids
            .iter()
            .zip(pairs)
            .filter(|(&id, _)| id as usize == cid)
            .map(|(_, p)| p)
            .collect();
        let mut cells: std::collections::BTreeMap<(usize, usize), [bool; 6]> =
            std::collections::BTreeMap::new();
        for p in &members {
            for (n, m) in [(p.n, p.m), (p.m, p.n)] {
                let o = MaximalPair { n, m, l: p.l };
                let is: Vec<usize> = if all_indices {
                    (n..=n + p.l).collect()
                } else {
                    starts.iter().copied().filter(|&i| n <= i && i <= n + p.l).collect()
                };
                let js: Vec<usize> = if all_indices {
                    (m..=m + p.l).collect()
                } else {
                    starts.iter().copied().filter(|&j| m <= j && j <= m + p.l).collect()
                };
                for &i in &is {
                    for &j in &js {
                        let c = classify(t, o, i, j, q, parse).expect("indices in range");
                        let nonext = if strict {
                            nonextendable_one_side_strict(t, o)
                        } else {
                            c.labels.nonextendable_one_side
                        };
                        let flags = [
                            c.labels.lemma3_eligible,
                            c.labels.thm5_eligible,
                            c.labels.not_sixth_power,
                            c.labels.fourth_power_both,
                            nonext,
                            c.labels.boundary_crossing,
                        ];
                        let cell = cells.entry((i, j)).or_default();
                        for (slot, f) in cell.iter_mut().zip(flags) {
                            *slot |= f;
                        }
                    }
                }
            }
        }
        for ((i, j), flags) in cells {
            rows.push(json!({
                "class": cid,
                "n": rep.n, "m": rep.m, "l": rep.l,
                "i": i, "j": j,
                "lemma3_eligible": flags[0],
                "thm5_eligible": flags[1],
                "not_sixth_power": flags[2],
                "fourth_power_both": flags[3],
                "nonextendable_one_side": flags[4],
                "boundary_crossing": flags[5],
            }));
        }
    }
    rows
}

fn print_bound_table(report: &BoundReport) {
    println!(
        "{:<4} {:>12} {:>16} {:<7} {}",
        "row", "measured", "bound", "holds", "formula"
    );
    for b in &report.bounds {
        let bound = b.bound.map_or("-".to_string(), |v| format!("{v:.3}"));
        let holds = match b.holds {
            Some(true) => "yes",
            Some(false) => "NO",
            None => "skipped",
        };
        println!("{:<4} {:>12} {:>16} {:<7} {}", b.name, b.measured, bound, holds, b.formula);
        if let Some(note) = &b.note {
            println!("     note: {note}");
        }
    }
}

fn cmd_analyze(
    input: &InputOpts,
    format: Format,
    q: Option<u32>,
    cap: usize,
    strict: bool,
    all_indices: bool,
) -> Result<ExitCode> {
    let t = input.read()?;
    check_cap(&t, cap)?;
    let report = bounds::verify(&t, &input.id(), q)?;
    let index = LceIndex::new(&t);
    let parse = lz77_from(&t, &index);
    let (pairs, _) = collect_pairs(&t, &index, cap, None, 0)?;
    let (ids, reps) = class_ids(&t, &index, &pairs);
    let q_eff = report.q_effective;
    let rows = classification_rows(&t, &parse, &pairs, &ids, &reps, q_eff, strict, all_indices);
    let boundaries = run_boundary_pairs(&t, &index);
    let violations = check_nonextendability(&t, &boundaries);
    let ok = report.all_hold() && report.injectivity.ok() && violations.is_empty();

    match format {
        Format::Json | Format::Csv => {
            print_json(&json!({
                "text_id": report.text_id,
                "text": render_escaped(t.bytes()),
                "report": report,
                "pair_count": pairs.len(),
                "class_count": reps.len(),
                "classifications": rows,
                "nonextendability_violations": violations,
            }));
        }
        Format::Human => {
            println!("text      : {}", render_human(t.bytes()));
            println!(
                "n={} sigma={} z={} r={} q_min={} max_exponent={}/{}",
                report.length,
                report.alphabet_size,
                report.z,
                report.r,
                report.q_min,
                report.max_exponent.numer(),
                report.max_exponent.denom()
            );
            println!("pairs={} classes={}", pairs.len(), reps.len());
            print_bound_table(&report);
            println!(
                "boundary map: {} boundaries, {} with pairs, injective={}, L0={} (cap {})",
                report.injectivity.boundary_count,
                report.injectivity.paired_count,
                report.injectivity.injective,
                report.injectivity.zero_lcp_count,
                report.injectivity.zero_lcp_cap
            );
            if !violations.is_empty() {
                println!("nonextendability violations: {violations:?}");
            }
        }
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VIOLATION) })
}

// ---------------------------------------------------------------------------
// enumerate / classify

fn cmd_enumerate(
    what: EnumerateWhat,
    input: &InputOpts,
    format: Format,
    cap: usize,
    sample: Option<usize>,
    seed: u64,
) -> Result<ExitCode> {
    let t = input.read()?;
    let index = LceIndex::new(&t);
    match what {
        EnumerateWhat::Pairs => {
            let (pairs, sampled) = collect_pairs(&t, &index, cap, sample, seed)?;
            let (ids, _) = class_ids(&t, &index, &pairs);
            match format {
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(std::io::stdout());
                    w.write_record(["n", "m", "l", "left", "body_prefix", "right", "class"])
                        .and_then(|_| {
                            for (p, id) in pairs.iter().zip(&ids) {
                                w.write_record([
                                    p.n.to_string(),
                                    p.m.to_string(),
                                    p.l.to_string(),
                                    format!(
                                        "{}/{}",
                                        render_human(&[t.sym(p.n - 1)]),
                                        render_human(&[t.sym(p.m - 1)])
                                    ),
                                    body_prefix(&t, p),
                                    format!(
                                        "{}/{}",
                                        render_human(&[t.sym(p.n + p.l)]),
                                        render_human(&[t.sym(p.m + p.l)])
                                    ),
                                    id.to_string(),
                                ])?;
                            }
                            w.flush()?;
                            Ok(())
                        })?;
                }
                _ => {
                    let rows: Vec<_> = pairs
                        .iter()
                        .zip(&ids)
                        .map(|(p, id)| {
                            json!({
                                "n": p.n, "m": p.m, "l": p.l,
                                "left": [render_escaped(&[t.sym(p.n - 1)]),
                                         render_escaped(&[t.sym(p.m - 1)])],
                                "body_prefix": body_prefix(&t, p),
                                "right": [render_escaped(&[t.sym(p.n + p.l)]),
                                          render_escaped(&[t.sym(p.m + p.l)])],
                                "class": id,
                            })
                        })
                        .collect();
                    print_json(&json!({"exhaustive": !sampled, "pairs": rows}));
                }
            }
        }
        EnumerateWhat::Repeats => {
            check_cap(&t, cap)?;
            let reps = enumerate_maximal_repeats_from(&t, &index);
            match format {
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(std::io::stdout());
                    w.write_record(["content", "occurrences", "left_extensions", "right_extensions"])?;
                    for r in &reps {
                        w.write_record([
                            render_human(&r.content),
                            r.occurrence_count.to_string(),
                            render_human(&r.left_extensions),
                            render_human(&r.right_extensions),
                        ])?;
                    }
                    w.flush()?;
                }
                _ => print_json(&serde_json::to_value(&reps).expect("serializable")),
            }
        }
        EnumerateWhat::Cdawg => {
            check_cap(&t, cap)?;
            let stats = cdawg_stats_from(&t, &index);
            match format {
                Format::Human => println!(
                    "maximal_repeats={} right_extensions={} root_arcs={} arc_total={}",
                    stats.maximal_repeat_count,
                    stats.right_extension_total,
                    stats.root_arcs,
                    stats.arc_total
                ),
                _ => print_json(&serde_json::to_value(stats).expect("serializable")),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(
    input: &InputOpts,
    q: Option<u32>,
    cap: usize,
    strict: bool,
    all_indices: bool,
) -> Result<ExitCode> {
    let t = input.read()?;
    check_cap(&t, cap)?;
    let index = LceIndex::new(&t);
    let parse = lz77_from(&t, &index);
    let q = match q {
        Some(v) if v >= 2 => v,
        Some(v) => {
            return Err(Error::InvalidParameter(format!("q must be at least 2, got {v}")))
        }
        None => q_free_witness(&t, MAX_EXPONENT_CAP)?.0,
    };
    let (pairs, _) = collect_pairs(&t, &index, cap, None, 0)?;
    let (ids, reps) = class_ids(&t, &index, &pairs);
    let rows = classification_rows(&t, &parse, &pairs, &ids, &reps, q, strict, all_indices);
    let mut w = csv::Writer::from_writer(std::io::stdout());
    w.write_record([
        "class",
        "n",
        "m",
        "l",
        "i",
        "j",
        "lemma3_eligible",
        "thm5_eligible",
        "not_sixth_power",
        "fourth_power_both",
        "nonextendable_one_side",
        "boundary_crossing",
    ])?;
    for row in rows {
        let get = |k: &str| row[k].to_string();
        w.write_record([
            get("class"),
            get("n"),
            get("m"),
            get("l"),
            get("i"),
            get("j"),
            get("lemma3_eligible"),
            get("thm5_eligible"),
            get("not_sixth_power"),
            get("fourth_power_both"),
            get("nonextendable_one_side"),
            get("boundary_crossing"),
        ])?;
    }
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(
    input: &InputOpts,
    format: Format,
    q: Option<u32>,
    corpus_dir: Option<&std::path::Path>,
) -> Result<ExitCode> {
    if let Some(dir) = corpus_dir {
        let mut texts: Vec<(String, Text)> = Vec::new();
        let mut unreadable: Vec<(String, String)> = Vec::new();
        let mut entries: Vec<PathBuf> =
            std::fs::read_dir(dir)?.filter_map(|e| e.ok().map(|e| e.path())).collect();
        entries.sort();
        for path in entries.into_iter().filter(|p| p.is_file()) {
            let id = path.display().to_string();
            match Text::from_path(&path, true) {
                Ok(t) => texts.push((id, t)),
                Err(e) => unreadable.push((id, e.to_string())),
            }
        }
        let mut report = bounds::verify_corpus(&texts, q);
        for (id, err) in unreadable {
            report.failures.push(bounds::CorpusFailure { text_id: id, error: err });
        }
        let ok = report.all_hold();
        match format {
            Format::Human => {
                for r in &report.reports {
                    println!(
                        "{}: n={} z={} r={} all_hold={}",
                        r.text_id,
                        r.length,
                        r.z,
                        r.r,
                        r.all_hold()
                    );
                }
                for f in &report.failures {
                    println!("{}: FAILED ({})", f.text_id, f.error);
                }
                println!("tightness (max measured/bound):");
                for t in &report.tightness {
                    println!("  {:<4} {:.6} at {}", t.name, t.max_ratio, t.text_id);
                }
            }
            _ => print_json(&serde_json::to_value(&report).expect("serializable")),
        }
        return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VIOLATION) });
    }

    let t = input.read()?;
    let report = bounds::verify(&t, &input.id(), q)?;
    match format {
        Format::Human => {
            println!(
                "n={} sigma={} z={} r={} q_eff={} max_exponent={}/{}",
                report.length,
                report.alphabet_size,
                report.z,
                report.r,
                report.q_effective,
                report.max_exponent.numer(),
                report.max_exponent.denom()
            );
            print_bound_table(&report);
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["name", "formula", "bound", "measured", "holds", "anchor"])?;
            for b in &report.bounds {
                w.write_record([
                    b.name.clone(),
                    b.formula.clone(),
                    b.bound.map_or(String::new(), |v| v.to_string()),
                    b.measured.to_string(),
                    b.holds.map_or(String::new(), |h| h.to_string()),
                    b.anchor.clone(),
                ])?;
            }
            w.flush()?;
        }
        Format::Json => print_json(&serde_json::to_value(&report).expect("serializable")),
    }
    Ok(if report.all_hold() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VIOLATION) })
}

// ---------------------------------------------------------------------------
// bwt / bwt-map / periodicity / lz77 / generate

fn cmd_bwt(input: &InputOpts, format: Format, cyclic: bool) -> Result<ExitCode> {
    let t = input.read()?;
    let profile = if cyclic { bwt::cyclic_bwt(&t) } else { bwt::bwt(&t) };
    match format {
        Format::Human => {
            println!("bwt : {}", render_human(&profile.bwt));
            println!("r   : {}", profile.r);
            for run in &profile.runs {
                println!("run : {} x{} at {}", render_human(&[run.symbol]), run.length, run.start);
            }
        }
        _ => print_json(&json!({
            "bwt": render_escaped(&profile.bwt),
            "r": profile.r,
            "runs": profile.runs.iter().map(|r| json!({
                "symbol": render_escaped(&[r.symbol]),
                "start": r.start,
                "length": r.length,
            })).collect::<Vec<_>>(),
        })),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bwt_map(input: &InputOpts) -> Result<ExitCode> {
    let t = input.read()?;
    let index = LceIndex::new(&t);
    let boundaries = run_boundary_pairs(&t, &index);
    let injectivity = check_injectivity(&t, &boundaries);
    let rows: Vec<_> = boundaries
        .iter()
        .map(|b| {
            json!({
                "boundary_index": b.boundary_index,
                "prev_position": b.prev_position,
                "next_position": b.next_position,
                "lcp": b.lcp,
                "pair": b.pair,
                "periods": b.pair.map(|p| period_certificates(&t, p)),
            })
        })
        .collect();
    let violations = check_nonextendability(&t, &boundaries);
    print_json(&json!({
        "boundaries": rows,
        "injectivity": injectivity,
        "nonextendability_violations": violations,
    }));
    let ok = injectivity.ok() && violations.is_empty();
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VIOLATION) })
}

fn cmd_periodicity(input: &InputOpts, format: Format, extensions: bool) -> Result<ExitCode> {
    let t = input.read()?;
    let (exp, witness) = max_exponent(&t, MAX_EXPONENT_CAP)?;
    let (q_min, _) = q_free_witness(&t, MAX_EXPONENT_CAP)?;
    let runs = if extensions { fourth_power_runs(&t) } else { Vec::new() };
    match format {
        Format::Human => {
            println!(
                "max_exponent = {}/{} (witness start={} length={} period={})",
                exp.numer(),
                exp.denom(),
                witness.start,
                witness.length,
                witness.period
            );
            println!("q_min        = {q_min}");
            for e in &runs {
                println!(
                    "extension: period={} core=[{},{}] padded=[{},{}] {}",
                    e.delta,
                    e.core.0,
                    e.core.1,
                    e.padded.0,
                    e.padded.1,
                    render_human(&e.content_key)
                );
            }
        }
        _ => print_json(&json!({
            "max_exponent": {"numer": exp.numer().to_string(), "denom": exp.denom().to_string()},
            "witness": witness,
            "q_min": q_min,
            "extensions": if extensions { Some(&runs) } else { None },
        })),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_lz77(input: &InputOpts) -> Result<ExitCode> {
    let t = input.read()?;
    let index = LceIndex::new(&t);
    let parse = lz77_from(&t, &index);
    let rows: Vec<_> = parse
        .factors
        .iter()
        .map(|f| {
            json!({
                "start": f.start,
                "length": f.length,
                "content": render_escaped(t.slice(f.start, f.start + f.length - 1)),
                "kind": match f.kind {
                    FactorKind::FreshSymbol => "fresh-symbol",
                    FactorKind::RepeatedPrefix => "repeated-prefix",
                },
            })
        })
        .collect();
    print_json(&json!({"z": parse.z, "factors": rows}));
    Ok(ExitCode::SUCCESS)
}

fn cmd_generate(
    family: FamilyArg,
    parameter: usize,
    seed: u64,
    alphabet: usize,
    output: Option<&std::path::Path>,
) -> Result<ExitCode> {
    let spec = GeneratorSpec { family: family.into(), parameter, seed, alphabet };
    let t = corpus::generate(&spec)?;
    match output {
        Some(path) => std::fs::write(path, t.bytes())?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(t.bytes())?;
            out.flush()?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// selftest

struct SelftestOutcome {
    oracle_mismatch: bool,
    violation: bool,
}

fn suite(name: &str, count: usize, failures: usize, outcome_flag: &mut bool) {
    let verdict = if failures == 0 { "ok" } else { "FAILED" };
    println!("{name:<48} {count:>8} checked  {failures:>4} failures  {verdict}");
    if failures > 0 {
        *outcome_flag = true;
    }
}

fn cmd_selftest() -> ExitCode {
    let mut out = SelftestOutcome { oracle_mismatch: false, violation: false };

    // BWT against the rotation-sort oracle.
    let mut count = 0;
    let mut failures = 0;
    oracle::for_each_string(2, 12, |s| {
        let t = Text::new(s.to_vec()).unwrap();
        count += 1;
        if bwt::bwt(&t).bwt != oracle::bwt(&t) {
            failures += 1;
        }
    });
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let len = rng.gen_range(1..=200);
        let sigma = rng.gen_range(1..=5);
        let bytes: Vec<u8> = (0..len).map(|_| b'a' + rng.gen_range(0..sigma) as u8).collect();
        let t = Text::new(bytes).unwrap();
        count += 1;
        if bwt::bwt(&t).bwt != oracle::bwt(&t) {
            failures += 1;
        }
    }
    suite("bwt vs rotation-sort oracle", count, failures, &mut out.oracle_mismatch);

    // LZ77 and maximal pairs against the definitional oracles.
    let (mut count, mut failures) = (0, 0);
    let mut check_parse = |s: &[u8]| {
        let t = Text::new(s.to_vec()).unwrap();
        let index = LceIndex::new(&t);
        count += 1;
        let got: Vec<(usize, usize)> =
            lz77_from(&t, &index).factors.iter().map(|f| (f.start, f.length)).collect();
        if got != oracle::lz77(&t) {
            failures += 1;
        }
        let mut pairs = Vec::new();
        for_each_maximal_pair(&t, &index, |p| pairs.push((p.n, p.m, p.l)));
        let mut expect = oracle::maximal_pairs(&t);
        expect.sort();
        if pairs != expect {
            failures += 1;
        }
    };
    oracle::for_each_string(2, 12, &mut check_parse);
    oracle::for_each_string(3, 9, &mut check_parse);
    suite("lz77 + maximal pairs vs oracles", count, failures, &mut out.oracle_mismatch);

    // Two-cubes lemma and three-squares lemma.
    let (mut count, mut failures) = (0, 0);
    oracle::for_each_string(2, 14, |s| {
        count += 1;
        if !two_cubes_holds(s) || !three_squares_holds(s) {
            failures += 1;
        }
    });
    suite("two-cubes + three-squares lemmas", count, failures, &mut out.violation);

    // Boundary map: injectivity, L=0 slack, nonextendability.
    let (mut count, mut failures) = (0, 0);
    oracle::for_each_string(3, 10, |s| {
        let t = Text::new(s.to_vec()).unwrap();
        let index = LceIndex::new(&t);
        let boundaries = run_boundary_pairs(&t, &index);
        count += 1;
        let report = check_injectivity(&t, &boundaries);
        if !report.ok()
            || boundaries.len() + 1 != bwt::bwt(&t).r
            || !check_nonextendability(&t, &boundaries).is_empty()
        {
            failures += 1;
        }
    });
    suite("run-boundary correspondence", count, failures, &mut out.violation);

    // All bound rows over exhaustive binary strings.
    let (mut count, mut failures) = (0, 0);
    oracle::for_each_string(2, 11, |s| {
        if s.len() < 2 {
            return;
        }
        let t = Text::new(s.to_vec()).unwrap();
        count += 1;
        match bounds::verify(&t, "selftest", None) {
            Ok(rep) if rep.all_hold() => {}
            _ => failures += 1,
        }
    });
    suite("bound rows B1-B12, binary <= 11", count, failures, &mut out.violation);

    if out.oracle_mismatch {
        ExitCode::from(EXIT_ORACLE)
    } else if out.violation {
        ExitCode::from(EXIT_VIOLATION)
    } else {
        println!("all suites passed");
        ExitCode::SUCCESS
    }
}

/// Two prefixes (and suffixes) with exponent >= 3 and lengths within a
/// factor of two share their minimal period.
fn two_cubes_holds(s: &[u8]) -> bool {
    use stringology::periodicity::{exponent, min_period};
    let three = stringology::Exponent::from(3);
    for rev in [false, true] {
        let v: Vec<u8> = if rev { s.iter().rev().copied().collect() } else { s.to_vec() };
        let cubic: Vec<usize> =
            (1..=v.len()).filter(|&l| exponent(&v[..l]) >= three).collect();
        for (a, &l1) in cubic.iter().enumerate() {
            for &l2 in &cubic[a..] {
                if l2 <= 2 * l1 && min_period(&v[..l1]) != min_period(&v[..l2]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Three primitive squares as prefixes (suffixes) force |w| >= |u| + |v|,
/// hence |w| > 2|u|. The non-strict form is the correct one: equality is
/// attained, e.g. by u=ab, v=ababa, w=ababaab in "ababaabababaab".
fn three_squares_holds(s: &[u8]) -> bool {
    use stringology::periodicity::is_primitive;
    for rev in [false, true] {
        let v: Vec<u8> = if rev { s.iter().rev().copied().collect() } else { s.to_vec() };
        let squares: Vec<usize> = (1..=v.len() / 2)
            .filter(|&d| v[..d] == v[d..2 * d] && is_primitive(&v[..d]))
            .collect();
        for i in 0..squares.len() {
            for j in i + 1..squares.len() {
                for k in j + 1..squares.len() {
                    if squares[k] < squares[i] + squares[j]
                        || squares[k] <= 2 * squares[i]
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}
