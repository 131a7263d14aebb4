use std::io::Read as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use freeknot::corpus::parse_corpus;
use freeknot::group::{reduce, Group, GroupWord};
use freeknot::invariants::{
    closed_invariants, invariant_bundle, invariant_key, slice_obstruction, InvariantKey,
};
use freeknot::moves::{random_walk_with, Tamper};
use freeknot::parity::{classify, verify_parity_facts};
use freeknot::search::{trivialize, SearchStatus};
use freeknot::ChordDiagram;

#[derive(Parser)]
#[command(name = "fk", version, about = "Gauss diagram invariant toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a corpus and echo each diagram back, normalized
    Parse {
        /// corpus file, or "-" for stdin
        file: String,
    },
    /// Per-chord table: endpoints, degree, parity, type, sort, letter
    Classify {
        file: String,
        /// tab-separated output with a header row
        #[arg(long)]
        tsv: bool,
    },
    /// Invariants per diagram: l, phi, psi, normal forms, shift, slice verdict
    Inv {
        file: String,
        /// one JSON object per diagram
        #[arg(long)]
        json: bool,
    },
    /// Random-move walks re-checking every invariant at every step
    Walk {
        file: String,
        #[arg(long, default_value_t = 30)]
        steps: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long = "max-chords", default_value_t = 12)]
        max_chords: usize,
        #[arg(long)]
        json: bool,
        /// corrupt each walk after its first step (harness self-test)
        #[arg(long)]
        corrupt: bool,
    },
    /// Compare two single-diagram files by their invariants
    Distinguish { file_a: String, file_b: String },
    /// Breadth-first hunt for a move sequence to the empty diagram
    Search {
        file: String,
        /// stop after discovering this many distinct diagrams
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        /// chord cap during the search; default is n+2
        #[arg(long = "max-chords")]
        max_chords: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Normal form of a word ("a", "b", "b'", optional ^exponents)
    Reduce {
        /// target group: g or gp
        #[arg(long)]
        group: String,
        word: String,
    },
    /// Connected sum of two long diagrams, printed to stdout
    Sum { file_a: String, file_b: String },
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

fn load_corpus(path: &str) -> Result<Vec<(usize, ChordDiagram)>, String> {
    let text = read_input(path)?;
    parse_corpus(&text).map_err(|e| format!("{path}: {e}"))
}

fn single_diagram(path: &str) -> Result<ChordDiagram, String> {
    let corpus = load_corpus(path)?;
    match corpus.len() {
        1 => Ok(corpus.into_iter().next().unwrap().1),
        0 => Err(format!("{path}: no diagram found")),
        k => Err(format!("{path}: expected exactly one diagram, found {k}")),
    }
}

fn cmd_parse(file: &str) -> Result<u8, String> {
    for (_, d) in load_corpus(file)? {
        println!("{d}");
    }
    Ok(0)
}

fn cmd_classify(file: &str, tsv: bool) -> Result<u8, String> {
    let corpus = load_corpus(file)?;
    if tsv {
        println!("line\tlabel\tfirst\tsecond\tdegree\tparity\ttype\tsort\tletter");
    }
    for (line, d) in &corpus {
        let cls = classify(d);
        if !tsv {
            println!("line {line}: {d}");
        }
        for c in cls.classes() {
            let ty = c.chord_type.map_or("-".into(), |t| t.to_string());
            let so = c.sort.map_or("-".into(), |s| s.to_string());
            if tsv {
                println!(
                    "{line}\t{}\t{}\t{}\t{}\t{}\t{ty}\t{so}\t{}",
                    c.chord.label, c.chord.first, c.chord.second, c.degree, c.parity, c.letter
                );
            } else {
                let detail = match (c.chord_type, c.sort) {
                    (Some(t), Some(s)) => format!("{} {t} {s}", c.parity),
                    _ => c.parity.to_string(),
                };
                println!(
                    "  {} ({},{}) degree {} {detail} -> {}",
                    c.chord.label, c.chord.first, c.chord.second, c.degree, c.letter
                );
            }
        }
    }
    Ok(0)
}

fn cmd_inv(file: &str, json: bool) -> Result<u8, String> {
    for (line, d) in load_corpus(file)? {
        let slice = slice_obstruction(&d);
        if d.is_closed() {
            let ci = closed_invariants(&d).map_err(|e| e.to_string())?;
            if json {
                let cuts: Vec<String> = ci.cut_classes.iter().map(|c| c.to_string()).collect();
                println!(
                    "{}",
                    json!({
                        "line": line,
                        "kind": "closed",
                        "n": ci.n,
                        "l_abs": ci.l_abs,
                        "psi_class": ci.canonical.to_string(),
                        "cut_classes": cuts,
                        "slice_obstructed": slice.obstructed,
                    })
                );
            } else {
                println!("line {line}: closed n={}: {d}", ci.n);
                println!("  |l|       {}", ci.l_abs);
                println!("  psi-class {}", ci.canonical);
                println!("  cuts      {} classes", ci.cut_classes.len());
                println!("  slice     {slice}");
            }
        } else {
            let b = invariant_bundle(&d).map_err(|e| e.to_string())?;
            if json {
                println!(
                    "{}",
                    json!({
                        "line": line,
                        "kind": "long",
                        "n": b.n,
                        "l": b.l,
                        "sort1": b.sort1,
                        "sort2": b.sort2,
                        "phi": b.phi.to_string(),
                        "phi_nf": b.phi_nf.to_string(),
                        "psi": b.psi.to_string(),
                        "psi_nf": b.psi_nf.to_string(),
                        "shift": b.shift.shift(),
                        "slice_obstructed": slice.obstructed,
                    })
                );
            } else {
                println!("line {line}: long n={}: {d}", b.n);
                println!("  l      {}  (sorts {}/{})", b.l, b.sort1, b.sort2);
                println!("  phi    {}", b.phi);
                println!("  phi-nf {}", b.phi_nf);
                println!("  psi    {}", b.psi);
                println!("  psi-nf {}", b.psi_nf);
                match b.shift.shift() {
                    Some(k) => println!("  shift  {k:+}"),
                    None => println!("  shift  undefined ({})", b.shift),
                }
                println!("  slice  {slice}");
            }
        }
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_walk(
    file: &str,
    steps: usize,
    trials: usize,
    seed: u64,
    max_chords: usize,
    json: bool,
    corrupt: bool,
) -> Result<u8, String> {
    let corpus = load_corpus(file)?;
    let tamper = if corrupt { Tamper::TransposeOnce } else { Tamper::None };
    let mut all_ok = true;

    for (idx, (line, d)) in corpus.iter().enumerate() {
        let mut diagram_ok = true;
        let mut failure = serde_json::Value::Null;

        'trials: for trial in 0..trials {
            let trial_seed = seed
                .wrapping_add(idx as u64 * 1_000_003)
                .wrapping_add(trial as u64);
            let report =
                random_walk_with(d, steps, trial_seed, max_chords, tamper).map_err(|e| e.to_string())?;

            if let Some(v) = report.violation {
                let before = &report.entries[v - 1];
                let after = &report.entries[v];
                let mv = after.mv.as_ref().expect("violations sit after a move");
                diagram_ok = false;
                failure = json!({
                    "trial": trial,
                    "seed": trial_seed,
                    "step": v,
                    "before": before.snapshot,
                    "move": mv.to_string(),
                    "after": after.snapshot,
                    "key_expected": report.entries[0].key.to_string(),
                    "key_found": after.key.to_string(),
                });
                if !json {
                    println!("counterexample (line {line}, trial {trial}, seed {trial_seed}):");
                    println!("  before      {}", before.snapshot);
                    println!("  move        {mv}");
                    println!("  after       {}", after.snapshot);
                    println!("  key before  {}", report.entries[0].key);
                    println!("  key after   {}", after.key);
                }
                break 'trials;
            }

            // the walk preserved the key; re-check the parity facts of
            // every step from the recorded snapshots
            for i in 1..report.entries.len() {
                let prev =
                    ChordDiagram::parse(&report.entries[i - 1].snapshot).map_err(|e| e.to_string())?;
                let mv = report.entries[i].mv.as_ref().expect("steps record their move");
                let facts = verify_parity_facts(&prev, mv).map_err(|e| e.to_string())?;
                if !facts.passed() {
                    diagram_ok = false;
                    failure = json!({
                        "trial": trial,
                        "seed": trial_seed,
                        "step": i,
                        "before": report.entries[i - 1].snapshot,
                        "move": mv.to_string(),
                        "facts": facts.to_string(),
                    });
                    if !json {
                        println!(
                            "parity fact failure (line {line}, trial {trial}, seed {trial_seed}, step {i}):"
                        );
                        println!("{facts}");
                    }
                    break 'trials;
                }
            }
        }

        all_ok &= diagram_ok;
        if json {
            println!(
                "{}",
                json!({
                    "line": line,
                    "trials": trials,
                    "steps": steps,
                    "ok": diagram_ok,
                    "failure": failure,
                })
            );
        } else {
            let verdict = if diagram_ok { "ok" } else { "FAIL" };
            println!("line {line}: {trials} trials x {steps} steps: {verdict}");
        }
    }

    if json {
        println!("{}", json!({ "pass": all_ok, "diagrams": corpus.len() }));
    } else if all_ok {
        println!("walk: PASS ({} diagrams)", corpus.len());
    } else {
        println!("walk: FAIL");
    }
    Ok(if all_ok { 0 } else { 1 })
}

fn cmd_distinguish(file_a: &str, file_b: &str) -> Result<u8, String> {
    let a = single_diagram(file_a)?;
    let b = single_diagram(file_b)?;
    if a.kind() != b.kind() {
        return Err(format!(
            "cannot compare: {file_a} is {} but {file_b} is {}",
            a.kind().header(),
            b.kind().header()
        ));
    }
    match (invariant_key(&a), invariant_key(&b)) {
        (
            InvariantKey::Long { l: la, phi_nf: pa, psi_nf: sa },
            InvariantKey::Long { l: lb, phi_nf: pb, psi_nf: sb },
        ) => {
            if la != lb {
                println!("distinguished by l: {la} vs {lb}");
                Ok(0)
            } else if pa != pb {
                println!("distinguished by phi: {pa} vs {pb}");
                Ok(0)
            } else if sa != sb {
                println!("distinguished by psi: {sa} vs {sb}");
                Ok(0)
            } else {
                println!("not distinguished (l, phi, psi all agree)");
                Ok(1)
            }
        }
        (
            InvariantKey::Closed { l_abs: la, canonical_psi: ca },
            InvariantKey::Closed { l_abs: lb, canonical_psi: cb },
        ) => {
            if la != lb {
                println!("distinguished by |l|: {la} vs {lb}");
                Ok(0)
            } else if ca != cb {
                println!("distinguished by psi class: {ca} vs {cb}");
                Ok(0)
            } else {
                println!("not distinguished (|l| and psi class agree)");
                Ok(1)
            }
        }
        _ => unreachable!("kinds were checked above"),
    }
}

fn cmd_search(
    file: &str,
    budget: usize,
    max_chords: Option<usize>,
    json: bool,
) -> Result<u8, String> {
    let d = single_diagram(file)?;
    let cap = max_chords.unwrap_or(d.n() + 2);
    let r = trivialize(&d, budget, cap).map_err(|e| e.to_string())?;
    let status = match r.status {
        SearchStatus::Trivialized => "trivialized",
        SearchStatus::Exhausted => "exhausted",
        SearchStatus::BudgetHit => "budget_hit",
    };
    if json {
        let moves: Vec<String> = r.moves.iter().map(|m| m.to_string()).collect();
        println!(
            "{}",
            json!({
                "status": status,
                "moves": moves,
                "discovered": r.nodes_discovered,
                "expanded": r.nodes_expanded,
            })
        );
    } else {
        match r.status {
            SearchStatus::Trivialized => {
                for m in &r.moves {
                    println!("{m}");
                }
                println!(
                    "trivialized in {} moves (discovered {}, expanded {})",
                    r.moves.len(),
                    r.nodes_discovered,
                    r.nodes_expanded
                );
            }
            SearchStatus::Exhausted => println!(
                "not trivialized: reachable space exhausted (discovered {}, expanded {})",
                r.nodes_discovered, r.nodes_expanded
            ),
            SearchStatus::BudgetHit => println!(
                "not trivialized: node budget reached (discovered {}, expanded {})",
                r.nodes_discovered, r.nodes_expanded
            ),
        }
    }
    Ok(if r.status == SearchStatus::Trivialized { 0 } else { 1 })
}

fn cmd_reduce(group: &str, word: &str) -> Result<u8, String> {
    let tag = Group::parse(group).map_err(|e| e.to_string())?;
    let w = GroupWord::parse(tag, word).map_err(|e| e.to_string())?;
    println!("{}", reduce(&w));
    Ok(0)
}

fn cmd_sum(file_a: &str, file_b: &str) -> Result<u8, String> {
    let a = single_diagram(file_a)?;
    let b = single_diagram(file_b)?;
    let s = a.connected_sum(&b).map_err(|e| e.to_string())?;
    println!("{s}");
    Ok(0)
}

#[cfg(unix)]
fn reset_sigpipe() {
    // die quietly when a downstream `head` closes the pipe
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    let outcome = match &cli.cmd {
        Cmd::Parse { file } => cmd_parse(file),
        Cmd::Classify { file, tsv } => cmd_classify(file, *tsv),
        Cmd::Inv { file, json } => cmd_inv(file, *json),
        Cmd::Walk { file, steps, trials, seed, max_chords, json, corrupt } => {
            cmd_walk(file, *steps, *trials, *seed, *max_chords, *json, *corrupt)
        }
        Cmd::Distinguish { file_a, file_b } => cmd_distinguish(file_a, file_b),
        Cmd::Search { file, budget, max_chords, json } => {
            cmd_search(file, *budget, *max_chords, *json)
        }
        Cmd::Reduce { group, word } => cmd_reduce(group, word),
        Cmd::Sum { file_a, file_b } => cmd_sum(file_a, file_b),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
