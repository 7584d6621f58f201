//! Acceptance criteria 1-10, one line each. Exits nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bicyclic::extension::ExtSpec;
use bicyclic::link::{jategaonkar_check, link_graph, prime_identities_check};
use bicyclic::scalar::{frac, int, one};
use bicyclic::suite::{self, RunConfig};
use bicyclic::witness::lann_chain_check;
use bicyclic::{ClaimEntry, ModVector, Result, SimpleDesc, Verdict};

const D: u32 = 6;
const CAP: u32 = 6;

struct Outcome {
    ok: bool,
    detail: String,
}

fn summarize(entries: &[ClaimEntry], ok: impl Fn(&ClaimEntry) -> bool) -> Outcome {
    let bad: Vec<String> = entries
        .iter()
        .filter(|e| !ok(e))
        .map(|e| format!("{} {}: {}", e.id, e.verdict, e.detail))
        .collect();
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            entries
                .iter()
                .map(|e| e.id.as_str())
                .collect::<Vec<_>>()
                .join(", ")
        } else {
            bad.join(" | ")
        },
    }
}

fn all_pass(entries: Result<Vec<ClaimEntry>>) -> Outcome {
    match entries {
        Ok(es) => summarize(&es, |e| e.verdict == Verdict::Pass),
        Err(e) => Outcome {
            ok: false,
            detail: format!("error: {e}"),
        },
    }
}

fn c1() -> Outcome {
    all_pass((|| Ok(vec![suite::relations()?, suite::associativity(4)?]))())
}

fn c2() -> Outcome {
    all_pass(suite::matrix_units(5).map(|e| vec![e]))
}

fn c3() -> Outcome {
    all_pass((|| {
        Ok(vec![
            suite::representation_border(4, 16)?,
            suite::diffop(10, 6)?,
        ])
    })())
}

fn c4() -> Outcome {
    all_pass(suite::inf_quotient_split(RunConfig::default().seed).map(|e| vec![e]))
}

fn c5() -> Outcome {
    all_pass(suite::case_iii().map(|e| vec![e]))
}

/// Passes when certificates replay, whichever way the comparison falls.
fn c6() -> Outcome {
    let seed = RunConfig::default().seed;
    let entries = || -> Result<Vec<ClaimEntry>> {
        Ok(vec![
            suite::oracle_consistency(seed)?,
            suite::nonsplit_iff_nonzero()?,
        ])
    };
    match entries() {
        Ok(es) => {
            let mut o = summarize(&es, |e| e.verdict != Verdict::Fail);
            let cmp = es[1].certificate["comparison"]
                .as_str()
                .unwrap_or("?")
                .to_string();
            o.detail = format!("coboundary probe {cmp}; {}", o.detail);
            o
        }
        Err(e) => Outcome {
            ok: false,
            detail: format!("error: {e}"),
        },
    }
}

fn c7() -> Outcome {
    all_pass((|| {
        let mut es = Vec::new();
        for (l, l2) in [(int(1), int(2)), (int(-1), frac(1, 2)), (int(2), int(-1))] {
            es.push(prime_identities_check(&l, &l2, D, CAP)?);
        }
        es.push(suite::graph_entry(
            &link_graph(&[int(1), int(2)], D, CAP)?,
            CAP,
        )?);
        Ok(es)
    })())
}

fn c8() -> Outcome {
    all_pass((|| {
        let e0 = ModVector::shift_basis(0);
        let case_ii = ExtSpec::onto_fin(SimpleDesc::InfShift, one(), e0)?;
        let case_iii = ExtSpec::onto_fin(SimpleDesc::fin(one())?, one(), ModVector::Fin(one()))?;
        Ok(vec![
            jategaonkar_check(&case_ii, D, CAP)?,
            jategaonkar_check(&case_iii, D, CAP)?,
        ])
    })())
}

fn c9() -> Outcome {
    all_pass((|| {
        Ok(vec![
            lann_chain_check(4, 8)?,
            suite::essential(RunConfig::default().seed)?,
        ])
    })())
}

/// The binary under its default configuration, twice.
fn c10() -> Outcome {
    let runs: Vec<_> = (0..2)
        .map(|_| {
            let start = Instant::now();
            let out = Command::new(env!("CARGO_BIN_EXE_bicyclic"))
                .arg("verify")
                .output();
            (out, start.elapsed())
        })
        .collect();
    let mut problems = Vec::new();
    let mut outputs = Vec::new();
    for (k, (out, took)) in runs.iter().enumerate() {
        match out {
            Ok(o) => {
                if o.status.code() != Some(0) {
                    problems.push(format!("run {k} exit {:?}", o.status.code()));
                }
                if *took >= Duration::from_secs(60) {
                    problems.push(format!("run {k} took {took:.1?}"));
                }
                outputs.push(o.stdout.clone());
            }
            Err(e) => problems.push(format!("run {k}: {e}")),
        }
    }
    if outputs.len() == 2 && outputs[0] != outputs[1] {
        problems.push("reports differ".into());
    }
    let summary = outputs
        .first()
        .and_then(|o| serde_json::from_slice::<serde_json::Value>(o).ok())
        .map(|v| v["summary"].to_string())
        .unwrap_or_default();
    Outcome {
        ok: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("exit 0, byte-identical, summary {summary}")
        } else {
            problems.join("; ")
        },
    }
}

type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "monomial arithmetic and associativity", 5, c1),
        (2, "matrix-unit law", 2, c2),
        (3, "representation consistency", 5, c3),
        (4, "infinite quotient always splits", 5, c4),
        (5, "one-dimensional grid", 2, c5),
        (6, "split and iso oracle consistency", 5, c6),
        (7, "prime identities and link graph", 30, c7),
        (8, "no Jategaonkar alternative", 10, c8),
        (9, "non-noetherian witnesses", 10, c9),
        (
            10,
            "end-to-end verify, two runs of at most 60s each",
            120,
            c10,
        ),
    ];
    let mut failed = 0;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let o = run();
        let took = start.elapsed();
        let in_time = took < Duration::from_secs(limit);
        let ok = o.ok && in_time;
        failed += usize::from(!ok);
        println!(
            "criterion {n:>2} {} {name} [{:.2}s, limit {limit}s{}] {}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            if in_time { "" } else { ", too slow" },
            o.detail
        );
    }
    println!("{} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
