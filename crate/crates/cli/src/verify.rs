//! The `verify` subcommand: suites of checks run on a worker pool, reported
//! as JSON Lines in a fixed order.

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::Instant;

use clap::ValueEnum;
use mzv_hopf::antihook::run_schur_check;
use mzv_hopf::genfunc::{exact_identity_check, find_remark_counterexample, Failure, IdentityName, RemarkWitness};
use mzv_hopf::hopf::{run_hopf_check, SuiteReport, HOPF_CHECKS};
use mzv_hopf::numeric::{
    check_numeric_identity, check_schur_sum_formula, check_sum_formula, corollary_consistency,
    remark_b0_column_numeric, Evaluator, MzvCache, NumericFailure, NumericIdentity, NumericReport, Sample,
    SumReport,
};
use mzv_hopf::poly::format_rational;
use serde_json::{json, Map, Value};

use crate::format::{combination_json, index_json, sig12};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Hopf,
    GenfuncExact,
    Schur,
    KeyLemma,
    GenfuncNumeric,
    SumFormulas,
    MainTheorem,
    RemarkCounterexample,
    All,
}

impl Suite {
    const EVERY: [Suite; 8] = [
        Suite::Hopf,
        Suite::GenfuncExact,
        Suite::Schur,
        Suite::KeyLemma,
        Suite::GenfuncNumeric,
        Suite::SumFormulas,
        Suite::MainTheorem,
        Suite::RemarkCounterexample,
    ];

    fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::GenfuncExact => "genfunc-exact",
            Suite::Schur => "schur",
            Suite::KeyLemma => "key-lemma",
            Suite::GenfuncNumeric => "genfunc-numeric",
            Suite::SumFormulas => "sum-formulas",
            Suite::MainTheorem => "main-theorem",
            Suite::RemarkCounterexample => "remark-counterexample",
            Suite::All => "all",
        }
    }
}

/// Expands `all` and removes duplicates, keeping the canonical order.
pub fn normalize_suites(requested: &[Suite]) -> Vec<Suite> {
    let mut out: Vec<Suite> = if requested.is_empty() || requested.contains(&Suite::All) {
        Suite::EVERY.to_vec()
    } else {
        requested.to_vec()
    };
    out.sort();
    out.dedup();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

pub struct VerifyConfig {
    pub suites: Vec<Suite>,
    pub max_weight: u32,
    pub tol: f64,
    pub order: Option<usize>,
    pub jobs: usize,
    pub samples: Vec<Sample>,
    pub timing: bool,
    pub format: ReportFormat,
}

type Record = Map<String, Value>;
type JobFn = Box<dyn Fn(&mut Evaluator) -> Vec<Record> + Send + Sync>;

struct Job {
    suite: Suite,
    run: JobFn,
}

fn record(pairs: Value) -> Record {
    match pairs {
        Value::Object(m) => m,
        _ => unreachable!("records are objects"),
    }
}

fn suite_record(r: &SuiteReport) -> Record {
    record(json!({
        "check": r.check,
        "max_weight": r.max_weight,
        "cases": r.cases,
        "holds": r.holds,
        "first_failure": r.first_failure,
    }))
}

fn exact_failure(f: &Failure) -> Value {
    json!({
        "part": f.part,
        "power": f.power,
        "index": index_json(&f.index),
        "monomial": f.monomial.key(),
        "lhs": format_rational(&f.lhs),
        "rhs": format_rational(&f.rhs),
    })
}

fn numeric_failure(f: &NumericFailure) -> Value {
    json!({
        "part": f.part,
        "sample": f.sample,
        "power": f.power,
        "t_degree": f.t_degree,
        "lhs": sig12(f.lhs),
        "rhs": sig12(f.rhs),
    })
}

fn numeric_record(r: &NumericReport) -> Record {
    record(json!({
        "check": r.identity,
        "order": r.order,
        "samples": r.samples.len(),
        "tol": sig12(r.tol),
        "max_abs_residual": sig12(r.max_abs_residual),
        "holds": r.holds,
        "first_failure": r.first_failure.as_ref().map(numeric_failure),
    }))
}

fn sum_record(r: &SumReport) -> Record {
    let mut m = record(json!({
        "check": if r.s.is_some() { "schur_sum_formula" } else { "sum_formula" },
        "weight": r.weight,
        "r": r.r,
    }));
    match r.s {
        Some(s) => m.insert("s".into(), json!(s)),
        None => m.insert("star".into(), json!(r.star)),
    };
    m.extend(record(json!({
        "cases": r.cases,
        "lhs": sig12(r.lhs),
        "rhs": sig12(r.rhs),
        "residual": sig12(r.residual),
        "max_t_part": sig12(r.max_t_part),
        "tol": sig12(r.tol),
        "holds": r.holds,
    })));
    m
}

fn error_record(check: &str, e: impl std::fmt::Display) -> Record {
    record(json!({"check": check, "holds": false, "error": e.to_string()}))
}

fn witness_json(w: &RemarkWitness) -> Value {
    json!({
        "weight": w.weight,
        "r": w.r,
        "s": w.s,
        "lhs": combination_json(&w.lhs),
        "rhs": combination_json(&w.rhs),
    })
}

fn remark_record(ev: &mut Evaluator, order: usize, tol: f64) -> Record {
    let outcome = find_remark_counterexample(&mut ev.alg, order);
    let numeric = remark_b0_column_numeric(ev, order, tol);
    let (b0_holds, b0) = match &numeric {
        Ok(r) => (r.holds, json!({"max_abs_residual": sig12(r.max_abs_residual), "holds": r.holds})),
        Err(e) => (false, json!({"holds": false, "error": e.to_string()})),
    };
    let status = if outcome.inconclusive() { "inconclusive" } else { "witness" };
    record(json!({
        "check": "remark_counterexample",
        "order": order,
        "status": status,
        "witness": outcome.witness.as_ref().map(witness_json),
        "b0_column_numeric": b0,
        "b0_column_index_level": {
            "agrees": outcome.b0_mismatch.is_none(),
            "first_mismatch": outcome.b0_mismatch.as_ref().map(witness_json),
        },
        "holds": !outcome.inconclusive() && b0_holds,
    }))
}

fn build_jobs(cfg: &VerifyConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    let w = cfg.max_weight;
    let tol = cfg.tol;
    let order = cfg.order;
    for &suite in &cfg.suites {
        match suite {
            Suite::Hopf => {
                for check in HOPF_CHECKS {
                    jobs.push(Job {
                        suite,
                        run: Box::new(move |ev| {
                            vec![suite_record(&run_hopf_check(&mut ev.alg, check, w).expect("known check"))]
                        }),
                    });
                }
            }
            Suite::Schur | Suite::KeyLemma => {
                let checks: &[&'static str] = if suite == Suite::Schur {
                    &["recursion_closed_form", "compatibility", "definition_chain", "antipode", "alternating2", "alternating3"]
                } else {
                    &["key", "key_star"]
                };
                for &check in checks {
                    jobs.push(Job {
                        suite,
                        run: Box::new(move |ev| {
                            vec![suite_record(&run_schur_check(&mut ev.alg, check, w).expect("known check"))]
                        }),
                    });
                }
            }
            Suite::GenfuncExact => {
                for name in IdentityName::ALL {
                    let n = order.unwrap_or(name.default_order());
                    jobs.push(Job {
                        suite,
                        run: Box::new(move |ev| {
                            let r = exact_identity_check(&mut ev.alg, name, n);
                            vec![record(json!({
                                "check": name.as_str(),
                                "order": r.order,
                                "holds": r.holds,
                                "first_failure": r.first_failure.as_ref().map(exact_failure),
                            }))]
                        }),
                    });
                }
            }
            Suite::GenfuncNumeric | Suite::MainTheorem => {
                let theorems = [NumericIdentity::MainTheorem, NumericIdentity::MainTheoremStar];
                let names: Vec<NumericIdentity> = NumericIdentity::ALL
                    .into_iter()
                    .filter(|n| theorems.contains(n) == (suite == Suite::MainTheorem))
                    .collect();
                for name in names {
                    let n = order.unwrap_or(name.default_order());
                    let samples = cfg.samples.clone();
                    jobs.push(Job {
                        suite,
                        run: Box::new(move |ev| match check_numeric_identity(ev, name, n, &samples, tol) {
                            Ok(r) => vec![numeric_record(&r)],
                            Err(e) => vec![error_record(name.as_str(), e)],
                        }),
                    });
                }
                if suite == Suite::MainTheorem {
                    let n = order.unwrap_or(NumericIdentity::MainTheorem.default_order());
                    let samples = cfg.samples.clone();
                    jobs.push(Job {
                        suite,
                        run: Box::new(move |ev| match corollary_consistency(ev, n, &samples, tol) {
                            Ok(reports) => reports.iter().map(numeric_record).collect(),
                            Err(e) => vec![error_record("corollary_consistency", e)],
                        }),
                    });
                }
            }
            Suite::SumFormulas => {
                for weight in 2..=w {
                    jobs.push(Job {
                        suite,
                        run: Box::new(move |ev| {
                            let mut out = Vec::new();
                            for r in 0..=(weight as usize - 2) {
                                for star in [false, true] {
                                    out.push(match check_sum_formula(ev, weight, r, star, tol) {
                                        Ok(rep) => sum_record(&rep),
                                        Err(e) => error_record("sum_formula", e),
                                    });
                                }
                            }
                            out
                        }),
                    });
                }
                for weight in 2..=w {
                    jobs.push(Job {
                        suite,
                        run: Box::new(move |ev| {
                            let mut out = Vec::new();
                            for r in 0..=(weight as usize - 2) {
                                for s in 0..=(weight as usize - 2 - r) {
                                    out.push(match check_schur_sum_formula(ev, weight, r, s, tol) {
                                        Ok(rep) => sum_record(&rep),
                                        Err(e) => error_record("schur_sum_formula", e),
                                    });
                                }
                            }
                            out
                        }),
                    });
                }
            }
            Suite::RemarkCounterexample => {
                let n = order.unwrap_or(6);
                jobs.push(Job { suite, run: Box::new(move |ev| vec![remark_record(ev, n, tol)]) });
            }
            Suite::All => unreachable!("normalized away"),
        }
    }
    jobs
}

fn text_line(rec: &Record) -> String {
    let status = if rec.get("holds") == Some(&Value::Bool(true)) { "PASS" } else { "FAIL" };
    let mut line = format!("{status} {} {}", rec["suite"].as_str().unwrap_or(""), rec["check"].as_str().unwrap_or(""));
    for (k, v) in rec {
        if matches!(k.as_str(), "suite" | "check" | "holds") || v.is_null() {
            continue;
        }
        line.push_str(&format!(" {k}={v}"));
    }
    line
}

pub struct VerifyOutcome {
    pub failed: usize,
    pub cache: MzvCache,
}

/// Runs every selected suite, writing one line per check to `out`.
pub fn run_verify(cfg: &VerifyConfig, cache: MzvCache, out: &mut dyn Write) -> Result<VerifyOutcome, CliError> {
    let jobs = build_jobs(cfg);
    let next = AtomicUsize::new(0);
    let mzv_tol = (cfg.tol * 1e-3).min(1e-12);
    let workers = cfg.jobs.max(1).min(jobs.len().max(1));
    let (tx, rx) = mpsc::channel::<(usize, Vec<Record>)>();
    let mut merged = cache.clone();
    let mut checks = 0;
    let mut failed = 0;
    let write_err = |e: std::io::Error| CliError::Runtime(format!("cannot write report: {e}"));

    std::thread::scope(|scope| -> Result<(), CliError> {
        let mut handles = Vec::new();
        for _ in 0..workers {
            let tx = tx.clone();
            let (jobs, next, seed) = (&jobs, &next, &cache);
            let timing = cfg.timing;
            handles.push(scope.spawn(move || {
                let mut ev = Evaluator::new(mzv_tol);
                ev.cache_mut().merge(seed);
                loop {
                    let i = next.fetch_add(1, Ordering::SeqCst);
                    let Some(job) = jobs.get(i) else { break };
                    let started = Instant::now();
                    let mut records = (job.run)(&mut ev);
                    let elapsed = started.elapsed().as_secs_f64() * 1e3;
                    for rec in &mut records {
                        let mut full = Record::new();
                        full.insert("suite".into(), json!(job.suite.name()));
                        full.append(rec);
                        if timing {
                            full.insert("elapsed_ms".into(), sig12(elapsed));
                        }
                        *rec = full;
                    }
                    if tx.send((i, records)).is_err() {
                        break;
                    }
                }
                ev.cache().clone()
            }));
        }
        drop(tx);

        let mut pending: BTreeMap<usize, Vec<Record>> = BTreeMap::new();
        let mut emitted = 0;
        for (i, records) in rx {
            pending.insert(i, records);
            while let Some(records) = pending.remove(&emitted) {
                for rec in records {
                    checks += 1;
                    if rec.get("holds") != Some(&Value::Bool(true)) {
                        failed += 1;
                    }
                    let line = match cfg.format {
                        ReportFormat::Json => Value::Object(rec).to_string(),
                        ReportFormat::Text => text_line(&rec),
                    };
                    writeln!(out, "{line}").map_err(write_err)?;
                }
                emitted += 1;
            }
        }
        for h in handles {
            let worker_cache = h.join().map_err(|_| CliError::Runtime("worker panicked".into()))?;
            merged.merge(&worker_cache);
        }
        Ok(())
    })?;

    let summary = json!({"suite": "summary", "checks": checks, "failed": failed, "holds": failed == 0});
    let line = match cfg.format {
        ReportFormat::Json => summary.to_string(),
        ReportFormat::Text => format!("{} {checks} checks, {failed} failed", if failed == 0 { "PASS" } else { "FAIL" }),
    };
    writeln!(out, "{line}").map_err(write_err)?;
    out.flush().map_err(write_err)?;
    Ok(VerifyOutcome { failed, cache: merged })
}
