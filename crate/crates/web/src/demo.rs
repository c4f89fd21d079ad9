//! Plain-Rust implementations behind the exported functions, returning
//! JSON strings so they can be tested off the browser.

use bandinv::verify::{verify_random, Fault};
use bandinv::{with_field, Algorithm, Field, FieldSpec, OpCounter, Phase, Stencil, Tally};
use serde::Serialize;

/// Largest sequence length the page will compute, per algorithm.
pub const MAX_N_SLIDING: usize = 200_000;
pub const MAX_N_NAIVE: usize = 20_000;
pub const MAX_N_VERIFY: usize = 24;

#[derive(Debug, Serialize)]
struct Counts {
    mul: u64,
    div: u64,
    add: u64,
}

impl From<Tally> for Counts {
    fn from(t: Tally) -> Self {
        Self {
            mul: t.muls,
            div: t.divs,
            add: t.adds,
        }
    }
}

#[derive(Debug, Serialize)]
struct Ops {
    generate: Counts,
    eliminate: Counts,
    oracle: Counts,
}

impl From<&OpCounter> for Ops {
    fn from(c: &OpCounter) -> Self {
        Self {
            generate: c.tally(Phase::Generate).into(),
            eliminate: c.tally(Phase::Eliminate).into(),
            oracle: c.tally(Phase::Oracle).into(),
        }
    }
}

#[derive(Debug, Serialize)]
struct SequenceView {
    n: usize,
    k: usize,
    k_eff: usize,
    reversed: bool,
    bits: String,
    singular_orders: Vec<usize>,
    runs: Vec<(u8, usize)>,
    ops: Ops,
    best_effort: bool,
}

fn field(spec: &str) -> Result<FieldSpec, String> {
    spec.parse().map_err(|e: bandinv::Error| e.to_string())
}

fn check_n(n: usize, max: usize) -> Result<(), String> {
    if n == 0 || n > max {
        return Err(format!("n must be between 1 and {max}"));
    }
    Ok(())
}

/// Sequence, singular orders, run-length form and operation counts.
pub fn sequence(stencil: &str, field_spec: &str, n: usize, algo: &str) -> Result<String, String> {
    let algo: Algorithm = algo.parse()?;
    let max = match algo {
        Algorithm::Sliding => MAX_N_SLIDING,
        Algorithm::Naive => MAX_N_NAIVE,
        Algorithm::Dense => return Err("the dense oracle is not offered here".to_string()),
    };
    check_n(n, max)?;
    with_field!(field(field_spec)?, |f| {
        let s = Stencil::parse(stencil, f).map_err(|e| e.to_string())?;
        let norm = s.normalize();
        let mut c = OpCounter::new();
        let seq = algo.run(&s, n, &mut c).map_err(|e| e.to_string())?;
        let view = SequenceView {
            n,
            k: s.k(),
            k_eff: norm.k(),
            reversed: norm.reversed(),
            bits: seq.to_string(),
            singular_orders: seq.singular_orders(),
            runs: seq
                .runs()
                .into_iter()
                .map(|(b, l)| (u8::from(b), l))
                .collect(),
            ops: (&c).into(),
            best_effort: !s.field().is_exact(),
        };
        Ok(serde_json::to_string(&view).expect("view serializes"))
    })
}

#[derive(Debug, Serialize)]
struct Comparison {
    n: usize,
    k_eff: usize,
    agree: bool,
    sliding: Ops,
    naive: Ops,
    /// k(2k+1)n + k²n/2 for the effective half-bandwidth.
    budget: u64,
}

/// Runs sliding and naive on the same input and reports both counters.
pub fn compare_ops(stencil: &str, field_spec: &str, n: usize) -> Result<String, String> {
    check_n(n, MAX_N_NAIVE)?;
    with_field!(field(field_spec)?, |f| {
        let s = Stencil::parse(stencil, f).map_err(|e| e.to_string())?;
        let k = s.normalize().k() as u64;
        let (mut cs, mut cn) = (OpCounter::new(), OpCounter::new());
        let a = Algorithm::Sliding
            .run(&s, n, &mut cs)
            .map_err(|e| e.to_string())?;
        let b = Algorithm::Naive
            .run(&s, n, &mut cn)
            .map_err(|e| e.to_string())?;
        let view = Comparison {
            n,
            k_eff: k as usize,
            agree: a == b,
            sliding: (&cs).into(),
            naive: (&cn).into(),
            budget: k * (2 * k + 1) * n as u64 + k * k * n as u64 / 2,
        };
        Ok(serde_json::to_string(&view).expect("view serializes"))
    })
}

#[derive(Debug, Serialize)]
struct VerifyView {
    total: usize,
    passed: usize,
    counterexample: Option<String>,
}

/// Seeded random cross-check of sliding, naive and dense sequences.
pub fn verify(
    field_spec: &str,
    count: usize,
    max_k: usize,
    n: usize,
    seed: u64,
) -> Result<String, String> {
    check_n(n, MAX_N_VERIFY)?;
    if count == 0 || count > 2_000 || max_k == 0 || max_k > 6 {
        return Err("count must be 1..=2000 and k 1..=6".to_string());
    }
    with_field!(field(field_spec)?, |f| {
        let r = verify_random(&f, count, max_k, n, seed, Fault::None).map_err(|e| e.to_string())?;
        let view = VerifyView {
            total: r.total,
            passed: r.passed,
            counterexample: r.worst.map(|c| c.to_string()),
        };
        Ok(serde_json::to_string(&view).expect("view serializes"))
    })
}
