use bandinv::{InvertibilitySequence, OpCounter, Phase, Tally};
use serde::{Deserialize, Serialize};

/// Machine-readable result of one `seq` run. Field order is the JSON key
/// order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub n: usize,
    pub k: usize,
    pub field: String,
    pub algo: String,
    pub bits: String,
    pub singular_orders: Vec<usize>,
    pub ops: Ops,
    pub wall_ms: f64,
    pub best_effort: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ops {
    pub generate: Counts,
    pub eliminate: Counts,
    pub oracle: Counts,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Counts {
    pub mul: u64,
    pub div: u64,
    pub add: u64,
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

impl From<&OpCounter> for Ops {
    fn from(c: &OpCounter) -> Self {
        Self {
            generate: c.tally(Phase::Generate).into(),
            eliminate: c.tally(Phase::Eliminate).into(),
            oracle: c.tally(Phase::Oracle).into(),
        }
    }
}

/// `(bit,len)` pairs, e.g. `(1,2)(0,1)`.
pub fn format_runs(seq: &InvertibilitySequence) -> String {
    seq.runs()
        .into_iter()
        .map(|(b, len)| format!("({},{len})", u8::from(b)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_format() {
        let s: InvertibilitySequence = "010101".parse().unwrap();
        assert_eq!(format_runs(&s), "(0,1)(1,1)(0,1)(1,1)(0,1)(1,1)");
        let s: InvertibilitySequence = "1110".parse().unwrap();
        assert_eq!(format_runs(&s), "(1,3)(0,1)");
    }
}
