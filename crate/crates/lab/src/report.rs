//! The JSON report of `verify`. It holds no timings, paths or worker
//! counts, so equal inputs give byte-equal reports.

use balance_core::claims::{ClaimRun, Fact, TrialOutcome};
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialJson {
    pub index: u64,
    pub seed: u64,
    pub passed: bool,
    pub facts: Map<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub claim: &'static str,
    pub n: usize,
    pub params: Map<String, Value>,
    pub seed: u64,
    /// The seed was drawn from the clock rather than given.
    pub seed_auto: bool,
    pub trials: u64,
    pub passed: u64,
    pub failed: u64,
    pub all_passed: bool,
    /// Per-trial seeds of the failures, for replay.
    pub failure_seeds: Vec<u64>,
    pub outcomes: Vec<TrialJson>,
}

fn fact(f: &Fact) -> Value {
    match f {
        Fact::Int(v) => Value::from(*v),
        Fact::Bool(v) => Value::from(*v),
        Fact::Real(v) => Value::from(*v),
        Fact::Text(v) => Value::from(v.as_str()),
    }
}

impl VerifyReport {
    pub fn new(run: &ClaimRun, seed: u64, seed_auto: bool, outcomes: &[TrialOutcome]) -> Self {
        use balance_core::claims::Claim::*;
        let mut params = Map::new();
        match run.claim {
            OddCycle => {
                params.insert("k".into(), run.k.into());
                params.insert("alpha".into(), run.alpha.into());
            }
            C4kUpper | SplitColoring => {
                params.insert("k".into(), run.k.into());
            }
            C4k2 => {
                params.insert("k".into(), run.k.into());
                params.insert("excess".into(), run.excess.into());
            }
            K5Coloring => {
                params.insert("epsilon".into(), run.epsilon.into());
            }
            HalfFamilyTuran => {}
        }
        let passed = outcomes.iter().filter(|t| t.passed).count() as u64;
        let trials = outcomes.len() as u64;
        VerifyReport {
            claim: run.claim.as_str(),
            n: run.n,
            params,
            seed,
            seed_auto,
            trials,
            passed,
            failed: trials - passed,
            all_passed: passed == trials,
            failure_seeds: outcomes.iter().filter(|t| !t.passed).map(|t| t.seed).collect(),
            outcomes: outcomes
                .iter()
                .map(|t| TrialJson {
                    index: t.index,
                    seed: t.seed,
                    passed: t.passed,
                    facts: t.facts.iter().map(|(k, v)| (k.to_string(), fact(v))).collect(),
                })
                .collect(),
        }
    }
}
