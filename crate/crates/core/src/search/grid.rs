//! Exhaustive search over `(w, v)` pairs with an append-only JSON-lines
//! ledger. Candidates are evaluated in parallel and written in canonical
//! order by a single writer, so the ledger does not depend on thread count.

use std::io::Write;

use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::extend::{se_extend, Candidate, SeedStructure, Verdict};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::join::WeightPair;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Upper bound on `w0`, `winf`.
    pub w_max: u64,
    /// Upper bound on `v0`, `vinf`.
    pub v_max: u64,
    /// Keep only `vinf / v0 = k * winf / w0`.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_rational")]
    pub ratio: Option<Rational>,
    /// Keep only `n > 0`.
    #[serde(default = "yes")]
    pub positive_n: bool,
}

fn yes() -> bool {
    true
}

mod opt_rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exactmath::Rational;
    use crate::serde_util::{format_rational, parse_rational};

    pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(r) => s.serialize_str(&format_rational(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| parse_rational(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s}"))))
            .transpose()
    }
}

impl GridSpec {
    pub fn new(w_max: u64, v_max: u64) -> Self {
        GridSpec {
            w_max,
            v_max,
            ratio: None,
            positive_n: true,
        }
    }

    pub fn with_ratio(mut self, k: Rational) -> Self {
        self.ratio = Some(k);
        self
    }

    /// Candidate pairs in lexicographic order of `(w0, winf, v0, vinf)`,
    /// restricted to coprime pairs with `w0 > winf`.
    pub fn pairs(&self) -> Result<Vec<(WeightPair, WeightPair)>> {
        if let Some(k) = &self.ratio {
            if !k.is_positive() {
                return Err(Error::invalid("ratio must be positive"));
            }
        }
        let mut out = Vec::new();
        for w0 in 2..=self.w_max {
            for winf in (1..w0).filter(|&x| x.gcd(&w0) == 1) {
                let w = WeightPair { a0: w0, ainf: winf };
                match &self.ratio {
                    Some(k) => {
                        // vinf / v0 = k winf / w0 in lowest terms.
                        let a = k.denom() * num_bigint::BigInt::from(w0);
                        let b = k.numer() * num_bigint::BigInt::from(winf);
                        let g = a.gcd(&b);
                        let (v0, vinf) = ((a / &g).to_u64(), (b / g).to_u64());
                        if let (Some(v0), Some(vinf)) = (v0, vinf) {
                            if v0 <= self.v_max && vinf <= self.v_max {
                                out.push((w, WeightPair { a0: v0, ainf: vinf }));
                            }
                        }
                    }
                    None => {
                        for v0 in 1..=self.v_max {
                            for vinf in (1..=self.v_max).filter(|&x| x.gcd(&v0) == 1) {
                                out.push((w, WeightPair { a0: v0, ainf: vinf }));
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSummary {
    pub evaluated: usize,
    pub filtered: usize,
    pub admitted: usize,
}

/// Candidates per parallel batch; each batch is flushed before the next.
pub const CHUNK: usize = 2048;

/// Evaluates `pairs` on `threads` workers and appends every admitted
/// candidate to `ledger`, one JSON object per line.
pub fn evaluate_pairs<W: Write>(
    seed: &SeedStructure,
    pairs: &[(WeightPair, WeightPair)],
    positive_n: bool,
    threads: usize,
    ledger: &mut W,
) -> Result<GridSummary> {
    seed.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::invariant(format!("thread pool: {e}")))?;
    let mut summary = GridSummary::default();
    for chunk in pairs.chunks(CHUNK) {
        let results: Vec<Result<Option<Candidate>>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|&(w, v)| {
                    let c = se_extend(seed, w, v)?;
                    let keep = c.verdict == Verdict::SmoothFamily && (!positive_n || c.stage.n.is_positive());
                    Ok(keep.then_some(c))
                })
                .collect()
        });
        for r in results {
            summary.evaluated += 1;
            match r? {
                Some(c) => {
                    let line = serde_json::to_string(&c).map_err(|e| Error::invariant(e.to_string()))?;
                    writeln!(ledger, "{line}").map_err(|e| Error::invalid(format!("ledger write: {e}")))?;
                    summary.admitted += 1;
                }
                None => summary.filtered += 1,
            }
        }
        ledger.flush().map_err(|e| Error::invalid(format!("ledger flush: {e}")))?;
    }
    Ok(summary)
}

pub fn grid_search<W: Write>(seed: &SeedStructure, spec: &GridSpec, threads: usize, ledger: &mut W) -> Result<GridSummary> {
    let pairs = spec.pairs()?;
    evaluate_pairs(seed, &pairs, spec.positive_n, threads, ledger)
}

/// Parses a ledger and re-checks every entry.
pub fn replay_ledger(text: &str) -> Result<Vec<(Candidate, bool)>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let c: Candidate = serde_json::from_str(l).map_err(|e| Error::invalid(format!("ledger line: {e}")))?;
            let ok = c.recheck();
            Ok((c, ok))
        })
        .collect()
}
