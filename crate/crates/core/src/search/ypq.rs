//! `Y^{p,q}` carrying a quasi-regular cscS ray: `4 p^2 - 3 q^2 = n^2`.

use num_integer::{Integer as _, Roots};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YpqSolution {
    pub p: u64,
    pub q: u64,
    pub n: u64,
}

/// All coprime `1 <= q < p <= max_p` with `4 p^2 - 3 q^2` a perfect square,
/// ordered by `(p, q)`.
pub fn ypq_csc_search(max_p: u64) -> Vec<YpqSolution> {
    let mut out = Vec::new();
    for p in 2..=max_p {
        let four_p2 = 4 * p as u128 * p as u128;
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            let d = four_p2 - 3 * q as u128 * q as u128;
            let n = d.sqrt();
            if n * n == d {
                out.push(YpqSolution { p, q, n: n as u64 });
            }
        }
    }
    out
}
