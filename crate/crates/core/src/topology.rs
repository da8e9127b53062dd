//! Closed-form topological invariants of the iterated join `M^{2k+1}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::Integer;
use crate::join::{self, JoinTower, Stage2C1, WeightPair};

/// Claimed evenness of one Betti number. `consistent` compares the claim
/// with the known value when there is one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityClaim {
    pub degree: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub known_value: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consistent: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyReport {
    pub k: u32,
    pub dimension: u32,
    pub pi1_trivial: bool,
    pub pi2_rank: u64,
    pub pi3_rank: u64,
    /// `π_4 = Z_2^r`.
    pub pi4_2torsion_rank: u64,
    pub h2_rank: u64,
    /// `None` when not determined by the closed forms (`k = 2`).
    pub h3: Option<u64>,
    pub h4_free_rank: Option<u64>,
    /// Degrees `3 ..= 2 floor((k+2)/2) - 1` whose Betti numbers are claimed even.
    pub even_betti_claims: Vec<ParityClaim>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim7_torsion: Option<Dim7Torsion>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stage2: Option<Stage2C1>,
}

pub fn h4_free_rank(k: u32) -> Option<u64> {
    (k >= 3).then(|| k as u64 * (k as u64 - 3) / 2)
}

pub fn invariants(k: u32) -> Result<TopologyReport> {
    if k < 2 {
        return Err(Error::invalid(format!("height must be at least 2, got {k}")));
    }
    let k64 = k as u64;
    let h3 = (k >= 3).then_some(0);
    let h4 = h4_free_rank(k);
    let top = 2 * ((k + 2) / 2) - 1;
    let even_betti_claims = (3..=top)
        .map(|degree| {
            let known_value = match degree {
                3 => h3,
                4 => h4,
                _ => None,
            };
            ParityClaim {
                degree,
                known_value,
                consistent: known_value.map(|b| b % 2 == 0),
            }
        })
        .collect();
    Ok(TopologyReport {
        k,
        dimension: 2 * k + 1,
        pi1_trivial: true,
        pi2_rank: k64 - 1,
        pi3_rank: k64,
        pi4_2torsion_rank: k64,
        h2_rank: k64 - 1,
        h3,
        h4_free_rank: h4,
        even_betti_claims,
        dim7_torsion: None,
        stage2: None,
    })
}

/// Orders of the two cyclic summands of `H^4(M^7, Z)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dim7Torsion {
    #[serde(with = "crate::serde_util::bigint")]
    pub first: Integer,
    #[serde(with = "crate::serde_util::bigint")]
    pub second: Integer,
}

/// `(v0 vinf m^2 l2inf, w2_0 w2_inf (l2_0)^2)` for
/// `M^7 = (S^3 *_{l1} S^3_{w1}) *_{l2} S^3_{w2}`, where `v` and `m` belong to
/// the quasi-regular structure on the inner join. `l2inf` enters to the first
/// power.
pub fn dim7_torsion(v: WeightPair, m: &Integer, l2: WeightPair, w2: WeightPair) -> Dim7Torsion {
    Dim7Torsion {
        first: v.zero_int() * v.inf_int() * m * m * l2.inf_int(),
        second: w2.zero_int() * w2.inf_int() * l2.zero_int() * l2.zero_int(),
    }
}

/// Report for a concrete tower: the closed forms for its height plus the
/// stage-2 Chern data (height 2) or the torsion of `H^4` (height 3 over the
/// standard sphere with the inner Reeb choice fixed).
pub fn tower_report(tower: &JoinTower) -> Result<TopologyReport> {
    let k = tower.height() as u32;
    let mut report = invariants(k)?;
    if k == 2 {
        let st = tower.stage(2);
        report.stage2 = Some(join::stage2_c1(st.l.unwrap(), st.w));
    }
    if k == 3 && tower.stage(1).w == WeightPair::unit() {
        if let Some(v) = tower.stage(2).v {
            let inner = tower.stage(2);
            let inv = join::stage_invariants(inner.l.unwrap(), inner.w, v);
            let outer = tower.stage(3);
            report.dim7_torsion = Some(dim7_torsion(v, &inv.m, outer.l.unwrap(), outer.w));
        }
    }
    Ok(report)
}
