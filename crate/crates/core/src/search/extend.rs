//! Extending a Gorenstein Sasaki-Einstein family by one more join.

use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::congruence::{congruence_certify, ResidueCertificate};
use super::family::{FamilyPolynomial, IntPoly};
use crate::error::{Error, Result};
use crate::exactmath::{factorize, int, FactorEffort, FactoredInteger, Integer};
use crate::join::{gorenstein_l, stage_invariants, StageInvariants, WeightPair};

/// A one-parameter family of quasi-regular structures to extend.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedStructure {
    pub dimension: u32,
    #[serde(with = "crate::serde_util::bigint")]
    pub fano_index: Integer,
    pub upsilon: FamilyPolynomial,
    /// Name of the family parameter.
    pub parameter: String,
    /// The transverse Kähler class is a primitive orbifold class.
    pub primitive: bool,
    #[serde(default)]
    pub note: String,
}

impl SeedStructure {
    pub fn validate(&self) -> Result<()> {
        if !self.fano_index.is_positive() {
            return Err(Error::invalid("seed Fano index must be positive"));
        }
        if !self.primitive {
            return Err(Error::invalid(
                "seed must have a primitive transverse Kähler class; the l-selection is only defined for that case",
            ));
        }
        Ok(())
    }

    /// Dimension 7: `Υ_3 = 2^2 3^2 17 (780300 t^2 + 65790 t + 1387)(1020 t + 43)(255 t + 11)`
    /// with Fano index 13.
    pub fn dim7() -> Self {
        SeedStructure {
            dimension: 7,
            fano_index: int(13),
            upsilon: FamilyPolynomial::new(
                &int(4 * 9 * 17),
                vec![
                    IntPoly::from_i64(&[1387, 65790, 780300]),
                    IntPoly::from_i64(&[43, 1020]),
                    IntPoly::from_i64(&[11, 255]),
                ],
            )
            .expect("static family"),
            parameter: "t".into(),
            primitive: true,
            note: "stage-3 quotient of Y^{p,q} *_{(306t+13, 4)} S^3_{(17,3)}; order and index are inputs".into(),
        }
    }

    /// Dimension 9, after `t = 91 t_hat`:
    /// `Υ_4 = 2^4 3^2 7^2 13 17 31 (6461664300 t^2 + 5986890 t + 1387)(92820 t + 43)(23205 t + 11)`
    /// with Fano index 150.
    pub fn dim9() -> Self {
        SeedStructure {
            dimension: 9,
            fano_index: int(150),
            upsilon: FamilyPolynomial::new(
                &int(16 * 9 * 49 * 13 * 17 * 31),
                vec![
                    IntPoly::from_i64(&[1387, 5986890, 6461664300]),
                    IntPoly::from_i64(&[43, 92820]),
                    IntPoly::from_i64(&[11, 23205]),
                ],
            )
            .expect("static family"),
            parameter: "t_hat".into(),
            primitive: true,
            note: "dimension-7 family joined with S^3_{(49,13)}, v = (49,26), l = (13,62); index is an input".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    SmoothFamily,
    Rejected,
}

/// Everything needed to re-check one extension step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub seed: SeedStructure,
    pub w: WeightPair,
    pub v: WeightPair,
    pub l: WeightPair,
    pub stage: StageInvariants,
    /// `Υ` of the extended family: `m v0 vinf Υ_seed`.
    pub upsilon: FamilyPolynomial,
    /// `linf Υ_seed(t)`, which must be coprime to `l0 w0 winf`.
    pub smoothness_family: FamilyPolynomial,
    pub smoothness_modulus: FactoredInteger,
    pub residues: ResidueCertificate,
    pub verdict: Verdict,
    pub reason: String,
}

impl Candidate {
    /// Recomputes the candidate from its inputs and compares.
    pub fn recheck(&self) -> bool {
        se_extend(&self.seed, self.w, self.v).is_ok_and(|c| &c == self)
    }
}

/// Joins `S^3_w` to every member of the seed family with the Gorenstein
/// choice of `l` and Reeb field `v`, and certifies smoothness by congruences.
pub fn se_extend(seed: &SeedStructure, w: WeightPair, v: WeightPair) -> Result<Candidate> {
    seed.validate()?;
    let (l0, linf) = gorenstein_l(&seed.fano_index, w)?;
    let to64 = |x: &Integer| x.to_u64().ok_or_else(|| Error::invalid("join weights exceed 64 bits"));
    let l = WeightPair::new(to64(&l0)?, to64(&linf)?)?;
    let stage = stage_invariants(l, w, v);
    let step = &stage.m * v.zero_int() * v.inf_int();
    let upsilon = seed.upsilon.times(&step)?;
    let smoothness_family = seed.upsilon.times(&linf)?;
    let smoothness_modulus = factorize(&(l0 * w.zero_int() * w.inf_int()), FactorEffort::default());
    let residues = congruence_certify(&smoothness_family, &smoothness_modulus)?;
    let (verdict, reason) = if stage.product {
        (Verdict::Rejected, "v is parallel to w: product quotient".to_string())
    } else if !residues.constant_gcd.is_one() {
        (
            Verdict::Rejected,
            format!("constant factor shares {} with l0 w0 winf", residues.constant_gcd),
        )
    } else if !residues.nonempty() {
        (Verdict::Rejected, "every residue class meets a prime of l0 w0 winf".to_string())
    } else if stage.orientation_reversed() {
        (Verdict::SmoothFamily, "admissible residues exist; n is negative".to_string())
    } else {
        (Verdict::SmoothFamily, "admissible residues exist".to_string())
    };
    Ok(Candidate {
        seed: seed.clone(),
        w,
        v,
        l,
        stage,
        upsilon,
        smoothness_family,
        smoothness_modulus,
        residues,
        verdict,
        reason,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wp(a: u64, b: u64) -> WeightPair {
        WeightPair::new(a, b).unwrap()
    }

    #[test]
    fn product_candidate_rejected() {
        let c = se_extend(&SeedStructure::dim7(), wp(49, 13), wp(49, 13)).unwrap();
        assert_eq!(c.verdict, Verdict::Rejected);
        assert!(c.stage.product);
    }

    #[test]
    fn non_primitive_seed_refused() {
        let mut seed = SeedStructure::dim7();
        seed.primitive = false;
        assert!(se_extend(&seed, wp(49, 13), wp(49, 26)).is_err());
    }

    #[test]
    fn ledger_round_trip() {
        let c = se_extend(&SeedStructure::dim7(), wp(49, 13), wp(49, 26)).unwrap();
        let line = serde_json::to_string(&c).unwrap();
        let back: Candidate = serde_json::from_str(&line).unwrap();
        assert_eq!(back, c);
        assert!(back.recheck());
    }
}
