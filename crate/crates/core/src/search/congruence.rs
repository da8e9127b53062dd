//! Residue classes of `t` for which a family value is coprime to a modulus.

use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::family::FamilyPolynomial;
use crate::error::{Error, Result};
use crate::exactmath::modp::roots_mod_prime;
use crate::exactmath::{gcd, FactoredInteger, Integer};

/// Largest radical for which admissible residues are also listed explicitly.
pub const EXPLICIT_LIMIT: u64 = 10_000;

/// Residues of `t` mod `p` at which some family factor vanishes mod `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeResidues {
    pub p: u64,
    pub excluded: Vec<u64>,
}

/// Admissible classes of `t` modulo `rad(M)`, stored prime by prime: `t` is
/// admissible iff the family constant is coprime to `M` and, for every
/// prime `p | M`, `t mod p` avoids `excluded`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueCertificate {
    #[serde(with = "crate::serde_util::bigint")]
    pub modulus: Integer,
    #[serde(with = "crate::serde_util::bigint")]
    pub constant_gcd: Integer,
    pub primes: Vec<PrimeResidues>,
    #[serde(with = "crate::serde_util::bigint")]
    pub admissible_count: Integer,
    /// Every admissible residue, present when the modulus is small.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub admissible: Option<Vec<u64>>,
    /// Whether `t ≡ 0` is admissible, the progression `t = rad(M) t'`.
    pub zero_admissible: bool,
}

impl ResidueCertificate {
    pub fn is_admissible(&self, t: &Integer) -> bool {
        self.constant_gcd.is_one()
            && self.primes.iter().all(|pr| {
                let r = t.mod_floor(&Integer::from(pr.p)).to_u64().unwrap();
                pr.excluded.binary_search(&r).is_err()
            })
    }

    pub fn nonempty(&self) -> bool {
        !self.admissible_count.is_zero()
    }
}

/// Certifies `gcd(family(t), M) = 1` residue class by residue class.
pub fn congruence_certify(family: &FamilyPolynomial, m: &FactoredInteger) -> Result<ResidueCertificate> {
    let modulus = m
        .radical()
        .ok_or_else(|| Error::invalid(format!("modulus {m} is not fully factored")))?;
    let constant_gcd = gcd(&family.constant_value(), &m.value());
    let mut primes = Vec::with_capacity(m.primes.len());
    let mut count = Integer::one();
    for p in m.primes.keys() {
        let p64 = p
            .to_u64()
            .ok_or_else(|| Error::invalid(format!("prime {p} exceeds 64 bits")))?;
        let mut excluded = Vec::new();
        for f in &family.factors {
            excluded.extend(roots_mod_prime(&f.0, p64)?);
        }
        excluded.sort_unstable();
        excluded.dedup();
        count *= Integer::from(p64 - excluded.len() as u64);
        primes.push(PrimeResidues { p: p64, excluded });
    }
    if !constant_gcd.is_one() {
        count = Integer::zero();
    }
    let mut cert = ResidueCertificate {
        modulus,
        constant_gcd,
        primes,
        admissible_count: count,
        admissible: None,
        zero_admissible: false,
    };
    cert.zero_admissible = cert.is_admissible(&Integer::zero());
    if let Some(r) = cert.modulus.to_u64().filter(|&r| r <= EXPLICIT_LIMIT) {
        let list = (0..r).filter(|&t| cert.is_admissible(&Integer::from(t))).collect();
        cert.admissible = Some(list);
    }
    Ok(cert)
}
