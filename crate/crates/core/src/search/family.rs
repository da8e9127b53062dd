//! One-parameter integer families: a factored constant times a product of
//! content-normalized integer polynomials in `t`.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{factorize, FactorEffort, FactoredInteger, Integer};

/// Integer polynomial in `t`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPoly(#[serde(with = "crate::serde_util::bigint_vec")] pub Vec<Integer>);

impl IntPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly(coeffs.iter().map(|&c| Integer::from(c)).collect()).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn content(&self) -> Integer {
        self.0.iter().fold(Integer::zero(), |acc, c| acc.gcd(c))
    }

    pub fn eval(&self, t: &Integer) -> Integer {
        self.0.iter().rev().fold(Integer::zero(), |acc, c| acc * t + c)
    }

    /// `P(c t)`.
    pub fn scale_argument(&self, c: &Integer) -> IntPoly {
        let mut pow = Integer::one();
        let mut out = Vec::with_capacity(self.0.len());
        for a in &self.0 {
            out.push(a * &pow);
            pow *= c;
        }
        IntPoly(out).trimmed()
    }
}

impl fmt::Display for IntPoly {
    /// `780300*t^2 + 65790*t + 1387`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `constant * prod factors(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyPolynomial {
    pub constant: FactoredInteger,
    pub factors: Vec<IntPoly>,
}

impl FamilyPolynomial {
    /// Normalizes every factor to content 1 with a positive leading
    /// coefficient, moving contents and signs into the constant.
    pub fn new(constant: &Integer, factors: Vec<IntPoly>) -> Result<Self> {
        if constant.is_zero() {
            return Err(Error::invalid("family constant must be nonzero"));
        }
        let mut c = constant.clone();
        let mut normalized = Vec::with_capacity(factors.len());
        for p in factors {
            let p = p.trimmed();
            if p.0.is_empty() {
                return Err(Error::invalid("family factor is the zero polynomial"));
            }
            let mut content = p.content();
            if p.0.last().unwrap().is_negative() {
                content = -content;
            }
            c *= &content;
            let q = IntPoly(p.0.iter().map(|a| a / &content).collect());
            if q.degree() == Some(0) {
                continue;
            }
            normalized.push(q);
        }
        Ok(FamilyPolynomial {
            constant: factorize(&c, FactorEffort::default()),
            factors: normalized,
        })
    }

    pub fn constant_value(&self) -> Integer {
        self.constant.value()
    }

    pub fn eval(&self, t: &Integer) -> Integer {
        self.factors.iter().fold(self.constant_value(), |acc, p| acc * p.eval(t))
    }

    /// Multiplies by an integer.
    pub fn times(&self, k: &Integer) -> Result<FamilyPolynomial> {
        FamilyPolynomial::new(&(self.constant_value() * k), self.factors.clone())
    }

    /// Re-indexes the family by `t = c * t_hat`.
    pub fn substitute_scale(&self, c: &Integer) -> Result<FamilyPolynomial> {
        if c.is_zero() {
            return Err(Error::invalid("scale must be nonzero"));
        }
        FamilyPolynomial::new(
            &self.constant_value(),
            self.factors.iter().map(|p| p.scale_argument(c)).collect(),
        )
    }
}

impl fmt::Display for FamilyPolynomial {
    /// `2^2 * 3^2 * 17 * (780300*t^2 + 65790*t + 1387) * (1020*t + 43)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constant)?;
        for p in &self.factors {
            write!(f, " * ({p})")?;
        }
        Ok(())
    }
}
