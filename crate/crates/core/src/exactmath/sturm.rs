//! Sturm sequences and exact real root counting/isolation.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::integer::Integer;
use super::poly::{rat_int, Polynomial, Rational};
use crate::error::{Error, Result};

/// Interval endpoint; infinite ends are evaluated from leading-term signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl From<Rational> for Bound {
    fn from(r: Rational) -> Self {
        Bound::Finite(r)
    }
}

#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<Polynomial>,
    /// Integer coefficients of each chain member, for gcd-free sign evaluation.
    ints: Vec<Vec<Integer>>,
}

impl SturmSequence {
    /// Builds the chain of the squarefree part of `p`.
    pub fn new(p: &Polynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p0 = p.squarefree_part().primitive_part();
        let mut chain = vec![p0.clone()];
        if p0.degree() == Some(0) {
            return Ok(Self::with_ints(chain));
        }
        chain.push(p0.derivative().primitive_part());
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push((-&r).primitive_part());
        }
        Ok(Self::with_ints(chain))
    }

    fn with_ints(chain: Vec<Polynomial>) -> Self {
        // Primitive parts keep the sign of the leading coefficient, so the
        // integer forms have the same signs everywhere.
        let ints = chain.iter().map(|p| p.to_primitive_integers().0).collect();
        SturmSequence { chain, ints }
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.chain[0]
    }

    /// Whether `x` is a root of the leading chain member.
    pub fn vanishes_at(&self, x: &Rational) -> bool {
        Self::sign_at_rational(&self.ints[0], x) == 0
    }

    /// Sign of `sum c_i a^i b^(n-i)`, which is the sign of `p(a/b)` for `b > 0`.
    fn sign_at_rational(c: &[Integer], x: &Rational) -> i32 {
        let (a, b) = (x.numer(), x.denom());
        let Some((top, rest)) = c.split_last() else { return 0 };
        // Homogeneous Horner: acc = acc * a + c_i * b^(n-i).
        let mut acc = top.clone();
        let mut bpow = Integer::one();
        for ci in rest.iter().rev() {
            bpow *= b;
            acc = acc * a + ci * &bpow;
        }
        match acc.sign() {
            num_bigint::Sign::Plus => 1,
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
        }
    }

    fn sign_at(p: &Polynomial, at: &Bound) -> i32 {
        let sign_of = |r: &Rational| {
            if r.is_zero() {
                0
            } else if r.is_positive() {
                1
            } else {
                -1
            }
        };
        match at {
            Bound::Finite(x) => sign_of(&p.eval(x)),
            Bound::PosInf => p.leading().map_or(0, sign_of),
            Bound::NegInf => {
                let s = p.leading().map_or(0, sign_of);
                if p.degree().unwrap_or(0).is_multiple_of(2) {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// Sign variations of the chain at `at`, zeros dropped.
    pub fn variations(&self, at: &Bound) -> usize {
        let signs: Vec<i32> = self
            .chain
            .iter()
            .zip(&self.ints)
            .map(|(p, c)| match at {
                Bound::Finite(x) => Self::sign_at_rational(c, x),
                _ => Self::sign_at(p, at),
            })
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        let (a, b) = (self.variations(lo), self.variations(hi));
        a.saturating_sub(b)
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &Polynomial, lo: &Bound, hi: &Bound) -> Result<usize> {
    Ok(SturmSequence::new(p)?.count(lo, hi))
}

/// A real root located in `(lo, hi]`, or exactly at `lo` when `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootInterval {
    #[serde(with = "crate::serde_util::rational")]
    pub lo: Rational,
    #[serde(with = "crate::serde_util::rational")]
    pub hi: Rational,
    pub multiplicity: u32,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

/// Cauchy bound: every real root has absolute value below the result.
pub fn root_bound(p: &Polynomial) -> Rational {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let max = p
        .coeffs()
        .iter()
        .take(p.coeffs().len() - 1)
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    max + Rational::one()
}

/// Isolates every distinct real root of `p` inside `(lo, hi]` into intervals
/// no wider than `width`, sorted ascending, with multiplicities.
pub fn isolate_roots(
    p: &Polynomial,
    lo: &Bound,
    hi: &Bound,
    width: &Rational,
) -> Result<Vec<RootInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let bound = root_bound(p);
    let clamp = |b: &Bound, default: Rational| match b {
        Bound::Finite(x) => x.clone(),
        _ => default,
    };
    let lo = clamp(lo, -bound.clone());
    let hi = clamp(hi, bound);
    let mut out = Vec::new();
    if lo >= hi {
        return Ok(out);
    }
    for (factor, mult) in p.squarefree_decomposition() {
        let seq = SturmSequence::new(&factor)?;
        let mut stack = vec![(lo.clone(), hi.clone())];
        while let Some((a, b)) = stack.pop() {
            let n = seq.count(&Bound::Finite(a.clone()), &Bound::Finite(b.clone()));
            if n == 0 {
                continue;
            }
            if seq.vanishes_at(&b) {
                out.push(RootInterval {
                    lo: b.clone(),
                    hi: b.clone(),
                    multiplicity: mult,
                });
                if n > 1 {
                    // Keep searching left of the exact root.
                    let mid = (&a + &b) / rat_int(2);
                    stack.push((a.clone(), mid.clone()));
                    stack.push((mid, b.clone()));
                }
                continue;
            }
            if n == 1 && &b - &a <= *width {
                out.push(RootInterval {
                    lo: a,
                    hi: b,
                    multiplicity: mult,
                });
                continue;
            }
            let mid = (&a + &b) / rat_int(2);
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo).then(x.hi.cmp(&y.hi)));
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::poly::rat;

    fn fin(n: i64, d: i64) -> Bound {
        Bound::Finite(rat(n, d))
    }

    #[test]
    fn cubic_with_three_roots() {
        let p = Polynomial::from_ints(&[0, -1, 0, 1]);
        assert_eq!(sturm_count(&p, &fin(-2, 1), &fin(2, 1)).unwrap(), 3);
        assert_eq!(sturm_count(&p, &Bound::NegInf, &Bound::PosInf).unwrap(), 3);
        // half-open: (-1, 0] holds only 0
        assert_eq!(sturm_count(&p, &fin(-1, 1), &fin(0, 1)).unwrap(), 1);
        assert_eq!(sturm_count(&p, &fin(0, 1), &fin(1, 2)).unwrap(), 0);
    }

    #[test]
    fn repeated_root_counted_once() {
        let p = Polynomial::from_ints(&[1, -2, 1]);
        assert_eq!(sturm_count(&p, &fin(0, 1), &fin(2, 1)).unwrap(), 1);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(matches!(
            sturm_count(&Polynomial::zero(), &Bound::NegInf, &Bound::PosInf),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn constant_has_no_roots() {
        let p = Polynomial::from_ints(&[5]);
        assert_eq!(sturm_count(&p, &Bound::NegInf, &Bound::PosInf).unwrap(), 0);
    }

    #[test]
    fn isolation_of_sqrt_two() {
        let p = Polynomial::from_ints(&[-2, 0, 1]);
        let roots = isolate_roots(&p, &Bound::NegInf, &Bound::PosInf, &rat(1, 64)).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!(&r.hi - &r.lo <= rat(1, 64));
            let (a, b) = (p.eval(&r.lo), p.eval(&r.hi));
            assert!(a * b < Rational::zero());
        }
    }

    #[test]
    fn isolation_reports_exact_and_multiplicity() {
        // (x - 1)^2 (x - 1/3)
        let a = Polynomial::from_ints(&[-1, 1]);
        let b = Polynomial::new(vec![rat(-1, 3), rat(1, 1)]);
        let p = &a.pow(2) * &b;
        let roots = isolate_roots(&p, &Bound::NegInf, &Bound::PosInf, &rat(1, 1000)).unwrap();
        assert_eq!(roots.len(), 2);
        let double = roots.iter().find(|r| r.multiplicity == 2).unwrap();
        assert!(double.lo < rat(1, 1) || double.is_exact());
        assert!(double.hi >= rat(1, 1));
    }
}
