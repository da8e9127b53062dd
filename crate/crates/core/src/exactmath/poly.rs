//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::integer::Integer;
use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: impl Into<Integer>) -> Rational {
    Rational::from_integer(n.into())
}

/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn from_integers(coeffs: &[Integer]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `a*x + b`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![b, a])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat_int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::constant(Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `p(x) -> p(c * x)`
    pub fn scale_argument(&self, c: &Rational) -> Self {
        let mut factor = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &factor);
            factor *= c;
        }
        Self::new(out)
    }

    /// Euclidean division; fails on a zero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let d_deg = divisor
            .degree()
            .ok_or_else(|| Error::invalid("division by the zero polynomial"))?;
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - d_deg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d_deg] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(d_deg);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Quotient of an exact division; a nonzero remainder is an error.
    pub fn exact_divide(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!(
                "({self}) / ({divisor}) leaves {r}"
            )));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Polynomial::zero(),
        }
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_part();
        }
        a.monic()
    }

    /// Content-stripped copy with integer coefficients, scaled by a positive
    /// rational so every sign is preserved.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let (ints, _) = self.to_primitive_integers();
        Polynomial::from_integers(&ints)
    }

    /// Returns `(c, s)` with `self = s * c`, `c` integral with content 1 and
    /// `s` a positive rational.
    pub fn to_primitive_integers(&self) -> (Vec<Integer>, Rational) {
        if self.is_zero() {
            return (Vec::new(), Rational::one());
        }
        let denom = self
            .coeffs
            .iter()
            .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<Integer> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(denom.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(Integer::zero(), |acc, c| acc.gcd(c));
        let ints: Vec<Integer> = ints.into_iter().map(|c| c / &content).collect();
        (ints, Rational::new(content, denom))
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn squarefree_part(&self) -> Polynomial {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = Polynomial::gcd(self, &self.derivative());
        self.exact_divide(&g).expect("gcd divides")
    }

    /// Yun's algorithm: pairs `(s_i, i)` with `self = c * prod s_i^i`, each
    /// `s_i` squarefree, monic and nonconstant.
    pub fn squarefree_decomposition(&self) -> Vec<(Polynomial, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let d = f.derivative();
        let a0 = Polynomial::gcd(&f, &d);
        let mut b = f.exact_divide(&a0).unwrap();
        let mut c = d.exact_divide(&a0).unwrap();
        let mut dd = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = Polynomial::gcd(&b, &dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_divide(&a).unwrap();
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = dd.exact_divide(&a).unwrap();
            dd = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// All rational roots, each repeated according to its multiplicity,
    /// in ascending order.
    ///
    /// A rational root of the primitive squarefree part `P` has the form
    /// `k / lead(P)` with `k` an integer, so isolating the real roots of `P`
    /// to width below `1 / lead(P)` leaves at most two candidates per root.
    /// This avoids enumerating divisors of large coefficients.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let sqf = self.squarefree_part();
        let (ints, _) = sqf.to_primitive_integers();
        let lead = ints.last().unwrap().abs();
        let width = Rational::new(Integer::one(), &lead * Integer::from(2));
        let intervals = crate::exactmath::sturm::isolate_roots(
            &sqf,
            &crate::exactmath::sturm::Bound::NegInf,
            &crate::exactmath::sturm::Bound::PosInf,
            &width,
        )
        .expect("nonzero polynomial");
        let lead_q = Rational::from_integer(lead.clone());
        let mut p = self.clone();
        for iv in intervals {
            let k_lo = (&iv.lo * &lead_q).ceil().to_integer();
            let k_hi = (&iv.hi * &lead_q).floor().to_integer();
            let mut k = k_lo;
            while k <= k_hi {
                let r = Rational::new(k.clone(), lead.clone());
                if sqf.eval(&r).is_zero() {
                    let lin = Polynomial::linear(Rational::one(), -r.clone());
                    while let Ok(q) = p.exact_divide(&lin) {
                        p = q;
                        out.push(r.clone());
                    }
                }
                k += 1;
            }
        }
        out.sort();
        out
    }

    /// Resultant via the Sylvester matrix determinant.
    pub fn resultant(a: &Polynomial, b: &Polynomial) -> Rational {
        let (m, n) = match (a.degree(), b.degree()) {
            (Some(m), Some(n)) => (m, n),
            _ => return Rational::zero(),
        };
        if m == 0 && n == 0 {
            return Rational::one();
        }
        let size = m + n;
        let mut mat = vec![vec![Rational::zero(); size]; size];
        for row in 0..n {
            for (k, c) in a.coeffs.iter().enumerate() {
                mat[row][row + m - k] = c.clone();
            }
        }
        for row in 0..m {
            for (k, c) in b.coeffs.iter().enumerate() {
                mat[n + row][row + n - k] = c.clone();
            }
        }
        determinant(mat)
    }

    /// `(-1)^(n(n-1)/2) / a_n * Res(p, p')`. Zero for constants.
    pub fn discriminant(&self) -> Rational {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return Rational::zero(),
        };
        if n == 1 {
            return Rational::one();
        }
        let res = Polynomial::resultant(self, &self.derivative());
        let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        res * rat_int(sign) / self.leading().unwrap()
    }

    /// Number of sign changes in the coefficient sequence.
    pub fn sign_variations(&self) -> usize {
        let signs: Vec<bool> = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

/// Exact Gaussian elimination determinant over the rationals.
pub fn determinant(mut mat: Vec<Vec<Rational>>) -> Rational {
    let n = mat.len();
    let mut det = Rational::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !mat[r][col].is_zero()) {
            Some(p) => p,
            None => return Rational::zero(),
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = -det;
        }
        let p = mat[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = &mat[r][col] / &p;
            for c in col..n {
                let delta = &factor * &mat[col][c];
                mat[r][c] -= delta;
            }
        }
    }
    det
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots_with_multiplicity() {
        let p = Polynomial::from_ints(&[1, -3, 2]);
        assert_eq!(p.rational_roots(), vec![rat(1, 2), rat(1, 1)]);
        let q = Polynomial::from_ints(&[0, 0, 1, -2, 1]);
        assert_eq!(q.rational_roots(), vec![rat(0, 1), rat(0, 1), rat(1, 1), rat(1, 1)]);
        assert!(Polynomial::from_ints(&[-2, 0, 1]).rational_roots().is_empty());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(Polynomial::from_ints(&[-2, 0, 1]).discriminant(), rat(8, 1));
        // (x-1)^2 (x+2)
        let p = Polynomial::from_ints(&[2, -3, 0, 1]);
        assert!(p.discriminant().is_zero());
        // cubic x^3 - x: disc = -4(-1)^3 = 4
        assert_eq!(Polynomial::from_ints(&[0, -1, 0, 1]).discriminant(), rat(4, 1));
    }

    #[test]
    fn exact_divide_rejects_remainder() {
        let p = Polynomial::from_ints(&[1, 0, 1]);
        let d = Polynomial::from_ints(&[-1, 1]);
        assert!(matches!(p.exact_divide(&d), Err(Error::InexactDivision(_))));
        let sq = &d * &d;
        assert_eq!(sq.exact_divide(&d).unwrap(), d);
    }

    #[test]
    fn squarefree_decomposition_reconstructs() {
        // (x-1)^3 (x+2)^2 (x-5)
        let a = Polynomial::from_ints(&[-1, 1]);
        let b = Polynomial::from_ints(&[2, 1]);
        let c = Polynomial::from_ints(&[-5, 1]);
        let p = &(&a.pow(3) * &b.pow(2)) * &c;
        let parts = p.squarefree_decomposition();
        let mut rebuilt = Polynomial::constant(Rational::one());
        for (s, i) in &parts {
            rebuilt = &rebuilt * &s.pow(*i);
        }
        assert_eq!(rebuilt, p.monic());
        let mults: Vec<u32> = parts.iter().map(|(_, i)| *i).collect();
        assert_eq!(mults, vec![1, 2, 3]);
    }

    #[test]
    fn display_is_readable() {
        let p = Polynomial::new(vec![rat(-1, 2), rat(0, 1), rat(3, 1)]);
        assert_eq!(p.to_string(), "3*x^2 - 1/2");
    }
}
