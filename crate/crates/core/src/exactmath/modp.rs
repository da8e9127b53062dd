//! Root finding for integer polynomials modulo a word-sized prime.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Polynomial over F_p, lowest degree first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
struct FpPoly(Vec<u64>);

impl FpPoly {
    fn trim(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn rem(&self, m: &FpPoly, p: u64) -> FpPoly {
        let dm = m.degree().expect("nonzero modulus");
        let inv = inv_mod(*m.0.last().unwrap(), p);
        let mut r = self.0.clone();
        while r.len() > dm {
            let lead = mul_mod(*r.last().unwrap(), inv, p);
            let shift = r.len() - 1 - dm;
            if lead != 0 {
                for (i, c) in m.0.iter().enumerate() {
                    let sub = mul_mod(lead, *c, p);
                    r[shift + i] = (r[shift + i] + p - sub) % p;
                }
            }
            r.pop();
        }
        FpPoly(r).trim()
    }

    fn mul_mod_poly(&self, other: &FpPoly, m: &FpPoly, p: u64) -> FpPoly {
        if self.0.is_empty() || other.0.is_empty() {
            return FpPoly(Vec::new());
        }
        let mut out = vec![0u64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(*a, *b, p)) % p;
            }
        }
        FpPoly(out).trim().rem(m, p)
    }

    fn pow_mod_poly(&self, mut e: u64, m: &FpPoly, p: u64) -> FpPoly {
        let mut acc = FpPoly(vec![1]).rem(m, p);
        let mut base = self.rem(m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod_poly(&base, m, p);
            }
            base = base.mul_mod_poly(&base, m, p);
            e >>= 1;
        }
        acc
    }

    fn sub(&self, other: &FpPoly, p: u64) -> FpPoly {
        let n = self.0.len().max(other.0.len());
        let get = |v: &Vec<u64>, i: usize| v.get(i).copied().unwrap_or(0);
        FpPoly((0..n).map(|i| (get(&self.0, i) + p - get(&other.0, i)) % p).collect()).trim()
    }

    fn gcd(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.0.is_empty() {
            let r = a.rem(&b, p);
            a = b;
            b = r;
        }
        if let Some(&lead) = a.0.last() {
            let inv = inv_mod(lead, p);
            a = FpPoly(a.0.iter().map(|c| mul_mod(*c, inv, p)).collect());
        }
        a
    }

    fn div_exact(&self, d: &FpPoly, p: u64) -> FpPoly {
        let dd = d.degree().unwrap();
        let inv = inv_mod(*d.0.last().unwrap(), p);
        let mut r = self.0.clone();
        let mut q = vec![0u64; r.len().saturating_sub(dd)];
        for k in (0..q.len()).rev() {
            let c = mul_mod(r[k + dd], inv, p);
            q[k] = c;
            for (i, dc) in d.0.iter().enumerate() {
                let sub = mul_mod(c, *dc, p);
                r[k + i] = (r[k + i] + p - sub) % p;
            }
        }
        FpPoly(q).trim()
    }
}

/// Residue classes `r` in `[0, p)` where the polynomial vanishes mod `p`.
///
/// A polynomial that is identically zero mod `p` vanishes everywhere and
/// yields every residue; callers should content-normalize first.
pub fn roots_mod_prime(coeffs: &[BigInt], p: u64) -> Result<Vec<u64>> {
    if p < 2 {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    let bp = BigInt::from(p);
    let reduced: Vec<u64> = coeffs
        .iter()
        .map(|c| c.mod_floor(&bp).to_u64().unwrap())
        .collect();
    let f = FpPoly(reduced).trim();
    let Some(deg) = f.degree() else {
        if p > 1 << 24 {
            return Err(Error::invalid(format!(
                "polynomial vanishes identically modulo the large prime {p}"
            )));
        }
        return Ok((0..p).collect());
    };
    if deg == 0 {
        return Ok(Vec::new());
    }
    if p <= 1 << 12 {
        let mut roots: Vec<u64> = (0..p)
            .filter(|&r| f.0.iter().rev().fold(0u64, |acc, c| (mul_mod(acc, r, p) + c) % p) == 0)
            .collect();
        roots.sort_unstable();
        return Ok(roots);
    }
    // Split off the product of distinct linear factors: gcd(f, x^p - x).
    let x = FpPoly(vec![0, 1]);
    let xp = x.pow_mod_poly(p, &f, p);
    let g = FpPoly::gcd(&f, &xp.sub(&x, p), p);
    let mut roots = Vec::new();
    split_linear(g, p, &mut roots);
    roots.sort_unstable();
    Ok(roots)
}

/// Equal-degree splitting of a product of distinct linear factors; the shift
/// sequence a = 0, 1, 2, ... keeps the output deterministic.
fn split_linear(g: FpPoly, p: u64, out: &mut Vec<u64>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let inv = inv_mod(g.0[1], p);
            out.push((p - mul_mod(g.0[0], inv, p)) % p);
        }
        Some(_) => {
            let half = (p - 1) / 2;
            for a in 0..p {
                let shifted = FpPoly(vec![a, 1]);
                let h = shifted.pow_mod_poly(half, &g, p).sub(&FpPoly(vec![1]), p);
                let d = FpPoly::gcd(&g, &h, p);
                let dd = d.degree().unwrap_or(0);
                if dd > 0 && dd < g.degree().unwrap() {
                    let rest = g.div_exact(&d, p);
                    split_linear(d, p, out);
                    split_linear(rest, p, out);
                    return;
                }
            }
            unreachable!("splitting must succeed for odd p");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn brute(coeffs: &[i64], p: u64) -> Vec<u64> {
        (0..p)
            .filter(|&r| {
                let v = coeffs
                    .iter()
                    .rev()
                    .fold(BigInt::from(0), |acc, c| acc * BigInt::from(r) + c);
                v.mod_floor(&BigInt::from(p)) == BigInt::from(0)
            })
            .collect()
    }

    #[test]
    fn small_prime_brute_force() {
        let f = [1387, 65790, 780300];
        for p in [2u64, 3, 7, 13, 19, 73] {
            assert_eq!(roots_mod_prime(&big(&f), p).unwrap(), brute(&f, p));
        }
    }

    #[test]
    fn large_prime_matches_brute_force() {
        let p = 28793u64;
        for f in [[1387i64, 65790, 780300], [6, -5, 1], [-1, 0, 1]] {
            assert_eq!(roots_mod_prime(&big(&f), p).unwrap(), brute(&f, p));
        }
    }

    #[test]
    fn linear_factor_large_prime() {
        // 23205 t + 11 mod 699761
        let p = 699761u64;
        let roots = roots_mod_prime(&big(&[11, 23205]), p).unwrap();
        assert_eq!(roots.len(), 1);
        let r = roots[0];
        assert_eq!((23205 * r as u128 + 11) % p as u128, 0);
    }
}
