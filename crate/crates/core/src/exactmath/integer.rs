//! Arbitrary-precision integer helpers: gcd/lcm, primality and factoring.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::serde_util::JsonInt;

pub type Integer = BigInt;

pub fn int(v: i64) -> Integer {
    BigInt::from(v)
}

/// Non-negative gcd; `gcd(0, 0) == 0`.
pub fn gcd(a: &Integer, b: &Integer) -> Integer {
    a.gcd(b)
}

/// Non-negative lcm; zero if either argument is zero.
pub fn lcm(a: &Integer, b: &Integer) -> Integer {
    if a.is_zero() || b.is_zero() {
        return Integer::zero();
    }
    a.lcm(b)
}

/// Bézout witness: returns `(g, x, y)` with `a*x + b*y == g == gcd(a, b)`.
pub fn ext_gcd(a: &Integer, b: &Integer) -> (Integer, Integer, Integer) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (Integer::one(), Integer::zero());
    let (mut old_t, mut t) = (Integer::zero(), Integer::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

const SMALL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97,
];

/// Strong-pseudoprime test to the first twenty prime bases.
///
/// Deterministic below 3.3 * 10^24; above that a composite passing all
/// rounds is astronomically unlikely but not excluded.
pub fn is_probable_prime(n: &Integer) -> bool {
    if n < &int(2) {
        return false;
    }
    for &p in &SMALL_PRIMES {
        let p = Integer::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = Integer::one();
    let n_minus_one = n - &one;
    let twos = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> twos;
    'witness: for &a in SMALL_PRIMES.iter().take(20) {
        let mut x = Integer::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..twos {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// How hard `factorize` tries before giving up on a cofactor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorEffort {
    /// Primes below this bound are removed by trial division.
    pub trial_bound: u64,
    /// Iteration budget per Pollard-Brent attempt.
    pub rho_iterations: u64,
    /// Number of distinct polynomial constants tried per composite.
    pub rho_attempts: u32,
}

impl Default for FactorEffort {
    fn default() -> Self {
        FactorEffort {
            trial_bound: 1 << 16,
            rho_iterations: 1 << 20,
            rho_attempts: 8,
        }
    }
}

/// An integer split into prime powers and an unfactored remainder.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "FactoredJson", try_from = "FactoredJson")]
pub struct FactoredInteger {
    pub negative: bool,
    pub primes: BTreeMap<Integer, u32>,
    /// Unfactored remainder, 1 when the factorization is complete.
    pub cofactor: Integer,
    pub fully_factored: bool,
}

impl FactoredInteger {
    pub fn one() -> Self {
        FactoredInteger {
            negative: false,
            primes: BTreeMap::new(),
            cofactor: Integer::one(),
            fully_factored: true,
        }
    }

    /// Builds a factorization from known prime powers. Each key must be prime.
    pub fn from_prime_powers<I>(powers: I) -> Self
    where
        I: IntoIterator<Item = (Integer, u32)>,
    {
        let mut out = FactoredInteger::one();
        for (p, e) in powers {
            if e > 0 {
                *out.primes.entry(p).or_insert(0) += e;
            }
        }
        out
    }

    pub fn value(&self) -> Integer {
        let mut v = self.cofactor.clone();
        for (p, e) in &self.primes {
            v *= p.pow(*e);
        }
        if self.negative {
            -v
        } else {
            v
        }
    }

    /// Product of the distinct primes; `None` if the cofactor is unresolved.
    pub fn radical(&self) -> Option<Integer> {
        if !self.fully_factored {
            return None;
        }
        Some(self.primes.keys().fold(Integer::one(), |acc, p| acc * p))
    }

    pub fn multiply(&self, other: &FactoredInteger) -> FactoredInteger {
        let mut out = self.clone();
        for (p, e) in &other.primes {
            *out.primes.entry(p.clone()).or_insert(0) += e;
        }
        out.negative ^= other.negative;
        out.cofactor *= &other.cofactor;
        out.fully_factored = self.fully_factored && other.fully_factored;
        if !out.fully_factored {
            // The merged cofactor may now contain a recognisable prime.
            out.fully_factored = out.cofactor.is_one();
        }
        out
    }
}

/// JSON form: `{"value", "factors": [[p, e], ...], "cofactor", "fully_factored"}`.
#[derive(Serialize, Deserialize)]
struct FactoredJson {
    value: JsonInt,
    factors: Vec<(JsonInt, u32)>,
    cofactor: JsonInt,
    fully_factored: bool,
}

impl From<FactoredInteger> for FactoredJson {
    fn from(f: FactoredInteger) -> Self {
        FactoredJson {
            value: JsonInt(f.value()),
            factors: f.primes.iter().map(|(p, e)| (JsonInt(p.clone()), *e)).collect(),
            cofactor: JsonInt(f.cofactor.clone()),
            fully_factored: f.fully_factored,
        }
    }
}

impl TryFrom<FactoredJson> for FactoredInteger {
    type Error = String;

    fn try_from(j: FactoredJson) -> std::result::Result<Self, String> {
        let mut out = FactoredInteger::from_prime_powers(j.factors.into_iter().map(|(p, e)| (p.0, e)));
        out.cofactor = j.cofactor.0.abs();
        out.fully_factored = j.fully_factored && out.cofactor.is_one();
        out.negative = j.value.0.is_negative();
        if out.value() != j.value.0 {
            return Err(format!("factorization does not reconstruct {}", j.value.0));
        }
        Ok(out)
    }
}

impl fmt::Display for FactoredInteger {
    /// Renders as `2^4 * 3^2 * 7`, with `[c]` marking an unfactored cofactor.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .primes
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        if !self.cofactor.is_one() {
            parts.push(format!("[{}]", self.cofactor));
        }
        if parts.is_empty() {
            parts.push("1".to_string());
        }
        if self.negative {
            write!(f, "-")?;
        }
        write!(f, "{}", parts.join(" * "))
    }
}

/// Factors `n` by trial division followed by Pollard-Brent on what remains.
///
/// Panics on `n == 0`.
pub fn factorize(n: &Integer, effort: FactorEffort) -> FactoredInteger {
    assert!(!n.is_zero(), "factorize(0) is undefined");
    let mut out = FactoredInteger::one();
    out.negative = n.sign() == Sign::Minus;
    let mut rest = n.abs();

    let push = |primes: &mut BTreeMap<Integer, u32>, p: Integer| {
        *primes.entry(p).or_insert(0) += 1;
    };

    for p in trial_primes(effort.trial_bound) {
        let p = Integer::from(p);
        if &p * &p > rest {
            break;
        }
        while (&rest % &p).is_zero() {
            rest /= &p;
            push(&mut out.primes, p.clone());
        }
    }
    if rest.is_one() {
        return out;
    }

    let mut stack = vec![rest];
    let mut unresolved = Integer::one();
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push(&mut out.primes, m);
            continue;
        }
        if let Some(r) = perfect_square_root(&m) {
            stack.push(r.clone());
            stack.push(r);
            continue;
        }
        match pollard_brent(&m, effort) {
            Some(d) => {
                let e = &m / &d;
                stack.push(d);
                stack.push(e);
            }
            None => unresolved *= m,
        }
    }
    out.fully_factored = unresolved.is_one();
    out.cofactor = unresolved;
    out
}

fn perfect_square_root(m: &Integer) -> Option<Integer> {
    let r = m.sqrt();
    if &r * &r == *m {
        Some(r)
    } else {
        None
    }
}

fn trial_primes(bound: u64) -> impl Iterator<Item = u64> {
    let bound = bound.max(3) as usize;
    let mut sieve = vec![true; bound];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i < bound {
        if sieve[i] {
            let mut j = i * i;
            while j < bound {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .into_iter()
        .enumerate()
        .filter_map(|(i, is_p)| is_p.then_some(i as u64))
}

fn pollard_brent(n: &Integer, effort: FactorEffort) -> Option<Integer> {
    if n.is_even() {
        return Some(int(2));
    }
    let one = Integer::one();
    for attempt in 0..effort.rho_attempts {
        let c = Integer::from(attempt as u64 + 1);
        let f = |x: &Integer| (x * x + &c) % n;
        let mut y = Integer::from(attempt as u64 + 2);
        let mut r: u64 = 1;
        let mut q = Integer::one();
        let mut g = Integer::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let block = 128u64;
        let mut spent = 0u64;
        while g.is_one() && spent < effort.rho_iterations {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..block.min(r - k) {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += block;
            }
            spent += r;
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != one && g != *n {
            return Some(g);
        }
    }
    None
}

/// Converts to `u64` when the value fits.
pub fn to_u64(n: &Integer) -> Option<u64> {
    n.to_u64()
}
