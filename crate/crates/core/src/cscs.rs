//! Constant scalar curvature Sasaki rays in the two-dimensional w-cone of an
//! `S^3_w` join.
//!
//! Rays correspond to positive real roots `b` of a polynomial `f(b)` of degree
//! `2 d_N + 4` that always has the triple root `b = winf / w0` (the product
//! quotient). For the join with the standard sphere (`d_N = 1`) the remaining
//! factor is the cubic `g`, and the number of rays jumps from 1 to 3 at the
//! unique root `L` of a quartic `h(linf)` above `2 l0 w0`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{isolate_roots, rat, rat_int, Bound, Polynomial, Rational, RootInterval, SturmSequence};
use crate::join::WeightPair;

fn q(x: u64) -> Rational {
    rat_int(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CscParams {
    pub d_n: u32,
    #[serde(with = "crate::serde_util::rational")]
    pub a_n: Rational,
    pub l: WeightPair,
    pub w: WeightPair,
}

impl CscParams {
    pub fn new(d_n: u32, a_n: Rational, l: WeightPair, w: WeightPair) -> Result<Self> {
        if d_n == 0 {
            return Err(Error::invalid("d_N must be positive"));
        }
        check_w(w)?;
        Ok(CscParams { d_n, a_n, l, w })
    }

    /// The join with the standard sphere: `d_N = 1` and the matched `A_N`.
    pub fn standard(l: WeightPair, w: WeightPair) -> Result<Self> {
        check_w(w)?;
        let a_n = derive_an_d1(l, w)?;
        Self::new(1, a_n, l, w)
    }
}

fn check_w(w: WeightPair) -> Result<()> {
    if w.a0 <= w.ainf {
        return Err(Error::invalid(format!("need w0 > winf, got {w}")));
    }
    Ok(())
}

/// The five-term polynomial `f(b)` for arbitrary rational inputs.
pub fn build_f_raw(
    d: u32,
    a_n: &Rational,
    l0: &Rational,
    linf: &Rational,
    w0: &Rational,
    winf: &Rational,
) -> Polynomial {
    let du = d as usize;
    let dq = rat_int(d);
    let d1 = &dq + Rational::one();
    let d2 = &dq + rat(2, 1);
    let pw = |x: &Rational, e: usize| -> Rational { num_traits::pow(x.clone(), e) };
    let mut c = vec![Rational::zero(); 2 * du + 5];

    // (w0)^{2(d+1)} b^{2d+3} (A linf + l0 (d+1) winf - b (d+1) l0 w0)
    let k1 = pw(w0, 2 * du + 2);
    c[2 * du + 3] += &k1 * (a_n * linf + l0 * &d1 * winf);
    c[2 * du + 4] -= &k1 * &d1 * l0 * w0;

    // - (w0)^{d+2} (winf)^d b^{d+3} (d+1) (A (d+1) linf - l0 ((d+1) w0 + (d+2) winf))
    let k2 = pw(w0, du + 2) * pw(winf, du);
    c[du + 3] -= k2 * &d1 * (a_n * &d1 * linf - l0 * (&d1 * w0 + &d2 * winf));

    // + (w0)^{d+1} (winf)^{d+1} b^{d+2} (2 A d (d+2) linf - (d+1)(2d+3) l0 (w0 + winf))
    let k3 = pw(w0, du + 1) * pw(winf, du + 1);
    let two_d3 = rat_int(2 * d + 3);
    c[du + 2] += k3 * (rat(2, 1) * a_n * &dq * &d2 * linf - &d1 * two_d3 * l0 * (w0 + winf));

    // - (w0)^d (winf)^{d+2} b^{d+1} (d+1) (A (d+1) linf - l0 ((d+2) w0 + (d+1) winf))
    let k4 = pw(w0, du) * pw(winf, du + 2);
    c[du + 1] -= k4 * &d1 * (a_n * &d1 * linf - l0 * (&d2 * w0 + &d1 * winf));

    // + (winf)^{2(d+1)} (b (A linf + l0 (d+1) w0) - (d+1) l0 winf)
    let k5 = pw(winf, 2 * du + 2);
    c[1] += &k5 * (a_n * linf + l0 * &d1 * w0);
    c[0] -= k5 * &d1 * l0 * winf;

    Polynomial::new(c)
}

pub fn build_f(p: &CscParams) -> Polynomial {
    build_f_raw(
        p.d_n,
        &p.a_n,
        &q(p.l.a0),
        &q(p.l.ainf),
        &q(p.w.a0),
        &q(p.w.ainf),
    )
}

/// `b w0 - winf`, the linear factor of the product ray.
pub fn product_factor(w0: &Rational, winf: &Rational) -> Polynomial {
    Polynomial::linear(w0.clone(), -winf.clone())
}

/// The factored closed form at `d_N = 1`:
/// `2 (-b w0 + winf)^3 (b^3 l0 w0^2 + b^2 (2 l0 w0 winf - linf w0) - b (2 l0 w0 winf - linf winf) - l0 winf^2)`.
pub fn f_d1_closed_form(l0: &Rational, linf: &Rational, w0: &Rational, winf: &Rational) -> Polynomial {
    let lin = Polynomial::linear(-w0.clone(), winf.clone());
    let cubic = Polynomial::new(vec![
        -(l0 * winf * winf),
        -(rat(2, 1) * l0 * w0 * winf - linf * winf),
        rat(2, 1) * l0 * w0 * winf - linf * w0,
        l0 * w0 * w0,
    ]);
    (&lin.pow(3) * &cubic).scale(&rat(2, 1))
}

/// `A_N` at `d_N = 1` by matching `f` coefficientwise against the closed
/// form. `f` is affine in `A_N`, so each coefficient gives a linear equation;
/// all must agree.
pub fn derive_an_d1(l: WeightPair, w: WeightPair) -> Result<Rational> {
    derive_an_d1_raw(&q(l.a0), &q(l.ainf), &q(w.a0), &q(w.ainf))
}

pub fn derive_an_d1_raw(l0: &Rational, linf: &Rational, w0: &Rational, winf: &Rational) -> Result<Rational> {
    let f0 = build_f_raw(1, &Rational::zero(), l0, linf, w0, winf);
    let f1 = &build_f_raw(1, &Rational::one(), l0, linf, w0, winf) - &f0;
    let target = f_d1_closed_form(l0, linf, w0, winf);
    let rhs = &target - &f0;
    let len = f0.coeffs().len().max(target.coeffs().len());
    let mut solution: Option<Rational> = None;
    for k in 0..len {
        let (a, r) = (f1.coeff(k), rhs.coeff(k));
        if a.is_zero() {
            if !r.is_zero() {
                return Err(Error::invariant(format!("coefficient of b^{k} cannot be matched")));
            }
            continue;
        }
        let x = r / a;
        match &solution {
            Some(s) if *s != x => {
                return Err(Error::invariant(format!(
                    "coefficient of b^{k} requires A_N = {x}, earlier ones {s}"
                )))
            }
            _ => solution = Some(x),
        }
    }
    solution.ok_or_else(|| Error::invariant("A_N does not appear in f"))
}

/// `g(b) = -l0 w0^2 b^3 + (linf - 2 l0 winf) w0 b^2 - (linf - 2 l0 w0) winf b + l0 winf^2`.
pub fn reduced_g_raw(l0: &Rational, linf: &Rational, w0: &Rational, winf: &Rational) -> Polynomial {
    let two = rat(2, 1);
    Polynomial::new(vec![
        l0 * winf * winf,
        -((linf - &two * l0 * w0) * winf),
        (linf - &two * l0 * winf) * w0,
        -(l0 * w0 * w0),
    ])
}

pub fn reduced_g(l: WeightPair, w: WeightPair) -> Result<Polynomial> {
    check_w(w)?;
    Ok(reduced_g_raw(&q(l.a0), &q(l.ainf), &q(w.a0), &q(w.ainf)))
}

/// A positive real root of the ray polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RayRoot {
    /// Quasi-regular ray candidate.
    Rational {
        #[serde(with = "crate::serde_util::rational")]
        value: Rational,
        multiplicity: u32,
    },
    Interval(RootInterval),
}

impl RayRoot {
    pub fn multiplicity(&self) -> u32 {
        match self {
            RayRoot::Rational { multiplicity, .. } => *multiplicity,
            RayRoot::Interval(r) => r.multiplicity,
        }
    }

    /// Exact value or the interval midpoint, for ordering.
    fn anchor(&self) -> Rational {
        match self {
            RayRoot::Rational { value, .. } => value.clone(),
            RayRoot::Interval(r) => (&r.lo + &r.hi) / rat(2, 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayCount {
    /// Distinct positive roots.
    pub count: usize,
    pub roots: Vec<RayRoot>,
}

/// Default isolating-interval width.
pub fn default_width() -> Rational {
    rat(1, 1 << 20)
}

/// Positive real roots of `p`, excluding `exclude`. Rational roots are
/// reported exactly, the rest as isolating intervals.
pub fn positive_roots(p: &Polynomial, exclude: Option<&Rational>, width: &Rational) -> Result<RayCount> {
    let mut rest = p.clone();
    let mut roots = Vec::new();
    let mut rationals = p.rational_roots();
    rationals.dedup();
    for r in rationals {
        let lin = Polynomial::linear(Rational::one(), -r.clone());
        let mut mult = 0;
        while let Ok(qt) = rest.exact_divide(&lin) {
            rest = qt;
            mult += 1;
        }
        if r.is_positive() && Some(&r) != exclude {
            roots.push(RayRoot::Rational { value: r, multiplicity: mult });
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        for iv in isolate_roots(&rest, &Bound::Finite(Rational::zero()), &Bound::PosInf, width)? {
            roots.push(RayRoot::Interval(iv));
        }
    }
    roots.sort_by_key(RayRoot::anchor);
    Ok(RayCount {
        count: roots.len(),
        roots,
    })
}

/// Exact ray count for the join with the standard sphere.
pub fn count_csc_rays(l: WeightPair, w: WeightPair) -> Result<RayCount> {
    let g = reduced_g(l, w)?;
    positive_roots(&g, None, &default_width())
}

/// Distinct positive roots of `g` by Sturm sequence alone.
pub fn count_csc_rays_fast(l: WeightPair, w: WeightPair) -> Result<usize> {
    let g = reduced_g(l, w)?;
    Ok(SturmSequence::new(&g)?.count(&Bound::Finite(Rational::zero()), &Bound::PosInf))
}

/// Ray count for general `d_N`: divide out the triple product root and
/// count the positive roots of the cofactor, never counting `winf / w0`.
pub fn count_rays_general(p: &CscParams) -> Result<RayCount> {
    let f = build_f(p);
    let (w0, winf) = (q(p.w.a0), q(p.w.ainf));
    let cofactor = f.exact_divide(&product_factor(&w0, &winf).pow(3))?;
    let excluded = &winf / &w0;
    let rc = positive_roots(&cofactor, Some(&excluded), &default_width())?;
    let bound = 2 * p.d_n as usize + 1;
    if rc.count > bound {
        return Err(Error::invariant(format!("{} rays exceed the bound {bound}", rc.count)));
    }
    Ok(rc)
}

/// `h(linf)`: the discriminant of `g` divided by `(w0 winf)^2`.
pub fn threshold_quartic_raw(l0: &Rational, w0: &Rational, winf: &Rational) -> Polynomial {
    let ws = w0 + winf;
    let p = w0 * winf;
    Polynomial::new(vec![
        num_traits::pow(l0.clone(), 4) * &p * (rat(32, 1) * w0 * w0 + rat(61, 1) * &p + rat(32, 1) * winf * winf),
        -(rat(100, 1) * num_traits::pow(l0.clone(), 3) * &p * &ws),
        rat(2, 1) * l0 * l0 * (rat(2, 1) * w0 * w0 + rat(41, 1) * &p + rat(2, 1) * winf * winf),
        -(rat(8, 1) * l0 * &ws),
        Rational::one(),
    ])
}

pub fn threshold_quartic(l0: u64, w: WeightPair) -> Polynomial {
    threshold_quartic_raw(&q(l0), &q(w.a0), &q(w.ainf))
}

/// `-768 l0^12 w0 winf (w0 - winf)^4 (8 w0 + winf)^3 (w0 + 8 winf)^3`.
pub fn disc_h_closed_form(l0: &Rational, w0: &Rational, winf: &Rational) -> Rational {
    let p = |x: Rational, e: usize| num_traits::pow(x, e);
    rat(-768, 1)
        * p(l0.clone(), 12)
        * w0
        * winf
        * p(w0 - winf, 4)
        * p(rat(8, 1) * w0 + winf, 3)
        * p(w0 + rat(8, 1) * winf, 3)
}

pub fn disc_h_identity(l0: u64, w0: u64, winf: u64) -> bool {
    let (l0, w0, winf) = (q(l0), q(w0), q(winf));
    threshold_quartic_raw(&l0, &w0, &winf).discriminant() == disc_h_closed_form(&l0, &w0, &winf)
}

/// Closed form of `h(2 l0 w0)`.
pub fn h_at_2l0w0_closed_form(l0: &Rational, w0: &Rational, winf: &Rational) -> Rational {
    let d = w0 - winf;
    -(num_traits::pow(l0.clone(), 4)
        * w0
        * (rat(32, 1) * num_traits::pow(d.clone(), 3)
            + rat(27, 1) * winf * winf * &d
            + rat(27, 1) * num_traits::pow(winf.clone(), 3)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    /// One ray.
    Below,
    /// `linf = L`: a double or triple root.
    At,
    /// Three rays.
    Above,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Threshold {
    /// Isolating interval of `L` (exact when `lo == hi`).
    pub interval: RootInterval,
    /// `2 l0 w0`.
    #[serde(with = "crate::serde_util::rational")]
    pub lower_bound: Rational,
    /// `l0 (16 w0 - 5 winf) / 2`.
    #[serde(with = "crate::serde_util::rational")]
    pub upper_bound: Rational,
}

impl Threshold {
    pub fn within_bounds(&self) -> bool {
        self.interval.lo >= self.lower_bound && self.interval.hi <= self.upper_bound
            && (self.interval.lo > self.lower_bound || self.interval.is_exact())
    }
}

/// Isolates `L`, the root of `h` above `2 l0 w0`, to the given width.
pub fn threshold_interval(l0: u64, w: WeightPair, width: &Rational) -> Result<Threshold> {
    check_w(w)?;
    let h = threshold_quartic(l0, w);
    let lower = q(2 * l0 * w.a0);
    let upper = q(l0) * (q(16 * w.a0) - q(5 * w.ainf)) / rat(2, 1);
    let roots = isolate_roots(&h, &Bound::Finite(lower.clone()), &Bound::PosInf, width)?;
    if roots.len() != 1 {
        return Err(Error::invariant(format!(
            "h has {} roots above 2 l0 w0, expected exactly one",
            roots.len()
        )));
    }
    Ok(Threshold {
        interval: roots.into_iter().next().unwrap(),
        lower_bound: lower,
        upper_bound: upper,
    })
}

/// Position of `linf` relative to `L`, from the sign of `h(linf)`.
pub fn classify(l0: u64, w: WeightPair, linf: u64) -> Result<Classification> {
    check_w(w)?;
    if linf <= 2 * l0 * w.a0 {
        return Ok(Classification::Below);
    }
    let v = threshold_quartic(l0, w).eval(&q(linf));
    Ok(if v.is_negative() {
        Classification::Below
    } else if v.is_zero() {
        Classification::At
    } else {
        Classification::Above
    })
}

/// If the w-cone has more than one ray then
/// `2 linf - l0 (w0 + winf) > 2 l0 w0 + l0 (w0 - winf)`.
pub fn multi_ray_c1_check(l: WeightPair, w: WeightPair) -> Result<bool> {
    if count_csc_rays_fast(l, w)? < 2 {
        return Ok(true);
    }
    let (l0, linf, w0, winf) = (l.a0 as i128, l.ainf as i128, w.a0 as i128, w.ainf as i128);
    Ok(2 * linf - l0 * (w0 + winf) > 2 * l0 * w0 + l0 * (w0 - winf))
}

/// Evidence that a polynomial identity holds: the defect vanishes on a full
/// product grid whose side exceeds the degree bound in every variable, which
/// forces the defect polynomial to be zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridCertificate {
    pub identity: String,
    pub variables: Vec<String>,
    pub degree_bounds: Vec<u32>,
    pub points: usize,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<i64>>,
}

/// Checks `holds(point)` on `{1, ..., D_i + 1}` in each variable.
pub fn certify_on_grid(
    identity: &str,
    variables: &[&str],
    degree_bounds: &[u32],
    mut holds: impl FnMut(&[Rational]) -> bool,
) -> GridCertificate {
    let dims: Vec<i64> = degree_bounds.iter().map(|&d| d as i64 + 1).collect();
    let mut idx = vec![1i64; dims.len()];
    let mut points = 0;
    let mut counterexample = None;
    'outer: loop {
        points += 1;
        let pt: Vec<Rational> = idx.iter().map(|&i| rat(i, 1)).collect();
        if !holds(&pt) {
            counterexample = Some(idx.clone());
            break;
        }
        for k in 0..idx.len() {
            if idx[k] < dims[k] {
                idx[k] += 1;
                continue 'outer;
            }
            idx[k] = 1;
        }
        break;
    }
    GridCertificate {
        identity: identity.to_string(),
        variables: variables.iter().map(|s| s.to_string()).collect(),
        degree_bounds: degree_bounds.to_vec(),
        points,
        holds: counterexample.is_none(),
        counterexample,
    }
}

/// `f` at `d_N = 1, A_N = 2` equals the factored closed form identically.
/// Coefficients in `b` have degree at most 1 in `l0, linf` and 5 in `w0, winf`.
pub fn certify_f_d1_identity() -> GridCertificate {
    certify_on_grid(
        "f(d_N=1, A_N=2) = 2(-b w0 + winf)^3 (...)",
        &["l0", "linf", "w0", "winf"],
        &[1, 1, 5, 5],
        |v| build_f_raw(1, &rat(2, 1), &v[0], &v[1], &v[2], &v[3]) == f_d1_closed_form(&v[0], &v[1], &v[2], &v[3]),
    )
}

/// `f`, `f'` and `f''` vanish at `b = winf / w0` for every `A_N`.
///
/// After scaling by `w0^(2d+4)` each value is a polynomial of degree at most
/// 1 in `A_N, l0, linf` and `4d + 7` in `w0, winf`; grid values of `w0` are
/// nonzero so the scaling does not affect vanishing.
pub fn certify_triple_root(d: u32) -> GridCertificate {
    let wd = 4 * d + 7;
    certify_on_grid(
        &format!("(b w0 - winf)^3 divides f for d_N = {d}"),
        &["A_N", "l0", "linf", "w0", "winf"],
        &[1, 1, 1, wd, wd],
        |v| {
            let f = build_f_raw(d, &v[0], &v[1], &v[2], &v[3], &v[4]);
            let b = &v[4] / &v[3];
            let f1 = f.derivative();
            let f2 = f1.derivative();
            f.eval(&b).is_zero() && f1.eval(&b).is_zero() && f2.eval(&b).is_zero()
        },
    )
}

/// The value identities of `g` at `0`, `winf / (2 w0)` and `winf / w0`.
/// Scaled by `8 w0` each defect is a polynomial of degree at most 1 in
/// `l0, linf` and 4 in `w0, winf`.
pub fn certify_g_values() -> GridCertificate {
    certify_on_grid(
        "g(0), g(winf/(2 w0)), g(winf/w0) closed forms",
        &["l0", "linf", "w0", "winf"],
        &[1, 1, 4, 4],
        |v| {
            let (l0, linf, w0, winf) = (&v[0], &v[1], &v[2], &v[3]);
            let g = reduced_g_raw(l0, linf, w0, winf);
            let two = rat(2, 1);
            let at0 = g.eval(&Rational::zero()) == l0 * winf * winf;
            let half = g.eval(&(winf / (&two * w0)))
                == -(winf * winf) * (&two * linf - l0 * (rat(16, 1) * w0 - rat(5, 1) * winf)) / (rat(8, 1) * w0);
            let one = g.eval(&(winf / w0)) == rat(3, 1) * l0 * winf * winf * (w0 - winf) / w0;
            at0 && half && one
        },
    )
}

/// `disc(g) = (w0 winf)^2 h(linf)`; degree at most 4 in `l0, linf` and 8 in
/// `w0, winf`.
pub fn certify_disc_g() -> GridCertificate {
    certify_on_grid(
        "disc(g) = (w0 winf)^2 h(linf)",
        &["l0", "linf", "w0", "winf"],
        &[4, 4, 8, 8],
        |v| {
            let (l0, linf, w0, winf) = (&v[0], &v[1], &v[2], &v[3]);
            let lhs = reduced_g_raw(l0, linf, w0, winf).discriminant();
            let rhs = (w0 * winf) * (w0 * winf) * threshold_quartic_raw(l0, w0, winf).eval(linf);
            lhs == rhs
        },
    )
}

/// `h(2 l0 w0)` equals its closed form; degree at most 4 in `l0` and 4 in
/// `w0, winf`.
pub fn certify_h_at_lower_bound() -> GridCertificate {
    certify_on_grid(
        "h(2 l0 w0) closed form",
        &["l0", "w0", "winf"],
        &[4, 4, 4],
        |v| {
            let (l0, w0, winf) = (&v[0], &v[1], &v[2]);
            let x = rat(2, 1) * l0 * w0;
            threshold_quartic_raw(l0, w0, winf).eval(&x) == h_at_2l0w0_closed_form(l0, w0, winf)
        },
    )
}

/// Report for a single `(l, w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CscReport {
    pub params: CscParams,
    pub count: usize,
    pub roots: Vec<RayRoot>,
    pub threshold: ThresholdReport,
    pub c1_check: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub interval: RootInterval,
    pub classification: Classification,
}

pub fn analyze(l: WeightPair, w: WeightPair, width: &Rational) -> Result<CscReport> {
    let params = CscParams::standard(l, w)?;
    let g = reduced_g(l, w)?;
    let rc = positive_roots(&g, None, width)?;
    let th = threshold_interval(l.a0, w, width)?;
    Ok(CscReport {
        count: rc.count,
        roots: rc.roots,
        threshold: ThresholdReport {
            interval: th.interval,
            classification: classify(l.a0, w, l.ainf)?,
        },
        c1_check: multi_ray_c1_check(l, w)?,
        params,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wp(a: u64, b: u64) -> WeightPair {
        WeightPair::new(a, b).unwrap()
    }

    #[test]
    fn an_matches_two() {
        assert_eq!(derive_an_d1(wp(1, 1), wp(2, 1)).unwrap(), rat(2, 1));
        assert_eq!(derive_an_d1(wp(3, 7), wp(5, 2)).unwrap(), rat(2, 1));
    }

    #[test]
    fn f_d1_explicit_coefficients() {
        // l = (1, 1), w = (2, 1): 2 (1 - 2b)^3 (4b^3 + 2b^2 - 3b - 1), expanded by hand.
        let f = build_f(&CscParams::standard(wp(1, 1), wp(2, 1)).unwrap());
        assert_eq!(f, Polynomial::from_ints(&[-2, 6, 16, -72, 48, 64, -64]));
        let g = reduced_g(wp(1, 1), wp(2, 1)).unwrap();
        let lin = product_factor(&rat(2, 1), &rat(1, 1));
        assert_eq!(f, (&lin.pow(3) * &g).scale(&rat(2, 1)));
    }

    #[test]
    fn example_ray_counts() {
        assert_eq!(count_csc_rays(wp(1, 100), wp(2, 1)).unwrap().count, 3);
        assert_eq!(count_csc_rays(wp(1, 1), wp(2, 1)).unwrap().count, 1);
        assert!(count_csc_rays(wp(1, 1), wp(1, 2)).is_err());
    }

    #[test]
    fn general_count_agrees_at_d1() {
        let p = CscParams::standard(wp(1, 100), wp(2, 1)).unwrap();
        assert_eq!(count_rays_general(&p).unwrap().count, 3);
    }

    #[test]
    fn threshold_example() {
        let th = threshold_interval(1, wp(2, 1), &rat(1, 1000)).unwrap();
        assert!(th.within_bounds());
        assert!(th.interval.lo > rat(4, 1) && th.interval.hi < rat(27, 2));
    }

    #[test]
    fn disc_h_examples() {
        assert!(disc_h_identity(1, 2, 1));
        assert!(disc_h_identity(3, 7, 2));
        assert!(threshold_quartic(1, wp(1, 1)).discriminant().is_zero());
    }

    #[test]
    fn c1_check_example() {
        assert!(multi_ray_c1_check(wp(1, 100), wp(2, 1)).unwrap());
    }

    #[test]
    fn grid_certificate_detects_failure() {
        let c = certify_on_grid("x = 1", &["x"], &[2], |v| v[0] == rat(1, 1));
        assert!(!c.holds);
        assert_eq!(c.counterexample, Some(vec![2]));
    }
}
