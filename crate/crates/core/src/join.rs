//! Iterated S^3_w joins: stage invariants, orbifold order, smoothness,
//! Kähler class recursion and assembly of the quotient Bott orbifold.
//!
//! Stages are numbered from 1. Stage 1 is the weighted sphere `S^3_{w_1}`
//! (implicitly `l_0 = (1, 1)`); stage `k >= 2` joins with `S^3_{w_k}` using
//! weights `l_{k-1}` and, when a quotient is wanted, a Reeb choice `v_k`.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bott::{self, BottMatrix, BottOrbifold, ClassVector, Ramification};
use crate::error::{Error, Result};
use crate::exactmath::{factorize, gcd, FactorEffort, FactoredInteger, Integer};

/// Coprime pair of positive integers, written `[a0, ainf]` in JSON.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[u64; 2]", into = "[u64; 2]")]
pub struct WeightPair {
    pub a0: u64,
    pub ainf: u64,
}

impl WeightPair {
    pub fn new(a0: u64, ainf: u64) -> Result<Self> {
        if a0 == 0 || ainf == 0 {
            return Err(Error::invalid(format!("weights must be positive, got ({a0}, {ainf})")));
        }
        if a0.gcd(&ainf) != 1 {
            return Err(Error::invalid(format!("weights ({a0}, {ainf}) are not coprime")));
        }
        Ok(WeightPair { a0, ainf })
    }

    pub fn unit() -> Self {
        WeightPair { a0: 1, ainf: 1 }
    }

    pub fn zero_int(&self) -> Integer {
        Integer::from(self.a0)
    }

    pub fn inf_int(&self) -> Integer {
        Integer::from(self.ainf)
    }

    /// `a0 + ainf`.
    pub fn total(&self) -> u64 {
        self.a0 + self.ainf
    }
}

impl TryFrom<[u64; 2]> for WeightPair {
    type Error = Error;

    fn try_from(v: [u64; 2]) -> Result<Self> {
        WeightPair::new(v[0], v[1])
    }
}

impl From<WeightPair> for [u64; 2] {
    fn from(w: WeightPair) -> Self {
        [w.a0, w.ainf]
    }
}

impl fmt::Display for WeightPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a0, self.ainf)
    }
}

/// `(s, m, n)` of a stage, with the determinant they come from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageInvariants {
    #[serde(with = "crate::serde_util::bigint")]
    pub s: Integer,
    #[serde(with = "crate::serde_util::bigint")]
    pub m: Integer,
    /// Signed; negative when `v` is oriented against `w`.
    #[serde(with = "crate::serde_util::bigint")]
    pub n: Integer,
    /// `w0 vinf - winf v0`.
    #[serde(with = "crate::serde_util::bigint")]
    pub det: Integer,
    /// `v` parallel to `w`: the quotient is a product.
    pub product: bool,
}

impl StageInvariants {
    pub fn orientation_reversed(&self) -> bool {
        self.n.is_negative()
    }
}

pub fn stage_invariants(l: WeightPair, w: WeightPair, v: WeightPair) -> StageInvariants {
    let det = w.zero_int() * v.inf_int() - w.inf_int() * v.zero_int();
    let linf = l.inf_int();
    if det.is_zero() {
        return StageInvariants {
            s: linf,
            m: Integer::one(),
            n: Integer::zero(),
            det,
            product: true,
        };
    }
    let s = gcd(&linf, &det);
    StageInvariants {
        m: &linf / &s,
        n: l.zero_int() * &det / &s,
        s,
        det,
        product: false,
    }
}

/// One stage of an iterated join.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinStage {
    /// Join weights `l_{k-1}`; absent (meaning `(1, 1)`) at stage 1.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<WeightPair>,
    pub w: WeightPair,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<WeightPair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TowerJson", into = "TowerJson")]
pub struct JoinTower {
    stages: Vec<JoinStage>,
}

#[derive(Serialize, Deserialize)]
struct TowerJson {
    stages: Vec<JoinStage>,
}

impl TryFrom<TowerJson> for JoinTower {
    type Error = Error;

    fn try_from(j: TowerJson) -> Result<Self> {
        JoinTower::new(j.stages)
    }
}

impl From<JoinTower> for TowerJson {
    fn from(t: JoinTower) -> Self {
        TowerJson { stages: t.stages }
    }
}

impl JoinTower {
    /// Validates stage shapes; Reeb choices are checked when a quotient is
    /// requested.
    pub fn new(mut stages: Vec<JoinStage>) -> Result<Self> {
        let Some(first) = stages.first_mut() else {
            return Err(Error::invalid("a tower needs at least one stage"));
        };
        match first.l {
            Some(l) if l != WeightPair::unit() => {
                return Err(Error::invalid("stage 1 join weights must be (1, 1) or absent"));
            }
            _ => first.l = None,
        }
        if first.v.is_some() {
            return Err(Error::invalid("stage 1 takes no Reeb choice"));
        }
        for (i, st) in stages.iter().enumerate().skip(1) {
            if st.l.is_none() {
                return Err(Error::invalid(format!("stage {} is missing l", i + 1)));
            }
        }
        Ok(JoinTower { stages })
    }

    /// A tower from `w_1` and `(l_{k-1}, w_k, v_k)` triples.
    pub fn from_parts(w1: WeightPair, rest: &[(WeightPair, WeightPair, Option<WeightPair>)]) -> Result<Self> {
        let mut stages = vec![JoinStage { l: None, w: w1, v: None }];
        stages.extend(rest.iter().map(|&(l, w, v)| JoinStage { l: Some(l), w, v }));
        Self::new(stages)
    }

    pub fn height(&self) -> usize {
        self.stages.len()
    }

    pub fn stages(&self) -> &[JoinStage] {
        &self.stages
    }

    /// Stage `k` (1-based).
    pub fn stage(&self, k: usize) -> &JoinStage {
        &self.stages[k - 1]
    }

    fn l(&self, k: usize) -> WeightPair {
        self.stage(k).l.unwrap_or_else(WeightPair::unit)
    }

    /// Number of leading stages whose quotient is determined: stage 1 plus
    /// every following stage carrying `v`. Errors if a non-final stage lacks `v`.
    pub fn quotient_height(&self) -> Result<usize> {
        let k = self.height();
        if let Some(i) = (2..k).find(|&i| self.stage(i).v.is_none()) {
            return Err(Error::MissingReeb(i));
        }
        Ok(if k >= 2 && self.stage(k).v.is_none() { k - 1 } else { k })
    }
}

fn factor_u64_product(xs: &[&Integer]) -> FactoredInteger {
    xs.iter().fold(FactoredInteger::one(), |acc, x| {
        acc.multiply(&factorize(x, FactorEffort::default()))
    })
}

/// `Υ_1, Υ_2, ...` through the quotient height.
pub fn upsilon_sequence(tower: &JoinTower) -> Result<Vec<FactoredInteger>> {
    let h = tower.quotient_height()?;
    let w1 = tower.stage(1).w;
    let mut out = vec![factor_u64_product(&[&w1.zero_int(), &w1.inf_int()])];
    for k in 2..=h {
        let st = tower.stage(k);
        let v = st.v.expect("checked by quotient_height");
        let inv = stage_invariants(tower.l(k), st.w, v);
        let step = factor_u64_product(&[&inv.m, &v.zero_int(), &v.inf_int()]);
        let next = out.last().unwrap().multiply(&step);
        out.push(next);
    }
    Ok(out)
}

/// Orbifold order of the quasi-regular structure at the top stage; the top
/// stage must carry `v` when the height exceeds 1.
pub fn orbifold_order(tower: &JoinTower) -> Result<FactoredInteger> {
    let k = tower.height();
    if k >= 2 && tower.stage(k).v.is_none() {
        return Err(Error::MissingReeb(k));
    }
    Ok(upsilon_sequence(tower)?.pop().unwrap())
}

/// Outcome of the gcd test for one join stage.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothnessCertificate {
    pub smooth: bool,
    #[serde(with = "crate::serde_util::bigint")]
    pub lhs: Integer,
    #[serde(with = "crate::serde_util::bigint")]
    pub rhs: Integer,
    #[serde(with = "crate::serde_util::bigint")]
    pub gcd: Integer,
    /// Smallest prime dividing the gcd when not smooth.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_bigint")]
    pub witness: Option<Integer>,
}

mod opt_bigint {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::serde_util::JsonInt;

    use super::Integer;

    pub fn serialize<S: Serializer>(v: &Option<Integer>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => crate::serde_util::bigint::serialize(x, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Integer>, D::Error> {
        Ok(Option::<JsonInt>::deserialize(d)?.map(|j| j.0))
    }
}

impl SmoothnessCertificate {
    /// Recomputes the gcd from the recorded sides.
    pub fn recheck(&self) -> bool {
        let g = gcd(&self.lhs, &self.rhs);
        g == self.gcd && self.smooth == g.is_one()
    }
}

/// `gcd(linf * Υ_{k-1}, l0 * w0 * winf) = 1`.
pub fn is_smooth(upsilon_prev: &Integer, l: WeightPair, w: WeightPair) -> SmoothnessCertificate {
    let lhs = l.inf_int() * upsilon_prev;
    let rhs = l.zero_int() * w.zero_int() * w.inf_int();
    let g = gcd(&lhs, &rhs);
    let witness = (!g.is_one()).then(|| smallest_prime_factor(&g));
    SmoothnessCertificate {
        smooth: g.is_one(),
        lhs,
        rhs,
        gcd: g,
        witness,
    }
}

fn smallest_prime_factor(n: &Integer) -> Integer {
    let f = factorize(n, FactorEffort::default());
    f.primes
        .keys()
        .next()
        .cloned()
        .unwrap_or_else(|| f.cofactor.clone())
}

/// Raw recursion output and its primitive rescaling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KahlerStep {
    pub raw: Vec<Integer>,
    pub primitive: Vec<Integer>,
}

/// Divides by the gcd of the coefficients.
pub fn primitive(v: &[Integer]) -> Vec<Integer> {
    let g = v.iter().fold(Integer::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|c| c / &g).collect()
}

fn integral_coeffs(c: &ClassVector, what: &str) -> Result<Vec<Integer>> {
    if c.basis().mask() != 0 {
        return Err(Error::invalid(format!("{what} must be given in the all-x basis")));
    }
    c.to_integers().ok_or_else(|| Error::NotIntegral(format!("{what} {c}")))
}

/// `ω_k = m l0 w0 vinf · ω_{k-1} + m s Υ_{k-1} · x_k`.
pub fn kahler_class_step(
    omega_prev: &ClassVector,
    inv: &StageInvariants,
    upsilon_prev: &Integer,
    l: WeightPair,
    w: WeightPair,
    v: WeightPair,
) -> Result<KahlerStep> {
    let prev = integral_coeffs(omega_prev, "previous Kähler class")?;
    let a = &inv.m * l.zero_int() * w.zero_int() * v.inf_int();
    let mut raw: Vec<Integer> = prev.iter().map(|c| c * &a).collect();
    raw.push(&inv.m * &inv.s * upsilon_prev);
    let primitive = primitive(&raw);
    Ok(KahlerStep { raw, primitive })
}

/// Matrix row `A_k = n_k · ω_{k-1}`; fails on a non-integral class.
pub fn quotient_row(n: &Integer, omega_prev: &ClassVector) -> Result<Vec<Integer>> {
    let prev = integral_coeffs(omega_prev, "previous Kähler class")?;
    Ok(prev.iter().map(|c| c * n).collect())
}

/// Per-stage quotient data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageQuotient {
    pub stage: usize,
    /// Absent at stage 1.
    pub invariants: Option<StageInvariants>,
    pub upsilon: FactoredInteger,
    pub omega: KahlerStep,
    pub row: Vec<Integer>,
    pub ramification: Ramification,
}

/// Assembles the Bott orbifold through the last stage with `v` fixed.
pub fn quotient_bott_orbifold(tower: &JoinTower) -> Result<(BottOrbifold, Vec<StageQuotient>)> {
    let h = tower.quotient_height()?;
    let upsilons = upsilon_sequence(tower)?;
    let w1 = tower.stage(1).w;
    let ram1 = Ramification::new(w1.zero_int(), w1.inf_int())?;
    let mut matrix = BottMatrix::identity(1);
    let mut ram = vec![ram1.clone()];
    let one = vec![Integer::one()];
    let mut stages = vec![StageQuotient {
        stage: 1,
        invariants: None,
        upsilon: upsilons[0].clone(),
        omega: KahlerStep { raw: one.clone(), primitive: one },
        row: Vec::new(),
        ramification: ram1,
    }];
    for k in 2..=h {
        let st = tower.stage(k);
        let (l, w, v) = (tower.l(k), st.w, st.v.expect("checked by quotient_height"));
        let inv = stage_invariants(l, w, v);
        let prev = stages.last().unwrap();
        let omega_prev = ClassVector::from_integers_in_x(&prev.omega.raw);
        let upsilon_prev = prev.upsilon.value();
        let row = quotient_row(&inv.n, &omega_prev)?;
        let omega = kahler_class_step(&omega_prev, &inv, &upsilon_prev, l, w, v)?;
        let r = Ramification::new(&inv.m * v.zero_int(), &inv.m * v.inf_int())?;
        if r.m() != inv.m {
            return Err(Error::invariant(format!("stage {k}: gcd of ramification differs from m")));
        }
        if &inv.m * &inv.s != l.inf_int() {
            return Err(Error::invariant(format!("stage {k}: m * s differs from l_inf")));
        }
        matrix = matrix.extend(row.clone())?;
        ram.push(r.clone());
        stages.push(StageQuotient {
            stage: k,
            invariants: Some(inv),
            upsilon: upsilons[k - 1].clone(),
            omega,
            row,
            ramification: r,
        });
    }
    Ok((BottOrbifold::new(matrix, ram)?, stages))
}

/// `l = (I, w0 + winf) / gcd(w0 + winf, I)`.
pub fn gorenstein_l(index: &Integer, w: WeightPair) -> Result<(Integer, Integer)> {
    if !index.is_positive() {
        return Err(Error::invalid(format!("Fano index must be positive, got {index}")));
    }
    let total = Integer::from(w.total());
    let g = gcd(&total, index);
    Ok((index / &g, total / g))
}

/// Same as [`gorenstein_l`] for word-sized indices.
pub fn gorenstein_l_pair(index: u64, w: WeightPair) -> Result<WeightPair> {
    let (a, b) = gorenstein_l(&Integer::from(index), w)?;
    let to = |x: Integer| -> Result<u64> {
        u64::try_from(x).map_err(|_| Error::invalid("join weights exceed 64 bits"))
    };
    WeightPair::new(to(a)?, to(b)?)
}

/// A `Y^{p,q}` realized as a stage-2 join.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YpqJoin {
    pub p: u64,
    pub q: u64,
    pub l: WeightPair,
    pub w: WeightPair,
    /// `linf == (w0 + winf) / gcd(2, w0 + winf)`.
    pub gorenstein: bool,
}

pub fn ypq_to_join(p: u64, q: u64) -> Result<YpqJoin> {
    if q == 0 || p <= q {
        return Err(Error::invalid(format!("need p > q >= 1, got p = {p}, q = {q}")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::invalid(format!("p = {p} and q = {q} are not coprime")));
    }
    let l0 = (p + q).gcd(&(p - q));
    let w = WeightPair::new((p + q) / l0, (p - q) / l0)?;
    let l = WeightPair::new(l0, p)?;
    let t = w.total();
    Ok(YpqJoin {
        p,
        q,
        l,
        w,
        gorenstein: p == t / t.gcd(&2),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BundleType {
    Trivial,
    Nontrivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stage2C1 {
    /// Coefficient of the positive generator of `H^2`.
    #[serde(with = "crate::serde_util::bigint")]
    pub coefficient: Integer,
    pub bundle: BundleType,
}

/// `c1 = (2 linf - l0 (w0 + winf)) γ`; the bundle is trivial iff
/// `l0 (w0 + winf)` is even.
pub fn stage2_c1(l: WeightPair, w: WeightPair) -> Stage2C1 {
    let lw = l.zero_int() * Integer::from(w.total());
    let bundle = if lw.is_even() { BundleType::Trivial } else { BundleType::Nontrivial };
    Stage2C1 {
        coefficient: Integer::from(2) * l.inf_int() - lw,
        bundle,
    }
}

/// Everything computed for one stage of a tower.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageReport {
    pub stage: usize,
    pub l: WeightPair,
    pub w: WeightPair,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<WeightPair>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<StageInvariants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub smoothness: Option<SmoothnessCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upsilon: Option<FactoredInteger>,
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_bigint_vec")]
    pub omega: Option<Vec<Integer>>,
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_bigint_vec")]
    pub omega_primitive: Option<Vec<Integer>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_in_kahler_cone: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_bigint_vec")]
    pub a_row: Option<Vec<Integer>>,
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_bigint_vec")]
    pub ramification: Option<Vec<Integer>>,
}

mod opt_bigint_vec {
    use serde::Serializer;

    use super::Integer;

    pub fn serialize<S: Serializer>(v: &Option<Vec<Integer>>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(xs) => crate::serde_util::bigint_vec::serialize(xs, s),
            None => s.serialize_none(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerReport {
    pub tower: JoinTower,
    pub smooth: bool,
    pub stages: Vec<StageReport>,
    pub quotient: BottOrbifold,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stage2_c1: Option<Stage2C1>,
}

/// Full stagewise analysis. Smoothness of stage `k` needs `Υ_{k-1}`, so it is
/// reported for every stage up to one past the quotient height.
pub fn analyze_tower(tower: &JoinTower) -> Result<TowerReport> {
    let (quotient, quots) = quotient_bott_orbifold(tower)?;
    let mut stages = Vec::with_capacity(tower.height());
    let mut smooth = true;
    for k in 1..=tower.height() {
        let st = tower.stage(k);
        let q = quots.get(k - 1);
        let smoothness = (k >= 2).then(|| {
            let ups = quots[k - 2].upsilon.value();
            is_smooth(&ups, tower.l(k), st.w)
        });
        smooth &= smoothness.as_ref().is_none_or(|c| c.smooth);
        let omega_in_kahler_cone = match q {
            Some(q) if k >= 2 => {
                let sub = truncate_to(&quotient, k)?;
                Some(bott::in_kahler_cone(
                    &ClassVector::from_integers_in_x(&q.omega.raw),
                    sub.matrix(),
                )?)
            }
            _ => None,
        };
        stages.push(StageReport {
            stage: k,
            l: tower.l(k),
            w: st.w,
            v: st.v,
            invariants: q.and_then(|q| q.invariants.clone()),
            smoothness,
            upsilon: q.map(|q| q.upsilon.clone()),
            omega: q.map(|q| q.omega.raw.clone()),
            omega_primitive: q.map(|q| q.omega.primitive.clone()),
            omega_in_kahler_cone,
            a_row: q.filter(|_| k >= 2).map(|q| q.row.clone()),
            ramification: q.map(|q| vec![q.ramification.m0.clone(), q.ramification.minf.clone()]),
        });
    }
    let stage2_c1 = (tower.height() == 2).then(|| stage2_c1(tower.l(2), tower.stage(2).w));
    Ok(TowerReport {
        tower: tower.clone(),
        smooth,
        stages,
        quotient,
        stage2_c1,
    })
}

fn truncate_to(orb: &BottOrbifold, k: usize) -> Result<BottOrbifold> {
    let mut o = orb.clone();
    while o.n() > k {
        o = o.restrict()?;
    }
    Ok(o)
}
