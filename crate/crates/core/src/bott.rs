//! Bott orbifolds: lower unipotent matrices with ramification along the zero
//! and infinity sections of each stage.
//!
//! Stages are indexed from 0 internally. `A[i][j]` for `j < i` is the entry
//! relating the invariant class `y_i` to the fiber classes:
//! `y_i = x_i + sum_{j<i} A[i][j] x_j`. Since `y_0 = x_0`, an invariant basis
//! is a choice of `x_i` or `y_i` for every stage `i >= 1`, giving `2^(n-1)`
//! bases.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::lattice;
use crate::exactmath::{gcd, lcm, rat_int, Integer, Rational};
use crate::serde_util::{format_rational, JsonInt};

/// Largest height handled; basis masks are `u64` and the log-Fano table has
/// `2^(n-1)` rows.
pub const MAX_HEIGHT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BottMatrix {
    /// `rows[i]` holds `A[i][0..i]`.
    rows: Vec<Vec<Integer>>,
}

impl BottMatrix {
    pub fn identity(n: usize) -> Self {
        BottMatrix {
            rows: (0..n).map(|i| vec![Integer::zero(); i]).collect(),
        }
    }

    /// Builds from strictly-lower rows; `rows[i]` must have exactly `i` entries.
    pub fn from_lower_rows(rows: Vec<Vec<Integer>>) -> Result<Self> {
        if rows.is_empty() || rows.len() > MAX_HEIGHT {
            return Err(Error::invalid(format!(
                "height must lie in 1..={MAX_HEIGHT}, got {}",
                rows.len()
            )));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != i {
                return Err(Error::invalid(format!(
                    "row {} must have {} strictly-lower entries, got {}",
                    i + 1,
                    i,
                    r.len()
                )));
            }
        }
        Ok(BottMatrix { rows })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_lower_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Integer::from(x)).collect())
                .collect(),
        )
    }

    /// Validates a full square matrix (unit diagonal, zero upper part).
    pub fn from_square(m: Vec<Vec<Integer>>) -> Result<Self> {
        let n = m.len();
        let mut rows = Vec::with_capacity(n);
        for (i, r) in m.into_iter().enumerate() {
            if r.len() != n {
                return Err(Error::invalid(format!("row {} is not of length {n}", i + 1)));
            }
            if !r[i].is_one() {
                return Err(Error::invalid(format!("diagonal entry {} is not 1", i + 1)));
            }
            if let Some(j) = (i + 1..n).find(|&j| !r[j].is_zero()) {
                return Err(Error::invalid(format!(
                    "entry ({}, {}) above the diagonal is nonzero",
                    i + 1,
                    j + 1
                )));
            }
            rows.push(r[..i].to_vec());
        }
        Self::from_lower_rows(rows)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// `A[i][j]`: zero above the diagonal, one on it.
    pub fn get(&self, i: usize, j: usize) -> Integer {
        match j.cmp(&i) {
            std::cmp::Ordering::Less => self.rows[i][j].clone(),
            std::cmp::Ordering::Equal => Integer::one(),
            std::cmp::Ordering::Greater => Integer::zero(),
        }
    }

    pub fn row(&self, i: usize) -> &[Integer] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.rows
    }

    pub fn max_abs_entry(&self) -> Integer {
        self.rows.iter().flatten().map(|x| x.abs()).max().unwrap_or_else(Integer::zero)
    }

    /// Deletes the last row and column.
    pub fn truncate(&self) -> BottMatrix {
        BottMatrix {
            rows: self.rows[..self.n() - 1].to_vec(),
        }
    }

    /// Appends a stage whose lower row is `row`.
    pub fn extend(&self, row: Vec<Integer>) -> Result<BottMatrix> {
        let mut rows = self.rows.clone();
        rows.push(row);
        Self::from_lower_rows(rows)
    }
}

/// Ramification pair `(m0, minf)` at one stage.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ramification {
    pub m0: Integer,
    pub minf: Integer,
}

impl Ramification {
    pub fn new(m0: Integer, minf: Integer) -> Result<Self> {
        if !m0.is_positive() || !minf.is_positive() {
            return Err(Error::invalid(format!(
                "ramification indices must be positive, got ({m0}, {minf})"
            )));
        }
        Ok(Ramification { m0, minf })
    }

    pub fn from_u64(m0: u64, minf: u64) -> Result<Self> {
        Self::new(Integer::from(m0), Integer::from(minf))
    }

    pub fn trivial() -> Self {
        Ramification {
            m0: Integer::one(),
            minf: Integer::one(),
        }
    }

    /// `m = gcd(m0, minf)`.
    pub fn m(&self) -> Integer {
        gcd(&self.m0, &self.minf)
    }

    /// `(v0, vinf) = (m0, minf) / m`, a coprime pair.
    pub fn v(&self) -> (Integer, Integer) {
        let m = self.m();
        (&self.m0 / &m, &self.minf / &m)
    }

    pub fn swapped(&self) -> Self {
        Ramification {
            m0: self.minf.clone(),
            minf: self.m0.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BottOrbifold {
    matrix: BottMatrix,
    ram: Vec<Ramification>,
}

impl BottOrbifold {
    pub fn new(matrix: BottMatrix, ram: Vec<Ramification>) -> Result<Self> {
        if matrix.n() != ram.len() {
            return Err(Error::invalid(format!(
                "matrix has height {} but {} ramification pairs were given",
                matrix.n(),
                ram.len()
            )));
        }
        Ok(BottOrbifold { matrix, ram })
    }

    /// The Bott tower itself, all ramification trivial.
    pub fn manifold(matrix: BottMatrix) -> Self {
        let ram = vec![Ramification::trivial(); matrix.n()];
        BottOrbifold { matrix, ram }
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn matrix(&self) -> &BottMatrix {
        &self.matrix
    }

    pub fn ramification(&self) -> &[Ramification] {
        &self.ram
    }

    pub fn q0(&self) -> Vec<Rational> {
        self.ram.iter().map(|r| Rational::new(Integer::one(), r.m0.clone())).collect()
    }

    pub fn qinf(&self) -> Vec<Rational> {
        self.ram.iter().map(|r| Rational::new(Integer::one(), r.minf.clone())).collect()
    }

    /// Deletes the last stage.
    pub fn restrict(&self) -> Result<BottOrbifold> {
        if self.n() < 2 {
            return Err(Error::invalid("cannot restrict a height-1 orbifold"));
        }
        Ok(BottOrbifold {
            matrix: self.matrix.truncate(),
            ram: self.ram[..self.n() - 1].to_vec(),
        })
    }

    /// Exchanges the zero and infinity sections of stage `k` (1-based).
    ///
    /// Row `k` changes sign; rows below pick up `-A[i][k] * A[k][j]` in the
    /// columns `j < k`. Stage 1 leaves the matrix untouched.
    pub fn fiber_inversion(&self, k: usize) -> Result<BottOrbifold> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(Error::invalid(format!("stage {k} outside 1..={n}")));
        }
        let k = k - 1;
        let mut rows = self.matrix.rows.clone();
        let row_k = rows[k].clone();
        for row in rows.iter_mut().skip(k + 1) {
            let aik = row[k].clone();
            for (j, akj) in row_k.iter().enumerate() {
                row[j] -= &aik * akj;
            }
        }
        for x in rows[k].iter_mut() {
            *x = -x.clone();
        }
        let mut ram = self.ram.clone();
        ram[k] = ram[k].swapped();
        Ok(BottOrbifold {
            matrix: BottMatrix { rows },
            ram,
        })
    }
}

/// Which stages use `y_i` rather than `x_i`. Bit `i` set selects `y_i`;
/// bit 0 is always clear because `y_0 = x_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisSelector {
    n: usize,
    mask: u64,
}

impl BasisSelector {
    pub fn all_x(n: usize) -> Self {
        BasisSelector { n, mask: 0 }
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n == 0 || n > MAX_HEIGHT {
            return Err(Error::invalid(format!("height {n} out of range")));
        }
        if mask & 1 != 0 || mask >> n != 0 {
            return Err(Error::invalid(format!("mask {mask:#b} invalid for height {n}")));
        }
        Ok(BasisSelector { n, mask })
    }

    /// Selects `y` at the given 1-based stages; stage 1 is rejected.
    pub fn with_y(n: usize, stages: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &s in stages {
            if s < 2 || s > n {
                return Err(Error::invalid(format!("y-stage {s} must lie in 2..={n}")));
            }
            mask |= 1 << (s - 1);
        }
        Self::from_mask(n, mask)
    }

    /// Every invariant basis, in mask order.
    pub fn all(n: usize) -> impl Iterator<Item = BasisSelector> {
        (0..1u64 << (n - 1)).map(move |k| BasisSelector { n, mask: k << 1 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn uses_y(&self, i: usize) -> bool {
        self.mask >> i & 1 == 1
    }
}

impl fmt::Display for BasisSelector {
    /// `{x1, y2, x3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.n)
            .map(|i| format!("{}{}", if self.uses_y(i) { 'y' } else { 'x' }, i + 1))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A degree-2 class written in a tagged invariant basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassVector {
    coeffs: Vec<Rational>,
    basis: BasisSelector,
}

impl ClassVector {
    pub fn new(coeffs: Vec<Rational>, basis: BasisSelector) -> Result<Self> {
        if coeffs.len() != basis.n() {
            return Err(Error::invalid(format!(
                "{} coefficients for a basis of size {}",
                coeffs.len(),
                basis.n()
            )));
        }
        Ok(ClassVector { coeffs, basis })
    }

    pub fn in_x(coeffs: Vec<Rational>) -> Self {
        let basis = BasisSelector::all_x(coeffs.len());
        ClassVector { coeffs, basis }
    }

    pub fn from_integers_in_x(coeffs: &[Integer]) -> Self {
        Self::in_x(coeffs.iter().cloned().map(rat_int).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self::in_x(vec![Rational::zero(); n])
    }

    /// The fiber class `x_k`, 1-based.
    pub fn x(n: usize, k: usize) -> Self {
        let mut c = vec![Rational::zero(); n];
        c[k - 1] = Rational::one();
        Self::in_x(c)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn basis(&self) -> BasisSelector {
        self.basis
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn checked_add(&self, other: &ClassVector) -> Result<ClassVector> {
        self.same_tag(other)?;
        Ok(ClassVector {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
            basis: self.basis,
        })
    }

    pub fn checked_sub(&self, other: &ClassVector) -> Result<ClassVector> {
        self.same_tag(other)?;
        Ok(ClassVector {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
            basis: self.basis,
        })
    }

    pub fn scale(&self, s: &Rational) -> ClassVector {
        ClassVector {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            basis: self.basis,
        }
    }

    fn same_tag(&self, other: &ClassVector) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::invalid(format!(
                "basis mismatch: {} vs {}",
                self.basis, other.basis
            )));
        }
        Ok(())
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_positive())
    }

    /// Coefficients as integers, or `None` if any is fractional.
    pub fn to_integers(&self) -> Option<Vec<Integer>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Appends a zero coefficient for a new top stage (all-x basis only).
    pub fn lift(&self) -> Result<ClassVector> {
        if self.basis.mask != 0 {
            return Err(Error::invalid("lift expects a class in the all-x basis"));
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.push(Rational::zero());
        Ok(Self::in_x(coeffs))
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "({}) in {}", parts.join(", "), self.basis)
    }
}

/// Orbifold first Chern class in the all-x basis from reciprocal
/// ramification data; `q0`, `qinf` may be arbitrary positive rationals.
pub fn c1_from_q(matrix: &BottMatrix, q0: &[Rational], qinf: &[Rational]) -> Result<ClassVector> {
    let n = matrix.n();
    if q0.len() != n || qinf.len() != n {
        return Err(Error::invalid("q vectors must match the matrix height"));
    }
    let coeffs = (0..n)
        .map(|j| {
            let mut c = &q0[j] + &qinf[j];
            for i in j + 1..n {
                c += rat_int(matrix.get(i, j)) * &q0[i];
            }
            c
        })
        .collect();
    Ok(ClassVector::in_x(coeffs))
}

/// Orbifold first Chern class in the all-x basis.
pub fn c1_orb(orb: &BottOrbifold) -> ClassVector {
    c1_from_q(&orb.matrix, &orb.q0(), &orb.qinf()).expect("lengths agree by construction")
}

/// Rewrites `c` in the `target` basis.
pub fn change_basis(c: &ClassVector, target: BasisSelector, a: &BottMatrix) -> Result<ClassVector> {
    let n = a.n();
    if c.n() != n || target.n() != n {
        return Err(Error::invalid("class, basis and matrix heights differ"));
    }
    if c.basis == target {
        return Ok(c.clone());
    }
    // To all-x: c_j = r_j + sum_{i in S, i > j} r_i A[i][j].
    let mut x = c.coeffs.clone();
    if c.basis.mask != 0 {
        for i in (1..n).filter(|&i| c.basis.uses_y(i)) {
            let r_i = c.coeffs[i].clone();
            for j in 0..i {
                x[j] += &r_i * rat_int(a.get(i, j));
            }
        }
    }
    // From all-x, top stage down: r_j = c_j - sum_{i in S, i > j} r_i A[i][j].
    let mut r = x;
    for j in (0..n).rev() {
        let mut v = r[j].clone();
        for i in (j + 1..n).filter(|&i| target.uses_y(i)) {
            v -= &r[i] * rat_int(a.get(i, j));
        }
        r[j] = v;
    }
    Ok(ClassVector { coeffs: r, basis: target })
}

/// Every invariant basis with the coefficients of a class in it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityTable {
    pub rows: Vec<ClassVector>,
}

impl PositivityTable {
    pub fn build(c: &ClassVector, a: &BottMatrix) -> Result<Self> {
        let rows = BasisSelector::all(a.n())
            .map(|b| change_basis(c, b, a))
            .collect::<Result<Vec<_>>>()?;
        Ok(PositivityTable { rows })
    }

    pub fn all_positive(&self) -> bool {
        self.rows.iter().all(ClassVector::is_strictly_positive)
    }

    /// First basis with a non-positive coefficient.
    pub fn first_failure(&self) -> Option<&ClassVector> {
        self.rows.iter().find(|r| !r.is_strictly_positive())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogFanoReport {
    pub log_fano: bool,
    pub table: PositivityTable,
}

impl LogFanoReport {
    pub fn failing_basis(&self) -> Option<BasisSelector> {
        self.table.first_failure().map(|c| c.basis)
    }
}

/// Log Fano iff `c1_orb` is strictly positive in every invariant basis.
pub fn is_log_fano(orb: &BottOrbifold) -> LogFanoReport {
    let table = PositivityTable::build(&c1_orb(orb), &orb.matrix).expect("heights agree");
    LogFanoReport {
        log_fano: table.all_positive(),
        table,
    }
}

/// Ampleness depends only on the underlying tower.
pub fn is_ample(d: &ClassVector, orb: &BottOrbifold) -> Result<bool> {
    in_kahler_cone(d, &orb.matrix)
}

pub fn in_kahler_cone(c: &ClassVector, a: &BottMatrix) -> Result<bool> {
    let mut ok = true;
    for b in BasisSelector::all(a.n()) {
        if !change_basis(c, b, a)?.is_strictly_positive() {
            ok = false;
            break;
        }
    }
    Ok(ok)
}

/// Degree-n intersection number of `prod x_{k}` over the 1-based stages in
/// `monomial`, normalized by `x_1 ... x_n = 1`.
pub fn intersection_number(monomial: &[usize], a: &BottMatrix) -> Result<Integer> {
    let n = a.n();
    if monomial.len() != n {
        return Err(Error::invalid(format!(
            "monomial has degree {} but the tower has height {n}",
            monomial.len()
        )));
    }
    let mut exps = vec![0u32; n];
    for &k in monomial {
        if k == 0 || k > n {
            return Err(Error::invalid(format!("stage {k} outside 1..={n}")));
        }
        exps[k - 1] += 1;
    }
    let mut memo = HashMap::new();
    Ok(reduce_monomial(exps, a, &mut memo))
}

/// Applies `x_j^2 = -sum_{i<j} A[j][i] x_i x_j` at the largest repeated index.
fn reduce_monomial(exps: Vec<u32>, a: &BottMatrix, memo: &mut HashMap<Vec<u32>, Integer>) -> Integer {
    let Some(j) = (0..exps.len()).rev().find(|&j| exps[j] >= 2) else {
        return Integer::one();
    };
    if let Some(v) = memo.get(&exps) {
        return v.clone();
    }
    let mut total = Integer::zero();
    for i in 0..j {
        let coeff = a.get(j, i);
        if coeff.is_zero() {
            continue;
        }
        let mut next = exps.clone();
        next[j] -= 1;
        next[i] += 1;
        total -= coeff * reduce_monomial(next, a, memo);
    }
    memo.insert(exps, total.clone());
    total
}

/// Generators `{ y_j / m0_j, x_j / minf_j }` of the orbifold class lattice,
/// in all-x coordinates scaled by `scale` so that every entry is integral.
fn lattice_generators(orb: &BottOrbifold) -> (Vec<Vec<Integer>>, Integer) {
    let n = orb.n();
    let scale = orb
        .ram
        .iter()
        .fold(Integer::one(), |acc, r| lcm(&lcm(&acc, &r.m0), &r.minf));
    let mut gens = Vec::with_capacity(2 * n);
    for (j, r) in orb.ram.iter().enumerate() {
        let f0 = &scale / &r.m0;
        let mut y = vec![Integer::zero(); n];
        for (i, slot) in y.iter_mut().enumerate().take(j + 1) {
            *slot = orb.matrix.get(j, i) * &f0;
        }
        gens.push(y);
        let mut x = vec![Integer::zero(); n];
        x[j] = &scale / &r.minf;
        gens.push(x);
    }
    (gens, scale)
}

/// Coordinates of `c1_orb` in an echelon basis of the orbifold class
/// lattice. `c1_orb` is the sum of the lattice generators, so these exist.
pub fn c1_lattice_coordinates(orb: &BottOrbifold) -> Result<Vec<Integer>> {
    let (gens, scale) = lattice_generators(orb);
    let basis = lattice::echelon_basis(&gens);
    let c1: Vec<Integer> = c1_orb(orb)
        .coeffs
        .iter()
        .map(|c| {
            let v = c * rat_int(scale.clone());
            debug_assert!(v.is_integer());
            v.to_integer()
        })
        .collect();
    lattice::coordinates(&basis, &c1)
        .ok_or_else(|| Error::invariant("c1 is not in the orbifold class lattice"))
}

/// Largest `I` with `c1_orb / I` in the orbifold class lattice, ignoring
/// the log-Fano requirement.
pub fn c1_divisibility(orb: &BottOrbifold) -> Result<Integer> {
    let coords = c1_lattice_coordinates(orb)?;
    let g = coords.iter().fold(Integer::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return Err(Error::invariant("c1 vanishes"));
    }
    Ok(g)
}

/// Fano index of a log-Fano orbifold.
pub fn fano_index(orb: &BottOrbifold) -> Result<Integer> {
    let report = is_log_fano(orb);
    if let Some(b) = report.failing_basis() {
        return Err(Error::NotLogFano { basis: b.to_string() });
    }
    c1_divisibility(orb)
}

/// JSON form: `{"n", "A", "m"}`. `A` is either strictly-lower rows (row `i`
/// holding `i - 1` entries; the empty first row may be omitted) or a full
/// square matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbifoldSpec {
    pub n: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<JsonInt>>,
    pub m: Vec<[JsonInt; 2]>,
}

impl TryFrom<OrbifoldSpec> for BottOrbifold {
    type Error = Error;

    fn try_from(spec: OrbifoldSpec) -> Result<Self> {
        let n = spec.n;
        if n == 0 || n > MAX_HEIGHT {
            return Err(Error::invalid(format!("n must lie in 1..={MAX_HEIGHT}")));
        }
        let rows: Vec<Vec<Integer>> = spec
            .a
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.0).collect())
            .collect();
        let matrix = if rows.len() == n && rows.iter().all(|r| r.len() == n) && n > 1 {
            BottMatrix::from_square(rows)?
        } else if rows.len() + 1 == n {
            let mut full = vec![Vec::new()];
            full.extend(rows);
            BottMatrix::from_lower_rows(full)?
        } else if rows.len() == n {
            if n == 1 && rows[0].len() == 1 && !rows[0][0].is_one() {
                return Err(Error::invalid("diagonal entry 1 is not 1"));
            }
            let rows = if n == 1 { vec![Vec::new()] } else { rows };
            BottMatrix::from_lower_rows(rows)?
        } else {
            return Err(Error::invalid(format!(
                "A has {} rows, expected {} or {n}",
                rows.len(),
                n.saturating_sub(1)
            )));
        };
        let ram = spec
            .m
            .into_iter()
            .map(|[a, b]| Ramification::new(a.0, b.0))
            .collect::<Result<Vec<_>>>()?;
        BottOrbifold::new(matrix, ram)
    }
}

impl From<&BottOrbifold> for OrbifoldSpec {
    fn from(orb: &BottOrbifold) -> Self {
        OrbifoldSpec {
            n: orb.n(),
            a: orb
                .matrix
                .rows
                .iter()
                .map(|r| r.iter().cloned().map(JsonInt).collect())
                .collect(),
            m: orb
                .ram
                .iter()
                .map(|r| [JsonInt(r.m0.clone()), JsonInt(r.minf.clone())])
                .collect(),
        }
    }
}

impl Serialize for BottOrbifold {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OrbifoldSpec::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for BottOrbifold {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let spec = OrbifoldSpec::deserialize(d)?;
        BottOrbifold::try_from(spec).map_err(serde::de::Error::custom)
    }
}
