//! Exact integer and rational linear algebra.
//!
//! Determinants are computed by fraction-free (Bareiss) elimination, so every
//! intermediate value is itself a minor of the input and divisions are exact.
//! Vertices of the cover polyhedron `{c >= 0 : M c >= w}` are found by basis
//! enumeration: every choice of `n` constraint rows among the `m` edge rows and
//! `n` nonnegativity rows is solved exactly and kept when feasible.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest `min(rows, cols)` accepted by the exhaustive TU test.
pub const TU_SIZE_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(IntegerMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Panics when a row does not have `cols` entries.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        IntegerMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut entries = vec![BigInt::zero(); size * size];
        for i in 0..size {
            entries[i * size + i] = BigInt::one();
        }
        IntegerMatrix {
            rows: size,
            cols: size,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[BigInt] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntegerMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.get(r, c).clone());
            }
        }
        IntegerMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// `(self | other)`, side by side.
    pub fn hconcat(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.rows != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: other.rows,
            });
        }
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        for r in 0..self.rows {
            entries.extend_from_slice(self.row(r));
            entries.extend_from_slice(other.row(r));
        }
        Ok(IntegerMatrix {
            rows: self.rows,
            cols: self.cols + other.cols,
            entries,
        })
    }

    fn check_nonnegative(&self) -> Result<()> {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c).is_negative() {
                    return Err(Error::NegativeEntry { row: r, col: c });
                }
            }
        }
        Ok(())
    }

    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(bareiss(self.to_rows()))
    }

    /// Every maximal (`rows x rows`) minor is 0 or +-1.
    pub fn is_unimodular(&self) -> Result<bool> {
        if self.rows > self.cols {
            return Err(Error::TooManyRows {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let all_rows: Vec<usize> = (0..self.rows).collect();
        let mut cols: Vec<usize> = (0..self.rows).collect();
        loop {
            let det = self.submatrix(&all_rows, &cols).determinant()?;
            if det.abs() > BigInt::one() {
                return Ok(false);
            }
            if !next_combination(&mut cols, self.cols) {
                return Ok(true);
            }
        }
    }

    /// Exhaustive subdeterminant test, ascending by size, so a returned
    /// witness has the smallest possible order. Refuses matrices with
    /// `min(rows, cols) > TU_SIZE_CAP`.
    pub fn is_totally_unimodular(&self) -> Result<TuVerdict> {
        let size = self.rows.min(self.cols);
        if size > TU_SIZE_CAP {
            return Err(Error::CapExceeded {
                size,
                cap: TU_SIZE_CAP,
            });
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                let x = self.get(r, c);
                if x.abs() > BigInt::one() {
                    return Ok(TuVerdict::Violated(TuWitness {
                        rows: vec![r],
                        cols: vec![c],
                        determinant: x.clone(),
                    }));
                }
            }
        }
        // Entries are now in {-1, 0, 1}; with order <= 12 every minor is bounded
        // by Hadamard's 12^6, so Bareiss over i128 is exact.
        let small: Vec<i128> = self
            .entries
            .iter()
            .map(|x| x.to_i128().expect("entry in {-1, 0, 1}"))
            .collect();
        let mut buf: Vec<Vec<i128>> = Vec::new();
        for k in 2..=size {
            let mut rows: Vec<usize> = (0..k).collect();
            loop {
                let mut cols: Vec<usize> = (0..k).collect();
                loop {
                    buf.clear();
                    buf.extend(
                        rows.iter()
                            .map(|&r| cols.iter().map(|&c| small[r * self.cols + c]).collect()),
                    );
                    let det = bareiss(std::mem::take(&mut buf));
                    if det.abs() > 1 {
                        return Ok(TuVerdict::Violated(TuWitness {
                            rows,
                            cols,
                            determinant: BigInt::from(det),
                        }));
                    }
                    if !next_combination(&mut cols, self.cols) {
                        break;
                    }
                }
                if !next_combination(&mut rows, self.rows) {
                    break;
                }
            }
        }
        Ok(TuVerdict::TotallyUnimodular)
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TuVerdict {
    TotallyUnimodular,
    Violated(TuWitness),
}

impl TuVerdict {
    pub fn is_totally_unimodular(&self) -> bool {
        matches!(self, TuVerdict::TotallyUnimodular)
    }

    pub fn witness(&self) -> Option<&TuWitness> {
        match self {
            TuVerdict::TotallyUnimodular => None,
            TuVerdict::Violated(w) => Some(w),
        }
    }
}

/// A square submatrix whose determinant is not 0 or +-1.
/// Row and column indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub determinant: BigInt,
}

impl TuWitness {
    /// Recomputes the subdeterminant from `m` and checks it against the record.
    pub fn verify(&self, m: &IntegerMatrix) -> bool {
        if self.rows.len() != self.cols.len()
            || self.rows.iter().any(|&r| r >= m.rows())
            || self.cols.iter().any(|&c| c >= m.cols())
        {
            return false;
        }
        let det = m
            .submatrix(&self.rows, &self.cols)
            .determinant()
            .expect("square by construction");
        det == self.determinant && det.abs() >= BigInt::from(2)
    }
}

fn bareiss<T>(mut a: Vec<Vec<T>>) -> T
where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Mul<Output = T>
        + Sub<Output = T>
        + Div<Output = T>
        + Neg<Output = T>,
{
    let n = a.len();
    if n == 0 {
        return T::one();
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = v / prev.clone();
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Advances `idx` to the next `idx.len()`-subset of `0..n` in lexicographic
/// order; returns false after the last one.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A point with exact rational coordinates, each in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPoint {
    coords: Vec<BigRational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalPoint { coords }
    }

    pub fn from_ratios(pairs: &[(i64, i64)]) -> Self {
        RationalPoint {
            coords: pairs
                .iter()
                .map(|&(p, q)| BigRational::new(p.into(), q.into()))
                .collect(),
        }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|x| x.is_integer())
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coords
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// Coordinates as exact `p/q` strings (integers print without a slash).
    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(|x| x.to_string()).collect()
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

type RatMatrix = Vec<Vec<BigRational>>;

/// Inverse by Gauss-Jordan elimination; `None` when singular.
fn inverse(mut a: RatMatrix) -> Option<RatMatrix> {
    let n = a.len();
    let mut inv: RatMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                let da = &factor * &a[col][j];
                a[r][j] -= da;
                let di = &factor * &inv[col][j];
                inv[r][j] -= di;
            }
        }
    }
    Some(inv)
}

pub(crate) fn rational_rank(mut a: RatMatrix) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &a[rank][col];
            for j in col..cols {
                let d = &factor * &a[rank][j];
                a[r][j] -= d;
            }
        }
        rank += 1;
    }
    rank
}

/// The constraint system `A c >= b` of `{c >= 0 : M c >= w}`: the `m` edge rows
/// followed by the `n` nonnegativity rows. Nonsingular bases are inverted
/// once and reused for every right-hand side.
struct CoverPolyhedron {
    n: usize,
    constraints: RatMatrix,
    bases: Vec<(Vec<usize>, RatMatrix)>,
}

impl CoverPolyhedron {
    fn new(m: &IntegerMatrix) -> Result<Self> {
        m.check_nonnegative()?;
        let n = m.cols();
        let mut constraints: RatMatrix = (0..m.rows())
            .map(|r| m.row(r).iter().cloned().map(BigRational::from_integer).collect())
            .collect();
        for i in 0..n {
            constraints.push(
                (0..n)
                    .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                    .collect(),
            );
        }
        let mut bases = Vec::new();
        if n == 0 {
            return Ok(CoverPolyhedron {
                n,
                constraints,
                bases,
            });
        }
        let total = constraints.len();
        let mut basis: Vec<usize> = (0..n).collect();
        loop {
            let square: RatMatrix = basis.iter().map(|&r| constraints[r].clone()).collect();
            if let Some(inv) = inverse(square) {
                bases.push((basis.clone(), inv));
            }
            if !next_combination(&mut basis, total) {
                break;
            }
        }
        Ok(CoverPolyhedron {
            n,
            constraints,
            bases,
        })
    }

    fn rhs(&self, w: &[u64]) -> Vec<BigRational> {
        w.iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .chain(std::iter::repeat_n(BigRational::zero(), self.n))
            .collect()
    }

    fn is_feasible(&self, rhs: &[BigRational], x: &[BigRational]) -> bool {
        self.constraints
            .iter()
            .zip(rhs)
            .all(|(row, b)| dot(row, x) >= *b)
    }

    fn vertices(&self, w: &[u64]) -> Vec<RationalPoint> {
        let rhs = self.rhs(w);
        let mut found: BTreeSet<Vec<BigRational>> = BTreeSet::new();
        for (basis, inv) in &self.bases {
            let b: Vec<BigRational> = basis.iter().map(|&r| rhs[r].clone()).collect();
            let x: Vec<BigRational> = inv.iter().map(|row| dot(row, &b)).collect();
            if self.is_feasible(&rhs, &x) {
                found.insert(x);
            }
        }
        found.into_iter().map(RationalPoint::new).collect()
    }

    fn is_vertex(&self, w: &[u64], point: &[BigRational]) -> bool {
        let rhs = self.rhs(w);
        if !self.is_feasible(&rhs, point) {
            return false;
        }
        let tight: RatMatrix = self
            .constraints
            .iter()
            .zip(&rhs)
            .filter(|(row, b)| dot(row, point) == **b)
            .map(|(row, _)| row.clone())
            .collect();
        rational_rank(tight) == self.n
    }
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

fn check_weights(m: &IntegerMatrix, w: &[u64]) -> Result<()> {
    if w.len() != m.rows() {
        return Err(Error::LengthMismatch {
            expected: m.rows(),
            got: w.len(),
        });
    }
    Ok(())
}

/// All vertices of `{c >= 0 : M c >= w}` in ascending lexicographic order.
pub fn enumerate_vertices(m: &IntegerMatrix, w: &[u64]) -> Result<Vec<RationalPoint>> {
    check_weights(m, w)?;
    Ok(CoverPolyhedron::new(m)?.vertices(w))
}

/// Whether `point` is a vertex of `{c >= 0 : M c >= w}`: feasible, with `n`
/// linearly independent tight constraints.
pub fn is_vertex(m: &IntegerMatrix, w: &[u64], point: &RationalPoint) -> Result<bool> {
    check_weights(m, w)?;
    if point.dim() != m.cols() {
        return Err(Error::LengthMismatch {
            expected: m.cols(),
            got: point.dim(),
        });
    }
    Ok(CoverPolyhedron::new(m)?.is_vertex(w, point.coords()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Integrality {
    Integral,
    Fractional(RationalPoint),
}

impl Integrality {
    pub fn is_integral(&self) -> bool {
        matches!(self, Integrality::Integral)
    }
}

pub fn is_integral_polyhedron(m: &IntegerMatrix, w: &[u64]) -> Result<Integrality> {
    let vertices = enumerate_vertices(m, w)?;
    Ok(match vertices.into_iter().find(|v| !v.is_integral()) {
        Some(v) => Integrality::Fractional(v),
        None => Integrality::Integral,
    })
}

/// Scans `w` over `{1..=w_bound}^m` in lexicographic order and returns the
/// first right-hand side whose cover polyhedron has a fractional vertex.
pub fn fractional_vertex_search(
    m: &IntegerMatrix,
    w_bound: u64,
) -> Result<Option<(Vec<u64>, RationalPoint)>> {
    let size = m.rows().min(m.cols());
    if size > TU_SIZE_CAP {
        return Err(Error::CapExceeded {
            size,
            cap: TU_SIZE_CAP,
        });
    }
    if w_bound < 1 {
        return Err(Error::InvalidArgument("weight bound must be at least 1".into()));
    }
    let poly = CoverPolyhedron::new(m)?;
    let mut w = vec![1u64; m.rows()];
    loop {
        if let Some(v) = poly.vertices(&w).into_iter().find(|v| !v.is_integral()) {
            return Ok(Some((w, v)));
        }
        if !next_in_box(&mut w, 1, w_bound) {
            return Ok(None);
        }
    }
}

/// Odometer over `{lo..=hi}^len`, last coordinate fastest (lexicographic).
pub(crate) fn next_in_box(v: &mut [u64], lo: u64, hi: u64) -> bool {
    for i in (0..v.len()).rev() {
        if v[i] < hi {
            v[i] += 1;
            return true;
        }
        v[i] = lo;
    }
    false
}
