//! Exact rational scalars and fraction-free linear algebra.
//!
//! Every dimension computed anywhere in this crate (syzygy spaces, ideal
//! pieces, ranks of differentials) ends up as a rank or kernel of an
//! [`ExactMatrix`]. Matrices are stored with [`Rational`] entries, but all
//! elimination happens on integer rows: each row is first scaled by the lcm of
//! its denominators, and row operations are performed without division,
//! keeping every row primitive (content 1). Pivots are always the first
//! nonzero entry in the current column, so outputs are reproducible.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("`{0}` is not in lowest terms with a positive denominator")]
    NotCanonical(String),
}

/// Parses an integer (`-7`) or a fraction (`3/4`). Fractions must already be
/// in lowest terms with a positive denominator, so that every value has
/// exactly one spelling.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let bad = || ParseRationalError::Invalid(s.to_string());
    let int = |t: &str| -> Result<BigInt, ParseRationalError> {
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s)?)),
        Some((n, d)) => {
            let n = int(n)?;
            let d = int(d)?;
            if d.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            if !d.is_positive() || !n.gcd(&d).is_one() || d.is_one() {
                return Err(ParseRationalError::NotCanonical(s.to_string()));
            }
            Ok(Rational::new_raw(n, d))
        }
    }
}

/// Canonical text form: `n` for integers, `n/d` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, entries }
    }

    /// Builds a matrix from rows of equal length. An empty row list gives a 0x0 matrix.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(ExactMatrix {
            rows: n,
            cols,
            entries,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect();
        Self::from_rows(rows).expect("ragged integer rows")
    }

    /// Builds a `len x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(len: usize, columns: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        for c in columns {
            if c.len() != len {
                return Err(LinalgError::DimensionMismatch {
                    expected: len,
                    found: c.len(),
                });
            }
        }
        Ok(Self::from_fn(len, columns.len(), |i, j| columns[j][i].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let cols = self.cols + other.cols;
        Ok(Self::from_fn(self.rows, cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    /// Horizontal concatenation of several blocks with the same row count.
    pub fn hcat(rows: usize, blocks: &[ExactMatrix]) -> Result<ExactMatrix, LinalgError> {
        let mut out = ExactMatrix::zeros(rows, 0);
        for b in blocks {
            out = out.hstack(b)?;
        }
        Ok(out)
    }

    /// Vertical concatenation `[self; other]`.
    pub fn vstack(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(ExactMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let (rows, _) = self.integer_rows(&[]);
        Echelon::reduce(rows, self.cols, false).pivots.len()
    }

    /// Rank of the reduction modulo [`PRIME`], a lower bound for the rank
    /// over the rationals. `None` if some denominator is divisible by the
    /// prime.
    pub fn rank_mod_prime(&self) -> Option<usize> {
        let p = BigInt::from(PRIME);
        let mut a = Vec::with_capacity(self.entries.len());
        for q in &self.entries {
            if q.is_zero() {
                a.push(0);
                continue;
            }
            let num = mod_prime(q.numer(), &p);
            let den = mod_prime(q.denom(), &p);
            if den == 0 {
                return None;
            }
            a.push(mul_mod(num, pow_mod(den, PRIME - 2)));
        }
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for c in 0..cols {
            let Some(r) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
                continue;
            };
            for k in 0..cols {
                a.swap(rank * cols + k, r * cols + k);
            }
            let inv = pow_mod(a[rank * cols + c], PRIME - 2);
            for r in rank + 1..rows {
                let f = a[r * cols + c];
                if f == 0 {
                    continue;
                }
                let f = mul_mod(f, inv);
                for k in c..cols {
                    let v = mul_mod(f, a[rank * cols + k]);
                    a[r * cols + k] = (a[r * cols + k] + PRIME - v) % PRIME;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        Some(rank)
    }

    /// Basis of the right null space, one column per free variable in
    /// increasing column order. Each vector is scaled so that its first
    /// nonzero coordinate is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let n = self.cols;
        if self.rows == 0 {
            return (0..n).map(|j| unit(n, j)).collect();
        }
        let (rows, _) = self.integer_rows(&[]);
        let ech = Echelon::reduce(rows, n, true);
        let mut is_pivot = vec![false; n];
        for &c in &ech.pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(n - ech.pivots.len());
        for free in (0..n).filter(|&j| !is_pivot[j]) {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (k, &pc) in ech.pivots.iter().enumerate() {
                let row = &ech.rows[k];
                if !row[free].is_zero() {
                    v[pc] = -Rational::new(row[free].clone(), row[pc].clone());
                }
            }
            normalize_leading_one(&mut v);
            basis.push(v);
        }
        basis
    }

    /// Exact determinant via Bareiss elimination.
    pub fn det(&self) -> Result<Rational, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let (mut a, scales) = self.integer_rows(&[]);
        let mut sign = false;
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let mut det = Rational::from_integer(prev);
        if sign {
            det = -det;
        }
        let scale: BigInt = scales.iter().product();
        Ok(det / Rational::from_integer(scale))
    }

    /// Some `x` with `self * x = v`, free variables set to zero; `None` if
    /// the system is inconsistent.
    pub fn solve(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
        let mut out = self.solve_many(std::slice::from_ref(&v.to_vec()))?;
        Ok(out.pop().flatten())
    }

    /// Solves `self * x = v` for several right-hand sides with a single
    /// elimination.
    pub fn solve_many(&self, rhs: &[Vec<Rational>]) -> Result<Vec<Option<Vec<Rational>>>, LinalgError> {
        for v in rhs {
            if v.len() != self.rows {
                return Err(LinalgError::DimensionMismatch {
                    expected: self.rows,
                    found: v.len(),
                });
            }
        }
        let n = self.cols;
        if self.rows == 0 {
            return Ok(rhs.iter().map(|_| Some(vec![Rational::zero(); n])).collect());
        }
        let (rows, _) = self.integer_rows(rhs);
        let ech = Echelon::reduce(rows, n, true);
        let rank = ech.pivots.len();
        let out = (0..rhs.len())
            .map(|r| {
                let col = n + r;
                if ech.rows[rank..].iter().any(|row| !row[col].is_zero()) {
                    return None;
                }
                let mut x = vec![Rational::zero(); n];
                for (k, &pc) in ech.pivots.iter().enumerate() {
                    let row = &ech.rows[k];
                    if !row[col].is_zero() {
                        x[pc] = Rational::new(row[col].clone(), row[pc].clone());
                    }
                }
                Some(x)
            })
            .collect();
        Ok(out)
    }

    /// Rows scaled to integers (optionally augmented by extra columns), and
    /// the scale factor applied to each row.
    fn integer_rows(&self, augment: &[Vec<Rational>]) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut rows = Vec::with_capacity(self.rows);
        let mut scales = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row: Vec<&Rational> = self
                .row(i)
                .iter()
                .chain(augment.iter().map(|v| &v[i]))
                .collect();
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let ints = row
                .iter()
                .map(|q| {
                    if q.is_zero() {
                        BigInt::zero()
                    } else {
                        q.numer() * (&lcm / q.denom())
                    }
                })
                .collect();
            rows.push(ints);
            scales.push(lcm);
        }
        (rows, scales)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

fn unit(n: usize, j: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[j] = Rational::one();
    v
}

/// Divides `v` by its first nonzero coordinate (no-op for the zero vector).
pub fn normalize_leading_one(v: &mut [Rational]) {
    if let Some(lead) = v.iter().find(|q| !q.is_zero()).cloned() {
        if !lead.is_one() {
            for q in v.iter_mut() {
                *q = &*q / &lead;
            }
        }
    }
}

/// Row echelon form over the integers with primitive rows.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    /// Eliminates using pivots from the first `pivot_cols` columns only (the
    /// remaining columns are carried along as an augmentation). With
    /// `reduce_above` the result is reduced (Gauss-Jordan) on the pivot
    /// columns; otherwise only entries below each pivot are cleared.
    fn reduce(mut rows: Vec<Vec<BigInt>>, pivot_cols: usize, reduce_above: bool) -> Self {
        let nrows = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols {
            if r == nrows {
                break;
            }
            let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            make_primitive(&mut rows[r][c..]);
            if rows[r][c].is_negative() {
                for x in rows[r][c..].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            let (before, rest) = rows.split_at_mut(r);
            let (pivot_row, after) = rest.split_first_mut().expect("pivot row");
            // rows below have zeros left of c; rows above may not
            for row in after.iter_mut() {
                eliminate_with(row, pivot_row, c, c, width);
            }
            if reduce_above {
                for row in before.iter_mut() {
                    eliminate_with(row, pivot_row, c, 0, width);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { rows, pivots }
    }
}

/// `row <- (piv * row - row[c] * pivot_row) / content`, touching columns `start..width`.
fn eliminate_with(row: &mut [BigInt], pivot_row: &[BigInt], c: usize, start: usize, width: usize) {
    if row[c].is_zero() {
        return;
    }
    let piv = &pivot_row[c];
    let g = piv.gcd(&row[c]);
    let mul_row = piv / &g;
    let mul_piv = &row[c] / &g;
    for j in start..width {
        let scaled = if row[j].is_zero() || mul_row.is_one() {
            std::mem::take(&mut row[j])
        } else {
            &row[j] * &mul_row
        };
        row[j] = if pivot_row[j].is_zero() {
            scaled
        } else {
            scaled - &pivot_row[j] * &mul_piv
        };
    }
    make_primitive(&mut row[start..width]);
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x = &*x / &g;
        }
    }
}

/// The Mersenne prime `2^31 - 1`.
pub const PRIME: u64 = (1 << 31) - 1;

fn mod_prime(v: &BigInt, p: &BigInt) -> u64 {
    let r = ((v % p) + p) % p;
    u64::try_from(r).expect("reduced below the prime")
}

fn mul_mod(a: u64, b: u64) -> u64 {
    a * b % PRIME
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b);
        }
        b = mul_mod(b, b);
        e >>= 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(rows)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::identity(2).rank(), 2);
        assert_eq!(ExactMatrix::zeros(3, 5).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4], &[3, 6]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(ExactMatrix::identity(3).kernel_basis().is_empty());
        assert_eq!(m(&[&[1, 1]]).kernel_basis(), vec![ints(&[1, -1])]);
        let k = ExactMatrix::zeros(2, 3).kernel_basis();
        assert_eq!(k, vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1])]);
    }

    #[test]
    fn det_examples() {
        assert_eq!(ExactMatrix::identity(4).det().unwrap(), rat(1));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), rat(-1));
        assert_eq!(m(&[&[2, 0], &[0, 3]]).det().unwrap(), rat(6));
        assert_eq!(
            m(&[&[1, 2]]).det(),
            Err(LinalgError::NonSquare { rows: 1, cols: 2 })
        );
    }

    #[test]
    fn det_with_fractions() {
        let a = ExactMatrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(1, 4), ratio(1, 5)],
        ])
        .unwrap();
        // 1/10 - 1/12 = 1/60
        assert_eq!(a.det().unwrap(), ratio(1, 60));
    }

    #[test]
    fn solve_examples() {
        let v = ints(&[3, -1, 4]);
        assert_eq!(ExactMatrix::identity(3).solve(&v).unwrap(), Some(v.clone()));
        assert_eq!(m(&[&[1, 1]]).solve(&ints(&[2])).unwrap(), Some(ints(&[2, 0])));
        assert_eq!(m(&[&[1], &[1]]).solve(&ints(&[1, 2])).unwrap(), None);
        assert!(matches!(
            m(&[&[1, 1]]).solve(&ints(&[1, 2])),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn parse_and_format_rationals() {
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert_eq!(parse_rational("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("-3/4").unwrap(), ratio(-3, 4));
        assert!(parse_rational("2/4").is_err());
        assert!(parse_rational("3/-4").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("4/1").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(format_rational(&ratio(-6, 8)), "-3/4");
        assert_eq!(format_rational(&rat(12)), "12");
    }

    fn small_matrix() -> impl Strategy<Value = ExactMatrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                ExactMatrix::new(r, c, v.into_iter().map(rat).collect()).unwrap()
            })
        })
    }

    fn square_pair() -> impl Strategy<Value = (ExactMatrix, ExactMatrix)> {
        (1usize..6).prop_flat_map(|n| {
            let entries = || proptest::collection::vec(-3i64..=3, n * n);
            (entries(), entries()).prop_map(move |(a, b)| {
                let m = |v: Vec<i64>| ExactMatrix::new(n, n, v.into_iter().map(rat).collect()).unwrap();
                (m(a), m(b))
            })
        })
    }

    #[test]
    fn modular_rank_can_drop() {
        let a = m(&[&[PRIME as i64, 0], &[0, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.rank_mod_prime(), Some(1));
        let b = ExactMatrix::from_rows(vec![vec![ratio(1, PRIME as i64)]]).unwrap();
        assert_eq!(b.rank_mod_prime(), None);
    }

    proptest! {
        #[test]
        fn modular_rank_is_a_lower_bound(a in small_matrix()) {
            let r = a.rank_mod_prime().unwrap();
            prop_assert!(r <= a.rank());
            prop_assert_eq!(r, a.rank());
        }

        #[test]
        fn rank_is_transpose_invariant(a in small_matrix()) {
            prop_assert_eq!(a.rank(), a.transpose().rank());
        }

        #[test]
        fn rank_nullity(a in small_matrix()) {
            prop_assert_eq!(a.rank() + a.kernel_basis().len(), a.cols());
        }

        #[test]
        fn kernel_vectors_are_independent_null_vectors(a in small_matrix()) {
            let k = a.kernel_basis();
            for v in &k {
                prop_assert!(a.mul_vec(v).unwrap().iter().all(Zero::is_zero));
                prop_assert!(v.iter().find(|q| !q.is_zero()).unwrap().is_one());
            }
            if !k.is_empty() {
                prop_assert_eq!(ExactMatrix::from_columns(a.cols(), &k).unwrap().rank(), k.len());
            }
        }

        #[test]
        fn solve_result_satisfies_system(a in small_matrix(), seed in proptest::collection::vec(-3i64..=3, 6)) {
            let x0: Vec<Rational> = seed.iter().take(a.cols()).map(|&v| rat(v)).collect();
            prop_assume!(x0.len() == a.cols());
            let b = a.mul_vec(&x0).unwrap();
            let x = a.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(a.mul_vec(&x).unwrap(), b);
        }

        #[test]
        fn det_matches_product_rule((a, b) in square_pair()) {
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
        }

        #[test]
        fn det_zero_iff_rank_deficient((a, _) in square_pair()) {
            prop_assert_eq!(a.det().unwrap().is_zero(), a.rank() < a.rows());
        }

        #[test]
        fn addition_is_exact(a in -1000i64..1000, b in 1i64..50, c in -1000i64..1000, d in 1i64..50) {
            let x = ratio(a, b);
            let y = ratio(c, d);
            prop_assert_eq!(&(&x + &y) - &y, x);
        }
    }
}
