//! Bihomogeneous polynomials in `R = k[x, y, z, w]` with `deg x = deg y = (1, 0)`
//! and `deg z = deg w = (0, 1)`.
//!
//! A polynomial of bidegree `(m, n)` is a dense `(m+1) x (n+1)` coefficient
//! grid; entry `(i, j)` multiplies `x^(m-i) y^i z^(n-j) w^j`. The grid is
//! stored row-major, so the flat index of `(i, j)` is `i*(n+1) + j`. This
//! monomial order is used by every matrix and file format in the crate.
//!
//! Bidegrees with a negative component are allowed; their graded piece is
//! zero-dimensional, so the only polynomial there is zero (with an empty
//! grid). This keeps shifted free modules and maps between them uniform.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::{format_rational, parse_rational, ExactMatrix, LinalgError, Rational};

/// A bidegree `(m, n)`. Components may be negative when used as a shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiDeg {
    pub m: i32,
    pub n: i32,
}

impl BiDeg {
    pub const ZERO: BiDeg = BiDeg { m: 0, n: 0 };

    pub const fn new(m: i32, n: i32) -> Self {
        BiDeg { m, n }
    }

    /// `dim R_(m,n)`: `(m+1)(n+1)` when both components are nonnegative, else 0.
    pub fn dim(self) -> usize {
        if self.m < 0 || self.n < 0 {
            0
        } else {
            ((self.m + 1) * (self.n + 1)) as usize
        }
    }

    pub fn is_nonneg(self) -> bool {
        self.m >= 0 && self.n >= 0
    }

    /// Componentwise `self <= other`.
    pub fn le(self, other: BiDeg) -> bool {
        self.m <= other.m && self.n <= other.n
    }

    /// All bidegrees `(m, n)` with `0 <= m <= self.m`, `0 <= n <= self.n`, `m` outer.
    pub fn cells(self) -> impl Iterator<Item = BiDeg> {
        (0..=self.m).flat_map(move |m| (0..=self.n).map(move |n| BiDeg::new(m, n)))
    }
}

impl Add for BiDeg {
    type Output = BiDeg;
    fn add(self, o: BiDeg) -> BiDeg {
        BiDeg::new(self.m + o.m, self.n + o.n)
    }
}

impl Sub for BiDeg {
    type Output = BiDeg;
    fn sub(self, o: BiDeg) -> BiDeg {
        BiDeg::new(self.m - o.m, self.n - o.n)
    }
}

impl Neg for BiDeg {
    type Output = BiDeg;
    fn neg(self) -> BiDeg {
        BiDeg::new(-self.m, -self.n)
    }
}

impl fmt::Display for BiDeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("coefficient grid does not match bidegree {deg}: expected {expected} entries, found {found}")]
    DimensionMismatch {
        deg: BiDeg,
        expected: usize,
        found: usize,
    },
    #[error("wrong bidegree: expected {expected}, found {found}")]
    WrongBidegree { expected: String, found: BiDeg },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A bihomogeneous polynomial of a fixed bidegree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiHomPoly {
    deg: BiDeg,
    coeffs: Vec<Rational>,
}

/// Monomial exponents `(i, j)` of bidegree `deg` in canonical order: `i` (the
/// power of y) outer, `j` (the power of w) inner.
pub fn monomials(deg: BiDeg) -> impl Iterator<Item = (usize, usize)> {
    let (m, n) = if deg.is_nonneg() {
        (deg.m as usize, deg.n as usize)
    } else {
        (0, 0)
    };
    let count = deg.dim();
    (0..count).map(move |k| (k / (n + 1), k % (n + 1))).take_while(move |&(i, _)| i <= m)
}

impl BiHomPoly {
    /// Builds a polynomial from its `(m+1) x (n+1)` coefficient grid.
    pub fn make(deg: BiDeg, grid: Vec<Vec<Rational>>) -> Result<Self, PolyError> {
        let rows = if deg.is_nonneg() { deg.m as usize + 1 } else { 0 };
        let cols = if deg.is_nonneg() { deg.n as usize + 1 } else { 0 };
        let found: usize = grid.iter().map(Vec::len).sum();
        if grid.len() != rows || grid.iter().any(|r| r.len() != cols) {
            return Err(PolyError::DimensionMismatch {
                deg,
                expected: deg.dim(),
                found,
            });
        }
        Ok(BiHomPoly {
            deg,
            coeffs: grid.into_iter().flatten().collect(),
        })
    }

    /// Builds a polynomial from its coefficient vector in canonical order.
    pub fn from_vector(deg: BiDeg, coeffs: Vec<Rational>) -> Result<Self, PolyError> {
        if coeffs.len() != deg.dim() {
            return Err(PolyError::DimensionMismatch {
                deg,
                expected: deg.dim(),
                found: coeffs.len(),
            });
        }
        Ok(BiHomPoly { deg, coeffs })
    }

    pub fn zero(deg: BiDeg) -> Self {
        BiHomPoly {
            deg,
            coeffs: vec![Rational::zero(); deg.dim()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        BiHomPoly {
            deg: BiDeg::ZERO,
            coeffs: vec![c],
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `c * x^(m-i) y^i z^(n-j) w^j`.
    pub fn monomial(deg: BiDeg, i: usize, j: usize, c: Rational) -> Self {
        let mut p = Self::zero(deg);
        let idx = p.index(i, j);
        p.coeffs[idx] = c;
        p
    }

    pub fn x() -> Self {
        Self::monomial(BiDeg::new(1, 0), 0, 0, Rational::one())
    }

    pub fn y() -> Self {
        Self::monomial(BiDeg::new(1, 0), 1, 0, Rational::one())
    }

    pub fn z() -> Self {
        Self::monomial(BiDeg::new(0, 1), 0, 0, Rational::one())
    }

    pub fn w() -> Self {
        Self::monomial(BiDeg::new(0, 1), 0, 1, Rational::one())
    }

    /// Bidegree-(2,1) form `a x^2z + b xyz + c y^2z + d x^2w + e xyw + f y^2w`
    /// from the coefficients `[a, b, c, d, e, f]`.
    pub fn from_abcdef(c: &[Rational; 6]) -> Self {
        let [a, b, cc, d, e, f] = c.clone();
        // grid order: (i,j) = (0,0) a, (0,1) d, (1,0) b, (1,1) e, (2,0) c, (2,1) f
        BiHomPoly {
            deg: BiDeg::new(2, 1),
            coeffs: vec![a, d, b, e, cc, f],
        }
    }

    /// Inverse of [`BiHomPoly::from_abcdef`]. Fails unless the bidegree is (2,1).
    pub fn to_abcdef(&self) -> Result<[Rational; 6], PolyError> {
        self.expect_deg(BiDeg::new(2, 1))?;
        let c = &self.coeffs;
        Ok([
            c[0].clone(),
            c[2].clone(),
            c[4].clone(),
            c[1].clone(),
            c[3].clone(),
            c[5].clone(),
        ])
    }

    pub fn deg(&self) -> BiDeg {
        self.deg
    }

    fn index(&self, i: usize, j: usize) -> usize {
        i * (self.deg.n as usize + 1) + j
    }

    /// Coefficient of `x^(m-i) y^i z^(n-j) w^j`.
    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        &self.coeffs[self.index(i, j)]
    }

    /// Coefficients in canonical monomial order; length `dim R_deg`.
    pub fn coeff_vector(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeff_vector(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero polynomial of bidegree (0,0).
    pub fn is_nonzero_constant(&self) -> bool {
        self.deg == BiDeg::ZERO && !self.is_zero()
    }

    fn expect_deg(&self, deg: BiDeg) -> Result<(), PolyError> {
        if self.deg != deg {
            return Err(PolyError::WrongBidegree {
                expected: deg.to_string(),
                found: self.deg,
            });
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BiHomPoly {
            deg: self.deg,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Sum of two polynomials of the same bidegree. Panics on a bidegree mismatch.
    pub fn add(&self, other: &BiHomPoly) -> BiHomPoly {
        assert_eq!(self.deg, other.deg, "adding polynomials of different bidegrees");
        BiHomPoly {
            deg: self.deg,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &BiHomPoly) -> BiHomPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> BiHomPoly {
        BiHomPoly {
            deg: self.deg,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Product; the bidegree is `deg(self) + deg(other)`.
    pub fn mul(&self, other: &BiHomPoly) -> BiHomPoly {
        let deg = self.deg + other.deg;
        let mut out = BiHomPoly::zero(deg);
        if out.coeffs.is_empty() {
            return out;
        }
        let on = deg.n as usize + 1;
        for (i1, j1) in monomials(self.deg) {
            let a = self.coeff(i1, j1);
            if a.is_zero() {
                continue;
            }
            for (i2, j2) in monomials(other.deg) {
                let b = other.coeff(i2, j2);
                if !b.is_zero() {
                    out.coeffs[(i1 + i2) * on + j1 + j2] += a * b;
                }
            }
        }
        out
    }

    pub fn eval(&self, x: &Rational, y: &Rational, z: &Rational, w: &Rational) -> Rational {
        let (m, n) = (self.deg.m.max(0) as usize, self.deg.n.max(0) as usize);
        let pow = |b: &Rational, e: usize| -> Rational { num_traits::pow(b.clone(), e) };
        monomials(self.deg)
            .filter(|&(i, j)| !self.coeff(i, j).is_zero())
            .map(|(i, j)| {
                self.coeff(i, j) * pow(x, m - i) * pow(y, i) * pow(z, n - j) * pow(w, j)
            })
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    /// Matrix of multiplication by `self` from `R_src` to `R_(src + deg self)`:
    /// column `k` is the coefficient vector of `self` times the `k`-th monomial.
    pub fn mult_matrix(&self, src: BiDeg) -> ExactMatrix {
        let target = src + self.deg;
        let rows = target.dim();
        let cols = src.dim();
        let mut m = ExactMatrix::zeros(rows, cols);
        if rows == 0 || cols == 0 {
            return m;
        }
        let tn = target.n as usize + 1;
        for (k, (i, j)) in monomials(src).enumerate() {
            for (a, b) in monomials(self.deg) {
                let c = self.coeff(a, b);
                if !c.is_zero() {
                    m.set((a + i) * tn + b + j, k, c.clone());
                }
            }
        }
        m
    }

    /// Writes a polynomial of bidegree `(m, 1)` as `A z + B w`, returning `(A, B)`.
    pub fn split_zw(&self) -> Result<(BiHomPoly, BiHomPoly), PolyError> {
        if self.deg.n != 1 || self.deg.m < 0 {
            return Err(PolyError::WrongBidegree {
                expected: "(m,1)".into(),
                found: self.deg,
            });
        }
        let d = BiDeg::new(self.deg.m, 0);
        let slice = |j| (0..=self.deg.m as usize).map(|i| self.coeff(i, j).clone()).collect();
        Ok((
            BiHomPoly { deg: d, coeffs: slice(0) },
            BiHomPoly { deg: d, coeffs: slice(1) },
        ))
    }

    /// Writes a polynomial of bidegree `(2, n)` as `C x^2 + D xy + E y^2`,
    /// returning `(C, D, E)`.
    pub fn split_xy(&self) -> Result<(BiHomPoly, BiHomPoly, BiHomPoly), PolyError> {
        if self.deg.m != 2 || self.deg.n < 0 {
            return Err(PolyError::WrongBidegree {
                expected: "(2,n)".into(),
                found: self.deg,
            });
        }
        let [c, d, e] = self.x_slices_array::<3>();
        Ok((c, d, e))
    }

    /// The `x^(m-i) y^i` slices as polynomials in z, w.
    fn x_slices_array<const K: usize>(&self) -> [BiHomPoly; K] {
        let d = BiDeg::new(0, self.deg.n);
        let w = self.deg.n as usize + 1;
        std::array::from_fn(|i| BiHomPoly {
            deg: d,
            coeffs: self.coeffs[i * w..(i + 1) * w].to_vec(),
        })
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn divide_exact(&self, d: &BiHomPoly) -> Result<Option<BiHomPoly>, PolyError> {
        if d.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        let qdeg = self.deg - d.deg;
        if !qdeg.is_nonneg() {
            return Ok(None);
        }
        let m = d.mult_matrix(qdeg);
        Ok(m.solve(&self.coeffs)?
            .map(|q| BiHomPoly { deg: qdeg, coeffs: q }))
    }

    /// Parses an expression such as `x^2*z - 3/2*x*y*w + y^2*w`. All terms
    /// must share one bidegree; use [`BiHomPoly::parse_in`] for zero.
    pub fn parse(s: &str) -> Result<Self, PolyError> {
        Self::parse_terms(s, None)
    }

    /// Like [`BiHomPoly::parse`], with the bidegree given (so `"0"` is accepted).
    pub fn parse_in(deg: BiDeg, s: &str) -> Result<Self, PolyError> {
        Self::parse_terms(s, Some(deg))
    }

    fn parse_terms(s: &str, deg: Option<BiDeg>) -> Result<Self, PolyError> {
        let err = |msg: &str| PolyError::Parse(format!("{msg} in `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        // split into signed terms
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (k, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && !(k > 0 && compact[..k].ends_with('^')) {
                if !cur.is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                } else if k > 0 {
                    return Err(err("dangling sign"));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(err("trailing sign"));
        }
        terms.push((neg, cur));

        let mut parsed: Vec<(Rational, [u32; 4])> = Vec::new();
        for (neg, term) in terms {
            let mut c = Rational::one();
            let mut exps = [0u32; 4];
            for factor in term.split('*') {
                let (base, e) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u32>().map_err(|_| err("bad exponent"))?),
                    None => (factor, 1),
                };
                match base {
                    "x" => exps[0] += e,
                    "y" => exps[1] += e,
                    "z" => exps[2] += e,
                    "w" => exps[3] += e,
                    num => {
                        let q = parse_rational(num)
                            .or_else(|_| {
                                // accept non-canonical fractions inside expressions
                                let (a, b) = num.split_once('/').ok_or(())?;
                                let a: num_bigint::BigInt = a.parse().map_err(|_| ())?;
                                let b: num_bigint::BigInt = b.parse().map_err(|_| ())?;
                                if b.is_zero() {
                                    return Err(());
                                }
                                Ok(Rational::new(a, b))
                            })
                            .map_err(|_| err(&format!("bad factor `{num}`")))?;
                        c *= num_traits::pow(q, e as usize);
                    }
                }
            }
            if neg {
                c = -c;
            }
            parsed.push((c, exps));
        }
        let nonzero: Vec<_> = parsed.iter().filter(|(c, _)| !c.is_zero()).collect();
        let deg = match (deg, nonzero.first()) {
            (Some(d), _) => d,
            (None, Some((_, e))) => BiDeg::new((e[0] + e[1]) as i32, (e[2] + e[3]) as i32),
            (None, None) => return Err(err("zero polynomial needs an explicit bidegree")),
        };
        let mut p = BiHomPoly::zero(deg);
        for (c, e) in parsed {
            if c.is_zero() {
                continue;
            }
            if BiDeg::new((e[0] + e[1]) as i32, (e[2] + e[3]) as i32) != deg {
                return Err(err("terms of different bidegrees"));
            }
            let idx = p.index(e[1] as usize, e[3] as usize);
            p.coeffs[idx] += c;
        }
        Ok(p)
    }
}

impl FromStr for BiHomPoly {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, PolyError> {
        BiHomPoly::parse(s)
    }
}

fn write_var(out: &mut Vec<String>, v: &str, e: usize) {
    match e {
        0 => {}
        1 => out.push(v.to_string()),
        _ => out.push(format!("{v}^{e}")),
    }
}

impl fmt::Display for BiHomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, n) = (self.deg.m.max(0) as usize, self.deg.n.max(0) as usize);
        let mut first = true;
        for (i, j) in monomials(self.deg) {
            let c = self.coeff(i, j);
            if c.is_zero() {
                continue;
            }
            let mut vars = Vec::new();
            write_var(&mut vars, "x", m - i);
            write_var(&mut vars, "y", i);
            write_var(&mut vars, "z", n - j);
            write_var(&mut vars, "w", j);
            let mag = c.abs();
            let mut term = Vec::new();
            if !mag.is_one() || vars.is_empty() {
                term.push(format_rational(&mag));
            }
            term.extend(vars);
            let body = term.join("*");
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiHomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.deg, self)
    }
}

/// Finds a common linear factor `l = a x + b y` of polynomials of bidegree
/// `(1, n)`. Each entry is written `x u_k + y v_k`; a factor exists iff some
/// `(a, b) != 0` satisfies `b u_k = a v_k` for all `k`. Returns `l`, scaled
/// so its first nonzero coefficient is 1, and the quotients `q_k` with
/// `entry_k = l q_k`. Returns `None` for all-zero input or when no common
/// linear factor exists.
pub fn linear_content_xy(
    entries: &[BiHomPoly],
) -> Result<Option<(BiHomPoly, Vec<BiHomPoly>)>, PolyError> {
    let Some(first) = entries.first() else {
        return Ok(None);
    };
    let deg = first.deg;
    for e in entries {
        if e.deg != deg || deg.m != 1 || deg.n < 0 {
            return Err(PolyError::WrongBidegree {
                expected: "(1,n), all equal".into(),
                found: e.deg,
            });
        }
    }
    if entries.iter().all(BiHomPoly::is_zero) {
        return Ok(None);
    }
    let slices: Vec<[BiHomPoly; 2]> = entries.iter().map(|e| e.x_slices_array::<2>()).collect();
    // unknowns (a, b): row for each coefficient of -a v_k + b u_k = 0
    let mut rows = Vec::new();
    for [u, v] in &slices {
        for (cu, cv) in u.coeffs.iter().zip(&v.coeffs) {
            rows.push(vec![-cv.clone(), cu.clone()]);
        }
    }
    let m = ExactMatrix::from_rows(rows)?;
    let kernel = m.kernel_basis();
    if kernel.len() != 1 {
        return Ok(None);
    }
    let (a, b) = (kernel[0][0].clone(), kernel[0][1].clone());
    let lin = BiHomPoly {
        deg: BiDeg::new(1, 0),
        coeffs: vec![a.clone(), b.clone()],
    };
    let quotients = slices
        .into_iter()
        .map(|[u, v]| if !a.is_zero() { u.scale(&a.recip()) } else { v.scale(&b.recip()) })
        .collect();
    Ok(Some((lin, quotients)))
}

/// Three forms of bidegree (2,1): the input `p_0, p_1, p_2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct InputTriple {
    polys: [BiHomPoly; 3],
}

impl InputTriple {
    pub const DEG: BiDeg = BiDeg::new(2, 1);

    pub fn new(p0: BiHomPoly, p1: BiHomPoly, p2: BiHomPoly) -> Result<Self, PolyError> {
        for p in [&p0, &p1, &p2] {
            p.expect_deg(Self::DEG)?;
        }
        Ok(InputTriple {
            polys: [p0, p1, p2],
        })
    }

    /// From three rows of coefficients `[a, b, c, d, e, f]`.
    pub fn from_abcdef(rows: &[[Rational; 6]; 3]) -> Self {
        InputTriple {
            polys: std::array::from_fn(|i| BiHomPoly::from_abcdef(&rows[i])),
        }
    }

    pub fn from_i64_rows(rows: [[i64; 6]; 3]) -> Self {
        let rows = rows.map(|r| r.map(crate::exactnum::rat));
        Self::from_abcdef(&rows)
    }

    pub fn parse(p0: &str, p1: &str, p2: &str) -> Result<Self, PolyError> {
        Self::new(
            BiHomPoly::parse_in(Self::DEG, p0)?,
            BiHomPoly::parse_in(Self::DEG, p1)?,
            BiHomPoly::parse_in(Self::DEG, p2)?,
        )
    }

    pub fn to_abcdef(&self) -> [[Rational; 6]; 3] {
        std::array::from_fn(|i| self.polys[i].to_abcdef().expect("bidegree (2,1)"))
    }

    pub fn polys(&self) -> &[BiHomPoly; 3] {
        &self.polys
    }

    pub fn get(&self, i: usize) -> &BiHomPoly {
        &self.polys[i]
    }

    /// `q_i = sum_j M[i][j] p_j` for a 3x3 scalar matrix `M`.
    pub fn transform(&self, m: &ExactMatrix) -> Self {
        assert!(m.rows() == 3 && m.cols() == 3, "basis change must be 3x3");
        InputTriple {
            polys: std::array::from_fn(|i| {
                (0..3).fold(BiHomPoly::zero(Self::DEG), |acc, j| {
                    acc.add(&self.polys[j].scale(m.get(i, j)))
                })
            }),
        }
    }

    /// Rank of the 3x6 coefficient matrix.
    pub fn span_rank(&self) -> usize {
        let rows = self.polys.iter().map(|p| p.coeffs.clone()).collect();
        ExactMatrix::from_rows(rows).expect("equal lengths").rank()
    }
}

impl fmt::Display for InputTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.polys.iter().enumerate() {
            writeln!(f, "p{i} = {p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for InputTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InputTriple({}; {}; {})", self.polys[0], self.polys[1], self.polys[2])
    }
}
