//! The resultant of three bidegree-(2,1) forms and the
//! degenerate / generic / non-generic trichotomy.
//!
//! The resultant is the determinant of a 4x4 Bezout-style matrix. Setting
//! `y = w = 1` gives affine polynomials `P_i(x, z)`; the matrix `B` with rows
//! `P_i(x,z)`, `P_i(X,z)`, `P_i(X,Z)` has a determinant divisible by
//! `(x - X)(z - Z)`, and the coefficients of the quotient in the monomials
//! `{1, x, z, xz} x {1, X, X^2, X^3}` form the matrix.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bipoly::{BiHomPoly, InputTriple, PolyError};
use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, Rational};
use crate::syzygy::syz_dim;

/// Exponent bounds `(x, z, X, Z)` of every intermediate polynomial.
const CAPS: [usize; 4] = [2, 2, 4, 1];
const STRIDE: [usize; 4] = [
    (CAPS[1] + 1) * (CAPS[2] + 1) * (CAPS[3] + 1),
    (CAPS[2] + 1) * (CAPS[3] + 1),
    CAPS[3] + 1,
    1,
];
const SIZE: usize = (CAPS[0] + 1) * STRIDE[0];

/// Dense polynomial in `x, z, X` with an auxiliary variable `Z`, with
/// exponents bounded by `x <= 2, z <= 2, X <= 4, Z <= 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct AffinePoly3 {
    coeffs: Vec<Rational>,
}

/// Variable index in an [`AffinePoly3`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X0 = 0,
    Z0 = 1,
    X1 = 2,
    Z1 = 3,
}

fn idx(e: [usize; 4]) -> usize {
    e.iter().zip(STRIDE).map(|(a, s)| a * s).sum()
}

fn exps(mut k: usize) -> [usize; 4] {
    let mut e = [0; 4];
    for v in 0..4 {
        e[v] = k / STRIDE[v];
        k %= STRIDE[v];
    }
    e
}

impl AffinePoly3 {
    pub fn zero() -> Self {
        AffinePoly3 {
            coeffs: vec![Rational::zero(); SIZE],
        }
    }

    pub fn coeff(&self, e: [usize; 4]) -> &Rational {
        &self.coeffs[idx(e)]
    }

    fn add_term(&mut self, e: [usize; 4], c: Rational) -> Result<()> {
        if e.iter().zip(CAPS).any(|(a, cap)| *a > cap) {
            return Err(Error::InternalInvariantViolation(format!(
                "exponent {e:?} exceeds the bounds {CAPS:?}"
            )));
        }
        self.coeffs[idx(e)] += c;
        Ok(())
    }

    fn terms(&self) -> impl Iterator<Item = ([usize; 4], &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (exps(k), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Largest exponent of `v` among nonzero terms (0 for the zero polynomial).
    pub fn degree_in(&self, v: Var) -> usize {
        self.terms().map(|(e, _)| e[v as usize]).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        AffinePoly3 {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        AffinePoly3 {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(std::array::from_fn(|v| e1[v] + e2[v]), c1 * c2)?;
            }
        }
        Ok(out)
    }

    /// Exact division by `(a - b)` where `a, b` are two of the variables:
    /// synthetic division in `a` at the root `b`. Fails unless the remainder
    /// vanishes.
    pub fn divide_by_difference(&self, a: Var, b: Var) -> Result<Self> {
        let (a, b) = (a as usize, b as usize);
        let top = CAPS[a];
        // slices[k] = coefficient of a^k, a polynomial in the other variables
        let mut slices = vec![Self::zero(); top + 1];
        for (e, c) in self.terms() {
            let mut rest = e;
            rest[a] = 0;
            slices[e[a]].coeffs[idx(rest)] = c.clone();
        }
        let shift_b = |p: &Self| -> Result<Self> {
            let mut out = Self::zero();
            for (e, c) in p.terms() {
                let mut f = e;
                f[b] += 1;
                out.add_term(f, c.clone())
                    .map_err(|_| Error::InternalNonExactDivision("resultant"))?;
            }
            Ok(out)
        };
        // q_(k-1) = f_k + b q_k, remainder f_0 + b q_0
        let mut q = vec![Self::zero(); top];
        let mut carry = Self::zero();
        for k in (1..=top).rev() {
            carry = slices[k].add(&shift_b(&carry)?);
            q[k - 1] = carry.clone();
        }
        let rem = slices[0].add(&shift_b(&carry)?);
        if !rem.is_zero() {
            return Err(Error::InternalNonExactDivision("resultant"));
        }
        let mut out = Self::zero();
        for (k, qk) in q.iter().enumerate() {
            for (e, c) in qk.terms() {
                let mut f = e;
                f[a] = k;
                out.add_term(f, c.clone())?;
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for AffinePoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x", "z", "X", "Z"];
        let parts: Vec<String> = self
            .terms()
            .map(|(e, c)| {
                let mut s = c.to_string();
                for (v, &k) in e.iter().enumerate() {
                    if k > 0 {
                        s.push_str(&format!("*{}^{}", names[v], k));
                    }
                }
                s
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `P(x, z) = p(x, 1, z, 1)` for a form of bidegree (2,1), written in the
/// variables `xv, zv`.
fn dehomogenize_in(p: &BiHomPoly, xv: Var, zv: Var) -> Result<AffinePoly3> {
    let c = p.to_abcdef()?;
    // a x^2 z + b x z + c z + d x^2 + e x + f
    let mut out = AffinePoly3::zero();
    let terms = [(2, 1), (1, 1), (0, 1), (2, 0), (1, 0), (0, 0)];
    for (coef, (ex, ez)) in c.into_iter().zip(terms) {
        let mut e = [0; 4];
        e[xv as usize] = ex;
        e[zv as usize] = ez;
        out.add_term(e, coef)?;
    }
    Ok(out)
}

/// `P(x, z) = p(x, 1, z, 1)`.
pub fn dehomogenize(p: &BiHomPoly) -> Result<AffinePoly3> {
    dehomogenize_in(p, Var::X0, Var::Z0)
}

/// The 4x4 matrix `(b_ij)`: `i` indexes `{1, x, z, xz}`, `j` indexes `X^j`.
pub fn bezout_matrix(p: &InputTriple) -> Result<ExactMatrix> {
    let points = [(Var::X0, Var::Z0), (Var::X1, Var::Z0), (Var::X1, Var::Z1)];
    let mut b: Vec<Vec<AffinePoly3>> = Vec::new();
    for (xv, zv) in points {
        b.push(
            p.polys()
                .iter()
                .map(|q| dehomogenize_in(q, xv, zv))
                .collect::<Result<_>>()?,
        );
    }
    let mut det = AffinePoly3::zero();
    for (perm, sign) in [
        ([0, 1, 2], true),
        ([1, 2, 0], true),
        ([2, 0, 1], true),
        ([0, 2, 1], false),
        ([2, 1, 0], false),
        ([1, 0, 2], false),
    ] {
        let term = b[0][perm[0]].mul(&b[1][perm[1]])?.mul(&b[2][perm[2]])?;
        det = if sign { det.add(&term) } else { det.sub(&term) };
    }
    let q = det
        .divide_by_difference(Var::X0, Var::X1)?
        .divide_by_difference(Var::Z0, Var::Z1)?;
    if q.degree_in(Var::Z1) != 0
        || q.degree_in(Var::X0) > 1
        || q.degree_in(Var::Z0) > 1
        || q.degree_in(Var::X1) > 3
    {
        return Err(Error::InternalInvariantViolation(format!(
            "Bezout quotient has unexpected degrees: {q:?}"
        )));
    }
    let rows = [[0, 0], [1, 0], [0, 1], [1, 1]];
    Ok(ExactMatrix::from_fn(4, 4, |i, j| {
        q.coeff([rows[i][0], rows[i][1], j, 0]).clone()
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultantReport {
    #[serde(with = "rational_string")]
    pub value: Rational,
    pub is_zero: bool,
}

mod rational_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exactnum::{format_rational, Rational};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        crate::exactnum::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub fn resultant_21(p: &InputTriple) -> Result<ResultantReport> {
    let value = bezout_matrix(p)?.det()?;
    Ok(ResultantReport {
        is_zero: value.is_zero(),
        value,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InstanceClass {
    Generic,
    NonGeneric,
    Degenerate,
}

impl fmt::Display for InstanceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InstanceClass::Generic => "Generic",
            InstanceClass::NonGeneric => "NonGeneric",
            InstanceClass::Degenerate => "Degenerate",
        })
    }
}

/// Degenerate when the resultant vanishes; otherwise Generic or NonGeneric
/// according to `dim Syz(p)_(2,3)` being 0 or 1.
pub fn classify(p: &InputTriple) -> Result<InstanceClass> {
    if resultant_21(p)?.is_zero {
        return Ok(InstanceClass::Degenerate);
    }
    match syz_dim(p, crate::BiDeg::new(2, 3)) {
        0 => Ok(InstanceClass::Generic),
        1 => Ok(InstanceClass::NonGeneric),
        k => Err(Error::InternalInvariantViolation(format!(
            "dim Syz(p)_(2,3) = {k} for a nondegenerate triple"
        ))),
    }
}

/// Whether two nonzero forms of bidegree (2,1) share no common factor, i.e.
/// their only syzygy in bidegree (4,2) is the Koszul one.
pub fn coprime_pair(q0: &BiHomPoly, q1: &BiHomPoly) -> Result<bool> {
    if q0.is_zero() || q1.is_zero() {
        return Err(Error::ZeroInput);
    }
    for q in [q0, q1] {
        if q.deg() != InputTriple::DEG {
            return Err(PolyError::WrongBidegree {
                expected: "(2,1)".into(),
                found: q.deg(),
            }
            .into());
        }
    }
    let m = q0.mult_matrix(q1.deg()).hstack(&q1.mult_matrix(q0.deg()))?;
    Ok(m.kernel_basis().len() == 1)
}
