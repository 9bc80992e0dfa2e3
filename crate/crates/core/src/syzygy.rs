//! The syzygy module `Syz(p)` of three bidegree-(2,1) forms.
//!
//! A syzygy of ambient bidegree `(m, n)` is a triple `(s0, s1, s2)` of forms of
//! bidegree `(m-2, n-1)` with `s0 p0 + s1 p1 + s2 p2 = 0`. The graded pieces
//! are computed as kernels of multiplication matrices; these kernels are the
//! oracle that every closed formula in the crate is tested against.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bipoly::{linear_content_xy, monomials, BiDeg, BiHomPoly, InputTriple};
use crate::classify::{classify, resultant_21, InstanceClass};
use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, Rational};

/// Bidegree of the input forms.
pub const P_DEG: BiDeg = BiDeg::new(2, 1);
/// Ambient bidegree of the Koszul generators.
pub const KOSZUL_DEG: BiDeg = BiDeg::new(4, 2);

/// A triple of forms of equal bidegree, read as a candidate syzygy.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SyzTriple {
    entries: [BiHomPoly; 3],
}

impl SyzTriple {
    pub fn new(s0: BiHomPoly, s1: BiHomPoly, s2: BiHomPoly) -> Result<Self> {
        if s0.deg() != s1.deg() || s0.deg() != s2.deg() {
            return Err(Error::DegreeMismatch(format!(
                "syzygy entries have bidegrees {}, {}, {}",
                s0.deg(),
                s1.deg(),
                s2.deg()
            )));
        }
        Ok(SyzTriple {
            entries: [s0, s1, s2],
        })
    }

    /// Splits a stacked coefficient vector of length `3 * dim R_(ambient - (2,1))`.
    pub fn from_vector(ambient: BiDeg, v: &[Rational]) -> Self {
        let d = ambient - P_DEG;
        let h = d.dim();
        assert_eq!(v.len(), 3 * h, "stacked vector length");
        SyzTriple {
            entries: std::array::from_fn(|i| {
                BiHomPoly::from_vector(d, v[i * h..(i + 1) * h].to_vec()).expect("length checked")
            }),
        }
    }

    pub fn parse(s0: &str, s1: &str, s2: &str) -> Result<Self> {
        Ok(Self::new(
            BiHomPoly::parse(s0)?,
            BiHomPoly::parse(s1)?,
            BiHomPoly::parse(s2)?,
        )?)
    }

    pub fn entries(&self) -> &[BiHomPoly; 3] {
        &self.entries
    }

    /// Bidegree of each entry.
    pub fn entry_deg(&self) -> BiDeg {
        self.entries[0].deg()
    }

    /// Bidegree of `s0 p0 + s1 p1 + s2 p2`.
    pub fn ambient(&self) -> BiDeg {
        self.entry_deg() + P_DEG
    }

    /// Concatenated coefficient vectors of the entries.
    pub fn coeff_vector(&self) -> Vec<Rational> {
        self.entries
            .iter()
            .flat_map(|e| e.coeff_vector().iter().cloned())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BiHomPoly::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SyzTriple {
            entries: std::array::from_fn(|i| self.entries[i].scale(c)),
        }
    }

    /// Multiplies each entry by `f`.
    pub fn mul_poly(&self, f: &BiHomPoly) -> Self {
        SyzTriple {
            entries: std::array::from_fn(|i| self.entries[i].mul(f)),
        }
    }

    /// Scaled so the first nonzero coefficient of the first nonzero entry is 1.
    pub fn normalized(&self) -> Self {
        match self.coeff_vector().into_iter().find(|c| !c.is_zero()) {
            Some(c) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// True when both triples are nonzero and span the same line.
    pub fn is_proportional_to(&self, other: &SyzTriple) -> bool {
        !self.is_zero()
            && !other.is_zero()
            && self.entry_deg() == other.entry_deg()
            && self.normalized() == other.normalized()
    }
}

impl fmt::Display for SyzTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.entries;
        write!(f, "({a}, {b}, {c})")
    }
}

impl fmt::Debug for SyzTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.ambient(), self)
    }
}

/// Minimal generators of `Syz(p)`, in the order: the (6,1) syzygy, the three
/// Koszul syzygies, then the (3,3) pair or the single (2,3) syzygy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzGens {
    pub gens: Vec<SyzTriple>,
}

impl SyzGens {
    /// Ambient bidegrees, sorted.
    pub fn degrees(&self) -> Vec<BiDeg> {
        let mut d: Vec<_> = self.gens.iter().map(SyzTriple::ambient).collect();
        d.sort();
        d
    }
}

pub fn is_syzygy(p: &InputTriple, t: &SyzTriple) -> bool {
    let d = t.ambient();
    let mut total = BiHomPoly::zero(d);
    for (s, q) in t.entries.iter().zip(p.polys()) {
        total = total.add(&s.mul(q));
    }
    total.is_zero()
}

/// The matrix of `(s0, s1, s2) -> s0 p0 + s1 p1 + s2 p2` from
/// `R_(d-(2,1))^3` to `R_d`.
pub fn syz_matrix(p: &InputTriple, d: BiDeg) -> ExactMatrix {
    let src = d - P_DEG;
    let blocks: Vec<_> = p.polys().iter().map(|q| q.mult_matrix(src)).collect();
    ExactMatrix::hcat(d.dim(), &blocks).expect("blocks share the target dimension")
}

/// `dim Syz(p)_d`, by rank-nullity on [`syz_matrix`].
pub fn syz_dim(p: &InputTriple, d: BiDeg) -> usize {
    3 * (d - P_DEG).dim() - syz_matrix(p, d).rank()
}

/// `dim I_d` for `I = <p0, p1, p2>`: the rank of [`syz_matrix`].
pub fn ideal_dim(p: &InputTriple, d: BiDeg) -> usize {
    syz_matrix(p, d).rank()
}

/// Basis of `Syz(p)_(m,n)`, in the deterministic order of
/// [`ExactMatrix::kernel_basis`]. Empty when `m < 2` or `n < 1`.
pub fn syz_basis(p: &InputTriple, m: i32, n: i32) -> Vec<SyzTriple> {
    let d = BiDeg::new(m, n);
    syz_matrix(p, d)
        .kernel_basis()
        .iter()
        .map(|v| SyzTriple::from_vector(d, v))
        .collect()
}

/// The Koszul syzygies `(p1, -p0, 0)`, `(p2, 0, -p0)`, `(0, p2, -p1)`.
pub fn koszul_generators(p: &InputTriple) -> [SyzTriple; 3] {
    let [p0, p1, p2] = p.polys().clone();
    let zero = BiHomPoly::zero(P_DEG);
    [
        SyzTriple::new(p1.clone(), p0.neg(), zero.clone()),
        SyzTriple::new(p2.clone(), zero, p0.neg()),
        SyzTriple::new(BiHomPoly::zero(P_DEG), p2, p1.neg()),
    ]
    .map(|t| t.expect("all entries have bidegree (2,1)"))
}

/// Stacks the multiples `mu * g` of each generator, for all monomials `mu`
/// of bidegree `d - ambient(g)`, as columns in `R_(d-(2,1))^3`.
fn multiples_matrix(gens: &[SyzTriple], d: BiDeg) -> ExactMatrix {
    let rows = 3 * (d - P_DEG).dim();
    let blocks: Vec<_> = gens
        .iter()
        .filter(|g| g.ambient().le(d))
        .map(|g| {
            let src = d - g.ambient();
            let parts = g.entries.iter().map(|e| e.mult_matrix(src));
            parts
                .reduce(|a, b| a.vstack(&b).expect("equal widths"))
                .expect("three entries")
        })
        .collect();
    ExactMatrix::hcat(rows, &blocks).expect("equal heights")
}

/// Matrix of the Koszul map `R_(d-(4,2))^3 -> R_(d-(2,1))^3`.
pub fn koszul_matrix(p: &InputTriple, d: BiDeg) -> ExactMatrix {
    multiples_matrix(&koszul_generators(p), d)
}

/// Dimension of the Koszul syzygies in `Syz(p)_(m,n)`.
pub fn koszul_image_dim(p: &InputTriple, m: i32, n: i32) -> usize {
    let d = BiDeg::new(m, n);
    if !KOSZUL_DEG.le(d) {
        return 0;
    }
    koszul_matrix(p, d).rank()
}

/// Dimension of `Syz(p)_(m,n)` modulo its Koszul part.
pub fn nonkoszul_dim(p: &InputTriple, m: i32, n: i32) -> usize {
    syz_dim(p, BiDeg::new(m, n)) - koszul_image_dim(p, m, n)
}

/// Whether `R_(d-(6,3)) -> R_(d-(4,2))^3`, `a -> (a p2, -a p1, a p0)`, is
/// injective (the first map of the Koszul complex).
pub fn koszul_first_map_injective(p: &InputTriple, d: BiDeg) -> bool {
    let [p0, p1, p2] = p.polys();
    let col = SyzTriple::new(p2.clone(), p1.neg(), p0.clone()).expect("equal bidegrees");
    let src = d - BiDeg::new(6, 3);
    let m = col
        .entries
        .iter()
        .map(|e| e.mult_matrix(src))
        .reduce(|a, b| a.vstack(&b).expect("equal widths"))
        .expect("three entries");
    m.rank() == src.dim()
}

/// The minor triple `(A1 B2 - A2 B1, A2 B0 - A0 B2, A0 B1 - A1 B0)`. When
/// `p_i = A_i g + B_i h` for common `g, h`, this is a syzygy on `p`.
pub fn syzygy_from_split(a: &[BiHomPoly; 3], b: &[BiHomPoly; 3]) -> Result<SyzTriple> {
    if a.iter().any(|e| e.deg() != a[0].deg()) || b.iter().any(|e| e.deg() != b[0].deg()) {
        return Err(Error::DegreeMismatch(
            "split components must share a bidegree".into(),
        ));
    }
    let minor = |i: usize, j: usize| a[i].mul(&b[j]).sub(&a[j].mul(&b[i]));
    SyzTriple::new(minor(1, 2), minor(2, 0), minor(0, 1))
}

fn require_nondegenerate(p: &InputTriple) -> Result<()> {
    if resultant_21(p)?.is_zero {
        return Err(Error::DegenerateInput);
    }
    Ok(())
}

/// The non-Koszul syzygy of ambient bidegree (6,1) built from `p_i = A_i z + B_i w`.
pub fn syzygy_61(p: &InputTriple) -> Result<SyzTriple> {
    require_nondegenerate(p)?;
    let mut a = Vec::with_capacity(3);
    let mut b = Vec::with_capacity(3);
    for q in p.polys() {
        let (ai, bi) = q.split_zw()?;
        a.push(ai);
        b.push(bi);
    }
    let t = syzygy_from_split(&to_array(a), &to_array(b))?;
    if t.is_zero() {
        return Err(Error::InternalInvariantViolation(
            "the (6,1) syzygy vanished for a nondegenerate input".into(),
        ));
    }
    Ok(t)
}

fn to_array(v: Vec<BiHomPoly>) -> [BiHomPoly; 3] {
    v.try_into().expect("three entries")
}

/// The syzygies `C^(1)` and `C^(2)` of ambient bidegree (3,3). With
/// `p_i = C_i x^2 + D_i xy + E_i y^2`, `C^(1)` uses the splitting
/// `p_i = (C_i x + D_i y) x + E_i y^2` and `C^(2)` uses
/// `p_i = C_i x^2 + (D_i x + E_i y) y`.
pub fn syzygies_33(p: &InputTriple) -> Result<(SyzTriple, SyzTriple)> {
    let (x, y) = (BiHomPoly::x(), BiHomPoly::y());
    let mut a1 = Vec::new();
    let mut b1 = Vec::new();
    let mut a2 = Vec::new();
    let mut b2 = Vec::new();
    for q in p.polys() {
        let (c, d, e) = q.split_xy()?;
        a1.push(c.mul(&x).add(&d.mul(&y)));
        b1.push(e.clone());
        a2.push(c);
        b2.push(d.mul(&x).add(&e.mul(&y)));
    }
    Ok((
        syzygy_from_split(&to_array(a1), &to_array(b1))?,
        syzygy_from_split(&to_array(a2), &to_array(b2))?,
    ))
}

/// The syzygy of ambient bidegree (2,3) of a non-generic triple, extracted
/// as the common linear factor of `C^(1)` (or `C^(2)`) and normalized.
pub fn syzygy_23(p: &InputTriple) -> Result<SyzTriple> {
    match classify(p)? {
        InstanceClass::Degenerate => return Err(Error::DegenerateInput),
        InstanceClass::Generic => return Err(Error::GenericInstance),
        InstanceClass::NonGeneric => {}
    }
    let (c1, c2) = syzygies_33(p)?;
    for c in [c1, c2] {
        if c.is_zero() {
            continue;
        }
        if let Some((_, q)) = linear_content_xy(c.entries())? {
            let [q0, q1, q2] = to_array(q);
            return Ok(SyzTriple::new(q0, q1, q2)?.normalized());
        }
    }
    Err(Error::InternalInvariantViolation(
        "no linear factor in the (3,3) syzygies of a non-generic triple".into(),
    ))
}

pub fn min_generators(p: &InputTriple) -> Result<SyzGens> {
    let cls = classify(p)?;
    if cls == InstanceClass::Degenerate {
        return Err(Error::DegenerateInput);
    }
    let mut gens = vec![syzygy_61(p)?];
    gens.extend(koszul_generators(p));
    match cls {
        InstanceClass::Generic => {
            let (c1, c2) = syzygies_33(p)?;
            gens.push(c1);
            gens.push(c2);
        }
        _ => gens.push(syzygy_23(p)?),
    }
    Ok(SyzGens { gens })
}

/// Outcome of [`check_generation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationReport {
    pub cells: usize,
    /// Generators that fail [`is_syzygy`], by index.
    pub non_syzygies: Vec<usize>,
    /// First cell (in `m`-major order) where the span has the wrong dimension,
    /// with the span and oracle dimensions.
    pub first_failure: Option<(BiDeg, usize, usize)>,
}

impl GenerationReport {
    pub fn passed(&self) -> bool {
        self.non_syzygies.is_empty() && self.first_failure.is_none()
    }
}

/// Checks that `gens` span `Syz(p)_(m,n)` for every `(m,n)` in the box. Each
/// generator is first checked to be a syzygy, so the span lies inside the
/// oracle space; equality then follows from equal dimensions. A rank modulo
/// a prime is a lower bound, so it is accepted when it reaches the oracle.
pub fn check_generation(p: &InputTriple, gens: &SyzGens, bx: BiDeg) -> GenerationReport {
    let non_syzygies: Vec<usize> = gens
        .gens
        .iter()
        .enumerate()
        .filter(|(_, g)| !is_syzygy(p, g))
        .map(|(i, _)| i)
        .collect();
    let all_syzygies = non_syzygies.is_empty();
    let cells: Vec<BiDeg> = bx.cells().collect();
    let dims: Vec<(usize, usize)> = cells
        .par_iter()
        .map(|&d| {
            let span = multiples_matrix(&gens.gens, d);
            let oracle = syz_dim(p, d);
            match span.rank_mod_prime() {
                Some(r) if all_syzygies && r == oracle => (r, oracle),
                _ => (span.rank(), oracle),
            }
        })
        .collect();
    let first_failure = cells
        .iter()
        .zip(&dims)
        .find(|(_, (a, b))| a != b)
        .map(|(&d, &(a, b))| (d, a, b));
    GenerationReport {
        cells: cells.len(),
        non_syzygies,
        first_failure,
    }
}

/// The 16 monomials of bidegree (3,3), which are exactly the products of
/// three generators of `B = <xz, xw, yz, yw>`.
pub fn b_cubed_monomials() -> Vec<BiHomPoly> {
    let d = BiDeg::new(3, 3);
    monomials(d)
        .map(|(i, j)| BiHomPoly::monomial(d, i, j, Rational::one()))
        .collect()
}

/// Checks that `mu * g` is a Koszul syzygy for every generator `g` and every
/// monomial `mu` of bidegree (3,3). Returns the first failing
/// `(generator index, monomial)` if any.
pub fn check_b_cubed_koszul(
    p: &InputTriple,
    gens: &SyzGens,
) -> Result<Option<(usize, BiHomPoly)>> {
    let mons = b_cubed_monomials();
    let results: Vec<Result<Option<(usize, BiHomPoly)>>> = gens
        .gens
        .par_iter()
        .enumerate()
        .map(|(k, g)| {
            let target = g.ambient() + BiDeg::new(3, 3);
            let km = koszul_matrix(p, target);
            let rhs: Vec<_> = mons.iter().map(|mu| g.mul_poly(mu).coeff_vector()).collect();
            let sols = km.solve_many(&rhs)?;
            Ok(sols
                .iter()
                .zip(&mons)
                .find(|(s, _)| s.is_none())
                .map(|(_, mu)| (k, mu.clone())))
        })
        .collect();
    for r in results {
        if let Some(f) = r? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::fixtures;

    fn t(a: &str, b: &str, c: &str) -> SyzTriple {
        SyzTriple::parse(a, b, c).unwrap()
    }

    #[test]
    fn is_syzygy_examples() {
        let p = fixtures::standard_example();
        assert!(is_syzygy(&p, &t("w^2", "z^2", "-z*w")));
        assert!(!is_syzygy(&p, &t("w^2", "z^2", "z*w")));
        for k in koszul_generators(&p) {
            assert!(is_syzygy(&p, &k));
        }
        assert!(SyzTriple::parse("w^2", "z", "z*w").is_err());
    }

    #[test]
    fn syz_basis_examples() {
        let p = fixtures::standard_example();
        let b = syz_basis(&p, 2, 3);
        assert_eq!(b.len(), 1);
        assert!(b[0].is_proportional_to(&t("w^2", "z^2", "-z*w")));
        assert!(syz_basis(&p, 2, 1).is_empty());
        assert!(syz_basis(&fixtures::generic(), 2, 1).is_empty());
        assert_eq!(syz_basis(&fixtures::generic(), 5, 2).len(), 6);
    }

    #[test]
    fn koszul_examples() {
        let p = fixtures::standard_example();
        let k = koszul_generators(&p);
        assert_eq!(k[0].entries()[0], BiHomPoly::parse("y^2*w").unwrap());
        assert_eq!(k[0].entries()[1], BiHomPoly::parse("-x^2*z").unwrap());
        assert!(k[0].entries()[2].is_zero());
        for q in [fixtures::standard_example(), fixtures::generic()] {
            assert_eq!(koszul_image_dim(&q, 4, 2), 3);
            assert_eq!(koszul_image_dim(&q, 3, 3), 0);
        }
        assert_eq!(koszul_image_dim(&fixtures::generic(), 6, 3), 17);
        let stacked: Vec<Vec<Rational>> = k.iter().map(SyzTriple::coeff_vector).collect();
        assert_eq!(ExactMatrix::from_rows(stacked).unwrap().rank(), 3);
    }

    #[test]
    fn nonkoszul_examples() {
        let g = fixtures::generic();
        assert_eq!(nonkoszul_dim(&g, 6, 1), 1);
        assert_eq!(nonkoszul_dim(&g, 3, 3), 2);
        assert_eq!(nonkoszul_dim(&fixtures::nongeneric(), 2, 3), 1);
    }

    #[test]
    fn split_syzygy_examples() {
        let a = [BiHomPoly::parse("x^2").unwrap(), BiHomPoly::parse_in(BiDeg::new(2, 0), "0").unwrap(), BiHomPoly::parse("y^2").unwrap()];
        let b = [BiHomPoly::parse_in(BiDeg::new(2, 0), "0").unwrap(), BiHomPoly::parse("y^2").unwrap(), BiHomPoly::parse("x^2").unwrap()];
        let s = syzygy_from_split(&a, &b).unwrap();
        assert_eq!(s, t("-y^4", "-x^4", "x^2*y^2"));
        assert!(is_syzygy(&fixtures::standard_example(), &s));

        let p = fixtures::generic();
        let a = p.polys().clone();
        let b = [BiHomPoly::parse("x*y*z").unwrap(), BiHomPoly::parse("x^2*w").unwrap(), BiHomPoly::parse("z*y^2 - x*y*w").unwrap()];
        let s = syzygy_from_split(&a, &b).unwrap();
        assert!(is_syzygy(&p, &s));
        let km = koszul_matrix(&p, s.ambient());
        assert!(km.solve(&s.coeff_vector()).unwrap().is_some());

        let same = [a[0].clone(), a[0].clone(), a[0].clone()];
        let sb = [b[1].clone(), b[1].clone(), b[1].clone()];
        assert!(syzygy_from_split(&same, &sb).unwrap().is_zero());
        let bad = [a[0].clone(), a[1].clone(), BiHomPoly::x()];
        assert!(matches!(syzygy_from_split(&bad, &b), Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn syzygy_61_examples() {
        let p = fixtures::standard_example();
        let s = syzygy_61(&p).unwrap();
        assert_eq!(s, t("-y^4", "-x^4", "x^2*y^2"));
        assert!(syz_basis(&p, 6, 1).len() == 1);
        assert_eq!(koszul_image_dim(&p, 6, 1), 0);

        let g = fixtures::generic();
        let lam = rat(3);
        let scaled = InputTriple::new(g.get(0).scale(&lam), g.get(1).clone(), g.get(2).clone()).unwrap();
        let (s0, s1) = (syzygy_61(&g).unwrap(), syzygy_61(&scaled).unwrap());
        assert_eq!(s1.entries()[0], s0.entries()[0]);
        assert_eq!(s1.entries()[1], s0.entries()[1].scale(&lam));
        assert_eq!(s1.entries()[2], s0.entries()[2].scale(&lam));
        assert_eq!(syzygy_61(&fixtures::planted_zero()), Err(Error::DegenerateInput));
    }

    #[test]
    fn syzygies_33_examples() {
        let (c1, c2) = syzygies_33(&fixtures::standard_example()).unwrap();
        assert_eq!(c1, t("-x*w^2", "-x*z^2", "x*z*w"));
        assert_eq!(c2, t("-y*w^2", "-y*z^2", "y*z*w"));

        let g = fixtures::generic();
        let (c1, c2) = syzygies_33(&g).unwrap();
        let basis = syz_basis(&g, 3, 3);
        assert_eq!(basis.len(), 2);
        let mine = ExactMatrix::from_rows(vec![c1.coeff_vector(), c2.coeff_vector()]).unwrap();
        let all = ExactMatrix::from_rows(
            [c1, c2].iter().chain(&basis).map(SyzTriple::coeff_vector).collect(),
        )
        .unwrap();
        assert_eq!((mine.rank(), all.rank()), (2, 2));

        let p0 = g.get(0).clone();
        let dup = InputTriple::new(p0.clone(), p0, g.get(2).clone()).unwrap();
        let c1 = syzygies_33(&dup).unwrap().0;
        let [u, v, zero] = c1.entries();
        assert!(zero.is_zero());
        assert_eq!(u, &v.neg());
    }

    #[test]
    fn syzygy_23_examples() {
        let s = syzygy_23(&fixtures::standard_example()).unwrap();
        assert_eq!(s, t("w^2", "z^2", "-z*w"));
        let q = fixtures::nongeneric();
        let s = syzygy_23(&q).unwrap();
        assert!(!s.is_zero() && is_syzygy(&q, &s));
        assert_eq!(syz_basis(&q, 2, 3).len(), 1);
        assert_eq!(syzygy_23(&fixtures::generic()), Err(Error::GenericInstance));
    }

    #[test]
    fn min_generator_degrees() {
        let d = |m, n| BiDeg::new(m, n);
        let g = min_generators(&fixtures::generic()).unwrap();
        assert_eq!(g.degrees(), vec![d(3, 3), d(3, 3), d(4, 2), d(4, 2), d(4, 2), d(6, 1)]);
        let ng = min_generators(&fixtures::standard_example()).unwrap();
        assert_eq!(ng.degrees(), vec![d(2, 3), d(4, 2), d(4, 2), d(4, 2), d(6, 1)]);
    }

    #[test]
    fn generation_detects_missing_generator() {
        let p = fixtures::standard_example();
        let mut gens = min_generators(&p).unwrap();
        assert!(check_generation(&p, &gens, BiDeg::new(7, 4)).passed());
        gens.gens.remove(0);
        let r = check_generation(&p, &gens, BiDeg::new(7, 4));
        assert_eq!(r.first_failure, Some((BiDeg::new(6, 1), 0, 1)));
    }

    #[test]
    fn b_cubed_kills_non_koszul_part() {
        assert_eq!(b_cubed_monomials().len(), 16);
        for p in [fixtures::standard_example(), fixtures::generic()] {
            let gens = min_generators(&p).unwrap();
            assert_eq!(check_b_cubed_koszul(&p, &gens).unwrap(), None);
        }
        let p = fixtures::generic();
        let s = syzygy_61(&p).unwrap();
        let km = koszul_matrix(&p, BiDeg::new(8, 1));
        let mu = BiHomPoly::parse("x^2").unwrap();
        assert!(km.solve(&s.mul_poly(&mu).coeff_vector()).unwrap().is_none());
    }

    #[test]
    fn koszul_first_map_is_injective() {
        let p = fixtures::generic();
        for d in BiDeg::new(9, 6).cells() {
            assert!(koszul_first_map_injective(&p, d), "at {d}");
        }
    }
}
