//! Seeded random instances of each class.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bipoly::{BiDeg, BiHomPoly, InputTriple};
use crate::classify::{resultant_21, InstanceClass};
use crate::error::{Error, Result};
use crate::exactnum::{rat, ExactMatrix};
use crate::resolution::NormalForm;
use crate::syzygy::syz_dim;

pub const MAX_DRAWS: usize = 1000;

fn draw(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    rng.random_range(-bound..=bound)
}

/// Uniform integer coefficients in `[-bound, bound]`, redrawn until the
/// resultant is nonzero and `Syz(p)_(2,3) = 0`.
pub fn random_generic(seed: u64, bound: i64) -> Result<InputTriple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_DRAWS {
        let rows: [[i64; 6]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| draw(&mut rng, bound)));
        let p = InputTriple::from_i64_rows(rows);
        if p.polys().iter().any(BiHomPoly::is_zero) || resultant_21(&p)?.is_zero {
            continue;
        }
        if syz_dim(&p, BiDeg::new(2, 3)) == 0 {
            return Ok(p);
        }
    }
    Err(Error::GenerationExhausted(MAX_DRAWS))
}

/// `p_i = (r0(s,t) x^2 + r1(s,t) xy + r2(s,t) y^2)(tz - sw)` at
/// `(s,t) = (0,1), (-1,0), (-1,1)`, for random linear forms `r_k` whose 3x2
/// coefficient matrix has rank 2; redrawn until the resultant is nonzero.
pub fn random_nongeneric(seed: u64, bound: i64) -> Result<InputTriple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (x, y) = (BiHomPoly::x(), BiHomPoly::y());
    let quad = [x.mul(&x), x.mul(&y), y.mul(&y)];
    let lines = NormalForm::lines();
    for _ in 0..MAX_DRAWS {
        let coeffs = ExactMatrix::from_fn(3, 2, |_, _| rat(draw(&mut rng, bound)));
        if coeffs.rank() < 2 {
            continue;
        }
        let polys: Vec<BiHomPoly> = [(0, 1), (-1, 0), (-1, 1)]
            .into_iter()
            .zip(&lines)
            .map(|((s, t), l)| {
                let g = (0..3).fold(BiHomPoly::zero(BiDeg::new(2, 0)), |acc, k| {
                    let r = coeffs.get(k, 0) * rat(s) + coeffs.get(k, 1) * rat(t);
                    acc.add(&quad[k].scale(&r))
                });
                g.mul(l)
            })
            .collect();
        let [p0, p1, p2]: [BiHomPoly; 3] = polys.try_into().expect("three forms");
        let p = InputTriple::new(p0, p1, p2)?;
        if !resultant_21(&p)?.is_zero {
            return Ok(p);
        }
    }
    Err(Error::GenerationExhausted(MAX_DRAWS))
}

pub fn random_instance(cls: InstanceClass, seed: u64, bound: i64) -> Result<InputTriple> {
    match cls {
        InstanceClass::Generic => random_generic(seed, bound),
        InstanceClass::NonGeneric => random_nongeneric(seed, bound),
        InstanceClass::Degenerate => Err(Error::DegenerateClass),
    }
}
