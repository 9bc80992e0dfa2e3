//! Closed-form Hilbert functions of `R`, `Syz(p)` and `I = <p0, p1, p2>`,
//! line-bundle cohomology dimensions on P^1 x P^1, and the table comparing
//! every prediction with the syzygy oracle.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bipoly::{BiDeg, InputTriple};
use crate::classify::classify;
pub use crate::classify::InstanceClass;
use crate::error::{Error, Result};
use crate::syzygy::{koszul_image_dim, syz_matrix, P_DEG};

/// `dim R_(m,n)`.
pub fn h_r(m: i32, n: i32) -> usize {
    BiDeg::new(m, n).dim()
}

/// `h^0(P^1, O(a))`.
pub fn h0_p1(a: i32) -> usize {
    (a + 1).max(0) as usize
}

/// `h^1(P^1, O(a))`.
pub fn h1_p1(a: i32) -> usize {
    (-a - 1).max(0) as usize
}

/// `h^1(P^1 x P^1, O(m, n))` by the Kunneth formula.
pub fn h1(m: i32, n: i32) -> usize {
    h0_p1(m) * h1_p1(n) + h1_p1(m) * h0_p1(n)
}

fn require_class(cls: InstanceClass) -> Result<()> {
    if cls == InstanceClass::Degenerate {
        return Err(Error::DegenerateClass);
    }
    Ok(())
}

/// Predicted dimension of the non-Koszul part of `Syz(p)_(m,n)`.
pub fn e2_pred(cls: InstanceClass, m: i32, n: i32) -> Result<usize> {
    require_class(cls)?;
    let v = if m < 2 || n < 1 || (m >= 5 && n >= 2) {
        0
    } else if n == 1 {
        if m >= 6 {
            h1(m - 6, -2)
        } else {
            0
        }
    } else if n == 2 {
        0
    } else {
        let k = (n - 2) as usize;
        match m {
            2 if cls == InstanceClass::NonGeneric => k,
            2 => 0,
            3 => 2 * k,
            4 => k,
            _ => 0,
        }
    };
    Ok(v)
}

/// Predicted `dim Syz(p)_(m,n)`.
pub fn h_syz_pred(cls: InstanceClass, m: i32, n: i32) -> Result<usize> {
    require_class(cls)?;
    let v: i64 = {
        let (m, n) = (m as i64, n as i64);
        if m >= 4 && n >= 2 {
            // for m = 4 this equals 3(n - 1) + n - 2
            3 * (m - 3) * (n - 1) - (m - 5) * (n - 2)
        } else if m >= 6 && n == 1 {
            m - 5
        } else if m == 3 && n >= 3 {
            2 * (n - 2)
        } else if m == 2 && n >= 3 && cls == InstanceClass::NonGeneric {
            n - 2
        } else {
            0
        }
    };
    if v < 0 {
        return Err(Error::InternalInvariantViolation(format!(
            "negative syzygy dimension predicted at ({m},{n})"
        )));
    }
    Ok(v as usize)
}

/// Predicted `dim I_(m,n)`, from `0 -> Syz(p) -> R(-2,-1)^3 -> I -> 0`.
pub fn h_i_pred(cls: InstanceClass, m: i32, n: i32) -> Result<usize> {
    let syz = h_syz_pred(cls, m, n)?;
    let free = 3 * h_r(m - 2, n - 1);
    free.checked_sub(syz).ok_or_else(|| {
        Error::InternalInvariantViolation(format!("negative ideal dimension predicted at ({m},{n})"))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRow {
    pub m: i32,
    pub n: i32,
    pub h_syz_pred: usize,
    pub h_syz: usize,
    pub h_i_pred: usize,
    pub h_i: usize,
    pub e2_pred: usize,
    pub e2: usize,
}

impl DimRow {
    pub fn deg(&self) -> BiDeg {
        BiDeg::new(self.m, self.n)
    }

    pub fn matches(&self) -> bool {
        self.h_syz_pred == self.h_syz && self.h_i_pred == self.h_i && self.e2_pred == self.e2
    }

    /// `dim Syz = 3 h_R(m-4, n-2) - h_R(m-6, n-3) + e2`, with oracle values.
    pub fn four_term_identity_holds(&self) -> bool {
        let (m, n) = (self.m, self.n);
        self.h_syz + h_r(m - 6, n - 3) == 3 * h_r(m - 4, n - 2) + self.e2
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimTable {
    pub class: InstanceClass,
    pub bx: BiDeg,
    /// Cells in `m`-major order.
    pub rows: Vec<DimRow>,
}

impl DimTable {
    pub fn mismatches(&self) -> impl Iterator<Item = &DimRow> {
        self.rows.iter().filter(|r| !r.matches())
    }

    pub fn first_mismatch(&self) -> Option<BiDeg> {
        self.mismatches().next().map(DimRow::deg)
    }

    pub fn get(&self, m: i32, n: i32) -> Option<&DimRow> {
        self.rows.iter().find(|r| r.m == m && r.n == n)
    }
}

/// Oracle values `(dim Syz, dim I, non-Koszul dim)` at `d`.
pub fn oracle_dims(p: &InputTriple, d: BiDeg) -> (usize, usize, usize) {
    let rank = syz_matrix(p, d).rank();
    let syz = 3 * (d - P_DEG).dim() - rank;
    (syz, rank, syz - koszul_image_dim(p, d.m, d.n))
}

/// Fills the table for the class reported by [`classify`].
pub fn dim_table(p: &InputTriple, bx: BiDeg) -> Result<DimTable> {
    let cls = classify(p)?;
    if cls == InstanceClass::Degenerate {
        return Err(Error::DegenerateInput);
    }
    dim_table_for_class(p, cls, bx)
}

/// Fills the table using the predictions for `cls`, whatever the true class.
pub fn dim_table_for_class(p: &InputTriple, cls: InstanceClass, bx: BiDeg) -> Result<DimTable> {
    require_class(cls)?;
    let cells: Vec<BiDeg> = bx.cells().collect();
    let rows = cells
        .par_iter()
        .map(|&d| {
            let (h_syz, h_i, e2) = oracle_dims(p, d);
            Ok(DimRow {
                m: d.m,
                n: d.n,
                h_syz_pred: h_syz_pred(cls, d.m, d.n)?,
                h_syz,
                h_i_pred: h_i_pred(cls, d.m, d.n)?,
                h_i,
                e2_pred: e2_pred(cls, d.m, d.n)?,
                e2,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DimTable { class: cls, bx, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;
    use InstanceClass::*;

    #[test]
    fn h_r_examples() {
        assert_eq!(h_r(2, 1), 6);
        assert_eq!(h_r(-1, 5), 0);
        assert_eq!(h_r(0, 0), 1);
    }

    #[test]
    fn h1_examples() {
        assert_eq!(h1(-4, 0), 3);
        assert_eq!(h1(-2, 1), 2);
        assert_eq!(h1(-1, -7), 0);
    }

    #[test]
    fn e2_examples() {
        for cls in [Generic, NonGeneric] {
            assert_eq!(e2_pred(cls, 7, 1).unwrap(), 2);
            assert_eq!(e2_pred(cls, 3, 4).unwrap(), 4);
        }
        assert_eq!(e2_pred(NonGeneric, 2, 3).unwrap(), 1);
        assert_eq!(e2_pred(Generic, 2, 3).unwrap(), 0);
        assert_eq!(e2_pred(Degenerate, 2, 3), Err(Error::DegenerateClass));
    }

    #[test]
    fn h_syz_examples() {
        assert_eq!(h_syz_pred(Generic, 6, 1).unwrap(), 1);
        assert_eq!(h_syz_pred(Generic, 5, 2).unwrap(), 6);
        assert_eq!(h_syz_pred(NonGeneric, 2, 3).unwrap(), 1);
        assert_eq!(h_syz_pred(Generic, 4, 3).unwrap(), 3 * 2 + 1);
        assert_eq!(h_syz_pred(NonGeneric, 3, 5).unwrap(), 2 * 3);
    }

    #[test]
    fn syz_at_4_2_is_the_koszul_span() {
        for cls in [Generic, NonGeneric] {
            assert_eq!(h_syz_pred(cls, 4, 2).unwrap(), 3);
        }
        for p in [fixtures::generic(), fixtures::standard_example()] {
            assert_eq!(oracle_dims(&p, BiDeg::new(4, 2)), (3, 15, 0));
        }
    }

    #[test]
    fn h_i_examples() {
        assert_eq!(h_i_pred(Generic, 2, 1).unwrap(), 3);
        assert_eq!(h_i_pred(Generic, 6, 3).unwrap(), 28);
        assert_eq!(h_i_pred(NonGeneric, 1, 0).unwrap(), 0);
        assert_eq!(oracle_dims(&fixtures::generic(), BiDeg::new(6, 3)).1, 28);
    }

    #[test]
    fn tables_match_on_fixtures() {
        for p in [fixtures::standard_example(), fixtures::generic(), fixtures::nongeneric()] {
            let t = dim_table(&p, BiDeg::new(9, 6)).unwrap();
            assert_eq!(t.rows.len(), 70);
            assert_eq!(t.first_mismatch(), None);
            assert!(t.rows.iter().all(DimRow::four_term_identity_holds));
        }
        assert_eq!(dim_table(&fixtures::planted_zero(), BiDeg::new(2, 2)), Err(Error::DegenerateInput));
    }

    #[test]
    fn wrong_class_is_caught_at_2_3() {
        let t = dim_table_for_class(&fixtures::standard_example(), Generic, BiDeg::new(9, 6)).unwrap();
        assert_eq!(t.first_mismatch(), Some(BiDeg::new(2, 3)));
    }

    proptest! {
        #[test]
        fn single_factor_serre_duality(k in -20i32..20) {
            prop_assert_eq!(h1_p1(k), h0_p1(-k - 2));
        }

        #[test]
        fn kunneth_term_by_term(m in -10i32..10, n in -10i32..10) {
            prop_assert_eq!(h1(m, n), h0_p1(m) * h1_p1(n) + h1_p1(m) * h0_p1(n));
            if (m >= -1 && n >= -1) || (m <= -1 && n <= -1) {
                prop_assert_eq!(h1(m, n), 0);
            }
        }

        #[test]
        fn predictions_satisfy_four_term_identity(m in 0i32..15, n in 0i32..15) {
            for cls in [Generic, NonGeneric] {
                let lhs = h_syz_pred(cls, m, n).unwrap() + h_r(m - 6, n - 3);
                let rhs = 3 * h_r(m - 4, n - 2) + e2_pred(cls, m, n).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
