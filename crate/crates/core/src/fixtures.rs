//! Named instances used throughout the tests, benches and CLI.

use num_traits::Zero;

use crate::bipoly::{monomials, BiHomPoly, InputTriple};
use crate::exactnum::{rat, Rational};

/// `p0 = x^2 z`, `p1 = y^2 w`, `p2 = x^2 w + y^2 z`: the standard non-generic example.
pub fn standard_example() -> InputTriple {
    InputTriple::parse("x^2*z", "y^2*w", "x^2*w + y^2*z").expect("valid forms")
}

/// The three-point family
/// `x(x - Ay) z`, `y(y - Bx) w`, `(x + y)(x - Cy)(z + w)`.
/// For nonzero resultant it is non-generic exactly when `A = BC + C - 1`.
pub fn three_point(a: i64, b: i64, c: i64) -> InputTriple {
    InputTriple::from_i64_rows([
        [1, -a, 0, 0, 0, 0],
        [0, 0, 0, 0, -b, 1],
        [1, 1 - c, -c, 1, 1 - c, -c],
    ])
}

/// `C (1 + B) (BC - 1) (1 + A) (A - C) (AB - 1)`, which the resultant of
/// [`three_point`] is proportional to.
pub fn three_point_product(a: i64, b: i64, c: i64) -> Rational {
    rat(c) * rat(1 + b) * rat(b * c - 1) * rat(1 + a) * rat(a - c) * rat(a * b - 1)
}

/// The generic fixture: `three_point(3, 2, 1)`.
pub fn generic() -> InputTriple {
    three_point(3, 2, 1)
}

/// The `A` that makes `three_point(A, b, c)` non-generic.
pub fn three_point_locus(b: i64, c: i64) -> i64 {
    b * c + c - 1
}

/// The non-generic member `three_point(2, 2, 1)` of the three-point family.
pub fn nongeneric() -> InputTriple {
    three_point(three_point_locus(2, 1), 2, 1)
}

/// The generic fixture with every `y^2 w` coefficient zeroed, so all three
/// forms vanish at `(x:y, z:w) = (0:1, 0:1)`.
pub fn planted_zero() -> InputTriple {
    let mut rows = generic().to_abcdef();
    for r in rows.iter_mut() {
        r[5] = Rational::zero();
    }
    InputTriple::from_abcdef(&rows)
}

/// Adjusts one coefficient of each form so that all three vanish at
/// `pt = (x, y, z, w)`. Requires `(x, y) != 0` and `(z, w) != 0`.
pub fn plant_common_zero(p: &InputTriple, pt: [Rational; 4]) -> InputTriple {
    let [x, y, z, w] = &pt;
    let deg = InputTriple::DEG;
    let (k, mono) = monomials(deg)
        .map(|(i, j)| BiHomPoly::monomial(deg, i, j, rat(1)))
        .enumerate()
        .find(|(_, m)| !m.eval(x, y, z, w).is_zero())
        .expect("some monomial is nonzero at a point of P1 x P1");
    let mv = mono.eval(x, y, z, w);
    let polys = p.polys().clone().map(|q| {
        let v = q.eval(x, y, z, w);
        let mut c = q.coeff_vector().to_vec();
        c[k] -= v / &mv;
        BiHomPoly::from_vector(deg, c).expect("same bidegree")
    });
    let [p0, p1, p2] = polys;
    InputTriple::new(p0, p1, p2).expect("bidegree (2,1)")
}
