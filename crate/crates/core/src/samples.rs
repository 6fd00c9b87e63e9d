//! Small worked examples used throughout the test suite and documentation.
//!
//! All of them are given by a handful of structure constants and are verified
//! against the axiom checkers in the tests.

use crate::linalg::{Matrix, Vector};
use crate::ly::{unit, LieAlgebra, LyAlgebra};
use crate::pre_ly::PreLyAlgebra;
use crate::quadratic::BilinearForm;
use crate::scalar::Scalar;
use crate::symplectic::SymplecticForm;

/// The 2-dimensional Lie-Yamaguti algebra with `[e1,e2] = e1` and
/// `[[e1,e2,e2]] = e1`.
pub fn ly_dim2() -> LyAlgebra {
    LyAlgebra::from_sparse(
        2,
        &[(0, 1, Vector::basis(2, 0))],
        &[(0, 1, 1, Vector::basis(2, 0))],
    )
    .expect("valid table")
}

/// The 4-dimensional Lie-Yamaguti algebra with `[e1,e2] = 2 e4` and
/// `[[e1,e2,e1]] = e4`.
pub fn ly_dim4() -> LyAlgebra {
    LyAlgebra::from_sparse(
        4,
        &[(0, 1, unit(4, 3, Scalar::from_int(2)))],
        &[(0, 1, 0, Vector::basis(4, 3))],
    )
    .expect("valid table")
}

/// The simple Lie algebra sl2 in the basis `{h, e, f}` with `[h,e] = 2e`,
/// `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_sparse(
        3,
        &[
            (0, 1, unit(3, 1, Scalar::from_int(2))),
            (0, 2, unit(3, 2, Scalar::from_int(-2))),
            (1, 2, Vector::basis(3, 0)),
        ],
    )
    .expect("valid table")
}

/// sl2 with the induced ternary bracket `[[x,y,z]] = [[x,y],z]`.
pub fn sl2_ly() -> LyAlgebra {
    crate::ly::ly_from_lie(&sl2()).expect("sl2 satisfies Jacobi")
}

/// The trace form `(x,y) -> tr(ad_x ad_y)` of [`sl2`] in the `{h,e,f}`
/// basis: `(h,h) = 8`, `(e,f) = (f,e) = 4`, all other entries zero.
pub fn killing_form_sl2() -> BilinearForm {
    BilinearForm::new(Matrix::from_int_rows(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]))
        .expect("square matrix")
}

/// The one-parameter family of square operators on [`ly_dim2`] with columns
/// `T(e1) = 0`, `T(e2) = a e1 + b e2`. Every member is a Rota-Baxter
/// operator.
pub fn rbo_dim2(a: Scalar, b: Scalar) -> Matrix {
    Matrix::from_rows(vec![vec![Scalar::zero(), a], vec![Scalar::zero(), b]]).expect("rectangular")
}

/// The nine-parameter family of square operators on [`ly_dim4`]; every
/// member is a Rota-Baxter operator.
pub fn rbo_dim4(params: [Scalar; 9]) -> Matrix {
    let [a, b, c, d, e, f, g, h, k] = params;
    let zero = Scalar::zero;
    Matrix::from_rows(vec![
        vec![zero(), a, zero(), zero()],
        vec![zero(), zero(), zero(), zero()],
        vec![b, c, d, e],
        vec![f, g, h, k],
    ])
    .expect("rectangular")
}

/// The 2-dimensional pre-Lie-Yamaguti algebra with `e2*e2 = a e1`,
/// `e2*e1 = -b e1`, `{e1,e2,e2} = b^2 e1`, `{e2,e2,e2} = -ab e1`. Its
/// subadjacent Lie-Yamaguti algebra at `a = b = 1` is [`ly_dim2`].
pub fn pre_ly_dim2(a: &Scalar, b: &Scalar) -> PreLyAlgebra {
    PreLyAlgebra::from_sparse(
        2,
        &[(1, 1, unit(2, 0, a.clone())), (1, 0, unit(2, 0, -b))],
        &[
            (0, 1, 1, unit(2, 0, b * b)),
            (1, 1, 1, unit(2, 0, -&(a * b))),
        ],
    )
    .expect("valid table")
}

/// The 4-dimensional pre-Lie-Yamaguti algebra with `e2*e2 = a e1` and
/// `{e2,e2,e2} = -a^2 e4`.
pub fn pre_ly_dim4(a: &Scalar) -> PreLyAlgebra {
    PreLyAlgebra::from_sparse(
        4,
        &[(1, 1, unit(4, 0, a.clone()))],
        &[(1, 1, 1, unit(4, 3, -&(a * a)))],
    )
    .expect("valid table")
}

/// The symplectic structure `omega(e1,e2) = c` on a 2-dimensional space.
pub fn omega_dim2(c: Scalar) -> SymplecticForm {
    let neg = -&c;
    SymplecticForm::new(
        Matrix::from_rows(vec![vec![Scalar::zero(), c], vec![neg, Scalar::zero()]])
            .expect("rectangular"),
    )
    .expect("antisymmetric and nondegenerate")
}
