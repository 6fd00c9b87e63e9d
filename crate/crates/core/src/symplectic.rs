//! Symplectic structures on Lie-Yamaguti algebras.
//!
//! A symplectic structure is a nondegenerate skew-symmetric form `omega`
//! whose two closedness conditions couple it to the brackets:
//!
//! ```text
//! omega(x,[y,z]) + omega(y,[z,x]) + omega(z,[x,y]) = 0
//! omega(z,[[x,y,w]]) - omega(x,[[w,z,y]]) + omega(y,[[w,z,x]])
//!   - omega(w,[[x,y,z]]) = 0
//! ```
//!
//! Through the pairing `omega(x,y) = <T^{-1}x, y>` a symplectic structure is
//! the same thing as a skew-symmetric invertible relative Rota-Baxter
//! operator `T` for the coadjoint representation, and it induces a
//! compatible pre-Lie-Yamaguti structure by solving
//!
//! ```text
//! omega(x*y,z)     = -omega(y,[x,z])
//! omega({x,y,z},w) =  omega(x,[[w,z,y]])
//! ```

use crate::error::Error;
use crate::linalg::{Matrix, Vector};
use crate::ly::LyAlgebra;
use crate::pre_ly::PreLyAlgebra;
use crate::rbo::check_relative_rbo;
use crate::rep::{adjoint_rep, dual_rep};
use crate::report::{CheckReport, Witness};
use crate::scalar::Scalar;

/// A nondegenerate skew-symmetric bilinear form; both properties are
/// enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticForm {
    omega: Matrix,
}

impl SymplecticForm {
    pub fn new(omega: Matrix) -> Result<Self, Error> {
        if !omega.is_square() {
            return Err(Error::NotSquare {
                rows: omega.rows(),
                cols: omega.cols(),
            });
        }
        if !omega.is_antisymmetric() {
            return Err(Error::NotAntisymmetric);
        }
        if omega.rank() != omega.rows() {
            return Err(Error::Degenerate);
        }
        Ok(SymplecticForm { omega })
    }

    pub fn dim(&self) -> usize {
        self.omega.rows()
    }

    pub fn omega(&self) -> &Matrix {
        &self.omega
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Scalar {
        x.dot(&self.omega.apply(y))
    }
}

fn scalar_witness(s: Scalar) -> Vector {
    Vector::from_entries(vec![s])
}

/// Verifies both closedness conditions on all basis tuples (`symp-binary`
/// on triples, `symp-ternary` on quadruples).
pub fn check_symplectic(a: &LyAlgebra, w: &SymplecticForm) -> Result<CheckReport, Error> {
    let n = a.dim();
    if w.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: w.dim(),
        });
    }
    let basis: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i)).collect();
    let mut report = CheckReport::with_axioms(&["symp-binary", "symp-ternary"]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let sum = w.eval(&basis[i], a.binary_const(j, k))
                    + w.eval(&basis[j], a.binary_const(k, i))
                    + w.eval(&basis[k], a.binary_const(i, j));
                if !sum.is_zero() {
                    report.record(Witness::new(
                        "symp-binary",
                        &[i, j, k],
                        scalar_witness(sum),
                        scalar_witness(Scalar::zero()),
                    ));
                }
                for l in 0..n {
                    // (x,y,z,w) = (i,j,k,l)
                    let sum = w.eval(&basis[k], a.ternary_const(i, j, l))
                        - w.eval(&basis[i], a.ternary_const(l, k, j))
                        + w.eval(&basis[j], a.ternary_const(l, k, i))
                        - w.eval(&basis[l], a.ternary_const(i, j, k));
                    if !sum.is_zero() {
                        report.record(Witness::new(
                            "symp-ternary",
                            &[i, j, k, l],
                            scalar_witness(sum),
                            scalar_witness(Scalar::zero()),
                        ));
                    }
                }
            }
        }
    }
    Ok(report.finish())
}

/// The operator `T` from the dual space into the algebra determined by
/// `omega(x,y) = <T^{-1}x, y>`.
///
/// With the pairing `<a,x> = sum_i a_i x_i` the matrix of `T^{-1}` is the
/// transposed omega matrix, so `T` is its inverse. The output is always
/// skew-symmetric in the pairing sense (`T + T^T = 0`).
pub fn t_from_omega(w: &SymplecticForm) -> Matrix {
    w.omega
        .transpose()
        .invert()
        .expect("symplectic forms are nondegenerate")
}

/// Two independent routes to the same verdict: the symplectic check of
/// `(a, w)` and the relative Rota-Baxter check of `t_from_omega(w)` against
/// the coadjoint representation. The two verdicts must agree; a mismatch
/// would mean the toolkit itself is broken.
#[derive(Debug, Clone)]
pub struct RbsymEquivalence {
    pub symplectic: CheckReport,
    pub rbo: CheckReport,
}

impl RbsymEquivalence {
    pub fn verdicts_agree(&self) -> bool {
        self.symplectic.passed() == self.rbo.passed()
    }

    pub fn both_pass(&self) -> bool {
        self.symplectic.passed() && self.rbo.passed()
    }

    /// Flattens into a single report: the two sub-reports under prefixes
    /// plus an `agreement` axiom that fails only on a verdict mismatch.
    pub fn into_report(self) -> CheckReport {
        let mut report = CheckReport::with_axioms(&["agreement"]);
        if !self.verdicts_agree() {
            let as_flag =
                |ok: bool| scalar_witness(if ok { Scalar::one() } else { Scalar::zero() });
            report.record(Witness::new(
                "agreement",
                &[],
                as_flag(self.symplectic.passed()),
                as_flag(self.rbo.passed()),
            ));
        }
        report.absorb("symplectic", self.symplectic);
        report.absorb("rbo", self.rbo);
        report.finish()
    }
}

/// Runs both sides of the symplectic / Rota-Baxter correspondence.
pub fn verify_rbsym_equivalence(
    a: &LyAlgebra,
    w: &SymplecticForm,
) -> Result<RbsymEquivalence, Error> {
    let symplectic = check_symplectic(a, w)?;
    let coadjoint = dual_rep(&adjoint_rep(a));
    let rbo = check_relative_rbo(&coadjoint, &t_from_omega(w))?;
    Ok(RbsymEquivalence { symplectic, rbo })
}

/// The compatible pre-Lie-Yamaguti structure of a symplectic algebra,
/// obtained by solving the two defining linear systems entrywise.
///
/// The result's subadjacent algebra is `a` itself, and it satisfies the
/// derived identity `omega(D{x,y,z},w) = -omega(z,[[x,y,w]])` (checked via
/// [`check_quadratic_pre_ly`](crate::phase::check_quadratic_pre_ly)). Fails
/// with [`Error::SymplecticViolation`] when `(a, w)` is not symplectic.
pub fn compatible_pre_ly_from_symplectic(
    a: &LyAlgebra,
    w: &SymplecticForm,
) -> Result<PreLyAlgebra, Error> {
    let check = check_symplectic(a, w)?;
    if !check.passed() {
        return Err(Error::SymplecticViolation(check));
    }
    let n = a.dim();
    // omega(s, e_k) = (omega^T s)_k, so each constraint row solves through
    // the same inverse used by `t_from_omega`.
    let solve = t_from_omega(w);
    let basis: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i)).collect();
    let mut star = vec![vec![Vector::zero(n); n]; n];
    let mut braces = vec![vec![vec![Vector::zero(n); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let constraints = Vector::from_entries(
                (0..n)
                    .map(|k| -w.eval(&basis[j], a.binary_const(i, k)))
                    .collect(),
            );
            star[i][j] = solve.apply(&constraints);
            for (k, slot) in braces[i][j].iter_mut().enumerate() {
                let constraints = Vector::from_entries(
                    (0..n)
                        .map(|l| w.eval(&basis[i], a.ternary_const(l, k, j)))
                        .collect(),
                );
                *slot = solve.apply(&constraints);
            }
        }
    }
    PreLyAlgebra::from_tensors(star, braces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pre_ly::{check_pre_ly_axioms, subadjacent};
    use crate::samples;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn e(dim: usize, i: usize) -> Vector {
        Vector::basis(dim, i)
    }

    #[test]
    fn form_construction_enforces_the_invariants() {
        assert!(matches!(
            SymplecticForm::new(Matrix::identity(2)),
            Err(Error::NotAntisymmetric)
        ));
        assert!(matches!(
            SymplecticForm::new(Matrix::zero(2, 2)),
            Err(Error::Degenerate)
        ));
        assert!(SymplecticForm::new(Matrix::zero(0, 0)).is_ok());
        assert!(SymplecticForm::new(Matrix::from_int_rows(&[&[0, 1], &[-1, 0]])).is_ok());
    }

    #[test]
    fn the_standard_form_is_symplectic_on_the_two_dimensional_example() {
        let a = samples::ly_dim2();
        assert!(check_symplectic(&a, &samples::omega_dim2(s(1)))
            .unwrap()
            .passed());
        // Both conditions are homogeneous in omega.
        assert!(check_symplectic(&a, &samples::omega_dim2(s(5)))
            .unwrap()
            .passed());
        // Any nondegenerate skew form works on an abelian algebra.
        let zero = LyAlgebra::zero(2);
        assert!(check_symplectic(&zero, &samples::omega_dim2(s(3)))
            .unwrap()
            .passed());
    }

    #[test]
    fn t_from_omega_realizes_the_pairing() {
        let w = samples::omega_dim2(s(1));
        let t = t_from_omega(&w);
        // Skewness: <a, T b> + <b, T a> = 0.
        assert!(t.add(&t.transpose()).is_zero());
        // omega(x,y) = <T^{-1} x, y> on all basis pairs.
        let t_inv = t.invert().unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(
                    w.eval(&e(2, i), &e(2, j)),
                    t_inv.apply(&e(2, i)).dot(&e(2, j))
                );
            }
        }
        // Reconstructing omega from T round-trips.
        assert_eq!(t_inv.transpose(), w.omega().clone());
    }

    #[test]
    fn equivalence_on_the_positive_fixture() {
        let a = samples::ly_dim2();
        let eq = verify_rbsym_equivalence(&a, &samples::omega_dim2(s(1))).unwrap();
        assert!(eq.verdicts_agree());
        assert!(eq.both_pass());
        assert!(eq.into_report().passed());
    }

    #[test]
    fn equivalence_on_the_negative_fixture() {
        // Same binary table, ternary constant retargeted to e2: not
        // symplectic, and the induced operator fails the Rota-Baxter check.
        let broken = LyAlgebra::from_sparse(2, &[(0, 1, e(2, 0))], &[(0, 1, 1, e(2, 1))]).unwrap();
        let eq = verify_rbsym_equivalence(&broken, &samples::omega_dim2(s(1))).unwrap();
        assert!(eq.verdicts_agree());
        assert!(!eq.symplectic.passed());
        assert!(!eq.rbo.passed());
    }

    #[test]
    fn equivalence_on_the_zero_algebra() {
        let zero = LyAlgebra::zero(2);
        let eq = verify_rbsym_equivalence(&zero, &samples::omega_dim2(s(1))).unwrap();
        assert!(eq.both_pass());
    }

    #[test]
    fn compatible_structure_of_the_two_dimensional_example() {
        let a = samples::ly_dim2();
        let p = compatible_pre_ly_from_symplectic(&a, &samples::omega_dim2(s(1))).unwrap();
        let expected = PreLyAlgebra::from_sparse(
            2,
            &[(0, 1, e(2, 0)), (1, 1, e(2, 1))],
            &[(1, 1, 0, e(2, 0)), (1, 1, 1, e(2, 1))],
        )
        .unwrap();
        assert_eq!(p, expected);
        assert!(check_pre_ly_axioms(&p).passed());
        assert_eq!(subadjacent(&p), a);
    }

    #[test]
    fn compatible_structure_of_the_zero_algebra_is_zero() {
        let zero = LyAlgebra::zero(2);
        let p = compatible_pre_ly_from_symplectic(&zero, &samples::omega_dim2(s(1))).unwrap();
        assert_eq!(p, PreLyAlgebra::zero(2));
    }

    #[test]
    fn non_symplectic_input_is_rejected() {
        let broken = LyAlgebra::from_sparse(2, &[(0, 1, e(2, 0))], &[(0, 1, 1, e(2, 1))]).unwrap();
        assert!(matches!(
            compatible_pre_ly_from_symplectic(&broken, &samples::omega_dim2(s(1))),
            Err(Error::SymplecticViolation(_))
        ));
    }

    #[test]
    fn the_two_compatible_constructions_agree() {
        let a = samples::ly_dim2();
        let w = samples::omega_dim2(s(1));
        let from_omega = compatible_pre_ly_from_symplectic(&a, &w).unwrap();
        let coadjoint = dual_rep(&adjoint_rep(&a));
        let from_rbo =
            crate::rbo::compatible_pre_ly_from_invertible_rbo(&coadjoint, &t_from_omega(&w))
                .unwrap();
        assert_eq!(from_omega, from_rbo);
    }
}
