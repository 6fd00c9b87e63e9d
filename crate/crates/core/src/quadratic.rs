//! Invariant bilinear forms on Lie-Yamaguti algebras.
//!
//! A quadratic Lie-Yamaguti algebra carries a nondegenerate symmetric form
//! `B` that is invariant for both brackets:
//!
//! ```text
//! B([x,y],z)      = -B(y,[x,z])
//! B([[x,y,z]],w)  =  B(x,[[w,z,y]])
//! ```
//!
//! These force the derived identity `B([[x,y,z]],w) = -B(z,[[x,y,w]])`, and
//! the musical map `x -> B(x,.)` intertwines the adjoint representation with
//! the coadjoint one.

use crate::error::Error;
use crate::linalg::{Matrix, Vector};
use crate::ly::LyAlgebra;
use crate::rep::{adjoint_rep, dual_rep};
use crate::report::{CheckReport, Witness};
use crate::scalar::Scalar;

/// A bilinear form given by its Gram matrix (`gram[i][j] = B(e_i, e_j)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self, Error> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        Ok(BilinearForm { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Scalar {
        x.dot(&self.gram.apply(y))
    }

    /// The matrix of the musical map `x -> B(x,.)` into dual-basis
    /// coordinates; under the pairing `<a,x> = sum_i a_i x_i` this is the
    /// transposed Gram matrix. Fails when the form is degenerate.
    pub fn sharp(&self) -> Result<Matrix, Error> {
        if self.gram.rank() != self.dim() {
            return Err(Error::Singular);
        }
        Ok(self.gram.transpose())
    }
}

fn scalar_witness(s: Scalar) -> Vector {
    Vector::from_entries(vec![s])
}

/// Verifies symmetry, nondegeneracy, both invariance conditions, and the
/// derived invariance identity (reported separately as
/// `invariance-ternary-derived`).
pub fn check_quadratic(a: &LyAlgebra, form: &BilinearForm) -> Result<CheckReport, Error> {
    let n = a.dim();
    if form.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: form.dim(),
        });
    }
    let mut report = CheckReport::with_axioms(&[
        "symmetric",
        "nondegenerate",
        "invariance-binary",
        "invariance-ternary",
        "invariance-ternary-derived",
    ]);
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = form.gram.get(i, j).clone();
            let rhs = form.gram.get(j, i).clone();
            if lhs != rhs {
                report.record(Witness::new(
                    "symmetric",
                    &[i, j],
                    scalar_witness(lhs),
                    scalar_witness(rhs),
                ));
            }
        }
    }
    if let Some(kernel) = form.gram.kernel_vector() {
        report.record(Witness::new("nondegenerate", &[], kernel, Vector::zero(n)));
    }
    let basis: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i)).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = form.eval(a.binary_const(i, j), &basis[k]);
                let rhs = -form.eval(&basis[j], a.binary_const(i, k));
                if lhs != rhs {
                    report.record(Witness::new(
                        "invariance-binary",
                        &[i, j, k],
                        scalar_witness(lhs),
                        scalar_witness(rhs),
                    ));
                }
                for l in 0..n {
                    let left = form.eval(a.ternary_const(i, j, k), &basis[l]);
                    let right = form.eval(&basis[i], a.ternary_const(l, k, j));
                    if left != right {
                        report.record(Witness::new(
                            "invariance-ternary",
                            &[i, j, k, l],
                            scalar_witness(left.clone()),
                            scalar_witness(right),
                        ));
                    }
                    let derived = -form.eval(&basis[k], a.ternary_const(i, j, l));
                    if left != derived {
                        report.record(Witness::new(
                            "invariance-ternary-derived",
                            &[i, j, k, l],
                            scalar_witness(left),
                            scalar_witness(derived),
                        ));
                    }
                }
            }
        }
    }
    Ok(report.finish())
}

/// Verifies that the musical map of `form` intertwines the adjoint and
/// coadjoint representations as exact matrix identities (`iso-rho`,
/// `iso-mu`). Matrix witnesses carry the module basis column as the final
/// index.
pub fn check_adjoint_coadjoint_iso(
    a: &LyAlgebra,
    form: &BilinearForm,
) -> Result<CheckReport, Error> {
    let n = a.dim();
    if form.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: form.dim(),
        });
    }
    let sharp = form.sharp()?;
    let adj = adjoint_rep(a);
    let coadj = dual_rep(&adj);
    let mut report = CheckReport::with_axioms(&["iso-rho", "iso-mu"]);
    let witness_columns =
        |report: &mut CheckReport, axiom: &str, idx: &[usize], lhs: &Matrix, rhs: &Matrix| {
            if lhs == rhs {
                return;
            }
            let mut indices = idx.to_vec();
            for v in 0..n {
                let l = lhs.col(v);
                let r = rhs.col(v);
                if l != r {
                    indices.push(v);
                    report.record(Witness::new(axiom, &indices, l, r));
                    indices.pop();
                }
            }
        };
    for i in 0..n {
        let lhs = sharp.mul(adj.rho(i));
        let rhs = coadj.rho(i).mul(&sharp);
        witness_columns(&mut report, "iso-rho", &[i], &lhs, &rhs);
        for j in 0..n {
            let lhs = sharp.mul(adj.mu(i, j));
            let rhs = coadj.mu(i, j).mul(&sharp);
            witness_columns(&mut report, "iso-mu", &[i, j], &lhs, &rhs);
        }
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn abelian_algebra_with_identity_gram_is_quadratic() {
        let a = LyAlgebra::zero(2);
        let form = BilinearForm::new(Matrix::identity(2)).unwrap();
        assert!(check_quadratic(&a, &form).unwrap().passed());
        assert!(check_adjoint_coadjoint_iso(&a, &form).unwrap().passed());
    }

    #[test]
    fn trace_form_is_invariant_on_sl2() {
        let a = samples::sl2_ly();
        let form = samples::killing_form_sl2();
        assert!(check_quadratic(&a, &form).unwrap().passed());
    }

    #[test]
    fn identity_gram_fails_on_the_two_dimensional_example() {
        let a = samples::ly_dim2();
        let form = BilinearForm::new(Matrix::identity(2)).unwrap();
        let report = check_quadratic(&a, &form).unwrap();
        assert!(!report.passed());
        // B([e1,e2],e1) = B(e1,e1) = 1 while -B(e2,[e1,e1]) = 0.
        let w = report
            .witnesses()
            .iter()
            .find(|w| w.axiom == "invariance-binary" && w.indices == vec![1, 2, 1])
            .expect("expected the documented witness");
        assert_eq!(w.lhs, Vector::from_ints(&[1]));
        assert_eq!(w.rhs, Vector::from_ints(&[0]));
    }

    #[test]
    fn sharp_matrices() {
        let id = BilinearForm::new(Matrix::identity(2)).unwrap();
        assert_eq!(id.sharp().unwrap(), Matrix::identity(2));
        let killing = samples::killing_form_sl2();
        assert_eq!(killing.sharp().unwrap(), killing.gram().clone());
        let singular = BilinearForm::new(Matrix::from_int_rows(&[&[1, 1], &[2, 2]])).unwrap();
        assert!(matches!(singular.sharp(), Err(Error::Singular)));
    }

    #[test]
    fn asymmetric_gram_is_witnessed() {
        let a = LyAlgebra::zero(2);
        let form = BilinearForm::new(Matrix::from_int_rows(&[&[1, 2], &[3, 4]])).unwrap();
        let report = check_quadratic(&a, &form).unwrap();
        assert_eq!(report.counts()["symmetric"], 1);
    }

    #[test]
    fn degenerate_gram_carries_a_kernel_witness() {
        let a = LyAlgebra::zero(2);
        let form = BilinearForm::new(Matrix::from_int_rows(&[&[1, 1], &[1, 1]])).unwrap();
        let report = check_quadratic(&a, &form).unwrap();
        let w = report
            .witnesses()
            .iter()
            .find(|w| w.axiom == "nondegenerate")
            .unwrap();
        assert!(form.gram().apply(&w.lhs).is_zero());
        assert!(!w.lhs.is_zero());
    }

    #[test]
    fn sharp_is_a_representation_homomorphism() {
        // The intertwining conditions are exactly the representation
        // homomorphism equations for the musical map.
        let a = samples::sl2_ly();
        let sharp = samples::killing_form_sl2().sharp().unwrap();
        let adj = adjoint_rep(&a);
        let coadj = dual_rep(&adj);
        let report = crate::rep::check_rep_homomorphism(&sharp, &adj, &coadj).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn perturbed_trace_form_fails_the_iso() {
        let a = samples::sl2_ly();
        let mut gram = samples::killing_form_sl2().gram().clone();
        gram.set(0, 1, Scalar::from_int(1));
        gram.set(1, 0, Scalar::from_int(1));
        let form = BilinearForm::new(gram).unwrap();
        assert!(!check_quadratic(&a, &form).unwrap().passed());
        assert!(!check_adjoint_coadjoint_iso(&a, &form).unwrap().passed());
    }
}
