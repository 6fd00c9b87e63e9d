//! Relative Rota-Baxter operators.
//!
//! A linear map `T` from a module `V` into the algebra is a relative
//! Rota-Baxter operator for a representation `(rho, mu)` when
//!
//! ```text
//! [Tu,Tv]      = T( rho(Tu)v - rho(Tv)u )
//! [[Tu,Tv,Tw]] = T( D(Tu,Tv)w + mu(Tv,Tw)u - mu(Tu,Tw)v )
//! ```
//!
//! Such an operator pushes the brackets back onto `V` and turns it into a
//! pre-Lie-Yamaguti algebra via `u*v = rho(Tu)v`, `{u,v,w} = mu(Tv,Tw)u`.

use crate::error::Error;
use crate::linalg::{Matrix, Vector};
use crate::ly::LyAlgebra;
use crate::pre_ly::PreLyAlgebra;
use crate::rep::{adjoint_rep, derived_d, Representation};
use crate::report::CheckReport;

fn check_shape(r: &Representation, t: &Matrix) -> Result<(), Error> {
    if t.rows() != r.base().dim() {
        return Err(Error::DimensionMismatch {
            expected: r.base().dim(),
            found: t.rows(),
        });
    }
    if t.cols() != r.vdim() {
        return Err(Error::DimensionMismatch {
            expected: r.vdim(),
            found: t.cols(),
        });
    }
    Ok(())
}

/// Verifies the two defining equations on all module basis tuples
/// (`rbo-binary` on pairs, `rbo-ternary` on triples). Column `k` of `t` is
/// the image of the `k`-th module basis vector.
pub fn check_relative_rbo(r: &Representation, t: &Matrix) -> Result<CheckReport, Error> {
    check_shape(r, t)?;
    let a = r.base();
    let m = r.vdim();
    let d = derived_d(r);
    let images: Vec<Vector> = (0..m).map(|k| t.col(k)).collect();
    let mut report = CheckReport::with_axioms(&["rbo-binary", "rbo-ternary"]);
    for u in 0..m {
        for v in 0..m {
            let lhs = a.bracket2(&images[u], &images[v])?;
            let inner = r
                .rho_of(&images[u])
                .col(v)
                .sub(&r.rho_of(&images[v]).col(u));
            let rhs = t.apply(&inner);
            report.expect_eq("rbo-binary", &[u, v], lhs, rhs);
        }
    }
    for u in 0..m {
        for v in 0..m {
            let d_uv = d.of(&images[u], &images[v]);
            for w in 0..m {
                let lhs = a.bracket3(&images[u], &images[v], &images[w])?;
                let inner = d_uv
                    .col(w)
                    .add(&r.mu_of(&images[v], &images[w]).col(u))
                    .sub(&r.mu_of(&images[u], &images[w]).col(v));
                let rhs = t.apply(&inner);
                report.expect_eq("rbo-ternary", &[u, v, w], lhs, rhs);
            }
        }
    }
    Ok(report.finish())
}

/// A Rota-Baxter operator is the special case of a square operator checked
/// against the adjoint representation.
pub fn check_rbo(a: &LyAlgebra, t: &Matrix) -> Result<CheckReport, Error> {
    if !t.is_square() {
        return Err(Error::NotSquare {
            rows: t.rows(),
            cols: t.cols(),
        });
    }
    check_relative_rbo(&adjoint_rep(a), t)
}

/// The pre-Lie-Yamaguti algebra a relative Rota-Baxter operator induces on
/// the module: `u*v = rho(Tu)v`, `{u,v,w} = mu(Tv,Tw)u`.
///
/// Fails with [`Error::RboViolation`] when `t` does not pass
/// [`check_relative_rbo`].
pub fn induced_pre_ly(r: &Representation, t: &Matrix) -> Result<PreLyAlgebra, Error> {
    let check = check_relative_rbo(r, t)?;
    if !check.passed() {
        return Err(Error::RboViolation(check));
    }
    let m = r.vdim();
    let images: Vec<Vector> = (0..m).map(|k| t.col(k)).collect();
    let mut star = vec![vec![Vector::zero(m); m]; m];
    let mut braces = vec![vec![vec![Vector::zero(m); m]; m]; m];
    for u in 0..m {
        let rho_tu = r.rho_of(&images[u]);
        for v in 0..m {
            star[u][v] = rho_tu.col(v);
        }
    }
    for v in 0..m {
        for w in 0..m {
            let mu_tv_tw = r.mu_of(&images[v], &images[w]);
            for u in 0..m {
                braces[u][v][w] = mu_tv_tw.col(u);
            }
        }
    }
    PreLyAlgebra::from_tensors(star, braces)
}

/// A deterministic basis of the column space of `t`: the columns at the
/// pivot positions of its reduced row echelon form.
pub fn image_basis(t: &Matrix) -> Vec<Vector> {
    // The rank of the leading columns grows exactly at pivot positions.
    let mut pivots = Vec::new();
    let mut rank = 0;
    let mut leading = Vec::new();
    for j in 0..t.cols() {
        leading.push(t.col(j));
        let sub = Matrix::from_cols(t.rows(), &leading).expect("columns share the row count");
        if sub.rank() > rank {
            pivots.push(j);
            rank += 1;
        }
    }
    pivots.into_iter().map(|j| t.col(j)).collect()
}

/// Verifies that `t` is a homomorphism from the subadjacent algebra of the
/// induced pre-Lie-Yamaguti structure into the base algebra, and that the
/// image of `t` is a closed subspace (`image/span-*`).
pub fn check_rbo_homomorphism(r: &Representation, t: &Matrix) -> Result<CheckReport, Error> {
    let induced = induced_pre_ly(r, t)?;
    let sub = crate::pre_ly::subadjacent(&induced);
    let a = r.base();
    let m = r.vdim();
    let images: Vec<Vector> = (0..m).map(|k| t.col(k)).collect();
    let mut report = CheckReport::with_axioms(&["hom-binary", "hom-ternary"]);
    for u in 0..m {
        for v in 0..m {
            let lhs = t.apply(sub.binary_const(u, v));
            let rhs = a.bracket2(&images[u], &images[v])?;
            report.expect_eq("hom-binary", &[u, v], lhs, rhs);
            for w in 0..m {
                let lhs = t.apply(sub.ternary_const(u, v, w));
                let rhs = a.bracket3(&images[u], &images[v], &images[w])?;
                report.expect_eq("hom-ternary", &[u, v, w], lhs, rhs);
            }
        }
    }
    let image = image_basis(t);
    let closure = crate::ly::is_closed_subspace(a, &image)?;
    report.absorb("image", closure);
    Ok(report.finish())
}

/// The compatible pre-Lie-Yamaguti structure an invertible relative
/// Rota-Baxter operator induces on the algebra itself:
///
/// ```text
/// x*y = T rho(x) T^{-1} y,   {x,y,z} = T mu(y,z) T^{-1} x.
/// ```
///
/// The subadjacent algebra of the result is the base algebra, tensor by
/// tensor. Fails when `t` is singular or violates the Rota-Baxter
/// equations.
pub fn compatible_pre_ly_from_invertible_rbo(
    r: &Representation,
    t: &Matrix,
) -> Result<PreLyAlgebra, Error> {
    check_shape(r, t)?;
    if !t.is_square() {
        return Err(Error::NotSquare {
            rows: t.rows(),
            cols: t.cols(),
        });
    }
    let t_inv = t.invert()?;
    let check = check_relative_rbo(r, t)?;
    if !check.passed() {
        return Err(Error::RboViolation(check));
    }
    let n = r.base().dim();
    let basis: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i)).collect();
    let mut star = vec![vec![Vector::zero(n); n]; n];
    let mut braces = vec![vec![vec![Vector::zero(n); n]; n]; n];
    for i in 0..n {
        let conj = t.mul(&r.rho_of(&basis[i])).mul(&t_inv);
        for j in 0..n {
            star[i][j] = conj.col(j);
        }
    }
    for j in 0..n {
        for k in 0..n {
            let conj = t.mul(&r.mu_of(&basis[j], &basis[k])).mul(&t_inv);
            for i in 0..n {
                braces[i][j][k] = conj.col(i);
            }
        }
    }
    PreLyAlgebra::from_tensors(star, braces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pre_ly::{check_pre_ly_axioms, check_pre_ly_lemma, subadjacent};
    use crate::rep::dual_rep;
    use crate::samples;
    use crate::scalar::Scalar;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn e(dim: usize, i: usize) -> Vector {
        Vector::basis(dim, i)
    }

    #[test]
    fn the_two_dimensional_family_passes() {
        let a = samples::ly_dim2();
        for (p, q) in [(1, 1), (2, 3), (-1, 5)] {
            let t = samples::rbo_dim2(s(p), s(q));
            assert!(check_rbo(&a, &t).unwrap().passed(), "failed at ({p},{q})");
        }
        let t = samples::rbo_dim2(Scalar::new(5, 3).unwrap(), Scalar::new(-1, 2).unwrap());
        assert!(check_rbo(&a, &t).unwrap().passed());
    }

    #[test]
    fn zero_and_identity_operators() {
        let a = samples::ly_dim2();
        assert!(check_rbo(&a, &Matrix::zero(2, 2)).unwrap().passed());
        let report = check_rbo(&a, &Matrix::identity(2)).unwrap();
        assert!(!report.passed());
        let w = report
            .witnesses()
            .iter()
            .find(|w| w.axiom == "rbo-binary" && w.indices == vec![1, 2])
            .expect("binary witness at (1,2)");
        assert_eq!(w.lhs, e(2, 0));
        assert_eq!(w.rhs, e(2, 0).scale(&s(2)));
    }

    #[test]
    fn the_four_dimensional_family_passes() {
        let a = samples::ly_dim4();
        let inst = |v: [i64; 9]| samples::rbo_dim4(v.map(Scalar::from_int));
        assert!(check_rbo(&a, &inst([1, 2, 3, 4, 5, 6, 7, 8, 9]))
            .unwrap()
            .passed());
        assert!(check_rbo(&a, &inst([-3, 1, 0, 2, 7, -5, 4, 0, 11]))
            .unwrap()
            .passed());
        let mut params = [0i64; 9].map(Scalar::from_int);
        params[0] = Scalar::new(1, 2).unwrap();
        params[4] = Scalar::new(-5, 3).unwrap();
        params[8] = Scalar::new(7, 4).unwrap();
        assert!(check_rbo(&a, &samples::rbo_dim4(params)).unwrap().passed());
    }

    #[test]
    fn induced_tables_match_the_closed_form() {
        // With T(e2) = a e1 + b e2 on the 2-dimensional algebra the induced
        // products are e2*e2 = a e1, e2*e1 = -b e1, {e1,e2,e2} = b^2 e1,
        // {e2,e2,e2} = -ab e1.
        let a = samples::ly_dim2();
        let adj = adjoint_rep(&a);
        let t = samples::rbo_dim2(s(2), s(3));
        let induced = induced_pre_ly(&adj, &t).unwrap();
        assert_eq!(induced, samples::pre_ly_dim2(&s(2), &s(3)));
        assert!(check_pre_ly_axioms(&induced).passed());
        assert!(check_pre_ly_lemma(&induced).passed());
    }

    #[test]
    fn zero_operator_induces_the_zero_algebra() {
        let adj = adjoint_rep(&samples::ly_dim2());
        let induced = induced_pre_ly(&adj, &Matrix::zero(2, 2)).unwrap();
        assert_eq!(induced, PreLyAlgebra::zero(2));
    }

    #[test]
    fn invalid_operator_is_rejected() {
        let adj = adjoint_rep(&samples::ly_dim2());
        assert!(matches!(
            induced_pre_ly(&adj, &Matrix::identity(2)),
            Err(Error::RboViolation(_))
        ));
    }

    #[test]
    fn subadjacent_of_the_induced_algebra_recovers_the_base() {
        let a = samples::ly_dim2();
        let adj = adjoint_rep(&a);
        let t = samples::rbo_dim2(s(1), s(1));
        let induced = induced_pre_ly(&adj, &t).unwrap();
        assert_eq!(subadjacent(&induced), a);
    }

    #[test]
    fn operator_is_a_homomorphism_onto_a_closed_image() {
        let a2 = samples::ly_dim2();
        let adj2 = adjoint_rep(&a2);
        let t = samples::rbo_dim2(s(1), s(1));
        assert!(check_rbo_homomorphism(&adj2, &t).unwrap().passed());
        assert!(check_rbo_homomorphism(&adj2, &Matrix::zero(2, 2))
            .unwrap()
            .passed());

        let a4 = samples::ly_dim4();
        let adj4 = adjoint_rep(&a4);
        let t4 = samples::rbo_dim4([1, 2, 3, 4, 5, 6, 7, 8, 9].map(Scalar::from_int));
        assert!(check_rbo_homomorphism(&adj4, &t4).unwrap().passed());
    }

    #[test]
    fn image_basis_is_the_pivot_columns() {
        let t = samples::rbo_dim2(s(1), s(1));
        let image = image_basis(&t);
        assert_eq!(image, vec![Vector::from_ints(&[1, 1])]);
        assert!(image_basis(&Matrix::zero(2, 2)).is_empty());
        assert_eq!(image_basis(&Matrix::identity(2)).len(), 2);
    }

    #[test]
    fn compatible_structure_from_the_identity_on_the_zero_algebra() {
        let zero = LyAlgebra::zero(2);
        let rep = Representation::zero(zero.clone(), 2);
        let p = compatible_pre_ly_from_invertible_rbo(&rep, &Matrix::identity(2)).unwrap();
        assert_eq!(p, PreLyAlgebra::zero(2));
        assert_eq!(subadjacent(&p), zero);
    }

    #[test]
    fn compatible_structure_from_the_coadjoint_operator() {
        // T with T(f1) = -e2, T(f2) = e1 is a skew invertible operator for
        // the coadjoint representation; the compatible products live on the
        // algebra itself.
        let a = samples::ly_dim2();
        let coadj = dual_rep(&adjoint_rep(&a));
        let t = Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]);
        assert!(check_relative_rbo(&coadj, &t).unwrap().passed());
        let p = compatible_pre_ly_from_invertible_rbo(&coadj, &t).unwrap();
        let expected = PreLyAlgebra::from_sparse(
            2,
            &[(0, 1, e(2, 0)), (1, 1, e(2, 1))],
            &[(1, 1, 0, e(2, 0)), (1, 1, 1, e(2, 1))],
        )
        .unwrap();
        assert_eq!(p, expected);
        assert_eq!(subadjacent(&p), a);
    }

    #[test]
    fn singular_operators_cannot_be_compatible() {
        let a = samples::ly_dim2();
        let adj = adjoint_rep(&a);
        let t = samples::rbo_dim2(s(1), s(0));
        assert!(check_rbo(&a, &t).unwrap().passed());
        assert!(matches!(
            compatible_pre_ly_from_invertible_rbo(&adj, &t),
            Err(Error::Singular)
        ));
    }

    #[test]
    fn single_column_into_the_kernel_of_mu_is_trivially_closed() {
        // On the zero algebra every mu vanishes, so any rank-one operator
        // passes the ternary equation for free.
        let zero = LyAlgebra::zero(3);
        let rep = adjoint_rep(&zero);
        let mut t = Matrix::zero(3, 3);
        t.set(0, 0, s(5));
        assert!(check_relative_rbo(&rep, &t).unwrap().passed());
    }
}
