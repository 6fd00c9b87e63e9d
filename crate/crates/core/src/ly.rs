//! Lie-Yamaguti algebras as structure-constant data.
//!
//! A Lie-Yamaguti algebra carries an antisymmetric binary bracket `[.,.]` and
//! a ternary bracket `[[.,.,.]]` antisymmetric in its first two slots,
//! subject to four compatibility axioms:
//!
//! - `ly1`: the cyclic sum `[[x,y],z] + [[y,z],x] + [[z,x],y] + [[x,y,z]] +
//!   [[y,z,x]] + [[z,x,y]]` vanishes;
//! - `ly2`: `[[[x,y],z,w]] + [[[y,z],x,w]] + [[[z,x],y,w]]` vanishes;
//! - `ly3`: `[[x,y,[z,w]]] = [[[x,y,z]],w] + [z,[[x,y,w]]]`;
//! - `ly4`: `[[x,y,[[z,w,t]]]] = [[[[x,y,z]],w,t]] + [[z,[[x,y,w]],t]] +
//!   [[z,w,[[x,y,t]]]]`.
//!
//! Both brackets are multilinear, so checking the axioms on all basis tuples
//! is sound and complete; the checkers below do exactly that and report every
//! violation.

use crate::error::Error;
use crate::linalg::{Matrix, Vector};
use crate::report::{CheckReport, Witness};
use crate::scalar::Scalar;

/// A finite-dimensional Lie-Yamaguti algebra given by structure constants.
///
/// `binary[i][j]` holds the coordinates of the bracket of the `i`-th and
/// `j`-th basis vectors; `ternary[i][j][k]` those of the ternary bracket.
/// Antisymmetry (`binary[i][j] = -binary[j][i]`, same for the first two
/// ternary slots) is a construction invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyAlgebra {
    dim: usize,
    binary: Vec<Vec<Vector>>,
    ternary: Vec<Vec<Vec<Vector>>>,
    labels: Option<Vec<String>>,
}

impl LyAlgebra {
    /// The abelian algebra: every bracket vanishes.
    pub fn zero(dim: usize) -> Self {
        LyAlgebra {
            dim,
            binary: vec![vec![Vector::zero(dim); dim]; dim],
            ternary: vec![vec![vec![Vector::zero(dim); dim]; dim]; dim],
            labels: None,
        }
    }

    /// Builds an algebra from sparse structure constants (0-based indices).
    ///
    /// Unlisted constants default to zero. Entries may be given in either
    /// orientation of the antisymmetric index pair; the complement is filled
    /// in automatically and inconsistent duplicates are rejected. Constants
    /// with a repeated antisymmetric index must be zero.
    pub fn from_sparse(
        dim: usize,
        binary: &[(usize, usize, Vector)],
        ternary: &[(usize, usize, usize, Vector)],
    ) -> Result<Self, Error> {
        let mut alg = LyAlgebra::zero(dim);
        let mut seen_bin = vec![vec![false; dim]; dim];
        for (i, j, coeffs) in binary {
            let (i, j) = (*i, *j);
            check_index(i, dim)?;
            check_index(j, dim)?;
            check_coeffs(coeffs, dim)?;
            if i == j {
                if !coeffs.is_zero() {
                    return Err(Error::NonzeroDiagonal {
                        indices: vec![i + 1, j + 1],
                    });
                }
                continue;
            }
            let negated = coeffs.neg();
            if seen_bin[i][j] {
                if alg.binary[i][j] != *coeffs {
                    return Err(Error::ConflictingEntry {
                        indices: vec![i + 1, j + 1],
                    });
                }
                continue;
            }
            alg.binary[i][j] = coeffs.clone();
            alg.binary[j][i] = negated;
            seen_bin[i][j] = true;
            seen_bin[j][i] = true;
        }
        let mut seen_ter = vec![vec![vec![false; dim]; dim]; dim];
        for (i, j, k, coeffs) in ternary {
            let (i, j, k) = (*i, *j, *k);
            check_index(i, dim)?;
            check_index(j, dim)?;
            check_index(k, dim)?;
            check_coeffs(coeffs, dim)?;
            if i == j {
                if !coeffs.is_zero() {
                    return Err(Error::NonzeroDiagonal {
                        indices: vec![i + 1, j + 1, k + 1],
                    });
                }
                continue;
            }
            if seen_ter[i][j][k] {
                if alg.ternary[i][j][k] != *coeffs {
                    return Err(Error::ConflictingEntry {
                        indices: vec![i + 1, j + 1, k + 1],
                    });
                }
                continue;
            }
            alg.ternary[i][j][k] = coeffs.clone();
            alg.ternary[j][i][k] = coeffs.neg();
            seen_ter[i][j][k] = true;
            seen_ter[j][i][k] = true;
        }
        Ok(alg)
    }

    /// Builds an algebra from full tensors, validating antisymmetry.
    pub fn from_tensors(
        binary: Vec<Vec<Vector>>,
        ternary: Vec<Vec<Vec<Vector>>>,
    ) -> Result<Self, Error> {
        let dim = binary.len();
        let shape_err = |found| Error::DimensionMismatch {
            expected: dim,
            found,
        };
        if ternary.len() != dim {
            return Err(shape_err(ternary.len()));
        }
        for i in 0..dim {
            if binary[i].len() != dim || ternary[i].len() != dim {
                return Err(shape_err(binary[i].len().min(ternary[i].len())));
            }
            for j in 0..dim {
                check_coeffs(&binary[i][j], dim)?;
                if ternary[i][j].len() != dim {
                    return Err(shape_err(ternary[i][j].len()));
                }
                for k in 0..dim {
                    check_coeffs(&ternary[i][j][k], dim)?;
                }
            }
        }
        for i in 0..dim {
            for j in 0..=i {
                if binary[i][j] != binary[j][i].neg() {
                    return Err(Error::ConflictingEntry {
                        indices: vec![i + 1, j + 1],
                    });
                }
                for k in 0..dim {
                    if ternary[i][j][k] != ternary[j][i][k].neg() {
                        return Err(Error::ConflictingEntry {
                            indices: vec![i + 1, j + 1, k + 1],
                        });
                    }
                }
            }
        }
        Ok(LyAlgebra {
            dim,
            binary,
            ternary,
            labels: None,
        })
    }

    pub(crate) fn from_tensors_unchecked(
        binary: Vec<Vec<Vector>>,
        ternary: Vec<Vec<Vec<Vector>>>,
    ) -> Self {
        let dim = binary.len();
        LyAlgebra {
            dim,
            binary,
            ternary,
            labels: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Attaches display names to the basis vectors.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, Error> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Structure constants of the binary bracket of basis vectors `i`, `j`.
    pub fn binary_const(&self, i: usize, j: usize) -> &Vector {
        &self.binary[i][j]
    }

    /// Structure constants of the ternary bracket of basis vectors.
    pub fn ternary_const(&self, i: usize, j: usize, k: usize) -> &Vector {
        &self.ternary[i][j][k]
    }

    /// All nonzero binary constants with `i < j`, in index order.
    pub fn binary_entries(&self) -> Vec<(usize, usize, Vector)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if !self.binary[i][j].is_zero() {
                    out.push((i, j, self.binary[i][j].clone()));
                }
            }
        }
        out
    }

    /// All nonzero ternary constants with `i < j`, in index order.
    pub fn ternary_entries(&self) -> Vec<(usize, usize, usize, Vector)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in 0..self.dim {
                    if !self.ternary[i][j][k].is_zero() {
                        out.push((i, j, k, self.ternary[i][j][k].clone()));
                    }
                }
            }
        }
        out
    }

    /// Bilinear extension of the binary bracket.
    pub fn bracket2(&self, x: &Vector, y: &Vector) -> Result<Vector, Error> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let mut out = Vector::zero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                out.add_scaled_assign(&(xi * yj), &self.binary[i][j]);
            }
        }
        Ok(out)
    }

    /// Trilinear extension of the ternary bracket.
    pub fn bracket3(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, Error> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        self.check_dim(z)?;
        let mut out = Vector::zero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate() {
                    if zk.is_zero() {
                        continue;
                    }
                    out.add_scaled_assign(&(&xy * zk), &self.ternary[i][j][k]);
                }
            }
        }
        Ok(out)
    }

    fn check_dim(&self, v: &Vector) -> Result<(), Error> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    // Mixed-slot bracket helpers: `b` marks a basis index, `v` a coordinate
    // vector. These keep the basis-tuple check loops at table-lookup cost.

    pub(crate) fn bin_vb(&self, v: &Vector, k: usize) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (p, c) in v.iter().enumerate() {
            out.add_scaled_assign(c, &self.binary[p][k]);
        }
        out
    }

    pub(crate) fn bin_bv(&self, i: usize, v: &Vector) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (p, c) in v.iter().enumerate() {
            out.add_scaled_assign(c, &self.binary[i][p]);
        }
        out
    }

    pub(crate) fn tern_vbb(&self, v: &Vector, j: usize, k: usize) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (p, c) in v.iter().enumerate() {
            out.add_scaled_assign(c, &self.ternary[p][j][k]);
        }
        out
    }

    pub(crate) fn tern_bvb(&self, i: usize, v: &Vector, k: usize) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (p, c) in v.iter().enumerate() {
            out.add_scaled_assign(c, &self.ternary[i][p][k]);
        }
        out
    }

    pub(crate) fn tern_bbv(&self, i: usize, j: usize, v: &Vector) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (p, c) in v.iter().enumerate() {
            out.add_scaled_assign(c, &self.ternary[i][j][p]);
        }
        out
    }
}

fn check_index(i: usize, dim: usize) -> Result<(), Error> {
    if i >= dim {
        return Err(Error::IndexOutOfRange { index: i, dim });
    }
    Ok(())
}

fn check_coeffs(v: &Vector, dim: usize) -> Result<(), Error> {
    if v.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: v.len(),
        });
    }
    Ok(())
}

/// Verifies the four defining axioms on all basis tuples.
pub fn check_ly_axioms(a: &LyAlgebra) -> CheckReport {
    let n = a.dim;
    let mut report = CheckReport::with_axioms(&["ly1", "ly2", "ly3", "ly4"]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut sum = a.bin_vb(a.binary_const(i, j), k);
                sum = sum.add(&a.bin_vb(a.binary_const(j, k), i));
                sum = sum.add(&a.bin_vb(a.binary_const(k, i), j));
                sum = sum.add(a.ternary_const(i, j, k));
                sum = sum.add(a.ternary_const(j, k, i));
                sum = sum.add(a.ternary_const(k, i, j));
                report.expect_zero("ly1", &[i, j, k], sum);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut sum = a.tern_vbb(a.binary_const(i, j), k, l);
                    sum = sum.add(&a.tern_vbb(a.binary_const(j, k), i, l));
                    sum = sum.add(&a.tern_vbb(a.binary_const(k, i), j, l));
                    report.expect_zero("ly2", &[i, j, k, l], sum);

                    let lhs = a.tern_bbv(i, j, a.binary_const(k, l));
                    let rhs = a
                        .bin_vb(a.ternary_const(i, j, k), l)
                        .add(&a.bin_bv(k, a.ternary_const(i, j, l)));
                    report.expect_eq("ly3", &[i, j, k, l], lhs, rhs);
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    for m in 0..n {
                        let lhs = a.tern_bbv(i, j, a.ternary_const(k, l, m));
                        let rhs = a
                            .tern_vbb(a.ternary_const(i, j, k), l, m)
                            .add(&a.tern_bvb(k, a.ternary_const(i, j, l), m))
                            .add(&a.tern_bbv(k, l, a.ternary_const(i, j, m)));
                        report.expect_eq("ly4", &[i, j, k, l, m], lhs, rhs);
                    }
                }
            }
        }
    }
    report.finish()
}

/// A Lie algebra given by its antisymmetric structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    binary: Vec<Vec<Vector>>,
}

impl LieAlgebra {
    pub fn zero(dim: usize) -> Self {
        LieAlgebra {
            dim,
            binary: vec![vec![Vector::zero(dim); dim]; dim],
        }
    }

    /// Sparse construction with the same antisymmetry normalization as
    /// [`LyAlgebra::from_sparse`].
    pub fn from_sparse(dim: usize, binary: &[(usize, usize, Vector)]) -> Result<Self, Error> {
        let alg = LyAlgebra::from_sparse(dim, binary, &[])?;
        Ok(LieAlgebra {
            dim,
            binary: alg.binary,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn binary_const(&self, i: usize, j: usize) -> &Vector {
        &self.binary[i][j]
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector, Error> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: if x.len() != self.dim {
                    x.len()
                } else {
                    y.len()
                },
            });
        }
        let mut out = Vector::zero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                out.add_scaled_assign(&(xi * yj), &self.binary[i][j]);
            }
        }
        Ok(out)
    }

    fn bin_vb(&self, v: &Vector, k: usize) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (p, c) in v.iter().enumerate() {
            out.add_scaled_assign(c, &self.binary[p][k]);
        }
        out
    }

    /// Checks the Jacobi identity on all basis triples.
    pub fn check_jacobi(&self) -> CheckReport {
        let n = self.dim;
        let mut report = CheckReport::with_axioms(&["jacobi"]);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let sum = self
                        .bin_vb(&self.binary[i][j], k)
                        .add(&self.bin_vb(&self.binary[j][k], i))
                        .add(&self.bin_vb(&self.binary[k][i], j));
                    report.expect_zero("jacobi", &[i, j, k], sum);
                }
            }
        }
        report.finish()
    }
}

/// Endows a Lie algebra with the ternary bracket `[[x,y,z]] := [[x,y],z]`.
///
/// Fails with [`Error::JacobiFailure`] when the input does not satisfy the
/// Jacobi identity; the result always passes [`check_ly_axioms`].
pub fn ly_from_lie(lie: &LieAlgebra) -> Result<LyAlgebra, Error> {
    let jacobi = lie.check_jacobi();
    if !jacobi.passed() {
        return Err(Error::JacobiFailure(jacobi));
    }
    let n = lie.dim;
    let mut ternary = vec![vec![vec![Vector::zero(n); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for (k, slot) in ternary[i][j].iter_mut().enumerate() {
                *slot = lie.bin_vb(&lie.binary[i][j], k);
            }
        }
    }
    Ok(LyAlgebra {
        dim: n,
        binary: lie.binary.clone(),
        ternary,
        labels: None,
    })
}

/// Checks that the linear map `phi` (columns are images of basis vectors)
/// intertwines both brackets of `a` and `b`.
pub fn check_ly_homomorphism(
    phi: &Matrix,
    a: &LyAlgebra,
    b: &LyAlgebra,
) -> Result<CheckReport, Error> {
    if phi.cols() != a.dim {
        return Err(Error::DimensionMismatch {
            expected: a.dim,
            found: phi.cols(),
        });
    }
    if phi.rows() != b.dim {
        return Err(Error::DimensionMismatch {
            expected: b.dim,
            found: phi.rows(),
        });
    }
    let n = a.dim;
    let mut report = CheckReport::with_axioms(&["hom-binary", "hom-ternary"]);
    let images: Vec<Vector> = (0..n).map(|i| phi.col(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = phi.apply(a.binary_const(i, j));
            let rhs = b.bracket2(&images[i], &images[j])?;
            report.expect_eq("hom-binary", &[i, j], lhs, rhs);
            for k in 0..n {
                let lhs = phi.apply(a.ternary_const(i, j, k));
                let rhs = b.bracket3(&images[i], &images[j], &images[k])?;
                report.expect_eq("hom-ternary", &[i, j, k], lhs, rhs);
            }
        }
    }
    Ok(report.finish())
}

/// Whether the span of `basis` is closed under both brackets.
///
/// The report carries at most one witness: the first bracket value that
/// escapes the span (axioms `span-binary` / `span-ternary`; indices refer to
/// positions in `basis`). Fails with [`Error::DependentBasis`] when the given
/// vectors are not linearly independent.
pub fn is_closed_subspace(a: &LyAlgebra, basis: &[Vector]) -> Result<CheckReport, Error> {
    for v in basis {
        if v.len() != a.dim {
            return Err(Error::DimensionMismatch {
                expected: a.dim,
                found: v.len(),
            });
        }
    }
    let span = Matrix::from_cols(a.dim, basis)?;
    if span.rank() != basis.len() {
        return Err(Error::DependentBasis);
    }
    let mut report = CheckReport::with_axioms(&["span-binary", "span-ternary"]);
    let in_span = |v: &Vector| span.solve(v).expect("dimensions match").is_some();
    // Antisymmetry in the leading slots makes p < q sufficient.
    'search: {
        for p in 0..basis.len() {
            for q in (p + 1)..basis.len() {
                let value = a.bracket2(&basis[p], &basis[q])?;
                if !in_span(&value) {
                    let zero = Vector::zero(a.dim);
                    report.record(Witness::new("span-binary", &[p, q], value, zero));
                    break 'search;
                }
            }
        }
        for p in 0..basis.len() {
            for q in (p + 1)..basis.len() {
                for r in 0..basis.len() {
                    let value = a.bracket3(&basis[p], &basis[q], &basis[r])?;
                    if !in_span(&value) {
                        let zero = Vector::zero(a.dim);
                        report.record(Witness::new("span-ternary", &[p, q, r], value, zero));
                        break 'search;
                    }
                }
            }
        }
    }
    Ok(report.finish())
}

/// Convenience constructor for structure-constant vectors: the single
/// coefficient `c * e_k` (0-based `k`) in dimension `dim`.
pub fn unit(dim: usize, k: usize, c: Scalar) -> Vector {
    let mut entries = vec![Scalar::zero(); dim];
    entries[k] = c;
    Vector::from_entries(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn e(dim: usize, i: usize) -> Vector {
        Vector::basis(dim, i)
    }

    #[test]
    fn bracket_tables_of_the_two_dimensional_example() {
        let a = samples::ly_dim2();
        assert_eq!(a.bracket2(&e(2, 0), &e(2, 1)).unwrap(), e(2, 0));
        assert_eq!(a.bracket3(&e(2, 0), &e(2, 1), &e(2, 1)).unwrap(), e(2, 0));
        // Antisymmetry of the bilinear extension.
        let x = Vector::from_ints(&[3, -5]);
        assert!(a.bracket2(&x, &x).unwrap().is_zero());
        assert!(a.bracket3(&x, &x, &e(2, 1)).unwrap().is_zero());
    }

    #[test]
    fn bilinear_expansion_in_dim_four() {
        let a = samples::ly_dim4();
        let x = e(4, 0).add(&e(4, 1));
        assert_eq!(
            a.bracket2(&x, &e(4, 1)).unwrap(),
            e(4, 3).scale(&Scalar::from_int(2))
        );
        assert_eq!(
            a.bracket3(&e(4, 1), &e(4, 0), &e(4, 0)).unwrap(),
            e(4, 3).neg()
        );
    }

    #[test]
    fn axioms_hold_on_the_paper_tables() {
        assert!(check_ly_axioms(&samples::ly_dim2()).passed());
        assert!(check_ly_axioms(&samples::ly_dim4()).passed());
        assert!(check_ly_axioms(&LyAlgebra::zero(3)).passed());
        assert!(check_ly_axioms(&LyAlgebra::zero(0)).passed());
        assert!(check_ly_axioms(&LyAlgebra::zero(1)).passed());
    }

    #[test]
    fn corrupted_ternary_constant_fails_with_witness() {
        // Same binary table as the 2-dimensional example, but the ternary
        // constant sends (e1,e2,e2) to e2 instead of e1.
        let a = LyAlgebra::from_sparse(2, &[(0, 1, e(2, 0))], &[(0, 1, 1, e(2, 1))]).unwrap();
        let report = check_ly_axioms(&a);
        assert!(!report.passed());
        // Hand expansion: ly3 at (e1,e2,e1,e2) gives 0 on the left and
        // [e1, [[e1,e2,e2]]] = [e1,e2] = e1 on the right.
        let w = report
            .witnesses()
            .iter()
            .find(|w| w.axiom == "ly3" && w.indices == vec![1, 2, 1, 2])
            .expect("expected a ly3 witness at (1,2,1,2)");
        assert!(w.lhs.is_zero());
        assert_eq!(w.rhs, e(2, 0));
    }

    #[test]
    fn basis_labels_are_optional_metadata() {
        let a = samples::ly_dim2();
        assert_eq!(a.labels(), None);
        let labeled = a
            .clone()
            .with_labels(vec!["e1".into(), "e2".into()])
            .unwrap();
        assert_eq!(
            labeled.labels(),
            Some(&["e1".to_owned(), "e2".to_owned()][..])
        );
        assert!(a.with_labels(vec!["e1".into()]).is_err());
    }

    #[test]
    fn sparse_construction_normalizes_antisymmetry() {
        let a = LyAlgebra::from_sparse(2, &[(1, 0, e(2, 0).neg())], &[]).unwrap();
        assert_eq!(a.binary_const(0, 1), &e(2, 0));
        // Consistent duplicates are fine, conflicting ones are not.
        assert!(LyAlgebra::from_sparse(2, &[(0, 1, e(2, 0)), (1, 0, e(2, 0).neg())], &[]).is_ok());
        assert!(matches!(
            LyAlgebra::from_sparse(2, &[(0, 1, e(2, 0)), (1, 0, e(2, 0))], &[]),
            Err(Error::ConflictingEntry { .. })
        ));
        assert!(matches!(
            LyAlgebra::from_sparse(2, &[(0, 0, e(2, 0))], &[]),
            Err(Error::NonzeroDiagonal { .. })
        ));
        assert!(matches!(
            LyAlgebra::from_sparse(2, &[(0, 2, e(2, 0))], &[]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn lie_to_ly_reproduces_the_two_dimensional_table() {
        let lie = LieAlgebra::from_sparse(2, &[(0, 1, e(2, 0))]).unwrap();
        let a = ly_from_lie(&lie).unwrap();
        assert_eq!(a, samples::ly_dim2());
    }

    #[test]
    fn abelian_lie_gives_zero_ly() {
        let lie = LieAlgebra::zero(3);
        assert_eq!(ly_from_lie(&lie).unwrap(), LyAlgebra::zero(3));
    }

    #[test]
    fn sl2_ternary_constant() {
        let a = samples::sl2_ly();
        // [[h,e],f] = 2[e,f] = 2h.
        assert_eq!(
            a.bracket3(&e(3, 0), &e(3, 1), &e(3, 2)).unwrap(),
            e(3, 0).scale(&Scalar::from_int(2))
        );
        assert!(check_ly_axioms(&a).passed());
    }

    #[test]
    fn non_jacobi_input_is_rejected() {
        // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e1 breaks Jacobi.
        let lie = LieAlgebra::from_sparse(3, &[(0, 1, e(3, 2)), (1, 2, e(3, 0)), (2, 0, e(3, 0))])
            .unwrap();
        assert!(matches!(ly_from_lie(&lie), Err(Error::JacobiFailure(_))));
    }

    #[test]
    fn homomorphism_checks() {
        let a = samples::ly_dim2();
        let id = Matrix::identity(2);
        assert!(check_ly_homomorphism(&id, &a, &a).unwrap().passed());
        let zero = Matrix::zero(2, 2);
        assert!(check_ly_homomorphism(&zero, &a, &a).unwrap().passed());
        let diag = Matrix::from_int_rows(&[&[1, 0], &[0, 2]]);
        let report = check_ly_homomorphism(&diag, &a, &a).unwrap();
        assert!(!report.passed());
        let w = report
            .witnesses()
            .iter()
            .find(|w| w.axiom == "hom-binary" && w.indices == vec![1, 2])
            .expect("expected a binary witness at (e1,e2)");
        // phi([e1,e2]) = e1 while [phi(e1), phi(e2)] = 2 e1.
        assert_eq!(w.lhs, e(2, 0));
        assert_eq!(w.rhs, e(2, 0).scale(&Scalar::from_int(2)));
    }

    #[test]
    fn homomorphism_shape_errors() {
        let a = samples::ly_dim2();
        let b = samples::ly_dim4();
        let bad = Matrix::zero(3, 2);
        assert!(check_ly_homomorphism(&bad, &a, &b).is_err());
    }

    #[test]
    fn subspace_closure() {
        let a = samples::ly_dim2();
        assert!(is_closed_subspace(&a, &[e(2, 0)]).unwrap().passed());
        assert!(is_closed_subspace(&a, &[e(2, 1)]).unwrap().passed());
        assert!(is_closed_subspace(&a, &[e(2, 0).add(&e(2, 1))])
            .unwrap()
            .passed());
        assert!(is_closed_subspace(&a, &[e(2, 0), e(2, 1)])
            .unwrap()
            .passed());
        // e2 alone does not absorb [e2, e1]; but spans containing e1 do.
        let report = is_closed_subspace(&a, &[e(2, 1)]).unwrap();
        assert!(report.passed());
        assert!(matches!(
            is_closed_subspace(&a, &[e(2, 0), e(2, 0).scale(&Scalar::from_int(2))]),
            Err(Error::DependentBasis)
        ));
    }

    #[test]
    fn escaping_bracket_is_witnessed() {
        let a = samples::ly_dim4();
        // span{e1, e2} is not closed: [e1, e2] = 2 e4 escapes.
        let report = is_closed_subspace(&a, &[e(4, 0), e(4, 1)]).unwrap();
        assert!(!report.passed());
        let w = &report.witnesses()[0];
        assert_eq!(w.axiom, "span-binary");
        assert_eq!(w.indices, vec![1, 2]);
        assert_eq!(w.lhs, e(4, 3).scale(&Scalar::from_int(2)));
    }
}
