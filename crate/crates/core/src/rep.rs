//! Representations of Lie-Yamaguti algebras.
//!
//! A representation on a module `V` is a pair of maps: `rho` sending algebra
//! elements to operators on `V`, and `mu` sending ordered pairs of algebra
//! elements to operators on `V` (no symmetry). Five coupled equations tie
//! them to the brackets; the combination
//!
//! ```text
//! D(x,y) = mu(y,x) - mu(x,y) + [rho(x), rho(y)] - rho([x,y])
//! ```
//!
//! acts as an inner derivation family and shows up in every construction
//! built on top (semidirect products, Rota-Baxter operators, phase spaces).

use crate::error::Error;
use crate::linalg::{Matrix, Vector};
use crate::ly::LyAlgebra;
use crate::report::CheckReport;

/// A representation: the base algebra, the module dimension, and the
/// operator tables `rho[i]` and `mu[i][j]` (matrices acting on the module).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    base: LyAlgebra,
    vdim: usize,
    rho: Vec<Matrix>,
    mu: Vec<Vec<Matrix>>,
}

impl Representation {
    pub fn new(
        base: LyAlgebra,
        vdim: usize,
        rho: Vec<Matrix>,
        mu: Vec<Vec<Matrix>>,
    ) -> Result<Self, Error> {
        let n = base.dim();
        if rho.len() != n || mu.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rho.len().min(mu.len()),
            });
        }
        for m in rho.iter().chain(mu.iter().flatten()) {
            if m.rows() != vdim || m.cols() != vdim {
                return Err(Error::DimensionMismatch {
                    expected: vdim,
                    found: m.rows(),
                });
            }
        }
        for row in &mu {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        Ok(Representation {
            base,
            vdim,
            rho,
            mu,
        })
    }

    /// The zero action of `base` on a `vdim`-dimensional module.
    pub fn zero(base: LyAlgebra, vdim: usize) -> Self {
        let n = base.dim();
        Representation {
            base,
            vdim,
            rho: vec![Matrix::zero(vdim, vdim); n],
            mu: vec![vec![Matrix::zero(vdim, vdim); n]; n],
        }
    }

    pub fn base(&self) -> &LyAlgebra {
        &self.base
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn mu(&self, i: usize, j: usize) -> &Matrix {
        &self.mu[i][j]
    }

    /// Linear extension of `rho` to an arbitrary algebra element.
    pub fn rho_of(&self, x: &Vector) -> Matrix {
        let mut out = Matrix::zero(self.vdim, self.vdim);
        for (i, c) in x.iter().enumerate() {
            out.add_scaled_assign(c, &self.rho[i]);
        }
        out
    }

    /// Bilinear extension of `mu`.
    pub fn mu_of(&self, x: &Vector, y: &Vector) -> Matrix {
        let mut out = Matrix::zero(self.vdim, self.vdim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                out.add_scaled_assign(&(xi * yj), &self.mu[i][j]);
            }
        }
        out
    }
}

/// The derived operator family `D(x,y)`, tabulated on basis pairs.
///
/// `D` is antisymmetric already at the tensor level: the defining formula
/// flips sign under swapping its arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedD {
    vdim: usize,
    mats: Vec<Vec<Matrix>>,
}

impl DerivedD {
    pub fn at(&self, i: usize, j: usize) -> &Matrix {
        &self.mats[i][j]
    }

    /// Bilinear extension to arbitrary algebra elements.
    pub fn of(&self, x: &Vector, y: &Vector) -> Matrix {
        let mut out = Matrix::zero(self.vdim, self.vdim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                out.add_scaled_assign(&(xi * yj), &self.mats[i][j]);
            }
        }
        out
    }

    /// `D(v, e_k)` for a coordinate vector `v`.
    pub(crate) fn vb(&self, v: &Vector, k: usize) -> Matrix {
        let mut out = Matrix::zero(self.vdim, self.vdim);
        for (p, c) in v.iter().enumerate() {
            out.add_scaled_assign(c, &self.mats[p][k]);
        }
        out
    }

    /// `D(e_i, v)` for a coordinate vector `v`.
    pub(crate) fn bv(&self, i: usize, v: &Vector) -> Matrix {
        let mut out = Matrix::zero(self.vdim, self.vdim);
        for (p, c) in v.iter().enumerate() {
            out.add_scaled_assign(c, &self.mats[i][p]);
        }
        out
    }
}

/// Tabulates `D(x,y) = mu(y,x) - mu(x,y) + [rho(x),rho(y)] - rho([x,y])` on
/// all basis pairs.
pub fn derived_d(r: &Representation) -> DerivedD {
    let n = r.base.dim();
    let mut mats = vec![vec![Matrix::zero(r.vdim, r.vdim); n]; n];
    for i in 0..n {
        for (j, slot) in mats[i].iter_mut().enumerate() {
            let commutator = r.rho[i].commutator(&r.rho[j]);
            *slot = r.mu[j][i]
                .sub(&r.mu[i][j])
                .add(&commutator)
                .sub(&r.rho_of(r.base.binary_const(i, j)));
        }
    }
    DerivedD { vdim: r.vdim, mats }
}

/// `mu(v, e_k)` for a coordinate vector `v` in the first slot.
fn mu_vb(r: &Representation, v: &Vector, k: usize) -> Matrix {
    let mut out = Matrix::zero(r.vdim, r.vdim);
    for (p, c) in v.iter().enumerate() {
        out.add_scaled_assign(c, &r.mu[p][k]);
    }
    out
}

/// `mu(e_i, v)` for a coordinate vector `v` in the second slot.
fn mu_bv(r: &Representation, i: usize, v: &Vector) -> Matrix {
    let mut out = Matrix::zero(r.vdim, r.vdim);
    for (p, c) in v.iter().enumerate() {
        out.add_scaled_assign(c, &r.mu[i][p]);
    }
    out
}

/// `rho(v)` for a coordinate vector `v`.
fn rho_v(r: &Representation, v: &Vector) -> Matrix {
    r.rho_of(v)
}

fn expect_matrix_eq(
    report: &mut CheckReport,
    axiom: &str,
    indices: &[usize],
    lhs: &Matrix,
    rhs: &Matrix,
) {
    if lhs == rhs {
        return;
    }
    // One witness per module basis vector on which the operators differ; the
    // final index selects that column.
    let mut idx = indices.to_vec();
    for v in 0..lhs.cols() {
        let l = lhs.col(v);
        let r = rhs.col(v);
        if l != r {
            idx.push(v);
            report.expect_eq(axiom, &idx, l, r);
            idx.pop();
        }
    }
}

/// Verifies the five defining equations of a representation on all basis
/// tuples (axioms `rep1` to `rep5`, in definition order).
pub fn check_representation(r: &Representation) -> CheckReport {
    let a = &r.base;
    let n = a.dim();
    let d = derived_d(r);
    let mut report = CheckReport::with_axioms(&["rep1", "rep2", "rep3", "rep4", "rep5"]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // mu([x,y],z) - mu(x,z) rho(y) + mu(y,z) rho(x) = 0
                let lhs = mu_vb(r, a.binary_const(i, j), k)
                    .sub(&r.mu[i][k].mul(&r.rho[j]))
                    .add(&r.mu[j][k].mul(&r.rho[i]));
                expect_matrix_eq(
                    &mut report,
                    "rep1",
                    &[i, j, k],
                    &lhs,
                    &Matrix::zero(r.vdim, r.vdim),
                );

                // mu(x,[y,z]) - rho(y) mu(x,z) + rho(z) mu(x,y) = 0
                let lhs = mu_bv(r, i, a.binary_const(j, k))
                    .sub(&r.rho[j].mul(&r.mu[i][k]))
                    .add(&r.rho[k].mul(&r.mu[i][j]));
                expect_matrix_eq(
                    &mut report,
                    "rep2",
                    &[i, j, k],
                    &lhs,
                    &Matrix::zero(r.vdim, r.vdim),
                );

                // rho([[x,y,z]]) = [D(x,y), rho(z)]
                let lhs = rho_v(r, a.ternary_const(i, j, k));
                let rhs = d.at(i, j).commutator(&r.rho[k]);
                expect_matrix_eq(&mut report, "rep3", &[i, j, k], &lhs, &rhs);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    // mu(z,w) mu(x,y) - mu(y,w) mu(x,z) - mu(x,[[y,z,w]])
                    //   + D(y,z) mu(x,w) = 0
                    let lhs = r.mu[k][l]
                        .mul(&r.mu[i][j])
                        .sub(&r.mu[j][l].mul(&r.mu[i][k]))
                        .sub(&mu_bv(r, i, a.ternary_const(j, k, l)))
                        .add(&d.at(j, k).mul(&r.mu[i][l]));
                    expect_matrix_eq(
                        &mut report,
                        "rep4",
                        &[i, j, k, l],
                        &lhs,
                        &Matrix::zero(r.vdim, r.vdim),
                    );

                    // mu([[x,y,z]],w) + mu(z,[[x,y,w]]) = [D(x,y), mu(z,w)]
                    let lhs = mu_vb(r, a.ternary_const(i, j, k), l).add(&mu_bv(
                        r,
                        k,
                        a.ternary_const(i, j, l),
                    ));
                    let rhs = d.at(i, j).commutator(&r.mu[k][l]);
                    expect_matrix_eq(&mut report, "rep5", &[i, j, k, l], &lhs, &rhs);
                }
            }
        }
    }
    report.finish()
}

/// Verifies the three identities every valid representation inherits
/// (axioms `repd1` to `repd3`).
pub fn check_derived_identities(r: &Representation) -> CheckReport {
    let a = &r.base;
    let n = a.dim();
    let d = derived_d(r);
    let mut report = CheckReport::with_axioms(&["repd1", "repd2", "repd3"]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // D([x,y],z) + D([y,z],x) + D([z,x],y) = 0
                let lhs = d
                    .vb(a.binary_const(i, j), k)
                    .add(&d.vb(a.binary_const(j, k), i))
                    .add(&d.vb(a.binary_const(k, i), j));
                expect_matrix_eq(
                    &mut report,
                    "repd1",
                    &[i, j, k],
                    &lhs,
                    &Matrix::zero(r.vdim, r.vdim),
                );

                for l in 0..n {
                    // D([[x,y,z]],w) + D(z,[[x,y,w]]) = [D(x,y), D(z,w)]
                    let lhs = d
                        .vb(a.ternary_const(i, j, k), l)
                        .add(&d.bv(k, a.ternary_const(i, j, l)));
                    let rhs = d.at(i, j).commutator(d.at(k, l));
                    expect_matrix_eq(&mut report, "repd2", &[i, j, k, l], &lhs, &rhs);

                    // mu([[x,y,z]],w) = mu(x,w) mu(z,y) - mu(y,w) mu(z,x)
                    //   - mu(z,w) D(x,y)
                    let lhs = mu_vb(r, a.ternary_const(i, j, k), l);
                    let rhs = r.mu[i][l]
                        .mul(&r.mu[k][j])
                        .sub(&r.mu[j][l].mul(&r.mu[k][i]))
                        .sub(&r.mu[k][l].mul(d.at(i, j)));
                    expect_matrix_eq(&mut report, "repd3", &[i, j, k, l], &lhs, &rhs);
                }
            }
        }
    }
    report.finish()
}

/// The algebra acting on itself: `rho(x) z = [x,z]` and
/// `mu(x,y) z = [[z,x,y]]`.
pub fn adjoint_rep(a: &LyAlgebra) -> Representation {
    let n = a.dim();
    let mut rho = Vec::with_capacity(n);
    for i in 0..n {
        let cols: Vec<Vector> = (0..n).map(|k| a.binary_const(i, k).clone()).collect();
        rho.push(Matrix::from_cols(n, &cols).expect("square table"));
    }
    let mut mu = vec![Vec::with_capacity(n); n];
    for i in 0..n {
        for j in 0..n {
            let cols: Vec<Vector> = (0..n).map(|k| a.ternary_const(k, i, j).clone()).collect();
            mu[i].push(Matrix::from_cols(n, &cols).expect("square table"));
        }
    }
    Representation {
        base: a.clone(),
        vdim: n,
        rho,
        mu,
    }
}

/// The dual representation on the dual module, in dual-basis coordinates:
/// `rho*(x) = -rho(x)^T` and `mu*(x,y) = mu(y,x)^T`.
pub fn dual_rep(r: &Representation) -> Representation {
    let n = r.base.dim();
    let rho = r.rho.iter().map(|m| m.transpose().neg()).collect();
    let mut mu = vec![Vec::with_capacity(n); n];
    for i in 0..n {
        for j in 0..n {
            mu[i].push(r.mu[j][i].transpose());
        }
    }
    Representation {
        base: r.base.clone(),
        vdim: r.vdim,
        rho,
        mu,
    }
}

/// The semidirect product algebra on `g + V`.
///
/// Basis order: the `n` algebra basis vectors first, then the `m` module
/// basis vectors. Brackets:
///
/// ```text
/// [x+u, y+v]      = [x,y] + rho(x)v - rho(y)u
/// [[x+u,y+v,z+w]] = [[x,y,z]] + D(x,y)w + mu(y,z)u - mu(x,z)v
/// ```
///
/// The construction yields a Lie-Yamaguti algebra exactly when the input is
/// a representation, so running [`check_ly_axioms`](crate::ly::check_ly_axioms)
/// on the output doubles as a representation test.
pub fn semidirect(r: &Representation) -> LyAlgebra {
    let n = r.base.dim();
    let m = r.vdim;
    let dim = n + m;
    let d = derived_d(r);
    let embed_g = |v: &Vector| {
        let mut entries = v.entries().to_vec();
        entries.extend(std::iter::repeat_with(crate::scalar::Scalar::zero).take(m));
        Vector::from_entries(entries)
    };
    let embed_v = |v: &Vector| {
        let mut entries = vec![crate::scalar::Scalar::zero(); n];
        entries.extend_from_slice(v.entries());
        Vector::from_entries(entries)
    };
    let mut binary = vec![vec![Vector::zero(dim); dim]; dim];
    for i in 0..n {
        for j in 0..n {
            binary[i][j] = embed_g(r.base.binary_const(i, j));
        }
        for b in 0..m {
            let img = embed_v(&r.rho[i].col(b));
            binary[i][n + b] = img.clone();
            binary[n + b][i] = img.neg();
        }
    }
    let mut ternary = vec![vec![vec![Vector::zero(dim); dim]; dim]; dim];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                ternary[i][j][k] = embed_g(r.base.ternary_const(i, j, k));
            }
            for c in 0..m {
                ternary[i][j][n + c] = embed_v(&d.at(i, j).col(c));
            }
        }
        for b in 0..m {
            for k in 0..n {
                let img = embed_v(&r.mu[i][k].col(b));
                ternary[i][n + b][k] = img.neg();
                ternary[n + b][i][k] = img;
            }
        }
    }
    LyAlgebra::from_tensors_unchecked(binary, ternary)
}

/// Checks that `psi` intertwines two representations of the same algebra:
/// `psi rho1(x) = rho2(x) psi` and `psi mu1(x,y) = mu2(x,y) psi`.
pub fn check_rep_homomorphism(
    psi: &Matrix,
    r1: &Representation,
    r2: &Representation,
) -> Result<CheckReport, Error> {
    if r1.base != r2.base {
        return Err(Error::BaseMismatch);
    }
    if psi.cols() != r1.vdim {
        return Err(Error::DimensionMismatch {
            expected: r1.vdim,
            found: psi.cols(),
        });
    }
    if psi.rows() != r2.vdim {
        return Err(Error::DimensionMismatch {
            expected: r2.vdim,
            found: psi.rows(),
        });
    }
    let n = r1.base.dim();
    let mut report = CheckReport::with_axioms(&["hom-rho", "hom-mu"]);
    for i in 0..n {
        let lhs = psi.mul(&r1.rho[i]);
        let rhs = r2.rho[i].mul(psi);
        expect_matrix_eq(&mut report, "hom-rho", &[i], &lhs, &rhs);
        for j in 0..n {
            let lhs = psi.mul(&r1.mu[i][j]);
            let rhs = r2.mu[i][j].mul(psi);
            expect_matrix_eq(&mut report, "hom-mu", &[i, j], &lhs, &rhs);
        }
    }
    Ok(report.finish())
}
