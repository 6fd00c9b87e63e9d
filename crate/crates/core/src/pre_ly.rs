//! Pre-Lie-Yamaguti algebras.
//!
//! A pre-Lie-Yamaguti algebra carries a binary product `*` and a ternary
//! product `{.,.,.}` (neither with any imposed symmetry). Two derived
//! operations drive everything:
//!
//! ```text
//! [x,y]    = x*y - y*x                                 (commutator)
//! {x,y,z}D = {z,y,x} - {z,x,y} + (y,x,z) - (x,y,z)     (derived triple)
//! ```
//!
//! where `(x,y,z) = (x*y)*z - x*(y*z)` is the associator. Five axioms
//! (`ply1` to `ply5`) make the commutator together with
//! `{x,y,z}D + {x,y,z} - {y,x,z}` a Lie-Yamaguti algebra, the subadjacent
//! algebra, and `L_x z = x*z`, `R(x,y) z = {z,x,y}` a representation of it
//! on the underlying space.

use crate::error::Error;
use crate::linalg::{Matrix, Vector};
use crate::ly::LyAlgebra;
use crate::rep::Representation;
use crate::report::{CheckReport, Witness};

/// A pre-Lie-Yamaguti algebra given by structure constants: `star[i][j]`
/// holds `e_i * e_j` and `braces[i][j][k]` holds `{e_i, e_j, e_k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreLyAlgebra {
    dim: usize,
    star: Vec<Vec<Vector>>,
    braces: Vec<Vec<Vec<Vector>>>,
}

impl PreLyAlgebra {
    pub fn zero(dim: usize) -> Self {
        PreLyAlgebra {
            dim,
            star: vec![vec![Vector::zero(dim); dim]; dim],
            braces: vec![vec![vec![Vector::zero(dim); dim]; dim]; dim],
        }
    }

    /// Sparse construction (0-based indices). No symmetry is imposed, so
    /// entries for all index orders are accepted; exact duplicates must
    /// agree and unlisted constants are zero.
    pub fn from_sparse(
        dim: usize,
        star: &[(usize, usize, Vector)],
        braces: &[(usize, usize, usize, Vector)],
    ) -> Result<Self, Error> {
        let mut alg = PreLyAlgebra::zero(dim);
        let check_index = |i: usize| {
            if i >= dim {
                Err(Error::IndexOutOfRange { index: i, dim })
            } else {
                Ok(())
            }
        };
        let check_coeffs = |v: &Vector| {
            if v.len() != dim {
                Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                })
            } else {
                Ok(())
            }
        };
        let mut seen_star = vec![vec![false; dim]; dim];
        for (i, j, coeffs) in star {
            check_index(*i)?;
            check_index(*j)?;
            check_coeffs(coeffs)?;
            if seen_star[*i][*j] {
                if alg.star[*i][*j] != *coeffs {
                    return Err(Error::ConflictingEntry {
                        indices: vec![i + 1, j + 1],
                    });
                }
                continue;
            }
            alg.star[*i][*j] = coeffs.clone();
            seen_star[*i][*j] = true;
        }
        let mut seen_braces = vec![vec![vec![false; dim]; dim]; dim];
        for (i, j, k, coeffs) in braces {
            check_index(*i)?;
            check_index(*j)?;
            check_index(*k)?;
            check_coeffs(coeffs)?;
            if seen_braces[*i][*j][*k] {
                if alg.braces[*i][*j][*k] != *coeffs {
                    return Err(Error::ConflictingEntry {
                        indices: vec![i + 1, j + 1, k + 1],
                    });
                }
                continue;
            }
            alg.braces[*i][*j][*k] = coeffs.clone();
            seen_braces[*i][*j][*k] = true;
        }
        Ok(alg)
    }

    pub fn from_tensors(
        star: Vec<Vec<Vector>>,
        braces: Vec<Vec<Vec<Vector>>>,
    ) -> Result<Self, Error> {
        let dim = star.len();
        let bad = |found| Error::DimensionMismatch {
            expected: dim,
            found,
        };
        if braces.len() != dim {
            return Err(bad(braces.len()));
        }
        for i in 0..dim {
            if star[i].len() != dim || braces[i].len() != dim {
                return Err(bad(star[i].len().min(braces[i].len())));
            }
            for j in 0..dim {
                if star[i][j].len() != dim || braces[i][j].len() != dim {
                    return Err(bad(star[i][j].len()));
                }
                for k in 0..dim {
                    if braces[i][j][k].len() != dim {
                        return Err(bad(braces[i][j][k].len()));
                    }
                }
            }
        }
        Ok(PreLyAlgebra { dim, star, braces })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn star_const(&self, i: usize, j: usize) -> &Vector {
        &self.star[i][j]
    }

    pub fn braces_const(&self, i: usize, j: usize, k: usize) -> &Vector {
        &self.braces[i][j][k]
    }

    /// All nonzero binary constants, in index order.
    pub fn star_entries(&self) -> Vec<(usize, usize, Vector)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !self.star[i][j].is_zero() {
                    out.push((i, j, self.star[i][j].clone()));
                }
            }
        }
        out
    }

    /// All nonzero ternary constants, in index order.
    pub fn braces_entries(&self) -> Vec<(usize, usize, usize, Vector)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    if !self.braces[i][j][k].is_zero() {
                        out.push((i, j, k, self.braces[i][j][k].clone()));
                    }
                }
            }
        }
        out
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

    /// Bilinear extension of the binary product.
    pub fn star(&self, x: &Vector, y: &Vector) -> Result<Vector, Error> {
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
                out.add_scaled_assign(&(xi * yj), &self.star[i][j]);
            }
        }
        Ok(out)
    }

    /// Trilinear extension of the ternary product.
    pub fn braces(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, Error> {
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
                    out.add_scaled_assign(&(&xy * zk), &self.braces[i][j][k]);
                }
            }
        }
        Ok(out)
    }

    /// The associator `(x,y,z) = (x*y)*z - x*(y*z)`.
    pub fn associator(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, Error> {
        let left = self.star(&self.star(x, y)?, z)?;
        let right = self.star(x, &self.star(y, z)?)?;
        Ok(left.sub(&right))
    }

    /// The derived triple product
    /// `{x,y,z}D = {z,y,x} - {z,x,y} + (y,x,z) - (x,y,z)`.
    pub fn braces_d(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, Error> {
        let mut out = self.braces(z, y, x)?;
        out = out.sub(&self.braces(z, x, y)?);
        out = out.add(&self.associator(y, x, z)?);
        out = out.sub(&self.associator(x, y, z)?);
        Ok(out)
    }

    // Mixed-slot helpers for the basis-tuple check loops.

    fn star_vb(&self, v: &Vector, j: usize) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (p, c) in v.iter().enumerate() {
            out.add_scaled_assign(c, &self.star[p][j]);
        }
        out
    }

    fn star_bv(&self, i: usize, v: &Vector) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (p, c) in v.iter().enumerate() {
            out.add_scaled_assign(c, &self.star[i][p]);
        }
        out
    }

    fn braces_vbb(&self, v: &Vector, j: usize, k: usize) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (p, c) in v.iter().enumerate() {
            out.add_scaled_assign(c, &self.braces[p][j][k]);
        }
        out
    }

    fn braces_bvb(&self, i: usize, v: &Vector, k: usize) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (p, c) in v.iter().enumerate() {
            out.add_scaled_assign(c, &self.braces[i][p][k]);
        }
        out
    }

    fn braces_bbv(&self, i: usize, j: usize, v: &Vector) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (p, c) in v.iter().enumerate() {
            out.add_scaled_assign(c, &self.braces[i][j][p]);
        }
        out
    }

    /// The commutator table `e_i * e_j - e_j * e_i`.
    fn comm(&self, i: usize, j: usize) -> Vector {
        self.star[i][j].sub(&self.star[j][i])
    }
}

/// The derived triple product tabulated on basis triples, with mixed-slot
/// evaluation helpers. Its trilinear extension agrees with
/// [`PreLyAlgebra::braces_d`].
pub(crate) struct DerivedBraces {
    dim: usize,
    table: Vec<Vec<Vec<Vector>>>,
}

impl DerivedBraces {
    pub(crate) fn new(p: &PreLyAlgebra) -> Self {
        let n = p.dim;
        let mut table = vec![vec![vec![Vector::zero(n); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                for (k, slot) in table[i][j].iter_mut().enumerate() {
                    // {e_k,e_j,e_i} - {e_k,e_i,e_j} + (e_j,e_i,e_k) - (e_i,e_j,e_k)
                    let assoc_ji = p
                        .star_vb(&p.star[j][i], k)
                        .sub(&p.star_bv(j, &p.star[i][k]));
                    let assoc_ij = p
                        .star_vb(&p.star[i][j], k)
                        .sub(&p.star_bv(i, &p.star[j][k]));
                    *slot = p.braces[k][j][i]
                        .sub(&p.braces[k][i][j])
                        .add(&assoc_ji)
                        .sub(&assoc_ij);
                }
            }
        }
        DerivedBraces { dim: p.dim, table }
    }

    pub(crate) fn at(&self, i: usize, j: usize, k: usize) -> &Vector {
        &self.table[i][j][k]
    }

    fn vbb(&self, v: &Vector, j: usize, k: usize) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (p, c) in v.iter().enumerate() {
            out.add_scaled_assign(c, &self.table[p][j][k]);
        }
        out
    }

    fn bvb(&self, i: usize, v: &Vector, k: usize) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (p, c) in v.iter().enumerate() {
            out.add_scaled_assign(c, &self.table[i][p][k]);
        }
        out
    }

    fn bbv(&self, i: usize, j: usize, v: &Vector) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (p, c) in v.iter().enumerate() {
            out.add_scaled_assign(c, &self.table[i][j][p]);
        }
        out
    }
}

/// Verifies the five defining axioms on all basis tuples.
///
/// In the identifiers below, `D{...}` stands for the derived triple product
/// and `[.,.]` for the commutator:
///
/// - `ply1`: `{z,[x,y],w} - {y*z,x,w} + {x*z,y,w} = 0`
/// - `ply2`: `{x,y,[z,w]} = z*{x,y,w} - w*{x,y,z}`
/// - `ply3`: `{{x,y,z},w,t} - {{x,y,w},z,t} - {x,y,D{z,w,t}} - {x,y,{z,w,t}}
///   + {x,y,{w,z,t}} + D{z,w,{x,y,t}} = 0`
/// - `ply4`: `{z,D{x,y,w},t} + {z,{x,y,w},t} - {z,{y,x,w},t} + {z,w,D{x,y,t}}
///   + {z,w,{x,y,t}} - {z,w,{y,x,t}} = D{x,y,{z,w,t}} - {D{x,y,z},w,t}`
/// - `ply5`: `D{x,y,z}*w + {x,y,z}*w - {y,x,z}*w = D{x,y,z*w} - z*D{x,y,w}`
pub fn check_pre_ly_axioms(p: &PreLyAlgebra) -> CheckReport {
    let n = p.dim;
    let bd = DerivedBraces::new(p);
    let mut report = CheckReport::with_axioms(&["ply1", "ply2", "ply3", "ply4", "ply5"]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    // ply1 with (x,y,z,w) = (i,j,k,l)
                    let sum = p
                        .braces_bvb(k, &p.comm(i, j), l)
                        .sub(&p.braces_vbb(&p.star[j][k], i, l))
                        .add(&p.braces_vbb(&p.star[i][k], j, l));
                    report.expect_zero("ply1", &[i, j, k, l], sum);

                    // ply2 with (x,y,z,w) = (i,j,k,l)
                    let lhs = p.braces_bbv(i, j, &p.comm(k, l));
                    let rhs = p
                        .star_bv(k, &p.braces[i][j][l])
                        .sub(&p.star_bv(l, &p.braces[i][j][k]));
                    report.expect_eq("ply2", &[i, j, k, l], lhs, rhs);

                    // ply5 with (x,y,z,w) = (i,j,k,l)
                    let lhs = p
                        .star_vb(bd.at(i, j, k), l)
                        .add(&p.star_vb(&p.braces[i][j][k], l))
                        .sub(&p.star_vb(&p.braces[j][i][k], l));
                    let rhs = bd
                        .bbv(i, j, &p.star[k][l])
                        .sub(&p.star_bv(k, bd.at(i, j, l)));
                    report.expect_eq("ply5", &[i, j, k, l], lhs, rhs);
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    for m in 0..n {
                        // ply3 with (x,y,z,w,t) = (i,j,k,l,m)
                        let sum = p
                            .braces_vbb(&p.braces[i][j][k], l, m)
                            .sub(&p.braces_vbb(&p.braces[i][j][l], k, m))
                            .sub(&p.braces_bbv(i, j, bd.at(k, l, m)))
                            .sub(&p.braces_bbv(i, j, &p.braces[k][l][m]))
                            .add(&p.braces_bbv(i, j, &p.braces[l][k][m]))
                            .add(&bd.bbv(k, l, &p.braces[i][j][m]));
                        report.expect_zero("ply3", &[i, j, k, l, m], sum);

                        // ply4 with (x,y,z,w,t) = (i,j,k,l,m)
                        let lhs = p
                            .braces_bvb(k, bd.at(i, j, l), m)
                            .add(&p.braces_bvb(k, &p.braces[i][j][l], m))
                            .sub(&p.braces_bvb(k, &p.braces[j][i][l], m))
                            .add(&p.braces_bbv(k, l, bd.at(i, j, m)))
                            .add(&p.braces_bbv(k, l, &p.braces[i][j][m]))
                            .sub(&p.braces_bbv(k, l, &p.braces[j][i][m]));
                        let rhs = bd.bbv(i, j, &p.braces[k][l][m]).sub(&p.braces_vbb(
                            bd.at(i, j, k),
                            l,
                            m,
                        ));
                        report.expect_eq("ply4", &[i, j, k, l, m], lhs, rhs);
                    }
                }
            }
        }
    }
    report.finish()
}

/// Verifies the two identities every valid pre-Lie-Yamaguti algebra
/// inherits:
///
/// - `plyd1`: `D{[x,y],z,w} + D{[y,z],x,w} + D{[z,x],y,w} = 0`
/// - `plyd2`: `D{x,y,D{z,w,t}} - D{D{x,y,z},w,t} - D{{x,y,z},w,t}
///   + D{{y,x,z},w,t} - D{z,D{x,y,w},t} - D{z,{x,y,w},t} + D{z,{y,x,w},t}
///   - D{z,w,D{x,y,t}} = 0`
pub fn check_pre_ly_lemma(p: &PreLyAlgebra) -> CheckReport {
    let n = p.dim;
    let bd = DerivedBraces::new(p);
    let mut report = CheckReport::with_axioms(&["plyd1", "plyd2"]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let sum = bd
                        .vbb(&p.comm(i, j), k, l)
                        .add(&bd.vbb(&p.comm(j, k), i, l))
                        .add(&bd.vbb(&p.comm(k, i), j, l));
                    report.expect_zero("plyd1", &[i, j, k, l], sum);
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    for m in 0..n {
                        let sum = bd
                            .bbv(i, j, bd.at(k, l, m))
                            .sub(&bd.vbb(bd.at(i, j, k), l, m))
                            .sub(&bd.vbb(&p.braces[i][j][k], l, m))
                            .add(&bd.vbb(&p.braces[j][i][k], l, m))
                            .sub(&bd.bvb(k, bd.at(i, j, l), m))
                            .sub(&bd.bvb(k, &p.braces[i][j][l], m))
                            .add(&bd.bvb(k, &p.braces[j][i][l], m))
                            .sub(&bd.bbv(k, l, bd.at(i, j, m)));
                        report.expect_zero("plyd2", &[i, j, k, l, m], sum);
                    }
                }
            }
        }
    }
    report.finish()
}

/// The subadjacent Lie-Yamaguti algebra: binary bracket `x*y - y*x`,
/// ternary bracket `D{x,y,z} + {x,y,z} - {y,x,z}`.
pub fn subadjacent(p: &PreLyAlgebra) -> LyAlgebra {
    let n = p.dim;
    let bd = DerivedBraces::new(p);
    let mut binary = vec![vec![Vector::zero(n); n]; n];
    let mut ternary = vec![vec![vec![Vector::zero(n); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            binary[i][j] = p.comm(i, j);
            for (k, slot) in ternary[i][j].iter_mut().enumerate() {
                *slot = bd
                    .at(i, j, k)
                    .add(&p.braces[i][j][k])
                    .sub(&p.braces[j][i][k]);
            }
        }
    }
    LyAlgebra::from_tensors_unchecked(binary, ternary)
}

/// The canonical representation of the subadjacent algebra on the algebra
/// itself: `rho(x) z = x*z` and `mu(x,y) z = {z,x,y}`.
pub fn lr_representation(p: &PreLyAlgebra) -> Representation {
    let n = p.dim;
    let base = subadjacent(p);
    let mut rho = Vec::with_capacity(n);
    for i in 0..n {
        let cols: Vec<Vector> = (0..n).map(|k| p.star[i][k].clone()).collect();
        rho.push(Matrix::from_cols(n, &cols).expect("square table"));
    }
    let mut mu = vec![Vec::with_capacity(n); n];
    for i in 0..n {
        for j in 0..n {
            let cols: Vec<Vector> = (0..n).map(|k| p.braces[k][i][j].clone()).collect();
            mu[i].push(Matrix::from_cols(n, &cols).expect("square table"));
        }
    }
    Representation::new(base, n, rho, mu).expect("shapes match by construction")
}

/// Whether the span of `basis` is closed under both products. At most one
/// witness is reported: the first escaping product value (axioms
/// `span-star` / `span-braces`; indices refer to positions in `basis`).
pub fn is_closed_subspace(p: &PreLyAlgebra, basis: &[Vector]) -> Result<CheckReport, Error> {
    for v in basis {
        if v.len() != p.dim {
            return Err(Error::DimensionMismatch {
                expected: p.dim,
                found: v.len(),
            });
        }
    }
    let span = Matrix::from_cols(p.dim, basis)?;
    if span.rank() != basis.len() {
        return Err(Error::DependentBasis);
    }
    let mut report = CheckReport::with_axioms(&["span-star", "span-braces"]);
    let in_span = |v: &Vector| span.solve(v).expect("dimensions match").is_some();
    // Neither product has symmetry, so all ordered tuples are checked.
    'search: {
        for a in 0..basis.len() {
            for b in 0..basis.len() {
                let value = p.star(&basis[a], &basis[b])?;
                if !in_span(&value) {
                    report.record(Witness::new(
                        "span-star",
                        &[a, b],
                        value,
                        Vector::zero(p.dim),
                    ));
                    break 'search;
                }
            }
        }
        for a in 0..basis.len() {
            for b in 0..basis.len() {
                for c in 0..basis.len() {
                    let value = p.braces(&basis[a], &basis[b], &basis[c])?;
                    if !in_span(&value) {
                        report.record(Witness::new(
                            "span-braces",
                            &[a, b, c],
                            value,
                            Vector::zero(p.dim),
                        ));
                        break 'search;
                    }
                }
            }
        }
    }
    Ok(report.finish())
}
