//! Phase spaces and Manin triples.
//!
//! A phase space of an algebra `h` is a Lie-Yamaguti structure on `h + h*`
//! that is symplectic for the canonical pairing form
//!
//! ```text
//! omega_p(x+a, y+b) = <a,y> - <b,x>
//! ```
//!
//! and has both summands as subalgebras. With the basis order "h first, dual
//! basis second" the canonical form is the block matrix `[[0,-I],[I,0]]`.
//!
//! Every pre-Lie-Yamaguti algebra builds one: take the subadjacent algebra,
//! act on the dual of the canonical representation, and form the semidirect
//! product. Conversely a phase space induces a compatible pre-Lie-Yamaguti
//! structure on the total space, and the two directions close into a
//! correspondence with Manin triples, checked end to end by
//! [`roundtrip_correspondence`].

use crate::error::Error;
use crate::linalg::{Matrix, Vector};
use crate::ly::{check_ly_axioms, is_closed_subspace, LyAlgebra};
use crate::pre_ly::{
    check_pre_ly_axioms, lr_representation, subadjacent, DerivedBraces, PreLyAlgebra,
};
use crate::rep::{dual_rep, semidirect};
use crate::report::{CheckReport, Witness};
use crate::scalar::Scalar;
use crate::symplectic::{check_symplectic, compatible_pre_ly_from_symplectic, SymplecticForm};

/// The canonical pairing form on `h + h*`: `[[0,-I],[I,0]]` in block form.
pub fn canonical_omega(h_dim: usize) -> SymplecticForm {
    let n = 2 * h_dim;
    let mut omega = Matrix::zero(n, n);
    for i in 0..h_dim {
        omega.set(i, h_dim + i, -Scalar::one());
        omega.set(h_dim + i, i, Scalar::one());
    }
    SymplecticForm::new(omega).expect("canonical form is antisymmetric and nondegenerate")
}

/// A candidate phase space: a `2n`-dimensional algebra whose first `n`
/// basis vectors span `h` and whose last `n` span the dual summand, paired
/// by the canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseSpace {
    total: LyAlgebra,
    h_dim: usize,
    omega_p: SymplecticForm,
}

impl PhaseSpace {
    pub fn new(total: LyAlgebra, h_dim: usize) -> Result<Self, Error> {
        if total.dim() != 2 * h_dim {
            return Err(Error::DimensionMismatch {
                expected: 2 * h_dim,
                found: total.dim(),
            });
        }
        let omega_p = canonical_omega(h_dim);
        Ok(PhaseSpace {
            total,
            h_dim,
            omega_p,
        })
    }

    pub fn total(&self) -> &LyAlgebra {
        &self.total
    }

    pub fn h_dim(&self) -> usize {
        self.h_dim
    }

    pub fn omega_p(&self) -> &SymplecticForm {
        &self.omega_p
    }

    /// The embedded basis of the `h` summand.
    pub fn h_basis(&self) -> Vec<Vector> {
        (0..self.h_dim)
            .map(|i| Vector::basis(2 * self.h_dim, i))
            .collect()
    }

    /// The embedded basis of the dual summand.
    pub fn dual_basis(&self) -> Vec<Vector> {
        (0..self.h_dim)
            .map(|i| Vector::basis(2 * self.h_dim, self.h_dim + i))
            .collect()
    }
}

/// Builds the phase space of the subadjacent algebra of `p`: the semidirect
/// product of `subadjacent(p)` with the dual of its canonical
/// representation, carrying the canonical form.
///
/// Fails with [`Error::PreLyViolation`] when `p` does not satisfy the
/// pre-Lie-Yamaguti axioms.
pub fn build_phase_space(p: &PreLyAlgebra) -> Result<PhaseSpace, Error> {
    let axioms = check_pre_ly_axioms(p);
    if !axioms.passed() {
        return Err(Error::PreLyViolation(axioms));
    }
    let total = semidirect(&dual_rep(&lr_representation(p)));
    PhaseSpace::new(total, p.dim())
}

/// Verifies that a candidate actually is a phase space: the total algebra
/// satisfies the Lie-Yamaguti axioms (`total/...`), the canonical form is
/// symplectic for it (`symplectic/...`), and both summands are closed
/// subspaces (`span-h/...`, `span-dual/...`).
pub fn check_phase_space(ps: &PhaseSpace) -> CheckReport {
    let mut report = CheckReport::new();
    report.absorb("total", check_ly_axioms(&ps.total));
    report.absorb(
        "symplectic",
        check_symplectic(&ps.total, &ps.omega_p).expect("dimensions match by construction"),
    );
    report.absorb(
        "span-h",
        is_closed_subspace(&ps.total, &ps.h_basis()).expect("unit vectors are independent"),
    );
    report.absorb(
        "span-dual",
        is_closed_subspace(&ps.total, &ps.dual_basis()).expect("unit vectors are independent"),
    );
    report.finish()
}

/// Verifies the four perfectness conditions: for `x, y` in `h` and `a, b`
/// in the dual summand,
///
/// - `perfect1`: `[[a,b,x]]` lies in `h`
/// - `perfect2`: `[[x,a,b]]` lies in `h`
/// - `perfect3`: `[[x,y,a]]` lies in the dual summand
/// - `perfect4`: `[[a,x,y]]` lies in the dual summand
///
/// Witnesses show the bracket value against its projection onto the
/// prescribed summand.
pub fn check_perfect(ps: &PhaseSpace) -> CheckReport {
    let h = ps.h_dim;
    let total = &ps.total;
    let mut report = CheckReport::with_axioms(&["perfect1", "perfect2", "perfect3", "perfect4"]);
    let project = |v: &Vector, keep_h: bool| {
        let entries = v
            .iter()
            .enumerate()
            .map(|(pos, c)| {
                if (pos < h) == keep_h {
                    c.clone()
                } else {
                    Scalar::zero()
                }
            })
            .collect();
        Vector::from_entries(entries)
    };
    let mut expect_in = |axiom: &str, idx: &[usize], value: &Vector, keep_h: bool| {
        let projected = project(value, keep_h);
        if *value != projected {
            report.record(Witness::new(axiom, idx, value.clone(), projected));
        }
    };
    for a in 0..h {
        for b in 0..h {
            for x in 0..h {
                let v = total.ternary_const(h + a, h + b, x);
                expect_in("perfect1", &[h + a, h + b, x], v, true);
                let v = total.ternary_const(x, h + a, h + b);
                expect_in("perfect2", &[x, h + a, h + b], v, true);
            }
        }
    }
    for x in 0..h {
        for y in 0..h {
            for a in 0..h {
                let v = total.ternary_const(x, y, h + a);
                expect_in("perfect3", &[x, y, h + a], v, false);
                let v = total.ternary_const(h + a, x, y);
                expect_in("perfect4", &[h + a, x, y], v, false);
            }
        }
    }
    report.finish()
}

/// Verifies that `(p, w)` is a quadratic pre-Lie-Yamaguti algebra:
///
/// - `qply-binary`: `omega(x*y,z) = -omega(y,[x,z])`
/// - `qply-ternary`: `omega({x,y,z},w) = omega(x,[[w,z,y]])`
/// - `qply-derived`: `omega(D{x,y,z},w) = -omega(z,[[x,y,w]])`
///
/// where the brackets are those of the subadjacent algebra of `p`.
pub fn check_quadratic_pre_ly(p: &PreLyAlgebra, w: &SymplecticForm) -> Result<CheckReport, Error> {
    let n = p.dim();
    if w.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: w.dim(),
        });
    }
    let sub = subadjacent(p);
    let bd = DerivedBraces::new(p);
    let basis: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i)).collect();
    let mut report = CheckReport::with_axioms(&["qply-binary", "qply-ternary", "qply-derived"]);
    let scalar = |s: Scalar| Vector::from_entries(vec![s]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = w.eval(p.star_const(i, j), &basis[k]);
                let rhs = -w.eval(&basis[j], sub.binary_const(i, k));
                if lhs != rhs {
                    report.record(Witness::new(
                        "qply-binary",
                        &[i, j, k],
                        scalar(lhs),
                        scalar(rhs),
                    ));
                }
                for l in 0..n {
                    let lhs = w.eval(p.braces_const(i, j, k), &basis[l]);
                    let rhs = w.eval(&basis[i], sub.ternary_const(l, k, j));
                    if lhs != rhs {
                        report.record(Witness::new(
                            "qply-ternary",
                            &[i, j, k, l],
                            scalar(lhs),
                            scalar(rhs),
                        ));
                    }
                    let lhs = w.eval(bd.at(i, j, k), &basis[l]);
                    let rhs = -w.eval(&basis[k], sub.ternary_const(i, j, l));
                    if lhs != rhs {
                        report.record(Witness::new(
                            "qply-derived",
                            &[i, j, k, l],
                            scalar(lhs),
                            scalar(rhs),
                        ));
                    }
                }
            }
        }
    }
    Ok(report.finish())
}

/// Input data for a Manin-triple check: a pre-Lie-Yamaguti algebra with a
/// skew form and two candidate splitting subspaces. Complementarity of the
/// splits is enforced at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct ManinInput {
    total: PreLyAlgebra,
    omega: SymplecticForm,
    split_a: Vec<Vector>,
    split_b: Vec<Vector>,
}

impl ManinInput {
    pub fn new(
        total: PreLyAlgebra,
        omega: SymplecticForm,
        split_a: Vec<Vector>,
        split_b: Vec<Vector>,
    ) -> Result<Self, Error> {
        let n = total.dim();
        if omega.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: omega.dim(),
            });
        }
        for v in split_a.iter().chain(&split_b) {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        if split_a.len() + split_b.len() != n {
            return Err(Error::NonComplementarySplits);
        }
        let mut all = split_a.clone();
        all.extend(split_b.iter().cloned());
        if Matrix::from_cols(n, &all)?.rank() != n {
            return Err(Error::NonComplementarySplits);
        }
        Ok(ManinInput {
            total,
            omega,
            split_a,
            split_b,
        })
    }

    pub fn total(&self) -> &PreLyAlgebra {
        &self.total
    }

    pub fn omega(&self) -> &SymplecticForm {
        &self.omega
    }

    pub fn split_a(&self) -> &[Vector] {
        &self.split_a
    }

    pub fn split_b(&self) -> &[Vector] {
        &self.split_b
    }
}

/// Verifies the Manin-triple conditions:
///
/// - `quadratic/...`: the form is invariant (see [`check_quadratic_pre_ly`]);
/// - `split-a/...`, `split-b/...`: both splits are closed under both
///   products;
/// - `isotropy-a`, `isotropy-b`: the form vanishes on each split;
/// - `manin1` to `manin6`: the mixed ternary products land in the
///   prescribed split. With `x, y` from split A and `a, b` from split B:
///   `{a,b,x}`, `{x,a,b}`, `{a,x,b}` in A and `{x,y,a}`, `{a,x,y}`,
///   `{x,a,y}` in B.
pub fn check_manin_triple(m: &ManinInput) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new();
    report.absorb("quadratic", check_quadratic_pre_ly(&m.total, &m.omega)?);
    report.absorb(
        "split-a",
        crate::pre_ly::is_closed_subspace(&m.total, &m.split_a)?,
    );
    report.absorb(
        "split-b",
        crate::pre_ly::is_closed_subspace(&m.total, &m.split_b)?,
    );

    for axiom in [
        "isotropy-a",
        "isotropy-b",
        "manin1",
        "manin2",
        "manin3",
        "manin4",
        "manin5",
        "manin6",
    ] {
        report.register_axiom(axiom);
    }
    let scalar = |s: Scalar| Vector::from_entries(vec![s]);
    for (axiom, split) in [("isotropy-a", &m.split_a), ("isotropy-b", &m.split_b)] {
        for p in 0..split.len() {
            for q in (p + 1)..split.len() {
                let value = m.omega.eval(&split[p], &split[q]);
                if !value.is_zero() {
                    report.record(Witness::new(
                        axiom,
                        &[p, q],
                        scalar(value),
                        scalar(Scalar::zero()),
                    ));
                }
            }
        }
    }

    let span_a = Matrix::from_cols(m.total.dim(), &m.split_a)?;
    let span_b = Matrix::from_cols(m.total.dim(), &m.split_b)?;
    let mut expect_in =
        |axiom: &str, idx: &[usize], value: Vector, span: &Matrix| -> Result<(), Error> {
            if span.solve(&value)?.is_none() {
                let zero = Vector::zero(value.len());
                report.record(Witness::new(axiom, idx, value, zero));
            }
            Ok(())
        };
    let a = &m.split_a;
    let b = &m.split_b;
    for p in 0..b.len() {
        for q in 0..b.len() {
            for r in 0..a.len() {
                expect_in(
                    "manin1",
                    &[p, q, r],
                    m.total.braces(&b[p], &b[q], &a[r])?,
                    &span_a,
                )?;
                expect_in(
                    "manin2",
                    &[r, p, q],
                    m.total.braces(&a[r], &b[p], &b[q])?,
                    &span_a,
                )?;
                expect_in(
                    "manin3",
                    &[p, r, q],
                    m.total.braces(&b[p], &a[r], &b[q])?,
                    &span_a,
                )?;
            }
        }
    }
    for p in 0..a.len() {
        for q in 0..a.len() {
            for r in 0..b.len() {
                expect_in(
                    "manin4",
                    &[p, q, r],
                    m.total.braces(&a[p], &a[q], &b[r])?,
                    &span_b,
                )?;
                expect_in(
                    "manin5",
                    &[r, p, q],
                    m.total.braces(&b[r], &a[p], &a[q])?,
                    &span_b,
                )?;
                expect_in(
                    "manin6",
                    &[p, r, q],
                    m.total.braces(&a[p], &b[r], &a[q])?,
                    &span_b,
                )?;
            }
        }
    }
    Ok(report.finish())
}

/// A sequence of named check stages; passes when every stage passes.
#[derive(Debug, Clone)]
pub struct StagedReport {
    pub stages: Vec<(String, CheckReport)>,
}

impl StagedReport {
    pub fn passed(&self) -> bool {
        self.stages.iter().all(|(_, r)| r.passed())
    }

    pub fn stage(&self, name: &str) -> Option<&CheckReport> {
        self.stages.iter().find(|(n, _)| n == name).map(|(_, r)| r)
    }

    /// Flattens into a single report with stage-prefixed axiom names.
    pub fn flatten(self) -> CheckReport {
        let mut report = CheckReport::new();
        for (name, stage) in self.stages {
            report.absorb(&name, stage);
        }
        report.finish()
    }
}

/// Runs the full correspondence pipeline for a pre-Lie-Yamaguti algebra:
///
/// 1. `phase-space`: build the phase space of the subadjacent algebra and
///    verify it (axioms, symplectic, summand closure);
/// 2. `perfect`: verify the four perfectness conditions;
/// 3. `manin`: derive the compatible pre-Lie-Yamaguti structure from the
///    canonical form and verify the Manin-triple conditions with the two
///    summands as splits;
/// 4. `restriction`: the derived structure restricted to the `h` summand
///    must reproduce the input tensor by tensor (`restrict-star`,
///    `restrict-braces`).
pub fn roundtrip_correspondence(p: &PreLyAlgebra) -> Result<StagedReport, Error> {
    let ps = build_phase_space(p)?;
    let mut stages = Vec::new();
    stages.push(("phase-space".to_owned(), check_phase_space(&ps)));
    stages.push(("perfect".to_owned(), check_perfect(&ps)));

    let q = compatible_pre_ly_from_symplectic(&ps.total, &ps.omega_p)?;
    let manin = ManinInput::new(q.clone(), ps.omega_p.clone(), ps.h_basis(), ps.dual_basis())?;
    stages.push(("manin".to_owned(), check_manin_triple(&manin)?));

    let n = p.dim();
    let embed = |v: &Vector| {
        let mut entries = v.entries().to_vec();
        entries.extend(std::iter::repeat_with(Scalar::zero).take(n));
        Vector::from_entries(entries)
    };
    let mut restriction = CheckReport::with_axioms(&["restrict-star", "restrict-braces"]);
    for i in 0..n {
        for j in 0..n {
            restriction.expect_eq(
                "restrict-star",
                &[i, j],
                q.star_const(i, j).clone(),
                embed(p.star_const(i, j)),
            );
            for k in 0..n {
                restriction.expect_eq(
                    "restrict-braces",
                    &[i, j, k],
                    q.braces_const(i, j, k).clone(),
                    embed(p.braces_const(i, j, k)),
                );
            }
        }
    }
    stages.push(("restriction".to_owned(), restriction.finish()));
    Ok(StagedReport { stages })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn e(dim: usize, i: usize) -> Vector {
        Vector::basis(dim, i)
    }

    #[test]
    fn canonical_form_blocks() {
        let w = canonical_omega(2);
        assert_eq!(w.eval(&e(4, 0), &e(4, 2)), s(-1));
        assert_eq!(w.eval(&e(4, 2), &e(4, 0)), s(1));
        assert_eq!(w.eval(&e(4, 0), &e(4, 1)), s(0));
        assert_eq!(w.eval(&e(4, 2), &e(4, 3)), s(0));
    }

    #[test]
    fn phase_space_of_the_two_dimensional_table() {
        let p = samples::pre_ly_dim2(&s(1), &s(1));
        let ps = build_phase_space(&p).unwrap();
        assert_eq!(ps.total().dim(), 4);
        assert!(check_phase_space(&ps).passed());
        assert!(check_perfect(&ps).passed());
    }

    #[test]
    fn phase_space_of_the_zero_algebra() {
        let p = PreLyAlgebra::zero(2);
        let ps = build_phase_space(&p).unwrap();
        assert_eq!(ps.total(), &LyAlgebra::zero(4));
        assert!(check_phase_space(&ps).passed());
        assert!(check_perfect(&ps).passed());
    }

    #[test]
    fn invalid_tables_cannot_build_phase_spaces() {
        let bad = PreLyAlgebra::from_sparse(2, &[(0, 1, e(2, 0))], &[(1, 0, 1, e(2, 1))]).unwrap();
        assert!(matches!(
            build_phase_space(&bad),
            Err(Error::PreLyViolation(_))
        ));
    }

    #[test]
    fn hand_built_total_with_escaping_binary_fails_closure() {
        // Add an h-h bracket component in the dual summand.
        let total = LyAlgebra::from_sparse(4, &[(0, 1, e(4, 2))], &[]).unwrap();
        let ps = PhaseSpace::new(total, 2).unwrap();
        let report = check_phase_space(&ps);
        assert!(!report.passed());
        assert!(report
            .witnesses()
            .iter()
            .any(|w| w.axiom == "span-h/span-binary"));
    }

    #[test]
    fn perfectness_failure_is_witnessed() {
        // [[f1, f2, e1]] = f1 escapes into the dual summand.
        let total = LyAlgebra::from_sparse(4, &[], &[(2, 3, 0, e(4, 2))]).unwrap();
        let ps = PhaseSpace::new(total, 2).unwrap();
        let report = check_perfect(&ps);
        assert!(!report.passed());
        let w = &report.witnesses()[0];
        assert_eq!(w.axiom, "perfect1");
        assert_eq!(w.indices, vec![3, 4, 1]);
        assert!(w.rhs.is_zero());
    }

    #[test]
    fn quadratic_pre_ly_on_the_compatible_structure() {
        let a = samples::ly_dim2();
        let w = samples::omega_dim2(s(1));
        let q = compatible_pre_ly_from_symplectic(&a, &w).unwrap();
        assert!(check_quadratic_pre_ly(&q, &w).unwrap().passed());
        // The zero algebra is quadratic for any valid form.
        assert!(check_quadratic_pre_ly(&PreLyAlgebra::zero(2), &w)
            .unwrap()
            .passed());
    }

    #[test]
    fn quadratic_pre_ly_regression_fixture() {
        // The 2-dimensional product table with a = b = 1 is NOT quadratic
        // for the standard form: omega(e2*e2, e2) = omega(e1,e2) = 1 while
        // the commutator side vanishes.
        let p = samples::pre_ly_dim2(&s(1), &s(1));
        let report = check_quadratic_pre_ly(&p, &samples::omega_dim2(s(1))).unwrap();
        assert!(!report.passed());
        let w = report
            .witnesses()
            .iter()
            .find(|w| w.axiom == "qply-binary" && w.indices == vec![2, 2, 2])
            .expect("documented witness");
        assert_eq!(w.lhs, Vector::from_ints(&[1]));
        assert_eq!(w.rhs, Vector::from_ints(&[0]));
    }

    #[test]
    fn manin_triple_of_the_two_dimensional_phase_space() {
        let p = samples::pre_ly_dim2(&s(1), &s(1));
        let ps = build_phase_space(&p).unwrap();
        let q = compatible_pre_ly_from_symplectic(ps.total(), ps.omega_p()).unwrap();
        let m = ManinInput::new(
            q.clone(),
            ps.omega_p().clone(),
            ps.h_basis(),
            ps.dual_basis(),
        )
        .unwrap();
        assert!(check_manin_triple(&m).unwrap().passed());
        // A passing Manin triple makes the subadjacent algebra of its total
        // symplectic for the same form.
        let sub = crate::pre_ly::subadjacent(&q);
        assert!(crate::symplectic::check_symplectic(&sub, ps.omega_p())
            .unwrap()
            .passed());
    }

    #[test]
    fn zero_total_with_isotropic_splits_passes() {
        let m = ManinInput::new(
            PreLyAlgebra::zero(4),
            canonical_omega(2),
            vec![e(4, 0), e(4, 1)],
            vec![e(4, 2), e(4, 3)],
        )
        .unwrap();
        assert!(check_manin_triple(&m).unwrap().passed());
    }

    #[test]
    fn non_isotropic_splits_fail() {
        // span{e1, f1} pairs e1 with f1 under the canonical form.
        let m = ManinInput::new(
            PreLyAlgebra::zero(4),
            canonical_omega(2),
            vec![e(4, 0), e(4, 2)],
            vec![e(4, 1), e(4, 3)],
        )
        .unwrap();
        let report = check_manin_triple(&m).unwrap();
        assert!(!report.passed());
        assert!(report.witnesses().iter().any(|w| w.axiom == "isotropy-a"));
    }

    #[test]
    fn overlapping_splits_are_rejected() {
        assert!(matches!(
            ManinInput::new(
                PreLyAlgebra::zero(4),
                canonical_omega(2),
                vec![e(4, 0), e(4, 1)],
                vec![e(4, 0), e(4, 3)],
            ),
            Err(Error::NonComplementarySplits)
        ));
        assert!(matches!(
            ManinInput::new(
                PreLyAlgebra::zero(4),
                canonical_omega(2),
                vec![e(4, 0)],
                vec![e(4, 2), e(4, 3)],
            ),
            Err(Error::NonComplementarySplits)
        ));
    }

    #[test]
    fn roundtrip_on_the_paper_tables() {
        for p in [
            samples::pre_ly_dim2(&s(1), &s(1)),
            PreLyAlgebra::zero(2),
            samples::pre_ly_dim4(&s(1)),
        ] {
            let staged = roundtrip_correspondence(&p).unwrap();
            for (name, stage) in &staged.stages {
                assert!(
                    stage.passed(),
                    "stage {name} failed: {:?}",
                    stage.witnesses()
                );
            }
            assert!(staged.passed());
        }
    }

    #[test]
    fn roundtrip_survives_degenerate_dimensions() {
        for dim in [0, 1] {
            let staged = roundtrip_correspondence(&PreLyAlgebra::zero(dim)).unwrap();
            assert!(staged.passed(), "dimension {dim}");
        }
    }
}
