//! Verdicts with explicit counterexamples.
//!
//! Every verifier in the crate returns a [`CheckReport`]: a pass/fail verdict
//! plus one [`Witness`] per violated identity instance. Reports are
//! deterministic; witnesses are sorted by `(axiom, indices)`.

use std::collections::{BTreeMap, BTreeSet};

use crate::linalg::Vector;

/// A single violated identity instance.
///
/// Conventions:
/// - `indices` are 1-based basis indices, matching the document format. For
///   operator identities the final index selects the module basis vector the
///   operators were applied to.
/// - scalar identities are reported as length-1 vectors;
/// - identities of the form `expr = 0` use a zero `rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl Witness {
    /// Builds a witness from 0-based loop indices; they are stored 1-based.
    pub fn new(axiom: &str, zero_based: &[usize], lhs: Vector, rhs: Vector) -> Self {
        Witness {
            axiom: axiom.to_owned(),
            indices: zero_based.iter().map(|&i| i + 1).collect(),
            lhs,
            rhs,
        }
    }
}

/// Outcome of an axiom or property check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    checked: BTreeSet<String>,
    witnesses: Vec<Witness>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    /// Registers axiom identifiers so that a clean pass still lists what was
    /// checked (violation count zero).
    pub fn with_axioms(axioms: &[&str]) -> Self {
        let mut r = CheckReport::new();
        for a in axioms {
            r.checked.insert((*a).to_owned());
        }
        r
    }

    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn witnesses(&self) -> &[Witness] {
        &self.witnesses
    }

    pub fn checked_axioms(&self) -> impl Iterator<Item = &str> {
        self.checked.iter().map(String::as_str)
    }

    /// Violation count per checked axiom, zero counts included.
    pub fn counts(&self) -> BTreeMap<String, usize> {
        let mut counts: BTreeMap<String, usize> =
            self.checked.iter().map(|a| (a.clone(), 0)).collect();
        for w in &self.witnesses {
            *counts.entry(w.axiom.clone()).or_insert(0) += 1;
        }
        counts
    }

    /// Registers an axiom identifier without recording a violation.
    pub fn register_axiom(&mut self, axiom: &str) {
        self.checked.insert(axiom.to_owned());
    }

    pub fn record(&mut self, witness: Witness) {
        self.checked.insert(witness.axiom.clone());
        self.witnesses.push(witness);
    }

    /// Records a witness when `lhs != rhs`.
    pub fn expect_eq(&mut self, axiom: &str, indices: &[usize], lhs: Vector, rhs: Vector) {
        if lhs != rhs {
            self.record(Witness::new(axiom, indices, lhs, rhs));
        }
    }

    /// Records a witness when `value` is not the zero vector.
    pub fn expect_zero(&mut self, axiom: &str, indices: &[usize], value: Vector) {
        if !value.is_zero() {
            let zero = Vector::zero(value.len());
            self.record(Witness::new(axiom, indices, value, zero));
        }
    }

    /// Absorbs `other`, keeping its axiom identifiers as they are.
    pub fn merge(&mut self, other: CheckReport) {
        self.checked.extend(other.checked);
        self.witnesses.extend(other.witnesses);
    }

    /// Absorbs `other`, prefixing its axiom identifiers with `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for a in other.checked {
            self.checked.insert(format!("{prefix}/{a}"));
        }
        for mut w in other.witnesses {
            w.axiom = format!("{prefix}/{}", w.axiom);
            self.witnesses.push(w);
        }
    }

    /// Sorts witnesses into the canonical `(axiom, indices)` order.
    pub fn finish(mut self) -> Self {
        self.witnesses
            .sort_by(|a, b| (&a.axiom, &a.indices).cmp(&(&b.axiom, &b.indices)));
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_tracks_witnesses() {
        let mut r = CheckReport::with_axioms(&["a", "b"]);
        assert!(r.passed());
        r.expect_zero("a", &[1, 0], Vector::from_ints(&[0, 1]));
        assert!(!r.passed());
        let counts = r.counts();
        assert_eq!(counts["a"], 1);
        assert_eq!(counts["b"], 0);
        assert_eq!(r.witnesses()[0].indices, vec![2, 1]);
    }

    #[test]
    fn finish_orders_witnesses() {
        let mut r = CheckReport::new();
        r.expect_zero("b", &[0], Vector::from_ints(&[1]));
        r.expect_zero("a", &[1], Vector::from_ints(&[1]));
        r.expect_zero("a", &[0], Vector::from_ints(&[1]));
        let r = r.finish();
        let order: Vec<_> = r
            .witnesses()
            .iter()
            .map(|w| (w.axiom.clone(), w.indices.clone()))
            .collect();
        assert_eq!(
            order,
            vec![
                ("a".to_owned(), vec![1]),
                ("a".to_owned(), vec![2]),
                ("b".to_owned(), vec![1]),
            ]
        );
    }

    #[test]
    fn absorb_prefixes_axioms() {
        let mut inner = CheckReport::with_axioms(&["x"]);
        inner.expect_zero("x", &[0], Vector::from_ints(&[1]));
        let mut outer = CheckReport::new();
        outer.absorb("stage", inner);
        assert_eq!(outer.witnesses()[0].axiom, "stage/x");
        assert!(outer.counts().contains_key("stage/x"));
    }
}
