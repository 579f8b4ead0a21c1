//! Machine-readable outcomes of axiom checks and exactness certificates.

use serde::Serialize;

use crate::field::Scalar;

/// One failed instance of an identity, with the basis elements that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<String>,
    /// Left side minus right side, in the coordinates of the target space.
    pub defect: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub name: String,
    pub value: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub subject: String,
    pub axioms: Vec<String>,
    pub violations: Vec<Violation>,
    pub flags: Vec<Flag>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport { subject: subject.into(), axioms: Vec::new(), violations: Vec::new(), flags: Vec::new() }
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn flag(&self, name: &str) -> Option<bool> {
        self.flags.iter().find(|f| f.name == name).map(|f| f.value)
    }

    pub fn set_flag(&mut self, name: &str, value: bool) {
        self.flags.push(Flag { name: name.to_string(), value });
    }

    /// Axioms with at least one violation, in checking order.
    pub fn violated_axioms(&self) -> Vec<&str> {
        self.axioms
            .iter()
            .filter(|a| self.violations.iter().any(|v| &v.axiom == *a))
            .map(String::as_str)
            .collect()
    }

    pub fn holds(&self, axiom: &str) -> bool {
        !self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub(crate) fn check(&mut self, axiom: &str, witness: impl FnOnce() -> Vec<String>, defect: Vec<Scalar>) {
        if defect.iter().any(|x| !x.is_zero()) {
            self.violations.push(Violation { axiom: axiom.to_string(), witness: witness(), defect });
        }
    }

    pub(crate) fn declare(&mut self, axioms: &[&str]) {
        self.axioms.extend(axioms.iter().map(|a| a.to_string()));
    }

    /// Short human-readable description of the first violation.
    pub fn summary(&self) -> String {
        match self.first_violation() {
            None => format!("{}: all {} identities hold", self.subject, self.axioms.len()),
            Some(v) => format!(
                "{}: {} violation(s); first: {} at ({})",
                self.subject,
                self.violations.len(),
                v.axiom,
                v.witness.join(", ")
            ),
        }
    }
}

/// Exactness certificate at one joint `A -f-> B -g-> C`: `dim Im f` against `dim Ker g`
/// and whether the two subspaces coincide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Joint {
    pub name: String,
    pub image_dim: usize,
    pub kernel_dim: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionEntry {
    pub name: String,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct ExactnessReport {
    pub subject: String,
    pub terms: Vec<DimensionEntry>,
    pub joints: Vec<Joint>,
    /// Side conditions (commuting squares, well-definedness, cross-checks).
    pub checks: Vec<Flag>,
}

impl ExactnessReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ExactnessReport { subject: subject.into(), ..Default::default() }
    }

    pub fn holds(&self) -> bool {
        self.joints.iter().all(|j| j.holds) && self.checks.iter().all(|c| c.value)
    }

    pub fn term(&mut self, name: &str, dim: usize) {
        self.terms.push(DimensionEntry { name: name.to_string(), dim });
    }

    pub fn term_dim(&self, name: &str) -> Option<usize> {
        self.terms.iter().find(|t| t.name == name).map(|t| t.dim)
    }

    pub fn joint(&mut self, name: &str, image_dim: usize, kernel_dim: usize, holds: bool) {
        self.joints.push(Joint { name: name.to_string(), image_dim, kernel_dim, holds });
    }

    pub fn check(&mut self, name: &str, value: bool) {
        self.checks.push(Flag { name: name.to_string(), value });
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .joints
            .iter()
            .filter(|j| !j.holds)
            .map(|j| format!("joint {}: dim Im = {}, dim Ker = {}", j.name, j.image_dim, j.kernel_dim))
            .collect();
        out.extend(self.checks.iter().filter(|c| !c.value).map(|c| format!("check {} failed", c.name)));
        out
    }
}
