//! Classification of the six representatives against their expected types.
//!
//! Any sufficiently small `ε` gives the same combinatorics; before
//! classifying, each template with an `ε` is re-checked at `ε/10` and a
//! disagreement counts as a failure.

use std::fmt::Write as _;

use crate::linkage::Stability;
use crate::rational::Rational;
use crate::representatives::{representatives, Expectation, Representative};
use crate::topology::classify_linkage;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Observed {
    pub classification: String,
    pub components: usize,
    pub euler_characteristic: i64,
    pub f_vector: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyLine {
    /// Template notation, e.g. `(1,1,ε,ε,1)`.
    pub name: String,
    /// Instantiated lengths, if `ε` gave a valid linkage.
    pub linkage: Option<String>,
    pub expected: Expectation,
    pub observed: Option<Observed>,
    /// Human-readable reasons for failure; empty on success.
    pub problems: Vec<String>,
}

impl VerifyLine {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub epsilon: Rational,
    pub lines: Vec<VerifyLine>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.lines.iter().all(VerifyLine::passed)
    }

    /// 0 if everything matched, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            let status = if line.passed() { "PASS" } else { "FAIL" };
            let shown = line
                .observed
                .as_ref()
                .map_or("-", |o| o.classification.as_str());
            let _ = writeln!(
                out,
                "{status}  {:<14} {:<18} {}",
                line.name,
                line.linkage.as_deref().unwrap_or("-"),
                shown
            );
            for p in &line.problems {
                let _ = writeln!(out, "      {p}");
            }
        }
        let passed = self.lines.iter().filter(|l| l.passed()).count();
        let _ = writeln!(out, "{passed}/{} passed (ε = {})", self.lines.len(), self.epsilon);
        out
    }
}

fn check(rep: &Representative, epsilon: &Rational) -> VerifyLine {
    let mut line = VerifyLine {
        name: rep.template.to_string(),
        linkage: None,
        expected: rep.expected.clone(),
        observed: None,
        problems: Vec::new(),
    };
    let linkage = match rep.template.instantiate(epsilon) {
        Ok(l) => l,
        Err(e) => {
            line.problems.push(format!("invalid at ε = {epsilon}: {e}"));
            return line;
        }
    };
    line.linkage = Some(linkage.to_spec());
    if rep.template.has_epsilon() {
        if let Ok(Stability::Unstable { disagreements }) = rep.template.check_stability(epsilon) {
            let shown: Vec<String> = disagreements.iter().take(4).map(|s| s.to_string()).collect();
            line.problems.push(format!(
                "ε = {epsilon} is not small enough: admissibility of {} changes at ε/10",
                shown.join(", ")
            ));
        }
    }
    let report = match classify_linkage(&linkage) {
        Ok(r) => r,
        Err(e) => {
            line.problems.push(format!("classification failed: {e}"));
            return line;
        }
    };
    let observed = Observed {
        classification: report.classification.clone(),
        components: report.component_count(),
        euler_characteristic: report.euler_characteristic(),
        f_vector: report.f_vector.clone(),
    };
    let exp = &rep.expected;
    if observed.classification != exp.classification {
        line.problems.push(format!(
            "classification: expected {}, got {}",
            exp.classification, observed.classification
        ));
    }
    if observed.components != exp.components {
        line.problems.push(format!(
            "components: expected {}, got {}",
            exp.components, observed.components
        ));
    }
    if observed.euler_characteristic != exp.euler_characteristic {
        line.problems.push(format!(
            "χ: expected {}, got {}",
            exp.euler_characteristic, observed.euler_characteristic
        ));
    }
    if observed.f_vector != exp.f_vector {
        line.problems.push(format!(
            "f-vector: expected {:?}, got {:?}",
            exp.f_vector, observed.f_vector
        ));
    }
    line.observed = Some(observed);
    line
}

/// Checks the given representatives, one thread each; lines keep input order.
pub fn verify_with(reps: &[Representative], epsilon: &Rational) -> VerifyReport {
    let lines = std::thread::scope(|scope| {
        let handles: Vec<_> = reps
            .iter()
            .map(|rep| scope.spawn(move || check(rep, epsilon)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    });
    VerifyReport {
        epsilon: epsilon.clone(),
        lines,
    }
}

pub fn verify_all(epsilon: &Rational) -> VerifyReport {
    verify_with(&representatives(), epsilon)
}
