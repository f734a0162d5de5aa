//! The six representative pentagons, one per type of generic moduli space,
//! with their expected classification.

use crate::linkage::{LengthTemplate, TemplateLength};
use crate::rational::Rational;

/// Default value substituted for `ε`.
pub fn default_epsilon() -> Rational {
    Rational::new(1, 100)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub classification: String,
    pub components: usize,
    pub euler_characteristic: i64,
    /// `(V, E, F)` of the complex.
    pub f_vector: [usize; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representative {
    pub template: LengthTemplate,
    pub expected: Expectation,
}

fn template(entries: &[Option<i64>]) -> LengthTemplate {
    LengthTemplate(
        entries
            .iter()
            .map(|e| match e {
                Some(l) => TemplateLength::Fixed(Rational::from_integer(*l)),
                None => TemplateLength::Epsilon,
            })
            .collect(),
    )
}

fn representative(
    entries: &[Option<i64>],
    classification: &str,
    components: usize,
    euler_characteristic: i64,
    f_vector: [usize; 3],
) -> Representative {
    Representative {
        template: template(entries),
        expected: Expectation {
            classification: classification.to_string(),
            components,
            euler_characteristic,
            f_vector,
        },
    }
}

/// The representatives in their customary order; `None` stands for `ε`.
pub fn representatives() -> Vec<Representative> {
    const E: Option<i64> = None;
    let s = Some;
    vec![
        representative(&[s(1), s(1), s(1), s(1), s(3)], "sphere", 1, 2, [24, 36, 14]),
        representative(&[s(1), s(1), s(1), E, s(2)], "torus", 1, 0, [24, 42, 18]),
        representative(&[s(2), s(2), s(1), s(1), s(3)], "genus-2 surface", 1, -2, [24, 48, 22]),
        representative(&[s(1), s(1), E, E, s(1)], "2 tori", 2, 0, [24, 42, 18]),
        representative(&[s(2), s(1), s(1), s(1), s(2)], "genus-3 surface", 1, -4, [24, 54, 26]),
        representative(&[s(1), s(1), s(1), s(1), s(1)], "genus-4 surface", 1, -6, [24, 60, 30]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkage::Stability;

    #[test]
    fn names_and_stability() {
        let reps = representatives();
        let names: Vec<String> = reps.iter().map(|r| r.template.to_string()).collect();
        assert_eq!(
            names,
            [
                "(1,1,1,1,3)",
                "(1,1,1,ε,2)",
                "(2,2,1,1,3)",
                "(1,1,ε,ε,1)",
                "(2,1,1,1,2)",
                "(1,1,1,1,1)"
            ]
        );
        for r in &reps {
            assert_eq!(r.template.check_stability(&default_epsilon()), Ok(Stability::Stable));
        }
    }
}
