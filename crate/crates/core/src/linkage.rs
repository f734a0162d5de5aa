//! Polygonal linkages with exact rational edge lengths.
//!
//! A [`Linkage`] can only be obtained through [`Linkage::new`], which checks
//! positivity, the polygon inequality and genericity. Every other module
//! relies on those three properties.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{ParseRationalError, Rational};
use crate::subset::Subset;

/// Largest number of edges accepted. Genericity is checked over all subsets.
pub const MAX_EDGES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkageError {
    #[error("a linkage needs at least 3 edges, got {0}")]
    TooFewEdges(usize),
    #[error("at most {MAX_EDGES} edges are supported, got {0}")]
    TooManyEdges(usize),
    #[error("edge {index} has non-positive length {length}")]
    NonPositiveLength { index: usize, length: Box<Rational> },
    #[error("edge {index} of length {length} is longer than the rest together ({rest})")]
    ViolatesPolygonInequality {
        index: usize,
        length: Box<Rational>,
        rest: Box<Rational>,
    },
    #[error("linkage is not generic: edges {witness} sum to exactly half the perimeter")]
    NonGeneric { witness: Subset },
    #[error("empty subset")]
    EmptySubset,
    #[error("subset {subset} is not contained in {{1..{n}}}")]
    SubsetOutOfRange { subset: Subset, n: usize },
    #[error("not a partition of {{1..{n}}}: {reason}")]
    NotAPartition { n: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("length #{position} (`{token}`): {source}")]
pub struct ParseLengthsError {
    pub position: usize,
    pub token: String,
    #[source]
    pub source: ParseRationalError,
}

/// Parses the comma separated length syntax, e.g. `1,1,1,1/100,2`.
pub fn parse_lengths(text: &str) -> Result<Vec<Rational>, ParseLengthsError> {
    text.split(',')
        .enumerate()
        .map(|(i, token)| {
            token.parse::<Rational>().map_err(|source| ParseLengthsError {
                position: i + 1,
                token: token.trim().to_string(),
                source,
            })
        })
        .collect()
}

/// A validated generic polygonal linkage `(l_1, ..., l_n)`.
#[derive(Clone)]
pub struct Linkage {
    lengths: Vec<Rational>,
    total: Rational,
    /// `admissible[mask]` for every subset mask of `{1..n}`.
    admissible: Vec<bool>,
}

impl Linkage {
    pub fn new(lengths: Vec<Rational>) -> Result<Self, LinkageError> {
        let n = lengths.len();
        if n < 3 {
            return Err(LinkageError::TooFewEdges(n));
        }
        if n > MAX_EDGES {
            return Err(LinkageError::TooManyEdges(n));
        }
        if let Some((i, l)) = lengths.iter().enumerate().find(|(_, l)| !l.is_positive()) {
            return Err(LinkageError::NonPositiveLength {
                index: i + 1,
                length: Box::new(l.clone()),
            });
        }
        let total: Rational = lengths.iter().sum();

        // Longest edge, first one on ties.
        let (imax, lmax) = lengths
            .iter()
            .enumerate()
            .fold((0, &lengths[0]), |best, (i, l)| if l > best.1 { (i, l) } else { best });
        let rest = &total - lmax;
        if lmax > &rest {
            return Err(LinkageError::ViolatesPolygonInequality {
                index: imax + 1,
                length: Box::new(lmax.clone()),
                rest: Box::new(rest),
            });
        }

        // Exact subset sums over a common denominator.
        let denominator = lengths
            .iter()
            .fold(BigInt::one(), |acc, l| acc.lcm(l.denominator()));
        let scaled: Vec<BigInt> = lengths
            .iter()
            .map(|l| l.numerator() * (&denominator / l.denominator()))
            .collect();
        let scaled_total: BigInt = scaled.iter().sum();

        let size = 1usize << n;
        let mut sums: Vec<BigInt> = Vec::with_capacity(size);
        sums.push(BigInt::zero());
        for mask in 1..size {
            let low = mask.trailing_zeros() as usize;
            let s = &sums[mask & (mask - 1)] + &scaled[low];
            sums.push(s);
        }

        // Witness convention: the half containing edge n, smallest mask first.
        let top = 1usize << (n - 1);
        for rest_mask in 0..top {
            let mask = rest_mask | top;
            if &sums[mask] * 2 == scaled_total {
                return Err(LinkageError::NonGeneric {
                    witness: Subset::from_bits(mask as u32),
                });
            }
        }

        let admissible = sums.iter().map(|s| s * 2 <= scaled_total).collect();
        Ok(Linkage {
            lengths,
            total,
            admissible,
        })
    }

    /// Convenience constructor for integer lengths.
    pub fn from_integers(lengths: &[i64]) -> Result<Self, LinkageError> {
        Linkage::new(lengths.iter().map(|&l| Rational::from_integer(l)).collect())
    }

    pub fn n(&self) -> usize {
        self.lengths.len()
    }

    pub fn lengths(&self) -> &[Rational] {
        &self.lengths
    }

    pub fn total(&self) -> &Rational {
        &self.total
    }

    /// `{1..n}` as a subset.
    pub fn ground_set(&self) -> Subset {
        Subset::full(self.n() as u8)
    }

    pub fn subset_length(&self, subset: Subset) -> Rational {
        subset.iter().map(|i| &self.lengths[i as usize - 1]).sum()
    }

    /// Whether the edges in `part` are no longer than the remaining edges.
    pub fn is_admissible_part(&self, part: Subset) -> Result<bool, LinkageError> {
        if part.is_empty() {
            return Err(LinkageError::EmptySubset);
        }
        if !part.is_subset_of(self.ground_set()) {
            return Err(LinkageError::SubsetOutOfRange {
                subset: part,
                n: self.n(),
            });
        }
        Ok(self.admissible[part.bits() as usize])
    }

    /// Whether every part of the partition is admissible. The order of the
    /// parts does not matter.
    pub fn is_admissible_partition(&self, parts: &[Subset]) -> Result<bool, LinkageError> {
        self.check_partition(parts)?;
        Ok(parts.iter().all(|p| self.admissible[p.bits() as usize]))
    }

    fn check_partition(&self, parts: &[Subset]) -> Result<(), LinkageError> {
        let n = self.n();
        let not_partition = |reason: String| LinkageError::NotAPartition { n, reason };
        let mut seen = Subset::EMPTY;
        for part in parts {
            if part.is_empty() {
                return Err(not_partition("empty part".into()));
            }
            if !part.is_disjoint(seen) {
                return Err(not_partition(format!(
                    "elements {} occur twice",
                    part.intersection(seen)
                )));
            }
            seen = seen.union(*part);
        }
        if seen != self.ground_set() {
            let missing = self.ground_set().difference(seen);
            let extra = seen.difference(self.ground_set());
            return Err(not_partition(if !missing.is_empty() {
                format!("elements {missing} are missing")
            } else {
                format!("elements {extra} are out of range")
            }));
        }
        Ok(())
    }

    /// The same linkage with every length multiplied by `factor`.
    pub fn scaled(&self, factor: &Rational) -> Result<Linkage, LinkageError> {
        Linkage::new(self.lengths.iter().map(|l| l * factor).collect())
    }

    /// The same lengths relabeled so that the new edge `i` is old edge
    /// `permutation[i - 1]`.
    pub fn relabeled(&self, permutation: &[u8]) -> Result<Linkage, LinkageError> {
        assert_eq!(permutation.len(), self.n());
        Linkage::new(
            permutation
                .iter()
                .map(|&p| self.lengths[p as usize - 1].clone())
                .collect(),
        )
    }

    /// Comma separated form accepted by [`parse_lengths`].
    pub fn to_spec(&self) -> String {
        self.lengths
            .iter()
            .map(Rational::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl PartialEq for Linkage {
    fn eq(&self, other: &Self) -> bool {
        self.lengths == other.lengths
    }
}

impl Eq for Linkage {}

impl fmt::Debug for Linkage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Linkage{self}")
    }
}

/// `(l_1,...,l_n)`.
impl fmt::Display for Linkage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_spec())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkageSpecError {
    #[error(transparent)]
    Parse(#[from] ParseLengthsError),
    #[error(transparent)]
    Invalid(#[from] LinkageError),
}

impl FromStr for Linkage {
    type Err = LinkageSpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Linkage::new(parse_lengths(s)?)?)
    }
}

/// One entry of a length vector that may contain a small symbolic `ε`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TemplateLength {
    Fixed(Rational),
    Epsilon,
}

/// A length vector such as `(1,1,ε,ε,1)`, instantiated with a concrete `ε`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthTemplate(pub Vec<TemplateLength>);

/// Result of comparing a template at `ε` and at `ε/10`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stability {
    Stable,
    /// Subsets whose admissibility differs between the two values of `ε`.
    Unstable { disagreements: Vec<Subset> },
}

impl LengthTemplate {
    pub fn from_integers(lengths: &[i64]) -> Self {
        LengthTemplate(
            lengths
                .iter()
                .map(|&l| TemplateLength::Fixed(Rational::from_integer(l)))
                .collect(),
        )
    }

    pub fn has_epsilon(&self) -> bool {
        self.0.contains(&TemplateLength::Epsilon)
    }

    pub fn instantiate(&self, epsilon: &Rational) -> Result<Linkage, LinkageError> {
        Linkage::new(
            self.0
                .iter()
                .map(|l| match l {
                    TemplateLength::Fixed(r) => r.clone(),
                    TemplateLength::Epsilon => epsilon.clone(),
                })
                .collect(),
        )
    }

    /// Re-evaluates every subset predicate at `ε/10`. All combinatorics of the
    /// complex are determined by subset admissibility, so agreement there means
    /// `ε` is small enough.
    pub fn check_stability(&self, epsilon: &Rational) -> Result<Stability, LinkageError> {
        let coarse = self.instantiate(epsilon)?;
        let fine = self.instantiate(&(epsilon / &Rational::from_integer(10)))?;
        let disagreements: Vec<Subset> = (1..coarse.admissible.len())
            .filter(|&m| coarse.admissible[m] != fine.admissible[m])
            .map(|m| Subset::from_bits(m as u32))
            .collect();
        Ok(if disagreements.is_empty() {
            Stability::Stable
        } else {
            Stability::Unstable { disagreements }
        })
    }
}

/// `(1,1,ε,ε,1)`.
impl fmt::Display for LengthTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match l {
                TemplateLength::Fixed(r) => write!(f, "{r}")?,
                TemplateLength::Epsilon => f.write_str("ε")?,
            }
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(elements: &[u8]) -> Subset {
        Subset::from_elements(elements.iter().copied())
    }

    fn brute_force_witnesses(lengths: &[i64]) -> Vec<Subset> {
        let n = lengths.len();
        let total: i64 = lengths.iter().sum();
        (1..(1u32 << n) - 1)
            .filter(|&m| {
                let sum: i64 = (0..n).filter(|i| m >> i & 1 == 1).map(|i| lengths[i]).sum();
                2 * sum == total
            })
            .map(Subset::from_bits)
            .collect()
    }

    #[test]
    fn sphere_representative_is_valid() {
        let l = Linkage::from_integers(&[1, 1, 1, 1, 3]).unwrap();
        assert_eq!(l.total(), &Rational::from_integer(7));
        assert_eq!(l.to_string(), "(1,1,1,1,3)");
    }

    #[test]
    fn degenerate_triangle_is_non_generic() {
        assert_eq!(
            Linkage::from_integers(&[1, 2, 3]),
            Err(LinkageError::NonGeneric { witness: s(&[3]) })
        );
    }

    #[test]
    fn non_generic_witness_is_a_half() {
        let err = Linkage::from_integers(&[1, 1, 1, 1, 2]).unwrap_err();
        assert_eq!(err, LinkageError::NonGeneric { witness: s(&[1, 5]) });
        let all = brute_force_witnesses(&[1, 1, 1, 1, 2]);
        assert!(all.contains(&s(&[1, 5])));
        assert_eq!(all.len(), 8);
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(Linkage::from_integers(&[1, 1]), Err(LinkageError::TooFewEdges(2)));
        assert_eq!(Linkage::new(vec![]), Err(LinkageError::TooFewEdges(0)));
        assert!(matches!(
            Linkage::from_integers(&[1, 0, 1, 1]),
            Err(LinkageError::NonPositiveLength { index: 2, .. })
        ));
        assert!(matches!(
            Linkage::from_integers(&[1, 1, 1, 5]),
            Err(LinkageError::ViolatesPolygonInequality { index: 4, .. })
        ));
        assert!(matches!(
            Linkage::from_integers(&[1; 21]),
            Err(LinkageError::TooManyEdges(21))
        ));
    }

    #[test]
    fn part_admissibility() {
        let l = Linkage::from_integers(&[1, 1, 1, 1, 3]).unwrap();
        assert_eq!(l.is_admissible_part(s(&[5])), Ok(true));
        assert_eq!(l.is_admissible_part(s(&[4, 5])), Ok(false));
        assert_eq!(l.is_admissible_part(Subset::EMPTY), Err(LinkageError::EmptySubset));
        assert!(matches!(
            l.is_admissible_part(s(&[6])),
            Err(LinkageError::SubsetOutOfRange { .. })
        ));
        let eq = Linkage::from_integers(&[1, 1, 1, 1, 1]).unwrap();
        assert_eq!(eq.is_admissible_part(s(&[2, 3, 4])), Ok(false));
    }

    #[test]
    fn partition_admissibility() {
        let l = Linkage::from_integers(&[2, 2, 1, 1, 3]).unwrap();
        assert_eq!(l.is_admissible_partition(&[s(&[1]), s(&[2, 3, 4]), s(&[5])]), Ok(true));
        let l = Linkage::from_integers(&[2, 1, 1, 1, 2]).unwrap();
        assert_eq!(l.is_admissible_partition(&[s(&[2]), s(&[1, 3, 4]), s(&[5])]), Ok(false));
        let l = Linkage::from_integers(&[1, 1, 1, 1, 1]).unwrap();
        let singletons: Vec<_> = (1..=5).map(Subset::singleton).collect();
        assert_eq!(l.is_admissible_partition(&singletons), Ok(true));
    }

    #[test]
    fn partition_shape_errors() {
        let l = Linkage::from_integers(&[1, 1, 1, 1, 1]).unwrap();
        for bad in [
            vec![s(&[1, 2]), s(&[2, 3]), s(&[4, 5])],
            vec![s(&[1, 2]), s(&[4, 5])],
            vec![s(&[1, 2, 3]), s(&[4, 5, 6])],
            vec![s(&[1, 2, 3]), Subset::EMPTY, s(&[4, 5])],
        ] {
            assert!(matches!(
                l.is_admissible_partition(&bad),
                Err(LinkageError::NotAPartition { .. })
            ));
        }
    }

    #[test]
    fn parse_length_lists() {
        let l: Linkage = "1,1,1,1/100,2".parse().unwrap();
        assert_eq!(l.lengths()[3], Rational::new(1, 100));
        assert_eq!(l.to_spec(), "1,1,1,1/100,2");
        let err = "1,x,1".parse::<Linkage>().unwrap_err();
        assert!(matches!(err, LinkageSpecError::Parse(ParseLengthsError { position: 2, .. })));
        assert!(matches!(
            "1,2,3".parse::<Linkage>(),
            Err(LinkageSpecError::Invalid(LinkageError::NonGeneric { .. }))
        ));
    }

    #[test]
    fn epsilon_templates() {
        use TemplateLength::*;
        let one = || Fixed(Rational::one());
        let t = LengthTemplate(vec![one(), one(), Epsilon, Epsilon, one()]);
        assert_eq!(t.to_string(), "(1,1,ε,ε,1)");
        assert_eq!(t.check_stability(&Rational::new(1, 100)), Ok(Stability::Stable));
        // 1 + 1/2 + 1/2 = 1 + 1.
        assert!(matches!(
            t.instantiate(&Rational::new(1, 2)),
            Err(LinkageError::NonGeneric { .. })
        ));
        // Generic at 3/4, but {1,3,4} is admissible only at 3/40.
        let unstable = t.check_stability(&Rational::new(3, 4)).unwrap();
        assert!(matches!(unstable, Stability::Unstable { ref disagreements } if !disagreements.is_empty()));
    }
}
