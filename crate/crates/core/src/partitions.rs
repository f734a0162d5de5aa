//! Ordered and cyclically ordered partitions of `{1..n}`.
//!
//! A [`CyclicPartition`] is stored in its canonical rotation: the part
//! containing `n` comes last. Equality, hashing and ordering all act on that
//! canonical sequence, so two labels are equal iff they describe the same
//! cyclically ordered partition. Parts are [`Subset`] bitmasks and carry no
//! internal order.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::subset::{Subset, MAX_ELEMENTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("cannot split {{1..{n}}} into {m} cyclically ordered parts (need 2 <= m <= n)")]
    InvalidArity { n: usize, m: usize },
    #[error("ground sets differ: {{1..{left}}} vs {{1..{right}}}")]
    GroundSetMismatch { left: usize, right: usize },
    #[error("partition with {0} parts has no coarsening into at least two parts")]
    TooCoarse(usize),
    #[error("{0} is not a cyclic order (some part has more than one element)")]
    NotACyclicOrder(String),
    #[error("cannot parse partition label `{0}`")]
    Parse(String),
}

/// Checks that `parts` are nonempty, pairwise disjoint and cover `{1..n}`.
fn validate(n: usize, parts: &[Subset]) -> Result<(), PartitionError> {
    if n == 0 || n > MAX_ELEMENTS as usize {
        return Err(PartitionError::NotAPartition(format!(
            "ground set size {n} out of range"
        )));
    }
    let mut seen = Subset::EMPTY;
    for part in parts {
        if part.is_empty() {
            return Err(PartitionError::NotAPartition("empty part".into()));
        }
        if !part.is_disjoint(seen) {
            return Err(PartitionError::NotAPartition(format!(
                "elements {} occur in more than one part",
                part.intersection(seen)
            )));
        }
        seen = seen.union(*part);
    }
    let ground = Subset::full(n as u8);
    if seen != ground {
        let missing = ground.difference(seen);
        return Err(PartitionError::NotAPartition(if missing.is_empty() {
            format!("elements {} exceed {n}", seen.difference(ground))
        } else {
            format!("elements {missing} are not covered")
        }));
    }
    Ok(())
}

fn ground_size(parts: &[Subset]) -> usize {
    parts
        .iter()
        .fold(Subset::EMPTY, |acc, p| acc.union(*p))
        .max_element()
        .unwrap_or(0) as usize
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[Subset]) -> fmt::Result {
    parts.iter().try_for_each(|p| write!(f, "{p}"))
}

/// Parses `{1,3}{2,4}{5}` into its parts.
fn parse_parts(text: &str) -> Result<Vec<Subset>, PartitionError> {
    let err = || PartitionError::Parse(text.to_string());
    let mut parts = Vec::new();
    let mut rest: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if rest.is_empty() {
        return Err(err());
    }
    while !rest.is_empty() {
        let body = rest.strip_prefix('{').ok_or_else(err)?;
        let close = body.find('}').ok_or_else(err)?;
        let mut part = Subset::EMPTY;
        for token in body[..close].split(',') {
            let e: u8 = token.parse().map_err(|_| err())?;
            if e == 0 || e > MAX_ELEMENTS || part.contains(e) {
                return Err(err());
            }
            part = part.with(e);
        }
        parts.push(part);
        rest = body[close + 1..].to_string();
    }
    Ok(parts)
}

/// All orderings of the elements of `part`, in lexicographic order.
pub(crate) fn orderings(part: Subset) -> Vec<Vec<u8>> {
    fn go(remaining: &[u8], prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if remaining.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..remaining.len() {
            let mut rest = remaining.to_vec();
            let e = rest.remove(i);
            prefix.push(e);
            go(&rest, prefix, out);
            prefix.pop();
        }
    }
    let elements: Vec<u8> = part.iter().collect();
    let mut out = Vec::new();
    go(&elements, &mut Vec::new(), &mut out);
    out
}

/// Concatenations of one ordering per part, in lexicographic order.
fn linear_extensions(parts: &[Subset]) -> Vec<Vec<u8>> {
    parts.iter().fold(vec![Vec::new()], |acc, part| {
        let choices = orderings(*part);
        acc.iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut seq = prefix.clone();
                    seq.extend_from_slice(c);
                    seq
                })
            })
            .collect()
    })
}

/// Assigns `1..=last` to `blocks.len()` blocks, calling `emit` for every
/// assignment in which the first `required` blocks are all nonempty.
fn assign_blocks(
    element: u8,
    last: u8,
    blocks: &mut Vec<Subset>,
    required: usize,
    emit: &mut dyn FnMut(&[Subset]),
) {
    let empty = blocks[..required].iter().filter(|b| b.is_empty()).count();
    let remaining = (last + 1 - element) as usize;
    if empty > remaining {
        return;
    }
    if element > last {
        emit(blocks);
        return;
    }
    for i in 0..blocks.len() {
        let old = blocks[i];
        blocks[i] = old.with(element);
        assign_blocks(element + 1, last, blocks, required, emit);
        blocks[i] = old;
    }
}

/// A linearly ordered partition of `{1..n}`; labels the faces of the
/// permutohedron.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedPartition {
    n: u8,
    parts: Vec<Subset>,
}

impl OrderedPartition {
    pub fn new(n: usize, parts: Vec<Subset>) -> Result<Self, PartitionError> {
        validate(n, &parts)?;
        Ok(OrderedPartition { n: n as u8, parts })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn parts(&self) -> &[Subset] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Whether the parts of `self` group into consecutive blocks equal to the
    /// parts of `coarse`.
    pub fn refines(&self, coarse: &OrderedPartition) -> Result<bool, PartitionError> {
        if self.n != coarse.n {
            return Err(PartitionError::GroundSetMismatch {
                left: self.n(),
                right: coarse.n(),
            });
        }
        Ok(greedy_blocks(&self.parts, 0, &coarse.parts))
    }

    /// Linear orders of `{1..n}` refining this partition, lexicographically.
    pub fn linear_refinements(&self) -> Vec<Vec<u8>> {
        linear_extensions(&self.parts)
    }

    /// Appends the part `{n + 1}`, giving a cyclic partition of `{1..n+1}`.
    pub fn append_singleton(&self) -> CyclicPartition {
        let mut parts = self.parts.clone();
        parts.push(Subset::singleton(self.n + 1));
        CyclicPartition { n: self.n + 1, parts }
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Debug for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for OrderedPartition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = parse_parts(s)?;
        OrderedPartition::new(ground_size(&parts), parts)
    }
}

/// All ordered partitions of `{1..n}` into exactly `k` parts, sorted by label.
pub fn enumerate_ordered_partitions(n: usize, k: usize) -> Vec<OrderedPartition> {
    if k == 0 || k > n || n > MAX_ELEMENTS as usize {
        return Vec::new();
    }
    let mut out = Vec::new();
    assign_blocks(1, n as u8, &mut vec![Subset::EMPTY; k], k, &mut |blocks| {
        out.push(OrderedPartition {
            n: n as u8,
            parts: blocks.to_vec(),
        })
    });
    out.sort_by_cached_key(|p| p.to_string());
    out
}

/// Walks `fine` starting at `offset` (cyclically) and checks that its parts
/// group into consecutive blocks equal to `coarse`, in order.
fn greedy_blocks(fine: &[Subset], offset: usize, coarse: &[Subset]) -> bool {
    let m = fine.len();
    let mut next = 0;
    for &target in coarse {
        let mut acc = Subset::EMPTY;
        while acc != target {
            if next == m {
                return false;
            }
            let part = fine[(offset + next) % m];
            next += 1;
            if !part.is_subset_of(target) {
                return false;
            }
            acc = acc.union(part);
        }
    }
    next == m
}

/// A cyclically ordered partition of `{1..n}` in canonical rotation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicPartition {
    n: u8,
    parts: Vec<Subset>,
}

impl CyclicPartition {
    /// Validates `parts` as a partition of `{1..n}` and rotates it so that the
    /// part containing `n` is last.
    pub fn new(n: usize, mut parts: Vec<Subset>) -> Result<Self, PartitionError> {
        validate(n, &parts)?;
        let pos = parts
            .iter()
            .position(|p| p.contains(n as u8))
            .expect("validated partition covers n");
        parts.rotate_left(pos + 1);
        Ok(CyclicPartition { n: n as u8, parts })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Parts in canonical rotation.
    pub fn parts(&self) -> &[Subset] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The part containing `n`.
    pub fn last_part(&self) -> Subset {
        *self.parts.last().expect("partitions are nonempty")
    }

    /// Dimension of the cell labeled by this partition.
    pub fn dim(&self) -> usize {
        self.n() - self.len()
    }

    pub fn is_cyclic_order(&self) -> bool {
        self.parts.iter().all(|p| p.len() == 1)
    }

    /// The parts rotated left by `k`, not canonicalized.
    pub fn rotated(&self, k: usize) -> Vec<Subset> {
        let mut parts = self.parts.clone();
        let m = parts.len();
        parts.rotate_left(k % m);
        parts
    }

    /// Whether the parts of `self`, read cyclically from some starting part,
    /// group into consecutive blocks equal to the parts of `coarse`.
    pub fn refines(&self, coarse: &CyclicPartition) -> Result<bool, PartitionError> {
        if self.n != coarse.n {
            return Err(PartitionError::GroundSetMismatch {
                left: self.n(),
                right: coarse.n(),
            });
        }
        if self.len() < coarse.len() {
            return Ok(false);
        }
        Ok((0..self.len()).any(|r| greedy_blocks(&self.parts, r, &coarse.parts)))
    }

    /// All cyclic orders refining this partition.
    pub fn vertices(&self) -> Vec<CyclicOrder> {
        let mut out: Vec<CyclicOrder> = linear_extensions(&self.parts)
            .into_iter()
            .map(|seq| CyclicOrder::from_sequence(&seq).expect("extension is a permutation"))
            .collect();
        out.sort();
        out
    }

    /// All partitions obtained by merging two cyclically adjacent parts.
    pub fn coarsenings(&self) -> Result<Vec<CyclicPartition>, PartitionError> {
        let m = self.len();
        if m < 3 {
            return Err(PartitionError::TooCoarse(m));
        }
        let mut out: Vec<CyclicPartition> = (0..m)
            .map(|i| {
                let mut parts = self.rotated(i);
                let first = parts.remove(0);
                parts[0] = parts[0].union(first);
                CyclicPartition::new(self.n(), parts).expect("merge keeps a partition")
            })
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// All partitions obtained by splitting one part into two consecutive
    /// nonempty parts, in either order.
    pub fn one_step_refinements(&self) -> Vec<CyclicPartition> {
        let mut out = Vec::new();
        for (i, part) in self.parts.iter().enumerate() {
            if part.len() < 2 {
                continue;
            }
            let bits = part.bits();
            // Nonempty proper submasks of the part.
            let mut sub = (bits - 1) & bits;
            while sub != 0 {
                let first = Subset::from_bits(sub);
                let second = part.difference(first);
                let mut parts = self.parts.clone();
                parts[i] = first;
                parts.insert(i + 1, second);
                out.push(CyclicPartition::new(self.n(), parts).expect("split keeps a partition"));
                sub = (sub - 1) & bits;
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for CyclicPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Debug for CyclicPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `{1,3}{2,4}{5}`; the ground set is `{1..max}` and the result is
/// canonicalized.
impl FromStr for CyclicPartition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        canonicalize(&parse_parts(s)?)
    }
}

/// Canonical form of a cyclically ordered partition given in any rotation.
/// The ground set is `{1..max element}`.
pub fn canonicalize(parts: &[Subset]) -> Result<CyclicPartition, PartitionError> {
    CyclicPartition::new(ground_size(parts), parts.to_vec())
}

/// All cyclically ordered partitions of `{1..n}` into exactly `m` parts,
/// sorted by their label string.
pub fn enumerate_cyclic_partitions(
    n: usize,
    m: usize,
) -> Result<Vec<CyclicPartition>, PartitionError> {
    if m < 2 || m > n || n > MAX_ELEMENTS as usize {
        return Err(PartitionError::InvalidArity { n, m });
    }
    let mut out = Vec::new();
    let mut blocks = vec![Subset::EMPTY; m];
    blocks[m - 1] = Subset::singleton(n as u8);
    // Elements 1..n-1 go anywhere; the first m-1 blocks must be filled.
    assign_blocks(1, n as u8 - 1, &mut blocks, m - 1, &mut |b| {
        out.push(CyclicPartition {
            n: n as u8,
            parts: b.to_vec(),
        })
    });
    out.sort_by_cached_key(|p| p.to_string());
    Ok(out)
}

/// A cyclic partition into singletons: a cyclic ordering of `{1..n}`.
/// Orders by the permutation obtained by cutting at `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicOrder(CyclicPartition);

impl CyclicOrder {
    /// From a sequence listing each of `1..=n` once, in cyclic order.
    pub fn from_sequence(sequence: &[u8]) -> Result<Self, PartitionError> {
        let parts: Vec<Subset> = sequence.iter().map(|&e| Subset::singleton(e)).collect();
        CyclicOrder::try_from(CyclicPartition::new(sequence.len(), parts)?)
    }

    /// Inverse of [`CyclicOrder::to_permutation`]: appends `n`.
    pub fn from_permutation(permutation: &[u8]) -> Result<Self, PartitionError> {
        let mut seq = permutation.to_vec();
        seq.push(permutation.len() as u8 + 1);
        CyclicOrder::from_sequence(&seq)
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn partition(&self) -> &CyclicPartition {
        &self.0
    }

    /// Cut the cyclic order at `n` and omit `n`: the sequence read from just
    /// after `n` around to just before it.
    pub fn to_permutation(&self) -> Vec<u8> {
        let parts = self.0.parts();
        parts[..parts.len() - 1]
            .iter()
            .map(|p| p.min_element().expect("singleton"))
            .collect()
    }
}

impl TryFrom<CyclicPartition> for CyclicOrder {
    type Error = PartitionError;

    fn try_from(p: CyclicPartition) -> Result<Self, Self::Error> {
        if p.is_cyclic_order() {
            Ok(CyclicOrder(p))
        } else {
            Err(PartitionError::NotACyclicOrder(p.to_string()))
        }
    }
}

impl From<CyclicOrder> for CyclicPartition {
    fn from(v: CyclicOrder) -> Self {
        v.0
    }
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Free-function form of [`CyclicOrder::to_permutation`].
pub fn vertex_to_permutation(v: &CyclicOrder) -> Vec<u8> {
    v.to_permutation()
}

/// Free-function form of [`CyclicPartition::vertices`].
pub fn cell_vertices(c: &CyclicPartition) -> Vec<CyclicOrder> {
    c.vertices()
}

/// Free-function form of [`CyclicPartition::refines`].
pub fn refines(fine: &CyclicPartition, coarse: &CyclicPartition) -> Result<bool, PartitionError> {
    fine.refines(coarse)
}

/// Free-function form of [`CyclicPartition::coarsenings`].
pub fn coarsenings(c: &CyclicPartition) -> Result<Vec<CyclicPartition>, PartitionError> {
    c.coarsenings()
}
