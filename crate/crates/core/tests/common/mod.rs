//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the partition or complex code of the library; labels are plain
//! `Vec<Vec<u8>>` and strings.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use polylink::Rational;

pub type Parts = Vec<Vec<u8>>;

/// Every set partition of `{1..n}`, via restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Parts> {
    fn go(i: usize, n: usize, blocks: &mut Parts, out: &mut Vec<Parts>) {
        if i > n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i as u8);
            go(i + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i as u8]);
        go(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(1, n, &mut Vec::new(), &mut out);
    out
}

/// All orderings of `items`.
pub fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, first.clone());
            out.push(tail);
        }
    }
    out
}

pub fn part_length(lengths: &[Rational], part: &[u8]) -> Rational {
    part.iter().map(|&i| lengths[i as usize - 1].clone()).sum()
}

/// Admissibility of every subset, indexed by bitmask (bit `i - 1` for
/// element `i`). A part is admissible when it is no longer than its
/// complement.
pub struct Admissibility(Vec<bool>);

impl Admissibility {
    pub fn new(lengths: &[Rational]) -> Self {
        let n = lengths.len();
        let total: Rational = lengths.iter().sum();
        Admissibility(
            (0u32..1 << n)
                .map(|mask| {
                    let part: Vec<u8> = (1..=n as u8).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                    part_length(lengths, &part) * Rational::from_integer(2) <= total
                })
                .collect(),
        )
    }

    pub fn part(&self, part: &[u8]) -> bool {
        self.0[part.iter().fold(0usize, |m, &i| m | 1 << (i - 1))]
    }

    pub fn partition(&self, parts: &[Vec<u8>]) -> bool {
        parts.iter().all(|p| self.part(p))
    }
}

/// Label string of a cyclically ordered partition: sorted parts, rotated so
/// the part containing `n` comes last.
pub fn label(parts: &[Vec<u8>]) -> String {
    let n = parts.iter().flatten().copied().max().expect("nonempty");
    let k = parts.iter().position(|p| p.contains(&n)).expect("n present");
    let m = parts.len();
    (1..=m)
        .map(|j| {
            let mut p = parts[(k + j) % m].clone();
            p.sort_unstable();
            let inner: Vec<String> = p.iter().map(u8::to_string).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect()
}

/// Inverse of [`label`].
pub fn parse_label(s: &str) -> Parts {
    s.trim_start_matches('{')
        .trim_end_matches('}')
        .split("}{")
        .map(|p| p.split(',').map(|x| x.parse().unwrap()).collect())
        .collect()
}

/// Admissible cyclically ordered partitions into at least three parts, by
/// dimension `n - m`.
pub fn oracle_cells(lengths: &[Rational]) -> BTreeMap<usize, BTreeSet<String>> {
    let n = lengths.len();
    let adm = Admissibility::new(lengths);
    let mut out: BTreeMap<usize, BTreeSet<String>> = BTreeMap::new();
    for partition in set_partitions(n) {
        let m = partition.len();
        if m < 3 || !adm.partition(&partition) {
            continue;
        }
        let (with_n, others): (Vec<_>, Vec<_>) =
            partition.into_iter().partition(|p| p.contains(&(n as u8)));
        for mut order in permutations(&others) {
            order.push(with_n[0].clone());
            out.entry(n - m).or_default().insert(label(&order));
        }
    }
    out
}

/// Merges each pair of cyclically adjacent parts.
pub fn cyclic_coarsenings(parts: &[Vec<u8>]) -> BTreeSet<String> {
    let m = parts.len();
    (0..m)
        .map(|i| {
            let j = (i + 1) % m;
            let mut merged: Parts = Vec::new();
            for (k, p) in parts.iter().enumerate() {
                if k == j {
                    continue;
                }
                let mut p = p.clone();
                if k == i {
                    p.extend(&parts[j]);
                }
                merged.push(p);
            }
            label(&merged)
        })
        .collect()
}

/// Admissible coarsenings with at least three parts: the codimension-one
/// faces whose boundary contains the given cell.
pub fn admissible_coarsenings(adm: &Admissibility, cell: &str) -> BTreeSet<String> {
    let parts = parse_label(cell);
    if parts.len() <= 3 {
        return BTreeSet::new();
    }
    cyclic_coarsenings(&parts)
        .into_iter()
        .filter(|c| adm.partition(&parse_label(c)))
        .collect()
}

pub fn rationals(spec: &str) -> Vec<Rational> {
    spec.split(',').map(|s| s.parse().unwrap()).collect()
}

/// A minimal OBJ reader: vertex and face records only.
pub struct Obj {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<Vec<usize>>,
}

pub fn parse_obj(text: &str) -> Obj {
    let mut vertices = Vec::new();
    let mut faces = Vec::new();
    for line in text.lines() {
        let mut words = line.split_whitespace();
        match words.next() {
            Some("v") => {
                let c: Vec<f64> = words.map(|w| w.parse().unwrap()).collect();
                assert_eq!(c.len(), 3, "{line}");
                vertices.push([c[0], c[1], c[2]]);
            }
            Some("f") => {
                let f: Vec<usize> = words
                    .map(|w| w.split('/').next().unwrap().parse::<usize>().unwrap() - 1)
                    .collect();
                faces.push(f);
            }
            _ => {}
        }
    }
    Obj { vertices, faces }
}

/// Undirected edge -> number of faces using it.
pub fn edge_multiplicities(faces: &[Vec<usize>]) -> HashMap<(usize, usize), usize> {
    let mut count = HashMap::new();
    for f in faces {
        for i in 0..f.len() {
            let (a, b) = (f[i], f[(i + 1) % f.len()]);
            *count.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
    }
    count
}

/// Every edge on exactly two faces, every face index valid.
pub fn is_watertight(obj: &Obj) -> bool {
    obj.faces.iter().flatten().all(|&v| v < obj.vertices.len())
        && edge_multiplicities(&obj.faces).values().all(|&c| c == 2)
}
