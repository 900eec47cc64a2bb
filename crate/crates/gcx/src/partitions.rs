//! Partitions (Young diagrams) and integer multiplicity vectors.
//!
//! Partitions label everything representation-theoretic in this crate:
//! irreducibles of GL(n), Sp(2g) and the symmetric groups, as well as
//! conjugacy classes (cycle types).  The global ordering used for all
//! deterministic iteration and printed output is graded reverse-lexicographic:
//! first by size, then within one size the partition with the larger leading
//! part comes first, so the partitions of 3 appear as `(3), (2,1), (1,1,1)`.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// A partition: weakly decreasing list of positive integers.
///
/// The empty partition is allowed and denotes the zero partition (the label
/// of the trivial representation).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, normalizing away trailing zeros.
    ///
    /// Panics if the parts are not weakly decreasing.
    pub fn new(parts: &[u32]) -> Self {
        let mut v: Vec<u32> = parts.iter().copied().take_while(|&p| p > 0).collect();
        assert!(
            parts.iter().skip(v.len()).all(|&p| p == 0),
            "zero part before a positive part in {parts:?}"
        );
        assert!(
            v.windows(2).all(|w| w[0] >= w[1]),
            "parts not weakly decreasing: {parts:?}"
        );
        v.shrink_to_fit();
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of rows (nonzero parts).
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part at `row` (0-based), zero beyond the last row.
    pub fn part(&self, row: usize) -> u32 {
        self.0.get(row).copied().unwrap_or(0)
    }

    /// Conjugate (transposed) diagram.
    pub fn transpose(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let mut t = Vec::with_capacity(cols);
        for c in 0..cols {
            t.push(self.0.iter().filter(|&&p| p as usize > c).count() as u32);
        }
        Partition(t)
    }

    /// Containment of Young diagrams, row by row.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .0
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }

    /// All column lengths even, i.e. every part of the conjugate is even.
    pub fn has_even_columns(&self) -> bool {
        self.transpose().0.iter().all(|&p| p % 2 == 0)
    }

    /// Hook length of the cell in `row`, `col` (0-based); cell must lie in
    /// the diagram.
    pub fn hook(&self, row: usize, col: usize) -> u32 {
        let arm = self.0[row] - 1 - col as u32;
        let leg = self
            .0
            .iter()
            .skip(row + 1)
            .filter(|&&p| p as usize > col)
            .count() as u32;
        arm + leg + 1
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for Partition {
    /// Compact exponent notation: `(2,1,1)` prints as `21^2`, the empty
    /// partition as `0`.  Parts of ten or more are bracketed to stay
    /// unambiguous.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == p {
                run += 1;
            }
            if p >= 10 {
                write!(f, "({p})")?;
            } else {
                write!(f, "{p}")?;
            }
            if run > 1 {
                // Exponents are single digits in this notation; larger runs
                // are parenthesized to stay parseable.
                if run >= 10 {
                    write!(f, "^({run})")?;
                } else {
                    write!(f, "^{run}")?;
                }
            }
            i += run;
        }
        Ok(())
    }
}

impl Ord for Partition {
    /// Graded reverse-lexicographic order; see the module docs.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| {
                for (a, b) in self.0.iter().zip(other.0.iter()) {
                    match b.cmp(a) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                other.0.len().cmp(&self.0.len())
            })
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All partitions of `r`, in the global order.
pub fn partitions_of(r: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        let hi = max.min(remaining);
        for p in (1..=hi).rev() {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    rec(r, r, &mut cur, &mut out);
    out
}

/// A conjugacy class of the symmetric group `S_r`, given by its cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn degree(&self) -> u32 {
        self.0.size()
    }

    /// Identity class of `S_r`.
    pub fn identity(r: u32) -> Self {
        CycleType(Partition(vec![1; r as usize]))
    }

    /// Sign of any permutation with this cycle type.
    pub fn sign(&self) -> i64 {
        let transpositions: u32 = self.0.parts().iter().map(|&c| c - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Number of elements of `S_r` in this class: `r! / prod(c_i) / prod(m_j!)`
    /// with `m_j` the multiplicities of the cycle lengths.
    pub fn class_size(&self) -> u64 {
        let r = self.degree() as u64;
        let mut size: u64 = (1..=r).product();
        let mut mult: BTreeMap<u32, u64> = BTreeMap::new();
        for &c in self.0.parts() {
            size /= c as u64;
            *mult.entry(c).or_insert(0) += 1;
        }
        for m in mult.values() {
            size /= (1..=*m).product::<u64>();
        }
        size
    }

    /// A representative permutation (image vector on `0..r`), cycles laid out
    /// consecutively.
    pub fn representative(&self) -> Vec<usize> {
        let mut perm = Vec::with_capacity(self.degree() as usize);
        let mut base = 0usize;
        for &c in self.0.parts() {
            let c = c as usize;
            for i in 0..c {
                perm.push(base + (i + 1) % c);
            }
            base += c;
        }
        perm
    }
}

/// Finitely supported integer-valued function on partitions.
///
/// Represents a (virtual) stable Sp(2g)- or S_r-representation by its
/// multiplicities; no explicit zeros are stored and iteration follows the
/// global partition order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityVector(BTreeMap<Partition, i64>);

impl MultiplicityVector {
    pub fn new() -> Self {
        MultiplicityVector(BTreeMap::new())
    }

    pub fn from_pairs<I: IntoIterator<Item = (Partition, i64)>>(pairs: I) -> Self {
        let mut mv = Self::new();
        for (p, m) in pairs {
            mv.add(&p, m);
        }
        mv
    }

    pub fn add(&mut self, p: &Partition, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.0.entry(p.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.0.remove(p);
        }
    }

    pub fn get(&self, p: &Partition) -> i64 {
        self.0.get(p).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.0.iter().map(|(p, &m)| (p, m))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scaled(&self, c: i64) -> Self {
        MultiplicityVector(
            self.0
                .iter()
                .filter(|_| c != 0)
                .map(|(p, m)| (p.clone(), m * c))
                .collect(),
        )
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, m) in other.iter() {
            out.add(p, m);
        }
        out
    }

    pub fn min_entry(&self) -> i64 {
        self.0.values().copied().min().unwrap_or(0)
    }

    /// Renders in the bracket notation used for symplectic decompositions,
    /// e.g. `[21^2] + [2] + [1^2]` or `2[52] + 6[41]`.
    pub fn to_bracket_string(&self) -> String {
        if self.0.is_empty() {
            return "0".to_string();
        }
        self.0
            .iter()
            .map(|(p, &m)| {
                if m == 1 {
                    format!("[{p}]")
                } else {
                    format!("{m}[{p}]")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl FromIterator<(Partition, i64)> for MultiplicityVector {
    fn from_iter<I: IntoIterator<Item = (Partition, i64)>>(iter: I) -> Self {
        Self::from_pairs(iter)
    }
}

/// Parses the compact exponent notation produced by `Display`, e.g. `21^2`
/// or `1^5` or `0`.  Used by the CLI and by tests to state expected tables.
pub fn parse_partition(s: &str) -> Option<Partition> {
    let s = s.trim();
    if s == "0" || s.is_empty() {
        return Some(Partition::empty());
    }
    let mut parts = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let p: u32;
        if chars[i] == '(' {
            let close = chars[i..].iter().position(|&c| c == ')')? + i;
            p = s[i + 1..close].parse().ok()?;
            i = close + 1;
        } else if chars[i].is_ascii_digit() {
            p = chars[i].to_digit(10)?;
            i += 1;
        } else {
            return None;
        }
        let mut rep = 1usize;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            if i < chars.len() && chars[i] == '(' {
                let close = chars[i..].iter().position(|&c| c == ')')? + i;
                rep = s[i + 1..close].parse().ok()?;
                i = close + 1;
            } else if i < chars.len() && chars[i].is_ascii_digit() {
                rep = chars[i].to_digit(10)? as usize;
                i += 1;
            } else {
                return None;
            }
        }
        if p == 0 {
            return None;
        }
        parts.extend(std::iter::repeat(p).take(rep));
    }
    if !parts.windows(2).all(|w| w[0] >= w[1]) {
        return None;
    }
    Some(Partition::new(&parts))
}

/// Parses a bracket decomposition like `[3]` or `2[52] + 6[41] + [7]`.
pub fn parse_bracket_string(s: &str) -> Option<MultiplicityVector> {
    let mut mv = MultiplicityVector::new();
    let s = s.trim();
    if s == "0" {
        return Some(mv);
    }
    for term in s.split('+') {
        let term = term.trim();
        let open = term.find('[')?;
        let close = term.rfind(']')?;
        let mult: i64 = if open == 0 {
            1
        } else {
            term[..open].trim().parse().ok()?
        };
        let p = parse_partition(&term[open + 1..close])?;
        mv.add(&p, mult);
    }
    Some(mv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose_is_involution() {
        for r in 0..=8 {
            for p in partitions_of(r) {
                assert_eq!(p.transpose().transpose(), p);
            }
        }
    }

    #[test]
    fn enumeration_matches_examples() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(3),
            vec![
                Partition::new(&[3]),
                Partition::new(&[2, 1]),
                Partition::new(&[1, 1, 1])
            ]
        );
        assert_eq!(partitions_of(5).len(), 7);
    }

    #[test]
    fn ordering_is_graded() {
        let p3 = partitions_of(3);
        let mut sorted = p3.clone();
        sorted.sort();
        assert_eq!(p3, sorted);
        assert!(Partition::new(&[2]) < Partition::new(&[3]));
        assert!(Partition::new(&[3]) < Partition::new(&[2, 1]));
    }

    #[test]
    fn display_roundtrip() {
        for r in 0..=8 {
            for p in partitions_of(r) {
                let s = p.to_string();
                assert_eq!(parse_partition(&s), Some(p.clone()), "roundtrip of {s}");
            }
        }
        assert_eq!(Partition::new(&[2, 1, 1]).to_string(), "21^2");
        assert_eq!(Partition::new(&[1; 5]).to_string(), "1^5");
    }

    #[test]
    fn bracket_string_roundtrip() {
        let mv = MultiplicityVector::from_pairs([
            (Partition::new(&[5, 2]), 2),
            (Partition::new(&[4, 1]), 6),
            (Partition::new(&[3]), 11),
        ]);
        let s = mv.to_bracket_string();
        assert_eq!(parse_bracket_string(&s), Some(mv));
    }

    #[test]
    fn cycle_type_class_sizes_sum_to_group_order() {
        for r in 1..=7u32 {
            let total: u64 = partitions_of(r)
                .into_iter()
                .map(|p| CycleType(p).class_size())
                .sum();
            assert_eq!(total, (1..=r as u64).product::<u64>());
        }
    }

    #[test]
    fn multiplicity_vector_drops_zeros() {
        let mut mv = MultiplicityVector::new();
        mv.add(&Partition::new(&[2, 1]), 3);
        mv.add(&Partition::new(&[2, 1]), -3);
        assert!(mv.is_zero());
    }
}
