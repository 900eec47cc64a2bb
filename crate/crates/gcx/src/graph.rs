//! Graph data model for decorated and hairy graph complexes.
//!
//! A generator is a connected, at least trivalent multigraph whose vertices
//! carry decorations: elements of a symplectic vector space (first homology
//! of a surface), optionally the top class `omega`, or numbered hairs.  The
//! orientation data of a graph is the ordered list of its edges followed by
//! its decorations; every one of those items is treated as odd, so a graph
//! with an automorphism inducing an odd permutation of the items is the zero
//! chain.

use serde::{Deserialize, Serialize};

/// Symbol id for the degree-two top class in the extended alphabet.
pub const OMEGA: u16 = u16::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Tadpole-free graphs decorated by the homology of a punctured surface.
    Plain,
    /// Same but with tadpoles allowed.
    Tadpole,
    /// Tadpole-free graphs decorated by the reduced homology of a closed
    /// surface (symplectic symbols plus `omega`).
    Extended,
    /// Tadpole-free graphs with numbered hairs instead of decorations.
    Hairy,
}

impl Family {
    pub fn tag(self) -> u8 {
        match self {
            Family::Plain => 0,
            Family::Tadpole => 1,
            Family::Extended => 2,
            Family::Hairy => 3,
        }
    }

    pub fn from_tag(t: u8) -> Option<Family> {
        match t {
            0 => Some(Family::Plain),
            1 => Some(Family::Tadpole),
            2 => Some(Family::Extended),
            3 => Some(Family::Hairy),
            _ => None,
        }
    }

    pub fn allows_tadpoles(self) -> bool {
        matches!(self, Family::Tadpole)
    }
}

/// The decoration alphabet of a complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Alphabet {
    /// Basis `a_1..a_g, b_1..b_g` with `<a_i, b_j> = delta_ij` and all other
    /// pairings zero.  Symbol ids: `a_i = 2i`, `b_i = 2i+1` (0-based i).
    Symplectic { g: u16 },
    /// Symplectic plus the top class `omega` of homological degree two,
    /// which pairs to zero with everything.
    Extended { g: u16 },
    /// Distinct hair labels `0..r`, no pairing.
    Hairy { r: u16 },
}

impl Alphabet {
    /// Number of degree-one symbols.
    pub fn h1_rank(&self) -> u16 {
        match *self {
            Alphabet::Symplectic { g } | Alphabet::Extended { g } => 2 * g,
            Alphabet::Hairy { r } => r,
        }
    }

    pub fn genus(&self) -> Option<u16> {
        match *self {
            Alphabet::Symplectic { g } | Alphabet::Extended { g } => Some(g),
            Alphabet::Hairy { .. } => None,
        }
    }

    pub fn has_omega(&self) -> bool {
        matches!(self, Alphabet::Extended { .. })
    }

    pub fn has_pairing(&self) -> bool {
        !matches!(self, Alphabet::Hairy { .. })
    }

    /// Antisymmetric pairing between two symbols.
    pub fn pairing(&self, a: u16, b: u16) -> i64 {
        if !self.has_pairing() || a == OMEGA || b == OMEGA {
            return 0;
        }
        if a / 2 != b / 2 {
            return 0;
        }
        match (a % 2, b % 2) {
            (0, 1) => 1,
            (1, 0) => -1,
            _ => 0,
        }
    }

    /// Homological degree of a symbol.
    pub fn degree(&self, s: u16) -> u32 {
        if s == OMEGA {
            2
        } else {
            1
        }
    }

    pub fn symbol_valid(&self, s: u16) -> bool {
        match *self {
            Alphabet::Symplectic { g } => s < 2 * g,
            Alphabet::Extended { g } => s < 2 * g || s == OMEGA,
            Alphabet::Hairy { r } => s < r,
        }
    }

    /// Human-readable symbol name: `a1`, `b3`, `w`, or hair number `h2`.
    pub fn symbol_name(&self, s: u16) -> String {
        match *self {
            Alphabet::Hairy { .. } => format!("h{}", s + 1),
            _ if s == OMEGA => "w".to_string(),
            _ if s % 2 == 0 => format!("a{}", s / 2 + 1),
            _ => format!("b{}", s / 2 + 1),
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("edge or decoration references vertex {0} out of range")]
    BadVertex(u8),
    #[error("graph is not connected")]
    NotConnected,
    #[error("vertex {0} has valence {1} < 3")]
    LowValence(u8, u32),
    #[error("tadpole present but family forbids tadpoles")]
    TadpoleForbidden,
    #[error("symbol {0} not valid for the alphabet")]
    BadSymbol(u16),
    #[error("hairy graph must carry each hair label exactly once")]
    HairsNotBijective,
}

/// A decorated graph in raw (not canonically labelled) form.
///
/// The order of `edges` and of `decorations` is the reference ordering of the
/// odd orientation items: all edges first, then all decorations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedGraph {
    pub family: Family,
    /// Vertex count.
    pub n: u8,
    /// Unordered vertex pairs `(a, b)` with `a <= b`; `a == b` is a tadpole.
    pub edges: Vec<(u8, u8)>,
    /// `(vertex, symbol)` pairs.
    pub decorations: Vec<(u8, u16)>,
}

impl DecoratedGraph {
    pub fn new(
        family: Family,
        n: u8,
        edges: Vec<(u8, u8)>,
        decorations: Vec<(u8, u16)>,
    ) -> Self {
        let edges = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        DecoratedGraph {
            family,
            n,
            edges,
            decorations,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn loop_order(&self) -> i64 {
        self.edges.len() as i64 - self.n as i64 + 1
    }

    /// Valence of a vertex: incident half-edges (a tadpole counts two) plus
    /// decoration items.
    pub fn valence(&self, v: u8) -> u32 {
        let mut val = 0u32;
        for &(a, b) in &self.edges {
            if a == v {
                val += 1;
            }
            if b == v {
                val += 1;
            }
        }
        val + self.decorations.iter().filter(|&&(dv, _)| dv == v).count() as u32
    }

    /// Total homological degree of the decorations.
    pub fn decoration_degree(&self, alphabet: &Alphabet) -> u32 {
        self.decorations
            .iter()
            .map(|&(_, s)| alphabet.degree(s))
            .sum()
    }

    /// Weight `W = 2(e - v) + D`.
    pub fn weight(&self, alphabet: &Alphabet) -> i64 {
        2 * (self.edges.len() as i64 - self.n as i64) + self.decoration_degree(alphabet) as i64
    }

    /// Cohomological degree `k = e - W + 1`.
    pub fn degree(&self, alphabet: &Alphabet) -> i64 {
        self.edges.len() as i64 - self.weight(alphabet) + 1
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut parent: Vec<u8> = (0..self.n).collect();
        fn find(parent: &mut [u8], x: u8) -> u8 {
            let mut x = x;
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra as usize] = rb;
            }
        }
        let root = find(&mut parent, 0);
        (0..self.n).all(|v| find(&mut parent, v) == root)
    }

    /// Full structural validation against an alphabet.
    pub fn validate(&self, alphabet: &Alphabet) -> Result<(), GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        for &(a, b) in &self.edges {
            if a >= self.n || b >= self.n {
                return Err(GraphError::BadVertex(a.max(b)));
            }
            if a == b && !self.family.allows_tadpoles() {
                return Err(GraphError::TadpoleForbidden);
            }
        }
        for &(v, s) in &self.decorations {
            if v >= self.n {
                return Err(GraphError::BadVertex(v));
            }
            if !alphabet.symbol_valid(s) {
                return Err(GraphError::BadSymbol(s));
            }
        }
        if self.family == Family::Hairy {
            let r = match alphabet {
                Alphabet::Hairy { r } => *r,
                _ => return Err(GraphError::BadSymbol(0)),
            };
            let mut seen = vec![false; r as usize];
            if self.decorations.len() != r as usize {
                return Err(GraphError::HairsNotBijective);
            }
            for &(_, s) in &self.decorations {
                if s as usize >= seen.len() || seen[s as usize] {
                    return Err(GraphError::HairsNotBijective);
                }
                seen[s as usize] = true;
            }
        }
        if !self.is_connected() {
            return Err(GraphError::NotConnected);
        }
        for v in 0..self.n {
            let val = self.valence(v);
            if val < 3 {
                return Err(GraphError::LowValence(v, val));
            }
        }
        Ok(())
    }

    /// Relabels hairs by a permutation (`sigma[old] = new`), keeping list
    /// order.  Only meaningful for hairy graphs.
    pub fn relabel_hairs(&self, sigma: &[usize]) -> DecoratedGraph {
        let mut out = self.clone();
        for (_, s) in out.decorations.iter_mut() {
            *s = sigma[*s as usize] as u16;
        }
        out
    }
}

/// A canonically labelled graph, stored as its bit-exact byte encoding.
///
/// Layout: `u32` little-endian payload length, family tag, vertex count,
/// `u16` edge count, edges as byte pairs (sorted), `u16` decoration count,
/// decorations as (vertex byte, `u16` symbol) pairs (sorted).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonGraph(Box<[u8]>);

impl CanonGraph {
    pub(crate) fn from_parts(
        family: Family,
        n: u8,
        edges: &[(u8, u8)],
        decorations: &[(u8, u16)],
    ) -> Self {
        let payload = 2 + 2 + edges.len() * 2 + 2 + decorations.len() * 3;
        let mut bytes = Vec::with_capacity(4 + payload);
        bytes.extend_from_slice(&(payload as u32).to_le_bytes());
        bytes.push(family.tag());
        bytes.push(n);
        bytes.extend_from_slice(&(edges.len() as u16).to_le_bytes());
        for &(a, b) in edges {
            bytes.push(a);
            bytes.push(b);
        }
        bytes.extend_from_slice(&(decorations.len() as u16).to_le_bytes());
        for &(v, s) in decorations {
            bytes.push(v);
            bytes.extend_from_slice(&s.to_le_bytes());
        }
        CanonGraph(bytes.into_boxed_slice())
    }

    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_bytes(bytes: &[u8]) -> Option<CanonGraph> {
        let g = Self::decode_impl(bytes)?;
        // Round-trip to ensure the representation is the canonical layout.
        let again = CanonGraph::from_parts(g.family, g.n, &g.edges, &g.decorations);
        if again.bytes() == bytes {
            Some(again)
        } else {
            None
        }
    }

    pub fn decode(&self) -> DecoratedGraph {
        Self::decode_impl(&self.0).expect("canonical encoding is well formed")
    }

    fn decode_impl(bytes: &[u8]) -> Option<DecoratedGraph> {
        if bytes.len() < 10 {
            return None;
        }
        let payload = u32::from_le_bytes(bytes[0..4].try_into().ok()?) as usize;
        if bytes.len() != payload + 4 {
            return None;
        }
        let family = Family::from_tag(bytes[4])?;
        let n = bytes[5];
        let e = u16::from_le_bytes(bytes[6..8].try_into().ok()?) as usize;
        let mut pos = 8;
        let mut edges = Vec::with_capacity(e);
        for _ in 0..e {
            edges.push((*bytes.get(pos)?, *bytes.get(pos + 1)?));
            pos += 2;
        }
        let d = u16::from_le_bytes(bytes.get(pos..pos + 2)?.try_into().ok()?) as usize;
        pos += 2;
        let mut decorations = Vec::with_capacity(d);
        for _ in 0..d {
            let v = *bytes.get(pos)?;
            let s = u16::from_le_bytes(bytes.get(pos + 1..pos + 3)?.try_into().ok()?);
            decorations.push((v, s));
            pos += 3;
        }
        if pos != bytes.len() {
            return None;
        }
        Some(DecoratedGraph {
            family,
            n,
            edges,
            decorations,
        })
    }

    pub fn hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<CanonGraph> {
        if s.len() % 2 != 0 {
            return None;
        }
        let bytes: Option<Vec<u8>> = (0..s.len() / 2)
            .map(|i| u8::from_str_radix(&s[2 * i..2 * i + 2], 16).ok())
            .collect();
        CanonGraph::from_bytes(&bytes?)
    }
}

impl std::fmt::Debug for CanonGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let g = self.decode();
        write!(
            f,
            "CanonGraph(n={}, e={:?}, d={:?}, {:?})",
            g.n, g.edges, g.decorations, g.family
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valence_counts_tadpoles_twice_and_decorations() {
        let g = DecoratedGraph::new(
            Family::Tadpole,
            1,
            vec![(0, 0)],
            vec![(0, 0)],
        );
        assert_eq!(g.valence(0), 3);
        let alpha = Alphabet::Symplectic { g: 1 };
        assert!(g.validate(&alpha).is_ok());
        assert_eq!(g.weight(&alpha), 1);
        assert_eq!(g.degree(&alpha), 1);
    }

    #[test]
    fn validation_rejects_malformed() {
        let alpha = Alphabet::Symplectic { g: 2 };
        let disconnected = DecoratedGraph::new(
            Family::Plain,
            2,
            vec![],
            vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)],
        );
        assert_eq!(disconnected.validate(&alpha), Err(GraphError::NotConnected));
        let low = DecoratedGraph::new(Family::Plain, 1, vec![], vec![(0, 0), (0, 1)]);
        assert_eq!(low.validate(&alpha), Err(GraphError::LowValence(0, 2)));
        let tad = DecoratedGraph::new(Family::Plain, 1, vec![(0, 0)], vec![(0, 0)]);
        assert_eq!(tad.validate(&alpha), Err(GraphError::TadpoleForbidden));
    }

    #[test]
    fn pairing_is_antisymmetric() {
        let alpha = Alphabet::Symplectic { g: 3 };
        for a in 0..6u16 {
            for b in 0..6u16 {
                assert_eq!(alpha.pairing(a, b), -alpha.pairing(b, a));
            }
        }
        assert_eq!(alpha.pairing(0, 1), 1);
        assert_eq!(alpha.pairing(2, 2), 0);
        let ext = Alphabet::Extended { g: 2 };
        assert_eq!(ext.pairing(OMEGA, 0), 0);
        assert_eq!(ext.pairing(0, OMEGA), 0);
    }

    #[test]
    fn encoding_roundtrip() {
        let g = DecoratedGraph::new(
            Family::Plain,
            3,
            vec![(0, 1), (1, 2), (0, 2)],
            vec![(0, 0), (1, 2), (2, 4)],
        );
        let c = CanonGraph::from_parts(g.family, g.n, &g.edges, &g.decorations);
        assert_eq!(c.decode(), g);
        assert_eq!(CanonGraph::from_bytes(c.bytes()), Some(c.clone()));
        assert_eq!(CanonGraph::from_hex(&c.hex()), Some(c));
    }

    #[test]
    fn grading_formula() {
        // triangle with one decoration per vertex: e=3, v=3, D=3
        let alpha = Alphabet::Symplectic { g: 2 };
        let g = DecoratedGraph::new(
            Family::Plain,
            3,
            vec![(0, 1), (1, 2), (0, 2)],
            vec![(0, 0), (1, 1), (2, 2)],
        );
        assert_eq!(g.weight(&alpha), 3);
        assert_eq!(g.loop_order(), 1);
        assert_eq!(g.degree(&alpha), 1);
    }
}
