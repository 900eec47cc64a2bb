//! The differential pieces and the Lie bracket.
//!
//! Signs are tracked through an explicit list of orientation items.  The
//! reference ordering of a graph is its edge list followed by its decoration
//! list; each operation builds the conceptual item list of every output
//! term, picking up a Koszul sign `(-1)^p` whenever the item at position `p`
//! is removed, and appends newly created items at the end of the list.  The
//! term's graph is then stored with edges first and decorations second, and
//! the parity of that final regrouping is part of the sign.
//!
//! These conventions are a consistent reconstruction; they are certified by
//! the `d^2 = 0` and anticommutation test suites rather than assumed.

use crate::chain::{coeff_int, Chain, Coeff};
use crate::graph::{Alphabet, DecoratedGraph, Family, OMEGA};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DiffError {
    #[error("operation requires an alphabet with a pairing")]
    NoPairing,
    #[error("operation requires the extended alphabet")]
    NotExtended,
    #[error("chains live in different families")]
    FamilyMismatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Item {
    Edge(u8, u8),
    Dec(u8, u16),
}

/// Collects an item list into a stored graph, returning the Koszul parity of
/// the stable regrouping that puts edges before decorations.  Only odd items
/// (edges and degree-one decorations) contribute; omega is even.
fn store(family: Family, n: u8, items: &[Item]) -> (DecoratedGraph, i64) {
    let mut edges = Vec::new();
    let mut decorations = Vec::new();
    let mut sign = 1i64;
    let mut odd_decs_seen = 0u32;
    for item in items {
        match *item {
            Item::Edge(a, b) => {
                // This edge jumps left past every odd decoration already
                // seen.
                if odd_decs_seen % 2 == 1 {
                    sign = -sign;
                }
                edges.push((a.min(b), a.max(b)));
            }
            Item::Dec(v, s) => {
                decorations.push((v, s));
                if s != OMEGA {
                    odd_decs_seen += 1;
                }
            }
        }
    }
    (
        DecoratedGraph {
            family,
            n,
            edges,
            decorations,
        },
        sign,
    )
}

fn items_of(g: &DecoratedGraph) -> Vec<Item> {
    g.edges
        .iter()
        .map(|&(a, b)| Item::Edge(a, b))
        .chain(g.decorations.iter().map(|&(v, s)| Item::Dec(v, s)))
        .collect()
}

/// Raw signed terms of the vertex-splitting differential on one graph.
///
/// Every vertex is split into two; its incident half-edges and decorations
/// are distributed so that both new vertices keep valence at least three
/// (the connecting edge counts).  The new edge is appended at the end of
/// the orientation order and the distributed items keep their order, so
/// each term carries sign +1 before canonicalization.
pub fn split_terms(g: &DecoratedGraph) -> Vec<(DecoratedGraph, i64)> {
    let mut out = Vec::new();
    let n = g.n;
    for u in 0..n {
        // Slots at u: one per incident half-edge (tadpoles give two), one
        // per decoration.
        #[derive(Clone, Copy)]
        enum Slot {
            Half(usize, u8), // edge index, which end (0 or 1)
            Dec(usize),
        }
        let mut slots: Vec<Slot> = Vec::new();
        for (ei, &(a, b)) in g.edges.iter().enumerate() {
            if a == u {
                slots.push(Slot::Half(ei, 0));
            }
            if b == u {
                slots.push(Slot::Half(ei, 1));
            }
        }
        for (di, &(v, _)) in g.decorations.iter().enumerate() {
            if v == u {
                slots.push(Slot::Dec(di));
            }
        }
        let m = slots.len();
        if m < 4 {
            continue;
        }
        // Unordered distributions: slot 0 always stays with u.
        for mask in 0u32..(1 << (m - 1)) {
            let side = |idx: usize| -> bool {
                // true: stays at u; false: moves to the new vertex.
                if idx == 0 {
                    true
                } else {
                    mask & (1 << (idx - 1)) == 0
                }
            };
            let kept = (0..m).filter(|&i| side(i)).count();
            if kept < 2 || m - kept < 2 {
                continue;
            }
            let new_v = n;
            let mut edges = g.edges.clone();
            for (idx, slot) in slots.iter().enumerate() {
                if let Slot::Half(ei, end) = *slot {
                    if !side(idx) {
                        let e = &mut edges[ei];
                        if end == 0 {
                            e.0 = new_v;
                        } else {
                            e.1 = new_v;
                        }
                    }
                }
            }
            let mut decorations = g.decorations.clone();
            for (idx, slot) in slots.iter().enumerate() {
                if let Slot::Dec(di) = *slot {
                    if !side(idx) {
                        decorations[di].0 = new_v;
                    }
                }
            }
            let mut items: Vec<Item> = edges
                .iter()
                .map(|&(a, b)| Item::Edge(a, b))
                .chain(decorations.iter().map(|&(v, s)| Item::Dec(v, s)))
                .collect();
            items.push(Item::Edge(u, new_v));
            let (graph, sign) = store(g.family, n + 1, &items);
            out.push((graph, sign));
        }
    }
    out
}

/// Raw signed terms of the gluing differential: every unordered pair of
/// degree-one decorations is replaced by an edge weighted by their pairing.
/// In tadpole-free families, terms whose new edge would be a tadpole are
/// dropped (the quotient by tadpole graphs).
///
/// On the extended alphabet the gluing pairs against the full diagonal class
/// of the closed surface, whose components `1 (x) omega` and `omega (x) 1`
/// pair an omega decoration with the unit at an arbitrary vertex: each omega
/// may also be replaced by an edge from its vertex to any vertex of the
/// graph.
pub fn glue_terms(g: &DecoratedGraph, alphabet: &Alphabet) -> Vec<(DecoratedGraph, i64)> {
    let mut out = Vec::new();
    let m = g.edges.len();
    let d = g.decorations.len();
    if alphabet.has_omega() {
        omega_glue_terms(g, &mut out);
    }
    // Position of each decoration among the odd orientation items.
    let mut odd_rank = vec![0usize; d];
    let mut seen = 0usize;
    for (idx, &(_, s)) in g.decorations.iter().enumerate() {
        odd_rank[idx] = seen;
        if s != OMEGA {
            seen += 1;
        }
    }
    for i in 0..d {
        for j in (i + 1)..d {
            let (vi, si) = g.decorations[i];
            let (vj, sj) = g.decorations[j];
            let pairing = alphabet.pairing(si, sj);
            if pairing == 0 {
                continue;
            }
            if vi == vj && !g.family.allows_tadpoles() {
                continue;
            }
            // Koszul: remove the odd item at rank m + odd_rank[i], then the
            // one at rank m + odd_rank[j] - 1.
            let removals = (m + odd_rank[i]) + (m + odd_rank[j] - 1);
            let sign = if removals % 2 == 0 { 1 } else { -1 };
            let mut items: Vec<Item> = Vec::with_capacity(m + d - 1);
            for &(a, b) in &g.edges {
                items.push(Item::Edge(a, b));
            }
            for (di, &(v, s)) in g.decorations.iter().enumerate() {
                if di != i && di != j {
                    items.push(Item::Dec(v, s));
                }
            }
            items.push(Item::Edge(vi, vj));
            let (graph, store_sign) = store(g.family, g.n, &items);
            out.push((graph, sign * store_sign * pairing));
        }
    }
    out
}

/// Coefficient of the omega-to-unit gluing relative to the degree-one
/// pairing glue; fixed by requiring `d^2 = 0` on the extended family.
const OMEGA_GLUE_COEFF: i64 = 2;

/// The omega-unit component of the extended gluing: remove one omega and
/// draw an edge from its vertex to an arbitrary vertex.  Tadpole targets are
/// dropped in the tadpole-free families.
fn omega_glue_terms(g: &DecoratedGraph, out: &mut Vec<(DecoratedGraph, i64)>) {
    for (i, &(u, s)) in g.decorations.iter().enumerate() {
        if s != OMEGA {
            continue;
        }
        for v in 0..g.n {
            if v == u && !g.family.allows_tadpoles() {
                continue;
            }
            let mut items: Vec<Item> = Vec::with_capacity(g.edges.len() + g.decorations.len());
            for &(a, b) in &g.edges {
                items.push(Item::Edge(a, b));
            }
            for (di, &(dv, ds)) in g.decorations.iter().enumerate() {
                if di != i {
                    items.push(Item::Dec(dv, ds));
                }
            }
            items.push(Item::Edge(u, v));
            // Omega is even: removing it costs no Koszul sign.
            let (graph, store_sign) = store(g.family, g.n, &items);
            out.push((graph, OMEGA_GLUE_COEFF * store_sign));
        }
    }
}

/// Raw signed terms of the top-class differential: every omega decoration
/// is replaced by an edge to a fresh vertex decorated by the canonical
/// diagonal element `sum_i (a_i (x) b_i - b_i (x) a_i)`.
pub fn z_terms(g: &DecoratedGraph, alphabet: &Alphabet) -> Vec<(DecoratedGraph, i64)> {
    let mut out = Vec::new();
    let genus = match alphabet {
        Alphabet::Extended { g } => *g,
        _ => return out,
    };
    for (i, &(v, s)) in g.decorations.iter().enumerate() {
        if s != OMEGA {
            continue;
        }
        // Omega is even, so extracting it costs no Koszul sign.
        let removal_sign = 1i64;
        let new_v = g.n;
        for t in 0..genus {
            for (first, second, coeff) in
                [(2 * t, 2 * t + 1, 1i64), (2 * t + 1, 2 * t, -1i64)]
            {
                let mut items: Vec<Item> = Vec::with_capacity(g.edges.len() + g.decorations.len() + 2);
                for &(a, b) in &g.edges {
                    items.push(Item::Edge(a, b));
                }
                for (di, &(dv, ds)) in g.decorations.iter().enumerate() {
                    if di != i {
                        items.push(Item::Dec(dv, ds));
                    }
                }
                items.push(Item::Edge(v, new_v));
                items.push(Item::Dec(new_v, first));
                items.push(Item::Dec(new_v, second));
                let (graph, store_sign) = store(g.family, g.n + 1, &items);
                out.push((graph, removal_sign * store_sign * coeff));
            }
        }
    }
    out
}

fn apply_terms(
    x: &Chain,
    f: impl Fn(&DecoratedGraph) -> Vec<(DecoratedGraph, i64)>,
) -> Chain {
    let mut out = Chain::new();
    for (g, c) in x.iter() {
        let decoded = g.decode();
        for (term, sign) in f(&decoded) {
            out.add_raw(&term, c.clone() * coeff_int(sign));
        }
    }
    out
}

/// Vertex-splitting differential on a chain.
pub fn delta_split(x: &Chain) -> Chain {
    apply_terms(x, split_terms)
}

/// Gluing differential on a chain.  Rejects alphabets without a pairing.
pub fn delta_glue(x: &Chain, alphabet: &Alphabet) -> Result<Chain, DiffError> {
    if !alphabet.has_pairing() {
        return Err(DiffError::NoPairing);
    }
    Ok(apply_terms(x, |g| glue_terms(g, alphabet)))
}

/// Top-class differential on a chain.  Requires the extended alphabet.
pub fn delta_z(x: &Chain, alphabet: &Alphabet) -> Result<Chain, DiffError> {
    if !alphabet.has_omega() {
        return Err(DiffError::NotExtended);
    }
    Ok(apply_terms(x, |g| z_terms(g, alphabet)))
}

/// Total differential for a family: split plus glue (plus the top-class
/// piece on the extended family).
pub fn delta_total(x: &Chain, family: Family, alphabet: &Alphabet) -> Chain {
    let mut out = delta_split(x);
    if family != Family::Hairy {
        out.add_assign(&delta_glue(x, alphabet).expect("pairing available"));
    }
    if family == Family::Extended {
        out.add_assign(&delta_z(x, alphabet).expect("extended alphabet"));
    }
    out
}

/// Lie bracket of two graphs: sum over pairs of decorations, one from each
/// side, joined by a new edge weighted by the pairing.
pub fn bracket_terms(
    x: &DecoratedGraph,
    y: &DecoratedGraph,
    alphabet: &Alphabet,
) -> Vec<(DecoratedGraph, i64)> {
    let mut out = Vec::new();
    let nx = x.n;
    let n = x.n + y.n;
    let mx = x.edges.len();
    let dx = x.decorations.len();
    let my = y.edges.len();
    let odd_rank = |g: &DecoratedGraph| -> (Vec<usize>, usize) {
        let mut ranks = vec![0usize; g.decorations.len()];
        let mut seen = 0usize;
        for (idx, &(_, s)) in g.decorations.iter().enumerate() {
            ranks[idx] = seen;
            if s != OMEGA {
                seen += 1;
            }
        }
        (ranks, seen)
    };
    let (rank_x, odd_x) = odd_rank(x);
    let (rank_y, _) = odd_rank(y);
    // Concatenated item list: x edges, x decorations, y edges (shifted),
    // y decorations (shifted).
    for i in 0..dx {
        for j in 0..y.decorations.len() {
            let (vi, si) = x.decorations[i];
            let (vj, sj) = y.decorations[j];
            let pairing = alphabet.pairing(si, sj);
            if pairing == 0 {
                continue;
            }
            let pos_i = mx + rank_x[i];
            let pos_j_after = (mx + odd_x - 1) + my + rank_y[j];
            let removals = pos_i + pos_j_after;
            let sign = if removals % 2 == 0 { 1 } else { -1 };
            let mut items: Vec<Item> = Vec::new();
            for &(a, b) in &x.edges {
                items.push(Item::Edge(a, b));
            }
            for (di, &(v, s)) in x.decorations.iter().enumerate() {
                if di != i {
                    items.push(Item::Dec(v, s));
                }
            }
            for &(a, b) in &y.edges {
                items.push(Item::Edge(a + nx, b + nx));
            }
            for (dj, &(v, s)) in y.decorations.iter().enumerate() {
                if dj != j {
                    items.push(Item::Dec(v + nx, s));
                }
            }
            items.push(Item::Edge(vi, vj + nx));
            let (graph, store_sign) = store(x.family, n, &items);
            out.push((graph, sign * store_sign * pairing));
        }
    }
    out
}

/// Lie bracket of two chains in the same family.
pub fn lie_bracket(x: &Chain, y: &Chain, alphabet: &Alphabet) -> Result<Chain, DiffError> {
    if !alphabet.has_pairing() {
        return Err(DiffError::NoPairing);
    }
    let mut out = Chain::new();
    for (gx, cx) in x.iter() {
        let dx = gx.decode();
        for (gy, cy) in y.iter() {
            let dy = gy.decode();
            if dx.family != dy.family {
                return Err(DiffError::FamilyMismatch);
            }
            let c: Coeff = cx.clone() * cy.clone();
            for (term, sign) in bracket_terms(&dx, &dy, alphabet) {
                out.add_raw(&term, c.clone() * coeff_int(sign));
            }
        }
    }
    Ok(out)
}

/// A degree-lowering endomorphism of the extended decoration space that
/// kills the pairing: determined by the image of omega in the degree-one
/// part.  These operators have loop order zero and act on graphs by
/// substitution into omega decorations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OspNil {
    /// Coefficient of each degree-one symbol in the image of omega.
    pub omega_image: Vec<i64>,
}

impl OspNil {
    pub fn generator(symbol: u16, g: u16) -> Self {
        let mut v = vec![0i64; 2 * g as usize];
        v[symbol as usize] = 1;
        OspNil { omega_image: v }
    }

    /// Substitution action on a chain in the extended family: each omega
    /// decoration is replaced in place by the image symbols.
    pub fn act(&self, x: &Chain) -> Chain {
        let mut out = Chain::new();
        for (g, c) in x.iter() {
            let decoded = g.decode();
            for (i, &(_, s)) in decoded.decorations.iter().enumerate() {
                if s != OMEGA {
                    continue;
                }
                for (sym, &coef) in self.omega_image.iter().enumerate() {
                    if coef == 0 {
                        continue;
                    }
                    let mut term = decoded.clone();
                    term.decorations[i].1 = sym as u16;
                    out.add_raw(&term, c.clone() * coeff_int(coef));
                }
            }
        }
        out
    }

    /// The bracket of two such operators vanishes: they lower the
    /// decoration degree and omega is the only degree-two class.
    pub fn bracket(&self, _other: &OspNil) -> OspNil {
        OspNil {
            omega_image: vec![0; self.omega_image.len()],
        }
    }
}

/// An element of the extended dg Lie algebra: a graph chain plus an
/// operator component of loop order zero.
#[derive(Clone, Debug, Default)]
pub struct ExtendedElement {
    pub chain: Chain,
    pub osp: Option<OspNil>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::coeff_int;
    use num_traits::Signed;

    fn one_vertex(decs: &[u16]) -> DecoratedGraph {
        DecoratedGraph::new(
            Family::Plain,
            1,
            vec![],
            decs.iter().map(|&s| (0, s)).collect(),
        )
    }

    #[test]
    fn split_of_three_decorations_vanishes() {
        let g = one_vertex(&[0, 2, 4]);
        let out = delta_split(&Chain::from_graph(&g));
        assert!(out.is_zero());
    }

    #[test]
    fn split_of_four_decorations_gives_three_pairings() {
        let g = one_vertex(&[0, 1, 2, 3]);
        let out = delta_split(&Chain::from_graph(&g));
        // 2+2 distributions, 3 distinct pairings up to symmetry; the 3+1
        // splits fail the valence bound.
        assert_eq!(out.len(), 3);
        for (cg, _) in out.iter() {
            let d = cg.decode();
            assert_eq!(d.n, 2);
            assert_eq!(d.edges.len(), 1);
        }
    }

    #[test]
    fn glue_of_unpaired_decorations_vanishes() {
        let alpha = Alphabet::Symplectic { g: 2 };
        // All decorations a_1: pairing zero.
        let g = DecoratedGraph::new(
            Family::Plain,
            2,
            vec![(0, 1)],
            vec![(0, 0), (0, 0), (1, 0), (1, 0)],
        );
        let out = delta_glue(&Chain::from_graph(&g), &alpha).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn glue_two_vertex_tree_gives_two_gon_which_vanishes() {
        let alpha = Alphabet::Symplectic { g: 2 };
        // Decorations {a1, a2 | b1, b2}: only (a1,b1) and (a2,b2) pair, and
        // both create a second edge parallel to the existing one.
        let g = DecoratedGraph::new(
            Family::Plain,
            2,
            vec![(0, 1)],
            vec![(0, 0), (0, 2), (1, 1), (1, 3)],
        );
        let out = delta_glue(&Chain::from_graph(&g), &alpha).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn glue_tadpole_terms_kept_only_in_tadpole_family() {
        let alpha = Alphabet::Symplectic { g: 2 };
        let mk = |family| {
            DecoratedGraph::new(
                family,
                1,
                vec![],
                vec![(0, 0), (0, 1), (0, 2), (0, 3)],
            )
        };
        let plain = delta_glue(&Chain::from_graph(&mk(Family::Plain)), &alpha).unwrap();
        assert!(plain.is_zero());
        let tp = delta_glue(&Chain::from_graph(&mk(Family::Tadpole)), &alpha).unwrap();
        assert_eq!(tp.len(), 2);
    }

    #[test]
    fn delta_z_requires_omega() {
        let alpha = Alphabet::Symplectic { g: 2 };
        let g = one_vertex(&[0, 2, 4]);
        assert_eq!(
            delta_z(&Chain::from_graph(&g), &alpha),
            Err(DiffError::NotExtended)
        );
    }

    #[test]
    fn delta_z_expands_omega() {
        let alpha = Alphabet::Extended { g: 2 };
        let g = DecoratedGraph::new(
            Family::Extended,
            1,
            vec![],
            vec![(0, OMEGA), (0, 0), (0, 1)],
        );
        let out = delta_z(&Chain::from_graph(&g), &alpha).unwrap();
        // Two-vertex trees with the diagonal pair on the new vertex; g=2
        // gives two summands (a_1 b_1 and a_2 b_2), each appearing once
        // after the two tensor orders combine.
        assert_eq!(out.len(), 2);
        for (cg, c) in out.iter() {
            let d = cg.decode();
            assert_eq!(d.n, 2);
            assert_eq!(d.decorations.len(), 4);
            assert_eq!(c.clone().abs(), coeff_int(2).abs());
        }
        // No omega: zero.
        let g2 = DecoratedGraph::new(Family::Extended, 1, vec![], vec![(0, 0), (0, 1), (0, 2)]);
        assert!(delta_z(&Chain::from_graph(&g2), &alpha).unwrap().is_zero());
    }

    #[test]
    fn bracket_of_generators() {
        let alpha = Alphabet::Symplectic { g: 2 };
        let x = Chain::from_graph(&one_vertex(&[0, 2, 3]));
        let y = Chain::from_graph(&one_vertex(&[1, 2, 3]));
        let b = lie_bracket(&x, &y, &alpha).unwrap();
        // Pairs with nonzero pairing: (a1,b1), (a2,b2) twice, (b2,a2) twice.
        assert!(!b.is_zero());
        for (cg, _) in b.iter() {
            let d = cg.decode();
            assert_eq!(d.n, 2);
            assert_eq!(d.edges.len(), 1);
            assert_eq!(d.decorations.len(), 4);
        }
    }

    #[test]
    fn osp_substitution() {
        let x = OspNil::generator(0, 2);
        let g = DecoratedGraph::new(
            Family::Extended,
            1,
            vec![],
            vec![(0, OMEGA), (0, 1), (0, 2)],
        );
        let acted = x.act(&Chain::from_graph(&g));
        assert_eq!(acted.len(), 1);
        let (cg, _) = acted.iter().next().unwrap();
        let mut syms: Vec<u16> = cg.decode().decorations.iter().map(|&(_, s)| s).collect();
        syms.sort_unstable();
        assert_eq!(syms, vec![0, 1, 2]);
        // Substituting into a graph without omega gives zero.
        let no_omega = DecoratedGraph::new(
            Family::Extended,
            1,
            vec![],
            vec![(0, 0), (0, 1), (0, 2)],
        );
        assert!(x.act(&Chain::from_graph(&no_omega)).is_zero());
    }
}
