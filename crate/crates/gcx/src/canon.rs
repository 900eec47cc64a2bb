//! Canonical labelling with orientation signs, and automorphism groups.
//!
//! The canonical form of a decorated graph is the lexicographically smallest
//! byte encoding over all relabelings compatible with an
//! individualization-refinement search.  Alongside the encoding we track the
//! parity of the induced permutation of the orientation items (edges and
//! decorations); a graph admitting an automorphism that acts by an odd
//! permutation on those items is the zero chain and canonicalizes to `Zero`.

use crate::graph::{CanonGraph, DecoratedGraph, GraphError, OMEGA};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalForm {
    /// The graph is the zero chain (odd automorphism).
    Zero,
    NonZero { graph: CanonGraph, sign: i8 },
}

impl CanonicalForm {
    pub fn is_zero(&self) -> bool {
        matches!(self, CanonicalForm::Zero)
    }

    pub fn graph(&self) -> Option<&CanonGraph> {
        match self {
            CanonicalForm::Zero => None,
            CanonicalForm::NonZero { graph, .. } => Some(graph),
        }
    }

    pub fn sign(&self) -> i8 {
        match self {
            CanonicalForm::Zero => 0,
            CanonicalForm::NonZero { sign, .. } => *sign,
        }
    }
}

/// Automorphism data of a decorated graph.
///
/// `order` counts vertex automorphisms times the factorials of parallel-edge
/// and repeated-decoration multiplicities.  `generators` lists the vertex
/// permutations (`perm[old] = old`) realizing the vertex part; the swaps of
/// indistinguishable parallel structures are implicit.
#[derive(Clone, Debug)]
pub struct Automorphisms {
    pub order: u64,
    pub generators: Vec<Vec<u8>>,
    pub has_odd: bool,
}

/// Multiplicity classes of identical orientation items.  A class of two or
/// more identical odd items (edges, or degree-one decorations) yields an odd
/// automorphism, so the graph vanishes.  Repeated omega decorations are
/// even: they contribute to the automorphism order but not to `has_odd`.
fn duplicate_item_factor(g: &DecoratedGraph) -> (u64, bool) {
    let mut edge_mult: HashMap<(u8, u8), u64> = HashMap::new();
    for &e in &g.edges {
        *edge_mult.entry(e).or_insert(0) += 1;
    }
    let mut dec_mult: HashMap<(u8, u16), u64> = HashMap::new();
    for &d in &g.decorations {
        *dec_mult.entry(d).or_insert(0) += 1;
    }
    let mut factor = 1u64;
    let mut any = false;
    for &m in edge_mult.values() {
        if m > 1 {
            any = true;
            factor *= (1..=m).product::<u64>();
        }
    }
    for (&(_, s), &m) in dec_mult.iter() {
        if m > 1 {
            if s != OMEGA {
                any = true;
            }
            factor *= (1..=m).product::<u64>();
        }
    }
    (factor, any)
}

/// Stable 1-dimensional Weisfeiler-Leman refinement of a vertex coloring.
/// Colors only split, never merge, and the result is independent of the
/// input labelling (equivariant).
fn refine(g: &DecoratedGraph, colors: &mut Vec<u32>) {
    let n = g.n as usize;
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = (0..n).map(|v| (colors[v], Vec::new())).collect();
        for &(a, b) in &g.edges {
            if a != b {
                sigs[a as usize].1.push(colors[b as usize]);
                sigs[b as usize].1.push(colors[a as usize]);
            }
        }
        for s in sigs.iter_mut() {
            s.1.sort_unstable();
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&x, &y| sigs[x].cmp(&sigs[y]));
        let mut new_colors = vec![0u32; n];
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && sigs[order[i]] != sigs[order[i - 1]] {
                next += 1;
            }
            new_colors[order[i]] = next;
        }
        if new_colors == *colors {
            return;
        }
        *colors = new_colors;
    }
}

fn initial_colors(g: &DecoratedGraph) -> Vec<u32> {
    let n = g.n as usize;
    let mut invariants: Vec<(Vec<u16>, u32, u32)> = vec![(Vec::new(), 0, 0); n];
    for &(v, s) in &g.decorations {
        invariants[v as usize].0.push(s);
    }
    for inv in invariants.iter_mut() {
        inv.0.sort_unstable();
    }
    for &(a, b) in &g.edges {
        if a == b {
            invariants[a as usize].1 += 1;
        } else {
            invariants[a as usize].2 += 1;
            invariants[b as usize].2 += 1;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| invariants[x].cmp(&invariants[y]));
    let mut colors = vec![0u32; n];
    let mut next = 0u32;
    for i in 0..n {
        if i > 0 && invariants[order[i]] != invariants[order[i - 1]] {
            next += 1;
        }
        colors[order[i]] = next;
    }
    colors
}

/// Encodes the graph relabelled by `pi` (`pi[old] = new`), returning the
/// canonical byte string for that labelling and the parity of the induced
/// permutation of the odd orientation items (edges and degree-one
/// decorations; omega is even) relative to the reference order.
fn encode_labeling(g: &DecoratedGraph, pi: &[u8]) -> (CanonGraph, i8) {
    let mut edges: Vec<(u8, u8)> = g
        .edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (pi[a as usize], pi[b as usize]);
            (x.min(y), x.max(y))
        })
        .collect();
    let s1 = sort_parity(&mut edges);
    let mut decs: Vec<(u8, u16)> = g
        .decorations
        .iter()
        .map(|&(v, s)| (pi[v as usize], s))
        .collect();
    // The full decoration list is sorted for the encoding, but only the odd
    // (non-omega) entries contribute parity; sorting preserves the relative
    // order of the odd subsequence exactly as sorting that subsequence
    // alone.
    let mut odd: Vec<(u8, u16)> = decs.iter().copied().filter(|&(_, s)| s != OMEGA).collect();
    let s2 = sort_parity(&mut odd);
    decs.sort_unstable();
    (
        CanonGraph::from_parts(g.family, g.n, &edges, &decs),
        s1 * s2,
    )
}

/// Insertion sort tracking the parity of the applied permutation.  Ties do
/// not move, so the parity is exact whenever the items are distinct.
fn sort_parity<T: Ord>(v: &mut [T]) -> i8 {
    let mut parity = 1i8;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j] < v[j - 1] {
            v.swap(j, j - 1);
            parity = -parity;
            j -= 1;
        }
    }
    parity
}

/// All leaves of the individualization-refinement search: complete
/// labelings compatible with iterated refinement.  The leaf set is closed
/// under composition with automorphisms.
fn search_labelings(g: &DecoratedGraph) -> Vec<Vec<u8>> {
    let n = g.n as usize;
    let mut leaves = Vec::new();
    let mut colors = initial_colors(g);
    refine(g, &mut colors);

    fn descend(g: &DecoratedGraph, colors: Vec<u32>, leaves: &mut Vec<Vec<u8>>) {
        let n = g.n as usize;
        let distinct = {
            let mut c = colors.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        if distinct == n {
            let mut pi = vec![0u8; n];
            for v in 0..n {
                pi[v] = colors[v] as u8;
            }
            leaves.push(pi);
            return;
        }
        // First non-singleton cell by color value.
        let mut cell_color = u32::MAX;
        for c in 0..n as u32 {
            let count = colors.iter().filter(|&&x| x == c).count();
            if count > 1 {
                cell_color = c;
                break;
            }
        }
        for v in 0..n {
            if colors[v] != cell_color {
                continue;
            }
            let mut next = Vec::with_capacity(n);
            for (u, &c) in colors.iter().enumerate() {
                let shifted = if c > cell_color {
                    c + 1
                } else if c == cell_color && u != v {
                    c + 1
                } else {
                    c
                };
                next.push(shifted);
            }
            refine(g, &mut next);
            descend(g, next, leaves);
        }
    }

    if n == 1 {
        return vec![vec![0]];
    }
    descend(g, colors, &mut leaves);
    leaves
}

struct SearchOutcome {
    encoding: CanonGraph,
    sign: i8,
    aut_order: u64,
    min_labelings: Vec<Vec<u8>>,
    mixed_signs: bool,
}

fn search(g: &DecoratedGraph) -> SearchOutcome {
    let leaves = search_labelings(g);
    let mut best: Option<(CanonGraph, i8)> = None;
    let mut min_labelings: Vec<Vec<u8>> = Vec::new();
    let mut mixed = false;
    for pi in leaves {
        let (enc, sign) = encode_labeling(g, &pi);
        match &best {
            None => {
                best = Some((enc, sign));
                min_labelings = vec![pi];
            }
            Some((b, bsign)) => match enc.cmp(b) {
                std::cmp::Ordering::Less => {
                    best = Some((enc, sign));
                    min_labelings = vec![pi];
                    mixed = false;
                }
                std::cmp::Ordering::Equal => {
                    if sign != *bsign {
                        mixed = true;
                    }
                    min_labelings.push(pi);
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
    let (encoding, sign) = best.expect("at least one labeling");
    SearchOutcome {
        encoding,
        sign,
        aut_order: min_labelings.len() as u64,
        min_labelings,
        mixed_signs: mixed,
    }
}

/// Canonical form of a graph assumed to satisfy the structural invariants.
/// Graphs with parallel edges, repeated tadpoles at a vertex, or repeated
/// identical decorations at a vertex are zero.
pub fn canonical_form_unchecked(g: &DecoratedGraph) -> CanonicalForm {
    let (_, has_dup) = duplicate_item_factor(g);
    if has_dup {
        return CanonicalForm::Zero;
    }
    let outcome = search(g);
    if outcome.mixed_signs {
        CanonicalForm::Zero
    } else {
        CanonicalForm::NonZero {
            graph: outcome.encoding,
            sign: outcome.sign,
        }
    }
}

/// Canonical form with structural validation: disconnected graphs, valence
/// below three, or tadpoles outside the tadpole family are rejected.
pub fn canonical_form(g: &DecoratedGraph) -> Result<CanonicalForm, GraphError> {
    if g.n == 0 {
        return Err(GraphError::Empty);
    }
    for &(a, b) in &g.edges {
        if a >= g.n || b >= g.n {
            return Err(GraphError::BadVertex(a.max(b)));
        }
        if a == b && !g.family.allows_tadpoles() {
            return Err(GraphError::TadpoleForbidden);
        }
    }
    for &(v, _) in &g.decorations {
        if v >= g.n {
            return Err(GraphError::BadVertex(v));
        }
    }
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    for v in 0..g.n {
        let val = g.valence(v);
        if val < 3 {
            return Err(GraphError::LowValence(v, val));
        }
    }
    Ok(canonical_form_unchecked(g))
}

/// Minimal encoding of a graph regardless of orientation signs; used to
/// deduplicate bare core graphs whose decorated extensions may be nonzero
/// even when the bare graph itself is the zero chain.
pub(crate) fn bare_min_encoding(g: &DecoratedGraph) -> CanonGraph {
    search(g).encoding
}

/// Automorphism group data.  The order is the number of vertex
/// automorphisms multiplied by the factorials of the multiplicities of
/// identical parallel items; `has_odd` is consistent with
/// `canonical_form == Zero`.
pub fn automorphisms(g: &DecoratedGraph) -> Automorphisms {
    let (dup_factor, has_dup) = duplicate_item_factor(g);
    let outcome = search(g);
    let pi0 = &outcome.min_labelings[0];
    let mut inverse0 = vec![0u8; g.n as usize];
    for (old, &new) in pi0.iter().enumerate() {
        inverse0[new as usize] = old as u8;
    }
    let mut generators = Vec::new();
    for pi in outcome.min_labelings.iter().skip(1) {
        // alpha = pi0^{-1} after pi, mapping old labels to old labels.
        let alpha: Vec<u8> = (0..g.n as usize)
            .map(|v| inverse0[pi[v] as usize])
            .collect();
        generators.push(alpha);
    }
    Automorphisms {
        order: outcome.aut_order * dup_factor,
        generators,
        has_odd: has_dup || outcome.mixed_signs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn triangle(decs: [u16; 3]) -> DecoratedGraph {
        DecoratedGraph::new(
            Family::Plain,
            3,
            vec![(0, 1), (1, 2), (0, 2)],
            vec![(0, decs[0]), (1, decs[1]), (2, decs[2])],
        )
    }

    #[test]
    fn triangle_distinct_decorations_is_rigid() {
        let g = triangle([0, 2, 4]);
        let c = canonical_form(&g).unwrap();
        assert!(!c.is_zero());
        // Canonicalizing the same input twice gives the same sign, and the
        // canonical representative is its own canonical form with sign +1.
        assert_eq!(canonical_form(&g).unwrap(), c);
        let rep = c.graph().unwrap().decode();
        let c2 = canonical_form(&rep).unwrap();
        assert_eq!(c2.graph(), c.graph());
        assert_eq!(c2.sign(), 1);
        let aut = automorphisms(&g);
        assert_eq!(aut.order, 1);
        assert!(!aut.has_odd);
    }

    #[test]
    fn parallel_edges_vanish() {
        let g = DecoratedGraph::new(
            Family::Plain,
            2,
            vec![(0, 1), (0, 1)],
            vec![(0, 0), (1, 2)],
        );
        assert_eq!(canonical_form(&g).unwrap(), CanonicalForm::Zero);
        assert!(automorphisms(&g).has_odd);
    }

    #[test]
    fn repeated_decoration_at_same_vertex_vanishes() {
        let g = DecoratedGraph::new(
            Family::Plain,
            1,
            vec![],
            vec![(0, 0), (0, 0), (0, 1)],
        );
        assert_eq!(canonical_form(&g).unwrap(), CanonicalForm::Zero);
    }

    #[test]
    fn edge_transposition_flips_sign() {
        let g = triangle([0, 2, 4]);
        let mut swapped = g.clone();
        swapped.edges.swap(0, 1);
        let c1 = canonical_form(&g).unwrap();
        let c2 = canonical_form(&swapped).unwrap();
        assert_eq!(c1.graph(), c2.graph());
        assert_eq!(c1.sign(), -c2.sign());
    }

    #[test]
    fn relabeling_preserves_encoding_and_composes_signs() {
        let g = triangle([0, 2, 4]);
        // Relabel vertices by the 3-cycle 0->1->2->0.
        let perm = [1u8, 2, 0];
        let relabeled = DecoratedGraph::new(
            g.family,
            3,
            g.edges
                .iter()
                .map(|&(a, b)| (perm[a as usize], perm[b as usize]))
                .collect(),
            g.decorations
                .iter()
                .map(|&(v, s)| (perm[v as usize], s))
                .collect(),
        );
        let c1 = canonical_form(&g).unwrap();
        let c2 = canonical_form(&relabeled).unwrap();
        assert_eq!(c1.graph(), c2.graph());
        // Relabeling is itself a permutation of the items; signs must agree
        // up to the parity of that permutation, here computable by hand:
        // edges (01)(12)(02) -> (12)(20)(10): as sorted pairs the images are
        // a 3-cycle of the edge list (even), decorations3-cycle (even).
        assert_eq!(c1.sign(), c2.sign());
    }

    #[test]
    fn symmetric_triangle_has_dihedral_symmetry() {
        let g = triangle([0, 0, 0]);
        let aut = automorphisms(&g);
        assert_eq!(aut.order, 6);
        // One decoration per vertex: a reflection swaps two edges (odd) and
        // two decorations (odd), so the total action is even and the graph
        // survives.
        assert!(!aut.has_odd);
        assert!(!canonical_form(&g).unwrap().is_zero());
    }

    #[test]
    fn theta_graph_vanishes_k4_survives() {
        // Two vertices joined by three parallel edges.
        let theta = DecoratedGraph::new(Family::Plain, 2, vec![(0, 1); 3], vec![]);
        assert!(canonical_form(&theta).unwrap().is_zero());
        // K4 has even-acting automorphisms only.
        let k4 = DecoratedGraph::new(
            Family::Plain,
            4,
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            vec![],
        );
        let c = canonical_form(&k4).unwrap();
        assert!(!c.is_zero());
        assert_eq!(automorphisms(&k4).order, 24);
    }

    #[test]
    fn tadpole_survives_in_tadpole_family() {
        let g = DecoratedGraph::new(Family::Tadpole, 1, vec![(0, 0)], vec![(0, 0)]);
        let c = canonical_form(&g).unwrap();
        assert!(!c.is_zero());
    }

    #[test]
    fn validation_errors_from_canonical_form() {
        let g = DecoratedGraph::new(Family::Plain, 2, vec![(0, 1)], vec![(0, 0)]);
        assert!(matches!(
            canonical_form(&g),
            Err(GraphError::LowValence(_, _))
        ));
    }
}
