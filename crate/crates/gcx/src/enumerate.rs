//! Exhaustive enumeration of chain-group bases.
//!
//! A basis slice is determined by (family, alphabet, weight W, loop order l,
//! cohomological degree k).  The grading pins the graph shape exactly:
//! `e = W + k - 1`, `v = e - l + 1`, and the total decoration degree is
//! `D = W - 2l + 2`.  The valence bound forces `v <= W`, so every slice is
//! finite.
//!
//! Enumeration proceeds in two stages: bare core multigraphs up to
//! isomorphism (no parallel edges, at most one tadpole per vertex — anything
//! else is the zero chain), then all decoration assignments, canonicalized
//! and deduplicated.

use crate::canon::{canonical_form_unchecked, CanonicalForm};
use crate::graph::{Alphabet, CanonGraph, DecoratedGraph, Family, OMEGA};
use std::collections::HashSet;

/// Shape parameters of a slice, derived from the grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SliceShape {
    pub vertices: u8,
    pub edges: u16,
    pub dec_degree: u32,
}

/// Resolves (W, l, k) to a concrete shape, or `None` when the grading is
/// infeasible.
pub fn slice_shape(w: u32, ell: u32, k: i64) -> Option<SliceShape> {
    let e = w as i64 + k - 1;
    if e < 0 {
        return None;
    }
    let v = e - ell as i64 + 1;
    if v < 1 || v > w as i64 {
        return None;
    }
    let d = w as i64 - 2 * ell as i64 + 2;
    if d < 0 {
        return None;
    }
    if v > u8::MAX as i64 || e > u16::MAX as i64 {
        return None;
    }
    Some(SliceShape {
        vertices: v as u8,
        edges: e as u16,
        dec_degree: d as u32,
    })
}

/// Range of cohomological degrees that can carry chains for fixed (W, l):
/// `l - W + 1 ..= l`.
pub fn degree_range(w: u32, ell: u32) -> std::ops::RangeInclusive<i64> {
    (ell as i64 - w as i64 + 1)..=(ell as i64)
}

/// Connected core multigraphs on `v` vertices with `e` edges, up to
/// isomorphism: no parallel edges, at most one tadpole per vertex (only when
/// allowed).  `max_items_total` and `max_items_per_vertex` bound the
/// decoration items that will later be available to raise valences; they are
/// used purely for pruning.
pub fn core_graphs(
    v: u8,
    e: u16,
    allow_tadpole: bool,
    max_items_total: u32,
    max_items_per_vertex: u32,
    family: Family,
) -> Vec<DecoratedGraph> {
    let n = v as usize;
    let mut out: Vec<DecoratedGraph> = Vec::new();
    let mut seen: HashSet<CanonGraph> = HashSet::new();

    if n == 1 {
        // Only tadpoles possible.
        let tads = e as usize;
        let ok = (tads == 0 || (allow_tadpole && tads == 1))
            && 2 * tads as u32 + max_items_per_vertex.min(max_items_total) >= 3;
        if ok {
            let edges = vec![(0u8, 0u8); tads];
            out.push(DecoratedGraph::new(family, 1, edges, vec![]));
        }
        return out;
    }

    // Enumerate non-increasing degree vectors, then all edge sets realizing
    // them exactly.  Sorted degree vectors partition the isomorphism classes,
    // so no class is produced twice across vectors.
    let min_deg = 3u32.saturating_sub(max_items_per_vertex).max(1);
    let max_deg_struct = (n as u32 - 1) + if allow_tadpole { 2 } else { 0 };
    let target: u32 = 2 * e as u32;

    let mut degs: Vec<u32> = Vec::with_capacity(n);
    let mut degree_vectors: Vec<Vec<u32>> = Vec::new();
    fn gen_degs(
        remaining: u32,
        slots: usize,
        max_allowed: u32,
        min_deg: u32,
        degs: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(degs.clone());
            }
            return;
        }
        let hi = max_allowed.min(remaining);
        let lo = min_deg;
        if lo * (slots as u32) > remaining {
            return;
        }
        for d in (lo..=hi).rev() {
            if d * (slots as u32) < remaining {
                break;
            }
            degs.push(d);
            gen_degs(remaining - d, slots - 1, d, min_deg, degs, out);
            degs.pop();
        }
    }
    gen_degs(
        target,
        n,
        max_deg_struct,
        min_deg,
        &mut degs,
        &mut degree_vectors,
    );

    // Total valence deficit must be coverable by decoration items.
    degree_vectors.retain(|d| {
        d.iter().map(|&x| 3u32.saturating_sub(x)).sum::<u32>() <= max_items_total
    });

    // Slots in lexicographic order; tadpole slot (i,i) first within vertex i.
    let mut slots: Vec<(u8, u8)> = Vec::new();
    for i in 0..n as u8 {
        if allow_tadpole {
            slots.push((i, i));
        }
        for j in (i + 1)..n as u8 {
            slots.push((i, j));
        }
    }

    for dv in degree_vectors {
        let mut rem: Vec<u32> = dv.clone();
        let mut edges: Vec<(u8, u8)> = Vec::new();
        let mut stack_out: Vec<DecoratedGraph> = Vec::new();
        fn place(
            idx: usize,
            slots: &[(u8, u8)],
            rem: &mut [u32],
            edges: &mut Vec<(u8, u8)>,
            e: usize,
            family: Family,
            n: usize,
            out: &mut Vec<DecoratedGraph>,
        ) {
            if edges.len() == e {
                if rem.iter().all(|&r| r == 0) {
                    let g = DecoratedGraph::new(family, n as u8, edges.clone(), vec![]);
                    if g.is_connected() {
                        out.push(g);
                    }
                }
                return;
            }
            if idx == slots.len() {
                return;
            }
            // Feasibility: remaining degree must be realizable by the
            // remaining slots touching each vertex.
            if edges.len() + (slots.len() - idx) < e {
                return;
            }
            let (a, b) = slots[idx];
            // Slot ordering means vertex a is finalized once its last slot
            // passes; skipping while a still needs degree is infeasible.
            let a_done_after = idx + 1 == slots.len() || slots[idx + 1].0 != a;
            let skip_traps_a = a_done_after && rem[a as usize] > 0;
            if !skip_traps_a {
                place(idx + 1, slots, rem, edges, e, family, n, out);
            }
            // Option 2: take the edge.
            let need = if a == b { 2 } else { 1 };
            if a == b {
                if rem[a as usize] >= 2 {
                    rem[a as usize] -= 2;
                    edges.push((a, b));
                    place(idx + 1, slots, rem, edges, e, family, n, out);
                    edges.pop();
                    rem[a as usize] += 2;
                }
            } else if rem[a as usize] >= need && rem[b as usize] >= need {
                rem[a as usize] -= 1;
                rem[b as usize] -= 1;
                edges.push((a, b));
                place(idx + 1, slots, rem, edges, e, family, n, out);
                edges.pop();
                rem[a as usize] += 1;
                rem[b as usize] += 1;
            }
        }
        place(
            0,
            &slots,
            &mut rem,
            &mut edges,
            e as usize,
            family,
            n,
            &mut stack_out,
        );
        for g in stack_out {
            // Dedupe by the bare canonical encoding (ignoring orientation
            // signs: a core that vanishes bare can still support nonzero
            // decorated graphs).
            let enc = bare_encoding(&g);
            if seen.insert(enc) {
                out.push(g);
            }
        }
    }
    out
}

/// Canonical encoding of the bare graph, signs ignored.
fn bare_encoding(g: &DecoratedGraph) -> CanonGraph {
    match canonical_form_unchecked(g) {
        CanonicalForm::NonZero { graph, .. } => graph,
        CanonicalForm::Zero => {
            // Odd automorphism: rerun the search for the encoding alone by
            // canonicalizing with a sentinel decoration is unnecessary; the
            // search itself always produces an encoding.  Reconstruct it.
            crate::canon::bare_min_encoding(g)
        }
    }
}

/// Distributes decorations over a core graph; returns nonzero canonical
/// forms.  `content` restricts the decoration multiset exactly when given.
fn assign_decorations(
    core: &DecoratedGraph,
    alphabet: &Alphabet,
    d_degree: u32,
    content: Option<&[(u16, u8)]>,
    sink: &mut HashSet<CanonGraph>,
) {
    let n = core.n as usize;
    let mut min_items = vec![0u32; n];
    for v in 0..n as u8 {
        min_items[v as usize] = 3u32.saturating_sub(core.valence(v));
    }

    match content {
        Some(content) => {
            // Exact multiset: place each copy of each symbol on a distinct
            // vertex (two copies at one vertex vanish).
            let total_items: u32 = content.iter().map(|&(_, m)| m as u32).sum();
            let mut placed: Vec<Vec<u16>> = vec![Vec::new(); n];
            distribute_content(
                core,
                content,
                0,
                total_items,
                &mut placed,
                &min_items,
                sink,
            );
        }
        None => match alphabet {
            Alphabet::Symplectic { .. } | Alphabet::Hairy { .. } => {
                let symbols: Vec<u16> = (0..alphabet.h1_rank()).collect();
                let hairy = matches!(alphabet, Alphabet::Hairy { .. });
                if hairy {
                    let mut assignment = vec![0u8; symbols.len()];
                    distribute_hairs(core, 0, &mut assignment, &min_items, sink);
                } else {
                    let mut sets: Vec<Vec<u16>> = vec![Vec::new(); n];
                    distribute_sets(core, alphabet, &symbols, 0, d_degree, &mut sets, &min_items, sink, false);
                }
            }
            Alphabet::Extended { .. } => {
                let symbols: Vec<u16> = (0..alphabet.h1_rank()).collect();
                let mut sets: Vec<Vec<u16>> = vec![Vec::new(); n];
                distribute_sets(core, alphabet, &symbols, 0, d_degree, &mut sets, &min_items, sink, true);
            }
        },
    }
}

/// Per-vertex symbol sets for symplectic or extended alphabets, vertex by
/// vertex.  For the extended alphabet each vertex may additionally carry one
/// omega (degree two).
#[allow(clippy::too_many_arguments)]
fn distribute_sets(
    core: &DecoratedGraph,
    alphabet: &Alphabet,
    symbols: &[u16],
    vertex: usize,
    remaining_degree: u32,
    sets: &mut Vec<Vec<u16>>,
    min_items: &[u32],
    sink: &mut HashSet<CanonGraph>,
    with_omega: bool,
) {
    let n = core.n as usize;
    if vertex == n {
        if remaining_degree == 0 {
            emit(core, sets, sink);
        }
        return;
    }
    // Remaining vertices must be able to absorb the remaining degree and
    // satisfy their minima.
    let min_rest: u32 = min_items[vertex..].iter().sum();
    if min_rest > remaining_degree {
        return;
    }
    let max_here = remaining_degree;
    // Omega is a symmetric (even) decoration: a vertex may carry any number
    // of copies.
    let max_omega = if with_omega { max_here / 2 } else { 0 };
    for n_omega in 0..=max_omega {
        let degree_left = max_here - 2 * n_omega;
        let max_set = degree_left.min(symbols.len() as u32);
        for set_size in 0..=max_set {
            let items = n_omega + set_size;
            if items < min_items[vertex] {
                continue;
            }
            // Enumerate combinations of `set_size` symbols.
            let mut combo: Vec<u16> = Vec::with_capacity(set_size as usize);
            combos(
                symbols,
                0,
                set_size as usize,
                &mut combo,
                &mut |chosen: &[u16]| {
                    let mut set: Vec<u16> = chosen.to_vec();
                    for _ in 0..n_omega {
                        set.push(OMEGA);
                    }
                    sets[vertex] = set;
                    distribute_sets(
                        core,
                        alphabet,
                        symbols,
                        vertex + 1,
                        remaining_degree - 2 * n_omega - set_size,
                        sets,
                        min_items,
                        sink,
                        with_omega,
                    );
                    sets[vertex] = Vec::new();
                },
            );
        }
    }
}

fn combos<F: FnMut(&[u16])>(
    symbols: &[u16],
    start: usize,
    need: usize,
    combo: &mut Vec<u16>,
    f: &mut F,
) {
    if need == 0 {
        f(combo);
        return;
    }
    if symbols.len() - start < need {
        return;
    }
    for i in start..symbols.len() {
        combo.push(symbols[i]);
        combos(symbols, i + 1, need - 1, combo, f);
        combo.pop();
        if symbols.len() - (i + 1) < need - 1 {
            break;
        }
    }
}

/// Assigns numbered hairs to vertices one hair at a time.
fn distribute_hairs(
    core: &DecoratedGraph,
    hair: usize,
    assignment: &mut Vec<u8>,
    min_items: &[u32],
    sink: &mut HashSet<CanonGraph>,
) {
    let r = assignment.len();
    let n = core.n as usize;
    if hair == r {
        let mut counts = vec![0u32; n];
        for &v in assignment.iter() {
            counts[v as usize] += 1;
        }
        if counts
            .iter()
            .zip(min_items.iter())
            .all(|(&c, &m)| c >= m)
        {
            let decorations: Vec<(u8, u16)> = assignment
                .iter()
                .enumerate()
                .map(|(h, &v)| (v, h as u16))
                .collect();
            let g = DecoratedGraph {
                family: core.family,
                n: core.n,
                edges: core.edges.clone(),
                decorations,
            };
            if let CanonicalForm::NonZero { graph, .. } = canonical_form_unchecked(&g) {
                sink.insert(graph);
            }
        }
        return;
    }
    // Deficit pruning: remaining hairs must cover remaining minima.
    let mut counts = vec![0u32; n];
    for &v in assignment[..hair].iter() {
        counts[v as usize] += 1;
    }
    let deficit: u32 = counts
        .iter()
        .zip(min_items.iter())
        .map(|(&c, &m)| m.saturating_sub(c))
        .sum();
    if deficit > (r - hair) as u32 {
        return;
    }
    for v in 0..n as u8 {
        assignment[hair] = v;
        distribute_hairs(core, hair + 1, assignment, min_items, sink);
    }
}

/// Exact-content distribution: symbol by symbol, each copy on a distinct
/// vertex.
#[allow(clippy::too_many_arguments)]
fn distribute_content(
    core: &DecoratedGraph,
    content: &[(u16, u8)],
    idx: usize,
    items_left: u32,
    placed: &mut Vec<Vec<u16>>,
    min_items: &[u32],
    sink: &mut HashSet<CanonGraph>,
) {
    let n = core.n as usize;
    let deficit: u32 = placed
        .iter()
        .zip(min_items.iter())
        .map(|(p, &m)| m.saturating_sub(p.len() as u32))
        .sum();
    if deficit > items_left {
        return;
    }
    if idx == content.len() {
        emit(core, placed, sink);
        return;
    }
    let (symbol, mult) = content[idx];
    let mult = mult as usize;
    // Choose `mult` distinct vertices for the copies of `symbol`.
    let vertices: Vec<u8> = (0..n as u8).collect();
    let mut chosen: Vec<u8> = Vec::with_capacity(mult);
    fn choose(
        vertices: &[u8],
        start: usize,
        need: usize,
        chosen: &mut Vec<u8>,
        f: &mut dyn FnMut(&[u8]),
    ) {
        if need == 0 {
            f(chosen);
            return;
        }
        if vertices.len() - start < need {
            return;
        }
        for i in start..vertices.len() {
            chosen.push(vertices[i]);
            choose(vertices, i + 1, need - 1, chosen, f);
            chosen.pop();
        }
    }
    choose(&vertices, 0, mult, &mut chosen, &mut |vs: &[u8]| {
        for &v in vs {
            placed[v as usize].push(symbol);
        }
        distribute_content(
            core,
            content,
            idx + 1,
            items_left - mult as u32,
            placed,
            min_items,
            sink,
        );
        for &v in vs {
            placed[v as usize].pop();
        }
    });
}

fn emit(core: &DecoratedGraph, sets: &[Vec<u16>], sink: &mut HashSet<CanonGraph>) {
    let mut decorations: Vec<(u8, u16)> = Vec::new();
    for (v, set) in sets.iter().enumerate() {
        for &s in set {
            decorations.push((v as u8, s));
        }
    }
    let g = DecoratedGraph {
        family: core.family,
        n: core.n,
        edges: core.edges.clone(),
        decorations,
    };
    if let CanonicalForm::NonZero { graph, .. } = canonical_form_unchecked(&g) {
        sink.insert(graph);
    }
}

fn max_items_per_vertex(alphabet: &Alphabet, d_degree: u32) -> u32 {
    match alphabet {
        // A vertex carries a set of distinct degree-one symbols, plus (in
        // the extended alphabet) any number of omegas.
        Alphabet::Symplectic { g } => (2 * *g as u32).min(d_degree),
        Alphabet::Extended { g } => (2 * *g as u32 + d_degree / 2).min(d_degree),
        Alphabet::Hairy { r } => (*r as u32).min(d_degree),
    }
}

/// Complete duplicate-free ordered list of the nonzero canonical graphs in
/// one graded slice.  Infeasible gradings yield an empty list.
pub fn enumerate_basis(
    family: Family,
    alphabet: &Alphabet,
    w: u32,
    ell: u32,
    k: i64,
) -> Vec<CanonGraph> {
    enumerate_basis_impl(family, alphabet, w, ell, k, None)
}

/// Same, restricted to an exact decoration content (multiset of symbols
/// given as sorted `(symbol, multiplicity)` pairs).
pub fn enumerate_basis_content(
    family: Family,
    alphabet: &Alphabet,
    w: u32,
    ell: u32,
    k: i64,
    content: &[(u16, u8)],
) -> Vec<CanonGraph> {
    enumerate_basis_impl(family, alphabet, w, ell, k, Some(content))
}

fn enumerate_basis_impl(
    family: Family,
    alphabet: &Alphabet,
    w: u32,
    ell: u32,
    k: i64,
    content: Option<&[(u16, u8)]>,
) -> Vec<CanonGraph> {
    let Some(shape) = slice_shape(w, ell, k) else {
        return Vec::new();
    };
    if family == Family::Hairy {
        match alphabet {
            Alphabet::Hairy { r } => {
                if *r as u32 != shape.dec_degree {
                    return Vec::new();
                }
            }
            _ => return Vec::new(),
        }
    }
    if let Some(content) = content {
        let content_degree: u32 = content
            .iter()
            .map(|&(s, m)| alphabet.degree(s) * m as u32)
            .sum();
        if content_degree != shape.dec_degree {
            return Vec::new();
        }
    }
    let per_vertex = max_items_per_vertex(alphabet, shape.dec_degree);
    let cores = core_graphs(
        shape.vertices,
        shape.edges,
        family.allows_tadpoles(),
        shape.dec_degree,
        per_vertex,
        family,
    );
    let mut sink: HashSet<CanonGraph> = HashSet::new();
    for core in &cores {
        assign_decorations(core, alphabet, shape.dec_degree, content, &mut sink);
    }
    let mut basis: Vec<CanonGraph> = sink.into_iter().collect();
    basis.sort();
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_one_tree_slice_is_lambda_cubed() {
        // One-vertex graphs with three distinct decorations: C(2g, 3).
        for g in [2u16, 3, 4] {
            let alpha = Alphabet::Symplectic { g };
            let basis = enumerate_basis(Family::Plain, &alpha, 1, 0, 0);
            let n = 2 * g as u64;
            assert_eq!(basis.len() as u64, n * (n - 1) * (n - 2) / 6, "g={g}");
        }
    }

    #[test]
    fn hairy_one_loop_three_hairs() {
        let alpha = Alphabet::Hairy { r: 3 };
        // Degree 1: the triangle with one hair per vertex.
        let basis = enumerate_basis(Family::Hairy, &alpha, 3, 1, 1);
        assert_eq!(basis.len(), 1);
        let g = basis[0].decode();
        assert_eq!(g.n, 3);
        assert_eq!(g.edges.len(), 3);
        // Degree 0 (two-gon) vanishes by the parallel-edge rule.
        assert!(enumerate_basis(Family::Hairy, &alpha, 3, 1, 0).is_empty());
    }

    #[test]
    fn infeasible_gradings_are_empty() {
        let alpha = Alphabet::Symplectic { g: 1 };
        for k in -3..=3 {
            assert!(enumerate_basis(Family::Plain, &alpha, 2, 2, k).is_empty());
        }
    }

    #[test]
    fn grading_consistency_of_enumerated_graphs() {
        let alpha = Alphabet::Symplectic { g: 2 };
        for w in 1..=3u32 {
            for ell in 0..=(w / 2 + 1) {
                for k in degree_range(w, ell) {
                    for c in enumerate_basis(Family::Plain, &alpha, w, ell, k) {
                        let g = c.decode();
                        assert_eq!(g.weight(&alpha), w as i64);
                        assert_eq!(g.loop_order(), ell as i64);
                        assert_eq!(g.degree(&alpha), k);
                        assert!(g.validate(&alpha).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn tadpole_family_contains_extra_weight_one_generators() {
        let alpha = Alphabet::Symplectic { g: 2 };
        // Weight 1 tadpole slice at degree 1: vertex with one tadpole and
        // one decoration.
        let basis = enumerate_basis(Family::Tadpole, &alpha, 1, 1, 1);
        assert_eq!(basis.len(), 4);
        // The plain family has nothing there.
        assert!(enumerate_basis(Family::Plain, &alpha, 1, 1, 1).is_empty());
    }

    #[test]
    fn vacuum_cubic_cores() {
        // Connected cubic simple graphs on 6 vertices: K_{3,3} and the prism.
        let cores = core_graphs(6, 9, false, 0, 0, Family::Plain);
        assert_eq!(cores.len(), 2);
        // On 8 vertices there are five.
        let cores8 = core_graphs(8, 12, false, 0, 0, Family::Plain);
        assert_eq!(cores8.len(), 5);
    }

    #[test]
    fn content_restriction_matches_filtered_enumeration() {
        let alpha = Alphabet::Symplectic { g: 2 };
        // Weight 2 trees: D = 4.
        let full = enumerate_basis(Family::Plain, &alpha, 2, 0, 0);
        let content: Vec<(u16, u8)> = vec![(0, 1), (1, 1), (2, 1), (3, 1)];
        let restricted =
            enumerate_basis_content(Family::Plain, &alpha, 2, 0, 0, &content);
        let filtered: Vec<_> = full
            .iter()
            .filter(|c| {
                let mut syms: Vec<u16> =
                    c.decode().decorations.iter().map(|&(_, s)| s).collect();
                syms.sort_unstable();
                syms == vec![0, 1, 2, 3]
            })
            .cloned()
            .collect();
        assert_eq!(restricted, filtered);
        assert!(!restricted.is_empty());
    }
}
