//! Formal linear combinations of canonical graphs with exact rational
//! coefficients.

use crate::canon::{canonical_form_unchecked, CanonicalForm};
use crate::graph::{CanonGraph, DecoratedGraph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;

pub type Coeff = BigRational;

pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Finitely supported map from canonical graphs to exact rationals.  Zero
/// coefficients are never stored and keys are always nonzero canonical
/// forms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Chain(BTreeMap<CanonGraph, Coeff>);

impl Chain {
    pub fn new() -> Self {
        Chain(BTreeMap::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonGraph, &Coeff)> {
        self.0.iter()
    }

    pub fn coeff(&self, g: &CanonGraph) -> Coeff {
        self.0.get(g).cloned().unwrap_or_else(|| Coeff::zero())
    }

    pub fn add_term(&mut self, g: CanonGraph, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(g);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Canonicalizes a raw graph and adds it with the given coefficient;
    /// zero graphs are dropped.
    pub fn add_raw(&mut self, g: &DecoratedGraph, c: Coeff) {
        match canonical_form_unchecked(g) {
            CanonicalForm::Zero => {}
            CanonicalForm::NonZero { graph, sign } => {
                self.add_term(graph, c * coeff_int(sign as i64));
            }
        }
    }

    pub fn from_graph(g: &DecoratedGraph) -> Self {
        let mut ch = Chain::new();
        ch.add_raw(g, coeff_int(1));
        ch
    }

    pub fn add_assign(&mut self, other: &Chain) {
        for (g, c) in other.iter() {
            self.add_term(g.clone(), c.clone());
        }
    }

    pub fn scaled(&self, c: &Coeff) -> Chain {
        if c.is_zero() {
            return Chain::new();
        }
        Chain(
            self.0
                .iter()
                .map(|(g, x)| (g.clone(), x.clone() * c.clone()))
                .collect(),
        )
    }

    pub fn minus(&self, other: &Chain) -> Chain {
        let mut out = self.clone();
        for (g, c) in other.iter() {
            out.add_term(g.clone(), -c.clone());
        }
        out
    }
}

impl FromIterator<(CanonGraph, Coeff)> for Chain {
    fn from_iter<I: IntoIterator<Item = (CanonGraph, Coeff)>>(iter: I) -> Self {
        let mut ch = Chain::new();
        for (g, c) in iter {
            ch.add_term(g, c);
        }
        ch
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn addition_cancels() {
        let g = DecoratedGraph::new(
            Family::Plain,
            1,
            vec![],
            vec![(0, 0), (0, 2), (0, 4)],
        );
        let mut ch = Chain::from_graph(&g);
        assert_eq!(ch.len(), 1);
        let other = ch.clone().scaled(&coeff_int(-1));
        ch.add_assign(&other);
        assert!(ch.is_zero());
    }

    #[test]
    fn zero_graphs_are_dropped() {
        let g = DecoratedGraph::new(
            Family::Plain,
            2,
            vec![(0, 1), (0, 1)],
            vec![(0, 0), (1, 2)],
        );
        let ch = Chain::from_graph(&g);
        assert!(ch.is_zero());
    }
}
