//! Binary trees with leaves in `X`: the embeddability order, its linear
//! refinement, and the carriers `TW(X)` and `ϑD(X)` they cut out.

use alloc::sync::Arc;
use core::cmp::Ordering;

use crate::dilator::IncreasingPairs;
use crate::error::TermError;
use crate::kruskal::{BaseLinearization, KruskalFixedPoint};
use crate::order::{LinearOrder, PartialOrder};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BinTree<X> {
    Leaf(X),
    Node(Arc<(BinTree<X>, BinTree<X>)>),
}

impl<X> BinTree<X> {
    pub fn node(l: BinTree<X>, r: BinTree<X>) -> Self {
        BinTree::Node(Arc::new((l, r)))
    }

    pub fn children(&self) -> Option<(&BinTree<X>, &BinTree<X>)> {
        match self {
            BinTree::Leaf(_) => None,
            BinTree::Node(p) => Some((&p.0, &p.1)),
        }
    }

    pub fn depth(&self) -> usize {
        match self.children() {
            None => 0,
            Some((l, r)) => 1 + l.depth().max(r.depth()),
        }
    }
}

/// Tree embeddability: `s <= ∘(t, t')` if `s` embeds into a child, or both
/// children embed componentwise.
pub fn btree_w_leq<B: PartialOrder>(s: &BinTree<B::Elem>, t: &BinTree<B::Elem>, base: &B) -> bool {
    match (s, t.children()) {
        (BinTree::Leaf(x), None) => matches!(t, BinTree::Leaf(y) if base.leq(x, y)),
        (_, None) => false,
        (_, Some((t1, t2))) => {
            btree_w_leq(s, t1, base) || btree_w_leq(s, t2, base) || s.children().is_some_and(|(s1, s2)| btree_w_leq(s1, t1, base) && btree_w_leq(s2, t2, base))
        }
    }
}

/// The linear refinement: leaves by `X`, leaves below nodes, and for nodes
/// `∘(s,s') < ∘(t,t')` iff `(s,s')` is lexicographically below `(t,t')` with
/// `s, s' < ∘(t,t')`, or `∘(s,s') <= t` or `<= t'`.
pub fn btree_d_less<B: LinearOrder>(s: &BinTree<B::Elem>, t: &BinTree<B::Elem>, base: &B) -> bool {
    match (s.children(), t.children()) {
        (None, None) => match (s, t) {
            (BinTree::Leaf(x), BinTree::Leaf(y)) => base.less(x, y),
            _ => unreachable!(),
        },
        (None, Some(_)) => true,
        (Some(_), None) => false,
        (Some((s1, s2)), Some((t1, t2))) => {
            let leq = |a: &BinTree<B::Elem>, b: &BinTree<B::Elem>| a == b || btree_d_less(a, b, base);
            if leq(s, t1) || leq(s, t2) {
                return true;
            }
            let lex = btree_d_less(s1, t1, base) || (s1 == t1 && btree_d_less(s2, t2, base));
            lex && btree_d_less(s1, t, base) && btree_d_less(s2, t, base)
        }
    }
}

pub fn btree_d_cmp<B: LinearOrder>(s: &BinTree<B::Elem>, t: &BinTree<B::Elem>, base: &B) -> Ordering {
    if s == t {
        Ordering::Equal
    } else if btree_d_less(s, t, base) {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// `∘(s, s') ∈ TW(X)` requires `s' ≰ s` at every node.
pub fn btree_in_tw<B: PartialOrder>(s: &BinTree<B::Elem>, base: &B) -> bool {
    match s.children() {
        None => matches!(s, BinTree::Leaf(x) if base.contains(x)),
        Some((l, r)) => btree_in_tw(l, base) && btree_in_tw(r, base) && !btree_w_leq(r, l, base),
    }
}

/// `∘(s, s') ∈ ϑD(X)` requires `s < s'` at every node.
pub fn btree_in_theta_d<B: LinearOrder>(s: &BinTree<B::Elem>, base: &B) -> bool {
    match s.children() {
        None => matches!(s, BinTree::Leaf(x) if base.contains(x)),
        Some((l, r)) => btree_in_theta_d(l, base) && btree_in_theta_d(r, base) && btree_d_less(l, r, base),
    }
}

/// `(TW(X), ι, ∘)` as a Kruskal fixed point of `W(X) = {(x, x') : x' ≰ x}`.
#[derive(Clone, Debug)]
pub struct TreeKruskal<B> {
    pub base: B,
}

impl<B: PartialOrder> KruskalFixedPoint for TreeKruskal<B> {
    type Base = B::Elem;
    type Carrier = BinTree<B::Elem>;
    type WElem = (usize, usize);

    fn leq(&self, a: &Self::Carrier, b: &Self::Carrier) -> bool {
        btree_w_leq(a, b, &self.base)
    }

    fn iota(&self, x: &B::Elem) -> Result<Self::Carrier, TermError> {
        Ok(BinTree::Leaf(x.clone()))
    }

    fn kappa(&self, base: &[Self::Carrier], w: &(usize, usize)) -> Result<Self::Carrier, TermError> {
        let get = |p: usize| base.get(p).cloned().ok_or(TermError::Domain("tree kappa"));
        let (l, r) = (get(w.0)?, get(w.1)?);
        if btree_w_leq(&r, &l, &self.base) {
            return Err(TermError::Contract("right child embeds into left child"));
        }
        Ok(BinTree::node(l, r))
    }
}

/// On a finite chain, `x < x'` implies `x' ≰ x`: the inclusion `D ⇒ W`.
#[derive(Clone, Copy, Debug, Default)]
pub struct PairInclusion;

impl BaseLinearization<IncreasingPairs> for PairInclusion {
    type WElem = (usize, usize);

    fn apply(&self, _: usize, e: &(usize, usize)) -> Result<(usize, usize), TermError> {
        Ok(*e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::Chain;

    fn leaf(x: u32) -> BinTree<u32> {
        BinTree::Leaf(x)
    }

    #[test]
    fn embeddability() {
        let c = Chain(3);
        assert!(btree_w_leq(&leaf(0), &BinTree::node(leaf(0), leaf(1)), &c));
        assert!(!btree_w_leq(&leaf(2), &BinTree::node(leaf(0), leaf(1)), &c));
    }

    #[test]
    fn witness_is_in_tw_only() {
        let c = Chain(3);
        let w = BinTree::node(BinTree::node(leaf(0), leaf(1)), leaf(2));
        assert!(btree_in_tw(&w, &c));
        assert!(!btree_in_theta_d(&w, &c));
        assert!(btree_in_tw(&leaf(1), &c) && btree_in_theta_d(&leaf(1), &c));
    }
}
