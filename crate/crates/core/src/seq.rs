//! Unary collapsing terms `x̄` and `θ_i s`.
//!
//! A term is a chain of collapsing indices ending in a base leaf. It is
//! stored flat: `indices[0]` is the outermost index, the leaf sits below the
//! last index. All subterms are suffixes, which the comparators exploit.

use alloc::vec::Vec;
use core::fmt::Debug;

use crate::error::TermError;
use crate::order::Carrier;

pub type Index = u32;

/// `θ_{i_1} θ_{i_2} ... θ_{i_k} x̄`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeqTerm<E> {
    indices: Vec<Index>,
    leaf: E,
}

/// Borrowed subterm: a suffix of some term's index chain plus its leaf.
#[derive(Debug, PartialEq, Eq)]
pub struct SeqView<'a, E> {
    pub indices: &'a [Index],
    pub leaf: &'a E,
}

impl<E> Clone for SeqView<'_, E> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<E> Copy for SeqView<'_, E> {}

/// Degree of a term with the given index chain: `-1` for a leaf.
pub fn degree_of(indices: &[Index]) -> i32 {
    indices.first().map_or(-1, |&i| i as i32)
}

/// Position of the first index `<= i` at or after `from`, else `indices.len()`.
pub(crate) fn k_offset(indices: &[Index], from: usize, i: i32) -> usize {
    let mut p = from;
    while p < indices.len() && indices[p] as i32 > i {
        p += 1;
    }
    p
}

/// Checks the index constraint `i >= max(deg(sub) - 1, 0)` along a chain.
/// Returns the first offending position.
pub fn check_chain(indices: &[Index]) -> Result<(), (usize, TermError)> {
    for p in 0..indices.len() {
        let sub = degree_of(&indices[p + 1..]);
        if (indices[p] as i32) < sub - 1 {
            return Err((p, TermError::IndexConstraint { index: indices[p], sub_degree: sub }));
        }
    }
    Ok(())
}

impl<E> SeqTerm<E> {
    pub fn base(leaf: E) -> Self {
        SeqTerm { indices: Vec::new(), leaf }
    }

    /// `θ_i s`, enforcing `i >= max(deg(s) - 1, 0)`.
    pub fn theta(i: Index, s: SeqTerm<E>) -> Result<Self, TermError> {
        let d = s.deg();
        if (i as i32) < d - 1 {
            return Err(TermError::IndexConstraint { index: i, sub_degree: d });
        }
        let mut indices = Vec::with_capacity(s.indices.len() + 1);
        indices.push(i);
        indices.extend_from_slice(&s.indices);
        Ok(SeqTerm { indices, leaf: s.leaf })
    }

    /// Builds `θ_{indices[0]} ... θ_{indices[k-1]} leaf`.
    pub fn from_parts(indices: Vec<Index>, leaf: E) -> Result<Self, TermError> {
        check_chain(&indices).map_err(|(_, e)| e)?;
        Ok(SeqTerm { indices, leaf })
    }

    pub fn indices(&self) -> &[Index] {
        &self.indices
    }

    pub fn leaf(&self) -> &E {
        &self.leaf
    }

    pub fn into_leaf(self) -> E {
        self.leaf
    }

    pub fn into_parts(self) -> (Vec<Index>, E) {
        (self.indices, self.leaf)
    }

    pub fn view(&self) -> SeqView<'_, E> {
        SeqView { indices: &self.indices, leaf: &self.leaf }
    }

    pub fn is_base(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn deg(&self) -> i32 {
        degree_of(&self.indices)
    }

    pub fn height(&self) -> usize {
        self.indices.len()
    }

    pub fn max_index(&self) -> Option<Index> {
        self.indices.iter().copied().max()
    }

    /// Outer index and immediate subterm of a `θ` term.
    pub fn split(&self) -> Option<(Index, SeqView<'_, E>)> {
        let (&i, rest) = self.indices.split_first()?;
        Some((i, SeqView { indices: rest, leaf: &self.leaf }))
    }

    /// The leaf reached by `k_{-1}`.
    pub fn k_base(&self) -> &E {
        &self.leaf
    }

    /// Replaces the leaf. Index structure (and so validity) is unchanged.
    pub fn map_leaf<F>(self, f: impl FnOnce(E) -> F) -> SeqTerm<F> {
        SeqTerm { indices: self.indices, leaf: f(self.leaf) }
    }

    pub fn try_map_leaf<F, Er>(self, f: impl FnOnce(E) -> Result<F, Er>) -> Result<SeqTerm<F>, Er> {
        Ok(SeqTerm { indices: self.indices, leaf: f(self.leaf)? })
    }
}

impl<E: Clone> SeqTerm<E> {
    /// `k_i(s)`: the first subterm along the chain with outer index `<= i`,
    /// or the leaf.
    pub fn k(&self, i: i32) -> SeqTerm<E> {
        self.view().k(i).to_term()
    }

    pub fn sub(&self) -> Option<SeqTerm<E>> {
        self.split().map(|(_, v)| v.to_term())
    }
}

impl<'a, E> SeqView<'a, E> {
    pub fn deg(&self) -> i32 {
        degree_of(self.indices)
    }

    pub fn height(&self) -> usize {
        self.indices.len()
    }

    pub fn k(&self, i: i32) -> SeqView<'a, E> {
        let p = k_offset(self.indices, 0, i);
        SeqView { indices: &self.indices[p..], leaf: self.leaf }
    }

    pub fn split(&self) -> Option<(Index, SeqView<'a, E>)> {
        let (&i, rest) = self.indices.split_first()?;
        Some((i, SeqView { indices: rest, leaf: self.leaf }))
    }
}

impl<E: Clone> SeqView<'_, E> {
    pub fn to_term(&self) -> SeqTerm<E> {
        SeqTerm { indices: self.indices.to_vec(), leaf: self.leaf.clone() }
    }
}

impl SeqTerm<u32> {
    /// The sequence `<i_1, ..., i_k>` of a term over the one-element order.
    pub fn to_sequence(&self) -> Vec<Index> {
        self.indices.clone()
    }

    /// Inverse of [`SeqTerm::to_sequence`]; every entry must be below `n`.
    pub fn from_sequence(seq: &[Index], n: u32) -> Result<Self, TermError> {
        if let Some(&bad) = seq.iter().find(|&&i| i >= n) {
            return Err(TermError::IndexOutOfRange { index: bad, bound: n });
        }
        SeqTerm::from_parts(seq.to_vec(), 0)
    }
}

/// `T`/`S` differ only in the order placed on the terms; the `0` variants
/// restrict to degree at most zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    T,
    T0,
    S,
    S0,
}

impl Family {
    pub fn restricted(self) -> bool {
        matches!(self, Family::T0 | Family::S0)
    }

    pub fn is_linear(self) -> bool {
        matches!(self, Family::T | Family::T0)
    }
}

/// A family together with its index bound `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct System {
    pub family: Family,
    pub n: u32,
}

impl System {
    pub fn new(family: Family, n: u32) -> Self {
        System { family, n }
    }

    /// Index structure only: bound, chain constraint, degree restriction.
    pub fn check_indices(&self, indices: &[Index]) -> Result<(), TermError> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.n) {
            return Err(TermError::IndexOutOfRange { index: bad, bound: self.n });
        }
        check_chain(indices).map_err(|(_, e)| e)?;
        let d = degree_of(indices);
        if self.family.restricted() && d > 0 {
            return Err(TermError::DegreeTooLarge { degree: d });
        }
        Ok(())
    }

    pub fn check<B: Carrier>(&self, s: &SeqTerm<B::Elem>, base: &B) -> Result<(), TermError> {
        self.check_indices(&s.indices)?;
        if !base.contains(&s.leaf) {
            return Err(TermError::LeafOutsideBase);
        }
        Ok(())
    }

    pub fn validate<B: Carrier>(&self, s: &SeqTerm<B::Elem>, base: &B) -> bool {
        self.check(s, base).is_ok()
    }
}

/// The terms of a system used as the base order of another system.
///
/// Viewed as a [`LinearOrder`](crate::order::LinearOrder) the terms carry the
/// linear comparator, viewed as a [`PartialOrder`](crate::order::PartialOrder)
/// they carry the gap order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Terms<B> {
    pub system: System,
    pub base: B,
}

impl<B> Terms<B> {
    pub fn new(system: System, base: B) -> Self {
        Terms { system, base }
    }
}

impl<B: Carrier> Carrier for Terms<B> {
    type Elem = SeqTerm<B::Elem>;
    fn contains(&self, x: &Self::Elem) -> bool {
        self.system.validate(x, &self.base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::One;

    fn seq(ix: &[u32]) -> SeqTerm<u32> {
        SeqTerm::from_parts(ix.to_vec(), 0).unwrap()
    }

    #[test]
    fn degree_and_height() {
        assert_eq!(SeqTerm::base(7u32).deg(), -1);
        assert_eq!(seq(&[0]).deg(), 0);
        assert_eq!(seq(&[2, 1]).deg(), 2);
        assert_eq!(seq(&[1, 0, 1, 1]).height(), 4);
    }

    #[test]
    fn k_examples() {
        assert_eq!(seq(&[1, 1]).k(1), seq(&[1, 1]));
        assert_eq!(seq(&[1, 0]).k(0), seq(&[0]));
        assert_eq!(seq(&[0]).k(-1), SeqTerm::base(0));
        assert_eq!(*seq(&[3, 0]).k_base(), 0);
    }

    #[test]
    fn chain_constraint() {
        assert!(SeqTerm::from_parts(alloc::vec![0, 2], 0u32).is_err());
        assert!(SeqTerm::theta(0, seq(&[1])).is_ok());
        assert!(SeqTerm::theta(0, seq(&[2])).is_err());
    }

    #[test]
    fn validation() {
        let t01 = System::new(Family::T0, 1);
        let t02 = System::new(Family::T0, 2);
        assert!(t01.validate(&seq(&[0]), &One));
        assert!(!t02.validate(&seq(&[1, 0]), &One));
        assert!(!System::new(Family::T, 3).validate(&SeqTerm::base(1u32), &One));
    }

    #[test]
    fn sequences() {
        assert_eq!(seq(&[0, 1]).to_sequence(), alloc::vec![0, 1]);
        assert_eq!(SeqTerm::from_sequence(&[], 1).unwrap(), SeqTerm::base(0));
        assert!(SeqTerm::from_sequence(&[2, 0], 2).is_err());
    }
}
