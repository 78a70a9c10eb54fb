//! Base orders: the parameter `X` of every term system.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Debug;
use core::hash::Hash;

/// A set of elements used as the leaves of terms.
pub trait Carrier {
    type Elem: Clone + Eq + Hash + Debug;
    fn contains(&self, x: &Self::Elem) -> bool;
}

/// A carrier with a strict total order.
pub trait LinearOrder: Carrier {
    fn compare(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;

    fn less(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.compare(a, b) == Ordering::Less
    }
}

/// A carrier with a (reflexive) partial order.
pub trait PartialOrder: Carrier {
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
}

impl<B: Carrier + ?Sized> Carrier for &B {
    type Elem = B::Elem;
    fn contains(&self, x: &Self::Elem) -> bool {
        (**self).contains(x)
    }
}

impl<B: LinearOrder + ?Sized> LinearOrder for &B {
    fn compare(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        (**self).compare(a, b)
    }
}

impl<B: PartialOrder + ?Sized> PartialOrder for &B {
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        (**self).leq(a, b)
    }
}

/// The empty order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Empty;

/// The one-element order `{0}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct One;

/// The chain `0 < 1 < ... < len - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chain(pub u32);

impl Carrier for Empty {
    type Elem = u32;
    fn contains(&self, _: &u32) -> bool {
        false
    }
}

impl LinearOrder for Empty {
    fn compare(&self, a: &u32, b: &u32) -> Ordering {
        a.cmp(b)
    }
}

impl PartialOrder for Empty {
    fn leq(&self, a: &u32, b: &u32) -> bool {
        a == b
    }
}

impl Carrier for One {
    type Elem = u32;
    fn contains(&self, x: &u32) -> bool {
        *x == 0
    }
}

impl LinearOrder for One {
    fn compare(&self, a: &u32, b: &u32) -> Ordering {
        a.cmp(b)
    }
}

impl PartialOrder for One {
    fn leq(&self, a: &u32, b: &u32) -> bool {
        a == b
    }
}

impl Carrier for Chain {
    type Elem = u32;
    fn contains(&self, x: &u32) -> bool {
        *x < self.0
    }
}

impl LinearOrder for Chain {
    fn compare(&self, a: &u32, b: &u32) -> Ordering {
        a.cmp(b)
    }
}

impl PartialOrder for Chain {
    fn leq(&self, a: &u32, b: &u32) -> bool {
        a <= b
    }
}

/// A finite poset on `0..size` given by its full relation matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    size: u32,
    rel: Vec<bool>,
}

impl Poset {
    /// Builds a poset from a row-major `size * size` matrix, checking the
    /// partial order axioms.
    pub fn from_matrix(size: u32, rel: Vec<bool>) -> Option<Poset> {
        let k = size as usize;
        if rel.len() != k * k {
            return None;
        }
        let p = Poset { size, rel };
        for a in 0..size {
            if !p.leq(&a, &a) {
                return None;
            }
            for b in 0..size {
                if a != b && p.leq(&a, &b) && p.leq(&b, &a) {
                    return None;
                }
                for c in 0..size {
                    if p.leq(&a, &b) && p.leq(&b, &c) && !p.leq(&a, &c) {
                        return None;
                    }
                }
            }
        }
        Some(p)
    }

    /// The least partial order containing the given pairs `a <= b`.
    /// Returns `None` when the pairs force a cycle.
    pub fn generated(size: u32, pairs: &[(u32, u32)]) -> Option<Poset> {
        let k = size as usize;
        let mut rel = alloc::vec![false; k * k];
        for a in 0..k {
            rel[a * k + a] = true;
        }
        for &(a, b) in pairs {
            if a >= size || b >= size {
                return None;
            }
            rel[a as usize * k + b as usize] = true;
        }
        for m in 0..k {
            for a in 0..k {
                if rel[a * k + m] {
                    for b in 0..k {
                        if rel[m * k + b] {
                            rel[a * k + b] = true;
                        }
                    }
                }
            }
        }
        Poset::from_matrix(size, rel)
    }

    pub fn chain(size: u32) -> Poset {
        let k = size as usize;
        let mut rel = alloc::vec![false; k * k];
        for a in 0..k {
            for b in a..k {
                rel[a * k + b] = true;
            }
        }
        Poset { size, rel }
    }

    pub fn antichain(size: u32) -> Poset {
        Poset::generated(size, &[]).expect("antichain is a poset")
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn is_linear(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.leq(&a, &b) || self.leq(&b, &a)))
    }
}

impl Carrier for Poset {
    type Elem = u32;
    fn contains(&self, x: &u32) -> bool {
        *x < self.size
    }
}

impl PartialOrder for Poset {
    fn leq(&self, a: &u32, b: &u32) -> bool {
        *a < self.size && *b < self.size && self.rel[(*a * self.size + *b) as usize]
    }
}

/// Checks that `f` (given as a table on `0..from.size()`) reflects the order:
/// `f(a) <= f(b)` implies `a <= b`.
pub fn is_quasi_embedding(from: &Poset, to: &Poset, f: &[u32]) -> bool {
    f.len() == from.size() as usize
        && f.iter().all(|y| to.contains(y))
        && (0..from.size()).all(|a| (0..from.size()).all(|b| !to.leq(&f[a as usize], &f[b as usize]) || from.leq(&a, &b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_closes_transitively() {
        let p = Poset::generated(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(&0, &2));
        assert!(!p.leq(&2, &0));
        assert!(Poset::generated(2, &[(0, 1), (1, 0)]).is_none());
    }

    #[test]
    fn quasi_embeddings_reflect() {
        let anti = Poset::antichain(2);
        let chain = Poset::chain(2);
        assert!(is_quasi_embedding(&chain, &anti, &[0, 1]));
        assert!(!is_quasi_embedding(&anti, &chain, &[0, 1]));
        assert!(is_quasi_embedding(&chain, &chain, &[0, 1]));
        assert!(is_quasi_embedding(&anti, &anti, &[1, 0]));
    }
}
