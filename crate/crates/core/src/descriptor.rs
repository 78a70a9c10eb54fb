//! Base orders chosen at run time, including orders whose elements are
//! themselves terms of an inner system.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::gap::gap_leq;
use crate::linear::{lin_cmp, lin_leq};
use crate::order::{Carrier, LinearOrder, PartialOrder, Poset};
use crate::seq::{SeqTerm, System};

/// An element of a [`BaseOrder`]: a key of a finite order, or a nested term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Leaf {
    Key(u32),
    Term(Box<SeqTerm<Leaf>>),
}

impl Leaf {
    pub fn key(&self) -> Option<u32> {
        match self {
            Leaf::Key(k) => Some(*k),
            Leaf::Term(_) => None,
        }
    }

    pub fn term(&self) -> Option<&SeqTerm<Leaf>> {
        match self {
            Leaf::Key(_) => None,
            Leaf::Term(t) => Some(t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseOrder {
    Empty,
    One,
    Chain(u32),
    Poset(Poset),
    Terms(Box<SystemId>),
}

/// A term system together with its base order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemId {
    pub system: System,
    pub base: BaseOrder,
}

impl SystemId {
    pub fn new(system: System, base: BaseOrder) -> Self {
        SystemId { system, base }
    }

    pub fn validate(&self, s: &SeqTerm<Leaf>) -> bool {
        self.system.validate(s, &self.base)
    }

    /// Nesting depth of term bases.
    pub fn depth(&self) -> usize {
        match &self.base {
            BaseOrder::Terms(inner) => 1 + inner.depth(),
            _ => 0,
        }
    }
}

impl BaseOrder {
    fn key_count(&self) -> Option<u32> {
        match self {
            BaseOrder::Empty => Some(0),
            BaseOrder::One => Some(1),
            BaseOrder::Chain(k) => Some(*k),
            BaseOrder::Poset(p) => Some(p.size()),
            BaseOrder::Terms(_) => None,
        }
    }

    /// The leaves of a finite base, in key order.
    pub fn finite_elements(&self) -> Option<Vec<Leaf>> {
        self.key_count().map(|k| (0..k).map(Leaf::Key).collect())
    }
}

impl Carrier for BaseOrder {
    type Elem = Leaf;

    fn contains(&self, x: &Leaf) -> bool {
        match (self, x) {
            (BaseOrder::Terms(id), Leaf::Term(t)) => id.validate(t),
            (BaseOrder::Terms(_), Leaf::Key(_)) => false,
            (_, Leaf::Key(k)) => *k < self.key_count().unwrap_or(0),
            (_, Leaf::Term(_)) => false,
        }
    }
}

impl LinearOrder for BaseOrder {
    /// Keys compare numerically; a poset base is only linear when it is a chain.
    fn compare(&self, a: &Leaf, b: &Leaf) -> Ordering {
        match (self, a, b) {
            (BaseOrder::Terms(id), Leaf::Term(s), Leaf::Term(t)) => lin_cmp(&id.base, s, t),
            (BaseOrder::Poset(p), Leaf::Key(x), Leaf::Key(y)) if x != y => {
                if p.leq(x, y) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            (_, Leaf::Key(x), Leaf::Key(y)) => x.cmp(y),
            (_, Leaf::Key(_), Leaf::Term(_)) => Ordering::Less,
            (_, Leaf::Term(_), Leaf::Key(_)) => Ordering::Greater,
            (_, Leaf::Term(s), Leaf::Term(t)) => lin_cmp(self, s, t),
        }
    }
}

impl PartialOrder for BaseOrder {
    fn leq(&self, a: &Leaf, b: &Leaf) -> bool {
        match (self, a, b) {
            (BaseOrder::Terms(id), Leaf::Term(s), Leaf::Term(t)) => {
                if id.system.family.is_linear() {
                    lin_leq(&id.base, s, t)
                } else {
                    gap_leq(&id.base, s, t)
                }
            }
            (BaseOrder::Poset(p), Leaf::Key(x), Leaf::Key(y)) => p.leq(x, y),
            (BaseOrder::Empty, _, _) => false,
            (_, Leaf::Key(x), Leaf::Key(y)) => x <= y,
            _ => false,
        }
    }
}

/// Strip `Key` leaves to plain keys.
pub fn to_keys(s: SeqTerm<Leaf>) -> Option<SeqTerm<u32>> {
    s.try_map_leaf(|l| l.key().ok_or(())).ok()
}

pub fn from_keys(s: SeqTerm<u32>) -> SeqTerm<Leaf> {
    s.map_leaf(Leaf::Key)
}

/// A term whose leaf is a keyed term, as a term over terms.
pub fn to_nested(s: SeqTerm<Leaf>) -> Option<SeqTerm<SeqTerm<u32>>> {
    s.try_map_leaf(|l| match l {
        Leaf::Term(t) => to_keys(*t).ok_or(()),
        Leaf::Key(_) => Err(()),
    })
    .ok()
}

pub fn from_nested(s: SeqTerm<SeqTerm<u32>>) -> SeqTerm<Leaf> {
    s.map_leaf(|t| Leaf::Term(Box::new(from_keys(t))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::Family;

    #[test]
    fn nested_membership() {
        let inner = SystemId::new(System::new(Family::T0, 1), BaseOrder::One);
        let outer = BaseOrder::Terms(Box::new(inner));
        let ok = SeqTerm::from_parts(alloc::vec![0], Leaf::Key(0)).unwrap();
        let bad = SeqTerm::from_parts(alloc::vec![1], Leaf::Key(0)).unwrap();
        assert!(outer.contains(&Leaf::Term(Box::new(ok.clone()))));
        assert!(!outer.contains(&Leaf::Term(Box::new(bad))));
        assert!(!outer.contains(&Leaf::Key(0)));
        let base = Leaf::Term(Box::new(SeqTerm::base(Leaf::Key(0))));
        assert_eq!(outer.compare(&base, &Leaf::Term(Box::new(ok))), Ordering::Less);
    }
}
