//! Coded dilators: functors on finite linear orders given by their action.
//!
//! A finite linear order is represented by its size `m`; its elements are
//! the positions `0..m`. An element of `D(m)` mentions positions, and
//! renaming along an embedding `f : m → m'` relabels them.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Debug;
use core::hash::Hash;

use crate::enumerate::{ot_terms, seq_terms};
use crate::linear::lin_cmp;
use crate::order::Chain;
use crate::ot::{dn_cmp, DnElem};
use crate::seq::{Family, SeqTerm, System};

pub trait CodedDilator {
    type Elem: Clone + Eq + Hash + Debug;

    /// Is `e` an element of `D(m)`?
    fn contains(&self, m: usize, e: &Self::Elem) -> bool;

    /// The order of `D(m)`.
    fn compare(&self, m: usize, a: &Self::Elem, b: &Self::Elem) -> Ordering;

    /// Positions mentioned by `e`, strictly increasing.
    fn supp(&self, e: &Self::Elem) -> Vec<usize>;

    /// Replace every position `p` by `f(p)`.
    fn relabel(&self, e: &Self::Elem, f: &dyn Fn(usize) -> usize) -> Self::Elem;

    /// Size measure used to bound enumerations.
    fn weight(&self, e: &Self::Elem) -> usize;

    /// Elements of `D(m)` with support `0..m` and weight at most `max_weight`.
    fn full_support(&self, m: usize, max_weight: usize) -> Vec<Self::Elem>;

    /// Largest support size of any element.
    fn max_support(&self) -> usize;

    /// `D(f)` for a strictly increasing `f`, given as its table.
    fn rename(&self, f: &[usize], e: &Self::Elem) -> Self::Elem {
        self.relabel(e, &|p| f[p])
    }

    /// `e = D(ι_a)(e_0)` with `supp(e_0)` the whole of `a`.
    fn normal_form(&self, e: &Self::Elem) -> (Vec<usize>, Self::Elem) {
        let a = self.supp(e);
        let e0 = self.relabel(e, &|p| a.binary_search(&p).expect("position in support"));
        (a, e0)
    }
}

/// `D(X) = X`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Identity;

impl CodedDilator for Identity {
    type Elem = usize;

    fn contains(&self, m: usize, e: &usize) -> bool {
        *e < m
    }

    fn compare(&self, _: usize, a: &usize, b: &usize) -> Ordering {
        a.cmp(b)
    }

    fn supp(&self, e: &usize) -> Vec<usize> {
        vec![*e]
    }

    fn relabel(&self, e: &usize, f: &dyn Fn(usize) -> usize) -> usize {
        f(*e)
    }

    fn weight(&self, _: &usize) -> usize {
        1
    }

    fn full_support(&self, m: usize, max_weight: usize) -> Vec<usize> {
        if m == 1 && max_weight >= 1 {
            vec![0]
        } else {
            Vec::new()
        }
    }

    fn max_support(&self) -> usize {
        1
    }
}

/// `T⁰_n` acting on finite chains, with the linear comparator.
#[derive(Clone, Copy, Debug)]
pub struct TZero {
    pub n: u32,
}

impl TZero {
    pub fn system(&self) -> System {
        System::new(Family::T0, self.n)
    }
}

impl CodedDilator for TZero {
    type Elem = SeqTerm<u32>;

    fn contains(&self, m: usize, e: &SeqTerm<u32>) -> bool {
        self.system().validate(e, &Chain(m as u32))
    }

    fn compare(&self, m: usize, a: &SeqTerm<u32>, b: &SeqTerm<u32>) -> Ordering {
        lin_cmp(&Chain(m as u32), a, b)
    }

    fn supp(&self, e: &SeqTerm<u32>) -> Vec<usize> {
        vec![*e.k_base() as usize]
    }

    fn relabel(&self, e: &SeqTerm<u32>, f: &dyn Fn(usize) -> usize) -> SeqTerm<u32> {
        e.clone().map_leaf(|x| f(x as usize) as u32)
    }

    /// One for the collapsing node plus the height.
    fn weight(&self, e: &SeqTerm<u32>) -> usize {
        1 + e.height()
    }

    fn full_support(&self, m: usize, max_weight: usize) -> Vec<SeqTerm<u32>> {
        if m != 1 || max_weight == 0 {
            return Vec::new();
        }
        seq_terms(self.system(), &[0u32], max_weight - 1)
    }

    fn max_support(&self) -> usize {
        1
    }
}

/// `D_n(X) = 1 + OT⁰_n × X`.
#[derive(Clone, Copy, Debug)]
pub struct Dn {
    pub n: u32,
}

impl CodedDilator for Dn {
    type Elem = DnElem<usize>;

    fn contains(&self, m: usize, e: &DnElem<usize>) -> bool {
        match e {
            DnElem::Bottom => true,
            DnElem::Pair(s, x) => s.validate(self.n, true) && *x < m,
        }
    }

    fn compare(&self, m: usize, a: &DnElem<usize>, b: &DnElem<usize>) -> Ordering {
        let a = a.clone().map(|x| x as u32);
        let b = b.clone().map(|x| x as u32);
        dn_cmp(&a, &b, &Chain(m as u32))
    }

    fn supp(&self, e: &DnElem<usize>) -> Vec<usize> {
        e.label().into_iter().copied().collect()
    }

    fn relabel(&self, e: &DnElem<usize>, f: &dyn Fn(usize) -> usize) -> DnElem<usize> {
        e.clone().map(f)
    }

    /// Zero for the bottom element, else one plus the size of the term.
    fn weight(&self, e: &DnElem<usize>) -> usize {
        match e {
            DnElem::Bottom => 0,
            DnElem::Pair(s, _) => 1 + s.size(),
        }
    }

    fn full_support(&self, m: usize, max_weight: usize) -> Vec<DnElem<usize>> {
        match m {
            0 => vec![DnElem::Bottom],
            1 if max_weight >= 1 => ot_terms(self.n, true, max_weight - 1).into_iter().map(|s| DnElem::Pair(s, 0)).collect(),
            _ => Vec::new(),
        }
    }

    fn max_support(&self) -> usize {
        1
    }
}

/// Pairs `(x, x')` with `x < x'`, ordered lexicographically: the dilator
/// whose derivative is the binary tree system `ϑD(X)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct IncreasingPairs;

impl CodedDilator for IncreasingPairs {
    type Elem = (usize, usize);

    fn contains(&self, m: usize, e: &(usize, usize)) -> bool {
        e.0 < e.1 && e.1 < m
    }

    fn compare(&self, _: usize, a: &(usize, usize), b: &(usize, usize)) -> Ordering {
        a.cmp(b)
    }

    fn supp(&self, e: &(usize, usize)) -> Vec<usize> {
        vec![e.0, e.1]
    }

    fn relabel(&self, e: &(usize, usize), f: &dyn Fn(usize) -> usize) -> (usize, usize) {
        (f(e.0), f(e.1))
    }

    fn weight(&self, _: &(usize, usize)) -> usize {
        1
    }

    fn full_support(&self, m: usize, max_weight: usize) -> Vec<(usize, usize)> {
        if m == 2 && max_weight >= 1 {
            vec![(0, 1)]
        } else {
            Vec::new()
        }
    }

    fn max_support(&self) -> usize {
        2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ot::OtTerm;

    #[test]
    fn normal_forms_strip_unused_positions() {
        let d = Dn { n: 1 };
        let e = DnElem::Pair(OtTerm::zero(), 1);
        assert!(d.contains(2, &e));
        let (a, e0) = d.normal_form(&e);
        assert_eq!(a, vec![1]);
        assert_eq!(e0, DnElem::Pair(OtTerm::zero(), 0));
        assert_eq!(d.normal_form(&DnElem::Bottom), (Vec::new(), DnElem::Bottom));
    }

    #[test]
    fn rename_is_natural_for_supports() {
        let d = TZero { n: 2 };
        let s = SeqTerm::from_parts(vec![0, 1], 1u32).unwrap();
        let f = [2, 5];
        let r = d.rename(&f, &s);
        assert_eq!(d.supp(&r), vec![5]);
        assert_eq!(d.compare(3, &s, &s), Ordering::Equal);
    }

    #[test]
    fn pair_dilator() {
        let d = IncreasingPairs;
        assert!(d.contains(3, &(0, 2)));
        assert!(!d.contains(3, &(2, 2)));
        assert_eq!(d.normal_form(&(1, 4)), (vec![1, 4], (0, 1)));
    }
}
