//! The syntactic Bachmann-Howard fixed point `ϑD(X)` of a coded dilator,
//! fixed point targets, and the embedding out of the initial one.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Debug;

use crate::dilator::{CodedDilator, Dn, TZero};
use crate::error::TermError;
use crate::linear::{lin_cmp, theta_lin, theta_lin_inverse};
use crate::order::LinearOrder;
use crate::ot::{ot_cmp, theta_ot, theta_ot_inverse, DnElem, OtTerm};
use crate::seq::{SeqTerm, System};

/// `x̄` or `ϑ⟨a, σ⟩` with `a` sorted and `σ ∈ D(|a|)` of full support.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BhTerm<E, X> {
    Base(X),
    Coll(Arc<CollNode<E, X>>),
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct CollNode<E, X> {
    support: Vec<BhTerm<E, X>>,
    elem: E,
    length: usize,
}

impl<E, X> BhTerm<E, X> {
    /// Wraps without any checks; see [`Syntactic::coll`].
    fn coll_raw(support: Vec<BhTerm<E, X>>, elem: E) -> Self {
        let length = 1 + support.iter().map(|r| 2 * r.length()).sum::<usize>();
        BhTerm::Coll(Arc::new(CollNode { support, elem, length }))
    }

    /// `l(x̄) = 0`, `l(ϑ⟨a, σ⟩) = 1 + Σ_{r ∈ a} 2 l(r)`.
    pub fn length(&self) -> usize {
        match self {
            BhTerm::Base(_) => 0,
            BhTerm::Coll(node) => node.length,
        }
    }

    /// Nesting depth of collapsing nodes.
    pub fn height(&self) -> usize {
        match self {
            BhTerm::Base(_) => 0,
            BhTerm::Coll(node) => 1 + node.support.iter().map(|r| r.height()).max().unwrap_or(0),
        }
    }

    pub fn parts(&self) -> Option<(&[BhTerm<E, X>], &E)> {
        match self {
            BhTerm::Base(_) => None,
            BhTerm::Coll(node) => Some((&node.support, &node.elem)),
        }
    }
}

/// `ϑD(X)` for a coded dilator `D` over a linear order `X`.
#[derive(Clone, Debug)]
pub struct Syntactic<D, B> {
    pub dilator: D,
    pub base: B,
}

pub type SynTerm<D, B> = BhTerm<<D as CodedDilator>::Elem, <B as crate::order::Carrier>::Elem>;

impl<D: CodedDilator, B: LinearOrder> Syntactic<D, B> {
    pub fn new(dilator: D, base: B) -> Self {
        Syntactic { dilator, base }
    }

    /// `s < t`.
    pub fn less(&self, s: &SynTerm<D, B>, t: &SynTerm<D, B>) -> bool {
        match (s, t) {
            (BhTerm::Base(x), BhTerm::Base(y)) => self.base.less(x, y),
            (BhTerm::Base(_), BhTerm::Coll(_)) => true,
            (BhTerm::Coll(_), BhTerm::Base(_)) => false,
            (BhTerm::Coll(sn), BhTerm::Coll(tn)) => {
                if tn.support.iter().any(|t2| s == t2 || self.less(s, t2)) {
                    return true;
                }
                if !sn.support.iter().all(|s2| self.less(s2, t)) {
                    return false;
                }
                let (union, fa, fb) = self.merge(&sn.support, &tn.support);
                let sigma = self.dilator.rename(&fa, &sn.elem);
                let tau = self.dilator.rename(&fb, &tn.elem);
                self.dilator.compare(union.len(), &sigma, &tau) == Ordering::Less
            }
        }
    }

    pub fn compare(&self, s: &SynTerm<D, B>, t: &SynTerm<D, B>) -> Ordering {
        if s == t {
            Ordering::Equal
        } else if self.less(s, t) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Sorted union of two sorted lists with the position tables of both.
    pub fn merge(&self, a: &[SynTerm<D, B>], b: &[SynTerm<D, B>]) -> (Vec<SynTerm<D, B>>, Vec<usize>, Vec<usize>) {
        let mut union = Vec::with_capacity(a.len() + b.len());
        let (mut fa, mut fb) = (Vec::with_capacity(a.len()), Vec::with_capacity(b.len()));
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => self.compare(x, y),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            let pos = union.len();
            match ord {
                Ordering::Less => {
                    union.push(a[i].clone());
                    fa.push(pos);
                    i += 1;
                }
                Ordering::Greater => {
                    union.push(b[j].clone());
                    fb.push(pos);
                    j += 1;
                }
                Ordering::Equal => {
                    union.push(a[i].clone());
                    fa.push(pos);
                    fb.push(pos);
                    i += 1;
                    j += 1;
                }
            }
        }
        (union, fa, fb)
    }

    pub fn is_sorted(&self, a: &[SynTerm<D, B>]) -> bool {
        a.windows(2).all(|w| self.less(&w[0], &w[1]))
    }

    /// `ϑ⟨a, σ⟩`, checking sortedness and full support.
    pub fn coll(&self, support: Vec<SynTerm<D, B>>, elem: D::Elem) -> Result<SynTerm<D, B>, TermError> {
        if !self.is_sorted(&support) {
            return Err(TermError::Domain("unsorted support"));
        }
        let m = support.len();
        if !self.dilator.contains(m, &elem) || self.dilator.supp(&elem) != (0..m).collect::<Vec<_>>() {
            return Err(TermError::Domain("support must be full"));
        }
        Ok(BhTerm::coll_raw(support, elem))
    }

    pub fn validate(&self, s: &SynTerm<D, B>) -> bool {
        match s {
            BhTerm::Base(x) => self.base.contains(x),
            BhTerm::Coll(node) => {
                let m = node.support.len();
                node.support.iter().all(|r| self.validate(r))
                    && self.is_sorted(&node.support)
                    && self.dilator.contains(m, &node.elem)
                    && self.dilator.supp(&node.elem) == (0..m).collect::<Vec<_>>()
            }
        }
    }

    /// All leaves, without repetition.
    pub fn supp(&self, s: &SynTerm<D, B>) -> Vec<B::Elem> {
        fn go<E, X: Clone + PartialEq>(s: &BhTerm<E, X>, out: &mut Vec<X>) {
            match s {
                BhTerm::Base(x) => {
                    if !out.contains(x) {
                        out.push(x.clone());
                    }
                }
                BhTerm::Coll(node) => node.support.iter().for_each(|r| go(r, out)),
            }
        }
        let mut out = Vec::new();
        go(s, &mut out);
        out
    }
}

/// `ϑD(f)`: rename leaves along a base embedding. The supports keep their
/// order because `f` is an embedding; callers may recheck with
/// [`Syntactic::is_sorted`].
pub fn bh_rename<E: Clone, X, Y>(s: &BhTerm<E, X>, f: &dyn Fn(&X) -> Y) -> BhTerm<E, Y> {
    match s {
        BhTerm::Base(x) => BhTerm::Base(f(x)),
        BhTerm::Coll(node) => BhTerm::coll_raw(node.support.iter().map(|r| bh_rename(r, f)).collect(), node.elem.clone()),
    }
}

/// A Bachmann-Howard fixed point `(Z, ι, ϑ)` of `D` over some base.
/// Elements of `D(Z)` are passed as `D(ι_base)(elem)` for a strictly
/// increasing list `base` of carrier elements.
pub trait FixedPoint<D: CodedDilator> {
    type Base: Clone + Debug;
    type Carrier: Clone + PartialEq + Debug;

    fn compare(&self, a: &Self::Carrier, b: &Self::Carrier) -> Ordering;
    fn iota(&self, x: &Self::Base) -> Result<Self::Carrier, TermError>;
    fn theta(&self, base: &[Self::Carrier], elem: &D::Elem) -> Result<Self::Carrier, TermError>;
}

/// Splitting of a fixed point element as `ι(x)` or `ϑ` of a normal form.
#[derive(Clone, Debug, PartialEq)]
pub enum Decomposed<X, C, E> {
    Iota(X),
    Theta(Vec<C>, E),
}

/// A fixed point whose carrier is the union of the ranges of `ι` and `ϑ`,
/// with a height that falls through supports.
pub type Decomposition<F, D> = Decomposed<<F as FixedPoint<D>>::Base, <F as FixedPoint<D>>::Carrier, <D as CodedDilator>::Elem>;

pub trait Decompose<D: CodedDilator>: FixedPoint<D> {
    fn decompose(&self, z: &Self::Carrier) -> Result<Decomposition<Self, D>, TermError>;
    fn height(&self, z: &Self::Carrier) -> usize;
}

impl<D: CodedDilator, B: LinearOrder> FixedPoint<D> for Syntactic<D, B>
where
    B::Elem: Debug,
{
    type Base = B::Elem;
    type Carrier = SynTerm<D, B>;

    fn compare(&self, a: &Self::Carrier, b: &Self::Carrier) -> Ordering {
        Syntactic::compare(self, a, b)
    }

    fn iota(&self, x: &B::Elem) -> Result<Self::Carrier, TermError> {
        if !self.base.contains(x) {
            return Err(TermError::LeafOutsideBase);
        }
        Ok(BhTerm::Base(x.clone()))
    }

    /// Normalizes, then wraps the support.
    fn theta(&self, base: &[Self::Carrier], elem: &D::Elem) -> Result<Self::Carrier, TermError> {
        let (a0, e0) = self.dilator.normal_form(elem);
        let support = a0.iter().map(|&p| base[p].clone()).collect();
        self.coll(support, e0)
    }
}

impl<D: CodedDilator, B: LinearOrder> Decompose<D> for Syntactic<D, B>
where
    B::Elem: Debug,
{
    fn decompose(&self, z: &Self::Carrier) -> Result<Decomposed<B::Elem, Self::Carrier, D::Elem>, TermError> {
        Ok(match z {
            BhTerm::Base(x) => Decomposed::Iota(x.clone()),
            BhTerm::Coll(node) => Decomposed::Theta(node.support.clone(), node.elem.clone()),
        })
    }

    fn height(&self, z: &Self::Carrier) -> usize {
        z.length()
    }
}

/// The embedding determined by the recursion `f(ι x) = ι'(x)`,
/// `f(ϑ(D(ι_a) σ_0)) = ϑ'(D(f ∘ ι_a) σ_0)`. The source must satisfy the
/// exhaustion criterion; a non-increasing image of a support is reported.
pub fn transport<D, S, T>(source: &S, target: &T, z: &S::Carrier) -> Result<T::Carrier, TermError>
where
    D: CodedDilator,
    S: Decompose<D>,
    T: FixedPoint<D, Base = S::Base>,
{
    match source.decompose(z)? {
        Decomposed::Iota(x) => target.iota(&x),
        Decomposed::Theta(base, elem) => {
            let images = base.iter().map(|r| transport(source, target, r)).collect::<Result<Vec<_>, _>>()?;
            if images.windows(2).any(|w| target.compare(&w[0], &w[1]) != Ordering::Less) {
                return Err(TermError::Contract("image of a support is not increasing"));
            }
            target.theta(&images, &elem)
        }
    }
}

/// The embedding of the syntactic fixed point into `target`.
pub fn initial_embed<D, B, T>(source: &Syntactic<D, B>, target: &T, s: &SynTerm<D, B>) -> Result<T::Carrier, TermError>
where
    D: CodedDilator,
    B: LinearOrder,
    B::Elem: Debug,
    T: FixedPoint<D, Base = B::Elem>,
{
    transport(source, target, s)
}

/// `(T⁰_{n+1}(X), ιⁿ, ϑⁿ)` as a fixed point of `T⁰_n`.
#[derive(Clone, Debug)]
pub struct LinDerivative<B> {
    pub n: u32,
    pub base: B,
}

impl<B: LinearOrder> LinDerivative<B> {
    pub fn carrier_system(&self) -> System {
        System::new(crate::seq::Family::T0, self.n + 1)
    }
}

impl<B: LinearOrder> FixedPoint<TZero> for LinDerivative<B>
where
    B::Elem: Debug,
{
    type Base = B::Elem;
    type Carrier = SeqTerm<B::Elem>;

    fn compare(&self, a: &Self::Carrier, b: &Self::Carrier) -> Ordering {
        lin_cmp(&self.base, a, b)
    }

    fn iota(&self, x: &B::Elem) -> Result<Self::Carrier, TermError> {
        Ok(crate::linear::iota_lin(x.clone()))
    }

    fn theta(&self, base: &[Self::Carrier], elem: &SeqTerm<u32>) -> Result<Self::Carrier, TermError> {
        let leaf = base.get(*elem.leaf() as usize).ok_or(TermError::Domain("theta_lin"))?.clone();
        theta_lin(self.n, &elem.clone().map_leaf(|_| leaf))
    }
}

impl<B: LinearOrder> Decompose<TZero> for LinDerivative<B>
where
    B::Elem: Debug,
{
    fn decompose(&self, z: &Self::Carrier) -> Result<Decomposed<B::Elem, Self::Carrier, SeqTerm<u32>>, TermError> {
        Ok(match theta_lin_inverse(self.n, z)? {
            Err(x) => Decomposed::Iota(x),
            Ok(s) => {
                let (ix, r) = s.into_parts();
                Decomposed::Theta(alloc::vec![r], SeqTerm::from_parts(ix, 0)?)
            }
        })
    }

    fn height(&self, z: &Self::Carrier) -> usize {
        z.height()
    }
}

/// `(OT⁰_{n+1}, ϑ_n)` as a fixed point of `D_n` over the empty order.
#[derive(Clone, Copy, Debug)]
pub struct OtDerivative {
    pub n: u32,
}

impl FixedPoint<Dn> for OtDerivative {
    type Base = u32;
    type Carrier = OtTerm;

    fn compare(&self, a: &OtTerm, b: &OtTerm) -> Ordering {
        ot_cmp(a, b)
    }

    fn iota(&self, _: &u32) -> Result<OtTerm, TermError> {
        Err(TermError::LeafOutsideBase)
    }

    fn theta(&self, base: &[OtTerm], elem: &DnElem<usize>) -> Result<OtTerm, TermError> {
        let d = match elem {
            DnElem::Bottom => DnElem::Bottom,
            DnElem::Pair(s, p) => DnElem::Pair(s.clone(), base.get(*p).ok_or(TermError::Domain("theta_ot"))?.clone()),
        };
        theta_ot(self.n, &d)
    }
}

impl Decompose<Dn> for OtDerivative {
    fn decompose(&self, z: &OtTerm) -> Result<Decomposed<u32, OtTerm, DnElem<usize>>, TermError> {
        if !z.validate(self.n + 1, true) {
            return Err(TermError::Domain("OT⁰ decomposition"));
        }
        Ok(match theta_ot_inverse(z)? {
            DnElem::Bottom => Decomposed::Theta(Vec::new(), DnElem::Bottom),
            DnElem::Pair(a, t) => Decomposed::Theta(alloc::vec![t], DnElem::Pair(a, 0)),
        })
    }

    fn height(&self, z: &OtTerm) -> usize {
        z.size()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dilator::Identity;
    use crate::order::{Empty, One};

    #[test]
    fn base_below_collapse() {
        let syn = Syntactic::new(TZero { n: 0 }, One);
        let b: SynTerm<TZero, One> = BhTerm::Base(0);
        let c = syn.coll(alloc::vec![b.clone()], SeqTerm::base(0)).unwrap();
        assert_eq!(syn.compare(&b, &c), Ordering::Less);
        assert_eq!(syn.compare(&c, &b), Ordering::Greater);
    }

    #[test]
    fn identity_over_empty_has_no_terms() {
        let d = Identity;
        assert!(d.full_support(0, 5).is_empty());
        let syn = Syntactic::new(d, Empty);
        assert!(syn.iota(&0).is_err());
    }

    #[test]
    fn theta_normalizes_redundant_base() {
        let syn = Syntactic::new(Dn { n: 1 }, Empty);
        let z = syn.coll(Vec::new(), DnElem::Bottom).unwrap();
        let one = syn.coll(alloc::vec![z.clone()], DnElem::Pair(OtTerm::zero(), 0)).unwrap();
        let t = FixedPoint::theta(&syn, &[z.clone(), one.clone()], &DnElem::Pair(OtTerm::zero(), 1)).unwrap();
        let (support, _) = t.parts().unwrap();
        assert_eq!(support, &[one][..]);
    }

    #[test]
    fn initial_embed_examples() {
        let syn = Syntactic::new(TZero { n: 0 }, One);
        let target = LinDerivative { n: 0, base: One };
        let b: SynTerm<TZero, One> = BhTerm::Base(0);
        assert_eq!(initial_embed(&syn, &target, &b).unwrap(), SeqTerm::base(0));
        let c = syn.coll(alloc::vec![b], SeqTerm::base(0)).unwrap();
        assert_eq!(initial_embed(&syn, &target, &c).unwrap(), SeqTerm::from_parts(alloc::vec![0], 0).unwrap());

        let syn = Syntactic::new(Dn { n: 0 }, Empty);
        let z = syn.coll(Vec::new(), DnElem::Bottom).unwrap();
        let one = syn.coll(alloc::vec![z], DnElem::Pair(OtTerm::zero(), 0)).unwrap();
        let expect = OtTerm::theta(0, OtTerm::zero(), OtTerm::zero()).unwrap();
        assert_eq!(initial_embed(&syn, &OtDerivative { n: 0 }, &one).unwrap(), expect);
    }

    #[test]
    fn supports_and_rename() {
        let syn = Syntactic::new(TZero { n: 1 }, crate::order::Chain(3));
        let b: SynTerm<TZero, crate::order::Chain> = BhTerm::Base(1);
        assert_eq!(syn.supp(&b), alloc::vec![1]);
        let c = syn.coll(alloc::vec![b], SeqTerm::base(0)).unwrap();
        let r = bh_rename(&c, &|x: &u32| x + 1);
        assert_eq!(syn.supp(&r), alloc::vec![2]);
        let syn0 = Syntactic::new(Dn { n: 1 }, Empty);
        let z = syn0.coll(Vec::new(), DnElem::Bottom).unwrap();
        assert!(syn0.supp(&z).is_empty());
    }
}
