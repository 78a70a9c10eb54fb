//! Lifting a base linearization `ν : D ⇒ W` to the quasi embedding
//! `ν⁺ : ϑD(X) → TW(X)` into a Kruskal fixed point, and its instances.

use alloc::vec::Vec;
use core::fmt::Debug;

use crate::bh::{transport, BhTerm, LinDerivative, OtDerivative, Syntactic};
use crate::dilator::{CodedDilator, Dn, TZero};
use crate::error::TermError;
use crate::gap::{gap_leq, kappa_gap, kappa_n, wn_leq, WnElem};
use crate::order::{Chain, Empty, One, PartialOrder};
use crate::ot::{DnElem, OtTerm};
use crate::seq::SeqTerm;

/// A Kruskal fixed point `(Z, ι, κ)` of a PO-dilator `W`. Elements of
/// `W(Z)` are passed as `W(ι_base)(w)` for a list of carrier elements.
pub trait KruskalFixedPoint {
    type Base: Clone;
    type Carrier: Clone + PartialEq + Debug;
    type WElem;

    fn leq(&self, a: &Self::Carrier, b: &Self::Carrier) -> bool;
    fn iota(&self, x: &Self::Base) -> Result<Self::Carrier, TermError>;
    fn kappa(&self, base: &[Self::Carrier], w: &Self::WElem) -> Result<Self::Carrier, TermError>;
}

/// `ν_a : D(a) → W(a)` on finite chains `a = 0..m`.
pub trait BaseLinearization<D: CodedDilator> {
    type WElem;
    fn apply(&self, m: usize, e: &D::Elem) -> Result<Self::WElem, TermError>;
}

/// `ν⁺(x̄) = ι(x)`, `ν⁺(ϑ⟨a, σ⟩) = κ(W(ν⁺ ∘ ι_a)(ν_a(σ)))`.
pub fn nu_plus<D, X, N, K>(s: &BhTerm<D::Elem, X>, nu: &N, target: &K) -> Result<K::Carrier, TermError>
where
    D: CodedDilator,
    N: BaseLinearization<D>,
    K: KruskalFixedPoint<Base = X, WElem = N::WElem>,
{
    match s {
        BhTerm::Base(x) => target.iota(x),
        BhTerm::Coll(_) => {
            let (support, elem) = s.parts().expect("collapsing node");
            let images = support.iter().map(|r| nu_plus(r, nu, target)).collect::<Result<Vec<_>, _>>()?;
            let w = nu.apply(support.len(), elem)?;
            target.kappa(&images, &w)
        }
    }
}

/// `(S⁰_{n+1}(X), ι, κⁿ)`, the Kruskal derivative of `S⁰_n`.
#[derive(Clone, Debug)]
pub struct GapDerivative<B> {
    pub n: u32,
    pub base: B,
}

impl<B: PartialOrder> KruskalFixedPoint for GapDerivative<B> {
    type Base = B::Elem;
    type Carrier = SeqTerm<B::Elem>;
    type WElem = SeqTerm<u32>;

    fn leq(&self, a: &Self::Carrier, b: &Self::Carrier) -> bool {
        gap_leq(&self.base, a, b)
    }

    fn iota(&self, x: &B::Elem) -> Result<Self::Carrier, TermError> {
        Ok(SeqTerm::base(x.clone()))
    }

    fn kappa(&self, base: &[Self::Carrier], w: &SeqTerm<u32>) -> Result<Self::Carrier, TermError> {
        let leaf = base.get(*w.leaf() as usize).ok_or(TermError::Domain("kappa"))?.clone();
        kappa_gap(self.n, &w.clone().map_leaf(|_| leaf))
    }
}

/// The linearization `νⁿ : T⁰_n ⇒ S⁰_n` obtained by iterating the lift:
/// `ν⁰` is the identity and `ν^{n+1}` is `(νⁿ)⁺` read through the
/// isomorphism `ϑ(T⁰_n)(X) ≅ T⁰_{n+1}(X)`.
#[derive(Clone, Copy, Debug)]
pub struct NuSeq {
    pub n: u32,
}

impl BaseLinearization<TZero> for NuSeq {
    type WElem = SeqTerm<u32>;

    fn apply(&self, m: usize, e: &SeqTerm<u32>) -> Result<SeqTerm<u32>, TermError> {
        nu_seq(self.n, m, e)
    }
}

/// `νⁿ` on `T⁰_n(m)` for the chain `m`.
pub fn nu_seq(n: u32, m: usize, u: &SeqTerm<u32>) -> Result<SeqTerm<u32>, TermError> {
    if n == 0 {
        return Ok(u.clone());
    }
    let chain = Chain(m as u32);
    let syntactic = Syntactic::new(TZero { n: n - 1 }, chain);
    let source = LinDerivative { n: n - 1, base: chain };
    let b = transport(&source, &syntactic, u)?;
    nu_plus(&b, &NuSeq { n: n - 1 }, &GapDerivative { n: n - 1, base: chain })
}

/// `(S⁰_{n+1}(1), κ_n)`, the Kruskal fixed point of `W_n` over the empty order.
#[derive(Clone, Copy, Debug)]
pub struct WnDerivative {
    pub n: u32,
}

impl KruskalFixedPoint for WnDerivative {
    type Base = u32;
    type Carrier = SeqTerm<u32>;
    type WElem = WnElem<usize>;

    fn leq(&self, a: &SeqTerm<u32>, b: &SeqTerm<u32>) -> bool {
        gap_leq(&One, a, b)
    }

    fn iota(&self, _: &u32) -> Result<SeqTerm<u32>, TermError> {
        Err(TermError::LeafOutsideBase)
    }

    fn kappa(&self, base: &[SeqTerm<u32>], w: &WnElem<usize>) -> Result<SeqTerm<u32>, TermError> {
        let w = match w {
            WnElem::Bottom => WnElem::Bottom,
            WnElem::Pair(s, p) => WnElem::Pair(s.clone(), base.get(*p).ok_or(TermError::Domain("kappa_n"))?.clone()),
        };
        kappa_n(self.n, &w)
    }
}

/// `ν(0) = 0`, `ν(s, x) = (f_n(s), x)` with `f_n` computed generically.
#[derive(Clone, Copy, Debug)]
pub struct NuOt {
    pub n: u32,
}

impl BaseLinearization<Dn> for NuOt {
    type WElem = WnElem<usize>;

    fn apply(&self, _: usize, e: &DnElem<usize>) -> Result<WnElem<usize>, TermError> {
        Ok(match e {
            DnElem::Bottom => WnElem::Bottom,
            DnElem::Pair(s, p) => WnElem::Pair(f_lin_generic(self.n, s)?, *p),
        })
    }
}

/// `f_n : OT⁰_n → S⁰_n(1)` as `f_{n+1} = ν⁺` over the fixed points of
/// `D_n` and `W_n`, independent of the direct recursion in
/// [`crate::ot::f_lin`].
pub fn f_lin_generic(n: u32, s: &OtTerm) -> Result<SeqTerm<u32>, TermError> {
    if n == 0 {
        return if s.is_zero() { Ok(SeqTerm::base(0)) } else { Err(TermError::Domain("f_lin")) };
    }
    let syntactic = Syntactic::new(Dn { n: n - 1 }, Empty);
    let b = transport(&OtDerivative { n: n - 1 }, &syntactic, s)?;
    nu_plus(&b, &NuOt { n: n - 1 }, &WnDerivative { n: n - 1 })
}

/// `W_n` ordered over a finite poset, for support checks.
pub fn wn_leq_po<B: PartialOrder>(a: &WnElem<B::Elem>, b: &WnElem<B::Elem>, base: &B) -> bool {
    wn_leq(a, b, base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ot::f_lin;

    #[test]
    fn nu_is_identity_on_small_terms() {
        for ix in [&[][..], &[0], &[0, 0], &[0, 1], &[0, 1, 1], &[0, 1, 0]] {
            let s = SeqTerm::from_parts(ix.to_vec(), 0).unwrap();
            assert_eq!(nu_seq(2, 1, &s).unwrap(), s);
        }
    }

    #[test]
    fn generic_linearization_matches_direct() {
        let z = OtTerm::zero();
        let a = OtTerm::theta(0, z.clone(), z.clone()).unwrap();
        let b = OtTerm::theta(0, z.clone(), a.clone()).unwrap();
        for s in [z, a, b] {
            assert_eq!(f_lin_generic(1, &s).unwrap(), f_lin(1, &s).unwrap());
        }
    }
}
