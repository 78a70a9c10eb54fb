//! An explicit collapse `ϑ : D^α(ω^{ω^α}) → ω^{ω^α}` for the dilator
//! `D^α(X) = 1 + (1+α) × X`, and the order-type map on `OT⁰_n` it induces.
//!
//! With `Z = ω^{ω^α}`:
//!
//! * `ϑ(0) = 0` and `ϑ(0, γ) = γ + 1`;
//! * for `β = 1 + e`, write `γ = ω^{ω^{e+1}}·ζ + ν` with `ν < ω^{ω^{e+1}}`
//!   and put `ϑ(β, γ) = ω^{ω^{e+1}}·ζ + ω^{ω^e}·(1 + ν)`.
//!
//! The value does not depend on `α`; `α` only bounds the admissible `β`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::bh::{transport, FixedPoint, OtDerivative};
use crate::cnf::CnfOrdinal;
use crate::dilator::{CodedDilator, Dn};
use crate::error::TermError;
use crate::ot::{DnElem, OtTerm};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DAlphaElem<X> {
    Bottom,
    Pair(CnfOrdinal, X),
}

impl<X> DAlphaElem<X> {
    pub fn map<Y>(self, f: impl FnOnce(X) -> Y) -> DAlphaElem<Y> {
        match self {
            DAlphaElem::Bottom => DAlphaElem::Bottom,
            DAlphaElem::Pair(b, x) => DAlphaElem::Pair(b, f(x)),
        }
    }
}

/// `ω^{ω^α}`.
pub fn collapse_bound(alpha: &CnfOrdinal) -> CnfOrdinal {
    CnfOrdinal::omega_tower(2, alpha)
}

/// `1 + α`, the bound on the first component.
pub fn index_bound(alpha: &CnfOrdinal) -> CnfOrdinal {
    CnfOrdinal::one().add(alpha)
}

/// The collapse on a pair, without range checks.
pub fn collapse(beta: &CnfOrdinal, gamma: &CnfOrdinal) -> CnfOrdinal {
    let one = CnfOrdinal::one();
    if beta.is_zero() {
        return gamma.add(&one);
    }
    let e = one.left_sub(beta).expect("beta >= 1");
    let block = CnfOrdinal::omega_pow(e.add(&one));
    let (zeta, nu) = gamma.div_omega_pow(&block);
    let low = one.add(&nu).omega_pow_mul(&CnfOrdinal::omega_pow(e));
    zeta.omega_pow_mul(&block).add(&low)
}

/// `ϑ` on a `D^α` element whose position has been resolved to an ordinal.
pub fn collapse_alpha(alpha: &CnfOrdinal, d: &DAlphaElem<CnfOrdinal>) -> Result<CnfOrdinal, TermError> {
    match d {
        DAlphaElem::Bottom => Ok(CnfOrdinal::zero()),
        DAlphaElem::Pair(beta, gamma) => {
            if *beta >= index_bound(alpha) {
                return Err(TermError::Domain("collapse index above 1+alpha"));
            }
            if *gamma >= collapse_bound(alpha) {
                return Err(TermError::Domain("collapse argument above the carrier"));
            }
            Ok(collapse(beta, gamma))
        }
    }
}

/// The unique `d` with `collapse(d) = xi`.
pub fn collapse_inverse(xi: &CnfOrdinal) -> DAlphaElem<CnfOrdinal> {
    let one = CnfOrdinal::one();
    let Some(last) = xi.last_exponent() else {
        return DAlphaElem::Bottom;
    };
    let exps = xi.exponents();
    if last.is_zero() {
        let gamma = CnfOrdinal::from_exponents(exps[..exps.len() - 1].to_vec()).expect("prefix of a normal form");
        return DAlphaElem::Pair(CnfOrdinal::zero(), gamma);
    }
    let e = last.lead().expect("positive exponent").clone();
    let block = CnfOrdinal::omega_pow(e.add(&one));
    let (zeta, rest) = xi.div_omega_pow(&block);
    let (rho, zero) = rest.div_omega_pow(&CnfOrdinal::omega_pow(e.clone()));
    debug_assert!(zero.is_zero());
    let nu = one.left_sub(&rho).expect("rho >= 1");
    DAlphaElem::Pair(one.add(&e), zeta.omega_pow_mul(&block).add(&nu))
}

/// All ordinals of symbol weight at most `max_weight`, by weight.
pub fn ordinals_up_to_weight(max_weight: usize) -> Vec<CnfOrdinal> {
    // by_weight[w] = ordinals of weight exactly w; weight = 1 + sum of exponent weights.
    let mut by_weight: Vec<Vec<CnfOrdinal>> = vec![Vec::new(); max_weight + 1];
    for w in 1..=max_weight {
        let mut out = Vec::new();
        // Exponent lists of total weight w - 1, weakly decreasing.
        let mut stack: Vec<(Vec<CnfOrdinal>, usize)> = vec![(Vec::new(), w - 1)];
        while let Some((exps, left)) = stack.pop() {
            if left == 0 {
                out.push(CnfOrdinal::from_exponents(exps).expect("decreasing"));
                continue;
            }
            for (ew, layer) in by_weight.iter().enumerate().take(left + 1).skip(1) {
                for e in layer {
                    if exps.last().is_none_or(|l| l >= e) {
                        let mut next = exps.clone();
                        next.push(e.clone());
                        stack.push((next, left - ew));
                    }
                }
            }
        }
        out.sort();
        by_weight[w] = out;
    }
    by_weight.into_iter().flatten().collect()
}

/// `D^α` on finite chains.
#[derive(Clone, Debug)]
pub struct DAlpha {
    pub alpha: CnfOrdinal,
}

impl CodedDilator for DAlpha {
    type Elem = DAlphaElem<usize>;

    fn contains(&self, m: usize, e: &DAlphaElem<usize>) -> bool {
        match e {
            DAlphaElem::Bottom => true,
            DAlphaElem::Pair(b, p) => *b < index_bound(&self.alpha) && *p < m,
        }
    }

    fn compare(&self, _: usize, a: &DAlphaElem<usize>, b: &DAlphaElem<usize>) -> Ordering {
        match (a, b) {
            (DAlphaElem::Bottom, DAlphaElem::Bottom) => Ordering::Equal,
            (DAlphaElem::Bottom, _) => Ordering::Less,
            (_, DAlphaElem::Bottom) => Ordering::Greater,
            (DAlphaElem::Pair(x, p), DAlphaElem::Pair(y, q)) => x.cmp(y).then(p.cmp(q)),
        }
    }

    fn supp(&self, e: &DAlphaElem<usize>) -> Vec<usize> {
        match e {
            DAlphaElem::Bottom => Vec::new(),
            DAlphaElem::Pair(_, p) => vec![*p],
        }
    }

    fn relabel(&self, e: &DAlphaElem<usize>, f: &dyn Fn(usize) -> usize) -> DAlphaElem<usize> {
        e.clone().map(f)
    }

    fn weight(&self, e: &DAlphaElem<usize>) -> usize {
        match e {
            DAlphaElem::Bottom => 0,
            DAlphaElem::Pair(b, _) => b.weight(),
        }
    }

    fn full_support(&self, m: usize, max_weight: usize) -> Vec<DAlphaElem<usize>> {
        match m {
            0 => vec![DAlphaElem::Bottom],
            1 => {
                let bound = index_bound(&self.alpha);
                ordinals_up_to_weight(max_weight).into_iter().filter(|b| *b < bound).map(|b| DAlphaElem::Pair(b, 0)).collect()
            }
            _ => Vec::new(),
        }
    }

    fn max_support(&self) -> usize {
        1
    }
}

/// `(ω^{ω^α}, ϑ)` as a fixed point of `D^α` over the empty order.
#[derive(Clone, Debug)]
pub struct OrdinalCollapse {
    pub alpha: CnfOrdinal,
}

impl FixedPoint<DAlpha> for OrdinalCollapse {
    type Base = u32;
    type Carrier = CnfOrdinal;

    fn compare(&self, a: &CnfOrdinal, b: &CnfOrdinal) -> Ordering {
        a.cmp(b)
    }

    fn iota(&self, _: &u32) -> Result<CnfOrdinal, TermError> {
        Err(TermError::LeafOutsideBase)
    }

    fn theta(&self, base: &[CnfOrdinal], elem: &DAlphaElem<usize>) -> Result<CnfOrdinal, TermError> {
        let d = match elem {
            DAlphaElem::Bottom => DAlphaElem::Bottom,
            DAlphaElem::Pair(b, p) => DAlphaElem::Pair(b.clone(), base.get(*p).ok_or(TermError::Domain("collapse"))?.clone()),
        };
        collapse_alpha(&self.alpha, &d)
    }
}

/// The collapse read as a fixed point of `D_n`, through `OT⁰_n ≅ 1 + α_n`
/// given by [`rank_ot`] at level `n`.
#[derive(Clone, Copy, Debug)]
pub struct OtCollapse {
    pub n: u32,
}

impl FixedPoint<Dn> for OtCollapse {
    type Base = u32;
    type Carrier = CnfOrdinal;

    fn compare(&self, a: &CnfOrdinal, b: &CnfOrdinal) -> Ordering {
        a.cmp(b)
    }

    fn iota(&self, _: &u32) -> Result<CnfOrdinal, TermError> {
        Err(TermError::LeafOutsideBase)
    }

    fn theta(&self, base: &[CnfOrdinal], elem: &DnElem<usize>) -> Result<CnfOrdinal, TermError> {
        match elem {
            DnElem::Bottom => Ok(CnfOrdinal::zero()),
            DnElem::Pair(a, p) => {
                let beta = rank_ot(self.n, a)?;
                let gamma = base.get(*p).ok_or(TermError::Domain("collapse"))?;
                Ok(collapse(&beta, gamma))
            }
        }
    }
}

/// The order type rank of `s` in `OT⁰_n`: `OT⁰_0 = {Z} ↦ 0` and at `n + 1`
/// the initial embedding into the ordinal collapse.
pub fn rank_ot(n: u32, s: &OtTerm) -> Result<CnfOrdinal, TermError> {
    if n == 0 {
        return if s.is_zero() { Ok(CnfOrdinal::zero()) } else { Err(TermError::Domain("OT⁰_0 has only Z")) };
    }
    transport(&OtDerivative { n: n - 1 }, &OtCollapse { n: n - 1 }, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::ot_terms;

    fn w() -> CnfOrdinal {
        CnfOrdinal::omega()
    }

    #[test]
    fn successor_and_limit_values() {
        let one = CnfOrdinal::one();
        assert_eq!(collapse(&CnfOrdinal::zero(), &one), CnfOrdinal::nat(2));
        // ϑ(1, 0) = ω, ϑ(1, ω^ω) = ω^ω + ω
        assert_eq!(collapse(&one, &CnfOrdinal::zero()), w());
        let ww = CnfOrdinal::omega_pow(w());
        assert_eq!(collapse(&one, &ww), ww.add(&w()));
    }

    #[test]
    fn inverse_round_trips() {
        for x in ordinals_up_to_weight(7) {
            if let DAlphaElem::Pair(b, g) = collapse_inverse(&x) {
                assert_eq!(collapse(&b, &g), x, "{x}");
            } else {
                assert!(x.is_zero());
            }
        }
    }

    #[test]
    fn rank_on_first_level_is_size() {
        for s in ot_terms(1, true, 5) {
            assert_eq!(rank_ot(1, &s).unwrap(), CnfOrdinal::nat(s.size()));
        }
    }

    #[test]
    fn weights_enumerate_small_ordinals() {
        let xs = ordinals_up_to_weight(3);
        assert!(xs.contains(&CnfOrdinal::nat(2)) && xs.contains(&w()));
        assert_eq!(xs.len(), 4);
    }
}
