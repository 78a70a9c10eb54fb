//! The gap order on unary terms, the Kruskal-derivative maps `σ`, `κ`, `ι`,
//! and the dilator `W_n(X) = 1 + S⁰_n(1) × X` with `π_n`, `κ_n`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::TermError;
use crate::linear::{sigma_lin, sigma_lin_inverse};
use crate::order::PartialOrder;
use crate::seq::{k_offset, Index, SeqTerm, SeqView, Terms};

struct GapCmp<'a, B: PartialOrder> {
    base: &'a B,
    s: &'a [Index],
    sl: &'a B::Elem,
    t: &'a [Index],
    tl: &'a B::Elem,
    width: usize,
    memo: Vec<u8>,
}

impl<'a, B: PartialOrder> GapCmp<'a, B> {
    fn leq(&mut self, p: usize, q: usize) -> bool {
        let key = p * self.width + q;
        match self.memo[key] {
            1 => return false,
            2 => return true,
            _ => {}
        }
        let r = if p == self.s.len() && q == self.t.len() {
            self.base.leq(self.sl, self.tl)
        } else if q == self.t.len() {
            false
        } else {
            let j = self.t[q];
            // s <= θ_j t' when s <= k_j(t'), or when s = θ_j s' with s' <= t'
            self.leq(p, k_offset(self.t, q + 1, j as i32)) || (p < self.s.len() && self.s[p] == j && self.leq(p + 1, q + 1))
        };
        self.memo[key] = if r { 2 } else { 1 };
        r
    }
}

/// The gap order `s <= t`.
pub fn gap_leq_view<B: PartialOrder>(base: &B, s: SeqView<'_, B::Elem>, t: SeqView<'_, B::Elem>) -> bool {
    let width = t.indices.len() + 1;
    GapCmp { base, s: s.indices, sl: s.leaf, t: t.indices, tl: t.leaf, width, memo: vec![0; (s.indices.len() + 1) * width] }.leq(0, 0)
}

pub fn gap_leq<B: PartialOrder>(base: &B, s: &SeqTerm<B::Elem>, t: &SeqTerm<B::Elem>) -> bool {
    gap_leq_view(base, s.view(), t.view())
}

impl<B: PartialOrder> PartialOrder for Terms<B> {
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        gap_leq(&self.base, a, b)
    }
}

/// Strong gap embeddability of sequences, by search over all increasing
/// position maps. Independent of [`gap_leq`]; used to cross-check it.
pub fn gap_embed_oracle(u: &[Index], v: &[Index]) -> bool {
    fn admissible(u: &[Index], v: &[Index], pos: &[usize]) -> bool {
        for (i, &p) in pos.iter().enumerate() {
            if v[p] != u[i] {
                return false;
            }
            let gap_start = if i == 0 { 0 } else { pos[i - 1] + 1 };
            if v[gap_start..p].iter().any(|&x| x < v[p]) {
                return false;
            }
        }
        true
    }
    fn search(u: &[Index], v: &[Index], pos: &mut Vec<usize>) -> bool {
        if pos.len() == u.len() {
            return admissible(u, v, pos);
        }
        let from = pos.last().map_or(0, |p| p + 1);
        for p in from..v.len() {
            pos.push(p);
            let found = search(u, v, pos);
            pos.pop();
            if found {
                return true;
            }
        }
        false
    }
    search(u, v, &mut Vec::with_capacity(u.len()))
}

/// `S(f)`: leaf replacement along a quasi embedding.
pub fn s_rename<E, F>(f: impl FnOnce(E) -> F, s: SeqTerm<E>) -> SeqTerm<F> {
    s.map_leaf(f)
}

/// `supp(s) = {k_base(s)}`.
pub fn s_supp<E: Clone>(s: &SeqTerm<E>) -> Vec<E> {
    vec![s.k_base().clone()]
}

/// Same syntax map as [`sigma_lin`]; here read over the gap orders.
pub fn sigma_gap<E: Clone>(n: u32, s: &SeqTerm<SeqTerm<E>>) -> Result<SeqTerm<E>, TermError> {
    sigma_lin(n, s)
}

/// `κⁿ(s) = θ_0 σⁿ(s)` for `s ∈ S⁰_n(S⁰_{n+1}(X))`.
pub fn kappa_gap<E: Clone>(n: u32, s: &SeqTerm<SeqTerm<E>>) -> Result<SeqTerm<E>, TermError> {
    if s.deg() > 0 {
        return Err(TermError::DegreeTooLarge { degree: s.deg() });
    }
    SeqTerm::theta(0, sigma_gap(n, s)?)
}

pub fn iota_gap<E>(x: E) -> SeqTerm<E> {
    SeqTerm::base(x)
}

/// Elements of `W_n(X) = 1 + S⁰_n(1) × X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WnElem<X> {
    Bottom,
    Pair(SeqTerm<u32>, X),
}

impl<X> WnElem<X> {
    pub fn label(&self) -> Option<&X> {
        match self {
            WnElem::Bottom => None,
            WnElem::Pair(_, x) => Some(x),
        }
    }

    pub fn map<Y>(self, f: impl FnOnce(X) -> Y) -> WnElem<Y> {
        match self {
            WnElem::Bottom => WnElem::Bottom,
            WnElem::Pair(s, x) => WnElem::Pair(s, f(x)),
        }
    }

    /// Support: the label, if any.
    pub fn supp(&self) -> Vec<&X> {
        self.label().into_iter().collect()
    }
}

/// `0` only below itself; pairs componentwise.
pub fn wn_leq<B: PartialOrder>(a: &WnElem<B::Elem>, b: &WnElem<B::Elem>, base: &B) -> bool {
    match (a, b) {
        (WnElem::Bottom, WnElem::Bottom) => true,
        (WnElem::Pair(s, x), WnElem::Pair(t, y)) => gap_leq(&crate::order::One, s, t) && base.leq(x, y),
        _ => false,
    }
}

/// `π_n(0̄, t) = t`, `π_n(θ_i s, t) = θ_{i+1} π_n(s, t)`.
pub fn pi_n(n: u32, s: &SeqTerm<u32>, t: &SeqTerm<u32>) -> Result<SeqTerm<u32>, TermError> {
    if let Some(&bad) = s.indices().iter().find(|&&i| i >= n) {
        return Err(TermError::IndexOutOfRange { index: bad, bound: n });
    }
    if *s.leaf() != 0 {
        return Err(TermError::LeafOutsideBase);
    }
    let nested = s.clone().map_leaf(|_| t.clone());
    sigma_lin(n, &nested)
}

/// `κ_n(0) = 0̄`, `κ_n(s, t) = θ_0 π_n(s, t)`.
pub fn kappa_n(n: u32, w: &WnElem<SeqTerm<u32>>) -> Result<SeqTerm<u32>, TermError> {
    match w {
        WnElem::Bottom => Ok(SeqTerm::base(0)),
        WnElem::Pair(s, t) => {
            if s.deg() > 0 {
                return Err(TermError::DegreeTooLarge { degree: s.deg() });
            }
            SeqTerm::theta(0, pi_n(n, s, t)?)
        }
    }
}

/// Inverse of [`kappa_n`] on `S⁰_{n+1}(1)`.
pub fn kappa_n_inverse(n: u32, u: &SeqTerm<u32>) -> Result<WnElem<SeqTerm<u32>>, TermError> {
    match u.split() {
        None if *u.leaf() == 0 => Ok(WnElem::Bottom),
        None => Err(TermError::LeafOutsideBase),
        Some((0, rest)) => {
            let split = sigma_lin_inverse(n, &rest.to_term())?;
            let (ix, t) = split.into_parts();
            Ok(WnElem::Pair(SeqTerm::from_parts(ix, 0)?, t))
        }
        Some(_) => Err(TermError::DegreeTooLarge { degree: u.deg() }),
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
    fn gap_examples() {
        assert!(gap_leq(&One, &SeqTerm::base(0), &seq(&[1, 0, 1])));
        assert!(gap_leq(&One, &seq(&[0]), &seq(&[0, 1, 0])));
        assert!(!gap_leq(&One, &seq(&[0, 0]), &seq(&[0, 1])));
        assert!(!gap_leq(&One, &seq(&[0, 1]), &seq(&[0, 0])));
    }

    #[test]
    fn oracle_examples() {
        assert!(gap_embed_oracle(&[0], &[1, 0]));
        assert!(!gap_embed_oracle(&[1], &[0, 1]));
        assert!(gap_embed_oracle(&[], &[2, 1, 0]));
        assert!(!gap_embed_oracle(&[0, 0], &[0, 1]));
    }

    #[test]
    fn kappa_examples() {
        let b = SeqTerm::base(SeqTerm::base(0u32));
        assert_eq!(kappa_gap(0, &b).unwrap(), seq(&[0]));
        let s = SeqTerm::from_parts(vec![0], seq(&[0])).unwrap();
        assert_eq!(sigma_gap(0, &s).unwrap(), seq(&[1, 0]));
        assert_eq!(iota_gap(4u32), SeqTerm::base(4));
    }

    #[test]
    fn wn_examples() {
        let t = seq(&[0]);
        assert!(!wn_leq(&WnElem::Bottom, &WnElem::Pair(seq(&[0]), 0), &One));
        assert!(wn_leq(&WnElem::Pair(SeqTerm::base(0), 0), &WnElem::Pair(seq(&[0]), 0), &One));
        let a = WnElem::Pair(seq(&[0, 0]), t.clone());
        let b = WnElem::Pair(seq(&[0, 1]), t.clone());
        let terms = Terms::new(crate::seq::System::new(crate::seq::Family::S0, 2), One);
        assert!(!wn_leq(&a, &b, &terms) && !wn_leq(&b, &a, &terms));
    }

    #[test]
    fn pi_and_kappa_n() {
        let t = seq(&[0, 0]);
        assert_eq!(pi_n(2, &SeqTerm::base(0), &t).unwrap(), t);
        assert_eq!(kappa_n(1, &WnElem::Bottom).unwrap(), SeqTerm::base(0));
        let w = WnElem::Pair(SeqTerm::base(0), SeqTerm::base(0));
        assert_eq!(kappa_n(0, &w).unwrap(), seq(&[0]));
        let w = WnElem::Pair(seq(&[0]), seq(&[0]));
        let u = kappa_n(1, &w).unwrap();
        assert_eq!(u, seq(&[0, 1, 0]));
        assert_eq!(kappa_n_inverse(1, &u).unwrap(), w);
    }
}
