//! The linear order on unary terms and the maps `σ`, `ϑ`, `ι` that exhibit
//! `T⁰_{n+1}(X)` as a Bachmann-Howard fixed point of `T⁰_n`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::TermError;
use crate::order::LinearOrder;
use crate::seq::{k_offset, Index, SeqTerm, SeqView, Terms};

/// Pairwise comparison of suffixes of two fixed terms. Every recursive call
/// of the order clauses compares a suffix of `s` with a suffix of `t`, so a
/// table indexed by the two offsets makes the comparison quadratic.
struct LinCmp<'a, B: LinearOrder> {
    base: &'a B,
    s: &'a [Index],
    sl: &'a B::Elem,
    t: &'a [Index],
    tl: &'a B::Elem,
    width: usize,
    memo: Vec<u8>,
}

impl<'a, B: LinearOrder> LinCmp<'a, B> {
    fn new(base: &'a B, s: SeqView<'a, B::Elem>, t: SeqView<'a, B::Elem>) -> Self {
        let width = t.indices.len() + 1;
        LinCmp { base, s: s.indices, sl: s.leaf, t: t.indices, tl: t.leaf, width, memo: vec![0; (s.indices.len() + 1) * width] }
    }

    fn same(&self, p: usize, q: usize) -> bool {
        self.s[p..] == self.t[q..] && self.sl == self.tl
    }

    fn leq(&mut self, p: usize, q: usize) -> bool {
        self.same(p, q) || self.less(p, q)
    }

    fn less(&mut self, p: usize, q: usize) -> bool {
        let key = p * self.width + q;
        match self.memo[key] {
            1 => return false,
            2 => return true,
            _ => {}
        }
        let r = match (p == self.s.len(), q == self.t.len()) {
            (true, true) => self.base.less(self.sl, self.tl),
            (true, false) => true,
            (false, true) => false,
            (false, false) => {
                let (i, j) = (self.s[p], self.t[q]);
                if i != j {
                    i < j
                } else {
                    let ks = k_offset(self.s, p + 1, i as i32);
                    let kt = k_offset(self.t, q + 1, j as i32);
                    (self.less(p + 1, q + 1) && self.less(ks, q)) || self.leq(p, kt)
                }
            }
        };
        self.memo[key] = if r { 2 } else { 1 };
        r
    }
}

/// Strict linear order on terms: `s < t`.
pub fn lin_less<B: LinearOrder>(base: &B, s: SeqView<'_, B::Elem>, t: SeqView<'_, B::Elem>) -> bool {
    LinCmp::new(base, s, t).less(0, 0)
}

/// Three-way comparison; `Equal` exactly for syntactically identical terms.
pub fn lin_cmp<B: LinearOrder>(base: &B, s: &SeqTerm<B::Elem>, t: &SeqTerm<B::Elem>) -> Ordering {
    if s == t {
        Ordering::Equal
    } else if lin_less(base, s.view(), t.view()) {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

impl<B: LinearOrder> LinearOrder for Terms<B> {
    fn compare(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        lin_cmp(&self.base, a, b)
    }
}

/// `T(f)`: apply `f` to the unique leaf.
pub fn t_rename<E, F>(f: impl FnOnce(E) -> F, s: SeqTerm<E>) -> SeqTerm<F> {
    s.map_leaf(f)
}

/// `supp(s) = {k_base(s)}`.
pub fn t_supp<E: Clone>(s: &SeqTerm<E>) -> Vec<E> {
    vec![s.k_base().clone()]
}

// Outer indices are not bounded by `n`: the shift is defined on all of
// `T(T⁰_{n+1}(X))`, and membership in `T_n` is left to the caller.
fn check_nested<E>(n: u32, s: &SeqTerm<SeqTerm<E>>) -> Result<(), TermError> {
    let r = s.leaf();
    if let Some(&bad) = r.indices().iter().find(|&&i| i > n) {
        return Err(TermError::IndexOutOfRange { index: bad, bound: n + 1 });
    }
    if r.deg() > 0 {
        return Err(TermError::DegreeTooLarge { degree: r.deg() });
    }
    Ok(())
}

/// `σⁿ : T_n(T⁰_{n+1}(X)) → T_{n+1}(X)`: shift the outer indices up by one
/// and splice the nested leaf term in place of the leaf.
pub fn sigma_lin<E: Clone>(n: u32, s: &SeqTerm<SeqTerm<E>>) -> Result<SeqTerm<E>, TermError> {
    check_nested(n, s)?;
    let r = s.leaf();
    let mut indices: Vec<Index> = s.indices().iter().map(|i| i + 1).collect();
    indices.extend_from_slice(r.indices());
    SeqTerm::from_parts(indices, r.leaf().clone())
}

/// `ϑⁿ(s) = θ_0 σⁿ(s)` for `s` of degree at most zero.
pub fn theta_lin<E: Clone>(n: u32, s: &SeqTerm<SeqTerm<E>>) -> Result<SeqTerm<E>, TermError> {
    if s.deg() > 0 {
        return Err(TermError::DegreeTooLarge { degree: s.deg() });
    }
    SeqTerm::theta(0, sigma_lin(n, s)?)
}

/// `ιⁿ(x) = x̄`.
pub fn iota_lin<E>(x: E) -> SeqTerm<E> {
    SeqTerm::base(x)
}

/// Inverse of [`sigma_lin`]: the prefix of indices `>= 1` is shifted down,
/// the remainder (which starts at the first `0`, or is the leaf) becomes the
/// nested leaf term.
pub fn sigma_lin_inverse<E: Clone>(n: u32, u: &SeqTerm<E>) -> Result<SeqTerm<SeqTerm<E>>, TermError> {
    let ix = u.indices();
    let cut = ix.iter().position(|&i| i == 0).unwrap_or(ix.len());
    if let Some(&bad) = ix[cut..].iter().find(|&&i| i > n) {
        return Err(TermError::IndexOutOfRange { index: bad, bound: n + 1 });
    }
    let inner = SeqTerm::from_parts(ix[cut..].to_vec(), u.leaf().clone())?;
    SeqTerm::from_parts(ix[..cut].iter().map(|i| i - 1).collect(), inner)
}

/// Splits a `T⁰_{n+1}(X)` term as `ι(x)` (`Err(x)`) or `ϑⁿ(s)` (`Ok(s)`).
pub fn theta_lin_inverse<E: Clone>(n: u32, u: &SeqTerm<E>) -> Result<Result<SeqTerm<SeqTerm<E>>, E>, TermError> {
    match u.split() {
        None => Ok(Err(u.leaf().clone())),
        Some((0, rest)) => Ok(Ok(sigma_lin_inverse(n, &rest.to_term())?)),
        Some(_) => Err(TermError::DegreeTooLarge { degree: u.deg() }),
    }
}

/// Linear comparison of terms over a linear base, exposed through the
/// generic carrier interface.
pub fn lin_leq<B: LinearOrder>(base: &B, s: &SeqTerm<B::Elem>, t: &SeqTerm<B::Elem>) -> bool {
    lin_cmp(base, s, t) != Ordering::Greater
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::One;

    fn seq(ix: &[u32]) -> SeqTerm<u32> {
        SeqTerm::from_parts(ix.to_vec(), 0).unwrap()
    }

    #[test]
    fn comparator_examples() {
        assert_eq!(lin_cmp(&One, &SeqTerm::base(0), &seq(&[0])), Ordering::Less);
        assert_eq!(lin_cmp(&One, &seq(&[0]), &seq(&[1])), Ordering::Less);
        assert_eq!(lin_cmp(&One, &seq(&[1, 0, 1, 1]), &seq(&[1, 1])), Ordering::Less);
        assert_eq!(lin_cmp(&One, &seq(&[1, 1]), &seq(&[1, 0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn rename_moves_leaf() {
        let s = SeqTerm::from_parts(vec![0], 0u32).unwrap();
        assert_eq!(t_rename(|x| x + 1, s), SeqTerm::from_parts(vec![0], 1u32).unwrap());
        assert_eq!(t_supp(&seq(&[0, 1, 1])), vec![0]);
    }

    #[test]
    fn sigma_examples() {
        let r = seq(&[0]);
        assert_eq!(sigma_lin(0, &SeqTerm::base(r.clone())).unwrap(), r);
        let s = SeqTerm::from_parts(vec![0], seq(&[0])).unwrap();
        assert_eq!(sigma_lin(0, &s).unwrap(), seq(&[1, 0]));
        let s = SeqTerm::from_parts(vec![1, 0], SeqTerm::base(0u32)).unwrap();
        assert_eq!(sigma_lin(1, &s).unwrap(), seq(&[2, 1]));
        assert_eq!(sigma_lin_inverse(1, &seq(&[2, 1])).unwrap(), s);
    }

    #[test]
    fn theta_examples() {
        let b = SeqTerm::base(SeqTerm::base(0u32));
        assert_eq!(theta_lin(0, &b).unwrap(), seq(&[0]));
        let s = SeqTerm::from_parts(vec![0], seq(&[0])).unwrap();
        assert_eq!(theta_lin(0, &s).unwrap(), seq(&[0, 1, 0]));
        assert_eq!(iota_lin(3u32), SeqTerm::base(3));
        let deg1 = SeqTerm::from_parts(vec![1], SeqTerm::base(0u32)).unwrap();
        assert!(theta_lin(2, &deg1).is_err());
    }
}
