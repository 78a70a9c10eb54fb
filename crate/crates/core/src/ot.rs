//! The binary collapsing system `OT_n`: terms `0̄` and `θ_i s t`.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::TermError;
use crate::gap::pi_n;
use crate::order::LinearOrder;
use crate::seq::{Index, SeqTerm};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OtTerm {
    Zero,
    Theta(Arc<OtNode>),
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct OtNode {
    index: Index,
    left: OtTerm,
    right: OtTerm,
    size: usize,
    max_index: Index,
}

impl OtTerm {
    pub fn zero() -> Self {
        OtTerm::Zero
    }

    /// `θ_i s t`, requiring `i >= max(deg(s) - 1, deg(t), 0)` and `K_i(s) = ∅`.
    pub fn theta(i: Index, s: OtTerm, t: OtTerm) -> Result<Self, TermError> {
        let ds = s.deg();
        if (i as i32) < ds - 1 {
            return Err(TermError::IndexConstraint { index: i, sub_degree: ds });
        }
        if (i as i32) < t.deg() {
            return Err(TermError::IndexConstraint { index: i, sub_degree: t.deg() });
        }
        if !s.k_is_empty(i as i32) {
            return Err(TermError::KSetNotEmpty { index: i });
        }
        Ok(Self::theta_raw(i, s, t))
    }

    fn theta_raw(i: Index, s: OtTerm, t: OtTerm) -> Self {
        let size = s.size() + t.size() + 1;
        let max_index = i.max(s.max_index_or0()).max(t.max_index_or0());
        OtTerm::Theta(Arc::new(OtNode { index: i, left: s, right: t, size, max_index }))
    }

    /// `(i, s, t)` for `θ_i s t`.
    pub fn parts(&self) -> Option<(Index, &OtTerm, &OtTerm)> {
        match self {
            OtTerm::Zero => None,
            OtTerm::Theta(node) => Some((node.index, &node.left, &node.right)),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, OtTerm::Zero)
    }

    pub fn deg(&self) -> i32 {
        self.parts().map_or(-1, |(i, _, _)| i as i32)
    }

    /// Number of `θ` nodes: `h(0̄) = 0`, `h(θ_i s t) = h(s) + h(t) + 1`.
    pub fn size(&self) -> usize {
        match self {
            OtTerm::Zero => 0,
            OtTerm::Theta(node) => node.size,
        }
    }

    pub fn max_index(&self) -> Option<Index> {
        match self {
            OtTerm::Zero => None,
            OtTerm::Theta(node) => Some(node.max_index),
        }
    }

    fn max_index_or0(&self) -> Index {
        self.max_index().unwrap_or(0)
    }

    /// `K_j(s)`: the maximal subterms with outer index `<= j`.
    pub fn k_set(&self, j: i32) -> Vec<OtTerm> {
        fn go(s: &OtTerm, j: i32, out: &mut Vec<OtTerm>) {
            if let Some((i, l, r)) = s.parts() {
                if i as i32 <= j {
                    if !out.contains(s) {
                        out.push(s.clone());
                    }
                } else {
                    go(l, j, out);
                    go(r, j, out);
                }
            }
        }
        let mut out = Vec::new();
        go(self, j, &mut out);
        out
    }

    /// `K_j(s) = ∅`, i.e. every index of `s` exceeds `j`.
    pub fn k_is_empty(&self, j: i32) -> bool {
        match self {
            OtTerm::Zero => true,
            OtTerm::Theta(node) => node.index as i32 > j && node.left.k_is_empty(j) && node.right.k_is_empty(j),
        }
    }

    /// `0̄⁺ = 0̄`, `(θ_i s t)⁺ = θ_{i+1} s⁺ t⁺`.
    pub fn plus(&self) -> OtTerm {
        match self.parts() {
            None => OtTerm::Zero,
            Some((i, s, t)) => Self::theta_raw(i + 1, s.plus(), t.plus()),
        }
    }

    /// Inverse of [`OtTerm::plus`].
    pub fn minus(&self) -> Result<OtTerm, TermError> {
        match self.parts() {
            None => Ok(OtTerm::Zero),
            Some((0, _, _)) => Err(TermError::ZeroIndex),
            Some((i, s, t)) => Ok(Self::theta_raw(i - 1, s.minus()?, t.minus()?)),
        }
    }

    /// Membership in `OT_n`, or `OT⁰_n` when `restricted`.
    pub fn validate(&self, n: u32, restricted: bool) -> bool {
        self.max_index().is_none_or(|m| m < n) && (!restricted || self.deg() <= 0)
    }
}

/// `r < r'`.
pub fn ot_less(r: &OtTerm, r2: &OtTerm) -> bool {
    match (r.parts(), r2.parts()) {
        (None, None) => false,
        (None, Some(_)) => true,
        (Some(_), None) => false,
        (Some((i, s, t)), Some((j, s2, t2))) => {
            if i != j {
                return i < j;
            }
            (ot_less(s, s2) && ot_less(t, r2)) || (s == s2 && ot_less(t, t2)) || r == t2 || ot_less(r, t2)
        }
    }
}

pub fn ot_cmp(s: &OtTerm, t: &OtTerm) -> Ordering {
    if s == t {
        Ordering::Equal
    } else if ot_less(s, t) {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Elements of `D_n(X) = 1 + OT⁰_n × X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DnElem<X> {
    Bottom,
    Pair(OtTerm, X),
}

impl<X> DnElem<X> {
    pub fn map<Y>(self, f: impl FnOnce(X) -> Y) -> DnElem<Y> {
        match self {
            DnElem::Bottom => DnElem::Bottom,
            DnElem::Pair(s, x) => DnElem::Pair(s, f(x)),
        }
    }

    pub fn label(&self) -> Option<&X> {
        match self {
            DnElem::Bottom => None,
            DnElem::Pair(_, x) => Some(x),
        }
    }
}

/// `0` least, pairs lexicographic.
pub fn dn_cmp<B: LinearOrder>(a: &DnElem<B::Elem>, b: &DnElem<B::Elem>, base: &B) -> Ordering {
    match (a, b) {
        (DnElem::Bottom, DnElem::Bottom) => Ordering::Equal,
        (DnElem::Bottom, _) => Ordering::Less,
        (_, DnElem::Bottom) => Ordering::Greater,
        (DnElem::Pair(s, x), DnElem::Pair(t, y)) => ot_cmp(s, t).then_with(|| base.compare(x, y)),
    }
}

/// `ϑ_n(0) = 0̄`, `ϑ_n(s, t) = θ_0 s⁺ t`.
pub fn theta_ot(n: u32, d: &DnElem<OtTerm>) -> Result<OtTerm, TermError> {
    match d {
        DnElem::Bottom => Ok(OtTerm::Zero),
        DnElem::Pair(s, t) => {
            if !s.validate(n, true) || !t.validate(n + 1, true) {
                return Err(TermError::Domain("theta_ot"));
            }
            OtTerm::theta(0, s.plus(), t.clone())
        }
    }
}

/// Inverse of [`theta_ot`]: every `OT⁰_{n+1}` term is `0̄` or `θ_0 a t` with
/// `K_0(a) = ∅`.
pub fn theta_ot_inverse(u: &OtTerm) -> Result<DnElem<OtTerm>, TermError> {
    match u.parts() {
        None => Ok(DnElem::Bottom),
        Some((0, a, t)) => Ok(DnElem::Pair(a.minus()?, t.clone())),
        Some(_) => Err(TermError::DegreeTooLarge { degree: u.deg() }),
    }
}

/// The linearization `f_n : OT⁰_n → S⁰_n(1)`.
pub fn f_lin(n: u32, s: &OtTerm) -> Result<SeqTerm<u32>, TermError> {
    if !s.validate(n, true) {
        return Err(TermError::Domain("f_lin"));
    }
    match s.parts() {
        None => Ok(SeqTerm::base(0)),
        Some((_, a, t)) => {
            // n >= 1 here since OT⁰_0 = {0̄}
            let head = f_lin(n - 1, &a.minus()?)?;
            let tail = f_lin(n, t)?;
            SeqTerm::theta(0, pi_n(n - 1, &head, &tail)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn th(i: u32, s: OtTerm, t: OtTerm) -> OtTerm {
        OtTerm::theta(i, s, t).unwrap()
    }

    #[test]
    fn k_sets() {
        let z = OtTerm::zero();
        let a = th(0, z.clone(), z.clone());
        assert_eq!(a.k_set(0), alloc::vec![a.clone()]);
        assert!(th(1, z.clone(), z.clone()).k_set(0).is_empty());
        assert!(a.k_set(-1).is_empty());
        assert!(OtTerm::theta(0, a.clone(), z.clone()).is_err());
    }

    #[test]
    fn comparator_examples() {
        let z = OtTerm::zero();
        let a = th(0, z.clone(), z.clone());
        assert_eq!(ot_cmp(&z, &a), Ordering::Less);
        assert_eq!(ot_cmp(&a, &th(1, z.clone(), z.clone())), Ordering::Less);
        assert_eq!(ot_cmp(&a, &th(0, z.clone(), a.clone())), Ordering::Less);
    }

    #[test]
    fn shifts() {
        let z = OtTerm::zero();
        let a = th(0, z.clone(), z.clone());
        assert_eq!(z.plus(), z);
        assert_eq!(a.plus(), th(1, z.clone(), z.clone()));
        assert_eq!(a.minus(), Err(TermError::ZeroIndex));
        assert_eq!(a.plus().minus().unwrap(), a);
    }

    #[test]
    fn theta_ot_examples() {
        let z = OtTerm::zero();
        let a = th(0, z.clone(), z.clone());
        assert_eq!(theta_ot(1, &DnElem::Bottom).unwrap(), z);
        assert_eq!(theta_ot(0, &DnElem::Pair(z.clone(), z.clone())).unwrap(), a);
        let u = theta_ot(1, &DnElem::Pair(a.clone(), z.clone())).unwrap();
        assert_eq!(u, th(0, th(1, z.clone(), z.clone()), z.clone()));
        assert_eq!(theta_ot_inverse(&u).unwrap(), DnElem::Pair(a, z));
    }

    #[test]
    fn dn_order() {
        let z = OtTerm::zero();
        let a = th(0, z.clone(), z.clone());
        let c = crate::order::Chain(3);
        assert_eq!(dn_cmp(&DnElem::Bottom, &DnElem::Pair(z.clone(), 2), &c), Ordering::Less);
        assert_eq!(dn_cmp(&DnElem::Pair(z.clone(), 2), &DnElem::Pair(a, 0), &c), Ordering::Less);
        assert_eq!(dn_cmp(&DnElem::Pair(z.clone(), 2), &DnElem::Pair(z, 1), &c), Ordering::Greater);
    }

    #[test]
    fn f_lin_examples() {
        let z = OtTerm::zero();
        let a = th(0, z.clone(), z.clone());
        assert_eq!(f_lin(0, &z).unwrap(), SeqTerm::base(0));
        assert_eq!(f_lin(1, &a).unwrap(), SeqTerm::from_parts(alloc::vec![0], 0).unwrap());
        let b = th(0, z.clone(), a);
        assert_eq!(f_lin(1, &b).unwrap(), SeqTerm::from_parts(alloc::vec![0, 0], 0).unwrap());
    }
}
