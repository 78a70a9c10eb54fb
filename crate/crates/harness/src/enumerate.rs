//! Bounded enumeration of every term system, with independent traversal
//! strategies for cross-checking counts.

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;

use ordgap_core::bh::{BhTerm, SynTerm, Syntactic};
use ordgap_core::dilator::CodedDilator;
use ordgap_core::enumerate::{ot_terms_by_size, seq_terms};
use ordgap_core::order::LinearOrder;
use ordgap_core::ot::OtTerm;
use ordgap_core::{SeqTerm, System};

/// Enumerations refuse to grow past this many terms.
pub const DEFAULT_LIMIT: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TooLarge {
    pub limit: usize,
}

impl fmt::Display for TooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "enumeration exceeds {} terms; lower the bound", self.limit)
    }
}

impl std::error::Error for TooLarge {}

/// Breadth first by height (the core enumerator), with a size guard.
pub fn seq_by_height<E: Clone>(system: System, leaves: &[E], max_height: usize, limit: usize) -> Result<Vec<SeqTerm<E>>, TooLarge> {
    // Cheap upper bound: at most n choices per level.
    let mut bound = leaves.len() as f64;
    let mut total = bound;
    for _ in 0..max_height {
        bound *= system.n.max(1) as f64;
        total += bound;
    }
    if total > limit as f64 {
        let count = seq_dfs(system, leaves, max_height, Some(limit));
        if count.is_none() {
            return Err(TooLarge { limit });
        }
    }
    Ok(seq_terms(system, leaves, max_height))
}

/// Depth first: extend each term outward by every admissible index.
/// Returns `None` once more than `limit` terms are found.
pub fn seq_dfs<E: Clone>(system: System, leaves: &[E], max_height: usize, limit: Option<usize>) -> Option<Vec<SeqTerm<E>>> {
    fn go<E: Clone>(s: SeqTerm<E>, system: System, left: usize, out: &mut Vec<SeqTerm<E>>, limit: usize) -> bool {
        if !system.family.restricted() || s.deg() <= 0 {
            out.push(s.clone());
            if out.len() > limit {
                return false;
            }
        }
        if left == 0 {
            return true;
        }
        for i in 0..system.n {
            if let Ok(t) = SeqTerm::theta(i, s.clone()) {
                if !go(t, system, left - 1, out, limit) {
                    return false;
                }
            }
        }
        true
    }
    let limit = limit.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    for x in leaves {
        if !go(SeqTerm::base(x.clone()), system, max_height, &mut out, limit) {
            return None;
        }
    }
    Some(out)
}

/// `OT_n` terms by size, from the size-indexed layers.
pub fn ot_by_size(n: u32, restricted: bool, max_size: usize) -> Vec<OtTerm> {
    ot_terms_by_size(n, max_size).into_iter().flatten().filter(|s| !restricted || s.deg() <= 0).collect()
}

/// Top-down recursion over shapes and labels, keeping whatever the checked
/// constructor accepts. Shares no code with [`ot_by_size`].
pub fn ot_by_shape(n: u32, restricted: bool, max_size: usize) -> Vec<OtTerm> {
    fn exactly(n: u32, size: usize, memo: &mut Vec<Option<Vec<OtTerm>>>) -> Vec<OtTerm> {
        if let Some(v) = &memo[size] {
            return v.clone();
        }
        let mut out = Vec::new();
        if size == 0 {
            out.push(OtTerm::zero());
        } else {
            for left in 0..size {
                let ls = exactly(n, left, memo);
                let rs = exactly(n, size - 1 - left, memo);
                for i in 0..n {
                    for s in &ls {
                        for t in &rs {
                            if let Ok(u) = OtTerm::theta(i, s.clone(), t.clone()) {
                                out.push(u);
                            }
                        }
                    }
                }
            }
        }
        memo[size] = Some(out.clone());
        out
    }
    let mut memo = vec![None; max_size + 1];
    (0..=max_size).flat_map(|k| exactly(n, k, &mut memo)).filter(|s| s.validate(n, restricted)).collect()
}

/// Weight of a syntactic term: dilator weights summed over all nodes.
pub fn bh_weight<D: CodedDilator, X>(d: &D, s: &BhTerm<D::Elem, X>) -> usize {
    match s.parts() {
        None => 0,
        Some((a, e)) => d.weight(e) + a.iter().map(|r| bh_weight(d, r)).sum::<usize>(),
    }
}

/// Increasing (under the syntactic order) `m`-element subsets of `sorted`.
fn increasing_subsets<T: Clone>(sorted: &[T], m: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn go<T: Clone>(sorted: &[T], from: usize, m: usize, pick: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if pick.len() == m {
            out.push(pick.clone());
            return;
        }
        for k in from..sorted.len() {
            pick.push(sorted[k].clone());
            go(sorted, k + 1, m, pick, out);
            pick.pop();
        }
    }
    go(sorted, 0, m, &mut pick, &mut out);
    out
}

/// Syntactic terms of weight at most `max_weight` by closing under
/// collapsing until nothing new appears.
pub fn bh_closure<D, B>(sys: &Syntactic<D, B>, base: &[B::Elem], max_weight: usize) -> Vec<SynTerm<D, B>>
where
    D: CodedDilator,
    B: LinearOrder,
    B::Elem: Hash,
{
    let mut seen: HashSet<SynTerm<D, B>> = base.iter().cloned().map(BhTerm::Base).collect();
    let mut all: Vec<SynTerm<D, B>> = seen.iter().cloned().collect();
    loop {
        all.sort_by(|a, b| sys.compare(a, b));
        let mut fresh = Vec::new();
        for m in 0..=sys.dilator.max_support() {
            for support in increasing_subsets(&all, m) {
                let used: usize = support.iter().map(|r| bh_weight(&sys.dilator, r)).sum();
                if used > max_weight {
                    continue;
                }
                for e in sys.dilator.full_support(m, max_weight - used) {
                    if sys.dilator.weight(&e) + used > max_weight {
                        continue;
                    }
                    let t = sys.coll(support.clone(), e).expect("sorted support with full elements");
                    if seen.insert(t.clone()) {
                        fresh.push(t);
                    }
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        all.extend(fresh);
    }
    all.sort_by(|a, b| bh_weight(&sys.dilator, a).cmp(&bh_weight(&sys.dilator, b)).then(sys.compare(a, b)));
    all
}

/// The same set, built weight by weight from lighter terms only.
pub fn bh_by_weight<D, B>(sys: &Syntactic<D, B>, base: &[B::Elem], max_weight: usize) -> Vec<SynTerm<D, B>>
where
    D: CodedDilator,
    B: LinearOrder,
{
    let mut layers: Vec<Vec<SynTerm<D, B>>> = vec![Vec::new(); max_weight + 1];
    layers[0] = base.iter().cloned().map(BhTerm::Base).collect();
    // Layer 0 also holds weight-zero collapses (e.g. the bottom element),
    // which may themselves appear in supports of other weight-zero terms.
    for w in 0..=max_weight {
        loop {
            let lighter: Vec<(usize, SynTerm<D, B>)> =
                layers.iter().enumerate().take(w + 1).flat_map(|(k, l)| l.iter().cloned().map(move |t| (k, t))).collect();
            let mut sorted = lighter;
            sorted.sort_by(|a, b| sys.compare(&a.1, &b.1));
            let mut added = false;
            for m in 0..=sys.dilator.max_support() {
                for support in increasing_subsets(&sorted, m) {
                    let used: usize = support.iter().map(|(k, _)| k).sum();
                    if used > w {
                        continue;
                    }
                    let terms: Vec<_> = support.into_iter().map(|(_, t)| t).collect();
                    for e in sys.dilator.full_support(m, w - used) {
                        if sys.dilator.weight(&e) + used != w {
                            continue;
                        }
                        let t = sys.coll(terms.clone(), e).expect("sorted support");
                        if !layers[w].contains(&t) {
                            layers[w].push(t);
                            added = true;
                        }
                    }
                }
            }
            if !added {
                break;
            }
        }
    }
    layers.into_iter().flatten().collect()
}

/// Counts per height, for comparing strategies.
pub fn histogram(heights: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut out = Vec::new();
    for h in heights {
        if out.len() <= h {
            out.resize(h + 1, 0);
        }
        out[h] += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ordgap_core::dilator::{Dn, TZero};
    use ordgap_core::order::{Empty, One};
    use ordgap_core::Family;

    #[test]
    fn strategies_agree_on_sequences() {
        for family in [Family::T, Family::T0, Family::S0] {
            for n in 0..4 {
                let sys = System::new(family, n);
                let a = seq_by_height(sys, &[0u32, 1], 4, DEFAULT_LIMIT).unwrap();
                let b = seq_dfs(sys, &[0u32, 1], 4, None).unwrap();
                assert_eq!(histogram(a.iter().map(|s| s.height())), histogram(b.iter().map(|s| s.height())));
                let a: HashSet<_> = a.into_iter().collect();
                let b: HashSet<_> = b.into_iter().collect();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn strategies_agree_on_binary_terms() {
        for n in 0..3 {
            for restricted in [false, true] {
                let a: HashSet<_> = ot_by_size(n, restricted, 5).into_iter().collect();
                let b: HashSet<_> = ot_by_shape(n, restricted, 5).into_iter().collect();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn strategies_agree_on_syntactic_terms() {
        let sys = Syntactic::new(TZero { n: 1 }, One);
        let a: HashSet<_> = bh_closure(&sys, &[0], 4).into_iter().collect();
        let b: HashSet<_> = bh_by_weight(&sys, &[0], 4).into_iter().collect();
        assert_eq!(a, b);
        let sys = Syntactic::new(Dn { n: 1 }, Empty);
        let a: HashSet<_> = bh_closure(&sys, &[], 4).into_iter().collect();
        let b: HashSet<_> = bh_by_weight(&sys, &[], 4).into_iter().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn guard_refuses_huge_bounds() {
        let sys = System::new(Family::T, 6);
        assert!(seq_by_height(sys, &[0u32], 12, 1000).is_err());
        assert_eq!(seq_by_height(sys, &[0u32], 0, 1000).unwrap().len(), 1);
    }
}
