//! Exhaustive enumeration of bounded term fragments, in a fixed order.

use alloc::vec::Vec;

use crate::ot::OtTerm;
use crate::seq::{SeqTerm, System};

/// All terms of `system` over the given leaves with height at most
/// `max_height`, by increasing height, then outer index, then subterm order.
pub fn seq_terms<E: Clone>(system: System, leaves: &[E], max_height: usize) -> Vec<SeqTerm<E>> {
    let mut layer: Vec<SeqTerm<E>> = leaves.iter().cloned().map(SeqTerm::base).collect();
    let mut all = Vec::new();
    for h in 0..=max_height {
        all.extend(layer.iter().filter(|s| !system.family.restricted() || s.deg() <= 0).cloned());
        if h == max_height {
            break;
        }
        let mut next = Vec::new();
        for i in 0..system.n {
            for s in &layer {
                if let Ok(t) = SeqTerm::theta(i, s.clone()) {
                    next.push(t);
                }
            }
        }
        layer = next;
    }
    all
}

/// All terms of `OT_n` (or `OT⁰_n`) with at most `max_size` `θ` nodes, by
/// increasing size.
pub fn ot_terms(n: u32, restricted: bool, max_size: usize) -> Vec<OtTerm> {
    let by_size = ot_terms_by_size(n, max_size);
    by_size.into_iter().flatten().filter(|s| !restricted || s.deg() <= 0).collect()
}

/// `result[k]` lists the `OT_n` terms of size exactly `k`.
pub fn ot_terms_by_size(n: u32, max_size: usize) -> Vec<Vec<OtTerm>> {
    let mut by_size: Vec<Vec<OtTerm>> = alloc::vec![alloc::vec![OtTerm::zero()]];
    for k in 1..=max_size {
        let mut layer = Vec::new();
        for i in 0..n {
            for ls in 0..k {
                for s in &by_size[ls] {
                    if !s.k_is_empty(i as i32) {
                        continue;
                    }
                    for t in &by_size[k - 1 - ls] {
                        if let Ok(u) = OtTerm::theta(i, s.clone(), t.clone()) {
                            layer.push(u);
                        }
                    }
                }
            }
        }
        by_size.push(layer);
    }
    by_size
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::Family;

    #[test]
    fn small_fragments() {
        let t1 = seq_terms(System::new(Family::T, 1), &[0u32], 2);
        assert_eq!(t1.len(), 3);
        assert_eq!(t1[2].indices(), &[0, 0]);
        let ot = ot_terms(1, true, 2);
        assert_eq!(ot.len(), 3);
        assert!(seq_terms(System::new(Family::S, 3), &[0u32, 1], 0).iter().all(|s| s.is_base()));
    }
}
