use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

use ordgap_core::bh::{initial_embed, transport, BhTerm, LinDerivative, OtDerivative, SynTerm, Syntactic};
use ordgap_core::btree::{btree_d_cmp, btree_in_theta_d, btree_in_tw, btree_w_leq, BinTree, PairInclusion, TreeKruskal};
use ordgap_core::dilator::{CodedDilator, Dn, Identity, IncreasingPairs, TZero};
use ordgap_core::enumerate::{ot_terms, seq_terms};
use ordgap_core::kruskal::nu_plus;
use ordgap_core::linear::t_supp;
use ordgap_core::order::{Chain, Empty, LinearOrder, One};
use ordgap_core::ot::{ot_cmp, DnElem, OtTerm};
use ordgap_core::{Family, SeqTerm, System};

use super::linear::chain_embeddings;
use super::{binary, keyed, show_bh, Params};
use crate::check::{check_linear, Carrier};
use crate::enumerate::{bh_by_weight, bh_closure, bh_weight, histogram, ot_by_shape, ot_by_size, seq_by_height, seq_dfs, DEFAULT_LIMIT};
use crate::report::{Collector, SuiteReport};

fn leaf(x: &u32) -> String {
    format!("b{x}")
}

fn show_dn(e: &DnElem<usize>) -> String {
    match e {
        DnElem::Bottom => "0".into(),
        DnElem::Pair(s, p) => format!("({}, {p})", binary(s)),
    }
}

fn show_pair(e: &(usize, usize)) -> String {
    format!("({}, {})", e.0, e.1)
}

fn show_tree(t: &BinTree<u32>) -> String {
    match t.children() {
        None => match t {
            BinTree::Leaf(x) => leaf(x),
            BinTree::Node(_) => unreachable!(),
        },
        Some((l, r)) => format!("o({}, {})", show_tree(l), show_tree(r)),
    }
}

/// Linearity and well-formedness of one syntactic instance.
fn order_instance<D, B>(sys: &Syntactic<D, B>, base: &[u32], w: usize, elem: &dyn Fn(&D::Elem) -> String, out: &mut Collector)
where
    D: CodedDilator,
    B: LinearOrder<Elem = u32>,
{
    let items = bh_by_weight(sys, base, w);
    let show = |s: &SynTerm<D, B>| show_bh(s, elem, &leaf);
    for s in &items {
        out.expect(sys.validate(s), s.height(), || show(s), String::new, "enumerated terms are well formed");
    }
    let height = |s: &SynTerm<D, B>| s.height();
    let c = Carrier { items: &items, show: &show, height: &height };
    check_linear(&c, |a, b| sys.compare(a, b), out);
}

pub fn order(p: &Params) -> SuiteReport {
    let (nmax, w) = (p.n_or(2), p.h_or(3));
    let mut out = Collector::new("bh-order", p.seed);
    out.param("n", nmax).param("weight", w);
    for n in 0..=nmax {
        order_instance(&Syntactic::new(TZero { n }, One), &[0], w, &keyed, &mut out);
        order_instance(&Syntactic::new(TZero { n }, Chain(2)), &[0, 1], w, &keyed, &mut out);
        order_instance(&Syntactic::new(Dn { n }, Empty), &[], w, &show_dn, &mut out);
    }
    order_instance(&Syntactic::new(IncreasingPairs, Chain(3)), &[0, 1, 2], w, &show_pair, &mut out);
    order_instance(&Syntactic::new(Identity, Chain(2)), &[0, 1], w, &|e: &usize| e.to_string(), &mut out);
    out.finish()
}

/// `initial_embed` is an order embedding with `weight = height` whose image
/// is exactly the bounded target fragment.
/// The concrete side of an initiality check: the fixed point, its terms up
/// to the bound, and how to print and measure them.
struct Target<'a, T, C> {
    fixed_point: &'a T,
    fragment: &'a [C],
    show: &'a dyn Fn(&C) -> String,
    height: &'a dyn Fn(&C) -> usize,
}

fn initial_instance<D, B, T, C>(
    sys: &Syntactic<D, B>,
    base: &[u32],
    w: usize,
    show_elem: &dyn Fn(&D::Elem) -> String,
    target: Target<'_, T, C>,
    out: &mut Collector,
) where
    D: CodedDilator,
    B: LinearOrder<Elem = u32>,
    T: ordgap_core::bh::FixedPoint<D, Base = u32, Carrier = C>,
    C: Clone + PartialEq + Eq + Hash + Debug,
{
    let Target { fixed_point: target, fragment, show: show_target, height: target_height } = target;
    let items = bh_by_weight(sys, base, w);
    let show = |s: &SynTerm<D, B>| show_bh(s, show_elem, &leaf);
    let mut images = Vec::with_capacity(items.len());
    for s in &items {
        match initial_embed(sys, target, s) {
            Ok(z) => {
                let weight = bh_weight(&sys.dilator, s);
                out.expect(target_height(&z) == weight, weight, || show(s), || show_target(&z), "weight equals target height");
                images.push(Some(z));
            }
            Err(e) => {
                out.violation(s.height(), || show(s), || e.to_string(), "initial embedding defined");
                images.push(None);
            }
        }
    }
    for (i, s) in items.iter().enumerate() {
        for (j, t) in items.iter().enumerate() {
            if let (Some(a), Some(b)) = (&images[i], &images[j]) {
                let ok = sys.compare(s, t) == target.compare(a, b);
                out.expect(ok, s.height() + t.height(), || show(s), || show(t), "initial embedding preserves the order");
            }
        }
    }
    let hit: HashSet<&C> = images.iter().flatten().collect();
    out.expect(hit.len() == items.len(), 0, || format!("{} terms", items.len()), || format!("{} images", hit.len()), "initial embedding injective");
    for z in fragment {
        out.expect(hit.contains(z), target_height(z), || show_target(z), String::new, "every bounded target term is hit");
    }
    let fragment: HashSet<&C> = fragment.iter().collect();
    for z in hit {
        out.expect(fragment.contains(z), target_height(z), || show_target(z), String::new, "image stays in the bounded fragment");
    }
}

pub fn initial(p: &Params) -> SuiteReport {
    let (nmax, w) = (p.n_or(2), p.h_or(3));
    let mut out = Collector::new("bh-initial", p.seed);
    out.param("n", nmax).param("height", w);
    let seq_height = |s: &SeqTerm<u32>| s.height();
    let ot_size = |s: &OtTerm| s.size();
    for n in 0..=nmax {
        for k in [1u32, 2] {
            let leaves: Vec<u32> = (0..k).collect();
            let fragment = seq_terms(System::new(Family::T0, n + 1), &leaves, w);
            let target = LinDerivative { n, base: Chain(k) };
            let target = Target { fixed_point: &target, fragment: &fragment, show: &keyed, height: &seq_height };
            initial_instance(&Syntactic::new(TZero { n }, Chain(k)), &leaves, w, &keyed, target, &mut out);
        }
        let fragment = ot_terms(n + 1, true, w);
        let target = Target { fixed_point: &OtDerivative { n }, fragment: &fragment, show: &binary, height: &ot_size };
        initial_instance(&Syntactic::new(Dn { n }, Empty), &[], w, &show_dn, target, &mut out);
    }
    out.finish()
}

/// Syntactic → concrete → syntactic and concrete → syntactic → concrete.
pub fn unique(p: &Params) -> SuiteReport {
    let (nmax, w) = (p.n_or(2), p.h_or(3));
    let mut out = Collector::new("bh-unique", p.seed);
    out.param("n", nmax).param("height", w);
    for n in 0..=nmax {
        let syn = Syntactic::new(TZero { n }, One);
        let lin = LinDerivative { n, base: One };
        for s in bh_by_weight(&syn, &[0], w) {
            let show = || show_bh(&s, &keyed, &leaf);
            let back = initial_embed(&syn, &lin, &s).and_then(|z| transport(&lin, &syn, &z));
            out.expect(back.as_ref() == Ok(&s), s.height(), show, || format!("{back:?}"), "syntactic round trip through T0_{n+1}(1)");
        }
        for z in seq_terms(System::new(Family::T0, n + 1), &[0u32], w) {
            let back = transport(&lin, &syn, &z).and_then(|s| initial_embed(&syn, &lin, &s));
            out.expect(back.as_ref() == Ok(&z), z.height(), || keyed(&z), || format!("{back:?}"), "concrete round trip through the syntactic derivative");
        }

        let syn = Syntactic::new(Dn { n }, Empty);
        let ot = OtDerivative { n };
        for s in bh_by_weight(&syn, &[], w) {
            let show = || show_bh(&s, &show_dn, &leaf);
            let back = initial_embed(&syn, &ot, &s).and_then(|z| transport(&ot, &syn, &z));
            out.expect(back.as_ref() == Ok(&s), s.height(), show, || format!("{back:?}"), "syntactic round trip through OT0_{n+1}");
        }
        for z in ot_terms(n + 1, true, w) {
            let back = transport(&ot, &syn, &z).and_then(|s| initial_embed(&syn, &ot, &s));
            out.expect(back.as_ref() == Ok(&z), z.size(), || binary(&z), || format!("{back:?}"), "concrete round trip through the syntactic derivative");
        }
    }
    out.finish()
}

/// Renaming along embeddings `2 → 3`: naturality of supports, order
/// preservation, the support condition, and agreement with the concrete
/// supports of `T⁰_{n+1}(X)`.
pub fn support(p: &Params) -> SuiteReport {
    let (nmax, w) = (p.n_or(2), p.h_or(3));
    let mut out = Collector::new("bh-support", p.seed);
    out.param("n", nmax).param("weight", w);
    for n in 0..=nmax {
        let small = Syntactic::new(TZero { n }, Chain(2));
        let large = Syntactic::new(TZero { n }, Chain(3));
        let lin = LinDerivative { n, base: Chain(3) };
        let source = bh_by_weight(&small, &[0, 1], w);
        let target = bh_by_weight(&large, &[0, 1, 2], w);
        let show = |s: &SynTerm<TZero, Chain>| show_bh(s, &keyed, &leaf);
        for x in 0..3u32 {
            out.expect(large.supp(&BhTerm::Base(x)) == vec![x], 0, || leaf(&x), String::new, "support of a leaf");
        }
        for s in &target {
            let mut supp = large.supp(s);
            supp.sort();
            match initial_embed(&large, &lin, s) {
                Ok(z) => {
                    let mut concrete = t_supp(&z);
                    concrete.sort();
                    out.expect(supp == concrete, s.height(), || show(s), || keyed(&z), "syntactic and concrete supports agree");
                }
                Err(e) => out.violation(s.height(), || show(s), || e.to_string(), "embedding defined"),
            }
        }
        for f in chain_embeddings(2, 3) {
            let renamed: Vec<SynTerm<TZero, Chain>> = source.iter().map(|s| ordgap_core::bh::bh_rename(s, &|x: &u32| f[*x as usize])).collect();
            for (s, r) in source.iter().zip(&renamed) {
                out.expect(large.validate(r), s.height(), || show(s), || show(r), "renamed term is well formed");
                let mut a: Vec<u32> = small.supp(s).iter().map(|&x| f[x as usize]).collect();
                let mut b = large.supp(r);
                a.sort();
                b.sort();
                out.expect(a == b, s.height(), || show(s), || show(r), "support naturality");
            }
            for (i, s) in source.iter().enumerate() {
                for (j, t) in source.iter().enumerate() {
                    let ok = small.compare(s, t) == large.compare(&renamed[i], &renamed[j]);
                    out.expect(ok, s.height() + t.height(), || show(s), || show(t), "renaming preserves the order");
                }
            }
            let image: HashSet<&SynTerm<TZero, Chain>> = renamed.iter().collect();
            for t in &target {
                let inside = large.supp(t).iter().all(|x| f.contains(x));
                let clause = if inside { "support in range has a preimage" } else { "support outside range has no preimage" };
                out.expect(image.contains(t) == inside, t.height(), || show(t), || format!("f = {f:?}"), clause);
            }
        }
        let syn = Syntactic::new(Dn { n }, Empty);
        for s in bh_by_weight(&syn, &[], w) {
            out.expect(syn.supp(&s).is_empty(), s.height(), || show_bh(&s, &show_dn, &leaf), String::new, "support over the empty base is empty");
        }
    }
    out.finish()
}

/// The lift of `D ⇒ W` for increasing pairs into binary trees misses
/// `∘(∘(0,1),2)` over the 3-chain. Every preimage would have exactly two
/// collapsing nodes, so weight 2 suffices for an exact check.
pub fn btree_witness(p: &Params) -> SuiteReport {
    let w = p.h_or(3).max(2);
    let mut out = Collector::new("btree-witness", p.seed);
    out.param("weight", w);
    let base = Chain(3);
    let syn = Syntactic::new(IncreasingPairs, base);
    let target = TreeKruskal { base };
    let items = bh_by_weight(&syn, &[0, 1, 2], w);
    let show = |s: &SynTerm<IncreasingPairs, Chain>| show_bh(s, &show_pair, &leaf);
    let mut trees = Vec::with_capacity(items.len());
    for s in &items {
        match nu_plus(s, &PairInclusion, &target) {
            Ok(t) => {
                out.expect(btree_in_theta_d(&t, &base), s.height(), || show(s), || show_tree(&t), "image lies in the linear tree system");
                out.expect(btree_in_tw(&t, &base), s.height(), || show(s), || show_tree(&t), "image lies in TW(X)");
                let nodes = bh_weight(&syn.dilator, s);
                out.expect(node_count(&t) == nodes, s.height(), || show(s), || show_tree(&t), "one tree node per collapsing node");
                trees.push(t);
            }
            Err(e) => {
                out.violation(s.height(), || show(s), || e.to_string(), "lift defined");
                trees.push(BinTree::Leaf(0));
            }
        }
    }
    for (i, s) in items.iter().enumerate() {
        for (j, t) in items.iter().enumerate() {
            let size = s.height() + t.height();
            let ord = syn.compare(s, t);
            out.expect(btree_d_cmp(&trees[i], &trees[j], &base) == ord, size, || show(s), || show(t), "tree order matches the syntactic order");
            let reflects = !btree_w_leq(&trees[i], &trees[j], &base) || ord != Ordering::Greater;
            out.expect(reflects, size, || show(s), || show(t), "lift reflects the order");
        }
    }
    let witness = BinTree::node(BinTree::node(BinTree::Leaf(0), BinTree::Leaf(1)), BinTree::Leaf(2));
    out.expect(btree_in_tw(&witness, &base), 2, || show_tree(&witness), String::new, "witness lies in TW(X)");
    out.expect(!btree_in_theta_d(&witness, &base), 2, || show_tree(&witness), String::new, "witness is not a linear tree");
    let hit = trees.iter().position(|t| *t == witness);
    out.expect(hit.is_none(), 2, || show_tree(&witness), || hit.map(|k| show(&items[k])).unwrap_or_default(), "witness outside the range of the lift");
    out.param("witness", show_tree(&witness));
    out.finish()
}

fn node_count<X>(t: &BinTree<X>) -> usize {
    t.children().map_or(0, |(l, r)| 1 + node_count(l) + node_count(r))
}

pub fn enum_counts(p: &Params) -> SuiteReport {
    let (nmax, h) = (p.n_or(3), p.h_or(4));
    let mut out = Collector::new("enum-counts", p.seed);
    out.param("n", nmax).param("h", h);
    for family in [Family::T, Family::T0, Family::S, Family::S0] {
        for n in 0..=nmax {
            let sys = System::new(family, n);
            let leaves = [0u32, 1];
            let a = match seq_by_height(sys, &leaves, h, DEFAULT_LIMIT) {
                Ok(a) => a,
                Err(e) => {
                    out.violation(h, || format!("{family:?}_{n}"), || e.to_string(), "enumeration fits the budget");
                    continue;
                }
            };
            let b = seq_dfs(sys, &leaves, h, None).unwrap_or_default();
            let ha = histogram(a.iter().map(|s| s.height()));
            let hb = histogram(b.iter().map(|s| s.height()));
            out.expect(ha == hb, h, || format!("{family:?}_{n}: {ha:?}"), || format!("{hb:?}"), "breadth-first and depth-first counts agree");
            let set: HashSet<&SeqTerm<u32>> = a.iter().collect();
            out.expect(set.len() == a.len(), h, || format!("{family:?}_{n}"), String::new, "enumeration is duplicate free");
            out.expect(b.iter().all(|s| set.contains(s)), h, || format!("{family:?}_{n}"), String::new, "same terms");
            out.expect(a.iter().all(|s| sys.validate(s, &Chain(2))), h, || format!("{family:?}_{n}"), String::new, "only well-formed terms");
            out.count(a.len() as u64);
        }
    }
    // Closed forms: T_1(1) and OT0_1 have one term per height.
    let t1 = histogram(seq_terms(System::new(Family::T, 1), &[0u32], h).iter().map(|s| s.height()));
    out.expect(t1 == vec![1; h + 1], h, || format!("{t1:?}"), String::new, "T_1(1) has one term per height");
    let ot1 = histogram(ot_terms(1, true, h).iter().map(|s| s.size()));
    out.expect(ot1 == vec![1; h + 1], h, || format!("{ot1:?}"), String::new, "OT0_1 has one term per size");
    for n in 0..=nmax.min(2) {
        for restricted in [false, true] {
            let a = ot_by_size(n, restricted, h);
            let b = ot_by_shape(n, restricted, h);
            let ha = histogram(a.iter().map(|s| s.size()));
            let hb = histogram(b.iter().map(|s| s.size()));
            out.expect(ha == hb, h, || format!("OT_{n} {ha:?}"), || format!("{hb:?}"), "size-layered and shape-recursive counts agree");
            let sa: HashSet<&OtTerm> = a.iter().collect();
            out.expect(sa.len() == a.len() && b.iter().all(|s| sa.contains(s)), h, || format!("OT_{n}"), String::new, "same binary terms");
            // ot_cmp sorts without ties.
            let mut sorted = a.clone();
            sorted.sort_by(ot_cmp);
            out.expect(sorted.windows(2).all(|w| ot_cmp(&w[0], &w[1]) == Ordering::Less), h, || format!("OT_{n}"), String::new, "sorting finds no ties");
            out.count(a.len() as u64);
        }
    }
    for n in 0..=nmax.min(2) {
        let syn = Syntactic::new(TZero { n }, One);
        let a = bh_closure(&syn, &[0], h);
        let b = bh_by_weight(&syn, &[0], h);
        compare_bh(&mut out, &format!("T0_{n}"), &a, &b, |s| bh_weight(&syn.dilator, s));
        let syn = Syntactic::new(Dn { n }, Empty);
        let a = bh_closure(&syn, &[], h);
        let b = bh_by_weight(&syn, &[], h);
        compare_bh(&mut out, &format!("D_{n}"), &a, &b, |s| bh_weight(&syn.dilator, s));
    }
    out.finish()
}

fn compare_bh<T: Eq + Hash>(out: &mut Collector, name: &str, a: &[T], b: &[T], weight: impl Fn(&T) -> usize) {
    let ha = histogram(a.iter().map(&weight));
    let hb = histogram(b.iter().map(&weight));
    out.expect(ha == hb, 0, || format!("{name}: {ha:?}"), || format!("{hb:?}"), "closure and layered counts agree");
    let sa: HashSet<&T> = a.iter().collect();
    out.expect(sa.len() == a.len() && b.iter().all(|t| sa.contains(t)), 0, || name.to_string(), String::new, "same syntactic terms");
    out.count(a.len() as u64);
}
