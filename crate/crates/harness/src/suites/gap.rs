use std::collections::{HashMap, HashSet};

use ordgap_core::enumerate::seq_terms;
use ordgap_core::gap::{gap_embed_oracle, gap_leq, gap_leq_view, kappa_gap, kappa_n, kappa_n_inverse, s_rename, s_supp, sigma_gap, wn_leq, WnElem};
use ordgap_core::grammar::print_sequence;
use ordgap_core::order::{One, PartialOrder, Poset};
use ordgap_core::seq::{Index, SeqView, Terms};
use ordgap_core::{Family, SeqTerm, System};
use rand::Rng;

use super::{keyed, nested, Params};
use crate::check::{check_partial, Carrier};
use crate::random::{random_quasi_embedding, rng, SuiteRng};
use crate::report::{Collector, SuiteReport};

/// Chains and antichains of every size up to `xmax`, without repeats.
fn small_posets(xmax: u32) -> Vec<(String, Poset)> {
    let mut out = Vec::new();
    for k in 1..=xmax {
        out.push((format!("chain:{k}"), Poset::chain(k)));
        if k > 1 {
            out.push((format!("anti:{k}"), Poset::antichain(k)));
        }
    }
    out
}

fn show_wn(w: &WnElem<SeqTerm<u32>>) -> String {
    match w {
        WnElem::Bottom => "0".into(),
        WnElem::Pair(s, t) => format!("({}, {})", keyed(s), keyed(t)),
    }
}

fn wn_height(w: &WnElem<SeqTerm<u32>>) -> usize {
    match w {
        WnElem::Bottom => 0,
        WnElem::Pair(s, t) => s.height() + t.height(),
    }
}

pub fn order(p: &Params) -> SuiteReport {
    let (nmax, h, xmax) = (p.n_or(3), p.h_or(5), p.x_or(2));
    let mut out = Collector::new("gap-order", p.seed);
    out.param("n", nmax).param("h", h).param("x", xmax);
    for (_, base) in small_posets(xmax) {
        let leaves: Vec<u32> = (0..base.size()).collect();
        for n in 0..=nmax {
            let items = seq_terms(System::new(Family::S, n), &leaves, h);
            let c = Carrier { items: &items, show: &keyed, height: &|s: &SeqTerm<u32>| s.height() };
            let leq = check_partial(&c, |a, b| gap_leq(&base, a, b), &mut out);
            for (i, s) in items.iter().enumerate() {
                for (j, t) in items.iter().enumerate() {
                    if !leq.get(i, j) {
                        continue;
                    }
                    let size = s.height() + t.height();
                    out.expect(s.height() <= t.height(), size, || keyed(s), || keyed(t), "height monotone");
                    out.expect(s.deg() <= t.deg(), size, || keyed(s), || keyed(t), "degree monotone");
                    out.expect(base.leq(s.k_base(), t.k_base()), size, || keyed(s), || keyed(t), "supports are normal");
                    for k in 0..=nmax as i32 {
                        let (ks, kt) = (s.k(k), t.k(k));
                        out.expect(gap_leq(&base, &ks, &kt), size, || keyed(s), || keyed(t), "k_i monotone");
                    }
                }
            }
        }
    }
    out.finish()
}

/// All sequences over `0..n` of length at most `len`.
fn sequences(n: u32, len: usize) -> Vec<Vec<Index>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for s in &layer {
            for i in 0..n {
                let mut t: Vec<Index> = s.clone();
                t.push(i);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// The comparator runs on raw index chains, so it is checked against the
/// embedding search on every sequence, not only on well-formed terms.
pub fn oracle(p: &Params) -> SuiteReport {
    let (nmax, len) = (p.n_or(3), p.h_or(6));
    let mut out = Collector::new("gap-oracle", p.seed);
    out.param("n", nmax).param("len", len);
    let mut terms_checked = 0u64;
    for n in 1..=nmax {
        let seqs = sequences(n, len);
        let sys = System::new(Family::S, n);
        let valid: Vec<bool> = seqs.iter().map(|u| sys.check_indices(u).is_ok()).collect();
        for (a, u) in seqs.iter().enumerate() {
            for (b, v) in seqs.iter().enumerate() {
                let fast = gap_leq_view(&One, SeqView { indices: u, leaf: &0 }, SeqView { indices: v, leaf: &0 });
                let slow = gap_embed_oracle(u, v);
                if valid[a] && valid[b] {
                    terms_checked += 1;
                }
                out.expect(fast == slow, u.len() + v.len(), || print_sequence(u), || print_sequence(v), "gap order agrees with strong gap embeddability");
            }
        }
    }
    out.param("term_pairs", terms_checked);
    out.finish()
}

pub fn sigma(p: &Params) -> SuiteReport {
    let (nmax, h) = (p.n_or(2), p.h_or(3));
    let mut out = Collector::new("gap-sigma", p.seed);
    out.param("n", nmax).param("h", h);
    for n in 0..=nmax {
        let inner_sys = System::new(Family::S0, n + 1);
        let inner = seq_terms(inner_sys, &[0u32], h);
        let inner_order = Terms::new(inner_sys, One);
        let domain = seq_terms(System::new(Family::S, n), &inner, h);
        let target_sys = System::new(Family::S, n + 1);
        let mut images = Vec::with_capacity(domain.len());
        let mut seen: HashMap<SeqTerm<u32>, usize> = HashMap::new();
        for (k, s) in domain.iter().enumerate() {
            match sigma_gap(n, s) {
                Ok(u) => {
                    out.expect(target_sys.validate(&u, &One), s.height(), || nested(s), || keyed(&u), "image lies in S_{n+1}(1)");
                    if let Some(&other) = seen.get(&u) {
                        out.violation(s.height(), || nested(s), || nested(&domain[other]), "injective");
                    }
                    seen.insert(u.clone(), k);
                    images.push(u);
                }
                Err(e) => {
                    out.violation(s.height(), || nested(s), || e.to_string(), "defined on S_n(S0_{n+1}(1))");
                    images.push(SeqTerm::base(0));
                }
            }
        }
        for t in seq_terms(target_sys, &[0u32], h) {
            out.expect(seen.contains_key(&t), t.height(), || keyed(&t), String::new, "surjective onto the bounded fragment");
        }
        for (i, s) in domain.iter().enumerate() {
            for (j, t) in domain.iter().enumerate() {
                let ok = gap_leq(&inner_order, s, t) == gap_leq(&One, &images[i], &images[j]);
                out.expect(ok, s.height() + t.height(), || nested(s), || nested(t), "preserves and reflects the order");
            }
        }
    }
    out.finish()
}

/// Laws of `(S⁰_{n+1}(X), ι, κⁿ)` as a Kruskal fixed point of `S⁰_n`.
pub fn kruskal(p: &Params) -> SuiteReport {
    let (nmax, h, xmax) = (p.n_or(2), p.h_or(3), p.x_or(2));
    let mut out = Collector::new("gap-kruskal", p.seed);
    out.param("n", nmax).param("h", h).param("x", xmax);
    for (_, base) in small_posets(xmax) {
        let leaves: Vec<u32> = (0..base.size()).collect();
        for n in 0..=nmax {
            let z_sys = System::new(Family::S0, n + 1);
            let z_order = Terms::new(z_sys, base.clone());
            let zs = seq_terms(z_sys, &leaves, h);
            let domain = seq_terms(System::new(Family::S0, n), &zs, h);
            let mut values = Vec::with_capacity(domain.len());
            for s in &domain {
                match kappa_gap(n, s) {
                    Ok(v) => {
                        out.expect(z_sys.validate(&v, &base), s.height(), || nested(s), || keyed(&v), "kappa lands in S0_{n+1}(X)");
                        values.push(v);
                    }
                    Err(e) => {
                        out.violation(s.height(), || nested(s), || e.to_string(), "kappa defined");
                        values.push(SeqTerm::base(0));
                    }
                }
            }
            for &x in &leaves {
                let ix = SeqTerm::base(x);
                for &y in &leaves {
                    let ok = gap_leq(&base, &ix, &SeqTerm::base(y)) == base.leq(&x, &y);
                    out.expect(ok, 0, || format!("b{x}"), || format!("b{y}"), "iota is an embedding");
                }
                for (t, kt) in domain.iter().zip(&values) {
                    let ok = gap_leq(&base, &ix, kt) == gap_leq(&base, &ix, t.k_base());
                    out.expect(ok, t.height(), || format!("b{x}"), || nested(t), "iota below kappa iff below the support");
                    out.expect(!gap_leq(&base, kt, &ix), t.height(), || nested(t), || format!("b{x}"), "kappa never below iota");
                }
            }
            for (i, s) in domain.iter().enumerate() {
                for (j, t) in domain.iter().enumerate() {
                    let lhs = gap_leq(&base, &values[i], &values[j]);
                    let rhs = gap_leq(&z_order, s, t) || gap_leq(&base, &values[i], t.k_base());
                    out.expect(lhs == rhs, s.height() + t.height(), || nested(s), || nested(t), "kappa(s) <= kappa(t) iff s <= t or kappa(s) <= k(t)");
                }
            }
            // Surjectivity onto the bounded fragment: every non-leaf is a kappa value.
            let hit: HashSet<&SeqTerm<u32>> = values.iter().collect();
            for z in &zs {
                if !z.is_base() {
                    out.expect(hit.contains(z), z.height(), || keyed(z), String::new, "every non-leaf is a kappa value");
                }
            }
        }
    }
    out.finish()
}

/// `κ_n` on `W_n(S⁰_{n+1}(1))`: the fixed-point equivalence, bijectivity and
/// the height criterion.
pub fn wn_kruskal(p: &Params) -> SuiteReport {
    let (nmax, h) = (p.n_or(2), p.h_or(3));
    let mut out = Collector::new("wn-kruskal", p.seed);
    out.param("n", nmax).param("h", h);
    for n in 0..=nmax {
        let z_sys = System::new(Family::S0, n + 1);
        let z_order = Terms::new(z_sys, One);
        let zs = seq_terms(z_sys, &[0u32], h);
        let labels = seq_terms(System::new(Family::S0, n), &[0u32], h);
        let mut elems = vec![WnElem::Bottom];
        for s in &labels {
            for t in &zs {
                elems.push(WnElem::Pair(s.clone(), t.clone()));
            }
        }
        let mut values = Vec::with_capacity(elems.len());
        for w in &elems {
            match kappa_n(n, w) {
                Ok(v) => {
                    out.expect(z_sys.validate(&v, &One), wn_height(w), || show_wn(w), || keyed(&v), "kappa_n lands in S0_{n+1}(1)");
                    let back = kappa_n_inverse(n, &v);
                    out.expect(back.as_ref() == Ok(w), wn_height(w), || show_wn(w), || keyed(&v), "kappa_n_inverse after kappa_n");
                    values.push(v);
                }
                Err(e) => {
                    out.violation(wn_height(w), || show_wn(w), || e.to_string(), "kappa_n defined");
                    values.push(SeqTerm::base(0));
                }
            }
        }
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let lhs = gap_leq(&One, &values[i], &values[j]);
                let below_support = matches!(b, WnElem::Pair(_, t) if gap_leq(&One, &values[i], t));
                let rhs = wn_leq(a, b, &z_order) || below_support;
                out.expect(lhs == rhs, wn_height(a) + wn_height(b), || show_wn(a), || show_wn(b), "kappa_n equivalence");
            }
        }
        for z in &zs {
            match kappa_n_inverse(n, z) {
                Ok(w) => {
                    let back = kappa_n(n, &w);
                    out.expect(back.as_ref() == Ok(z), z.height(), || keyed(z), || show_wn(&w), "kappa_n after kappa_n_inverse");
                    if let WnElem::Pair(_, t) = &w {
                        out.expect(t.height() < z.height(), z.height(), || keyed(z), || show_wn(&w), "height decreases through supports");
                    }
                }
                Err(e) => out.violation(z.height(), || keyed(z), || e.to_string(), "kappa_n surjective"),
            }
        }
    }
    out.finish()
}

fn is_monotone(x: &Poset, y: &Poset, f: &[u32]) -> bool {
    (0..x.size()).all(|a| (0..x.size()).all(|b| !x.leq(&a, &b) || y.leq(&f[a as usize], &f[b as usize])))
}

pub fn functor(p: &Params) -> SuiteReport {
    let (nmax, h, samples) = (p.n_or(2), p.h_or(3), p.samples_or(200));
    let mut out = Collector::new("gap-functor", p.seed);
    out.param("n", nmax).param("h", h).param("samples", samples as u64).param("max_size", 4);
    let mut r = rng(p.seed);
    for _ in 0..samples {
        let (x, y, f) = random_quasi_embedding(&mut r, 4);
        let n = r.gen_range(0..=nmax);
        let leaves: Vec<u32> = (0..x.size()).collect();
        let items = seq_terms(System::new(Family::S, n), &leaves, h);
        let image: Vec<SeqTerm<u32>> = items.iter().map(|s| s_rename(|l| f[l as usize], s.clone())).collect();
        let monotone = is_monotone(&x, &y, &f);
        for (s, fs) in items.iter().zip(&image) {
            let supp: Vec<u32> = s_supp(s).iter().map(|&l| f[l as usize]).collect();
            out.expect(s_supp(fs) == supp, s.height(), || keyed(s), || keyed(fs), "support naturality");
        }
        for (i, s) in items.iter().enumerate() {
            for (j, t) in items.iter().enumerate() {
                let below = gap_leq(&x, s, t);
                let image_below = gap_leq(&y, &image[i], &image[j]);
                let size = s.height() + t.height();
                out.expect(!image_below || below, size, || keyed(s), || keyed(t), "renaming reflects the order");
                if monotone {
                    out.expect(!below || image_below, size, || keyed(s), || keyed(t), "renaming along an embedding preserves the order");
                }
            }
        }
    }
    out.finish()
}

/// A random `S⁰_n` term with the given leaf, by rejection.
fn random_s0(r: &mut SuiteRng, n: u32, max_height: usize, leaf: u32) -> SeqTerm<u32> {
    let sys = System::new(Family::S0, n);
    loop {
        let len = r.gen_range(0..=max_height);
        let ix: Vec<Index> = (0..len).map(|_| r.gen_range(0..n.max(1))).collect();
        if sys.check_indices(&ix).is_ok() {
            return SeqTerm::from_parts(ix, leaf).expect("checked indices");
        }
    }
}

/// The support condition along quasi embeddings, for `S⁰_n` and `W_n`: an
/// element whose support lies in the range has a preimage, found by
/// searching the enumerated source. Elements with support outside the range
/// must have none.
pub fn flatness(p: &Params) -> SuiteReport {
    let (nmax, h, samples) = (p.n_or(3), p.h_or(4), p.samples_or(1000));
    let mut out = Collector::new("flatness", p.seed);
    out.param("n", nmax).param("h", h).param("samples", samples as u64).param("max_size", 6);
    let mut r = rng(p.seed);
    for _ in 0..samples {
        let (x, y, f) = random_quasi_embedding(&mut r, 6);
        let n = r.gen_range(1..=nmax.max(1));
        let leaf = r.gen_range(0..y.size());
        let in_range = f.contains(&leaf);
        let target = random_s0(&mut r, n, h, leaf);
        let leaves: Vec<u32> = (0..x.size()).collect();
        let source = seq_terms(System::new(Family::S0, n), &leaves, target.height());
        let pre = source.iter().find(|s| s_rename(|l| f[l as usize], (*s).clone()) == target);
        let clause = if in_range { "support in range has a preimage" } else { "support outside range has no preimage" };
        out.expect(pre.is_some() == in_range, target.height(), || keyed(&target), || format!("f = {f:?}"), clause);

        // W_n: Bottom always has a preimage; Pair(s, y) iff y is in range.
        let label = random_s0(&mut r, n, h, 0);
        let w = WnElem::Pair(label.clone(), leaf);
        let labels = seq_terms(System::new(Family::S0, n), &[0u32], label.height());
        let found = labels.iter().any(|s| leaves.iter().any(|&l| WnElem::Pair(s.clone(), f[l as usize]) == w));
        let show = || format!("({}, b{leaf})", keyed(&label));
        out.expect(found == in_range, label.height(), show, || format!("f = {f:?}"), clause);
        out.count(1);
        let bottom: WnElem<u32> = WnElem::Bottom;
        out.expect(bottom.clone().map(|l: u32| f[l as usize]) == bottom, 0, || "0".into(), String::new, "bottom has a preimage");

        // W(f) reflects the order on a few random pairs.
        for _ in 0..4 {
            let (a, b) = (r.gen_range(0..x.size()), r.gen_range(0..x.size()));
            let (s, t) = (random_s0(&mut r, n, 2, 0), random_s0(&mut r, n, 2, 0));
            let wa = WnElem::Pair(s.clone(), a);
            let wb = WnElem::Pair(t.clone(), b);
            let img = (wa.clone().map(|l| f[l as usize]), wb.clone().map(|l| f[l as usize]));
            let ok = !wn_leq(&img.0, &img.1, &y) || wn_leq(&wa, &wb, &x);
            out.expect(ok, s.height() + t.height(), || format!("({}, b{a})", keyed(&s)), || format!("({}, b{b})", keyed(&t)), "W_n(f) reflects the order");
        }
    }
    out.finish()
}
