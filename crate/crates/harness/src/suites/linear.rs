use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use ordgap_core::enumerate::seq_terms;
use ordgap_core::kruskal::nu_seq;
use ordgap_core::linear::{lin_cmp, sigma_lin, t_rename, t_supp, theta_lin, theta_lin_inverse};
use ordgap_core::order::{Chain, One};
use ordgap_core::seq::Terms;
use ordgap_core::{Family, SeqTerm, System};

use super::{keyed, nested, Params};
use crate::check::{check_linear, Carrier};
use crate::report::{Collector, SuiteReport};

fn chain_leaves(k: u32) -> Vec<u32> {
    (0..k).collect()
}

pub fn order(p: &Params) -> SuiteReport {
    let (nmax, h, xmax) = (p.n_or(3), p.h_or(4), p.x_or(3));
    let mut out = Collector::new("lin-order", p.seed);
    out.param("n", nmax).param("h", h).param("x", xmax);
    for n in 0..=nmax {
        for k in 1..=xmax {
            let items = seq_terms(System::new(Family::T, n), &chain_leaves(k), h);
            let c = Carrier { items: &items, show: &keyed, height: &|s: &SeqTerm<u32>| s.height() };
            check_linear(&c, |a, b| lin_cmp(&Chain(k), a, b), &mut out);
        }
    }
    out.finish()
}

pub fn k_bound(p: &Params) -> SuiteReport {
    let (nmax, h, xmax) = (p.n_or(3), p.h_or(4), p.x_or(2));
    let mut out = Collector::new("lin-k-bound", p.seed);
    out.param("n", nmax).param("h", h).param("x", xmax);
    let base = Chain(xmax);
    for s in seq_terms(System::new(Family::T, nmax), &chain_leaves(xmax), h) {
        for i in 0..nmax {
            let Ok(t) = SeqTerm::theta(i, s.clone()) else { continue };
            let k = s.k(i as i32);
            out.expect(lin_cmp(&base, &k, &t) == Ordering::Less, k.height() + t.height(), || keyed(&k), || keyed(&t), "k_i(s) < th_i(s)");
        }
    }
    out.finish()
}

/// All strictly increasing maps `0..k → 0..m`.
pub(crate) fn chain_embeddings(k: u32, m: u32) -> Vec<Vec<u32>> {
    fn go(k: u32, m: u32, from: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k as usize {
            out.push(cur.clone());
            return;
        }
        for v in from..m {
            cur.push(v);
            go(k, m, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, m, 0, &mut Vec::new(), &mut out);
    out
}

pub fn functor(p: &Params) -> SuiteReport {
    let (nmax, h) = (p.n_or(3), p.h_or(3));
    let mut out = Collector::new("lin-functor", p.seed);
    out.param("n", nmax).param("h", h).param("from", 2).param("to", 3);
    let items = seq_terms(System::new(Family::T, nmax), &chain_leaves(2), h);
    for f in chain_embeddings(2, 3) {
        let image: Vec<SeqTerm<u32>> = items.iter().map(|s| t_rename(|x| f[x as usize], s.clone())).collect();
        for (s, fs) in items.iter().zip(&image) {
            let supp: Vec<u32> = t_supp(s).iter().map(|&x| f[x as usize]).collect();
            out.expect(t_supp(fs) == supp, s.height(), || keyed(s), || keyed(fs), "support naturality");
            out.expect(fs.deg() == s.deg(), s.height(), || keyed(s), || keyed(fs), "degree preserved");
        }
        for (i, s) in items.iter().enumerate() {
            for (j, t) in items.iter().enumerate() {
                let same = lin_cmp(&Chain(2), s, t) == lin_cmp(&Chain(3), &image[i], &image[j]);
                out.expect(same, s.height() + t.height(), || keyed(s), || keyed(t), "renaming preserves the order");
            }
        }
    }
    out.finish()
}

pub fn sigma(p: &Params) -> SuiteReport {
    let (nmax, h) = (p.n_or(2), p.h_or(3));
    let mut out = Collector::new("lin-sigma", p.seed);
    out.param("n", nmax).param("h", h);
    for n in 0..=nmax {
        let inner_sys = System::new(Family::T0, n + 1);
        let inner = seq_terms(inner_sys, &[0u32], h);
        let inner_order = Terms::new(inner_sys, One);
        let domain = seq_terms(System::new(Family::T, n), &inner, h);
        let mut images = Vec::with_capacity(domain.len());
        let mut seen: HashMap<SeqTerm<u32>, usize> = HashMap::new();
        let target_sys = System::new(Family::T, n + 1);
        for (k, s) in domain.iter().enumerate() {
            match sigma_lin(n, s) {
                Ok(u) => {
                    out.expect(target_sys.validate(&u, &One), s.height(), || nested(s), || keyed(&u), "image lies in T_{n+1}(1)");
                    if let Some(&other) = seen.get(&u) {
                        out.violation(s.height(), || nested(s), || nested(&domain[other]), "injective");
                    }
                    seen.insert(u.clone(), k);
                    images.push(u);
                }
                Err(e) => {
                    out.violation(s.height(), || nested(s), || e.to_string(), "defined on T_n(T0_{n+1}(1))");
                    images.push(SeqTerm::base(0));
                }
            }
        }
        for t in seq_terms(target_sys, &[0u32], h) {
            out.expect(seen.contains_key(&t), t.height(), || keyed(&t), String::new, "surjective onto the bounded fragment");
        }
        for (i, s) in domain.iter().enumerate() {
            for (j, t) in domain.iter().enumerate() {
                let ok = lin_cmp(&inner_order, s, t) == lin_cmp(&One, &images[i], &images[j]);
                out.expect(ok, s.height() + t.height(), || nested(s), || nested(t), "preserves and reflects the order");
            }
        }
    }
    out.finish()
}

pub fn derivative(p: &Params) -> SuiteReport {
    let (nmax, h, k) = (p.n_or(2), p.h_or(3), p.x_or(2));
    let mut out = Collector::new("lin-derivative", p.seed);
    out.param("n", nmax).param("h", h).param("x", k);
    let base = Chain(k);
    for n in 0..=nmax {
        let z_sys = System::new(Family::T0, n + 1);
        let z_order = Terms::new(z_sys, base);
        let zs = seq_terms(z_sys, &chain_leaves(k), h);
        let sigmas = seq_terms(System::new(Family::T0, n), &zs, h);
        let values: Vec<SeqTerm<u32>> = sigmas.iter().map(|s| theta_lin(n, s).expect("degree at most zero")).collect();
        // iota is an embedding below every theta value.
        for x in 0..k {
            for y in 0..k {
                let ok = lin_cmp(&base, &SeqTerm::base(x), &SeqTerm::base(y)) == x.cmp(&y);
                out.expect(ok, 0, || format!("b{x}"), || format!("b{y}"), "iota is an embedding");
            }
            for (s, v) in sigmas.iter().zip(&values) {
                let ok = lin_cmp(&base, &SeqTerm::base(x), v) == Ordering::Less;
                out.expect(ok, s.height(), || format!("b{x}"), || nested(s), "iota below theta");
            }
        }
        for (i, s) in sigmas.iter().enumerate() {
            let below = lin_cmp(&base, s.k_base(), &values[i]) == Ordering::Less;
            out.expect(below, s.height(), || nested(s), || keyed(&values[i]), "support below its value");
            for (j, t) in sigmas.iter().enumerate() {
                if lin_cmp(&z_order, s, t) == Ordering::Less && lin_cmp(&base, s.k_base(), &values[j]) == Ordering::Less {
                    let ok = lin_cmp(&base, &values[i], &values[j]) == Ordering::Less;
                    out.expect(ok, s.height() + t.height(), || nested(s), || nested(t), "collapsing inequality");
                } else {
                    out.count(1);
                }
            }
        }
        // Every element is iota(x) or theta(s) with a lower support.
        let value_set: HashSet<&SeqTerm<u32>> = values.iter().collect();
        for z in &zs {
            match theta_lin_inverse(n, z) {
                Ok(Err(x)) => out.expect(*z == SeqTerm::base(x), 0, || keyed(z), String::new, "leaf decomposition"),
                Ok(Ok(s)) => {
                    let back = theta_lin(n, &s);
                    out.expect(back.as_ref() == Ok(z), z.height(), || keyed(z), || nested(&s), "theta of the preimage");
                    out.expect(s.k_base().height() < z.height(), z.height(), || keyed(z), || nested(&s), "height decreases through supports");
                    out.expect(value_set.contains(z), z.height(), || keyed(z), String::new, "bounded preimage enumerated");
                }
                Err(e) => out.violation(z.height(), || keyed(z), || e.to_string(), "exhaustion"),
            }
        }
    }
    out.finish()
}

pub fn nu_identity(p: &Params) -> SuiteReport {
    let (nmax, h) = (p.n_or(3), p.h_or(5));
    let mut out = Collector::new("nu-identity", p.seed);
    out.param("n", nmax).param("h", h);
    for n in 0..=nmax {
        for s in seq_terms(System::new(Family::T0, n), &[0u32], h) {
            match nu_seq(n, 1, &s) {
                Ok(u) => out.expect(u == s, s.height(), || keyed(&s), || keyed(&u), "identity on T0_n(1)"),
                Err(e) => out.violation(s.height(), || keyed(&s), || e.to_string(), "defined on T0_n(1)"),
            }
        }
    }
    out.finish()
}
