use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use ordgap_core::enumerate::{ot_terms, seq_terms};
use ordgap_core::gap::gap_leq;
use ordgap_core::kruskal::f_lin_generic;
use ordgap_core::order::One;
use ordgap_core::ot::{f_lin, ot_cmp, theta_ot, theta_ot_inverse, DnElem, OtTerm};
use ordgap_core::{Family, SeqTerm, System};

use super::{binary, dn, keyed, Params};
use crate::check::{check_linear, Carrier};
use crate::report::{Collector, SuiteReport};

pub fn order(p: &Params) -> SuiteReport {
    let (nmax, h) = (p.n_or(2), p.h_or(4));
    let mut out = Collector::new("ot-order", p.seed);
    out.param("n", nmax).param("size", h);
    for n in 0..=nmax {
        let items = ot_terms(n, false, h);
        let c = Carrier { items: &items, show: &binary, height: &|s: &OtTerm| s.size() };
        check_linear(&c, ot_cmp, &mut out);
    }
    out.finish()
}

pub fn shift(p: &Params) -> SuiteReport {
    let (nmax, h) = (p.n_or(2), p.h_or(4));
    let mut out = Collector::new("ot-shift", p.seed);
    out.param("n", nmax).param("size", h);
    for n in 0..=nmax {
        let items = ot_terms(n, false, h);
        let shifted: Vec<OtTerm> = items.iter().map(OtTerm::plus).collect();
        for (s, u) in items.iter().zip(&shifted) {
            out.expect(u.validate(n + 1, false), s.size(), || binary(s), || binary(u), "shift lands in OT_{n+1}");
            out.expect(u.minus().as_ref() == Ok(s), s.size(), || binary(s), || binary(u), "minus after plus");
            if let Some((_, _, t)) = s.parts() {
                out.expect(ot_cmp(t, s) == Ordering::Less, s.size(), || binary(t), || binary(s), "right subterm below the term");
            }
        }
        for (i, s) in items.iter().enumerate() {
            for (j, t) in items.iter().enumerate() {
                let ok = ot_cmp(s, t) == ot_cmp(&shifted[i], &shifted[j]);
                out.expect(ok, s.size() + t.size(), || binary(s), || binary(t), "shift preserves and reflects the order");
            }
        }
        // The image is exactly the terms using no index 0.
        let image: HashSet<&OtTerm> = shifted.iter().collect();
        for u in ot_terms(n + 1, false, h) {
            let zero_free = u.minus().is_ok();
            out.expect(image.contains(&u) == zero_free, u.size(), || binary(&u), String::new, "image of the shift is the zero-free terms");
        }
    }
    out.finish()
}

fn dn_ot_cmp(a: &DnElem<OtTerm>, b: &DnElem<OtTerm>) -> Ordering {
    match (a, b) {
        (DnElem::Bottom, DnElem::Bottom) => Ordering::Equal,
        (DnElem::Bottom, _) => Ordering::Less,
        (_, DnElem::Bottom) => Ordering::Greater,
        (DnElem::Pair(s, x), DnElem::Pair(t, y)) => ot_cmp(s, t).then_with(|| ot_cmp(x, y)),
    }
}

fn dn_size(d: &DnElem<OtTerm>) -> usize {
    match d {
        DnElem::Bottom => 0,
        DnElem::Pair(s, t) => s.size() + t.size(),
    }
}

/// `(OT⁰_{n+1}, ϑ_n)` over the empty base: collapsing inequality and the
/// exhaustion criterion with size as the height.
pub fn derivative(p: &Params) -> SuiteReport {
    let (nmax, h) = (p.n_or(2), p.h_or(4));
    let mut out = Collector::new("ot-derivative", p.seed);
    out.param("n", nmax).param("size", h);
    for n in 0..=nmax {
        let zs = ot_terms(n + 1, true, h);
        let labels = ot_terms(n, true, h);
        let mut elems = vec![DnElem::Bottom];
        for a in &labels {
            for t in &zs {
                if a.size() + t.size() < h {
                    elems.push(DnElem::Pair(a.clone(), t.clone()));
                }
            }
        }
        let mut values = Vec::with_capacity(elems.len());
        for d in &elems {
            match theta_ot(n, d) {
                Ok(v) => {
                    out.expect(v.validate(n + 1, true), dn_size(d), || dn(d), || binary(&v), "value lies in OT0_{n+1}");
                    values.push(v);
                }
                Err(e) => {
                    out.violation(dn_size(d), || dn(d), || e.to_string(), "theta defined on D_n(OT0_{n+1})");
                    values.push(OtTerm::zero());
                }
            }
        }
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let supp_below = match a {
                    DnElem::Bottom => true,
                    DnElem::Pair(_, t) => ot_cmp(t, &values[j]) == Ordering::Less,
                };
                let size = dn_size(a) + dn_size(b);
                if dn_ot_cmp(a, b) == Ordering::Less && supp_below {
                    let ok = ot_cmp(&values[i], &values[j]) == Ordering::Less;
                    out.expect(ok, size, || dn(a), || dn(b), "collapsing inequality");
                } else {
                    out.count(1);
                }
                if i != j {
                    out.expect(values[i] != values[j], size, || dn(a), || dn(b), "theta injective");
                }
            }
        }
        for z in &zs {
            match theta_ot_inverse(z) {
                Ok(d) => {
                    let back = theta_ot(n, &d);
                    out.expect(back.as_ref() == Ok(z), z.size(), || binary(z), || dn(&d), "theta of the decomposition");
                    if let DnElem::Pair(_, t) = &d {
                        out.expect(t.size() < z.size(), z.size(), || binary(z), || dn(&d), "size decreases through supports");
                    }
                }
                Err(e) => out.violation(z.size(), || binary(z), || e.to_string(), "exhaustion"),
            }
        }
    }
    out.finish()
}

/// `f_n` directly and through the lifted linearization: agreement, order
/// reflection, surjectivity onto `S⁰_n(1)` up to a height.
pub fn linearization(p: &Params) -> SuiteReport {
    let (nmax, h) = (p.n_or(3), p.h_or(4));
    let target_h = h + 1;
    let mut out = Collector::new("linearization", p.seed);
    out.param("n", nmax).param("size", h).param("target_height", target_h);
    for n in 1..=nmax {
        let items = ot_terms(n, true, h);
        let mut direct = Vec::with_capacity(items.len());
        let mut generic = Vec::with_capacity(items.len());
        for s in &items {
            let a = f_lin(n, s);
            let b = f_lin_generic(n, s);
            match (&a, &b) {
                (Ok(x), Ok(y)) => out.expect(x == y, s.size(), || binary(s), || format!("{} vs {}", keyed(x), keyed(y)), "direct and generic agree"),
                _ => out.violation(s.size(), || binary(s), || format!("{a:?} / {b:?}"), "both defined on OT0_n"),
            }
            direct.push(a.unwrap_or_else(|_| SeqTerm::base(0)));
            generic.push(b.unwrap_or_else(|_| SeqTerm::base(0)));
        }
        for (i, s) in items.iter().enumerate() {
            for (j, t) in items.iter().enumerate() {
                let below = ot_cmp(s, t) != Ordering::Greater;
                let size = s.size() + t.size();
                out.expect(!gap_leq(&One, &direct[i], &direct[j]) || below, size, || binary(s), || binary(t), "direct map reflects the order");
                out.expect(!gap_leq(&One, &generic[i], &generic[j]) || below, size, || binary(s), || binary(t), "generic map reflects the order");
            }
        }
        // Preimages: OT0_n terms of size at most the target height suffice,
        // since f_n maps size onto height.
        let mut hit: HashMap<SeqTerm<u32>, OtTerm> = HashMap::new();
        for s in ot_terms(n, true, target_h) {
            if let Ok(u) = f_lin(n, &s) {
                out.expect(u.height() == s.size(), s.size(), || binary(&s), || keyed(&u), "height of the image is the size");
                hit.entry(u).or_insert(s);
            }
        }
        for u in seq_terms(System::new(Family::S0, n), &[0u32], target_h) {
            out.expect(hit.contains_key(&u), u.height(), || keyed(&u), String::new, "every S0_n(1) term has a preimage");
        }
    }
    out.finish()
}
