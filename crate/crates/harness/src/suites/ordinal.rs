use std::cmp::Ordering;

use ordgap_core::cnf::CnfOrdinal;
use ordgap_core::collapse::{collapse_alpha, collapse_bound, collapse_inverse, index_bound, rank_ot, DAlphaElem};
use ordgap_core::enumerate::{ot_terms, seq_terms};
use ordgap_core::linear::lin_cmp;
use ordgap_core::order::One;
use ordgap_core::ot::{ot_cmp, OtTerm};
use ordgap_core::{Family, SeqTerm, System};
use rand::Rng;

use super::{binary, keyed, Params};
use crate::random::{random_below, rng, SuiteRng};
use crate::report::{Collector, SuiteReport};

/// A random `OT⁰_n` term of at most `size` nodes, built bottom up from
/// random choices with the checked constructor.
fn random_ot(r: &mut SuiteRng, n: u32, size: usize) -> OtTerm {
    fn go(r: &mut SuiteRng, n: u32, size: usize, top: bool) -> OtTerm {
        if size == 0 || r.gen_bool(0.2) {
            return OtTerm::zero();
        }
        for _ in 0..8 {
            let i = if top { 0 } else { r.gen_range(0..n) };
            let left = r.gen_range(0..size);
            let s = go(r, n, left, false);
            let t = go(r, n, size - 1 - left, top);
            if let Ok(u) = OtTerm::theta(i, s, t) {
                return u;
            }
        }
        OtTerm::zero()
    }
    go(r, n, size, true)
}

pub fn order_type(p: &Params) -> SuiteReport {
    let (h, samples) = (p.h_or(8), p.samples_or(10_000));
    let mut out = Collector::new("order-type", p.seed);
    out.param("h", h).param("samples", samples as u64);

    // OT0_1 sorted: position k holds the unique term of size k, ranked k.
    let mut ot1 = ot_terms(1, true, h);
    ot1.sort_by(ot_cmp);
    for (k, s) in ot1.iter().enumerate() {
        out.expect(s.size() == k, k, || binary(s), || k.to_string(), "OT0_1 sorted by size");
        let rank = rank_ot(1, s);
        out.expect(rank.as_ref() == Ok(&CnfOrdinal::nat(k)), k, || binary(s), || format!("{rank:?}"), "rank on OT0_1 is the position");
    }
    out.expect(ot1.len() == h + 1, h, || format!("{} terms", ot1.len()), String::new, "one OT0_1 term per size");

    let mut t1: Vec<SeqTerm<u32>> = seq_terms(System::new(Family::T0, 1), &[0u32], h);
    t1.sort_by(|a, b| lin_cmp(&One, a, b));
    for (k, s) in t1.iter().enumerate() {
        out.expect(s.height() == k, k, || keyed(s), || k.to_string(), "T0_1(1) sorted by height");
    }
    out.expect(t1.len() == h + 1, h, || format!("{} terms", t1.len()), String::new, "one T0_1(1) term per height");

    // rank on OT0_2 against the comparator, below ω^(ω^ω).
    let bound = CnfOrdinal::omega_tower(4, &CnfOrdinal::zero());
    let mut r = rng(p.seed);
    for _ in 0..samples {
        let s = random_ot(&mut r, 2, 12);
        let t = random_ot(&mut r, 2, 12);
        let size = s.size() + t.size();
        match (rank_ot(2, &s), rank_ot(2, &t)) {
            (Ok(a), Ok(b)) => {
                out.expect(a.cmp(&b) == ot_cmp(&s, &t), size, || binary(&s), || binary(&t), "rank is strictly monotone");
                out.expect(a < bound && b < bound, size, || binary(&s), || binary(&t), "rank below omega^omega^omega");
            }
            (a, b) => out.violation(size, || binary(&s), || format!("{a:?} / {b:?}"), "rank defined on OT0_2"),
        }
    }
    out.finish()
}

fn show_d(d: &DAlphaElem<CnfOrdinal>) -> String {
    match d {
        DAlphaElem::Bottom => "0".into(),
        DAlphaElem::Pair(b, g) => format!("({b}, {g})"),
    }
}

fn d_cmp(a: &DAlphaElem<CnfOrdinal>, b: &DAlphaElem<CnfOrdinal>) -> Ordering {
    match (a, b) {
        (DAlphaElem::Bottom, DAlphaElem::Bottom) => Ordering::Equal,
        (DAlphaElem::Bottom, _) => Ordering::Less,
        (_, DAlphaElem::Bottom) => Ordering::Greater,
        (DAlphaElem::Pair(x, g), DAlphaElem::Pair(y, d)) => x.cmp(y).then_with(|| g.cmp(d)),
    }
}

fn d_weight(d: &DAlphaElem<CnfOrdinal>) -> usize {
    match d {
        DAlphaElem::Bottom => 0,
        DAlphaElem::Pair(b, g) => b.weight() + g.weight(),
    }
}

/// The collapse on `D^α(ω^{ω^α})`: range, the two-way collapsing
/// condition, exhaustion through the inverse, and the least value.
pub fn collapse_axioms(p: &Params) -> SuiteReport {
    let samples = p.samples_or(10_000);
    let mut out = Collector::new("collapse-axioms", p.seed);
    out.param("samples", samples as u64).param("alphas", "0, 1, w");
    let mut r = rng(p.seed);
    for alpha in [CnfOrdinal::zero(), CnfOrdinal::one(), CnfOrdinal::omega()] {
        let carrier = collapse_bound(&alpha);
        let index = index_bound(&alpha);
        let theta = |d: &DAlphaElem<CnfOrdinal>| collapse_alpha(&alpha, d).expect("checked domain");
        let zero = theta(&DAlphaElem::Bottom);
        let draw = |r: &mut SuiteRng| {
            if r.gen_bool(0.05) {
                DAlphaElem::Bottom
            } else {
                DAlphaElem::Pair(random_below(r, &index), random_below(r, &carrier))
            }
        };
        for _ in 0..samples {
            let a = draw(&mut r);
            let mut b = draw(&mut r);
            // Bias towards the interesting boundary where the second
            // argument of one side sits near the other side's value.
            if let (DAlphaElem::Pair(beta, _), true) = (&b, r.gen_bool(0.3)) {
                let near = theta(&a);
                let near = if r.gen_bool(0.5) { near } else { near.add(&CnfOrdinal::one()) };
                if near < carrier {
                    b = DAlphaElem::Pair(beta.clone(), near);
                }
            }
            let (ta, tb) = (theta(&a), theta(&b));
            let size = d_weight(&a) + d_weight(&b);
            out.expect(ta < carrier, size, || show_d(&a), || ta.to_string(), "value below omega^omega^alpha");
            out.expect(zero <= ta, size, || show_d(&a), || ta.to_string(), "bottom has the least value");
            let supp_below = |d: &DAlphaElem<CnfOrdinal>, v: &CnfOrdinal| match d {
                DAlphaElem::Bottom => true,
                DAlphaElem::Pair(_, g) => g < v,
            };
            let below_support = matches!(&b, DAlphaElem::Pair(_, g) if ta <= *g);
            let lhs = ta < tb;
            let rhs = (d_cmp(&a, &b) == Ordering::Less && supp_below(&a, &tb)) || below_support;
            out.expect(lhs == rhs, size, || show_d(&a), || show_d(&b), "theta(a) < theta(b) iff (a < b and supp(a) < theta(b)) or theta(a) <= supp(b)");
            out.expect((ta == tb) == (a == b), size, || show_d(&a), || show_d(&b), "theta injective");

            let xi = random_below(&mut r, &carrier);
            let d = collapse_inverse(&xi);
            let back = collapse_alpha(&alpha, &d);
            out.expect(back.as_ref() == Ok(&xi), xi.weight(), || xi.to_string(), || show_d(&d), "every value is theta of its decomposition");
            out.expect(supp_below(&d, &xi), xi.weight(), || xi.to_string(), || show_d(&d), "decomposition support below the value");
        }
    }
    out.finish()
}
