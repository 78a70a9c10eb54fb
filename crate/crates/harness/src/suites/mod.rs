//! Property suites, one per law of the library, with a name registry.

use std::fmt;

use ordgap_core::bh::BhTerm;
use ordgap_core::grammar::{print_keyed, print_nested, print_ot};
use ordgap_core::ot::{DnElem, OtTerm};
use ordgap_core::SeqTerm;

use crate::report::SuiteReport;

mod bh;
mod gap;
mod linear;
mod ordinal;
mod ot;

/// Suite parameters; unset fields take the suite's defaults.
#[derive(Clone, Debug, Default)]
pub struct Params {
    /// Largest index bound checked (all smaller ones are checked too).
    pub n: Option<u32>,
    /// Height bound.
    pub h: Option<usize>,
    /// Largest base order size.
    pub x: Option<u32>,
    /// Number of random samples for randomized suites.
    pub samples: Option<usize>,
    pub seed: u64,
}

impl Params {
    pub fn new(seed: u64) -> Self {
        Params { seed, ..Params::default() }
    }

    pub fn with_n(mut self, n: u32) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_h(mut self, h: usize) -> Self {
        self.h = Some(h);
        self
    }

    pub fn with_x(mut self, x: u32) -> Self {
        self.x = Some(x);
        self
    }

    pub fn with_samples(mut self, k: usize) -> Self {
        self.samples = Some(k);
        self
    }

    fn n_or(&self, d: u32) -> u32 {
        self.n.unwrap_or(d)
    }

    fn h_or(&self, d: usize) -> usize {
        self.h.unwrap_or(d)
    }

    fn x_or(&self, d: u32) -> u32 {
        self.x.unwrap_or(d)
    }

    fn samples_or(&self, d: usize) -> usize {
        self.samples.unwrap_or(d)
    }
}

pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    pub randomized: bool,
    run: fn(&Params) -> SuiteReport,
}

impl Suite {
    pub fn run(&self, p: &Params) -> SuiteReport {
        (self.run)(p)
    }
}

pub const SUITES: &[Suite] = &[
    Suite { name: "lin-order", about: "linear comparator is a strict total order on T_n(X)", randomized: false, run: linear::order },
    Suite { name: "lin-k-bound", about: "k_i(s) < th_i(s) for every well-formed th_i(s)", randomized: false, run: linear::k_bound },
    Suite { name: "lin-functor", about: "renaming along chain embeddings preserves order and supports", randomized: false, run: linear::functor },
    Suite { name: "lin-sigma", about: "the index shift is an order isomorphism onto T_{n+1}(1)", randomized: false, run: linear::sigma },
    Suite { name: "lin-derivative", about: "(T0_{n+1}(X), iota, theta) is a Bachmann-Howard fixed point of T0_n", randomized: false, run: linear::derivative },
    Suite { name: "nu-identity", about: "the lifted linearization T0_n => S0_n is the identity", randomized: false, run: linear::nu_identity },
    Suite { name: "gap-order", about: "gap order is a partial order; k, height and degree are monotone", randomized: false, run: gap::order },
    Suite { name: "gap-oracle", about: "gap order agrees with strong gap embeddability of sequences", randomized: false, run: gap::oracle },
    Suite { name: "gap-sigma", about: "the index shift is an order isomorphism for the gap order", randomized: false, run: gap::sigma },
    Suite { name: "gap-kruskal", about: "kappa on S0_n(S0_{n+1}(X)) satisfies the Kruskal fixed-point laws", randomized: false, run: gap::kruskal },
    Suite { name: "wn-kruskal", about: "kappa_n on W_n(S0_{n+1}(1)) satisfies the Kruskal fixed-point laws", randomized: false, run: gap::wn_kruskal },
    Suite { name: "gap-functor", about: "renaming along quasi embeddings reflects the gap order", randomized: true, run: gap::functor },
    Suite { name: "flatness", about: "support condition for S0_n and W_n along quasi embeddings", randomized: true, run: gap::flatness },
    Suite { name: "ot-order", about: "binary comparator is a strict total order on OT_n", randomized: false, run: ot::order },
    Suite { name: "ot-shift", about: "index shift on OT_n is an order isomorphism; subterm bound", randomized: false, run: ot::shift },
    Suite { name: "ot-derivative", about: "(OT0_{n+1}, theta_n) is a Bachmann-Howard fixed point of D_n", randomized: false, run: ot::derivative },
    Suite { name: "linearization", about: "f_n is an order-reflecting surjection; direct and generic agree", randomized: false, run: ot::linearization },
    Suite { name: "bh-order", about: "syntactic fixed points are linearly ordered", randomized: false, run: bh::order },
    Suite { name: "bh-initial", about: "initial embeddings into the concrete derivatives are isomorphisms", randomized: false, run: bh::initial },
    Suite { name: "bh-unique", about: "round trips between syntactic and concrete derivatives", randomized: false, run: bh::unique },
    Suite { name: "bh-support", about: "syntactic supports are natural and satisfy the support condition", randomized: false, run: bh::support },
    Suite { name: "btree-witness", about: "the tree o(o(0,1),2) is in TW(3) but outside the lifted image", randomized: false, run: bh::btree_witness },
    Suite { name: "enum-counts", about: "independent enumeration strategies agree", randomized: false, run: bh::enum_counts },
    Suite { name: "order-type", about: "OT0_1 and T0_1(1) have type omega; rank is monotone on OT0_2", randomized: true, run: ordinal::order_type },
    Suite { name: "collapse-axioms", about: "explicit ordinal collapse satisfies the fixed-point axioms", randomized: true, run: ordinal::collapse_axioms },
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown suite '{}'", self.0)
    }
}

impl std::error::Error for UnknownSuite {}

pub fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

pub fn run_suite(name: &str, params: &Params) -> Result<SuiteReport, UnknownSuite> {
    find(name).map(|s| s.run(params)).ok_or_else(|| UnknownSuite(name.to_string()))
}

pub(crate) fn keyed(s: &SeqTerm<u32>) -> String {
    print_keyed(s)
}

pub(crate) fn nested(s: &SeqTerm<SeqTerm<u32>>) -> String {
    print_nested(s)
}

pub(crate) fn binary(s: &OtTerm) -> String {
    print_ot(s)
}

pub(crate) fn dn(d: &DnElem<OtTerm>) -> String {
    match d {
        DnElem::Bottom => "0".into(),
        DnElem::Pair(s, t) => format!("({}, {})", print_ot(s), print_ot(t)),
    }
}

/// `bK` for leaves, `c(r1 r2 ..; elem)` for collapsing nodes.
pub fn show_bh<E, X>(s: &BhTerm<E, X>, elem: &dyn Fn(&E) -> String, leaf: &dyn Fn(&X) -> String) -> String {
    match s.parts() {
        None => match s {
            BhTerm::Base(x) => leaf(x),
            BhTerm::Coll(_) => unreachable!(),
        },
        Some((a, e)) => {
            let rs: Vec<String> = a.iter().map(|r| show_bh(r, elem, leaf)).collect();
            format!("c({}; {})", rs.join(" "), elem(e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = SUITES.iter().map(|s| s.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), SUITES.len());
        assert!(run_suite("nope", &Params::default()).is_err());
    }

    #[test]
    fn every_suite_passes_at_small_bounds() {
        for s in SUITES {
            let p = Params::new(3).with_n(1).with_h(2).with_x(2).with_samples(50);
            let r = s.run(&p);
            assert!(r.passed(), "{}: {:?}", s.name, r.violations);
            assert!(r.pairs > 0, "{} checked nothing", s.name);
        }
    }

    #[test]
    fn exhaustive_suites_ignore_the_seed() {
        for s in SUITES.iter().filter(|s| !s.randomized) {
            let a = s.run(&Params::new(1).with_n(1).with_h(2));
            let b = s.run(&Params::new(2).with_n(1).with_h(2));
            assert_eq!(a.pairs, b.pairs, "{}", s.name);
        }
    }
}
