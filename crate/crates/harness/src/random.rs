//! Seeded generators for posets, quasi embeddings and ordinals.

use ordgap_core::cnf::CnfOrdinal;
use ordgap_core::order::{is_quasi_embedding, Poset};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type SuiteRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A poset on `size` points generated by random pairs `a < b` (`a < b` as
/// numbers, so no cycles) and closed transitively.
pub fn random_poset(rng: &mut SuiteRng, size: u32) -> Poset {
    let mut pairs = Vec::new();
    for a in 0..size {
        for b in a + 1..size {
            if rng.gen_bool(0.3) {
                pairs.push((a, b));
            }
        }
    }
    // Shuffle point names so the order is not always a sub-order of 0 < 1 < ...
    let mut names: Vec<u32> = (0..size).collect();
    names.shuffle(rng);
    let pairs: Vec<(u32, u32)> = pairs.into_iter().map(|(a, b)| (names[a as usize], names[b as usize])).collect();
    Poset::generated(size, &pairs).expect("acyclic by construction")
}

/// Random posets `X`, `Y` with `|X| <= |Y| <= max_size` and an
/// order-reflecting injection `X → Y`, by rejection sampling.
pub fn random_quasi_embedding(rng: &mut SuiteRng, max_size: u32) -> (Poset, Poset, Vec<u32>) {
    loop {
        let ny = rng.gen_range(1..=max_size);
        let nx = rng.gen_range(1..=ny);
        let x = random_poset(rng, nx);
        let y = random_poset(rng, ny);
        for _ in 0..50 {
            let mut img: Vec<u32> = (0..ny).collect();
            img.shuffle(rng);
            img.truncate(nx as usize);
            if is_quasi_embedding(&x, &y, &img) {
                return (x, y, img);
            }
        }
    }
}

/// A random ordinal below `ω^bound`.
pub fn random_below_omega_pow(rng: &mut SuiteRng, bound: &CnfOrdinal) -> CnfOrdinal {
    if bound.is_zero() {
        return CnfOrdinal::zero();
    }
    let terms = rng.gen_range(0..5);
    let mut exps: Vec<CnfOrdinal> = (0..terms).map(|_| random_below(rng, bound)).collect();
    exps.sort_by(|a, b| b.cmp(a));
    CnfOrdinal::from_exponents(exps).expect("sorted")
}

/// A random ordinal below a positive `bound`.
pub fn random_below(rng: &mut SuiteRng, bound: &CnfOrdinal) -> CnfOrdinal {
    if let Some(k) = bound.as_nat() {
        return CnfOrdinal::nat(rng.gen_range(0..k));
    }
    let lead = bound.lead().expect("positive bound").clone();
    // Below ω^lead is always safe; ω^(lead+1) overshoots and is filtered.
    if rng.gen_bool(0.5) {
        let wider = lead.add(&CnfOrdinal::one());
        for _ in 0..8 {
            let x = random_below_omega_pow(rng, &wider);
            if x < *bound {
                return x;
            }
        }
    }
    random_below_omega_pow(rng, &lead)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_stay_below_bounds() {
        let mut r = rng(1);
        let bounds = [CnfOrdinal::one(), CnfOrdinal::nat(3), CnfOrdinal::omega(), CnfOrdinal::omega_tower(3, &CnfOrdinal::zero())];
        for b in &bounds {
            for _ in 0..200 {
                assert!(random_below(&mut r, b) < *b);
            }
        }
    }

    #[test]
    fn quasi_embeddings_reflect_order() {
        let mut r = rng(2);
        for _ in 0..100 {
            let (x, y, f) = random_quasi_embedding(&mut r, 6);
            assert!(is_quasi_embedding(&x, &y, &f));
        }
    }

    #[test]
    fn seeds_are_deterministic() {
        let a = random_poset(&mut rng(9), 6);
        let b = random_poset(&mut rng(9), 6);
        assert_eq!(a, b);
    }
}
