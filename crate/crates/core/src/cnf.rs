//! Ordinals below `ε_0` in Cantor normal form.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// `ω^{e_1} + ... + ω^{e_k}` with `e_1 >= ... >= e_k`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CnfOrdinal {
    exps: Vec<CnfOrdinal>,
}

impl Ord for CnfOrdinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.exps.iter().zip(&other.exps) {
            match a.cmp(b) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.exps.len().cmp(&other.exps.len())
    }
}

impl PartialOrd for CnfOrdinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl CnfOrdinal {
    pub fn zero() -> Self {
        CnfOrdinal { exps: Vec::new() }
    }

    pub fn one() -> Self {
        Self::nat(1)
    }

    pub fn omega() -> Self {
        Self::omega_pow(Self::one())
    }

    pub fn nat(k: usize) -> Self {
        CnfOrdinal { exps: (0..k).map(|_| Self::zero()).collect() }
    }

    /// `ω^e`.
    pub fn omega_pow(e: CnfOrdinal) -> Self {
        CnfOrdinal { exps: alloc::vec![e] }
    }

    /// Builds from exponents; `None` unless they are weakly decreasing.
    pub fn from_exponents(exps: Vec<CnfOrdinal>) -> Option<Self> {
        exps.windows(2).all(|w| w[0] >= w[1]).then_some(CnfOrdinal { exps })
    }

    pub fn exponents(&self) -> &[CnfOrdinal] {
        &self.exps
    }

    pub fn is_zero(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_successor(&self) -> bool {
        self.exps.last().is_some_and(|e| e.is_zero())
    }

    /// The natural number denoted, if finite.
    pub fn as_nat(&self) -> Option<usize> {
        self.exps.iter().all(|e| e.is_zero()).then_some(self.exps.len())
    }

    /// Leading exponent (`None` for zero).
    pub fn lead(&self) -> Option<&CnfOrdinal> {
        self.exps.first()
    }

    /// Smallest exponent (`None` for zero).
    pub fn last_exponent(&self) -> Option<&CnfOrdinal> {
        self.exps.last()
    }

    /// Well-formedness: exponents weakly decreasing at every level.
    pub fn is_normal(&self) -> bool {
        self.exps.windows(2).all(|w| w[0] >= w[1]) && self.exps.iter().all(|e| e.is_normal())
    }

    /// Ordinal sum `self + other`.
    pub fn add(&self, other: &CnfOrdinal) -> CnfOrdinal {
        let Some(lead) = other.lead() else {
            return self.clone();
        };
        let mut exps: Vec<CnfOrdinal> = self.exps.iter().take_while(|e| *e >= lead).cloned().collect();
        exps.extend(other.exps.iter().cloned());
        CnfOrdinal { exps }
    }

    /// The unique `x` with `self + x = target`, provided `self <= target`.
    pub fn left_sub(&self, target: &CnfOrdinal) -> Option<CnfOrdinal> {
        for (i, (a, b)) in self.exps.iter().zip(&target.exps).enumerate() {
            match a.cmp(b) {
                Ordering::Equal => {}
                Ordering::Less => return Some(CnfOrdinal { exps: target.exps[i..].to_vec() }),
                Ordering::Greater => return None,
            }
        }
        if self.exps.len() > target.exps.len() {
            return None;
        }
        Some(CnfOrdinal { exps: target.exps[self.exps.len()..].to_vec() })
    }

    /// `ω^c · self`.
    pub fn omega_pow_mul(&self, c: &CnfOrdinal) -> CnfOrdinal {
        CnfOrdinal { exps: self.exps.iter().map(|e| c.add(e)).collect() }
    }

    /// Division by `ω^b`: returns `(q, r)` with `self = ω^b · q + r`, `r < ω^b`.
    pub fn div_omega_pow(&self, b: &CnfOrdinal) -> (CnfOrdinal, CnfOrdinal) {
        let split = self.exps.iter().take_while(|e| *e >= b).count();
        let q = CnfOrdinal { exps: self.exps[..split].iter().map(|e| b.left_sub(e).expect("exponent at least b")).collect() };
        let r = CnfOrdinal { exps: self.exps[split..].to_vec() };
        (q, r)
    }

    /// `ω_0^α = α`, `ω_{n+1}^α = ω^{ω_n^α}`.
    pub fn omega_tower(n: usize, alpha: &CnfOrdinal) -> CnfOrdinal {
        let mut x = alpha.clone();
        for _ in 0..n {
            x = CnfOrdinal::omega_pow(x);
        }
        x
    }

    /// Number of symbols; a size measure for generated samples.
    pub fn weight(&self) -> usize {
        1 + self.exps.iter().map(|e| e.weight()).sum::<usize>()
    }
}

pub fn cnf_cmp(a: &CnfOrdinal, b: &CnfOrdinal) -> Ordering {
    a.cmp(b)
}

impl fmt::Display for CnfOrdinal {
    /// `w^(e)` for powers of omega, `*k` for repeated terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "0");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.exps.len() {
            let e = &self.exps[i];
            let mut j = i;
            while j < self.exps.len() && self.exps[j] == *e {
                j += 1;
            }
            let count = j - i;
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if e.is_zero() {
                write!(f, "{count}")?;
            } else {
                if *e == CnfOrdinal::one() {
                    write!(f, "w")?;
                } else if let Some(k) = e.as_nat() {
                    write!(f, "w^{k}")?;
                } else {
                    write!(f, "w^({e})")?;
                }
                if count > 1 {
                    write!(f, "*{count}")?;
                }
            }
            i = j;
        }
        Ok(())
    }
}

impl fmt::Debug for CnfOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w() -> CnfOrdinal {
        CnfOrdinal::omega()
    }

    #[test]
    fn towers() {
        assert_eq!(CnfOrdinal::omega_tower(2, &CnfOrdinal::zero()), w());
        let w3 = CnfOrdinal::omega_tower(4, &CnfOrdinal::zero());
        let w2 = CnfOrdinal::omega_pow(CnfOrdinal::nat(2));
        assert_eq!(cnf_cmp(&w3, &w2), Ordering::Greater);
        assert_eq!(cnf_cmp(&w().add(&CnfOrdinal::one()), &w()), Ordering::Greater);
    }

    #[test]
    fn arithmetic() {
        let one = CnfOrdinal::one();
        assert_eq!(one.add(&w()), w());
        assert_eq!(w().add(&one).to_string(), "w+1");
        assert_eq!(one.left_sub(&w()).unwrap(), w());
        assert_eq!(one.left_sub(&CnfOrdinal::nat(5)).unwrap(), CnfOrdinal::nat(4));
        assert!(w().left_sub(&CnfOrdinal::nat(5)).is_none());
        let x = CnfOrdinal::omega_pow(CnfOrdinal::nat(3)).add(&w()).add(&CnfOrdinal::nat(2));
        let (q, r) = x.div_omega_pow(&one);
        assert_eq!(q, CnfOrdinal::omega_pow(CnfOrdinal::nat(2)).add(&one));
        assert_eq!(r, CnfOrdinal::nat(2));
        assert_eq!(q.omega_pow_mul(&one).add(&r), x);
        assert_eq!(x.to_string(), "w^3+w+2");
    }
}
