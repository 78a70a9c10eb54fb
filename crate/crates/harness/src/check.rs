//! Order axiom checks over finite carriers.

use std::cmp::Ordering;

use crate::report::Collector;

/// A square bit matrix.
#[derive(Clone, Debug)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix { n, words, bits: vec![0; n * words] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::new(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    m.set(i, j);
                }
            }
        }
        m
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    /// A pair `(i, k)` with `i R j`, `j R k` but not `i R k`, if any.
    pub fn transitivity_failure(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.get(i, j) {
                    continue;
                }
                let (ri, rj) = (self.row(i), self.row(j));
                if let Some(w) = (0..self.words).find(|&w| rj[w] & !ri[w] != 0) {
                    let k = w * 64 + (rj[w] & !ri[w]).trailing_zeros() as usize;
                    return Some((i, j, k));
                }
            }
        }
        None
    }

    /// All transitivity failures, one per offending `(i, j)`.
    pub fn transitivity_failures(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.get(i, j) {
                    continue;
                }
                let (ri, rj) = (self.row(i), self.row(j));
                if let Some(w) = (0..self.words).find(|&w| rj[w] & !ri[w] != 0) {
                    out.push((i, j, w * 64 + (rj[w] & !ri[w]).trailing_zeros() as usize));
                }
            }
        }
        out
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Transitive closure (Warshall on bit rows).
    pub fn closure(&self) -> BitMatrix {
        let mut m = self.clone();
        for k in 0..m.n {
            let rk = m.row(k).to_vec();
            for i in 0..m.n {
                if m.get(i, k) {
                    let base = i * m.words;
                    for (w, bits) in rk.iter().enumerate() {
                        m.bits[base + w] |= bits;
                    }
                }
            }
        }
        m
    }

    /// Covers of a strict order: `i < j` with nothing strictly between.
    pub fn transitive_reduction(&self) -> BitMatrix {
        let mut out = BitMatrix::new(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) && !(0..self.n).any(|k| self.get(i, k) && self.get(k, j)) {
                    out.set(i, j);
                }
            }
        }
        out
    }
}

impl PartialEq for BitMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}

/// Items with a printable form and a height, used to report counterexamples.
pub struct Carrier<'a, T> {
    pub items: &'a [T],
    pub show: &'a dyn Fn(&T) -> String,
    pub height: &'a dyn Fn(&T) -> usize,
}

impl<T> Carrier<'_, T> {
    fn size(&self, i: usize, j: usize) -> usize {
        (self.height)(&self.items[i]) + (self.height)(&self.items[j])
    }
}

/// Irreflexivity, trichotomy (with `Equal` exactly on identical items),
/// antisymmetry of the three-way result, and transitivity.
pub fn check_linear<T: PartialEq>(c: &Carrier<'_, T>, cmp: impl Fn(&T, &T) -> Ordering, out: &mut Collector) {
    let n = c.items.len();
    let mut less = BitMatrix::new(n);
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (&c.items[i], &c.items[j]);
            let o = cmp(a, b);
            out.count(1);
            if (o == Ordering::Equal) != (a == b) {
                let clause = if i == j { "irreflexivity" } else { "equal only on identical terms" };
                out.violation(c.size(i, j), || (c.show)(a), || (c.show)(b), clause);
            }
            if j > i && cmp(b, a) != o.reverse() {
                out.violation(c.size(i, j), || (c.show)(a), || (c.show)(b), "trichotomy");
            }
            if o == Ordering::Less {
                less.set(i, j);
            }
        }
    }
    for (i, j, k) in less.transitivity_failures() {
        let (a, b, d) = (&c.items[i], &c.items[j], &c.items[k]);
        out.violation(c.size(i, k), || (c.show)(a), || format!("{} via {}", (c.show)(d), (c.show)(b)), "transitivity");
    }
}

/// Reflexivity, antisymmetry and transitivity of `leq`. Returns the matrix.
pub fn check_partial<T: PartialEq>(c: &Carrier<'_, T>, leq: impl Fn(&T, &T) -> bool, out: &mut Collector) -> BitMatrix {
    let n = c.items.len();
    let m = BitMatrix::from_fn(n, |i, j| leq(&c.items[i], &c.items[j]));
    out.count((n * n) as u64);
    for i in 0..n {
        if !m.get(i, i) {
            let a = &c.items[i];
            out.violation(c.size(i, i), || (c.show)(a), || (c.show)(a), "reflexivity");
        }
        for j in i + 1..n {
            if m.get(i, j) && m.get(j, i) {
                let (a, b) = (&c.items[i], &c.items[j]);
                out.violation(c.size(i, j), || (c.show)(a), || (c.show)(b), "antisymmetry");
            }
        }
    }
    for (i, j, k) in m.transitivity_failures() {
        let (a, b, d) = (&c.items[i], &c.items[j], &c.items[k]);
        out.violation(c.size(i, k), || (c.show)(a), || format!("{} via {}", (c.show)(d), (c.show)(b)), "transitivity");
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_intransitive_relation() {
        // 0 < 1 < 2 but not 0 < 2
        let m = BitMatrix::from_fn(3, |i, j| (i, j) == (0, 1) || (i, j) == (1, 2));
        assert_eq!(m.transitivity_failure(), Some((0, 1, 2)));
        assert!(m.closure().get(0, 2));
        assert_eq!(m.closure().transitive_reduction(), m);
    }

    #[test]
    fn rows_wider_than_a_word() {
        let m = BitMatrix::from_fn(130, |i, j| i < j);
        assert_eq!(m.transitivity_failure(), None);
        assert_eq!(m.transitive_reduction().count(), 129);
    }

    #[test]
    fn linear_check_on_integers() {
        let items: Vec<i32> = (0..10).collect();
        let show = |x: &i32| x.to_string();
        let height = |x: &i32| *x as usize;
        let c = Carrier { items: &items, show: &show, height: &height };
        let mut out = Collector::new("ints", 0);
        check_linear(&c, |a, b| a.cmp(b), &mut out);
        assert!(out.finish().passed());
        let mut out = Collector::new("broken", 0);
        check_linear(&c, |a, b| if (a - b).abs() == 9 { b.cmp(a) } else { a.cmp(b) }, &mut out);
        assert!(!out.finish().passed());
    }
}
