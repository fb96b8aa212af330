//! Linear algebra over F₂ on packed bit vectors.
//!
//! [`PivotBasis`] keeps vectors with distinct highest set bits and answers
//! membership queries. [`kernel`] runs the column reduction `R = D·V`; its zero
//! columns give a kernel basis whose highest indices are distinct.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vec {
    len: usize,
    words: Vec<u64>,
}

impl F2Vec {
    pub fn zeros(len: usize) -> Self {
        F2Vec { len, words: vec![0; len.div_ceil(WORD)] }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = F2Vec::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = F2Vec::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for F2Vec of length {}", self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range for F2Vec of length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range for F2Vec of length {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &F2Vec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    /// Highest set index, the "low" of persistence reductions.
    pub fn highest(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * WORD + bit)
            })
        })
    }
}

impl fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "F2Vec[{bits}]")
    }
}

/// A set of vectors with pairwise distinct highest bits.
#[derive(Clone, Debug, Default)]
pub struct PivotBasis {
    // slot p holds the vector whose highest bit is p
    slots: Vec<Option<F2Vec>>,
    rank: usize,
}

impl PivotBasis {
    pub fn new(dim: usize) -> Self {
        PivotBasis { slots: vec![None; dim], rank: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, mut v: F2Vec) -> F2Vec {
        while let Some(p) = v.highest() {
            match &self.slots[p] {
                Some(b) => v.xor_assign(b),
                None => break,
            }
        }
        v
    }

    pub fn contains(&self, v: &F2Vec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Inserts `v`; returns `false` if it was already in the span.
    pub fn insert(&mut self, v: F2Vec) -> bool {
        let v = self.reduce(v);
        match v.highest() {
            None => false,
            Some(p) => {
                self.slots[p] = Some(v);
                self.rank += 1;
                true
            }
        }
    }

    pub fn vectors(&self) -> impl Iterator<Item = &F2Vec> {
        self.slots.iter().flatten()
    }
}

pub fn rank<'a>(dim: usize, vectors: impl IntoIterator<Item = &'a F2Vec>) -> usize {
    let mut basis = PivotBasis::new(dim);
    for v in vectors {
        basis.insert(v.clone());
    }
    basis.rank()
}

/// Kernel of the map sending basis vector `k` to `columns[k]`.
///
/// Columns are reduced left to right; each column that reduces to zero yields a
/// kernel vector whose highest set index is that column's own index. The
/// returned basis is therefore sorted by strictly increasing highest index.
pub fn kernel(columns: &[F2Vec]) -> Vec<F2Vec> {
    let n = columns.len();
    let target_dim = columns.first().map_or(0, F2Vec::len);
    // pivot row -> (reduced column, combination of source columns)
    let mut pivots: Vec<Option<(F2Vec, F2Vec)>> = vec![None; target_dim];
    let mut out = Vec::new();
    for (k, col) in columns.iter().enumerate() {
        let mut r = col.clone();
        let mut v = F2Vec::unit(n, k);
        while let Some(p) = r.highest() {
            match &pivots[p] {
                Some((pr, pv)) => {
                    r.xor_assign(pr);
                    v.xor_assign(pv);
                }
                None => break,
            }
        }
        match r.highest() {
            Some(p) => pivots[p] = Some((r, v)),
            None => out.push(v),
        }
    }
    out
}

/// Rank of the map sending basis vector `k` to `columns[k]`.
pub fn column_rank(columns: &[F2Vec]) -> usize {
    match columns.first() {
        None => 0,
        Some(c) => rank(c.len(), columns),
    }
}
