use std::fmt;

use crate::intpoly::mul_mod;

/// A subset of 𝔽_p stored as a bit array of length `p`.
#[derive(Clone, PartialEq, Eq)]
pub struct FpSet {
    p: u64,
    words: Vec<u64>,
    len: usize,
}

/// Largest modulus accepted for bitset storage.
pub const MAX_BITSET_MODULUS: u64 = 1 << 32;

impl FpSet {
    pub fn empty(p: u64) -> Self {
        assert!((2..=MAX_BITSET_MODULUS).contains(&p), "modulus {p} out of bitset range");
        Self {
            p,
            words: vec![0; p.div_ceil(64) as usize],
            len: 0,
        }
    }

    pub fn full(p: u64) -> Self {
        let mut s = Self::empty(p);
        s.words.iter_mut().for_each(|w| *w = u64::MAX);
        s.mask_tail();
        s.len = p as usize;
        s
    }

    pub fn from_residues(p: u64, items: impl IntoIterator<Item = u64>) -> Self {
        let mut s = Self::empty(p);
        for a in items {
            s.insert(a % p);
        }
        s
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_full(&self) -> bool {
        self.len as u64 == self.p
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.p && self.words[(a / 64) as usize] >> (a % 64) & 1 == 1
    }

    /// Inserts `a` (must be `< p`); returns whether it was new.
    pub fn insert(&mut self, a: u64) -> bool {
        debug_assert!(a < self.p);
        let w = &mut self.words[(a / 64) as usize];
        let bit = 1u64 << (a % 64);
        let new = *w & bit == 0;
        *w |= bit;
        self.len += new as usize;
        new
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as u64;
                w &= w - 1;
                Some(i as u64 * 64 + tz)
            })
        })
    }

    /// Smallest residue not in the set.
    pub fn first_missing(&self) -> Option<u64> {
        (0..self.p).find(|&a| !self.contains(a))
    }

    pub fn is_subset(&self, other: &FpSet) -> bool {
        assert_eq!(self.p, other.p);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Members of `self` missing from `other`.
    pub fn difference(&self, other: &FpSet) -> Vec<u64> {
        self.iter().filter(|&a| !other.contains(a)).collect()
    }

    pub fn union_with(&mut self, other: &FpSet) {
        assert_eq!(self.p, other.p);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        self.recount();
    }

    /// `{a + s : a ∈ self}`.
    pub fn translated(&self, s: u64) -> FpSet {
        let mut out = FpSet::empty(self.p);
        self.or_translated_into(s % self.p, &mut out.words);
        out.recount();
        out
    }

    /// `{x·a : a ∈ self}`.
    pub fn scaled(&self, x: u64) -> FpSet {
        let x = x % self.p;
        let mut out = FpSet::empty(self.p);
        for a in self.iter() {
            out.insert(mul_mod(a, x, self.p));
        }
        out
    }

    /// `{a + c : a ∈ self, lo <= c <= hi}` for an integer interval, by doubling.
    pub fn plus_interval(&self, lo: i64, hi: i64) -> FpSet {
        assert!(lo <= hi);
        let width = (hi - lo + 1) as u64;
        if self.is_empty() {
            return self.clone();
        }
        if width >= self.p {
            return FpSet::full(self.p);
        }
        let mut acc = self.clone();
        let mut covered = 1u64;
        while covered < width {
            let step = covered.min(width - covered);
            let mut words = acc.words.clone();
            acc.or_translated_into(step, &mut words);
            acc.words = words;
            acc.recount();
            covered += step;
        }
        acc.translated(lo.rem_euclid(self.p as i64) as u64)
    }

    /// ORs `self + s` into `dst` (a word array of the same modulus).
    pub(crate) fn or_translated_into(&self, s: u64, dst: &mut [u64]) {
        debug_assert!(s < self.p);
        if s == 0 {
            for (d, w) in dst.iter_mut().zip(&self.words) {
                *d |= w;
            }
            return;
        }
        or_shift_up(dst, &self.words, s);
        or_shift_down(dst, &self.words, self.p - s);
        let tail = self.p % 64;
        if tail != 0 {
            *dst.last_mut().unwrap() &= (1u64 << tail) - 1;
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn words_mut(&mut self) -> &mut Vec<u64> {
        &mut self.words
    }

    pub(crate) fn recount(&mut self) {
        self.len = self.words.iter().map(|w| w.count_ones() as usize).sum();
    }

    fn mask_tail(&mut self) {
        let tail = self.p % 64;
        if tail != 0 {
            *self.words.last_mut().unwrap() &= (1u64 << tail) - 1;
        }
    }
}

/// `dst[bit i + s] |= src[bit i]`, dropping bits past the array end.
fn or_shift_up(dst: &mut [u64], src: &[u64], s: u64) {
    let ws = (s / 64) as usize;
    let bs = (s % 64) as u32;
    let n = dst.len();
    for j in ws..n {
        let mut v = src[j - ws] << bs;
        if bs != 0 && j > ws {
            v |= src[j - ws - 1] >> (64 - bs);
        }
        dst[j] |= v;
    }
}

/// `dst[bit i - t] |= src[bit i]` for `i >= t`.
fn or_shift_down(dst: &mut [u64], src: &[u64], t: u64) {
    let wt = (t / 64) as usize;
    let bt = (t % 64) as u32;
    let n = src.len();
    for j in 0..n.saturating_sub(wt) {
        let mut v = src[j + wt] >> bt;
        if bt != 0 && j + wt + 1 < n {
            v |= src[j + wt + 1] << (64 - bt);
        }
        dst[j] |= v;
    }
}

impl fmt::Debug for FpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpSet(p={}, ", self.p)?;
        f.debug_set().entries(self.iter().take(32)).finish()?;
        if self.len > 32 {
            write!(f, " … {} total", self.len)?;
        }
        f.write_str(")")
    }
}

/// `A + B` as a union of translates of `A`.
pub fn sumset(a: &FpSet, b: &FpSet) -> FpSet {
    assert_eq!(a.p, b.p);
    let mut out = FpSet::empty(a.p);
    for s in b.iter() {
        a.or_translated_into(s, &mut out.words);
    }
    out.recount();
    out
}

/// `A · B = {ab}`.
pub fn productset(a: &FpSet, b: &FpSet) -> FpSet {
    assert_eq!(a.p, b.p);
    let mut out = FpSet::empty(a.p);
    for x in a.iter() {
        for y in b.iter() {
            out.insert(mul_mod(x, y, a.p));
        }
        if out.is_full() {
            break;
        }
    }
    out
}

/// `AA + AA + AA`.
pub fn triple_product_sum(a: &FpSet) -> FpSet {
    let aa = productset(a, a);
    let two = sumset(&aa, &aa);
    sumset(&two, &aa)
}
