//! Fixed-width bit vectors used for halfspace signatures.
//!
//! Every vertex of a validated complex carries a signature: bit `h` records
//! which side of hyperplane `h` the vertex lies on, relative to vertex 0.
//! Distances are Hamming distances between signatures and medians are bitwise
//! majorities, so these little helpers carry most of the metric workload.

use alloc::vec;
use alloc::vec::Vec;

pub type Sig = Vec<u64>;

pub fn zeros(words: usize) -> Sig {
    vec![0u64; words]
}

pub fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

#[inline]
pub fn get(sig: &[u64], bit: u32) -> bool {
    sig[(bit / 64) as usize] >> (bit % 64) & 1 == 1
}

#[inline]
pub fn flip(sig: &mut [u64], bit: u32) {
    sig[(bit / 64) as usize] ^= 1u64 << (bit % 64);
}

#[inline]
pub fn set(sig: &mut [u64], bit: u32, value: bool) {
    if value {
        sig[(bit / 64) as usize] |= 1u64 << (bit % 64);
    } else {
        sig[(bit / 64) as usize] &= !(1u64 << (bit % 64));
    }
}

/// Hamming distance; equals graph distance on a validated complex.
#[inline]
pub fn hamming(a: &[u64], b: &[u64]) -> u32 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x ^ y).count_ones())
        .sum()
}

/// Bitwise majority of three signatures; the median vertex of a median graph.
pub fn majority(a: &[u64], b: &[u64], c: &[u64]) -> Sig {
    a.iter()
        .zip(b)
        .zip(c)
        .map(|((x, y), z)| (x & y) | (x & z) | (y & z))
        .collect()
}

/// True when `v` lies between `a` and `b`: every bit where `a` and `b` agree,
/// `v` agrees too.  Characterizes the interval I(a,b) on signatures.
#[inline]
pub fn between(v: &[u64], a: &[u64], b: &[u64]) -> bool {
    v.iter()
        .zip(a)
        .zip(b)
        .all(|((w, x), y)| (w ^ x) & !(x ^ y) == 0)
}

/// Masked copy: keep only the bits present in `mask`.
pub fn masked(sig: &[u64], mask: &[u64]) -> Sig {
    sig.iter().zip(mask).map(|(s, m)| s & m).collect()
}

/// Build a mask with the given bits set.
pub fn mask_of(bits: &[u32], words: usize) -> Sig {
    let mut m = zeros(words);
    for &b in bits {
        flip(&mut m, b);
    }
    m
}

pub fn ones(sig: &[u64]) -> u32 {
    sig.iter().map(|w| w.count_ones()).sum()
}

/// Indices of set bits in ascending order.
pub fn iter_ones(sig: &[u64]) -> Vec<u32> {
    let mut out = Vec::new();
    for (wi, &w) in sig.iter().enumerate() {
        let mut word = w;
        while word != 0 {
            let b = word.trailing_zeros();
            out.push(wi as u32 * 64 + b);
            word &= word - 1;
        }
    }
    out
}
