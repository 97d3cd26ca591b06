//! Finite Fibonacci words and the implicit infinite word.
//!
//! `FW(0) = "0"`, `FW(1) = "1"`, `FW(2) = "10"`, `FW(k) = FW(k-1) FW(k-2)`;
//! `|FW(k)| = fib(k+1)`. For `k >= 2`, `FW(k)` holds `fib(k-1)` zeros and
//! `fib(k)` ones.

use bitvec::prelude::*;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::num::Nat;
use crate::sequences::fib;

/// Default materialization cap, in symbols (8 MiB packed).
pub const DEFAULT_MAX_LEN: u64 = 1 << 26;

pub type Bits = BitVec<u64, Lsb0>;

/// A materialized Fibonacci word with cached symbol counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibWord {
    k: u64,
    symbols: Bits,
    zeros: u64,
    ones: u64,
}

impl FibWord {
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn bits(&self) -> &BitSlice<u64, Lsb0> {
        &self.symbols
    }

    /// Number of `0` symbols (the `m` of the density formulas).
    pub fn zeros(&self) -> u64 {
        self.zeros
    }

    /// Number of `1` symbols (the `n` of the density formulas).
    pub fn ones(&self) -> u64 {
        self.ones
    }

    /// One byte (0 or 1) per symbol.
    pub fn to_symbols(&self) -> Vec<u8> {
        self.symbols.iter().map(|b| u8::from(*b)).collect()
    }

    pub fn to_ascii(&self) -> String {
        to_ascii(&self.symbols)
    }
}

pub fn to_ascii(bits: &BitSlice<u64, Lsb0>) -> String {
    bits.iter().map(|b| if *b { '1' } else { '0' }).collect()
}

/// `|FW(k)| = fib(k+1)`.
pub fn word_len(k: u64) -> Nat {
    fib(k + 1)
}

fn check_len(len: &Nat, max_len: u64) -> Result<usize> {
    match len.to_u64() {
        Some(l) if l <= max_len => Ok(l as usize),
        _ => Err(Error::WordTooLong { len: len.to_string(), max_len }),
    }
}

/// Materializes `FW(k)`.
///
/// Built in place: since `FW(j-1)` is a prefix of `FW(j)`, appending the first
/// `|FW(j-1)|` symbols of the buffer turns `FW(j)` into `FW(j+1)`.
pub fn build(k: u64, max_len: u64) -> Result<FibWord> {
    let len = check_len(&word_len(k), max_len)?;
    let symbols = match k {
        0 => bitvec![u64, Lsb0; 0],
        1 => bitvec![u64, Lsb0; 1],
        _ => {
            let mut bits: Bits = BitVec::with_capacity(len);
            bits.push(true);
            bits.push(false);
            let (mut cur, mut prev) = (2usize, 1usize);
            for _ in 2..k {
                bits.extend_from_within(..prev);
                let next = cur + prev;
                prev = cur;
                cur = next;
            }
            debug_assert_eq!(bits.len(), len);
            bits
        }
    };
    let ones = symbols.count_ones() as u64;
    let zeros = symbols.len() as u64 - ones;
    Ok(FibWord { k, symbols, zeros, ones })
}

/// `(zeros, ones)` of `FW(k)` from the count recurrences, without building it.
pub fn counts(k: u64) -> (Nat, Nat) {
    match k {
        0 => (Nat::one(), Nat::zero()),
        1 => (Nat::zero(), Nat::one()),
        _ => {
            // (m_{j-1}, n_{j-1}) and (m_j, n_j), starting at j = 2 with FW(1), FW(2)
            let (mut pm, mut pn) = (Nat::zero(), Nat::one());
            let (mut m, mut n) = (Nat::one(), Nat::one());
            for _ in 2..k {
                let nm = &m + &pm;
                let nn = &n + &pn;
                pm = std::mem::replace(&mut m, nm);
                pn = std::mem::replace(&mut n, nn);
            }
            (m, n)
        }
    }
}

/// Index-addressable view of the infinite Fibonacci word `1011010110110...`,
/// the common extension of every `FW(k)`.
///
/// Lookups descend through `FW(k) = FW(k-1) FW(k-2)` by subtracting Fibonacci
/// lengths, `O(log j)` steps. An optional explicit prefix short-circuits reads
/// that fall inside it; it is never mutated after construction.
#[derive(Clone, Debug, Default)]
pub struct InfiniteFibWord {
    cache: Option<Bits>,
}

/// Word lengths `|FW(0)|, |FW(1)|, ...` that fit in a u64.
fn lengths_u64() -> &'static [u64] {
    static LENGTHS: std::sync::OnceLock<Vec<u64>> = std::sync::OnceLock::new();
    LENGTHS.get_or_init(|| {
        let mut v = vec![1u64, 1];
        while let Some(next) = v[v.len() - 1].checked_add(v[v.len() - 2]) {
            v.push(next);
        }
        v
    })
}

impl InfiniteFibWord {
    pub fn new() -> Self {
        InfiniteFibWord { cache: None }
    }

    /// Keeps an explicit copy of the first `len` symbols.
    pub fn with_prefix_cache(len: u64, max_len: u64) -> Result<Self> {
        Ok(InfiniteFibWord { cache: Some(prefix(len, max_len)?) })
    }

    pub fn symbol_at(&self, j: u64) -> u8 {
        if let Some(cache) = &self.cache {
            if let Some(b) = cache.get(j as usize) {
                return u8::from(*b);
            }
        }
        symbol_at(j)
    }
}

/// Symbol `j` (0-indexed) of the infinite Fibonacci word.
pub fn symbol_at(j: u64) -> u8 {
    symbol_at_small(j).unwrap_or_else(|| symbol_at_nat(&Nat::from(j)))
}

/// Descent inside the largest word whose length fits in a u64.
fn symbol_at_small(mut j: u64) -> Option<u8> {
    let lens = lengths_u64();
    if j >= lens[lens.len() - 1] {
        return None;
    }
    // smallest k >= 2 with |FW(k)| > j
    let mut k = 2;
    while lens[k] <= j {
        k += 1;
    }
    while k >= 2 {
        let left = lens[k - 1];
        if j < left {
            k -= 1;
        } else {
            j -= left;
            k -= 2;
        }
    }
    // FW(1) = "1", FW(0) = "0"
    debug_assert_eq!(j, 0);
    Some(if k == 1 { 1 } else { 0 })
}

/// Symbol at an arbitrary-precision index.
pub fn symbol_at_nat(j: &Nat) -> u8 {
    if let Some(s) = j.to_u64().and_then(symbol_at_small) {
        return s;
    }
    let mut j = j.clone();
    let mut lens = vec![Nat::one(), Nat::one()];
    while lens[lens.len() - 1] <= j {
        let next = &lens[lens.len() - 1] + &lens[lens.len() - 2];
        lens.push(next);
    }
    let mut k = lens.len() - 1;
    while k >= 2 {
        if j < lens[k - 1] {
            k -= 1;
        } else {
            j -= &lens[k - 1];
            k -= 2;
        }
        // every FW(k) with k >= 1 is a prefix of the infinite word
        if k >= 1 {
            if let Some(s) = j.to_u64().and_then(symbol_at_small) {
                return s;
            }
        }
    }
    if k == 1 { 1 } else { 0 }
}

/// First `len` symbols of the infinite word.
pub fn prefix(len: u64, max_len: u64) -> Result<Bits> {
    if len > max_len {
        return Err(Error::WordTooLong { len: len.to_string(), max_len });
    }
    if len == 0 {
        return Ok(Bits::new());
    }
    let lens = lengths_u64();
    // FW(0) = "0" is not a prefix of the infinite word; start from FW(1)
    let mut k = 1;
    while lens[k] < len {
        k += 1;
    }
    let mut word = build(k as u64, u64::MAX)?.symbols;
    word.truncate(len as usize);
    Ok(word)
}

pub fn prefix_symbols(len: u64, max_len: u64) -> Result<Vec<u8>> {
    Ok(prefix(len, max_len)?.iter().map(|b| u8::from(*b)).collect())
}
