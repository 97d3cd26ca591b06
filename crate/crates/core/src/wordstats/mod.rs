//! Factor and palindromic complexity of binary words, and the index formulas
//! driven by continued-fraction convergents.
//!
//! Words are slices of symbols `0`/`1` (one byte each). Distinct factors are
//! counted with a [`SuffixAutomaton`] and distinct palindromes with an
//! [`Eertree`]; both are linear in the prefix length. The automaton needs
//! about 32 bytes per input symbol.

mod automaton;
mod eertree;
mod index;

pub use automaton::SuffixAutomaton;
pub use eertree::Eertree;
pub use index::{
    convergent_denominators, golden_index_limit, reversed_value, sturmian_index, ContinuedFraction,
    SturmianIndex, INDEX_PREC,
};

use num_bigint::BigInt;

use crate::density::BoundReport;
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::fibword;
use crate::num::Rat;

fn check_window(n: usize, len: usize) -> Result<()> {
    if n > len {
        return Err(Error::WindowTooLarge { n, len });
    }
    Ok(())
}

/// Number of distinct length-`n` factors of `prefix`.
pub fn factor_complexity(prefix: &[u8], n: usize) -> Result<u64> {
    check_window(n, prefix.len())?;
    Ok(SuffixAutomaton::build(prefix).factor_counts()[n])
}

/// Number of distinct length-`n` palindromic factors of `prefix`.
pub fn palindromic_complexity(prefix: &[u8], n: usize) -> Result<u64> {
    check_window(n, prefix.len())?;
    Ok(Eertree::build(prefix).palindrome_counts()[n])
}

/// Per-length factor and palindrome counts of one word, built once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complexity {
    pub fac: Vec<u64>,
    pub pal: Vec<u64>,
}

impl Complexity {
    pub fn of(word: &[u8]) -> Self {
        Self::of_with(word, Strategy::default())
    }

    /// The automaton and the eertree are independent, so they can be built
    /// side by side.
    pub fn of_with(word: &[u8], strategy: Strategy) -> Self {
        let (fac, pal) = strategy.join(
            || SuffixAutomaton::build(word).factor_counts(),
            || Eertree::build(word).palindrome_counts(),
        );
        Complexity { fac, pal }
    }

    pub fn len(&self) -> usize {
        self.fac.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn fac(&self, n: usize) -> Result<u64> {
        check_window(n, self.len())?;
        Ok(self.fac[n])
    }

    pub fn pal(&self, n: usize) -> Result<u64> {
        check_window(n, self.len())?;
        Ok(self.pal[n])
    }

    /// `pal(k)` against `(16/k) fac(k + floor(k/4))`.
    pub fn palindrome_bound(&self, k: usize) -> Result<BoundReport> {
        if k == 0 {
            return Err(Error::OutOfDomain("palindrome bound needs k >= 1".into()));
        }
        let lhs = Rat::from_integer(BigInt::from(self.pal(k)?));
        let rhs = Rat::new(BigInt::from(16 * self.fac(k + k / 4)?), BigInt::from(k));
        Ok(BoundReport::new(k as u64, lhs, rhs))
    }
}

pub fn palindrome_bound_check(prefix: &[u8], k: usize) -> Result<BoundReport> {
    if k == 0 {
        return Err(Error::OutOfDomain("palindrome bound needs k >= 1".into()));
    }
    check_window(k + k / 4, prefix.len())?;
    Complexity::of(prefix).palindrome_bound(k)
}

/// Complexity values of the Fibonacci prefix of length `prefix_len` for
/// `n <= n_max`. A value is `stabilized` when the prefix of twice the length
/// gives the same factor and palindrome counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityProfile {
    pub prefix_len: usize,
    pub fac: Vec<u64>,
    pub pal: Vec<u64>,
    pub stabilized: Vec<bool>,
}

pub fn fibonacci_profile(prefix_len: usize, n_max: usize, max_len: u64) -> Result<ComplexityProfile> {
    check_window(n_max, prefix_len)?;
    let doubled = fibword::prefix_symbols(2 * prefix_len as u64, max_len)?;
    let strategy = Strategy::default();
    let (short, long) = strategy.join(
        || Complexity::of_with(&doubled[..prefix_len], strategy),
        || Complexity::of_with(&doubled, strategy),
    );
    let stabilized = (0..=n_max)
        .map(|n| short.fac[n] == long.fac[n] && short.pal[n] == long.pal[n])
        .collect();
    Ok(ComplexityProfile {
        prefix_len,
        fac: short.fac[..=n_max].to_vec(),
        pal: short.pal[..=n_max].to_vec(),
        stabilized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibword::DEFAULT_MAX_LEN;
    use crate::num::rat;
    use crate::sequences::fib;
    use num_traits::ToPrimitive;

    fn fib_prefix(k: u64) -> Vec<u8> {
        fibword::prefix_symbols(fib(k).to_u64().unwrap(), DEFAULT_MAX_LEN).unwrap()
    }

    #[test]
    fn examples() {
        let w = [1, 0, 1, 1, 0, 1, 0, 1];
        assert_eq!(factor_complexity(&w, 3).unwrap(), 4);
        assert_eq!(factor_complexity(&w, 0).unwrap(), 1);
        assert_eq!(palindromic_complexity(&w, 0).unwrap(), 1);
        assert_eq!(factor_complexity(&w, 9), Err(Error::WindowTooLarge { n: 9, len: 8 }));
        let p = fib_prefix(22);
        assert_eq!(factor_complexity(&p, 10).unwrap(), 11);
        let c = Complexity::of(&p);
        assert_eq!((c.pal[1], c.pal[2]), (2, 1));
        assert_eq!((c.pal[3], c.pal[4], c.pal[5], c.pal[6], c.pal[7]), (2, 1, 2, 1, 2));
    }

    #[test]
    fn palindrome_bound_examples() {
        let p = fib_prefix(24);
        let b4 = palindrome_bound_check(&p, 4).unwrap();
        assert_eq!((b4.lhs, b4.rhs, b4.holds), (rat(1, 1), rat(24, 1), true));
        let b1 = palindrome_bound_check(&p, 1).unwrap();
        assert_eq!((b1.lhs, b1.rhs), (rat(2, 1), rat(32, 1)));
        let b16 = palindrome_bound_check(&p, 16).unwrap();
        assert_eq!((b16.rhs, b16.holds), (rat(21, 1), true));
        assert!(palindrome_bound_check(&p[..4], 4).is_err());
    }

    #[test]
    fn profile_stabilizes() {
        let prof = fibonacci_profile(fib(20).to_usize().unwrap(), 64, DEFAULT_MAX_LEN).unwrap();
        for n in 1..=64 {
            assert!(prof.stabilized[n]);
            assert_eq!(prof.fac[n], n as u64 + 1);
        }
        // a tiny prefix misses factors that the doubled prefix has
        let tiny = fibonacci_profile(5, 5, DEFAULT_MAX_LEN).unwrap();
        assert!(tiny.stabilized.iter().any(|s| !s));
    }
}
