//! Continued fractions and the Sturmian index.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::num::{rat_from_nat, BigFloat, Nat, Rat};

/// Precision used for the BigFloat renderings of the index values.
pub const INDEX_PREC: u32 = 128;

/// `[a0; a1, a2, ...]` with `a_i >= 1` for `i >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction {
    quotients: Vec<Nat>,
}

impl ContinuedFraction {
    pub fn new(quotients: Vec<Nat>) -> Result<Self> {
        if let Some(i) = quotients.iter().skip(1).position(Zero::is_zero) {
            return Err(Error::InvalidSpec(format!("partial quotient a_{} is 0", i + 1)));
        }
        Ok(ContinuedFraction { quotients })
    }

    /// `[0; 1, 1, ...]` with `depth` ones after the leading zero.
    pub fn all_ones(depth: usize) -> Self {
        let mut quotients = vec![Nat::zero()];
        quotients.resize(depth + 1, Nat::one());
        ContinuedFraction { quotients }
    }

    pub fn from_u64s(qs: &[u64]) -> Result<Self> {
        Self::new(qs.iter().map(|&q| Nat::from(q)).collect())
    }

    pub fn quotients(&self) -> &[Nat] {
        &self.quotients
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }
}

/// `q_0, ..., q_N` from `q_{-1} = 0`, `q_0 = 1`, `q_{n+1} = a_{n+1} q_n + q_{n-1}`.
pub fn convergent_denominators(cf: &ContinuedFraction) -> Vec<Nat> {
    let mut qs = vec![Nat::one()];
    let mut prev = Nat::zero();
    for a in cf.quotients.iter().skip(1) {
        let next = a * &qs[qs.len() - 1] + &prev;
        prev = qs[qs.len() - 1].clone();
        qs.push(next);
    }
    qs
}

/// Partial index values to depth `N`.
#[derive(Clone, Debug)]
pub struct SturmianIndex {
    pub depth: usize,
    /// `max_{0<=n<=N} 2 + a_{n+1} + (q_{n-1} - 2)/q_n`
    pub ind_partial: Rat,
    /// `2 * max [a_n; a_{n-1}, ..., a_1]` over `n` in the window
    pub ind_star_partial: Rat,
    /// Term `n` of the `ind` maximum, for `n = 0..=N`.
    pub terms: Vec<Rat>,
    /// Running maximum of `terms`.
    pub history: Vec<Rat>,
}

impl SturmianIndex {
    pub fn ind_float(&self) -> BigFloat {
        BigFloat::from_rat(&self.ind_partial, INDEX_PREC)
    }

    pub fn ind_star_float(&self) -> BigFloat {
        BigFloat::from_rat(&self.ind_star_partial, INDEX_PREC)
    }
}

/// Reversed continued fraction `[a_n; a_{n-1}, ..., a_1]`, by back-substitution.
pub fn reversed_value(cf: &ContinuedFraction, n: usize) -> Rat {
    let a = |i: usize| rat_from_nat(&cf.quotients[i]);
    let mut acc = a(1);
    for i in 2..=n {
        acc = a(i) + acc.recip();
    }
    acc
}

/// `ind` and `ind*` truncated at depth `n_depth`.
///
/// The `ind*` maximum runs over `n` in `[max(1, ceil(N/2)), max(1, N)]`, a
/// trailing window standing in for the limsup.
pub fn sturmian_index(cf: &ContinuedFraction, n_depth: usize) -> Result<SturmianIndex> {
    let need = n_depth + 2;
    if cf.len() < need {
        return Err(Error::InsufficientDepth { have: cf.len(), depth: n_depth, need });
    }
    let qs = convergent_denominators(cf);
    let two = Rat::from_integer(BigInt::from(2));
    let mut terms = Vec::with_capacity(n_depth + 1);
    let mut history: Vec<Rat> = Vec::with_capacity(n_depth + 1);
    for n in 0..=n_depth {
        let q_prev = if n == 0 { Rat::zero() } else { rat_from_nat(&qs[n - 1]) };
        let term = &two + rat_from_nat(&cf.quotients[n + 1]) + (q_prev - &two) / rat_from_nat(&qs[n]);
        let best = match history.last() {
            Some(b) if *b >= term => b.clone(),
            _ => term.clone(),
        };
        terms.push(term);
        history.push(best);
    }
    let hi = n_depth.max(1);
    let lo = n_depth.div_ceil(2).max(1);
    let star = (lo..=hi)
        .map(|n| reversed_value(cf, n))
        .max()
        .expect("window is nonempty");
    Ok(SturmianIndex {
        depth: n_depth,
        ind_partial: history[n_depth].clone(),
        ind_star_partial: two * star,
        terms,
        history,
    })
}

/// `3 + 1/phi`, the limit of `ind` for the all-ones continued fraction.
pub fn golden_index_limit(prec: u32) -> BigFloat {
    let phi = BigFloat::phi(prec + 8);
    BigFloat::from_i64(3, prec + 8)
        .add(&BigFloat::from_i64(1, prec + 8).div(&phi))
        .with_precision(prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{nat, rat};
    use crate::sequences::fib;
    use num_bigint::Sign;

    fn nat_to_int(n: &Nat) -> BigInt {
        BigInt::from_biguint(Sign::Plus, n.clone())
    }

    #[test]
    fn denominators() {
        let ones = convergent_denominators(&ContinuedFraction::all_ones(10));
        let fibs: Vec<Nat> = (1..=11).map(fib).collect();
        assert_eq!(ones, fibs);
        let pell = convergent_denominators(&ContinuedFraction::from_u64s(&[0, 2, 2, 2]).unwrap());
        assert_eq!(pell, vec![nat(1), nat(2), nat(5), nat(12)]);
        assert_eq!(convergent_denominators(&ContinuedFraction::from_u64s(&[3]).unwrap()), vec![nat(1)]);
    }

    #[test]
    fn rejects_zero_quotient() {
        assert!(ContinuedFraction::from_u64s(&[0, 1, 0]).is_err());
        assert!(ContinuedFraction::from_u64s(&[0, 1, 2]).is_ok());
    }

    #[test]
    fn trivial_depth_zero() {
        let cf = ContinuedFraction::from_u64s(&[0, 2]).unwrap();
        let idx = sturmian_index(&cf, 0).unwrap();
        assert_eq!(idx.ind_partial, rat(2, 1));
        assert_eq!(idx.ind_star_partial, rat(4, 1));
    }

    #[test]
    fn all_ones_depth_thirty() {
        let idx = sturmian_index(&ContinuedFraction::all_ones(32), 30).unwrap();
        // last term 3 + (F_30 - 2)/F_31 is the maximum
        let expected = rat(3, 1) + Rat::new(nat_to_int(&(fib(30) - 2u32)), nat_to_int(&fib(31)));
        assert_eq!(idx.ind_partial, expected);
        let err = idx.ind_float().sub(&golden_index_limit(128)).abs().to_f64();
        assert!(err < 2e-6 && err > 1e-6, "{err}");
        let star = idx.ind_star_float().to_f64();
        // the trailing window still contains F_16/F_15, about 1.2e-6 above phi
        assert!((star - 3.2360679775).abs() < 1e-5);
        assert!(idx.history.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn insufficient_depth() {
        let cf = ContinuedFraction::all_ones(10);
        assert!(matches!(sturmian_index(&cf, 10), Err(Error::InsufficientDepth { .. })));
        assert!(sturmian_index(&cf, 9).is_ok());
    }
}
