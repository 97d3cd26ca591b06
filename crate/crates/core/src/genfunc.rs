//! Rational generating functions `num(x) / den(x)` with exact coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::num::{rat_from_nat, Rat};
use crate::sequences::fib;

/// Stored with `den[0] = 1` and no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    num: Vec<Rat>,
    den: Vec<Rat>,
}

fn trim(v: &mut Vec<Rat>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect()
}

impl RationalGF {
    /// Coefficients in ascending powers of `x`.
    pub fn new(mut num: Vec<Rat>, mut den: Vec<Rat>) -> Result<Self> {
        let lead = match den.first() {
            Some(d) if !d.is_zero() => d.clone(),
            _ => return Err(Error::ZeroLeadingDenominator),
        };
        if !lead.is_one() {
            num.iter_mut().for_each(|c| *c /= &lead);
            den.iter_mut().for_each(|c| *c /= &lead);
        }
        trim(&mut num);
        trim(&mut den);
        Ok(RationalGF { num, den })
    }

    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(ints(num), ints(den))
    }

    pub fn num(&self) -> &[Rat] {
        &self.num
    }

    pub fn den(&self) -> &[Rat] {
        &self.den
    }

    /// First `n_terms` series coefficients, from
    /// `c_j = num_j - sum_{i >= 1} den_i c_{j-i}`.
    pub fn series(&self, n_terms: usize) -> Vec<Rat> {
        let mut c: Vec<Rat> = Vec::with_capacity(n_terms);
        for j in 0..n_terms {
            let mut v = self.num.get(j).cloned().unwrap_or_else(Rat::zero);
            for (i, d) in self.den.iter().enumerate().skip(1).take(j) {
                if !d.is_zero() {
                    v -= d * &c[j - i];
                }
            }
            c.push(v);
        }
        c
    }

    /// `den * series` truncated to `n_terms` terms equals `num` truncated.
    pub fn convolution_check(&self, n_terms: usize) -> bool {
        let c = self.series(n_terms);
        (0..n_terms).all(|j| {
            let conv: Rat = self
                .den
                .iter()
                .enumerate()
                .take(j + 1)
                .map(|(i, d)| d * &c[j - i])
                .sum();
            conv == self.num.get(j).cloned().unwrap_or_else(Rat::zero)
        })
    }
}

pub fn series_coeffs(gf: &RationalGF, n_terms: usize) -> Vec<Rat> {
    gf.series(n_terms)
}

/// `x^{k-1} / (1 - t x - x^2 - ... - x^k)`.
pub fn lemma22_gf(t: u64, k: u64) -> RationalGF {
    assert!(t >= 1 && k >= 1, "lemma22_gf needs t, k >= 1");
    let mut num = vec![Rat::zero(); k as usize];
    num[k as usize - 1] = Rat::one();
    let mut den = vec![-Rat::one(); k as usize + 1];
    den[0] = Rat::one();
    den[1] = -Rat::from_integer(BigInt::from(t));
    RationalGF::new(num, den).expect("leading coefficient is 1")
}

/// `x / (1 - k x - x^2)`.
pub fn kfib_gf(k: u64) -> RationalGF {
    let k = i64::try_from(k).expect("k fits in i64");
    RationalGF::from_ints(&[0, 1], &[1, -k, -1]).expect("leading coefficient is 1")
}

/// Generating function of `c_j = F_j F_{j+lambda}` over `1 - 2x - 2x^2 + x^3`;
/// the numerator is fixed by `c_0, c_1, c_2`.
pub fn product_fib_gf(lambda: u64) -> RationalGF {
    let c: Vec<Rat> = (0..3).map(|j| rat_from_nat(&(fib(j) * fib(j + lambda)))).collect();
    let two = Rat::from_integer(BigInt::from(2));
    let num = vec![
        c[0].clone(),
        &c[1] - &two * &c[0],
        &c[2] - &two * &c[1] - &two * &c[0],
    ];
    RationalGF::new(num, ints(&[1, -2, -2, 1])).expect("leading coefficient is 1")
}

/// True iff the first `n_terms` coefficients equal `seq(0), seq(1), ...`.
pub fn verify_gf<F>(gf: &RationalGF, seq: F, n_terms: usize) -> bool
where
    F: Fn(u64) -> Rat,
{
    gf.series(n_terms).iter().enumerate().all(|(j, c)| *c == seq(j as u64))
}
