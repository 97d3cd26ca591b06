//! Exact number types and the shared decimal renderer.

mod bigfloat;

pub use bigfloat::{BigFloat, Complex};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision nonnegative integer.
pub type Nat = BigUint;

/// Exact rational, always kept in lowest terms with a positive denominator.
pub type Rat = num_rational::BigRational;

pub fn nat(v: u64) -> Nat {
    Nat::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_from_nat(n: &Nat) -> Rat {
    Rat::from_integer(BigInt::from_biguint(Sign::Plus, n.clone()))
}

pub fn nat_ratio(num: &Nat, den: &Nat) -> Rat {
    Rat::new(
        BigInt::from_biguint(Sign::Plus, num.clone()),
        BigInt::from_biguint(Sign::Plus, den.clone()),
    )
}

/// Returns the integer value of `r` as a `Nat` when `r` is a nonnegative integer.
pub fn rat_to_nat(r: &Rat) -> Option<Nat> {
    if r.is_integer() && !r.is_negative() {
        r.numer().to_biguint()
    } else {
        None
    }
}

/// Binomial coefficient by the multiplicative formula; every partial product
/// `C(n, i)` is an integer, so each division is exact.
pub fn binomial(n: u64, k: u64) -> Nat {
    if k > n {
        return Nat::zero();
    }
    let k = k.min(n - k);
    let mut acc = Nat::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Decimal rendering of an exact rational with `decimals` fractional digits.
///
/// Ties round away from zero. With `trim`, trailing fractional zeros (and a
/// bare trailing point) are dropped, so `2.50` renders as `2.5` and `1.0` as `1`.
pub fn render_decimal(r: &Rat, decimals: u32, trim: bool) -> String {
    let scale = BigInt::from(10u32).pow(decimals);
    let scaled = r.abs() * Rat::from_integer(scale.clone());
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    // rem/den >= 1/2  <=>  2 rem >= den
    let rounded = if (&rem << 1usize) >= *scaled.denom() { q + 1 } else { q };
    let negative = r.is_negative() && !rounded.is_zero();
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if decimals > 0 {
        let mut frac = format!("{:0>width$}", frac_part.to_string(), width = decimals as usize);
        if trim {
            while frac.ends_with('0') {
                frac.pop();
            }
        }
        if !frac.is_empty() {
            out.push('.');
            out.push_str(&frac);
        }
    }
    out
}

/// `p/q` form, or just `p` for integers.
pub fn render_exact(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    BigFloat::from_rat(r, 64).to_f64()
}
