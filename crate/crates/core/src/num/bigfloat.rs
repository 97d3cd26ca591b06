use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Nat, Rat};

/// Binary floating point with an arbitrary-precision mantissa.
///
/// The value is `mant * 2^exp`. A nonzero value keeps exactly `prec` mantissa
/// bits; every operation computes the exact result (or enough bits plus a
/// sticky flag) and then rounds to nearest, ties to even.
#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

pub const MIN_PREC: u32 = 2;

impl BigFloat {
    pub fn zero(prec: u32) -> Self {
        BigFloat { mant: BigInt::zero(), exp: 0, prec: prec.max(MIN_PREC) }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// Exponent of the least significant mantissa bit (ulp = 2^exponent).
    pub fn ulp_exponent(&self) -> i64 {
        self.exp
    }

    /// Rounds `m * 2^e` (with `sticky` meaning "the true value has further
    /// nonzero bits below `m`") to `prec` bits.
    fn round_from(m: BigInt, e: i64, sticky: bool, prec: u32) -> Self {
        let prec = prec.max(MIN_PREC);
        if m.is_zero() {
            return BigFloat::zero(prec);
        }
        let sign = m.sign();
        let mag = m.magnitude().clone();
        let bits = mag.bits();
        let p = u64::from(prec);
        let (mag, e) = if bits <= p {
            debug_assert!(!sticky, "sticky bits require more than prec mantissa bits");
            let shift = p - bits;
            (mag << shift, e - shift as i64)
        } else {
            let shift = bits - p;
            let mut q: BigUint = &mag >> shift;
            let rem = &mag - (&q << shift);
            let half = BigUint::one() << (shift - 1);
            let up = match rem.cmp(&half) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => sticky || q.bit(0),
            };
            let mut e = e + shift as i64;
            if up {
                q += 1u32;
                if q.bits() > p {
                    q >>= 1;
                    e += 1;
                }
            }
            (q, e)
        };
        BigFloat { mant: BigInt::from_biguint(sign, mag), exp: e, prec }
    }

    pub fn from_bigint(v: &BigInt, prec: u32) -> Self {
        Self::round_from(v.clone(), 0, false, prec)
    }

    pub fn from_nat(v: &Nat, prec: u32) -> Self {
        Self::round_from(BigInt::from_biguint(Sign::Plus, v.clone()), 0, false, prec)
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Self::from_bigint(&BigInt::from(v), prec)
    }

    pub fn from_rat(r: &Rat, prec: u32) -> Self {
        let prec = prec.max(MIN_PREC);
        let num = r.numer();
        let den = r.denom();
        if num.is_zero() {
            return BigFloat::zero(prec);
        }
        let s = i64::from(prec) + 2 + den.bits() as i64 - num.bits() as i64;
        let (q, rem) = if s >= 0 {
            let n = num << (s as u64);
            (&n / den, &n % den)
        } else {
            let d = den << ((-s) as u64);
            (num / &d, num % &d)
        };
        Self::round_from(q, -s, !rem.is_zero(), prec)
    }

    /// Exact value as a rational.
    pub fn to_rat(&self) -> Rat {
        if self.exp >= 0 {
            Rat::from_integer(&self.mant << (self.exp as u64))
        } else {
            Rat::new(self.mant.clone(), BigInt::one() << ((-self.exp) as u64))
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.magnitude().bits();
        let drop = bits.saturating_sub(60);
        let top = (&self.mant >> drop).to_f64().unwrap_or(0.0);
        let e = self.exp + drop as i64;
        top * 2f64.powi(e.clamp(-2000, 2000) as i32)
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        Self::round_from(self.mant.clone(), self.exp, false, prec)
    }

    pub fn neg(&self) -> Self {
        BigFloat { mant: -&self.mant, exp: self.exp, prec: self.prec }
    }

    pub fn abs(&self) -> Self {
        BigFloat { mant: self.mant.abs(), exp: self.exp, prec: self.prec }
    }

    fn top_bit(&self) -> i64 {
        self.exp + self.mant.magnitude().bits() as i64
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_prec(other, self.prec.max(other.prec))
    }

    pub fn add_prec(&self, other: &Self, prec: u32) -> Self {
        if self.is_zero() {
            return other.with_precision(prec);
        }
        if other.is_zero() {
            return self.with_precision(prec);
        }
        let (big, small) = if self.top_bit() >= other.top_bit() { (self, other) } else { (other, self) };
        // When `small` sits entirely below the rounding point of `big`, only its
        // sign matters: it acts as a sticky bit on a guarded copy of `big`.
        let gap = big.top_bit() - small.top_bit();
        if gap > i64::from(prec) + 4 && small.top_bit() < big.exp {
            let guard = u64::from(prec) + 4;
            let m = (&big.mant << guard) + small.mant.signum();
            return Self::round_from(m, big.exp - guard as i64, false, prec);
        }
        let e = big.exp.min(small.exp);
        let m = (&big.mant << ((big.exp - e) as u64)) + (&small.mant << ((small.exp - e) as u64));
        Self::round_from(m, e, false, prec)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.prec.max(other.prec);
        Self::round_from(&self.mant * &other.mant, self.exp + other.exp, false, prec)
    }

    pub fn mul_int(&self, v: &BigInt) -> Self {
        Self::round_from(&self.mant * v, self.exp, false, self.prec)
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "BigFloat division by zero");
        let prec = self.prec.max(other.prec);
        if self.is_zero() {
            return BigFloat::zero(prec);
        }
        let s = (i64::from(prec) + 2 + other.mant.magnitude().bits() as i64
            - self.mant.magnitude().bits() as i64)
            .max(0) as u64;
        let n = &self.mant << s;
        let q = &n / &other.mant;
        let rem = &n % &other.mant;
        Self::round_from(q, self.exp - other.exp - s as i64, !rem.is_zero(), prec)
    }

    pub fn div_int(&self, v: &BigInt) -> Self {
        self.div(&BigFloat::from_bigint(v, self.prec))
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "BigFloat sqrt of negative value");
        if self.is_zero() {
            return self.clone();
        }
        let target = 2 * (u64::from(self.prec) + 2);
        let bits = self.mant.magnitude().bits();
        let mut s = target.saturating_sub(bits) as i64;
        if (self.exp - s).rem_euclid(2) != 0 {
            s += 1;
        }
        let n = self.mant.magnitude() << (s as u64);
        let r = n.sqrt();
        let exact = &r * &r == n;
        Self::round_from(BigInt::from_biguint(Sign::Plus, r), (self.exp - s) / 2, !exact, self.prec)
    }

    /// Integer power by repeated squaring (each step rounds to `self.prec`).
    pub fn powi(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = BigFloat::from_i64(1, self.prec);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact comparison.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        self.to_rat().cmp(&other.to_rat())
    }

    /// Nearest integer (ties away from zero) and the exact distance to it.
    pub fn nearest_integer(&self) -> (BigInt, Rat) {
        let r = self.to_rat();
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        let n = if r.is_negative() { (&r - &half).ceil() } else { (&r + &half).floor() };
        let dist = (&r - &n).abs();
        (n.to_integer(), dist)
    }

    /// Decimal string with `digits` fractional digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        super::render_decimal(&self.to_rat(), digits, false)
    }

    /// sqrt(5) at `prec` bits.
    pub fn sqrt5(prec: u32) -> Self {
        BigFloat::from_i64(5, prec + 8).sqrt().with_precision(prec)
    }

    /// Golden ratio (1 + sqrt 5)/2.
    pub fn phi(prec: u32) -> Self {
        let w = prec + 8;
        let one = BigFloat::from_i64(1, w);
        let two = BigFloat::from_i64(2, w);
        one.add(&BigFloat::sqrt5(w)).div(&two).with_precision(prec)
    }

    /// Conjugate (1 - sqrt 5)/2.
    pub fn psi(prec: u32) -> Self {
        let w = prec + 8;
        let one = BigFloat::from_i64(1, w);
        let two = BigFloat::from_i64(2, w);
        one.sub(&BigFloat::sqrt5(w)).div(&two).with_precision(prec)
    }

    /// ln(phi) = asinh(1/2) = sum_n (-1)^n C(2n,n) / (2 * 16^n * (2n+1)).
    pub fn ln_phi(prec: u32) -> Self {
        let w = u64::from(prec) + 40;
        let mut t = BigInt::one() << w; // C(2n,n)/16^n, fixed point
        let mut sum = BigInt::zero();
        let mut n: u64 = 0;
        while !t.is_zero() {
            let term = &t / BigInt::from(2 * (2 * n + 1));
            if n.is_multiple_of(2) {
                sum += term;
            } else {
                sum -= term;
            }
            t = t * BigInt::from(2 * n + 1) / BigInt::from(8 * (n + 1));
            n += 1;
        }
        Self::round_from(sum, -(w as i64), true, prec)
    }

    /// pi by Machin's formula, 16 atan(1/5) - 4 atan(1/239).
    pub fn pi(prec: u32) -> Self {
        let w = u64::from(prec) + 40;
        let atan_inv = |x: u64| -> BigInt {
            let x2 = BigInt::from(x * x);
            let mut power = (BigInt::one() << w) / BigInt::from(x);
            let mut sum = BigInt::zero();
            let mut n: u64 = 0;
            while !power.is_zero() {
                let term = &power / BigInt::from(2 * n + 1);
                if n.is_multiple_of(2) {
                    sum += term;
                } else {
                    sum -= term;
                }
                power /= &x2;
                n += 1;
            }
            sum
        };
        let s = atan_inv(5) * 16 - atan_inv(239) * 4;
        Self::round_from(s, -(w as i64), true, prec)
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20) as u32;
        f.write_str(&self.to_decimal(digits))
    }
}

/// Complex value over [`BigFloat`], just enough for the logarithmic series.
#[derive(Clone, Debug)]
pub struct Complex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Complex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        Complex { re, im }
    }

    pub fn real(re: BigFloat) -> Self {
        let prec = re.precision();
        Complex { re, im: BigFloat::zero(prec) }
    }

    pub fn add(&self, o: &Self) -> Self {
        Complex { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Complex { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Complex {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale(&self, s: &BigFloat) -> Self {
        Complex { re: self.re.mul(s), im: self.im.mul(s) }
    }

    pub fn div_real(&self, s: &BigFloat) -> Self {
        Complex { re: self.re.div(s), im: self.im.div(s) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    fn close(a: &BigFloat, expected: &str, digits: u32) {
        assert_eq!(a.to_decimal(digits), expected);
    }

    #[test]
    fn exact_small_values_round_trip() {
        for v in [-7i64, -1, 0, 1, 3, 1 << 40] {
            let f = BigFloat::from_i64(v, 64);
            assert_eq!(f.to_rat(), Rat::from_integer(BigInt::from(v)));
        }
        assert_eq!(BigFloat::from_rat(&rat(3, 8), 64).to_rat(), rat(3, 8));
    }

    #[test]
    fn ties_to_even() {
        // 2^3 + 1 = 9 does not fit in 3 bits: 1001 -> halfway between 1000 and 1010 -> even is 1000.
        let f = BigFloat::from_i64(9, 3);
        assert_eq!(f.to_rat(), rat(8, 1));
        // 11 = 1011 -> halfway between 1010 and 1100 -> even mantissa 110 -> 12.
        assert_eq!(BigFloat::from_i64(11, 3).to_rat(), rat(12, 1));
        // 13 = 1101 -> halfway between 1100 and 1110 -> even mantissa 110 -> 12.
        assert_eq!(BigFloat::from_i64(13, 3).to_rat(), rat(12, 1));
    }

    #[test]
    fn one_third_is_correctly_rounded() {
        let f = BigFloat::from_rat(&rat(1, 3), 53);
        assert_eq!(f.to_f64(), 1.0 / 3.0);
        let g = BigFloat::from_i64(1, 53).div(&BigFloat::from_i64(3, 53));
        assert_eq!(g.to_f64(), 1.0 / 3.0);
    }

    #[test]
    fn arithmetic_matches_f64() {
        let a = BigFloat::from_rat(&rat(22, 7), 53);
        let b = BigFloat::from_rat(&rat(-5, 3), 53);
        let (fa, fb) = (22.0f64 / 7.0, -5.0f64 / 3.0);
        assert_eq!(a.add(&b).to_f64(), fa + fb);
        assert_eq!(a.sub(&b).to_f64(), fa - fb);
        assert_eq!(a.mul(&b).to_f64(), fa * fb);
        assert_eq!(a.div(&b).to_f64(), fa / fb);
        assert_eq!(a.sqrt().to_f64(), fa.sqrt());
    }

    #[test]
    fn tiny_addend_acts_as_sticky() {
        let big = BigFloat::from_i64(1, 10);
        let tiny = BigFloat::from_rat(&rat(1, 1 << 40), 10);
        assert_eq!(big.add(&tiny).to_rat(), rat(1, 1));
        assert_eq!(big.sub(&tiny).to_rat(), rat(1, 1));
    }

    #[test]
    fn constants() {
        close(&BigFloat::sqrt5(256), "2.23606797749978969640917366873127623544", 38);
        close(&BigFloat::phi(256), "1.61803398874989484820458683436563811772", 38);
        close(&BigFloat::psi(256), "-0.61803398874989484820458683436563811772", 38);
        close(&BigFloat::ln_phi(256), "0.48121182505960344749775891342436842314", 38);
        close(&BigFloat::pi(256), "3.14159265358979323846264338327950288420", 38);
    }

    #[test]
    fn phi_minus_psi_is_sqrt5() {
        let d = BigFloat::phi(200).sub(&BigFloat::psi(200));
        let err = d.sub(&BigFloat::sqrt5(200)).abs();
        assert!(err.to_f64() < 1e-55);
    }

    #[test]
    fn powi_exact_for_small_integers() {
        assert_eq!(BigFloat::from_i64(3, 64).powi(20).to_rat(), rat(3_486_784_401, 1));
    }

    #[test]
    fn nearest_integer_distance() {
        let (n, d) = BigFloat::from_rat(&rat(7, 4), 64).nearest_integer();
        assert_eq!(n, BigInt::from(2));
        assert_eq!(d, rat(1, 4));
        let (n, _) = BigFloat::from_rat(&rat(-7, 4), 64).nearest_integer();
        assert_eq!(n, BigInt::from(-2));
    }

    #[test]
    fn complex_multiplication() {
        let i = Complex::new(BigFloat::zero(64), BigFloat::from_i64(1, 64));
        let sq = i.mul(&i);
        assert_eq!(sq.re.to_rat(), rat(-1, 1));
        assert!(sq.im.is_zero());
    }
}
