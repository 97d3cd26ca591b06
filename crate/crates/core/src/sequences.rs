//! Integer sequences: Fibonacci, k-Fibonacci, the generalized (t,k) p-sequence,
//! the two combinatorial closed forms, Fibonacci polynomials, Binet evaluation
//! and the logarithmic series whose sum reproduces Binet's formula.
//!
//! Numeric convention: `fib(0) = 0`, `fib(1) = 1`.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::num::{binomial, nat, rat_from_nat, rat_to_nat, BigFloat, Complex, Nat, Rat};

pub fn fib(n: u64) -> Nat {
    let (mut a, mut b) = (Nat::zero(), Nat::one());
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

/// `fib(0..=n)` in one pass.
pub fn fib_table(n: u64) -> Vec<Nat> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(Nat::zero());
    if n >= 1 {
        out.push(Nat::one());
    }
    for i in 2..=n as usize {
        let next = &out[i - 1] + &out[i - 2];
        out.push(next);
    }
    out
}

/// Binet evaluation `(phi^n - psi^n)/sqrt 5` at `prec` bits, rounded to the
/// nearest integer.
///
/// Fails with `PrecisionTooLow` when the float result is more than 1/4 from an
/// integer, or when its ulp is too coarse for the rounding to mean anything.
pub fn fib_binet(n: u64, prec: u32) -> Result<Nat> {
    if prec < 64 {
        return Err(Error::PrecisionTooLow(format!("prec {prec} < 64")));
    }
    let value = binet(n, prec);
    // A handful of roundings per squaring step: bound the accumulated error by
    // 16 * (log2 n + 1) ulps and require that to stay under 1/4.
    let steps = 64 - n.leading_zeros() as i64 + 1;
    let err_bits = value.ulp_exponent() + 4 + (64 - (steps as u64).leading_zeros()) as i64;
    if !value.is_zero() && err_bits > -2 {
        return Err(Error::PrecisionTooLow(format!(
            "fib_binet({n}) at {prec} bits: ulp 2^{} too coarse",
            value.ulp_exponent()
        )));
    }
    let (int, dist) = value.nearest_integer();
    if dist > Rat::new(BigInt::one(), BigInt::from(4)) || int.is_negative() {
        return Err(Error::PrecisionTooLow(format!(
            "fib_binet({n}) at {prec} bits is {} from an integer",
            crate::num::render_decimal(&dist, 6, false)
        )));
    }
    Ok(int.to_biguint().expect("nonnegative"))
}

/// Binet's expression in `BigFloat`, without rounding to an integer.
pub fn binet(n: u64, prec: u32) -> BigFloat {
    let phi = BigFloat::phi(prec);
    let psi = BigFloat::psi(prec);
    phi.powi(n).sub(&psi.powi(n)).div(&BigFloat::sqrt5(prec))
}

/// `F_{k,n} = k F_{k,n-1} + F_{k,n-2}`, `F_{k,0} = 0`, `F_{k,1} = 1`.
pub fn k_fib(k: u64, n: u64) -> Nat {
    let (mut a, mut b) = (Nat::zero(), Nat::one());
    for _ in 0..n {
        let c = &b * k + &a;
        a = b;
        b = c;
    }
    a
}

fn require_positive(name: &str, v: u64) -> Result<()> {
    if v == 0 {
        Err(Error::OutOfDomain(format!("{name} must be >= 1")))
    } else {
        Ok(())
    }
}

/// First closed form: `2^{1-n} sum_i C(n, 2i+1) k^{n-1-2i} (k^2+4)^i`.
pub fn comb_formula1(k: u64, n: u64) -> Result<Nat> {
    require_positive("k", k)?;
    require_positive("n", n)?;
    let disc = nat(k) * k + 4u32;
    let mut sum = Nat::zero();
    for i in 0..=(n - 1) / 2 {
        sum += binomial(n, 2 * i + 1) * nat(k).pow((n - 1 - 2 * i) as u32) * disc.pow(i as u32);
    }
    let value = rat_from_nat(&sum) / rat_from_nat(&(Nat::one() << (n - 1)));
    rat_to_nat(&value).ok_or_else(|| {
        Error::NonIntegralResult(format!("comb_formula1({k}, {n}) = {value}"))
    })
}

/// Second closed form: `sum_i C(n-1-i, i) k^{n-1-2i}`.
pub fn comb_formula2(k: u64, n: u64) -> Result<Nat> {
    require_positive("k", k)?;
    require_positive("n", n)?;
    let mut sum = Nat::zero();
    for i in 0..=(n - 1) / 2 {
        sum += binomial(n - 1 - i, i) * nat(k).pow((n - 1 - 2 * i) as u32);
    }
    Ok(sum)
}

/// Parameters of the generalized (t,k)-Fibonacci p-sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeqSpec {
    pub t: u64,
    pub k: u64,
    pub p: u64,
}

impl SeqSpec {
    pub fn new(t: u64, k: u64, p: u64) -> Result<Self> {
        let spec = SeqSpec { t, k, p };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if self.t == 0 || self.k == 0 || self.p == 0 {
            return Err(Error::InvalidSpec(format!("t, k, p must be >= 1 (got {self:?})")));
        }
        if self.p > self.k {
            return Err(Error::InvalidSpec(format!("p = {} exceeds k = {}", self.p, self.k)));
        }
        Ok(())
    }

    /// Terms `0..len` of the sequence.
    ///
    /// `F_j = [j == k-p]` for `j < k`; afterwards
    /// `F_n = t F_{n-1} + F_{n-p-1} + ... + F_{n-p-k+1}` with negative indices
    /// read as zero. For `p = 1` this is the coefficient sequence of
    /// `x^{k-1} / (1 - t x - x^2 - ... - x^k)`.
    pub fn terms(&self, len: usize) -> Result<Vec<Nat>> {
        self.validate()?;
        let (t, k, p) = (self.t as usize, self.k as usize, self.p as usize);
        let mut out: Vec<Nat> = Vec::with_capacity(len);
        for n in 0..len {
            let v = if n < k {
                if n == k - p { Nat::one() } else { Nat::zero() }
            } else {
                let mut acc = &out[n - 1] * t;
                for lag in (p + 1)..(p + k) {
                    if lag <= n {
                        acc += &out[n - lag];
                    }
                }
                acc
            };
            out.push(v);
        }
        Ok(out)
    }
}

pub fn gen_tk_fib(spec: SeqSpec, n: u64) -> Result<Nat> {
    Ok(spec.terms(n as usize + 1)?.pop().expect("len >= 1"))
}

/// Fibonacci polynomial `F_n(x) = x F_{n-1}(x) + F_{n-2}(x)`, `F_0 = 0`, `F_1 = 1`.
pub fn fib_poly(n: u64, x: &Rat) -> Rat {
    let (mut a, mut b) = (Rat::zero(), Rat::one());
    for _ in 0..n {
        let c = x * &b + &a;
        a = b;
        b = c;
    }
    a
}

/// `P_m(x) = sum_{i <= m/2} C(m-i, i) x^i`, evaluated by its recurrence
/// `P_m = P_{m-1} + x P_{m-2}`, `P_0 = P_1 = 1`.
///
/// This is the polynomial written out as a binomial sum in the closed form
/// `F^2_{k,n} = k^{n-1} P_{n-1}(1/k^2)`.
pub fn fib_sum_poly(m: u64, x: &Rat) -> Rat {
    let (mut a, mut b) = (Rat::one(), Rat::one());
    for _ in 0..m {
        let c = &b + x * &a;
        a = b;
        b = c;
    }
    a
}

/// `k^{n-1} P_{n-1}(1/k^2)` for the polynomial of [`fib_sum_poly`].
pub fn prop44_rhs(k: u64, n: u64) -> Rat {
    let kk = Rat::from_integer(BigInt::from(k));
    let x = (&kk * &kk).recip();
    fib_sum_poly(n - 1, &x) * num_traits::pow(kk, (n - 1) as usize)
}

/// Same right-hand side, but with the three-term recurrence polynomial
/// [`fib_poly`]; this reading does not reproduce `F^2_{k,n}` and is kept only
/// for the claims report.
pub fn prop44_rhs_recurrence(k: u64, n: u64) -> Rat {
    let kk = Rat::from_integer(BigInt::from(k));
    let x = (&kk * &kk).recip();
    fib_poly(n - 1, &x) * num_traits::pow(kk, (n - 1) as usize)
}

pub fn prop44_check(k: u64, n: u64) -> bool {
    if k == 0 || n == 0 {
        return false;
    }
    let lhs = comb_formula2(k, n).expect("k, n >= 1");
    rat_from_nat(&lhs) == prop44_rhs(k, n)
}

/// Default number of terms for [`zeta_partial`].
///
/// The summand magnitude is `|n Log psi|^nu / nu!` with
/// `|Log psi| = sqrt(ln^2 phi + pi^2)`; it peaks near `nu = n |Log psi|` and
/// past `e n |Log psi|` every term shrinks by at least `1/e`.
pub fn zeta_default_terms(n: u64) -> usize {
    (std::f64::consts::E * n as f64 * log_psi_modulus()).ceil() as usize + 100
}

fn log_psi_modulus() -> f64 {
    let l = ((1.0 + 5f64.sqrt()) / 2.0).ln();
    (l * l + std::f64::consts::PI * std::f64::consts::PI).sqrt()
}

/// Partial sum `sum_{nu < terms} n^nu (Log^nu phi - Log^nu psi) / ((phi - psi) nu!)`
/// with the principal complex logarithm for the negative `psi`.
///
/// Returns the real part at `prec` bits. Terms grow to about
/// `e^{n |Log psi|}` before decaying, so the sum runs with that many extra
/// guard bits.
pub fn zeta_partial(n: u64, terms: usize, prec: u32) -> Result<BigFloat> {
    if prec < 128 {
        return Err(Error::PrecisionTooLow(format!("zeta_partial needs prec >= 128, got {prec}")));
    }
    if terms == 0 {
        return Err(Error::OutOfDomain("terms must be >= 1".into()));
    }
    let guard = (n as f64 * log_psi_modulus() * std::f64::consts::LOG2_E).ceil() as u32 + 64;
    let wp = prec + guard;
    let ln_phi = BigFloat::ln_phi(wp);
    let pi = BigFloat::pi(wp);
    let nf = BigFloat::from_nat(&nat(n), wp);
    // Log psi = ln|psi| + i pi = -ln phi + i pi
    let z1 = Complex::real(ln_phi.mul(&nf));
    let z2 = Complex::new(ln_phi.neg().mul(&nf), pi.mul(&nf));

    let one = Complex::real(BigFloat::from_i64(1, wp));
    let (mut a, mut b) = (one.clone(), one);
    let mut sum = Complex::real(BigFloat::zero(wp));
    for nu in 0..terms {
        sum = sum.add(&a.sub(&b));
        let div = BigFloat::from_i64(nu as i64 + 1, wp);
        a = a.mul(&z1).div_real(&div);
        b = b.mul(&z2).div_real(&div);
    }
    let result = sum.div_real(&BigFloat::sqrt5(wp));
    let bound_bits = prec / 2;
    let bound = Rat::new(BigInt::one(), BigInt::one() << bound_bits);
    let residue = result.im.to_rat().abs();
    if residue >= bound {
        return Err(Error::ImaginaryResidue {
            residue: format!("{:.3e}", result.im.to_f64()),
            bound_bits,
        });
    }
    Ok(result.re.with_precision(prec))
}

/// Cassini's identity `F_{n+1} F_{n-1} - F_n^2 = (-1)^n` evaluated exactly.
pub fn cassini(n: u64) -> BigInt {
    assert!(n >= 1);
    let to_int = |v: Nat| BigInt::from_biguint(Sign::Plus, v);
    to_int(fib(n + 1)) * to_int(fib(n - 1)) - to_int(fib(n)).pow(2)
}
