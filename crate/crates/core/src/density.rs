//! Symbol densities of Fibonacci words and evaluators for the density ratios,
//! bounds and limits built on them.
//!
//! Densities are exact rationals. Quantities that involve `phi` come back as
//! [`BigFloat`] at the requested precision. Some evaluators (`prop32_eval`,
//! `count_ratio_row`, `lambda_ratio`) only report values and never assert.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::fibword::counts;
use crate::num::{nat_ratio, rat_from_nat, BigFloat, Nat, Rat};
use crate::sequences::{binet, fib};

/// Zero / one counts of `FW(k)` and their exact densities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityRecord {
    pub k: u64,
    /// Number of zeros.
    pub m: Nat,
    /// Number of ones.
    pub n: Nat,
    pub df_m: Rat,
    pub df_n: Rat,
}

pub fn density_record(k: u64) -> DensityRecord {
    let (m, n) = counts(k);
    let total = &m + &n;
    let df_m = nat_ratio(&m, &total);
    let df_n = nat_ratio(&n, &total);
    DensityRecord { k, m, n, df_m, df_n }
}

pub fn density_table(k_max: u64) -> Vec<DensityRecord> {
    density_table_with(k_max, Strategy::default())
}

pub fn density_table_with(k_max: u64, strategy: Strategy) -> Vec<DensityRecord> {
    strategy.map_range(0..=k_max, density_record)
}

/// `(|DF_n - (phi - 1)|, phi - DF_m)` for `FW(k)`.
pub fn prop31_deviation(k: u64, prec: u32) -> Result<(BigFloat, BigFloat)> {
    if k < 2 {
        return Err(Error::OutOfDomain(format!("prop31_deviation needs k >= 2, got {k}")));
    }
    let rec = density_record(k);
    let w = prec + 16;
    let phi = BigFloat::phi(w);
    let one = BigFloat::from_i64(1, w);
    let df_n = BigFloat::from_rat(&rec.df_n, w);
    let df_m = BigFloat::from_rat(&rec.df_m, w);
    let dev = df_n.sub(&phi.sub(&one)).abs().with_precision(prec);
    let kappa = phi.sub(&df_m).with_precision(prec);
    Ok((dev, kappa))
}

/// Values behind the two-density inequality for `FW(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop32Report {
    pub k: u64,
    /// `floor(2m/n)`
    pub floor_2m_n: Nat,
    /// `ceil(2n/m)`
    pub ceil_2n_m: Nat,
    /// `DF_m floor(2m/n) + DF_n ceil(2n/m)`
    pub lhs: Rat,
    /// `2m (floor(2m/n) + ceil(2n/m)) / (m+n)^2`
    pub eq10_mid: Rat,
    pub holds_lt1: bool,
}

pub fn prop32_eval(k: u64) -> Result<Prop32Report> {
    let rec = density_record(k);
    if k < 4 || rec.m.is_zero() || rec.n.is_zero() {
        return Err(Error::OutOfDomain(format!("prop32_eval needs k >= 4, got {k}")));
    }
    let two_m: Nat = &rec.m << 1usize;
    let two_n: Nat = &rec.n << 1usize;
    let floor_2m_n = two_m.div_floor(&rec.n);
    let ceil_2n_m = two_n.div_ceil(&rec.m);
    let lhs = &rec.df_m * rat_from_nat(&floor_2m_n) + &rec.df_n * rat_from_nat(&ceil_2n_m);
    let total = &rec.m + &rec.n;
    let eq10_mid = nat_ratio(&(&two_m * (&floor_2m_n + &ceil_2n_m)), &(&total * &total));
    let holds_lt1 = lhs < Rat::one();
    Ok(Prop32Report { k, floor_2m_n, ceil_2n_m, lhs, eq10_mid, holds_lt1 })
}

/// `A(k)/A(k-1) = F_{k+1}(F_{k+1} - 1) / (F_{k-1}(F_k - 1))` and
/// `A_eps = ratio - phi^3`.
pub fn lemma34_ratio(k: u64, prec: u32) -> Result<(Rat, BigFloat)> {
    if k < 4 {
        return Err(Error::OutOfDomain(format!("lemma34_ratio needs k >= 4, got {k}")));
    }
    let (f_km1, f_k, f_kp1) = (fib(k - 1), fib(k), fib(k + 1));
    let num = &f_kp1 * (&f_kp1 - 1u32);
    let den = &f_km1 * (&f_k - 1u32);
    let ratio = nat_ratio(&num, &den);
    let w = prec + 16;
    let a_eps = BigFloat::from_rat(&ratio, w).sub(&phi_pow(3, w)).with_precision(prec);
    Ok((ratio, a_eps))
}

/// Two-column variant of the ratio with `m`, `n` read as the zero and one
/// counts of `FW(k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CountRatioRow {
    pub k: u64,
    pub df_m: Rat,
    pub df_n: Rat,
    /// `m^2 (m-1) / (n^2 (n-1))`, tends to `phi^-3`
    pub count_ratio: Rat,
    /// `DF_m m^2 (m-1) / (DF_n n^2 (n-1)) - phi^3`, tends to `phi^-4 - phi^3`
    pub a_eps: BigFloat,
}

pub fn count_ratio_row(k: u64, prec: u32) -> Result<CountRatioRow> {
    if k < 4 {
        return Err(Error::OutOfDomain(format!("count_ratio_row needs k >= 4, got {k}")));
    }
    let rec = density_record(k);
    let (m, n) = (rat_from_nat(&rec.m), rat_from_nat(&rec.n));
    let one = Rat::one();
    let count_ratio = (&m * &m * (&m - &one)) / (&n * &n * (&n - &one));
    let weighted = &count_ratio * &rec.df_m / &rec.df_n;
    let w = prec + 16;
    let a_eps = BigFloat::from_rat(&weighted, w).sub(&phi_pow(3, w)).with_precision(prec);
    Ok(CountRatioRow { k, df_m: rec.df_m, df_n: rec.df_n, count_ratio, a_eps })
}

/// `phi^e` at `prec` bits, via `phi^e = F_e phi + F_{e-1}`.
pub fn phi_pow(e: u64, prec: u32) -> BigFloat {
    if e == 0 {
        return BigFloat::from_i64(1, prec);
    }
    let w = prec + 8;
    let phi = BigFloat::phi(w);
    phi.mul(&BigFloat::from_nat(&fib(e), w))
        .add(&BigFloat::from_nat(&fib(e - 1), w))
        .with_precision(prec)
}

/// Exact comparison `lhs < rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub k: u64,
    pub lhs: Rat,
    pub rhs: Rat,
    pub holds: bool,
}

impl BoundReport {
    pub fn new(k: u64, lhs: Rat, rhs: Rat) -> Self {
        let holds = lhs < rhs;
        BoundReport { k, lhs, rhs, holds }
    }
}

/// Zero density `m/(m+n)` against `m(m+1) / (n(2m - n + 1))`.
pub fn lemma35_bound(k: u64) -> Result<BoundReport> {
    let rec = density_record(k);
    let m = BigInt::from_biguint(Sign::Plus, rec.m.clone());
    let n = BigInt::from_biguint(Sign::Plus, rec.n.clone());
    let den: BigInt = &n * (BigInt::from(2) * &m - &n + 1i32);
    if n.is_zero() || den.is_zero() {
        return Err(Error::DegenerateDenominator { k });
    }
    let rhs = Rat::new(&m * (&m + 1), den);
    Ok(BoundReport::new(k, rec.df_m, rhs))
}

/// One row of the ratio table.
///
/// `l1 = F_{k+1}/F_k`, `l2 = F_k/F_{k+1}`, `l3 = F_{k+2}/F_k`, `l4 = l1 - l2`,
/// `l5 = l3 - l2`, `l6 = l3 - l1`, and `l7 = |FW(k+3)| / |FW(k)| =
/// F_{k+4}/F_{k+1}`, the three-step word-length ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioRow {
    pub k: u64,
    pub l1: Rat,
    pub l2: Rat,
    pub l3: Rat,
    pub l4: Rat,
    pub l5: Rat,
    pub l6: Rat,
    pub l7: Rat,
}

impl RatioRow {
    pub fn values(&self) -> [&Rat; 7] {
        [&self.l1, &self.l2, &self.l3, &self.l4, &self.l5, &self.l6, &self.l7]
    }
}

pub fn ratio_row(k: u64) -> RatioRow {
    assert!(k >= 1, "ratio rows start at k = 1");
    let f = |i: u64| rat_from_nat(&fib(i));
    let (fk, fk1, fk2) = (f(k), f(k + 1), f(k + 2));
    let l1 = &fk1 / &fk;
    let l2 = &fk / &fk1;
    let l3 = &fk2 / &fk;
    let l4 = &l1 - &l2;
    let l5 = &l3 - &l2;
    let l6 = &l3 - &l1;
    let l7 = f(k + 4) / fk1;
    RatioRow { k, l1, l2, l3, l4, l5, l6, l7 }
}

pub fn ratio_table(k_max: u64) -> Vec<RatioRow> {
    ratio_table_with(k_max, Strategy::default())
}

pub fn ratio_table_with(k_max: u64, strategy: Strategy) -> Vec<RatioRow> {
    strategy.map_range(1..=k_max, ratio_row)
}

/// `F_{k+lambda} / F_k`.
pub fn lambda_ratio(k: u64, lambda: u64) -> Result<Rat> {
    if k == 0 {
        return Err(Error::OutOfDomain("lambda_ratio needs k >= 1".into()));
    }
    Ok(nat_ratio(&fib(k + lambda), &fib(k)))
}

/// Fraction of `[1, x]` occupied by distinct Fibonacci numbers.
pub fn natural_density_fib(x: &Nat) -> Result<Rat> {
    if x.is_zero() {
        return Err(Error::OutOfDomain("natural_density_fib needs x >= 1".into()));
    }
    Ok(nat_ratio(&fib_count_upto(x), x))
}

/// Number of distinct Fibonacci numbers in `[1, x]` (1 counted once).
pub fn fib_count_upto(x: &Nat) -> Nat {
    let mut count = Nat::zero();
    let (mut a, mut b) = (Nat::one(), Nat::from(2u32));
    while &a <= x {
        count += 1u32;
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    count
}

/// `2 F_{k+1} F_{k+lambda} / (k(k+1))`, exact.
pub fn product_norm_exact(k: u64, lambda: u64) -> Rat {
    let num = fib(k + 1) * fib(k + lambda) * 2u32;
    nat_ratio(&num, &Nat::from(k * (k + 1)))
}

/// Same quantity with both Fibonacci factors evaluated by Binet at `prec`
/// bits; rejected unless within `2^{-prec/2}` relative error of the exact value.
pub fn product_norm(k: u64, lambda: u64, prec: u32) -> Result<BigFloat> {
    if k == 0 || lambda == 0 {
        return Err(Error::OutOfDomain("product_norm needs k, lambda >= 1".into()));
    }
    if prec < 64 {
        return Err(Error::PrecisionTooLow(format!("product_norm needs prec >= 64, got {prec}")));
    }
    let value = binet(k + 1, prec)
        .mul(&binet(k + lambda, prec))
        .mul_int(&BigInt::from(2))
        .div_int(&BigInt::from(k * (k + 1)));
    let exact = product_norm_exact(k, lambda);
    let rel = ((value.to_rat() - &exact) / &exact).abs();
    if rel >= Rat::new(BigInt::one(), BigInt::one() << (prec / 2)) {
        return Err(Error::PrecisionTooLow(format!(
            "product_norm({k}, {lambda}) at {prec} bits: relative error {:.3e}",
            crate::num::rat_to_f64(&rel)
        )));
    }
    Ok(value)
}

/// `c_j = F_j F_{j+lambda}` satisfies `c_j = 2c_{j-1} + 2c_{j-2} - c_{j-3}` for
/// `3 <= j < n_terms`.
pub fn product_recurrence_check(lambda: u64, n_terms: usize) -> bool {
    let c: Vec<BigInt> = (0..n_terms as u64)
        .map(|j| BigInt::from_biguint(Sign::Plus, fib(j) * fib(j + lambda)))
        .collect();
    (3..n_terms).all(|j| c[j] == BigInt::from(2) * (&c[j - 1] + &c[j - 2]) - &c[j - 3])
}

/// `|F_k/F_{k+1} - (phi - 1)|` compared exactly against `1/F_{k+1}^2`, with
/// `phi` at `prec` bits.
pub fn convergent_bound(k: u64, prec: u32) -> BoundReport {
    let (fk, fk1) = (fib(k), fib(k + 1));
    let phi_m1 = BigFloat::phi(prec).sub(&BigFloat::from_i64(1, prec)).to_rat();
    let lhs = (nat_ratio(&fk, &fk1) - phi_m1).abs();
    let rhs = nat_ratio(&Nat::one(), &(&fk1 * &fk1));
    BoundReport::new(k, lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{nat, rat};

    #[test]
    fn records() {
        let r6 = density_record(6);
        assert_eq!((r6.df_m.clone(), r6.df_n.clone()), (rat(5, 13), rat(8, 13)));
        let r2 = density_record(2);
        assert_eq!((r2.df_m, r2.df_n), (rat(1, 2), rat(1, 2)));
        let r0 = density_record(0);
        assert_eq!((r0.df_m, r0.df_n), (rat(1, 1), rat(0, 1)));
        let r18 = density_record(18);
        assert_eq!((r18.m, r18.n), (nat(1597), nat(2584)));
    }

    #[test]
    fn table_rows_sum_to_one() {
        for rec in density_table(60) {
            assert_eq!(&rec.df_m + &rec.df_n, Rat::one());
        }
        assert_eq!(
            density_table_with(30, Strategy::Sequential),
            density_table_with(30, Strategy::Parallel)
        );
    }

    #[test]
    fn prop31_values() {
        let (dev, _) = prop31_deviation(19, 128).unwrap();
        assert!(dev.to_f64() < 1e-7);
        let (_, kappa2) = prop31_deviation(2, 128).unwrap();
        let expected = BigFloat::phi(140).sub(&BigFloat::from_rat(&rat(1, 2), 140));
        assert!(kappa2.sub(&expected).abs().to_f64() < 1e-30);
        let (_, kappa30) = prop31_deviation(30, 128).unwrap();
        let limit = BigFloat::phi(128).mul_int(&BigInt::from(2)).sub(&BigFloat::from_i64(2, 128));
        assert!(kappa30.sub(&limit).abs().to_f64() < 1e-12);
        assert!(prop31_deviation(1, 128).is_err());
    }

    #[test]
    fn prop32_values() {
        let r5 = prop32_eval(5).unwrap();
        assert_eq!(r5.floor_2m_n, nat(1));
        assert_eq!(r5.ceil_2n_m, nat(4));
        assert_eq!(r5.lhs, rat(23, 8));
        assert!(!r5.holds_lt1);
        assert_eq!(r5.eq10_mid, rat(15, 32));
        assert_eq!(prop32_eval(4).unwrap().floor_2m_n, nat(1));
        assert!(prop32_eval(3).is_err());
    }

    #[test]
    fn lemma34_values() {
        let (r10, _) = lemma34_ratio(10, 128).unwrap();
        assert_eq!(r10, rat(89 * 88, 34 * 54));
        let (r14, a14) = lemma34_ratio(14, 128).unwrap();
        assert!((crate::num::rat_to_f64(&r14) - 4.2404).abs() < 1e-4);
        assert!((a14.to_f64() - 0.0043).abs() < 1e-4);
        let (_, a20) = lemma34_ratio(20, 128).unwrap();
        assert!(a20.abs().to_f64() < 1e-3);
    }

    #[test]
    fn count_ratio_rows() {
        let r5 = count_ratio_row(5, 128).unwrap();
        assert_eq!(r5.count_ratio, rat(9, 50));
        assert!((r5.a_eps.to_f64() + 4.128).abs() < 1e-3);
        let r40 = count_ratio_row(40, 128).unwrap();
        let limit = phi_pow(4, 128);
        let inv = BigFloat::from_i64(1, 128).div(&limit).sub(&phi_pow(3, 128));
        assert!(r40.a_eps.sub(&inv).abs().to_f64() < 1e-6);
    }

    #[test]
    fn lemma35_values() {
        let b6 = lemma35_bound(6).unwrap();
        assert_eq!((b6.lhs.clone(), b6.rhs.clone(), b6.holds), (rat(5, 13), rat(5, 4), true));
        let b2 = lemma35_bound(2).unwrap();
        assert_eq!((b2.lhs, b2.rhs, b2.holds), (rat(1, 2), rat(1, 1), true));
        let b3 = lemma35_bound(3).unwrap();
        assert_eq!((b3.lhs, b3.rhs, b3.holds), (rat(1, 3), rat(1, 1), true));
        assert_eq!(lemma35_bound(0), Err(Error::DegenerateDenominator { k: 0 }));
        assert_eq!(lemma35_bound(1), Err(Error::DegenerateDenominator { k: 1 }));
    }

    #[test]
    fn ratio_rows() {
        let r2 = ratio_row(2);
        assert_eq!((r2.l1, r2.l2), (rat(2, 1), rat(1, 2)));
        let r1 = ratio_row(1);
        assert_eq!(r1.l7, rat(5, 1));
        let r40 = ratio_row(40);
        let err = BigFloat::from_rat(&r40.l7, 256).sub(&phi_pow(3, 256)).abs();
        assert!(err.to_f64() < 1e-10);
        // F_{k+2} - F_{k+1} = F_k
        for row in ratio_table(30) {
            assert_eq!(row.l6, Rat::one());
            assert_eq!(&row.l4 + Rat::one(), row.l5);
        }
    }

    #[test]
    fn lambda_ratios() {
        assert_eq!(lambda_ratio(7, 0).unwrap(), Rat::one());
        let phi = BigFloat::phi(256);
        let r2 = BigFloat::from_rat(&lambda_ratio(30, 2).unwrap(), 256);
        assert!(r2.sub(&phi.add(&BigFloat::from_i64(1, 256))).abs().to_f64() < 1e-10);
        let r3 = BigFloat::from_rat(&lambda_ratio(30, 3).unwrap(), 256);
        assert!(r3.sub(&phi_pow(3, 256)).abs().to_f64() < 1e-9);
        let claimed = phi.add(&BigFloat::from_i64(2, 256));
        assert!(r3.sub(&claimed).abs().to_f64() > 0.6);
    }

    #[test]
    fn natural_density_examples() {
        assert_eq!(natural_density_fib(&nat(1000)).unwrap(), rat(15, 1000));
        assert_eq!(natural_density_fib(&nat(1)).unwrap(), rat(1, 1));
        assert_eq!(natural_density_fib(&nat(1_000_000)).unwrap(), rat(29, 1_000_000));
        assert!(natural_density_fib(&nat(0)).is_err());
    }

    #[test]
    fn product_norm_examples() {
        assert_eq!(product_norm_exact(3, 1), rat(3, 2));
        assert_eq!(product_norm_exact(1, 1), rat(1, 1));
        let v = product_norm(3, 1, 128).unwrap();
        assert!((v.to_f64() - 1.5).abs() < 1e-30);
        assert!(product_norm(0, 1, 128).is_err());
        assert!(matches!(product_norm(3, 1, 32), Err(Error::PrecisionTooLow(_))));
    }

    #[test]
    fn product_recurrence() {
        for lambda in 0..=8 {
            assert!(product_recurrence_check(lambda, 64), "lambda = {lambda}");
        }
    }

    #[test]
    fn convergent_bounds() {
        for k in 2..=60 {
            assert!(convergent_bound(k, 256).holds, "k = {k}");
        }
    }
}
