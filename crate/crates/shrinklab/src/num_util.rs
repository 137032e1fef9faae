//! Exact rational and big-integer helpers shared across modules.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn ratio_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact rational value of a finite f64. Every finite f64 is a dyadic
/// rational, so this conversion is lossless.
pub fn ratio_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

/// Rational to f64, robust against numerators/denominators whose own f64
/// conversion would overflow.
pub fn ratio_to_f64(x: &BigRational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let num_bits = x.numer().bits() as i64;
    let den_bits = x.denom().bits() as i64;
    if num_bits < 1000 && den_bits < 1000 {
        if let (Some(n), Some(d)) = (x.numer().to_f64(), x.denom().to_f64()) {
            if n.is_finite() && d.is_finite() && d != 0.0 {
                return n / d;
            }
        }
    }
    // Scale so that num/den each fit comfortably in f64 range.
    let shift_n = (num_bits - 500).max(0) as u64;
    let shift_d = (den_bits - 500).max(0) as u64;
    let n = (x.numer() >> shift_n).to_f64().unwrap_or(f64::NAN);
    let d = (x.denom() >> shift_d).to_f64().unwrap_or(f64::NAN);
    (n / d) * 2f64.powi(shift_n as i32 - shift_d as i32)
}

/// Fractional part x − ⌊x⌋ ∈ [0, 1).
pub fn frac_mod1(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// Distance to the nearest integer, ‖x‖ ∈ [0, 1/2].
pub fn dist_to_int_exact(x: &BigRational) -> BigRational {
    let f = frac_mod1(x);
    let one_minus = BigRational::one() - &f;
    if f <= one_minus {
        f
    } else {
        one_minus
    }
}

/// ‖v‖_Z = max over coordinates of the distance to the nearest integer.
pub fn dist_to_lattice_exact(v: &[BigRational]) -> BigRational {
    v.iter()
        .map(dist_to_int_exact)
        .max()
        .unwrap_or_else(BigRational::zero)
}

/// Sup-metric distance between two points of [0,1)^d viewed on the torus.
pub fn torus_dist_exact(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| dist_to_int_exact(&(x - y)))
        .max()
        .unwrap_or_else(BigRational::zero)
}

/// ⌊x^{1/n}⌋ for x ≥ 0.
pub fn nth_root_floor(x: &BigInt, n: u32) -> BigInt {
    assert!(!x.is_negative(), "nth_root_floor of negative value");
    x.nth_root(n)
}

/// ⌈x^{1/n}⌉ for x ≥ 0.
pub fn nth_root_ceil(x: &BigInt, n: u32) -> BigInt {
    let r = nth_root_floor(x, n);
    if r.clone().pow(n) == *x {
        r
    } else {
        r + BigInt::one()
    }
}

pub fn is_perfect_nth_power(x: &BigInt, n: u32) -> bool {
    if x.is_negative() {
        return false;
    }
    nth_root_floor(x, n).pow(n) == *x
}

/// x^e for rational x and non-negative integer exponent.
pub fn ratio_pow(x: &BigRational, e: u32) -> BigRational {
    BigRational::new(x.numer().clone().pow(e), x.denom().clone().pow(e))
}

/// ⌊log10(x)⌋ for x > 0.
pub fn floor_log10(x: &BigRational) -> i64 {
    assert!(x.is_positive());
    let nd = x.numer().to_string().trim_start_matches('-').len() as i64;
    let dd = x.denom().to_string().len() as i64;
    // 10^(nd-dd-1) ≤ possible range ≤ 10^(nd-dd+1); fix up by comparison.
    let mut e = nd - dd;
    let ten = BigInt::from(10);
    loop {
        let p = pow10(&ten, e);
        if &p > x {
            e -= 1;
            continue;
        }
        let p_next = pow10(&ten, e + 1);
        if &p_next <= x {
            e += 1;
            continue;
        }
        return e;
    }
}

fn pow10(ten: &BigInt, e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(ten.pow(e as u32))
    } else {
        BigRational::new(BigInt::one(), ten.pow((-e) as u32))
    }
}

/// Smallest decimal number m·10^{-k} ≥ x with `sig` significant digits.
/// Returns the value together with its exact mantissa/exponent.
pub fn decimal_upper(x: &BigRational, sig: u32) -> Decimal {
    if x.is_zero() {
        return Decimal {
            mantissa: BigInt::zero(),
            exp10: 0,
        };
    }
    assert!(x.is_positive(), "decimal_upper expects x >= 0");
    let e = floor_log10(x);
    let k = sig as i64 - 1 - e;
    let scaled = if k >= 0 {
        x * BigRational::from_integer(BigInt::from(10).pow(k as u32))
    } else {
        x / BigRational::from_integer(BigInt::from(10).pow((-k) as u32))
    };
    Decimal {
        mantissa: scaled.ceil().to_integer(),
        exp10: -k,
    }
}

/// Exact decimal number mantissa·10^exp10.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decimal {
    pub mantissa: BigInt,
    pub exp10: i64,
}

impl Decimal {
    pub fn to_ratio(&self) -> BigRational {
        let m = BigRational::from_integer(self.mantissa.clone());
        if self.exp10 >= 0 {
            m * BigRational::from_integer(BigInt::from(10).pow(self.exp10 as u32))
        } else {
            m / BigRational::from_integer(BigInt::from(10).pow((-self.exp10) as u32))
        }
    }

    /// Lossless textual form, e.g. `"1234e-40"` or `"25"`.
    pub fn to_string_exact(&self) -> String {
        if self.exp10 == 0 {
            self.mantissa.to_string()
        } else {
            format!("{}e{}", self.mantissa, self.exp10)
        }
    }

    pub fn parse(s: &str) -> Result<Decimal> {
        let bad = |m: &str| Error::config("decimal", format!("{m}: {s:?}"));
        let s = s.trim();
        let (mant_str, exp10) = match s.split_once(['e', 'E']) {
            Some((m, e)) => (
                m,
                e.parse::<i64>().map_err(|_| bad("bad exponent"))?,
            ),
            None => (s, 0),
        };
        let (int_part, frac_part) = match mant_str.split_once('.') {
            Some((i, f)) => (i, f),
            None => (mant_str, ""),
        };
        let digits: String = format!("{int_part}{frac_part}");
        let mantissa: BigInt = digits.parse().map_err(|_| bad("bad mantissa"))?;
        Ok(Decimal {
            mantissa,
            exp10: exp10 - frac_part.len() as i64,
        })
    }
}

/// Parse a decimal string (plain or scientific) to an exact rational.
pub fn parse_decimal(s: &str) -> Result<BigRational> {
    Ok(Decimal::parse(s)?.to_ratio())
}

/// First `digits` decimal digits of x ∈ [0, 1), zero-padded (truncation).
pub fn decimal_digits(x: &BigRational, digits: u32) -> String {
    assert!(!x.is_negative() && x < &BigRational::one());
    let scaled = x * BigRational::from_integer(BigInt::from(10).pow(digits));
    let int = scaled.floor().to_integer();
    let raw = int.to_string();
    format!("0.{}{}", "0".repeat(digits as usize - raw.len().min(digits as usize)), raw)
}

fn factorial(n: u32) -> BigInt {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= k;
    }
    f
}

/// Rational bounds lo ≤ e^{-l} ≤ hi for integer l ≥ 0, tight to ~50 digits.
pub fn exp_neg_bounds(l: u32) -> (BigRational, BigRational) {
    // e from the Taylor series with explicit remainder: the tail after
    // 1/K! is below 2/(K+1)!.
    const K: u32 = 42;
    let mut e_lo = BigRational::zero();
    for k in 0..=K {
        e_lo += BigRational::new(BigInt::one(), factorial(k));
    }
    let e_hi = &e_lo + BigRational::new(BigInt::from(2), factorial(K + 1));
    if l == 0 {
        return (BigRational::one(), BigRational::one());
    }
    let lo = BigRational::one() / ratio_pow(&e_hi, l);
    let hi = BigRational::one() / ratio_pow(&e_lo, l);
    (lo, hi)
}

/// Largest dyadic rational m/2^bits ≤ x.
pub fn dyadic_floor(x: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = x * BigRational::from_integer(scale.clone());
    BigRational::new(scaled.floor().to_integer(), scale)
}

/// Deterministic split of a master seed into a per-item stream id.
/// Documented counter scheme: stream i of the master ChaCha key, so results
/// are independent of worker count or iteration order.
pub fn seed_stream(master: u64, index: u64) -> (u64, u64) {
    (master, index)
}

pub fn bigint_to_u64(x: &BigInt) -> Option<u64> {
    if x.sign() == Sign::Minus {
        return None;
    }
    x.to_u64()
}

/// Exact ceiling division for positive rationals: smallest integer ≥ x.
pub fn ceil_to_int(x: &BigRational) -> BigInt {
    x.ceil().to_integer()
}

pub fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dist_to_int_examples() {
        assert_eq!(dist_to_int_exact(&ratio(1, 2)), ratio(1, 2));
        assert_eq!(dist_to_int_exact(&ratio(5, 4)), ratio(1, 4));
        assert_eq!(dist_to_int_exact(&ratio(-1, 10)), ratio(1, 10));
        assert_eq!(dist_to_int_exact(&ratio_int(7)), BigRational::zero());
    }

    #[test]
    fn lattice_distance_is_coordinate_max() {
        let v = vec![ratio(1, 2), ratio(1, 10)];
        assert_eq!(dist_to_lattice_exact(&v), ratio(1, 2));
        let w = vec![ratio(9, 10), ratio(2, 5)];
        assert_eq!(dist_to_lattice_exact(&w), ratio(2, 5));
    }

    #[test]
    fn nth_roots() {
        assert_eq!(nth_root_floor(&big(35), 2), big(5));
        assert_eq!(nth_root_ceil(&big(35), 2), big(6));
        assert_eq!(nth_root_ceil(&big(36), 2), big(6));
        assert!(is_perfect_nth_power(&big(729), 3));
        assert!(!is_perfect_nth_power(&big(730), 3));
    }

    #[test]
    fn floor_log10_spans_scales() {
        assert_eq!(floor_log10(&ratio(1, 1)), 0);
        assert_eq!(floor_log10(&ratio(999, 1)), 2);
        assert_eq!(floor_log10(&ratio(1, 1000)), -3);
        assert_eq!(floor_log10(&ratio(17, 5)), 0);
    }

    #[test]
    fn decimal_upper_is_upper_bound_with_sig_digits() {
        let x = ratio(1, 7);
        let d = decimal_upper(&x, 30);
        assert!(d.to_ratio() >= x);
        assert!((d.to_ratio() - &x) < ratio(1, 1_000_000_000));
        let back = parse_decimal(&d.to_string_exact()).unwrap();
        assert_eq!(back, d.to_ratio());
    }

    #[test]
    fn decimal_parse_forms() {
        assert_eq!(parse_decimal("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_decimal("25e-2").unwrap(), ratio(1, 4));
        assert_eq!(parse_decimal("1.5e1").unwrap(), ratio_int(15));
        assert_eq!(parse_decimal("-3").unwrap(), ratio_int(-3));
    }

    #[test]
    fn exp_bounds_bracket_known_values() {
        let (lo, hi) = exp_neg_bounds(1);
        let e_inv = 0.36787944117144233;
        assert!(ratio_to_f64(&lo) <= e_inv && e_inv <= ratio_to_f64(&hi));
        assert!(ratio_to_f64(&(&hi - &lo)) < 1e-40);
        let (lo5, hi5) = exp_neg_bounds(5);
        let e5 = 0.006737946999085467;
        assert!(ratio_to_f64(&lo5) <= e5 && e5 <= ratio_to_f64(&hi5));
    }

    #[test]
    fn huge_ratio_to_f64() {
        let x = BigRational::new(BigInt::from(3) * (BigInt::one() << 2000), BigInt::one() << 2001);
        assert!((ratio_to_f64(&x) - 1.5).abs() < 1e-12);
    }

    #[test]
    fn dyadic_floor_bounds() {
        let x = ratio(1, 3);
        let f = dyadic_floor(&x, 64);
        assert!(f <= x);
        assert!((&x - &f) < BigRational::new(BigInt::one(), BigInt::one() << 63));
    }
}
