//! Arbitrary-precision ball arithmetic.
//!
//! A [`RealScalar`] is a rational midpoint together with a guaranteed error
//! radius: the represented real number lies in [mid − rad, mid + rad].
//! Arithmetic propagates the radius exactly (interval discipline, outward
//! by construction since all endpoint computations are exact rationals).
//! Comparisons that the current enclosures cannot decide return
//! [`Error::PrecisionExhausted`] instead of guessing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::num_util::{dist_to_int_exact, dyadic_floor, ratio_to_f64};

/// Default working precision in bits.
pub const DEFAULT_PRECISION: u32 = 512;

#[derive(Debug, Clone, PartialEq)]
pub struct RealScalar {
    mid: BigRational,
    rad: BigRational,
}

impl RealScalar {
    pub fn exact(mid: BigRational) -> Self {
        RealScalar {
            mid,
            rad: BigRational::zero(),
        }
    }

    pub fn ball(mid: BigRational, rad: BigRational) -> Self {
        assert!(!rad.is_negative(), "negative error radius");
        RealScalar { mid, rad }
    }

    pub fn from_int(n: i64) -> Self {
        Self::exact(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(n: BigInt) -> Self {
        Self::exact(BigRational::from_integer(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Exact value of a finite f64 (every finite f64 is rational).
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Self::exact)
    }

    pub fn zero() -> Self {
        Self::exact(BigRational::zero())
    }

    pub fn mid(&self) -> &BigRational {
        &self.mid
    }

    pub fn rad(&self) -> &BigRational {
        &self.rad
    }

    pub fn lo(&self) -> BigRational {
        &self.mid - &self.rad
    }

    pub fn hi(&self) -> BigRational {
        &self.mid + &self.rad
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        ratio_to_f64(&self.mid)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RealScalar {
            mid: &self.mid + &rhs.mid,
            rad: &self.rad + &rhs.rad,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        RealScalar {
            mid: &self.mid - &rhs.mid,
            rad: &self.rad + &rhs.rad,
        }
    }

    pub fn neg(&self) -> Self {
        RealScalar {
            mid: -self.mid.clone(),
            rad: self.rad.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // (m1 ± r1)(m2 ± r2) ⊆ m1 m2 ± (|m1| r2 + |m2| r1 + r1 r2)
        let rad = self.mid.abs() * &rhs.rad + rhs.mid.abs() * &self.rad + &self.rad * &rhs.rad;
        RealScalar {
            mid: &self.mid * &rhs.mid,
            rad,
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        let k = BigRational::from_integer(k.clone());
        RealScalar {
            mid: &self.mid * &k,
            rad: &self.rad * k.abs(),
        }
    }

    pub fn mul_ratio(&self, k: &BigRational) -> Self {
        RealScalar {
            mid: &self.mid * k,
            rad: &self.rad * k.abs(),
        }
    }

    pub fn abs(&self) -> Self {
        let lo = self.lo();
        let hi = self.hi();
        if !lo.is_negative() {
            self.clone()
        } else if !hi.is_positive() {
            self.neg()
        } else {
            // Straddles zero: |x| ∈ [0, max(|lo|, hi)]
            let top = if -&lo > hi { -lo } else { hi };
            let half = BigRational::new(BigInt::one(), BigInt::from(2));
            RealScalar {
                mid: &top * &half,
                rad: top * half,
            }
        }
    }

    /// Reciprocal; errors if the enclosure contains zero.
    pub fn recip(&self) -> Result<Self> {
        let lo = self.lo();
        let hi = self.hi();
        if !lo.is_positive() && !hi.is_negative() {
            return Err(Error::PrecisionExhausted(
                "reciprocal of an enclosure containing zero".into(),
            ));
        }
        let inv_lo = BigRational::one() / hi;
        let inv_hi = BigRational::one() / lo;
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        Ok(RealScalar {
            mid: (&inv_lo + &inv_hi) * &half,
            rad: (inv_hi - inv_lo) * half,
        })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.recip()?))
    }

    /// ⌊x⌋ when decidable at the current enclosure.
    pub fn floor(&self) -> Result<BigInt> {
        let fl = self.lo().floor().to_integer();
        let fh = self.hi().floor().to_integer();
        if fl == fh {
            return Ok(fl);
        }
        if self.is_exact() {
            return Ok(self.mid.floor().to_integer());
        }
        // hi may sit exactly on the boundary integer with the open part below.
        if &fh - &fl == BigInt::one() && self.hi() == BigRational::from_integer(fh.clone()) {
            // The true value could still be exactly fh; undecidable.
            return Err(Error::PrecisionExhausted(format!(
                "floor undecidable on enclosure [{}, {}]",
                ratio_to_f64(&self.lo()),
                ratio_to_f64(&self.hi())
            )));
        }
        Err(Error::PrecisionExhausted(format!(
            "floor undecidable on enclosure [{}, {}]",
            ratio_to_f64(&self.lo()),
            ratio_to_f64(&self.hi())
        )))
    }

    /// Strict x < y when decidable.
    pub fn try_lt(&self, rhs: &Self) -> Result<bool> {
        if self.hi() < rhs.lo() {
            return Ok(true);
        }
        if self.lo() >= rhs.hi() {
            return Ok(false);
        }
        Err(Error::PrecisionExhausted("comparison undecidable".into()))
    }

    pub fn try_gt(&self, rhs: &Self) -> Result<bool> {
        rhs.try_lt(self)
    }

    /// x ≤ y when decidable.
    pub fn try_le(&self, rhs: &Self) -> Result<bool> {
        if self.hi() <= rhs.lo() {
            return Ok(true);
        }
        if self.lo() > rhs.hi() {
            return Ok(false);
        }
        Err(Error::PrecisionExhausted("comparison undecidable".into()))
    }

    pub fn try_ge(&self, rhs: &Self) -> Result<bool> {
        rhs.try_le(self)
    }

    /// Guaranteed x ≤ c for a rational threshold (sufficient check: the
    /// whole enclosure is below c).
    pub fn certainly_le(&self, c: &BigRational) -> bool {
        self.hi() <= *c
    }

    pub fn certainly_ge(&self, c: &BigRational) -> bool {
        self.lo() >= *c
    }

    pub fn certainly_gt(&self, c: &BigRational) -> bool {
        self.lo() > *c
    }

    /// ‖x‖ = distance to the nearest integer, as a ball. The map is
    /// 1-Lipschitz so the radius carries over unchanged.
    pub fn dist_to_int(&self) -> RealScalar {
        RealScalar {
            mid: dist_to_int_exact(&self.mid),
            rad: self.rad.clone(),
        }
    }

    /// Round the midpoint to a dyadic with `bits` fractional bits,
    /// inflating the radius by the rounding error.
    pub fn compress(&self, bits: u32) -> RealScalar {
        let scale = BigInt::one() << bits;
        let scaled = &self.mid * BigRational::from_integer(scale.clone());
        let rounded = BigRational::new(scaled.round().to_integer(), scale.clone());
        let err = (&self.mid - &rounded).abs();
        RealScalar {
            mid: rounded,
            rad: &self.rad + err,
        }
    }

    /// Largest dyadic rational (at `bits` precision) certainly ≤ the value.
    pub fn dyadic_lower(&self, bits: u32) -> BigRational {
        dyadic_floor(&self.lo(), bits)
    }

    /// √x for rational x ≥ 0, accurate to 2^-bits.
    pub fn sqrt_ratio(x: &BigRational, bits: u32) -> Result<Self> {
        if x.is_negative() {
            return Err(Error::PrecisionExhausted("sqrt of negative".into()));
        }
        if x.is_zero() {
            return Ok(Self::zero());
        }
        let scale = BigInt::one() << (2 * bits);
        let scaled = (x * BigRational::from_integer(scale)).floor().to_integer();
        let t = scaled.sqrt();
        // sqrt(x)·2^bits ∈ [t, t+2)
        let denom = BigInt::one() << bits;
        let lo = BigRational::new(t.clone(), denom.clone());
        let hi = BigRational::new(t + BigInt::from(2), denom);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        Ok(RealScalar {
            mid: (&lo + &hi) * &half,
            rad: (hi - lo) * half,
        })
    }

    /// The golden-mean fractional part g = (√5 − 1)/2 ≈ 0.618.
    pub fn golden_mean(bits: u32) -> Self {
        let sqrt5 = Self::sqrt_ratio(&BigRational::from_integer(BigInt::from(5)), bits + 2)
            .expect("sqrt(5)");
        sqrt5
            .sub(&Self::from_int(1))
            .mul_ratio(&BigRational::new(BigInt::one(), BigInt::from(2)))
    }

    /// √2 − 1 ≈ 0.4142, continued fraction [0; 2, 2, 2, …].
    pub fn sqrt2_minus_one(bits: u32) -> Self {
        let sqrt2 = Self::sqrt_ratio(&BigRational::from_integer(BigInt::from(2)), bits + 2)
            .expect("sqrt(2)");
        sqrt2.sub(&Self::from_int(1))
    }
}

impl std::fmt::Display for RealScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.to_f64())
        } else {
            write!(f, "{} ± {:.3e}", self.to_f64(), ratio_to_f64(&self.rad))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num_util::ratio;
    use proptest::prelude::*;

    #[test]
    fn exact_arithmetic_stays_exact() {
        let a = RealScalar::from_ratio(1, 3);
        let b = RealScalar::from_ratio(1, 6);
        let s = a.add(&b);
        assert!(s.is_exact());
        assert_eq!(*s.mid(), ratio(1, 2));
        let p = a.mul(&b);
        assert_eq!(*p.mid(), ratio(1, 18));
    }

    #[test]
    fn comparison_decidability() {
        let a = RealScalar::ball(ratio(1, 2), ratio(1, 100));
        let b = RealScalar::ball(ratio(3, 4), ratio(1, 100));
        assert!(a.try_lt(&b).unwrap());
        assert!(!b.try_lt(&a).unwrap());
        let c = RealScalar::ball(ratio(1, 2), ratio(1, 2));
        assert!(a.try_lt(&c).is_err());
        // Exact equal values decide non-strict comparisons.
        let x = RealScalar::from_ratio(2, 4);
        let y = RealScalar::from_ratio(1, 2);
        assert!(x.try_le(&y).unwrap());
        assert!(!x.try_lt(&y).unwrap());
    }

    #[test]
    fn floor_decides_or_errors() {
        assert_eq!(RealScalar::from_ratio(7, 2).floor().unwrap(), BigInt::from(3));
        assert_eq!(RealScalar::from_int(-1).floor().unwrap(), BigInt::from(-1));
        let straddle = RealScalar::ball(ratio(1, 1), ratio(1, 10));
        assert!(straddle.floor().is_err());
    }

    #[test]
    fn sqrt_encloses_truth() {
        let s = RealScalar::sqrt_ratio(&ratio(2, 1), 128).unwrap();
        let lo = ratio_to_f64(&s.lo());
        let hi = ratio_to_f64(&s.hi());
        assert!(lo <= std::f64::consts::SQRT_2 && std::f64::consts::SQRT_2 <= hi);
        assert!(ratio_to_f64(s.rad()) < 1e-35);
    }

    #[test]
    fn golden_mean_value() {
        let g = RealScalar::golden_mean(256);
        let expected = (5f64.sqrt() - 1.0) / 2.0;
        assert!((g.to_f64() - expected).abs() < 1e-15);
        // g satisfies g^2 + g − 1 = 0 up to the enclosure width.
        let res = g.mul(&g).add(&g).sub(&RealScalar::from_int(1));
        assert!(res.abs().hi() < ratio(1, 1_000_000_000));
    }

    #[test]
    fn dist_to_int_examples_from_contract() {
        assert_eq!(*RealScalar::from_ratio(1, 2).dist_to_int().mid(), ratio(1, 2));
        assert_eq!(*RealScalar::from_ratio(5, 4).dist_to_int().mid(), ratio(1, 4));
        assert_eq!(*RealScalar::from_ratio(-1, 10).dist_to_int().mid(), ratio(1, 10));
    }

    #[test]
    fn recip_rejects_zero_straddle() {
        let z = RealScalar::ball(ratio(0, 1), ratio(1, 10));
        assert!(z.recip().is_err());
        let x = RealScalar::from_ratio(4, 1);
        assert_eq!(*x.recip().unwrap().mid(), ratio(1, 4));
    }

    proptest! {
        // Interval soundness: sampled true values stay inside the result
        // enclosure for each operation.
        #[test]
        fn interval_soundness(
            m1 in -50i64..50, r1 in 0i64..5, t1 in -100i64..=100,
            m2 in -50i64..50, r2 in 0i64..5, t2 in -100i64..=100,
        ) {
            let a = RealScalar::ball(ratio(m1, 7), ratio(r1, 11));
            let b = RealScalar::ball(ratio(m2, 7), ratio(r2, 11));
            // true values: mid + rad·t/100 with t ∈ [-100, 100]
            let ta = &ratio(m1, 7) + ratio(r1, 11) * ratio(t1, 100);
            let tb = &ratio(m2, 7) + ratio(r2, 11) * ratio(t2, 100);

            let s = a.add(&b);
            prop_assert!(s.lo() <= &ta + &tb && &ta + &tb <= s.hi());
            let d = a.sub(&b);
            prop_assert!(d.lo() <= &ta - &tb && &ta - &tb <= d.hi());
            let p = a.mul(&b);
            prop_assert!(p.lo() <= &ta * &tb && &ta * &tb <= p.hi());
            let n = a.dist_to_int();
            let tn = crate::num_util::dist_to_int_exact(&ta);
            prop_assert!(n.lo() <= tn && tn <= n.hi());
        }
    }
}
