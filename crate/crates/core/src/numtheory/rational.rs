//! Exact rational arithmetic over `i128`.
//!
//! Used wherever the formulas produce non-integers: the φ-sum for cyclic
//! subgroup counts and the fractional thresholds `c · 2^{t-k}` for small `t`.
//! No floating point anywhere; integrality of a sum is decided exactly.

use std::cmp::Ordering;
use std::fmt;

/// A rational number, always stored in lowest terms with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };

    /// Panics if `den == 0`. Reduces and normalizes the sign.
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "rational with zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd_i128(num, den).max(1);
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn from_integer(n: i128) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// The exact integer value, if this is one.
    pub fn as_integer(&self) -> Option<i128> {
        self.is_integer().then_some(self.num)
    }

    /// `2^exp` for possibly negative `exp`, e.g. the `2^{t-3}` factors that
    /// go fractional when `t < 3`.
    pub fn pow2(exp: i32) -> Self {
        if exp >= 0 {
            Rational::from_integer(1i128 << exp)
        } else {
            Rational::new(1, 1i128 << (-exp))
        }
    }

    pub fn add(&self, other: &Rational) -> Rational {
        // Reduce by the denominator gcd first so intermediates stay small.
        let g = gcd_i128(self.den, other.den);
        let lhs = self
            .num
            .checked_mul(other.den / g)
            .expect("rational add overflow");
        let rhs = other
            .num
            .checked_mul(self.den / g)
            .expect("rational add overflow");
        let den = (self.den / g)
            .checked_mul(other.den)
            .expect("rational add overflow");
        Rational::new(lhs + rhs, den)
    }

    pub fn mul(&self, other: &Rational) -> Rational {
        let g1 = gcd_i128(self.num, other.den).max(1);
        let g2 = gcd_i128(other.num, self.den).max(1);
        let num = (self.num / g1)
            .checked_mul(other.num / g2)
            .expect("rational mul overflow");
        let den = (self.den / g2)
            .checked_mul(other.den / g1)
            .expect("rational mul overflow");
        Rational::new(num, den)
    }

    pub fn recip(&self) -> Rational {
        assert!(self.num != 0, "reciprocal of zero");
        Rational::new(self.den, self.num)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        let lhs = self
            .num
            .checked_mul(other.den)
            .expect("rational cmp overflow");
        let rhs = other
            .num
            .checked_mul(self.den)
            .expect("rational cmp overflow");
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduction_and_sign() {
        assert_eq!(Rational::new(6, 4), Rational::new(3, 2));
        assert_eq!(Rational::new(-6, -4), Rational::new(3, 2));
        assert_eq!(Rational::new(6, -4), Rational::new(-3, 2));
        assert!(Rational::new(6, -4).denominator() > 0);
    }

    #[test]
    fn pow2_both_signs() {
        assert_eq!(Rational::pow2(3), Rational::from_integer(8));
        assert_eq!(Rational::pow2(0), Rational::from_integer(1));
        assert_eq!(Rational::pow2(-1), Rational::new(1, 2));
        assert_eq!(Rational::pow2(-3), Rational::new(1, 8));
    }

    #[test]
    fn integrality() {
        let half = Rational::new(1, 2);
        assert!(!half.is_integer());
        assert_eq!(half.add(&half).as_integer(), Some(1));
        let third = Rational::new(1, 3);
        let sum = third.add(&third).add(&third);
        assert_eq!(sum.as_integer(), Some(1));
    }

    #[test]
    fn ordering_crosses_denominators() {
        assert!(Rational::new(5, 2) < Rational::from_integer(3));
        assert!(Rational::new(59, 2) < Rational::from_integer(30));
        assert!(Rational::from_integer(29) < Rational::new(59, 2));
    }

    proptest! {
        #[test]
        fn add_commutes_and_reduces(
            a in -1000i128..1000, b in 1i128..500,
            c in -1000i128..1000, d in 1i128..500,
        ) {
            let x = Rational::new(a, b);
            let y = Rational::new(c, d);
            prop_assert_eq!(x.add(&y), y.add(&x));
            let s = x.add(&y);
            prop_assert_eq!(gcd_i128(s.numerator(), s.denominator()), if s.numerator() == 0 { s.denominator() } else { 1 });
        }

        #[test]
        fn mul_matches_fraction_arithmetic(
            a in -100i128..100, b in 1i128..100,
            c in -100i128..100, d in 1i128..100,
        ) {
            let x = Rational::new(a, b);
            let y = Rational::new(c, d);
            prop_assert_eq!(x.mul(&y), Rational::new(a * c, b * d));
        }
    }
}
