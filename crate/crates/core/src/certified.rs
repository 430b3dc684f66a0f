// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact rational intervals for deciding inequalities that involve `√3`.

use core::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;

pub type Rational = Ratio<i128>;

pub fn rat(n: i128, d: i128) -> Rational {
    Ratio::new(n, d)
}

pub fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "empty interval");
        Self { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Self { lo: x, hi: x }
    }

    pub fn int(n: i128) -> Self {
        Self::point(Rational::from_integer(n))
    }

    pub fn contains(&self, x: Rational) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn width(&self) -> Rational {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        (to_f64(self.lo) + to_f64(self.hi)) / 2.0
    }

    /// Certified lower bound of `self - other`.
    pub fn margin_over(&self, other: &Interval) -> Rational {
        self.lo - other.hi
    }

    pub fn certainly_gt(&self, other: &Interval) -> bool {
        self.margin_over(other) > Rational::from_integer(0)
    }

    pub fn certainly_ge(&self, other: &Interval) -> bool {
        self.margin_over(other) >= Rational::from_integer(0)
    }

    pub fn min(self, other: Interval) -> Interval {
        Interval::new(self.lo.min(other.lo), self.hi.min(other.hi))
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        Interval::new(self.lo + o.lo, self.hi + o.hi)
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, o: Interval) -> Interval {
        Interval::new(self.lo - o.hi, self.hi - o.lo)
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::new(-self.hi, -self.lo)
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, o: Interval) -> Interval {
        let p = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi];
        let lo = p.iter().copied().fold(p[0], Rational::min);
        let hi = p.iter().copied().fold(p[0], Rational::max);
        Interval::new(lo, hi)
    }
}

impl Mul<Rational> for Interval {
    type Output = Interval;
    fn mul(self, c: Rational) -> Interval {
        self * Interval::point(c)
    }
}

/// `1.7320508 < √3 < 1.7320509`, checked by squaring the endpoints.
pub fn sqrt3() -> Interval {
    let lo = rat(17_320_508, 10_000_000);
    let hi = rat(17_320_509, 10_000_000);
    let three = Rational::from_integer(3);
    debug_assert!(lo * lo < three && three < hi * hi);
    Interval::new(lo, hi)
}

/// Whether `x` encloses `√3` as certified by `lo² < 3 < hi²`.
pub fn encloses_sqrt3(x: &Interval) -> bool {
    let three = Rational::from_integer(3);
    x.lo >= Rational::from_integer(0) && x.lo * x.lo < three && three < x.hi * x.hi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt3_enclosure_is_certified() {
        let s = sqrt3();
        assert!(encloses_sqrt3(&s));
        assert!(s.lo < rat(17_320_509, 10_000_000));
        let f = 3f64.sqrt();
        assert!(to_f64(s.lo) < f && f < to_f64(s.hi));
        assert!(!encloses_sqrt3(&Interval::new(rat(17, 10), rat(173, 100))));
    }

    #[test]
    fn arithmetic_encloses() {
        let s = sqrt3();
        let sq = s * s;
        assert!(sq.contains(Rational::from_integer(3)));
        let d = s - s;
        assert!(d.contains(Rational::from_integer(0)));
        assert_eq!((-Interval::int(2)).lo, Rational::from_integer(-2));
        assert!((s + Interval::int(1)).certainly_gt(&Interval::point(rat(27, 10))));
    }

    #[test]
    fn sign_mixed_products() {
        let a = Interval::new(rat(-1, 1), rat(2, 1));
        let b = Interval::new(rat(-3, 1), rat(1, 1));
        let p = a * b;
        assert_eq!(p.lo, rat(-6, 1));
        assert_eq!(p.hi, rat(3, 1));
    }
}
