//! Closed rational intervals used for certified sign determination.
//!
//! Every embedding-dependent decision in this crate (total positivity,
//! houses, trace enclosures) is made by evaluating polynomials on these
//! intervals and refining until the enclosure excludes zero.

use crate::rational::Rational;
use num_traits::{Signed, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi, "inverted interval");
        RatInterval { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        RatInterval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn add(&self, other: &Self) -> Self {
        RatInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        RatInterval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> Self {
        RatInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_negative() {
            RatInterval {
                lo: &self.hi * c,
                hi: &self.lo * c,
            }
        } else {
            RatInterval {
                lo: &self.lo * c,
                hi: &self.hi * c,
            }
        }
    }

    pub fn shift(&self, c: &Rational) -> Self {
        RatInterval {
            lo: &self.lo + c,
            hi: &self.hi + c,
        }
    }

    /// Interval of reciprocals. Requires the interval to exclude zero.
    pub fn recip(&self) -> Self {
        assert!(
            !self.contains_zero(),
            "reciprocal of an interval containing zero"
        );
        RatInterval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.recip())
    }

    /// Enclosure of `|x|` over the interval.
    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let hi = if -&self.lo > self.hi {
                -self.lo.clone()
            } else {
                self.hi.clone()
            };
            RatInterval {
                lo: Rational::zero(),
                hi,
            }
        }
    }

    /// Pointwise max of two interval enclosures.
    pub fn max(&self, other: &Self) -> Self {
        RatInterval {
            lo: if self.lo > other.lo {
                self.lo.clone()
            } else {
                other.lo.clone()
            },
            hi: if self.hi > other.hi {
                self.hi.clone()
            } else {
                other.hi.clone()
            },
        }
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            crate::rational::format_rational(&self.lo),
            crate::rational::format_rational(&self.hi)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn arithmetic_encloses() {
        let a = RatInterval::new(rat(1, 2), rat(3, 2));
        let b = RatInterval::new(rat(-1, 3), rat(1, 3));
        let s = a.add(&b);
        assert!(s.contains(&rat_int(1)));
        let p = a.mul(&b);
        assert!(p.contains(&rat_int(0)));
        assert_eq!(p.lo, rat(-1, 2));
        assert_eq!(p.hi, rat(1, 2));
    }

    #[test]
    fn abs_cases() {
        let m = RatInterval::new(rat_int(-3), rat_int(2)).abs();
        assert_eq!(m.lo, rat_int(0));
        assert_eq!(m.hi, rat_int(3));
        let n = RatInterval::new(rat_int(-3), rat_int(-1)).abs();
        assert_eq!(n.lo, rat_int(1));
        assert_eq!(n.hi, rat_int(3));
    }

    #[test]
    fn recip_flips() {
        let a = RatInterval::new(rat_int(2), rat_int(4)).recip();
        assert_eq!(a.lo, rat(1, 4));
        assert_eq!(a.hi, rat(1, 2));
    }
}
