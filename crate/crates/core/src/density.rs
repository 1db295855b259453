//! Exact rational densities.
//!
//! A density is stored as an unreduced `num / den` pair and compared by
//! cross-multiplication in `u128`, so no algorithmic decision ever goes
//! through floating point.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Average (weighted) degree `2 * w(E') / |V'|` as an exact fraction.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Density {
    num: u64,
    den: u64,
}

impl Density {
    pub const ZERO: Density = Density { num: 0, den: 1 };

    /// Panics if `den == 0`.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "density denominator must be positive");
        Density { num, den }
    }

    /// Density of a vertex set of size `vertices` whose induced edge weight is `weight`.
    pub fn of(weight: u64, vertices: usize) -> Self {
        Density::new(2 * weight, vertices as u64)
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn reduced(&self) -> Self {
        let g = gcd(self.num as u128, self.den as u128) as u64;
        if g <= 1 {
            *self
        } else {
            Density {
                num: self.num / g,
                den: self.den / g,
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `self / other` as an exact ratio; `None` when `other` is zero.
    pub fn ratio_to(&self, other: &Density) -> Option<Ratio> {
        if other.num == 0 {
            return None;
        }
        Some(Ratio::new(
            self.num as u128 * other.den as u128,
            self.den as u128 * other.num as u128,
        ))
    }
}

impl PartialEq for Density {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Density {}

impl PartialOrd for Density {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Density {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        write!(f, "{}/{}", r.num, r.den)
    }
}

/// A reduced nonnegative fraction with wide components, used for ratios of densities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    num: u128,
    den: u128,
}

impl Ratio {
    pub fn new(num: u128, den: u128) -> Self {
        assert!(den > 0, "ratio denominator must be positive");
        let g = gcd(num, den).max(1);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(&self) -> u128 {
        self.num
    }

    pub fn den(&self) -> u128 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `self <= bound_num / bound_den`, exactly.
    pub fn at_most(&self, bound_num: u128, bound_den: u128) -> bool {
        // Reduced components of densities stay far below 2^64, so the products fit.
        self.num * bound_den <= bound_num * self.den
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
