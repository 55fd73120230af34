//! Half-integer angular momenta and Wigner 3j/6j symbols.
//!
//! Every momentum and projection is carried as a doubled integer so that
//! triangle and parity checks are exact. Symbols are evaluated with the
//! Racah single-sum formulas over a compile-time factorial table.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

use crate::error::AngularError;

/// An integer or half-odd-integer value, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub const fn from_twice(twice_value: i32) -> Self {
        HalfInt(twice_value)
    }

    pub const fn int(value: i32) -> Self {
        HalfInt(2 * value)
    }

    pub const fn twice(self) -> i32 {
        self.0
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub const fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    /// Multiplicity `2j + 1`. Only meaningful for non-negative `j`.
    pub fn multiplicity(self) -> usize {
        debug_assert!(self.0 >= 0);
        (self.0 + 1) as usize
    }

    /// `lo, lo + 1, ..., hi` (empty when `hi < lo`).
    pub fn range_inclusive(lo: HalfInt, hi: HalfInt) -> impl Iterator<Item = HalfInt> + Clone {
        (0..)
            .map(move |k| HalfInt(lo.0 + 2 * k))
            .take_while(move |v| v.0 <= hi.0)
    }

    /// Magnetic projections `-j, -j + 1, ..., j`.
    pub fn projections(self) -> impl Iterator<Item = HalfInt> + Clone {
        HalfInt::range_inclusive(-self, self)
    }

    /// True when `m` is a legal projection of `self`.
    pub fn admits_projection(self, m: HalfInt) -> bool {
        (self.0 - m.0) % 2 == 0 && m.0.abs() <= self.0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = AngularError;

    /// Accepts `"2"`, `"-3"`, `"5/2"`, `"2.5"`, `"-0.5"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || AngularError::Parse;
        if let Some((num, den)) = s.split_once('/') {
            let num: i32 = num.trim().parse().map_err(|_| bad())?;
            let den: i32 = den.trim().parse().map_err(|_| bad())?;
            return match den {
                1 => Ok(HalfInt(2 * num)),
                2 => Ok(HalfInt(num)),
                _ => Err(bad()),
            };
        }
        if let Ok(n) = s.parse::<i32>() {
            return Ok(HalfInt(2 * n));
        }
        let x: f64 = s.parse().map_err(|_| bad())?;
        let twice = 2.0 * x;
        let rounded = libm::round(twice);
        if !x.is_finite() || libm::fabs(twice - rounded) > 1e-9 || libm::fabs(rounded) > 1e9 {
            return Err(bad());
        }
        Ok(HalfInt(rounded as i32))
    }
}

impl PartialEq<i32> for HalfInt {
    fn eq(&self, other: &i32) -> bool {
        self.0 == 2 * other
    }
}

impl PartialOrd<i32> for HalfInt {
    fn partial_cmp(&self, other: &i32) -> Option<Ordering> {
        self.0.partial_cmp(&(2 * other))
    }
}

/// `(-1)^x` for a doubled exponent; the exponent must be an integer.
pub(crate) fn sign_of(twice_exponent: i32) -> f64 {
    debug_assert!(twice_exponent % 2 == 0, "non-integer phase exponent");
    if (twice_exponent / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

const MAX_FACTORIAL: usize = 170;

const FACTORIALS: [f64; MAX_FACTORIAL + 1] = {
    let mut table = [1.0f64; MAX_FACTORIAL + 1];
    let mut n = 1;
    while n <= MAX_FACTORIAL {
        table[n] = table[n - 1] * n as f64;
        n += 1;
    }
    table
};

/// `n!` for a doubled argument that must be a non-negative integer.
fn fact(twice_n: i32) -> f64 {
    debug_assert!(twice_n >= 0 && twice_n % 2 == 0);
    FACTORIALS[(twice_n / 2) as usize]
}

pub fn triangle_ok(j1: HalfInt, j2: HalfInt, j3: HalfInt) -> bool {
    let (a, b, c) = (j1.0, j2.0, j3.0);
    a >= 0 && b >= 0 && c >= 0 && (a + b + c) % 2 == 0 && c >= (a - b).abs() && c <= a + b
}

/// Triangle coefficient `Δ(abc)`, assuming the triad is valid.
fn delta(a: HalfInt, b: HalfInt, c: HalfInt) -> f64 {
    let (a, b, c) = (a.0, b.0, c.0);
    libm::sqrt(fact(a + b - c) * fact(a - b + c) * fact(-a + b + c) / fact(a + b + c + 2))
}

/// Wigner 3j symbol `(j1 j2 j3; m1 m2 m3)` in the Condon-Shortley convention.
pub fn wigner_3j(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    m1: HalfInt,
    m2: HalfInt,
    m3: HalfInt,
) -> Result<f64, AngularError> {
    for (j, m) in [(j1, m1), (j2, m2), (j3, m3)] {
        if j.is_negative() {
            return Err(AngularError::NegativeMomentum(j));
        }
        if (j.0 - m.0) % 2 != 0 {
            return Err(AngularError::MalformedProjection { j, m });
        }
    }
    if m1 + m2 + m3 != HalfInt::ZERO || !triangle_ok(j1, j2, j3) {
        return Ok(0.0);
    }
    if m1.0.abs() > j1.0 || m2.0.abs() > j2.0 || m3.0.abs() > j3.0 {
        return Ok(0.0);
    }
    let (j1, j2, j3, m1, m2, m3) = (j1.0, j2.0, j3.0, m1.0, m2.0, m3.0);

    // t runs over every value keeping all factorial arguments non-negative
    // (doubled: t = 2k).
    let t_min = 0.max(j2 - j3 - m1).max(j1 - j3 + m2);
    let t_max = (j1 + j2 - j3).min(j1 - m1).min(j2 + m2);
    let mut sum = 0.0;
    let mut t = t_min;
    while t <= t_max {
        let denom = fact(t)
            * fact(j3 - j2 + t + m1)
            * fact(j3 - j1 + t - m2)
            * fact(j1 + j2 - j3 - t)
            * fact(j1 - t - m1)
            * fact(j2 - t + m2);
        sum += sign_of(t) / denom;
        t += 2;
    }
    let norm = libm::sqrt(
        fact(j1 + m1)
            * fact(j1 - m1)
            * fact(j2 + m2)
            * fact(j2 - m2)
            * fact(j3 + m3)
            * fact(j3 - m3),
    );
    let tri = delta(HalfInt(j1), HalfInt(j2), HalfInt(j3));
    Ok(sign_of(j1 - j2 - m3) * tri * norm * sum)
}

/// Wigner 6j symbol `{j1 j2 j3; j4 j5 j6}`.
pub fn wigner_6j(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    j4: HalfInt,
    j5: HalfInt,
    j6: HalfInt,
) -> f64 {
    if !(triangle_ok(j1, j2, j3)
        && triangle_ok(j1, j5, j6)
        && triangle_ok(j4, j2, j6)
        && triangle_ok(j4, j5, j3))
    {
        return 0.0;
    }
    let prefactor = delta(j1, j2, j3) * delta(j1, j5, j6) * delta(j4, j2, j6) * delta(j4, j5, j3);
    let (j1, j2, j3, j4, j5, j6) = (j1.0, j2.0, j3.0, j4.0, j5.0, j6.0);
    let lower = [j1 + j2 + j3, j1 + j5 + j6, j4 + j2 + j6, j4 + j5 + j3];
    let upper = [j1 + j2 + j4 + j5, j2 + j3 + j5 + j6, j3 + j1 + j6 + j4];
    let t_min = *lower.iter().max().unwrap();
    let t_max = *upper.iter().min().unwrap();
    let mut sum = 0.0;
    let mut t = t_min;
    while t <= t_max {
        let mut denom = 1.0;
        for a in lower {
            denom *= fact(t - a);
        }
        for b in upper {
            denom *= fact(b - t);
        }
        sum += sign_of(t) * fact(t + 2) / denom;
        t += 2;
    }
    prefactor * sum
}
