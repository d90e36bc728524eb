use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

use num_traits::Float;

/// An integer or half-odd-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub const fn from_twice(twice: i32) -> Self {
        Self { twice }
    }

    pub const fn from_int(n: i32) -> Self {
        Self { twice: 2 * n }
    }

    pub const fn twice(self) -> i32 {
        self.twice
    }

    pub fn value(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub const fn abs(self) -> Self {
        Self {
            twice: self.twice.abs(),
        }
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The value as an integer, if it is one.
    pub const fn as_int(self) -> Option<i32> {
        if self.is_integer() {
            Some(self.twice / 2)
        } else {
            None
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + o.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - o.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseHalfIntError;

impl fmt::Display for ParseHalfIntError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected an integer or half-integer such as 2, -3/2 or .5")
    }
}

impl core::error::Error for ParseHalfIntError {}

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    /// Accepts `n`, `n/2` and decimals whose double is an integer (`.5`, `-1.5`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let num: i32 = num.trim().parse().map_err(|_| ParseHalfIntError)?;
            return match den.trim() {
                "1" => num.checked_mul(2).map(HalfInt::from_twice).ok_or(ParseHalfIntError),
                "2" => Ok(HalfInt::from_twice(num)),
                _ => Err(ParseHalfIntError),
            };
        }
        if let Ok(n) = s.parse::<i32>() {
            return n.checked_mul(2).map(HalfInt::from_twice).ok_or(ParseHalfIntError);
        }
        let x: f64 = s.parse().map_err(|_| ParseHalfIntError)?;
        let t = 2.0 * x;
        if !t.is_finite() || t != Float::round(t) || t.abs() > i32::MAX as f64 {
            return Err(ParseHalfIntError);
        }
        Ok(HalfInt::from_twice(t as i32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parse_forms() {
        assert_eq!("1/2".parse::<HalfInt>().unwrap(), HalfInt::HALF);
        assert_eq!("-3/2".parse::<HalfInt>().unwrap().twice(), -3);
        assert_eq!(".5".parse::<HalfInt>().unwrap(), HalfInt::HALF);
        assert_eq!("-1.5".parse::<HalfInt>().unwrap().twice(), -3);
        assert_eq!("2".parse::<HalfInt>().unwrap().twice(), 4);
        assert_eq!("4/2".parse::<HalfInt>().unwrap().twice(), 4);
        assert!("1/4".parse::<HalfInt>().is_err());
        assert!("0.25".parse::<HalfInt>().is_err());
        assert!("x".parse::<HalfInt>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for t in -7..=7 {
            let h = HalfInt::from_twice(t);
            assert_eq!(h.to_string().parse::<HalfInt>().unwrap(), h);
        }
    }
}
