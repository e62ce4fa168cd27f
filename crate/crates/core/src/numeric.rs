//! Triangular numbers, their residues, and positional digit expansions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative integer.
///
/// Parsed from and displayed as a plain decimal string.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(BigUint);

impl Natural {
    pub fn zero() -> Self {
        Natural(BigUint::zero())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Remainder modulo a small positive modulus.
    pub fn rem_u64(&self, modulus: u64) -> u64 {
        (&self.0 % modulus)
            .to_u64()
            .expect("remainder is below a u64 modulus")
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Lossy conversion; saturates to infinity for very large values.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl From<u64> for Natural {
    fn from(v: u64) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<BigUint> for Natural {
    fn from(v: BigUint) -> Self {
        Natural(v)
    }
}

impl FromStr for Natural {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidNatural(s.to_string()));
        }
        BigUint::parse_bytes(s.as_bytes(), 10)
            .map(Natural)
            .ok_or_else(|| Error::InvalidNatural(s.to_string()))
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl std::ops::Add<&Natural> for &Natural {
    type Output = Natural;

    fn add(self, rhs: &Natural) -> Natural {
        Natural(&self.0 + &rhs.0)
    }
}

impl std::ops::AddAssign<&Natural> for Natural {
    fn add_assign(&mut self, rhs: &Natural) {
        self.0 += &rhs.0;
    }
}

/// A numeral-system base `L` with `2 <= L <= 256`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BaseSpec(u32);

impl BaseSpec {
    pub const MIN: u32 = 2;
    pub const MAX: u32 = 256;

    pub fn new(base: u64) -> Result<Self> {
        if (Self::MIN as u64..=Self::MAX as u64).contains(&base) {
            Ok(BaseSpec(base as u32))
        } else {
            Err(Error::BaseOutOfRange(base))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Length of the window `[0, 2L)` over which `n -> S_n mod L` repeats.
    #[inline]
    pub fn window(self) -> u64 {
        2 * self.0 as u64
    }

    pub fn is_power_of_two(self) -> bool {
        self.0.is_power_of_two()
    }
}

impl fmt::Display for BaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Most-significant-first digits of a value in some base.
///
/// Always canonical: no leading zeros, and zero is the single digit `[0]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigitString {
    digits: Vec<u32>,
    base: BaseSpec,
}

impl DigitString {
    /// Builds a digit string, stripping leading zeros.
    pub fn new(digits: Vec<u32>, base: BaseSpec) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::EmptyDigits);
        }
        if let Some(&digit) = digits.iter().find(|&&d| d >= base.get()) {
            return Err(Error::DigitOutOfRange {
                digit,
                base: base.get(),
            });
        }
        let first = digits
            .iter()
            .position(|&d| d != 0)
            .unwrap_or(digits.len() - 1);
        Ok(DigitString {
            digits: digits[first..].to_vec(),
            base,
        })
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn base(&self) -> BaseSpec {
        self.base
    }

    pub fn units(&self) -> u32 {
        *self.digits.last().expect("digit strings are never empty")
    }

    /// Parses the display form produced by [`DigitString::render`].
    pub fn parse(text: &str, base: BaseSpec) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyDigits);
        }
        let invalid = || Error::InvalidNatural(text.to_string());
        let digits = if base.get() <= 36 {
            text.chars()
                .map(|c| c.to_digit(36).ok_or_else(invalid))
                .collect::<Result<Vec<_>>>()?
        } else {
            text.split(':')
                .map(|part| {
                    if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(invalid());
                    }
                    part.parse::<u32>().map_err(|_| invalid())
                })
                .collect::<Result<Vec<_>>>()?
        };
        DigitString::new(digits, base)
    }

    /// `0-9a-z` for bases up to 36; colon-separated decimal digits above that.
    pub fn render(&self) -> String {
        if self.base.get() <= 36 {
            self.digits
                .iter()
                .map(|&d| char::from_digit(d, 36).expect("digit below base"))
                .collect()
        } else {
            self.digits
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(":")
        }
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `S_n = n(n+1)/2`, computed exactly.
pub fn tri_exact(n: &Natural) -> Natural {
    let n = &n.0;
    let product = n * (n + 1u32);
    Natural(product >> 1)
}

/// `S_n mod L` without forming `S_n`.
///
/// `S_n mod L` depends only on `n mod 2L`, so the work is independent of the size of `n`.
pub fn tri_mod(n: &Natural, base: BaseSpec) -> u32 {
    tri_mod_u64(n.rem_u64(base.window()), base)
}

/// Machine-word variant of [`tri_mod`].
pub fn tri_mod_u64(n: u64, base: BaseSpec) -> u32 {
    let reduced = n % base.window();
    // reduced < 512, so the product cannot overflow.
    ((reduced * (reduced + 1) / 2) % base.get() as u64) as u32
}

pub fn to_digits(v: &Natural, base: BaseSpec) -> DigitString {
    let digits =
        v.0.to_radix_be(base.get())
            .into_iter()
            .map(u32::from)
            .collect();
    DigitString { digits, base }
}

pub fn from_digits(d: &DigitString) -> Natural {
    let bytes: Vec<u8> = d
        .digits
        .iter()
        .map(|&x| u8::try_from(x).expect("digits are below 256"))
        .collect();
    Natural(BigUint::from_radix_be(&bytes, d.base.get()).expect("digit string invariants hold"))
}

/// The last base-`L` digit of `v`, i.e. `v mod L`.
pub fn units_digit(v: &Natural, base: BaseSpec) -> u32 {
    v.rem_u64(base.get() as u64) as u32
}
