//! Exact unbounded-integer, rational, and fixed-point-decimal arithmetic,
//! plus the digit-group formatting used by the historical tables.
//!
//! Everything here is immutable after construction and safe to share across
//! threads. Expansion of a rational to decimal digits always truncates
//! (toward zero); a separate rounding entry point exists because a few of
//! the audited table rows were printed rounded rather than truncated.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use num_bigint::BigInt;

/// Exact ratio of unbounded integers. Normalized: denominator positive,
/// gcd(|num|, den) = 1, sign carried by the numerator.
pub type BigRational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("square root of a negative value")]
    NegativeSqrt,
    #[error("malformed decimal string {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },
}

/// Builds a normalized rational, rejecting a zero denominator.
pub fn make_rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<BigRational, ArithError> {
    let num = num.into();
    let den = den.into();
    if den.is_zero() {
        return Err(ArithError::ZeroDenominator);
    }
    Ok(BigRational::new(num, den))
}

/// Convenience for small literal ratios in tests and constants.
pub fn ratio(num: i64, den: i64) -> BigRational {
    make_rational(num, den).expect("nonzero denominator")
}

pub fn pow10(exp: u32) -> BigInt {
    BigInt::from(10u32).pow(exp)
}

/// Floor of the square root of a nonnegative integer, by Newton iteration.
///
/// The iterate x_{k+1} = (x_k + n/x_k) / 2 started at a power of two above
/// sqrt(n) decreases strictly until it reaches floor(sqrt(n)), after which
/// it oscillates; the first non-decreasing step therefore ends the loop.
pub fn integer_sqrt_floor(n: &BigInt) -> Result<BigInt, ArithError> {
    if n.is_negative() {
        return Err(ArithError::NegativeSqrt);
    }
    if n.is_zero() || n.is_one() {
        return Ok(n.clone());
    }
    let mut x: BigInt = BigInt::one() << (n.bits().div_ceil(2) as usize + 1);
    loop {
        let next: BigInt = (&x + n / &x) >> 1;
        if next >= x {
            return Ok(x);
        }
        x = next;
    }
}

/// Unbounded decimal fixed-point value: `mantissa * 10^(-scale)`.
///
/// Arithmetic between values is exact; operands at different scales are
/// first widened to the larger scale, which preserves value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FixedDecimal {
    mantissa: BigInt,
    scale: u32,
}

impl FixedDecimal {
    pub fn new(mantissa: impl Into<BigInt>, scale: u32) -> Self {
        Self { mantissa: mantissa.into(), scale }
    }

    pub fn zero(scale: u32) -> Self {
        Self::new(0, scale)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::new(n, 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), pow10(self.scale))
    }

    /// Same value at a scale at least as wide; widening multiplies the
    /// mantissa by a power of ten and is exact.
    pub fn widened_to(&self, scale: u32) -> Self {
        assert!(scale >= self.scale, "widened_to cannot narrow the scale");
        Self::new(&self.mantissa * pow10(scale - self.scale), scale)
    }

    /// Truncates toward zero to a narrower (or equal) scale.
    pub fn truncated_to(&self, scale: u32) -> Self {
        if scale >= self.scale {
            return self.widened_to(scale);
        }
        Self::new(&self.mantissa / pow10(self.scale - scale), scale)
    }

    /// Rounds toward negative infinity; never above the original value.
    pub fn floored_to(&self, scale: u32) -> Self {
        if scale >= self.scale {
            return self.widened_to(scale);
        }
        Self::new(self.mantissa.div_floor(&pow10(self.scale - scale)), scale)
    }

    /// Rounds toward positive infinity; never below the original value.
    pub fn ceiled_to(&self, scale: u32) -> Self {
        if scale >= self.scale {
            return self.widened_to(scale);
        }
        Self::new(self.mantissa.div_ceil(&pow10(self.scale - scale)), scale)
    }

    /// Rounds half away from zero to a narrower (or equal) scale. Used only
    /// for audit comparison against rows that were printed rounded.
    pub fn rounded_to(&self, scale: u32) -> Self {
        if scale >= self.scale {
            return self.widened_to(scale);
        }
        let divisor = pow10(self.scale - scale);
        let (q, r) = self.mantissa.div_rem(&divisor);
        let double_rem = r.abs() << 1;
        let bump = if double_rem >= divisor {
            if self.mantissa.is_negative() { -BigInt::one() } else { BigInt::one() }
        } else {
            BigInt::zero()
        };
        Self::new(q + bump, scale)
    }

    /// Truncated square root at the requested scale:
    /// `result^2 <= self < (result + 10^-scale)^2`.
    pub fn sqrt(&self, scale: u32) -> Result<Self, ArithError> {
        if self.mantissa.is_negative() {
            return Err(ArithError::NegativeSqrt);
        }
        // floor(sqrt(m * 10^(2t - s))) == floor(sqrt(floor(m * 10^2t / 10^s)))
        // because no perfect square can lie strictly between an integer and
        // the real quotient that floors to it.
        let shifted = &self.mantissa * pow10(2 * scale) / pow10(self.scale);
        Ok(Self::new(integer_sqrt_floor(&shifted)?, scale))
    }

    /// One unit in the last place at this scale.
    pub fn ulp(&self) -> Self {
        Self::new(1, self.scale)
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let scale = self.scale.max(other.scale);
        let a = &self.mantissa * pow10(scale - self.scale);
        let b = &other.mantissa * pow10(scale - other.scale);
        (a, b, scale)
    }

    /// Digit row as the tables print it: the absolute mantissa's decimal
    /// digits with no point and no padding. Comparisons against printed
    /// rows use this form, so grouping never affects them.
    pub fn digit_row(&self) -> String {
        self.mantissa.magnitude().to_string()
    }
}

impl fmt::Display for FixedDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale == 0 {
            return write!(f, "{}", self.mantissa);
        }
        let digits = self.mantissa.magnitude().to_string();
        let digits = if digits.len() <= self.scale as usize {
            format!("{}{}", "0".repeat(self.scale as usize + 1 - digits.len()), digits)
        } else {
            digits
        };
        let split = digits.len() - self.scale as usize;
        let sign = if self.mantissa.is_negative() { "-" } else { "" };
        write!(f, "{sign}{}.{}", &digits[..split], &digits[split..])
    }
}

impl PartialOrd for FixedDecimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FixedDecimal {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl Add for &FixedDecimal {
    type Output = FixedDecimal;
    fn add(self, rhs: &FixedDecimal) -> FixedDecimal {
        let (a, b, scale) = self.aligned(rhs);
        FixedDecimal::new(a + b, scale)
    }
}

impl Sub for &FixedDecimal {
    type Output = FixedDecimal;
    fn sub(self, rhs: &FixedDecimal) -> FixedDecimal {
        let (a, b, scale) = self.aligned(rhs);
        FixedDecimal::new(a - b, scale)
    }
}

impl Mul for &FixedDecimal {
    type Output = FixedDecimal;
    fn mul(self, rhs: &FixedDecimal) -> FixedDecimal {
        FixedDecimal::new(&self.mantissa * &rhs.mantissa, self.scale + rhs.scale)
    }
}

impl Neg for &FixedDecimal {
    type Output = FixedDecimal;
    fn neg(self) -> FixedDecimal {
        FixedDecimal::new(-&self.mantissa, self.scale)
    }
}

/// Decimal expansion of a rational at the given scale, truncating toward
/// zero: for r >= 0 the result is floor(r * 10^scale) * 10^-scale, so
/// 0 <= r - result < 10^-scale.
pub fn decimal_expand(r: &BigRational, scale: u32) -> FixedDecimal {
    // BigInt division truncates toward zero, matching the contract for
    // negative inputs as well.
    FixedDecimal::new(r.numer() * pow10(scale) / r.denom(), scale)
}

/// Decimal expansion rounded half away from zero; audit-comparison only.
pub fn decimal_expand_rounded(r: &BigRational, scale: u32) -> FixedDecimal {
    decimal_expand(r, scale + 1).rounded_to(scale)
}

/// Decimal expansion rounded toward negative infinity: result <= r. Lower
/// endpoints of enclosures use this so negative values stay bracketed.
pub fn decimal_expand_floor(r: &BigRational, scale: u32) -> FixedDecimal {
    FixedDecimal::new((r.numer() * pow10(scale)).div_floor(r.denom()), scale)
}

/// Decimal expansion rounded toward positive infinity: result >= r.
pub fn decimal_expand_ceil(r: &BigRational, scale: u32) -> FixedDecimal {
    FixedDecimal::new((r.numer() * pow10(scale)).div_ceil(r.denom()), scale)
}

/// Rational 10^-exp, handy for width and tolerance comparisons.
pub fn pow10_recip(exp: u32) -> BigRational {
    BigRational::new(BigInt::one(), pow10(exp))
}

/// Renders with digits in groups of `group`, counted outward from the
/// decimal point: integer digits grouped right-to-left, fraction digits
/// left-to-right. Exactly `scale` fraction digits are written, so the
/// scale survives a round trip through [`parse_grouped`].
pub fn format_grouped(x: &FixedDecimal, group: usize) -> String {
    assert!(group >= 1, "group width must be at least 1");
    let digits = x.mantissa().magnitude().to_string();
    let scale = x.scale() as usize;
    let digits = if digits.len() <= scale {
        format!("{}{}", "0".repeat(scale + 1 - digits.len()), digits)
    } else {
        digits
    };
    let split = digits.len() - scale;
    let (int_part, frac_part) = digits.split_at(split);

    let mut out = String::new();
    if x.is_negative() {
        out.push('-');
    }
    let int_bytes = int_part.as_bytes();
    let lead = int_bytes.len() % group;
    let mut first = true;
    if lead > 0 {
        out.push_str(&int_part[..lead]);
        first = false;
    }
    let mut i = lead;
    while i < int_bytes.len() {
        if !first {
            out.push(' ');
        }
        out.push_str(&int_part[i..i + group]);
        first = false;
        i += group;
    }
    if frac_part.is_empty() {
        return out;
    }
    out.push('.');
    let mut j = 0;
    while j < frac_part.len() {
        if j > 0 {
            out.push(' ');
        }
        let end = (j + group).min(frac_part.len());
        out.push_str(&frac_part[j..end]);
        j = end;
    }
    out
}

/// Inverse of [`format_grouped`]; whitespace between digit groups is
/// ignored, the fraction digit count fixes the scale.
pub fn parse_grouped(s: &str) -> Result<FixedDecimal, ArithError> {
    let err = |reason| ArithError::Parse { input: s.to_string(), reason };
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (negative, body) = match compact.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, compact.as_str()),
    };
    if body.is_empty() {
        return Err(err("no digits"));
    }
    let mut parts = body.splitn(2, '.');
    let int_part = parts.next().unwrap_or("");
    let frac_part = parts.next().unwrap_or("");
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err("no digits"));
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err("unexpected character"));
    }
    let all = format!("{int_part}{frac_part}");
    let mantissa: BigInt = all.parse().map_err(|_| err("unexpected character"))?;
    let mantissa = if negative { -mantissa } else { mantissa };
    Ok(FixedDecimal::new(mantissa, frac_part.len() as u32))
}

/// Splits a positive rational into whole part and proper remainder, e.g.
/// 113/5 -> (22, 3/5). The reduced-forms table prints one entry this way.
pub fn mixed_parts(r: &BigRational) -> (BigInt, BigRational) {
    let whole = r.numer().div_floor(r.denom());
    let rest = r - BigRational::from_integer(whole.clone());
    (whole, rest)
}

/// Renders a positive rational as the tables print mixed numbers:
/// "22 3/5" for 113/5, plain "71" for integers.
pub fn mixed_string(r: &BigRational) -> String {
    let (whole, rest) = mixed_parts(r);
    if rest.is_zero() {
        whole.to_string()
    } else if whole.is_zero() {
        format!("{}/{}", rest.numer(), rest.denom())
    } else {
        format!("{} {}/{}", whole, rest.numer(), rest.denom())
    }
}

#[cfg(test)]
pub(crate) fn bigint(s: &str) -> BigInt {
    s.parse().expect("literal integer")
}
