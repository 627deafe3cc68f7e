//! Continued fraction of pi and classification of rational bounds against
//! its convergents and semiconvergents.
//!
//! Terms are extracted from rigorous enclosures: the integer part is taken
//! only when both interval endpoints agree on it, then the tail is the
//! reciprocal of the fractional interval, computed in exact rational
//! arithmetic. Whenever an endpoint lands on an integer or the floors
//! disagree, the whole extraction restarts from a finer pi enclosure, so a
//! wrong term can never be emitted.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::BigRational;
use crate::oracle::{self, rational_floor};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CfError {
    #[error("precision ceiling of {ceiling} digits reached after {terms_extracted} terms")]
    PrecisionCeiling { ceiling: u32, terms_extracted: usize },
    #[error("expansion too short: last convergent denominator {last} does not exceed {needed}")]
    TooShort { last: BigInt, needed: BigInt },
}

/// Simple continued fraction prefix of pi with its convergents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfExpansion {
    pub terms: Vec<BigInt>,
    pub convergents: Vec<BigRational>,
}

impl CfExpansion {
    /// Standard recurrence p_k = a_k p_{k-1} + p_{k-2}.
    fn from_terms(terms: Vec<BigInt>) -> Self {
        let mut convergents = Vec::with_capacity(terms.len());
        let (mut p_prev, mut p) = (BigInt::one(), terms[0].clone());
        let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
        convergents.push(BigRational::new(p.clone(), q.clone()));
        for a in &terms[1..] {
            let p_next = a * &p + &p_prev;
            let q_next = a * &q + &q_prev;
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
            convergents.push(BigRational::new(p.clone(), q.clone()));
        }
        Self { terms, convergents }
    }
}

/// First `k` continued fraction terms of pi, starting the adaptive search
/// at `start_digits` of precision. The extracted terms are independent of
/// the starting precision; only the number of retries changes.
pub fn pi_continued_fraction_from(k: usize, start_digits: u32, ceiling: u32) -> Result<CfExpansion, CfError> {
    assert!(k >= 1, "at least one term must be requested");
    let mut digits = start_digits.max(8);
    loop {
        let e = oracle::pi_enclosure(digits);
        match extract_terms(&e.lo().to_rational(), &e.hi().to_rational(), k) {
            Some(terms) => return Ok(CfExpansion::from_terms(terms)),
            None => {
                if digits >= ceiling {
                    return Err(CfError::PrecisionCeiling { ceiling, terms_extracted: 0 });
                }
                digits = (digits * 2).min(ceiling);
            }
        }
    }
}

pub fn pi_continued_fraction(k: usize) -> Result<CfExpansion, CfError> {
    pi_continued_fraction_from(k, 64, oracle::DEFAULT_PRECISION_CEILING)
}

/// Extracts `k` terms from an exact rational interval known to contain the
/// target; `None` means the interval was too wide to pin every term.
fn extract_terms(lo: &BigRational, hi: &BigRational, k: usize) -> Option<Vec<BigInt>> {
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let mut terms = Vec::with_capacity(k);
    for _ in 0..k {
        let a_lo = rational_floor(&lo);
        let a_hi = rational_floor(&hi);
        if a_lo != a_hi {
            return None;
        }
        let a = a_lo;
        let frac_lo = &lo - BigRational::from_integer(a.clone());
        let frac_hi = &hi - BigRational::from_integer(a.clone());
        terms.push(a);
        if terms.len() == k {
            break;
        }
        // the fractional parts of pi's tails are never zero, so a zero
        // endpoint only reflects interval slack: retry with more precision
        if frac_lo.is_zero() || frac_hi.is_zero() {
            return None;
        }
        // reciprocal reverses the interval
        lo = frac_hi.recip();
        hi = frac_lo.recip();
    }
    Some(terms)
}

/// Exact continued fraction of a positive rational (Euclidean algorithm);
/// the canonical form whose last term exceeds 1 when possible.
pub fn rational_continued_fraction(r: &BigRational) -> Vec<BigInt> {
    let mut num = r.numer().clone();
    let mut den = r.denom().clone();
    let mut terms = Vec::new();
    while !den.is_zero() {
        let (q, rem) = num_integer::Integer::div_rem(&num, &den);
        terms.push(q);
        num = std::mem::replace(&mut den, rem);
    }
    terms
}

/// Relation of a rational to the convergents of an expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundClass {
    Convergent,
    /// Intermediate fraction (p_{k-1} j + p_{k-2})/(q_{k-1} j + q_{k-2})
    /// for 1 <= j < a_k; all such j count (the inclusive convention).
    Semiconvergent,
    Other,
}

/// Classifies a rational by exact membership in the convergent and
/// semiconvergent sets of the expansion. The expansion must reach
/// denominators beyond the candidate's.
pub fn classify_bound(r: &BigRational, cf: &CfExpansion) -> Result<BoundClass, CfError> {
    let last = cf.convergents.last().expect("nonempty expansion");
    if last.denom() <= r.denom() {
        return Err(CfError::TooShort { last: last.denom().clone(), needed: r.denom().clone() });
    }
    if cf.convergents.contains(r) {
        return Ok(BoundClass::Convergent);
    }
    // walk semiconvergent families between consecutive convergents
    let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
    let (mut p, mut q) = (cf.terms[0].clone(), BigInt::one());
    for a in &cf.terms[1..] {
        let mut j = BigInt::one();
        while &j < a {
            let num = &p * &j + &p_prev;
            let den = &q * &j + &q_prev;
            if &BigRational::new(num, den) == r {
                return Ok(BoundClass::Semiconvergent);
            }
            j += 1;
        }
        let p_next = a * &p + &p_prev;
        let q_next = a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
    Ok(BoundClass::Other)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::oracle::{cmp_pi, Side};
    use num_traits::Signed;

    #[test]
    fn first_terms_and_convergents() {
        let cf = pi_continued_fraction(9).unwrap();
        let want: Vec<BigInt> = [3, 7, 15, 1, 292, 1, 1, 1, 2].iter().map(|&n| BigInt::from(n)).collect();
        assert_eq!(cf.terms, want);
        assert!(cf.convergents.contains(&ratio(22, 7)));
        assert!(cf.convergents.contains(&ratio(333, 106)));
        assert!(cf.convergents.contains(&ratio(355, 113)));
        assert!(cf.convergents.contains(&ratio(833719, 265381)));
    }

    #[test]
    fn convergents_alternate_sides_of_pi() {
        let cf = pi_continued_fraction(10).unwrap();
        for (i, c) in cf.convergents.iter().enumerate() {
            let expected = if i % 2 == 0 { Side::Less } else { Side::Greater };
            assert_eq!(cmp_pi(c), expected, "convergent {i} = {c}");
        }
    }

    #[test]
    fn terms_independent_of_start_precision() {
        let a = pi_continued_fraction_from(20, 64, oracle::DEFAULT_PRECISION_CEILING).unwrap();
        let b = pi_continued_fraction_from(20, 256, oracle::DEFAULT_PRECISION_CEILING).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rational_cf_of_22_7() {
        let terms = rational_continued_fraction(&ratio(22, 7));
        assert_eq!(terms, vec![BigInt::from(3), BigInt::from(7)]);
        let terms = rational_continued_fraction(&ratio(355, 113));
        assert_eq!(terms, vec![BigInt::from(3), BigInt::from(7), BigInt::from(16)]);
    }

    #[test]
    fn convergents_are_best_for_small_denominators() {
        // brute force: no rational with a smaller denominator comes closer
        let cf = pi_continued_fraction(6).unwrap();
        let pi = oracle::pi_enclosure(40);
        let (pi_lo, pi_hi) = (pi.lo().to_rational(), pi.hi().to_rational());
        let err_bounds = |r: &BigRational| {
            // (min, max) possible |r - pi| given the enclosure
            let d1 = (r - &pi_lo).abs();
            let d2 = (r - &pi_hi).abs();
            (d1.clone().min(d2.clone()), d1.max(d2))
        };
        for c in cf.convergents.iter().filter(|c| c.denom() <= &BigInt::from(1000)) {
            let (_, c_max) = err_bounds(c);
            let den: i64 = c.denom().to_string().parse().unwrap();
            for q in 1..den {
                let near = (&pi_lo * BigRational::from_integer(q.into())).to_integer();
                for p in [near.clone(), &near + 1] {
                    let cand = BigRational::new(p, q.into());
                    if &cand == c {
                        continue;
                    }
                    let (cand_min, _) = err_bounds(&cand);
                    assert!(cand_min > c_max, "{cand} beats convergent {c}");
                }
            }
        }
    }

    #[test]
    fn classification_examples() {
        let cf = pi_continued_fraction(12).unwrap();
        assert_eq!(classify_bound(&ratio(355, 113), &cf).unwrap(), BoundClass::Convergent);
        assert_eq!(classify_bound(&ratio(3, 1), &cf).unwrap(), BoundClass::Convergent);
        // D's value reduces to 833719/265381, the ninth convergent
        let d = ratio(1667438, 530762);
        assert_eq!(classify_bound(&d, &cf).unwrap(), BoundClass::Convergent);
        // the seed 25/8 is the j = 1 intermediate of the family between
        // 22/7 and 333/106: (22*1 + 3)/(7*1 + 1)
        assert_eq!(classify_bound(&ratio(25, 8), &cf).unwrap(), BoundClass::Semiconvergent);
        // (3j + 1)/j family: j = 5 gives 16/5
        assert_eq!(classify_bound(&ratio(16, 5), &cf).unwrap(), BoundClass::Semiconvergent);
        assert_eq!(classify_bound(&ratio(27, 10), &cf).unwrap(), BoundClass::Other);
        // too-short expansion errors out
        let short = pi_continued_fraction(3).unwrap();
        assert!(matches!(
            classify_bound(&ratio(833719, 265381), &short),
            Err(CfError::TooShort { .. })
        ));
    }
}
