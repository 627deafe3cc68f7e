//! The originator recurrence and the chain of two-sided rational bounds
//! on pi it generates, plus the reduced forms and the curious ratio.
//!
//! An excessive parent p/q (periphery p, diameter q) is refined by the
//! multiplier family f(n) = (p*n + 3)/(q*n + 1): f is strictly increasing
//! in n and stays strictly between 3 and p/q whenever p > 3q, so the
//! largest n with f(n) < pi (the minor originator) and its successor yield
//! the next defective/excessive pair. The recurrence acts on the printed,
//! unreduced parent pair: scaling p and q by a common factor changes the
//! originator, so reduction must never be applied before refining.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use thiserror::Error;

use crate::arith::{decimal_expand, BigRational, FixedDecimal};
use crate::oracle::{self, Enclosure, Side};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SynthesisError {
    #[error("parent {periphery}/{diameter} is at most 3; no multiplier produces a bound")]
    ParentNotAboveThree { periphery: BigInt, diameter: BigInt },
    #[error("parent {periphery}/{diameter} is not an excessive bound")]
    ParentNotExcessive { periphery: BigInt, diameter: BigInt },
}

/// A diameter:periphery pair exactly as a table prints it, before any
/// reduction. The recurrence is sensitive to this representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawRatio {
    pub periphery: BigInt,
    pub diameter: BigInt,
}

impl RawRatio {
    pub fn new(periphery: impl Into<BigInt>, diameter: impl Into<BigInt>) -> Self {
        Self { periphery: periphery.into(), diameter: diameter.into() }
    }

    pub fn value(&self) -> BigRational {
        BigRational::new(self.periphery.clone(), self.diameter.clone())
    }
}

impl std::fmt::Display for RawRatio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ad {}", self.diameter, self.periphery)
    }
}

/// One refinement step: the parent, its two originators, and the resulting
/// defective/excessive children both raw (as printed) and reduced.
#[derive(Debug, Clone)]
pub struct BoundPair {
    pub label_minor: String,
    pub label_major: String,
    pub originator_label_minor: String,
    pub originator_label_major: String,
    pub parent_raw: RawRatio,
    pub parent: BigRational,
    pub originator_minor: BigInt,
    pub originator_major: BigInt,
    pub defective_raw: RawRatio,
    pub excessive_raw: RawRatio,
    pub defective: BigRational,
    pub excessive: BigRational,
}

/// A labeled seed bound; the four seeds are given, not derived.
#[derive(Debug, Clone)]
pub struct Seed {
    pub label: String,
    pub raw: RawRatio,
    pub value: BigRational,
    pub side: Side,
}

/// Seeds plus the refinement steps derived from them. Each step refines
/// the previous step's excessive raw pair (the first refines 22/7).
#[derive(Debug, Clone)]
pub struct Chain {
    pub seeds: Vec<Seed>,
    pub steps: Vec<BoundPair>,
}

/// The seed bounds A, Aa, B, Bb. B happens to equal f(1) applied to 22/7,
/// but the tables present all four as given, so they are constants here.
pub fn seeds() -> Vec<Seed> {
    let seed = |label: &str, p: i64, q: i64, side| Seed {
        label: label.to_string(),
        raw: RawRatio::new(p, q),
        value: BigRational::new(p.into(), q.into()),
        side,
    };
    vec![
        seed("A", 3, 1, Side::Less),
        seed("Aa", 4, 1, Side::Greater),
        seed("B", 25, 8, Side::Less),
        seed("Bb", 22, 7, Side::Greater),
    ]
}

/// Child and originator labels per step. The first four follow the table
/// (children C..F doubled for the excessive side; originators walk the
/// classical Latin alphabet backward from Z, which has no W or U). Later
/// steps continue both schemes synthetically.
pub fn step_labels(index: usize) -> (String, String, String, String) {
    const CHILDREN: &[char] = &['C', 'D', 'E', 'F', 'G', 'H', 'I', 'K', 'L', 'M', 'N', 'O'];
    const ORIGINATORS: &[char] = &['Z', 'Y', 'X', 'V', 'T', 'S', 'R', 'Q', 'P', 'O'];
    let child = CHILDREN.get(index).copied().unwrap_or('?');
    let orig = ORIGINATORS.get(index).copied().unwrap_or('?');
    (
        child.to_string(),
        format!("{}{}", child, child.to_lowercase()),
        orig.to_string(),
        format!("{}{}", orig, orig.to_lowercase()),
    )
}

fn check_parent(parent: &RawRatio) -> Result<(), SynthesisError> {
    let err_ctx = || (parent.periphery.clone(), parent.diameter.clone());
    if parent.value() <= BigRational::from_integer(3.into()) {
        let (periphery, diameter) = err_ctx();
        return Err(SynthesisError::ParentNotAboveThree { periphery, diameter });
    }
    if oracle::cmp_pi(&parent.value()) == Side::Less {
        let (periphery, diameter) = err_ctx();
        return Err(SynthesisError::ParentNotExcessive { periphery, diameter });
    }
    Ok(())
}

/// The minor originator of an excessive parent: the largest n >= 1 with
/// (p*n + 3)/(q*n + 1) < pi, i.e. floor((pi - 3)/(p - q*pi)).
///
/// The map pi -> (pi - 3)/(p - q*pi) is increasing on the relevant range,
/// so evaluating it on both endpoints of a pi enclosure brackets the true
/// value; precision is raised until both endpoints share a floor.
pub fn originator(parent: &RawRatio) -> Result<BigInt, SynthesisError> {
    check_parent(parent)?;
    let p = parent.periphery.clone();
    let q = parent.diameter.clone();
    let n = oracle::try_floor_of_pi_map(
        move |pi| {
            let three = BigRational::from_integer(3.into());
            let p = BigRational::from_integer(p.clone());
            let q = BigRational::from_integer(q.clone());
            (pi - three) / (p - q * pi)
        },
        oracle::DEFAULT_PRECISION_CEILING,
    )
    .expect("originator floor resolves below the precision ceiling");
    Ok(n)
}

fn child(parent: &RawRatio, n: &BigInt) -> RawRatio {
    RawRatio::new(&parent.periphery * n + 3, &parent.diameter * n + 1)
}

/// Refines an excessive parent into its defective/excessive child pair,
/// verifying both sides against pi. Labels are left empty; chain assembly
/// fills them in.
pub fn refine(parent: &RawRatio) -> Result<BoundPair, SynthesisError> {
    let n = originator(parent)?;
    let n_major = &n + BigInt::one();
    let defective_raw = child(parent, &n);
    let excessive_raw = child(parent, &n_major);
    let defective = defective_raw.value();
    let excessive = excessive_raw.value();
    // the floor computation already pins these sides; re-verify anyway
    assert_eq!(oracle::cmp_pi(&defective), Side::Less);
    assert_eq!(oracle::cmp_pi(&excessive), Side::Greater);
    Ok(BoundPair {
        label_minor: String::new(),
        label_major: String::new(),
        originator_label_minor: String::new(),
        originator_label_major: String::new(),
        parent_raw: parent.clone(),
        parent: parent.value(),
        originator_minor: n,
        originator_major: n_major,
        defective_raw,
        excessive_raw,
        defective,
        excessive,
    })
}

/// Seeds plus `depth` refinement steps, each refining the previous step's
/// excessive raw pair.
pub fn generate_chain(depth: usize) -> Chain {
    let seeds = seeds();
    let mut steps = Vec::with_capacity(depth);
    let mut parent = seeds[3].raw.clone(); // Bb = 22/7
    for index in 0..depth {
        let mut pair = refine(&parent).expect("chain parents are always excessive and above 3");
        let (minor, major, orig_minor, orig_major) = step_labels(index);
        pair.label_minor = minor;
        pair.label_major = major;
        pair.originator_label_minor = orig_minor;
        pair.originator_label_major = orig_major;
        parent = pair.excessive_raw.clone();
        steps.push(pair);
    }
    Chain { seeds, steps }
}

/// A gcd-reduced pair together with the factor that was removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedForm {
    pub reduced: BigRational,
    pub factor: BigInt,
}

/// Reduces a raw pair and reports the common factor removed.
pub fn reduced_form(raw: &RawRatio) -> ReducedForm {
    let factor = raw.periphery.gcd(&raw.diameter);
    ReducedForm { reduced: raw.value(), factor }
}

/// The curious ratio (3113^2 + 991)/(3113 * 991) with its agreement report.
#[derive(Debug, Clone)]
pub struct CuriousRatio {
    pub value: BigRational,
    /// Leading significant digits shared with pi.
    pub agreeing_digits: u32,
    /// Enclosure of value - pi (positive: the ratio is excessive).
    pub excess: Enclosure,
}

/// Builds the curious ratio from its mixed-number definition
/// 991 : 3113 + 991/3113 and measures how closely it tracks pi.
pub fn curious_ratio() -> CuriousRatio {
    let whole = BigInt::from(3113);
    let base = BigInt::from(991);
    let value = BigRational::new(&whole * &whole + &base, whole * base);

    // significant-digit agreement: compare truncated digit rows until they
    // first differ (both values live in (1, 10), so rows align)
    let scale = 15u32;
    let mine = decimal_expand(&value, scale).digit_row();
    let pi_row = oracle::pi_digits(scale + 1);
    let agreeing_digits = mine
        .bytes()
        .zip(pi_row.bytes())
        .take_while(|(a, b)| a == b)
        .count() as u32;

    let pi = oracle::pi_enclosure(20);
    let (lo, hi) = pi.sub_from_rational(&value);
    let excess = Enclosure::new(decimal_expand(&lo, 20), {
        // round the upper endpoint outward by one ulp so the interval
        // stays a true enclosure after truncation
        let up = decimal_expand(&hi, 20);
        &up + &up.ulp()
    });
    CuriousRatio { value, agreeing_digits, excess }
}

/// Decimal expansion helper for chain values at table scales.
pub fn expand_raw(raw: &RawRatio, scale: u32) -> FixedDecimal {
    decimal_expand(&raw.value(), scale)
}

/// Positive part count check used by tests: the distance from parent to
/// child shrinks monotonically, |excessive_k - pi| decreasing in k.
pub fn excessive_errors_decrease(chain: &Chain) -> bool {
    // all excessive bounds exceed pi, so comparing the bounds themselves
    // compares their errors without needing pi at all
    chain
        .steps
        .windows(2)
        .all(|w| w[1].excessive < w[0].excessive)
}
