//! Exact evaluation of the two geometric approximations to the semicircle:
//! the 1685 compass construction whose segment IL = (1/3)*sqrt(120 - 18*sqrt(3))
//! falls just short of pi, and the diameter-bisection construction whose
//! ratio 3217/1024 slightly exceeds it.
//!
//! Every length in the compass construction lives in the quadratic
//! extension Q(sqrt(3)), so the radical identity IL^2 = (120 - 18*sqrt(3))/9
//! is checked symbolically, with no oracle involved; only the final
//! comparisons against pi need enclosures.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{decimal_expand, decimal_expand_ceil, decimal_expand_floor, BigRational, FixedDecimal};
use crate::oracle::{self, Enclosure};

/// Exact element of Q(sqrt(3)): `a + b*sqrt(3)` with rational a, b.
/// Sufficient for every length in the compass construction; no general
/// algebraic-number machinery is needed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sqrt3Ext {
    pub a: BigRational,
    pub b: BigRational,
}

impl Sqrt3Ext {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        Self { a, b: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    /// b * sqrt(3) as a pure radical part.
    pub fn sqrt3_times(b: BigRational) -> Self {
        Self { a: BigRational::zero(), b }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.a.clone(), -self.b.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + 3 b1 b2 + (a1 b2 + a2 b1) s
        let three = BigRational::from_integer(3.into());
        Self::new(
            &self.a * &rhs.a + three * (&self.b * &rhs.b),
            &self.a * &rhs.b + &rhs.a * &self.b,
        )
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Exact sign via the conjugate trick: a + b*sqrt(3) > 0 iff either
    /// both parts are nonnegative (not both zero), or the dominant part is
    /// positive after comparing a^2 with 3 b^2.
    pub fn is_positive(&self) -> bool {
        let a_pos = self.a.is_positive() || self.a.is_zero();
        let b_pos = self.b.is_positive() || self.b.is_zero();
        if self.is_zero() {
            return false;
        }
        match (a_pos, b_pos) {
            (true, true) => true,
            (false, false) => false,
            (true, false) => &self.a * &self.a > BigRational::from_integer(3.into()) * (&self.b * &self.b),
            (false, true) => &self.a * &self.a < BigRational::from_integer(3.into()) * (&self.b * &self.b),
        }
    }

    /// Rigorous enclosure at the given scale, via a truncated-sqrt bracket
    /// of sqrt(3) evaluated with exact rational interval arithmetic.
    pub fn enclosure(&self, scale: u32) -> Enclosure {
        let guard = scale + 8;
        let s3_lo = FixedDecimal::from_int(3).sqrt(guard).expect("sqrt of 3").to_rational();
        let s3_hi = &s3_lo + crate::arith::pow10_recip(guard);
        let (radical_lo, radical_hi) = if self.b.is_negative() {
            (&self.b * &s3_hi, &self.b * &s3_lo)
        } else {
            (&self.b * &s3_lo, &self.b * &s3_hi)
        };
        let lo = &self.a + radical_lo;
        let hi = &self.a + radical_hi;
        Enclosure::new(
            decimal_expand_floor(&lo, guard).floored_to(scale),
            decimal_expand_ceil(&hi, guard).ceiled_to(scale),
        )
    }
}

impl std::fmt::Display for Sqrt3Ext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt(3)", self.b)
        } else if self.b.is_negative() {
            write!(f, "{} - {}*sqrt(3)", self.a, -self.b.clone())
        } else {
            write!(f, "{} + {}*sqrt(3)", self.a, self.b)
        }
    }
}

/// A point with exact coordinates in Q(sqrt(3)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub x: Sqrt3Ext,
    pub y: Sqrt3Ext,
}

impl Point {
    pub fn new(x: Sqrt3Ext, y: Sqrt3Ext) -> Self {
        Self { x, y }
    }

    /// Exact squared distance.
    pub fn dist2(&self, other: &Point) -> Sqrt3Ext {
        let dx = self.x.sub(&other.x);
        let dy = self.y.sub(&other.y);
        dx.square().add(&dy.square())
    }
}

/// The labeled points of the compass construction, unit radius, center A
/// at the origin, diameter BD horizontal. L sits on the tangent at D,
/// beyond H, so that KL = KH + HL with HL equal to the diameter.
pub fn construction_coordinates() -> Vec<(String, Point)> {
    let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let int = Sqrt3Ext::from_int;
    let pt = |x, y| Point::new(x, y);
    vec![
        ("A".into(), pt(int(0), int(0))),
        ("B".into(), pt(int(-1), int(0))),
        ("C".into(), pt(int(0), int(1))),
        ("D".into(), pt(int(1), int(0))),
        ("E".into(), pt(Sqrt3Ext::sqrt3_times(r(-1, 2)), Sqrt3Ext::rational(r(1, 2)))),
        ("F".into(), pt(Sqrt3Ext::sqrt3_times(r(1, 2)), Sqrt3Ext::rational(r(1, 2)))),
        ("G".into(), pt(int(-1), int(1))),
        ("H".into(), pt(int(1), int(1))),
        ("I".into(), pt(int(-1), Sqrt3Ext::sqrt3_times(r(1, 3)))),
        ("K".into(), pt(int(1), Sqrt3Ext::sqrt3_times(r(1, 3)))),
        ("L".into(), pt(int(1), int(3))),
    ]
}

/// One named length of the construction at the report's scale, rendered
/// both truncated and rounded because the tables mix the two conventions.
#[derive(Debug, Clone)]
pub struct NamedLength {
    pub label: String,
    /// Exact value when it is rational in sqrt(3) terms.
    pub exact: Sqrt3Ext,
    pub truncated: FixedDecimal,
    pub rounded: FixedDecimal,
}

/// Full evaluation of the compass construction.
#[derive(Debug, Clone)]
pub struct ConstructionReport {
    pub named_lengths: Vec<NamedLength>,
    pub closed_form: String,
    /// Enclosure of IL itself.
    pub il: Enclosure,
    /// Enclosure of the defect Z = pi - IL (positive: IL is defective).
    pub defect_z: Enclosure,
    /// floor(1/Z), certified by enclosure.
    pub reciprocal_x: BigInt,
    pub points: Vec<(String, Point)>,
    pub scale: u32,
}

fn named(label: &str, exact: Sqrt3Ext, scale: u32) -> NamedLength {
    let e = exact.enclosure(scale + 10);
    let truncated = e.lo().truncated_to(scale);
    assert_eq!(truncated, e.hi().truncated_to(scale), "enclosure straddles truncation for {label}");
    let rounded = e.lo().rounded_to(scale);
    assert_eq!(rounded, e.hi().rounded_to(scale), "enclosure straddles rounding for {label}");
    NamedLength { label: label.to_string(), exact, truncated, rounded }
}

/// Enclosure of sqrt(v) for an enclosed nonnegative value, outward by one
/// ulp on the upper side.
pub fn sqrt_enclosure(v: &Enclosure, scale: u32) -> Enclosure {
    let lo = v.lo().sqrt(scale).expect("nonnegative");
    let hi = v.hi().sqrt(scale).expect("nonnegative");
    Enclosure::new(lo, &hi + &hi.ulp())
}

/// Evaluates the compass construction at the requested scale (>= 15).
pub fn kochanski_construction(scale: u32) -> ConstructionReport {
    assert!(scale >= 15, "the construction report needs at least 15 digits");

    let points = construction_coordinates();
    let by_label = |l: &str| points.iter().find(|(n, _)| n == l).map(|(_, p)| p.clone()).unwrap();
    let (a, b, i, g, k, l, h) = (
        by_label("A"), by_label("B"), by_label("I"), by_label("G"),
        by_label("K"), by_label("L"), by_label("H"),
    );

    // AB is the radius, BI the tangent of 30 degrees, IG its complement,
    // KL the tangent complement plus the diameter taken from H
    let ab = a.dist2(&b); // 1
    let bi2 = b.dist2(&i); // 1/3
    let r13 = BigRational::new(1.into(), 3.into());
    debug_assert_eq!(bi2, Sqrt3Ext::rational(r13));
    let bi = Sqrt3Ext::sqrt3_times(BigRational::new(1.into(), 3.into())); // sqrt(3)/3
    debug_assert_eq!(bi.square(), bi2);
    let ig = Sqrt3Ext::from_int(1).sub(&bi);
    debug_assert_eq!(ig.square(), i.dist2(&g));
    let kl = Sqrt3Ext::from_int(3).sub(&bi);
    debug_assert_eq!(kl.square(), k.dist2(&l));
    debug_assert_eq!(h.dist2(&l), Sqrt3Ext::from_int(4)); // HL = diameter

    // IL^2 = IK^2 + KL^2 = 4 + (3 - sqrt(3)/3)^2 = (120 - 18 sqrt(3))/9
    let il2 = i.dist2(&l);
    let expected = Sqrt3Ext::new(
        BigRational::new(120.into(), 9.into()),
        BigRational::new((-18).into(), 9.into()),
    );
    assert_eq!(il2, expected, "radical identity for IL^2");

    let il2_enclosure = il2.enclosure(2 * (scale + 10));
    let il = sqrt_enclosure(&il2_enclosure, scale + 10);

    let mut named_lengths = vec![
        named("AB", ab, scale),
        named("BI", bi, scale),
        named("IG", ig, scale),
        named("KL", kl, scale),
        named("KLq + IKq", il2.clone(), 2 * scale),
    ];
    named_lengths.push(NamedLength {
        label: "IL".to_string(),
        exact: il2.clone(),
        truncated: il.lo().truncated_to(scale),
        rounded: il.lo().rounded_to(scale),
    });

    // defect Z = pi - IL and its reciprocal floor, precision raised until
    // the floor is pinned
    let mut digits = scale + 10;
    let (defect_z, reciprocal_x) = loop {
        let pi = oracle::pi_enclosure(digits);
        let il_fine = sqrt_enclosure(&il2.enclosure(2 * digits), digits);
        let z_lo = &pi.lo().to_rational() - &il_fine.hi().to_rational();
        let z_hi = &pi.hi().to_rational() - &il_fine.lo().to_rational();
        let lo_fd = decimal_expand(&z_lo, digits);
        let hi_fd = {
            let t = decimal_expand(&z_hi, digits);
            &t + &t.ulp()
        };
        let z = Enclosure::new(lo_fd, hi_fd);
        let inv_lo = oracle::rational_floor(&z.hi().to_rational().recip());
        let inv_hi = oracle::rational_floor(&z.lo().to_rational().recip());
        if inv_lo == inv_hi {
            break (z, inv_lo);
        }
        digits *= 2;
    };

    ConstructionReport {
        named_lengths,
        closed_form: "(1/3)*sqrt(120 - 18*sqrt(3))".to_string(),
        il,
        defect_z,
        reciprocal_x,
        points,
        scale,
    }
}

/// Outcome of testing a year against the defect Z of the compass
/// construction: true iff 1/(10*(year+1)) < Z < 1/(10*year).
#[derive(Debug, Clone)]
pub struct YearBoundReport {
    pub year: u32,
    pub holds: bool,
    /// floor(1/Z), for context in rendered reports.
    pub reciprocal_x: BigInt,
}

/// Strict test 1/(10*(year+1)) < Z < 1/(10*year) on a certified enclosure.
pub fn year_bound_holds(defect_z: &Enclosure, year: u32) -> bool {
    let lower = BigRational::new(1.into(), (10 * (u64::from(year) + 1)).into());
    let upper = BigRational::new(1.into(), (10 * u64::from(year)).into());
    defect_z.lo().to_rational() > lower && defect_z.hi().to_rational() < upper
}

pub fn year_bound_check(year: u32) -> YearBoundReport {
    assert!(year >= 1, "years start at 1");
    let report = kochanski_construction(15);
    let holds = year_bound_holds(&report.defect_z, year);
    YearBoundReport { year, holds, reciprocal_x: report.reciprocal_x }
}

/// Evaluation of the bisection construction: 3217/1024 with its dyadic
/// decomposition and excess over pi.
#[derive(Debug, Clone)]
pub struct BisectionReport {
    pub ratio: BigRational,
    /// 3 + 1/8 + 1/64 + 1/1024, the compass-friendly decomposition. The
    /// original prints the 1/8 term as "8/1"; the report carries the
    /// corrected value.
    pub decomposition: Vec<BigRational>,
    pub excess_q: Enclosure,
    /// Q < Z: the bisection beats the compass construction.
    pub comparison_to_z: bool,
    pub scale: u32,
}

pub fn bisection_construction(scale: u32) -> BisectionReport {
    assert!(scale >= 9, "the bisection report needs at least 9 digits");
    let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let ratio = r(3217, 1024);
    // three diameters (96 parts of 32), plus 4/32, plus half a 32nd, plus
    // a sixteenth of another half
    let decomposition = vec![r(96, 32), r(4, 32), r(1, 2) * r(1, 32), r(1, 16) * (r(1, 2) * r(1, 32))];
    let sum: BigRational = decomposition.iter().cloned().sum();
    assert_eq!(sum, ratio, "dyadic decomposition identity");

    let digits = scale + 10;
    let pi = oracle::pi_enclosure(digits);
    let (lo, hi) = pi.sub_from_rational(&ratio);
    let excess_q = Enclosure::new(decimal_expand(&lo, digits), {
        let t = decimal_expand(&hi, digits);
        &t + &t.ulp()
    });

    let z = kochanski_construction(15).defect_z;
    let comparison_to_z = excess_q.hi().to_rational() < z.lo().to_rational();

    BisectionReport { ratio, decomposition, excess_q, comparison_to_z, scale }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::oracle::{cmp_enclosure_pi, EnclosureSide};

    fn r(n: i64, d: i64) -> BigRational {
        ratio(n, d)
    }

    #[test]
    fn sqrt3_ext_arithmetic() {
        let x = Sqrt3Ext::new(r(1, 1), r(1, 1));
        let y = x.mul(&x);
        assert_eq!(y, Sqrt3Ext::new(r(4, 1), r(2, 1)));
        assert!(x.is_positive());
        let neg = Sqrt3Ext::new(r(1, 1), r(-1, 1)); // 1 - sqrt(3) < 0
        assert!(!neg.is_positive());
        let pos = Sqrt3Ext::new(r(2, 1), r(-1, 1)); // 2 - sqrt(3) > 0
        assert!(pos.is_positive());
        let sq = Sqrt3Ext::sqrt3_times(r(1, 1)).square();
        assert_eq!(sq, Sqrt3Ext::rational(r(3, 1)));
    }

    #[test]
    fn sqrt3_enclosure_brackets() {
        let s3 = Sqrt3Ext::sqrt3_times(r(1, 1));
        let e = s3.enclosure(20);
        assert!(e.lo().to_string().starts_with("1.7320508075688772935"));
        // lo^2 <= 3 <= hi^2
        assert!(e.lo().to_rational().pow(2) <= r(3, 1));
        assert!(e.hi().to_rational().pow(2) >= r(3, 1));
    }

    #[test]
    fn coordinates_satisfy_stated_lengths() {
        let pts = construction_coordinates();
        let get = |l: &str| pts.iter().find(|(n, _)| n == l).map(|(_, p)| p.clone()).unwrap();
        // |BI| = tan 30: BI^2 = 1/3
        assert_eq!(get("B").dist2(&get("I")), Sqrt3Ext::rational(r(1, 3)));
        // |HL| = diameter: HL^2 = 4
        assert_eq!(get("H").dist2(&get("L")), Sqrt3Ext::from_int(4));
        // |KL| = 3 - sqrt(3)/3: KL^2 = 28/3 - 2 sqrt(3)
        assert_eq!(get("K").dist2(&get("L")), Sqrt3Ext::new(r(28, 3), r(-2, 1)));
        // E and F sit on the unit circle, one radius from C
        assert_eq!(get("A").dist2(&get("E")), Sqrt3Ext::from_int(1));
        assert_eq!(get("A").dist2(&get("F")), Sqrt3Ext::from_int(1));
        assert_eq!(get("C").dist2(&get("E")), Sqrt3Ext::from_int(1));
        assert_eq!(get("C").dist2(&get("F")), Sqrt3Ext::from_int(1));
        // chord of the remaining 30-degree arcs: |BE|^2 = |DF|^2 = 2 - sqrt(3)
        assert_eq!(get("B").dist2(&get("E")), Sqrt3Ext::new(r(2, 1), r(-1, 1)));
        assert_eq!(get("D").dist2(&get("F")), Sqrt3Ext::new(r(2, 1), r(-1, 1)));
        // tangents at B and D have radius length
        assert_eq!(get("B").dist2(&get("G")), Sqrt3Ext::from_int(1));
        assert_eq!(get("D").dist2(&get("H")), Sqrt3Ext::from_int(1));
        // IK joins the tangent points at diameter distance
        assert_eq!(get("I").dist2(&get("K")), Sqrt3Ext::from_int(4));
    }

    #[test]
    fn radical_identity_is_exact() {
        let pts = construction_coordinates();
        let get = |l: &str| pts.iter().find(|(n, _)| n == l).map(|(_, p)| p.clone()).unwrap();
        let il2 = get("I").dist2(&get("L"));
        assert_eq!(il2, Sqrt3Ext::new(r(120, 9), r(-18, 9)));
        // and equals 4 + (3 - sqrt(3)/3)^2 assembled independently
        let kl = Sqrt3Ext::from_int(3).sub(&Sqrt3Ext::sqrt3_times(r(1, 3)));
        assert_eq!(il2, kl.square().add(&Sqrt3Ext::from_int(4)));
    }

    #[test]
    fn construction_fifteen_digit_lines() {
        let report = kochanski_construction(15);
        let find = |l: &str| report.named_lengths.iter().find(|n| n.label == l).unwrap();

        assert_eq!(find("AB").truncated.to_string(), "1.000000000000000");
        assert_eq!(find("BI").rounded.to_string(), "0.577350269189626");
        assert_eq!(find("BI").truncated.to_string(), "0.577350269189625");
        assert_eq!(find("IG").truncated.to_string(), "0.422649730810374");
        assert_eq!(find("KL").truncated.to_string(), "2.422649730810374");
        // the exact sum of squares, thirty digits
        assert_eq!(
            find("KLq + IKq").truncated.to_string(),
            "9.869231718195578746278440650321"
        );
        // IL from the exact radical
        assert_eq!(find("IL").truncated.to_string(), "3.141533338705094");
        assert_eq!(find("IL").rounded.to_string(), "3.141533338705095");

        // defect and reciprocal
        assert_eq!(report.reciprocal_x, BigInt::from(16859));
        assert!(report.defect_z.lo().to_string().starts_with("0.0000593148846"));
        assert_eq!(cmp_enclosure_pi(&report.il), EnclosureSide::Less);
    }

    #[test]
    fn construction_sum_digits_at_higher_scale() {
        // KL^2 + IK^2 to thirty digits, straight from the radical
        let report = kochanski_construction(15);
        let sum = report.named_lengths.iter().find(|n| n.label == "KLq + IKq").unwrap();
        assert_eq!(sum.truncated.digit_row(), "9869231718195578746278440650321");
    }

    #[test]
    fn year_bound_examples() {
        assert!(year_bound_check(1685).holds);
        assert!(!year_bound_check(1686).holds);
        assert!(!year_bound_check(1).holds);
    }

    #[test]
    fn year_bound_holds_for_exactly_one_year_in_ten_thousand() {
        let z = kochanski_construction(15).defect_z;
        let passing: Vec<u32> = (1..=10_000).filter(|&y| year_bound_holds(&z, y)).collect();
        assert_eq!(passing, vec![1685]);
    }

    #[test]
    fn il_digit_routes_agree_from_15_to_50() {
        // route one: pure integer arithmetic on the radical. With
        // a = isqrt(3 * 10^4s), so a <= sqrt(3) * 10^2s < a + 1, the
        // interval [120*10^4s - 18(a+1)*10^2s, 120*10^4s - 18a*10^2s]
        // brackets (120 - 18 sqrt 3) * 10^4s, and a third of its root
        // brackets IL * 10^2s. route two: the report's enclosure.
        use crate::arith::integer_sqrt_floor;
        for scale in [15u32, 25, 35, 50] {
            let s = scale + 2;
            let a = integer_sqrt_floor(&(BigInt::from(3) * crate::arith::pow10(4 * s))).unwrap();
            let base = BigInt::from(120) * crate::arith::pow10(4 * s);
            let shift = crate::arith::pow10(2 * s);
            let num_lo = &base - BigInt::from(18) * (&a + 1) * &shift;
            let num_hi = &base - BigInt::from(18) * &a * &shift;
            let root_lo = integer_sqrt_floor(&num_lo).unwrap() / 3;
            let root_hi = integer_sqrt_floor(&num_hi).unwrap() / 3 + 1;
            let route_one = Enclosure::new(
                FixedDecimal::new(root_lo, 2 * s),
                FixedDecimal::new(root_hi, 2 * s),
            );

            let report = kochanski_construction(scale.max(15));
            let il2 = Sqrt3Ext::new(r(120, 9), r(-18, 9));
            let route_two = sqrt_enclosure(&il2.enclosure(2 * (scale + 5)), scale + 5);
            assert!(report.il.intersect(&route_two).lo() <= report.il.intersect(&route_two).hi());

            let d1 = route_one.lo().truncated_to(scale);
            let d2 = route_two.lo().truncated_to(scale);
            assert_eq!(d1, route_one.hi().truncated_to(scale), "route one straddles at {scale}");
            assert_eq!(d2, route_two.hi().truncated_to(scale), "route two straddles at {scale}");
            assert_eq!(d1, d2, "routes disagree at scale {scale}");
        }
    }

    #[test]
    fn printed_rows_propagate_the_ig_slip() {
        // the printed rows are mutually consistent: sum = 4 + printed KL squared
        // exactly, printed IL = truncated root of the printed sum, and the
        // printed IG sits one unit below the complement of the printed BI
        let kl_printed = FixedDecimal::new(crate::arith::bigint("2422649730810373"), 15);
        let sum_printed = FixedDecimal::new(crate::arith::bigint("9869231718195572759955284399129"), 30);
        let four = FixedDecimal::from_int(4).widened_to(30);
        assert_eq!(&(&kl_printed * &kl_printed) + &four, sum_printed);
        assert_eq!(sum_printed.sqrt(15).unwrap().digit_row(), "3141533338705093");

        let bi_printed = FixedDecimal::new(crate::arith::bigint("577350269189626"), 15);
        let ig_printed = FixedDecimal::new(crate::arith::bigint("422649730810373"), 15);
        let complement = &FixedDecimal::from_int(1).widened_to(15) - &bi_printed;
        assert_eq!(&complement - &ig_printed, ig_printed.ulp());
    }

    #[test]
    fn bisection_report() {
        let b = bisection_construction(9);
        assert_eq!(b.ratio, r(3217, 1024));
        assert_eq!(decimal_expand(&b.ratio, 9).to_string(), "3.141601562");
        let sum: BigRational = b.decomposition.iter().cloned().sum();
        assert_eq!(sum, r(3217, 1024));
        assert!(b.comparison_to_z);
        // excess around 8.9089e-6
        assert!(b.excess_q.lo().to_rational() > r(8908, 1) * crate::arith::pow10_recip(9));
        assert!(b.excess_q.hi().to_rational() < r(8910, 1) * crate::arith::pow10_recip(9));
    }

    #[test]
    fn ordering_chain_il_pi_curious_cc_bisection() {
        // IL < pi < curious ratio < 355/113 < 3217/1024; the last pair is
        // razor thin: 3217*113 = 363521 against 355*1024 = 363520
        let report = kochanski_construction(15);
        assert_eq!(cmp_enclosure_pi(&report.il), EnclosureSide::Less);
        let curious = crate::synthesis::curious_ratio();
        assert_eq!(oracle::cmp_pi(&curious.value), crate::oracle::Side::Greater);
        assert!(curious.value < r(355, 113));
        assert!(r(355, 113) < r(3217, 1024));
    }
}
