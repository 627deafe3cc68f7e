//! Reproduction of the examination table (every bound expanded at diameter
//! 10^25 and measured against pi) and the audit of every printed constant
//! in the corpus against independent computation.
//!
//! Deviations are computed the canonical way: from the exact rational
//! first, truncated last. The alternative convention (subtracting the two
//! truncated rows) is evaluated as well, and a printed value that matches
//! only the alternative, or sits one unit off in the last place, is
//! classified as a convention ambiguity rather than a misprint.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arith::{decimal_expand, mixed_string, parse_grouped, pow10, BigRational, FixedDecimal};
use crate::construction::{bisection_construction, kochanski_construction, BisectionReport, ConstructionReport};
use crate::corpus::{Corpus, CorpusError};
use crate::oracle::{self, Enclosure, Side};
use crate::synthesis::{curious_ratio, generate_chain, reduced_form, Chain, CuriousRatio, RawRatio};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExamenError {
    #[error("chain has no refinement steps to examine")]
    ChainEmpty,
    #[error("table scale {given} is smaller than the deepest row needs ({required})")]
    ScaleMismatch { required: u32, given: u32 },
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("corpus entry {id:?} has no registered computation")]
    UnknownEntry { id: String },
}

/// Whether a bound falls short of pi or exceeds it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeviationKind {
    Defect,
    Excess,
}

impl DeviationKind {
    pub fn label(self) -> &'static str {
        match self {
            DeviationKind::Defect => "Defectus.",
            DeviationKind::Excess => "Excessus.",
        }
    }

    fn from_side(side: Side) -> Self {
        match side {
            Side::Less => DeviationKind::Defect,
            Side::Greater => DeviationKind::Excess,
        }
    }
}

/// One examined bound: its periphery expansion and deviation from pi at
/// the row's scale. `kind` is `None` only when the examined value encloses
/// pi too tightly to tell (deviation then prints as zero).
#[derive(Debug, Clone)]
pub struct ExamenRow {
    pub label: String,
    pub periphery: FixedDecimal,
    pub kind: Option<DeviationKind>,
    pub deviation: FixedDecimal,
    pub scale: u32,
}

/// Examines a rational bound at the given scale; the deviation is the
/// truncated expansion of the exact |r - pi|.
pub fn examine(label: &str, r: &BigRational, scale: u32) -> ExamenRow {
    assert!(scale >= 1, "examination needs at least one digit");
    let periphery = decimal_expand(r, scale);
    let (side, deviation) = oracle::deviation_from_pi(r, scale);
    ExamenRow {
        label: label.to_string(),
        periphery,
        kind: Some(DeviationKind::from_side(side)),
        deviation,
        scale,
    }
}

/// Examines an enclosed (possibly irrational) value. Precision of the pi
/// reference is raised until the deviation's truncation is pinned.
pub fn examine_enclosure(label: &str, v: &Enclosure, scale: u32) -> ExamenRow {
    assert!(scale >= 1, "examination needs at least one digit");
    let periphery = v.lo().truncated_to(scale.min(v.scale()));
    let mut digits = (scale + 8).max(v.scale());
    loop {
        let pi = oracle::pi_enclosure(digits);
        let (v_lo, v_hi) = (v.lo().to_rational(), v.hi().to_rational());
        let (p_lo, p_hi) = (pi.lo().to_rational(), pi.hi().to_rational());
        // smallest and largest |v - pi| compatible with both intervals
        let gap_low = (&v_lo - &p_hi).max(&p_lo - &v_hi).max(BigRational::zero());
        let gap_high = (&v_hi - &p_lo).max(&p_hi - &v_lo);
        let a = decimal_expand(&gap_low, scale);
        let b = decimal_expand(&gap_high, scale);
        if a == b {
            let kind = match oracle::cmp_enclosure_pi(v) {
                oracle::EnclosureSide::Less => Some(DeviationKind::Defect),
                oracle::EnclosureSide::Greater => Some(DeviationKind::Excess),
                oracle::EnclosureSide::Inconclusive => None,
            };
            return ExamenRow { label: label.to_string(), periphery, kind, deviation: a, scale };
        }
        assert!(digits < 4 * (scale + 8) , "enclosure too wide to examine at scale {scale}");
        digits *= 2;
    }
}

/// Deviation under the alternative convention: difference of the two
/// truncated rows instead of truncation of the exact difference.
pub fn deviation_difference_of_rows(r: &BigRational, scale: u32) -> FixedDecimal {
    let row = decimal_expand(r, scale);
    let pi_row = oracle::pi_truncated(scale);
    let diff = &row - &pi_row;
    if diff.is_negative() { &FixedDecimal::zero(scale) - &diff } else { diff }
}

/// Digit scale used for the pair at this index: the table prints B/Bb at
/// 10 digits, C/Cc at 15, D/Dd and E/Ee at 20, F/Ff at 25; deeper pairs
/// get ten more digits per step.
pub fn row_scale(pair_index: usize) -> u32 {
    match pair_index {
        0 => 10,
        1 => 15,
        2 | 3 => 20,
        4 => 25,
        k => 25 + 10 * (k as u32 - 4),
    }
}

/// All examined rows of a chain in table order: the seed pair B/Bb, then
/// each step's defective and excessive children.
pub fn examen_rows(chain: &Chain) -> Vec<ExamenRow> {
    let mut rows = Vec::new();
    let seed_scale = row_scale(0);
    rows.push(examine("B", &chain.seeds[2].value, seed_scale));
    rows.push(examine("Bb", &chain.seeds[3].value, seed_scale));
    for (i, step) in chain.steps.iter().enumerate() {
        let scale = row_scale(i + 1);
        rows.push(examine(&step.label_minor, &step.defective, scale));
        rows.push(examine(&step.label_major, &step.excessive, scale));
    }
    rows
}

/// Digit groups in the table's fixed columns: six digits, then fives.
fn paper_groups(field: &str) -> Vec<String> {
    let mut groups = vec![field[..6.min(field.len())].to_string()];
    let mut i = 6;
    while i < field.len() {
        groups.push(field[i..(i + 5).min(field.len())].to_string());
        i += 5;
    }
    groups
}

/// Formats a value into the table grid: a full-width digit field at the
/// row's scale, grouped at the fixed columns, leading zeros blanked.
pub fn paper_row(value: &FixedDecimal, blank_leading_zeros: bool) -> String {
    let width = 1 + value.scale() as usize;
    let digits = value.digit_row();
    let padded = format!("{}{}", "0".repeat(width.saturating_sub(digits.len())), digits);
    let mut groups = paper_groups(&padded);
    if blank_leading_zeros {
        let mut still_leading = true;
        for g in groups.iter_mut() {
            if !still_leading {
                break;
            }
            let blanked: String = g
                .chars()
                .map(|c| {
                    if still_leading && c == '0' {
                        ' '
                    } else {
                        still_leading = false;
                        c
                    }
                })
                .collect();
            *g = blanked;
        }
    }
    groups.join(" ")
}

/// Renders the examination table in the source's layout: the diameter and
/// reference rows at the table scale, then each bound's periphery over its
/// deviation with the Defectus/Excessus tag.
pub fn render_examen(chain: &Chain, scale: u32) -> Result<String, ExamenError> {
    if chain.steps.is_empty() {
        return Err(ExamenError::ChainEmpty);
    }
    let required = row_scale(chain.steps.len());
    if scale < required {
        return Err(ExamenError::ScaleMismatch { required, given: scale });
    }

    let label_width = 8;
    let grid_width = {
        let cols = 1 + scale as usize / 5;
        6 + (cols - 1) * 6 // five digits plus separator per extra column
    };
    let mut out = String::new();
    let mut push_row = |label: &str, digits: &str, trailer: &str| {
        let mut line = format!("{label:<label_width$}{digits:<grid_width$}");
        if !trailer.is_empty() {
            line.push_str("  ");
            line.push_str(trailer);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };

    let diam = FixedDecimal::new(pow10(scale), 0);
    push_row("Diam.", &paper_groups(&diam.digit_row()).join(" "), "Archimedis");
    let pi_row = oracle::pi_truncated(scale);
    push_row("Periph.", &paper_row(&pi_row, false), "-- Ratio.");

    for row in examen_rows(chain) {
        push_row(&format!("{}.", row.label), &paper_row(&row.periphery, false), "");
        let tag = row.kind.map(DeviationKind::label).unwrap_or("");
        push_row("", &paper_row(&row.deviation, true), tag);
    }
    Ok(out)
}

/// Where a printed value stands against independent computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Classification {
    Confirmed,
    ConventionAmbiguity,
    PaperMisprint,
    TranslatorMisprint,
}

impl Classification {
    pub fn label(self) -> &'static str {
        match self {
            Classification::Confirmed => "confirmed",
            Classification::ConventionAmbiguity => "convention-ambiguity",
            Classification::PaperMisprint => "paper-misprint",
            Classification::TranslatorMisprint => "translator-misprint",
        }
    }
}

/// One printed value versus its recomputation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditFinding {
    pub location: String,
    pub printed: String,
    pub computed: String,
    pub classification: Classification,
    pub note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AuditSummary {
    pub total: usize,
    pub confirmed: usize,
    pub convention_ambiguities: usize,
    pub paper_misprints: usize,
    pub translator_misprints: usize,
}

#[derive(Debug, Clone)]
pub struct AuditReport {
    pub corpus_version: String,
    pub findings: Vec<AuditFinding>,
    pub summary: AuditSummary,
}

impl AuditReport {
    pub fn has_misprints(&self) -> bool {
        self.summary.paper_misprints > 0 || self.summary.translator_misprints > 0
    }

    pub fn finding(&self, location: &str) -> Option<&AuditFinding> {
        self.findings.iter().find(|f| f.location == location)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CompareMode {
    /// Whitespace is stripped; one unit in the last place counts as a
    /// convention ambiguity.
    Digits,
    /// Whitespace runs collapse to single spaces; exact match only.
    Literal,
}

struct Expected {
    canonical: String,
    /// (convention tag, value) pairs that classify as ambiguity on match.
    alternates: Vec<(&'static str, String)>,
    mode: CompareMode,
    /// Entries whose discrepancy is recorded without deciding intent.
    forced_ambiguity: bool,
}

impl Expected {
    fn digits(canonical: impl Into<String>) -> Self {
        Expected { canonical: canonical.into(), alternates: Vec::new(), mode: CompareMode::Digits, forced_ambiguity: false }
    }

    fn literal(canonical: impl Into<String>) -> Self {
        Expected { canonical: canonical.into(), alternates: Vec::new(), mode: CompareMode::Literal, forced_ambiguity: false }
    }

    fn with(mut self, tag: &'static str, value: impl Into<String>) -> Self {
        self.alternates.push((tag, value.into()));
        self
    }

    fn ambiguous(mut self) -> Self {
        self.forced_ambiguity = true;
        self
    }
}

/// Everything the registry computes once and reuses across entries.
struct AuditContext {
    chain: Chain,
    construction: ConstructionReport,
    bisection: BisectionReport,
    curious: CuriousRatio,
}

impl AuditContext {
    fn new() -> Self {
        Self {
            chain: generate_chain(4),
            construction: kochanski_construction(15),
            bisection: bisection_construction(9),
            curious: curious_ratio(),
        }
    }

    fn step(&self, i: usize) -> &crate::synthesis::BoundPair {
        &self.chain.steps[i]
    }

    fn named(&self, label: &str) -> &crate::construction::NamedLength {
        self.construction
            .named_lengths
            .iter()
            .find(|n| n.label == label)
            .expect("construction report carries all named lengths")
    }
}

fn strip_ws(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn collapse_ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn ulp_adjacent(a: &str, b: &str) -> bool {
    let (Ok(x), Ok(y)) = (a.parse::<BigInt>(), b.parse::<BigInt>()) else {
        return false;
    };
    (x - y).abs() == BigInt::from(1)
}

/// The computation registered for a corpus id. The expected value is
/// always produced by the library's own operations, never copied from the
/// printed source; a few alternates reference *other printed entries*
/// (e.g. the root of the printed sum), which is exactly the convention
/// they document.
fn expected_for(id: &str, ctx: &AuditContext, corpus: &Corpus) -> Option<Expected> {
    let chain_raw = |i: usize, minor: bool| -> &RawRatio {
        let step = ctx.step(i);
        if minor { &step.defective_raw } else { &step.excessive_raw }
    };
    let t2_row = |r: &BigRational, scale: u32| Expected::digits(decimal_expand(r, scale).digit_row());
    let t2_dev = |r: &BigRational, scale: u32| {
        let (_, canonical) = oracle::deviation_from_pi(r, scale);
        let alt = deviation_difference_of_rows(r, scale);
        let mut e = Expected::digits(canonical.digit_row());
        if alt.digit_row() != canonical.digit_row() {
            e = e.with("difference of truncated rows", alt.digit_row());
        }
        e
    };
    let printed_of = |other: &str| corpus.get(other).map(|e| e.printed.clone()).unwrap_or_default();

    let b_value = &ctx.chain.seeds[2].value;
    let bb_value = &ctx.chain.seeds[3].value;

    Some(match id {
        // table of ratios: seeds
        "t1.a.diam" => Expected::digits(ctx.chain.seeds[0].raw.diameter.to_string()),
        "t1.a.periph" => Expected::digits(ctx.chain.seeds[0].raw.periphery.to_string()),
        "t1.aa.diam" => Expected::digits(ctx.chain.seeds[1].raw.diameter.to_string()),
        "t1.aa.periph" => Expected::digits(ctx.chain.seeds[1].raw.periphery.to_string()),
        "t1.b.diam" => Expected::digits(ctx.chain.seeds[2].raw.diameter.to_string()),
        "t1.b.periph" => Expected::digits(ctx.chain.seeds[2].raw.periphery.to_string()),
        "t1.bb.diam" => Expected::digits(ctx.chain.seeds[3].raw.diameter.to_string()),
        "t1.bb.periph" => Expected::digits(ctx.chain.seeds[3].raw.periphery.to_string()),
        // originators and children, step by step
        "t1.z" => Expected::digits(ctx.step(0).originator_minor.to_string()),
        "t1.zz" => Expected::digits(ctx.step(0).originator_major.to_string()),
        "t1.c.diam" => Expected::digits(chain_raw(0, true).diameter.to_string()),
        "t1.c.periph" => Expected::digits(chain_raw(0, true).periphery.to_string()),
        "t1.cc.diam" => Expected::digits(chain_raw(0, false).diameter.to_string()),
        "t1.cc.periph" => Expected::digits(chain_raw(0, false).periphery.to_string()),
        "t1.y" => Expected::digits(ctx.step(1).originator_minor.to_string()),
        "t1.yy" => Expected::digits(ctx.step(1).originator_major.to_string()),
        "t1.d.diam" => Expected::digits(chain_raw(1, true).diameter.to_string()),
        "t1.d.periph" => Expected::digits(chain_raw(1, true).periphery.to_string()),
        "t1.dd.diam" => Expected::digits(chain_raw(1, false).diameter.to_string()),
        "t1.dd.periph" => Expected::digits(chain_raw(1, false).periphery.to_string()),
        "t1.x" => Expected::digits(ctx.step(2).originator_minor.to_string()),
        "t1.xx" => Expected::digits(ctx.step(2).originator_major.to_string()),
        "t1.e.diam" => Expected::digits(chain_raw(2, true).diameter.to_string()),
        "t1.e.periph" => Expected::digits(chain_raw(2, true).periphery.to_string()),
        "t1.ee.diam" => Expected::digits(chain_raw(2, false).diameter.to_string()),
        "t1.ee.periph" => Expected::digits(chain_raw(2, false).periphery.to_string()),
        "t1.v" => Expected::digits(ctx.step(3).originator_minor.to_string()),
        "t1.vv" => Expected::digits(ctx.step(3).originator_major.to_string()),
        "t1.f.diam" => Expected::digits(chain_raw(3, true).diameter.to_string()),
        "t1.f.periph" => Expected::digits(chain_raw(3, true).periphery.to_string()),
        "t1.ff.diam" => Expected::digits(chain_raw(3, false).diameter.to_string()),
        "t1.ff.periph" => Expected::digits(chain_raw(3, false).periphery.to_string()),

        // reduced forms
        "red.cc.diam" => {
            // Cc scaled down by 5 turns the diameter into a mixed number
            let diam = BigRational::new(chain_raw(0, false).diameter.clone(), 5.into());
            Expected::literal(mixed_string(&diam))
        }
        "red.cc.periph" => {
            let periph = BigRational::new(chain_raw(0, false).periphery.clone(), 5.into());
            Expected::literal(mixed_string(&periph))
        }
        "red.d.diam" => Expected::digits(reduced_form(chain_raw(1, true)).reduced.denom().to_string()),
        "red.d.periph" => Expected::digits(reduced_form(chain_raw(1, true)).reduced.numer().to_string()),
        "red.e.diam" => Expected::digits(reduced_form(chain_raw(2, false)).reduced.denom().to_string()),
        "red.e.periph" => Expected::digits(reduced_form(chain_raw(2, false)).reduced.numer().to_string()),
        "red.e.mark" => {
            let side = oracle::cmp_pi(&reduced_form(chain_raw(2, false)).reduced);
            let computed = match side {
                Side::Less => "defectiva",
                Side::Greater => "excessiva",
            };
            Expected::literal(computed).ambiguous()
        }

        // examination table
        "t2.diam" => Expected::digits(pow10(25).to_string()),
        "t2.archimedes" => Expected::digits(oracle::pi_digits(26)),
        "t2.b.periph" => t2_row(b_value, 10),
        "t2.b.defect" => t2_dev(b_value, 10),
        "t2.bb.periph" => t2_row(bb_value, 10),
        "t2.bb.excess" => t2_dev(bb_value, 10),
        "t2.c.periph" => t2_row(&ctx.step(0).defective, 15),
        "t2.c.defect" => t2_dev(&ctx.step(0).defective, 15),
        "t2.cc.periph" => t2_row(&ctx.step(0).excessive, 15),
        "t2.cc.excess" => t2_dev(&ctx.step(0).excessive, 15),
        "t2.d.periph" => t2_row(&ctx.step(1).defective, 20),
        "t2.d.defect" => t2_dev(&ctx.step(1).defective, 20),
        "t2.dd.periph" => t2_row(&ctx.step(1).excessive, 20),
        "t2.dd.excess" => t2_dev(&ctx.step(1).excessive, 20),
        "t2.e.periph" => t2_row(&ctx.step(2).defective, 20),
        "t2.e.defect" => t2_dev(&ctx.step(2).defective, 20),
        "t2.ee.periph" => t2_row(&ctx.step(2).excessive, 20),
        "t2.ee.excess" => t2_dev(&ctx.step(2).excessive, 20),
        "t2.f.periph" => t2_row(&ctx.step(3).defective, 25),
        "t2.f.defect" => t2_dev(&ctx.step(3).defective, 25),
        "t2.ff.periph" => t2_row(&ctx.step(3).excessive, 25),
        "t2.ff.excess" => t2_dev(&ctx.step(3).excessive, 25),

        "txt.c.fraction" => {
            let (_, dev) = oracle::deviation_from_pi(&ctx.step(0).defective, 5);
            Expected::literal(format!("{}/{}", dev.mantissa(), pow10(5)))
        }

        // the curious ratio
        "cur.base" => Expected::digits("991"),
        "cur.whole" => Expected::digits("3113"),
        "cur.frac" => Expected::literal("991/3113"),
        "cur.agree" => Expected::digits(ctx.curious.agreeing_digits.to_string()),
        "cur.excess.bound" => {
            // smallest k with excess < k * 10^-9
            let hi = ctx.curious.excess.hi().to_rational();
            let k: BigInt = oracle::rational_floor(&(hi * BigRational::from_integer(pow10(9)))) + 1;
            Expected::digits(k.to_string())
        }
        "tr.cur.den" => Expected::digits("3113"),
        "tr.cur.decimal" => Expected::literal(decimal_expand(&ctx.curious.value, 10).to_string())
            .with("rounded", crate::arith::decimal_expand_rounded(&ctx.curious.value, 10).to_string()),

        // compass construction
        "con.ab" => Expected::digits(ctx.named("AB").truncated.digit_row()),
        "con.tangent.deg" => Expected::digits("30"),
        "con.arc.ce" | "con.arc.cf" => Expected::digits("60"),
        "con.arc.be" | "con.arc.df" => Expected::digits("30"),
        "con.bi" => Expected::digits(ctx.named("BI").truncated.digit_row())
            .with("rounded rendering", ctx.named("BI").rounded.digit_row()),
        "con.ig" => Expected::digits(ctx.named("IG").truncated.digit_row())
            .with("rounded rendering", ctx.named("IG").rounded.digit_row()),
        "con.kl" => Expected::digits(ctx.named("KL").truncated.digit_row())
            .with("rounded rendering", ctx.named("KL").rounded.digit_row()),
        "con.sum" => Expected::digits(ctx.named("KLq + IKq").truncated.digit_row())
            .with("rounded rendering", ctx.named("KLq + IKq").rounded.digit_row()),
        "con.il" => {
            let mut e = Expected::digits(ctx.named("IL").truncated.digit_row())
                .with("rounded rendering", ctx.named("IL").rounded.digit_row());
            // the printed root is exactly the truncated root of the
            // printed sum; evaluate that route against the printed sum
            if let Ok(sum) = parse_grouped(&format!("9.{}", &strip_ws(&printed_of("con.sum"))[1..])) {
                if let Ok(root) = sum.sqrt(15) {
                    e = e.with("root of the printed sum", root.digit_row());
                }
            }
            e
        }
        "con.z" => {
            let canonical = ctx.construction.defect_z.lo().truncated_to(15);
            let rounded = ctx.construction.defect_z.lo().rounded_to(15);
            let mut e = Expected::digits(canonical.digit_row()).with("rounded rendering", rounded.digit_row());
            // difference of the printed rows: truncated pi minus printed IL
            if let Ok(il) = parse_grouped(&format!("3.{}", &strip_ws(&printed_of("con.il"))[1..])) {
                let diff = &oracle::pi_truncated(15) - &il;
                e = e.with("difference of printed rows", diff.digit_row());
            }
            e
        }
        "con.x" => Expected::digits(ctx.construction.reciprocal_x.to_string()),
        "con.year" => {
            let inv = ctx.construction.reciprocal_x.clone();
            Expected::digits((inv / BigInt::from(10)).to_string())
        }
        "con.tenfold" => {
            let year = ctx.construction.reciprocal_x.clone() / BigInt::from(10);
            Expected::digits((year * BigInt::from(10)).to_string())
        }
        "con.tenfold.next" => {
            let year = ctx.construction.reciprocal_x.clone() / BigInt::from(10);
            Expected::digits(((year + BigInt::from(1)) * BigInt::from(10)).to_string())
        }
        "tr.con.z" => Expected::literal(ctx.construction.defect_z.lo().truncated_to(13).to_string())
            .with("rounded rendering", ctx.construction.defect_z.lo().rounded_to(13).to_string()),

        // bisection construction
        "bis.parts" => {
            let den = ctx.bisection.ratio.denom().clone();
            Expected::digits(crate::arith::integer_sqrt_floor(&den).expect("1024 is a square").to_string())
        }
        "bis.periph.mixed" => {
            let in_parts = &ctx.bisection.ratio * BigRational::from_integer(32.into());
            Expected::literal(mixed_string(&in_parts))
        }
        "bis.ratio.diam" => Expected::digits(ctx.bisection.ratio.denom().to_string()),
        "bis.ratio.periph" => Expected::digits(ctx.bisection.ratio.numer().to_string()),
        "bis.triple" => {
            let triple = &ctx.bisection.decomposition[0] * BigRational::from_integer(32.into());
            Expected::digits(triple.to_integer().to_string())
        }
        "bis.fourth" => {
            let parts = (&ctx.bisection.decomposition[1] * BigRational::from_integer(32.into())).to_integer();
            Expected::literal(format!("{parts}/32"))
        }
        "bis.eightone" => {
            let term = &ctx.bisection.decomposition[1];
            Expected::literal(format!("{}/{}", term.numer(), term.denom()))
        }
        "bis.sixteenth" => {
            let factor = &ctx.bisection.decomposition[2] / &ctx.bisection.decomposition[3];
            Expected::digits(factor.to_integer().to_string())
        }
        "bis.p" => Expected::digits(decimal_expand(&ctx.bisection.ratio, 8).digit_row()),
        "bis.q" => {
            let canonical = ctx.bisection.excess_q.lo().truncated_to(8);
            let rounded = ctx.bisection.excess_q.lo().rounded_to(8);
            let mut e = Expected::digits(canonical.digit_row()).with("rounded rendering", rounded.digit_row());
            if let Ok(p) = parse_grouped(&format!("3.{}", &strip_ws(&printed_of("bis.p"))[1..])) {
                let diff = &p - &oracle::pi_truncated(8);
                e = e.with("difference of printed rows", diff.digit_row());
            }
            e
        }
        "tr.bis.decimal" => Expected::literal(decimal_expand(&ctx.bisection.ratio, 10).to_string()),

        _ => return None,
    })
}

fn classify(id: &str, printed: &str, expected: &Expected) -> (Classification, String) {
    let normalize = |s: &str| match expected.mode {
        CompareMode::Digits => strip_ws(s),
        CompareMode::Literal => collapse_ws(s),
    };
    let printed_n = normalize(printed);
    let canonical_n = normalize(&expected.canonical);

    if expected.forced_ambiguity {
        return (
            Classification::ConventionAmbiguity,
            format!("printed {:?} against computed {:?}", printed, expected.canonical),
        );
    }
    if printed_n == canonical_n {
        let mut note = String::from("matches the canonical computation");
        for (tag, alt) in &expected.alternates {
            if normalize(alt) != canonical_n {
                note.push_str(&format!("; {tag} gives {alt}"));
            }
        }
        return (Classification::Confirmed, note);
    }
    for (tag, alt) in &expected.alternates {
        if normalize(alt) == printed_n {
            return (
                Classification::ConventionAmbiguity,
                format!("matches the {tag}; canonical computation gives {}", expected.canonical),
            );
        }
    }
    if expected.mode == CompareMode::Digits && ulp_adjacent(&printed_n, &canonical_n) {
        return (
            Classification::ConventionAmbiguity,
            format!("one unit in the last place from the computed {}", expected.canonical),
        );
    }
    let class = if id.starts_with("tr.") {
        Classification::TranslatorMisprint
    } else {
        Classification::PaperMisprint
    };
    (class, format!("computed value is {}", expected.canonical))
}

/// Audits every corpus entry against independent computation. Findings
/// come back in corpus order and the whole run is deterministic.
pub fn audit_corpus_with(corpus: &Corpus) -> Result<AuditReport, ExamenError> {
    let ctx = AuditContext::new();
    let mut findings = Vec::with_capacity(corpus.len());
    let mut summary = AuditSummary::default();
    for entry in &corpus.entries {
        let expected = expected_for(&entry.id, &ctx, corpus)
            .ok_or_else(|| ExamenError::UnknownEntry { id: entry.id.clone() })?;
        let (classification, auto_note) = classify(&entry.id, &entry.printed, &expected);
        summary.total += 1;
        match classification {
            Classification::Confirmed => summary.confirmed += 1,
            Classification::ConventionAmbiguity => summary.convention_ambiguities += 1,
            Classification::PaperMisprint => summary.paper_misprints += 1,
            Classification::TranslatorMisprint => summary.translator_misprints += 1,
        }
        let note = if entry.note.is_empty() {
            auto_note
        } else {
            format!("{}; {}", entry.note, auto_note)
        };
        findings.push(AuditFinding {
            location: entry.id.clone(),
            printed: entry.printed.clone(),
            computed: expected.canonical,
            classification,
            note,
        });
    }
    Ok(AuditReport { corpus_version: corpus.version.clone(), findings, summary })
}

/// Audits the built-in corpus.
pub fn audit_corpus() -> Result<AuditReport, ExamenError> {
    audit_corpus_with(crate::corpus::builtin())
}
