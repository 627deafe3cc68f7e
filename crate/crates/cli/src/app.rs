//! Clap definitions and command dispatch.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cyclometria::arith::{decimal_expand, format_grouped, mixed_string, BigInt, BigRational, FixedDecimal};
use cyclometria::cf::{classify_bound, pi_continued_fraction, BoundClass};
use cyclometria::construction::{bisection_construction, kochanski_construction, year_bound_check};
use cyclometria::examen::{audit_corpus_with, render_examen};
use cyclometria::oracle::{pi_digits, Side};
use cyclometria::synthesis::{generate_chain, reduced_form};

use crate::render::{self, Format};
use crate::report::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Records,
    Table,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Records => Format::Records,
            FormatArg::Table => Format::Table,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "cyclometria", version, about = "Exact reproduction and audit of the 1685 cyclometric tables")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: FormatArg,

    /// Suppress timestamps so identical inputs give byte-identical output
    #[arg(long, global = true)]
    deterministic: bool,

    /// Corpus file overriding the built-in corpus
    #[arg(long, global = true, env = "CYCLOMETRIA_CORPUS", value_name = "PATH")]
    corpus: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decimal digits of pi, truncated
    Pi {
        /// Fraction digits to print
        #[arg(long, default_value_t = 32)]
        digits: u32,
    },
    /// Regenerate the chain of defective/excessive bounds
    Chain {
        /// Refinement steps beyond the seeds
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Reproduce the examination table at diameter 10^scale
    Examen {
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, default_value_t = 25)]
        scale: u32,
    },
    /// Audit every printed corpus value against recomputation
    Audit {
        /// Exit with status 2 if any misprint is found
        #[arg(long)]
        strict: bool,
    },
    /// Evaluate a geometric construction
    Construct {
        #[command(subcommand)]
        which: ConstructCommand,
    },
    /// Continued fraction of pi and bound classification
    Cf {
        /// Number of terms to extract
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
}

#[derive(Debug, Subcommand)]
enum ConstructCommand {
    /// The compass construction approximating the semicircle
    Kochanski {
        /// Year to test against the defect bound
        #[arg(long, default_value_t = 1685)]
        year: u32,
        /// Digits in the printed lengths
        #[arg(long, default_value_t = 15)]
        scale: u32,
    },
    /// The diameter-bisection construction (ratio 3217/1024)
    Bisection {
        #[arg(long, default_value_t = 9)]
        scale: u32,
    },
}

pub fn main_entry() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn load_corpus(path: &Option<PathBuf>) -> Result<std::borrow::Cow<'static, cyclometria::corpus::Corpus>, String> {
    match path {
        None => Ok(std::borrow::Cow::Borrowed(cyclometria::corpus::builtin())),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("cannot read corpus {}: {e}", p.display()))?;
            let corpus = cyclometria::corpus::parse(&text).map_err(|e| e.to_string())?;
            Ok(std::borrow::Cow::Owned(corpus))
        }
    }
}

pub fn run(cli: Cli) -> Result<ExitCode, String> {
    let format: Format = cli.format.into();
    let corpus = load_corpus(&cli.corpus)?;
    let mut exit = ExitCode::SUCCESS;

    let envelope = match &cli.command {
        Command::Pi { digits } => {
            let digit_string = pi_digits(digits + 1);
            let fixed = FixedDecimal::new(digit_string.parse::<BigInt>().unwrap(), *digits);
            ReportEnvelope::new(
                "pi",
                Body::Pi(PiBody {
                    digits: *digits,
                    value: fixed.to_string(),
                    grouped: format_grouped(&fixed, 5),
                }),
            )
            .parameter("digits", digits)
        }
        Command::Chain { depth } => ReportEnvelope::new("chain", Body::Chain(chain_body(*depth)))
            .parameter("depth", depth),
        Command::Examen { depth, scale } => {
            let chain = generate_chain(*depth);
            let table = render_examen(&chain, *scale).map_err(|e| e.to_string())?;
            let rows = cyclometria::examen::examen_rows(&chain)
                .into_iter()
                .map(|r| ExamenRowDto {
                    label: r.label.clone(),
                    periphery: r.periphery.to_string(),
                    kind: match r.kind {
                        Some(cyclometria::examen::DeviationKind::Defect) => "defect".into(),
                        Some(cyclometria::examen::DeviationKind::Excess) => "excess".into(),
                        None => "reference".into(),
                    },
                    deviation: r.deviation.to_string(),
                    scale: r.scale,
                })
                .collect();
            ReportEnvelope::new("examen", Body::Examen(ExamenBody { depth: *depth, scale: *scale, rows, table }))
                .parameter("depth", depth)
                .parameter("scale", scale)
        }
        Command::Audit { strict } => {
            let report = audit_corpus_with(&corpus).map_err(|e| e.to_string())?;
            if *strict && report.has_misprints() {
                exit = ExitCode::from(2);
            }
            let findings = report
                .findings
                .iter()
                .map(|f| FindingDto {
                    location: f.location.clone(),
                    printed: f.printed.clone(),
                    computed: f.computed.clone(),
                    classification: f.classification.label().to_string(),
                    note: f.note.clone(),
                })
                .collect();
            let s = report.summary;
            let mut envelope = ReportEnvelope::new(
                "audit",
                Body::Audit(AuditBody {
                    findings,
                    summary: AuditSummaryDto {
                        total: s.total,
                        confirmed: s.confirmed,
                        convention_ambiguities: s.convention_ambiguities,
                        paper_misprints: s.paper_misprints,
                        translator_misprints: s.translator_misprints,
                    },
                }),
            )
            .parameter("strict", strict);
            envelope.corpus_version = report.corpus_version.clone();
            envelope
        }
        Command::Construct { which } => match which {
            ConstructCommand::Kochanski { year, scale } => {
                ReportEnvelope::new("construct kochanski", Body::Kochanski(kochanski_body(*year, *scale)))
                    .parameter("year", year)
                    .parameter("scale", scale)
            }
            ConstructCommand::Bisection { scale } => {
                let b = bisection_construction(*scale);
                ReportEnvelope::new(
                    "construct bisection",
                    Body::Bisection(BisectionBody {
                        scale: *scale,
                        ratio: rational_string(&b.ratio),
                        periphery: decimal_expand(&b.ratio, *scale).to_string(),
                        decomposition: b.decomposition.iter().map(rational_string).collect(),
                        excess_q_low: b.excess_q.lo().to_string(),
                        excess_q_high: b.excess_q.hi().to_string(),
                        q_below_z: b.comparison_to_z,
                        note: "the printed 8/1 of the whole diameter reads 1/8".to_string(),
                    }),
                )
                .parameter("scale", scale)
            }
        },
        Command::Cf { terms } => {
            let cf = pi_continued_fraction(*terms).map_err(|e| e.to_string())?;
            let classify = |r: BigRational| {
                let class = match classify_bound(&r, &cf) {
                    Ok(BoundClass::Convergent) => "convergent",
                    Ok(BoundClass::Semiconvergent) => "semiconvergent",
                    Ok(BoundClass::Other) => "other",
                    Err(_) => "expansion too short",
                };
                CfClassificationDto { value: rational_string(&r), class: class.to_string() }
            };
            let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
            ReportEnvelope::new(
                "cf",
                Body::Cf(CfBody {
                    terms: cf.terms.iter().map(|t| t.to_string()).collect(),
                    convergents: cf.convergents.iter().map(rational_string).collect(),
                    classifications: vec![
                        classify(r(333, 106)),
                        classify(r(355, 113)),
                        classify(r(1667438, 530762)),
                        classify(r(25, 8)),
                    ],
                }),
            )
            .parameter("terms", terms)
        }
    };

    let envelope = envelope.stamped(cli.deterministic);
    print!("{}", render::emit(&envelope, format));
    Ok(exit)
}

fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn side_string(side: Side) -> String {
    match side {
        Side::Less => "defectiva".to_string(),
        Side::Greater => "excessiva".to_string(),
    }
}

fn chain_body(depth: usize) -> ChainBody {
    let chain = generate_chain(depth);
    let seeds = chain
        .seeds
        .iter()
        .map(|s| SeedDto {
            label: s.label.clone(),
            diameter: s.raw.diameter.to_string(),
            periphery: s.raw.periphery.to_string(),
            side: side_string(s.side),
        })
        .collect();
    let steps = chain
        .steps
        .iter()
        .map(|s| StepDto {
            label_minor: s.label_minor.clone(),
            label_major: s.label_major.clone(),
            originator_label_minor: s.originator_label_minor.clone(),
            originator_label_major: s.originator_label_major.clone(),
            originator_minor: s.originator_minor.to_string(),
            originator_major: s.originator_major.to_string(),
            parent: rational_string(&s.parent),
            defective_diameter: s.defective_raw.diameter.to_string(),
            defective_periphery: s.defective_raw.periphery.to_string(),
            excessive_diameter: s.excessive_raw.diameter.to_string(),
            excessive_periphery: s.excessive_raw.periphery.to_string(),
        })
        .collect();

    // the reduced forms the source prints: cc (Cc over 5, mixed), d, e
    let mut reduced_forms = Vec::new();
    if let Some(step0) = chain.steps.first() {
        let cc = &step0.excessive_raw;
        let diam = BigRational::new(cc.diameter.clone(), 5.into());
        let periph = BigRational::new(cc.periphery.clone(), 5.into());
        reduced_forms.push(ReducedDto {
            label: "cc".into(),
            diameter: mixed_string(&diam),
            periphery: mixed_string(&periph),
            factor: "5".into(),
            side: "excessiva".into(),
        });
    }
    if let Some(step1) = chain.steps.get(1) {
        let d = reduced_form(&step1.defective_raw);
        reduced_forms.push(ReducedDto {
            label: "d".into(),
            diameter: d.reduced.denom().to_string(),
            periphery: d.reduced.numer().to_string(),
            factor: d.factor.to_string(),
            side: "defectiva".into(),
        });
    }
    if let Some(step2) = chain.steps.get(2) {
        let e = reduced_form(&step2.excessive_raw);
        reduced_forms.push(ReducedDto {
            label: "e".into(),
            diameter: e.reduced.denom().to_string(),
            periphery: e.reduced.numer().to_string(),
            factor: e.factor.to_string(),
            side: "excessiva".into(),
        });
    }

    let curious = cyclometria::synthesis::curious_ratio();
    ChainBody {
        depth,
        seeds,
        steps,
        reduced_forms,
        curious: CuriousDto {
            value: rational_string(&curious.value),
            agreeing_digits: curious.agreeing_digits,
            excess_low: curious.excess.lo().to_string(),
            excess_high: curious.excess.hi().to_string(),
        },
    }
}

fn kochanski_body(year: u32, scale: u32) -> KochanskiBody {
    let report = kochanski_construction(scale);
    let lengths = report
        .named_lengths
        .iter()
        .map(|l| LengthDto {
            label: l.label.clone(),
            truncated: l.truncated.to_string(),
            rounded: l.rounded.to_string(),
        })
        .collect();
    let points = report
        .points
        .iter()
        .map(|(label, p)| PointDto {
            label: label.clone(),
            x: p.x.to_string(),
            y: p.y.to_string(),
            x_decimal: p.x.enclosure(10).lo().truncated_to(8).to_string(),
            y_decimal: p.y.enclosure(10).lo().truncated_to(8).to_string(),
        })
        .collect();
    let year_report = year_bound_check(year);
    KochanskiBody {
        scale,
        lengths,
        closed_form: report.closed_form.clone(),
        il_low: report.il.lo().to_string(),
        il_high: report.il.hi().to_string(),
        defect_z_low: report.defect_z.lo().truncated_to(scale + 5).to_string(),
        defect_z_high: report.defect_z.hi().rounded_to(scale + 5).to_string(),
        reciprocal_x: report.reciprocal_x.to_string(),
        year_check: YearDto {
            year,
            holds: year_report.holds,
            ten_times_year: (10 * u64::from(year)).to_string(),
            ten_times_next: (10 * (u64::from(year) + 1)).to_string(),
        },
        points,
    }
}

/// Which subcommand exercises each library operation; the coverage test
/// checks every subcommand appears and the operation list stays complete.
pub const OPERATION_COVERAGE: &[(&str, &str)] = &[
    ("make_rational", "chain"),
    ("decimal_expand", "examen"),
    ("integer_sqrt_floor", "construct kochanski"),
    ("fd_sqrt", "construct kochanski"),
    ("format_grouped", "pi"),
    ("parse_grouped", "audit"),
    ("pi_enclosure", "pi"),
    ("cmp_pi", "chain"),
    ("cmp_enclosure_pi", "construct kochanski"),
    ("pi_digits", "pi"),
    ("originator", "chain"),
    ("refine", "chain"),
    ("generate_chain", "chain"),
    ("reduced_form", "chain"),
    ("curious_ratio", "chain"),
    ("examine", "examen"),
    ("render_examen", "examen"),
    ("audit_corpus", "audit"),
    ("kochanski_construction", "construct kochanski"),
    ("construction_coordinates", "construct kochanski"),
    ("year_bound_check", "construct kochanski"),
    ("bisection_construction", "construct bisection"),
    ("pi_continued_fraction", "cf"),
    ("classify_bound", "cf"),
    ("run", "cyclometria"),
    ("emit", "cyclometria"),
];
