//! Text and table renderings of report envelopes. Both are deterministic;
//! the table mode prefers fixed-width columns, the text mode a narrative
//! layout close to the source tables.

use std::fmt::Write as _;

use crate::report::{Body, ReportEnvelope};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Records,
    Table,
}

pub fn emit(envelope: &ReportEnvelope, format: Format) -> String {
    match format {
        Format::Records => {
            let mut s = serde_json::to_string_pretty(envelope).expect("envelope serializes");
            s.push('\n');
            s
        }
        Format::Text => render(envelope, false),
        Format::Table => render(envelope, true),
    }
}

fn render(envelope: &ReportEnvelope, table: bool) -> String {
    match &envelope.body {
        Body::Pi(b) => {
            if table {
                format!("{}\n", b.grouped)
            } else {
                format!("{}\n", b.value)
            }
        }
        Body::Chain(b) => {
            let mut out = String::new();
            let _ = writeln!(out, "Rationes arithmeticae (diameter ad peripheriam), depth {}", b.depth);
            let _ = writeln!(out);
            for seed in &b.seeds {
                let _ = writeln!(out, "{:<4} {:>22} ad {:<22} {}", seed.label, seed.diameter, seed.periphery, seed.side);
            }
            for step in &b.steps {
                let _ = writeln!(
                    out,
                    "{:<4} {:>22}    {:<22} genitores",
                    format!("{}|{}", step.originator_label_minor, step.originator_label_major),
                    step.originator_minor,
                    step.originator_major,
                );
                let _ = writeln!(
                    out,
                    "{:<4} {:>22} ad {:<22} defectiva",
                    step.label_minor, step.defective_diameter, step.defective_periphery
                );
                let _ = writeln!(
                    out,
                    "{:<4} {:>22} ad {:<22} excessiva",
                    step.label_major, step.excessive_diameter, step.excessive_periphery
                );
            }
            let _ = writeln!(out, "\nMinoribus terminis");
            for red in &b.reduced_forms {
                let _ = writeln!(
                    out,
                    "{:<4} {:>22} ad {:<22} {} (factor {})",
                    red.label, red.diameter, red.periphery, red.side, red.factor
                );
            }
            let _ = writeln!(out, "\nRatio curiosa");
            let _ = writeln!(out, "991 ad 3113 991/3113 = {}", b.curious.value);
            let _ = writeln!(
                out,
                "agrees with the reference periphery in the first {} digits; excess in [{}, {}]",
                b.curious.agreeing_digits, b.curious.excess_low, b.curious.excess_high
            );
            out
        }
        Body::Examen(b) => {
            if table {
                b.table.clone()
            } else {
                let mut out = b.table.clone();
                let _ = writeln!(out, "\nrows at scales: {}", {
                    let scales: Vec<String> = b.rows.iter().map(|r| format!("{} {}", r.label, r.scale)).collect();
                    scales.join(", ")
                });
                out
            }
        }
        Body::Audit(b) => {
            let mut out = String::new();
            let _ = writeln!(out, "corpus version {}, {} entries", envelope.corpus_version, b.summary.total);
            for f in &b.findings {
                if table {
                    let _ = writeln!(
                        out,
                        "{:<20} {:<22} {:<40} {:<34}",
                        f.classification, f.location, f.printed, f.computed
                    );
                } else {
                    let _ = writeln!(out, "{:<22} {:<20} printed {}", f.location, f.classification, f.printed);
                    if f.classification != "confirmed" {
                        let _ = writeln!(out, "{:<22} {:<20} computed {} ({})", "", "", f.computed, f.note);
                    }
                }
            }
            let s = &b.summary;
            let _ = writeln!(
                out,
                "summary: {} confirmed, {} convention-ambiguity, {} paper-misprint, {} translator-misprint",
                s.confirmed, s.convention_ambiguities, s.paper_misprints, s.translator_misprints
            );
            out
        }
        Body::Kochanski(b) => {
            let mut out = String::new();
            let _ = writeln!(out, "Compass construction for the semicircle (unit radius), scale {}", b.scale);
            let _ = writeln!(out);
            for l in &b.lengths {
                if l.truncated == l.rounded {
                    let _ = writeln!(out, "{:<10} {}", l.label, l.truncated);
                } else {
                    let _ = writeln!(out, "{:<10} {}   (rounded {})", l.label, l.truncated, l.rounded);
                }
            }
            let _ = writeln!(out, "\nclosed form: IL = {}", b.closed_form);
            let _ = writeln!(out, "IL in [{}, {}]", b.il_low, b.il_high);
            let _ = writeln!(out, "Z = pi - IL in [{}, {}]", b.defect_z_low, b.defect_z_high);
            let _ = writeln!(out, "X = floor(1/Z) = {}", b.reciprocal_x);
            let y = &b.year_check;
            let _ = writeln!(
                out,
                "year check {}: {} ({} < 1/Z < {})",
                y.year,
                if y.holds { "PASS" } else { "FAIL" },
                y.ten_times_year,
                y.ten_times_next
            );
            let _ = writeln!(out, "\npoints:");
            for p in &b.points {
                let _ = writeln!(out, "{:<3} x = {:<22} = {:<14}  y = {:<22} = {}", p.label, p.x, p.x_decimal, p.y, p.y_decimal);
            }
            out
        }
        Body::Bisection(b) => {
            let mut out = String::new();
            let _ = writeln!(out, "Bisection construction, scale {}", b.scale);
            let _ = writeln!(out, "ratio: {}", b.ratio);
            let _ = writeln!(out, "P = {}", b.periphery);
            let _ = writeln!(out, "decomposition: {} = {}", b.decomposition.join(" + "), b.ratio);
            let _ = writeln!(out, "Q = ratio - pi in [{}, {}]", b.excess_q_low, b.excess_q_high);
            let _ = writeln!(out, "Q < Z: {}", if b.q_below_z { "PASS" } else { "FAIL" });
            let _ = writeln!(out, "note: {}", b.note);
            out
        }
        Body::Cf(b) => {
            let mut out = String::new();
            let _ = writeln!(out, "terms: {}", b.terms.join(" "));
            let _ = writeln!(out, "convergents: {}", b.convergents.join(" "));
            for c in &b.classifications {
                let _ = writeln!(out, "{:<22} {}", c.value, c.class);
            }
            out
        }
    }
}
