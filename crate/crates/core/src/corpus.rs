//! The audited corpus: every printed constant of the source tables as a
//! line-oriented data file, `id | printed | note` per record, digits kept
//! with their original spacing. The audit is driven by this file rather
//! than by values buried in test code, so coverage is visible in one place.

use std::sync::OnceLock;

use thiserror::Error;

use crate::oracle::Side;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CorpusError {
    #[error("corpus line {line}: expected `id | printed | note`, found {found} field(s)")]
    FieldCount { line: usize, found: usize },
    #[error("corpus line {line}: empty {field} field")]
    EmptyField { line: usize, field: &'static str },
    #[error("corpus line {line}: duplicate id {id:?}")]
    DuplicateId { line: usize, id: String },
    #[error("corpus has no version header")]
    MissingVersion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: String,
    /// Digits exactly as printed, original spacing preserved.
    pub printed: String,
    pub note: String,
    pub line: usize,
}

impl CorpusEntry {
    /// Defective/excessive mark recorded in the note, if any.
    pub fn mark(&self) -> Option<Side> {
        for token in self.note.split([';', ' ']) {
            match token.trim().trim_end_matches(['.', ',']) {
                "mark=defective" | "mark=defect" => return Some(Side::Less),
                "mark=excessive" | "mark=excess" => return Some(Side::Greater),
                _ => {}
            }
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub version: String,
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn get(&self, id: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Parses corpus text. Blank lines and `#` comments are skipped; the first
/// non-comment line must be a `version:` header.
pub fn parse(text: &str) -> Result<Corpus, CorpusError> {
    let mut version = None;
    let mut entries: Vec<CorpusEntry> = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if version.is_none() {
            if let Some(v) = trimmed.strip_prefix("version:") {
                version = Some(v.trim().to_string());
                continue;
            }
            return Err(CorpusError::MissingVersion);
        }
        let fields: Vec<&str> = trimmed.split('|').collect();
        if fields.len() != 3 {
            return Err(CorpusError::FieldCount { line, found: fields.len() });
        }
        let id = fields[0].trim().to_string();
        let printed = fields[1].trim().to_string();
        let note = fields[2].trim().to_string();
        if id.is_empty() {
            return Err(CorpusError::EmptyField { line, field: "id" });
        }
        if printed.is_empty() {
            return Err(CorpusError::EmptyField { line, field: "printed" });
        }
        if entries.iter().any(|e| e.id == id) {
            return Err(CorpusError::DuplicateId { line, id });
        }
        entries.push(CorpusEntry { id, printed, note, line });
    }
    Ok(Corpus { version: version.ok_or(CorpusError::MissingVersion)?, entries })
}

const BUILTIN_TEXT: &str = include_str!("../data/corpus.txt");

/// The corpus shipped with the crate.
pub fn builtin() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| parse(BUILTIN_TEXT).expect("builtin corpus is well-formed"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses_and_has_known_entries() {
        let corpus = builtin();
        assert_eq!(corpus.version, "1");
        assert!(corpus.len() >= 90, "corpus holds the full table set, got {}", corpus.len());
        assert_eq!(corpus.get("t1.x").unwrap().printed, "5448");
        assert_eq!(corpus.get("t2.archimedes").unwrap().printed, "314159 26535 89793 23846 26433");
        assert_eq!(corpus.get("con.il").unwrap().printed, "3 14153 33387 05093");
        assert!(corpus.get("no.such.id").is_none());
    }

    #[test]
    fn marks_parse() {
        let corpus = builtin();
        assert_eq!(corpus.get("t1.b.periph").unwrap().mark(), Some(Side::Less));
        assert_eq!(corpus.get("t1.ff.periph").unwrap().mark(), Some(Side::Greater));
        assert_eq!(corpus.get("t2.d.defect").unwrap().mark(), Some(Side::Less));
        assert_eq!(corpus.get("t2.dd.excess").unwrap().mark(), Some(Side::Greater));
        assert_eq!(corpus.get("con.x").unwrap().mark(), None);
    }

    #[test]
    fn parse_errors_carry_line_and_field() {
        assert_eq!(parse("a | b | c"), Err(CorpusError::MissingVersion));
        assert_eq!(
            parse("version: 1\nonly two | fields"),
            Err(CorpusError::FieldCount { line: 2, found: 2 })
        );
        assert_eq!(
            parse("version: 1\n | x | y"),
            Err(CorpusError::EmptyField { line: 2, field: "id" })
        );
        assert_eq!(
            parse("version: 1\na | 1 | n\na | 2 | n"),
            Err(CorpusError::DuplicateId { line: 3, id: "a".into() })
        );
    }
}
