//! Knot identification by Jones polynomial lookup.
//!
//! The built-in table is seeded by computing every polynomial in-process
//! from the twist vectors that realize the knots, so no transcribed
//! polynomial is trusted. Jones is not a complete invariant; a hit means
//! "consistent with", and a miss is reported honestly as unidentified.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde_json::json;
use thiserror::Error;

use crate::jones::jones_closed;
use crate::laurent::LaurentPoly;
use crate::twist::TwistVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotTableError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("conflicting knot table entry: {details}")]
    ConflictingName { details: String },
    #[error("failed to read knot table: {0}")]
    Io(String),
}

/// One identification table entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    /// Alexander–Briggs name, e.g. `3_1`; mirror images carry a `*`.
    pub name: String,
    pub jones: LaurentPoly,
    /// A twist vector realizing this knot as a belt boundary, when known.
    pub source_twist: Option<TwistVector>,
}

/// Lookup table keyed by the canonical Jones serialization.
#[derive(Debug, Clone, Default)]
pub struct KnotTable {
    records: Vec<KnotRecord>,
    by_jones: BTreeMap<String, usize>,
}

/// Toggles the mirror marker: `3_1` ↔ `3_1*`.
pub fn mirror_name(name: &str) -> String {
    match name.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{name}*"),
    }
}

impl KnotTable {
    pub fn empty() -> Self {
        KnotTable::default()
    }

    /// The built-in table.
    ///
    /// Every polynomial is computed from its source twist vector; mirror
    /// entries are derived by t ↦ 1/t. The figure-eight knot 4_1 equals its
    /// own mirror, so it gets no starred twin.
    pub fn seeded() -> Self {
        let mut table = KnotTable::empty();
        table
            .insert(KnotRecord {
                name: "unknot".into(),
                jones: LaurentPoly::one(),
                source_twist: Some("3/2 1/2 -1/2".parse().unwrap()),
            })
            .unwrap();

        let seeds = [
            ("3_1", "1/2 1/2 1/2", true),
            ("9_46", "3/2 3/2 -3/2", true),
            ("6_1", "3/2 1/2 -3/2", true),
            ("4_1", "3/2 -1/2 -1/2", false),
        ];
        for (name, twist, chiral) in seeds {
            let t: TwistVector = twist.parse().unwrap();
            let jones = jones_closed(t).expect("seed twist vectors are all half-odd");
            if !chiral {
                assert_eq!(
                    jones,
                    jones.substitute_inverse(),
                    "amphichiral seed must equal its mirror"
                );
            }
            table
                .insert(KnotRecord {
                    name: name.into(),
                    jones: jones.clone(),
                    source_twist: Some(t),
                })
                .unwrap();
            if chiral {
                table
                    .insert(KnotRecord {
                        name: mirror_name(name),
                        jones: jones.substitute_inverse(),
                        source_twist: Some(-t),
                    })
                    .unwrap();
            }
        }
        table
    }

    pub fn records(&self) -> &[KnotRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Adds a record. Re-adding an identical (name, polynomial) pair is a
    /// no-op; a polynomial already filed under a different name, or a name
    /// already filed with a different polynomial, is a conflict.
    pub fn insert(&mut self, record: KnotRecord) -> Result<(), KnotTableError> {
        let key = record.jones.to_compact();
        if let Some(&idx) = self.by_jones.get(&key) {
            let existing = &self.records[idx];
            if existing.name == record.name {
                return Ok(());
            }
            return Err(KnotTableError::ConflictingName {
                details: format!(
                    "polynomial {} already filed as `{}`, refusing `{}`",
                    record.jones, existing.name, record.name
                ),
            });
        }
        if let Some(existing) = self.records.iter().find(|r| r.name == record.name) {
            return Err(KnotTableError::ConflictingName {
                details: format!(
                    "name `{}` already filed with polynomial {}, refusing {}",
                    record.name, existing.jones, record.jones
                ),
            });
        }
        self.by_jones.insert(key, self.records.len());
        self.records.push(record);
        Ok(())
    }

    /// Exact-match lookup; on a miss the mirror polynomial is tried and the
    /// starred name returned. Never guesses: `None` means unidentified.
    pub fn identify(&self, p: &LaurentPoly) -> Option<String> {
        if let Some(&idx) = self.by_jones.get(&p.to_compact()) {
            return Some(self.records[idx].name.clone());
        }
        let mirror_key = p.substitute_inverse().to_compact();
        self.by_jones
            .get(&mirror_key)
            .map(|&idx| mirror_name(&self.records[idx].name))
    }

    /// Merges CSV rows `name,exp:coef;exp:coef;...` (exponents in units of
    /// t^(1/2)). Blank lines and `#` comments are skipped. Returns the
    /// number of rows merged.
    pub fn merge_csv_str(&mut self, text: &str) -> Result<usize, KnotTableError> {
        let mut merged = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (name, poly) = line.split_once(',').ok_or(KnotTableError::Parse {
                line: i + 1,
                message: "expected `name,exp:coef;...`".into(),
            })?;
            let name = name.trim();
            if name.is_empty() {
                return Err(KnotTableError::Parse {
                    line: i + 1,
                    message: "empty knot name".into(),
                });
            }
            let jones = LaurentPoly::from_compact(poly).map_err(|e| KnotTableError::Parse {
                line: i + 1,
                message: e.to_string(),
            })?;
            self.insert(KnotRecord {
                name: name.to_string(),
                jones,
                source_twist: None,
            })?;
            merged += 1;
        }
        Ok(merged)
    }

    pub fn merge_csv_file(&mut self, path: &Path) -> Result<usize, KnotTableError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| KnotTableError::Io(format!("{}: {e}", path.display())))?;
        self.merge_csv_str(&text)
    }

    /// Full table as JSON, in insertion order.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "records": self
                .records
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "jones": r.jones,
                        "jones_text": r.jones.to_string(),
                        "source_twist": r.source_twist.map(|t| t.to_string()),
                    })
                })
                .collect::<Vec<_>>(),
        })
    }

    /// Table in the CSV exchange format accepted by [`merge_csv_str`].
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let _ = writeln!(out, "{},{}", r.name, r.jones.to_compact());
        }
        out
    }
}
