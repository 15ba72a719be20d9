//! Enumeration census of knotted belt boundaries.
//!
//! Two modes: enumerate every word of a fixed odd length and collect the
//! twist classes reached, or enumerate every half-odd twist class under a
//! sum bound directly. Classes are deduplicated by the descending-sorted
//! representative (the Jones polynomial is symmetric in the entries), rows
//! are sorted by (sum, class) descending, and identical invocations produce
//! byte-identical output.

use std::collections::BTreeMap;
use std::fmt;

use belts::braid::{BraidWord, Generator};
use belts::canonical::braid_only_word;
use belts::halfint::HalfInt;
use belts::jones::{boundary_components, jones_closed, JonesError};
use belts::knot::KnotTable;
use belts::laurent::LaurentPoly;
use belts::twist::TwistVector;

#[derive(Debug)]
pub enum CensusError {
    EvenLength(usize),
    Jones(JonesError),
}

impl fmt::Display for CensusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusError::EvenLength(n) => write!(
                f,
                "word length {n} is even; a knot census needs an odd length"
            ),
            CensusError::Jones(e) => write!(f, "{e}"),
        }
    }
}

impl From<JonesError> for CensusError {
    fn from(e: JonesError) -> Self {
        CensusError::Jones(e)
    }
}

/// One census row: a twist class with its boundary-knot data.
#[derive(Debug, Clone)]
pub struct CensusRow {
    pub class: TwistVector,
    pub sum: HalfInt,
    pub components: u8,
    pub jones: LaurentPoly,
    pub knot: Option<String>,
    pub example_word: BraidWord,
    pub no_charge_mixing: bool,
}

fn build_row(
    class: TwistVector,
    example_word: BraidWord,
    table: &KnotTable,
) -> Result<CensusRow, CensusError> {
    let jones = jones_closed(class)?;
    let entries = class.entries();
    let mixing = entries.iter().any(|e| e.doubled() > 0) && entries.iter().any(|e| e.doubled() < 0);
    Ok(CensusRow {
        class,
        sum: class.sum(),
        components: boundary_components(class),
        knot: table.identify(&jones),
        jones,
        example_word,
        no_charge_mixing: !mixing,
    })
}

fn sort_rows(rows: &mut [CensusRow]) {
    rows.sort_by(|x, y| y.sum.cmp(&x.sum).then(y.class.cmp(&x.class)));
}

/// Enumerates all 6^length words in letter order `1 2 3 -1 -2 -3`
/// (rightmost letter varying fastest), deduplicates the reached twist
/// vectors, and reports each class with the first word that reached it.
///
/// With `orbit` set, vectors are further grouped by their sorted
/// representative; otherwise the raw ordered vectors are kept.
pub fn census_by_length(
    length: usize,
    sum_filter: Option<HalfInt>,
    orbit: bool,
    table: &KnotTable,
) -> Result<Vec<CensusRow>, CensusError> {
    if length.is_multiple_of(2) {
        return Err(CensusError::EvenLength(length));
    }
    let letters = Generator::all();
    let mut first_word: BTreeMap<TwistVector, BraidWord> = BTreeMap::new();
    let mut indices = vec![0usize; length];
    loop {
        let word = BraidWord::new(indices.iter().map(|&i| letters[i]).collect());
        let reached = word.evaluate_from_zero();
        let key = if orbit {
            reached.sorted_desc()
        } else {
            reached
        };
        first_word.entry(key).or_insert(word);

        // odometer over letter indices, rightmost fastest
        let mut pos = length;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < letters.len() {
                break;
            }
            indices[pos] = 0;
        }
        if pos == 0 && indices[0] == 0 {
            break;
        }
    }

    let mut rows = Vec::new();
    for (class, word) in first_word {
        if let Some(sum) = sum_filter {
            if class.sum() != sum {
                continue;
            }
        }
        rows.push(build_row(class, word, table)?);
    }
    sort_rows(&mut rows);
    Ok(rows)
}

/// Enumerates every half-odd twist class with entries and |sum| bounded by
/// `bound`. The example word is the canonical braid-only word of the
/// representative (half-odd vectors are always orientable).
pub fn census_by_max_sum(
    bound: HalfInt,
    orbit: bool,
    table: &KnotTable,
) -> Result<Vec<CensusRow>, CensusError> {
    let limit = bound.doubled();
    let mut rows = Vec::new();
    let mut da = -limit;
    while da <= limit {
        let mut db = -limit;
        while db <= limit {
            let mut dc = -limit;
            while dc <= limit {
                let keep = if orbit {
                    // descending representatives only
                    da >= db && db >= dc
                } else {
                    true
                };
                if keep && (da + db + dc).abs() <= limit {
                    let class = TwistVector::from_doubled([da, db, dc]);
                    let word =
                        braid_only_word(class).expect("half-odd twist vectors are orientable");
                    rows.push(build_row(class, word, table)?);
                }
                dc += 2;
            }
            db += 2;
        }
        da += 2;
    }
    sort_rows(&mut rows);
    Ok(rows)
}

pub const CSV_HEADER: &str = "twist_class,sum,components,jones,knot,example_word,no_charge_mixing";

pub fn to_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.class,
            r.sum,
            r.components,
            r.jones.to_compact(),
            r.knot.as_deref().unwrap_or("unidentified"),
            r.example_word,
            r.no_charge_mixing,
        ));
    }
    out
}

pub fn to_json(rows: &[CensusRow]) -> serde_json::Value {
    serde_json::Value::Array(
        rows.iter()
            .map(|r| {
                serde_json::json!({
                    "twist_class": r.class.to_string(),
                    "sum": r.sum.to_string(),
                    "components": r.components,
                    "jones": r.jones,
                    "jones_text": r.jones.to_string(),
                    "knot": r.knot,
                    "example_word": r.example_word.to_string(),
                    "no_charge_mixing": r.no_charge_mixing,
                })
            })
            .collect(),
    )
}

pub fn to_text(rows: &[CensusRow]) -> String {
    let headers = [
        "twist_class",
        "sum",
        "components",
        "jones",
        "knot",
        "example_word",
        "no_charge_mixing",
    ];
    let cells: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            [
                r.class.to_string(),
                r.sum.to_string(),
                r.components.to_string(),
                r.jones.to_string(),
                r.knot.clone().unwrap_or_else(|| "unidentified".into()),
                r.example_word.to_string(),
                r.no_charge_mixing.to_string(),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &cells {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cols: &[String]| {
        let line = cols
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:<width$}", c, width = widths[i]))
            .collect::<Vec<_>>()
            .join("  ");
        out.push_str(line.trim_end());
        out.push('\n');
    };
    emit(&mut out, &headers.map(String::from));
    for row in &cells {
        emit(&mut out, row);
    }
    out
}
