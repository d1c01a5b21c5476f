//! Text and structured model documents.
//!
//! Text format:
//!
//! ```text
//! gag v1
//! elements: a b c
//! gammas: g h
//! table g:
//! a a a
//! ...
//! table h:
//! ...
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Row `i`, column `j`
//! of block `table γ:` holds `i γ j`. [`serialize_model`] emits the canonical
//! form: no comments, single spaces, operator blocks in operator order.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{ParseError, ParseErrorKind};
use crate::model::{GammaGroupoid, Labels};

pub const PAPER_EXAMPLE: &str = include_str!("../fixtures/paper_example.gag");

const HEADER: &str = "gag v1";

pub fn serialize_model(g: &GammaGroupoid) -> String {
    let labels = g.labels();
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    let _ = writeln!(out, "elements: {}", labels.elements.join(" "));
    let _ = writeln!(out, "gammas: {}", labels.gammas.join(" "));
    for k in 0..g.gammas() {
        let _ = writeln!(out, "table {}:", labels.gammas[k]);
        for i in 0..g.order() {
            let row: Vec<&str> = (0..g.order())
                .map(|j| labels.elements[g.op(i, k, j)].as_str())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn parse_model(text: &str) -> Result<GammaGroupoid, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let eof_line = text.lines().count().max(1);
    let mut next = |expected: &str| {
        lines.next().ok_or_else(|| {
            ParseError::new(
                eof_line,
                ParseErrorKind::Expected {
                    expected: expected.to_string(),
                    found: "end of input".into(),
                },
            )
        })
    };

    let (line, header) = next(HEADER)?;
    if header.split_whitespace().collect::<Vec<_>>() != ["gag", "v1"] {
        return Err(ParseError::new(
            line,
            ParseErrorKind::BadHeader(header.to_string()),
        ));
    }

    let (line, elements_line) = next("elements: ...")?;
    let elements = names_after(line, elements_line, "elements:", "element")?;
    let (line, gammas_line) = next("gammas: ...")?;
    let gammas = names_after(line, gammas_line, "gammas:", "operator")?;

    let order = elements.len();
    let m = gammas.len();
    if order > crate::model::MAX_ORDER {
        return Err(ParseError::new(
            line,
            ParseErrorKind::Invalid(format!(
                "order {order} exceeds the supported maximum of {}",
                crate::model::MAX_ORDER
            )),
        ));
    }
    let element_index: HashMap<&str, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_str(), i))
        .collect();
    let gamma_index: HashMap<&str, usize> = gammas
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_str(), i))
        .collect();

    let mut table = vec![0u8; order * m * order];
    let mut seen = vec![false; m];
    let mut last_line = line;
    while let Some((line, l)) = lines.next() {
        last_line = line;
        let name = l
            .strip_prefix("table")
            .and_then(|rest| rest.trim().strip_suffix(':'))
            .map(str::trim)
            .filter(|name| !name.is_empty() && !name.contains(char::is_whitespace))
            .ok_or_else(|| {
                ParseError::new(
                    line,
                    ParseErrorKind::Expected {
                        expected: "table <gamma>:".into(),
                        found: l.to_string(),
                    },
                )
            })?;
        let k = *gamma_index
            .get(name)
            .ok_or_else(|| ParseError::new(line, ParseErrorKind::UnknownGamma(name.into())))?;
        if seen[k] {
            return Err(ParseError::new(
                line,
                ParseErrorKind::DuplicateTable(name.into()),
            ));
        }
        seen[k] = true;
        for i in 0..order {
            let Some((row_line, row)) = lines.next() else {
                return Err(ParseError::new(
                    eof_line,
                    ParseErrorKind::MissingRows {
                        table: name.into(),
                        found: i,
                        expected: order,
                    },
                ));
            };
            last_line = row_line;
            if row.starts_with("table") {
                return Err(ParseError::new(
                    row_line,
                    ParseErrorKind::MissingRows {
                        table: name.into(),
                        found: i,
                        expected: order,
                    },
                ));
            }
            let entries: Vec<&str> = row.split_whitespace().collect();
            if entries.len() != order {
                return Err(ParseError::new(
                    row_line,
                    ParseErrorKind::RowLength {
                        found: entries.len(),
                        expected: order,
                    },
                ));
            }
            for (j, entry) in entries.into_iter().enumerate() {
                let v = *element_index.get(entry).ok_or_else(|| {
                    ParseError::new(
                        row_line,
                        ParseErrorKind::EntryOutOfRange {
                            entry: entry.into(),
                            order,
                        },
                    )
                })?;
                table[(i * m + k) * order + j] = v as u8;
            }
        }
    }
    if let Some(k) = seen.iter().position(|s| !s) {
        return Err(ParseError::new(
            last_line,
            ParseErrorKind::MissingTable(gammas[k].clone()),
        ));
    }

    GammaGroupoid::with_labels(order, m, table, Labels { elements, gammas })
        .map_err(|e| ParseError::new(last_line, ParseErrorKind::Invalid(e.to_string())))
}

fn names_after(
    line: usize,
    text: &str,
    prefix: &str,
    what: &'static str,
) -> Result<Vec<String>, ParseError> {
    let rest = text.strip_prefix(prefix).ok_or_else(|| {
        ParseError::new(
            line,
            ParseErrorKind::Expected {
                expected: format!("{prefix} ..."),
                found: text.to_string(),
            },
        )
    })?;
    let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
    if names.is_empty() {
        return Err(ParseError::new(
            line,
            ParseErrorKind::Invalid(format!("at least one {what} name is required")),
        ));
    }
    for (i, name) in names.iter().enumerate() {
        if names[..i].contains(name) {
            return Err(ParseError::new(
                line,
                ParseErrorKind::DuplicateName {
                    what,
                    name: name.clone(),
                },
            ));
        }
    }
    Ok(names)
}

/// Structured form of a model: `tables[k][i][j]` is the index of `i γk j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelDocument {
    pub format: String,
    pub version: u32,
    pub elements: Vec<String>,
    pub gammas: Vec<String>,
    pub tables: Vec<Vec<Vec<usize>>>,
}

impl ModelDocument {
    pub fn from_model(g: &GammaGroupoid) -> Self {
        let n = g.order();
        ModelDocument {
            format: "gag".into(),
            version: 1,
            elements: g.labels().elements.clone(),
            gammas: g.labels().gammas.clone(),
            tables: (0..g.gammas())
                .map(|k| {
                    (0..n)
                        .map(|i| (0..n).map(|j| g.op(i, k, j)).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_model(&self) -> Result<GammaGroupoid, ParseErrorKind> {
        if self.format != "gag" || self.version != 1 {
            return Err(ParseErrorKind::BadHeader(format!(
                "{} v{}",
                self.format, self.version
            )));
        }
        let n = self.elements.len();
        let m = self.gammas.len();
        for (what, names) in [("element", &self.elements), ("operator", &self.gammas)] {
            for (i, name) in names.iter().enumerate() {
                if names[..i].contains(name) {
                    return Err(ParseErrorKind::DuplicateName {
                        what,
                        name: name.clone(),
                    });
                }
            }
        }
        if self.tables.len() != m {
            return Err(ParseErrorKind::Invalid(format!(
                "{} tables for {m} operators",
                self.tables.len()
            )));
        }
        let mut table = vec![0u8; n * m * n];
        for (k, rows) in self.tables.iter().enumerate() {
            if rows.len() != n {
                return Err(ParseErrorKind::MissingRows {
                    table: self.gammas[k].clone(),
                    found: rows.len(),
                    expected: n,
                });
            }
            for (i, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(ParseErrorKind::RowLength {
                        found: row.len(),
                        expected: n,
                    });
                }
                for (j, &v) in row.iter().enumerate() {
                    if v >= n {
                        return Err(ParseErrorKind::EntryOutOfRange {
                            entry: v.to_string(),
                            order: n,
                        });
                    }
                    table[(i * m + k) * n + j] = v as u8;
                }
            }
        }
        GammaGroupoid::with_labels(
            n,
            m,
            table,
            Labels {
                elements: self.elements.clone(),
                gammas: self.gammas.clone(),
            },
        )
        .map_err(|e| ParseErrorKind::Invalid(e.to_string()))
    }
}

pub fn model_to_json(g: &GammaGroupoid) -> String {
    serde_json::to_string(&ModelDocument::from_model(g)).expect("model document serializes")
}

pub fn model_from_json(text: &str) -> Result<GammaGroupoid, ParseError> {
    let doc: ModelDocument = serde_json::from_str(text)
        .map_err(|e| ParseError::new(e.line().max(1), ParseErrorKind::Json(e.to_string())))?;
    doc.to_model().map_err(|kind| ParseError::new(1, kind))
}

/// Parses either format, choosing by the first non-blank character.
pub fn parse_any(text: &str) -> Result<GammaGroupoid, ParseError> {
    if text.trim_start().starts_with('{') {
        model_from_json(text)
    } else {
        parse_model(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_fixture_is_canonical() {
        let g = parse_model(PAPER_EXAMPLE).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.gammas(), 1);
        assert_eq!(serialize_model(&g), PAPER_EXAMPLE);
    }

    #[test]
    fn example_rows_match_table() {
        let g = parse_model(PAPER_EXAMPLE).unwrap();
        let rows: [[usize; 5]; 5] = [
            [0, 0, 0, 0, 0],
            [0, 1, 2, 3, 4],
            [0, 4, 1, 2, 3],
            [0, 3, 4, 1, 2],
            [0, 2, 3, 4, 1],
        ];
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(g.op(i, 0, j), v);
            }
        }
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# leading\ngag v1\n\nelements: x y\n# mid\ngammas: p\ntable p:\nx x\n  x y  \n";
        let g = parse_model(text).unwrap();
        assert_eq!(g.op(1, 0, 1), 1);
        assert_eq!(g.element_name(0), "x");
    }

    #[test]
    fn out_of_range_entry() {
        let text = "gag v1\nelements: 0 1 2 3 4\ngammas: g\ntable g:\n0 0 0 0 0\n0 0 0 0 5\n0 0 0 0 0\n0 0 0 0 0\n0 0 0 0 0\n";
        let err = parse_model(text).unwrap_err();
        assert_eq!(err.line, 6);
        assert!(matches!(err.kind, ParseErrorKind::EntryOutOfRange { .. }));
    }

    #[test]
    fn duplicate_names() {
        let err = parse_model("gag v1\nelements: a a\ngammas: g\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(
            err.kind,
            ParseErrorKind::DuplicateName {
                what: "element",
                ..
            }
        ));
        let err = parse_model("gag v1\nelements: a\ngammas: g g\n").unwrap_err();
        assert!(matches!(
            err.kind,
            ParseErrorKind::DuplicateName {
                what: "operator",
                ..
            }
        ));
    }

    #[test]
    fn non_total_tables_rejected() {
        let short_row = "gag v1\nelements: a b\ngammas: g\ntable g:\na b\na\n";
        assert!(matches!(
            parse_model(short_row).unwrap_err().kind,
            ParseErrorKind::RowLength {
                found: 1,
                expected: 2
            }
        ));
        let missing_row = "gag v1\nelements: a b\ngammas: g\ntable g:\na b\n";
        assert!(matches!(
            parse_model(missing_row).unwrap_err().kind,
            ParseErrorKind::MissingRows { .. }
        ));
        let missing_table = "gag v1\nelements: a\ngammas: g h\ntable g:\na\n";
        assert!(matches!(
            parse_model(missing_table).unwrap_err().kind,
            ParseErrorKind::MissingTable(_)
        ));
    }

    #[test]
    fn malformed_syntax() {
        assert!(matches!(
            parse_model("gag v2\n").unwrap_err().kind,
            ParseErrorKind::BadHeader(_)
        ));
        let err = parse_model("gag v1\nelements: a\ngammas: g\nrows g:\na\n").unwrap_err();
        assert_eq!(err.line, 4);
        assert!(parse_model("").is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = GammaGroupoid::paper_example();
        let json = model_to_json(&g);
        assert_eq!(parse_any(&json).unwrap(), g);
        let mut doc = ModelDocument::from_model(&g);
        doc.tables[0][1][1] = 9;
        let bad = serde_json::to_string(&doc).unwrap();
        assert!(matches!(
            model_from_json(&bad).unwrap_err().kind,
            ParseErrorKind::EntryOutOfRange { .. }
        ));
    }
}
