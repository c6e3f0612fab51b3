//! The variety file format (UTF-8 text):
//!
//! ```text
//! p <prime>
//! n <variable count>
//! m <point count>
//! <m lines, each n space-separated integers in [0, p)>
//! ```

use crate::error::Error;
use crate::essbm::Variety;
use crate::field::PrimeField;

/// A parsed variety plus how many duplicate rows lenient mode removed.
pub struct ParsedVariety {
    pub variety: Variety,
    pub duplicates_removed: usize,
}

pub fn parse_variety(text: &str, strict: bool) -> Result<ParsedVariety, Error> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let p = parse_header(lines.next(), "p")?;
    let n = parse_header(lines.next(), "n")? as usize;
    let m = parse_header(lines.next(), "m")? as usize;
    if m == 0 {
        return Err(Error::EmptyPointSet);
    }
    let field = PrimeField::new(p)?;
    let mut points = Vec::with_capacity(m);
    for (row_idx, line) in lines.enumerate() {
        if row_idx == m {
            return Err(Error::Parse(format!("more than the declared {m} point rows")));
        }
        let mut row = Vec::with_capacity(n);
        for token in line.split_whitespace() {
            let value: u64 = token
                .parse()
                .map_err(|_| Error::Parse(format!("bad coordinate '{token}' in row {}", row_idx + 1)))?;
            if value >= p {
                return Err(Error::Parse(format!(
                    "coordinate {value} in row {} is outside [0, {p})",
                    row_idx + 1
                )));
            }
            row.push(field.element(value));
        }
        if row.len() != n {
            return Err(Error::Parse(format!(
                "row {} has {} coordinates, expected {n}",
                row_idx + 1,
                row.len()
            )));
        }
        points.push(row);
    }
    if points.len() != m {
        return Err(Error::Parse(format!("found {} point rows, expected {m}", points.len())));
    }
    if strict {
        Ok(ParsedVariety { variety: Variety::new(field, n, points)?, duplicates_removed: 0 })
    } else {
        let (variety, duplicates_removed) = Variety::new_dedup(field, n, points)?;
        Ok(ParsedVariety { variety, duplicates_removed })
    }
}

fn parse_header(line: Option<&str>, key: &str) -> Result<u64, Error> {
    let line = line.ok_or_else(|| Error::Parse(format!("missing '{key}' header line")))?;
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(k), Some(v), None) if k == key => {
            v.parse().map_err(|_| Error::Parse(format!("bad value '{v}' for '{key}'")))
        }
        _ => Err(Error::Parse(format!("expected '{key} <value>', got '{line}'"))),
    }
}

/// Canonical writer; `parse_variety` round-trips its output byte-exactly.
pub fn render_variety(variety: &Variety) -> String {
    let mut out = String::new();
    out.push_str(&format!("p {}\n", variety.field().modulus()));
    out.push_str(&format!("n {}\n", variety.n_vars()));
    out.push_str(&format!("m {}\n", variety.len()));
    for point in variety.points() {
        let coords: Vec<String> = point.iter().map(ToString::to_string).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}
