//! Cayley tables over the carrier `{0, …, n-1}` and their text format.
//!
//! A table file holds optional `#` comment lines, then the order `n`, then
//! `n` rows of `n` whitespace-separated integers; row `i` lists `i∘j` for
//! `j = 0..n`. A biquasigroup file is two such blocks separated by a blank
//! line, the first for `∘` and the second for `*`.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};

/// Carrier element. Carriers are always `0..n`.
pub type Element = usize;

/// An `n × n` operation table in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<Element>,
}

impl CayleyTable {
    /// Builds a table from `n²` row-major entries.
    pub fn new(order: usize, entries: Vec<Element>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        let expected = order * order;
        if entries.len() != expected {
            return Err(Error::LengthMismatch {
                order,
                expected,
                found: entries.len(),
            });
        }
        if let Some((index, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= order) {
            return Err(Error::EntryOutOfRange { index, value, order });
        }
        Ok(Self { order, entries })
    }

    /// Tabulates `op` over the carrier.
    ///
    /// Panics if `op` returns a value outside `0..order`; callers use it only
    /// with operations closed on the carrier.
    pub fn from_fn(order: usize, op: impl Fn(Element, Element) -> Element) -> Self {
        assert!(order > 0, "table order must be at least 1");
        let mut entries = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let v = op(x, y);
                assert!(v < order, "operation left the carrier: {x}∘{y} = {v}");
                entries.push(v);
            }
        }
        Self { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: Element, y: Element) -> Element {
        self.entries[x * self.order + y]
    }

    pub fn row(&self, x: Element) -> &[Element] {
        &self.entries[x * self.order..(x + 1) * self.order]
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn diagonal(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).map(move |x| self.get(x, x))
    }

    /// Returns the transposed table `(x, y) ↦ y∘x`.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |x, y| self.get(y, x))
    }

    /// True iff every row and every column is a permutation of the carrier.
    pub fn is_latin_square(&self) -> bool {
        self.latin_violation().is_none()
    }

    /// Describes the first repeated value found in a row or column.
    pub(crate) fn latin_violation(&self) -> Option<String> {
        let n = self.order;
        let mut seen = vec![false; n];
        for x in 0..n {
            seen.fill(false);
            for y in 0..n {
                let v = self.get(x, y);
                if std::mem::replace(&mut seen[v], true) {
                    return Some(format!("row {x} repeats value {v}"));
                }
            }
        }
        for y in 0..n {
            seen.fill(false);
            for x in 0..n {
                let v = self.get(x, y);
                if std::mem::replace(&mut seen[v], true) {
                    return Some(format!("column {y} repeats value {v}"));
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.get(x, y) == self.get(y, x)))
    }

    /// Renders the table in the text block format (order line, then rows).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.order);
        for x in 0..self.order {
            let row: Vec<String> = self.row(x).iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses every table block in `text`. Blocks are separated by blank lines;
/// `source` names the input in error messages.
pub fn parse_blocks(text: &str, source: &str) -> Result<Vec<CayleyTable>> {
    let err = |line: usize, column: usize, message: String| Error::Format {
        path: source.to_string(),
        line,
        column,
        message,
    };

    let mut tables = Vec::new();
    let mut lines = text.lines().enumerate().peekable();
    loop {
        // Skip blank and comment lines up to the order line.
        let (order_line_no, order_line) = loop {
            match lines.next() {
                None => return Ok(tables),
                Some((_, l)) if l.trim().is_empty() || l.trim_start().starts_with('#') => continue,
                Some(found) => break found,
            }
        };
        let order_text = order_line.trim();
        let order: usize = order_text.parse().map_err(|_| {
            err(
                order_line_no + 1,
                column_of(order_line, order_text),
                format!("expected table order, found `{order_text}`"),
            )
        })?;
        if order == 0 {
            return Err(err(order_line_no + 1, 1, "table order must be at least 1".into()));
        }
        let mut entries = Vec::with_capacity(order * order);
        for row in 0..order {
            let (line_no, line) = loop {
                match lines.next() {
                    Some((_, l)) if l.trim_start().starts_with('#') => continue,
                    Some(found) if !found.1.trim().is_empty() => break found,
                    _ => {
                        return Err(err(
                            order_line_no + 2 + row,
                            1,
                            format!("expected {order} rows, found {row}"),
                        ))
                    }
                }
            };
            let mut count = 0;
            for token in line.split_whitespace() {
                let column = column_of(line, token);
                let value: usize = token
                    .parse()
                    .map_err(|_| err(line_no + 1, column, format!("invalid entry `{token}`")))?;
                if value >= order {
                    return Err(err(
                        line_no + 1,
                        column,
                        format!("entry {value} out of range for order {order}"),
                    ));
                }
                count += 1;
                if count > order {
                    return Err(err(
                        line_no + 1,
                        column,
                        format!("row {row} has more than {order} entries"),
                    ));
                }
                entries.push(value);
            }
            if count < order {
                return Err(err(
                    line_no + 1,
                    line.len() + 1,
                    format!("row {row} has {count} entries, expected {order}"),
                ));
            }
        }
        tables.push(CayleyTable::new(order, entries)?);
    }
}

/// 1-based column of `token`, which must be a subslice of `line`.
fn column_of(line: &str, token: &str) -> usize {
    let offset = token.as_ptr() as usize - line.as_ptr() as usize;
    line[..offset].chars().count() + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_table_examples() {
        let t = CayleyTable::new(1, vec![0]).unwrap();
        assert_eq!(t.get(0, 0), 0);
        let z2 = CayleyTable::new(2, vec![0, 1, 1, 0]).unwrap();
        assert!(z2.is_latin_square());
        assert_eq!(
            CayleyTable::new(2, vec![0, 1, 1, 2]),
            Err(Error::EntryOutOfRange {
                index: 3,
                value: 2,
                order: 2
            })
        );
        assert!(matches!(
            CayleyTable::new(2, vec![0, 1, 1]),
            Err(Error::LengthMismatch {
                expected: 4,
                found: 3,
                ..
            })
        ));
        assert_eq!(CayleyTable::new(0, vec![]), Err(Error::EmptyTable));
    }

    #[test]
    fn latin_examples() {
        let z3 = CayleyTable::from_fn(3, |x, y| (x + y) % 3);
        assert!(z3.is_latin_square());
        assert!(!CayleyTable::new(2, vec![0, 1, 0, 1]).unwrap().is_latin_square());
        // x - y mod 3: scan each row and column directly.
        let sub = CayleyTable::from_fn(3, |x, y| (x + 3 - y) % 3);
        for i in 0..3 {
            let mut row: Vec<_> = (0..3).map(|j| sub.get(i, j)).collect();
            let mut col: Vec<_> = (0..3).map(|j| sub.get(j, i)).collect();
            row.sort();
            col.sort();
            assert_eq!(row, vec![0, 1, 2]);
            assert_eq!(col, vec![0, 1, 2]);
        }
        assert!(sub.is_latin_square());
    }

    #[test]
    fn text_round_trip_with_comments() {
        let text = "# Z_3\n3\n0 1 2\n1 2 0\n2 0 1\n\n# second\n3\n0 2 1\n1 0 2\n2 1 0\n";
        let blocks = parse_blocks(text, "mem").unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0], CayleyTable::from_fn(3, |x, y| (x + y) % 3));
        let again = parse_blocks(&blocks[1].to_text(), "mem").unwrap();
        assert_eq!(again[0], blocks[1]);
    }

    #[test]
    fn text_errors_carry_positions() {
        let e = parse_blocks("2\n0 1\n1 x\n", "f").unwrap_err();
        assert_eq!(
            e,
            Error::Format {
                path: "f".into(),
                line: 3,
                column: 3,
                message: "invalid entry `x`".into()
            }
        );
        let e = parse_blocks("2\n0 1\n1 5\n", "f").unwrap_err();
        assert!(matches!(e, Error::Format { line: 3, column: 3, .. }));
        let e = parse_blocks("3\n0 1 2\n1 2\n", "f").unwrap_err();
        assert!(matches!(e, Error::Format { line: 3, .. }));
        let e = parse_blocks("3\n0 1 2\n", "f").unwrap_err();
        assert!(matches!(e, Error::Format { .. }));
        let e = parse_blocks("two\n", "f").unwrap_err();
        assert!(matches!(e, Error::Format { line: 1, column: 1, .. }));
    }
}
