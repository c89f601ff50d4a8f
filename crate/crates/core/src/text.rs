//! Plain-text matrix format.
//!
//! One row per line. A line without whitespace made only of `0`/`1`
//! characters is read one entry per character (`1011`); otherwise entries are
//! whitespace-separated integers. Leading blank lines are skipped and the
//! first blank line after a row ends the matrix.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::ZMatrix;

pub fn parse_matrix(input: &str) -> Result<ZMatrix> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            if rows.is_empty() {
                continue;
            }
            break;
        }
        let row = parse_row(line).map_err(|message| Error::Parse {
            line: lineno + 1,
            message,
        })?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("row has {} entries, expected {}", row.len(), first.len()),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "no matrix rows found".into(),
        });
    }
    let cols = rows[0].len();
    ZMatrix::from_vec(rows.len(), cols, rows.into_iter().flatten().collect())
}

fn parse_row(line: &str) -> std::result::Result<Vec<BigInt>, String> {
    let compact = !line.contains(char::is_whitespace) && line.bytes().all(|b| b == b'0' || b == b'1');
    if compact {
        return Ok(line.bytes().map(|b| BigInt::from(b - b'0')).collect());
    }
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<BigInt>()
                .map_err(|_| format!("cannot parse {tok:?} as an integer"))
        })
        .collect()
}

/// Compact `0101` rows for 0/1 matrices, space-separated integers otherwise.
pub fn format_matrix(m: &ZMatrix) -> String {
    let compact = m.is_binary() && m.cols() > 0;
    let mut out = String::new();
    for i in 0..m.rows() {
        let row = m.row(i);
        if compact {
            out.extend(row.iter().map(|x| if x.is_zero() { '0' } else { '1' }));
        } else {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&cells.join(" "));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_binary_rows() {
        let m = parse_matrix("110\n101\n100\n").unwrap();
        assert_eq!(m, ZMatrix::from_rows(&[[1, 1, 0], [1, 0, 1], [1, 0, 0]]).unwrap());
    }

    #[test]
    fn whitespace_integers() {
        let m = parse_matrix("  1 -2 3\n40 5 6\n").unwrap();
        assert_eq!(m, ZMatrix::from_rows(&[[1, -2, 3], [40, 5, 6]]).unwrap());
    }

    #[test]
    fn blank_line_terminates() {
        let m = parse_matrix("\n\n10\n01\n\n11\n").unwrap();
        assert_eq!(m.shape(), (2, 2));
    }

    #[test]
    fn single_integer_line() {
        assert_eq!(parse_matrix("7").unwrap(), ZMatrix::from_rows(&[[7]]).unwrap());
    }

    #[test]
    fn ragged_rows_report_line() {
        let err = parse_matrix("10\n1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn garbage_rejected() {
        assert!(matches!(parse_matrix("1 x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_matrix("\n \n").is_err());
    }

    #[test]
    fn format_round_trips() {
        for src in ["10\n01\n11\n", "1 2\n-3 4\n"] {
            let m = parse_matrix(src).unwrap();
            assert_eq!(format_matrix(&m), src);
            assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
        }
    }
}
