//! Plain-text matrix format: first line `rows cols`, then rows×cols lines
//! `re im` in row-major order. Output carries 17 significant digits, enough
//! for an exact f64 round-trip.

use num_complex::Complex64;

use super::{ComplexMatrix, LinalgError};

pub fn write_matrix(m: &ComplexMatrix) -> String {
    let mut out = String::with_capacity(16 + 48 * m.rows() * m.cols());
    out.push_str(&format!("{} {}\n", m.rows(), m.cols()));
    for z in m.entries_row_major() {
        out.push_str(&format!("{:.16e} {:.16e}\n", z.re, z.im));
    }
    out
}

pub fn read_matrix(text: &str) -> Result<ComplexMatrix, LinalgError> {
    let parse_err = |line: usize, message: &str| LinalgError::Parse {
        line,
        message: message.to_string(),
    };
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty input, expected `rows cols` header"))?;
    let mut dims = header.split_whitespace();
    let rows: usize = dims
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(lineno + 1, "expected row count"))?;
    let cols: usize = dims
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(lineno + 1, "expected column count"))?;
    if dims.next().is_some() {
        return Err(parse_err(lineno + 1, "trailing tokens after `rows cols`"));
    }

    let mut entries = Vec::with_capacity(rows * cols);
    for (lineno, line) in &mut lines {
        let mut parts = line.split_whitespace();
        let re: f64 = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(lineno + 1, "expected real part"))?;
        let im: f64 = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(lineno + 1, "expected imaginary part"))?;
        if parts.next().is_some() {
            return Err(parse_err(lineno + 1, "trailing tokens after `re im`"));
        }
        entries.push(Complex64::new(re, im));
        if entries.len() == rows * cols {
            break;
        }
    }
    if entries.len() != rows * cols {
        return Err(parse_err(
            text.lines().count(),
            &format!("expected {} entries, found {}", rows * cols, entries.len()),
        ));
    }
    ComplexMatrix::from_rows(rows, cols, entries)
}
