//! Printed tables, transcribed once into `tests/golden/` and embedded here.

use crate::linalg::Matrix;
use crate::macdonald::QTMatrix;
use crate::partitions::Partition;
use crate::qt_ring::parse_qt;
use crate::symfunc::{parse_symfunc, SymFunc};
use crate::whittaker::WExpansion;

const FILES: &[(&str, &str)] = &[
    ("w-values", include_str!("../../tests/golden/w-values.txt")),
    ("displays-31", include_str!("../../tests/golden/displays-31.txt")),
    ("kostka-w-4", include_str!("../../tests/golden/kostka-w-4.txt")),
    ("qt-kostka-4", include_str!("../../tests/golden/qt-kostka-4.txt")),
    ("hl-kostka-4", include_str!("../../tests/golden/hl-kostka-4.txt")),
    ("htilde-4", include_str!("../../tests/golden/htilde-4.txt")),
    ("q-mn-3", include_str!("../../tests/golden/q-mn-3.txt")),
    ("c6", include_str!("../../tests/golden/c6.txt")),
    ("qmn-3", include_str!("../../tests/golden/qmn-3.txt")),
    ("qmn-4", include_str!("../../tests/golden/qmn-4.txt")),
    ("qmn-5", include_str!("../../tests/golden/qmn-5.txt")),
    ("qmn-6", include_str!("../../tests/golden/qmn-6.txt")),
    ("gamma-6", include_str!("../../tests/golden/gamma-6.txt")),
    ("lower-6", include_str!("../../tests/golden/lower-6.txt")),
    ("upper-6", include_str!("../../tests/golden/upper-6.txt")),
];

pub fn file(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

fn lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty())
}

/// `31` -> `(3,1)`; one digit per part.
pub fn parse_label(digits: &str) -> Result<Partition, String> {
    let parts = digits.chars().map(|c| c.to_digit(10).ok_or_else(|| format!("bad partition label {digits:?}"))).collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

/// Lines of the form `NAME = expr`.
pub fn named(text: &str) -> Result<Vec<(String, String)>, String> {
    lines(text)
        .map(|l| {
            let (k, v) = l.split_once('=').ok_or_else(|| format!("missing '=' in {l:?}"))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

/// Lines of the form `m=K : expr`.
pub fn by_m(text: &str) -> Result<Vec<(u32, String)>, String> {
    lines(text)
        .map(|l| {
            let (k, v) = l.split_once(':').ok_or_else(|| format!("missing ':' in {l:?}"))?;
            let m = k.trim().trim_start_matches("m=").parse::<u32>().map_err(|e| format!("{l:?}: {e}"))?;
            Ok((m, v.trim().to_string()))
        })
        .collect()
}

pub fn schur(expr: &str) -> Result<SymFunc, String> {
    parse_symfunc(expr)
}

/// An expression in `W_mu` terms, read through the Schur parser.
pub fn w_expansion(expr: &str) -> Result<WExpansion, String> {
    let f = parse_symfunc(&expr.replace('W', "s"))?;
    let mut out = WExpansion::new("W");
    for (mu, c) in f.terms() {
        out.add_term(mu.clone(), c.clone());
    }
    Ok(out)
}

/// Rows of ` | `-separated entries.
pub fn matrix(text: &str) -> Result<QTMatrix, String> {
    let rows = lines(text)
        .map(|l| l.split('|').map(|c| parse_qt(c.trim()).map_err(|e| format!("{c:?}: {e}"))).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let w = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != w) {
        return Err("ragged matrix".into());
    }
    Ok(Matrix::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_file_parses() {
        for (name, text) in FILES {
            let ok = match *name {
                n if n.starts_with("qmn-") => by_m(text).and_then(|v| v.iter().try_for_each(|(_, e)| w_expansion(e).map(drop))),
                "kostka-w-4" | "qt-kostka-4" | "hl-kostka-4" | "gamma-6" | "lower-6" | "upper-6" => matrix(text).map(drop),
                _ => named(text).and_then(|v| v.iter().try_for_each(|(_, e)| schur(e).map(drop))),
            };
            assert!(ok.is_ok(), "{name}: {ok:?}");
        }
        assert_eq!(parse_label("211").unwrap(), crate::partitions::p(&[2, 1, 1]));
    }
}
