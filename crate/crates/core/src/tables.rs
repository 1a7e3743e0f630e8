//! Recomputation of the reference dimension tables.
//!
//! - Table 1: length-15 quaternary BCH pairs with d1 = d_sr, d2 = ⌈d_sr/2⌉.
//! - Table 3: the same with d2 = ⌈2·d_sr/3⌉, as needed by the reduction decoder.
//! - Table 2: pairs of binary irreducible Goppa codes of length 2^m, using the
//!   parameter bounds k = ℓ − m·r, d = 2r + 1, plus the zero and full codes.
//!
//! Reference values live in `data/reference_tables.toml`.

use std::fmt::Write as _;

use serde::Deserialize;

use crate::codes::best_defining_set;
use crate::error::{Error, Result};
use crate::sumrank::singleton_bound;

const REFERENCE: &str = include_str!("../data/reference_tables.toml");

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct ReferenceRow {
    pub length: usize,
    pub d_sr: usize,
    pub half_dimension: usize,
    pub comparison_half: usize,
    pub singleton_half: usize,
    pub source: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ReferenceTables {
    pub version: u32,
    pub table1: Vec<ReferenceRow>,
    pub table2: Vec<ReferenceRow>,
    pub table3: Vec<ReferenceRow>,
}

pub fn reference_tables() -> ReferenceTables {
    toml::from_str(REFERENCE).expect("bundled reference table file is valid")
}

/// A component choice: `None` distance means the zero code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentChoice {
    pub dimension: usize,
    pub distance: Option<usize>,
}

impl ComponentChoice {
    fn distance_label(&self) -> String {
        self.distance.map_or_else(|| "inf".to_string(), |d| d.to_string())
    }
}

/// One recomputed row next to its reference values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub table: u8,
    pub length: usize,
    pub d_sr: usize,
    pub c1: ComponentChoice,
    pub c2: ComponentChoice,
    pub reference: ReferenceRow,
}

impl TableRow {
    /// GF(2) dimension 2·(k1 + k2).
    pub fn f2_dimension(&self) -> usize {
        2 * (self.c1.dimension + self.c2.dimension)
    }

    pub fn singleton_f2_dimension(&self) -> usize {
        singleton_bound(self.length, self.d_sr).expect("table rows are in range")
    }

    pub fn matches(&self) -> bool {
        self.f2_dimension() == 2 * self.reference.half_dimension
            && self.singleton_f2_dimension() == 2 * self.reference.singleton_half
    }
}

/// Largest dimension of a length-n quaternary BCH code with BCH bound ≥ d.
pub fn best_bch_dimension(n: usize, d: usize) -> Result<usize> {
    Ok(n - best_defining_set(n, d)?.len())
}

fn bch_choice(n: usize, d: usize) -> Result<ComponentChoice> {
    Ok(ComponentChoice { dimension: best_bch_dimension(n, d)?, distance: Some(d) })
}

fn bch_table(table: u8, rows: &[ReferenceRow], d2_of: impl Fn(usize) -> usize) -> Result<Vec<TableRow>> {
    rows.iter()
        .map(|r| {
            Ok(TableRow {
                table,
                length: r.length,
                d_sr: r.d_sr,
                c1: bch_choice(r.length, r.d_sr)?,
                c2: bch_choice(r.length, d2_of(r.d_sr))?,
                reference: r.clone(),
            })
        })
        .collect()
}

/// Lower bound max{min{d1, 2·d2}, min{d2, 2·d1}} with `None` as infinity.
fn sr_bound(d1: Option<usize>, d2: Option<usize>) -> usize {
    let inf = usize::MAX / 4;
    let (a, b) = (d1.unwrap_or(inf), d2.unwrap_or(inf));
    a.min(2 * b).max(b.min(2 * a))
}

/// Binary Goppa parameter options for length 2^m: zero code, full code and
/// k = ℓ − m·r, d = 2r + 1 for every r ≥ 1 with k > 0.
pub fn goppa_options(length: usize) -> Result<Vec<ComponentChoice>> {
    if !length.is_power_of_two() || length < 2 {
        return Err(Error::Range(format!("Goppa table rows need ℓ = 2^m, got {length}")));
    }
    let m = length.trailing_zeros() as usize;
    let mut out = vec![
        ComponentChoice { dimension: 0, distance: None },
        ComponentChoice { dimension: length, distance: Some(1) },
    ];
    let mut r = 1;
    while length > m * r {
        out.push(ComponentChoice { dimension: length - m * r, distance: Some(2 * r + 1) });
        r += 1;
    }
    Ok(out)
}

/// The pair of Goppa options maximizing k1 + k2 with sum-rank bound ≥ d_sr.
/// Ties keep the first pair found, scanning C1 then C2 in option order.
pub fn best_goppa_pair(length: usize, d_sr: usize) -> Result<(ComponentChoice, ComponentChoice)> {
    let opts = goppa_options(length)?;
    let mut best: Option<(ComponentChoice, ComponentChoice)> = None;
    for &a in &opts {
        for &b in &opts {
            if sr_bound(a.distance, b.distance) < d_sr {
                continue;
            }
            if best.is_none_or(|(x, y)| a.dimension + b.dimension > x.dimension + y.dimension) {
                best = Some((a, b));
            }
        }
    }
    Ok(best.expect("the zero pair satisfies every bound"))
}

/// Recomputes table 1, 2 or 3.
pub fn table_rows(table: u8) -> Result<Vec<TableRow>> {
    let reference = reference_tables();
    match table {
        1 => bch_table(1, &reference.table1, |d| d.div_ceil(2)),
        3 => bch_table(3, &reference.table3, |d| (2 * d).div_ceil(3)),
        2 => reference
            .table2
            .iter()
            .map(|r| {
                let (c1, c2) = best_goppa_pair(r.length, r.d_sr)?;
                Ok(TableRow { table: 2, length: r.length, d_sr: r.d_sr, c1, c2, reference: r.clone() })
            })
            .collect(),
        other => Err(Error::Range(format!("no table {other}; choose 1, 2 or 3"))),
    }
}

/// Comma-separated rendering with a header row; `pretty` aligns columns and
/// writes dimensions as 2·k.
pub fn render(rows: &[TableRow], pretty: bool) -> String {
    let header = [
        "table",
        "length",
        "d_sr",
        "k1",
        "d1",
        "k2",
        "d2",
        "dimension",
        "reference",
        "comparison",
        "singleton",
        "match",
    ];
    let fmt_dim = |d: usize| if pretty { format!("2·{}", d / 2) } else { d.to_string() };
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.table.to_string(),
                r.length.to_string(),
                r.d_sr.to_string(),
                r.c1.dimension.to_string(),
                r.c1.distance_label(),
                r.c2.dimension.to_string(),
                r.c2.distance_label(),
                fmt_dim(r.f2_dimension()),
                fmt_dim(2 * r.reference.half_dimension),
                fmt_dim(2 * r.reference.comparison_half),
                fmt_dim(r.singleton_f2_dimension()),
                if r.matches() { "yes".into() } else { "MISMATCH".into() },
            ]
        })
        .collect();
    let mut out = String::new();
    if pretty {
        let widths: Vec<usize> = (0..header.len())
            .map(|c| body.iter().map(|row| row[c].chars().count()).chain([header[c].len()]).max().unwrap_or(0))
            .collect();
        let line = |cells: Vec<&str>| {
            cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}", w = *w)).collect::<Vec<_>>().join("  ")
        };
        let _ = writeln!(out, "{}", line(header.to_vec()));
        for row in &body {
            let _ = writeln!(out, "{}", line(row.iter().map(String::as_str).collect()));
        }
    } else {
        let _ = writeln!(out, "{}", header.join(","));
        for row in &body {
            let _ = writeln!(out, "{}", row.join(","));
        }
    }
    out
}
