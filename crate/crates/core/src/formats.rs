//! Line-oriented text formats for component codes and sum-rank words.
//!
//! Code file:
//!
//! ```text
//! code v1
//! field gf4                 # gf2, gf4, or gf(2^m):<hex modulus> with m ∈ {1, 2}
//! kind linear               # or additive
//! length 15
//! dimension 8               # f2dim <n> for additive codes
//! dmin 6 bch-bound          # or: dmin none
//! dexact 6                  # optional; re-verified by enumeration on load
//! construct bch defining 0,1,2,3,4,8,12
//! row 100000001...          # generator rows, symbols 0..3, spaces optional
//! ```
//!
//! A Goppa construction line reads
//! `construct goppa field <m>:<hex modulus> poly <hex coeffs> locators <hex list>`,
//! coefficients lowest degree first. Construction lines are rebuilt on load
//! and must reproduce the listed rows.
//!
//! Word file:
//!
//! ```text
//! word v1
//! length 3
//! x 012
//! x2 300
//! ```

use std::fmt::Write as _;
use std::sync::Arc;

use crate::codes::{
    additive_build, bch_build, goppa_build, BaseField, BchCode, BchSpec, DefiningSet, DistanceBound, DistanceTag,
    GoppaCode, LinearCode, DEFAULT_BUDGET,
};
use crate::error::{Error, Result};
use crate::gf2m::{from_symbols, to_symbols, Fe, FieldContext, Gf4, Poly};
use crate::sumrank::{Component, SrWord};

/// How a stored code was built, so that algebraic decoders can be rebuilt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Bch { defining_set: Vec<usize> },
    Goppa { field_degree: u32, modulus: u32, poly: Vec<u32>, locators: Vec<u32> },
}

/// A code together with its optional construction record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFile {
    pub component: Component,
    pub construction: Option<Construction>,
}

/// A code file rebuilt into the richest available form.
#[derive(Clone, Debug)]
pub enum Structured {
    Bch(BchCode),
    Goppa(GoppaCode),
    Plain(Component),
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn hex_list(s: &str, line: usize) -> Result<Vec<u32>> {
    s.split(',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            u32::from_str_radix(t.trim_start_matches("0x"), 16).map_err(|_| perr(line, format!("bad hex value '{t}'")))
        })
        .collect()
}

fn dec_list(s: &str, line: usize) -> Result<Vec<usize>> {
    s.split(',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| perr(line, format!("bad integer '{t}'"))))
        .collect()
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl CodeFile {
    pub fn new(component: impl Into<Component>) -> CodeFile {
        CodeFile { component: component.into(), construction: None }
    }

    pub fn from_bch(code: &BchCode) -> CodeFile {
        CodeFile {
            component: Component::Linear(code.code().clone()),
            construction: Some(Construction::Bch { defining_set: code.defining_set().iter().collect() }),
        }
    }

    pub fn from_goppa(code: &GoppaCode) -> CodeFile {
        let f = code.field();
        CodeFile {
            component: Component::Linear(code.code().clone()),
            construction: Some(Construction::Goppa {
                field_degree: f.degree(),
                modulus: f.modulus(),
                poly: code.goppa_poly().coeffs().iter().map(|c| c.0).collect(),
                locators: code.locators().iter().map(|a| a.0).collect(),
            }),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("code v1\n");
        let (base, kind, length, dim_line, designed, exact, rows) = match &self.component {
            Component::Linear(c) => (
                c.base().as_str(),
                "linear",
                c.length(),
                format!("dimension {}", c.dimension()),
                c.designed_distance(),
                c.exact_distance(),
                c.generator().to_vec(),
            ),
            Component::Additive(c) => (
                "gf4",
                "additive",
                c.length(),
                format!("f2dim {}", c.f2_dimension()),
                c.designed_distance(),
                c.exact_distance(),
                c.basis().to_vec(),
            ),
        };
        let _ = writeln!(s, "field {base}\nkind {kind}\nlength {length}\n{dim_line}");
        match designed {
            Some(b) => {
                let _ = writeln!(s, "dmin {} {}", b.value, b.tag);
            }
            None => s.push_str("dmin none\n"),
        }
        if let Some(d) = exact {
            let _ = writeln!(s, "dexact {d}");
        }
        match &self.construction {
            Some(Construction::Bch { defining_set }) => {
                let _ = writeln!(s, "construct bch defining {}", join(defining_set));
            }
            Some(Construction::Goppa { field_degree, modulus, poly, locators }) => {
                let hex = |v: &[u32]| v.iter().map(|x| format!("{x:x}")).collect::<Vec<_>>().join(",");
                let _ = writeln!(
                    s,
                    "construct goppa field {field_degree}:{modulus:x} poly {} locators {}",
                    hex(poly),
                    hex(locators)
                );
            }
            None => {}
        }
        for r in rows {
            let _ = writeln!(s, "row {}", to_symbols(&r));
        }
        s
    }

    pub fn parse(text: &str) -> Result<CodeFile> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        match lines.next() {
            Some((_, "code v1")) => {}
            Some((n, other)) => return Err(perr(n, format!("expected 'code v1', found '{other}'"))),
            None => return Err(perr(0, "empty code file")),
        }
        let mut base = None;
        let mut additive = None;
        let mut length = None;
        let mut dim = None;
        let mut designed: Option<Option<DistanceBound>> = None;
        let mut exact = None;
        let mut construction = None;
        let mut construct_line = 0;
        let mut rows = Vec::new();
        for (n, line) in lines {
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let num = |s: &str| s.parse::<usize>().map_err(|_| perr(n, format!("bad integer '{s}'")));
            match key {
                "field" => {
                    base = Some(match rest {
                        "gf2" | "gf(2^1):0x3" | "gf(2^1):3" => BaseField::Gf2,
                        "gf4" | "gf(2^2):0x7" | "gf(2^2):7" => BaseField::Gf4,
                        other => {
                            return Err(perr(
                                n,
                                format!("unsupported field '{other}'; component codes are over gf2 or gf4"),
                            ))
                        }
                    })
                }
                "kind" => {
                    additive = Some(match rest {
                        "linear" => false,
                        "additive" => true,
                        other => return Err(perr(n, format!("unknown kind '{other}'"))),
                    })
                }
                "length" => length = Some(num(rest)?),
                "dimension" | "f2dim" => dim = Some((key, num(rest)?)),
                "dmin" => {
                    designed = Some(if rest == "none" {
                        None
                    } else {
                        let (d, tag) =
                            rest.split_once(char::is_whitespace).ok_or_else(|| perr(n, "expected 'dmin <d> <tag>'"))?;
                        let tag: DistanceTag = tag.trim().parse().map_err(|e: String| perr(n, e))?;
                        Some(DistanceBound::new(num(d)?, tag))
                    })
                }
                "dexact" => exact = Some(num(rest)?),
                "construct" => {
                    construct_line = n;
                    construction = Some(parse_construction(rest, n)?);
                }
                "row" => {
                    rows.push(from_symbols(rest).ok_or_else(|| perr(n, "row symbols must be digits 0..3"))?);
                }
                other => return Err(perr(n, format!("unknown key '{other}'"))),
            }
        }
        let base = base.ok_or_else(|| perr(0, "missing 'field'"))?;
        let additive = additive.ok_or_else(|| perr(0, "missing 'kind'"))?;
        let length = length.ok_or_else(|| perr(0, "missing 'length'"))?;
        let (dim_key, dim) = dim.ok_or_else(|| perr(0, "missing 'dimension' or 'f2dim'"))?;
        let designed = designed.ok_or_else(|| perr(0, "missing 'dmin'"))?;
        if (dim_key == "f2dim") != additive {
            return Err(perr(0, "linear codes use 'dimension', additive codes use 'f2dim'"));
        }
        if rows.len() != dim {
            return Err(perr(0, format!("declared {dim} rows, found {}", rows.len())));
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != length) {
            return Err(perr(0, format!("row {} has length {}, expected {length}", i + 1, r.len())));
        }
        let component = if additive {
            if base != BaseField::Gf4 {
                return Err(perr(0, "additive codes are over gf4"));
            }
            let built = additive_build(length, &rows)?;
            if built.dropped > 0 || built.code.basis() != rows.as_slice() {
                return Err(perr(0, "additive rows must be a reduced GF(2) basis"));
            }
            let mut code = built.code;
            if let Some(b) = designed {
                code = code.with_designed_distance(b);
            }
            if let Some(d) = exact {
                code.set_exact_distance(d, DEFAULT_BUDGET)?;
            }
            Component::Additive(code)
        } else {
            let mut code = LinearCode::from_generator(base, length, rows.clone())?;
            if code.generator() != rows.as_slice() {
                return Err(perr(0, "linear rows must be a generator matrix in reduced row echelon form"));
            }
            if let Some(b) = designed {
                code = code.with_designed_distance(b);
            }
            if let Some(d) = exact {
                code.set_exact_distance(d, DEFAULT_BUDGET)?;
            }
            Component::Linear(code)
        };
        let file = CodeFile { component, construction };
        if file.construction.is_some() {
            let rebuilt = file.structured().map_err(|e| perr(construct_line, e.to_string()))?;
            let same = match (&rebuilt, &file.component) {
                (Structured::Bch(b), Component::Linear(c)) => b.code().same_code(c),
                (Structured::Goppa(g), Component::Linear(c)) => g.code().same_code(c),
                _ => false,
            };
            if !same {
                return Err(perr(construct_line, "construction does not reproduce the listed rows"));
            }
        }
        Ok(file)
    }

    /// Rebuilds the BCH or Goppa code named by the construction line.
    pub fn structured(&self) -> Result<Structured> {
        let base = match &self.component {
            Component::Linear(c) => c.base(),
            Component::Additive(_) => return Ok(Structured::Plain(self.component.clone())),
        };
        match &self.construction {
            None => Ok(Structured::Plain(self.component.clone())),
            Some(Construction::Bch { defining_set }) => {
                let n = self.component.length();
                let t = DefiningSet::from_exponents(4, n, defining_set.iter().copied())?;
                Ok(Structured::Bch(bch_build(n, BchSpec::DefiningSet(t))?))
            }
            Some(Construction::Goppa { field_degree, modulus, poly, locators }) => {
                let field = Arc::new(FieldContext::new(*field_degree, Some(*modulus))?);
                let g = Poly::from_coeffs(poly.iter().map(|&c| field.element(c)).collect::<Result<_>>()?);
                let l = locators.iter().map(|&a| field.element(a)).collect::<Result<Vec<Fe>>>()?;
                Ok(Structured::Goppa(goppa_build(field, l, g, base)?))
            }
        }
    }

    pub fn load(path: &std::path::Path) -> Result<CodeFile> {
        let text = std::fs::read_to_string(path).map_err(|e| perr(0, format!("{}: {e}", path.display())))?;
        CodeFile::parse(&text)
    }
}

fn parse_construction(rest: &str, n: usize) -> Result<Construction> {
    let toks: Vec<&str> = rest.split_whitespace().collect();
    match toks.as_slice() {
        ["bch", "defining", list] => Ok(Construction::Bch { defining_set: dec_list(list, n)? }),
        ["bch", "defining"] => Ok(Construction::Bch { defining_set: Vec::new() }),
        ["goppa", "field", spec, "poly", poly, "locators", locs] => {
            let (m, modulus) = spec.split_once(':').ok_or_else(|| perr(n, "expected field <m>:<hex modulus>"))?;
            let field_degree = m.parse().map_err(|_| perr(n, format!("bad degree '{m}'")))?;
            let modulus = hex_list(modulus, n)?.first().copied().ok_or_else(|| perr(n, "missing modulus"))?;
            Ok(Construction::Goppa { field_degree, modulus, poly: hex_list(poly, n)?, locators: hex_list(locs, n)? })
        }
        _ => Err(perr(n, format!("unrecognized construction '{rest}'"))),
    }
}

/// Serializes an [`SrWord`].
pub fn word_to_text(w: &SrWord) -> String {
    format!("word v1\nlength {}\nx {}\nx2 {}\n", w.len(), to_symbols(w.coeff_x()), to_symbols(w.coeff_x2()))
}

/// Parses an [`SrWord`].
pub fn word_from_text(text: &str) -> Result<SrWord> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, "word v1")) => {}
        Some((n, other)) => return Err(perr(n, format!("expected 'word v1', found '{other}'"))),
        None => return Err(perr(0, "empty word file")),
    }
    let (mut length, mut x, mut x2) = (None, None, None);
    for (n, line) in lines {
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let sym = |s: &str| from_symbols(s).ok_or_else(|| perr(n, "symbols must be digits 0..3"));
        match key {
            "length" => length = Some(rest.trim().parse::<usize>().map_err(|_| perr(n, "bad length"))?),
            "x" => x = Some(sym(rest)?),
            "x2" => x2 = Some(sym(rest)?),
            other => return Err(perr(n, format!("unknown key '{other}'"))),
        }
    }
    let length = length.ok_or_else(|| perr(0, "missing 'length'"))?;
    let x: Vec<Gf4> = x.ok_or_else(|| perr(0, "missing 'x'"))?;
    let x2: Vec<Gf4> = x2.ok_or_else(|| perr(0, "missing 'x2'"))?;
    if x.len() != length || x2.len() != length {
        return Err(perr(0, format!("word rows must have length {length}")));
    }
    SrWord::new(x, x2)
}
