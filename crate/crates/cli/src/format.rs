//! The `.lal` text format for structure-constant Leibniz algebras.
//!
//! ```text
//! # optional comments
//! field: GF(5)          (or: field: Q)
//! dim: 3
//! basis: x y z
//! x z = x
//! z x = -x
//! z y = y
//! y z = -y
//! ```
//!
//! Omitted products are zero. Coefficients are integers or fractions
//! `num/den`; terms look like `x`, `-x`, `3*x` or `-1/2*x`. Parsing ends
//! with the full structure-constant validation, so a parsed algebra is
//! always a Leibniz algebra.

use std::fmt;

use leibniz_core::field::{format_combination, FieldSpec, Scalar};
use leibniz_core::algebra::Product;
use leibniz_core::{Error, LeibnizAlgebra};

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.reason)
        } else {
            write!(f, "line {}: {}", self.line, self.reason)
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError {
        line,
        reason: reason.into(),
    }
}

pub fn parse_field(text: &str) -> Result<FieldSpec, String> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    let inner = t
        .strip_prefix("GF(")
        .or_else(|| t.strip_prefix("gf("))
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| format!("unknown field '{t}' (expected Q or GF(p))"))?;
    let p: u32 = inner
        .trim()
        .parse()
        .map_err(|_| format!("bad modulus '{inner}'"))?;
    FieldSpec::prime_field(p).map_err(|e| e.to_string())
}

/// Parse a linear combination of named basis elements, e.g.
/// "a2 + 4*a3", "-x", "3/2*y - z" or "0".
pub fn parse_combination(
    field: FieldSpec,
    names: &[String],
    text: &str,
) -> Result<Vec<Scalar>, String> {
    let mut coords = vec![field.zero(); names.len()];
    let text = text.trim();
    if text.is_empty() {
        return Err(String::from("empty expression"));
    }
    // split into signed terms
    let mut terms: Vec<(i64, String)> = Vec::new();
    let mut sign = 1i64;
    let mut current = String::new();
    for c in text.chars() {
        match c {
            '+' | '-' => {
                if current.trim().is_empty() && c == '-' {
                    sign = -sign;
                } else if current.trim().is_empty() {
                    // leading '+' is allowed
                } else {
                    terms.push((sign, current.trim().to_string()));
                    current.clear();
                    sign = if c == '-' { -1 } else { 1 };
                }
            }
            _ => current.push(c),
        }
    }
    if !current.trim().is_empty() {
        terms.push((sign, current.trim().to_string()));
    } else if terms.is_empty() {
        return Err(format!("no terms in '{text}'"));
    }

    for (sign, term) in terms {
        let (coeff_text, name_text) = match term.split_once('*') {
            Some((c, n)) => (Some(c.trim().to_string()), n.trim().to_string()),
            None => (None, term.clone()),
        };
        // a bare number is only meaningful when it is zero
        if coeff_text.is_none() && name_text.chars().all(|c| c.is_ascii_digit() || c == '/') {
            let c = parse_coefficient(field, &name_text)?;
            if c.is_zero() {
                continue;
            }
            return Err(format!("constant term '{name_text}' has no basis meaning"));
        }
        let idx = names
            .iter()
            .position(|n| *n == name_text)
            .ok_or_else(|| format!("unknown basis element '{name_text}'"))?;
        let mut c = match coeff_text {
            Some(t) => parse_coefficient(field, &t)?,
            None => field.one(),
        };
        if sign < 0 {
            c = -&c;
        }
        coords[idx] = &coords[idx] + &c;
    }
    Ok(coords)
}

fn parse_coefficient(field: FieldSpec, text: &str) -> Result<Scalar, String> {
    let t = text.trim();
    match t.split_once('/') {
        Some((num, den)) => {
            let n: i64 = num.trim().parse().map_err(|_| format!("bad numerator '{num}'"))?;
            let d: i64 = den.trim().parse().map_err(|_| format!("bad denominator '{den}'"))?;
            field.scalar_from_fraction(n, d).map_err(|e| e.to_string())
        }
        None => {
            let n: i64 = t.parse().map_err(|_| format!("bad coefficient '{t}'"))?;
            Ok(field.scalar_from_i64(n))
        }
    }
}

/// Parse `--ideal`-style input: comma-separated linear combinations.
pub fn parse_generators(
    field: FieldSpec,
    names: &[String],
    text: &str,
) -> Result<Vec<Vec<Scalar>>, String> {
    text.split(',')
        .map(|part| parse_combination(field, names, part))
        .collect()
}

pub fn parse_lal(text: &str) -> Result<LeibnizAlgebra, ParseError> {
    let mut field: Option<FieldSpec> = None;
    let mut dim: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut products: Vec<Product> = Vec::new();
    let mut seen_pairs: Vec<(usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("field:") {
            if field.is_some() {
                return Err(err(lineno, "duplicate field line"));
            }
            field = Some(parse_field(rest).map_err(|e| err(lineno, e))?);
            continue;
        }
        if let Some(rest) = line.strip_prefix("dim:") {
            if dim.is_some() {
                return Err(err(lineno, "duplicate dim line"));
            }
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| err(lineno, format!("bad dimension '{}'", rest.trim())))?;
            dim = Some(n);
            continue;
        }
        if let Some(rest) = line.strip_prefix("basis:") {
            if names.is_some() {
                return Err(err(lineno, "duplicate basis line"));
            }
            let list: Vec<String> = rest.split_whitespace().map(|s| s.to_string()).collect();
            names = Some(list);
            continue;
        }
        // product line: "<name> <name> = rhs"
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| err(lineno, "expected a header line or 'ei ej = ...'"))?;
        let field = field.ok_or_else(|| err(lineno, "product line before 'field:'"))?;
        let dim = dim.ok_or_else(|| err(lineno, "product line before 'dim:'"))?;
        let names = names.get_or_insert_with(|| (1..=dim).map(|i| format!("e{i}")).collect());
        if names.len() != dim {
            return Err(err(
                lineno,
                format!("basis lists {} names for dimension {dim}", names.len()),
            ));
        }
        let factors: Vec<&str> = lhs.split_whitespace().collect();
        let [left, right] = factors.as_slice() else {
            return Err(err(lineno, "the left side must be exactly two basis names"));
        };
        let i = names
            .iter()
            .position(|n| n == left)
            .ok_or_else(|| err(lineno, format!("unknown basis element '{left}'")))?;
        let j = names
            .iter()
            .position(|n| n == right)
            .ok_or_else(|| err(lineno, format!("unknown basis element '{right}'")))?;
        if seen_pairs.contains(&(i, j)) {
            return Err(err(lineno, format!("duplicate product line for {left} {right}")));
        }
        seen_pairs.push((i, j));
        let coords = parse_combination(field, names, rhs).map_err(|e| err(lineno, e))?;
        let terms: Vec<(usize, Scalar)> = coords
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        products.push((i, j, terms));
    }

    let field = field.ok_or_else(|| err(0, "missing 'field:' line"))?;
    let dim = dim.ok_or_else(|| err(0, "missing 'dim:' line"))?;
    if let Some(ref n) = names {
        if n.len() != dim {
            return Err(err(0, format!("basis lists {} names for dimension {dim}", n.len())));
        }
    }
    LeibnizAlgebra::from_products(field, dim, names, &products).map_err(|e| match e {
        Error::LeibnizIdentityViolation { i, j, k, .. } => err(
            0,
            format!("the left Leibniz identity fails on the basis triple ({i}, {j}, {k})"),
        ),
        other => err(0, other.to_string()),
    })
}

/// Canonical emission; `parse(emit(a))` reproduces `a` exactly and
/// `emit` is a fixed point on parsed output.
pub fn emit_lal(a: &LeibnizAlgebra) -> String {
    let mut out = String::new();
    out.push_str(&format!("field: {}\n", a.field()));
    out.push_str(&format!("dim: {}\n", a.dim()));
    out.push_str(&format!("basis: {}\n", a.basis_names().join(" ")));
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let entry = a.tensor_entry(i, j);
            if entry.iter().all(|c| c.is_zero()) {
                continue;
            }
            out.push_str(&format!(
                "{} {} = {}\n",
                a.basis_names()[i],
                a.basis_names()[j],
                format_combination(entry, a.basis_names()),
            ));
        }
    }
    out
}
