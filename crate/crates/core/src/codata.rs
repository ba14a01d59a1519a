//! Measured-constant records: concise uncertainty notation, interval
//! construction, dataset loading, and the charge-based definition of
//! alpha.
//!
//! Record files are plain text, one record per line,
//! `name,year,value,note`, where `value` may use concise notation like
//! `0.007297352534(13)`; `#` starts a comment line.

use std::io::Read;


use crate::error::{FrcError, Result};
use crate::numerics::Scalar;

/// Bundled default dataset.
pub const BUNDLED_DATASET: &str = include_str!("../data/constants.txt");

/// A named measured constant with standard uncertainty.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantRecord<S> {
    pub name: String,
    pub year: i32,
    pub value: S,
    /// Standard uncertainty, >= 0.
    pub uncertainty: S,
    /// Decimal places of the value as written; kept so concise notation
    /// round-trips.
    pub places: usize,
    pub note: String,
}

impl<S: Scalar> ConstantRecord<S> {
    /// `(value - k u, value + k u)` for coverage factor `k`.
    pub fn interval_of(&self, k: &S) -> (S, S) {
        let half_width = k.clone() * self.uncertainty.clone();
        (
            self.value.clone() - half_width.clone(),
            self.value.clone() + half_width,
        )
    }

    /// The value rendered back in concise notation.
    pub fn concise(&self) -> String {
        format_concise(&self.value, &self.uncertainty, self.places)
    }
}

/// Basic physical constants in SI units.
#[derive(Clone, Debug, PartialEq)]
pub struct PhysicalConstants<S> {
    /// Elementary charge, coulomb.
    pub e: S,
    /// Vacuum permittivity, farad/meter.
    pub eps0: S,
    /// Reduced Planck constant, joule second.
    pub hbar: S,
    /// Speed of light, meter/second.
    pub c: S,
}

impl<S: Scalar> PhysicalConstants<S> {
    /// The 1986 recommended values.
    pub fn codata_1986() -> Self {
        let parse = |s: &str| S::from_decimal(s).expect("literal constant");
        PhysicalConstants {
            e: parse("1.60217733e-19"),
            eps0: parse("8.854187817e-12"),
            hbar: parse("1.05457266e-34"),
            c: parse("299792458"),
        }
    }
}

/// Parses concise uncertainty notation: the parenthesized digits scale to
/// the last decimal places of the value. Returns `(value, uncertainty)`.
pub fn parse_concise<S: Scalar>(text: &str) -> Result<(S, S)> {
    let (value, uncertainty, _) = parse_concise_parts(text)?;
    Ok((value, uncertainty))
}

/// As [`parse_concise`], also returning the number of decimal places the
/// value was written with.
pub fn parse_concise_parts<S: Scalar>(text: &str) -> Result<(S, S, usize)> {
    let text = text.trim();
    let err = |span: &str, msg: &str| FrcError::ParseValue {
        span: span.to_string(),
        msg: msg.to_string(),
    };
    let (number, unc_digits) = match text.find('(') {
        None => (text, None),
        Some(open) => {
            let Some(inner) = text[open..].strip_prefix('(').and_then(|t| t.strip_suffix(')'))
            else {
                return Err(err(&text[open..], "unterminated uncertainty group"));
            };
            if inner.is_empty() || !inner.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(
                    &text[open..],
                    "uncertainty group must be a nonempty digit string",
                ));
            }
            (&text[..open], Some(inner))
        }
    };
    let unsigned = number.strip_prefix(['+', '-']).unwrap_or(number);
    let (int_part, frac_part) = match unsigned.split_once('.') {
        Some((i, f)) => (i, f),
        None => (unsigned, ""),
    };
    let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
    if int_part.is_empty() && frac_part.is_empty()
        || !all_digits(int_part)
        || !all_digits(frac_part)
    {
        return Err(err(number, "not a decimal number"));
    }
    let places = frac_part.len();
    let value = S::from_decimal(number).ok_or_else(|| err(number, "not a decimal number"))?;
    let uncertainty = match unc_digits {
        None => S::zero(),
        Some(d) => {
            let scale = S::from_int(10).powi(-(places as i32));
            S::from_decimal(d).expect("digit string parses") * scale
        }
    };
    Ok((value, uncertainty, places))
}

/// Renders `(value, uncertainty)` in concise notation with the value at
/// `places` decimal places.
pub fn format_concise<S: Scalar>(value: &S, uncertainty: &S, places: usize) -> String {
    let body = value.format_places(places);
    if uncertainty.is_zero() {
        return body;
    }
    let scaled = uncertainty.clone() * S::from_int(10).powi(places as i32);
    let digits = scaled.format_places(0);
    format!("{body}({digits})")
}

/// Loads records from a byte stream; one record per line, file order
/// preserved, duplicate names rejected.
pub fn load_dataset<S: Scalar, R: Read>(mut source: R) -> Result<Vec<ConstantRecord<S>>> {
    let mut text = String::new();
    source.read_to_string(&mut text).map_err(|e| FrcError::Parse {
        line: 0,
        msg: format!("unreadable input: {e}"),
    })?;
    let mut records: Vec<ConstantRecord<S>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.splitn(4, ',');
        let name = fields.next().unwrap_or("").trim();
        let year = fields.next();
        let value = fields.next();
        let note = fields.next().unwrap_or("").trim();
        let (Some(year), Some(value)) = (year, value) else {
            return Err(FrcError::Parse {
                line: line_no,
                msg: "expected name,year,value[,note]".into(),
            });
        };
        if name.is_empty() {
            return Err(FrcError::Parse {
                line: line_no,
                msg: "empty record name".into(),
            });
        }
        if records.iter().any(|r| r.name == name) {
            return Err(FrcError::DuplicateName(name.to_string()));
        }
        let year: i32 = year.trim().parse().map_err(|_| FrcError::Parse {
            line: line_no,
            msg: format!("invalid year {:?}", year.trim()),
        })?;
        let (value, uncertainty, places) =
            parse_concise_parts(value.trim()).map_err(|e| FrcError::Parse {
                line: line_no,
                msg: e.to_string(),
            })?;
        records.push(ConstantRecord {
            name: name.to_string(),
            year,
            value,
            uncertainty,
            places,
            note: note.to_string(),
        });
    }
    Ok(records)
}

/// Parses the dataset bundled into the library.
pub fn bundled_dataset<S: Scalar>() -> Vec<ConstantRecord<S>> {
    load_dataset(BUNDLED_DATASET.as_bytes()).expect("bundled dataset is well formed")
}

/// Looks a record up by name.
pub fn find_record<'a, S>(
    records: &'a [ConstantRecord<S>],
    name: &str,
) -> Result<&'a ConstantRecord<S>> {
    records
        .iter()
        .find(|r| r.name == name)
        .ok_or_else(|| FrcError::UnknownRecord(name.to_string()))
}

/// `alpha_R = e^2/(4 pi eps0 hbar c)`. A zero charge is permitted as the
/// degenerate limit; the remaining fields must be positive.
pub fn alpha_from_charge<S: Scalar>(pc: &PhysicalConstants<S>) -> Result<S> {
    if pc.e < S::zero() {
        return Err(FrcError::Domain(format!("charge must be >= 0, got {}", pc.e)));
    }
    for (name, v) in [("eps0", &pc.eps0), ("hbar", &pc.hbar), ("c", &pc.c)] {
        if *v <= S::zero() {
            return Err(FrcError::Domain(format!("{name} must be > 0, got {v}")));
        }
    }
    let four_pi = S::from_int(4) * S::pi();
    Ok(pc.e.clone() * pc.e.clone()
        / (four_pi * pc.eps0.clone() * pc.hbar.clone() * pc.c.clone()))
}
