//! Text formats for fields and coordinates.
//!
//! * Field specs: `"p"`, `"p^k"` or `"p^k/c0,c1,...,ck"` (modulus
//!   coefficients low-to-high, monic).
//! * Scalars: an integer `n`, a fraction `a/b` (resolved in the field), or
//!   `@e` for the element whose canonical encoding is `e`.

use crate::algebra::field::{Field, FieldElem};
use crate::error::{Error, Result};

fn parse_u64(s: &str) -> Result<u64> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| Error::Parse(format!("expected a non-negative integer, got {s:?}")))
}

pub fn parse_field_spec(spec: &str) -> Result<Field> {
    let (head, modulus) = match spec.split_once('/') {
        Some((h, m)) => (h, Some(m)),
        None => (spec, None),
    };
    let (p, k) = match head.split_once('^') {
        Some((p, k)) => (parse_u64(p)?, parse_u64(k)?),
        None => (parse_u64(head)?, 1),
    };
    let k = u32::try_from(k).map_err(|_| Error::Parse(format!("degree {k} too large")))?;
    match modulus {
        None => Field::new(p, k, None),
        Some(m) => {
            let coeffs = m.split(',').map(parse_u64).collect::<Result<Vec<_>>>()?;
            Field::new(p, k, Some(&coeffs))
        }
    }
}

pub fn parse_scalar<'f>(field: &'f Field, token: &str) -> Result<FieldElem<'f>> {
    let token = token.trim();
    if let Some(enc) = token.strip_prefix('@') {
        return field
            .try_elem(parse_u64(enc)?)
            .ok_or_else(|| Error::Parse(format!("encoding {enc} out of range")));
    }
    let int = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("expected an integer, got {s:?}")))
    };
    match token.split_once('/') {
        Some((a, b)) => field
            .frac(int(a)?, int(b)?)
            .ok_or_else(|| Error::Parse(format!("denominator of {token:?} vanishes in the field"))),
        None => Ok(field.int(int(token)?)),
    }
}

/// Comma-separated scalars; `expected` is the required count, if any.
pub fn parse_coords<'f>(
    field: &'f Field,
    text: &str,
    expected: Option<usize>,
) -> Result<Vec<FieldElem<'f>>> {
    let coords = text
        .split(',')
        .map(|t| parse_scalar(field, t))
        .collect::<Result<Vec<_>>>()?;
    if let Some(n) = expected {
        if coords.len() != n {
            return Err(Error::Parse(format!(
                "expected {n} coordinates, got {}",
                coords.len()
            )));
        }
    }
    Ok(coords)
}
