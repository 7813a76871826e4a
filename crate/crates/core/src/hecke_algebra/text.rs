//! Text notation for Hecke algebra elements.
//!
//! An element is a sum of terms separated by `+` or `-`. A term is a product of
//! factors joined by `*`: a rational coefficient (`3/2`), `xk^e` or `xk`
//! (`1 ≤ k ≤ d`), `sk` (`1 ≤ k < d`) or a permutation `[w(1),…,w(d)]` in
//! 1-based one-line notation. Factors multiply left to right in the algebra,
//! so any word is accepted and reduced to normal form. The formatter writes
//! normal form as `c*x1^r1*…*xd^rd*[w]`, or `0` for the zero element.

use std::sync::Arc;

use crate::exact_linear::Scalar;

use super::algebra::{HeckeAlgebra, HeckeElement};
use super::perm::Perm;
use super::HeckeError;

/// Formats an element in normal form.
pub fn format_element(h: &HeckeElement) -> String {
    if h.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in h.terms().iter().enumerate() {
        let (sign, abs) = if c.is_negative() {
            ("-", -c)
        } else {
            ("+", c.clone())
        };
        if i == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        out.push_str(&abs.to_string());
        for (k, e) in m.exps.iter().enumerate() {
            out.push_str(&format!("*x{}^{}", k + 1, e));
        }
        out.push_str(&format!("*{}", m.perm));
    }
    out
}

impl std::fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_element(self))
    }
}

fn parse_err(msg: impl Into<String>) -> HeckeError {
    HeckeError::Parse(msg.into())
}

fn parse_factor(alg: &Arc<HeckeAlgebra>, f: &str) -> Result<HeckeElement, HeckeError> {
    let d = alg.d();
    if let Some(body) = f.strip_prefix('[') {
        let body = body
            .strip_suffix(']')
            .ok_or_else(|| parse_err(format!("unclosed permutation `{f}`")))?;
        let vals: Vec<usize> = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|v| {
                    v.trim()
                        .parse::<usize>()
                        .ok()
                        .and_then(|x| x.checked_sub(1))
                })
                .collect::<Option<_>>()
                .ok_or_else(|| parse_err(format!("bad permutation `{f}`")))?
        };
        let w = Perm::from_one_line(&vals)
            .ok_or_else(|| parse_err(format!("not a permutation `{f}`")))?;
        if w.degree() != d {
            return Err(parse_err(format!(
                "permutation `{f}` has degree {}, expected {d}",
                w.degree()
            )));
        }
        return Ok(alg.perm(&w));
    }
    if let Some(body) = f.strip_prefix('x') {
        let (k, e) = match body.split_once('^') {
            Some((k, e)) => (
                k,
                e.parse::<u32>()
                    .map_err(|_| parse_err(format!("bad exponent in `{f}`")))?,
            ),
            None => (body, 1),
        };
        let k: usize = k
            .parse()
            .map_err(|_| parse_err(format!("bad index in `{f}`")))?;
        return Ok(alg.x(k)?.pow(e));
    }
    if let Some(body) = f.strip_prefix('s') {
        let k: usize = body
            .parse()
            .map_err(|_| parse_err(format!("bad index in `{f}`")))?;
        return alg.s(k);
    }
    let c: Scalar = f
        .parse()
        .map_err(|_| parse_err(format!("unknown factor `{f}`")))?;
    Ok(alg.scalar(&c))
}

fn parse_term(alg: &Arc<HeckeAlgebra>, t: &str) -> Result<HeckeElement, HeckeError> {
    let mut acc = alg.one();
    for f in t.split('*') {
        let f = f.trim();
        if f.is_empty() {
            return Err(parse_err(format!("empty factor in `{t}`")));
        }
        acc = acc.mul(&parse_factor(alg, f)?)?;
    }
    Ok(acc)
}

/// Parses an element and reduces it to normal form.
pub fn parse_element(alg: &Arc<HeckeAlgebra>, s: &str) -> Result<HeckeElement, HeckeError> {
    let mut total = alg.zero();
    let mut depth = 0usize;
    let mut start = 0usize;
    let mut sign = Scalar::one();
    let bytes = s.as_bytes();
    let mut pieces: Vec<(Scalar, &str)> = Vec::new();
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            '+' | '-' if depth == 0 => {
                // A sign directly after `/` or `*` belongs to a coefficient.
                let prev = s[..i].trim_end().chars().last();
                if matches!(prev, Some('*') | Some('/') | Some('^')) {
                    continue;
                }
                pieces.push((sign.clone(), &s[start..i]));
                sign = if bytes[i] == b'-' {
                    Scalar::from_int(-1)
                } else {
                    Scalar::one()
                };
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push((sign, &s[start..]));
    let mut seen_term = false;
    for (i, (sign, piece)) in pieces.iter().enumerate() {
        let piece = piece.trim();
        if piece.is_empty() {
            if i == 0 {
                continue;
            }
            return Err(parse_err("dangling sign"));
        }
        seen_term = true;
        if piece == "0" {
            continue;
        }
        total = total.add_scaled(sign, &parse_term(alg, piece)?)?;
    }
    if !seen_term {
        return Err(parse_err("empty expression"));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke_algebra::CyclotomicParams;

    #[test]
    fn round_trip() {
        let h = HeckeAlgebra::new(CyclotomicParams::cyclotomic(
            3,
            vec![Scalar::zero(), Scalar::new(-1, 2)],
        ));
        let e = parse_element(&h, "3/2*x1^1*x2^0*[2,1,3] - x3*s1 + 2").unwrap();
        let text = format_element(&e);
        assert_eq!(parse_element(&h, &text).unwrap(), e);
        assert_eq!(format_element(&h.zero()), "0");
        assert_eq!(parse_element(&h, "0").unwrap(), h.zero());
    }

    #[test]
    fn generator_relation_in_text() {
        let h = HeckeAlgebra::new(CyclotomicParams::affine(2));
        let lhs = parse_element(&h, "s1*x2").unwrap();
        assert_eq!(
            format_element(&lhs),
            "1*x1^0*x2^0*[1,2] + 1*x1^1*x2^0*[2,1]"
        );
        let neg = parse_element(&h, "-1/2*x1").unwrap();
        assert_eq!(format_element(&neg), "-1/2*x1^1*x2^0*[1,2]");
    }

    #[test]
    fn rejects_garbage() {
        let h = HeckeAlgebra::new(CyclotomicParams::affine(2));
        assert!(parse_element(&h, "x3").is_err());
        assert!(parse_element(&h, "[1,1]").is_err());
        assert!(parse_element(&h, "y1").is_err());
        assert!(parse_element(&h, "").is_err());
        assert!(parse_element(&h, "x1 +").is_err());
    }
}
