use super::{Basis, MotifParameter};
use crate::error::{Error, Result};
use crate::graph::parse_graph6;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

fn parse_rational(s: &str, at: usize) -> Result<BigRational> {
    let bad = || Error::parse(at, format!("malformed rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits(unsigned) || den.is_some_and(|d| !digits(d)) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => 1.into(),
    };
    if d.is_zero() {
        return Err(Error::parse(at, "zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

/// Reads the text format written by `MotifParameter`'s `Display`.
/// Blank lines and `#` comments are ignored; repeated classes are summed.
pub fn parse_motif(text: &str) -> Result<MotifParameter> {
    let mut param: Option<MotifParameter> = None;
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let at = offset;
        offset += line.len();
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (a, b) = (fields.next().unwrap(), fields.next());
        if fields.next().is_some() {
            return Err(Error::parse(at, format!("too many fields in `{line}`")));
        }
        let Some(b) = b else {
            return Err(Error::parse(at, format!("expected two fields in `{line}`")));
        };
        match &mut param {
            None => {
                if a != "basis" {
                    return Err(Error::parse(at, "first line must be `basis <name>`"));
                }
                let basis: Basis = b.parse().map_err(|e: Error| Error::parse(at, e.to_string()))?;
                param = Some(MotifParameter::new(basis));
            }
            Some(p) => {
                let c = parse_rational(a, at)?;
                let g = parse_graph6(b).map_err(|e| match e {
                    Error::Parse { offset, message } => Error::parse(at + line.find(b).unwrap_or(0) + offset, message),
                    other => other,
                })?;
                p.add(&g, c);
            }
        }
    }
    param.ok_or_else(|| Error::parse(0, "missing `basis` line"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "basis sub\n1/2 DDW\n-1 CR\n3 Bw\n";
        let p = parse_motif(text).unwrap();
        assert_eq!(p.len(), 3);
        let again = parse_motif(&p.to_string()).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn duplicates_cancel() {
        let p = parse_motif("basis hom\n1 Bw\n-1 Bw\n2 A_\n").unwrap();
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn errors() {
        assert!(parse_motif("1 Bw\n").is_err());
        assert!(parse_motif("basis foo\n").is_err());
        assert!(parse_motif("basis hom\n1/0 Bw\n").is_err());
        assert!(parse_motif("basis hom\n+1 Bw\n").is_err());
        assert!(parse_motif("basis hom\n1 B\n").is_err());
        assert!(parse_motif("").is_err());
    }
}
