//! Ring selector syntax: `z`, `q[x,y]`, `fp[x]:5`, `zsqrt:-5`, `coord:5`.

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Z,
    QPoly(Vec<String>),
    FpPoly(u64, Vec<String>),
    ZSqrt(i64),
    Coord(u64),
}

fn parse_vars(src: &str) -> Result<Vec<String>, CliError> {
    let vars: Vec<String> = src
        .split(',')
        .map(|v| v.trim().to_string())
        .filter(|v| !v.is_empty())
        .collect();
    if vars.is_empty() {
        return Err(CliError::Usage("variable list is empty".into()));
    }
    for v in &vars {
        let mut chars = v.chars();
        let head_ok = chars
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
        if !head_ok || !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(CliError::Usage(format!("bad variable name `{v}`")));
        }
    }
    Ok(vars)
}

pub fn parse_ring(src: &str) -> Result<RingSpec, CliError> {
    let s = src.trim();
    if s == "z" {
        return Ok(RingSpec::Z);
    }
    if let Some(rest) = s.strip_prefix("q[") {
        let body = rest
            .strip_suffix(']')
            .ok_or_else(|| CliError::Usage(format!("bad ring selector `{src}`")))?;
        return Ok(RingSpec::QPoly(parse_vars(body)?));
    }
    if let Some(rest) = s.strip_prefix("fp[") {
        let (body, p) = rest
            .split_once("]:")
            .ok_or_else(|| CliError::Usage(format!("bad ring selector `{src}`")))?;
        let p: u64 = p
            .parse()
            .map_err(|_| CliError::Usage(format!("bad modulus in `{src}`")))?;
        return Ok(RingSpec::FpPoly(p, parse_vars(body)?));
    }
    if let Some(d) = s.strip_prefix("zsqrt:") {
        let d: i64 = d
            .parse()
            .map_err(|_| CliError::Usage(format!("bad discriminant in `{src}`")))?;
        return Ok(RingSpec::ZSqrt(d));
    }
    if let Some(p) = s.strip_prefix("coord:") {
        let p: u64 = p
            .parse()
            .map_err(|_| CliError::Usage(format!("bad modulus in `{src}`")))?;
        return Ok(RingSpec::Coord(p));
    }
    Err(CliError::Usage(format!(
        "unknown ring selector `{src}` (expected z, q[vars], fp[vars]:p, zsqrt:d or coord:p)"
    )))
}

/// The trial-division bound, overridable through DIVFORGE_FACTOR_BOUND.
pub fn factor_bound() -> Result<u64, CliError> {
    match std::env::var("DIVFORGE_FACTOR_BOUND") {
        Err(_) => Ok(divforge_core::quadratic::DEFAULT_FACTOR_BOUND),
        Ok(v) => v
            .parse()
            .map_err(|_| CliError::Usage(format!("bad DIVFORGE_FACTOR_BOUND `{v}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors() {
        assert_eq!(parse_ring("z").unwrap(), RingSpec::Z);
        assert_eq!(
            parse_ring("q[x,y]").unwrap(),
            RingSpec::QPoly(vec!["x".into(), "y".into()])
        );
        assert_eq!(
            parse_ring("fp[x]:5").unwrap(),
            RingSpec::FpPoly(5, vec!["x".into()])
        );
        assert_eq!(parse_ring("zsqrt:-5").unwrap(), RingSpec::ZSqrt(-5));
        assert_eq!(parse_ring("coord:5").unwrap(), RingSpec::Coord(5));
        assert!(parse_ring("q[]").is_err());
        assert!(parse_ring("nope").is_err());
        assert!(matches!(parse_ring("fp[x]"), Err(CliError::Usage(_))));
    }
}
