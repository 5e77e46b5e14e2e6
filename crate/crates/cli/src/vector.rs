//! Parser for vectors written as `[("s1", 1), ("", 7)]`.

use anyhow::{bail, Context, Result};

/// `(word, scalar)` pairs, both as raw strings.
pub fn parse_terms(input: &str) -> Result<Vec<(String, String)>> {
    let body = input
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .context("vector must be a bracketed list such as [(\"s1\", 1)]")?;
    let mut terms = Vec::new();
    let mut rest = body.trim();
    while !rest.is_empty() {
        let inner_start = rest.strip_prefix('(').with_context(|| format!("expected `(` at `{rest}`"))?;
        let close = inner_start.find(')').with_context(|| format!("unclosed term at `{rest}`"))?;
        let inner = &inner_start[..close];
        let (word, scalar) =
            inner.rsplit_once(',').with_context(|| format!("term `({inner})` needs a word and a scalar"))?;
        let word = word.trim();
        let word = word
            .strip_prefix('"')
            .and_then(|w| w.strip_suffix('"'))
            .with_context(|| format!("word {word} must be quoted"))?;
        let scalar = scalar.trim();
        if scalar.is_empty() {
            bail!("missing scalar for word \"{word}\"");
        }
        terms.push((word.to_string(), scalar.to_string()));
        rest = inner_start[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
        }
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let t = parse_terms(r#"[("s1", 1), ("", 7)]"#).unwrap();
        assert_eq!(t, [("s1".to_string(), "1".to_string()), (String::new(), "7".to_string())]);
        let t = parse_terms(r#"[("s0*s1", -1/2)]"#).unwrap();
        assert_eq!(t[0].1, "-1/2");
        assert!(parse_terms("[]").unwrap().is_empty());
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_terms("(\"s1\", 1)").is_err());
        assert!(parse_terms("[(s1, 1)]").is_err());
        assert!(parse_terms("[(\"s1\")]").is_err());
        assert!(parse_terms("[(\"s1\", 1]").is_err());
    }
}
