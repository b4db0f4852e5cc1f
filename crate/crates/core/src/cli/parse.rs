//! Transposition-set specifications.
//!
//! A spec is either an edge list of 1-based `a-b` tokens separated by
//! whitespace or commas, optionally with an `n=K` token fixing the number of
//! points (otherwise the largest point named), or a preset: `path:n`, `star:n`, `cycle:n`, or
//! `tree:p1,p2,...` with a 1-based Prüfer sequence. In edge lists `#` starts a
//! comment running to the end of the line. Error positions are byte offsets
//! into the input.

use crate::error::{Error, Result};
use crate::perm::Transposition;
use crate::tgraph::TranspositionSet;

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Tokens with their byte offsets, skipping separators and comments.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut line_start = 0;
    for line in text.split_inclusive('\n') {
        let body = line.split('#').next().unwrap_or("");
        let mut start = None;
        for (i, c) in body.char_indices() {
            let separator = c.is_whitespace() || c == ',';
            match (separator, start) {
                (true, Some(s)) => {
                    out.push((line_start + s, &body[s..i]));
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        if let Some(s) = start {
            out.push((line_start + s, &body[s..]));
        }
        line_start += line.len();
    }
    out
}

/// Largest point number accepted, so that hostile input cannot request
/// huge allocations before any cap is checked.
pub const MAX_POINT: usize = 1 << 16;

fn parse_point(text: &str, position: usize) -> Result<usize> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_error(position, format!("expected a positive integer, found {text:?}")));
    }
    match text.parse::<usize>() {
        Ok(0) => Err(parse_error(position, "points are numbered from 1")),
        Ok(p) if p <= MAX_POINT => Ok(p - 1),
        _ => Err(parse_error(position, format!("{text:?} exceeds {MAX_POINT}"))),
    }
}

fn parse_pair(token: &str, position: usize) -> Result<(usize, usize)> {
    let Some((a, b)) = token.split_once('-') else {
        return Err(parse_error(position, format!("expected a-b, found {token:?}")));
    };
    let a_point = parse_point(a, position)?;
    let b_point = parse_point(b, position + a.len() + 1)?;
    if a_point == b_point {
        return Err(parse_error(position, format!("{token:?} joins a point to itself")));
    }
    Ok((a_point, b_point))
}

/// Parses one 1-based `a-b` token, as used by `--t` and `--k`.
pub fn parse_transposition(token: &str) -> Result<Transposition> {
    let trimmed = token.trim_start();
    let offset = token.len() - trimmed.len();
    let (a, b) = parse_pair(trimmed.trim_end(), offset)?;
    Transposition::new(a, b)
}

fn parse_count(text: &str, position: usize, min: usize) -> Result<usize> {
    let n = parse_point(text, position)? + 1;
    if n < min {
        return Err(parse_error(position, format!("parameter must be at least {min}, got {n}")));
    }
    Ok(n)
}

fn parse_preset(name: &str, param: &str, position: usize) -> Result<TranspositionSet> {
    let built = match name {
        "path" => TranspositionSet::path(parse_count(param, position, 2)?),
        "star" => TranspositionSet::star(parse_count(param, position, 2)?),
        "cycle" => TranspositionSet::cycle(parse_count(param, position, 3)?),
        "tree" => {
            let mut sequence = Vec::new();
            let mut offset = position;
            if !param.is_empty() {
                for part in param.split(',') {
                    sequence.push(parse_point(part, offset)?);
                    offset += part.len() + 1;
                }
            }
            let n = sequence.len() + 2;
            if let Some(i) = sequence.iter().position(|&x| x >= n) {
                return Err(parse_error(
                    position,
                    format!("Prüfer entry {} exceeds n = {n}", sequence[i] + 1),
                ));
            }
            TranspositionSet::from_prufer(&sequence)
        }
        _ => return Err(parse_error(position - name.len() - 1, format!("unknown preset {name:?}"))),
    };
    built.map_err(|e| parse_error(position, e.to_string()))
}

/// Parses an edge list or a preset into a transposition set on `n` points,
/// where `n` is the largest point named.
pub fn parse_spec(text: &str) -> Result<TranspositionSet> {
    let toks = tokens(text);
    let Some(&(first_pos, first)) = toks.first() else {
        return Err(parse_error(0, "empty specification"));
    };
    if first.contains(':') {
        let rest = &text[first_pos..];
        let end = rest.find(|c: char| c.is_whitespace() || c == '#').unwrap_or(rest.len());
        if let Some(&(pos, extra)) = toks.iter().find(|(pos, _)| *pos >= first_pos + end) {
            return Err(parse_error(pos, format!("unexpected {extra:?} after preset")));
        }
        let (name, param) = rest[..end].split_once(':').expect("token holds a colon");
        return parse_preset(name, param, first_pos + name.len() + 1);
    }
    let mut pairs = Vec::with_capacity(toks.len());
    let mut seen = std::collections::BTreeSet::new();
    let mut n = 0;
    let mut declared: Option<(usize, usize)> = None;
    for (pos, token) in toks {
        if let Some(count) = token.strip_prefix("n=") {
            if declared.is_some() {
                return Err(parse_error(pos, "n given twice"));
            }
            declared = Some((pos, parse_count(count, pos + 2, 2)?));
            continue;
        }
        let (a, b) = parse_pair(token, pos)?;
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(parse_error(pos, format!("duplicate edge {token:?}")));
        }
        n = n.max(a + 1).max(b + 1);
        pairs.push((a, b));
    }
    if let Some((pos, declared)) = declared {
        if declared < n {
            return Err(parse_error(pos, format!("n={declared} but point {n} is named")));
        }
        n = declared;
    }
    if pairs.is_empty() {
        return Err(parse_error(0, "no edges given"));
    }
    TranspositionSet::from_pairs(n, &pairs).map_err(|e| parse_error(0, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn position(r: Result<TranspositionSet>) -> usize {
        match r {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn edge_lists() {
        let c4 = parse_spec("1-2 2-3 3-4 4-1").unwrap();
        assert_eq!(c4.n(), 4);
        assert_eq!(c4, TranspositionSet::cycle(4).unwrap());
        let commented = parse_spec("# square\n1-2, 2-3\n3-4 # closing edge next\n4-1\n").unwrap();
        assert_eq!(commented, c4);
        let padded = parse_spec("1-2 n=3").unwrap();
        assert_eq!((padded.n(), padded.len()), (3, 1));
    }

    #[test]
    fn presets() {
        assert_eq!(parse_spec("cycle:5").unwrap(), TranspositionSet::cycle(5).unwrap());
        assert_eq!(parse_spec("path:2").unwrap().len(), 1);
        assert_eq!(parse_spec("star:4").unwrap(), TranspositionSet::star(4).unwrap());
        let spider = parse_spec("tree:2,2,3").unwrap();
        assert_eq!(spider, TranspositionSet::from_prufer(&[1, 1, 2]).unwrap());
        assert_eq!(parse_spec("tree:").unwrap().n(), 2);
        assert_eq!(parse_spec("  cycle:4  # comment").unwrap().n(), 4);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(position(parse_spec("1-1")), 0);
        assert_eq!(position(parse_spec("1-2 2-3 3-2")), 8);
        assert_eq!(position(parse_spec("1-2 2-x")), 6);
        assert_eq!(position(parse_spec("1-2 0-3")), 4);
        assert_eq!(position(parse_spec("1-2 23")), 4);
        assert_eq!(position(parse_spec("path:1")), 5);
        assert_eq!(position(parse_spec("cycle:2")), 6);
        assert_eq!(position(parse_spec("tree:1,9")), 5);
        assert_eq!(position(parse_spec("tree:1,x")), 7);
        assert_eq!(position(parse_spec("cycle:4 1-2")), 8);
        assert_eq!(position(parse_spec("   ")), 0);
        assert_eq!(position(parse_spec("1-2 3-4 n=3")), 8);
        assert_eq!(position(parse_spec("n=3 1-2 n=3")), 8);
        assert_eq!(position(parse_spec("n=3")), 0);
        assert_eq!(position(parse_spec(" wheel:5")), 1);
        assert_eq!(position(parse_spec("path:65537")), 5);
        assert!(parse_spec("99999999999999999999999-1").is_err());
    }

    #[test]
    fn transposition_tokens() {
        assert_eq!(parse_transposition("1-2").unwrap(), Transposition::new(0, 1).unwrap());
        assert_eq!(parse_transposition(" 3-2 ").unwrap(), Transposition::new(1, 2).unwrap());
        assert!(parse_transposition("2-2").is_err());
        assert!(parse_transposition("12").is_err());
        assert!(parse_transposition("").is_err());
    }

    proptest::proptest! {
        #[test]
        fn display_round_trips(pairs in proptest::collection::btree_set((1usize..8, 1usize..8), 1..10)) {
            let pairs: Vec<_> = pairs.into_iter().filter(|(a, b)| a < b).collect();
            proptest::prop_assume!(!pairs.is_empty());
            let text = pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" ");
            let s = parse_spec(&text).unwrap();
            proptest::prop_assert_eq!(parse_spec(&s.to_string()).unwrap(), s);
        }

        #[test]
        fn never_panics(text in "\\PC{0,40}") {
            let _ = parse_spec(&text);
        }
    }
}
