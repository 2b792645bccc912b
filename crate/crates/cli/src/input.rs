//! Parsing of command-line inputs into ASMs, permutations and antichains.

use std::fmt;
use std::fs;
use std::path::Path;

use asmweak::{fixtures, Antichain, Asm, Permutation};
use serde_json::Value;

use crate::CliError;

/// A parsed input. Permutations are kept apart so output can name them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Asm(Asm),
    Perm(Permutation),
    Anti(Antichain),
}

impl Input {
    pub fn n(&self) -> usize {
        match self {
            Input::Asm(a) => a.n(),
            Input::Perm(w) => w.n(),
            Input::Anti(l) => l.n(),
        }
    }

    /// The matrix view; an antichain qualifies only if it is the
    /// permutation set of some ASM.
    pub fn to_asm(&self) -> Result<Asm, CliError> {
        match self {
            Input::Asm(a) => Ok(a.clone()),
            Input::Perm(w) => Ok(w.to_asm()),
            Input::Anti(l) => l.try_to_asm().ok_or_else(|| {
                CliError::input(format!("antichain {l} is not the permutation set of an ASM"))
            }),
        }
    }

    pub fn to_antichain(&self) -> Antichain {
        match self {
            Input::Asm(a) => Antichain::from_asm(a),
            Input::Perm(w) => Antichain::singleton(w.clone()),
            Input::Anti(l) => l.clone(),
        }
    }

    /// Collapses permutation matrices to permutations.
    pub fn from_asm(a: Asm) -> Input {
        match a.to_permutation() {
            Some(w) => Input::Perm(w),
            None => Input::Asm(a),
        }
    }
}

impl fmt::Display for Input {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Input::Asm(a) => a.fmt(f),
            Input::Perm(w) => w.fmt(f),
            Input::Anti(l) => l.fmt(f),
        }
    }
}

/// Accepts, in order: a named fixture, inline JSON, a braced antichain,
/// semicolon-separated ASM rows, a file path, or a one-line permutation.
pub fn parse_input(raw: &str) -> Result<Input, CliError> {
    let s = raw.trim();
    if let Some((_, a)) = fixtures::named().into_iter().find(|(name, _)| *name == s) {
        return Ok(Input::from_asm(a));
    }
    if s.starts_with('[') || s.starts_with("{\"") || s.starts_with("{ ") {
        let v: Value = serde_json::from_str(s)
            .map_err(|e| CliError::input(format!("invalid JSON at line {}, column {}: {e}", e.line(), e.column())))?;
        return from_json(&v);
    }
    if s.starts_with('{') {
        return Ok(Input::Anti(s.parse().map_err(CliError::from)?));
    }
    if s.contains(';') {
        return Ok(Input::from_asm(s.parse().map_err(CliError::from)?));
    }
    let path = Path::new(s);
    if path.is_file() {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        return parse_input(&text);
    }
    Ok(Input::Perm(s.parse().map_err(CliError::from)?))
}

/// `{"rows": [[..]]}`, `{"oneline": [..]}`, `{"perms": [[..], ..]}`, or a
/// bare array of rows or of one-line values.
pub fn from_json(v: &Value) -> Result<Input, CliError> {
    match v {
        Value::Object(map) => {
            if let Some(rows) = map.get("rows") {
                Ok(Input::from_asm(Asm::new(&int_matrix(rows, "rows")?)?))
            } else if let Some(line) = map.get("oneline") {
                Ok(Input::Perm(Permutation::new(naturals(line, "oneline")?)?))
            } else if let Some(Value::Array(ps)) = map.get("perms") {
                let perms = ps
                    .iter()
                    .enumerate()
                    .map(|(k, p)| Ok(Permutation::new(naturals(p, &format!("perms[{k}]"))?)?))
                    .collect::<Result<Vec<_>, CliError>>()?;
                Ok(Input::Anti(Antichain::new(perms)?))
            } else {
                Err(CliError::input("JSON object needs a \"rows\", \"oneline\" or \"perms\" key"))
            }
        }
        Value::Array(items) if items.iter().all(Value::is_array) => {
            Ok(Input::from_asm(Asm::new(&int_matrix(v, "rows")?)?))
        }
        Value::Array(_) => Ok(Input::Perm(Permutation::new(naturals(v, "oneline")?)?)),
        _ => Err(CliError::input("expected a JSON object or array")),
    }
}

fn int_matrix(v: &Value, at: &str) -> Result<Vec<Vec<i64>>, CliError> {
    let rows = v.as_array().ok_or_else(|| CliError::input(format!("{at}: expected an array")))?;
    rows.iter()
        .enumerate()
        .map(|(r, row)| {
            let row = row
                .as_array()
                .ok_or_else(|| CliError::input(format!("{at}[{r}]: expected an array")))?;
            row.iter()
                .enumerate()
                .map(|(c, x)| {
                    x.as_i64()
                        .ok_or_else(|| CliError::input(format!("{at}[{r}][{c}]: expected an integer")))
                })
                .collect()
        })
        .collect()
}

fn naturals(v: &Value, at: &str) -> Result<Vec<usize>, CliError> {
    let items = v.as_array().ok_or_else(|| CliError::input(format!("{at}: expected an array")))?;
    items
        .iter()
        .enumerate()
        .map(|(k, x)| {
            x.as_u64()
                .map(|u| u as usize)
                .ok_or_else(|| CliError::input(format!("{at}[{k}]: expected a positive integer")))
        })
        .collect()
}

/// A comma-separated list of indices, e.g. `3,2,1`.
pub fn parse_word(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::input(format!("bad index {t:?} in word {s:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_surface_form() {
        let rothe = Input::Asm(fixtures::rothe_example());
        assert_eq!(parse_input("rothe-example").unwrap(), rothe);
        assert_eq!(parse_input("0,0,1,0;1,0,-1,1;0,1,0,0;0,0,1,0").unwrap(), rothe);
        assert_eq!(
            parse_input("{\"rows\": [[0,0,1,0],[1,0,-1,1],[0,1,0,0],[0,0,1,0]]}").unwrap(),
            rothe
        );
        assert_eq!(parse_input("[[0,0,1,0],[1,0,-1,1],[0,1,0,0],[0,0,1,0]]").unwrap(), rothe);
        let w = Input::Perm("2413".parse().unwrap());
        assert_eq!(parse_input("2413").unwrap(), w);
        assert_eq!(parse_input("[2,4,1,3]").unwrap(), w);
        assert_eq!(parse_input("{\"oneline\": [2,4,1,3]}").unwrap(), w);
        assert_eq!(parse_input("0,1;1,0").unwrap(), Input::Perm("21".parse().unwrap()));
        let l = Input::Anti("{132,213}".parse().unwrap());
        assert_eq!(parse_input("{213,132}").unwrap(), l);
        assert_eq!(parse_input("{\"perms\": [[2,1,3],[1,3,2]]}").unwrap(), l);
    }

    #[test]
    fn diagnostics_name_the_location() {
        let e = parse_input("0,1;1,1").unwrap_err();
        assert_eq!(e.code, 2);
        let e = parse_input("{\"rows\": [[0,1],[1,\"x\"]]}").unwrap_err();
        assert!(e.message.contains("rows[1][1]"), "{}", e.message);
        let e = parse_input("[[0,1],[1,0]").unwrap_err();
        assert!(e.message.contains("line 1"), "{}", e.message);
        assert!(parse_input("{213,123}").is_err());
        assert!(parse_input("2213").is_err());
        assert_eq!(parse_word("3,2,1").unwrap(), vec![3, 2, 1]);
        assert!(parse_word("3,x").is_err());
    }
}
