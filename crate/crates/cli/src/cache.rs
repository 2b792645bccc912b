//! On-disk polynomial cache: JSON lines behind a versioned header.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use asmweak::{Family, MultiPoly, PolyCache, Variant};
use serde_json::{json, Value};

pub const FORMAT: &str = "asmweak-poly-cache";
pub const VERSION: u64 = 1;
const FILE: &str = "polynomials.jsonl";

pub fn path(dir: &Path) -> PathBuf {
    dir.join(FILE)
}

fn family(s: &str) -> Option<Family> {
    [Family::Groth, Family::Schub].into_iter().find(|f| f.name() == s)
}

fn variant(s: &str) -> Option<Variant> {
    [Variant::Single, Variant::Double].into_iter().find(|v| v.name() == s)
}

/// Loads entries into `cache`. A missing file is empty; a header with a
/// different version discards the file. Returns the number of entries read.
pub fn load(dir: &Path, cache: &PolyCache) -> Result<usize, String> {
    let p = path(dir);
    let Ok(file) = fs::File::open(&p) else {
        return Ok(0);
    };
    let mut lines = BufReader::new(file).lines();
    let header: Value = match lines.next() {
        Some(Ok(h)) => serde_json::from_str(&h).map_err(|e| format!("{}: bad header: {e}", p.display()))?,
        _ => return Ok(0),
    };
    if header["format"] != FORMAT || header["version"] != VERSION {
        eprintln!("ignoring cache {} with header {header}", p.display());
        return Ok(0);
    }
    let mut count = 0;
    for (k, line) in lines.enumerate() {
        let line = line.map_err(|e| e.to_string())?;
        let at = || format!("{}:{}", p.display(), k + 2);
        let v: Value = serde_json::from_str(&line).map_err(|e| format!("{}: {e}", at()))?;
        let f = v["family"].as_str().and_then(family);
        let var = v["variant"].as_str().and_then(variant);
        let key = v["key"].as_str();
        let (Some(f), Some(var), Some(key)) = (f, var, key) else {
            return Err(format!("{}: malformed entry", at()));
        };
        let poly = MultiPoly::from_json(&v["poly"]).map_err(|e| format!("{}: {e}", at()))?;
        cache.insert(f, var, key.to_string(), poly);
        count += 1;
    }
    Ok(count)
}

/// Writes every entry, sorted by key, replacing the file atomically.
pub fn save(dir: &Path, cache: &PolyCache) -> Result<usize, String> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let target = path(dir);
    let tmp = target.with_extension("jsonl.tmp");
    let entries = cache.entries();
    let write = || -> std::io::Result<()> {
        let mut w = BufWriter::new(fs::File::create(&tmp)?);
        writeln!(w, "{}", json!({ "format": FORMAT, "version": VERSION }))?;
        for (f, var, key, poly) in &entries {
            let line = json!({ "family": f.name(), "variant": var.name(), "key": key, "poly": poly.to_json() });
            writeln!(w, "{line}")?;
        }
        w.flush()?;
        fs::rename(&tmp, &target)
    };
    write().map_err(|e| format!("{}: {e}", target.display()))?;
    Ok(entries.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use asmweak::groth::groth_asm;

    #[test]
    fn round_trip_and_version_gate() {
        let dir = tempfile::tempdir().unwrap();
        let src = PolyCache::new();
        let a = asmweak::fixtures::rothe_example();
        src.insert(Family::Groth, Variant::Single, a.canonical(), groth_asm(&a, Variant::Single));
        src.insert(Family::Schub, Variant::Double, "x".into(), MultiPoly::x(2, 1));
        assert_eq!(save(dir.path(), &src).unwrap(), 2);

        let dst = PolyCache::new();
        assert_eq!(load(dir.path(), &dst).unwrap(), 2);
        assert_eq!(dst.entries(), src.entries());

        let text = fs::read_to_string(path(dir.path())).unwrap();
        fs::write(path(dir.path()), text.replacen("\"version\":1", "\"version\":99", 1)).unwrap();
        assert_eq!(load(dir.path(), &PolyCache::new()).unwrap(), 0);

        fs::write(path(dir.path()), "{\"format\":\"asmweak-poly-cache\",\"version\":1}\n{\"family\":1}\n").unwrap();
        assert!(load(dir.path(), &PolyCache::new()).is_err());
        assert_eq!(load(&dir.path().join("absent"), &PolyCache::new()).unwrap(), 0);
    }
}
