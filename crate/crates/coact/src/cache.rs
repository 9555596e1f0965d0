//! Optional on-disk persistence of coaction memo tables.
//!
//! When `COACT_CACHE_DIR` is set, computed right coactions of single
//! generators are written to that directory, one file per entry, addressed
//! by a hash of the entry's key. Entries are self-describing (the file
//! stores the key next to the value) so hash collisions only cost a miss.

use std::fs;
use std::path::{Path, PathBuf};

pub const ENV_VAR: &str = "COACT_CACHE_DIR";

fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(ENV_VAR).map(PathBuf::from)
}

fn fnv1a64(data: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in data {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn entry_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{:016x}.json", fnv1a64(key.as_bytes())))
}

/// Looks up a cached value by key; silent on any I/O or format problem.
pub fn load(key: &str) -> Option<String> {
    let dir = cache_dir()?;
    let text = fs::read_to_string(entry_path(&dir, key)).ok()?;
    let value: serde_json::Value = serde_json::from_str(&text).ok()?;
    if value.get("key")?.as_str()? != key {
        return None;
    }
    Some(value.get("value")?.as_str()?.to_string())
}

/// Stores a value under a key; silent on any I/O problem.
pub fn store(key: &str, value: &str) {
    let Some(dir) = cache_dir() else {
        return;
    };
    if fs::create_dir_all(&dir).is_err() {
        return;
    }
    let body = serde_json::json!({ "key": key, "value": value });
    let _ = fs::write(entry_path(&dir, key), body.to_string());
}

#[cfg(test)]
mod tests {
    #[test]
    fn hash_is_stable() {
        assert_eq!(super::fnv1a64(b""), 0xcbf29ce484222325);
        assert_eq!(super::fnv1a64(b"a"), 0xaf63dc4c8601ec8c);
    }
}
