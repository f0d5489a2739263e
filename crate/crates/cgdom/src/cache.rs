//! Content-addressed result cache keyed by (group descriptor, computation
//! kind, budget, tool version). Optional: without a configured directory every
//! operation is a no-op, and results are identical either way since the
//! computations are deterministic.

use serde::{de::DeserializeOwned, Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone)]
pub struct CacheStore {
    dir: Option<PathBuf>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry<T> {
    tool_version: String,
    value: T,
}

impl CacheStore {
    pub fn disabled() -> Self {
        CacheStore { dir: None }
    }

    /// Opens (creating if needed) a cache directory. I/O trouble degrades to a
    /// disabled cache with a warning on stderr, never to an error.
    pub fn open(dir: Option<&Path>) -> Self {
        let Some(dir) = dir else {
            return Self::disabled();
        };
        match std::fs::create_dir_all(dir) {
            Ok(()) => CacheStore { dir: Some(dir.to_path_buf()) },
            Err(e) => {
                eprintln!("warning: cache disabled ({}: {e})", dir.display());
                Self::disabled()
            }
        }
    }

    pub fn enabled(&self) -> bool {
        self.dir.is_some()
    }

    fn path_for(&self, key: &str) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        let digest = Sha256::digest(key.as_bytes());
        Some(dir.join(format!("{}.json", hex::encode(digest))))
    }

    /// Stable key text for a computation on a group.
    pub fn key(descriptor: &str, kind: &str, budget_secs: Option<u64>) -> String {
        format!(
            "{descriptor}\x1f{kind}\x1f{}",
            budget_secs.map_or("unlimited".to_string(), |b| b.to_string())
        )
    }

    /// Returns the cached value if present, parseable, and written by this
    /// tool version; anything else is treated as a miss.
    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let path = self.path_for(key)?;
        let text = std::fs::read_to_string(path).ok()?;
        let entry: CacheEntry<T> = serde_json::from_str(&text).ok()?;
        (entry.tool_version == TOOL_VERSION).then_some(entry.value)
    }

    /// Best-effort write; I/O errors only warn.
    pub fn put<T: Serialize>(&self, key: &str, value: &T) {
        let Some(path) = self.path_for(key) else {
            return;
        };
        let entry = CacheEntry { tool_version: TOOL_VERSION.to_string(), value };
        match serde_json::to_string_pretty(&entry) {
            Ok(text) => {
                if let Err(e) = std::fs::write(&path, text) {
                    eprintln!("warning: cache write failed ({}: {e})", path.display());
                }
            }
            Err(e) => eprintln!("warning: cache serialization failed: {e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Debug, PartialEq, Serialize, Deserialize)]
    struct Payload {
        value: usize,
        witness: Vec<usize>,
    }

    #[test]
    fn roundtrip_and_miss_behaviors() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CacheStore::open(Some(dir.path()));
        assert!(cache.enabled());
        let key = CacheStore::key("dihedral(10)", "gamma", Some(60));
        assert!(cache.get::<Payload>(&key).is_none());
        let payload = Payload { value: 6, witness: vec![1, 2, 3] };
        cache.put(&key, &payload);
        assert_eq!(cache.get::<Payload>(&key), Some(payload));
        // different budget, different key
        let other = CacheStore::key("dihedral(10)", "gamma", Some(10));
        assert!(cache.get::<Payload>(&other).is_none());
    }

    #[test]
    fn corrupted_entries_are_misses_and_overwritten() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CacheStore::open(Some(dir.path()));
        let key = CacheStore::key("g", "gamma", None);
        cache.put(&key, &Payload { value: 1, witness: vec![] });
        // corrupt the file on disk
        let digest = Sha256::digest(key.as_bytes());
        let path = dir.path().join(format!("{}.json", hex::encode(digest)));
        std::fs::write(&path, "{not json").unwrap();
        assert!(cache.get::<Payload>(&key).is_none());
        cache.put(&key, &Payload { value: 2, witness: vec![9] });
        assert_eq!(cache.get::<Payload>(&key).map(|p: Payload| p.value), Some(2));
    }

    #[test]
    fn stale_version_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CacheStore::open(Some(dir.path()));
        let key = CacheStore::key("g", "gamma", None);
        let digest = Sha256::digest(key.as_bytes());
        let path = dir.path().join(format!("{}.json", hex::encode(digest)));
        std::fs::write(&path, r#"{"tool_version":"0.0.0-old","value":{"value":1,"witness":[]}}"#).unwrap();
        assert!(cache.get::<Payload>(&key).is_none());
    }

    #[test]
    fn disabled_cache_is_a_no_op() {
        let cache = CacheStore::disabled();
        let key = CacheStore::key("g", "gamma", None);
        cache.put(&key, &Payload { value: 1, witness: vec![] });
        assert!(cache.get::<Payload>(&key).is_none());
    }
}
