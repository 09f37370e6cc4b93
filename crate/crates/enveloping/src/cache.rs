//! Content-addressed JSON cache for expensive solver results. Keys are SHA-256
//! hashes of a canonical description string; values are element schemas. The
//! cache directory comes from `ENVELOPING_CACHE` or defaults to
//! `fixtures/cache` relative to the crate (for the shipped precomputations) and
//! falls back to a local `.enveloping-cache`.

use crate::uea::{AlgebraCtx, Element, ElementSchema};
use crate::Result;
use sha2::{Digest, Sha256};
use std::path::PathBuf;
use std::sync::Arc;

pub fn cache_dir() -> PathBuf {
    if let Ok(d) = std::env::var("ENVELOPING_CACHE") {
        return PathBuf::from(d);
    }
    // in-repo precomputed fixtures, when running inside the workspace
    let repo = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/cache");
    if repo.exists() {
        return repo;
    }
    PathBuf::from(".enveloping-cache")
}

pub fn key(description: &str) -> String {
    let mut h = Sha256::new();
    h.update(description.as_bytes());
    let digest = h.finalize();
    digest.iter().take(16).map(|b| format!("{b:02x}")).collect()
}

pub fn load_element(alg: &Arc<AlgebraCtx>, description: &str) -> Option<Element> {
    let path = cache_dir().join(format!("{}.json", key(description)));
    let data = std::fs::read_to_string(path).ok()?;
    let schema: ElementSchema = serde_json::from_str(&data).ok()?;
    if schema.algebra != alg.sc.name {
        return None;
    }
    Element::from_schema(alg, &schema).ok()
}

pub fn store_element(description: &str, el: &Element) -> Result<()> {
    let dir = cache_dir();
    std::fs::create_dir_all(&dir)?;
    let path = dir.join(format!("{}.json", key(description)));
    let schema = el.to_schema();
    std::fs::write(path, serde_json::to_string(&schema)?)?;
    Ok(())
}

/// Load from cache or compute and store.
pub fn memo_element(
    alg: &Arc<AlgebraCtx>,
    description: &str,
    compute: impl FnOnce() -> Result<Element>,
) -> Result<Element> {
    if let Some(e) = load_element(alg, description) {
        return Ok(e);
    }
    let e = compute()?;
    store_element(description, &e)?;
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::builtin_algebra;

    #[test]
    fn round_trip_through_cache() {
        let tmp = std::env::temp_dir().join(format!("envcache-{}", std::process::id()));
        std::env::set_var("ENVELOPING_CACHE", &tmp);
        let alg = AlgebraCtx::new(builtin_algebra("a2").unwrap());
        let e = Element::generator(&alg, 3);
        let desc = "test/e13";
        store_element(desc, &e).unwrap();
        let back = load_element(&alg, desc).unwrap();
        assert_eq!(back.to_schema().terms, e.to_schema().terms);
        std::fs::remove_dir_all(&tmp).ok();
        std::env::remove_var("ENVELOPING_CACHE");
    }
}
