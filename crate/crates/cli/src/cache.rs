//! On-disk cache of generated polynomials in canonical JSON.

use std::fs;
use std::path::PathBuf;

use anyhow::Context;
use eulerstab::eulerian::FamilySpec;
use eulerstab::MPoly;

use crate::Method;

/// Bumped whenever a construction could change its output.
pub const ARTIFACT_VERSION: u32 = 1;

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache { dir }
    }

    pub fn key(spec: &FamilySpec, method: Method) -> String {
        let q: String = spec
            .q
            .to_string()
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' })
            .collect();
        let family = spec.family.to_string();
        format!(
            "v{ARTIFACT_VERSION}-{family}-n{}-r{}-q{q}-{}.json",
            spec.n,
            spec.r,
            format!("{method:?}").to_lowercase()
        )
    }

    pub fn get_or_compute(
        &self,
        spec: &FamilySpec,
        method: Method,
        compute: impl FnOnce() -> anyhow::Result<MPoly>,
    ) -> anyhow::Result<MPoly> {
        let Some(dir) = &self.dir else {
            return compute();
        };
        let path = dir.join(Self::key(spec, method));
        if let Ok(text) = fs::read_to_string(&path) {
            // a corrupt entry is recomputed rather than trusted
            if let Ok(p) = MPoly::from_json(text.trim_end()) {
                return Ok(p);
            }
        }
        let p = compute()?;
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, p.to_json()).with_context(|| format!("writing {}", tmp.display()))?;
        fs::rename(&tmp, &path).with_context(|| format!("writing {}", path.display()))?;
        Ok(p)
    }
}
