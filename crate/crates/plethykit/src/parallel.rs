//! Thread-safe memoization and deterministic parallel drivers.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use plethykit_core::hookcontent;
use plethykit_core::search::{
    classify_gl, enumerate_instances, group_classes, EquivalenceClass, GlClassification,
};
use plethykit_core::{Partition, PolySource, QPolynomial, Result, SLInstance};
use rayon::prelude::*;

pub const THREADS_ENV: &str = "PLETHYKIT_THREADS";

/// `P`-polynomial memo shared across threads, keyed by the normalized
/// instance.
#[derive(Debug, Default)]
pub struct SharedCache {
    table: Mutex<HashMap<SLInstance, Arc<QPolynomial>>>,
}

impl SharedCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl PolySource for SharedCache {
    fn p_poly(&self, lambda: &Partition, d: usize) -> Result<Arc<QPolynomial>> {
        let key = SLInstance::new(lambda.clone(), d)?.normalize();
        if let Some(hit) = self.table.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        // computed outside the lock; a racing duplicate is identical
        let value = Arc::new(hookcontent::p_poly(key.lambda(), d)?);
        Ok(self
            .table
            .lock()
            .unwrap()
            .entry(key)
            .or_insert(value)
            .clone())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ThreadsError {
    #[error("{THREADS_ENV} must be a positive integer, got {0:?}")]
    Invalid(String),
    #[error("could not build thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// A pool sized by `PLETHYKIT_THREADS`, or by rayon's default when unset.
pub fn pool_from_env() -> std::result::Result<rayon::ThreadPool, ThreadsError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let n: usize = raw
            .trim()
            .parse()
            .map_err(|_| ThreadsError::Invalid(raw.clone()))?;
        if n == 0 {
            return Err(ThreadsError::Invalid(raw));
        }
        builder = builder.num_threads(n);
    }
    Ok(builder.build()?)
}

/// Parallel counterpart of `search::enumerate_classes` with identical output.
pub fn enumerate_classes<S: PolySource + Sync>(
    src: &S,
    max_weight: usize,
    max_d: usize,
    cap: usize,
) -> Result<Vec<EquivalenceClass>> {
    let instances = enumerate_instances(max_weight, max_d, cap)?;
    let keyed = instances
        .into_par_iter()
        .map(|inst| {
            let key = src.p_poly(inst.lambda(), inst.d())?;
            Ok((inst, key))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(group_classes(keyed))
}

/// Classifies every class in parallel, preserving class order.
pub fn classify_all<S: PolySource + Sync>(
    src: &S,
    classes: &[EquivalenceClass],
    bound: usize,
) -> Result<Vec<GlClassification>> {
    classes
        .par_iter()
        .map(|c| classify_gl(src, c, bound))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use plethykit_core::plethysm::LocalCache;
    use plethykit_core::search;

    #[test]
    fn matches_sequential() {
        let shared = SharedCache::new();
        let par = enumerate_classes(&shared, 5, 4, search::DEFAULT_INSTANCE_CAP).unwrap();
        let seq = search::enumerate_classes(&LocalCache::new(), 5, 4, search::DEFAULT_INSTANCE_CAP)
            .unwrap();
        assert_eq!(par, seq);
        assert!(!shared.is_empty());
        let gl = classify_all(&shared, &par, 20).unwrap();
        for (c, g) in par.iter().zip(&gl) {
            assert_eq!(*g, classify_gl(&LocalCache::new(), c, 20).unwrap());
        }
    }

    #[test]
    fn cache_normalizes_keys() {
        let shared = SharedCache::new();
        let a = shared
            .p_poly(&Partition::new(&[3, 1, 1]).unwrap(), 2)
            .unwrap();
        let b = shared.p_poly(&Partition::new(&[2]).unwrap(), 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(shared.len(), 1);
    }
}
