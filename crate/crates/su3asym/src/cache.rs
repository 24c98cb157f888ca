//! Process-wide memoization keyed by result type, working precision and
//! a caller-chosen key.

use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

type Store = HashMap<(TypeId, u32, String), Arc<dyn Any + Send + Sync>>;

fn store() -> &'static RwLock<Store> {
    static STORE: OnceLock<RwLock<Store>> = OnceLock::new();
    STORE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Returns the cached value for `(V, digits, key)` or computes and stores it.
/// Two threads may both compute on a miss; the first insert wins.
pub fn memo<V, E>(digits: u32, key: &str, f: impl FnOnce() -> Result<V, E>) -> Result<Arc<V>, E>
where
    V: Any + Send + Sync,
{
    let k = (TypeId::of::<V>(), digits, key.to_string());
    if let Some(v) = store().read().expect("cache lock").get(&k) {
        return Ok(v.clone().downcast::<V>().expect("cache type"));
    }
    let v = Arc::new(f()?);
    let mut w = store().write().expect("cache lock");
    let e = w.entry(k).or_insert_with(|| v.clone() as Arc<dyn Any + Send + Sync>);
    Ok(e.clone().downcast::<V>().expect("cache type"))
}
