use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

/// A thread-safe memo table for pure functions.
///
/// Values are computed outside the lock; when two threads race on the same
/// key they compute the same value and the second insert is a no-op.
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo { map: RwLock::new(HashMap::new()) }
    }

    pub(crate) fn get_or_insert_with(&self, key: &K, compute: impl FnOnce() -> V) -> V {
        if let Some(v) = self.map.read().expect("memo lock poisoned").get(key) {
            return v.clone();
        }
        let v = compute();
        self.map
            .write()
            .expect("memo lock poisoned")
            .entry(key.clone())
            .or_insert(v)
            .clone()
    }
}
