use std::collections::BTreeMap;
use std::fmt;

use crate::names::{VSet, VertexId};

/// An injective finite map between vertex names.
///
/// Used both for renamings and for candidate isomorphisms. Injectivity is
/// enforced on insertion, so a `VMap` can always be inverted.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VMap {
    forward: BTreeMap<VertexId, VertexId>,
    backward: BTreeMap<VertexId, VertexId>,
}

impl VMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// The identity map on `set`.
    pub fn identity(set: &VSet) -> Self {
        let forward: BTreeMap<_, _> = set.iter().map(|v| (v.clone(), v.clone())).collect();
        Self {
            backward: forward.clone(),
            forward,
        }
    }

    /// Adds `from ↦ to`. Returns `false` and leaves the map unchanged if
    /// `from` is already mapped elsewhere or `to` already has a preimage.
    pub fn insert(&mut self, from: VertexId, to: VertexId) -> bool {
        match (self.forward.get(&from), self.backward.get(&to)) {
            (Some(existing), _) => existing == &to,
            (None, Some(_)) => false,
            (None, None) => {
                self.forward.insert(from.clone(), to.clone());
                self.backward.insert(to, from);
                true
            }
        }
    }

    /// Builder form of [`VMap::insert`]; panics on an injectivity violation.
    pub fn with(mut self, from: impl Into<VertexId>, to: impl Into<VertexId>) -> Self {
        assert!(
            self.insert(from.into(), to.into()),
            "VMap must stay injective"
        );
        self
    }

    pub fn get(&self, v: &VertexId) -> Option<&VertexId> {
        self.forward.get(v)
    }

    pub fn preimage(&self, w: &VertexId) -> Option<&VertexId> {
        self.backward.get(w)
    }

    pub fn contains_key(&self, v: &VertexId) -> bool {
        self.forward.contains_key(v)
    }

    pub fn contains_value(&self, w: &VertexId) -> bool {
        self.backward.contains_key(w)
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// Entries in ascending order of the source vertex.
    pub fn iter(&self) -> impl Iterator<Item = (&VertexId, &VertexId)> {
        self.forward.iter()
    }

    pub fn domain(&self) -> VSet {
        self.forward.keys().cloned().collect()
    }

    pub fn image(&self) -> VSet {
        self.backward.keys().cloned().collect()
    }

    pub fn inverse(&self) -> VMap {
        VMap {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    /// `other ∘ self`: first apply `self`, then `other`. Entries whose image
    /// is outside the domain of `other` are dropped.
    pub fn then(&self, other: &VMap) -> VMap {
        let mut out = VMap::new();
        for (v, w) in self.iter() {
            if let Some(u) = other.get(w) {
                out.insert(v.clone(), u.clone());
            }
        }
        out
    }

    /// The map restricted to the vertices in `set`.
    pub fn restrict(&self, set: &VSet) -> VMap {
        let mut out = VMap::new();
        for (v, w) in self.iter().filter(|(v, _)| set.contains(*v)) {
            out.insert(v.clone(), w.clone());
        }
        out
    }
}

impl fmt::Debug for VMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.forward.iter().map(|(k, v)| (k.as_str(), v.as_str())))
            .finish()
    }
}

impl fmt::Display for VMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.iter().map(|(k, v)| format!("{k}->{v}")).collect();
        write!(f, "{{{}}}", entries.join(", "))
    }
}

impl FromIterator<(VertexId, VertexId)> for VMap {
    /// Panics if the pairs are not injective.
    fn from_iter<I: IntoIterator<Item = (VertexId, VertexId)>>(iter: I) -> Self {
        let mut map = VMap::new();
        for (from, to) in iter {
            assert!(map.insert(from, to), "VMap must stay injective");
        }
        map
    }
}
