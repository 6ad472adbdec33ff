//! Identifiers for vertices and labels.
//!
//! Vertices and labels are both backed by text tokens, but they are distinct
//! types so that one can never be passed where the other is expected.

use std::borrow::Borrow;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

macro_rules! name_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(Arc<str>);

        impl $name {
            /// Creates an identifier from a token.
            ///
            /// Panics if `token` is empty; use [`Self::try_new`] for untrusted input.
            pub fn new(token: impl AsRef<str>) -> Self {
                Self::try_new(token).expect("identifiers must be nonempty")
            }

            pub fn try_new(token: impl AsRef<str>) -> Option<Self> {
                let token = token.as_ref();
                if token.is_empty() {
                    None
                } else {
                    Some(Self(Arc::from(token)))
                }
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({:?})", stringify!($name), &*self.0)
            }
        }

        impl From<&str> for $name {
            fn from(token: &str) -> Self {
                Self::new(token)
            }
        }

        impl Borrow<str> for $name {
            fn borrow(&self) -> &str {
                &self.0
            }
        }
    };
}

name_type!(
    /// Name of a vertex. Ordered lexicographically on the token.
    VertexId
);

name_type!(
    /// Name of a label (an atomic proposition).
    LabelId
);

/// A finite set of vertices, iterated in ascending order.
pub type VSet = BTreeSet<VertexId>;

/// Builds a [`VSet`] from string tokens.
pub fn vset<'a>(names: impl IntoIterator<Item = &'a str>) -> VSet {
    names.into_iter().map(VertexId::new).collect()
}

pub(crate) fn fmt_vset(set: &VSet) -> String {
    let names: Vec<&str> = set.iter().map(VertexId::as_str).collect();
    format!("{{{}}}", names.join(","))
}
