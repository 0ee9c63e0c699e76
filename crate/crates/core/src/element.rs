use std::borrow::Borrow;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A named carrier element. Elements compare by id; the canonical element
/// order used throughout the library is the lexicographic order on ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(String);

impl Element {
    /// Creates an element from a token. Tokens must be nonempty and free of
    /// whitespace.
    pub fn new(id: impl Into<String>) -> Result<Self> {
        let id = id.into();
        if id.is_empty() {
            return Err(Error::input("element id must be nonempty"));
        }
        if id.chars().any(char::is_whitespace) {
            return Err(Error::input(format!(
                "element id {id:?} must not contain whitespace"
            )));
        }
        Ok(Element(id))
    }

    pub fn id(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Borrow<str> for Element {
    fn borrow(&self) -> &str {
        &self.0
    }
}

/// A finite set of elements in canonical (sorted) order.
pub type ElementSet = BTreeSet<Element>;

/// Renders a set as sorted, space-separated ids, with `-` for the empty set.
pub fn format_set(set: &ElementSet) -> String {
    if set.is_empty() {
        "-".to_string()
    } else {
        set.iter().map(Element::id).collect::<Vec<_>>().join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_tokens() {
        assert!(Element::new("").is_err());
        assert!(Element::new("a b").is_err());
        assert!(Element::new("ok_token.1-x").is_ok());
    }

    #[test]
    fn formats_sets() {
        let empty = ElementSet::new();
        assert_eq!(format_set(&empty), "-");
        let set: ElementSet = ["b", "a"]
            .iter()
            .map(|s| Element::new(*s).unwrap())
            .collect();
        assert_eq!(format_set(&set), "a b");
    }
}
