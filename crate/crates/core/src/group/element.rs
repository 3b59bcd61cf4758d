use std::fmt;

use serde::de::{self, Deserialize, Deserializer, SeqAccess, Visitor};
use serde::ser::{Serialize, SerializeSeq, Serializer};

/// Maximum number of coordinates an element of any supported family carries.
pub const MAX_ARITY: usize = 4;

/// A group member as a tuple of residues.
///
/// The interpretation of the coordinates (and their ranges) belongs to the
/// [`GroupSpec`](super::GroupSpec) the element is used with: `[x, y]` for
/// `m x_a n`, `[c, d, e]` for `m x_s n^2` and `[x1, x2, x3, x4]` for the
/// doubled groups.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    coords: [u64; MAX_ARITY],
    arity: u8,
}

impl Element {
    /// Panics if `coords` is empty or longer than [`MAX_ARITY`].
    pub fn new(coords: &[u64]) -> Self {
        assert!((1..=MAX_ARITY).contains(&coords.len()), "element arity must be between 1 and {MAX_ARITY}");
        let mut buf = [0; MAX_ARITY];
        buf[..coords.len()].copy_from_slice(coords);
        Element { coords: buf, arity: coords.len() as u8 }
    }

    pub(crate) fn zeros(arity: usize) -> Self {
        Element { coords: [0; MAX_ARITY], arity: arity as u8 }
    }

    #[inline]
    pub fn coords(&self) -> &[u64] {
        &self.coords[..self.arity as usize]
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.arity as usize
    }
}

impl From<[u64; 2]> for Element {
    fn from(c: [u64; 2]) -> Self {
        Element::new(&c)
    }
}

impl From<[u64; 3]> for Element {
    fn from(c: [u64; 3]) -> Self {
        Element::new(&c)
    }
}

impl From<[u64; 4]> for Element {
    fn from(c: [u64; 4]) -> Self {
        Element::new(&c)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coords()).finish()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.arity()))?;
        for c in self.coords() {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ElementVisitor;

        impl<'de> Visitor<'de> for ElementVisitor {
            type Value = Element;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an array of 1 to {MAX_ARITY} non-negative integers")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Element, A::Error> {
                let mut buf = [0u64; MAX_ARITY];
                let mut len = 0;
                while let Some(c) = seq.next_element::<u64>()? {
                    if len == MAX_ARITY {
                        return Err(de::Error::invalid_length(len + 1, &self));
                    }
                    buf[len] = c;
                    len += 1;
                }
                if len == 0 {
                    return Err(de::Error::invalid_length(0, &self));
                }
                Ok(Element::new(&buf[..len]))
            }
        }

        deserializer.deserialize_seq(ElementVisitor)
    }
}
