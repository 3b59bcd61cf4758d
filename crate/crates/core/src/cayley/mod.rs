//! Implicit Cayley graphs: vertices are group elements (as dense indices),
//! edges are `{x, x s}` for `s` in an inverse-closed generator set.

mod bfs;
mod edges;
mod export;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Element, GroupSpec};

pub use bfs::{all_pairs_diameter_oracle, bfs_stats, CayleyStats, ORACLE_LIMIT, UNREACHED};
pub use export::{export_graph, ExportFormat};

/// An inverse-closed, identity-free set of distinct generators `S = S ∪ S^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    elements: Vec<Element>,
    involution_count: usize,
}

impl GeneratorSet {
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// Number of self-inverse generators.
    pub fn involution_count(&self) -> usize {
        self.involution_count
    }

    /// The Cayley graph degree, `|S ∪ S^-1|`.
    pub fn degree(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Element) -> bool {
        self.elements.contains(g)
    }
}

/// Closes `raw` under inverses.
///
/// The result lists the raw elements in input order (duplicates dropped),
/// followed by the inverses that were missing, in the order of the elements
/// they invert.
pub fn close_under_inverses(spec: &GroupSpec, raw: &[Element]) -> Result<GeneratorSet> {
    if raw.is_empty() {
        return Err(Error::EmptySet);
    }
    let id = spec.identity();
    let mut seen = HashSet::with_capacity(2 * raw.len());
    let mut elements = Vec::with_capacity(2 * raw.len());
    for g in raw {
        spec.check(g)?;
        if *g == id {
            return Err(Error::ContainsIdentity);
        }
        if seen.insert(*g) {
            elements.push(*g);
        }
    }
    let mut involutions = 0;
    for g in elements.clone() {
        let inv = spec.inv_unchecked(&g);
        if inv == g {
            involutions += 1;
        } else if seen.insert(inv) {
            elements.push(inv);
        }
    }
    Ok(GeneratorSet { elements, involution_count: involutions })
}

/// Right neighbours `v s` of `v`, in the set's stored order.
pub fn neighbors(spec: &GroupSpec, set: &GeneratorSet, v: &Element) -> Result<Vec<Element>> {
    spec.check(v)?;
    Ok(set.elements.iter().map(|s| spec.mul_unchecked(v, s)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn els(v: &[&[u64]]) -> Vec<Element> {
        v.iter().map(|c| Element::new(c)).collect()
    }

    #[test]
    fn closure_of_four_seven_record() {
        let g = GroupSpec::cyclic(15, 77, 4).unwrap();
        let set = close_under_inverses(&g, &els(&[&[6, 2], &[10, 9]])).unwrap();
        assert_eq!(set.elements(), els(&[&[6, 2], &[10, 9], &[9, 5], &[5, 24]]).as_slice());
        assert_eq!(set.degree(), 4);
        assert_eq!(set.involution_count(), 0);
    }

    #[test]
    fn closure_counts_involutions() {
        let g = GroupSpec::cyclic(52, 53, 2).unwrap();
        let raw = els(&[&[25, 45], &[30, 23], &[40, 39], &[26, 0]]);
        let set = close_under_inverses(&g, &raw).unwrap();
        assert_eq!(set.degree(), 7);
        assert_eq!(set.involution_count(), 1);
        assert_eq!(set.degree(), 2 * 3 + set.involution_count());
    }

    #[test]
    fn closure_is_idempotent() {
        let g = GroupSpec::cyclic(15, 77, 4).unwrap();
        let set = close_under_inverses(&g, &els(&[&[6, 2], &[10, 9]])).unwrap();
        let again = close_under_inverses(&g, set.elements()).unwrap();
        assert_eq!(set, again);
    }

    #[test]
    fn closure_errors() {
        let g = GroupSpec::cyclic(2, 3, 2).unwrap();
        assert!(matches!(close_under_inverses(&g, &[]), Err(Error::EmptySet)));
        assert!(matches!(close_under_inverses(&g, &els(&[&[1, 0], &[0, 0]])), Err(Error::ContainsIdentity)));
        assert!(matches!(
            close_under_inverses(&g, &els(&[&[2, 0]])),
            Err(Error::CoordinateOutOfRange { .. })
        ));
    }

    #[test]
    fn neighbors_of_identity_and_first_step() {
        let g = GroupSpec::cyclic(15, 77, 4).unwrap();
        let set = close_under_inverses(&g, &els(&[&[6, 2], &[10, 9]])).unwrap();
        assert_eq!(neighbors(&g, &set, &g.identity()).unwrap(), set.elements());
        // 2 * 4^6 + 2 = 8194 = 106 * 77 + 32
        let nb = neighbors(&g, &set, &Element::from([6, 2])).unwrap();
        assert_eq!(nb[0], Element::from([12, 32]));
    }

    #[test]
    fn involution_edges_are_symmetric() {
        let g = GroupSpec::cyclic(52, 53, 2).unwrap();
        let set = close_under_inverses(&g, &els(&[&[26, 0], &[1, 1]])).unwrap();
        let s = Element::from([26, 0]);
        for i in (0..g.order()).step_by(37) {
            let v = g.unindex(i).unwrap();
            let w = g.mul_unchecked(&v, &s);
            assert!(neighbors(&g, &set, &w).unwrap().contains(&v));
        }
    }
}
