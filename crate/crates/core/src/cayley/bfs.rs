use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::edges::EdgeMap;
use super::GeneratorSet;
use crate::error::{Error, Result};
use crate::group::GroupSpec;

/// Distance-array sentinel for vertices not yet reached. Real distances
/// therefore stop at `UNREACHED - 1`.
pub const UNREACHED: u8 = u8::MAX;

/// Largest group the all-pairs oracle accepts.
pub const ORACLE_LIMIT: u64 = 5000;

/// Everything one BFS from the identity tells us about a Cayley graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyStats {
    pub order: u64,
    pub degree: usize,
    /// `None` when the generators do not generate the whole group.
    pub diameter: Option<u32>,
    /// Entry `d` counts the vertices at distance exactly `d` from the identity.
    pub distance_histogram: Vec<u64>,
    pub reached: u64,
    pub connected: bool,
}

/// Breadth-first search from the identity over index-encoded vertices.
///
/// Cayley graphs are vertex-transitive, so the eccentricity of the identity
/// is the diameter. Memory is one byte per group element; levels are
/// expanded by scanning that array, which visits each level in ascending
/// index order without storing a frontier.
pub fn bfs_stats(spec: &GroupSpec, set: &GeneratorSet, max_vertices: u64) -> Result<CayleyStats> {
    let order = spec.order();
    if order > max_vertices {
        return Err(Error::MemoryBudgetExceeded { order, budget: max_vertices });
    }
    let len = usize::try_from(order)
        .map_err(|_| Error::MemoryBudgetExceeded { order, budget: usize::MAX as u64 })?;
    for s in set.elements() {
        spec.check(s)?;
    }

    let edges = EdgeMap::new(spec, set.elements());
    let degree = edges.degree();
    let mut dist = vec![UNREACHED; len];
    dist[0] = 0;
    let mut histogram = vec![1u64];
    let mut reached = 1u64;
    let mut level: u8 = 0;

    loop {
        let next = level + 1;
        let mut found = 0u64;
        for v in 0..len {
            if dist[v] != level {
                continue;
            }
            for k in 0..degree {
                let w = edges.apply(v as u64, k) as usize;
                if dist[w] == UNREACHED {
                    if next == UNREACHED {
                        return Err(Error::DistanceOverflow { limit: UNREACHED as u32 - 1 });
                    }
                    dist[w] = next;
                    found += 1;
                }
            }
        }
        if found == 0 {
            break;
        }
        histogram.push(found);
        reached += found;
        level = next;
    }

    let connected = reached == order;
    Ok(CayleyStats {
        order,
        degree: set.degree(),
        diameter: connected.then_some(level as u32),
        distance_histogram: histogram,
        reached,
        connected,
    })
}

/// Diameter from `|G|` independent BFS runs over an explicit adjacency list.
///
/// Test oracle for the single-source shortcut in [`bfs_stats`]; returns
/// `None` for a disconnected graph.
pub fn all_pairs_diameter_oracle(spec: &GroupSpec, set: &GeneratorSet) -> Result<Option<u32>> {
    let order = spec.order();
    if order > ORACLE_LIMIT {
        return Err(Error::TooLarge { order, limit: ORACLE_LIMIT });
    }
    let n = order as usize;
    let adjacency: Vec<Vec<usize>> = (0..order)
        .map(|i| {
            let v = spec.unindex_unchecked(i);
            set.elements()
                .iter()
                .map(|s| spec.index(&spec.multiply(&v, s)?))
                .map(|r| r.map(|w| w as usize))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let mut diameter = 0;
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    for source in 0..n {
        dist.fill(u32::MAX);
        dist[source] = 0;
        queue.push_back(source);
        let mut seen = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adjacency[u] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    seen += 1;
                    queue.push_back(w);
                }
            }
        }
        if seen != n {
            return Ok(None);
        }
        diameter = diameter.max(*dist.iter().max().unwrap());
    }
    Ok(Some(diameter))
}
