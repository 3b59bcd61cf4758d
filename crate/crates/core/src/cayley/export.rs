use std::fmt;
use std::io::{BufWriter, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::edges::EdgeMap;
use super::GeneratorSet;
use crate::error::{Error, Result};
use crate::group::GroupSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    /// `u v` per line, 0-indexed.
    EdgeList,
    /// `p edge N M` header then `e u v` lines, 1-indexed.
    Dimacs,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(ExportFormat::EdgeList),
            "dimacs" => Ok(ExportFormat::Dimacs),
            other => Err(Error::BadParameter(format!("unknown export format {other:?}"))),
        }
    }
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExportFormat::EdgeList => "edgelist",
            ExportFormat::Dimacs => "dimacs",
        })
    }
}

/// Writes the simple undirected Cayley graph on vertex indices.
///
/// Edges are emitted once each as `u < v`, sorted by `(u, v)`. Since
/// `x s = x s'` forces `s = s'`, every vertex has exactly `|S|` distinct
/// neighbours and the edge count is `|G| |S| / 2`.
pub fn export_graph<W: Write>(
    spec: &GroupSpec,
    set: &GeneratorSet,
    format: ExportFormat,
    sink: W,
) -> Result<()> {
    for s in set.elements() {
        spec.check(s)?;
    }
    let order = spec.order();
    let mut out = BufWriter::new(sink);
    let offset = match format {
        ExportFormat::EdgeList => 0,
        ExportFormat::Dimacs => {
            let edges = order * set.degree() as u64 / 2;
            writeln!(out, "p edge {order} {edges}")?;
            1
        }
    };
    let edges = EdgeMap::new(spec, set.elements());
    let mut row = Vec::with_capacity(set.degree());
    for u in 0..order {
        row.clear();
        row.extend((0..edges.degree()).map(|k| edges.apply(u, k)).filter(|&v| v > u));
        row.sort_unstable();
        row.dedup();
        for &v in &row {
            match format {
                ExportFormat::EdgeList => writeln!(out, "{u} {v}")?,
                ExportFormat::Dimacs => writeln!(out, "e {} {}", u + offset, v + offset)?,
            }
        }
    }
    out.flush()?;
    Ok(())
}
