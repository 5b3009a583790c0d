use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::SmallGraph;
use crate::error::{Error, Result};

/// Named small graphs used as targets and family members.
///
/// `Path(m)` has `m` edges (and `m + 1` vertices). `LinearForest` holds the
/// edge lengths of its paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    /// 4-cycle with one pendant edge.
    FourPan,
    /// Complement of the 4-pan inside `K_5`: a triangle with a 2-edge tail.
    FourPanComplement,
    /// Triangle with pendant edges at two distinct vertices.
    Bull,
    /// Triangle with two pendant edges at the same vertex.
    Cricket,
    /// `K_4` minus an edge.
    Diamond,
    LinearForest(Vec<usize>),
}

impl NamedGraph {
    pub fn build(&self) -> Result<SmallGraph> {
        match self {
            NamedGraph::Cycle(m) => {
                if *m < 3 {
                    return Err(Error::InvalidParameter(format!(
                        "cycle length must be at least 3, got {m}"
                    )));
                }
                let edges: Vec<_> = (0..*m).map(|i| (i, (i + 1) % m)).collect();
                SmallGraph::from_edges(*m, &edges)
            }
            NamedGraph::Path(m) => {
                if *m == 0 {
                    return Err(Error::InvalidParameter("path needs at least one edge".into()));
                }
                let edges: Vec<_> = (0..*m).map(|i| (i, i + 1)).collect();
                SmallGraph::from_edges(m + 1, &edges)
            }
            NamedGraph::Complete(m) => {
                if *m == 0 {
                    return Err(Error::InvalidParameter("complete graph needs a vertex".into()));
                }
                SmallGraph::complete(*m)
            }
            NamedGraph::FourPan => SmallGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]),
            NamedGraph::FourPanComplement => SmallGraph::from_edges(5, &[(0, 2), (1, 3), (1, 4), (2, 4), (3, 4)]),
            NamedGraph::Bull => SmallGraph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
            NamedGraph::Cricket => SmallGraph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]),
            NamedGraph::Diamond => SmallGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
            NamedGraph::LinearForest(lengths) => {
                if lengths.is_empty() || lengths.contains(&0) {
                    return Err(Error::InvalidParameter(
                        "linear forest needs paths of positive length".into(),
                    ));
                }
                let n: usize = lengths.iter().map(|l| l + 1).sum();
                let mut g = SmallGraph::empty(n)?;
                let mut base = 0;
                for &l in lengths {
                    for i in 0..l {
                        g.add_edge(base + i, base + i + 1)?;
                    }
                    base += l + 1;
                }
                Ok(g)
            }
        }
    }

    /// The six members of the half-edge family of `K_5`.
    pub fn half_k5() -> [NamedGraph; 6] {
        [
            NamedGraph::Cycle(5),
            NamedGraph::FourPan,
            NamedGraph::FourPanComplement,
            NamedGraph::Bull,
            NamedGraph::Cricket,
            NamedGraph::Diamond,
        ]
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Cycle(m) => write!(f, "c{m}"),
            NamedGraph::Path(m) => write!(f, "p{m}"),
            NamedGraph::Complete(m) => write!(f, "k{m}"),
            NamedGraph::FourPan => f.write_str("4pan"),
            NamedGraph::FourPanComplement => f.write_str("co4pan"),
            NamedGraph::Bull => f.write_str("bull"),
            NamedGraph::Cricket => f.write_str("cricket"),
            NamedGraph::Diamond => f.write_str("diamond"),
            NamedGraph::LinearForest(ls) => {
                let parts: Vec<String> = ls.iter().map(|l| l.to_string()).collect();
                write!(f, "lf:{}", parts.join("+"))
            }
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Parses the command-line tokens `c5`, `p4`, `k5`, `4pan`, `co4pan`,
    /// `bull`, `cricket`, `diamond` and `lf:3+1+1`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let unknown = || Error::UnknownName(s.into());
        let number = |digits: &str| digits.parse::<usize>().map_err(|_| unknown());
        Ok(match t.as_str() {
            "4pan" => NamedGraph::FourPan,
            "co4pan" => NamedGraph::FourPanComplement,
            "bull" => NamedGraph::Bull,
            "cricket" => NamedGraph::Cricket,
            "diamond" => NamedGraph::Diamond,
            _ => {
                if let Some(rest) = t.strip_prefix("lf:") {
                    let lengths = rest.split('+').map(number).collect::<Result<Vec<_>>>()?;
                    NamedGraph::LinearForest(lengths)
                } else if let Some(rest) = t.strip_prefix('c') {
                    NamedGraph::Cycle(number(rest)?)
                } else if let Some(rest) = t.strip_prefix('p') {
                    NamedGraph::Path(number(rest)?)
                } else if let Some(rest) = t.strip_prefix('k') {
                    NamedGraph::Complete(number(rest)?)
                } else {
                    return Err(unknown());
                }
            }
        })
    }
}
