//! JSON shapes shared by the CLI and the tests.
//!
//! A coloring is `{"n": 4, "edges": [{"u": 0, "v": 1, "list": "rb"}, ...]}`
//! with `u < v` and every pair of `K_n` listed exactly once.

use balance_core::engines::{EngineOutcome, PatternWitness};
use balance_core::{BalancedWitness, Color, Label, ListColoring, SmallGraph};
use serde::{Deserialize, Serialize};

use super::{graph6, FormatError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub u: usize,
    pub v: usize,
    pub list: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub n: usize,
    pub edges: Vec<EdgeJson>,
}

impl From<&ListColoring> for ColoringJson {
    fn from(c: &ListColoring) -> Self {
        let edges = c
            .labeled_pairs()
            .map(|(u, v, l)| EdgeJson {
                u,
                v,
                list: l.as_str().to_string(),
            })
            .collect();
        ColoringJson {
            n: c.vertex_count(),
            edges,
        }
    }
}

impl TryFrom<ColoringJson> for ListColoring {
    type Error = FormatError;

    fn try_from(j: ColoringJson) -> Result<Self, FormatError> {
        let bad = |why: String| FormatError::Coloring(why);
        let n = j.n;
        if n > balance_core::graph::MAX_VERTICES {
            return Err(bad(format!("{n} vertices exceed the cap")));
        }
        let mut seen = vec![vec![false; n]; n];
        let mut c = ListColoring::uniform(n, Label::B).map_err(|e| bad(e.to_string()))?;
        for e in &j.edges {
            if e.u >= e.v || e.v >= n {
                return Err(bad(format!("edge ({}, {}) needs u < v < n = {n}", e.u, e.v)));
            }
            if std::mem::replace(&mut seen[e.u][e.v], true) {
                return Err(bad(format!("edge ({}, {}) listed twice", e.u, e.v)));
            }
            let label = Label::parse(&e.list).ok_or_else(|| bad(format!("unknown list `{}`", e.list)))?;
            c.set(e.u, e.v, label);
        }
        let expected = n * n.saturating_sub(1) / 2;
        if j.edges.len() != expected {
            return Err(bad(format!(
                "{} edges listed, binom({n}, 2) = {expected} expected",
                j.edges.len()
            )));
        }
        Ok(c)
    }
}

pub fn coloring_to_string(c: &ListColoring) -> String {
    serde_json::to_string(&ColoringJson::from(c)).expect("serializable")
}

pub fn coloring_from_str(s: &str) -> Result<ListColoring, FormatError> {
    let j: ColoringJson = serde_json::from_str(s).map_err(|e| FormatError::Coloring(e.to_string()))?;
    j.try_into()
}

pub fn color_str(c: Color) -> &'static str {
    match c {
        Color::Red => "r",
        Color::Blue => "b",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessEdgeJson {
    pub u: usize,
    pub v: usize,
    pub color: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessJson {
    /// The target in graph6.
    pub target: String,
    pub mapping: Vec<usize>,
    /// Host edges of the copy with their chosen colors.
    pub edges: Vec<WitnessEdgeJson>,
    pub red: usize,
    pub blue: usize,
}

impl WitnessJson {
    pub fn new(g: &SmallGraph, w: &BalancedWitness) -> Self {
        let edges = w
            .image_edges(g)
            .into_iter()
            .map(|(u, v, c)| WitnessEdgeJson {
                u,
                v,
                color: color_str(c),
            })
            .collect();
        WitnessJson {
            target: graph6::encode(g),
            mapping: w.mapping.clone(),
            edges,
            red: w.red_count(),
            blue: w.blue_count(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternJson {
    pub kind: &'static str,
    pub primary: &'static str,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl From<&PatternWitness> for PatternJson {
    fn from(p: &PatternWitness) -> Self {
        let kind = match p.kind {
            balance_core::engines::PatternKind::TypeA => "type-a",
            balance_core::engines::PatternKind::TypeB => "type-b",
        };
        PatternJson {
            kind,
            primary: color_str(p.primary()),
            x: p.x.clone(),
            y: p.y.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EngineJson {
    pub case: &'static str,
    pub witness: WitnessJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern: Option<PatternJson>,
}

impl From<&EngineOutcome> for EngineJson {
    fn from(o: &EngineOutcome) -> Self {
        EngineJson {
            case: o.route.as_str(),
            witness: WitnessJson::new(&o.target, &o.witness),
            pattern: o.pattern.as_ref().map(PatternJson::from),
        }
    }
}
