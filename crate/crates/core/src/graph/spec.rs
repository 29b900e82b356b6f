//! The `kind:args` mini-grammar naming generated graphs, e.g. `path:6`,
//! `alkane:3`, `named:neopentane`, `spider:2:1,1,2`, `star:4`.

use std::fmt;
use std::str::FromStr;

use super::{alkane, named_alkane, path, spider, star, AlkaneName, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Spider {
        root_leaves: usize,
        children: Vec<usize>,
    },
    Alkane(usize),
    Named(AlkaneName),
}

impl GeneratorSpec {
    pub fn build(&self) -> Graph {
        match self {
            GeneratorSpec::Path(n) => path(*n),
            GeneratorSpec::Cycle(n) => Graph::from_edge_list(*n, (0..*n).map(|i| (i, (i + 1) % n)))
                .expect("cycle is valid"),
            GeneratorSpec::Complete(n) => {
                Graph::from_edge_list(*n, (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))))
                    .expect("complete graph is valid")
            }
            GeneratorSpec::Star(m) => star(*m),
            GeneratorSpec::Spider {
                root_leaves,
                children,
            } => spider(*root_leaves, children),
            GeneratorSpec::Alkane(n) => alkane(*n),
            GeneratorSpec::Named(name) => named_alkane(*name),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Path(n) => write!(f, "path:{n}"),
            GeneratorSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GeneratorSpec::Complete(n) => write!(f, "complete:{n}"),
            GeneratorSpec::Star(m) => write!(f, "star:{m}"),
            GeneratorSpec::Spider {
                root_leaves,
                children,
            } => {
                write!(f, "spider:{root_leaves}")?;
                if !children.is_empty() {
                    let parts: Vec<String> = children.iter().map(usize::to_string).collect();
                    write!(f, ":{}", parts.join(","))?;
                }
                Ok(())
            }
            GeneratorSpec::Alkane(n) => write!(f, "alkane:{n}"),
            GeneratorSpec::Named(name) => write!(f, "named:{name}"),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| GraphError::Spec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let count = |text: &str, min: usize, what: &str| -> Result<usize, GraphError> {
            match text.trim().parse::<usize>() {
                Ok(v) if v >= min => Ok(v),
                _ => Err(bad(&format!("{what} must be an integer of at least {min}"))),
            }
        };
        let (kind, args) = s.split_once(':').ok_or_else(|| bad("expected kind:args"))?;
        Ok(match kind.trim() {
            "path" => GeneratorSpec::Path(count(args, 1, "vertex count")?),
            "cycle" => GeneratorSpec::Cycle(count(args, 3, "vertex count")?),
            "complete" => GeneratorSpec::Complete(count(args, 1, "vertex count")?),
            "star" => GeneratorSpec::Star(count(args, 0, "leaf count")?),
            "alkane" => GeneratorSpec::Alkane(count(args, 1, "carbon count")?),
            "named" => GeneratorSpec::Named(args.trim().parse()?),
            "spider" => {
                let (root, children) = args.split_once(':').unwrap_or((args, ""));
                let root_leaves = count(root, 0, "root leaf count")?;
                let mut children = children
                    .split(',')
                    .filter(|c| !c.trim().is_empty())
                    .map(|c| count(c, 1, "child leaf count"))
                    .collect::<Result<Vec<_>, _>>()?;
                children.sort_unstable();
                GeneratorSpec::Spider {
                    root_leaves,
                    children,
                }
            }
            _ => {
                return Err(bad(
                    "unknown kind (path, cycle, complete, star, spider, alkane, named)",
                ))
            }
        })
    }
}
