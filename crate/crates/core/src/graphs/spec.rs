use std::fmt;

use super::{
    cartesian_product, complete, complete_bipartite, cycle, grid, path, perfect_binary_tree, star,
    Graph,
};
use crate::error::{Error, Result};

/// Parsed graph description.
///
/// ```text
/// spec     := family | "product(" spec "," spec ")" | "edges:" INT ":[" edgelist "]"
/// family   := ("path"|"cycle"|"complete"|"star"|"pbt") ":" INT
///           | ("bipartite"|"grid") ":" INT "," INT
/// edgelist := INT "-" INT ("," INT "-" INT)*
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Pbt(u32),
    Bipartite(usize, usize),
    Grid(usize, usize),
    Product(Box<GraphSpec>, Box<GraphSpec>),
    Edges {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl GraphSpec {
    /// Syntax-only parse; parameter ranges are checked by [`GraphSpec::build`].
    pub fn parse(src: &str) -> Result<GraphSpec> {
        let mut p = SpecParser {
            src: src.as_bytes(),
            pos: 0,
        };
        let spec = p.spec()?;
        if p.pos != p.src.len() {
            return Err(Error::parse(p.pos, "unexpected trailing input"));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Path(n) => path(*n),
            GraphSpec::Cycle(n) => cycle(*n),
            GraphSpec::Complete(n) => complete(*n),
            GraphSpec::Star(m) => star(*m),
            GraphSpec::Pbt(h) => perfect_binary_tree(*h),
            GraphSpec::Bipartite(n, m) => complete_bipartite(*n, *m),
            GraphSpec::Grid(m, n) => grid(*m, *n),
            GraphSpec::Product(a, b) => Ok(cartesian_product(&a.build()?, &b.build()?)),
            GraphSpec::Edges { n, edges } => Graph::from_edges(*n, edges),
        }
    }

    /// For `product(G, path:n)` returns `(G, n)`.
    pub fn as_path_product(&self) -> Option<(&GraphSpec, usize)> {
        match self {
            GraphSpec::Product(g, p) => match p.as_ref() {
                GraphSpec::Path(n) => Some((g.as_ref(), *n)),
                _ => None,
            },
            _ => None,
        }
    }
}

/// Parses and builds in one step.
pub fn parse_graph_spec(src: &str) -> Result<Graph> {
    GraphSpec::parse(src)?.build()
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::Star(n) => write!(f, "star:{n}"),
            GraphSpec::Pbt(h) => write!(f, "pbt:{h}"),
            GraphSpec::Bipartite(n, m) => write!(f, "bipartite:{n},{m}"),
            GraphSpec::Grid(m, n) => write!(f, "grid:{m},{n}"),
            GraphSpec::Product(a, b) => write!(f, "product({a},{b})"),
            GraphSpec::Edges { n, edges } => {
                write!(f, "edges:{n}:[")?;
                for (i, (u, v)) in edges.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{u}-{v}")?;
                }
                f.write_str("]")
            }
        }
    }
}

struct SpecParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl SpecParser<'_> {
    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.src[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected {lit:?}")))
        }
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::parse(start, "integer too large"))
    }

    fn word(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_lowercase() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii letters")
    }

    fn spec(&mut self) -> Result<GraphSpec> {
        let start = self.pos;
        let word = self.word().to_owned();
        match word.as_str() {
            "product" => {
                self.expect("(")?;
                let a = self.spec()?;
                self.expect(",")?;
                let b = self.spec()?;
                self.expect(")")?;
                Ok(GraphSpec::Product(Box::new(a), Box::new(b)))
            }
            "edges" => {
                self.expect(":")?;
                let n = self.int()?;
                self.expect(":[")?;
                let mut edges = Vec::new();
                loop {
                    let u = self.int()?;
                    self.expect("-")?;
                    let v = self.int()?;
                    edges.push((u, v));
                    if self.expect(",").is_err() {
                        break;
                    }
                }
                self.expect("]")?;
                Ok(GraphSpec::Edges { n, edges })
            }
            "path" | "cycle" | "complete" | "star" | "pbt" => {
                self.expect(":")?;
                let at = self.pos;
                let n = self.int()?;
                Ok(match word.as_str() {
                    "path" => GraphSpec::Path(n),
                    "cycle" => GraphSpec::Cycle(n),
                    "complete" => GraphSpec::Complete(n),
                    "star" => GraphSpec::Star(n),
                    _ => GraphSpec::Pbt(
                        u32::try_from(n).map_err(|_| Error::parse(at, "height too large"))?,
                    ),
                })
            }
            "bipartite" | "grid" => {
                self.expect(":")?;
                let a = self.int()?;
                self.expect(",")?;
                let b = self.int()?;
                Ok(if word == "grid" {
                    GraphSpec::Grid(a, b)
                } else {
                    GraphSpec::Bipartite(a, b)
                })
            }
            "" => Err(Error::parse(start, "expected a graph family")),
            other => Err(Error::parse(
                start,
                format!("unknown graph family {other:?}"),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs;

    #[test]
    fn spec_examples() {
        assert_eq!(
            parse_graph_spec("complete:4").unwrap(),
            graphs::complete(4).unwrap()
        );
        let g = parse_graph_spec("product(star:3,path:4)").unwrap();
        assert_eq!(g.vertex_count(), 16);
        assert_eq!(
            parse_graph_spec("edges:3:[0-1,1-2]").unwrap(),
            graphs::path(3).unwrap()
        );
        assert_eq!(parse_graph_spec("grid:2,3").unwrap().edge_count(), 7);
        assert_eq!(parse_graph_spec("bipartite:2,3").unwrap().edge_count(), 6);
        assert_eq!(parse_graph_spec("pbt:2").unwrap().vertex_count(), 7);
    }

    #[test]
    fn arity_and_syntax_errors() {
        assert!(matches!(
            parse_graph_spec("cycle:2"),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            parse_graph_spec("path:0"),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            parse_graph_spec("cube:3"),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            parse_graph_spec("product(path:2 path:3)"),
            Err(Error::Parse { pos: 14, .. })
        ));
        assert!(matches!(
            parse_graph_spec("path:"),
            Err(Error::Parse { pos: 5, .. })
        ));
        assert!(matches!(
            parse_graph_spec("path:3x"),
            Err(Error::Parse { pos: 6, .. })
        ));
        assert!(matches!(
            parse_graph_spec("edges:3:[0-1,]"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn display_roundtrip_and_product_detection() {
        for src in [
            "product(complete:3,path:4)",
            "edges:4:[0-1,2-3]",
            "bipartite:2,5",
            "pbt:3",
            "grid:3,3",
        ] {
            let s = GraphSpec::parse(src).unwrap();
            assert_eq!(s.to_string(), src);
        }
        let s = GraphSpec::parse("product(complete:3,path:4)").unwrap();
        let (g, n) = s.as_path_product().unwrap();
        assert_eq!((g, n), (&GraphSpec::Complete(3), 4));
        assert!(GraphSpec::parse("product(path:4,complete:3)")
            .unwrap()
            .as_path_product()
            .is_none());
    }
}
