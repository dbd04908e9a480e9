//! Parametric graph families and the figure fixtures.
//!
//! Vertex layouts:
//! - `Path(n)`: `0-1-...-(n-1)`; `Cycle(n)` adds `(n-1)-0`.
//! - `CompleteBipartite(m, n)`: parts `0..m` and `m..m+n`.
//! - `Wheel(n)`: hub `0`, rim `1..n` in cyclic order.
//! - `Corona(H, F)`: `H` on `0..h`, copy `i` of `F` on `h + i*f ..`.
//! - `Diadem(H)`: `Corona(H, K1)` plus vertex `2h` joined to the support `0`.
//! - `Fig1(i)`: path `0-1-2`, vertex `2` joined to the first vertex of `i`
//!   pendant four-vertex paths `3+4k .. 6+4k`.
//! - `Fig3a(i)`: cycle `0-1-2-3-0`, vertex `2` carrying `i` pendant paths
//!   `2-(4+2k)-(5+2k)`. The marked edge is `{0,3}`.
//! - `Fig3b(i)`: `Fig3a(i)` without `{0,3}` and without the dashed edge `{2,3}`,
//!   leaving `3` isolated.
//! - `Fig4(i)`: centre `0` with `i` pendant paths `0-(1+2k)-(2+2k)`.

use std::fmt;
use std::str::FromStr;

use super::{encode_graph6, parse_graph6, Graph};
use crate::bitset::VertexSet;
use crate::domination::DD2Pair;
use crate::error::{Error, Result};

/// Edge of `Fig3a(i)` whose deletion turns it into a corona.
pub const FIG3A_MARKED_EDGE: (usize, usize) = (0, 3);
/// Non-edge of `Fig3b(i)` whose addition turns it into a corona.
pub const FIG3B_DASHED_EDGE: (usize, usize) = (2, 3);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Total vertex count, hub included.
    Wheel(usize),
    EmptyGraph(usize),
    Corona(Box<FamilySpec>, Box<FamilySpec>),
    Diadem(Box<FamilySpec>),
    Fig1(usize),
    Fig3a(usize),
    Fig3b(usize),
    Fig4(usize),
    Explicit(Graph),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

impl FamilySpec {
    pub fn corona(h: FamilySpec, f: FamilySpec) -> Self {
        FamilySpec::Corona(Box::new(h), Box::new(f))
    }

    pub fn diadem(h: FamilySpec) -> Self {
        FamilySpec::Diadem(Box::new(h))
    }

    pub fn build(&self) -> Result<Graph> {
        use FamilySpec::*;
        match *self {
            Path(n) => {
                if n == 0 {
                    return Err(invalid("path needs n >= 1"));
                }
                Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
            }
            Cycle(n) => {
                if n < 3 {
                    return Err(invalid("cycle needs n >= 3"));
                }
                Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            Complete(n) => {
                if n == 0 {
                    return Err(invalid("complete graph needs n >= 1"));
                }
                Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            CompleteBipartite(m, n) => {
                if m == 0 || m > n {
                    return Err(invalid("complete bipartite needs 1 <= m <= n"));
                }
                Graph::from_edges(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
            }
            Wheel(n) => {
                if n < 4 {
                    return Err(invalid("wheel needs n >= 4 vertices"));
                }
                let rim = n - 1;
                Graph::from_edges(
                    n,
                    (1..n)
                        .map(|v| (0, v))
                        .chain((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim))),
                )
            }
            EmptyGraph(n) => Graph::empty(n),
            Corona(ref h, ref f) => corona_product(&h.build()?, &f.build()?),
            Diadem(ref h) => {
                let h = h.build()?;
                if h.order() == 0 {
                    return Err(invalid("diadem needs a non-empty base graph"));
                }
                let corona = corona_product(&h, &Graph::empty(1)?)?;
                corona.with_vertex(&VertexSet::singleton(0))
            }
            Fig1(i) => {
                check_index(i)?;
                let mut edges = vec![(0, 1), (1, 2)];
                for k in 0..i {
                    let x = 3 + 4 * k;
                    edges.extend([(2, x), (x, x + 1), (x + 1, x + 2), (x + 2, x + 3)]);
                }
                Graph::from_edges(4 * i + 3, edges)
            }
            Fig3a(i) => {
                check_index(i)?;
                let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
                for k in 0..i {
                    let a = 4 + 2 * k;
                    edges.extend([(2, a), (a, a + 1)]);
                }
                Graph::from_edges(2 * i + 4, edges)
            }
            Fig3b(i) => {
                let (a, b) = FIG3A_MARKED_EDGE;
                let (c, d) = FIG3B_DASHED_EDGE;
                Fig3a(i).build()?.without_edge(a, b)?.without_edge(c, d)
            }
            Fig4(i) => {
                check_index(i)?;
                let edges = (0..i).flat_map(|k| {
                    let a = 1 + 2 * k;
                    [(0, a), (a, a + 1)]
                });
                Graph::from_edges(2 * i + 1, edges)
            }
            Explicit(ref g) => Ok(g.clone()),
        }
    }
}

fn check_index(i: usize) -> Result<()> {
    if i == 0 {
        Err(invalid("figure family index must be >= 1"))
    } else {
        Ok(())
    }
}

/// `H ∘ F`: vertex `i` of `H` is joined to every vertex of the `i`-th copy of `F`.
fn corona_product(h: &Graph, f: &Graph) -> Result<Graph> {
    let (hn, fn_) = (h.order(), f.order());
    let n = hn * (1 + fn_);
    if n > crate::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    for i in 0..hn {
        let base = hn + i * fn_;
        edges.extend(f.edges().map(|(u, v)| (base + u, base + v)));
        edges.extend((0..fn_).map(|u| (i, base + u)));
    }
    Graph::from_edges(n, edges)
}

/// The certified dominating set drawn in black on `Fig1(i)`: the head path
/// plus the third vertex of every branch.
pub fn fig1_certified_set(i: usize) -> VertexSet {
    [0, 1, 2].into_iter().chain((0..i).map(|k| 5 + 4 * k)).collect()
}

/// The `(D, D₂)` pair drawn in black and grey on `Fig1(i)`, with `|D| = 2i+1`.
pub fn fig1_dd2_pair(i: usize) -> DD2Pair {
    let d = std::iter::once(1)
        .chain((0..i).flat_map(|k| [3 + 4 * k, 5 + 4 * k]))
        .collect();
    let d2 = [0, 2]
        .into_iter()
        .chain((0..i).flat_map(|k| [4 + 4 * k, 6 + 4 * k]))
        .collect();
    DD2Pair { d, d2 }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path {n}"),
            Cycle(n) => write!(f, "cycle {n}"),
            Complete(n) => write!(f, "complete {n}"),
            CompleteBipartite(m, n) => write!(f, "bipartite {m} {n}"),
            Wheel(n) => write!(f, "wheel {n}"),
            EmptyGraph(n) => write!(f, "empty {n}"),
            Corona(h, g) => write!(f, "corona({h}, {g})"),
            Diadem(h) => write!(f, "diadem({h})"),
            Fig1(i) => write!(f, "fig1 {i}"),
            Fig3a(i) => write!(f, "fig3a {i}"),
            Fig3b(i) => write!(f, "fig3b {i}"),
            Fig4(i) => write!(f, "fig4 {i}"),
            Explicit(g) => write!(f, "g6:{}", encode_graph6(g)),
        }
    }
}

/// Parses specs such as `wheel 8`, `bipartite 2 3`, `corona(cycle 5, complete 1)`,
/// `diadem(g6:Bw)`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(invalid(format!(
                "unexpected input at offset {}: `{}`",
                p.pos,
                &s[p.pos..]
            )));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        let len = self.rest().find(|c| !pred(c)).unwrap_or(self.rest().len());
        self.pos += len;
        &self.src[start..start + len]
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(invalid(format!("expected `{c}` at offset {}", self.pos)))
        }
    }

    fn numbers(&mut self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let digits = self.take_while(|c| c.is_ascii_digit());
            if digits.is_empty() {
                return Ok(out);
            }
            out.push(
                digits
                    .parse()
                    .map_err(|_| invalid(format!("number too large: {digits}")))?,
            );
        }
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        use FamilySpec::*;
        self.skip_ws();
        if self.rest().starts_with("g6:") {
            self.pos += 3;
            let body = self.take_while(|c| ('?'..='~').contains(&c));
            return Ok(Explicit(parse_graph6(body)?));
        }
        let name = self
            .take_while(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_')
            .to_ascii_lowercase();
        match name.as_str() {
            "corona" => {
                self.expect('(')?;
                let h = self.spec()?;
                self.expect(',')?;
                let f = self.spec()?;
                self.expect(')')?;
                return Ok(FamilySpec::corona(h, f));
            }
            "diadem" => {
                self.expect('(')?;
                let h = self.spec()?;
                self.expect(')')?;
                return Ok(FamilySpec::diadem(h));
            }
            _ => {}
        }
        let args = self.numbers()?;
        let one = |ctor: fn(usize) -> FamilySpec| match args[..] {
            [a] => Ok(ctor(a)),
            _ => Err(invalid(format!("`{name}` takes one integer argument"))),
        };
        match name.as_str() {
            "path" => one(Path),
            "cycle" => one(Cycle),
            "complete" => one(Complete),
            "wheel" => one(Wheel),
            "empty" => one(EmptyGraph),
            "fig1" => one(Fig1),
            "fig3a" => one(Fig3a),
            "fig3b" => one(Fig3b),
            "fig4" => one(Fig4),
            "bipartite" | "complete-bipartite" => match args[..] {
                [m, n] => Ok(CompleteBipartite(m, n)),
                _ => Err(invalid("`bipartite` takes two integer arguments")),
            },
            "" => Err(invalid(format!("expected a family name at offset {}", self.pos))),
            other => Err(invalid(format!("unknown family `{other}`"))),
        }
    }
}
