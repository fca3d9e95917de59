//! JSON formats for ideals, ideal pairs, graphs and clutters.
//!
//! ```text
//! ideal:   {"vars": ["x1","x2"], "generators": [[1,1],[0,2]]}
//! pair:    {"J": <ideal>, "I": <ideal>}
//! graph:   {"n": 4, "edges": [[1,2],[2,3]]}
//! clutter: {"n": 6, "d": 3, "circuits": [[1,3,5]]}
//! ```

use serde::Deserialize;
use serde_json::{json, Value};

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIdeal {
    vars: Vec<String>,
    generators: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    #[serde(rename = "J")]
    j: Value,
    #[serde(rename = "I")]
    i: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawClutter {
    n: usize,
    d: usize,
    circuits: Vec<Vec<usize>>,
}

/// An ideal together with the names of its ring's variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedIdeal {
    pub ctx: RingContext,
    pub ideal: MonomialIdeal,
}

/// A pair `J ⊆ I` over one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedPair {
    pub ctx: RingContext,
    pub j: MonomialIdeal,
    pub i: MonomialIdeal,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Invalid(format!("malformed JSON: {e}"))
}

fn ideal_from_raw(raw: RawIdeal) -> Result<NamedIdeal> {
    let ctx = RingContext::new(raw.vars)?;
    let n = ctx.nvars();
    let mut gens = Vec::with_capacity(raw.generators.len());
    for (k, row) in raw.generators.into_iter().enumerate() {
        if row.len() != n {
            return Err(Error::Invalid(format!(
                "generator {k} has {} exponents, expected {n}",
                row.len()
            )));
        }
        let exps = row
            .into_iter()
            .map(|e| {
                u32::try_from(e).map_err(|_| Error::Invalid(format!("exponent {e} in generator {k} is not a nonnegative 32-bit value")))
            })
            .collect::<Result<Vec<_>>>()?;
        gens.push(Monomial::new(exps)?);
    }
    let ideal = MonomialIdeal::minimize(n, gens)?;
    Ok(NamedIdeal { ctx, ideal })
}

pub fn parse_ideal(text: &str) -> Result<NamedIdeal> {
    ideal_from_raw(serde_json::from_str(text).map_err(parse_err)?)
}

pub fn ideal_value(ctx: &RingContext, ideal: &MonomialIdeal) -> Value {
    let rows: Vec<&[u32]> = ideal.gens().iter().map(Monomial::exps).collect();
    json!({"vars": ctx.names(), "generators": rows})
}

pub fn parse_pair(text: &str) -> Result<NamedPair> {
    let raw: RawPair = serde_json::from_str(text).map_err(parse_err)?;
    let j = ideal_from_raw(serde_json::from_value(raw.j).map_err(parse_err)?)?;
    let i = ideal_from_raw(serde_json::from_value(raw.i).map_err(parse_err)?)?;
    if j.ctx != i.ctx {
        return Err(Error::Invalid("J and I must use the same variable list".into()));
    }
    Ok(NamedPair {
        ctx: j.ctx,
        j: j.ideal,
        i: i.ideal,
    })
}

pub fn pair_value(ctx: &RingContext, j: &MonomialIdeal, i: &MonomialIdeal) -> Value {
    json!({"J": ideal_value(ctx, j), "I": ideal_value(ctx, i)})
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let raw: RawGraph = serde_json::from_str(text).map_err(parse_err)?;
    Graph::new(raw.n, raw.edges)
}

pub fn graph_value(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().map(|(a, b)| [a, b]).collect();
    json!({"n": g.n(), "edges": edges})
}

pub fn parse_clutter(text: &str) -> Result<Clutter> {
    let raw: RawClutter = serde_json::from_str(text).map_err(parse_err)?;
    Clutter::new(raw.n, raw.d, raw.circuits)
}

pub fn clutter_value(c: &Clutter) -> Value {
    let circuits: Vec<&Vec<usize>> = c.circuits().collect();
    json!({"n": c.n(), "d": c.d(), "circuits": circuits})
}
