use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::clutter::{detect_partition, Clutter};
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, Graph};
use crate::ideal::{power_maximal, MonomialIdeal};
use crate::vv::vv_vanishes;

use super::{
    barshay_relations, dpartite_relations, even_cycle_binomials, even_walk_binomials, generation_check,
    symmetric_relations, taylor_relations, Binomial, Generator, MixedMonomial, MonomialMap, PresentationReport,
};

/// Which relation family supplies the binomial part of a presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `I` is an edge ideal: syzygies plus even-cycle (bipartite) or even-walk binomials.
    Graph,
    /// `I` is the facet ideal of a complete d-partite clutter: swap relations.
    Dpartite,
    /// `I = 𝔪^d`: the 2x2 minors of `[X | M]`.
    MaximalPower,
    /// Any `I`: syzygies plus all Taylor relations up to the degree bound.
    Taylor,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph" => Ok(Family::Graph),
            "dpartite" => Ok(Family::Dpartite),
            "maximal-power" => Ok(Family::MaximalPower),
            "taylor" => Ok(Family::Taylor),
            _ => Err(Error::Invalid(format!("unknown family {s:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Graph => "graph",
            Family::Dpartite => "dpartite",
            Family::MaximalPower => "maximal-power",
            Family::Taylor => "taylor",
        })
    }
}

/// `(g / f_i) T_i` for every generator `g` of `J` and every `f_i | g`.
pub fn degree_one_lifts(phi: &MonomialMap, j: &MonomialIdeal) -> Vec<MixedMonomial> {
    let mut out = Vec::new();
    for g in j.gens() {
        for (i, f) in phi.images().iter().enumerate() {
            if let Ok(Some(q)) = g.div(f) {
                let mut t = phi.t_var(i);
                t.x = q;
                out.push(t);
            }
        }
    }
    out
}

fn graph_of(i: &MonomialIdeal) -> Result<Graph> {
    let mut edges = Vec::new();
    for f in i.gens() {
        if !f.is_squarefree() || f.degree() != 2 {
            return Err(Error::Invalid(format!("{f} is not an edge monomial")));
        }
        let s = f.support();
        edges.push((s[0] + 1, s[1] + 1));
    }
    Graph::new(i.nvars(), edges)
}

fn clutter_of(i: &MonomialIdeal) -> Result<Clutter> {
    let d = i.indeg()? as usize;
    let mut circuits = Vec::new();
    for f in i.gens() {
        if !f.is_squarefree() || f.degree() as usize != d {
            return Err(Error::Invalid(format!("{f} is not a squarefree monomial of degree {d}")));
        }
        circuits.push(f.support().into_iter().map(|v| v + 1).collect());
    }
    Clutter::new(i.nvars(), d, circuits)
}

fn family_binomials(family: Family, j: &MonomialIdeal, i: &MonomialIdeal, phi: &MonomialMap, max_degree: u32) -> Result<Vec<Binomial>> {
    match family {
        Family::Graph => {
            let g = graph_of(i)?;
            let mut out = symmetric_relations(phi)?;
            if is_bipartite(&g).is_some() {
                out.extend(even_cycle_binomials(phi, &g)?);
            } else {
                out.extend(even_walk_binomials(phi, &g, 2 * max_degree.max(2) as usize)?);
            }
            Ok(out)
        }
        Family::Dpartite => {
            let c = clutter_of(i)?;
            if detect_partition(&c).is_none() {
                return Err(Error::Invalid("I is not the facet ideal of a complete d-partite clutter".into()));
            }
            if let Some(g) = j.gens().iter().find(|g| !i.gens().contains(g)) {
                return Err(Error::Invalid(format!("{g} is not a circuit monomial of I")));
            }
            dpartite_relations(phi, &c)
        }
        Family::MaximalPower => {
            let d = i.t0()?;
            if *i != power_maximal(i.nvars(), d)? {
                return Err(Error::Invalid("I is not a power of the maximal ideal".into()));
            }
            barshay_relations(i.nvars(), d)
        }
        Family::Taylor => {
            let mut out = symmetric_relations(phi)?;
            for s in 2..=max_degree as usize {
                out.extend(taylor_relations(phi, s)?);
            }
            Ok(out)
        }
    }
}

/// Proposes `J`, its degree-one lifts, and the family's binomials as defining
/// equations of the Rees algebra of `I/J`, and checks them up to `max_degree`.
/// Requires the Valabrega-Valla module of `J ⊆ I` to vanish.
pub fn assemble_quotient_presentation(
    j: &MonomialIdeal,
    i: &MonomialIdeal,
    family: Family,
    max_degree: u32,
    budget: usize,
) -> Result<PresentationReport> {
    if !vv_vanishes(j, i)?.vanishes {
        return Err(Error::VvNotVanishing);
    }
    let phi = MonomialMap::from_ideal(i)?;
    let m = phi.len();
    let mut gens: Vec<Generator> = j
        .gens()
        .iter()
        .map(|g| MixedMonomial::new(g.clone(), vec![0; m]).into())
        .collect();
    gens.extend(degree_one_lifts(&phi, j).into_iter().map(Generator::from));
    gens.extend(
        family_binomials(family, j, i, &phi, max_degree)?
            .into_iter()
            .map(Generator::from),
    );
    generation_check(&phi, &gens, max_degree, Some(j), budget)
}
