//! Simple graphs, their edge ideals, and the combinatorial criteria for
//! vanishing of the VV module of an edge-ideal pair `I(G') ⊆ I(G)`.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A simple graph on the vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (a, b) in edges {
            if a == b {
                return Err(Error::Invalid(format!("loop at vertex {a}")));
            }
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::Invalid(format!("edge {{{a},{b}}} outside 1..={n}")));
            }
            let e = (a.min(b), a.max(b));
            if !g.edges.insert(e) {
                return Err(Error::Invalid(format!("duplicate edge {{{},{}}}", e.0, e.1)));
            }
            g.adj[a][b] = true;
            g.adj[b][a] = true;
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
            adj: vec![vec![false; n + 1]; n + 1],
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
        Self::new(n, edges).expect("valid")
    }

    /// The cycle `1 - 2 - ... - n - 1`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::OutOfRange(format!("cycle needs n >= 3, got {n}")));
        }
        Self::new(n, (1..=n).map(|i| (i, i % n + 1)))
    }

    /// Complete bipartite graph with parts `1..=a` and `a+1..=a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (1..=a).flat_map(|i| (a + 1..=a + b).map(move |j| (i, j)));
        Self::new(a + b, edges).expect("valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a <= self.n && b <= self.n && self.adj[a][b]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).filter(move |&u| self.adj[v][u])
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges.iter().all(|&(a, b)| other.has_edge(a, b))
    }

    fn ensure_subgraph(&self, sup: &Graph) -> Result<()> {
        if !self.is_subgraph_of(sup) {
            return Err(Error::Invalid(
                "the first graph is not a subgraph of the second (same vertex set required)".into(),
            ));
        }
        Ok(())
    }
}

/// Outcome of a combinatorial predicate, carrying a counterexample on failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "violation", rename_all = "kebab-case")]
pub enum Verdict<W> {
    Holds,
    Violated(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn violation(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(w) => Some(w),
        }
    }
}

/// A 3-cycle `i - j - k - i` of `G` with `{i,j}` in `G'` but neither `{i,k}` nor `{j,k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct C3Violation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// A path `i' - i - j - j'` of `G` with `{i,j}` in `G'`, `{i',j'}` not in `G`,
/// and none of the four closure conditions satisfied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct P3Violation {
    pub i_prime: usize,
    pub i: usize,
    pub j: usize,
    pub j_prime: usize,
}

impl C3Violation {
    /// `x_i x_j x_k^2 = lcm(x_i x_j, x_i x_k * x_j x_k)`, in `J ∩ I^2` but not `J I`.
    pub fn witness(&self, n: usize) -> Monomial {
        let mut e = vec![0u32; n];
        e[self.i - 1] = 1;
        e[self.j - 1] = 1;
        e[self.k - 1] = 2;
        Monomial::new(e).expect("small exponents")
    }
}

impl P3Violation {
    /// `x_i x_j x_i' x_j' = lcm(x_i x_j, x_i x_i' * x_j x_j')`.
    pub fn witness(&self, n: usize) -> Monomial {
        Monomial::squarefree(n, &[self.i_prime, self.i, self.j, self.j_prime]).expect("in range")
    }
}

pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let gens = g
        .edges()
        .map(|(a, b)| Monomial::squarefree(g.n, &[a, b]).expect("in range"));
    MonomialIdeal::minimize(g.n, gens).expect("one context")
}

pub fn is_almost_c3_embedded(sub: &Graph, g: &Graph) -> Result<Verdict<C3Violation>> {
    sub.ensure_subgraph(g)?;
    for (i, j) in sub.edges() {
        for k in 1..=g.n {
            if k == i || k == j || !g.has_edge(i, k) || !g.has_edge(j, k) {
                continue;
            }
            if !sub.has_edge(i, k) && !sub.has_edge(j, k) {
                return Ok(Verdict::Violated(C3Violation { i, j, k }));
            }
        }
    }
    Ok(Verdict::Holds)
}

pub fn is_almost_p3_embedded(sub: &Graph, g: &Graph) -> Result<Verdict<P3Violation>> {
    sub.ensure_subgraph(g)?;
    for (a, b) in sub.edges() {
        for (i, j) in [(a, b), (b, a)] {
            for ip in g.neighbors(i) {
                if ip == j {
                    continue;
                }
                for jp in g.neighbors(j) {
                    if jp == i || jp == ip || g.has_edge(ip, jp) {
                        continue;
                    }
                    let ok = sub.has_edge(ip, i)
                        || sub.has_edge(jp, j)
                        || (sub.has_edge(ip, j) && g.has_edge(i, jp))
                        || (sub.has_edge(i, jp) && g.has_edge(ip, j));
                    if !ok {
                        return Ok(Verdict::Violated(P3Violation {
                            i_prime: ip,
                            i,
                            j,
                            j_prime: jp,
                        }));
                    }
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphClassification {
    pub c3: Verdict<C3Violation>,
    pub p3: Verdict<P3Violation>,
    pub vanishes: bool,
}

impl GraphClassification {
    /// The degree-2 monomial certificate reconstructed from the first violation.
    pub fn witness(&self, n: usize) -> Option<Monomial> {
        if let Some(v) = self.c3.violation() {
            return Some(v.witness(n));
        }
        self.p3.violation().map(|v| v.witness(n))
    }
}

/// Combinatorial prediction of `VV_{I(G') ⊆ I(G)} = 0`: almost C3- and P3-embedded.
pub fn vv_vanishes_graph(sub: &Graph, g: &Graph) -> Result<GraphClassification> {
    let c3 = is_almost_c3_embedded(sub, g)?;
    let p3 = is_almost_p3_embedded(sub, g)?;
    let vanishes = c3.holds() && p3.holds();
    Ok(GraphClassification { c3, p3, vanishes })
}

/// Checks that `w ∈ J ∩ I^2` and `w ∉ J I` for the edge ideals of the pair.
pub fn confirm_witness(sub: &Graph, g: &Graph, w: &Monomial) -> Result<bool> {
    let j = edge_ideal(sub);
    let i = edge_ideal(g);
    let in_j = j.contains(w)?;
    let in_i2 = i.power(2)?.contains(w)?;
    let in_ji = j.product(&i)?.contains(w)?;
    Ok(in_j && in_i2 && !in_ji)
}

/// Inside `K_n`: every edge `{i,j}` of `G'` has `N(i) ∪ N(j) = [n]`.
pub fn complete_graph_criterion(sub: &Graph, n: usize) -> bool {
    sub.edges().all(|(i, j)| {
        (1..=n).all(|v| sub.has_edge(i, v) || sub.has_edge(j, v) || v == i || v == j)
    })
}

/// Whether `G'` is a complete multipartite graph whose parts cover `[n]`:
/// non-adjacency must be transitive (it is reflexive and symmetric already).
pub fn is_complete_multipartite_spanning(sub: &Graph, n: usize) -> bool {
    let adj = |a: usize, b: usize| sub.has_edge(a, b);
    for u in 1..=n {
        for v in 1..=n {
            if u == v || adj(u, v) {
                continue;
            }
            for w in 1..=n {
                if w != u && w != v && !adj(v, w) && adj(u, w) {
                    return false;
                }
            }
        }
    }
    true
}

/// A 2-coloring by breadth-first search, or `None` if an odd cycle exists.
/// Isolated vertices go to the first class.
pub fn is_bipartite(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut color: Vec<Option<bool>> = vec![None; g.n + 1];
    for s in 1..=g.n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let c = color[v].unwrap();
            for u in g.neighbors(v) {
                match color[u] {
                    None => {
                        color[u] = Some(!c);
                        queue.push_back(u);
                    }
                    Some(cu) if cu == c => return None,
                    _ => {}
                }
            }
        }
    }
    let left = (1..=g.n).filter(|&v| color[v] == Some(false)).collect();
    let right = (1..=g.n).filter(|&v| color[v] == Some(true)).collect();
    Some((left, right))
}
