use std::collections::BTreeSet;

use crate::clutter::{detect_partition, Clutter};
use crate::combinat::multisets;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::power_maximal;
use crate::monomial::Monomial;

use super::{Binomial, MixedMonomial, MonomialMap};

fn counts(m: usize, seq: &[usize]) -> Vec<u32> {
    let mut t = vec![0u32; m];
    for &i in seq {
        t[i] += 1;
    }
    t
}

/// `(f_β / gcd) T_α - (f_α / gcd) T_β` for T-exponent vectors `α`, `β`.
fn taylor_binomial(phi: &MonomialMap, a: &[u32], b: &[u32]) -> Result<Option<Binomial>> {
    let fa = phi.power_product(a)?;
    let fb = phi.power_product(b)?;
    let g = fa.gcd(&fb)?;
    let u = MixedMonomial::new(fb.div(&g)?.expect("gcd divides"), a.to_vec());
    let v = MixedMonomial::new(fa.div(&g)?.expect("gcd divides"), b.to_vec());
    Ok(Binomial::new(u, v))
}

/// Pairwise syzygy relations `(f_j/gcd) T_i - (f_i/gcd) T_j`, `i < j`.
pub fn symmetric_relations(phi: &MonomialMap) -> Result<Vec<Binomial>> {
    let m = phi.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if let Some(b) = taylor_binomial(phi, &counts(m, &[i]), &counts(m, &[j]))? {
                out.push(b);
            }
        }
    }
    Ok(out)
}

/// `T_{α,β}` over all pairs of non-decreasing index sequences of length `s`.
pub fn taylor_relations(phi: &MonomialMap, s: usize) -> Result<Vec<Binomial>> {
    if s < 2 {
        return Err(Error::OutOfRange(format!("Taylor relations need s >= 2, got {s}")));
    }
    let m = phi.len();
    let seqs: Vec<Vec<u32>> = multisets(m, s).iter().map(|q| counts(m, q)).collect();
    let mut out = BTreeSet::new();
    for (k, a) in seqs.iter().enumerate() {
        for b in &seqs[k + 1..] {
            if let Some(bin) = taylor_binomial(phi, a, b)? {
                out.insert(bin);
            }
        }
    }
    Ok(out.into_iter().collect())
}

fn edge_index(phi: &MonomialMap, g: &Graph) -> Result<Vec<Vec<Option<usize>>>> {
    let n = g.n();
    if phi.nvars() != n {
        return Err(Error::ContextMismatch {
            left: phi.nvars(),
            right: n,
        });
    }
    let mut idx = vec![vec![None; n + 1]; n + 1];
    for (a, b) in g.edges() {
        let f = Monomial::squarefree(n, &[a, b])?;
        let k = phi
            .index_of(&f)
            .ok_or_else(|| Error::Invalid(format!("edge {{{a},{b}}} is not among the map's generators")))?;
        idx[a][b] = Some(k);
        idx[b][a] = Some(k);
    }
    Ok(idx)
}

struct WalkSearch<'a> {
    g: &'a Graph,
    idx: Vec<Vec<Option<usize>>>,
    n: usize,
    m: usize,
    max_len: usize,
    simple: bool,
    start: usize,
    odd: Vec<u32>,
    even: Vec<u32>,
    on_path: Vec<bool>,
    out: BTreeSet<Binomial>,
}

impl WalkSearch<'_> {
    fn dfs(&mut self, v: usize, len: usize) {
        let neighbors: Vec<usize> = self.g.neighbors(v).filter(|&u| u >= self.start).collect();
        for u in neighbors {
            let k = self.idx[v][u].expect("edge indexed");
            let closing = u == self.start;
            if self.simple && !closing && self.on_path[u] {
                continue;
            }
            if len.is_multiple_of(2) {
                self.odd[k] += 1;
            } else {
                self.even[k] += 1;
            }
            let new_len = len + 1;
            if closing && new_len.is_multiple_of(2) && (!self.simple || new_len >= 4) {
                let a = MixedMonomial::new(Monomial::one(self.n), self.odd.clone());
                let b = MixedMonomial::new(Monomial::one(self.n), self.even.clone());
                if let Some(bin) = Binomial::new(a, b) {
                    self.out.insert(bin);
                }
            }
            let descend = new_len < self.max_len && !(self.simple && closing);
            if descend {
                self.on_path[u] = true;
                self.dfs(u, new_len);
                if u != self.start {
                    self.on_path[u] = false;
                }
            }
            if len.is_multiple_of(2) {
                self.odd[k] -= 1;
            } else {
                self.even[k] -= 1;
            }
        }
    }
}

fn walk_binomials(phi: &MonomialMap, g: &Graph, max_len: usize, simple: bool) -> Result<Vec<Binomial>> {
    let idx = edge_index(phi, g)?;
    let mut s = WalkSearch {
        g,
        idx,
        n: g.n(),
        m: phi.len(),
        max_len,
        simple,
        start: 0,
        odd: vec![0; phi.len()],
        even: vec![0; phi.len()],
        on_path: vec![false; g.n() + 1],
        out: BTreeSet::new(),
    };
    for start in 1..=g.n() {
        s.start = start;
        s.on_path.iter_mut().for_each(|b| *b = false);
        s.on_path[start] = true;
        s.dfs(start, 0);
    }
    debug_assert!(s.odd.iter().chain(&s.even).all(|&c| c == 0) && s.m == phi.len());
    Ok(s.out.into_iter().collect())
}

/// `T_{e1} T_{e3} ... - T_{e2} T_{e4} ...` for every even closed walk of length
/// at most `max_len`; zero binomials (e.g. from retraced edges) are dropped.
pub fn even_walk_binomials(phi: &MonomialMap, g: &Graph, max_len: usize) -> Result<Vec<Binomial>> {
    if max_len < 4 || max_len % 2 == 1 {
        return Err(Error::OutOfRange(format!("walk length bound must be even and >= 4, got {max_len}")));
    }
    walk_binomials(phi, g, max_len, false)
}

/// The binomials of the simple even cycles of `g`.
pub fn even_cycle_binomials(phi: &MonomialMap, g: &Graph) -> Result<Vec<Binomial>> {
    walk_binomials(phi, g, g.n().max(4), true)
}

/// Swap relations of a complete d-partite clutter: `T_e x_i - x_r T_{e(i)}`
/// with `r` the vertex of `e` in the class of `i`, and `T_e T_{e'} - T_{e(j')} T_{e'(j)}`
/// for `|e' \ e| > 1`, swapping the vertices `j ∈ e`, `j' ∈ e'` of the lowest
/// class in which `e` and `e'` differ.
pub fn dpartite_relations(phi: &MonomialMap, c: &Clutter) -> Result<Vec<Binomial>> {
    let part = detect_partition(c).ok_or_else(|| Error::Invalid("clutter is not complete d-partite".into()))?;
    let n = c.n();
    if phi.nvars() != n {
        return Err(Error::ContextMismatch {
            left: phi.nvars(),
            right: n,
        });
    }
    let mut class_of = vec![None; n + 1];
    for (k, cl) in part.classes.iter().enumerate() {
        for &v in cl {
            class_of[v] = Some(k);
        }
    }
    let d = part.classes.len();
    let m = phi.len();
    let t_of = |e: &[usize]| -> Result<usize> {
        let f = Monomial::squarefree(n, e)?;
        phi.index_of(&f)
            .ok_or_else(|| Error::Invalid(format!("circuit {e:?} is not among the map's generators")))
    };
    let by_class = |e: &[usize]| -> Vec<usize> {
        let mut v = vec![0; d];
        for &x in e {
            v[class_of[x].expect("vertex of a circuit")] = x;
        }
        v
    };
    let swap = |e: &[usize], out: usize, inn: usize| -> Vec<usize> {
        let mut f: Vec<usize> = e.iter().map(|&x| if x == out { inn } else { x }).collect();
        f.sort_unstable();
        f
    };
    let circuits: Vec<Vec<usize>> = c.circuits().cloned().collect();
    let mut out = BTreeSet::new();
    for e in &circuits {
        let te = t_of(e)?;
        let ce = by_class(e);
        for (i, class) in class_of.iter().enumerate().skip(1) {
            let Some(k) = *class else { continue };
            if e.contains(&i) {
                continue;
            }
            let r = ce[k];
            let ei = swap(e, r, i);
            let u = MixedMonomial::new(Monomial::var(n, i - 1), counts(m, &[te]));
            let v = MixedMonomial::new(Monomial::var(n, r - 1), counts(m, &[t_of(&ei)?]));
            out.extend(Binomial::new(u, v));
        }
    }
    for (a, e) in circuits.iter().enumerate() {
        let ce = by_class(e);
        for e2 in &circuits[a + 1..] {
            let ce2 = by_class(e2);
            let differ: Vec<usize> = (0..d).filter(|&k| ce[k] != ce2[k]).collect();
            if differ.len() < 2 {
                continue;
            }
            let (j, j2) = (ce[differ[0]], ce2[differ[0]]);
            let u = counts(m, &[t_of(e)?, t_of(e2)?]);
            let v = counts(m, &[t_of(&swap(e, j, j2))?, t_of(&swap(e2, j2, j))?]);
            let one = Monomial::one(n);
            out.extend(Binomial::new(MixedMonomial::new(one.clone(), u), MixedMonomial::new(one, v)));
        }
    }
    Ok(out.into_iter().collect())
}

/// The 2x2 minors of `[X | M]` where `M[i][j]` is the variable `T_k` with
/// `f_k = x_i m_j`, the `m_j` running over degree-`(d-1)` monomials. Indices
/// refer to `MonomialMap::from_ideal(&power_maximal(n, d))`.
pub fn barshay_relations(n: usize, d: u32) -> Result<Vec<Binomial>> {
    if n == 0 || d == 0 {
        return Err(Error::OutOfRange("need n >= 1 and d >= 1".into()));
    }
    let phi = MonomialMap::from_ideal(&power_maximal(n, d)?)?;
    let m = phi.len();
    let lower: Vec<Monomial> = if d == 1 {
        vec![Monomial::one(n)]
    } else {
        power_maximal(n, d - 1)?.gens().to_vec()
    };
    let cols = lower.len() + 1;
    let entry = |i: usize, c: usize| -> Result<MixedMonomial> {
        if c == 0 {
            return Ok(MixedMonomial::new(Monomial::var(n, i), vec![0; m]));
        }
        let f = lower[c - 1].mul(&Monomial::var(n, i))?;
        let k = phi.index_of(&f).expect("degree-d monomial");
        Ok(phi.t_var(k))
    };
    let mut out = BTreeSet::new();
    for i in 0..n {
        for i2 in i + 1..n {
            for c in 0..cols {
                for c2 in c + 1..cols {
                    let u = entry(i, c)?.mul(&entry(i2, c2)?)?;
                    let v = entry(i, c2)?.mul(&entry(i2, c)?)?;
                    out.extend(Binomial::new(u, v));
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}
