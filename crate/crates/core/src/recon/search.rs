//! Orientation search: each non-commuting pair `{g, h}` with products
//! `{p, q}` is either `gh = p, hg = q` or the reverse. Latin-square and
//! associativity constraints are propagated to a fixpoint after every
//! choice.

use std::collections::VecDeque;

use serde::Serialize;

use super::SymmetrizedProducts;
use crate::error::Result;
use crate::group::{ElementId, FiniteGroup, IsoWitness};

const UNSET: u32 = u32::MAX;

#[derive(Clone, Debug, Serialize)]
pub struct ReconstructionResult {
    /// Relabelled so that the identity found in the products is element 0.
    #[serde(serialize_with = "serialize_table")]
    pub table: FiniteGroup,
    pub witness: Option<IsoWitness>,
    pub search_nodes: u64,
}

fn serialize_table<S: serde::Serializer>(g: &FiniteGroup, s: S) -> std::result::Result<S::Ok, S::Error> {
    g.rows().serialize(s)
}

#[derive(Clone, Debug)]
pub enum Reconstruction {
    Found(ReconstructionResult),
    /// No group table is compatible with the products.
    Infeasible { search_nodes: u64 },
}

#[derive(Clone)]
struct State {
    t: Vec<u32>,
    row_pos: Vec<u32>,
    col_pos: Vec<u32>,
    row_count: Vec<u32>,
    col_count: Vec<u32>,
    filled: usize,
}

struct Solver<'a> {
    n: usize,
    p: &'a SymmetrizedProducts,
    nodes: u64,
}

impl Solver<'_> {
    fn pair(&self, a: usize, b: usize) -> (u32, u32) {
        let (x, y) = self.p.get(ElementId::from(a), ElementId::from(b));
        (x.0, y.0)
    }

    fn write(&self, st: &mut State, a: usize, b: usize, v: u32, queue: &mut VecDeque<(usize, usize)>) -> bool {
        let n = self.n;
        let cell = st.t[a * n + b];
        if cell != UNSET {
            return cell == v;
        }
        let vi = v as usize;
        if st.row_pos[a * n + vi] != UNSET || st.col_pos[b * n + vi] != UNSET {
            return false;
        }
        st.t[a * n + b] = v;
        st.row_pos[a * n + vi] = b as u32;
        st.col_pos[b * n + vi] = a as u32;
        st.row_count[a] += 1;
        st.col_count[b] += 1;
        st.filled += 1;
        queue.push_back((a, b));
        true
    }

    /// Sets `ab = v`, which fixes the orientation of `{a, b}`.
    fn force(&self, st: &mut State, a: usize, b: usize, v: u32, queue: &mut VecDeque<(usize, usize)>) -> bool {
        let cell = st.t[a * self.n + b];
        if cell != UNSET {
            return cell == v;
        }
        let (p, q) = self.pair(a, b);
        let other = if v == p {
            q
        } else if v == q {
            p
        } else {
            return false;
        };
        self.write(st, a, b, v, queue) && self.write(st, b, a, other, queue)
    }

    /// `t[a1][b1] = t[a2][b2]`, forcing whichever side is missing.
    fn equate(&self, st: &mut State, c1: (usize, usize), c2: (usize, usize), queue: &mut VecDeque<(usize, usize)>) -> bool {
        let n = self.n;
        let l = st.t[c1.0 * n + c1.1];
        let r = st.t[c2.0 * n + c2.1];
        match (l == UNSET, r == UNSET) {
            (false, false) => l == r,
            (false, true) => self.force(st, c2.0, c2.1, l, queue),
            (true, false) => self.force(st, c1.0, c1.1, r, queue),
            (true, true) => true,
        }
    }

    fn propagate(&self, st: &mut State, queue: &mut VecDeque<(usize, usize)>) -> bool {
        let n = self.n;
        while let Some((a, b)) = queue.pop_front() {
            let v = st.t[a * n + b];
            let vi = v as usize;
            // Latin: v cannot appear again in row a or column b.
            for c in 0..n {
                if c != b && st.t[a * n + c] == UNSET {
                    let (p, q) = self.pair(a, c);
                    if (p == v || q == v) && !self.force(st, a, c, if p == v { q } else { p }, queue) {
                        return false;
                    }
                }
                if c != a && st.t[c * n + b] == UNSET {
                    let (p, q) = self.pair(c, b);
                    if (p == v || q == v) && !self.force(st, c, b, if p == v { q } else { p }, queue) {
                        return false;
                    }
                }
            }
            for c in 0..n {
                // (ab)c = a(bc)
                let w = st.t[b * n + c];
                if w != UNSET && !self.equate(st, (vi, c), (a, w as usize), queue) {
                    return false;
                }
                // (ca)b = c(ab)
                let u = st.t[c * n + a];
                if u != UNSET && !self.equate(st, (u as usize, b), (c, vi), queue) {
                    return false;
                }
                // a = cy: (cy)b = c(yb)
                let y = st.row_pos[c * n + a];
                if y != UNSET {
                    let w = st.t[y as usize * n + b];
                    if w != UNSET && !self.force(st, c, w as usize, v, queue) {
                        return false;
                    }
                }
                // b = cz: a(cz) = (ac)z
                let z = st.row_pos[c * n + b];
                if z != UNSET {
                    let u = st.t[a * n + c];
                    if u != UNSET && !self.force(st, u as usize, z as usize, v, queue) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The open pair with the most filled cells in its rows and columns,
    /// first in lexicographic order on ties.
    fn choose(&self, st: &State) -> Option<(usize, usize)> {
        let n = self.n;
        let mut best: Option<((usize, usize), u32)> = None;
        for g in 0..n {
            for h in g + 1..n {
                if st.t[g * n + h] != UNSET {
                    continue;
                }
                let score = st.row_count[g] + st.row_count[h] + st.col_count[g] + st.col_count[h];
                if best.is_none_or(|(_, s)| score > s) {
                    best = Some(((g, h), score));
                }
            }
        }
        best.map(|(cell, _)| cell)
    }

    fn dfs(&mut self, st: State, identity: usize) -> Option<FiniteGroup> {
        let n = self.n;
        if st.filled == n * n {
            return finish(n, &st.t, identity);
        }
        let (g, h) = self.choose(&st)?;
        let (p, q) = self.pair(g, h);
        for v in [p, q] {
            self.nodes += 1;
            let mut next = st.clone();
            let mut queue = VecDeque::new();
            if self.force(&mut next, g, h, v, &mut queue) && self.propagate(&mut next, &mut queue) {
                if let Some(found) = self.dfs(next, identity) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// Swaps labels so the identity is 0, then validates.
fn finish(n: usize, t: &[u32], identity: usize) -> Option<FiniteGroup> {
    let relabel = |x: usize| {
        if x == identity {
            0
        } else if x == 0 {
            identity
        } else {
            x
        }
    };
    let mut out = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            out[relabel(a) * n + relabel(b)] = relabel(t[a * n + b] as usize) as u32;
        }
    }
    FiniteGroup::from_flat("reconstructed".into(), n, out).ok()
}

/// Searches for a group table `T` with `{T(g,h), T(h,g)} = {gh, hg}` for all
/// `g, h`. A missing identity or an exhausted search is reported as
/// [`Reconstruction::Infeasible`].
pub fn reconstruct_group(p: &SymmetrizedProducts) -> Result<Reconstruction> {
    let n = p.order();
    let mut solver = Solver { n, p, nodes: 0 };
    let identity = (0..n).find(|&e| (0..n).all(|g| solver.pair(e, g) == (g as u32, g as u32)));
    let Some(identity) = identity else {
        return Ok(Reconstruction::Infeasible { search_nodes: 0 });
    };
    let mut st = State {
        t: vec![UNSET; n * n],
        row_pos: vec![UNSET; n * n],
        col_pos: vec![UNSET; n * n],
        row_count: vec![0; n],
        col_count: vec![0; n],
        filled: 0,
    };
    let mut queue = VecDeque::new();
    let mut ok = true;
    for g in 0..n {
        for h in g..n {
            let (a, b) = solver.pair(g, h);
            if a == b {
                ok &= solver.force(&mut st, g, h, a, &mut queue);
            } else if g == h {
                ok = false;
            }
        }
    }
    ok = ok && solver.propagate(&mut st, &mut queue);
    let found = if ok { solver.dfs(st, identity) } else { None };
    Ok(match found {
        Some(table) => Reconstruction::Found(ReconstructionResult { table, witness: None, search_nodes: solver.nodes }),
        None => Reconstruction::Infeasible { search_nodes: solver.nodes },
    })
}
