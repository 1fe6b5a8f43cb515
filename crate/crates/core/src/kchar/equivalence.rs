//! Deciding whether two groups share their k-character data.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use super::table::{for_each_multiset, multiset_index, KCharTable};
use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::group::ElementId;
use crate::num::Cyclotomic;

/// A bijection of elements (fixing the identity) and of characters that
/// transports every requested k-character value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceWitness {
    pub element_map: Vec<ElementId>,
    pub character_map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceVerdict {
    pub equivalent: bool,
    pub levels: Vec<usize>,
    pub witness: Option<EquivalenceWitness>,
    /// Element assignments tried by the backtracking search.
    pub nodes: u64,
    /// Why the verdict is negative, when it is.
    pub reason: Option<String>,
}

impl EquivalenceVerdict {
    fn negative(levels: &[usize], nodes: u64, reason: impl Into<String>) -> Self {
        EquivalenceVerdict { equivalent: false, levels: levels.to_vec(), witness: None, nodes, reason: Some(reason.into()) }
    }
}

/// Parses `"1,2,3"` into a sorted set of levels in `1..=3`.
pub fn parse_levels(s: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let k: usize = part.parse().map_err(|_| Error::InvalidParameter(format!("bad level {part:?}")))?;
        if !(1..=3).contains(&k) {
            return Err(Error::InvalidParameter(format!("levels must lie in 1..=3, got {k}")));
        }
        out.push(k);
    }
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        return Err(Error::InvalidParameter("no levels given".into()));
    }
    Ok(out)
}

struct Key(Cyclotomic);

impl PartialEq for Key {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Key {}
impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.canonical_cmp(&other.0)
    }
}

struct Interner<K: Ord> {
    ids: BTreeMap<K, u32>,
}

impl<K: Ord> Default for Interner<K> {
    fn default() -> Self {
        Interner { ids: BTreeMap::new() }
    }
}

impl<K: Ord> Interner<K> {
    fn id(&mut self, k: K) -> u32 {
        let next = self.ids.len() as u32;
        *self.ids.entry(k).or_insert(next)
    }
}

/// Interned k-character values of one group: `vals[k-1][j][multiset]`.
struct Side {
    n: usize,
    r: usize,
    degrees: Vec<u32>,
    vals: [Vec<Vec<u32>>; 3],
}

impl Side {
    fn build(t: &CharacterTable, levels: &[usize], conductor: u32, interner: &mut Interner<Key>) -> Result<Side> {
        let mut vals: [Vec<Vec<u32>>; 3] = Default::default();
        for &k in levels {
            for j in 0..t.len() {
                let table = KCharTable::build(t, j, k)?;
                let ids = table
                    .entries()
                    .into_iter()
                    .map(|(_, v)| Ok(interner.id(Key(v.lift(conductor)?))))
                    .collect::<Result<Vec<u32>>>()?;
                vals[k - 1].push(ids);
            }
        }
        Ok(Side { n: t.group().order(), r: t.len(), degrees: t.degrees().to_vec(), vals })
    }

    #[inline]
    fn v(&self, k: usize, j: usize, sorted: &[usize]) -> u32 {
        self.vals[k - 1][j][multiset_index(sorted)]
    }

    /// Per-character data attached to one element.
    fn local(&self, levels: &[usize], j: usize, g: usize) -> Vec<u32> {
        levels.iter().map(|&k| self.v(k, j, &vec![g; k])).collect()
    }

    /// π-invariant key of an ordered pair: the multiset over characters of
    /// everything each character says about `g` and `h` jointly.
    fn pair_key(&self, levels: &[usize], g: usize, h: usize) -> Vec<Vec<u32>> {
        let mut per_char: Vec<Vec<u32>> = (0..self.r)
            .map(|j| {
                let mut f = self.local(levels, j, g);
                f.extend(self.local(levels, j, h));
                for &k in levels {
                    match k {
                        2 => f.push(self.v(2, j, &sorted(&[g, h]))),
                        3 => {
                            f.push(self.v(3, j, &sorted(&[g, g, h])));
                            f.push(self.v(3, j, &sorted(&[g, h, h])));
                        }
                        _ => {}
                    }
                }
                f
            })
            .collect();
        per_char.sort_unstable();
        per_char
    }
}

fn sorted(t: &[usize]) -> Vec<usize> {
    let mut v = t.to_vec();
    v.sort_unstable();
    v
}

/// Decides whether `(β, π)` exist with `χ_{π(j)}⁽ᵏ⁾(βg₁,…,βgₖ) = χ_j⁽ᵏ⁾(g₁,…,gₖ)`
/// for every tuple, every character and every level in `levels` at once.
///
/// Elements are first coloured by iterated refinement of π-invariant
/// signatures; the backtracking search then only pairs elements of equal
/// colour, keeps the set of still-compatible character pairs, and prunes
/// as soon as that relation has no perfect matching. The search is
/// exhaustive, so a negative verdict is definitive.
pub fn equivalence_search(a: &CharacterTable, b: &CharacterTable, levels: &[usize]) -> Result<EquivalenceVerdict> {
    let mut levels = levels.to_vec();
    levels.sort_unstable();
    levels.dedup();
    if levels.is_empty() || levels.iter().any(|k| !(1..=3).contains(k)) {
        return Err(Error::InvalidParameter(format!("levels must be a non-empty subset of 1..=3, got {levels:?}")));
    }
    if a.group().order() != b.group().order() {
        return Ok(EquivalenceVerdict::negative(&levels, 0, "group orders differ"));
    }
    let mut da = a.degrees().to_vec();
    let mut db = b.degrees().to_vec();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(EquivalenceVerdict::negative(&levels, 0, "degree multisets differ"));
    }

    let conductor = num_integer::lcm(a.conductor(), b.conductor());
    let mut values = Interner::default();
    let ga = Side::build(a, &levels, conductor, &mut values)?;
    let gb = Side::build(b, &levels, conductor, &mut values)?;

    if !same_character_signatures(&ga, &gb) {
        return Ok(EquivalenceVerdict::negative(&levels, 0, "character value multisets differ"));
    }

    let n = ga.n;
    let mut pair_ids = Interner::default();
    let pa: Vec<Vec<u32>> = (0..n).map(|g| (0..n).map(|h| pair_ids.id(ga.pair_key(&levels, g, h))).collect()).collect();
    let pb: Vec<Vec<u32>> = (0..n).map(|g| (0..n).map(|h| pair_ids.id(gb.pair_key(&levels, g, h))).collect()).collect();
    let (ca, cb) = refine_colours(&pa, &pb);
    let mut ha = ca.clone();
    let mut hb = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb || ca[0] != cb[0] {
        return Ok(EquivalenceVerdict::negative(&levels, 0, "element signatures differ"));
    }

    let mut search = Search::new(&ga, &gb, &levels, &pa, &pb, &ca, &cb);
    let found = search.run();
    let nodes = search.nodes;
    match found {
        Some((beta, pi)) => {
            let witness = EquivalenceWitness {
                element_map: beta.iter().map(|&x| ElementId::from(x)).collect(),
                character_map: pi,
            };
            if !transports(&ga, &gb, &levels, &witness) {
                return Err(Error::Internal("equivalence witness fails verification".into()));
            }
            Ok(EquivalenceVerdict { equivalent: true, levels, witness: Some(witness), nodes, reason: None })
        }
        None => Ok(EquivalenceVerdict::negative(&levels, nodes, "exhaustive search found no bijection")),
    }
}

/// For each character, the multiset of its values at every level, per
/// degree; must agree between the two sides up to reordering characters.
fn same_character_signatures(a: &Side, b: &Side) -> bool {
    let sig = |s: &Side| {
        let mut out: Vec<(u32, Vec<Vec<u32>>)> = (0..s.r)
            .map(|j| {
                let per_level = s
                    .vals
                    .iter()
                    .filter(|v| !v.is_empty())
                    .map(|v| {
                        let mut x = v[j].clone();
                        x.sort_unstable();
                        x
                    })
                    .collect();
                (s.degrees[j], per_level)
            })
            .collect();
        out.sort_unstable();
        out
    };
    sig(a) == sig(b)
}

/// Joint colour refinement of both groups' elements, until the number of
/// colours stops growing.
fn refine_colours(pa: &[Vec<u32>], pb: &[Vec<u32>]) -> (Vec<u32>, Vec<u32>) {
    let n = pa.len();
    let mut ca: Vec<u32> = (0..n).map(|g| pa[g][g]).collect();
    let mut cb: Vec<u32> = (0..n).map(|g| pb[g][g]).collect();
    let mut count = distinct(&ca, &cb);
    loop {
        let mut ids = Interner::default();
        let sig = |c: &[u32], p: &[Vec<u32>], g: usize| {
            let mut nb: Vec<(u32, u32)> = (0..n).map(|h| (c[h], p[g][h])).collect();
            nb.sort_unstable();
            (c[g], nb)
        };
        let na: Vec<u32> = (0..n).map(|g| ids.id(sig(&ca, pa, g))).collect();
        let nbv: Vec<u32> = (0..n).map(|g| ids.id(sig(&cb, pb, g))).collect();
        let next = distinct(&na, &nbv);
        ca = na;
        cb = nbv;
        if next == count {
            return (ca, cb);
        }
        count = next;
    }
}

fn distinct(a: &[u32], b: &[u32]) -> usize {
    let mut all: Vec<u32> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

struct Search<'a> {
    a: &'a Side,
    b: &'a Side,
    levels: &'a [usize],
    pa: &'a [Vec<u32>],
    pb: &'a [Vec<u32>],
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    /// Previous element with an identical level-1 column, when level 1 is
    /// the only level; twins may be mapped in increasing order only.
    twin_prev: Vec<Option<usize>>,
    beta: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(
        a: &'a Side,
        b: &'a Side,
        levels: &'a [usize],
        pa: &'a [Vec<u32>],
        pb: &'a [Vec<u32>],
        ca: &[u32],
        cb: &[u32],
    ) -> Self {
        let n = a.n;
        let class_size = |c: u32| ca.iter().filter(|&&x| x == c).count();
        let mut order: Vec<usize> = (1..n).collect();
        order.sort_by_key(|&g| (class_size(ca[g]), ca[g], g));
        order.insert(0, 0);
        let candidates = (0..n).map(|g| if g == 0 { vec![0] } else { (1..n).filter(|&h| cb[h] == ca[g]).collect() }).collect();
        let mut twin_prev = vec![None; n];
        if levels == [1] {
            let column = |g: usize| (0..a.r).map(|j| a.v(1, j, &[g])).collect::<Vec<u32>>();
            for (pos, &g) in order.iter().enumerate() {
                twin_prev[g] = order[..pos].iter().rev().copied().find(|&x| column(x) == column(g));
            }
        }
        Search { a, b, levels, pa, pb, order, candidates, twin_prev, beta: vec![usize::MAX; n], used: vec![false; n], nodes: 0 }
    }

    fn run(&mut self) -> Option<(Vec<usize>, Vec<usize>)> {
        let r = self.a.r;
        let compat: Vec<bool> =
            (0..r * r).map(|x| self.a.degrees[x / r] == self.b.degrees[x % r]).collect();
        self.dfs(0, compat)
    }

    fn dfs(&mut self, pos: usize, compat: Vec<bool>) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.a.n;
        if pos == n {
            let pi = perfect_matching(&compat, self.a.r)?;
            return Some((self.beta.clone(), pi));
        }
        let g = self.order[pos];
        let floor = self.twin_prev[g].map_or(0, |t| self.beta[t] + 1);
        for ci in 0..self.candidates[g].len() {
            let h = self.candidates[g][ci];
            if self.used[h] || h < floor {
                continue;
            }
            self.nodes += 1;
            let consistent = self.order[..pos].iter().all(|&x| self.pa[g][x] == self.pb[h][self.beta[x]]);
            if !consistent {
                continue;
            }
            self.beta[g] = h;
            self.used[h] = true;
            let mut next = compat.clone();
            self.restrict(&mut next, pos);
            if perfect_matching(&next, self.a.r).is_some() {
                if let Some(found) = self.dfs(pos + 1, next) {
                    return Some(found);
                }
            }
            self.beta[g] = usize::MAX;
            self.used[h] = false;
        }
        None
    }

    /// Drops character pairs contradicted by tuples completed by the
    /// element at `pos`.
    fn restrict(&self, compat: &mut [bool], pos: usize) {
        let g = self.order[pos];
        let done = &self.order[..=pos];
        let mut check = |tuple: &[usize]| {
            let s = sorted(tuple);
            let img = sorted(&tuple.iter().map(|&x| self.beta[x]).collect::<Vec<_>>());
            let k = tuple.len();
            let r = self.a.r;
            for j in 0..r {
                let va = self.a.v(k, j, &s);
                for jj in 0..r {
                    let c = &mut compat[j * r + jj];
                    if *c && va != self.b.v(k, jj, &img) {
                        *c = false;
                    }
                }
            }
        };
        for &k in self.levels {
            match k {
                1 => check(&[g]),
                2 => done.iter().for_each(|&x| check(&[g, x])),
                3 => {
                    for (i, &x) in done.iter().enumerate() {
                        for &y in &done[i..] {
                            check(&[g, x, y]);
                        }
                    }
                }
                _ => unreachable!(),
            }
        }
    }
}

/// Kuhn's augmenting paths on the `r × r` relation; returns `π` with
/// `compat[j][π(j)]` for all `j`, or `None`.
fn perfect_matching(compat: &[bool], r: usize) -> Option<Vec<usize>> {
    fn augment(j: usize, compat: &[bool], r: usize, seen: &mut [bool], owner: &mut [usize]) -> bool {
        for jj in 0..r {
            if compat[j * r + jj] && !seen[jj] {
                seen[jj] = true;
                if owner[jj] == usize::MAX || augment(owner[jj], compat, r, seen, owner) {
                    owner[jj] = j;
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![usize::MAX; r];
    for j in 0..r {
        let mut seen = vec![false; r];
        if !augment(j, compat, r, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut pi = vec![0; r];
    for (jj, &j) in owner.iter().enumerate() {
        pi[j] = jj;
    }
    Some(pi)
}

fn transports(a: &Side, b: &Side, levels: &[usize], w: &EquivalenceWitness) -> bool {
    let n = a.n;
    let beta: Vec<usize> = w.element_map.iter().map(|x| x.index()).collect();
    let mut seen = vec![false; n];
    if beta[0] != 0 || beta.iter().any(|&x| x >= n || std::mem::replace(&mut seen[x], true)) {
        return false;
    }
    let mut ok = true;
    for &k in levels {
        for_each_multiset(n, k, |t| {
            let img = sorted(&t.iter().map(|&x| beta[x]).collect::<Vec<_>>());
            for j in 0..a.r {
                ok &= a.v(k, j, t) == b.v(k, w.character_map[j], &img);
            }
        });
    }
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::group::{build_group, groups_of_order, FiniteGroup, GroupFamilySpec};

    fn table(s: &str) -> CharacterTable {
        let g: FiniteGroup = build_group(&s.parse::<GroupFamilySpec>().unwrap()).unwrap();
        character_table(&g, 0).unwrap()
    }

    #[test]
    fn levels_parse() {
        assert_eq!(parse_levels("3,1, 2,1").unwrap(), vec![1, 2, 3]);
        assert!(parse_levels("4").is_err());
        assert!(parse_levels("").is_err());
        assert!(parse_levels("x").is_err());
    }

    #[test]
    fn self_equivalence_at_every_level() {
        let t = table("symmetric(3)");
        for levels in [vec![1], vec![2], vec![3], vec![1, 2], vec![1, 2, 3]] {
            let v = equivalence_search(&t, &t, &levels).unwrap();
            assert!(v.equivalent, "{levels:?}");
        }
    }

    #[test]
    fn d4_q8() {
        let d4 = table("dihedral(8)");
        let q8 = table("quaternion(8)");
        let v1 = equivalence_search(&d4, &q8, &[1]).unwrap();
        assert!(v1.equivalent);
        let v123 = equivalence_search(&d4, &q8, &[1, 2, 3]).unwrap();
        assert!(!v123.equivalent);
    }

    #[test]
    fn order_twelve_pairs_are_separated() {
        let tables: Vec<CharacterTable> =
            groups_of_order(12).iter().map(|g| character_table(&g.build(), 0).unwrap()).collect();
        for i in 0..tables.len() {
            for j in i + 1..tables.len() {
                assert!(!equivalence_search(&tables[i], &tables[j], &[1, 2, 3]).unwrap().equivalent);
            }
        }
    }

    #[test]
    fn matching() {
        let compat = [true, true, false, true];
        assert_eq!(perfect_matching(&compat, 2), Some(vec![0, 1]));
        assert_eq!(perfect_matching(&[true, true, false, false], 2), None);
    }
}
