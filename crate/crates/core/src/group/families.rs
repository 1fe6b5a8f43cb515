use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::{FiniteGroup, DEFAULT_MAX_ORDER};
use crate::error::{Error, Result};

/// A permutation of `0..m` stored as its image list.
///
/// Composition follows `(σ·τ)(x) = σ(τ(x))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation((0..m as u32).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &i in &images {
            if i >= m || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidParameter(format!("not a bijection on {m} points: {images:?}")));
            }
        }
        Ok(Permutation(images.into_iter().map(|i| i as u32).collect()))
    }

    /// Builds a permutation on `m` points from disjoint or overlapping
    /// cycles, multiplied left to right as written.
    pub fn from_cycles(m: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Permutation::identity(m);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..m).collect();
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                if p >= m || q >= m {
                    return Err(Error::InvalidParameter(format!("cycle {cycle:?} leaves 0..{m}")));
                }
                images[p] = q;
            }
            let c = Permutation::from_images(images)?;
            acc = acc.compose(&c);
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }
}

/// A recipe for one of the supported group families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupFamilySpec {
    /// `cyclic(n)`: element `i` is `gⁱ`.
    Cyclic(usize),
    /// `dihedral(2m)`: `rⁱ` is element `i`, `s·rⁱ` is element `m + i`.
    Dihedral(usize),
    /// `quaternion(8·2ᵏ)`: generalized quaternion group of the given order.
    /// `aⁱ` is element `i`, `x·aⁱ` is element `order/2 + i`.
    Quaternion(usize),
    /// `symmetric(m)`, `m ≤ 4`: permutations of `0..m` in lexicographic
    /// order of their image lists.
    Symmetric(usize),
    /// `heisenberg(p)`, odd prime `p`: the matrix with entries
    /// `(a, b, c)` above the diagonal is element `a + p·b + p²·c`.
    Heisenberg(usize),
    /// `product(A, B)`: pair `(i, j)` is element `i·|B| + j`.
    DirectProduct(Box<GroupFamilySpec>, Box<GroupFamilySpec>),
    /// `perms(m: (0 1), (0 1 2))`: closure in breadth-first discovery order.
    FromPermutations { degree: usize, generators: Vec<Permutation> },
    /// `file(path)`: a group JSON file.
    FromTable(String),
}

pub fn build_group(spec: &GroupFamilySpec) -> Result<FiniteGroup> {
    build_group_capped(spec, DEFAULT_MAX_ORDER)
}

pub fn build_group_capped(spec: &GroupFamilySpec, max_order: usize) -> Result<FiniteGroup> {
    let check = |n: usize| {
        if n > max_order {
            Err(Error::OrderTooLarge { order: n, cap: max_order })
        } else {
            Ok(())
        }
    };
    let name = spec.to_string();
    match spec {
        GroupFamilySpec::Cyclic(n) => {
            let n = *n;
            if n == 0 {
                return Err(Error::InvalidParameter("cyclic order must be positive".into()));
            }
            check(n)?;
            table_from_fn(name, n, |a, b| (a + b) % n)
        }
        GroupFamilySpec::Dihedral(order) => {
            let order = *order;
            if order < 2 || order % 2 != 0 {
                return Err(Error::InvalidParameter(format!("dihedral order must be even and ≥ 2, got {order}")));
            }
            check(order)?;
            let m = order / 2;
            table_from_fn(name, order, |a, b| {
                let (sa, ia) = (a >= m, a % m);
                let (sb, ib) = (b >= m, b % m);
                match (sa, sb) {
                    (false, false) => (ia + ib) % m,
                    (false, true) => m + (ib + m - ia) % m,
                    (true, false) => m + (ia + ib) % m,
                    (true, true) => (ib + m - ia) % m,
                }
            })
        }
        GroupFamilySpec::Quaternion(order) => {
            let order = *order;
            if order < 8 || !order.is_power_of_two() {
                return Err(Error::InvalidParameter(format!("quaternion order must be 8·2^k, got {order}")));
            }
            check(order)?;
            let half = order / 2;
            let m = half / 2;
            table_from_fn(name, order, |a, b| {
                let (xa, ia) = (a >= half, a % half);
                let (xb, ib) = (b >= half, b % half);
                match (xa, xb) {
                    (false, false) => (ia + ib) % half,
                    (false, true) => half + (ib + half - ia) % half,
                    (true, false) => half + (ia + ib) % half,
                    (true, true) => (m + ib + half - ia) % half,
                }
            })
        }
        GroupFamilySpec::Symmetric(m) => {
            let m = *m;
            if m == 0 || m > 4 {
                return Err(Error::InvalidParameter(format!("symmetric(m) supports 1 ≤ m ≤ 4, got {m}")));
            }
            let perms = lexicographic_permutations(m);
            let index: HashMap<Vec<u32>, usize> =
                perms.iter().enumerate().map(|(i, p)| (p.0.clone(), i)).collect();
            let n = perms.len();
            check(n)?;
            table_from_fn(name, n, |a, b| index[&perms[a].compose(&perms[b]).0])
        }
        GroupFamilySpec::Heisenberg(p) => {
            let p = *p;
            if p < 3 || !is_prime(p) {
                return Err(Error::InvalidParameter(format!("heisenberg(p) needs an odd prime, got {p}")));
            }
            let n = p * p * p;
            check(n)?;
            let split = |x: usize| (x % p, (x / p) % p, x / (p * p));
            table_from_fn(name, n, |x, y| {
                let (a, b, c) = split(x);
                let (a2, b2, c2) = split(y);
                let (ra, rb, rc) = ((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
                ra + p * rb + p * p * rc
            })
        }
        GroupFamilySpec::DirectProduct(left, right) => {
            let g = build_group_capped(left, max_order)?;
            let h = build_group_capped(right, max_order)?;
            let (ng, nh) = (g.order(), h.order());
            check(ng * nh)?;
            table_from_fn(name, ng * nh, |x, y| {
                g.mul_idx(x / nh, y / nh) * nh + h.mul_idx(x % nh, y % nh)
            })
        }
        GroupFamilySpec::FromPermutations { degree, generators } => {
            Ok(from_generators_capped(*degree, generators, max_order)?.with_name(name))
        }
        GroupFamilySpec::FromTable(path) => {
            let text = std::fs::read_to_string(path)?;
            crate::io::group_from_json_capped(&text, max_order)
        }
    }
}

fn table_from_fn(name: String, n: usize, f: impl Fn(usize, usize) -> usize) -> Result<FiniteGroup> {
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(f(a, b) as u32);
        }
    }
    FiniteGroup::from_flat(name, n, table)
}

fn lexicographic_permutations(m: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation(prefix.clone()));
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u32);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Enumerates the group generated by `perms` on `degree` points.
pub fn from_generators(degree: usize, perms: &[Permutation]) -> Result<FiniteGroup> {
    from_generators_capped(degree, perms, DEFAULT_MAX_ORDER)
}

pub fn from_generators_capped(degree: usize, perms: &[Permutation], max_order: usize) -> Result<FiniteGroup> {
    for p in perms {
        if p.degree() != degree {
            return Err(Error::InvalidParameter(format!(
                "generator acts on {} points, expected {degree}",
                p.degree()
            )));
        }
    }
    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for s in perms {
            let y = x.compose(s);
            if !index.contains_key(&y) {
                if elements.len() == max_order {
                    return Err(Error::OrderTooLarge { order: elements.len() + 1, cap: max_order });
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
    }
    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            table.push(index[&a.compose(b)] as u32);
        }
    }
    FiniteGroup::from_flat(format!("perms({degree})"), n, table)
}

impl fmt::Display for GroupFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFamilySpec::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupFamilySpec::Dihedral(n) => write!(f, "dihedral({n})"),
            GroupFamilySpec::Quaternion(n) => write!(f, "quaternion({n})"),
            GroupFamilySpec::Symmetric(m) => write!(f, "symmetric({m})"),
            GroupFamilySpec::Heisenberg(p) => write!(f, "heisenberg({p})"),
            GroupFamilySpec::DirectProduct(a, b) => write!(f, "product({a},{b})"),
            GroupFamilySpec::FromPermutations { degree, generators } => {
                write!(f, "perms({degree}:")?;
                for (k, g) in generators.iter().enumerate() {
                    write!(f, "{}{}", if k == 0 { " " } else { ", " }, cycle_notation(g))?;
                }
                write!(f, ")")
            }
            GroupFamilySpec::FromTable(path) => write!(f, "file({path})"),
        }
    }
}

fn cycle_notation(p: &Permutation) -> String {
    let m = p.degree();
    let mut seen = vec![false; m];
    let mut out = String::new();
    for start in 0..m {
        if seen[start] || p.apply(start) == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p.apply(start);
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p.apply(x);
        }
        let body: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

impl FromStr for GroupFamilySpec {
    type Err = Error;

    /// Parses `cyclic(4)`, `product(cyclic(2),dihedral(6))`,
    /// `perms(4: (0 1 2), (0 1)(2 3))`, `file(g.json)` and friends.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidParameter(format!("cannot parse group spec `{s}`"));
        let open = s.find('(').ok_or_else(bad)?;
        if !s.ends_with(')') {
            return Err(bad());
        }
        let head = s[..open].trim();
        let body = &s[open + 1..s.len() - 1];
        let int = || body.trim().parse::<usize>().map_err(|_| bad());
        Ok(match head {
            "cyclic" | "C" => GroupFamilySpec::Cyclic(int()?),
            "dihedral" | "D" => GroupFamilySpec::Dihedral(int()?),
            "quaternion" | "Q" => GroupFamilySpec::Quaternion(int()?),
            "symmetric" | "S" => GroupFamilySpec::Symmetric(int()?),
            "heisenberg" => GroupFamilySpec::Heisenberg(int()?),
            "product" | "direct_product" => {
                let split = top_level_comma(body).ok_or_else(bad)?;
                GroupFamilySpec::DirectProduct(
                    Box::new(body[..split].parse()?),
                    Box::new(body[split + 1..].parse()?),
                )
            }
            "perms" | "from_permutations" => {
                let (deg, rest) = body.split_once(':').ok_or_else(bad)?;
                let degree = deg.trim().parse::<usize>().map_err(|_| bad())?;
                let mut generators = Vec::new();
                for gen in rest.split(',') {
                    let gen = gen.trim();
                    if gen.is_empty() {
                        continue;
                    }
                    generators.push(Permutation::from_cycles(degree, &parse_cycles(gen).ok_or_else(bad)?)?);
                }
                GroupFamilySpec::FromPermutations { degree, generators }
            }
            "file" | "from_table" => GroupFamilySpec::FromTable(body.trim().to_string()),
            _ => return Err(bad()),
        })
    }
}

fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

fn parse_cycles(s: &str) -> Option<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let rest_open = rest.strip_prefix('(')?;
        let close = rest_open.find(')')?;
        let cycle: Option<Vec<usize>> =
            rest_open[..close].split_whitespace().map(|t| t.parse().ok()).collect();
        let cycle = cycle?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = rest_open[close + 1..].trim_start();
    }
    Some(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{conjugacy_classes, is_associative_exhaustive};

    #[test]
    fn cyclic_two() {
        let g = build_group(&GroupFamilySpec::Cyclic(2)).unwrap();
        assert_eq!(g.rows(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn dihedral_six_is_non_abelian() {
        let d3 = build_group(&GroupFamilySpec::Dihedral(6)).unwrap();
        let c6 = build_group(&GroupFamilySpec::Cyclic(6)).unwrap();
        assert_eq!(d3.order(), 6);
        assert!(!d3.is_abelian());
        assert!(c6.is_abelian());
    }

    #[test]
    fn heisenberg_three_matches_matrix_model() {
        let g = build_group(&GroupFamilySpec::Heisenberg(3)).unwrap();
        assert_eq!(g.order(), 27);
        assert_eq!(g.exponent(), 3);
        assert!(!g.is_abelian());
        // Brute force over explicit 3×3 unitriangular matrices mod 3.
        let mat = |x: usize| {
            let (a, b, c) = (x % 3, (x / 3) % 3, x / 9);
            [[1, a, c], [0, 1, b], [0, 0, 1]]
        };
        for x in 0..27 {
            for y in 0..27 {
                let (m1, m2) = (mat(x), mat(y));
                let mut prod = [[0usize; 3]; 3];
                for i in 0..3 {
                    for j in 0..3 {
                        prod[i][j] = (0..3).map(|k| m1[i][k] * m2[k][j]).sum::<usize>() % 3;
                    }
                }
                assert_eq!(mat(g.mul_idx(x, y)), prod);
            }
        }
    }

    #[test]
    fn heisenberg_class_counts() {
        for p in [3usize, 5] {
            let g = build_group(&GroupFamilySpec::Heisenberg(p)).unwrap();
            assert_eq!(conjugacy_classes(&g).len(), p * p + p - 1);
        }
    }

    #[test]
    fn rejects_out_of_range_parameters() {
        assert!(build_group(&GroupFamilySpec::Symmetric(5)).is_err());
        assert!(build_group(&GroupFamilySpec::Heisenberg(4)).is_err());
        assert!(build_group(&GroupFamilySpec::Quaternion(12)).is_err());
        assert!(build_group(&GroupFamilySpec::Dihedral(7)).is_err());
        assert!(build_group(&GroupFamilySpec::Cyclic(0)).is_err());
        assert!(matches!(
            build_group_capped(&GroupFamilySpec::Cyclic(100), 50),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn generators_examples() {
        let t = Permutation::from_cycles(2, &[vec![0, 1]]).unwrap();
        assert_eq!(from_generators(2, &[t]).unwrap().order(), 2);
        let s3 = from_generators(
            3,
            &[
                Permutation::from_cycles(3, &[vec![0, 1]]).unwrap(),
                Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(conjugacy_classes(&s3).len(), 3);
        assert_eq!(from_generators(3, &[]).unwrap().order(), 1);
    }

    #[test]
    fn full_transpositions_give_factorial_order() {
        for m in 1..=4usize {
            let mut gens = Vec::new();
            for i in 0..m {
                for j in i + 1..m {
                    gens.push(Permutation::from_cycles(m, &[vec![i, j]]).unwrap());
                }
            }
            let g = from_generators(m, &gens).unwrap();
            assert_eq!(g.order(), (1..=m).product::<usize>());
        }
    }

    #[test]
    fn generator_closure_respects_cap() {
        let gens = vec![
            Permutation::from_cycles(4, &[vec![0, 1]]).unwrap(),
            Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
        ];
        assert!(matches!(from_generators_capped(4, &gens, 10), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn composition_convention() {
        // (0 1)·(1 2): apply (1 2) first, so 1 ↦ 2 ↦ 2 and 2 ↦ 1 ↦ 0.
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        assert_eq!(a.compose(&b).images(), vec![1, 2, 0]);
    }

    #[test]
    fn families_satisfy_axioms() {
        let specs = [
            "cyclic(7)",
            "dihedral(12)",
            "quaternion(16)",
            "symmetric(4)",
            "product(cyclic(2),dihedral(8))",
            "perms(4: (0 1 2), (0 1)(2 3))",
        ];
        for s in specs {
            let g = build_group(&s.parse().unwrap()).unwrap();
            assert!(is_associative_exhaustive(&g), "{s}");
        }
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in ["cyclic(4)", "product(cyclic(2),quaternion(8))", "perms(4: (0 1 2), (0 1)(2 3))"] {
            let spec: GroupFamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("nonsense".parse::<GroupFamilySpec>().is_err());
        assert!("cyclic(x)".parse::<GroupFamilySpec>().is_err());
    }
}
