use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup};

/// The unordered pair `{gh, hg}` for every `g, h` of an unknown table.
/// Stored for all ordered `(g, h)`, with each pair sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizedProducts {
    n: usize,
    pairs: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize)]
struct ProductsFile {
    order: usize,
    pairs: Vec<(u32, u32, [u32; 2])>,
}

fn sorted(a: ElementId, b: ElementId) -> (u32, u32) {
    (a.0.min(b.0), a.0.max(b.0))
}

impl SymmetrizedProducts {
    /// Builds from one entry `(g, h, p, q)` per unordered `{g, h}`.
    pub fn from_pairs(n: usize, entries: &[(ElementId, ElementId, ElementId, ElementId)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidProducts("order must be positive".into()));
        }
        const UNSET: (u32, u32) = (u32::MAX, u32::MAX);
        let mut pairs = vec![UNSET; n * n];
        for &(g, h, p, q) in entries {
            if [g, h, p, q].iter().any(|x| x.index() >= n) {
                return Err(Error::InvalidProducts(format!("entry ({g},{h}) -> ({p},{q}) out of range for order {n}")));
            }
            let v = sorted(p, q);
            for (a, b) in [(g, h), (h, g)] {
                let slot = &mut pairs[a.index() * n + b.index()];
                if *slot != UNSET && *slot != v {
                    return Err(Error::InvalidProducts(format!("conflicting entries for ({g},{h})")));
                }
                *slot = v;
            }
        }
        if let Some(i) = pairs.iter().position(|&v| v == UNSET) {
            return Err(Error::InvalidProducts(format!("no entry for ({},{})", i / n, i % n)));
        }
        Ok(SymmetrizedProducts { n, pairs })
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        let n = g.order();
        let t = g.flat_table();
        let pairs = (0..n * n)
            .map(|i| {
                let (a, b) = (i / n, i % n);
                let (x, y) = (t[a * n + b], t[b * n + a]);
                (x.min(y), x.max(y))
            })
            .collect();
        SymmetrizedProducts { n, pairs }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `{gh, hg}` as a sorted pair; equal components when `g` and `h` commute.
    pub fn get(&self, g: ElementId, h: ElementId) -> (ElementId, ElementId) {
        let (p, q) = self.pairs[g.index() * self.n + h.index()];
        (ElementId(p), ElementId(q))
    }

    pub fn to_json(&self) -> String {
        let n = self.n;
        let mut pairs = Vec::with_capacity(n * (n + 1) / 2);
        for g in 0..n {
            for h in g..n {
                let (p, q) = self.pairs[g * n + h];
                pairs.push((g as u32, h as u32, [p, q]));
            }
        }
        serde_json::to_string(&ProductsFile { order: n, pairs }).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ProductsFile = serde_json::from_str(text)?;
        let entries: Vec<_> = file
            .pairs
            .iter()
            .map(|&(g, h, [p, q])| (ElementId(g), ElementId(h), ElementId(p), ElementId(q)))
            .collect();
        Self::from_pairs(file.order, &entries)
    }
}
