//! Arithmetic and dense linear algebra over a prime field `𝔽_p`, `p < 2³²`.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!(is_prime(p) && p < (1 << 32));
        PrimeField { p }
    }

    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        x % self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut k: u64) -> u64 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    /// Least generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let order = self.p - 1;
        let factors = prime_factors(order);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, order / q) != 1))
            .unwrap_or(1)
    }

    /// Basis of the null space of the `rows × cols` matrix `m`.
    pub fn null_space(&self, m: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
        let mut a: Vec<Vec<u64>> = m.to_vec();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(piv) = (row..a.len()).find(|&r| a[r][col] != 0) else { continue };
            a.swap(row, piv);
            let inv = self.inv(a[row][col]);
            for x in a[row].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for r in 0..a.len() {
                if r != row && a[r][col] != 0 {
                    let f = a[r][col];
                    for c in 0..cols {
                        let t = self.mul(f, a[row][c]);
                        a[r][c] = self.sub(a[r][c], t);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == a.len() {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = self.sub(0, a[r][free]);
            }
            basis.push(v);
        }
        basis
    }

    /// Coordinates of each vector in `targets` with respect to the linearly
    /// independent `basis`, or `None` if some target lies outside its span.
    pub fn coordinates(&self, basis: &[Vec<u64>], targets: &[Vec<u64>]) -> Option<Vec<Vec<u64>>> {
        let d = basis.len();
        let len = basis.first().map_or(0, Vec::len);
        // Solve Bᵀ x = t for all t at once by reducing [Bᵀ | T].
        let mut aug: Vec<Vec<u64>> = (0..len)
            .map(|i| {
                let mut row: Vec<u64> = basis.iter().map(|b| b[i]).collect();
                row.extend(targets.iter().map(|t| t[i]));
                row
            })
            .collect();
        let width = d + targets.len();
        let mut row = 0;
        for col in 0..d {
            let piv = (row..len).find(|&r| aug[r][col] != 0)?;
            aug.swap(row, piv);
            let inv = self.inv(aug[row][col]);
            for x in aug[row].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for r in 0..len {
                if r != row && aug[r][col] != 0 {
                    let f = aug[r][col];
                    for c in 0..width {
                        let t = self.mul(f, aug[row][c]);
                        aug[r][c] = self.sub(aug[r][c], t);
                    }
                }
            }
            row += 1;
        }
        if aug[d..].iter().any(|r| r[d..].iter().any(|&x| x != 0)) {
            return None;
        }
        Some((0..targets.len()).map(|t| (0..d).map(|i| aug[i][d + t]).collect()).collect())
    }

    /// Characteristic polynomial `det(xI − m)`, low coefficients first, via
    /// reduction to upper Hessenberg form.
    pub fn char_poly(&self, m: &[Vec<u64>]) -> Vec<u64> {
        let n = m.len();
        let mut h: Vec<Vec<u64>> = m.to_vec();
        for col in 0..n.saturating_sub(2) {
            let Some(piv) = (col + 1..n).find(|&r| h[r][col] != 0) else { continue };
            if piv != col + 1 {
                h.swap(piv, col + 1);
                for row in h.iter_mut() {
                    row.swap(piv, col + 1);
                }
            }
            let inv = self.inv(h[col + 1][col]);
            for r in col + 2..n {
                if h[r][col] == 0 {
                    continue;
                }
                let f = self.mul(h[r][col], inv);
                for c in 0..n {
                    let t = self.mul(f, h[col + 1][c]);
                    h[r][c] = self.sub(h[r][c], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(f, row[r]);
                    row[col + 1] = self.add(row[col + 1], t);
                }
            }
        }
        // p_k = char poly of the leading k×k block.
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let mut next = vec![0u64; k + 2];
            // (x − h[k][k]) · p_k
            for (i, &c) in polys[k].iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], c);
                let t = self.mul(h[k][k], c);
                next[i] = self.sub(next[i], t);
            }
            let mut prod = 1u64;
            for i in (0..k).rev() {
                prod = self.mul(prod, h[i + 1][i]);
                let coef = self.mul(prod, h[i][k]);
                if coef == 0 {
                    continue;
                }
                for (j, &c) in polys[i].iter().enumerate() {
                    let t = self.mul(coef, c);
                    next[j] = self.sub(next[j], t);
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap_or_else(|| vec![1])
    }

    pub fn eval(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
