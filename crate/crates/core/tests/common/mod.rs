//! Shared test corpora and a deliberately naive reference implementation
//! working on `Vec<Vec<bool>>`, independent of the bit-matrix code paths.

#![allow(dead_code)]

use posetc::{lattice_tables, random_poset, FinitePoset, GenConfig};

/// 200 seeded random posets with `n ≤ 8`, cycling through edge densities.
pub fn theorem_corpus() -> Vec<FinitePoset> {
    const PROBS: [f64; 5] = [0.1, 0.25, 0.4, 0.6, 0.85];
    (0..200u64)
        .map(|i| {
            let n = (i % 9) as usize;
            let p = PROBS[(i / 9) as usize % PROBS.len()];
            random_poset(&GenConfig::new(n, p, 0x5EED_0000 + i).unwrap())
        })
        .collect()
}

/// The first `count` distinct lattices found by filtering seeded random
/// posets with `1 ≤ n ≤ 7`. At most a fifth of them are chains, which
/// otherwise dominate the filter's output.
pub fn random_lattices(count: usize) -> Vec<FinitePoset> {
    const PROBS: [f64; 4] = [0.5, 0.65, 0.8, 0.9];
    let max_chains = count / 5;
    let mut out: Vec<FinitePoset> = Vec::new();
    let mut chains = 0;
    let mut seed = 0u64;
    while out.len() < count {
        let n = 1 + (seed % 7) as usize;
        let p = PROBS[(seed / 7) as usize % PROBS.len()];
        let poset = random_poset(&GenConfig::new(n, p, 0x1A77_1CE0 + seed).unwrap());
        seed += 1;
        assert!(seed < 1_000_000, "lattice filter is not finding enough lattices");
        let is_chain = poset.strict_relation_count() == n * (n - 1) / 2;
        if (is_chain && chains >= max_chains)
            || out.contains(&poset)
            || !lattice_tables(&poset).is_lattice
        {
            continue;
        }
        chains += usize::from(is_chain);
        out.push(poset);
    }
    out
}

/// Reference implementation on a plain relation table.
pub struct Naive {
    pub n: usize,
    pub leq: Vec<Vec<bool>>,
}

impl Naive {
    /// Closure of the generator pairs by repeated relaxation until stable.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in pairs {
            leq[a][b] = true;
        }
        loop {
            let mut changed = false;
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if leq[i][j] && leq[j][k] && !leq[i][k] {
                            leq[i][k] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        Naive { n, leq }
    }

    pub fn of(p: &FinitePoset) -> Self {
        let n = p.len();
        let ids: Vec<_> = p.elements().collect();
        let leq = ids
            .iter()
            .map(|&a| ids.iter().map(|&b| p.leq(a, b)).collect())
            .collect();
        Naive { n, leq }
    }

    pub fn lower_cone(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.n).filter(|&x| self.leq[x][a] && self.leq[x][b]).collect()
    }

    pub fn maximal(&self, s: &[usize]) -> Vec<usize> {
        s.iter()
            .copied()
            .filter(|&x| !s.iter().any(|&y| y != x && self.leq[x][y]))
            .collect()
    }

    pub fn is_antichain(&self, s: &[usize]) -> bool {
        s.iter()
            .all(|&x| s.iter().all(|&y| x == y || !self.leq[x][y]))
    }

    pub fn dominated(&self, b: &[usize], c: &[usize]) -> bool {
        b.iter().all(|&x| c.iter().any(|&y| self.leq[x][y]))
    }

    /// All antichains, by testing every subset; ordered by size then lex.
    pub fn antichains(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0u32..1 << self.n)
            .map(|mask| (0..self.n).filter(|i| mask & (1 << i) != 0).collect::<Vec<_>>())
            .filter(|s| self.is_antichain(s))
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// `f_a(x)` for all `x`, straight from the definition.
    pub fn cayley(&self, a: usize) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| self.maximal(&self.lower_cone(a, x))).collect()
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if x != y
                    && self.leq[x][y]
                    && !(0..self.n).any(|z| z != x && z != y && self.leq[x][z] && self.leq[z][y])
                {
                    out.push((x, y));
                }
            }
        }
        out
    }
}
