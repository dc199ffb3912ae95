//! Independent verification machinery: seeded random posets and a
//! brute-force isomorphism search.
//!
//! Random posets are drawn with SplitMix64 (Steele, Lea and Flood, 2014):
//! the state advances by the constant `0x9E3779B97F4A7C15` and each output is
//! the state passed through the published finalizer. For each pair `i < j`
//! in the order `(0,1), (0,2), ..., (0,n-1), (1,2), ...` one output `u` is
//! drawn and the relation `i < j` is kept when `(u >> 11) · 2⁻⁵³ < edge_prob`.
//! The result is closed reflexively and transitively. Elements are named
//! `v0 .. v{n-1}`.

use crate::antichain::{all_antichains_capped, subset_leq, EnumLimit};
use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::poset::{ElementId, FinitePoset};

/// Largest poset accepted by [`are_isomorphic`].
pub const ISOMORPHISM_CAP: usize = 10;

/// The SplitMix64 generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenConfig {
    pub n: usize,
    pub edge_prob: f64,
    pub seed: u64,
}

impl GenConfig {
    pub fn new(n: usize, edge_prob: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&edge_prob) {
            return Err(Error::InvalidConfig(format!(
                "edge probability {edge_prob} is outside [0, 1]"
            )));
        }
        Ok(GenConfig { n, edge_prob, seed })
    }
}

/// Deterministic random poset; identical configs give identical posets.
pub fn random_poset(cfg: &GenConfig) -> FinitePoset {
    let n = cfg.n;
    let mut rng = SplitMix64::new(cfg.seed);
    let mut leq = BitMatrix::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.next_f64() < cfg.edge_prob {
                leq.insert(i, j);
            }
        }
    }
    leq.close_transitively();
    for i in 0..n {
        leq.insert(i, i);
    }
    let names = (0..n).map(|i| format!("v{i}")).collect();
    FinitePoset::from_matrix(names, leq).expect("closure of a forward-only DAG is a poset")
}

// (number strictly below, number strictly above)
fn profile(p: &FinitePoset, x: ElementId) -> (usize, usize) {
    (p.down_row(x).len() - 1, p.up_row(x).len() - 1)
}

/// Searches for an order isomorphism `p → q`; `result[x]` is the image of
/// `x`. Both directions of the order are preserved. Candidates are pruned by
/// their strict in/out degree.
pub fn are_isomorphic(p: &FinitePoset, q: &FinitePoset) -> Result<Option<Vec<ElementId>>> {
    for side in [p, q] {
        if side.len() > ISOMORPHISM_CAP {
            return Err(Error::TooLarge {
                n: side.len(),
                cap: ISOMORPHISM_CAP,
            });
        }
    }
    if p.len() != q.len() {
        return Ok(None);
    }
    let pp: Vec<_> = p.elements().map(|x| profile(p, x)).collect();
    let qp: Vec<_> = q.elements().map(|y| profile(q, y)).collect();
    let (mut ps, mut qs) = (pp.clone(), qp.clone());
    ps.sort_unstable();
    qs.sort_unstable();
    if ps != qs {
        return Ok(None);
    }
    let mut image = Vec::with_capacity(p.len());
    let mut used = vec![false; q.len()];
    Ok(extend_bijection(p, q, &pp, &qp, &mut image, &mut used).then_some(image))
}

fn extend_bijection(
    p: &FinitePoset,
    q: &FinitePoset,
    pp: &[(usize, usize)],
    qp: &[(usize, usize)],
    image: &mut Vec<ElementId>,
    used: &mut [bool],
) -> bool {
    let x = ElementId(image.len());
    if x.0 == p.len() {
        return true;
    }
    for y in q.elements() {
        if used[y.0] || qp[y.0] != pp[x.0] {
            continue;
        }
        let consistent = image.iter().enumerate().all(|(i, &fy)| {
            let xi = ElementId(i);
            p.leq(x, xi) == q.leq(y, fy) && p.leq(xi, x) == q.leq(fy, y)
        });
        if !consistent {
            continue;
        }
        used[y.0] = true;
        image.push(y);
        if extend_bijection(p, q, pp, qp, image, used) {
            return true;
        }
        image.pop();
        used[y.0] = false;
    }
    false
}

/// True when `map` is an order isomorphism from `p` onto `q`.
pub fn is_order_isomorphism(p: &FinitePoset, q: &FinitePoset, map: &[ElementId]) -> bool {
    if p.len() != q.len() || map.len() != p.len() {
        return false;
    }
    let mut hit = vec![false; q.len()];
    for y in map {
        if y.0 >= q.len() || std::mem::replace(&mut hit[y.0], true) {
            return false;
        }
    }
    p.elements()
        .all(|a| p.elements().all(|b| p.leq(a, b) == q.leq(map[a.0], map[b.0])))
}

/// The full poset of maps `P → A(P)` under the pointwise order, built by
/// enumerating every map. Only usable for tiny `P`: fails with `TooLarge`
/// when `|A(P)|^n` exceeds `max_maps`.
pub fn map_space_poset(p: &FinitePoset, max_maps: usize) -> Result<FinitePoset> {
    let antichains = all_antichains_capped(p, EnumLimit::default())?;
    let k = antichains.len();
    let n = p.len();
    let total = (0..n).try_fold(1usize, |acc, _| acc.checked_mul(k).filter(|&t| t <= max_maps));
    let Some(total) = total else {
        return Err(Error::TooLarge { n: usize::MAX, cap: max_maps });
    };
    let below = BitMatrix::from_fn(k, |i, j| subset_leq(p, &antichains[i], &antichains[j]));
    // map m sends element x to antichain digit_x(m) in base k
    let digits = |mut m: usize| {
        let mut d = Vec::with_capacity(n);
        for _ in 0..n {
            d.push(m % k);
            m /= k;
        }
        d
    };
    let all: Vec<Vec<usize>> = (0..total).map(digits).collect();
    let leq = BitMatrix::from_fn(total, |i, j| {
        all[i].iter().zip(&all[j]).all(|(&a, &b)| below.get(a, b))
    });
    let names = (0..total).map(|i| format!("m{i}")).collect();
    FinitePoset::from_matrix(names, leq)
}
