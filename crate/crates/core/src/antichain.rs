//! Antichains, the domination relation on subsets, and the antichain poset.

use std::collections::HashMap;
use std::ops::Deref;

use crate::bits::{BitMatrix, BitSet};
use crate::error::{Error, Result};
use crate::poset::{ElementId, ElementSet, FinitePoset};
use crate::witness::OrderWitness;

/// Default largest poset for which antichains are enumerated.
pub const DEFAULT_ENUM_CAP: usize = 16;

/// Upper bound on the element count accepted by enumerating operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumLimit(pub usize);

impl Default for EnumLimit {
    fn default() -> Self {
        EnumLimit(DEFAULT_ENUM_CAP)
    }
}

impl EnumLimit {
    pub fn check(self, p: &FinitePoset) -> Result<()> {
        if p.len() > self.0 {
            return Err(Error::TooLarge {
                n: p.len(),
                cap: self.0,
            });
        }
        Ok(())
    }
}

/// A set of pairwise incomparable elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Antichain(ElementSet);

impl Antichain {
    /// Returns `None` when two members of `set` are comparable.
    pub fn new(p: &FinitePoset, set: ElementSet) -> Option<Self> {
        p.is_antichain(&set).then_some(Antichain(set))
    }

    pub fn empty(p: &FinitePoset) -> Self {
        Antichain(p.empty_set())
    }

    pub fn singleton(p: &FinitePoset, x: ElementId) -> Self {
        Antichain(ElementSet::singleton(p.len(), x))
    }

    /// `Max s`, which is always an antichain.
    pub fn maximal_of(p: &FinitePoset, s: &ElementSet) -> Self {
        Antichain(p.maximal_elements(s))
    }

    pub fn as_set(&self) -> &ElementSet {
        &self.0
    }

    pub fn into_set(self) -> ElementSet {
        self.0
    }
}

impl Deref for Antichain {
    type Target = ElementSet;

    fn deref(&self) -> &ElementSet {
        &self.0
    }
}

/// `B ≤ C` iff every member of `B` lies below some member of `C`.
///
/// Defined for arbitrary subsets, not only antichains.
pub fn subset_leq(p: &FinitePoset, b: &ElementSet, c: &ElementSet) -> bool {
    b.iter().all(|x| p.up_row(x).intersects(c.bits()))
}

/// Every antichain of `p` once, in canonical order (size, then lexicographic
/// on indices). Always includes the empty antichain.
pub fn all_antichains(p: &FinitePoset) -> Result<Vec<Antichain>> {
    all_antichains_capped(p, EnumLimit::default())
}

pub fn all_antichains_capped(p: &FinitePoset, limit: EnumLimit) -> Result<Vec<Antichain>> {
    limit.check(p)?;
    let n = p.len();
    let mut comparable = Vec::with_capacity(n);
    for x in p.elements() {
        let mut row = p.up_row(x).clone();
        row.union_with(p.down_row(x));
        comparable.push(row);
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_antichains(n, &comparable, BitSet::full(n), &mut current, &mut out);
    out.sort();
    Ok(out.into_iter().map(Antichain).collect())
}

// `candidates` holds the elements that can still join `current`: all of them
// have a larger index than the last pick and are incomparable to every pick.
fn extend_antichains(
    n: usize,
    comparable: &[BitSet],
    candidates: BitSet,
    current: &mut Vec<ElementId>,
    out: &mut Vec<ElementSet>,
) {
    out.push(ElementSet::from_ids(n, current.iter().copied()));
    for i in candidates.iter() {
        let mut next = candidates.clone();
        next.difference_with(&comparable[i]);
        for j in 0..=i {
            next.remove(j);
        }
        current.push(ElementId(i));
        extend_antichains(n, comparable, next, current, out);
        current.pop();
    }
}

/// The poset of all antichains of `base` under [`subset_leq`].
#[derive(Debug, Clone)]
pub struct AntichainPoset<'p> {
    pub base: &'p FinitePoset,
    pub antichains: Vec<Antichain>,
    /// Elements are antichain indices; names are the rendered sets (`{a,b}`).
    pub order: FinitePoset,
    index: HashMap<Antichain, usize>,
}

impl<'p> AntichainPoset<'p> {
    pub fn len(&self) -> usize {
        self.antichains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.antichains.is_empty()
    }

    pub fn index_of(&self, a: &Antichain) -> Option<ElementId> {
        self.index.get(a).copied().map(ElementId)
    }

    pub fn antichain(&self, id: ElementId) -> &Antichain {
        &self.antichains[id.0]
    }

    /// Cover pairs of the antichain order, as antichains.
    pub fn cover_pairs(&self) -> Vec<(&Antichain, &Antichain)> {
        self.order
            .cover_pairs()
            .into_iter()
            .map(|(x, y)| (self.antichain(x), self.antichain(y)))
            .collect()
    }
}

pub fn antichain_poset(p: &FinitePoset) -> Result<AntichainPoset<'_>> {
    antichain_poset_capped(p, EnumLimit::default())
}

/// Materializes `(A(P), ≤)`. The order matrix is filled by [`subset_leq`]
/// and then passed through full partial-order validation, so a successful
/// return certifies that the relation is antisymmetric on antichains.
pub fn antichain_poset_capped(p: &FinitePoset, limit: EnumLimit) -> Result<AntichainPoset<'_>> {
    let antichains = all_antichains_capped(p, limit)?;
    let m = antichains.len();
    let leq = BitMatrix::from_fn(m, |i, j| subset_leq(p, &antichains[i], &antichains[j]));
    let names = antichains.iter().map(|a| p.format_set(a)).collect();
    let order = FinitePoset::from_matrix(names, leq)?;
    let index = antichains
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, a)| (a, i))
        .collect();
    Ok(AntichainPoset {
        base: p,
        antichains,
        order,
        index,
    })
}

/// Whether `≤` is a partial order on all of `2^P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowersetOrderStatus {
    pub is_partial_order: bool,
    /// `Antisymmetry { lower: {b}, upper: {a,b} }` for a comparable pair `a < b`.
    pub witness: Option<OrderWitness>,
}

/// Decides whether `(2^P, ≤)` is a poset without enumerating `2^P`: it is
/// exactly when `P` is an antichain. Otherwise the first comparable pair
/// `a < b` in row-major order yields `{b} ≤ {a,b} ≤ {b}`.
pub fn powerset_order_status(p: &FinitePoset) -> Result<PowersetOrderStatus> {
    powerset_order_status_capped(p, EnumLimit::default())
}

pub fn powerset_order_status_capped(
    p: &FinitePoset,
    limit: EnumLimit,
) -> Result<PowersetOrderStatus> {
    limit.check(p)?;
    let pair = p
        .elements()
        .flat_map(|a| p.elements().map(move |b| (a, b)))
        .find(|&(a, b)| p.lt(a, b));
    Ok(match pair {
        None => PowersetOrderStatus {
            is_partial_order: true,
            witness: None,
        },
        Some((a, b)) => PowersetOrderStatus {
            is_partial_order: false,
            witness: Some(OrderWitness::Antisymmetry {
                lower: p.set_of([b]),
                upper: p.set_of([a, b]),
            }),
        },
    })
}
