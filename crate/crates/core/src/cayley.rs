//! Maps from a poset into its antichains, and the embedding `a ↦ f_a` with
//! `f_a(x) = Max L(a, x)`.
//!
//! Maps store their values as antichains directly rather than as indices into
//! an enumerated antichain list, so none of this module depends on the
//! enumeration cap.

use crate::antichain::{subset_leq, Antichain};
use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::poset::{ElementId, FinitePoset};
use crate::witness::OrderWitness;

/// A total function from the elements of `base` to antichains of `base`.
#[derive(Debug, Clone)]
pub struct CayleyMap<'p> {
    pub base: &'p FinitePoset,
    values: Vec<Antichain>,
}

impl PartialEq for CayleyMap<'_> {
    fn eq(&self, other: &Self) -> bool {
        same_base(self.base, other.base) && self.values == other.values
    }
}

impl Eq for CayleyMap<'_> {}

pub(crate) fn same_base(p: &FinitePoset, q: &FinitePoset) -> bool {
    std::ptr::eq(p, q) || p == q
}

impl<'p> CayleyMap<'p> {
    /// Builds a map from one value per element. Panics if the length is wrong
    /// or a value is not an antichain of `base`.
    pub fn from_values(base: &'p FinitePoset, values: Vec<Antichain>) -> Self {
        assert_eq!(values.len(), base.len(), "one value per element");
        assert!(
            values.iter().all(|v| base.is_antichain(v)),
            "map values must be antichains"
        );
        CayleyMap { base, values }
    }

    pub fn get(&self, x: ElementId) -> &Antichain {
        &self.values[x.0]
    }

    pub fn values(&self) -> &[Antichain] {
        &self.values
    }
}

/// `f_a`, with `f_a(x) = Max L(a, x)` for every `x`.
pub fn cayley_map(p: &FinitePoset, a: ElementId) -> CayleyMap<'_> {
    let values = p
        .elements()
        .map(|x| Antichain::maximal_of(p, &p.lower_cone(a, x)))
        .collect();
    CayleyMap { base: p, values }
}

/// Pointwise order: `f ≤ g` iff `f(x) ≤ g(x)` under [`subset_leq`] for all `x`.
pub fn map_leq(p: &FinitePoset, f: &CayleyMap<'_>, g: &CayleyMap<'_>) -> Result<bool> {
    if !same_base(p, f.base) || !same_base(p, g.base) {
        return Err(Error::BaseMismatch);
    }
    Ok(pointwise_leq(p, f, g))
}

fn pointwise_leq(p: &FinitePoset, f: &CayleyMap<'_>, g: &CayleyMap<'_>) -> bool {
    f.values
        .iter()
        .zip(&g.values)
        .all(|(fx, gx)| subset_leq(p, fx, gx))
}

/// All `n` maps `f_a`, indexed by `a`.
#[derive(Debug, Clone)]
pub struct MapFamily<'p> {
    pub base: &'p FinitePoset,
    pub maps: Vec<CayleyMap<'p>>,
}

impl<'p> MapFamily<'p> {
    pub fn map(&self, a: ElementId) -> &CayleyMap<'p> {
        &self.maps[a.0]
    }

    /// `f_a(x)`.
    pub fn value(&self, a: ElementId, x: ElementId) -> &Antichain {
        self.maps[a.0].get(x)
    }

    /// Distinct elements give distinct maps.
    pub fn is_injective(&self) -> bool {
        let mut values: Vec<&[Antichain]> = self.maps.iter().map(|m| m.values()).collect();
        values.sort();
        values.windows(2).all(|w| w[0] != w[1])
    }
}

pub fn embed(p: &FinitePoset) -> MapFamily<'_> {
    MapFamily {
        base: p,
        maps: p.elements().map(|a| cayley_map(p, a)).collect(),
    }
}

/// Checks `a ≤ b ⟺ f_a ≤ f_b` for every ordered pair, scanning row-major,
/// and returns the first violation.
pub fn verify_embedding(p: &FinitePoset) -> Option<OrderWitness> {
    let family = embed(p);
    for a in p.elements() {
        for b in p.elements() {
            let below = p.leq(a, b);
            let maps_below = pointwise_leq(p, family.map(a), family.map(b));
            match (below, maps_below) {
                (true, false) => return Some(OrderWitness::EmbeddingForward { a, b }),
                (false, true) => return Some(OrderWitness::EmbeddingBackward { a, b }),
                _ => {}
            }
        }
    }
    None
}

/// The poset `{f_a | a ∈ P}` under the pointwise order, with element `a`
/// renamed `f_<a>`.
pub fn image_subposet(p: &FinitePoset) -> FinitePoset {
    let family = embed(p);
    let n = p.len();
    let leq = BitMatrix::from_fn(n, |i, j| pointwise_leq(p, &family.maps[i], &family.maps[j]));
    let names = p.names().iter().map(|s| format!("f_{s}")).collect();
    // Pointwise order on maps is always a preorder; injectivity makes it a
    // partial order on the image.
    FinitePoset::from_matrix(names, leq).expect("image of an order embedding is a poset")
}
