//! Counterexample records returned by the verifiers.

use std::fmt;

use crate::antichain::{antichain_poset, subset_leq};
use crate::cayley::{cayley_map, map_leq};
use crate::lattice::{bounds_for, lattice_tables, pointwise_join, pointwise_meet, LatticeOp};
use crate::poset::{ElementId, ElementSet, FinitePoset};

/// The law a witness violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    Antisymmetry,
    EmbeddingForward,
    EmbeddingBackward,
    JoinHomomorphism,
    LatticeJoin,
    LatticeMeet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderWitness {
    /// Distinct sets with `lower ≤ upper` and `upper ≤ lower`.
    Antisymmetry { lower: ElementSet, upper: ElementSet },
    /// `a ≤ b` but not `f_a ≤ f_b`.
    EmbeddingForward { a: ElementId, b: ElementId },
    /// `f_a ≤ f_b` but not `a ≤ b`.
    EmbeddingBackward { a: ElementId, b: ElementId },
    /// `f_{a∘b}(at) ≠ (f_a ∘ f_b)(at)` for the lattice operation `op`.
    JoinHomomorphism {
        a: ElementId,
        b: ElementId,
        op: LatticeOp,
        at: ElementId,
    },
    /// The minimal upper bounds of `a, b` are `bounds`, which is not a singleton.
    LatticeJoin {
        a: ElementId,
        b: ElementId,
        bounds: ElementSet,
    },
    /// The maximal lower bounds of `a, b` are `bounds`, which is not a singleton.
    LatticeMeet {
        a: ElementId,
        b: ElementId,
        bounds: ElementSet,
    },
}

impl OrderWitness {
    pub fn law(&self) -> Law {
        match self {
            OrderWitness::Antisymmetry { .. } => Law::Antisymmetry,
            OrderWitness::EmbeddingForward { .. } => Law::EmbeddingForward,
            OrderWitness::EmbeddingBackward { .. } => Law::EmbeddingBackward,
            OrderWitness::JoinHomomorphism { .. } => Law::JoinHomomorphism,
            OrderWitness::LatticeJoin { .. } => Law::LatticeJoin,
            OrderWitness::LatticeMeet { .. } => Law::LatticeMeet,
        }
    }

    /// Recomputes the violation on `p` from scratch. True when it reproduces.
    pub fn replay(&self, p: &FinitePoset) -> bool {
        let in_range = |ids: &[ElementId]| ids.iter().all(|x| x.0 < p.len());
        match self {
            OrderWitness::Antisymmetry { lower, upper } => {
                lower != upper && subset_leq(p, lower, upper) && subset_leq(p, upper, lower)
            }
            OrderWitness::EmbeddingForward { a, b } => {
                in_range(&[*a, *b])
                    && p.leq(*a, *b)
                    && !map_leq(p, &cayley_map(p, *a), &cayley_map(p, *b)).unwrap_or(true)
            }
            OrderWitness::EmbeddingBackward { a, b } => {
                in_range(&[*a, *b])
                    && !p.leq(*a, *b)
                    && map_leq(p, &cayley_map(p, *a), &cayley_map(p, *b)).unwrap_or(false)
            }
            OrderWitness::LatticeJoin { a, b, bounds } => {
                in_range(&[*a, *b])
                    && bounds.len() != 1
                    && bounds_for(p, LatticeOp::Join, *a, *b) == *bounds.bits()
            }
            OrderWitness::LatticeMeet { a, b, bounds } => {
                in_range(&[*a, *b])
                    && bounds.len() != 1
                    && bounds_for(p, LatticeOp::Meet, *a, *b) == *bounds.bits()
            }
            OrderWitness::JoinHomomorphism { a, b, op, at } => {
                if !in_range(&[*a, *b, *at]) {
                    return false;
                }
                let tables = lattice_tables(p);
                let combined = match op {
                    LatticeOp::Join => tables.join(*a, *b),
                    LatticeOp::Meet => tables.meet(*a, *b),
                };
                let (Some(combined), Ok(ap)) = (combined, antichain_poset(p)) else {
                    return false;
                };
                let (fa, fb) = (cayley_map(p, *a), cayley_map(p, *b));
                let lifted = match op {
                    LatticeOp::Join => pointwise_join(&ap, &fa, &fb),
                    LatticeOp::Meet => pointwise_meet(&ap, &fa, &fb),
                };
                match lifted {
                    Ok(g) => cayley_map(p, combined).get(*at) != g.get(*at),
                    Err(_) => false,
                }
            }
        }
    }

    /// Human-readable description using element names.
    pub fn describe(&self, p: &FinitePoset) -> String {
        let n = |x: &ElementId| p.name(*x).to_string();
        match self {
            OrderWitness::Antisymmetry { lower, upper } => format!(
                "antisymmetry fails: {} <= {} and {} <= {}",
                p.format_set(lower),
                p.format_set(upper),
                p.format_set(upper),
                p.format_set(lower)
            ),
            OrderWitness::EmbeddingForward { a, b } => format!(
                "embedding fails forward: {} <= {} but not f_{} <= f_{}",
                n(a),
                n(b),
                n(a),
                n(b)
            ),
            OrderWitness::EmbeddingBackward { a, b } => format!(
                "embedding fails backward: f_{} <= f_{} but not {} <= {}",
                n(a),
                n(b),
                n(a),
                n(b)
            ),
            OrderWitness::JoinHomomorphism { a, b, op, at } => format!(
                "homomorphism fails: f_({}{op}{}) and f_{} {op} f_{} differ at {}",
                n(a),
                n(b),
                n(a),
                n(b),
                n(at)
            ),
            OrderWitness::LatticeJoin { a, b, bounds } => format!(
                "{}, {} have minimal upper bounds {} (no join)",
                n(a),
                n(b),
                p.format_set(bounds)
            ),
            OrderWitness::LatticeMeet { a, b, bounds } => format!(
                "{}, {} have maximal lower bounds {} (no meet)",
                n(a),
                n(b),
                p.format_set(bounds)
            ),
        }
    }
}

impl fmt::Display for OrderWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderWitness::Antisymmetry { lower, upper } => {
                write!(f, "antisymmetry fails between {lower:?} and {upper:?}")
            }
            OrderWitness::EmbeddingForward { a, b } => {
                write!(f, "embedding fails forward at (#{}, #{})", a.0, b.0)
            }
            OrderWitness::EmbeddingBackward { a, b } => {
                write!(f, "embedding fails backward at (#{}, #{})", a.0, b.0)
            }
            OrderWitness::JoinHomomorphism { a, b, op, at } => write!(
                f,
                "homomorphism fails for #{} {op} #{} at #{}",
                a.0, b.0, at.0
            ),
            OrderWitness::LatticeJoin { a, b, bounds } => {
                write!(f, "#{}, #{} have minimal upper bounds {bounds:?}", a.0, b.0)
            }
            OrderWitness::LatticeMeet { a, b, bounds } => {
                write!(f, "#{}, #{} have maximal lower bounds {bounds:?}", a.0, b.0)
            }
        }
    }
}
