//! Join and meet tables, the singleton-meet property of the maps `f_a` on
//! lattices, and the search for pairs where `a ↦ f_a` fails to preserve
//! joins or meets.

use std::fmt;

use crate::antichain::{antichain_poset_capped, AntichainPoset, EnumLimit};
use crate::bits::BitSet;
use crate::cayley::{embed, same_base, CayleyMap};
use crate::error::{Error, Result};
use crate::poset::{ElementId, ElementSet, FinitePoset};
use crate::witness::OrderWitness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeOp {
    Join,
    Meet,
}

impl fmt::Display for LatticeOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticeOp::Join => "∨",
            LatticeOp::Meet => "∧",
        })
    }
}

/// A total binary operation on the elements of a poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpTable {
    n: usize,
    cells: Vec<ElementId>,
}

impl OpTable {
    pub fn get(&self, a: ElementId, b: ElementId) -> ElementId {
        self.cells[a.0 * self.n + b.0]
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeTables {
    pub is_lattice: bool,
    pub join: Option<OpTable>,
    pub meet: Option<OpTable>,
    /// First pair, in row-major order over `a ≤ b` by index, whose minimal
    /// upper bounds (joins checked first) or maximal lower bounds are not a
    /// single element.
    pub failure: Option<OrderWitness>,
}

impl LatticeTables {
    pub fn join(&self, a: ElementId, b: ElementId) -> Option<ElementId> {
        self.join.as_ref().map(|t| t.get(a, b))
    }

    pub fn meet(&self, a: ElementId, b: ElementId) -> Option<ElementId> {
        self.meet.as_ref().map(|t| t.get(a, b))
    }
}

fn single(set: &ElementSet) -> Option<ElementId> {
    let mut it = set.iter();
    match (it.next(), it.next()) {
        (Some(x), None) => Some(x),
        _ => None,
    }
}

/// Minimal elements of `U(a, b)`; a singleton exactly when `a ∨ b` exists.
pub fn minimal_upper_bounds(p: &FinitePoset, a: ElementId, b: ElementId) -> ElementSet {
    p.minimal_elements(&p.upper_cone(a, b))
}

/// Maximal elements of `L(a, b)`; a singleton exactly when `a ∧ b` exists.
pub fn maximal_lower_bounds(p: &FinitePoset, a: ElementId, b: ElementId) -> ElementSet {
    p.maximal_elements(&p.lower_cone(a, b))
}

/// Computes join and meet for every pair, or the first pair lacking one.
///
/// The empty poset is reported as a lattice with empty tables.
pub fn lattice_tables(p: &FinitePoset) -> LatticeTables {
    let n = p.len();
    let mut join = vec![ElementId(0); n * n];
    let mut meet = vec![ElementId(0); n * n];
    for a in p.elements() {
        for b in p.elements().skip(a.0) {
            let ups = minimal_upper_bounds(p, a, b);
            let Some(j) = single(&ups) else {
                return not_a_lattice(OrderWitness::LatticeJoin { a, b, bounds: ups });
            };
            let downs = maximal_lower_bounds(p, a, b);
            let Some(m) = single(&downs) else {
                return not_a_lattice(OrderWitness::LatticeMeet { a, b, bounds: downs });
            };
            for (x, y) in [(a, b), (b, a)] {
                join[x.0 * n + y.0] = j;
                meet[x.0 * n + y.0] = m;
            }
        }
    }
    LatticeTables {
        is_lattice: true,
        join: Some(OpTable { n, cells: join }),
        meet: Some(OpTable { n, cells: meet }),
        failure: None,
    }
}

fn not_a_lattice(failure: OrderWitness) -> LatticeTables {
    LatticeTables {
        is_lattice: false,
        join: None,
        meet: None,
        failure: Some(failure),
    }
}

fn require_lattice(p: &FinitePoset, wrap: fn(OrderWitness) -> Error) -> Result<LatticeTables> {
    let tables = lattice_tables(p);
    match &tables.failure {
        Some(w) => Err(wrap(w.clone())),
        None => Ok(tables),
    }
}

/// On a lattice, checks that every `f_a(x)` is exactly `{a ∧ x}`.
pub fn singleton_meet_check(p: &FinitePoset) -> Result<Option<OrderWitness>> {
    let tables = require_lattice(p, Error::NotALattice)?;
    let family = embed(p);
    for a in p.elements() {
        for x in p.elements() {
            let value = family.value(a, x);
            let expected = tables.meet(a, x).expect("lattice has meets");
            if single(value) != Some(expected) {
                return Ok(Some(OrderWitness::LatticeMeet {
                    a,
                    b: x,
                    bounds: value.as_set().clone(),
                }));
            }
        }
    }
    Ok(None)
}

fn combine<'p>(
    ap: &AntichainPoset<'p>,
    table: &OpTable,
    f: &CayleyMap<'_>,
    g: &CayleyMap<'_>,
) -> CayleyMap<'p> {
    let values = f
        .values()
        .iter()
        .zip(g.values())
        .map(|(fx, gx)| {
            let i = ap.index_of(fx).expect("map value is an antichain");
            let j = ap.index_of(gx).expect("map value is an antichain");
            ap.antichain(table.get(i, j)).clone()
        })
        .collect();
    CayleyMap::from_values(ap.base, values)
}

fn pointwise<'p>(
    ap: &AntichainPoset<'p>,
    f: &CayleyMap<'_>,
    g: &CayleyMap<'_>,
    op: LatticeOp,
) -> Result<CayleyMap<'p>> {
    if !same_base(ap.base, f.base) || !same_base(ap.base, g.base) {
        return Err(Error::BaseMismatch);
    }
    let tables = require_lattice(&ap.order, Error::AntichainOrderNotLattice)?;
    let table = match op {
        LatticeOp::Join => tables.join.as_ref(),
        LatticeOp::Meet => tables.meet.as_ref(),
    };
    Ok(combine(ap, table.expect("lattice tables"), f, g))
}

/// `(f ∨ g)(x) = f(x) ∨ g(x)`, joins taken in the antichain order.
pub fn pointwise_join<'p>(
    ap: &AntichainPoset<'p>,
    f: &CayleyMap<'_>,
    g: &CayleyMap<'_>,
) -> Result<CayleyMap<'p>> {
    pointwise(ap, f, g, LatticeOp::Join)
}

/// `(f ∧ g)(x) = f(x) ∧ g(x)`, meets taken in the antichain order.
pub fn pointwise_meet<'p>(
    ap: &AntichainPoset<'p>,
    f: &CayleyMap<'_>,
    g: &CayleyMap<'_>,
) -> Result<CayleyMap<'p>> {
    pointwise(ap, f, g, LatticeOp::Meet)
}

/// A pair `(a, b)` with `f_{a∘b} ≠ f_a ∘ f_b` for `∘` one of the operations.
#[derive(Debug, Clone)]
pub struct HomomorphismWitness<'p> {
    pub op: LatticeOp,
    pub a: ElementId,
    pub b: ElementId,
    /// `a ∘ b` in the base lattice.
    pub combined: ElementId,
    /// `f_{a∘b}`.
    pub image: CayleyMap<'p>,
    /// `f_a ∘ f_b`, taken pointwise.
    pub pointwise: CayleyMap<'p>,
    /// First `x` with `image(x) ≠ pointwise(x)`.
    pub at: ElementId,
    /// Every such `x`, ascending.
    pub differences: Vec<ElementId>,
}

impl HomomorphismWitness<'_> {
    pub fn to_order_witness(&self) -> OrderWitness {
        OrderWitness::JoinHomomorphism {
            a: self.a,
            b: self.b,
            op: self.op,
            at: self.at,
        }
    }
}

#[derive(Debug, Clone)]
pub struct HomomorphismReport<'p> {
    pub holds: bool,
    pub witness: Option<HomomorphismWitness<'p>>,
}

pub fn join_homomorphism_witness(p: &FinitePoset) -> Result<HomomorphismReport<'_>> {
    join_homomorphism_witness_capped(p, EnumLimit::default())
}

/// Scans pairs `(a, b)` with `a ≤ b` by index in row-major order and checks
/// `f_{a∨b} = f_a ∨ f_b`, then `f_{a∧b} = f_a ∧ f_b`, reporting the first
/// failure. Requires both `P` and its antichain order to be lattices.
pub fn join_homomorphism_witness_capped(
    p: &FinitePoset,
    limit: EnumLimit,
) -> Result<HomomorphismReport<'_>> {
    let base = require_lattice(p, Error::NotALattice)?;
    let ap = antichain_poset_capped(p, limit)?;
    let lifted = require_lattice(&ap.order, Error::AntichainOrderNotLattice)?;
    let family = embed(p);
    let ops = [
        (LatticeOp::Join, base.join.as_ref(), lifted.join.as_ref()),
        (LatticeOp::Meet, base.meet.as_ref(), lifted.meet.as_ref()),
    ];
    for a in p.elements() {
        for b in p.elements().skip(a.0) {
            for (op, base_table, lifted_table) in ops {
                let combined = base_table.expect("lattice").get(a, b);
                let image = family.map(combined);
                let pw = combine(&ap, lifted_table.expect("lattice"), family.map(a), family.map(b));
                let differences: Vec<ElementId> =
                    p.elements().filter(|&x| image.get(x) != pw.get(x)).collect();
                if let Some(&at) = differences.first() {
                    return Ok(HomomorphismReport {
                        holds: false,
                        witness: Some(HomomorphismWitness {
                            op,
                            a,
                            b,
                            combined,
                            image: image.clone(),
                            pointwise: pw,
                            at,
                            differences,
                        }),
                    });
                }
            }
        }
    }
    Ok(HomomorphismReport {
        holds: true,
        witness: None,
    })
}

/// Brute-force check of the four lattice laws on both tables. Returns the
/// name of the first law that fails.
pub fn check_lattice_laws(tables: &LatticeTables) -> Result<(), &'static str> {
    let (Some(join), Some(meet)) = (&tables.join, &tables.meet) else {
        return Err("not a lattice");
    };
    let n = join.size();
    let ids = || (0..n).map(ElementId);
    for a in ids() {
        if join.get(a, a) != a || meet.get(a, a) != a {
            return Err("idempotence");
        }
        for b in ids() {
            if join.get(a, b) != join.get(b, a) || meet.get(a, b) != meet.get(b, a) {
                return Err("commutativity");
            }
            if join.get(a, meet.get(a, b)) != a || meet.get(a, join.get(a, b)) != a {
                return Err("absorption");
            }
            for c in ids() {
                if join.get(join.get(a, b), c) != join.get(a, join.get(b, c))
                    || meet.get(meet.get(a, b), c) != meet.get(a, meet.get(b, c))
                {
                    return Err("associativity");
                }
            }
        }
    }
    Ok(())
}

// Used by witness replay to recompute bounds without going through the tables.
pub(crate) fn bounds_for(p: &FinitePoset, op: LatticeOp, a: ElementId, b: ElementId) -> BitSet {
    match op {
        LatticeOp::Join => minimal_upper_bounds(p, a, b).bits().clone(),
        LatticeOp::Meet => maximal_lower_bounds(p, a, b).bits().clone(),
    }
}
