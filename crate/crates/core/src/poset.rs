//! Finite posets stored as dense reflexive-transitive bit matrices.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::bits::{BitMatrix, BitSet};
use crate::error::{Error, OrderViolation, Result};

/// Dense 0-based index of an element within its poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub usize);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

/// A subset of the elements of a fixed poset.
///
/// Members are kept as a bit set over the parent's indices, so iteration is
/// always in ascending index order. The total order on sets (`Ord`) is the
/// canonical one used for all listings: by size, then lexicographically on
/// the sorted indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: BitSet,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            bits: BitSet::new(universe),
        }
    }

    pub fn from_ids<I: IntoIterator<Item = ElementId>>(universe: usize, ids: I) -> Self {
        ElementSet {
            bits: BitSet::from_indices(universe, ids.into_iter().map(ElementId::index)),
        }
    }

    pub(crate) fn from_bits(bits: BitSet) -> Self {
        ElementSet { bits }
    }

    pub fn singleton(universe: usize, id: ElementId) -> Self {
        Self::from_ids(universe, [id])
    }

    #[inline]
    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn universe(&self) -> usize {
        self.bits.universe()
    }

    pub fn insert(&mut self, id: ElementId) {
        self.bits.insert(id.0);
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.bits.contains(id.0)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.bits.iter().map(ElementId)
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.iter().collect()
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.bits.iter().cmp(other.bits.iter()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.iter()).finish()
    }
}

/// Checks reflexivity, antisymmetry and transitivity of a relation matrix.
///
/// The transitivity check is the full `n³` triple scan, done a row at a time:
/// for every `i ≤ j`, row `j` must be contained in row `i`.
pub fn validate_partial_order(leq: &BitMatrix) -> Result<(), OrderViolation> {
    let n = leq.size();
    for i in 0..n {
        if !leq.get(i, i) {
            return Err(OrderViolation::NotReflexive { element: i });
        }
    }
    for i in 0..n {
        for j in leq.row(i).iter() {
            if j != i && leq.get(j, i) {
                let (first, second) = (i.min(j), i.max(j));
                return Err(OrderViolation::NotAntisymmetric { first, second });
            }
        }
    }
    for i in 0..n {
        for j in leq.row(i).iter() {
            if let Some(k) = leq.row(j).iter().find(|&k| !leq.get(i, k)) {
                return Err(OrderViolation::NotTransitive {
                    lower: i,
                    middle: j,
                    upper: k,
                });
            }
        }
    }
    Ok(())
}

fn check_name(name: &str) -> Result<()> {
    if name.is_empty() || name.chars().any(char::is_whitespace) {
        return Err(Error::InvalidName(name.to_string()));
    }
    Ok(())
}

/// A finite partially ordered set.
///
/// Elements are identified by their declaration order. Both the up-rows
/// (`up[i] = {j | i ≤ j}`) and down-rows (`down[j] = {i | i ≤ j}`) are kept so
/// that upper and lower sets are single row lookups.
#[derive(Clone)]
pub struct FinitePoset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    up: BitMatrix,
    down: BitMatrix,
}

impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.up == other.up
    }
}

impl Eq for FinitePoset {}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<_> = self
            .cover_pairs()
            .into_iter()
            .map(|(a, b)| format!("{} < {}", self.name(a), self.name(b)))
            .collect();
        f.debug_struct("FinitePoset")
            .field("elements", &self.names)
            .field("covers", &covers)
            .finish()
    }
}

impl FinitePoset {
    /// Builds the reflexive-transitive closure of `pairs`, where each pair
    /// `(a, b)` means `a < b`. Pairs need not be covers and may repeat.
    pub fn from_relations<S, T>(names: &[S], pairs: &[(T, T)]) -> Result<Self>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            let name = name.as_ref();
            check_name(name)?;
            if index.insert(name.to_string(), i).is_some() {
                return Err(Error::DuplicateElement(name.to_string()));
            }
        }
        let n = names.len();
        let lookup = |tok: &str| {
            index
                .get(tok)
                .copied()
                .ok_or_else(|| Error::UnknownElement(tok.to_string()))
        };
        let mut strict = BitMatrix::new(n);
        for (a, b) in pairs {
            strict.insert(lookup(a.as_ref())?, lookup(b.as_ref())?);
        }
        let generators = strict.clone();
        strict.close_transitively();
        if (0..n).any(|i| strict.get(i, i)) {
            let cycle = shortest_cycle(&generators)
                .into_iter()
                .map(|i| names[i].as_ref().to_string())
                .collect();
            return Err(Error::CycleDetected { cycle });
        }
        let mut up = strict;
        for i in 0..n {
            up.insert(i, i);
        }
        let names = names.iter().map(|s| s.as_ref().to_string()).collect();
        Ok(Self::assemble(names, index, up))
    }

    /// Wraps an explicit `leq` matrix after checking the partial-order axioms.
    pub fn from_matrix(names: Vec<String>, leq: BitMatrix) -> Result<Self> {
        assert_eq!(names.len(), leq.size(), "one name per matrix row");
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            check_name(name)?;
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        validate_partial_order(&leq).map_err(Error::NotAPartialOrder)?;
        Ok(Self::assemble(names, index, leq))
    }

    fn assemble(names: Vec<String>, index: HashMap<String, usize>, up: BitMatrix) -> Self {
        let down = up.transpose();
        FinitePoset {
            names,
            index,
            up,
            down,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, id: ElementId) -> &str {
        &self.names[id.0]
    }

    pub fn id(&self, name: &str) -> Option<ElementId> {
        self.index.get(name).copied().map(ElementId)
    }

    /// Like [`FinitePoset::id`] but reports unknown names as an error.
    pub fn lookup(&self, name: &str) -> Result<ElementId> {
        self.id(name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.len()).map(ElementId)
    }

    /// The full `leq` matrix, `leq[i][j] ⇔ i ≤ j`.
    pub fn matrix(&self) -> &BitMatrix {
        &self.up
    }

    #[inline]
    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.up.get(a.0, b.0)
    }

    #[inline]
    pub fn lt(&self, a: ElementId, b: ElementId) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn comparable(&self, a: ElementId, b: ElementId) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `{x | a ≤ x}` as a raw bit row.
    #[inline]
    pub fn up_row(&self, a: ElementId) -> &BitSet {
        self.up.row(a.0)
    }

    /// `{x | x ≤ a}` as a raw bit row.
    #[inline]
    pub fn down_row(&self, a: ElementId) -> &BitSet {
        self.down.row(a.0)
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.len())
    }

    pub fn set_of<I: IntoIterator<Item = ElementId>>(&self, ids: I) -> ElementSet {
        ElementSet::from_ids(self.len(), ids)
    }

    /// Resolves a list of names into a set.
    pub fn set_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<ElementSet> {
        let mut set = self.empty_set();
        for name in names {
            set.insert(self.lookup(name.as_ref())?);
        }
        Ok(set)
    }

    /// Lower cone `L(a, b) = {x | x ≤ a and x ≤ b}`.
    pub fn lower_cone(&self, a: ElementId, b: ElementId) -> ElementSet {
        ElementSet::from_bits(self.down_row(a).intersection(self.down_row(b)))
    }

    /// Upper cone `U(a, b) = {x | a ≤ x and b ≤ x}`.
    pub fn upper_cone(&self, a: ElementId, b: ElementId) -> ElementSet {
        ElementSet::from_bits(self.up_row(a).intersection(self.up_row(b)))
    }

    /// Members of `s` with nothing in `s` strictly above them.
    ///
    /// `x` is maximal in `s` exactly when the up-row of `x` meets `s` only in
    /// `x` itself. Empty input gives empty output.
    pub fn maximal_elements(&self, s: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        for x in s.iter() {
            if self.up_row(x).intersection_len(s.bits()) == 1 {
                out.insert(x);
            }
        }
        out
    }

    /// Members of `s` with nothing in `s` strictly below them.
    pub fn minimal_elements(&self, s: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        for x in s.iter() {
            if self.down_row(x).intersection_len(s.bits()) == 1 {
                out.insert(x);
            }
        }
        out
    }

    /// True iff no two distinct members of `s` are comparable.
    pub fn is_antichain(&self, s: &ElementSet) -> bool {
        s.iter()
            .all(|x| self.up_row(x).intersection_len(s.bits()) == 1)
    }

    /// The transitive reduction: pairs `x < y` with nothing strictly between,
    /// sorted by `(x, y)` index.
    pub fn cover_pairs(&self) -> Vec<(ElementId, ElementId)> {
        let mut covers = Vec::new();
        for x in self.elements() {
            for y in self.up_row(x).iter().map(ElementId) {
                if x == y {
                    continue;
                }
                // z with x ≤ z ≤ y; only x and y themselves when y covers x
                if self.up_row(x).intersection_len(self.down_row(y)) == 2 {
                    covers.push((x, y));
                }
            }
        }
        covers
    }

    /// Number of strictly related pairs `a < b`.
    pub fn strict_relation_count(&self) -> usize {
        self.up.count() - self.len()
    }

    /// Renders a set as `{a,b}` using element names, `{}` when empty.
    pub fn format_set(&self, s: &ElementSet) -> String {
        let names: Vec<&str> = s.iter().map(|x| self.name(x)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Partial order on element names, convenient for tests and fixtures.
    pub fn leq_by_name(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.leq(self.lookup(a)?, self.lookup(b)?))
    }
}

/// Finds a shortest directed cycle in the generator graph by BFS from every
/// vertex. Ties go to the cycle through the lowest-index vertex, listed
/// starting from that vertex.
fn shortest_cycle(edges: &BitMatrix) -> Vec<usize> {
    let n = edges.size();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..n {
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::from([start]);
        let mut closing = None;
        let mut seen = BitSet::new(n);
        seen.insert(start);
        'bfs: while let Some(v) = queue.pop_front() {
            for w in edges.row(v).iter() {
                if w == start {
                    closing = Some(v);
                    break 'bfs;
                }
                if seen.insert(w) {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        let Some(mut v) = closing else { continue };
        let mut path = vec![v];
        while v != start {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        if best.as_ref().map_or(true, |b| path.len() < b.len()) {
            best = Some(path);
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fig1() -> FinitePoset {
        FinitePoset::from_relations(
            &["0", "a", "b", "c", "d", "1"],
            &[
                ("0", "a"),
                ("0", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "1"),
                ("d", "1"),
            ],
        )
        .unwrap()
    }

    fn ids(p: &FinitePoset, names: &[&str]) -> ElementSet {
        p.set_from_names(names).unwrap()
    }

    #[test]
    fn fig1_closure() {
        let p = fig1();
        assert_eq!(p.len(), 6);
        assert!(p.leq_by_name("0", "1").unwrap());
        assert!(p.leq_by_name("a", "c").unwrap());
        assert!(!p.leq_by_name("c", "d").unwrap());
        assert!(!p.leq_by_name("d", "c").unwrap());
        assert!(p.leq_by_name("d", "d").unwrap());
        // 8 covers + 0<c,0<d,0<1,a<1,b<1
        assert_eq!(p.strict_relation_count(), 13);
        assert!(validate_partial_order(p.matrix()).is_ok());
    }

    #[test]
    fn single_element() {
        let p = FinitePoset::from_relations::<_, &str>(&["x"], &[]).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.leq(ElementId(0), ElementId(0)));
        assert_eq!(p.matrix().count(), 1);
    }

    #[test]
    fn empty_poset_is_allowed() {
        let p = FinitePoset::from_relations::<&str, &str>(&[], &[]).unwrap();
        assert!(p.is_empty());
        assert!(p.cover_pairs().is_empty());
        assert!(p.maximal_elements(&p.empty_set()).is_empty());
    }

    #[test]
    fn two_cycle_is_rejected() {
        let err = FinitePoset::from_relations(&["p", "q"], &[("p", "q"), ("q", "p")]).unwrap_err();
        match err {
            Error::CycleDetected { cycle } => assert_eq!(cycle, vec!["p", "q"]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn self_loop_is_a_cycle() {
        let err = FinitePoset::from_relations(&["p"], &[("p", "p")]).unwrap_err();
        assert!(matches!(err, Error::CycleDetected { cycle } if cycle == vec!["p"]));
    }

    #[test]
    fn reports_shortest_cycle() {
        // long cycle a<b<c<d<a and short cycle c<e<c
        let err = FinitePoset::from_relations(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("c", "e"), ("e", "c")],
        )
        .unwrap_err();
        assert!(matches!(err, Error::CycleDetected { cycle } if cycle == vec!["c", "e"]));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            FinitePoset::from_relations(&["a", "a"], &[("a", "a")]),
            Err(Error::DuplicateElement(n)) if n == "a"
        ));
        assert!(matches!(
            FinitePoset::from_relations(&["a"], &[("a", "z")]),
            Err(Error::UnknownElement(n)) if n == "z"
        ));
        assert!(matches!(
            FinitePoset::from_relations::<_, &str>(&["a b"], &[]),
            Err(Error::InvalidName(_))
        ));
        assert!(matches!(
            FinitePoset::from_relations::<_, &str>(&[""], &[]),
            Err(Error::InvalidName(_))
        ));
    }

    #[test]
    fn duplicate_pairs_are_idempotent() {
        let once = FinitePoset::from_relations(&["a", "b"], &[("a", "b")]).unwrap();
        let twice = FinitePoset::from_relations(&["a", "b"], &[("a", "b"), ("a", "b")]).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn lower_cones_in_fig1() {
        let p = fig1();
        let c = p.lookup("c").unwrap();
        let d = p.lookup("d").unwrap();
        let a = p.lookup("a").unwrap();
        assert_eq!(p.lower_cone(c, d), ids(&p, &["0", "a", "b"]));
        assert_eq!(p.lower_cone(a, a), ids(&p, &["0", "a"]));
    }

    #[test]
    fn lower_cone_of_incomparable_atoms_is_empty() {
        let p = FinitePoset::from_relations::<_, &str>(&["p", "q"], &[]).unwrap();
        assert!(p.lower_cone(ElementId(0), ElementId(1)).is_empty());
    }

    #[test]
    fn maximal_elements_in_fig1() {
        let p = fig1();
        assert_eq!(
            p.maximal_elements(&ids(&p, &["0", "a", "b"])),
            ids(&p, &["a", "b"])
        );
        assert_eq!(p.maximal_elements(&ids(&p, &["0", "a", "c"])), ids(&p, &["c"]));
        assert!(p.maximal_elements(&p.empty_set()).is_empty());
    }

    #[test]
    fn antichain_test() {
        let p = fig1();
        assert!(p.is_antichain(&ids(&p, &["a", "b"])));
        assert!(!p.is_antichain(&ids(&p, &["a", "c"])));
        assert!(p.is_antichain(&p.empty_set()));
    }

    #[test]
    fn cover_pairs_of_fig1() {
        let p = fig1();
        let named: Vec<(&str, &str)> = p
            .cover_pairs()
            .into_iter()
            .map(|(x, y)| (p.name(x), p.name(y)))
            .collect();
        assert_eq!(
            named,
            vec![
                ("0", "a"),
                ("0", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "1"),
                ("d", "1"),
            ]
        );
    }

    #[test]
    fn reduction_drops_implied_pair() {
        let p = FinitePoset::from_relations(
            &["0", "m", "1"],
            &[("0", "m"), ("m", "1"), ("0", "1")],
        )
        .unwrap();
        assert_eq!(
            p.cover_pairs(),
            vec![(ElementId(0), ElementId(1)), (ElementId(1), ElementId(2))]
        );
        let q = FinitePoset::from_relations::<_, &str>(&["x", "y", "z"], &[]).unwrap();
        assert!(q.cover_pairs().is_empty());
    }

    #[test]
    fn validation_reports_each_axiom() {
        let mut m = BitMatrix::new(2);
        m.insert(0, 0);
        assert_eq!(
            validate_partial_order(&m),
            Err(OrderViolation::NotReflexive { element: 1 })
        );
        let mut m = BitMatrix::identity(2);
        m.insert(0, 1);
        m.insert(1, 0);
        assert_eq!(
            validate_partial_order(&m),
            Err(OrderViolation::NotAntisymmetric { first: 0, second: 1 })
        );
        let mut m = BitMatrix::identity(3);
        m.insert(0, 1);
        m.insert(1, 2);
        assert_eq!(
            validate_partial_order(&m),
            Err(OrderViolation::NotTransitive { lower: 0, middle: 1, upper: 2 })
        );
    }

    #[test]
    fn canonical_set_order() {
        let p = fig1();
        let mut sets = vec![
            ids(&p, &["c", "d"]),
            ids(&p, &["a"]),
            p.empty_set(),
            ids(&p, &["a", "b"]),
            ids(&p, &["0"]),
        ];
        sets.sort();
        let shown: Vec<String> = sets.iter().map(|s| p.format_set(s)).collect();
        assert_eq!(shown, vec!["{}", "{0}", "{a}", "{a,b}", "{c,d}"]);
    }
}
