//! Finite posets and complete distributive lattices.
//!
//! Carriers are finite sets of named elements. A [`Poset`] stores the
//! reflexive-transitive closure of whatever relation it was built from; a
//! [`Lattice`] adds total meet/join tables, the bottom and top elements, a
//! distributivity certificate, and the set `Â` of join-irreducible elements
//! lifted by the bottom. The map `↓⁺x = ↓x ∩ Â` underlies the canonical
//! set-based representation: for distributive lattices it is an isomorphism
//! onto the family `A⁺ = {↓⁺a | a ∈ A}` ordered by inclusion, with
//! `↓⁺(x∧y) = ↓⁺x ∩ ↓⁺y` and `↓⁺(x∨y) = ↓⁺x ∪ ↓⁺y`.
//!
//! Everything is immutable after construction and safe to share across
//! threads.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on carrier size; element subsets are stored as `u64` bitmasks.
pub const MAX_ELEMENTS: usize = 64;

/// Index of an element in a carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub usize);

/// A subset of a carrier, as a bitmask over element indices.
///
/// Down-sets, world sets and canonical-carrier members are all `ElemSet`s;
/// the constructors document which invariants hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(e: Elem) -> Self {
        ElemSet(1u64 << e.0)
    }

    pub fn full(n: usize) -> Self {
        if n == 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, e: Elem) -> bool {
        self.0 >> e.0 & 1 == 1
    }

    pub fn insert(&mut self, e: Elem) {
        self.0 |= 1u64 << e.0;
    }

    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn inter(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn diff(self, other: Self) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Elem> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(Elem(i))
            }
        })
    }

    /// All subsets of `self`, the empty set first and `self` last.
    pub fn subsets(self) -> impl Iterator<Item = ElemSet> {
        let mask = self.0;
        let mut cur = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = ElemSet(cur);
            if cur == mask {
                done = true;
            } else {
                cur = (cur.wrapping_sub(mask)) & mask;
            }
            Some(out)
        })
    }
}

impl FromIterator<Elem> for ElemSet {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

/// How an input relation is interpreted when building a poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderMode {
    /// The pairs are a covering (Hasse) relation.
    Hasse,
    /// The pairs are an arbitrary (typically full) order relation.
    Full,
}

/// A finite partially ordered set. `below[x]` holds the reflexive-transitive
/// closure `↓x`; antisymmetry is enforced at construction time.
#[derive(Debug, Clone)]
pub struct Poset {
    names: Vec<String>,
    index: BTreeMap<String, Elem>,
    below: Vec<ElemSet>,
    above: Vec<ElemSet>,
}

impl Poset {
    /// Builds a poset from named elements and relation pairs, closing the
    /// relation reflexively and transitively. With [`OrderMode::Hasse`] the
    /// input is read as a covering relation; either way the closure is
    /// computed and antisymmetry checked.
    pub fn new(elements: &[&str], pairs: &[(&str, &str)], mode: OrderMode) -> Result<Poset> {
        let _ = mode; // closure is computed for both modes
        if elements.is_empty() {
            return Err(Error::InvalidParameter("no elements".into()));
        }
        if elements.len() > MAX_ELEMENTS {
            return Err(Error::CarrierTooLarge(elements.len(), MAX_ELEMENTS));
        }
        let mut index = BTreeMap::new();
        let mut names = Vec::with_capacity(elements.len());
        for (i, name) in elements.iter().enumerate() {
            if index.insert(name.to_string(), Elem(i)).is_some() {
                return Err(Error::DuplicateElement(name.to_string()));
            }
            names.push(name.to_string());
        }
        let n = names.len();
        // above[x] seeded with x itself plus the direct successors.
        let mut above = vec![ElemSet::EMPTY; n];
        for (i, set) in above.iter_mut().enumerate() {
            set.insert(Elem(i));
        }
        for (a, b) in pairs {
            let x = *index
                .get(*a)
                .ok_or_else(|| Error::UnknownElement(a.to_string()))?;
            let y = *index
                .get(*b)
                .ok_or_else(|| Error::UnknownElement(b.to_string()))?;
            above[x.0].insert(y);
        }
        // transitive closure (Warshall over bitmasks)
        loop {
            let mut changed = false;
            for x in 0..n {
                let mut acc = above[x];
                for y in above[x].iter() {
                    acc = acc.union(above[y.0]);
                }
                if acc != above[x] {
                    above[x] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        // antisymmetry
        for (x, ups) in above.iter().enumerate() {
            for y in ups.iter() {
                if y.0 != x && above[y.0].contains(Elem(x)) {
                    return Err(Error::Cycle(names[x].clone(), names[y.0].clone()));
                }
            }
        }
        let mut below = vec![ElemSet::EMPTY; n];
        for (x, ups) in above.iter().enumerate() {
            for y in ups.iter() {
                below[y.0].insert(Elem(x));
            }
        }
        Ok(Poset {
            names,
            index,
            below,
            above,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> {
        (0..self.len()).map(Elem)
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e.0]
    }

    pub fn elem(&self, name: &str) -> Result<Elem> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.below[y.0].contains(x)
    }

    /// `↓x` as a set.
    pub fn down(&self, x: Elem) -> ElemSet {
        self.below[x.0]
    }

    /// `↑x` as a set.
    pub fn up(&self, x: Elem) -> ElemSet {
        self.above[x.0]
    }

    /// The covering pairs (x, y): x ⊏ y with nothing strictly between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for y in self.elems() {
            for x in self.below[y.0].iter() {
                if x == y {
                    continue;
                }
                let between = self.above[x.0]
                    .inter(self.below[y.0])
                    .diff(ElemSet::singleton(x))
                    .diff(ElemSet::singleton(y));
                if between.is_empty() {
                    out.push((x, y));
                }
            }
        }
        out.sort_by_key(|&(x, y)| (x.0, y.0));
        out
    }

    pub fn set_to_names(&self, s: ElemSet) -> Vec<String> {
        s.iter().map(|e| self.name(e).to_string()).collect()
    }
}

/// A finite complete lattice: a poset with total meet/join tables, named
/// bottom `0` and top `1`, a distributivity certificate computed once, and
/// the lifted join-irreducible set `Â`.
#[derive(Debug, Clone)]
pub struct Lattice {
    poset: Poset,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
    distributive: bool,
    irreducibles: ElemSet,
}

impl Lattice {
    /// Completes a poset to a lattice by brute force: every pair must have a
    /// unique infimum and supremum. Distributivity is decided by the
    /// exhaustive triple check and stored as a certificate.
    pub fn from_poset(poset: Poset) -> Result<Lattice> {
        let n = poset.len();
        let mut meet = vec![Elem(0); n * n];
        let mut join = vec![Elem(0); n * n];
        for x in poset.elems() {
            for y in poset.elems() {
                let lb = poset.down(x).inter(poset.down(y));
                let inf = lb.iter().find(|m| lb.is_subset(poset.down(*m)));
                let ub = poset.up(x).inter(poset.up(y));
                let sup = ub.iter().find(|j| ub.is_subset(poset.up(*j)));
                match (inf, sup) {
                    (Some(m), Some(j)) => {
                        meet[x.0 * n + y.0] = m;
                        join[x.0 * n + y.0] = j;
                    }
                    (None, _) => {
                        return Err(Error::NotALattice {
                            kind: "infimum",
                            x: poset.name(x).into(),
                            y: poset.name(y).into(),
                        })
                    }
                    (_, None) => {
                        return Err(Error::NotALattice {
                            kind: "supremum",
                            x: poset.name(x).into(),
                            y: poset.name(y).into(),
                        })
                    }
                }
            }
        }
        let bottom = poset.elems().fold(Elem(0), |acc, x| meet[acc.0 * n + x.0]);
        let top = poset.elems().fold(Elem(0), |acc, x| join[acc.0 * n + x.0]);
        let mut distributive = true;
        'outer: for x in poset.elems() {
            for y in poset.elems() {
                for z in poset.elems() {
                    let lhs = meet[x.0 * n + join[y.0 * n + z.0].0];
                    let rhs = join[meet[x.0 * n + y.0].0 * n + meet[x.0 * n + z.0].0];
                    if lhs != rhs {
                        distributive = false;
                        break 'outer;
                    }
                }
            }
        }
        let mut irreducibles = ElemSet::singleton(bottom);
        for c in poset.elems() {
            if c == bottom {
                continue;
            }
            let mut irred = true;
            'pairs: for a in poset.elems() {
                for b in poset.elems() {
                    if join[a.0 * n + b.0] == c && a != c && b != c {
                        irred = false;
                        break 'pairs;
                    }
                }
            }
            if irred {
                irreducibles.insert(c);
            }
        }
        Ok(Lattice {
            poset,
            meet,
            join,
            bottom,
            top,
            distributive,
            irreducibles,
        })
    }

    /// Convenience constructor from a covering relation.
    pub fn from_covers(elements: &[&str], covers: &[(&str, &str)]) -> Result<Lattice> {
        Lattice::from_poset(Poset::new(elements, covers, OrderMode::Hasse)?)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> {
        self.poset.elems()
    }

    pub fn name(&self, e: Elem) -> &str {
        self.poset.name(e)
    }

    pub fn elem(&self, name: &str) -> Result<Elem> {
        self.poset.elem(name)
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.poset.leq(x, y)
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x.0 * self.len() + y.0]
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x.0 * self.len() + y.0]
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn is_distributive(&self) -> bool {
        self.distributive
    }

    /// True when the order is total.
    pub fn is_chain(&self) -> bool {
        self.elems()
            .all(|x| self.elems().all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    pub fn down(&self, x: Elem) -> ElemSet {
        self.poset.down(x)
    }

    /// `Â`: the join-irreducible elements together with the bottom.
    pub fn ahat(&self) -> ElemSet {
        self.irreducibles
    }

    /// `↓⁺x = ↓x ∩ Â`. Always contains the bottom element.
    pub fn down_plus(&self, x: Elem) -> ElemSet {
        self.poset.down(x).inter(self.irreducibles)
    }

    /// Supremum of a subset; the empty supremum is the bottom.
    pub fn sup(&self, s: ElemSet) -> Elem {
        s.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Infimum of a subset; the empty infimum is the top.
    pub fn inf(&self, s: ElemSet) -> Elem {
        s.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Relative pseudocomplement `x ⇀ y = ⋁{z | z ∧ x ⊑ y}`.
    ///
    /// Requires the distributivity certificate: without it the residuation
    /// law `z ∧ x ⊑ y ⟺ z ⊑ x ⇀ y` may fail.
    pub fn rel_pseudocomplement(&self, x: Elem, y: Elem) -> Result<Elem> {
        if !self.distributive {
            return Err(Error::NotDistributive);
        }
        Ok(self.rel_pseudocomplement_raw(x, y))
    }

    /// The defining supremum, computed without the distributivity gate.
    /// Exposed for oracles and table construction on trusted inputs.
    pub fn rel_pseudocomplement_raw(&self, x: Elem, y: Elem) -> Elem {
        self.elems()
            .filter(|z| self.leq(self.meet(*z, x), y))
            .fold(self.bottom, |acc, z| self.join(acc, z))
    }

    /// Pseudocomplement `∼x = x ⇀ 0`.
    pub fn pseudocomplement(&self, x: Elem) -> Result<Elem> {
        self.rel_pseudocomplement(x, self.bottom)
    }

    pub fn set_to_names(&self, s: ElemSet) -> Vec<String> {
        self.poset.set_to_names(s)
    }

    pub fn format_set(&self, s: ElemSet) -> String {
        format!("{{{}}}", self.set_to_names(s).join(","))
    }

    /// DOT rendering of the Hasse diagram, bottom at the lowest rank.
    pub fn dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n");
        for e in self.elems() {
            out.push_str(&format!("  \"{}\";\n", self.name(e)));
        }
        for (x, y) in self.poset.covers() {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                self.name(x),
                self.name(y)
            ));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lattice({} elements, 0={}, 1={}, distributive={})",
            self.len(),
            self.name(self.bottom),
            self.name(self.top),
            self.distributive
        )
    }
}

/// JSON form of a lattice: `{"elements": [...], "order": [[a,b],...],
/// "mode": "hasse"|"full"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub elements: Vec<String>,
    pub order: Vec<(String, String)>,
    #[serde(default = "default_mode")]
    pub mode: OrderMode,
}

fn default_mode() -> OrderMode {
    OrderMode::Hasse
}

impl LatticeSpec {
    pub fn build(&self) -> Result<Lattice> {
        let elements: Vec<&str> = self.elements.iter().map(|s| s.as_str()).collect();
        let pairs: Vec<(&str, &str)> = self
            .order
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        Lattice::from_poset(Poset::new(&elements, &pairs, self.mode)?)
    }

    pub fn of(lattice: &Lattice) -> LatticeSpec {
        LatticeSpec {
            elements: lattice
                .elems()
                .map(|e| lattice.name(e).to_string())
                .collect(),
            order: lattice
                .poset()
                .covers()
                .iter()
                .map(|&(x, y)| (lattice.name(x).to_string(), lattice.name(y).to_string()))
                .collect(),
            mode: OrderMode::Hasse,
        }
    }
}

/// The pentagon N5, the smallest non-distributive lattice. Used by tests and
/// the CLI demo of isomorphism violations.
pub fn pentagon() -> Lattice {
    Lattice::from_covers(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("0", "b"), ("b", "c"), ("a", "1"), ("c", "1")],
    )
    .expect("N5 is a lattice")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_chain() -> Lattice {
        Lattice::from_covers(&["0", "1"], &[("0", "1")]).unwrap()
    }

    /// Belnap's truth order built from its covering relation.
    fn belnap_truth() -> Lattice {
        Lattice::from_covers(
            &["f", "bot", "top", "t"],
            &[("f", "bot"), ("f", "top"), ("bot", "t"), ("top", "t")],
        )
        .unwrap()
    }

    fn set(lat: &Lattice, names: &[&str]) -> ElemSet {
        names.iter().map(|n| lat.elem(n).unwrap()).collect()
    }

    #[test]
    fn two_chain_order() {
        let lat = two_chain();
        let zero = lat.elem("0").unwrap();
        let one = lat.elem("1").unwrap();
        assert!(lat.leq(zero, one));
        assert!(!lat.leq(one, zero));
        assert_eq!(lat.meet(zero, one), zero);
        assert_eq!(lat.bottom(), zero);
        assert_eq!(lat.top(), one);
    }

    #[test]
    fn belnap_truth_poset_from_covers() {
        let lat = belnap_truth();
        let bot = lat.elem("bot").unwrap();
        let top = lat.elem("top").unwrap();
        // bot and top are incomparable; f and t are the extremes
        assert!(!lat.leq(bot, top) && !lat.leq(top, bot));
        assert_eq!(lat.name(lat.bottom()), "f");
        assert_eq!(lat.name(lat.top()), "t");
        assert_eq!(lat.name(lat.meet(top, bot)), "f");
        assert_eq!(lat.name(lat.join(top, bot)), "t");
        assert!(lat.is_distributive());
    }

    #[test]
    fn antisymmetry_violation_is_a_cycle() {
        let err = Poset::new(&["a", "b"], &[("a", "b"), ("b", "a")], OrderMode::Full).unwrap_err();
        assert!(matches!(err, Error::Cycle(..)));
    }

    #[test]
    fn unknown_element_rejected() {
        let err = Poset::new(&["a"], &[("a", "z")], OrderMode::Hasse).unwrap_err();
        assert!(matches!(err, Error::UnknownElement(name) if name == "z"));
    }

    #[test]
    fn pentagon_is_a_nondistributive_lattice() {
        let lat = pentagon();
        assert!(!lat.is_distributive());
        // exhaustive triple oracle, independent of the certificate path
        let mut found = false;
        for x in lat.elems() {
            for y in lat.elems() {
                for z in lat.elems() {
                    let lhs = lat.meet(x, lat.join(y, z));
                    let rhs = lat.join(lat.meet(x, y), lat.meet(x, z));
                    if lhs != rhs {
                        found = true;
                    }
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn join_irreducibles_lifted() {
        let lat = belnap_truth();
        assert_eq!(lat.ahat(), set(&lat, &["f", "bot", "top"]));
        let chain = two_chain();
        assert_eq!(chain.ahat(), set(&chain, &["0", "1"]));
    }

    #[test]
    fn down_plus_examples() {
        let lat = belnap_truth();
        let t = lat.elem("t").unwrap();
        let bot = lat.elem("bot").unwrap();
        assert_eq!(lat.down_plus(t), set(&lat, &["f", "bot", "top"]));
        assert_eq!(lat.down_plus(lat.bottom()), set(&lat, &["f"]));
        assert_eq!(lat.down_plus(bot), set(&lat, &["f", "bot"]));
        for x in lat.elems() {
            assert!(lat.down_plus(x).contains(lat.bottom()), "0-lifting");
        }
    }

    #[test]
    fn sup_inf_examples() {
        let lat = belnap_truth();
        let pair = set(&lat, &["bot", "top"]);
        assert_eq!(lat.name(lat.sup(pair)), "t");
        assert_eq!(lat.name(lat.inf(pair)), "f");
        assert_eq!(lat.sup(ElemSet::EMPTY), lat.bottom());
        assert_eq!(lat.inf(ElemSet::EMPTY), lat.top());
        for x in lat.elems() {
            assert_eq!(lat.sup(lat.down_plus(x)), x, "⋁∘↓⁺ = id");
        }
    }

    /// Brute-force oracle for the relative pseudocomplement.
    fn rel_pc_oracle(lat: &Lattice, x: Elem, y: Elem) -> Elem {
        let mut acc = lat.bottom();
        for z in lat.elems() {
            if lat.leq(lat.meet(z, x), y) {
                acc = lat.join(acc, z);
            }
        }
        acc
    }

    #[test]
    fn relative_pseudocomplement() {
        let chain = two_chain();
        let one = chain.elem("1").unwrap();
        let zero = chain.elem("0").unwrap();
        assert_eq!(chain.rel_pseudocomplement(one, zero).unwrap(), zero);

        let lat = belnap_truth();
        let bot = lat.elem("bot").unwrap();
        let f = lat.elem("f").unwrap();
        let imp = lat.rel_pseudocomplement(bot, f).unwrap();
        assert_eq!(lat.name(imp), "top");
        assert_eq!(imp, rel_pc_oracle(&lat, bot, f));

        for x in lat.elems() {
            assert_eq!(lat.rel_pseudocomplement(x, x).unwrap(), lat.top());
            for y in lat.elems() {
                assert_eq!(
                    lat.rel_pseudocomplement(x, y).unwrap(),
                    rel_pc_oracle(&lat, x, y)
                );
            }
        }
    }

    #[test]
    fn residuation_law() {
        let lat = belnap_truth();
        for x in lat.elems() {
            for y in lat.elems() {
                let imp = lat.rel_pseudocomplement(x, y).unwrap();
                for z in lat.elems() {
                    assert_eq!(lat.leq(lat.meet(z, x), y), lat.leq(z, imp));
                }
            }
        }
    }

    #[test]
    fn pseudocomplement_examples() {
        let chain = two_chain();
        let zero = chain.elem("0").unwrap();
        assert_eq!(chain.pseudocomplement(zero).unwrap(), chain.top());

        let lat = belnap_truth();
        let bot = lat.elem("bot").unwrap();
        let t = lat.elem("t").unwrap();
        assert_eq!(lat.name(lat.pseudocomplement(bot).unwrap()), "top");
        assert_eq!(lat.name(lat.pseudocomplement(t).unwrap()), "f");
    }

    #[test]
    fn pseudocomplement_needs_distributivity() {
        let n5 = pentagon();
        let a = n5.elem("a").unwrap();
        assert!(matches!(
            n5.pseudocomplement(a),
            Err(Error::NotDistributive)
        ));
    }

    #[test]
    fn birkhoff_homomorphism_laws() {
        let lat = belnap_truth();
        for x in lat.elems() {
            for y in lat.elems() {
                assert_eq!(
                    lat.down_plus(lat.meet(x, y)),
                    lat.down_plus(x).inter(lat.down_plus(y))
                );
                assert_eq!(
                    lat.down_plus(lat.join(x, y)),
                    lat.down_plus(x).union(lat.down_plus(y))
                );
            }
        }
    }

    #[test]
    fn lattice_laws_small_carriers() {
        for lat in [two_chain(), belnap_truth(), pentagon()] {
            for x in lat.elems() {
                assert_eq!(lat.meet(x, x), x);
                assert_eq!(lat.join(x, x), x);
                for y in lat.elems() {
                    assert_eq!(lat.meet(x, y), lat.meet(y, x));
                    assert_eq!(lat.join(x, y), lat.join(y, x));
                    assert_eq!(lat.meet(x, lat.join(x, y)), x, "absorption");
                    assert_eq!(lat.join(x, lat.meet(x, y)), x, "absorption");
                    for z in lat.elems() {
                        assert_eq!(
                            lat.meet(x, lat.meet(y, z)),
                            lat.meet(lat.meet(x, y), z),
                            "associativity"
                        );
                        assert_eq!(
                            lat.join(x, lat.join(y, z)),
                            lat.join(lat.join(x, y), z),
                            "associativity"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let spec = LatticeSpec::of(&belnap_truth());
        let text = serde_json::to_string(&spec).unwrap();
        let back: LatticeSpec = serde_json::from_str(&text).unwrap();
        let lat = back.build().unwrap();
        assert_eq!(lat.len(), 4);
        assert_eq!(lat.name(lat.bottom()), "f");
    }

    #[test]
    fn dot_export_mentions_covers() {
        let dot = belnap_truth().dot();
        assert!(dot.contains("\"f\" -> \"bot\""));
        assert!(!dot.contains("\"f\" -> \"t\""), "only covering edges");
    }

    #[test]
    fn subsets_enumeration() {
        let s = ElemSet::full(3);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], ElemSet::EMPTY);
        assert_eq!(all[7], s);
    }
}
