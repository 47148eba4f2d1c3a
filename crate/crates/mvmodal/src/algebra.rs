//! Many-valued algebras: a lattice enriched with named unary and binary
//! operator tables.
//!
//! Operator classes (monotone, additive, normal, multiplicative, modal
//! negation, involution, selfadjoint) are decided by exhaustive checks when
//! an operator is attached and cached. The `additive` flag covers the empty
//! join as well, i.e. it requires `o(0) = 0` on top of
//! `o(x∨y) = o(x)∨o(y)`; dually `multiplicative` requires `o(1) = 1`.
//!
//! Unary operators may carry modal designations (diamond, box, negation)
//! which drive frame derivation and axiom-schema emission. The structural
//! slots [`IMP_OP`] (relative pseudocomplement, written `->` in formulas)
//! and [`NOT_OP`] (pseudocomplement, written `~`) carry no designation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice, LatticeSpec};

/// Binary-op slot used by the `->` connective.
pub const IMP_OP: &str = "imp";
/// Unary-op slot used by the `~` connective.
pub const NOT_OP: &str = "not";

/// Exhaustively verified properties of a unary operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct OperatorClass {
    pub monotone: bool,
    pub antitone: bool,
    /// Preserves all finite joins, the empty one included: `o(x∨y) =
    /// o(x)∨o(y)` and `o(0) = 0`.
    pub additive: bool,
    /// `o(0) = 0`.
    pub normal: bool,
    /// Preserves all finite meets, the empty one included.
    pub multiplicative: bool,
    /// Antitone join-to-meet map with `o(0) = 1`.
    pub modal_negation: bool,
    /// `o(o(x)) = x`.
    pub involution: bool,
    /// Conjugate to itself: `o(x) ∧ y = 0 ⟺ x ∧ o(y) = 0`.
    pub selfadjoint: bool,
}

/// Modal designations of a unary operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ModalRole {
    pub diamond: bool,
    #[serde(rename = "box")]
    pub boxed: bool,
    pub negation: bool,
}

impl ModalRole {
    pub const NONE: ModalRole = ModalRole {
        diamond: false,
        boxed: false,
        negation: false,
    };
    pub const DIAMOND: ModalRole = ModalRole {
        diamond: true,
        boxed: false,
        negation: false,
    };
    pub const DIAMOND_BOX: ModalRole = ModalRole {
        diamond: true,
        boxed: true,
        negation: false,
    };
    pub const BOX: ModalRole = ModalRole {
        diamond: false,
        boxed: true,
        negation: false,
    };
    pub const NEGATION: ModalRole = ModalRole {
        diamond: false,
        boxed: false,
        negation: true,
    };

    pub fn is_none(&self) -> bool {
        !(self.diamond || self.boxed || self.negation)
    }
}

#[derive(Debug, Clone)]
pub struct UnaryOp {
    pub table: Vec<Elem>,
    pub class: OperatorClass,
    pub role: ModalRole,
}

#[derive(Debug, Clone)]
pub struct BinaryOp {
    /// Row-major `n × n` table.
    pub table: Vec<Elem>,
}

/// A lattice together with named operator tables.
#[derive(Debug, Clone)]
pub struct Algebra {
    lattice: Lattice,
    unary: BTreeMap<String, UnaryOp>,
    binary: BTreeMap<String, BinaryOp>,
}

impl Algebra {
    pub fn new(lattice: Lattice) -> Algebra {
        Algebra {
            lattice,
            unary: BTreeMap::new(),
            binary: BTreeMap::new(),
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Classifies a unary table by exhaustive pair/element checks.
    pub fn classify_table(lattice: &Lattice, table: &[Elem]) -> OperatorClass {
        let bottom = lattice.bottom();
        let top = lattice.top();
        let app = |x: Elem| table[x.0];
        let mut c = OperatorClass {
            monotone: true,
            antitone: true,
            additive: app(bottom) == bottom,
            normal: app(bottom) == bottom,
            multiplicative: app(top) == top,
            modal_negation: app(bottom) == top,
            involution: true,
            selfadjoint: true,
        };
        for x in lattice.elems() {
            if app(app(x)) != x {
                c.involution = false;
            }
            for y in lattice.elems() {
                if lattice.leq(x, y) {
                    if !lattice.leq(app(x), app(y)) {
                        c.monotone = false;
                    }
                    if !lattice.leq(app(y), app(x)) {
                        c.antitone = false;
                    }
                }
                if app(lattice.join(x, y)) != lattice.join(app(x), app(y)) {
                    c.additive = false;
                }
                if app(lattice.meet(x, y)) != lattice.meet(app(x), app(y)) {
                    c.multiplicative = false;
                }
                if app(lattice.join(x, y)) != lattice.meet(app(x), app(y)) {
                    c.modal_negation = false;
                }
                let lhs = lattice.meet(app(x), y) == bottom;
                let rhs = lattice.meet(x, app(y)) == bottom;
                if lhs != rhs {
                    c.selfadjoint = false;
                }
            }
        }
        c
    }

    fn check_unary_table(&self, name: &str, table: &BTreeMap<String, String>) -> Result<Vec<Elem>> {
        let mut out = vec![self.lattice.bottom(); self.lattice.len()];
        let mut seen = vec![false; self.lattice.len()];
        for (from, to) in table {
            let x = self.lattice.elem(from)?;
            let y = self.lattice.elem(to)?;
            out[x.0] = y;
            seen[x.0] = true;
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::PartialTable {
                op: name.to_string(),
                elem: self.lattice.name(Elem(i)).to_string(),
            });
        }
        Ok(out)
    }

    /// Registers a unary operator; its class is computed eagerly.
    pub fn attach_unary(&mut self, name: &str, table: Vec<Elem>, role: ModalRole) -> Result<()> {
        if self.unary.contains_key(name) {
            return Err(Error::DuplicateOperator(name.to_string()));
        }
        if table.len() != self.lattice.len() {
            return Err(Error::PartialTable {
                op: name.to_string(),
                elem: self
                    .lattice
                    .name(Elem(table.len().min(self.lattice.len() - 1)))
                    .to_string(),
            });
        }
        for e in &table {
            if e.0 >= self.lattice.len() {
                return Err(Error::UnknownElement(format!("#{}", e.0)));
            }
        }
        let class = Self::classify_table(&self.lattice, &table);
        self.unary
            .insert(name.to_string(), UnaryOp { table, class, role });
        Ok(())
    }

    /// Registers a unary operator from a name-to-name map.
    pub fn attach_unary_named(
        &mut self,
        name: &str,
        table: &BTreeMap<String, String>,
        role: ModalRole,
    ) -> Result<()> {
        let table = self.check_unary_table(name, table)?;
        self.attach_unary(name, table, role)
    }

    /// Registers a binary operator from a row-major table.
    pub fn attach_binary(&mut self, name: &str, table: Vec<Elem>) -> Result<()> {
        if self.binary.contains_key(name) {
            return Err(Error::DuplicateOperator(name.to_string()));
        }
        let n = self.lattice.len();
        if table.len() != n * n {
            return Err(Error::PartialTable {
                op: name.to_string(),
                elem: "(incomplete row-major table)".to_string(),
            });
        }
        for e in &table {
            if e.0 >= n {
                return Err(Error::UnknownElement(format!("#{}", e.0)));
            }
        }
        self.binary.insert(name.to_string(), BinaryOp { table });
        Ok(())
    }

    pub fn unary_names(&self) -> impl Iterator<Item = &str> {
        self.unary.keys().map(|s| s.as_str())
    }

    pub fn binary_names(&self) -> impl Iterator<Item = &str> {
        self.binary.keys().map(|s| s.as_str())
    }

    pub fn unary(&self, name: &str) -> Result<&UnaryOp> {
        self.unary
            .get(name)
            .ok_or_else(|| Error::UnknownOperator(name.to_string()))
    }

    pub fn binary(&self, name: &str) -> Result<&BinaryOp> {
        self.binary
            .get(name)
            .ok_or_else(|| Error::UnknownOperator(name.to_string()))
    }

    pub fn has_unary(&self, name: &str) -> bool {
        self.unary.contains_key(name)
    }

    pub fn has_binary(&self, name: &str) -> bool {
        self.binary.contains_key(name)
    }

    pub fn apply_unary(&self, name: &str, x: Elem) -> Result<Elem> {
        Ok(self.unary(name)?.table[x.0])
    }

    pub fn apply_binary(&self, name: &str, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.binary(name)?.table[x.0 * self.lattice.len() + y.0])
    }

    /// The cached class of a registered operator.
    pub fn classify(&self, name: &str) -> Result<OperatorClass> {
        Ok(self.unary(name)?.class)
    }

    pub fn role(&self, name: &str) -> ModalRole {
        self.unary
            .get(name)
            .map(|op| op.role)
            .unwrap_or(ModalRole::NONE)
    }

    /// Operators designated as diamonds (existential modalities).
    pub fn diamond_ops(&self) -> impl Iterator<Item = &str> {
        self.unary
            .iter()
            .filter(|(_, op)| op.role.diamond)
            .map(|(n, _)| n.as_str())
    }

    /// Operators designated as boxes (universal modalities).
    pub fn box_ops(&self) -> impl Iterator<Item = &str> {
        self.unary
            .iter()
            .filter(|(_, op)| op.role.boxed)
            .map(|(n, _)| n.as_str())
    }

    /// Operators designated as modal negations.
    pub fn negation_ops(&self) -> impl Iterator<Item = &str> {
        self.unary
            .iter()
            .filter(|(_, op)| op.role.negation)
            .map(|(n, _)| n.as_str())
    }

    /// A name usable as a modality in formulas (`<n>`, `[n]`, `!n`).
    pub fn is_modality(&self, name: &str) -> bool {
        self.unary.contains_key(name)
    }
}

// ---------------------------------------------------------------------------
// builtins
// ---------------------------------------------------------------------------

fn attach_heyting_ops(alg: &mut Algebra) -> Result<()> {
    let lat = alg.lattice().clone();
    let n = lat.len();
    let mut imp = Vec::with_capacity(n * n);
    for x in lat.elems() {
        for y in lat.elems() {
            imp.push(lat.rel_pseudocomplement(x, y)?);
        }
    }
    alg.attach_binary(IMP_OP, imp)?;
    let not: Vec<Elem> = lat
        .elems()
        .map(|x| lat.rel_pseudocomplement_raw(x, lat.bottom()))
        .collect();
    alg.attach_unary(NOT_OP, not, ModalRole::NONE)?;
    Ok(())
}

/// The two-element Boolean algebra with `∧` (lattice) and `∼`.
pub fn boolean2() -> Algebra {
    let lat = Lattice::from_covers(&["0", "1"], &[("0", "1")]).expect("2-chain");
    let mut alg = Algebra::new(lat);
    attach_heyting_ops(&mut alg).expect("2-chain is distributive");
    alg
}

/// The `n`-element chain `0 ⊑ 1 ⊑ … ⊑ n-1` with `∧`, `∨`, `⇀`, `∼`.
pub fn chain(n: usize) -> Result<Algebra> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "chain needs at least 2 elements, got {n}"
        )));
    }
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let covers: Vec<(&str, &str)> = (0..n - 1).map(|i| (refs[i], refs[i + 1])).collect();
    let lat = Lattice::from_covers(&refs, &covers)?;
    let mut alg = Algebra::new(lat);
    attach_heyting_ops(&mut alg)?;
    Ok(alg)
}

/// A finite chain in which each split point `x` is replaced by the diamond
/// `{x_lo, x_bot, x_top, x_hi}` with `x_bot ⋈ x_top`, modelling discrete
/// unknown/inconsistent refinements of a totally ordered value scale. The
/// result stays distributive.
pub fn po_fuzzy(n: usize, split_points: &[usize]) -> Result<Algebra> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "po_fuzzy needs at least 2 chain positions, got {n}"
        )));
    }
    let mut splits = split_points.to_vec();
    splits.sort_unstable();
    splits.dedup();
    for &p in &splits {
        if p == 0 || p >= n - 1 {
            return Err(Error::BadSplitPoint(p));
        }
    }
    let mut names: Vec<String> = Vec::new();
    let mut covers: Vec<(String, String)> = Vec::new();
    let mut prev_top: Option<String> = None;
    for k in 0..n {
        let (block_bottom, block_top) = if splits.contains(&k) {
            let lo = format!("{k}_lo");
            let bot = format!("{k}_bot");
            let top = format!("{k}_top");
            let hi = format!("{k}_hi");
            covers.push((lo.clone(), bot.clone()));
            covers.push((lo.clone(), top.clone()));
            covers.push((bot.clone(), hi.clone()));
            covers.push((top.clone(), hi.clone()));
            names.extend([lo.clone(), bot, top, hi.clone()]);
            (lo, hi)
        } else {
            let v = k.to_string();
            names.push(v.clone());
            (v.clone(), v)
        };
        if let Some(pt) = prev_top {
            covers.push((pt, block_bottom));
        }
        prev_top = Some(block_top);
    }
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let cover_refs: Vec<(&str, &str)> = covers
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    let lat = Lattice::from_covers(&name_refs, &cover_refs)?;
    let mut alg = Algebra::new(lat);
    attach_heyting_ops(&mut alg)?;
    Ok(alg)
}

/// Looks up a builtin algebra by CLI name: `bool2`, `belnap-t`, `belnap-k`,
/// `chain:n`, `pofuzzy:n:p1,p2,...`.
pub fn builtin(name: &str) -> Result<Algebra> {
    if name == "bool2" {
        return Ok(boolean2());
    }
    if name == "belnap-t" {
        return Ok(crate::bilattice::belnap().truth_algebra());
    }
    if name == "belnap-k" {
        return Ok(crate::bilattice::belnap().knowledge_algebra());
    }
    if let Some(rest) = name.strip_prefix("chain:") {
        let n: usize = rest
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad chain size `{rest}`")))?;
        return chain(n);
    }
    if let Some(rest) = name.strip_prefix("pofuzzy:") {
        let mut parts = rest.splitn(2, ':');
        let n: usize = parts
            .next()
            .unwrap_or("")
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad pofuzzy size in `{rest}`")))?;
        let splits: Vec<usize> = match parts.next() {
            None | Some("") => Vec::new(),
            Some(list) => list
                .split(',')
                .map(|p| {
                    p.parse()
                        .map_err(|_| Error::InvalidParameter(format!("bad split point `{p}`")))
                })
                .collect::<Result<_>>()?,
        };
        return po_fuzzy(n, &splits);
    }
    Err(Error::InvalidParameter(format!(
        "unknown builtin algebra `{name}`"
    )))
}

pub const BUILTIN_NAMES: &[&str] = &[
    "bool2",
    "belnap-t",
    "belnap-k",
    "chain:n",
    "pofuzzy:n:p,...",
];

// ---------------------------------------------------------------------------
// JSON loading
// ---------------------------------------------------------------------------

/// JSON form of an algebra. Extends the lattice schema with operator tables:
/// `"unary": {name: {elem: image, ...}}`, `"binary": {name: [[...], ...]}`
/// (row-major over the element order), and optional modal designations
/// `"modal": {name: ["diamond", "box", "negation"...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraSpec {
    #[serde(flatten)]
    pub lattice: LatticeSpec,
    #[serde(default)]
    pub unary: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    pub binary: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default)]
    pub modal: BTreeMap<String, Vec<String>>,
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<Algebra> {
        let lat = self.lattice.build()?;
        let mut alg = Algebra::new(lat);
        for (name, table) in &self.unary {
            let role = match self.modal.get(name) {
                None => ModalRole::NONE,
                Some(tags) => {
                    let mut role = ModalRole::NONE;
                    for tag in tags {
                        match tag.as_str() {
                            "diamond" => role.diamond = true,
                            "box" => role.boxed = true,
                            "negation" => role.negation = true,
                            other => {
                                return Err(Error::InvalidParameter(format!(
                                    "unknown modal designation `{other}`"
                                )))
                            }
                        }
                    }
                    role
                }
            };
            alg.attach_unary_named(name, table, role)?;
        }
        for (name, rows) in &self.binary {
            let n = alg.lattice().len();
            if rows.len() != n {
                return Err(Error::PartialTable {
                    op: name.clone(),
                    elem: format!("({} rows, expected {n})", rows.len()),
                });
            }
            let mut table = Vec::with_capacity(n * n);
            for row in rows {
                if row.len() != n {
                    return Err(Error::PartialTable {
                        op: name.clone(),
                        elem: format!("(row of {} entries, expected {n})", row.len()),
                    });
                }
                for cell in row {
                    table.push(alg.lattice().elem(cell)?);
                }
            }
            alg.attach_binary(name, table)?;
        }
        Ok(alg)
    }

    pub fn of(alg: &Algebra) -> AlgebraSpec {
        let lat = alg.lattice();
        let mut unary = BTreeMap::new();
        let mut modal = BTreeMap::new();
        for name in alg.unary_names() {
            let op = alg.unary(name).unwrap();
            let table: BTreeMap<String, String> = lat
                .elems()
                .map(|e| (lat.name(e).to_string(), lat.name(op.table[e.0]).to_string()))
                .collect();
            unary.insert(name.to_string(), table);
            let mut tags = Vec::new();
            if op.role.diamond {
                tags.push("diamond".to_string());
            }
            if op.role.boxed {
                tags.push("box".to_string());
            }
            if op.role.negation {
                tags.push("negation".to_string());
            }
            if !tags.is_empty() {
                modal.insert(name.to_string(), tags);
            }
        }
        let mut binary = BTreeMap::new();
        for name in alg.binary_names() {
            let op = alg.binary(name).unwrap();
            let rows: Vec<Vec<String>> = lat
                .elems()
                .map(|x| {
                    lat.elems()
                        .map(|y| lat.name(op.table[x.0 * lat.len() + y.0]).to_string())
                        .collect()
                })
                .collect();
            binary.insert(name.to_string(), rows);
        }
        AlgebraSpec {
            lattice: LatticeSpec::of(lat),
            unary,
            binary,
            modal,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_classifies_cleanly() {
        let alg = boolean2();
        let lat = alg.lattice().clone();
        let mut alg2 = Algebra::new(lat);
        let idt: Vec<Elem> = alg2.lattice().elems().collect();
        alg2.attach_unary("id", idt, ModalRole::NONE).unwrap();
        let c = alg2.classify("id").unwrap();
        assert!(c.monotone && c.additive && c.normal && c.multiplicative);
        assert!(c.involution && c.selfadjoint);
        assert!(!c.modal_negation);
    }

    #[test]
    fn constant_top_is_not_additive() {
        let alg = boolean2();
        let mut alg2 = Algebra::new(alg.lattice().clone());
        let top = alg2.lattice().top();
        let table = vec![top; alg2.lattice().len()];
        alg2.attach_unary("one", table, ModalRole::NONE).unwrap();
        let c = alg2.classify("one").unwrap();
        // o(0) = 1 ≠ 0: the empty join is not preserved
        assert!(!c.additive);
        assert!(!c.normal);
        assert!(c.monotone);
        assert!(c.multiplicative);
    }

    #[test]
    fn partial_table_rejected() {
        let mut alg = Algebra::new(boolean2().lattice().clone());
        let mut table = BTreeMap::new();
        table.insert("0".to_string(), "1".to_string());
        let err = alg
            .attach_unary_named("half", &table, ModalRole::NONE)
            .unwrap_err();
        assert!(matches!(err, Error::PartialTable { .. }));
    }

    #[test]
    fn boolean2_pseudocomplement() {
        let alg = boolean2();
        let zero = alg.lattice().elem("0").unwrap();
        let one = alg.lattice().elem("1").unwrap();
        assert_eq!(alg.apply_unary(NOT_OP, zero).unwrap(), one);
        assert_eq!(alg.apply_unary(NOT_OP, one).unwrap(), zero);
        // ∼ on a Boolean algebra is an antitone involution
        let c = alg.classify(NOT_OP).unwrap();
        assert!(c.antitone && c.involution && c.modal_negation);
    }

    #[test]
    fn chain_has_heyting_ops() {
        let alg = chain(4).unwrap();
        let lat = alg.lattice();
        let two = lat.elem("2").unwrap();
        let one = lat.elem("1").unwrap();
        // 2 ⇀ 1 on a chain: everything ⊑ 1 except elements above 2 map in
        assert_eq!(alg.apply_binary(IMP_OP, two, one).unwrap(), one);
        assert_eq!(alg.apply_binary(IMP_OP, one, two).unwrap(), lat.top());
        assert_eq!(alg.apply_unary(NOT_OP, lat.bottom()).unwrap(), lat.top());
    }

    #[test]
    fn po_fuzzy_single_split() {
        let alg = po_fuzzy(5, &[2]).unwrap();
        let lat = alg.lattice();
        assert!(lat.is_distributive());
        let bot2 = lat.elem("2_bot").unwrap();
        let top2 = lat.elem("2_top").unwrap();
        assert!(!lat.leq(bot2, top2) && !lat.leq(top2, bot2));
        assert_eq!(lat.len(), 4 + 4);
    }

    #[test]
    fn po_fuzzy_split_families_are_ordered() {
        let alg = po_fuzzy(5, &[1, 3]).unwrap();
        let lat = alg.lattice();
        let b1 = lat.elem("1_bot").unwrap();
        let b3 = lat.elem("3_bot").unwrap();
        let t1 = lat.elem("1_top").unwrap();
        let t3 = lat.elem("3_top").unwrap();
        assert!(lat.leq(b1, b3));
        assert!(lat.leq(t1, t3));
        assert!(lat.is_distributive());
    }

    #[test]
    fn po_fuzzy_rejects_endpoint_split() {
        assert!(matches!(po_fuzzy(5, &[0]), Err(Error::BadSplitPoint(0))));
        assert!(matches!(po_fuzzy(5, &[4]), Err(Error::BadSplitPoint(4))));
    }

    #[test]
    fn additive_implies_monotone_metatheorem() {
        // every registered operator of every builtin satisfies the implication
        for name in ["bool2", "chain:5", "pofuzzy:5:2", "belnap-t", "belnap-k"] {
            let alg = builtin(name).unwrap();
            for op in alg.unary_names() {
                let c = alg.classify(op).unwrap();
                if c.additive {
                    assert!(c.monotone, "{name}/{op}: additive must imply monotone");
                }
                if c.modal_negation {
                    assert!(c.antitone, "{name}/{op}: modal negation must be antitone");
                }
            }
        }
    }

    #[test]
    fn builtin_truth_lattices_distributive() {
        for name in ["bool2", "chain:3", "pofuzzy:5:2", "belnap-t", "belnap-k"] {
            assert!(builtin(name).unwrap().lattice().is_distributive(), "{name}");
        }
    }

    #[test]
    fn algebra_spec_round_trip() {
        let alg = builtin("belnap-t").unwrap();
        let spec = AlgebraSpec::of(&alg);
        let text = serde_json::to_string_pretty(&spec).unwrap();
        let back: AlgebraSpec = serde_json::from_str(&text).unwrap();
        let alg2 = back.build().unwrap();
        assert_eq!(alg2.lattice().len(), 4);
        for op in alg.unary_names() {
            assert_eq!(
                alg.classify(op).unwrap(),
                alg2.classify(op).unwrap(),
                "class survives the round trip for {op}"
            );
            assert_eq!(alg.role(op), alg2.role(op));
        }
    }
}
