//! Autoreferential Kripke semantics: the possible worlds are the lifted
//! join-irreducibles `Â` of the algebra's own carrier.
//!
//! Frame derivation turns every diamond-designated additive normal operator
//! `o` into an accessibility relation `R_o = {(x,y) | y ∈ Â, x ∈ ↓⁺o(y)}`
//! and every negation-designated antitone additive operator `õ` into an
//! incompatibility relation `R̃_o = {(x,y) | z ∈ A, y ∈ ↓⁺z, x ∈ ↓⁺õ(z)}`.
//! Forcing follows the intuitionistic reading over the inverted order; the
//! world `0` forces every formula (the trivial world). The central
//! verified identity is `‖φ‖ = ↓⁺ Ī(φ)`: the truth set of a formula is the
//! image of its algebraic value under the representation isomorphism.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::bilattice::{belnap, Bilattice};
use crate::error::{Error, Result};
use crate::eval::{evaluate, Valuation};
use crate::lattice::{Elem, ElemSet, Lattice};
use crate::representation::Report;
use crate::syntax::Formula;

/// A binary relation over worlds, stored per-world as successor masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    succ: BTreeMap<usize, ElemSet>,
}

impl Relation {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Elem, Elem)>) -> Relation {
        let mut succ: BTreeMap<usize, ElemSet> = BTreeMap::new();
        for (x, y) in pairs {
            succ.entry(x.0).or_default().insert(y);
        }
        Relation { succ }
    }

    pub fn contains(&self, x: Elem, y: Elem) -> bool {
        self.succ.get(&x.0).is_some_and(|s| s.contains(y))
    }

    pub fn successors(&self, x: Elem) -> ElemSet {
        self.succ.get(&x.0).copied().unwrap_or(ElemSet::EMPTY)
    }

    /// All pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for (&x, set) in &self.succ {
            for y in set.iter() {
                out.push((Elem(x), y));
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.succ.values().map(|s| s.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn render(&self, lat: &Lattice) -> String {
        let parts: Vec<String> = self
            .pairs()
            .iter()
            .map(|&(x, y)| format!("({},{})", lat.name(x), lat.name(y)))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// A frame: the worlds `1_K = Â`, the lattice order restricted to them, an
/// accessibility relation per diamond modality and an incompatibility
/// relation per modal negation.
#[derive(Debug, Clone)]
pub struct KripkeFrame {
    worlds: ElemSet,
    access: BTreeMap<String, Relation>,
    incompat: BTreeMap<String, Relation>,
}

impl KripkeFrame {
    pub fn worlds(&self) -> ElemSet {
        self.worlds
    }

    pub fn access(&self, op: &str) -> Result<&Relation> {
        self.access
            .get(op)
            .ok_or_else(|| Error::MissingRelation(op.to_string()))
    }

    pub fn incompat(&self, op: &str) -> Result<&Relation> {
        self.incompat
            .get(op)
            .ok_or_else(|| Error::MissingRelation(op.to_string()))
    }

    pub fn access_names(&self) -> impl Iterator<Item = &str> {
        self.access.keys().map(|s| s.as_str())
    }

    pub fn incompat_names(&self) -> impl Iterator<Item = &str> {
        self.incompat.keys().map(|s| s.as_str())
    }

    /// DOT rendering: worlds as nodes (the trivial world double-circled),
    /// order covers dashed, one labeled edge style per relation.
    pub fn dot(&self, lat: &Lattice) -> String {
        const COLORS: &[&str] = &["blue", "red", "darkgreen", "orange", "purple", "brown"];
        let mut out = String::from("digraph frame {\n  rankdir=BT;\n");
        for w in self.worlds.iter() {
            let shape = if w == lat.bottom() {
                "doublecircle"
            } else {
                "circle"
            };
            out.push_str(&format!("  \"{}\" [shape={shape}];\n", lat.name(w)));
        }
        for (x, y) in lat.poset().covers() {
            if self.worlds.contains(x) && self.worlds.contains(y) {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\" [style=dashed, arrowhead=none];\n",
                    lat.name(x),
                    lat.name(y)
                ));
            }
        }
        let mut color = 0;
        for (name, rel) in self.access.iter() {
            let c = COLORS[color % COLORS.len()];
            color += 1;
            for (x, y) in rel.pairs() {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\" [color={c}, label=\"R_{name}\"];\n",
                    lat.name(x),
                    lat.name(y)
                ));
            }
        }
        for (name, rel) in self.incompat.iter() {
            let c = COLORS[color % COLORS.len()];
            color += 1;
            for (x, y) in rel.pairs() {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\" [color={c}, style=dotted, label=\"Rn_{name}\"];\n",
                    lat.name(x),
                    lat.name(y)
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Accessibility relation of a single additive normal operator.
pub fn accessibility_relation(lat: &Lattice, table: &[Elem]) -> Relation {
    let ahat = lat.ahat();
    let mut pairs = Vec::new();
    for y in ahat.iter() {
        for x in lat.down_plus(table[y.0]).iter() {
            pairs.push((x, y));
        }
    }
    Relation::from_pairs(pairs)
}

/// Incompatibility relation of a single antitone additive operator; note
/// that `z` ranges over the whole carrier, not just the worlds.
pub fn incompatibility_relation(lat: &Lattice, table: &[Elem]) -> Relation {
    let mut pairs = Vec::new();
    for z in lat.elems() {
        for y in lat.down_plus(z).iter() {
            for x in lat.down_plus(table[z.0]).iter() {
                pairs.push((x, y));
            }
        }
    }
    Relation::from_pairs(pairs)
}

fn require_diamond_class(alg: &Algebra, op: &str) -> Result<()> {
    let c = alg.classify(op)?;
    if !(c.additive && c.normal) {
        return Err(Error::OperatorClassViolation {
            op: op.to_string(),
            law: "diamond modalities must be additive and normal".into(),
        });
    }
    Ok(())
}

fn require_negation_class(alg: &Algebra, op: &str) -> Result<()> {
    let c = alg.classify(op)?;
    if !(c.modal_negation && c.antitone) {
        return Err(Error::OperatorClassViolation {
            op: op.to_string(),
            law: "modal negations must be antitone with o(x∨y) = o(x)∧o(y) and o(0) = 1".into(),
        });
    }
    Ok(())
}

/// Derives the frame of an algebra: one accessibility relation per
/// diamond-designated operator, one incompatibility relation per
/// negation-designated operator. Class violations are rejected early.
pub fn derive_frame(alg: &Algebra) -> Result<KripkeFrame> {
    if !alg.lattice().is_distributive() {
        return Err(Error::NotDistributive);
    }
    let lat = alg.lattice();
    let mut access = BTreeMap::new();
    for op in alg.diamond_ops() {
        require_diamond_class(alg, op)?;
        let table = &alg.unary(op)?.table;
        access.insert(op.to_string(), accessibility_relation(lat, table));
    }
    let mut incompat = BTreeMap::new();
    for op in alg.negation_ops() {
        require_negation_class(alg, op)?;
        let table = &alg.unary(op)?.table;
        incompat.insert(op.to_string(), incompatibility_relation(lat, table));
    }
    Ok(KripkeFrame {
        worlds: lat.ahat(),
        access,
        incompat,
    })
}

/// A relation derived for a named operator regardless of designation.
pub enum DerivedRelation {
    Access(Relation),
    Incompat(Relation),
}

/// Infers the relation kind from the operator class: additive+normal gives
/// an accessibility relation, a modal negation an incompatibility relation.
/// Used by the CLI when relations are requested by operator name.
pub fn derive_relation_for(alg: &Algebra, op: &str) -> Result<DerivedRelation> {
    let c = alg.classify(op)?;
    let table = &alg.unary(op)?.table;
    if c.additive && c.normal {
        Ok(DerivedRelation::Access(accessibility_relation(
            alg.lattice(),
            table,
        )))
    } else if c.modal_negation {
        Ok(DerivedRelation::Incompat(incompatibility_relation(
            alg.lattice(),
            table,
        )))
    } else {
        Err(Error::OperatorClassViolation {
            op: op.to_string(),
            law: "neither additive+normal nor a modal negation".into(),
        })
    }
}

/// Accessibility relation for a merely monotone operator on a chain, where
/// `↓⁺ = ↓`: `R = {(o(x), x) | x ∈ A} ∪ {(x, 0) | x ∉ im(o)}`.
///
/// The identity `‖◇φ‖ = ↓ Ī(◇φ)` holds with this relation whenever `o` is
/// surjective; the preimage-less worlds added in the second component force
/// every diamond through the trivial world, so non-surjective tables can
/// overshoot the identity. Tests pin both behaviours.
pub fn derive_chain_frame(alg: &Algebra, op: &str) -> Result<Relation> {
    let lat = alg.lattice();
    if !lat.is_chain() {
        return Err(Error::NotAChain);
    }
    let class = alg.classify(op)?;
    if !class.monotone {
        return Err(Error::NotMonotone(op.to_string()));
    }
    let table = &alg.unary(op)?.table;
    let mut pairs: Vec<(Elem, Elem)> = lat.elems().map(|x| (table[x.0], x)).collect();
    let image: ElemSet = lat.elems().map(|x| table[x.0]).collect();
    for x in lat.elems() {
        if !image.contains(x) {
            pairs.push((x, lat.bottom()));
        }
    }
    Ok(Relation::from_pairs(pairs))
}

/// Birkhoff polarity of a relation: the antitone maps
/// `λU = {x | ∀u ∈ U. (u,x) ∈ R}` and `ρV = {x | ∀v ∈ V. (x,v) ∈ R}`
/// forming the Galois connection `λU ⊇ V ⟺ U ⊆ ρV`.
pub struct Polarity<'a> {
    relation: &'a Relation,
    worlds: ElemSet,
}

impl<'a> Polarity<'a> {
    pub fn new(relation: &'a Relation, worlds: ElemSet) -> Polarity<'a> {
        Polarity { relation, worlds }
    }

    pub fn lambda(&self, u: ElemSet) -> ElemSet {
        ElemSet::from_iter(
            self.worlds
                .iter()
                .filter(|x| u.iter().all(|v| self.relation.contains(v, *x))),
        )
    }

    pub fn rho(&self, v: ElemSet) -> ElemSet {
        ElemSet::from_iter(
            self.worlds
                .iter()
                .filter(|x| v.iter().all(|w| self.relation.contains(*x, w))),
        )
    }

    /// Exhaustive check of `λU ⊇ V ⟺ U ⊆ ρV` over all subset pairs.
    pub fn galois_holds(&self) -> bool {
        for u in self.worlds.subsets() {
            let lu = self.lambda(u);
            for v in self.worlds.subsets() {
                if v.is_subset(lu) != u.is_subset(self.rho(v)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Which reading of the implication clause to use. `Hereditary` quantifies
/// the premise at the lower world (`∀y ⊑ x: y ⊩ φ ⟹ y ⊩ ψ`), which is the
/// reading under which `‖φ → ψ‖ = ↓⁺ Ī(φ → ψ)`; `Literal` keeps the premise
/// at the evaluation world and is exposed for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ImpliesSemantics {
    #[default]
    Hereditary,
    Literal,
}

/// A frame together with the canonical meaning map `I_K(p) = ↓⁺ I(p)`.
pub struct KripkeModel<'a> {
    algebra: &'a Algebra,
    frame: &'a KripkeFrame,
    meaning: BTreeMap<String, ElemSet>,
    implies: ImpliesSemantics,
}

impl<'a> KripkeModel<'a> {
    pub fn new(
        algebra: &'a Algebra,
        frame: &'a KripkeFrame,
        valuation: &Valuation,
    ) -> KripkeModel<'a> {
        let lat = algebra.lattice();
        let meaning = valuation
            .iter()
            .map(|(var, x)| (var.to_string(), lat.down_plus(x)))
            .collect();
        KripkeModel {
            algebra,
            frame,
            meaning,
            implies: ImpliesSemantics::default(),
        }
    }

    pub fn with_implies(mut self, semantics: ImpliesSemantics) -> Self {
        self.implies = semantics;
        self
    }

    pub fn frame(&self) -> &KripkeFrame {
        self.frame
    }

    pub fn meaning(&self, var: &str) -> Result<ElemSet> {
        self.meaning
            .get(var)
            .copied()
            .ok_or_else(|| Error::UnboundVariable(var.to_string()))
    }

    /// `‖φ‖ = {x ∈ 1_K | M ⊩_x φ}`, computed bottom-up over the formula.
    pub fn truth_set(&self, formula: &Formula) -> Result<ElemSet> {
        let lat = self.algebra.lattice();
        let worlds = self.frame.worlds;
        Ok(match formula {
            Formula::Var(v) => self.meaning(v)?,
            Formula::Const(c) => {
                let e = lat.elem(c).map_err(|_| Error::UnknownConstant(c.clone()))?;
                lat.down_plus(e)
            }
            Formula::Meet(a, b) => self.truth_set(a)?.inter(self.truth_set(b)?),
            Formula::Join(a, b) => self.truth_set(a)?.union(self.truth_set(b)?),
            Formula::Implies(a, b) => {
                let ta = self.truth_set(a)?;
                let tb = self.truth_set(b)?;
                self.implies_clause(ta, tb, worlds)
            }
            Formula::PseudoNeg(a) => {
                // φ ⇒ 0: only the trivial world satisfies the conclusion
                let ta = self.truth_set(a)?;
                let zero = ElemSet::singleton(lat.bottom());
                self.implies_clause(ta, zero, worlds)
            }
            Formula::Diamond(op, a) => {
                let ta = self.truth_set(a)?;
                let rel = self.frame.access(op)?;
                ElemSet::from_iter(
                    worlds
                        .iter()
                        .filter(|x| !rel.successors(*x).inter(ta).is_empty()),
                )
            }
            Formula::ModalNeg(op, a) => {
                let ta = self.truth_set(a)?;
                let rel = self.frame.incompat(op)?;
                ElemSet::from_iter(worlds.iter().filter(|x| ta.is_subset(rel.successors(*x))))
            }
            Formula::Box(op, a) => {
                // no relational clause is synthesized for boxes: they act
                // through the conjugate table on the canonical carrier
                let ta = self.truth_set(a)?;
                let img = self.algebra.apply_unary(op, lat.sup(ta))?;
                lat.down_plus(img)
            }
            Formula::BinOp(op, a, b) => {
                let ta = self.truth_set(a)?;
                let tb = self.truth_set(b)?;
                let img = self.algebra.apply_binary(op, lat.sup(ta), lat.sup(tb))?;
                lat.down_plus(img)
            }
        })
    }

    fn implies_clause(&self, ta: ElemSet, tb: ElemSet, worlds: ElemSet) -> ElemSet {
        let lat = self.algebra.lattice();
        match self.implies {
            ImpliesSemantics::Hereditary => ElemSet::from_iter(
                worlds
                    .iter()
                    .filter(|x| lat.down_plus(*x).inter(ta).is_subset(tb)),
            ),
            ImpliesSemantics::Literal => ElemSet::from_iter(
                worlds
                    .iter()
                    .filter(|x| !ta.contains(*x) || lat.down_plus(*x).is_subset(tb)),
            ),
        }
    }

    /// `M ⊩_x φ`.
    pub fn forces(&self, world: Elem, formula: &Formula) -> Result<bool> {
        if !self.frame.worlds.contains(world) {
            return Err(Error::UnknownWorld(
                self.algebra.lattice().name(world).to_string(),
            ));
        }
        Ok(self.truth_set(formula)?.contains(world))
    }
}

/// Checks `‖φ‖ = ↓⁺ Ī(φ)` for every given formula under one valuation.
/// Mismatches are reported sorted by formula text.
pub fn verify_representation(
    alg: &Algebra,
    frame: &KripkeFrame,
    valuation: &Valuation,
    formulas: &[Formula],
) -> Result<Report> {
    let lat = alg.lattice();
    let model = KripkeModel::new(alg, frame, valuation);
    let mut entries: Vec<(String, ElemSet, ElemSet)> = Vec::new();
    for f in formulas {
        let ts = model.truth_set(f)?;
        let alg_side = lat.down_plus(evaluate(f, valuation, alg)?);
        entries.push((f.to_string(), ts, alg_side));
    }
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    let mut report = Report::default();
    for (text, ts, alg_side) in entries {
        report.record(
            "truth set equals lifted algebraic value",
            vec![text],
            lat.format_set(ts),
            lat.format_set(alg_side),
            ts == alg_side,
        );
    }
    Ok(report)
}

/// Coverage summary of [`verify_representation_states`].
#[derive(Debug, Clone)]
pub struct StateCoverage {
    /// Distinct semantic states `(Ī(φ), ‖φ‖)` reached within the depth.
    pub states: usize,
    /// Formulas of the signature within the depth bound, counted by a DP
    /// over the state transitions (saturating).
    pub formulas_covered: u128,
    pub report: Report,
}

/// Verifies `‖φ‖ = ↓⁺ Ī(φ)` for **every** formula of bounded depth in the
/// signature `{∧, ∨, →, ∼, designated diamonds/boxes/negations}` over the
/// given variables and the constants, without enumerating the formulas.
///
/// Both `truth_set` and `evaluate` are compositional: a formula's pair
/// `(Ī(φ), ‖φ‖)` is a function of its outer connective and its immediate
/// subformulas' pairs. The reachable pairs are therefore closed off layer
/// by layer, invoking the real `truth_set`/`evaluate` on one representative
/// formula per connective application, and the identity (a predicate on
/// the pair) is checked at every state. Agreement on every state extends
/// to every formula by induction on structure.
pub fn verify_representation_states(
    alg: &Algebra,
    frame: &KripkeFrame,
    valuation: &Valuation,
    vars: &[String],
    depth: usize,
) -> Result<StateCoverage> {
    use crate::algebra::{IMP_OP, NOT_OP};
    type State = (Elem, ElemSet);

    let lat = alg.lattice();
    let model = KripkeModel::new(alg, frame, valuation);
    let mut report = Report::default();
    let mut check_state = |f: &Formula, s: State| {
        report.record(
            "truth set equals lifted algebraic value",
            vec![f.to_string()],
            lat.format_set(s.1),
            lat.format_set(lat.down_plus(s.0)),
            s.1 == lat.down_plus(s.0),
        );
    };
    let state_of = |model: &KripkeModel, f: &Formula| -> Result<State> {
        Ok((evaluate(f, valuation, alg)?, model.truth_set(f)?))
    };

    // unary and binary connective builders of the signature
    let mut unary: Vec<Box<dyn Fn(Formula) -> Formula>> = Vec::new();
    if alg.has_unary(NOT_OP) {
        unary.push(Box::new(Formula::pneg));
    }
    for op in alg.diamond_ops() {
        let op = op.to_string();
        unary.push(Box::new(move |f| Formula::diamond(&op, f)));
    }
    for op in alg.box_ops() {
        let op = op.to_string();
        unary.push(Box::new(move |f| Formula::boxed(&op, f)));
    }
    for op in alg.negation_ops() {
        let op = op.to_string();
        unary.push(Box::new(move |f| Formula::modal_neg(&op, f)));
    }
    let mut binary: Vec<Box<dyn Fn(Formula, Formula) -> Formula>> =
        vec![Box::new(Formula::meet), Box::new(Formula::join)];
    if alg.has_binary(IMP_OP) {
        binary.push(Box::new(Formula::implies));
    }

    // depth-0 layer: variables and constants
    let mut reps: BTreeMap<State, Formula> = BTreeMap::new();
    let mut atom_count: BTreeMap<State, u128> = BTreeMap::new();
    for v in vars {
        let f = Formula::var(v);
        let s = state_of(&model, &f)?;
        *atom_count.entry(s).or_insert(0) += 1;
        reps.entry(s).or_insert_with(|| {
            check_state(&f, s);
            f
        });
    }
    for e in lat.elems() {
        let f = Formula::cst(lat.name(e));
        let s = state_of(&model, &f)?;
        *atom_count.entry(s).or_insert(0) += 1;
        reps.entry(s).or_insert_with(|| {
            check_state(&f, s);
            f
        });
    }

    // close the state space under the connectives, recording transitions
    let mut un_table: BTreeMap<(usize, State), State> = BTreeMap::new();
    let mut bin_table: BTreeMap<(usize, State, State), State> = BTreeMap::new();
    for _ in 0..depth {
        let current: Vec<(State, Formula)> = reps.iter().map(|(s, f)| (*s, f.clone())).collect();
        for (i, mk) in unary.iter().enumerate() {
            for (s, f) in &current {
                if un_table.contains_key(&(i, *s)) {
                    continue;
                }
                let g = mk(f.clone());
                let t = state_of(&model, &g)?;
                un_table.insert((i, *s), t);
                reps.entry(t).or_insert_with(|| {
                    check_state(&g, t);
                    g
                });
            }
        }
        for (i, mk) in binary.iter().enumerate() {
            for (sa, fa) in &current {
                for (sb, fb) in &current {
                    if bin_table.contains_key(&(i, *sa, *sb)) {
                        continue;
                    }
                    let g = mk(fa.clone(), fb.clone());
                    let t = state_of(&model, &g)?;
                    bin_table.insert((i, *sa, *sb), t);
                    reps.entry(t).or_insert_with(|| {
                        check_state(&g, t);
                        g
                    });
                }
            }
        }
    }

    // count the formulas covered: cnt[s] per exact depth, via the recorded
    // transition tables
    let states: Vec<State> = reps.keys().copied().collect();
    let zero: BTreeMap<State, u128> = states.iter().map(|s| (*s, 0u128)).collect();
    let mut exact: Vec<BTreeMap<State, u128>> = vec![zero.clone(); depth + 1];
    for (s, n) in &atom_count {
        exact[0].insert(*s, *n);
    }
    let mut cum: Vec<BTreeMap<State, u128>> = vec![zero.clone(); depth + 1];
    cum[0] = exact[0].clone();
    for d in 1..=depth {
        let mut layer = zero.clone();
        for (i, _) in unary.iter().enumerate() {
            for s in &states {
                let n = exact[d - 1][s];
                if n > 0 {
                    // a state populated at depth d-1 was discovered by
                    // closure round d-1, so round d recorded its image
                    let t = un_table.get(&(i, *s)).expect("transition recorded");
                    let e = layer.get_mut(t).unwrap();
                    *e = e.saturating_add(n);
                }
            }
        }
        for (i, _) in binary.iter().enumerate() {
            for sa in &states {
                for sb in &states {
                    // pairs whose maximum depth is exactly d-1
                    let hi = cum[d - 1][sa].saturating_mul(cum[d - 1][sb]);
                    let lo = if d >= 2 {
                        cum[d - 2][sa].saturating_mul(cum[d - 2][sb])
                    } else {
                        0
                    };
                    let n = hi.saturating_sub(lo);
                    if n > 0 {
                        let t = bin_table.get(&(i, *sa, *sb)).expect("transition recorded");
                        let e = layer.get_mut(t).unwrap();
                        *e = e.saturating_add(n);
                    }
                }
            }
        }
        for s in &states {
            let c = cum[d - 1][s].saturating_add(layer[s]);
            cum[d].insert(*s, c);
        }
        exact[d] = layer;
    }
    let formulas_covered = states
        .iter()
        .fold(0u128, |acc, s| acc.saturating_add(cum[depth][s]));

    Ok(StateCoverage {
        states: reps.len(),
        formulas_covered,
        report,
    })
}

/// `Ī(lhs) ⊑ Ī(rhs) ⟺ ‖lhs‖ ⊆ ‖rhs‖` for one valuation.
pub fn entailment_transfer_holds(
    alg: &Algebra,
    frame: &KripkeFrame,
    valuation: &Valuation,
    lhs: &Formula,
    rhs: &Formula,
) -> Result<bool> {
    let model = KripkeModel::new(alg, frame, valuation);
    let sem = model.truth_set(lhs)?.is_subset(model.truth_set(rhs)?);
    let x = evaluate(lhs, valuation, alg)?;
    let y = evaluate(rhs, valuation, alg)?;
    Ok(sem == alg.lattice().leq(x, y))
}

/// Verifies the commutative diagram tying the two Belnap representations
/// together: `∂` as an isomorphism between the truth- and knowledge-side
/// modal Heyting algebras, its set extension `∂_P` commuting with `↓⁺` on
/// elements and on the images of every operator pair (`∧`↔`⊗`, `⇀`↔`⇁`,
/// conflation↔`¬` as the two selfadjoint diamonds), the selfadjointness of
/// those diamonds on either canonical carrier, and the duality of the two
/// derived frames.
pub fn belnap_diagram_check() -> Result<Report> {
    let bl = belnap();
    let mut report = Report::default();
    diagram_check_into(&bl, &mut report)?;
    Ok(report)
}

fn dp(bl: &Bilattice, x: ElemSet) -> ElemSet {
    x.iter().map(|e| bl.duality(e)).collect()
}

fn diagram_check_into(bl: &Bilattice, report: &mut Report) -> Result<()> {
    let t = bl.truth_lattice();
    let k = bl.knowledge_lattice();
    let ta = bl.truth_algebra();
    let ka = bl.knowledge_algebra();

    // ∂_P ∘ ↓⁺_t = ↓⁺_k ∘ ∂ on every element
    for x in t.elems() {
        let lhs = dp(bl, t.down_plus(x));
        let rhs = k.down_plus(bl.duality(x));
        report.record(
            "duality square on elements",
            vec![t.name(x).into()],
            t.format_set(lhs),
            k.format_set(rhs),
            lhs == rhs,
        );
    }

    // ∂ is a homomorphism on the operator pairs
    for x in t.elems() {
        let lhs = bl.duality(bl.conflation(x));
        let rhs = bl.neg(bl.duality(x));
        report.record(
            "∂ maps conflation to truth negation",
            vec![t.name(x).into()],
            t.name(lhs).into(),
            t.name(rhs).into(),
            lhs == rhs,
        );
        for y in t.elems() {
            let args = vec![t.name(x).to_string(), t.name(y).to_string()];
            let lhs = bl.duality(t.meet(x, y));
            let rhs = k.meet(bl.duality(x), bl.duality(y));
            report.record(
                "∂ maps meet to knowledge meet",
                args.clone(),
                t.name(lhs).into(),
                t.name(rhs).into(),
                lhs == rhs,
            );
            let lhs = bl.duality(t.rel_pseudocomplement_raw(x, y));
            let rhs = k.rel_pseudocomplement_raw(bl.duality(x), bl.duality(y));
            report.record(
                "∂ maps truth implication to knowledge implication",
                args,
                t.name(lhs).into(),
                t.name(rhs).into(),
                lhs == rhs,
            );
        }
    }

    // the worked instance: (∂_P ∘ ↓⁺_t)(bot ∧ top) = {bot} = ↓⁺_k(f ⊗ t)
    let bot = t.elem("bot")?;
    let top = t.elem("top")?;
    let f = t.elem("f")?;
    let tt = t.elem("t")?;
    let lhs = dp(bl, t.down_plus(t.meet(bot, top)));
    let rhs = k.down_plus(k.meet(f, tt));
    report.record(
        "worked instance (dP∘liftT)(bot∧top) = liftK(f⊗t)",
        vec![],
        t.format_set(lhs),
        k.format_set(rhs),
        lhs == rhs && lhs == ElemSet::singleton(bot),
    );

    // lifted square: ∂_P commutes with the lifted operator pairs on B⁺_t
    let carrier_t: Vec<ElemSet> = t.elems().map(|x| t.down_plus(x)).collect();
    let diamond_t = |x: ElemSet| -> ElemSet { t.down_plus(bl.conflation(t.sup(x))) };
    let diamond_k = |x: ElemSet| -> ElemSet { k.down_plus(bl.neg(k.sup(x))) };
    let impl_t = |x: ElemSet, y: ElemSet| -> ElemSet {
        t.down_plus(t.rel_pseudocomplement_raw(t.sup(x), t.sup(y)))
    };
    let impl_k = |x: ElemSet, y: ElemSet| -> ElemSet {
        k.down_plus(k.rel_pseudocomplement_raw(k.sup(x), k.sup(y)))
    };
    for &x in &carrier_t {
        let lhs = dp(bl, diamond_t(x));
        let rhs = diamond_k(dp(bl, x));
        report.record(
            "∂_P maps lifted conflation to lifted truth negation",
            vec![t.format_set(x)],
            t.format_set(lhs),
            k.format_set(rhs),
            lhs == rhs,
        );
        for &y in &carrier_t {
            let args = vec![t.format_set(x), t.format_set(y)];
            let lhs = dp(bl, x.inter(y));
            let rhs = dp(bl, x).inter(dp(bl, y));
            report.record(
                "∂_P maps intersection to intersection",
                args.clone(),
                t.format_set(lhs),
                k.format_set(rhs),
                lhs == rhs,
            );
            let lhs = dp(bl, impl_t(x, y));
            let rhs = impl_k(dp(bl, x), dp(bl, y));
            report.record(
                "∂_P maps lifted truth implication to lifted knowledge implication",
                args,
                t.format_set(lhs),
                k.format_set(rhs),
                lhs == rhs,
            );
        }
    }

    // normality and selfadjointness of the two diamonds on the carriers
    report.record(
        "lifted conflation is normal",
        vec![],
        t.format_set(diamond_t(ElemSet::singleton(f))),
        t.format_set(ElemSet::singleton(f)),
        diamond_t(ElemSet::singleton(f)) == ElemSet::singleton(f),
    );
    let neg_t = |x: ElemSet| -> ElemSet { impl_t(x, ElemSet::singleton(t.bottom())) };
    let neg_k = |x: ElemSet| -> ElemSet { impl_k(x, ElemSet::singleton(k.bottom())) };
    for &x in &carrier_t {
        let lhs = diamond_t(x);
        let rhs = neg_t(diamond_t(neg_t(x)));
        report.record(
            "lifted conflation is selfadjoint on the truth carrier",
            vec![t.format_set(x)],
            t.format_set(lhs),
            t.format_set(rhs),
            lhs == rhs,
        );
    }
    let carrier_k: Vec<ElemSet> = k.elems().map(|x| k.down_plus(x)).collect();
    for &x in &carrier_k {
        let lhs = diamond_k(x);
        let rhs = neg_k(diamond_k(neg_k(x)));
        report.record(
            "lifted truth negation is selfadjoint on the knowledge carrier",
            vec![k.format_set(x)],
            k.format_set(lhs),
            k.format_set(rhs),
            lhs == rhs,
        );
    }

    // frame duality: ∂ carries (1_t, ≤_t, R_conf) onto (1_k, ≤_k, R_neg)
    let frame_t = derive_frame(&ta)?;
    let frame_k = derive_frame(&ka)?;
    let mapped_worlds = dp(bl, frame_t.worlds());
    report.record(
        "∂ maps truth worlds onto knowledge worlds",
        vec![],
        t.format_set(mapped_worlds),
        k.format_set(frame_k.worlds()),
        mapped_worlds == frame_k.worlds(),
    );
    let r_conf = frame_t.access("conf")?;
    let r_neg = frame_k.access("neg")?;
    let mapped = Relation::from_pairs(
        r_conf
            .pairs()
            .into_iter()
            .map(|(x, y)| (bl.duality(x), bl.duality(y))),
    );
    report.record(
        "∂×∂ maps the conflation relation onto the negation relation",
        vec![],
        mapped.render(t),
        r_neg.render(k),
        mapped == *r_neg,
    );
    for x in t.elems() {
        for y in t.elems() {
            report.record(
                "∂ preserves the order between the frames",
                vec![t.name(x).into(), t.name(y).into()],
                t.leq(x, y).to_string(),
                k.leq(bl.duality(x), bl.duality(y)).to_string(),
                t.leq(x, y) == k.leq(bl.duality(x), bl.duality(y)),
            );
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{builtin, chain, Algebra, ModalRole};
    use crate::eval::{ValuationIter, DEFAULT_BUDGET};
    use crate::syntax::parse_formula;

    fn belnap_t() -> Algebra {
        builtin("belnap-t").unwrap()
    }

    fn el(alg: &Algebra, name: &str) -> Elem {
        alg.lattice().elem(name).unwrap()
    }

    fn pairs(alg: &Algebra, names: &[(&str, &str)]) -> Vec<(Elem, Elem)> {
        let mut v: Vec<(Elem, Elem)> = names
            .iter()
            .map(|(a, b)| (el(alg, a), el(alg, b)))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn conflation_accessibility_matches_pinned_table() {
        let alg = belnap_t();
        let frame = derive_frame(&alg).unwrap();
        let got = frame.access("conf").unwrap().pairs();
        let want = pairs(
            &alg,
            &[
                ("f", "f"),
                ("f", "bot"),
                ("top", "bot"),
                ("f", "top"),
                ("bot", "top"),
            ],
        );
        assert_eq!(got, want);
    }

    #[test]
    fn moore_accessibility_matches_pinned_table() {
        let alg = belnap_t();
        let frame = derive_frame(&alg).unwrap();
        let got = frame.access("mu").unwrap().pairs();
        let want = pairs(
            &alg,
            &[
                ("f", "f"),
                ("f", "bot"),
                ("f", "top"),
                ("bot", "top"),
                ("top", "top"),
            ],
        );
        assert_eq!(got, want);
    }

    #[test]
    fn negation_incompatibility_matches_pinned_table() {
        let alg = belnap_t();
        let frame = derive_frame(&alg).unwrap();
        let got = frame.incompat("neg").unwrap().pairs();
        let want = pairs(
            &alg,
            &[
                ("f", "f"),
                ("f", "bot"),
                ("f", "top"),
                ("bot", "bot"),
                ("bot", "f"),
                ("top", "top"),
                ("top", "f"),
            ],
        );
        assert_eq!(got, want);
    }

    #[test]
    fn knowledge_frame_negation_matches_pinned_table() {
        let alg = builtin("belnap-k").unwrap();
        let frame = derive_frame(&alg).unwrap();
        let got = frame.access("neg").unwrap().pairs();
        let want = pairs(
            &alg,
            &[
                ("bot", "bot"),
                ("bot", "f"),
                ("t", "f"),
                ("bot", "t"),
                ("f", "t"),
            ],
        );
        assert_eq!(got, want);
    }

    #[test]
    fn frame_worlds_are_lifted_irreducibles() {
        let alg = belnap_t();
        let frame = derive_frame(&alg).unwrap();
        assert_eq!(frame.worlds(), alg.lattice().ahat());
    }

    #[test]
    fn nonmodal_algebra_has_empty_frame() {
        let alg = builtin("bool2").unwrap();
        let frame = derive_frame(&alg).unwrap();
        assert_eq!(frame.access_names().count(), 0);
        assert_eq!(frame.incompat_names().count(), 0);
    }

    #[test]
    fn class_violation_rejected_early() {
        let base = builtin("bool2").unwrap();
        let mut alg = Algebra::new(base.lattice().clone());
        let top = alg.lattice().top();
        alg.attach_unary("bad", vec![top, top], ModalRole::DIAMOND)
            .unwrap();
        assert!(matches!(
            derive_frame(&alg),
            Err(Error::OperatorClassViolation { .. })
        ));
    }

    #[test]
    fn trivial_world_forces_everything() {
        let alg = belnap_t();
        let frame = derive_frame(&alg).unwrap();
        let v = Valuation::new()
            .bind("p", el(&alg, "top"))
            .bind("q", el(&alg, "f"));
        let model = KripkeModel::new(&alg, &frame, &v);
        let zero = alg.lattice().bottom();
        for text in [
            "p", "q", "p -> q", "~p", "<conf>p", "[conf]q", "!neg p", "@f",
        ] {
            let f = parse_formula(text, &alg).unwrap();
            assert!(
                model.forces(zero, &f).unwrap(),
                "trivial world must force {text}"
            );
        }
    }

    #[test]
    fn forcing_examples_with_unknown_p() {
        let alg = belnap_t();
        let frame = derive_frame(&alg).unwrap();
        let v = Valuation::new().bind("p", el(&alg, "bot"));
        let model = KripkeModel::new(&alg, &frame, &v);
        let p = parse_formula("p", &alg).unwrap();
        assert!(model.forces(el(&alg, "bot"), &p).unwrap());
        assert!(!model.forces(el(&alg, "top"), &p).unwrap());
        let dia = parse_formula("<conf>p", &alg).unwrap();
        assert!(model.forces(el(&alg, "top"), &dia).unwrap());
        assert_eq!(
            model.truth_set(&dia).unwrap(),
            alg.lattice().down_plus(el(&alg, "top")),
            "‖<conf>p‖ = ↓⁺(−bot) = {{f, top}}"
        );
    }

    #[test]
    fn truth_set_of_constants() {
        let alg = belnap_t();
        let frame = derive_frame(&alg).unwrap();
        let model = KripkeModel::new(&alg, &frame, &Valuation::new());
        let zero = parse_formula("@f", &alg).unwrap();
        assert_eq!(
            model.truth_set(&zero).unwrap(),
            ElemSet::singleton(alg.lattice().bottom())
        );
        let one = parse_formula("@t", &alg).unwrap();
        assert_eq!(model.truth_set(&one).unwrap(), alg.lattice().ahat());
    }

    #[test]
    fn world_not_in_frame_rejected() {
        let alg = belnap_t();
        let frame = derive_frame(&alg).unwrap();
        let model = KripkeModel::new(&alg, &frame, &Valuation::new());
        let f = parse_formula("@f", &alg).unwrap();
        let t = el(&alg, "t"); // the top is join-reducible, not a world
        assert!(matches!(
            model.forces(t, &f),
            Err(Error::UnknownWorld(name)) if name == "t"
        ));
    }

    #[test]
    fn undesignated_modality_has_no_relation() {
        let alg = belnap_t();
        let frame = derive_frame(&alg).unwrap();
        let model = KripkeModel::new(&alg, &frame, &Valuation::new());
        // `dual` is registered but not designated, so the frame derives no
        // relation for it
        let f = parse_formula("<dual>@f", &alg).unwrap();
        assert!(matches!(
            model.truth_set(&f),
            Err(Error::MissingRelation(name)) if name == "dual"
        ));
    }

    #[test]
    fn representation_identity_exhaustive_depth_two() {
        let alg = belnap_t();
        let frame = derive_frame(&alg).unwrap();
        let vars = vec!["p".to_string(), "q".to_string()];
        let texts = [
            "p",
            "q",
            "@bot",
            "p /\\ q",
            "p \\/ q",
            "p -> q",
            "~p",
            "<conf>p",
            "<mu>q",
            "!neg p",
            "[conf]p",
            "<conf>(p \\/ q)",
            "~(p -> q)",
            "!neg (p /\\ q)",
            "<mu>(p -> q)",
            "[conf](p /\\ q)",
        ];
        let formulas: Vec<Formula> = texts
            .iter()
            .map(|t| parse_formula(t, &alg).unwrap())
            .collect();
        for v in ValuationIter::new(&alg, &vars, DEFAULT_BUDGET).unwrap() {
            let report = verify_representation(&alg, &frame, &v, &formulas).unwrap();
            assert!(report.ok(), "{:?}", report.violations);
        }
    }

    #[test]
    fn state_verifier_counts_and_passes() {
        let alg = belnap_t();
        let frame = derive_frame(&alg).unwrap();
        let vars = vec!["p".to_string(), "q".to_string()];
        let v = Valuation::new()
            .bind("p", el(&alg, "bot"))
            .bind("q", el(&alg, "t"));
        let cov = verify_representation_states(&alg, &frame, &v, &vars, 2).unwrap();
        assert!(cov.report.ok(), "{:?}", cov.report.violations);
        // closed-form count for this signature: atoms a = 2 vars + 4
        // constants, u = 5 unary connectives (~, <conf>, <mu>, [conf],
        // !neg), b = 3 binary; c(0) = 6, c(d+1) = c(d) + u·e(d) +
        // b·(c(d)² − c(d-1)²) with e(d) the exact-depth-d count
        let a: u128 = 6;
        let u: u128 = 5;
        let b: u128 = 3;
        let c0 = a;
        let e1 = u * a + b * a * a;
        let c1 = c0 + e1;
        let e2 = u * e1 + b * (c1 * c1 - c0 * c0);
        let c2 = c1 + e2;
        assert_eq!(cov.formulas_covered, c2);
        assert!(cov.states <= 32, "states live in carrier × down-sets");
    }

    #[test]
    fn state_verifier_agrees_with_direct_enumeration() {
        // depth-1 cross-check: the quotient count equals the size of the
        // directly enumerated pool, and both verdicts agree
        let alg = belnap_t();
        let frame = derive_frame(&alg).unwrap();
        let vars = vec!["p".to_string()];
        let mut pool: Vec<Formula> = vec![Formula::var("p")];
        for e in alg.lattice().elems() {
            pool.push(Formula::cst(alg.lattice().name(e)));
        }
        let atoms = pool.clone();
        for f in &atoms {
            pool.push(Formula::pneg(f.clone()));
            pool.push(Formula::diamond("conf", f.clone()));
            pool.push(Formula::diamond("mu", f.clone()));
            pool.push(Formula::boxed("conf", f.clone()));
            pool.push(Formula::modal_neg("neg", f.clone()));
        }
        for a in &atoms {
            for b in &atoms {
                pool.push(Formula::meet(a.clone(), b.clone()));
                pool.push(Formula::join(a.clone(), b.clone()));
                pool.push(Formula::implies(a.clone(), b.clone()));
            }
        }
        for v in ValuationIter::new(&alg, &vars, DEFAULT_BUDGET).unwrap() {
            let direct = verify_representation(&alg, &frame, &v, &pool).unwrap();
            assert!(direct.ok(), "{:?}", direct.violations);
            let cov = verify_representation_states(&alg, &frame, &v, &vars, 1).unwrap();
            assert!(cov.report.ok());
            assert_eq!(cov.formulas_covered, pool.len() as u128);
        }
    }

    #[test]
    fn hereditariness_of_forcing() {
        let alg = belnap_t();
        let frame = derive_frame(&alg).unwrap();
        let lat = alg.lattice();
        let vars = vec!["p".to_string(), "q".to_string()];
        let texts = ["p -> q", "<conf>p", "!neg q", "~(p /\\ q)"];
        for v in ValuationIter::new(&alg, &vars, DEFAULT_BUDGET).unwrap() {
            let model = KripkeModel::new(&alg, &frame, &v);
            for text in texts {
                let f = parse_formula(text, &alg).unwrap();
                let ts = model.truth_set(&f).unwrap();
                for x in ts.iter() {
                    for y in lat.down_plus(x).iter() {
                        assert!(ts.contains(y), "forcing must be hereditary for {text}");
                    }
                }
                assert!(ts.contains(lat.bottom()));
            }
        }
    }

    #[test]
    fn entailment_transfer() {
        let alg = belnap_t();
        let frame = derive_frame(&alg).unwrap();
        let vars = vec!["p".to_string(), "q".to_string()];
        let pairs = [
            ("p /\\ q", "p"),
            ("p", "p \\/ q"),
            ("p", "q"),
            ("<conf>(p /\\ q)", "<conf>p"),
        ];
        for v in ValuationIter::new(&alg, &vars, DEFAULT_BUDGET).unwrap() {
            for (l, r) in pairs {
                let lhs = parse_formula(l, &alg).unwrap();
                let rhs = parse_formula(r, &alg).unwrap();
                assert!(entailment_transfer_holds(&alg, &frame, &v, &lhs, &rhs).unwrap());
            }
        }
    }

    #[test]
    fn literal_implication_variant_breaks_the_identity_on_chains() {
        let alg = chain(3).unwrap();
        let frame = derive_frame(&alg).unwrap();
        let lat = alg.lattice();
        let v = Valuation::new()
            .bind("p", el(&alg, "1"))
            .bind("q", el(&alg, "0"));
        let f = parse_formula("p -> q", &alg).unwrap();
        let hereditary = KripkeModel::new(&alg, &frame, &v).truth_set(&f).unwrap();
        assert_eq!(hereditary, lat.down_plus(el(&alg, "0")), "1 ⇀ 0 = 0");
        let literal = KripkeModel::new(&alg, &frame, &v)
            .with_implies(ImpliesSemantics::Literal)
            .truth_set(&f)
            .unwrap();
        // the top world vacuously satisfies the literal clause
        let expect: ElemSet = [el(&alg, "0"), el(&alg, "2")].into_iter().collect();
        assert_eq!(literal, expect);
        assert_ne!(literal, hereditary);
    }

    #[test]
    fn chain_frame_relations() {
        let alg3 = chain(3).unwrap();
        let mut with_id = Algebra::new(alg3.lattice().clone());
        let idt: Vec<Elem> = with_id.lattice().elems().collect();
        with_id.attach_unary("id", idt, ModalRole::NONE).unwrap();
        let rel = derive_chain_frame(&with_id, "id").unwrap();
        assert_eq!(
            rel.pairs(),
            pairs(&with_id, &[("0", "0"), ("1", "1"), ("2", "2")])
        );

        let mut with_const = Algebra::new(alg3.lattice().clone());
        let top = with_const.lattice().top();
        with_const
            .attach_unary("k2", vec![top, top, top], ModalRole::NONE)
            .unwrap();
        let rel = derive_chain_frame(&with_const, "k2").unwrap();
        assert_eq!(
            rel.pairs(),
            pairs(
                &with_const,
                &[("2", "0"), ("2", "1"), ("2", "2"), ("0", "0"), ("1", "0")]
            )
        );

        let alg2 = chain(2).unwrap();
        let mut with_zero = Algebra::new(alg2.lattice().clone());
        let bottom = with_zero.lattice().bottom();
        with_zero
            .attach_unary("z", vec![bottom, bottom], ModalRole::NONE)
            .unwrap();
        let rel = derive_chain_frame(&with_zero, "z").unwrap();
        assert_eq!(
            rel.pairs(),
            pairs(&with_zero, &[("0", "0"), ("0", "1"), ("1", "0")])
        );
    }

    #[test]
    fn chain_frame_identity_for_surjective_monotone_ops() {
        // surjective monotone tables on a chain satisfy ‖◇φ‖ = ↓ Ī(◇φ)
        let base = chain(4).unwrap();
        let lat = base.lattice().clone();
        let tables: Vec<Vec<Elem>> = vec![
            lat.elems().collect(),
            vec![Elem(0), Elem(0), Elem(1), Elem(3)],
            vec![Elem(0), Elem(1), Elem(3), Elem(3)],
        ];
        for table in tables {
            let image: ElemSet = lat.elems().map(|x| table[x.0]).collect();
            let surjective = image.len() == lat.len();
            let mut alg = Algebra::new(lat.clone());
            alg.attach_unary("o", table.clone(), ModalRole::NONE)
                .unwrap();
            let rel = derive_chain_frame(&alg, "o").unwrap();
            for target in lat.elems() {
                // ‖p‖ = ↓target directly: chains have Â = A
                let truth_p = lat.down_plus(target);
                let forced: ElemSet = lat
                    .elems()
                    .filter(|x| !rel.successors(*x).inter(truth_p).is_empty())
                    .collect();
                if surjective {
                    assert_eq!(
                        forced,
                        lat.down_plus(table[target.0]),
                        "identity must hold for surjective tables"
                    );
                }
            }
        }
    }

    #[test]
    fn chain_frame_identity_fails_for_constant_bottom() {
        // the stated relation overshoots for non-surjective tables: every
        // preimage-less world forces the diamond through the trivial world
        let base = chain(2).unwrap();
        let lat = base.lattice().clone();
        let mut alg = Algebra::new(lat.clone());
        let bottom = lat.bottom();
        alg.attach_unary("z", vec![bottom, bottom], ModalRole::NONE)
            .unwrap();
        let rel = derive_chain_frame(&alg, "z").unwrap();
        let target = lat.top();
        let truth_p = lat.down_plus(target);
        let forced: ElemSet = lat
            .elems()
            .filter(|x| !rel.successors(*x).inter(truth_p).is_empty())
            .collect();
        assert_ne!(forced, lat.down_plus(bottom), "known overshoot");
        assert_eq!(forced, ElemSet::full(2));
    }

    #[test]
    fn chain_frame_preconditions() {
        let alg = belnap_t();
        assert!(matches!(
            derive_chain_frame(&alg, "conf"),
            Err(Error::NotAChain)
        ));
        let base = chain(3).unwrap();
        let mut alg = Algebra::new(base.lattice().clone());
        // non-monotone: swap 0 and 1, fix 2
        alg.attach_unary("swap", vec![Elem(1), Elem(0), Elem(2)], ModalRole::NONE)
            .unwrap();
        assert!(matches!(
            derive_chain_frame(&alg, "swap"),
            Err(Error::NotMonotone(_))
        ));
    }

    #[test]
    fn polarity_of_negation_relation() {
        let alg = belnap_t();
        let frame = derive_frame(&alg).unwrap();
        let rel = frame.incompat("neg").unwrap();
        let pol = Polarity::new(rel, frame.worlds());
        // λ∅ is everything
        assert_eq!(pol.lambda(ElemSet::EMPTY), frame.worlds());
        // λ{bot} = all x with (bot, x) ∈ R̃, read off the pinned table
        let bot = el(&alg, "bot");
        let f = el(&alg, "f");
        let expect: ElemSet = [f, bot].into_iter().collect();
        assert_eq!(pol.lambda(ElemSet::singleton(bot)), expect);
        assert!(pol.galois_holds());
    }

    #[test]
    fn galois_for_every_derived_incompatibility() {
        for name in ["belnap-t", "belnap-k"] {
            let alg = builtin(name).unwrap();
            let frame = derive_frame(&alg).unwrap();
            for op in frame.incompat_names() {
                let rel = frame.incompat(op).unwrap();
                let pol = Polarity::new(rel, frame.worlds());
                assert!(pol.galois_holds(), "{name}/{op}");
            }
        }
    }

    #[test]
    fn diagram_check_passes() {
        let report = belnap_diagram_check().unwrap();
        assert!(report.ok(), "{:?}", report.violations);
        assert!(report.checked > 50);
    }

    #[test]
    fn frame_dot_export() {
        let alg = belnap_t();
        let frame = derive_frame(&alg).unwrap();
        let dot = frame.dot(alg.lattice());
        assert!(dot.contains("doublecircle"));
        assert!(dot.contains("R_conf"));
        assert!(dot.contains("Rn_neg"));
        assert!(dot.contains("style=dashed"));
    }
}
