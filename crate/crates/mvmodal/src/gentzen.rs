//! The binary sequent system over a lattice algebra: reflexivity,
//! top/bottom, meet projections, join injections, distributivity, the modal
//! schemas for designated boxes, diamonds and modal negations, and the
//! ground sequents `@x ⊢ @y` for `x ⊑ y`. Inference rules are cut, the
//! lattice bound rules, monotonicity of boxes and diamonds, antitonicity of
//! modal negations, and substitution.
//!
//! Substitution is never enumerated: axiom schemas are matched structurally
//! against goal sequents, which closes the axiom set under instances.
//! `bounded_derives` is a backward-chaining search with memoization; it
//! answers `Proved` with a checkable tree or `Unknown`, never a refutation.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::eval::{entails_m, is_tautology, sequent_satisfied, ValuationIter};
use crate::syntax::{Formula, Sequent, Theory};

/// Identifies the axiom schema a sequent instantiates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchemaId {
    Reflexive,
    Top,
    Bottom,
    MeetProjLeft,
    MeetProjRight,
    JoinInjLeft,
    JoinInjRight,
    Distributivity,
    BoxMeet(String),
    BoxTop(String),
    DiamondJoin(String),
    DiamondBottom(String),
    NegMeet(String),
    NegTop(String),
    Ground,
}

impl SchemaId {
    pub fn name(&self) -> String {
        match self {
            SchemaId::Reflexive => "reflexive".into(),
            SchemaId::Top => "top".into(),
            SchemaId::Bottom => "bottom".into(),
            SchemaId::MeetProjLeft => "meet-projection-left".into(),
            SchemaId::MeetProjRight => "meet-projection-right".into(),
            SchemaId::JoinInjLeft => "join-injection-left".into(),
            SchemaId::JoinInjRight => "join-injection-right".into(),
            SchemaId::Distributivity => "distributivity".into(),
            SchemaId::BoxMeet(op) => format!("box-meet({op})"),
            SchemaId::BoxTop(op) => format!("box-top({op})"),
            SchemaId::DiamondJoin(op) => format!("diamond-join({op})"),
            SchemaId::DiamondBottom(op) => format!("diamond-bottom({op})"),
            SchemaId::NegMeet(op) => format!("negation-meet({op})"),
            SchemaId::NegTop(op) => format!("negation-top({op})"),
            SchemaId::Ground => "ground".into(),
        }
    }
}

/// The rule applied at an internal derivation node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleId {
    Cut,
    LowerBound,
    UpperBound,
    MonoDiamond(String),
    MonoBox(String),
    Antitone(String),
}

impl RuleId {
    pub fn name(&self) -> String {
        match self {
            RuleId::Cut => "cut".into(),
            RuleId::LowerBound => "lower-bound".into(),
            RuleId::UpperBound => "upper-bound".into(),
            RuleId::MonoDiamond(op) => format!("mono-diamond({op})"),
            RuleId::MonoBox(op) => format!("mono-box({op})"),
            RuleId::Antitone(op) => format!("antitone({op})"),
        }
    }
}

/// A derivation tree. Leaves are schema instances or theory members;
/// internal nodes carry the rule connecting their children to the
/// conclusion.
#[derive(Debug, Clone)]
pub enum Derivation {
    Axiom(SchemaId, Sequent),
    Hypothesis(usize, Sequent),
    Rule(RuleId, Sequent, Vec<Derivation>),
}

impl Derivation {
    pub fn conclusion(&self) -> &Sequent {
        match self {
            Derivation::Axiom(_, s) | Derivation::Hypothesis(_, s) => s,
            Derivation::Rule(_, s, _) => s,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Derivation::Axiom(..) | Derivation::Hypothesis(..) => 0,
            Derivation::Rule(_, _, children) => {
                1 + children.iter().map(|c| c.depth()).max().unwrap_or(0)
            }
        }
    }

    /// Indented text rendering for `--explain`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(0, &mut out);
        out
    }

    fn render_into(&self, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match self {
            Derivation::Axiom(id, s) => {
                out.push_str(&format!("{pad}[axiom {}] {s}\n", id.name()));
            }
            Derivation::Hypothesis(i, s) => {
                out.push_str(&format!("{pad}[hypothesis #{i}] {s}\n"));
            }
            Derivation::Rule(rule, s, children) => {
                out.push_str(&format!("{pad}[{}] {s}\n", rule.name()));
                for c in children {
                    c.render_into(indent + 1, out);
                }
            }
        }
    }
}

/// Outcome of a bounded search: a proof, or nothing within the budget.
#[derive(Debug, Clone)]
pub enum DeriveOutcome {
    Proved(Derivation),
    Unknown,
}

impl DeriveOutcome {
    pub fn proof(&self) -> Option<&Derivation> {
        match self {
            DeriveOutcome::Proved(d) => Some(d),
            DeriveOutcome::Unknown => None,
        }
    }
}

fn top_const(alg: &Algebra) -> Formula {
    Formula::cst(alg.lattice().name(alg.lattice().top()))
}

fn bottom_const(alg: &Algebra) -> Formula {
    Formula::cst(alg.lattice().name(alg.lattice().bottom()))
}

/// Structural matcher: the first axiom schema a sequent instantiates, in
/// the fixed schema order. This is where the substitution rule lives.
pub fn match_axiom(alg: &Algebra, s: &Sequent) -> Option<SchemaId> {
    candidate_schemas(alg, s).into_iter().next()
}

/// Every axiom schema the sequent instantiates; a sequent like `@0 ⊢ @0`
/// is simultaneously reflexive, a bottom instance and a ground sequent.
pub fn candidate_schemas(alg: &Algebra, s: &Sequent) -> Vec<SchemaId> {
    let lat = alg.lattice();
    let mut out = Vec::new();
    if s.lhs == s.rhs {
        out.push(SchemaId::Reflexive);
    }
    if let Formula::Const(c) = &s.rhs {
        if lat.elem(c).is_ok_and(|e| e == lat.top()) {
            out.push(SchemaId::Top);
        }
    }
    if let Formula::Const(c) = &s.lhs {
        if lat.elem(c).is_ok_and(|e| e == lat.bottom()) {
            out.push(SchemaId::Bottom);
        }
    }
    if let Formula::Meet(a, b) = &s.lhs {
        if **a == s.rhs {
            out.push(SchemaId::MeetProjLeft);
        }
        if **b == s.rhs {
            out.push(SchemaId::MeetProjRight);
        }
    }
    if let Formula::Join(a, b) = &s.rhs {
        if **a == s.lhs {
            out.push(SchemaId::JoinInjLeft);
        }
        if **b == s.lhs {
            out.push(SchemaId::JoinInjRight);
        }
    }
    // φ ∧ (ψ ∨ χ) ⊢ (φ ∧ ψ) ∨ (φ ∧ χ)
    if let (Formula::Meet(a, bc), Formula::Join(ab, ac)) = (&s.lhs, &s.rhs) {
        if let (Formula::Join(b, c), Formula::Meet(a1, b1), Formula::Meet(a2, c1)) =
            (&**bc, &**ab, &**ac)
        {
            if a == a1 && a == a2 && b == b1 && c == c1 {
                out.push(SchemaId::Distributivity);
            }
        }
    }
    // □(φ∧ψ) ⊢ □φ ∧ □ψ
    if let (Formula::Box(op, body), Formula::Meet(l, r)) = (&s.lhs, &s.rhs) {
        if let (Formula::Meet(a, b), Formula::Box(op1, a1), Formula::Box(op2, b1)) =
            (&**body, &**l, &**r)
        {
            if op == op1 && op == op2 && a == a1 && b == b1 && box_schema_applies(alg, op) {
                out.push(SchemaId::BoxMeet(op.clone()));
            }
        }
    }
    // 1 ⊢ □1
    if let Formula::Box(op, body) = &s.rhs {
        if s.lhs == top_const(alg) && **body == top_const(alg) && box_schema_applies(alg, op) {
            out.push(SchemaId::BoxTop(op.clone()));
        }
    }
    // ◇(φ∨ψ) ⊢ ◇φ ∨ ◇ψ
    if let (Formula::Diamond(op, body), Formula::Join(l, r)) = (&s.lhs, &s.rhs) {
        if let (Formula::Join(a, b), Formula::Diamond(op1, a1), Formula::Diamond(op2, b1)) =
            (&**body, &**l, &**r)
        {
            if op == op1 && op == op2 && a == a1 && b == b1 && diamond_schema_applies(alg, op) {
                out.push(SchemaId::DiamondJoin(op.clone()));
            }
        }
    }
    // ◇0 ⊢ 0
    if let Formula::Diamond(op, body) = &s.lhs {
        if s.rhs == bottom_const(alg)
            && **body == bottom_const(alg)
            && diamond_schema_applies(alg, op)
        {
            out.push(SchemaId::DiamondBottom(op.clone()));
        }
    }
    // ¬φ ∧ ¬ψ ⊢ ¬(φ∨ψ)
    if let (Formula::Meet(l, r), Formula::ModalNeg(op, body)) = (&s.lhs, &s.rhs) {
        if let (Formula::ModalNeg(op1, a1), Formula::ModalNeg(op2, b1), Formula::Join(a, b)) =
            (&**l, &**r, &**body)
        {
            if op == op1 && op == op2 && a == a1 && b == b1 && negation_schema_applies(alg, op) {
                out.push(SchemaId::NegMeet(op.clone()));
            }
        }
    }
    // 1 ⊢ ¬0
    if let Formula::ModalNeg(op, body) = &s.rhs {
        if s.lhs == top_const(alg)
            && **body == bottom_const(alg)
            && negation_schema_applies(alg, op)
        {
            out.push(SchemaId::NegTop(op.clone()));
        }
    }
    // ground order sequents
    if let (Formula::Const(a), Formula::Const(b)) = (&s.lhs, &s.rhs) {
        if let (Ok(x), Ok(y)) = (lat.elem(a), lat.elem(b)) {
            if lat.leq(x, y) {
                out.push(SchemaId::Ground);
            }
        }
    }
    out
}

fn diamond_schema_applies(alg: &Algebra, op: &str) -> bool {
    alg.role(op).diamond && alg.classify(op).is_ok_and(|c| c.additive && c.normal)
}

fn box_schema_applies(alg: &Algebra, op: &str) -> bool {
    let top = alg.lattice().top();
    alg.role(op).boxed
        && alg.classify(op).is_ok_and(|c| c.multiplicative)
        && alg.apply_unary(op, top).is_ok_and(|img| img == top)
}

fn negation_schema_applies(alg: &Algebra, op: &str) -> bool {
    alg.role(op).negation && alg.classify(op).is_ok_and(|c| c.modal_negation)
}

/// A materialized sequent system: every schema instance over a formula pool
/// of bounded depth, plus all ground order sequents.
#[derive(Debug, Clone)]
pub struct SequentSystem {
    pub axioms: Vec<(SchemaId, Sequent)>,
    /// The instantiation pool the axioms were generated from.
    pub pool: Vec<Formula>,
}

/// Formulas over the given variables, the algebra's constants, `∧`/`∨` and
/// the designated modalities, up to the given depth.
pub fn formula_pool(alg: &Algebra, vars: &[String], depth: usize) -> Vec<Formula> {
    let lat = alg.lattice();
    let mut all: Vec<Formula> = Vec::new();
    for v in vars {
        all.push(Formula::var(v));
    }
    for e in lat.elems() {
        all.push(Formula::cst(lat.name(e)));
    }
    let diamonds: Vec<String> = alg.diamond_ops().map(|s| s.to_string()).collect();
    let boxes: Vec<String> = alg
        .box_ops()
        .filter(|op| box_schema_applies(alg, op))
        .map(|s| s.to_string())
        .collect();
    let negations: Vec<String> = alg.negation_ops().map(|s| s.to_string()).collect();
    for _ in 0..depth {
        let mut next = Vec::new();
        for f in &all {
            for op in &diamonds {
                next.push(Formula::diamond(op, f.clone()));
            }
            for op in &boxes {
                next.push(Formula::boxed(op, f.clone()));
            }
            for op in &negations {
                next.push(Formula::modal_neg(op, f.clone()));
            }
        }
        for a in &all {
            for b in &all {
                next.push(Formula::meet(a.clone(), b.clone()));
                next.push(Formula::join(a.clone(), b.clone()));
            }
        }
        all.extend(next);
        all.sort();
        all.dedup();
    }
    all
}

/// Materializes every schema instance over the pool. The ternary
/// distributivity schema is instantiated from the depth-0 atoms of the pool
/// to keep the axiom set reviewable; the matcher covers deeper instances.
pub fn generate_system(alg: &Algebra, vars: &[String], schema_depth: usize) -> SequentSystem {
    let lat = alg.lattice();
    let pool = formula_pool(alg, vars, schema_depth);
    let atoms: Vec<Formula> = pool.iter().filter(|f| f.depth() == 0).cloned().collect();
    let top = top_const(alg);
    let bottom = bottom_const(alg);
    let mut axioms: Vec<(SchemaId, Sequent)> = Vec::new();
    for f in &pool {
        axioms.push((SchemaId::Reflexive, Sequent::new(f.clone(), f.clone())));
        axioms.push((SchemaId::Top, Sequent::new(f.clone(), top.clone())));
        axioms.push((SchemaId::Bottom, Sequent::new(bottom.clone(), f.clone())));
    }
    for a in &pool {
        for b in &pool {
            let meet = Formula::meet(a.clone(), b.clone());
            axioms.push((
                SchemaId::MeetProjLeft,
                Sequent::new(meet.clone(), a.clone()),
            ));
            axioms.push((SchemaId::MeetProjRight, Sequent::new(meet, b.clone())));
            let join = Formula::join(a.clone(), b.clone());
            axioms.push((SchemaId::JoinInjLeft, Sequent::new(a.clone(), join.clone())));
            axioms.push((SchemaId::JoinInjRight, Sequent::new(b.clone(), join)));
        }
    }
    for a in &atoms {
        for b in &atoms {
            for c in &atoms {
                let lhs = Formula::meet(a.clone(), Formula::join(b.clone(), c.clone()));
                let rhs = Formula::join(
                    Formula::meet(a.clone(), b.clone()),
                    Formula::meet(a.clone(), c.clone()),
                );
                axioms.push((SchemaId::Distributivity, Sequent::new(lhs, rhs)));
            }
        }
    }
    let diamonds: Vec<String> = alg
        .diamond_ops()
        .filter(|op| diamond_schema_applies(alg, op))
        .map(|s| s.to_string())
        .collect();
    let boxes: Vec<String> = alg
        .box_ops()
        .filter(|op| box_schema_applies(alg, op))
        .map(|s| s.to_string())
        .collect();
    let negations: Vec<String> = alg
        .negation_ops()
        .filter(|op| negation_schema_applies(alg, op))
        .map(|s| s.to_string())
        .collect();
    for op in &diamonds {
        for a in &pool {
            for b in &pool {
                let lhs = Formula::diamond(op, Formula::join(a.clone(), b.clone()));
                let rhs = Formula::join(
                    Formula::diamond(op, a.clone()),
                    Formula::diamond(op, b.clone()),
                );
                axioms.push((SchemaId::DiamondJoin(op.clone()), Sequent::new(lhs, rhs)));
            }
        }
        axioms.push((
            SchemaId::DiamondBottom(op.clone()),
            Sequent::new(Formula::diamond(op, bottom.clone()), bottom.clone()),
        ));
    }
    for op in &boxes {
        for a in &pool {
            for b in &pool {
                let lhs = Formula::boxed(op, Formula::meet(a.clone(), b.clone()));
                let rhs =
                    Formula::meet(Formula::boxed(op, a.clone()), Formula::boxed(op, b.clone()));
                axioms.push((SchemaId::BoxMeet(op.clone()), Sequent::new(lhs, rhs)));
            }
        }
        axioms.push((
            SchemaId::BoxTop(op.clone()),
            Sequent::new(top.clone(), Formula::boxed(op, top.clone())),
        ));
    }
    for op in &negations {
        for a in &pool {
            for b in &pool {
                let lhs = Formula::meet(
                    Formula::modal_neg(op, a.clone()),
                    Formula::modal_neg(op, b.clone()),
                );
                let rhs = Formula::modal_neg(op, Formula::join(a.clone(), b.clone()));
                axioms.push((SchemaId::NegMeet(op.clone()), Sequent::new(lhs, rhs)));
            }
        }
        axioms.push((
            SchemaId::NegTop(op.clone()),
            Sequent::new(top.clone(), Formula::modal_neg(op, bottom.clone())),
        ));
    }
    for x in lat.elems() {
        for y in lat.elems() {
            if lat.leq(x, y) {
                axioms.push((
                    SchemaId::Ground,
                    Sequent::new(Formula::cst(lat.name(x)), Formula::cst(lat.name(y))),
                ));
            }
        }
    }
    SequentSystem { axioms, pool }
}

impl SequentSystem {
    pub fn contains(&self, s: &Sequent) -> bool {
        self.axioms.iter().any(|(_, a)| a == s)
    }
}

// ---------------------------------------------------------------------------
// bounded backward search
// ---------------------------------------------------------------------------

struct Searcher<'a> {
    alg: &'a Algebra,
    theory: &'a Theory,
    cut_pool: Vec<Formula>,
    memo: BTreeMap<(Sequent, usize), Option<Derivation>>,
}

impl<'a> Searcher<'a> {
    fn subformulas(f: &Formula, out: &mut Vec<Formula>) {
        out.push(f.clone());
        match f {
            Formula::Var(_) | Formula::Const(_) => {}
            Formula::PseudoNeg(a)
            | Formula::Diamond(_, a)
            | Formula::Box(_, a)
            | Formula::ModalNeg(_, a) => Self::subformulas(a, out),
            Formula::Meet(a, b)
            | Formula::Join(a, b)
            | Formula::Implies(a, b)
            | Formula::BinOp(_, a, b) => {
                Self::subformulas(a, out);
                Self::subformulas(b, out);
            }
        }
    }

    fn search(&mut self, goal: &Sequent, depth: usize) -> Option<Derivation> {
        let key = (goal.clone(), depth);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        // block cycles while this goal is on the path
        self.memo.insert(key.clone(), None);
        let result = self.search_uncached(goal, depth);
        self.memo.insert(key, result.clone());
        result
    }

    fn search_uncached(&mut self, goal: &Sequent, depth: usize) -> Option<Derivation> {
        if let Some(id) = match_axiom(self.alg, goal) {
            return Some(Derivation::Axiom(id, goal.clone()));
        }
        if let Some(i) = self.theory.sequents.iter().position(|s| s == goal) {
            return Some(Derivation::Hypothesis(i, goal.clone()));
        }
        if depth == 0 {
            return None;
        }
        // lower bound: φ ⊢ ψ∧χ from φ ⊢ ψ and φ ⊢ χ
        if let Formula::Meet(a, b) = &goal.rhs {
            let left = Sequent::new(goal.lhs.clone(), (**a).clone());
            let right = Sequent::new(goal.lhs.clone(), (**b).clone());
            if let Some(d1) = self.search(&left, depth - 1) {
                if let Some(d2) = self.search(&right, depth - 1) {
                    return Some(Derivation::Rule(
                        RuleId::LowerBound,
                        goal.clone(),
                        vec![d1, d2],
                    ));
                }
            }
        }
        // upper bound: φ∨χ ⊢ ψ from φ ⊢ ψ and χ ⊢ ψ
        if let Formula::Join(a, b) = &goal.lhs {
            let left = Sequent::new((**a).clone(), goal.rhs.clone());
            let right = Sequent::new((**b).clone(), goal.rhs.clone());
            if let Some(d1) = self.search(&left, depth - 1) {
                if let Some(d2) = self.search(&right, depth - 1) {
                    return Some(Derivation::Rule(
                        RuleId::UpperBound,
                        goal.clone(),
                        vec![d1, d2],
                    ));
                }
            }
        }
        // monotonicity
        if let (Formula::Diamond(op1, a), Formula::Diamond(op2, b)) = (&goal.lhs, &goal.rhs) {
            if op1 == op2 {
                let premise = Sequent::new((**a).clone(), (**b).clone());
                if let Some(d) = self.search(&premise, depth - 1) {
                    return Some(Derivation::Rule(
                        RuleId::MonoDiamond(op1.clone()),
                        goal.clone(),
                        vec![d],
                    ));
                }
            }
        }
        if let (Formula::Box(op1, a), Formula::Box(op2, b)) = (&goal.lhs, &goal.rhs) {
            if op1 == op2 {
                let premise = Sequent::new((**a).clone(), (**b).clone());
                if let Some(d) = self.search(&premise, depth - 1) {
                    return Some(Derivation::Rule(
                        RuleId::MonoBox(op1.clone()),
                        goal.clone(),
                        vec![d],
                    ));
                }
            }
        }
        // antitonicity
        if let (Formula::ModalNeg(op1, a), Formula::ModalNeg(op2, b)) = (&goal.lhs, &goal.rhs) {
            if op1 == op2 {
                let premise = Sequent::new((**b).clone(), (**a).clone());
                if let Some(d) = self.search(&premise, depth - 1) {
                    return Some(Derivation::Rule(
                        RuleId::Antitone(op1.clone()),
                        goal.clone(),
                        vec![d],
                    ));
                }
            }
        }
        // cut over a finite pool of candidates
        let candidates: Vec<Formula> = self.cut_pool.clone();
        for mid in candidates {
            if mid == goal.lhs || mid == goal.rhs {
                continue;
            }
            let left = Sequent::new(goal.lhs.clone(), mid.clone());
            let right = Sequent::new(mid, goal.rhs.clone());
            if let Some(d1) = self.search(&left, depth - 1) {
                if let Some(d2) = self.search(&right, depth - 1) {
                    return Some(Derivation::Rule(RuleId::Cut, goal.clone(), vec![d1, d2]));
                }
            }
        }
        None
    }
}

/// Backward-chaining search for a derivation of `goal` from the theory and
/// the axiom schemas, to the given rule depth. `Unknown` is not a
/// refutation.
pub fn bounded_derives(
    alg: &Algebra,
    theory: &Theory,
    goal: &Sequent,
    max_depth: usize,
) -> DeriveOutcome {
    let mut cut_pool: Vec<Formula> = Vec::new();
    for s in &theory.sequents {
        Searcher::subformulas(&s.lhs, &mut cut_pool);
        Searcher::subformulas(&s.rhs, &mut cut_pool);
    }
    Searcher::subformulas(&goal.lhs, &mut cut_pool);
    Searcher::subformulas(&goal.rhs, &mut cut_pool);
    for e in alg.lattice().elems() {
        cut_pool.push(Formula::cst(alg.lattice().name(e)));
    }
    cut_pool.sort();
    cut_pool.dedup();
    let mut searcher = Searcher {
        alg,
        theory,
        cut_pool,
        memo: BTreeMap::new(),
    };
    match searcher.search(goal, max_depth) {
        Some(d) => DeriveOutcome::Proved(d),
        None => DeriveOutcome::Unknown,
    }
}

/// Independently re-validates every node of a derivation tree against the
/// schema matcher, the theory, and the rule shapes.
pub fn check_derivation(alg: &Algebra, theory: &Theory, deriv: &Derivation) -> Result<()> {
    check_node(alg, theory, deriv, "root")
}

fn check_node(alg: &Algebra, theory: &Theory, deriv: &Derivation, path: &str) -> Result<()> {
    let bad = |reason: String| Error::BadNode {
        path: path.to_string(),
        reason,
    };
    match deriv {
        Derivation::Axiom(id, s) => {
            let candidates = candidate_schemas(alg, s);
            if candidates.contains(id) {
                Ok(())
            } else if candidates.is_empty() {
                Err(bad(format!("`{s}` instantiates no axiom schema")))
            } else {
                Err(bad(format!(
                    "`{s}` does not instantiate schema {}",
                    id.name()
                )))
            }
        }
        Derivation::Hypothesis(i, s) => {
            if theory.sequents.get(*i) == Some(s) {
                Ok(())
            } else {
                Err(bad(format!("`{s}` is not hypothesis #{i} of the theory")))
            }
        }
        Derivation::Rule(rule, conclusion, children) => {
            for (i, c) in children.iter().enumerate() {
                check_node(alg, theory, c, &format!("{path}.{i}"))?;
            }
            let prem: Vec<&Sequent> = children.iter().map(|c| c.conclusion()).collect();
            let ok = match rule {
                RuleId::Cut => {
                    prem.len() == 2
                        && prem[0].lhs == conclusion.lhs
                        && prem[0].rhs == prem[1].lhs
                        && prem[1].rhs == conclusion.rhs
                }
                RuleId::LowerBound => {
                    prem.len() == 2
                        && matches!(&conclusion.rhs, Formula::Meet(a, b)
                            if prem[0] == &Sequent::new(conclusion.lhs.clone(), (**a).clone())
                            && prem[1] == &Sequent::new(conclusion.lhs.clone(), (**b).clone()))
                }
                RuleId::UpperBound => {
                    prem.len() == 2
                        && matches!(&conclusion.lhs, Formula::Join(a, b)
                            if prem[0] == &Sequent::new((**a).clone(), conclusion.rhs.clone())
                            && prem[1] == &Sequent::new((**b).clone(), conclusion.rhs.clone()))
                }
                RuleId::MonoDiamond(op) => {
                    prem.len() == 1
                        && matches!((&conclusion.lhs, &conclusion.rhs),
                            (Formula::Diamond(o1, a), Formula::Diamond(o2, b))
                            if o1 == op && o2 == op
                            && prem[0] == &Sequent::new((**a).clone(), (**b).clone()))
                }
                RuleId::MonoBox(op) => {
                    prem.len() == 1
                        && matches!((&conclusion.lhs, &conclusion.rhs),
                            (Formula::Box(o1, a), Formula::Box(o2, b))
                            if o1 == op && o2 == op
                            && prem[0] == &Sequent::new((**a).clone(), (**b).clone()))
                }
                RuleId::Antitone(op) => {
                    prem.len() == 1
                        && matches!((&conclusion.lhs, &conclusion.rhs),
                            (Formula::ModalNeg(o1, a), Formula::ModalNeg(o2, b))
                            if o1 == op && o2 == op
                            && prem[0] == &Sequent::new((**b).clone(), (**a).clone()))
                }
            };
            if ok {
                Ok(())
            } else {
                Err(bad(format!(
                    "premises do not fit rule {} for `{conclusion}`",
                    rule.name()
                )))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// soundness audit
// ---------------------------------------------------------------------------

/// One soundness failure: a falsifiable axiom or a rule instance with a
/// model of the premises that breaks the conclusion.
#[derive(Debug, Clone)]
pub struct SoundnessViolation {
    pub what: String,
    pub witness: String,
}

/// Outcome of [`audit_soundness`].
#[derive(Debug, Clone, Default)]
pub struct SoundnessReport {
    pub axioms_checked: usize,
    pub rule_instances_checked: usize,
    pub substitution_instances_checked: usize,
    pub violations: Vec<SoundnessViolation>,
}

impl SoundnessReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn vars_of(s: &Sequent) -> Vec<String> {
    let mut vars = Vec::new();
    s.collect_vars(&mut vars);
    vars.sort();
    vars.dedup();
    vars
}

fn vars_of_many(seqs: &[&Sequent]) -> Vec<String> {
    let mut vars = Vec::new();
    for s in seqs {
        s.collect_vars(&mut vars);
    }
    vars.sort();
    vars.dedup();
    vars
}

/// Checks that every axiom of the system is a tautology and that sampled
/// instances of each inference rule are model-preserving: every valuation
/// satisfying all premises satisfies the conclusion. Substitution, which
/// preserves tautologies rather than models, is audited separately on
/// sampled axiom instances.
pub fn audit_soundness(
    alg: &Algebra,
    system: &SequentSystem,
    samples_per_rule: usize,
    seed: u64,
    budget: u64,
) -> Result<SoundnessReport> {
    let mut report = SoundnessReport::default();
    for (id, axiom) in &system.axioms {
        let vars = vars_of(axiom);
        report.axioms_checked += 1;
        if !is_tautology(axiom, alg, &vars, budget)? {
            let witness = crate::eval::find_counterexample(axiom, alg, &vars, budget)?
                .map(|v| v.render(alg))
                .unwrap_or_default();
            report.violations.push(SoundnessViolation {
                what: format!("axiom {}: {axiom}", id.name()),
                witness,
            });
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let pool = &system.pool;
    let pick = |rng: &mut StdRng| pool[rng.random_range(0..pool.len())].clone();
    let diamonds: Vec<String> = alg.diamond_ops().map(|s| s.to_string()).collect();
    let boxes: Vec<String> = alg.box_ops().map(|s| s.to_string()).collect();
    let negations: Vec<String> = alg.negation_ops().map(|s| s.to_string()).collect();
    for _ in 0..samples_per_rule {
        // cut
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let instance = (
            RuleId::Cut,
            vec![
                Sequent::new(a.clone(), b.clone()),
                Sequent::new(b.clone(), c.clone()),
            ],
            Sequent::new(a.clone(), c.clone()),
        );
        audit_rule_instance(alg, &instance, budget, &mut report)?;
        // lower bound
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let instance = (
            RuleId::LowerBound,
            vec![
                Sequent::new(a.clone(), b.clone()),
                Sequent::new(a.clone(), c.clone()),
            ],
            Sequent::new(a.clone(), Formula::meet(b.clone(), c.clone())),
        );
        audit_rule_instance(alg, &instance, budget, &mut report)?;
        // upper bound
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let instance = (
            RuleId::UpperBound,
            vec![
                Sequent::new(a.clone(), c.clone()),
                Sequent::new(b.clone(), c.clone()),
            ],
            Sequent::new(Formula::join(a.clone(), b.clone()), c.clone()),
        );
        audit_rule_instance(alg, &instance, budget, &mut report)?;
        // monotonicity and antitonicity for every designated operator
        let (a, b) = (pick(&mut rng), pick(&mut rng));
        for op in &diamonds {
            let instance = (
                RuleId::MonoDiamond(op.clone()),
                vec![Sequent::new(a.clone(), b.clone())],
                Sequent::new(
                    Formula::diamond(op, a.clone()),
                    Formula::diamond(op, b.clone()),
                ),
            );
            audit_rule_instance(alg, &instance, budget, &mut report)?;
        }
        for op in &boxes {
            let instance = (
                RuleId::MonoBox(op.clone()),
                vec![Sequent::new(a.clone(), b.clone())],
                Sequent::new(Formula::boxed(op, a.clone()), Formula::boxed(op, b.clone())),
            );
            audit_rule_instance(alg, &instance, budget, &mut report)?;
        }
        for op in &negations {
            let instance = (
                RuleId::Antitone(op.clone()),
                vec![Sequent::new(a.clone(), b.clone())],
                Sequent::new(
                    Formula::modal_neg(op, b.clone()),
                    Formula::modal_neg(op, a.clone()),
                ),
            );
            audit_rule_instance(alg, &instance, budget, &mut report)?;
        }
        // substitution preserves tautologies: substitute into an axiom
        let (id, axiom) = &system.axioms[rng.random_range(0..system.axioms.len())];
        let mut vars = vars_of(axiom);
        if let Some(var) = vars.pop() {
            let repl = pick(&mut rng);
            let instance = Sequent::new(
                axiom.lhs.substitute(&var, &repl),
                axiom.rhs.substitute(&var, &repl),
            );
            report.substitution_instances_checked += 1;
            let ivars = vars_of(&instance);
            if !is_tautology(&instance, alg, &ivars, budget)? {
                report.violations.push(SoundnessViolation {
                    what: format!(
                        "substitution into axiom {} gave non-tautology {instance}",
                        id.name()
                    ),
                    witness: String::new(),
                });
            }
        }
    }
    Ok(report)
}

type RuleInstance = (RuleId, Vec<Sequent>, Sequent);

fn audit_rule_instance(
    alg: &Algebra,
    instance: &RuleInstance,
    budget: u64,
    report: &mut SoundnessReport,
) -> Result<()> {
    let (rule, premises, conclusion) = instance;
    let mut all: Vec<&Sequent> = premises.iter().collect();
    all.push(conclusion);
    let vars = vars_of_many(&all);
    report.rule_instances_checked += 1;
    for v in ValuationIter::new(alg, &vars, budget)? {
        let mut premises_hold = true;
        for p in premises {
            if !sequent_satisfied(&v, p, alg)? {
                premises_hold = false;
                break;
            }
        }
        if premises_hold && !sequent_satisfied(&v, conclusion, alg)? {
            report.violations.push(SoundnessViolation {
                what: format!("rule {}: {conclusion}", rule.name()),
                witness: v.render(alg),
            });
            return Ok(());
        }
    }
    Ok(())
}

/// Lindenbaum equivalence: `Ī(φ) = Ī(ψ)` under every valuation.
pub fn lindenbaum_equiv(
    lhs: &Formula,
    rhs: &Formula,
    alg: &Algebra,
    vars: &[String],
    budget: u64,
) -> Result<bool> {
    for v in ValuationIter::new(alg, vars, budget)? {
        if crate::eval::evaluate(lhs, &v, alg)? != crate::eval::evaluate(rhs, &v, alg)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs the search and, on success, the checker and the semantic
/// entailment. `None` means the search stayed UNKNOWN.
pub fn proved_implies_entailed(
    alg: &Algebra,
    theory: &Theory,
    goal: &Sequent,
    max_depth: usize,
    budget: u64,
) -> Result<Option<bool>> {
    match bounded_derives(alg, theory, goal, max_depth) {
        DeriveOutcome::Unknown => Ok(None),
        DeriveOutcome::Proved(d) => {
            check_derivation(alg, theory, &d)?;
            let mut vars = theory.vars();
            goal.collect_vars(&mut vars);
            vars.sort();
            vars.dedup();
            Ok(Some(entails_m(theory, goal, alg, &vars, budget)?))
        }
    }
}
