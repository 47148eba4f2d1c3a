//! Valuations and their homomorphic extension, sequent satisfaction, model
//! enumeration, truth-invariance entailment, and the designated-set matrix
//! entailment it replaces.
//!
//! A sequent `φ ⊢ ψ` is satisfied by a valuation `I` when `Ī(φ) ⊑ Ī(ψ)`;
//! it is a tautology when every valuation satisfies it. `Mod_Γ` is the set
//! of valuations satisfying every sequent of a theory `Γ`, and
//! `Γ ⊨_m s` holds when every member of `Mod_Γ` satisfies `s`. All
//! enumeration is exhaustive; when the valuation space exceeds the budget
//! the operation fails with `BudgetExceeded` rather than sampling.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, IMP_OP, NOT_OP};
use crate::error::{Error, Result};
use crate::lattice::{Elem, ElemSet};
use crate::syntax::{Formula, Sequent, Theory};

/// Default cap on the number of valuations an exhaustive check may visit.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// An assignment of carrier elements to propositional variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Valuation {
    map: BTreeMap<String, Elem>,
}

impl Valuation {
    pub fn new() -> Valuation {
        Valuation {
            map: BTreeMap::new(),
        }
    }

    pub fn bind(mut self, var: &str, value: Elem) -> Valuation {
        self.map.insert(var.to_string(), value);
        self
    }

    pub fn get(&self, var: &str) -> Result<Elem> {
        self.map
            .get(var)
            .copied()
            .ok_or_else(|| Error::UnboundVariable(var.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Elem)> {
        self.map.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn render(&self, alg: &Algebra) -> String {
        let parts: Vec<String> = self
            .map
            .iter()
            .map(|(k, v)| format!("{k}={}", alg.lattice().name(*v)))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl Default for Valuation {
    fn default() -> Self {
        Self::new()
    }
}

/// Homomorphic extension `Ī`: constants evaluate to themselves, connectives
/// to their operator tables, `∧`/`∨` to the lattice operations, `->` to the
/// registered relative pseudocomplement and `~` to the registered
/// pseudocomplement.
pub fn evaluate(formula: &Formula, valuation: &Valuation, alg: &Algebra) -> Result<Elem> {
    let lat = alg.lattice();
    Ok(match formula {
        Formula::Var(v) => valuation.get(v)?,
        Formula::Const(c) => lat.elem(c).map_err(|_| Error::UnknownConstant(c.clone()))?,
        Formula::Meet(a, b) => lat.meet(evaluate(a, valuation, alg)?, evaluate(b, valuation, alg)?),
        Formula::Join(a, b) => lat.join(evaluate(a, valuation, alg)?, evaluate(b, valuation, alg)?),
        Formula::Implies(a, b) => {
            let x = evaluate(a, valuation, alg)?;
            let y = evaluate(b, valuation, alg)?;
            if !alg.has_binary(IMP_OP) {
                return Err(Error::MissingOperator(IMP_OP.to_string()));
            }
            alg.apply_binary(IMP_OP, x, y)?
        }
        Formula::PseudoNeg(a) => {
            let x = evaluate(a, valuation, alg)?;
            if !alg.has_unary(NOT_OP) {
                return Err(Error::MissingOperator(NOT_OP.to_string()));
            }
            alg.apply_unary(NOT_OP, x)?
        }
        Formula::Diamond(op, a) | Formula::Box(op, a) | Formula::ModalNeg(op, a) => {
            let x = evaluate(a, valuation, alg)?;
            if !alg.has_unary(op) {
                return Err(Error::MissingOperator(op.clone()));
            }
            alg.apply_unary(op, x)?
        }
        Formula::BinOp(op, a, b) => {
            let x = evaluate(a, valuation, alg)?;
            let y = evaluate(b, valuation, alg)?;
            if !alg.has_binary(op) {
                return Err(Error::MissingOperator(op.clone()));
            }
            alg.apply_binary(op, x, y)?
        }
    })
}

/// `Ī(lhs) ⊑ Ī(rhs)`.
pub fn sequent_satisfied(valuation: &Valuation, sequent: &Sequent, alg: &Algebra) -> Result<bool> {
    let x = evaluate(&sequent.lhs, valuation, alg)?;
    let y = evaluate(&sequent.rhs, valuation, alg)?;
    Ok(alg.lattice().leq(x, y))
}

/// Iterator over all valuations of `vars` into the carrier, in lexicographic
/// element order. Fails upfront if the space exceeds the budget.
pub struct ValuationIter<'a> {
    vars: &'a [String],
    n: usize,
    odometer: Vec<usize>,
    done: bool,
}

impl<'a> ValuationIter<'a> {
    pub fn new(alg: &Algebra, vars: &'a [String], budget: u64) -> Result<ValuationIter<'a>> {
        let n = alg.lattice().len();
        let count = (n as u128)
            .checked_pow(vars.len() as u32)
            .unwrap_or(u128::MAX);
        if count > budget as u128 {
            return Err(Error::BudgetExceeded {
                needed: count,
                budget,
            });
        }
        Ok(ValuationIter {
            vars,
            n,
            odometer: vec![0; vars.len()],
            done: false,
        })
    }
}

impl<'a> Iterator for ValuationIter<'a> {
    type Item = Valuation;

    fn next(&mut self) -> Option<Valuation> {
        if self.done {
            return None;
        }
        let mut v = Valuation::new();
        for (var, &i) in self.vars.iter().zip(&self.odometer) {
            v = v.bind(var, Elem(i));
        }
        // advance
        let mut k = 0;
        loop {
            if k == self.odometer.len() {
                self.done = true;
                break;
            }
            self.odometer[k] += 1;
            if self.odometer[k] < self.n {
                break;
            }
            self.odometer[k] = 0;
            k += 1;
        }
        Some(v)
    }
}

/// Variables of a theory plus a sequent, deduplicated and sorted.
pub fn infer_vars(theory: &Theory, sequent: Option<&Sequent>) -> Vec<String> {
    let mut vars = theory.vars();
    if let Some(s) = sequent {
        s.collect_vars(&mut vars);
    }
    vars.sort();
    vars.dedup();
    vars
}

fn check_covers(vars: &[String], theory: &Theory, sequent: Option<&Sequent>) -> Result<()> {
    let mut used = Vec::new();
    for s in &theory.sequents {
        s.collect_vars(&mut used);
    }
    if let Some(s) = sequent {
        s.collect_vars(&mut used);
    }
    for v in used {
        if !vars.contains(&v) {
            return Err(Error::UnboundVariable(v));
        }
    }
    Ok(())
}

/// `φ ⊢ ψ` satisfied by all valuations of `vars`.
pub fn is_tautology(
    sequent: &Sequent,
    alg: &Algebra,
    vars: &[String],
    budget: u64,
) -> Result<bool> {
    check_covers(vars, &Theory::default(), Some(sequent))?;
    for v in ValuationIter::new(alg, vars, budget)? {
        if !sequent_satisfied(&v, sequent, alg)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Like [`is_tautology`] but returns the first falsifying valuation.
pub fn find_counterexample(
    sequent: &Sequent,
    alg: &Algebra,
    vars: &[String],
    budget: u64,
) -> Result<Option<Valuation>> {
    check_covers(vars, &Theory::default(), Some(sequent))?;
    for v in ValuationIter::new(alg, vars, budget)? {
        if !sequent_satisfied(&v, sequent, alg)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// `Mod_Γ`: every valuation of `vars` satisfying all sequents of the theory.
pub fn models_of(
    theory: &Theory,
    alg: &Algebra,
    vars: &[String],
    budget: u64,
) -> Result<Vec<Valuation>> {
    check_covers(vars, theory, None)?;
    let mut out = Vec::new();
    for v in ValuationIter::new(alg, vars, budget)? {
        let mut ok = true;
        for s in &theory.sequents {
            if !sequent_satisfied(&v, s, alg)? {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(v);
        }
    }
    Ok(out)
}

/// `Γ ⊨_m s`: every model of the theory satisfies the sequent.
pub fn entails_m(
    theory: &Theory,
    sequent: &Sequent,
    alg: &Algebra,
    vars: &[String],
    budget: u64,
) -> Result<bool> {
    check_covers(vars, theory, Some(sequent))?;
    for v in ValuationIter::new(alg, vars, budget)? {
        let mut model = true;
        for s in &theory.sequents {
            if !sequent_satisfied(&v, s, alg)? {
                model = false;
                break;
            }
        }
        if model && !sequent_satisfied(&v, sequent, alg)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The invariant value of a formula over `Mod_Γ`: `Some(x)` when every model
/// gives the formula the value `x`, `None` when the value varies. An empty
/// model class is an error so that vacuity stays visible.
pub fn invariant_value(
    theory: &Theory,
    formula: &Formula,
    alg: &Algebra,
    vars: &[String],
    budget: u64,
) -> Result<Option<Elem>> {
    let mut all_vars = vars.to_vec();
    formula.collect_vars(&mut all_vars);
    all_vars.sort();
    all_vars.dedup();
    check_covers(&all_vars, theory, None)?;
    let mut value: Option<Elem> = None;
    let mut seen_model = false;
    for v in ValuationIter::new(alg, &all_vars, budget)? {
        let mut model = true;
        for s in &theory.sequents {
            if !sequent_satisfied(&v, s, alg)? {
                model = false;
                break;
            }
        }
        if !model {
            continue;
        }
        seen_model = true;
        let x = evaluate(formula, &v, alg)?;
        match value {
            None => value = Some(x),
            Some(prev) if prev != x => return Ok(None),
            _ => {}
        }
    }
    if !seen_model {
        return Err(Error::EmptyModelClass);
    }
    Ok(value)
}

/// Matrix entailment `φ ⊢_D ψ` relative to a theory: on every model, if the
/// left value is designated so is the right one. `D` must be upward closed.
pub fn matrix_entails(
    theory: &Theory,
    designated: ElemSet,
    sequent: &Sequent,
    alg: &Algebra,
    vars: &[String],
    budget: u64,
) -> Result<bool> {
    let lat = alg.lattice();
    for x in designated.iter() {
        for y in lat.elems() {
            if lat.leq(x, y) && !designated.contains(y) {
                return Err(Error::NotUpwardClosed {
                    lo: lat.name(x).to_string(),
                    hi: lat.name(y).to_string(),
                });
            }
        }
    }
    check_covers(vars, theory, Some(sequent))?;
    for v in ValuationIter::new(alg, vars, budget)? {
        let mut model = true;
        for s in &theory.sequents {
            if !sequent_satisfied(&v, s, alg)? {
                model = false;
                break;
            }
        }
        if !model {
            continue;
        }
        let x = evaluate(&sequent.lhs, &v, alg)?;
        if designated.contains(x) {
            let y = evaluate(&sequent.rhs, &v, alg)?;
            if !designated.contains(y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
