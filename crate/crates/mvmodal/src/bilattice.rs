//! Bilattices: one carrier under two complete lattice orders (truth `≤_t`
//! and knowledge `≤_k`) with an involutive truth negation `¬` and
//! conflation `−`. Distributive D-bilattices additionally carry an
//! involutive order isomorphism `∂ : (B,≤_t) ≅ (B,≤_k)` satisfying
//! `− = ∂¬∂`.
//!
//! The only builtin is Belnap's four-valued bilattice `{f, bot, top, t}`
//! (`bot` unknown, `top` inconsistent): the smallest nontrivial distributive
//! bilattice. Conflation is an additive normal modal operator for `≤_t` and
//! `¬` is one for `≤_k`, which is what makes the pair usable as selfadjoint
//! belief modalities on either side.

use crate::algebra::{Algebra, ModalRole, IMP_OP, NOT_OP};
use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice};

/// A distributive bilattice with verified D-bilattice structure.
#[derive(Debug, Clone)]
pub struct Bilattice {
    /// Shared element names; both lattices index the carrier identically.
    truth: Lattice,
    knowledge: Lattice,
    neg: Vec<Elem>,
    conflation: Vec<Elem>,
    duality: Vec<Elem>,
}

impl Bilattice {
    /// Assembles and validates a bilattice from its two orders and `¬`.
    /// Conflation is derived as `∂¬∂` after the duality search.
    pub fn new(truth: Lattice, knowledge: Lattice, neg: Vec<Elem>) -> Result<Bilattice> {
        let n = truth.len();
        if knowledge.len() != n {
            return Err(Error::InvalidParameter(
                "truth and knowledge lattices differ in size".into(),
            ));
        }
        for e in truth.elems() {
            if truth.name(e) != knowledge.name(e) {
                return Err(Error::InvalidParameter(format!(
                    "element order mismatch between the two lattices at `{}`",
                    truth.name(e)
                )));
            }
        }
        let duality = find_duality(&truth, &knowledge, &neg)?;
        let conflation: Vec<Elem> = (0..n).map(|i| duality[neg[duality[i].0].0]).collect();
        let b = Bilattice {
            truth,
            knowledge,
            neg,
            conflation,
            duality,
        };
        b.validate()?;
        Ok(b)
    }

    /// Checks the bilattice laws; lists every violation found.
    pub fn validate(&self) -> Result<()> {
        let mut bad = Vec::new();
        let t = &self.truth;
        let k = &self.knowledge;
        if !t.is_distributive() {
            bad.push("truth lattice not distributive".to_string());
        }
        if !k.is_distributive() {
            bad.push("knowledge lattice not distributive".to_string());
        }
        let neg = |x: Elem| self.neg[x.0];
        let conf = |x: Elem| self.conflation[x.0];
        let dual = |x: Elem| self.duality[x.0];
        for x in t.elems() {
            if neg(neg(x)) != x {
                bad.push(format!("¬¬{} ≠ {0}", t.name(x)));
            }
            if conf(conf(x)) != x {
                bad.push(format!("−−{} ≠ {0}", t.name(x)));
            }
            if dual(dual(x)) != x {
                bad.push(format!("∂∂{} ≠ {0}", t.name(x)));
            }
            if neg(conf(x)) != conf(neg(x)) {
                bad.push(format!("−¬ ≠ ¬− at {}", t.name(x)));
            }
            if conf(x) != dual(neg(dual(x))) {
                bad.push(format!("− ≠ ∂¬∂ at {}", t.name(x)));
            }
            // perfect D-bilattice: ¬ = ¬_t ∘ −
            let pc = t.rel_pseudocomplement_raw(conf(x), t.bottom());
            if neg(x) != pc {
                bad.push(format!("¬ ≠ ¬_t∘− at {}", t.name(x)));
            }
            for y in t.elems() {
                if neg(t.meet(x, y)) != t.join(neg(x), neg(y)) {
                    bad.push(format!(
                        "¬ not (∧,∨)-reversing at ({},{})",
                        t.name(x),
                        t.name(y)
                    ));
                }
                if neg(k.meet(x, y)) != k.meet(neg(x), neg(y)) {
                    bad.push(format!(
                        "¬ not ⊗-preserving at ({},{})",
                        t.name(x),
                        t.name(y)
                    ));
                }
                if neg(k.join(x, y)) != k.join(neg(x), neg(y)) {
                    bad.push(format!(
                        "¬ not ⊕-preserving at ({},{})",
                        t.name(x),
                        t.name(y)
                    ));
                }
                if t.leq(x, y) != k.leq(dual(x), dual(y)) {
                    bad.push(format!(
                        "∂ not an order isomorphism at ({},{})",
                        t.name(x),
                        t.name(y)
                    ));
                }
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "bilattice laws violated: {}",
                bad.join("; ")
            )))
        }
    }

    pub fn truth_lattice(&self) -> &Lattice {
        &self.truth
    }

    pub fn knowledge_lattice(&self) -> &Lattice {
        &self.knowledge
    }

    pub fn neg_table(&self) -> &[Elem] {
        &self.neg
    }

    pub fn conflation_table(&self) -> &[Elem] {
        &self.conflation
    }

    /// The involutive order isomorphism `(B,≤_t) ≅ (B,≤_k)`.
    pub fn duality_table(&self) -> &[Elem] {
        &self.duality
    }

    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x.0]
    }

    pub fn conflation(&self, x: Elem) -> Elem {
        self.conflation[x.0]
    }

    pub fn duality(&self, x: Elem) -> Elem {
        self.duality[x.0]
    }

    fn binary_table(lat: &Lattice, f: impl Fn(Elem, Elem) -> Elem) -> Vec<Elem> {
        let mut out = Vec::with_capacity(lat.len() * lat.len());
        for x in lat.elems() {
            for y in lat.elems() {
                out.push(f(x, y));
            }
        }
        out
    }

    /// The algebra over the truth order. Conflation and the autoepistemic
    /// operator are designated diamonds (conflation also a box, being
    /// selfadjoint); `¬` is designated a modal negation. Knowledge-side
    /// operators are available under `meetk`, `joink`, `impk`, `negk`.
    pub fn truth_algebra(&self) -> Algebra {
        let t = &self.truth;
        let k = &self.knowledge;
        let mut alg = Algebra::new(t.clone());
        alg.attach_unary("conf", self.conflation.clone(), ModalRole::DIAMOND_BOX)
            .unwrap();
        alg.attach_unary("mu", self.moore_table(), ModalRole::DIAMOND)
            .unwrap();
        alg.attach_unary("neg", self.neg.clone(), ModalRole::NEGATION)
            .unwrap();
        let not: Vec<Elem> = t
            .elems()
            .map(|x| t.rel_pseudocomplement_raw(x, t.bottom()))
            .collect();
        alg.attach_unary(NOT_OP, not, ModalRole::NONE).unwrap();
        let negk: Vec<Elem> = k
            .elems()
            .map(|x| k.rel_pseudocomplement_raw(x, k.bottom()))
            .collect();
        alg.attach_unary("negk", negk, ModalRole::NONE).unwrap();
        alg.attach_unary("dual", self.duality.clone(), ModalRole::NONE)
            .unwrap();
        alg.attach_binary(
            IMP_OP,
            Self::binary_table(t, |x, y| t.rel_pseudocomplement_raw(x, y)),
        )
        .unwrap();
        alg.attach_binary(
            "impk",
            Self::binary_table(k, |x, y| k.rel_pseudocomplement_raw(x, y)),
        )
        .unwrap();
        alg.attach_binary("meetk", Self::binary_table(k, |x, y| k.meet(x, y)))
            .unwrap();
        alg.attach_binary("joink", Self::binary_table(k, |x, y| k.join(x, y)))
            .unwrap();
        alg
    }

    /// The algebra over the knowledge order, the `∂`-dual view: here `¬` is
    /// the designated diamond/box and conflation the modal negation; the
    /// structural slots hold the knowledge-order Heyting operators.
    pub fn knowledge_algebra(&self) -> Algebra {
        let t = &self.truth;
        let k = &self.knowledge;
        let mut alg = Algebra::new(k.clone());
        alg.attach_unary("neg", self.neg.clone(), ModalRole::DIAMOND_BOX)
            .unwrap();
        alg.attach_unary("conf", self.conflation.clone(), ModalRole::NEGATION)
            .unwrap();
        let not: Vec<Elem> = k
            .elems()
            .map(|x| k.rel_pseudocomplement_raw(x, k.bottom()))
            .collect();
        alg.attach_unary(NOT_OP, not, ModalRole::NONE).unwrap();
        let nott: Vec<Elem> = t
            .elems()
            .map(|x| t.rel_pseudocomplement_raw(x, t.bottom()))
            .collect();
        alg.attach_unary("nott", nott, ModalRole::NONE).unwrap();
        alg.attach_unary("mu", self.moore_table(), ModalRole::NONE)
            .unwrap();
        alg.attach_unary("dual", self.duality.clone(), ModalRole::NONE)
            .unwrap();
        alg.attach_binary(
            IMP_OP,
            Self::binary_table(k, |x, y| k.rel_pseudocomplement_raw(x, y)),
        )
        .unwrap();
        alg.attach_binary(
            "impt",
            Self::binary_table(t, |x, y| t.rel_pseudocomplement_raw(x, y)),
        )
        .unwrap();
        alg.attach_binary("meett", Self::binary_table(t, |x, y| t.meet(x, y)))
            .unwrap();
        alg.attach_binary("joint", Self::binary_table(t, |x, y| t.join(x, y)))
            .unwrap();
        alg
    }

    /// Moore's autoepistemic operator: `t` on `{top, t}`, `f` elsewhere.
    fn moore_table(&self) -> Vec<Elem> {
        let t = &self.truth;
        let k = &self.knowledge;
        let top_t = t.top();
        let bot_t = t.bottom();
        let top_k = k.top();
        t.elems()
            .map(|x| {
                if x == top_t || x == top_k {
                    top_t
                } else {
                    bot_t
                }
            })
            .collect()
    }
}

/// Searches for the involutive order isomorphism `(B,≤_t) ≅ (B,≤_k)` that
/// satisfies `∂∘∂ = id` and `∂¬∂ = ¬-dual conflation` consistency (the
/// conflation it induces must commute with `¬`). Exactly one candidate must
/// survive.
fn find_duality(truth: &Lattice, knowledge: &Lattice, neg: &[Elem]) -> Result<Vec<Elem>> {
    let n = truth.len();
    if n > 8 {
        return Err(Error::CarrierTooLarge(n, 8));
    }
    let mut found: Vec<Vec<Elem>> = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        // order isomorphism
        for x in 0..n {
            for y in 0..n {
                if truth.leq(Elem(x), Elem(y)) != knowledge.leq(Elem(p[x]), Elem(p[y])) {
                    return;
                }
            }
        }
        // involution
        if (0..n).any(|x| p[p[x]] != x) {
            return;
        }
        // the induced conflation − = ∂¬∂ must commute with ¬
        let conf: Vec<usize> = (0..n).map(|x| p[neg[p[x]].0]).collect();
        if (0..n).any(|x| conf[neg[x].0] != neg[conf[x]].0) {
            return;
        }
        found.push(p.iter().map(|&i| Elem(i)).collect());
    });
    match found.len() {
        0 => Err(Error::NoDuality),
        1 => Ok(found.pop().unwrap()),
        k => Err(Error::AmbiguousDuality(k)),
    }
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// Belnap's four-valued bilattice. Truth order `f ⊑ bot ⊑ t`, `f ⊑ top ⊑ t`;
/// knowledge order `bot ⊑ f ⊑ top`, `bot ⊑ t ⊑ top`; `¬` switches `f`/`t`,
/// conflation switches `bot`/`top`.
pub fn belnap() -> Bilattice {
    let truth = Lattice::from_covers(
        &["f", "bot", "top", "t"],
        &[("f", "bot"), ("f", "top"), ("bot", "t"), ("top", "t")],
    )
    .expect("Belnap truth order");
    let knowledge = Lattice::from_covers(
        &["f", "bot", "top", "t"],
        &[("bot", "f"), ("bot", "t"), ("f", "top"), ("t", "top")],
    )
    .expect("Belnap knowledge order");
    let neg = ["t", "bot", "top", "f"]
        .iter()
        .map(|n| truth.elem(n).unwrap())
        .collect();
    Bilattice::new(truth, knowledge, neg).expect("Belnap is a perfect D-bilattice")
}
