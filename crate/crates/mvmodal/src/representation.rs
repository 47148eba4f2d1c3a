//! The canonical set-based representation of a lattice algebra.
//!
//! For a distributive algebra the carrier `A⁺ = {↓⁺a | a ∈ A}` with `∩`/`∪`
//! and the lifted operators `o⁺ = ↓⁺ ∘ o ∘ ⋁` is isomorphic to the original
//! algebra under `↓⁺`. `A⁺` sits inside the powerset extension `P(Â)`,
//! whose distinguished image `D_K = {↓⁺x | x ∈ A}` is exactly the canonical
//! carrier; set implication and set negation on the full powerset follow
//! the classical union formula `X ⇒ Y = ⋃{Z | Z ∩ X ⊆ Y}`, and unary modal
//! operators extend to relational images over the derived frame relations.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::kripke::{derive_frame, KripkeFrame};
use crate::lattice::{Elem, ElemSet};

/// The canonical algebra `A⁺`.
#[derive(Debug, Clone)]
pub struct CanonicalAlgebra<'a> {
    algebra: &'a Algebra,
    /// `carrier[i] = ↓⁺(element i)`.
    carrier: Vec<ElemSet>,
}

/// Builds the canonical representation. Requires the distributivity
/// certificate; see [`canonical_unchecked`] for the forced variant used to
/// demonstrate violations on non-distributive inputs.
pub fn canonical(algebra: &Algebra) -> Result<CanonicalAlgebra<'_>> {
    if !algebra.lattice().is_distributive() {
        return Err(Error::NotDistributive);
    }
    Ok(canonical_unchecked(algebra))
}

/// Builds `A⁺` without the distributivity gate. On a non-distributive
/// lattice the result is not closed under unions and
/// [`verify_isomorphism`] will report the violations.
pub fn canonical_unchecked(algebra: &Algebra) -> CanonicalAlgebra<'_> {
    let lat = algebra.lattice();
    let carrier = lat.elems().map(|x| lat.down_plus(x)).collect();
    CanonicalAlgebra { algebra, carrier }
}

impl<'a> CanonicalAlgebra<'a> {
    pub fn algebra(&self) -> &Algebra {
        self.algebra
    }

    /// The carrier `{↓⁺a | a ∈ A}` in element order.
    pub fn carrier(&self) -> &[ElemSet] {
        &self.carrier
    }

    pub fn contains(&self, x: ElemSet) -> bool {
        self.carrier.contains(&x)
    }

    pub fn bottom(&self) -> ElemSet {
        self.carrier[self.algebra.lattice().bottom().0]
    }

    pub fn top(&self) -> ElemSet {
        self.carrier[self.algebra.lattice().top().0]
    }

    fn member(&self, x: ElemSet) -> Result<Elem> {
        if !self.contains(x) {
            return Err(Error::NotInCarrier(self.algebra.lattice().format_set(x)));
        }
        Ok(self.algebra.lattice().sup(x))
    }

    /// Lifted unary operator `o⁺(X) = ↓⁺(o(⋁X))`.
    pub fn apply_unary(&self, name: &str, x: ElemSet) -> Result<ElemSet> {
        let e = self.member(x)?;
        let img = self.algebra.apply_unary(name, e)?;
        Ok(self.algebra.lattice().down_plus(img))
    }

    /// Lifted binary operator `⊗⁺(X, Y) = ↓⁺(⋁X ⊗ ⋁Y)`.
    pub fn apply_binary(&self, name: &str, x: ElemSet, y: ElemSet) -> Result<ElemSet> {
        let ex = self.member(x)?;
        let ey = self.member(y)?;
        let img = self.algebra.apply_binary(name, ex, ey)?;
        Ok(self.algebra.lattice().down_plus(img))
    }

    /// Relative pseudocomplement on `A⁺` by its defining union:
    /// `X ⇀⁺ Y = ⋃{S ∈ A⁺ | S ∩ X ⊆ Y}`.
    ///
    /// The algebraic route `↓⁺(⋁X ⇀ ⋁Y)` gives the same set; tests hold the
    /// two routes against each other.
    pub fn rel_pseudocomplement(&self, x: ElemSet, y: ElemSet) -> Result<ElemSet> {
        self.member(x)?;
        self.member(y)?;
        let mut out = ElemSet::EMPTY;
        for s in &self.carrier {
            if s.inter(x).is_subset(y) {
                out = out.union(*s);
            }
        }
        Ok(out)
    }
}

/// The powerset extension `A_K = P(Â)` with the distinguished image `D_K`.
#[derive(Debug)]
pub struct PowersetExtension<'a> {
    algebra: &'a Algebra,
    frame: KripkeFrame,
    worlds: ElemSet,
}

/// Builds the powerset extension; modal operators extend as relational
/// images over the derived frame.
pub fn powerset_extension(algebra: &Algebra) -> Result<PowersetExtension<'_>> {
    if !algebra.lattice().is_distributive() {
        return Err(Error::NotDistributive);
    }
    let frame = derive_frame(algebra)?;
    let worlds = algebra.lattice().ahat();
    Ok(PowersetExtension {
        algebra,
        frame,
        worlds,
    })
}

impl<'a> PowersetExtension<'a> {
    pub fn algebra(&self) -> &Algebra {
        self.algebra
    }

    pub fn frame(&self) -> &KripkeFrame {
        &self.frame
    }

    /// The support `1_K = Â`.
    pub fn worlds(&self) -> ElemSet {
        self.worlds
    }

    /// All members of `P(Â)`.
    pub fn subsets(&self) -> impl Iterator<Item = ElemSet> {
        self.worlds.subsets()
    }

    /// `0_K = i_n(0) = {0}`.
    pub fn zero(&self) -> ElemSet {
        ElemSet::singleton(self.algebra.lattice().bottom())
    }

    /// `D_K = {i_n(x) | x ∈ A}` where `i_n = ↓⁺`.
    pub fn distinguished(&self) -> Vec<ElemSet> {
        let lat = self.algebra.lattice();
        lat.elems().map(|x| lat.down_plus(x)).collect()
    }

    /// The monotone injection `i_n = ↓⁺ : A ↪ P(Â)`.
    pub fn inject(&self, x: Elem) -> ElemSet {
        self.algebra.lattice().down_plus(x)
    }

    /// `X ⇒ Y = ⋃{Z ∈ P(Â) | Z ∩ X ⊆ Y}`.
    pub fn implies(&self, x: ElemSet, y: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for z in self.worlds.subsets() {
            if z.inter(x).is_subset(y) {
                out = out.union(z);
            }
        }
        out
    }

    /// `¬X = X ⇒ {0}`.
    pub fn neg(&self, x: ElemSet) -> ElemSet {
        self.implies(x, self.zero())
    }

    /// Relational image `⟨R_o⟩ U = {x | ∃y. (x,y) ∈ R_o ∧ y ∈ U}` for a
    /// diamond-designated operator.
    pub fn diamond_image(&self, op: &str, u: ElemSet) -> Result<ElemSet> {
        let rel = self.frame.access(op)?;
        Ok(ElemSet::from_iter(
            self.worlds
                .iter()
                .filter(|x| rel.successors(*x).inter(u) != ElemSet::EMPTY),
        ))
    }

    /// The polarity operator of the incompatibility relation of a
    /// negation-designated operator: `{x | ∀y ∈ U. (x,y) ∈ R̃_o}`.
    pub fn negation_image(&self, op: &str, u: ElemSet) -> Result<ElemSet> {
        let rel = self.frame.incompat(op)?;
        Ok(ElemSet::from_iter(
            self.worlds
                .iter()
                .filter(|x| u.is_subset(rel.successors(*x))),
        ))
    }
}

/// One violated law instance.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub law: String,
    pub arguments: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of an exhaustive law check.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn record(
        &mut self,
        law: &str,
        arguments: Vec<String>,
        lhs: String,
        rhs: String,
        holds: bool,
    ) {
        self.checked += 1;
        if !holds {
            self.violations.push(Violation {
                law: law.to_string(),
                arguments,
                lhs,
                rhs,
            });
        }
    }
}

/// Gate for the exhaustive isomorphism check.
pub const ISO_CHECK_MAX: usize = 32;

/// Exhaustively verifies that `↓⁺` is an isomorphism onto the canonical
/// carrier: bijectivity, the inverse laws against `⋁`, the meet/join
/// homomorphism laws, and `↓⁺(o(x̄)) = o⁺(↓⁺x̄)` for every registered
/// operator. Works on non-distributive inputs too, where it reports the
/// failing instances instead of erroring.
pub fn verify_isomorphism(algebra: &Algebra) -> Result<Report> {
    let lat = algebra.lattice();
    if lat.len() > ISO_CHECK_MAX {
        return Err(Error::CarrierTooLarge(lat.len(), ISO_CHECK_MAX));
    }
    let canonical = canonical_unchecked(algebra);
    let mut report = Report::default();
    // injectivity of ↓⁺
    for x in lat.elems() {
        for y in lat.elems() {
            if x.0 < y.0 {
                report.record(
                    "injectivity",
                    vec![lat.name(x).into(), lat.name(y).into()],
                    lat.format_set(lat.down_plus(x)),
                    lat.format_set(lat.down_plus(y)),
                    lat.down_plus(x) != lat.down_plus(y),
                );
            }
        }
    }
    // inverse laws
    for x in lat.elems() {
        report.record(
            "sup-after-lift identity",
            vec![lat.name(x).into()],
            lat.name(lat.sup(lat.down_plus(x))).into(),
            lat.name(x).into(),
            lat.sup(lat.down_plus(x)) == x,
        );
    }
    for s in canonical.carrier() {
        let lifted = lat.down_plus(lat.sup(*s));
        report.record(
            "lift-after-sup identity",
            vec![lat.format_set(*s)],
            lat.format_set(lifted),
            lat.format_set(*s),
            lifted == *s,
        );
    }
    // lattice homomorphism laws
    for x in lat.elems() {
        for y in lat.elems() {
            let args = vec![lat.name(x).to_string(), lat.name(y).to_string()];
            let meet_lhs = lat.down_plus(lat.meet(x, y));
            let meet_rhs = lat.down_plus(x).inter(lat.down_plus(y));
            report.record(
                "meet law: lift of meet is intersection",
                args.clone(),
                lat.format_set(meet_lhs),
                lat.format_set(meet_rhs),
                meet_lhs == meet_rhs,
            );
            let join_lhs = lat.down_plus(lat.join(x, y));
            let join_rhs = lat.down_plus(x).union(lat.down_plus(y));
            report.record(
                "join law: lift of join is union",
                args,
                lat.format_set(join_lhs),
                lat.format_set(join_rhs),
                join_lhs == join_rhs,
            );
        }
    }
    // operator homomorphism laws
    for name in algebra.unary_names() {
        for x in lat.elems() {
            let lhs = lat.down_plus(algebra.apply_unary(name, x)?);
            let rhs = canonical.apply_unary(name, lat.down_plus(x))?;
            report.record(
                &format!("unary law for `{name}`"),
                vec![lat.name(x).into()],
                lat.format_set(lhs),
                lat.format_set(rhs),
                lhs == rhs,
            );
        }
    }
    for name in algebra.binary_names() {
        for x in lat.elems() {
            for y in lat.elems() {
                let lhs = lat.down_plus(algebra.apply_binary(name, x, y)?);
                let rhs = canonical.apply_binary(name, lat.down_plus(x), lat.down_plus(y))?;
                report.record(
                    &format!("binary law for `{name}`"),
                    vec![lat.name(x).into(), lat.name(y).into()],
                    lat.format_set(lhs),
                    lat.format_set(rhs),
                    lhs == rhs,
                );
            }
        }
    }
    Ok(report)
}
