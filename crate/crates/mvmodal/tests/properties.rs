//! Property suites: random posets against the lattice laws, random
//! formulas against the homomorphic evaluation, the print/parse round
//! trip, and the randomized face of the representation identity.

use proptest::prelude::*;

use mvmodal::algebra::{builtin, IMP_OP, NOT_OP};
use mvmodal::eval::{entails_m, evaluate, Valuation, DEFAULT_BUDGET};
use mvmodal::kripke::{derive_frame, KripkeModel};
use mvmodal::lattice::{Elem, ElemSet, Lattice, OrderMode, Poset};
use mvmodal::syntax::{parse_formula, Formula, Sequent, Theory};

// ---------------------------------------------------------------------------
// random posets → lattice laws
// ---------------------------------------------------------------------------

fn arb_covers(n: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    // edges only go upward in index order, so the input is acyclic
    let all: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    proptest::sample::subsequence(all.clone(), 0..=all.len())
}

fn build_lattice(n: usize, covers: &[(usize, usize)]) -> Option<Lattice> {
    let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let pairs: Vec<(&str, &str)> = covers.iter().map(|&(a, b)| (refs[a], refs[b])).collect();
    let poset = Poset::new(&refs, &pairs, OrderMode::Hasse).ok()?;
    Lattice::from_poset(poset).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn random_posets_completed_to_lattices_obey_the_laws(
        covers in arb_covers(5)
    ) {
        let Some(lat) = build_lattice(5, &covers) else {
            // not every poset has all meets and joins
            return Ok(());
        };
        for x in lat.elems() {
            prop_assert_eq!(lat.meet(x, x), x);
            prop_assert_eq!(lat.join(x, x), x);
            prop_assert!(lat.leq(lat.bottom(), x));
            prop_assert!(lat.leq(x, lat.top()));
            // every element is the supremum of its lifted down-set
            prop_assert_eq!(lat.sup(lat.down_plus(x)), x);
            for y in lat.elems() {
                prop_assert_eq!(lat.meet(x, y), lat.meet(y, x));
                prop_assert_eq!(lat.join(x, y), lat.join(y, x));
                prop_assert_eq!(lat.meet(x, lat.join(x, y)), x);
                prop_assert_eq!(lat.join(x, lat.meet(x, y)), x);
                prop_assert_eq!(lat.leq(x, y), lat.meet(x, y) == x);
            }
        }
    }

    #[test]
    fn distributive_lattices_satisfy_birkhoff_and_residuation(
        covers in arb_covers(5)
    ) {
        let Some(lat) = build_lattice(5, &covers) else { return Ok(()); };
        if !lat.is_distributive() {
            return Ok(());
        }
        for x in lat.elems() {
            for y in lat.elems() {
                prop_assert_eq!(
                    lat.down_plus(lat.meet(x, y)),
                    lat.down_plus(x).inter(lat.down_plus(y))
                );
                prop_assert_eq!(
                    lat.down_plus(lat.join(x, y)),
                    lat.down_plus(x).union(lat.down_plus(y))
                );
                let imp = lat.rel_pseudocomplement(x, y).unwrap();
                for z in lat.elems() {
                    prop_assert_eq!(lat.leq(lat.meet(z, x), y), lat.leq(z, imp));
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// random formulas over the Belnap truth algebra
// ---------------------------------------------------------------------------

fn arb_formula(depth: u32) -> impl Strategy<Value = Formula> {
    let atom = prop_oneof![
        prop_oneof![Just("p"), Just("q"), Just("r")].prop_map(Formula::var),
        prop_oneof![Just("f"), Just("bot"), Just("top"), Just("t")].prop_map(Formula::cst),
    ];
    atom.prop_recursive(depth, 64, 8, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::meet(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::join(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::binop("meetk", a, b)),
            inner.clone().prop_map(Formula::pneg),
            inner.clone().prop_map(|a| Formula::diamond("conf", a)),
            inner.clone().prop_map(|a| Formula::diamond("mu", a)),
            inner.clone().prop_map(|a| Formula::boxed("conf", a)),
            inner.prop_map(|a| Formula::modal_neg("neg", a)),
        ]
    })
}

fn arb_valuation_belnap() -> impl Strategy<Value = Valuation> {
    (0..4usize, 0..4usize, 0..4usize).prop_map(|(p, q, r)| {
        Valuation::new()
            .bind("p", Elem(p))
            .bind("q", Elem(q))
            .bind("r", Elem(r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn print_parse_round_trip(f in arb_formula(5)) {
        let alg = builtin("belnap-t").unwrap();
        let printed = f.to_string();
        let back = parse_formula(&printed, &alg).unwrap();
        prop_assert_eq!(f, back, "printed as `{}`", printed);
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in arb_formula(5), seed in 0usize..64) {
        let alg = builtin("belnap-t").unwrap();
        let lat = alg.lattice();
        let n = lat.len();
        let v = Valuation::new()
            .bind("p", Elem(seed % n))
            .bind("q", Elem((seed / n) % n))
            .bind("r", Elem((seed / (n * n)) % n));
        // the composite value equals the table applied to the parts
        let whole = evaluate(&f, &v, &alg).unwrap();
        let expected = match &f {
            Formula::Meet(a, b) => lat.meet(
                evaluate(a, &v, &alg).unwrap(),
                evaluate(b, &v, &alg).unwrap(),
            ),
            Formula::Join(a, b) => lat.join(
                evaluate(a, &v, &alg).unwrap(),
                evaluate(b, &v, &alg).unwrap(),
            ),
            Formula::Implies(a, b) => alg
                .apply_binary(IMP_OP,
                    evaluate(a, &v, &alg).unwrap(),
                    evaluate(b, &v, &alg).unwrap())
                .unwrap(),
            Formula::BinOp(op, a, b) => alg
                .apply_binary(op,
                    evaluate(a, &v, &alg).unwrap(),
                    evaluate(b, &v, &alg).unwrap())
                .unwrap(),
            Formula::PseudoNeg(a) => alg
                .apply_unary(NOT_OP, evaluate(a, &v, &alg).unwrap())
                .unwrap(),
            Formula::Diamond(op, a) | Formula::Box(op, a) | Formula::ModalNeg(op, a) => alg
                .apply_unary(op, evaluate(a, &v, &alg).unwrap())
                .unwrap(),
            Formula::Var(_) | Formula::Const(_) => whole,
        };
        prop_assert_eq!(whole, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    // the randomized face of the representation identity: depth-4 formulas
    // under arbitrary valuations
    #[test]
    fn representation_identity_randomized(f in arb_formula(4), v in arb_valuation_belnap()) {
        let alg = builtin("belnap-t").unwrap();
        let frame = derive_frame(&alg).unwrap();
        let model = KripkeModel::new(&alg, &frame, &v);
        let truth = model.truth_set(&f).unwrap();
        let value = evaluate(&f, &v, &alg).unwrap();
        prop_assert_eq!(truth, alg.lattice().down_plus(value), "formula {}", f);
        // truth sets are hereditary members of the canonical carrier
        prop_assert!(truth.contains(alg.lattice().bottom()));
    }

    #[test]
    fn entailment_is_monotone_in_the_theory(
        lhs in arb_formula(2),
        rhs in arb_formula(2),
        extra in arb_formula(2),
    ) {
        let alg = builtin("belnap-t").unwrap();
        let s = Sequent::new(Formula::var("p"), Formula::var("q"));
        let small = Theory::new(vec![Sequent::new(lhs.clone(), rhs.clone())]);
        let big = Theory::new(vec![
            Sequent::new(lhs, rhs),
            Sequent::new(extra.clone(), extra),
        ]);
        let mut vars = small.vars();
        let mut more = big.vars();
        vars.append(&mut more);
        s.collect_vars(&mut vars);
        vars.sort();
        vars.dedup();
        let weak = entails_m(&small, &s, &alg, &vars, DEFAULT_BUDGET).unwrap();
        let strong = entails_m(&big, &s, &alg, &vars, DEFAULT_BUDGET).unwrap();
        prop_assert!(!weak || strong, "Γ ⊆ Θ must preserve ⊨_m");
    }
}

// truth sets always land in the canonical carrier
#[test]
fn truth_sets_are_canonical_members() {
    let alg = builtin("belnap-t").unwrap();
    let frame = derive_frame(&alg).unwrap();
    let can = mvmodal::representation::canonical(&alg).unwrap();
    let texts = [
        "p -> (q \\/ <conf>p)",
        "!neg (p /\\ <mu>q)",
        "~(p {meetk} q)",
        "[conf]<conf>p",
    ];
    for p in 0..4usize {
        for q in 0..4usize {
            let v = Valuation::new().bind("p", Elem(p)).bind("q", Elem(q));
            let model = KripkeModel::new(&alg, &frame, &v);
            for text in texts {
                let f = parse_formula(text, &alg).unwrap();
                let ts: ElemSet = model.truth_set(&f).unwrap();
                assert!(can.contains(ts), "{text} gave a non-canonical truth set");
            }
        }
    }
}
