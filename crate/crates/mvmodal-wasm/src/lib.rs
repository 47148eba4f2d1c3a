//! Browser bindings for the interactive explorer page in `www/`.
//!
//! Three operations are exposed: sequent checking with counterexamples,
//! frame derivation (with layered coordinates for the SVG renderer), and a
//! per-valuation table showing the representation identity
//! `‖φ‖ = ↓⁺ Ī(φ)`. Everything returns JSON strings; errors come back as
//! `{"error": ...}` so the page can render them inline.

use serde_json::json;
use wasm_bindgen::prelude::*;

use mvmodal::algebra::{builtin, Algebra};
use mvmodal::eval::{evaluate, find_counterexample, infer_vars, ValuationIter, DEFAULT_BUDGET};
use mvmodal::kripke::{derive_frame, KripkeModel};
use mvmodal::lattice::Elem;
use mvmodal::syntax::{parse_formula, parse_sequent, Theory};

const ALGEBRAS: &[&str] = &[
    "belnap-t",
    "belnap-k",
    "bool2",
    "chain:3",
    "chain:4",
    "chain:5",
    "pofuzzy:5:2",
    "pofuzzy:7:2,4",
];

fn err_json(e: impl std::fmt::Display) -> String {
    json!({ "error": e.to_string() }).to_string()
}

fn load(name: &str) -> Result<Algebra, String> {
    builtin(name).map_err(err_json)
}

/// Names the page offers in its algebra picker.
#[wasm_bindgen]
pub fn algebra_names() -> String {
    json!(ALGEBRAS).to_string()
}

/// Summary of an algebra: elements, covers, operator tables and classes.
#[wasm_bindgen]
pub fn algebra_info(name: &str) -> String {
    let alg = match load(name) {
        Ok(a) => a,
        Err(e) => return e,
    };
    let lat = alg.lattice();
    let covers: Vec<[String; 2]> = lat
        .poset()
        .covers()
        .into_iter()
        .map(|(x, y)| [lat.name(x).to_string(), lat.name(y).to_string()])
        .collect();
    let unary: Vec<_> = alg
        .unary_names()
        .map(|op| {
            let table: Vec<[String; 2]> = lat
                .elems()
                .map(|x| {
                    [
                        lat.name(x).to_string(),
                        lat.name(alg.apply_unary(op, x).unwrap()).to_string(),
                    ]
                })
                .collect();
            let class = alg.classify(op).unwrap();
            json!({
                "name": op,
                "table": table,
                "class": class,
                "role": alg.role(op),
            })
        })
        .collect();
    json!({
        "elements": lat.elems().map(|e| lat.name(e).to_string()).collect::<Vec<_>>(),
        "bottom": lat.name(lat.bottom()),
        "top": lat.name(lat.top()),
        "distributive": lat.is_distributive(),
        "covers": covers,
        "unary": unary,
        "binary": alg.binary_names().collect::<Vec<_>>(),
    })
    .to_string()
}

/// Decides `lhs |- rhs` over all valuations; returns the verdict and, when
/// falsifiable, the first counterexample valuation.
#[wasm_bindgen]
pub fn check_sequent(algebra: &str, sequent: &str) -> String {
    let alg = match load(algebra) {
        Ok(a) => a,
        Err(e) => return e,
    };
    let s = match parse_sequent(sequent, &alg) {
        Ok(s) => s,
        Err(e) => return err_json(e),
    };
    let vars = infer_vars(&Theory::default(), Some(&s));
    match find_counterexample(&s, &alg, &vars, DEFAULT_BUDGET) {
        Err(e) => err_json(e),
        Ok(None) => json!({ "verdict": "TAUTOLOGY", "vars": vars }).to_string(),
        Ok(Some(v)) => {
            let binding: serde_json::Map<String, serde_json::Value> = v
                .iter()
                .map(|(k, e)| (k.to_string(), json!(alg.lattice().name(e))))
                .collect();
            json!({ "verdict": "COUNTEREXAMPLE", "valuation": binding }).to_string()
        }
    }
}

/// Frame data for the SVG renderer: worlds with layer coordinates (layer =
/// longest order-path from the bottom), order covers, and each derived
/// relation's pairs.
#[wasm_bindgen]
pub fn frame_info(algebra: &str) -> String {
    let alg = match load(algebra) {
        Ok(a) => a,
        Err(e) => return e,
    };
    let lat = alg.lattice();
    let frame = match derive_frame(&alg) {
        Ok(f) => f,
        Err(e) => return err_json(e),
    };
    let worlds: Vec<Elem> = frame.worlds().iter().collect();
    fn layer_of(lat: &mvmodal::lattice::Lattice, worlds: &[Elem], w: Elem) -> usize {
        worlds
            .iter()
            .filter(|x| **x != w && lat.leq(**x, w))
            .map(|x| 1 + layer_of(lat, worlds, *x))
            .max()
            .unwrap_or(0)
    }
    let nodes: Vec<_> = worlds
        .iter()
        .map(|w| {
            json!({
                "name": lat.name(*w),
                "layer": layer_of(lat, &worlds, *w),
                "trivial": *w == lat.bottom(),
            })
        })
        .collect();
    let covers: Vec<[String; 2]> = lat
        .poset()
        .covers()
        .into_iter()
        .filter(|(x, y)| frame.worlds().contains(*x) && frame.worlds().contains(*y))
        .map(|(x, y)| [lat.name(x).to_string(), lat.name(y).to_string()])
        .collect();
    let mut relations = Vec::new();
    for op in frame.access_names() {
        let pairs: Vec<[String; 2]> = frame
            .access(op)
            .unwrap()
            .pairs()
            .into_iter()
            .map(|(x, y)| [lat.name(x).to_string(), lat.name(y).to_string()])
            .collect();
        relations.push(json!({ "op": op, "kind": "access", "pairs": pairs }));
    }
    for op in frame.incompat_names() {
        let pairs: Vec<[String; 2]> = frame
            .incompat(op)
            .unwrap()
            .pairs()
            .into_iter()
            .map(|(x, y)| [lat.name(x).to_string(), lat.name(y).to_string()])
            .collect();
        relations.push(json!({ "op": op, "kind": "incompat", "pairs": pairs }));
    }
    json!({ "nodes": nodes, "covers": covers, "relations": relations }).to_string()
}

/// The representation identity, valuation by valuation: for each
/// assignment to the formula's variables, the algebraic value `Ī(φ)`, its
/// lift `↓⁺Ī(φ)`, the forcing truth set `‖φ‖`, and whether they agree.
#[wasm_bindgen]
pub fn representation_table(algebra: &str, formula: &str) -> String {
    let alg = match load(algebra) {
        Ok(a) => a,
        Err(e) => return e,
    };
    let lat = alg.lattice();
    let f = match parse_formula(formula, &alg) {
        Ok(f) => f,
        Err(e) => return err_json(e),
    };
    let frame = match derive_frame(&alg) {
        Ok(fr) => fr,
        Err(e) => return err_json(e),
    };
    let mut vars = Vec::new();
    f.collect_vars(&mut vars);
    vars.sort();
    if vars.len() > 3 {
        return err_json("use at most 3 variables in the explorer");
    }
    let mut rows = Vec::new();
    let iter = match ValuationIter::new(&alg, &vars, DEFAULT_BUDGET) {
        Ok(it) => it,
        Err(e) => return err_json(e),
    };
    for v in iter {
        let value = match evaluate(&f, &v, &alg) {
            Ok(x) => x,
            Err(e) => return err_json(e),
        };
        let model = KripkeModel::new(&alg, &frame, &v);
        let truth = match model.truth_set(&f) {
            Ok(t) => t,
            Err(e) => return err_json(e),
        };
        let lifted = lat.down_plus(value);
        let binding: serde_json::Map<String, serde_json::Value> = v
            .iter()
            .map(|(k, e)| (k.to_string(), json!(lat.name(e))))
            .collect();
        rows.push(json!({
            "valuation": binding,
            "value": lat.name(value),
            "lifted": lat.set_to_names(lifted),
            "truth_set": lat.set_to_names(truth),
            "agree": truth == lifted,
        }));
    }
    json!({ "formula": f.to_string(), "vars": vars, "rows": rows }).to_string()
}
