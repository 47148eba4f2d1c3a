//! Command-line surface for batch verification and export.
//!
//! Exit codes: 0 on success, 1 on a semantic violation or counterexample,
//! 2 on usage or I/O errors.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{builtin, Algebra, AlgebraSpec, BUILTIN_NAMES};
use crate::bilattice::belnap;
use crate::error::{Error, Result};
use crate::eval::{
    entails_m, find_counterexample, infer_vars, invariant_value, models_of, DEFAULT_BUDGET,
};
use crate::gentzen::{
    audit_soundness, bounded_derives, check_derivation, generate_system, DeriveOutcome,
};
use crate::kripke::{
    belnap_diagram_check, derive_frame, derive_relation_for, verify_representation_states,
    DerivedRelation, Polarity,
};
use crate::lattice::ElemSet;
use crate::representation::{canonical, powerset_extension, verify_isomorphism, Report};
use crate::syntax::{parse_formula, parse_sequent, parse_theory, Theory};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mvmodal",
    about = "Many-valued modal logics over finite distributive lattices: \
             validation, entailment, sequent derivation, canonical set \
             representations and derived Kripke frames"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct CommonOpts {
    /// Builtin name (bool2, belnap-t, belnap-k, chain:N, pofuzzy:N:P,..)
    /// or a path to an algebra JSON file.
    #[arg(long, default_value = "belnap-t")]
    pub algebra: String,
    /// Comma-separated variable list; inferred from the input when omitted.
    #[arg(long, value_delimiter = ',')]
    pub vars: Vec<String>,
    /// Valuation budget for exhaustive enumeration.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the randomized suites.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load an algebra and check the lattice, operator and bilattice laws.
    Validate {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Print the lifted join-irreducibles and the ↓⁺ table.
    Irreducibles {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Print the canonical carrier A⁺ and the lifted operator tables.
    Represent {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Derive and print frame relations (all designated ops, or the named ones).
    Frame {
        #[command(flatten)]
        common: CommonOpts,
        /// Operator names; defaults to every designated modality.
        ops: Vec<String>,
    },
    /// Decide whether a sequent is a tautology; print a counterexample if not.
    Check {
        #[command(flatten)]
        common: CommonOpts,
        /// Sequent, e.g. "p /\ q |- p".
        sequent: String,
    },
    /// Truth-invariance entailment from a theory file.
    Entail {
        #[command(flatten)]
        common: CommonOpts,
        /// Theory file: one sequent per line, '#' comments.
        #[arg(long)]
        theory: PathBuf,
        /// Sequent to test against the theory.
        #[arg(long, conflicts_with = "formula")]
        sequent: Option<String>,
        /// Formula whose invariant value over the models is reported.
        #[arg(long)]
        formula: Option<String>,
    },
    /// Bounded backward proof search in the sequent system.
    Derive {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        theory: Option<PathBuf>,
        sequent: String,
        /// Rule-depth budget.
        #[arg(long, default_value_t = 6)]
        depth: usize,
        /// Print the derivation tree.
        #[arg(long)]
        explain: bool,
    },
    /// Run one of the verification suites.
    Verify {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(value_enum)]
        suite: Suite,
        /// Formula depth for the representation suite.
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Export the Hasse diagram or the derived frame as DOT.
    ExportDot {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(value_enum, default_value_t = DotKind::Hasse)]
        kind: DotKind,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Walk through the Belnap bilattice: tables, frames, carriers, diagram.
    DemoBelnap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Representation,
    Diagram,
    Soundness,
    Isomorphism,
    Galois,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DotKind {
    Hasse,
    Frame,
}

fn load_algebra(source: &str) -> Result<Algebra> {
    if BUILTIN_NAMES.contains(&source)
        || source.starts_with("chain:")
        || source.starts_with("pofuzzy:")
    {
        return builtin(source);
    }
    if source.ends_with(".json") || std::path::Path::new(source).exists() {
        let text = fs::read_to_string(source)?;
        let spec: AlgebraSpec = serde_json::from_str(&text)?;
        return spec.build();
    }
    builtin(source)
}

fn print_report(name: &str, report: &Report, format: Format) {
    match format {
        Format::Json => {
            println!(
                "{}",
                json!({ "suite": name, "checked": report.checked, "violations": report.violations })
            );
        }
        Format::Text => {
            println!(
                "{name}: {} checks, {} violations",
                report.checked,
                report.violations.len()
            );
            for v in &report.violations {
                println!(
                    "  VIOLATION {} at ({}): {} != {}",
                    v.law,
                    v.arguments.join(", "),
                    v.lhs,
                    v.rhs
                );
            }
        }
    }
}

/// Runs a parsed command, returning the process exit code.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Io(_)
                | Error::Json(_)
                | Error::Syntax { .. }
                | Error::UnknownConstant(_)
                | Error::UnknownModality(_)
                | Error::InvalidParameter(_) => EXIT_USAGE,
                _ => EXIT_VIOLATION,
            }
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Validate { common } => cmd_validate(&common),
        Command::Irreducibles { common } => cmd_irreducibles(&common),
        Command::Represent { common } => cmd_represent(&common),
        Command::Frame { common, ops } => cmd_frame(&common, &ops),
        Command::Check { common, sequent } => cmd_check(&common, &sequent),
        Command::Entail {
            common,
            theory,
            sequent,
            formula,
        } => cmd_entail(&common, &theory, sequent.as_deref(), formula.as_deref()),
        Command::Derive {
            common,
            theory,
            sequent,
            depth,
            explain,
        } => cmd_derive(&common, theory.as_deref(), &sequent, depth, explain),
        Command::Verify {
            common,
            suite,
            depth,
        } => cmd_verify(&common, suite, depth),
        Command::ExportDot {
            common,
            kind,
            output,
        } => cmd_export_dot(&common, kind, output.as_deref()),
        Command::DemoBelnap => cmd_demo_belnap(),
    }
}

fn cmd_validate(common: &CommonOpts) -> Result<i32> {
    let alg = load_algebra(&common.algebra)?;
    let lat = alg.lattice();
    let mut problems: Vec<String> = Vec::new();
    if !lat.is_distributive() {
        problems.push("lattice is not distributive".into());
    }
    // lattice laws
    for x in lat.elems() {
        for y in lat.elems() {
            if lat.meet(x, y) != lat.meet(y, x) || lat.join(x, y) != lat.join(y, x) {
                problems.push(format!(
                    "commutativity fails at ({}, {})",
                    lat.name(x),
                    lat.name(y)
                ));
            }
            if lat.meet(x, lat.join(x, y)) != x || lat.join(x, lat.meet(x, y)) != x {
                problems.push(format!(
                    "absorption fails at ({}, {})",
                    lat.name(x),
                    lat.name(y)
                ));
            }
            for z in lat.elems() {
                if lat.meet(x, lat.meet(y, z)) != lat.meet(lat.meet(x, y), z) {
                    problems.push(format!(
                        "meet associativity fails at ({}, {}, {})",
                        lat.name(x),
                        lat.name(y),
                        lat.name(z)
                    ));
                }
            }
        }
    }
    // operator classes re-verify and obey the metatheorems
    for op in alg.unary_names() {
        let cached = alg.classify(op)?;
        let fresh = Algebra::classify_table(lat, &alg.unary(op)?.table);
        if cached != fresh {
            problems.push(format!("cached class of `{op}` is stale"));
        }
        if cached.additive && !cached.monotone {
            problems.push(format!("`{op}` is additive but not monotone"));
        }
        if cached.modal_negation && !cached.antitone {
            problems.push(format!("`{op}` is a modal negation but not antitone"));
        }
        let role = alg.role(op);
        if role.diamond && !(cached.additive && cached.normal) {
            problems.push(format!("designated diamond `{op}` is not additive+normal"));
        }
        if role.negation && !cached.modal_negation {
            problems.push(format!(
                "designated negation `{op}` is not a modal negation"
            ));
        }
    }
    // builtin bilattice views get the full bilattice validation
    if common.algebra.starts_with("belnap") {
        belnap().validate()?;
    }
    match common.format {
        Format::Json => println!(
            "{}",
            json!({ "algebra": common.algebra, "problems": problems })
        ),
        Format::Text => {
            if problems.is_empty() {
                println!("{}: all invariants hold ({})", common.algebra, lat);
            } else {
                for p in &problems {
                    println!("VIOLATION: {p}");
                }
            }
        }
    }
    Ok(if problems.is_empty() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn cmd_irreducibles(common: &CommonOpts) -> Result<i32> {
    let alg = load_algebra(&common.algebra)?;
    let lat = alg.lattice();
    match common.format {
        Format::Json => {
            let table: Vec<_> = lat
                .elems()
                .map(|x| json!({ "element": lat.name(x), "down_plus": lat.set_to_names(lat.down_plus(x)) }))
                .collect();
            println!(
                "{}",
                json!({ "ahat": lat.set_to_names(lat.ahat()), "table": table })
            );
        }
        Format::Text => {
            println!("Ahat = {}", lat.format_set(lat.ahat()));
            for x in lat.elems() {
                println!(
                    "  down+({}) = {}",
                    lat.name(x),
                    lat.format_set(lat.down_plus(x))
                );
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_represent(common: &CommonOpts) -> Result<i32> {
    let alg = load_algebra(&common.algebra)?;
    let lat = alg.lattice();
    let can = canonical(&alg)?;
    match common.format {
        Format::Json => {
            let carrier: Vec<_> = can.carrier().iter().map(|s| lat.set_to_names(*s)).collect();
            let unary: Vec<_> = alg
                .unary_names()
                .map(|op| {
                    let rows: Vec<_> = can
                        .carrier()
                        .iter()
                        .map(|x| {
                            json!({
                                "arg": lat.set_to_names(*x),
                                "image": lat.set_to_names(can.apply_unary(op, *x).unwrap()),
                            })
                        })
                        .collect();
                    json!({ "op": op, "table": rows })
                })
                .collect();
            println!("{}", json!({ "carrier": carrier, "unary": unary }));
        }
        Format::Text => {
            println!("A+ carrier:");
            for (i, s) in can.carrier().iter().enumerate() {
                println!(
                    "  down+({}) = {}",
                    lat.name(crate::lattice::Elem(i)),
                    lat.format_set(*s)
                );
            }
            for op in alg.unary_names() {
                println!("lifted {op}:");
                for s in can.carrier() {
                    println!(
                        "  {} -> {}",
                        lat.format_set(*s),
                        lat.format_set(can.apply_unary(op, *s)?)
                    );
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_frame(common: &CommonOpts, ops: &[String]) -> Result<i32> {
    let alg = load_algebra(&common.algebra)?;
    let lat = alg.lattice();
    let mut rows: Vec<(String, &'static str, String)> = Vec::new();
    if ops.is_empty() {
        let frame = derive_frame(&alg)?;
        for op in frame.access_names() {
            rows.push((op.to_string(), "access", frame.access(op)?.render(lat)));
        }
        for op in frame.incompat_names() {
            rows.push((op.to_string(), "incompat", frame.incompat(op)?.render(lat)));
        }
    } else {
        for op in ops {
            match derive_relation_for(&alg, op)? {
                DerivedRelation::Access(rel) => rows.push((op.clone(), "access", rel.render(lat))),
                DerivedRelation::Incompat(rel) => {
                    rows.push((op.clone(), "incompat", rel.render(lat)))
                }
            }
        }
    }
    rows.sort();
    match common.format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(op, kind, rel)| json!({ "op": op, "kind": kind, "relation": rel }))
                .collect();
            println!(
                "{}",
                json!({ "worlds": lat.set_to_names(lat.ahat()), "relations": items })
            );
        }
        Format::Text => {
            println!("worlds = {}", lat.format_set(lat.ahat()));
            if rows.is_empty() {
                println!("no designated modal operators: empty relation set");
            }
            for (op, kind, rel) in &rows {
                let label = if *kind == "access" { "R" } else { "Rn" };
                println!("{label}_{op} = {rel}");
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_check(common: &CommonOpts, sequent: &str) -> Result<i32> {
    let alg = load_algebra(&common.algebra)?;
    let s = parse_sequent(sequent, &alg)?;
    let vars = if common.vars.is_empty() {
        infer_vars(&Theory::default(), Some(&s))
    } else {
        common.vars.clone()
    };
    match find_counterexample(&s, &alg, &vars, common.budget)? {
        None => {
            match common.format {
                Format::Json => println!("{}", json!({ "verdict": "TAUTOLOGY" })),
                Format::Text => println!("TAUTOLOGY"),
            }
            Ok(EXIT_OK)
        }
        Some(v) => {
            match common.format {
                Format::Json => {
                    let binding: serde_json::Map<String, serde_json::Value> = v
                        .iter()
                        .map(|(k, e)| (k.to_string(), json!(alg.lattice().name(e))))
                        .collect();
                    println!(
                        "{}",
                        json!({ "verdict": "COUNTEREXAMPLE", "valuation": binding })
                    );
                }
                Format::Text => println!("COUNTEREXAMPLE {}", v.render(&alg)),
            }
            Ok(EXIT_VIOLATION)
        }
    }
}

fn cmd_entail(
    common: &CommonOpts,
    theory_path: &std::path::Path,
    sequent: Option<&str>,
    formula: Option<&str>,
) -> Result<i32> {
    let alg = load_algebra(&common.algebra)?;
    let theory = parse_theory(&fs::read_to_string(theory_path)?, &alg)?;
    if let Some(text) = formula {
        let f = parse_formula(text, &alg)?;
        let vars = if common.vars.is_empty() {
            infer_vars(&theory, None)
        } else {
            common.vars.clone()
        };
        return match invariant_value(&theory, &f, &alg, &vars, common.budget) {
            Ok(Some(x)) => {
                match common.format {
                    Format::Json => {
                        println!("{}", json!({ "invariant": alg.lattice().name(x) }))
                    }
                    Format::Text => println!("INVARIANT {}", alg.lattice().name(x)),
                }
                Ok(EXIT_OK)
            }
            Ok(None) => {
                match common.format {
                    Format::Json => println!("{}", json!({ "invariant": null })),
                    Format::Text => println!("NONE (value varies over the models)"),
                }
                Ok(EXIT_VIOLATION)
            }
            Err(Error::EmptyModelClass) => {
                eprintln!("warning: the theory has no models");
                match common.format {
                    Format::Json => println!("{}", json!({ "invariant": null, "empty": true })),
                    Format::Text => println!("EMPTY MODEL CLASS"),
                }
                Ok(EXIT_VIOLATION)
            }
            Err(e) => Err(e),
        };
    }
    let text = sequent.ok_or_else(|| {
        Error::InvalidParameter("entail needs either --sequent or --formula".into())
    })?;
    let s = parse_sequent(text, &alg)?;
    let vars = if common.vars.is_empty() {
        infer_vars(&theory, Some(&s))
    } else {
        common.vars.clone()
    };
    let models = models_of(&theory, &alg, &vars, common.budget)?;
    if models.is_empty() {
        eprintln!("warning: the theory has no models; entailment is vacuous");
    }
    let holds = entails_m(&theory, &s, &alg, &vars, common.budget)?;
    match common.format {
        Format::Json => println!(
            "{}",
            json!({ "entails": holds, "models": models.len(), "vars": vars })
        ),
        Format::Text => println!(
            "{} ({} models over {} vars)",
            if holds { "ENTAILED" } else { "NOT ENTAILED" },
            models.len(),
            vars.len()
        ),
    }
    Ok(if holds { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_derive(
    common: &CommonOpts,
    theory_path: Option<&std::path::Path>,
    sequent: &str,
    depth: usize,
    explain: bool,
) -> Result<i32> {
    let alg = load_algebra(&common.algebra)?;
    let theory = match theory_path {
        Some(p) => parse_theory(&fs::read_to_string(p)?, &alg)?,
        None => Theory::default(),
    };
    let goal = parse_sequent(sequent, &alg)?;
    match bounded_derives(&alg, &theory, &goal, depth) {
        DeriveOutcome::Proved(d) => {
            check_derivation(&alg, &theory, &d)?;
            match common.format {
                Format::Json => println!(
                    "{}",
                    json!({ "verdict": "PROVED", "depth": d.depth(), "tree": d.render() })
                ),
                Format::Text => {
                    println!("PROVED (depth {})", d.depth());
                    if explain {
                        print!("{}", d.render());
                    }
                }
            }
            Ok(EXIT_OK)
        }
        DeriveOutcome::Unknown => {
            match common.format {
                Format::Json => println!("{}", json!({ "verdict": "UNKNOWN" })),
                Format::Text => println!("UNKNOWN (no proof within depth {depth})"),
            }
            Ok(EXIT_VIOLATION)
        }
    }
}

fn cmd_verify(common: &CommonOpts, suite: Suite, depth: usize) -> Result<i32> {
    let alg = load_algebra(&common.algebra)?;
    match suite {
        Suite::Representation => {
            let frame = derive_frame(&alg)?;
            let vars = if common.vars.is_empty() {
                vec!["p".to_string(), "q".to_string()]
            } else {
                common.vars.clone()
            };
            let mut total = Report::default();
            let mut covered: u128 = 0;
            for v in crate::eval::ValuationIter::new(&alg, &vars, common.budget)? {
                let cov = verify_representation_states(&alg, &frame, &v, &vars, depth)?;
                total.checked += cov.report.checked;
                total.violations.extend(cov.report.violations);
                covered = covered.saturating_add(cov.formulas_covered);
            }
            let covered_text = if covered == u128::MAX {
                "more than 2^128 - 1".to_string()
            } else {
                covered.to_string()
            };
            match common.format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "suite": "representation",
                        "states_checked": total.checked,
                        "formulas_covered": covered_text,
                        "violations": total.violations,
                    })
                ),
                Format::Text => {
                    println!(
                        "representation: {} semantic states checked, covering {covered_text} \
                         formulas of depth <= {depth}; {} violations",
                        total.checked,
                        total.violations.len()
                    );
                    for viol in &total.violations {
                        println!(
                            "  VIOLATION at {}: {} != {}",
                            viol.arguments.join(", "),
                            viol.lhs,
                            viol.rhs
                        );
                    }
                }
            }
            Ok(if total.ok() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Suite::Diagram => {
            let report = belnap_diagram_check()?;
            print_report("diagram", &report, common.format);
            Ok(if report.ok() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Suite::Soundness => {
            let vars = if common.vars.is_empty() {
                vec!["p".to_string()]
            } else {
                common.vars.clone()
            };
            let system = generate_system(&alg, &vars, 1);
            let report = audit_soundness(&alg, &system, 1000, common.seed, common.budget)?;
            match common.format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "axioms": report.axioms_checked,
                        "rule_instances": report.rule_instances_checked,
                        "substitutions": report.substitution_instances_checked,
                        "violations": report.violations.len(),
                    })
                ),
                Format::Text => {
                    println!(
                        "soundness: {} axioms, {} rule instances, {} substitution instances, {} violations",
                        report.axioms_checked,
                        report.rule_instances_checked,
                        report.substitution_instances_checked,
                        report.violations.len()
                    );
                    for v in &report.violations {
                        println!("  UNSOUND {} [{}]", v.what, v.witness);
                    }
                }
            }
            Ok(if report.ok() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Suite::Isomorphism => {
            let report = verify_isomorphism(&alg)?;
            print_report("isomorphism", &report, common.format);
            Ok(if report.ok() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Suite::Galois => {
            let frame = derive_frame(&alg)?;
            let mut ok = true;
            for op in frame.incompat_names() {
                let pol = Polarity::new(frame.incompat(op)?, frame.worlds());
                let holds = pol.galois_holds();
                ok &= holds;
                match common.format {
                    Format::Json => {
                        println!("{}", json!({ "op": op, "galois": holds }))
                    }
                    Format::Text => println!("galois adjunction for Rn_{op}: {holds}"),
                }
            }
            Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
        }
    }
}

fn cmd_export_dot(
    common: &CommonOpts,
    kind: DotKind,
    output: Option<&std::path::Path>,
) -> Result<i32> {
    let alg = load_algebra(&common.algebra)?;
    let dot = match kind {
        DotKind::Hasse => alg.lattice().dot(),
        DotKind::Frame => derive_frame(&alg)?.dot(alg.lattice()),
    };
    match output {
        Some(path) => fs::write(path, dot)?,
        None => print!("{dot}"),
    }
    Ok(EXIT_OK)
}

fn cmd_demo_belnap() -> Result<i32> {
    let bl = belnap();
    let alg = bl.truth_algebra();
    let lat = alg.lattice();
    println!("Belnap bilattice, truth order f < bot,top < t (bot, top incomparable)\n");
    println!("negation:   {}", render_unary(&alg, "neg")?);
    println!("conflation: {}", render_unary(&alg, "conf")?);
    println!("mu:         {}", render_unary(&alg, "mu")?);
    println!("duality:    {}", render_unary(&alg, "dual")?);
    println!();
    let frame = derive_frame(&alg)?;
    println!("worlds = {}", lat.format_set(lat.ahat()));
    for op in frame.access_names() {
        println!("R_{op} = {}", frame.access(op)?.render(lat));
    }
    for op in frame.incompat_names() {
        println!("Rn_{op} = {}", frame.incompat(op)?.render(lat));
    }
    println!();
    let can = canonical(&alg)?;
    println!("canonical carrier (truth order):");
    for (i, s) in can.carrier().iter().enumerate() {
        println!(
            "  down+({}) = {}",
            lat.name(crate::lattice::Elem(i)),
            lat.format_set(*s)
        );
    }
    let ka = bl.knowledge_algebra();
    let klat = ka.lattice();
    let kcan = canonical(&ka)?;
    println!("canonical carrier (knowledge order):");
    for (i, s) in kcan.carrier().iter().enumerate() {
        println!(
            "  down+({}) = {}",
            klat.name(crate::lattice::Elem(i)),
            klat.format_set(*s)
        );
    }
    println!();
    let ext = powerset_extension(&alg)?;
    let one: ElemSet = ElemSet::singleton(lat.elem("bot")?);
    println!(
        "powerset negation is not involutive off D_K: neg(neg({})) = {}",
        lat.format_set(one),
        lat.format_set(ext.neg(ext.neg(one)))
    );
    println!();
    let report = belnap_diagram_check()?;
    println!(
        "commutative diagram: {} checks, {} violations",
        report.checked,
        report.violations.len()
    );
    Ok(if report.ok() { EXIT_OK } else { EXIT_VIOLATION })
}

fn render_unary(alg: &Algebra, op: &str) -> Result<String> {
    let lat = alg.lattice();
    let parts: Vec<String> = lat
        .elems()
        .map(|x| {
            Ok(format!(
                "{} -> {}",
                lat.name(x),
                lat.name(alg.apply_unary(op, x)?)
            ))
        })
        .collect::<Result<_>>()?;
    Ok(parts.join(", "))
}
