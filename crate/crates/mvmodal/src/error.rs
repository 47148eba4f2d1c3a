use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    // ---- posets and lattices ----
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("order relation has a cycle through `{0}` and `{1}`")]
    Cycle(String, String),
    #[error("not a lattice: pair (`{x}`, `{y}`) has no unique {kind}")]
    NotALattice {
        kind: &'static str,
        x: String,
        y: String,
    },
    #[error("operation requires a distributive lattice")]
    NotDistributive,
    #[error("carrier too large: {0} elements (limit {1})")]
    CarrierTooLarge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    // ---- algebras ----
    #[error("operator table for `{op}` is partial: no image for `{elem}`")]
    PartialTable { op: String, elem: String },
    #[error("unknown operator `{0}`")]
    UnknownOperator(String),
    #[error("operator `{0}` is already registered")]
    DuplicateOperator(String),
    #[error(
        "no involutive order-isomorphism between the two lattice orders satisfies the duality laws"
    )]
    NoDuality,
    #[error("duality isomorphism is ambiguous: {0} candidates found")]
    AmbiguousDuality(usize),
    #[error("bad split point {0}: split points must be interior chain positions")]
    BadSplitPoint(usize),

    // ---- formula language ----
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown constant `@{0}`")]
    UnknownConstant(String),
    #[error("unknown modality `{0}`")]
    UnknownModality(String),

    // ---- evaluation and entailment ----
    #[error("missing operator `{0}`")]
    MissingOperator(String),
    #[error("valuation does not bind variable `{0}`")]
    UnboundVariable(String),
    #[error("enumeration budget exceeded: {needed} valuations, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("theory has no models")]
    EmptyModelClass,
    #[error("designated set is not upward closed: contains `{lo}` but not `{hi}` above it")]
    NotUpwardClosed { lo: String, hi: String },

    // ---- frames and representations ----
    #[error("operator `{op}` violates the class required for frame derivation: {law}")]
    OperatorClassViolation { op: String, law: String },
    #[error("lattice is not a chain")]
    NotAChain,
    #[error("operator `{0}` is not monotone")]
    NotMonotone(String),
    #[error("frame has no relation for modality `{0}`")]
    MissingRelation(String),
    #[error("`{0}` is not a world of the frame")]
    UnknownWorld(String),
    #[error("set {0} is not a member of the canonical carrier")]
    NotInCarrier(String),

    // ---- derivations ----
    #[error("bad derivation node at {path}: {reason}")]
    BadNode { path: String, reason: String },

    // ---- io / serialization (CLI) ----
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
