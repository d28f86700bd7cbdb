use thiserror::Error;

use crate::af::{Semantics, Strategy};
use crate::aspic::Literal;
use crate::contrastive::ApplicabilityReport;

/// Errors raised by framework construction, queries and explanation requests.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument id `{0}`: ids are non-empty tokens of letters, digits and underscores")]
    InvalidArgumentId(String),

    #[error("unknown argument id `{0}`")]
    UnknownArgument(String),

    #[error("no {0} extensions exist for this framework, acceptance is undefined")]
    NoExtensions(Semantics),

    #[error("argument `{argument}` is not {strategy} accepted under {semantics}: {detail}")]
    NotAccepted {
        argument: String,
        semantics: Semantics,
        strategy: Strategy,
        detail: String,
    },

    #[error("argument `{argument}` is not {strategy} non-accepted under {semantics}: {detail}")]
    NotNonAccepted {
        argument: String,
        semantics: Semantics,
        strategy: Strategy,
        detail: String,
    },

    #[error("the foil set is empty")]
    EmptyFoilSet,

    #[error("contrastive explanation is not applicable: {}", .0.summary())]
    NotApplicable(ApplicabilityReport),

    #[error("duplicate rule name `{0}`")]
    DuplicateRuleName(String),

    #[error("literal `{0}` is declared both as an axiom and as an ordinary premise")]
    AxiomPremiseOverlap(Literal),

    #[error("rule reference `n({0})` does not name a defeasible rule of the theory")]
    UnknownRuleReference(String),

    #[error("formula `{0}` is not the conclusion of any constructed argument")]
    NotConcludable(Literal),

    #[error("no foil can be derived for `{0}`: its negation is not concluded by any argument")]
    AutoFoilEmpty(Literal),

    #[error("formula `{formula}` is not {strategy} accepted under {semantics}: {detail}")]
    FormulaNotAccepted {
        formula: Literal,
        semantics: Semantics,
        strategy: Strategy,
        detail: String,
    },

    #[error("formula `{formula}` is not {strategy} non-accepted under {semantics}: {detail}")]
    FormulaNotNonAccepted {
        formula: Literal,
        semantics: Semantics,
        strategy: Strategy,
        detail: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
