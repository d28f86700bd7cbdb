//! Contrastive explanations: why the fact is accepted rather than the foils
//! (or non-accepted while the foils are accepted).
//!
//! The result is the common core of the fact's explanation and the foils'
//! opposite explanations; when no common element exists, both operands are
//! returned as a pair. A request is only answered when fact and foils are
//! genuinely incompatible yet connected, which [`check_applicability`]
//! verifies.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::af::{ArgumentationFramework, ArgumentId, Semantics, Strategy};
use crate::error::{Error, Result};
use crate::explain::{
    acceptance_candidates_unchecked, acceptance_union_unchecked, canonical_candidate_index,
    non_acceptance_set_unchecked, ExplanationSet,
};

/// Whether the fact side of the request is about acceptance or
/// non-acceptance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    #[serde(rename = "acc")]
    Acceptance,
    #[serde(rename = "nonacc")]
    NonAcceptance,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Acceptance => f.write_str("acceptance"),
            Direction::NonAcceptance => f.write_str("non-acceptance"),
        }
    }
}

/// The applicability conditions a contrastive request is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionId {
    /// The fact must be at least credulously accepted (resp. skeptically
    /// non-accepted) and each foil at least skeptically non-accepted (resp.
    /// credulously accepted).
    AcceptanceStatus,
    /// No extension may contain the fact together with a foil.
    NeverCoexist,
    /// Fact and foil must be in (in)direct conflict, one way or the other.
    ConflictRelevance,
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionId::AcceptanceStatus => f.write_str("acceptance-status"),
            ConditionId::NeverCoexist => f.write_str("never-coexist"),
            ConditionId::ConflictRelevance => f.write_str("conflict-relevance"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: ConditionId,
    pub detail: String,
}

/// Outcome of checking a contrastive request. `ok` holds exactly when no
/// violation was found; notes carry non-fatal observations (self-attacking
/// foils, the fact listed among its own foils).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApplicabilityReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl ApplicabilityReport {
    fn new(violations: Vec<Violation>, notes: Vec<String>) -> Self {
        ApplicabilityReport {
            ok: violations.is_empty(),
            violations,
            notes,
        }
    }

    pub fn summary(&self) -> String {
        if self.ok {
            return "all conditions hold".to_string();
        }
        self.violations
            .iter()
            .map(|v| format!("[{}] {}", v.condition, v.detail))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// A contrastive explanation: the common core when it exists, otherwise the
/// two operand explanations verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ContrastiveResult {
    Common(ExplanationSet),
    Pair {
        fact_side: ExplanationSet,
        foil_side: ExplanationSet,
    },
}

impl ContrastiveResult {
    pub fn is_pair(&self) -> bool {
        matches!(self, ContrastiveResult::Pair { .. })
    }
}

/// The implicit foil of an argument: all of its direct attackers. Empty
/// exactly when the argument is unattacked.
pub fn derive_foil(
    af: &ArgumentationFramework,
    argument: &ArgumentId,
) -> Result<BTreeSet<ArgumentId>> {
    af.direct_attackers(argument)
}

/// Checks the three applicability conditions for a contrastive request, per
/// foil. An empty foil set is an input error; everything else is reported,
/// never thrown.
pub fn check_applicability(
    af: &ArgumentationFramework,
    semantics: Semantics,
    _strategy: Strategy,
    fact: &ArgumentId,
    foils: &BTreeSet<ArgumentId>,
    direction: Direction,
) -> Result<ApplicabilityReport> {
    if foils.is_empty() {
        return Err(Error::EmptyFoilSet);
    }
    let fact_idx = af.idx(fact)?;
    let foil_indices = af.resolve_set(foils)?;
    let fact_status = af.acceptance(semantics, fact)?;

    let mut violations = Vec::new();
    let mut notes = Vec::new();

    if foils.contains(fact) {
        notes.push(format!("the fact `{fact}` appears in its own foil set"));
    }
    for foil in foils {
        if af.is_self_attacking(foil)? {
            notes.push(format!("foil `{foil}` attacks itself"));
        }
    }

    match direction {
        Direction::Acceptance => {
            if !fact_status.credulously_accepted {
                violations.push(Violation {
                    condition: ConditionId::AcceptanceStatus,
                    detail: format!(
                        "fact `{fact}` is not credulously accepted under {semantics}"
                    ),
                });
            }
        }
        Direction::NonAcceptance => {
            if !fact_status.skeptically_non_accepted {
                violations.push(Violation {
                    condition: ConditionId::AcceptanceStatus,
                    detail: format!(
                        "fact `{fact}` is not skeptically non-accepted under {semantics}"
                    ),
                });
            }
        }
    }

    for (foil, &foil_idx) in foils.iter().zip(&foil_indices) {
        let foil_status = af.acceptance(semantics, foil)?;
        match direction {
            Direction::Acceptance => {
                if !foil_status.skeptically_non_accepted {
                    violations.push(Violation {
                        condition: ConditionId::AcceptanceStatus,
                        detail: format!(
                            "foil `{foil}` is not skeptically non-accepted under {semantics}"
                        ),
                    });
                }
            }
            Direction::NonAcceptance => {
                if !foil_status.credulously_accepted {
                    violations.push(Violation {
                        condition: ConditionId::AcceptanceStatus,
                        detail: format!(
                            "foil `{foil}` is not credulously accepted under {semantics}"
                        ),
                    });
                }
            }
        }

        let joint = af
            .extensions(semantics)
            .iter()
            .any(|e| e.contains(fact) && e.contains(foil));
        if joint {
            // The per-foil reading is the operational one; say whether the
            // joint reading (one extension holding the fact and every foil)
            // fails as well.
            let joint_all = af.extensions(semantics).iter().any(|e| {
                e.contains(fact) && foils.iter().all(|b| e.contains(b))
            });
            let which = if joint_all {
                "a single extension even contains the fact together with every foil"
            } else {
                "the joint reading over all foils would have passed"
            };
            violations.push(Violation {
                condition: ConditionId::NeverCoexist,
                detail: format!(
                    "some {semantics} extension contains both `{fact}` and `{foil}` ({which})"
                ),
            });
        }

        let fact_attacks = af.attacks_indirectly_idx(fact_idx, foil_idx);
        let foil_attacks = af.attacks_indirectly_idx(foil_idx, fact_idx);
        if !fact_attacks && !foil_attacks {
            violations.push(Violation {
                condition: ConditionId::ConflictRelevance,
                detail: format!(
                    "no (in)direct attack connects `{fact}` and `{foil}` in either direction"
                ),
            });
        }
    }

    Ok(ApplicabilityReport::new(violations, notes))
}

/// Why `fact` is accepted rather than the foils. The fact side follows the
/// requested strategy, the foil side the opposite one.
pub fn contrastive_acceptance(
    af: &ArgumentationFramework,
    semantics: Semantics,
    strategy: Strategy,
    fact: &ArgumentId,
    foils: &BTreeSet<ArgumentId>,
) -> Result<ContrastiveResult> {
    let report = check_applicability(af, semantics, strategy, fact, foils, Direction::Acceptance)?;
    if !report.ok {
        return Err(Error::NotApplicable(report));
    }
    let foil_side = non_acceptance_union(af, semantics, strategy.dagger(), foils)?;
    match strategy {
        Strategy::Skeptical => {
            let fact_side = acceptance_union_unchecked(af, semantics, fact)?;
            Ok(combine(fact_side, foil_side))
        }
        Strategy::Credulous => {
            let candidates = acceptance_candidates_unchecked(af, semantics, fact)?;
            // Acceptance held credulously, so at least one extension contains
            // the fact and the candidate list is non-empty.
            let best_common = candidates
                .iter()
                .map(|c| c.explanation.intersection(&foil_side))
                .filter(|i| !i.is_empty())
                .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.items().cmp(b.items())));
            match best_common {
                Some(common) => Ok(ContrastiveResult::Common(common)),
                None => {
                    let canonical = canonical_candidate_index(&candidates);
                    Ok(ContrastiveResult::Pair {
                        fact_side: candidates[canonical].explanation.clone(),
                        foil_side,
                    })
                }
            }
        }
    }
}

/// Why `fact` is non-accepted while the foils are accepted.
pub fn contrastive_non_acceptance(
    af: &ArgumentationFramework,
    semantics: Semantics,
    strategy: Strategy,
    fact: &ArgumentId,
    foils: &BTreeSet<ArgumentId>,
) -> Result<ContrastiveResult> {
    let report =
        check_applicability(af, semantics, strategy, fact, foils, Direction::NonAcceptance)?;
    if !report.ok {
        return Err(Error::NotApplicable(report));
    }
    let fact_side = non_acceptance_set_unchecked(af, semantics, strategy, fact)?;
    let foil_side = acceptance_union(af, semantics, strategy.dagger(), foils)?;
    Ok(combine(fact_side, foil_side))
}

fn combine(fact_side: ExplanationSet, foil_side: ExplanationSet) -> ContrastiveResult {
    let common = fact_side.intersection(&foil_side);
    if common.is_empty() {
        ContrastiveResult::Pair {
            fact_side,
            foil_side,
        }
    } else {
        ContrastiveResult::Common(common)
    }
}

fn non_acceptance_union(
    af: &ArgumentationFramework,
    semantics: Semantics,
    strategy: Strategy,
    foils: &BTreeSet<ArgumentId>,
) -> Result<ExplanationSet> {
    let mut union = ExplanationSet::default();
    for foil in foils {
        union = union.union(&non_acceptance_set_unchecked(af, semantics, strategy, foil)?);
    }
    Ok(union)
}

fn acceptance_union(
    af: &ArgumentationFramework,
    semantics: Semantics,
    strategy: Strategy,
    foils: &BTreeSet<ArgumentId>,
) -> Result<ExplanationSet> {
    let mut union = ExplanationSet::default();
    for foil in foils {
        let contribution = match strategy {
            Strategy::Skeptical => acceptance_union_unchecked(af, semantics, foil)?,
            Strategy::Credulous => {
                let candidates = acceptance_candidates_unchecked(af, semantics, foil)?;
                if candidates.is_empty() {
                    ExplanationSet::default()
                } else {
                    candidates[canonical_candidate_index(&candidates)]
                        .explanation
                        .clone()
                }
            }
        };
        union = union.union(&contribution);
    }
    Ok(union)
}
