//! Basic acceptance and non-acceptance explanations for arguments.
//!
//! An acceptance explanation collects the arguments that defend the queried
//! argument inside extensions; a non-acceptance explanation collects its
//! (in)direct attackers against which an extension offers no counter-attack.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::af::{ArgumentationFramework, ArgumentId, Extension, Semantics, Strategy};
use crate::error::{Error, Result};

/// A canonically ordered set of arguments returned as an explanation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct ExplanationSet {
    items: BTreeSet<ArgumentId>,
}

impl ExplanationSet {
    pub fn new(items: impl IntoIterator<Item = ArgumentId>) -> Self {
        ExplanationSet {
            items: items.into_iter().collect(),
        }
    }

    pub fn items(&self) -> &BTreeSet<ArgumentId> {
        &self.items
    }

    pub fn contains(&self, id: &ArgumentId) -> bool {
        self.items.contains(id)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArgumentId> {
        self.items.iter()
    }

    pub fn intersection(&self, other: &ExplanationSet) -> ExplanationSet {
        ExplanationSet {
            items: self.items.intersection(&other.items).cloned().collect(),
        }
    }

    pub fn union(&self, other: &ExplanationSet) -> ExplanationSet {
        ExplanationSet {
            items: self.items.union(&other.items).cloned().collect(),
        }
    }

    pub fn is_subset(&self, other: &ExplanationSet) -> bool {
        self.items.is_subset(&other.items)
    }
}

impl fmt::Display for ExplanationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, id) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{id}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<ArgumentId> for ExplanationSet {
    fn from_iter<T: IntoIterator<Item = ArgumentId>>(iter: T) -> Self {
        ExplanationSet::new(iter)
    }
}

/// One credulous acceptance candidate: the witnessing extension and the
/// defenders of the argument inside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcceptanceCandidate {
    pub extension: Extension,
    pub explanation: ExplanationSet,
}

/// All credulous acceptance candidates — one per extension containing the
/// argument — plus a deterministic canonical pick (minimum cardinality, then
/// lexicographic members, then source extension).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CredulousAcceptanceCandidates {
    pub candidates: Vec<AcceptanceCandidate>,
    pub canonical_pick: usize,
}

impl CredulousAcceptanceCandidates {
    pub fn canonical(&self) -> &ExplanationSet {
        &self.candidates[self.canonical_pick].explanation
    }
}

/// Result of an acceptance explanation request: one set for skeptical
/// reasoners, a candidate family for credulous ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum AcceptanceExplanation {
    Skeptical(ExplanationSet),
    Credulous(CredulousAcceptanceCandidates),
}

impl AcceptanceExplanation {
    /// The single set a caller can always print: the union for skeptical,
    /// the canonical pick for credulous.
    pub fn canonical_set(&self) -> &ExplanationSet {
        match self {
            AcceptanceExplanation::Skeptical(set) => set,
            AcceptanceExplanation::Credulous(c) => c.canonical(),
        }
    }
}

/// The arguments that (in)directly defend `argument`, anywhere in the
/// framework.
pub fn defenders(
    af: &ArgumentationFramework,
    argument: &ArgumentId,
) -> Result<ExplanationSet> {
    Ok(ExplanationSet {
        items: af.indirect_defenders(argument)?,
    })
}

/// The arguments that (in)directly defend `argument` and belong to
/// `extension`.
pub fn defenders_in(
    af: &ArgumentationFramework,
    argument: &ArgumentId,
    extension: &Extension,
) -> Result<ExplanationSet> {
    af.resolve_set(extension.members())?;
    let all = af.indirect_defenders(argument)?;
    Ok(ExplanationSet {
        items: all
            .into_iter()
            .filter(|d| extension.contains(d))
            .collect(),
    })
}

/// The (in)direct attackers of `argument` that `extension` does not
/// counter-attack: the extension defends against an attacker only by
/// directly attacking it.
pub fn undefended_attackers(
    af: &ArgumentationFramework,
    argument: &ArgumentId,
    extension: &Extension,
) -> Result<ExplanationSet> {
    let members = af.resolve_set(extension.members())?;
    let attacked = af.attacked_by_indices(&members);
    let attackers = af.indirect_attackers(argument)?;
    Ok(ExplanationSet {
        items: attackers
            .into_iter()
            .filter(|b| {
                let idx = af
                    .idx(b)
                    .expect("indirect attackers are framework members");
                !attacked[idx]
            })
            .collect(),
    })
}

pub(crate) fn acceptance_union_unchecked(
    af: &ArgumentationFramework,
    semantics: Semantics,
    argument: &ArgumentId,
) -> Result<ExplanationSet> {
    let mut union = ExplanationSet::default();
    for extension in af.extensions(semantics) {
        union = union.union(&defenders_in(af, argument, extension)?);
    }
    Ok(union)
}

pub(crate) fn acceptance_candidates_unchecked(
    af: &ArgumentationFramework,
    semantics: Semantics,
    argument: &ArgumentId,
) -> Result<Vec<AcceptanceCandidate>> {
    af.extensions_with(semantics, argument)?
        .into_iter()
        .map(|extension| {
            let explanation = defenders_in(af, argument, &extension)?;
            Ok(AcceptanceCandidate {
                extension,
                explanation,
            })
        })
        .collect()
}

pub(crate) fn canonical_candidate_index(candidates: &[AcceptanceCandidate]) -> usize {
    candidates
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            a.explanation
                .len()
                .cmp(&b.explanation.len())
                .then_with(|| a.explanation.items().cmp(b.explanation.items()))
                .then_with(|| a.extension.cmp(&b.extension))
        })
        .map(|(i, _)| i)
        .expect("candidate list is non-empty")
}

/// Why `argument` is accepted under `semantics` and `strategy`. Errors when
/// it is not accepted, naming the failed acceptance clause.
pub fn acceptance_explanation(
    af: &ArgumentationFramework,
    semantics: Semantics,
    strategy: Strategy,
    argument: &ArgumentId,
) -> Result<AcceptanceExplanation> {
    let status = af.acceptance(semantics, argument)?;
    if !status.accepted(strategy) {
        let total = af.extensions(semantics).len();
        let with = af.extensions_with(semantics, argument)?.len();
        let detail = match strategy {
            Strategy::Skeptical => format!(
                "skeptical acceptance requires membership in all {semantics} extensions, \
                 but only {with} of {total} contain it"
            ),
            Strategy::Credulous => format!(
                "credulous acceptance requires membership in at least one {semantics} \
                 extension, but none of the {total} contain it"
            ),
        };
        return Err(Error::NotAccepted {
            argument: argument.to_string(),
            semantics,
            strategy,
            detail,
        });
    }
    match strategy {
        Strategy::Skeptical => Ok(AcceptanceExplanation::Skeptical(
            acceptance_union_unchecked(af, semantics, argument)?,
        )),
        Strategy::Credulous => {
            let candidates = acceptance_candidates_unchecked(af, semantics, argument)?;
            let canonical_pick = canonical_candidate_index(&candidates);
            Ok(AcceptanceExplanation::Credulous(
                CredulousAcceptanceCandidates {
                    candidates,
                    canonical_pick,
                },
            ))
        }
    }
}

pub(crate) fn non_acceptance_set_unchecked(
    af: &ArgumentationFramework,
    semantics: Semantics,
    strategy: Strategy,
    argument: &ArgumentId,
) -> Result<ExplanationSet> {
    let extensions: Vec<Extension> = match strategy {
        // Skeptical non-acceptance is witnessed by the extensions that
        // exclude the argument; credulous non-acceptance quantifies over all.
        Strategy::Skeptical => af.extensions_without(semantics, argument)?,
        Strategy::Credulous => af.extensions(semantics).to_vec(),
    };
    let mut union = ExplanationSet::default();
    for extension in &extensions {
        union = union.union(&undefended_attackers(af, argument, extension)?);
    }
    Ok(union)
}

/// Why `argument` is non-accepted under `semantics` and `strategy`. Errors
/// when it is in fact accepted.
pub fn non_acceptance_explanation(
    af: &ArgumentationFramework,
    semantics: Semantics,
    strategy: Strategy,
    argument: &ArgumentId,
) -> Result<ExplanationSet> {
    let status = af.acceptance(semantics, argument)?;
    if !status.non_accepted(strategy) {
        let total = af.extensions(semantics).len();
        let with = af.extensions_with(semantics, argument)?.len();
        let detail = match strategy {
            Strategy::Skeptical => format!(
                "skeptical non-acceptance requires exclusion from some {semantics} \
                 extension, but all {total} contain it"
            ),
            Strategy::Credulous => format!(
                "credulous non-acceptance requires exclusion from every {semantics} \
                 extension, but {with} of {total} contain it"
            ),
        };
        return Err(Error::NotNonAccepted {
            argument: argument.to_string(),
            semantics,
            strategy,
            detail,
        });
    }
    non_acceptance_set_unchecked(af, semantics, strategy, argument)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> ArgumentId {
        ArgumentId::new(s).unwrap()
    }

    fn ext(members: &[&str]) -> Extension {
        Extension::new(members.iter().map(|s| id(s)))
    }

    fn set(members: &[&str]) -> ExplanationSet {
        ExplanationSet::new(members.iter().map(|s| id(s)))
    }

    #[test]
    fn unattacked_argument_has_no_defenders() {
        let af = ArgumentationFramework::from_parts(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(defenders(&af, &id("a")).unwrap().is_empty());
    }

    #[test]
    fn defenders_in_intersects_with_the_extension() {
        let af = ArgumentationFramework::from_parts(
            &["a", "b", "c"],
            &[("b", "a"), ("c", "b")],
        )
        .unwrap();
        assert_eq!(defenders(&af, &id("a")).unwrap(), set(&["c"]));
        assert_eq!(
            defenders_in(&af, &id("a"), &ext(&["c"])).unwrap(),
            set(&["c"])
        );
        assert_eq!(
            defenders_in(&af, &id("a"), &Extension::empty()).unwrap(),
            set(&[])
        );
    }

    #[test]
    fn undefended_attackers_removes_counter_attacked_ones() {
        let af = ArgumentationFramework::from_parts(
            &["a", "b", "c", "d"],
            &[("b", "a"), ("d", "a"), ("c", "b")],
        )
        .unwrap();
        // {c} hits b but leaves d standing.
        assert_eq!(
            undefended_attackers(&af, &id("a"), &ext(&["c"])).unwrap(),
            set(&["d"])
        );
        assert_eq!(
            undefended_attackers(&af, &id("a"), &Extension::empty()).unwrap(),
            set(&["b", "d"])
        );
    }

    #[test]
    fn unattacked_argument_has_no_undefended_attackers() {
        let af = ArgumentationFramework::from_parts(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(undefended_attackers(&af, &id("b"), &Extension::empty())
            .unwrap()
            .contains(&id("a")));
        assert!(undefended_attackers(&af, &id("a"), &ext(&["b"]))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn unknown_ids_are_input_errors() {
        let af = ArgumentationFramework::from_parts(&["a"], &[]).unwrap();
        assert!(matches!(
            defenders(&af, &id("z")),
            Err(Error::UnknownArgument(_))
        ));
        assert!(matches!(
            defenders_in(&af, &id("a"), &ext(&["z"])),
            Err(Error::UnknownArgument(_))
        ));
    }

    #[test]
    fn skeptical_explanation_under_grounded_empty_framework_errors() {
        // Nothing in a grounded-empty framework is skeptically accepted.
        let af =
            ArgumentationFramework::from_parts(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        let err =
            acceptance_explanation(&af, Semantics::Grounded, Strategy::Skeptical, &id("a"))
                .unwrap_err();
        assert!(matches!(err, Error::NotAccepted { .. }));
    }

    #[test]
    fn accepted_unattacked_argument_has_empty_explanation() {
        let af = ArgumentationFramework::from_parts(&["a"], &[]).unwrap();
        let explanation =
            acceptance_explanation(&af, Semantics::Grounded, Strategy::Skeptical, &id("a"))
                .unwrap();
        assert!(explanation.canonical_set().is_empty());
    }

    #[test]
    fn canonical_pick_prefers_smallest_then_lexicographic() {
        let candidates = vec![
            AcceptanceCandidate {
                extension: ext(&["x", "y"]),
                explanation: set(&["x", "y"]),
            },
            AcceptanceCandidate {
                extension: ext(&["z"]),
                explanation: set(&["z"]),
            },
            AcceptanceCandidate {
                extension: ext(&["b"]),
                explanation: set(&["b"]),
            },
        ];
        assert_eq!(canonical_candidate_index(&candidates), 2);
    }

    #[test]
    fn non_acceptance_explanation_requires_non_acceptance() {
        let af = ArgumentationFramework::from_parts(&["a"], &[]).unwrap();
        let err =
            non_acceptance_explanation(&af, Semantics::Grounded, Strategy::Skeptical, &id("a"))
                .unwrap_err();
        assert!(matches!(err, Error::NotNonAccepted { .. }));
    }

    #[test]
    fn admissible_non_acceptance_can_be_empty_for_unconnected_arguments() {
        let af = ArgumentationFramework::from_parts(&["a", "b"], &[]).unwrap();
        // {b} is admissible, so a is skeptically non-accepted, yet nothing
        // attacks it.
        let explanation =
            non_acceptance_explanation(&af, Semantics::Admissible, Strategy::Skeptical, &id("a"))
                .unwrap();
        assert!(explanation.is_empty());
        let explanation =
            non_acceptance_explanation(&af, Semantics::Admissible, Strategy::Skeptical, &id("b"))
                .unwrap();
        assert!(explanation.is_empty());
    }
}
