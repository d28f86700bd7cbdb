//! Formula-level acceptance, explanations and contrastive explanations on a
//! derived framework. A formula is judged through the arguments concluding
//! it: it is in an extension when at least one of its arguments is.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::af::{AcceptanceStatus, ArgumentId, Extension, Semantics, Strategy};
use crate::contrastive::{ApplicabilityReport, ConditionId, Direction, Violation};
use crate::error::{Error, Result};
use crate::explain::{defenders_in, undefended_attackers};

use super::{Literal, Presentation, PresentedSet, StructuredFramework};

/// Acceptance of a formula. A literal no argument concludes has no status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "status")]
pub enum FormulaStatus {
    NotConcludable,
    Concludable {
        #[serde(flatten)]
        acceptance: AcceptanceStatus,
    },
}

/// One credulous candidate: an accepted argument for the formula, a
/// witnessing extension, and the presented defenders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaAcceptanceCandidate {
    pub argument: ArgumentId,
    pub extension: Extension,
    pub explanation: PresentedSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaAcceptanceCandidates {
    pub candidates: Vec<FormulaAcceptanceCandidate>,
    pub canonical_pick: usize,
}

impl FormulaAcceptanceCandidates {
    pub fn canonical(&self) -> &PresentedSet {
        &self.candidates[self.canonical_pick].explanation
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormulaAcceptance {
    Skeptical(PresentedSet),
    Credulous(FormulaAcceptanceCandidates),
}

impl FormulaAcceptance {
    pub fn canonical_set(&self) -> &PresentedSet {
        match self {
            FormulaAcceptance::Skeptical(set) => set,
            FormulaAcceptance::Credulous(c) => c.canonical(),
        }
    }
}

/// Contrastive explanation over presented sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PresentedContrastive {
    Common(PresentedSet),
    Pair {
        fact_side: PresentedSet,
        foil_side: PresentedSet,
    },
}

impl PresentedContrastive {
    pub fn is_pair(&self) -> bool {
        matches!(self, PresentedContrastive::Pair { .. })
    }
}

impl StructuredFramework {
    fn extensions_with_formula(
        &self,
        semantics: Semantics,
        formula: &Literal,
    ) -> Vec<&Extension> {
        let ids: Vec<&ArgumentId> = self
            .arguments_for(formula)
            .into_iter()
            .map(|a| &a.id)
            .collect();
        self.af()
            .extensions(semantics)
            .iter()
            .filter(|e| ids.iter().any(|id| e.contains(id)))
            .collect()
    }

    /// Acceptance flags of a formula, or `NotConcludable`.
    pub fn formula_status(
        &self,
        semantics: Semantics,
        formula: &Literal,
    ) -> Result<FormulaStatus> {
        if self.arguments_for(formula).is_empty() {
            return Ok(FormulaStatus::NotConcludable);
        }
        let extensions = self.af().extensions(semantics);
        if extensions.is_empty() {
            return Err(Error::NoExtensions(semantics));
        }
        let with = self.extensions_with_formula(semantics, formula).len();
        let total = extensions.len();
        Ok(FormulaStatus::Concludable {
            acceptance: AcceptanceStatus {
                credulously_accepted: with > 0,
                skeptically_accepted: with == total,
                credulously_non_accepted: with == 0,
                skeptically_non_accepted: with < total,
            },
        })
    }

    fn formula_acceptance_status(
        &self,
        semantics: Semantics,
        formula: &Literal,
    ) -> Result<AcceptanceStatus> {
        match self.formula_status(semantics, formula)? {
            FormulaStatus::NotConcludable => Err(Error::NotConcludable(formula.clone())),
            FormulaStatus::Concludable { acceptance } => Ok(acceptance),
        }
    }

    /// The accepted arguments for a formula: those concluding it that appear
    /// in at least one extension.
    fn accepted_arguments_for(
        &self,
        semantics: Semantics,
        formula: &Literal,
    ) -> Vec<ArgumentId> {
        let extensions = self.af().extensions(semantics);
        self.arguments_for(formula)
            .into_iter()
            .filter(|a| extensions.iter().any(|e| e.contains(&a.id)))
            .map(|a| a.id.clone())
            .collect()
    }

    fn acceptance_ids_union(
        &self,
        semantics: Semantics,
        formula: &Literal,
    ) -> Result<BTreeSet<ArgumentId>> {
        let mut union = BTreeSet::new();
        for argument in self.accepted_arguments_for(semantics, formula) {
            for extension in self.af().extensions(semantics) {
                union.extend(
                    defenders_in(self.af(), &argument, extension)?
                        .items()
                        .iter()
                        .cloned(),
                );
            }
        }
        Ok(union)
    }

    fn acceptance_candidates_ids(
        &self,
        semantics: Semantics,
        formula: &Literal,
    ) -> Result<Vec<(ArgumentId, Extension, BTreeSet<ArgumentId>)>> {
        let mut candidates = Vec::new();
        for argument in self.accepted_arguments_for(semantics, formula) {
            for extension in self.af().extensions_with(semantics, &argument)? {
                let defenders = defenders_in(self.af(), &argument, &extension)?;
                candidates.push((
                    argument.clone(),
                    extension,
                    defenders.items().clone(),
                ));
            }
        }
        Ok(candidates)
    }

    fn non_acceptance_ids(
        &self,
        semantics: Semantics,
        strategy: Strategy,
        formula: &Literal,
    ) -> Result<BTreeSet<ArgumentId>> {
        let mut union = BTreeSet::new();
        for argument in self.arguments_for(formula) {
            let extensions = match strategy {
                Strategy::Skeptical => {
                    self.af().extensions_without(semantics, &argument.id)?
                }
                Strategy::Credulous => self.af().extensions(semantics).to_vec(),
            };
            for extension in &extensions {
                union.extend(
                    undefended_attackers(self.af(), &argument.id, extension)?
                        .items()
                        .iter()
                        .cloned(),
                );
            }
        }
        Ok(union)
    }

    /// Why `formula` is accepted, presented as argument ids or premises.
    pub fn formula_acceptance_explanation(
        &self,
        semantics: Semantics,
        strategy: Strategy,
        formula: &Literal,
        presentation: Presentation,
    ) -> Result<FormulaAcceptance> {
        let status = self.formula_acceptance_status(semantics, formula)?;
        if !status.accepted(strategy) {
            let detail = match strategy {
                Strategy::Skeptical => format!(
                    "skeptical acceptance requires an argument for it in every {semantics} extension"
                ),
                Strategy::Credulous => format!(
                    "credulous acceptance requires an argument for it in some {semantics} extension"
                ),
            };
            return Err(Error::FormulaNotAccepted {
                formula: formula.clone(),
                semantics,
                strategy,
                detail,
            });
        }
        match strategy {
            Strategy::Skeptical => {
                let ids = self.acceptance_ids_union(semantics, formula)?;
                Ok(FormulaAcceptance::Skeptical(
                    self.present(ids, presentation),
                ))
            }
            Strategy::Credulous => {
                let candidates: Vec<FormulaAcceptanceCandidate> = self
                    .acceptance_candidates_ids(semantics, formula)?
                    .into_iter()
                    .map(|(argument, extension, ids)| FormulaAcceptanceCandidate {
                        argument,
                        extension,
                        explanation: self.present(ids, presentation),
                    })
                    .collect();
                let canonical_pick = canonical_formula_candidate(&candidates);
                Ok(FormulaAcceptance::Credulous(FormulaAcceptanceCandidates {
                    candidates,
                    canonical_pick,
                }))
            }
        }
    }

    /// Why `formula` is non-accepted; accounts for every argument concluding
    /// it.
    pub fn formula_non_acceptance_explanation(
        &self,
        semantics: Semantics,
        strategy: Strategy,
        formula: &Literal,
        presentation: Presentation,
    ) -> Result<PresentedSet> {
        let status = self.formula_acceptance_status(semantics, formula)?;
        if !status.non_accepted(strategy) {
            let detail = match strategy {
                Strategy::Skeptical => format!(
                    "skeptical non-acceptance requires some {semantics} extension without any argument for it"
                ),
                Strategy::Credulous => format!(
                    "credulous non-acceptance requires every {semantics} extension to lack an argument for it"
                ),
            };
            return Err(Error::FormulaNotNonAccepted {
                formula: formula.clone(),
                semantics,
                strategy,
                detail,
            });
        }
        let ids = self.non_acceptance_ids(semantics, strategy, formula)?;
        Ok(self.present(ids, presentation))
    }

    /// The implicit foil of a formula: its classical contrary, when some
    /// argument concludes it.
    pub fn auto_foil(&self, formula: &Literal) -> Result<BTreeSet<Literal>> {
        let contrary = formula.negated();
        if self.arguments_for(&contrary).is_empty() {
            Err(Error::AutoFoilEmpty(formula.clone()))
        } else {
            Ok(BTreeSet::from([contrary]))
        }
    }

    /// The formula-level applicability conditions, mirroring the abstract
    /// ones on conclusions of extensions.
    pub fn formula_applicability(
        &self,
        semantics: Semantics,
        _strategy: Strategy,
        fact: &Literal,
        foils: &BTreeSet<Literal>,
        direction: Direction,
    ) -> Result<ApplicabilityReport> {
        if foils.is_empty() {
            return Err(Error::EmptyFoilSet);
        }
        if self.arguments_for(fact).is_empty() {
            return Err(Error::NotConcludable(fact.clone()));
        }
        for foil in foils {
            if self.arguments_for(foil).is_empty() {
                return Err(Error::NotConcludable(foil.clone()));
            }
        }
        let extensions = self.af().extensions(semantics);
        if extensions.is_empty() {
            return Err(Error::NoExtensions(semantics));
        }

        let mut violations = Vec::new();
        let mut notes = Vec::new();
        if foils.contains(fact) {
            notes.push(format!("the fact `{fact}` appears in its own foil set"));
        }

        let fact_with = self.extensions_with_formula(semantics, fact).len();
        match direction {
            Direction::Acceptance => {
                if fact_with == 0 {
                    violations.push(Violation {
                        condition: ConditionId::AcceptanceStatus,
                        detail: format!(
                            "fact `{fact}` is not credulously accepted under {semantics}"
                        ),
                    });
                }
            }
            Direction::NonAcceptance => {
                if fact_with == extensions.len() {
                    violations.push(Violation {
                        condition: ConditionId::AcceptanceStatus,
                        detail: format!(
                            "fact `{fact}` is not skeptically non-accepted under {semantics}"
                        ),
                    });
                }
            }
        }

        for foil in foils {
            let foil_with = self.extensions_with_formula(semantics, foil).len();
            match direction {
                Direction::Acceptance => {
                    if foil_with == extensions.len() {
                        violations.push(Violation {
                            condition: ConditionId::AcceptanceStatus,
                            detail: format!(
                                "foil `{foil}` is not skeptically non-accepted under {semantics}"
                            ),
                        });
                    }
                }
                Direction::NonAcceptance => {
                    if foil_with == 0 {
                        violations.push(Violation {
                            condition: ConditionId::AcceptanceStatus,
                            detail: format!(
                                "foil `{foil}` is not credulously accepted under {semantics}"
                            ),
                        });
                    }
                }
            }

            let joint = extensions.iter().any(|e| {
                let concs: BTreeSet<&Literal> = e
                    .iter()
                    .filter_map(|id| self.argument(id))
                    .map(|a| &a.conclusion)
                    .collect();
                concs.contains(fact) && concs.contains(foil)
            });
            if joint {
                violations.push(Violation {
                    condition: ConditionId::NeverCoexist,
                    detail: format!(
                        "some {semantics} extension concludes both `{fact}` and `{foil}`"
                    ),
                });
            }

            let fact_args = self.arguments_for(fact);
            let foil_args = self.arguments_for(foil);
            let connected = fact_args.iter().any(|a| {
                foil_args.iter().any(|b| {
                    let ai = self.af().arguments().binary_search(&a.id).unwrap();
                    let bi = self.af().arguments().binary_search(&b.id).unwrap();
                    self.af().attacks_indirectly_idx(ai, bi)
                        || self.af().attacks_indirectly_idx(bi, ai)
                })
            });
            if !connected {
                violations.push(Violation {
                    condition: ConditionId::ConflictRelevance,
                    detail: format!(
                        "no argument for `{fact}` is in (in)direct conflict with any argument for `{foil}`"
                    ),
                });
            }
        }

        Ok(report_from(violations, notes))
    }

    /// Contrastive explanation for a formula against a set of foil formulas.
    pub fn formula_contrastive(
        &self,
        semantics: Semantics,
        strategy: Strategy,
        fact: &Literal,
        foils: &BTreeSet<Literal>,
        direction: Direction,
        presentation: Presentation,
    ) -> Result<PresentedContrastive> {
        let report =
            self.formula_applicability(semantics, strategy, fact, foils, direction)?;
        if !report.ok {
            return Err(Error::NotApplicable(report));
        }
        match direction {
            Direction::Acceptance => {
                let foil_side = self.presented_non_acceptance_union(
                    semantics,
                    strategy.dagger(),
                    foils,
                    presentation,
                )?;
                match strategy {
                    Strategy::Skeptical => {
                        let ids = self.acceptance_ids_union(semantics, fact)?;
                        let fact_side = self.present(ids, presentation);
                        Ok(combine(fact_side, foil_side))
                    }
                    Strategy::Credulous => {
                        let candidates = self.acceptance_candidates_ids(semantics, fact)?;
                        let presented: Vec<PresentedSet> = candidates
                            .iter()
                            .map(|(_, _, ids)| self.present(ids.clone(), presentation))
                            .collect();
                        let best = presented
                            .iter()
                            .map(|c| c.intersection(&foil_side))
                            .filter(|i| !i.is_empty())
                            .min_by(|a, b| a.cmp_canonical(b));
                        match best {
                            Some(common) => Ok(PresentedContrastive::Common(common)),
                            None => {
                                let canonical = presented
                                    .iter()
                                    .min_by(|a, b| a.cmp_canonical(b))
                                    .cloned()
                                    .unwrap_or_else(|| empty_presented(presentation));
                                Ok(PresentedContrastive::Pair {
                                    fact_side: canonical,
                                    foil_side,
                                })
                            }
                        }
                    }
                }
            }
            Direction::NonAcceptance => {
                let ids = self.non_acceptance_ids(semantics, strategy, fact)?;
                let fact_side = self.present(ids, presentation);
                let foil_side = self.presented_acceptance_union(
                    semantics,
                    strategy.dagger(),
                    foils,
                    presentation,
                )?;
                Ok(combine(fact_side, foil_side))
            }
        }
    }

    fn presented_non_acceptance_union(
        &self,
        semantics: Semantics,
        strategy: Strategy,
        foils: &BTreeSet<Literal>,
        presentation: Presentation,
    ) -> Result<PresentedSet> {
        let mut union = empty_presented(presentation);
        for foil in foils {
            let ids = self.non_acceptance_ids(semantics, strategy, foil)?;
            union = union.union(&self.present(ids, presentation));
        }
        Ok(union)
    }

    fn presented_acceptance_union(
        &self,
        semantics: Semantics,
        strategy: Strategy,
        foils: &BTreeSet<Literal>,
        presentation: Presentation,
    ) -> Result<PresentedSet> {
        let mut union = empty_presented(presentation);
        for foil in foils {
            let contribution = match strategy {
                Strategy::Skeptical => {
                    let ids = self.acceptance_ids_union(semantics, foil)?;
                    self.present(ids, presentation)
                }
                Strategy::Credulous => {
                    let candidates: Vec<FormulaAcceptanceCandidate> = self
                        .acceptance_candidates_ids(semantics, foil)?
                        .into_iter()
                        .map(|(argument, extension, ids)| FormulaAcceptanceCandidate {
                            argument,
                            extension,
                            explanation: self.present(ids, presentation),
                        })
                        .collect();
                    if candidates.is_empty() {
                        empty_presented(presentation)
                    } else {
                        candidates[canonical_formula_candidate(&candidates)]
                            .explanation
                            .clone()
                    }
                }
            };
            union = union.union(&contribution);
        }
        Ok(union)
    }
}

fn empty_presented(presentation: Presentation) -> PresentedSet {
    match presentation {
        Presentation::Identity => PresentedSet::Arguments(BTreeSet::new()),
        Presentation::Premises => PresentedSet::Premises(BTreeSet::new()),
    }
}

fn combine(fact_side: PresentedSet, foil_side: PresentedSet) -> PresentedContrastive {
    let common = fact_side.intersection(&foil_side);
    if common.is_empty() {
        PresentedContrastive::Pair {
            fact_side,
            foil_side,
        }
    } else {
        PresentedContrastive::Common(common)
    }
}

fn canonical_formula_candidate(candidates: &[FormulaAcceptanceCandidate]) -> usize {
    candidates
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            a.explanation
                .cmp_canonical(&b.explanation)
                .then_with(|| a.argument.cmp(&b.argument))
                .then_with(|| a.extension.cmp(&b.extension))
        })
        .map(|(i, _)| i)
        .expect("candidate list is non-empty")
}

fn report_from(violations: Vec<Violation>, notes: Vec<String>) -> ApplicabilityReport {
    ApplicabilityReport {
        ok: violations.is_empty(),
        violations,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::aspic::{ArgumentationTheory, Rule};

    fn lit(s: &str) -> Literal {
        s.parse().unwrap()
    }

    fn mutual_rebuttal() -> StructuredFramework {
        let theory = ArgumentationTheory::new(
            [],
            [lit("a"), lit("b")],
            vec![
                Rule::defeasible("d1", vec![lit("a")], lit("p")),
                Rule::defeasible("d2", vec![lit("b")], lit("~p")),
            ],
        )
        .unwrap();
        StructuredFramework::from_theory(theory).unwrap()
    }

    #[test]
    fn never_concluded_literal_has_no_status() {
        let fw = mutual_rebuttal();
        assert_eq!(
            fw.formula_status(Semantics::Preferred, &lit("zzz")).unwrap(),
            FormulaStatus::NotConcludable
        );
    }

    #[test]
    fn mutually_rebutting_formulas_are_credulous_only() {
        let fw = mutual_rebuttal();
        let status = fw.formula_status(Semantics::Preferred, &lit("p")).unwrap();
        match status {
            FormulaStatus::Concludable { acceptance } => {
                assert!(acceptance.credulously_accepted);
                assert!(!acceptance.skeptically_accepted);
                assert!(acceptance.skeptically_non_accepted);
            }
            other => panic!("unexpected status {other:?}"),
        }
    }

    #[test]
    fn auto_foil_is_the_concluded_contrary() {
        let fw = mutual_rebuttal();
        assert_eq!(
            fw.auto_foil(&lit("p")).unwrap(),
            BTreeSet::from([lit("~p")])
        );
        assert_eq!(
            fw.auto_foil(&lit("a")).unwrap_err(),
            Error::AutoFoilEmpty(lit("a"))
        );
    }

    #[test]
    fn contrastive_on_mutual_rebuttal_is_common() {
        let fw = mutual_rebuttal();
        let result = fw
            .formula_contrastive(
                Semantics::Preferred,
                Strategy::Credulous,
                &lit("p"),
                &BTreeSet::from([lit("~p")]),
                Direction::Acceptance,
                Presentation::Premises,
            )
            .unwrap();
        match result {
            PresentedContrastive::Common(set) => {
                assert_eq!(set, PresentedSet::Premises(BTreeSet::from([lit("a")])));
            }
            other => panic!("expected common form, got {other:?}"),
        }
    }

    #[test]
    fn non_acceptance_explanation_accounts_for_all_arguments() {
        let fw = mutual_rebuttal();
        let set = fw
            .formula_non_acceptance_explanation(
                Semantics::Preferred,
                Strategy::Skeptical,
                &lit("p"),
                Presentation::Premises,
            )
            .unwrap();
        assert_eq!(set, PresentedSet::Premises(BTreeSet::from([lit("b")])));
    }

    #[test]
    fn acceptance_explanation_requires_acceptance() {
        let fw = mutual_rebuttal();
        let err = fw
            .formula_acceptance_explanation(
                Semantics::Preferred,
                Strategy::Skeptical,
                &lit("p"),
                Presentation::Identity,
            )
            .unwrap_err();
        assert!(matches!(err, Error::FormulaNotAccepted { .. }));
    }

    #[test]
    fn unattacked_formula_has_empty_acceptance_explanation() {
        let fw = mutual_rebuttal();
        let explanation = fw
            .formula_acceptance_explanation(
                Semantics::Preferred,
                Strategy::Skeptical,
                &lit("a"),
                Presentation::Identity,
            )
            .unwrap();
        assert!(explanation.canonical_set().is_empty());
    }
}
