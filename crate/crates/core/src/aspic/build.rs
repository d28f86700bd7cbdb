//! Argument construction and attack computation over a theory.

use std::collections::{BTreeMap, BTreeSet};

use crate::af::{ArgumentationFramework, ArgumentId};
use crate::error::Result;

use super::{
    Atom, Attack, AttackKind, ArgumentationTheory, Literal, Presentation, PresentedSet,
    StructuredArgument,
};

#[derive(Debug, Clone)]
struct Proto {
    key: String,
    conclusion: Literal,
    premises: BTreeSet<Literal>,
    sub: BTreeSet<usize>,
    sub_conclusions: BTreeSet<Literal>,
    children: Vec<usize>,
    top_rule: Option<String>,
}

/// Constructs the least set of arguments the theory supports, one per
/// distinct derivation tree. A rule application is skipped when one of its
/// sub-arguments already concludes the rule's consequent, which keeps the
/// set finite for finite theories.
pub fn build_arguments(theory: &ArgumentationTheory) -> Vec<StructuredArgument> {
    let mut protos: Vec<Proto> = Vec::new();
    let mut seen: BTreeSet<String> = BTreeSet::new();

    for literal in theory.knowledge() {
        let key = literal.to_string();
        if seen.insert(key.clone()) {
            protos.push(Proto {
                key,
                conclusion: literal.clone(),
                premises: BTreeSet::from([literal.clone()]),
                sub: BTreeSet::new(),
                sub_conclusions: BTreeSet::from([literal.clone()]),
                children: Vec::new(),
                top_rule: None,
            });
        }
    }

    loop {
        let mut added = false;
        for rule in theory.rules() {
            let mut by_conclusion: BTreeMap<&Literal, Vec<usize>> = BTreeMap::new();
            for (i, proto) in protos.iter().enumerate() {
                by_conclusion.entry(&proto.conclusion).or_default().push(i);
            }
            let mut tuples = Vec::new();
            collect_tuples(&rule.antecedents, &by_conclusion, &mut Vec::new(), &mut tuples);
            for children in tuples {
                let circular = children.iter().any(|&c| {
                    protos[c].sub_conclusions.contains(&rule.consequent)
                });
                if circular {
                    continue;
                }
                let key = format!(
                    "{}({})",
                    rule.name,
                    children
                        .iter()
                        .map(|&c| protos[c].key.clone())
                        .collect::<Vec<_>>()
                        .join(",")
                );
                if !seen.insert(key.clone()) {
                    continue;
                }
                let mut premises = BTreeSet::new();
                let mut sub = BTreeSet::new();
                let mut sub_conclusions = BTreeSet::from([rule.consequent.clone()]);
                for &c in &children {
                    premises.extend(protos[c].premises.iter().cloned());
                    sub.extend(protos[c].sub.iter().copied());
                    sub.insert(c);
                    sub_conclusions.extend(protos[c].sub_conclusions.iter().cloned());
                }
                protos.push(Proto {
                    key,
                    conclusion: rule.consequent.clone(),
                    premises,
                    sub,
                    sub_conclusions,
                    children,
                    top_rule: Some(rule.name.clone()),
                });
                added = true;
            }
        }
        if !added {
            break;
        }
    }

    finalize(protos)
}

fn collect_tuples(
    antecedents: &[Literal],
    by_conclusion: &BTreeMap<&Literal, Vec<usize>>,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == antecedents.len() {
        out.push(current.clone());
        return;
    }
    let needed = &antecedents[current.len()];
    if let Some(candidates) = by_conclusion.get(needed) {
        for &c in candidates {
            current.push(c);
            collect_tuples(antecedents, by_conclusion, current, out);
            current.pop();
        }
    }
}

/// Assigns canonical ids: premise arguments become `A1..` ordered by their
/// literal, rule arguments `B1..` ordered by structural key.
fn finalize(protos: Vec<Proto>) -> Vec<StructuredArgument> {
    let mut premise_order: Vec<usize> = (0..protos.len())
        .filter(|&i| protos[i].top_rule.is_none())
        .collect();
    premise_order.sort_by(|&a, &b| protos[a].conclusion.cmp(&protos[b].conclusion));
    let mut rule_order: Vec<usize> = (0..protos.len())
        .filter(|&i| protos[i].top_rule.is_some())
        .collect();
    rule_order.sort_by(|&a, &b| protos[a].key.cmp(&protos[b].key));

    let mut ids: Vec<Option<ArgumentId>> = vec![None; protos.len()];
    for (n, &i) in premise_order.iter().enumerate() {
        ids[i] = Some(ArgumentId::new(format!("A{}", n + 1)).expect("generated id is valid"));
    }
    for (n, &i) in rule_order.iter().enumerate() {
        ids[i] = Some(ArgumentId::new(format!("B{}", n + 1)).expect("generated id is valid"));
    }
    let id_of = |i: usize| ids[i].clone().expect("every proto receives an id");

    let mut arguments: Vec<StructuredArgument> = premise_order
        .iter()
        .chain(rule_order.iter())
        .map(|&i| {
            let proto = &protos[i];
            let mut sub_args: BTreeSet<ArgumentId> =
                proto.sub.iter().map(|&s| id_of(s)).collect();
            sub_args.insert(id_of(i));
            StructuredArgument {
                id: id_of(i),
                conclusion: proto.conclusion.clone(),
                premises: proto.premises.clone(),
                sub_args,
                children: proto.children.iter().map(|&c| id_of(c)).collect(),
                top_rule: proto.top_rule.clone(),
            }
        })
        .collect();
    arguments.sort_by(|a, b| a.id.cmp(&b.id));
    arguments
}

/// All attack triples among `arguments` under the theory's knowledge
/// partition: axioms cannot be undermined, strict conclusions cannot be
/// rebutted, undercuts hit defeasible top rules of sub-arguments.
pub fn compute_attacks(
    theory: &ArgumentationTheory,
    arguments: &[StructuredArgument],
) -> Vec<Attack> {
    let by_id: BTreeMap<&ArgumentId, &StructuredArgument> =
        arguments.iter().map(|a| (&a.id, a)).collect();
    let mut attacks = BTreeSet::new();

    for attacker in arguments {
        let contrary = attacker.conclusion.negated();
        for target in arguments {
            for sub_id in &target.sub_args {
                let sub = by_id[sub_id];
                let Some(rule_name) = &sub.top_rule else {
                    continue;
                };
                let rule = theory
                    .rule(rule_name)
                    .expect("arguments only apply theory rules");
                if !rule.is_defeasible() {
                    continue;
                }
                // Undercut: the attacker concludes ~n(r) for this top rule.
                if attacker.conclusion
                    == Literal::negative(Atom::RuleRef(rule_name.clone()))
                {
                    attacks.insert(Attack {
                        attacker: attacker.id.clone(),
                        target: target.id.clone(),
                        kind: AttackKind::Undercut { on: sub_id.clone() },
                    });
                }
                // Rebut: contrary of a defeasibly derived sub-conclusion.
                if sub.conclusion == contrary {
                    attacks.insert(Attack {
                        attacker: attacker.id.clone(),
                        target: target.id.clone(),
                        kind: AttackKind::Rebut { on: sub_id.clone() },
                    });
                }
            }
            for premise in &target.premises {
                if theory.is_axiom(premise) {
                    continue;
                }
                if *premise == contrary {
                    attacks.insert(Attack {
                        attacker: attacker.id.clone(),
                        target: target.id.clone(),
                        kind: AttackKind::Undermine {
                            on: premise.clone(),
                        },
                    });
                }
            }
        }
    }

    attacks.into_iter().collect()
}

/// A theory together with its constructed arguments, attacks and the
/// derived abstract framework. The bundle is immutable and shareable.
#[derive(Debug)]
pub struct StructuredFramework {
    theory: ArgumentationTheory,
    arguments: Vec<StructuredArgument>,
    attacks: Vec<Attack>,
    af: ArgumentationFramework,
    index: BTreeMap<ArgumentId, usize>,
}

impl StructuredFramework {
    pub fn from_theory(theory: ArgumentationTheory) -> Result<Self> {
        let arguments = build_arguments(&theory);
        let attacks = compute_attacks(&theory, &arguments);
        let af = ArgumentationFramework::new(
            arguments.iter().map(|a| a.id.clone()),
            attacks
                .iter()
                .map(|att| (att.attacker.clone(), att.target.clone())),
        )?;
        let index = arguments
            .iter()
            .enumerate()
            .map(|(i, a)| (a.id.clone(), i))
            .collect();
        Ok(StructuredFramework {
            theory,
            arguments,
            attacks,
            af,
            index,
        })
    }

    pub fn theory(&self) -> &ArgumentationTheory {
        &self.theory
    }

    pub fn arguments(&self) -> &[StructuredArgument] {
        &self.arguments
    }

    pub fn attacks(&self) -> &[Attack] {
        &self.attacks
    }

    /// The derived abstract framework over the generated argument ids.
    pub fn af(&self) -> &ArgumentationFramework {
        &self.af
    }

    pub fn argument(&self, id: &ArgumentId) -> Option<&StructuredArgument> {
        self.index.get(id).map(|&i| &self.arguments[i])
    }

    /// Arguments concluding exactly `formula`.
    pub fn arguments_for(&self, formula: &Literal) -> Vec<&StructuredArgument> {
        self.arguments
            .iter()
            .filter(|a| &a.conclusion == formula)
            .collect()
    }

    pub fn conclusions(&self) -> BTreeSet<Literal> {
        self.arguments
            .iter()
            .map(|a| a.conclusion.clone())
            .collect()
    }

    /// Applies a presentation to a set of argument ids.
    pub fn present(
        &self,
        ids: impl IntoIterator<Item = ArgumentId>,
        presentation: Presentation,
    ) -> PresentedSet {
        match presentation {
            Presentation::Identity => PresentedSet::Arguments(ids.into_iter().collect()),
            Presentation::Premises => {
                let mut premises = BTreeSet::new();
                for id in ids {
                    if let Some(argument) = self.argument(&id) {
                        premises.extend(argument.premises.iter().cloned());
                    }
                }
                PresentedSet::Premises(premises)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::aspic::Rule;

    fn lit(s: &str) -> Literal {
        s.parse().unwrap()
    }

    #[test]
    fn empty_theory_builds_nothing() {
        let theory = ArgumentationTheory::empty();
        assert!(build_arguments(&theory).is_empty());
        let fw = StructuredFramework::from_theory(theory).unwrap();
        assert_eq!(fw.af().argument_count(), 0);
    }

    #[test]
    fn premise_and_single_rule_build_two_arguments() {
        let theory = ArgumentationTheory::new(
            [],
            [lit("p")],
            vec![Rule::defeasible("d", vec![lit("p")], lit("q"))],
        )
        .unwrap();
        let args = build_arguments(&theory);
        assert_eq!(args.len(), 2);
        let premise = args.iter().find(|a| a.is_premise_argument()).unwrap();
        assert_eq!(premise.conclusion, lit("p"));
        assert_eq!(premise.premises, BTreeSet::from([lit("p")]));
        assert_eq!(premise.sub_args, BTreeSet::from([premise.id.clone()]));
        let derived = args.iter().find(|a| !a.is_premise_argument()).unwrap();
        assert_eq!(derived.conclusion, lit("q"));
        assert_eq!(derived.premises, BTreeSet::from([lit("p")]));
        assert_eq!(derived.top_rule.as_deref(), Some("d"));
        assert_eq!(derived.children, vec![premise.id.clone()]);
        assert!(derived.sub_args.contains(&premise.id));
        assert!(derived.sub_args.contains(&derived.id));
    }

    #[test]
    fn circular_rule_applications_are_cut_off() {
        let theory = ArgumentationTheory::new(
            [],
            [lit("p")],
            vec![
                Rule::defeasible("d1", vec![lit("p")], lit("q")),
                Rule::defeasible("d2", vec![lit("q")], lit("p")),
            ],
        )
        .unwrap();
        // d2 applied to [p => q] would conclude p, which that tree already
        // concludes below itself, so only [p] and [p => q] are built.
        let args = build_arguments(&theory);
        assert_eq!(args.len(), 2);
    }

    #[test]
    fn unsatisfiable_antecedents_yield_no_argument() {
        let theory = ArgumentationTheory::new(
            [],
            [lit("p")],
            vec![Rule::defeasible("d", vec![lit("r")], lit("q"))],
        )
        .unwrap();
        assert_eq!(build_arguments(&theory).len(), 1);
    }

    #[test]
    fn axioms_are_immune_to_undermining() {
        let theory = ArgumentationTheory::new(
            [lit("p")],
            [lit("~p")],
            vec![],
        )
        .unwrap();
        let args = build_arguments(&theory);
        let attacks = compute_attacks(&theory, &args);
        // ~p cannot undermine the axiom p, but p undermines the ordinary
        // premise ~p.
        assert_eq!(attacks.len(), 1);
        let attack = &attacks[0];
        let attacker = args.iter().find(|a| a.id == attack.attacker).unwrap();
        assert_eq!(attacker.conclusion, lit("p"));
        assert_eq!(
            attack.kind,
            AttackKind::Undermine { on: lit("~p") }
        );
    }

    #[test]
    fn strict_conclusions_cannot_be_rebutted() {
        let theory = ArgumentationTheory::new(
            [lit("p"), lit("r")],
            [],
            vec![
                Rule::strict("s1", vec![lit("p")], lit("q")),
                Rule::strict("s2", vec![lit("r")], lit("~q")),
            ],
        )
        .unwrap();
        let args = build_arguments(&theory);
        assert_eq!(args.len(), 4);
        assert!(compute_attacks(&theory, &args).is_empty());
    }

    #[test]
    fn defeasible_conclusions_rebut_each_other() {
        let theory = ArgumentationTheory::new(
            [lit("p"), lit("r")],
            [],
            vec![
                Rule::defeasible("d1", vec![lit("p")], lit("q")),
                Rule::defeasible("d2", vec![lit("r")], lit("~q")),
            ],
        )
        .unwrap();
        let args = build_arguments(&theory);
        let attacks = compute_attacks(&theory, &args);
        let rebuts: Vec<_> = attacks
            .iter()
            .filter(|a| matches!(a.kind, AttackKind::Rebut { .. }))
            .collect();
        assert_eq!(rebuts.len(), 2);
    }

    #[test]
    fn no_defeasible_rules_means_no_undercuts_or_rebuts() {
        let theory = ArgumentationTheory::new(
            [],
            [lit("p"), lit("~q")],
            vec![Rule::strict("s", vec![lit("p")], lit("q"))],
        )
        .unwrap();
        let args = build_arguments(&theory);
        let attacks = compute_attacks(&theory, &args);
        assert!(attacks
            .iter()
            .all(|a| matches!(a.kind, AttackKind::Undermine { .. })));
    }

    #[test]
    fn generated_ids_are_deterministic() {
        let theory = ArgumentationTheory::new(
            [],
            [lit("b"), lit("a")],
            vec![Rule::defeasible("d", vec![lit("a")], lit("c"))],
        )
        .unwrap();
        let args = build_arguments(&theory);
        let names: Vec<String> = args.iter().map(|a| a.id.to_string()).collect();
        assert_eq!(names, vec!["A1", "A2", "B1"]);
        // A1 is the lexicographically first premise literal.
        assert_eq!(args[0].conclusion, lit("a"));
    }
}
