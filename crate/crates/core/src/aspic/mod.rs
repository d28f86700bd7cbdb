//! Structured argumentation on top of the abstract layer.
//!
//! A theory holds a knowledge base (axioms and ordinary premises) together
//! with strict and defeasible rules. Arguments are tree-shaped derivations
//! built from the knowledge base; attacks between them (undercut, rebut,
//! undermine) induce an abstract framework on which the usual semantics and
//! explanations apply, lifted to the formulas the arguments conclude.

mod build;
mod formula;

pub use build::{build_arguments, compute_attacks, StructuredFramework};
pub use formula::{
    FormulaAcceptance, FormulaAcceptanceCandidate, FormulaAcceptanceCandidates, FormulaStatus,
    PresentedContrastive,
};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::af::ArgumentId;
use crate::error::{Error, Result};

/// The atom of a literal: a plain propositional token, or a reference
/// `n(<rule>)` to the applicability of a defeasible rule.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Plain(String),
    RuleRef(String),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Plain(name) => f.write_str(name),
            Atom::RuleRef(rule) => write!(f, "n({rule})"),
        }
    }
}

/// A propositional literal under classical negation. Double negation is
/// normalized away, so `-φ` is simply the polarity flip.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: Atom,
    pub negated: bool,
}

impl Literal {
    pub fn positive(atom: Atom) -> Self {
        Literal {
            atom,
            negated: false,
        }
    }

    pub fn negative(atom: Atom) -> Self {
        Literal {
            atom,
            negated: true,
        }
    }

    /// The classical contrary of this literal.
    pub fn negated(&self) -> Literal {
        Literal {
            atom: self.atom.clone(),
            negated: !self.negated,
        }
    }

    pub fn rule_ref(&self) -> Option<&str> {
        match &self.atom {
            Atom::RuleRef(rule) => Some(rule),
            Atom::Plain(_) => None,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "~{}", self.atom)
        } else {
            write!(f, "{}", self.atom)
        }
    }
}

fn valid_token(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FromStr for Literal {
    type Err = String;

    /// Accepts `[~]atom` and `[~]n(<rule>)`; repeated `~` collapse by parity.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut rest = s.trim();
        let mut negated = false;
        while let Some(stripped) = rest.strip_prefix('~') {
            negated = !negated;
            rest = stripped.trim_start();
        }
        let atom = if let Some(inner) = rest.strip_prefix("n(").and_then(|r| r.strip_suffix(')')) {
            let rule = inner.trim();
            if !valid_token(rule) {
                return Err(format!("invalid rule name in literal `{s}`"));
            }
            Atom::RuleRef(rule.to_string())
        } else {
            if !valid_token(rest) {
                return Err(format!("invalid literal `{s}`"));
            }
            Atom::Plain(rest.to_string())
        };
        Ok(Literal { atom, negated })
    }
}

impl Serialize for Literal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Literal {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleKind {
    Strict,
    Defeasible,
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleKind::Strict => f.write_str("strict"),
            RuleKind::Defeasible => f.write_str("defeasible"),
        }
    }
}

/// An inference rule. Only defeasible rules can be undercut via their
/// `n(<name>)` handle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rule {
    pub name: String,
    pub kind: RuleKind,
    pub antecedents: Vec<Literal>,
    pub consequent: Literal,
}

impl Rule {
    pub fn strict(
        name: impl Into<String>,
        antecedents: Vec<Literal>,
        consequent: Literal,
    ) -> Self {
        Rule {
            name: name.into(),
            kind: RuleKind::Strict,
            antecedents,
            consequent,
        }
    }

    pub fn defeasible(
        name: impl Into<String>,
        antecedents: Vec<Literal>,
        consequent: Literal,
    ) -> Self {
        Rule {
            name: name.into(),
            kind: RuleKind::Defeasible,
            antecedents,
            consequent,
        }
    }

    pub fn is_defeasible(&self) -> bool {
        self.kind == RuleKind::Defeasible
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrow = match self.kind {
            RuleKind::Strict => "->",
            RuleKind::Defeasible => "=>",
        };
        let body = self
            .antecedents
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        write!(f, "{}: {} {} {}", self.name, body, arrow, self.consequent)
    }
}

/// A knowledge base plus rules. Axioms and ordinary premises are disjoint;
/// rule names are unique; every `n(<rule>)` occurrence must name a
/// defeasible rule of the theory.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArgumentationTheory {
    axioms: BTreeSet<Literal>,
    premises: BTreeSet<Literal>,
    rules: Vec<Rule>,
}

impl ArgumentationTheory {
    pub fn new(
        axioms: impl IntoIterator<Item = Literal>,
        premises: impl IntoIterator<Item = Literal>,
        rules: Vec<Rule>,
    ) -> Result<Self> {
        let axioms: BTreeSet<Literal> = axioms.into_iter().collect();
        let premises: BTreeSet<Literal> = premises.into_iter().collect();
        if let Some(shared) = axioms.intersection(&premises).next() {
            return Err(Error::AxiomPremiseOverlap(shared.clone()));
        }
        let mut names = BTreeSet::new();
        for rule in &rules {
            if !names.insert(rule.name.clone()) {
                return Err(Error::DuplicateRuleName(rule.name.clone()));
            }
        }
        let defeasible: BTreeSet<&str> = rules
            .iter()
            .filter(|r| r.is_defeasible())
            .map(|r| r.name.as_str())
            .collect();
        let theory = ArgumentationTheory {
            axioms,
            premises,
            rules,
        };
        for literal in theory.all_literals() {
            if let Some(rule) = literal.rule_ref() {
                if !defeasible.contains(rule) {
                    return Err(Error::UnknownRuleReference(rule.to_string()));
                }
            }
        }
        Ok(theory)
    }

    pub fn empty() -> Self {
        ArgumentationTheory {
            axioms: BTreeSet::new(),
            premises: BTreeSet::new(),
            rules: Vec::new(),
        }
    }

    pub fn axioms(&self) -> &BTreeSet<Literal> {
        &self.axioms
    }

    pub fn premises(&self) -> &BTreeSet<Literal> {
        &self.premises
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule(&self, name: &str) -> Option<&Rule> {
        self.rules.iter().find(|r| r.name == name)
    }

    pub fn is_axiom(&self, literal: &Literal) -> bool {
        self.axioms.contains(literal)
    }

    /// Every literal of the knowledge base, in canonical order.
    pub fn knowledge(&self) -> impl Iterator<Item = &Literal> {
        self.axioms.iter().chain(self.premises.iter())
    }

    fn all_literals(&self) -> impl Iterator<Item = &Literal> {
        self.knowledge().chain(
            self.rules
                .iter()
                .flat_map(|r| r.antecedents.iter().chain(std::iter::once(&r.consequent))),
        )
    }
}

/// A tree-shaped derivation: either a knowledge-base literal, or a rule
/// applied to sub-derivations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredArgument {
    pub id: ArgumentId,
    pub conclusion: Literal,
    /// Knowledge-base literals the derivation rests on.
    pub premises: BTreeSet<Literal>,
    /// All sub-arguments, the argument itself included.
    pub sub_args: BTreeSet<ArgumentId>,
    /// Direct sub-arguments in rule-antecedent order; empty for premise
    /// arguments.
    pub children: Vec<ArgumentId>,
    /// Name of the rule applied last, if any.
    pub top_rule: Option<String>,
}

impl StructuredArgument {
    pub fn is_premise_argument(&self) -> bool {
        self.top_rule.is_none()
    }

    /// Human-readable structure, e.g. `B1, A3 =d3=> m`.
    pub fn structure(&self) -> String {
        match &self.top_rule {
            None => self.conclusion.to_string(),
            Some(rule) => {
                let children = self
                    .children
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(", ");
                format!("{children} ={rule}=> {}", self.conclusion)
            }
        }
    }
}

/// The way one structured argument attacks another.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AttackKind {
    /// The attacker concludes the contrary of `n(r)` for the defeasible top
    /// rule `r` of the recorded sub-argument.
    Undercut { on: ArgumentId },
    /// The attacker concludes the contrary of a defeasible sub-conclusion.
    Rebut { on: ArgumentId },
    /// The attacker concludes the contrary of an ordinary premise.
    Undermine { on: Literal },
}

impl AttackKind {
    pub fn name(&self) -> &'static str {
        match self {
            AttackKind::Undercut { .. } => "undercut",
            AttackKind::Rebut { .. } => "rebut",
            AttackKind::Undermine { .. } => "undermine",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Attack {
    pub attacker: ArgumentId,
    pub target: ArgumentId,
    #[serde(flatten)]
    pub kind: AttackKind,
}

impl fmt::Display for Attack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let on = match &self.kind {
            AttackKind::Undercut { on } | AttackKind::Rebut { on } => on.to_string(),
            AttackKind::Undermine { on } => on.to_string(),
        };
        write!(
            f,
            "{} -> {} [{} on {}]",
            self.attacker,
            self.target,
            self.kind.name(),
            on
        )
    }
}

/// What a formula explanation presents: the arguments themselves, or the
/// premises they rest on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Presentation {
    #[serde(rename = "id")]
    Identity,
    #[serde(rename = "prem")]
    Premises,
}

/// An explanation after presentation: argument ids or premise literals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PresentedSet {
    Arguments(BTreeSet<ArgumentId>),
    Premises(BTreeSet<Literal>),
}

impl PresentedSet {
    pub fn len(&self) -> usize {
        match self {
            PresentedSet::Arguments(s) => s.len(),
            PresentedSet::Premises(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn intersection(&self, other: &PresentedSet) -> PresentedSet {
        match (self, other) {
            (PresentedSet::Arguments(a), PresentedSet::Arguments(b)) => {
                PresentedSet::Arguments(a.intersection(b).cloned().collect())
            }
            (PresentedSet::Premises(a), PresentedSet::Premises(b)) => {
                PresentedSet::Premises(a.intersection(b).cloned().collect())
            }
            _ => unreachable!("presentations are never mixed within one query"),
        }
    }

    pub fn union(&self, other: &PresentedSet) -> PresentedSet {
        match (self, other) {
            (PresentedSet::Arguments(a), PresentedSet::Arguments(b)) => {
                PresentedSet::Arguments(a.union(b).cloned().collect())
            }
            (PresentedSet::Premises(a), PresentedSet::Premises(b)) => {
                PresentedSet::Premises(a.union(b).cloned().collect())
            }
            _ => unreachable!("presentations are never mixed within one query"),
        }
    }

    /// Canonical comparison: cardinality first, then members.
    pub fn cmp_canonical(&self, other: &PresentedSet) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| match (self, other) {
            (PresentedSet::Arguments(a), PresentedSet::Arguments(b)) => a.cmp(b),
            (PresentedSet::Premises(a), PresentedSet::Premises(b)) => a.cmp(b),
            _ => unreachable!("presentations are never mixed within one query"),
        })
    }

    pub fn rendered_items(&self) -> Vec<String> {
        match self {
            PresentedSet::Arguments(s) => s.iter().map(|a| a.to_string()).collect(),
            PresentedSet::Premises(s) => s.iter().map(|l| l.to_string()).collect(),
        }
    }
}

impl fmt::Display for PresentedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.rendered_items().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(s: &str) -> Literal {
        s.parse().unwrap()
    }

    #[test]
    fn literal_parsing_and_negation() {
        assert_eq!(lit("p"), Literal::positive(Atom::Plain("p".into())));
        assert_eq!(lit("~p"), Literal::negative(Atom::Plain("p".into())));
        assert_eq!(lit("~~p"), lit("p"));
        assert_eq!(lit("n(d1)"), Literal::positive(Atom::RuleRef("d1".into())));
        assert_eq!(lit("~n(d1)").negated(), lit("n(d1)"));
        assert_eq!(lit("~p").negated(), lit("p"));
        assert!("".parse::<Literal>().is_err());
        assert!("p q".parse::<Literal>().is_err());
        assert!("n()".parse::<Literal>().is_err());
    }

    #[test]
    fn literal_display_round_trips() {
        for raw in ["p", "~p", "n(d1)", "~n(d1)"] {
            assert_eq!(lit(raw).to_string(), raw);
        }
    }

    #[test]
    fn theory_rejects_axiom_premise_overlap() {
        let err = ArgumentationTheory::new([lit("p")], [lit("p")], vec![]).unwrap_err();
        assert_eq!(err, Error::AxiomPremiseOverlap(lit("p")));
    }

    #[test]
    fn theory_rejects_duplicate_rule_names() {
        let rules = vec![
            Rule::defeasible("d", vec![lit("p")], lit("q")),
            Rule::defeasible("d", vec![lit("q")], lit("r")),
        ];
        let err = ArgumentationTheory::new([], [lit("p")], rules).unwrap_err();
        assert_eq!(err, Error::DuplicateRuleName("d".into()));
    }

    #[test]
    fn theory_rejects_dangling_rule_references() {
        let rules = vec![Rule::defeasible("d1", vec![lit("p")], lit("~n(d9)"))];
        let err = ArgumentationTheory::new([], [lit("p")], rules).unwrap_err();
        assert_eq!(err, Error::UnknownRuleReference("d9".into()));
    }

    #[test]
    fn rule_references_must_point_at_defeasible_rules() {
        let rules = vec![
            Rule::strict("s1", vec![lit("p")], lit("q")),
            Rule::defeasible("d1", vec![lit("q")], lit("~n(s1)")),
        ];
        let err = ArgumentationTheory::new([], [lit("p")], rules).unwrap_err();
        assert_eq!(err, Error::UnknownRuleReference("s1".into()));
    }
}
