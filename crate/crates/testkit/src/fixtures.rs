//! The two abstract frameworks and the webshop theory used as goldens
//! throughout the test suites.

use argex_core::aspic::{ArgumentationTheory, Literal, Rule, StructuredFramework};
use argex_core::{ArgumentId, ArgumentationFramework};

/// Six arguments; B and C attack each other, E and F attack each other,
/// B and D attack A, E attacks D. Four preferred extensions, empty grounded.
pub fn af1() -> ArgumentationFramework {
    ArgumentationFramework::from_parts(
        &["A", "B", "C", "D", "E", "F"],
        &[
            ("B", "A"),
            ("B", "C"),
            ("C", "B"),
            ("D", "A"),
            ("E", "D"),
            ("E", "F"),
            ("F", "E"),
        ],
    )
    .expect("fixture is well-formed")
}

/// A and B attack each other; B and D attack C; D, E, F form a 3-cycle.
pub fn af2() -> ArgumentationFramework {
    ArgumentationFramework::from_parts(
        &["A", "B", "C", "D", "E", "F"],
        &[
            ("A", "B"),
            ("B", "A"),
            ("B", "C"),
            ("D", "C"),
            ("D", "E"),
            ("E", "F"),
            ("F", "D"),
        ],
    )
    .expect("fixture is well-formed")
}

fn lit(s: &str) -> Literal {
    s.parse().expect("fixture literal is well-formed")
}

/// The webshop classification theory: six ordinary premises and six
/// defeasible rules, two of which undercut others.
pub fn webshop_theory() -> ArgumentationTheory {
    ArgumentationTheory::new(
        [],
        [
            lit("cf"),
            lit("rc"),
            lit("sa"),
            lit("ka"),
            lit("kp"),
            lit("rr"),
        ],
        vec![
            Rule::defeasible("d1", vec![lit("cf")], lit("iw")),
            Rule::defeasible("d2", vec![lit("rc")], lit("~n(d1)")),
            Rule::defeasible("d3", vec![lit("iw"), lit("sa")], lit("m")),
            Rule::defeasible("d4", vec![lit("ka")], lit("~n(d3)")),
            Rule::defeasible("d5", vec![lit("kp")], lit("~rc")),
            Rule::defeasible("d6", vec![lit("rr")], lit("~ka")),
        ],
    )
    .expect("fixture theory is well-formed")
}

pub fn webshop_framework() -> StructuredFramework {
    StructuredFramework::from_theory(webshop_theory()).expect("fixture derives cleanly")
}

/// The premise argument concluding `literal`.
pub fn premise_arg(fw: &StructuredFramework, literal: &str) -> ArgumentId {
    let wanted = lit(literal);
    fw.arguments()
        .iter()
        .find(|a| a.is_premise_argument() && a.conclusion == wanted)
        .unwrap_or_else(|| panic!("no premise argument for {literal}"))
        .id
        .clone()
}

/// The argument whose top rule is `rule` (unique in the fixtures).
pub fn rule_arg(fw: &StructuredFramework, rule: &str) -> ArgumentId {
    let matches: Vec<_> = fw
        .arguments()
        .iter()
        .filter(|a| a.top_rule.as_deref() == Some(rule))
        .collect();
    assert_eq!(matches.len(), 1, "expected a unique argument topped by {rule}");
    matches[0].id.clone()
}
