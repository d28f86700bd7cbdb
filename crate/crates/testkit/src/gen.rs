//! Seeded random corpora. Consumers pass a seed and get a deterministic
//! sequence of frameworks or theories; rand never leaks into their code.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use argex_core::aspic::{ArgumentationTheory, Literal, Rule};
use argex_core::{ArgumentId, ArgumentationFramework};

const NAMES: [&str; 12] = [
    "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l",
];

fn random_af(rng: &mut StdRng, max_args: usize, edge_probability: f64) -> ArgumentationFramework {
    let n = rng.gen_range(1..=max_args);
    let args: Vec<ArgumentId> = NAMES[..n]
        .iter()
        .map(|s| ArgumentId::new(*s).unwrap())
        .collect();
    let mut attacks = Vec::new();
    for from in 0..n {
        for to in 0..n {
            if rng.gen_bool(edge_probability) {
                attacks.push((args[from].clone(), args[to].clone()));
            }
        }
    }
    ArgumentationFramework::new(args, attacks).expect("generated framework is well-formed")
}

/// `per_density` frameworks for each edge density, every one with at most
/// `max_args` arguments. Self-attacks are generated like any other edge.
pub fn af_corpus(
    seed: u64,
    per_density: usize,
    densities: &[f64],
    max_args: usize,
) -> Vec<ArgumentationFramework> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut corpus = Vec::new();
    for &density in densities {
        for _ in 0..per_density {
            corpus.push(random_af(&mut rng, max_args, density));
        }
    }
    corpus
}

const ATOMS: [&str; 5] = ["p1", "p2", "p3", "p4", "p5"];

fn random_literal(rng: &mut StdRng) -> Literal {
    let atom = ATOMS[rng.gen_range(0..ATOMS.len())];
    let raw = if rng.gen_bool(0.5) {
        format!("~{atom}")
    } else {
        atom.to_string()
    };
    raw.parse().unwrap()
}

/// A small theory in the ordinary-premise / defeasible-rule fragment, with
/// occasional undercut rules via `~n(<rule>)` consequents. Regenerates until
/// the constructed argument set is small enough for exhaustive enumeration.
fn random_theory(rng: &mut StdRng) -> ArgumentationTheory {
    loop {
        let rule_count = rng.gen_range(1..=6);
        let rule_names: Vec<String> = (1..=rule_count).map(|i| format!("r{i}")).collect();
        let mut premises = Vec::new();
        for _ in 0..rng.gen_range(1..=4) {
            premises.push(random_literal(rng));
        }
        let mut rules = Vec::new();
        for name in &rule_names {
            let antecedents: Vec<Literal> = (0..rng.gen_range(1..=2))
                .map(|_| random_literal(rng))
                .collect();
            let consequent: Literal = if rng.gen_bool(0.3) {
                let target = &rule_names[rng.gen_range(0..rule_names.len())];
                format!("~n({target})").parse().unwrap()
            } else {
                random_literal(rng)
            };
            rules.push(Rule::defeasible(name.clone(), antecedents, consequent));
        }
        let Ok(theory) = ArgumentationTheory::new([], premises, rules) else {
            continue;
        };
        let arguments = argex_core::aspic::build_arguments(&theory);
        if (1..=12).contains(&arguments.len()) {
            return theory;
        }
    }
}

pub fn theory_corpus(seed: u64, count: usize) -> Vec<ArgumentationTheory> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(|_| random_theory(&mut rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpora_are_deterministic() {
        let a = af_corpus(7, 3, &[0.2, 0.4], 7);
        let b = af_corpus(7, 3, &[0.2, 0.4], 7);
        assert_eq!(a.len(), 6);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x, y);
        }
        let t1 = theory_corpus(11, 5);
        let t2 = theory_corpus(11, 5);
        assert_eq!(t1, t2);
    }

    #[test]
    fn theories_stay_enumerable() {
        for theory in theory_corpus(3, 20) {
            let args = argex_core::aspic::build_arguments(&theory);
            assert!(!args.is_empty() && args.len() <= 12);
        }
    }
}
