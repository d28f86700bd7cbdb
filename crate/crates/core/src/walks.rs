//! Indirect attack and defense between individual arguments.
//!
//! An argument attacks another iff there is a directed attack walk of odd
//! length into it, and defends it iff there is an even walk of length at
//! least two. Walks may repeat vertices, so both are computed by
//! reachability on the vertex-parity product graph; an argument on an odd
//! cycle can be attacker and defender at once.

use std::collections::{BTreeSet, VecDeque};

use crate::af::{ArgumentationFramework, ArgumentId, Relevance};
use crate::error::Result;

#[derive(Debug)]
pub(crate) struct ParityReach {
    /// odd[v]: some odd-length walk leads from v to the target.
    pub odd: Vec<bool>,
    /// even[v]: some even-length walk (possibly length zero for the target
    /// itself) leads from v to the target.
    pub even: Vec<bool>,
}

impl ArgumentationFramework {
    /// Walks into `target`, tracked by length parity. Backward BFS over the
    /// doubled state space, so it saturates in O(|args| + |attacks|).
    pub(crate) fn parity_reach_into(&self, target: usize) -> ParityReach {
        let n = self.argument_count();
        let mut odd = vec![false; n];
        let mut even = vec![false; n];
        let mut queue = VecDeque::new();
        even[target] = true;
        queue.push_back((target, false));
        while let Some((v, is_odd)) = queue.pop_front() {
            for &u in self.attacker_indices(v) {
                let next_odd = !is_odd;
                let seen = if next_odd { &mut odd } else { &mut even };
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back((u, next_odd));
                }
            }
        }
        ParityReach { odd, even }
    }

    /// Arguments with an odd-length attack walk into `argument`.
    pub fn indirect_attackers(&self, argument: &ArgumentId) -> Result<BTreeSet<ArgumentId>> {
        let target = self.idx(argument)?;
        let reach = self.parity_reach_into(target);
        Ok((0..self.argument_count())
            .filter(|&v| reach.odd[v])
            .map(|v| self.id_of(v).clone())
            .collect())
    }

    /// Arguments with an even-length walk of length at least two into
    /// `argument`: every such walk is one attack edge onto an odd walk.
    pub fn indirect_defenders(&self, argument: &ArgumentId) -> Result<BTreeSet<ArgumentId>> {
        let target = self.idx(argument)?;
        let reach = self.parity_reach_into(target);
        Ok((0..self.argument_count())
            .filter(|&u| self.target_indices(u).iter().any(|&w| reach.odd[w]))
            .map(|u| self.id_of(u).clone())
            .collect())
    }

    /// True iff `a` reaches `b` by an odd-length attack walk.
    pub(crate) fn attacks_indirectly_idx(&self, a: usize, b: usize) -> bool {
        self.parity_reach_into(b).odd[a]
    }

    /// How `a` bears on `b`: conflict-relevant when it (in)directly attacks
    /// `b`, defending-relevant when it (in)directly defends `b`, and never
    /// relevant when it attacks itself.
    pub fn relevance(&self, a: &ArgumentId, b: &ArgumentId) -> Result<Relevance> {
        let ai = self.idx(a)?;
        let bi = self.idx(b)?;
        if self.has_attack_idx(ai, ai) {
            return Ok(Relevance::NotRelevant);
        }
        let reach = self.parity_reach_into(bi);
        let attacks = reach.odd[ai];
        let defends = self.target_indices(ai).iter().any(|&w| reach.odd[w]);
        Ok(match (attacks, defends) {
            (true, true) => Relevance::Both,
            (true, false) => Relevance::ConflictRelevant,
            (false, true) => Relevance::DefendingRelevant,
            (false, false) => Relevance::NotRelevant,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> ArgumentId {
        ArgumentId::new(s).unwrap()
    }

    fn ids(names: &[&str]) -> BTreeSet<ArgumentId> {
        names.iter().map(|s| id(s)).collect()
    }

    #[test]
    fn chain_parity() {
        let af = ArgumentationFramework::from_parts(
            &["x", "y", "z"],
            &[("x", "y"), ("y", "z")],
        )
        .unwrap();
        assert_eq!(af.indirect_attackers(&id("z")).unwrap(), ids(&["y"]));
        assert_eq!(af.indirect_defenders(&id("z")).unwrap(), ids(&["x"]));
    }

    #[test]
    fn odd_cycle_members_attack_and_defend_everything_on_it() {
        let af = ArgumentationFramework::from_parts(
            &["d", "e", "f"],
            &[("d", "e"), ("e", "f"), ("f", "d")],
        )
        .unwrap();
        // Walking the 3-cycle flips parity each lap, so every member reaches
        // every other with both parities.
        for target in ["d", "e", "f"] {
            assert_eq!(
                af.indirect_attackers(&id(target)).unwrap(),
                ids(&["d", "e", "f"])
            );
            assert_eq!(
                af.indirect_defenders(&id(target)).unwrap(),
                ids(&["d", "e", "f"])
            );
        }
    }

    #[test]
    fn two_cycle_separates_parities() {
        let af =
            ArgumentationFramework::from_parts(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(af.indirect_attackers(&id("b")).unwrap(), ids(&["a"]));
        assert_eq!(af.indirect_defenders(&id("b")).unwrap(), ids(&["b"]));
    }

    #[test]
    fn self_attacker_is_not_relevant_for_anything() {
        let af =
            ArgumentationFramework::from_parts(&["s", "a"], &[("s", "s"), ("s", "a")]).unwrap();
        assert_eq!(af.relevance(&id("s"), &id("a")).unwrap(), Relevance::NotRelevant);
        // It still shows up as a walk-level attacker.
        assert!(af.indirect_attackers(&id("a")).unwrap().contains(&id("s")));
    }

    #[test]
    fn disconnected_arguments_are_not_relevant() {
        let af = ArgumentationFramework::from_parts(&["a", "b"], &[]).unwrap();
        assert_eq!(af.relevance(&id("a"), &id("b")).unwrap(), Relevance::NotRelevant);
    }

    #[test]
    fn relevance_both_via_odd_cycle() {
        // c is attacked by b and d; d sits on a 3-cycle, so d attacks c with
        // odd walks and defends it with even ones.
        let af = ArgumentationFramework::from_parts(
            &["a", "b", "c", "d", "e", "f"],
            &[
                ("a", "b"),
                ("b", "a"),
                ("b", "c"),
                ("d", "c"),
                ("d", "e"),
                ("e", "f"),
                ("f", "d"),
            ],
        )
        .unwrap();
        assert_eq!(af.relevance(&id("d"), &id("c")).unwrap(), Relevance::Both);
        assert_eq!(
            af.relevance(&id("f"), &id("e")).unwrap(),
            Relevance::Both
        );
        assert_eq!(
            af.relevance(&id("a"), &id("c")).unwrap(),
            Relevance::DefendingRelevant
        );
    }
}
