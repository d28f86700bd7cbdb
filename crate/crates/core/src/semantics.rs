//! Extension enumeration.
//!
//! Complete extensions are enumerated by three-valued labelling backtracking
//! (in/out/undec with unit propagation); grounded, preferred, semi-stable and
//! stable are derived from the complete set. Grounded additionally has a
//! direct polynomial fixpoint used by the public query. Admissible sets are
//! enumerated by their own subset backtracking, only when requested.

use crate::af::{ArgumentationFramework, Semantics};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Label {
    In,
    Out,
    Undec,
}

struct LabellingSearch<'a> {
    af: &'a ArgumentationFramework,
    labels: Vec<Option<Label>>,
    trail: Vec<usize>,
    results: Vec<Vec<usize>>,
}

impl<'a> LabellingSearch<'a> {
    fn new(af: &'a ArgumentationFramework) -> Self {
        LabellingSearch {
            af,
            labels: vec![None; af.argument_count()],
            trail: Vec::new(),
            results: Vec::new(),
        }
    }

    /// Assigns a label and propagates its consequences. Returns false on
    /// contradiction.
    fn assign(&mut self, v: usize, label: Label) -> bool {
        if let Some(current) = self.labels[v] {
            return current == label;
        }
        self.labels[v] = Some(label);
        self.trail.push(v);
        match label {
            Label::In => {
                // Everything attacking or attacked by an in-argument is out.
                for i in 0..self.af.attacker_indices(v).len() {
                    let b = self.af.attacker_indices(v)[i];
                    if !self.assign(b, Label::Out) {
                        return false;
                    }
                }
                for i in 0..self.af.target_indices(v).len() {
                    let t = self.af.target_indices(v)[i];
                    if !self.assign(t, Label::Out) {
                        return false;
                    }
                }
            }
            Label::Out => {
                // A target whose attackers are now all out must be in.
                for i in 0..self.af.target_indices(v).len() {
                    let t = self.af.target_indices(v)[i];
                    let all_out = self
                        .af
                        .attacker_indices(t)
                        .iter()
                        .all(|&b| self.labels[b] == Some(Label::Out));
                    if all_out && !self.assign(t, Label::In) {
                        return false;
                    }
                }
            }
            Label::Undec => {}
        }
        true
    }

    fn rollback(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap();
            self.labels[v] = None;
        }
    }

    /// Seeds the grounded part: unattacked arguments are in.
    fn propagate_grounded(&mut self) -> bool {
        for v in 0..self.af.argument_count() {
            if self.af.attacker_indices(v).is_empty() && !self.assign(v, Label::In) {
                return false;
            }
        }
        true
    }

    fn branch(&mut self, from: usize) {
        let next = (from..self.af.argument_count()).find(|&v| self.labels[v].is_none());
        let Some(v) = next else {
            if self.is_complete_labelling() {
                self.results.push(self.in_set());
            }
            return;
        };
        for label in [Label::In, Label::Out, Label::Undec] {
            let mark = self.trail.len();
            if self.assign(v, label) {
                self.branch(v + 1);
            }
            self.rollback(mark);
        }
    }

    fn is_complete_labelling(&self) -> bool {
        (0..self.af.argument_count()).all(|v| {
            let attackers = self.af.attacker_indices(v);
            match self.labels[v] {
                Some(Label::In) => attackers
                    .iter()
                    .all(|&b| self.labels[b] == Some(Label::Out)),
                Some(Label::Out) => attackers
                    .iter()
                    .any(|&b| self.labels[b] == Some(Label::In)),
                Some(Label::Undec) => {
                    let any_in = attackers.iter().any(|&b| self.labels[b] == Some(Label::In));
                    let all_out = attackers
                        .iter()
                        .all(|&b| self.labels[b] == Some(Label::Out));
                    !any_in && !all_out
                }
                None => false,
            }
        })
    }

    fn in_set(&self) -> Vec<usize> {
        (0..self.af.argument_count())
            .filter(|&v| self.labels[v] == Some(Label::In))
            .collect()
    }
}

impl ArgumentationFramework {
    /// In-sets of all complete labellings, cached. Each complete extension
    /// corresponds to exactly one complete labelling.
    pub(crate) fn complete_index_sets(&self) -> &[Vec<usize>] {
        self.complete_cache_ref().get_or_init(|| {
            let mut search = LabellingSearch::new(self);
            if !search.propagate_grounded() {
                return Vec::new();
            }
            search.branch(0);
            let mut sets = search.results;
            sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            sets.dedup();
            sets
        })
    }

    /// The grounded in-set by propagation alone, without enumeration.
    pub(crate) fn grounded_index_set(&self) -> Vec<usize> {
        let mut search = LabellingSearch::new(self);
        let ok = search.propagate_grounded();
        debug_assert!(ok, "grounded propagation cannot conflict");
        search.in_set()
    }

    pub(crate) fn admissible_index_sets(&self) -> &[Vec<usize>] {
        self.admissible_cache_ref().get_or_init(|| {
            let mut sets = Vec::new();
            let mut current = Vec::new();
            self.admissible_backtrack(0, &mut current, &mut sets);
            sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            sets
        })
    }

    fn admissible_backtrack(
        &self,
        v: usize,
        current: &mut Vec<usize>,
        results: &mut Vec<Vec<usize>>,
    ) {
        if v == self.argument_count() {
            let attacked = self.attacked_by_indices(current);
            let defended = current
                .iter()
                .all(|&s| self.attacker_indices(s).iter().all(|&b| attacked[b]));
            if defended {
                results.push(current.clone());
            }
            return;
        }
        self.admissible_backtrack(v + 1, current, results);
        let conflict = self.has_attack_idx(v, v)
            || current
                .iter()
                .any(|&s| self.has_attack_idx(s, v) || self.has_attack_idx(v, s));
        if !conflict {
            current.push(v);
            self.admissible_backtrack(v + 1, current, results);
            current.pop();
        }
    }

    pub(crate) fn extension_index_sets(&self, semantics: Semantics) -> Vec<Vec<usize>> {
        match semantics {
            Semantics::Admissible => self.admissible_index_sets().to_vec(),
            Semantics::Complete => self.complete_index_sets().to_vec(),
            Semantics::Grounded => vec![self.grounded_index_set()],
            Semantics::Preferred => maximal_by_subset(self.complete_index_sets()),
            Semantics::SemiStable => {
                let complete = self.complete_index_sets();
                let ranges: Vec<Vec<usize>> = complete
                    .iter()
                    .map(|set| self.range_of(set))
                    .collect();
                let keep: Vec<bool> = ranges
                    .iter()
                    .map(|r| {
                        !ranges
                            .iter()
                            .any(|other| is_strict_superset(other, r))
                    })
                    .collect();
                complete
                    .iter()
                    .zip(keep)
                    .filter(|(_, k)| *k)
                    .map(|(s, _)| s.clone())
                    .collect()
            }
            Semantics::Stable => {
                let n = self.argument_count();
                self.complete_index_sets()
                    .iter()
                    .filter(|set| self.range_of(set).len() == n)
                    .cloned()
                    .collect()
            }
        }
    }

    /// The range of a set: itself plus everything it attacks.
    fn range_of(&self, set: &[usize]) -> Vec<usize> {
        let mut mask = self.attacked_by_indices(set);
        for &s in set {
            mask[s] = true;
        }
        (0..self.argument_count()).filter(|&v| mask[v]).collect()
    }

    fn complete_cache_ref(&self) -> &std::sync::OnceLock<Vec<Vec<usize>>> {
        &self.complete_cache
    }

    fn admissible_cache_ref(&self) -> &std::sync::OnceLock<Vec<Vec<usize>>> {
        &self.admissible_cache
    }
}

fn is_strict_superset(a: &[usize], b: &[usize]) -> bool {
    a.len() > b.len() && b.iter().all(|x| a.binary_search(x).is_ok())
}

fn maximal_by_subset(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    sets.iter()
        .filter(|s| !sets.iter().any(|other| is_strict_superset(other, s)))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use crate::af::{ArgumentationFramework, Extension, Semantics};

    fn ext(members: &[&str]) -> Extension {
        Extension::new(
            members
                .iter()
                .map(|s| crate::af::ArgumentId::new(*s).unwrap()),
        )
    }

    #[test]
    fn empty_framework_has_single_empty_extension_everywhere() {
        let af = ArgumentationFramework::from_parts(&[], &[]).unwrap();
        for sem in Semantics::ALL {
            assert_eq!(af.extensions(sem), &[Extension::empty()], "{sem}");
        }
    }

    #[test]
    fn unattacked_argument_is_grounded() {
        let af = ArgumentationFramework::from_parts(&["a"], &[]).unwrap();
        assert_eq!(af.extensions(Semantics::Grounded), &[ext(&["a"])]);
        assert_eq!(af.extensions(Semantics::Stable), &[ext(&["a"])]);
    }

    #[test]
    fn mutual_attack_yields_two_preferred() {
        let af =
            ArgumentationFramework::from_parts(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(
            af.extensions(Semantics::Preferred),
            &[ext(&["a"]), ext(&["b"])]
        );
        assert_eq!(af.extensions(Semantics::Grounded), &[Extension::empty()]);
        assert_eq!(
            af.extensions(Semantics::Complete),
            &[Extension::empty(), ext(&["a"]), ext(&["b"])]
        );
    }

    #[test]
    fn odd_cycle_has_no_stable_extension() {
        let af = ArgumentationFramework::from_parts(
            &["x", "y", "z"],
            &[("x", "y"), ("y", "z"), ("z", "x")],
        )
        .unwrap();
        assert!(af.extensions(Semantics::Stable).is_empty());
        assert_eq!(af.extensions(Semantics::Preferred), &[Extension::empty()]);
        assert_eq!(af.extensions(Semantics::SemiStable), &[Extension::empty()]);
    }

    #[test]
    fn self_attacker_stays_undecided() {
        let af = ArgumentationFramework::from_parts(&["s", "t"], &[("s", "s")]).unwrap();
        assert_eq!(af.extensions(Semantics::Grounded), &[ext(&["t"])]);
        assert_eq!(af.extensions(Semantics::Preferred), &[ext(&["t"])]);
        assert!(af.extensions(Semantics::Stable).is_empty());
    }

    #[test]
    fn self_attacker_attacked_from_outside_can_be_ruled_out() {
        let af =
            ArgumentationFramework::from_parts(&["s", "u"], &[("s", "s"), ("u", "s")]).unwrap();
        assert_eq!(af.extensions(Semantics::Stable), &[ext(&["u"])]);
    }

    #[test]
    fn grounded_propagation_matches_minimal_complete() {
        let af = ArgumentationFramework::from_parts(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d")],
        )
        .unwrap();
        assert_eq!(af.extensions(Semantics::Grounded), &[ext(&["a", "c"])]);
        assert_eq!(af.extensions(Semantics::Complete), &[ext(&["a", "c"])]);
    }

    #[test]
    fn admissible_contains_empty_set_and_defended_singletons() {
        let af =
            ArgumentationFramework::from_parts(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(
            af.extensions(Semantics::Admissible),
            &[Extension::empty(), ext(&["a"]), ext(&["b"])]
        );
    }
}
