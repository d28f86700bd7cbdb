//! Brute-force oracles, written against the set-based definitions directly:
//! subsets are enumerated exhaustively and each clause is checked literally.
//! Intended for frameworks with at most ~15 arguments.

use std::collections::BTreeSet;

use argex_core::{ArgumentId, ArgumentationFramework, Extension, Semantics};

struct Dense {
    n: usize,
    ids: Vec<ArgumentId>,
    attack: Vec<Vec<bool>>,
}

impl Dense {
    fn build(af: &ArgumentationFramework) -> Self {
        let ids: Vec<ArgumentId> = af.arguments().to_vec();
        let n = ids.len();
        let mut attack = vec![vec![false; n]; n];
        for (from, to) in af.attack_pairs() {
            let fi = ids.iter().position(|x| x == from).unwrap();
            let ti = ids.iter().position(|x| x == to).unwrap();
            attack[fi][ti] = true;
        }
        Dense { n, ids, attack }
    }

    fn members(&self, mask: u32) -> Vec<usize> {
        (0..self.n).filter(|i| mask & (1 << i) != 0).collect()
    }

    fn conflict_free(&self, mask: u32) -> bool {
        let members = self.members(mask);
        members
            .iter()
            .all(|&a| members.iter().all(|&b| !self.attack[a][b]))
    }

    fn set_attacks(&self, mask: u32, target: usize) -> bool {
        self.members(mask).iter().any(|&s| self.attack[s][target])
    }

    fn set_defends(&self, mask: u32, a: usize) -> bool {
        (0..self.n).all(|b| !self.attack[b][a] || self.set_attacks(mask, b))
    }

    fn admissible(&self, mask: u32) -> bool {
        self.conflict_free(mask)
            && self.members(mask).iter().all(|&a| self.set_defends(mask, a))
    }

    fn complete(&self, mask: u32) -> bool {
        self.admissible(mask)
            && (0..self.n)
                .all(|a| !self.set_defends(mask, a) || mask & (1 << a) != 0)
    }

    fn stable(&self, mask: u32) -> bool {
        self.conflict_free(mask)
            && (0..self.n).all(|a| mask & (1 << a) != 0 || self.set_attacks(mask, a))
    }

    fn range(&self, mask: u32) -> u32 {
        let mut range = mask;
        for a in 0..self.n {
            if self.set_attacks(mask, a) {
                range |= 1 << a;
            }
        }
        range
    }

    fn to_extension(&self, mask: u32) -> Extension {
        Extension::new(self.members(mask).into_iter().map(|i| self.ids[i].clone()))
    }
}

fn is_subset(a: u32, b: u32) -> bool {
    a & !b == 0
}

/// All extensions of `af` under `semantics` by exhaustive subset checking.
pub fn extensions_brute_force(
    af: &ArgumentationFramework,
    semantics: Semantics,
) -> Vec<Extension> {
    let dense = Dense::build(af);
    assert!(dense.n <= 20, "oracle is exponential, keep frameworks small");
    let all_masks = 0..(1u32 << dense.n);
    let masks: Vec<u32> = match semantics {
        Semantics::Admissible => all_masks.filter(|&m| dense.admissible(m)).collect(),
        Semantics::Complete => all_masks.filter(|&m| dense.complete(m)).collect(),
        Semantics::Grounded => {
            let complete: Vec<u32> = all_masks.filter(|&m| dense.complete(m)).collect();
            let minimal: Vec<u32> = complete
                .iter()
                .copied()
                .filter(|&m| {
                    !complete
                        .iter()
                        .any(|&other| other != m && is_subset(other, m))
                })
                .collect();
            assert_eq!(minimal.len(), 1, "the grounded extension is unique");
            minimal
        }
        Semantics::Preferred => {
            let complete: Vec<u32> = all_masks.filter(|&m| dense.complete(m)).collect();
            complete
                .iter()
                .copied()
                .filter(|&m| {
                    !complete
                        .iter()
                        .any(|&other| other != m && is_subset(m, other))
                })
                .collect()
        }
        Semantics::SemiStable => {
            let complete: Vec<u32> = all_masks.filter(|&m| dense.complete(m)).collect();
            complete
                .iter()
                .copied()
                .filter(|&m| {
                    let r = dense.range(m);
                    !complete.iter().any(|&other| {
                        let ro = dense.range(other);
                        ro != r && is_subset(r, ro)
                    })
                })
                .collect()
        }
        Semantics::Stable => all_masks.filter(|&m| dense.stable(m)).collect(),
    };
    let mut extensions: Vec<Extension> = masks.into_iter().map(|m| dense.to_extension(m)).collect();
    extensions.sort();
    extensions.dedup();
    extensions
}

/// Attackers and defenders of `target` found by iterating walk lengths
/// explicitly: `reach[v]` after `len` steps means a walk of that length from
/// `v` into the target. Lengths up to `2n + 2` saturate both parities.
pub fn walk_parity_dp(
    af: &ArgumentationFramework,
    target: &ArgumentId,
) -> (BTreeSet<ArgumentId>, BTreeSet<ArgumentId>) {
    let dense = Dense::build(af);
    let t = dense.ids.iter().position(|x| x == target).unwrap();
    let mut reach = vec![false; dense.n];
    reach[t] = true;
    let mut attackers = BTreeSet::new();
    let mut defenders = BTreeSet::new();
    for len in 1..=(2 * dense.n + 2) {
        let mut next = vec![false; dense.n];
        for u in 0..dense.n {
            next[u] = (0..dense.n).any(|w| dense.attack[u][w] && reach[w]);
        }
        for u in 0..dense.n {
            if next[u] {
                if len % 2 == 1 {
                    attackers.insert(dense.ids[u].clone());
                } else {
                    defenders.insert(dense.ids[u].clone());
                }
            }
        }
        reach = next;
    }
    (attackers, defenders)
}

/// The walk-interception reading of "the extension fails to defend against
/// this attack": an attacker stays in the result only if it realizes some
/// odd walk whose odd-distance vertices are all untouched by the extension.
pub fn undefended_attackers_walk_interception(
    af: &ArgumentationFramework,
    target: &ArgumentId,
    extension: &Extension,
) -> BTreeSet<ArgumentId> {
    let dense = Dense::build(af);
    let t = dense.ids.iter().position(|x| x == target).unwrap();
    let ext_members: Vec<usize> = extension
        .iter()
        .map(|m| dense.ids.iter().position(|x| x == m).unwrap())
        .collect();
    let attacked_by_ext: Vec<bool> = (0..dense.n)
        .map(|v| ext_members.iter().any(|&s| dense.attack[s][v]))
        .collect();
    // Backward reachability over (vertex, parity); entering an odd-distance
    // vertex is blocked when the extension attacks it.
    let mut odd = vec![false; dense.n];
    let mut even = vec![false; dense.n];
    even[t] = true;
    let mut queue = vec![(t, false)];
    while let Some((v, is_odd)) = queue.pop() {
        for u in 0..dense.n {
            if !dense.attack[u][v] {
                continue;
            }
            let next_odd = !is_odd;
            if next_odd && attacked_by_ext[u] {
                continue;
            }
            let seen = if next_odd { &mut odd } else { &mut even };
            if !seen[u] {
                seen[u] = true;
                queue.push((u, next_odd));
            }
        }
    }
    (0..dense.n)
        .filter(|&v| odd[v])
        .map(|v| dense.ids[v].clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_on_a_two_cycle() {
        let af =
            ArgumentationFramework::from_parts(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        let preferred = extensions_brute_force(&af, Semantics::Preferred);
        assert_eq!(preferred.len(), 2);
        let grounded = extensions_brute_force(&af, Semantics::Grounded);
        assert_eq!(grounded, vec![Extension::empty()]);
    }

    #[test]
    fn stable_oracle_uses_the_attacks_everything_clause() {
        let af = ArgumentationFramework::from_parts(
            &["x", "y", "z"],
            &[("x", "y"), ("y", "z"), ("z", "x")],
        )
        .unwrap();
        assert!(extensions_brute_force(&af, Semantics::Stable).is_empty());
    }

    #[test]
    fn walk_dp_on_a_chain() {
        let af = ArgumentationFramework::from_parts(
            &["x", "y", "z"],
            &[("x", "y"), ("y", "z")],
        )
        .unwrap();
        let (attackers, defenders) =
            walk_parity_dp(&af, &"z".parse::<ArgumentId>().unwrap());
        assert_eq!(attackers.len(), 1);
        assert!(attackers.contains(&"y".parse().unwrap()));
        assert_eq!(defenders.len(), 1);
        assert!(defenders.contains(&"x".parse().unwrap()));
    }
}
