//! Abstract argumentation frameworks: a finite set of arguments and a binary
//! attack relation between them.
//!
//! A framework is immutable once constructed. Extension enumeration is cached
//! internally per semantics, so a framework can be shared read-only between
//! concurrent queries; identical inputs always produce identical, canonically
//! ordered outputs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Identifier of an argument: a non-empty token of letters, digits and
/// underscores. Ordered lexicographically, which fixes the canonical order of
/// every set this crate returns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArgumentId(String);

impl ArgumentId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        let valid = !name.is_empty()
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if valid {
            Ok(ArgumentId(name))
        } else {
            Err(Error::InvalidArgumentId(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for ArgumentId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ArgumentId::new(s)
    }
}

/// The extension-based semantics supported by [`ArgumentationFramework::extensions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Semantics {
    Admissible,
    Complete,
    Grounded,
    Preferred,
    SemiStable,
    Stable,
}

impl Semantics {
    pub const ALL: [Semantics; 6] = [
        Semantics::Admissible,
        Semantics::Complete,
        Semantics::Grounded,
        Semantics::Preferred,
        Semantics::SemiStable,
        Semantics::Stable,
    ];

    pub(crate) fn cache_slot(self) -> usize {
        match self {
            Semantics::Admissible => 0,
            Semantics::Complete => 1,
            Semantics::Grounded => 2,
            Semantics::Preferred => 3,
            Semantics::SemiStable => 4,
            Semantics::Stable => 5,
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Semantics::Admissible => "admissible",
            Semantics::Complete => "complete",
            Semantics::Grounded => "grounded",
            Semantics::Preferred => "preferred",
            Semantics::SemiStable => "semi-stable",
            Semantics::Stable => "stable",
        };
        f.write_str(name)
    }
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "admissible" => Ok(Semantics::Admissible),
            "complete" => Ok(Semantics::Complete),
            "grounded" => Ok(Semantics::Grounded),
            "preferred" => Ok(Semantics::Preferred),
            "semi-stable" => Ok(Semantics::SemiStable),
            "stable" => Ok(Semantics::Stable),
            other => Err(format!("unknown semantics `{other}`")),
        }
    }
}

/// Acceptance strategy: skeptical quantifies over all extensions, credulous
/// over at least one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Skeptical,
    Credulous,
}

impl Strategy {
    /// The opposite strategy, used for the foil side of a contrastive
    /// explanation.
    pub fn dagger(self) -> Strategy {
        match self {
            Strategy::Skeptical => Strategy::Credulous,
            Strategy::Credulous => Strategy::Skeptical,
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Skeptical => f.write_str("skeptically"),
            Strategy::Credulous => f.write_str("credulously"),
        }
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "skeptical" => Ok(Strategy::Skeptical),
            "credulous" => Ok(Strategy::Credulous),
            other => Err(format!("unknown strategy `{other}`")),
        }
    }
}

/// A set of arguments jointly acceptable under some semantics.
///
/// Extensions order canonically by (cardinality, lexicographic member list).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Extension {
    members: BTreeSet<ArgumentId>,
}

impl Extension {
    pub fn new(members: impl IntoIterator<Item = ArgumentId>) -> Self {
        Extension {
            members: members.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        Extension {
            members: BTreeSet::new(),
        }
    }

    pub fn members(&self) -> &BTreeSet<ArgumentId> {
        &self.members
    }

    pub fn contains(&self, id: &ArgumentId) -> bool {
        self.members.contains(id)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArgumentId> {
        self.members.iter()
    }
}

impl Ord for Extension {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members
            .len()
            .cmp(&other.members.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Extension {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, id) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{id}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<ArgumentId> for Extension {
    fn from_iter<T: IntoIterator<Item = ArgumentId>>(iter: T) -> Self {
        Extension::new(iter)
    }
}

/// The four acceptance flags of an argument under one semantics.
///
/// For a fixed strategy, accepted and non-accepted are complementary, but an
/// argument is commonly credulously accepted and skeptically non-accepted at
/// the same time, so all four flags are reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcceptanceStatus {
    pub credulously_accepted: bool,
    pub skeptically_accepted: bool,
    pub credulously_non_accepted: bool,
    pub skeptically_non_accepted: bool,
}

impl AcceptanceStatus {
    pub fn accepted(&self, strategy: Strategy) -> bool {
        match strategy {
            Strategy::Skeptical => self.skeptically_accepted,
            Strategy::Credulous => self.credulously_accepted,
        }
    }

    pub fn non_accepted(&self, strategy: Strategy) -> bool {
        match strategy {
            Strategy::Skeptical => self.skeptically_non_accepted,
            Strategy::Credulous => self.credulously_non_accepted,
        }
    }
}

/// How one argument bears on another, following the relevance notion that
/// excludes self-attackers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relevance {
    ConflictRelevant,
    DefendingRelevant,
    Both,
    NotRelevant,
}

/// An abstract argumentation framework: arguments plus a directed attack
/// relation. Self-attacks are allowed.
pub struct ArgumentationFramework {
    ids: Vec<ArgumentId>,
    attacks: BTreeSet<(usize, usize)>,
    attackers: Vec<Vec<usize>>,
    targets: Vec<Vec<usize>>,
    complete_cache: OnceLock<Vec<Vec<usize>>>,
    admissible_cache: OnceLock<Vec<Vec<usize>>>,
    extension_cache: [OnceLock<Vec<Extension>>; 6],
}

impl fmt::Debug for ArgumentationFramework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArgumentationFramework")
            .field("arguments", &self.ids)
            .field("attacks", &self.attack_pairs().collect::<Vec<_>>())
            .finish()
    }
}

impl PartialEq for ArgumentationFramework {
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids && self.attacks == other.attacks
    }
}

impl Eq for ArgumentationFramework {}

impl ArgumentationFramework {
    /// Builds a framework from its arguments and attack pairs. Duplicate
    /// arguments and attack pairs collapse (both are sets); an attack endpoint
    /// that is not a declared argument is an error.
    pub fn new(
        arguments: impl IntoIterator<Item = ArgumentId>,
        attacks: impl IntoIterator<Item = (ArgumentId, ArgumentId)>,
    ) -> Result<Self> {
        let ids: Vec<ArgumentId> = arguments
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let lookup = |id: &ArgumentId| -> Result<usize> {
            ids.binary_search(id)
                .map_err(|_| Error::UnknownArgument(id.to_string()))
        };
        let mut pairs = BTreeSet::new();
        for (from, to) in attacks {
            pairs.insert((lookup(&from)?, lookup(&to)?));
        }
        let mut attackers = vec![Vec::new(); ids.len()];
        let mut targets = vec![Vec::new(); ids.len()];
        for &(from, to) in &pairs {
            attackers[to].push(from);
            targets[from].push(to);
        }
        Ok(ArgumentationFramework {
            ids,
            attacks: pairs,
            attackers,
            targets,
            complete_cache: OnceLock::new(),
            admissible_cache: OnceLock::new(),
            extension_cache: Default::default(),
        })
    }

    /// Convenience constructor from string labels, mostly for tests and
    /// fixtures.
    pub fn from_parts(arguments: &[&str], attacks: &[(&str, &str)]) -> Result<Self> {
        let args = arguments
            .iter()
            .map(|s| ArgumentId::new(*s))
            .collect::<Result<Vec<_>>>()?;
        let atts = attacks
            .iter()
            .map(|(a, b)| Ok((ArgumentId::new(*a)?, ArgumentId::new(*b)?)))
            .collect::<Result<Vec<_>>>()?;
        ArgumentationFramework::new(args, atts)
    }

    pub fn arguments(&self) -> &[ArgumentId] {
        &self.ids
    }

    pub fn argument_count(&self) -> usize {
        self.ids.len()
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn contains(&self, id: &ArgumentId) -> bool {
        self.ids.binary_search(id).is_ok()
    }

    pub fn attack_pairs(&self) -> impl Iterator<Item = (&ArgumentId, &ArgumentId)> {
        self.attacks
            .iter()
            .map(|&(a, b)| (&self.ids[a], &self.ids[b]))
    }

    pub(crate) fn idx(&self, id: &ArgumentId) -> Result<usize> {
        self.ids
            .binary_search(id)
            .map_err(|_| Error::UnknownArgument(id.to_string()))
    }

    pub(crate) fn id_of(&self, idx: usize) -> &ArgumentId {
        &self.ids[idx]
    }

    pub(crate) fn attacker_indices(&self, idx: usize) -> &[usize] {
        &self.attackers[idx]
    }

    pub(crate) fn target_indices(&self, idx: usize) -> &[usize] {
        &self.targets[idx]
    }

    pub(crate) fn has_attack_idx(&self, from: usize, to: usize) -> bool {
        self.attacks.contains(&(from, to))
    }

    pub fn has_attack(&self, from: &ArgumentId, to: &ArgumentId) -> Result<bool> {
        Ok(self.has_attack_idx(self.idx(from)?, self.idx(to)?))
    }

    pub fn is_self_attacking(&self, id: &ArgumentId) -> Result<bool> {
        let i = self.idx(id)?;
        Ok(self.has_attack_idx(i, i))
    }

    /// Direct attackers of `id`, in canonical order.
    pub fn direct_attackers(&self, id: &ArgumentId) -> Result<BTreeSet<ArgumentId>> {
        let i = self.idx(id)?;
        Ok(self.attackers[i]
            .iter()
            .map(|&b| self.ids[b].clone())
            .collect())
    }

    pub(crate) fn resolve_set(&self, set: &BTreeSet<ArgumentId>) -> Result<Vec<usize>> {
        set.iter().map(|id| self.idx(id)).collect()
    }

    /// The set of arguments attacked by `set` (its range beyond itself).
    pub(crate) fn attacked_by_indices(&self, set: &[usize]) -> Vec<bool> {
        let mut hit = vec![false; self.ids.len()];
        for &s in set {
            for &t in &self.targets[s] {
                hit[t] = true;
            }
        }
        hit
    }

    /// True iff no member of `set` attacks another member (or itself).
    pub fn conflict_free(&self, set: &BTreeSet<ArgumentId>) -> Result<bool> {
        let indices = self.resolve_set(set)?;
        let member = index_mask(self.ids.len(), &indices);
        Ok(indices
            .iter()
            .all(|&s| self.targets[s].iter().all(|&t| !member[t])))
    }

    /// True iff `set` attacks every direct attacker of `argument`.
    pub fn defends(&self, set: &BTreeSet<ArgumentId>, argument: &ArgumentId) -> Result<bool> {
        let indices = self.resolve_set(set)?;
        let a = self.idx(argument)?;
        let attacked = self.attacked_by_indices(&indices);
        Ok(self.attackers[a].iter().all(|&b| attacked[b]))
    }

    /// Extensions of this framework under `semantics`, canonically ordered.
    /// Computed once per semantics and cached.
    pub fn extensions(&self, semantics: Semantics) -> &[Extension] {
        self.extension_cache[semantics.cache_slot()].get_or_init(|| {
            let mut sets: Vec<Extension> = self
                .extension_index_sets(semantics)
                .into_iter()
                .map(|idxs| {
                    Extension::new(idxs.into_iter().map(|i| self.ids[i].clone()))
                })
                .collect();
            sets.sort();
            sets
        })
    }

    /// The extensions under `semantics` containing `argument`.
    pub fn extensions_with(
        &self,
        semantics: Semantics,
        argument: &ArgumentId,
    ) -> Result<Vec<Extension>> {
        self.idx(argument)?;
        Ok(self
            .extensions(semantics)
            .iter()
            .filter(|e| e.contains(argument))
            .cloned()
            .collect())
    }

    /// The extensions under `semantics` not containing `argument`.
    pub fn extensions_without(
        &self,
        semantics: Semantics,
        argument: &ArgumentId,
    ) -> Result<Vec<Extension>> {
        self.idx(argument)?;
        Ok(self
            .extensions(semantics)
            .iter()
            .filter(|e| !e.contains(argument))
            .cloned()
            .collect())
    }

    /// Acceptance flags for `argument`. Errors when `semantics` yields no
    /// extensions at all (possible for stable), since acceptance is undefined
    /// then.
    pub fn acceptance(
        &self,
        semantics: Semantics,
        argument: &ArgumentId,
    ) -> Result<AcceptanceStatus> {
        self.idx(argument)?;
        let extensions = self.extensions(semantics);
        if extensions.is_empty() {
            return Err(Error::NoExtensions(semantics));
        }
        let with = extensions.iter().filter(|e| e.contains(argument)).count();
        let total = extensions.len();
        Ok(AcceptanceStatus {
            credulously_accepted: with > 0,
            skeptically_accepted: with == total,
            credulously_non_accepted: with == 0,
            skeptically_non_accepted: with < total,
        })
    }
}

pub(crate) fn index_mask(len: usize, indices: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; len];
    for &i in indices {
        mask[i] = true;
    }
    mask
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> ArgumentId {
        ArgumentId::new(s).unwrap()
    }

    #[test]
    fn rejects_malformed_ids() {
        assert!(ArgumentId::new("").is_err());
        assert!(ArgumentId::new("a b").is_err());
        assert!(ArgumentId::new("a-b").is_err());
        assert!(ArgumentId::new("ok_2").is_ok());
    }

    #[test]
    fn attack_endpoints_must_be_declared() {
        let err = ArgumentationFramework::from_parts(&["a"], &[("a", "b")]).unwrap_err();
        assert_eq!(err, Error::UnknownArgument("b".into()));
    }

    #[test]
    fn duplicate_arguments_and_attacks_collapse() {
        let af =
            ArgumentationFramework::from_parts(&["a", "b", "a"], &[("a", "b"), ("a", "b")])
                .unwrap();
        assert_eq!(af.argument_count(), 2);
        assert_eq!(af.attack_count(), 1);
    }

    #[test]
    fn conflict_free_checks_internal_attacks() {
        let af = ArgumentationFramework::from_parts(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c")],
        )
        .unwrap();
        assert!(af
            .conflict_free(&[id("a"), id("c")].into_iter().collect())
            .unwrap());
        assert!(!af
            .conflict_free(&[id("a"), id("b")].into_iter().collect())
            .unwrap());
        assert!(af.conflict_free(&BTreeSet::new()).unwrap());
    }

    #[test]
    fn conflict_free_rejects_unknown_member() {
        let af = ArgumentationFramework::from_parts(&["a"], &[]).unwrap();
        let err = af
            .conflict_free(&[id("z")].into_iter().collect())
            .unwrap_err();
        assert_eq!(err, Error::UnknownArgument("z".into()));
    }

    #[test]
    fn defends_quantifies_over_direct_attackers() {
        // b and d attack a; c hits b, e hits d.
        let af = ArgumentationFramework::from_parts(
            &["a", "b", "c", "d", "e"],
            &[("b", "a"), ("d", "a"), ("c", "b"), ("e", "d")],
        )
        .unwrap();
        assert!(af
            .defends(&[id("c"), id("e")].into_iter().collect(), &id("a"))
            .unwrap());
        assert!(!af
            .defends(&[id("c")].into_iter().collect(), &id("a"))
            .unwrap());
        // Vacuous for unattacked arguments.
        assert!(af.defends(&BTreeSet::new(), &id("c")).unwrap());
    }

    #[test]
    fn extension_ordering_is_size_then_lex() {
        let small = Extension::new([id("b")]);
        let large = Extension::new([id("a"), id("c")]);
        assert!(small < large);
        let x = Extension::new([id("a"), id("b")]);
        let y = Extension::new([id("a"), id("c")]);
        assert!(x < y);
    }

    #[test]
    fn self_attacker_is_never_conflict_free_company() {
        let af = ArgumentationFramework::from_parts(&["s"], &[("s", "s")]).unwrap();
        assert!(!af
            .conflict_free(&[id("s")].into_iter().collect())
            .unwrap());
    }
}
