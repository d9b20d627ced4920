//! Coalitional rankings and the per-individual statistics derived from them.
//!
//! Individuals are the integers `0..n`; a [`Coalition`] is a nonempty bitmask
//! over them. A [`CoalitionalRanking`] is stored as its quotient order: an
//! ordered list of equivalence classes, best first, together with a flat
//! `class_of[mask]` table so that comparing two coalitions is a pair of loads.

use std::fmt;

use crate::error::{Error, Result};

/// Largest universe the bitmask representation supports.
pub const MAX_INDIVIDUALS: usize = 16;

/// Zero-based identifier of an individual.
pub type Individual = usize;

/// The set of individuals, with optional display names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    names: Vec<String>,
}

impl Universe {
    /// A universe of `n` individuals named `1`, `2`, ..., `n`.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_names((1..=n).map(|i| i.to_string()))
    }

    pub fn with_names<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidUniverse(
                "at least one individual is required".into(),
            ));
        }
        if names.len() > MAX_INDIVIDUALS {
            return Err(Error::UniverseTooLarge {
                n: names.len(),
                max: MAX_INDIVIDUALS,
                what: "the bitmask representation",
            });
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty()
                || name
                    .chars()
                    .any(|c| c.is_whitespace() || matches!(c, ',' | '{' | '}' | '#'))
            {
                return Err(Error::InvalidUniverse(format!(
                    "invalid individual name `{name}`"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidUniverse(format!(
                    "duplicate individual name `{name}`"
                )));
            }
        }
        Ok(Self { names })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: Individual) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<Individual> {
        self.names.iter().position(|n| n == name)
    }

    /// True when every name is the default `1..n` label.
    pub fn has_default_names(&self) -> bool {
        self.names
            .iter()
            .enumerate()
            .all(|(i, name)| *name == (i + 1).to_string())
    }

    pub fn all(&self) -> Selection {
        Selection::full(self.size())
    }

    pub fn coalitions(&self) -> impl Iterator<Item = Coalition> {
        all_coalitions(self.size())
    }

    /// `{a,b}` using the universe's names.
    pub fn format_coalition(&self, c: Coalition) -> String {
        let members: Vec<&str> = c.members().map(|x| self.name(x)).collect();
        format!("{{{}}}", members.join(","))
    }

    pub fn format_selection(&self, s: Selection) -> Vec<String> {
        s.members().map(|x| self.name(x).to_string()).collect()
    }
}

/// Every nonempty coalition over `n` individuals, in mask order.
pub fn all_coalitions(n: usize) -> impl Iterator<Item = Coalition> {
    (1..(1u32 << n)).map(Coalition)
}

/// Number of nonempty coalitions over `n` individuals.
pub fn coalition_count(n: usize) -> usize {
    (1usize << n) - 1
}

/// A nonempty subset of the universe.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coalition(u32);

impl Coalition {
    /// Panics on the empty mask.
    pub fn from_mask(mask: u32) -> Self {
        assert!(mask != 0, "coalitions are nonempty");
        Self(mask)
    }

    pub fn try_from_members<I: IntoIterator<Item = Individual>>(
        n: usize,
        members: I,
    ) -> Result<Self> {
        let mut mask = 0u32;
        for x in members {
            if x >= n {
                return Err(Error::OutOfUniverse(format!("individual {}", x + 1)));
            }
            mask |= 1 << x;
        }
        if mask == 0 {
            return Err(Error::EmptyCoalition);
        }
        Ok(Self(mask))
    }

    pub fn singleton(x: Individual) -> Self {
        Self(1 << x)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, x: Individual) -> bool {
        self.0 & (1 << x) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn with(self, x: Individual) -> Self {
        Self(self.0 | (1 << x))
    }

    pub fn members(self) -> impl Iterator<Item = Individual> {
        BitIter(self.0)
    }

    pub fn as_selection(self) -> Selection {
        Selection(self.0)
    }

    fn fits(self, n: usize) -> bool {
        self.0 >> n == 0
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self.members().map(|x| (x + 1).to_string()).collect();
        write!(f, "{{{}}}", members.join(","))
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A set of individuals. Every rule returns a nonempty one; the concomitant
/// set may be empty.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Selection(u32);

impl Selection {
    pub fn empty() -> Self {
        Self(0)
    }

    pub fn full(n: usize) -> Self {
        Self(((1u64 << n) - 1) as u32)
    }

    pub fn from_mask(mask: u32) -> Self {
        Self(mask)
    }

    pub fn from_members<I: IntoIterator<Item = Individual>>(members: I) -> Self {
        Self(members.into_iter().fold(0, |m, x| m | (1 << x)))
    }

    pub fn singleton(x: Individual) -> Self {
        Self(1 << x)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, x: Individual) -> bool {
        self.0 & (1 << x) != 0
    }

    pub fn insert(&mut self, x: Individual) {
        self.0 |= 1 << x;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Selection) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersect(self, other: Selection) -> Selection {
        Selection(self.0 & other.0)
    }

    /// The sole member, if there is exactly one.
    pub fn single(self) -> Option<Individual> {
        (self.len() == 1).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn members(self) -> impl Iterator<Item = Individual> {
        BitIter(self.0)
    }
}

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self.members().map(|x| (x + 1).to_string()).collect();
        write!(f, "{{{}}}", members.join(","))
    }
}

impl fmt::Debug for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct BitIter(u32);

impl Iterator for BitIter {
    type Item = Individual;

    fn next(&mut self) -> Option<Individual> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }
}

/// Intersection of a family of coalitions over `n` individuals. The empty
/// family intersects to the whole universe.
pub fn intersection<I: IntoIterator<Item = Coalition>>(n: usize, family: I) -> Selection {
    Selection(
        family
            .into_iter()
            .fold(Selection::full(n).0, |acc, c| acc & c.0),
    )
}

/// Union of a family of coalitions.
pub fn union<I: IntoIterator<Item = Coalition>>(family: I) -> Selection {
    Selection(family.into_iter().fold(0, |acc, c| acc | c.0))
}

/// Outcome of comparing two coalitions in a ranking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparison {
    Better,
    Tie,
    Worse,
}

/// Per-class appearance counts of one individual, best class first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaVector(pub Vec<u32>);

impl ThetaVector {
    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// Ordinal Banzhaf tally of one individual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BanzhafTally {
    /// Coalitions strictly improved by adding the individual.
    pub u_plus: u32,
    /// Coalitions strictly worsened by adding the individual.
    pub u_minus: u32,
    pub score: i64,
}

/// A weak order on all nonempty coalitions, kept as its quotient order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoalitionalRanking {
    n: u8,
    classes: Vec<Vec<Coalition>>,
    class_of: Vec<u16>,
}

/// Checks the quotient-order structure and returns the canonical ranking.
pub fn validate_ranking(
    classes: Vec<Vec<Coalition>>,
    universe: &Universe,
) -> Result<CoalitionalRanking> {
    let n = universe.size();
    let mut seen = vec![false; 1 << n];
    for (index, class) in classes.iter().enumerate() {
        if class.is_empty() {
            return Err(Error::EmptyClass { index });
        }
        for &c in class {
            if c.0 == 0 {
                return Err(Error::EmptyCoalition);
            }
            if !c.fits(n) {
                return Err(Error::OutOfUniverse(format!("coalition mask {:#b}", c.0)));
            }
            if std::mem::replace(&mut seen[c.0 as usize], true) {
                return Err(Error::DuplicateCoalition(universe.format_coalition(c)));
            }
        }
    }
    if let Some(c) = all_coalitions(n).find(|c| !seen[c.0 as usize]) {
        return Err(Error::MissingCoalition(universe.format_coalition(c)));
    }
    Ok(CoalitionalRanking::assemble(n, classes))
}

impl CoalitionalRanking {
    pub fn new(universe: &Universe, classes: Vec<Vec<Coalition>>) -> Result<Self> {
        validate_ranking(classes, universe)
    }

    /// Builds a ranking over the default universe of `n` from raw masks.
    pub fn from_masks(n: usize, classes: &[&[u32]]) -> Result<Self> {
        let universe = Universe::new(n)?;
        let mut built = Vec::with_capacity(classes.len());
        for class in classes {
            let mut out = Vec::with_capacity(class.len());
            for &mask in *class {
                if mask == 0 {
                    return Err(Error::EmptyCoalition);
                }
                out.push(Coalition(mask));
            }
            built.push(out);
        }
        validate_ranking(built, &universe)
    }

    /// The ranking in which every coalition is tied.
    pub fn total_tie(n: usize) -> Self {
        Self::assemble(n, vec![all_coalitions(n).collect()])
    }

    /// Canonicalizes classes (sorted by mask) and builds the lookup table.
    /// Callers guarantee the quotient-order invariants.
    pub(crate) fn assemble(n: usize, mut classes: Vec<Vec<Coalition>>) -> Self {
        let mut class_of = vec![u16::MAX; 1 << n];
        for (k, class) in classes.iter_mut().enumerate() {
            class.sort_unstable();
            for c in class.iter() {
                class_of[c.0 as usize] = k as u16;
            }
        }
        debug_assert!(class_of.iter().skip(1).all(|&k| k != u16::MAX));
        debug_assert!(classes.iter().all(|c| !c.is_empty()));
        Self {
            n: n as u8,
            classes,
            class_of,
        }
    }

    /// Number of individuals.
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Number of equivalence classes.
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<Coalition>] {
        &self.classes
    }

    pub fn class(&self, k: usize) -> &[Coalition] {
        &self.classes[k]
    }

    pub fn top_class(&self) -> &[Coalition] {
        &self.classes[0]
    }

    pub fn into_classes(self) -> Vec<Vec<Coalition>> {
        self.classes
    }

    /// Zero-based index of the class holding `c`. Panics outside the universe.
    #[inline]
    pub fn class_index(&self, c: Coalition) -> usize {
        self.class_of[c.0 as usize] as usize
    }

    #[inline]
    pub(crate) fn class_of_mask(&self, mask: u32) -> usize {
        self.class_of[mask as usize] as usize
    }

    /// `s ≻ t`.
    #[inline]
    pub fn prefers(&self, s: Coalition, t: Coalition) -> bool {
        self.class_index(s) < self.class_index(t)
    }

    pub fn compare(&self, s: Coalition, t: Coalition) -> Result<Comparison> {
        self.check_coalition(s)?;
        self.check_coalition(t)?;
        Ok(match self.class_index(s).cmp(&self.class_index(t)) {
            std::cmp::Ordering::Less => Comparison::Better,
            std::cmp::Ordering::Equal => Comparison::Tie,
            std::cmp::Ordering::Greater => Comparison::Worse,
        })
    }

    pub fn contains_coalition(&self, c: Coalition) -> bool {
        c.0 != 0 && c.fits(self.n())
    }

    pub(crate) fn check_coalition(&self, c: Coalition) -> Result<()> {
        if self.contains_coalition(c) {
            Ok(())
        } else {
            Err(Error::OutOfUniverse(format!("coalition {c}")))
        }
    }

    pub(crate) fn check_individual(&self, x: Individual) -> Result<()> {
        if x < self.n() {
            Ok(())
        } else {
            Err(Error::OutOfUniverse(format!("individual {}", x + 1)))
        }
    }

    pub fn theta(&self, x: Individual) -> Result<ThetaVector> {
        self.check_individual(x)?;
        Ok(self.theta_unchecked(x))
    }

    pub(crate) fn theta_unchecked(&self, x: Individual) -> ThetaVector {
        ThetaVector(
            self.classes
                .iter()
                .map(|class| class.iter().filter(|c| c.contains(x)).count() as u32)
                .collect(),
        )
    }

    /// Number of top-class coalitions containing `x`.
    pub fn top_count(&self, x: Individual) -> u32 {
        self.classes[0].iter().filter(|c| c.contains(x)).count() as u32
    }

    /// Ordinal Banzhaf tally over nonempty `S ⊆ X∖{x}`.
    pub fn banzhaf(&self, x: Individual) -> Result<BanzhafTally> {
        self.check_individual(x)?;
        Ok(self.banzhaf_unchecked(x))
    }

    pub(crate) fn banzhaf_unchecked(&self, x: Individual) -> BanzhafTally {
        let bit = 1u32 << x;
        let (mut u_plus, mut u_minus) = (0u32, 0u32);
        for s in 1..(1u32 << self.n) {
            if s & bit != 0 {
                continue;
            }
            let without = self.class_of_mask(s);
            let with = self.class_of_mask(s | bit);
            if with < without {
                u_plus += 1;
            } else if without < with {
                u_minus += 1;
            }
        }
        BanzhafTally {
            u_plus,
            u_minus,
            score: i64::from(u_plus) - i64::from(u_minus),
        }
    }

    /// Individuals whose addition strictly improves every nonempty coalition
    /// that lacks them.
    pub fn concomitant_set(&self) -> Selection {
        let mut out = Selection::empty();
        for x in 0..self.n() {
            let bit = 1u32 << x;
            let improves_all = (1..(1u32 << self.n))
                .filter(|s| s & bit == 0)
                .all(|s| self.class_of_mask(s | bit) < self.class_of_mask(s));
            if improves_all {
                out.insert(x);
            }
        }
        out
    }

    /// `⋂Σ1`.
    pub fn top_intersection(&self) -> Selection {
        intersection(self.n(), self.classes[0].iter().copied())
    }

    /// Splits all coalitions into those strictly above `reference` and the rest.
    pub fn split_instances(
        &self,
        reference: Coalition,
    ) -> Result<(Vec<Coalition>, Vec<Coalition>)> {
        self.check_coalition(reference)?;
        let k0 = self.class_index(reference);
        let positives = self.classes[..k0].iter().flatten().copied().collect();
        let negatives = self.classes[k0..].iter().flatten().copied().collect();
        Ok((positives, negatives))
    }

    /// Renames every individual `x` to `perm[x]`.
    pub fn relabel(&self, perm: &[Individual]) -> Self {
        assert_eq!(
            perm.len(),
            self.n(),
            "permutation size must match the universe"
        );
        let classes = self
            .classes
            .iter()
            .map(|class| {
                class
                    .iter()
                    .map(|c| Coalition(relabel_mask(c.0, perm)))
                    .collect()
            })
            .collect();
        Self::assemble(self.n(), classes)
    }

    /// Parses the compact digit notation, e.g. `"123 12 13 ≻ rest"`.
    ///
    /// Individuals are the digits `1..=n` (so `n ≤ 9`); classes are separated
    /// by `≻` or `>`; `rest` stands for every coalition not yet placed.
    pub fn from_notation(n: usize, text: &str) -> Result<Self> {
        if n > 9 {
            return Err(Error::UniverseTooLarge {
                n,
                max: 9,
                what: "the digit notation",
            });
        }
        let universe = Universe::new(n)?;
        let mut classes: Vec<Vec<Coalition>> = Vec::new();
        let mut rest_at = None;
        for (k, part) in text.split(['≻', '>']).enumerate() {
            let mut class = Vec::new();
            for token in part.split_whitespace() {
                if token == "rest" {
                    if rest_at.is_some() {
                        return Err(notation_error(text, "`rest` may appear only once"));
                    }
                    rest_at = Some(k);
                    continue;
                }
                let mut mask = 0u32;
                for ch in token.chars() {
                    let d = ch
                        .to_digit(10)
                        .filter(|&d| d >= 1)
                        .ok_or_else(|| notation_error(text, &format!("unexpected `{ch}`")))?;
                    let x = d as usize - 1;
                    if x >= n {
                        return Err(Error::OutOfUniverse(format!("individual {d}")));
                    }
                    mask |= 1 << x;
                }
                class.push(Coalition(mask));
            }
            classes.push(class);
        }
        if let Some(k) = rest_at {
            let mut placed = vec![false; 1 << n];
            for c in classes.iter().flatten() {
                placed[c.0 as usize] = true;
            }
            classes[k].extend(all_coalitions(n).filter(|c| !placed[c.0 as usize]));
        }
        validate_ranking(classes, &universe)
    }
}

fn notation_error(text: &str, message: &str) -> Error {
    Error::Syntax {
        line: 1,
        column: 1,
        message: format!("{message} in `{text}`"),
    }
}

pub(crate) fn relabel_mask(mask: u32, perm: &[Individual]) -> u32 {
    BitIter(mask).fold(0, |acc, x| acc | (1 << perm[x]))
}

impl fmt::Display for CoalitionalRanking {
    /// Compact digit notation (braces when `n > 9`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, class) in self.classes.iter().enumerate() {
            if k > 0 {
                f.write_str(" ≻ ")?;
            }
            for (i, c) in class.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                if self.n <= 9 {
                    for x in c.members() {
                        write!(f, "{}", x + 1)?;
                    }
                } else {
                    write!(f, "{c}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CoalitionalRanking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoalitionalRanking({self})")
    }
}
