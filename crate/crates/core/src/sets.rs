//! Ground sets, bitset subsets, canonical set families, simple words and
//! rooted sets, plus the JSON formats used to exchange them.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest ground set accepted anywhere.
pub const MAX_GROUND: usize = 30;

/// Largest ground set for operations that walk all of `2^E`.
pub const MAX_ENUMERATION: usize = 20;

pub(crate) fn ensure_enumerable(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::GroundTooLarge { size: n, limit })
    } else {
        Ok(())
    }
}

/// An ordered list of distinct element labels.
#[derive(Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size: labels.len(),
                limit: MAX_GROUND,
            });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(GroundSet { labels, index })
    }

    /// `a`, `b`, `c`, ... for `n <= 26`, `e0`, `e1`, ... beyond that.
    pub fn letters(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set too large");
        let labels = (0..n).map(|i| {
            if n <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("e{i}")
            }
        });
        GroundSet::new(labels).expect("generated labels are distinct")
    }

    /// `1`, `2`, ..., `n`; the labelling used for CNF variables.
    pub fn numbered(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set too large");
        GroundSet::new((1..=n).map(|i| i.to_string())).expect("generated labels are distinct")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// The whole ground set `E`.
    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn set_from_labels<I, S>(&self, labels: I) -> Result<ElementSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels
            .into_iter()
            .try_fold(ElementSet::empty(), |acc, l| Ok(acc.with(self.index_of(l.as_ref())?)))
    }

    /// Parses `a,c,e`, `{a,c,e}` or `{}`; whitespace around labels is ignored.
    pub fn parse_set(&self, text: &str) -> Result<ElementSet> {
        let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
        self.set_from_labels(inner.split(',').map(str::trim).filter(|s| !s.is_empty()))
    }

    pub fn labels_of(&self, set: ElementSet) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// `{a,c,e}` form.
    pub fn format_set(&self, set: ElementSet) -> String {
        format!("{{{}}}", self.labels_of(set).join(","))
    }

    pub fn format_word(&self, word: &SimpleWord) -> String {
        word.letters()
            .iter()
            .map(|&i| self.labels[i].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn check(&self, set: ElementSet) {
        assert!(
            set.0 & !self.full().0 == 0,
            "set {set:?} reaches beyond a ground set of size {}",
            self.len()
        );
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.labels).finish()
    }
}

/// A subset of a ground set of at most [`MAX_GROUND`] elements, stored as a bitmask.
///
/// Ordered canonically: by cardinality, then by the mask read as an integer.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u32);

impl ElementSet {
    pub const fn empty() -> Self {
        ElementSet(0)
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND);
        ElementSet(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_GROUND);
        ElementSet(1 << i)
    }

    pub const fn from_bits(bits: u32) -> Self {
        ElementSet(bits)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(Self::empty(), Self::with)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 >> i & 1 == 1
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        assert!(i < MAX_GROUND);
        ElementSet(self.0 | 1 << i)
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        ElementSet(self.0 & !(1u32 << i))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    /// Complement relative to a ground set of size `n`.
    pub fn complement(self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self != other && self.is_subset(other)
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Element indices in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Every subset of `self`, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }

    /// Every `T` with `self ⊆ T ⊆ upper` (empty if `self ⊄ upper`).
    pub fn interval(self, upper: Self) -> impl Iterator<Item = ElementSet> {
        let base = self;
        let free = if self.is_subset(upper) {
            Some(upper.difference(self))
        } else {
            None
        };
        free.into_iter()
            .flat_map(|f| f.subsets())
            .map(move |s| s.union(base))
    }

    /// Subsets of `self` with exactly `k` elements.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = ElementSet> {
        self.subsets().filter(move |s| s.len() == k)
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for ElementSet {
    type Output = Self;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for ElementSet {
    type Output = Self;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl Sub for ElementSet {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_indices(iter)
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(i as usize)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Carry-rippler enumeration of the subsets of a mask.
pub struct Subsets {
    set: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        let nxt = cur.wrapping_sub(self.set) & self.set;
        self.next = (nxt != 0).then_some(nxt);
        Some(ElementSet(cur))
    }
}

/// A deduplicated family of subsets of one ground set, kept in canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: GroundSet,
    members: Vec<ElementSet>,
}

impl SetFamily {
    /// Panics if a member reaches outside the ground set.
    pub fn new<I: IntoIterator<Item = ElementSet>>(ground: GroundSet, members: I) -> Self {
        let mut members: Vec<ElementSet> = members.into_iter().collect();
        for &m in &members {
            ground.check(m);
        }
        members.sort_unstable();
        members.dedup();
        SetFamily { ground, members }
    }

    pub fn empty(ground: GroundSet) -> Self {
        SetFamily {
            ground,
            members: Vec::new(),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn top(&self) -> ElementSet {
        self.ground.full()
    }

    /// Members in canonical order.
    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: ElementSet) -> bool {
        self.members.binary_search(&set).is_ok()
    }

    pub fn position(&self, set: ElementSet) -> Option<usize> {
        self.members.binary_search(&set).ok()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = ElementSet> + ExactSizeIterator + '_ {
        self.members.iter().copied()
    }

    /// Same ground set, members filtered.
    pub fn filter<F: FnMut(ElementSet) -> bool>(&self, mut keep: F) -> SetFamily {
        SetFamily {
            ground: self.ground.clone(),
            members: self.members.iter().copied().filter(|&m| keep(m)).collect(),
        }
    }

    pub fn map<F: FnMut(ElementSet) -> ElementSet>(&self, f: F) -> SetFamily {
        SetFamily::new(self.ground.clone(), self.members.iter().copied().map(f))
    }

    pub fn intersect(&self, other: &SetFamily) -> SetFamily {
        self.filter(|m| other.contains(m))
    }

    pub fn describe(&self) -> Vec<String> {
        self.iter().map(|m| self.ground.format_set(m)).collect()
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.describe()).finish()
    }
}

/// All `2^n` subsets of the ground set.
pub fn boolean_lattice(ground: &GroundSet) -> Result<SetFamily> {
    ensure_enumerable(ground.len(), MAX_ENUMERATION)?;
    Ok(SetFamily::new(ground.clone(), ground.full().subsets()))
}

/// A word over the ground set with no repeated letter.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct SimpleWord(Vec<usize>);

impl SimpleWord {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let mut seen = ElementSet::empty();
        for &l in &letters {
            if seen.contains(l) {
                return Err(Error::NonSimpleWord(l.to_string()));
            }
            seen = seen.with(l);
        }
        Ok(SimpleWord(letters))
    }

    pub fn empty() -> Self {
        SimpleWord(Vec::new())
    }

    pub fn from_labels<S: AsRef<str>>(ground: &GroundSet, labels: &[S]) -> Result<Self> {
        let letters = labels
            .iter()
            .map(|l| ground.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        SimpleWord::new(letters).map_err(|_| {
            let dup = labels
                .iter()
                .enumerate()
                .find(|(i, l)| labels[..*i].iter().any(|m| m.as_ref() == l.as_ref()))
                .map(|(_, l)| l.as_ref().to_string())
                .unwrap_or_default();
            Error::NonSimpleWord(dup)
        })
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> ElementSet {
        self.0.iter().copied().collect()
    }

    pub fn prefix(&self, len: usize) -> SimpleWord {
        SimpleWord(self.0[..len].to_vec())
    }

    /// `self` followed by `letter`, or `None` if that would repeat a letter.
    pub fn extended(&self, letter: usize) -> Option<SimpleWord> {
        if self.0.contains(&letter) {
            return None;
        }
        let mut v = self.0.clone();
        v.push(letter);
        Some(SimpleWord(v))
    }
}

/// A set with a designated root element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RootedSet {
    set: ElementSet,
    root: usize,
}

impl RootedSet {
    pub fn new(set: ElementSet, root: usize) -> Result<Self> {
        if !set.contains(root) {
            return Err(Error::RootNotInSet {
                root: root.to_string(),
            });
        }
        Ok(RootedSet { set, root })
    }

    pub fn set(&self) -> ElementSet {
        self.set
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// The set without its root.
    pub fn stem(&self) -> ElementSet {
        self.set.without(self.root)
    }

    pub fn describe(&self, ground: &GroundSet) -> String {
        format!("({}, {})", ground.format_set(self.set), ground.label(self.root))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyDoc {
    ground: Vec<String>,
    sets: Vec<Vec<String>>,
}

pub fn parse_family(text: &str) -> Result<SetFamily> {
    let doc: FamilyDoc = serde_json::from_str(text)?;
    let ground = GroundSet::new(doc.ground)?;
    let members = doc
        .sets
        .iter()
        .map(|s| ground.set_from_labels(s))
        .collect::<Result<Vec<_>>>()?;
    Ok(SetFamily::new(ground, members))
}

/// Canonical compact JSON; members in canonical order, labels in ground order.
pub fn serialize_family(family: &SetFamily) -> String {
    let doc = FamilyDoc {
        ground: family.ground.labels.clone(),
        sets: family.iter().map(|m| family.ground.labels_of(m)).collect(),
    };
    serde_json::to_string(&doc).expect("string-only document always serializes")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RootedEntry {
    set: Vec<String>,
    root: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RootedDoc {
    ground: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rooted: Option<Vec<RootedEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    paths: Option<Vec<RootedEntry>>,
}

/// Which key a rooted-set document stores its entries under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootedKind {
    Circuits,
    Paths,
}

/// Parses `{"ground": [...], "rooted": [{"set": [...], "root": ...}]}` (or `"paths"`).
pub fn parse_rooted(text: &str) -> Result<(GroundSet, RootedKind, Vec<RootedSet>)> {
    let doc: RootedDoc = serde_json::from_str(text)?;
    let ground = GroundSet::new(doc.ground)?;
    let (kind, entries) = match (doc.rooted, doc.paths) {
        (Some(r), None) => (RootedKind::Circuits, r),
        (None, Some(p)) => (RootedKind::Paths, p),
        (None, None) => (RootedKind::Circuits, Vec::new()),
        (Some(_), Some(_)) => {
            return Err(Error::Json(serde::de::Error::custom(
                "document has both \"rooted\" and \"paths\"",
            )))
        }
    };
    let rooted = entries
        .iter()
        .map(|e| {
            let set = ground.set_from_labels(&e.set)?;
            let root = ground.index_of(&e.root)?;
            RootedSet::new(set, root).map_err(|_| Error::RootNotInSet {
                root: e.root.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((ground, kind, rooted))
}

pub fn serialize_rooted(ground: &GroundSet, kind: RootedKind, rooted: &[RootedSet]) -> String {
    let entries: Vec<RootedEntry> = rooted
        .iter()
        .map(|r| RootedEntry {
            set: ground.labels_of(r.set),
            root: ground.label(r.root).to_string(),
        })
        .collect();
    let (rooted, paths) = match kind {
        RootedKind::Circuits => (Some(entries), None),
        RootedKind::Paths => (None, Some(entries)),
    };
    let doc = RootedDoc {
        ground: ground.labels.clone(),
        rooted,
        paths,
    };
    serde_json::to_string(&doc).expect("string-only document always serializes")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WordsDoc {
    ground: Vec<String>,
    words: Vec<Vec<String>>,
}

/// Parses `{"ground": [...], "words": [[...], ...]}`.
pub fn parse_words(text: &str) -> Result<(GroundSet, Vec<SimpleWord>)> {
    let doc: WordsDoc = serde_json::from_str(text)?;
    let ground = GroundSet::new(doc.ground)?;
    let words = doc
        .words
        .iter()
        .map(|w| SimpleWord::from_labels(&ground, w))
        .collect::<Result<Vec<_>>>()?;
    Ok((ground, words))
}
