use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::formula::Atom;

/// Anything that decides the truth of atoms.
pub trait Valuation {
    fn holds(&self, atom: &Atom) -> bool;
}

/// A set of atoms, read as the atoms that are true.
///
/// Ordered by the sorted atom list, so `{} < {p} < {p,q} < {q}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interpretation(BTreeSet<Atom>);

impl Interpretation {
    pub fn new() -> Self {
        Self::default()
    }

    /// Panics on invalid names; meant for literals in code and tests.
    pub fn from_names(names: &[&str]) -> Self {
        names
            .iter()
            .map(|n| Atom::new(n).expect("valid atom name"))
            .collect()
    }

    pub fn contains(&self, a: &Atom) -> bool {
        self.0.contains(a)
    }

    pub fn insert(&mut self, a: Atom) -> bool {
        self.0.insert(a)
    }

    pub fn remove(&mut self, a: &Atom) -> bool {
        self.0.remove(a)
    }

    pub fn atoms(&self) -> &BTreeSet<Atom> {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Atom> + '_ {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &Interpretation) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn difference(&self, other: &BTreeSet<Atom>) -> Interpretation {
        Interpretation(self.0.difference(other).cloned().collect())
    }

    pub fn intersection(&self, other: &BTreeSet<Atom>) -> Interpretation {
        Interpretation(self.0.intersection(other).cloned().collect())
    }

    /// The subset selected by `mask` over `vocab` (bit `i` is `vocab[i]`).
    pub fn from_mask(vocab: &[Atom], mask: u64) -> Self {
        vocab
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, a)| a.clone())
            .collect()
    }

    /// Proper subsets of `self`, ascending by bitmask over the sorted atoms.
    pub fn proper_subsets(&self) -> impl Iterator<Item = Interpretation> + '_ {
        let atoms: Vec<Atom> = self.0.iter().cloned().collect();
        let full = (1u64 << atoms.len()) - 1;
        (0..full).map(move |m| Interpretation::from_mask(&atoms, m))
    }
}

impl Valuation for Interpretation {
    fn holds(&self, atom: &Atom) -> bool {
        self.0.contains(atom)
    }
}

impl FromIterator<Atom> for Interpretation {
    fn from_iter<I: IntoIterator<Item = Atom>>(iter: I) -> Self {
        Interpretation(iter.into_iter().collect())
    }
}

impl From<BTreeSet<Atom>> for Interpretation {
    fn from(s: BTreeSet<Atom>) -> Self {
        Interpretation(s)
    }
}

/// `{p,q}`; the empty set prints as `{}`.
impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(a.name())?;
        }
        f.write_str("}")
    }
}

/// All subsets of `vocab`, ascending by bitmask.
pub fn subsets_of(vocab: &[Atom]) -> impl Iterator<Item = Interpretation> + '_ {
    (0..1u64 << vocab.len()).map(move |m| Interpretation::from_mask(vocab, m))
}

/// A pair `(here, there)` with `here ⊆ there`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HtInterpretation {
    here: Interpretation,
    there: Interpretation,
}

impl HtInterpretation {
    pub fn new(here: Interpretation, there: Interpretation) -> Result<Self> {
        if !here.is_subset(&there) {
            return Err(Error::NotHtInterpretation);
        }
        Ok(HtInterpretation { here, there })
    }

    pub fn here(&self) -> &Interpretation {
        &self.here
    }

    pub fn there(&self) -> &Interpretation {
        &self.there
    }
}

/// `({},{p})`.
impl fmt::Display for HtInterpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.here, self.there)
    }
}
