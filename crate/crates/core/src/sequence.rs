//! Unordered sequences (multisets) over a finite commutative monoid and
//! their subsequence-product sets.

use std::fmt;

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

/// A finite commutative monoid on the indices `0..size`.
pub trait CommutativeMonoid {
    fn size(&self) -> usize;
    fn op(&self, a: usize, b: usize) -> usize;
    fn identity(&self) -> usize;
}

impl CommutativeMonoid for FiniteRing {
    fn size(&self) -> usize {
        self.order()
    }

    fn op(&self, a: usize, b: usize) -> usize {
        self.mul(a, b)
    }

    fn identity(&self) -> usize {
        self.one()
    }
}

/// The set of products of nonempty subsequences.
pub type ProductSet = ElementSet;

/// Largest sequence accepted by [`subsequences`].
pub const SUBSEQUENCE_CAP: usize = 20;

/// A sequence with repetitions allowed, stored in canonical nondecreasing order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence {
    terms: Vec<usize>,
}

impl Sequence {
    pub fn new(mut terms: Vec<usize>) -> Self {
        terms.sort_unstable();
        Sequence { terms }
    }

    pub fn empty() -> Self {
        Sequence::default()
    }

    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn concat(&self, other: &Sequence) -> Sequence {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        Sequence::new(terms)
    }

    pub fn with(&self, a: usize) -> Sequence {
        self.concat(&Sequence::new(vec![a]))
    }

    pub fn map(&self, f: impl Fn(usize) -> usize) -> Sequence {
        Sequence::new(self.terms.iter().map(|&t| f(t)).collect())
    }

    /// Comma-separated term names, e.g. `3,2` or `x+1,x`.
    pub fn render(&self, name: impl Fn(usize) -> String) -> String {
        self.terms.iter().map(|&t| name(t)).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sequence{:?}", self.terms)
    }
}

impl FromIterator<usize> for Sequence {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Sequence::new(iter.into_iter().collect())
    }
}

/// Product of all terms; the empty sequence has product equal to the identity.
pub fn pi<M: CommutativeMonoid + ?Sized>(monoid: &M, seq: &Sequence) -> usize {
    seq.terms.iter().fold(monoid.identity(), |acc, &t| monoid.op(acc, t))
}

/// `Π(T)`, built one term at a time: `S' = S ∪ {a} ∪ S·a`.
pub fn product_set<M: CommutativeMonoid + ?Sized>(monoid: &M, seq: &Sequence) -> ProductSet {
    let mut set = ElementSet::empty(monoid.size());
    for &a in &seq.terms {
        extend_product_set(monoid, &mut set, a);
    }
    set
}

pub(crate) fn extend_product_set<M: CommutativeMonoid + ?Sized>(monoid: &M, set: &mut ElementSet, a: usize) {
    let shifted: Vec<usize> = set.iter().map(|s| monoid.op(s, a)).collect();
    set.insert(a);
    for s in shifted {
        set.insert(s);
    }
}

/// True iff no nonempty subsequence has an idempotent product.
pub fn is_idempotent_product_free(ring: &FiniteRing, seq: &Sequence) -> bool {
    product_set(ring, seq).is_disjoint(&ring.idempotents())
}

/// All `2^|T| - 1` nonempty subsequences, one per index subset.
pub fn subsequences(seq: &Sequence) -> Result<impl Iterator<Item = Sequence> + '_> {
    if seq.len() > SUBSEQUENCE_CAP {
        return Err(Error::CapExceeded {
            what: "subsequence enumeration",
            size: seq.len(),
            cap: SUBSEQUENCE_CAP,
            hint: "",
        });
    }
    let count = 1u32 << seq.len();
    Ok((1..count).map(move |mask| {
        seq.terms
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &t)| t)
            .collect()
    }))
}

/// Some nonempty subsequence whose product is `target`, if one exists.
/// Subsequences are discovered in term order, so the result is deterministic.
pub fn subsequence_with_product<M: CommutativeMonoid + ?Sized>(
    monoid: &M,
    seq: &Sequence,
    target: usize,
) -> Option<Sequence> {
    positions_with_product(monoid, seq.terms(), target)
        .map(|pos| pos.into_iter().map(|i| seq.terms[i]).collect())
}

/// Positions into `terms` of a nonempty selection whose product is `target`.
pub fn positions_with_product<M: CommutativeMonoid + ?Sized>(
    monoid: &M,
    terms: &[usize],
    target: usize,
) -> Option<Vec<usize>> {
    let mut witness: Vec<Option<Vec<usize>>> = vec![None; monoid.size()];
    for (k, &a) in terms.iter().enumerate() {
        let reached: Vec<(usize, Vec<usize>)> = witness
            .iter()
            .enumerate()
            .filter_map(|(e, w)| w.as_ref().map(|w| (e, w.clone())))
            .collect();
        if witness[a].is_none() {
            witness[a] = Some(vec![k]);
        }
        for (e, mut w) in reached {
            let p = monoid.op(e, a);
            if witness[p].is_none() {
                w.push(k);
                witness[p] = Some(w);
            }
        }
        if let Some(w) = &witness[target] {
            return Some(w.clone());
        }
    }
    None
}
