//! Ideal arithmetic over a [`FiniteRing`]: generation, sums, products,
//! powers and indices, the nilradical, maximal ideals, quotient rings and
//! Chinese-remainder solving.

use std::fmt;

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

#[derive(Clone)]
pub struct Ideal {
    ring: FiniteRing,
    members: ElementSet,
    generators: Vec<usize>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.members == other.members
    }
}

impl Eq for Ideal {}

/// Subgroup of `(R, +)` generated by `seeds`, by breadth-first search from 0.
fn additive_closure(ring: &FiniteRing, seeds: &ElementSet) -> ElementSet {
    let steps: Vec<usize> = seeds.iter().filter(|&s| s != ring.zero()).collect();
    let mut reached = ElementSet::empty(ring.order());
    reached.insert(ring.zero());
    let mut queue = vec![ring.zero()];
    while let Some(s) = queue.pop() {
        for &a in &steps {
            let t = ring.add(s, a);
            if reached.insert(t) {
                queue.push(t);
            }
        }
    }
    reached
}

fn absorb(ring: &FiniteRing, gens: impl IntoIterator<Item = usize>) -> ElementSet {
    let mut seeds = ElementSet::empty(ring.order());
    for g in gens {
        for r in 0..ring.order() {
            seeds.insert(ring.mul(g, r));
        }
    }
    additive_closure(ring, &seeds)
}

impl Ideal {
    /// The smallest ideal containing `gens`; empty `gens` give the zero ideal.
    pub fn generated_by(ring: &FiniteRing, gens: &[usize]) -> Ideal {
        Self::from_members(ring, absorb(ring, gens.iter().copied()))
    }

    pub fn zero(ring: &FiniteRing) -> Ideal {
        Self::generated_by(ring, &[])
    }

    pub fn unit(ring: &FiniteRing) -> Ideal {
        Ideal {
            ring: ring.clone(),
            members: ElementSet::full(ring.order()),
            generators: vec![ring.one()],
        }
    }

    /// Wraps a membership set already known to be an ideal, choosing
    /// generators greedily in ascending element order.
    pub(crate) fn from_members(ring: &FiniteRing, members: ElementSet) -> Ideal {
        let mut generators = Vec::new();
        let mut span = ElementSet::from_indices(ring.order(), [ring.zero()]);
        if members.contains(ring.one()) {
            generators.push(ring.one());
        } else {
            for x in members.iter() {
                if !span.contains(x) {
                    generators.push(x);
                    span = absorb(ring, generators.iter().copied());
                }
            }
            if generators.is_empty() {
                generators.push(ring.zero());
            }
        }
        Ideal {
            ring: ring.clone(),
            members,
            generators,
        }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_proper(&self) -> bool {
        !self.contains(self.ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut seeds = self.members.clone();
        seeds.union_with(&other.members);
        Ok(Self::from_members(&self.ring, additive_closure(&self.ring, &seeds)))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut seeds = ElementSet::empty(self.ring.order());
        for a in self.members.iter() {
            for b in other.members.iter() {
                seeds.insert(self.ring.mul(a, b));
            }
        }
        Ok(Self::from_members(&self.ring, additive_closure(&self.ring, &seeds)))
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        Ok(Self::from_members(&self.ring, self.members.intersection(&other.members)))
    }

    pub fn is_coprime(&self, other: &Ideal) -> Result<bool> {
        Ok(!self.sum(other)?.is_proper())
    }

    /// `N^i`, with `N^0 = R`.
    pub fn power(&self, i: usize) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..i {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// The least `k >= 0` with `N^k = N^(k+1)`.
    pub fn index(&self) -> usize {
        let mut current = Ideal::unit(&self.ring);
        let mut k = 0;
        loop {
            let next = current.product(self).expect("same ring");
            if next == current {
                return k;
            }
            current = next;
            k += 1;
        }
    }

    /// All powers `N^0 ⊋ N^1 ⊋ ... ⊋ N^k` up to the index.
    pub fn power_chain(&self) -> Vec<Ideal> {
        let mut chain = vec![Ideal::unit(&self.ring)];
        loop {
            let next = chain.last().unwrap().product(self).expect("same ring");
            if &next == chain.last().unwrap() {
                return chain;
            }
            chain.push(next);
        }
    }

    /// Generator list as `(g1, g2, ...)` in element names.
    pub fn render(&self) -> String {
        format!("({})", self.generator_names().join(", "))
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.generators.iter().map(|&g| self.ring.element_name(g)).collect()
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{} of size {} in {}", self.render(), self.len(), self.ring.label())
    }
}

/// The set of nilpotent elements. Each element's powers are iterated until
/// they hit zero or repeat.
pub fn nilradical(ring: &FiniteRing) -> Ideal {
    let n = ring.order();
    let mut nil = ElementSet::empty(n);
    for x in 0..n {
        let mut seen = ElementSet::empty(n);
        let mut p = x;
        loop {
            if p == ring.zero() {
                nil.insert(x);
                break;
            }
            if !seen.insert(p) {
                break;
            }
            p = ring.mul(p, x);
        }
    }
    Ideal::from_members(ring, nil)
}

/// `R / I` together with the quotient map as a table from elements of `R`
/// to coset indices. Cosets are numbered by their least representative.
pub fn quotient_ring(ring: &FiniteRing, ideal: &Ideal) -> Result<(FiniteRing, Vec<usize>)> {
    if !ideal.ring().same_ring(ring) {
        return Err(Error::RingMismatch);
    }
    if !ideal.is_proper() {
        return Err(Error::InvalidArgument("cannot form the quotient by the unit ideal".into()));
    }
    let n = ring.order();
    let mut coset = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for i in ideal.members().iter() {
            coset[ring.add(x, i)] = c;
        }
    }
    let m = reps.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            add.push(coset[ring.add(a, b)] as u32);
            mul.push(coset[ring.mul(a, b)] as u32);
        }
    }
    let names = reps.iter().map(|&r| ring.element_name(r)).collect();
    let label = format!("{} / {}", ring.label(), ideal.render());
    let q = FiniteRing::from_trusted_tables(
        m,
        coset[ring.zero()],
        coset[ring.one()],
        add,
        mul,
        names,
        label,
    );
    Ok((q, coset))
}

/// Every maximal ideal of `ring`, sorted by generator list.
///
/// The ring modulo its nilradical is a product of fields; its primitive
/// idempotents pick out the factors, and the annihilator of each primitive
/// idempotent pulls back to a maximal ideal of `ring`.
pub fn maximal_ideals(ring: &FiniteRing) -> Result<Vec<Ideal>> {
    let nil = nilradical(ring);
    let (q, theta) = quotient_ring(ring, &nil)?;
    let nonzero: Vec<usize> = q.idempotents().iter().filter(|&e| e != q.zero()).collect();
    let primitive = nonzero
        .iter()
        .copied()
        .filter(|&e| nonzero.iter().all(|&f| f == e || q.mul(e, f) != f));
    let mut out = Vec::new();
    for e in primitive {
        let annihilator = ElementSet::from_indices(
            q.order(),
            (0..q.order()).filter(|&x| q.mul(x, e) == q.zero()),
        );
        let members =
            ElementSet::from_indices(ring.order(), (0..ring.order()).filter(|&r| annihilator.contains(theta[r])));
        let m = Ideal::from_members(ring, members);
        let (residue, _) = quotient_ring(ring, &m)?;
        if !residue.is_field() {
            return Err(Error::InternalConsistency(format!(
                "candidate maximal ideal {} of {} has a non-field quotient",
                m.render(),
                ring.label()
            )));
        }
        out.push(m);
    }
    out.sort_by(|a, b| a.generators().cmp(b.generators()));
    out.dedup();
    Ok(out)
}

/// Least-index `x` with `x - a_i ∈ Q_i` for every constraint `(Q_i, a_i)`.
/// The ideals must be pairwise coprime.
pub fn crt_solve(ring: &FiniteRing, constraints: &[(Ideal, usize)]) -> Result<usize> {
    for (q, _) in constraints {
        if !q.ring().same_ring(ring) {
            return Err(Error::RingMismatch);
        }
    }
    for (i, (qi, _)) in constraints.iter().enumerate() {
        for (qj, _) in &constraints[i + 1..] {
            if !qi.is_coprime(qj)? {
                return Err(Error::Precondition(format!(
                    "ideals {} and {} are not coprime",
                    qi.render(),
                    qj.render()
                )));
            }
        }
    }
    let mut candidates = ElementSet::full(ring.order());
    for (q, a) in constraints {
        let coset = ElementSet::from_indices(ring.order(), q.members().iter().map(|m| ring.add(*a, m)));
        candidates.intersect_with(&coset);
    }
    candidates
        .first()
        .ok_or_else(|| Error::InternalConsistency("coprime CRT system has no solution".into()))
}
