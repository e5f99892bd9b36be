//! Finite abelian groups given by a dense operation table, with
//! invariant-factor decomposition.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::FiniteRing;
use crate::sequence::CommutativeMonoid;

/// Groups up to this order are checked exhaustively for the group axioms.
pub const GROUP_CHECK_CAP: usize = 4096;

/// A finite abelian group on local indices `0..order`.
///
/// Each local index maps back to a carrier index: the ring element for a unit
/// group, or the mixed-radix code of the tuple for a synthetic group.
#[derive(Clone)]
pub struct AbelianGroupView {
    label: String,
    carrier: Vec<usize>,
    names: Vec<String>,
    table: Vec<u32>,
    identity: usize,
    invariant_factors: Vec<usize>,
}

impl AbelianGroupView {
    /// Builds a group from its table, checking the axioms and computing the
    /// invariant factors.
    pub fn from_table(
        label: impl Into<String>,
        carrier: Vec<usize>,
        names: Vec<String>,
        table: Vec<u32>,
        identity: usize,
    ) -> Result<Self> {
        let m = carrier.len();
        if table.len() != m * m || names.len() != m || identity >= m.max(1) {
            return Err(Error::InvalidArgument("malformed group table".into()));
        }
        check_abelian_group(m, &table, identity)?;
        let invariant_factors = invariant_factors_of(m, &table, identity);
        Ok(AbelianGroupView {
            label: label.into(),
            carrier,
            names,
            table,
            identity,
            invariant_factors,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.carrier.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.op(a, b) == self.identity).expect("group element has an inverse")
    }

    pub fn element_order(&self, a: usize) -> usize {
        element_order(self.order(), &self.table, self.identity, a)
    }

    pub fn invariant_factors(&self) -> &[usize] {
        &self.invariant_factors
    }

    pub fn exponent(&self) -> usize {
        self.invariant_factors.last().copied().unwrap_or(1)
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }

    /// Carrier index (ring element or synthetic code) of a local index.
    pub fn carrier_index(&self, local: usize) -> usize {
        self.carrier[local]
    }

    pub fn local_index(&self, carrier: usize) -> Option<usize> {
        self.carrier.binary_search(&carrier).ok()
    }

    pub fn element_name(&self, local: usize) -> String {
        self.names[local].clone()
    }
}

impl CommutativeMonoid for AbelianGroupView {
    fn size(&self) -> usize {
        self.order()
    }

    fn op(&self, a: usize, b: usize) -> usize {
        AbelianGroupView::op(self, a, b)
    }

    fn identity(&self) -> usize {
        self.identity
    }
}

impl fmt::Debug for AbelianGroupView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbelianGroupView({}, factors {:?})", self.label, self.invariant_factors)
    }
}

/// `U(R)` under ring multiplication. Local indices follow ascending ring index.
pub fn unit_group_view(ring: &FiniteRing) -> AbelianGroupView {
    let carrier = ring.units().to_vec();
    let m = carrier.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &carrier {
        for &b in &carrier {
            let p = ring.mul(a, b);
            table.push(carrier.binary_search(&p).expect("units are closed under multiplication") as u32);
        }
    }
    let identity = carrier.binary_search(&ring.one()).expect("1 is a unit");
    let names = carrier.iter().map(|&u| ring.element_name(u)).collect();
    AbelianGroupView::from_table(format!("U({})", ring.label()), carrier, names, table, identity)
        .expect("the unit group of a commutative ring is abelian")
}

/// `Z_{d_1} x ... x Z_{d_k}` with componentwise addition. Elements are tuples
/// in mixed radix, first component most significant.
pub fn synthetic_group(moduli: &[usize]) -> Result<AbelianGroupView> {
    if let Some(&d) = moduli.iter().find(|&&d| d < 2) {
        return Err(Error::InvalidArgument(format!("cyclic factor Z{d} must have order at least 2")));
    }
    let m = moduli
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .filter(|&m| m <= GROUP_CHECK_CAP)
        .ok_or_else(|| Error::InvalidArgument(format!("group order exceeds {GROUP_CHECK_CAP}")))?;
    let decode = |mut code: usize| {
        let mut parts = vec![0; moduli.len()];
        for (slot, &d) in parts.iter_mut().zip(moduli).rev() {
            *slot = code % d;
            code /= d;
        }
        parts
    };
    let encode = |parts: &[usize]| parts.iter().zip(moduli).fold(0, |acc, (&x, &d)| acc * d + x);
    let mut table = Vec::with_capacity(m * m);
    for a in 0..m {
        let pa = decode(a);
        for b in 0..m {
            let sum: Vec<usize> = decode(b).iter().zip(&pa).zip(moduli).map(|((x, y), d)| (x + y) % d).collect();
            table.push(encode(&sum) as u32);
        }
    }
    let names = (0..m)
        .map(|a| {
            let parts: Vec<String> = decode(a).iter().map(usize::to_string).collect();
            if parts.len() == 1 {
                parts[0].clone()
            } else {
                format!("({})", parts.join(","))
            }
        })
        .collect();
    let label = if moduli.is_empty() {
        "trivial".to_string()
    } else {
        moduli.iter().map(|d| format!("Z{d}")).collect::<Vec<_>>().join(" x ")
    };
    AbelianGroupView::from_table(label, (0..m).collect(), names, table, 0)
}

fn check_abelian_group(m: usize, table: &[u32], identity: usize) -> Result<()> {
    if m > GROUP_CHECK_CAP {
        return Ok(());
    }
    let op = |a: usize, b: usize| table[a * m + b] as usize;
    for a in 0..m {
        if op(a, identity) != a {
            return Err(Error::Precondition(format!("{identity} is not an identity")));
        }
        if !(0..m).any(|b| op(a, b) == identity) {
            return Err(Error::Precondition(format!("element {a} has no inverse")));
        }
        for b in 0..a {
            if op(a, b) != op(b, a) {
                return Err(Error::Precondition(format!("group is not abelian: {a}, {b} do not commute")));
            }
        }
    }
    if m <= 512 {
        for a in 0..m {
            for b in 0..m {
                let ab = op(a, b);
                for c in 0..m {
                    if op(ab, c) != op(a, op(b, c)) {
                        return Err(Error::Precondition(format!("operation is not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
    }
    Ok(())
}

fn element_order(m: usize, table: &[u32], identity: usize, a: usize) -> usize {
    let mut k = 1;
    let mut p = a;
    while p != identity {
        p = table[p * m + a] as usize;
        k += 1;
    }
    k
}

/// Invariant factors `d_1 | d_2 | ... | d_r`, each at least 2.
///
/// An element of maximal order generates a direct summand, so the largest
/// factor is its order and the rest come from the quotient by its cyclic
/// subgroup. Ties between maximal-order elements go to the least index.
pub fn invariant_factors_of(m: usize, table: &[u32], identity: usize) -> Vec<usize> {
    let mut factors = Vec::new();
    let mut m = m;
    let mut table = table.to_vec();
    let mut identity = identity;
    while m > 1 {
        let (g, ord) = (0..m)
            .map(|a| (a, element_order(m, &table, identity, a)))
            .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best });
        factors.push(ord);

        let mut subgroup = Vec::with_capacity(ord);
        let mut p = identity;
        for _ in 0..ord {
            subgroup.push(p);
            p = table[p * m + g] as usize;
        }
        let mut coset = vec![usize::MAX; m];
        let mut reps = Vec::new();
        for x in 0..m {
            if coset[x] != usize::MAX {
                continue;
            }
            for &h in &subgroup {
                coset[table[x * m + h] as usize] = reps.len();
            }
            reps.push(x);
        }
        let k = reps.len();
        let mut quotient = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                quotient.push(coset[table[a * m + b] as usize] as u32);
            }
        }
        identity = coset[identity];
        table = quotient;
        m = k;
    }
    factors.reverse();
    factors
}
