//! Canonical forms of finitely generated abelian groups.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::smith::smith_normal_form;
use crate::error::{Error, Result};

/// `Z^free_rank + Z/d_1 + ... + Z/d_k` with `2 <= d_1 | d_2 | ... | d_k`.
///
/// The representation is canonical: two values are isomorphic groups iff
/// they compare equal. Canonical generators are ordered free part first,
/// then torsion generators in invariant-factor order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FgAbGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        Self::new(0, vec![order.into()])
    }

    /// Canonicalizes `Z^free_rank + sum Z/orders[i]` for arbitrary orders;
    /// an order of zero is read as a free summand, units vanish.
    pub fn new(free_rank: usize, orders: Vec<BigInt>) -> Self {
        let mut free = free_rank;
        let mut finite = Vec::new();
        for o in orders {
            let o = o.abs();
            if o.is_zero() {
                free += 1;
            } else if !o.is_one() {
                finite.push(o);
            }
        }
        if finite.len() <= 1 {
            return Self {
                free_rank: free,
                invariant_factors: finite,
            };
        }
        let f = smith_normal_form(&IntMatrix::diagonal(&finite));
        let invariant_factors = f.diagonal().into_iter().filter(|d| !d.is_one()).collect();
        Self {
            free_rank: free,
            invariant_factors,
        }
    }

    /// Cokernel `Z^rows / col(relations)` in canonical form.
    pub fn from_presentation(relations: &IntMatrix) -> Self {
        let f = smith_normal_form(relations);
        let mut orders = f.diagonal();
        orders.resize(relations.rows(), BigInt::zero());
        Self::new(0, orders)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn generator_count(&self) -> usize {
        self.free_rank + self.invariant_factors.len()
    }

    /// Order of each canonical generator, zero for free generators.
    pub fn orders(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.free_rank];
        out.extend(self.invariant_factors.iter().cloned());
        out
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut orders = self.invariant_factors.clone();
        orders.extend(other.invariant_factors.iter().cloned());
        Self::new(self.free_rank + other.free_rank, orders)
    }

    /// `self^k`
    pub fn power(&self, k: usize) -> Self {
        (0..k).fold(Self::trivial(), |acc, _| acc.direct_sum(self))
    }
}

/// Isomorphism test on canonical forms.
pub fn iso_check(a: &FgAbGroup, b: &FgAbGroup) -> bool {
    a == b
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        match self.free_rank {
            0 => {}
            1 => terms.push("Z".to_string()),
            r => terms.push(format!("Z^{r}")),
        }
        terms.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", terms.join(" + "))
    }
}

impl FromStr for FgAbGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse group `{s}`"));
        let s = s.trim();
        if s == "0" {
            return Ok(Self::trivial());
        }
        let mut free = 0usize;
        let mut orders = Vec::new();
        for term in s.split('+').map(str::trim) {
            if term == "Z" {
                free += 1;
            } else if let Some(k) = term.strip_prefix("Z^") {
                free += k.parse::<usize>().map_err(|_| bad())?;
            } else if let Some(d) = term.strip_prefix("Z/") {
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d < BigInt::one() {
                    return Err(bad());
                }
                orders.push(d);
            } else if term != "0" {
                return Err(bad());
            }
        }
        Ok(Self::new(free, orders))
    }
}

/// The coefficient group `G`, decomposed into cyclic summands.
///
/// Chains with coefficients in `G` are modeled as one copy of the integral
/// chain group per summand, each copy reduced modulo the summand's order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientGroup(FgAbGroup);

impl CoefficientGroup {
    pub fn new(group: FgAbGroup) -> Self {
        Self(group)
    }

    pub fn integers() -> Self {
        Self(FgAbGroup::free(1))
    }

    pub fn cyclic(order: u64) -> Self {
        Self(FgAbGroup::cyclic(order))
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.0
    }

    /// Order of each cyclic summand (zero for `Z`).
    pub fn summand_moduli(&self) -> Vec<BigInt> {
        self.0.orders()
    }

    pub fn summand_count(&self) -> usize {
        self.0.generator_count()
    }

    /// Relation moduli of `C tensor G` when `C` is free of rank `dim`.
    pub fn chain_moduli(&self, dim: usize) -> Vec<BigInt> {
        self.summand_moduli()
            .into_iter()
            .flat_map(|q| std::iter::repeat_n(q, dim))
            .collect()
    }

    /// `m tensor 1_G` as a block-diagonal integer matrix.
    pub fn tensor(&self, m: &IntMatrix) -> IntMatrix {
        m.block_diagonal(self.summand_count())
    }
}

impl Deref for CoefficientGroup {
    type Target = FgAbGroup;

    fn deref(&self) -> &FgAbGroup {
        &self.0
    }
}

impl From<FgAbGroup> for CoefficientGroup {
    fn from(g: FgAbGroup) -> Self {
        Self(g)
    }
}

impl fmt::Display for CoefficientGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn canonical_order_independent() {
        let a = FgAbGroup::new(1, orders(&[2]));
        let b = FgAbGroup::new(0, orders(&[2, 0]));
        assert!(iso_check(&a, &b));
    }

    #[test]
    fn z2_plus_z3_is_z6() {
        // relations 2e1, 3e2
        let rel = IntMatrix::from_rows(&[[2, 0], [0, 3]]);
        assert!(iso_check(&FgAbGroup::from_presentation(&rel), &FgAbGroup::cyclic(6)));
        assert_eq!(FgAbGroup::new(0, orders(&[2, 3])), FgAbGroup::cyclic(6));
    }

    #[test]
    fn z_not_z2() {
        assert!(!iso_check(&FgAbGroup::free(1), &FgAbGroup::cyclic(2)));
    }

    #[test]
    fn invariant_factor_chain() {
        let g = FgAbGroup::new(0, orders(&[4, 6, 10]));
        assert_eq!(g.invariant_factors(), &orders(&[2, 2, 60])[..]);
    }

    #[test]
    fn render_and_parse() {
        let g = FgAbGroup::new(2, orders(&[6, 2]));
        assert_eq!(g.to_string(), "Z^2 + Z/2 + Z/6");
        assert_eq!("Z^2 + Z/2 + Z/6".parse::<FgAbGroup>().unwrap(), g);
        assert_eq!(FgAbGroup::trivial().to_string(), "0");
        assert_eq!("0".parse::<FgAbGroup>().unwrap(), FgAbGroup::trivial());
        assert_eq!("Z".parse::<FgAbGroup>().unwrap(), FgAbGroup::free(1));
        assert!("Q".parse::<FgAbGroup>().is_err());
    }

    #[test]
    fn unit_orders_vanish() {
        assert!(FgAbGroup::new(0, orders(&[1, 1])).is_trivial());
        assert!(FgAbGroup::from_presentation(&IntMatrix::identity(3)).is_trivial());
        assert_eq!(
            FgAbGroup::from_presentation(&IntMatrix::zeros(2, 0)),
            FgAbGroup::free(2)
        );
    }

    #[test]
    fn coefficient_moduli() {
        let g = CoefficientGroup::new(FgAbGroup::new(1, orders(&[2])));
        assert_eq!(g.chain_moduli(2), orders(&[0, 0, 2, 2]));
        assert_eq!(g.tensor(&IntMatrix::identity(2)).rows(), 4);
    }
}
