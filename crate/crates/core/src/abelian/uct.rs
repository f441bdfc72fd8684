//! Universal coefficient formulas for finitely generated groups, used as
//! an oracle independent of any chain-level computation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::group::{CoefficientGroup, FgAbGroup};

// Orders of cyclic summands, with 0 standing for Z.
type Cyclic = BigInt;

fn combine(a: &FgAbGroup, b: &FgAbGroup, rule: impl Fn(&Cyclic, &Cyclic) -> Option<Cyclic>) -> FgAbGroup {
    let mut free = 0;
    let mut orders = Vec::new();
    for x in a.orders() {
        for y in b.orders() {
            match rule(&x, &y) {
                Some(o) if o.is_zero() => free += 1,
                Some(o) => orders.push(o),
                None => {}
            }
        }
    }
    FgAbGroup::new(free, orders)
}

pub fn tensor(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    combine(a, b, |x, y| Some(x.gcd(y)))
}

pub fn tor(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    combine(a, b, |x, y| (!x.is_zero() && !y.is_zero()).then(|| x.gcd(y)))
}

pub fn hom(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    combine(a, b, |x, y| match (x.is_zero(), y.is_zero()) {
        (true, _) => Some(y.clone()),
        (false, true) => None,
        (false, false) => Some(x.gcd(y)),
    })
}

pub fn ext(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    combine(a, b, |x, y| match (x.is_zero(), y.is_zero()) {
        (true, _) => None,
        (false, true) => Some(x.clone()),
        (false, false) => Some(x.gcd(y)),
    })
}

fn integral(groups: &[FgAbGroup], n: Option<usize>) -> FgAbGroup {
    n.and_then(|n| groups.get(n))
        .cloned()
        .unwrap_or_else(FgAbGroup::trivial)
}

/// `H_n(−; G) = H_n ⊗ G ⊕ Tor(H_{n-1}, G)` from integral homology.
pub fn homology_with_coefficients(integral_homology: &[FgAbGroup], g: &CoefficientGroup, n: usize) -> FgAbGroup {
    tensor(&integral(integral_homology, Some(n)), g).direct_sum(&tor(&integral(integral_homology, n.checked_sub(1)), g))
}

/// `H^n(−; G) = Hom(H_n, G) ⊕ Ext(H_{n-1}, G)` from integral homology.
pub fn cohomology_with_coefficients(integral_homology: &[FgAbGroup], g: &CoefficientGroup, n: usize) -> FgAbGroup {
    hom(&integral(integral_homology, Some(n)), g).direct_sum(&ext(&integral(integral_homology, n.checked_sub(1)), g))
}
