//! Reference homology from ordered chains: every tuple `(v_0, …, v_n)` whose
//! vertex set is a simplex is a basis element, repeats included. Bases grow
//! exponentially, so this is only meant for cross-checking tiny complexes.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::complex::{Complex, Simplex, SimplicialPair, Vertex};
use crate::abelian::{homology_from_boundaries, CoefficientGroup, FgAbGroup, IntMatrix};
use crate::error::{Error, Result};

/// Largest ordered basis the reference engine will build.
pub const ORDERED_BASIS_LIMIT: usize = 20_000;

fn ordered_tuples(k: &Complex, n: usize) -> Result<Vec<Vec<Vertex>>> {
    let vertices = k.vertices();
    let mut level: Vec<Vec<Vertex>> = vertices.iter().map(|&v| vec![v]).collect();
    for _ in 0..n {
        let mut next = Vec::new();
        for t in &level {
            for &v in &vertices {
                let s = Simplex::new(t.iter().copied().chain([v]));
                if k.contains(&s) {
                    let mut u = t.clone();
                    u.push(v);
                    next.push(u);
                }
            }
            if next.len() > ORDERED_BASIS_LIMIT {
                return Err(Error::InvalidInput(format!(
                    "ordered chain basis in degree {n} exceeds {ORDERED_BASIS_LIMIT} tuples"
                )));
            }
        }
        level = next;
    }
    Ok(level)
}

fn relative_tuples(pair: &SimplicialPair, n: usize) -> Result<Vec<Vec<Vertex>>> {
    Ok(ordered_tuples(pair.total(), n)?
        .into_iter()
        .filter(|t| !pair.sub().contains(&Simplex::new(t.iter().copied())))
        .collect())
}

fn ordered_boundary(rows: &[Vec<Vertex>], cols: &[Vec<Vertex>]) -> IntMatrix {
    let index: HashMap<&[Vertex], usize> = rows.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (c, t) in cols.iter().enumerate() {
        if t.len() < 2 {
            continue;
        }
        for i in 0..t.len() {
            let mut face = t.clone();
            face.remove(i);
            if let Some(&r) = index.get(face.as_slice()) {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let v = m.get(r, c) + BigInt::from(sign);
                m.set(r, c, v);
            }
        }
    }
    m
}

/// `H_n(X, A; G)` computed from ordered chains.
pub fn ordered_homology(pair: &SimplicialPair, coefficients: &CoefficientGroup, n: usize) -> Result<FgAbGroup> {
    let below = if n == 0 {
        Vec::new()
    } else {
        relative_tuples(pair, n - 1)?
    };
    let here = relative_tuples(pair, n)?;
    let above = relative_tuples(pair, n + 1)?;
    let d_out = ordered_boundary(&below, &here);
    let d_in = ordered_boundary(&here, &above);
    homology_from_boundaries(&d_in, &d_out, coefficients)
}
