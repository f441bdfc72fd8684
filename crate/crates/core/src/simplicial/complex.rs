use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;

use crate::abelian::IntMatrix;
use crate::error::{Error, Result};

/// Vertex identifiers; the global vertex order is the numeric order.
pub type Vertex = usize;

/// A nonempty set of vertices, stored strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        assert!(!v.is_empty(), "a simplex needs at least one vertex");
        Self(v)
    }

    pub fn vertex(v: Vertex) -> Self {
        Self(vec![v])
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// The face opposite the `i`-th vertex.
    pub fn face(&self, i: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(i);
        Simplex(v)
    }

    /// Codimension-one faces with their incidence signs `(-1)^i`.
    pub fn boundary(&self) -> Vec<(Simplex, i64)> {
        if self.0.len() < 2 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|i| (self.face(i), if i % 2 == 0 { 1 } else { -1 }))
            .collect()
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        Simplex::new(self.0.iter().chain(&other.0).copied())
    }

    /// All nonempty subsets, including the simplex itself.
    pub fn all_faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        (1u64..(1u64 << n))
            .map(|mask| Simplex((0..n).filter(|i| mask >> i & 1 == 1).map(|i| self.0[i]).collect()))
            .collect()
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<Vertex>> for Simplex {
    fn from(v: Vec<Vertex>) -> Self {
        Simplex::new(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for Simplex {
    fn from(v: [Vertex; N]) -> Self {
        Simplex::new(v)
    }
}

/// A finite abstract simplicial complex. Simplices of each dimension are
/// kept in lexicographic order, which fixes the bases of all chain groups.
#[derive(Clone, Default)]
pub struct Complex {
    levels: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl Complex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The smallest complex containing every given simplex.
    pub fn closure<S: Into<Simplex>>(simplices: impl IntoIterator<Item = S>) -> Self {
        let mut all = BTreeSet::new();
        for s in simplices {
            let s: Simplex = s.into();
            if all.contains(&s) {
                continue;
            }
            all.extend(s.all_faces());
        }
        Self::from_sorted(all)
    }

    /// A complex from a family that must already be closed under faces.
    pub fn from_family<S: Into<Simplex>>(simplices: impl IntoIterator<Item = S>) -> Result<Self> {
        let all: BTreeSet<Simplex> = simplices.into_iter().map(Into::into).collect();
        for s in &all {
            for (f, _) in s.boundary() {
                if !all.contains(&f) {
                    return Err(Error::InvalidInput(format!(
                        "family is not closed under faces: {s:?} lacks {f:?}"
                    )));
                }
            }
        }
        Ok(Self::from_sorted(all))
    }

    fn from_sorted(all: BTreeSet<Simplex>) -> Self {
        let mut levels: Vec<Vec<Simplex>> = Vec::new();
        for s in all {
            let d = s.dim();
            if levels.len() <= d {
                levels.resize(d + 1, Vec::new());
            }
            levels[d].push(s);
        }
        let index = levels
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Self { levels, index }
    }

    /// The subcomplex of simplices satisfying `keep`; `keep` must be
    /// inherited by faces.
    pub fn filter(&self, mut keep: impl FnMut(&Simplex) -> bool) -> Result<Complex> {
        Complex::from_family(self.iter().filter(|s| keep(s)).cloned())
    }

    pub fn dimension(&self) -> Option<usize> {
        self.levels.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn simplices(&self, n: usize) -> &[Simplex] {
        self.levels.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, n: usize) -> usize {
        self.simplices(n).len()
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.levels.iter().flatten()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.simplices(0).iter().map(|s| s.0[0]).collect()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index_of(s).is_some()
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s.dim())?.get(s).copied()
    }

    pub fn is_subcomplex_of(&self, other: &Complex) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.levels
            .iter()
            .enumerate()
            .map(|(n, l)| if n % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    /// Applies an injective, order-preserving relabeling of vertices.
    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> Complex {
        Complex::from_sorted(self.iter().map(|s| Simplex::new(s.0.iter().map(|&v| f(v)))).collect())
    }
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.levels == other.levels
    }
}

impl Eq for Complex {}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

/// `∂_n` of `k` in the lexicographic bases of `n`- and `(n-1)`-simplices.
pub fn boundary_matrix(k: &Complex, n: usize) -> IntMatrix {
    let cols = k.simplices(n);
    if n == 0 {
        return IntMatrix::zeros(0, cols.len());
    }
    let mut m = IntMatrix::zeros(k.count(n - 1), cols.len());
    for (c, s) in cols.iter().enumerate() {
        for (face, sign) in s.boundary() {
            let r = k.index_of(&face).expect("complex is closed under faces");
            m.set(r, c, BigInt::from(sign));
        }
    }
    m
}

/// A complex together with a distinguished subcomplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialPair {
    total: Complex,
    sub: Complex,
}

impl SimplicialPair {
    pub fn new(total: Complex, sub: Complex) -> Result<Self> {
        if let Some(s) = sub.iter().find(|s| !total.contains(s)) {
            return Err(Error::NotSubcomplex(s.0.clone()));
        }
        Ok(Self { total, sub })
    }

    /// `(k, ∅)`
    pub fn absolute(k: Complex) -> Self {
        Self {
            total: k,
            sub: Complex::empty(),
        }
    }

    pub fn total(&self) -> &Complex {
        &self.total
    }

    pub fn sub(&self) -> &Complex {
        &self.sub
    }

    /// `(sub, ∅)`
    pub fn sub_pair(&self) -> SimplicialPair {
        Self::absolute(self.sub.clone())
    }

    /// `(total, ∅)`
    pub fn total_pair(&self) -> SimplicialPair {
        Self::absolute(self.total.clone())
    }
}
