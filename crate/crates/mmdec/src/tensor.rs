//! Dense order-3 tensors over an exact field, rank-one terms, decompositions
//! and the matrix multiplication tensor itself.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * `matmul_tensor(n)` has entry `((i,j),(k,l),(p,q)) = 1` iff `j = k`,
//!   `l = p`, `q = i`; contracting it against matrices `X, Y, Z` entrywise
//!   gives `trace(XYZ)`.
//! * A rank-one term `coeff * A (x) B (x) C` contributes
//!   `coeff * A[i][j] * B[k][l] * C[p][q]` to entry `((i,j),(k,l),(p,q))`.
//!   The standard algorithm is then literally the n^3 terms
//!   `E_ij (x) E_jk (x) E_ki`, and the factor matrices of a term are the
//!   classical multiplication-selector matrices.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{Field, FieldKind};

/// Square matrix over an exact field.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat<K: Field> {
    n: usize,
    entries: Vec<K>,
}

impl<K: Field> Mat<K> {
    pub fn new(n: usize, entries: Vec<K>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: entries.len(),
            });
        }
        Ok(Mat { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Mat { n, entries })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| K::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn zero(n: usize) -> Self {
        Mat {
            n,
            entries: vec![K::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n);
        for i in 0..n {
            m.set(i, i, K::one());
        }
        m
    }

    /// Matrix unit with a one at (row, col).
    pub fn unit(n: usize, row: usize, col: usize) -> Self {
        let mut m = Mat::zero(n);
        m.set(row, col, K::one());
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &K {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: K) {
        self.entries[row * self.n + col] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(K::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Mat::zero(n);
        for r in 0..n {
            for c in 0..n {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Mat { n: self.n, entries }
    }

    pub fn neg(&self) -> Self {
        Mat {
            n: self.n,
            entries: self.entries.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, factor: &K) -> Self {
        Mat {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|a| a.clone() * factor.clone())
                .collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Mat::zero(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = K::zero();
                for k in 0..n {
                    if self.get(r, k).is_zero() || other.get(k, c).is_zero() {
                        continue;
                    }
                    acc = acc + self.get(r, k).clone() * other.get(k, c).clone();
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn trace(&self) -> K {
        let mut acc = K::zero();
        for i in 0..self.n {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }

    fn to_rows(&self) -> Vec<Vec<K>> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c).clone()).collect())
            .collect()
    }

    /// Exact rank via elimination with row-major first-nonzero pivoting.
    pub fn rank(&self) -> usize {
        linalg::rank(&self.to_rows())
    }

    pub fn determinant(&self) -> K {
        linalg::determinant(&self.to_rows())
    }

    pub fn inverse(&self) -> Option<Self> {
        linalg::invert(&self.to_rows())
            .map(|rows| Mat::from_rows(rows).expect("inverse has matching shape"))
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_zero()
    }

    /// m is nilpotent iff m^n = 0; for 2x2 this is m^2 = 0.
    pub fn is_nilpotent(&self) -> bool {
        let mut power = self.clone();
        for _ in 1..self.n {
            power = power.matmul(self);
        }
        power.is_zero()
    }

    /// First nonzero entry in row-major order.
    pub fn leading_entry(&self) -> Option<(usize, usize, K)> {
        for r in 0..self.n {
            for c in 0..self.n {
                if !self.get(r, c).is_zero() {
                    return Some((r, c, self.get(r, c).clone()));
                }
            }
        }
        None
    }

    /// Rescales so the leading entry is one; returns the extracted scale.
    pub fn normalized(&self) -> Result<(Self, K)> {
        let (_, _, lead) = self.leading_entry().ok_or(Error::ZeroMatrixFactor)?;
        let inv = lead.inverse().expect("leading entry is nonzero");
        Ok((self.scale(&inv), lead))
    }

    pub fn map_field<L: Field>(&self, f: &impl Fn(&K) -> L) -> Mat<L> {
        Mat {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<K: Field> fmt::Display for Mat<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            write!(f, "[")?;
            for c in 0..self.n {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
            if r + 1 < self.n {
                write!(f, " ")?;
            }
        }
        Ok(())
    }
}

/// One rank-one summand `coeff * A (x) B (x) C`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RankOneTerm<K: Field> {
    pub coeff: K,
    pub a: Mat<K>,
    pub b: Mat<K>,
    pub c: Mat<K>,
}

impl<K: Field> RankOneTerm<K> {
    pub fn new(coeff: K, a: Mat<K>, b: Mat<K>, c: Mat<K>) -> Result<Self> {
        let n = a.n();
        for m in [&b, &c] {
            if m.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: m.n(),
                });
            }
        }
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return Err(Error::ZeroMatrixFactor);
        }
        Ok(RankOneTerm { coeff, a, b, c })
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    /// Scale-canonical form: each factor has leading entry one, the scales
    /// are absorbed into the coefficient. The represented tensor is
    /// unchanged, which makes term equality projective-lift independent.
    pub fn canonicalize(&self) -> Result<Self> {
        let (a, sa) = self.a.normalized()?;
        let (b, sb) = self.b.normalized()?;
        let (c, sc) = self.c.normalized()?;
        Ok(RankOneTerm {
            coeff: self.coeff.clone() * sa * sb * sc,
            a,
            b,
            c,
        })
    }

    /// Cyclic factor shift (a, b, c) -> (b, c, a); the generator of the
    /// bracket orbit.
    pub fn rotated(&self) -> Self {
        RankOneTerm {
            coeff: self.coeff.clone(),
            a: self.b.clone(),
            b: self.c.clone(),
            c: self.a.clone(),
        }
    }

    /// Transpose reflection (a, b, c) -> (a^T, c^T, b^T).
    pub fn reflected(&self) -> Self {
        RankOneTerm {
            coeff: self.coeff.clone(),
            a: self.a.transpose(),
            b: self.c.transpose(),
            c: self.b.transpose(),
        }
    }

    /// Ordered triple of factor ranks.
    pub fn rank_triple(&self) -> [usize; 3] {
        [self.a.rank(), self.b.rank(), self.c.rank()]
    }

    /// Unordered (sorted) rank triple.
    pub fn unordered_rank_triple(&self) -> [usize; 3] {
        let mut t = self.rank_triple();
        t.sort_unstable();
        t
    }

    pub fn tensor(&self) -> Tensor3<K> {
        let mut t = Tensor3::zero(self.n());
        self.expand_into(&mut t);
        t
    }

    fn expand_into(&self, out: &mut Tensor3<K>) {
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                let av = self.a.get(i, j);
                if av.is_zero() {
                    continue;
                }
                let ca = self.coeff.clone() * av.clone();
                for k in 0..n {
                    for l in 0..n {
                        let bv = self.b.get(k, l);
                        if bv.is_zero() {
                            continue;
                        }
                        let cab = ca.clone() * bv.clone();
                        for p in 0..n {
                            for q in 0..n {
                                let cv = self.c.get(p, q);
                                if cv.is_zero() {
                                    continue;
                                }
                                let idx = out.index((i, j), (k, l), (p, q));
                                out.entries[idx] =
                                    out.entries[idx].clone() + cab.clone() * cv.clone();
                            }
                        }
                    }
                }
            }
        }
    }

    pub fn map_field<L: Field>(&self, f: &impl Fn(&K) -> L) -> RankOneTerm<L> {
        RankOneTerm {
            coeff: f(&self.coeff),
            a: self.a.map_field(f),
            b: self.b.map_field(f),
            c: self.c.map_field(f),
        }
    }
}

/// The Z3 bracket: the orbit {t, rho(t), rho^2(t)} of a term under the
/// cyclic factor shift.
pub fn z3_bracket<K: Field>(term: &RankOneTerm<K>) -> [RankOneTerm<K>; 3] {
    let r1 = term.rotated();
    let r2 = r1.rotated();
    [term.clone(), r1, r2]
}

/// An ordered list of rank-one terms over one field and one dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition<K: Field> {
    n: usize,
    terms: Vec<RankOneTerm<K>>,
}

impl<K: Field> Decomposition<K> {
    pub fn new(n: usize, terms: Vec<RankOneTerm<K>>) -> Result<Self> {
        for t in &terms {
            if t.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: t.n(),
                });
            }
        }
        Ok(Decomposition { n, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field_kind(&self) -> FieldKind {
        K::KIND
    }

    pub fn terms(&self) -> &[RankOneTerm<K>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Dense sum of all rank-one summands.
    pub fn expand(&self) -> Tensor3<K> {
        let mut out = Tensor3::zero(self.n);
        for t in &self.terms {
            t.expand_into(&mut out);
        }
        out
    }

    /// Compares the expansion against `matmul_tensor(n)` entrywise.
    pub fn verify_equals_matmul(&self) -> VerifyReport<K> {
        let expanded = self.expand();
        let target = matmul_tensor::<K>(self.n);
        let mismatch = expanded.first_mismatch(&target);
        VerifyReport {
            term_count: self.terms.len(),
            ok: mismatch.is_none(),
            mismatch,
        }
    }

    /// Multiset equality of scale-canonicalized terms.
    pub fn set_equal(&self, other: &Decomposition<K>) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut lhs = self
            .terms
            .iter()
            .map(RankOneTerm::canonicalize)
            .collect::<Result<Vec<_>>>()?;
        let mut rhs = other
            .terms
            .iter()
            .map(RankOneTerm::canonicalize)
            .collect::<Result<Vec<_>>>()?;
        lhs.sort();
        rhs.sort();
        Ok(lhs == rhs)
    }

    /// Partition of the term indices by unordered rank triple, with
    /// per-factor nilpotency flags.
    pub fn rank_triple_partition(&self) -> RankPartition {
        let mut classes: BTreeMap<[usize; 3], Vec<usize>> = BTreeMap::new();
        let mut term_triples = Vec::with_capacity(self.terms.len());
        let mut nilpotent = Vec::with_capacity(self.terms.len());
        for (i, t) in self.terms.iter().enumerate() {
            let triple = t.unordered_rank_triple();
            classes.entry(triple).or_default().push(i);
            term_triples.push(triple);
            nilpotent.push([t.a.is_nilpotent(), t.b.is_nilpotent(), t.c.is_nilpotent()]);
        }
        RankPartition {
            classes,
            term_triples,
            nilpotent,
        }
    }

    /// Projective point configurations carried by the rank-(1,1,1) terms.
    pub fn point_configuration(&self) -> PointConfiguration<K> {
        let mut config = PointConfiguration::empty();
        for t in &self.terms {
            if t.unordered_rank_triple() != [1, 1, 1] {
                continue;
            }
            // Factor matrices store M[dual index][point index], so the
            // columns span the dual point and the rows span the point.
            if let Some((phi, x)) = split_rank_one(&t.a) {
                config.u_star.push(phi);
                config.v.push(x);
            }
            if let Some((phi, x)) = split_rank_one(&t.b) {
                config.v_star.push(phi);
                config.w.push(x);
            }
            if let Some((phi, x)) = split_rank_one(&t.c) {
                config.w_star.push(phi);
                config.u.push(x);
            }
        }
        config.dedup_and_sort();
        config
    }

    pub fn map_field<L: Field>(&self, f: &impl Fn(&K) -> L) -> Decomposition<L> {
        Decomposition {
            n: self.n,
            terms: self.terms.iter().map(|t| t.map_field(f)).collect(),
        }
    }
}

/// Splits a rank-one matrix `M[r][c] = phi_r * x_c` into its dual point
/// `phi` and point `x`, both scaled so the first nonzero coordinate is one.
fn split_rank_one<K: Field>(m: &Mat<K>) -> Option<(Vec<K>, Vec<K>)> {
    let n = m.n();
    let (r0, c0, _) = m.leading_entry()?;
    let phi: Vec<K> = (0..n).map(|r| m.get(r, c0).clone()).collect();
    let x: Vec<K> = (0..n).map(|c| m.get(r0, c).clone()).collect();
    Some((normalize_projective(phi), normalize_projective(x)))
}

fn normalize_projective<K: Field>(v: Vec<K>) -> Vec<K> {
    let lead = v.iter().find(|e| !e.is_zero());
    match lead {
        None => v,
        Some(l) => {
            let inv = l.inverse().expect("leading coordinate is nonzero");
            v.into_iter().map(|e| e * inv.clone()).collect()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport<K: Field> {
    pub ok: bool,
    pub term_count: usize,
    pub mismatch: Option<Mismatch<K>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch<K: Field> {
    pub index: [(usize, usize); 3],
    pub found: K,
    pub expected: K,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankPartition {
    /// unordered rank triple -> indices of the terms in that class
    pub classes: BTreeMap<[usize; 3], Vec<usize>>,
    /// unordered rank triple per term, in term order
    pub term_triples: Vec<[usize; 3]>,
    /// per-term nilpotency flags for the (A, B, C) factors
    pub nilpotent: Vec<[bool; 3]>,
}

/// Deduplicated projective points on the six lines P(U), P(U*), ..., P(W*).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration<K: Field> {
    pub u: Vec<Vec<K>>,
    pub u_star: Vec<Vec<K>>,
    pub v: Vec<Vec<K>>,
    pub v_star: Vec<Vec<K>>,
    pub w: Vec<Vec<K>>,
    pub w_star: Vec<Vec<K>>,
}

impl<K: Field> PointConfiguration<K> {
    fn empty() -> Self {
        PointConfiguration {
            u: Vec::new(),
            u_star: Vec::new(),
            v: Vec::new(),
            v_star: Vec::new(),
            w: Vec::new(),
            w_star: Vec::new(),
        }
    }

    fn dedup_and_sort(&mut self) {
        for set in [
            &mut self.u,
            &mut self.u_star,
            &mut self.v,
            &mut self.v_star,
            &mut self.w,
            &mut self.w_star,
        ] {
            set.sort();
            set.dedup();
        }
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
            && self.u_star.is_empty()
            && self.v.is_empty()
            && self.v_star.is_empty()
            && self.w.is_empty()
            && self.w_star.is_empty()
    }
}

/// Dense order-3 tensor of shape n^2 x n^2 x n^2, indexed by three matrix
/// index pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3<K: Field> {
    n: usize,
    entries: Vec<K>,
}

impl<K: Field> Tensor3<K> {
    pub fn zero(n: usize) -> Self {
        Tensor3 {
            n,
            entries: vec![K::zero(); n * n * n * n * n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index(&self, a: (usize, usize), b: (usize, usize), c: (usize, usize)) -> usize {
        let n = self.n;
        let pa = a.0 * n + a.1;
        let pb = b.0 * n + b.1;
        let pc = c.0 * n + c.1;
        (pa * n * n + pb) * n * n + pc
    }

    pub fn get(&self, a: (usize, usize), b: (usize, usize), c: (usize, usize)) -> &K {
        &self.entries[self.index(a, b, c)]
    }

    pub fn set(&mut self, a: (usize, usize), b: (usize, usize), c: (usize, usize), value: K) {
        let idx = self.index(a, b, c);
        self.entries[idx] = value;
    }

    pub fn flat(&self) -> &[K] {
        &self.entries
    }

    pub fn from_flat(n: usize, entries: Vec<K>) -> Result<Self> {
        if entries.len() != n * n * n * n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n * n * n * n,
                got: entries.len(),
            });
        }
        Ok(Tensor3 { n, entries })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(K::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Tensor3 {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Tensor3 {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, factor: &K) -> Self {
        Tensor3 {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|a| a.clone() * factor.clone())
                .collect(),
        }
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn first_mismatch(&self, other: &Self) -> Option<Mismatch<K>> {
        assert_eq!(self.n, other.n);
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        for p in 0..n {
                            for q in 0..n {
                                let found = self.get((i, j), (k, l), (p, q));
                                let expected = other.get((i, j), (k, l), (p, q));
                                if found != expected {
                                    return Some(Mismatch {
                                        index: [(i, j), (k, l), (p, q)],
                                        found: found.clone(),
                                        expected: expected.clone(),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Full contraction against three matrices; on `matmul_tensor(n)` this
    /// is trace(XYZ).
    pub fn contract(&self, x: &Mat<K>, y: &Mat<K>, z: &Mat<K>) -> K {
        let n = self.n;
        let mut acc = K::zero();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        for p in 0..n {
                            for q in 0..n {
                                let t = self.get((i, j), (k, l), (p, q));
                                if t.is_zero() {
                                    continue;
                                }
                                acc = acc
                                    + t.clone()
                                        * x.get(i, j).clone()
                                        * y.get(k, l).clone()
                                        * z.get(p, q).clone();
                            }
                        }
                    }
                }
            }
        }
        acc
    }

    /// Linear extension of the cyclic factor shift (a,b,c) -> (b,c,a):
    /// new entry at (x, y, z) is the old entry at (z, x, y).
    pub fn rotated(&self) -> Self {
        let n = self.n;
        let mut out = Tensor3::zero(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        for p in 0..n {
                            for q in 0..n {
                                let v = self.get((p, q), (i, j), (k, l)).clone();
                                out.set((i, j), (k, l), (p, q), v);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Linear extension of the transpose reflection
    /// (a,b,c) -> (a^T, c^T, b^T).
    pub fn reflected(&self) -> Self {
        let n = self.n;
        let mut out = Tensor3::zero(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        for p in 0..n {
                            for q in 0..n {
                                let v = self.get((j, i), (q, p), (l, k)).clone();
                                out.set((i, j), (k, l), (p, q), v);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Applies the linear map m -> L m R to one tensor slot
    /// (0 = A, 1 = B, 2 = C).
    pub fn slot_map(&self, slot: usize, left: &Mat<K>, right: &Mat<K>) -> Self {
        let n = self.n;
        assert!(slot < 3);
        assert_eq!(left.n(), n);
        assert_eq!(right.n(), n);
        let mut out: Tensor3<K> = Tensor3::zero(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        for p in 0..n {
                            for q in 0..n {
                                let v = self.get((i, j), (k, l), (p, q));
                                if v.is_zero() {
                                    continue;
                                }
                                // distribute the slot pair through L . R
                                for s in 0..n {
                                    for t in 0..n {
                                        let (ls, rt) = match slot {
                                            0 => (left.get(s, i), right.get(j, t)),
                                            1 => (left.get(s, k), right.get(l, t)),
                                            _ => (left.get(s, p), right.get(q, t)),
                                        };
                                        if ls.is_zero() || rt.is_zero() {
                                            continue;
                                        }
                                        let w = v.clone() * ls.clone() * rt.clone();
                                        let idx = match slot {
                                            0 => self.index((s, t), (k, l), (p, q)),
                                            1 => self.index((i, j), (s, t), (p, q)),
                                            _ => self.index((i, j), (k, l), (s, t)),
                                        };
                                        out.entries[idx] = out.entries[idx].clone() + w;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn map_field<L: Field>(&self, f: &impl Fn(&K) -> L) -> Tensor3<L> {
        Tensor3 {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

/// The matrix multiplication tensor: entry ((i,j),(k,l),(p,q)) is one iff
/// j = k, l = p, q = i.
pub fn matmul_tensor<K: Field>(n: usize) -> Tensor3<K> {
    let mut t = Tensor3::zero(n);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                t.set((i, j), (j, l), (l, i), K::one());
            }
        }
    }
    t
}
