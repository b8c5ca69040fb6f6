//! Invariant subspaces via the group-averaging (Reynolds) projector, and the
//! S3 character theory reproducing the isotypic decompositions.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::perm::Perm3;
use crate::scalar::{Field, Rational};
use crate::symmetry::{FiniteSymmetryGroup, SymmetryElement};
use crate::tensor::{Mat, Tensor3};

/// A finite group together with the matrix of each element acting on the
/// n^6-dimensional tensor space (64-dimensional for n = 2), columns indexed
/// by the standard basis tensors.
#[derive(Debug, Clone)]
pub struct GroupLinearization<K: Field> {
    n: usize,
    dim: usize,
    operators: Vec<Vec<Vec<K>>>,
}

fn basis_tensor<K: Field>(n: usize, flat: usize) -> Tensor3<K> {
    let mut entries = vec![K::zero(); n * n * n * n * n * n];
    entries[flat] = K::one();
    Tensor3::from_flat(n, entries).expect("length matches")
}

/// Matrix of one element on the tensor space.
pub fn tensor_operator<K: Field>(g: &SymmetryElement<K>) -> Vec<Vec<K>> {
    let n = g.n();
    let dim = n * n * n * n * n * n;
    let mut columns = Vec::with_capacity(dim);
    for j in 0..dim {
        let image = g.apply_tensor(&basis_tensor(n, j));
        columns.push(image.flat().to_vec());
    }
    // transpose columns into row-major storage
    let mut rows = vec![vec![K::zero(); dim]; dim];
    for (j, col) in columns.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            rows[i][j] = v.clone();
        }
    }
    rows
}

impl<K: Field> GroupLinearization<K> {
    /// Builds all operators and checks the homomorphism property on the
    /// identity (full multiplicativity is exercised by tests).
    pub fn new(group: &FiniteSymmetryGroup<K>) -> Result<Self> {
        if group.order() == 0 {
            return Err(Error::EmptyGroup);
        }
        let n = group.n();
        let dim = n * n * n * n * n * n;
        let operators: Vec<_> = group.elements().iter().map(tensor_operator).collect();
        for (e, op) in group.elements().iter().zip(&operators) {
            if e.is_identity_action() {
                let mut is_id = true;
                for (i, row) in op.iter().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        let want = if i == j { K::one() } else { K::zero() };
                        if *v != want {
                            is_id = false;
                        }
                    }
                }
                if !is_id {
                    return Err(Error::InvalidRepresentation(
                        "identity element does not linearize to the identity matrix".to_string(),
                    ));
                }
            }
        }
        Ok(GroupLinearization { n, dim, operators })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn operators(&self) -> &[Vec<Vec<K>>] {
        &self.operators
    }

    /// The averaging projector (1/|G|) sum_g M_g.
    pub fn reynolds_projector(&self) -> Vec<Vec<K>> {
        let order = K::from_int(self.operators.len() as i64);
        let inv = order.inverse().expect("group order is nonzero in the field");
        let mut sum = vec![vec![K::zero(); self.dim]; self.dim];
        for op in &self.operators {
            for (i, row) in op.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        sum[i][j] = sum[i][j].clone() + v.clone();
                    }
                }
            }
        }
        for row in sum.iter_mut() {
            for v in row.iter_mut() {
                *v = v.clone() * inv.clone();
            }
        }
        sum
    }
}

fn trace<K: Field>(m: &[Vec<K>]) -> K {
    m.iter()
        .enumerate()
        .fold(K::zero(), |acc, (i, row)| acc + row[i].clone())
}

/// Dimension of the invariant subspace: the exact trace of the Reynolds
/// projector, cross-checked against its rank.
pub fn invariant_dimension<K: Field>(group: &FiniteSymmetryGroup<K>) -> Result<usize> {
    let lin = GroupLinearization::new(group)?;
    let p = lin.reynolds_projector();
    let t = trace(&p);
    let r = linalg::rank(&p);
    if t != K::from_int(r as i64) {
        return Err(Error::InvalidRepresentation(format!(
            "projector trace {t:?} disagrees with rank {r}"
        )));
    }
    Ok(r)
}

/// A basis of the invariant subspace: the row-reduced image of the projector
/// applied to the standard basis. Every basis tensor is fixed by every group
/// element.
pub fn invariant_basis<K: Field>(group: &FiniteSymmetryGroup<K>) -> Result<Vec<Tensor3<K>>> {
    let lin = GroupLinearization::new(group)?;
    let p = lin.reynolds_projector();
    let dim = lin.dim();
    // Rows of P^T are the images of the basis tensors; row-reduce them.
    let images: Vec<Vec<K>> = (0..dim)
        .map(|j| (0..dim).map(|i| p[i][j].clone()).collect())
        .collect();
    let (reduced, pivots) = linalg::rref(images);
    let basis = reduced
        .into_iter()
        .take(pivots.len())
        .map(|row| Tensor3::from_flat(lin.n(), row).expect("length matches"))
        .collect();
    Ok(basis)
}

/// Exact coordinates of a tensor in a given linearly independent basis.
pub fn coordinates_in_basis<K: Field>(
    tensor: &Tensor3<K>,
    basis: &[Tensor3<K>],
) -> Result<Vec<K>> {
    if basis.is_empty() {
        return Err(Error::DependentBasis);
    }
    let columns: Vec<Vec<K>> = basis.iter().map(|b| b.flat().to_vec()).collect();
    if linalg::rank(&transpose_rows(&columns)) != basis.len() {
        return Err(Error::DependentBasis);
    }
    linalg::solve_in_column_span(&columns, tensor.flat()).ok_or(Error::NotInSpan)
}

fn transpose_rows<K: Field>(cols: &[Vec<K>]) -> Vec<Vec<K>> {
    let dim = cols[0].len();
    (0..dim)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect()
}

// --- S3 representation theory --------------------------------------------

/// Labels for the three irreducible S3 representations, indexed by the
/// partitions [3] (trivial), [21] (standard) and [1^3] (sign).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Irrep {
    Trivial,
    Standard,
    Sign,
}

/// Character table rows on the classes (identity, transpositions, 3-cycles).
pub fn character_row(irrep: Irrep) -> [i64; 3] {
    match irrep {
        Irrep::Trivial => [1, 1, 1],
        Irrep::Standard => [2, 0, -1],
        Irrep::Sign => [1, -1, 1],
    }
}

pub const CLASS_SIZES: [i64; 3] = [1, 3, 2];

/// A rational matrix representation of S3: one matrix per element of
/// [`Perm3::all`], checked to be a homomorphism at construction.
#[derive(Debug, Clone)]
pub struct S3Rep {
    mats: Vec<Mat<Rational>>,
}

impl S3Rep {
    pub fn new(mats: Vec<Mat<Rational>>) -> Result<Self> {
        if mats.len() != 6 {
            return Err(Error::InvalidRepresentation(format!(
                "expected 6 matrices, got {}",
                mats.len()
            )));
        }
        let rep = S3Rep { mats };
        let all = Perm3::all();
        for a in &all {
            for b in &all {
                let lhs = rep.matrix(&a.compose(b));
                let rhs = rep.matrix(a).matmul(rep.matrix(b));
                if *lhs != rhs {
                    return Err(Error::InvalidRepresentation(
                        "matrices do not compose with the group law".to_string(),
                    ));
                }
            }
        }
        Ok(rep)
    }

    pub fn matrix(&self, p: &Perm3) -> &Mat<Rational> {
        &self.mats[p.index()]
    }

    pub fn dim(&self) -> usize {
        self.mats[0].n()
    }

    /// Class function values on (identity, transpositions, 3-cycles); the
    /// trace is constant on classes for a homomorphism.
    pub fn character(&self) -> [Rational; 3] {
        let mut chi = [Rational::zero(), Rational::zero(), Rational::zero()];
        for p in Perm3::all() {
            chi[p.class()] = self.matrix(&p).trace();
        }
        chi
    }

    pub fn trivial() -> Self {
        S3Rep::new(vec![Mat::identity(1); 6]).expect("constant maps form a representation")
    }

    pub fn sign() -> Self {
        let mats = Perm3::all()
            .iter()
            .map(|p| {
                let v = if p.is_odd() { -1 } else { 1 };
                Mat::from_int_rows(&[vec![v]]).expect("1x1 literal")
            })
            .collect();
        S3Rep::new(mats).expect("parity is a homomorphism")
    }

    /// The 2-dimensional standard representation, realized by the matrices
    /// permuting the zero-sum representatives (e1, e2, -e1-e2).
    pub fn standard() -> Self {
        let mats = Perm3::all()
            .iter()
            .map(permutation_matrix_canonical)
            .collect();
        S3Rep::new(mats).expect("point permutations compose exactly")
    }

    /// The 4-dimensional representation on 2x2 matrices by conjugation with
    /// the point-permutation matrices: the module U* (x) U of a diagonal S3
    /// built on a zero-sum triple.
    pub fn matrix_conjugation() -> Self {
        let mats = Perm3::all()
            .iter()
            .map(|p| {
                let g = permutation_matrix_canonical(p);
                let g_inv = g.inverse().expect("permutation matrices are invertible");
                // operator m -> g m g^{-1} on the 4-dimensional matrix space
                let mut rows = vec![vec![Rational::zero(); 4]; 4];
                for i in 0..2 {
                    for j in 0..2 {
                        let mut unit = Mat::<Rational>::zero(2);
                        unit.set(i, j, Rational::one());
                        let image = g.matmul(&unit).matmul(&g_inv);
                        for r in 0..2 {
                            for c in 0..2 {
                                rows[r * 2 + c][i * 2 + j] = image.get(r, c).clone();
                            }
                        }
                    }
                }
                Mat::from_rows(rows).expect("4x4 by construction")
            })
            .collect();
        S3Rep::new(mats).expect("conjugation is a homomorphism")
    }
}

fn permutation_matrix_canonical(p: &Perm3) -> Mat<Rational> {
    let points: [Vec<Rational>; 3] = [
        vec![Rational::one(), Rational::zero()],
        vec![Rational::zero(), Rational::one()],
        vec![-Rational::one(), -Rational::one()],
    ];
    let col = |v: &Vec<Rational>| [v[0].clone(), v[1].clone()];
    let c0 = col(&points[p.apply(0)]);
    let c1 = col(&points[p.apply(1)]);
    Mat::from_rows(vec![
        vec![c0[0].clone(), c1[0].clone()],
        vec![c0[1].clone(), c1[1].clone()],
    ])
    .expect("2x2 literal")
}

/// Which induced power to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerKind {
    Symmetric,
    Exterior,
    Full,
}

/// The induced representation on the k-th symmetric, exterior or full tensor
/// power. Supported for k = 2 and k = 3.
pub fn rep_power(rep: &S3Rep, k: usize, kind: PowerKind) -> Result<S3Rep> {
    if !(2..=3).contains(&k) {
        return Err(Error::UnsupportedPower(k));
    }
    let mats = Perm3::all()
        .iter()
        .map(|p| power_matrix(rep.matrix(p), k, kind))
        .collect::<Result<Vec<_>>>()?;
    S3Rep::new(mats)
}

fn multisets(d: usize, k: usize) -> Vec<Vec<usize>> {
    // nondecreasing index tuples of length k over 0..d
    fn go(d: usize, k: usize, start: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        for i in start..d {
            prefix.push(i);
            go(d, k - 1, i, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, k, 0, &mut Vec::new(), &mut out);
    out
}

fn subsets(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(d: usize, k: usize, start: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        for i in start..d {
            prefix.push(i);
            go(d, k - 1, i + 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, k, 0, &mut Vec::new(), &mut out);
    out
}

fn power_matrix(m: &Mat<Rational>, k: usize, kind: PowerKind) -> Result<Mat<Rational>> {
    let d = m.n();
    match kind {
        PowerKind::Full => {
            let dim = d.pow(k as u32);
            let mut rows = vec![vec![Rational::zero(); dim]; dim];
            let unflatten = |mut idx: usize| -> Vec<usize> {
                let mut v = vec![0; k];
                for slot in (0..k).rev() {
                    v[slot] = idx % d;
                    idx /= d;
                }
                v
            };
            for (col, col_idx) in (0..dim).map(|c| (c, unflatten(c))) {
                for (row, row_idx) in (0..dim).map(|r| (r, unflatten(r))) {
                    let mut prod = Rational::one();
                    for s in 0..k {
                        prod *= m.get(row_idx[s], col_idx[s]).clone();
                    }
                    rows[row][col] = prod;
                }
            }
            Mat::from_rows(rows).map_err(|_| Error::UnsupportedPower(k))
        }
        PowerKind::Symmetric => {
            let basis = multisets(d, k);
            let pos: BTreeMap<Vec<usize>, usize> = basis
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, b)| (b, i))
                .collect();
            let dim = basis.len();
            let mut rows = vec![vec![Rational::zero(); dim]; dim];
            for (col, mono) in basis.iter().enumerate() {
                // expand the product of the images of the chosen coordinates
                let mut poly: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
                poly.insert(Vec::new(), Rational::one());
                for &i in mono {
                    let mut next: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
                    for (partial, coeff) in &poly {
                        for r in 0..d {
                            let entry = m.get(r, i);
                            if entry.is_zero() {
                                continue;
                            }
                            let mut key = partial.clone();
                            key.push(r);
                            key.sort_unstable();
                            let add = coeff.clone() * entry.clone();
                            *next.entry(key).or_insert_with(Rational::zero) += add;
                        }
                    }
                    poly = next;
                }
                for (key, coeff) in poly {
                    rows[pos[&key]][col] = coeff;
                }
            }
            Mat::from_rows(rows).map_err(|_| Error::UnsupportedPower(k))
        }
        PowerKind::Exterior => {
            let basis = subsets(d, k);
            let dim = basis.len();
            if dim == 0 {
                return Err(Error::UnsupportedPower(k));
            }
            let mut rows = vec![vec![Rational::zero(); dim]; dim];
            for (col, cols_idx) in basis.iter().enumerate() {
                for (row, rows_idx) in basis.iter().enumerate() {
                    // minor determinant
                    let sub: Vec<Vec<Rational>> = rows_idx
                        .iter()
                        .map(|&r| cols_idx.iter().map(|&c| m.get(r, c).clone()).collect())
                        .collect();
                    rows[row][col] = linalg::determinant(&sub);
                }
            }
            Mat::from_rows(rows).map_err(|_| Error::UnsupportedPower(k))
        }
    }
}

/// Isotypic multiplicities (m_[3], m_[21], m_[1^3]) via character inner
/// products with the S3 character table.
pub fn isotypic_multiplicities(rep: &S3Rep) -> Result<[usize; 3]> {
    let chi = rep.character();
    let mut out = [0usize; 3];
    for (slot, irrep) in [Irrep::Trivial, Irrep::Standard, Irrep::Sign]
        .into_iter()
        .enumerate()
    {
        let row = character_row(irrep);
        let mut acc = Rational::zero();
        for class in 0..3 {
            acc += chi[class].clone()
                * Rational::from_integer(row[class].into())
                * Rational::from_integer(CLASS_SIZES[class].into());
        }
        let m = acc / Rational::from_integer(6.into());
        if !m.is_integer() || m < Rational::zero() {
            return Err(Error::InvalidRepresentation(format!(
                "non-integer multiplicity {m}"
            )));
        }
        out[slot] = num_traits::ToPrimitive::to_usize(&m.to_integer()).ok_or_else(|| {
            Error::InvalidRepresentation("multiplicity out of range".to_string())
        })?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn character_table_rows_are_orthonormal() {
        // class-weighted inner product, computed rather than assumed
        let irreps = [Irrep::Trivial, Irrep::Standard, Irrep::Sign];
        for a in irreps {
            for b in irreps {
                let ra = character_row(a);
                let rb = character_row(b);
                let mut acc = Rational::zero();
                for class in 0..3 {
                    acc += int(ra[class]) * int(rb[class]) * int(CLASS_SIZES[class]);
                }
                let want = if a == b { int(6) } else { int(0) };
                assert_eq!(acc, want);
            }
        }
    }

    #[test]
    fn standard_rep_has_the_21_character() {
        let rep = S3Rep::standard();
        assert_eq!(rep.character(), [int(2), int(0), int(-1)]);
    }

    #[test]
    fn conjugation_rep_splits_into_all_three_irreps() {
        let rep = S3Rep::matrix_conjugation();
        assert_eq!(rep.character(), [int(4), int(0), int(1)]);
        assert_eq!(isotypic_multiplicities(&rep).unwrap(), [1, 1, 1]);
    }

    #[test]
    fn symmetric_square_of_standard() {
        let rep = S3Rep::standard();
        let s2 = rep_power(&rep, 2, PowerKind::Symmetric).unwrap();
        assert_eq!(s2.dim(), 3);
        assert_eq!(isotypic_multiplicities(&s2).unwrap(), [1, 1, 0]);
    }

    #[test]
    fn exterior_square_of_standard_is_the_sign() {
        let rep = S3Rep::standard();
        let l2 = rep_power(&rep, 2, PowerKind::Exterior).unwrap();
        assert_eq!(l2.dim(), 1);
        // character (1, -1, 1) from the exterior-square character formula
        assert_eq!(l2.character(), [int(1), int(-1), int(1)]);
        assert_eq!(isotypic_multiplicities(&l2).unwrap(), [0, 0, 1]);
    }

    #[test]
    fn symmetric_and_exterior_characters_satisfy_the_power_formulas() {
        // chi_{S^2}(g) = (chi(g)^2 + chi(g^2))/2 and
        // chi_{L^2}(g) = (chi(g)^2 - chi(g^2))/2 for the 4-dim rep.
        let rep = S3Rep::matrix_conjugation();
        let s2 = rep_power(&rep, 2, PowerKind::Symmetric).unwrap();
        let l2 = rep_power(&rep, 2, PowerKind::Exterior).unwrap();
        for p in Perm3::all() {
            let chi_g = rep.matrix(&p).trace();
            let chi_g2 = rep.matrix(&p.compose(&p)).trace();
            let s = (chi_g.clone() * chi_g.clone() + chi_g2.clone()) * rat(1, 2);
            let l = (chi_g.clone() * chi_g - chi_g2) * rat(1, 2);
            assert_eq!(s3_class_value(&s2, &p), s);
            assert_eq!(s3_class_value(&l2, &p), l);
        }
    }

    fn s3_class_value(rep: &S3Rep, p: &Perm3) -> Rational {
        rep.matrix(p).trace()
    }

    #[test]
    fn cubic_symmetric_power_of_standard() {
        let rep = S3Rep::standard();
        let s3 = rep_power(&rep, 3, PowerKind::Symmetric).unwrap();
        assert_eq!(s3.dim(), 4);
        assert_eq!(isotypic_multiplicities(&s3).unwrap(), [1, 1, 1]);
    }

    #[test]
    fn full_power_dimension() {
        let rep = S3Rep::standard();
        let t2 = rep_power(&rep, 2, PowerKind::Full).unwrap();
        assert_eq!(t2.dim(), 4);
        // [21] (x) [21] = [3] + [21] + [1^3]
        assert_eq!(isotypic_multiplicities(&t2).unwrap(), [1, 1, 1]);
    }

    #[test]
    fn unsupported_power_is_rejected() {
        let rep = S3Rep::standard();
        assert!(matches!(
            rep_power(&rep, 4, PowerKind::Full),
            Err(Error::UnsupportedPower(4))
        ));
    }

    #[test]
    fn trivial_summand_bookkeeping_of_the_cubic_powers() {
        // S^3 of the 4-dim module contains 4 trivial summands, the cube
        // exterior power exactly one; together they give the 5-dimensional
        // invariant space of the order-18 candidate.
        let rep = S3Rep::matrix_conjugation();
        let s3 = rep_power(&rep, 3, PowerKind::Symmetric).unwrap();
        let l3 = rep_power(&rep, 3, PowerKind::Exterior).unwrap();
        assert_eq!(isotypic_multiplicities(&s3).unwrap()[0], 4);
        assert_eq!(isotypic_multiplicities(&l3).unwrap()[0], 1);
    }
}
