//! Constructors for the named decompositions and the builtin finite symmetry
//! groups, plus the projective family parametrized by point triples.
//!
//! Every named decomposition is hard-coded from its displayed form so that
//! each display is independently testable against the expansion oracle.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::perm::Perm3;
use crate::scalar::{named_constant, Cyclotomic12, Field, FieldKind, NamedConstant, Rational};
use crate::symmetry::{FiniteSymmetryGroup, LinearTriple, SymmetryElement};
use crate::tensor::{z3_bracket, Decomposition, Mat, RankOneTerm};

fn m<K: Field>(rows: [[i64; 2]; 2]) -> Mat<K> {
    Mat::from_int_rows(&[rows[0].to_vec(), rows[1].to_vec()]).expect("2x2 literal")
}

fn term<K: Field>(coeff: i64, a: [[i64; 2]; 2], b: [[i64; 2]; 2], c: [[i64; 2]; 2]) -> RankOneTerm<K> {
    RankOneTerm::new(K::from_int(coeff), m(a), m(b), m(c)).expect("nonzero literals")
}

/// Classical seven-term decomposition. The factor matrices are the
/// multiplication-selector matrices of the seven products; term order is the
/// display order: the identity term, the first cyclic triple, the second
/// cyclic triple.
pub fn strassen_classical<K: Field>() -> Decomposition<K> {
    let terms = vec![
        term(1, [[1, 0], [0, 1]], [[1, 0], [0, 1]], [[1, 0], [0, 1]]),
        term(1, [[1, 0], [0, 0]], [[0, 1], [0, -1]], [[0, 0], [1, 1]]),
        term(1, [[0, 0], [1, 1]], [[1, 0], [0, 0]], [[0, 1], [0, -1]]),
        term(1, [[0, 1], [0, -1]], [[0, 0], [1, 1]], [[1, 0], [0, 0]]),
        term(1, [[0, 0], [0, 1]], [[-1, 0], [1, 0]], [[1, 1], [0, 0]]),
        term(1, [[1, 1], [0, 0]], [[0, 0], [0, 1]], [[-1, 0], [1, 0]]),
        term(1, [[-1, 0], [1, 0]], [[1, 1], [0, 0]], [[0, 0], [0, 1]]),
    ];
    Decomposition::new(2, terms).expect("catalog data is well formed")
}

/// The n^3-term standard algorithm E_ij (x) E_jk (x) E_ki.
pub fn standard_algorithm<K: Field>(n: usize) -> Decomposition<K> {
    let mut terms = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                terms.push(
                    RankOneTerm::new(
                        K::one(),
                        Mat::unit(n, i, j),
                        Mat::unit(n, j, k),
                        Mat::unit(n, k, i),
                    )
                    .expect("matrix units are nonzero"),
                );
            }
        }
    }
    Decomposition::new(n, terms).expect("catalog data is well formed")
}

/// The change-of-basis form of the seven-term decomposition: four cube terms
/// (the first three-cycle matrix and three rank-one cubes) plus one bracket
/// orbit of nilpotent factors. Term order: the cube terms in display order,
/// then the bracket orbit.
pub fn strassen_basis_changed<K: Field>() -> Decomposition<K> {
    let mut terms = vec![
        term(1, [[0, -1], [1, -1]], [[0, -1], [1, -1]], [[0, -1], [1, -1]]),
        term(1, [[1, 0], [0, 0]], [[1, 0], [0, 0]], [[1, 0], [0, 0]]),
        term(1, [[0, 1], [0, 1]], [[0, 1], [0, 1]], [[0, 1], [0, 1]]),
        term(1, [[0, 0], [-1, 1]], [[0, 0], [-1, 1]], [[0, 0], [-1, 1]]),
    ];
    let seed = term(1, [[0, 1], [0, 0]], [[0, 0], [1, 0]], [[1, -1], [1, -1]]);
    terms.extend(z3_bracket(&seed));
    Decomposition::new(2, terms).expect("catalog data is well formed")
}

/// A change-of-basis triple that carries the classical form to
/// [`strassen_basis_changed`] (pinned computationally; applying it as a pure
/// linear symmetry maps the term sets onto each other). The unique
/// rank-(2,2,2) term lands on the three-cycle cube and the point
/// configurations match frame to frame.
pub fn basis_change_triple<K: Field>() -> LinearTriple<K> {
    LinearTriple::new(
        m([[1, 0], [0, -1]]),
        m([[0, -1], [-1, 1]]),
        m([[-1, 1], [1, 0]]),
    )
    .expect("the change-of-basis matrices are invertible")
}

/// Three pairwise distinct projective points with representatives summing to
/// zero, together with the dual covectors normalized by
/// dual_j(point_j) = 0, dual_j(point_{j-1}) = 1, dual_j(point_{j+1}) = -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointTriple<K: Field> {
    points: [Vec<K>; 3],
    duals: [Vec<K>; 3],
}

impl<K: Field> PointTriple<K> {
    pub fn points(&self) -> &[Vec<K>; 3] {
        &self.points
    }

    pub fn duals(&self) -> &[Vec<K>; 3] {
        &self.duals
    }

    /// The triple (e1, e2, -e1-e2).
    pub fn canonical() -> Self {
        let one = K::one;
        let zero = K::zero;
        normalize_triple(
            &[one(), zero()],
            &[zero(), one()],
            &[-one(), -one()],
        )
        .expect("the canonical triple is nondegenerate")
    }

    /// Rescales all representatives by one global nonzero scale; duals scale
    /// inversely so the pairing normalization is preserved.
    pub fn rescaled(&self, lambda: &K) -> Result<Self> {
        let inv = lambda.inverse().ok_or(Error::DivisionByZero)?;
        let scale = |v: &Vec<K>, s: &K| -> Vec<K> {
            v.iter().map(|e| e.clone() * s.clone()).collect()
        };
        Ok(PointTriple {
            points: [
                scale(&self.points[0], lambda),
                scale(&self.points[1], lambda),
                scale(&self.points[2], lambda),
            ],
            duals: [
                scale(&self.duals[0], &inv),
                scale(&self.duals[1], &inv),
                scale(&self.duals[2], &inv),
            ],
        })
    }
}

fn pairing<K: Field>(dual: &[K], point: &[K]) -> K {
    dual.iter()
        .zip(point)
        .fold(K::zero(), |acc, (d, p)| acc + d.clone() * p.clone())
}

/// Rescales representatives of three distinct projective points so they sum
/// to zero (keeping the first representative as given), and computes the
/// normalized dual covectors.
pub fn normalize_triple<K: Field>(p1: &[K], p2: &[K], p3: &[K]) -> Result<PointTriple<K>> {
    for p in [p1, p2, p3] {
        if p.len() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: p.len(),
            });
        }
        if p.iter().all(K::is_zero) {
            return Err(Error::DegenerateConfiguration(
                "zero vector is not a projective point".to_string(),
            ));
        }
    }
    let cross = |a: &[K], b: &[K]| a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone();
    if cross(p1, p2).is_zero() || cross(p1, p3).is_zero() || cross(p2, p3).is_zero() {
        return Err(Error::DegenerateConfiguration(
            "points must be pairwise distinct".to_string(),
        ));
    }
    // Solve lambda2 * p2 + lambda3 * p3 = -p1.
    let cols = vec![p2.to_vec(), p3.to_vec()];
    let target: Vec<K> = p1.iter().map(|e| -e.clone()).collect();
    let lambdas = linalg::solve_in_column_span(&cols, &target).ok_or_else(|| {
        Error::DegenerateConfiguration("representatives do not span the plane".to_string())
    })?;
    let points = [
        p1.to_vec(),
        p2.iter().map(|e| e.clone() * lambdas[0].clone()).collect(),
        p3.iter().map(|e| e.clone() * lambdas[1].clone()).collect(),
    ];
    // dual_j vanishes on point_j and takes value one on point_{j-1}; the
    // value -1 on point_{j+1} then follows from the zero-sum relation.
    let mut duals: [Vec<K>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for j in 0..3 {
        let prev = (j + 2) % 3;
        let rows = [points[j].clone(), points[prev].clone()];
        let rhs_cols: Vec<Vec<K>> = vec![
            rows.iter().map(|r| r[0].clone()).collect(),
            rows.iter().map(|r| r[1].clone()).collect(),
        ];
        let dual = linalg::solve_in_column_span(&rhs_cols, &[K::zero(), K::one()])
            .ok_or_else(|| {
                Error::DegenerateConfiguration("dual system is singular".to_string())
            })?;
        duals[j] = dual;
    }
    let triple = PointTriple { points, duals };
    for j in 0..3 {
        let next = (j + 1) % 3;
        debug_assert!(pairing(&triple.duals[j], &triple.points[j]).is_zero());
        debug_assert_eq!(
            pairing(&triple.duals[j], &triple.points[next]),
            -K::one()
        );
    }
    Ok(triple)
}

/// Factor matrix of a point tensored with a dual covector, in the
/// covector-row orientation: M[r][c] = dual[r] * point[c].
fn point_dual_factor<K: Field>(point: &[K], dual: &[K]) -> Mat<K> {
    let n = point.len();
    let mut out = Mat::zero(n);
    for r in 0..n {
        for c in 0..n {
            out.set(r, c, dual[r].clone() * point[c].clone());
        }
    }
    out
}

/// The transposed (vector-row) orientation: M[r][c] = point[r] * dual[c].
/// The two displayed projective forms use opposite orientations; each is
/// pinned by its expansion oracle.
fn point_dual_factor_t<K: Field>(point: &[K], dual: &[K]) -> Mat<K> {
    point_dual_factor(point, dual).transpose()
}

/// Sum of covector-row point-dual factors with integer weights.
fn factor_from_pairs<K: Field>(pairs: &[(&[K], &[K], i64)]) -> Mat<K> {
    let n = pairs[0].0.len();
    let mut out = Mat::zero(n);
    for (point, dual, weight) in pairs {
        out = out.add(&point_dual_factor(point, dual).scale(&K::from_int(*weight)));
    }
    out
}

/// The projectively normalized seven-term decomposition for the given point
/// triples: the fixed term a0 (x) b0 (x) c0 (the canonical isomorphisms
/// determined by matching the triples) plus two bracket orbits carried by
/// the points. Output is invariant under a global representative rescale of
/// any input triple (the scale cancels across the three slots).
pub fn projective_strassen<K: Field>(
    tu: &PointTriple<K>,
    tv: &PointTriple<K>,
    tw: &PointTriple<K>,
) -> Decomposition<K> {
    // a0 = v_j (x) u^{(j+1)perp} - v_{j+1} (x) u^{j perp}, independent of j.
    let canonical_iso = |target: &PointTriple<K>, source: &PointTriple<K>| -> Mat<K> {
        factor_from_pairs(&[
            (&target.points()[0], &source.duals()[1], 1),
            (&target.points()[1], &source.duals()[0], -1),
        ])
    };
    let a0 = canonical_iso(tv, tu);
    let b0 = canonical_iso(tw, tv);
    let c0 = canonical_iso(tu, tw);
    let mut terms = vec![RankOneTerm::new(K::one(), a0, b0, c0)
        .expect("canonical isomorphisms are invertible")];
    // The bracket cycles the index patterns through the slots; each slot is
    // always rebuilt from its own pair of spaces, so the orbit is well
    // defined for independent triples.
    let indexed_term = |coeff: i64, idx: [(usize, usize); 3]| -> RankOneTerm<K> {
        RankOneTerm::new(
            K::from_int(coeff),
            point_dual_factor(&tv.points()[idx[0].0], &tu.duals()[idx[0].1]),
            point_dual_factor(&tw.points()[idx[1].0], &tv.duals()[idx[1].1]),
            point_dual_factor(&tu.points()[idx[2].0], &tw.duals()[idx[2].1]),
        )
        .expect("point-dual factors are nonzero")
    };
    let orbit = |coeff: i64, idx: [(usize, usize); 3]| -> [RankOneTerm<K>; 3] {
        [
            indexed_term(coeff, idx),
            indexed_term(coeff, [idx[1], idx[2], idx[0]]),
            indexed_term(coeff, [idx[2], idx[0], idx[1]]),
        ]
    };
    terms.extend(orbit(1, [(1, 0), (0, 2), (2, 1)]));
    terms.extend(orbit(-1, [(2, 0), (0, 1), (1, 2)]));
    Decomposition::new(2, terms).expect("catalog data is well formed")
}

/// [`projective_strassen`] at the canonical triples.
pub fn strassen_projective<K: Field>() -> Decomposition<K> {
    let t = PointTriple::canonical();
    projective_strassen(&t, &t, &t)
}

/// The change-of-basis form rebuilt from the projective objects (points and
/// normalized duals of the canonical triple) instead of standard-basis
/// coordinates. Term-by-term equal to [`strassen_basis_changed`], which is
/// exactly the hatted-basis correspondence (tested).
pub fn strassen_straxx<K: Field>() -> Decomposition<K> {
    let t: PointTriple<K> = PointTriple::canonical();
    let p = t.points();
    let d = t.duals();
    let one = K::one();
    let first_factor = point_dual_factor_t(&p[0], &d[0])
        .add(&point_dual_factor_t(&p[1], &d[2]).neg());
    let first = RankOneTerm::new(
        one.clone(),
        first_factor.clone(),
        first_factor.clone(),
        first_factor,
    )
    .expect("nonzero factor");
    let cube = |pi: usize, di: usize| -> RankOneTerm<K> {
        let f = point_dual_factor_t(&p[pi], &d[di]);
        RankOneTerm::new(K::one(), f.clone(), f.clone(), f).expect("nonzero factor")
    };
    let mut terms = vec![first, cube(0, 1), cube(2, 0), cube(1, 2)];
    let seed = RankOneTerm::new(
        -one,
        point_dual_factor_t(&p[0], &d[0]),
        point_dual_factor_t(&p[1], &d[1]),
        point_dual_factor_t(&p[2], &d[2]),
    )
    .expect("nonzero factor");
    terms.extend(z3_bracket(&seed));
    Decomposition::new(2, terms).expect("catalog data is well formed")
}

/// Sign convention for the cube root of unity in the diagonalized form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaConvention {
    /// omega = exp(-2*pi*i/3) = zeta_12^8
    ExpMinus,
    /// omega = exp(+2*pi*i/3) = zeta_12^4
    ExpPlus,
}

/// The convention under which the omega-form expands to the matrix
/// multiplication tensor (and satisfies a + b + c = 0); pinned by tests.
pub fn default_omega_convention() -> OmegaConvention {
    OmegaConvention::ExpMinus
}

/// The diagonalized seven-term decomposition over Q(zeta_12):
/// a^3 + b^3 + rho(b)^3 + rho^2(b)^3 + <c (x) rho(c) (x) rho^2(c)>, where
/// rho is conjugation by the diagonal matrix a.
pub fn strassen_omega(convention: OmegaConvention) -> Decomposition<Cyclotomic12> {
    let (a_mat, b_mat, c_mat) = omega_form_matrices(convention);
    let a_inv = a_mat.inverse().expect("a is diagonal with unit entries");
    let rho = |x: &Mat<Cyclotomic12>| a_mat.matmul(x).matmul(&a_inv);
    let cube = |x: &Mat<Cyclotomic12>| {
        RankOneTerm::new(Cyclotomic12::one(), x.clone(), x.clone(), x.clone())
            .expect("nonzero factor")
    };
    let rb = rho(&b_mat);
    let rrb = rho(&rb);
    let rc = rho(&c_mat);
    let rrc = rho(&rc);
    let mut terms = vec![cube(&a_mat), cube(&b_mat), cube(&rb), cube(&rrb)];
    let seed = RankOneTerm::new(Cyclotomic12::one(), c_mat, rc, rrc).expect("nonzero factor");
    terms.extend(z3_bracket(&seed));
    Decomposition::new(2, terms).expect("catalog data is well formed")
}

/// The three generator matrices (a, b, c) of the omega-form; they satisfy
/// a + b + c = 0 in the verifying convention.
pub fn omega_form_matrices(
    convention: OmegaConvention,
) -> (Mat<Cyclotomic12>, Mat<Cyclotomic12>, Mat<Cyclotomic12>) {
    let omega = match convention {
        OmegaConvention::ExpMinus => Cyclotomic12::zeta_pow(8),
        OmegaConvention::ExpPlus => Cyclotomic12::zeta_pow(4),
    };
    let omega2 = omega.clone() * omega.clone();
    let iota = named_constant(NamedConstant::Iota);
    let sigma = named_constant(NamedConstant::Sigma);
    let iota_bar = iota.conjugate();
    let sigma_bar = sigma.conjugate();
    let zero = Cyclotomic12::zero;
    let a = Mat::from_rows(vec![vec![omega, zero()], vec![zero(), omega2]])
        .expect("2x2 literal");
    let b = Mat::from_rows(vec![
        vec![sigma, iota_bar.clone()],
        vec![iota.clone(), sigma_bar],
    ])
    .expect("2x2 literal");
    let c = Mat::from_rows(vec![
        vec![iota.clone(), iota],
        vec![iota_bar.clone(), iota_bar],
    ])
    .expect("2x2 literal");
    (a, b, c)
}

/// Runtime-tagged decomposition, the unit of exchange for the CLI layer.
#[derive(Debug, Clone)]
pub enum AnyDecomposition {
    Rational(Decomposition<Rational>),
    Cyclotomic(Decomposition<Cyclotomic12>),
}

impl AnyDecomposition {
    pub fn field_kind(&self) -> FieldKind {
        match self {
            AnyDecomposition::Rational(_) => FieldKind::Rational,
            AnyDecomposition::Cyclotomic(_) => FieldKind::Cyclotomic12,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            AnyDecomposition::Rational(d) => d.n(),
            AnyDecomposition::Cyclotomic(d) => d.n(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnyDecomposition::Rational(d) => d.len(),
            AnyDecomposition::Cyclotomic(d) => d.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Embeds a rational decomposition into Q(zeta_12); cyclotomic input is
    /// returned unchanged.
    pub fn into_cyclotomic(self) -> Decomposition<Cyclotomic12> {
        match self {
            AnyDecomposition::Rational(d) => d.map_field(&Cyclotomic12::from_rational),
            AnyDecomposition::Cyclotomic(d) => d,
        }
    }
}

pub const DECOMPOSITION_NAMES: &[&str] = &[
    "strassen-classical",
    "strassen-basis-changed",
    "strassen-straxx",
    "strassen-projective",
    "strassen-omega",
    "standard-2",
    "standard-3",
];

/// Decomposition catalog lookup. Everything is rational except
/// "strassen-omega".
pub fn named_decomposition(name: &str) -> Result<AnyDecomposition> {
    match name {
        "strassen-classical" => Ok(AnyDecomposition::Rational(strassen_classical())),
        "strassen-basis-changed" => Ok(AnyDecomposition::Rational(strassen_basis_changed())),
        "strassen-straxx" => Ok(AnyDecomposition::Rational(strassen_straxx())),
        "strassen-projective" => Ok(AnyDecomposition::Rational(strassen_projective())),
        "strassen-omega" => Ok(AnyDecomposition::Cyclotomic(strassen_omega(
            default_omega_convention(),
        ))),
        other => {
            if let Some(suffix) = other.strip_prefix("standard-") {
                let n: usize = suffix
                    .parse()
                    .map_err(|_| Error::UnknownName(other.to_string()))?;
                if n == 0 || n > 4 {
                    return Err(Error::UnknownName(other.to_string()));
                }
                return Ok(AnyDecomposition::Rational(standard_algorithm(n)));
            }
            Err(Error::UnknownName(other.to_string()))
        }
    }
}

// --- builtin symmetry groups ---------------------------------------------

/// The slot-rotation group {1, rho, rho^2} with identity linear part.
pub fn standard_z3<K: Field>() -> FiniteSymmetryGroup<K> {
    FiniteSymmetryGroup::generate(&[SymmetryElement::pure_rotation(2, 1)], 3)
        .expect("rotations close at order 3")
}

/// The basis-swap involution acting diagonally on all three spaces.
pub fn internal_z2<K: Field>() -> FiniteSymmetryGroup<K> {
    let swap = SymmetryElement::pure_linear(
        LinearTriple::diagonal(m([[0, 1], [1, 0]])).expect("swap is invertible"),
    );
    FiniteSymmetryGroup::generate(&[swap], 2).expect("an involution closes at order 2")
}

/// For each space, the unique linear map permuting the zero-sum
/// representatives of its triple by sigma.
fn permutation_matrix<K: Field>(triple: &PointTriple<K>, sigma: &Perm3) -> Mat<K> {
    let p = triple.points();
    let base = Mat::from_rows(vec![
        vec![p[0][0].clone(), p[1][0].clone()],
        vec![p[0][1].clone(), p[1][1].clone()],
    ])
    .expect("2x2 literal");
    let image = Mat::from_rows(vec![
        vec![p[sigma.apply(0)][0].clone(), p[sigma.apply(1)][0].clone()],
        vec![p[sigma.apply(0)][1].clone(), p[sigma.apply(1)][1].clone()],
    ])
    .expect("2x2 literal");
    image.matmul(&base.inverse().expect("triple points span the plane"))
}

/// The copy of S3 inside PGL2^x3 permuting the three marked points of each
/// triple simultaneously.
pub fn s3_diag<K: Field>(triples: &[PointTriple<K>; 3]) -> Result<FiniteSymmetryGroup<K>> {
    let elements = Perm3::all()
        .iter()
        .map(|sigma| {
            Ok(SymmetryElement::pure_linear(LinearTriple::new(
                permutation_matrix(&triples[0], sigma),
                permutation_matrix(&triples[1], sigma),
                permutation_matrix(&triples[2], sigma),
            )?))
        })
        .collect::<Result<Vec<_>>>()?;
    let group = FiniteSymmetryGroup::from_elements(elements)?;
    if group.order() != 6 {
        return Err(Error::GroupConstruction(format!(
            "s3-diag closed at order {} instead of 6",
            group.order()
        )));
    }
    Ok(group)
}

/// Transport from the canonical triples to the given ones: for each space,
/// the linear map sending the canonical representatives to the triple's
/// representatives.
fn transport_element<K: Field>(triples: &[PointTriple<K>; 3]) -> Result<SymmetryElement<K>> {
    let triple_map = |t: &PointTriple<K>| -> Mat<K> {
        let p = t.points();
        Mat::from_rows(vec![
            vec![p[0][0].clone(), p[1][0].clone()],
            vec![p[0][1].clone(), p[1][1].clone()],
        ])
        .expect("2x2 literal")
    };
    Ok(SymmetryElement::pure_linear(LinearTriple::new(
        triple_map(&triples[0]),
        triple_map(&triples[1]),
        triple_map(&triples[2]),
    )?))
}

/// Direct product of the diagonal S3 with the slot rotations; order 18.
/// Built at the canonical triples and transported by conjugation (the slot
/// rotation normalizes the diagonal S3 only when the three triples agree).
pub fn s3xz3<K: Field>(triples: &[PointTriple<K>; 3]) -> Result<FiniteSymmetryGroup<K>> {
    let canonical = [
        PointTriple::canonical(),
        PointTriple::canonical(),
        PointTriple::canonical(),
    ];
    let mut gens = s3_diag(&canonical)?.elements().to_vec();
    gens.push(SymmetryElement::pure_rotation(2, 1));
    let base = FiniteSymmetryGroup::generate(&gens, 18)?;
    let group = base.conjugated(&transport_element(triples)?)?;
    if group.order() != 18 {
        return Err(Error::GroupConstruction(format!(
            "s3xz3 closed at order {} instead of 18",
            group.order()
        )));
    }
    Ok(group)
}

/// The reflection completing S3 x Z3 to S3 x D3: the transpose reflection
/// composed with the diagonal linear triple (J, J, J), J = [[0,-1],[1,0]],
/// transported from the canonical triples to the given ones. The lift was
/// pinned computationally: it stabilizes the projectively normalized
/// decomposition and closes the 36-element group.
pub fn non_convenient_reflection<K: Field>(
    triples: &[PointTriple<K>; 3],
) -> Result<SymmetryElement<K>> {
    let j = m([[0, -1], [1, 0]]);
    let canonical = SymmetryElement::new(
        LinearTriple::diagonal(j)?,
        crate::symmetry::DihedralElement::reflection(),
    );
    Ok(transport_element(triples)?.conjugate(&canonical))
}

/// The full 36-element candidate S3 x D3.
pub fn s3xd3<K: Field>(triples: &[PointTriple<K>; 3]) -> Result<FiniteSymmetryGroup<K>> {
    let mut gens = s3xz3(triples)?.elements().to_vec();
    gens.push(non_convenient_reflection(triples)?);
    let group = FiniteSymmetryGroup::generate(&gens, 36)?;
    if group.order() != 36 {
        return Err(Error::GroupConstruction(format!(
            "s3xd3 closed at order {} instead of 36",
            group.order()
        )));
    }
    Ok(group)
}

/// The diagonal three-cycle of the basis-changed family: it fixes the first
/// basis-changed term and cyclically permutes the three rank-one cubes
/// strbx -> strbx3 -> strbx2. In the stored coordinates the matrix is the
/// inverse transpose of the point three-cycle [[0,-1],[1,-1]].
pub fn diagonal_z3_element<K: Field>() -> SymmetryElement<K> {
    SymmetryElement::pure_linear(
        LinearTriple::diagonal(m([[-1, -1], [1, 0]])).expect("three-cycle is invertible"),
    )
}

pub const GROUP_NAMES: &[&str] = &[
    "trivial",
    "standard-z3",
    "internal-z2",
    "s3-diag",
    "s3xz3",
    "s3xd3",
];

/// Builtin group lookup; the optional triples fix the S3 copy inside PGL2
/// (defaults to the canonical triples).
pub fn builtin_group<K: Field>(
    name: &str,
    triples: Option<&[PointTriple<K>; 3]>,
) -> Result<FiniteSymmetryGroup<K>> {
    let canonical = [
        PointTriple::canonical(),
        PointTriple::canonical(),
        PointTriple::canonical(),
    ];
    let triples = triples.unwrap_or(&canonical);
    match name {
        "trivial" => Ok(FiniteSymmetryGroup::trivial(2)),
        "standard-z3" => Ok(standard_z3()),
        "internal-z2" => Ok(internal_z2()),
        "s3-diag" => s3_diag(triples),
        "s3xz3" => s3xz3(triples),
        "s3xd3" => s3xd3(triples),
        other => Err(Error::UnknownName(other.to_string())),
    }
}
