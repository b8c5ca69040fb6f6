//! Seeded random inputs for fuzz-style checks: matrices, rank-one terms,
//! symmetry elements and projective point triples. Everything is driven by
//! an explicit RNG so reports and tests are reproducible.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalog::{normalize_triple, PointTriple};
use crate::scalar::Field;
use crate::symmetry::{DihedralElement, LinearTriple, SymmetryElement};
use crate::tensor::{Mat, RankOneTerm, Tensor3};

/// The reproducible RNG used by the CLI and the test suites.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Matrix with small integer entries.
pub fn random_mat<K: Field>(rng: &mut impl Rng, n: usize) -> Mat<K> {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
        .collect();
    Mat::from_int_rows(&rows).expect("square by construction")
}

fn random_nonzero_mat<K: Field>(rng: &mut impl Rng, n: usize) -> Mat<K> {
    loop {
        let m = random_mat(rng, n);
        if !m.is_zero() {
            return m;
        }
    }
}

pub fn random_invertible_mat<K: Field>(rng: &mut impl Rng, n: usize) -> Mat<K> {
    loop {
        let m = random_mat(rng, n);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn random_term<K: Field>(rng: &mut impl Rng, n: usize) -> RankOneTerm<K> {
    RankOneTerm::new(
        K::from_int(rng.gen_range(1..=3)),
        random_nonzero_mat(rng, n),
        random_nonzero_mat(rng, n),
        random_nonzero_mat(rng, n),
    )
    .expect("factors are nonzero")
}

pub fn random_tensor<K: Field>(rng: &mut impl Rng, n: usize) -> Tensor3<K> {
    let entries = (0..n * n * n * n * n * n)
        .map(|_| K::from_int(rng.gen_range(-3..=3)))
        .collect();
    Tensor3::from_flat(n, entries).expect("length matches")
}

pub fn random_linear_triple<K: Field>(rng: &mut impl Rng, n: usize) -> LinearTriple<K> {
    LinearTriple::new(
        random_invertible_mat(rng, n),
        random_invertible_mat(rng, n),
        random_invertible_mat(rng, n),
    )
    .expect("invertible by construction")
}

/// Uniformly mixes dihedral parts with random invertible linear triples.
pub fn random_symmetry_element<K: Field>(rng: &mut impl Rng, n: usize) -> SymmetryElement<K> {
    let dihedral = DihedralElement {
        rotation: rng.gen_range(0..3),
        reflected: rng.gen_bool(0.5),
    };
    SymmetryElement::new(random_linear_triple(rng, n), dihedral)
}

/// Three pairwise distinct projective points on a line, already normalized
/// to zero-sum representatives.
pub fn random_point_triple<K: Field>(rng: &mut impl Rng) -> PointTriple<K> {
    loop {
        let mut points = Vec::new();
        while points.len() < 3 {
            let p = vec![
                K::from_int(rng.gen_range(-4..=4)),
                K::from_int(rng.gen_range(-4..=4)),
            ];
            if p.iter().all(num_traits::Zero::is_zero) {
                continue;
            }
            points.push(p);
        }
        if let Ok(triple) = normalize_triple(&points[0], &points[1], &points[2]) {
            return triple;
        }
    }
}
