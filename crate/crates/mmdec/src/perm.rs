//! Permutations of three letters, used both for the diagonal S3 symmetry
//! groups and for the S3 representation theory.

use std::fmt;

/// A permutation of {0, 1, 2}, stored as its images.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm3 {
    images: [usize; 3],
}

impl Perm3 {
    pub fn new(images: [usize; 3]) -> Self {
        let mut seen = [false; 3];
        for &i in &images {
            assert!(i < 3 && !seen[i], "not a permutation of 0..3: {images:?}");
            seen[i] = true;
        }
        Perm3 { images }
    }

    pub fn identity() -> Self {
        Perm3::new([0, 1, 2])
    }

    /// All six elements in a fixed enumeration order:
    /// e, (01), (02), (12), (012), (021).
    pub fn all() -> [Perm3; 6] {
        [
            Perm3::new([0, 1, 2]),
            Perm3::new([1, 0, 2]),
            Perm3::new([2, 1, 0]),
            Perm3::new([0, 2, 1]),
            Perm3::new([1, 2, 0]),
            Perm3::new([2, 0, 1]),
        ]
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// self * other: apply `other` first.
    pub fn compose(&self, other: &Perm3) -> Perm3 {
        Perm3::new([
            self.images[other.images[0]],
            self.images[other.images[1]],
            self.images[other.images[2]],
        ])
    }

    pub fn inverse(&self) -> Perm3 {
        let mut images = [0; 3];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Perm3::new(images)
    }

    pub fn is_identity(&self) -> bool {
        self.images == [0, 1, 2]
    }

    /// Number of transpositions mod 2: false = even.
    pub fn is_odd(&self) -> bool {
        let mut inversions = 0;
        for i in 0..3 {
            for j in i + 1..3 {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 1
    }

    /// Index into the fixed enumeration of [`Perm3::all`].
    pub fn index(&self) -> usize {
        Perm3::all()
            .iter()
            .position(|p| p == self)
            .expect("every permutation appears in the enumeration")
    }

    /// Conjugacy class: 0 = identity, 1 = transpositions, 2 = 3-cycles.
    pub fn class(&self) -> usize {
        if self.is_identity() {
            0
        } else if self.is_odd() {
            1
        } else {
            2
        }
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} {} {}]",
            self.images[0], self.images[1], self.images[2]
        )
    }
}
