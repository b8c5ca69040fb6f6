//! Elements of the symmetry group (GL_n)^x3 semidirect D3 of the matrix
//! multiplication tensor, their action on terms, decompositions and tensors,
//! stabilizers inside finite candidate groups, and the gl-derivation action.
//!
//! An element applies its dihedral part first, then the linear sandwich. In
//! the crate's storage convention the sandwich on factor matrices reads
//! a -> gU^{-T} a gV^T, b -> gV^{-T} b gW^T, c -> gW^{-T} c gU^T, which is the
//! usual conjugation action transported to the covector-row convention. The
//! induced semidirect twist is derived from this choice and pinned by the
//! double-application oracle test.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::tensor::{matmul_tensor, Decomposition, Mat, RankOneTerm, Tensor3};

/// Element of D3 in the normal form rotation^r * reflection^e
/// (reflection applied first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    pub rotation: u8,
    pub reflected: bool,
}

impl DihedralElement {
    pub fn identity() -> Self {
        DihedralElement {
            rotation: 0,
            reflected: false,
        }
    }

    pub fn rotation(r: u8) -> Self {
        DihedralElement {
            rotation: r % 3,
            reflected: false,
        }
    }

    pub fn reflection() -> Self {
        DihedralElement {
            rotation: 0,
            reflected: true,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rotation == 0 && !self.reflected
    }

    /// Group law of D3: s*rho*s = rho^{-1}.
    pub fn compose(&self, other: &DihedralElement) -> DihedralElement {
        let twisted = if self.reflected {
            (3 - other.rotation % 3) % 3
        } else {
            other.rotation % 3
        };
        DihedralElement {
            rotation: (self.rotation + twisted) % 3,
            reflected: self.reflected ^ other.reflected,
        }
    }

    pub fn inverse(&self) -> DihedralElement {
        if self.reflected {
            *self // reflections are involutions in this normal form
        } else {
            DihedralElement {
                rotation: (3 - self.rotation % 3) % 3,
                reflected: false,
            }
        }
    }

    pub fn all() -> [DihedralElement; 6] {
        [
            DihedralElement { rotation: 0, reflected: false },
            DihedralElement { rotation: 1, reflected: false },
            DihedralElement { rotation: 2, reflected: false },
            DihedralElement { rotation: 0, reflected: true },
            DihedralElement { rotation: 1, reflected: true },
            DihedralElement { rotation: 2, reflected: true },
        ]
    }
}

/// An invertible matrix for each of the three base spaces U, V, W.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearTriple<K: Field> {
    pub g_u: Mat<K>,
    pub g_v: Mat<K>,
    pub g_w: Mat<K>,
}

impl<K: Field> LinearTriple<K> {
    pub fn new(g_u: Mat<K>, g_v: Mat<K>, g_w: Mat<K>) -> Result<Self> {
        let n = g_u.n();
        for m in [&g_v, &g_w] {
            if m.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: m.n(),
                });
            }
        }
        for m in [&g_u, &g_v, &g_w] {
            if !m.is_invertible() {
                return Err(Error::SingularMatrix);
            }
        }
        Ok(LinearTriple { g_u, g_v, g_w })
    }

    pub fn identity(n: usize) -> Self {
        LinearTriple {
            g_u: Mat::identity(n),
            g_v: Mat::identity(n),
            g_w: Mat::identity(n),
        }
    }

    /// Same matrix on all three spaces.
    pub fn diagonal(g: Mat<K>) -> Result<Self> {
        LinearTriple::new(g.clone(), g.clone(), g)
    }

    pub fn n(&self) -> usize {
        self.g_u.n()
    }

    pub fn is_identity(&self) -> bool {
        let id = Mat::identity(self.n());
        self.g_u == id && self.g_v == id && self.g_w == id
    }

    fn componentwise(&self, other: &Self) -> Self {
        LinearTriple {
            g_u: self.g_u.matmul(&other.g_u),
            g_v: self.g_v.matmul(&other.g_v),
            g_w: self.g_w.matmul(&other.g_w),
        }
    }

    fn inverse(&self) -> Self {
        LinearTriple {
            g_u: self.g_u.inverse().expect("checked invertible"),
            g_v: self.g_v.inverse().expect("checked invertible"),
            g_w: self.g_w.inverse().expect("checked invertible"),
        }
    }

    /// Twist by the cyclic slot shift: rho |> (gU, gV, gW) = (gV, gW, gU).
    fn twist_rotation(&self) -> Self {
        LinearTriple {
            g_u: self.g_v.clone(),
            g_v: self.g_w.clone(),
            g_w: self.g_u.clone(),
        }
    }

    /// Twist by the transpose reflection:
    /// s |> (gU, gV, gW) = (gV^{-T}, gU^{-T}, gW^{-T}).
    fn twist_reflection(&self) -> Self {
        let inv_t = |m: &Mat<K>| m.inverse().expect("checked invertible").transpose();
        LinearTriple {
            g_u: inv_t(&self.g_v),
            g_v: inv_t(&self.g_u),
            g_w: inv_t(&self.g_w),
        }
    }

    fn twist(&self, d: &DihedralElement) -> Self {
        let mut out = if d.reflected {
            self.twist_reflection()
        } else {
            self.clone()
        };
        for _ in 0..d.rotation {
            out = out.twist_rotation();
        }
        out
    }

    /// The (left, right) factors of the three slot maps m -> L m R.
    fn slot_maps(&self) -> [(Mat<K>, Mat<K>); 3] {
        let inv_t = |m: &Mat<K>| m.inverse().expect("checked invertible").transpose();
        [
            (inv_t(&self.g_u), self.g_v.transpose()),
            (inv_t(&self.g_v), self.g_w.transpose()),
            (inv_t(&self.g_w), self.g_u.transpose()),
        ]
    }
}

/// A symmetry of the matrix multiplication tensor: a dihedral slot move
/// followed by a linear sandwich.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetryElement<K: Field> {
    pub linear: LinearTriple<K>,
    pub dihedral: DihedralElement,
}

impl<K: Field> SymmetryElement<K> {
    pub fn new(linear: LinearTriple<K>, dihedral: DihedralElement) -> Self {
        SymmetryElement { linear, dihedral }
    }

    pub fn identity(n: usize) -> Self {
        SymmetryElement {
            linear: LinearTriple::identity(n),
            dihedral: DihedralElement::identity(),
        }
    }

    pub fn pure_linear(linear: LinearTriple<K>) -> Self {
        SymmetryElement {
            linear,
            dihedral: DihedralElement::identity(),
        }
    }

    pub fn pure_rotation(n: usize, r: u8) -> Self {
        SymmetryElement {
            linear: LinearTriple::identity(n),
            dihedral: DihedralElement::rotation(r),
        }
    }

    pub fn pure_reflection(n: usize) -> Self {
        SymmetryElement {
            linear: LinearTriple::identity(n),
            dihedral: DihedralElement::reflection(),
        }
    }

    pub fn n(&self) -> usize {
        self.linear.n()
    }

    pub fn is_identity_action(&self) -> bool {
        self.fingerprint() == SymmetryElement::identity(self.n()).fingerprint()
    }

    /// apply(compose(g, h), x) = apply(g, apply(h, x)).
    pub fn compose(&self, other: &SymmetryElement<K>) -> SymmetryElement<K> {
        SymmetryElement {
            linear: self
                .linear
                .componentwise(&other.linear.twist(&self.dihedral)),
            dihedral: self.dihedral.compose(&other.dihedral),
        }
    }

    pub fn inverse(&self) -> SymmetryElement<K> {
        let d_inv = self.dihedral.inverse();
        SymmetryElement {
            linear: self.linear.inverse().twist(&d_inv),
            dihedral: d_inv,
        }
    }

    /// Conjugate h -> g h g^{-1}.
    pub fn conjugate(&self, h: &SymmetryElement<K>) -> SymmetryElement<K> {
        self.compose(h).compose(&self.inverse())
    }

    pub fn apply_term(&self, term: &RankOneTerm<K>) -> RankOneTerm<K> {
        let mut moved = term.clone();
        if self.dihedral.reflected {
            moved = moved.reflected();
        }
        for _ in 0..self.dihedral.rotation {
            moved = moved.rotated();
        }
        let [(la, ra), (lb, rb), (lc, rc)] = self.linear.slot_maps();
        RankOneTerm::new(
            moved.coeff,
            la.matmul(&moved.a).matmul(&ra),
            lb.matmul(&moved.b).matmul(&rb),
            lc.matmul(&moved.c).matmul(&rc),
        )
        .expect("invertible sandwich keeps factors nonzero")
    }

    pub fn apply_decomposition(&self, dec: &Decomposition<K>) -> Decomposition<K> {
        Decomposition::new(
            dec.n(),
            dec.terms().iter().map(|t| self.apply_term(t)).collect(),
        )
        .expect("action preserves dimension")
    }

    pub fn apply_tensor(&self, tensor: &Tensor3<K>) -> Tensor3<K> {
        let mut out = tensor.clone();
        if self.dihedral.reflected {
            out = out.reflected();
        }
        for _ in 0..self.dihedral.rotation {
            out = out.rotated();
        }
        for (slot, (l, r)) in self.linear.slot_maps().iter().enumerate() {
            out = out.slot_map(slot, l, r);
        }
        out
    }

    /// Canonical form of the induced action: per-slot scalars cancel across
    /// the sandwich, so the action is determined by the dihedral part and
    /// the projectively normalized triple.
    pub fn fingerprint(&self) -> ActionFingerprint<K> {
        let norm = |m: &Mat<K>| m.normalized().expect("invertible matrix is nonzero").0;
        ActionFingerprint {
            rotation: self.dihedral.rotation,
            reflected: self.dihedral.reflected,
            mats: [
                norm(&self.linear.g_u),
                norm(&self.linear.g_v),
                norm(&self.linear.g_w),
            ],
        }
    }

    /// The same action with each linear matrix rescaled to leading entry
    /// one; keeps entries small through long composition chains.
    pub fn pgl_normalized(&self) -> SymmetryElement<K> {
        let fp = self.fingerprint();
        let [g_u, g_v, g_w] = fp.mats;
        SymmetryElement {
            linear: LinearTriple { g_u, g_v, g_w },
            dihedral: self.dihedral,
        }
    }

    pub fn map_field<L: Field>(&self, f: &impl Fn(&K) -> L) -> SymmetryElement<L> {
        SymmetryElement {
            linear: LinearTriple {
                g_u: self.linear.g_u.map_field(f),
                g_v: self.linear.g_v.map_field(f),
                g_w: self.linear.g_w.map_field(f),
            },
            dihedral: self.dihedral,
        }
    }
}

/// Dedup key for group elements; see [`SymmetryElement::fingerprint`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ActionFingerprint<K: Field> {
    rotation: u8,
    reflected: bool,
    mats: [Mat<K>; 3],
}

/// True iff the element maps `matmul_tensor(n)` to itself.
pub fn preserves_matmul<K: Field>(g: &SymmetryElement<K>) -> bool {
    let target = matmul_tensor::<K>(g.n());
    g.apply_tensor(&target) == target
}

/// A finite, closure-verified set of symmetry elements. Elements are stored
/// PGL-normalized and their action fingerprints are cached.
#[derive(Debug, Clone)]
pub struct FiniteSymmetryGroup<K: Field> {
    elements: Vec<SymmetryElement<K>>,
    fingerprints: HashSet<ActionFingerprint<K>>,
}

impl<K: Field> FiniteSymmetryGroup<K> {
    /// Deduplicates by action, then verifies the group axioms: identity
    /// present, closed under composition and inverses.
    pub fn from_elements(elements: Vec<SymmetryElement<K>>) -> Result<Self> {
        let mut fingerprints = HashSet::new();
        let mut unique = Vec::new();
        for e in elements {
            let normalized = e.pgl_normalized();
            if fingerprints.insert(normalized.fingerprint()) {
                unique.push(normalized);
            }
        }
        if unique.is_empty() {
            return Err(Error::EmptyGroup);
        }
        let group = FiniteSymmetryGroup {
            elements: unique,
            fingerprints,
        };
        group.verify_group_axioms()?;
        Ok(group)
    }

    /// Closure of a generating set, with a hard cap against runaway
    /// generation.
    pub fn generate(generators: &[SymmetryElement<K>], cap: usize) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGroup);
        }
        let n = generators[0].n();
        let mut elements = vec![SymmetryElement::identity(n)];
        let mut seen: HashSet<ActionFingerprint<K>> =
            elements.iter().map(SymmetryElement::fingerprint).collect();
        let mut frontier = elements.clone();
        while let Some(current) = frontier.pop() {
            for g in generators {
                let next = g.compose(&current).pgl_normalized();
                if seen.insert(next.fingerprint()) {
                    if elements.len() >= cap {
                        return Err(Error::GroupConstruction(format!(
                            "closure exceeded the cap of {cap} elements"
                        )));
                    }
                    elements.push(next.clone());
                    frontier.push(next);
                }
            }
        }
        FiniteSymmetryGroup::from_elements(elements)
    }

    pub fn trivial(n: usize) -> Self {
        FiniteSymmetryGroup::from_elements(vec![SymmetryElement::identity(n)])
            .expect("the one-element group satisfies the axioms")
    }

    pub fn elements(&self) -> &[SymmetryElement<K>] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn n(&self) -> usize {
        self.elements[0].n()
    }

    pub fn contains(&self, g: &SymmetryElement<K>) -> bool {
        self.fingerprints.contains(&g.fingerprint())
    }

    fn verify_group_axioms(&self) -> Result<()> {
        let n = self.n();
        if !self.contains(&SymmetryElement::identity(n)) {
            return Err(Error::GroupConstruction(
                "identity element missing".to_string(),
            ));
        }
        for g in &self.elements {
            if !self.contains(&g.inverse()) {
                return Err(Error::GroupConstruction(
                    "not closed under inverses".to_string(),
                ));
            }
            for h in &self.elements {
                if !self.contains(&g.compose(h)) {
                    return Err(Error::GroupConstruction(
                        "not closed under composition".to_string(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Conjugated copy g G g^{-1}.
    pub fn conjugated(&self, g: &SymmetryElement<K>) -> Result<Self> {
        FiniteSymmetryGroup::from_elements(
            self.elements.iter().map(|h| g.conjugate(h)).collect(),
        )
    }

    /// Embeds the group into another field (the embedding must be a ring
    /// homomorphism for the result to satisfy the group axioms).
    pub fn map_field<L: Field>(&self, f: &impl Fn(&K) -> L) -> Result<FiniteSymmetryGroup<L>> {
        FiniteSymmetryGroup::from_elements(
            self.elements.iter().map(|e| e.map_field(f)).collect(),
        )
    }
}

/// The elements of `group` that map the term set of `dec` to itself.
/// Every candidate element must preserve the matrix multiplication tensor.
pub fn stabilizer_within<K: Field>(
    dec: &Decomposition<K>,
    group: &FiniteSymmetryGroup<K>,
) -> Result<FiniteSymmetryGroup<K>> {
    if dec.n() != group.n() {
        return Err(Error::DimensionMismatch {
            expected: dec.n(),
            got: group.n(),
        });
    }
    for (i, g) in group.elements().iter().enumerate() {
        if !preserves_matmul(g) {
            return Err(Error::CandidateNotSymmetry(i));
        }
    }
    let mut stab = Vec::new();
    for g in group.elements() {
        if g.apply_decomposition(dec).set_equal(dec)? {
            stab.push(g.clone());
        }
    }
    // The filtered set is automatically a subgroup; from_elements re-verifies
    // closure so a violation would surface as a construction error.
    FiniteSymmetryGroup::from_elements(stab)
}

/// Instance-wise check of the conjugation law for stabilizers:
/// the stabilizer of g.dec inside g G g^{-1} equals the conjugate of the
/// stabilizer of dec inside G.
pub fn conjugated_stabilizer_check<K: Field>(
    g: &SymmetryElement<K>,
    dec: &Decomposition<K>,
    group: &FiniteSymmetryGroup<K>,
) -> Result<bool> {
    if !preserves_matmul(g) {
        return Err(Error::CandidateNotSymmetry(usize::MAX));
    }
    let moved = g.apply_decomposition(dec);
    let conj_group = group.conjugated(g)?;
    let lhs = stabilizer_within(&moved, &conj_group)?;
    let rhs = stabilizer_within(dec, group)?.conjugated(g)?;
    if lhs.order() != rhs.order() {
        return Ok(false);
    }
    Ok(lhs.elements().iter().all(|e| rhs.contains(e)))
}

/// Orbit partition of the term indices under a stabilizing group.
pub fn term_orbits<K: Field>(
    group: &FiniteSymmetryGroup<K>,
    dec: &Decomposition<K>,
) -> Result<Vec<Vec<usize>>> {
    let canon: Vec<RankOneTerm<K>> = dec
        .terms()
        .iter()
        .map(RankOneTerm::canonicalize)
        .collect::<Result<Vec<_>>>()?;
    let find = |t: &RankOneTerm<K>| canon.iter().position(|c| c == t);
    let mut orbit_of = vec![usize::MAX; canon.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..canon.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let orbit_id = orbits.len();
        let mut members = vec![start];
        orbit_of[start] = orbit_id;
        let mut queue = vec![start];
        while let Some(idx) = queue.pop() {
            for (ei, g) in group.elements().iter().enumerate() {
                let image = g.apply_term(&dec.terms()[idx]).canonicalize()?;
                let Some(target) = find(&image) else {
                    return Err(Error::NotStabilized {
                        element: ei,
                        term: idx,
                    });
                };
                if orbit_of[target] == usize::MAX {
                    orbit_of[target] = orbit_id;
                    members.push(target);
                    queue.push(target);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    Ok(orbits)
}

/// Which tensor slot carries the vector copy and which the dual copy of each
/// base space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorSpace {
    U,
    V,
    W,
}

impl FactorSpace {
    pub fn all() -> [FactorSpace; 3] {
        [FactorSpace::U, FactorSpace::V, FactorSpace::W]
    }

    pub fn name(&self) -> &'static str {
        match self {
            FactorSpace::U => "U",
            FactorSpace::V => "V",
            FactorSpace::W => "W",
        }
    }
}

/// The two Leibniz contributions of X in gl(space): `(slot, left, mat)`,
/// acting as m -> mat*m for left = true and m -> m*mat otherwise.
fn derivation_pieces<K: Field>(
    x: &Mat<K>,
    space: FactorSpace,
) -> [(usize, bool, Mat<K>); 2] {
    let xt = x.transpose();
    // Differentiating a -> gU^{-T} a gV^T at g = 1 + eps X gives -X^T a on
    // the slot carrying the dual copy and a X^T on the slot carrying the
    // vector copy.
    match space {
        FactorSpace::U => [(0, true, xt.neg()), (2, false, xt)],
        FactorSpace::V => [(1, true, xt.neg()), (0, false, xt)],
        FactorSpace::W => [(2, true, xt.neg()), (1, false, xt)],
    }
}

/// Derivation action of X in gl(space) on a dense tensor.
pub fn lie_derivative_tensor<K: Field>(
    x: &Mat<K>,
    space: FactorSpace,
    tensor: &Tensor3<K>,
) -> Result<Tensor3<K>> {
    if x.n() != tensor.n() {
        return Err(Error::DimensionMismatch {
            expected: tensor.n(),
            got: x.n(),
        });
    }
    let id = Mat::identity(tensor.n());
    let mut out = Tensor3::zero(tensor.n());
    for (slot, left, m) in derivation_pieces(x, space) {
        let piece = if left {
            tensor.slot_map(slot, &m, &id)
        } else {
            tensor.slot_map(slot, &id, &m)
        };
        out = out.add(&piece);
    }
    Ok(out)
}

/// Term-wise Leibniz expansion of the same derivation; agrees with
/// [`lie_derivative_tensor`] on the expansion (tested).
pub fn lie_derivative_decomposition<K: Field>(
    x: &Mat<K>,
    space: FactorSpace,
    dec: &Decomposition<K>,
) -> Result<Tensor3<K>> {
    if x.n() != dec.n() {
        return Err(Error::DimensionMismatch {
            expected: dec.n(),
            got: x.n(),
        });
    }
    let mut out = Tensor3::zero(dec.n());
    for term in dec.terms() {
        for (slot, left, m) in derivation_pieces(x, space) {
            let mats = [&term.a, &term.b, &term.c];
            let replaced = if left {
                m.matmul(mats[slot])
            } else {
                mats[slot].matmul(&m)
            };
            if replaced.is_zero() {
                continue;
            }
            let factors: Vec<Mat<K>> = (0..3)
                .map(|s| if s == slot { replaced.clone() } else { mats[s].clone() })
                .collect();
            let piece = RankOneTerm::new(
                term.coeff.clone(),
                factors[0].clone(),
                factors[1].clone(),
                factors[2].clone(),
            )
            .expect("nonzero by the guard above")
            .tensor();
            out = out.add(&piece);
        }
    }
    Ok(out)
}
