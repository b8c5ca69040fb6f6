//! Exact scalar arithmetic: arbitrary-precision rationals and the cyclotomic
//! field Q(zeta_12).
//!
//! zeta_12 is a primitive 12th root of unity, so the field contains
//! i = zeta^3, sqrt(3) = zeta + zeta^11 and the primitive cube roots of unity.
//! Every constant of the diagonalized seven-term decomposition (omega, iota,
//! sigma and their conjugates) therefore has an exact representative here.
//! Elements are kept in the canonical degree-<=3 form modulo
//! Phi_12(x) = x^4 - x^2 + 1, which makes equality a coefficient comparison.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `BigRational` already maintains the canonical form
/// (gcd 1, positive denominator, zero as 0/1).
pub type Rational = num_rational::BigRational;

/// Small-integer rational constructor, mostly for tables and tests.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Integer embedded as a rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Tag naming the two supported coefficient fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Cyclotomic12,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "rational"),
            FieldKind::Cyclotomic12 => write!(f, "cyclotomic12"),
        }
    }
}

impl FromStr for FieldKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(FieldKind::Rational),
            "cyclotomic12" => Ok(FieldKind::Cyclotomic12),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

/// An exact field element. Everything downstream (matrices, tensors, groups)
/// is generic over this trait; the two implementors are [`Rational`] and
/// [`Cyclotomic12`]. `Ord`/`Hash` operate on canonical forms, so they agree
/// with field equality.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + PartialOrd
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + 'static
{
    const KIND: FieldKind;

    fn from_int(value: i64) -> Self;

    /// Embedding of Q; a ring homomorphism (checked by tests).
    fn from_rational(value: &Rational) -> Self;

    /// Multiplicative inverse; `None` exactly for zero.
    fn inverse(&self) -> Option<Self>;

    fn field_div(&self, rhs: &Self) -> Result<Self> {
        rhs.inverse()
            .map(|inv| self.clone() * inv)
            .ok_or(Error::DivisionByZero)
    }
}

impl Field for Rational {
    const KIND: FieldKind = FieldKind::Rational;

    fn from_int(value: i64) -> Self {
        int(value)
    }

    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Element of Q(zeta_12) in canonical reduced form
/// `c0 + c1*z + c2*z^2 + c3*z^3` with z = zeta_12.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cyclotomic12 {
    coeffs: [Rational; 4],
}

impl Cyclotomic12 {
    pub fn new(coeffs: [Rational; 4]) -> Self {
        Cyclotomic12 { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.coeffs
    }

    pub fn from_ints(coeffs: [i64; 4]) -> Self {
        Cyclotomic12::new([int(coeffs[0]), int(coeffs[1]), int(coeffs[2]), int(coeffs[3])])
    }

    /// zeta_12 itself.
    pub fn zeta() -> Self {
        Cyclotomic12::from_ints([0, 1, 0, 0])
    }

    /// zeta_12^power in canonical reduced form; negative powers allowed.
    pub fn zeta_pow(power: i64) -> Self {
        let mut acc = Cyclotomic12::one();
        let z = Cyclotomic12::zeta();
        for _ in 0..power.rem_euclid(12) {
            acc = acc * z.clone();
        }
        acc
    }

    /// Complex conjugation, i.e. the field automorphism zeta -> zeta^11.
    pub fn conjugate(&self) -> Self {
        let [c0, c1, c2, c3] = self.coeffs.clone();
        // zeta^11 = z - z^3, zeta^10 = 1 - z^2, zeta^9 = -z^3.
        Cyclotomic12::new([
            c0 + c2.clone(),
            c1.clone(),
            -c2,
            -(c1 + c3),
        ])
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1].is_zero() && self.coeffs[2].is_zero() && self.coeffs[3].is_zero()
    }

    /// The rational part if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn mul_reduce(a: &[Rational; 4], b: &[Rational; 4]) -> [Rational; 4] {
        let mut conv = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        for i in 0..4 {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if b[j].is_zero() {
                    continue;
                }
                conv[i + j] += a[i].clone() * b[j].clone();
            }
        }
        // Reduce with z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1.
        [
            conv[0].clone() - conv[4].clone() - conv[6].clone(),
            conv[1].clone() - conv[5].clone(),
            conv[2].clone() + conv[4].clone(),
            conv[3].clone() + conv[5].clone(),
        ]
    }
}

impl Add for Cyclotomic12 {
    type Output = Cyclotomic12;

    fn add(self, rhs: Cyclotomic12) -> Cyclotomic12 {
        let [a0, a1, a2, a3] = self.coeffs;
        let [b0, b1, b2, b3] = rhs.coeffs;
        Cyclotomic12::new([a0 + b0, a1 + b1, a2 + b2, a3 + b3])
    }
}

impl Sub for Cyclotomic12 {
    type Output = Cyclotomic12;

    fn sub(self, rhs: Cyclotomic12) -> Cyclotomic12 {
        self + (-rhs)
    }
}

impl Neg for Cyclotomic12 {
    type Output = Cyclotomic12;

    fn neg(self) -> Cyclotomic12 {
        let [a0, a1, a2, a3] = self.coeffs;
        Cyclotomic12::new([-a0, -a1, -a2, -a3])
    }
}

impl Mul for Cyclotomic12 {
    type Output = Cyclotomic12;

    fn mul(self, rhs: Cyclotomic12) -> Cyclotomic12 {
        Cyclotomic12::new(Cyclotomic12::mul_reduce(&self.coeffs, &rhs.coeffs))
    }
}

impl Zero for Cyclotomic12 {
    fn zero() -> Self {
        Cyclotomic12::from_ints([0, 0, 0, 0])
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }
}

impl One for Cyclotomic12 {
    fn one() -> Self {
        Cyclotomic12::from_ints([1, 0, 0, 0])
    }
}

impl fmt::Display for Cyclotomic12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        Ok(())
    }
}

impl Field for Cyclotomic12 {
    const KIND: FieldKind = FieldKind::Cyclotomic12;

    fn from_int(value: i64) -> Self {
        Cyclotomic12::from_ints([value, 0, 0, 0])
    }

    fn from_rational(value: &Rational) -> Self {
        Cyclotomic12::new([
            value.clone(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ])
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let coeffs = poly_inverse_mod_phi(&self.coeffs)?;
        Some(Cyclotomic12::new(coeffs))
    }
}

// --- tiny polynomial helpers over Q, used only for inversion -------------

fn poly_trim(p: &mut Vec<Rational>) {
    while p.last().map(Rational::is_zero).unwrap_or(false) {
        p.pop();
    }
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    poly_trim(&mut rem);
    let mut den = den.to_vec();
    poly_trim(&mut den);
    assert!(!den.is_empty(), "division by the zero polynomial");
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut quot = vec![Rational::zero(); rem.len().saturating_sub(dd)];
    while rem.len() > dd && !rem.is_empty() {
        let rd = rem.len() - 1;
        let factor = rem[rd].clone() / lead.clone();
        let shift = rd - dd;
        quot[shift] = factor.clone();
        for (i, d) in den.iter().enumerate() {
            let idx = shift + i;
            let delta = factor.clone() * d.clone();
            rem[idx] -= delta;
        }
        poly_trim(&mut rem);
    }
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai.clone() * bj.clone();
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, v) in a.iter().enumerate() {
        out[i] += v.clone();
    }
    for (i, v) in b.iter().enumerate() {
        out[i] -= v.clone();
    }
    poly_trim(&mut out);
    out
}

/// Extended Euclidean algorithm against Phi_12 = x^4 - x^2 + 1. Phi_12 is
/// irreducible over Q, so every nonzero reduced element is invertible.
fn poly_inverse_mod_phi(coeffs: &[Rational; 4]) -> Option<[Rational; 4]> {
    let phi = vec![int(1), int(0), int(-1), int(0), int(1)];
    let mut a = coeffs.to_vec();
    poly_trim(&mut a);
    if a.is_empty() {
        return None;
    }
    // Invariant: r0 = s0*phi + t0*a and likewise for (r1, t1).
    let mut r0 = phi;
    let mut r1 = a;
    let mut t0: Vec<Rational> = Vec::new();
    let mut t1: Vec<Rational> = vec![int(1)];
    while r1.len() > 1 {
        let (q, r) = poly_divmod(&r0, &r1);
        let t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
        if r1.is_empty() {
            // gcd(a, phi) has positive degree: impossible for irreducible phi
            // and deg(a) < 4, kept as a guard.
            return None;
        }
    }
    let unit = r1[0].clone();
    let mut inv = [
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
    ];
    for (i, c) in t1.iter().enumerate() {
        inv[i] = c.clone() / unit.clone();
    }
    Some(inv)
}

/// The named constants of the diagonalized decomposition, built from their
/// defining expressions: i = zeta^3, sqrt3 = zeta + zeta^11, omega = zeta^4,
/// iota = i/sqrt3, sigma = zeta/sqrt3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedConstant {
    Omega,
    ImagUnit,
    Sqrt3,
    Iota,
    Sigma,
}

impl NamedConstant {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "omega" => Ok(NamedConstant::Omega),
            "imag_unit" | "i" => Ok(NamedConstant::ImagUnit),
            "sqrt3" => Ok(NamedConstant::Sqrt3),
            "iota" => Ok(NamedConstant::Iota),
            "sigma" => Ok(NamedConstant::Sigma),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

pub fn named_constant(which: NamedConstant) -> Cyclotomic12 {
    let zeta = Cyclotomic12::zeta();
    let sqrt3 = Cyclotomic12::zeta_pow(1) + Cyclotomic12::zeta_pow(11);
    match which {
        NamedConstant::Omega => Cyclotomic12::zeta_pow(4),
        NamedConstant::ImagUnit => Cyclotomic12::zeta_pow(3),
        NamedConstant::Sqrt3 => sqrt3,
        NamedConstant::Iota => {
            Cyclotomic12::zeta_pow(3) * sqrt3.inverse().expect("sqrt3 is nonzero")
        }
        NamedConstant::Sigma => zeta * sqrt3.inverse().expect("sqrt3 is nonzero"),
    }
}
