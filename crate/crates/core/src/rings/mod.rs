//! Ground rings and the GCD-domain contract consumed by every other module.
//!
//! A ring is a value (it may carry a modulus, a variable list, ...) and its
//! elements are plain data. All operations go through the ring value, in the
//! style of `ring.add(&a, &b)`.

mod frac;
mod poly;
mod unipoly;

pub use frac::{Frac, FracField};
pub use poly::{Monomial, MultiPoly, PolyRing};
pub use unipoly::{content, primitive_part, UniPoly};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// An integral domain with a total gcd, decidable exact division and a
/// canonical choice of associate in each class modulo units.
pub trait GcdDomain {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Image of a rational integer under the canonical map Z -> A.
    fn from_int(&self, n: &BigInt) -> Self::Elem;

    /// Quotient `a / b` when `b` divides `a` exactly, `None` otherwise.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// A gcd of `a` and `b`, returned in canonical (unit-normalized) form.
    /// `gcd(0, b)` is the canonical associate of `b`.
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn is_unit(&self, a: &Self::Elem) -> bool;

    /// Splits `a = unit * normal` with `normal` the canonical associate of
    /// `a`. The canonical form is idempotent: `normalize(normal) = normal`.
    fn normalize_unit(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// A total order on elements, used only to make outputs reproducible.
    fn cmp_elems(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;

    fn fmt_elem(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn normalize(&self, a: &Self::Elem) -> Self::Elem {
        self.normalize_unit(a).0
    }

    /// `a | b` in the ring.
    fn divides(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.exact_div(b, a).is_some()
    }

    fn pow(&self, a: &Self::Elem, n: u32) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }

    fn lcm(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if self.is_zero(a) || self.is_zero(b) {
            return self.zero();
        }
        let g = self.gcd(a, b);
        let q = self.exact_div(a, &g).expect("gcd divides its arguments");
        self.normalize(&self.mul(&q, b))
    }

    fn gcd_many(&self, xs: &[Self::Elem]) -> Self::Elem {
        let mut g = self.zero();
        for x in xs {
            g = self.gcd(&g, x);
            if self.is_unit(&g) {
                break;
            }
        }
        g
    }
}

impl<A: GcdDomain + ?Sized> GcdDomain for &A {
    type Elem = A::Elem;

    fn zero(&self) -> Self::Elem {
        (**self).zero()
    }
    fn one(&self) -> Self::Elem {
        (**self).one()
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        (**self).is_zero(a)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).add(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (**self).neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).mul(a, b)
    }
    fn from_int(&self, n: &BigInt) -> Self::Elem {
        (**self).from_int(n)
    }
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        (**self).exact_div(a, b)
    }
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).gcd(a, b)
    }
    fn is_unit(&self, a: &Self::Elem) -> bool {
        (**self).is_unit(a)
    }
    fn normalize_unit(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem) {
        (**self).normalize_unit(a)
    }
    fn cmp_elems(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        (**self).cmp_elems(a, b)
    }
    fn fmt_elem(&self, a: &Self::Elem) -> String {
        (**self).fmt_elem(a)
    }
}

/// The rational integers with arbitrary precision. Canonical associates are
/// the nonnegative integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IntegerRing;

impl GcdDomain for IntegerRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }

    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }

    fn gcd(&self, a: &BigInt, b: &BigInt) -> BigInt {
        Integer::gcd(a, b)
    }

    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }

    fn normalize_unit(&self, a: &BigInt) -> (BigInt, BigInt) {
        if a.is_negative() {
            (-a, -BigInt::one())
        } else {
            (a.clone(), BigInt::one())
        }
    }

    fn cmp_elems(&self, a: &BigInt, b: &BigInt) -> Ordering {
        a.cmp(b)
    }

    fn fmt_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

/// Errors raised when building a prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeFieldError {
    NotPrime(u64),
    TooLarge(u64),
}

impl fmt::Display for PrimeFieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeFieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            PrimeFieldError::TooLarge(p) => write!(f, "modulus {p} exceeds 2^31"),
        }
    }
}

impl std::error::Error for PrimeFieldError {}

/// The field Z/p for a prime p < 2^31. Elements are reduced residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, PrimeFieldError> {
        if p >= 1 << 31 {
            return Err(PrimeFieldError::TooLarge(p));
        }
        if p < 2 || !is_prime_u64(p) {
            return Err(PrimeFieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn from_bigint(&self, x: &BigInt) -> u64 {
        let m = x.mod_floor(&BigInt::from(self.p));
        let (_, digits) = m.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (a as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Some(s0.rem_euclid(self.p as i128) as u64)
    }
}

/// Primality by trial division, adequate at desk scale.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl GcdDomain for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        // p < 2^31 so the product fits in u64
        (a * b) % self.p
    }

    fn from_int(&self, n: &BigInt) -> u64 {
        self.from_bigint(n)
    }

    fn exact_div(&self, a: &u64, b: &u64) -> Option<u64> {
        self.inv(*b).map(|bi| self.mul(a, &bi))
    }

    fn gcd(&self, a: &u64, b: &u64) -> u64 {
        if *a == 0 && *b == 0 {
            0
        } else {
            1
        }
    }

    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }

    fn normalize_unit(&self, a: &u64) -> (u64, u64) {
        if *a == 0 {
            (0, 1)
        } else {
            (1, *a)
        }
    }

    fn cmp_elems(&self, a: &u64, b: &u64) -> Ordering {
        a.cmp(b)
    }

    fn fmt_elem(&self, a: &u64) -> String {
        a.to_string()
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_normalization() {
        let z = IntegerRing;
        let (n, u) = z.normalize_unit(&BigInt::from(-6));
        assert_eq!(n, BigInt::from(6));
        assert_eq!(u, BigInt::from(-1));
        assert_eq!(z.normalize(&n), n);
    }

    #[test]
    fn integer_gcd_is_nonnegative() {
        let z = IntegerRing;
        assert_eq!(
            z.gcd(&BigInt::from(-12), &BigInt::from(18)),
            BigInt::from(6)
        );
        assert_eq!(z.gcd(&BigInt::zero(), &BigInt::from(-7)), BigInt::from(7));
    }

    #[test]
    fn prime_field_construction() {
        assert!(PrimeField::new(5).is_ok());
        assert_eq!(PrimeField::new(6), Err(PrimeFieldError::NotPrime(6)));
        assert_eq!(PrimeField::new(1), Err(PrimeFieldError::NotPrime(1)));
        assert!(PrimeField::new(1 << 31).is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            let ai = f.inv(a).unwrap();
            assert_eq!(f.mul(&a, &ai), 1);
        }
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn exact_div_roundtrip() {
        let z = IntegerRing;
        let a = BigInt::from(35);
        let b = BigInt::from(-5);
        assert_eq!(z.exact_div(&z.mul(&a, &b), &a), Some(b.clone()));
        assert_eq!(z.exact_div(&BigInt::from(7), &BigInt::from(2)), None);
    }
}
