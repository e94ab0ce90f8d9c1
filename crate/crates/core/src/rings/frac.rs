//! Fraction field of a GCD domain, with reduced canonical representatives.

use super::GcdDomain;
use std::cmp::Ordering;
use std::fmt;

/// A reduced fraction `num/den`: the denominator is nonzero, in canonical
/// form, and coprime to the numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frac<E> {
    pub num: E,
    pub den: E,
}

/// Frac(A) for a GCD domain A.
#[derive(Clone, Copy, Debug)]
pub struct FracField<A> {
    base: A,
}

impl<A: GcdDomain> FracField<A> {
    pub fn new(base: A) -> Self {
        FracField { base }
    }

    pub fn base(&self) -> &A {
        &self.base
    }

    pub fn from_base(&self, x: A::Elem) -> Frac<A::Elem> {
        Frac {
            num: x,
            den: self.base.one(),
        }
    }

    /// Builds `num/den` in reduced form. Panics on a zero denominator.
    pub fn make(&self, num: A::Elem, den: A::Elem) -> Frac<A::Elem> {
        assert!(!self.base.is_zero(&den), "zero denominator");
        self.reduce(num, den)
    }

    fn reduce(&self, num: A::Elem, den: A::Elem) -> Frac<A::Elem> {
        let b = &self.base;
        if b.is_zero(&num) {
            return Frac { num, den: b.one() };
        }
        let g = b.gcd(&num, &den);
        let num = b.exact_div(&num, &g).expect("gcd divides");
        let den = b.exact_div(&den, &g).expect("gcd divides");
        let (dn, du) = b.normalize_unit(&den);
        let num = b.exact_div(&num, &du).expect("division by a unit is exact");
        Frac { num, den: dn }
    }
}

impl<A: GcdDomain> GcdDomain for FracField<A> {
    type Elem = Frac<A::Elem>;

    fn zero(&self) -> Self::Elem {
        Frac {
            num: self.base.zero(),
            den: self.base.one(),
        }
    }

    fn one(&self) -> Self::Elem {
        Frac {
            num: self.base.one(),
            den: self.base.one(),
        }
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.num)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let num = self.base.add(
            &self.base.mul(&a.num, &b.den),
            &self.base.mul(&b.num, &a.den),
        );
        self.reduce(num, self.base.mul(&a.den, &b.den))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Frac {
            num: self.base.neg(&a.num),
            den: a.den.clone(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.reduce(self.base.mul(&a.num, &b.num), self.base.mul(&a.den, &b.den))
    }

    fn from_int(&self, n: &num_bigint::BigInt) -> Self::Elem {
        self.from_base(self.base.from_int(n))
    }

    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(b) {
            return None;
        }
        Some(self.reduce(self.base.mul(&a.num, &b.den), self.base.mul(&a.den, &b.num)))
    }

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if self.is_zero(a) && self.is_zero(b) {
            self.zero()
        } else {
            self.one()
        }
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        !self.is_zero(a)
    }

    fn normalize_unit(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem) {
        if self.is_zero(a) {
            (self.zero(), self.one())
        } else {
            (self.one(), a.clone())
        }
    }

    fn cmp_elems(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        // denominators are canonical, so cross-multiplied comparison in the
        // base order is well defined
        let lhs = self.base.mul(&a.num, &b.den);
        let rhs = self.base.mul(&b.num, &a.den);
        self.base.cmp_elems(&lhs, &rhs)
    }

    fn fmt_elem(&self, a: &Self::Elem) -> String {
        if self.base.is_unit(&a.den) {
            self.base.fmt_elem(&a.num)
        } else {
            format!(
                "{}/{}",
                self.base.fmt_elem(&a.num),
                self.base.fmt_elem(&a.den)
            )
        }
    }
}

impl<E: fmt::Display> fmt::Display for Frac<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::IntegerRing;
    use num_bigint::BigInt;

    fn q() -> FracField<IntegerRing> {
        FracField::new(IntegerRing)
    }

    fn fr(n: i64, d: i64) -> Frac<BigInt> {
        q().make(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn reduction_and_sign() {
        assert_eq!(fr(2, -4), fr(-1, 2));
        assert_eq!(fr(6, 3), fr(2, 1));
        assert_eq!(fr(0, 5), q().zero());
    }

    #[test]
    fn field_arithmetic() {
        let k = q();
        assert_eq!(k.add(&fr(1, 2), &fr(1, 3)), fr(5, 6));
        assert_eq!(k.mul(&fr(2, 3), &fr(3, 2)), k.one());
        assert_eq!(k.exact_div(&fr(1, 2), &fr(3, 4)), Some(fr(2, 3)));
        assert_eq!(k.exact_div(&fr(1, 2), &k.zero()), None);
    }
}
