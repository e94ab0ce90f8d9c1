//! Dense univariate polynomials over an arbitrary GCD-domain adapter,
//! used for contents and the polynomial-ring divisor splitting.

use super::GcdDomain;
use std::fmt;

/// Coefficient list, lowest degree first, with no trailing zero.
/// The empty list is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<E> {
    coeffs: Vec<E>,
}

impl<E> UniPoly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

impl<E> UniPoly<E> {
    pub fn from_coeffs<A: GcdDomain<Elem = E>>(ring: &A, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant<A: GcdDomain<Elem = E>>(ring: &A, c: E) -> Self {
        if ring.is_zero(&c) {
            Self::zero()
        } else {
            UniPoly { coeffs: vec![c] }
        }
    }

    pub fn add<A: GcdDomain<Elem = E>>(&self, ring: &A, other: &Self) -> Self
    where
        E: Clone,
    {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => ring.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(ring, out)
    }

    pub fn neg<A: GcdDomain<Elem = E>>(&self, ring: &A) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| ring.neg(c)).collect(),
        }
    }

    pub fn sub<A: GcdDomain<Elem = E>>(&self, ring: &A, other: &Self) -> Self
    where
        E: Clone,
    {
        self.add(ring, &other.neg(ring))
    }

    pub fn mul<A: GcdDomain<Elem = E>>(&self, ring: &A, other: &Self) -> Self
    where
        E: Clone,
    {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = ring.add(&out[i + j], &ring.mul(a, b));
            }
        }
        Self::from_coeffs(ring, out)
    }

    pub fn scale<A: GcdDomain<Elem = E>>(&self, ring: &A, c: &E) -> Self
    where
        E: Clone,
    {
        Self::from_coeffs(ring, self.coeffs.iter().map(|a| ring.mul(a, c)).collect())
    }

    /// Maps coefficients into another ring.
    pub fn map_coeffs<F, E2>(&self, f: F) -> UniPoly<E2>
    where
        F: Fn(&E) -> E2,
    {
        UniPoly {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Remainder of Euclidean division, valid when the divisor's leading
    /// coefficient is a unit (always over a field).
    pub fn rem_by_monic_lead<A: GcdDomain<Elem = E>>(&self, ring: &A, div: &Self) -> Option<Self>
    where
        E: Clone,
    {
        let dd = div.degree()?;
        let lc = div.leading().unwrap();
        let lc_inv = ring.exact_div(&ring.one(), lc)?;
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let factor = ring.mul(rem.leading().unwrap(), &lc_inv);
            let mut t = vec![ring.zero(); dr - dd];
            t.push(factor);
            let t = UniPoly::from_coeffs(ring, t);
            rem = rem.sub(ring, &t.mul(ring, div));
        }
        Some(rem)
    }

    pub fn fmt_with<A: GcdDomain<Elem = E>>(&self, ring: &A, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if ring.is_zero(c) {
                continue;
            }
            let cs = ring.fmt_elem(c);
            let (neg, cs_abs) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let needs_parens = cs_abs.contains(['+', '-', ' ']);
            let coeff_str = if needs_parens {
                format!("({cs_abs})")
            } else {
                cs_abs
            };
            match k {
                0 => out.push_str(&coeff_str),
                _ => {
                    if coeff_str != "1" {
                        out.push_str(&coeff_str);
                        out.push('*');
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        out
    }
}

/// The gcd of the coefficients, unit-normalized. Rejects the zero polynomial.
pub fn content<A: GcdDomain>(ring: &A, f: &UniPoly<A::Elem>) -> Result<A::Elem, ZeroPolynomial> {
    if f.is_zero() {
        return Err(ZeroPolynomial);
    }
    Ok(ring.gcd_many(f.coeffs()))
}

/// `f` divided by its content.
pub fn primitive_part<A: GcdDomain>(
    ring: &A,
    f: &UniPoly<A::Elem>,
) -> Result<UniPoly<A::Elem>, ZeroPolynomial> {
    let c = content(ring, f)?;
    Ok(UniPoly::from_coeffs(
        ring,
        f.coeffs()
            .iter()
            .map(|a| ring.exact_div(a, &c).expect("content divides"))
            .collect(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroPolynomial;

impl fmt::Display for ZeroPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "the zero polynomial has no content")
    }
}

impl std::error::Error for ZeroPolynomial {}
