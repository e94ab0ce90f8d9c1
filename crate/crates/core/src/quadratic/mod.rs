//! Quadratic integer rings as a fully worked Krull instance: divisor
//! vectors over height-one primes, simultaneous approximation, the
//! one-and-a-half theorem and the norm morphism down to the divisors of Z.

mod ideal;

pub use ideal::{IdealHNF, PrimeIdeal, SplitKind};

use crate::divisor::Divisor;
use crate::lgroup::FreeLGroupElement;
use crate::rings::IntegerRing;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// Divisors of a quadratic ring, decomposed over prime-ideal atoms.
pub type KrullDivisor = FreeLGroupElement<PrimeIdeal>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadError {
    /// d must be a squarefree integer other than 0 and 1.
    BadDiscriminant(i64),
    ZeroElement,
    AllZeroGenerators,
    CompositePrime(u64),
    DuplicateAtoms,
    NotComaximal,
    /// Inputs violated a stated precondition.
    Precondition(&'static str),
    /// A norm exceeded the trial-division bound.
    FactorBound {
        value: BigInt,
        bound: u64,
    },
}

impl fmt::Display for QuadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadError::BadDiscriminant(d) => {
                write!(f, "{d} is not a squarefree integer distinct from 0 and 1")
            }
            QuadError::ZeroElement => write!(f, "zero has no divisor"),
            QuadError::AllZeroGenerators => write!(f, "an ideal needs a nonzero generator"),
            QuadError::CompositePrime(p) => write!(f, "{p} is not prime"),
            QuadError::DuplicateAtoms => write!(f, "prime atoms must be pairwise distinct"),
            QuadError::NotComaximal => write!(f, "ideals are not comaximal"),
            QuadError::Precondition(msg) => write!(f, "{msg}"),
            QuadError::FactorBound { value, bound } => {
                write!(f, "cannot factor {value} by trial division up to {bound}")
            }
        }
    }
}

impl std::error::Error for QuadError {}

/// The element u + v*omega of the maximal order of Q(sqrt d).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadElement {
    pub u: BigInt,
    pub v: BigInt,
}

impl QuadElement {
    pub fn new(u: BigInt, v: BigInt) -> Self {
        QuadElement { u, v }
    }

    pub fn zero() -> Self {
        QuadElement::new(BigInt::zero(), BigInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
}

/// The ring of integers of Q(sqrt d) for squarefree d: omega is sqrt d
/// when d = 2, 3 mod 4 and (1 + sqrt d)/2 when d = 1 mod 4, so the ring
/// is always the maximal order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadRing {
    d: i64,
    half_mode: bool,
    factor_bound: u64,
}

fn is_squarefree(d: i64) -> bool {
    let mut n = d.unsigned_abs();
    let mut q = 2u64;
    while q * q <= n {
        if n % (q * q) == 0 {
            return false;
        }
        while n % q == 0 {
            n /= q;
        }
        q += 1;
    }
    true
}

impl QuadRing {
    pub fn new(d: i64) -> Result<Self, QuadError> {
        Self::with_factor_bound(d, DEFAULT_FACTOR_BOUND)
    }

    pub fn with_factor_bound(d: i64, factor_bound: u64) -> Result<Self, QuadError> {
        if d == 0 || d == 1 || d.unsigned_abs() > 1_000_000 || !is_squarefree(d) {
            return Err(QuadError::BadDiscriminant(d));
        }
        Ok(QuadRing {
            d,
            half_mode: d.rem_euclid(4) == 1,
            factor_bound,
        })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn factor_bound(&self) -> u64 {
        self.factor_bound
    }

    pub fn discriminant(&self) -> BigInt {
        if self.half_mode {
            BigInt::from(self.d)
        } else {
            BigInt::from(4 * self.d)
        }
    }

    /// Trace of omega: the t in omega^2 = t*omega + m.
    pub(crate) fn omega_trace(&self) -> i64 {
        if self.half_mode {
            1
        } else {
            0
        }
    }

    /// Constant of the omega relation: the m in omega^2 = t*omega + m.
    pub(crate) fn omega_sq_const(&self) -> i64 {
        if self.half_mode {
            (self.d - 1) / 4
        } else {
            self.d
        }
    }

    pub fn omega(&self) -> QuadElement {
        QuadElement::new(BigInt::zero(), BigInt::one())
    }

    pub fn one_elem(&self) -> QuadElement {
        QuadElement::new(BigInt::one(), BigInt::zero())
    }

    pub fn from_i64(&self, x: i64) -> QuadElement {
        QuadElement::new(BigInt::from(x), BigInt::zero())
    }

    pub fn add(&self, x: &QuadElement, y: &QuadElement) -> QuadElement {
        QuadElement::new(&x.u + &y.u, &x.v + &y.v)
    }

    pub fn sub(&self, x: &QuadElement, y: &QuadElement) -> QuadElement {
        QuadElement::new(&x.u - &y.u, &x.v - &y.v)
    }

    pub fn neg(&self, x: &QuadElement) -> QuadElement {
        QuadElement::new(-&x.u, -&x.v)
    }

    pub fn scale_int(&self, x: &QuadElement, n: &BigInt) -> QuadElement {
        QuadElement::new(&x.u * n, &x.v * n)
    }

    pub fn mul(&self, x: &QuadElement, y: &QuadElement) -> QuadElement {
        let t = BigInt::from(self.omega_trace());
        let m = BigInt::from(self.omega_sq_const());
        let cross = &x.u * &y.v + &x.v * &y.u;
        let vv = &x.v * &y.v;
        QuadElement::new(&x.u * &y.u + &vv * &m, cross + vv * t)
    }

    pub fn conj(&self, x: &QuadElement) -> QuadElement {
        // conj(omega) = t - omega
        let t = BigInt::from(self.omega_trace());
        QuadElement::new(&x.u + &x.v * t, -&x.v)
    }

    pub fn norm(&self, x: &QuadElement) -> BigInt {
        let prod = self.mul(x, &self.conj(x));
        debug_assert!(prod.v.is_zero());
        prod.u
    }

    pub fn pow(&self, x: &QuadElement, n: u32) -> QuadElement {
        let mut acc = self.one_elem();
        for _ in 0..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn is_unit(&self, x: &QuadElement) -> bool {
        !x.is_zero() && self.norm(x).abs().is_one()
    }

    /// Exact division in the ring: x/y when y is nonzero and divides x.
    pub fn exact_div(&self, x: &QuadElement, y: &QuadElement) -> Option<QuadElement> {
        if y.is_zero() {
            return None;
        }
        let n = self.norm(y);
        let z = self.mul(x, &self.conj(y));
        let (qu, ru) = z.u.div_rem(&n);
        let (qv, rv) = z.v.div_rem(&n);
        (ru.is_zero() && rv.is_zero()).then_some(QuadElement::new(qu, qv))
    }

    pub fn fmt_elem(&self, x: &QuadElement) -> String {
        if x.v.is_zero() {
            return x.u.to_string();
        }
        let omega_part = if x.v.is_one() {
            "w".to_string()
        } else if (-&x.v).is_one() {
            "-w".to_string()
        } else {
            format!("{}*w", x.v)
        };
        if x.u.is_zero() {
            omega_part
        } else if omega_part.starts_with('-') {
            format!("{} - {}", x.u, omega_part.trim_start_matches('-'))
        } else {
            format!("{} + {}", x.u, omega_part)
        }
    }

    /// Prime factors of |n| by trial division, within the configured bound.
    fn factor_norm(&self, n: &BigInt) -> Result<Vec<(u64, u32)>, QuadError> {
        let mut n = n.abs();
        let mut out = Vec::new();
        let mut p = 2u64;
        while BigInt::from(p) * BigInt::from(p) <= n {
            if p > self.factor_bound {
                return Err(QuadError::FactorBound {
                    value: n,
                    bound: self.factor_bound,
                });
            }
            let mut e = 0u32;
            loop {
                let (q, r) = n.div_rem(&BigInt::from(p));
                if r.is_zero() {
                    n = q;
                    e += 1;
                } else {
                    break;
                }
            }
            if e > 0 {
                out.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if n > BigInt::one() {
            let (_, digits) = n.to_u64_digits();
            if digits.len() > 1 || digits[0] > self.factor_bound {
                return Err(QuadError::FactorBound {
                    value: n,
                    bound: self.factor_bound,
                });
            }
            out.push((digits[0], 1));
        }
        Ok(out)
    }

    /// Valuation of a nonzero element at a prime: the largest k with
    /// x in P^k, located by doubling and binary search on containment.
    pub fn valuation_element(&self, x: &QuadElement, prime: &PrimeIdeal) -> u32 {
        assert!(!x.is_zero());
        if !prime.hnf.contains(x) {
            return 0;
        }
        let mut hi = 1u32;
        while self.ideal_pow(&prime.hnf, hi * 2).contains(x) {
            hi *= 2;
        }
        // invariant: P^hi contains x, P^(2hi) does not
        let mut lo = hi;
        let mut hi = hi * 2;
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if self.ideal_pow(&prime.hnf, mid).contains(x) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// Valuation of an ideal at a prime, by containment I <= P^k.
    pub fn valuation_ideal(&self, i: &IdealHNF, prime: &PrimeIdeal) -> u32 {
        if !prime.hnf.contains_ideal(i) {
            return 0;
        }
        let mut lo = 1u32;
        let mut hi = 2u32;
        while self.ideal_pow(&prime.hnf, hi).contains_ideal(i) {
            lo = hi;
            hi *= 2;
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if self.ideal_pow(&prime.hnf, mid).contains_ideal(i) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// The divisor of a nonzero element: valuations over the primes above
    /// the prime factors of its norm.
    pub fn dv_element(&self, x: &QuadElement) -> Result<KrullDivisor, QuadError> {
        if x.is_zero() {
            return Err(QuadError::ZeroElement);
        }
        let n = self.norm(x);
        let mut coeffs = Vec::new();
        for (p, _) in self.factor_norm(&n)? {
            for prime in self.split_prime(p)? {
                let v = self.valuation_element(x, &prime);
                if v > 0 {
                    coeffs.push((prime, v as i64));
                }
            }
        }
        Ok(KrullDivisor::from_coeffs(coeffs))
    }

    /// The divisor of a nonzero ideal.
    pub fn dv_ideal(&self, i: &IdealHNF) -> Result<KrullDivisor, QuadError> {
        let mut coeffs = Vec::new();
        for (p, _) in self.factor_norm(&i.norm())? {
            for prime in self.split_prime(p)? {
                let v = self.valuation_ideal(i, &prime);
                if v > 0 {
                    coeffs.push((prime, v as i64));
                }
            }
        }
        Ok(KrullDivisor::from_coeffs(coeffs))
    }

    /// Rebuilds the ideal from its divisor: product of prime powers.
    pub fn ideal_from_divisor(&self, dv: &KrullDivisor) -> Result<IdealHNF, QuadError> {
        let mut acc = IdealHNF::one();
        for (prime, e) in dv.iter() {
            if e < 0 {
                return Err(QuadError::Precondition("divisor must be >= 0"));
            }
            acc = self.ideal_mul(&acc, &self.ideal_pow(&prime.hnf, e as u32));
        }
        Ok(acc)
    }

    /// An element of P^n not in P^(n+1): one of the two HNF basis vectors
    /// of P^n always works.
    fn uniformizer_power(&self, prime: &PrimeIdeal, n: u32) -> QuadElement {
        if n == 0 {
            return self.one_elem();
        }
        let pn = self.ideal_pow(&prime.hnf, n);
        let pn1 = self.ideal_mul(&pn, &prime.hnf);
        pn.basis()
            .into_iter()
            .find(|e| !pn1.contains(e))
            .expect("P^n strictly contains P^(n+1)")
    }

    /// Canonical representative of x modulo the lattice of an ideal,
    /// keeping coordinates small.
    fn reduce_mod_ideal(&self, x: &QuadElement, i: &IdealHNF) -> QuadElement {
        let t = x.v.div_floor(&i.c);
        let u1 = &x.u - &t * &i.b;
        let v1 = &x.v - &t * &i.c;
        let s = u1.div_floor(&i.a);
        QuadElement::new(u1 - s * &i.a, v1)
    }

    /// Simultaneous approximation: an element with exactly the requested
    /// valuation at each of the pairwise distinct atoms, and a residual
    /// divisor orthogonal to all of them. Solves x = t_i mod P_i^(n_i+1)
    /// by iterated comaximal splittings.
    pub fn approx(&self, atoms: &[PrimeIdeal], exps: &[u32]) -> Result<QuadElement, QuadError> {
        if atoms.len() != exps.len() {
            return Err(QuadError::Precondition(
                "atoms and exponents must have equal length",
            ));
        }
        for (i, a) in atoms.iter().enumerate() {
            for b in &atoms[i + 1..] {
                if a == b {
                    return Err(QuadError::DuplicateAtoms);
                }
            }
        }
        if atoms.is_empty() {
            return Ok(self.one_elem());
        }
        let mut x = self.uniformizer_power(&atoms[0], exps[0]);
        let mut modulus = self.ideal_pow(&atoms[0].hnf, exps[0] + 1);
        for (prime, &n) in atoms.iter().zip(exps).skip(1) {
            let target = self.uniformizer_power(prime, n);
            let q = self.ideal_pow(&prime.hnf, n + 1);
            // 1 = u + v with u in modulus, v in q;
            // then x*v + target*u = x mod modulus, = target mod q
            let u = self.comaximal_split(&modulus, &q)?;
            let v = self.sub(&self.one_elem(), &u);
            x = self.add(&self.mul(&x, &v), &self.mul(&target, &u));
            modulus = self.ideal_mul(&modulus, &q);
            x = self.reduce_mod_ideal(&x, &modulus);
        }
        debug_assert!(!x.is_zero());
        Ok(x)
    }

    /// The one-and-a-half theorem: for 0 <= alpha <= dv(a), an element b
    /// with dv(a^n) /\ dv(b) = alpha for every n >= 1. Computed by
    /// approximating alpha on the whole support of dv(a).
    pub fn one_and_a_half(
        &self,
        alpha: &KrullDivisor,
        a: &QuadElement,
    ) -> Result<QuadElement, QuadError> {
        if !alpha.is_nonneg() {
            return Err(QuadError::Precondition("divisor must be >= 0"));
        }
        let dv_a = self.dv_element(a)?;
        if !alpha.leq(&dv_a) {
            return Err(QuadError::Precondition(
                "divisor must satisfy alpha <= dv(a)",
            ));
        }
        let atoms: Vec<PrimeIdeal> = dv_a.support().cloned().collect();
        let exps: Vec<u32> = atoms.iter().map(|p| alpha.coeff(p) as u32).collect();
        self.approx(&atoms, &exps)
    }

    /// For nonzero a, b: elements (c, d) with a/b = c/d and
    /// dv(a, b, c, d) = 0, satisfying (a,b)(a,c) = (a)(a,b,c,d).
    pub fn four_elements(
        &self,
        a: &QuadElement,
        b: &QuadElement,
    ) -> Result<(QuadElement, QuadElement), QuadError> {
        if a.is_zero() || b.is_zero() {
            return Err(QuadError::ZeroElement);
        }
        let dv_a = self.dv_element(a)?;
        let dv_b = self.dv_element(b)?;
        let alpha = dv_a.meet(&dv_b);
        let beta = dv_a.sub(&alpha);
        let c = self.one_and_a_half(&beta, a)?;
        let bc = self.mul(b, &c);
        let d = self
            .exact_div(&bc, a)
            .expect("dv(b) + dv(c) >= dv(a) forces divisibility");
        Ok((c, d))
    }

    /// The norm morphism Div B -> Div Z: each prime atom over p with
    /// residue degree f maps to f * dv(p).
    pub fn norm_divisor(&self, beta: &KrullDivisor) -> Divisor<BigInt> {
        let z = IntegerRing;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (prime, e) in beta.iter() {
            let contribution = e * prime.residue_degree as i64;
            let p = BigInt::from(prime.p);
            match contribution.cmp(&0) {
                std::cmp::Ordering::Greater => {
                    num *= p.pow(contribution as u32);
                }
                std::cmp::Ordering::Less => {
                    den *= p.pow((-contribution) as u32);
                }
                std::cmp::Ordering::Equal => {}
            }
        }
        Divisor::fraction(&z, &num, &den).expect("nonzero by construction")
    }

    /// Image of a divisor of Z under the inclusion Div Z -> Div B.
    pub fn embed_z_divisor(&self, alpha: &Divisor<BigInt>) -> Result<KrullDivisor, QuadError> {
        let num = QuadElement::new(alpha.num().clone(), BigInt::zero());
        let den = QuadElement::new(alpha.den().clone(), BigInt::zero());
        Ok(self.dv_element(&num)?.sub(&self.dv_element(&den)?))
    }

    pub fn fmt_divisor(&self, dv: &KrullDivisor) -> String {
        if dv.is_zero() {
            return "{}".to_string();
        }
        let parts: Vec<String> = dv
            .iter()
            .map(|(p, e)| format!("{}:{}", p.name(), e))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zm5() -> QuadRing {
        QuadRing::new(-5).unwrap()
    }

    fn el(u: i64, v: i64) -> QuadElement {
        QuadElement::new(BigInt::from(u), BigInt::from(v))
    }

    #[test]
    fn ring_construction() {
        assert!(QuadRing::new(-5).is_ok());
        assert!(QuadRing::new(5).is_ok());
        assert_eq!(QuadRing::new(0), Err(QuadError::BadDiscriminant(0)));
        assert_eq!(QuadRing::new(1), Err(QuadError::BadDiscriminant(1)));
        assert_eq!(QuadRing::new(12), Err(QuadError::BadDiscriminant(12)));
        assert_eq!(QuadRing::new(-4), Err(QuadError::BadDiscriminant(-4)));
    }

    #[test]
    fn norms_and_conjugates() {
        let r = zm5();
        assert_eq!(r.norm(&el(1, 1)), BigInt::from(6)); // N(1 + sqrt(-5))
        assert_eq!(r.norm(&el(3, 0)), BigInt::from(9));
        // d = 5 uses the half-integer basis: N(omega) = -1
        let r5 = QuadRing::new(5).unwrap();
        assert_eq!(r5.norm(&r5.omega()), BigInt::from(-1));
        assert!(r5.is_unit(&r5.omega()));
    }

    #[test]
    fn element_division() {
        let r = zm5();
        let x = r.mul(&el(1, 1), &el(2, 3));
        assert_eq!(r.exact_div(&x, &el(1, 1)), Some(el(2, 3)));
        assert_eq!(r.exact_div(&el(1, 1), &el(2, 0)), None);
    }

    #[test]
    fn divisor_of_one_plus_omega() {
        let r = zm5();
        let dv = r.dv_element(&el(1, 1)).unwrap();
        let p2 = r.split_prime(2).unwrap()[0].clone();
        let threes = r.split_prime(3).unwrap();
        // exactly one prime above 3 divides 1 + omega
        let above3: Vec<u32> = threes
            .iter()
            .map(|p| r.valuation_element(&el(1, 1), p))
            .collect();
        assert_eq!(above3.iter().sum::<u32>(), 1);
        assert_eq!(dv.coeff(&p2), 1);
        assert_eq!(dv.iter().count(), 2);
        // the conjugate lands on the conjugate prime above 3
        let dvc = r.dv_element(&el(1, -1)).unwrap();
        assert_eq!(dvc.coeff(&p2), 1);
        assert_eq!(dv.meet(&dvc), KrullDivisor::from_coeffs([(p2, 1)]));
    }

    #[test]
    fn dv_of_units_is_zero() {
        let r = zm5();
        assert!(r.dv_element(&el(1, 0)).unwrap().is_zero());
        assert!(r.dv_element(&el(-1, 0)).unwrap().is_zero());
        assert_eq!(r.dv_element(&el(0, 0)), Err(QuadError::ZeroElement));
    }

    #[test]
    fn ideal_divisor_reconstructs() {
        let r = zm5();
        let i = r.ideal_from_gens(&[el(6, 0), el(2, 2)]).unwrap();
        let dv = r.dv_ideal(&i).unwrap();
        assert_eq!(r.ideal_from_divisor(&dv).unwrap(), i);
    }

    #[test]
    fn approx_hits_requested_valuations() {
        let r = zm5();
        let p2 = r.split_prime(2).unwrap()[0].clone();
        let p3 = r.split_prime(3).unwrap()[0].clone();
        let a = r.approx(&[p2.clone(), p3.clone()], &[1, 1]).unwrap();
        assert_eq!(r.valuation_element(&a, &p2), 1);
        assert_eq!(r.valuation_element(&a, &p3), 1);

        let b = r.approx(std::slice::from_ref(&p2), &[0]).unwrap();
        assert_eq!(r.valuation_element(&b, &p2), 0);

        let c = r.approx(&[p2.clone(), p3.clone()], &[2, 0]).unwrap();
        assert_eq!(r.valuation_element(&c, &p2), 2);
        assert_eq!(r.valuation_element(&c, &p3), 0);

        assert_eq!(
            r.approx(&[p2.clone(), p2], &[1, 2]),
            Err(QuadError::DuplicateAtoms)
        );
    }

    #[test]
    fn one_and_a_half_in_z_sqrt_minus_five() {
        let r = zm5();
        let p2 = r.split_prime(2).unwrap()[0].clone();
        let alpha = KrullDivisor::from_coeffs([(p2.clone(), 1)]);
        let a = el(2, 0);
        let b = r.one_and_a_half(&alpha, &a).unwrap();
        let dv_a = r.dv_element(&a).unwrap();
        for n in 1..=3 {
            let mut meet = KrullDivisor::zero();
            for (prime, va) in dv_a.iter() {
                let vb = r.valuation_element(&b, prime) as i64;
                let m = (n * va).min(vb);
                if m != 0 {
                    meet = meet.add(&KrullDivisor::from_coeffs([(prime.clone(), m)]));
                }
            }
            assert_eq!(meet, alpha);
        }
    }

    #[test]
    fn four_elements_identities() {
        let r = zm5();
        let a = el(2, 0);
        let b = el(1, 1);
        let (c, d) = r.four_elements(&a, &b).unwrap();
        // a d = b c
        assert_eq!(r.mul(&a, &d), r.mul(&b, &c));
        // (a,b,c,d) is the unit ideal
        let full = r
            .ideal_from_gens(&[a.clone(), b.clone(), c.clone(), d.clone()])
            .unwrap();
        assert!(full.is_one());
        // (a,b)(a,c) = (a)(a,b,c,d)
        let ab = r.ideal_from_gens(&[a.clone(), b]).unwrap();
        let ac = r.ideal_from_gens(&[a.clone(), c]).unwrap();
        let lhs = r.ideal_mul(&ab, &ac);
        let rhs = r.ideal_mul(&r.principal_ideal(&a).unwrap(), &full);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ideal_laws_on_random_inputs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        let r = zm5();
        let random_ideal = |rng: &mut rand_chacha::ChaCha8Rng| loop {
            let gens: Vec<QuadElement> = (0..2)
                .map(|_| el(rng.gen_range(-9..=9), rng.gen_range(-9..=9)))
                .collect();
            if let Ok(i) = r.ideal_from_gens(&gens) {
                return i;
            }
        };
        for _ in 0..40 {
            let i = random_ideal(&mut rng);
            let j = random_ideal(&mut rng);
            // norm is multiplicative
            assert_eq!(r.ideal_mul(&i, &j).norm(), i.norm() * j.norm());
            // divisibility is containment is divisor order
            let prod = r.ideal_mul(&i, &j);
            assert!(r.ideal_divides(&i, &prod));
            let dv_i = r.dv_ideal(&i).unwrap();
            let dv_prod = r.dv_ideal(&prod).unwrap();
            assert!(dv_i.leq(&dv_prod));
            assert_eq!(
                r.ideal_divides(&i, &j),
                r.dv_ideal(&j).map(|d| dv_i.leq(&d)).unwrap()
            );
            // the divisor vanishes exactly on the unit ideal
            assert_eq!(dv_i.is_zero(), i.is_one());
        }
    }

    #[test]
    fn dedekind_identity_on_random_triples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(22);
        let r = zm5();
        let random_ideal = |rng: &mut rand_chacha::ChaCha8Rng| loop {
            let gens: Vec<QuadElement> = (0..2)
                .map(|_| el(rng.gen_range(-6..=6), rng.gen_range(-6..=6)))
                .collect();
            if let Ok(i) = r.ideal_from_gens(&gens) {
                return i;
            }
        };
        for _ in 0..25 {
            let fa = random_ideal(&mut rng);
            let fb = random_ideal(&mut rng);
            let fc = random_ideal(&mut rng);
            let lhs = r.ideal_mul(
                &r.ideal_mul(&r.ideal_sum(&fa, &fb), &r.ideal_sum(&fb, &fc)),
                &r.ideal_sum(&fc, &fa),
            );
            let sum3 = r.ideal_sum(&r.ideal_sum(&fa, &fb), &fc);
            let prods = r.ideal_sum(
                &r.ideal_sum(&r.ideal_mul(&fa, &fb), &r.ideal_mul(&fb, &fc)),
                &r.ideal_mul(&fa, &fc),
            );
            assert_eq!(lhs, r.ideal_mul(&sum3, &prods));
        }
    }

    #[test]
    fn four_elements_with_equal_inputs() {
        let r = zm5();
        let a = el(1, 1);
        let (c, d) = r.four_elements(&a, &a).unwrap();
        assert_eq!(r.mul(&a, &d), r.mul(&a, &c));
        assert!(r
            .ideal_from_gens(&[a.clone(), a.clone(), c, d])
            .unwrap()
            .is_one());
    }

    #[test]
    fn norm_divisor_values() {
        let r = zm5();
        let z = IntegerRing;
        let p2 = r.split_prime(2).unwrap()[0].clone();
        let n = r.norm_divisor(&KrullDivisor::from_coeffs([(p2, 1)]));
        assert_eq!(n, Divisor::principal(&z, &BigInt::from(2)).unwrap());

        // N(dv(1 + omega)) = dv(N(1 + omega)) = dv(6)
        let dv = r.dv_element(&el(1, 1)).unwrap();
        assert_eq!(
            r.norm_divisor(&dv),
            Divisor::principal(&z, &BigInt::from(6)).unwrap()
        );

        // N of the embedded dv(3) is 2 * dv(3)
        let three = Divisor::principal(&z, &BigInt::from(3)).unwrap();
        let embedded = r.embed_z_divisor(&three).unwrap();
        assert_eq!(r.norm_divisor(&embedded), three.add(&z, &three));
    }
}
