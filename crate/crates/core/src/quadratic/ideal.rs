//! Ideals of a quadratic integer ring in Hermite normal form, prime
//! splitting, and comaximal decompositions of one.

use super::{QuadElement, QuadError, QuadRing};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A nonzero ideal with Z-basis (a, b + c*omega): a > 0, c > 0, c | a,
/// c | b, 0 <= b < a. The norm is a*c.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdealHNF {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl IdealHNF {
    pub fn one() -> Self {
        IdealHNF {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::one(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.c.is_one()
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.c
    }

    pub fn basis(&self) -> [QuadElement; 2] {
        [
            QuadElement::new(self.a.clone(), BigInt::zero()),
            QuadElement::new(self.b.clone(), self.c.clone()),
        ]
    }

    pub fn contains(&self, x: &QuadElement) -> bool {
        let (t, r) = x.v.div_rem(&self.c);
        if !r.is_zero() {
            return false;
        }
        (&x.u - &t * &self.b).mod_floor(&self.a).is_zero()
    }

    pub fn contains_ideal(&self, other: &IdealHNF) -> bool {
        other.basis().iter().all(|e| self.contains(e))
    }
}

/// Row reduction of a list of Z^2 vectors (coordinates in the basis
/// (1, omega)) to the canonical upper-triangular lattice basis.
fn hnf_rows(mut rows: Vec<(BigInt, BigInt)>) -> Option<IdealHNF> {
    rows.retain(|(u, v)| !u.is_zero() || !v.is_zero());
    if rows.is_empty() {
        return None;
    }
    // euclid on the omega coordinates until a single row carries them all
    loop {
        let mut idx: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].1.is_zero()).collect();
        if idx.len() <= 1 {
            break;
        }
        idx.sort_by_key(|&i| rows[i].1.abs());
        let pivot = idx[0];
        let (pu, pv) = rows[pivot].clone();
        for &i in &idx[1..] {
            let q = rows[i].1.div_floor(&pv);
            rows[i].0 -= &q * &pu;
            rows[i].1 -= &q * &pv;
        }
        rows.retain(|(u, v)| !u.is_zero() || !v.is_zero());
    }
    let omega_row = rows.iter().position(|(_, v)| !v.is_zero());
    let (mut b, mut c) = match omega_row {
        Some(i) => rows[i].clone(),
        None => return None, // rank 1: not an ideal of the full ring
    };
    if c.is_negative() {
        b = -b;
        c = -c;
    }
    // gcd of the rational-integer rows
    let mut a = BigInt::zero();
    for (u, v) in &rows {
        if v.is_zero() {
            a = a.gcd(u);
        }
    }
    if a.is_zero() {
        return None;
    }
    b = b.mod_floor(&a);
    Some(IdealHNF { a, b, c })
}

impl QuadRing {
    /// The ideal generated by a list of elements: HNF of the module
    /// spanned by each generator and omega times it.
    pub fn ideal_from_gens(&self, gens: &[QuadElement]) -> Result<IdealHNF, QuadError> {
        let mut rows = Vec::with_capacity(2 * gens.len());
        for g in gens {
            let wg = self.mul(&self.omega(), g);
            rows.push((g.u.clone(), g.v.clone()));
            rows.push((wg.u.clone(), wg.v.clone()));
        }
        let hnf = hnf_rows(rows).ok_or(QuadError::AllZeroGenerators)?;
        debug_assert!(self.is_ideal(&hnf));
        Ok(hnf)
    }

    pub fn principal_ideal(&self, x: &QuadElement) -> Result<IdealHNF, QuadError> {
        self.ideal_from_gens(std::slice::from_ref(x))
    }

    /// Closure of the HNF lattice under multiplication by omega.
    pub fn is_ideal(&self, i: &IdealHNF) -> bool {
        if !i.a.is_positive() || !i.c.is_positive() {
            return false;
        }
        i.basis()
            .iter()
            .all(|e| i.contains(&self.mul(&self.omega(), e)))
    }

    pub fn ideal_mul(&self, i: &IdealHNF, j: &IdealHNF) -> IdealHNF {
        let mut gens = Vec::with_capacity(4);
        for e in i.basis() {
            for f in j.basis() {
                gens.push(self.mul(&e, &f));
            }
        }
        self.ideal_from_gens(&gens)
            .expect("product of nonzero ideals is nonzero")
    }

    pub fn ideal_sum(&self, i: &IdealHNF, j: &IdealHNF) -> IdealHNF {
        let mut gens = Vec::with_capacity(4);
        gens.extend(i.basis());
        gens.extend(j.basis());
        self.ideal_from_gens(&gens).expect("sum of nonzero ideals")
    }

    pub fn ideal_pow(&self, i: &IdealHNF, n: u32) -> IdealHNF {
        let mut acc = IdealHNF::one();
        for _ in 0..n {
            acc = self.ideal_mul(&acc, i);
        }
        acc
    }

    /// Divisibility in the Dedekind sense: I | J iff I contains J.
    pub fn ideal_divides(&self, i: &IdealHNF, j: &IdealHNF) -> bool {
        i.contains_ideal(j)
    }

    /// An element u of I with 1 - u in J, for comaximal I and J. Tracks
    /// the row operations of the HNF reduction on tagged generators.
    pub fn comaximal_split(&self, i: &IdealHNF, j: &IdealHNF) -> Result<QuadElement, QuadError> {
        #[derive(Clone)]
        struct Row {
            u: BigInt,
            v: BigInt,
            wit: QuadElement, // component of the row lying in the first ideal
        }
        let mut rows: Vec<Row> = Vec::new();
        let mut push = |g: QuadElement, from_first: bool, ring: &QuadRing| {
            for e in [g.clone(), ring.mul(&ring.omega(), &g)] {
                rows.push(Row {
                    u: e.u.clone(),
                    v: e.v.clone(),
                    wit: if from_first { e } else { QuadElement::zero() },
                });
            }
        };
        for g in i.basis() {
            push(g, true, self);
        }
        for g in j.basis() {
            push(g, false, self);
        }
        let sub_scaled = |r: &mut Row, q: &BigInt, p: &Row, ring: &QuadRing| {
            r.u -= q * &p.u;
            r.v -= q * &p.v;
            let scaled = ring.scale_int(&p.wit, q);
            r.wit = ring.sub(&r.wit, &scaled);
        };
        // clear omega coordinates down to one row
        loop {
            let mut idx: Vec<usize> = (0..rows.len()).filter(|&k| !rows[k].v.is_zero()).collect();
            if idx.len() <= 1 {
                break;
            }
            idx.sort_by_key(|&k| rows[k].v.abs());
            let pivot = idx[0];
            let p = rows[pivot].clone();
            for &k in &idx[1..] {
                let q = rows[k].v.div_floor(&p.v);
                sub_scaled(&mut rows[k], &q, &p, self);
            }
        }
        // euclid on the rational-integer rows
        loop {
            let mut idx: Vec<usize> = (0..rows.len())
                .filter(|&k| rows[k].v.is_zero() && !rows[k].u.is_zero())
                .collect();
            if idx.len() <= 1 {
                break;
            }
            idx.sort_by_key(|&k| rows[k].u.abs());
            let pivot = idx[0];
            let p = rows[pivot].clone();
            for &k in &idx[1..] {
                let q = rows[k].u.div_floor(&p.u);
                sub_scaled(&mut rows[k], &q, &p, self);
            }
        }
        let unit_row = rows
            .iter()
            .find(|r| r.v.is_zero() && r.u.abs().is_one())
            .ok_or(QuadError::NotComaximal)?;
        let wit = if unit_row.u.is_negative() {
            self.neg(&unit_row.wit)
        } else {
            unit_row.wit.clone()
        };
        debug_assert!(i.contains(&wit));
        debug_assert!(j.contains(&self.sub(&self.one_elem(), &wit)));
        Ok(wit)
    }
}

/// How a rational prime decomposes in the ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SplitKind {
    Split,
    Inert,
    Ramified,
}

/// A height-one prime: the rational prime below it, its splitting type,
/// its HNF, and the residue degree. Ordered by (p, hnf) so conjugate
/// primes sort deterministically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeIdeal {
    pub p: u64,
    pub hnf: IdealHNF,
    pub kind: SplitKind,
    pub residue_degree: u8,
}

impl PrimeIdeal {
    /// Stable display name: P(p,ram), P(p,inert) or P(p,b+w) with b the
    /// second HNF generator offset.
    pub fn name(&self) -> String {
        match self.kind {
            SplitKind::Ramified => format!("P({},ram)", self.p),
            SplitKind::Inert => format!("P({},inert)", self.p),
            SplitKind::Split => {
                if self.hnf.b.is_zero() {
                    format!("P({},w)", self.p)
                } else {
                    format!("P({},{}+w)", self.p, self.hnf.b)
                }
            }
        }
    }
}

impl QuadRing {
    /// Roots of the minimal polynomial of omega modulo p.
    fn omega_roots_mod(&self, p: u64) -> Vec<u64> {
        let t = self.omega_trace() as i128;
        let m = self.omega_sq_const() as i128;
        let p = p as i128;
        (0..p)
            .filter(|&r| (r * r - t * r - m).rem_euclid(p) == 0)
            .map(|r| r as u64)
            .collect()
    }

    /// The primes above p, each tagged with its ramification data. The
    /// product with multiplicities (2 for ramified) is the ideal (p).
    pub fn split_prime(&self, p: u64) -> Result<Vec<PrimeIdeal>, QuadError> {
        if !crate::rings::is_prime_u64(p) {
            return Err(QuadError::CompositePrime(p));
        }
        let roots = self.omega_roots_mod(p);
        let p_big = BigInt::from(p);
        let ramified = self.discriminant().mod_floor(&p_big).is_zero();
        match roots.len() {
            0 => {
                let hnf = self
                    .principal_ideal(&QuadElement::new(p_big, BigInt::zero()))
                    .expect("nonzero");
                Ok(vec![PrimeIdeal {
                    p,
                    hnf,
                    kind: SplitKind::Inert,
                    residue_degree: 2,
                }])
            }
            1 => {
                debug_assert!(ramified);
                let r = BigInt::from(roots[0]);
                let gen = QuadElement::new((-r).mod_floor(&p_big), BigInt::one());
                let hnf = self
                    .ideal_from_gens(&[QuadElement::new(p_big, BigInt::zero()), gen])
                    .expect("nonzero");
                Ok(vec![PrimeIdeal {
                    p,
                    hnf,
                    kind: SplitKind::Ramified,
                    residue_degree: 1,
                }])
            }
            2 => {
                let mut out = Vec::with_capacity(2);
                for r in roots {
                    let r = BigInt::from(r);
                    let gen = QuadElement::new((-r).mod_floor(&p_big), BigInt::one());
                    let hnf = self
                        .ideal_from_gens(&[QuadElement::new(p_big.clone(), BigInt::zero()), gen])
                        .expect("nonzero");
                    out.push(PrimeIdeal {
                        p,
                        hnf,
                        kind: SplitKind::Split,
                        residue_degree: 1,
                    });
                }
                out.sort();
                Ok(out)
            }
            _ => unreachable!("a quadratic has at most two roots mod p"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zm5() -> QuadRing {
        QuadRing::new(-5).unwrap()
    }

    fn el(ring: &QuadRing, u: i64, v: i64) -> QuadElement {
        let _ = ring;
        QuadElement::new(BigInt::from(u), BigInt::from(v))
    }

    #[test]
    fn hnf_of_small_ideals() {
        let r = zm5();
        // (2, 1+w) has norm 2
        let i = r.ideal_from_gens(&[el(&r, 2, 0), el(&r, 1, 1)]).unwrap();
        assert_eq!(i.norm(), BigInt::from(2));
        assert!(r.is_ideal(&i));
        // the unit ideal
        let one = r.ideal_from_gens(&[el(&r, 1, 0)]).unwrap();
        assert_eq!(one, IdealHNF::one());
        // (3) is principal with norm 9
        let three = r.principal_ideal(&el(&r, 3, 0)).unwrap();
        assert_eq!(three.norm(), BigInt::from(9));
        assert!(r.ideal_from_gens(&[el(&r, 0, 0)]).is_err());
    }

    #[test]
    fn ramified_square_above_two() {
        let r = zm5();
        let p2 = r.ideal_from_gens(&[el(&r, 2, 0), el(&r, 1, 1)]).unwrap();
        let sq = r.ideal_mul(&p2, &p2);
        assert_eq!(sq, r.principal_ideal(&el(&r, 2, 0)).unwrap());
    }

    #[test]
    fn split_product_above_three() {
        let r = zm5();
        let p3 = r.ideal_from_gens(&[el(&r, 3, 0), el(&r, 1, 1)]).unwrap();
        let p3c = r.ideal_from_gens(&[el(&r, 3, 0), el(&r, 1, -1)]).unwrap();
        assert_eq!(
            r.ideal_mul(&p3, &p3c),
            r.principal_ideal(&el(&r, 3, 0)).unwrap()
        );
    }

    #[test]
    fn principal_factorization_of_one_plus_omega() {
        let r = zm5();
        let p2 = r.ideal_from_gens(&[el(&r, 2, 0), el(&r, 1, 1)]).unwrap();
        let p3 = r.ideal_from_gens(&[el(&r, 3, 0), el(&r, 1, 1)]).unwrap();
        assert_eq!(
            r.ideal_mul(&p2, &p3),
            r.principal_ideal(&el(&r, 1, 1)).unwrap()
        );
        assert_eq!(
            r.principal_ideal(&el(&r, 1, 1)).unwrap().norm(),
            BigInt::from(6)
        );
    }

    #[test]
    fn splitting_types_for_minus_five() {
        let r = zm5();
        let s2 = r.split_prime(2).unwrap();
        assert_eq!(s2.len(), 1);
        assert_eq!(s2[0].kind, SplitKind::Ramified);
        assert_eq!(
            s2[0].hnf,
            r.ideal_from_gens(&[el(&r, 2, 0), el(&r, 1, 1)]).unwrap()
        );

        let s3 = r.split_prime(3).unwrap();
        assert_eq!(s3.len(), 2);
        assert!(s3.iter().all(|q| q.kind == SplitKind::Split));

        // -5 is a non-residue mod 11
        let s11 = r.split_prime(11).unwrap();
        assert_eq!(s11.len(), 1);
        assert_eq!(s11[0].kind, SplitKind::Inert);
        assert_eq!(s11[0].residue_degree, 2);

        assert!(r.split_prime(6).is_err());
    }

    #[test]
    fn splitting_covers_p() {
        for d in [-5i64, -1, 2, 5, -7, 13] {
            let r = QuadRing::new(d).unwrap();
            for p in [2u64, 3, 5, 7, 11, 13] {
                let primes = r.split_prime(p).unwrap();
                let mut prod = IdealHNF::one();
                for q in &primes {
                    let mult = if q.kind == SplitKind::Ramified { 2 } else { 1 };
                    for _ in 0..mult {
                        prod = r.ideal_mul(&prod, &q.hnf);
                    }
                }
                let p_ideal = r
                    .principal_ideal(&QuadElement::new(BigInt::from(p), BigInt::zero()))
                    .unwrap();
                assert_eq!(prod, p_ideal, "product of primes above {p} in d={d}");
            }
        }
    }

    #[test]
    fn comaximal_split_witness() {
        let r = zm5();
        let p2 = r.split_prime(2).unwrap()[0].hnf.clone();
        let p3 = r.split_prime(3).unwrap()[0].hnf.clone();
        let u = r.comaximal_split(&p2, &p3).unwrap();
        assert!(p2.contains(&u));
        assert!(p3.contains(&r.sub(&r.one_elem(), &u)));
        // non-comaximal pair is rejected
        assert!(r.comaximal_split(&p2, &p2).is_err());
    }

    #[test]
    fn dedekind_three_ideal_identity() {
        let r = zm5();
        let fa = r.ideal_from_gens(&[el(&r, 2, 0), el(&r, 1, 1)]).unwrap();
        let fb = r.ideal_from_gens(&[el(&r, 3, 0), el(&r, 1, 1)]).unwrap();
        let fc = r.principal_ideal(&el(&r, 1, 2)).unwrap();
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
