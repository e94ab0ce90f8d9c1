//! Partial decomposition bases over any GCD-domain adapter: pairwise
//! refinement of a family into a pairwise-coprime basis, with exact
//! reconstruction of every input as unit times basis powers.

use crate::rings::GcdDomain;
use std::fmt;

/// A pairwise-coprime basis for a family of ring elements. Input `i`
/// reconstructs as `units[i] * prod_j basis[j]^exponents[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionBasis<E> {
    pub basis: Vec<E>,
    pub exponents: Vec<Vec<u32>>,
    pub units: Vec<E>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RefineError {
    EmptyInput,
    ZeroInput,
    EmptySubset,
    NonzeroSum,
}

impl fmt::Display for RefineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RefineError::EmptyInput => write!(f, "refinement needs at least one element"),
            RefineError::ZeroInput => write!(f, "zero elements cannot be refined"),
            RefineError::EmptySubset => write!(f, "subset of inputs must be nonempty"),
            RefineError::NonzeroSum => write!(f, "elements must sum to zero"),
        }
    }
}

impl std::error::Error for RefineError {}

/// Pairwise factor refinement. Repeatedly replaces a pair (p, q) with a
/// nontrivial g = gcd(p, q) by (p/g, g, q/g), dropping units, until no
/// pair shares a factor. Basis elements need not be irreducible.
pub fn refine<A: GcdDomain>(
    ring: &A,
    inputs: &[A::Elem],
) -> Result<DecompositionBasis<A::Elem>, RefineError> {
    if inputs.is_empty() {
        return Err(RefineError::EmptyInput);
    }
    if inputs.iter().any(|x| ring.is_zero(x)) {
        return Err(RefineError::ZeroInput);
    }

    let mut pool: Vec<A::Elem> = inputs
        .iter()
        .map(|x| ring.normalize(x))
        .filter(|x| !ring.is_unit(x))
        .collect();

    // fixed point: a full pass finds no pair with a nontrivial gcd
    'outer: loop {
        for i in 0..pool.len() {
            for j in (i + 1)..pool.len() {
                let g = ring.gcd(&pool[i], &pool[j]);
                if ring.is_unit(&g) {
                    continue;
                }
                let p = ring.exact_div(&pool[i], &g).expect("gcd divides");
                let q = ring.exact_div(&pool[j], &g).expect("gcd divides");
                // replace the pair, keeping only non-units
                let mut replaced: Vec<A::Elem> = Vec::with_capacity(3);
                for e in [p, g, q] {
                    let e = ring.normalize(&e);
                    if !ring.is_unit(&e) {
                        replaced.push(e);
                    }
                }
                pool.swap_remove(j);
                pool.swap_remove(i);
                pool.extend(replaced);
                continue 'outer;
            }
        }
        break;
    }

    pool.sort_by(|a, b| ring.cmp_elems(a, b));

    let mut exponents = Vec::with_capacity(inputs.len());
    let mut units = Vec::with_capacity(inputs.len());
    for x in inputs {
        let mut row = Vec::with_capacity(pool.len());
        let mut rest = x.clone();
        for p in &pool {
            let mut e = 0u32;
            while let Some(q) = ring.exact_div(&rest, p) {
                rest = q;
                e += 1;
            }
            row.push(e);
        }
        debug_assert!(ring.is_unit(&rest), "basis must cover every input factor");
        exponents.push(row);
        units.push(rest);
    }

    Ok(DecompositionBasis {
        basis: pool,
        exponents,
        units,
    })
}

impl<E: Clone + PartialEq + fmt::Debug> DecompositionBasis<E> {
    /// Reconstructs input `i` from its unit and exponent row.
    pub fn reconstruct<A: GcdDomain<Elem = E>>(&self, ring: &A, i: usize) -> E {
        let mut acc = self.units[i].clone();
        for (p, &e) in self.basis.iter().zip(&self.exponents[i]) {
            acc = ring.mul(&acc, &ring.pow(p, e));
        }
        acc
    }

    /// Gcd of the selected inputs, computed from the basis as the product
    /// of minimal exponent powers, unit-normalized.
    pub fn meet_via_basis<A: GcdDomain<Elem = E>>(
        &self,
        ring: &A,
        subset: &[usize],
    ) -> Result<E, RefineError> {
        self.fold_exponents(ring, subset, u32::min)
    }

    /// Lcm of the selected inputs: maximal exponent powers.
    pub fn join_via_basis<A: GcdDomain<Elem = E>>(
        &self,
        ring: &A,
        subset: &[usize],
    ) -> Result<E, RefineError> {
        self.fold_exponents(ring, subset, u32::max)
    }

    fn fold_exponents<A: GcdDomain<Elem = E>>(
        &self,
        ring: &A,
        subset: &[usize],
        fold: impl Fn(u32, u32) -> u32,
    ) -> Result<E, RefineError> {
        if subset.is_empty() {
            return Err(RefineError::EmptySubset);
        }
        let mut acc = ring.one();
        for (j, p) in self.basis.iter().enumerate() {
            let e = subset
                .iter()
                .map(|&i| self.exponents[i][j])
                .reduce(&fold)
                .unwrap();
            acc = ring.mul(&acc, &ring.pow(p, e));
        }
        Ok(ring.normalize(&acc))
    }
}

/// For a zero-sum family, refines it and checks that on every basis
/// element the minimal exponent over the family is attained at least
/// twice. Always true for genuine zero sums; exposed as a testable oracle.
pub fn sum_min_twice_check<A: GcdDomain>(ring: &A, elems: &[A::Elem]) -> Result<bool, RefineError> {
    let sum = elems.iter().fold(ring.zero(), |acc, x| ring.add(&acc, x));
    if !ring.is_zero(&sum) {
        return Err(RefineError::NonzeroSum);
    }
    let basis = refine(ring, elems)?;
    for j in 0..basis.basis.len() {
        let min = basis
            .exponents
            .iter()
            .map(|row| row[j])
            .min()
            .expect("nonempty family");
        let hits = basis.exponents.iter().filter(|row| row[j] == min).count();
        if hits < 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{GcdDomain, IntegerRing, PolyRing, PrimeField};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Trial-division oracle for small integers.
    fn factor_small(n: i64) -> Vec<(i64, u32)> {
        let mut n = n.abs();
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= n {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            if e > 0 {
                out.push((d, e));
            }
            d += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    #[test]
    fn single_element_is_its_own_basis() {
        let b = refine(&IntegerRing, &ints(&[6])).unwrap();
        assert_eq!(b.basis, ints(&[6]));
        assert_eq!(b.exponents, vec![vec![1]]);
    }

    #[test]
    fn twelve_eighteen_splits_to_primes() {
        let b = refine(&IntegerRing, &ints(&[12, 18])).unwrap();
        assert_eq!(b.basis, ints(&[2, 3]));
        assert_eq!(b.exponents, vec![vec![2, 1], vec![1, 2]]);
        // cross-check against the trial-division oracle
        for (i, &x) in [12i64, 18].iter().enumerate() {
            let f = factor_small(x);
            for (j, p) in b.basis.iter().enumerate() {
                let expect = f
                    .iter()
                    .find(|(q, _)| BigInt::from(*q) == *p)
                    .map_or(0, |&(_, e)| e);
                assert_eq!(b.exponents[i][j], expect);
            }
        }
    }

    #[test]
    fn coprime_inputs_stay_composite() {
        let b = refine(&IntegerRing, &ints(&[4, 9])).unwrap();
        assert_eq!(b.basis, ints(&[4, 9]));
        assert_eq!(b.exponents, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(b.reconstruct(&IntegerRing, 0), BigInt::from(4));
        assert_eq!(b.reconstruct(&IntegerRing, 1), BigInt::from(9));
    }

    #[test]
    fn negative_inputs_keep_their_unit() {
        let b = refine(&IntegerRing, &ints(&[-12, 18])).unwrap();
        assert_eq!(b.units[0], BigInt::from(-1));
        assert_eq!(b.reconstruct(&IntegerRing, 0), BigInt::from(-12));
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(
            refine(&IntegerRing, &ints(&[3, 0])),
            Err(RefineError::ZeroInput)
        );
        assert_eq!(refine(&IntegerRing, &[]), Err(RefineError::EmptyInput));
    }

    #[test]
    fn meet_and_join_match_gcd_lcm() {
        let b = refine(&IntegerRing, &ints(&[12, 18])).unwrap();
        assert_eq!(
            b.meet_via_basis(&IntegerRing, &[0, 1]).unwrap(),
            BigInt::from(6)
        );
        assert_eq!(
            b.join_via_basis(&IntegerRing, &[0, 1]).unwrap(),
            BigInt::from(36)
        );
        assert_eq!(
            b.meet_via_basis(&IntegerRing, &[1]).unwrap(),
            BigInt::from(18)
        );
        assert_eq!(
            b.meet_via_basis(&IntegerRing, &[]),
            Err(RefineError::EmptySubset)
        );
    }

    #[test]
    fn refinement_is_idempotent() {
        let b = refine(&IntegerRing, &ints(&[12, 18, 50])).unwrap();
        let again = refine(&IntegerRing, &b.basis).unwrap();
        assert_eq!(again.basis, b.basis);
    }

    #[test]
    fn zero_sum_families() {
        assert!(sum_min_twice_check(&IntegerRing, &ints(&[6, 10, -16])).unwrap());
        assert!(sum_min_twice_check(&IntegerRing, &ints(&[1, -1])).unwrap());
        assert!(sum_min_twice_check(&IntegerRing, &ints(&[4, 4, -8])).unwrap());
        assert_eq!(
            sum_min_twice_check(&IntegerRing, &ints(&[1, 2])),
            Err(RefineError::NonzeroSum)
        );
    }

    #[test]
    fn polynomial_refinement() {
        let f5 = PrimeField::new(5).unwrap();
        let r = PolyRing::new(f5, vec!["x".into()]);
        let x = r.var(0);
        let lin = |a: u64| r.add(&x, &r.constant(a));
        let f = r.mul(&lin(1), &r.mul(&lin(1), &lin(2))); // (x+1)^2 (x+2)
        let g = r.mul(&lin(1), &lin(3)); // (x+1)(x+3)
        let b = refine(&r, &[f.clone(), g.clone()]).unwrap();
        for (i, input) in [f, g].iter().enumerate() {
            assert_eq!(&b.reconstruct(&r, i), input);
        }
        for i in 0..b.basis.len() {
            for j in (i + 1)..b.basis.len() {
                assert!(r.is_unit(&r.gcd(&b.basis[i], &b.basis[j])));
            }
        }
    }

    #[test]
    fn random_polynomial_families_over_f5() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(51);
        let r = PolyRing::new(PrimeField::new(5).unwrap(), vec!["x".into()]);
        let random_poly = |rng: &mut rand_chacha::ChaCha8Rng| loop {
            let deg = rng.gen_range(0..=4);
            let p = r.from_terms(
                (0..=deg).map(|k| (crate::rings::Monomial(vec![k]), rng.gen_range(0..5u64))),
            );
            if !p.is_zero() {
                return p;
            }
        };
        for _ in 0..100 {
            let len = rng.gen_range(1..=4);
            let inputs: Vec<_> = (0..len).map(|_| random_poly(&mut rng)).collect();
            let b = refine(&r, &inputs).unwrap();
            for (i, input) in inputs.iter().enumerate() {
                assert_eq!(&b.reconstruct(&r, i), input);
            }
            for i in 0..b.basis.len() {
                assert!(!r.is_unit(&b.basis[i]));
                for j in (i + 1)..b.basis.len() {
                    assert!(r.is_unit(&r.gcd(&b.basis[i], &b.basis[j])));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn random_integer_families(xs in proptest::collection::vec(1i64..100_000, 1..6)) {
            let inputs = ints(&xs);
            let b = refine(&IntegerRing, &inputs).unwrap();
            for i in 0..inputs.len() {
                prop_assert_eq!(b.reconstruct(&IntegerRing, i), inputs[i].clone());
            }
            for i in 0..b.basis.len() {
                prop_assert!(!IntegerRing.is_unit(&b.basis[i]));
                for j in (i + 1)..b.basis.len() {
                    prop_assert!(IntegerRing.is_unit(
                        &IntegerRing.gcd(&b.basis[i], &b.basis[j])
                    ));
                }
            }
        }

        #[test]
        fn meet_join_agree_with_direct(a in 1i64..10_000, b in 1i64..10_000) {
            let z = IntegerRing;
            let inputs = ints(&[a, b]);
            let basis = refine(&z, &inputs).unwrap();
            let g = basis.meet_via_basis(&z, &[0, 1]).unwrap();
            let l = basis.join_via_basis(&z, &[0, 1]).unwrap();
            prop_assert_eq!(g.clone(), z.gcd(&inputs[0], &inputs[1]));
            prop_assert_eq!(l.clone(), z.lcm(&inputs[0], &inputs[1]));
            prop_assert_eq!(z.mul(&g, &l), z.normalize(&z.mul(&inputs[0], &inputs[1])));
        }

        #[test]
        fn zero_sum_triples(a in 1i64..5_000, b in 1i64..5_000) {
            let triple = ints(&[a, b, -(a + b)]);
            prop_assert!(sum_min_twice_check(&IntegerRing, &triple).unwrap());
        }
    }
}
