//! Parse/print round trips: formatting an element and parsing it back
//! yields the same element, in every ring the CLI exposes.

use divforge_cli::expr::{eval, eval_quad, parse};
use divforge_core::casestudy::CaseRing;
use divforge_core::quadratic::{QuadElement, QuadRing};
use divforge_core::rings::{FracField, GcdDomain, IntegerRing, Monomial, PolyRing, PrimeField};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn integers_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let z = IntegerRing;
    for _ in 0..200 {
        let n = BigInt::from(rng.gen_range(-1_000_000_000i64..=1_000_000_000));
        let printed = z.fmt_elem(&n);
        let back = eval(&z, &|_| None, &parse(&printed).unwrap()).unwrap();
        assert_eq!(back, n, "{printed}");
    }
}

fn random_poly<R: GcdDomain>(
    rng: &mut ChaCha8Rng,
    ring: &PolyRing<R>,
    coeff: impl Fn(&mut ChaCha8Rng) -> R::Elem,
) -> divforge_core::MultiPoly<R::Elem> {
    let arity = ring.arity();
    let terms = rng.gen_range(0..5);
    ring.from_terms((0..terms).map(|_| {
        let exps: Vec<u32> = (0..arity).map(|_| rng.gen_range(0..4)).collect();
        (Monomial(exps), coeff(rng))
    }))
}

#[test]
fn rational_polynomials_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let q = FracField::new(IntegerRing);
    let ring = PolyRing::new(q, vec!["x".into(), "y".into()]);
    let qf = FracField::new(IntegerRing);
    for _ in 0..200 {
        let p = random_poly(&mut rng, &ring, |rng| {
            qf.make(
                BigInt::from(rng.gen_range(-20i64..=20)),
                BigInt::from(rng.gen_range(1i64..=9)),
            )
        });
        let printed = ring.fmt_elem(&p);
        let lookup = |name: &str| ring.var_index(name).map(|i| ring.var(i));
        let back = eval(&ring, &lookup, &parse(&printed).unwrap()).unwrap();
        assert_eq!(back, p, "{printed}");
    }
}

#[test]
fn prime_field_polynomials_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    let ring = PolyRing::new(PrimeField::new(5).unwrap(), vec!["x".into()]);
    for _ in 0..200 {
        let p = random_poly(&mut rng, &ring, |rng| rng.gen_range(0..5u64));
        let printed = ring.fmt_elem(&p);
        let lookup = |name: &str| ring.var_index(name).map(|i| ring.var(i));
        let back = eval(&ring, &lookup, &parse(&printed).unwrap()).unwrap();
        assert_eq!(back, p, "{printed}");
    }
}

#[test]
fn quadratic_elements_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    for d in [-5i64, -1, 2, 5] {
        let ring = QuadRing::new(d).unwrap();
        for _ in 0..200 {
            let x = QuadElement::new(
                BigInt::from(rng.gen_range(-50i64..=50)),
                BigInt::from(rng.gen_range(-50i64..=50)),
            );
            let printed = ring.fmt_elem(&x);
            let back = eval_quad(&ring, &parse(&printed).unwrap()).unwrap();
            assert_eq!(back, x, "{printed}");
        }
    }
}

#[test]
fn coordinate_ring_elements_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(46);
    let ring = CaseRing::new(PrimeField::new(5).unwrap());
    let ambient = ring.ambient();
    for _ in 0..200 {
        let raw = random_poly(&mut rng, ambient, |rng| rng.gen_range(0..5u64));
        let elem = ring.normal_form(&raw);
        let printed = ring.fmt_elem(&elem);
        let lookup = |name: &str| ambient.var_index(name).map(|i| ambient.var(i));
        let back = ring.normal_form(&eval(ambient, &lookup, &parse(&printed).unwrap()).unwrap());
        assert_eq!(back, elem, "{printed}");
    }
}
