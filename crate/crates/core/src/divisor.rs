//! The divisor group of a GCD-domain instance: classes of fractions modulo
//! units, ordered by divisibility. Also the Kronecker star product, the
//! content multiplicativity check, the splitting of divisors of A[X] into a
//! rational part and a content part, and the divisorial Nagata-ring tests.

use crate::rings::{content, primitive_part, Frac, FracField, GcdDomain, UniPoly};
use std::fmt;

/// The class of `num/den` in K*/A*, reduced and unit-normalized. The zero
/// divisor is `1/1`; a divisor is >= 0 exactly when `den` is a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor<E> {
    num: E,
    den: E,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisorError {
    ZeroElement,
    EmptyList,
}

impl fmt::Display for DivisorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisorError::ZeroElement => write!(f, "divisors of zero are not defined"),
            DivisorError::EmptyList => write!(f, "divisor of an empty list is not defined"),
        }
    }
}

impl std::error::Error for DivisorError {}

impl<E: Clone + PartialEq + fmt::Debug> Divisor<E> {
    pub fn num(&self) -> &E {
        &self.num
    }

    pub fn den(&self) -> &E {
        &self.den
    }

    pub fn zero<A: GcdDomain<Elem = E>>(ring: &A) -> Self {
        Divisor {
            num: ring.one(),
            den: ring.one(),
        }
    }

    fn reduced<A: GcdDomain<Elem = E>>(ring: &A, num: E, den: E) -> Self {
        debug_assert!(!ring.is_zero(&num) && !ring.is_zero(&den));
        let g = ring.gcd(&num, &den);
        let num = ring.exact_div(&num, &g).expect("gcd divides");
        let den = ring.exact_div(&den, &g).expect("gcd divides");
        Divisor {
            num: ring.normalize(&num),
            den: ring.normalize(&den),
        }
    }

    /// The principal divisor of a nonzero ring element.
    pub fn principal<A: GcdDomain<Elem = E>>(ring: &A, x: &E) -> Result<Self, DivisorError> {
        if ring.is_zero(x) {
            return Err(DivisorError::ZeroElement);
        }
        Ok(Divisor {
            num: ring.normalize(x),
            den: ring.one(),
        })
    }

    /// The divisor of a fraction `x/y` of nonzero ring elements.
    pub fn fraction<A: GcdDomain<Elem = E>>(ring: &A, x: &E, y: &E) -> Result<Self, DivisorError> {
        if ring.is_zero(x) || ring.is_zero(y) {
            return Err(DivisorError::ZeroElement);
        }
        Ok(Self::reduced(ring, x.clone(), y.clone()))
    }

    pub fn is_zero<A: GcdDomain<Elem = E>>(&self, ring: &A) -> bool {
        ring.is_unit(&self.num) && ring.is_unit(&self.den)
    }

    pub fn is_nonneg<A: GcdDomain<Elem = E>>(&self, ring: &A) -> bool {
        ring.is_unit(&self.den)
    }

    pub fn add<A: GcdDomain<Elem = E>>(&self, ring: &A, other: &Self) -> Self {
        Self::reduced(
            ring,
            ring.mul(&self.num, &other.num),
            ring.mul(&self.den, &other.den),
        )
    }

    pub fn neg<A: GcdDomain<Elem = E>>(&self, ring: &A) -> Self {
        Self::reduced(ring, self.den.clone(), self.num.clone())
    }

    pub fn sub<A: GcdDomain<Elem = E>>(&self, ring: &A, other: &Self) -> Self {
        self.add(ring, &other.neg(ring))
    }

    /// Meet: with self = a/b and other = c/d, the class of gcd(ad, cb)/(bd).
    pub fn meet<A: GcdDomain<Elem = E>>(&self, ring: &A, other: &Self) -> Self {
        let ad = ring.mul(&self.num, &other.den);
        let cb = ring.mul(&other.num, &self.den);
        Self::reduced(ring, ring.gcd(&ad, &cb), ring.mul(&self.den, &other.den))
    }

    /// Join: dual to meet via lcm.
    pub fn join<A: GcdDomain<Elem = E>>(&self, ring: &A, other: &Self) -> Self {
        let ad = ring.mul(&self.num, &other.den);
        let cb = ring.mul(&other.num, &self.den);
        Self::reduced(ring, ring.lcm(&ad, &cb), ring.mul(&self.den, &other.den))
    }

    /// Order by divisibility: self <= other iff other - self >= 0.
    pub fn leq<A: GcdDomain<Elem = E>>(&self, ring: &A, other: &Self) -> bool {
        other.sub(ring, self).is_nonneg(ring)
    }
}

/// The divisor of a finite list: the meet of the principal divisors, which
/// over a GCD domain is the class of the gcd.
pub fn dv_list<A: GcdDomain>(ring: &A, xs: &[A::Elem]) -> Result<Divisor<A::Elem>, DivisorError> {
    if xs.is_empty() {
        return Err(DivisorError::EmptyList);
    }
    if xs.iter().any(|x| ring.is_zero(x)) {
        return Err(DivisorError::ZeroElement);
    }
    Divisor::principal(ring, &ring.gcd_many(xs))
}

/// Whether `g` is a strong gcd of the family: over a GCD domain every gcd
/// is strong, so this tests association with the gcd of the list.
pub fn is_strong_gcd<A: GcdDomain>(ring: &A, g: &A::Elem, xs: &[A::Elem]) -> bool {
    if ring.is_zero(g) || xs.is_empty() || xs.iter().any(|x| ring.is_zero(x)) {
        return false;
    }
    ring.normalize(g) == ring.gcd_many(xs)
}

/// The lcm characterization of a strong gcd: with m = lcm(xs), the lcm of
/// the cofactors m/x_i is m/g. Used as an independent check.
pub fn strong_gcd_lcm_criterion<A: GcdDomain>(ring: &A, g: &A::Elem, xs: &[A::Elem]) -> bool {
    if ring.is_zero(g) || xs.is_empty() || xs.iter().any(|x| ring.is_zero(x)) {
        return false;
    }
    let m = xs.iter().fold(ring.one(), |acc, x| ring.lcm(&acc, x));
    let Some(mg) = ring.exact_div(&m, g) else {
        return false;
    };
    let cof = xs
        .iter()
        .map(|x| ring.exact_div(&m, x).expect("x divides the lcm"))
        .fold(ring.one(), |acc, c| ring.lcm(&acc, &c));
    cof == ring.normalize(&mg)
}

/// Depth >= 2 for a list: 1 is a strong gcd. A single element qualifies
/// only when it is a unit.
pub fn depth_ge_2<A: GcdDomain>(ring: &A, xs: &[A::Elem]) -> bool {
    is_strong_gcd(ring, &ring.one(), xs)
}

/// Ordered coefficient list of a Kronecker polynomial. The order matters;
/// zero entries are allowed as long as one entry is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KroneckerList<E> {
    pub elems: Vec<E>,
}

impl<E: Clone + PartialEq + fmt::Debug> KroneckerList<E> {
    pub fn new<A: GcdDomain<Elem = E>>(ring: &A, elems: Vec<E>) -> Result<Self, DivisorError> {
        if elems.is_empty() {
            return Err(DivisorError::EmptyList);
        }
        if elems.iter().all(|x| ring.is_zero(x)) {
            return Err(DivisorError::ZeroElement);
        }
        Ok(KroneckerList { elems })
    }

    /// The star product: coefficient list of the product of the two
    /// Kronecker polynomials.
    pub fn star<A: GcdDomain<Elem = E>>(&self, ring: &A, other: &Self) -> Self {
        let n = self.elems.len() + other.elems.len() - 1;
        let mut out = vec![ring.zero(); n];
        for (i, a) in self.elems.iter().enumerate() {
            for (j, b) in other.elems.iter().enumerate() {
                out[i + j] = ring.add(&out[i + j], &ring.mul(a, b));
            }
        }
        KroneckerList { elems: out }
    }

    /// Divisor of the list: class of the gcd of the nonzero entries.
    pub fn content_divisor<A: GcdDomain<Elem = E>>(
        &self,
        ring: &A,
    ) -> Result<Divisor<E>, DivisorError> {
        let nonzero: Vec<E> = self
            .elems
            .iter()
            .filter(|x| !ring.is_zero(x))
            .cloned()
            .collect();
        dv_list(ring, &nonzero)
    }
}

/// Checks dv(content(pq)) = dv(content(p)) + dv(content(q)). Expected to
/// hold identically; exposed as an oracle.
pub fn content_law_check<A: GcdDomain>(
    ring: &A,
    p: &UniPoly<A::Elem>,
    q: &UniPoly<A::Elem>,
) -> Result<bool, DivisorError> {
    if p.is_zero() || q.is_zero() {
        return Err(DivisorError::ZeroElement);
    }
    let cp = content(ring, p).expect("nonzero");
    let cq = content(ring, q).expect("nonzero");
    let cpq = content(ring, &p.mul(ring, q)).expect("product of nonzeros");
    let lhs = Divisor::principal(ring, &cpq)?;
    let rhs = Divisor::principal(ring, &cp)?.add(ring, &Divisor::principal(ring, &cq)?);
    Ok(lhs == rhs)
}

/// A divisor of A[X] split into its K[X] part and its content part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyDivisorSplit<E> {
    /// Monic fraction over K = Frac(A); for the split of a polynomial the
    /// denominator is the constant one.
    pub rational_num: UniPoly<Frac<E>>,
    pub rational_den: UniPoly<Frac<E>>,
    pub content_part: Divisor<E>,
}

fn to_field_poly<A: GcdDomain>(
    field: &FracField<&A>,
    f: &UniPoly<A::Elem>,
) -> UniPoly<Frac<A::Elem>> {
    f.map_coeffs(|c| field.from_base(c.clone()))
}

/// Splits a nonzero f in A[X] as (monic image in K[X], divisor of content).
pub fn polyring_split<A: GcdDomain>(
    ring: &A,
    f: &UniPoly<A::Elem>,
) -> Result<PolyDivisorSplit<A::Elem>, DivisorError> {
    if f.is_zero() {
        return Err(DivisorError::ZeroElement);
    }
    let field = FracField::new(ring);
    let fk = to_field_poly(&field, f);
    let lc = fk.leading().cloned().expect("nonzero");
    let lc_inv = field.exact_div(&field.one(), &lc).expect("unit in a field");
    let monic = fk.scale(&field, &lc_inv);
    let c = content(ring, f).expect("nonzero");
    Ok(PolyDivisorSplit {
        rational_num: monic,
        rational_den: UniPoly::constant(&field, field.one()),
        content_part: Divisor::principal(ring, &c)?,
    })
}

/// Whether q divides p in A[X], decided by the splitting criterion:
/// q | p in K[X] together with dv(content(q)) <= dv(content(p)).
/// Never performs the division in A[X] itself.
pub fn polyring_divides<A: GcdDomain>(
    ring: &A,
    q: &UniPoly<A::Elem>,
    p: &UniPoly<A::Elem>,
) -> Result<bool, DivisorError> {
    if q.is_zero() {
        return Err(DivisorError::ZeroElement);
    }
    if p.is_zero() {
        return Ok(true);
    }
    let field = FracField::new(ring);
    let pk = to_field_poly(&field, p);
    let qk = to_field_poly(&field, q);
    let rem = pk
        .rem_by_monic_lead(&field, &qk)
        .expect("leading coefficient is a field unit");
    if !rem.is_zero() {
        return Ok(false);
    }
    let cq = content(ring, q).expect("nonzero");
    let cp = content(ring, p).expect("nonzero");
    Ok(ring.divides(&cq, &cp))
}

/// Membership in the divisorial Nagata filter: the content of f has
/// depth >= 2, i.e. the coefficients have a unit gcd.
pub fn nagata_member<A: GcdDomain>(ring: &A, f: &UniPoly<A::Elem>) -> Result<bool, DivisorError> {
    if f.is_zero() {
        return Err(DivisorError::ZeroElement);
    }
    let c = content(ring, f).expect("nonzero");
    Ok(ring.is_unit(&c))
}

/// Whether the class f/g lies in the divisorial Nagata ring of A, decided
/// by comparing content divisors: dv(content(g)) <= dv(content(f)).
pub fn nagata_divides<A: GcdDomain>(
    ring: &A,
    f: &UniPoly<A::Elem>,
    g: &UniPoly<A::Elem>,
) -> Result<bool, DivisorError> {
    if f.is_zero() || g.is_zero() {
        return Err(DivisorError::ZeroElement);
    }
    let cf = content(ring, f).expect("nonzero");
    let cg = content(ring, g).expect("nonzero");
    Ok(ring.divides(&cg, &cf))
}

/// A multiplier from the Nagata filter witnessing f/g as a member: the
/// primitive part of g. Then s*f/g = f/content(g) lies in A[X] whenever
/// `nagata_divides(f, g)` holds.
pub fn nagata_witness<A: GcdDomain>(
    ring: &A,
    g: &UniPoly<A::Elem>,
) -> Result<UniPoly<A::Elem>, DivisorError> {
    primitive_part(ring, g).map_err(|_| DivisorError::ZeroElement)
}

impl<E: fmt::Display> fmt::Display for Divisor<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}
