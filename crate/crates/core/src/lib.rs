//! Exact-arithmetic divisor theory at desk scale.
//!
//! The crate models divisor groups of integral domains in three concrete
//! guises and provides the algorithms that connect them:
//!
//! * [`lgroup`] — the free lattice-ordered group on a set of atoms, the
//!   shape of every decomposed divisor group here;
//! * [`rings`] — exact ground rings (integers, prime fields, fractions,
//!   sparse multivariate polynomials) behind one GCD-domain contract;
//! * [`refine`] — pairwise coprime bases for finite families, without any
//!   factorization into irreducibles;
//! * [`divisor`] — divisors of a GCD domain as reduced fraction classes,
//!   Kronecker star products, content multiplicativity, and the splitting
//!   of divisors of A[X] into rational and content parts;
//! * [`quadratic`] — quadratic integer rings with HNF ideal arithmetic,
//!   prime splitting, simultaneous approximation, the one-and-a-half
//!   theorem and the norm morphism;
//! * [`casestudy`] — the coordinate ring k[a,b,c,d]/(ad - bc), where all
//!   divisor questions are settled in two gcd localizations.

pub mod casestudy;
pub mod divisor;
pub mod lgroup;
pub mod quadratic;
pub mod refine;
pub mod rings;

pub use divisor::{Divisor, KroneckerList};
pub use lgroup::FreeLGroupElement;
pub use quadratic::{IdealHNF, KrullDivisor, PrimeIdeal, QuadElement, QuadRing};
pub use refine::DecompositionBasis;
pub use rings::{FracField, GcdDomain, IntegerRing, MultiPoly, PolyRing, PrimeField, UniPoly};
