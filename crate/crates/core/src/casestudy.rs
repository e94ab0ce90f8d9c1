//! The determinantal coordinate ring k[a,b,c,d]/(ad - bc): an exactly
//! computable divisor theory that is neither a gcd domain nor Prufer.
//! Divisibility, strong gcds, divisor arithmetic and divisorial-ideal
//! membership all run through the two gcd localizations obtained by
//! inverting a or d, where the eliminated variable becomes a fraction of
//! the others. The sequence (a, d) has depth two, so the two localizations
//! decide everything.

use crate::divisor::Divisor;
use crate::rings::{GcdDomain, Monomial, MultiPoly, PolyRing};
use std::fmt;

/// Variable slots of the ambient polynomial ring, in order.
pub const VAR_A: usize = 0;
pub const VAR_B: usize = 1;
pub const VAR_C: usize = 2;
pub const VAR_D: usize = 3;

/// Which of the two depth-two localizations to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalizeAt {
    /// Invert a; then d = bc/a and the ring is k[a,b,c][1/a].
    A,
    /// Invert d; then a = bc/d and the ring is k[b,c,d][1/d].
    D,
}

impl LocalizeAt {
    fn inverted(self) -> usize {
        match self {
            LocalizeAt::A => VAR_A,
            LocalizeAt::D => VAR_D,
        }
    }

    fn eliminated(self) -> usize {
        match self {
            LocalizeAt::A => VAR_D,
            LocalizeAt::D => VAR_A,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseError {
    ZeroElement,
    NotHomogeneous,
    DegreeBound { degree: u32, bound: u32 },
}

impl fmt::Display for CaseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseError::ZeroElement => write!(f, "zero is not allowed here"),
            CaseError::NotHomogeneous => write!(f, "inputs must be homogeneous"),
            CaseError::DegreeBound { degree, bound } => {
                write!(f, "degree {degree} exceeds the bound {bound}")
            }
        }
    }
}

impl std::error::Error for CaseError {}

/// An element in normal form: no monomial is divisible by a*d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseElement<T> {
    poly: MultiPoly<T>,
}

impl<T> CaseElement<T> {
    pub fn poly(&self) -> &MultiPoly<T> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

/// Image of an element (or list divisor) in one localization: the net
/// power of the inverted variable, and a reduced fraction of polynomials
/// prime to it. Only the fraction carries divisor information; the
/// exponent tracks the unit part.
#[derive(Clone, Debug)]
pub struct LocalizedDivisor<T: Clone + PartialEq + fmt::Debug> {
    pub inv_var_exponent: i64,
    pub frac: Divisor<MultiPoly<T>>,
}

/// A divisor of the coordinate ring, represented by its two localized
/// images. Equality and order are componentwise on the fractions.
#[derive(Clone, Debug)]
pub struct CaseDivisor<T: Clone + PartialEq + fmt::Debug> {
    pub loc_a: LocalizedDivisor<T>,
    pub loc_d: LocalizedDivisor<T>,
}

/// The coordinate ring over a discrete field k.
#[derive(Clone, Debug)]
pub struct CaseRing<K: GcdDomain> {
    ambient: PolyRing<K>,
}

impl<K: GcdDomain> CaseRing<K> {
    pub fn new(field: K) -> Self {
        let vars = ["a", "b", "c", "d"].map(String::from).to_vec();
        CaseRing {
            ambient: PolyRing::new(field, vars),
        }
    }

    pub fn ambient(&self) -> &PolyRing<K> {
        &self.ambient
    }

    /// Rewrites every monomial divisible by a*d through ad -> bc until
    /// none remains. Each step trades an (a, d) pair for a (b, c) pair,
    /// so applying the full trade in one pass is confluent.
    pub fn normal_form(&self, raw: &MultiPoly<K::Elem>) -> CaseElement<K::Elem> {
        let poly = self.ambient.from_terms(raw.terms().map(|(m, coef)| {
            let mut e = m.0.clone();
            let t = e[VAR_A].min(e[VAR_D]);
            e[VAR_A] -= t;
            e[VAR_D] -= t;
            e[VAR_B] += t;
            e[VAR_C] += t;
            (Monomial(e), coef.clone())
        }));
        CaseElement { poly }
    }

    pub fn var(&self, idx: usize) -> CaseElement<K::Elem> {
        CaseElement {
            poly: self.ambient.var(idx),
        }
    }

    pub fn add(&self, x: &CaseElement<K::Elem>, y: &CaseElement<K::Elem>) -> CaseElement<K::Elem> {
        // normal forms are closed under addition
        CaseElement {
            poly: self.ambient.add(&x.poly, &y.poly),
        }
    }

    pub fn mul(&self, x: &CaseElement<K::Elem>, y: &CaseElement<K::Elem>) -> CaseElement<K::Elem> {
        self.normal_form(&self.ambient.mul(&x.poly, &y.poly))
    }

    /// Image of a nonzero element in the chosen localization: substitute
    /// the eliminated variable, clear denominators, and strip the powers
    /// of the inverted variable into the exponent.
    pub fn localize(
        &self,
        x: &CaseElement<K::Elem>,
        at: LocalizeAt,
    ) -> Result<LocalizedDivisor<K::Elem>, CaseError> {
        if x.is_zero() {
            return Err(CaseError::ZeroElement);
        }
        let inv = at.inverted();
        let elim = at.eliminated();
        // substitute elim -> b*c/inv: multiply every term by inv^(max_e)
        // up front so the result is a polynomial
        let max_e = x.poly.terms().map(|(m, _)| m.0[elim]).max().unwrap_or(0);
        let substituted = self.ambient.from_terms(x.poly.terms().map(|(m, coef)| {
            let mut e = m.0.clone();
            let k = e[elim];
            e[elim] = 0;
            e[VAR_B] += k;
            e[VAR_C] += k;
            e[inv] += max_e - k;
            (Monomial(e), coef.clone())
        }));
        // strip remaining powers of the inverted variable
        let strip = substituted
            .terms()
            .map(|(m, _)| m.0[inv])
            .min()
            .unwrap_or(0);
        let stripped = self
            .ambient
            .from_terms(substituted.terms().map(|(m, coef)| {
                let mut e = m.0.clone();
                e[inv] -= strip;
                (Monomial(e), coef.clone())
            }));
        let exponent = strip as i64 - max_e as i64;
        Ok(LocalizedDivisor {
            inv_var_exponent: exponent,
            frac: Divisor::principal(&self.ambient, &stripped).expect("nonzero"),
        })
    }

    /// Divisor of a nonempty list of nonzero elements, as the pair of
    /// localized gcd classes.
    pub fn dv_pair(&self, xs: &[CaseElement<K::Elem>]) -> Result<CaseDivisor<K::Elem>, CaseError> {
        if xs.is_empty() {
            return Err(CaseError::ZeroElement);
        }
        let mut per_loc = Vec::with_capacity(2);
        for at in [LocalizeAt::A, LocalizeAt::D] {
            let mut images = Vec::with_capacity(xs.len());
            for x in xs {
                images.push(self.localize(x, at)?);
            }
            let mut acc = images[0].frac.clone();
            for im in &images[1..] {
                acc = acc.meet(&self.ambient, &im.frac);
            }
            per_loc.push(LocalizedDivisor {
                inv_var_exponent: 0,
                frac: acc,
            });
        }
        let loc_d = per_loc.pop().unwrap();
        let loc_a = per_loc.pop().unwrap();
        Ok(CaseDivisor { loc_a, loc_d })
    }

    pub fn zero_divisor(&self) -> CaseDivisor<K::Elem> {
        let zero = || LocalizedDivisor {
            inv_var_exponent: 0,
            frac: Divisor::zero(&self.ambient),
        };
        CaseDivisor {
            loc_a: zero(),
            loc_d: zero(),
        }
    }

    pub fn case_add(
        &self,
        x: &CaseDivisor<K::Elem>,
        y: &CaseDivisor<K::Elem>,
    ) -> CaseDivisor<K::Elem> {
        CaseDivisor {
            loc_a: LocalizedDivisor {
                inv_var_exponent: x.loc_a.inv_var_exponent + y.loc_a.inv_var_exponent,
                frac: x.loc_a.frac.add(&self.ambient, &y.loc_a.frac),
            },
            loc_d: LocalizedDivisor {
                inv_var_exponent: x.loc_d.inv_var_exponent + y.loc_d.inv_var_exponent,
                frac: x.loc_d.frac.add(&self.ambient, &y.loc_d.frac),
            },
        }
    }

    pub fn case_meet(
        &self,
        x: &CaseDivisor<K::Elem>,
        y: &CaseDivisor<K::Elem>,
    ) -> CaseDivisor<K::Elem> {
        CaseDivisor {
            loc_a: LocalizedDivisor {
                inv_var_exponent: 0,
                frac: x.loc_a.frac.meet(&self.ambient, &y.loc_a.frac),
            },
            loc_d: LocalizedDivisor {
                inv_var_exponent: 0,
                frac: x.loc_d.frac.meet(&self.ambient, &y.loc_d.frac),
            },
        }
    }

    /// Order and equality are checked in both localizations; the inverted
    /// variable is a unit there, so exponents are ignored.
    pub fn case_leq(&self, x: &CaseDivisor<K::Elem>, y: &CaseDivisor<K::Elem>) -> bool {
        x.loc_a.frac.leq(&self.ambient, &y.loc_a.frac)
            && x.loc_d.frac.leq(&self.ambient, &y.loc_d.frac)
    }

    pub fn case_eq(&self, x: &CaseDivisor<K::Elem>, y: &CaseDivisor<K::Elem>) -> bool {
        x.loc_a.frac == y.loc_a.frac && x.loc_d.frac == y.loc_d.frac
    }

    /// Divisibility in the coordinate ring, decided in both localizations:
    /// after stripping powers of the inverted variable the localized parts
    /// must divide as polynomials.
    pub fn divides(
        &self,
        x: &CaseElement<K::Elem>,
        y: &CaseElement<K::Elem>,
    ) -> Result<bool, CaseError> {
        if x.is_zero() {
            return Err(CaseError::ZeroElement);
        }
        if y.is_zero() {
            return Ok(true);
        }
        for at in [LocalizeAt::A, LocalizeAt::D] {
            let lx = self.localize(x, at)?;
            let ly = self.localize(y, at)?;
            if !self.ambient.divides(lx.frac.num(), ly.frac.num()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether 1 is a strong gcd of the list: in each localization the
    /// gcd of the images must be a unit.
    pub fn strong_gcd_is_one(&self, xs: &[CaseElement<K::Elem>]) -> Result<bool, CaseError> {
        if xs.is_empty() {
            return Err(CaseError::ZeroElement);
        }
        for at in [LocalizeAt::A, LocalizeAt::D] {
            let mut g = self.ambient.zero();
            for x in xs {
                let lx = self.localize(x, at)?;
                g = self.ambient.gcd(&g, lx.frac.num());
            }
            if !self.ambient.is_unit(&g) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership of x in the divisorial ideal of alpha: dv(x) >= alpha,
    /// with x = 0 a member by the dv(0) = +infinity convention.
    pub fn idv_member(
        &self,
        x: &CaseElement<K::Elem>,
        alpha: &CaseDivisor<K::Elem>,
    ) -> Result<bool, CaseError> {
        if x.is_zero() {
            return Ok(true);
        }
        let dv_x = self.dv_pair(std::slice::from_ref(x))?;
        Ok(self.case_leq(alpha, &dv_x))
    }

    /// All normal-form monomials of the given total degree.
    pub fn monomials_of_degree(&self, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for ea in 0..=degree {
            for eb in 0..=(degree - ea) {
                for ec in 0..=(degree - ea - eb) {
                    let ed = degree - ea - eb - ec;
                    if ea.min(ed) == 0 {
                        out.push(Monomial(vec![ea, eb, ec, ed]));
                    }
                }
            }
        }
        out
    }

    /// Ideal membership for homogeneous inputs, decided degree by degree
    /// by linear algebra over k on the normal-form monomial basis.
    pub fn ideal_member_graded(
        &self,
        x: &CaseElement<K::Elem>,
        gens: &[CaseElement<K::Elem>],
        deg_bound: u32,
    ) -> Result<bool, CaseError> {
        if x.is_zero() {
            return Ok(true);
        }
        if !x.poly.is_homogeneous() || gens.iter().any(|g| !g.poly.is_homogeneous()) {
            return Err(CaseError::NotHomogeneous);
        }
        let degree = x.poly.total_degree();
        if degree > deg_bound {
            return Err(CaseError::DegreeBound {
                degree,
                bound: deg_bound,
            });
        }
        let field = self.ambient.coeff_ring();
        let target_basis = self.monomials_of_degree(degree);
        let col_index = |m: &Monomial| target_basis.iter().position(|t| t == m);

        // columns: m * g for every generator g and every normal-form
        // monomial m of complementary degree
        let mut columns: Vec<Vec<K::Elem>> = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let gd = g.poly.total_degree();
            if gd > degree {
                continue;
            }
            for m in self.monomials_of_degree(degree - gd) {
                let shifted = self.mul(
                    &CaseElement {
                        poly: self.ambient.monomial(m, field.one()),
                    },
                    g,
                );
                let mut col = vec![field.zero(); target_basis.len()];
                for (mono, coef) in shifted.poly.terms() {
                    let idx = col_index(mono).expect("normal form monomial");
                    col[idx] = coef.clone();
                }
                columns.push(col);
            }
        }

        let mut rhs = vec![field.zero(); target_basis.len()];
        for (mono, coef) in x.poly.terms() {
            let idx = col_index(mono).expect("normal form monomial");
            rhs[idx] = coef.clone();
        }

        Ok(solve_is_consistent(field, columns, rhs))
    }

    pub fn fmt_elem(&self, x: &CaseElement<K::Elem>) -> String {
        self.ambient.fmt_elem(&x.poly)
    }

    pub fn fmt_divisor(&self, dv: &CaseDivisor<K::Elem>) -> String {
        let loc = |l: &LocalizedDivisor<K::Elem>| {
            format!(
                "{}/{}",
                self.ambient.fmt_elem(l.frac.num()),
                self.ambient.fmt_elem(l.frac.den())
            )
        };
        format!("[1/a: {} | 1/d: {}]", loc(&dv.loc_a), loc(&dv.loc_d))
    }
}

/// Gaussian elimination over a field: is `rhs` in the column span?
fn solve_is_consistent<K: GcdDomain>(
    field: &K,
    columns: Vec<Vec<K::Elem>>,
    rhs: Vec<K::Elem>,
) -> bool {
    let rows = rhs.len();
    let cols = columns.len();
    // build the augmented matrix row-major
    let mut mat: Vec<Vec<K::Elem>> = (0..rows)
        .map(|r| {
            let mut row: Vec<K::Elem> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows).find(|&r| !field.is_zero(&mat[r][col])) else {
            continue;
        };
        mat.swap(pivot_row, src);
        let inv = field
            .exact_div(&field.one(), &mat[pivot_row][col])
            .expect("field inverse");
        for c in col..=cols {
            mat[pivot_row][c] = field.mul(&mat[pivot_row][c], &inv);
        }
        for r in 0..rows {
            if r != pivot_row && !field.is_zero(&mat[r][col]) {
                let factor = mat[r][col].clone();
                for c in col..=cols {
                    let delta = field.mul(&factor, &mat[pivot_row][c]);
                    mat[r][c] = field.sub(&mat[r][c], &delta);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    // consistent iff no row reads 0 = nonzero
    mat.iter()
        .all(|row| !(row[..cols].iter().all(|x| field.is_zero(x)) && !field.is_zero(&row[cols])))
}
