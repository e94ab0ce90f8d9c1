//! Sparse multivariate polynomials over a GCD-domain coefficient ring.
//!
//! Terms are kept in a BTreeMap keyed by graded reverse lexicographic order,
//! so the map itself is the canonical form and the leading term is the last
//! entry. The gcd reduces to the last occurring variable by content and
//! primitive part, then runs a subresultant remainder sequence.

use super::GcdDomain;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector, one entry per ring variable. Ordered by grevlex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // grevlex tie break: larger exponent in the last differing variable
        // means smaller monomial
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            match a.cmp(b) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {}
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial: no stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly<T> {
    terms: BTreeMap<Monomial, T>,
}

impl<T> MultiPoly<T> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<(&Monomial, &T)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// Degree in variable `var`, `None` on the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    /// True when every term has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::total_degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }
}

/// The polynomial ring R[vars] over a GCD-domain coefficient ring R.
#[derive(Clone, Debug)]
pub struct PolyRing<R> {
    coeff: R,
    vars: Vec<String>,
}

impl<R: GcdDomain> PolyRing<R> {
    pub fn new(coeff: R, vars: Vec<String>) -> Self {
        PolyRing { coeff, vars }
    }

    pub fn coeff_ring(&self) -> &R {
        &self.coeff
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn constant(&self, c: R::Elem) -> MultiPoly<R::Elem> {
        let mut terms = BTreeMap::new();
        if !self.coeff.is_zero(&c) {
            terms.insert(Monomial(vec![0; self.arity()]), c);
        }
        MultiPoly { terms }
    }

    pub fn var(&self, idx: usize) -> MultiPoly<R::Elem> {
        let mut exps = vec![0; self.arity()];
        exps[idx] = 1;
        self.monomial(Monomial(exps), self.coeff.one())
    }

    pub fn monomial(&self, m: Monomial, c: R::Elem) -> MultiPoly<R::Elem> {
        debug_assert_eq!(m.0.len(), self.arity());
        let mut terms = BTreeMap::new();
        if !self.coeff.is_zero(&c) {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I>(&self, iter: I) -> MultiPoly<R::Elem>
    where
        I: IntoIterator<Item = (Monomial, R::Elem)>,
    {
        let mut acc: BTreeMap<Monomial, R::Elem> = BTreeMap::new();
        for (m, c) in iter {
            debug_assert_eq!(m.0.len(), self.arity());
            let entry = match acc.remove(&m) {
                Some(prev) => self.coeff.add(&prev, &c),
                None => c,
            };
            if !self.coeff.is_zero(&entry) {
                acc.insert(m, entry);
            }
        }
        MultiPoly { terms: acc }
    }

    /// Constant value when the polynomial has no variables, else `None`.
    pub fn as_constant(&self, f: &MultiPoly<R::Elem>) -> Option<R::Elem> {
        if f.is_zero() {
            return Some(self.coeff.zero());
        }
        if f.terms.len() == 1 {
            let (m, c) = f.leading().unwrap();
            if m.total_degree() == 0 {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn scale(&self, f: &MultiPoly<R::Elem>, c: &R::Elem) -> MultiPoly<R::Elem> {
        if self.coeff.is_zero(c) {
            return self.constant(self.coeff.zero());
        }
        MultiPoly {
            terms: f
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), self.coeff.mul(a, c)))
                .collect(),
        }
    }

    fn mul_term(&self, f: &MultiPoly<R::Elem>, m: &Monomial, c: &R::Elem) -> MultiPoly<R::Elem> {
        if self.coeff.is_zero(c) {
            return self.constant(self.coeff.zero());
        }
        MultiPoly {
            terms: f
                .terms
                .iter()
                .map(|(fm, fc)| (fm.mul(m), self.coeff.mul(fc, c)))
                .collect(),
        }
    }

    /// Coefficient of `var^k` in `f`, as a polynomial with `var` zeroed out.
    pub fn coeff_of(&self, f: &MultiPoly<R::Elem>, var: usize, k: u32) -> MultiPoly<R::Elem> {
        let terms = f
            .terms
            .iter()
            .filter(|(m, _)| m.0[var] == k)
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e[var] = 0;
                (Monomial(e), c.clone())
            })
            .collect();
        MultiPoly { terms }
    }

    /// Leading coefficient of `f` viewed as a polynomial in `var`.
    pub fn lc_in(&self, f: &MultiPoly<R::Elem>, var: usize) -> MultiPoly<R::Elem> {
        match f.degree_in(var) {
            Some(d) => self.coeff_of(f, var, d),
            None => self.constant(self.coeff.zero()),
        }
    }

    pub fn mul_var_pow(&self, f: &MultiPoly<R::Elem>, var: usize, k: u32) -> MultiPoly<R::Elem> {
        MultiPoly {
            terms: f
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e[var] += k;
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Content of `f` with respect to `var`: gcd of its coefficients as
    /// polynomials in the remaining variables.
    pub fn content_in(&self, f: &MultiPoly<R::Elem>, var: usize) -> MultiPoly<R::Elem> {
        let mut g = self.constant(self.coeff.zero());
        let degree = match f.degree_in(var) {
            Some(d) => d,
            None => return g,
        };
        for k in 0..=degree {
            let c = self.coeff_of(f, var, k);
            if c.is_zero() {
                continue;
            }
            g = self.gcd(&g, &c);
            if self.is_unit(&g) {
                break;
            }
        }
        g
    }

    /// Pseudo-remainder of `f` by `g` in `var`: the remainder of
    /// `lc(g)^(deg f - deg g + 1) * f` under division by `g`.
    pub fn pseudo_rem(
        &self,
        f: &MultiPoly<R::Elem>,
        g: &MultiPoly<R::Elem>,
        var: usize,
    ) -> MultiPoly<R::Elem> {
        let dg = g.degree_in(var).expect("pseudo_rem by zero");
        let df = match f.degree_in(var) {
            Some(d) if d >= dg => d,
            _ => return f.clone(),
        };
        let lcg = self.lc_in(g, var);
        let mut r = f.clone();
        let mut scale_left = df - dg + 1;
        while let Some(dr) = r.degree_in(var) {
            if dr < dg {
                break;
            }
            let lcr = self.lc_in(&r, var);
            // r <- lc(g)*r - lc(r)*var^(dr-dg)*g
            let shifted = self.mul_var_pow(&self.mul(&lcr, g), var, dr - dg);
            // the lc_in of the shifted product in var is lcr*lcg at degree dr
            r = self.sub(&self.mul(&r, &lcg), &shifted);
            scale_left -= 1;
            if r.is_zero() {
                break;
            }
        }
        for _ in 0..scale_left {
            r = self.mul(&r, &lcg);
        }
        r
    }

    /// Subresultant remainder sequence gcd of two polynomials that are
    /// primitive with respect to `var` and have positive degree in it.
    fn subresultant_gcd(
        &self,
        f: &MultiPoly<R::Elem>,
        g: &MultiPoly<R::Elem>,
        var: usize,
    ) -> MultiPoly<R::Elem> {
        let (mut a, mut b) = if f.degree_in(var) >= g.degree_in(var) {
            (f.clone(), g.clone())
        } else {
            (g.clone(), f.clone())
        };
        let mut h = self.constant(self.coeff.one());
        let mut first = true;
        loop {
            let da = a.degree_in(var).unwrap();
            let db = b.degree_in(var).unwrap();
            let delta = da - db;
            let r = self.pseudo_rem(&a, &b, var);
            if r.is_zero() {
                let (content, _) = self.content_and_primitive(&b, var);
                return self.exact_div(&b, &content).expect("content divides");
            }
            if !r.uses_var(var) {
                return self.constant(self.coeff.one());
            }
            // the first step divides by a unit only; afterwards by lc(a)*h^delta
            let divisor = if first {
                self.constant(self.coeff.one())
            } else {
                let lc_a = self.lc_in(&a, var);
                let hp = self.poly_pow(&h, delta);
                self.mul(&lc_a, &hp)
            };
            first = false;
            let next = self
                .exact_div(&r, &divisor)
                .expect("subresultant division is exact");
            // update h with the lc of the new a (the old b)
            let g_new = self.lc_in(&b, var);
            h = if delta == 0 {
                h
            } else {
                let num = self.poly_pow(&g_new, delta);
                if delta == 1 {
                    num
                } else {
                    let den = self.poly_pow(&h, delta - 1);
                    self.exact_div(&num, &den)
                        .expect("subresultant h update is exact")
                }
            };
            a = b;
            b = next;
        }
    }

    fn poly_pow(&self, f: &MultiPoly<R::Elem>, n: u32) -> MultiPoly<R::Elem> {
        let mut acc = self.constant(self.coeff.one());
        for _ in 0..n {
            acc = self.mul(&acc, f);
        }
        acc
    }

    fn content_and_primitive(
        &self,
        f: &MultiPoly<R::Elem>,
        var: usize,
    ) -> (MultiPoly<R::Elem>, MultiPoly<R::Elem>) {
        let content = self.content_in(f, var);
        let pp = self.exact_div(f, &content).expect("content divides");
        (content, pp)
    }

    fn highest_used_var(&self, f: &MultiPoly<R::Elem>, g: &MultiPoly<R::Elem>) -> Option<usize> {
        (0..self.arity())
            .rev()
            .find(|&v| f.uses_var(v) || g.uses_var(v))
    }
}

impl<R: GcdDomain> GcdDomain for PolyRing<R> {
    type Elem = MultiPoly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        self.constant(self.coeff.zero())
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.coeff.one())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut terms = a.terms.clone();
        for (m, c) in &b.terms {
            match terms.remove(m) {
                Some(prev) => {
                    let s = self.coeff.add(&prev, c);
                    if !self.coeff.is_zero(&s) {
                        terms.insert(m.clone(), s);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        MultiPoly { terms }
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        MultiPoly {
            terms: a
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.coeff.neg(c)))
                .collect(),
        }
    }

    fn from_int(&self, n: &num_bigint::BigInt) -> Self::Elem {
        self.constant(self.coeff.from_int(n))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut acc: BTreeMap<Monomial, R::Elem> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m = ma.mul(mb);
                let c = self.coeff.mul(ca, cb);
                match acc.remove(&m) {
                    Some(prev) => {
                        let s = self.coeff.add(&prev, &c);
                        if !self.coeff.is_zero(&s) {
                            acc.insert(m, s);
                        }
                    }
                    None => {
                        if !self.coeff.is_zero(&c) {
                            acc.insert(m, c);
                        }
                    }
                }
            }
        }
        MultiPoly { terms: acc }
    }

    /// Exact division by repeated leading-term elimination. Returns `None`
    /// when a leading monomial or coefficient fails to divide, which
    /// certifies that `b` does not divide `a`.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        if b.is_zero() {
            return None;
        }
        if a.is_zero() {
            return Some(self.zero());
        }
        let (lm_b, lc_b) = b.leading().unwrap();
        let lm_b = lm_b.clone();
        let lc_b = lc_b.clone();
        let mut rem = a.clone();
        let mut quot: BTreeMap<Monomial, R::Elem> = BTreeMap::new();
        while let Some((lm_r, lc_r)) = rem.leading() {
            let m = lm_r.div(&lm_b)?;
            let c = self.coeff.exact_div(lc_r, &lc_b)?;
            rem = self.sub(&rem, &self.mul_term(b, &m, &c));
            quot.insert(m, c);
        }
        Some(MultiPoly { terms: quot })
    }

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() {
            return self.normalize(b);
        }
        if b.is_zero() {
            return self.normalize(a);
        }
        let var = match self.highest_used_var(a, b) {
            Some(v) => v,
            None => {
                let ca = self.as_constant(a).unwrap();
                let cb = self.as_constant(b).unwrap();
                return self.constant(self.coeff.gcd(&ca, &cb));
            }
        };
        let (cont_a, pp_a) = self.content_and_primitive(a, var);
        let (cont_b, pp_b) = self.content_and_primitive(b, var);
        let cont = self.gcd(&cont_a, &cont_b);
        let deep = if !pp_a.uses_var(var) || !pp_b.uses_var(var) {
            // a primitive part free of var is a unit times one
            self.one()
        } else {
            self.subresultant_gcd(&pp_a, &pp_b, var)
        };
        let (_, deep_pp) = self.content_and_primitive(&deep, var);
        self.normalize(&self.mul(&cont, &deep_pp))
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        match self.as_constant(a) {
            Some(c) => self.coeff.is_unit(&c),
            None => false,
        }
    }

    fn normalize_unit(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem) {
        match a.leading() {
            None => (self.zero(), self.one()),
            Some((_, lc)) => {
                let (_, u) = self.coeff.normalize_unit(lc);
                let u_inv = self
                    .coeff
                    .exact_div(&self.coeff.one(), &u)
                    .expect("unit inverse");
                let normal = self.scale(a, &u_inv);
                (normal, self.constant(u))
            }
        }
    }

    fn cmp_elems(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        let mut ia = a.terms.iter().rev();
        let mut ib = b.terms.iter().rev();
        loop {
            match (ia.next(), ib.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    match ma.cmp(mb).then_with(|| self.coeff.cmp_elems(ca, cb)) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
            }
        }
    }

    fn fmt_elem(&self, a: &Self::Elem) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in a.terms.iter().rev() {
            let cs = self.coeff.fmt_elem(c);
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
            let mut factors = Vec::new();
            let trivial_coeff = cs_abs == "1" && m.total_degree() > 0;
            if !trivial_coeff {
                factors.push(cs_abs);
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(self.vars[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.vars[i], e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl<T: fmt::Debug> fmt::Display for MultiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{FracField, IntegerRing, PrimeField};
    use num_bigint::BigInt;

    fn zxy() -> PolyRing<IntegerRing> {
        PolyRing::new(IntegerRing, vec!["x".into(), "y".into()])
    }

    fn zp(ring: &PolyRing<IntegerRing>, terms: &[(i64, &[u32])]) -> MultiPoly<BigInt> {
        ring.from_terms(
            terms
                .iter()
                .map(|(c, e)| (Monomial(e.to_vec()), BigInt::from(*c))),
        )
    }

    #[test]
    fn grevlex_order() {
        // x^2 > x*y > y^2 > x > y > 1 in grevlex with vars (x, y)
        let m = |e: &[u32]| Monomial(e.to_vec());
        assert!(m(&[2, 0]) > m(&[1, 1]));
        assert!(m(&[1, 1]) > m(&[0, 2]));
        assert!(m(&[0, 2]) > m(&[1, 0]));
        assert!(m(&[1, 0]) > m(&[0, 1]));
    }

    #[test]
    fn mul_and_exact_div() {
        let r = zxy();
        let f = zp(&r, &[(1, &[1, 0]), (1, &[0, 1])]); // x + y
        let g = zp(&r, &[(1, &[1, 0]), (-1, &[0, 1])]); // x - y
        let h = r.mul(&f, &g); // x^2 - y^2
        assert_eq!(h, zp(&r, &[(1, &[2, 0]), (-1, &[0, 2])]));
        assert_eq!(r.exact_div(&h, &f), Some(g.clone()));
        assert_eq!(r.exact_div(&h, &zp(&r, &[(2, &[1, 0])])), None);
    }

    #[test]
    fn gcd_univariate_over_z() {
        let r = PolyRing::new(IntegerRing, vec!["x".into()]);
        // (x-1)(x+1) and (x+1)^2
        let f = r.from_terms([
            (Monomial(vec![2]), BigInt::from(1)),
            (Monomial(vec![0]), BigInt::from(-1)),
        ]);
        let g = r.from_terms([
            (Monomial(vec![2]), BigInt::from(1)),
            (Monomial(vec![1]), BigInt::from(2)),
            (Monomial(vec![0]), BigInt::from(1)),
        ]);
        let expect = r.from_terms([
            (Monomial(vec![1]), BigInt::from(1)),
            (Monomial(vec![0]), BigInt::from(1)),
        ]);
        assert_eq!(r.gcd(&f, &g), expect);
    }

    #[test]
    fn gcd_univariate_over_q_is_monic() {
        let q = FracField::new(IntegerRing);
        let r = PolyRing::new(q, vec!["x".into()]);
        let c = |n: i64| FracField::new(IntegerRing).make(BigInt::from(n), BigInt::from(1));
        let f = r.from_terms([(Monomial(vec![2]), c(2)), (Monomial(vec![0]), c(-2))]);
        let g = r.from_terms([(Monomial(vec![1]), c(3)), (Monomial(vec![0]), c(3))]);
        let expect = r.from_terms([(Monomial(vec![1]), c(1)), (Monomial(vec![0]), c(1))]);
        assert_eq!(r.gcd(&f, &g), expect);
    }

    #[test]
    fn gcd_of_coprime_monomials_is_one() {
        let q = FracField::new(IntegerRing);
        let r = PolyRing::new(q, vec!["x".into(), "y".into()]);
        let one = FracField::new(IntegerRing).one();
        let f = r.monomial(Monomial(vec![4, 0]), one.clone()); // x^4
        let g = r.monomial(Monomial(vec![0, 3]), one); // y^3
        assert!(r.is_unit(&r.gcd(&f, &g)));
        assert_eq!(r.gcd(&f, &g), r.one());
    }

    #[test]
    fn gcd_multivariate_with_common_factor() {
        let r = zxy();
        // h = x + 2y, f = h*(x - y), g = h*(x + y)
        let h = zp(&r, &[(1, &[1, 0]), (2, &[0, 1])]);
        let f = r.mul(&h, &zp(&r, &[(1, &[1, 0]), (-1, &[0, 1])]));
        let g = r.mul(&h, &zp(&r, &[(1, &[1, 0]), (1, &[0, 1])]));
        assert_eq!(r.gcd(&f, &g), h);
    }

    #[test]
    fn gcd_over_prime_field() {
        let f5 = PrimeField::new(5).unwrap();
        let r = PolyRing::new(f5, vec!["x".into()]);
        // 2(x+1)(x+2) and 3(x+1)(x+3): gcd should be monic x+1
        let lin = |a: u64| r.from_terms([(Monomial(vec![1]), 1u64), (Monomial(vec![0]), a)]);
        let f = r.scale(&r.mul(&lin(1), &lin(2)), &2);
        let g = r.scale(&r.mul(&lin(1), &lin(3)), &3);
        assert_eq!(r.gcd(&f, &g), lin(1));
    }

    #[test]
    fn normalize_integer_polys_by_sign() {
        let r = zxy();
        let f = zp(&r, &[(-2, &[1, 0]), (4, &[0, 1])]);
        let (n, u) = r.normalize_unit(&f);
        assert_eq!(n, zp(&r, &[(2, &[1, 0]), (-4, &[0, 1])]));
        assert_eq!(u, zp(&r, &[(-1, &[0, 0])]));
        assert_eq!(r.mul(&u, &n), f);
    }

    #[test]
    fn formatting() {
        let r = zxy();
        let f = zp(&r, &[(3, &[2, 1]), (-1, &[0, 1]), (4, &[0, 0])]);
        assert_eq!(r.fmt_elem(&f), "3*x^2*y - y + 4");
    }

    #[test]
    fn gcd_agrees_with_euclid_univariate() {
        // random-ish fixed cases over Q compared against plain Euclid
        let q = FracField::new(IntegerRing);
        let r = PolyRing::new(q, vec!["x".into()]);
        let qq = FracField::new(IntegerRing);
        let c = |n: i64| qq.make(BigInt::from(n), BigInt::from(1));
        let poly = |cs: &[i64]| {
            r.from_terms(
                cs.iter()
                    .enumerate()
                    .map(|(i, &n)| (Monomial(vec![i as u32]), c(n))),
            )
        };
        let euclid = |mut a: MultiPoly<_>, mut b: MultiPoly<_>| loop {
            if b.is_zero() {
                return r.normalize(&a);
            }
            // remainder via repeated leading-term elimination over the field
            let db = b.degree_in(0).unwrap();
            let lcb = r.lc_in(&b, 0);
            let mut rem = a.clone();
            while let Some(dr) = rem.degree_in(0) {
                if dr < db {
                    break;
                }
                let lcr = r.lc_in(&rem, 0);
                let factor = r.exact_div(&lcr, &lcb).unwrap();
                let t = r.mul_var_pow(&r.mul(&factor, &b), 0, dr - db);
                rem = r.sub(&rem, &t);
            }
            a = b;
            b = rem;
        };
        let f = r.mul(&poly(&[1, 3, 1]), &poly(&[-2, 1]));
        let g = r.mul(&poly(&[1, 3, 1]), &poly(&[5, 0, 7]));
        assert_eq!(r.gcd(&f, &g), euclid(f.clone(), g.clone()));
    }
}
