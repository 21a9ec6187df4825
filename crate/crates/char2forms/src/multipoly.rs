//! Sparse multivariate polynomials over GF(2^k) with a graded-lex term order.
//!
//! Variables are kept sorted by name and unused variables are pruned on every
//! construction, so structural equality is canonical equality. Divisions are
//! exact-or-error for genuinely multivariate inputs; the single-variable case
//! falls back to classic euclidean division.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::ScalarError;
use crate::ff::{FFElement, FiniteFieldSpec};
use crate::unipoly::UniPoly;

/// Exponent vector, ordered graded-lexicographically (degree first, then the
/// exponent vector itself, earlier variables weighing more).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn sub(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn add(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultiPoly {
    spec: FiniteFieldSpec,
    vars: Vec<String>,
    terms: BTreeMap<Monomial, FFElement>,
}

impl MultiPoly {
    pub fn new(
        spec: FiniteFieldSpec,
        vars: Vec<String>,
        terms: impl IntoIterator<Item = (Monomial, FFElement)>,
    ) -> Self {
        let mut map: BTreeMap<Monomial, FFElement> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.0.len(), vars.len());
            debug_assert_eq!(c.spec(), spec);
            let entry = map.entry(m).or_insert_with(|| spec.zero());
            *entry = *entry + c;
        }
        let mut p = MultiPoly { spec, vars, terms: map };
        p.prune();
        p
    }

    pub fn zero(spec: FiniteFieldSpec) -> Self {
        MultiPoly {
            spec,
            vars: vec![],
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: FFElement) -> Self {
        let spec = c.spec();
        if c.is_zero() {
            return MultiPoly::zero(spec);
        }
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![]), c);
        MultiPoly { spec, vars: vec![], terms }
    }

    pub fn one(spec: FiniteFieldSpec) -> Self {
        MultiPoly::constant(spec.one())
    }

    pub fn variable(spec: FiniteFieldSpec, name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), spec.one());
        MultiPoly {
            spec,
            vars: vec![name.to_string()],
            terms,
        }
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        if self.terms.is_empty() {
            self.vars.clear();
            return;
        }
        let nv = self.vars.len();
        let mut used = vec![false; nv];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        if used.iter().all(|&u| u) {
            return;
        }
        let keep: Vec<usize> = (0..nv).filter(|&i| used[i]).collect();
        self.vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let old = std::mem::take(&mut self.terms);
        for (m, c) in old {
            let nm = Monomial(keep.iter().map(|&i| m.0[i]).collect());
            self.terms.insert(nm, c);
        }
    }

    pub fn spec(&self) -> FiniteFieldSpec {
        self.spec
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FFElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<FFElement> {
        if self.vars.is_empty() {
            Some(
                self.terms
                    .values()
                    .next()
                    .copied()
                    .unwrap_or_else(|| self.spec.zero()),
            )
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Leading (graded-lex maximal) monomial and coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, FFElement)> {
        self.terms.iter().next_back().map(|(m, &c)| (m, c))
    }

    pub fn leading_coeff(&self) -> FFElement {
        self.leading_term()
            .map(|(_, c)| c)
            .unwrap_or_else(|| self.spec.zero())
    }

    /// Rewrite both polynomials over the union of their variable lists.
    pub fn align(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
        assert_eq!(a.spec, b.spec, "polynomials over different fields");
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let mut vars: Vec<String> = a.vars.iter().chain(b.vars.iter()).cloned().collect();
        vars.sort();
        vars.dedup();
        (a.embed(&vars), b.embed(&vars))
    }

    /// Rewrite over a superset of the current variables (sorted, deduped).
    /// The result deliberately keeps unused variables so that callers can
    /// combine terms index-wise; arithmetic results prune them again.
    pub fn embed(&self, vars: &[String]) -> MultiPoly {
        if self.vars == vars {
            return self.clone();
        }
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset of vars"))
            .collect();
        let terms = self.terms.iter().map(|(m, &c)| {
            let mut e = vec![0u16; vars.len()];
            for (i, &ei) in m.0.iter().enumerate() {
                e[idx[i]] = ei;
            }
            (Monomial(e), c)
        });
        MultiPoly {
            spec: self.spec,
            vars: vars.to_vec(),
            terms: terms.collect(),
        }
    }

    pub fn scale(&self, c: FFElement) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.spec);
        }
        MultiPoly {
            spec: self.spec,
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, &a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.spec);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Classic division with remainder in one variable; exact-division-or-error
    /// as soon as more than one variable is involved.
    pub fn divrem(&self, den: &MultiPoly) -> Result<(MultiPoly, MultiPoly), ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (a, b) = MultiPoly::align(self, den);
        if a.vars.len() <= 1 {
            let var = a.vars.first().cloned().unwrap_or_else(|| "x".into());
            let (q, r) = a.to_unipoly().divrem(&b.to_unipoly())?;
            return Ok((
                MultiPoly::from_unipoly(&q, &var),
                MultiPoly::from_unipoly(&r, &var),
            ));
        }
        // Leading-term reduction; in graded-lex the order is multiplicative,
        // so exact quotients are always found this way.
        let (ltb, lcb) = b.leading_term().expect("nonzero divisor");
        let ltb = ltb.clone();
        let lcb_inv = lcb.inv()?;
        let mut rem = a;
        let mut quot = MultiPoly::zero(self.spec);
        while !rem.is_zero() {
            let (ltr, lcr) = rem.leading_term().expect("nonzero");
            if !ltb.divides(ltr) {
                return Err(ScalarError::InexactDivision);
            }
            let qm = ltr.sub(&ltb);
            let qc = lcr * lcb_inv;
            let qterm = MultiPoly {
                spec: self.spec,
                vars: rem.vars.clone(),
                terms: BTreeMap::from([(qm, qc)]),
            };
            rem = &rem + &(&qterm * &b);
            quot = &quot + &qterm;
        }
        Ok((quot, MultiPoly::zero(self.spec)))
    }

    /// Exact division; panics if the division is not exact (internal use).
    fn div_exact(&self, den: &MultiPoly) -> MultiPoly {
        let (q, r) = self.divrem(den).expect("exact division");
        assert!(r.is_zero(), "exact division left a remainder");
        q
    }

    /// Normalize the graded-lex leading coefficient to 1.
    pub fn monic(&self) -> MultiPoly {
        let lc = self.leading_coeff();
        if lc.is_zero() || lc.is_one() {
            return self.clone();
        }
        self.scale(lc.inv().expect("nonzero"))
    }

    fn pruned(&self) -> MultiPoly {
        let mut p = self.clone();
        p.prune();
        p
    }

    pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        if a.is_zero() {
            return b.pruned().monic();
        }
        if b.is_zero() {
            return a.pruned().monic();
        }
        // Canonicalize first: embedded intermediates may carry unused
        // variables, and the main-variable recursion must not see them.
        let (a, b) = MultiPoly::align(&a.pruned(), &b.pruned());
        match a.vars.len() {
            0 => MultiPoly::one(a.spec),
            1 => {
                let var = a.vars[0].clone();
                let g = a.to_unipoly().gcd(&b.to_unipoly());
                MultiPoly::from_unipoly(&g, &var)
            }
            _ => gcd_multivar(&a, &b),
        }
    }

    /// Partial derivative; char-2 arithmetic, so even powers die.
    pub fn derivative(&self, var: &str) -> MultiPoly {
        let Some(vi) = self.vars.iter().position(|v| v == var) else {
            return MultiPoly::zero(self.spec);
        };
        let terms = self.terms.iter().filter_map(|(m, &c)| {
            if m.0[vi] % 2 == 1 {
                let mut e = m.0.clone();
                e[vi] -= 1;
                Some((Monomial(e), c))
            } else {
                None
            }
        });
        MultiPoly::new(self.spec, self.vars.clone(), terms.collect::<Vec<_>>())
    }

    /// Full evaluation at a point.
    pub fn eval(&self, point: &BTreeMap<String, FFElement>) -> Result<FFElement, ScalarError> {
        let mut vals = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            vals.push(
                *point
                    .get(v)
                    .ok_or_else(|| ScalarError::MissingVariable(v.clone()))?,
            );
        }
        let mut acc = self.spec.zero();
        for (m, &c) in &self.terms {
            let mut t = c;
            for (i, &e) in m.0.iter().enumerate() {
                t = t * vals[i].pow(e as u64);
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Substitute one variable by a field constant.
    pub fn substitute(&self, var: &str, value: FFElement) -> MultiPoly {
        let Some(vi) = self.vars.iter().position(|v| v == var) else {
            return self.clone();
        };
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, &c)| {
                let mut e = m.0.clone();
                let ev = e[vi];
                e[vi] = 0;
                (Monomial(e), c * value.pow(ev as u64))
            })
            .collect();
        MultiPoly::new(self.spec, self.vars.clone(), terms)
    }

    /// Minimal exponent of `var` over all terms; None on the zero polynomial.
    pub fn var_order(&self, var: &str) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let Some(vi) = self.vars.iter().position(|v| v == var) else {
            return Some(0);
        };
        Some(self.terms.keys().map(|m| m.0[vi] as u32).min().unwrap_or(0))
    }

    /// Divide by var^e; requires every term to be divisible.
    pub fn shift_var_down(&self, var: &str, e: u32) -> MultiPoly {
        if e == 0 || self.is_zero() {
            return self.clone();
        }
        let vi = self.vars.iter().position(|v| v == var).expect("variable present");
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, &c)| {
                let mut ex = m.0.clone();
                assert!(ex[vi] as u32 >= e, "term not divisible by the variable power");
                ex[vi] -= e as u16;
                (Monomial(ex), c)
            })
            .collect();
        MultiPoly::new(self.spec, self.vars.clone(), terms)
    }

    pub fn mul_var_power(&self, var: &str, e: u32) -> MultiPoly {
        if e == 0 || self.is_zero() {
            return self.clone();
        }
        let v = MultiPoly::variable(self.spec, var);
        self * &v.pow(e)
    }

    /// r-th root (r in {2, 4}); defined iff all exponents are 0 mod r
    /// (coefficient roots always exist over a perfect field).
    pub fn perfect_root(&self, r: u8) -> Option<MultiPoly> {
        debug_assert!(r == 2 || r == 4);
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, &c) in &self.terms {
            if m.0.iter().any(|&e| e % r as u16 != 0) {
                return None;
            }
            let e = Monomial(m.0.iter().map(|&x| x / r as u16).collect());
            out.push((e, c.frobenius_root(r)));
        }
        Some(MultiPoly::new(self.spec, self.vars.clone(), out))
    }

    /// Decompose into (coefficient, exponent-per-variable) when the polynomial
    /// is a single term.
    pub fn as_monomial(&self) -> Option<(FFElement, Vec<(String, u16)>)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, &c) = self.terms.iter().next().unwrap();
        let exps = self
            .vars
            .iter()
            .zip(&m.0)
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| (v.clone(), e))
            .collect();
        Some((c, exps))
    }

    pub fn to_unipoly(&self) -> UniPoly {
        assert!(self.vars.len() <= 1, "not univariate");
        if self.vars.is_empty() {
            return match self.as_constant() {
                Some(c) if !c.is_zero() => UniPoly::constant(c),
                _ => UniPoly::zero(self.spec),
            };
        }
        let deg = self.terms.keys().map(|m| m.0[0]).max().unwrap_or(0);
        let mut coeffs = vec![self.spec.zero(); deg as usize + 1];
        for (m, &c) in &self.terms {
            coeffs[m.0[0] as usize] = c;
        }
        UniPoly::new(self.spec, coeffs)
    }

    pub fn from_unipoly(p: &UniPoly, var: &str) -> MultiPoly {
        let spec = p.spec();
        let terms: Vec<_> = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| (Monomial(vec![i as u16]), c))
            .collect();
        MultiPoly::new(spec, vec![var.to_string()], terms)
    }
}

// --- multivariate gcd via primitive PRS on the largest variable ---

/// Degree in the main (last) variable.
fn main_degree(p: &MultiPoly, vi: usize) -> u16 {
    p.terms.keys().map(|m| m.0[vi]).max().unwrap_or(0)
}

/// Coefficient of main_var^d, as a polynomial in the remaining variables
/// (still carried over the full variable list; pruning trims it).
fn main_coeff(p: &MultiPoly, vi: usize, d: u16) -> MultiPoly {
    let terms: Vec<_> = p
        .terms
        .iter()
        .filter(|(m, _)| m.0[vi] == d)
        .map(|(m, &c)| {
            let mut e = m.0.clone();
            e[vi] = 0;
            (Monomial(e), c)
        })
        .collect();
    MultiPoly::new(p.spec, p.vars.clone(), terms)
}

fn content(p: &MultiPoly, vi: usize) -> MultiPoly {
    let mut g = MultiPoly::zero(p.spec);
    for d in 0..=main_degree(p, vi) {
        let c = main_coeff(p, vi, d);
        if !c.is_zero() {
            g = MultiPoly::gcd(&g, &c.embed(&p.vars));
        }
    }
    g.embed(&p.vars)
}

fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, vi: usize) -> MultiPoly {
    let db = main_degree(b, vi);
    let lcb = main_coeff(b, vi, db);
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = main_degree(&r, vi);
        if dr < db {
            break;
        }
        let lcr = main_coeff(&r, vi, dr).embed(&r.vars);
        let shift = {
            let mut e = vec![0u16; r.vars.len()];
            e[vi] = dr - db;
            MultiPoly {
                spec: r.spec,
                vars: r.vars.clone(),
                terms: BTreeMap::from([(Monomial(e), r.spec.one())]),
            }
        };
        r = &(&r * &lcb.embed(&r.vars)) + &(&(&lcr * &shift) * b);
    }
    r
}

fn gcd_multivar(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let vars = a.vars.clone();
    let vi = vars.len() - 1;
    let cont_a = content(a, vi);
    let cont_b = content(b, vi);
    let gamma = MultiPoly::gcd(&cont_a, &cont_b).embed(&vars);
    let pa = a.div_exact(&cont_a);
    let pb = b.div_exact(&cont_b);
    let (mut r0, mut r1) = if main_degree(&pa, vi) >= main_degree(&pb, vi) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    while !r1.is_zero() {
        let r = pseudo_rem(&r0, &r1, vi);
        r0 = r1.embed(&vars);
        r1 = if r.is_zero() {
            r.embed(&vars)
        } else {
            let r = r.embed(&vars);
            let c = content(&r, vi);
            r.div_exact(&c).embed(&vars)
        };
    }
    let r0 = r0.embed(&vars);
    let cont = content(&r0, vi);
    let pp = r0.div_exact(&cont);
    (&gamma * &pp.embed(&vars)).monic()
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, mut b) = MultiPoly::align(self, rhs);
        for (m, c) in a.terms {
            let entry = b.terms.entry(m).or_insert_with(|| a.spec.zero());
            *entry = *entry + c;
        }
        b.prune();
        b
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + rhs
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero(self.spec);
        }
        let (a, b) = MultiPoly::align(self, rhs);
        let mut terms: BTreeMap<Monomial, FFElement> = BTreeMap::new();
        for (ma, &ca) in &a.terms {
            for (mb, &cb) in &b.terms {
                let m = ma.add(mb);
                let c = ca * cb;
                let entry = terms.entry(m).or_insert_with(|| a.spec.zero());
                *entry = *entry + c;
            }
        }
        let mut p = MultiPoly {
            spec: a.spec,
            vars: a.vars,
            terms,
        };
        p.prune();
        p
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let coeff_str = c.to_string();
            let is_const_term = m.total_degree() == 0;
            let needs_coeff = is_const_term || !c.is_one();
            if needs_coeff {
                if coeff_str.contains('+') {
                    write!(f, "({coeff_str})")?;
                } else {
                    write!(f, "{coeff_str}")?;
                }
            }
            let mut wrote_var = false;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if needs_coeff || wrote_var {
                    write!(f, "*")?;
                }
                wrote_var = true;
                if e == 1 {
                    write!(f, "{}", self.vars[i])?;
                } else {
                    write!(f, "{}^{}", self.vars[i], e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(k: u8) -> FiniteFieldSpec {
        FiniteFieldSpec::new(k).unwrap()
    }

    fn var(spec: FiniteFieldSpec, n: &str) -> MultiPoly {
        MultiPoly::variable(spec, n)
    }

    #[test]
    fn frobenius_squares_sums() {
        let f = gf(1);
        let xy = &var(f, "x") + &var(f, "y");
        let sq = &xy * &xy;
        let expect = &var(f, "x").pow(2) + &var(f, "y").pow(2);
        assert_eq!(sq, expect); // (x+y)^2 = x^2 + y^2 in char 2
    }

    #[test]
    fn add_self_is_zero() {
        let f = gf(2);
        let p = &(&var(f, "x") * &var(f, "y")) + &MultiPoly::one(f);
        assert!((&p + &p).is_zero());
    }

    #[test]
    fn gcd_factors_common_variable() {
        let f = gf(1);
        let x = var(f, "x");
        let y = var(f, "y");
        let p = &x.pow(2) + &(&x * &y); // x^2 + xy = x(x + y)
        let g = MultiPoly::gcd(&p, &x);
        assert_eq!(g, x);
    }

    #[test]
    fn gcd_nontrivial_two_vars() {
        let f = gf(1);
        let x = var(f, "x");
        let y = var(f, "y");
        let common = &x + &y;
        let a = &common * &(&x * &y);
        let b = &common * &(&x + &MultiPoly::one(f));
        let g = MultiPoly::gcd(&a, &b);
        assert_eq!(g, common);
    }

    #[test]
    fn gcd_over_gf4_with_contents() {
        let f = gf(2);
        let z = f.generator();
        let x = var(f, "x");
        let y = var(f, "y");
        let common = &(&x * &y) + &MultiPoly::constant(z);
        let a = &common * &x.pow(2);
        let b = &common * &(&y + &MultiPoly::one(f));
        let g = MultiPoly::gcd(&a, &b);
        // gcd is monic in the leading graded-lex coefficient
        assert_eq!(g, common.monic());
    }

    #[test]
    fn exact_division_and_error() {
        let f = gf(1);
        let x = var(f, "x");
        let y = var(f, "y");
        let p = &(&x + &y) * &(&x * &y);
        let (q, r) = p.divrem(&(&x + &y)).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, &x * &y);
        assert_eq!(
            p.divrem(&(&x + &MultiPoly::one(f))).unwrap_err(),
            ScalarError::InexactDivision
        );
    }

    #[test]
    fn univariate_divrem_has_remainders() {
        let f = gf(1);
        let x = var(f, "x");
        let (q, r) = x.pow(2).divrem(&(&x + &MultiPoly::one(f))).unwrap();
        assert_eq!(q, &x + &MultiPoly::one(f));
        assert_eq!(r, MultiPoly::one(f));
    }

    #[test]
    fn derivative_char2() {
        let f = gf(1);
        let x = var(f, "x");
        let y = var(f, "y");
        assert_eq!((&x * &y).derivative("x"), y);
        assert!((&x.pow(2) * &y).derivative("x").is_zero());
        let p = &x.pow(3) + &(&x * &y.pow(2));
        assert_eq!(p.derivative("x"), &x.pow(2) + &y.pow(2));
    }

    #[test]
    fn perfect_roots() {
        let f = gf(1);
        let x = var(f, "x");
        let y = var(f, "y");
        let p = &x.pow(4) * &y.pow(8);
        assert_eq!(p.perfect_root(4).unwrap(), &x * &y.pow(2));
        // x^4 + 1 = (x+1)^4
        let q = &x.pow(4) + &MultiPoly::one(f);
        assert_eq!(q.perfect_root(4).unwrap(), &x + &MultiPoly::one(f));
        assert!(x.pow(2).perfect_root(4).is_none());
    }

    #[test]
    fn substitution_and_eval() {
        let f = gf(2);
        let z = f.generator();
        let x = var(f, "x");
        let y = var(f, "y");
        let p = &x + &y; // evaluate at x = z, y = 1
        let point = BTreeMap::from([("x".to_string(), z), ("y".to_string(), f.one())]);
        assert_eq!(p.eval(&point).unwrap(), z + f.one());
        let sub = p.substitute("x", z);
        assert_eq!(sub, &y + &MultiPoly::constant(z));
    }

    #[test]
    fn pruning_gives_canonical_equality() {
        let f = gf(1);
        let x = var(f, "x");
        let y = var(f, "y");
        let p = &(&x + &y) + &y; // the y disappears
        assert_eq!(p, x);
        assert_eq!(p.vars(), &["x".to_string()]);
    }

    #[test]
    fn display_formats() {
        let f = gf(2);
        let z = f.generator();
        let x = var(f, "x");
        let y = var(f, "y");
        let p = &(&x.pow(2) * &y) + &MultiPoly::one(f);
        assert_eq!(p.to_string(), "x^2*y+1");
        let q = &x.scale(z + f.one()) + &MultiPoly::constant(z);
        assert_eq!(q.to_string(), "(g+1)*x+g");
    }
}
