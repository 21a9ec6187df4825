//! Rational functions num/den over GF(2^k), kept fully reduced with a monic
//! denominator so equality is plain structural equality.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::ScalarError;
use crate::ff::{FFElement, FiniteFieldSpec};
use crate::multipoly::MultiPoly;
use crate::unipoly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(RatFunc { num, den }.normalize())
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        let spec = num.spec();
        RatFunc {
            num,
            den: MultiPoly::one(spec),
        }
    }

    pub fn zero(spec: FiniteFieldSpec) -> Self {
        RatFunc::from_poly(MultiPoly::zero(spec))
    }

    pub fn one(spec: FiniteFieldSpec) -> Self {
        RatFunc::from_poly(MultiPoly::one(spec))
    }

    pub fn constant(c: FFElement) -> Self {
        RatFunc::from_poly(MultiPoly::constant(c))
    }

    pub fn variable(spec: FiniteFieldSpec, name: &str) -> Self {
        RatFunc::from_poly(MultiPoly::variable(spec, name))
    }

    fn normalize(self) -> Self {
        let spec = self.num.spec();
        if self.num.is_zero() {
            return RatFunc::zero(spec);
        }
        if self.den.is_one() {
            return self;
        }
        let g = MultiPoly::gcd(&self.num, &self.den);
        let (num, den) = if g.is_one() {
            (self.num, self.den)
        } else {
            (
                self.num.divrem(&g).expect("gcd divides").0,
                self.den.divrem(&g).expect("gcd divides").0,
            )
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.inv().expect("nonzero denominator");
            RatFunc {
                num: num.scale(inv),
                den: den.scale(inv),
            }
        }
    }

    pub fn spec(&self) -> FiniteFieldSpec {
        self.num.spec()
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<FFElement> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Union of the variables of numerator and denominator, sorted.
    pub fn vars(&self) -> Vec<String> {
        let mut v: Vec<String> = self
            .num
            .vars()
            .iter()
            .chain(self.den.vars().iter())
            .cloned()
            .collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn inv(&self) -> Result<RatFunc, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroInverse);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        let mut acc = RatFunc::one(self.spec());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient-rule partial derivative; char 2 turns both signs into +.
    pub fn derivative(&self, var: &str) -> RatFunc {
        let dn = self.num.derivative(var);
        let dd = self.den.derivative(var);
        let num = &(&dn * &self.den) + &(&self.num * &dd);
        let den = &self.den * &self.den;
        RatFunc::new(num, den).expect("denominator square is nonzero")
    }

    /// Evaluate at a full assignment; a vanishing denominator is a pole error.
    pub fn eval(&self, point: &BTreeMap<String, FFElement>) -> Result<FFElement, ScalarError> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(ScalarError::Pole);
        }
        let n = self.num.eval(point)?;
        Ok(n * d.inv()?)
    }

    /// Substitute one variable by a constant; pole error if the denominator
    /// collapses to zero.
    pub fn substitute(&self, var: &str, value: FFElement) -> Result<RatFunc, ScalarError> {
        let den = self.den.substitute(var, value);
        if den.is_zero() {
            return Err(ScalarError::Pole);
        }
        RatFunc::new(self.num.substitute(var, value), den)
    }

    /// g with g^4 = self, when one exists. On the reduced representation a
    /// fourth power has numerator and denominator that are fourth powers.
    pub fn fourth_root(&self) -> Option<RatFunc> {
        let n = self.num.perfect_root(4)?;
        let d = self.den.perfect_root(4)?;
        Some(RatFunc::new(n, d).expect("nonzero denominator root"))
    }

    pub fn sqrt(&self) -> Option<RatFunc> {
        let n = self.num.perfect_root(2)?;
        let d = self.den.perfect_root(2)?;
        Some(RatFunc::new(n, d).expect("nonzero denominator root"))
    }

    /// v-adic order: ord(num) - ord(den). None on zero.
    pub fn var_order(&self, var: &str) -> Option<i64> {
        let n = self.num.var_order(var)? as i64;
        let d = self.den.var_order(var).expect("nonzero denominator") as i64;
        Some(n - d)
    }

    /// Multiply by var^e (e may be negative).
    pub fn mul_var_power(&self, var: &str, e: i64) -> RatFunc {
        if self.is_zero() || e == 0 {
            return self.clone();
        }
        let (num, den) = if e > 0 {
            (self.num.mul_var_power(var, e as u32), self.den.clone())
        } else {
            (self.num.clone(), self.den.mul_var_power(var, (-e) as u32))
        };
        RatFunc::new(num, den).expect("nonzero denominator")
    }

    /// Reduction modulo `var` of a v-integral function: substitute var = 0.
    pub fn residue_at_zero(&self, var: &str) -> Result<RatFunc, ScalarError> {
        self.substitute(var, self.spec().zero())
    }

    /// (numerator, denominator) as univariate polynomials, when at most one
    /// variable occurs.
    pub fn to_unipair(&self) -> Result<(UniPoly, UniPoly, Option<String>), ScalarError> {
        let vars = self.vars();
        if vars.len() > 1 {
            return Err(ScalarError::NotUnivariate(vars.len()));
        }
        Ok((
            self.num.to_unipoly(),
            self.den.to_unipoly(),
            vars.first().cloned(),
        ))
    }
}

impl std::ops::Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFunc::new(num, den).expect("nonzero denominator")
    }
}

impl std::ops::Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + rhs
    }
}

impl std::ops::Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl std::ops::Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("nonzero denominator")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num_s = self.num.to_string();
        let den_s = self.den.to_string();
        if num_s.contains('+') {
            write!(f, "({num_s})")?;
        } else {
            write!(f, "{num_s}")?;
        }
        write!(f, "/")?;
        if den_s.contains('+') || den_s.contains('*') || den_s.contains('^') {
            write!(f, "({den_s})")
        } else {
            write!(f, "{den_s}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(k: u8) -> FiniteFieldSpec {
        FiniteFieldSpec::new(k).unwrap()
    }

    fn x(spec: FiniteFieldSpec) -> RatFunc {
        RatFunc::variable(spec, "x")
    }

    #[test]
    fn normalization_reduces_and_makes_den_monic() {
        let f = gf(2);
        let z = f.generator();
        let xx = x(f);
        // (z x^2) / (z x) normalizes to x
        let num = xx.num().pow(2).scale(z);
        let den = xx.num().scale(z);
        let r = RatFunc::new(num, den).unwrap();
        assert_eq!(r, xx);
        assert!(r.den().is_one());
    }

    #[test]
    fn specialize_with_pole() {
        let f = gf(1);
        let r = &x(f) / &(&x(f) + &RatFunc::one(f)); // x/(x+1)
        let at0 = BTreeMap::from([("x".to_string(), f.zero())]);
        let at1 = BTreeMap::from([("x".to_string(), f.one())]);
        assert_eq!(r.eval(&at0).unwrap(), f.zero());
        assert_eq!(r.eval(&at1).unwrap_err(), ScalarError::Pole);
    }

    #[test]
    fn specialize_gf4() {
        let f = gf(2);
        let z = f.generator();
        let yy = RatFunc::variable(f, "y");
        let r = &(&x(f) + &yy) / &yy; // (x+y)/y at x=z, y=1 -> z+1
        let pt = BTreeMap::from([("x".to_string(), z), ("y".to_string(), f.one())]);
        assert_eq!(r.eval(&pt).unwrap(), z + f.one());
    }

    #[test]
    fn quotient_rule_derivative() {
        let f = gf(1);
        let inv_x = x(f).inv().unwrap(); // 1/x
        let d = inv_x.derivative("x"); // 1/x^2 (char 2: -1 = 1)
        let expect = RatFunc::new(MultiPoly::one(f), x(f).num().pow(2)).unwrap();
        assert_eq!(d, expect);
        // d(f^2) = 0
        let p = &x(f) + &RatFunc::one(f);
        assert!((&p * &p).derivative("x").is_zero());
    }

    #[test]
    fn fourth_roots() {
        let f = gf(1);
        let p = &x(f).pow(4) + &RatFunc::one(f); // (x+1)^4
        let r = p.fourth_root().unwrap();
        assert_eq!(r, &x(f) + &RatFunc::one(f));
        assert!(x(f).pow(2).fourth_root().is_none());
        // with denominators: (x^4 y^8)/(x+1)^4 style
        let yy = RatFunc::variable(f, "y");
        let q = &(&x(f).pow(4) * &yy.pow(8)) / &p;
        assert_eq!(q.fourth_root().unwrap(), &(&x(f) * &yy.pow(2)) / &r);
    }

    #[test]
    fn arithmetic_normalization_compatible() {
        let f = gf(2);
        let z = f.generator();
        let a = &x(f) / &(&x(f) + &RatFunc::constant(z));
        let b = &RatFunc::variable(f, "y") + &RatFunc::constant(z + f.one());
        let prod = &a * &b;
        let prod2 = &(&a * &b) * &RatFunc::one(f);
        assert_eq!(prod, prod2);
        assert_eq!(&(&a + &b) + &a, b); // a + a = 0
    }

    #[test]
    fn var_order_and_shift() {
        let f = gf(1);
        let yy = RatFunc::variable(f, "y");
        let r = &(&x(f).pow(2) * &yy) / &x(f).pow(5); // y/x^3
        assert_eq!(r.var_order("x"), Some(-3));
        assert_eq!(r.var_order("y"), Some(1));
        assert_eq!(r.mul_var_power("x", 3), yy);
    }

    #[test]
    fn display_roundtrippable_shapes() {
        let f = gf(1);
        let r = &RatFunc::one(f) / &(&x(f) + &RatFunc::one(f));
        assert_eq!(r.to_string(), "1/(x+1)");
        let s = &x(f) / &(&x(f) + &RatFunc::one(f));
        assert_eq!(s.to_string(), "x/(x+1)");
    }
}
