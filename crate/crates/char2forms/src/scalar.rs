//! The scalar tower shared by every higher layer: an element of GF(2^k) or a
//! rational function over it, behind one enum with constant fast paths.
//!
//! A `Func` that collapses to a constant demotes to `Const` on construction,
//! so structural equality is canonical equality.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::ScalarError;
use crate::ff::{FFElement, FiniteFieldSpec};
use crate::multipoly::MultiPoly;
use crate::ratfunc::RatFunc;

/// Field descriptor: GF(2^k) when `vars` is empty, otherwise the rational
/// function field GF(2^k)(vars).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BaseField {
    spec: FiniteFieldSpec,
    vars: Vec<String>,
}

impl BaseField {
    pub fn finite(spec: FiniteFieldSpec) -> Self {
        BaseField { spec, vars: vec![] }
    }

    pub fn rational(spec: FiniteFieldSpec, mut vars: Vec<String>) -> Self {
        vars.sort();
        vars.dedup();
        assert!(
            vars.iter().all(|v| v != "g"),
            "`g` is reserved for the field generator"
        );
        BaseField { spec, vars }
    }

    pub fn spec(&self) -> FiniteFieldSpec {
        self.spec
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_finite(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn has_var(&self, v: &str) -> bool {
        self.vars.iter().any(|w| w == v)
    }

    /// The same base with one variable removed (residue field at that place).
    pub fn without_var(&self, v: &str) -> BaseField {
        BaseField {
            spec: self.spec,
            vars: self.vars.iter().filter(|w| *w != v).cloned().collect(),
        }
    }

    /// The same base with extra variables adjoined.
    pub fn with_vars(&self, extra: &[String]) -> BaseField {
        let mut vars = self.vars.clone();
        vars.extend(extra.iter().cloned());
        BaseField::rational(self.spec, vars)
    }

    pub fn zero(&self) -> Scalar {
        Scalar::Const(self.spec.zero())
    }

    pub fn one(&self) -> Scalar {
        Scalar::Const(self.spec.one())
    }

    pub fn var(&self, name: &str) -> Scalar {
        assert!(self.has_var(name), "variable `{name}` not in the base");
        Scalar::Func(RatFunc::variable(self.spec, name))
    }

    /// Does the scalar live inside this base?
    pub fn contains(&self, s: &Scalar) -> bool {
        s.spec() == self.spec && s.vars().iter().all(|v| self.has_var(v))
    }
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})", self.spec.degree())?;
        if !self.vars.is_empty() {
            write!(f, "({})", self.vars.join(","))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Scalar {
    Const(FFElement),
    Func(RatFunc),
}

impl Scalar {
    pub fn from_ratfunc(r: RatFunc) -> Scalar {
        match r.as_constant() {
            Some(c) => Scalar::Const(c),
            None => Scalar::Func(r),
        }
    }

    pub fn constant(c: FFElement) -> Scalar {
        Scalar::Const(c)
    }

    pub fn zero(spec: FiniteFieldSpec) -> Scalar {
        Scalar::Const(spec.zero())
    }

    pub fn one(spec: FiniteFieldSpec) -> Scalar {
        Scalar::Const(spec.one())
    }

    pub fn variable(spec: FiniteFieldSpec, name: &str) -> Scalar {
        Scalar::Func(RatFunc::variable(spec, name))
    }

    pub fn spec(&self) -> FiniteFieldSpec {
        match self {
            Scalar::Const(c) => c.spec(),
            Scalar::Func(r) => r.spec(),
        }
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        match self {
            Scalar::Const(c) => RatFunc::constant(*c),
            Scalar::Func(r) => r.clone(),
        }
    }

    pub fn as_constant(&self) -> Option<FFElement> {
        match self {
            Scalar::Const(c) => Some(*c),
            Scalar::Func(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Const(c) if c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Const(c) if c.is_one())
    }

    pub fn vars(&self) -> Vec<String> {
        match self {
            Scalar::Const(_) => vec![],
            Scalar::Func(r) => r.vars(),
        }
    }

    pub fn square(&self) -> Scalar {
        self * self
    }

    pub fn pow(&self, e: u32) -> Scalar {
        match self {
            Scalar::Const(c) => Scalar::Const(c.pow(e as u64)),
            Scalar::Func(r) => Scalar::from_ratfunc(r.pow(e)),
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Const(c) => Ok(Scalar::Const(c.inv()?)),
            Scalar::Func(r) => Ok(Scalar::from_ratfunc(r.inv()?)),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn fourth_root(&self) -> Option<Scalar> {
        match self {
            Scalar::Const(c) => Some(Scalar::Const(c.frobenius_root(4))),
            Scalar::Func(r) => r.fourth_root().map(Scalar::from_ratfunc),
        }
    }

    pub fn sqrt(&self) -> Option<Scalar> {
        match self {
            Scalar::Const(c) => Some(Scalar::Const(c.frobenius_root(2))),
            Scalar::Func(r) => r.sqrt().map(Scalar::from_ratfunc),
        }
    }

    pub fn derivative(&self, var: &str) -> Scalar {
        match self {
            Scalar::Const(c) => Scalar::Const(c.spec().zero()),
            Scalar::Func(r) => Scalar::from_ratfunc(r.derivative(var)),
        }
    }

    /// Full evaluation at a finite-field point.
    pub fn eval(&self, point: &BTreeMap<String, FFElement>) -> Result<FFElement, ScalarError> {
        match self {
            Scalar::Const(c) => Ok(*c),
            Scalar::Func(r) => r.eval(point),
        }
    }

    pub fn substitute(&self, var: &str, value: FFElement) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Const(c) => Ok(Scalar::Const(*c)),
            Scalar::Func(r) => Ok(Scalar::from_ratfunc(r.substitute(var, value)?)),
        }
    }

    /// v-adic order (constants and v-free functions have order 0; zero None).
    pub fn var_order(&self, var: &str) -> Option<i64> {
        match self {
            Scalar::Const(c) => {
                if c.is_zero() {
                    None
                } else {
                    Some(0)
                }
            }
            Scalar::Func(r) => r.var_order(var),
        }
    }

    pub fn mul_var_power(&self, var: &str, e: i64) -> Scalar {
        match self {
            Scalar::Const(_) if self.is_zero() => self.clone(),
            _ => Scalar::from_ratfunc(self.to_ratfunc().mul_var_power(var, e)),
        }
    }

    /// Reduce a v-integral scalar modulo v (substitute v = 0).
    pub fn residue_at_zero(&self, var: &str) -> Result<Scalar, ScalarError> {
        self.substitute(var, self.spec().zero())
    }

    /// Single-term decomposition c * prod v_i^{e_i}, when the scalar is a
    /// monomial (denominator 1, one term).
    pub fn as_monomial(&self) -> Option<(FFElement, Vec<(String, u16)>)> {
        match self {
            Scalar::Const(c) => {
                if c.is_zero() {
                    None
                } else {
                    Some((*c, vec![]))
                }
            }
            Scalar::Func(r) => {
                if r.is_poly() {
                    r.num().as_monomial()
                } else {
                    None
                }
            }
        }
    }
}

impl From<FFElement> for Scalar {
    fn from(c: FFElement) -> Scalar {
        Scalar::Const(c)
    }
}

impl From<RatFunc> for Scalar {
    fn from(r: RatFunc) -> Scalar {
        Scalar::from_ratfunc(r)
    }
}

impl From<MultiPoly> for Scalar {
    fn from(p: MultiPoly) -> Scalar {
        Scalar::from_ratfunc(RatFunc::from_poly(p))
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $ffop:tt) => {
        impl std::ops::$trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Const(a), Scalar::Const(b)) => Scalar::Const(*a $ffop *b),
                    _ => Scalar::from_ratfunc(
                        std::ops::$trait::$method(&self.to_ratfunc(), &rhs.to_ratfunc()),
                    ),
                }
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, +);
scalar_binop!(Mul, mul, *);

impl std::ops::Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Const(c) => write!(f, "{c}"),
            Scalar::Func(r) => write!(f, "{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(k: u8) -> FiniteFieldSpec {
        FiniteFieldSpec::new(k).unwrap()
    }

    #[test]
    fn constant_demotion_is_canonical() {
        let f = gf(1);
        let x = Scalar::variable(f, "x");
        let r = &(&x + &Scalar::one(f)) + &x; // x + 1 + x = 1
        assert_eq!(r, Scalar::one(f));
        assert!(matches!(r, Scalar::Const(_)));
    }

    #[test]
    fn mixed_arithmetic_promotes() {
        let f = gf(2);
        let z = f.generator();
        let x = Scalar::variable(f, "x");
        let zx = &Scalar::constant(z) * &x;
        assert_eq!(zx.vars(), vec!["x".to_string()]);
        assert_eq!(&zx / &x, Scalar::constant(z));
    }

    #[test]
    fn var_orders() {
        let f = gf(1);
        let x = Scalar::variable(f, "x");
        let y = Scalar::variable(f, "y");
        let s = &(&x * &x) / &y;
        assert_eq!(s.var_order("x"), Some(2));
        assert_eq!(s.var_order("y"), Some(-1));
        assert_eq!(s.var_order("t"), Some(0));
        assert_eq!(s.mul_var_power("y", 1), &x * &x);
    }

    #[test]
    fn base_field_membership() {
        let f = gf(1);
        let base = BaseField::rational(f, vec!["s".into(), "t".into()]);
        assert!(base.contains(&base.var("s")));
        let x = Scalar::variable(f, "x");
        assert!(!base.contains(&x));
        assert!(BaseField::finite(f).is_finite());
        assert!(!base.is_finite());
    }
}
