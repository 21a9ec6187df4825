//! Dense univariate polynomials over GF(2^k): the workhorse behind fraction
//! normalization in one variable, place enumeration (factorization into monic
//! irreducibles) and the Artin-Schreier pole reduction.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::ScalarError;
use crate::ff::{FFElement, FiniteFieldSpec};

/// coeffs[i] is the coefficient of x^i; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    spec: FiniteFieldSpec,
    coeffs: Vec<FFElement>,
}

impl UniPoly {
    pub fn new(spec: FiniteFieldSpec, mut coeffs: Vec<FFElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { spec, coeffs }
    }

    pub fn zero(spec: FiniteFieldSpec) -> Self {
        UniPoly { spec, coeffs: vec![] }
    }

    pub fn constant(c: FFElement) -> Self {
        UniPoly::new(c.spec(), vec![c])
    }

    pub fn one(spec: FiniteFieldSpec) -> Self {
        UniPoly::constant(spec.one())
    }

    /// The monomial c * x^d.
    pub fn monomial(c: FFElement, d: usize) -> Self {
        let spec = c.spec();
        let mut coeffs = vec![spec.zero(); d + 1];
        coeffs[d] = c;
        UniPoly::new(spec, coeffs)
    }

    pub fn x(spec: FiniteFieldSpec) -> Self {
        UniPoly::monomial(spec.one(), 1)
    }

    pub fn spec(&self) -> FiniteFieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; zero polynomial reports -1.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, i: usize) -> FFElement {
        self.coeffs.get(i).copied().unwrap_or_else(|| self.spec.zero())
    }

    pub fn coeffs(&self) -> &[FFElement] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> FFElement {
        self.coeffs.last().copied().unwrap_or_else(|| self.spec.zero())
    }

    pub fn scale(&self, c: FFElement) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero(self.spec);
        }
        UniPoly::new(self.spec, self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.leading_coeff().inv().expect("nonzero leading coefficient"))
    }

    pub fn eval(&self, x: FFElement) -> FFElement {
        let mut acc = self.spec.zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn divrem(&self, den: &UniPoly) -> Result<(UniPoly, UniPoly), ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let dd = den.degree();
        let lc_inv = den.leading_coeff().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.spec.zero(); (self.degree() - dd + 1).max(0) as usize];
        while rem.len() as i64 - 1 >= dd {
            let shift = rem.len() - 1 - dd as usize;
            let factor = *rem.last().unwrap() * lc_inv;
            quot[shift] = factor;
            for (i, &dc) in den.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i] + dc * factor;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((UniPoly::new(self.spec, quot), UniPoly::new(self.spec, rem)))
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// (g, s) with g = gcd(self, m) and s * self = g mod m; used for inverses
    /// modulo an irreducible place.
    pub fn xgcd_mod(&self, m: &UniPoly) -> (UniPoly, UniPoly) {
        let mut r0 = m.clone();
        let mut r1 = self.divrem(m).expect("nonzero modulus").1;
        let mut s0 = UniPoly::zero(self.spec);
        let mut s1 = UniPoly::one(self.spec);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            let s = &s0 + &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        let lc = r0.leading_coeff();
        if lc.is_zero() {
            (r0, s0)
        } else {
            let inv = lc.inv().expect("nonzero");
            (r0.scale(inv), s0.scale(inv))
        }
    }

    pub fn inv_mod(&self, m: &UniPoly) -> Result<UniPoly, ScalarError> {
        let (g, s) = self.xgcd_mod(m);
        if !g.is_one() {
            return Err(ScalarError::ZeroInverse);
        }
        Ok(s.divrem(m)?.1)
    }

    pub fn pow_mod(&self, mut e: u64, m: &UniPoly) -> UniPoly {
        let mut base = self.divrem(m).expect("nonzero modulus").1;
        let mut acc = UniPoly::one(self.spec);
        while e > 0 {
            if e & 1 != 0 {
                acc = (&acc * &base).divrem(m).expect("nonzero").1;
            }
            base = (&base * &base).divrem(m).expect("nonzero").1;
            e >>= 1;
        }
        acc
    }

    /// Formal derivative (char 2: even-degree terms die).
    pub fn derivative(&self) -> UniPoly {
        let mut out = vec![self.spec.zero(); self.coeffs.len().saturating_sub(1)];
        for (i, &c) in self.coeffs.iter().enumerate().skip(1) {
            if i % 2 == 1 {
                out[i - 1] = c;
            }
        }
        UniPoly::new(self.spec, out)
    }

    /// Square root in char 2: defined iff all odd coefficients vanish.
    pub fn sqrt(&self) -> Option<UniPoly> {
        let mut out = vec![self.spec.zero(); self.coeffs.len() / 2 + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i % 2 == 1 {
                if !c.is_zero() {
                    return None;
                }
            } else {
                out[i / 2] = c.frobenius_root(2);
            }
        }
        Some(UniPoly::new(self.spec, out))
    }

    /// Square-root representative modulo an irreducible m: c with c^2 = self (mod m).
    /// GF(2^k)[x]/(m) is a finite field, so squaring is bijective.
    pub fn sqrt_mod(&self, m: &UniPoly) -> UniPoly {
        let d = m.degree() as u32;
        let bits = self.spec.degree() as u32 * d;
        // sqrt = a^(2^(bits-1)) in the residue field of size 2^bits.
        let mut r = self.divrem(m).expect("nonzero").1;
        for _ in 0..bits.saturating_sub(1) {
            r = (&r * &r).divrem(m).expect("nonzero").1;
        }
        r
    }

    /// Factorization into monic irreducibles with multiplicities; the leading
    /// coefficient is returned separately. Distinct-degree then equal-degree
    /// splitting with a fixed-seed generator, so the output order is stable.
    pub fn factor(&self) -> (FFElement, Vec<(UniPoly, usize)>) {
        assert!(!self.is_zero(), "cannot factor zero");
        let lc = self.leading_coeff();
        let mut factors: Vec<(UniPoly, usize)> = vec![];
        let mut rng = ChaCha12Rng::seed_from_u64(0x4b61746f);
        factor_rec(&self.monic(), 1, &mut factors, &mut rng);
        factors.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| key(&a.0).cmp(&key(&b.0)))
        });
        (lc, factors)
    }
}

fn key(p: &UniPoly) -> Vec<u32> {
    p.coeffs().iter().map(|c| c.bits()).collect()
}

fn factor_rec(f: &UniPoly, mult: usize, out: &mut Vec<(UniPoly, usize)>, rng: &mut ChaCha12Rng) {
    if f.degree() <= 0 {
        return;
    }
    let d = f.derivative();
    if d.is_zero() {
        // f = g^2 in char 2.
        let g = f.sqrt().expect("derivative zero means a perfect square");
        factor_rec(&g, mult * 2, out, rng);
        return;
    }
    // f / gcd(f, f') is the product of the odd-multiplicity irreducibles,
    // each once; the even-multiplicity part survives in `rest` and is a
    // perfect square handled by the recursion.
    let sf_part = f.divrem(&f.gcd(&d)).expect("gcd divides").0;
    let mut rest = f.clone();
    for p in squarefree_factor(&sf_part.monic(), rng) {
        let mut m = 0;
        loop {
            let (q, r) = rest.divrem(&p).expect("nonzero");
            if !r.is_zero() {
                break;
            }
            rest = q;
            m += 1;
        }
        out.push((p, m * mult));
    }
    factor_rec(&rest.monic(), mult, out, rng);
}

/// Factor a squarefree monic polynomial.
fn squarefree_factor(f: &UniPoly, rng: &mut ChaCha12Rng) -> Vec<UniPoly> {
    let spec = f.spec();
    let q = spec.order();
    let mut out = vec![];
    let mut rest = f.clone();
    let x = UniPoly::x(spec);
    let mut frob = x.pow_mod(q, &rest); // x^(q^d) mod rest, updated per degree
    let mut d = 1usize;
    while rest.degree() > 0 {
        if (rest.degree() as usize) < 2 * d {
            out.push(rest.monic());
            break;
        }
        let g = rest.gcd(&(&frob + &x));
        if g.degree() > 0 {
            equal_degree_split(&g, d, &mut out, rng);
            rest = rest.divrem(&g).expect("gcd divides").0;
            frob = frob.divrem(&rest).expect("nonzero").1;
        }
        d += 1;
        frob = frob.pow_mod(q, &rest);
    }
    out
}

/// Cantor-Zassenhaus for char 2: split a product of degree-d irreducibles by
/// gcd with the absolute trace map of random elements.
fn equal_degree_split(f: &UniPoly, d: usize, out: &mut Vec<UniPoly>, rng: &mut ChaCha12Rng) {
    if f.degree() as usize == d {
        out.push(f.monic());
        return;
    }
    let spec = f.spec();
    let bits = spec.degree() as usize * d;
    loop {
        let h = random_poly(spec, f.degree() as usize - 1, rng);
        // T(h) = h + h^2 + h^4 + ... (bits terms) mod f.
        let mut t = h.clone();
        let mut pow = h.clone();
        for _ in 1..bits {
            pow = (&pow * &pow).divrem(f).expect("nonzero").1;
            t = &t + &pow;
        }
        let g = f.gcd(&t);
        let deg = g.degree();
        if deg > 0 && deg < f.degree() {
            equal_degree_split(&g, d, out, rng);
            equal_degree_split(&f.divrem(&g).expect("gcd divides").0, d, out, rng);
            return;
        }
    }
}

fn random_poly(spec: FiniteFieldSpec, max_deg: usize, rng: &mut ChaCha12Rng) -> UniPoly {
    let coeffs = (0..=max_deg)
        .map(|_| spec.element(rng.gen_range(0..spec.order()) as u32))
        .collect();
    UniPoly::new(spec, coeffs)
}

impl std::ops::Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        assert_eq!(self.spec, rhs.spec);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::new(self.spec, coeffs)
    }
}

impl std::ops::Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        assert_eq!(self.spec, rhs.spec);
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.spec);
        }
        let mut out = vec![self.spec.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        UniPoly::new(self.spec, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(k: u8) -> FiniteFieldSpec {
        FiniteFieldSpec::new(k).unwrap()
    }

    fn poly(spec: FiniteFieldSpec, bits: &[u32]) -> UniPoly {
        UniPoly::new(spec, bits.iter().map(|&b| spec.element(b)).collect())
    }

    #[test]
    fn divrem_and_gcd() {
        let f = gf(1);
        // (x^2 + x) / x = x + 1 rem 0
        let num = poly(f, &[0, 1, 1]);
        let den = poly(f, &[0, 1]);
        let (q, r) = num.divrem(&den).unwrap();
        assert_eq!(q, poly(f, &[1, 1]));
        assert!(r.is_zero());
        // gcd(x^2+1, x+1) = x+1   (x^2+1 = (x+1)^2)
        let g = poly(f, &[1, 0, 1]).gcd(&poly(f, &[1, 1]));
        assert_eq!(g, poly(f, &[1, 1]));
    }

    #[test]
    fn inverse_mod_irreducible() {
        let f = gf(1);
        let m = poly(f, &[1, 1, 0, 1]); // x^3 + x + 1, irreducible
        let a = poly(f, &[0, 1]); // x
        let inv = a.inv_mod(&m).unwrap();
        let prod = (&a * &inv).divrem(&m).unwrap().1;
        assert!(prod.is_one());
    }

    #[test]
    fn sqrt_char2() {
        let f = gf(2);
        let z = f.generator();
        // (x + z)^2 = x^2 + z^2
        let p = poly(f, &[z.bits(), 1]);
        let sq = &p * &p;
        assert_eq!(sq.sqrt().unwrap(), p);
        assert!(poly(f, &[0, 1, 1]).sqrt().is_none());
    }

    #[test]
    fn sqrt_mod_place() {
        let f = gf(1);
        let m = poly(f, &[1, 1, 0, 1]); // x^3 + x + 1
        for bits in 1..8u32 {
            let a = poly(f, &[bits & 1, (bits >> 1) & 1, (bits >> 2) & 1]);
            if a.is_zero() {
                continue;
            }
            let s = a.sqrt_mod(&m);
            let back = (&s * &s).divrem(&m).unwrap().1;
            assert_eq!(back, a.divrem(&m).unwrap().1);
        }
    }

    #[test]
    fn factor_small_products() {
        let f = gf(1);
        // x^2 + x = x (x + 1)
        let (lc, fs) = poly(f, &[0, 1, 1]).factor();
        assert!(lc.is_one());
        assert_eq!(
            fs,
            vec![(poly(f, &[0, 1]), 1), (poly(f, &[1, 1]), 1)]
        );
        // (x^2 + x + 1)^2, irreducible squared
        let irr = poly(f, &[1, 1, 1]);
        let sq = &irr * &irr;
        let (_, fs) = sq.factor();
        assert_eq!(fs, vec![(irr.clone(), 2)]);
        // x^4 + x = x (x+1) (x^2+x+1)
        let (_, fs) = poly(f, &[0, 1, 0, 0, 1]).factor();
        assert_eq!(fs.len(), 3);
        let prod = fs.iter().fold(UniPoly::one(f), |acc, (p, m)| {
            let mut acc = acc;
            for _ in 0..*m {
                acc = &acc * p;
            }
            acc
        });
        assert_eq!(prod, poly(f, &[0, 1, 0, 0, 1]));
    }

    #[test]
    fn factor_over_gf4_roundtrip() {
        let f = gf(2);
        let z = f.generator();
        // x^2 + x + 1 = (x + z)(x + z + 1) over GF(4)
        let p = poly(f, &[1, 1, 1]);
        let (_, fs) = p.factor();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(q, m)| q.degree() == 1 && *m == 1));
        let prod = &fs[0].0 * &fs[1].0;
        assert_eq!(prod, p);
        let _ = z;
    }

    #[test]
    fn factor_mixed_multiplicities() {
        let f = gf(1);
        // x^3 (x+1)^2 (x^2+x+1)
        let x = poly(f, &[0, 1]);
        let x1 = poly(f, &[1, 1]);
        let irr = poly(f, &[1, 1, 1]);
        let mut p = UniPoly::one(f);
        for q in [&x, &x, &x, &x1, &x1, &irr] {
            p = &p * q;
        }
        let (_, fs) = p.factor();
        assert_eq!(
            fs,
            vec![(x, 3), (x1, 2), (irr, 1)]
        );
    }
}
