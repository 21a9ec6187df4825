//! Arithmetic in the binary fields GF(2^k), 1 <= k <= 16, with a canonical
//! modulus per degree so that equal `k` always means the identical field.

use std::fmt;
use std::sync::OnceLock;

use crate::error::ScalarError;

/// Maximum supported extension degree over GF(2).
pub const MAX_DEGREE: u8 = 16;

/// Descriptor of GF(2^k): the degree and the defining irreducible polynomial,
/// encoded as a bit vector (bit i = coefficient of x^i).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteFieldSpec {
    k: u8,
    modulus: u32,
}

/// Search upward from 2^k for the first irreducible bit polynomial of degree k.
///
/// For k = 1 the literal smallest irreducible is x itself, but x reduces the
/// generator element to 0; we use x + 1 there so the generator is 1.
fn canonical_modulus(k: u8) -> u32 {
    if k == 1 {
        return 0b11;
    }
    let lo = 1u32 << k;
    let hi = 1u32 << (k + 1);
    for m in lo..hi {
        if bitpoly_is_irreducible(m, k) {
            return m;
        }
    }
    unreachable!("an irreducible polynomial of degree {k} exists");
}

fn modulus_table() -> &'static [u32; MAX_DEGREE as usize + 1] {
    static TABLE: OnceLock<[u32; MAX_DEGREE as usize + 1]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [0u32; MAX_DEGREE as usize + 1];
        for k in 1..=MAX_DEGREE {
            t[k as usize] = canonical_modulus(k);
        }
        t
    })
}

// --- bit-polynomial helpers over GF(2) (used for modulus search and reduction) ---

fn bitpoly_deg(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

fn bitpoly_mul(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 != 0 {
            acc ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    acc
}

fn bitpoly_rem(mut a: u64, m: u64) -> u64 {
    let dm = bitpoly_deg(m);
    while bitpoly_deg(a) >= dm && a != 0 {
        a ^= m << (bitpoly_deg(a) - dm);
    }
    a
}

fn bitpoly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = bitpoly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

fn bitpoly_mulmod(a: u64, b: u64, m: u64) -> u64 {
    bitpoly_rem(bitpoly_mul(a, b), m)
}

/// Rabin's test: x^(2^k) = x mod m, and gcd(x^(2^(k/p)) - x, m) = 1 for prime p | k.
fn bitpoly_is_irreducible(m: u32, k: u8) -> bool {
    let m = m as u64;
    let frob = |times: u8| -> u64 {
        let mut r = 0b10u64; // x
        for _ in 0..times {
            r = bitpoly_mulmod(r, r, m);
        }
        r
    };
    if frob(k) != 0b10 {
        return false;
    }
    let mut primes = vec![];
    let mut n = k;
    let mut p = 2u8;
    while n > 1 {
        if n % p == 0 {
            primes.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    for p in primes {
        if bitpoly_gcd(frob(k / p) ^ 0b10, m) != 1 {
            return false;
        }
    }
    true
}

impl FiniteFieldSpec {
    /// The field GF(2^k) with its canonical modulus.
    pub fn new(k: u8) -> Result<Self, ScalarError> {
        if k == 0 || k > MAX_DEGREE {
            return Err(ScalarError::UnsupportedDegree(k));
        }
        Ok(FiniteFieldSpec {
            k,
            modulus: modulus_table()[k as usize],
        })
    }

    pub fn degree(&self) -> u8 {
        self.k
    }

    /// Field size 2^k.
    pub fn order(&self) -> u64 {
        1u64 << self.k
    }

    pub fn modulus_bits(&self) -> u32 {
        self.modulus
    }

    pub fn zero(&self) -> FFElement {
        FFElement { spec: *self, bits: 0 }
    }

    pub fn one(&self) -> FFElement {
        FFElement { spec: *self, bits: 1 }
    }

    /// The class of x modulo the canonical modulus (equals 1 when k = 1).
    pub fn generator(&self) -> FFElement {
        self.element(bitpoly_rem(0b10, self.modulus as u64) as u32)
    }

    /// Element from polynomial-basis coordinates; bits above k must be clear.
    pub fn element(&self, bits: u32) -> FFElement {
        debug_assert!(bits < (1u32 << self.k));
        FFElement { spec: *self, bits }
    }

    /// All field elements in coordinate order.
    pub fn iter(&self) -> impl Iterator<Item = FFElement> + '_ {
        (0..self.order() as u32).map(move |b| self.element(b))
    }

    /// Some y with y^2 + y = c, or None when the trace obstruction is nonzero.
    /// When solvable the smaller of the two solutions {y, y+1} is returned.
    pub fn solve_artin_schreier(&self, c: FFElement) -> Option<FFElement> {
        assert_eq!(c.spec, *self, "element from a different field");
        // y |-> y^2 + y is GF(2)-linear; solve the k x k bit system directly.
        let k = self.k as usize;
        let mut cols = [0u32; MAX_DEGREE as usize];
        for (i, col) in cols.iter_mut().enumerate().take(k) {
            let e = self.element(1 << i);
            *col = (e * e + e).bits;
        }
        // Gaussian elimination on the transposed system M y = c.
        let mut rows = vec![0u64; k];
        for r in 0..k {
            for (i, col) in cols.iter().enumerate().take(k) {
                if (col >> r) & 1 != 0 {
                    rows[r] |= 1 << i;
                }
            }
            rows[r] |= (((c.bits >> r) & 1) as u64) << k;
        }
        let mut pivot_row_of_col = vec![usize::MAX; k];
        let mut next = 0;
        for col in 0..k {
            if let Some(p) = (next..k).find(|&r| (rows[r] >> col) & 1 != 0) {
                rows.swap(next, p);
                for r in 0..k {
                    if r != next && (rows[r] >> col) & 1 != 0 {
                        rows[r] ^= rows[next];
                    }
                }
                pivot_row_of_col[col] = next;
                next += 1;
            }
        }
        // Inconsistent row => no solution (trace obstruction).
        for row in rows.iter().take(k).skip(next) {
            if *row != 0 {
                return None;
            }
        }
        let mut y = 0u32;
        for col in 0..k {
            let pr = pivot_row_of_col[col];
            if pr != usize::MAX && (rows[pr] >> k) & 1 != 0 {
                y |= 1 << col;
            }
        }
        let y = self.element(y);
        let alt = y + self.one();
        Some(if alt.bits < y.bits { alt } else { y })
    }
}

impl fmt::Display for FiniteFieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})", self.k)
    }
}

/// An element of GF(2^k) in polynomial-basis coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FFElement {
    spec: FiniteFieldSpec,
    bits: u32,
}

impl FFElement {
    pub fn spec(&self) -> FiniteFieldSpec {
        self.spec
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_one(&self) -> bool {
        self.bits == 1
    }

    pub fn square(&self) -> FFElement {
        *self * *self
    }

    pub fn pow(&self, mut e: u64) -> FFElement {
        let mut base = *self;
        let mut acc = self.spec.one();
        while e > 0 {
            if e & 1 != 0 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self) -> Result<FFElement, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroInverse);
        }
        Ok(self.pow(self.spec.order() - 2))
    }

    /// Absolute trace down to GF(2), returned as an element of GF(2).
    pub fn trace(&self) -> FFElement {
        let gf2 = FiniteFieldSpec::new(1).expect("GF(2)");
        let mut acc = self.spec.zero();
        let mut t = *self;
        for _ in 0..self.spec.k {
            acc = acc + t;
            t = t.square();
        }
        debug_assert!(acc.bits <= 1);
        gf2.element(acc.bits)
    }

    pub fn trace_is_zero(&self) -> bool {
        self.trace().is_zero()
    }

    /// Unique b with b^r = self, for r in {2, 4}; Frobenius is bijective.
    pub fn frobenius_root(&self, r: u8) -> FFElement {
        assert!(r == 2 || r == 4, "only square and fourth roots supported");
        let sqrt = |a: FFElement| -> FFElement {
            let mut b = a;
            for _ in 1..a.spec.k {
                b = b.square();
            }
            b
        };
        let s = sqrt(*self);
        if r == 2 {
            s
        } else {
            sqrt(s)
        }
    }
}

impl std::ops::Add for FFElement {
    type Output = FFElement;
    fn add(self, rhs: FFElement) -> FFElement {
        assert_eq!(self.spec, rhs.spec, "elements of different fields");
        FFElement {
            spec: self.spec,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl std::ops::Sub for FFElement {
    type Output = FFElement;
    fn sub(self, rhs: FFElement) -> FFElement {
        self + rhs
    }
}

impl std::ops::Mul for FFElement {
    type Output = FFElement;
    fn mul(self, rhs: FFElement) -> FFElement {
        assert_eq!(self.spec, rhs.spec, "elements of different fields");
        let prod = bitpoly_mul(self.bits as u64, rhs.bits as u64);
        FFElement {
            spec: self.spec,
            bits: bitpoly_rem(prod, self.spec.modulus as u64) as u32,
        }
    }
}

impl fmt::Display for FFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.spec.k).rev() {
            if (self.bits >> i) & 1 == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            match i {
                0 => write!(f, "1")?,
                1 => write!(f, "g")?,
                _ => write!(f, "g^{i}")?,
            }
            first = false;
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

    #[test]
    fn canonical_moduli_are_the_expected_ones() {
        assert_eq!(gf(1).modulus_bits(), 0b11); // x + 1
        assert_eq!(gf(2).modulus_bits(), 0b111); // x^2 + x + 1
        assert_eq!(gf(3).modulus_bits(), 0b1011); // x^3 + x + 1
        assert_eq!(gf(4).modulus_bits(), 0b10011); // x^4 + x + 1
        assert_eq!(gf(8).modulus_bits(), 0b100011011); // x^8 + x^4 + x^3 + x + 1
    }

    #[test]
    fn gf4_generator_multiplication() {
        // GF(4) = GF(2)[z]/(z^2+z+1): z*z = z+1.
        let f = gf(2);
        let z = f.generator();
        assert_eq!(z * z, z + f.one());
        assert_eq!((0b11, 0b10), ((z * z).bits(), z.bits()));
    }

    #[test]
    fn addition_is_involutive_and_one_inverts() {
        for k in [1u8, 2, 3, 5] {
            let f = gf(k);
            for a in f.iter() {
                assert!((a + a).is_zero());
            }
            assert_eq!(f.one().inv().unwrap(), f.one());
        }
        assert!(gf(3).zero().inv().is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for k in [2u8, 3] {
            let f = gf(k);
            for a in f.iter() {
                for b in f.iter() {
                    assert_eq!(a * b, b * a);
                    if !b.is_zero() {
                        assert_eq!(a * b * b.inv().unwrap(), a);
                    }
                    for c in f.iter() {
                        assert_eq!(a * (b + c), a * b + a * c);
                        assert_eq!((a * b) * c, a * (b * c));
                    }
                }
            }
        }
    }

    #[test]
    fn trace_values() {
        let f2 = gf(1);
        assert!(f2.one().trace().is_one()); // k=1: identity map
        let f4 = gf(2);
        assert!(f4.one().trace().is_zero()); // 1 + 1 = 0
        let z = f4.generator();
        assert!(z.trace().is_one()); // z + z^2 = z + (z+1) = 1
    }

    #[test]
    fn artin_schreier_solutions() {
        let f2 = gf(1);
        assert_eq!(f2.solve_artin_schreier(f2.one()), None);
        assert_eq!(f2.solve_artin_schreier(f2.zero()), Some(f2.zero()));

        let f4 = gf(2);
        let z = f4.generator();
        // Exhaustive check over GF(4): y^2+y=1 has solutions {z, z+1}, smallest z.
        assert_eq!(f4.solve_artin_schreier(f4.one()), Some(z));

        // Solvable iff trace zero, exactly half the elements; y really solves.
        for k in 1..=8u8 {
            let f = gf(k);
            let mut solvable = 0u64;
            for c in f.iter() {
                match f.solve_artin_schreier(c) {
                    Some(y) => {
                        solvable += 1;
                        assert_eq!(y.square() + y, c);
                        assert!(c.trace().is_zero());
                    }
                    None => assert!(c.trace().is_one()),
                }
            }
            assert_eq!(solvable, f.order() / 2);
        }
    }

    #[test]
    fn frobenius_roots() {
        let f4 = gf(2);
        let z = f4.generator();
        assert_eq!((z + f4.one()).frobenius_root(2), z); // z^2 = z + 1
        assert_eq!(f4.one().frobenius_root(4), f4.one());
        assert_eq!(f4.zero().frobenius_root(4), f4.zero());
        for k in [1u8, 3, 4] {
            let f = gf(k);
            for a in f.iter() {
                let s = a.frobenius_root(2);
                assert_eq!(s * s, a);
                let q = a.frobenius_root(4);
                assert_eq!(q.pow(4), a);
            }
        }
    }

    #[test]
    fn powers_cycle_with_field_order() {
        for k in [1u8, 2, 5] {
            let f = gf(k);
            for a in f.iter() {
                assert_eq!(a.pow(f.order()), a); // a^(2^k) = a
            }
        }
    }
}
