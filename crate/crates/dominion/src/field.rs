//! Arithmetic in GF(p^e), just enough to coordinatize projective and affine
//! planes of prime-power order.
//!
//! Elements are polynomial residues stored as coefficient vectors
//! (low degree first). The reducing modulus is picked deterministically:
//! the lexicographically least monic irreducible polynomial of degree `e`
//! over Z_p, coefficients compared low degree first. No generator search,
//! no discrete logs.

use thiserror::Error;

/// Largest field order constructed by default; plane sizes grow quadratically
/// in `q`, so desk-scale work never needs more.
pub const DEFAULT_FIELD_CAPACITY: u64 = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {q} exceeds capacity {cap}")]
    CapacityExceeded { q: u64, cap: u64 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// An element of GF(p^e): `coeffs[i]` is the coefficient of x^i, in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

/// GF(p^e) with a fixed reducing modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    p: u64,
    e: u32,
    q: u64,
    /// Monic, degree `e`, low degree first (length `e + 1`).
    modulus: Vec<u64>,
}

impl Field {
    /// Builds GF(p^e) with the default capacity cap.
    pub fn new(p: u64, e: u32) -> Result<Field, FieldError> {
        Field::with_capacity(p, e, DEFAULT_FIELD_CAPACITY)
    }

    /// Builds GF(p^e) provided `p` is prime and `p^e <= cap`.
    pub fn with_capacity(p: u64, e: u32, cap: u64) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        if e == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = p
            .checked_pow(e)
            .ok_or(FieldError::CapacityExceeded { q: u64::MAX, cap })?;
        if q > cap {
            return Err(FieldError::CapacityExceeded { q, cap });
        }
        let modulus = least_irreducible(p, e);
        Ok(Field { p, e, q, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.e as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// Element number `value` in the canonical order, `value < q`.
    /// The coefficient vector is the base-`p` digit expansion, so element 0
    /// is zero and element 1 is one.
    pub fn element(&self, value: u64) -> FieldElement {
        assert!(value < self.q, "element value {value} out of range for GF({})", self.q);
        let mut coeffs = vec![0; self.e as usize];
        let mut rest = value;
        for c in coeffs.iter_mut() {
            *c = rest % self.p;
            rest /= self.p;
        }
        FieldElement { coeffs }
    }

    /// Inverse of [`Field::element`].
    pub fn value(&self, a: &FieldElement) -> u64 {
        self.check(a);
        a.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p + c)
    }

    /// All q elements, ordered by [`Field::value`]: zero first, one second.
    pub fn elements(&self) -> Vec<FieldElement> {
        (0..self.q).map(|v| self.element(v)).collect()
    }

    fn check(&self, a: &FieldElement) {
        assert_eq!(
            a.coeffs.len(),
            self.e as usize,
            "element does not belong to GF({}^{})",
            self.p,
            self.e
        );
        debug_assert!(a.coeffs.iter().all(|&c| c < self.p));
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        FieldElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| (x + y) % self.p)
                .collect(),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        FieldElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| (x + self.p - y) % self.p)
                .collect(),
        }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let e = self.e as usize;
        // Schoolbook product, then reduce by the modulus.
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        poly_reduce(&mut prod, &self.modulus, self.p);
        prod.resize(e, 0);
        FieldElement { coeffs: prod }
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a);
        if self.is_zero(a) {
            return Err(FieldError::ZeroInverse);
        }
        // a^(q-2) = a^(-1) in the multiplicative group of order q-1.
        Ok(self.pow(a, self.q - 2))
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        let binv = self.inv(b)?;
        Ok(self.mul(a, &binv))
    }

    pub fn pow(&self, a: &FieldElement, mut exp: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        self.sub(&self.zero(), a)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Reduces `poly` (low degree first) modulo the monic `modulus` over Z_p,
/// in place; the result occupies the first `modulus.len() - 1` slots.
fn poly_reduce(poly: &mut Vec<u64>, modulus: &[u64], p: u64) {
    let deg_m = modulus.len() - 1;
    while poly.len() > deg_m {
        let lead = *poly.last().unwrap();
        let top = poly.len() - 1;
        if lead != 0 {
            for (i, &m) in modulus.iter().enumerate().take(deg_m) {
                let idx = top - deg_m + i;
                poly[idx] = (poly[idx] + (p - lead) * m) % p;
            }
        }
        poly.pop();
    }
}

/// Remainder of `a` divided by monic `b`, both low degree first over Z_p.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_reduce(&mut r, b, p);
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

/// The lexicographically least monic irreducible polynomial of degree `e`
/// over Z_p, coefficients compared low degree first. For `e = 1` this is `x`,
/// which makes GF(p^1) plain Z_p.
fn least_irreducible(p: u64, e: u32) -> Vec<u64> {
    let e = e as usize;
    if e == 1 {
        return vec![0, 1];
    }
    let total = p.pow(e as u32);
    for code in 0..total {
        // Decode so that the constant term is the most significant digit:
        // candidates are visited in low-degree-first lexicographic order.
        let mut coeffs = vec![0u64; e + 1];
        coeffs[e] = 1;
        let mut rest = code;
        for i in (0..e).rev() {
            coeffs[i] = rest % p;
            rest /= p;
        }
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of degree {e} exists over Z_{p}");
}

/// Trial division by every monic polynomial of degree 1..=e/2.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let e = f.len() - 1;
    for d in 1..=e / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut g = vec![0u64; d + 1];
            g[d] = 1;
            let mut rest = code;
            for c in g.iter_mut().take(d) {
                *c = rest % p;
                rest /= p;
            }
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_is_z2() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.modulus(), &[0, 1]);
        let one = f.one();
        assert!(f.is_zero(&f.add(&one, &one)), "1 + 1 = 0 in characteristic 2");
    }

    #[test]
    fn gf4_modulus_is_the_unique_irreducible_quadratic() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]); // x^2 + x + 1
    }

    #[test]
    fn gf9_modulus_matches_exhaustive_search() {
        // Independent oracle: a quadratic over Z_3 is irreducible iff it has
        // no root; scan the 9 monic quadratics in low-degree-first order.
        let mut expected = None;
        'outer: for c0 in 0..3u64 {
            for c1 in 0..3u64 {
                let has_root = (0..3u64).any(|x| (x * x + c1 * x + c0) % 3 == 0);
                if !has_root {
                    expected = Some(vec![c0, c1, 1]);
                    break 'outer;
                }
            }
        }
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.modulus(), expected.unwrap().as_slice());
    }

    #[test]
    fn gf4_multiplication_reduces() {
        // x * x mod (x^2 + x + 1) = x + 1.
        let f = Field::new(2, 2).unwrap();
        let x = f.element(2); // coeffs [0, 1]
        let sq = f.mul(&x, &x);
        assert_eq!(sq.coeffs(), &[1, 1]);
    }

    #[test]
    fn element_order_starts_zero_one() {
        for (p, e) in [(2, 1), (2, 2), (3, 2), (5, 1)] {
            let f = Field::new(p, e).unwrap();
            let els = f.elements();
            assert_eq!(els.len() as u64, f.order());
            assert!(f.is_zero(&els[0]));
            assert_eq!(els[1], f.one());
            for (v, el) in els.iter().enumerate() {
                assert_eq!(f.value(el), v as u64);
            }
        }
    }

    #[test]
    fn inverse_of_one_is_one() {
        for (p, e) in [(2, 1), (2, 2), (3, 1), (7, 1), (2, 4)] {
            let f = Field::new(p, e).unwrap();
            assert_eq!(f.inv(&f.one()).unwrap(), f.one());
        }
    }

    #[test]
    fn zero_inverse_rejected() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(f.inv(&f.zero()), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Field::new(6, 1).unwrap_err(), FieldError::NonPrime(6));
        assert!(matches!(
            Field::new(2, 7).unwrap_err(),
            FieldError::CapacityExceeded { .. }
        ));
        assert_eq!(Field::new(2, 0).unwrap_err(), FieldError::ZeroDegree);
    }

    #[test]
    fn field_axioms_exhaustive_small_orders() {
        // Associativity, commutativity, distributivity, and the nonzero
        // multiplicative group, checked over every triple for q <= 16.
        for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)] {
            let f = Field::new(p, e).unwrap();
            let els = f.elements();
            for a in &els {
                for b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    if !f.is_zero(b) {
                        let q = f.div(a, b).unwrap();
                        assert_eq!(f.mul(&q, b), *a);
                    }
                    for c in &els {
                        assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
                        assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, &f.add(b, c)),
                            f.add(&f.mul(a, b), &f.mul(a, c))
                        );
                    }
                }
                if !f.is_zero(a) {
                    let inv = f.inv(a).unwrap();
                    assert_eq!(f.mul(&inv, a), f.one(), "inv(a) * a = 1");
                }
            }
        }
    }

    #[test]
    fn make_field_deterministic() {
        let f1 = Field::new(3, 2).unwrap();
        let f2 = Field::new(3, 2).unwrap();
        assert_eq!(f1, f2);
    }
}
