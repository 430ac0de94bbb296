//! Finite fields GF(p^d) with an explicit modulus polynomial, plus subspace
//! enumeration and Gaussian binomials.
//!
//! Elements are indexed 0..q by their coefficient vector read little-endian
//! in base p, which fixes a deterministic vertex numbering for the field-based
//! graph generators. Multiplication goes through discrete log/exp tables built
//! once at construction.

mod poly;
mod subspace;

pub use subspace::{gaussian_binomial, subspaces, Subspace};

use thiserror::Error;

use poly::pmulmod;

/// Fields larger than this are outside the supported range.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("degree must be at least 1")]
    BadDegree,
    #[error("field order {0} exceeds the supported limit")]
    FieldTooLarge(u64),
    #[error("modulus must be monic of degree {expected}")]
    BadModulus { expected: u32 },
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u32 },
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("quadratic residues require odd characteristic")]
    EvenCharacteristic,
    #[error("element index {0} out of range")]
    ElementOutOfRange(u32),
    #[error("coefficient out of range for GF({p})")]
    CoefficientOutOfRange { p: u32 },
    #[error("subspace dimension {k} exceeds ambient dimension {n}")]
    DimensionTooLarge { k: usize, n: usize },
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
}

/// An element of a [`FiniteField`], identified by its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub u32);

/// GF(p^d) presented as GF(p)\[x\] modulo an irreducible monic polynomial.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    d: u32,
    q: u32,
    /// Little-endian coefficients, length d+1, leading coefficient 1.
    modulus: Vec<u32>,
    /// exp[i] = index of g^i for a fixed generator g, length q-1.
    exp: Vec<u32>,
    /// log[e] defined for e in 1..q.
    log: Vec<u32>,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    let n64 = n as u64;
    while i * i <= n64 {
        if n64.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut f = 2;
    while (f as u64) * (f as u64) <= n as u64 {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FiniteField {
    /// Builds GF(p^d). When `modulus` is omitted the monic irreducible
    /// polynomial with the smallest coefficient index (coefficients read as a
    /// base-p integer) is used, so the presentation is deterministic.
    pub fn new(p: u32, d: u32, modulus: Option<&[u32]>) -> Result<FiniteField, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        if d == 0 {
            return Err(AlgebraError::BadDegree);
        }
        let q128 = (p as u64).checked_pow(d).unwrap_or(u64::MAX);
        if q128 > MAX_FIELD_SIZE {
            return Err(AlgebraError::FieldTooLarge(q128));
        }
        let q = q128 as u32;

        let modulus: Vec<u32> = match modulus {
            Some(m) => {
                if m.len() != d as usize + 1 || *m.last().unwrap() != 1 {
                    return Err(AlgebraError::BadModulus { expected: d });
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(AlgebraError::CoefficientOutOfRange { p });
                }
                if !poly::is_irreducible(m, p) {
                    return Err(AlgebraError::ReducibleModulus { p });
                }
                m.to_vec()
            }
            None => Self::smallest_irreducible(p, d),
        };

        let mut field = FiniteField {
            p,
            d,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_log_tables();
        Ok(field)
    }

    fn smallest_irreducible(p: u32, d: u32) -> Vec<u32> {
        // Lower coefficients run through base-p integers in increasing order.
        let count = (p as u64).pow(d);
        for idx in 0..count {
            let mut coeffs = Vec::with_capacity(d as usize + 1);
            let mut rest = idx;
            for _ in 0..d {
                coeffs.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            coeffs.push(1);
            if poly::is_irreducible(&coeffs, p) {
                return coeffs;
            }
        }
        unreachable!("an irreducible monic polynomial of each degree exists")
    }

    fn index_to_coeffs(&self, e: u32) -> Vec<u32> {
        let mut out = vec![0u32; self.d as usize];
        let mut rest = e;
        for c in out.iter_mut() {
            *c = rest % self.p;
            rest /= self.p;
        }
        out
    }

    fn coeffs_to_index(&self, coeffs: &[u32]) -> u32 {
        let mut idx = 0u64;
        for &c in coeffs.iter().rev() {
            idx = idx * self.p as u64 + c as u64;
        }
        idx as u32
    }

    fn raw_mul(&self, a: u32, b: u32) -> u32 {
        let ca = self.index_to_coeffs(a);
        let cb = self.index_to_coeffs(b);
        let prod = pmulmod(&ca, &cb, &self.modulus, self.p);
        self.coeffs_to_index(&prod)
    }

    fn build_log_tables(&mut self) {
        let q = self.q;
        if q == 2 {
            self.exp = vec![1];
            self.log = vec![0, 0];
            return;
        }
        let order = q - 1;
        let factors = prime_factors(order);
        let mut generator = 0;
        'candidates: for g in 2..q {
            for &r in &factors {
                if self.raw_pow(g, (order / r) as u64) == 1 {
                    continue 'candidates;
                }
            }
            generator = g;
            break;
        }
        assert!(generator != 0, "multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..order {
            exp.push(cur);
            log[cur as usize] = i;
            cur = self.raw_mul(cur, generator);
        }
        debug_assert_eq!(cur, 1);
        self.exp = exp;
        self.log = log;
    }

    fn raw_pow(&self, base: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.raw_mul(acc, b);
            }
            b = self.raw_mul(b, b);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn d(&self) -> u32 {
        self.d
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn element(&self, index: u32) -> Result<FieldElement, AlgebraError> {
        if index < self.q {
            Ok(FieldElement(index))
        } else {
            Err(AlgebraError::ElementOutOfRange(index))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    /// Little-endian coefficient vector of the residue polynomial.
    pub fn coeffs(&self, e: FieldElement) -> Vec<u32> {
        self.index_to_coeffs(e.0)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, AlgebraError> {
        if coeffs.len() > self.d as usize {
            return Err(AlgebraError::BadModulus { expected: self.d });
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(AlgebraError::CoefficientOutOfRange { p: self.p });
        }
        let mut full = coeffs.to_vec();
        full.resize(self.d as usize, 0);
        Ok(FieldElement(self.coeffs_to_index(&full)))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let ca = self.index_to_coeffs(a.0);
        let cb = self.index_to_coeffs(b.0);
        let sum: Vec<u32> = ca
            .iter()
            .zip(&cb)
            .map(|(x, y)| (x + y) % self.p)
            .collect();
        FieldElement(self.coeffs_to_index(&sum))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let ca = self.index_to_coeffs(a.0);
        let neg: Vec<u32> = ca.iter().map(|&x| (self.p - x) % self.p).collect();
        FieldElement(self.coeffs_to_index(&neg))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let order = (self.q - 1) as u64;
        let i = (self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64) % order;
        FieldElement(self.exp[i as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, AlgebraError> {
        if a.0 == 0 {
            return Err(AlgebraError::ZeroInverse);
        }
        let order = (self.q - 1) as u64;
        let i = (order - self.log[a.0 as usize] as u64) % order;
        Ok(FieldElement(self.exp[i as usize]))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if a.0 == 0 {
            return if e == 0 { self.one() } else { self.zero() };
        }
        let order = (self.q - 1) as u64;
        let i = (self.log[a.0 as usize] as u64 % order) * (e % order) % order;
        FieldElement(self.exp[i as usize])
    }

    /// True for nonzero squares.
    pub fn is_square(&self, a: FieldElement) -> bool {
        if a.0 == 0 {
            return false;
        }
        if self.p == 2 {
            return true;
        }
        self.log[a.0 as usize].is_multiple_of(2)
    }

    /// The (q-1)/2 nonzero squares, ordered by element index.
    pub fn quadratic_residues(&self) -> Result<Vec<FieldElement>, AlgebraError> {
        if self.p == 2 {
            return Err(AlgebraError::EvenCharacteristic);
        }
        let mut out: Vec<FieldElement> = (1..self.q)
            .map(FieldElement)
            .filter(|&e| self.is_square(e))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Fixed points of x -> x^q0, i.e. the subfield of order q0 when
    /// q0 is a power of p with q0^k = q.
    pub fn frobenius_fixed(&self, q0: u32) -> Vec<FieldElement> {
        self.elements()
            .filter(|&e| self.pow(e, q0 as u64) == e)
            .collect()
    }

    /// Human-readable polynomial form, e.g. "0", "2x+1", "x^2+x".
    pub fn element_label(&self, e: FieldElement) -> String {
        let coeffs = self.index_to_coeffs(e.0);
        let mut terms: Vec<String> = Vec::new();
        for (i, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }

    /// The modulus rendered like "x^2+1".
    pub fn modulus_label(&self) -> String {
        let mut terms: Vec<String> = Vec::new();
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            };
            terms.push(t);
        }
        terms.join("+")
    }
}

impl std::fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({}^{}) mod {}", self.p, self.d, self.modulus_label())
    }
}
