//! Finite fields GF(p^k) in a polynomial basis.
//!
//! Elements are stored as compact `u16` codes. A code packs the coefficient
//! sequence `(c0, c1, .., c_{k-1})` of `c0 + c1 x + .. + c_{k-1} x^{k-1}` with
//! `c0` as the most significant base-`p` digit, so numeric order on codes is
//! lexicographic order on coefficient sequences. Multiplication goes through
//! log/antilog tables built from the smallest primitive element.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::AlgebraError;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u32 = 1 << 16;

/// Raw element code inside a [`Field`].
pub type Code = u16;

/// Parameters of GF(p^k): the characteristic, the degree and the defining
/// polynomial (constant term first, monic, length `k + 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub p: u32,
    pub k: u32,
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn order(&self) -> u32 {
        self.p.pow(self.k)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^k` with `p` prime, or returns `None`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        // q itself is prime
        return Some((q, 1));
    }
    let (mut rest, mut k) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

// Dense polynomial helpers over Z_p (constant term first). Only used while
// building tables, never on the hot path.

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = mod_inv(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &mi) in m.iter().enumerate() {
            let sub = (c as u64 * mi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    poly_rem(&out, m, p)
}

fn mod_inv(a: u32, p: u32) -> u32 {
    mod_pow(a as u64, p as u64 - 2, p as u64) as u32
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Exhaustive irreducibility test: a monic `f` of degree `k` is irreducible
/// iff no monic polynomial of degree `1..=k/2` divides it.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    if k == 0 {
        return false;
    }
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut g = vec![0u32; d + 1];
            let mut rest = idx;
            for c in g.iter_mut().take(d) {
                *c = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            g[d] = 1;
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest monic irreducible polynomial of degree `k`
/// over Z_p, comparing coefficient sequences `(c0, c1, ..)`.
pub fn smallest_irreducible(p: u32, k: u32) -> Vec<u32> {
    let k = k as usize;
    let count = (p as u64).pow(k as u32);
    for idx in 0..count {
        // c0 is the most significant digit so idx order is lexicographic
        let mut f = vec![0u32; k + 1];
        let mut rest = idx;
        for i in (0..k).rev() {
            f[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        f[k] = 1;
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

struct FieldInner {
    spec: FieldSpec,
    q: u32,
    /// `p^(k-1-i)`: place value of coefficient `c_i` inside a code
    place: Vec<u32>,
    exp: Vec<Code>,
    log: Vec<u32>,
    add: Option<Vec<Code>>,
    neg: Vec<Code>,
    primitive: Code,
}

/// Shared handle to the arithmetic tables of one GF(p^k).
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.p() == other.p() && self.k() == other.k())
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p(), self.k())
    }
}

static FIELD_CACHE: OnceLock<Mutex<HashMap<(u32, u32), Field>>> = OnceLock::new();

impl Field {
    /// The field GF(p^k) with its deterministic modulus.
    pub fn new(p: u32, k: u32) -> Result<Field, AlgebraError> {
        if !is_prime(p as u64) || k < 1 {
            return Err(AlgebraError::InvalidField(format!("p={p}, k={k}")));
        }
        let q = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if q > MAX_FIELD_ORDER as u64 {
            return Err(AlgebraError::InvalidField(format!(
                "order {p}^{k} exceeds {MAX_FIELD_ORDER}"
            )));
        }
        let cache = FIELD_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(f) = cache.lock().unwrap().get(&(p, k)) {
            return Ok(f.clone());
        }
        let field = Field(Arc::new(FieldInner::build(p, k)));
        cache.lock().unwrap().insert((p, k), field.clone());
        Ok(field)
    }

    /// The field with `q` elements.
    pub fn of_order(q: u64) -> Result<Field, AlgebraError> {
        let (p, k) =
            prime_power(q).ok_or_else(|| AlgebraError::InvalidField(format!("{q} is not a prime power")))?;
        if p > u32::MAX as u64 {
            return Err(AlgebraError::InvalidField(format!("q={q}")));
        }
        Field::new(p as u32, k)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }
    pub fn p(&self) -> u32 {
        self.0.spec.p
    }
    pub fn k(&self) -> u32 {
        self.0.spec.k
    }
    /// Number of elements.
    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn zero(&self) -> Code {
        0
    }
    pub fn one(&self) -> Code {
        self.0.place[0] as Code
    }
    /// The smallest (by code) generator of the multiplicative group.
    pub fn primitive(&self) -> Code {
        self.0.primitive
    }

    /// Image of an integer under Z -> GF(p^k).
    pub fn from_int(&self, n: i64) -> Code {
        let p = self.p() as i64;
        (n.rem_euclid(p) as u32 * self.0.place[0]) as Code
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<Code, AlgebraError> {
        if coeffs.len() != self.k() as usize || coeffs.iter().any(|&c| c >= self.p()) {
            return Err(AlgebraError::InvalidElement(format!("{coeffs:?} in {self:?}")));
        }
        Ok(coeffs
            .iter()
            .zip(&self.0.place)
            .map(|(&c, &w)| c * w)
            .sum::<u32>() as Code)
    }

    pub fn coefficients(&self, a: Code) -> Vec<u32> {
        let p = self.p();
        self.0.place.iter().map(|&w| (a as u32 / w) % p).collect()
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = Code> {
        (0..self.order()).map(|c| c as Code)
    }

    #[inline]
    pub fn add(&self, a: Code, b: Code) -> Code {
        let inner = &*self.0;
        if inner.spec.k == 1 {
            return ((a as u32 + b as u32) % inner.q) as Code;
        }
        if let Some(t) = &inner.add {
            return t[a as usize * inner.q as usize + b as usize];
        }
        let p = inner.spec.p;
        let (a, b) = (a as u32, b as u32);
        inner
            .place
            .iter()
            .map(|&w| ((a / w % p + b / w % p) % p) * w)
            .sum::<u32>() as Code
    }

    #[inline]
    pub fn neg(&self, a: Code) -> Code {
        self.0.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Code, b: Code) -> Code {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Code, b: Code) -> Code {
        let inner = &*self.0;
        if a == 0 || b == 0 {
            return 0;
        }
        if inner.spec.k == 1 {
            return (a as u32 * b as u32 % inner.q) as Code;
        }
        let n = inner.q - 1;
        let s = inner.log[a as usize] + inner.log[b as usize];
        inner.exp[(if s >= n { s - n } else { s }) as usize]
    }

    pub fn inv(&self, a: Code) -> Result<Code, AlgebraError> {
        if a == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        let inner = &*self.0;
        let n = inner.q - 1;
        let l = inner.log[a as usize];
        Ok(inner.exp[((n - l) % n) as usize])
    }

    pub fn pow(&self, a: Code, e: u64) -> Code {
        if e == 0 {
            return self.one();
        }
        if a == 0 {
            return 0;
        }
        let inner = &*self.0;
        let n = (inner.q - 1) as u64;
        inner.exp[((inner.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// `a^(p^e)`.
    pub fn frobenius(&self, a: Code, e: u32) -> Code {
        let pe = (self.p() as u64).pow(e % self.k());
        self.pow(a, pe)
    }

    /// Discrete logarithm to the primitive base; `None` for zero.
    pub fn log(&self, a: Code) -> Option<u32> {
        (a != 0).then(|| self.0.log[a as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Code) -> Option<u32> {
        let l = self.log(a)?;
        let n = self.order() - 1;
        Some(n / gcd(n, l))
    }

    pub fn element(&self, code: Code) -> FieldElement {
        FieldElement { field: self.clone(), code }
    }

    /// Text form `c0:c1:..` of one element.
    pub fn format(&self, a: Code) -> String {
        self.coefficients(a)
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(":")
    }

    pub fn parse(&self, s: &str) -> Result<Code, AlgebraError> {
        let coeffs = s
            .split(':')
            .map(|t| t.parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| AlgebraError::Parse(format!("bad field element {s:?}")))?;
        self.from_coefficients(&coeffs)
            .map_err(|_| AlgebraError::Parse(format!("bad field element {s:?}")))
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl FieldInner {
    fn build(p: u32, k: u32) -> FieldInner {
        let modulus = smallest_irreducible(p, k);
        let q = p.pow(k);
        let ku = k as usize;
        let place: Vec<u32> = (0..ku).map(|i| p.pow(k - 1 - i as u32)).collect();
        let to_poly = |code: u32| -> Vec<u32> { place.iter().map(|&w| code / w % p).collect() };
        let to_code = |poly: &[u32]| -> Code {
            poly.iter().zip(&place).map(|(&c, &w)| c * w).sum::<u32>() as Code
        };

        let neg: Vec<Code> = (0..q)
            .map(|c| {
                let poly: Vec<u32> = to_poly(c).iter().map(|&x| (p - x) % p).collect();
                to_code(&poly)
            })
            .collect();

        // smallest code whose powers cover the multiplicative group
        let n = q - 1;
        let mut primitive = 0;
        let mut exp = Vec::new();
        for cand in 1..q {
            let g = poly_trim(to_poly(cand));
            let mut powers = Vec::with_capacity(n as usize);
            let mut cur = vec![1u32];
            let mut ok = true;
            for i in 0..n {
                let code = to_code(&pad(&cur, ku));
                if i > 0 && code == place[0] as Code {
                    ok = false;
                    break;
                }
                powers.push(code);
                cur = poly_mulmod(&cur, &g, &modulus, p);
            }
            if ok {
                primitive = cand as Code;
                exp = powers;
                break;
            }
        }
        let mut log = vec![0u32; q as usize];
        for (i, &c) in exp.iter().enumerate() {
            log[c as usize] = i as u32;
        }

        let add = (k > 1 && q <= 256).then(|| {
            let mut t = vec![0 as Code; (q * q) as usize];
            for a in 0..q {
                let pa = to_poly(a);
                for b in 0..q {
                    let pb = to_poly(b);
                    let s: Vec<u32> = pa.iter().zip(&pb).map(|(x, y)| (x + y) % p).collect();
                    t[(a * q + b) as usize] = to_code(&s);
                }
            }
            t
        });

        FieldInner {
            spec: FieldSpec { p, k, modulus },
            q,
            place,
            exp,
            log,
            add,
            neg,
            primitive,
        }
    }
}

fn pad(poly: &[u32], k: usize) -> Vec<u32> {
    let mut v = poly.to_vec();
    v.resize(k, 0);
    v
}

/// A field element bundled with its field, for checked standalone arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    code: Code,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(self.code))
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn code(&self) -> Code {
        self.code
    }
    pub fn coefficients(&self) -> Vec<u32> {
        self.field.coefficients(self.code)
    }
    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<(), AlgebraError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(AlgebraError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement, AlgebraError> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.add(self.code, other.code)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement, AlgebraError> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.sub(self.code, other.code)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement, AlgebraError> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.mul(self.code, other.code)))
    }

    pub fn inv(&self) -> Result<FieldElement, AlgebraError> {
        Ok(self.field.element(self.field.inv(self.code)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.field.element(self.field.pow(self.code, e))
    }

    pub fn frobenius(&self, e: u32) -> FieldElement {
        self.field.element(self.field.frobenius(self.code, e))
    }
}
