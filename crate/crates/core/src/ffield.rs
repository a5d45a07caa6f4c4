//! Finite fields F_{p^m} with precomputed log/antilog tables, Frobenius,
//! discrete logarithms, subfield embeddings, and a cubic extension type for
//! the occasional excursion into F_{q^6}.
//!
//! Elements are coefficient vectors over F_p packed into a `u64` code
//! (constant term in the least significant digit), so every integer in
//! `[0, p^m)` is a valid element code. Moduli and generators are chosen as
//! the least candidates under that code order, making every field
//! construction reproducible.

use crate::exact::arith::{factorize, is_prime, pow_mod};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field size {0} exceeds the desk-scale bound 2^24")]
    SizeExceeded(u64),
    #[error("discrete log of zero")]
    ZeroElement,
}

/// A concrete finite field F_{p^m} with full log/antilog tables.
pub struct FieldSpec {
    pub p: u64,
    pub m: u32,
    pub q: u64,
    /// Monic irreducible modulus; coefficient of x^i at index i, length m+1.
    pub modulus: Vec<u64>,
    /// Code of the fixed primitive element.
    pub generator: u64,
    exp: Vec<u64>,
    log: Vec<u32>,
    embeddings: Mutex<HashMap<(u64, u32, Vec<u64>), u64>>,
}

const SIZE_LIMIT: u64 = 1 << 24;

// Dense polynomial helpers over F_p (lowest degree first).

fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let m = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &ca) in a.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ca * cb) % p;
        }
    }
    // Reduce by the monic modulus.
    for i in (m..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for (j, &mj) in modulus.iter().enumerate().take(m) {
            let idx = i - m + j;
            prod[idx] = (prod[idx] + c * (p - mj % p)) % p;
        }
    }
    prod.truncate(m.max(1));
    prod
}

fn poly_pow_mod(a: &[u64], mut e: u128, modulus: &[u64], p: u64) -> Vec<u64> {
    let m = modulus.len() - 1;
    let mut base = a.to_vec();
    base.resize(m.max(2), 0);
    base = poly_mul_mod(&base, &[1], modulus, p);
    let mut out = vec![0u64; m.max(1)];
    out[0] = 1;
    while e > 0 {
        if e & 1 == 1 {
            out = poly_mul_mod(&out, &base, modulus, p);
        }
        base = poly_mul_mod(&base, &base, modulus, p);
        e >>= 1;
    }
    out
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = (f.len() - 1) as u32;
    if m == 1 {
        return true;
    }
    // x^(p^m) = x mod f, and gcd(x^(p^(m/r)) - x, f) = 1 for prime r | m.
    let x = vec![0u64, 1];
    let pm = (p as u128).pow(m);
    let xq = poly_pow_mod(&x, pm, f, p);
    let mut xq_minus_x = xq;
    xq_minus_x[1] = (xq_minus_x[1] + p - 1) % p;
    if xq_minus_x.iter().any(|&c| c != 0) {
        return false;
    }
    for (r, _) in factorize(m as u64) {
        let sub = (p as u128).pow(m / r as u32);
        let mut g = poly_pow_mod(&x, sub, f, p);
        g[1] = (g[1] + p - 1) % p;
        if poly_gcd_is_constant(&g, f, p) {
            continue;
        }
        return false;
    }
    true
}

fn poly_gcd_is_constant(a: &[u64], b: &[u64], p: u64) -> bool {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    let inv_mod = |a: u64| pow_mod(a, p - 2, p);
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() {
        return b.len() == 1;
    }
    while !b.is_empty() {
        // a mod b
        let lead_inv = inv_mod(*b.last().unwrap());
        while a.len() >= b.len() && !a.is_empty() {
            let c = *a.last().unwrap() % p;
            if c != 0 {
                let shift = a.len() - b.len();
                let f = c * lead_inv % p;
                for (j, &bj) in b.iter().enumerate() {
                    a[shift + j] = (a[shift + j] + (p - f * bj % p) % p) % p;
                }
            }
            trim(&mut a);
            if a.len() < b.len() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
        trim(&mut b);
    }
    a.len() == 1
}

fn unpack(code: u64, p: u64, m: u32) -> Vec<u64> {
    let mut v = vec![0u64; m as usize];
    let mut c = code;
    for d in v.iter_mut() {
        *d = c % p;
        c /= p;
    }
    v
}

fn pack(digits: &[u64], p: u64) -> u64 {
    let mut out = 0u64;
    for &d in digits.iter().rev() {
        out = out * p + d % p;
    }
    out
}

/// Returns the shared F_{p^m}; fields are cached globally per (p, m).
pub fn make_field(p: u64, m: u32) -> Result<Arc<FieldSpec>, FieldError> {
    static FIELDS: OnceLock<Mutex<HashMap<(u64, u32), Arc<FieldSpec>>>> = OnceLock::new();
    let cache = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&(p, m)) {
        return Ok(f.clone());
    }
    let f = Arc::new(FieldSpec::build(p, m)?);
    Ok(cache
        .lock()
        .unwrap()
        .entry((p, m))
        .or_insert_with(|| f.clone())
        .clone())
}

impl FieldSpec {
    fn build(p: u64, m: u32) -> Result<FieldSpec, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let q = (0..m).try_fold(1u64, |acc, _| {
            let n = acc.checked_mul(p)?;
            (n <= SIZE_LIMIT).then_some(n)
        });
        let Some(q) = q else {
            return Err(FieldError::SizeExceeded(p));
        };
        // Least irreducible monic modulus in code order.
        let modulus = (0..q)
            .map(|code| {
                let mut f = unpack(code, p, m);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .expect("an irreducible polynomial of every degree exists");

        // Least primitive element.
        let order_factors = factorize(q - 1);
        let mut generator = 1;
        for cand in 1..q {
            let a = unpack(cand, p, m);
            let primitive = order_factors.iter().all(|&(r, _)| {
                let e = ((q - 1) / r) as u128;
                let v = poly_pow_mod(&a, e, &modulus, p);
                !(v[0] == 1 && v[1..].iter().all(|&c| c == 0))
            });
            if primitive {
                generator = cand;
                break;
            }
        }

        // exp/log tables.
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![u32::MAX; q as usize];
        let g = unpack(generator, p, m);
        let mut cur = vec![0u64; m as usize];
        cur[0] = 1;
        for i in 0..(q - 1) {
            let code = pack(&cur, p);
            exp.push(code);
            log[code as usize] = i as u32;
            cur = poly_mul_mod(&cur, &g, &modulus, p);
        }
        debug_assert_eq!(pack(&cur, p), exp[0], "generator order mismatch");

        Ok(FieldSpec {
            p,
            m,
            q,
            modulus,
            generator,
            exp,
            log,
            embeddings: Mutex::new(HashMap::new()),
        })
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    /// The element c of the prime subfield.
    pub fn from_prime(&self, c: u64) -> u64 {
        c % self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let mut out = 0u64;
        let (mut a, mut b) = (a, b);
        let mut mult = 1u64;
        for _ in 0..self.m {
            out += (a % self.p + b % self.p) % self.p * mult;
            a /= self.p;
            b /= self.p;
            mult *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        let mut out = 0u64;
        let mut a = a;
        let mut mult = 1u64;
        for _ in 0..self.m {
            out += (self.p - a % self.p) % self.p * mult;
            a /= self.p;
            mult *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let la = self.log[a as usize] as u64;
        let lb = self.log[b as usize] as u64;
        self.exp[((la + lb) % (self.q - 1)) as usize]
    }

    pub fn inv(&self, a: u64) -> Result<u64, FieldError> {
        if a == 0 {
            return Err(FieldError::ZeroElement);
        }
        let la = self.log[a as usize] as u64;
        Ok(self.exp[((self.q - 1 - la) % (self.q - 1)) as usize])
    }

    pub fn pow(&self, a: u64, e: u128) -> u64 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let la = self.log[a as usize] as u128;
        let ord = (self.q - 1) as u128;
        self.exp[((la * (e % ord)) % ord) as usize]
    }

    /// a^(p^k): the k-th power of the absolute Frobenius.
    pub fn frobenius(&self, a: u64, k: u32) -> u64 {
        let e = (self.p as u128).pow(k % self.m.max(1));
        self.pow(a, e)
    }

    /// Least e >= 0 with generator^e = a.
    pub fn discrete_log(&self, a: u64) -> Result<u64, FieldError> {
        if a == 0 {
            return Err(FieldError::ZeroElement);
        }
        Ok(self.log[a as usize] as u64)
    }

    /// generator^e.
    pub fn from_log(&self, e: u64) -> u64 {
        self.exp[(e % (self.q - 1)) as usize]
    }

    /// All q element codes.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }

    /// The cyclic subgroup of the given order (order | q-1), as element codes.
    pub fn subgroup(&self, order: u64) -> Vec<u64> {
        assert_eq!((self.q - 1) % order, 0);
        let step = (self.q - 1) / order;
        (0..order).map(|k| self.exp[(k * step) as usize]).collect()
    }

    /// The image in self of `sub`'s element `a`, under the embedding that
    /// sends sub's generator to the least compatible root; cached.
    pub fn embed_from(&self, sub: &FieldSpec, a: u64) -> u64 {
        assert_eq!(self.p, sub.p);
        assert_eq!(self.m % sub.m, 0, "no subfield embedding");
        let key = (sub.p, sub.m, sub.modulus.clone());
        let root = {
            let mut cache = self.embeddings.lock().unwrap();
            if let Some(&r) = cache.get(&key) {
                r
            } else {
                // Least root of sub's modulus inside self, searched over the
                // subgroup of order sub.q - 1 together with zero.
                let mut candidates: Vec<u64> = if sub.q == 2 {
                    vec![1]
                } else {
                    self.subgroup(sub.q - 1)
                };
                candidates.push(0);
                let r = candidates
                    .into_iter()
                    .filter(|&c| self.eval_poly(&sub.modulus, c) == 0)
                    .min()
                    .expect("modulus must split in the extension");
                cache.insert(key, r);
                r
            }
        };
        // Map sum c_i x^i -> sum c_i root^i.
        let digits = unpack(a, sub.p, sub.m);
        let mut acc = 0u64;
        for (i, &c) in digits.iter().enumerate() {
            if c != 0 {
                acc = self.add(acc, self.mul(self.from_prime(c), self.pow(root, i as u128)));
            }
        }
        acc
    }

    /// Evaluate a polynomial with prime-field coefficients at x.
    pub fn eval_poly(&self, coeffs: &[u64], x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = self.add(self.mul(acc, x), self.from_prime(c));
        }
        acc
    }
}

impl std::fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "F_{} (p={}, m={}, modulus={:?}, generator={})",
            self.q, self.p, self.m, self.modulus, self.generator
        )
    }
}

/// The cubic extension E = F[y]/(h) of a table-backed field F, used for
/// F_{q^6} over F_{q^2}. Arithmetic is on-the-fly; elements are coefficient
/// triples over the base field.
pub struct CubicExt {
    pub base: Arc<FieldSpec>,
    /// y^3 = m2 y^2 + m1 y + m0, stored as [m0, m1, m2].
    pub modulus: [u64; 3],
}

pub type CubicElem = [u64; 3];

impl CubicExt {
    /// Build with the least irreducible monic cubic over the base field.
    pub fn new(base: Arc<FieldSpec>) -> CubicExt {
        let q2 = base.q;
        for code in 0..q2 * q2 * q2 {
            let c0 = code % q2;
            let c1 = code / q2 % q2;
            let c2 = code / (q2 * q2);
            // f(y) = y^3 + c2 y^2 + c1 y + c0; cubic irreducible iff rootless.
            let has_root = base.elements().any(|x| {
                let x2 = base.mul(x, x);
                let x3 = base.mul(x2, x);
                let v = base.add(
                    base.add(x3, base.mul(c2, x2)),
                    base.add(base.mul(c1, x), c0),
                );
                v == 0
            });
            if !has_root {
                return CubicExt {
                    modulus: [base.neg(c0), base.neg(c1), base.neg(c2)],
                    base,
                };
            }
        }
        unreachable!("irreducible cubics exist over every finite field");
    }

    pub fn one(&self) -> CubicElem {
        [1, 0, 0]
    }

    pub fn y(&self) -> CubicElem {
        [0, 1, 0]
    }

    pub fn add(&self, a: CubicElem, b: CubicElem) -> CubicElem {
        let f = &self.base;
        [f.add(a[0], b[0]), f.add(a[1], b[1]), f.add(a[2], b[2])]
    }

    pub fn mul(&self, a: CubicElem, b: CubicElem) -> CubicElem {
        let f = &self.base;
        let mut prod = [0u64; 5];
        for i in 0..3 {
            if a[i] == 0 {
                continue;
            }
            for j in 0..3 {
                prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
            }
        }
        // Reduce degrees 4 then 3 using y^3 = m2 y^2 + m1 y + m0.
        let [m0, m1, m2] = self.modulus;
        for d in (3..5).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            prod[d - 1] = f.add(prod[d - 1], f.mul(c, m2));
            prod[d - 2] = f.add(prod[d - 2], f.mul(c, m1));
            prod[d - 3] = f.add(prod[d - 3], f.mul(c, m0));
        }
        [prod[0], prod[1], prod[2]]
    }

    pub fn pow(&self, a: CubicElem, mut e: u128) -> CubicElem {
        let mut base = a;
        let mut out = self.one();
        while e > 0 {
            if e & 1 == 1 {
                out = self.mul(out, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        out
    }

    pub fn is_one(&self, a: CubicElem) -> bool {
        a == [1, 0, 0]
    }

    /// Relative trace to the base field: x + x^(q2) + x^(q2^2), q2 = |base|.
    pub fn rel_trace(&self, a: CubicElem) -> u64 {
        let q2 = self.base.q as u128;
        let a1 = self.pow(a, q2);
        let a2 = self.pow(a1, q2);
        let s = self.add(self.add(a, a1), a2);
        debug_assert_eq!(s[1], 0);
        debug_assert_eq!(s[2], 0);
        s[0]
    }

    /// A generator of the cyclic subgroup of order t (t | q2^3 - 1),
    /// found by a deterministic scan in code order.
    pub fn subgroup_generator(&self, t: u64) -> CubicElem {
        let q2 = self.base.q as u128;
        let full = q2 * q2 * q2 - 1;
        assert_eq!(full % t as u128, 0);
        let co = full / t as u128;
        let prime_parts = factorize(t);
        for code in 1..(self.base.q * self.base.q * self.base.q) {
            let cand: CubicElem = [
                code % self.base.q,
                code / self.base.q % self.base.q,
                code / (self.base.q * self.base.q),
            ];
            let d = self.pow(cand, co);
            if self.is_one(d) {
                continue;
            }
            let full_order = prime_parts
                .iter()
                .all(|&(r, _)| !self.is_one(self.pow(d, (t / r) as u128)));
            if full_order {
                return d;
            }
        }
        unreachable!("cyclic subgroup has a generator");
    }
}

/// 3x3 matrices over a table-backed field, enough linear algebra for the
/// unitary groups: products, determinants, conjugate transpose under the
/// q-power map, inverses by adjugate, and Hermitian Gram orthonormalization.
pub mod mat3 {
    use super::FieldSpec;

    pub type Mat3 = [[u64; 3]; 3];

    pub fn identity() -> Mat3 {
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    }

    pub fn scalar(c: u64) -> Mat3 {
        [[c, 0, 0], [0, c, 0], [0, 0, c]]
    }

    pub fn is_scalar(m: &Mat3) -> bool {
        m[0][1] == 0
            && m[0][2] == 0
            && m[1][0] == 0
            && m[1][2] == 0
            && m[2][0] == 0
            && m[2][1] == 0
            && m[0][0] == m[1][1]
            && m[1][1] == m[2][2]
    }

    pub fn mul(f: &FieldSpec, a: &Mat3, b: &Mat3) -> Mat3 {
        let mut out = [[0u64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = 0u64;
                for (k, bk) in b.iter().enumerate() {
                    acc = f.add(acc, f.mul(a[i][k], bk[j]));
                }
                out[i][j] = acc;
            }
        }
        out
    }

    pub fn pow(f: &FieldSpec, a: &Mat3, mut e: u64) -> Mat3 {
        let mut base = *a;
        let mut out = identity();
        while e > 0 {
            if e & 1 == 1 {
                out = mul(f, &out, &base);
            }
            base = mul(f, &base, &base);
            e >>= 1;
        }
        out
    }

    pub fn det(f: &FieldSpec, m: &Mat3) -> u64 {
        let term = |a: u64, b: u64, c: u64| f.mul(a, f.mul(b, c));
        let pos = f.add(
            f.add(term(m[0][0], m[1][1], m[2][2]), term(m[0][1], m[1][2], m[2][0])),
            term(m[0][2], m[1][0], m[2][1]),
        );
        let neg = f.add(
            f.add(term(m[0][2], m[1][1], m[2][0]), term(m[0][0], m[1][2], m[2][1])),
            term(m[0][1], m[1][0], m[2][2]),
        );
        f.sub(pos, neg)
    }

    /// Inverse by adjugate; panics on a singular matrix.
    pub fn inv(f: &FieldSpec, m: &Mat3) -> Mat3 {
        let d = det(f, m);
        let di = f.inv(d).expect("matrix must be invertible");
        let cof = |r1: usize, c1: usize, r2: usize, c2: usize| {
            f.sub(f.mul(m[r1][c1], m[r2][c2]), f.mul(m[r1][c2], m[r2][c1]))
        };
        let mut adj = [[0u64; 3]; 3];
        adj[0][0] = cof(1, 1, 2, 2);
        adj[0][1] = f.neg(cof(0, 1, 2, 2));
        adj[0][2] = cof(0, 1, 1, 2);
        adj[1][0] = f.neg(cof(1, 0, 2, 2));
        adj[1][1] = cof(0, 0, 2, 2);
        adj[1][2] = f.neg(cof(0, 0, 1, 2));
        adj[2][0] = cof(1, 0, 2, 1);
        adj[2][1] = f.neg(cof(0, 0, 2, 1));
        adj[2][2] = cof(0, 0, 1, 1);
        let mut out = [[0u64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = f.mul(di, adj[i][j]);
            }
        }
        out
    }

    /// Conjugate transpose with respect to x -> x^q.
    pub fn conj_t(f: &FieldSpec, q: u64, m: &Mat3) -> Mat3 {
        let mut out = [[0u64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[j][i] = f.pow(m[i][j], q as u128);
            }
        }
        out
    }

    /// Membership in SU(3,q) with the identity Hermitian form:
    /// conj_t(g) * g = 1 and det g = 1.
    pub fn is_su3(f: &FieldSpec, q: u64, m: &Mat3) -> bool {
        det(f, m) == 1 && mul(f, &conj_t(f, q, m), m) == identity()
    }

    /// Hermitian inner product <x, y> = sum x_i^q h_ij y_j.
    fn herm(f: &FieldSpec, q: u64, h: &Mat3, x: &[u64; 3], y: &[u64; 3]) -> u64 {
        let mut acc = 0u64;
        for i in 0..3 {
            for j in 0..3 {
                acc = f.add(acc, f.mul(f.pow(x[i], q as u128), f.mul(h[i][j], y[j])));
            }
        }
        acc
    }

    /// For a nondegenerate Hermitian Gram matrix H, return S with
    /// conj_t(S) S = H, so that S U S^(-1) is identity-form unitary whenever
    /// U preserves H.
    pub fn hermitian_base_change(f: &FieldSpec, q: u64, h: &Mat3) -> Mat3 {
        // Gram-Schmidt over the Hermitian form, with anisotropic-vector search.
        let mut pool: Vec<[u64; 3]> = vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        let mut basis: Vec<[u64; 3]> = Vec::new();
        for _ in 0..3 {
            let v = find_anisotropic(f, q, h, &pool);
            // Normalize to norm 1: nu is in F_q, so its log is divisible by q+1.
            let nu = herm(f, q, h, &v, &v);
            let l = f.discrete_log(nu).expect("anisotropic norm is nonzero");
            debug_assert_eq!(l % (q + 1), 0, "Hermitian norms lie in the base field");
            let s = f.from_log((f.q - 1 - l) / (q + 1));
            let e = [f.mul(s, v[0]), f.mul(s, v[1]), f.mul(s, v[2])];
            // Project the remaining pool away from e.
            for w in pool.iter_mut() {
                let c = herm(f, q, h, &e, w);
                for i in 0..3 {
                    w[i] = f.sub(w[i], f.mul(c, e[i]));
                }
            }
            pool.retain(|w| w != &[0, 0, 0]);
            basis.push(e);
        }
        // Columns e_i give E with conj_t(E) H E = 1; S = E^(-1).
        let e_mat: Mat3 = [
            [basis[0][0], basis[1][0], basis[2][0]],
            [basis[0][1], basis[1][1], basis[2][1]],
            [basis[0][2], basis[1][2], basis[2][2]],
        ];
        inv(f, &e_mat)
    }

    fn find_anisotropic(f: &FieldSpec, q: u64, h: &Mat3, pool: &[[u64; 3]]) -> [u64; 3] {
        for v in pool {
            if herm(f, q, h, v, v) != 0 {
                return *v;
            }
        }
        // Combine pool vectors v + t w over a few multipliers t.
        for (i, v) in pool.iter().enumerate() {
            for w in pool.iter().skip(i + 1) {
                for t in f.elements().skip(1) {
                    let cand = [
                        f.add(v[0], f.mul(t, w[0])),
                        f.add(v[1], f.mul(t, w[1])),
                        f.add(v[2], f.mul(t, w[2])),
                    ];
                    if herm(f, q, h, &cand, &cand) != 0 {
                        return cand;
                    }
                }
            }
        }
        panic!("degenerate Hermitian form");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_fields() {
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(f9.q, 9);
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(f2.generator, 1);
        let f25 = make_field(5, 2).unwrap();
        // Order of the generator is forced by primitivity.
        let mut seen = std::collections::HashSet::new();
        let mut x = 1u64;
        for _ in 0..24 {
            assert!(seen.insert(x));
            x = f25.mul(x, f25.generator);
        }
        assert_eq!(x, 1);
        assert!(matches!(make_field(6, 1), Err(FieldError::NotPrime(6))));
        assert!(matches!(
            make_field(2, 60),
            Err(FieldError::SizeExceeded(_))
        ));
    }

    #[test]
    fn frobenius_and_logs() {
        let f9 = make_field(3, 2).unwrap();
        for a in f9.elements() {
            assert_eq!(f9.frobenius(f9.frobenius(a, 1), 1), a);
            // x^(p^m) = x for all x.
            assert_eq!(f9.pow(a, 9), a);
        }
        let f4 = make_field(2, 2).unwrap();
        let fixed: Vec<u64> = f4
            .elements()
            .filter(|&a| f4.frobenius(a, 1) == a)
            .collect();
        assert_eq!(fixed, vec![0, 1]);
        assert_eq!(f9.discrete_log(f9.generator).unwrap(), 1);
        assert_eq!(f9.discrete_log(1).unwrap(), 0);
        let f25 = make_field(5, 2).unwrap();
        assert_eq!(f25.discrete_log(f25.pow(f25.generator, 5)).unwrap(), 5);
        assert!(f25.discrete_log(0).is_err());
    }

    #[test]
    fn norm_image_is_base_units() {
        // a -> a * a^q on F_{q^2} surjects onto F_q^x, exhaustively for q <= 9.
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let (p, m) = crate::exact::arith::prime_power(q).unwrap();
            let fq2 = make_field(p, 2 * m).unwrap();
            let fq = make_field(p, m).unwrap();
            let mut image = std::collections::HashSet::new();
            for a in fq2.elements().skip(1) {
                let n = fq2.mul(a, fq2.pow(a, q as u128));
                image.insert(n);
            }
            let base_units: std::collections::HashSet<u64> = fq
                .elements()
                .skip(1)
                .map(|a| fq2.embed_from(&fq, a))
                .collect();
            assert_eq!(image, base_units, "q = {q}");
        }
    }

    #[test]
    fn embeddings_are_homomorphisms() {
        let f3 = make_field(3, 1).unwrap();
        let f9 = make_field(3, 2).unwrap();
        for a in f3.elements() {
            for b in f3.elements() {
                assert_eq!(
                    f9.embed_from(&f3, f3.add(a, b)),
                    f9.add(f9.embed_from(&f3, a), f9.embed_from(&f3, b))
                );
                assert_eq!(
                    f9.embed_from(&f3, f3.mul(a, b)),
                    f9.mul(f9.embed_from(&f3, a), f9.embed_from(&f3, b))
                );
            }
        }
        let f4 = make_field(2, 2).unwrap();
        let f16 = make_field(2, 4).unwrap();
        for a in f4.elements() {
            for b in f4.elements() {
                assert_eq!(
                    f16.embed_from(&f4, f4.mul(a, b)),
                    f16.mul(f16.embed_from(&f4, a), f16.embed_from(&f4, b))
                );
            }
        }
    }

    #[test]
    fn mu_subgroup_size() {
        for q in [3u64, 4, 5, 7, 8] {
            let (p, m) = crate::exact::arith::prime_power(q).unwrap();
            let fq2 = make_field(p, 2 * m).unwrap();
            let mu: Vec<u64> = fq2.subgroup(q + 1);
            assert_eq!(mu.len() as u64, q + 1);
            assert!(mu.iter().all(|&x| fq2.pow(x, (q + 1) as u128) == 1));
        }
    }

    #[test]
    fn cubic_extension() {
        let f9 = make_field(3, 2).unwrap();
        let e = CubicExt::new(f9.clone());
        // The norm-one torus for q=3 has order q^2-q+1 = 7.
        let d = e.subgroup_generator(7);
        let mut x = d;
        for _ in 0..6 {
            assert!(!e.is_one(x));
            x = e.mul(x, d);
        }
        assert!(e.is_one(x));
    }
}
