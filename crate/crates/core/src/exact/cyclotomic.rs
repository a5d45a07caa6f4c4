//! Exact cyclotomic numbers.
//!
//! A [`CycNumber`] is an element of Q(zeta_n). Internally it is a sparse
//! rational combination of roots of unity `zeta_n^e` (a group-algebra
//! representative); the canonical form is the coordinate vector in the
//! power basis `{1, zeta_n, ..., zeta_n^(phi(n)-1)}` reduced modulo the
//! n-th cyclotomic polynomial. Sums and products never force a reduction,
//! so long accumulations stay cheap; reduction happens on demand
//! (equality, rationality tests, coordinate access).

use super::arith::{divisors, euler_phi, gcd, lcm};
use super::Rational;
use num::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};
use thiserror::Error;

/// Errors from exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    /// The value does not lie in Q.
    #[error("cyclotomic value is not rational")]
    NotRational,
    /// Division by zero in the derived division operation.
    #[error("division by zero")]
    DivisionByZero,
}

/// Coefficients of the n-th cyclotomic polynomial (monic, degree phi(n)).
///
/// Computed as (x^n - 1) / prod_{d | n, d < n} Phi_d(x) by iterated exact
/// division; coefficients stay far below i64 range at desk-scale n.
fn cyclotomic_poly(n: u64) -> Vec<i64> {
    fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
        // Monic divisor; exact integer division.
        let mut rem = num.to_vec();
        let dn = den.len() - 1;
        let qn = rem.len() - 1 - dn;
        let mut q = vec![0i64; qn + 1];
        for i in (0..=qn).rev() {
            let c = rem[i + dn];
            q[i] = c;
            if c != 0 {
                for (j, &d) in den.iter().enumerate() {
                    rem[i + j] -= c * d;
                }
            }
        }
        debug_assert!(rem.iter().all(|&c| c == 0));
        q
    }

    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    let mut out = num;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cached(d).poly.clone();
        out = poly_div_exact(&out, &phi_d);
    }
    out
}

struct Cache {
    phi: usize,
    poly: Vec<i64>,
}

fn cached(n: u64) -> std::sync::Arc<Cache> {
    static CACHES: OnceLock<Mutex<HashMap<u64, std::sync::Arc<Cache>>>> = OnceLock::new();
    let m = CACHES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = m.lock().unwrap().get(&n) {
        return c.clone();
    }
    // Build outside the lock; divisor recursion re-enters `cached`.
    let poly = if n == 1 {
        vec![-1, 1]
    } else {
        cyclotomic_poly(n)
    };
    let c = std::sync::Arc::new(Cache {
        phi: euler_phi(n) as usize,
        poly,
    });
    m.lock().unwrap().entry(n).or_insert(c).clone()
}

/// An exact element of the cyclotomic field Q(zeta_n).
#[derive(Clone)]
pub struct CycNumber {
    conductor: u64,
    /// Sparse terms: exponent (mod conductor) -> rational coefficient.
    terms: BTreeMap<u64, Rational>,
}

impl CycNumber {
    pub fn zero() -> Self {
        CycNumber {
            conductor: 1,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(super::rat_int(v))
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(0, r);
        }
        CycNumber {
            conductor: 1,
            terms,
        }
    }

    /// zeta_n^k, stored at the minimal conductor n/gcd(n,k).
    pub fn root_of_unity(n: u64, k: u64) -> Self {
        assert!(n >= 1);
        let k = k % n;
        let g = gcd(n, k);
        let (n, k) = if k == 0 { (1, 0) } else { (n / g, k / g) };
        let mut terms = BTreeMap::new();
        terms.insert(k, Rational::one());
        CycNumber { conductor: n, terms }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Re-index the terms into Q(zeta_m); requires conductor | m.
    fn embedded(&self, m: u64) -> CycNumber {
        if m == self.conductor {
            return self.clone();
        }
        assert!(m % self.conductor == 0);
        let f = m / self.conductor;
        let terms = self
            .terms
            .iter()
            .map(|(&e, c)| (e * f, c.clone()))
            .collect();
        CycNumber { conductor: m, terms }
    }

    pub fn add(&self, other: &CycNumber) -> CycNumber {
        let n = lcm(self.conductor, other.conductor);
        let mut out = self.embedded(n);
        for (&e, c) in other.embedded(n).terms.iter() {
            let entry = out.terms.entry(e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(&e);
            }
        }
        out
    }

    pub fn sub(&self, other: &CycNumber) -> CycNumber {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycNumber {
        CycNumber {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &CycNumber) -> CycNumber {
        if self.terms.is_empty() || other.terms.is_empty() {
            return CycNumber::zero();
        }
        let n = lcm(self.conductor, other.conductor);
        let a = self.embedded(n);
        let b = other.embedded(n);
        let mut terms: BTreeMap<u64, Rational> = BTreeMap::new();
        for (&ea, ca) in a.terms.iter() {
            for (&eb, cb) in b.terms.iter() {
                let e = (ea + eb) % n;
                let entry = terms.entry(e).or_insert_with(Rational::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        let mut out = CycNumber { conductor: n, terms };
        // Keep accumulated values from growing past one term per residue;
        // reduce to the power basis when the sparse form gets large.
        if out.terms.len() > 2 * cached(n).phi {
            out = out.canonicalized();
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> CycNumber {
        if r.is_zero() {
            return CycNumber::zero();
        }
        CycNumber {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(&e, c)| (e, c * r)).collect(),
        }
    }

    /// Complex conjugation: zeta_n -> zeta_n^(n-1).
    pub fn conj(&self) -> CycNumber {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }

    /// The Galois action zeta_n -> zeta_n^a for gcd(a, n) = 1.
    pub fn galois(&self, a: u64) -> CycNumber {
        let n = self.conductor;
        if n == 1 {
            return self.clone();
        }
        assert!(gcd(a % n, n) == 1, "galois exponent must be a unit mod n");
        let mut terms = BTreeMap::new();
        for (&e, c) in self.terms.iter() {
            let e2 = e * (a % n) % n;
            let entry = terms.entry(e2).or_insert_with(Rational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        CycNumber { conductor: n, terms }
    }

    pub fn pow(&self, k: u32) -> CycNumber {
        let mut out = CycNumber::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Canonical coordinates in the power basis {zeta^0..zeta^(phi-1)} mod Phi_n.
    pub fn coords(&self) -> Vec<Rational> {
        let n = self.conductor;
        let cache = cached(n);
        let phi = cache.phi;
        let mut dense = vec![Rational::zero(); n as usize];
        for (&e, c) in self.terms.iter() {
            dense[e as usize] += c;
        }
        // Synthetic division by the monic Phi_n.
        for e in (phi..n as usize).rev() {
            if dense[e].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut dense[e], Rational::zero());
            let base = e - phi;
            for (j, &pj) in cache.poly.iter().enumerate().take(phi) {
                if pj != 0 {
                    let delta = &c * super::rat_int(pj);
                    dense[base + j] -= delta;
                }
            }
        }
        dense.truncate(phi);
        dense
    }

    /// Replace the sparse form by the canonical reduced form (same value).
    pub fn canonicalized(&self) -> CycNumber {
        let coords = self.coords();
        let terms = coords
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u64, c))
            .collect();
        CycNumber {
            conductor: self.conductor,
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        if self.terms.is_empty() {
            return true;
        }
        self.coords().iter().all(|c| c.is_zero())
    }

    /// The rational value, if the number lies in Q.
    pub fn to_rational(&self) -> Result<Rational, ExactError> {
        let coords = self.coords();
        if coords.iter().skip(1).any(|c| !c.is_zero()) {
            return Err(ExactError::NotRational);
        }
        Ok(coords.first().cloned().unwrap_or_else(Rational::zero))
    }

    /// Derived division; errors on a zero divisor.
    pub fn div(&self, other: &CycNumber) -> Result<CycNumber, ExactError> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]/(Phi_n).
    pub fn inverse(&self) -> Result<CycNumber, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let v = self.canonicalized();
        let n = v.conductor;
        let cache = cached(n);
        let phi_poly: Vec<Rational> = cache.poly.iter().map(|&c| super::rat_int(c)).collect();
        let mut a = phi_poly;
        let mut b = v.coords();
        trim(&mut b);
        // Bezout coefficients for b against a: s*b = gcd (mod a).
        let mut s0: Vec<Rational> = vec![];
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !b.is_empty() {
            let (q, r) = poly_divmod(&a, &b);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            a = b;
            b = r;
            s0 = s1;
            s1 = s2;
        }
        // a is now a nonzero constant times the gcd (which is 1 up to scalar).
        assert_eq!(a.len(), 1, "value not invertible mod cyclotomic polynomial");
        let inv_lead = Rational::one() / a[0].clone();
        let inv_coeffs: Vec<Rational> = s0.iter().map(|c| c * &inv_lead).collect();
        let terms = inv_coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u64, c))
            .collect();
        Ok(CycNumber { conductor: n, terms })
    }

    /// The same value rewritten at the smallest conductor that contains it.
    pub fn minimized(&self) -> CycNumber {
        let mut cur = self.canonicalized();
        'outer: loop {
            if cur.conductor == 1 {
                return cur;
            }
            for &m in divisors(cur.conductor).iter() {
                if m == cur.conductor {
                    continue;
                }
                if let Some(lowered) = cur.try_lower_to(m) {
                    cur = lowered;
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Attempt to rewrite at conductor m | n by solving for coordinates in
    /// the embedded power basis of Q(zeta_m).
    fn try_lower_to(&self, m: u64) -> Option<CycNumber> {
        let n = self.conductor;
        debug_assert!(n % m == 0);
        let phi_m = cached(m).phi;
        let phi_n = cached(n).phi;
        // Columns: canonical coords at n of zeta_m^j, j < phi_m. Solve col * x = self.
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(phi_m);
        for j in 0..phi_m {
            let b = CycNumber::root_of_unity(m, j as u64).embedded_any(n);
            cols.push(b.coords());
        }
        let target = self.coords();
        solve_linear(&cols, &target, phi_n).map(|x| {
            let terms = x
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as u64, c))
                .collect();
            CycNumber { conductor: m, terms }
        })
    }

    /// Embedding that tolerates conductor 1 and non-divisible cases by lcm.
    fn embedded_any(&self, n: u64) -> CycNumber {
        self.embedded(lcm(self.conductor, n))
    }

    /// Deterministic total order on values (canonical form compare).
    pub fn canonical_cmp(&self, other: &CycNumber) -> std::cmp::Ordering {
        let a = self.minimized();
        let b = other.minimized();
        a.conductor
            .cmp(&b.conductor)
            .then_with(|| a.coords().cmp(&b.coords()))
    }
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), Rational::zero());
    }
    for (i, cb) in b.iter().enumerate() {
        out[i] -= cb;
    }
    trim(&mut out);
    out
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() <= db {
        return (vec![], rem);
    }
    let lead = b[db].clone();
    let mut q = vec![Rational::zero(); rem.len() - db];
    for i in (0..q.len()).rev() {
        if rem[i + db].is_zero() {
            continue;
        }
        let c = &rem[i + db] / &lead;
        q[i] = c.clone();
        for (j, cb) in b.iter().enumerate() {
            let delta = &c * cb;
            rem[i + j] -= delta;
        }
    }
    trim(&mut q);
    trim(&mut rem);
    (q, rem)
}

/// Solve `cols * x = target` by Gaussian elimination; None if inconsistent.
fn solve_linear(cols: &[Vec<Rational>], target: &[Rational], rows: usize) -> Option<Vec<Rational>> {
    let ncols = cols.len();
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_of_col = vec![usize::MAX; ncols];
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = Rational::one() / m[rank][col].clone();
        for v in m[rank].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c2 in 0..=ncols {
                    let delta = &f * &m[rank][c2];
                    m[r][c2] -= delta;
                }
            }
        }
        pivot_of_col[col] = rank;
        rank += 1;
    }
    // Inconsistent if any zero-row has nonzero rhs.
    for r in rank..rows {
        if !m[r][ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); ncols];
    for col in 0..ncols {
        if pivot_of_col[col] != usize::MAX {
            x[col] = m[pivot_of_col[col]][ncols].clone();
        }
    }
    Some(x)
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}
impl Eq for CycNumber {}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.minimized();
        if v.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = v
            .terms
            .iter()
            .map(|(e, c)| {
                if *e == 0 || v.conductor == 1 {
                    format!("{c}")
                } else {
                    format!("{c}*z{}^{}", v.conductor, e)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Gauss sum attached to the quadratic character of F_p (p odd prime):
/// equals sqrt(p) for p = 1 mod 4 and sqrt(-p) for p = 3 mod 4.
pub fn gauss_sum(p: u64) -> CycNumber {
    assert!(p % 2 == 1 && super::arith::is_prime(p));
    let mut acc = CycNumber::zero();
    for t in 1..p {
        let legendre = super::arith::pow_mod(t, (p - 1) / 2, p);
        let sign = if legendre == 1 { 1 } else { -1 };
        acc = acc.add(&CycNumber::root_of_unity(p, t).scale(&super::rat_int(sign)));
    }
    acc
}

/// sqrt((-1)^((q-1)/2) * q) for an odd prime power q = p^f, as a cyclotomic number.
pub fn sqrt_eps_q(p: u64, f: u32) -> CycNumber {
    assert!(p % 2 == 1);
    if f % 2 == 0 {
        let half = super::arith::checked_pow(p, f / 2).expect("overflow");
        CycNumber::from_int(half as i64)
    } else {
        let scale = super::arith::checked_pow(p, (f - 1) / 2).expect("overflow");
        gauss_sum(p).scale(&super::rat_int(scale as i64))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    fn zeta(n: u64, k: u64) -> CycNumber {
        CycNumber::root_of_unity(n, k)
    }

    #[test]
    fn root_of_unity_sums() {
        // zeta_3 + zeta_3^2 = -1
        let v = zeta(3, 1).add(&zeta(3, 2));
        assert_eq!(v.to_rational().unwrap(), rat_int(-1));
        // zeta_4 * zeta_4 = -1
        let v = zeta(4, 1).mul(&zeta(4, 1));
        assert_eq!(v.to_rational().unwrap(), rat_int(-1));
        // conj(zeta_5) = zeta_5^4
        assert_eq!(zeta(5, 1).conj(), zeta(5, 4));
        // zeta_3 + zeta_3^2 + 1 = 0
        let v = zeta(3, 1).add(&zeta(3, 2)).add(&CycNumber::one());
        assert!(v.is_zero());
    }

    #[test]
    fn rationality() {
        let v = CycNumber::from_rational(rat(7, 2));
        assert_eq!(v.to_rational().unwrap(), rat(7, 2));
        assert_eq!(zeta(5, 1).to_rational(), Err(ExactError::NotRational));
    }

    #[test]
    fn division() {
        let a = zeta(5, 1).add(&CycNumber::from_int(3));
        let b = zeta(5, 2).sub(&CycNumber::from_int(1));
        let q = a.div(&b).unwrap();
        assert_eq!(q.mul(&b), a);
        assert_eq!(
            a.div(&CycNumber::zero()),
            Err(ExactError::DivisionByZero)
        );
    }

    #[test]
    fn conjugation_involution_and_mixed_conductors() {
        let v = zeta(12, 5).scale(&rat(2, 3)).add(&zeta(8, 3));
        assert_eq!(v.conj().conj(), v);
        // (a+b)-b = a across conductors
        let a = zeta(9, 2);
        let b = zeta(8, 1).scale(&rat(-3, 7));
        assert_eq!(a.add(&b).sub(&b), a);
    }

    #[test]
    fn minimization() {
        // zeta_6 = -zeta_3^2 has conductor 6 -> stays 6 (phi(6)=2); but
        // zeta_8^2 = i should minimize to conductor 4.
        let v = zeta(8, 1).mul(&zeta(8, 1));
        let m = v.minimized();
        assert_eq!(m.conductor(), 4);
        assert_eq!(m, zeta(4, 1));
        // A rational disguised at conductor 7.
        let v = zeta(7, 1)
            .add(&zeta(7, 2))
            .add(&zeta(7, 3))
            .add(&zeta(7, 4))
            .add(&zeta(7, 5))
            .add(&zeta(7, 6));
        assert_eq!(v.minimized().conductor(), 1);
        assert_eq!(v.to_rational().unwrap(), rat_int(-1));
    }

    #[test]
    fn gauss_sum_squares_to_eps_p() {
        for p in [3u64, 5, 7, 11, 13] {
            let g = gauss_sum(p);
            let eps: i64 = if (p - 1) / 2 % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                g.mul(&g).to_rational().unwrap(),
                rat_int(eps * p as i64),
                "p = {p}"
            );
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]

        // Field axioms at a fixed conductor.
        #[test]
        fn ring_axioms(
            ae in proptest::collection::vec((0u64..12, -4i64..5), 0..4),
            be in proptest::collection::vec((0u64..12, -4i64..5), 0..4),
            ce in proptest::collection::vec((0u64..12, -4i64..5), 0..4),
        ) {
            let build = |spec: &[(u64, i64)]| {
                let mut v = CycNumber::zero();
                for &(e, c) in spec {
                    v = v.add(&zeta(12, e).scale(&rat_int(c)));
                }
                v
            };
            let a = build(&ae);
            let b = build(&be);
            let c = build(&ce);
            proptest::prop_assert_eq!(a.mul(&b.mul(&c)), a.mul(&b).mul(&c));
            proptest::prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            proptest::prop_assert_eq!(a.add(&b).sub(&b), a.clone());
            proptest::prop_assert_eq!(a.conj().conj(), a.clone());
            if !b.is_zero() {
                proptest::prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a.clone());
            }
        }

        #[test]
        fn rational_round_trip(n in -40i64..40, d in 1i64..12) {
            let r = rat(n, d);
            let v = CycNumber::from_rational(r.clone()).add(&zeta(9, 3)).sub(&zeta(3, 1));
            // zeta_9^3 = zeta_3, so v is rational again.
            proptest::prop_assert_eq!(v.to_rational().unwrap(), r);
        }
    }
}
