//! Concrete conjugacy-class representatives of SU(3,q)/PSU(3,q) and the
//! class-level power machinery.
//!
//! Classes are parametrized by eigenvalue data: exponents in the cyclic
//! groups mu_{q+1} (types C4-C6), F_{q^2}^x (type C7) and the norm-one torus
//! of order q^2-q+1 (type C8), plus unipotent bookkeeping for C2/C3/C5.
//! Powering g -> g^k acts on these exponents, which re-derives the symbolic
//! power tables for k <= 4 and extends them to the k = 5, 6 data the Molien
//! computation needs. Matrices live in the identity-Hermitian-form SU(3,q);
//! constructions natural in another form are conjugated in by an explicit
//! base change.

use crate::exact::arith::prime_power;
use crate::ffield::mat3::{self, Mat3};
use crate::ffield::{make_field, CubicExt, FieldSpec};
use crate::psu3_data::{self, ClassType, Psu3DataError};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Psu3RepsError {
    #[error(transparent)]
    Data(#[from] Psu3DataError),
    #[error("q = {q}: built {built} representatives of type {ty:?}, class table says {expected}")]
    CountMismatch {
        q: u64,
        ty: ClassType,
        built: u64,
        expected: u64,
    },
    #[error("q = {q}, k = {k}: representative power distribution disagrees with the symbolic table at (row {row}, col {col}): {reps} vs {symbolic}")]
    SymbolicMismatch {
        q: u64,
        k: u64,
        row: usize,
        col: usize,
        reps: u64,
        symbolic: u64,
    },
    #[error("matrix is not in SU(3,q)")]
    NotInGroup,
}

/// Canonical identifier of a PSU(3,q) conjugacy class.
///
/// Exponents are orbit minima: under the eigenvalue pairing (C7: e ~ -qe;
/// C8: e ~ -qe ~ q^2 e) and, when d = 3, under the central scaling that
/// shifts exponents by a third of the torus order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassId {
    C1,
    C2,
    /// Regular unipotent; branch indexes the d classes surviving in PSU.
    C3 { branch: u64 },
    /// Eigenvalues (z^a, z^a, z^-2a) with z of order q+1, 3a != 0 mod q+1.
    C4 { a: u64 },
    /// Same semisimple part as C4 with a 2-block unipotent part.
    C5 { a: u64 },
    /// Eigenvalues = the three cube roots of unity (q = 2 mod 3 only).
    C6Prime,
    /// Distinct eigenvalue exponents a < b < c in mu_{q+1} summing to 0.
    C6 { a: u64, b: u64, c: u64 },
    /// Eigenvalues (B, B^(q-1), B^-q) with B = G^e outside mu_{q+1}.
    C7 { e: u64 },
    /// Norm-one torus exponent e mod q^2-q+1, noncentral.
    C8 { e: u64 },
}

impl ClassId {
    pub fn class_type(&self) -> ClassType {
        match self {
            ClassId::C1 => ClassType::C1,
            ClassId::C2 => ClassType::C2,
            ClassId::C3 { .. } => ClassType::C3,
            ClassId::C4 { .. } => ClassType::C4,
            ClassId::C5 { .. } => ClassType::C5,
            ClassId::C6Prime => ClassType::C6Prime,
            ClassId::C6 { .. } => ClassType::C6,
            ClassId::C7 { .. } => ClassType::C7,
            ClassId::C8 { .. } => ClassType::C8,
        }
    }
}

/// One PSU(3,q) class: canonical id plus an SU(3,q) matrix representative
/// for the identity Hermitian form.
#[derive(Debug, Clone)]
pub struct ClassRep {
    pub id: ClassId,
    pub matrix: Mat3,
}

struct Singer {
    s8: Mat3,
    s8_inv: Mat3,
    ext: CubicExt,
    delta: crate::ffield::CubicElem,
}

/// Shared per-q data for representative construction and power maps.
pub struct RepsContext {
    pub q: u64,
    pub p: u64,
    pub d: u64,
    pub fq2: Arc<FieldSpec>,
    /// log step of the mu_{q+1} generator inside F_{q^2}^x.
    zeta_step: u64,
    s_j: Mat3,
    s_j_inv: Mat3,
    singer: Option<Singer>,
}

impl RepsContext {
    pub fn new(q: u64) -> Result<RepsContext, Psu3RepsError> {
        let (p, f) = prime_power(q).ok_or(Psu3DataError::NotPrimePower(q))?;
        let fq2 = make_field(p, 2 * f).expect("q^2 fits the desk-scale bound for q <= 197");
        let d = psu3_data::gcd3(q);
        let n2 = q * q - 1;
        let zeta_step = n2 / (q + 1);

        // Base change for the antidiagonal form J: S with conj_t(S) S = J.
        let j_form: Mat3 = [[0, 0, 1], [0, 1, 0], [1, 0, 0]];
        let s_j = mat3::hermitian_base_change(&fq2, q, &j_form);
        let s_j_inv = mat3::inv(&fq2, &s_j);

        // Singer data for C8, built only when noncentral torus classes exist.
        let t_torus = q * q - q + 1;
        let singer = if (t_torus - d) / (3 * d) > 0 {
            let ext = CubicExt::new(fq2.clone());
            let delta = ext.subgroup_generator(t_torus);
            // Gram matrix of the trace form on F_{q^6}/F_{q^2}, conjugate
            // linear in the first slot: H_ij = Tr((y^i)^(q^3) * y^j).
            let q3 = (q as u128) * (q as u128) * (q as u128);
            let basis = [ext.one(), ext.y(), ext.mul(ext.y(), ext.y())];
            let mut h: Mat3 = [[0; 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    h[i][j] = ext.rel_trace(ext.mul(ext.pow(basis[i], q3), basis[j]));
                }
            }
            let s8 = mat3::hermitian_base_change(&fq2, q, &h);
            let s8_inv = mat3::inv(&fq2, &s8);
            Some(Singer {
                s8,
                s8_inv,
                ext,
                delta,
            })
        } else {
            None
        };

        Ok(RepsContext {
            q,
            p,
            d,
            fq2,
            zeta_step,
            s_j,
            s_j_inv,
            singer,
        })
    }

    fn n(&self) -> u64 {
        self.q + 1
    }

    fn n2(&self) -> u64 {
        self.q * self.q - 1
    }

    fn torus(&self) -> u64 {
        self.q * self.q - self.q + 1
    }

    /// mu_{q+1} exponent a as an element code.
    fn zeta(&self, a: u64) -> u64 {
        self.fq2.from_log(a % self.n() * self.zeta_step)
    }

    // Orbit minima defining the canonical class parameters.

    fn canon_c4(&self, a: u64) -> u64 {
        let n = self.n();
        if self.d == 1 {
            return a % n;
        }
        let s = n / 3;
        (0..3).map(|j| (a + j * s) % n).min().unwrap()
    }

    fn canon_c6(&self, mut t: [u64; 3]) -> [u64; 3] {
        let n = self.n();
        t.sort_unstable();
        if self.d == 1 {
            return t;
        }
        let s = n / 3;
        (0..3)
            .map(|j| {
                let mut u = [(t[0] + j * s) % n, (t[1] + j * s) % n, (t[2] + j * s) % n];
                u.sort_unstable();
                u
            })
            .min()
            .unwrap()
    }

    fn canon_c7(&self, e: u64) -> u64 {
        let n2 = self.n2();
        let pair = (n2 - (self.q as u128 * e as u128 % n2 as u128) as u64) % n2;
        let base = [e % n2, pair];
        if self.d == 1 {
            return base.into_iter().min().unwrap();
        }
        let s = n2 / 3;
        base.into_iter()
            .flat_map(|x| (0..3).map(move |j| (x + j * s) % n2))
            .min()
            .unwrap()
    }

    fn canon_c8(&self, e: u64) -> u64 {
        let t = self.torus();
        let e = e % t;
        let s1 = (t - (self.q as u128 * e as u128 % t as u128) as u64) % t;
        let s2 = ((self.q as u128 * self.q as u128 % t as u128) * e as u128 % t as u128) as u64;
        let base = [e, s1, s2];
        if self.d == 1 {
            return base.into_iter().min().unwrap();
        }
        let s = t / 3;
        base.into_iter()
            .flat_map(|x| (0..3).map(move |j| (x + j * s) % t))
            .min()
            .unwrap()
    }

    /// All PSU(3,q) class ids, each exactly once, in canonical order.
    pub fn class_ids(&self) -> Vec<ClassId> {
        let n = self.n();
        let n2 = self.n2();
        let t = self.torus();
        let mut out = vec![ClassId::C1, ClassId::C2];
        for branch in 0..self.d {
            out.push(ClassId::C3 { branch });
        }
        for a in 1..n {
            if 3 * a % n != 0 && self.canon_c4(a) == a {
                out.push(ClassId::C4 { a });
            }
        }
        for a in 1..n {
            if 3 * a % n != 0 && self.canon_c4(a) == a {
                out.push(ClassId::C5 { a });
            }
        }
        if self.d == 3 {
            out.push(ClassId::C6Prime);
        }
        let c6p_triple = if self.d == 3 {
            Some([0, n / 3, 2 * n / 3])
        } else {
            None
        };
        for a in 0..n {
            for b in (a + 1)..n {
                let c = (2 * n - (a + b) % n) % n;
                if c <= b {
                    continue;
                }
                let triple = [a, b, c];
                if Some(triple) == c6p_triple {
                    continue;
                }
                if self.canon_c6(triple) == triple {
                    out.push(ClassId::C6 {
                        a: triple[0],
                        b: triple[1],
                        c: triple[2],
                    });
                }
            }
        }
        for e in 1..n2 {
            if e % (self.q - 1) != 0 && self.canon_c7(e) == e {
                out.push(ClassId::C7 { e });
            }
        }
        let central_step = t / self.d;
        for e in 1..t {
            if e % central_step != 0 && self.canon_c8(e) == e {
                out.push(ClassId::C8 { e });
            }
        }
        out
    }

    /// The class of g^k for g in the given class.
    pub fn power_class(&self, id: ClassId, k: u64) -> ClassId {
        let n = self.n();
        let n2 = self.n2();
        let t = self.torus();
        let modmul = |k: u64, e: u64, m: u64| (k as u128 * e as u128 % m as u128) as u64;
        match id {
            ClassId::C1 => ClassId::C1,
            ClassId::C2 => {
                if k % self.p == 0 {
                    ClassId::C1
                } else {
                    ClassId::C2
                }
            }
            ClassId::C3 { branch } => match self.p {
                // Char 2 regular unipotents have order 4.
                2 => match k % 4 {
                    0 => ClassId::C1,
                    2 => ClassId::C2,
                    _ => ClassId::C3 { branch },
                },
                p => {
                    if k % p == 0 {
                        ClassId::C1
                    } else {
                        // u(a,b)^k = u(ka, ...): the branch, indexed by the
                        // discrete log mod d, shifts by dlog(k mod p).
                        let kbar = self.fq2.from_prime(k % p);
                        let shift = self.fq2.discrete_log(kbar).unwrap() % self.d;
                        ClassId::C3 {
                            branch: (branch + shift) % self.d,
                        }
                    }
                }
            },
            ClassId::C4 { a } => {
                let ta = modmul(k, a, n);
                if 3 * ta % n == 0 {
                    ClassId::C1
                } else {
                    ClassId::C4 {
                        a: self.canon_c4(ta),
                    }
                }
            }
            ClassId::C5 { a } => {
                let ta = modmul(k, a, n);
                let central = 3 * ta % n == 0;
                if k % self.p == 0 {
                    if central {
                        ClassId::C1
                    } else {
                        ClassId::C4 {
                            a: self.canon_c4(ta),
                        }
                    }
                } else if central {
                    ClassId::C2
                } else {
                    ClassId::C5 {
                        a: self.canon_c4(ta),
                    }
                }
            }
            ClassId::C6Prime => {
                if k % 3 == 0 {
                    ClassId::C1
                } else {
                    ClassId::C6Prime
                }
            }
            ClassId::C6 { a, b, c } => {
                let mut u = [modmul(k, a, n), modmul(k, b, n), modmul(k, c, n)];
                u.sort_unstable();
                if u[0] == u[1] && u[1] == u[2] {
                    return ClassId::C1;
                }
                if u[0] == u[1] || u[1] == u[2] {
                    let x = if u[0] == u[1] { u[0] } else { u[1] };
                    return ClassId::C4 {
                        a: self.canon_c4(x),
                    };
                }
                if self.d == 3 && u == [0, n / 3, 2 * n / 3] {
                    return ClassId::C6Prime;
                }
                let cu = self.canon_c6(u);
                ClassId::C6 {
                    a: cu[0],
                    b: cu[1],
                    c: cu[2],
                }
            }
            ClassId::C7 { e } => {
                let te = modmul(k, e, n2);
                if te % (self.q - 1) == 0 {
                    // Landed in mu_{q+1}: the triple degenerates to (x, x, -2x).
                    let x = te / (self.q - 1) % n;
                    if 3 * x % n == 0 {
                        ClassId::C1
                    } else {
                        ClassId::C4 {
                            a: self.canon_c4(x),
                        }
                    }
                } else {
                    ClassId::C7 {
                        e: self.canon_c7(te),
                    }
                }
            }
            ClassId::C8 { e } => {
                let te = modmul(k, e, t);
                if te % (t / self.d) == 0 {
                    ClassId::C1
                } else {
                    ClassId::C8 {
                        e: self.canon_c8(te),
                    }
                }
            }
        }
    }

    // Matrix constructions.

    /// Least trace-zero nonzero element of F_{q^2}.
    fn trace_zero(&self) -> u64 {
        let f = &self.fq2;
        (1..f.q)
            .find(|&b| f.add(f.pow(b, self.q as u128), b) == 0)
            .expect("the trace-zero hyperplane is nonzero")
    }

    /// Solve b + b^q = t.
    fn solve_trace(&self, t: u64) -> u64 {
        let f = &self.fq2;
        let theta = (1..f.q)
            .map(|c| (c, f.add(f.pow(c, self.q as u128), c)))
            .find(|&(_, tr)| tr != 0)
            .expect("trace is surjective");
        f.mul(t, f.mul(theta.0, f.inv(theta.1).unwrap()))
    }

    /// Unipotent u(a, b) of the antidiagonal form, conjugated into the
    /// identity form. Requires a^(q+1) + b + b^q = 0.
    fn unipotent(&self, a: u64, b: u64) -> Mat3 {
        let f = &self.fq2;
        debug_assert_eq!(
            f.add(
                f.pow(a, (self.q + 1) as u128),
                f.add(b, f.pow(b, self.q as u128))
            ),
            0
        );
        let u: Mat3 = [
            [1, a, b],
            [0, 1, f.neg(f.pow(a, self.q as u128))],
            [0, 0, 1],
        ];
        mat3::mul(f, &mat3::mul(f, &self.s_j, &u), &self.s_j_inv)
    }

    /// The identity-form SU(3,q) representative of a class.
    pub fn matrix(&self, id: ClassId) -> Mat3 {
        let f = &self.fq2;
        let n = self.n();
        match id {
            ClassId::C1 => mat3::identity(),
            ClassId::C2 => self.unipotent(0, self.trace_zero()),
            ClassId::C3 { branch } => {
                let a = f.from_log(branch);
                let b = self.solve_trace(f.neg(f.pow(a, (self.q + 1) as u128)));
                self.unipotent(a, b)
            }
            ClassId::C4 { a } => {
                let x = self.zeta(a);
                let y = self.zeta((2 * n - 2 * a % n) % n);
                [[x, 0, 0], [0, x, 0], [0, 0, y]]
            }
            ClassId::C5 { a } => {
                let x = self.zeta(a);
                let y = self.zeta((2 * n - 2 * a % n) % n);
                let z = f.mul(x, self.trace_zero());
                let m: Mat3 = [[x, 0, z], [0, y, 0], [0, 0, x]];
                mat3::mul(f, &mat3::mul(f, &self.s_j, &m), &self.s_j_inv)
            }
            ClassId::C6Prime => {
                let s = n / 3;
                [[1, 0, 0], [0, self.zeta(s), 0], [0, 0, self.zeta(2 * s)]]
            }
            ClassId::C6 { a, b, c } => [
                [self.zeta(a), 0, 0],
                [0, self.zeta(b), 0],
                [0, 0, self.zeta(c)],
            ],
            ClassId::C7 { e } => {
                let beta = f.from_log(e);
                let mid = f.pow(beta, (self.q - 1) as u128);
                let last = f.pow(f.inv(beta).unwrap(), self.q as u128);
                let m: Mat3 = [[beta, 0, 0], [0, mid, 0], [0, 0, last]];
                mat3::mul(f, &mat3::mul(f, &self.s_j, &m), &self.s_j_inv)
            }
            ClassId::C8 { e } => {
                let singer = self
                    .singer
                    .as_ref()
                    .expect("C8 classes require Singer data");
                let de = singer.ext.pow(singer.delta, e as u128);
                // Multiplication-by-de matrix in the basis {1, y, y^2}.
                let basis = [
                    singer.ext.one(),
                    singer.ext.y(),
                    singer.ext.mul(singer.ext.y(), singer.ext.y()),
                ];
                let mut m: Mat3 = [[0; 3]; 3];
                for (j, bj) in basis.iter().enumerate() {
                    let col = singer.ext.mul(de, *bj);
                    for i in 0..3 {
                        m[i][j] = col[i];
                    }
                }
                mat3::mul(f, &mat3::mul(f, &singer.s8, &m), &singer.s8_inv)
            }
        }
    }
}

/// One representative per PSU(3,q) class, counts checked against the
/// symbolic class table.
pub fn build_representatives(q: u64) -> Result<Vec<ClassRep>, Psu3RepsError> {
    let ctx = RepsContext::new(q)?;
    build_representatives_with(&ctx)
}

pub fn build_representatives_with(ctx: &RepsContext) -> Result<Vec<ClassRep>, Psu3RepsError> {
    let spec = psu3_data::class_spectrum(ctx.q)?;
    let ids = ctx.class_ids();
    let mut per_type = [0u64; 9];
    for id in &ids {
        per_type[id.class_type().index()] += 1;
    }
    for (i, &ty) in psu3_data::TYPES.iter().enumerate() {
        if per_type[i] != spec.types[i].count {
            return Err(Psu3RepsError::CountMismatch {
                q: ctx.q,
                ty,
                built: per_type[i],
                expected: spec.types[i].count,
            });
        }
    }
    Ok(ids
        .into_iter()
        .map(|id| ClassRep {
            id,
            matrix: ctx.matrix(id),
        })
        .collect())
}

/// Type-by-type power distribution from the class parametrization; for
/// k = 2, 3, 4 it is checked against the symbolic tables entry by entry.
pub fn power_distribution(q: u64, k: u64) -> Result<[[u64; 9]; 9], Psu3RepsError> {
    let ctx = RepsContext::new(q)?;
    power_distribution_with(&ctx, k)
}

pub fn power_distribution_with(ctx: &RepsContext, k: u64) -> Result<[[u64; 9]; 9], Psu3RepsError> {
    assert!(k >= 2, "powers start at k = 2");
    let mut out = [[0u64; 9]; 9];
    for id in ctx.class_ids() {
        let target = ctx.power_class(id, k);
        out[target.class_type().index()][id.class_type().index()] += 1;
    }
    if (2..=4).contains(&k) {
        let symbolic = psu3_data::symbolic_power_table(ctx.q, k as u32)?;
        for row in 0..9 {
            for col in 0..9 {
                if out[row][col] != symbolic[row][col] {
                    return Err(Psu3RepsError::SymbolicMismatch {
                        q: ctx.q,
                        k,
                        row,
                        col,
                        reps: out[row][col],
                        symbolic: symbolic[row][col],
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Per-class sequences of the types of g, g^2, ..., g^K.
pub fn power_type_sequences(
    q: u64,
    kmax: u64,
) -> Result<Vec<(ClassId, Vec<ClassType>)>, Psu3RepsError> {
    assert!(kmax <= 12, "sanity bound on the power range");
    let ctx = RepsContext::new(q)?;
    Ok(power_type_sequences_with(&ctx, kmax))
}

pub fn power_type_sequences_with(ctx: &RepsContext, kmax: u64) -> Vec<(ClassId, Vec<ClassType>)> {
    ctx.class_ids()
        .into_iter()
        .map(|id| {
            let seq = (1..=kmax)
                .map(|k| ctx.power_class(id, k).class_type())
                .collect();
            (id, seq)
        })
        .collect()
}

/// Classify an SU(3,q) matrix (identity Hermitian form) into its PSU class
/// type by eigenvalue structure: roots in mu_{q+1} with multiplicities,
/// squarefreeness of the minimal polynomial, and the cube-root pattern.
pub fn identify_type(ctx: &RepsContext, m: &Mat3) -> Result<ClassType, Psu3RepsError> {
    let f = &ctx.fq2;
    let q = ctx.q;
    if !mat3::is_su3(f, q, m) {
        return Err(Psu3RepsError::NotInGroup);
    }
    if mat3::is_scalar(m) {
        return Ok(ClassType::C1);
    }
    // Characteristic polynomial x^3 - T x^2 + S x - 1, constant term first.
    let tr = f.add(f.add(m[0][0], m[1][1]), m[2][2]);
    let minor =
        |r1: usize, r2: usize, c1: usize, c2: usize| {
            f.sub(f.mul(m[r1][c1], m[r2][c2]), f.mul(m[r1][c2], m[r2][c1]))
        };
    let s2 = f.add(
        f.add(minor(0, 1, 0, 1), minor(0, 2, 0, 2)),
        minor(1, 2, 1, 2),
    );
    let mut coeffs = vec![f.neg(1), s2, f.neg(tr), 1];
    let mut mu_roots: Vec<u64> = Vec::new();
    for r in f.subgroup(q + 1) {
        loop {
            if coeffs.len() == 1 {
                break;
            }
            let val = {
                let mut acc = 0u64;
                for &c in coeffs.iter().rev() {
                    acc = f.add(f.mul(acc, r), c);
                }
                acc
            };
            if val != 0 {
                break;
            }
            // Divide by (x - r).
            let mut quotient = vec![0u64; coeffs.len() - 1];
            let mut carry = 0u64;
            for i in (0..coeffs.len() - 1).rev() {
                carry = f.add(coeffs[i + 1], f.mul(carry, r));
                quotient[i] = carry;
            }
            coeffs = quotient;
            mu_roots.push(r);
        }
        if coeffs.len() == 1 {
            break;
        }
    }
    mu_roots.sort_unstable();
    match mu_roots.len() {
        3 => {
            let (a, b, c) = (mu_roots[0], mu_roots[1], mu_roots[2]);
            if a != b && b != c {
                let cubes_one = mu_roots.iter().all(|&x| f.pow(x, 3) == 1);
                if cubes_one && ctx.d == 3 {
                    Ok(ClassType::C6Prime)
                } else {
                    Ok(ClassType::C6)
                }
            } else if a == c {
                // Triple eigenvalue, non-scalar: unipotent times central.
                let shifted = sub_scalar(f, m, a);
                if mat_is_zero(&mat3::mul(f, &shifted, &shifted)) {
                    Ok(ClassType::C2)
                } else {
                    Ok(ClassType::C3)
                }
            } else {
                // Exactly two equal: semisimple iff (m - x)(m - y) = 0.
                let x = if a == b { a } else { b };
                let y = if a == b { c } else { a };
                let prod = mat3::mul(f, &sub_scalar(f, m, x), &sub_scalar(f, m, y));
                if mat_is_zero(&prod) {
                    Ok(ClassType::C4)
                } else {
                    Ok(ClassType::C5)
                }
            }
        }
        1 => Ok(ClassType::C7),
        0 => Ok(ClassType::C8),
        k => unreachable!("impossible mu-root count {k} for a unitary matrix"),
    }
}

fn sub_scalar(f: &FieldSpec, m: &Mat3, c: u64) -> Mat3 {
    let mut out = *m;
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = f.sub(row[i], c);
    }
    out
}

fn mat_is_zero(m: &Mat3) -> bool {
    m.iter().all(|row| row.iter().all(|&c| c == 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_spectrum() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13] {
            let reps = build_representatives(q).unwrap();
            let spec = psu3_data::class_spectrum(q).unwrap();
            assert_eq!(reps.len() as u64, spec.total_classes(), "q = {q}");
        }
        assert_eq!(build_representatives(3).unwrap().len(), 14);
    }

    #[test]
    fn matrices_live_in_su3_and_classify() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11] {
            let ctx = RepsContext::new(q).unwrap();
            for rep in build_representatives_with(&ctx).unwrap() {
                assert!(
                    mat3::is_su3(&ctx.fq2, q, &rep.matrix),
                    "q = {q}, id = {:?}",
                    rep.id
                );
                assert_eq!(
                    identify_type(&ctx, &rep.matrix).unwrap(),
                    rep.id.class_type(),
                    "q = {q}, id = {:?}",
                    rep.id
                );
            }
        }
    }

    #[test]
    fn matrix_powers_follow_predicted_classes() {
        // The range covers every congruence case of the symbolic tables,
        // including the C6 -> C6' transitions at q = 5, 11, 17.
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17] {
            let ctx = RepsContext::new(q).unwrap();
            for rep in build_representatives_with(&ctx).unwrap() {
                let mut mk = rep.matrix;
                for k in 2..=6u64 {
                    mk = mat3::mul(&ctx.fq2, &mk, &rep.matrix);
                    let predicted = ctx.power_class(rep.id, k).class_type();
                    let actual = identify_type(&ctx, &mk).unwrap();
                    assert_eq!(actual, predicted, "q = {q}, id = {:?}, k = {k}", rep.id);
                }
            }
        }
    }

    #[test]
    fn distributions_match_symbolic_small() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27] {
            for k in 2..=4u64 {
                power_distribution(q, k).unwrap_or_else(|e| panic!("q={q} k={k}: {e}"));
            }
        }
    }

    #[test]
    #[ignore = "full instantiation range; covered by the acceptance suite"]
    fn distributions_match_symbolic_full_range() {
        for q in psu3_data::prime_powers_upto(197) {
            let ctx = RepsContext::new(q).unwrap();
            for k in 2..=4u64 {
                power_distribution_with(&ctx, k).unwrap_or_else(|e| panic!("q={q} k={k}: {e}"));
            }
        }
    }

    #[test]
    fn central_scaling_fixes_type() {
        for q in [2u64, 5, 8] {
            let ctx = RepsContext::new(q).unwrap();
            let omega = ctx.zeta((q + 1) / 3);
            for rep in build_representatives_with(&ctx).unwrap() {
                let scaled = mat3::mul(&ctx.fq2, &mat3::scalar(omega), &rep.matrix);
                assert_eq!(
                    identify_type(&ctx, &scaled).unwrap(),
                    rep.id.class_type(),
                    "q = {q}, id = {:?}",
                    rep.id
                );
            }
        }
    }

    #[test]
    fn identity_power_sequence_is_constant() {
        let seqs = power_type_sequences(5, 6).unwrap();
        let (id, seq) = &seqs[0];
        assert_eq!(*id, ClassId::C1);
        assert!(seq.iter().all(|&t| t == ClassType::C1));
        // q = 3, C3 class: the cube lands in C1 (char 3 unipotent of order 3).
        let seqs3 = power_type_sequences(3, 3).unwrap();
        let c3 = seqs3
            .iter()
            .find(|(id, _)| id.class_type() == ClassType::C3)
            .unwrap();
        assert_eq!(c3.1[2], ClassType::C1);
        assert_eq!(c3.1[0], ClassType::C3);
    }

    #[test]
    fn giant_power_collapses_to_identity() {
        let q = 4u64;
        let ctx = RepsContext::new(q).unwrap();
        let order = psu3_data::psu3_order(q);
        for id in ctx.class_ids() {
            assert_eq!(ctx.power_class(id, order), ClassId::C1);
        }
    }
}
