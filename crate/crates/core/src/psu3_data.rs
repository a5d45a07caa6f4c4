//! Symbolic PSU(3,q) class data: the nine class types with centralizer
//! orders, class counts and chi_V values, and the congruence-case power
//! tables for g -> g^k (k = 2, 3, 4) as polynomial-in-q formulas.
//!
//! Everything instantiates through exact rational arithmetic, so a
//! transcription slip surfaces as a hard integrality or column-sum failure
//! rather than a silently wrong table.

use crate::exact::arith::prime_power;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Psu3DataError {
    #[error("q = {0} is not a prime power >= 2")]
    NotPrimePower(u64),
    #[error("table entry ({row},{col}) for k={k}, q={q} does not instantiate to a non-negative integer")]
    NonIntegerEntry { k: u32, q: u64, row: usize, col: usize },
    #[error("power table column {col} for k={k}, q={q} sums to {got}, expected class count {expected}")]
    ColumnSumMismatch { k: u32, q: u64, col: usize, got: u64, expected: u64 },
}

/// The nine Frame-Simpson class types of PSU(3,q). `C6Prime` is the special
/// diagonal class present exactly when q = 2 mod 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClassType {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6Prime,
    C6,
    C7,
    C8,
}

pub const TYPES: [ClassType; 9] = [
    ClassType::C1,
    ClassType::C2,
    ClassType::C3,
    ClassType::C4,
    ClassType::C5,
    ClassType::C6Prime,
    ClassType::C6,
    ClassType::C7,
    ClassType::C8,
];

impl ClassType {
    pub fn index(self) -> usize {
        TYPES.iter().position(|&t| t == self).unwrap()
    }

    pub fn label(self) -> &'static str {
        match self {
            ClassType::C1 => "C1",
            ClassType::C2 => "C2",
            ClassType::C3 => "C3",
            ClassType::C4 => "C4",
            ClassType::C5 => "C5",
            ClassType::C6Prime => "C6'",
            ClassType::C6 => "C6",
            ClassType::C7 => "C7",
            ClassType::C8 => "C8",
        }
    }
}

/// Instantiated data for one class type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TypeData {
    pub count: u64,
    pub centralizer: u64,
    pub chi_v: i64,
}

/// The fully numeric class-type table of PSU(3,q) at a concrete q.
#[derive(Debug, Clone, Serialize)]
pub struct InstantiatedSpectrum {
    pub q: u64,
    /// d = gcd(3, q+1), the Schur multiplier order.
    pub d: u64,
    pub group_order: u64,
    /// Indexed parallel to [`TYPES`]; absent types have count 0.
    pub types: Vec<TypeData>,
}

pub fn gcd3(q: u64) -> u64 {
    if (q + 1) % 3 == 0 {
        3
    } else {
        1
    }
}

/// |PSU(3,q)| = q^3 (q^2-1) (q^3+1) / d.
pub fn psu3_order(q: u64) -> u64 {
    let d = gcd3(q) as u128;
    let o = (q as u128).pow(3) * ((q as u128).pow(2) - 1) * ((q as u128).pow(3) + 1) / d;
    u64::try_from(o).expect("group order fits u64 at desk scale")
}

/// |SU(3,q)| = q^3 (q^2-1) (q^3+1).
pub fn su3_order(q: u64) -> u64 {
    psu3_order(q) * gcd3(q)
}

/// (a q^2 + b q + c) / den with an integrality check at evaluation.
#[derive(Debug, Clone, Copy)]
struct F2(i64, i64, i64, i64);

impl F2 {
    fn eval(self, q: u64) -> Option<u64> {
        let q = q as i128;
        let num = self.0 as i128 * q * q + self.1 as i128 * q + self.2 as i128;
        let den = self.3 as i128;
        if num % den != 0 || num / den < 0 {
            return None;
        }
        Some((num / den) as u64)
    }
}

const fn k(c: i64) -> F2 {
    F2(0, 0, c, 1)
}

/// chi_V values per type for the degree q^2 - q representation.
pub fn chi_v(q: u64, t: ClassType) -> i64 {
    let qi = q as i64;
    match t {
        ClassType::C1 => qi * (qi - 1),
        ClassType::C2 => -qi,
        ClassType::C3 => 0,
        ClassType::C4 => 1 - qi,
        ClassType::C5 => 1,
        ClassType::C6Prime => 2,
        ClassType::C6 => 2,
        ClassType::C7 => 0,
        ClassType::C8 => -1,
    }
}

/// The class-type table of PSU(3,q), fully instantiated.
pub fn class_spectrum(q: u64) -> Result<InstantiatedSpectrum, Psu3DataError> {
    if q < 2 || prime_power(q).is_none() {
        return Err(Psu3DataError::NotPrimePower(q));
    }
    let d = gcd3(q);
    let order = psu3_order(q);
    let t = q * q - q + 1;
    let counts: [u64; 9] = [
        1,
        1,
        d,
        (q + 1) / d - 1,
        (q + 1) / d - 1,
        if d == 3 { 1 } else { 0 },
        (t - d) / (6 * d),
        (t - d) / (2 * d) - if d == 1 { 1 } else { 0 },
        (t - d) / (3 * d),
    ];
    debug_assert_eq!((t - d) % (6 * d), 0, "C6 count divisibility, q = {q}");
    let centralizers: [u64; 9] = [
        order,
        q * q * q * (q + 1) / d,
        q * q,
        (q - 1) * q * (q + 1) * (q + 1) / d,
        q * (q + 1) / d,
        (q + 1) * (q + 1),
        (q + 1) * (q + 1) / d,
        (q * q - 1) / d,
        t / d,
    ];
    let types = TYPES
        .iter()
        .enumerate()
        .map(|(i, &ty)| TypeData {
            count: counts[i],
            centralizer: centralizers[i],
            chi_v: chi_v(q, ty),
        })
        .collect();
    Ok(InstantiatedSpectrum {
        q,
        d,
        group_order: order,
        types,
    })
}

impl InstantiatedSpectrum {
    pub fn total_classes(&self) -> u64 {
        self.types.iter().map(|t| t.count).sum()
    }

    /// Class equation: sum of count * |G| / |centralizer| equals |G|.
    pub fn class_equation_holds(&self) -> bool {
        let total: u128 = self
            .types
            .iter()
            .filter(|t| t.count > 0)
            .map(|t| t.count as u128 * (self.group_order as u128 / t.centralizer as u128))
            .sum();
        self.types
            .iter()
            .all(|t| t.count == 0 || self.group_order % t.centralizer == 0)
            && total == self.group_order as u128
    }

    /// <chi_V, chi_V> = 1 (chi_V is real by self-duality).
    pub fn chi_norm_is_one(&self) -> bool {
        use crate::exact::{rat_int, Rational};
        use num::Zero;
        let mut acc = Rational::zero();
        for t in self.types.iter().filter(|t| t.count > 0) {
            acc += rat_int(t.count as i64 * t.chi_v * t.chi_v) / rat_int(t.centralizer as i64);
        }
        acc == rat_int(1)
    }

    /// <chi_V, 1> = 0: no trivial constituent.
    pub fn chi_mean_is_zero(&self) -> bool {
        use crate::exact::{rat_int, Rational};
        use num::Zero;
        let mut acc = Rational::zero();
        for t in self.types.iter().filter(|t| t.count > 0) {
            acc += rat_int(t.count as i64 * t.chi_v) / rat_int(t.centralizer as i64);
        }
        acc.is_zero()
    }

    /// Plain-text rendering in the layout of the class-type table.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "PSU(3,{})  |G| = {}  d = {}\n",
            self.q, self.group_order, self.d
        ));
        out.push_str("type  count  |centralizer|  chi_V\n");
        for (i, t) in self.types.iter().enumerate() {
            if t.count == 0 {
                continue;
            }
            out.push_str(&format!(
                "{:<5} {:>5}  {:>13}  {:>5}\n",
                TYPES[i].label(),
                t.count,
                t.centralizer,
                t.chi_v
            ));
        }
        out
    }
}

// The power tables: sparse (row, col, formula) entries per congruence case.
// Row is the type of g^k, column the type of g. Omitted entries are zero.

type Entries = &'static [(usize, usize, F2)];

// k = 2, q = 1, 3 mod 6 (d = 1).
const K2_A: Entries = &[
    (0, 0, k(1)),
    (0, 3, k(1)),
    (1, 1, k(1)),
    (1, 4, k(1)),
    (2, 2, k(1)),
    (3, 3, F2(0, 1, -1, 1)),
    (3, 6, F2(0, 1, -1, 2)),
    (3, 7, F2(0, 1, 1, 2)),
    (4, 4, F2(0, 1, -1, 1)),
    (6, 6, F2(1, -4, 3, 6)),
    (7, 7, F2(1, -2, -3, 2)),
    (8, 8, F2(1, -1, 0, 3)),
];

// k = 2, q = 2 mod 6 (d = 3).
const K2_B: Entries = &[
    (0, 0, k(1)),
    (0, 1, k(1)),
    (1, 2, k(3)),
    (3, 3, F2(0, 1, -2, 3)),
    (3, 4, F2(0, 1, -2, 3)),
    (5, 5, k(1)),
    (6, 6, F2(1, -1, -2, 18)),
    (7, 7, F2(1, -1, -2, 6)),
    (8, 8, F2(1, -1, -2, 9)),
];

// k = 2, q = 4 mod 6 (d = 1). Squaring is a bijection on the order q^2-1
// torus for even q, so the whole C7 column stays in type C7.
const K2_C: Entries = &[
    (0, 0, k(1)),
    (0, 1, k(1)),
    (1, 2, k(1)),
    (3, 3, F2(0, 1, 0, 1)),
    (3, 4, F2(0, 1, 0, 1)),
    (6, 6, F2(1, -1, 0, 6)),
    (7, 7, F2(1, -1, -2, 2)),
    (8, 8, F2(1, -1, 0, 3)),
];

// k = 2, q = 5 mod 6 (d = 3). One shift-orbit of eigenvalue triples
// squares onto the cube-root triple, so a single C6 class lands in C6'.
const K2_D: Entries = &[
    (0, 0, k(1)),
    (0, 3, k(1)),
    (1, 1, k(1)),
    (1, 4, k(1)),
    (2, 2, k(3)),
    (3, 3, F2(0, 1, -5, 3)),
    (3, 6, F2(0, 1, -5, 6)),
    (3, 7, F2(0, 1, 1, 6)),
    (4, 4, F2(0, 1, -5, 3)),
    (5, 5, k(1)),
    (5, 6, k(1)),
    (6, 6, F2(1, -4, -5, 18)),
    (7, 7, F2(1, -2, -3, 6)),
    (8, 8, F2(1, -1, -2, 9)),
];

// k = 3, q = 0 mod 3 (d = 1). Cubing is a bijection on the order q^2-1
// torus when 3 | q, so the whole C7 column stays in type C7.
const K3_E: Entries = &[
    (0, 0, k(1)),
    (0, 1, k(1)),
    (0, 2, k(1)),
    (3, 3, F2(0, 1, 0, 1)),
    (3, 4, F2(0, 1, 0, 1)),
    (6, 6, F2(1, -1, 0, 6)),
    (7, 7, F2(1, -1, -2, 2)),
    (8, 8, F2(1, -1, 0, 3)),
];

// k = 3, q = 1 mod 3 (d = 1).
const K3_F: Entries = &[
    (0, 0, k(1)),
    (0, 7, k(1)),
    (1, 1, k(1)),
    (2, 2, k(1)),
    (3, 3, F2(0, 1, 0, 1)),
    (3, 7, F2(0, 1, 0, 1)),
    (4, 4, F2(0, 1, 0, 1)),
    (6, 6, F2(1, -1, 0, 6)),
    (7, 7, F2(1, -3, -4, 2)),
    (8, 8, F2(1, -1, 0, 3)),
];

// k = 3, q = 2, 5 mod 9 (d = 3).
const K3_G: Entries = &[
    (0, 0, k(1)),
    (0, 5, k(1)),
    (1, 1, k(1)),
    (2, 2, k(3)),
    (3, 3, F2(0, 1, -2, 3)),
    (3, 6, F2(0, 1, -2, 3)),
    (4, 4, F2(0, 1, -2, 3)),
    (6, 6, F2(1, -7, 10, 18)),
    (7, 7, F2(1, -1, -2, 6)),
    (8, 8, F2(1, -1, -2, 9)),
];

// k = 3, q = 8 mod 9 (d = 3). When 9 | q+1, three C6 classes cube onto the
// cube-root triple and land in C6'.
const K3_H: Entries = &[
    (0, 0, k(1)),
    (0, 3, k(2)),
    (0, 5, k(1)),
    (1, 1, k(1)),
    (1, 4, k(2)),
    (2, 2, k(3)),
    (3, 3, F2(0, 1, -8, 3)),
    (3, 6, F2(0, 1, -8, 3)),
    (4, 4, F2(0, 1, -8, 3)),
    (5, 6, k(3)),
    (6, 6, F2(1, -7, -8, 18)),
    (7, 7, F2(1, -1, -2, 6)),
    (8, 8, F2(1, -1, -2, 9)),
];

// k = 4, q = 1, 9 mod 12 (d = 1).
const K4_I: Entries = &[
    (0, 0, k(1)),
    (0, 3, k(1)),
    (0, 7, k(1)),
    (1, 1, k(1)),
    (1, 4, k(1)),
    (2, 2, k(1)),
    (3, 3, F2(0, 1, -1, 1)),
    (3, 6, F2(0, 1, -1, 2)),
    (3, 7, F2(0, 3, 1, 2)),
    (4, 4, F2(0, 1, -1, 1)),
    (6, 6, F2(1, -4, 3, 6)),
    (7, 7, F2(1, -4, -5, 2)),
    (8, 8, F2(1, -1, 0, 3)),
];

// k = 4, q = 2 mod 6 (d = 3).
const K4_J: Entries = &[
    (0, 0, k(1)),
    (0, 1, k(1)),
    (0, 2, k(3)),
    (3, 3, F2(0, 1, -2, 3)),
    (3, 4, F2(0, 1, -2, 3)),
    (5, 5, k(1)),
    (6, 6, F2(1, -1, -2, 18)),
    (7, 7, F2(1, -1, -2, 6)),
    (8, 8, F2(1, -1, -2, 9)),
];

// k = 4, q = 3, 7 mod 12 (d = 1).
const K4_K: Entries = &[
    (0, 0, k(1)),
    (0, 3, k(3)),
    (0, 6, k(1)),
    (1, 1, k(1)),
    (1, 4, k(3)),
    (2, 2, k(1)),
    (3, 3, F2(0, 1, -3, 1)),
    (3, 6, F2(0, 3, -9, 2)),
    (3, 7, F2(0, 1, 1, 2)),
    (4, 4, F2(0, 1, -3, 1)),
    (6, 6, F2(1, -10, 21, 6)),
    (7, 7, F2(1, -2, -3, 2)),
    (8, 8, F2(1, -1, 0, 3)),
];

// k = 4, q = 4 mod 6 (d = 1).
const K4_L: Entries = &[
    (0, 0, k(1)),
    (0, 1, k(1)),
    (0, 2, k(1)),
    (3, 3, F2(0, 1, 0, 1)),
    (3, 4, F2(0, 1, 0, 1)),
    (6, 6, F2(1, -1, 0, 6)),
    (7, 7, F2(1, -1, -2, 2)),
    (8, 8, F2(1, -1, 0, 3)),
];

// k = 4, q = 5 mod 12 (d = 3). As in K2_D, one C6 class lands in C6'.
const K4_M: Entries = &[
    (0, 0, k(1)),
    (0, 3, k(1)),
    (0, 7, k(1)),
    (1, 1, k(1)),
    (1, 4, k(1)),
    (2, 2, k(3)),
    (3, 3, F2(0, 1, -5, 3)),
    (3, 6, F2(0, 1, -5, 6)),
    (3, 7, F2(0, 1, -1, 2)),
    (4, 4, F2(0, 1, -5, 3)),
    (5, 5, k(1)),
    (5, 6, k(1)),
    (6, 6, F2(1, -4, -5, 18)),
    (7, 7, F2(1, -4, -5, 6)),
    (8, 8, F2(1, -1, -2, 9)),
];

// k = 4, q = 11 mod 12 (d = 3). When 12 | q+1, five C6 classes take fourth
// powers onto the cube-root triple and land in C6'.
const K4_N: Entries = &[
    (0, 0, k(1)),
    (0, 3, k(3)),
    (0, 6, k(1)),
    (1, 1, k(1)),
    (1, 4, k(3)),
    (2, 2, k(3)),
    (3, 3, F2(0, 1, -11, 3)),
    (3, 6, F2(0, 1, -11, 2)),
    (3, 7, F2(0, 1, 1, 6)),
    (4, 4, F2(0, 1, -11, 3)),
    (5, 5, k(1)),
    (5, 6, k(5)),
    (6, 6, F2(1, -10, -11, 18)),
    (7, 7, F2(1, -2, -3, 6)),
    (8, 8, F2(1, -1, -2, 9)),
];

/// Congruence-case dispatch for the power tables.
fn table_case(q: u64, kk: u32) -> Entries {
    match kk {
        2 => match q % 6 {
            1 | 3 => K2_A,
            2 => K2_B,
            4 => K2_C,
            5 => K2_D,
            _ => unreachable!("prime powers are nonzero mod 6"),
        },
        3 => match q % 3 {
            0 => K3_E,
            1 => K3_F,
            2 => {
                if q % 9 == 8 {
                    K3_H
                } else {
                    K3_G
                }
            }
            _ => unreachable!(),
        },
        4 => match q % 12 {
            1 | 9 => K4_I,
            2 | 8 => K4_J,
            3 | 7 => K4_K,
            4 | 10 => K4_L,
            5 => K4_M,
            11 => K4_N,
            _ => unreachable!("prime powers avoid the remaining residues"),
        },
        _ => panic!("symbolic tables exist for k = 2, 3, 4"),
    }
}

/// The instantiated type-by-type power distribution for g -> g^k.
/// `result[row][col]` counts classes of type `col` whose k-th power lands in
/// type `row`. Column sums are verified against the class counts before the
/// table is returned; a mismatch is a transcription bug.
pub fn symbolic_power_table(q: u64, kk: u32) -> Result<[[u64; 9]; 9], Psu3DataError> {
    let spec = class_spectrum(q)?;
    let mut out = [[0u64; 9]; 9];
    for &(row, col, f) in table_case(q, kk) {
        let v = f
            .eval(q)
            .ok_or(Psu3DataError::NonIntegerEntry { k: kk, q, row, col })?;
        out[row][col] = v;
    }
    for col in 0..9 {
        let got: u64 = (0..9).map(|row| out[row][col]).sum();
        let expected = spec.types[col].count;
        if got != expected {
            return Err(Psu3DataError::ColumnSumMismatch {
                k: kk,
                q,
                col,
                got,
                expected,
            });
        }
    }
    Ok(out)
}

/// The multiset of chi_V values taken by k-th powers of the classes of the
/// given type, weighted by how many classes map there.
pub fn chi_on_power_types(
    spectrum: &InstantiatedSpectrum,
    source: ClassType,
    kk: u32,
) -> Result<Vec<(i64, u64)>, Psu3DataError> {
    let table = symbolic_power_table(spectrum.q, kk)?;
    let col = source.index();
    Ok((0..9)
        .filter(|&row| table[row][col] > 0)
        .map(|row| (chi_v(spectrum.q, TYPES[row]), table[row][col]))
        .collect())
}

/// Prime powers in [2, max], the instantiation range used by verification.
pub fn prime_powers_upto(max: u64) -> Vec<u64> {
    (2..=max).filter(|&q| prime_power(q).is_some()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_q3() {
        let s = class_spectrum(3).unwrap();
        assert_eq!(s.d, 1);
        assert_eq!(s.group_order, 6048);
        let counts: Vec<u64> = s.types.iter().map(|t| t.count).collect();
        assert_eq!(counts, vec![1, 1, 1, 3, 3, 0, 1, 2, 2]);
        let cents: Vec<u64> = s.types.iter().map(|t| t.centralizer).collect();
        assert_eq!(cents, vec![6048, 108, 9, 96, 12, 16, 16, 8, 7]);
        assert_eq!(s.total_classes(), 14);
        assert!(s.class_equation_holds());
    }

    #[test]
    fn spectrum_q5_and_chi() {
        let s = class_spectrum(5).unwrap();
        assert_eq!(s.d, 3);
        let c2 = &s.types[ClassType::C2.index()];
        assert_eq!(c2.chi_v, -5);
        let c1 = &s.types[ClassType::C1.index()];
        assert_eq!(c1.chi_v, 20);
        // C6' present iff q = 2 mod 3.
        assert_eq!(s.types[ClassType::C6Prime.index()].count, 1);
        assert_eq!(class_spectrum(4).unwrap().types[ClassType::C6Prime.index()].count, 0);
        assert!(class_spectrum(6).is_err());
    }

    #[test]
    fn chi_norm_and_mean_sweep() {
        for q in prime_powers_upto(60) {
            let s = class_spectrum(q).unwrap();
            assert!(s.class_equation_holds(), "class equation, q = {q}");
            assert!(s.chi_norm_is_one(), "norm, q = {q}");
            assert!(s.chi_mean_is_zero(), "mean, q = {q}");
        }
    }

    #[test]
    fn power_table_examples() {
        // q = 7, k = 2, column C4 (7 classes): 1 to C1 and q - 1 = 6 stay C4.
        let t = symbolic_power_table(7, 2).unwrap();
        let c4 = ClassType::C4.index();
        assert_eq!(t[ClassType::C1.index()][c4], 1);
        assert_eq!(t[c4][c4], 6);
        // q = 7, k = 2, column C7 (20 classes): (q+1)/2 = 4 to C4, rest stay.
        let c7 = ClassType::C7.index();
        assert_eq!(t[c4][c7], 4);
        assert_eq!(t[c7][c7], 16);
        // q = 3, k = 2, column C4 (3 classes): {C1: 1, C4: 2}.
        let t3 = symbolic_power_table(3, 2).unwrap();
        assert_eq!(t3[ClassType::C1.index()][c4], 1);
        assert_eq!(t3[c4][c4], 2);
        // q = 2, k = 2: all three C3 classes square into C2.
        let t2 = symbolic_power_table(2, 2).unwrap();
        assert_eq!(t2[ClassType::C2.index()][ClassType::C3.index()], 3);
        // q = 8, k = 3: C1 and C6' columns both land on C1.
        let t8 = symbolic_power_table(8, 3).unwrap();
        assert_eq!(t8[ClassType::C1.index()][ClassType::C1.index()], 1);
        assert_eq!(t8[ClassType::C1.index()][ClassType::C6Prime.index()], 1);
    }

    #[test]
    fn column_sums_all_small_q() {
        for q in prime_powers_upto(60) {
            for kk in [2, 3, 4] {
                symbolic_power_table(q, kk).unwrap_or_else(|e| panic!("q={q} k={kk}: {e}"));
            }
        }
    }

    #[test]
    fn chi_on_powers() {
        let s = class_spectrum(7).unwrap();
        // C1 column: powers stay the identity type.
        assert_eq!(
            chi_on_power_types(&s, ClassType::C1, 2).unwrap(),
            vec![(42, 1)]
        );
        // q = 1 mod 6, C4 under squaring: one class lands at chi(C1),
        // q - 1 at chi(C4) = 1 - q.
        assert_eq!(
            chi_on_power_types(&s, ClassType::C4, 2).unwrap(),
            vec![(42, 1), (-6, 6)]
        );
        // q = 8, C3 under squaring: all contribute chi(C2) = -8.
        let s8 = class_spectrum(8).unwrap();
        assert_eq!(
            chi_on_power_types(&s8, ClassType::C3, 2).unwrap(),
            vec![(-8, 3)]
        );
    }
}
