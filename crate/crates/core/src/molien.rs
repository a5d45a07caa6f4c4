//! Invariant dimensions via character theory: the symmetric-power character
//! recursion, the explicit Sym^3/Sym^4 expansions used as a cross-check, the
//! Molien prefix of a representation from class data, and the closed form
//! for the first nontrivial PSU(3,q) coefficient.

use crate::exact::{self, CycNumber, ExactError, Rational};
use num::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MolienError {
    /// An invariant dimension failed to come out a non-negative integer;
    /// this signals corrupted class data and is a load-bearing check.
    #[error("invariant dimension at degree {degree} is not a non-negative integer: {value}")]
    NonIntegerResult { degree: usize, value: String },
    /// A per-field partial sum failed to be rational.
    #[error("class-function sum is not rational at degree {degree}")]
    IrrationalSum { degree: usize },
}

/// Per-class input to the Molien computation.
///
/// `chi_powers[i]` is the character value at g^(i+1); `multiplicity` counts
/// how many classes share this data (type-aggregated input), and
/// `centralizer` is the centralizer order of each.
#[derive(Debug, Clone)]
pub struct ClassTerm {
    pub multiplicity: u64,
    pub centralizer: u64,
    pub chi_powers: Vec<CycNumber>,
}

/// Class data for one representation, sufficient for degrees up to
/// `chi_powers.len()`.
#[derive(Debug, Clone, Default)]
pub struct ClassFunctionInput {
    pub terms: Vec<ClassTerm>,
}

/// Leading Molien coefficients m_0..m_K.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct MolienPrefix {
    pub coefficients: Vec<u64>,
}

impl MolienPrefix {
    pub fn coefficient(&self, k: usize) -> u64 {
        self.coefficients[k]
    }
    pub fn max_degree(&self) -> usize {
        self.coefficients.len() - 1
    }
}

/// chi_{Sym^k W}(g) from the power values chi(g), chi(g^2), ..., chi(g^k),
/// via the recursion chi_{Sym^k}(g) = (1/k) sum_i chi_{Sym^(k-i)}(g) chi(g^i).
pub fn sym_power_char(values: &[CycNumber], k: usize) -> CycNumber {
    sym_power_prefix(values, k).pop().unwrap()
}

/// All of chi_{Sym^j W}(g) for j = 0..=k.
pub fn sym_power_prefix(values: &[CycNumber], k: usize) -> Vec<CycNumber> {
    assert!(values.len() >= k, "need chi(g^i) for i <= k");
    let mut s: Vec<CycNumber> = Vec::with_capacity(k + 1);
    s.push(CycNumber::one());
    for j in 1..=k {
        let mut acc = CycNumber::zero();
        for i in 1..=j {
            acc = acc.add(&s[j - i].mul(&values[i - 1]));
        }
        s.push(acc.scale(&exact::rat(1, j as i64)));
    }
    s
}

/// The explicit degree 3 and 4 expansions; equal to the recursion on all
/// inputs and kept as an independent route.
pub fn sym_power_char_direct(values: &[CycNumber], k: usize) -> CycNumber {
    let c1 = &values[0];
    match k {
        3 => {
            let c2 = &values[1];
            let c3 = &values[2];
            // (chi^3 + 3 chi(g) chi(g^2) + 2 chi(g^3)) / 6
            c1.pow(3)
                .add(&c1.mul(c2).scale(&exact::rat_int(3)))
                .add(&c3.scale(&exact::rat_int(2)))
                .scale(&exact::rat(1, 6))
        }
        4 => {
            let c2 = &values[1];
            let c3 = &values[2];
            let c4 = &values[3];
            // (chi^4 + 6 chi^2 chi(g^2) + 3 chi(g^2)^2 + 8 chi chi(g^3) + 6 chi(g^4)) / 24
            c1.pow(4)
                .add(&c1.pow(2).mul(c2).scale(&exact::rat_int(6)))
                .add(&c2.pow(2).scale(&exact::rat_int(3)))
                .add(&c1.mul(c3).scale(&exact::rat_int(8)))
                .add(&c4.scale(&exact::rat_int(6)))
                .scale(&exact::rat(1, 24))
        }
        _ => panic!("direct formulas exist for k = 3, 4 only"),
    }
}

/// Accumulates cyclotomic contributions and certifies the total rational.
///
/// Contributions are grouped into components whose conductors share a factor
/// larger than 2; distinct components lie in cyclotomic fields meeting only
/// in Q, so the total is rational iff every component sum is, and equals the
/// sum of the component values. This keeps mixed-conductor sums exact
/// without ever reducing at a huge composite conductor.
#[derive(Default)]
pub struct RationalAccumulator {
    components: Vec<(u64, CycNumber)>,
    rational: Rational,
}

impl RationalAccumulator {
    pub fn new() -> Self {
        RationalAccumulator {
            components: Vec::new(),
            rational: Rational::zero(),
        }
    }

    pub fn push(&mut self, v: CycNumber) {
        let n = v.conductor();
        if n <= 2 {
            // Lives in Q already.
            match v.to_rational() {
                Ok(r) => {
                    self.rational += r;
                    return;
                }
                Err(_) => unreachable!("conductor <= 2 is rational"),
            }
        }
        let mut merged = v;
        let mut lcm_n = n;
        let mut keep = Vec::with_capacity(self.components.len());
        for (cn, cv) in self.components.drain(..) {
            if exact::arith::gcd(cn, lcm_n) > 2 {
                lcm_n = exact::arith::lcm(cn, lcm_n);
                merged = merged.add(&cv);
            } else {
                keep.push((cn, cv));
            }
        }
        keep.push((lcm_n, merged));
        self.components = keep;
    }

    pub fn finish(self) -> Result<Rational, ExactError> {
        let mut total = self.rational;
        for (_, v) in self.components {
            total += v.to_rational()?;
        }
        Ok(total)
    }
}

/// dim (Sym^k W^*)^G as a non-negative integer; conjugation is applied to
/// the inputs per chi_{W^*}(g) = conj(chi_W(g)).
pub fn invariant_dimension(input: &ClassFunctionInput, k: usize) -> Result<u64, MolienError> {
    Ok(molien_prefix(input, k)?.coefficient(k))
}

/// Molien coefficients m_0..m_K of W^* invariants from class data for W.
pub fn molien_prefix(input: &ClassFunctionInput, kmax: usize) -> Result<MolienPrefix, MolienError> {
    let mut acc: Vec<RationalAccumulator> = (0..=kmax).map(|_| RationalAccumulator::new()).collect();
    for term in &input.terms {
        let dual: Vec<CycNumber> = term
            .chi_powers
            .iter()
            .take(kmax)
            .map(|v| v.conj())
            .collect();
        let sym = sym_power_prefix(&dual, kmax);
        let weight = exact::rat(term.multiplicity as i64, 1)
            / exact::Rational::from_integer(num::BigInt::from(term.centralizer));
        for (k, s) in sym.into_iter().enumerate() {
            acc[k].push(s.scale(&weight));
        }
    }
    let mut coefficients = Vec::with_capacity(kmax + 1);
    for (k, a) in acc.into_iter().enumerate() {
        let value = a
            .finish()
            .map_err(|_| MolienError::IrrationalSum { degree: k })?;
        if !value.is_integer() || value.is_negative() {
            return Err(MolienError::NonIntegerResult {
                degree: k,
                value: value.to_string(),
            });
        }
        coefficients.push(exact::rat_to_u64(&value).ok_or(MolienError::NonIntegerResult {
            degree: k,
            value: value.to_string(),
        })?);
    }
    Ok(MolienPrefix { coefficients })
}

/// The five-case closed form for m_4 of the degree q^2-q representation of
/// PSU(3,q): (q-1)/6, (q+10)/6, (q-3)/6, (q+2)/6, (q+7)/6 as q = 1..5 mod 6.
pub fn closed_form_m4(q: u64) -> u64 {
    let (num, label) = match q % 6 {
        1 => (q - 1, "q = 1 mod 6"),
        2 => (q + 10, "q = 2 mod 6"),
        3 => (q - 3, "q = 3 mod 6"),
        4 => (q + 2, "q = 4 mod 6"),
        5 => (q + 7, "q = 5 mod 6"),
        _ => unreachable!("prime powers are nonzero mod 6"),
    };
    assert_eq!(num % 6, 0, "closed form must be integral ({label}, q={q})");
    num / 6
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    fn cyc(i: i64) -> CycNumber {
        CycNumber::from_int(i)
    }

    fn binom(n: u64, k: u64) -> u64 {
        let mut num = 1u128;
        let mut den = 1u128;
        for i in 0..k {
            num *= (n - i) as u128;
            den *= (i + 1) as u128;
        }
        (num / den) as u64
    }

    #[test]
    fn sym_small_cases() {
        // Sym^1 = W.
        let a = CycNumber::root_of_unity(5, 1).add(&cyc(2));
        assert_eq!(sym_power_char(&[a.clone()], 1), a);
        // k = 2: (a^2 + b) / 2.
        let b = CycNumber::root_of_unity(3, 1);
        let expected = a.pow(2).add(&b).scale(&crate::exact::rat(1, 2));
        assert_eq!(sym_power_char(&[a.clone(), b.clone()], 2), expected);
        // Fixed vector: all chi values 1 gives 1 in every degree.
        let ones = vec![cyc(1); 6];
        for k in 0..=6 {
            assert_eq!(sym_power_char(&ones, k), cyc(1));
        }
    }

    #[test]
    fn sym_at_identity_is_binomial() {
        // chi(1) = n in every power; Sym^k dimension is C(n+k-1, k).
        for n in [2u64, 3, 6, 10] {
            let vals = vec![cyc(n as i64); 4];
            assert_eq!(
                sym_power_char(&vals, 4).to_rational().unwrap(),
                rat_int(binom(n + 3, 4) as i64)
            );
            assert_eq!(
                sym_power_char_direct(&vals, 3).to_rational().unwrap(),
                rat_int(binom(n + 2, 3) as i64)
            );
        }
    }

    #[test]
    fn recursion_matches_direct_formulas() {
        // Deterministic pseudo-random cyclotomic inputs.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..1000 {
            let vals: Vec<CycNumber> = (0..4)
                .map(|_| {
                    let n = [1u64, 3, 4, 5, 8, 12][(next() % 6) as usize];
                    let e = next() % n.max(1);
                    let c = (next() % 7) as i64 - 3;
                    CycNumber::root_of_unity(n, e)
                        .scale(&rat_int(c))
                        .add(&cyc((next() % 5) as i64 - 2))
                })
                .collect();
            assert_eq!(sym_power_char(&vals, 3), sym_power_char_direct(&vals, 3));
            assert_eq!(sym_power_char(&vals, 4), sym_power_char_direct(&vals, 4));
        }
    }

    #[test]
    fn closed_form_cases() {
        assert_eq!(closed_form_m4(7), 1);
        assert_eq!(closed_form_m4(8), 3);
        assert_eq!(closed_form_m4(16), 3);
        assert_eq!(closed_form_m4(3), 0);
        assert_eq!(closed_form_m4(5), 2);
    }

    #[test]
    fn cyclic_group_molien() {
        // Z/3 acting on C by a primitive cube root: invariants in degrees 0, 3.
        // Classes: 1, g, g^2, centralizers all 3.
        let z = CycNumber::root_of_unity(3, 1);
        let input = ClassFunctionInput {
            terms: vec![
                ClassTerm {
                    multiplicity: 1,
                    centralizer: 3,
                    chi_powers: vec![cyc(1); 4],
                },
                ClassTerm {
                    multiplicity: 1,
                    centralizer: 3,
                    chi_powers: vec![z.clone(), z.pow(2), cyc(1), z.clone()],
                },
                ClassTerm {
                    multiplicity: 1,
                    centralizer: 3,
                    chi_powers: vec![z.pow(2), z.clone(), cyc(1), z.pow(2)],
                },
            ],
        };
        let pre = molien_prefix(&input, 4).unwrap();
        assert_eq!(pre.coefficients, vec![1, 0, 0, 1, 0]);
    }
}
