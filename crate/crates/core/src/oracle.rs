//! Brute-force ground truth: SL(2,q) and SU(3,q) as explicit matrix groups,
//! enumerated by closure from generators, with exact conjugacy classes,
//! centralizer orders, center quotients, and power maps.
//!
//! Everything the symbolic modules claim is tested against this module at
//! small q. Enumeration is deterministic: breadth-first closure in a fixed
//! generator order, canonical class representatives are key-minimal, and the
//! matrix key is the row-major concatenation of discrete logs (sentinel 0
//! for the zero entry).

use crate::ffield::mat3::{self, Mat3};
use crate::ffield::{make_field, FieldSpec};
use crate::psu3_reps;
use std::collections::HashMap;
use std::sync::Arc;
use thiserror::Error;

pub const DEFAULT_MAX_ORDER: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("group order {order} exceeds the enumeration budget {cap}")]
    SizeExceeded { order: u64, cap: u64 },
    #[error("generators produced {got} elements, expected {expected}")]
    ClosureMismatch { got: u64, expected: u64 },
    #[error("q = {0} is not a prime power")]
    BadQ(u64),
}

/// Minimal group interface for the closure and class machinery.
pub trait GroupOps {
    type El: Copy + PartialEq;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn inv(&self, a: &Self::El) -> Self::El;
    fn identity(&self) -> Self::El;
    fn key(&self, a: &Self::El) -> u64;
}

pub type Mat2 = [[u64; 2]; 2];

/// SL(2,q) over the table field F_q.
pub struct Sl2Ops {
    pub fq: Arc<FieldSpec>,
    key_width: u32,
}

impl Sl2Ops {
    pub fn new(fq: Arc<FieldSpec>) -> Self {
        let key_width = 64 - (fq.q).leading_zeros();
        Sl2Ops { fq, key_width }
    }
}

impl GroupOps for Sl2Ops {
    type El = Mat2;

    fn mul(&self, a: &Mat2, b: &Mat2) -> Mat2 {
        let f = &self.fq;
        let mut out = [[0u64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = f.add(f.mul(a[i][0], b[0][j]), f.mul(a[i][1], b[1][j]));
            }
        }
        out
    }

    fn inv(&self, a: &Mat2) -> Mat2 {
        // det = 1 throughout SL(2,q).
        let f = &self.fq;
        [[a[1][1], f.neg(a[0][1])], [f.neg(a[1][0]), a[0][0]]]
    }

    fn identity(&self) -> Mat2 {
        [[1, 0], [0, 1]]
    }

    fn key(&self, a: &Mat2) -> u64 {
        let f = &self.fq;
        let mut out = 0u64;
        for row in a {
            for &e in row {
                let v = if e == 0 {
                    0
                } else {
                    f.discrete_log(e).unwrap() + 1
                };
                out = (out << self.key_width) | v;
            }
        }
        out
    }
}

/// SU(3,q) (identity Hermitian form) over F_{q^2}.
pub struct Su3Ops {
    pub fq2: Arc<FieldSpec>,
    pub q: u64,
    key_width: u32,
}

impl Su3Ops {
    pub fn new(fq2: Arc<FieldSpec>, q: u64) -> Self {
        let key_width = 64 - (fq2.q).leading_zeros();
        assert!(9 * key_width <= 64, "matrix key must fit in u64");
        Su3Ops { fq2, q, key_width }
    }
}

impl GroupOps for Su3Ops {
    type El = Mat3;

    fn mul(&self, a: &Mat3, b: &Mat3) -> Mat3 {
        mat3::mul(&self.fq2, a, b)
    }

    fn inv(&self, a: &Mat3) -> Mat3 {
        // g^-1 = conj_t(g) on the unitary group.
        mat3::conj_t(&self.fq2, self.q, a)
    }

    fn identity(&self) -> Mat3 {
        mat3::identity()
    }

    fn key(&self, a: &Mat3) -> u64 {
        let f = &self.fq2;
        let mut out = 0u64;
        for row in a {
            for &e in row {
                let v = if e == 0 {
                    0
                } else {
                    f.discrete_log(e).unwrap() + 1
                };
                out = (out << self.key_width) | v;
            }
        }
        out
    }
}

/// The quotient of a matrix group by a (small) central subgroup; elements
/// are key-minimal coset representatives.
pub struct QuotientOps<G: GroupOps> {
    pub base: G,
    pub center: Vec<G::El>,
}

impl<G: GroupOps> QuotientOps<G> {
    pub fn canonical(&self, a: &G::El) -> G::El {
        self.center
            .iter()
            .map(|z| self.base.mul(a, z))
            .min_by_key(|m| self.base.key(m))
            .unwrap()
    }
}

impl<G: GroupOps> GroupOps for QuotientOps<G> {
    type El = G::El;

    fn mul(&self, a: &G::El, b: &G::El) -> G::El {
        self.canonical(&self.base.mul(a, b))
    }

    fn inv(&self, a: &G::El) -> G::El {
        self.canonical(&self.base.inv(a))
    }

    fn identity(&self) -> G::El {
        self.canonical(&self.base.identity())
    }

    fn key(&self, a: &G::El) -> u64 {
        self.base.key(a)
    }
}

/// A fully enumerated group with an element index.
pub struct EnumeratedGroup<G: GroupOps> {
    pub ops: G,
    pub gens: Vec<G::El>,
    pub elems: Vec<G::El>,
    index: HashMap<u64, u32>,
}

impl<G: GroupOps> EnumeratedGroup<G> {
    /// Breadth-first closure of the generators; errors if the budget is
    /// exceeded or the closure misses the expected order.
    pub fn enumerate(
        ops: G,
        gens: Vec<G::El>,
        expected_order: u64,
        cap: u64,
    ) -> Result<Self, OracleError> {
        if expected_order > cap {
            return Err(OracleError::SizeExceeded {
                order: expected_order,
                cap,
            });
        }
        let mut elems = Vec::with_capacity(expected_order as usize);
        let mut index = HashMap::with_capacity(expected_order as usize * 2);
        let id = ops.identity();
        index.insert(ops.key(&id), 0u32);
        elems.push(id);
        let mut head = 0usize;
        while head < elems.len() {
            let cur = elems[head];
            head += 1;
            for g in &gens {
                let n = ops.mul(&cur, g);
                let k = ops.key(&n);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(k) {
                    e.insert(elems.len() as u32);
                    elems.push(n);
                    if elems.len() as u64 > expected_order {
                        return Err(OracleError::ClosureMismatch {
                            got: elems.len() as u64,
                            expected: expected_order,
                        });
                    }
                }
            }
        }
        if elems.len() as u64 != expected_order {
            return Err(OracleError::ClosureMismatch {
                got: elems.len() as u64,
                expected: expected_order,
            });
        }
        Ok(EnumeratedGroup {
            ops,
            gens,
            elems,
            index,
        })
    }

    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    pub fn index_of(&self, el: &G::El) -> Option<u32> {
        self.index.get(&self.ops.key(el)).copied()
    }

    /// Elements commuting with every generator (= the center, since the
    /// generators generate).
    pub fn center(&self) -> Vec<G::El> {
        self.elems
            .iter()
            .filter(|z| {
                self.gens
                    .iter()
                    .all(|g| self.ops.key(&self.ops.mul(z, g)) == self.ops.key(&self.ops.mul(g, z)))
            })
            .copied()
            .collect()
    }

    /// Exact conjugacy partition; classes are sorted by their key-minimal
    /// representative, so the output is deterministic.
    pub fn conjugacy_classes(&self) -> ClassPartition {
        let n = self.elems.len();
        let mut class_of = vec![u32::MAX; n];
        let gen_invs: Vec<G::El> = self.gens.iter().map(|g| self.ops.inv(g)).collect();
        let mut classes: Vec<(u64, Vec<u32>)> = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let cid = classes.len() as u32;
            let mut members = vec![start as u32];
            class_of[start] = cid;
            let mut head = 0usize;
            let mut min_key = self.ops.key(&self.elems[start]);
            while head < members.len() {
                let m = self.elems[members[head] as usize];
                head += 1;
                for (g, gi) in self.gens.iter().zip(&gen_invs) {
                    let c = self.ops.mul(&self.ops.mul(g, &m), gi);
                    let idx = self.index[&self.ops.key(&c)];
                    if class_of[idx as usize] == u32::MAX {
                        class_of[idx as usize] = cid;
                        members.push(idx);
                        min_key = min_key.min(self.ops.key(&c));
                    }
                }
            }
            classes.push((min_key, members));
        }
        // Deterministic class order: by minimal representative key.
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by_key(|&i| classes[i].0);
        let mut reps = Vec::with_capacity(classes.len());
        let mut sizes = Vec::with_capacity(classes.len());
        let mut relabel = vec![0u32; classes.len()];
        for (new_id, &old_id) in order.iter().enumerate() {
            relabel[old_id] = new_id as u32;
            let (min_key, members) = &classes[old_id];
            reps.push(self.index[min_key]);
            sizes.push(members.len() as u64);
        }
        for c in class_of.iter_mut() {
            *c = relabel[*c as usize];
        }
        let group_order = self.order();
        let centralizer_orders = sizes.iter().map(|s| group_order / s).collect();
        ClassPartition {
            class_of,
            reps,
            sizes,
            centralizer_orders,
        }
    }

    /// Class index of rep^k for each class (the power map on classes).
    pub fn power_map(&self, part: &ClassPartition, k: u64) -> Vec<u32> {
        part.reps
            .iter()
            .map(|&r| {
                let mut acc = self.ops.identity();
                let mut base = self.elems[r as usize];
                let mut e = k;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = self.ops.mul(&acc, &base);
                    }
                    base = self.ops.mul(&base, &base);
                    e >>= 1;
                }
                part.class_of[self.index[&self.ops.key(&acc)] as usize]
            })
            .collect()
    }

    /// Class-to-class counts of the power map (columns = source classes).
    pub fn power_distribution_oracle(&self, part: &ClassPartition, k: u64) -> Vec<Vec<u64>> {
        let pm = self.power_map(part, k);
        let n = part.reps.len();
        let mut out = vec![vec![0u64; n]; n];
        for (src, &dst) in pm.iter().enumerate() {
            out[dst as usize][src] += 1;
        }
        out
    }
}

/// Exact partition data: deterministic representatives, sizes, centralizer
/// orders, and the element -> class map.
pub struct ClassPartition {
    pub class_of: Vec<u32>,
    pub reps: Vec<u32>,
    pub sizes: Vec<u64>,
    pub centralizer_orders: Vec<u64>,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

pub fn sl2_order(q: u64) -> u64 {
    q * (q * q - 1)
}

/// Enumerate SL(2,q) from elementary transvections.
pub fn enumerate_sl2(q: u64, cap: u64) -> Result<EnumeratedGroup<Sl2Ops>, OracleError> {
    let (p, m) = crate::exact::arith::prime_power(q).ok_or(OracleError::BadQ(q))?;
    let fq = make_field(p, m).expect("desk-scale field");
    let ops = Sl2Ops::new(fq.clone());
    let mut gens: Vec<Mat2> = Vec::new();
    // Transvections over an F_p-basis of F_q generate SL(2,q).
    let mut basis_elem = 1u64;
    for _ in 0..m {
        gens.push([[1, basis_elem], [0, 1]]);
        gens.push([[1, 0], [basis_elem, 1]]);
        basis_elem *= p; // next basis vector x^i as a packed code
    }
    EnumeratedGroup::enumerate(ops, gens, sl2_order(q), cap)
}

/// Enumerate SU(3,q) (identity form). Generators are the class
/// representatives, which always generate: a proper subgroup cannot meet
/// every conjugacy class.
pub fn enumerate_su3(q: u64, cap: u64) -> Result<EnumeratedGroup<Su3Ops>, OracleError> {
    let order = crate::psu3_data::su3_order(q);
    if order > cap {
        return Err(OracleError::SizeExceeded { order, cap });
    }
    let reps = psu3_reps::build_representatives(q).expect("representative builder");
    let ctx = psu3_reps::RepsContext::new(q).expect("context");
    let ops = Su3Ops::new(ctx.fq2.clone(), q);
    let gens: Vec<Mat3> = reps
        .iter()
        .map(|r| r.matrix)
        .filter(|m| *m != mat3::identity())
        .collect();
    EnumeratedGroup::enumerate(ops, gens, order, cap)
}

/// Quotient an enumerated SU(3,q) by its center, yielding PSU(3,q) on
/// key-minimal coset representatives.
pub fn quotient_by_center(
    su3: &EnumeratedGroup<Su3Ops>,
) -> Result<EnumeratedGroup<QuotientOps<Su3Ops>>, OracleError> {
    let center = su3.center();
    let q = su3.ops.q;
    let ops = QuotientOps {
        base: Su3Ops::new(su3.ops.fq2.clone(), q),
        center,
    };
    let gens: Vec<Mat3> = su3.gens.iter().map(|g| ops.canonical(g)).collect();
    let expected = su3.order() / ops.center.len() as u64;
    EnumeratedGroup::enumerate(ops, gens, expected, u64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psu3_data::{self, ClassType};

    #[test]
    fn sl2_orders_and_classes() {
        let g5 = enumerate_sl2(5, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g5.order(), 120);
        let part = g5.conjugacy_classes();
        assert_eq!(part.len(), 9);
        // Class equation.
        assert_eq!(part.sizes.iter().sum::<u64>(), 120);
        for (s, c) in part.sizes.iter().zip(&part.centralizer_orders) {
            assert_eq!(s * c, 120);
        }
        let g4 = enumerate_sl2(4, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g4.order(), 60);
        assert_eq!(g4.conjugacy_classes().len(), 5);
        // Characteristic 2: SL(2,4) = PSL(2,4) has a trivial center.
        assert_eq!(g4.center().len(), 1);
    }

    #[test]
    fn su3_small_orders() {
        let g2 = enumerate_su3(2, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g2.order(), 216);
        let g3 = enumerate_su3(3, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g3.order(), 6048);
    }

    #[test]
    fn su3_2_quotient_and_classes() {
        let g2 = enumerate_su3(2, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g2.center().len(), 3);
        let psu = quotient_by_center(&g2).unwrap();
        assert_eq!(psu.order(), 72);
        let part = psu.conjugacy_classes();
        assert_eq!(part.len() as u64, psu3_data::class_spectrum(2).unwrap().total_classes());
    }

    #[test]
    fn psu3_3_has_14_classes() {
        let g3 = enumerate_su3(3, DEFAULT_MAX_ORDER).unwrap();
        // d = 1: the center is trivial and PSU(3,3) = SU(3,3).
        assert_eq!(g3.center().len(), 1);
        let part = g3.conjugacy_classes();
        assert_eq!(part.len(), 14);
        assert_eq!(part.sizes.iter().sum::<u64>(), 6048);
    }

    #[test]
    fn centralizers_match_direct_enumeration() {
        let g = enumerate_sl2(5, DEFAULT_MAX_ORDER).unwrap();
        let part = g.conjugacy_classes();
        for cid in [0usize, 2, part.len() - 1] {
            let rep = g.elems[part.reps[cid] as usize];
            let direct = g
                .elems
                .iter()
                .filter(|x| {
                    g.ops.key(&g.ops.mul(x, &rep)) == g.ops.key(&g.ops.mul(&rep, x))
                })
                .count() as u64;
            assert_eq!(direct, part.centralizer_orders[cid]);
        }
        let g2 = enumerate_su3(2, DEFAULT_MAX_ORDER).unwrap();
        let part2 = g2.conjugacy_classes();
        for cid in [0usize, part2.len() / 2, part2.len() - 1] {
            let rep = g2.elems[part2.reps[cid] as usize];
            let direct = g2
                .elems
                .iter()
                .filter(|x| {
                    g2.ops.key(&g2.ops.mul(x, &rep)) == g2.ops.key(&g2.ops.mul(&rep, x))
                })
                .count() as u64;
            assert_eq!(direct, part2.centralizer_orders[cid]);
        }
    }

    #[test]
    fn trivial_group_has_one_class() {
        let fq = crate::ffield::make_field(5, 1).unwrap();
        let ops = Sl2Ops::new(fq);
        let g = EnumeratedGroup::enumerate(ops, vec![], 1, 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes().len(), 1);
    }

    #[test]
    fn power_maps_are_class_functions() {
        // Every element of a class powers into the same class.
        let g = enumerate_sl2(5, DEFAULT_MAX_ORDER).unwrap();
        let part = g.conjugacy_classes();
        for k in 2..=4u64 {
            let pm = g.power_map(&part, k);
            for (i, el) in g.elems.iter().enumerate() {
                let mut acc = g.ops.identity();
                for _ in 0..k {
                    acc = g.ops.mul(&acc, el);
                }
                let target = part.class_of[g.index_of(&acc).unwrap() as usize];
                assert_eq!(target, pm[part.class_of[i] as usize]);
            }
        }
    }

    #[test]
    fn psu3_2_power_distribution_matches_symbolic() {
        // Type-level aggregation of the brute-force power map vs the
        // symbolic table, at q = 2 and k = 2 (all C3 classes square to C2).
        let g = enumerate_su3(2, DEFAULT_MAX_ORDER).unwrap();
        let psu = quotient_by_center(&g).unwrap();
        let part = psu.conjugacy_classes();
        let ctx = psu3_reps::RepsContext::new(2).unwrap();
        let types: Vec<ClassType> = part
            .reps
            .iter()
            .map(|&r| psu3_reps::identify_type(&ctx, &psu.elems[r as usize]).unwrap())
            .collect();
        let dist = psu.power_distribution_oracle(&part, 2);
        let mut agg = [[0u64; 9]; 9];
        for (src, col) in types.iter().enumerate() {
            for (dst, row) in types.iter().enumerate() {
                agg[row.index()][col.index()] += dist[dst][src];
            }
        }
        let sym = psu3_data::symbolic_power_table(2, 2).unwrap();
        assert_eq!(agg, sym);
    }
}
