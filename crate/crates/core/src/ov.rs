//! Orthogonal Vectors instances, brute force, generators and the CNF split.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::num::{ceil, int, Rational};
use crate::{Error, Result};

/// Default cap on the number of vectors `cnf_to_ov` may enumerate.
pub const DEFAULT_OV_BUDGET: u64 = 1 << 24;

/// A bit vector packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    /// Word-parallel test of `<self, other> = 0`.
    pub fn is_orthogonal(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Bit-by-bit test of `<self, other> = 0`.
    pub fn is_orthogonal_scalar(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len);
        self.iter().zip(other.iter()).all(|(a, b)| !(a && b))
    }
}

/// Two sets of `d`-dimensional bit vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OvInstance {
    a: Vec<BitVector>,
    b: Vec<BitVector>,
    d: usize,
}

impl OvInstance {
    pub fn new(a: Vec<BitVector>, b: Vec<BitVector>) -> Result<Self> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::InvalidInput("OV instance needs n >= 1 and m >= 1"));
        }
        let d = a[0].len();
        if d == 0 {
            return Err(Error::InvalidInput("OV instance needs d >= 1"));
        }
        if a.iter().chain(&b).any(|v| v.len() != d) {
            return Err(Error::InvalidInput("all OV vectors must have length d"));
        }
        Ok(Self { a, b, d })
    }

    pub fn a(&self) -> &[BitVector] {
        &self.a
    }

    pub fn b(&self) -> &[BitVector] {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn m(&self) -> usize {
        self.b.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The instance with `A` and `B` exchanged.
    pub fn swapped(&self) -> Self {
        Self { a: self.b.clone(), b: self.a.clone(), d: self.d }
    }
}

/// First orthogonal pair `(i, j)` in row-major order.
pub fn ov_find_pair(inst: &OvInstance) -> Option<(usize, usize)> {
    inst.a.iter().enumerate().find_map(|(i, a)| {
        inst.b.iter().position(|b| a.is_orthogonal(b)).map(|j| (i, j))
    })
}

pub fn ov_brute_force(inst: &OvInstance) -> bool {
    ov_find_pair(inst).is_some()
}

pub fn ov_brute_force_scalar(inst: &OvInstance) -> bool {
    inst.a.iter().any(|a| inst.b.iter().any(|b| a.is_orthogonal_scalar(b)))
}

/// Each bit is independently one with probability `one_density`.
///
/// The density's denominator must fit in a `u32`.
pub fn gen_random(n: usize, m: usize, d: usize, one_density: Rational, seed: u64) -> OvInstance {
    assert!(n >= 1 && m >= 1 && d >= 1, "OV parameters must be positive");
    assert!(one_density >= Rational::zero() && one_density <= Rational::one(), "density must lie in [0,1]");
    let num = u32::try_from(*one_density.numer()).expect("density numerator fits u32");
    let den = u32::try_from(*one_density.denom()).expect("density denominator fits u32");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |count: usize| -> Vec<BitVector> {
        (0..count)
            .map(|_| {
                let mut v = BitVector::zeros(d);
                for k in 0..d {
                    v.set(k, rng.gen_ratio(num, den));
                }
                v
            })
            .collect()
    };
    let a = draw(n);
    let b = draw(m);
    OvInstance { a, b, d }
}

/// A random instance with one pair rewritten to have disjoint supports.
pub fn gen_planted(n: usize, m: usize, d: usize, seed: u64) -> OvInstance {
    let mut inst = gen_random(n, m, d, Rational::new(1, 2), seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let i = rng.gen_range(0..n);
    let j = rng.gen_range(0..m);
    for k in 0..d {
        let (x, y) = match rng.gen_range(0..3) {
            0 => (false, false),
            1 => (true, false),
            _ => (false, true),
        };
        inst.a[i].set(k, x);
        inst.b[j].set(k, y);
    }
    inst
}

/// A CNF formula over variables `1..=variable_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    variable_count: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        if variable_count == 0 {
            return Err(Error::InvalidInput("formula needs at least one variable"));
        }
        for c in &clauses {
            if c.is_empty() {
                return Err(Error::InvalidInput("empty clause"));
            }
            if c.iter().any(|&l| l == 0 || l.unsigned_abs() as usize > variable_count) {
                return Err(Error::InvalidInput("literal out of range"));
            }
        }
        Ok(Self { variable_count, clauses })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Whether `assignment` (bit `v-1` is variable `v`) satisfies every clause.
    pub fn satisfied_by(&self, assignment: u64) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| literal_true(l, assignment)))
    }
}

fn literal_true(lit: i32, assignment: u64) -> bool {
    let v = lit.unsigned_abs() - 1;
    (assignment >> v & 1 == 1) == (lit > 0)
}

/// Exhaustive satisfiability check over all `2^N` assignments.
pub fn sat_brute_force(f: &CnfFormula) -> bool {
    assert!(f.variable_count < 64, "too many variables to enumerate");
    (0..1u64 << f.variable_count).any(|z| f.satisfied_by(z))
}

/// Splits the variables into a left block of `ceil(left_fraction * N)`
/// variables and a right block, and builds one vector per partial assignment.
///
/// Coordinate `i` is 0 exactly when the partial assignment satisfies clause
/// `i`. A formula with no clauses maps to `d = 1` with an all-zero coordinate.
pub fn cnf_to_ov(f: &CnfFormula, left_fraction: Rational, budget: u64) -> Result<OvInstance> {
    if left_fraction <= Rational::zero() || left_fraction >= Rational::one() {
        return Err(Error::InvalidInput("left fraction must lie in (0,1)"));
    }
    let total = f.variable_count;
    let left = (ceil(left_fraction * int(total as i128)) as usize).min(total);
    let right = total - left;
    let needed = if left >= 63 || right >= 63 {
        u128::MAX
    } else {
        (1u128 << left) + (1u128 << right)
    };
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget: budget as u128 });
    }
    let d = f.clauses.len().max(1);
    let block = |first_var: usize, width: usize| -> Vec<BitVector> {
        (0..1u64 << width)
            .map(|z| {
                let mut v = BitVector::zeros(d);
                for (i, c) in f.clauses.iter().enumerate() {
                    let sat = c.iter().any(|&l| {
                        let var = l.unsigned_abs() as usize;
                        (first_var..first_var + width).contains(&var)
                            && (z >> (var - first_var) & 1 == 1) == (l > 0)
                    });
                    v.set(i, !sat);
                }
                v
            })
            .collect()
    };
    OvInstance::new(block(1, left), block(left + 1, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::ratio;

    fn vecs(rows: &[&str]) -> Vec<BitVector> {
        rows.iter()
            .map(|r| BitVector::from_bits(&r.bytes().map(|b| b == b'1').collect::<Vec<_>>()))
            .collect()
    }

    fn inst(a: &[&str], b: &[&str]) -> OvInstance {
        OvInstance::new(vecs(a), vecs(b)).unwrap()
    }

    #[test]
    fn brute_force_examples() {
        assert!(ov_brute_force(&inst(&["00"], &["00"])));
        assert!(!ov_brute_force(&inst(&["11"], &["11"])));
        assert!(!ov_brute_force(&inst(&["10", "01"], &["11"])));
        assert_eq!(ov_find_pair(&inst(&["11", "10"], &["01", "11"])), Some((1, 0)));
    }

    #[test]
    fn rejects_malformed() {
        assert!(OvInstance::new(vec![], vecs(&["1"])).is_err());
        assert!(OvInstance::new(vecs(&["10"]), vecs(&["1"])).is_err());
        assert!(OvInstance::new(vecs(&[""]), vecs(&[""])).is_err());
    }

    #[test]
    fn packed_and_scalar_agree_across_words() {
        let inst = gen_random(5, 5, 130, ratio(1, 20), 3);
        assert_eq!(ov_brute_force(&inst), ov_brute_force_scalar(&inst));
    }

    #[test]
    fn generators() {
        let z = gen_random(1, 1, 1, int(0), 42);
        assert_eq!(z, inst(&["0"], &["0"]));
        let o = gen_random(2, 2, 3, int(1), 42);
        assert!(o.a().iter().chain(o.b()).all(|v| v.count_ones() == 3));
        assert!(!ov_brute_force(&o));
        assert_eq!(gen_random(4, 3, 7, ratio(1, 3), 9), gen_random(4, 3, 7, ratio(1, 3), 9));
        assert_ne!(gen_random(4, 3, 7, ratio(1, 3), 9), gen_random(4, 3, 7, ratio(1, 3), 10));
        for seed in 0..50 {
            assert!(ov_brute_force(&gen_planted(4, 4, 6, seed)));
            assert!(ov_brute_force(&gen_planted(1, 1, 5, seed)));
        }
    }

    #[test]
    fn cnf_examples() {
        let unit = CnfFormula::new(2, vec![vec![1]]).unwrap();
        let ov = cnf_to_ov(&unit, ratio(1, 2), DEFAULT_OV_BUDGET).unwrap();
        assert_eq!((ov.n(), ov.m(), ov.d()), (2, 2, 1));
        assert!(ov_brute_force(&ov));

        let contra = CnfFormula::new(2, vec![vec![1], vec![-1]]).unwrap();
        assert!(!ov_brute_force(&cnf_to_ov(&contra, ratio(1, 2), DEFAULT_OV_BUDGET).unwrap()));
        assert!(!sat_brute_force(&contra));

        let empty = CnfFormula::new(3, vec![]).unwrap();
        let ov = cnf_to_ov(&empty, ratio(1, 3), DEFAULT_OV_BUDGET).unwrap();
        assert_eq!(ov.d(), 1);
        assert!(ov_brute_force(&ov));
    }

    #[test]
    fn cnf_split_and_budget() {
        let f = CnfFormula::new(5, vec![vec![1, -5]]).unwrap();
        let ov = cnf_to_ov(&f, ratio(1, 2), DEFAULT_OV_BUDGET).unwrap();
        assert_eq!((ov.n(), ov.m()), (8, 4));
        let ov = cnf_to_ov(&f, ratio(9, 10), DEFAULT_OV_BUDGET).unwrap();
        assert_eq!((ov.n(), ov.m()), (32, 1));
        assert!(matches!(cnf_to_ov(&f, ratio(1, 2), 11), Err(Error::BudgetExceeded { .. })));
        assert!(cnf_to_ov(&f, int(1), DEFAULT_OV_BUDGET).is_err());
    }

    #[test]
    fn rejects_bad_formulas() {
        assert!(CnfFormula::new(2, vec![vec![]]).is_err());
        assert!(CnfFormula::new(2, vec![vec![3]]).is_err());
        assert!(CnfFormula::new(2, vec![vec![0]]).is_err());
    }
}
