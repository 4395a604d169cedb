//! Intersection arrays and the parameters derived from them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrayError {
    #[error("intersection array must have diameter at least 1")]
    Empty,
    #[error("b-sequence has {b_len} entries but c-sequence has {c_len}")]
    LengthMismatch { b_len: usize, c_len: usize },
    #[error("{name} must be at least 1")]
    ZeroEntry { name: String },
    #[error("c_1 must equal 1, got {got}")]
    C1NotOne { got: u32 },
}

/// The parameter string {b_0, ..., b_{d-1}; c_1, ..., c_d} of a candidate
/// distance-regular graph. All entries are positive and c_1 = 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionArray {
    b: Vec<u32>,
    c: Vec<u32>,
}

impl IntersectionArray {
    pub fn new(b: Vec<u32>, c: Vec<u32>) -> Result<Self, ArrayError> {
        if b.is_empty() || c.is_empty() {
            return Err(ArrayError::Empty);
        }
        if b.len() != c.len() {
            return Err(ArrayError::LengthMismatch {
                b_len: b.len(),
                c_len: c.len(),
            });
        }
        for (i, &v) in b.iter().enumerate() {
            if v == 0 {
                return Err(ArrayError::ZeroEntry {
                    name: format!("b_{}", i),
                });
            }
        }
        for (i, &v) in c.iter().enumerate() {
            if v == 0 {
                return Err(ArrayError::ZeroEntry {
                    name: format!("c_{}", i + 1),
                });
            }
        }
        if c[0] != 1 {
            return Err(ArrayError::C1NotOne { got: c[0] });
        }
        Ok(IntersectionArray { b, c })
    }

    /// Diameter d.
    pub fn d(&self) -> usize {
        self.b.len()
    }

    /// b_0, ..., b_{d-1}.
    pub fn b(&self) -> &[u32] {
        &self.b
    }

    /// c_1, ..., c_d (so `c()[i]` is c_{i+1}).
    pub fn c(&self) -> &[u32] {
        &self.c
    }

    pub fn b0(&self) -> u32 {
        self.b[0]
    }

    /// c_2, when the diameter allows one.
    pub fn c2(&self) -> Option<u32> {
        self.c.get(1).copied()
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bs: Vec<String> = self.b.iter().map(|v| v.to_string()).collect();
        let cs: Vec<String> = self.c.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{};{}}}", bs.join(","), cs.join(","))
    }
}

/// Quantities determined by an intersection array: the a-sequence, the
/// distance-i valencies k_i, and the total number of vertices n = sum k_i.
///
/// The valencies are kept as exact rationals: for a genuine graph they are
/// positive integers, and the integrality check in `feasibility` relies on
/// seeing the unrounded values.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivedParameters {
    a: Vec<i64>,
    k: Vec<BigRational>,
    n: BigRational,
}

impl DerivedParameters {
    /// a_0, ..., a_d.
    pub fn a(&self) -> &[i64] {
        &self.a
    }

    /// k_0, ..., k_d.
    pub fn k(&self) -> &[BigRational] {
        &self.k
    }

    pub fn n(&self) -> &BigRational {
        &self.n
    }

    /// Degree of the local graph. For d = 1 this is b_0 - 1, matching the
    /// complete graph on b_0 + 1 vertices.
    pub fn a1(&self) -> i64 {
        self.a[1]
    }
}

/// Compute the a-sequence, valencies, and vertex count.
///
/// a_i = b_0 - b_i - c_i (with a_0 = 0 and a_d = b_0 - c_d), and
/// k_{i+1} = k_i b_i / c_{i+1} starting from k_0 = 1.
pub fn derive_parameters(arr: &IntersectionArray) -> DerivedParameters {
    let d = arr.d();
    let b = arr.b();
    let c = arr.c();
    let b0 = b[0] as i64;

    let mut a = Vec::with_capacity(d + 1);
    a.push(0i64);
    for i in 1..d {
        a.push(b0 - b[i] as i64 - c[i - 1] as i64);
    }
    a.push(b0 - c[d - 1] as i64);

    let mut k = Vec::with_capacity(d + 1);
    k.push(BigRational::one());
    for i in 0..d {
        let next = &k[i] * BigRational::new(BigInt::from(b[i]), BigInt::from(c[i]));
        k.push(next);
    }
    let n = k.iter().fold(BigRational::zero(), |acc, v| acc + v);

    DerivedParameters { a, k, n }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(b: &[u32], c: &[u32]) -> IntersectionArray {
        IntersectionArray::new(b.to_vec(), c.to_vec()).unwrap()
    }

    fn ints(vals: &[i64]) -> Vec<BigRational> {
        vals.iter()
            .map(|&v| BigRational::from_integer(BigInt::from(v)))
            .collect()
    }

    #[test]
    fn rejects_malformed_arrays() {
        assert_eq!(
            IntersectionArray::new(vec![], vec![]),
            Err(ArrayError::Empty)
        );
        assert_eq!(
            IntersectionArray::new(vec![3, 2], vec![1]),
            Err(ArrayError::LengthMismatch { b_len: 2, c_len: 1 })
        );
        assert_eq!(
            IntersectionArray::new(vec![3, 0], vec![1, 1]),
            Err(ArrayError::ZeroEntry {
                name: "b_1".into()
            })
        );
        assert_eq!(
            IntersectionArray::new(vec![3, 2], vec![2, 2]),
            Err(ArrayError::C1NotOne { got: 2 })
        );
    }

    #[test]
    fn derives_parameters_for_55_36_11() {
        let a = arr(&[55, 36, 11], &[1, 4, 45]);
        let dp = derive_parameters(&a);
        assert_eq!(dp.a(), &[0, 18, 40, 10]);
        assert_eq!(dp.k(), ints(&[1, 55, 495, 121]).as_slice());
        assert_eq!(dp.n(), &ints(&[672])[0]);
        assert_eq!(dp.a1(), 18);
    }

    #[test]
    fn derives_parameters_for_pentagon() {
        let a = arr(&[2, 1], &[1, 1]);
        let dp = derive_parameters(&a);
        assert_eq!(dp.a(), &[0, 0, 1]);
        assert_eq!(dp.k(), ints(&[1, 2, 2]).as_slice());
        assert_eq!(dp.n(), &ints(&[5])[0]);
    }

    #[test]
    fn derives_parameters_for_complete_graph() {
        // {k; 1} is the complete graph on k+1 vertices
        let a = arr(&[6], &[1]);
        let dp = derive_parameters(&a);
        assert_eq!(dp.a(), &[0, 5]);
        assert_eq!(dp.k(), ints(&[1, 6]).as_slice());
        assert_eq!(dp.n(), &ints(&[7])[0]);
        assert_eq!(dp.a1(), 5);
    }

    #[test]
    fn fractional_valencies_survive_exactly() {
        // {3,2;1,2}: k_2 = 3 * 2 / 2 = 3, n = 7; but {3,1;1,3} gives k_2 = 1
        let a = arr(&[3, 2], &[1, 2]);
        let dp = derive_parameters(&a);
        assert_eq!(dp.k(), ints(&[1, 3, 3]).as_slice());
        // {4,3;1,3}: k_2 = 4
        let a = arr(&[4, 3], &[1, 3]);
        let dp = derive_parameters(&a);
        assert_eq!(dp.k(), ints(&[1, 4, 4]).as_slice());
        // {3,2;1,4} has k_2 = 3/2, genuinely fractional
        let a = arr(&[3, 2], &[1, 4]);
        let dp = derive_parameters(&a);
        assert_eq!(dp.k()[2], BigRational::new(BigInt::from(3), BigInt::from(2)));
    }

    #[test]
    fn canonical_rendering() {
        let a = arr(&[55, 36, 11], &[1, 4, 45]);
        assert_eq!(a.to_string(), "{55,36,11;1,4,45}");
        let a = arr(&[6], &[1]);
        assert_eq!(a.to_string(), "{6;1}");
    }
}
