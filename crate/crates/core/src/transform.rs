//! Action of Kronecker powers of the Hadamard matrix on exact vectors.
//!
//! `H = [[1, 1], [1, -1]]` and `K = H/√2`. Vectors are row vectors indexed
//! by labels with coordinate 1 as the most significant bit, so the leading
//! coordinate is the outer Kronecker factor. Only the action of `H^[m]` is
//! implemented, as `m` butterfly stages.

use std::ops::{Add, Sub};

use crate::error::{Error, Result};
use crate::quadring::QuadRat;

/// A dense vector of `2^m` exact entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectralVector {
    m: usize,
    entries: Vec<QuadRat>,
}

impl SpectralVector {
    pub fn new(entries: Vec<QuadRat>) -> Result<Self> {
        if !entries.len().is_power_of_two() {
            return Err(Error::NotPowerOfTwo(entries.len()));
        }
        Ok(SpectralVector {
            m: entries.len().trailing_zeros() as usize,
            entries,
        })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| QuadRat::from(v)).collect())
    }

    /// `log2` of the length.
    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &[QuadRat] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<QuadRat> {
        self.entries
    }

    pub fn scale(&self, c: &QuadRat) -> SpectralVector {
        SpectralVector {
            m: self.m,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }
}

impl Add for &SpectralVector {
    type Output = SpectralVector;
    fn add(self, rhs: &SpectralVector) -> SpectralVector {
        assert_eq!(self.m, rhs.m);
        SpectralVector {
            m: self.m,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &SpectralVector {
    type Output = SpectralVector;
    fn sub(self, rhs: &SpectralVector) -> SpectralVector {
        assert_eq!(self.m, rhs.m);
        SpectralVector {
            m: self.m,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// In-place `v ← v·H^[m]`. Stage `h` pairs entries whose labels differ in
/// the bit of weight `h`.
pub fn hadamard_in_place<T>(data: &mut [T])
where
    T: Clone,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    let len = data.len();
    assert!(len.is_power_of_two());
    let mut h = 1;
    while h < len {
        for block in data.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let s = &*x + &*y;
                let d = &*x - &*y;
                *x = s;
                *y = d;
            }
        }
        h *= 2;
    }
}

/// `v·H^[m]` with the unnormalized Hadamard matrix.
pub fn apply_hadamard_power(v: &SpectralVector) -> SpectralVector {
    let mut entries = v.entries.clone();
    hadamard_in_place(&mut entries);
    SpectralVector { m: v.m, entries }
}

/// `(√2)^m` exactly.
pub fn sqrt2_power(m: usize) -> QuadRat {
    QuadRat::sqrt2().pow(m as u32)
}

/// `v·K^[m] = (√2/2)^m · v·H^[m]`.
pub fn apply_k_power(v: &SpectralVector) -> SpectralVector {
    let factor = sqrt2_power(v.m)
        .inverse()
        .expect("powers of sqrt 2 are invertible");
    apply_hadamard_power(v).scale(&factor)
}

/// Whether `v·K^[m] = v`, tested as `v·H^[m] = (√2)^m v` without division.
pub fn is_eigenvector_one(v: &SpectralVector) -> bool {
    let scale = sqrt2_power(v.m);
    apply_hadamard_power(v)
        .entries
        .iter()
        .zip(&v.entries)
        .all(|(hv, x)| *hv == x * &scale)
}

/// Whether `v·K^[m] = -v`.
pub fn is_eigenvector_minus_one(v: &SpectralVector) -> bool {
    let scale = -sqrt2_power(v.m);
    apply_hadamard_power(v)
        .entries
        .iter()
        .zip(&v.entries)
        .all(|(hv, x)| *hv == x * &scale)
}

/// Eigencheck for a 0/1 indicator using integer butterflies.
///
/// `v·H^[m]` is integral, so for odd `m` it can only equal `(√2)^m v` when
/// `v = 0`; for even `m` the condition is `v·H^[m] = 2^(m/2) v`.
pub fn is_indicator_eigenvector_one(indicator: &[u8]) -> Result<bool> {
    if !indicator.len().is_power_of_two() {
        return Err(Error::NotPowerOfTwo(indicator.len()));
    }
    let m = indicator.len().trailing_zeros();
    if m % 2 == 1 {
        return Ok(indicator.iter().all(|&x| x == 0));
    }
    let mut data: Vec<i64> = indicator.iter().map(|&x| x as i64).collect();
    hadamard_in_place(&mut data);
    let scale = 1i64 << (m / 2);
    Ok(data
        .iter()
        .zip(indicator)
        .all(|(&hv, &x)| hv == scale * x as i64))
}

/// Row of `B^[m]` with the given label, where `B` has rows `(1, ρ)` and
/// `(1, μ)`; computed as a Kronecker product of per-coordinate rows.
pub fn eigenbasis_row(m: usize, label: u64) -> SpectralVector {
    assert!(m < 64 && label < 1 << m);
    let mut entries = vec![QuadRat::one()];
    for k in 0..m {
        let bit = (label >> (m - 1 - k)) & 1;
        let second = if bit == 0 {
            QuadRat::rho()
        } else {
            QuadRat::mu()
        };
        entries = entries
            .iter()
            .flat_map(|e| [e.clone(), e * &second])
            .collect();
    }
    SpectralVector { m, entries }
}

/// Splits `v` into its `+1` and `-1` eigencomponents: `(v ± v·K^[m]) / 2`.
pub fn spectral_split(v: &SpectralVector) -> (SpectralVector, SpectralVector) {
    let kv = apply_k_power(v);
    let half = QuadRat::from_ints(1, 0)
        .checked_div(&QuadRat::from(2))
        .expect("nonzero");
    ((v + &kv).scale(&half), (v - &kv).scale(&half))
}

/// Exact rank over Q(√2) by Gaussian elimination.
pub fn rank(rows: &[Vec<QuadRat>]) -> usize {
    let mut rows: Vec<Vec<QuadRat>> = rows.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("pivot is nonzero");
        let pivot: Vec<QuadRat> = rows[r].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &(&f * p);
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Materialized `K^[m]` for cross-checking, small `m` only.
    fn k_matrix(m: usize) -> Vec<Vec<QuadRat>> {
        let half_sqrt2 = QuadRat::sqrt2().checked_div(&QuadRat::from(2)).unwrap();
        let k1 = [
            [half_sqrt2.clone(), half_sqrt2.clone()],
            [half_sqrt2.clone(), -&half_sqrt2],
        ];
        let mut mat = vec![vec![QuadRat::one()]];
        for _ in 0..m {
            let s = mat.len();
            let mut next = vec![vec![QuadRat::zero(); 2 * s]; 2 * s];
            for i in 0..s {
                for j in 0..s {
                    for a in 0..2 {
                        for b in 0..2 {
                            next[a * s + i][b * s + j] = &mat[i][j] * &k1[a][b];
                        }
                    }
                }
            }
            mat = next;
        }
        mat
    }

    fn row_times(v: &[QuadRat], mat: &[Vec<QuadRat>]) -> Vec<QuadRat> {
        (0..mat.len())
            .map(|j| v.iter().zip(mat).map(|(x, row)| x * &row[j]).sum())
            .collect()
    }

    fn arb_vector(m: usize) -> impl Strategy<Value = SpectralVector> {
        proptest::collection::vec((-50i64..50, -50i64..50), 1 << m).prop_map(|pairs| {
            SpectralVector::new(
                pairs
                    .into_iter()
                    .map(|(a, b)| QuadRat::from_ints(a, b))
                    .collect(),
            )
            .unwrap()
        })
    }

    #[test]
    fn hadamard_examples() {
        let v = SpectralVector::from_ints(&[1, 0]).unwrap();
        assert_eq!(
            apply_hadamard_power(&v),
            SpectralVector::from_ints(&[1, 1]).unwrap()
        );
        let ones = SpectralVector::from_ints(&[1, 1, 1, 1]).unwrap();
        assert_eq!(
            apply_hadamard_power(&ones),
            SpectralVector::from_ints(&[4, 0, 0, 0]).unwrap()
        );
        let rho = SpectralVector::new(vec![QuadRat::one(), QuadRat::rho()]).unwrap();
        let out = apply_hadamard_power(&rho);
        assert_eq!(
            out.entries(),
            &[QuadRat::sqrt2(), QuadRat::from_ints(2, -1)]
        );
        assert_eq!(out, rho.scale(&QuadRat::sqrt2()));
        assert!(SpectralVector::from_ints(&[1, 2, 3]).is_err());
    }

    #[test]
    fn k_eigenvectors() {
        let plus = SpectralVector::new(vec![QuadRat::one(), QuadRat::rho()]).unwrap();
        assert_eq!(apply_k_power(&plus), plus);
        let minus = SpectralVector::new(vec![QuadRat::one(), QuadRat::mu()]).unwrap();
        assert_eq!(apply_k_power(&minus), minus.scale(&QuadRat::from(-1)));
    }

    #[test]
    fn repetition_code_pins_bit_order() {
        let w = SpectralVector::from_ints(&[1, 0, 0, 1]).unwrap();
        assert_eq!(
            apply_hadamard_power(&w),
            SpectralVector::from_ints(&[2, 0, 0, 2]).unwrap()
        );
        assert!(is_eigenvector_one(&w));
        assert_eq!(is_indicator_eigenvector_one(&[1, 0, 0, 1]), Ok(true));
        assert_eq!(is_indicator_eigenvector_one(&[1, 1, 0, 0]), Ok(false));
        assert_eq!(is_indicator_eigenvector_one(&[1, 0]), Ok(false));
    }

    #[test]
    fn basis_rows() {
        assert_eq!(
            eigenbasis_row(1, 0).entries(),
            &[QuadRat::one(), QuadRat::rho()]
        );
        let mu = QuadRat::mu();
        let mu2 = QuadRat::from_ints(3, 2);
        assert_eq!(&mu * &mu, mu2);
        assert_eq!(
            eigenbasis_row(2, 0b11).entries(),
            &[QuadRat::one(), mu.clone(), mu, mu2]
        );
        let r = eigenbasis_row(3, 0b100);
        assert!(!is_eigenvector_one(&r));
        assert_eq!(apply_k_power(&r), r.scale(&QuadRat::from(-1)));
    }

    #[test]
    fn butterfly_matches_materialized_matrix() {
        for m in 0..=4 {
            let mat = k_matrix(m);
            for label in 0..1u64 << m {
                let v = eigenbasis_row(m, label);
                let fast = apply_k_power(&v);
                assert_eq!(fast.entries(), &row_times(v.entries(), &mat)[..]);
            }
            let v = SpectralVector::new(
                (0..1i64 << m)
                    .map(|i| QuadRat::from_ints(i * 3 - 7, 5 - i))
                    .collect(),
            )
            .unwrap();
            assert_eq!(
                apply_k_power(&v).entries(),
                &row_times(v.entries(), &mat)[..]
            );
        }
    }

    #[test]
    fn even_label_rows_span_plus_eigenspace() {
        for m in 1..=6usize {
            let mut even = Vec::new();
            for label in 0..1u64 << m {
                let row = eigenbasis_row(m, label);
                if label.count_ones() % 2 == 0 {
                    assert!(is_eigenvector_one(&row), "m={m} label={label}");
                    even.push(row.into_entries());
                } else {
                    assert!(is_eigenvector_minus_one(&row), "m={m} label={label}");
                }
            }
            assert_eq!(even.len(), 1 << (m - 1));
            assert_eq!(rank(&even), 1 << (m - 1), "m={m}");
        }
    }

    #[test]
    fn rank_detects_dependence() {
        let a = vec![QuadRat::one(), QuadRat::rho()];
        let b = vec![QuadRat::sqrt2(), QuadRat::sqrt2() * QuadRat::rho()];
        assert_eq!(rank(&[a.clone(), b]), 1);
        assert_eq!(rank(&[a, vec![QuadRat::one(), QuadRat::mu()]]), 2);
    }

    proptest! {
        #[test]
        fn k_is_an_involution(v in (0usize..=5).prop_flat_map(arb_vector)) {
            prop_assert_eq!(apply_k_power(&apply_k_power(&v)), v.clone());
            let hh = apply_hadamard_power(&apply_hadamard_power(&v));
            prop_assert_eq!(hh, v.scale(&QuadRat::from(1i64 << v.dim())));
        }

        #[test]
        fn spectral_split_is_exact(v in (0usize..=5).prop_flat_map(arb_vector)) {
            let (plus, minus) = spectral_split(&v);
            prop_assert_eq!(&plus + &minus, v);
            prop_assert!(is_eigenvector_one(&plus));
            prop_assert!(is_eigenvector_minus_one(&minus));
        }
    }
}
