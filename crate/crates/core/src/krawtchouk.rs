//! Krawtchouk matrices and the nonnegative integer solutions of the
//! MacWilliams fixed-point equation `X·M = 2^(n/2)·X` with `M = K_nᵀ`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::codes::WeightDistribution;
use crate::error::{Error, Result};

/// Largest length accepted by [`enumerate_candidates`] and [`enumerate_fixed_points`].
pub const MAX_CANDIDATE_LENGTH: usize = 12;

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The `(n+1)×(n+1)` integer matrix with entry
/// `K[i][j] = Σ_m (-1)^m C(j, m) C(n-j, i-m)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KrawtchoukMatrix {
    n: usize,
    entries: Vec<Vec<BigInt>>,
}

impl KrawtchoukMatrix {
    pub fn length(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    /// `X·Kᵀ`, i.e. component `j` is `Σ_i X[i] K[j][i]`.
    pub fn apply_transpose(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(x).map(|(k, xi)| k * xi).sum())
            .collect()
    }

    /// Whether `K·K = 2^n·I`.
    pub fn is_scaled_involution(&self) -> bool {
        let size = self.n + 1;
        let scale = BigInt::one() << self.n;
        (0..size).all(|i| {
            (0..size).all(|j| {
                let v: BigInt = (0..size)
                    .map(|l| &self.entries[i][l] * &self.entries[l][j])
                    .sum();
                if i == j {
                    v == scale
                } else {
                    v.is_zero()
                }
            })
        })
    }
}

pub fn krawtchouk_matrix(n: usize) -> KrawtchoukMatrix {
    let entries = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    (0..=i)
                        .map(|m| {
                            let term = binomial(j, m) * binomial(n - j, i - m);
                            if m % 2 == 1 {
                                -term
                            } else {
                                term
                            }
                        })
                        .sum()
                })
                .collect()
        })
        .collect();
    KrawtchoukMatrix { n, entries }
}

/// Whether `X·M = 2^(n/2)·X` for the weight distribution `X` of even length `n`.
pub fn is_macwilliams_fixed_point(wd: &WeightDistribution) -> bool {
    let n = wd.length();
    if !n.is_multiple_of(2) {
        return false;
    }
    let k = krawtchouk_matrix(n);
    let x: Vec<BigInt> = wd.counts().iter().map(|&a| BigInt::from(a)).collect();
    let scale = BigInt::one() << (n / 2);
    k.apply_transpose(&x)
        .iter()
        .zip(&x)
        .all(|(lhs, xi)| *lhs == &scale * xi)
}

/// One pivot variable solved in terms of the free ones:
/// `denom·X[pivot] = constant − Σ coeffs[f]·X[free[f]]`.
struct PivotRow {
    pivot: usize,
    denom: i128,
    constant: i128,
    coeffs: Vec<i128>,
}

fn to_i128(r: &BigInt) -> Result<i128> {
    r.to_i128()
        .ok_or_else(|| Error::ResourceLimit("coefficient exceeds 128 bits".into()))
}

/// Weight distributions that a self-dual code of length `n` could have:
/// nonnegative integer solutions of `X·M = 2^(n/2)·X` with `X[0] = 1` and
/// `X[k] = 0` for odd `k`, in lexicographic order.
///
/// Every codeword of a self-dual binary code is orthogonal to itself, so only
/// even weights occur. The eigen-equation alone admits further solutions,
/// listed by [`enumerate_fixed_points`].
pub fn enumerate_candidates(n: usize) -> Result<Vec<WeightDistribution>> {
    solve(n, true)
}

/// All nonnegative integer solutions of `X·M = 2^(n/2)·X` with `X[0] = 1`,
/// in lexicographic order.
///
/// The equation is linear, so the solution set is an affine space; its
/// free coordinates are searched depth first. The `k = 0` component of the
/// equation forces `Σ X = 2^(n/2)` (column 0 of `M` is all ones), which bounds
/// the search.
pub fn enumerate_fixed_points(n: usize) -> Result<Vec<WeightDistribution>> {
    solve(n, false)
}

fn solve(n: usize, even_only: bool) -> Result<Vec<WeightDistribution>> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::InvalidCandidate(format!(
            "length {n} must be positive and even"
        )));
    }
    if n > MAX_CANDIDATE_LENGTH {
        return Err(Error::ResourceLimit(format!(
            "candidate search supports n <= {MAX_CANDIDATE_LENGTH}"
        )));
    }
    let size = n + 1;
    let lambda = 1i64 << (n / 2);
    let k = krawtchouk_matrix(n);

    // Augmented system: (K − λI)·Xᵀ = 0 together with X[0] = 1.
    let mut sys: Vec<Vec<BigRational>> = (0..size)
        .map(|j| {
            let mut row: Vec<BigRational> = (0..size)
                .map(|i| {
                    let mut v = k.entry(j, i).clone();
                    if i == j {
                        v -= lambda;
                    }
                    BigRational::from_integer(v)
                })
                .collect();
            row.push(BigRational::zero());
            row
        })
        .collect();
    let mut fix = vec![BigRational::zero(); size + 1];
    fix[0] = BigRational::one();
    fix[size] = BigRational::one();
    sys.push(fix);
    if even_only {
        for odd in (1..size).step_by(2) {
            let mut row = vec![BigRational::zero(); size + 1];
            row[odd] = BigRational::one();
            sys.push(row);
        }
    }

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..size {
        let Some(p) = (r..sys.len()).find(|&i| !sys[i][c].is_zero()) else {
            continue;
        };
        sys.swap(r, p);
        let inv = sys[r][c].recip();
        sys[r].iter_mut().for_each(|x| *x *= &inv);
        let pivot_row = sys[r].clone();
        for (i, row) in sys.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                row.iter_mut()
                    .zip(&pivot_row)
                    .for_each(|(x, p)| *x -= &f * p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if sys[r..].iter().any(|row| !row[size].is_zero()) {
        return Ok(Vec::new());
    }
    let free: Vec<usize> = (0..size).filter(|c| !pivots.contains(c)).collect();

    let rows = pivots
        .iter()
        .enumerate()
        .map(|(ri, &pivot)| {
            let row = &sys[ri];
            let denom = free
                .iter()
                .map(|&f| row[f].denom().clone())
                .fold(row[size].denom().clone(), |acc, d| acc.lcm(&d));
            let scaled =
                |x: &BigRational| (x * BigRational::from_integer(denom.clone())).to_integer();
            Ok(PivotRow {
                pivot,
                denom: to_i128(&denom)?,
                constant: to_i128(&scaled(&row[size]))?,
                coeffs: free
                    .iter()
                    .map(|&f| to_i128(&scaled(&row[f])))
                    .collect::<Result<_>>()?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut found = Vec::new();
    let mut values = vec![0i64; free.len()];
    search(&free, &rows, lambda, 0, 0, &mut values, size, &mut found);

    let mut out: Vec<Vec<u64>> = found;
    out.sort();
    out.dedup();
    out.into_iter()
        .map(|counts| {
            debug_assert!(is_macwilliams_fixed_point(
                &WeightDistribution::from_counts(counts.clone()).unwrap()
            ));
            WeightDistribution::from_counts(counts)
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn search(
    free: &[usize],
    rows: &[PivotRow],
    lambda: i64,
    depth: usize,
    used: i64,
    values: &mut Vec<i64>,
    size: usize,
    found: &mut Vec<Vec<u64>>,
) {
    if depth == free.len() {
        let mut x = vec![0u64; size];
        for (f, &v) in free.iter().zip(values.iter()) {
            x[*f] = v as u64;
        }
        for row in rows {
            let num = row.constant
                - row
                    .coeffs
                    .iter()
                    .zip(values.iter())
                    .map(|(c, &v)| c * v as i128)
                    .sum::<i128>();
            if num.is_negative() || num % row.denom != 0 {
                return;
            }
            x[row.pivot] = (num / row.denom) as u64;
        }
        found.push(x);
        return;
    }
    for v in 0..=lambda - used {
        values[depth] = v;
        search(free, rows, lambda, depth + 1, used + v, values, size, found);
    }
    values[depth] = 0;
}
