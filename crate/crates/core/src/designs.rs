//! Order `n − 5` derivatives computed from weight distributions alone.
//!
//! When the supports of the codewords of each weight `w` form a 5-design,
//! the number of weight-`w` codewords that contain a fixed `i`-set of
//! coordinates and avoid a disjoint `j`-set is
//! `λ_{i,j} = b_w · C(n−i−j, w−i) / C(n, w)` for `i + j ≤ 5`. For a suffix
//! `v` of length 5 and weight `i`, those codewords are exactly the ones
//! with suffix `v`, and each contributes `ρ^(w−i)` to `W<n−5>[v]`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::codes::{LinearCode, WeightDistribution};
use crate::enumerator::Derivative;
use crate::error::{Error, Result};
use crate::krawtchouk::binomial;
use crate::quadring::QuadRat;

/// Strength of the designs this module relies on.
pub const STRENGTH: usize = 5;

/// Block counts `b_w` of the 5-designs held by the codewords of weight `w`.
/// The zero and all-one codewords are implicit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DesignProfile {
    n: usize,
    blocks: Vec<(usize, u64)>,
}

/// `λ_{i,j} = b·C(n−i−j, w−i)/C(n, w)`.
pub fn lambda_count(n: usize, w: usize, b: u64, i: usize, j: usize) -> BigRational {
    assert!(i + j <= n);
    if w < i {
        return BigRational::from_integer(BigInt::from(0));
    }
    BigRational::new(BigInt::from(b) * binomial(n - i - j, w - i), binomial(n, w))
}

impl DesignProfile {
    pub fn new(n: usize, blocks: Vec<(usize, u64)>) -> Result<Self> {
        if n < 2 * STRENGTH {
            return Err(Error::InvalidProfile(format!(
                "length {n} below {}",
                2 * STRENGTH
            )));
        }
        for pair in blocks.windows(2) {
            if pair[0].0 >= pair[1].0 {
                return Err(Error::InvalidProfile(
                    "weights must be strictly increasing".into(),
                ));
            }
        }
        if let Some(&(w, _)) = blocks
            .iter()
            .find(|&&(w, _)| w < STRENGTH || w > n - STRENGTH)
        {
            return Err(Error::InvalidProfile(format!(
                "weight {w} outside {STRENGTH}..={}",
                n - STRENGTH
            )));
        }
        Ok(DesignProfile { n, blocks })
    }

    /// Every nonzero weight other than `0` and `n` becomes a design weight.
    pub fn from_distribution(wd: &WeightDistribution) -> Result<Self> {
        let n = wd.length();
        let blocks = wd
            .nonzero()
            .into_iter()
            .filter(|&(k, _)| k != 0 && k != n)
            .collect();
        Self::new(n, blocks)
    }

    pub fn for_code(code: &LinearCode) -> Result<Self> {
        Self::from_distribution(&code.weight_distribution()?)
    }

    /// Parses a header `n=<n>` followed by `<w> <b_w>` lines.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |line: &str| Error::Parse {
            what: "design profile",
            detail: line.to_string(),
        };
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        let n = header
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse::<usize>().ok())
            .ok_or_else(|| bad(header))?;
        let blocks = lines
            .map(|line| {
                let mut it = line.split_whitespace();
                match (it.next(), it.next(), it.next()) {
                    (Some(w), Some(b), None) => Ok((
                        w.parse().map_err(|_| bad(line))?,
                        b.parse().map_err(|_| bad(line))?,
                    )),
                    _ => Err(bad(line)),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, blocks)
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[(usize, u64)] {
        &self.blocks
    }

    /// `λ_{i,j}` for weight `w`, required to be an integer.
    pub fn lambda(&self, w: usize, b: u64, i: usize, j: usize) -> Result<BigInt> {
        let value = lambda_count(self.n, w, b, i, j);
        if !value.is_integer() {
            return Err(Error::DesignViolation {
                w,
                i,
                j,
                value: value.to_string(),
            });
        }
        Ok(value.to_integer())
    }
}

impl fmt::Display for DesignProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        for (w, b) in &self.blocks {
            writeln!(f, "{w} {b}")?;
        }
        Ok(())
    }
}

/// The 32-entry derivative `W<n−5>` determined by the profile.
pub fn derivative_from_designs(profile: &DesignProfile) -> Result<Derivative> {
    let n = profile.n;
    let mut by_weight = Vec::with_capacity(STRENGTH + 1);
    for i in 0..=STRENGTH {
        let mut sum = QuadRat::zero();
        for &(w, b) in &profile.blocks {
            let lambda = profile.lambda(w, b, i, STRENGTH - i)?;
            sum += QuadRat::from(lambda) * QuadRat::rho_pow((w - i) as i32);
        }
        by_weight.push(sum);
    }
    let full = (1usize << STRENGTH) - 1;
    let entries = (0..=full)
        .map(|v| {
            let mut e = by_weight[v.count_ones() as usize].clone();
            if v == 0 {
                e += QuadRat::one();
            }
            if v == full {
                e += QuadRat::rho_pow((n - STRENGTH) as i32);
            }
            e
        })
        .collect();
    Derivative::new(n, n - STRENGTH, entries)
}

/// Weight distribution of a putative `[72, 36, 16]` self-dual code.
///
/// Checked on load: `Σ A_k = 2^36` and `A_k = A_{72−k}`.
pub fn putative72_distribution() -> Result<WeightDistribution> {
    let wd = WeightDistribution::parse_pairs(72, include_str!("../data/putative72.dist"))?;
    if wd.total() != 1u128 << 36 {
        return Err(Error::InvalidCandidate(format!(
            "total {} is not 2^36",
            wd.total()
        )));
    }
    if !wd.is_symmetric() {
        return Err(Error::InvalidCandidate(
            "distribution is not symmetric".into(),
        ));
    }
    Ok(wd)
}

/// The shipped profile file for the putative length-72 code.
pub fn putative72_profile_text() -> &'static str {
    include_str!("../data/putative72.profile")
}

/// Whether `λ_{i,j} ≤ b` for every `i + j ≤ 5`.
pub fn lambdas_bounded(profile: &DesignProfile) -> bool {
    profile.blocks.iter().all(|&(w, b)| {
        (0..=STRENGTH).all(|i| {
            (0..=STRENGTH - i)
                .all(|j| lambda_count(profile.n, w, b, i, j) <= BigRational::from_integer(b.into()))
        })
    })
}
