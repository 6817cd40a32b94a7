//! The exact weight enumerator `W` of a code and its derivatives.
//!
//! `W` is the 0/1 vector of length `2^n` marking the codewords. The `t`-th
//! derivative `W<t>` has length `2^(n-t)`; its entry at a suffix `v` is the
//! sum of `ρ^wt(u)` over all prefixes `u` of length `t` with `uv` a codeword.
//! `W<0> = W` and `W<n>` is the scalar `Σ A_k ρ^k`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::codes::{LinearCode, WeightDistribution};
use crate::error::{Error, Result};
use crate::quadring::{QuadRat, RhoRecord};
use crate::transform::SpectralVector;

/// Largest `log2` of a dense derivative or indicator that will be allocated.
pub const MAX_DENSE_LOG2: usize = 24;

/// Cell limit of the per-thread count table used by [`derivative`].
pub const COUNT_TABLE_LIMIT: usize = 1 << 20;

/// The exact weight enumerator, stored as the sorted list of codeword labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactEnumerator {
    n: usize,
    support: Vec<u128>,
}

impl ExactEnumerator {
    pub fn length(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> &[u128] {
        &self.support
    }

    /// `W[label]`.
    pub fn entry(&self, label: u128) -> u8 {
        self.support.binary_search(&label).is_ok() as u8
    }

    /// The full `2^n` 0/1 vector.
    pub fn to_dense(&self) -> Result<Vec<u8>> {
        if self.n > MAX_DENSE_LOG2 {
            return Err(Error::ResourceLimit(format!(
                "dense enumerator of length 2^{} exceeds 2^{MAX_DENSE_LOG2}",
                self.n
            )));
        }
        let mut dense = vec![0u8; 1 << self.n];
        for &w in &self.support {
            dense[w as usize] = 1;
        }
        Ok(dense)
    }
}

pub fn exact_enumerator(code: &LinearCode) -> Result<ExactEnumerator> {
    Ok(ExactEnumerator {
        n: code.length(),
        support: code.codewords()?,
    })
}

/// A derivative `W<t>` of the exact weight enumerator of a length-`n` code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivative {
    n: usize,
    order: usize,
    entries: Vec<QuadRat>,
}

#[derive(Serialize, Deserialize)]
struct DerivativeRecord {
    n: usize,
    t: usize,
    entries: Vec<RhoRecord>,
}

impl Derivative {
    /// `entries` must have length `2^(n - order)`, indexed by suffix label.
    pub fn new(n: usize, order: usize, entries: Vec<QuadRat>) -> Result<Self> {
        if order > n {
            return Err(Error::OrderOutOfRange { t: order, n });
        }
        let m = n - order;
        if m > MAX_DENSE_LOG2 || entries.len() != 1usize << m {
            return Err(Error::Parse {
                what: "derivative",
                detail: format!("{} entries for n={n} t={order}", entries.len()),
            });
        }
        Ok(Derivative { n, order, entries })
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of suffix coordinates, `n - t`.
    pub fn suffix_len(&self) -> usize {
        self.n - self.order
    }

    pub fn entries(&self) -> &[QuadRat] {
        &self.entries
    }

    pub fn entry(&self, suffix: usize) -> &QuadRat {
        &self.entries[suffix]
    }

    pub fn entries_mut(&mut self) -> &mut [QuadRat] {
        &mut self.entries
    }

    pub fn into_spectral(self) -> SpectralVector {
        SpectralVector::new(self.entries).expect("derivative length is a power of two")
    }

    pub fn to_spectral(&self) -> SpectralVector {
        SpectralVector::new(self.entries.clone()).expect("derivative length is a power of two")
    }

    /// Collapses to the order-`n` scalar: `Σ_v ρ^wt(v) W<t>[v]`.
    pub fn collapse(&self) -> QuadRat {
        let m = self.suffix_len();
        let powers: Vec<QuadRat> = (0..=m as i32).map(QuadRat::rho_pow).collect();
        self.entries
            .iter()
            .enumerate()
            .map(|(v, e)| e * &powers[v.count_ones() as usize])
            .sum()
    }

    /// Plain-text form: a header `n=<n> t=<t>` and one `<index> <d>*p + <c>` line per entry.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={} t={}\n", self.n, self.order);
        for (i, e) in self.entries.iter().enumerate() {
            let _ = writeln!(out, "{i} {e}");
        }
        out
    }

    /// Structured form `{"n", "t", "entries": [{"const", "rho"}, ...]}`.
    pub fn to_json_value(&self) -> serde_json::Value {
        let rec = DerivativeRecord {
            n: self.n,
            t: self.order,
            entries: self.entries.iter().map(QuadRat::to_record).collect(),
        };
        serde_json::to_value(rec).expect("derivative serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("derivative serializes")
    }

    /// Reads either the plain-text or the JSON form.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            let rec: DerivativeRecord = serde_json::from_str(text).map_err(|e| Error::Parse {
                what: "derivative json",
                detail: e.to_string(),
            })?;
            let entries = rec
                .entries
                .iter()
                .map(QuadRat::from_record)
                .collect::<Result<Vec<_>>>()?;
            return Self::new(rec.n, rec.t, entries);
        }
        let bad = |detail: &str| Error::Parse {
            what: "derivative file",
            detail: detail.to_string(),
        };
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        let mut n = None;
        let mut t = None;
        for field in header.split_whitespace() {
            match field.split_once('=') {
                Some(("n", v)) => n = v.parse::<usize>().ok(),
                Some(("t", v)) => t = v.parse::<usize>().ok(),
                _ => return Err(bad(header)),
            }
        }
        let (n, t) = n.zip(t).ok_or_else(|| bad(header))?;
        let mut entries = Vec::new();
        for (expected, line) in lines.enumerate() {
            let (idx, value) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| bad(line))?;
            if idx.parse::<usize>().ok() != Some(expected) {
                return Err(bad(line));
            }
            entries.push(value.parse::<QuadRat>()?);
        }
        Self::new(n, t, entries)
    }
}

fn check_order(n: usize, t: usize) -> Result<usize> {
    if t > n {
        return Err(Error::OrderOutOfRange { t, n });
    }
    let m = n - t;
    if m > MAX_DENSE_LOG2 {
        return Err(Error::ResourceLimit(format!(
            "derivative of order {t} for length {n} has 2^{m} entries (limit 2^{MAX_DENSE_LOG2})"
        )));
    }
    Ok(m)
}

/// Computes `W<t>` in one pass over the codewords: each codeword `uv`
/// adds `ρ^wt(u)` to the entry at `v`.
///
/// While the `2^(n−t) × (t+1)` table of counts fits in [`COUNT_TABLE_LIMIT`]
/// cells, codewords are tallied by suffix and prefix weight and converted to
/// `Q(√2)` once at the end.
pub fn derivative(code: &LinearCode, t: usize) -> Result<Derivative> {
    let n = code.length();
    let m = check_order(n, t)?;
    let powers: Vec<QuadRat> = (0..=t as i32).map(QuadRat::rho_pow).collect();
    let suffix_mask = (1u128 << m) - 1;
    let width = t + 1;
    if (1usize << m) * width <= COUNT_TABLE_LIMIT {
        let counts = code.fold_codewords(
            || vec![0u64; width << m],
            |table: &mut Vec<u64>, w: u128| {
                table[(w & suffix_mask) as usize * width + (w >> m).count_ones() as usize] += 1;
            },
            |mut a, b| {
                a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
                a
            },
        )?;
        let entries = counts
            .chunks(width)
            .map(|row| {
                row.iter()
                    .zip(&powers)
                    .filter(|(c, _)| **c != 0)
                    .map(|(&c, p)| p * QuadRat::from(c as i64))
                    .sum()
            })
            .collect();
        return Derivative::new(n, t, entries);
    }
    let mut table = vec![QuadRat::zero(); 1 << m];
    code.for_each_codeword(|w| {
        table[(w & suffix_mask) as usize] += &powers[(w >> m).count_ones() as usize]
    })?;
    Derivative::new(n, t, table)
}

/// Computes `W<t>` from a sparse enumerator, same single-pass rule as [`derivative`].
pub fn derivative_of_enumerator(w: &ExactEnumerator, t: usize) -> Result<Derivative> {
    let m = check_order(w.n, t)?;
    let powers: Vec<QuadRat> = (0..=t as i32).map(QuadRat::rho_pow).collect();
    let mut table = vec![QuadRat::zero(); 1 << m];
    for &c in &w.support {
        table[(c & ((1u128 << m) - 1)) as usize] += &powers[(c >> m).count_ones() as usize];
    }
    Derivative::new(w.n, t, table)
}

/// `W<t+1>[v] = W<t>[(0)v] + ρ·W<t>[(1)v]`, halves split by the leading suffix bit.
pub fn derivative_step(d: &Derivative) -> Result<Derivative> {
    if d.order >= d.n {
        return Err(Error::OrderOutOfRange {
            t: d.order + 1,
            n: d.n,
        });
    }
    let half = d.entries.len() / 2;
    let (first, second) = d.entries.split_at(half);
    let entries = first
        .iter()
        .zip(second)
        .map(|(a, b)| a + b.mul_rho())
        .collect();
    Ok(Derivative {
        n: d.n,
        order: d.order + 1,
        entries,
    })
}

/// Checks `W<t>[(1)v̄] = (-1)^wt(v) ρ^t conj(W<t>[(0)v])` for every `v`.
///
/// Holds for codes containing the all-one word. Vacuously true at order `n`.
pub fn check_halves(d: &Derivative) -> bool {
    if d.order >= d.n {
        return true;
    }
    let half = d.entries.len() / 2;
    let rho_t = QuadRat::rho_pow(d.order as i32);
    (0..half).all(|v| {
        let vbar = !v & (half - 1);
        let mut rhs = &rho_t * d.entries[v].conj();
        if v.count_ones() % 2 == 1 {
            rhs = -rhs;
        }
        d.entries[half + vbar] == rhs
    })
}

/// The order-`n` derivative from a weight distribution: `Σ A_k ρ^k`.
pub fn scalar_from_distribution(wd: &WeightDistribution) -> QuadRat {
    wd.counts()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a != 0)
        .map(|(k, &a)| QuadRat::rho_pow(k as i32) * QuadRat::from(a as i64))
        .sum()
}
