//! Binary linear codes given by generator matrices.
//!
//! Words of length `n ≤ 128` are stored as `u128` labels. Coordinate 1 is the
//! most significant bit of the label, so the lexicographic order of words is
//! the numeric order of labels and the concatenation `uv` of a prefix `u` and
//! a suffix `v` of length `m` is `(u << m) | v`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Longest supported word.
pub const MAX_LENGTH: usize = 128;

/// Largest code dimension that will be enumerated word by word.
pub const MAX_ENUM_DIMENSION: usize = 32;

fn mask(len: usize) -> u128 {
    if len == 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

/// A binary word of fixed length.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BinaryWord {
    len: usize,
    bits: u128,
}

impl BinaryWord {
    /// Bits above `len` are discarded.
    pub fn new(len: usize, bits: u128) -> Result<Self> {
        if len > MAX_LENGTH {
            return Err(Error::ResourceLimit(format!(
                "word length {len} exceeds {MAX_LENGTH}"
            )));
        }
        Ok(BinaryWord {
            len,
            bits: bits & mask(len),
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Lexicographic index, coordinate 1 most significant.
    pub fn index(&self) -> u128 {
        self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn complement(&self) -> Self {
        BinaryWord {
            len: self.len,
            bits: !self.bits & mask(self.len),
        }
    }

    /// Bit at the 1-based coordinate `i`.
    pub fn bit(&self, i: usize) -> bool {
        assert!(i >= 1 && i <= self.len, "coordinate {i} out of range");
        (self.bits >> (self.len - i)) & 1 == 1
    }

    /// `self` followed by `suffix`.
    pub fn concat(&self, suffix: &BinaryWord) -> Result<Self> {
        let len = self.len + suffix.len;
        if len > MAX_LENGTH {
            return Err(Error::ResourceLimit(format!(
                "word length {len} exceeds {MAX_LENGTH}"
            )));
        }
        let shifted = if suffix.len == 128 {
            0
        } else {
            self.bits << suffix.len
        };
        Ok(BinaryWord {
            len,
            bits: shifted | suffix.bits,
        })
    }

    /// Splits into the first `t` coordinates and the remaining ones.
    pub fn split_at(&self, t: usize) -> (BinaryWord, BinaryWord) {
        assert!(t <= self.len);
        let m = self.len - t;
        let prefix = if m == 128 { 0 } else { self.bits >> m };
        (
            BinaryWord {
                len: t,
                bits: prefix,
            },
            BinaryWord {
                len: m,
                bits: self.bits & mask(m),
            },
        )
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() > MAX_LENGTH {
            return Err(Error::MalformedMatrix(format!(
                "row longer than {MAX_LENGTH} bits"
            )));
        }
        let mut bits = 0u128;
        for ch in s.chars() {
            bits = (bits << 1)
                | match ch {
                    '0' => 0,
                    '1' => 1,
                    other => {
                        return Err(Error::MalformedMatrix(format!(
                            "unexpected character {other:?}"
                        )))
                    }
                };
        }
        BinaryWord::new(s.len(), bits)
    }
}

/// Counts `A_0..A_n` of codewords by weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    /// `counts[k] = A_k`; the length is `n + 1`.
    pub fn from_counts(counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidCandidate("empty distribution".into()));
        }
        Ok(WeightDistribution { counts })
    }

    /// Builds a distribution of length `n` from sparse `(k, A_k)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, u64)]) -> Result<Self> {
        let mut counts = vec![0u64; n + 1];
        for &(k, a) in pairs {
            if k > n {
                return Err(Error::InvalidCandidate(format!(
                    "weight {k} exceeds length {n}"
                )));
            }
            counts[k] += a;
        }
        Ok(WeightDistribution { counts })
    }

    /// Parses `<k> <A_k>` lines (comments start with `#`) for a code of length `n`.
    pub fn parse_pairs(n: usize, text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let (Some(k), Some(a), None) = (it.next(), it.next(), it.next()) else {
                return Err(Error::Parse {
                    what: "distribution line",
                    detail: line.to_string(),
                });
            };
            let parse_err = || Error::Parse {
                what: "distribution line",
                detail: line.to_string(),
            };
            pairs.push((
                k.parse().map_err(|_| parse_err())?,
                a.parse().map_err(|_| parse_err())?,
            ));
        }
        Self::from_pairs(n, &pairs)
    }

    /// Parses a comma-separated row `A_0,A_1,...,A_n`.
    pub fn parse_row(line: &str) -> Result<Self> {
        let counts = line
            .split(',')
            .map(|s| {
                s.trim().parse::<u64>().map_err(|_| Error::Parse {
                    what: "distribution row",
                    detail: line.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_counts(counts)
    }

    pub fn length(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, k: usize) -> u64 {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&a| a as u128).sum()
    }

    /// Nonzero `(k, A_k)` pairs in increasing `k`.
    pub fn nonzero(&self) -> Vec<(usize, u64)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(k, &a)| (k, a))
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.length();
        (0..=n).all(|k| self.counts[k] == self.counts[n - k])
    }

    /// `A_0,...,A_n` joined by commas.
    pub fn to_row(&self) -> String {
        self.counts
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Prints `<k,A_k>` pairs with zero counts omitted.
impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nonzero()
            .into_iter()
            .map(|(k, a)| format!("<{k},{a}>"))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Counts `A_{k,δ}` of weight-`k` codewords with bit `δ` at a fixed coordinate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RefinedDistribution {
    coordinate: usize,
    zero: Vec<u64>,
    one: Vec<u64>,
}

impl RefinedDistribution {
    pub fn new(coordinate: usize, zero: Vec<u64>, one: Vec<u64>) -> Result<Self> {
        if zero.len() != one.len() || zero.is_empty() {
            return Err(Error::InvalidCandidate(
                "refined table rows must have equal nonzero length".into(),
            ));
        }
        Ok(RefinedDistribution {
            coordinate,
            zero,
            one,
        })
    }

    pub fn length(&self) -> usize {
        self.zero.len() - 1
    }

    pub fn coordinate(&self) -> usize {
        self.coordinate
    }

    /// `A_{k,δ}`.
    pub fn count(&self, k: usize, bit: bool) -> u64 {
        let row = if bit { &self.one } else { &self.zero };
        row.get(k).copied().unwrap_or(0)
    }

    pub fn zero_row(&self) -> &[u64] {
        &self.zero
    }

    pub fn one_row(&self) -> &[u64] {
        &self.one
    }

    /// `A_k = A_{k,0} + A_{k,1}`.
    pub fn marginal(&self) -> WeightDistribution {
        WeightDistribution {
            counts: self
                .zero
                .iter()
                .zip(&self.one)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// A binary linear code with linearly independent generator rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearCode {
    n: usize,
    rows: Vec<u128>,
}

/// Inserts `word` into an XOR basis kept with distinct leading bits.
/// Returns false when `word` already lies in the span.
fn insert_into_basis(basis: &mut Vec<u128>, mut word: u128) -> bool {
    for &b in basis.iter() {
        let lead = 127 - b.leading_zeros();
        if (word >> lead) & 1 == 1 {
            word ^= b;
        }
    }
    if word == 0 {
        return false;
    }
    let lead = 127 - word.leading_zeros();
    for b in basis.iter_mut() {
        if (*b >> lead) & 1 == 1 {
            *b ^= word;
        }
    }
    basis.push(word);
    basis.sort_unstable_by(|a, b| b.cmp(a));
    true
}

fn reduce(basis: &[u128], mut word: u128) -> u128 {
    for &b in basis {
        let lead = 127 - b.leading_zeros();
        if (word >> lead) & 1 == 1 {
            word ^= b;
        }
    }
    word
}

impl LinearCode {
    /// Rows must be independent.
    pub fn new(n: usize, rows: Vec<u128>) -> Result<Self> {
        if n == 0 || n > MAX_LENGTH {
            return Err(Error::MalformedMatrix(format!(
                "length {n} outside 1..={MAX_LENGTH}"
            )));
        }
        if rows.iter().any(|&r| r & !mask(n) != 0) {
            return Err(Error::MalformedMatrix(format!("row wider than {n} bits")));
        }
        let mut basis = Vec::new();
        let rank = rows
            .iter()
            .filter(|&&r| insert_into_basis(&mut basis, r))
            .count();
        if rank != rows.len() {
            return Err(Error::DependentRows {
                rank,
                rows: rows.len(),
            });
        }
        Ok(LinearCode { n, rows })
    }

    pub fn from_words(rows: &[BinaryWord]) -> Result<Self> {
        let n = rows
            .first()
            .map(BinaryWord::len)
            .ok_or_else(|| Error::MalformedMatrix("no rows".into()))?;
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::MalformedMatrix("rows have different lengths".into()));
        }
        Self::new(n, rows.iter().map(BinaryWord::index).collect())
    }

    /// Parses a generator matrix: one row of `0`/`1` characters per line,
    /// `#` comment lines and blank lines ignored. The length must be even and
    /// the matrix must have `n/2` independent rows.
    pub fn parse_generator(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(BinaryWord::from_str)
            .collect::<Result<Vec<_>>>()?;
        let code = Self::from_words(&rows)?;
        if code.n % 2 != 0 {
            return Err(Error::MalformedMatrix(format!("odd length {}", code.n)));
        }
        if rows.len() != code.n / 2 {
            return Err(Error::MalformedMatrix(format!(
                "{} rows for length {}, expected {}",
                rows.len(),
                code.n,
                code.n / 2
            )));
        }
        Ok(code)
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u128] {
        &self.rows
    }

    pub fn generator_text(&self) -> String {
        self.rows
            .iter()
            .map(|&r| {
                format!(
                    "{}\n",
                    BinaryWord {
                        len: self.n,
                        bits: r
                    }
                )
            })
            .collect()
    }

    pub fn codeword_count(&self) -> u128 {
        1u128 << self.rows.len()
    }

    /// Whether `word` lies in the code.
    pub fn contains(&self, word: u128) -> bool {
        let mut basis = Vec::new();
        for &r in &self.rows {
            insert_into_basis(&mut basis, r);
        }
        reduce(&basis, word) == 0
    }

    /// Same codeword set, possibly different generators.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.n == other.n
            && self.dimension() == other.dimension()
            && other.rows.iter().all(|&r| self.contains(r))
    }

    /// `Ok(())` iff the code equals its dual.
    pub fn check_self_dual(&self) -> Result<()> {
        if !self.n.is_multiple_of(2) || self.dimension() != self.n / 2 {
            return Err(Error::NotSelfDual(format!(
                "dimension {} for length {}",
                self.dimension(),
                self.n
            )));
        }
        for (i, &a) in self.rows.iter().enumerate() {
            for (j, &b) in self.rows.iter().enumerate().skip(i) {
                if (a & b).count_ones() % 2 != 0 {
                    return Err(Error::NotSelfDual(format!(
                        "rows {} and {} have odd intersection",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_self_dual(&self) -> bool {
        self.check_self_dual().is_ok()
    }

    fn check_enumerable(&self) -> Result<()> {
        if self.dimension() > MAX_ENUM_DIMENSION {
            return Err(Error::ResourceLimit(format!(
                "dimension {} exceeds enumeration limit {MAX_ENUM_DIMENSION}",
                self.dimension()
            )));
        }
        Ok(())
    }

    /// Visits every codeword of the message range `[start, start + len)` in
    /// Gray-code order: consecutive words differ by one generator row.
    fn walk_range(&self, start: u64, len: u64, mut f: impl FnMut(u128)) {
        let gray = start ^ (start >> 1);
        let mut word = self
            .rows
            .iter()
            .enumerate()
            .filter(|(j, _)| (gray >> j) & 1 == 1)
            .fold(0u128, |acc, (_, &r)| acc ^ r);
        f(word);
        for i in start + 1..start + len {
            word ^= self.rows[i.trailing_zeros() as usize];
            f(word);
        }
    }

    /// Calls `f` on every codeword, sequentially.
    pub fn for_each_codeword(&self, f: impl FnMut(u128)) -> Result<()> {
        self.check_enumerable()?;
        self.walk_range(0, 1u64 << self.dimension(), f);
        Ok(())
    }

    /// Folds over all codewords in parallel over disjoint message ranges.
    /// `merge` must be commutative so the result does not depend on scheduling.
    pub fn fold_codewords<A, I, F, M>(&self, init: I, fold: F, merge: M) -> Result<A>
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(&mut A, u128) + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        self.check_enumerable()?;
        let k = self.dimension();
        let split = k.min(6);
        let chunk = 1u64 << (k - split);
        let acc = (0..1u64 << split)
            .into_par_iter()
            .map(|c| {
                let mut acc = init();
                self.walk_range(c * chunk, chunk, |w| fold(&mut acc, w));
                acc
            })
            .reduce(&init, &merge);
        Ok(acc)
    }

    /// All codeword labels in increasing order.
    pub fn codewords(&self) -> Result<Vec<u128>> {
        let mut out = Vec::with_capacity(1usize << self.dimension().min(MAX_ENUM_DIMENSION));
        self.for_each_codeword(|w| out.push(w))?;
        out.sort_unstable();
        Ok(out)
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        let n = self.n;
        let counts = self.fold_codewords(
            || vec![0u64; n + 1],
            |acc, w| acc[w.count_ones() as usize] += 1,
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )?;
        Ok(WeightDistribution { counts })
    }

    /// Smallest nonzero weight, `None` for the zero code.
    pub fn min_weight(&self) -> Result<Option<usize>> {
        let wd = self.weight_distribution()?;
        Ok((1..=self.n).find(|&k| wd.count(k) > 0))
    }

    /// `A_{k,δ}` for the 1-based `coordinate`.
    pub fn refined_distribution(&self, coordinate: usize) -> Result<RefinedDistribution> {
        let n = self.n;
        if coordinate == 0 || coordinate > n {
            return Err(Error::CoordinateOutOfRange { coordinate, n });
        }
        let shift = n - coordinate;
        let (zero, one) = self.fold_codewords(
            || (vec![0u64; n + 1], vec![0u64; n + 1]),
            |acc, w| {
                let k = w.count_ones() as usize;
                if (w >> shift) & 1 == 1 {
                    acc.1[k] += 1;
                } else {
                    acc.0[k] += 1;
                }
            },
            |mut a, b| {
                a.0.iter_mut().zip(b.0).for_each(|(x, y)| *x += y);
                a.1.iter_mut().zip(b.1).for_each(|(x, y)| *x += y);
                a
            },
        )?;
        RefinedDistribution::new(coordinate, zero, one)
    }
}

/// Recovers a code from the 0/1 indicator of its codeword set, a vector of
/// length `2^n` indexed by word labels.
///
/// The support must be a subspace of size `2^(n/2)` that is self-dual.
pub fn code_from_indicator(indicator: &[u8]) -> Result<LinearCode> {
    let len = indicator.len();
    if !len.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(len));
    }
    if indicator.iter().any(|&x| x > 1) {
        return Err(Error::NotZeroOne);
    }
    let n = len.trailing_zeros() as usize;
    let support: Vec<u128> = indicator
        .iter()
        .enumerate()
        .filter(|(_, &x)| x == 1)
        .map(|(i, _)| i as u128)
        .collect();
    code_from_support(n, &support)
}

/// As [`code_from_indicator`], from the list of labels with entry 1.
pub fn code_from_support(n: usize, support: &[u128]) -> Result<LinearCode> {
    if support.is_empty() {
        return Err(Error::ZeroIndicator);
    }
    if !n.is_multiple_of(2) {
        return Err(Error::NotSelfDual(format!("odd length {n}")));
    }
    let expected = 1usize << (n / 2);
    if support.len() != expected {
        return Err(Error::WrongSupportSize {
            found: support.len(),
            expected,
        });
    }
    // |support| = 2^(n/2) and support ⊆ span, so closure holds iff rank = n/2.
    let mut basis = Vec::new();
    for &w in support {
        if insert_into_basis(&mut basis, w) && basis.len() > n / 2 {
            return Err(Error::NotClosed);
        }
    }
    if !support.contains(&0) || basis.len() != n / 2 {
        return Err(Error::NotClosed);
    }
    let code = LinearCode::new(n, basis)?;
    code.check_self_dual()?;
    Ok(code)
}

/// The codes shipped with the library.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum BuiltinCode {
    /// Extended Hamming [8,4,4].
    E8,
    /// Direct sum of four [2,1,2] repetition codes.
    C2x4,
    /// Extended binary Golay [24,12,8].
    Golay24,
    /// Extended quadratic residue [48,24,12].
    Qr48,
}

impl BuiltinCode {
    pub const ALL: [BuiltinCode; 4] = [
        BuiltinCode::E8,
        BuiltinCode::C2x4,
        BuiltinCode::Golay24,
        BuiltinCode::Qr48,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinCode::E8 => "e8",
            BuiltinCode::C2x4 => "c2x4",
            BuiltinCode::Golay24 => "golay24",
            BuiltinCode::Qr48 => "qr48",
        }
    }

    fn generator_text(self) -> &'static str {
        match self {
            BuiltinCode::E8 => include_str!("../data/e8.gen"),
            BuiltinCode::C2x4 => include_str!("../data/c2x4.gen"),
            BuiltinCode::Golay24 => include_str!("../data/golay24.gen"),
            BuiltinCode::Qr48 => include_str!("../data/qr48.gen"),
        }
    }

    pub fn min_weight(self) -> usize {
        match self {
            BuiltinCode::E8 => 4,
            BuiltinCode::C2x4 => 2,
            BuiltinCode::Golay24 => 8,
            BuiltinCode::Qr48 => 12,
        }
    }

    /// Expected nonzero `(k, A_k)` pairs, where they are pinned.
    pub fn expected_distribution(self) -> Option<&'static [(usize, u64)]> {
        match self {
            BuiltinCode::E8 => Some(&[(0, 1), (4, 14), (8, 1)]),
            BuiltinCode::C2x4 => Some(&[(0, 1), (2, 4), (4, 6), (6, 4), (8, 1)]),
            BuiltinCode::Golay24 => Some(&[(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)]),
            BuiltinCode::Qr48 => Some(&[
                (0, 1),
                (12, 17296),
                (16, 535095),
                (20, 3995376),
                (24, 7681680),
                (28, 3995376),
                (32, 535095),
                (36, 17296),
                (48, 1),
            ]),
        }
    }

    /// [`Self::expected_distribution`] as a [`WeightDistribution`].
    pub fn pinned_distribution(self) -> Option<WeightDistribution> {
        let n = match self {
            BuiltinCode::Golay24 => 24,
            BuiltinCode::Qr48 => 48,
            _ => 8,
        };
        self.expected_distribution()
            .map(|pairs| WeightDistribution::from_pairs(n, pairs).expect("pinned pairs are valid"))
    }

    /// Loads and validates the generator matrix.
    ///
    /// Self-duality is always checked. For the codes of length at most 24 the
    /// full weight distribution is enumerated and compared as well; the
    /// 2^24-word check for `qr48` lives in the test suite.
    pub fn load(self) -> Result<LinearCode> {
        let code = LinearCode::parse_generator(self.generator_text())?;
        code.check_self_dual()?;
        if code.dimension() <= 12 {
            let expected = self.pinned_distribution().expect("every builtin is pinned");
            let actual = code.weight_distribution()?;
            if actual != expected {
                return Err(Error::MalformedMatrix(format!(
                    "{} has distribution {actual}, expected {expected}",
                    self.name()
                )));
            }
        }
        Ok(code)
    }
}

impl FromStr for BuiltinCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BuiltinCode::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCode(s.to_string()))
    }
}

impl fmt::Display for BuiltinCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Loads a built-in code by name.
pub fn builtin_code(name: &str) -> Result<LinearCode> {
    name.parse::<BuiltinCode>()?.load()
}
