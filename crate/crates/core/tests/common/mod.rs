//! Independent reference implementations for the integration tests.
//!
//! Elements of `Z[√2]` are `i128` pairs; every value checked here is
//! integral and small enough for 128 bits.

#![allow(dead_code)]

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::path::PathBuf;

/// `a + b√2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Z2 {
    pub a: i128,
    pub b: i128,
}

pub const fn z2(a: i128, b: i128) -> Z2 {
    Z2 { a, b }
}

pub const ONE: Z2 = z2(1, 0);
pub const RHO: Z2 = z2(-1, 1);
pub const MU: Z2 = z2(-1, -1);

impl Add for Z2 {
    type Output = Z2;
    fn add(self, o: Z2) -> Z2 {
        z2(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Z2 {
    type Output = Z2;
    fn sub(self, o: Z2) -> Z2 {
        z2(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Z2 {
    type Output = Z2;
    fn neg(self) -> Z2 {
        z2(-self.a, -self.b)
    }
}

impl Mul for Z2 {
    type Output = Z2;
    fn mul(self, o: Z2) -> Z2 {
        z2(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)
    }
}

impl Z2 {
    pub fn conj(self) -> Z2 {
        z2(self.a, -self.b)
    }

    pub fn scale(self, k: i128) -> Z2 {
        z2(self.a * k, self.b * k)
    }

    pub fn pow(self, e: usize) -> Z2 {
        (0..e).fold(ONE, |acc, _| acc * self)
    }
}

/// `x = c + dρ` printed as `<d>*p + <c>` or `<d>*p - <|c|>`.
impl fmt::Display for Z2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, d) = (self.a + self.b, self.b);
        let sign = if c < 0 { '-' } else { '+' };
        write!(f, "{d}*p {sign} {}", c.abs())
    }
}

pub fn rho_pow(k: usize) -> Z2 {
    RHO.pow(k)
}

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

/// Entries of a listing file: header `n=<n> t=<t>`, then `<index> <value>` lines.
pub fn read_listing(name: &str) -> (usize, usize, Vec<String>) {
    let text = std::fs::read_to_string(data_dir().join("golden").join(name)).unwrap();
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().unwrap();
    let mut n = 0;
    let mut t = 0;
    for field in header.split_whitespace() {
        let (k, v) = field.split_once('=').unwrap();
        match k {
            "n" => n = v.parse().unwrap(),
            "t" => t = v.parse().unwrap(),
            _ => panic!("bad header {header}"),
        }
    }
    let values = lines
        .enumerate()
        .map(|(i, l)| {
            let (idx, value) = l.split_once(' ').unwrap();
            assert_eq!(idx.parse::<usize>().unwrap(), i);
            value.trim().to_string()
        })
        .collect();
    (n, t, values)
}

/// Generator rows read straight from a data file, coordinate 1 as the most
/// significant bit.
pub fn generator_rows(name: &str) -> (usize, Vec<u128>) {
    let text = std::fs::read_to_string(data_dir().join(format!("{name}.gen"))).unwrap();
    let rows: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let n = rows[0].len();
    let bits = rows
        .iter()
        .map(|r| {
            r.chars()
                .fold(0u128, |acc, ch| (acc << 1) | u128::from(ch == '1'))
        })
        .collect();
    (n, bits)
}

/// Calls `f` on every codeword, in Gray-code order.
pub fn for_each_codeword(rows: &[u128], mut f: impl FnMut(u128)) {
    let mut w = 0u128;
    f(w);
    for i in 1u64..1 << rows.len() {
        w ^= rows[i.trailing_zeros() as usize];
        f(w);
    }
}

pub fn codewords(rows: &[u128]) -> Vec<u128> {
    let mut out = Vec::with_capacity(1 << rows.len());
    for_each_codeword(rows, |w| out.push(w));
    out.sort_unstable();
    out
}

/// `W<t>[v] = Σ_u ρ^wt(u) W[uv]` summed over codewords.
pub fn derivative(n: usize, rows: &[u128], t: usize) -> Vec<Z2> {
    let m = n - t;
    let powers: Vec<Z2> = (0..=t).map(rho_pow).collect();
    let mut out = vec![Z2::default(); 1 << m];
    let mask = (1u128 << m) - 1;
    for_each_codeword(rows, |w| {
        let v = (w & mask) as usize;
        out[v] = out[v] + powers[(w >> m).count_ones() as usize];
    });
    out
}

pub fn weight_distribution(n: usize, rows: &[u128]) -> Vec<u64> {
    let mut a = vec![0u64; n + 1];
    for_each_codeword(rows, |w| a[w.count_ones() as usize] += 1);
    a
}

/// `H^[m]·v` with the unnormalized Hadamard matrix.
pub fn hadamard(v: &[Z2]) -> Vec<Z2> {
    let mut out = v.to_vec();
    let mut h = 1;
    while h < out.len() {
        for i in (0..out.len()).step_by(2 * h) {
            for j in i..i + h {
                let (x, y) = (out[j], out[j + h]);
                out[j] = x + y;
                out[j + h] = x - y;
            }
        }
        h *= 2;
    }
    out
}

/// `(√2)^m`.
pub fn sqrt2_pow(m: usize) -> Z2 {
    z2(0, 1).pow(m)
}

/// Whether `v·K^[m] = v`, i.e. `H^[m] v = (√2)^m v`.
pub fn is_fixed(v: &[Z2]) -> bool {
    let m = v.len().trailing_zeros() as usize;
    let s = sqrt2_pow(m);
    hadamard(v).iter().zip(v).all(|(h, x)| *h == s * *x)
}

pub fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// `W<n−5>` from block counts: entry `v` sums `λ_{i,5−i}(w)·ρ^(w−i)` over
/// design weights `w`, with `i = wt(v)`, plus the zero and all-one words.
pub fn design_derivative(n: usize, blocks: &[(usize, i128)]) -> Vec<Z2> {
    (0..32usize)
        .map(|v| {
            let i = v.count_ones() as usize;
            let mut e = Z2::default();
            for &(w, b) in blocks {
                let num = b * binomial(n - 5, w - i);
                let den = binomial(n, w);
                assert_eq!(num % den, 0, "λ not integral for w={w}");
                e = e + rho_pow(w - i).scale(num / den);
            }
            if v == 0 {
                e = e + ONE;
            }
            if v == 31 {
                e = e + rho_pow(n - 5);
            }
            e
        })
        .collect()
}
