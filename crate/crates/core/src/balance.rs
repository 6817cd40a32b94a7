//! The balance principle for self-dual codes.
//!
//! For any coordinate `t` of a self-dual code of length `n`,
//!
//! ```text
//! Σ_k A_{k,1} ρ^(k−1) = Σ_k A_{k,0} ρ^(k+1) = (1+ρ)/4 · W<n>
//! ```
//!
//! where `A_{k,δ}` counts the weight-`k` codewords with bit `δ` at `t`. The
//! common value does not depend on `t`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::codes::{LinearCode, RefinedDistribution, WeightDistribution};
use crate::enumerator::scalar_from_distribution;
use crate::error::{Error, Result};
use crate::quadring::QuadRat;

/// The three sides of the balance identity for one coordinate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BalanceReport {
    pub coordinate: usize,
    /// `Σ A_{k,1} ρ^(k−1)`.
    pub lhs: QuadRat,
    /// `Σ A_{k,0} ρ^(k+1)`.
    pub rhs: QuadRat,
    /// `(1+ρ)/4 · W<n>`.
    pub target: QuadRat,
}

impl BalanceReport {
    pub fn lhs_equals_rhs(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn lhs_equals_target(&self) -> bool {
        self.lhs == self.target
    }

    pub fn passes(&self) -> bool {
        self.lhs_equals_rhs() && self.lhs_equals_target()
    }

    /// `(lhs − rhs, lhs − target)`.
    pub fn residuals(&self) -> (QuadRat, QuadRat) {
        (&self.lhs - &self.rhs, &self.lhs - &self.target)
    }
}

/// `(1+ρ)/4 = (1/4)·√2`.
pub fn balance_constant() -> QuadRat {
    QuadRat::new(BigRational::zero(), BigRational::new(1.into(), 4.into()))
}

fn weighted_sum(rows: &[BigRational], shift: i32) -> QuadRat {
    rows.iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(k, a)| QuadRat::rho_pow(k as i32 + shift) * QuadRat::from(a.clone()))
        .sum()
}

/// Evaluates the identity on a table with rational entries.
pub fn balance_from_rows(
    coordinate: usize,
    zero: &[BigRational],
    one: &[BigRational],
) -> BalanceReport {
    let marginal: Vec<BigRational> = zero.iter().zip(one).map(|(a, b)| a + b).collect();
    BalanceReport {
        coordinate,
        lhs: weighted_sum(one, -1),
        rhs: weighted_sum(zero, 1),
        target: balance_constant() * weighted_sum(&marginal, 0),
    }
}

/// Evaluates the identity on an integer refined table.
pub fn balance_from_table(table: &RefinedDistribution) -> BalanceReport {
    let conv = |row: &[u64]| -> Vec<BigRational> {
        row.iter()
            .map(|&a| BigRational::from_integer(a.into()))
            .collect()
    };
    let report = balance_from_rows(
        table.coordinate(),
        &conv(table.zero_row()),
        &conv(table.one_row()),
    );
    debug_assert_eq!(
        report.target,
        balance_constant() * scalar_from_distribution(&table.marginal())
    );
    report
}

/// Verifies the balance identity on `code` at the 1-based `coordinate`.
pub fn balance_check(code: &LinearCode, coordinate: usize) -> Result<BalanceReport> {
    code.check_self_dual()?;
    Ok(balance_from_table(&code.refined_distribution(coordinate)?))
}

/// Reports for every coordinate `1..=n`.
pub fn balance_all(code: &LinearCode) -> Result<Vec<BalanceReport>> {
    code.check_self_dual()?;
    (1..=code.length())
        .map(|t| Ok(balance_from_table(&code.refined_distribution(t)?)))
        .collect()
}

/// How the length-8 balance equation resolved for a candidate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Resolution {
    /// The unique rational `y = A_{2,0}`.
    Solved(BigRational),
    /// The two component equations over the basis `(1, √2)` disagree, or the
    /// solved `y` does not also satisfy the `(1+ρ)/4·W<n>` identity.
    Inconsistent,
    /// The equation does not involve `y` and holds identically.
    Underdetermined,
}

/// Outcome of the balance test on one candidate weight distribution of length 8.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EliminationVerdict {
    pub candidate: WeightDistribution,
    pub resolution: Resolution,
    pub survives: bool,
}

impl EliminationVerdict {
    pub fn y(&self) -> Option<&BigRational> {
        match &self.resolution {
            Resolution::Solved(y) => Some(y),
            _ => None,
        }
    }

    /// The refined table `(A_{k,0}, A_{k,1})` implied by the solved `y`.
    pub fn implied_table(&self) -> Option<(Vec<BigRational>, Vec<BigRational>)> {
        self.y().map(|y| length8_table(&self.candidate, y))
    }

    /// One line: `<A_0,...,A_8> y=<y> SURVIVES|ELIMINATED` or a rejection reason.
    pub fn to_line(&self) -> String {
        let row = self.candidate.to_row();
        match &self.resolution {
            Resolution::Solved(y) => format!(
                "{row} y={y} {}",
                if self.survives {
                    "SURVIVES"
                } else {
                    "ELIMINATED"
                }
            ),
            Resolution::Inconsistent => format!("{row} y=- ELIMINATED (no solution)"),
            Resolution::Underdetermined => format!("{row} y=- UNDETERMINED"),
        }
    }
}

/// The parametrized table: `A_{0,0}=1, A_{2,0}=y, A_{4,0}=A_4/2,
/// A_{6,0}=A_2−y, A_{8,0}=0`, with `A_{k,1} = A_{8−k,0}`.
fn length8_table(wd: &WeightDistribution, y: &BigRational) -> (Vec<BigRational>, Vec<BigRational>) {
    let r = |v: u64| BigRational::from_integer(BigInt::from(v));
    let a2 = r(wd.count(2));
    let half_a4 = r(wd.count(4)) / r(2);
    let zero = vec![
        r(1),
        r(0),
        y.clone(),
        r(0),
        half_a4,
        r(0),
        &a2 - y,
        r(0),
        r(0),
    ];
    let one = zero.iter().rev().cloned().collect();
    (zero, one)
}

fn validate_length8(wd: &WeightDistribution) -> Result<()> {
    let bad = |why: &str| Err(Error::InvalidCandidate(format!("{}: {why}", wd.to_row())));
    if wd.length() != 8 {
        return bad("length must be 8");
    }
    if wd.count(0) != 1 {
        return bad("A_0 must be 1");
    }
    if !wd.is_symmetric() {
        return bad("A_k must equal A_(8-k)");
    }
    if (1..=7).step_by(2).any(|k| wd.count(k) != 0) {
        return bad("odd weights must be absent");
    }
    if wd.total() != 16 {
        return bad("counts must sum to 16");
    }
    Ok(())
}

/// Solves the balance equation for `y = A_{2,0}` on a length-8 candidate
/// and decides whether a self-dual code could realize it.
pub fn eliminate_length8(candidate: &WeightDistribution) -> Result<EliminationVerdict> {
    validate_length8(candidate)?;
    let verdict = |resolution, survives| EliminationVerdict {
        candidate: candidate.clone(),
        resolution,
        survives,
    };
    // symmetry and a total of 16 force A_4 = 14 − 2·A_2, so A_4/2 is integral
    // lhs − rhs is affine in y: f(y) = f(0) + y·(f(1) − f(0)).
    let residual = |y: &BigRational| {
        let (zero, one) = length8_table(candidate, y);
        let report = balance_from_rows(8, &zero, &one);
        &report.lhs - &report.rhs
    };
    let f0 = residual(&BigRational::zero());
    let slope = residual(&BigRational::from_integer(1.into())) - &f0;
    let (sa, sb) = (slope.rational_part(), slope.sqrt2_part());
    let (fa, fb) = (f0.rational_part(), f0.sqrt2_part());

    let y = if !sa.is_zero() {
        -&fa / &sa
    } else if !sb.is_zero() {
        -&fb / &sb
    } else if f0.is_zero() {
        return Ok(verdict(Resolution::Underdetermined, false));
    } else {
        return Ok(verdict(Resolution::Inconsistent, false));
    };
    // both (1, √2) components must vanish at the same y
    if &sa * &y + &fa != BigRational::zero() || &sb * &y + &fb != BigRational::zero() {
        return Ok(verdict(Resolution::Inconsistent, false));
    }
    let (zero, one) = length8_table(candidate, &y);
    if !balance_from_rows(8, &zero, &one).passes() {
        return Ok(verdict(Resolution::Inconsistent, false));
    }
    let survives = zero
        .iter()
        .chain(&one)
        .all(|a| a.is_integer() && !a.is_negative());
    Ok(verdict(Resolution::Solved(y), survives))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{builtin_code, BuiltinCode};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn row(s: &str) -> WeightDistribution {
        WeightDistribution::parse_row(s).unwrap()
    }

    #[test]
    fn constant_identity() {
        let rho = QuadRat::rho();
        let quarter = QuadRat::from(rat(1, 4));
        assert_eq!(balance_constant(), (QuadRat::one() + &rho) * quarter);
        let alt = rho.checked_div(&(QuadRat::one() + rho.pow(2))).unwrap();
        assert_eq!(balance_constant(), alt);
    }

    #[test]
    fn golay_first_coordinate() {
        let g = builtin_code("golay24").unwrap();
        let table = g.refined_distribution(1).unwrap();
        assert_eq!((table.count(8, true), table.count(16, true)), (253, 506));
        let report = balance_check(&g, 1).unwrap();
        assert!(report.passes());
    }

    #[test]
    fn e8_identity() {
        let e8 = builtin_code("e8").unwrap();
        let rho = QuadRat::rho_pow;
        let seven = QuadRat::from(7);
        let lhs = &seven * rho(3) + rho(7);
        assert_eq!(lhs, rho(1) + &seven * rho(5));
        let w = QuadRat::one() + QuadRat::from(14) * rho(4) + rho(8);
        assert_eq!(lhs, balance_constant() * w);
        for t in 1..=8 {
            let report = balance_check(&e8, t).unwrap();
            assert!(report.passes());
            assert_eq!(report.lhs, lhs);
        }
    }

    #[test]
    fn independent_of_coordinate() {
        for b in [BuiltinCode::E8, BuiltinCode::C2x4, BuiltinCode::Golay24] {
            let reports = balance_all(&b.load().unwrap()).unwrap();
            assert!(reports.iter().all(BalanceReport::passes));
            assert!(reports.iter().all(|r| r.lhs == reports[0].lhs));
        }
    }

    #[test]
    fn unbalanced_table_is_reported() {
        let table = RefinedDistribution::new(1, vec![1, 0, 1, 0, 0], vec![0, 0, 0, 0, 1]).unwrap();
        let report = balance_from_table(&table);
        assert!(!report.passes());
        let (r1, _) = report.residuals();
        assert!(!r1.is_zero());
    }

    #[test]
    fn non_self_dual_rejected() {
        let code = LinearCode::parse_generator("1000\n0100\n").unwrap();
        assert!(matches!(
            balance_check(&code, 1),
            Err(Error::NotSelfDual(_))
        ));
    }

    #[test]
    fn candidate_y_values() {
        let cases = [
            ("1,0,0,0,14,0,0,0,1", rat(0, 1), true),
            ("1,0,1,0,12,0,1,0,1", rat(3, 4), false),
            ("1,0,2,0,10,0,2,0,1", rat(3, 2), false),
            ("1,0,3,0,8,0,3,0,1", rat(9, 4), false),
            ("1,0,4,0,6,0,4,0,1", rat(3, 1), true),
            ("1,0,5,0,4,0,5,0,1", rat(15, 4), false),
            ("1,0,6,0,2,0,6,0,1", rat(9, 2), false),
            ("1,0,7,0,0,0,7,0,1", rat(21, 4), false),
        ];
        for (candidate, y, survives) in cases {
            let v = eliminate_length8(&row(candidate)).unwrap();
            assert_eq!(v.y(), Some(&y), "{candidate}");
            assert_eq!(v.survives, survives, "{candidate}");
        }
    }

    #[test]
    fn survivors_match_builtin_tables() {
        for b in [BuiltinCode::E8, BuiltinCode::C2x4] {
            let code = b.load().unwrap();
            let v = eliminate_length8(&code.weight_distribution().unwrap()).unwrap();
            assert!(v.survives);
            let (zero, one) = v.implied_table().unwrap();
            for t in 1..=8 {
                let table = code.refined_distribution(t).unwrap();
                let z: Vec<BigRational> =
                    table.zero_row().iter().map(|&a| rat(a as i64, 1)).collect();
                let o: Vec<BigRational> =
                    table.one_row().iter().map(|&a| rat(a as i64, 1)).collect();
                assert_eq!((&zero, &one), (&z, &o), "{b} t={t}");
            }
        }
    }

    #[test]
    fn candidate_validation() {
        assert!(matches!(
            eliminate_length8(&row("1,0,0,0,14,0,0,1")),
            Err(Error::InvalidCandidate(_))
        ));
        assert!(eliminate_length8(&row("2,0,0,0,12,0,0,0,2")).is_err());
        assert!(eliminate_length8(&row("1,0,2,0,10,0,1,0,2")).is_err());
        assert!(eliminate_length8(&row("1,1,0,0,12,0,0,1,1")).is_err());
        assert!(eliminate_length8(&row("1,0,0,0,13,0,0,0,1")).is_err());
    }

    #[test]
    fn resolution_is_solved_for_every_valid_candidate() {
        for a2 in 0..=7u64 {
            let wd = WeightDistribution::from_counts(vec![1, 0, a2, 0, 14 - 2 * a2, 0, a2, 0, 1])
                .unwrap();
            let v = eliminate_length8(&wd).unwrap();
            assert_eq!(v.y(), Some(&rat(3 * a2 as i64, 4)));
            assert!(v.to_line().starts_with(&wd.to_row()));
        }
    }
}
