//! Reports for the short exact sequences `0 → A → Ω̃ → Obs → 0`, and the
//! shared machinery that checks exactness in the middle by sweeping residue
//! vectors.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;

/// Default seed for sampled checks.
pub const DEFAULT_SEED: u64 = 0x5eed_b0b5;
/// Random ghost-ring vectors tested on top of the residue sweep.
pub const RANDOM_SAMPLES: usize = 100;
/// Coordinates of random samples are drawn from `-RANDOM_RANGE..=RANDOM_RANGE`.
pub const RANDOM_RANGE: i64 = 1_000;
/// The residue sweep covers at most this many vectors.
pub const SWEEP_LIMIT: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    /// First offending vector, if any.
    pub witness: Option<Vec<i64>>,
}

impl CheckOutcome {
    pub(crate) fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name,
            passed: true,
            detail: detail.into(),
            witness: None,
        }
    }

    pub(crate) fn fail(
        name: &'static str,
        detail: impl Into<String>,
        witness: Option<Vec<i64>>,
    ) -> Self {
        CheckOutcome {
            name,
            passed: false,
            detail: detail.into(),
            witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SesReport {
    pub title: String,
    pub checks: Vec<CheckOutcome>,
    /// `|Obs| = ∏ |W_S P|`.
    pub obstruction_order: i64,
}

impl SesReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for SesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (|Obs| = {})", self.title, self.obstruction_order)?;
        for c in &self.checks {
            write!(
                f,
                "  {} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )?;
            if let Some(w) = &c.witness {
                write!(f, " witness {:?}", w)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `Ψ` is surjective when its unreduced matrix is lower unitriangular.
pub(crate) fn check_unitriangular(psi_matrix: &[Vec<i64>]) -> CheckOutcome {
    const NAME: &str = "psi surjective";
    for (i, row) in psi_matrix.iter().enumerate() {
        if row[i] != 1 {
            return CheckOutcome::fail(
                NAME,
                format!("diagonal entry {} is {}", i, row[i]),
                Some(row.clone()),
            );
        }
        if let Some(j) = (i + 1..row.len()).find(|&j| row[j] != 0) {
            return CheckOutcome::fail(
                NAME,
                format!("entry ({}, {}) above the diagonal is {}", i, j, row[j]),
                Some(row.clone()),
            );
        }
    }
    CheckOutcome::pass(NAME, "matrix is lower triangular with unit diagonal")
}

/// Exactness at the ghost ring, tested on ghost vectors `ξ` drawn from one
/// full residue box `∏ [0, m_i)` and from seeded random samples:
///
/// * `Ψ(ξ) = 0` must hold exactly when `ξ` lifts;
/// * the projection of `ξ` into `ker Ψ` (adjusting coordinates in order,
///   using that `Ψ` is unitriangular) must lift.
pub(crate) fn check_exactness(
    moduli: &[i64],
    psi_matrix: &[Vec<i64>],
    psi_is_zero: impl Fn(&[i64]) -> Result<bool>,
    lifts: impl Fn(&[i64]) -> Result<bool>,
    seed: u64,
) -> Result<CheckOutcome> {
    const NAME: &str = "ker psi = im phi";
    let n = moduli.len();
    let total = moduli
        .iter()
        .try_fold(1u64, |acc, &m| acc.checked_mul(m as u64))
        .unwrap_or(u64::MAX);
    let sweep = total.min(SWEEP_LIMIT);

    let mut failures = 0u64;
    let mut witness: Option<Vec<i64>> = None;
    let mut kernel_hits = 0u64;
    let mut test = |raw: &[i64]| -> Result<()> {
        let zero = psi_is_zero(raw)?;
        if zero != lifts(raw)? {
            failures += 1;
            witness.get_or_insert_with(|| raw.to_vec());
        }
        if zero {
            kernel_hits += 1;
        }
        let proj = project(raw, moduli, psi_matrix);
        if !psi_is_zero(&proj)? || !lifts(&proj)? {
            failures += 1;
            witness.get_or_insert(proj);
        }
        Ok(())
    };

    let mut r = vec![0i64; n];
    for _ in 0..sweep {
        test(&r)?;
        for (x, &m) in r.iter_mut().zip(moduli) {
            *x += 1;
            if *x < m {
                break;
            }
            *x = 0;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_SAMPLES {
        let v: Vec<i64> = (0..n)
            .map(|_| rng.gen_range(-RANDOM_RANGE..=RANDOM_RANGE))
            .collect();
        test(&v)?;
    }

    let scope = if sweep == total {
        format!("all {} residue vectors", total)
    } else {
        format!("{} of {} residue vectors (sweep truncated)", sweep, total)
    };
    let detail = format!(
        "{} plus {} seeded samples, each tested raw and projected into ker psi ({} raw vectors already in the kernel); {} failures",
        scope, RANDOM_SAMPLES, kernel_hits, failures
    );
    Ok(if failures == 0 {
        CheckOutcome::pass(NAME, detail)
    } else {
        CheckOutcome::fail(NAME, detail, witness)
    })
}

/// Moves `raw` into `ker Ψ` by fixing coordinates top-down: the diagonal
/// coefficient of `Ψ` is 1, so coordinate `i` can absorb the residue of row
/// `i` once the earlier coordinates are fixed.
fn project(raw: &[i64], moduli: &[i64], psi_matrix: &[Vec<i64>]) -> Vec<i64> {
    let mut xi = raw.to_vec();
    for (i, row) in psi_matrix.iter().enumerate() {
        let m = moduli[i] as i128;
        let val: i128 = row
            .iter()
            .zip(&xi)
            .map(|(&a, &x)| a as i128 * x as i128)
            .sum::<i128>()
            .rem_euclid(m);
        xi[i] += ((m - val) % m) as i64;
    }
    xi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projection_lands_in_kernel() {
        // Ψ for C2: rows ([C2]: ξ_C2 mod 1), ([1]: ξ_1 + ξ_C2 mod 2)
        let m = vec![vec![1, 0], vec![1, 1]];
        let moduli = [1, 2];
        let p = project(&[3, 4], &moduli, &m);
        assert_eq!(p, vec![3, 5]);
        assert_eq!((p[0] + p[1]) % 2, 0);
    }

    #[test]
    fn unitriangular_detection() {
        assert!(check_unitriangular(&[vec![1, 0], vec![3, 1]]).passed);
        assert!(!check_unitriangular(&[vec![1, 1], vec![0, 1]]).passed);
        assert!(!check_unitriangular(&[vec![2, 0], vec![0, 1]]).passed);
    }
}
