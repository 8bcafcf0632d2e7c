use super::{BurnsideRing, MarkVector};
use crate::error::Result;
use crate::permgroup::Group;
use crate::ses::{check_exactness, check_unitriangular, CheckOutcome, SesReport};

/// Checks `0 → A(S) → Ω̃(S) → Obs(S) → 0` on `s`.
pub fn verify_ses_group(s: &Group, seed: u64) -> Result<SesReport> {
    verify_ses_ring(&BurnsideRing::new(s)?, seed)
}

pub(crate) fn verify_ses_ring(ring: &BurnsideRing, seed: u64) -> Result<SesReport> {
    let mut checks = Vec::new();

    let mut bad = None;
    for p in 0..ring.len() {
        let psi = ring.psi(&ring.mark(&ring.transitive(p))?)?;
        if !psi.is_zero() {
            bad = Some((p, psi));
            break;
        }
    }
    checks.push(match bad {
        None => CheckOutcome::pass(
            "psi . phi = 0",
            format!("on all {} transitive sets", ring.len()),
        ),
        Some((p, psi)) => CheckOutcome::fail(
            "psi . phi = 0",
            format!("Psi(Phi([S/{}])) = {}", ring.label(p), psi),
            Some(psi.residues().to_vec()),
        ),
    });

    let psi_matrix = ring.psi_matrix();
    checks.push(check_unitriangular(&psi_matrix));

    checks.push(check_exactness(
        &ring.weyl_orders(),
        &psi_matrix,
        |xi| Ok(ring.psi(&MarkVector::new(xi.to_vec()))?.is_zero()),
        |xi| Ok(ring.marks_to_orbits(&MarkVector::new(xi.to_vec())).is_ok()),
        seed,
    )?);

    Ok(SesReport {
        title: format!("group SES for S of order {}", ring.group().order()),
        checks,
        obstruction_order: ring.obstruction_order()?,
    })
}
