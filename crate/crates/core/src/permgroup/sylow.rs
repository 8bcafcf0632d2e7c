use super::group::{minimal_generators, normalizer, Group, Subgroup};
use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

fn power(g: &Group, x: usize, e: u64) -> usize {
    (0..e).fold(Group::IDENTITY, |acc, _| g.mul(acc, x))
}

/// A Sylow `p`-subgroup of `g`.
///
/// Starts from the cyclic group generated by the first element of order `p`
/// and repeatedly adjoins an element of `N_G(P)` whose image in `N_G(P)/P`
/// has order `p`, until `|P|` is the `p`-part of `|G|`. The result depends
/// only on the element ordering, so it is reproducible.
pub fn sylow_subgroup(g: &Group, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::Input(format!("{} is not prime", p)));
    }
    let target = p_part(g.order() as u64, p) as usize;
    if target == 1 {
        return Ok(g.trivial());
    }
    let first = (0..g.order())
        .find(|&x| g.element_order(x) == p)
        .ok_or_else(|| Error::Invariant(format!("no element of order {} (Cauchy)", p)))?;
    let mut sylow = g.subgroup_generated(&[first]);
    while sylow.order() < target {
        let n = normalizer(g, &sylow)?;
        let step = n
            .elements()
            .iter()
            .copied()
            .find(|&y| !sylow.contains(y) && sylow.contains(power(g, y, p)))
            .ok_or_else(|| {
                Error::Invariant(format!(
                    "normalizer of a {}-subgroup of order {} does not grow",
                    p,
                    sylow.order()
                ))
            })?;
        let mut gens = minimal_generators(g, &sylow);
        gens.push(step);
        sylow = g.subgroup_generated(&gens);
    }
    if sylow.order() != target {
        return Err(Error::Invariant(format!(
            "Sylow construction overshot: {} != {}",
            sylow.order(),
            target
        )));
    }
    Ok(sylow)
}
