use super::{BurnsideElement, BurnsideRing, MarkVector};
use crate::error::{Error, Result};
use crate::permgroup::{minimal_generators, Group, Subgroup};

/// The `G`-set `G/H` restricted to `S ≤ G`, in orbit coordinates of `A(S)`.
///
/// `ring` must be built on `S` as a group in its own right (see
/// [`Group::from_subgroup`]). Fixed points are counted directly on the
/// materialized coset space, then converted with the inverse table of marks.
pub fn restrict_ambient(
    g: &Group,
    h: &Subgroup,
    s: &Subgroup,
    ring: &BurnsideRing,
) -> Result<BurnsideElement> {
    g.check_owns(h)?;
    g.check_owns(s)?;
    let s_group = ring.group();
    if s_group.order() != s.order()
        || s.elements()
            .iter()
            .enumerate()
            .any(|(i, &gi)| s_group.element(i) != g.element(gi))
    {
        return Err(Error::Input(
            "Burnside ring was not built on the given subgroup".into(),
        ));
    }

    const UNSET: usize = usize::MAX;
    let mut coset_of = vec![UNSET; g.order()];
    let mut reps = Vec::with_capacity(g.order() / h.order());
    for x in 0..g.order() {
        if coset_of[x] != UNSET {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &y in h.elements() {
            coset_of[g.mul(x, y)] = id;
        }
    }

    let table = ring.table();
    let mut marks = Vec::with_capacity(table.len());
    for class in 0..table.len() {
        let q = table.representative(class);
        let gens: Vec<usize> = minimal_generators(s_group, q)
            .into_iter()
            .map(|i| s.elements()[i])
            .collect();
        let fixed = reps
            .iter()
            .enumerate()
            .filter(|&(c, &x)| gens.iter().all(|&y| coset_of[g.mul(y, x)] == c))
            .count();
        marks.push(fixed as i64);
    }
    let x = ring.marks_to_orbits(&MarkVector::new(marks))?;
    if !x.is_set() {
        return Err(Error::Invariant(
            "restriction of a G-set has a negative orbit count".into(),
        ));
    }
    Ok(x)
}
