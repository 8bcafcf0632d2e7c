use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use super::perm::Permutation;
use crate::error::{Error, Result};

/// Desk-scale size caps. Exceeding any of them is an explicit error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group `generate_group` will close.
    pub max_group_order: usize,
    /// Largest group whose full subgroup lattice will be enumerated.
    pub max_enumeration_order: usize,
    /// Largest number of subgroups an enumeration may produce.
    pub max_subgroups: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group_order: 10_000,
            max_enumeration_order: 64,
            max_subgroups: 4_096,
        }
    }
}

/// Groups up to this order keep a full multiplication table.
const TABLE_ORDER: usize = 1_024;

/// A finite permutation group with its complete, sorted element list.
///
/// Elements are addressed by their index in the sorted list, so index 0 is
/// always the identity. The ordering depends only on the element set, never
/// on the generators used to build it.
#[derive(Clone)]
pub struct Group {
    id: u64,
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.elements.len())
            .field("generators", &self.generators)
            .finish()
    }
}

/// A subgroup of a [`Group`], stored as the sorted list of parent element
/// indices. The sorted index list doubles as the canonical subgroup key.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    group_id: u64,
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, element: usize) -> bool {
        self.elements.binary_search(&element).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.group_id == other.group_id && self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn group_id(&self) -> u64 {
        self.group_id
    }
}

/// Closes `generators` under composition.
///
/// Uses the default [`Limits`]; see [`generate_group_with`].
pub fn generate_group(degree: usize, generators: &[Permutation]) -> Result<Group> {
    generate_group_with(degree, generators, &Limits::default())
}

pub fn generate_group_with(
    degree: usize,
    generators: &[Permutation],
    limits: &Limits,
) -> Result<Group> {
    if degree == 0 {
        return Err(Error::Input("degree must be at least 1".into()));
    }
    for g in generators {
        if g.degree() != degree {
            return Err(Error::Input(format!(
                "generator {} has degree {}, expected {}",
                g,
                g.degree(),
                degree
            )));
        }
    }
    let identity = Permutation::identity(degree);
    let mut seen: HashMap<Permutation, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone(), ());
    queue.push_back(identity);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.compose(g);
            if !seen.contains_key(&y) {
                if seen.len() >= limits.max_group_order {
                    return Err(Error::Size {
                        what: "group",
                        actual: seen.len() + 1,
                        limit: limits.max_group_order,
                    });
                }
                seen.insert(y.clone(), ());
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_keys().collect();
    elements.sort();
    Ok(Group::from_sorted_elements(
        degree,
        generators.to_vec(),
        elements,
    ))
}

impl Group {
    fn from_sorted_elements(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
    ) -> Group {
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let mut hasher = DefaultHasher::new();
        degree.hash(&mut hasher);
        elements.hash(&mut hasher);
        let n = elements.len();
        let table = (n <= TABLE_ORDER).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.compose(b)] as u32);
                }
            }
            t
        });
        Group {
            id: hasher.finish(),
            degree,
            generators,
            elements,
            index,
            inverses,
            table,
        }
    }

    /// The subgroup `sub` of `parent` as a group in its own right.
    ///
    /// Because both element lists are sorted, element `i` of the result is
    /// `parent` element `sub.elements()[i]`.
    pub fn from_subgroup(parent: &Group, sub: &Subgroup) -> Result<Group> {
        parent.check_owns(sub)?;
        let elements: Vec<Permutation> = sub
            .elements
            .iter()
            .map(|&i| parent.elements[i].clone())
            .collect();
        let gens = minimal_generators(parent, sub)
            .into_iter()
            .map(|i| parent.elements[i].clone())
            .collect();
        Ok(Group::from_sorted_elements(parent.degree, gens, elements))
    }

    /// Fingerprint of (degree, element set); subgroups carry it to detect
    /// mismatched parents.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub const IDENTITY: usize = 0;

    /// Index of `a ∘ b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Index of `g x g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverses[g])
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.elements[a].order()
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            group_id: self.id,
            elements: (0..self.order()).collect(),
        }
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup {
            group_id: self.id,
            elements: vec![Self::IDENTITY],
        }
    }

    /// The subgroup generated by the given element indices.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order()];
        let mut elems = vec![Self::IDENTITY];
        member[Self::IDENTITY] = true;
        let mut k = 0;
        while k < elems.len() {
            let x = elems[k];
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    elems.push(y);
                }
            }
            k += 1;
        }
        elems.sort_unstable();
        Subgroup {
            group_id: self.id,
            elements: elems,
        }
    }

    /// Wraps an element list as a subgroup after checking closure.
    pub fn subgroup_from_elements(&self, mut elements: Vec<usize>) -> Result<Subgroup> {
        elements.sort_unstable();
        elements.dedup();
        if elements.iter().any(|&x| x >= self.order()) {
            return Err(Error::Input("element index out of range".into()));
        }
        let sub = Subgroup {
            group_id: self.id,
            elements,
        };
        if !sub.contains(Self::IDENTITY) {
            return Err(Error::Input("subgroup must contain the identity".into()));
        }
        for &a in &sub.elements {
            for &b in &sub.elements {
                if !sub.contains(self.mul(a, b)) {
                    return Err(Error::Input("element list is not closed".into()));
                }
            }
        }
        Ok(sub)
    }

    /// Subgroup generated by permutations, looked up in this group.
    pub fn subgroup_from_permutations(&self, gens: &[Permutation]) -> Result<Subgroup> {
        let idx = gens
            .iter()
            .map(|p| {
                self.index_of(p)
                    .ok_or_else(|| Error::Input(format!("{} is not an element of the group", p)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup_generated(&idx))
    }

    /// `g P g⁻¹`.
    pub fn conjugate_subgroup(&self, g: usize, p: &Subgroup) -> Subgroup {
        let mut elements: Vec<usize> = p.elements.iter().map(|&x| self.conj(g, x)).collect();
        elements.sort_unstable();
        Subgroup {
            group_id: self.id,
            elements,
        }
    }

    /// True if `g Q g⁻¹ ≤ P`.
    pub fn conjugates_into(&self, g: usize, q: &Subgroup, p: &Subgroup) -> bool {
        q.elements.iter().all(|&x| p.contains(self.conj(g, x)))
    }

    /// Wraps an element list known to be a subgroup.
    pub(crate) fn subgroup_unchecked(&self, mut elements: Vec<usize>) -> Subgroup {
        elements.sort_unstable();
        Subgroup {
            group_id: self.id,
            elements,
        }
    }

    pub(crate) fn check_owns(&self, sub: &Subgroup) -> Result<()> {
        if sub.group_id != self.id {
            return Err(Error::Input(
                "subgroup belongs to a different parent group".into(),
            ));
        }
        Ok(())
    }
}

/// Greedy generating set: walk the elements in order, keep any element not
/// yet in the span of those already kept.
pub fn minimal_generators(group: &Group, sub: &Subgroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = group.trivial();
    for &x in &sub.elements {
        if !span.contains(x) {
            gens.push(x);
            span = group.subgroup_generated(&gens);
            if span.order() == sub.order() {
                break;
            }
        }
    }
    gens
}

/// All `g ∈ G` with `g Q g⁻¹ ≤ P`, in element order.
pub fn transporter(g: &Group, q: &Subgroup, p: &Subgroup) -> Result<Vec<usize>> {
    g.check_owns(q)?;
    g.check_owns(p)?;
    if q.order() > p.order() {
        return Ok(Vec::new());
    }
    let gens = minimal_generators(g, q);
    Ok((0..g.order())
        .filter(|&x| gens.iter().all(|&y| p.contains(g.conj(x, y))))
        .collect())
}

pub fn normalizer(g: &Group, p: &Subgroup) -> Result<Subgroup> {
    let elements = transporter(g, p, p)?;
    Ok(Subgroup {
        group_id: g.id,
        elements,
    })
}

pub fn centralizer(g: &Group, p: &Subgroup) -> Result<Subgroup> {
    g.check_owns(p)?;
    let gens = minimal_generators(g, p);
    let elements = (0..g.order())
        .filter(|&x| gens.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
        .collect();
    Ok(Subgroup {
        group_id: g.id,
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    fn d8() -> Group {
        generate_group(4, &[perm(4, "(1 2 3 4)"), perm(4, "(1 3)")]).unwrap()
    }

    #[test]
    fn small_closures() {
        assert_eq!(generate_group(2, &[perm(2, "(1 2)")]).unwrap().order(), 2);
        assert_eq!(d8().order(), 8);
        let trivial = generate_group(3, &[]).unwrap();
        assert_eq!(trivial.order(), 1);
        assert!(trivial.element(0).is_identity());
    }

    #[test]
    fn generation_errors() {
        assert!(matches!(generate_group(0, &[]), Err(Error::Input(_))));
        assert!(matches!(
            generate_group(3, &[perm(2, "(1 2)")]),
            Err(Error::Input(_))
        ));
        let limits = Limits {
            max_group_order: 100,
            ..Limits::default()
        };
        let s5 = [perm(5, "(1 2)"), perm(5, "(1 2 3 4 5)")];
        assert!(matches!(
            generate_group_with(5, &s5, &limits),
            Err(Error::Size { .. })
        ));
    }

    #[test]
    fn element_order_is_generator_independent() {
        let a = d8();
        let b = generate_group(4, &[perm(4, "(1 3)"), perm(4, "(1 2)(3 4)")]).unwrap();
        assert_eq!(a.elements(), b.elements());
        assert_eq!(a.id(), b.id());
    }

    #[test]
    fn normalizer_of_reflection_in_d8() {
        let g = d8();
        let s = g.subgroup_from_permutations(&[perm(4, "(1 3)")]).unwrap();
        assert_eq!(normalizer(&g, &s).unwrap().order(), 4);
        assert_eq!(centralizer(&g, &s).unwrap().order(), 4);
        let whole = g.whole();
        assert_eq!(transporter(&g, &whole, &whole).unwrap().len(), 8);
        assert_eq!(normalizer(&g, &whole).unwrap(), whole);
    }

    #[test]
    fn transporter_empty_when_not_subconjugate() {
        let g = d8();
        let refl = g.subgroup_from_permutations(&[perm(4, "(1 3)")]).unwrap();
        let other = g
            .subgroup_from_permutations(&[perm(4, "(1 2)(3 4)")])
            .unwrap();
        assert!(transporter(&g, &refl, &other).unwrap().is_empty());
        let c4 = g
            .subgroup_from_permutations(&[perm(4, "(1 2 3 4)")])
            .unwrap();
        assert!(transporter(&g, &refl, &c4).unwrap().is_empty());
    }

    #[test]
    fn mismatched_parent_is_rejected() {
        let g = d8();
        let h = generate_group(3, &[perm(3, "(1 2 3)")]).unwrap();
        assert!(matches!(normalizer(&g, &h.whole()), Err(Error::Input(_))));
    }

    #[test]
    fn induced_group_keeps_relative_order() {
        let s5 = generate_group(5, &[perm(5, "(1 2)"), perm(5, "(1 2 3 4 5)")]).unwrap();
        let sub = s5
            .subgroup_from_permutations(&[perm(5, "(1 2 3 4)"), perm(5, "(1 3)")])
            .unwrap();
        let induced = Group::from_subgroup(&s5, &sub).unwrap();
        for (i, &gi) in sub.elements().iter().enumerate() {
            assert_eq!(induced.element(i), s5.element(gi));
        }
    }
}
