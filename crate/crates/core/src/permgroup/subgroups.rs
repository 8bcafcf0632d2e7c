//! Subgroup lattices and conjugacy classes of subgroups.

use std::cmp::Reverse;
use std::collections::{HashMap, HashSet};

use super::group::{normalizer, Group, Limits, Subgroup};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
struct ElementSet(Vec<u64>);

impl ElementSet {
    fn new(n: usize) -> Self {
        ElementSet(vec![0; n.div_ceil(64)])
    }

    #[inline]
    fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.0[w] & b == 0;
        self.0[w] |= b;
        fresh
    }

    #[inline]
    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] & (1u64 << (i % 64)) != 0
    }
}

struct Found {
    set: ElementSet,
    elements: Vec<usize>,
    gens: Vec<usize>,
}

/// `⟨base, gens⟩`, where `base` is already a subgroup (or just the identity).
fn close(g: &Group, base: &[usize], gens: &[usize]) -> (ElementSet, Vec<usize>) {
    let mut set = ElementSet::new(g.order());
    let mut elems = Vec::with_capacity(base.len() * 2);
    for &x in base {
        set.insert(x);
        elems.push(x);
    }
    let mut k = 0;
    while k < elems.len() {
        let x = elems[k];
        for &y in gens {
            let z = g.mul(x, y);
            if set.insert(z) {
                elems.push(z);
            }
        }
        k += 1;
    }
    (set, elems)
}

/// Every subgroup of `s`, each exactly once, sorted by order and then by
/// element list.
pub fn enumerate_subgroups(s: &Group) -> Result<Vec<Subgroup>> {
    enumerate_subgroups_with(s, &Limits::default())
}

/// Bottom-up enumeration: start from the cyclic subgroups, then keep adjoining
/// one outside element to each known subgroup until nothing new appears.
pub fn enumerate_subgroups_with(s: &Group, limits: &Limits) -> Result<Vec<Subgroup>> {
    let n = s.order();
    if n > limits.max_enumeration_order {
        return Err(Error::Size {
            what: "group for subgroup enumeration",
            actual: n,
            limit: limits.max_enumeration_order,
        });
    }
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut found: Vec<Found> = Vec::new();
    let mut push =
        |set: ElementSet, elems: Vec<usize>, gens: Vec<usize>, found: &mut Vec<Found>| {
            if seen.contains(&set) {
                return Ok(());
            }
            if found.len() >= limits.max_subgroups {
                return Err(Error::Size {
                    what: "subgroup count",
                    actual: found.len() + 1,
                    limit: limits.max_subgroups,
                });
            }
            seen.insert(set.clone());
            found.push(Found {
                set,
                elements: elems,
                gens,
            });
            Ok(())
        };

    for x in 0..n {
        let (set, elems) = close(s, &[Group::IDENTITY], &[x]);
        push(set, elems, vec![x], &mut found)?;
    }
    let mut k = 0;
    while k < found.len() {
        for x in 0..n {
            if found[k].set.contains(x) {
                continue;
            }
            let mut gens = found[k].gens.clone();
            gens.push(x);
            let (set, elems) = close(s, &found[k].elements, &gens);
            push(set, elems, gens, &mut found)?;
        }
        k += 1;
    }

    let mut out: Vec<Subgroup> = found
        .into_iter()
        .map(|f| s.subgroup_unchecked(f.elements))
        .collect();
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
    Ok(out)
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// `order:index`, index counting classes of equal order from 0.
    pub label: String,
    pub order: usize,
    /// The member with the lexicographically least element list.
    pub representative: Subgroup,
    /// All members, sorted by element list.
    pub members: Vec<Subgroup>,
    /// `|N_S P|` for any member `P`.
    pub normalizer_order: usize,
}

impl SubgroupClass {
    /// `|W_S P| = |N_S P| / |P|`.
    pub fn weyl_order(&self) -> usize {
        self.normalizer_order / self.order
    }
}

/// The conjugacy classes of subgroups of a group `S`, ordered by strictly
/// decreasing order with ties broken by representative. Class 0 is `[S]`,
/// the last class is `[1]`.
#[derive(Clone, Debug)]
pub struct SubgroupClassTable {
    group: Group,
    classes: Vec<SubgroupClass>,
    lookup: HashMap<Vec<usize>, usize>,
}

pub fn class_table(s: &Group) -> Result<SubgroupClassTable> {
    class_table_with(s, &Limits::default())
}

pub fn class_table_with(s: &Group, limits: &Limits) -> Result<SubgroupClassTable> {
    let subgroups = enumerate_subgroups_with(s, limits)?;
    let mut assigned: HashSet<Vec<usize>> = HashSet::new();
    let mut raw: Vec<Vec<Subgroup>> = Vec::new();
    for h in &subgroups {
        if assigned.contains(h.elements()) {
            continue;
        }
        let mut orbit: Vec<Subgroup> = (0..s.order()).map(|g| s.conjugate_subgroup(g, h)).collect();
        orbit.sort();
        orbit.dedup();
        for m in &orbit {
            assigned.insert(m.elements().to_vec());
        }
        raw.push(orbit);
    }
    raw.sort_by(|a, b| {
        Reverse(a[0].order())
            .cmp(&Reverse(b[0].order()))
            .then_with(|| a[0].elements().cmp(b[0].elements()))
    });

    let mut classes = Vec::with_capacity(raw.len());
    let mut lookup = HashMap::new();
    let mut same_order = 0;
    for (i, members) in raw.into_iter().enumerate() {
        let order = members[0].order();
        if i > 0
            && classes
                .last()
                .is_some_and(|c: &SubgroupClass| c.order == order)
        {
            same_order += 1;
        } else {
            same_order = 0;
        }
        for m in &members {
            lookup.insert(m.elements().to_vec(), i);
        }
        let representative = members[0].clone();
        let normalizer_order = normalizer(s, &representative)?.order();
        if normalizer_order * members.len() != s.order() {
            return Err(Error::Invariant(format!(
                "orbit-stabilizer fails for class {}:{}",
                order, same_order
            )));
        }
        classes.push(SubgroupClass {
            label: format!("{}:{}", order, same_order),
            order,
            representative,
            members,
            normalizer_order,
        });
    }
    Ok(SubgroupClassTable {
        group: s.clone(),
        classes,
        lookup,
    })
}

impl SubgroupClassTable {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &SubgroupClass {
        &self.classes[i]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.classes[i].label
    }

    pub fn labels(&self) -> Vec<&str> {
        self.classes.iter().map(|c| c.label.as_str()).collect()
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    pub fn representative(&self, i: usize) -> &Subgroup {
        &self.classes[i].representative
    }

    /// Class index of a subgroup given by its sorted element list.
    pub fn class_of_elements(&self, elements: &[usize]) -> Option<usize> {
        self.lookup.get(elements).copied()
    }

    pub fn class_of(&self, p: &Subgroup) -> Option<usize> {
        if p.group_id() != self.group.id() {
            return None;
        }
        self.class_of_elements(p.elements())
    }

    pub fn subgroup_count(&self) -> usize {
        self.lookup.len()
    }

    pub fn whole_class(&self) -> usize {
        0
    }

    pub fn trivial_class(&self) -> usize {
        self.classes.len() - 1
    }
}
