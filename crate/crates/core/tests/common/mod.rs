//! Test-side brute force, independent of the library's group machinery.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use fusionburnside::catalog;
use fusionburnside::fusion::{fusion_from_group, FusionData};
use fusionburnside::permgroup::{Group, Permutation};

pub type Perm = Vec<u32>;

/// `(a ∘ b)(x) = a(b(x))`.
pub fn compose(a: &[u32], b: &[u32]) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub fn inverse(a: &[u32]) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u32;
    }
    out
}

pub fn closure(degree: usize, gens: &[Perm]) -> BTreeSet<Perm> {
    let id: Perm = (0..degree as u32).collect();
    let mut set = BTreeSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose(g, &x);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

/// A group as a plain multiplication table over its sorted elements.
pub struct Naive {
    pub elements: Vec<Perm>,
    pub index: HashMap<Perm, usize>,
    pub table: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
}

impl Naive {
    pub fn new(elements: impl IntoIterator<Item = Perm>) -> Self {
        let elements: Vec<Perm> = elements
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: HashMap<Perm, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let table = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        let inv = elements.iter().map(|a| index[&inverse(a)]).collect();
        Naive {
            elements,
            index,
            table,
            inv,
        }
    }

    pub fn from_gens(degree: usize, gens: &[Perm]) -> Self {
        Naive::new(closure(degree, gens))
    }

    pub fn from_group(g: &Group) -> Self {
        Naive::new(g.elements().iter().map(|p| p.images().to_vec()))
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.table[self.table[g][x]][self.inv[g]]
    }

    pub fn conj_set(&self, g: usize, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        set.iter().map(|&x| self.conj(g, x)).collect()
    }

    pub fn generated(&self, gens: &[usize]) -> BTreeSet<usize> {
        let id = self.index[&(0..self.elements[0].len() as u32).collect::<Perm>()];
        let mut set = BTreeSet::from([id]);
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.table[g][x];
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    /// Every subgroup, as the closures of all pairs of elements. Complete for
    /// groups whose subgroups are all 2-generated (true for every catalog
    /// group).
    pub fn subgroups_by_pairs(&self) -> BTreeSet<BTreeSet<usize>> {
        let n = self.order();
        let mut out = BTreeSet::new();
        for a in 0..n {
            for b in a..n {
                out.insert(self.generated(&[a, b]));
            }
        }
        out
    }

    /// Every subgroup by testing every subset containing the identity for
    /// closure under multiplication. Only for orders up to 16.
    pub fn subgroups_by_subsets(&self) -> Vec<u32> {
        let n = self.order();
        assert!(n <= 16);
        let id = self.index[&(0..self.elements[0].len() as u32).collect::<Perm>()];
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & (1 << id) == 0 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| mask & (1 << self.table[a][b]) != 0));
            if closed {
                out.push(mask);
            }
        }
        out
    }

    pub fn normalizer(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        (0..self.order())
            .filter(|&g| &self.conj_set(g, set) == set)
            .collect()
    }

    /// Canonical key for the conjugacy class of `set` under `within`.
    pub fn class_key(&self, set: &BTreeSet<usize>, within: &[usize]) -> BTreeSet<usize> {
        within
            .iter()
            .map(|&g| self.conj_set(g, set))
            .min()
            .expect("nonempty")
    }

    pub fn perms(&self, set: &BTreeSet<usize>) -> BTreeSet<Perm> {
        set.iter().map(|&i| self.elements[i].clone()).collect()
    }
}

pub fn perm_set(g: &Group, elements: &[usize]) -> BTreeSet<Perm> {
    elements
        .iter()
        .map(|&i| g.element(i).images().to_vec())
        .collect()
}

pub fn to_permutation(p: &Perm) -> Permutation {
    Permutation::from_images(p.clone()).expect("valid permutation")
}

/// Every fusion system the checks run over: `F_S(S)` on the catalog
/// p-groups and the ambient pairs `F_D8(S4)`, `F_D8(S5)`, `F_C3(S3)`.
pub fn fusion_systems() -> Vec<(String, FusionData)> {
    let mut out = Vec::new();
    for name in catalog::P_GROUPS {
        let e = catalog::lookup(name).unwrap();
        let g = e.build().unwrap();
        out.push((
            format!("F_{0}({0})", name),
            fusion_from_group(&g, e.default_prime()).unwrap(),
        ));
    }
    for (name, p) in [("S4", 2), ("S5", 2), ("S3", 3)] {
        let g = catalog::lookup(name).unwrap().build().unwrap();
        out.push((
            format!("F_S({}) at p = {}", name, p),
            fusion_from_group(&g, p).unwrap(),
        ));
    }
    out
}
