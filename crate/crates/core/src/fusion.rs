//! Fusion systems `F_S(G)` of finite groups on a Sylow `p`-subgroup `S`.
//!
//! Only group-induced fusion systems can be constructed. Everything
//! downstream of this module sees them through [`FusionSystem`]: a partition
//! of the `S`-classes of subgroups into `F`-classes, a fully normalized
//! representative per `F`-class, and a conjugation-witness oracle.

use std::collections::HashMap;

use crate::burnside::BurnsideRing;
use crate::error::{Error, Result};
use crate::permgroup::{is_prime, normalizer, sylow_subgroup, Group, Permutation, Subgroup};

/// A `g ∈ G` with `g · source · g⁻¹ = target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationWitness {
    pub element: Permutation,
    /// Index of `element` in the ambient group.
    pub ambient_index: usize,
    pub source: Subgroup,
    pub target: Subgroup,
}

/// Read-only view of a saturated fusion system on `S`.
///
/// `S`-classes are indices into `ring().table()`, `F`-classes are indices
/// into `fusion_classes()`. `F`-classes are ordered by their first member,
/// hence by decreasing subgroup order.
pub trait FusionSystem {
    fn ring(&self) -> &BurnsideRing;

    /// Each `F`-class as its sorted list of member `S`-classes.
    fn fusion_classes(&self) -> &[Vec<usize>];

    fn fusion_class_of(&self, s_class: usize) -> usize;

    /// The chosen fully normalized `S`-class of an `F`-class.
    fn fully_normalized(&self, fclass: usize) -> usize;

    /// Some `φ ∈ F(source, target)` that is an isomorphism, as a conjugating
    /// element, or `None` if the two are not `F`-conjugate.
    fn conjugation_witness(
        &self,
        source: &Subgroup,
        target: &Subgroup,
    ) -> Option<ConjugationWitness>;

    fn num_fusion_classes(&self) -> usize {
        self.fusion_classes().len()
    }

    fn fusion_label(&self, fclass: usize) -> String {
        format!("[{}]_F", self.ring().label(self.fully_normalized(fclass)))
    }

    fn is_fully_normalized(&self, s_class: usize) -> bool {
        let rep = self.fully_normalized(self.fusion_class_of(s_class));
        self.ring().normalizer_order(s_class) == self.ring().normalizer_order(rep)
    }

    /// `Q ≲_F P` for `F`-classes `q` and `p`: some member of `q` is
    /// `S`-subconjugate to some member of `p`.
    fn subconjugate(&self, q: usize, p: usize) -> bool {
        let ring = self.ring();
        let classes = self.fusion_classes();
        classes[q]
            .iter()
            .any(|&a| classes[p].iter().any(|&b| ring.subconjugate(a, b)))
    }

    /// `|Obs(F)| = ∏ |W_S P|` over fully normalized representatives.
    fn obstruction_order(&self) -> Result<i64> {
        (0..self.num_fusion_classes()).try_fold(1i64, |acc, f| {
            acc.checked_mul(self.ring().weyl_order(self.fully_normalized(f)))
                .ok_or(Error::Overflow("obstruction group order"))
        })
    }
}

/// The fusion system `F_S(G)`.
#[derive(Clone, Debug)]
pub struct FusionData {
    ambient: Group,
    sylow: Subgroup,
    prime: u64,
    ring: BurnsideRing,
    fclasses: Vec<Vec<usize>>,
    fclass_of: Vec<usize>,
    fn_rep: Vec<usize>,
}

pub fn fusion_from_group(g: &Group, p: u64) -> Result<FusionData> {
    if !is_prime(p) {
        return Err(Error::Input(format!("{} is not prime", p)));
    }
    let sylow = sylow_subgroup(g, p)?;
    let index = (g.order() / sylow.order()) as u64;
    if index.is_multiple_of(p) {
        return Err(Error::Invariant(format!(
            "subgroup of order {} is not Sylow: index {} divisible by {}",
            sylow.order(),
            index,
            p
        )));
    }
    let s_group = Group::from_subgroup(g, &sylow)?;
    let ring = BurnsideRing::new(&s_group)?;
    let table = ring.table();

    let mut to_s: HashMap<usize, usize> = HashMap::new();
    for (i, &x) in sylow.elements().iter().enumerate() {
        to_s.insert(x, i);
    }

    // Union classes whose representatives are G-conjugate: scan the
    // G-conjugates of each representative that land inside S.
    let n = table.len();
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut [usize], mut x: usize) -> usize {
        while root[x] != x {
            root[x] = root[root[x]];
            x = root[x];
        }
        x
    }
    for i in 0..n {
        let rep: Vec<usize> = table
            .representative(i)
            .elements()
            .iter()
            .map(|&x| sylow.elements()[x])
            .collect();
        for x in 0..g.order() {
            let image: Option<Vec<usize>> = rep
                .iter()
                .map(|&y| to_s.get(&g.conj(x, y)).copied())
                .collect();
            let Some(mut image) = image else { continue };
            image.sort_unstable();
            let j = table.class_of_elements(&image).ok_or_else(|| {
                Error::Invariant("conjugate of a subgroup of S is not in the class table".into())
            })?;
            let (a, b) = (find(&mut root, i), find(&mut root, j));
            if a != b {
                root[a.max(b)] = a.min(b);
            }
        }
    }

    let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..n {
        let r = find(&mut root, i);
        by_root.entry(r).or_default().push(i);
    }
    let mut fclasses: Vec<Vec<usize>> = by_root.into_values().collect();
    fclasses.sort_by_key(|c| c[0]);
    let mut fclass_of = vec![0; n];
    for (f, members) in fclasses.iter().enumerate() {
        for &m in members {
            fclass_of[m] = f;
        }
    }
    let fn_rep = fclasses
        .iter()
        .map(|members| {
            // max_by_key returns the last maximum; scan in reverse so ties go
            // to the earliest class.
            *members
                .iter()
                .rev()
                .max_by_key(|&&m| ring.normalizer_order(m))
                .expect("F-classes are non-empty")
        })
        .collect();

    let data = FusionData {
        ambient: g.clone(),
        sylow,
        prime: p,
        ring,
        fclasses,
        fclass_of,
        fn_rep,
    };
    let last = data.ring.table().trivial_class();
    if data.fclasses[data.fclass_of[0]].len() != 1 || data.fclasses[data.fclass_of[last]].len() != 1
    {
        return Err(Error::Invariant(
            "[S] or [1] is fused with another class".into(),
        ));
    }
    Ok(data)
}

impl FusionData {
    pub fn ambient(&self) -> &Group {
        &self.ambient
    }

    /// `S` as a subgroup of the ambient group.
    pub fn sylow(&self) -> &Subgroup {
        &self.sylow
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Ambient index of element `i` of `S`.
    pub fn to_ambient(&self, i: usize) -> usize {
        self.sylow.elements()[i]
    }

    fn subgroup_in_ambient(&self, p: &Subgroup) -> Subgroup {
        self.ambient
            .subgroup_unchecked(p.elements().iter().map(|&x| self.to_ambient(x)).collect())
    }

    fn s_class(&self, p: &Subgroup) -> Result<usize> {
        self.ring
            .table()
            .class_of(p)
            .ok_or_else(|| Error::Input("subgroup is not a subgroup of S".into()))
    }

    /// Every fully normalized member of each `F`-class.
    pub fn fully_normalized_members(&self, fclass: usize) -> Vec<usize> {
        self.fclasses[fclass]
            .iter()
            .copied()
            .filter(|&m| self.is_fully_normalized(m))
            .collect()
    }

    /// The same fusion system with a different choice of fully normalized
    /// representatives.
    pub fn with_fully_normalized_reps(&self, reps: &[usize]) -> Result<FusionData> {
        if reps.len() != self.fclasses.len() {
            return Err(Error::Input(format!(
                "expected {} representatives, got {}",
                self.fclasses.len(),
                reps.len()
            )));
        }
        for (f, &r) in reps.iter().enumerate() {
            if r >= self.fclass_of.len() || self.fclass_of[r] != f || !self.is_fully_normalized(r) {
                return Err(Error::Input(format!(
                    "class {} is not a fully normalized member of F-class {}",
                    r, f
                )));
            }
        }
        let mut out = self.clone();
        out.fn_rep = reps.to_vec();
        Ok(out)
    }

    /// A `g ∈ G` with `g Q g⁻¹ = P` and `g N_S(Q) g⁻¹ ≤ N_S(P)`, for `P`
    /// fully normalized and `Q` `F`-conjugate to `P`. The first such `g` in
    /// ambient element order is returned.
    pub fn normalizer_lift(&self, q: &Subgroup, p: &Subgroup) -> Result<ConjugationWitness> {
        let (qc, pc) = (self.s_class(q)?, self.s_class(p)?);
        if self.fclass_of[qc] != self.fclass_of[pc] {
            return Err(Error::Precondition(format!(
                "{} and {} are not F-conjugate",
                self.ring.label(qc),
                self.ring.label(pc)
            )));
        }
        if !self.is_fully_normalized(pc) {
            return Err(Error::Precondition(format!(
                "target {} is not fully normalized",
                self.ring.label(pc)
            )));
        }
        let s = self.ring.group();
        let nq = self.subgroup_in_ambient(&normalizer(s, q)?);
        let np = self.subgroup_in_ambient(&normalizer(s, p)?);
        let qa = self.subgroup_in_ambient(q);
        let pa = self.subgroup_in_ambient(p);
        let g = &self.ambient;
        let found = (0..g.order())
            .find(|&x| g.conjugate_subgroup(x, &qa) == pa && g.conjugates_into(x, &nq, &np));
        match found {
            Some(x) => Ok(ConjugationWitness {
                element: g.element(x).clone(),
                ambient_index: x,
                source: q.clone(),
                target: p.clone(),
            }),
            None => Err(Error::SaturationWitnessMissing {
                source_class: self.ring.label(qc).to_string(),
                target: self.ring.label(pc).to_string(),
            }),
        }
    }
}

impl FusionSystem for FusionData {
    fn ring(&self) -> &BurnsideRing {
        &self.ring
    }

    fn fusion_classes(&self) -> &[Vec<usize>] {
        &self.fclasses
    }

    fn fusion_class_of(&self, s_class: usize) -> usize {
        self.fclass_of[s_class]
    }

    fn fully_normalized(&self, fclass: usize) -> usize {
        self.fn_rep[fclass]
    }

    fn conjugation_witness(
        &self,
        source: &Subgroup,
        target: &Subgroup,
    ) -> Option<ConjugationWitness> {
        if source.order() != target.order() {
            return None;
        }
        let sa = self.subgroup_in_ambient(source);
        let ta = self.subgroup_in_ambient(target);
        let g = &self.ambient;
        (0..g.order())
            .find(|&x| g.conjugate_subgroup(x, &sa) == ta)
            .map(|x| ConjugationWitness {
                element: g.element(x).clone(),
                ambient_index: x,
                source: source.clone(),
                target: target.clone(),
            })
    }
}
