//! The Burnside ring `A(S)` in orbit coordinates, its table of marks, and the
//! congruences cutting the image of the mark homomorphism out of the ghost
//! ring.

mod csv_io;
mod restrict;
mod ses;

use std::fmt;

use crate::error::{checked_add, checked_mul, Error, Result};
use crate::permgroup::{
    class_table, minimal_generators, normalizer, transporter, Group, SubgroupClassTable,
};

pub use csv_io::{read_labelled_row, write_labelled_row};
pub use restrict::restrict_ambient;
pub use ses::verify_ses_group;

/// An element `Σ c_P [S/P]` of `A(S)`, one coefficient per class in the
/// class table order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BurnsideElement {
    coeffs: Vec<i64>,
}

impl BurnsideElement {
    pub fn new(coeffs: Vec<i64>) -> Self {
        BurnsideElement { coeffs }
    }

    pub fn zero(len: usize) -> Self {
        BurnsideElement {
            coeffs: vec![0; len],
        }
    }

    pub fn basis(len: usize, class: usize) -> Self {
        let mut x = Self::zero(len);
        x.coeffs[class] = 1;
        x
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, class: usize) -> i64 {
        self.coeffs[class]
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True iff this is an actual `S`-set, not just a virtual one.
    pub fn is_set(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_len(self.len(), other.len())?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| checked_add(a, b, "Burnside element sum"))
            .collect::<Result<_>>()?;
        Ok(BurnsideElement { coeffs })
    }

    pub fn checked_scale(&self, k: i64) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| checked_mul(a, k, "Burnside element scaling"))
            .collect::<Result<_>>()?;
        Ok(BurnsideElement { coeffs })
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, k: i64, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_scale(k)?)
    }
}

/// Fixed-point counts `Φ_Q(X)`, one per class; an element of the ghost ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkVector {
    marks: Vec<i64>,
}

impl MarkVector {
    pub fn new(marks: Vec<i64>) -> Self {
        MarkVector { marks }
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn mark(&self, class: usize) -> i64 {
        self.marks[class]
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    /// Coordinatewise product, the multiplication of the ghost ring.
    pub fn pointwise_product(&self, other: &Self) -> Result<Self> {
        same_len(self.len(), other.len())?;
        let marks = self
            .marks
            .iter()
            .zip(&other.marks)
            .map(|(&a, &b)| checked_mul(a, b, "ghost ring product"))
            .collect::<Result<_>>()?;
        Ok(MarkVector { marks })
    }
}

/// The table of marks: `entry(q, p) = Φ_Q([S/P]) = |N_S(Q,P)| / |P|`.
/// Lower triangular in class-table order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkMatrix {
    entries: Vec<Vec<i64>>,
}

impl MarkMatrix {
    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.len()).map(|i| self.entries[i][i]).collect()
    }
}

/// A residue vector in `Obs(S) = ∏ Z/|W_S P|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ObstructionVector {
    residues: Vec<i64>,
    moduli: Vec<i64>,
}

impl ObstructionVector {
    /// Reduces each residue into `0..modulus`.
    pub fn new(residues: Vec<i64>, moduli: Vec<i64>) -> Self {
        let residues = residues
            .iter()
            .zip(&moduli)
            .map(|(&r, &m)| r.rem_euclid(m))
            .collect();
        ObstructionVector { residues, moduli }
    }

    pub fn residues(&self) -> &[i64] {
        &self.residues
    }

    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }
}

impl fmt::Display for ObstructionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .residues
            .iter()
            .zip(&self.moduli)
            .map(|(r, m)| format!("{} mod {}", r, m))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub(crate) fn same_len(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::Input(format!(
            "vector length {} does not match {} classes",
            a, b
        )));
    }
    Ok(())
}

/// Table of marks of `s` over the class table `t`, each entry counted by a
/// transporter scan.
pub fn mark_matrix(s: &Group, t: &SubgroupClassTable) -> Result<MarkMatrix> {
    if s.id() != t.group().id() {
        return Err(Error::Input(
            "class table was built from a different group".into(),
        ));
    }
    let n = t.len();
    let mut entries = vec![vec![0i64; n]; n];
    for (q, row) in entries.iter_mut().enumerate() {
        let rep_q = t.representative(q);
        for (p, entry) in row.iter_mut().enumerate() {
            let rep_p = t.representative(p);
            if !rep_p.order().is_multiple_of(rep_q.order()) {
                continue;
            }
            let count = transporter(s, rep_q, rep_p)?.len();
            if count % rep_p.order() != 0 {
                return Err(Error::Invariant(format!(
                    "|N_S({}, {})| = {} is not divisible by {}",
                    t.label(q),
                    t.label(p),
                    count,
                    rep_p.order()
                )));
            }
            *entry = (count / rep_p.order()) as i64;
        }
    }
    Ok(MarkMatrix { entries })
}

/// `A(S)` together with everything needed to compute in it: the class
/// table, the table of marks and, per class `P`, the classes of `⟨s⟩P` for
/// the cosets `s̄ ∈ W_S P`.
#[derive(Clone, Debug)]
pub struct BurnsideRing {
    table: SubgroupClassTable,
    marks: MarkMatrix,
    psi_terms: Vec<Vec<usize>>,
}

impl BurnsideRing {
    pub fn new(s: &Group) -> Result<Self> {
        Self::from_table(class_table(s)?)
    }

    pub fn from_table(table: SubgroupClassTable) -> Result<Self> {
        let s = table.group();
        let marks = mark_matrix(s, &table)?;
        let mut psi_terms = Vec::with_capacity(table.len());
        for i in 0..table.len() {
            psi_terms.push(weyl_coset_classes(&table, i)?);
        }
        Ok(BurnsideRing {
            table,
            marks,
            psi_terms,
        })
    }

    pub fn table(&self) -> &SubgroupClassTable {
        &self.table
    }

    pub fn group(&self) -> &Group {
        self.table.group()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn mark_matrix(&self) -> &MarkMatrix {
        &self.marks
    }

    pub fn label(&self, class: usize) -> &str {
        self.table.label(class)
    }

    pub fn normalizer_order(&self, class: usize) -> i64 {
        self.table.class(class).normalizer_order as i64
    }

    /// `|W_S P| = |N_S P / P|`.
    pub fn weyl_order(&self, class: usize) -> i64 {
        self.table.class(class).weyl_order() as i64
    }

    pub fn weyl_orders(&self) -> Vec<i64> {
        (0..self.len()).map(|i| self.weyl_order(i)).collect()
    }

    /// `|Obs(S)| = ∏ |W_S P|`.
    pub fn obstruction_order(&self) -> Result<i64> {
        self.weyl_orders().into_iter().try_fold(1i64, |acc, w| {
            checked_mul(acc, w, "obstruction group order")
        })
    }

    /// True iff `Q ≲_S P`, read off the table of marks.
    pub fn subconjugate(&self, q: usize, p: usize) -> bool {
        self.marks.entry(q, p) != 0
    }

    /// The transitive set `[S/P]`.
    pub fn transitive(&self, class: usize) -> BurnsideElement {
        BurnsideElement::basis(self.len(), class)
    }

    /// The one-point set `[S/S]`, the unit of the ring.
    pub fn one(&self) -> BurnsideElement {
        self.transitive(self.table.whole_class())
    }

    pub fn zero(&self) -> BurnsideElement {
        BurnsideElement::zero(self.len())
    }

    /// The mark homomorphism: `Φ(X) = M · c(X)`.
    pub fn mark(&self, x: &BurnsideElement) -> Result<MarkVector> {
        same_len(x.len(), self.len())?;
        let mut marks = vec![0i64; self.len()];
        for (q, out) in marks.iter_mut().enumerate() {
            let row = &self.marks.entries[q];
            for (&m, &c) in row.iter().zip(&x.coeffs).take(q + 1) {
                if m != 0 && c != 0 {
                    *out = checked_add(*out, checked_mul(m, c, "marks")?, "marks")?;
                }
            }
        }
        Ok(MarkVector { marks })
    }

    /// Inverts the mark homomorphism by forward substitution down the
    /// triangular table of marks. Fails when some quotient is not an
    /// integer, i.e. when `ξ` violates the congruences.
    pub fn marks_to_orbits(&self, xi: &MarkVector) -> Result<BurnsideElement> {
        same_len(xi.len(), self.len())?;
        let mut coeffs = vec![0i64; self.len()];
        for q in 0..self.len() {
            let row = &self.marks.entries[q];
            let mut rem = xi.marks[q];
            for p in 0..q {
                if row[p] != 0 && coeffs[p] != 0 {
                    rem = checked_add(
                        rem,
                        -checked_mul(row[p], coeffs[p], "orbit counts")?,
                        "orbit counts",
                    )?;
                }
            }
            let diag = row[q];
            if rem % diag != 0 {
                return Err(Error::NotInImage {
                    class: self.label(q).to_string(),
                });
            }
            coeffs[q] = rem / diag;
        }
        Ok(BurnsideElement { coeffs })
    }

    /// `[S/P]·[S/Q] = Σ_{PsQ} [S/(P ∩ sQs⁻¹)]`, as (class, multiplicity)
    /// pairs in class order.
    pub fn transitive_product(&self, p: usize, q: usize) -> Result<Vec<(usize, i64)>> {
        let s = self.group();
        let rep_p = self.table.representative(p);
        let rep_q = self.table.representative(q);
        let mut seen = vec![false; s.order()];
        let mut counts = vec![0i64; self.len()];
        for g in 0..s.order() {
            if seen[g] {
                continue;
            }
            for &x in rep_p.elements() {
                let xg = s.mul(x, g);
                for &y in rep_q.elements() {
                    seen[s.mul(xg, y)] = true;
                }
            }
            let conj_q = s.conjugate_subgroup(g, rep_q);
            let meet: Vec<usize> = rep_p
                .elements()
                .iter()
                .copied()
                .filter(|&x| conj_q.contains(x))
                .collect();
            let class = self.table.class_of_elements(&meet).ok_or_else(|| {
                Error::Invariant("intersection of subgroups is not in the class table".into())
            })?;
            counts[class] += 1;
        }
        Ok(counts
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .collect())
    }

    /// Ring product via the double coset formula, extended bilinearly.
    pub fn multiply(&self, x: &BurnsideElement, y: &BurnsideElement) -> Result<BurnsideElement> {
        same_len(x.len(), self.len())?;
        same_len(y.len(), self.len())?;
        let mut coeffs = vec![0i64; self.len()];
        for (p, &a) in x.coeffs.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (q, &b) in y.coeffs.iter().enumerate().filter(|(_, &b)| b != 0) {
                let ab = checked_mul(a, b, "ring product")?;
                for (r, k) in self.transitive_product(p, q)? {
                    coeffs[r] = checked_add(
                        coeffs[r],
                        checked_mul(ab, k, "ring product")?,
                        "ring product",
                    )?;
                }
            }
        }
        Ok(BurnsideElement { coeffs })
    }

    /// Classes of `⟨s⟩P` for one `s` per coset `s̄ ∈ W_S P`, `P` the
    /// canonical representative of `class`. The first entry is `P` itself.
    pub fn psi_terms(&self, class: usize) -> &[usize] {
        &self.psi_terms[class]
    }

    /// `Ψ_P(ξ) = Σ_{s̄ ∈ W_S P} ξ_{⟨s⟩P} mod |W_S P|`.
    pub fn psi(&self, xi: &MarkVector) -> Result<ObstructionVector> {
        same_len(xi.len(), self.len())?;
        let mut residues = Vec::with_capacity(self.len());
        for p in 0..self.len() {
            let w = self.weyl_order(p);
            let mut acc = 0i64;
            for &c in &self.psi_terms[p] {
                acc = (acc + xi.marks[c].rem_euclid(w)) % w;
            }
            residues.push(acc);
        }
        Ok(ObstructionVector::new(residues, self.weyl_orders()))
    }

    /// Unreduced coefficient matrix of `Ψ`: `entry(p, q)` counts the cosets
    /// `s̄ ∈ W_S P` with `⟨s⟩P` in class `q`.
    pub fn psi_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut m = vec![vec![0i64; n]; n];
        for (p, row) in m.iter_mut().enumerate() {
            for &c in &self.psi_terms[p] {
                row[c] += 1;
            }
        }
        m
    }

    pub fn format_element(&self, x: &BurnsideElement, group_name: &str) -> String {
        format_combination(x.coeffs(), |i| {
            format!("[{}/{}]", group_name, self.label(i))
        })
    }
}

/// Renders `Σ k_i · name(i)`, skipping zero terms; `0` for the empty sum.
pub fn format_combination(coeffs: &[i64], name: impl Fn(usize) -> String) -> String {
    let mut out = String::new();
    for (i, &k) in coeffs.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if out.is_empty() {
            if k < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if k < 0 { " - " } else { " + " });
        }
        let a = k.abs();
        if a != 1 {
            out.push_str(&format!("{}·", a));
        }
        out.push_str(&name(i));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn weyl_coset_classes(table: &SubgroupClassTable, class: usize) -> Result<Vec<usize>> {
    let s = table.group();
    let p = table.representative(class);
    let n = normalizer(s, p)?;
    let p_gens = minimal_generators(s, p);
    let mut seen = vec![false; s.order()];
    let mut terms = Vec::with_capacity(n.order() / p.order());
    for &g in n.elements() {
        if seen[g] {
            continue;
        }
        for &x in p.elements() {
            seen[s.mul(g, x)] = true;
        }
        let mut gens = p_gens.clone();
        gens.push(g);
        let sp = s.subgroup_generated(&gens);
        let c = table
            .class_of(&sp)
            .ok_or_else(|| Error::Invariant("subgroup ⟨s⟩P is not in the class table".into()))?;
        terms.push(c);
    }
    Ok(terms)
}
