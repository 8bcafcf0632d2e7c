//! `F`-stable elements of `A(S)`: stability testing, stabilization, the
//! irreducible stable sets `α_P`, unique decomposition, and the ghost ring
//! and obstruction group of `A(F)`.

use crate::burnside::{BurnsideElement, MarkVector, ObstructionVector};
use crate::error::{checked_add, checked_mul, Error, Result};
use crate::fusion::FusionSystem;
use crate::ses::{check_exactness, check_unitriangular, CheckOutcome, SesReport};

/// Marks of an `F`-stable element, one per `F`-class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FMarkVector {
    marks: Vec<i64>,
}

impl FMarkVector {
    pub fn new(marks: Vec<i64>) -> Self {
        FMarkVector { marks }
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    /// The ghost vector over `S`-classes that is constant on each `F`-class.
    pub fn embed<F: FusionSystem + ?Sized>(&self, fusion: &F) -> MarkVector {
        let n = fusion.ring().len();
        MarkVector::new(
            (0..n)
                .map(|c| self.marks[fusion.fusion_class_of(c)])
                .collect(),
        )
    }
}

/// Residues in `Obs(F) = ∏ Z/|W_S P|` over fully normalized `P`, one per
/// `F`-class.
pub type FObstructionVector = ObstructionVector;

/// One coefficient `λ_{P'}` added while stabilizing an `F`-class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LambdaStep {
    pub fclass: usize,
    pub s_class: usize,
    pub lambda: i64,
    pub fully_normalized: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilized {
    pub element: BurnsideElement,
    pub steps: Vec<LambdaStep>,
}

/// First pair of `F`-conjugate `S`-classes on which the marks of `x`
/// disagree.
pub fn stability_violation<F: FusionSystem + ?Sized>(
    x: &BurnsideElement,
    fusion: &F,
) -> Result<Option<(usize, usize)>> {
    let marks = fusion.ring().mark(x)?;
    Ok(first_unstable(&marks, fusion, |_| true))
}

fn first_unstable<F: FusionSystem + ?Sized>(
    marks: &MarkVector,
    fusion: &F,
    include: impl Fn(usize) -> bool,
) -> Option<(usize, usize)> {
    fusion
        .fusion_classes()
        .iter()
        .enumerate()
        .filter(|&(f, _)| include(f))
        .find_map(|(_, members)| {
            let first = members[0];
            members
                .iter()
                .find(|&&m| marks.mark(m) != marks.mark(first))
                .map(|&m| (first, m))
        })
}

fn not_stable<F: FusionSystem + ?Sized>(
    fusion: &F,
    marks: &MarkVector,
    (a, b): (usize, usize),
) -> Error {
    let ring = fusion.ring();
    Error::NotStable {
        first: ring.label(a).to_string(),
        first_mark: marks.mark(a),
        second: ring.label(b).to_string(),
        second_mark: marks.mark(b),
    }
}

/// True iff the marks of `x` are constant on every `F`-class.
pub fn is_f_stable<F: FusionSystem + ?Sized>(x: &BurnsideElement, fusion: &F) -> Result<bool> {
    Ok(stability_violation(x, fusion)?.is_none())
}

fn validate_collection<F: FusionSystem + ?Sized>(fusion: &F, h: &[usize]) -> Result<Vec<bool>> {
    let nf = fusion.num_fusion_classes();
    let mut in_h = vec![false; nf];
    for &f in h {
        if f >= nf {
            return Err(Error::Input(format!("F-class index {} out of range", f)));
        }
        in_h[f] = true;
    }
    for f in (0..nf).filter(|&f| in_h[f]) {
        if let Some(g) = (0..nf).find(|&g| !in_h[g] && fusion.subconjugate(g, f)) {
            return Err(Error::Precondition(format!(
                "collection is not closed under F-subconjugation: {} ≲ {} but only the latter is included",
                fusion.fusion_label(g),
                fusion.fusion_label(f)
            )));
        }
    }
    Ok(in_h)
}

/// Makes `x` `F`-stable by adding orbits below the collection `h` of
/// `F`-classes, which must be closed under `F`-subconjugation.
///
/// Requires `x` to be stable outside `h` and to have no orbits of type
/// `S/P` for `P` in `h`. Classes of `h` are processed largest first; at each
/// one, with fully normalized representative `P`, every member `P'` gets
/// `λ_{P'} = (Φ_P(x) − Φ_{P'}(x)) / |W_S P'|` copies of `[S/P']`. Each
/// `λ_{P'}` is checked to be a non-negative integer, and zero whenever `P'`
/// is itself fully normalized.
pub fn stabilize<F: FusionSystem + ?Sized>(
    x: &BurnsideElement,
    fusion: &F,
    h: &[usize],
) -> Result<Stabilized> {
    run_stabilize(x, fusion, h, true)
}

/// [`stabilize`] for arbitrary virtual elements: orbits inside `h` are
/// allowed and `λ` may be negative. Not used for the `α_P`.
pub fn stabilize_relaxed<F: FusionSystem + ?Sized>(
    x: &BurnsideElement,
    fusion: &F,
    h: &[usize],
) -> Result<Stabilized> {
    run_stabilize(x, fusion, h, false)
}

fn run_stabilize<F: FusionSystem + ?Sized>(
    x: &BurnsideElement,
    fusion: &F,
    h: &[usize],
    strict: bool,
) -> Result<Stabilized> {
    let ring = fusion.ring();
    let in_h = validate_collection(fusion, h)?;
    let initial_marks = ring.mark(x)?;
    if let Some(pair) = first_unstable(&initial_marks, fusion, |f| !in_h[f]) {
        return Err(Error::Precondition(format!(
            "element is not F-stable outside the collection: {}",
            not_stable(fusion, &initial_marks, pair)
        )));
    }
    if strict {
        for f in (0..in_h.len()).filter(|&f| in_h[f]) {
            if let Some(&m) = fusion.fusion_classes()[f]
                .iter()
                .find(|&&m| x.coeff(m) != 0)
            {
                return Err(Error::Precondition(format!(
                    "element has {} orbits of type {} inside the collection",
                    x.coeff(m),
                    ring.label(m)
                )));
            }
        }
    }

    let mut current = x.clone();
    let mut steps = Vec::new();
    for f in (0..in_h.len()).filter(|&f| in_h[f]) {
        let marks = ring.mark(&current)?;
        let p = fusion.fully_normalized(f);
        for &q in &fusion.fusion_classes()[f] {
            let numerator = checked_add(marks.mark(p), -marks.mark(q), "stabilization")?;
            let w = ring.weyl_order(q);
            if numerator % w != 0 {
                return Err(Error::CongruenceViolation {
                    class: ring.label(q).to_string(),
                    numerator,
                    modulus: w,
                });
            }
            let lambda = numerator / w;
            let fully_normalized = fusion.is_fully_normalized(q);
            if strict && (lambda < 0 || (fully_normalized && lambda != 0)) {
                return Err(Error::FixedPointLemmaViolation {
                    class: ring.label(q).to_string(),
                    lambda,
                });
            }
            steps.push(LambdaStep {
                fclass: f,
                s_class: q,
                lambda,
                fully_normalized,
            });
            if lambda != 0 {
                current = current.add_scaled(lambda, &ring.transitive(q))?;
            }
        }
    }

    let final_marks = ring.mark(&current)?;
    if let Some(pair) = first_unstable(&final_marks, fusion, |_| true) {
        return Err(Error::Invariant(format!(
            "stabilization left the element unstable: {}",
            not_stable(fusion, &final_marks, pair)
        )));
    }
    for c in 0..ring.len() {
        let f = fusion.fusion_class_of(c);
        if !in_h[f]
            && (final_marks.mark(c) != initial_marks.mark(c) || current.coeff(c) != x.coeff(c))
        {
            return Err(Error::Invariant(format!(
                "stabilization changed class {} outside the collection",
                ring.label(c)
            )));
        }
    }
    Ok(Stabilized {
        element: current,
        steps,
    })
}

/// The irreducible `F`-stable sets, one per `F`-class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaBasis {
    alphas: Vec<BurnsideElement>,
    steps: Vec<Vec<LambdaStep>>,
}

impl AlphaBasis {
    pub fn alphas(&self) -> &[BurnsideElement] {
        &self.alphas
    }

    pub fn alpha(&self, fclass: usize) -> &BurnsideElement {
        &self.alphas[fclass]
    }

    /// Every `λ` computed while stabilizing `α` of `fclass`.
    pub fn steps(&self, fclass: usize) -> &[LambdaStep] {
        &self.steps[fclass]
    }

    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    /// `Σ λ_P α_P`.
    pub fn reconstruct(&self, lambdas: &[i64]) -> Result<BurnsideElement> {
        if lambdas.len() != self.alphas.len() {
            return Err(Error::Input(format!(
                "expected {} coefficients, got {}",
                self.alphas.len(),
                lambdas.len()
            )));
        }
        let n = self.alphas.first().map_or(0, |a| a.len());
        lambdas
            .iter()
            .zip(&self.alphas)
            .try_fold(BurnsideElement::zero(n), |acc, (&l, a)| {
                acc.add_scaled(l, a)
            })
    }

    /// Coefficients of `x` in the `α`-basis. The coefficient of `α_P` is the
    /// number of `[S/P]` orbits at the fully normalized representative `P`;
    /// the result is verified by rebuilding `x` from it.
    pub fn decompose<F: FusionSystem + ?Sized>(
        &self,
        x: &BurnsideElement,
        fusion: &F,
    ) -> Result<Vec<i64>> {
        let marks = fusion.ring().mark(x)?;
        if let Some(pair) = first_unstable(&marks, fusion, |_| true) {
            return Err(not_stable(fusion, &marks, pair));
        }
        let lambdas: Vec<i64> = (0..fusion.num_fusion_classes())
            .map(|f| x.coeff(fusion.fully_normalized(f)))
            .collect();
        if &self.reconstruct(&lambdas)? != x {
            return Err(Error::Invariant(
                "alpha decomposition does not reconstruct the element".into(),
            ));
        }
        Ok(lambdas)
    }
}

/// Builds `α_P` for every `F`-class: seed `Σ (|N_S P|/|N_S P'|)·[S/P']` over
/// the members `P'` of the class, then stabilize below `P`.
pub fn alpha_basis<F: FusionSystem + ?Sized>(fusion: &F) -> Result<AlphaBasis> {
    let ring = fusion.ring();
    let nf = fusion.num_fusion_classes();
    let mut alphas = Vec::with_capacity(nf);
    let mut steps = Vec::with_capacity(nf);
    for f in 0..nf {
        let p = fusion.fully_normalized(f);
        let n_p = ring.normalizer_order(p);
        let mut seed = ring.zero();
        for &q in &fusion.fusion_classes()[f] {
            let n_q = ring.normalizer_order(q);
            if n_p % n_q != 0 {
                return Err(Error::Invariant(format!(
                    "|N_S {}| = {} does not divide |N_S {}| = {}",
                    ring.label(q),
                    n_q,
                    ring.label(p),
                    n_p
                )));
            }
            seed = seed.add_scaled(n_p / n_q, &ring.transitive(q))?;
        }
        let below: Vec<usize> = (0..nf)
            .filter(|&g| g != f && fusion.subconjugate(g, f))
            .collect();
        let out = stabilize(&seed, fusion, &below)?;
        alphas.push(out.element);
        steps.push(out.steps);
    }
    Ok(AlphaBasis { alphas, steps })
}

/// Convenience wrapper building the `α`-basis on the fly.
pub fn decompose<F: FusionSystem + ?Sized>(x: &BurnsideElement, fusion: &F) -> Result<Vec<i64>> {
    alpha_basis(fusion)?.decompose(x, fusion)
}

/// The mark homomorphism of `A(F)`: the common mark on each `F`-class.
pub fn phi_fusion<F: FusionSystem + ?Sized>(
    x: &BurnsideElement,
    fusion: &F,
) -> Result<FMarkVector> {
    let marks = fusion.ring().mark(x)?;
    if let Some(pair) = first_unstable(&marks, fusion, |_| true) {
        return Err(not_stable(fusion, &marks, pair));
    }
    Ok(FMarkVector::new(
        fusion
            .fusion_classes()
            .iter()
            .map(|members| marks.mark(members[0]))
            .collect(),
    ))
}

/// `Ψ_P(ξ) = Σ_{s̄ ∈ W_S P} ξ_{[⟨s⟩P]_F} mod |W_S P|`, at the fully
/// normalized representative `P` of each `F`-class.
pub fn psi_fusion<F: FusionSystem + ?Sized>(
    xi: &FMarkVector,
    fusion: &F,
) -> Result<FObstructionVector> {
    let nf = fusion.num_fusion_classes();
    if xi.len() != nf {
        return Err(Error::Input(format!(
            "vector length {} does not match {} F-classes",
            xi.len(),
            nf
        )));
    }
    let ring = fusion.ring();
    let mut residues = Vec::with_capacity(nf);
    let mut moduli = Vec::with_capacity(nf);
    for f in 0..nf {
        let p = fusion.fully_normalized(f);
        let w = ring.weyl_order(p);
        let acc = ring.psi_terms(p).iter().fold(0i64, |acc, &c| {
            (acc + xi.marks[fusion.fusion_class_of(c)].rem_euclid(w)) % w
        });
        residues.push(acc);
        moduli.push(w);
    }
    Ok(ObstructionVector::new(residues, moduli))
}

/// Unreduced coefficient matrix of `Ψ` over `F`-classes.
pub fn psi_fusion_matrix<F: FusionSystem + ?Sized>(fusion: &F) -> Vec<Vec<i64>> {
    let nf = fusion.num_fusion_classes();
    let mut m = vec![vec![0i64; nf]; nf];
    for (f, row) in m.iter_mut().enumerate() {
        for &c in fusion.ring().psi_terms(fusion.fully_normalized(f)) {
            row[fusion.fusion_class_of(c)] += 1;
        }
    }
    m
}

/// `M[f][g] = Φ_{P_f}(α_g)`: the mark homomorphism restricted to the span of
/// the `α`s, in `F`-class order.
pub fn alpha_matrix<F: FusionSystem + ?Sized>(
    fusion: &F,
    basis: &AlphaBasis,
) -> Result<Vec<Vec<i64>>> {
    let nf = fusion.num_fusion_classes();
    let cols = basis
        .alphas
        .iter()
        .map(|a| fusion.ring().mark(a))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..nf)
        .map(|f| {
            let p = fusion.fully_normalized(f);
            cols.iter().map(|c| c.mark(p)).collect()
        })
        .collect())
}

/// Solves `M λ = ξ` over the integers for the lower triangular `α`-matrix.
pub fn solve_alpha_marks(matrix: &[Vec<i64>], xi: &[i64]) -> Result<Option<Vec<i64>>> {
    let n = matrix.len();
    let mut lambdas = vec![0i64; n];
    for i in 0..n {
        let mut rem = xi[i];
        for j in 0..i {
            rem = checked_add(
                rem,
                -checked_mul(matrix[i][j], lambdas[j], "alpha solve")?,
                "alpha solve",
            )?;
        }
        if rem % matrix[i][i] != 0 {
            return Ok(None);
        }
        lambdas[i] = rem / matrix[i][i];
    }
    Ok(Some(lambdas))
}

/// Violations of the defining properties of the `α_P`, as messages.
///
/// Checked per `α_P`: non-negative orbit counts, `F`-stability,
/// `Φ_Q(α_P) = 0` unless `Q ≲_F P`, `c_{P'} = 1` and `Φ_{P'} = |W_S P'|` at
/// fully normalized `P' ∼_F P`, and `c_Q = 0` at fully normalized
/// `Q ≁_F P`.
pub fn alpha_property_violations<F: FusionSystem + ?Sized>(
    fusion: &F,
    basis: &AlphaBasis,
) -> Result<Vec<String>> {
    let ring = fusion.ring();
    let mut out = Vec::new();
    for (f, alpha) in basis.alphas.iter().enumerate() {
        let name = fusion.fusion_label(f);
        if !alpha.is_set() {
            out.push(format!("alpha {} has a negative orbit count", name));
        }
        if !is_f_stable(alpha, fusion)? {
            out.push(format!("alpha {} is not F-stable", name));
        }
        let marks = ring.mark(alpha)?;
        for q in 0..ring.len() {
            let fq = fusion.fusion_class_of(q);
            if !fusion.subconjugate(fq, f) && marks.mark(q) != 0 {
                out.push(format!(
                    "alpha {} has mark {} at {} which is not F-subconjugate",
                    name,
                    marks.mark(q),
                    ring.label(q)
                ));
            }
            if !fusion.is_fully_normalized(q) {
                continue;
            }
            if fq == f {
                if alpha.coeff(q) != 1 || marks.mark(q) != ring.weyl_order(q) {
                    out.push(format!(
                        "alpha {} at fully normalized {}: c = {}, mark = {}, |W| = {}",
                        name,
                        ring.label(q),
                        alpha.coeff(q),
                        marks.mark(q),
                        ring.weyl_order(q)
                    ));
                }
            } else if alpha.coeff(q) != 0 {
                out.push(format!(
                    "alpha {} has {} orbits at fully normalized {} of another F-class",
                    name,
                    alpha.coeff(q),
                    ring.label(q)
                ));
            }
        }
    }
    Ok(out)
}

/// Checks `0 → A(F) → Ω̃(F) → Obs(F) → 0`.
pub fn verify_ses_fusion<F: FusionSystem + ?Sized>(fusion: &F, seed: u64) -> Result<SesReport> {
    let ring = fusion.ring();
    let basis = alpha_basis(fusion)?;
    let nf = fusion.num_fusion_classes();
    let mut checks = Vec::new();

    let violations = alpha_property_violations(fusion, &basis)?;
    checks.push(if violations.is_empty() {
        CheckOutcome::pass("alpha properties", format!("all {} alphas", nf))
    } else {
        CheckOutcome::fail("alpha properties", violations.join("; "), None)
    });

    let mut bad = None;
    for (f, alpha) in basis.alphas.iter().enumerate() {
        let psi = psi_fusion(&phi_fusion(alpha, fusion)?, fusion)?;
        if !psi.is_zero() {
            bad = Some((f, psi));
            break;
        }
    }
    checks.push(match bad {
        None => CheckOutcome::pass("psi . phi = 0", format!("on all {} alphas", nf)),
        Some((f, psi)) => CheckOutcome::fail(
            "psi . phi = 0",
            format!("Psi(Phi(alpha {})) = {}", fusion.fusion_label(f), psi),
            Some(psi.residues().to_vec()),
        ),
    });

    let psi_matrix = psi_fusion_matrix(fusion);
    checks.push(check_unitriangular(&psi_matrix));

    let m = alpha_matrix(fusion, &basis)?;
    let moduli: Vec<i64> = (0..nf)
        .map(|f| ring.weyl_order(fusion.fully_normalized(f)))
        .collect();
    checks.push(check_exactness(
        &moduli,
        &psi_matrix,
        |xi| Ok(psi_fusion(&FMarkVector::new(xi.to_vec()), fusion)?.is_zero()),
        |xi| {
            let Some(lambdas) = solve_alpha_marks(&m, xi)? else {
                return Ok(false);
            };
            let x = basis.reconstruct(&lambdas)?;
            if ring.mark(&x)? != FMarkVector::new(xi.to_vec()).embed(fusion) {
                return Err(Error::Invariant(
                    "alpha solve does not reproduce the marks".into(),
                ));
            }
            Ok(true)
        },
        seed,
    )?);

    let obstruction_order = fusion.obstruction_order()?;
    let triangular = (0..nf).all(|i| (i + 1..nf).all(|j| m[i][j] == 0));
    let diag_ok = (0..nf).all(|i| m[i][i] == moduli[i]);
    let det = m.iter().enumerate().try_fold(1i64, |acc, (i, row)| {
        checked_mul(acc, row[i], "alpha determinant")
    })?;
    let detail = format!(
        "alpha matrix triangular: {}, diagonal = |W_S P|: {}, product of diagonal {} vs |Obs(F)| {}",
        triangular, diag_ok, det, obstruction_order
    );
    checks.push(if triangular && diag_ok && det == obstruction_order {
        CheckOutcome::pass("|coker phi| = |Obs(F)|", detail)
    } else {
        CheckOutcome::fail(
            "|coker phi| = |Obs(F)|",
            detail,
            Some((0..nf).map(|i| m[i][i]).collect()),
        )
    });

    Ok(SesReport {
        title: format!(
            "fusion SES for S of order {} with {} F-classes",
            ring.group().order(),
            nf
        ),
        checks,
        obstruction_order,
    })
}
