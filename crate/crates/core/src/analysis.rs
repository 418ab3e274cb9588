//! Filtrations, characteristics and indecomposability of 0-Hecke modules.
//!
//! Indecomposability of `V_α` is certified twice: by replaying the argument
//! (cyclic generation from the super-standard tableau plus a separating
//! generator for every other tableau) and by computing the full commutant
//! `{f : f π_i = π_i f}` exactly. A one-dimensional commutant means every
//! endomorphism is a scalar, so the only idempotents are 0 and 1.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, VecDeque};

use num::{BigRational, One, Zero};

use crate::combinatorics::{from_descent_set, to_descent_set, Composition, DescentSet};
use crate::error::{Error, Result};
use crate::hecke::{quotient_module, GeneratorImage, HeckeModule, ModuleKind};
use crate::linalg::{RationalMatrix, SparseRow, SparseSystem};
use crate::qsym::{Basis, BasisExpansion};

/// A linear extension of "reachable by the action": if some generator
/// sequence sends `T` to `S ≠ T`, then `S` comes before `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationOrder {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl FiltrationOrder {
    /// Basis indices, first filtration step first.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, b: usize) -> usize {
        self.position[b]
    }

    /// True iff every `MovedTo` edge points to an earlier element.
    pub fn respects(&self, m: &HeckeModule) -> bool {
        let act = m.action();
        (1..=act.generators()).all(|i| {
            (0..m.dim()).all(|b| match act.image(i, b) {
                GeneratorImage::MovedTo(t) => self.position[t] < self.position[b],
                _ => true,
            })
        })
    }
}

/// Topological order of the action graph with sinks first; ties go to the
/// smallest basis index.
pub fn filtration_order(m: &HeckeModule) -> Result<FiltrationOrder> {
    let dim = m.dim();
    let act = m.action();
    let mut successors = vec![Vec::new(); dim];
    let mut predecessors = vec![Vec::new(); dim];
    for i in 1..=act.generators() {
        for b in 0..dim {
            if let GeneratorImage::MovedTo(t) = act.image(i, b) {
                if !successors[b].contains(&t) {
                    successors[b].push(t);
                    predecessors[t].push(b);
                }
            }
        }
    }
    let mut pending: Vec<usize> = successors.iter().map(Vec::len).collect();
    let mut ready: BinaryHeap<Reverse<usize>> = (0..dim).filter(|&b| pending[b] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(dim);
    while let Some(Reverse(b)) = ready.pop() {
        order.push(b);
        for &p in &predecessors[b] {
            pending[p] -= 1;
            if pending[p] == 0 {
                ready.push(Reverse(p));
            }
        }
    }
    if order.len() != dim {
        return Err(Error::Internal(format!(
            "action graph of {}_{} has a cycle",
            m.kind().label(),
            m.alpha()
        )));
    }
    let mut position = vec![0; dim];
    for (k, &b) in order.iter().enumerate() {
        position[b] = k;
    }
    Ok(FiltrationOrder { order, position })
}

/// The composition `β` of the one-dimensional factor spanned by basis element
/// `b`: `S(β)` is the set of generators that do not fix `b`.
pub fn factor_of(m: &HeckeModule, b: usize) -> Composition {
    let act = m.action();
    let moved = (1..=act.generators())
        .filter(|&i| act.image(i, b) != GeneratorImage::Fixed)
        .collect();
    from_descent_set(&DescentSet::new(m.n(), moved).expect("generators lie in 1..n-1"))
        .expect("valid descent set")
}

/// Composition factors, one per basis element, in basis order.
pub fn composition_factors(m: &HeckeModule) -> Vec<Composition> {
    (0..m.dim()).map(|b| factor_of(m, b)).collect()
}

/// `Σ F_β` over the composition factors.
pub fn characteristic(m: &HeckeModule) -> BasisExpansion {
    let mut out = BasisExpansion::zero(Basis::Fundamental, m.n());
    for beta in composition_factors(m) {
        out.add_term(beta, BigRational::one()).expect("factor has module degree");
    }
    out
}

/// Breadth-first orbit of a basis element under the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicGeneration {
    pub seed: usize,
    /// For each reached basis index, a generator sequence `[i_1, …, i_m]` with
    /// `π_{i_1} ⋯ π_{i_m}(seed) = index`.
    pub witnesses: BTreeMap<usize, Vec<usize>>,
    pub unreached: Vec<usize>,
}

impl CyclicGeneration {
    pub fn is_total(&self) -> bool {
        self.unreached.is_empty()
    }

    /// Re-applies every witness sequence and checks where it lands.
    pub fn replay(&self, m: &HeckeModule) -> bool {
        self.witnesses
            .iter()
            .all(|(&target, seq)| m.action().apply_basis_sequence(seq, self.seed) == Some(target))
    }
}

/// Since generators send basis elements to basis elements or zero, the
/// submodule generated by `seed` is spanned by the basis elements reached.
pub fn cyclic_generation(m: &HeckeModule, seed: usize) -> Result<CyclicGeneration> {
    if seed >= m.dim() {
        return Err(Error::BasisIndexOutOfRange { index: seed, dim: m.dim() });
    }
    let act = m.action();
    let mut witnesses = BTreeMap::new();
    witnesses.insert(seed, Vec::new());
    let mut queue = VecDeque::from([seed]);
    while let Some(b) = queue.pop_front() {
        for i in 1..=act.generators() {
            if let GeneratorImage::MovedTo(t) = act.image(i, b) {
                if !witnesses.contains_key(&t) {
                    let mut seq = vec![i];
                    seq.extend_from_slice(&witnesses[&b]);
                    witnesses.insert(t, seq);
                    queue.push_back(t);
                }
            }
        }
    }
    let unreached = (0..m.dim()).filter(|b| !witnesses.contains_key(b)).collect();
    Ok(CyclicGeneration {
        seed,
        witnesses,
        unreached,
    })
}

/// For each basis element `P` other than the generator `Ŝ`, the smallest
/// generator `i` with `π_i Ŝ = Ŝ` and `π_i P ≠ P`; the second component lists
/// the elements for which no such generator exists.
fn separation_search(m: &HeckeModule) -> (BTreeMap<usize, usize>, Vec<usize>) {
    let act = m.action();
    let seed = m.generator_index();
    let fixing: Vec<usize> = (1..=act.generators())
        .filter(|&i| act.image(i, seed) == GeneratorImage::Fixed)
        .collect();
    let mut found = BTreeMap::new();
    let mut missing = Vec::new();
    for p in (0..m.dim()).filter(|&p| p != seed) {
        match fixing.iter().find(|&&i| act.image(i, p) != GeneratorImage::Fixed) {
            Some(&i) => {
                found.insert(p, i);
            }
            None => missing.push(p),
        }
    }
    (found, missing)
}

/// Separating generators for every basis element other than `Ŝ_α`.
pub fn separation_witnesses(m: &HeckeModule) -> Result<BTreeMap<usize, usize>> {
    let (found, missing) = separation_search(m);
    match missing.first() {
        None => Ok(found),
        Some(&index) => Err(Error::SeparationFailure {
            alpha: m.alpha().clone(),
            index,
        }),
    }
}

/// An exact basis of the commutant, each element an endomorphism `f` stored
/// as a `dim × dim` matrix (column `c` is `f` of basis element `c`).
#[derive(Debug, Clone)]
pub struct Commutant {
    pub dim: usize,
    pub basis: Vec<RationalMatrix>,
}

/// Unknown `f[r][c]` is variable `r * dim + c`.
fn commutator_system(m: &HeckeModule) -> SparseSystem {
    let dim = m.dim();
    let act = m.action();
    let mut system = SparseSystem::new(dim * dim);
    for i in 1..=act.generators() {
        let mut preimages = vec![Vec::new(); dim];
        for k in 0..dim {
            if let Some(r) = act.apply_basis(i, k) {
                preimages[r].push(k);
            }
        }
        for r in 0..dim {
            for c in 0..dim {
                // (f π_i)[r][c] - (π_i f)[r][c]
                let mut terms: Vec<(usize, BigRational)> = Vec::new();
                if let Some(k) = act.apply_basis(i, c) {
                    terms.push((r * dim + k, BigRational::one()));
                }
                for &k in &preimages[r] {
                    terms.push((k * dim + c, -BigRational::one()));
                }
                system.push(terms).expect("variables in range");
            }
        }
    }
    system
}

fn to_matrix(dim: usize, v: &SparseRow) -> RationalMatrix {
    let mut f = RationalMatrix::zeros(dim, dim);
    for (var, x) in v {
        f.set(var / dim, var % dim, x.clone());
    }
    f
}

/// The commutant, from the exact null space of the stacked commutator
/// equations `f P_i − P_i f = 0`.
pub fn commutant(m: &HeckeModule) -> Commutant {
    let system = commutator_system(m);
    let basis = system
        .nullspace()
        .iter()
        .map(|v| to_matrix(m.dim(), v))
        .collect();
    Commutant { dim: system.nullity(), basis }
}

pub fn commutant_dimension(m: &HeckeModule) -> usize {
    commutator_system(m).nullity()
}

/// The matrix of `π_i` on the module basis.
pub fn generator_matrix(m: &HeckeModule, i: usize) -> Result<RationalMatrix> {
    if i == 0 || i > m.action().generators() {
        return Err(Error::GeneratorOutOfRange { index: i, n: m.n() });
    }
    let mut p = RationalMatrix::zeros(m.dim(), m.dim());
    for c in 0..m.dim() {
        if let Some(r) = m.action().apply_basis(i, c) {
            p.set(r, c, BigRational::one());
        }
    }
    Ok(p)
}

/// Commutant dimension from dense generator matrices and a dense null space.
/// Quadratic in `dim²`; intended for small modules.
pub fn commutant_dimension_dense(m: &HeckeModule) -> usize {
    let dim = m.dim();
    let vars = dim * dim;
    let gens = m.action().generators();
    let mut rows = Vec::with_capacity(gens * vars);
    for i in 1..=gens {
        let p = generator_matrix(m, i).expect("generator in range");
        for r in 0..dim {
            for c in 0..dim {
                let mut row = vec![BigRational::zero(); vars];
                for k in 0..dim {
                    row[r * dim + k] += p.get(k, c);
                    row[k * dim + c] -= p.get(r, k);
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return vars;
    }
    RationalMatrix::from_rows(rows).expect("rectangular").nullspace().len()
}

/// Everything needed to re-check that `V_α` is indecomposable.
#[derive(Debug, Clone)]
pub struct IndecomposabilityCertificate {
    pub alpha: Composition,
    pub dim: usize,
    /// Basis index of the super-standard tableau.
    pub seed: usize,
    pub cyclic: CyclicGeneration,
    pub separation: BTreeMap<usize, usize>,
    pub separation_missing: Vec<usize>,
    pub commutant_dim: usize,
    /// Names of the failing components; empty for a valid certificate.
    pub failures: Vec<&'static str>,
}

impl IndecomposabilityCertificate {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }

    /// Replays every witness against a freshly built `V_α`.
    pub fn replay(&self) -> bool {
        let m = quotient_module(&self.alpha);
        if m.dim() != self.dim || m.generator_index() != self.seed || !self.cyclic.replay(&m) {
            return false;
        }
        let fixed_at_seed = |i: usize| m.action().image(i, self.seed) == GeneratorImage::Fixed;
        let s_alpha: DescentSet = to_descent_set(&self.alpha);
        self.separation.iter().all(|(&p, &i)| {
            p != self.seed
                && !s_alpha.contains(i)
                && fixed_at_seed(i)
                && m.action().image(i, p) != GeneratorImage::Fixed
        })
    }
}

/// Builds `V_α` and certifies it: cyclic generation from `Ŝ_α`, total
/// separation, and a one-dimensional commutant.
pub fn indecomposability_certificate(alpha: &Composition) -> IndecomposabilityCertificate {
    let m = quotient_module(alpha);
    certificate_for(&m)
}

/// As [`indecomposability_certificate`] for an already built quotient module.
pub fn certificate_for(m: &HeckeModule) -> IndecomposabilityCertificate {
    debug_assert_eq!(m.kind(), ModuleKind::Quotient);
    let seed = m.generator_index();
    let cyclic = cyclic_generation(m, seed).expect("seed is a basis index");
    let (separation, separation_missing) = separation_search(m);
    let commutant_dim = commutant_dimension(m);
    let mut failures = Vec::new();
    if !cyclic.is_total() {
        failures.push("cyclic");
    }
    if !separation_missing.is_empty() {
        failures.push("separation");
    }
    if commutant_dim != 1 {
        failures.push("commutant");
    }
    IndecomposabilityCertificate {
        alpha: m.alpha().clone(),
        dim: m.dim(),
        seed,
        cyclic,
        separation,
        separation_missing,
        commutant_dim,
        failures,
    }
}
