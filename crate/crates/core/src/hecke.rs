//! 0-Hecke modules on words and on standard immaculate tableaux.
//!
//! The generator `π_i` acts on a word by sorting the letters in positions
//! `i, i+1` into decreasing order (swapping when `w_i < w_{i+1}`). Words that
//! are not Y-words span a submodule, and the quotient has the standard
//! immaculate tableaux as a basis: `π_i T` is zero when `i` and `i+1` are both
//! in the first column, `T` when `i` lies weakly below `i+1`, and the tableau
//! with `i` and `i+1` exchanged otherwise.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::BigRational;
use num::Zero;

use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::tableaux::{
    is_y_word, standard_immaculate_tableaux, super_standard, tableau_to_yword, yword_to_tableau,
    StandardImmaculateTableau, Word,
};

/// Image of one basis element under one generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorImage {
    Fixed,
    Zero,
    MovedTo(usize),
}

impl GeneratorImage {
    /// The resulting basis index, `None` for zero.
    pub fn resolve(self, source: usize) -> Option<usize> {
        match self {
            GeneratorImage::Fixed => Some(source),
            GeneratorImage::Zero => None,
            GeneratorImage::MovedTo(k) => Some(k),
        }
    }
}

/// For each generator `π_1..π_{n-1}`, the image of every basis index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorAction {
    n: usize,
    images: Vec<Vec<GeneratorImage>>,
}

impl GeneratorAction {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of generators, `max(n - 1, 0)`.
    pub fn generators(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize, b: usize) -> GeneratorImage {
        self.images[i - 1][b]
    }

    pub fn images_of(&self, i: usize) -> &[GeneratorImage] {
        &self.images[i - 1]
    }

    /// Basis-level action: `None` when the image is zero.
    pub fn apply_basis(&self, i: usize, b: usize) -> Option<usize> {
        self.image(i, b).resolve(b)
    }

    /// Basis-level action of a generator sequence, rightmost generator first.
    pub fn apply_basis_sequence(&self, sequence: &[usize], b: usize) -> Option<usize> {
        sequence
            .iter()
            .rev()
            .try_fold(b, |cur, &i| self.apply_basis(i, cur))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModuleKind {
    /// `M_α`, spanned by all words of content `α`.
    Word,
    /// `V_α = M_α / N_α`, spanned by standard immaculate tableaux.
    Quotient,
}

impl ModuleKind {
    pub fn label(self) -> &'static str {
        match self {
            ModuleKind::Word => "M",
            ModuleKind::Quotient => "V",
        }
    }
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleKind::Word => "word",
            ModuleKind::Quotient => "quotient",
        })
    }
}

#[derive(Debug, Clone)]
enum ModuleBasis {
    Words(Vec<Word>),
    Tableaux(Vec<StandardImmaculateTableau>),
}

/// A module with a distinguished basis on which every generator acts by a
/// basis element, by zero, or trivially.
#[derive(Debug, Clone)]
pub struct HeckeModule {
    kind: ModuleKind,
    alpha: Composition,
    basis: ModuleBasis,
    // Y-word (quotient) or word (word module) -> basis index
    index: HashMap<Word, usize>,
    action: GeneratorAction,
}

impl HeckeModule {
    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }

    pub fn n(&self) -> usize {
        self.alpha.size()
    }

    pub fn dim(&self) -> usize {
        match &self.basis {
            ModuleBasis::Words(w) => w.len(),
            ModuleBasis::Tableaux(t) => t.len(),
        }
    }

    pub fn action(&self) -> &GeneratorAction {
        &self.action
    }

    /// The word labelling basis element `b` (its Y-word for the quotient).
    pub fn word(&self, b: usize) -> Word {
        match &self.basis {
            ModuleBasis::Words(w) => w[b].clone(),
            ModuleBasis::Tableaux(t) => tableau_to_yword(&t[b]),
        }
    }

    /// The tableau of basis element `b`; `None` for the word module.
    pub fn tableau(&self, b: usize) -> Option<&StandardImmaculateTableau> {
        match &self.basis {
            ModuleBasis::Words(_) => None,
            ModuleBasis::Tableaux(t) => Some(&t[b]),
        }
    }

    pub fn index_of_word(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn index_of_tableau(&self, t: &StandardImmaculateTableau) -> Option<usize> {
        match self.kind {
            ModuleKind::Word => None,
            ModuleKind::Quotient => self.index_of_word(&tableau_to_yword(t)),
        }
    }

    /// The cyclic generator: the sorted word `1^{α_1}⋯k^{α_k}`, which is also
    /// the Y-word of the super-standard tableau.
    pub fn generator_index(&self) -> usize {
        self.index_of_word(&Word::sorted(&self.alpha))
            .expect("sorted word is always a basis element")
    }

    fn check_generator(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n().max(1) {
            return Err(Error::GeneratorOutOfRange { index: i, n: self.n() });
        }
        Ok(())
    }
}

/// All words of the given content in lexicographic order.
pub(crate) fn words_of_content(content: &Composition) -> Vec<Word> {
    fn go(remaining: &mut [usize], prefix: &mut Vec<usize>, n: usize, content: &Composition, out: &mut Vec<Word>) {
        if prefix.len() == n {
            out.push(Word::from_parts_unchecked(prefix.clone(), content.clone()));
            return;
        }
        for letter in 1..=remaining.len() {
            if remaining[letter - 1] == 0 {
                continue;
            }
            remaining[letter - 1] -= 1;
            prefix.push(letter);
            go(remaining, prefix, n, content, out);
            prefix.pop();
            remaining[letter - 1] += 1;
        }
    }
    let mut out = Vec::new();
    go(&mut content.parts().to_vec(), &mut Vec::new(), content.size(), content, &mut out);
    out
}

/// `π_i w` on a single word: `None` when `w_i ≥ w_{i+1}` (fixed), otherwise
/// the word with positions `i, i+1` exchanged.
pub(crate) fn act_on_word(w: &Word, i: usize) -> Option<Word> {
    let letters = w.letters();
    if letters[i - 1] >= letters[i] {
        return None;
    }
    let mut swapped = letters.to_vec();
    swapped.swap(i - 1, i);
    Some(Word::from_parts_unchecked(swapped, w.content().clone()))
}

/// `π_i T` on a single standard immaculate tableau, per the tableau rule.
pub(crate) fn act_on_tableau(t: &StandardImmaculateTableau, i: usize) -> TableauImage {
    if t.in_first_column(i) && t.in_first_column(i + 1) {
        TableauImage::Zero
    } else if t.row_of(i) >= t.row_of(i + 1) {
        TableauImage::Fixed
    } else {
        TableauImage::Swapped(t.swap_letters(i))
    }
}

pub(crate) enum TableauImage {
    Fixed,
    Zero,
    Swapped(StandardImmaculateTableau),
}

/// `M_α`: the span of all words of content `α`.
pub fn word_module(alpha: &Composition) -> HeckeModule {
    let words = words_of_content(alpha);
    let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
    let n = alpha.size();
    let images = (1..n)
        .map(|i| {
            words
                .iter()
                .map(|w| match act_on_word(w, i) {
                    None => GeneratorImage::Fixed,
                    Some(v) => GeneratorImage::MovedTo(index[&v]),
                })
                .collect()
        })
        .collect();
    HeckeModule {
        kind: ModuleKind::Word,
        alpha: alpha.clone(),
        basis: ModuleBasis::Words(words),
        index,
        action: GeneratorAction { n, images },
    }
}

/// `V_α`: the quotient of `M_α` by the non-Y-words, on standard immaculate
/// tableaux ordered by their Y-words.
pub fn quotient_module(alpha: &Composition) -> HeckeModule {
    let tableaux = standard_immaculate_tableaux(alpha);
    let index: HashMap<Word, usize> = tableaux
        .iter()
        .enumerate()
        .map(|(k, t)| (tableau_to_yword(t), k))
        .collect();
    let n = alpha.size();
    let images = (1..n)
        .map(|i| {
            tableaux
                .iter()
                .map(|t| match act_on_tableau(t, i) {
                    TableauImage::Fixed => GeneratorImage::Fixed,
                    TableauImage::Zero => GeneratorImage::Zero,
                    TableauImage::Swapped(s) => GeneratorImage::MovedTo(index[&tableau_to_yword(&s)]),
                })
                .collect()
        })
        .collect();
    HeckeModule {
        kind: ModuleKind::Quotient,
        alpha: alpha.clone(),
        basis: ModuleBasis::Tableaux(tableaux),
        index,
        action: GeneratorAction { n, images },
    }
}

/// Sparse vector over a module basis.
pub type SparseVector = BTreeMap<usize, BigRational>;

/// Linear extension of `π_i` to a sparse vector.
pub fn apply_generator(m: &HeckeModule, i: usize, v: &SparseVector) -> Result<SparseVector> {
    m.check_generator(i)?;
    let mut out = SparseVector::new();
    for (&b, c) in v {
        if b >= m.dim() {
            return Err(Error::BasisIndexOutOfRange { index: b, dim: m.dim() });
        }
        if let Some(target) = m.action.apply_basis(i, b) {
            let slot = out.entry(target).or_insert_with(BigRational::zero);
            *slot += c;
            if slot.is_zero() {
                out.remove(&target);
            }
        }
    }
    Ok(out)
}

/// `π_{i_1} π_{i_2} ⋯ π_{i_m} v`, applying `π_{i_m}` first.
pub fn apply_sequence(m: &HeckeModule, sequence: &[usize], v: &SparseVector) -> Result<SparseVector> {
    for &i in sequence {
        m.check_generator(i)?;
    }
    sequence
        .iter()
        .rev()
        .try_fold(v.clone(), |acc, &i| apply_generator(m, i, &acc))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `π_i² = π_i`
    Idempotent,
    /// `π_i π_{i+1} π_i = π_{i+1} π_i π_{i+1}`
    Braid,
    /// `π_i π_j = π_j π_i` for `|i − j| > 1`
    FarCommutation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationViolation {
    pub relation: Relation,
    pub generators: (usize, usize),
    pub basis_index: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RelationReport {
    /// Number of (relation, generators, basis element) triples checked.
    pub checked: usize,
    pub violations: Vec<RelationViolation>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the defining relations of `H_n(0)` on every basis element.
pub fn verify_relations(m: &HeckeModule) -> RelationReport {
    let act = &m.action;
    let g = act.generators();
    let mut report = RelationReport::default();
    let check = |report: &mut RelationReport, relation, generators, b, lhs: &[usize], rhs: &[usize]| {
        report.checked += 1;
        if act.apply_basis_sequence(lhs, b) != act.apply_basis_sequence(rhs, b) {
            report.violations.push(RelationViolation {
                relation,
                generators,
                basis_index: b,
            });
        }
    };
    for b in 0..m.dim() {
        for i in 1..=g {
            check(&mut report, Relation::Idempotent, (i, i), b, &[i, i], &[i]);
            if let GeneratorImage::MovedTo(t) = act.image(i, b) {
                if t == b {
                    report.violations.push(RelationViolation {
                        relation: Relation::Idempotent,
                        generators: (i, i),
                        basis_index: b,
                    });
                }
            }
            if i < g {
                check(&mut report, Relation::Braid, (i, i + 1), b, &[i, i + 1, i], &[i + 1, i, i + 1]);
            }
            for j in i + 2..=g {
                check(&mut report, Relation::FarCommutation, (i, j), b, &[i, j], &[j, i]);
            }
        }
    }
    report
}

/// True iff every generator maps every non-Y-word of content `α` to a
/// non-Y-word, i.e. the non-Y-words span a submodule.
pub fn nonyword_closure_check(alpha: &Composition) -> bool {
    let n = alpha.size();
    words_of_content(alpha)
        .iter()
        .filter(|w| !is_y_word(w))
        .all(|w| (1..n).all(|i| act_on_word(w, i).map_or(true, |v| !is_y_word(&v))))
}

/// True iff the tableau action agrees with the word action reduced modulo
/// non-Y-words, transported through the Y-word bijection.
pub fn quotient_consistency_check(alpha: &Composition) -> bool {
    let quotient = quotient_module(alpha);
    let n = alpha.size();
    (0..quotient.dim()).all(|b| {
        let w = quotient.word(b);
        (1..n).all(|i| {
            let expected = match act_on_word(&w, i) {
                None => GeneratorImage::Fixed,
                Some(v) if !is_y_word(&v) => GeneratorImage::Zero,
                Some(v) => {
                    let t = yword_to_tableau(&v).expect("Y-word");
                    GeneratorImage::MovedTo(quotient.index_of_tableau(&t).expect("standard tableau"))
                }
            };
            quotient.action.image(i, b) == expected
        })
    })
}

/// The super-standard tableau of the quotient module's shape.
pub fn super_standard_of(m: &HeckeModule) -> StandardImmaculateTableau {
    super_standard(&m.alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::compositions_of;
    use num::One;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn unit(b: usize) -> SparseVector {
        [(b, BigRational::one())].into_iter().collect()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn word_module_basics() {
        assert_eq!(word_module(&c(&[2, 2, 3])).dim(), 210);
        let m = word_module(&c(&[2, 1, 1]));
        let from = m.index_of_word(&w("1231")).unwrap();
        let to = m.index_of_word(&w("1321")).unwrap();
        assert_eq!(m.action().image(2, from), GeneratorImage::MovedTo(to));
        let m11 = word_module(&c(&[1, 1]));
        let w21 = m11.index_of_word(&w("21")).unwrap();
        assert_eq!(m11.action().image(1, w21), GeneratorImage::Fixed);
        let w12 = m11.index_of_word(&w("12")).unwrap();
        assert_eq!(apply_generator(&m11, 1, &unit(w12)).unwrap(), unit(w21));
        for alpha in compositions_of(5) {
            let m = word_module(&alpha);
            for i in 1..5 {
                assert!(m.action().images_of(i).iter().all(|g| *g != GeneratorImage::Zero));
            }
        }
    }

    #[test]
    fn tableau_action_example() {
        let alpha = c(&[3, 4, 2]);
        let v = quotient_module(&alpha);
        let t = yword_to_tableau(&w("112322231")).unwrap();
        let b = v.index_of_tableau(&t).unwrap();
        for i in [1, 4, 5, 6, 8] {
            assert_eq!(v.action().image(i, b), GeneratorImage::Fixed, "pi_{i}");
        }
        assert_eq!(v.action().image(3, b), GeneratorImage::Zero);
        let p2 = StandardImmaculateTableau::new(vec![vec![1, 3, 9], vec![2, 5, 6, 7], vec![4, 8]]).unwrap();
        let p7 = StandardImmaculateTableau::new(vec![vec![1, 2, 9], vec![3, 5, 6, 8], vec![4, 7]]).unwrap();
        assert_eq!(v.action().image(2, b), GeneratorImage::MovedTo(v.index_of_tableau(&p2).unwrap()));
        assert_eq!(v.action().image(7, b), GeneratorImage::MovedTo(v.index_of_tableau(&p7).unwrap()));
        assert_eq!(apply_generator(&v, 3, &unit(b)).unwrap(), SparseVector::new());
    }

    #[test]
    fn quotient_module_basics() {
        let v = quotient_module(&c(&[5]));
        assert_eq!(v.dim(), 1);
        for i in 1..5 {
            assert_eq!(v.action().image(i, 0), GeneratorImage::Fixed);
        }
        assert_eq!(quotient_module(&c(&[2, 2, 3])).dim(), 24);
        assert_eq!(v.generator_index(), 0);
        assert_eq!(super_standard_of(&v), *v.tableau(0).unwrap());
    }

    #[test]
    fn zero_only_on_first_column_pairs() {
        for n in 1..=6 {
            for alpha in compositions_of(n) {
                let v = quotient_module(&alpha);
                for b in 0..v.dim() {
                    let t = v.tableau(b).unwrap();
                    for i in 1..n {
                        let zero = v.action().image(i, b) == GeneratorImage::Zero;
                        assert_eq!(zero, t.in_first_column(i) && t.in_first_column(i + 1));
                    }
                }
            }
        }
    }

    #[test]
    fn generator_range_errors() {
        let m = word_module(&c(&[2, 1]));
        assert!(matches!(apply_generator(&m, 0, &unit(0)), Err(Error::GeneratorOutOfRange { .. })));
        assert!(matches!(apply_generator(&m, 3, &unit(0)), Err(Error::GeneratorOutOfRange { .. })));
        assert!(matches!(apply_sequence(&m, &[1, 5], &unit(0)), Err(Error::GeneratorOutOfRange { .. })));
        assert!(matches!(apply_generator(&m, 1, &unit(9)), Err(Error::BasisIndexOutOfRange { .. })));
    }

    #[test]
    fn sequences() {
        let m = word_module(&c(&[1, 1, 1]));
        let v: SparseVector = [(0, BigRational::one()), (3, BigRational::from_integer(2.into()))].into_iter().collect();
        assert_eq!(apply_sequence(&m, &[], &v).unwrap(), v);
        for i in 1..3 {
            assert_eq!(apply_sequence(&m, &[i, i], &v).unwrap(), apply_sequence(&m, &[i], &v).unwrap());
        }
        // right-to-left: π_1 π_2 (123) = π_1 (132) = 312
        let start = unit(m.index_of_word(&w("123")).unwrap());
        let end = unit(m.index_of_word(&w("312")).unwrap());
        assert_eq!(apply_sequence(&m, &[1, 2], &start).unwrap(), end);
    }

    #[test]
    fn relations_hold() {
        assert!(verify_relations(&quotient_module(&c(&[2, 2, 3]))).passed());
        let r = verify_relations(&word_module(&c(&[2, 1])));
        assert!(r.passed());
        assert!(r.checked > 0);
        assert!(verify_relations(&word_module(&c(&[4]))).passed());
        for n in 1..=5 {
            for alpha in compositions_of(n) {
                assert!(verify_relations(&word_module(&alpha)).passed());
                assert!(verify_relations(&quotient_module(&alpha)).passed());
            }
        }
    }

    #[test]
    fn corrupted_action_is_reported() {
        let mut m = word_module(&c(&[1, 1, 1]));
        // make π_1 send 123 to 132, breaking idempotence / braid
        let a = m.index_of_word(&w("123")).unwrap();
        let b = m.index_of_word(&w("132")).unwrap();
        m.action.images[0][a] = GeneratorImage::MovedTo(b);
        assert!(!verify_relations(&m).passed());
    }

    #[test]
    fn closure_and_consistency() {
        assert!(nonyword_closure_check(&c(&[2, 2, 3])));
        assert!(nonyword_closure_check(&c(&[1, 1])));
        assert!(nonyword_closure_check(&c(&[4])));
        for n in 0..=6 {
            for alpha in compositions_of(n) {
                assert!(quotient_consistency_check(&alpha), "{alpha}");
            }
        }
    }

    #[test]
    fn word_action_never_decreases_inversions() {
        for alpha in compositions_of(5) {
            let m = word_module(&alpha);
            for b in 0..m.dim() {
                for i in 1..5 {
                    let t = m.action().apply_basis(i, b).unwrap();
                    assert!(m.word(t).inversions() >= m.word(b).inversions());
                }
            }
        }
    }
}
