//! Expansions in the graded bases of QSym and NSym.
//!
//! QSym carries the monomial basis `M_α`, the fundamental basis `F_α` and the
//! dual immaculate basis `𝔖*_α`; NSym carries the complete homogeneous basis
//! `H_α` and the immaculate basis `𝔖_α`. The two are paired by
//! `⟨H_α, M_β⟩ = δ_{α,β}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{compositions_of, refines, Composition};
use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::tableaux::{descent_composition, kostka, standard_immaculate_tableaux};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algebra {
    QSym,
    NSym,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "M")]
    Monomial,
    #[serde(rename = "F")]
    Fundamental,
    DualImmaculate,
    #[serde(rename = "H")]
    Complete,
    Immaculate,
}

impl Basis {
    pub fn algebra(self) -> Algebra {
        match self {
            Basis::Monomial | Basis::Fundamental | Basis::DualImmaculate => Algebra::QSym,
            Basis::Complete | Basis::Immaculate => Algebra::NSym,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "M",
            Basis::Fundamental => "F",
            Basis::DualImmaculate => "DualImmaculate",
            Basis::Complete => "H",
            Basis::Immaculate => "Immaculate",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A homogeneous element of QSym or NSym written in one basis.
///
/// Keys are compositions of `degree`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct BasisExpansion {
    basis: Basis,
    degree: usize,
    coeffs: BTreeMap<Composition, BigRational>,
}

impl BasisExpansion {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        BasisExpansion {
            basis,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single basis element indexed by `alpha`.
    pub fn basis_element(basis: Basis, alpha: &Composition) -> Self {
        Self::term(basis, alpha, BigRational::one())
    }

    pub fn term(basis: Basis, alpha: &Composition, coeff: BigRational) -> Self {
        let mut e = Self::zero(basis, alpha.size());
        e.add_unchecked(alpha.clone(), coeff);
        e
    }

    /// The degree-0 unit `{[] → 1}`.
    pub fn unit(basis: Basis) -> Self {
        Self::basis_element(basis, &Composition::empty())
    }

    pub fn from_terms(
        basis: Basis,
        degree: usize,
        terms: impl IntoIterator<Item = (Composition, BigRational)>,
    ) -> Result<Self> {
        let mut e = Self::zero(basis, degree);
        for (alpha, c) in terms {
            e.add_term(alpha, c)?;
        }
        Ok(e)
    }

    pub fn add_term(&mut self, alpha: Composition, coeff: BigRational) -> Result<()> {
        if alpha.size() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: alpha.size(),
            });
        }
        self.add_unchecked(alpha, coeff);
        Ok(())
    }

    fn add_unchecked(&mut self, alpha: Composition, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn algebra(&self) -> Algebra {
        self.basis.algebra()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Composition, BigRational> {
        &self.coeffs
    }

    pub fn coeff(&self, alpha: &Composition) -> BigRational {
        self.coeffs.get(alpha).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &BasisExpansion) -> Result<BasisExpansion> {
        self.require_basis_of(other)?;
        let mut out = self.clone();
        for (alpha, c) in &other.coeffs {
            out.add_unchecked(alpha.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigRational) -> BasisExpansion {
        let mut out = Self::zero(self.basis, self.degree);
        for (alpha, c) in &self.coeffs {
            out.add_unchecked(alpha.clone(), c * factor);
        }
        out
    }

    /// Sum of the coefficients.
    pub fn coefficient_sum(&self) -> BigRational {
        self.coeffs.values().fold(BigRational::zero(), |a, b| a + b)
    }

    fn require(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::WrongBasis {
                expected: basis.to_string(),
                found: self.basis.to_string(),
            });
        }
        Ok(())
    }

    fn require_basis_of(&self, other: &BasisExpansion) -> Result<()> {
        other.require(self.basis)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    /// Rewrites a QSym element in the monomial basis.
    pub fn to_monomial(&self) -> Result<BasisExpansion> {
        match self.basis {
            Basis::Monomial => Ok(self.clone()),
            Basis::Fundamental => fundamental_to_monomial(self),
            Basis::DualImmaculate => {
                let mut out = Self::zero(Basis::Monomial, self.degree);
                for (alpha, c) in &self.coeffs {
                    for (beta, k) in dual_immaculate_via_kostka(alpha).coeffs {
                        out.add_unchecked(beta, k * c);
                    }
                }
                Ok(out)
            }
            other => Err(Error::WrongBasis {
                expected: "a QSym basis".into(),
                found: other.to_string(),
            }),
        }
    }

    /// Rewrites an NSym element in the complete homogeneous basis.
    pub fn to_complete(&self) -> Result<BasisExpansion> {
        match self.basis {
            Basis::Complete => Ok(self.clone()),
            Basis::Immaculate => {
                let mut out = Self::zero(Basis::Complete, self.degree);
                for (alpha, c) in &self.coeffs {
                    for (beta, k) in immaculate_in_h(alpha)?.coeffs {
                        out.add_unchecked(beta, k * c);
                    }
                }
                Ok(out)
            }
            other => Err(Error::WrongBasis {
                expected: "an NSym basis".into(),
                found: other.to_string(),
            }),
        }
    }
}

impl fmt::Debug for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (alpha, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            write!(f, "{}{}", self.basis.symbol(), alpha)?;
        }
        Ok(())
    }
}

/// `F_α = Σ_{β ≤ α} M_β`.
pub fn fundamental_to_monomial(x: &BasisExpansion) -> Result<BasisExpansion> {
    x.require(Basis::Fundamental)?;
    let all = compositions_of(x.degree);
    let mut out = BasisExpansion::zero(Basis::Monomial, x.degree);
    for (alpha, c) in &x.coeffs {
        for beta in &all {
            if refines(beta, alpha)? {
                out.add_unchecked(beta.clone(), c.clone());
            }
        }
    }
    Ok(out)
}

/// `M_α = Σ_{β ≤ α} (−1)^{ℓ(β)−ℓ(α)} F_β`.
pub fn monomial_to_fundamental(x: &BasisExpansion) -> Result<BasisExpansion> {
    x.require(Basis::Monomial)?;
    let all = compositions_of(x.degree);
    let mut out = BasisExpansion::zero(Basis::Fundamental, x.degree);
    for (alpha, c) in &x.coeffs {
        for beta in &all {
            if refines(beta, alpha)? {
                let sign = if (beta.len() - alpha.len()) % 2 == 0 {
                    c.clone()
                } else {
                    -c.clone()
                };
                out.add_unchecked(beta.clone(), sign);
            }
        }
    }
    Ok(out)
}

/// Quasi-shuffle of two compositions with multiplicities.
fn quasi_shuffle_words(u: &[usize], v: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), Vec<(Vec<usize>, BigInt)>>) -> Vec<(Vec<usize>, BigInt)> {
    if u.is_empty() {
        return vec![(v.to_vec(), BigInt::one())];
    }
    if v.is_empty() {
        return vec![(u.to_vec(), BigInt::one())];
    }
    let key = (u.to_vec(), v.to_vec());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut acc: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    let mut prepend = |lead: usize, rest: Vec<(Vec<usize>, BigInt)>| {
        for (w, c) in rest {
            let mut full = Vec::with_capacity(w.len() + 1);
            full.push(lead);
            full.extend(w);
            *acc.entry(full).or_insert_with(BigInt::zero) += c;
        }
    };
    prepend(u[0], quasi_shuffle_words(&u[1..], v, memo));
    prepend(v[0], quasi_shuffle_words(u, &v[1..], memo));
    prepend(u[0] + v[0], quasi_shuffle_words(&u[1..], &v[1..], memo));
    let out: Vec<_> = acc.into_iter().collect();
    memo.insert(key, out.clone());
    out
}

/// Product of two monomial expansions (the quasi-shuffle product).
pub fn quasi_shuffle(x: &BasisExpansion, y: &BasisExpansion) -> Result<BasisExpansion> {
    x.require(Basis::Monomial)?;
    y.require(Basis::Monomial)?;
    let mut memo = HashMap::new();
    let mut out = BasisExpansion::zero(Basis::Monomial, x.degree + y.degree);
    for (a, ca) in &x.coeffs {
        for (b, cb) in &y.coeffs {
            let coeff = ca * cb;
            for (w, k) in quasi_shuffle_words(a.parts(), b.parts(), &mut memo) {
                let gamma = Composition::new(w).expect("parts stay positive");
                out.add_unchecked(gamma, &coeff * BigRational::from_integer(k));
            }
        }
    }
    Ok(out)
}

/// `h_{α_1} h_{α_2} ⋯` in the monomial basis, with `h_k = F_{[k]}`.
pub fn h_in_qsym(alpha: &Composition) -> BasisExpansion {
    alpha
        .parts()
        .iter()
        .fold(BasisExpansion::unit(Basis::Monomial), |acc, &k| {
            let hk = fundamental_to_monomial(&BasisExpansion::basis_element(
                Basis::Fundamental,
                &Composition::row(k),
            ))
            .expect("fundamental input");
            quasi_shuffle(&acc, &hk).expect("monomial inputs")
        })
}

/// `𝔖*_α = Σ_β K_{α,β} M_β`.
pub fn dual_immaculate_via_kostka(alpha: &Composition) -> BasisExpansion {
    let table = kostka_matrix(alpha.size());
    let row = table.index_of(alpha);
    let mut out = BasisExpansion::zero(Basis::Monomial, alpha.size());
    for (col, beta) in table.compositions.iter().enumerate() {
        out.add_unchecked(beta.clone(), table.entries.get(row, col).clone());
    }
    out
}

/// `𝔖*_α = Σ_T F_{D(T)}` over standard immaculate tableaux of shape `α`.
pub fn dual_immaculate_via_fundamentals(alpha: &Composition) -> BasisExpansion {
    let mut out = BasisExpansion::zero(Basis::Fundamental, alpha.size());
    for t in standard_immaculate_tableaux(alpha) {
        out.add_unchecked(descent_composition(&t), BigRational::one());
    }
    out
}

/// `𝔖_α` in the `H` basis, from the inverse of the Kostka matrix.
///
/// With `H_β = Σ_γ K_{γ,β} 𝔖_γ`, the coefficient of `H_β` in `𝔖_α` is
/// `(K⁻¹)_{β,α}`.
pub fn immaculate_in_h(alpha: &Composition) -> Result<BasisExpansion> {
    let table = kostka_matrix(alpha.size());
    let inverse = table
        .inverse
        .as_ref()
        .map_err(|e| Error::Internal(format!("Kostka matrix of degree {}: {e}", table.degree)))?;
    let col = table.index_of(alpha);
    let mut out = BasisExpansion::zero(Basis::Complete, alpha.size());
    for (row, beta) in table.compositions.iter().enumerate() {
        out.add_unchecked(beta.clone(), inverse.get(row, col).clone());
    }
    Ok(out)
}

/// `⟨x, y⟩` for `x` in the `H` basis and `y` in the `M` basis.
pub fn pairing(x: &BasisExpansion, y: &BasisExpansion) -> Result<BigRational> {
    x.require(Basis::Complete)?;
    y.require(Basis::Monomial)?;
    if x.degree != y.degree {
        return Err(Error::DegreeMismatch {
            left: x.degree,
            right: y.degree,
        });
    }
    Ok(x.coeffs
        .iter()
        .filter_map(|(alpha, c)| y.coeffs.get(alpha).map(|d| c * d))
        .fold(BigRational::zero(), |a, b| a + b))
}

/// The full immaculate Kostka matrix of one degree, rows indexed by shape and
/// columns by content, both in graded-lexicographic order.
#[derive(Debug)]
pub struct KostkaMatrix {
    pub degree: usize,
    pub compositions: Vec<Composition>,
    pub entries: RationalMatrix,
    pub determinant: BigRational,
    pub inverse: std::result::Result<RationalMatrix, Error>,
    index: HashMap<Composition, usize>,
}

impl KostkaMatrix {
    fn build(degree: usize) -> Self {
        let compositions = compositions_of(degree);
        let index = compositions
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        let rows = compositions
            .iter()
            .map(|shape| {
                compositions
                    .iter()
                    .map(|content| {
                        let k = kostka(shape, content).expect("same degree");
                        BigRational::from_integer(BigInt::from(k))
                    })
                    .collect()
            })
            .collect();
        let entries = RationalMatrix::from_rows(rows).expect("square");
        let determinant = entries.determinant().expect("square");
        let inverse = entries.invert();
        KostkaMatrix {
            degree,
            compositions,
            entries,
            determinant,
            inverse,
            index,
        }
    }

    pub fn index_of(&self, alpha: &Composition) -> usize {
        self.index[alpha]
    }

    pub fn get(&self, shape: &Composition, content: &Composition) -> &BigRational {
        self.entries.get(self.index_of(shape), self.index_of(content))
    }
}

/// The cached Kostka matrix of the given degree.
pub fn kostka_matrix(degree: usize) -> Arc<KostkaMatrix> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<OnceLock<Arc<KostkaMatrix>>>>>> = OnceLock::new();
    let slot = {
        let mut map = CACHE
            .get_or_init(Default::default)
            .lock()
            .unwrap_or_else(|e| e.into_inner());
        map.entry(degree).or_default().clone()
    };
    // built outside the map lock so other degrees are not blocked
    slot.get_or_init(|| Arc::new(KostkaMatrix::build(degree)))
        .clone()
}
