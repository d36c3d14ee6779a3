//! Tensor products of symmetric powers of C^2 under products of SU(2).
//!
//! A representation space is determined by one symmetric-power degree per
//! SU(2) factor. Vectors are kept sparse over the monomial basis
//! e1^a e2^b per factor; the Hermitian structure makes each monomial
//! orthogonal with squared norm 1/binomial(k, a), so that
//! sqrt(binomial(k, a)) * monomial is a unit vector.
//!
//! The Lie algebra acts by derivations (Leibniz within a factor and
//! across the tensor product); group elements act by substitution. Both
//! actions are exact.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::One;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Exact binomial coefficient.
pub fn binomial(k: u32, a: u32) -> BigInt {
    if a > k {
        return BigInt::from(0);
    }
    let mut result = BigInt::one();
    for i in 0..a.min(k - a) {
        result = result * BigInt::from(k - i) / BigInt::from(i + 1);
    }
    result
}

// ---------------------------------------------------------------------------
// 2x2 matrices over the scalar field
// ---------------------------------------------------------------------------

/// 2x2 matrix with scalar entries, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat2 {
    pub entries: [[Scalar; 2]; 2],
}

impl Mat2 {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Self {
        Mat2 { entries: [[a, b], [c, d]] }
    }

    pub fn zero() -> Self {
        Mat2::new(Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::zero())
    }

    pub fn identity() -> Self {
        Mat2::new(Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::one())
    }

    pub fn diag(a: Scalar, d: Scalar) -> Self {
        Mat2::new(a, Scalar::zero(), Scalar::zero(), d)
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r][c]
    }

    pub fn add(&self, other: &Mat2) -> Mat2 {
        Mat2::new(
            self.entries[0][0].clone() + other.entries[0][0].clone(),
            self.entries[0][1].clone() + other.entries[0][1].clone(),
            self.entries[1][0].clone() + other.entries[1][0].clone(),
            self.entries[1][1].clone() + other.entries[1][1].clone(),
        )
    }

    pub fn neg(&self) -> Mat2 {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, s: &Scalar) -> Mat2 {
        Mat2::new(
            s * &self.entries[0][0],
            s * &self.entries[0][1],
            s * &self.entries[1][0],
            s * &self.entries[1][1],
        )
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let e = |r: usize, c: usize| -> Scalar {
            &self.entries[r][0] * &other.entries[0][c] + &self.entries[r][1] * &other.entries[1][c]
        };
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat2 {
        Mat2::new(
            self.entries[0][0].conj(),
            self.entries[1][0].conj(),
            self.entries[0][1].conj(),
            self.entries[1][1].conj(),
        )
    }

    pub fn trace(&self) -> Scalar {
        self.entries[0][0].clone() + self.entries[1][1].clone()
    }

    pub fn det(&self) -> Scalar {
        &self.entries[0][0] * &self.entries[1][1] - &self.entries[0][1] * &self.entries[1][0]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Scalar::is_zero)
    }

    fn is_anti_hermitian_traceless(&self) -> bool {
        self.trace().is_zero() && self.adjoint() == self.neg()
    }

    fn is_special_unitary(&self) -> bool {
        self.det() == Scalar::one() && self.adjoint().mul(self) == Mat2::identity()
    }
}

// ---------------------------------------------------------------------------
// Lie algebra and group elements
// ---------------------------------------------------------------------------

/// Element of su(2)^r: one traceless anti-Hermitian 2x2 block per factor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebraElement {
    blocks: Vec<Mat2>,
}

impl LieAlgebraElement {
    pub fn new(blocks: Vec<Mat2>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Domain("at least one su(2) factor is required".into()));
        }
        for (j, b) in blocks.iter().enumerate() {
            if !b.is_anti_hermitian_traceless() {
                return Err(Error::Domain(format!(
                    "block {j} is not traceless anti-Hermitian"
                )));
            }
        }
        Ok(LieAlgebraElement { blocks })
    }

    pub fn zero(factors: usize) -> Self {
        LieAlgebraElement { blocks: vec![Mat2::zero(); factors] }
    }

    pub fn blocks(&self) -> &[Mat2] {
        &self.blocks
    }

    pub fn factors(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Mat2::is_zero)
    }

    pub fn add(&self, other: &LieAlgebraElement) -> Result<LieAlgebraElement> {
        if self.factors() != other.factors() {
            return Err(Error::FactorMismatch(format!(
                "{} vs {} blocks",
                self.factors(),
                other.factors()
            )));
        }
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        Ok(LieAlgebraElement { blocks })
    }

    /// Real rescaling (complex scaling would leave su(2)).
    pub fn scale(&self, r: &Rational) -> LieAlgebraElement {
        let s = Scalar::from_rational(r.clone());
        LieAlgebraElement { blocks: self.blocks.iter().map(|b| b.scale(&s)).collect() }
    }

    /// Rescaling by a real field element such as 1/sqrt8.
    pub fn scale_scalar(&self, s: &Scalar) -> Result<LieAlgebraElement> {
        if !s.is_real() {
            return Err(Error::Domain("scaling an su(2) element requires a real factor".into()));
        }
        Ok(LieAlgebraElement { blocks: self.blocks.iter().map(|b| b.scale(s)).collect() })
    }

    /// Blockwise commutator [X, Y] = XY - YX.
    pub fn bracket(&self, other: &LieAlgebraElement) -> Result<LieAlgebraElement> {
        if self.factors() != other.factors() {
            return Err(Error::FactorMismatch(format!(
                "{} vs {} blocks",
                self.factors(),
                other.factors()
            )));
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.mul(b).add(&b.mul(a).neg()))
            .collect();
        Ok(LieAlgebraElement { blocks })
    }
}

/// Element of SU(2)^r: one special unitary 2x2 block per factor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElement {
    blocks: Vec<Mat2>,
}

impl GroupElement {
    pub fn new(blocks: Vec<Mat2>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Domain("at least one SU(2) factor is required".into()));
        }
        for (j, b) in blocks.iter().enumerate() {
            if !b.is_special_unitary() {
                return Err(Error::Domain(format!("block {j} is not special unitary")));
            }
        }
        Ok(GroupElement { blocks })
    }

    pub fn identity(factors: usize) -> Self {
        GroupElement { blocks: vec![Mat2::identity(); factors] }
    }

    pub fn blocks(&self) -> &[Mat2] {
        &self.blocks
    }

    pub fn factors(&self) -> usize {
        self.blocks.len()
    }

    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.factors() != other.factors() {
            return Err(Error::FactorMismatch(format!(
                "{} vs {} blocks",
                self.factors(),
                other.factors()
            )));
        }
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.mul(b)).collect();
        Ok(GroupElement { blocks })
    }

    /// Inverse; for unitary blocks this is the adjoint.
    pub fn inverse(&self) -> GroupElement {
        GroupElement { blocks: self.blocks.iter().map(Mat2::adjoint).collect() }
    }

    pub fn pow(&self, n: u32) -> GroupElement {
        let mut out = GroupElement::identity(self.factors());
        for _ in 0..n {
            out = out.mul(self).expect("same factor count");
        }
        out
    }

    /// Adjoint action Ad(g) X = g X g^{-1}, blockwise.
    pub fn ad(&self, x: &LieAlgebraElement) -> Result<LieAlgebraElement> {
        if self.factors() != x.factors() {
            return Err(Error::FactorMismatch(format!(
                "{} vs {} blocks",
                self.factors(),
                x.factors()
            )));
        }
        let blocks = self
            .blocks
            .iter()
            .zip(x.blocks())
            .map(|(g, xb)| g.mul(xb).mul(&g.adjoint()))
            .collect();
        LieAlgebraElement::new(blocks)
    }
}

// ---------------------------------------------------------------------------
// Representation spaces and vectors
// ---------------------------------------------------------------------------

/// Tensor product of symmetric powers: degrees (k_1, ..., k_r), one per
/// SU(2) factor. Dimension is the product of (k_j + 1).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RepSpace {
    degrees: Vec<u32>,
}

impl RepSpace {
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::Domain("a representation space needs at least one factor".into()));
        }
        Ok(RepSpace { degrees })
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn factors(&self) -> usize {
        self.degrees.len()
    }

    pub fn dim(&self) -> usize {
        self.degrees.iter().map(|&k| (k + 1) as usize).product()
    }

    /// Complex dimension of the ambient projective space P(V).
    pub fn projective_dim(&self) -> usize {
        self.dim() - 1
    }

    /// All monomials in canonical (lexicographic, factor-major) order.
    pub fn basis(&self) -> Vec<Monomial> {
        let mut out = vec![Vec::new()];
        for &k in &self.degrees {
            let mut next = Vec::with_capacity(out.len() * (k as usize + 1));
            for prefix in &out {
                for a in 0..=k {
                    let mut exps = prefix.clone();
                    exps.push((a, k - a));
                    next.push(exps);
                }
            }
            out = next;
        }
        out.into_iter().map(|exps| Monomial { exps }).collect()
    }

    pub fn monomial_index(&self, m: &Monomial) -> Option<usize> {
        if m.exps.len() != self.degrees.len() {
            return None;
        }
        let mut index = 0usize;
        for (&k, &(a, b)) in self.degrees.iter().zip(&m.exps) {
            if a + b != k {
                return None;
            }
            index = index * (k as usize + 1) + a as usize;
        }
        Some(index)
    }
}

/// Basis monomial: e1/e2 exponent pair per factor.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn new(exps: Vec<(u32, u32)>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[(u32, u32)] {
        &self.exps
    }

    /// Squared norm: product of 1/binomial(k_j, a_j).
    pub fn norm_squared(&self) -> Rational {
        let mut den = BigInt::one();
        for &(a, b) in &self.exps {
            den *= binomial(a + b, a);
        }
        Rational::new(BigInt::one(), den)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for &(a, b) in &self.exps {
            let mut factor = String::new();
            if a > 0 {
                factor.push_str(&format!("e1^{a}"));
            }
            if b > 0 {
                if !factor.is_empty() {
                    factor.push(' ');
                }
                factor.push_str(&format!("e2^{b}"));
            }
            if factor.is_empty() {
                factor.push('1');
            }
            parts.push(factor);
        }
        f.write_str(&parts.join(" (x) "))
    }
}

/// Sparse exact vector in a representation space.
///
/// Zero coefficients are never stored, so equality of the term maps is
/// equality of vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepVector {
    space: RepSpace,
    terms: BTreeMap<Monomial, Scalar>,
}

impl RepVector {
    pub fn zero(space: RepSpace) -> Self {
        RepVector { space, terms: BTreeMap::new() }
    }

    pub fn from_terms(space: RepSpace, terms: Vec<(Monomial, Scalar)>) -> Result<Self> {
        let mut v = RepVector::zero(space);
        for (m, c) in terms {
            v.add_term(m, c)?;
        }
        Ok(v)
    }

    /// Single monomial with coefficient one.
    pub fn monomial(space: RepSpace, exps: Vec<(u32, u32)>) -> Result<Self> {
        RepVector::from_terms(space, vec![(Monomial::new(exps), Scalar::one())])
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) -> Result<()> {
        if self.space.monomial_index(&m).is_none() {
            return Err(Error::SpaceMismatch(format!(
                "monomial {m} does not belong to degrees {:?}",
                self.space.degrees()
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
        Ok(())
    }

    pub fn space(&self) -> &RepSpace {
        &self.space
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &RepVector) -> Result<RepVector> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &RepVector) -> Result<RepVector> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> RepVector {
        if s.is_zero() {
            return RepVector::zero(self.space.clone());
        }
        RepVector {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), s * c)).collect(),
        }
    }

    /// Coordinates over the canonical monomial basis.
    pub fn coordinates(&self) -> Vec<Scalar> {
        let mut coords = vec![Scalar::zero(); self.space.dim()];
        for (m, c) in &self.terms {
            let idx = self.space.monomial_index(m).expect("validated on insertion");
            coords[idx] = c.clone();
        }
        coords
    }

    pub fn from_coordinates(space: RepSpace, coords: &[Scalar]) -> Result<Self> {
        if coords.len() != space.dim() {
            return Err(Error::SpaceMismatch("coordinate length != dimension".into()));
        }
        let basis = space.basis();
        let terms = basis.into_iter().zip(coords.iter().cloned()).collect::<Vec<_>>();
        RepVector::from_terms(space, terms)
    }

    fn check_space(&self, other: &RepVector) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch(format!(
                "{:?} vs {:?}",
                self.space.degrees(),
                other.space.degrees()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for RepVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(m, c)| format!("({c}) [{m}]", c = c, m = m)).collect();
        f.write_str(&parts.join(" + "))
    }
}

// ---------------------------------------------------------------------------
// Actions and pairings
// ---------------------------------------------------------------------------

/// Hermitian inner product, linear in the first slot and conjugate-linear
/// in the second. Monomials are orthogonal with squared norm
/// 1/binomial(k, a) per factor.
pub fn inner_product(u: &RepVector, v: &RepVector) -> Result<Scalar> {
    u.check_space(v)?;
    let mut total = Scalar::zero();
    for (m, cu) in &u.terms {
        if let Some(cv) = v.terms.get(m) {
            let weight = Scalar::from_rational(m.norm_squared());
            total += cu * &cv.conj() * weight;
        }
    }
    Ok(total)
}

/// Derivation action of an su(2)^r element.
///
/// On a single factor the matrix acts as a derivation of degree-k
/// polynomials in e1, e2; across factors the actions are summed.
pub fn lie_action(x: &LieAlgebraElement, v: &RepVector) -> Result<RepVector> {
    if x.factors() != v.space.factors() {
        return Err(Error::FactorMismatch(format!(
            "element has {} blocks, space has {} factors",
            x.factors(),
            v.space.factors()
        )));
    }
    let mut out = RepVector::zero(v.space.clone());
    for (mono, coeff) in &v.terms {
        for (j, block) in x.blocks.iter().enumerate() {
            if block.is_zero() {
                continue;
            }
            let (a, b) = mono.exps[j];
            // X e1 = x00 e1 + x10 e2, X e2 = x01 e1 + x11 e2
            let x00 = block.get(0, 0);
            let x01 = block.get(0, 1);
            let x10 = block.get(1, 0);
            let x11 = block.get(1, 1);
            // diagonal part: (a x00 + b x11) * mono
            let diag = x00.scale(&Rational::from_integer(BigInt::from(a)))
                + x11.scale(&Rational::from_integer(BigInt::from(b)));
            if !diag.is_zero() {
                out.add_term(mono.clone(), coeff * &diag)?;
            }
            // a * x10 * e1^{a-1} e2^{b+1}
            if a > 0 && !x10.is_zero() {
                let mut exps = mono.exps.clone();
                exps[j] = (a - 1, b + 1);
                let c = coeff * &x10.scale(&Rational::from_integer(BigInt::from(a)));
                out.add_term(Monomial::new(exps), c)?;
            }
            // b * x01 * e1^{a+1} e2^{b-1}
            if b > 0 && !x01.is_zero() {
                let mut exps = mono.exps.clone();
                exps[j] = (a + 1, b - 1);
                let c = coeff * &x01.scale(&Rational::from_integer(BigInt::from(b)));
                out.add_term(Monomial::new(exps), c)?;
            }
        }
    }
    Ok(out)
}

/// Substitution action of an SU(2)^r element; exact and unitary.
pub fn group_action(g: &GroupElement, v: &RepVector) -> Result<RepVector> {
    if g.factors() != v.space.factors() {
        return Err(Error::FactorMismatch(format!(
            "element has {} blocks, space has {} factors",
            g.factors(),
            v.space.factors()
        )));
    }
    let mut out = RepVector::zero(v.space.clone());
    for (mono, coeff) in &v.terms {
        // per factor, expand (g e1)^a (g e2)^b into exponent -> coefficient
        let mut factor_expansions: Vec<Vec<(u32, Scalar)>> = Vec::with_capacity(g.factors());
        for (j, block) in g.blocks.iter().enumerate() {
            let (a, b) = mono.exps[j];
            let x00 = block.get(0, 0);
            let x01 = block.get(0, 1);
            let x10 = block.get(1, 0);
            let x11 = block.get(1, 1);
            let mut expansion = vec![Scalar::zero(); (a + b + 1) as usize];
            for i in 0..=a {
                for l in 0..=b {
                    let coeff = Scalar::from_rational(Rational::from_integer(
                        binomial(a, i) * binomial(b, l),
                    )) * x00.pow(i)
                        * x10.pow(a - i)
                        * x01.pow(l)
                        * x11.pow(b - l);
                    let idx = (i + l) as usize;
                    let cur = expansion[idx].clone();
                    expansion[idx] = cur + coeff;
                }
            }
            factor_expansions.push(
                expansion
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| (e as u32, c))
                    .collect(),
            );
        }
        // convolve factors
        let mut partial: Vec<(Vec<u32>, Scalar)> = vec![(Vec::new(), coeff.clone())];
        for expansion in &factor_expansions {
            let mut next = Vec::with_capacity(partial.len() * expansion.len());
            for (prefix, c) in &partial {
                for (e, ec) in expansion {
                    let mut p = prefix.clone();
                    p.push(*e);
                    next.push((p, c * ec));
                }
            }
            partial = next;
        }
        for (exps, c) in partial {
            let mexps = exps
                .iter()
                .enumerate()
                .map(|(j, &a)| {
                    let k = mono.exps[j].0 + mono.exps[j].1;
                    (a, k - a)
                })
                .collect();
            out.add_term(Monomial::new(mexps), c)?;
        }
    }
    Ok(out)
}

/// Ad-invariant inner product on su(2)^r: B(X, Y) = -4 * sum_j tr(X_j Y_j).
///
/// This is the Cartan-Killing form of su(2)^r up to the overall sign that
/// makes it positive definite on the compact algebra; with it the
/// elements X1, X2, Y1, Y2, V are orthonormal.
pub fn killing_form(x: &LieAlgebraElement, y: &LieAlgebraElement) -> Result<Scalar> {
    if x.factors() != y.factors() {
        return Err(Error::FactorMismatch(format!(
            "{} vs {} blocks",
            x.factors(),
            y.factors()
        )));
    }
    let mut total = Scalar::zero();
    for (a, b) in x.blocks.iter().zip(&y.blocks) {
        total += a.mul(b).trace();
    }
    Ok(total.scale(&Rational::from_integer(BigInt::from(-4))))
}

// ---------------------------------------------------------------------------
// Serialization: {"space": [...], "terms": [{"coef": "...", "monomial": [[a,b],...]}]}
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coef: String,
    monomial: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize)]
struct VectorRepr {
    space: Vec<u32>,
    terms: Vec<TermRepr>,
}

impl Serialize for RepVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = VectorRepr {
            space: self.space.degrees().to_vec(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermRepr { coef: c.to_string(), monomial: m.exps.clone() })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RepVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = VectorRepr::deserialize(deserializer)?;
        let space = RepSpace::new(repr.space).map_err(D::Error::custom)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for (idx, t) in repr.terms.iter().enumerate() {
            let coef = Scalar::parse(&t.coef).map_err(|e| {
                D::Error::custom(format!("term {idx}: coef: {e}"))
            })?;
            terms.push((Monomial::new(t.monomial.clone()), coef));
        }
        RepVector::from_terms(space, terms).map_err(D::Error::custom)
    }
}

fn mat2_to_strings(m: &Mat2) -> [[String; 2]; 2] {
    [
        [m.entries[0][0].to_string(), m.entries[0][1].to_string()],
        [m.entries[1][0].to_string(), m.entries[1][1].to_string()],
    ]
}

fn mat2_from_strings(rows: &[[String; 2]; 2]) -> Result<Mat2> {
    Ok(Mat2::new(
        Scalar::parse(&rows[0][0])?,
        Scalar::parse(&rows[0][1])?,
        Scalar::parse(&rows[1][0])?,
        Scalar::parse(&rows[1][1])?,
    ))
}

#[derive(Serialize, Deserialize)]
struct BlocksRepr {
    blocks: Vec<[[String; 2]; 2]>,
}

impl Serialize for LieAlgebraElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        BlocksRepr { blocks: self.blocks.iter().map(mat2_to_strings).collect() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LieAlgebraElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = BlocksRepr::deserialize(deserializer)?;
        let blocks = repr
            .blocks
            .iter()
            .map(mat2_from_strings)
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        LieAlgebraElement::new(blocks).map_err(D::Error::custom)
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        BlocksRepr { blocks: self.blocks.iter().map(mat2_to_strings).collect() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = BlocksRepr::deserialize(deserializer)?;
        let blocks = repr
            .blocks
            .iter()
            .map(mat2_from_strings)
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        GroupElement::new(blocks).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::scalar::rat;

    fn si(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(2, 1), BigInt::from(2));
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn monomial_norms() {
        // <e1 e2, e1 e2> = 1/2 in S^2(C^2)
        let m = Monomial::new(vec![(1, 1)]);
        assert_eq!(m.norm_squared(), rat(1, 2));
        let m = Monomial::new(vec![(2, 0), (1, 0)]);
        assert_eq!(m.norm_squared(), rat(1, 1));
    }

    #[test]
    fn inner_product_of_base_point_is_one() {
        let p = builtin::base_point();
        assert_eq!(inner_product(&p, &p).unwrap(), Scalar::one());
    }

    #[test]
    fn inner_product_rejects_space_mismatch() {
        let u = RepVector::monomial(RepSpace::new(vec![2]).unwrap(), vec![(1, 1)]).unwrap();
        let v = RepVector::monomial(RepSpace::new(vec![3]).unwrap(), vec![(1, 2)]).unwrap();
        assert!(matches!(inner_product(&u, &v), Err(Error::SpaceMismatch(_))));
    }

    #[test]
    fn h_annihilates_base_point() {
        let p = builtin::base_point();
        assert!(lie_action(&builtin::h(), &p).unwrap().is_zero());
    }

    #[test]
    fn killing_field_of_x1_at_base_point() {
        // X1 . p = 1/(2 sqrt2) (-sqrt2 e1e2 (x) e1 + sqrt2 e1e2 (x) e2)
        //        = 1/2 (-e1e2 (x) e1 + e1e2 (x) e2)
        let p = builtin::base_point();
        let got = lie_action(&builtin::x1(), &p).unwrap();
        let space = p.space().clone();
        let expected = RepVector::from_terms(
            space,
            vec![
                (Monomial::new(vec![(1, 1), (1, 0)]), Scalar::from_rational(rat(-1, 2))),
                (Monomial::new(vec![(1, 1), (0, 1)]), Scalar::from_rational(rat(1, 2))),
            ],
        )
        .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn lie_action_of_zero_is_zero() {
        let p = builtin::base_point();
        let zero = LieAlgebraElement::zero(2);
        assert!(lie_action(&zero, &p).unwrap().is_zero());
    }

    #[test]
    fn lie_action_rejects_factor_mismatch() {
        let p = builtin::base_point();
        let x = LieAlgebraElement::zero(3);
        assert!(matches!(lie_action(&x, &p), Err(Error::FactorMismatch(_))));
    }

    #[test]
    fn sigma_multiplies_base_point_by_i() {
        let p = builtin::base_point();
        let got = group_action(&builtin::sigma(), &p).unwrap();
        assert_eq!(got, p.scale(&Scalar::i()));
    }

    #[test]
    fn identity_acts_trivially() {
        let p = builtin::base_point();
        assert_eq!(group_action(&GroupElement::identity(2), &p).unwrap(), p);
    }

    #[test]
    fn tau_acts_by_parity_of_second_degree() {
        // tau = (id, -id) multiplies S^k (x) S^m by (-1)^m
        for (m_deg, sign) in [(1u32, -1i64), (2, 1), (3, -1)] {
            let space = RepSpace::new(vec![2, m_deg]).unwrap();
            let w = RepVector::monomial(space, vec![(1, 1), (0, m_deg)]).unwrap();
            let got = group_action(&builtin::tau(), &w).unwrap();
            assert_eq!(got, w.scale(&si(sign)));
        }
    }

    #[test]
    fn killing_form_values() {
        assert_eq!(killing_form(&builtin::x1(), &builtin::x1()).unwrap(), si(1));
        assert_eq!(killing_form(&builtin::v(), &builtin::v()).unwrap(), si(1));
        assert_eq!(killing_form(&builtin::x1(), &builtin::y2()).unwrap(), si(0));
    }

    #[test]
    fn b_orthonormal_family() {
        // {X1, Y1, X2, Y2, V, H/|H|} is orthonormal
        let h_unit = builtin::h()
            .scale_scalar(&Scalar::sqrt10().scale(&rat(1, 20)))
            .unwrap();
        let family = [
            builtin::x1(),
            builtin::y1(),
            builtin::x2(),
            builtin::y2(),
            builtin::v(),
            h_unit,
        ];
        for (i, a) in family.iter().enumerate() {
            for (j, b) in family.iter().enumerate() {
                let expected = if i == j { si(1) } else { si(0) };
                assert_eq!(killing_form(a, b).unwrap(), expected, "pair ({i},{j})");
            }
        }
    }

    #[test]
    fn lie_homomorphism_sweep() {
        // exact [X,Y]-compatibility over all generator pairs and all basis
        // monomials of every space with degrees at most (4, 4)
        let basis = builtin::algebra_basis(2);
        for k1 in 0..=4u32 {
            for k2 in 0..=4u32 {
                let space = RepSpace::new(vec![k1, k2]).unwrap();
                for mono in space.basis() {
                    let v = RepVector::from_terms(
                        space.clone(),
                        vec![(mono.clone(), Scalar::one())],
                    )
                    .unwrap();
                    for x in &basis {
                        for y in &basis {
                            let lhs = lie_action(&x.bracket(y).unwrap(), &v).unwrap();
                            let xy = lie_action(x, &lie_action(y, &v).unwrap()).unwrap();
                            let yx = lie_action(y, &lie_action(x, &v).unwrap()).unwrap();
                            assert_eq!(lhs, xy.sub(&yx).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn anti_hermiticity_sweep() {
        let basis = builtin::algebra_basis(2);
        let space = RepSpace::new(vec![2, 2]).unwrap();
        let monos = space.basis();
        for x in &basis {
            for mu in &monos {
                for mv in &monos {
                    let u = RepVector::from_terms(space.clone(), vec![(mu.clone(), Scalar::one())])
                        .unwrap();
                    let v = RepVector::from_terms(space.clone(), vec![(mv.clone(), Scalar::one())])
                        .unwrap();
                    let a = inner_product(&lie_action(x, &u).unwrap(), &v).unwrap();
                    let b = inner_product(&u, &lie_action(x, &v).unwrap()).unwrap();
                    assert!((a + b).is_zero());
                }
            }
        }
    }

    #[test]
    fn group_action_is_unitary() {
        let sigma = builtin::sigma();
        let tau = builtin::tau();
        let sigma2 = sigma.pow(2);
        let space = RepSpace::new(vec![2, 1]).unwrap();
        let monos = space.basis();
        for g in [&sigma, &tau, &sigma2] {
            for mu in &monos {
                for mv in &monos {
                    let u = RepVector::from_terms(space.clone(), vec![(mu.clone(), Scalar::one())])
                        .unwrap();
                    let v = RepVector::from_terms(space.clone(), vec![(mv.clone(), Scalar::one())])
                        .unwrap();
                    let lhs = inner_product(
                        &group_action(g, &u).unwrap(),
                        &group_action(g, &v).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(lhs, inner_product(&u, &v).unwrap());
                }
            }
        }
    }

    #[test]
    fn group_action_is_homomorphism() {
        let space = RepSpace::new(vec![2, 1]).unwrap();
        let gens = [builtin::sigma(), builtin::tau()];
        for g in &gens {
            for h in &gens {
                let gh = g.mul(h).unwrap();
                for mono in space.basis() {
                    let v = RepVector::from_terms(space.clone(), vec![(mono, Scalar::one())])
                        .unwrap();
                    let lhs = group_action(&gh, &v).unwrap();
                    let rhs = group_action(g, &group_action(h, &v).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn vector_json_round_trip() {
        let p = builtin::base_point();
        let json = serde_json::to_string(&p).unwrap();
        let back: RepVector = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        // canonical: serialization is byte-stable
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn vector_json_rejects_bad_monomial() {
        let json = r#"{"space":[2,1],"terms":[{"coef":"1","monomial":[[3,0],[1,0]]}]}"#;
        assert!(serde_json::from_str::<RepVector>(json).is_err());
    }
}
