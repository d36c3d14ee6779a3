//! Built-in named points and elements for the flagship SU(2) x SU(2)
//! example on S^2(C^2) (x) C^2.
//!
//! The point `paper-p` is (e1^2 (x) e1 + e2^2 (x) e2) / sqrt2. Its
//! projective isotropy algebra is spanned by `H`, the component generator
//! of the isotropy group is `sigma`, and {V1, F1, G1, F2, G2} is the
//! orthonormal tangent frame used by the spectrum pipeline. All scalings
//! are exact field elements.

use crate::rep::{GroupElement, LieAlgebraElement, Mat2, Monomial, RepSpace, RepVector};
use crate::scalar::{rat, Rational, Scalar};

/// diag(i, -i)
fn u1() -> Mat2 {
    Mat2::diag(Scalar::i(), -Scalar::i())
}

/// [[0, 1], [-1, 0]]
fn u2() -> Mat2 {
    Mat2::new(Scalar::zero(), Scalar::one(), -Scalar::one(), Scalar::zero())
}

/// [[0, i], [i, 0]]
fn u3() -> Mat2 {
    Mat2::new(Scalar::zero(), Scalar::i(), Scalar::i(), Scalar::zero())
}

/// Standard basis of su(2)^r: u1, u2, u3 embedded in each factor, in
/// factor-major order.
pub fn algebra_basis(factors: usize) -> Vec<LieAlgebraElement> {
    let mut out = Vec::with_capacity(3 * factors);
    for j in 0..factors {
        for gen in [u1(), u2(), u3()] {
            let mut blocks = vec![Mat2::zero(); factors];
            blocks[j] = gen;
            out.push(LieAlgebraElement::new(blocks).expect("generators are su(2)"));
        }
    }
    out
}

fn pair(first: Mat2, second: Mat2) -> LieAlgebraElement {
    LieAlgebraElement::new(vec![first, second]).expect("blocks are su(2)")
}

/// 1/sqrt8 = sqrt2/4, the normalization making X and Y unit vectors.
fn inv_sqrt8() -> Scalar {
    Scalar::sqrt2().scale(&rat(1, 4))
}

pub fn x1() -> LieAlgebraElement {
    pair(u2().scale(&inv_sqrt8()), Mat2::zero())
}

pub fn x2() -> LieAlgebraElement {
    pair(Mat2::zero(), u2().scale(&inv_sqrt8()))
}

pub fn y1() -> LieAlgebraElement {
    pair(u3().scale(&inv_sqrt8()), Mat2::zero())
}

pub fn y2() -> LieAlgebraElement {
    pair(Mat2::zero(), u3().scale(&inv_sqrt8()))
}

/// Generator of the isotropy algebra of the base point:
/// (diag(i, -i), diag(-2i, 2i)).
pub fn h() -> LieAlgebraElement {
    pair(u1(), u1().scale(&Scalar::from_int(-2)))
}

/// Unit complement of H inside the diagonal torus:
/// (diag(2i, -2i), diag(i, -i)) / (2 sqrt10).
pub fn v() -> LieAlgebraElement {
    let s = Scalar::sqrt10().scale(&rat(1, 20)); // 1/(2 sqrt10)
    pair(u1().scale(&Scalar::from_int(2)).scale(&s), u1().scale(&s))
}

/// V rescaled to unit length in the induced orbit metric:
/// V1 = (2 sqrt2 / sqrt5) V = ((2/5) u1, (1/5) u1).
pub fn v1() -> LieAlgebraElement {
    pair(
        u1().scale(&Scalar::from_rational(rat(2, 5))),
        u1().scale(&Scalar::from_rational(rat(1, 5))),
    )
}

/// F1 = 2 X1
pub fn f1() -> LieAlgebraElement {
    pair(u2().scale(&Scalar::sqrt2().scale(&rat(1, 2))), Mat2::zero())
}

/// G1 = 2 Y1
pub fn g1() -> LieAlgebraElement {
    pair(u3().scale(&Scalar::sqrt2().scale(&rat(1, 2))), Mat2::zero())
}

/// F2 = 2 sqrt2 X2
pub fn f2() -> LieAlgebraElement {
    pair(Mat2::zero(), u2())
}

/// G2 = 2 sqrt2 Y2
pub fn g2() -> LieAlgebraElement {
    pair(Mat2::zero(), u3())
}

/// Order-4 generator of the isotropy component group:
/// ([[0,1],[-1,0]], [[0,i],[i,0]]).
pub fn sigma() -> GroupElement {
    GroupElement::new(vec![u2(), u3()]).expect("sigma is special unitary")
}

/// tau = (id, -id).
pub fn tau() -> GroupElement {
    GroupElement::new(vec![Mat2::identity(), Mat2::identity().scale(&Scalar::from_int(-1))])
        .expect("tau is special unitary")
}

/// The distinguished unit-norm point (e1^2 (x) e1 + e2^2 (x) e2) / sqrt2
/// in S^2(C^2) (x) C^2.
pub fn base_point() -> RepVector {
    let space = RepSpace::new(vec![2, 1]).expect("nonempty degrees");
    let half_sqrt2 = Scalar::sqrt2().scale(&rat(1, 2));
    RepVector::from_terms(
        space,
        vec![
            (Monomial::new(vec![(2, 0), (1, 0)]), half_sqrt2.clone()),
            (Monomial::new(vec![(0, 2), (0, 1)]), half_sqrt2),
        ],
    )
    .expect("monomials belong to the space")
}

/// The orthonormal tangent frame at the base point, in the order
/// V1, F1, G1, F2, G2.
pub fn base_frame_elements() -> Vec<LieAlgebraElement> {
    vec![v1(), f1(), g1(), f2(), g2()]
}

/// Look up an algebra element by its published name.
pub fn named_algebra_element(name: &str) -> Option<LieAlgebraElement> {
    match name {
        "X1" => Some(x1()),
        "X2" => Some(x2()),
        "Y1" => Some(y1()),
        "Y2" => Some(y2()),
        "V" => Some(v()),
        "V1" => Some(v1()),
        "F1" => Some(f1()),
        "F2" => Some(f2()),
        "G1" => Some(g1()),
        "G2" => Some(g2()),
        "H" => Some(h()),
        _ => None,
    }
}

/// Look up a group element by its published name.
pub fn named_group_element(name: &str) -> Option<GroupElement> {
    match name {
        "sigma" => Some(sigma()),
        "tau" => Some(tau()),
        _ => None,
    }
}

/// Look up a built-in point by its published name.
pub fn named_point(name: &str) -> Option<RepVector> {
    match name {
        "paper-p" => Some(base_point()),
        _ => None,
    }
}

/// sqrt(r) for the rationals whose square root lies in the field, used
/// when reporting lengths alongside squared lengths.
///
/// A nonnegative rational has a field square root exactly when it is a
/// rational square times one of 1, 2, 5, 10 (the square classes of the
/// radicals), and that decomposition is unique.
pub fn sqrt_in_field(r: &Rational) -> Option<Scalar> {
    use num::Zero;
    if r < &Rational::zero() {
        return None;
    }
    for (d, make) in [
        (1i64, Scalar::one as fn() -> Scalar),
        (2, Scalar::sqrt2 as fn() -> Scalar),
        (5, Scalar::sqrt5 as fn() -> Scalar),
        (10, Scalar::sqrt10 as fn() -> Scalar),
    ] {
        let q2 = r / Rational::from_integer(d.into());
        let ns = q2.numer().sqrt();
        let ds = q2.denom().sqrt();
        if &(&ns * &ns) == q2.numer() && &(&ds * &ds) == q2.denom() {
            return Some(make().scale(&Rational::new(ns, ds)));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{inner_product, killing_form, lie_action};

    #[test]
    fn base_point_has_unit_norm() {
        let p = base_point();
        assert_eq!(inner_product(&p, &p).unwrap(), Scalar::one());
    }

    #[test]
    fn named_elements_are_well_formed() {
        for name in ["X1", "X2", "Y1", "Y2", "V", "V1", "F1", "F2", "G1", "G2", "H"] {
            assert!(named_algebra_element(name).is_some(), "{name}");
        }
        for name in ["sigma", "tau"] {
            assert!(named_group_element(name).is_some(), "{name}");
        }
        assert!(named_point("paper-p").is_some());
        assert!(named_point("unknown").is_none());
    }

    #[test]
    fn v_is_orthogonal_to_h() {
        assert!(killing_form(&v(), &h()).unwrap().is_zero());
    }

    #[test]
    fn v_killing_field_value() {
        // V . p = (i sqrt5 / 4)(e1^2 (x) e1 - e2^2 (x) e2)
        let p = base_point();
        let got = lie_action(&v(), &p).unwrap();
        let c = Scalar::i() * Scalar::sqrt5().scale(&rat(1, 4));
        let expected = RepVector::from_terms(
            p.space().clone(),
            vec![
                (Monomial::new(vec![(2, 0), (1, 0)]), c.clone()),
                (Monomial::new(vec![(0, 2), (0, 1)]), -c),
            ],
        )
        .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn sigma_squared_is_minus_identity() {
        let s2 = sigma().pow(2);
        let minus =
            GroupElement::new(vec![
                Mat2::identity().scale(&Scalar::from_int(-1)),
                Mat2::identity().scale(&Scalar::from_int(-1)),
            ])
            .unwrap();
        assert_eq!(s2, minus);
        assert_eq!(sigma().pow(4), GroupElement::identity(2));
    }

    #[test]
    fn sqrt_reporting() {
        assert_eq!(sqrt_in_field(&rat(1, 4)), Some(Scalar::from_rational(rat(1, 2))));
        assert_eq!(sqrt_in_field(&rat(1, 8)), Some(Scalar::sqrt2().scale(&rat(1, 4))));
        assert_eq!(sqrt_in_field(&rat(5, 8)), Some(Scalar::sqrt10().scale(&rat(1, 4))));
        assert_eq!(sqrt_in_field(&rat(3, 1)), None);
        assert_eq!(sqrt_in_field(&rat(-1, 1)), None);
    }
}
