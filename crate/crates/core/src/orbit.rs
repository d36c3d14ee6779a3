//! Projective orbit geometry: moment map, isotropy algebra, orbit
//! classification, Fubini-Study pairings of Killing fields, and the
//! tangent frame consumed by the spectrum pipeline.
//!
//! All formulas are normalization-free: checks divide by <v, v> instead
//! of normalizing v, so no square roots are ever required and every
//! quantity stays inside the scalar field.

use serde::{Deserialize, Serialize};

use crate::builtin;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rep::{
    group_action, inner_product, killing_form, lie_action, GroupElement, LieAlgebraElement,
    RepVector,
};
use crate::scalar::{rat, Rational, Scalar};

/// Classification of the orbit through a projective point.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrbitReport {
    pub orbit_real_dim: usize,
    pub ambient_complex_dim: usize,
    pub moment_map_zero: bool,
    pub isotropic: bool,
    pub lagrangian: bool,
    pub isotropy_basis: Vec<LieAlgebraElement>,
}

/// Tangent frame of a Lagrangian orbit at its base point: elements of the
/// Killing complement of the isotropy algebra together with their exact
/// Fubini-Study Gram matrix (diagonal by construction).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TangentFrame {
    pub point: RepVector,
    pub frame: Vec<LieAlgebraElement>,
    pub gram: Vec<Vec<Scalar>>,
}

fn require_nonzero(v: &RepVector) -> Result<()> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(())
}

/// Horizontal part of the Killing field of X at v: the component of X.v
/// orthogonal to the complex line through v.
fn horizontal(v: &RepVector, x: &LieAlgebraElement) -> Result<RepVector> {
    let xv = lie_action(x, v)?;
    let along = inner_product(&xv, v)?.checked_div(&inner_product(v, v)?)?;
    xv.sub(&v.scale(&along))
}

/// Moment map pairing mu([v])(X) = -(i/2) <X.v, v> / <v, v>.
///
/// Anti-Hermiticity of the action makes <X.v, v> purely imaginary, so the
/// result is exactly real, and scale invariance in v holds by
/// construction.
pub fn moment_map(v: &RepVector, x: &LieAlgebraElement) -> Result<Scalar> {
    require_nonzero(v)?;
    let xv = lie_action(x, v)?;
    let num = inner_product(&xv, v)?;
    let den = inner_product(v, v)?;
    let value = Scalar::i_times(rat(-1, 2)) * num.checked_div(&den)?;
    if !value.is_real() {
        return Err(Error::Internal(format!(
            "moment map produced a non-real value {value}; the element is not anti-Hermitian"
        )));
    }
    Ok(value)
}

/// True when the moment map vanishes on the whole standard generator
/// basis of su(2)^r at v.
pub fn moment_map_vanishes(v: &RepVector) -> Result<bool> {
    for x in builtin::algebra_basis(v.space().factors()) {
        if !moment_map(v, &x)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Basis of the projective isotropy algebra {X : X.v in C*v}.
///
/// The kernel is computed over the real subfield: the horizontal part of
/// each generator's action is split into real and imaginary coordinate
/// rows, together with the (identically vanishing) real part of
/// <X.v, v>, and eliminated exactly.
pub fn isotropy_algebra(v: &RepVector) -> Result<Vec<LieAlgebraElement>> {
    require_nonzero(v)?;
    let basis = builtin::algebra_basis(v.space().factors());
    let dim = v.space().dim();
    let mut rows: Vec<Vec<Scalar>> = vec![Vec::with_capacity(basis.len()); 2 * dim + 1];
    for x in &basis {
        let w = horizontal(v, x)?;
        let coords = w.coordinates();
        for (i, c) in coords.iter().enumerate() {
            rows[2 * i].push(c.re_part());
            rows[2 * i + 1].push(c.im_part());
        }
        let radial = inner_product(&lie_action(x, v)?, v)?;
        rows[2 * dim].push(radial.re_part());
    }
    let matrix = Matrix::from_rows(rows)?;
    let kernel = matrix.kernel_basis();
    let mut out = Vec::with_capacity(kernel.len());
    for coeffs in kernel {
        let mut x = LieAlgebraElement::zero(v.space().factors());
        for (c, b) in coeffs.iter().zip(&basis) {
            if !c.is_real() {
                return Err(Error::Internal(
                    "isotropy kernel produced a non-real coefficient".into(),
                ));
            }
            x = x.add(&b.scale_scalar(c)?)?;
        }
        out.push(x);
    }
    Ok(out)
}

/// Full Hermitian Fubini-Study pairing of two Killing fields at [v],
/// normalized for holomorphic sectional curvature 4. The real part is the
/// Riemannian metric; minus the imaginary part is the symplectic form.
pub fn fs_inner(v: &RepVector, x: &LieAlgebraElement, y: &LieAlgebraElement) -> Result<Scalar> {
    require_nonzero(v)?;
    let ux = horizontal(v, x)?;
    let uy = horizontal(v, y)?;
    inner_product(&ux, &uy)?.checked_div(&inner_product(v, v)?)
}

/// Squared length of the Killing field of X at [v] in the induced metric
/// at curvature 4; exact and real.
pub fn fs_norm_squared(v: &RepVector, x: &LieAlgebraElement) -> Result<Scalar> {
    let value = fs_inner(v, x, x)?;
    debug_assert!(value.is_real());
    Ok(value)
}

/// Same, for holomorphic sectional curvature c: the metric scales by 4/c.
pub fn fs_norm_squared_with_c(v: &RepVector, x: &LieAlgebraElement, c: &Rational) -> Result<Scalar> {
    use num::Zero;
    if c <= &Rational::zero() {
        return Err(Error::Domain("curvature must be positive".into()));
    }
    let scale = Rational::new(4.into(), 1.into()) / c;
    Ok(fs_norm_squared(v, x)?.scale(&scale))
}

/// Classify the orbit through [v]: dimension from the isotropy rank,
/// isotropy of the orbit from the vanishing of the symplectic pairings,
/// and the Lagrangian verdict from the dimension match.
pub fn classify_orbit(v: &RepVector) -> Result<OrbitReport> {
    require_nonzero(v)?;
    let isotropy = isotropy_algebra(v)?;
    let group_dim = 3 * v.space().factors();
    let orbit_real_dim = group_dim - isotropy.len();
    let ambient_complex_dim = v.space().projective_dim();

    let basis = builtin::algebra_basis(v.space().factors());
    let mut isotropic = true;
    'outer: for (i, x) in basis.iter().enumerate() {
        for y in basis.iter().skip(i + 1) {
            if !fs_inner(v, x, y)?.is_real() {
                isotropic = false;
                break 'outer;
            }
        }
    }
    let moment_map_zero = moment_map_vanishes(v)?;
    let lagrangian = isotropic && orbit_real_dim == ambient_complex_dim;
    Ok(OrbitReport {
        orbit_real_dim,
        ambient_complex_dim,
        moment_map_zero,
        isotropic,
        lagrangian,
        isotropy_basis: isotropy,
    })
}

/// Tangent frame of a Lagrangian orbit: a basis of the Killing-orthogonal
/// complement of the isotropy algebra, diagonalized for the Fubini-Study
/// pairing. For the built-in point this is the named frame
/// {V1, F1, G1, F2, G2}, whose Gram matrix is the identity.
pub fn tangent_frame(v: &RepVector) -> Result<TangentFrame> {
    let report = classify_orbit(v)?;
    if !report.lagrangian {
        return Err(Error::NotLagrangian);
    }
    let frame = if *v == builtin::base_point() {
        builtin::base_frame_elements()
    } else {
        generic_frame(v, &report.isotropy_basis)?
    };
    let gram = gram_matrix(v, &frame)?;
    Ok(TangentFrame { point: v.clone(), frame, gram })
}

fn gram_matrix(v: &RepVector, frame: &[LieAlgebraElement]) -> Result<Vec<Vec<Scalar>>> {
    let mut gram = Vec::with_capacity(frame.len());
    for x in frame {
        let mut row = Vec::with_capacity(frame.len());
        for y in frame {
            row.push(fs_inner(v, x, y)?);
        }
        gram.push(row);
    }
    Ok(gram)
}

/// Complement construction for points other than the built-in one:
/// project the standard generators off the isotropy algebra with respect
/// to the Killing inner product, drop dependent vectors, then
/// Gram-Schmidt the Fubini-Study pairing to a diagonal form. Linear
/// combinations stay Killing-orthogonal to the isotropy algebra.
fn generic_frame(
    v: &RepVector,
    isotropy: &[LieAlgebraElement],
) -> Result<Vec<LieAlgebraElement>> {
    let factors = v.space().factors();
    // Killing-orthogonalize the isotropy basis first
    let mut ortho_isotropy: Vec<LieAlgebraElement> = Vec::with_capacity(isotropy.len());
    for x in isotropy {
        let mut w = x.clone();
        for k in &ortho_isotropy {
            let coeff = killing_form(&w, k)?.checked_div(&killing_form(k, k)?)?;
            w = w.add(&k.scale_scalar(&-coeff)?)?;
        }
        if !w.is_zero() {
            ortho_isotropy.push(w);
        }
    }
    // project the generators and keep a Killing-orthogonal spanning set
    let mut complement: Vec<LieAlgebraElement> = Vec::new();
    for x in builtin::algebra_basis(factors) {
        let mut w = x;
        for k in &ortho_isotropy {
            let coeff = killing_form(&w, k)?.checked_div(&killing_form(k, k)?)?;
            w = w.add(&k.scale_scalar(&-coeff)?)?;
        }
        for c in &complement {
            let coeff = killing_form(&w, c)?.checked_div(&killing_form(c, c)?)?;
            w = w.add(&c.scale_scalar(&-coeff)?)?;
        }
        if !w.is_zero() {
            complement.push(w);
        }
    }
    // diagonalize the Fubini-Study Gram form; positive definiteness on a
    // Lagrangian orbit keeps every pivot nonzero
    let mut frame: Vec<LieAlgebraElement> = Vec::with_capacity(complement.len());
    for x in complement {
        let mut w = x;
        for f in &frame {
            let coeff = fs_inner(v, &w, f)?.checked_div(&fs_inner(v, f, f)?)?;
            if !coeff.is_real() {
                return Err(Error::Internal(
                    "non-real Fubini-Study pairing on a Lagrangian orbit".into(),
                ));
            }
            w = w.add(&f.scale_scalar(&-coeff)?)?;
        }
        if !fs_inner(v, &w, &w)?.is_zero() {
            frame.push(w);
        }
    }
    Ok(frame)
}

// ---------------------------------------------------------------------------
// Component structure of the isotropy group at the built-in point
// ---------------------------------------------------------------------------

/// If g fixes [v], the scalar c with g.v = c v.
pub fn projective_scalar(g: &GroupElement, v: &RepVector) -> Result<Option<Scalar>> {
    require_nonzero(v)?;
    let gv = group_action(g, v)?;
    let c = inner_product(&gv, v)?.checked_div(&inner_product(v, v)?)?;
    if gv == v.scale(&c) {
        Ok(Some(c))
    } else {
        Ok(None)
    }
}

/// Exact membership test for the one-parameter subgroup generated by the
/// built-in H = (diag(i,-i), diag(-2i,2i)): both blocks must be diagonal
/// and the second must be diag(z^-2, z^2) for the first block's diag(z, z^-1).
pub fn on_h_one_parameter(g: &GroupElement) -> bool {
    if g.factors() != 2 {
        return false;
    }
    let b0 = &g.blocks()[0];
    let b1 = &g.blocks()[1];
    let diagonal = |m: &crate::rep::Mat2| m.get(0, 1).is_zero() && m.get(1, 0).is_zero();
    if !diagonal(b0) || !diagonal(b1) {
        return false;
    }
    let z = b0.get(0, 0).clone();
    let z2 = &z * &z;
    *b1.get(0, 0) == z2.conj() && *b1.get(1, 1) == z2
}

/// Report on the order-4 component structure of the isotropy group at the
/// built-in point: sigma^k fixes [p] for every k, sigma, sigma^2, sigma^3
/// all avoid the identity component exp(R H), and sigma^4 is the identity.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComponentReport {
    pub fixes_point: [bool; 4],
    pub sigma_scalar: Scalar,
    pub off_identity_component: [bool; 3],
    pub sigma4_is_identity: bool,
}

impl ComponentReport {
    pub fn order_four(&self) -> bool {
        self.fixes_point.iter().all(|&b| b)
            && self.off_identity_component.iter().all(|&b| b)
            && self.sigma4_is_identity
    }
}

pub fn sigma_component_report() -> Result<ComponentReport> {
    let p = builtin::base_point();
    let sigma = builtin::sigma();
    let mut fixes = [false; 4];
    let mut off = [false; 3];
    let mut sigma_scalar = Scalar::zero();
    for k in 1..=4u32 {
        let g = sigma.pow(k);
        let scalar = projective_scalar(&g, &p)?;
        fixes[(k - 1) as usize] = scalar.is_some();
        if k == 1 {
            sigma_scalar = scalar.clone().unwrap_or_else(Scalar::zero);
        }
        if k < 4 {
            off[(k - 1) as usize] = !on_h_one_parameter(&g);
        }
    }
    let sigma4_is_identity = sigma.pow(4) == GroupElement::identity(2);
    Ok(ComponentReport {
        fixes_point: fixes,
        sigma_scalar,
        off_identity_component: off,
        sigma4_is_identity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{Monomial, RepSpace};
    use proptest::prelude::*;

    fn si(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    /// (e1^2 + e2^2)/sqrt2 in S^2(C^2) under a single SU(2): the real-form
    /// orbit in the projective plane.
    fn real_form_point() -> RepVector {
        let space = RepSpace::new(vec![2]).unwrap();
        let c = Scalar::sqrt2().scale(&rat(1, 2));
        RepVector::from_terms(
            space,
            vec![
                (Monomial::new(vec![(2, 0)]), c.clone()),
                (Monomial::new(vec![(0, 2)]), c),
            ],
        )
        .unwrap()
    }

    fn highest_weight_point() -> RepVector {
        RepVector::monomial(RepSpace::new(vec![2, 1]).unwrap(), vec![(2, 0), (1, 0)]).unwrap()
    }

    #[test]
    fn moment_map_vanishes_at_base_point() {
        let p = builtin::base_point();
        for x in builtin::algebra_basis(2) {
            assert!(moment_map(&p, &x).unwrap().is_zero());
        }
    }

    #[test]
    fn moment_map_weight_example() {
        // diag(i, -i) in the first factor acts with weight 2i on e1^2,
        // so -(i/2)(2i) = 1
        let v = highest_weight_point();
        let basis = builtin::algebra_basis(2);
        assert_eq!(moment_map(&v, &basis[0]).unwrap(), si(1));
    }

    #[test]
    fn moment_map_rejects_zero_vector() {
        let zero = RepVector::zero(RepSpace::new(vec![2, 1]).unwrap());
        assert!(matches!(
            moment_map(&zero, &builtin::h()),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn isotropy_at_base_point_is_spanned_by_h() {
        let p = builtin::base_point();
        let basis = isotropy_algebra(&p).unwrap();
        assert_eq!(basis.len(), 1);
        // proportional to H: X - (B(X,H)/B(H,H)) H = 0
        let x = &basis[0];
        let coeff = killing_form(x, &builtin::h())
            .unwrap()
            .checked_div(&killing_form(&builtin::h(), &builtin::h()).unwrap())
            .unwrap();
        let diff = x.add(&builtin::h().scale_scalar(&-coeff).unwrap()).unwrap();
        assert!(diff.is_zero());
    }

    #[test]
    fn isotropy_at_highest_weight_is_two_dimensional() {
        let basis = isotropy_algebra(&highest_weight_point()).unwrap();
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn isotropy_elements_act_by_imaginary_scalars() {
        let p = builtin::base_point();
        for x in isotropy_algebra(&p).unwrap() {
            let xp = lie_action(&x, &p).unwrap();
            let c = inner_product(&xp, &p)
                .unwrap()
                .checked_div(&inner_product(&p, &p).unwrap())
                .unwrap();
            assert!(c.re_part().is_zero());
            assert_eq!(xp, p.scale(&c));
        }
    }

    #[test]
    fn classify_base_point_orbit() {
        let report = classify_orbit(&builtin::base_point()).unwrap();
        assert_eq!(report.orbit_real_dim, 5);
        assert_eq!(report.ambient_complex_dim, 5);
        assert!(report.moment_map_zero);
        assert!(report.isotropic);
        assert!(report.lagrangian);
        assert_eq!(report.isotropy_basis.len(), 1);
    }

    #[test]
    fn classify_highest_weight_orbit() {
        let report = classify_orbit(&highest_weight_point()).unwrap();
        assert_eq!(report.orbit_real_dim, 4);
        assert!(!report.lagrangian);
        assert!(!report.moment_map_zero);
    }

    #[test]
    fn classify_real_form_orbit() {
        let report = classify_orbit(&real_form_point()).unwrap();
        assert_eq!(report.orbit_real_dim, 2);
        assert_eq!(report.ambient_complex_dim, 2);
        assert!(report.moment_map_zero);
        assert!(report.isotropic);
        assert!(report.lagrangian);
    }

    #[test]
    fn fs_norms_at_base_point() {
        let p = builtin::base_point();
        let cases = [
            (builtin::x1(), rat(1, 4)),
            (builtin::y1(), rat(1, 4)),
            (builtin::x2(), rat(1, 8)),
            (builtin::y2(), rat(1, 8)),
            (builtin::v(), rat(5, 8)),
            (builtin::v1(), rat(1, 1)),
            (builtin::f1(), rat(1, 1)),
            (builtin::f2(), rat(1, 1)),
            (builtin::g1(), rat(1, 1)),
            (builtin::g2(), rat(1, 1)),
        ];
        for (x, expected) in cases {
            assert_eq!(
                fs_norm_squared(&p, &x).unwrap(),
                Scalar::from_rational(expected.clone())
            );
        }
    }

    #[test]
    fn fs_norm_rescales_with_curvature() {
        let p = builtin::base_point();
        let x = builtin::x1();
        assert_eq!(
            fs_norm_squared_with_c(&p, &x, &rat(8, 1)).unwrap(),
            Scalar::from_rational(rat(1, 8))
        );
        assert!(fs_norm_squared_with_c(&p, &x, &rat(-4, 1)).is_err());
    }

    #[test]
    fn fs_inner_cross_terms_vanish() {
        let p = builtin::base_point();
        assert!(fs_inner(&p, &builtin::x1(), &builtin::x2()).unwrap().is_zero());
    }

    #[test]
    fn base_frame_gram_is_identity() {
        let frame = tangent_frame(&builtin::base_point()).unwrap();
        assert_eq!(frame.frame.len(), 5);
        for (i, row) in frame.gram.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let expected = if i == j { si(1) } else { si(0) };
                assert_eq!(*entry, expected, "gram[{i}][{j}]");
            }
        }
    }

    #[test]
    fn base_frame_is_killing_orthogonal_to_isotropy() {
        let frame = tangent_frame(&builtin::base_point()).unwrap();
        for x in &frame.frame {
            assert!(killing_form(x, &builtin::h()).unwrap().is_zero());
        }
    }

    #[test]
    fn real_form_frame_is_diagonal() {
        let frame = tangent_frame(&real_form_point()).unwrap();
        assert_eq!(frame.frame.len(), 2);
        for (i, row) in frame.gram.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if i == j {
                    assert!(!entry.is_zero());
                } else {
                    assert!(entry.is_zero());
                }
            }
        }
    }

    #[test]
    fn generic_frame_for_scaled_base_point_is_diagonal() {
        // a scaled copy of the base point avoids the named-frame shortcut
        let p = builtin::base_point().scale(&si(3));
        let frame = tangent_frame(&p).unwrap();
        assert_eq!(frame.frame.len(), 5);
        for (i, row) in frame.gram.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if i != j {
                    assert!(entry.is_zero(), "gram[{i}][{j}] = {entry}");
                }
            }
        }
    }

    #[test]
    fn tangent_frame_rejects_non_lagrangian_points() {
        assert!(matches!(
            tangent_frame(&highest_weight_point()),
            Err(Error::NotLagrangian)
        ));
    }

    #[test]
    fn moment_map_equivariance_under_sigma_and_tau() {
        let points = [builtin::base_point(), highest_weight_point()];
        let basis = builtin::algebra_basis(2);
        for g in [builtin::sigma(), builtin::tau()] {
            let g_inv = g.inverse();
            for v in &points {
                let gv = group_action(&g, v).unwrap();
                for x in &basis {
                    let lhs = moment_map(&gv, x).unwrap();
                    let rhs = moment_map(v, &g_inv.ad(x).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn sigma_generates_order_four_component_group() {
        let report = sigma_component_report().unwrap();
        assert!(report.order_four());
        assert_eq!(report.sigma_scalar, Scalar::i());
        // the identity lies on the one-parameter subgroup
        assert!(on_h_one_parameter(&GroupElement::identity(2)));
        // sigma^2 = (-id, -id) is diagonal but off the subgroup
        assert!(!on_h_one_parameter(&builtin::sigma().pow(2)));
    }

    #[test]
    fn dimension_bookkeeping() {
        for v in [builtin::base_point(), highest_weight_point()] {
            let report = classify_orbit(&v).unwrap();
            assert_eq!(
                report.orbit_real_dim + report.isotropy_basis.len(),
                3 * v.space().factors()
            );
        }
    }

    fn small_vector() -> impl Strategy<Value = RepVector> {
        let coeff = (-2i64..=2, -2i64..=2).prop_map(|(a, b)| {
            Scalar::from_int(a) + Scalar::i_times(rat(b, 1))
        });
        proptest::collection::vec(coeff, 6).prop_map(|coeffs| {
            let space = RepSpace::new(vec![2, 1]).unwrap();
            let basis = space.basis();
            RepVector::from_terms(
                space,
                basis.into_iter().zip(coeffs).collect(),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn moment_map_is_real_and_scale_invariant(v in small_vector(), which in 0usize..6) {
            prop_assume!(!v.is_zero());
            let x = &builtin::algebra_basis(2)[which];
            let a = moment_map(&v, x).unwrap();
            prop_assert!(a.is_real());
            let b = moment_map(&v.scale(&Scalar::from_int(2)), x).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn moment_map_zero_implies_isotropic(v in small_vector()) {
            prop_assume!(!v.is_zero());
            let report = classify_orbit(&v).unwrap();
            if report.moment_map_zero {
                prop_assert!(report.isotropic);
            }
        }
    }
}
