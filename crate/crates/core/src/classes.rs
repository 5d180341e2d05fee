//! Segre, Fulton, CSM and Milnor classes of hypersurfaces and global
//! complete intersections in `P^n`.
//!
//! Segre classes of singular schemes are inputs. A complete intersection is
//! described by its degrees; for the Milnor class formula the last degree
//! names the hypersurface carrying `L`, and the others are assumed to cut out
//! a smooth complete intersection.

use crate::calculus::{dual, tensor_line, LineBundle, SplitBundle};
use crate::chow::{rat, AmbientSpace, ChowClass, Rational};
use crate::error::{Error, Result};

fn check_degree(d: u32) -> Result<i64> {
    if d == 0 {
        return Err(Error::InvalidDegree(0));
    }
    Ok(i64::from(d))
}

fn same_ambient(ambient: &AmbientSpace, classes: &[&ChowClass]) -> Result<()> {
    classes.iter().try_for_each(|c| ambient.check(c))
}

fn same_dim(classes: &[&ChowClass]) -> Result<()> {
    if let Some(first) = classes.first() {
        for c in &classes[1..] {
            if c.dim() != first.dim() {
                return Err(Error::AmbientMismatch {
                    left: first.dim(),
                    right: c.dim(),
                });
            }
        }
    }
    Ok(())
}

/// `c(L)^{-1} ∩ (s^∨ ⊗ L)`, the term every hypersurface formula shares.
fn residual_term(s: &ChowClass, line: &LineBundle) -> Result<ChowClass> {
    line.chern()
        .invert_unit()?
        .checked_mul(&tensor_line(&dual(s), line)?)
}

/// `s(X, P^n) = [X] · c(E)^{-1}` for the complete intersection of
/// hypersurfaces of the given degrees, with `[X] = Π dᵢH`.
pub fn segre_ci(degrees: &[u32], dim: usize) -> Result<ChowClass> {
    if degrees.len() > dim {
        return Err(Error::TooManyDegrees {
            count: degrees.len(),
            dim,
        });
    }
    let mut cls = ChowClass::unit(dim);
    for &d in degrees {
        let d = check_degree(d)?;
        let factor = ChowClass::hyperplane_power(dim, 1)
            .scalar_mul(&rat(d))
            .checked_mul(&ChowClass::one_plus(dim, d).invert_unit()?)?;
        cls = cls.checked_mul(&factor)?;
    }
    Ok(cls)
}

/// `s(P^k, P^n) = H^{n-k} (1 + H)^{-(n-k)}`.
pub fn segre_linear_subspace(k: usize, dim: usize) -> Result<ChowClass> {
    if k >= dim {
        return Err(Error::SubspaceOutOfRange { k, dim });
    }
    let codim = dim - k;
    ChowClass::hyperplane_power(dim, codim)
        .checked_mul(&ChowClass::one_plus(dim, 1).power(-(codim as i64))?)
}

/// `c_F(X) = c(TP^n) ∩ s(X, P^n)`.
pub fn fulton_ci(degrees: &[u32], ambient: &AmbientSpace) -> Result<ChowClass> {
    ambient
        .tangent_chern()
        .checked_mul(&segre_ci(degrees, ambient.dim())?)
}

/// `s°(X) = s(X) + c(O(X))^{-1} ∩ (s(Y)^∨ ⊗ O(X))` for a hypersurface of
/// degree `d` with singular scheme `Y`.
pub fn sm_segre_hypersurface(d: u32, s_y: &ChowClass, ambient: &AmbientSpace) -> Result<ChowClass> {
    ambient.check(s_y)?;
    let line = LineBundle::new(ambient.dim(), check_degree(d)?);
    segre_ci(&[d], ambient.dim())?.checked_add(&residual_term(s_y, &line)?)
}

/// `c_SM(X) = c(TP^n) ∩ s°(X)`.
pub fn csm_hypersurface(d: u32, s_y: &ChowClass, ambient: &AmbientSpace) -> Result<ChowClass> {
    ambient
        .tangent_chern()
        .checked_mul(&sm_segre_hypersurface(d, s_y, ambient)?)
}

/// Milnor class of a hypersurface:
/// `c(TM)/c(O(X)) ∩ (s(Y)^∨ ⊗ O(X))`.
pub fn milnor_hypersurface(d: u32, s_y: &ChowClass, ambient: &AmbientSpace) -> Result<ChowClass> {
    ambient.check(s_y)?;
    let line = LineBundle::new(ambient.dim(), check_degree(d)?);
    ambient
        .tangent_chern()
        .checked_mul(&residual_term(s_y, &line)?)
}

/// The bundle `E = ⊕ O(dᵢ)` cutting out the complete intersection, smooth
/// degrees first and `L` last.
pub fn ci_bundle(smooth_degrees: &[u32], last_degree: u32, dim: usize) -> Result<SplitBundle> {
    let twists = smooth_degrees
        .iter()
        .chain(std::iter::once(&last_degree))
        .map(|&d| check_degree(d))
        .collect::<Result<Vec<_>>>()?;
    if twists.len() > dim {
        return Err(Error::TooManyDegrees {
            count: twists.len(),
            dim,
        });
    }
    Ok(SplitBundle::new(dim, twists))
}

/// Milnor class of a global complete intersection, without any sign
/// convention:
/// `c(TM)/c(E) ∩ (c(E^∨ ⊗ L) ∩ (s(Y)^∨ ⊗ L))`.
pub fn milnor_ci_raw(
    smooth_degrees: &[u32],
    last_degree: u32,
    s_y: &ChowClass,
    ambient: &AmbientSpace,
) -> Result<ChowClass> {
    ambient.check(s_y)?;
    let n = ambient.dim();
    let bundle = ci_bundle(smooth_degrees, last_degree, n)?;
    let line = LineBundle::new(n, i64::from(last_degree));
    let twisted = bundle.dual_bundle().twist_bundle(&line).total_chern();
    ambient
        .tangent_chern()
        .checked_mul(&bundle.total_chern().invert_unit()?)?
        .checked_mul(&twisted)?
        .checked_mul(&tensor_line(&dual(s_y), &line)?)
}

/// `(-1)^{k-1}` times [`milnor_ci_raw`], so that `M = c_SM - c_F` in every
/// codimension `k`.
pub fn milnor_signed(
    smooth_degrees: &[u32],
    last_degree: u32,
    s_y: &ChowClass,
    ambient: &AmbientSpace,
) -> Result<ChowClass> {
    let raw = milnor_ci_raw(smooth_degrees, last_degree, s_y, ambient)?;
    Ok(if smooth_degrees.len() % 2 == 1 { -raw } else { raw })
}

/// The class `m` with `M = c(TM) ∩ m`.
pub fn milnor_m_class(milnor: &ChowClass, ambient: &AmbientSpace) -> Result<ChowClass> {
    ambient.check(milnor)?;
    ambient.tangent_chern().invert_unit()?.checked_mul(milnor)
}

/// Recovers `s(Y)` from the Milnor class of a degree-`d` hypersurface:
/// `s(Y) = ((c(O(d)) / c(TM)) ∩ M)^∨ ⊗ O(d)`.
pub fn invert_milnor_to_segre(milnor: &ChowClass, d: u32, ambient: &AmbientSpace) -> Result<ChowClass> {
    ambient.check(milnor)?;
    let line = LineBundle::new(ambient.dim(), check_degree(d)?);
    let inner = line
        .chern()
        .checked_mul(&ambient.tangent_chern().invert_unit()?)?
        .checked_mul(milnor)?;
    tensor_line(&dual(&inner), &line)
}

/// `c_SM(M₁) + c_SM(M₂) - c_SM(M₁₂)`; with `M₁₂` the intersection this is
/// the union, with `M₁₂` the union it is the intersection.
pub fn csm_inclusion_exclusion2(
    csm_1: &ChowClass,
    csm_2: &ChowClass,
    csm_12: &ChowClass,
) -> Result<ChowClass> {
    same_dim(&[csm_1, csm_2, csm_12])?;
    csm_1.checked_add(csm_2)?.checked_sub(csm_12)
}

/// SM-Segre class of `X = M₁ ∩ M₂`: `s°(M₁) + s°(M₂) - s°(M₁ ∪ M₂)`.
pub fn sm_segre_union2(
    sm_1: &ChowClass,
    sm_2: &ChowClass,
    sm_union: &ChowClass,
) -> Result<ChowClass> {
    csm_inclusion_exclusion2(sm_1, sm_2, sm_union)
}

/// Checks the residual formula for `X = M₁ ∩ M₂`:
/// `s(X) = s(M₁) + s(M₂) - s(M₁ ∪ M₂) - c(L₁⊗L₂)^{-1} ∩ (s(X)^∨ ⊗ L₁⊗L₂)`.
pub fn residual_segre_identity_check(
    s_x: &ChowClass,
    s_1: &ChowClass,
    s_2: &ChowClass,
    s_12: &ChowClass,
    d1: u32,
    d2: u32,
) -> Result<bool> {
    same_dim(&[s_x, s_1, s_2, s_12])?;
    let n = s_x.dim();
    let line = LineBundle::new(n, check_degree(d1)? + check_degree(d2)?);
    let rhs = s_1
        .checked_add(s_2)?
        .checked_sub(s_12)?
        .checked_sub(&residual_term(s_x, &line)?)?;
    Ok(&rhs == s_x)
}

/// Right-hand side of the codimension-two difference formula
/// `s°(X) - s(X) = c(L₁)^{-1} ∩ (s(Y₁)^∨ ⊗ L₁) + c(L₂)^{-1} ∩ (s(Y₂)^∨ ⊗ L₂)
///  - c(L₁⊗L₂)^{-1} ∩ ((s(X̄) - s(X))^∨ ⊗ L₁⊗L₂)`.
pub fn codim2_difference(
    s_y1: &ChowClass,
    s_y2: &ChowClass,
    s_xbar: &ChowClass,
    s_x: &ChowClass,
    d1: u32,
    d2: u32,
) -> Result<ChowClass> {
    same_dim(&[s_y1, s_y2, s_xbar, s_x])?;
    let n = s_x.dim();
    let l1 = LineBundle::new(n, check_degree(d1)?);
    let l2 = LineBundle::new(n, check_degree(d2)?);
    let l12 = l1.tensor(&l2);
    residual_term(s_y1, &l1)?
        .checked_add(&residual_term(s_y2, &l2)?)?
        .checked_sub(&residual_term(&s_xbar.checked_sub(s_x)?, &l12)?)
}

/// Compares [`codim2_difference`] with `c(TM)^{-1} ∩ M(X)`.
#[allow(clippy::too_many_arguments)]
pub fn codim2_difference_identity_check(
    s_y1: &ChowClass,
    s_y2: &ChowClass,
    s_xbar: &ChowClass,
    s_x: &ChowClass,
    d1: u32,
    d2: u32,
    milnor_signed: &ChowClass,
    ambient: &AmbientSpace,
) -> Result<bool> {
    same_ambient(ambient, &[s_y1, s_y2, s_xbar, s_x, milnor_signed])?;
    let rhs = codim2_difference(s_y1, s_y2, s_xbar, s_x, d1, d2)?;
    Ok(rhs == milnor_m_class(milnor_signed, ambient)?)
}

/// `χ_top = ∫ c_SM`.
pub fn euler_characteristic(csm: &ChowClass) -> Rational {
    csm.integral()
}

/// `χ_top(P^n) = n + 1`, as a sanity anchor.
pub fn euler_projective(dim: usize) -> Rational {
    rat(dim as i64 + 1)
}
