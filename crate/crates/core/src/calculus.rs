//! Dual and tensor operations on `A_*(P^n)` and Chern classes of split
//! bundles.
//!
//! For `α = Σ αⁱ` (codimension grading):
//!
//! * `α^∨ = Σ (-1)ⁱ αⁱ`
//! * `α ⊗ L = Σ αⁱ / c(L)ⁱ`
//!
//! The tensor operation is an action of the Picard group, and the pair
//! satisfies `(c(E) ∩ α)^∨ = c(E^∨) ∩ α^∨` and
//! `(c(E) ∩ α) ⊗ L = c(E ⊗ L) / c(L)^r ∩ (α ⊗ L)`; both are exposed as
//! checks below.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chow::{ChowClass, Rational};
use crate::error::{Error, Result};

/// The line bundle `O(d)` on `P^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LineBundle {
    dim: usize,
    degree: i64,
}

impl LineBundle {
    pub fn new(dim: usize, degree: i64) -> Self {
        LineBundle { dim, degree }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// `1 + d·H`.
    pub fn chern(&self) -> ChowClass {
        ChowClass::one_plus(self.dim, self.degree)
    }

    /// `O(a) ⊗ O(b) = O(a + b)`.
    pub fn tensor(&self, other: &LineBundle) -> LineBundle {
        LineBundle::new(self.dim, self.degree + other.degree)
    }

    pub fn dual(&self) -> LineBundle {
        LineBundle::new(self.dim, -self.degree)
    }
}

/// A sum of line bundles `⊕ O(aᵢ)` in the Grothendieck group.
///
/// When the virtual rank differs from the number of twists, the difference
/// is made up by `virtual_rank - twists.len()` copies (possibly negative) of
/// a padding bundle `O(t)`; `t` is 0 on construction and follows the bundle
/// through duals and twists, so `c(E)`, `c(E^∨)` and `c(E ⊗ L)` stay
/// consistent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitBundle {
    dim: usize,
    twists: Vec<i64>,
    virtual_rank: i64,
    padding_twist: i64,
}

impl SplitBundle {
    pub fn new(dim: usize, twists: Vec<i64>) -> Self {
        let virtual_rank = twists.len() as i64;
        SplitBundle {
            dim,
            twists,
            virtual_rank,
            padding_twist: 0,
        }
    }

    /// Same summands, different rank in the Grothendieck group.
    pub fn with_virtual_rank(mut self, rank: i64) -> Self {
        self.virtual_rank = rank;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn virtual_rank(&self) -> i64 {
        self.virtual_rank
    }

    fn padding(&self) -> i64 {
        self.virtual_rank - self.twists.len() as i64
    }

    /// `Π (1 + aᵢH)`, times `(1 + tH)^{padding}` for a virtual rank override.
    pub fn total_chern(&self) -> ChowClass {
        let mut c = ChowClass::unit(self.dim);
        for &a in &self.twists {
            c = c
                .checked_mul(&ChowClass::one_plus(self.dim, a))
                .expect("same ambient");
        }
        let pad = self.padding();
        if pad != 0 {
            let p = ChowClass::one_plus(self.dim, self.padding_twist)
                .power(pad)
                .expect("1 + tH is a unit");
            c = c.checked_mul(&p).expect("same ambient");
        }
        c
    }

    pub fn dual_bundle(&self) -> SplitBundle {
        SplitBundle {
            dim: self.dim,
            twists: self.twists.iter().map(|a| -a).collect(),
            virtual_rank: self.virtual_rank,
            padding_twist: -self.padding_twist,
        }
    }

    /// `E ⊗ L`: every twist shifted by `deg L`.
    pub fn twist_bundle(&self, line: &LineBundle) -> SplitBundle {
        let d = line.degree();
        SplitBundle {
            dim: self.dim,
            twists: self.twists.iter().map(|a| a + d).collect(),
            virtual_rank: self.virtual_rank,
            padding_twist: self.padding_twist + d,
        }
    }

    /// Drops the last summand; for `E = N ⊕ L` this is the normal bundle `N`.
    pub fn without_last(&self) -> SplitBundle {
        let mut twists = self.twists.clone();
        twists.pop();
        SplitBundle::new(self.dim, twists)
    }
}

fn same_dim(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::AmbientMismatch { left, right });
    }
    Ok(())
}

/// `α^∨`: odd-codimension components change sign.
pub fn dual(alpha: &ChowClass) -> ChowClass {
    let coeffs = alpha
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
        .collect();
    ChowClass::new(alpha.dim(), coeffs).expect("same length")
}

/// `α ⊗ L = Σ αⁱ · c(L)^{-i}`.
pub fn tensor_line(alpha: &ChowClass, line: &LineBundle) -> Result<ChowClass> {
    same_dim(alpha.dim(), line.dim())?;
    let n = alpha.dim();
    let inv = line.chern().invert_unit()?;
    let mut out = ChowClass::zero(n);
    let mut inv_pow = ChowClass::unit(n);
    for i in 0..=n {
        if i > 0 {
            inv_pow = inv_pow.checked_mul(&inv)?;
        }
        let a = &alpha.coeffs()[i];
        if a.is_zero() {
            continue;
        }
        let term = ChowClass::hyperplane_power(n, i)
            .checked_mul(&inv_pow)?
            .scalar_mul(a);
        out = out.checked_add(&term)?;
    }
    Ok(out)
}

/// The tensor action computed in a subvariety of codimension `d`, pushed
/// forward: `α ⊗_{M'} i^*L = c(L)^d ∩ (α ⊗_M L)`.
pub fn tensor_shifted(alpha: &ChowClass, line: &LineBundle, d: u32) -> Result<ChowClass> {
    let factor = line.chern().power(i64::from(d))?;
    factor.checked_mul(&tensor_line(alpha, line)?)
}

/// `(c(E) ∩ α)^∨ == c(E^∨) ∩ α^∨`.
pub fn check_identity_2_1(bundle: &SplitBundle, alpha: &ChowClass) -> Result<bool> {
    same_dim(bundle.dim(), alpha.dim())?;
    let lhs = dual(&bundle.total_chern().checked_mul(alpha)?);
    let rhs = bundle.dual_bundle().total_chern().checked_mul(&dual(alpha))?;
    Ok(lhs == rhs)
}

/// `(c(E) ∩ α) ⊗ L == c(E ⊗ L) / c(L)^r ∩ (α ⊗ L)` with `r` the virtual rank.
pub fn check_identity_2_2(
    bundle: &SplitBundle,
    alpha: &ChowClass,
    line: &LineBundle,
) -> Result<bool> {
    same_dim(bundle.dim(), alpha.dim())?;
    check_identity_2_2_with(
        &bundle.total_chern(),
        &bundle.twist_bundle(line).total_chern(),
        bundle.virtual_rank(),
        alpha,
        line,
    )
}

/// The tensor identity for caller-supplied Chern data: `c(E)`, `c(E ⊗ L)` and
/// the Grothendieck-group rank of `E`.
pub fn check_identity_2_2_with(
    chern: &ChowClass,
    tensored_chern: &ChowClass,
    rank: i64,
    alpha: &ChowClass,
    line: &LineBundle,
) -> Result<bool> {
    let lhs = tensor_line(&chern.checked_mul(alpha)?, line)?;
    let rhs = tensored_chern
        .checked_mul(&line.chern().power(-rank)?)?
        .checked_mul(&tensor_line(alpha, line)?)?;
    Ok(lhs == rhs)
}

/// `s(X) + c(O(X))^{-1} ∩ (s(Y)^∨ ⊗ O(X))`.
pub fn s_x_minus_y_compact(
    s_x: &ChowClass,
    s_y: &ChowClass,
    line: &LineBundle,
) -> Result<ChowClass> {
    same_dim(s_x.dim(), s_y.dim())?;
    let correction = line
        .chern()
        .invert_unit()?
        .checked_mul(&tensor_line(&dual(s_y), line)?)?;
    s_x.checked_add(&correction)
}

/// The same class assembled one dimension at a time:
/// `s_m = s(X)_m + (-1)^{n-m} Σ_j C(n-m, j) X^j · s(Y)_{m+j}`, with
/// `X = deg(L)·H`.
pub fn s_x_minus_y_expanded(
    s_x: &ChowClass,
    s_y: &ChowClass,
    line: &LineBundle,
) -> Result<ChowClass> {
    same_dim(s_x.dim(), s_y.dim())?;
    same_dim(s_x.dim(), line.dim())?;
    let n = s_x.dim();
    let d = BigInt::from(line.degree());
    let mut coeffs = Vec::with_capacity(n + 1);
    for m in (0..=n).rev() {
        // codimension of the dimension-m piece
        let c = n - m;
        let mut sum = Rational::zero();
        let mut binom = BigInt::from(1);
        let mut d_pow = BigInt::from(1);
        for j in 0..=c {
            let y = s_y.coeff(c - j);
            if !y.is_zero() {
                sum += y * Rational::from_integer(&binom * &d_pow);
            }
            binom = binom * BigInt::from(c - j) / BigInt::from(j + 1);
            d_pow *= &d;
        }
        if c % 2 == 1 {
            sum = -sum;
        }
        coeffs.push(s_x.coeff(c) + sum);
    }
    ChowClass::new(n, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    use crate::chow::ratio;

    fn cls(dim: usize, c: &[i64]) -> ChowClass {
        ChowClass::from_ints(dim, c).unwrap()
    }

    fn o(dim: usize, d: i64) -> LineBundle {
        LineBundle::new(dim, d)
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual(&cls(4, &[0, 0, 0, 1, -3])), cls(4, &[0, 0, 0, -1, -3]));
        assert_eq!(dual(&ChowClass::unit(4)), ChowClass::unit(4));
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(
            tensor_line(&cls(4, &[0, 0, 0, -1, -3]), &o(4, 2)).unwrap(),
            cls(4, &[0, 0, 0, -1, 3])
        );
        let a = cls(4, &[3, -1, 2, 5, 7]);
        assert_eq!(tensor_line(&a, &o(4, 0)).unwrap(), a);
        assert_eq!(
            tensor_line(&cls(4, &[0, 0, 2, 8, 18]), &o(4, 3)).unwrap(),
            cls(4, &[0, 0, 2, -4, 0])
        );
        assert_eq!(
            tensor_line(&a, &o(3, 1)),
            Err(Error::AmbientMismatch { left: 4, right: 3 })
        );
    }

    #[test]
    fn tensor_shifted_examples() {
        let a = cls(4, &[1, 2, -3, 0, 5]);
        assert_eq!(
            tensor_shifted(&a, &o(4, 2), 0).unwrap(),
            tensor_line(&a, &o(4, 2)).unwrap()
        );
        assert_eq!(
            tensor_shifted(&ChowClass::hyperplane_power(4, 3), &o(4, 2), 1).unwrap(),
            cls(4, &[0, 0, 0, 1, -4])
        );
        assert_eq!(tensor_shifted(&a, &o(4, 0), 3).unwrap(), a);
    }

    #[test]
    fn bundle_chern_classes() {
        let e = SplitBundle::new(4, vec![1, 2]);
        assert_eq!(e.total_chern(), cls(4, &[1, 3, 2]));
        assert_eq!(e.dual_bundle().twists(), &[-1, -2]);
        let f = e.dual_bundle().twist_bundle(&o(4, 2));
        assert_eq!(f.twists(), &[1, 0]);
        assert_eq!(f.total_chern(), cls(4, &[1, 1]));
        assert_eq!(SplitBundle::new(4, vec![]).total_chern(), ChowClass::unit(4));
    }

    #[test]
    fn virtual_rank_padding() {
        // one extra trivial summand: c(E) unchanged, c(E ⊗ O(3)) picks up (1+3H)
        let e = SplitBundle::new(4, vec![1]).with_virtual_rank(2);
        assert_eq!(e.total_chern(), cls(4, &[1, 1]));
        assert_eq!(
            e.twist_bundle(&o(4, 3)).total_chern(),
            cls(4, &[1, 4]).checked_mul(&cls(4, &[1, 3])).unwrap()
        );
        let alpha = cls(4, &[1, -2, 3, 1, 0]);
        assert!(check_identity_2_2(&e, &alpha, &o(4, 3)).unwrap());
        let neg = SplitBundle::new(4, vec![2, -1]).with_virtual_rank(0);
        assert!(check_identity_2_2(&neg, &alpha, &o(4, -2)).unwrap());
        assert!(check_identity_2_1(&neg, &alpha).unwrap());
    }

    #[test]
    fn identity_checks_on_fixed_inputs() {
        let alpha = cls(4, &[2, -1, 0, 3, 1]);
        let e = SplitBundle::new(4, vec![1, 2]);
        assert!(check_identity_2_1(&e, &alpha).unwrap());
        assert!(check_identity_2_1(&SplitBundle::new(4, vec![]), &alpha).unwrap());
        // (c(O(-3)) ∩ (H+H²))^∨ = -H - 2H² + 3H³ on both sides
        let hh = cls(4, &[0, 1, 1]);
        let bundle = SplitBundle::new(4, vec![-3]);
        assert_eq!(
            dual(&bundle.total_chern().checked_mul(&hh).unwrap()),
            cls(4, &[0, -1, -2, 3, 0])
        );
        assert!(check_identity_2_1(&bundle, &hh).unwrap());
        assert!(check_identity_2_2(&e, &alpha, &o(4, 3)).unwrap());
        assert!(check_identity_2_2(&SplitBundle::new(4, vec![]), &alpha, &o(4, 3)).unwrap());
        assert!(check_identity_2_2(
            &SplitBundle::new(4, vec![2]),
            &ChowClass::hyperplane_power(4, 2),
            &o(4, 1)
        )
        .unwrap());
    }

    #[test]
    fn wrong_rank_breaks_identity_2_2() {
        let alpha = cls(4, &[1, 1, 1, 1, 1]);
        let e = SplitBundle::new(4, vec![1, 2]);
        let bad = check_identity_2_2_with(
            &e.total_chern(),
            &e.twist_bundle(&o(4, 3)).total_chern(),
            3,
            &alpha,
            &o(4, 3),
        )
        .unwrap();
        assert!(!bad);
    }

    #[test]
    fn s_x_minus_y_forms_agree() {
        let s_q = cls(4, &[0, 2, -4, 8, -16]);
        let zero = ChowClass::zero(4);
        assert_eq!(s_x_minus_y_compact(&s_q, &zero, &o(4, 2)).unwrap(), s_q);
        assert_eq!(s_x_minus_y_expanded(&s_q, &zero, &o(4, 2)).unwrap(), s_q);

        let line = cls(4, &[0, 0, 0, 1, -3]);
        let compact = s_x_minus_y_compact(&s_q, &line, &o(4, 2)).unwrap();
        let expanded = s_x_minus_y_expanded(&s_q, &line, &o(4, 2)).unwrap();
        assert_eq!(compact, expanded);
        assert_eq!(compact, cls(4, &[0, 2, -4, 7, -11]));
        // capping with c(TP⁴) gives the CSM class of the singular quadric
        let t = cls(4, &[1, 5, 10, 10, 5]);
        assert_eq!(t.checked_mul(&compact).unwrap(), cls(4, &[0, 2, 6, 7, 4]));
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-12i64..=12, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
    }

    fn class_in(dim: usize) -> impl Strategy<Value = ChowClass> {
        proptest::collection::vec(small_rational(), dim + 1)
            .prop_map(move |c| ChowClass::new(dim, c).unwrap())
    }

    fn bundle_in(dim: usize) -> impl Strategy<Value = SplitBundle> {
        (proptest::collection::vec(-4i64..=4, 0..=4), -2i64..=2)
            .prop_map(move |(t, extra)| {
                let r = t.len() as i64;
                SplitBundle::new(dim, t).with_virtual_rank(r + extra)
            })
    }

    proptest! {
        #[test]
        fn dual_is_involution(a in (0usize..=8).prop_flat_map(class_in)) {
            prop_assert_eq!(dual(&dual(&a)), a);
        }

        #[test]
        fn picard_action(a in (0usize..=8).prop_flat_map(class_in), x in -5i64..=5, y in -5i64..=5) {
            let n = a.dim();
            let lhs = tensor_line(&tensor_line(&a, &o(n, x)).unwrap(), &o(n, y)).unwrap();
            prop_assert_eq!(lhs, tensor_line(&a, &o(n, x + y)).unwrap());
        }

        #[test]
        fn dual_tensor_exchange(a in (0usize..=8).prop_flat_map(class_in), d in -5i64..=5) {
            let n = a.dim();
            prop_assert_eq!(
                dual(&tensor_line(&a, &o(n, d)).unwrap()),
                tensor_line(&dual(&a), &o(n, -d)).unwrap()
            );
        }

        #[test]
        fn identities_hold(
            (e, a) in (0usize..=8).prop_flat_map(|n| (bundle_in(n), class_in(n))),
            d in -5i64..=5,
        ) {
            let line = o(a.dim(), d);
            prop_assert!(check_identity_2_1(&e, &a).unwrap());
            prop_assert!(check_identity_2_2(&e, &a, &line).unwrap());
        }

        #[test]
        fn shifted_tensor_relation(a in (0usize..=8).prop_flat_map(class_in), deg in -5i64..=5, d in 0u32..=6) {
            let line = o(a.dim(), deg);
            let expected = line.chern().power(i64::from(d)).unwrap()
                .checked_mul(&tensor_line(&a, &line).unwrap()).unwrap();
            prop_assert_eq!(tensor_shifted(&a, &line, d).unwrap(), expected);
        }

        #[test]
        fn compact_equals_binomial(
            (sx, sy) in (0usize..=8).prop_flat_map(|n| (class_in(n), class_in(n))),
            d in 1i64..=5,
        ) {
            let line = o(sx.dim(), d);
            prop_assert_eq!(
                s_x_minus_y_compact(&sx, &sy, &line).unwrap(),
                s_x_minus_y_expanded(&sx, &sy, &line).unwrap()
            );
        }
    }
}
