//! Built-in golden checks: the worked quadric-and-hyperplane example in
//! `P^4` and the Segre class of the singular scheme of their union.
//!
//! Every item computes an exact value, renders it in machine form and
//! compares the string with a frozen expectation.

use std::fmt::Write as _;

use crate::calculus::dual;
use crate::chow::{format_rational, AmbientSpace, ChowClass};
use crate::classes::{
    codim2_difference, codim2_difference_identity_check, csm_hypersurface,
    csm_inclusion_exclusion2, euler_characteristic, fulton_ci, invert_milnor_to_segre,
    milnor_ci_raw, milnor_hypersurface, milnor_m_class, milnor_signed,
    residual_segre_identity_check, segre_ci, segre_linear_subspace, sm_segre_hypersurface,
    sm_segre_union2,
};
use crate::error::Result;
use crate::render::machine;

/// One golden value.
pub struct GoldenItem {
    pub name: String,
    pub expected: String,
    pub compute: Box<dyn Fn() -> Result<String> + Send + Sync>,
}

impl GoldenItem {
    pub fn new<F>(name: &str, expected: &str, compute: F) -> Self
    where
        F: Fn() -> Result<String> + Send + Sync + 'static,
    {
        GoldenItem {
            name: name.to_string(),
            expected: expected.to_string(),
            compute: Box::new(compute),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItemOutcome {
    pub name: String,
    pub expected: String,
    pub computed: std::result::Result<String, String>,
}

impl ItemOutcome {
    pub fn passed(&self) -> bool {
        matches!(&self.computed, Ok(v) if *v == self.expected)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub outcomes: Vec<ItemOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(ItemOutcome::passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            match &o.computed {
                Ok(v) if *v == o.expected => {
                    let _ = writeln!(out, "PASS {} = {}", o.name, v);
                }
                Ok(v) => {
                    let _ = writeln!(out, "FAIL {}: expected {}, computed {}", o.name, o.expected, v);
                }
                Err(e) => {
                    let _ = writeln!(out, "FAIL {}: expected {}, error: {}", o.name, o.expected, e);
                }
            }
        }
        let passed = self.outcomes.iter().filter(|o| o.passed()).count();
        let _ = writeln!(out, "{passed}/{} passed", self.outcomes.len());
        out
    }
}

/// Runs the items and sorts the outcomes by name.
pub fn run_items(items: &[GoldenItem]) -> VerifyReport {
    let mut outcomes: Vec<ItemOutcome> = items
        .iter()
        .map(|item| ItemOutcome {
            name: item.name.clone(),
            expected: item.expected.clone(),
            computed: (item.compute)().map_err(|e| e.to_string()),
        })
        .collect();
    outcomes.sort_by(|a, b| a.name.cmp(&b.name));
    VerifyReport { outcomes }
}

fn p4() -> AmbientSpace {
    AmbientSpace::projective(4)
}

fn line() -> Result<ChowClass> {
    segre_linear_subspace(1, 4)
}

fn csm_x() -> Result<ChowClass> {
    fulton_ci(&[1, 2], &p4())?.checked_add(&milnor_signed(&[1], 2, &line()?, &p4())?)
}

/// `M(Z) = c_SM(Q) + c_SM(H) - c_SM(X) - c_F(Z)`.
fn milnor_z() -> Result<ChowClass> {
    let z = ChowClass::zero(4);
    let csm_z = csm_inclusion_exclusion2(
        &csm_hypersurface(2, &line()?, &p4())?,
        &csm_hypersurface(1, &z, &p4())?,
        &csm_x()?,
    )?;
    csm_z.checked_sub(&fulton_ci(&[3], &p4())?)
}

fn segre_zs() -> Result<ChowClass> {
    invert_milnor_to_segre(&milnor_z()?, 3, &p4())
}

/// The golden items.
pub fn golden_items() -> Vec<GoldenItem> {
    vec![
        GoldenItem::new("quadric_hyperplane.dual_segre_of_line", "0,0,0,-1,-3", || {
            Ok(machine(&dual(&line()?)))
        }),
        GoldenItem::new("quadric_hyperplane.milnor_raw", "0,0,0,-1,0", || {
            Ok(machine(&milnor_ci_raw(&[1], 2, &line()?, &p4())?))
        }),
        GoldenItem::new("quadric_hyperplane.milnor_signed", "0,0,0,1,0", || {
            Ok(machine(&milnor_signed(&[1], 2, &line()?, &p4())?))
        }),
        GoldenItem::new("quadric_hyperplane.fulton", "0,0,2,4,4", || {
            Ok(machine(&fulton_ci(&[1, 2], &p4())?))
        }),
        GoldenItem::new("quadric_hyperplane.csm", "0,0,2,5,4", || Ok(machine(&csm_x()?))),
        GoldenItem::new("quadric_hyperplane.euler", "4", || {
            Ok(format_rational(&euler_characteristic(&csm_x()?)))
        }),
        GoldenItem::new("quadric_hyperplane.csm_via_sm_segre_union", "0,0,2,5,4", || {
            let z = ChowClass::zero(4);
            let sm = sm_segre_union2(
                &sm_segre_hypersurface(2, &line()?, &p4())?,
                &sm_segre_hypersurface(1, &z, &p4())?,
                &sm_segre_hypersurface(3, &segre_zs()?, &p4())?,
            )?;
            Ok(machine(&p4().tangent_chern().checked_mul(&sm)?))
        }),
        GoldenItem::new("cubic_union.csm_Z", "0,3,8,8,4", || {
            Ok(machine(&milnor_z()?.checked_add(&fulton_ci(&[3], &p4())?)?))
        }),
        GoldenItem::new("cubic_union.euler_Z", "4", || {
            let csm_z = milnor_z()?.checked_add(&fulton_ci(&[3], &p4())?)?;
            Ok(format_rational(&euler_characteristic(&csm_z)))
        }),
        GoldenItem::new("cubic_union.milnor_Z", "0,0,2,-4,10", || Ok(machine(&milnor_z()?))),
        GoldenItem::new("cubic_union.segre_Zs", "0,0,2,-4,0", || Ok(machine(&segre_zs()?))),
        GoldenItem::new("cubic_union.milnor_from_recovered_segre", "0,0,2,-4,10", || {
            Ok(machine(&milnor_hypersurface(3, &segre_zs()?, &p4())?))
        }),
        GoldenItem::new("identities.residual_segre_quadric_hyperplane", "true", || {
            Ok(residual_segre_identity_check(
                &segre_ci(&[2, 1], 4)?,
                &segre_ci(&[2], 4)?,
                &segre_ci(&[1], 4)?,
                &segre_ci(&[3], 4)?,
                2,
                1,
            )?
            .to_string())
        }),
        GoldenItem::new("identities.codim2_difference_quadric_hyperplane", "true", || {
            Ok(codim2_difference_identity_check(
                &ChowClass::zero(4),
                &line()?,
                &segre_zs()?,
                &segre_ci(&[1, 2], 4)?,
                1,
                2,
                &milnor_signed(&[1], 2, &line()?, &p4())?,
                &p4(),
            )?
            .to_string())
        }),
        GoldenItem::new("identities.codim2_difference_lhs", "0,0,0,1,-5", || {
            Ok(machine(&codim2_difference(
                &ChowClass::zero(4),
                &line()?,
                &segre_zs()?,
                &segre_ci(&[1, 2], 4)?,
                1,
                2,
            )?))
        }),
        GoldenItem::new("identities.codim2_difference_rhs", "0,0,0,1,-5", || {
            Ok(machine(&milnor_m_class(
                &milnor_signed(&[1], 2, &line()?, &p4())?,
                &p4(),
            )?))
        }),
    ]
}

/// Runs every golden item.
pub fn verify_golden_items() -> VerifyReport {
    run_items(&golden_items())
}
