//! Scenario-level computations and the labelled report the CLI prints.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::calculus::{
    check_identity_2_1, check_identity_2_2, s_x_minus_y_compact, s_x_minus_y_expanded, LineBundle,
};
use crate::chow::{format_rational, ChowClass, Rational};
use crate::classes::{
    ci_bundle, codim2_difference_identity_check, csm_hypersurface, euler_characteristic, fulton_ci,
    invert_milnor_to_segre, milnor_ci_raw, milnor_hypersurface, milnor_signed,
    residual_segre_identity_check, segre_ci, sm_segre_hypersurface, sm_segre_union2,
};
use crate::error::{Error, Result};
use crate::render;
use crate::scenario::{Scenario, ScenarioKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Command {
    Segre,
    Fulton,
    Csm,
    Milnor,
    Euler,
    InvertMilnor,
    CheckIdentities,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Segre => "segre",
            Command::Fulton => "fulton",
            Command::Csm => "csm",
            Command::Milnor => "milnor",
            Command::Euler => "euler",
            Command::InvertMilnor => "invert-milnor",
            Command::CheckIdentities => "check-identities",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Machine,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportValue {
    Class(ChowClass),
    Number(Rational),
    Flag(bool),
}

impl ReportValue {
    fn pretty(&self) -> String {
        match self {
            ReportValue::Class(c) => render::pretty(c),
            ReportValue::Number(q) => format_rational(q),
            ReportValue::Flag(b) => b.to_string(),
        }
    }

    fn machine(&self) -> String {
        match self {
            ReportValue::Class(c) => render::machine(c),
            ReportValue::Number(q) => format_rational(q),
            ReportValue::Flag(b) => b.to_string(),
        }
    }
}

/// Named results of one command. Labels are unique and iterate in sorted
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassReport {
    primary: Option<String>,
    entries: BTreeMap<String, ReportValue>,
}

impl ClassReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, label: &str, value: ReportValue) {
        self.entries.insert(label.to_string(), value);
    }

    pub fn with_primary(mut self, label: &str) -> Self {
        self.primary = Some(label.to_string());
        self
    }

    pub fn get(&self, label: &str) -> Option<&ReportValue> {
        self.entries.get(label)
    }

    pub fn class(&self, label: &str) -> Option<&ChowClass> {
        match self.entries.get(label) {
            Some(ReportValue::Class(c)) => Some(c),
            _ => None,
        }
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    /// False when any flag entry is false.
    pub fn all_flags_hold(&self) -> bool {
        self.entries
            .values()
            .all(|v| !matches!(v, ReportValue::Flag(false)))
    }

    /// Text mode prints the primary value alone; reports without a primary
    /// entry list every `label: value`. Machine mode always lists every
    /// entry with exact coefficient vectors.
    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match (format, &self.primary) {
            (Format::Text, Some(p)) => {
                if let Some(v) = self.entries.get(p) {
                    out.push_str(&v.pretty());
                    out.push('\n');
                }
            }
            (Format::Text, None) => {
                for (k, v) in &self.entries {
                    let _ = writeln!(out, "{k}: {}", v.pretty());
                }
            }
            (Format::Machine, _) => {
                for (k, v) in &self.entries {
                    let _ = writeln!(out, "{k}: {}", v.machine());
                }
            }
        }
        out
    }
}

fn constituent_data(scenario: &Scenario) -> Result<Option<[ChowClass; 3]>> {
    let ScenarioKind::Union2 {
        constituents, union, ..
    } = &scenario.kind
    else {
        return Ok(None);
    };
    match (constituents, union) {
        (Some([a, b]), Some(u)) => Ok(Some([
            a.resolve(&scenario.ambient)?,
            b.resolve(&scenario.ambient)?,
            u.resolve(&scenario.ambient)?,
        ])),
        _ => Ok(None),
    }
}

fn require_constituents(scenario: &Scenario) -> Result<[ChowClass; 3]> {
    constituent_data(scenario)?.ok_or_else(|| {
        Error::MissingData(
            "union2 scenarios need constituent_segre (two entries) and union_segre".into(),
        )
    })
}

impl Scenario {
    /// `s(X, P^n)`.
    pub fn segre_x(&self) -> Result<ChowClass> {
        segre_ci(&self.degrees(), self.ambient.dim())
    }

    /// `c_F(X)` of a hypersurface or complete intersection.
    pub fn fulton_class(&self) -> Result<ChowClass> {
        if let ScenarioKind::Union2 { .. } = self.kind {
            return Err(Error::Unsupported(
                "fulton applies to hypersurface and global_ci scenarios, not union2".into(),
            ));
        }
        fulton_ci(&self.degrees(), &self.ambient)
    }

    /// `s°(X, P^n)` with `c_SM(X) = c(TP^n) ∩ s°(X)`.
    pub fn sm_segre(&self) -> Result<ChowClass> {
        match &self.kind {
            ScenarioKind::Hypersurface { degree } => {
                sm_segre_hypersurface(*degree, &self.singular_segre_class()?, &self.ambient)
            }
            ScenarioKind::GlobalCi { .. } => self
                .ambient
                .tangent_chern()
                .invert_unit()?
                .checked_mul(&self.csm()?),
            ScenarioKind::Union2 { degrees, .. } => {
                let [y1, y2, y_union] = require_constituents(self)?;
                let [d1, d2] = *degrees;
                sm_segre_union2(
                    &sm_segre_hypersurface(d1, &y1, &self.ambient)?,
                    &sm_segre_hypersurface(d2, &y2, &self.ambient)?,
                    &sm_segre_hypersurface(d1 + d2, &y_union, &self.ambient)?,
                )
            }
        }
    }

    pub fn csm(&self) -> Result<ChowClass> {
        match &self.kind {
            ScenarioKind::Hypersurface { degree } => {
                csm_hypersurface(*degree, &self.singular_segre_class()?, &self.ambient)
            }
            ScenarioKind::GlobalCi { .. } => self.fulton_class()?.checked_add(&self.milnor_signed()?),
            ScenarioKind::Union2 { .. } => self.ambient.tangent_chern().checked_mul(&self.sm_segre()?),
        }
    }

    /// The Milnor class before any sign convention, where a formula for it
    /// applies. For `union2` this needs `singular_segre` and one constituent
    /// with zero singular Segre class; that constituent is taken as smooth.
    pub fn milnor_raw(&self) -> Result<Option<ChowClass>> {
        match &self.kind {
            ScenarioKind::Hypersurface { degree } => Ok(Some(milnor_hypersurface(
                *degree,
                &self.singular_segre_class()?,
                &self.ambient,
            )?)),
            ScenarioKind::GlobalCi {
                smooth_degrees,
                last_degree,
            } => Ok(Some(milnor_ci_raw(
                smooth_degrees,
                *last_degree,
                &self.singular_segre_class()?,
                &self.ambient,
            )?)),
            ScenarioKind::Union2 { degrees, .. } => {
                let Some([y1, y2, _]) = constituent_data(self)? else {
                    return Ok(None);
                };
                if self.singular_segre.is_none() {
                    return Ok(None);
                }
                let s_y = self.singular_segre_class()?;
                let [d1, d2] = *degrees;
                let (smooth, last) = if y1.is_zero() {
                    (d1, d2)
                } else if y2.is_zero() {
                    (d2, d1)
                } else {
                    return Ok(None);
                };
                Ok(Some(milnor_ci_raw(&[smooth], last, &s_y, &self.ambient)?))
            }
        }
    }

    /// `M(X) = c_SM(X) - c_F(X)`.
    pub fn milnor_signed(&self) -> Result<ChowClass> {
        match &self.kind {
            ScenarioKind::Hypersurface { .. } => Ok(self.milnor_raw()?.expect("hypersurface")),
            ScenarioKind::GlobalCi {
                smooth_degrees,
                last_degree,
            } => milnor_signed(
                smooth_degrees,
                *last_degree,
                &self.singular_segre_class()?,
                &self.ambient,
            ),
            // c_F of the intersection M₁ ∩ M₂
            ScenarioKind::Union2 { .. } => self
                .csm()?
                .checked_sub(&fulton_ci(&self.degrees(), &self.ambient)?),
        }
    }

    pub fn euler(&self) -> Result<Rational> {
        Ok(euler_characteristic(&self.csm()?))
    }

    /// Recovers the singular Segre class from the Milnor class of a
    /// hypersurface scenario.
    pub fn invert_milnor(&self) -> Result<ChowClass> {
        match &self.kind {
            ScenarioKind::Hypersurface { degree } => {
                invert_milnor_to_segre(&self.milnor_signed()?, *degree, &self.ambient)
            }
            other => Err(Error::Unsupported(format!(
                "invert-milnor applies to hypersurface scenarios, not {}",
                other.name()
            ))),
        }
    }

    /// Every identity that applies to the scenario's data.
    pub fn check_identities(&self) -> Result<ClassReport> {
        let n = self.ambient.dim();
        let degrees = self.degrees();
        let (last, smooth) = degrees.split_last().expect("degrees are non-empty");
        let bundle = ci_bundle(smooth, *last, n)?;
        let line = LineBundle::new(n, i64::from(*last));
        let alpha = match &self.singular_segre {
            Some(_) => self.singular_segre_class()?,
            None => self.segre_x()?,
        };
        let mut report = ClassReport::new();
        report.insert("identity_2_1", ReportValue::Flag(check_identity_2_1(&bundle, &alpha)?));
        report.insert(
            "identity_2_2",
            ReportValue::Flag(check_identity_2_2(&bundle, &alpha, &line)?),
        );
        let s_last = segre_ci(&[*last], n)?;
        report.insert(
            "s_x_minus_y_binomial",
            ReportValue::Flag(
                s_x_minus_y_compact(&s_last, &alpha, &line)?
                    == s_x_minus_y_expanded(&s_last, &alpha, &line)?,
            ),
        );

        match &self.kind {
            ScenarioKind::Hypersurface { degree } => {
                let s_y = self.singular_segre_class()?;
                let reduced = milnor_ci_raw(&[], *degree, &s_y, &self.ambient)?;
                report.insert(
                    "codim_one_reduction",
                    ReportValue::Flag(reduced == self.milnor_signed()?),
                );
                report.insert(
                    "milnor_equals_csm_minus_fulton",
                    ReportValue::Flag(
                        self.milnor_signed()? == self.csm()?.checked_sub(&self.fulton_class()?)?,
                    ),
                );
                report.insert("invert_round_trip", ReportValue::Flag(self.invert_milnor()? == s_y));
            }
            ScenarioKind::GlobalCi { smooth_degrees, .. } => {
                if smooth_degrees.is_empty() {
                    let s_y = self.singular_segre_class()?;
                    report.insert(
                        "codim_one_reduction",
                        ReportValue::Flag(
                            self.milnor_signed()? == milnor_hypersurface(*last, &s_y, &self.ambient)?,
                        ),
                    );
                }
            }
            ScenarioKind::Union2 { degrees, .. } => {
                let [d1, d2] = *degrees;
                report.insert(
                    "residual_segre",
                    ReportValue::Flag(residual_segre_identity_check(
                        &self.segre_x()?,
                        &segre_ci(&[d1], n)?,
                        &segre_ci(&[d2], n)?,
                        &segre_ci(&[d1 + d2], n)?,
                        d1,
                        d2,
                    )?),
                );
                if let (Some([y1, y2, y_union]), Some(raw)) =
                    (constituent_data(self)?, self.milnor_raw()?)
                {
                    // codimension two: the signed class is the negated raw one
                    let from_union = -raw;
                    report.insert(
                        "codim2_difference",
                        ReportValue::Flag(codim2_difference_identity_check(
                            &y1,
                            &y2,
                            &y_union,
                            &self.segre_x()?,
                            d1,
                            d2,
                            &from_union,
                            &self.ambient,
                        )?),
                    );
                    report.insert(
                        "milnor_matches_inclusion_exclusion",
                        ReportValue::Flag(from_union == self.milnor_signed()?),
                    );
                }
            }
        }
        Ok(report)
    }
}

/// Runs one command against a scenario.
pub fn run_command(command: Command, scenario: &Scenario) -> Result<ClassReport> {
    let mut report = ClassReport::new();
    let report = match command {
        Command::Segre => {
            report.insert("segre_X", ReportValue::Class(scenario.segre_x()?));
            report.with_primary("segre_X")
        }
        Command::Fulton => {
            report.insert("fulton", ReportValue::Class(scenario.fulton_class()?));
            report.with_primary("fulton")
        }
        Command::Csm => {
            report.insert("csm", ReportValue::Class(scenario.csm()?));
            report.insert("sm_segre", ReportValue::Class(scenario.sm_segre()?));
            report.with_primary("csm")
        }
        Command::Milnor => {
            if let Some(raw) = scenario.milnor_raw()? {
                report.insert("milnor_raw", ReportValue::Class(raw));
            }
            report.insert("milnor_signed", ReportValue::Class(scenario.milnor_signed()?));
            report.with_primary("milnor_signed")
        }
        Command::Euler => {
            report.insert("euler", ReportValue::Number(scenario.euler()?));
            report.with_primary("euler")
        }
        Command::InvertMilnor => {
            report.insert("segre_Y", ReportValue::Class(scenario.invert_milnor()?));
            report.with_primary("segre_Y")
        }
        Command::CheckIdentities => scenario.check_identities()?,
    };
    Ok(report)
}

/// `invert-milnor` on an inline class.
pub fn invert_milnor_inline(milnor: &ChowClass, degree: u32) -> Result<ClassReport> {
    let ambient = crate::chow::AmbientSpace::projective(milnor.dim());
    let mut report = ClassReport::new();
    report.insert(
        "segre_Y",
        ReportValue::Class(invert_milnor_to_segre(milnor, degree, &ambient)?),
    );
    Ok(report.with_primary("segre_Y"))
}
