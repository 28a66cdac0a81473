//! The fiber and deformation cases and their verification drivers.

mod certificate;
mod deformation;
mod fiber;
pub mod fixtures;
mod presentation;

pub use certificate::{Certificate, Check, CheckRunner, Status};
pub use deformation::{
    full_support_ideal, half_rho, split_locus, universal_presentation, verify_deformation, DeformationCase,
    DeformationOptions, HALF_INVARIANTS,
};
pub use fiber::{
    build_git_case, classify, sl2_samples, verify_fiber, weight_table, xi_normal_form_ring, zeta_slice_values,
    Classification, FiberOutcome, FiberPresentation, GitCase, Symmetry, TorsionType, XI_NORMAL_FORMS, XI_WEIGHT_TABLE,
    ZETA_SLICE_COMPUTED, ZETA_SLICE_PRINTED,
};
pub use presentation::{
    commutator_syzygies, support_ideal, ModuleElement, ModulePresentation, Operator, PresentationBlock,
};

use crate::error::{Error, Result};

/// Any case, addressed as `fiber:<type>` or `deformation:<case>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseId {
    Deformation(DeformationCase),
    Fiber(TorsionType),
}

impl CaseId {
    /// Every case, sorted by id.
    pub fn all() -> Vec<CaseId> {
        let mut v: Vec<CaseId> = DeformationCase::ALL
            .into_iter()
            .map(CaseId::Deformation)
            .chain(TorsionType::ALL.into_iter().map(CaseId::Fiber))
            .collect();
        v.sort_by_key(|c| c.id());
        v
    }

    pub fn id(self) -> String {
        match self {
            CaseId::Fiber(t) => t.case_id(),
            CaseId::Deformation(d) => d.case_id(),
        }
    }

    pub fn parse(s: &str) -> Result<CaseId> {
        CaseId::all().into_iter().find(|c| c.id() == s).ok_or_else(|| Error::UnknownCase(s.to_string()))
    }
}

/// Runs one case and returns its certificate.
pub fn verify_case(case: CaseId, opts: DeformationOptions) -> Result<Certificate> {
    match case {
        CaseId::Fiber(t) => Ok(verify_fiber(t)?.certificate),
        CaseId::Deformation(d) => verify_deformation(d, opts),
    }
}
