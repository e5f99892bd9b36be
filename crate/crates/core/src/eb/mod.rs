//! The Erdős-Burgess constant `I(S_R)` of the multiplicative semigroup of a
//! finite commutative ring.
//!
//! The lower bound `D(U(R)) + Σ_M (Ind(M) - 1)` is realized by an explicit
//! idempotent-product-free sequence ([`construct_extremal`]), the exact value
//! comes from exhaustive search ([`exact_eb`]), and the two equality cases
//! (local rings, all indices one) have direct certificates that any longer
//! sequence contains an idempotent product.

mod certificates;
mod construct;
mod dedekind;
mod exact;
mod report;

pub use certificates::{
    local_case_certificate, squarefree_case_certificate, LocalBranch, LocalCertificate,
    SquarefreeCertificate,
};
pub use construct::{construct_extremal, ConstructionTrace, DepthCertificate, IdealStep};
pub use dedekind::{
    dedekind_crosscheck_int, dedekind_crosscheck_poly, factor_integer, CoincidenceRecord,
    PrimeComponent,
};
pub use exact::{exact_eb, ExactEb, EXACT_SEARCH_CAP};
pub use report::{report, EqualityCase, ExactMode, InvariantReport, MaximalIdealSummary};

use crate::davenport::DavenportOptions;
use crate::search::Budget;

#[derive(Debug, Clone, Copy)]
pub struct EbOptions {
    /// Largest ring order searched exactly; `None` lifts the cap.
    pub exact_cap: Option<usize>,
    pub budget: Budget,
    pub parallel: bool,
    pub davenport: DavenportOptions,
}

impl Default for EbOptions {
    fn default() -> Self {
        EbOptions {
            exact_cap: Some(EXACT_SEARCH_CAP),
            budget: Budget::default(),
            parallel: false,
            davenport: DavenportOptions::default(),
        }
    }
}

impl EbOptions {
    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self.davenport.budget = budget;
        self
    }

    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self.davenport.parallel = parallel;
        self
    }
}
