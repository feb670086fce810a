//! Ground-truth checks for bi-uniform representations: exhaustive
//! verification, the necessary conditions on the field size, and duality.

mod dual;
mod feasibility;
mod oracle;
mod verify;

pub use dual::{dual_params, dual_representation, DualError, DualOptions};
pub use feasibility::{check_feasibility, Feasibility, FeasibilityVerdict, Reason};
pub use oracle::{full_independence_oracle, ORACLE_MAX_ELEMENTS};
pub use verify::{verify_representation, Verdict, VerifyError, VerifyOptions, Witness};
