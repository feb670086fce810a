use serde_json::json;
use thiserror::Error;

use super::{verify_representation, Verdict, VerifyError, VerifyOptions};
use crate::constructions::{BiUniformParams, ConstructionError, Method, Provenance, Representation};
use crate::linalg;

#[derive(Debug, Error)]
pub enum DualError {
    #[error("input does not represent its parameters")]
    InvalidInput(Box<Verdict>),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DualOptions {
    /// Skip verifying the input.
    pub skip_verification: bool,
    pub verify: VerifyOptions,
}

pub fn dual_params(params: &BiUniformParams) -> BiUniformParams {
    params.dual()
}

/// The rows of a kernel basis of the matrix represent the dual matroid on
/// the same columns.
pub fn dual_representation(rep: &Representation, options: &DualOptions) -> Result<Representation, DualError> {
    if !options.skip_verification {
        let verdict = verify_representation(rep, &options.verify)?;
        if !verdict.ok {
            return Err(DualError::InvalidInput(Box::new(verdict)));
        }
    }
    let kernel = linalg::kernel_basis(rep.field(), rep.matrix());
    let provenance = Provenance::new(
        Method::Dual,
        json!({ "source": rep.provenance() }),
    );
    Ok(Representation::new(rep.field().clone(), dual_params(rep.params()), kernel, provenance)?)
}
