//! Figure-derived fixture generators with frozen rational coordinates.

use super::{ConstructionCertificate, GenError};

/// Role tags for the twin-peaks gadget vertices.
#[derive(Debug, Clone)]
pub struct TwinPeaksRoles {
    pub top_pair: [usize; 2],
    pub squares: [usize; 8],
    pub bottom_pair: [usize; 2],
}

pub fn gen_polygon_tight(_k: usize) -> Result<ConstructionCertificate, GenError> {
    Err(GenError::Realization("not yet realized".into()))
}

pub fn gen_twin_peaks() -> Result<(ConstructionCertificate, TwinPeaksRoles), GenError> {
    Err(GenError::Realization("not yet realized".into()))
}
