//! Exact verification tools for Fano 3-folds cut out of weighted key varieties.

pub mod dataio;
pub mod hilbert;
pub mod ideals;
pub mod linalg;
pub mod pipeline;
pub mod poly;
pub mod singularity;
pub mod wps;
