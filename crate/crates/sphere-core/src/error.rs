use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum GeomError {
    #[error("point is off the unit sphere (norm {norm})")]
    OffSphere { norm: f64 },

    #[error("cannot project the zero vector onto the sphere")]
    ZeroVector,

    #[error("rotation part is not antisymmetric (defect {max_defect})")]
    NotAntisymmetric { max_defect: f64 },

    #[error("quadrature degree {degree} exceeds the node budget (max {max})")]
    DegreeTooLarge { degree: u32, max: u32 },

    #[error("density must be positive, found {value} at node {node}")]
    NonPositiveDensity { value: f64, node: usize },

    #[error("non-finite value encountered in {context}")]
    NonFinite { context: &'static str },
}
