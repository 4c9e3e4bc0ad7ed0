pub mod bessel;
pub mod linalg;
pub mod quadrature;
pub mod specdens;
pub mod units;

pub use units::CM_FS;
