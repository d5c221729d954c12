//! Scalars: the Laurent ring `Z[v, v^-1]` with `v^2 = q`, and its fraction field.

mod fraction;
mod laurent;

pub use fraction::ScalarFraction;
pub use laurent::LaurentScalar;
