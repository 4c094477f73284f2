//! Axial-type solutions: the scalar algebra generated by `β`, power series in
//! `ν = |z̲|²` with exact exponents, and the Hermitian Vekua systems.

mod beta;
mod series;
mod solution;

pub use beta::{beta_reduce, BetaPoly};
pub use series::{NuSeries, SeriesTermWire};
pub use solution::{
    generalized_powers, power_coefficients, power_data, vekua_solve_plain, vekua_solve_z0barpower,
    vekua_solve_z0power, AxialKind, AxialSolution, AxialWire, PlainData, Z0Data, Z0barData,
};
