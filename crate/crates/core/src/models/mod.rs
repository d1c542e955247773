//! Klein-Gordon plane waves and the hydrogen-type ground state.

pub mod cubic;
pub mod hydrogen;
pub mod kg;

pub use cubic::{schrodinger_cubic_roots, CubicRoots};
pub use hydrogen::{
    derived_first_order_coefficients, eigenfunction_residual, first_order_coefficients,
    numeric_first_order_coefficients, solve_ground_state, GroundState, PhysicalConstants,
};
pub use kg::{kg_dispersion_residual, kg_energy_branches, plane_wave_check, PlaneWaveSolution};
