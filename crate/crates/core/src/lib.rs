//! Bound states of a quantum particle in a circularly bent rectangular
//! waveguide.
//!
//! Bending a guide of square cross-section `a` onto an arc of radius `R`
//! adds an attractive term -kappa^2/(4 (1 - kappa xi)^2) to the transverse
//! Schrodinger problem (kappa = 1/R), which binds states below the
//! straight-guide threshold, squeezes the spacing of J0 zeros below pi,
//! shifts the interference phase of a wave sent around the bend, and exerts
//! a mean force kappa^3/2 pulling the particle toward the inner wall.
//!
//! The crate computes:
//!
//! * the closed-form spectrum built from J0 zero differences, and the exact
//!   spectrum from J0/Y0 cross-product quantization ([`spectrum`]);
//! * effective and Bohm potentials across the width ([`geometry`],
//!   [`observables`]);
//! * interference momentum and phase shifts in published, corrected, and
//!   unexpanded variants, plus the anticentrifugal force ([`observables`]);
//! * an independent finite-difference eigensolver used to validate every
//!   closed-form number ([`oracle`]).
//!
//! All internal quantities use spectral units hbar^2/(2M) = 1, where
//! energies carry dimension 1/length^2; [`UnitSystem`] converts at the
//! boundary. The cylinder functions and all root finding are self-contained
//! ([`bessel`]), so the oracle shares no numerical machinery with the
//! formulas it checks.

pub mod bessel;
pub mod error;
pub mod geometry;
pub mod observables;
pub mod oracle;
pub mod quadrature;
pub mod spectrum;

pub use error::{Error, Result};
pub use geometry::{
    effective_profile, xi_grid, ModeIndex, PotentialProfile, ProfileKind, UnitSystem,
    WaveguideGeometry,
};
pub use observables::{
    anticentrifugal_force, bohm_barrier, bohm_coefficients, bohm_potential, bohm_profile,
    min_phase_shift, momentum_shift, phase_shift, BohmCoefficients, PhaseShiftResult, ShiftVariant,
};
pub use oracle::{
    fd_eigenvalues, fd_eigenvalues_extrapolated, log_log_slope, richardson_extrapolate,
    sturm_count, FdGrid, TridiagonalOperator,
};
pub use spectrum::{
    closed_form_solution, energy_closed_form, normalize, radial_wavefunction_closed_form,
    solve_exact_modes, zero_spacing_deficit, RadialSolution, SolutionMethod, SpectrumResult,
};
