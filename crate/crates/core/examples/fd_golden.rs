//! Prints the finite-difference oracle next to the closed-form and exact
//! cross-product energies for a representative bend, plus the straight-guide
//! calibration. Run with:
//!
//! ```text
//! cargo run --release -p bentwave --example fd_golden
//! ```

use bentwave::oracle::{fd_eigenvalues, fd_eigenvalues_extrapolated, FdGrid};
use bentwave::{energy_closed_form, solve_exact_modes, ModeIndex, WaveguideGeometry};
use std::f64::consts::PI;

fn main() {
    let geom = WaveguideGeometry::new(2.0, 1.0).unwrap();
    let n = 1;
    let count = 3;

    let grid = FdGrid::new(8001).unwrap();
    let fd = fd_eigenvalues(&geom, n, grid, count).unwrap();
    let fd_x = fd_eigenvalues_extrapolated(&geom, n, grid, count).unwrap();
    let exact = solve_exact_modes(&geom, n, count as u32).unwrap();

    println!("bend R = 2, a = 1, n = 1 (spectral units)");
    println!(
        "{:>2} {:>22} {:>22} {:>22} {:>22} {:>10}",
        "k", "closed form", "exact", "fd N=8001", "fd extrapolated", "rel diff"
    );
    for (k, sol) in exact.iter().enumerate() {
        let closed =
            energy_closed_form(&geom, ModeIndex::new(n, 1, (k + 1) as u32).unwrap()).unwrap();
        let rel = ((sol.energy - fd_x[k]) / sol.energy).abs();
        println!(
            "{:>2} {:>22.15e} {:>22.15e} {:>22.15e} {:>22.15e} {:>10.2e}",
            k + 1,
            closed,
            sol.energy,
            fd[k],
            fd_x[k],
            rel
        );
    }

    let straight = WaveguideGeometry::straight(1.0).unwrap();
    let box_e = fd_eigenvalues_extrapolated(&straight, 0, grid, 2).unwrap();
    println!("\nstraight-guide calibration (exact pi^2, 4 pi^2):");
    println!(
        "  E1 = {:.15e}  rel err {:.2e}",
        box_e[0],
        ((box_e[0] - PI * PI) / (PI * PI)).abs()
    );
    println!(
        "  E2 = {:.15e}  rel err {:.2e}",
        box_e[1],
        ((box_e[1] - 4.0 * PI * PI) / (4.0 * PI * PI)).abs()
    );
}
