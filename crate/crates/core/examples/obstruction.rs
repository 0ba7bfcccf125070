//! Looking for a linear map between the annulus and punctured-disk algebras
//! that respects the product for every hbar at once.

use wickstar::rigidity::{default_hbar_grid, obstruction_check};
use wickstar::star::Hbar;
use wickstar::{c64, Result};

fn main() -> Result<()> {
    let grid = default_hbar_grid();
    for d in 0..=3 {
        let r = obstruction_check(2.0, &grid, d)?;
        println!(
            "degree {d}: {:?}, alpha = {:.2e}, beta = {:.6}, margin {:?}",
            r.verdict,
            r.alpha.norm(),
            r.beta,
            r.margin
        );
    }
    let r = obstruction_check(2.0, &grid, 3)?;
    println!("{}", r.note);

    match Hbar::new(c64(-0.05, 0.0)) {
        Ok(_) => println!("-0.05 accepted"),
        Err(e) => println!("-0.05 cannot be part of the grid: {e}"),
    }
    Ok(())
}
