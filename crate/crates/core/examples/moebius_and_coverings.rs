//! Möbius maps on the sphere, their classification, and the coverings of the
//! annulus and the punctured disk.

use wickstar::sphere::{
    annulus_deck_factor, covering_disk_to_annulus, covering_disk_to_punctured, covering_half_to_annulus,
    DeckGroup, MoebiusMap, SpherePoint,
};
use wickstar::{c64, Result};

fn main() -> Result<()> {
    let maps = [
        ("z -> 2z", MoebiusMap::scaling(c64(2.0, 0.0))?),
        ("z -> z + 1", MoebiusMap::translation(c64(1.0, 0.0))),
        ("rotation by pi/3", MoebiusMap::rotation(std::f64::consts::PI / 3.0)),
    ];
    for (name, m) in &maps {
        let fixed: Vec<String> = m.fixed_points().iter().map(|p| p.to_string()).collect();
        println!("{name:<18} {:?}, fixed points {}", m.classify(), fixed.join(", "));
    }

    let inf = SpherePoint::<wickstar::C64>::infinity();
    println!("Cayley map sends oo to {}", MoebiusMap::cayley().apply(&inf));

    let r = 2.0;
    let z = c64(0.3, -0.2);
    println!("pi_R({z}) = {:.6}", covering_disk_to_annulus(r, z)?);
    println!("pi_0({z}) = {:.6}", covering_disk_to_punctured(z)?);

    let c = annulus_deck_factor(r);
    let x = c64(0.4, 1.1);
    let moved = covering_half_to_annulus(r, c * x)? - covering_half_to_annulus(r, x)?;
    println!("deck factor c = {c:.4}, |pi(cx) - pi(x)| = {:.1e}", moved.norm());

    let deck = DeckGroup::for_annulus(r)?;
    println!("deck generator classifies as {:?}", deck.generator().classify());
    Ok(())
}
