//! The map φ through the cycle diagram: 1-rises and 2-hills of the image
//! are the regular simples.

use nakayama::bijections::{cycle_diagram, phi, reflected_path};
use nakayama::homology::HomProfile;
use nakayama::kupisch::KupischSeries;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = KupischSeries::linear(vec![2, 4, 3, 3, 5, 5, 5, 4, 3, 4, 3, 2, 3, 2, 1])?;
    let d = reflected_path(&k);
    let diagram = cycle_diagram(&d);
    let img = phi(&d);
    let st = img.stats();
    let rises: Vec<isize> = st.one_rises.iter().map(|r| r.0).collect();
    let p = HomProfile::of(&k);
    println!("alpha {:?}, 1-cuts {}", diagram.alpha, diagram.one_cuts);
    println!("phi image {img}");
    println!("  1-rises {rises:?} vs 1-regular {:?}", p.reg1());
    println!("  2-hills {:?} vs 2-regular {:?}", st.hills_of(2), p.reg2());
    Ok(())
}
