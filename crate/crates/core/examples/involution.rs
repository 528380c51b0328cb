//! The valley-marking involution on Dyck paths and its periodic
//! generalisation, with the regular simples they expose.

use nakayama::bijections::{lk, lk_periodic, reflected_path, reflected_periodic_path};
use nakayama::homology::HomProfile;
use nakayama::kupisch::KupischSeries;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = KupischSeries::linear(vec![2, 4, 3, 3, 5, 5, 5, 4, 3, 4, 3, 2, 3, 2, 1])?;
    let img = lk(&reflected_path(&k));
    let st = img.stats();
    let p = HomProfile::of(&k);
    println!("{k}");
    println!("  1-cuts of the image {:?} = 1-regular {:?}", st.one_cuts, p.reg1());
    println!("  2-hills of the image {:?} = 2-regular {:?}", st.hills_of(2), p.reg2());
    println!("  involution: {}", lk(&img) == reflected_path(&k));

    let c = KupischSeries::cyclic(vec![3, 3, 2])?;
    let q = reflected_periodic_path(&c);
    let qi = lk_periodic(&q)?;
    println!("{c}: periodic image {qi}, back {}", lk_periodic(&qi)? == q);
    Ok(())
}
