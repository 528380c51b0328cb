//! The zeta map and its labelling: peaks and 1-rises of a path become
//! simples of projective dimension one and 1-regular simples of the image.

use nakayama::bijections::{zeta, zeta_labelling};
use nakayama::dyck::DyckPath;
use nakayama::homology::HomProfile;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = DyckPath::from_coarea(&[1, 2, 2, 3, 4, 3, 4, 5, 6, 6, 6, 6, 7, 5, 3])?;
    let z = zeta(&d);
    let labels = zeta_labelling(&d);
    println!("zeta image area {:?}", z.area());
    println!("labels k(1..n) {labels:?}");
    let p = HomProfile::of(&z.to_kupisch());
    let rises: Vec<usize> = d.stats().one_rises.iter().map(|r| labels[r.1 as usize - 1]).collect();
    println!("1-rises relabelled {rises:?}; 1-regular simples {:?}", p.reg1());
    Ok(())
}
