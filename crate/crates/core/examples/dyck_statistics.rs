//! Local statistics of a Dyck path and of a periodic Dyck path.

use nakayama::dyck::{DyckPath, PeriodicDyckPath};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = DyckPath::from_area(vec![3, 2, 4, 3, 5, 5, 5, 4, 3, 3, 4, 3, 2, 2, 1])?;
    let st = d.stats();
    println!("path {d}");
    println!("  peaks {:?}", st.peaks);
    println!("  valleys {:?}", st.valleys);
    println!("  returns {:?}, 1-cuts {:?}, 2-hills {:?}", st.returns, st.one_cuts, st.hills_of(2));
    println!("  bounce parts {:?}", d.bounce_parts());
    let p = PeriodicDyckPath::from_area(vec![4, 3, 2])?;
    let ps = p.stats();
    println!("periodic path {p}: shift {}, rectangles {:?}, in P {}, in H {}", p.shift(), ps.rectangles, p.in_dyck_p(), p.in_dyck_h());
    Ok(())
}
