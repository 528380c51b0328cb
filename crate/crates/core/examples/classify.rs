//! Homological profile of one algebra: projective dimensions, Ext into the
//! regular module and regularity of every simple.

use nakayama::homology::HomProfile;
use nakayama::kupisch::KupischSeries;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in [KupischSeries::linear(vec![4, 3, 2, 2, 1])?, KupischSeries::cyclic(vec![6, 5, 4, 3, 2])?] {
        let p = HomProfile::of(&k);
        println!("{k} ({}): global dimension {}", k.kind(), p.global_dimension);
        for s in &p.simples {
            println!("  S_{}: pdim {}, Ext {:?}, 1-regular {}, 2-regular {}", s.index, s.pdim, s.ext_dims, s.regular1, s.regular2);
        }
        println!("  exact structures on projectives: {}", p.exact_structures);
    }
    Ok(())
}
