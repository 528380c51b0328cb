//! Regenerates the small reference tables and compares them with the
//! golden files.

use nakayama::tables::{reproduce_tables, verify_tables};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (linear, cyclic) = reproduce_tables()?;
    print!("{linear}");
    print!("{cyclic}");
    verify_tables()?;
    println!("golden files match");
    Ok(())
}
