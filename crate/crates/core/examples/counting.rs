//! Closed counting formulas against brute-force enumeration.

use nakayama::counts::CountContext;
use nakayama::formulas::Formula;

fn main() {
    let ctx = CountContext::new(7, 7);
    for f in Formula::ALL {
        let rows = ctx.rows(f);
        let ok = rows.iter().all(|r| r.matches());
        let sample: Vec<String> = rows.iter().take(6).map(|r| format!("({},{})={}", r.n, r.ell, r.brute)).collect();
        println!("{:<22} {} {}", f.name(), if ok { "ok" } else { "MISMATCH" }, sample.join(" "));
    }
}
