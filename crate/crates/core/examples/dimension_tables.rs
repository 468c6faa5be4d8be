//! Dimensions of `M`, `N`, `H(p)` and `K(p)` across the catalog, computed in
//! parallel.
//!
//! `cargo run --release --example dimension_tables`

use rayon::prelude::*;
use wolfspace::cli::{table_row, table_spaces};

fn main() -> wolfspace::error::Result<()> {
    let rows = table_spaces().par_iter().map(table_row).collect::<Result<Vec<_>, _>>()?;
    let show = |x: Option<usize>| x.map_or("-".into(), |v| v.to_string());
    println!("{:<10} {:>6} {:>6} {:>9} {:>9}", "space", "dim M", "dim N", "dim H(p)", "dim K(p)");
    for r in &rows {
        println!("{:<10} {:>6} {:>6} {:>9} {:>9}", r.space, r.dim_m, show(r.dim_n), show(r.dim_hp), show(r.dim_kp));
    }
    println!("all match: {}", rows.iter().all(|r| r.matches));
    Ok(())
}
