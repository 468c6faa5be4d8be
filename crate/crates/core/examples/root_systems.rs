//! Enumerate a root system and look at its highest-root grading.
//!
//! `cargo run --example root_systems -- F4`

use wolfspace::root_system::{RootSystem, RootSystemType};

fn main() -> wolfspace::error::Result<()> {
    let ty: RootSystemType = std::env::args().nth(1).as_deref().unwrap_or("G2").parse()?;
    let rs = RootSystem::new(ty)?;

    println!("{ty}: rank {}, {} roots", rs.rank(), rs.roots().len());
    println!("Cartan matrix:");
    for row in rs.cartan_matrix() {
        println!("  {row:?}");
    }

    let beta = rs.highest_root();
    println!("highest root β = {beta} (height {})", beta.height());
    for n in -2..=2 {
        let level = rs.level_set(&beta, n)?;
        println!("  level {n:>2}: {} roots", level.len());
    }

    println!("positive roots, in order:");
    for r in rs.positive_roots() {
        let len = if rs.is_long(r) { "long" } else { "short" };
        println!("  {r:<16} {len}");
    }
    Ok(())
}
