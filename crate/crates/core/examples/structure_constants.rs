//! Chevalley structure constants and root strings.
//!
//! `cargo run --example structure_constants -- B2`

use wolfspace::chevalley::StructureConstants;
use wolfspace::root_system::RootSystem;

fn main() -> wolfspace::error::Result<()> {
    let ty = std::env::args().nth(1).unwrap_or_else(|| "B2".into()).parse()?;
    let rs = RootSystem::new(ty)?;
    let sc = StructureConstants::build(&rs)?;

    let pos = rs.positive_roots();
    for (i, a) in pos.iter().enumerate() {
        for b in &pos[i + 1..] {
            if let Some(n) = sc.get(&rs, a, b)? {
                let (p, _) = rs.root_string(a, b)?;
                println!("N[{a}, {b}] = {n:>2}   (p = {p})");
            }
        }
    }
    println!("{} nonzero constants in total", sc.entries(&rs).len());
    Ok(())
}
