//! The exceptional algebra as 7×7 skew matrices: closure, root data, the
//! bracket tables and the second fundamental form of the orbit through `Z_δ`.

use wolfspace::g2_model::{
    corrected_eigen_identities, nine_bracket_table, second_fundamental_form, verify_g2_closure, G2Decomposition,
    VFamily,
};

fn main() -> wolfspace::error::Result<()> {
    let closure = verify_g2_closure();
    println!("closed: {} (dim {}, {} pairs)", closure.holds, closure.dim, closure.pairs_checked);

    println!("root vectors of V1(λ,μ,ν):");
    for e in corrected_eigen_identities() {
        println!("  {}  {}", e.describe(), e.holds());
    }

    println!("brackets:");
    for g in nine_bracket_table() {
        println!("  [{}, {}] = {}", g.x, g.y, g.computed);
    }

    let dec = G2Decomposition::new();
    let x = VFamily::int(2, 2, -1, -1).matrix();
    let y = VFamily::int(3, 2, -1, -1).matrix();
    let h = second_fundamental_form(&dec, &x, &y)?;
    println!("h(V2(2,-1,-1), V3(2,-1,-1)) = {}", h.describe());
    Ok(())
}
