//! The compact real form: brackets of `iA_j`, `Z_γ`, `W_γ` and the
//! positive definite form `−B`.

use wolfspace::chevalley::ChevalleyAlgebra;
use wolfspace::linalg::BilinearForm;
use wolfspace::root_system::{RootSystem, RootSystemType};

fn main() -> wolfspace::error::Result<()> {
    let alg = ChevalleyAlgebra::new(RootSystem::new(RootSystemType::a(2)?)?)?;
    let cb = alg.compact_basis();
    let form = cb.form();

    println!("su(3): {} compact generators", cb.dim());
    for i in 0..cb.dim() {
        let e = cb.unit(i);
        println!("  {:<10} <x, x> = {}", cb.name(i), wolfspace::scalar::fmt_rational(&form.eval(&e, &e)));
    }

    for (i, j) in [(2, 3), (0, 2), (2, 4)] {
        let br = cb.bracket(&cb.unit(i), &cb.unit(j))?;
        println!("[{}, {}] = {}", cb.name(i), cb.name(j), cb.format(&br));
    }

    let r = alg.verify_tau_closure()?;
    println!("closed under τ: {} ({} pairs)", r.holds(), r.cases);
    Ok(())
}
