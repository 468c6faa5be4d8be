//! Every structural check for one space, with witnesses for failures, plus
//! a deliberately wrong choice of `δ` to show what a failure looks like.

use wolfspace::chevalley::ChevalleyAlgebra;
use wolfspace::root_system::{RootSystem, RootSystemType};
use wolfspace::wolf::{full_report, SubmanifoldModel, WolfDecomposition};

fn main() -> wolfspace::error::Result<()> {
    let wd = WolfDecomposition::new(ChevalleyAlgebra::new(RootSystem::new(RootSystemType::b(4)?)?)?)?;
    let report = full_report("G4(R^9)", &wd)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));

    // a short root at level 1 is not an admissible δ
    let rs = wd.root_system();
    let short = wd
        .level(1)
        .into_iter()
        .find(|g| !rs.is_long(g))
        .expect("B4 has short roots at level 1");
    let bad = SubmanifoldModel::build_unchecked(&wd, &short)?;
    for (name, check) in bad.lemma_checks(&wd)? {
        println!("short δ = {short}: {name} -> {}", check.holds);
        if let Some(w) = check.witness {
            println!("    {} | {} | {}", w.element, w.bracket, w.reason);
        }
    }
    Ok(())
}
