//! Build `𝔤 = 𝔨 + 𝔪` from the highest root, pick `δ`, and report the
//! dimensions of the submanifold model.
//!
//! `cargo run --release --example wolf_space -- EVI`

use wolfspace::catalog::{SpaceSpec, DEFAULT_MAX_RANK};
use wolfspace::chevalley::ChevalleyAlgebra;
use wolfspace::root_system::RootSystem;
use wolfspace::wolf::{SubmanifoldModel, WolfDecomposition};

fn main() -> wolfspace::error::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "SU(5)".into());
    let spec = SpaceSpec::parse(&name, DEFAULT_MAX_RANK)?;
    let wd = WolfDecomposition::new(ChevalleyAlgebra::new(RootSystem::new(spec.root_type)?)?)?;

    println!("{} = {}/K, root system {}", spec.name(), spec.group(), spec.root_type);
    println!("β = {}", wd.beta());
    println!("dim k = {}, dim m = {}, dim h = {}", wd.k().dim(), wd.m().dim(), wd.h().dim());

    let (quat, c) = wd.verify_quaternionic()?;
    println!("quaternionic structure on m: {} (c = {:?})", quat.holds, c.map(|c| c.to_string()));

    let delta = wd.choose_delta()?;
    let model = SubmanifoldModel::build(&wd, &delta)?;
    let d = model.dims(&wd);
    println!("δ = {delta}");
    println!("dim N = {}, dim H(p) = {}, dim K(p) = {}", d.dim_N, d.dim_Hp, d.dim_Kp);
    println!("Δ+ = {:?}", model.delta_plus.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("Δ- = {:?}", model.delta_minus.iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(())
}
