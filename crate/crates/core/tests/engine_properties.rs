use std::sync::OnceLock;

use proptest::prelude::*;
use wolfspace::chevalley::{ChevalleyAlgebra, StructureConstants};
use wolfspace::linalg::BilinearForm;
use wolfspace::root_system::RootSystem;
use wolfspace::scalar::{rat, Rational};
use wolfspace::wolf::WolfDecomposition;

const TYPES: [&str; 8] = ["A3", "B3", "C3", "D4", "G2", "F4", "B4", "E6"];

struct Fixture {
    rs: RootSystem,
    sc: StructureConstants,
    wd: WolfDecomposition,
}

fn fixtures() -> &'static Vec<Fixture> {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        TYPES
            .iter()
            .map(|t| {
                let rs = RootSystem::new(t.parse().unwrap()).unwrap();
                let sc = StructureConstants::build(&rs).unwrap();
                let wd = WolfDecomposition::new(ChevalleyAlgebra::new(rs.clone()).unwrap()).unwrap();
                Fixture { rs, sc, wd }
            })
            .collect()
    })
}

fn small_vector(dim: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(-3i64..=3, dim).prop_map(|v| v.into_iter().map(rat).collect())
}

/// A fixture index with three compact vectors of its dimension.
fn compact_triple() -> impl Strategy<Value = (usize, Vec<Rational>, Vec<Rational>, Vec<Rational>)> {
    (0..5usize).prop_flat_map(|t| {
        let d = fixtures()[t].wd.compact_basis().dim();
        (Just(t), small_vector(d), small_vector(d), small_vector(d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_permute_roots(t in 0..TYPES.len(), a in any::<prop::sample::Index>(), g in any::<prop::sample::Index>()) {
        let rs = &fixtures()[t].rs;
        let alpha = &rs.roots()[a.index(rs.roots().len())];
        let gamma = &rs.roots()[g.index(rs.roots().len())];
        let r = rs.reflect(alpha, gamma).unwrap();
        prop_assert!(rs.contains(&r));
        prop_assert_eq!(rs.reflect(alpha, &r).unwrap(), gamma.clone());
    }

    #[test]
    fn root_strings_match_cartan_integers(t in 0..TYPES.len(), a in any::<prop::sample::Index>(), g in any::<prop::sample::Index>()) {
        let rs = &fixtures()[t].rs;
        let alpha = &rs.roots()[a.index(rs.roots().len())];
        let gamma = &rs.roots()[g.index(rs.roots().len())];
        prop_assume!(alpha != gamma && *alpha != -gamma);
        let (p, q) = rs.root_string(alpha, gamma).unwrap();
        prop_assert_eq!(p as i64 - q as i64, rs.cartan_integer(gamma, alpha).unwrap() as i64);
        prop_assert!(p + q <= 3);
    }

    #[test]
    fn structure_constant_magnitudes_and_signs(t in 0..TYPES.len(), a in any::<prop::sample::Index>(), g in any::<prop::sample::Index>()) {
        let Fixture { rs, sc, .. } = &fixtures()[t];
        let alpha = &rs.roots()[a.index(rs.roots().len())];
        let gamma = &rs.roots()[g.index(rs.roots().len())];
        prop_assume!(alpha != gamma && *alpha != -gamma);
        let n = sc.get(rs, alpha, gamma).unwrap();
        prop_assert_eq!(n.is_some(), rs.contains(&(alpha + gamma)));
        if let Some(n) = n {
            let (p, _) = rs.root_string(alpha, gamma).unwrap();
            prop_assert_eq!(n.unsigned_abs(), p + 1);
            prop_assert_eq!(sc.get(rs, gamma, alpha).unwrap(), Some(-n));
            prop_assert_eq!(sc.get(rs, &-alpha, &-gamma).unwrap(), Some(-n));
        }
    }

    #[test]
    fn compact_bracket_is_a_lie_bracket((t, x, y, z) in compact_triple()) {
        let cb = fixtures()[t].wd.compact_basis();
        let xy = cb.bracket(&x, &y).unwrap();
        let yx = cb.bracket(&y, &x).unwrap();
        prop_assert!(xy.iter().zip(&yx).all(|(a, b)| *a == -*b));
        let jac = |a: &[Rational], b: &[Rational], c: &[Rational]| cb.bracket(&cb.bracket(a, b).unwrap(), c).unwrap();
        let (j1, j2, j3) = (jac(&x, &y, &z), jac(&y, &z, &x), jac(&z, &x, &y));
        prop_assert!((0..j1.len()).all(|i| (j1[i] + j2[i] + j3[i]) == rat(0)));
    }

    #[test]
    fn compact_form_is_invariant_and_definite((t, x, y, z) in compact_triple()) {
        let cb = fixtures()[t].wd.compact_basis();
        let f = cb.form();
        let lhs = f.eval(&cb.bracket(&x, &y).unwrap(), &z) + f.eval(&y, &cb.bracket(&x, &z).unwrap());
        prop_assert_eq!(lhs, rat(0));
        if x.iter().any(|c| *c != rat(0)) {
            prop_assert!(f.eval(&x, &x) > rat(0));
        }
    }

    #[test]
    fn i_a_beta_is_a_complex_structure_on_m(t in 0..TYPES.len(), seed in prop::collection::vec(-3i64..=3, 64)) {
        let wd = &fixtures()[t].wd;
        let basis = wd.m().basis();
        let mut x = vec![rat(0); wd.compact_basis().dim()];
        for (b, c) in basis.iter().zip(seed.iter().cycle()) {
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += *bi * rat(*c);
            }
        }
        let ia = wd.i_a_beta();
        let twice = wd.bracket(ia, &wd.bracket(ia, &x).unwrap()).unwrap();
        prop_assert!(twice.iter().zip(&x).all(|(a, b)| *a == -*b));
    }
}

#[test]
fn exhaustive_jacobi_on_rank_at_most_four() {
    for t in ["A1", "A2", "A4", "B2", "C2", "C4", "D3", "G2", "F4"] {
        let alg = ChevalleyAlgebra::new(RootSystem::new(t.parse().unwrap()).unwrap()).unwrap();
        let r = alg.verify_jacobi_exhaustive().unwrap();
        assert!(r.holds(), "{t}: {:?}", r.failure);
        assert!(alg.verify_antisymmetry().unwrap().holds(), "{t}");
    }
}

#[test]
fn sampled_jacobi_is_reproducible() {
    let alg = ChevalleyAlgebra::new(RootSystem::new("E7".parse().unwrap()).unwrap()).unwrap();
    let a = alg.verify_jacobi_sampled(2_000, 11).unwrap();
    let b = alg.verify_jacobi_sampled(2_000, 11).unwrap();
    assert_eq!(a, b);
    assert!(a.holds());
}
