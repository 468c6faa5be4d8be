use proptest::prelude::*;
use wolfspace::g2_model::{model_form, second_fundamental_form, G2Decomposition, So7Matrix, VFamily};
use wolfspace::scalar::rat;

fn g2_element() -> impl Strategy<Value = So7Matrix> {
    prop::collection::vec(-4i64..=4, 14).prop_map(|c| {
        let dec = G2Decomposition::new();
        dec.g2_basis.iter().zip(c).fold(So7Matrix::zero(), |acc, (b, k)| acc + b.scale(rat(k)))
    })
}

fn h_element() -> impl Strategy<Value = So7Matrix> {
    prop::collection::vec(-5i64..=5, 3).prop_map(|c| {
        (1..=3).zip(c).fold(So7Matrix::zero(), |acc, (i, k)| acc + VFamily::int(i, 2, -1, -1).matrix().scale(rat(k)))
    })
}

proptest! {
    #[test]
    fn form_formula_on_random_coefficients(i in 1usize..=7, a in prop::array::uniform3(-20i64..=20), b in prop::array::uniform3(-20i64..=20)) {
        let x = VFamily::int(i, a[0], a[1], a[2]).matrix();
        let y = VFamily::int(i, b[0], b[1], b[2]).matrix();
        prop_assert_eq!(model_form(&x, &y), rat(8 * (a[0] * b[0] + a[1] * b[1] + a[2] * b[2])));
    }

    #[test]
    fn closure_and_invariance(x in g2_element(), y in g2_element(), z in g2_element()) {
        let dec = G2Decomposition::new();
        prop_assert!(dec.g2.contains(&x.bracket(&y).coords()).unwrap());
        prop_assert_eq!(model_form(&z.bracket(&x), &y) + model_form(&x, &z.bracket(&y)), rat(0));
    }

    #[test]
    fn sff_is_symmetric_and_normal(x in h_element(), y in h_element()) {
        let dec = G2Decomposition::new();
        let hxy = second_fundamental_form(&dec, &x, &y).unwrap();
        prop_assert_eq!(hxy, second_fundamental_form(&dec, &y, &x).unwrap());
        prop_assert!(dec.n_al.contains(&hxy.coords()).unwrap());
    }

    #[test]
    fn coordinates_round_trip(x in g2_element()) {
        prop_assert_eq!(So7Matrix::from_coords(&x.coords()).unwrap(), x);
        let rebuilt = x
            .v_components()
            .iter()
            .enumerate()
            .fold(So7Matrix::zero(), |acc, (f, c)| acc + VFamily::new(f + 1, c[0], c[1], c[2]).matrix());
        prop_assert_eq!(rebuilt, x);
    }
}
