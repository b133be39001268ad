use kostka_core::factor::solve_factorization;
use kostka_core::omega::omega_matrix;
use kostka_core::oracle::modified_kostka;
use kostka_core::rpart::default_total_order;

#[test]
fn r1_matches_charge_oracle() {
    for n in 1..=5 {
        let res = solve_factorization(&omega_matrix(&default_total_order(n, 1)).unwrap()).unwrap();
        let items = res.order.items();
        for (i, l) in items.iter().enumerate() {
            for (j, m) in items.iter().enumerate() {
                let want = modified_kostka(&l.component(0).to_vec(), &m.component(0).to_vec());
                assert_eq!(res.p_minus[(i, j)], want, "n={n} ({l},{m})");
                assert_eq!(res.p_plus[(i, j)], want, "n={n} ({l},{m})");
            }
        }
    }
}
