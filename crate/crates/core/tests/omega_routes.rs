use kostka_core::omega::{omega_matrix, omega_matrix_bruteforce, WREATH_BOUND};
use kostka_core::rpart::default_total_order;

fn agree(n: u32, r: usize) {
    let order = default_total_order(n, r);
    let a = omega_matrix(&order).unwrap();
    let b = omega_matrix_bruteforce(&order, WREATH_BOUND).unwrap();
    assert_eq!(a, b, "n={n} r={r}");
}

#[test]
fn cosets_match_wreath_small() {
    for (n, r) in [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1)] {
        agree(n, r);
    }
}

#[test]
fn cosets_match_wreath_n3_r3() {
    agree(3, 3);
}
