//! Pieri coefficients and the down/up operators on the W basis.

use qwhittaker::partitions::{horizontal_strips, p, StripDirection};
use qwhittaker::pieri::{commutator_check, d_coeff, down, dual_pieri, hk_perp_w, up, DualPieriMode};
use qwhittaker::whittaker::WExpansion;

fn main() {
    let mu = p(&[2, 1]);
    println!("W^_1 W21 = sum over horizontal 1-strips of d(21, lambda) W_lambda:");
    for lambda in horizontal_strips(&mu, 1, StripDirection::Add) {
        println!("  d(21 -> {}) = {}", lambda.label(), d_coeff(&mu, &lambda));
    }

    let lambda = p(&[3, 2]);
    println!("\nh_2^perp W32 = {}", hk_perp_w(&lambda, 2));
    println!("W^_2 W21 in the W basis: {}", dual_pieri(2, &mu, DualPieriMode::HatW));

    let mut e = WExpansion::new("W");
    e.add_term(mu.clone(), qwhittaker::qt_ring::QTRational::one());
    println!("\nU W21 = {}", up(&e));
    println!("D W21 = {}", down(&e));
    for n in 1..=5 {
        println!("[D, U] commutation relation holds at n = {n}: {}", commutator_check(n));
    }
}
