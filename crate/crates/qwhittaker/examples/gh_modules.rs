//! Derivative closures of diagram determinants: Hilbert series and Frobenius characters.

use qwhittaker::ghmodules::{bigraded_frobenius, derivative_closure, punctured_char, punctured_expected};
use qwhittaker::partitions::{p, Diagram};
use qwhittaker::symfunc::Basis;

fn main() {
    let mu = p(&[2, 1]);
    let basis = derivative_closure(&Diagram::from_partition(&mu)).expect("closure");
    println!("module of 21 has dimension {}", basis.dim());
    for ((a, b), d) in basis.hilbert() {
        println!("  degree (x {a}, y {b}): {d}");
    }
    println!("Frobenius character: {}", bigraded_frobenius(&basis).to_basis(Basis::S).display_with("s"));

    let lambda = p(&[2, 2]);
    let got = punctured_char(&lambda, (1, 1)).expect("punctured module");
    println!("\npunctured 22 at (1,1): {}", got.to_basis(Basis::S).display_with("s"));
    println!("matches the W prediction: {}", got.equals(&punctured_expected(&lambda, (1, 1))));
}
