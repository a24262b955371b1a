//! The two-row C_j^n family and its change of basis to W.

use qwhittaker::eigenops::{gamma_matrix, reassemble, schur_positive, science_fiction};
use qwhittaker::symfunc::Basis;

fn main() {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let b = science_fiction(n).expect("C basis");
    for j in 0..=b.l {
        let c = b.get(j).to_basis(Basis::S);
        println!("C_{j}^{n} = {}  (Schur positive: {})", c.display_with("s"), schur_positive(&c));
    }
    println!("sum reassembles: {}", reassemble(&b).to_basis(Basis::S).display_with("s"));
    if let Ok(g) = gamma_matrix(n) {
        println!("\ntransition matrix:");
        for i in 0..g.rows() {
            println!("  {}", g.row(i).iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" | "));
        }
    }
}
