//! Modified Macdonald polynomials and the q,t-Kostka matrix.

use qwhittaker::macdonald::{htilde, htilde_plethysm_route, htilde_triangular, qt_kostka, KostkaKind};
use qwhittaker::partitions::{p, partitions_of};
use qwhittaker::symfunc::Basis;

fn main() {
    let mu = p(&[2, 1]);
    let f = htilde(&mu);
    println!("H~21 = {}", f.to_basis(Basis::S).display_with("s"));
    println!("triangular route agrees: {}", f.equals(&htilde_triangular(&mu)));
    println!("plethystic route agrees: {}", f.equals(&htilde_plethysm_route(&mu)));

    let n = 3;
    let k = qt_kostka(n, KostkaKind::Modified);
    let labels: Vec<String> = partitions_of(n).iter().map(|l| l.label()).collect();
    println!("\nmodified q,t-Kostka matrix for n = {n} (rows mu, columns lambda: {})", labels.join(" "));
    for (i, l) in labels.iter().enumerate() {
        let row: Vec<String> = k.row(i).iter().map(|c| c.to_string()).collect();
        println!("  {l:>4}: {}", row.join(" | "));
    }
}
