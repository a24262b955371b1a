//! Elliptic Hall operators: Q_(m,n), its specialization at t = 1/q, and nabla.
//!
//! cargo run --example elliptic_hall -- 3 2

use qwhittaker::eigenops::{alpha, bracket_expression, elliptic_q, nabla, qmn_specialized_direct};
use qwhittaker::symfunc::{Basis, SymFunc};

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u32>().expect("integer argument"));
    let (m, n) = (args.next().unwrap_or(3), args.next().unwrap_or(2));
    println!("Q_({m},{n}) is built as {}", bracket_expression(m, n).expect("coprime or well-formed pair"));
    let q = elliptic_q(m, n).expect("Q_mn");
    println!("Q_({m},{n}) . 1 = {}", q.to_basis(Basis::S).display_with("s"));
    println!("q^{} Q_({m},{n})(q, 1/q) = {}", alpha(m, n), qmn_specialized_direct(m, n).expect("specialization"));
    println!("\nnabla e_3 = {}", nabla(&SymFunc::e(3)).to_basis(Basis::S).display_with("s"));
}
