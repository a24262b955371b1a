//! Prints W_mu for every partition of n, its three cross-checked routes and the hook evaluation.
//!
//! cargo run --example whittaker_basis -- 4

use qwhittaker::partitions::partitions_of;
use qwhittaker::whittaker::{hilbert, hook_eval, w, w_checked, HookSide};

fn main() {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for mu in partitions_of(n) {
        let f = w(&mu);
        let agree = w_checked(&mu).is_ok();
        println!("W{} = {}", mu.label(), f.display_with("s"));
        println!("    routes agree: {agree}; Hilbert series: {}", hilbert(&mu));
        println!("    hook evaluation (plain): {}", hook_eval(&mu, HookSide::Plain));
    }
}
