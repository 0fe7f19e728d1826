//! Local density: once an interval J of a rho-adic partition has been
//! fully subdivided, the share of endpoints falling in J is pinned
//! between a_1 lambda(J) and lambda(J)/a_1, where a_1 is the smallest
//! part of the rule. These bounds are exact, not asymptotic.
//!
//! Run with: cargo run --release --example density_bounds

use kakutani::analysis::DensityStatus;
use kakutani::prelude::*;
use kakutani::ratio::to_f64;

fn main() -> Result<()> {
    let rule = SplitRule::parse("1/2,1/3,1/6")?;
    // A few addresses of rank <= 2: J = I(alpha_i...) in [rho]^n.
    let addresses: Vec<Vec<usize>> = vec![vec![1], vec![2], vec![3], vec![1, 3], vec![3, 1]];

    for n in [8usize, 32, 128] {
        println!("after n = {n} steps:");
        let checks = density_bounds_check(&rule, n, &addresses)?;
        for c in checks {
            let tag = match c.status {
                DensityStatus::Passed => "within bounds",
                DensityStatus::Failed => "VIOLATED",
                DensityStatus::NotYetSubdivided => "not yet subdivided",
            };
            println!(
                "  J = [{}, {}]  lambda = {:<8} nu_n = {:<10.6} {}",
                c.interval.lo,
                c.interval.hi,
                c.interval.length().to_string(),
                to_f64(&c.nu),
                tag
            );
            assert!(!matches!(c.status, DensityStatus::Failed));
        }
    }
    Ok(())
}
