//! Basic refinement: split the maximal intervals homothetically to a
//! fixed rule and iterate from the trivial partition.
//!
//! Run with: cargo run --example refinement

use kakutani::prelude::*;

fn main() -> Result<()> {
    // Kakutani's alpha-splitting with alpha = 1/3.
    let rule = SplitRule::kakutani(ratio(1, 3))?;
    println!("rule: {rule}");
    for n in 1..=4 {
        let p = iterate(&rule, n)?;
        let pts: Vec<String> = p.breakpoints().iter().map(|b| b.to_string()).collect();
        println!("kappa_{n} = {{{}}}", pts.join(", "));
    }

    // A three-part rule. Note how ties split together: both halves of
    // {0, 1/2, 1} are maximal, so one step refines both at once.
    let rule = SplitRule::parse("1/3,1/3,1/3")?;
    let p = iterate(&rule, 2)?;
    println!("\nequal thirds, n = 2: {} intervals, diam = {}", p.k(), p.max_length());

    // The rho-adic partition subdivides *every* interval each step.
    let full = full_subdivide(&rule, 2)?;
    println!("[rho]^2 has {} intervals (3^2)", full.k());

    // Intervals of [rho]^n are addressed by words over the parts; the
    // length of I(alpha_{i_1}...alpha_{i_n}) is the product of its letters.
    let cell = interval_address(&rule, &[1, 2])?;
    println!("I(alpha_1 alpha_2) = [{}, {}]", cell.lo, cell.hi);
    Ok(())
}
