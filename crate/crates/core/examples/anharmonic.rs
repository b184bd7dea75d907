//! Anharmonic potential from one first-family node, with its low spectrum.

use specpot::algebra::{rat, RatFun};
use specpot::families::gen_family1;
use specpot::seeds::{NodeSpec1, Sign};
use specpot::spectrum::{compute_spectrum, Interval};

fn main() -> specpot::Result<()> {
    let node = NodeSpec1 { k: 1, eps1: Sign::Plus, eps2: Sign::Plus };
    let r = gen_family1(&[node], &RatFun::nu())?.eval_nu(&rat(-3, 4))?;
    println!("M = {}", r.m);
    println!("H = {}", r.h.as_ref().unwrap());
    println!("V = {}", r.v);
    let rep = compute_spectrum(&r, 3, Interval::R)?;
    for p in &rep.eigenpairs {
        println!("E0 = {:>3}  psi = {}", p.e0, p.psi_string());
    }
    for c in rep.candidates.iter().filter(|c| c.degenerate) {
        println!("degenerate candidate E0 = {}", c.e0);
    }
    Ok(())
}
