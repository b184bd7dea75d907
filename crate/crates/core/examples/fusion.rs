//! Two second-family nodes merging at a special index.

use specpot::algebra::{rat, RatFun};
use specpot::families::gen_family2;
use specpot::seeds::{NodeSpec2, Sign};
use specpot::spectrum::{compute_spectrum, Interval};

fn main() -> specpot::Result<()> {
    let nodes = [NodeSpec2 { k: 0, eps: Sign::Minus }, NodeSpec2 { k: 1, eps: Sign::Plus }];
    let symbolic = gen_family2(&nodes, &RatFun::nu())?;
    println!("M(nu) = {}", symbolic.m);
    let r = symbolic.eval_nu(&rat(-1, 2))?;
    println!("V = {}", r.v);
    println!("roots of w: {:?}", r.w_roots().iter().map(|(e, m)| format!("{} x{}", e, m)).collect::<Vec<_>>());
    let rep = compute_spectrum(&r, 3, Interval::RPlus)?;
    for p in rep.eigenpairs.iter().chain(&rep.non_normalizable) {
        println!("E0 = {:>6}  L2(R, R+, R-) = {:?}  psi = {}", p.e0, p.l2, p.psi_string());
    }
    Ok(())
}
