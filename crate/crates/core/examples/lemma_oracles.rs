//! The Gamma-sum identity, the residue pairing and the hyperexponential integrator.

use specpot::algebra::{rat, RatFun};
use specpot::seeds::{gamma_sum_check, hyperexp_integrate, residue_closed_form, residue_pairing};

fn main() -> specpot::Result<()> {
    for nu in [rat(1, 3), rat(-2, 5)] {
        for k in 0..=4 {
            println!("nu = {:>4}, k = {}: Gamma-sum difference {}", nu, k, gamma_sum_check(k, &nu)?);
        }
    }
    for p in 0..=3 {
        for k in 0..=p {
            println!("residue({}, {}) = {} (closed form {})", p, k, residue_pairing(p, k)?, residue_closed_form(p, k));
        }
    }
    let z = RatFun::z();
    let gauss = hyperexp_integrate(&RatFun::one(), &(-z.pow(2)), &RatFun::zero());
    println!("integral of exp(-z^2): {:?}", gauss);
    let poly = hyperexp_integrate(&(&RatFun::one() - &(&RatFun::int(2) * &z.pow(2))), &(-z.pow(2)), &RatFun::zero());
    println!("integral of (1-2z^2) exp(-z^2): {:?}", poly);
    Ok(())
}
