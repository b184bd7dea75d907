//! Rational interpolation in E through prescribed gauge values.

use specpot::algebra::{rat, RatFun};
use specpot::interp::{rat_interpolate, InterpNode};

fn main() -> specpot::Result<()> {
    let z = RatFun::z();
    let nodes: Vec<InterpNode> = [(rat(1, 1), &z + &RatFun::one()), (rat(2, 1), z.pow(2)), (rat(5, 1), RatFun::int(3))]
        .into_iter()
        .map(|(e, value)| InterpNode { energy: RatFun::constant(e), value })
        .collect();
    let m = rat_interpolate(&nodes)?;
    println!("M = {}", m);
    for n in &nodes {
        println!("M(z, {}) = {}", n.energy, m.subs(specpot::algebra::Var::E, &n.energy.constant_value().unwrap())?);
    }
    Ok(())
}
