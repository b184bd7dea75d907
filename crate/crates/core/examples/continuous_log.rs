//! Logarithmic continuous family from a polynomial pair.

use specpot::algebra::{MPoly, Var};
use specpot::families::gen_family3_log;

fn main() -> specpot::Result<()> {
    let p1 = &MPoly::var(Var::A) + &MPoly::var(Var::T);
    let p2 = MPoly::var(Var::B);
    let r = gen_family3_log(&p1, &p2)?;
    println!("M = {}", r.m);
    println!("H = {}", r.h.as_ref().unwrap());
    println!("V = {}", r.v);
    Ok(())
}
