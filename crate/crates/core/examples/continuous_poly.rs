//! Polynomial continuous family and its closed-form eigenfunction for every E.

use specpot::cli::expr::parse_expr;
use specpot::families::gen_family3_poly;
use specpot::spectrum::continuous_eigenfunction;

fn main() -> specpot::Result<()> {
    let f = parse_expr("z^4+a*z^3+b*z^2+c*z+d")?.to_poly()?;
    let r = gen_family3_poly(&f)?;
    println!("M = {}", r.m);
    println!("V = {}", r.v);
    println!("u = {:?}", continuous_eigenfunction(&r)?);
    Ok(())
}
