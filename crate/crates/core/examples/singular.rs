//! The four single-shape potentials obtained from an infinite gauge.

use specpot::algebra::RatFun;
use specpot::families::singular_potential;
use specpot::gauge::CaseTag;

fn main() -> specpot::Result<()> {
    for tag in [CaseTag::C1, CaseTag::C2, CaseTag::C3, CaseTag::C4] {
        let r = singular_potential(tag, &RatFun::nu())?;
        println!("case {}: V = {}", tag.number(), r.v);
    }
    Ok(())
}
