//! LaTeX and plot-table output for a generated potential.

use specpot::algebra::{rat, RatFun};
use specpot::cli::render::{latex_document, plot_data};
use specpot::families::gen_family1;
use specpot::gauge::Gauge;
use specpot::seeds::{NodeSpec1, Sign};

fn main() -> specpot::Result<()> {
    let node = NodeSpec1 { k: 1, eps1: Sign::Plus, eps2: Sign::Plus };
    let r = gen_family1(&[node], &RatFun::nu())?.eval_nu(&rat(-3, 4))?;
    let m = match &r.m {
        Gauge::Finite(m) => Some(m),
        Gauge::Infinite => None,
    };
    print!("{}", latex_document(m, r.h.as_ref(), &r.v));
    print!("{}", plot_data(&r.v, &[], -2.0, 2.0, 9, &vec![])?);
    Ok(())
}
