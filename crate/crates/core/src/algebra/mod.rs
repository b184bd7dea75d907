pub mod gcd;
pub mod linalg;
pub mod poly;
pub mod ratfun;
pub mod series;
pub mod tower;
pub mod upoly;

pub use gcd::{gcd, lcm};
pub use linalg::Field;
pub use poly::{int, rat, MPoly, Monomial, Rational, Var};
pub use ratfun::{CoeffField, RatFun};
pub use series::{series_log_derivative, ESeries};
pub use tower::{Gens, TowerElem};
pub use upoly::UPoly;
