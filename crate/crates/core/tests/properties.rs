use proptest::prelude::*;

use specpot::algebra::{int, rat, MPoly, RatFun, Rational, Var};
use specpot::cli::expr::{parse_expr, parse_ratfun};
use specpot::interp::{pade_from_series, rat_interpolate, DegreeSpec, InterpNode};

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

/// Polynomial in `z` and `E` of degree at most 2 in each.
fn poly() -> impl Strategy<Value = MPoly> {
    proptest::collection::vec(rational(), 9).prop_map(|c| {
        let z = MPoly::var(Var::Z);
        let e = MPoly::var(Var::E);
        let mut p = MPoly::zero();
        for (i, c) in c.iter().enumerate() {
            p = &p + &(&z.pow((i % 3) as u32) * &e.pow((i / 3) as u32)).scale(c);
        }
        p
    })
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (poly(), poly()).prop_filter_map("zero denominator", |(n, d)| RatFun::new(n, d).ok())
}

fn nonzero() -> impl Strategy<Value = RatFun> {
    ratfun().prop_filter("zero", |r| !r.is_zero())
}

/// Polynomial in `E` with `z`-dependent coefficients of the given degree.
fn poly_in_e(deg: usize) -> impl Strategy<Value = Vec<MPoly>> {
    proptest::collection::vec(
        proptest::collection::vec(-3i64..=3, 2).prop_map(|c| MPoly::univariate(Var::Z, &[int(c[0]), int(c[1])])),
        deg + 1,
    )
}

fn assemble(coeffs: &[MPoly]) -> MPoly {
    MPoly::from_coeffs_in(Var::E, coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverse(a in nonzero()) {
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn leibniz(a in ratfun(), b in ratfun()) {
        let lhs = (&a * &b).derivative(Var::Z);
        let rhs = &(&a.derivative(Var::Z) * &b) + &(&a * &b.derivative(Var::Z));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn log_derivative_additive(a in nonzero(), b in nonzero()) {
        let ld = |r: &RatFun| &r.derivative(Var::Z) / r;
        prop_assert_eq!(ld(&(&a * &b)), &ld(&a) + &ld(&b));
    }

    #[test]
    fn display_parses_back(a in ratfun()) {
        prop_assert_eq!(parse_ratfun(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn expression_printing_is_stable(a in ratfun()) {
        let once = parse_expr(&a.to_string()).unwrap().to_string();
        let twice = parse_expr(&once).unwrap().to_string();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn interpolation_round_trip(n in 1usize..=5, seed in any::<u64>()) {
        let spec = DegreeSpec::for_count(n);
        let mut rng = <rand::rngs::StdRng as rand::SeedableRng>::seed_from_u64(seed);
        let pick = |rng: &mut rand::rngs::StdRng, deg: usize| {
            let coeffs: Vec<MPoly> = (0..=deg)
                .map(|_| MPoly::univariate(Var::Z, &[int(rand::Rng::gen_range(rng, -3..=3)), int(rand::Rng::gen_range(rng, -3..=3))]))
                .collect();
            assemble(&coeffs)
        };
        let num = pick(&mut rng, spec.num_deg);
        let den = &pick(&mut rng, spec.den_deg) + &MPoly::var(Var::Z).pow(3);
        let m = RatFun::new(num, den).unwrap();
        let energies: Vec<Rational> = (0..n as i64).map(|k| rat(2 * k + 1, 2)).collect();
        let mut nodes = Vec::new();
        for en in &energies {
            match m.subs(Var::E, en) {
                Ok(value) => nodes.push(InterpNode { energy: RatFun::constant(en.clone()), value }),
                Err(_) => return Ok(()),
            }
        }
        prop_assert_eq!(rat_interpolate(&nodes).unwrap(), m);
    }

    #[test]
    fn pade_recovers_rational(p in poly_in_e(2), q in poly_in_e(1)) {
        let q0 = RatFun::from_poly(q[0].clone());
        prop_assume!(!q0.is_zero() && !assemble(&p).is_zero());
        let spec = DegreeSpec { num_deg: 2, den_deg: 1 };
        let order = spec.num_deg + spec.den_deg + 3;
        // Series of P/Q from c_j = (p_j − Σ q_i c_{j−i})/q_0.
        let mut c: Vec<RatFun> = Vec::new();
        for j in 0..order {
            let mut s = p.get(j).map(|x| RatFun::from_poly(x.clone())).unwrap_or_else(RatFun::zero);
            for i in 1..=j.min(q.len() - 1) {
                s = &s - &(&RatFun::from_poly(q[i].clone()) * &c[j - i]);
            }
            c.push(&s / &q0);
        }
        let (r, _) = pade_from_series(&c, spec).unwrap();
        prop_assert_eq!(r, RatFun::new(assemble(&p), assemble(&q)).unwrap());
    }
}
