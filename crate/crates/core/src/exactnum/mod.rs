//! Exact scalar arithmetic: arbitrary-precision rationals, polynomials in `t`,
//! and the rational-function field Q(t).
//!
//! All values are immutable after construction and all operations are pure,
//! so values can be shared and sent between threads freely.

pub(crate) mod intpoly;
mod polyt;
mod rational;
mod ratfunc;

pub use polyt::{polyt_gcd, polyt_lcm, PolyT};
pub use rational::{binomial, catalan_number, neg_one_pow, Integer, Rational};
pub use ratfunc::RatFunc;

pub(crate) use polyt::{push_term, scalar_term};

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_poly(rng: &mut StdRng, max_deg: usize) -> PolyT {
        let deg = rng.gen_range(0..=max_deg);
        PolyT::new(
            (0..=deg)
                .map(|_| Rational::from_ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
                .collect(),
        )
    }

    fn random_ratfunc(rng: &mut StdRng) -> RatFunc {
        let num = random_poly(rng, 3);
        let mut den = random_poly(rng, 2);
        while den.is_zero() {
            den = random_poly(rng, 2);
        }
        RatFunc::new(num, den).unwrap()
    }

    #[test]
    fn field_axioms_on_random_values() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for _ in 0..40 {
            let a = random_ratfunc(&mut rng);
            let b = random_ratfunc(&mut rng);
            let c = random_ratfunc(&mut rng);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                assert_eq!(&a * &a.inv().unwrap(), RatFunc::one());
            }
        }
    }

    #[test]
    fn gcd_quotients_are_coprime_on_random_pairs() {
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..30 {
            let common = random_poly(&mut rng, 2);
            let a = &random_poly(&mut rng, 3) * &common;
            let b = &random_poly(&mut rng, 3) * &common;
            if a.is_zero() && b.is_zero() {
                continue;
            }
            let g = polyt_gcd(&a, &b).unwrap();
            assert!(g.is_monic());
            if !a.is_zero() && !b.is_zero() {
                let qa = a.exact_div(&g).unwrap();
                let qb = b.exact_div(&g).unwrap();
                assert!(polyt_gcd(&qa, &qb).unwrap().is_one());
            }
        }
    }
}
