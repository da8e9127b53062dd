use bottjoin::exactmath::modp::roots_mod_prime;
use bottjoin::exactmath::{
    factorize, gcd, int, is_probable_prime, lcm, rat, sturm_count, Bound, FactorEffort, Integer, Polynomial, Rational,
};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn gcd_divides_and_lcm_product(a in -10_000_000i64..10_000_000, b in -10_000_000i64..10_000_000) {
        let (a, b) = (int(a), int(b));
        let g = gcd(&a, &b);
        prop_assert!(!g.is_negative());
        if !g.is_zero() {
            prop_assert!((&a % &g).is_zero() && (&b % &g).is_zero());
        }
        prop_assert_eq!(lcm(&a, &b) * &g, (&a * &b).abs());
        let (g2, x, y) = bottjoin::exactmath::integer::ext_gcd(&a, &b);
        prop_assert_eq!(&g2, &g);
        prop_assert_eq!(a * x + b * y, g);
    }
}

#[test]
fn named_gcds() {
    assert_eq!(gcd(&int(62), &int(637)), int(1));
    assert_eq!(gcd(&int(0), &int(0)), int(0));
    assert_eq!(gcd(&int(26726154), &int(150)), int(6));
}

#[test]
fn factorization_reconstructs_random_u64() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let n = Integer::from(rng.gen_range(1u64..u64::MAX));
        let f = factorize(&n, FactorEffort::default());
        assert_eq!(f.value(), n);
        assert!(f.primes.keys().all(is_probable_prime));
        if f.fully_factored {
            assert!(f.cofactor.is_one());
        }
    }
}

#[test]
fn named_factorizations() {
    let f = factorize(&int(4454359), FactorEffort::default());
    assert_eq!(f.to_string(), "7 * 13 * 31 * 1579");
    assert_eq!(factorize(&int(8281), FactorEffort::default()).to_string(), "7^2 * 13^2");
    let one = factorize(&int(1), FactorEffort::default());
    assert!(one.primes.is_empty() && one.cofactor.is_one());
    assert_eq!(factorize(&int(25891157), FactorEffort::default()).to_string(), "37 * 699761");
    assert_eq!(factorize(&int(834997), FactorEffort::default()).to_string(), "29 * 28793");
}

/// Number of distinct real roots of `a x^3 + b x^2 + c x + d` from the sign
/// of the classical cubic discriminant.
fn cubic_real_roots(c: &[i64]) -> usize {
    let (d, cc, b, a) = (c[0] as i128, c[1] as i128, c[2] as i128, c[3] as i128);
    let disc = b * b * cc * cc - 4 * a * cc * cc * cc - 4 * b * b * b * d - 27 * a * a * d * d
        + 18 * a * b * cc * d;
    if disc > 0 {
        3
    } else if disc < 0 {
        1
    } else if b * b == 3 * a * cc && b * cc == 9 * a * d {
        // Triple root.
        1
    } else {
        2
    }
}

#[test]
fn sturm_matches_discriminant_oracle_on_random_cubics() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 1000 {
        let c: Vec<i64> = (0..4).map(|_| rng.gen_range(-20..=20)).collect();
        if c[3] == 0 {
            continue;
        }
        let p = Polynomial::from_ints(&c);
        // Cauchy bound: all roots lie in (-21, 21).
        let sturm = sturm_count(&p, &Bound::Finite(rat(-22, 1)), &Bound::Finite(rat(22, 1))).unwrap();
        assert_eq!(sturm, cubic_real_roots(&c), "cubic {p}");
        let all = sturm_count(&p, &Bound::NegInf, &Bound::PosInf).unwrap();
        assert_eq!(all, sturm);
        checked += 1;
    }
}

#[test]
fn discriminant_vanishes_iff_repeated_factor() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..400 {
        let deg = rng.gen_range(1..=6);
        let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-6..=6)).collect();
        if c[deg] == 0 {
            c[deg] = 1;
        }
        let mut p = Polynomial::from_ints(&c);
        if rng.gen_bool(0.3) {
            let r = Polynomial::from_ints(&[rng.gen_range(-3..=3), 1]);
            p = &p * &r.pow(2);
        }
        let g = Polynomial::gcd(&p, &p.derivative());
        assert_eq!(p.discriminant().is_zero(), g.degree().unwrap_or(0) > 0, "{p}");
    }
}

#[test]
fn spec_polynomial_examples() {
    let p = Polynomial::from_ints(&[1, -3, 2]);
    assert_eq!(p.rational_roots(), vec![rat(1, 2), rat(1, 1)]);
    assert_eq!(Polynomial::from_ints(&[-2, 0, 1]).discriminant(), rat(8, 1));
    let sq = Polynomial::from_ints(&[1, -2, 1]);
    assert_eq!(sturm_count(&sq, &Bound::Finite(rat(0, 1)), &Bound::Finite(rat(2, 1))).unwrap(), 1);
}

#[test]
fn roots_mod_prime_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for p in [5003u64, 7919, 28793] {
        for _ in 0..5 {
            let c: Vec<Integer> = (0..4).map(|_| Integer::from(rng.gen_range(-1000i64..1000))).collect();
            let fast = roots_mod_prime(&c, p).unwrap();
            let bp = Integer::from(p);
            let brute: Vec<u64> = (0..p)
                .filter(|&r| {
                    let v = c.iter().rev().fold(Integer::zero(), |acc, a| acc * Integer::from(r) + a);
                    v.mod_floor(&bp).is_zero()
                })
                .collect();
            assert_eq!(fast, brute);
        }
    }
}

#[test]
fn rational_roots_of_constructed_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let mut p = Polynomial::from_ints(&[rng.gen_range(1..50)]);
        let mut expect = Vec::new();
        for _ in 0..rng.gen_range(1..5) {
            let (a, b) = (rng.gen_range(1..2000i64), rng.gen_range(-2000..2000i64));
            p = &p * &Polynomial::from_ints(&[-b, a]);
            expect.push(rat(b, a));
        }
        // An irreducible quadratic factor with no rational roots.
        p = &p * &Polynomial::from_ints(&[rng.gen_range(1..1000), 0, 1]);
        expect.sort();
        assert_eq!(p.rational_roots(), expect, "{p}");
    }
    // Large coefficients whose divisors are impractical to enumerate.
    let big = Integer::from(1_000_000_007u64) * Integer::from(998_244_353u64) * Integer::from(4_294_967_291u64);
    let p = &Polynomial::linear(Rational::from_integer(big.clone()), rat(-3, 1))
        * &Polynomial::from_ints(&[-5, 0, 0, 1]);
    assert_eq!(p.rational_roots(), vec![Rational::new(int(3), big)]);
}
