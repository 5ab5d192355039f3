use malachite_base::num::arithmetic::traits::Abs;
use malachite_base::num::basic::traits::One;
use malachite_base::num::conversion::traits::RoundingFrom;
use malachite_base::rounding_modes::RoundingMode;

use super::{Checker, SplitMix64};
use crate::antiderivative::{self as anti, IntegralCase};
use crate::bourbaki::{
    build_iterate, closed_form_value, eval_exact, eval_exact_classical as f, ifs_refine,
    FamilyParam, FunctionCase,
};
use crate::error::Error;
use crate::geometry::{
    arc_lengths, box_count, cover_level, dimension_estimate, mass_bound_check, MassMeasure,
};
use crate::numeric::rational::{
    is_unit, pow_nat, ratio, rational_pow, render, third_power, BigNat, BigRational,
};
use crate::numeric::{affine_compose, affine_fixed_point, from_ternary, to_ternary, AffineMap};

use anti::eval_exact as big_f;

fn one() -> BigRational {
    BigRational::ONE
}

fn at(label: &str, x: &BigRational) -> String {
    format!("{label} x={}", render(x))
}

fn at_level(label: &str, x: &BigRational, i: u32) -> String {
    format!("{label} x={} i={i}", render(x))
}

/// `2^(i-1) / 3^i` and `2^(i-1) / 9^i`.
fn half_powers(i: u32) -> (BigRational, BigRational) {
    let p3 = third_power(i as u64);
    let lead = rational_pow(&ratio(2, 3), i as u64) / BigRational::from(2u32);
    (lead.clone(), lead * p3)
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let (mut acc, mut b) = (1u128 % modulus as u128, base as u128 % modulus as u128);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % modulus as u128;
        }
        b = b * b % modulus as u128;
        exp >>= 1;
    }
    acc as u64
}

fn check_symmetry(c: &mut Checker, x: &BigRational) {
    let (fx, fy) = (f(x), f(&(one() - x)));
    for v in [&fx, &fy].into_iter().flatten() {
        c.holds(|| at("range", x), Ok(is_unit(v)));
    }
    c.equal(
        || at("f(1-x)+f(x)", x),
        Ok(one()),
        fx.and_then(|a| Ok(a + fy?)),
    );
}

pub(super) fn symmetry(c: &mut Checker, rng: &mut SplitMix64, cases: u64) {
    for _ in 0..cases {
        check_symmetry(c, &rng.ternary_rational(12));
    }
    for _ in 0..cases {
        check_symmetry(c, &rng.unit_rational(10_000));
    }
    for _ in 0..cases {
        let x = rng.unit_rational(1_000_000);
        let expansion = match to_ternary(&x) {
            Ok(e) => e,
            Err(e) => return c.fail(at("to_ternary", &x), "expansion".into(), e.to_string()),
        };
        c.equal(
            || at("round trip", &x),
            Ok(x.clone()),
            Ok(from_ternary(&expansion)),
        );
        // the period length L satisfies 3^L = 1 modulo the 3-free part of q
        let q = u64::try_from(x.denominator_ref()).expect("denominator below 10^6");
        let mut free = q;
        while free % 3 == 0 {
            free /= 3;
        }
        let len = expansion.period().len() as u64;
        let ok = if free == 1 {
            len == 0 || x == one()
        } else {
            len >= 1 && len <= q && pow_mod(3, len, free) == 1
        };
        c.holds(
            || at("period length", &x),
            Ok(ok && expansion.is_canonical()),
        );
    }
    for case in FunctionCase::ALL {
        for i in 1..=10 {
            let js: Vec<Option<u32>> = if case.needs_j() {
                (i + 1..=10).map(Some).collect()
            } else {
                vec![None]
            };
            for j in js {
                let label = || format!("closed form f case {case} i={i} j={j:?}");
                match closed_form_value(case, i, j) {
                    Ok((x, v)) => c.equal(label, Ok(v), f(&x)),
                    Err(e) => c.fail(label(), "value".into(), e.to_string()),
                }
            }
        }
    }
}

fn random_map(rng: &mut SplitMix64) -> AffineMap {
    let signed = |rng: &mut SplitMix64| BigRational::from(2u32) * rng.unit_rational(50) - one();
    AffineMap::new(signed(rng), signed(rng))
}

pub(super) fn scaling(c: &mut Checker, rng: &mut SplitMix64, cases: u64) {
    let two = BigRational::from(2u32);
    for k in 0..cases {
        let x = rng.unit_rational(10_000);
        let i = 1 + (k % 8) as u32;
        let p3 = third_power(i as u64);
        let (lead3, lead9) = half_powers(i);
        let two_thirds = rational_pow(&ratio(2, 3), i as u64);
        let two_ninths = rational_pow(&ratio(2, 9), i as u64);
        let left = (&two - &x) * &p3;
        let right = (&two + &x) * &p3;
        let fx = f(&x);
        c.equal(
            || at_level("prop 1", &x, i),
            fx.clone().map(|v| &two_thirds * v),
            f(&(&x * &p3)),
        );
        c.equal(
            || at_level("prop 2", &x, i),
            fx.clone().map(|v| &lead3 * (one() + v)),
            f(&left),
        );
        c.equal(
            || at_level("prop 3", &x, i),
            fx.map(|v| &two_thirds * v + &lead3),
            f(&right),
        );
        let big = big_f(&x);
        let corner = &two * &p3;
        c.equal(
            || at_level("prop 4", &x, i),
            big.clone().map(|v| &two_ninths * v),
            big_f(&(&x * &p3)),
        );
        c.equal(
            || at_level("prop 5", &x, i),
            big.clone().map(|v| &lead9 * (&x + v)),
            big_f(&corner).and_then(|a| Ok(a - big_f(&left)?)),
        );
        c.equal(
            || at_level("prop 6", &x, i),
            big.map(|v| &lead9 * &x + &two_ninths * v),
            big_f(&right).and_then(|a| Ok(a - big_f(&corner)?)),
        );
    }
    for _ in 0..cases {
        let (a, b, m) = (random_map(rng), random_map(rng), random_map(rng));
        let outer = affine_compose(&affine_compose(&a, &b), &m);
        let inner = affine_compose(&a, &affine_compose(&b, &m));
        c.holds(
            || format!("associativity {a}, {b}, {m}"),
            Ok(outer == inner),
        );
        match affine_fixed_point(&a) {
            Ok(v) => c.equal(
                || format!("fixed point of {a}"),
                Ok(v.clone()),
                Ok(a.apply(&v)),
            ),
            Err(Error::Singular) => c.holds(|| format!("singular {a}"), Ok(*a.slope() == one())),
            Err(e) => c.fail(format!("fixed point of {a}"), "value".into(), e.to_string()),
        }
    }
}

pub(super) fn integrals(c: &mut Checker, rng: &mut SplitMix64, cases: u64) {
    for (x, v) in [
        (1, 1, 1, 2),
        (1, 3, 1, 9),
        (2, 3, 5, 18),
        (1, 4, 1, 14),
        (1, 2, 1, 5),
    ]
    .map(|(p, q, r, s)| (ratio(p, q), ratio(r, s)))
    {
        c.equal(|| at("F", &x), Ok(v), big_f(&x));
    }
    let half = ratio(1, 2);
    for _ in 0..cases {
        let x = rng.unit_rational(10_000);
        let diff = big_f(&(one() - &x)).and_then(|a| Ok(a - big_f(&x)?));
        c.equal(|| at("F(1-x)-F(x)", &x), Ok(&half - &x), diff.clone());
        c.equal(
            || at("symmetric integral", &x),
            diff,
            anti::integral_symmetric(&x),
        );
    }
    for case in IntegralCase::ALL {
        for i in 1..=10 {
            let label = || format!("closed form F case {case} i={i}");
            match anti::integral_closed_form(case, i) {
                Ok((x, v)) => c.equal(label, Ok(v), big_f(&x)),
                Err(e) => c.fail(label(), "value".into(), e.to_string()),
            }
        }
    }
    let mut table = anti::base_table();
    for i in 0..=10u32 {
        if i > 0 {
            table = match table.refine() {
                Ok(t) => t,
                Err(e) => {
                    return c.fail(format!("F table level {i}"), "table".into(), e.to_string())
                }
            };
        }
        let points = table.breakpoints();
        c.holds(
            || format!("F_{i} nondecreasing"),
            Ok(points.windows(2).all(|w| w[0].y <= w[1].y)),
        );
        if i <= 8 {
            for p in points {
                c.equal(
                    || at_level("F table", &p.x, i),
                    Ok(p.y.clone()),
                    big_f(&p.x),
                );
            }
        }
    }
    // the central difference averages f over [x - h, x + h], whose oscillation
    // at a level-12 grid point is at most (2/3)^12
    let steps = pow_nat(3, 12);
    let h = third_power(12);
    let bound = ratio(1, 100);
    for _ in 0..cases {
        let k = 1 + rng.below(u64::try_from(&steps).unwrap() - 1);
        let x = BigRational::from_naturals(BigNat::from(k), steps.clone());
        let quotient = big_f(&(&x + &h))
            .and_then(|a| Ok((a - big_f(&(&x - &h))?) / (BigRational::from(2u32) * &h)));
        let ok = quotient.and_then(|q| Ok((q - f(&x)?).abs() <= bound));
        c.holds(|| at("derivative recovery", &x), ok);
    }
}

pub(super) fn geometry(c: &mut Checker) {
    let mut previous: Option<BigNat> = None;
    let target = 5f64.ln() / 3f64.ln();
    for i in 0..=7u32 {
        let report = match box_count(i) {
            Ok(r) => r,
            Err(e) => return c.fail(format!("box count i={i}"), "count".into(), e.to_string()),
        };
        let expected = pow_nat(5, i as u64);
        c.holds(|| format!("box count i={i}"), Ok(report.count == expected));
        if let Some(p) = &previous {
            c.holds(
                || format!("box recurrence i={i}"),
                Ok(report.count == p * BigNat::from(5u32)),
            );
        }
        if i >= 1 {
            let ok = dimension_estimate(std::slice::from_ref(&report))
                .map(|d| (d - target).abs() < 5e-13);
            c.holds(|| format!("dimension estimate i={i}"), ok);
        }
        previous = Some(report.count);
    }
    for i in 0..=8u32 {
        let total = MassMeasure::new(i).map(|m| m.total());
        c.equal(|| format!("mass total i={i}"), Ok(one()), total);
        if i >= 1 {
            c.holds(|| format!("mass bound i={i}"), mass_bound_check(i));
        }
    }
    let classical = FamilyParam::classical();
    let tables: Vec<_> = (0..=8).map(|j| build_iterate(j, &classical)).collect();
    for i in 0..=10u32 {
        let rects = match cover_level(i) {
            Ok(r) => r,
            Err(e) => return c.fail(format!("cover i={i}"), "rectangles".into(), e.to_string()),
        };
        let area: BigRational = rects.iter().map(|r| r.area()).sum();
        c.equal(
            || format!("cover area i={i}"),
            Ok(rational_pow(&ratio(5, 9), i as u64)),
            Ok(area),
        );
        let scale = BigRational::from(pow_nat(3, i as u64));
        for table in tables.iter().skip(i as usize).flatten() {
            for p in table.breakpoints() {
                let position = &p.x * &scale;
                let index = floor_natural(&position).min(BigNat::from(rects.len() - 1));
                let index = usize::try_from(&index).unwrap();
                let mut ok = rects[index].contains(&p.x, &p.y);
                if index > 0 && rects[index - 1].x_interval.1 == p.x {
                    ok &= rects[index - 1].contains(&p.x, &p.y);
                }
                c.holds(
                    || format!("containment i={i} j={} x={}", table.level(), render(&p.x)),
                    Ok(ok),
                );
            }
        }
    }
    match arc_lengths(10) {
        Ok(reports) => {
            let five = BigRational::from(5u32);
            let four = BigRational::from(4u32);
            let bound = ratio(3, 2);
            for r in &reports {
                let i = r.level;
                let lower_sq = &four * &r.lower * &r.lower;
                let upper_sq = &four * &r.upper * &r.upper;
                let above = if i == 0 {
                    upper_sq >= five
                } else {
                    lower_sq > five
                };
                c.holds(
                    || format!("arc length above sqrt5/2 i={i}"),
                    Ok(above && lower_sq <= upper_sq),
                );
                c.holds(
                    || format!("arc length below 3/2 i={i}"),
                    Ok(r.upper < bound),
                );
                c.equal(
                    || format!("taxicab i={i}"),
                    Ok(bound.clone()),
                    Ok(r.taxicab.clone()),
                );
            }
            for w in reports.windows(2) {
                c.holds(
                    || format!("arc length increases i={}", w[1].level),
                    Ok(w[1].lower > w[0].upper),
                );
            }
        }
        Err(e) => c.fail("arc lengths".into(), "reports".into(), e.to_string()),
    }
    for (i, table) in tables.iter().enumerate() {
        let table = match table {
            Ok(t) => t,
            Err(e) => return c.fail(format!("f table level {i}"), "table".into(), e.to_string()),
        };
        for p in table.breakpoints() {
            c.equal(
                || at_level("f table", &p.x, i as u32),
                Ok(p.y.clone()),
                f(&p.x),
            );
        }
        if i <= 7 {
            let ok = match (ifs_refine(table), &tables[i + 1]) {
                (Ok(refined), Ok(next)) => Ok(refined == *next),
                (Err(e), _) => Err(e),
                (_, Err(e)) => Err(e.clone()),
            };
            c.holds(|| format!("ifs refinement i={i}"), ok);
        }
    }
}

pub(super) fn family(c: &mut Checker, rng: &mut SplitMix64, cases: u64) {
    for k in 0..cases {
        let a = rng.open_unit_rational(100);
        let param = FamilyParam::new(a.clone()).expect("drawn inside (0, 1)");
        let x = rng.unit_rational(1_000);
        let label = |what: &str| format!("{what} a={} x={}", render(&a), render(&x));
        let fa = eval_exact(&x, &param);
        let mirrored = eval_exact(&(one() - &x), &param);
        c.equal(
            || label("f_a(1-x)+f_a(x)"),
            Ok(one()),
            fa.clone().and_then(|v| Ok(v + mirrored?)),
        );
        let i = 1 + (k % 8) as u32;
        let scaled = eval_exact(&(&x * third_power(i as u64)), &param);
        let factor = rational_pow(&a, i as u64);
        c.equal(
            || format!("{} i={i}", label("a^i scaling")),
            fa.map(|v| factor * v),
            scaled,
        );
    }
    // a = 2/3 through the general evaluator against classical-only routes
    let general = FamilyParam::new(ratio(2, 3)).expect("2/3 is inside (0, 1)");
    let known = [
        (1, 2, 1, 2),
        (1, 3, 2, 3),
        (2, 3, 1, 3),
        (1, 4, 2, 5),
        (1, 7, 8, 23),
        (1, 1, 1, 1),
        (0, 1, 0, 1),
    ];
    for (x, v) in known.map(|(p, q, r, s)| (ratio(p, q), ratio(r, s))) {
        c.equal(
            || at("a=2/3 known value", &x),
            Ok(v),
            eval_exact(&x, &general),
        );
    }
    for case in FunctionCase::ALL {
        for i in 1..=6 {
            let j = case.needs_j().then_some(i + 2);
            if let Ok((x, v)) = closed_form_value(case, i, j) {
                c.equal(
                    || at("a=2/3 closed form", &x),
                    Ok(v),
                    eval_exact(&x, &general),
                );
            }
        }
    }
    let mut table = build_iterate(0, &FamilyParam::classical());
    for level in 1..=6 {
        table = table.and_then(|t| ifs_refine(&t));
        match &table {
            Ok(t) => {
                for p in t.breakpoints() {
                    c.equal(
                        || at_level("a=2/3 vs ifs", &p.x, level),
                        Ok(p.y.clone()),
                        eval_exact(&p.x, &general),
                    );
                }
            }
            Err(e) => return c.fail(format!("ifs level {level}"), "table".into(), e.to_string()),
        }
    }
    for _ in 0..cases {
        let x = rng.unit_rational(10_000);
        c.equal(
            || at("a=2/3 vs classical", &x),
            f(&x),
            eval_exact(&x, &general),
        );
    }
}

fn floor_natural(x: &BigRational) -> BigNat {
    BigNat::rounding_from(x, RoundingMode::Floor).0
}
