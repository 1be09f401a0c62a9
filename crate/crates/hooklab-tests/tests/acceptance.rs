//! Acceptance criteria, one line each: `criterion N: PASS|FAIL`, followed by
//! the failing items. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Duration;

use hooklab::arith::{frac, MPoly, RatFunc};
use hooklab::diagrams::{det_bound, excited_diagrams, generalized_excited_diagrams, pleasant_diagrams, schroeder, thick_zigzag};
use hooklab::grothendieck::{drop_y, kmy_double_poly, x_var, BetaSpec, BETA_VAR};
use hooklab::tableaux::enum_sit;
use hooklab::verify::khlf_sit_terms;
use hooklab::{Partition, SkewShape};
use hooklab_tests::{run_all, sweep, Criterion};
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn sh(s: &str) -> SkewShape {
    s.parse().unwrap()
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

/// `c + k β`.
fn linear(c: i64, k: i64) -> RatFunc {
    RatFunc::constant(frac(c, 1)) + RatFunc::monomial(frac(k, 1), 1)
}

fn pow(f: &RatFunc, e: usize) -> RatFunc {
    (0..e).fold(RatFunc::one(), |acc, _| acc * f.clone())
}

/// `c β^b Π x_i^{e_i}`.
fn mono(c: i64, b: u32, xs: &[(usize, u32)]) -> MPoly {
    let mut m = MPoly::constant(frac(c, 1));
    for _ in 0..b {
        m = &m * &MPoly::var(BETA_VAR);
    }
    for &(i, e) in xs {
        for _ in 0..e {
            m = &m * &MPoly::var(x_var(i));
        }
    }
    m
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::default();
    let second = Duration::from_secs(1);
    let s = sh("3,3,2/2,1");
    let (e, d, p) = c.timed("332/21 counts", second, || {
        (excited_diagrams(&s).unwrap().len(), generalized_excited_diagrams(&s).unwrap().len(), pleasant_diagrams(&s).unwrap().len())
    });
    c.check(format!("|E(332/21)| = {e}, expected 5"), e == 5);
    c.check(format!("|D(332/21)| = {d}, expected 11"), d == 11);
    c.check(format!("|P(332/21)| = {p}, expected 88"), p == 88);

    let s = sh("4,3/2");
    let (d, e) = c.timed("43/2 counts", second, || {
        (generalized_excited_diagrams(&s).unwrap().len(), excited_diagrams(&s).unwrap().len())
    });
    c.check(format!("|D(43/2)| = {d}, expected 5"), d == 5);
    c.check(format!("|E(43/2)| = {e}, expected 3"), e == 3);

    let s = sh("5,4,4,2/2,1");
    let (d, bound) = c.timed("5442/21 counts", second, || {
        (generalized_excited_diagrams(&s).unwrap().len(), det_bound(&s))
    });
    c.check(format!("|D(5442/21)| = {d}, expected 23"), d == 23);
    c.check(format!("det bound of 5442/21 = {bound}, expected 32"), bound == BigInt::from(32));

    let lam = part("2,2");
    let (sit, sum) = c.timed("(2,2) K-HLF terms", second, || {
        let terms = khlf_sit_terms(&lam, 2).unwrap();
        let sum = terms.iter().fold(RatFunc::zero(), |acc, (_, u)| acc + u.clone());
        (enum_sit(&SkewShape::straight(lam.clone())).len(), sum)
    });
    c.check(format!("|SIT(2,2)| = {sit}, expected 3"), sit == 3);
    let lhs = pow(&RatFunc::var(), 4) * sum;
    let rhs = pow(&linear(1, 3), 2) * pow(&linear(1, 4), 4) * RatFunc::constant(frac(1, 12));
    c.check(format!("β⁴(u(A)+u(B)+u(C)) = {}, expected {}", lhs.display_with("β"), rhs.display_with("β")), lhs == rhs);

    let w = "1432".parse().unwrap();
    let g = c.timed("G_1432(x, 0)", second, || drop_y(&kmy_double_poly(&w, &BetaSpec::Formal).unwrap()));
    let expected = [
        mono(1, 0, &[(1, 2), (2, 1)]),
        mono(1, 0, &[(1, 1), (2, 2)]),
        mono(1, 0, &[(1, 2), (3, 1)]),
        mono(1, 0, &[(1, 1), (2, 1), (3, 1)]),
        mono(1, 0, &[(2, 2), (3, 1)]),
        mono(1, 1, &[(1, 2), (2, 2)]),
        mono(2, 1, &[(1, 2), (2, 1), (3, 1)]),
        mono(2, 1, &[(1, 1), (2, 2), (3, 1)]),
        mono(1, 2, &[(1, 2), (2, 2), (3, 1)]),
    ]
    .iter()
    .fold(MPoly::zero(), |acc, m| &acc + m);
    c.check(format!("G_1432(x, 0) = {g}"), g == expected);

    let lam = part("4,4,2");
    c.check(format!("b(442) = {}, expected 8", lam.b_stat()), lam.b_stat() == 8);
    c.check(format!("s(442) = {}, expected 31", lam.s_stat()), lam.s_stat() == 31);
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::default();
    let (single, grid) = c.timed("thick zigzags", Duration::from_secs(30), || {
        let single: Vec<_> = (1..=6).map(|n| thick_zigzag(n, 1).unwrap()).collect();
        let grid: Vec<_> = (1..=4).flat_map(|n| (1..=2).map(move |k| thick_zigzag(n, k).unwrap())).collect();
        (single, grid)
    });
    for z in single {
        let n = z.n;
        let s = schroeder(n);
        c.check(format!("|D(δ_{}/δ_{n})| = {}, s_{n} = {s}", n + 2, z.direct_count), BigInt::from(z.direct_count) == s);
    }
    for z in grid {
        let label = format!("n={} k={}: count {} vs determinant {}", z.n, z.k, z.direct_count, z.det_formula_value);
        c.check(label, z.count_matches_formula());
    }
    c
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::default();
    let reports = c.timed("exact sweep", Duration::from_secs(600), || {
        let mut r = sweep("hlf,khlf,qkhlf-cor", 6, None);
        r.extend(sweep("nhlf,knhlf,skew-q,k-oof", 7, None));
        r
    });
    c.reports(&reports, None);
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::default();
    let reports = sweep("khlf-multivariate,skew-chevalley,knhlf-multivariate,qknhlf,pieri,vanishing", 6, None);
    c.reports(&reports, Some(1e-6));
    c
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::default();
    let mut reports = sweep("g-tableau-det", 6, None);
    reports.extend(sweep("sit-oracle", 7, None));
    reports.extend(sweep("excited-no,path-bijection", 8, None));
    c.reports(&reports, None);
    c
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::default();
    c.reports(&sweep("qhlf,intro-it,rpp-skew,rpp-peaks,reciprocity", 6, Some(20)), None);
    c
}

fn criterion_7() -> Criterion {
    let mut c = Criterion::default();
    let mut reports = sweep("khlf-leading", 6, None);
    reports.extend(sweep("bsyt", 5, None));
    c.reports(&reports, None);
    c
}

fn criterion_8() -> Criterion {
    let mut c = Criterion::default();
    c.reports(&sweep("gamma-wnk,gamma-det-bound", 6, None), None);
    c
}

fn main() -> ExitCode {
    let criteria: [fn() -> Criterion; 8] =
        [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8];
    if run_all(&criteria) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
