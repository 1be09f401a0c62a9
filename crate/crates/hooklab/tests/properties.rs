//! Invariants over random shapes and the determinism of sweeps.

use std::collections::BTreeSet;

use hooklab::diagrams::{
    det_bound, excited_diagrams, excited_peaks, generalized_excited_diagrams, pleasant_count_formula, pleasant_diagrams,
};
use hooklab::shapes::{straight_shapes_up_to, subpartitions};
use hooklab::tableaux::{count_syt, enum_sit, enum_syt, enum_weight_bounded, WeightFamily};
use hooklab::verify::{self, Mode, Subject, SweepConfig, VerificationReport, VerifyParams};
use hooklab::{Partition, SkewShape};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Partitions with at most 4 rows and parts at most 4.
fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..=4, 0..=4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// A skew shape `λ/μ` with `μ` drawn from the subpartitions of `λ`.
fn skew_shape() -> impl Strategy<Value = SkewShape> {
    partition().prop_flat_map(|lam| {
        let subs = subpartitions(&lam);
        (0..subs.len()).prop_map(move |i| SkewShape::new(lam.clone(), subs[i].clone()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conjugation_is_an_involution(lam in partition()) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
    }

    #[test]
    fn display_parse_round_trip(sh in skew_shape()) {
        let back: SkewShape = sh.to_string().parse().unwrap();
        prop_assert_eq!(back, sh);
    }

    #[test]
    fn hook_formula_counts_standard_tableaux(lam in partition()) {
        let n = lam.size();
        let factorial: BigInt = (1..=n).map(BigInt::from).product();
        let hooks: BigInt = lam.hooks().into_iter().map(BigInt::from).product();
        prop_assert_eq!(BigInt::from(count_syt(&SkewShape::straight(lam))), factorial / hooks);
    }

    #[test]
    fn excited_counts_are_ordered(sh in skew_shape()) {
        let e = excited_diagrams(&sh).unwrap().len();
        let d = generalized_excited_diagrams(&sh).unwrap().len();
        prop_assert!(e <= d);
        prop_assert!(BigInt::from(d) <= det_bound(&sh));
    }

    #[test]
    fn generalized_diagrams_split_over_peak_subsets(sh in skew_shape()) {
        let by_peaks: usize = excited_peaks(&sh).unwrap().values().map(|p| 1usize << p.len()).sum();
        prop_assert_eq!(generalized_excited_diagrams(&sh).unwrap().len(), by_peaks);
    }

    #[test]
    fn pleasant_diagrams_match_their_count(sh in skew_shape()) {
        let n = pleasant_diagrams(&sh).unwrap().len();
        prop_assert_eq!(BigInt::from(n), pleasant_count_formula(&sh).unwrap());
    }

    #[test]
    fn generalized_diagrams_are_distinct_and_fit(sh in skew_shape()) {
        let ds = generalized_excited_diagrams(&sh).unwrap();
        let unique: BTreeSet<_> = ds.iter().collect();
        prop_assert_eq!(unique.len(), ds.len());
        for d in &ds {
            prop_assert!(d.len() >= sh.inner().size());
            prop_assert!(d.cells().iter().all(|&c| sh.outer().contains(c)));
        }
    }
}

#[test]
fn tableau_families_nest() {
    for lam in straight_shapes_up_to(5) {
        let sh = SkewShape::straight(lam.clone());
        let syt: BTreeSet<_> = enum_syt(&sh).into_iter().collect();
        let sit: BTreeSet<_> = enum_sit(&sh).into_iter().collect();
        assert!(syt.is_subset(&sit), "{lam}");
        let bound = sit.iter().map(|t| t.weight()).max().unwrap_or(0);
        let it: BTreeSet<_> = enum_weight_bounded(WeightFamily::It, &sh, bound).into_iter().collect();
        let ssyt: BTreeSet<_> = enum_weight_bounded(WeightFamily::Ssyt, &sh, bound).into_iter().collect();
        let rpp: BTreeSet<_> = enum_weight_bounded(WeightFamily::Rpp, &sh, bound).into_iter().collect();
        assert!(sit.is_subset(&it), "{lam}");
        assert!(it.is_subset(&ssyt), "{lam}");
        assert!(ssyt.is_subset(&rpp), "{lam}");
    }
}

/// Everything a report carries except its wall-clock runtime.
fn fingerprint(rs: &[VerificationReport]) -> Vec<String> {
    rs.iter()
        .map(|r| {
            format!(
                "{}|{}|{:?}|{}|{:?}|{:?}|{:?}|{}|{}|{}|{:?}|{:?}|{:?}",
                r.identity, r.shape, r.d, r.mode, r.trials, r.seed, r.truncation, r.lhs, r.rhs, r.pass, r.error_bound, r.note,
                r.error
            )
        })
        .collect()
}

#[test]
fn sweep_is_independent_of_thread_count() {
    let cfg = SweepConfig {
        max_size: 3,
        identities: verify::resolve_identities("everything").unwrap(),
        seed: 11,
        trials: 3,
        truncation: Some(8),
    };
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| verify::sweep(&cfg))
    };
    let one = fingerprint(&run(1));
    assert!(!one.is_empty());
    assert_eq!(one, fingerprint(&run(4)));
}

#[test]
fn random_mode_is_reproducible_and_seed_sensitive() {
    let subject = Subject::Shape("3,1/1".parse().unwrap());
    let params = |seed| VerifyParams { mode: Some(Mode::RandomMultivariate), seed, trials: 4, ..VerifyParams::default() };
    let a = verify::run("knhlf-multivariate", &subject, &params(5)).unwrap();
    let b = verify::run("knhlf-multivariate", &subject, &params(5)).unwrap();
    let c = verify::run("knhlf-multivariate", &subject, &params(6)).unwrap();
    assert!(a.pass && c.pass);
    assert_eq!(fingerprint(std::slice::from_ref(&a)), fingerprint(&[b]));
    assert_ne!(a.lhs, c.lhs);
}

#[test]
fn sweep_reports_are_sorted() {
    let cfg = SweepConfig {
        max_size: 3,
        identities: verify::resolve_identities("hlf,nhlf,khlf").unwrap(),
        seed: 0,
        trials: 2,
        truncation: None,
    };
    let reports = verify::sweep(&cfg);
    for w in reports.windows(2) {
        assert!(w[0].cmp_key(&w[1]).is_le());
    }
}
