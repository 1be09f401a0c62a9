//! Identity verifiers: each computes both sides independently and compares
//! them under an explicit evaluation mode.
//!
//! Every verifier is registered under a short id in [`IDENTITIES`]; [`run`]
//! dispatches one check and [`sweep`] runs a family of checks in parallel with
//! output order independent of the thread count.

mod common;
mod groth;
mod series;
mod skew;
mod straight;
mod structure;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{HookError, Result};
use crate::grothendieck::Permutation;
use crate::shapes::{skew_shapes_up_to, straight_shapes_up_to, Partition, SkewShape};
use crate::Rational;

pub use common::Outcome;
pub use straight::{infinite_khlf_partial_sums, khlf_sit_terms};

/// How the two sides of an identity are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Exact rational numbers; the identity has no free variable.
    Exact,
    /// Exact rational functions in a formal `β`.
    ExactBeta,
    /// Exact rational functions in a formal `q`.
    ExactQ,
    /// Exact evaluation at seeded random points, with a Schwartz–Zippel bound.
    RandomMultivariate,
    /// Power series in `q` compared coefficientwise up to `q^N`.
    TruncatedSeries,
    /// Exact partial sums of a convergent series compared under a tolerance.
    NumericTruncated,
}

impl Mode {
    pub const ALL: [Mode; 6] = [
        Mode::Exact,
        Mode::ExactBeta,
        Mode::ExactQ,
        Mode::RandomMultivariate,
        Mode::TruncatedSeries,
        Mode::NumericTruncated,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::ExactBeta => "exact-beta",
            Mode::ExactQ => "exact-q",
            Mode::RandomMultivariate => "random-multivariate",
            Mode::TruncatedSeries => "truncated-series",
            Mode::NumericTruncated => "numeric-truncated",
        }
    }

    fn is_randomized(self) -> bool {
        matches!(self, Mode::RandomMultivariate)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = HookError;

    fn from_str(s: &str) -> Result<Self> {
        Mode::ALL
            .iter()
            .copied()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| HookError::Parse(format!("unknown mode '{s}'")))
    }
}

/// What an identity is checked on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Subject {
    Shape(SkewShape),
    Permutation(Permutation),
    /// A pair of size parameters, e.g. `(n, k)` for `w(n,k)` or `δ_{n+2k}/δ_n`.
    Pair(usize, usize),
}

impl Subject {
    fn rank(&self) -> u8 {
        match self {
            Subject::Shape(_) => 0,
            Subject::Permutation(_) => 1,
            Subject::Pair(..) => 2,
        }
    }
}

impl Ord for Subject {
    /// Shapes by size, then outer and inner partition; permutations by length then one-line order.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Subject::Shape(a), Subject::Shape(b)) => (a.outer().size(), a.size(), a).cmp(&(b.outer().size(), b.size(), b)),
            (Subject::Permutation(a), Subject::Permutation(b)) => (a.len(), a).cmp(&(b.len(), b)),
            (Subject::Pair(a, b), Subject::Pair(c, d)) => (a, b).cmp(&(c, d)),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Subject {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Shape(s) => write!(f, "{s}"),
            Subject::Permutation(w) => write!(f, "{w}"),
            Subject::Pair(n, k) => write!(f, "{n},{k}"),
        }
    }
}

/// The kind of subject an identity takes, which also fixes its sweep domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubjectKind {
    /// A straight shape `λ` with `d ≥ ℓ(λ)`.
    Straight,
    /// A skew shape `λ/μ` with `d ≥ ℓ(λ)`.
    Skew,
    /// A skew shape, no `d`.
    SkewPlain,
    /// A straight shape `μ` as the index of `G_μ`, with `d ≥ ℓ(μ)`.
    Grothendieck,
    /// A vexillary permutation.
    Permutation,
    /// A pair `(n, k)`.
    Pair,
}

/// Registry entry for one identity.
#[derive(Clone, Copy, Debug)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub kind: SubjectKind,
    /// Supported modes; the first is the default.
    pub modes: &'static [Mode],
    /// False for forms recorded as printed that do not hold; such ids are
    /// excluded from `all` and collected under `stated`.
    pub holds: bool,
    pub summary: &'static str,
}

use Mode as M;
use SubjectKind as K;

pub const IDENTITIES: &[IdentitySpec] = &[
    IdentitySpec { id: "hlf", kind: K::Straight, modes: &[M::Exact], holds: true, summary: "f^λ = n!/Π h" },
    IdentitySpec { id: "qhlf", kind: K::Straight, modes: &[M::TruncatedSeries], holds: true, summary: "Σ_{SSYT, entries ≥ 0} q^|T| = q^b(λ) Π 1/(1-q^h)" },
    IdentitySpec { id: "intro-it", kind: K::Straight, modes: &[M::TruncatedSeries], holds: true, summary: "Σ_IT q^|T| = q^s(λ) Σ_RPP q^|T| = q^s(λ) Π 1/(1-q^h)" },
    IdentitySpec { id: "khlf", kind: K::Straight, modes: &[M::ExactBeta], holds: true, summary: "K-theoretic hook-length formula at y_i = i" },
    IdentitySpec { id: "khlf-multivariate", kind: K::Straight, modes: &[M::RandomMultivariate], holds: true, summary: "K-theoretic hook-length formula in y_1, y_2, … and β" },
    IdentitySpec { id: "khlf-infinite", kind: K::Straight, modes: &[M::NumericTruncated], holds: true, summary: "sum over increasing tableaux equals the K-HLF closed form" },
    IdentitySpec { id: "qkhlf-cor", kind: K::Straight, modes: &[M::ExactQ], holds: true, summary: "Σ_SIT Π q^a/(1-q^a) = q^s(λ) Π 1/(1-q^h)" },
    IdentitySpec { id: "qkhlf", kind: K::Straight, modes: &[M::ExactBeta, M::ExactQ], holds: true, summary: "q-analogue of K-HLF, plus its β → ∞ limit" },
    IdentitySpec { id: "khlf-leading", kind: K::Straight, modes: &[M::ExactBeta], holds: true, summary: "β^{-n} Laurent coefficient of the K-HLF sum recovers f^λ" },
    IdentitySpec { id: "bsyt", kind: K::Straight, modes: &[M::Exact], holds: false, summary: "β^{1-n} coefficient identity with barely standard tableaux, as printed" },
    IdentitySpec { id: "bsyt-derived", kind: K::Straight, modes: &[M::Exact], holds: true, summary: "β^{1-n} coefficient identity with barely standard tableaux, rederived" },
    IdentitySpec { id: "nhlf", kind: K::SkewPlain, modes: &[M::Exact], holds: true, summary: "f^{λ/μ} = n! Σ_E Π_{λ∖D} 1/h" },
    IdentitySpec { id: "qnhlf", kind: K::SkewPlain, modes: &[M::TruncatedSeries], holds: true, summary: "Σ_{SSYT, entries ≥ 0} q^|T| = Σ_E Π q^{λ'_j-i}/(1-q^h)" },
    IdentitySpec { id: "knhlf", kind: K::Skew, modes: &[M::ExactBeta], holds: true, summary: "skew K-HLF over generalized excited diagrams at y_i = i" },
    IdentitySpec { id: "knhlf-multivariate", kind: K::Skew, modes: &[M::RandomMultivariate], holds: true, summary: "skew K-HLF in y_1, y_2, … and β" },
    IdentitySpec { id: "qknhlf", kind: K::Skew, modes: &[M::RandomMultivariate, M::ExactBeta, M::ExactQ], holds: true, summary: "skew K-HLF at y_i = q^i" },
    IdentitySpec { id: "skew-q", kind: K::SkewPlain, modes: &[M::ExactQ], holds: true, summary: "Σ_SIT Π q^a/(1-q^a) over D and over E with excited peaks" },
    IdentitySpec { id: "skew-chevalley", kind: K::Skew, modes: &[M::RandomMultivariate], holds: true, summary: "G_μ(ȳ_λ|y) as a sum over generalized excited diagrams" },
    IdentitySpec { id: "oof", kind: K::Skew, modes: &[M::Exact], holds: true, summary: "Okounkov–Olshanski formula for f^{λ/μ}" },
    IdentitySpec { id: "k-oof", kind: K::Skew, modes: &[M::ExactBeta], holds: true, summary: "K-theoretic Okounkov–Olshanski formula" },
    IdentitySpec { id: "rpp-skew", kind: K::SkewPlain, modes: &[M::TruncatedSeries], holds: true, summary: "Σ_RPP q^|T| over pleasant diagrams" },
    IdentitySpec { id: "rpp-peaks", kind: K::SkewPlain, modes: &[M::TruncatedSeries], holds: true, summary: "Σ_RPP q^|T| over excited diagrams with peak weights" },
    IdentitySpec { id: "reciprocity", kind: K::SkewPlain, modes: &[M::TruncatedSeries], holds: false, summary: "I(-q) = q^N R(1/q) for some N ≥ 0, as printed" },
    IdentitySpec { id: "reciprocity-signed", kind: K::SkewPlain, modes: &[M::TruncatedSeries], holds: true, summary: "I(q) = (-1)^{|λ/μ|} R(1/q)" },
    IdentitySpec { id: "g-properties", kind: K::Grothendieck, modes: &[M::RandomMultivariate], holds: true, summary: "tableau = determinant, symmetry, vanishing, Pieri, rescaling, factorial Schur limit" },
    IdentitySpec { id: "g-tableau-det", kind: K::Grothendieck, modes: &[M::RandomMultivariate], holds: true, summary: "set-valued tableau formula equals the determinant formula" },
    IdentitySpec { id: "pieri", kind: K::Grothendieck, modes: &[M::RandomMultivariate], holds: true, summary: "Pieri rule for G_μ times 1 + βG_1" },
    IdentitySpec { id: "vanishing", kind: K::Grothendieck, modes: &[M::RandomMultivariate], holds: true, summary: "G_μ(ȳ_λ|y) vanishes for μ ⊄ λ and is the hook product for μ = λ" },
    IdentitySpec { id: "gamma-det-bound", kind: K::Permutation, modes: &[M::Exact], holds: true, summary: "Γ_w(β) ≤ det[η_β(A_i,B_j)] coefficientwise" },
    IdentitySpec { id: "gamma-wnk", kind: K::Pair, modes: &[M::Exact], holds: true, summary: "Γ_{w(n,k)}(1) = 2^{-C(k,2)} det[s_{n-2+i+j}]" },
    IdentitySpec { id: "thick-zigzag", kind: K::Pair, modes: &[M::Exact], holds: true, summary: "|D(δ_{n+2k}/δ_n)| equals the Schröder determinant" },
    IdentitySpec { id: "sit-oracle", kind: K::SkewPlain, modes: &[M::Exact], holds: true, summary: "chain enumeration of SIT and SYT equals brute-force fillings" },
    IdentitySpec { id: "excited-no", kind: K::SkewPlain, modes: &[M::Exact], holds: true, summary: "generalized excited diagrams are ordinary ones plus subsets of peaks" },
    IdentitySpec { id: "path-bijection", kind: K::SkewPlain, modes: &[M::Exact], holds: true, summary: "diagrams and non-intersecting path families correspond" },
];

/// The registry entry for `id`.
pub fn lookup(id: &str) -> Result<&'static IdentitySpec> {
    IDENTITIES.iter().find(|s| s.id == id).ok_or_else(|| HookError::UnknownIdentity(id.into()))
}

/// Expands `all` (every identity that holds), `stated` (printed forms that do
/// not) or `everything`, or reads a comma-separated list of ids.
pub fn resolve_identities(list: &str) -> Result<Vec<&'static IdentitySpec>> {
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item {
            "all" => out.extend(IDENTITIES.iter().filter(|s| s.holds)),
            "stated" => out.extend(IDENTITIES.iter().filter(|s| !s.holds)),
            "everything" => out.extend(IDENTITIES.iter()),
            id => out.push(lookup(id)?),
        }
    }
    out.sort_by_key(|s| s.id);
    out.dedup_by_key(|s| s.id);
    Ok(out)
}

/// Settings shared by all verifiers.
#[derive(Clone, Debug)]
pub struct VerifyParams {
    pub d: Option<usize>,
    pub mode: Option<Mode>,
    pub trials: usize,
    pub seed: u64,
    /// Series order `N`, or the starting depth `M` of infinite sums.
    pub truncation: Option<usize>,
    /// `β` for numeric-truncated sums.
    pub beta: Option<Rational>,
    pub tolerance: Rational,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            d: None,
            mode: None,
            trials: 20,
            seed: 0,
            truncation: None,
            beta: None,
            tolerance: Rational::new(BigInt::from(1), BigInt::from(1_000_000)),
        }
    }
}

pub const DEFAULT_SERIES_ORDER: usize = 20;
pub const DEFAULT_INFINITE_DEPTH: usize = 32;

/// Result of one verification.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub shape: String,
    pub d: Option<usize>,
    pub mode: Mode,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub truncation: Option<usize>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    /// Schwartz–Zippel failure probability bound, random mode only.
    pub error_bound: Option<f64>,
    pub note: Option<String>,
    pub error: Option<String>,
    #[serde(skip)]
    pub subject: Subject,
    /// Wall-clock time; kept out of serialized output so reports are reproducible.
    #[serde(skip)]
    pub runtime: Duration,
}

impl VerificationReport {
    /// Sort key `(identity, shape, d)`.
    pub fn cmp_key(&self, other: &Self) -> Ordering {
        (&self.identity, &self.subject, self.d).cmp(&(&other.identity, &other.subject, other.d))
    }
}

fn subject_kind_matches(kind: SubjectKind, subject: &Subject) -> bool {
    match (kind, subject) {
        (K::Straight | K::Grothendieck, Subject::Shape(s)) => s.inner().is_empty(),
        (K::Skew | K::SkewPlain, Subject::Shape(_)) => true,
        (K::Permutation, Subject::Permutation(_)) => true,
        (K::Pair, Subject::Pair(..)) => true,
        _ => false,
    }
}

fn resolve_d(kind: SubjectKind, subject: &Subject, d: Option<usize>) -> Result<Option<usize>> {
    let Subject::Shape(sh) = subject else { return Ok(None) };
    if !matches!(kind, K::Straight | K::Skew | K::Grothendieck) {
        return Ok(None);
    }
    let len = sh.outer().length();
    let d = d.unwrap_or(len.max(1));
    if d < len.max(1) {
        return Err(HookError::InvalidShape(format!("{sh} needs d ≥ {}", len.max(1))));
    }
    Ok(Some(d))
}

/// Runs one verifier; argument errors are returned, failures inside the
/// computation are reported as a failing report.
pub fn run(id: &str, subject: &Subject, params: &VerifyParams) -> Result<VerificationReport> {
    let spec = lookup(id)?;
    if !subject_kind_matches(spec.kind, subject) {
        return Err(HookError::Unsupported(format!("{id} does not apply to '{subject}'")));
    }
    let mode = match params.mode {
        Some(m) if !spec.modes.contains(&m) => {
            let names: Vec<&str> = spec.modes.iter().map(|m| m.as_str()).collect();
            return Err(HookError::Unsupported(format!("{id} supports modes {}", names.join(", "))));
        }
        Some(m) => m,
        None => spec.modes[0],
    };
    let d = resolve_d(spec.kind, subject, params.d)?;
    let start = Instant::now();
    let result = dispatch(id, subject, d, mode, params);
    let runtime = start.elapsed();
    let randomized = mode.is_randomized() || matches!(id, "qkhlf" | "qknhlf");
    let mut report = VerificationReport {
        identity: id.into(),
        shape: subject.to_string(),
        d,
        mode,
        trials: randomized.then_some(params.trials),
        seed: randomized.then_some(params.seed),
        truncation: None,
        lhs: String::new(),
        rhs: String::new(),
        pass: false,
        error_bound: None,
        note: None,
        error: None,
        subject: subject.clone(),
        runtime,
    };
    match result {
        Ok(o) => {
            report.lhs = o.lhs;
            report.rhs = o.rhs;
            report.pass = o.pass;
            report.error_bound = o.error_bound;
            report.truncation = o.truncation;
            report.note = o.note;
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    Ok(report)
}

fn shape_of(subject: &Subject) -> &SkewShape {
    match subject {
        Subject::Shape(s) => s,
        _ => unreachable!("subject kind checked by run"),
    }
}

fn dispatch(id: &str, subject: &Subject, d: Option<usize>, mode: Mode, p: &VerifyParams) -> Result<Outcome> {
    let n_series = p.truncation.unwrap_or(DEFAULT_SERIES_ORDER);
    let dd = d.unwrap_or(1);
    match subject {
        Subject::Permutation(w) => return groth::gamma_det_bound(w),
        Subject::Pair(n, k) => {
            return match id {
                "gamma-wnk" => groth::gamma_wnk(*n, *k),
                _ => structure::thick_zigzag(*n, *k),
            }
        }
        Subject::Shape(_) => {}
    }
    let sh = shape_of(subject);
    let lam = sh.outer();
    match id {
        "hlf" => straight::hlf(lam),
        "qhlf" => series::qhlf(lam, n_series),
        "intro-it" => series::intro_it(lam, n_series),
        "khlf" => straight::khlf(lam, dd),
        "khlf-multivariate" => straight::khlf_multivariate(lam, dd, p),
        "khlf-infinite" => straight::khlf_infinite(lam, dd, p),
        "qkhlf-cor" => straight::qkhlf_cor(lam),
        "qkhlf" => straight::qkhlf(lam, dd, mode, p),
        "khlf-leading" => straight::khlf_leading(lam, dd),
        "bsyt" => straight::bsyt_stated(lam, dd),
        "bsyt-derived" => straight::bsyt_derived(lam, dd),
        "nhlf" => skew::nhlf(sh),
        "qnhlf" => series::qnhlf(sh, n_series),
        "knhlf" => skew::knhlf(sh, dd),
        "knhlf-multivariate" => skew::knhlf_multivariate(sh, dd, p),
        "qknhlf" => skew::qknhlf(sh, dd, mode, p),
        "skew-q" => skew::skew_q(sh),
        "skew-chevalley" => skew::skew_chevalley(sh, dd, p),
        "oof" => skew::oof(sh, dd),
        "k-oof" => skew::k_oof(sh, dd),
        "rpp-skew" => series::rpp_skew(sh, n_series),
        "rpp-peaks" => series::rpp_peaks(sh, n_series),
        "reciprocity" => series::reciprocity_stated(sh, n_series),
        "reciprocity-signed" => series::reciprocity_signed(sh, n_series),
        "g-properties" => groth::g_properties(lam, dd, p),
        "g-tableau-det" => groth::g_tableau_det(lam, dd, p),
        "pieri" => groth::pieri(lam, dd, p),
        "vanishing" => groth::vanishing(lam, dd, p),
        "sit-oracle" => structure::sit_oracle(sh),
        "excited-no" => structure::excited_no(sh),
        "path-bijection" => structure::path_bijection(sh),
        other => Err(HookError::UnknownIdentity(other.into())),
    }
}

/// Settings for [`sweep`].
#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Largest `|λ|` for shape-indexed identities.
    pub max_size: usize,
    pub identities: Vec<&'static IdentitySpec>,
    pub seed: u64,
    pub trials: usize,
    pub truncation: Option<usize>,
}

/// One scheduled check.
#[derive(Clone, Debug)]
pub struct Task {
    pub identity: &'static str,
    pub subject: Subject,
    pub d: Option<usize>,
}

/// Seed for one task, derived from the sweep seed and the task's identity so
/// that it does not depend on scheduling.
pub fn task_seed(seed: u64, task: &Task) -> u64 {
    const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    let key = format!("{}|{}|{:?}", task.identity, task.subject, task.d);
    for b in key.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

fn d_range(len: usize, extra: usize) -> impl Iterator<Item = usize> {
    let lo = len.max(1);
    lo..=lo + extra
}

/// Size caps that keep exhaustive enumerations and random evaluations desk-scale.
const MAX_GROTHENDIECK_SIZE: usize = 6;
const MAX_GROTHENDIECK_D: usize = 4;
const MAX_PERMUTATION_SIZE: usize = 8;
const RANDOM_PERMUTATIONS: usize = 20;

/// `count` distinct random vexillary permutations of sizes `3..=max_len`, sorted.
pub fn random_vexillary(seed: u64, count: usize, max_len: usize) -> Vec<Permutation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = std::collections::BTreeSet::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 100 * count {
        attempts += 1;
        let n = rng.gen_range(3..=max_len.max(3));
        let mut w: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            w.swap(i, rng.gen_range(0..=i));
        }
        let w = Permutation::new(w).expect("shuffle is a permutation");
        if w.is_vexillary() {
            out.insert(w);
        }
    }
    let mut v: Vec<Permutation> = out.into_iter().collect();
    v.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    v
}

/// All checks a sweep runs, in report order.
pub fn sweep_tasks(cfg: &SweepConfig) -> Vec<Task> {
    let straight = straight_shapes_up_to(cfg.max_size);
    let skew = skew_shapes_up_to(cfg.max_size);
    let mut tasks = Vec::new();
    for spec in &cfg.identities {
        let push = |tasks: &mut Vec<Task>, subject: Subject, d: Option<usize>| {
            tasks.push(Task { identity: spec.id, subject, d });
        };
        match spec.kind {
            K::Straight => {
                for lam in &straight {
                    for d in d_range(lam.length(), 2) {
                        push(&mut tasks, Subject::Shape(SkewShape::straight(lam.clone())), Some(d));
                    }
                }
            }
            K::Skew => {
                for sh in &skew {
                    for d in d_range(sh.outer().length(), 1) {
                        push(&mut tasks, Subject::Shape(sh.clone()), Some(d));
                    }
                }
            }
            K::SkewPlain => {
                for sh in &skew {
                    push(&mut tasks, Subject::Shape(sh.clone()), None);
                }
            }
            K::Grothendieck => {
                let mut mus = vec![Partition::empty()];
                mus.extend(straight_shapes_up_to(cfg.max_size.min(MAX_GROTHENDIECK_SIZE)));
                for mu in mus {
                    for d in mu.length().max(1)..=MAX_GROTHENDIECK_D.max(mu.length()) {
                        push(&mut tasks, Subject::Shape(SkewShape::straight(mu.clone())), Some(d));
                    }
                }
            }
            K::Permutation => {
                let max_len = (cfg.max_size + 2).min(MAX_PERMUTATION_SIZE);
                for w in random_vexillary(cfg.seed, RANDOM_PERMUTATIONS, max_len) {
                    push(&mut tasks, Subject::Permutation(w), None);
                }
            }
            K::Pair => {
                let (max_n, max_k) = if spec.id == "gamma-wnk" { (5, 2) } else { (6, 2) };
                for k in 1..=max_k {
                    for n in 1..=max_n.min(cfg.max_size) {
                        if k == 2 && n > 4 {
                            continue;
                        }
                        push(&mut tasks, Subject::Pair(n, k), None);
                    }
                }
            }
        }
    }
    tasks
}

/// Runs every task of the sweep on the current rayon pool; the result is
/// sorted by `(identity, shape, d)` and independent of the thread count.
pub fn sweep(cfg: &SweepConfig) -> Vec<VerificationReport> {
    let tasks = sweep_tasks(cfg);
    let mut reports: Vec<VerificationReport> = tasks
        .par_iter()
        .map(|t| {
            let params = VerifyParams {
                d: t.d,
                trials: cfg.trials,
                seed: task_seed(cfg.seed, t),
                truncation: cfg.truncation,
                ..VerifyParams::default()
            };
            run(t.identity, &t.subject, &params).unwrap_or_else(|e| VerificationReport {
                identity: t.identity.into(),
                shape: t.subject.to_string(),
                d: t.d,
                mode: Mode::Exact,
                trials: None,
                seed: None,
                truncation: None,
                lhs: String::new(),
                rhs: String::new(),
                pass: false,
                error_bound: None,
                note: None,
                error: Some(e.to_string()),
                subject: t.subject.clone(),
                runtime: Duration::ZERO,
            })
        })
        .collect();
    reports.sort_by(|a, b| a.cmp_key(b));
    reports
}
