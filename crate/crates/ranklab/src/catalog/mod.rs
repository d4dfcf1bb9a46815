//! Catalog of checkable statements about idempotent matrices and generalized
//! inverses, with a deterministic randomized runner.
//!
//! Every entry couples an input class (the kind of instance it consumes) with a
//! check function evaluated in exact arithmetic. The runner draws instances
//! along a seeded path per `(entry, dimension, trial)`, sweeps the matrix power
//! `k` where a statement is power-indexed, and aggregates per-entry tallies with
//! fully replayable counterexamples.
//!
//! Entries whose as-printed source line needed a correction carry a note; audit
//! mode replays both readings side by side and reports the discrepancies.

pub mod basics;
pub mod identities;
pub mod pairs;
pub mod projectors;
pub mod star;
pub mod triples;

use std::fmt::Write as _;
use std::sync::OnceLock;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::gen::{
    self, random_idempotent, random_matrix, random_matrix_with_rank, random_projector,
    sample_gen_inverse, sample_small_rational, DerivedRule, SeedPath,
};
use crate::geninv::{GenInverseClass, GenInverseSample};
use crate::matrix::{Matrix, MatrixError};
use crate::report::{EntryReport, FailureReport, Meta, Report};
use crate::scalar::{rat, ExactScalar, FieldSpec, Rat, ScalarError};

/// Hard cap on the dimension sweep; exact arithmetic on dense blocks grows
/// quickly past this.
pub const MAX_DIM: usize = 8;

/// Resample budget for entries whose hypothesis is only sampled, not forced.
pub const RESAMPLE_BUDGET: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckerKind {
    MatrixIdentity,
    RankEquality,
    SubspaceIdentity,
    FactEquivalence,
    ConditionalInverseIdentity,
}

/// What the instance sampler feeds a check function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InputClass {
    /// One general square matrix of order `m`.
    GeneralSquare,
    /// Two independent idempotents of order `m`.
    IdempotentPair,
    /// An idempotent `A` together with `B = A*`.
    StarPair,
    /// Two Hermitian idempotents of order `m`.
    ProjectorPair,
    /// Three independent idempotents.
    IdempotentTriple,
    /// Three idempotents that commute pairwise.
    CommutingTriple,
    /// Three idempotents whose pairwise products vanish.
    AnnihilatingTriple,
    /// Three or four independent idempotents.
    IdempotentFamily,
    /// Three or four idempotents with vanishing pairwise products.
    AnnihilatingFamily,
    /// Two general matrices sharing a row count.
    RectPair,
    /// Three general matrices sharing a row count.
    RectTriple,
    /// `A (m x n)`, `B (m x p)`, `C (q x n)` general.
    RectCross,
    /// `A (m x n)` and `B (n x m)` general.
    TransposedPair,
    /// `A (m x n)`, `B (p x q)`, `X (n x p)`, `Y (q x m)` general.
    CrossedQuad,
    /// A rectangular pair plus one sampled `{1}`-inverse each.
    GinvPair,
    /// A rectangular triple plus one sampled `{1}`-inverse each.
    GinvTriple,
    /// Square `M` plus `X, Y` with `M X = X`, `Y M = Y`, `M Y = X M`.
    FixedPointSystem,
    /// Squares `A, B` plus `X, Y` with `A X = X`, `Y B = Y`, `A Y = X B`.
    IntertwineSystem,
    /// Idempotents `A, B` plus `X, Y` with `A X = X`, `B Y = Y`,
    /// `R(X) contains R(A Y)` and `R(Y) contains R(B X)`.
    RangeChainSystem,
    /// Four blocks `A (m x n)`, `B (m x k)`, `C (l x n)`, `D (l x k)` that
    /// assemble into `[A B; C D]`.
    BlockQuad,
}

/// How many scalar parameters an entry consumes and which rationals are barred.
#[derive(Debug, Clone, Copy)]
pub struct ScalarSpec {
    pub count: u8,
    pub exclusions: &'static [(i64, i64)],
    /// Occasionally substitute an exact zero (for statements valid at zero).
    pub include_zero: bool,
}

pub const NO_SCALARS: ScalarSpec = ScalarSpec { count: 0, exclusions: &[], include_zero: false };

/// Two free scalars, zero allowed.
pub const TWO_SCALARS: ScalarSpec = ScalarSpec { count: 2, exclusions: &[], include_zero: true };

/// Three free scalars, zero allowed.
pub const THREE_SCALARS: ScalarSpec = ScalarSpec { count: 3, exclusions: &[], include_zero: true };

/// Two scalars avoiding `0` and `-1` (twisted-decomposition hypotheses).
pub const TWO_SCALARS_UNIT_SAFE: ScalarSpec =
    ScalarSpec { count: 2, exclusions: &[(0, 1), (-1, 1)], include_zero: false };

/// Per-check parameters: the swept power and any sampled scalars.
#[derive(Debug, Clone)]
pub struct Params {
    pub k: u32,
    pub scalars: Vec<ExactScalar>,
}

impl Params {
    pub fn alpha(&self) -> &ExactScalar {
        &self.scalars[0]
    }

    pub fn beta(&self) -> &ExactScalar {
        &self.scalars[1]
    }

    pub fn gamma(&self) -> &ExactScalar {
        &self.scalars[2]
    }
}

#[derive(Debug, Clone)]
pub enum Outcome {
    Pass,
    Fail(Failure),
    /// The entry's hypothesis was not met by the sampled instance.
    Miss(&'static str),
}

#[derive(Debug, Clone)]
pub struct Failure {
    pub lhs: String,
    pub rhs: String,
    pub note: String,
}

pub type CheckFn = fn(&Instance, &Params) -> Outcome;

/// Concrete sampled inputs handed to a check function.
#[derive(Debug, Clone)]
pub enum Instance {
    Single(Matrix),
    Pair(Matrix, Matrix),
    Triple(Matrix, Matrix, Matrix),
    Family(Vec<Matrix>),
    Ginv2 { a: Matrix, b: Matrix, ai: GenInverseSample, bi: GenInverseSample },
    Ginv3 {
        a: Matrix,
        b: Matrix,
        c: Matrix,
        ai: GenInverseSample,
        bi: GenInverseSample,
        ci: GenInverseSample,
    },
    FixedPoint { m: Matrix, x: Matrix, y: Matrix },
    Quad { a: Matrix, b: Matrix, x: Matrix, y: Matrix },
    BlockQuad { a: Matrix, b: Matrix, c: Matrix, d: Matrix },
}

impl Instance {
    pub fn single(&self) -> &Matrix {
        match self {
            Instance::Single(a) => a,
            _ => panic!("entry expected a single-matrix instance"),
        }
    }

    pub fn pair(&self) -> (&Matrix, &Matrix) {
        match self {
            Instance::Pair(a, b) => (a, b),
            _ => panic!("entry expected a pair instance"),
        }
    }

    pub fn triple(&self) -> (&Matrix, &Matrix, &Matrix) {
        match self {
            Instance::Triple(a, b, c) => (a, b, c),
            _ => panic!("entry expected a triple instance"),
        }
    }

    pub fn family(&self) -> &[Matrix] {
        match self {
            Instance::Family(ms) => ms,
            _ => panic!("entry expected a family instance"),
        }
    }

    pub fn ginv2(&self) -> (&Matrix, &Matrix, &GenInverseSample, &GenInverseSample) {
        match self {
            Instance::Ginv2 { a, b, ai, bi } => (a, b, ai, bi),
            _ => panic!("entry expected a generalized-inverse pair instance"),
        }
    }

    #[allow(clippy::type_complexity)]
    pub fn ginv3(
        &self,
    ) -> (&Matrix, &Matrix, &Matrix, &GenInverseSample, &GenInverseSample, &GenInverseSample)
    {
        match self {
            Instance::Ginv3 { a, b, c, ai, bi, ci } => (a, b, c, ai, bi, ci),
            _ => panic!("entry expected a generalized-inverse triple instance"),
        }
    }

    pub fn fixed_point(&self) -> (&Matrix, &Matrix, &Matrix) {
        match self {
            Instance::FixedPoint { m, x, y } => (m, x, y),
            _ => panic!("entry expected a fixed-point system instance"),
        }
    }

    pub fn quad(&self) -> (&Matrix, &Matrix, &Matrix, &Matrix) {
        match self {
            Instance::Quad { a, b, x, y } => (a, b, x, y),
            _ => panic!("entry expected a four-matrix instance"),
        }
    }

    pub fn block_quad(&self) -> (&Matrix, &Matrix, &Matrix, &Matrix) {
        match self {
            Instance::BlockQuad { a, b, c, d } => (a, b, c, d),
            _ => panic!("entry expected a block-quad instance"),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        let mut put = |label: &str, m: &Matrix| {
            map.insert(label.to_string(), m.to_json());
        };
        match self {
            Instance::Single(a) => put("A", a),
            Instance::Pair(a, b) => {
                put("A", a);
                put("B", b);
            }
            Instance::Triple(a, b, c) => {
                put("A", a);
                put("B", b);
                put("C", c);
            }
            Instance::Family(ms) => {
                for (i, m) in ms.iter().enumerate() {
                    map.insert(format!("A{}", i + 1), m.to_json());
                }
            }
            Instance::Ginv2 { a, b, ai, bi } => {
                put("A", a);
                put("B", b);
                put("Aminus", &ai.inverse);
                put("Bminus", &bi.inverse);
            }
            Instance::Ginv3 { a, b, c, ai, bi, ci } => {
                put("A", a);
                put("B", b);
                put("C", c);
                put("Aminus", &ai.inverse);
                put("Bminus", &bi.inverse);
                put("Cminus", &ci.inverse);
            }
            Instance::FixedPoint { m, x, y } => {
                put("M", m);
                put("X", x);
                put("Y", y);
            }
            Instance::Quad { a, b, x, y } => {
                put("A", a);
                put("B", b);
                put("X", x);
                put("Y", y);
            }
            Instance::BlockQuad { a, b, c, d } => {
                put("A", a);
                put("B", b);
                put("C", c);
                put("D", d);
            }
        }
        serde_json::Value::Object(map)
    }
}

/// One catalog statement: metadata plus its check function, and optionally the
/// as-printed reading for audit mode.
pub struct Entry {
    pub id: &'static str,
    pub kind: CheckerKind,
    pub input: InputClass,
    pub summary: &'static str,
    /// Radicand of the smallest field the check's scalars live in (0 = none).
    pub radicand: u64,
    pub k_swept: bool,
    pub scalars: ScalarSpec,
    /// Whether the checker may report a hypothesis miss worth resampling.
    pub conditional: bool,
    /// Excluded from the default suite; runs only under audit or by name.
    pub audit_only: bool,
    /// Annotation describing a corrected or ambiguous source line.
    pub note: Option<&'static str>,
    pub check: CheckFn,
    /// The as-printed reading, when it is machine-evaluable.
    pub literal: Option<CheckFn>,
}

impl Entry {
    pub const fn new(
        id: &'static str,
        kind: CheckerKind,
        input: InputClass,
        summary: &'static str,
        check: CheckFn,
    ) -> Self {
        Entry {
            id,
            kind,
            input,
            summary,
            radicand: 0,
            k_swept: false,
            scalars: NO_SCALARS,
            conditional: false,
            audit_only: false,
            note: None,
            check,
            literal: None,
        }
    }

    pub const fn radicand(mut self, d: u64) -> Self {
        self.radicand = d;
        self
    }

    pub const fn swept(mut self) -> Self {
        self.k_swept = true;
        self
    }

    pub const fn with_scalars(mut self, spec: ScalarSpec) -> Self {
        self.scalars = spec;
        self
    }

    pub const fn conditional(mut self) -> Self {
        self.conditional = true;
        self
    }

    pub const fn audit_only(mut self) -> Self {
        self.audit_only = true;
        self
    }

    pub const fn noted(mut self, note: &'static str) -> Self {
        self.note = Some(note);
        self
    }

    pub const fn with_literal(mut self, literal: CheckFn) -> Self {
        self.literal = Some(literal);
        self
    }
}

static REGISTRY: OnceLock<Vec<Entry>> = OnceLock::new();

/// Every catalog entry, in stable registry order.
pub fn all_entries() -> &'static [Entry] {
    REGISTRY.get_or_init(|| {
        let mut entries = Vec::new();
        entries.extend(basics::entries());
        entries.extend(pairs::entries());
        entries.extend(identities::entries());
        entries.extend(projectors::entries());
        entries.extend(triples::entries());
        entries.extend(star::entries());
        entries
    })
}

pub fn entry(id: &str) -> Option<&'static Entry> {
    all_entries().iter().find(|e| e.id == id)
}

/// Ids of every annotated entry — the authoritative discrepancy list audit mode
/// must reproduce.
pub fn annotated_ids() -> Vec<&'static str> {
    all_entries().iter().filter(|e| e.note.is_some()).map(|e| e.id).collect()
}

// ---------------------------------------------------------------------------
// Outcome helpers shared by the entry modules.
// ---------------------------------------------------------------------------

pub(crate) fn fail(
    lhs: impl Into<String>,
    rhs: impl Into<String>,
    note: impl Into<String>,
) -> Outcome {
    Outcome::Fail(Failure { lhs: lhs.into(), rhs: rhs.into(), note: note.into() })
}

/// All listed quantities must agree.
pub(crate) fn check_eq_all<T: PartialEq + std::fmt::Display + Copy>(
    items: &[(&str, T)],
) -> Outcome {
    let (first_label, first) = items[0];
    for &(label, value) in &items[1..] {
        if value != first {
            return fail(
                format!("{first_label} = {first}"),
                format!("{label} = {value}"),
                "quantities disagree",
            );
        }
    }
    Outcome::Pass
}

/// `lhs >= rhs` over possibly-negative bookkeeping sums.
pub(crate) fn check_ge(lhs: (&str, i64), rhs: (&str, i64)) -> Outcome {
    if lhs.1 >= rhs.1 {
        Outcome::Pass
    } else {
        fail(
            format!("{} = {}", lhs.0, lhs.1),
            format!("{} = {}", rhs.0, rhs.1),
            "inequality violated",
        )
    }
}

/// All listed matrices must be equal.
pub(crate) fn check_mat_chain(items: &[(&str, &Matrix)]) -> Outcome {
    let (first_label, first) = items[0];
    for &(label, m) in &items[1..] {
        if m != first {
            return fail(first_label, label, "matrices differ");
        }
    }
    Outcome::Pass
}

/// All listed truth values must agree (an equivalence chain).
pub(crate) fn check_iff(clauses: &[(&str, bool)]) -> Outcome {
    let first = clauses[0].1;
    if clauses.iter().all(|&(_, b)| b == first) {
        return Outcome::Pass;
    }
    let mut lhs = String::new();
    for (label, b) in clauses {
        let _ = write!(lhs, "[{label}: {b}] ");
    }
    fail(lhs.trim_end(), "all clauses equal", "equivalence chain broken")
}

pub(crate) fn check_implies(hyp: (&str, bool), conc: (&str, bool)) -> Outcome {
    if hyp.1 && !conc.1 {
        fail(
            format!("{} holds", hyp.0),
            format!("{} fails", conc.0),
            "implication violated",
        )
    } else {
        Outcome::Pass
    }
}

pub(crate) fn row(parts: &[&Matrix]) -> Matrix {
    Matrix::hconcat(parts).expect("conformable row of blocks")
}

pub(crate) fn col(parts: &[&Matrix]) -> Matrix {
    Matrix::vconcat(parts).expect("conformable column of blocks")
}

pub(crate) fn eye(m: usize, field: FieldSpec) -> Matrix {
    Matrix::identity(m, field)
}

/// `R(lhs) = R(x) ∩ R(y)`, decided through an explicitly constructed
/// intersection basis and mutual containment.
pub(crate) fn check_range_intersection(
    lhs_label: &str,
    lhs: &Matrix,
    x: &Matrix,
    y: &Matrix,
) -> Outcome {
    let basis = match x.range_intersection_basis(y) {
        Ok(b) => b,
        Err(e) => return fail(lhs_label, "intersection basis", format!("{e}")),
    };
    let forward = lhs.range_contained_in(&basis);
    let backward = basis.range_contained_in(lhs);
    match (forward, backward) {
        (Ok(true), Ok(true)) => Outcome::Pass,
        (Ok(f), Ok(b)) => fail(
            format!("{lhs_label} within intersection: {f}"),
            format!("intersection within {lhs_label}: {b}"),
            "column spaces differ",
        ),
        (Err(e), _) | (_, Err(e)) => fail(lhs_label, "intersection basis", format!("{e}")),
    }
}

/// `N(lhs) = N(x) ∩ N(y)` via the stacked-kernel construction.
pub(crate) fn check_null_intersection(
    lhs_label: &str,
    lhs: &Matrix,
    x: &Matrix,
    y: &Matrix,
) -> Outcome {
    let meet = match x.nullspace_intersection_basis(y) {
        Ok(b) => b,
        Err(e) => return fail(lhs_label, "kernel intersection basis", format!("{e}")),
    };
    let lhs_kernel = lhs.kernel_basis();
    match lhs_kernel.range_equal(&meet) {
        Ok(true) => Outcome::Pass,
        Ok(false) => fail(
            format!("N({lhs_label}), dimension {}", lhs_kernel.cols()),
            format!("kernel intersection, dimension {}", meet.cols()),
            "null spaces differ",
        ),
        Err(e) => fail(lhs_label, "kernel intersection", format!("{e}")),
    }
}

/// `N(lhs) = N(x) + N(y)`: the sum of two kernels is the range of their
/// concatenated bases.
pub(crate) fn check_null_sum(lhs_label: &str, lhs: &Matrix, x: &Matrix, y: &Matrix) -> Outcome {
    let join = row(&[&x.kernel_basis(), &y.kernel_basis()]);
    let lhs_kernel = lhs.kernel_basis();
    match lhs_kernel.range_equal(&join) {
        Ok(true) => Outcome::Pass,
        Ok(false) => fail(
            format!("N({lhs_label}), dimension {}", lhs_kernel.cols()),
            format!("kernel sum, dimension {}", join.rank()),
            "null spaces differ",
        ),
        Err(e) => fail(lhs_label, "kernel sum", format!("{e}")),
    }
}

pub(crate) fn bool_of(r: Result<bool, MatrixError>) -> bool {
    r.expect("subspace test on conformable matrices")
}

// ---------------------------------------------------------------------------
// Instance sampling.
// ---------------------------------------------------------------------------

fn biased_rank(m: usize, rng: &mut ChaCha8Rng) -> usize {
    match rng.gen_range(0..10u8) {
        0 => 0,
        1 => m,
        _ => rng.gen_range(0..=m),
    }
}

/// Idempotents drawn from a mixture of the direct conjugation construction and
/// the pseudoinverse sandwich rules, so the catalog sees several shapes of
/// idempotent rather than one family.
pub(crate) fn mixed_idempotent(m: usize, field: FieldSpec, rng: &mut ChaCha8Rng) -> Matrix {
    match rng.gen_range(0..8u8) {
        6 => {
            let t = rng.gen_range(1..=m);
            let seed = random_matrix(t, m, 2, field, rng);
            let companion = random_matrix(m, t, 2, field, rng);
            gen::derived_idempotent(&seed, &DerivedRule::SandwichPinv(companion))
                .unwrap_or_else(|_| random_idempotent(m, biased_rank(m, rng), field, rng))
        }
        7 => {
            let s = rng.gen_range(1..=m);
            let q = rng.gen_range(1..=m);
            let (seed, rule) = if rng.gen_bool(0.5) {
                let seed = random_matrix(s, m, 2, field, rng);
                let b = random_matrix(m, q, 2, field, rng);
                let c = random_matrix(q, s, 2, field, rng);
                (seed, DerivedRule::TripleLeft(b, c))
            } else {
                let seed = random_matrix(s, q, 2, field, rng);
                let b = random_matrix(q, m, 2, field, rng);
                let c = random_matrix(m, s, 2, field, rng);
                (seed, DerivedRule::TripleRight(b, c))
            };
            gen::derived_idempotent(&seed, &rule)
                .unwrap_or_else(|_| random_idempotent(m, biased_rank(m, rng), field, rng))
        }
        _ => random_idempotent(m, biased_rank(m, rng), field, rng),
    }
}

fn rect(m: usize, field: FieldSpec, rng: &mut ChaCha8Rng) -> Matrix {
    let n = rng.gen_range(1..=m + 1);
    let r = rng.gen_range(0..=n.min(m));
    random_matrix_with_rank(m, n, r, field, rng)
}

fn ginv_class(rng: &mut ChaCha8Rng) -> GenInverseClass {
    match rng.gen_range(0..6u8) {
        4 => GenInverseClass::OneThree,
        5 => GenInverseClass::OneFour,
        _ => GenInverseClass::One,
    }
}

fn square_with_fixed_vectors(m: usize, field: FieldSpec, rng: &mut ChaCha8Rng) -> Matrix {
    if rng.gen_bool(0.5) {
        mixed_idempotent(m, field, rng)
    } else {
        random_matrix(m, m, 2, field, rng)
    }
}

pub(crate) fn make_instance(
    class: InputClass,
    m: usize,
    field: FieldSpec,
    rng: &mut ChaCha8Rng,
) -> Instance {
    match class {
        InputClass::GeneralSquare => Instance::Single(random_matrix(m, m, 2, field, rng)),
        InputClass::IdempotentPair => {
            let a = mixed_idempotent(m, field, rng);
            let b = mixed_idempotent(m, field, rng);
            Instance::Pair(a, b)
        }
        InputClass::StarPair => {
            let a = mixed_idempotent(m, field, rng);
            let b = a.conj_transpose();
            Instance::Pair(a, b)
        }
        InputClass::ProjectorPair => {
            let a = random_projector(m, biased_rank(m, rng), field, rng);
            let b = random_projector(m, biased_rank(m, rng), field, rng);
            Instance::Pair(a, b)
        }
        InputClass::IdempotentTriple => {
            let a = mixed_idempotent(m, field, rng);
            let b = mixed_idempotent(m, field, rng);
            let c = mixed_idempotent(m, field, rng);
            Instance::Triple(a, b, c)
        }
        InputClass::CommutingTriple => {
            let patterns: Vec<Vec<bool>> =
                (0..3).map(|_| gen::random_pattern(m, rng)).collect();
            let ms = gen::commuting_idempotents(m, &patterns, field, rng);
            let mut it = ms.into_iter();
            Instance::Triple(
                it.next().unwrap(),
                it.next().unwrap(),
                it.next().unwrap(),
            )
        }
        InputClass::AnnihilatingTriple => {
            let patterns = gen::disjoint_patterns(m, 3, rng);
            let ms = gen::commuting_idempotents(m, &patterns, field, rng);
            let mut it = ms.into_iter();
            Instance::Triple(
                it.next().unwrap(),
                it.next().unwrap(),
                it.next().unwrap(),
            )
        }
        InputClass::IdempotentFamily => {
            let s = rng.gen_range(3..=4);
            Instance::Family((0..s).map(|_| mixed_idempotent(m, field, rng)).collect())
        }
        InputClass::AnnihilatingFamily => {
            let s = rng.gen_range(3..=4);
            let patterns = gen::disjoint_patterns(m, s, rng);
            Instance::Family(gen::commuting_idempotents(m, &patterns, field, rng))
        }
        InputClass::RectPair => Instance::Pair(rect(m, field, rng), rect(m, field, rng)),
        InputClass::RectTriple => {
            Instance::Triple(rect(m, field, rng), rect(m, field, rng), rect(m, field, rng))
        }
        InputClass::RectCross => {
            let n = rng.gen_range(1..=m + 1);
            let p = rng.gen_range(1..=m + 1);
            let q = rng.gen_range(1..=m + 1);
            let ra = rng.gen_range(0..=n.min(m));
            let rb = rng.gen_range(0..=p.min(m));
            let rc = rng.gen_range(0..=n.min(q));
            Instance::Triple(
                random_matrix_with_rank(m, n, ra, field, rng),
                random_matrix_with_rank(m, p, rb, field, rng),
                random_matrix_with_rank(q, n, rc, field, rng),
            )
        }
        InputClass::TransposedPair => {
            let n = rng.gen_range(1..=m + 1);
            Instance::Pair(
                random_matrix(m, n, 2, field, rng),
                random_matrix(n, m, 2, field, rng),
            )
        }
        InputClass::CrossedQuad => {
            let n = rng.gen_range(1..=m + 1);
            let p = rng.gen_range(1..=m + 1);
            let q = rng.gen_range(1..=m + 1);
            Instance::Quad {
                a: random_matrix(m, n, 2, field, rng),
                b: random_matrix(p, q, 2, field, rng),
                x: random_matrix(n, p, 2, field, rng),
                y: random_matrix(q, m, 2, field, rng),
            }
        }
        InputClass::GinvPair => {
            let a = rect(m, field, rng);
            let b = rect(m, field, rng);
            let ai = sample_gen_inverse(&a, ginv_class(rng), rng);
            let bi = sample_gen_inverse(&b, ginv_class(rng), rng);
            Instance::Ginv2 { a, b, ai, bi }
        }
        InputClass::GinvTriple => {
            let a = rect(m, field, rng);
            let b = rect(m, field, rng);
            let c = rect(m, field, rng);
            let ai = sample_gen_inverse(&a, ginv_class(rng), rng);
            let bi = sample_gen_inverse(&b, ginv_class(rng), rng);
            let ci = sample_gen_inverse(&c, ginv_class(rng), rng);
            Instance::Ginv3 { a, b, c, ai, bi, ci }
        }
        InputClass::FixedPointSystem => {
            let m_mat = square_with_fixed_vectors(m, field, rng);
            let (x, y) = gen::sample_fixed_point_pair(&m_mat, rng)
                .expect("fixed-point system always admits the zero solution");
            Instance::FixedPoint { m: m_mat, x, y }
        }
        InputClass::IntertwineSystem => {
            let a = square_with_fixed_vectors(m, field, rng);
            let b = square_with_fixed_vectors(m, field, rng);
            let (x, y) = gen::sample_intertwining_pair(&a, &b, rng)
                .expect("intertwining system always admits the zero solution");
            Instance::Quad { a, b, x, y }
        }
        InputClass::RangeChainSystem => {
            let a = mixed_idempotent(m, field, rng);
            let b = mixed_idempotent(m, field, rng);
            let (x, y) = gen::sample_range_chain_pair(&a, &b, rng);
            Instance::Quad { a, b, x, y }
        }
        InputClass::BlockQuad => {
            let l = rng.gen_range(1..=m);
            let n = rng.gen_range(1..=m);
            let k = rng.gen_range(1..=m);
            Instance::BlockQuad {
                a: random_matrix(m, n, 2, field, rng),
                b: random_matrix(m, k, 2, field, rng),
                c: random_matrix(l, n, 2, field, rng),
                d: random_matrix(l, k, 2, field, rng),
            }
        }
    }
}

fn sample_scalars(spec: &ScalarSpec, field: FieldSpec, rng: &mut ChaCha8Rng) -> Vec<ExactScalar> {
    let exclusions: Vec<Rat> = spec.exclusions.iter().map(|&(n, d)| rat(n, d)).collect();
    (0..spec.count)
        .map(|_| {
            if spec.include_zero && rng.gen_range(0..8u8) == 0 {
                ExactScalar::from_int(0, field)
            } else {
                sample_small_rational(&exclusions, field, rng)
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// The suite runner.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// `None` selects every non-audit entry.
    pub entry_ids: Option<Vec<String>>,
    /// Inclusive dimension sweep.
    pub dims: (usize, usize),
    pub trials: usize,
    pub seed: u64,
    /// Force one working field; `None` uses each entry's own radicand.
    pub field: Option<u64>,
    pub k_values: Vec<u32>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            entry_ids: None,
            dims: (2, 5),
            trials: 25,
            seed: 0,
            field: None,
            k_values: vec![1, 2, 3],
        }
    }
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("entry `{id}` works over radicand {required}, which the forced field {requested} cannot express")]
    FieldConflict { id: String, required: u64, requested: u64 },
    #[error("dimension range must satisfy 1 <= lo <= hi <= {MAX_DIM}")]
    BadDims,
    #[error("trial and power sweeps must be nonempty")]
    EmptySweep,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

fn select_entries(ids: &Option<Vec<String>>) -> Result<Vec<&'static Entry>, SuiteError> {
    match ids {
        None => Ok(all_entries().iter().filter(|e| !e.audit_only).collect()),
        Some(ids) => {
            let mut chosen = Vec::new();
            for id in ids {
                match entry(id) {
                    Some(e) => chosen.push(e),
                    None => return Err(SuiteError::UnknownEntry(id.clone())),
                }
            }
            Ok(chosen)
        }
    }
}

/// Runs the selected catalog slice and aggregates a [`Report`].
///
/// Per trial the sampled instance is shared across the power sweep; the trial
/// passes only if every swept power passes, so tallies always sum to
/// `dims x trials`.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report, SuiteError> {
    let (lo, hi) = cfg.dims;
    if lo < 1 || lo > hi || hi > MAX_DIM {
        return Err(SuiteError::BadDims);
    }
    if cfg.trials == 0 || cfg.k_values.is_empty() {
        return Err(SuiteError::EmptySweep);
    }
    let entries = select_entries(&cfg.entry_ids)?;
    if let Some(d) = cfg.field {
        FieldSpec::new(d)?;
        for e in &entries {
            if e.radicand != 0 && e.radicand != d {
                return Err(SuiteError::FieldConflict {
                    id: e.id.to_string(),
                    required: e.radicand,
                    requested: d,
                });
            }
        }
    }

    let root = SeedPath::root(cfg.seed);
    let mut reports = Vec::with_capacity(entries.len());
    for e in &entries {
        let field = FieldSpec::new(cfg.field.unwrap_or(e.radicand))?;
        let mut report = EntryReport {
            id: e.id.to_string(),
            passes: 0,
            fails: 0,
            misses: 0,
            failures: Vec::new(),
        };
        let entry_path = root.child(e.id);
        for dim in lo..=hi {
            let dim_path = entry_path.child_index(dim as u64);
            for trial in 0..cfg.trials {
                let outcome =
                    run_trial(e, dim, field, &dim_path.child_index(trial as u64), &cfg.k_values);
                match outcome {
                    TrialOutcome::Pass => report.passes += 1,
                    TrialOutcome::Miss => report.misses += 1,
                    TrialOutcome::Fail(detail) => {
                        report.fails += 1;
                        report.failures.push(FailureReport {
                            dim,
                            trial,
                            k: detail.k,
                            scalars: detail.scalars,
                            seed_path: detail.seed_path,
                            inputs: detail.inputs,
                            lhs: detail.failure.lhs,
                            rhs: detail.failure.rhs,
                            note: detail.failure.note,
                        });
                    }
                }
            }
        }
        reports.push(report);
    }

    Ok(Report {
        meta: Meta {
            seed: cfg.seed,
            dims: [lo, hi],
            trials: cfg.trials,
            field: cfg.field.map_or_else(|| "entry".to_string(), |d| d.to_string()),
            k_values: cfg.k_values.clone(),
        },
        entries: reports,
    })
}

enum TrialOutcome {
    Pass,
    Miss,
    Fail(FailDetail),
}

struct FailDetail {
    k: u32,
    scalars: Vec<String>,
    seed_path: u64,
    inputs: serde_json::Value,
    failure: Failure,
}

fn run_trial(
    e: &Entry,
    dim: usize,
    field: FieldSpec,
    trial_path: &SeedPath,
    k_values: &[u32],
) -> TrialOutcome {
    let budget = if e.conditional { RESAMPLE_BUDGET } else { 1 };
    let ks: &[u32] = if e.k_swept { k_values } else { &[1] };
    for attempt in 0..budget {
        let path = trial_path.child_index(attempt as u64);
        let mut rng = path.rng();
        let scalars = sample_scalars(&e.scalars, field, &mut rng);
        let instance = make_instance(e.input, dim, field, &mut rng);
        let mut missed = false;
        let mut all_pass = true;
        for &k in ks {
            let params = Params { k, scalars: scalars.clone() };
            match (e.check)(&instance, &params) {
                Outcome::Pass => {}
                Outcome::Miss(_) => {
                    missed = true;
                    all_pass = false;
                    break;
                }
                Outcome::Fail(failure) => {
                    return TrialOutcome::Fail(FailDetail {
                        k,
                        scalars: scalars.iter().map(|s| s.to_string()).collect(),
                        seed_path: path.key(),
                        inputs: instance.to_json(),
                        failure,
                    });
                }
            }
        }
        if all_pass {
            return TrialOutcome::Pass;
        }
        if missed && !e.conditional {
            return TrialOutcome::Miss;
        }
    }
    TrialOutcome::Miss
}

// ---------------------------------------------------------------------------
// Audit mode.
// ---------------------------------------------------------------------------

const AUDIT_DIM: usize = 3;
const AUDIT_TRIALS: usize = 8;
/// Power used when replaying as-printed readings; several corrections only
/// diverge from the printed text at powers three and above.
const AUDIT_K: u32 = 3;

/// Replays every annotated entry's as-printed reading next to its corrected
/// reading and reports both verdicts.
pub fn run_audit(seed: u64) -> crate::report::AuditReport {
    let root = SeedPath::root(seed).child("audit");
    let mut notes = Vec::new();
    for e in all_entries().iter().filter(|e| e.note.is_some()) {
        let field = FieldSpec::new(e.radicand).expect("registered radicands are valid");
        let literal_verdict = match e.literal {
            None => "not machine-evaluable".to_string(),
            Some(f) => verdict(e, f, field, &root),
        };
        let corrected_verdict = verdict(e, e.check, field, &root);
        notes.push(crate::report::AuditNote {
            id: e.id.to_string(),
            annotation: e.note.unwrap().to_string(),
            literal_verdict,
            corrected_verdict,
        });
    }
    crate::report::AuditReport { seed, notes }
}

fn verdict(e: &Entry, f: CheckFn, field: FieldSpec, root: &SeedPath) -> String {
    let path = root.child(e.id);
    let mut fails = 0usize;
    let mut evaluated = 0usize;
    for trial in 0..AUDIT_TRIALS {
        let budget = if e.conditional { RESAMPLE_BUDGET } else { 1 };
        for attempt in 0..budget {
            let p = path.child_index(trial as u64).child_index(attempt as u64);
            let mut rng = p.rng();
            let scalars = sample_scalars(&e.scalars, field, &mut rng);
            let instance = make_instance(e.input, AUDIT_DIM, field, &mut rng);
            let params = Params { k: AUDIT_K, scalars };
            match f(&instance, &params) {
                Outcome::Pass => {
                    evaluated += 1;
                    break;
                }
                Outcome::Fail(_) => {
                    evaluated += 1;
                    fails += 1;
                    break;
                }
                Outcome::Miss(_) => continue,
            }
        }
    }
    if fails > 0 {
        format!("fails ({fails}/{evaluated})")
    } else {
        format!("passes ({evaluated}/{evaluated})")
    }
}

// ---------------------------------------------------------------------------
// Catalog index.
// ---------------------------------------------------------------------------

/// One row of the machine-readable catalog index.
#[derive(Debug, Clone, Serialize)]
pub struct IndexRow {
    pub id: &'static str,
    pub kind: CheckerKind,
    pub input: InputClass,
    pub summary: &'static str,
    pub radicand: u64,
    pub k_swept: bool,
    pub scalar_count: u8,
    pub conditional: bool,
    pub audit_only: bool,
    pub annotated: bool,
}

pub fn index() -> Vec<IndexRow> {
    all_entries()
        .iter()
        .map(|e| IndexRow {
            id: e.id,
            kind: e.kind,
            input: e.input,
            summary: e.summary,
            radicand: e.radicand,
            k_swept: e.k_swept,
            scalar_count: e.scalars.count,
            conditional: e.conditional,
            audit_only: e.audit_only,
            annotated: e.note.is_some(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique_and_nonempty() {
        let mut seen = std::collections::HashSet::new();
        for e in all_entries() {
            assert!(!e.id.is_empty());
            assert!(!e.summary.is_empty(), "{} lacks a summary", e.id);
            assert!(seen.insert(e.id), "duplicate entry id {}", e.id);
        }
        assert!(all_entries().len() >= 90);
    }

    #[test]
    fn radicands_are_valid_fields() {
        for e in all_entries() {
            FieldSpec::new(e.radicand).expect("entry radicand must be a valid field");
        }
    }

    #[test]
    fn annotated_entries_state_their_correction() {
        for e in all_entries() {
            if e.literal.is_some() {
                assert!(e.note.is_some(), "{} has a literal reading but no note", e.id);
            }
        }
        assert!(!annotated_ids().is_empty());
    }

    #[test]
    fn tallies_always_sum_to_dims_times_trials() {
        let cfg = SuiteConfig {
            entry_ids: Some(vec!["hh21".into(), "hh28".into()]),
            dims: (2, 3),
            trials: 5,
            seed: 7,
            field: None,
            k_values: vec![1, 2],
        };
        let report = run_suite(&cfg).unwrap();
        for e in &report.entries {
            assert_eq!(e.passes + e.fails + e.misses, 2 * 5);
        }
    }

    #[test]
    fn smoke_every_entry_on_small_instances() {
        let cfg = SuiteConfig {
            entry_ids: None,
            dims: (2, 3),
            trials: 3,
            seed: 5,
            field: None,
            k_values: vec![1, 2, 3],
        };
        let report = run_suite(&cfg).unwrap();
        let mut problems = Vec::new();
        for e in &report.entries {
            if e.fails > 0 {
                let first = &e.failures[0];
                problems.push(format!(
                    "{}: {} fails, first at dim {} trial {} k {}: {} vs {} ({})",
                    e.id, e.fails, first.dim, first.trial, first.k, first.lhs, first.rhs,
                    first.note
                ));
            }
        }
        assert!(problems.is_empty(), "catalog smoke failures:\n{}", problems.join("\n"));
    }

    #[test]
    fn suite_runs_are_deterministic() {
        let cfg = SuiteConfig {
            entry_ids: Some(vec!["hh21".into()]),
            dims: (2, 3),
            trials: 4,
            seed: 11,
            field: None,
            k_values: vec![1],
        };
        let a = serde_json::to_string(&run_suite(&cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&run_suite(&cfg).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn forced_field_conflicts_are_reported() {
        let cfg = SuiteConfig {
            entry_ids: Some(vec!["v36".into()]),
            dims: (2, 2),
            trials: 1,
            seed: 0,
            field: Some(13),
            k_values: vec![1],
        };
        match run_suite(&cfg) {
            Err(SuiteError::FieldConflict { required, requested, .. }) => {
                assert_eq!((required, requested), (5, 13));
            }
            other => panic!("expected a field conflict, got {other:?}"),
        }
    }

    #[test]
    fn bad_dims_are_rejected() {
        let cfg = SuiteConfig { dims: (4, 2), ..SuiteConfig::default() };
        assert!(matches!(run_suite(&cfg), Err(SuiteError::BadDims)));
        let cfg = SuiteConfig { dims: (2, 20), ..SuiteConfig::default() };
        assert!(matches!(run_suite(&cfg), Err(SuiteError::BadDims)));
    }
}
