//! Recoupling symbols over the exact surd arithmetic.
//!
//! The base symbols (`wigner_3jm`, `wigner_6j`, `wigner_9j`) are computed
//! from their factorial sum representations; everything higher (12-j, 15-j,
//! 18-j) is an exact sum over products of those. Selection-rule failures
//! return exact zero; structurally malformed inputs return errors.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::WignerError;
use crate::halfint::HalfInt;
use crate::surd::{Surd, SurdVec};

mod chain;
mod fifteenj;
mod ninej;
mod sixj;
mod threejm;
mod twelvej;

pub use chain::{chain_3nj_first, chain_3nj_second};
pub use fifteenj::{wigner_15j_fifth, wigner_15j_fourth, wigner_15j_third};
pub use ninej::wigner_9j;
pub use sixj::{delta, sixj_memo_len, triangle_ok, wigner_6j};
pub use threejm::wigner_3jm;
pub use twelvej::{wigner_12j_first, wigner_12j_second};

/// Counts summations whose partial value ever held terms from more than one
/// quadratic field. Every symbol computed so far keeps this at zero; the
/// counter makes that observable.
static FIELD_ESCALATIONS: AtomicU64 = AtomicU64::new(0);

pub fn field_escalations() -> u64 {
    FIELD_ESCALATIONS.load(Ordering::Relaxed)
}

pub fn reset_field_escalations() {
    FIELD_ESCALATIONS.store(0, Ordering::Relaxed);
}

/// Accumulator for the symbol summations. Terms merge by quadratic field;
/// if more than one field is ever live the escalation counter ticks, and a
/// final multi-field value surfaces as an error since a single surd cannot
/// represent it.
#[derive(Default)]
pub(crate) struct FieldSum {
    vec: SurdVec,
}

impl FieldSum {
    pub(crate) fn new() -> Self {
        FieldSum::default()
    }

    pub(crate) fn add(&mut self, term: Surd) {
        self.vec.push(term);
        if self.vec.len() > 1 {
            FIELD_ESCALATIONS.fetch_add(1, Ordering::Relaxed);
        }
    }

    pub(crate) fn finish(self) -> Result<Surd, WignerError> {
        self.vec
            .into_surd()
            .map_err(|v| WignerError::MixedRadicands(v.to_string()))
    }
}

/// `(-1)^e` from the doubled exponent `2e`. A half-integer exponent cannot
/// survive the selection rules, so an odd doubled value is an internal error.
pub(crate) fn phase_doubled(twice_exp: i32) -> Result<i64, WignerError> {
    if twice_exp.rem_euclid(2) != 0 {
        return Err(WignerError::HalfIntegerPhase(twice_exp));
    }
    Ok(if twice_exp.rem_euclid(4) == 0 { 1 } else { -1 })
}

pub(crate) fn tri_ok_t(ta: i32, tb: i32, tc: i32) -> bool {
    ta >= 0
        && tb >= 0
        && tc >= 0
        && (ta + tb + tc) % 2 == 0
        && tc <= ta + tb
        && tc >= (ta - tb).abs()
}

pub(crate) fn check_nonneg(args: &[HalfInt]) -> Result<(), WignerError> {
    match args.iter().find(|h| h.is_negative()) {
        Some(&h) => Err(WignerError::NegativeMomentum(h)),
        None => Ok(()),
    }
}

/// The doubled range of momenta that couple with both `ta` and `tb`:
/// `[|ta-tb|, ta+tb]`, stepped by 2.
pub(crate) fn couple_range(ta: i32, tb: i32) -> (i32, i32) {
    ((ta - tb).abs(), ta + tb)
}

pub(crate) fn intersect(a: (i32, i32), b: (i32, i32)) -> (i32, i32) {
    (a.0.max(b.0), a.1.min(b.1))
}

pub(crate) fn h(twice: i32) -> HalfInt {
    HalfInt::from_twice(twice)
}

/// Which symbol a [`SymbolSpec`] evaluates, with its CLI code and argument
/// count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymbolKind {
    ThreeJm,
    SixJ,
    NineJ,
    TwelveJFirst,
    TwelveJSecond,
    FifteenJFirst,
    FifteenJSecond,
    FifteenJThird,
    FifteenJFourth,
    FifteenJFifth,
    EighteenJFirst,
    EighteenJSecond,
}

impl SymbolKind {
    pub const ALL: [SymbolKind; 12] = [
        SymbolKind::ThreeJm,
        SymbolKind::SixJ,
        SymbolKind::NineJ,
        SymbolKind::TwelveJFirst,
        SymbolKind::TwelveJSecond,
        SymbolKind::FifteenJFirst,
        SymbolKind::FifteenJSecond,
        SymbolKind::FifteenJThird,
        SymbolKind::FifteenJFourth,
        SymbolKind::FifteenJFifth,
        SymbolKind::EighteenJFirst,
        SymbolKind::EighteenJSecond,
    ];

    pub fn code(self) -> &'static str {
        match self {
            SymbolKind::ThreeJm => "3jm",
            SymbolKind::SixJ => "6j",
            SymbolKind::NineJ => "9j",
            SymbolKind::TwelveJFirst => "12j1",
            SymbolKind::TwelveJSecond => "12j2",
            SymbolKind::FifteenJFirst => "15j1",
            SymbolKind::FifteenJSecond => "15j2",
            SymbolKind::FifteenJThird => "15j3",
            SymbolKind::FifteenJFourth => "15j4",
            SymbolKind::FifteenJFifth => "15j5",
            SymbolKind::EighteenJFirst => "18j1",
            SymbolKind::EighteenJSecond => "18j2",
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        SymbolKind::ALL.into_iter().find(|k| k.code() == code)
    }

    pub fn arity(self) -> usize {
        match self {
            SymbolKind::ThreeJm | SymbolKind::SixJ => 6,
            SymbolKind::NineJ => 9,
            SymbolKind::TwelveJFirst | SymbolKind::TwelveJSecond => 12,
            SymbolKind::FifteenJFirst
            | SymbolKind::FifteenJSecond
            | SymbolKind::FifteenJThird
            | SymbolKind::FifteenJFourth
            | SymbolKind::FifteenJFifth => 15,
            SymbolKind::EighteenJFirst | SymbolKind::EighteenJSecond => 18,
        }
    }
}

/// One symbol evaluation request: a kind plus its arguments read row by row
/// off the printed layout of the symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolSpec {
    kind: SymbolKind,
    args: Vec<HalfInt>,
}

impl SymbolSpec {
    /// Validates arity and signs (projections of the 3jm symbol are the only
    /// arguments allowed to be negative).
    pub fn new(kind: SymbolKind, args: Vec<HalfInt>) -> Result<Self, WignerError> {
        if args.len() != kind.arity() {
            return Err(WignerError::WrongArity {
                kind: kind.code(),
                expected: kind.arity(),
                got: args.len(),
            });
        }
        let momenta = match kind {
            SymbolKind::ThreeJm => &args[..3],
            _ => &args[..],
        };
        check_nonneg(momenta)?;
        Ok(SymbolSpec { kind, args })
    }

    pub fn kind(&self) -> SymbolKind {
        self.kind
    }

    pub fn args(&self) -> &[HalfInt] {
        &self.args
    }
}

/// Evaluates any symbol kind from its row-major argument list.
pub fn evaluate(spec: &SymbolSpec) -> Result<Surd, WignerError> {
    let a = &spec.args;
    match spec.kind {
        SymbolKind::ThreeJm => wigner_3jm(a[0], a[1], a[2], a[3], a[4], a[5]),
        SymbolKind::SixJ => wigner_6j(a[0], a[1], a[2], a[3], a[4], a[5]),
        SymbolKind::NineJ => wigner_9j(a[..9].try_into().unwrap()),
        SymbolKind::TwelveJFirst => wigner_12j_first(
            a[0..4].try_into().unwrap(),
            a[4..8].try_into().unwrap(),
            a[8..12].try_into().unwrap(),
        ),
        SymbolKind::TwelveJSecond => wigner_12j_second(
            a[0..4].try_into().unwrap(),
            a[4..8].try_into().unwrap(),
            a[8..12].try_into().unwrap(),
        ),
        SymbolKind::FifteenJFirst => chain_3nj_first(&a[0..5], &a[5..10], &a[10..15]),
        SymbolKind::FifteenJSecond => chain_3nj_second(&a[0..5], &a[5..10], &a[10..15]),
        SymbolKind::FifteenJThird => wigner_15j_third(a[..15].try_into().unwrap()),
        SymbolKind::FifteenJFourth => wigner_15j_fourth(a[..15].try_into().unwrap()),
        SymbolKind::FifteenJFifth => wigner_15j_fifth(a[..15].try_into().unwrap()),
        SymbolKind::EighteenJFirst => chain_3nj_first(&a[0..6], &a[6..12], &a[12..18]),
        SymbolKind::EighteenJSecond => chain_3nj_second(&a[0..6], &a[6..12], &a[12..18]),
    }
}
