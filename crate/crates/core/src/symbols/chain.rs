use super::{check_nonneg, couple_range, h, intersect, phase_doubled, tri_ok_t, wigner_6j, FieldSum};
use crate::error::WignerError;
use crate::halfint::HalfInt;
use crate::surd::Surd;

fn chain_args(
    j: &[HalfInt],
    l: &[HalfInt],
    k: &[HalfInt],
    lens: std::ops::RangeInclusive<usize>,
) -> Result<usize, WignerError> {
    let n = j.len();
    if !lens.contains(&n) || l.len() != n || k.len() != n {
        return Err(WignerError::ChainLength(n.max(l.len()).max(k.len())));
    }
    check_nonneg(j)?;
    check_nonneg(l)?;
    check_nonneg(k)?;
    Ok(n)
}

/// The cyclic 3n-j symbol of the first kind over `n` columns (12-j, 15-j and
/// 18-j at `n` = 4, 5, 6):
///
/// ```text
/// ⎧j1    j2    …    jn⎫
/// ⎨   l1    l2    …    ln⎬ = Σ_x (2x+1)(-1)^(R+(n-1)x) {jn kn x; j1 k1 ln} ∏ᵢ {jᵢ kᵢ x; kᵢ₊₁ jᵢ₊₁ lᵢ}
/// ⎩k1    k2    …    kn⎭
/// ```
///
/// with `R` the sum of all momenta. At `n = 4` this agrees exactly with
/// [`wigner_12j_first`](super::wigner_12j_first), which is built from its own
/// explicit four-factor form.
pub fn chain_3nj_first(
    j: &[HalfInt],
    l: &[HalfInt],
    k: &[HalfInt],
) -> Result<Surd, WignerError> {
    let n = chain_args(j, l, k, 4..=6)?;
    chain_sum(j, l, k, n, ChainKind::First)
}

/// The cyclic 3n-j symbol of the second kind over `n` columns (15-j and 18-j
/// at `n` = 5, 6): same product body as the first kind but with boundary
/// factor `{jn kn x; k1 j1 ln}` and phase `(-1)^(R+nx)`.
pub fn chain_3nj_second(
    j: &[HalfInt],
    l: &[HalfInt],
    k: &[HalfInt],
) -> Result<Surd, WignerError> {
    let n = chain_args(j, l, k, 5..=6)?;
    chain_sum(j, l, k, n, ChainKind::Second)
}

#[derive(Clone, Copy, PartialEq)]
enum ChainKind {
    First,
    Second,
}

fn chain_sum(
    j: &[HalfInt],
    l: &[HalfInt],
    k: &[HalfInt],
    n: usize,
    kind: ChainKind,
) -> Result<Surd, WignerError> {
    let tj: Vec<i32> = j.iter().map(|a| a.twice()).collect();
    let tl: Vec<i32> = l.iter().map(|a| a.twice()).collect();
    let tk: Vec<i32> = k.iter().map(|a| a.twice()).collect();

    for i in 0..n - 1 {
        if !tri_ok_t(tj[i], tj[i + 1], tl[i]) || !tri_ok_t(tk[i + 1], tk[i], tl[i]) {
            return Ok(Surd::zero());
        }
    }
    let boundary_ok = match kind {
        ChainKind::First => {
            tri_ok_t(tj[n - 1], tk[0], tl[n - 1]) && tri_ok_t(tj[0], tk[n - 1], tl[n - 1])
        }
        ChainKind::Second => {
            tri_ok_t(tj[n - 1], tj[0], tl[n - 1]) && tri_ok_t(tk[0], tk[n - 1], tl[n - 1])
        }
    };
    if !boundary_ok {
        return Ok(Surd::zero());
    }

    let mut range = couple_range(tj[0], tk[0]);
    for i in 1..n {
        range = intersect(range, couple_range(tj[i], tk[i]));
    }
    let twice_r: i32 = tj.iter().chain(&tl).chain(&tk).sum();
    let x_multiplier = match kind {
        ChainKind::First => n as i32 - 1,
        ChainKind::Second => n as i32,
    };

    let mut acc = FieldSum::new();
    let (lo, hi) = range;
    let mut tx = lo;
    while tx <= hi {
        let x = h(tx);
        let mut term = match kind {
            ChainKind::First => wigner_6j(j[n - 1], k[n - 1], x, j[0], k[0], l[n - 1])?,
            ChainKind::Second => wigner_6j(j[n - 1], k[n - 1], x, k[0], j[0], l[n - 1])?,
        };
        for i in 0..n - 1 {
            term = &term * &wigner_6j(j[i], k[i], x, k[i + 1], j[i + 1], l[i])?;
        }
        let sign = phase_doubled(twice_r + x_multiplier * tx)?;
        acc.add(term.scale_int(sign * (tx as i64 + 1)));
        tx += 2;
    }
    acc.finish()
}
