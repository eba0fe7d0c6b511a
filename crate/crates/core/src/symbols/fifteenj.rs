use super::{check_nonneg, couple_range, h, intersect, phase_doubled, tri_ok_t, wigner_6j, wigner_9j, FieldSum};
use crate::error::WignerError;
use crate::halfint::HalfInt;
use crate::surd::Surd;

/// The 15-j symbol of the third kind. Arguments run row by row over the
/// printed layout:
///
/// ```text
/// ⎧k1   k1'  k    k'   k2   k2'⎫
/// ⎨   p1       p       p2      ⎬   args = [k1, k1', k, k', k2, k2',
/// ⎩j1   j1'  j    j'   j2   j2'⎭           p1, p, p2,
///                                          j1, j1', j, j', j2, j2']
/// ```
///
/// evaluated as `Σ_x (2x+1)(-1)^(x+p-j-k')` times one 6-j and two 9-j
/// factors.
pub fn wigner_15j_third(args: [HalfInt; 15]) -> Result<Surd, WignerError> {
    check_nonneg(&args)?;
    let [k1, k1p, k, kp, k2, k2p, p1, p, p2, j1, j1p, j, jp, j2, j2p] = args;

    for (a, b, c) in [
        (k, kp, p),
        (jp, j, p),
        (k1, j1, p1),
        (k2, j2, p2),
        (k, k1, k2),
        (j, j1, j2),
        (k1p, j1p, p1),
        (k2p, j2p, p2),
        (kp, k1p, k2p),
        (jp, j1p, j2p),
    ] {
        if !tri_ok_t(a.twice(), b.twice(), c.twice()) {
            return Ok(Surd::zero());
        }
    }

    let (lo, hi) = intersect(
        intersect(
            couple_range(k.twice(), j.twice()),
            couple_range(jp.twice(), kp.twice()),
        ),
        couple_range(p1.twice(), p2.twice()),
    );

    let mut acc = FieldSum::new();
    let mut tx = lo;
    while tx <= hi {
        let x = h(tx);
        let f6 = wigner_6j(k, j, x, jp, kp, p)?;
        let f9a = wigner_9j([k, j, x, k1, j1, p1, k2, j2, p2])?;
        let f9b = wigner_9j([kp, jp, x, k1p, j1p, p1, k2p, j2p, p2])?;
        let sign = phase_doubled(tx + p.twice() - j.twice() - kp.twice())?;
        acc.add((&(&f6 * &f9a) * &f9b).scale_int(sign * (tx as i64 + 1)));
        tx += 2;
    }
    acc.finish()
}

/// The 15-j symbol of the fourth kind:
///
/// ```text
/// ⎧   j1    k1   s1   k1'   j1'⎫
/// ⎨p     l     s     l'       p'⎬   args = [j1, k1, s1, k1', j1',
/// ⎩   j2    k2   s2   k2'   j2'⎭            p, l, s, l', p',
///                                           j2, k2, s2, k2', j2']
/// ```
///
/// a prefactor `(-1)^(k1+k2-s1-s2+p+p'+2l')` times a sum of one 9-j and
/// three 6-j factors.
pub fn wigner_15j_fourth(args: [HalfInt; 15]) -> Result<Surd, WignerError> {
    check_nonneg(&args)?;
    let [j1, k1, s1, k1p, j1p, p, l, s, lp, pp, j2, k2, s2, k2p, j2p] = args;

    for (a, b, c) in [
        (l, s2, j2),
        (s1, lp, j1p),
        (j1, l, s1),
        (j2p, s2, lp),
        (j1, k1, p),
        (k2p, j2p, p),
        (j2, k2, pp),
        (k1p, j1p, pp),
        (k1, k1p, s),
        (k2, k2p, s),
    ] {
        if !tri_ok_t(a.twice(), b.twice(), c.twice()) {
            return Ok(Surd::zero());
        }
    }

    let (lo, hi) = intersect(
        intersect(
            couple_range(j1.twice(), j2p.twice()),
            couple_range(j2.twice(), j1p.twice()),
        ),
        intersect(
            couple_range(k1.twice(), k2p.twice()),
            couple_range(k2.twice(), k1p.twice()),
        ),
    );
    let prefactor = phase_doubled(
        k1.twice() + k2.twice() - s1.twice() - s2.twice()
            + p.twice()
            + pp.twice()
            + 2 * lp.twice(),
    )?;

    let mut acc = FieldSum::new();
    let mut tx = lo;
    while tx <= hi {
        let x = h(tx);
        let f9 = wigner_9j([j1, j2p, x, l, s2, j2, s1, lp, j1p])?;
        let f1 = wigner_6j(j1, j2p, x, k2p, k1, p)?;
        let f2 = wigner_6j(j2, j1p, x, k1p, k2, pp)?;
        let f3 = wigner_6j(k1, k2p, x, k2, k1p, s)?;
        acc.add((&(&f9 * &f1) * &(&f2 * &f3)).scale_int(tx as i64 + 1));
        tx += 2;
    }
    Ok(acc.finish()?.scale_int(prefactor))
}

/// The 15-j symbol of the fifth kind:
///
/// ```text
/// ⎧k1 k1' j1 l1 l1'⎫   args = [k1, k1', j1, l1, l1',
/// ⎨k2 k2' j2 l2 l2'⎬           k2, k2', j2, l2, l2',
/// ⎩k3 k3' j3 l3 l3'⎭           k3, k3', j3, l3, l3']
/// ```
///
/// a double sum over `x1, x2` with weights `(2x1+1)(2x2+1)`, phase
/// `(-1)^(j1+j2+k1+k1'-k2+k2'-l2'+l3+x2)`, two 6-j and two 9-j factors.
pub fn wigner_15j_fifth(args: [HalfInt; 15]) -> Result<Surd, WignerError> {
    check_nonneg(&args)?;
    let [k1, k1p, j1, l1, l1p, k2, k2p, j2, l2, l2p, k3, k3p, j3, l3, l3p] = args;

    for (a, b, c) in [
        (l2, k3p, k1),
        (k2p, l3p, k1),
        (l2p, k3, k1p),
        (k2, l3, k1p),
        (j2, j3, j1),
        (l2, l2p, j2),
        (l3p, l3, j3),
        (l1, l1p, j1),
        (k2p, k3, l1),
        (k3p, k2, l1p),
    ] {
        if !tri_ok_t(a.twice(), b.twice(), c.twice()) {
            return Ok(Surd::zero());
        }
    }

    let (lo1, hi1) = intersect(
        couple_range(l2.twice(), l3p.twice()),
        couple_range(k2p.twice(), k3p.twice()),
    );
    let x2_base = intersect(
        couple_range(l2p.twice(), l3.twice()),
        couple_range(k2.twice(), k3.twice()),
    );
    let phase_fixed = j1.twice() + j2.twice() + k1.twice() + k1p.twice() - k2.twice()
        + k2p.twice()
        - l2p.twice()
        + l3.twice();

    let mut acc = FieldSum::new();
    let mut tx1 = lo1;
    while tx1 <= hi1 {
        let x1 = h(tx1);
        let (lo2, hi2) = intersect(x2_base, couple_range(tx1, j1.twice()));
        let mut tx2 = lo2;
        while tx2 <= hi2 {
            let x2 = h(tx2);
            let f1 = wigner_6j(l2, l3p, x1, k2p, k3p, k1)?;
            let f2 = wigner_6j(l2p, l3, x2, k2, k3, k1p)?;
            let f9a = wigner_9j([l2, l3p, x1, l2p, l3, x2, j2, j3, j1])?;
            let f9b = wigner_9j([k2p, k3p, x1, k3, k2, x2, l1, l1p, j1])?;
            let sign = phase_doubled(phase_fixed + tx2)?;
            let weight = sign * (tx1 as i64 + 1) * (tx2 as i64 + 1);
            acc.add((&(&f1 * &f2) * &(&f9a * &f9b)).scale_int(weight));
            tx2 += 2;
        }
        tx1 += 2;
    }
    acc.finish()
}
