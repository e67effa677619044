//! Fourier-Motzkin elimination over the rationals for homogeneous systems of
//! strict inequalities r . x > 0. Feasible systems yield an explicit rational
//! witness which is re-verified before being returned, so a Some answer is
//! self-certifying; None means the elimination derived 0 > 0.

use num::{Integer, Signed, Zero};

use crate::linalg::{Int, Rat};

/// Decides whether some x satisfies r . x > 0 for every row, returning a
/// verified witness when one exists.
pub fn strict_positive_witness(rows: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    if rows.is_empty() {
        return Some(Vec::new());
    }
    let nvars = rows[0].len();
    assert!(rows.iter().all(|r| r.len() == nvars), "ragged inequality rows");
    let scaled: Vec<Vec<Int>> = rows.iter().map(|r| primitive_row(r)).collect();
    let witness = eliminate(scaled, nvars)?;
    for row in rows {
        let value: Rat = row.iter().zip(&witness).map(|(a, b)| a * b).sum();
        assert!(
            value > Rat::zero(),
            "witness failed re-verification; elimination is inconsistent"
        );
    }
    Some(witness)
}

/// Clears denominators and divides by the content, preserving the sign.
fn primitive_row(r: &[Rat]) -> Vec<Int> {
    let mut lcm = Int::from(1);
    for x in r {
        lcm = lcm.lcm(x.denom());
    }
    let mut out: Vec<Int> = r.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = Int::zero();
    for x in &out {
        gcd = gcd.gcd(x);
    }
    if !gcd.is_zero() && gcd != Int::from(1) {
        for x in out.iter_mut() {
            *x = &*x / &gcd;
        }
    }
    out
}

/// Eliminates the last variable, recurses, then back-substitutes a value
/// strictly inside the interval the eliminated rows allow.
fn eliminate(rows: Vec<Vec<Int>>, nvars: usize) -> Option<Vec<Rat>> {
    if rows.iter().any(|r| r.iter().all(|x| x.is_zero())) {
        return None;
    }
    if nvars == 0 {
        // every surviving row would be an all-zero row, already rejected
        return Some(Vec::new());
    }
    let k = nvars - 1;
    let mut kept: Vec<Vec<Int>> = Vec::new();
    let mut lower: Vec<Vec<Int>> = Vec::new(); // coefficient at k positive
    let mut upper: Vec<Vec<Int>> = Vec::new(); // coefficient at k negative
    for r in rows {
        if r[k].is_zero() {
            kept.push(r[..k].to_vec());
        } else if r[k].is_positive() {
            lower.push(r);
        } else {
            upper.push(r);
        }
    }
    for p in &lower {
        for q in &upper {
            let weight_p = -q[k].clone();
            let weight_q = p[k].clone();
            let combined: Vec<Int> = (0..k)
                .map(|j| &weight_p * &p[j] + &weight_q * &q[j])
                .collect();
            kept.push(combined);
        }
    }
    kept.sort();
    kept.dedup();
    let prefix = eliminate(kept, k)?;
    let eval = |r: &[Int]| -> Rat {
        r[..k]
            .iter()
            .zip(&prefix)
            .map(|(a, b)| Rat::from(a.clone()) * b)
            .sum()
    };
    // strict bounds: x_k > -(r'.x')/r_k for lower rows, < for upper rows
    let lo = lower
        .iter()
        .map(|r| -eval(r) / Rat::from(r[k].clone()))
        .max();
    let hi = upper
        .iter()
        .map(|r| -eval(r) / Rat::from(r[k].clone()))
        .min();
    let one = Rat::from(Int::from(1));
    let two = Rat::from(Int::from(2));
    let x_k = match (lo, hi) {
        (Some(l), Some(h)) => {
            debug_assert!(l < h, "combined rows must leave the interval open");
            (l + h) / two
        }
        (Some(l), None) => l + one,
        (None, Some(h)) => h - one,
        (None, None) => one,
    };
    let mut out = prefix;
    out.push(x_k);
    Some(out)
}
