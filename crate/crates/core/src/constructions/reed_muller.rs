//! Binary and generalized Reed-Muller codes.
//!
//! Evaluation points are listed by integer index. For RM(r, m) bit `i` of the
//! index is the coordinate `x_(i+1)`; for GRM_q(r, m) the base-q digit `i` is
//! the field element `x_(i+1)`. The least-significant variable comes first.

use serde::Serialize;

use crate::codelin::{Codeword, LinearCode};
use crate::csst::{csst_binary_star, csst_qary, CssPair};
use crate::error::{Error, Result};
use crate::gf2e::FieldSpec;

/// Largest supported evaluation length.
pub const MAX_EVAL_LENGTH: usize = 1 << 16;

/// RM(r, m): evaluations of multilinear monomials of degree at most `r` on F_2^m.
pub fn reed_muller(r: usize, m: usize) -> Result<LinearCode> {
    if r > m {
        return Err(Error::OutOfRange(format!("RM order r = {r} exceeds m = {m}")));
    }
    if m > 16 {
        return Err(Error::OutOfRange(format!("RM length 2^{m} too large")));
    }
    let n = 1usize << m;
    let spec = FieldSpec::binary();
    let rows = (0u32..1 << m)
        .filter(|mask| mask.count_ones() as usize <= r)
        .map(|mask| {
            let mut v = Codeword::zeros(spec, n);
            for p in 0..n {
                if p as u32 & mask == mask {
                    v.set(p, 1);
                }
            }
            v
        })
        .collect();
    LinearCode::from_codewords(spec, n, rows)
}

/// GRM_q(r, m): evaluations of polynomials of total degree at most `r` with
/// each variable's degree capped at `q - 1`.
pub fn grm(field: FieldSpec, r: usize, m: usize) -> Result<LinearCode> {
    let q = field.q() as usize;
    if r > m * (q - 1) {
        return Err(Error::OutOfRange(format!("GRM order r = {r} exceeds m(q-1) = {}", m * (q - 1))));
    }
    let n = (q as u128).checked_pow(m as u32).filter(|&n| n <= MAX_EVAL_LENGTH as u128).ok_or_else(|| {
        Error::OutOfRange(format!("GRM length {q}^{m} exceeds {MAX_EVAL_LENGTH}"))
    })? as usize;
    let points: Vec<Vec<u32>> = (0..n)
        .map(|p| (0..m).map(|i| ((p / q.pow(i as u32)) % q) as u32).collect())
        .collect();
    let mut rows = Vec::new();
    let mut exps = vec![0usize; m];
    loop {
        if exps.iter().sum::<usize>() <= r {
            let mut v = Codeword::zeros(field, n);
            for (p, pt) in points.iter().enumerate() {
                let val = pt.iter().zip(&exps).fold(1, |acc, (&x, &e)| field.mul(acc, field.pow(x, e as u64)));
                v.set(p, val);
            }
            rows.push(v);
        }
        // Odometer over exponent vectors in [0, q-1]^m.
        let Some(i) = exps.iter().position(|&e| e < q - 1) else { break };
        exps[i] += 1;
        exps[..i].fill(0);
    }
    LinearCode::from_codewords(field, n, rows)
}

/// Whether `tr(GRM_q(1, m)) = RM(1, ms)` holds as an exact code equality.
pub fn grm_trace_identity_check(field: FieldSpec, m: usize) -> Result<bool> {
    let lhs = grm(field, 1, m)?.trace_code();
    let rhs = reed_muller(1, m * field.s() as usize)?;
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrmClassification {
    pub s: u32,
    pub m: usize,
    pub is_csst: bool,
    /// `ms >= 3`.
    pub expected: bool,
}

impl GrmClassification {
    pub fn matches(&self) -> bool {
        self.is_csst == self.expected
    }
}

/// Decides whether `(GRM_q(1, m), GRM_q(0, m))` is CSS-T, alongside the
/// expectation `ms >= 3`.
pub fn grm_csst_classify(field: FieldSpec, m: usize) -> Result<GrmClassification> {
    if field.is_binary() {
        return Err(Error::OutOfRange("GRM classification needs s > 1".into()));
    }
    let pair = CssPair::new(grm(field, 1, m)?, grm(field, 0, m)?)?;
    let s = field.s();
    Ok(GrmClassification { s, m, is_csst: csst_qary(&pair).is_csst, expected: m * s as usize >= 3 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RmThreshold {
    pub m: usize,
    pub t: usize,
    pub r1: usize,
    pub r2: usize,
    pub nested: bool,
    /// Star-criterion verdict; false whenever the pair is not nested.
    pub verdict: bool,
    /// Nested and `r2 <= 2t + 1` (m even) or `r2 <= 2t` (m odd).
    pub closed_form: bool,
}

/// Checks `(RM(floor((m-1)/2) - t, m), RM(r2, m))` against the closed-form threshold.
pub fn rm_csst_threshold(m: usize, t: usize, r2: usize) -> Result<RmThreshold> {
    if m == 0 {
        return Err(Error::OutOfRange("m must be positive".into()));
    }
    let top = (m - 1) / 2;
    if t > top {
        return Err(Error::OutOfRange(format!("t = {t} exceeds floor((m-1)/2) = {top}")));
    }
    if r2 > m {
        return Err(Error::OutOfRange(format!("r2 = {r2} exceeds m = {m}")));
    }
    let r1 = top - t;
    let nested = r2 <= r1;
    let verdict = nested && csst_binary_star(&CssPair::new(reed_muller(r1, m)?, reed_muller(r2, m)?)?)?.is_csst;
    let limit = if m % 2 == 0 { 2 * t + 1 } else { 2 * t };
    Ok(RmThreshold { m, t, r1, r2, nested, verdict, closed_form: nested && r2 <= limit })
}
