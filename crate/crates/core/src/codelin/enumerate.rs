//! Exhaustive codeword enumeration over an F_2-basis in Gray-code order.
//!
//! A code of F_q-dimension k is an F_2-space of dimension s*k, so walking the
//! binary reflected Gray code over that basis visits every codeword with a
//! single vector XOR per step. Large ranges are split into fixed-size chunks
//! and reduced in chunk order, so results do not depend on the thread count.

use rayon::prelude::*;

use super::vector::Codeword;

const SEQUENTIAL_BITS: usize = 14;
const CHUNK_BITS: usize = 12;

#[inline]
fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

fn start_vector(basis: &[Codeword], index: u64) -> Codeword {
    let g = gray(index);
    let mut cur = Codeword::zeros(basis[0].spec(), basis[0].len());
    for (b, v) in basis.iter().enumerate() {
        if g >> b & 1 == 1 {
            cur.xor_assign(v);
        }
    }
    cur
}

/// Calls `f(gray_index, word)` for every vector in the F_2-span of `basis`,
/// starting with the zero vector. `basis` must be nonempty.
pub(crate) fn for_each_in_span(basis: &[Codeword], mut f: impl FnMut(u64, &Codeword)) {
    let m = basis.len();
    assert!(m < 64, "span too large to enumerate");
    let mut cur = Codeword::zeros(basis[0].spec(), basis[0].len());
    f(0, &cur);
    for i in 1..(1u64 << m) {
        cur.xor_assign(&basis[i.trailing_zeros() as usize]);
        f(gray(i), &cur);
    }
}

/// Minimum and maximum Hamming weight over span vectors whose Gray index has
/// a set bit at position `>= low_bits`. With `low_bits = 0` this ranges over
/// all nonzero vectors; otherwise over vectors outside the span of the first
/// `low_bits` basis vectors. Returns `None` if no vector qualifies.
pub(crate) fn weight_extrema(basis: &[Codeword], low_bits: usize) -> Option<(usize, usize)> {
    let m = basis.len();
    if m <= low_bits {
        return None;
    }
    let scan = |start: u64, len: u64| -> Option<(usize, usize)> {
        let mut cur = start_vector(basis, start);
        let mut best: Option<(usize, usize)> = None;
        for i in start..start + len {
            if i != start {
                cur.xor_assign(&basis[i.trailing_zeros() as usize]);
            }
            if gray(i) >> low_bits == 0 {
                continue;
            }
            let w = cur.weight();
            best = Some(match best {
                None => (w, w),
                Some((lo, hi)) => (lo.min(w), hi.max(w)),
            });
        }
        best
    };
    let merge = |a: Option<(usize, usize)>, b: Option<(usize, usize)>| match (a, b) {
        (None, x) | (x, None) => x,
        (Some((a0, a1)), Some((b0, b1))) => Some((a0.min(b0), a1.max(b1))),
    };
    if m <= SEQUENTIAL_BITS {
        return scan(0, 1 << m);
    }
    let chunks = 1u64 << (m - CHUNK_BITS);
    (0..chunks)
        .into_par_iter()
        .map(|c| scan(c << CHUNK_BITS, 1 << CHUNK_BITS))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(None, merge)
}

/// Like [`weight_extrema`] but visits at most `limit` Gray indices. The
/// minimum returned is an upper bound on the true minimum.
pub(crate) fn partial_min_weight(basis: &[Codeword], low_bits: usize, limit: u64) -> Option<usize> {
    let m = basis.len();
    if m <= low_bits {
        return None;
    }
    // Put the outside-subspace basis vectors first so the prefix of the walk
    // mostly visits qualifying vectors.
    let mut order: Vec<Codeword> = basis[low_bits..].to_vec();
    order.extend_from_slice(&basis[..low_bits]);
    let outer = m - low_bits;
    let total = if m >= 64 { u64::MAX } else { 1u64 << m };
    let outer_mask = if outer >= 64 { u64::MAX } else { (1u64 << outer) - 1 };
    let mut cur = Codeword::zeros(basis[0].spec(), basis[0].len());
    let mut best: Option<usize> = None;
    for i in 1..total.min(limit.max(2)) {
        cur.xor_assign(&order[i.trailing_zeros() as usize]);
        if gray(i) & outer_mask == 0 {
            continue;
        }
        let w = cur.weight();
        best = Some(best.map_or(w, |b| b.min(w)));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn visits_every_vector_once() {
        let basis: Vec<Codeword> = (0..5)
            .map(|i| {
                let mut bits = vec![0u8; 7];
                bits[i] = 1;
                bits[i + 2] = 1;
                Codeword::from_bits(&bits)
            })
            .collect();
        let mut seen = std::collections::HashSet::new();
        for_each_in_span(&basis, |_, v| {
            assert!(seen.insert(v.clone()));
        });
        assert_eq!(seen.len(), 32);
    }

    #[test]
    fn parallel_matches_sequential() {
        let mut state = 12345u64;
        let basis: Vec<Codeword> = (0..18)
            .map(|_| {
                let bits: Vec<u8> = (0..40)
                    .map(|_| {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                        (state >> 63) as u8
                    })
                    .collect();
                Codeword::from_bits(&bits)
            })
            .collect();
        let mut lo = usize::MAX;
        let mut hi = 0;
        for_each_in_span(&basis, |g, v| {
            if g >> 3 != 0 {
                lo = lo.min(v.weight());
                hi = hi.max(v.weight());
            }
        });
        assert_eq!(weight_extrema(&basis, 3), Some((lo, hi)));
    }
}
