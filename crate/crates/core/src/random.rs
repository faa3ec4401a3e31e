//! Seeded generators for random codes and CSS pairs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codelin::{Codeword, LinearCode};
use crate::csst::CssPair;
use crate::gf2e::FieldSpec;

pub type CodeRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CodeRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut impl Rng, spec: FieldSpec, n: usize) -> Codeword {
    let values: Vec<u32> = (0..n).map(|_| rng.gen_range(0..spec.q())).collect();
    Codeword::from_values(spec, &values).expect("values are in range")
}

/// Span of `rows` uniformly random vectors; the dimension may fall short of `rows`.
pub fn random_code(rng: &mut impl Rng, spec: FieldSpec, n: usize, rows: usize) -> LinearCode {
    let gens = (0..rows).map(|_| random_word(rng, spec, n)).collect();
    LinearCode::from_codewords(spec, n, gens).expect("consistent rows")
}

/// Random element of a code.
pub fn random_codeword(rng: &mut impl Rng, c: &LinearCode) -> Codeword {
    let msg: Vec<u32> = (0..c.dim()).map(|_| rng.gen_range(0..c.spec().q())).collect();
    c.encode(&msg).expect("message length matches")
}

/// Span of `rows` random codewords of `c`.
pub fn random_subcode(rng: &mut impl Rng, c: &LinearCode, rows: usize) -> LinearCode {
    let gens = (0..rows).map(|_| random_codeword(rng, c)).collect();
    LinearCode::from_codewords(c.spec(), c.length(), gens).expect("consistent rows")
}

/// `C1` from `k1` random rows and `C2` from `k2` random codewords of `C1`.
pub fn random_pair(rng: &mut impl Rng, spec: FieldSpec, n: usize, k1: usize, k2: usize) -> CssPair {
    let c1 = random_code(rng, spec, n, k1);
    let c2 = random_subcode(rng, &c1, k2);
    CssPair::new(c1, c2).expect("subcode is nested")
}

/// A binary pair with `C2 ⊆ C1 ∩ (C1 ⋆ C1)^⊥`, so the star criterion holds.
pub fn random_binary_csst_pair(rng: &mut impl Rng, n: usize, k1: usize, k2: usize) -> CssPair {
    let c1 = random_code(rng, FieldSpec::binary(), n, k1);
    let room = c1.intersection(&c1.star_power(2).dual()).expect("same length");
    let c2 = random_subcode(rng, &room, k2);
    CssPair::new(c1, c2).expect("subcode is nested")
}

/// Binary self-orthogonal code grown by `steps` random vectors, each drawn
/// from `(S + <1>)^⊥` so that it is even and orthogonal to the current code.
pub fn random_self_orthogonal(rng: &mut impl Rng, n: usize, steps: usize) -> LinearCode {
    let spec = FieldSpec::binary();
    let ones = LinearCode::repetition(spec, n);
    let mut s = LinearCode::zero(spec, n);
    for _ in 0..steps {
        let room = s.sum(&ones).expect("same length").dual();
        if room.is_zero() {
            break;
        }
        let v = random_codeword(rng, &room);
        s = LinearCode::from_codewords(spec, n, s.generators().iter().cloned().chain([v]).collect()).expect("consistent rows");
    }
    s
}
