//! Length doubling `C^φ = {(x, φ(x)) : x ∈ C}` of a CSS pair.

use rayon::prelude::*;

use crate::codelin::{Codeword, LinearCode, Matrix};
use crate::csst::CssPair;
use crate::error::{check_budget, Error, Result};

/// A linear map on C1, given on the canonical information set: row `i` is the
/// image of the `i`-th RREF generator of C1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Phi {
    Identity,
    Matrix(Matrix),
}

impl Phi {
    fn check(&self, c1: &LinearCode) -> Result<()> {
        if let Phi::Matrix(m) = self {
            if m.spec() != c1.spec() {
                return Err(Error::FieldMismatch(c1.spec().s(), m.spec().s()));
            }
            if m.nrows() != c1.dim() || m.ncols() != c1.length() {
                return Err(Error::DimensionMismatch(format!(
                    "phi is {}x{}, expected {}x{}",
                    m.nrows(),
                    m.ncols(),
                    c1.dim(),
                    c1.length()
                )));
            }
        }
        Ok(())
    }

    /// `φ(x)` for a codeword `x ∈ C1`.
    fn apply(&self, c1: &LinearCode, x: &Codeword) -> Codeword {
        match self {
            Phi::Identity => x.clone(),
            Phi::Matrix(m) => m.left_mul(&c1.message_of(x)).expect("dimensions checked"),
        }
    }
}

fn double(c1: &LinearCode, c: &LinearCode, phi: &Phi) -> Result<LinearCode> {
    let rows = c
        .generators()
        .iter()
        .map(|x| x.concat(&phi.apply(c1, x)))
        .collect::<Result<Vec<_>>>()?;
    LinearCode::from_codewords(c.spec(), 2 * c.length(), rows)
}

/// `(C1^φ, C2^φ)` for a CSS pair `(C1, C2)`.
pub fn double_code(pair: &CssPair, phi: &Phi) -> Result<CssPair> {
    phi.check(pair.c1())?;
    let c1 = double(pair.c1(), pair.c1(), phi)?;
    let c2 = double(pair.c1(), pair.c2(), phi)?;
    CssPair::new(c1, c2)
}

/// Whether `wt(tr x ⋆ tr y ⋆ tr z) + wt(tr φx ⋆ tr φy ⋆ tr φz)` is even for
/// all `x, y ∈ C1` and `z ∈ C2`.
///
/// Enumerates every triple of codewords (`q^(2 k1 + k2)` of them, bounded by
/// `cap`) rather than basis triples.
pub fn phi_condition_check(pair: &CssPair, phi: &Phi, cap: u128) -> Result<bool> {
    let q = pair.spec().q() as u64;
    check_budget(q, 2 * pair.c1().dim() + pair.c2().dim(), cap)?;
    let doubled = double_code(pair, phi)?;
    let traced = |c: &LinearCode| -> Result<Vec<Codeword>> {
        Ok(c.codewords(cap)?.iter().map(Codeword::trace).collect())
    };
    let w1 = traced(doubled.c1())?;
    let w2 = traced(doubled.c2())?;
    Ok(w1.par_iter().enumerate().all(|(i, x)| {
        w1[i..].iter().all(|y| {
            let xy = x.star_unchecked(y);
            w2.iter().all(|z| xy.star_unchecked(z).weight() % 2 == 0)
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codelin::DEFAULT_CAP;
    use crate::csst::{css_parameters, csst_qary};
    use crate::gf2e::FieldSpec;

    fn example_one() -> CssPair {
        let f8 = FieldSpec::with_degree(3).unwrap();
        let c1 = LinearCode::from_generators(f8, 4, &[vec![1, 2, 4, 7], vec![1, 1, 1, 1]]).unwrap();
        let c2 = LinearCode::from_generators(f8, 4, &[vec![1, 2, 4, 7]]).unwrap();
        CssPair::new(c1, c2).unwrap()
    }

    #[test]
    fn identity_doubling_repairs_example() {
        let pair = example_one();
        assert!(!csst_qary(&pair).is_csst);
        let d = double_code(&pair, &Phi::Identity).unwrap();
        assert_eq!(d.length(), 8);
        assert_eq!(d.k(), pair.k());
        assert!(csst_qary(&d).is_csst);
        assert!(phi_condition_check(&pair, &Phi::Identity, DEFAULT_CAP).unwrap());
        let before = css_parameters(&pair, DEFAULT_CAP).unwrap();
        let after = css_parameters(&d, DEFAULT_CAP).unwrap();
        assert!(after.d >= before.d);
    }

    #[test]
    fn permutation_phi_passes() {
        let pair = example_one();
        let f8 = pair.spec();
        let perm: Vec<Vec<u32>> = pair.c1().generators().iter().map(|g| g.project(&[2, 0, 3, 1]).values()).collect();
        let phi = Phi::Matrix(Matrix::new(f8, 4, &perm).unwrap());
        assert!(phi_condition_check(&pair, &phi, DEFAULT_CAP).unwrap());
        assert!(csst_qary(&double_code(&pair, &phi).unwrap()).is_csst);
    }

    #[test]
    fn wrong_shape_rejected() {
        let pair = example_one();
        let phi = Phi::Matrix(Matrix::new(pair.spec(), 3, &[vec![1, 0, 0]]).unwrap());
        assert!(matches!(double_code(&pair, &phi), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn parity_check_matches_criterion_on_doubled_pair() {
        let f4 = FieldSpec::with_degree(2).unwrap();
        let c1 = LinearCode::from_generators(f4, 3, &[vec![1, 2, 0], vec![0, 1, 3]]).unwrap();
        let c2 = LinearCode::from_generators(f4, 3, &[vec![1, 2, 0]]).unwrap();
        let pair = CssPair::new(c1, c2).unwrap();
        let mut failing = 0;
        for seed in 0u32..64 {
            let rows: Vec<Vec<u32>> =
                (0..2).map(|i| (0..3).map(|j| (seed.wrapping_mul(2654435761) >> (4 * i + 2 * j + 3)) & 3).collect()).collect();
            let phi = Phi::Matrix(Matrix::new(f4, 3, &rows).unwrap());
            let by_parity = phi_condition_check(&pair, &phi, DEFAULT_CAP).unwrap();
            let by_trace = csst_qary(&double_code(&pair, &phi).unwrap()).is_csst;
            assert_eq!(by_parity, by_trace);
            failing += usize::from(!by_parity);
        }
        assert!(failing > 0);
    }
}
