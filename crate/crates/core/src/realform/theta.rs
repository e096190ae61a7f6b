//! `θ` from a Satake diagram as `w_{0,M} ∘ τ`, where `τ` permutes the simple
//! coroots by the arrows on unpainted nodes and by the opposition involution
//! of `M` on painted nodes.

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{inverse_rational, IntMatrix};
use crate::rootdatum::scale;

use super::SatakeData;

/// The involution attached to a Satake diagram, as rows acting on coweights.
///
/// Needs a semisimple datum unless the diagram is trivial, in which case the
/// identity is returned.
pub fn theta_from_satake(satake: &SatakeData) -> Result<Vec<Vec<i64>>> {
    let d = satake.datum();
    let n = d.rank();
    let identity: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect();
    if satake.painted().is_empty() && satake.arrow_pairs().is_empty() {
        return Ok(identity);
    }
    if !d.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let r = d.semisimple_rank();
    let levi = satake.levi();
    let w0m = levi.longest_word();
    let coroots = d.simple_coroots();

    // opposition involution of M, read off from w_{0,M}
    let mut tau = satake.arrow().to_vec();
    for &i in satake.painted() {
        let img = scale(-1, &w0m.apply_coweight(&levi, &coroots[i]));
        tau[i] = coroots
            .iter()
            .position(|c| *c == img)
            .ok_or_else(|| Error::InternalInconsistency(format!(
                "w0 of M does not send coroot {i} to a negative simple coroot"
            )))?;
    }
    for i in 0..r {
        for j in 0..r {
            if d.cartan_matrix()[tau[i]][tau[j]] != d.cartan_matrix()[i][j] {
                return Err(Error::InvariantViolation(
                    "arrows do not define a diagram automorphism".into(),
                ));
            }
        }
    }

    // τ = Cor · P · Cor^{-1}, with Cor the matrix whose columns are the simple coroots
    let cor_rows: Vec<Vec<i64>> = (0..n).map(|i| (0..r).map(|k| coroots[k][i]).collect()).collect();
    let cor = IntMatrix::from_i64_rows(r, &cor_rows)?;
    let inv = inverse_rational(&cor).ok_or(Error::NotSemisimple)?;
    let mut tau_rows = vec![vec![0i64; n]; n];
    for (i, row) in tau_rows.iter_mut().enumerate() {
        for (j, out) in row.iter_mut().enumerate() {
            // (Cor P Cor^{-1})[i][j] = Σ_k Cor[i][τ(k)] Cor^{-1}[k][j]
            let mut acc = num_rational::BigRational::zero();
            for k in 0..r {
                let c = coroots[tau[k]][i];
                if c != 0 {
                    acc += &inv[k][j] * num_rational::BigRational::from_integer(c.into());
                }
            }
            if !acc.is_integer() {
                return Err(Error::InvariantViolation(
                    "diagram automorphism does not preserve the coweight lattice".into(),
                ));
            }
            *out = acc
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::InternalInconsistency("entry overflow".into()))?;
        }
    }

    // θ = w_{0,M} ∘ τ: columns are w_{0,M}(τ e_j)
    let mut theta = vec![vec![0i64; n]; n];
    for j in 0..n {
        let col: Vec<i64> = (0..n).map(|i| tau_rows[i][j]).collect();
        let img = w0m.apply_coweight(&levi, &col);
        for i in 0..n {
            theta[i][j] = img[i];
        }
    }
    Ok(theta)
}
