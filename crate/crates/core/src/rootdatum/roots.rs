//! Root generation by closure under simple reflections.

use std::collections::HashSet;

use crate::error::{Error, Result};

use super::{add, scale, BasedRootDatum};

/// Positive roots and coroots of a based root datum, paired by index.
///
/// Entries are sorted by height and the first `semisimple_rank` entries are
/// the simple roots in their given order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    root_coefficients: Vec<Vec<i64>>,
    coroot_coefficients: Vec<Vec<i64>>,
}

impl RootSystem {
    pub(crate) fn lift(
        simple_roots: &[Vec<i64>],
        simple_coroots: &[Vec<i64>],
        root_coefficients: Vec<Vec<i64>>,
        coroot_coefficients: Vec<Vec<i64>>,
    ) -> Self {
        let rank = simple_roots.first().map_or(0, Vec::len);
        let combine = |basis: &[Vec<i64>], coeffs: &[i64]| {
            basis
                .iter()
                .zip(coeffs)
                .fold(vec![0; rank], |acc, (b, &k)| add(&acc, &scale(k, b)))
        };
        RootSystem {
            roots: root_coefficients
                .iter()
                .map(|c| combine(simple_roots, c))
                .collect(),
            coroots: coroot_coefficients
                .iter()
                .map(|c| combine(simple_coroots, c))
                .collect(),
            root_coefficients,
            coroot_coefficients,
        }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Positive roots, vectors in `X`.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    /// Positive coroots, vectors in `X^vee`; `coroots()[k]` belongs to `roots()[k]`.
    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    /// Coefficients of each positive root in the simple roots.
    pub fn root_coefficients(&self) -> &[Vec<i64>] {
        &self.root_coefficients
    }

    /// Coefficients of each positive coroot in the simple coroots.
    pub fn coroot_coefficients(&self) -> &[Vec<i64>] {
        &self.coroot_coefficients
    }

    /// Index of a positive coroot, if `v` is one.
    pub fn coroot_index(&self, v: &[i64]) -> Option<usize> {
        self.coroots.iter().position(|c| c == v)
    }

    /// Index of a positive root, if `v` is one.
    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.roots.iter().position(|c| c == v)
    }

    /// All roots, positive ones followed by their negatives.
    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        let mut v = self.roots.clone();
        v.extend(self.roots.iter().map(|r| scale(-1, r)));
        v
    }

    /// All coroots, positive ones followed by their negatives.
    pub fn all_coroots(&self) -> Vec<Vec<i64>> {
        let mut v = self.coroots.clone();
        v.extend(self.coroots.iter().map(|r| scale(-1, r)));
        v
    }
}

/// Largest number of positive roots of a finite root system of rank `n`.
fn positive_root_ceiling(n: usize) -> usize {
    (n * n).max(120)
}

/// Positive roots of a Cartan matrix as paired coefficient vectors
/// `(root coefficients, coroot coefficients)`.
///
/// Closure under simple reflections: `s_i` sends the root with coefficients
/// `c` to `c - <alpha, alpha_i^vee> e_i`, and the coroot with coefficients `d`
/// to `d - <alpha_i, alpha^vee> e_i`.
pub fn positive_root_coefficients(c: &[Vec<i64>]) -> Result<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    let n = c.len();
    let ceiling = positive_root_ceiling(n);
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut found: Vec<(Vec<i64>, Vec<i64>)> = (0..n).map(|i| (unit(i), unit(i))).collect();
    let mut seen: HashSet<Vec<i64>> = found.iter().map(|(r, _)| r.clone()).collect();
    let mut k = 0;
    while k < found.len() {
        let (r, d) = found[k].clone();
        for i in 0..n {
            if r.iter().enumerate().all(|(j, &x)| x == (j == i) as i64) {
                continue;
            }
            // <alpha, alpha_i^vee> = sum_j r_j C[i][j]; <alpha_i, alpha^vee> = sum_j d_j C[j][i]
            let p: i64 = (0..n).map(|j| r[j] * c[i][j]).sum();
            let q: i64 = (0..n).map(|j| d[j] * c[j][i]).sum();
            let mut r2 = r.clone();
            r2[i] -= p;
            let mut d2 = d.clone();
            d2[i] -= q;
            if r2.iter().any(|&x| x < 0) {
                return Err(Error::NotFiniteType(format!(
                    "reflection produced a root of mixed sign: {r2:?}"
                )));
            }
            if seen.insert(r2.clone()) {
                found.push((r2, d2));
                if found.len() > ceiling {
                    return Err(Error::NonFiniteType(ceiling));
                }
            }
        }
        k += 1;
    }
    found.sort_by(|(a, _), (b, _)| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    Ok(found.into_iter().unzip())
}

/// The positive system of a root datum, recomputed from its simple data.
pub fn generate_roots(datum: &BasedRootDatum) -> Result<RootSystem> {
    let (rc, cc) = positive_root_coefficients(datum.cartan_matrix())?;
    Ok(RootSystem::lift(
        datum.simple_roots(),
        datum.simple_coroots(),
        rc,
        cc,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdatum::{pair, CartanType};

    fn datum(s: &str) -> BasedRootDatum {
        BasedRootDatum::adjoint(&s.parse::<CartanType>().unwrap()).unwrap()
    }

    #[test]
    fn a1_and_a2() {
        let a1 = datum("A1");
        assert_eq!(generate_roots(&a1).unwrap().roots(), &[vec![1]]);
        let a2 = datum("A2");
        let rs = generate_roots(&a2).unwrap();
        assert_eq!(rs.root_coefficients(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn g2_by_independent_closure() {
        // brute-force closure over all signed roots in the coefficient plane
        let g2 = datum("G2");
        let c = g2.cartan_matrix();
        let mut all: HashSet<Vec<i64>> = [vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]]
            .into_iter()
            .collect();
        loop {
            let mut next = all.clone();
            for r in &all {
                for i in 0..2 {
                    let p: i64 = (0..2).map(|j| r[j] * c[i][j]).sum();
                    let mut s = r.clone();
                    s[i] -= p;
                    next.insert(s);
                }
            }
            if next.len() == all.len() {
                break;
            }
            all = next;
        }
        assert_eq!(all.len(), 12);
        let rs = generate_roots(&g2).unwrap();
        assert_eq!(rs.len(), 6);
        // adjoint representation dimension: 2 * 6 + rank
        assert_eq!(2 * rs.len() + 2, 14);
    }

    #[test]
    fn roots_pair_to_two_with_coroots() {
        for s in ["B4", "C3", "F4", "G2", "E7"] {
            let d = datum(s);
            let rs = d.root_system();
            for (r, c) in rs.roots().iter().zip(rs.coroots()) {
                assert_eq!(pair(r, c), 2, "{s}");
            }
        }
    }

    #[test]
    fn non_finite_is_rejected() {
        let hyper = vec![vec![2, -3], vec![-2, 2]];
        assert!(positive_root_coefficients(&hyper).is_err());
    }
}
