//! Root systems given as explicit vector sets inside a lattice.

use std::collections::HashSet;

use crate::error::{Error, Result};

use super::{add, classify, CartanType};

/// A reduced root system given by its vectors, with a positive system chosen
/// by a height covector (lexicographic order on ties).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSubsystem {
    positive: Vec<Vec<i64>>,
    simple: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    cartan_type: CartanType,
}

impl RootSubsystem {
    /// `roots` must be closed under negation; `form` is a Weyl-invariant
    /// symmetric form and `height` a linear functional used for positivity.
    pub fn new(
        roots: &[Vec<i64>],
        form: &dyn Fn(&[i64], &[i64]) -> i128,
        height: &dyn Fn(&[i64]) -> i64,
    ) -> Result<Self> {
        let set: HashSet<&Vec<i64>> = roots.iter().collect();
        for r in roots {
            let neg: Vec<i64> = r.iter().map(|x| -x).collect();
            if !set.contains(&neg) {
                return Err(Error::InternalInconsistency(format!(
                    "root set is not closed under negation at {r:?}"
                )));
            }
        }
        let is_positive = |v: &[i64]| {
            let h = height(v);
            h > 0 || (h == 0 && v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
        };
        let mut positive: Vec<Vec<i64>> = roots.iter().filter(|v| is_positive(v)).cloned().collect();
        positive.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
        positive.dedup();
        let pos_set: HashSet<&Vec<i64>> = positive.iter().collect();
        let simple: Vec<Vec<i64>> = positive
            .iter()
            .filter(|v| {
                !positive
                    .iter()
                    .any(|a| a != *v && pos_set.contains(&super::sub(v, a)))
            })
            .cloned()
            .collect();
        let n = simple.len();
        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            let bii = form(&simple[i], &simple[i]);
            if bii <= 0 {
                return Err(Error::InternalInconsistency(format!(
                    "root {:?} has nonpositive length",
                    simple[i]
                )));
            }
            for j in 0..n {
                let num = 2 * form(&simple[i], &simple[j]);
                if num % bii != 0 {
                    return Err(Error::InternalInconsistency(format!(
                        "non-integral Cartan entry for {:?}, {:?}",
                        simple[i], simple[j]
                    )));
                }
                cartan[i][j] = (num / bii) as i64;
            }
        }
        let cartan_type = classify(&cartan)?;
        if cartan_type.num_positive_roots() != positive.len() {
            return Err(Error::InternalInconsistency(format!(
                "{} positive roots but type {cartan_type}",
                positive.len()
            )));
        }
        // every positive root is an N-combination of the simple ones
        let mut reach: HashSet<Vec<i64>> = simple.iter().cloned().collect();
        let mut frontier: Vec<Vec<i64>> = simple.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for s in &simple {
                    let w = add(v, s);
                    if pos_set.contains(&w) && reach.insert(w.clone()) {
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        if reach.len() != positive.len() {
            return Err(Error::InternalInconsistency(
                "simple roots do not generate the positive system".into(),
            ));
        }
        Ok(RootSubsystem {
            positive,
            simple,
            cartan,
            cartan_type,
        })
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple
    }

    /// `C[i][j] = 2 B(s_i, s_j) / B(s_i, s_i)`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }
}
