//! Cartan matrices and Dynkin type recognition.
//!
//! Convention: `C[i][j] = <alpha_j, alpha_i^vee>`, so `|C[i][j]| > 1` means
//! `alpha_j` is longer than `alpha_i`. Nodes are numbered as in Bourbaki.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    BC,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
            Family::BC => "BC",
        };
        f.write_str(s)
    }
}

/// One irreducible component, e.g. `B3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl Component {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A | Family::BC => rank >= 1,
            Family::B | Family::C => rank >= 1,
            Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::Parse(format!("no root system of type {family}{rank}")));
        }
        Ok(Component { family, rank })
    }

    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::BC => n * n + n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    pub fn weyl_order(&self) -> BigUint {
        let n = self.rank as u64;
        let fact = |k: u64| -> BigUint { (1..=k).map(BigUint::from).product() };
        let pow2 = |k: u64| BigUint::from(1u8) << k;
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C | Family::BC => pow2(n) * fact(n),
            Family::D => pow2(n - 1) * fact(n),
            Family::E => BigUint::from(match n {
                6 => 51_840u64,
                7 => 2_903_040,
                _ => 696_729_600,
            }),
            Family::F => BigUint::from(1152u32),
            Family::G => BigUint::from(12u32),
        }
    }

    /// Components of the isomorphic reduced type, with low-rank coincidences
    /// folded: `B1 = C1 = A1`, `C2 = B2`, `D2 = A1 + A1`, `D3 = A3`.
    pub fn iso_class(&self) -> Vec<Component> {
        let c = |family, rank| Component { family, rank };
        match (self.family, self.rank) {
            (Family::B | Family::C, 1) => vec![c(Family::A, 1)],
            (Family::C, 2) => vec![c(Family::B, 2)],
            (Family::D, 2) => vec![c(Family::A, 1), c(Family::A, 1)],
            (Family::D, 3) => vec![c(Family::A, 3)],
            _ => vec![*self],
        }
    }

    /// Type of the dual root system.
    pub fn dual(&self) -> Component {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        Component {
            family,
            rank: self.rank,
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Reductive type: irreducible components plus a central torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct CartanType {
    pub components: Vec<Component>,
    pub torus_rank: usize,
}

impl CartanType {
    pub fn new(mut components: Vec<Component>, torus_rank: usize) -> Self {
        components.sort();
        CartanType {
            components,
            torus_rank,
        }
    }

    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        Ok(CartanType::new(vec![Component::new(family, rank)?], 0))
    }

    pub fn semisimple_rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn rank(&self) -> usize {
        self.semisimple_rank() + self.torus_rank
    }

    pub fn is_simple(&self) -> bool {
        self.components.len() == 1
    }

    pub fn num_positive_roots(&self) -> usize {
        self.components.iter().map(Component::num_positive_roots).sum()
    }

    pub fn weyl_order(&self) -> BigUint {
        self.components.iter().map(Component::weyl_order).product()
    }

    pub fn iso_class(&self) -> CartanType {
        CartanType::new(
            self.components.iter().flat_map(|c| c.iso_class()).collect(),
            self.torus_rank,
        )
    }

    /// Same type up to isomorphism of root systems (torus rank included).
    pub fn is_isomorphic(&self, other: &CartanType) -> bool {
        self.iso_class() == other.iso_class()
    }

    pub fn dual(&self) -> CartanType {
        CartanType::new(
            self.components.iter().map(Component::dual).collect(),
            self.torus_rank,
        )
    }

    /// Semisimple part only.
    pub fn without_torus(&self) -> CartanType {
        CartanType::new(self.components.clone(), 0)
    }

    pub fn direct_sum(&self, other: &CartanType) -> CartanType {
        let mut c = self.components.clone();
        c.extend(other.components.iter().copied());
        CartanType::new(c, self.torus_rank + other.torus_rank)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        if self.torus_rank > 0 || parts.is_empty() {
            parts.push(format!("T{}", self.torus_rank));
        }
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses strings such as `A2`, `B3+A1`, `E6+T1`, `T0`.
    fn from_str(s: &str) -> Result<Self> {
        let mut comps = Vec::new();
        let mut torus = 0;
        for part in s.split('+').map(str::trim) {
            let split = part
                .find(|c: char| c.is_ascii_digit())
                .ok_or_else(|| Error::Parse(format!("bad type component `{part}`")))?;
            let (fam, num) = part.split_at(split);
            let rank: usize = num
                .parse()
                .map_err(|_| Error::Parse(format!("bad rank in `{part}`")))?;
            let family = match fam.to_ascii_uppercase().as_str() {
                "A" => Family::A,
                "B" => Family::B,
                "C" => Family::C,
                "D" => Family::D,
                "E" => Family::E,
                "F" => Family::F,
                "G" => Family::G,
                "BC" => Family::BC,
                "T" => {
                    torus += rank;
                    continue;
                }
                _ => return Err(Error::Parse(format!("unknown family `{fam}`"))),
            };
            comps.push(Component::new(family, rank)?);
        }
        Ok(CartanType::new(comps, torus))
    }
}

/// Cartan matrix of an irreducible type in Bourbaki numbering.
pub fn cartan_matrix(family: Family, n: usize) -> Result<Vec<Vec<i64>>> {
    Component::new(family, n)?;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, cij: i64, cji: i64| {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    match family {
        Family::A => (0..n.saturating_sub(1)).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B | Family::C if n == 1 => {}
        Family::B => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -1, -2);
        }
        Family::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -2, -1);
        }
        Family::D if n == 2 => {}
        Family::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(2, 3, -1, -1);
            link(1, 3, -1, -1);
            (3..n - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => link(0, 1, -3, -1),
        Family::BC => {
            return Err(Error::Parse(
                "BC is non-reduced and has no Cartan matrix".into(),
            ))
        }
    }
    Ok(c)
}

/// Block-diagonal Cartan matrix of a semisimple type.
pub fn cartan_matrix_of(t: &CartanType) -> Result<Vec<Vec<i64>>> {
    let n = t.semisimple_rank();
    let mut out = vec![vec![0; n]; n];
    let mut off = 0;
    for comp in &t.components {
        let c = cartan_matrix(comp.family, comp.rank)?;
        for i in 0..comp.rank {
            for j in 0..comp.rank {
                out[off + i][off + j] = c[i][j];
            }
        }
        off += comp.rank;
    }
    Ok(out)
}

/// A recognized irreducible component together with its nodes listed in
/// Bourbaki order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifiedComponent {
    pub component: Component,
    pub nodes: Vec<usize>,
}

/// Recognizes a generalized Cartan matrix of finite type.
pub fn classify(c: &[Vec<i64>]) -> Result<CartanType> {
    let comps = classify_components(c)?;
    Ok(CartanType::new(
        comps.into_iter().map(|c| c.component).collect(),
        0,
    ))
}

/// Like [`classify`], keeping the node order of each component. Components
/// are listed by their smallest node.
pub fn classify_components(c: &[Vec<i64>]) -> Result<Vec<ClassifiedComponent>> {
    let n = c.len();
    let bad = |msg: String| Error::NotFiniteType(msg);
    for (i, row) in c.iter().enumerate() {
        if row.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: row.len(),
            });
        }
        if row[i] != 2 {
            return Err(bad(format!("diagonal entry {i} is {}", row[i])));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if row[j] > 0 {
                return Err(bad(format!("positive off-diagonal entry at ({i},{j})")));
            }
            if (row[j] == 0) != (c[j][i] == 0) {
                return Err(bad(format!("asymmetric zero pattern at ({i},{j})")));
            }
            if row[j] * c[j][i] > 3 {
                return Err(bad(format!("bond ({i},{j}) has multiplicity > 3")));
            }
        }
    }

    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && c[i][j] != 0).collect())
        .collect();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut nodes = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < nodes.len() {
            for &j in &adj[nodes[k]] {
                if !seen[j] {
                    seen[j] = true;
                    nodes.push(j);
                }
            }
            k += 1;
        }
        nodes.sort_unstable();
        out.push(classify_connected(c, &adj, &nodes)?);
    }
    Ok(out)
}

fn classify_connected(
    c: &[Vec<i64>],
    adj: &[Vec<usize>],
    nodes: &[usize],
) -> Result<ClassifiedComponent> {
    let bad = |msg: &str| Error::NotFiniteType(format!("{msg} on nodes {nodes:?}"));
    let k = nodes.len();
    let edges: usize = nodes.iter().map(|&i| adj[i].len()).sum::<usize>() / 2;
    if edges + 1 != k {
        return Err(bad("Dynkin diagram has a cycle"));
    }
    let done = |family, rank, order: Vec<usize>| {
        Ok(ClassifiedComponent {
            component: Component { family, rank },
            nodes: order,
        })
    };
    if k == 1 {
        return done(Family::A, 1, nodes.to_vec());
    }
    let bond = |i: usize, j: usize| c[i][j] * c[j][i];
    // `longer(i, j)`: alpha_j is longer than alpha_i
    let longer = |i: usize, j: usize| c[i][j] < -1;

    let mut multi = Vec::new();
    for &i in nodes {
        for &j in &adj[i] {
            if i < j && bond(i, j) > 1 {
                multi.push((i, j));
            }
        }
    }

    if let Some(&(i, j)) = multi.iter().find(|&&(i, j)| bond(i, j) == 3) {
        if k != 2 {
            return Err(bad("triple bond in a component of rank > 2"));
        }
        // G2: alpha_1 short, alpha_2 long
        let order = if longer(i, j) { vec![i, j] } else { vec![j, i] };
        return done(Family::G, 2, order);
    }

    let max_deg = nodes.iter().map(|&i| adj[i].len()).max().unwrap_or(0);
    if multi.len() > 1 {
        return Err(bad("more than one multiple bond"));
    }
    if let Some(&(i, j)) = multi.first() {
        if max_deg > 2 {
            return Err(bad("branch node together with a double bond"));
        }
        let path = path_order(adj, nodes);
        if k == 2 {
            // B2: alpha_1 long, alpha_2 short
            let order = if longer(j, i) { vec![i, j] } else { vec![j, i] };
            return done(Family::B, 2, order);
        }
        let pos = |x: usize| path.iter().position(|&y| y == x).unwrap();
        let (pi, pj) = (pos(i).min(pos(j)), pos(i).max(pos(j)));
        if pi == 0 || pj == k - 1 {
            // double bond at an end; orient the path so it sits at the end
            let mut order = path.clone();
            if pi == 0 {
                order.reverse();
            }
            let leaf = order[k - 1];
            let inner = order[k - 2];
            let family = if longer(leaf, inner) {
                Family::B
            } else {
                Family::C
            };
            return done(family, k, order);
        }
        if k == 4 {
            // F4: alpha_1, alpha_2 long
            let mut order = path.clone();
            let (m1, m2) = (order[1], order[2]);
            if longer(m1, m2) {
                order.reverse();
            }
            return done(Family::F, 4, order);
        }
        return Err(bad("double bond in the interior of a long chain"));
    }

    // simply laced
    if max_deg <= 2 {
        return done(Family::A, k, path_order(adj, nodes));
    }
    let branches: Vec<usize> = nodes.iter().copied().filter(|&i| adj[i].len() >= 3).collect();
    if branches.len() > 1 || adj[branches[0]].len() > 3 {
        return Err(bad("diagram is not of finite type"));
    }
    let centre = branches[0];
    let mut arms: Vec<Vec<usize>> = adj[centre]
        .iter()
        .map(|&s| {
            let mut arm = vec![s];
            let mut prev = centre;
            let mut cur = s;
            while let Some(&nx) = adj[cur].iter().find(|&&x| x != prev) {
                arm.push(nx);
                prev = cur;
                cur = nx;
            }
            arm
        })
        .collect();
    arms.sort_by_key(|a| (a.len(), a[a.len() - 1]));
    let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
    match lens.as_slice() {
        [1, 1, l] => {
            // D_n: long arm from its leaf inward, centre, then the two short leaves
            let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
            order.push(centre);
            order.push(arms[0][0]);
            order.push(arms[1][0]);
            if *l == 1 {
                // D4: start from the smallest leaf
                let mut leaves = vec![arms[0][0], arms[1][0], arms[2][0]];
                leaves.sort_unstable();
                order = vec![leaves[0], centre, leaves[1], leaves[2]];
            }
            done(Family::D, k, order)
        }
        [1, 2, l] if (2..=4).contains(l) => {
            // E: alpha_1 - alpha_3 - alpha_4 - alpha_5 ..., alpha_2 on alpha_4
            let (short, two, long) = (&arms[0], &arms[1], &arms[2]);
            let mut order = vec![two[1], short[0], two[0], centre];
            order.extend(long.iter().copied());
            done(Family::E, k, order)
        }
        _ => Err(bad("diagram is not of finite type")),
    }
}

/// Nodes of a path-shaped component from the endpoint with the smaller index.
fn path_order(adj: &[Vec<usize>], nodes: &[usize]) -> Vec<usize> {
    let start = nodes
        .iter()
        .copied()
        .filter(|&i| adj[i].len() <= 1)
        .min()
        .expect("a path has an endpoint");
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&nx) = adj[cur].iter().find(|&&x| x != prev) {
        order.push(nx);
        prev = cur;
        cur = nx;
    }
    order
}
