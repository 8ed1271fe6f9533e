//! Cartan matrices of the finite-type Dynkin diagrams.
//!
//! Nodes are numbered `1..=n` along the diagram: `A_n`, `B_n`, `C_n`, `F_4`
//! and `G_2` left to right with the multiple edge at the end; `D_n` has the
//! fork `n-1`, `n` hanging off `n-2`; `E_6`, `E_7` have a chain `1..n-1`
//! with `n` attached to `3`; `E_8` has the chain `1..7` with `8` attached
//! to `5`.
//!
//! The symmetrizer is not tabulated. It is solved from the matrix itself
//! (`d_i c_ij = d_j c_ji` along the diagram) and scaled so its minimum is 1.

use std::fmt;
use std::str::FromStr;

use super::FamilyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for DynkinType {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "A" => DynkinType::A,
            "B" => DynkinType::B,
            "C" => DynkinType::C,
            "D" => DynkinType::D,
            "E" => DynkinType::E,
            "F" => DynkinType::F,
            "G" => DynkinType::G,
            _ => return Err(FamilyError::UnsupportedType(s.to_owned())),
        })
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    pub kind: DynkinType,
    pub rank: usize,
    /// `c[i][j]`, zero-based.
    pub c: Vec<Vec<i64>>,
    pub d: Vec<i64>,
}

impl CartanData {
    /// Entry of the symmetrized matrix `DC`, one-based like the node labels.
    pub fn b(&self, i: usize, j: usize) -> i64 {
        self.d[i - 1] * self.c[i - 1][j - 1]
    }

    /// Symmetrizer entry for node `i` (one-based).
    pub fn d(&self, i: usize) -> i64 {
        self.d[i - 1]
    }

    pub fn r(&self) -> i64 {
        *self.d.iter().max().expect("rank is positive")
    }
}

fn unsupported(kind: DynkinType, rank: usize) -> FamilyError {
    FamilyError::UnsupportedType(format!("{kind}{rank}"))
}

pub fn cartan_data(kind: DynkinType, rank: usize) -> Result<CartanData, FamilyError> {
    let n = rank;
    let ok = match kind {
        DynkinType::A => n >= 1,
        DynkinType::B | DynkinType::C => n >= 2,
        DynkinType::D => n >= 4,
        DynkinType::E => (6..=8).contains(&n),
        DynkinType::F => n == 4,
        DynkinType::G => n == 2,
    };
    if !ok {
        return Err(unsupported(kind, rank));
    }
    // Simple edges as one-based pairs; the multiple edge is patched below.
    let mut edges: Vec<(usize, usize)> = match kind {
        DynkinType::A | DynkinType::B | DynkinType::C | DynkinType::F | DynkinType::G => {
            (1..n).map(|i| (i, i + 1)).collect()
        }
        DynkinType::D => {
            let mut e: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
            e.push((n - 2, n));
            e
        }
        DynkinType::E => {
            let (chain_end, branch) = if n == 8 { (7, 5) } else { (n - 1, 3) };
            let mut e: Vec<_> = (1..chain_end).map(|i| (i, i + 1)).collect();
            e.push((branch, n));
            e
        }
    };
    edges.sort_unstable();
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in &edges {
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    }
    match kind {
        DynkinType::B => c[n - 1][n - 2] = -2,
        DynkinType::C => c[n - 2][n - 1] = -2,
        DynkinType::F => c[1][2] = -2,
        DynkinType::G => c[1][0] = -3,
        _ => {}
    }
    let d = symmetrizer(&c);
    Ok(CartanData { kind, rank, c, d })
}

/// Smallest positive integers with `d_i c_ij = d_j c_ji`, for a connected
/// diagram.
fn symmetrizer(c: &[Vec<i64>]) -> Vec<i64> {
    let n = c.len();
    // Rational propagation along a spanning tree: d_j = d_i c_ij / c_ji.
    let mut num = vec![0i64; n];
    let mut den = vec![1i64; n];
    num[0] = 1;
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if j != i && c[i][j] != 0 && num[j] == 0 {
                num[j] = num[i] * c[i][j];
                den[j] = den[i] * c[j][i];
                let g = gcd(num[j], den[j]);
                num[j] /= g;
                den[j] /= g;
                if den[j] < 0 {
                    num[j] = -num[j];
                    den[j] = -den[j];
                }
                stack.push(j);
            }
        }
    }
    let l = den.iter().fold(1, |acc, &x| acc / gcd(acc, x) * x);
    let mut d: Vec<i64> = num.iter().zip(&den).map(|(&a, &b)| a * (l / b)).collect();
    let g = d.iter().fold(0, |acc, &x| gcd(acc, x));
    for x in &mut d {
        *x /= g;
    }
    d
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
