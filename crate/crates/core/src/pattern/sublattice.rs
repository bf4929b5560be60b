use std::fmt;

use serde::{Deserialize, Serialize};

use super::ReceptionProfile;
use crate::coverage::Params;
use crate::error::{Error, Result};
use crate::lattice::{ball_enumerate, DEFAULT_ENUMERATION_CAP};

/// Default cap on the index of a sublattice the verifier will scan.
pub const DEFAULT_INDEX_CAP: u64 = 1_000_000;

/// Finite-index sublattice `L` of `Z^n` used as a broadcast set.
///
/// The basis is kept in column Hermite normal form: upper triangular with
/// positive diagonal, and each entry right of the diagonal reduced into
/// `[0, diagonal)`. Columns are the generators. Two patterns are equal iff
/// their bases are.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SublatticePattern {
    n: usize,
    /// Row-major `n x n` matrix.
    basis: Vec<Vec<i64>>,
    index: u64,
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

impl SublatticePattern {
    /// Builds the pattern generated by `columns` (each of length `n`).
    pub fn from_columns(columns: &[Vec<i64>]) -> Result<Self> {
        let n = columns.len();
        if n == 0 {
            return Err(Error::InvalidBasis("empty basis".into()));
        }
        if let Some(c) = columns.iter().find(|c| c.len() != n) {
            return Err(Error::InvalidBasis(format!(
                "{n} generators of length {} do not form a square matrix",
                c.len()
            )));
        }
        // cols[j][i] is row i of column j
        let mut cols: Vec<Vec<i128>> = columns.iter().map(|c| c.iter().map(|&v| i128::from(v)).collect()).collect();

        for i in (0..n).rev() {
            for j in 0..i {
                if cols[j][i] == 0 {
                    continue;
                }
                let (a, b) = (cols[i][i], cols[j][i]);
                let (g, x, y) = ext_gcd(a, b);
                let (ag, bg) = (a / g, b / g);
                let (ci, cj) = (cols[i].clone(), cols[j].clone());
                for k in 0..n {
                    cols[i][k] = x * ci[k] + y * cj[k];
                    cols[j][k] = bg * ci[k] - ag * cj[k];
                }
            }
            if cols[i][i] == 0 {
                return Err(Error::InvalidBasis("generators are linearly dependent".into()));
            }
            if cols[i][i] < 0 {
                cols[i].iter_mut().for_each(|v| *v = -*v);
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let q = cols[j][i].div_euclid(cols[i][i]);
                if q != 0 {
                    let ci = cols[i].clone();
                    cols[j].iter_mut().zip(&ci).for_each(|(v, c)| *v -= q * c);
                }
            }
        }

        let mut basis = vec![vec![0i64; n]; n];
        for (j, col) in cols.iter().enumerate() {
            for (i, &v) in col.iter().enumerate() {
                basis[i][j] = i64::try_from(v).map_err(|_| Error::Overflow(v.to_string()))?;
            }
        }
        let index = (0..n).try_fold(1u64, |acc, i| acc.checked_mul(basis[i][i] as u64));
        let index = index.ok_or_else(|| Error::Overflow("sublattice index".into()))?;
        Ok(SublatticePattern { n, basis, index })
    }

    /// The tower `T(d,e)` as the lattice generated by `(d,0)` and `(e,1)`.
    pub fn tower(d: u64, e: u64) -> Result<Self> {
        Self::from_columns(&[vec![d as i64, 0], vec![e as i64, 1]])
    }

    /// Three-dimensional tower generated by `(d,0,0)`, `(e1,1,0)`, `(e2,0,1)`.
    pub fn tower3(d: u64, e1: u64, e2: u64) -> Result<Self> {
        Self::from_columns(&[vec![d as i64, 0, 0], vec![e1 as i64, 1, 0], vec![e2 as i64, 0, 1]])
    }

    pub fn identity(n: usize) -> Self {
        let basis = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        SublatticePattern { n, basis, index: 1 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row-major HNF basis.
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// Reduces `v` to its coset representative in the box `0 <= v_i < basis[i][i]`.
    pub fn reduce(&self, v: &mut [i64]) {
        for i in (0..self.n).rev() {
            let q = v[i].div_euclid(self.basis[i][i]);
            if q != 0 {
                for (k, row) in self.basis.iter().enumerate().take(i + 1) {
                    v[k] -= q * row[i];
                }
            }
        }
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Coset representatives `0 <= v_i < basis[i][i]`, first coordinate varying fastest.
    pub fn fundamental_domain(&self) -> Vec<Vec<i64>> {
        let diag: Vec<i64> = (0..self.n).map(|i| self.basis[i][i]).collect();
        let mut out = Vec::with_capacity(self.index as usize);
        let mut cur = vec![0i64; self.n];
        loop {
            out.push(cur.clone());
            let mut k = 0;
            loop {
                if k == self.n {
                    return out;
                }
                cur[k] += 1;
                if cur[k] < diag[k] {
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }
}

impl fmt::Display for SublatticePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.basis.iter().map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")).collect();
        write!(f, "HNF[{}]", rows.join(";"))
    }
}

/// Receptions at every coset representative of `Z^n / L`.
pub fn lattice_reception_profile(p: Params, sp: &SublatticePattern) -> Result<ReceptionProfile> {
    lattice_reception_profile_capped(p, sp, DEFAULT_INDEX_CAP)
}

pub fn lattice_reception_profile_capped(p: Params, sp: &SublatticePattern, index_cap: u64) -> Result<ReceptionProfile> {
    if sp.index > index_cap {
        return Err(Error::IndexCap { index: sp.index, cap: index_cap });
    }
    let offsets = weighted_offsets(sp.n, p)?;
    let receptions = sp.fundamental_domain().iter().map(|v| reception_with(sp, v, &offsets)).collect();
    Ok(ReceptionProfile { pattern: sp.to_string(), params: p, receptions, rows: None })
}

// Offsets w with |w| < t, paired with the reception t - |w| they carry.
fn weighted_offsets(n: usize, p: Params) -> Result<Vec<(Vec<i64>, u64)>> {
    let t = u64::from(p.t());
    Ok(ball_enumerate(n, (t - 1) as usize, DEFAULT_ENUMERATION_CAP)?
        .into_iter()
        .map(|w| {
            let norm = w.l1_norm();
            (w.0, t - norm)
        })
        .collect())
}

fn reception_with(sp: &SublatticePattern, v: &[i64], offsets: &[(Vec<i64>, u64)]) -> u64 {
    let mut buf = vec![0i64; v.len()];
    offsets
        .iter()
        .filter(|(w, _)| {
            buf.iter_mut().zip(v.iter().zip(w)).for_each(|(b, (a, c))| *b = a + c);
            sp.contains(&buf)
        })
        .map(|(_, weight)| weight)
        .sum()
}

/// Whether broadcasts on every point of `L` give each vertex of `Z^n` at least `r`.
pub fn is_dominating_lattice(p: Params, sp: &SublatticePattern) -> Result<bool> {
    is_dominating_lattice_capped(p, sp, DEFAULT_INDEX_CAP)
}

pub fn is_dominating_lattice_capped(p: Params, sp: &SublatticePattern, index_cap: u64) -> Result<bool> {
    if sp.index > index_cap {
        return Err(Error::IndexCap { index: sp.index, cap: index_cap });
    }
    let offsets = weighted_offsets(sp.n, p)?;
    let r = u64::from(p.r());
    Ok(sp.fundamental_domain().iter().all(|v| reception_with(sp, v, &offsets) >= r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: u32, r: u32) -> Params {
        Params::new(t, r).unwrap()
    }

    #[test]
    fn hnf_of_tower_basis() {
        let sp = SublatticePattern::from_columns(&[vec![18, 0], vec![5, 1]]).unwrap();
        assert_eq!(sp.basis(), &[vec![18, 5], vec![0, 1]]);
        assert_eq!(sp.index(), 18);
        assert_eq!(sp, SublatticePattern::tower(18, 5).unwrap());
    }

    #[test]
    fn hnf_is_canonical() {
        // Same lattice as T(18,5), different generators.
        let a = SublatticePattern::from_columns(&[vec![5, 1], vec![23, 1]]).unwrap();
        let b = SublatticePattern::from_columns(&[vec![-13, 1], vec![-31, 1]]).unwrap();
        assert_eq!(a, SublatticePattern::tower(18, 5).unwrap());
        assert_eq!(b, a);
        let c = SublatticePattern::from_columns(&[vec![2, 1, 0], vec![0, 3, 1], vec![1, 0, 4]]).unwrap();
        let d = SublatticePattern::from_columns(&[vec![2, 4, 1], vec![0, 3, 1], vec![3, 1, 4]]).unwrap();
        assert_eq!(c, d);
        assert_eq!(c.index(), 25);
    }

    #[test]
    fn hnf_rejects_bad_bases() {
        assert!(SublatticePattern::from_columns(&[vec![1, 2], vec![2, 4]]).is_err());
        assert!(SublatticePattern::from_columns(&[vec![1, 2]]).is_err());
        assert!(SublatticePattern::from_columns(&[]).is_err());
    }

    #[test]
    fn membership_and_domain() {
        let sp = SublatticePattern::tower(18, 5).unwrap();
        assert!(sp.contains(&[23, 1]));
        assert!(sp.contains(&[10, 2]));
        assert!(!sp.contains(&[1, 0]));
        let dom = sp.fundamental_domain();
        assert_eq!(dom.len(), 18);
        assert_eq!(dom[7], vec![7, 0]);
    }

    #[test]
    fn domination_examples() {
        let t185 = SublatticePattern::from_columns(&[vec![18, 0], vec![5, 1]]).unwrap();
        assert!(is_dominating_lattice(p(4, 2), &t185).unwrap());
        for (t, r) in [(1, 1), (3, 2), (5, 5)] {
            assert!(is_dominating_lattice(p(t, r), &SublatticePattern::identity(3)).unwrap());
        }
        let even = SublatticePattern::from_columns(&[vec![2, 0], vec![0, 2]]).unwrap();
        assert!(!is_dominating_lattice(p(1, 1), &even).unwrap());
    }

    #[test]
    fn index_cap() {
        let sp = SublatticePattern::tower(50, 3).unwrap();
        assert!(matches!(is_dominating_lattice_capped(p(2, 1), &sp, 10), Err(Error::IndexCap { index: 50, cap: 10 })));
    }
}
