//! Symmetric integer matrices, the recursive polynomial `μ`, exact
//! determinants, and Jones-polynomial recovery from Goeritz data.

use crate::error::Error;
use crate::laurent::{p_n, HalfTLaurent, LaurentPoly};
use crate::zeta::{eval_zeta8, ZSqrt2};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

/// A square symmetric matrix of integers. Dimension 0 is a valid value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricIntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl SymmetricIntMatrix {
    pub fn empty() -> Self {
        SymmetricIntMatrix { n: 0, entries: vec![] }
    }

    pub fn zeros(n: usize) -> Self {
        SymmetricIntMatrix { n, entries: vec![0; n * n] }
    }

    /// Build from rows, checking squareness and symmetry.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, Error> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::BadMatrix(format!(
                    "expected {} columns per row, found {}",
                    n,
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        let m = SymmetricIntMatrix { n, entries };
        for i in 0..n {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::BadMatrix(format!(
                        "entry ({},{}) = {} differs from ({},{}) = {}",
                        i,
                        j,
                        m.get(i, j),
                        j,
                        i,
                        m.get(j, i)
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    fn set_sym(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.n + j] = v;
        self.entries[j * self.n + i] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Sum of the upper-triangular entries `Σ_{i≤j} g_ij`, the exponent
    /// datum of the Jones recovery theorems.
    pub fn upper_sum(&self) -> i64 {
        let mut s = 0;
        for i in 0..self.n {
            for j in i..self.n {
                s += self.get(i, j);
            }
        }
        s
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<(), Error> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, dim: self.n });
        }
        if j >= self.n {
            return Err(Error::IndexOutOfRange { index: j, dim: self.n });
        }
        if i == j {
            return Err(Error::DiagonalPivot(i));
        }
        Ok(())
    }

    /// Push the coupling `g_ij` into both diagonal entries and zero it out:
    /// `g_ii += g_ij`, `g_jj += g_ij`, `g_ij = g_ji = 0`. Dimension is
    /// preserved.
    pub fn detach(&self, i: usize, j: usize) -> Result<Self, Error> {
        self.check_pair(i, j)?;
        let mut m = self.clone();
        let g = m.get(i, j);
        m.set_sym(i, i, m.get(i, i) + g);
        m.set_sym(j, j, m.get(j, j) + g);
        m.set_sym(i, j, 0);
        Ok(m)
    }

    /// Fuse row/column `j` into row/column `i` and delete `j`:
    /// `g_ii += g_jj + 2g_ij`, `g_ik += g_jk` for `k ∉ {i,j}`, then strike
    /// row and column `j`. Dimension drops by one.
    pub fn fuse(&self, i: usize, j: usize) -> Result<Self, Error> {
        self.check_pair(i, j)?;
        let mut m = self.clone();
        m.set_sym(i, i, m.get(i, i) + m.get(j, j) + 2 * m.get(i, j));
        for k in 0..self.n {
            if k == i || k == j {
                continue;
            }
            m.set_sym(i, k, m.get(i, k) + m.get(j, k));
        }
        m.strike(j)
    }

    /// Delete row and column `i`.
    pub fn strike(&self, i: usize) -> Result<Self, Error> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, dim: self.n });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&k| k != i).collect();
        Ok(self.submatrix(&keep))
    }

    /// The principal submatrix on the given (distinct) indices, in order.
    pub fn submatrix(&self, keep: &[usize]) -> Self {
        let n = keep.len();
        let mut entries = Vec::with_capacity(n * n);
        for &i in keep {
            for &j in keep {
                entries.push(self.get(i, j));
            }
        }
        SymmetricIntMatrix { n, entries }
    }

    /// Conjugate by a permutation: `out[i][j] = self[perm[i]][perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        self.submatrix(perm)
    }

    /// Block direct sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let mut m = SymmetricIntMatrix::zeros(n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.entries[i * n + j] = self.get(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                m.entries[(self.n + i) * n + (self.n + j)] = other.get(i, j);
            }
        }
        m
    }

    /// All positions `(i, j)` with `i < j` and `g_ij ≠ 0`, in lexicographic
    /// order.
    pub fn nonzero_off_diagonal(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(i, j) != 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// True iff every diagonal entry is even, which characterizes
    /// orientability of the underlying checkerboard surface.
    pub fn is_orientable(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) % 2 == 0)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    /// The empty matrix has determinant 1.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let swap = (k + 1..n).find(|&r| !a[r][k].is_zero());
                match swap {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }
}

impl fmt::Display for SymmetricIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// JSON form `{"matrix": [[...], ...]}`; the empty matrix is
/// `{"matrix": []}`.
#[derive(Serialize, Deserialize)]
pub struct MatrixJson {
    pub matrix: Vec<Vec<i64>>,
}

impl SymmetricIntMatrix {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let parsed: MatrixJson =
            serde_json::from_str(text).map_err(|e| Error::BadInput(e.to_string()))?;
        Self::from_rows(&parsed.matrix)
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson { matrix: self.rows() }
    }
}

/// The signed Euler number `e(S, L)` of a checkerboard surface with respect
/// to an orientation; always even.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerNumber(pub i64);

/// How the recursion picks its next off-diagonal pivot.
enum PivotRule {
    /// Lexicographically smallest nonzero off-diagonal entry. Deterministic;
    /// the result is pivot-independent anyway.
    Lex,
    /// Seeded random admissible choice at every step, for the
    /// well-definedness tests.
    Random(crate::graph::SplitMix64),
}

struct MuEvaluator {
    memo: HashMap<SymmetricIntMatrix, LaurentPoly>,
    rule: PivotRule,
}

impl MuEvaluator {
    fn eval(&mut self, g: &SymmetricIntMatrix) -> LaurentPoly {
        if let Some(hit) = self.memo.get(g) {
            return hit.clone();
        }
        let pivots = g.nonzero_off_diagonal();
        let result = if pivots.is_empty() {
            // Diagonal case: each remaining diagonal entry contributes a
            // factor A^g(-A^-2 - A^2) + P_g.
            let mut acc = LaurentPoly::one();
            for i in 0..g.dim() {
                let gii = g.get(i, i);
                let factor =
                    &LaurentPoly::circle().mul_monomial(1, gii) + &p_n(gii);
                acc = &acc * &factor;
            }
            acc
        } else {
            let (i, j) = match &mut self.rule {
                PivotRule::Lex => pivots[0],
                PivotRule::Random(rng) => pivots[rng.below(pivots.len())],
            };
            let gij = g.get(i, j);
            let detached = self.eval(&g.detach(i, j).expect("valid pivot"));
            let fused = self.eval(&g.fuse(i, j).expect("valid pivot"));
            &detached.mul_monomial(1, -gij) + &(&p_n(-gij) * &fused)
        };
        self.memo.insert(g.clone(), result.clone());
        result
    }
}

/// The bracket-type polynomial `μ[G]` of a symmetric integer matrix.
///
/// `μ` of the empty matrix is 1; an off-diagonal pivot `g_ij ≠ 0` satisfies
/// `μ[G] = A^(-g_ij) μ[detach] + P_(-g_ij) μ[fuse]`, and a diagonal entry
/// with zero row contributes `A^g(-A^-2 - A^2) + P_g`. The value does not
/// depend on pivot order; the implementation pivots on the lexicographically
/// smallest nonzero off-diagonal entry and memoizes on exact matrix
/// contents.
pub fn mu(g: &SymmetricIntMatrix) -> LaurentPoly {
    MuEvaluator {
        memo: HashMap::new(),
        rule: PivotRule::Lex,
    }
    .eval(g)
}

/// `μ[G]` evaluated with a seeded random admissible pivot at every step.
/// Used to exercise well-definedness; always equals [`mu`].
pub fn mu_random_pivots(g: &SymmetricIntMatrix, seed: u64) -> LaurentPoly {
    MuEvaluator {
        memo: HashMap::new(),
        rule: PivotRule::Random(crate::graph::SplitMix64::new(seed)),
    }
    .eval(g)
}

/// `(|μ[G](ζ)|², det(G)²)`. The two agree, with zero `√2`-part, for every
/// symmetric integer matrix.
pub fn det_modulus_check(g: &SymmetricIntMatrix) -> (ZSqrt2, BigInt) {
    let modulus = eval_zeta8(&mu(g)).modulus_squared();
    let d = g.determinant();
    (modulus, &d * &d)
}

/// Jones polynomial of a knot whose orientable checkerboard surface has
/// Goeritz matrix `G`: `J = [(-A)^(3·Σ_{i≤j} g_ij) · μ[G]]` under
/// `t^(1/2) = A^(-2)`.
pub fn jones_orientable(g: &SymmetricIntMatrix) -> Result<HalfTLaurent, Error> {
    for i in 0..g.dim() {
        let entry = g.get(i, i);
        if entry % 2 != 0 {
            return Err(Error::NotOrientable { index: i, entry });
        }
    }
    let s = g.upper_sum();
    let normalized = &LaurentPoly::neg_a_pow(3 * s) * &mu(g);
    normalized.substitute_half_t()
}

/// Jones polynomial from a Goeritz matrix plus the signed Euler number:
/// `J = [(-A)^(-3(e - Σ_{i≤j} g_ij)) · μ[G]]` under `t^(1/2) = A^(-2)`.
pub fn jones_with_euler(g: &SymmetricIntMatrix, e: EulerNumber) -> Result<HalfTLaurent, Error> {
    if e.0 % 2 != 0 {
        return Err(Error::OddEuler(e.0));
    }
    let s = g.upper_sum();
    let normalized = &LaurentPoly::neg_a_pow(-3 * (e.0 - s)) * &mu(g);
    normalized.substitute_half_t()
}
