//! Exact linear algebra: dense rank over ℤ/p (with a delayed-reduction
//! floating kernel for speed) and rational elimination for small systems.
//!
//! The ℤ/p kernel stores residues as exact integers in `f64` (everything
//! stays below 2⁵³) and reduces rows only when the accumulated growth could
//! overflow, which keeps the inner loop a plain fused multiply–add that the
//! compiler vectorizes.

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::UktError;
use crate::poly::SparsePoly;
use crate::ring::{Fp, Ring};

/// Dense matrix over ℤ/p held in floating registers.
pub struct FpMatrix {
    pub p: u64,
    rows: Vec<Vec<f64>>,
    ncols: usize,
}

impl FpMatrix {
    pub fn new(p: u64, ncols: usize) -> Self {
        FpMatrix {
            p,
            rows: Vec::new(),
            ncols,
        }
    }

    pub fn push_row(&mut self, row: Vec<u64>) {
        assert_eq!(row.len(), self.ncols);
        debug_assert!(row.iter().all(|&x| x < self.p));
        self.rows.push(row.into_iter().map(|x| x as f64).collect());
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Row-echelon rank by Gaussian elimination with delayed reduction.
    pub fn rank(&mut self) -> usize {
        let p = self.p;
        let pf = p as f64;
        let n = self.rows.len();
        let m = self.ncols;
        // Updates each add < (p-1)² to an entry; cap keeps entries < 2^53.
        let per_update = ((p - 1) as u128) * ((p - 1) as u128);
        let max_updates = (((1u128 << 53) - p as u128) / per_update).max(1) as u32;
        let mut dirt = vec![0u32; n];
        let reduce_row = |row: &mut [f64]| {
            for x in row.iter_mut() {
                *x = ((*x as u64) % p) as f64;
            }
        };
        let fp = Fp { p, i_root: None };
        let mut rank = 0usize;
        for col in 0..m {
            if rank == n {
                break;
            }
            // Reduce this column's entries and find a pivot.
            let mut pivot = None;
            for i in rank..n {
                let v = (self.rows[i][col] as u64) % p;
                self.rows[i][col] = v as f64;
                if pivot.is_none() && v != 0 {
                    pivot = Some(i);
                }
            }
            let Some(pi) = pivot else { continue };
            self.rows.swap(rank, pi);
            dirt.swap(rank, pi);
            // Normalize the pivot row fully: entries < p, pivot = 1.
            reduce_row(&mut self.rows[rank]);
            dirt[rank] = 0;
            let inv = fp.inv(&(self.rows[rank][col] as u64)).expect("nonzero pivot");
            for x in self.rows[rank][col..].iter_mut() {
                *x = (((*x as u64) * inv) % p) as f64;
            }
            let (head, tail) = self.rows.split_at_mut(rank + 1);
            let prow = &head[rank][col..];
            for (k, row) in tail.iter_mut().enumerate() {
                let v = row[col] as u64; // already reduced above
                if v == 0 {
                    continue;
                }
                if dirt[rank + 1 + k] + 1 >= max_updates {
                    reduce_row(row);
                    dirt[rank + 1 + k] = 0;
                    row[col] = ((row[col] as u64) % p) as f64;
                    let v2 = row[col] as u64;
                    if v2 == 0 {
                        continue;
                    }
                }
                let f = (p - ((row[col] as u64) % p)) as f64;
                debug_assert!(f < pf + 1.0);
                let dst = &mut row[col..];
                for (x, &pv) in dst.iter_mut().zip(prow.iter()) {
                    *x += f * pv;
                }
                dst[0] = 0.0; // v + f·1 = p ≡ 0
                dirt[rank + 1 + k] += 1;
            }
            rank += 1;
        }
        rank
    }
}

/// Incremental row-echelon rank accumulator over ℤ/p.
///
/// Rows are pushed one at a time and reduced against the stored echelon
/// basis, so memory scales with the rank rather than with the number of
/// rows pushed — unlike [`FpMatrix`], which keeps every row. Pivot rows are
/// stored as `u32` suffixes starting at their leading column; the working
/// row uses the same delayed-reduction `f64` kernel as [`FpMatrix`].
pub struct IncrementalRank {
    p: u64,
    ncols: usize,
    max_updates: u32,
    /// (leading column, normalized row suffix from that column; leading 1)
    pivots: Vec<(usize, Vec<u32>)>,
}

impl IncrementalRank {
    pub fn new(p: u64, ncols: usize) -> Self {
        assert!(p < (1 << 20), "pivot entries must fit losslessly in u32 products");
        let per_update = ((p - 1) as u128) * ((p - 1) as u128);
        let max_updates = (((1u128 << 53) - p as u128) / per_update).max(1) as u32;
        IncrementalRank {
            p,
            ncols,
            max_updates,
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `row` against the basis; if a nonzero remainder survives it
    /// becomes a new pivot row. Returns `true` when the rank grew.
    pub fn push_row(&mut self, row: &[u64]) -> bool {
        assert_eq!(row.len(), self.ncols);
        let p = self.p;
        let mut w: Vec<f64> = row.iter().map(|&x| (x % p) as f64).collect();
        let mut dirt = 0u32;
        // Pivots are kept sorted by leading column, and each pivot row is
        // zero before its leading column, so one left-to-right sweep
        // eliminates every pivot column from the working row.
        for (col, prow) in &self.pivots {
            if dirt + 1 >= self.max_updates {
                for x in w.iter_mut() {
                    *x = ((*x as u64) % p) as f64;
                }
                dirt = 0;
            }
            let v = (w[*col] as u64) % p;
            if v == 0 {
                w[*col] = 0.0;
                continue;
            }
            let f = (p - v) as f64;
            for (x, &pv) in w[*col..].iter_mut().zip(prow.iter()) {
                *x += f * (pv as f64);
            }
            w[*col] = 0.0;
            dirt += 1;
        }
        let fp = Fp { p, i_root: None };
        for x in w.iter_mut() {
            *x = ((*x as u64) % p) as f64;
        }
        let Some(lead) = w.iter().position(|&x| x != 0.0) else {
            return false;
        };
        let inv = fp.inv(&(w[lead] as u64)).expect("nonzero leading entry");
        let suffix: Vec<u32> = w[lead..]
            .iter()
            .map(|&x| (((x as u64) * inv) % p) as u32)
            .collect();
        let pos = self.pivots.partition_point(|(c, _)| *c < lead);
        self.pivots.insert(pos, (lead, suffix));
        true
    }
}

/// Deterministic evaluation points for randomized rank work.
pub fn random_points(p: u64, nvars: usize, n_points: usize, seed: u64) -> Vec<Vec<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n_points)
        .map(|_| (0..nvars).map(|_| rng.gen_range(0..p)).collect())
        .collect()
}

/// Evaluate an `Fp` polynomial at a point (small exponents, direct product).
pub fn eval_fp(poly: &SparsePoly<Fp>, point: &[u64]) -> u64 {
    let p = poly.ring().p;
    let mut acc: u64 = 0;
    for (m, c) in poly.terms() {
        let mut t = *c;
        for (i, &e) in m.iter().enumerate() {
            let mut b = point[i];
            let mut e = e;
            if e == 0 {
                continue;
            }
            // tiny square-and-multiply; exponents are ≤ ~32
            let mut f = 1u64;
            while e > 1 {
                if e & 1 == 1 {
                    f = f * b % p;
                }
                b = b * b % p;
                e >>= 1;
            }
            t = t * (f * b % p) % p;
        }
        acc = (acc + t) % p;
    }
    acc
}

/// Rank of the span of polynomials over ℤ/p by evaluation at random points.
///
/// Deterministic given `(seed, p)`. With `n_points ≥ len + 16` the result
/// equals the true span dimension except with probability at most
/// `len·(len+16)/p` (Schwartz–Zippel over the product of total degrees).
pub fn rank_of_span(
    polys: &[SparsePoly<Fp>],
    n_points: usize,
    seed: u64,
) -> Result<usize, UktError> {
    if polys.is_empty() {
        return Ok(0);
    }
    let fp = polys[0].ring().clone();
    if n_points < polys.len() {
        return Err(UktError::Config(
            "rank_of_span needs at least as many points as polynomials".into(),
        ));
    }
    let max_deg = polys.iter().map(|q| q.total_degree() as u64).max().unwrap_or(0);
    if fp.p <= 4 * max_deg {
        return Err(UktError::Config(format!(
            "prime {} too small for degree bound {max_deg}",
            fp.p
        )));
    }
    let nvars = polys[0].vars().len();
    let pts = random_points(fp.p, nvars, n_points, seed);
    let mut mat = FpMatrix::new(fp.p, n_points);
    for poly in polys {
        let row: Vec<u64> = pts.iter().map(|pt| eval_fp(poly, pt)).collect();
        mat.push_row(row);
    }
    Ok(mat.rank())
}

/// Reduced row-echelon form over ℚ, in place; returns pivot column indices.
pub fn rref_rational(rows: &mut Vec<Vec<BigRational>>) -> Vec<usize> {
    let n = rows.len();
    if n == 0 {
        return vec![];
    }
    let m = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..m {
        if r == n {
            break;
        }
        let Some(pi) = (r..n).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pi);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in 0..m {
                    let d = &rows[r][j] * &f;
                    rows[i][j] -= d;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    pivots
}

/// Rank over ℚ.
pub fn rank_rational(mut rows: Vec<Vec<BigRational>>) -> usize {
    rref_rational(&mut rows);
    rows.len()
}

/// Solve the (possibly overdetermined) system `A·x = b` exactly over ℚ.
/// Returns `None` if inconsistent or underdetermined.
pub fn solve_exact(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    if n == 0 || b.len() != n {
        return None;
    }
    let m = a[0].len();
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref_rational(&mut aug);
    // Inconsistent if some pivot landed in the rhs column.
    if pivots.contains(&m) {
        return None;
    }
    if pivots.len() != m {
        return None; // underdetermined
    }
    let mut x = vec![BigRational::zero(); m];
    for (row, &col) in aug.iter().zip(pivots.iter()) {
        x[col] = row[m].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarTable;
    use crate::ring::QQ;

    #[test]
    fn fp_rank_small() {
        let p = 1000033;
        let mut m = FpMatrix::new(p, 3);
        m.push_row(vec![1, 2, 3]);
        m.push_row(vec![2, 4, 6]);
        m.push_row(vec![0, 1, 1]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn fp_rank_dense_random_full() {
        // A random 80×80 matrix mod p is invertible with overwhelming
        // probability; also exercises the delayed-reduction path.
        let p = 1000033u64;
        let pts = random_points(p, 80, 80, 99);
        let mut m = FpMatrix::new(p, 80);
        for row in pts {
            m.push_row(row);
        }
        assert_eq!(m.rank(), 80);
    }

    #[test]
    fn rank_of_span_detects_dependence() {
        let vars = VarTable::new(["x", "y"]);
        let fp = Fp::new(1000033, false).unwrap();
        let x = SparsePoly::var(fp.clone(), vars.clone(), 0);
        let y = SparsePoly::var(fp.clone(), vars.clone(), 1);
        let two_x = x.scale(&2);
        let xpy = x.add(&y);
        let r = rank_of_span(&[x, two_x, xpy], 40, 0).unwrap();
        assert_eq!(r, 2);
    }

    #[test]
    fn rank_of_span_monotone_and_scale_invariant() {
        let vars = VarTable::new(["x", "y", "z"]);
        let fp = Fp::new(1000033, false).unwrap();
        let polys: Vec<_> = (0..3)
            .map(|i| SparsePoly::var(fp.clone(), vars.clone(), i))
            .collect();
        let r2 = rank_of_span(&polys[..2], 40, 5).unwrap();
        let r3 = rank_of_span(&polys, 40, 5).unwrap();
        assert!(r3 >= r2);
        let scaled: Vec<_> = polys.iter().map(|q| q.scale(&777)).collect();
        assert_eq!(rank_of_span(&scaled, 40, 5).unwrap(), r3);
    }

    #[test]
    fn rational_solve() {
        let q = |n: i64| BigRational::from_integer(n.into());
        let a = vec![
            vec![q(1), q(1)],
            vec![q(1), q(-1)],
            vec![q(2), q(0)], // consistent redundant row
        ];
        let b = vec![q(3), q(1), q(4)];
        let x = solve_exact(&a, &b).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        let bad = solve_exact(&a, &[q(3), q(1), q(5)]);
        assert!(bad.is_none());
    }

    #[test]
    fn eval_matches_generic_eval() {
        let vars = VarTable::new(["x", "y"]);
        let qq_poly = {
            let mut p = SparsePoly::zero(QQ, vars.clone());
            p.add_term(Box::new([3, 1]), QQ.from_i64(5));
            p.add_term(Box::new([0, 2]), QQ.from_i64(-2));
            p
        };
        let fp = Fp::new(1000033, false).unwrap();
        let fpoly = qq_poly.to_fp(&fp).unwrap();
        let pt = vec![123456u64, 654321u64];
        let direct = eval_fp(&fpoly, &pt);
        let generic = fpoly.eval(&pt).unwrap();
        assert_eq!(direct, generic);
    }

    #[test]
    fn incremental_rank_matches_dense_rank() {
        let p = 1000033u64;
        for (nrows, ncols, seed) in [(20usize, 12usize, 1u64), (12, 20, 2), (30, 30, 3)] {
            let rows = random_points(p, ncols, nrows, seed);
            // plant dependencies: duplicate and sum some rows
            let mut rows = rows;
            let extra: Vec<u64> = (0..ncols)
                .map(|j| (rows[0][j] + rows[1][j]) % p)
                .collect();
            rows.push(extra);
            rows.push(rows[2].clone());
            let mut dense = FpMatrix::new(p, ncols);
            let mut inc = IncrementalRank::new(p, ncols);
            for r in &rows {
                dense.push_row(r.clone());
                inc.push_row(r);
            }
            assert_eq!(inc.rank(), dense.rank());
        }
    }
}
