//! Exact integer lattice computations via row Hermite normal form.
//!
//! A lattice is given by generator rows `G` (not necessarily independent).
//! Everything we need downstream reduces to three questions, all answered
//! here with certificates:
//!
//! * membership: does `x·G = v` have an integer solution `x`?
//! * axis intersection: the minimal positive `t` with `t·e_axis` in the span;
//! * affine solving: the set `{ s : v + s·e_axis ∈ span }`, which is either
//!   empty or a full congruence class `s0 + p·ℤ`.
//!
//! The reduction keeps a unimodular transform `U` with `U·G = H`, so every
//! answer can be pulled back to an explicit combination of the original
//! generators and re-verified by recombination. Entries stay tiny in this
//! crate (a few thousand at most), so plain `i128` arithmetic is exact.

// Row operations touch two rows of the same matrix at matching columns;
// indexed loops are the clearest way to write that.
#![allow(clippy::needless_range_loop)]

/// Row Hermite normal form of an integer matrix, with transform.
#[derive(Debug, Clone)]
pub struct Hnf {
    width: usize,
    /// Echelon rows, one per rank; pivots positive, entries above each
    /// pivot reduced into `[0, pivot)`.
    rows: Vec<Vec<i128>>,
    /// Pivot column of each echelon row.
    pivots: Vec<usize>,
    /// `k x k` unimodular matrix with `U·G = [rows; 0]`.
    transform: Vec<Vec<i128>>,
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

impl Hnf {
    pub fn new(generators: &[Vec<i128>]) -> Hnf {
        let k = generators.len();
        let width = generators.first().map_or(0, Vec::len);
        assert!(generators.iter().all(|r| r.len() == width), "ragged generator matrix");

        let mut h: Vec<Vec<i128>> = generators.to_vec();
        let mut u: Vec<Vec<i128>> =
            (0..k).map(|i| (0..k).map(|j| i128::from(i == j)).collect()).collect();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..width {
            let Some(first) = (row..k).find(|&i| h[i][col] != 0) else { continue };
            h.swap(row, first);
            u.swap(row, first);
            for j in row + 1..k {
                if h[j][col] == 0 {
                    continue;
                }
                // Unimodular 2x2 step sending (h[row][col], h[j][col]) to (g, 0).
                let (g, x, y) = egcd(h[row][col], h[j][col]);
                let (p, q) = (h[row][col] / g, h[j][col] / g);
                for c in 0..width {
                    let (a, b) = (h[row][c], h[j][c]);
                    h[row][c] = x * a + y * b;
                    h[j][c] = -q * a + p * b;
                }
                for c in 0..k {
                    let (a, b) = (u[row][c], u[j][c]);
                    u[row][c] = x * a + y * b;
                    u[j][c] = -q * a + p * b;
                }
            }
            if h[row][col] < 0 {
                h[row].iter_mut().for_each(|v| *v = -*v);
                u[row].iter_mut().for_each(|v| *v = -*v);
            }
            for i in 0..row {
                let q = h[i][col].div_euclid(h[row][col]);
                if q != 0 {
                    for c in 0..width {
                        h[i][c] -= q * h[row][c];
                    }
                    for c in 0..k {
                        u[i][c] -= q * u[row][c];
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == k {
                break;
            }
        }
        debug_assert!(h[row..].iter().all(|r| r.iter().all(|&v| v == 0)));
        h.truncate(row);
        Hnf { width, rows: h, pivots, transform: u }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Echelon rows (a basis of the lattice).
    pub fn basis(&self) -> &[Vec<i128>] {
        &self.rows
    }

    /// Rows of the transform beyond the rank: a basis of the left kernel,
    /// i.e. all relations `z·G = 0` among the original generators.
    pub fn kernel(&self) -> &[Vec<i128>] {
        &self.transform[self.rank()..]
    }

    /// Solves `x·G = target` over the integers, returning coefficients on
    /// the original generators.
    pub fn solve(&self, target: &[i128]) -> Option<Vec<i128>> {
        assert_eq!(target.len(), self.width, "target width mismatch");
        let k = self.transform.len();
        let mut v = target.to_vec();
        let mut x = vec![0i128; k];
        for (r, &p) in self.pivots.iter().enumerate() {
            // Rows below r are zero in column p, so row r must clear it alone.
            if v[p] % self.rows[r][p] != 0 {
                return None;
            }
            let q = v[p] / self.rows[r][p];
            if q != 0 {
                for c in 0..self.width {
                    v[c] -= q * self.rows[r][c];
                }
                for c in 0..k {
                    x[c] += q * self.transform[r][c];
                }
            }
        }
        v.iter().all(|&c| c == 0).then_some(x)
    }
}

/// Minimal positive `t` such that `t·e_axis` lies in the span, if any.
pub fn axis_intersection(generators: &[Vec<i128>], axis: usize) -> Option<i128> {
    affine_period(generators, axis)
}

/// All integers `s` with `target + s·e_axis` in the span form either the
/// empty set or a class `s0 + p·ℤ`; returns `(s0, p)` with `p >= 0`
/// (`p = 0` meaning the solution is unique).
pub fn solve_affine(
    generators: &[Vec<i128>],
    target: &[i128],
    axis: usize,
) -> Option<(i128, i128)> {
    let stacked = stack_axis(generators, target.len(), axis);
    let hnf = Hnf::new(&stacked);
    let y = hnf.solve(target)?;
    let s0 = -y[generators.len()];
    Some((s0, affine_period_of(&hnf, generators.len())))
}

fn stack_axis(generators: &[Vec<i128>], width: usize, axis: usize) -> Vec<Vec<i128>> {
    let mut stacked = generators.to_vec();
    let mut e = vec![0i128; width];
    e[axis] = 1;
    stacked.push(e);
    stacked
}

fn affine_period(generators: &[Vec<i128>], axis: usize) -> Option<i128> {
    let width = generators.first().map_or(axis + 1, Vec::len);
    let hnf = Hnf::new(&stack_axis(generators, width, axis));
    let p = affine_period_of(&hnf, generators.len());
    (p > 0).then_some(p)
}

/// Relations of the stacked matrix `[G; e_axis]` read `x·G = -z·e_axis`,
/// so the last kernel coordinate sweeps out exactly the multiples of
/// `e_axis` inside the span; their gcd is the axis period.
fn affine_period_of(hnf: &Hnf, last: usize) -> i128 {
    hnf.kernel().iter().fold(0i128, |acc, z| gcd(acc, z[last]))
}

fn gcd(a: i128, b: i128) -> i128 {
    egcd(a, b).0
}
