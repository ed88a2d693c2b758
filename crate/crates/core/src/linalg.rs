//! Exact Gaussian elimination helpers: rank, affine solve, nullspace.

use crate::rat::Rat;
use num_traits::Zero;

/// Rank of a rational matrix (rows of equal length).
pub(crate) fn rank(rows: &[Vec<Rat>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut r = 0usize;
    for c in 0..ncols {
        let pivot = (r..m.len()).find(|&i| !m[i][c].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for j in c..ncols {
            let v = &m[r][j] / &inv;
            m[r][j] = v;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let v = &m[i][j] - &f * &m[r][j];
                    m[i][j] = v;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Solves the affine system `A x = b`. Returns a particular solution and a
/// basis of the nullspace of `A`, or `None` when inconsistent.
pub(crate) fn solve_affine(a: &[Vec<Rat>], b: &[Rat]) -> Option<(Vec<Rat>, Vec<Vec<Rat>>)> {
    let nrows = a.len();
    let ncols = if nrows > 0 { a[0].len() } else { 0 };
    // augmented reduced row echelon form
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut r = 0usize;
    for c in 0..ncols {
        let pivot = (r..m.len()).find(|&i| !m[i][c].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for j in c..=ncols {
            let v = &m[r][j] / &inv;
            m[r][j] = v;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=ncols {
                    let v = &m[i][j] - &f * &m[r][j];
                    m[i][j] = v;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == m.len() {
            break;
        }
    }
    // inconsistent when a zero row has nonzero rhs
    for i in r..m.len() {
        if !m[i][ncols].is_zero() {
            return None;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut particular = vec![Rat::zero(); ncols];
    for &(pr, pc) in &pivots {
        particular[pc] = m[pr][ncols].clone();
    }
    let mut nullspace = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::from_integer(1.into());
        for &(pr, pc) in &pivots {
            v[pc] = -m[pr][free].clone();
        }
        nullspace.push(v);
    }
    Some((particular, nullspace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&v| rat_int(v)).collect()).collect()
    }

    #[test]
    fn rank_basic() {
        assert_eq!(rank(&mat(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&mat(&[&[0, 0]])), 0);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn solve_line() {
        // x + y = 1 in R^2: particular + 1-dim nullspace
        let (p, ns) = solve_affine(&mat(&[&[1, 1]]), &[rat_int(1)]).unwrap();
        assert_eq!(&p[0] + &p[1], rat_int(1));
        assert_eq!(ns.len(), 1);
        assert_eq!(&ns[0][0] + &ns[0][1], rat_int(0));
    }

    #[test]
    fn solve_point() {
        let (p, ns) = solve_affine(&mat(&[&[1, 0], &[0, 1]]), &[rat_int(3), rat_int(-2)]).unwrap();
        assert_eq!(p, vec![rat_int(3), rat_int(-2)]);
        assert!(ns.is_empty());
    }

    #[test]
    fn inconsistent() {
        assert!(solve_affine(&mat(&[&[1, 1], &[1, 1]]), &[rat_int(0), rat_int(1)]).is_none());
    }
}
