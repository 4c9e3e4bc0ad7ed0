//! Small dense linear-algebra helpers shared across the crate.

use ndarray::{Array1, Array2};
use ndarray_linalg::Solve;
use num_complex::Complex64 as C64;

/// Matrix exponential by Pade 13 with scaling and squaring.
pub fn expm(a: &Array2<C64>) -> Array2<C64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols());
    let norm = a
        .rows()
        .into_iter()
        .map(|r| r.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0f64, f64::max);
    let s = if norm > 5.4 {
        ((norm / 5.4).log2().ceil() as i32).max(0)
    } else {
        0
    };
    let a = a.mapv(|z| z / C64::from(2f64.powi(s)));

    const B: [f64; 14] = [
        64764752532480000.0,
        32382376266240000.0,
        7771770303897600.0,
        1187353796428800.0,
        129060195264000.0,
        10559470521600.0,
        670442572800.0,
        33522128640.0,
        1323241920.0,
        40840800.0,
        960960.0,
        16380.0,
        182.0,
        1.0,
    ];
    let id = Array2::<C64>::eye(n);
    let a2 = a.dot(&a);
    let a4 = a2.dot(&a2);
    let a6 = a2.dot(&a4);
    let u_inner = &a6 * C64::from(B[13]) + &a4 * C64::from(B[11]) + &a2 * C64::from(B[9]);
    let u = a.dot(
        &(a6.dot(&u_inner)
            + &a6 * C64::from(B[7])
            + &a4 * C64::from(B[5])
            + &a2 * C64::from(B[3])
            + &id * C64::from(B[1])),
    );
    let v_inner = &a6 * C64::from(B[12]) + &a4 * C64::from(B[10]) + &a2 * C64::from(B[8]);
    let v = a6.dot(&v_inner)
        + &a6 * C64::from(B[6])
        + &a4 * C64::from(B[4])
        + &a2 * C64::from(B[2])
        + &id * C64::from(B[0]);

    let lhs = &v - &u;
    let rhs = &v + &u;
    // column-wise solve (V - U) X = (V + U)
    let mut x = Array2::<C64>::zeros((n, n));
    for j in 0..n {
        let col = rhs.column(j).to_owned();
        let sol: Array1<C64> = lhs.solve(&col).expect("expm: Pade solve failed");
        x.column_mut(j).assign(&sol);
    }
    for _ in 0..s {
        x = x.dot(&x);
    }
    x
}

/// Minimal-cost perfect assignment (Hungarian algorithm, O(n^3)); returns
/// `perm` with `perm[row] = col`.
pub fn min_cost_assignment(cost: &Array2<f64>) -> Vec<usize> {
    let n = cost.nrows();
    assert_eq!(n, cost.ncols());
    // potentials + augmenting paths (Jonker-Volgenant style)
    let mut u = vec![0.0f64; n + 1];
    let mut v = vec![0.0f64; n + 1];
    let mut way = vec![0usize; n + 1];
    let mut p = vec![0usize; n + 1]; // p[col] = row matched to col (1-based rows)
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0usize;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost[[i0 - 1, j - 1]] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut perm = vec![0usize; n];
    for j in 1..=n {
        if p[j] > 0 {
            perm[p[j] - 1] = j - 1;
        }
    }
    perm
}
