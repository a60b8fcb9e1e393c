//! Exact Hankel-matrix construction and fraction-free determinant
//! evaluation: the brute-force oracle every closed form is checked against.
//!
//! Determinants use Bareiss elimination. Rows are first cleared of
//! denominators and rational content so the elimination runs over integer
//! polynomials, where every Bareiss division is exact; sizes up to 3 use
//! direct cofactor expansion.

use num::bigint::BigInt;
use num::traits::Zero;

use crate::exactnum::intpoly::{ip_exact_div, ip_mul, ip_sub, ip_trim, IPoly};
use crate::exactnum::{polyt_lcm, PolyT, RatFunc, Rational};

/// An N x N Hankel matrix over Q(t): entry (i, j) depends only on i + j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelMatrix {
    size: usize,
    values: Vec<RatFunc>, // the 2N-1 distinct antidiagonal values
}

impl HankelMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry (i, j) = value at index i + j.
    pub fn entry(&self, i: usize, j: usize) -> &RatFunc {
        &self.values[i + j]
    }

    /// The sequence values indexed 0 .. 2N-2.
    pub fn sequence(&self) -> &[RatFunc] {
        &self.values
    }

    fn row(&self, i: usize) -> Vec<RatFunc> {
        (0..self.size).map(|j| self.entry(i, j).clone()).collect()
    }
}

/// Builds the N x N Hankel matrix with entries `entry_fn(i + j)`.
pub fn build_hankel(mut entry_fn: impl FnMut(usize) -> RatFunc, size: usize) -> HankelMatrix {
    let values = if size == 0 {
        Vec::new()
    } else {
        (0..2 * size - 1).map(&mut entry_fn).collect()
    };
    HankelMatrix { size, values }
}

/// Builds a Hankel matrix from a prefix of sequence values (at least 2N-1).
pub fn hankel_from_sequence(values: &[RatFunc], size: usize) -> HankelMatrix {
    assert!(
        size == 0 || values.len() >= 2 * size - 1,
        "need at least 2N-1 sequence values"
    );
    HankelMatrix {
        size,
        values: values[..if size == 0 { 0 } else { 2 * size - 1 }].to_vec(),
    }
}

/// Exact determinant of a Hankel matrix; the empty matrix has determinant 1.
pub fn det_exact(m: &HankelMatrix) -> RatFunc {
    let grid: Vec<Vec<RatFunc>> = (0..m.size).map(|i| m.row(i)).collect();
    det_exact_grid(&grid)
}

/// Exact determinant of an arbitrary square grid over Q(t).
pub fn det_exact_grid(grid: &[Vec<RatFunc>]) -> RatFunc {
    let n = grid.len();
    for row in grid {
        assert_eq!(row.len(), n, "grid must be square");
    }
    match n {
        0 => RatFunc::one(),
        1 => grid[0][0].clone(),
        2 => &(&grid[0][0] * &grid[1][1]) - &(&grid[0][1] * &grid[1][0]),
        3 => det3(grid),
        _ => det_bareiss(grid),
    }
}

fn det3(g: &[Vec<RatFunc>]) -> RatFunc {
    let mut acc = RatFunc::zero();
    acc = &acc + &(&g[0][0] * &(&(&g[1][1] * &g[2][2]) - &(&g[1][2] * &g[2][1])));
    acc = &acc - &(&g[0][1] * &(&(&g[1][0] * &g[2][2]) - &(&g[1][2] * &g[2][0])));
    acc = &acc + &(&g[0][2] * &(&(&g[1][0] * &g[2][1]) - &(&g[1][1] * &g[2][0])));
    acc
}

/// Fraction-free Bareiss elimination. On a zero pivot the first lower row
/// with a nonzero entry in that column is swapped in (tracking sign); if none
/// exists the determinant is 0.
fn det_bareiss(grid: &[Vec<RatFunc>]) -> RatFunc {
    let n = grid.len();

    // Clear denominators row by row, then pull out rational content so the
    // elimination runs over Z[t].
    let mut den_product = PolyT::one();
    let mut scalar = Rational::one();
    let mut work: Vec<Vec<IPoly>> = Vec::with_capacity(n);
    for row in grid {
        let mut row_lcm = PolyT::one();
        for e in row {
            row_lcm = polyt_lcm(&row_lcm, e.den()).expect("nonzero denominators");
        }
        den_product = &den_product * &row_lcm;

        let cleared: Vec<PolyT> = row
            .iter()
            .map(|e| e.num() * &row_lcm.exact_div(e.den()).expect("lcm divides"))
            .collect();

        let mut den_lcm = BigInt::from(1);
        for p in &cleared {
            for c in p.coeffs() {
                den_lcm = num::integer::lcm(den_lcm, c.denominator().clone());
            }
        }
        let ints: Vec<IPoly> = cleared
            .iter()
            .map(|p| {
                p.coeffs()
                    .iter()
                    .map(|c| c.numerator() * (&den_lcm / c.denominator()))
                    .collect()
            })
            .collect();
        let mut content = BigInt::zero();
        for p in &ints {
            for c in p {
                content = num::integer::gcd(content, c.clone());
            }
        }
        if content.is_zero() {
            // A zero row: the determinant vanishes.
            return RatFunc::zero();
        }
        scalar = &scalar * &Rational::new(content.clone(), den_lcm).expect("nonzero lcm");
        work.push(
            ints.into_iter()
                .map(|p| ip_trim(p.into_iter().map(|c| c / &content).collect()))
                .collect(),
        );
    }

    let mut sign_flip = false;
    let mut prev_pivot: IPoly = vec![BigInt::from(1)];
    for r in 0..n - 1 {
        if work[r][r].is_empty() {
            match (r + 1..n).find(|&i| !work[i][r].is_empty()) {
                Some(i) => {
                    work.swap(r, i);
                    sign_flip = !sign_flip;
                }
                None => return RatFunc::zero(),
            }
        }
        let pivot = work[r][r].clone();
        for i in r + 1..n {
            let head = work[i][r].clone();
            for j in r + 1..n {
                let num = ip_sub(&ip_mul(&pivot, &work[i][j]), &ip_mul(&head, &work[r][j]));
                work[i][j] = ip_exact_div(&num, &prev_pivot);
            }
            work[i][r] = Vec::new();
        }
        prev_pivot = pivot;
    }

    let det_int = work[n - 1][n - 1].clone();
    if det_int.is_empty() {
        return RatFunc::zero();
    }
    let mut num = PolyT::new(det_int.into_iter().map(Rational::from_bigint).collect())
        .scale(&scalar);
    if sign_flip {
        num = -num;
    }
    RatFunc::new(num, den_product).expect("nonzero denominator product")
}
