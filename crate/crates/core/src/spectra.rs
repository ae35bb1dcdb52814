//! Symmetric eigenvalue computation, equitable partitions, quotient matrices
//! and exact characteristic polynomials.

use crate::graph::{distance_matrix, DistanceMatrix, Graph};
use crate::rational::{Polynomial, Rat};
use crate::{Error, Result};

/// Default relative convergence threshold for the Jacobi sweeps.
pub const JACOBI_TOL: f64 = 1e-12;
/// Default grouping tolerance for multiplicity queries. Eigenvalue accuracy
/// at these dimensions is around 1e-10, and the integer eigenvalues that
/// matter (-1, -2, -3) are well separated from everything else.
pub const MULTIPLICITY_TOL: f64 = 1e-7;

const MAX_SWEEPS: usize = 100;

/// Dense symmetric matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    a: Vec<f64>,
}

impl SymMatrix {
    pub fn zero(n: usize) -> SymMatrix {
        SymMatrix { n, a: vec![0.0; n * n] }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> SymMatrix {
        let mut m = SymMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.a[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn identity(n: usize) -> SymMatrix {
        SymMatrix::from_fn(n, |i, j| f64::from(i == j))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.n + j] = v;
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.a.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn symmetry_defect(&self) -> Option<(usize, usize, f64)> {
        for i in 0..self.n {
            for j in i + 1..self.n {
                let delta = (self.get(i, j) - self.get(j, i)).abs();
                if delta > 1e-12 {
                    return Some((i, j, delta));
                }
            }
        }
        None
    }
}

impl From<&DistanceMatrix> for SymMatrix {
    fn from(d: &DistanceMatrix) -> SymMatrix {
        SymMatrix::from_fn(d.n(), |i, j| d.get(i, j) as f64)
    }
}

/// Eigenvalues of a real symmetric matrix, sorted descending.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn lambda(&self, k: usize) -> f64 {
        self.values[k - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Count of eigenvalues within `tol` of `value`; `None` uses the
    /// spectrum's stored grouping tolerance.
    pub fn multiplicity(&self, value: f64, tol: Option<f64>) -> usize {
        let tol = tol.unwrap_or(self.tol);
        self.values.iter().filter(|&&x| (x - value).abs() <= tol).count()
    }
}

/// Cyclic Jacobi iteration. Rotations sweep the strict upper triangle until
/// every off-diagonal magnitude drops below `tol * ||a||_F`, capped at 100
/// sweeps; hitting the cap is reported as an error rather than returning a
/// half-converged spectrum.
pub fn eigenvalues_symmetric(a: &SymMatrix, tol: f64) -> Result<Spectrum> {
    if let Some((i, j, delta)) = a.symmetry_defect() {
        return Err(Error::NotSymmetric { i, j, delta });
    }
    let n = a.n();
    let mut m = a.clone();
    let threshold = tol * a.frobenius_norm();
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                off = off.max(m.get(p, q).abs());
            }
        }
        if off <= threshold || n < 2 {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = m.get(p, p);
                let aqq = m.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    1.0 / (2.0 * theta)
                } else {
                    let s = theta.signum();
                    s / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                m.set(p, p, app - t * apq);
                m.set(q, q, aqq + t * apq);
                m.set(p, q, 0.0);
                m.set(q, p, 0.0);
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = m.get(k, p);
                    let akq = m.get(k, q);
                    let new_kp = akp - s * (akq + tau * akp);
                    let new_kq = akq + s * (akp - tau * akq);
                    m.set(k, p, new_kp);
                    m.set(p, k, new_kp);
                    m.set(k, q, new_kq);
                    m.set(q, k, new_kq);
                }
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }
    let mut values: Vec<f64> = (0..n).map(|i| m.get(i, i)).collect();
    values.sort_by(|x, y| y.partial_cmp(x).expect("eigenvalues are finite"));
    Ok(Spectrum { values, tol: MULTIPLICITY_TOL })
}

/// Distance spectrum of a connected graph.
pub fn distance_spectrum(g: &Graph) -> Result<Spectrum> {
    let d = distance_matrix(g)?;
    eigenvalues_symmetric(&SymMatrix::from(&d), JACOBI_TOL)
}

/// Second largest distance eigenvalue of a connected graph on >= 2 vertices.
pub fn lambda2(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::TooSmall { min: 2, n: g.n() });
    }
    Ok(distance_spectrum(g)?.lambda(2))
}

/// Ordered partition of {0..n-1} into disjoint nonempty cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    cells: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Partition> {
        let mut seen = vec![false; n];
        for cell in &cells {
            if cell.is_empty() {
                return Err(Error::BadPartition { reason: "empty cell".into() });
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::BadPartition { reason: format!("vertex {v} out of range 0..{n}") });
                }
                if seen[v] {
                    return Err(Error::BadPartition { reason: format!("vertex {v} appears twice") });
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::BadPartition { reason: format!("vertex {v} not covered") });
        }
        Ok(Partition { n, cells })
    }

    pub fn singletons(n: usize) -> Partition {
        Partition { n, cells: (0..n).map(|v| vec![v]).collect() }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Average-row-sum quotient of an integer symmetric matrix. Entries are
/// exact rationals; `equitable` records whether every block has constant row
/// sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    dim: usize,
    entries: Vec<Rat>,
    cell_sizes: Vec<usize>,
    equitable: bool,
}

impl QuotientMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Rat {
        self.entries[i * self.dim + j]
    }

    pub fn is_equitable(&self) -> bool {
        self.equitable
    }

    /// Eigenvalues of the quotient. The quotient of a symmetric matrix is
    /// similar to the symmetric matrix s_ij = blocksum_ij / sqrt(|Vi||Vj|),
    /// so the Jacobi solver applies.
    pub fn eigenvalues(&self) -> Result<Spectrum> {
        let m = self.dim;
        let sym = SymMatrix::from_fn(m, |i, j| {
            let scale = (self.cell_sizes[i] as f64 / self.cell_sizes[j] as f64).sqrt();
            self.get(i, j).to_f64() * scale
        });
        // Guard against drift from the two asymmetric square roots.
        let fixed = SymMatrix::from_fn(m, |i, j| 0.5 * (sym.get(i, j) + sym.get(j, i)));
        eigenvalues_symmetric(&fixed, JACOBI_TOL)
    }
}

/// Quotient of a distance matrix with respect to a cell partition.
pub fn quotient_matrix(d: &DistanceMatrix, p: &Partition) -> Result<QuotientMatrix> {
    if p.n() != d.n() {
        return Err(Error::BadPartition { reason: format!("partition covers {} vertices, matrix has {}", p.n(), d.n()) });
    }
    let m = p.cells().len();
    let mut entries = vec![Rat::ZERO; m * m];
    let mut equitable = true;
    for (i, ci) in p.cells().iter().enumerate() {
        for (j, cj) in p.cells().iter().enumerate() {
            let row_sum = |v: usize| -> i128 { cj.iter().map(|&u| d.get(v, u) as i128).sum() };
            let first = row_sum(ci[0]);
            let mut total = 0i128;
            for &v in ci {
                let s = row_sum(v);
                if s != first {
                    equitable = false;
                }
                total += s;
            }
            entries[i * m + j] = Rat::new(total, ci.len() as i128)?;
        }
    }
    Ok(QuotientMatrix { dim: m, entries, cell_sizes: p.cells().iter().map(Vec::len).collect(), equitable })
}

/// Coarsest partition of the matrix index set that is equitable for `d`,
/// computed by iterated refinement on (entry value, color) multisets. Cells
/// are ordered by their smallest vertex.
pub fn coarsest_equitable_partition(d: &DistanceMatrix) -> Partition {
    let n = d.n();
    let mut colors = vec![0u32; n];
    loop {
        let mut sigs: Vec<(u32, Vec<(u32, u32)>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut sig: Vec<(u32, u32)> = (0..n).map(|u| (d.get(v, u), colors[u])).collect();
            sig.sort_unstable();
            sigs.push((colors[v], sig));
        }
        let mut sorted: Vec<&(u32, Vec<(u32, u32)>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> =
            sigs.iter().map(|s| sorted.binary_search(&s).expect("signature present") as u32).collect();
        if next == colors {
            break;
        }
        colors = next;
    }
    let mut order: Vec<u32> = Vec::new();
    for &c in &colors {
        if !order.contains(&c) {
            order.push(c);
        }
    }
    let cells = order.iter().map(|&c| (0..n).filter(|&v| colors[v] == c).collect()).collect();
    Partition::new(n, cells).expect("refinement yields a valid partition")
}

/// Monic characteristic polynomial of a quotient matrix via the
/// Faddeev-LeVerrier recurrence in exact rational arithmetic.
pub fn char_poly(q: &QuotientMatrix) -> Result<Polynomial> {
    let n = q.dim;
    let mul = |a: &[Rat], b: &[Rat]| -> Result<Vec<Rat>> {
        let mut out = vec![Rat::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = a[i * n + k];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = out[i * n + j].try_add(aik.try_mul(b[k * n + j])?)?;
                }
            }
        }
        Ok(out)
    };
    let a: Vec<Rat> = q.entries.clone();
    let mut m: Vec<Rat> = (0..n * n)
        .map(|idx| if idx / n == idx % n { Rat::ONE } else { Rat::ZERO })
        .collect();
    let mut coeffs = vec![Rat::ONE];
    for k in 1..=n {
        let am = mul(&a, &m)?;
        let mut trace = Rat::ZERO;
        for i in 0..n {
            trace = trace.try_add(am[i * n + i])?;
        }
        let ck = trace.try_div(Rat::from_int(k as i128))?.try_neg()?;
        coeffs.push(ck);
        m = am;
        for i in 0..n {
            m[i * n + i] = m[i * n + i].try_add(ck)?;
        }
    }
    Ok(Polynomial::from_coeffs_desc(coeffs))
}

/// Cauchy interlacing self-test: eigenvalues of the principal submatrix of
/// D(g) on `subset` must interlace the full distance spectrum (tolerance
/// 1e-9). Always true for correct arithmetic.
pub fn interlacing_holds(g: &Graph, subset: &[usize]) -> Result<bool> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let d = distance_matrix(g)?;
    let full = eigenvalues_symmetric(&SymMatrix::from(&d), JACOBI_TOL)?;
    let sub = eigenvalues_symmetric(&SymMatrix::from(&d.principal(subset)), JACOBI_TOL)?;
    let n = full.len();
    let m = sub.len();
    let tol = 1e-9;
    for i in 0..m {
        let rho_b = sub.values()[i];
        if full.values()[i] < rho_b - tol {
            return Ok(false);
        }
        if rho_b < full.values()[n - m + i] - tol {
            return Ok(false);
        }
    }
    Ok(true)
}
