//! Random symmetric tridiagonal matrices whose mean-square structure is the
//! growing-tree transfer operator: Gaussian diagonal, chi-distributed
//! off-diagonals with the degree count as degrees of freedom. Averaging the
//! squared off-diagonals recovers the unit-slope growing weights, so the
//! deterministic spectral results (Hermite charpoly, semicircle bulk) are the
//! ensemble's skeleton.

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, Gamma, Normal};

use crate::error::{Error, Result};
use crate::numeric::ln_gamma;
use crate::profile::BranchingProfile;
use crate::tridiag;

#[derive(Debug, Clone)]
pub struct TridiagSample {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
}

/// Deterministic RNG for sample `index` of a run keyed by `seed`; distinct
/// indices use distinct cipher streams, so samples are independent and any
/// one of them can be regenerated in isolation.
pub fn seeded_rng(seed: u64, index: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// One matrix draw: diag[i] ~ N(0, sigma^2), offdiag[i] ~ chi_{i+1}.
pub fn sample_matrix(k: usize, sigma: f64, rng: &mut ChaCha20Rng) -> Result<TridiagSample> {
    if k == 0 || sigma < 0.0 {
        return Err(Error::InvalidParameter(format!("k = {k}, sigma = {sigma}")));
    }
    let normal = Normal::new(0.0, sigma)
        .map_err(|e| Error::InvalidParameter(format!("normal: {e}")))?;
    let diag: Vec<f64> = (0..k).map(|_| normal.sample(rng)).collect();
    let mut offdiag = Vec::with_capacity(k.saturating_sub(1));
    for dof in 1..k {
        // chi_nu = sqrt of Gamma(nu/2, scale 2)
        let gamma = Gamma::new(dof as f64 / 2.0, 2.0)
            .map_err(|e| Error::InvalidParameter(format!("gamma: {e}")))?;
        offdiag.push(gamma.sample(rng).sqrt());
    }
    Ok(TridiagSample { diag, offdiag })
}

pub fn sample_with_seed(k: usize, sigma: f64, seed: u64, index: u64) -> Result<TridiagSample> {
    sample_matrix(k, sigma, &mut seeded_rng(seed, index))
}

pub fn eigenvalues(sample: &TridiagSample) -> Result<Vec<f64>> {
    tridiag::eigenvalues_sym(&sample.diag, &sample.offdiag)
}

/// Eigenvalues of `samples` independent draws, pooled and sorted.
pub fn pooled_eigenvalues(k: usize, sigma: f64, samples: usize, seed: u64) -> Result<Vec<f64>> {
    let mut all = Vec::with_capacity(k * samples);
    for i in 0..samples {
        let s = sample_with_seed(k, sigma, seed, i as u64)?;
        all.extend(eigenvalues(&s)?);
    }
    all.sort_by(|a, b| a.partial_cmp(b).expect("no NaN eigenvalues"));
    Ok(all)
}

/// E[chi_nu] = sqrt(2) Gamma((nu+1)/2) / Gamma(nu/2).
pub fn chi_mean(dof: f64) -> f64 {
    2.0f64.sqrt() * (ln_gamma((dof + 1.0) / 2.0) - ln_gamma(dof / 2.0)).exp()
}

/// Profile whose weights are the mean squared off-diagonals E[chi_k^2] = k:
/// exactly the unit-slope growing tree.
pub fn mean_square_profile(k: usize) -> BranchingProfile {
    BranchingProfile::growing(1, 1, k).expect("unit growing weights are positive")
}

/// Determinant by the tridiagonal three-term recursion
/// D_i = d_i D_{i-1} - b_{i-1}^2 D_{i-2}.
pub fn det_recursion(sample: &TridiagSample) -> f64 {
    let mut prev = 1.0f64;
    let mut cur = 1.0f64;
    for (i, d) in sample.diag.iter().enumerate() {
        let next = if i == 0 {
            *d
        } else {
            d * cur - sample.offdiag[i - 1] * sample.offdiag[i - 1] * prev
        };
        prev = cur;
        cur = next;
    }
    cur
}

/// Determinant by dense LU with partial pivoting, sharing no code with the
/// recursion route.
pub fn det_dense(sample: &TridiagSample) -> f64 {
    let n = sample.diag.len();
    let mut a = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        a[i][i] = sample.diag[i];
        if i + 1 < n {
            a[i][i + 1] = sample.offdiag[i];
            a[i + 1][i] = sample.offdiag[i];
        }
    }
    let mut det = 1.0f64;
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r, &s| a[r][col].abs().partial_cmp(&a[s][col].abs()).unwrap())
            .unwrap();
        if a[pivot_row][col] == 0.0 {
            return 0.0;
        }
        if pivot_row != col {
            a.swap(pivot_row, col);
            det = -det;
        }
        det *= a[col][col];
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            if factor != 0.0 {
                for j in col..n {
                    a[row][j] -= factor * a[col][j];
                }
            }
        }
    }
    det
}

/// Monte Carlo mean of chi_nu over `n` draws.
pub fn chi_mc_mean(dof: usize, n: usize, seed: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::EmptyEnsemble);
    }
    let gamma = Gamma::new(dof as f64 / 2.0, 2.0)
        .map_err(|e| Error::InvalidParameter(format!("gamma: {e}")))?;
    let mut rng = seeded_rng(seed, 0);
    let mut acc = 0.0f64;
    for _ in 0..n {
        acc += gamma.sample(&mut rng).sqrt();
    }
    Ok(acc / n as f64)
}
