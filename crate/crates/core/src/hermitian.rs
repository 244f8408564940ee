//! Brute-force Hermitian geometry over `F_{q²}` for prime `q`.
//!
//! Subspaces are enumerated through their reduced row echelon forms, so each
//! one is produced exactly once. Everything here is exponential and guarded by
//! [`MAX_SUBSPACE_CANDIDATES`].

use crate::error::{Error, Result};
use crate::point_counts::is_prime;

/// Upper bound on the number of echelon matrices an enumeration may visit.
pub const MAX_SUBSPACE_CANDIDATES: u64 = 5_000_000;

/// The field `F_q[t]/(t² + c₁t + c₀)`; element `x + y·t` is stored as
/// `x + q·y`.
#[derive(Clone, Debug)]
pub struct FqSquared {
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    conj: Vec<u32>,
}

impl FqSquared {
    pub fn new(q: u32) -> Result<Self> {
        if !is_prime(u64::from(q)) || q > 9 {
            return Err(Error::InvalidArithmetic(format!(
                "q = {q} must be a prime not exceeding 9"
            )));
        }
        // first monic quadratic without roots in F_q
        let (c1, c0) = (0..q)
            .flat_map(|c1| (0..q).map(move |c0| (c1, c0)))
            .find(|&(c1, c0)| (0..q).all(|t| (t * t + c1 * t + c0) % q != 0))
            .expect("an irreducible quadratic exists over every prime field");
        let size = (q * q) as usize;
        let split = |e: u32| (e % q, e / q);
        let join = |x: u32, y: u32| x % q + q * (y % q);
        let mut add = vec![0; size * size];
        let mut mul = vec![0; size * size];
        for a in 0..size as u32 {
            for b in 0..size as u32 {
                let ((ax, ay), (bx, by)) = (split(a), split(b));
                add[(a as usize) * size + b as usize] = join(ax + bx, ay + by);
                // t² = -c₁t - c₀
                let yy = ay * by;
                let x = ax * bx + (q - c0 % q) * yy;
                let y = ax * by + ay * bx + (q - c1 % q) * yy;
                mul[(a as usize) * size + b as usize] = join(x, y);
            }
        }
        let neg = (0..size as u32).map(|a| {
            let (x, y) = split(a);
            join(q - x, q - y)
        });
        let mut field = FqSquared { q, add, mul, neg: neg.collect(), conj: Vec::new() };
        field.conj = (0..size as u32).map(|a| field.pow(a, q)).collect();
        Ok(field)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn order(&self) -> u32 {
        self.q * self.q
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.order() + b) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.order() + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    /// `x ↦ x^q`.
    pub fn conj(&self, a: u32) -> u32 {
        self.conj[a as usize]
    }

    pub fn pow(&self, a: u32, e: u32) -> u32 {
        (0..e).fold(self.one(), |acc, _| self.mul(acc, a))
    }

    /// Whether `a` lies in the prime subfield `F_q`.
    pub fn in_base_field(&self, a: u32) -> bool {
        a < self.q
    }
}

/// `F_{q²}^g` with the form `⟨a, b⟩ = Σ_i a_i · conj(b_{g+1-i})`.
#[derive(Clone, Debug)]
pub struct HermitianSpace {
    field: FqSquared,
    dim: usize,
}

impl HermitianSpace {
    pub fn new(dim: usize, q: u32) -> Result<Self> {
        Ok(HermitianSpace { field: FqSquared::new(q)?, dim })
    }

    pub fn field(&self) -> &FqSquared {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn form(&self, a: &[u32], b: &[u32]) -> u32 {
        let f = &self.field;
        (0..self.dim).fold(f.zero(), |acc, i| {
            f.add(acc, f.mul(a[i], f.conj(b[self.dim - 1 - i])))
        })
    }

    fn totally_isotropic(&self, rows: &[Vec<u32>]) -> bool {
        (0..rows.len()).all(|a| (a..rows.len()).all(|b| self.form(&rows[a], &rows[b]) == 0))
    }

    /// Number of echelon matrices of rank `k`, an upper bound on the work
    /// needed to list the `k`-dimensional subspaces.
    fn candidate_count(&self, k: usize) -> u64 {
        let big_q = u64::from(self.field.order());
        let binom = (0..k).fold(1u64, |acc, i| acc * (self.dim - i) as u64 / (i as u64 + 1));
        binom.saturating_mul(big_q.saturating_pow((k * (self.dim - k)) as u32))
    }

    fn check_budget(&self, dims: impl Iterator<Item = usize>) -> Result<()> {
        let total: u64 = dims.map(|k| self.candidate_count(k)).fold(0, u64::saturating_add);
        if total > MAX_SUBSPACE_CANDIDATES {
            return Err(Error::BudgetExceeded(format!(
                "{total} echelon matrices for g = {}, q = {}",
                self.dim,
                self.field.q()
            )));
        }
        Ok(())
    }

    /// Every totally isotropic `k`-dimensional subspace, as an echelon basis.
    pub fn isotropic_subspaces(&self, k: usize) -> Result<Vec<Vec<Vec<u32>>>> {
        self.check_budget(std::iter::once(k))?;
        let mut out = Vec::new();
        let mut pivots = Vec::with_capacity(k);
        self.choose_pivots(k, 0, &mut pivots, &mut out);
        Ok(out)
    }

    fn choose_pivots(&self, k: usize, from: usize, pivots: &mut Vec<usize>, out: &mut Vec<Vec<Vec<u32>>>) {
        if pivots.len() == k {
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let p = pivots[r];
                    (p + 1..self.dim).filter(|c| !pivots.contains(c)).map(move |c| (r, c))
                })
                .collect();
            let mut rows = vec![vec![0u32; self.dim]; k];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = 1;
            }
            self.fill_free(&free, 0, &mut rows, out);
            return;
        }
        for p in from..self.dim {
            pivots.push(p);
            self.choose_pivots(k, p + 1, pivots, out);
            pivots.pop();
        }
    }

    fn fill_free(&self, free: &[(usize, usize)], at: usize, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if at == free.len() {
            if self.totally_isotropic(rows) {
                out.push(rows.clone());
            }
            return;
        }
        let (r, c) = free[at];
        for v in 0..self.field.order() {
            rows[r][c] = v;
            self.fill_free(free, at + 1, rows, out);
        }
        rows[r][c] = 0;
    }

    /// Whether every row of `small` lies in the span of the echelon basis `big`.
    fn contained_in(&self, small: &[Vec<u32>], big: &[Vec<u32>]) -> bool {
        let f = &self.field;
        small.iter().all(|u| {
            let mut rest = u.clone();
            for row in big {
                let p = row.iter().position(|&x| x != 0).expect("echelon rows are non-zero");
                let c = rest[p];
                if c != 0 {
                    let nc = f.neg(c);
                    for (x, &y) in rest.iter_mut().zip(row) {
                        *x = f.add(*x, f.mul(nc, y));
                    }
                }
            }
            rest.iter().all(|&x| x == 0)
        })
    }
}

/// Number of isotropic lines in `F_{q²}^g`.
pub fn isotropic_point_count(g: usize, q: u32) -> Result<u64> {
    Ok(HermitianSpace::new(g, q)?.isotropic_subspaces(1)?.len() as u64)
}

/// Number of chains `V_1 ⊂ … ⊂ V_{⌊g/2⌋}` of totally isotropic subspaces
/// with `dim V_i = i`.
pub fn isotropic_flag_count(g: usize, q: u32) -> Result<u64> {
    let space = HermitianSpace::new(g, q)?;
    let m = g / 2;
    space.check_budget(1..=m)?;
    // chains ending in each subspace of the previous level
    let mut prev: Vec<(Vec<Vec<u32>>, u64)> = vec![(Vec::new(), 1)];
    for k in 1..=m {
        let level = space.isotropic_subspaces(k)?;
        prev = level
            .into_iter()
            .map(|v| {
                let chains = prev
                    .iter()
                    .filter(|(u, _)| space.contained_in(u, &v))
                    .map(|(_, c)| c)
                    .sum();
                (v, chains)
            })
            .collect();
    }
    Ok(prev.iter().map(|(_, c)| c).sum())
}
