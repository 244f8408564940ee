//! Extended alcoves: tuples `(x_0, …, x_{n-1})` of integer vectors.
//!
//! Indices are extended by `x_{i+n} = x_i - (1,…,1)`. The symplectic duality
//! condition reads `x_i(j) + x_{2g-i}(2g+1-j) = c - 1` under that convention.

use std::fmt;

use crate::error::{Error, Result};
use crate::weyl::{ExtAffineElement, GroupContext};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedAlcove {
    ctx: GroupContext,
    x: Vec<Vec<i64>>,
}

/// `ω_i = (-1^(i), 0^(n-i))`.
pub fn standard_vertex(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|k| if k < i { -1 } else { 0 }).collect()
}

impl ExtendedAlcove {
    /// Validates the step condition: `x_{i+1} = x_i - e_j` for exactly one `j`.
    pub fn new(ctx: GroupContext, x: Vec<Vec<i64>>) -> Result<Self> {
        let n = ctx.rank();
        if x.len() != n || x.iter().any(|v| v.len() != n) {
            return Err(Error::InvalidAlcove(format!("expected {n} vectors of length {n}")));
        }
        let alcove = ExtendedAlcove { ctx, x };
        alcove.step_directions()?;
        Ok(alcove)
    }

    /// Builds an alcove from a full tuple without checking anything. Callers
    /// must already know the step condition holds.
    pub(crate) fn from_raw(ctx: GroupContext, x: Vec<Vec<i64>>) -> Self {
        ExtendedAlcove { ctx, x }
    }

    pub fn standard(ctx: GroupContext) -> Self {
        let n = ctx.rank();
        ExtendedAlcove { ctx, x: (0..n).map(|i| standard_vertex(n, i)).collect() }
    }

    /// The alcove `(w·ω_i + ν)_i` of `x = t^ν w`.
    pub fn of(element: &ExtAffineElement) -> Self {
        let ctx = element.context();
        let n = ctx.rank();
        let x = (0..n).map(|i| element.act(&standard_vertex(n, i))).collect();
        ExtendedAlcove { ctx, x }
    }

    pub fn context(&self) -> GroupContext {
        self.ctx
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.x
    }

    pub fn vertex(&self, i: usize) -> &[i64] {
        &self.x[i]
    }

    /// `x_i` for any integer `i`, using `x_{i+kn} = x_i - k·1`.
    pub fn extended(&self, i: i64) -> Vec<i64> {
        let n = self.x.len() as i64;
        let k = i.div_euclid(n);
        self.x[i.rem_euclid(n) as usize].iter().map(|&v| v - k).collect()
    }

    /// For each `i`, the 0-based coordinate that drops when passing to `x_{i+1}`.
    fn step_directions(&self) -> Result<Vec<usize>> {
        let n = self.x.len();
        let mut dirs = Vec::with_capacity(n);
        for i in 0..n {
            let next = self.extended(i as i64 + 1);
            let mut dropped = None;
            for j in 0..n {
                match self.x[i][j] - next[j] {
                    0 => {}
                    1 if dropped.is_none() => dropped = Some(j),
                    _ => {
                        return Err(Error::InvalidAlcove(format!(
                            "step condition fails between x_{i} and x_{}",
                            i + 1
                        )))
                    }
                }
            }
            dirs.push(dropped.ok_or_else(|| {
                Error::InvalidAlcove(format!("x_{} equals x_{i}", i + 1))
            })?);
        }
        Ok(dirs)
    }

    /// Inverse of [`ExtendedAlcove::of`]: `ν = x_0` and `w(i) = ` the
    /// coordinate dropping between `x_i` and `x_{i+1}`.
    pub fn element(&self) -> Result<ExtAffineElement> {
        let perm = self.step_directions()?;
        ExtAffineElement::new(self.ctx, self.x[0].clone(), perm)
            .map_err(|e| Error::InvalidAlcove(format!("not an alcove of {}: {e}", self.ctx)))
    }

    /// The constant `c` of the duality condition, if it holds.
    pub fn duality_constant(&self) -> Option<i64> {
        let n = self.x.len() as i64;
        let c = self.x[0][0] + self.extended(n)[(n - 1) as usize] + 1;
        for i in 0..=n {
            let xi = self.extended(i);
            let dual = self.extended(n - i);
            for j in 0..n as usize {
                if xi[j] + dual[n as usize - 1 - j] != c - 1 {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// `ω_i ≤ x_i ≤ ω_i + 1` and `Σ x_i = n - r - i` for all `i`; in the
    /// symplectic case also the duality condition.
    pub fn is_mu_permissible(&self) -> bool {
        let n = self.ctx.rank();
        let r = self.ctx.mu_weight() as i64;
        for (i, xi) in self.x.iter().enumerate() {
            let omega = standard_vertex(n, i);
            if xi.iter().zip(&omega).any(|(&a, &w)| a < w || a > w + 1) {
                return false;
            }
            if xi.iter().sum::<i64>() != n as i64 - r - i as i64 {
                return false;
            }
        }
        if self.ctx.is_symplectic() {
            match self.duality_constant() {
                None => return false,
                Some(c) => assert_eq!(c, 1, "permissible symplectic alcove with c(x) = {c}"),
            }
        }
        true
    }

    /// Concatenated coordinates, used as the canonical sort key.
    pub fn flat(&self) -> Vec<i64> {
        self.x.iter().flatten().copied().collect()
    }
}

impl fmt::Display for ExtendedAlcove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .x
            .iter()
            .map(|v| {
                let inner: Vec<String> = v.iter().map(i64::to_string).collect();
                format!("({})", inner.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}
