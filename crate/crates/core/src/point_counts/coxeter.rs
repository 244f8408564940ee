//! Finite Coxeter groups with a diagram automorphism.
//!
//! Groups are enumerated breadth-first inside the geometric representation
//! attached to an integral Cartan matrix, which is faithful and keeps every
//! computation in exact integers.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::point_counts::poly::QPolynomial;

/// Hard cap on the number of elements a group enumeration may produce.
pub const MAX_GROUP_ORDER: usize = 1_000_000;

/// A Coxeter diagram on labelled nodes together with an automorphism σ.
///
/// `m[a][b]` is the Coxeter label between the nodes at positions `a` and
/// `b`; `0` encodes `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedCoxeterDiagram {
    labels: Vec<usize>,
    m: Vec<Vec<u32>>,
    sigma: Vec<usize>,
}

impl TwistedCoxeterDiagram {
    /// `sigma[a]` is the position of the image of node `a`.
    pub fn new(labels: Vec<usize>, m: Vec<Vec<u32>>, sigma: Vec<usize>) -> Result<Self> {
        let r = labels.len();
        if m.len() != r || m.iter().any(|row| row.len() != r) || sigma.len() != r {
            return Err(Error::InvalidDiagram("dimension mismatch".into()));
        }
        if labels.iter().collect::<BTreeSet<_>>().len() != r {
            return Err(Error::InvalidDiagram("repeated node label".into()));
        }
        for a in 0..r {
            if m[a][a] != 1 {
                return Err(Error::InvalidDiagram(format!("m({a},{a}) must be 1")));
            }
            for b in 0..r {
                if a != b && (m[a][b] == 1 || m[a][b] != m[b][a]) {
                    return Err(Error::InvalidDiagram(format!("bad label m({a},{b})")));
                }
            }
        }
        let mut seen = vec![false; r];
        for &s in &sigma {
            if s >= r || std::mem::replace(&mut seen[s], true) {
                return Err(Error::InvalidDiagram("sigma is not a permutation".into()));
            }
        }
        for a in 0..r {
            for b in 0..r {
                if m[sigma[a]][sigma[b]] != m[a][b] {
                    return Err(Error::InvalidDiagram(format!(
                        "sigma does not preserve the label between {} and {}",
                        labels[a], labels[b]
                    )));
                }
            }
        }
        Ok(TwistedCoxeterDiagram { labels, m, sigma })
    }

    /// The extended diagram of type `C̃_g` on nodes `0..=g` with σ: `i ↦ g - i`.
    pub fn affine_c(g: usize) -> Result<Self> {
        if g == 0 {
            return Err(Error::InvalidDiagram("C̃_0 is empty".into()));
        }
        let r = g + 1;
        let mut m = vec![vec![2u32; r]; r];
        for (a, row) in m.iter_mut().enumerate() {
            row[a] = 1;
        }
        for a in 0..g {
            let label = if g == 1 {
                0
            } else if a == 0 || a == g - 1 {
                4
            } else {
                3
            };
            m[a][a + 1] = label;
            m[a + 1][a] = label;
        }
        Self::new((0..r).collect(), m, (0..r).map(|a| g - a).collect())
    }

    /// `S_n` with generators labelled `1..n`, optionally twisted by `i ↦ n - i`.
    pub fn symmetric_group(n: usize, flipped: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDiagram("S_0 is not defined".into()));
        }
        let r = n - 1;
        let mut m = vec![vec![2u32; r]; r];
        for a in 0..r {
            m[a][a] = 1;
            if a + 1 < r {
                m[a][a + 1] = 3;
                m[a + 1][a] = 3;
            }
        }
        let sigma = (0..r).map(|a| if flipped { r - 1 - a } else { a }).collect();
        Self::new((1..n).collect(), m, sigma)
    }

    /// A cyclic diagram on `len` nodes with σ the rotation by `shift`.
    pub fn cycle(len: usize, shift: usize) -> Result<Self> {
        if len < 2 {
            return Err(Error::InvalidDiagram("a cycle needs at least two nodes".into()));
        }
        let mut m = vec![vec![2u32; len]; len];
        for a in 0..len {
            m[a][a] = 1;
        }
        for a in 0..len {
            let b = (a + 1) % len;
            let label = if len == 2 { 0 } else { 3 };
            m[a][b] = label;
            m[b][a] = label;
        }
        Self::new((0..len).collect(), m, (0..len).map(|a| (a + shift) % len).collect())
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Coxeter label between two nodes given by label.
    pub fn coxeter_label(&self, a: usize, b: usize) -> Option<u32> {
        Some(self.m[self.position(a)?][self.position(b)?])
    }

    /// σ applied to a node label.
    pub fn sigma_label(&self, label: usize) -> Option<usize> {
        self.position(label).map(|a| self.labels[self.sigma[a]])
    }

    fn position(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn is_stable(&self, subset: &BTreeSet<usize>) -> bool {
        subset.iter().all(|&l| self.sigma_label(l).is_some_and(|s| subset.contains(&s)))
    }

    /// Smallest σ-stable set of nodes containing `subset`.
    pub fn stable_closure(&self, subset: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
        let mut out = BTreeSet::new();
        for &l in subset {
            let mut cur = l;
            loop {
                if !out.insert(cur) {
                    break;
                }
                cur = self.sigma_label(cur).ok_or(Error::IndexOutOfRange {
                    index: l,
                    max: self.labels.iter().copied().max().unwrap_or(0),
                })?;
            }
        }
        Ok(out)
    }

    /// All non-empty σ-stable subsets of nodes, in increasing bitmask order.
    pub fn stable_subsets(&self) -> Vec<BTreeSet<usize>> {
        let r = self.rank();
        assert!(r < 32, "diagram too large for subset enumeration");
        (1u32..1 << r)
            .map(|mask| (0..r).filter(|a| mask >> a & 1 == 1).map(|a| self.labels[a]).collect())
            .filter(|s| self.is_stable(s))
            .collect()
    }

    /// The sub-diagram on the given labels. The subset must be σ-stable.
    pub fn restrict(&self, subset: &BTreeSet<usize>) -> Result<Self> {
        if !self.is_stable(subset) {
            return Err(Error::InvalidDiagram(format!("{subset:?} is not sigma-stable")));
        }
        let pos: Vec<usize> = subset
            .iter()
            .map(|&l| self.position(l).ok_or(Error::InvalidDiagram(format!("no node {l}"))))
            .collect::<Result<_>>()?;
        let m = pos.iter().map(|&a| pos.iter().map(|&b| self.m[a][b]).collect()).collect();
        let sigma = pos
            .iter()
            .map(|&a| pos.iter().position(|&b| b == self.sigma[a]).expect("stable subset"))
            .collect();
        Self::new(subset.iter().copied().collect(), m, sigma)
    }

    /// Integral Cartan matrix realizing the Coxeter labels.
    fn cartan(&self) -> Result<Vec<Vec<i64>>> {
        let r = self.rank();
        let mut a = vec![vec![0i64; r]; r];
        for i in 0..r {
            a[i][i] = 2;
            for j in i + 1..r {
                let (x, y) = match self.m[i][j] {
                    2 => (0, 0),
                    3 => (-1, -1),
                    4 => (-1, -2),
                    6 => (-1, -3),
                    0 => (-2, -2),
                    other => {
                        return Err(Error::InvalidDiagram(format!(
                            "label {other} is not crystallographic"
                        )))
                    }
                };
                a[i][j] = x;
                a[j][i] = y;
            }
        }
        Ok(a)
    }

    /// Enumerates the Coxeter group generated by this diagram.
    pub fn enumerate(&self) -> Result<FiniteCoxeterGroup> {
        self.enumerate_with_cap(MAX_GROUP_ORDER)
    }

    pub fn enumerate_with_cap(&self, cap: usize) -> Result<FiniteCoxeterGroup> {
        let r = self.rank();
        let cartan = self.cartan()?;
        // Column j of the matrix of w holds the coordinates of w(α_j).
        let identity: Vec<i64> =
            (0..r * r).map(|k| i64::from(k / r == k % r)).collect();
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut matrices = vec![identity.clone()];
        let mut lengths = vec![0usize];
        let mut parent: Vec<Option<(usize, usize)>> = vec![None];
        index.insert(identity, 0);
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            let mut row = vec![usize::MAX; r];
            for (i, slot) in row.iter_mut().enumerate() {
                let mat = &matrices[w];
                let mut next = mat.clone();
                for j in 0..r {
                    let c = cartan[i][j];
                    if c != 0 {
                        for k in 0..r {
                            next[k * r + j] -= c * mat[k * r + i];
                        }
                    }
                }
                if let Some(&idx) = index.get(&next) {
                    *slot = idx;
                    continue;
                }
                if matrices.len() >= cap {
                    return Err(Error::GroupTooLarge(cap));
                }
                let idx = matrices.len();
                index.insert(next.clone(), idx);
                matrices.push(next);
                lengths.push(lengths[w] + 1);
                parent.push(Some((w, i)));
                queue.push_back(idx);
                *slot = idx;
            }
            right.push(row);
        }
        let mut sigma_image = vec![0usize; matrices.len()];
        for idx in 1..matrices.len() {
            let (p, i) = parent[idx].expect("non-identity elements have parents");
            sigma_image[idx] = right[sigma_image[p]][self.sigma[i]];
        }
        Ok(FiniteCoxeterGroup { labels: self.labels.clone(), lengths, right, sigma_image })
    }
}

/// An enumerated finite Coxeter group. Element `0` is the identity.
#[derive(Clone, Debug)]
pub struct FiniteCoxeterGroup {
    labels: Vec<usize>,
    lengths: Vec<usize>,
    right: Vec<Vec<usize>>,
    sigma_image: Vec<usize>,
}

impl FiniteCoxeterGroup {
    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w]
    }

    pub fn sigma(&self, w: usize) -> usize {
        self.sigma_image[w]
    }

    /// `w·s` where `s` is the generator at position `i`.
    pub fn right_multiply(&self, w: usize, i: usize) -> usize {
        self.right[w][i]
    }

    /// The element given by a word in node labels.
    pub fn element_of_word(&self, word: &[usize]) -> Result<usize> {
        word.iter().try_fold(0usize, |w, &l| {
            let i = self.labels.iter().position(|&x| x == l).ok_or(Error::IndexOutOfRange {
                index: l,
                max: self.labels.iter().copied().max().unwrap_or(0),
            })?;
            Ok(self.right[w][i])
        })
    }

    /// A reduced word for `w`, in node labels.
    pub fn reduced_word(&self, w: usize) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.lengths[w]);
        let mut cur = w;
        while cur != 0 {
            let i = (0..self.labels.len())
                .find(|&i| self.lengths[self.right[cur][i]] < self.lengths[cur])
                .expect("non-identity element has a right descent");
            word.push(self.labels[i]);
            cur = self.right[cur][i];
        }
        word.reverse();
        word
    }

    /// Node labels occurring in any reduced word of `w`.
    pub fn support(&self, w: usize) -> BTreeSet<usize> {
        self.reduced_word(w).into_iter().collect()
    }

    /// The unique element of maximal length.
    pub fn longest(&self) -> usize {
        (0..self.order()).max_by_key(|&w| self.lengths[w]).unwrap_or(0)
    }

    /// `Σ_{w : σ(w) = w} q^{ℓ(w)}`.
    pub fn twisted_poincare(&self) -> QPolynomial {
        self.length_sum(|w| self.sigma_image[w] == w)
    }

    /// `Σ_w q^{ℓ(w)}` over the whole group.
    pub fn poincare(&self) -> QPolynomial {
        self.length_sum(|_| true)
    }

    fn length_sum(&self, keep: impl Fn(usize) -> bool) -> QPolynomial {
        let max = self.lengths.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0i64; max + 1];
        for w in 0..self.order() {
            if keep(w) {
                counts[self.lengths[w]] += 1;
            }
        }
        QPolynomial::from_i64(&counts)
    }
}
