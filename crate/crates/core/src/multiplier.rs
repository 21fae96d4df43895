//! Schur multiplier dimensions.
//!
//! Three routes: the tag presentation (a central tag for every bracket pair,
//! cut down by the section change and the Jacobi identity), second homology
//! with trivial coefficients as an independent check, and closed formulas for
//! the abelian and Heisenberg families.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{is_zero_vec, Matrix, Scalar, Subspace};
use crate::recognize::FamilyDescriptor;
use crate::superalg::{koszul, AlgebraError, GradedDim, Parity, SuperAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultiplierError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("no closed formula for {0}")]
    NoFormula(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Tags,
    Homology,
    Formula,
}

impl Method {
    pub fn id(self) -> &'static str {
        match self {
            Method::Tags => "tags",
            Method::Homology => "homology",
            Method::Formula => "formula",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierResult {
    pub dim: GradedDim,
    pub method: Method,
    /// Tag labels spanning the multiplier (tags method only).
    pub free_generators: Vec<String>,
    /// Rank of the Jacobi relations modulo the absorbed space.
    pub relation_rank: usize,
    pub tag_count: usize,
    pub absorbed: usize,
}

impl MultiplierResult {
    fn bare(dim: GradedDim, method: Method) -> Self {
        MultiplierResult { dim, method, free_generators: Vec::new(), relation_rank: 0, tag_count: 0, absorbed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tag {
    pub pair: (usize, usize),
    pub parity: Parity,
    /// `m1`, `m2`, ... in tag order.
    pub label: String,
}

/// Cover presentation `[x_i, x_j] = (L-value) + m_ij` with central tags.
///
/// Tags run over pairs `i < j` in lexicographic order, then over `(i, i)` for
/// odd `i`.
#[derive(Debug, Clone)]
pub struct TagPresentation {
    pub tags: Vec<Tag>,
    /// Spanned by `sum_{(i,j)} c_ij^k m_ij` for each basis index `k`.
    pub absorbed: Subspace,
    /// Tags whose L-values were picked greedily as a basis of `L^2`.
    pub absorbed_tags: Vec<usize>,
    /// One Jacobi relation per multiset of three basis indices; zero rows
    /// are dropped.
    pub relations: Matrix,
    index: Vec<Option<usize>>,
    n: usize,
}

impl TagPresentation {
    pub fn new(a: &SuperAlgebra) -> Result<Self, MultiplierError> {
        a.ensure_valid()?;
        a.ensure_nilpotent()?;
        let n = a.n();
        let mut tags = Vec::new();
        let mut index = vec![None; n * n];
        let mut push = |i: usize, j: usize, tags: &mut Vec<Tag>| {
            index[i * n + j] = Some(tags.len());
            tags.push(Tag { pair: (i, j), parity: a.parity(i) + a.parity(j), label: format!("m{}", tags.len() + 1) });
        };
        for i in 0..n {
            for j in i + 1..n {
                push(i, j, &mut tags);
            }
        }
        for i in a.indices(Parity::Odd) {
            push(i, i, &mut tags);
        }
        let t = tags.len();

        let values: Vec<Vec<Scalar>> = tags.iter().map(|tg| a.bracket_basis(tg.pair.0, tg.pair.1).to_vec()).collect();
        let shifts: Vec<Vec<Scalar>> = (0..n).map(|k| values.iter().map(|v| v[k].clone()).collect()).collect();
        let absorbed = Subspace::span(t, shifts).expect("tag length");
        let absorbed_tags = Subspace::zero(n).greedy_extension(&values).expect("algebra length");

        let mut pres = TagPresentation { tags, absorbed, absorbed_tags, relations: Matrix::zeros(0, t), index, n };
        let mut rows = Vec::new();
        for x in 0..n {
            for y in x..n {
                for z in y..n {
                    let row = pres.jacobi_row(a, x, y, z);
                    if !is_zero_vec(&row) {
                        rows.push(row);
                    }
                }
            }
        }
        pres.relations = Matrix::from_rows(t, rows).expect("tag length");
        pres.check(a)?;
        Ok(pres)
    }

    /// Tag of `[x_i, x_j]` as `(tag index, coefficient)`; `None` for even
    /// squares.
    pub fn tag_of(&self, a: &SuperAlgebra, i: usize, j: usize) -> Option<(usize, Scalar)> {
        if i <= j {
            self.index[i * self.n + j].map(|t| (t, Scalar::one()))
        } else {
            let t = self.index[j * self.n + i]?;
            Some((t, -koszul(a.parity(i), a.parity(j))))
        }
    }

    /// Tag part of the graded Jacobi sum on `(x, y, z)` in the cover. Tags are
    /// central, so inner brackets contribute only their L-part.
    fn jacobi_row(&self, a: &SuperAlgebra, x: usize, y: usize, z: usize) -> Vec<Scalar> {
        let mut row = vec![Scalar::zero(); self.tags.len()];
        for (u, v, w) in [(x, y, z), (y, z, x), (z, x, y)] {
            let sign = koszul(a.parity(u), a.parity(w));
            for (l, c) in a.bracket_basis(v, w).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if let Some((t, s)) = self.tag_of(a, u, l) {
                    row[t] += &sign * c * s;
                }
            }
        }
        row
    }

    /// Relations are parity-homogeneous and vanish when tags are replaced by
    /// L-values.
    fn check(&self, a: &SuperAlgebra) -> Result<(), MultiplierError> {
        for (r, row) in self.relations.row_vecs().iter().enumerate() {
            let parities: std::collections::BTreeSet<Parity> =
                row.iter().zip(&self.tags).filter(|(c, _)| !c.is_zero()).map(|(_, t)| t.parity).collect();
            if parities.len() > 1 {
                return Err(MultiplierError::Inconsistent(format!("relation {r} mixes parities")));
            }
            let mut value = vec![Scalar::zero(); self.n];
            for (c, tag) in row.iter().zip(&self.tags) {
                if c.is_zero() {
                    continue;
                }
                for (o, b) in value.iter_mut().zip(a.bracket_basis(tag.pair.0, tag.pair.1)) {
                    *o += c * b;
                }
            }
            if !is_zero_vec(&value) {
                return Err(MultiplierError::Inconsistent(format!("relation {r} does not vanish on L")));
            }
        }
        Ok(())
    }

    pub fn tag_count(&self) -> usize {
        self.tags.len()
    }

    pub fn tag_count_by_parity(&self) -> GradedDim {
        let even = self.tags.iter().filter(|t| t.parity == Parity::Even).count();
        GradedDim::new(even, self.tags.len() - even)
    }

    fn graded_dim(&self, s: &Subspace) -> GradedDim {
        let even = s.pivots().iter().filter(|&&p| self.tags[p].parity == Parity::Even).count();
        GradedDim::new(even, s.dim() - even)
    }

    pub fn result(&self) -> MultiplierResult {
        let t = self.tags.len();
        let relations = Subspace::span(t, self.relations.row_vecs()).expect("tag length");
        let killed = self.absorbed.sum(&relations).expect("tag length");
        let absorbed = self.graded_dim(&self.absorbed);
        let dim = self.tag_count_by_parity() - self.graded_dim(&killed);
        let absorbed_set: std::collections::HashSet<usize> = self.absorbed_tags.iter().copied().collect();
        let candidates: Vec<usize> = (0..t).filter(|i| !absorbed_set.contains(i)).collect();
        let units: Vec<Vec<Scalar>> = candidates.iter().map(|&i| crate::exactlin::unit(t, i)).collect();
        let kept = killed.greedy_extension(&units).expect("tag length");
        let free_generators = kept.into_iter().map(|k| self.tags[candidates[k]].label.clone()).collect();
        MultiplierResult {
            dim,
            method: Method::Tags,
            free_generators,
            relation_rank: killed.dim() - absorbed.total(),
            tag_count: t,
            absorbed: absorbed.total(),
        }
    }
}

pub fn multiplier_tags(a: &SuperAlgebra) -> Result<MultiplierResult, MultiplierError> {
    Ok(TagPresentation::new(a)?.result())
}

/// Basis of the super exterior power `Λ^k L`: index tuples `i_1 <= ... <= i_k`
/// where only odd indices may repeat.
fn wedge_basis(a: &SuperAlgebra, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for w in &out {
            let start = w.last().copied().unwrap_or(0);
            for i in start..a.n() {
                if w.last() == Some(&i) && a.parity(i) == Parity::Even {
                    continue;
                }
                let mut v = w.clone();
                v.push(i);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// `x_i ∧ x_j` in the sorted basis of `Λ^2 L`.
fn wedge2(a: &SuperAlgebra, i: usize, j: usize) -> Option<((usize, usize), Scalar)> {
    if i == j && a.parity(i) == Parity::Even {
        None
    } else if i <= j {
        Some(((i, j), Scalar::one()))
    } else {
        Some(((j, i), -koszul(a.parity(i), a.parity(j))))
    }
}

/// Graded dimension of `H_2(L)` from the chain complex
/// `Λ^3 L -> Λ^2 L -> L`.
pub fn multiplier_homology(a: &SuperAlgebra) -> Result<MultiplierResult, MultiplierError> {
    a.ensure_valid()?;
    let n = a.n();
    let c2 = wedge_basis(a, 2);
    let c3 = wedge_basis(a, 3);
    let pos = |p: (usize, usize)| c2.iter().position(|w| w[0] == p.0 && w[1] == p.1).expect("wedge basis");
    let parity_of = |w: &[usize]| w.iter().fold(Parity::Even, |acc, &i| acc + a.parity(i));

    let d2 = Matrix::from_rows(n, c2.iter().map(|w| a.bracket_basis(w[0], w[1]).to_vec()).collect())
        .expect("algebra length");
    let mut d3_rows = Vec::with_capacity(c3.len());
    for w in &c3 {
        let (x, y, z) = (w[0], w[1], w[2]);
        let (px, py, pz) = (a.parity(x), a.parity(y), a.parity(z));
        let mut row = vec![Scalar::zero(); c2.len()];
        let terms = [
            (x, y, z, Scalar::one()),
            (x, z, y, -koszul(py, pz)),
            (y, z, x, koszul(px, py + pz)),
        ];
        for (u, v, rest, sign) in terms {
            for (l, c) in a.bracket_basis(u, v).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if let Some((p, s)) = wedge2(a, l, rest) {
                    row[pos(p)] += &sign * c * s;
                }
            }
        }
        d3_rows.push(row);
    }
    let d3 = Matrix::from_rows(c2.len(), d3_rows).expect("wedge length");
    if !d3.mul(&d2).expect("shapes").is_zero() {
        return Err(MultiplierError::Inconsistent("d2 after d3 is not zero".into()));
    }

    let mut dims = [0usize; 2];
    for (q, p) in [Parity::Even, Parity::Odd].into_iter().enumerate() {
        let idx2: Vec<usize> = (0..c2.len()).filter(|&i| parity_of(&c2[i]) == p).collect();
        let idx3: Vec<usize> = (0..c3.len()).filter(|&i| parity_of(&c3[i]) == p).collect();
        let d2q = Matrix::from_rows(n, idx2.iter().map(|&i| d2.row(i).to_vec()).collect()).expect("length");
        let d3q = Matrix::from_rows(
            idx2.len(),
            idx3.iter().map(|&r| idx2.iter().map(|&c| d3.get(r, c).clone()).collect()).collect(),
        )
        .expect("length");
        dims[q] = idx2.len() - d2q.rank() - d3q.rank();
    }
    Ok(MultiplierResult::bare(GradedDim::new(dims[0], dims[1]), Method::Homology))
}

fn abelian_formula(d: GradedDim) -> GradedDim {
    let (m, n) = (d.even, d.odd);
    GradedDim::new((m * m + n * n + n - m) / 2, m * n)
}

/// Closed formulas for `A(m|n)`, `H(m,n)`, `H_m` and Heisenberg plus
/// abelian.
pub fn multiplier_formula(d: &FamilyDescriptor) -> Result<MultiplierResult, MultiplierError> {
    let dim = formula_dim(d)?;
    Ok(MultiplierResult::bare(dim, Method::Formula))
}

fn formula_dim(d: &FamilyDescriptor) -> Result<GradedDim, MultiplierError> {
    match d {
        FamilyDescriptor::Abelian(dim) => Ok(abelian_formula(*dim)),
        FamilyDescriptor::EvenHeisenberg { m, n } => match (*m, *n) {
            (0, 0) => Err(MultiplierError::NoFormula(d.to_string())),
            (0, 1) => Ok(GradedDim::ZERO),
            (1, 0) => Ok(GradedDim::new(2, 0)),
            (m, n) => Ok(GradedDim::new(2 * m * m - m + n * (n + 1) / 2 - 1, 2 * m * n)),
        },
        FamilyDescriptor::OddHeisenberg { m } => match *m {
            0 => Err(MultiplierError::NoFormula(d.to_string())),
            1 => Ok(GradedDim::new(1, 1)),
            m => Ok(GradedDim::new(m * m, m * m - 1)),
        },
        FamilyDescriptor::HeisenbergPlusAbelian { core, pad } => {
            let abel = match core.as_ref() {
                FamilyDescriptor::EvenHeisenberg { m, n } => GradedDim::new(2 * m, *n),
                FamilyDescriptor::OddHeisenberg { m } => GradedDim::new(*m, *m),
                _ => return Err(MultiplierError::NoFormula(d.to_string())),
            };
            Ok(formula_dim(core)? + abelian_formula(*pad) + abel.tensor(*pad))
        }
        FamilyDescriptor::GeneralizedHeisenberg { .. } | FamilyDescriptor::None => {
            Err(MultiplierError::NoFormula(d.to_string()))
        }
    }
}

/// `M(H ⊕ K) = M(H) ⊕ M(K) ⊕ (H/H^2 ⊗ K/K^2)`, with the summand multipliers
/// from the tags engine.
pub fn multiplier_direct_sum(h: &SuperAlgebra, k: &SuperAlgebra) -> Result<MultiplierResult, MultiplierError> {
    let mh = multiplier_tags(h)?.dim;
    let mk = multiplier_tags(k)?.dim;
    let ab_h = h.dim() - h.derived().dim();
    let ab_k = k.dim() - k.derived().dim();
    Ok(MultiplierResult::bare(mh + mk + ab_h.tensor(ab_k), Method::Formula))
}
