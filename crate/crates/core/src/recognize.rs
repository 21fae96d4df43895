//! Recognition of the abelian and Heisenberg families by rank invariants.
//!
//! Over the complex numbers the isomorphism class of these families is fixed
//! by a few ranks, so no explicit isomorphism is built and everything stays in
//! exact rational arithmetic. Real forms with different signatures (for
//! example `[y1,y1] = z, [y2,y2] = ±z`) get the same descriptor.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exactlin::{unit, Matrix, Scalar, Subspace};
use crate::superalg::{AlgebraError, GradedDim, Parity, SuperAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyDescriptor {
    /// `A(m|n)`.
    Abelian(GradedDim),
    /// `H(m,n)`: `[x_i, x_{m+i}] = z`, `[y_j, y_j] = z`, dimension `(2m+1|n)`.
    EvenHeisenberg { m: usize, n: usize },
    /// `H_m`: `[x_j, y_j] = z` with `z` odd, dimension `(m|m+1)`.
    OddHeisenberg { m: usize },
    /// A Heisenberg core plus a nonzero abelian summand.
    HeisenbergPlusAbelian { core: Box<FamilyDescriptor>, pad: GradedDim },
    /// `L^2 = Z(L)` with `dim Z(L) = rank`.
    GeneralizedHeisenberg { rank: GradedDim },
    None,
}

impl FamilyDescriptor {
    pub fn dim(&self) -> Option<GradedDim> {
        match self {
            FamilyDescriptor::Abelian(d) => Some(*d),
            FamilyDescriptor::EvenHeisenberg { m, n } => Some(GradedDim::new(2 * m + 1, *n)),
            FamilyDescriptor::OddHeisenberg { m } => Some(GradedDim::new(*m, m + 1)),
            FamilyDescriptor::HeisenbergPlusAbelian { core, pad } => core.dim().map(|d| d + *pad),
            FamilyDescriptor::GeneralizedHeisenberg { .. } | FamilyDescriptor::None => None,
        }
    }

    /// The Heisenberg core for `EvenHeisenberg`, `OddHeisenberg` and
    /// `HeisenbergPlusAbelian`, with the abelian pad (zero when absent).
    pub fn heisenberg_split(&self) -> Option<(&FamilyDescriptor, GradedDim)> {
        match self {
            FamilyDescriptor::EvenHeisenberg { .. } | FamilyDescriptor::OddHeisenberg { .. } => {
                Some((self, GradedDim::ZERO))
            }
            FamilyDescriptor::HeisenbergPlusAbelian { core, pad } => Some((core, *pad)),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyDescriptor::Abelian(d) => write!(f, "A({}|{})", d.even, d.odd),
            FamilyDescriptor::EvenHeisenberg { m, n } => write!(f, "H({m},{n})"),
            FamilyDescriptor::OddHeisenberg { m } => write!(f, "H_{m}"),
            FamilyDescriptor::HeisenbergPlusAbelian { core, pad } => {
                write!(f, "{core} + A({}|{})", pad.even, pad.odd)
            }
            FamilyDescriptor::GeneralizedHeisenberg { rank } => {
                write!(f, "generalized Heisenberg of rank {rank}")
            }
            FamilyDescriptor::None => write!(f, "none"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizeError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("descriptor {0} has no canonical form")]
    NoCanonicalForm(String),
    #[error("nilpotency class {0} exceeds two")]
    ClassAboveTwo(usize),
}

/// Rank of the bracket form `(i, j) -> coefficient of z in [x_i, x_j]`
/// restricted to rows `rows` and columns `cols`. Only valid when `L^2` is
/// spanned by `z`; `z_scale` is the entry of `z` at coordinate `z_coord`.
fn form_rank(a: &SuperAlgebra, z_coord: usize, z_scale: &Scalar, rows: &[usize], cols: &[usize]) -> usize {
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (r, &i) in rows.iter().enumerate() {
        for (c, &j) in cols.iter().enumerate() {
            m.set(r, c, &a.bracket_basis(i, j)[z_coord] / z_scale);
        }
    }
    m.rank()
}

pub fn recognize(a: &SuperAlgebra) -> Result<FamilyDescriptor, RecognizeError> {
    a.ensure_nilpotent()?;
    let derived = a.derived();
    if derived.is_zero() {
        return Ok(FamilyDescriptor::Abelian(a.dim()));
    }
    if derived.dim().total() == 1 {
        let z = &derived.basis_vecs()[0];
        let coord = derived.space().pivots()[0];
        let scale = z[coord].clone();
        let even: Vec<usize> = a.indices(Parity::Even).collect();
        let odd: Vec<usize> = a.indices(Parity::Odd).collect();
        let (core, core_dim) = if derived.dim().even == 1 {
            let m = form_rank(a, coord, &scale, &even, &even) / 2;
            let n = form_rank(a, coord, &scale, &odd, &odd);
            (FamilyDescriptor::EvenHeisenberg { m, n }, GradedDim::new(2 * m + 1, n))
        } else {
            let m = form_rank(a, coord, &scale, &even, &odd);
            (FamilyDescriptor::OddHeisenberg { m }, GradedDim::new(m, m + 1))
        };
        let pad = a.dim() - core_dim;
        return Ok(if pad.is_zero() {
            core
        } else {
            FamilyDescriptor::HeisenbergPlusAbelian { core: Box::new(core), pad }
        });
    }
    let center = a.center();
    if center.space() == derived.space() {
        return Ok(FamilyDescriptor::GeneralizedHeisenberg { rank: center.dim() });
    }
    Ok(FamilyDescriptor::None)
}

fn names(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

pub fn build_canonical(d: &FamilyDescriptor) -> Result<SuperAlgebra, RecognizeError> {
    let bad = || RecognizeError::NoCanonicalForm(d.to_string());
    match d {
        FamilyDescriptor::Abelian(dim) => Ok(SuperAlgebra::abelian_dim(d.to_string(), *dim)),
        FamilyDescriptor::EvenHeisenberg { m, n } => {
            let (m, n) = (*m, *n);
            if m + n == 0 {
                return Err(bad());
            }
            let mut even = names("x", 2 * m);
            even.push("z".into());
            let mut a = SuperAlgebra::abelian(d.to_string(), even, names("y", n));
            let dim = a.n();
            let z = unit(dim, 2 * m);
            for i in 0..m {
                a = a.with_bracket(i, m + i, z.clone());
            }
            for j in 0..n {
                a = a.with_bracket(2 * m + 1 + j, 2 * m + 1 + j, z.clone());
            }
            Ok(a)
        }
        FamilyDescriptor::OddHeisenberg { m } => {
            let m = *m;
            if m == 0 {
                return Err(bad());
            }
            let mut odd = names("y", m);
            odd.push("z".into());
            let mut a = SuperAlgebra::abelian(d.to_string(), names("x", m), odd);
            let z = unit(a.n(), 2 * m);
            for j in 0..m {
                a = a.with_bracket(j, m + j, z.clone());
            }
            Ok(a)
        }
        FamilyDescriptor::HeisenbergPlusAbelian { core, pad } => {
            if pad.is_zero() || core.heisenberg_split().map(|(_, p)| !p.is_zero()).unwrap_or(true) {
                return Err(bad());
            }
            let h = build_canonical(core)?;
            let names_a = names("a", pad.total());
            let (ev, od) = names_a.split_at(pad.even);
            let k = SuperAlgebra::abelian("A", ev.to_vec(), od.to_vec());
            Ok(h.direct_sum(&k).with_name(d.to_string()))
        }
        FamilyDescriptor::GeneralizedHeisenberg { .. } | FamilyDescriptor::None => Err(bad()),
    }
}

/// `L = H ⊕ K` for class at most two, with `K` abelian and `H` generalized
/// Heisenberg. `pad_basis` spans a graded complement of `L^2` in `Z(L)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTwoSplit {
    pub heisenberg: GradedDim,
    pub pad: GradedDim,
    pub pad_basis: Vec<Vec<Scalar>>,
}

pub fn class_two_decompose(a: &SuperAlgebra) -> Result<ClassTwoSplit, RecognizeError> {
    match a.nilpotency_class() {
        None => return Err(AlgebraError::NotNilpotent(a.name().to_string()).into()),
        Some(c) if c > 2 => return Err(RecognizeError::ClassAboveTwo(c)),
        _ => {}
    }
    let derived = a.derived();
    let center = a.center();
    let candidates = center.basis_vecs();
    let kept = derived.space().greedy_extension(&candidates).expect("algebra length");
    let pad_basis: Vec<Vec<Scalar>> = kept.into_iter().map(|i| candidates[i].clone()).collect();
    let pad_even = pad_basis
        .iter()
        .filter(|v| a.vector_parity(v) == Some(Parity::Even))
        .count();
    let pad = GradedDim::new(pad_even, pad_basis.len() - pad_even);
    debug_assert!(pad_basis.iter().all(|v| v.iter().any(|c| !c.is_zero())));
    debug_assert_eq!(
        Subspace::span(a.n(), pad_basis.clone()).unwrap().dim(),
        center.dim().total() - derived.dim().total()
    );
    Ok(ClassTwoSplit { heisenberg: a.dim() - pad, pad, pad_basis })
}
