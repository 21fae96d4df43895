//! Lie superalgebras given by structure constants.
//!
//! A [`SuperAlgebra`] has a homogeneous basis `x_0, ..., x_{n-1}` with the even
//! elements first, and stores the bracket of every ordered pair of basis
//! elements as a coefficient vector. Both `[x_i, x_j]` and `[x_j, x_i]` are
//! stored; [`SuperAlgebra::validate`] checks that they agree with graded
//! skew-symmetry instead of assuming it.

use std::fmt;
use std::ops::{Add, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{is_zero_vec, unit, LinAlgError, Matrix, Scalar, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        if rhs.is_odd() {
            self.flip()
        } else {
            self
        }
    }
}

/// `(-1)^{|a||b|}`.
pub fn koszul(a: Parity, b: Parity) -> Scalar {
    if a.is_odd() && b.is_odd() {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

/// Superdimension `(even | odd)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GradedDim {
    pub even: usize,
    pub odd: usize,
}

impl GradedDim {
    pub const ZERO: GradedDim = GradedDim { even: 0, odd: 0 };

    pub fn new(even: usize, odd: usize) -> Self {
        GradedDim { even, odd }
    }

    pub fn total(self) -> usize {
        self.even + self.odd
    }

    pub fn get(self, p: Parity) -> usize {
        match p {
            Parity::Even => self.even,
            Parity::Odd => self.odd,
        }
    }

    pub fn is_zero(self) -> bool {
        self.total() == 0
    }

    /// Graded dimension of a tensor product.
    pub fn tensor(self, other: GradedDim) -> GradedDim {
        GradedDim {
            even: self.even * other.even + self.odd * other.odd,
            odd: self.even * other.odd + self.odd * other.even,
        }
    }

    pub fn checked_sub(self, other: GradedDim) -> Option<GradedDim> {
        Some(GradedDim {
            even: self.even.checked_sub(other.even)?,
            odd: self.odd.checked_sub(other.odd)?,
        })
    }
}

impl Add for GradedDim {
    type Output = GradedDim;

    fn add(self, rhs: GradedDim) -> GradedDim {
        GradedDim { even: self.even + rhs.even, odd: self.odd + rhs.odd }
    }
}

impl Sub for GradedDim {
    type Output = GradedDim;

    fn sub(self, rhs: GradedDim) -> GradedDim {
        self.checked_sub(rhs).expect("graded dimension underflow")
    }
}

impl fmt::Display for GradedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("vector has length {found}, algebra has dimension {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vector {index} mixes even and odd components")]
    MixedParity { index: usize },
    #[error("subspace is not an ideal: [v{vector}, {basis}] leaves it")]
    NotIdeal { vector: usize, basis: String },
    #[error("ideal belongs to an algebra of dimension {found}, expected {expected}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("algebra {0} is not nilpotent")]
    NotNilpotent(String),
    #[error("algebra {name} fails the axioms: {first}")]
    Invalid { name: String, first: String },
    #[error("change of basis does not preserve parity at row {0}")]
    NotParityPreserving(usize),
    #[error("change of basis is singular")]
    Singular,
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Grading,
    SkewSymmetry,
    Jacobi,
}

impl Axiom {
    pub fn id(self) -> &'static str {
        match self {
            Axiom::Grading => "grading",
            Axiom::SkewSymmetry => "skew-symmetry",
            Axiom::Jacobi => "jacobi",
        }
    }
}

/// A failed axiom at a tuple of (0-based) basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
    pub names: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.axiom.id(), self.names.join(","))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SuperAlgebra {
    name: String,
    names: Vec<String>,
    even: usize,
    /// `table[i * n + j]` is `[x_i, x_j]`.
    table: Vec<Vec<Scalar>>,
}

impl fmt::Debug for SuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperAlgebra({} {}", self.name, self.dim())?;
        for i in 0..self.n() {
            for j in 0..self.n() {
                let v = self.bracket_basis(i, j);
                if !is_zero_vec(v) {
                    write!(f, " [{},{}]={:?}", self.names[i], self.names[j], v)?;
                }
            }
        }
        write!(f, ")")
    }
}

impl SuperAlgebra {
    /// Abelian algebra on the given even and odd basis names.
    pub fn abelian<S: Into<String>>(name: impl Into<String>, even: Vec<S>, odd: Vec<S>) -> Self {
        let even_count = even.len();
        let names: Vec<String> = even.into_iter().chain(odd).map(Into::into).collect();
        let n = names.len();
        SuperAlgebra {
            name: name.into(),
            names,
            even: even_count,
            table: vec![vec![Scalar::zero(); n]; n * n],
        }
    }

    /// Abelian algebra `A(m|n)` with basis `x1..x{m+n}`.
    pub fn abelian_dim(name: impl Into<String>, dim: GradedDim) -> Self {
        let names: Vec<String> = (1..=dim.total()).map(|i| format!("x{i}")).collect();
        let (even, odd) = names.split_at(dim.even);
        Self::abelian(name, even.to_vec(), odd.to_vec())
    }

    /// Sets `[x_i, x_j] = value` and fills `[x_j, x_i]` by graded
    /// skew-symmetry.
    pub fn with_bracket(mut self, i: usize, j: usize, value: Vec<Scalar>) -> Self {
        let s = -koszul(self.parity(i), self.parity(j));
        let mirror: Vec<Scalar> = value.iter().map(|c| c * &s).collect();
        self.set_entry(i, j, value);
        if i != j {
            self.set_entry(j, i, mirror);
        }
        self
    }

    /// Sets a single table entry without touching its mirror.
    pub fn set_entry(&mut self, i: usize, j: usize, value: Vec<Scalar>) {
        assert_eq!(value.len(), self.n(), "bracket value has wrong length");
        let n = self.n();
        self.table[i * n + j] = value;
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn dim(&self) -> GradedDim {
        GradedDim { even: self.even, odd: self.n() - self.even }
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn parity(&self, i: usize) -> Parity {
        if i < self.even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn indices(&self, p: Parity) -> std::ops::Range<usize> {
        match p {
            Parity::Even => 0..self.even,
            Parity::Odd => self.even..self.n(),
        }
    }

    /// `[x_i, x_j]` as a coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.n() + j]
    }

    fn check_len(&self, v: &[Scalar]) -> Result<(), AlgebraError> {
        if v.len() != self.n() {
            return Err(AlgebraError::LengthMismatch { expected: self.n(), found: v.len() });
        }
        Ok(())
    }

    /// Bilinear extension of the structure table.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        self.check_len(u)?;
        self.check_len(v)?;
        let mut out = vec![Scalar::zero(); self.n()];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (o, c) in out.iter_mut().zip(self.bracket_basis(i, j)) {
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Parity of a nonzero vector, or `None` when it is zero or mixed.
    pub fn vector_parity(&self, v: &[Scalar]) -> Option<Parity> {
        let even = v[..self.even].iter().any(|c| !c.is_zero());
        let odd = v[self.even..].iter().any(|c| !c.is_zero());
        match (even, odd) {
            (true, false) => Some(Parity::Even),
            (false, true) => Some(Parity::Odd),
            _ => None,
        }
    }

    /// Even and odd components of `v`.
    pub fn split(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut even = v.to_vec();
        let mut odd = v.to_vec();
        for (i, (e, o)) in even.iter_mut().zip(odd.iter_mut()).enumerate() {
            if i < self.even {
                *o = Scalar::zero();
            } else {
                *e = Scalar::zero();
            }
        }
        (even, odd)
    }

    fn names_of(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.names[i].clone()).collect()
    }

    /// Checks grading, graded skew-symmetry and the graded Jacobi identity on
    /// basis elements. An empty list means the table defines a Lie
    /// superalgebra.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.n();
        let mut out = Vec::new();
        let mut push = |axiom, idx: Vec<usize>| {
            let names = self.names_of(&idx);
            out.push(Violation { axiom, indices: idx, names });
        };
        for i in 0..n {
            for j in 0..n {
                let target = self.parity(i) + self.parity(j);
                let v = self.bracket_basis(i, j);
                if v.iter().enumerate().any(|(k, c)| !c.is_zero() && self.parity(k) != target) {
                    push(Axiom::Grading, vec![i, j]);
                }
            }
        }
        for i in 0..n {
            for j in i..n {
                let s = -koszul(self.parity(i), self.parity(j));
                let expected: Vec<Scalar> = self.bracket_basis(i, j).iter().map(|c| c * &s).collect();
                if self.bracket_basis(j, i) != expected.as_slice() {
                    push(Axiom::SkewSymmetry, vec![j, i]);
                }
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !is_zero_vec(&self.jacobi_sum(x, y, z)) {
                        let mut key = [x, y, z];
                        key.sort_unstable();
                        if seen.insert(key) {
                            push(Axiom::Jacobi, vec![x, y, z]);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]`.
    pub fn jacobi_sum(&self, x: usize, y: usize, z: usize) -> Vec<Scalar> {
        let n = self.n();
        let mut out = vec![Scalar::zero(); n];
        for (u, v, w) in [(x, y, z), (y, z, x), (z, x, y)] {
            let sign = koszul(self.parity(u), self.parity(w));
            let inner = self.bracket_basis(v, w).to_vec();
            let outer = self.bracket(&unit(n, u), &inner).expect("basis length");
            for (o, c) in out.iter_mut().zip(outer) {
                *o += &sign * c;
            }
        }
        out
    }

    /// Errors unless [`validate`](Self::validate) is clean.
    pub fn ensure_valid(&self) -> Result<(), AlgebraError> {
        match self.validate().first() {
            None => Ok(()),
            Some(v) => Err(AlgebraError::Invalid { name: self.name.clone(), first: v.to_string() }),
        }
    }

    /// Builds a graded subspace from arbitrary vectors by splitting each into
    /// its homogeneous components.
    fn graded_span(&self, vectors: impl IntoIterator<Item = Vec<Scalar>>) -> GradedIdeal {
        let mut parts = Vec::new();
        for v in vectors {
            let (e, o) = self.split(&v);
            parts.push(e);
            parts.push(o);
        }
        GradedIdeal::from_space(self, Subspace::span(self.n(), parts).expect("algebra length"))
    }

    /// The derived algebra `L^2 = [L, L]`.
    pub fn derived(&self) -> GradedIdeal {
        self.graded_span(self.table.iter().cloned())
    }

    /// `[I, L]` for a subspace `I`.
    fn bracket_with_all(&self, space: &Subspace) -> GradedIdeal {
        let n = self.n();
        let mut values = Vec::new();
        for v in space.basis_vecs() {
            for k in 0..n {
                values.push(self.bracket(&v, &unit(n, k)).expect("algebra length"));
            }
        }
        self.graded_span(values)
    }

    /// `L^1 = L`, `L^{k+1} = [L^k, L]`, until the series hits zero or stops
    /// descending.
    pub fn lower_central_series(&self) -> CentralSeries {
        let mut terms = vec![GradedIdeal::from_space(self, Subspace::full(self.n()))];
        loop {
            let last = terms.last().expect("nonempty");
            if last.is_zero() {
                let class = terms.len() - 1;
                return CentralSeries { terms, class: Some(class) };
            }
            let next = self.bracket_with_all(last.space());
            if next.space() == last.space() {
                return CentralSeries { terms, class: None };
            }
            terms.push(next);
        }
    }

    pub fn nilpotency_class(&self) -> Option<usize> {
        self.lower_central_series().class
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }

    /// Center, solved separately on the even and odd coordinates.
    pub fn center(&self) -> GradedIdeal {
        let n = self.n();
        let mut gens = Vec::new();
        for p in [Parity::Even, Parity::Odd] {
            let idx: Vec<usize> = self.indices(p).collect();
            if idx.is_empty() {
                continue;
            }
            // sum_i z_i [x_i, x_j]_k = 0 for all j, k
            let mut system = Matrix::zeros(n * n, idx.len());
            for j in 0..n {
                for k in 0..n {
                    for (c, &i) in idx.iter().enumerate() {
                        system.set(j * n + k, c, self.bracket_basis(i, j)[k].clone());
                    }
                }
            }
            for z in system.kernel().basis_vecs() {
                let mut v = vec![Scalar::zero(); n];
                for (c, &i) in idx.iter().enumerate() {
                    v[i] = z[c].clone();
                }
                gens.push(v);
            }
        }
        GradedIdeal::from_space(self, Subspace::span(n, gens).expect("algebra length"))
    }

    /// Quotient by a graded ideal. The quotient basis is the lowest-index
    /// standard complement of the ideal, keeping the original names.
    pub fn quotient(&self, ideal: &GradedIdeal) -> Result<SuperAlgebra, AlgebraError> {
        let n = self.n();
        let checked = GradedIdeal::new(self, ideal.space().basis_vecs())?;
        let keep = checked.space().standard_complement();
        // rows: kept units then the ideal basis; invertible by construction
        let mut rows: Vec<Vec<Scalar>> = keep.iter().map(|&c| unit(n, c)).collect();
        rows.extend(checked.space().basis_vecs());
        let change = Matrix::from_rows(n, rows)?;
        let inv = change.inverse().ok_or(AlgebraError::Singular)?;
        let k = keep.len();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let coords = inv.apply_row(v).expect("algebra length");
            coords[..k].to_vec()
        };
        let names: Vec<String> = keep.iter().map(|&c| self.names[c].clone()).collect();
        let even = keep.iter().filter(|&&c| c < self.even).count();
        let mut q = SuperAlgebra {
            name: format!("{}/N", self.name),
            names,
            even,
            table: vec![vec![Scalar::zero(); k]; k * k],
        };
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                q.set_entry(a, b, project(self.bracket_basis(i, j)));
            }
        }
        Ok(q)
    }

    /// `H ⊕ K` with basis `H_even, K_even, H_odd, K_odd` and zero cross
    /// brackets. Clashing names from `K` get primes appended.
    pub fn direct_sum(&self, other: &SuperAlgebra) -> SuperAlgebra {
        let (h, k) = (self, other);
        let mut order: Vec<(usize, usize)> = Vec::new(); // (summand, index)
        order.extend(h.indices(Parity::Even).map(|i| (0, i)));
        order.extend(k.indices(Parity::Even).map(|i| (1, i)));
        order.extend(h.indices(Parity::Odd).map(|i| (0, i)));
        order.extend(k.indices(Parity::Odd).map(|i| (1, i)));
        let mut used: std::collections::HashSet<String> = h.names.iter().cloned().collect();
        let mut k_names = Vec::new();
        for name in &k.names {
            let mut candidate = name.clone();
            while used.contains(&candidate) {
                candidate.push('\'');
            }
            used.insert(candidate.clone());
            k_names.push(candidate);
        }
        let names: Vec<String> = order
            .iter()
            .map(|&(s, i)| if s == 0 { h.names[i].clone() } else { k_names[i].clone() })
            .collect();
        let n = names.len();
        let pos = |s: usize, i: usize| order.iter().position(|&o| o == (s, i)).expect("present");
        let mut sum = SuperAlgebra {
            name: format!("{}+{}", h.name, k.name),
            names,
            even: h.even + k.even,
            table: vec![vec![Scalar::zero(); n]; n * n],
        };
        for (s, alg) in [(0, h), (1, k)] {
            for i in 0..alg.n() {
                for j in 0..alg.n() {
                    let mut v = vec![Scalar::zero(); n];
                    for (c, x) in alg.bracket_basis(i, j).iter().enumerate() {
                        v[pos(s, c)] = x.clone();
                    }
                    sum.set_entry(pos(s, i), pos(s, j), v);
                }
            }
        }
        sum
    }

    /// The even part `L_0`, a Lie algebra.
    pub fn even_part(&self) -> SuperAlgebra {
        let e = self.even;
        let mut table = Vec::with_capacity(e * e);
        for i in 0..e {
            for j in 0..e {
                table.push(self.bracket_basis(i, j)[..e].to_vec());
            }
        }
        SuperAlgebra {
            name: format!("{}_0", self.name),
            names: self.names[..e].to_vec(),
            even: e,
            table,
        }
    }

    /// Re-expresses the algebra in the basis given by the rows of `p`
    /// (row `i` is the new `x_i` in old coordinates). `p` must be invertible
    /// and map even to even, odd to odd.
    pub fn change_basis(&self, p: &Matrix) -> Result<SuperAlgebra, AlgebraError> {
        let n = self.n();
        if p.rows() != n || p.cols() != n {
            return Err(AlgebraError::LengthMismatch { expected: n, found: p.rows() });
        }
        for r in 0..n {
            let row = p.row(r);
            if !is_zero_vec(row) && self.vector_parity(row) != Some(self.parity(r)) {
                return Err(AlgebraError::NotParityPreserving(r));
            }
        }
        let inv = p.inverse().ok_or(AlgebraError::Singular)?;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                let v = self.bracket(p.row(i), p.row(j))?;
                out.set_entry(i, j, inv.apply_row(&v)?);
            }
        }
        Ok(out)
    }

    /// Errors with [`AlgebraError::NotNilpotent`] unless nilpotent.
    pub fn ensure_nilpotent(&self) -> Result<(), AlgebraError> {
        if self.is_nilpotent() {
            Ok(())
        } else {
            Err(AlgebraError::NotNilpotent(self.name.clone()))
        }
    }
}

/// Lower central series `L^1 ⊇ L^2 ⊇ ...` and the nilpotency class, `None`
/// when the series stabilises above zero.
#[derive(Debug, Clone)]
pub struct CentralSeries {
    pub terms: Vec<GradedIdeal>,
    pub class: Option<usize>,
}

impl CentralSeries {
    pub fn dims(&self) -> Vec<GradedDim> {
        self.terms.iter().map(GradedIdeal::dim).collect()
    }
}

/// A homogeneous ideal, stored as a subspace whose canonical basis rows are
/// each purely even or purely odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIdeal {
    space: Subspace,
    dim: GradedDim,
    parent_dim: GradedDim,
}

impl GradedIdeal {
    /// Span of homogeneous vectors, checked to be an ideal of `a`.
    pub fn new(a: &SuperAlgebra, vectors: Vec<Vec<Scalar>>) -> Result<Self, AlgebraError> {
        for (i, v) in vectors.iter().enumerate() {
            a.check_len(v)?;
            if !is_zero_vec(v) && a.vector_parity(v).is_none() {
                return Err(AlgebraError::MixedParity { index: i });
            }
        }
        let ideal = Self::from_space(a, Subspace::span(a.n(), vectors)?);
        ideal.check_ideal(a)?;
        Ok(ideal)
    }

    pub fn zero(a: &SuperAlgebra) -> Self {
        Self::from_space(a, Subspace::zero(a.n()))
    }

    /// Wraps a subspace the caller knows to be graded.
    fn from_space(a: &SuperAlgebra, space: Subspace) -> Self {
        let even = space.pivots().iter().filter(|&&p| p < a.even).count();
        let dim = GradedDim { even, odd: space.dim() - even };
        GradedIdeal { space, dim, parent_dim: a.dim() }
    }

    fn check_ideal(&self, a: &SuperAlgebra) -> Result<(), AlgebraError> {
        if self.space.ambient() != a.n() {
            return Err(AlgebraError::AmbientMismatch { expected: a.n(), found: self.space.ambient() });
        }
        for (r, v) in self.space.basis_vecs().iter().enumerate() {
            for k in 0..a.n() {
                let w = a.bracket(v, &unit(a.n(), k))?;
                if !self.space.contains(&w)? {
                    return Err(AlgebraError::NotIdeal { vector: r, basis: a.names[k].clone() });
                }
            }
        }
        Ok(())
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> GradedDim {
        self.dim
    }

    pub fn parent_dim(&self) -> GradedDim {
        self.parent_dim
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn basis_vecs(&self) -> Vec<Vec<Scalar>> {
        self.space.basis_vecs()
    }

    /// Every canonical basis row is homogeneous.
    pub fn is_homogeneous(&self, a: &SuperAlgebra) -> bool {
        self.basis_vecs().iter().all(|v| a.vector_parity(v).is_some())
    }

    pub fn is_ideal_of(&self, a: &SuperAlgebra) -> bool {
        self.check_ideal(a).is_ok()
    }

    pub fn is_central_in(&self, a: &SuperAlgebra) -> bool {
        a.center().space().contains_subspace(&self.space).unwrap_or(false)
    }

    /// Basis vectors of the given parity.
    pub fn part(&self, a: &SuperAlgebra, p: Parity) -> Vec<Vec<Scalar>> {
        self.basis_vecs().into_iter().filter(|v| a.vector_parity(v) == Some(p)).collect()
    }

    pub fn intersection(&self, a: &SuperAlgebra, other: &GradedIdeal) -> Result<GradedIdeal, AlgebraError> {
        Ok(Self::from_space(a, self.space.intersection(&other.space)?))
    }
}

/// Formats a vector as a sum of named basis elements, e.g. `1/2 x1 + x2`.
pub fn format_vector(names: &[String], v: &[Scalar]) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Scalar::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&crate::exactlin::fmt_scalar(&mag));
            out.push(' ');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, ratio};

    fn e(n: usize, i: usize) -> Vec<Scalar> {
        unit(n, i)
    }

    /// H(1,0): [x1,x2] = x3.
    fn h10() -> SuperAlgebra {
        SuperAlgebra::abelian("H10", vec!["x1", "x2", "x3"], vec![]).with_bracket(0, 1, e(3, 2))
    }

    /// L9_2_2: [x3,x3]=x1, [x4,x4]=x2, [x3,x4]=(x1+x2)/2.
    fn l9() -> SuperAlgebra {
        SuperAlgebra::abelian("L9", vec!["x1", "x2"], vec!["x3", "x4"])
            .with_bracket(2, 2, e(4, 0))
            .with_bracket(3, 3, e(4, 1))
            .with_bracket(2, 3, vec![ratio(1, 2), ratio(1, 2), int(0), int(0)])
    }

    /// L24_3_2: [x1,x2]=x3, [x1,x5]=x4.
    fn l24() -> SuperAlgebra {
        SuperAlgebra::abelian("L24", vec!["x1", "x2", "x3"], vec!["x4", "x5"])
            .with_bracket(0, 1, e(5, 2))
            .with_bracket(0, 4, e(5, 3))
    }

    /// L45_2_3: [x1,x4]=x3, [x1,x5]=x4, [x5,x5]=x2.
    fn l45() -> SuperAlgebra {
        SuperAlgebra::abelian("L45", vec!["x1", "x2"], vec!["x3", "x4", "x5"])
            .with_bracket(0, 3, e(5, 2))
            .with_bracket(0, 4, e(5, 3))
            .with_bracket(4, 4, e(5, 1))
    }

    #[test]
    fn abelian_and_heisenberg_validate() {
        assert!(SuperAlgebra::abelian_dim("A", GradedDim::new(2, 1)).is_valid());
        assert!(h10().is_valid());
        assert!(l9().is_valid());
    }

    #[test]
    fn l44_validates() {
        // [x1,x5]=x3, [x2,x4]=x3, [x4,x5]=-x1, [x5,x5]=2x2
        let a = SuperAlgebra::abelian("L44", vec!["x1", "x2"], vec!["x3", "x4", "x5"])
            .with_bracket(0, 4, e(5, 2))
            .with_bracket(1, 3, e(5, 2))
            .with_bracket(3, 4, vec![int(-1), int(0), int(0), int(0), int(0)])
            .with_bracket(4, 4, vec![int(0), int(2), int(0), int(0), int(0)]);
        assert_eq!(a.validate(), vec![]);
    }

    #[test]
    fn broken_skew_symmetry_is_reported() {
        let mut a = h10();
        a.set_entry(1, 0, e(3, 2));
        let v = a.validate();
        assert!(v.iter().any(|v| v.axiom == Axiom::SkewSymmetry && v.indices == vec![1, 0]));
        assert_eq!(v.iter().filter(|v| v.axiom == Axiom::SkewSymmetry).count(), 1);
    }

    #[test]
    fn odd_squares_may_be_nonzero_even_squares_may_not() {
        let mut a = SuperAlgebra::abelian("A", vec!["z"], vec!["y"]).with_bracket(1, 1, e(2, 0));
        assert!(a.is_valid());
        a.set_entry(0, 0, e(2, 0));
        assert!(a.validate().iter().any(|v| v.axiom == Axiom::SkewSymmetry && v.indices == vec![0, 0]));
    }

    #[test]
    fn grading_violation_is_reported() {
        // even x odd must land in odd
        let a = SuperAlgebra::abelian("bad", vec!["x1", "x2"], vec!["y"]).with_bracket(0, 2, e(3, 1));
        assert!(a.validate().iter().any(|v| v.axiom == Axiom::Grading));
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(h10().bracket(&e(3, 0), &e(3, 1)).unwrap(), e(3, 2));
        assert_eq!(h10().bracket(&e(3, 0), &vec![int(0); 3]).unwrap(), vec![int(0); 3]);
        assert_eq!(
            l9().bracket(&e(4, 2), &e(4, 3)).unwrap(),
            vec![ratio(1, 2), ratio(1, 2), int(0), int(0)]
        );
        assert!(matches!(h10().bracket(&e(2, 0), &e(3, 1)), Err(AlgebraError::LengthMismatch { .. })));
    }

    #[test]
    fn derived_algebra_examples() {
        assert!(SuperAlgebra::abelian_dim("A", GradedDim::new(2, 2)).derived().is_zero());
        let d = l24().derived();
        assert_eq!(d.dim(), GradedDim::new(1, 1));
        assert_eq!(d.space(), &Subspace::span(5, vec![e(5, 2), e(5, 3)]).unwrap());
        assert_eq!(l45().derived().dim().total(), 3);
    }

    #[test]
    fn nilpotency_classes() {
        assert_eq!(SuperAlgebra::abelian_dim("A", GradedDim::new(1, 1)).nilpotency_class(), Some(1));
        assert_eq!(h10().nilpotency_class(), Some(2));
        let s = l45().lower_central_series();
        assert_eq!(s.class, Some(3));
        assert_eq!(s.terms[2].space(), &Subspace::span(5, vec![e(5, 2)]).unwrap());
        assert_eq!(s.terms[1], l45().derived());
    }

    #[test]
    fn non_nilpotent_series_stabilises() {
        // [x2,x1] = x1
        let a = SuperAlgebra::abelian("ax+b", vec!["x1", "x2"], vec![]).with_bracket(1, 0, e(2, 0));
        assert!(a.is_valid());
        assert_eq!(a.nilpotency_class(), None);
        assert!(matches!(a.ensure_nilpotent(), Err(AlgebraError::NotNilpotent(_))));
    }

    #[test]
    fn centers() {
        let a = SuperAlgebra::abelian_dim("A", GradedDim::new(2, 1));
        assert_eq!(a.center().space(), &Subspace::full(3));
        let z = l24().center();
        assert_eq!(z.space(), &Subspace::span(5, vec![e(5, 2), e(5, 3)]).unwrap());
        assert!(z.is_homogeneous(&l24()) && z.is_ideal_of(&l24()));
        assert_eq!(l9().center().space(), &Subspace::span(4, vec![e(4, 0), e(4, 1)]).unwrap());
    }

    #[test]
    fn quotient_of_l9_by_derived_is_abelian_0_2() {
        let l = l9();
        let q = l.quotient(&l.derived()).unwrap();
        assert_eq!(q.dim(), GradedDim::new(0, 2));
        assert!(q.derived().is_zero());
        assert!(q.is_valid());
    }

    #[test]
    fn quotient_of_l24_by_x3() {
        let l = l24();
        let n = GradedIdeal::new(&l, vec![e(5, 2)]).unwrap();
        let q = l.quotient(&n).unwrap();
        assert_eq!(q.dim(), GradedDim::new(2, 2));
        assert_eq!(q.basis_names(), &["x1", "x2", "x4", "x5"]);
        // only [x1,x5] = x4 survives: H_1 + A(1|0)
        assert_eq!(q.bracket_basis(0, 3), e(4, 2).as_slice());
        assert_eq!(q.derived().dim(), GradedDim::new(0, 1));
        assert!(q.is_valid());
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let l = l45();
        let q = l.quotient(&GradedIdeal::zero(&l)).unwrap();
        assert_eq!(q.basis_names(), l.basis_names());
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(q.bracket_basis(i, j), l.bracket_basis(i, j));
            }
        }
    }

    #[test]
    fn ideal_constructor_rejects_bad_input() {
        let l = l24();
        let mixed = vec![int(0), int(0), int(1), int(1), int(0)];
        assert!(matches!(GradedIdeal::new(&l, vec![mixed]), Err(AlgebraError::MixedParity { .. })));
        assert!(matches!(GradedIdeal::new(&l, vec![e(5, 1)]), Err(AlgebraError::NotIdeal { .. })));
    }

    #[test]
    fn direct_sum_examples() {
        let a10 = SuperAlgebra::abelian_dim("A10", GradedDim::new(1, 0));
        let a01 = SuperAlgebra::abelian_dim("A01", GradedDim::new(0, 1));
        let s = a10.direct_sum(&a01);
        assert_eq!(s.dim(), GradedDim::new(1, 1));
        assert!(s.derived().is_zero());

        let s = h10().direct_sum(&a10);
        assert_eq!(s.dim(), GradedDim::new(4, 0));
        assert_eq!(s.derived().dim().total(), 1);
        assert!(s.is_valid());
        let names: std::collections::HashSet<_> = s.basis_names().iter().collect();
        assert_eq!(names.len(), 4);
    }

    #[test]
    fn sum_of_odd_heisenbergs_matches_l10() {
        // H(0,1): [y,y] = z
        let h01 = SuperAlgebra::abelian("H01", vec!["z"], vec!["y"]).with_bracket(1, 1, e(2, 0));
        let s = h01.direct_sum(&h01);
        // basis z, z', y, y' ; L10 has [x3,x3]=x1, [x4,x4]=x2 on the same layout
        assert_eq!(s.bracket_basis(2, 2), e(4, 0).as_slice());
        assert_eq!(s.bracket_basis(3, 3), e(4, 1).as_slice());
        assert!(is_zero_vec(s.bracket_basis(2, 3)));
    }

    #[test]
    fn even_parts() {
        let l1 = SuperAlgebra::abelian("L1", vec!["x1"], vec!["x2"]).with_bracket(1, 1, e(2, 0));
        let ev = l1.even_part();
        assert_eq!(ev.dim(), GradedDim::new(1, 0));
        assert!(ev.derived().is_zero());
        assert_eq!(h10().even_part().bracket_basis(0, 1), h10().bracket_basis(0, 1));
    }

    #[test]
    fn basis_change_preserves_invariants() {
        let l = l45();
        let mut p = Matrix::identity(5);
        p.set(0, 1, int(2));
        p.set(2, 3, ratio(1, 3));
        p.set(4, 2, int(-1));
        let m = l.change_basis(&p).unwrap();
        assert!(m.is_valid());
        assert_eq!(m.center().dim(), l.center().dim());
        assert_eq!(m.lower_central_series().dims(), l.lower_central_series().dims());

        let mut bad = Matrix::identity(5);
        bad.set(0, 3, int(1));
        assert!(matches!(l.change_basis(&bad), Err(AlgebraError::NotParityPreserving(0))));
    }

    #[test]
    fn vector_formatting() {
        let names: Vec<String> = ["x1", "x2", "x3"].iter().map(|s| s.to_string()).collect();
        assert_eq!(format_vector(&names, &[ratio(1, 2), ratio(1, 2), int(0)]), "1/2 x1 + 1/2 x2");
        assert_eq!(format_vector(&names, &[int(-1), int(0), int(1)]), "-x1 + x3");
        assert_eq!(format_vector(&names, &[int(1), int(-2), int(0)]), "x1 - 2 x2");
        assert_eq!(format_vector(&names, &[int(0), int(0), int(0)]), "0");
    }
}
