//! Epicenter membership and capability verdicts.
//!
//! A central graded ideal `N` lies in the epicenter `Z*(L)` exactly when
//! `dim M(L/N) = dim M(L) + dim(N ∩ L^2)`, and `L` is capable exactly when
//! `Z*(L) = 0`. The verdict pipeline tries closed criteria first and only
//! then searches for a central ray inside the epicenter.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::exactlin::{int, projective_normal, Scalar, Subspace};
use crate::multiplier::{multiplier_tags, MultiplierError};
use crate::recognize::{recognize, FamilyDescriptor, RecognizeError};
use crate::superalg::{AlgebraError, GradedDim, GradedIdeal, Parity, SuperAlgebra};

pub const DEFAULT_GRID_BOUND: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CapabilityError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Multiplier(#[from] MultiplierError),
    #[error("ideal is not central")]
    NotCentral,
}

impl From<RecognizeError> for CapabilityError {
    fn from(e: RecognizeError) -> Self {
        match e {
            RecognizeError::Algebra(a) => CapabilityError::Algebra(a),
            other => CapabilityError::Algebra(AlgebraError::Invalid { name: String::new(), first: other.to_string() }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpicenterTest {
    pub ideal: GradedIdeal,
    pub dim_m_l: GradedDim,
    pub dim_m_quotient: GradedDim,
    pub dim_n_cap_l2: usize,
    pub contained: bool,
}

/// Runs the dimension criterion for `n ⊆ Z*(a)`.
pub fn epicenter_contains(a: &SuperAlgebra, n: &GradedIdeal) -> Result<EpicenterTest, CapabilityError> {
    a.ensure_valid()?;
    let m_l = multiplier_tags(a)?.dim;
    epicenter_with(a, n, m_l, &a.derived())
}

fn epicenter_with(
    a: &SuperAlgebra,
    n: &GradedIdeal,
    m_l: GradedDim,
    derived: &GradedIdeal,
) -> Result<EpicenterTest, CapabilityError> {
    let ideal = GradedIdeal::new(a, n.basis_vecs())?;
    if !ideal.is_central_in(a) {
        return Err(CapabilityError::NotCentral);
    }
    let m_q = multiplier_tags(&a.quotient(&ideal)?)?.dim;
    let cap = ideal.intersection(a, derived)?.dim().total();
    Ok(EpicenterTest {
        contained: m_q.total() == m_l.total() + cap,
        ideal,
        dim_m_l: m_l,
        dim_m_quotient: m_q,
        dim_n_cap_l2: cap,
    })
}

/// Integer combinations of `basis` with coefficients in `[-bound, bound]`,
/// zero excluded.
fn grid(basis: &[Vec<Scalar>], bound: usize) -> Vec<Vec<Scalar>> {
    let b = bound as i64;
    let Some(len) = basis.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut coeffs: Vec<Vec<i64>> = vec![vec![]];
    for _ in basis {
        coeffs = coeffs
            .into_iter()
            .flat_map(|c| {
                (-b..=b).map(move |x| {
                    let mut c = c.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    coeffs
        .into_iter()
        .filter(|c| c.iter().any(|&x| x != 0))
        .map(|c| {
            let mut v = vec![int(0); len];
            for (x, row) in c.iter().zip(basis) {
                for (o, r) in v.iter_mut().zip(row) {
                    *o += int(*x) * r;
                }
            }
            v
        })
        .collect()
}

/// Candidate central ideals in search order: the canonical basis rays of
/// the center, then the homogeneous grid rays, then `L^2 ∩ Z(L)`.
pub fn witness_candidates(a: &SuperAlgebra, grid_bound: usize) -> Vec<GradedIdeal> {
    let center = a.center();
    let derived = a.derived();
    let mut seen: HashSet<Vec<Scalar>> = HashSet::new();
    let mut out = Vec::new();
    let mut rays = center.basis_vecs();
    for p in [Parity::Even, Parity::Odd] {
        rays.extend(grid(&center.part(a, p), grid_bound));
    }
    for v in rays {
        if seen.insert(projective_normal(&v)) {
            out.push(GradedIdeal::new(a, vec![v]).expect("central homogeneous ray"));
        }
    }
    let meet = center.intersection(a, &derived).expect("same algebra");
    if meet.dim().total() > 1 {
        out.push(meet);
    }
    out
}

pub fn witness_search(a: &SuperAlgebra, grid_bound: usize) -> Result<Option<EpicenterTest>, CapabilityError> {
    a.ensure_valid()?;
    a.ensure_nilpotent()?;
    let m_l = multiplier_tags(a)?.dim;
    let derived = a.derived();
    for cand in witness_candidates(a, grid_bound) {
        let t = epicenter_with(a, &cand, m_l, &derived)?;
        if t.contained {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Capable,
    NonCapable,
    Undetermined,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Capable => "Capable",
            Status::NonCapable => "NonCapable",
            Status::Undetermined => "Undetermined",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    AbelianCapable,
    AbelianNonCapable,
    EvenHeisenbergCapable,
    EvenHeisenbergNonCapable,
    OddHeisenbergCapable,
    OddHeisenbergNonCapable,
    DerivedDimOneCapable,
    DerivedDimOneNonCapable,
    NotPartiallyCapable,
    LieAlgebraCapable,
    ClassTwoDimension,
    EpicenterWitness,
    ExhaustiveExclusion,
    Undetermined,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::AbelianCapable => "abelian-capable",
            Rule::AbelianNonCapable => "abelian-noncapable",
            Rule::EvenHeisenbergCapable => "heisenberg-even-m1n0",
            Rule::EvenHeisenbergNonCapable => "heisenberg-even-not-m1n0",
            Rule::OddHeisenbergCapable => "heisenberg-odd-m1",
            Rule::OddHeisenbergNonCapable => "heisenberg-odd-not-m1",
            Rule::DerivedDimOneCapable => "dim-derived-one-capable",
            Rule::DerivedDimOneNonCapable => "dim-derived-one-noncapable",
            Rule::NotPartiallyCapable => "not-partially-capable",
            Rule::LieAlgebraCapable => "lie-algebra-capable",
            Rule::ClassTwoDimension => "class-two-dimension",
            Rule::EpicenterWitness => "epicenter-witness",
            Rule::ExhaustiveExclusion => "exhaustive-exclusion",
            Rule::Undetermined => "undetermined",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapabilityVerdict {
    pub status: Status,
    pub rule: Rule,
    pub witness: Option<EpicenterTest>,
    pub notes: String,
}

impl CapabilityVerdict {
    fn new(status: Status, rule: Rule, notes: impl Into<String>) -> Self {
        CapabilityVerdict { status, rule, witness: None, notes: notes.into() }
    }
}

/// Capability of the even part as a Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialVerdict {
    pub status: Status,
    pub rule: &'static str,
    pub notes: String,
}

/// A five-dimensional Lie algebra identified by
/// (lower central series dims, center dim, dim of the centralizer of `L^2`).
struct Fingerprint {
    name: &'static str,
    series: &'static [usize],
    center: usize,
    centralizer: usize,
}

/// Capable five-dimensional nilpotent Lie algebras used by the catalog.
const CAPABLE_FIVE: [Fingerprint; 5] = [
    Fingerprint { name: "L_{5,5}", series: &[5, 2, 1], center: 1, centralizer: 4 },
    Fingerprint { name: "L_{5,6}", series: &[5, 3, 2, 1], center: 1, centralizer: 3 },
    Fingerprint { name: "L_{5,7}", series: &[5, 3, 2, 1], center: 1, centralizer: 4 },
    Fingerprint { name: "L_{5,8}", series: &[5, 2], center: 2, centralizer: 5 },
    Fingerprint { name: "L_{5,9}", series: &[5, 3, 2], center: 2, centralizer: 3 },
];

fn centralizer_dim(a: &SuperAlgebra, s: &Subspace) -> usize {
    let n = a.n();
    let gens = s.basis_vecs();
    let mut system = crate::exactlin::Matrix::zeros(gens.len() * n, n);
    for (g, v) in gens.iter().enumerate() {
        for i in 0..n {
            let w = a.bracket(&crate::exactlin::unit(n, i), v).expect("algebra length");
            for (k, c) in w.into_iter().enumerate() {
                system.set(g * n + k, i, c);
            }
        }
    }
    n - system.rank()
}

fn lie_algebra_capability(e: &SuperAlgebra) -> PartialVerdict {
    let v = |status, rule, notes: String| PartialVerdict { status, rule, notes };
    let dim = e.n();
    if dim == 0 {
        return v(Status::Capable, "zero", "zero even part is the quotient of an abelian algebra by its center".into());
    }
    let series = e.lower_central_series();
    let derived = series.terms.get(1).map(|t| t.dim().total()).unwrap_or(0);
    if derived == 0 {
        let status = if dim >= 2 { Status::Capable } else { Status::NonCapable };
        return v(status, "abelian", format!("even part A({dim}|0)"));
    }
    if derived == 1 {
        let d = recognize(e).ok();
        let core = d.as_ref().and_then(|d| d.heisenberg_split()).map(|(c, _)| c.clone());
        let capable = core == Some(FamilyDescriptor::EvenHeisenberg { m: 1, n: 0 });
        let status = if capable { Status::Capable } else { Status::NonCapable };
        let name = d.map(|d| d.to_string()).unwrap_or_default();
        return v(status, "heisenberg", format!("even part {name}"));
    }
    if derived == 2 && !(5..=7).contains(&dim) {
        return v(
            Status::NonCapable,
            "class-two-bound",
            format!("dim L^2 = 2 with dim {dim} outside 5..7; hypothesis dim L^2 = 2 reconstructed"),
        );
    }
    if dim == 5 && series.class.is_some() {
        let dims: Vec<usize> = series.terms.iter().map(|t| t.dim().total()).filter(|&d| d > 0).collect();
        let center = e.center().dim().total();
        let c = centralizer_dim(e, series.terms[1].space());
        if let Some(f) = CAPABLE_FIVE
            .iter()
            .find(|f| f.series == dims.as_slice() && f.center == center && f.centralizer == c)
        {
            return v(Status::Capable, "five-dim-table", format!("even part is {}", f.name));
        }
    }
    v(Status::Undetermined, "undetermined", "even part outside the covered families".into())
}

pub fn partial_capability(a: &SuperAlgebra) -> PartialVerdict {
    lie_algebra_capability(&a.even_part())
}

/// Class two and `dim L^2 = ((r+s)^2 + (s-r)) / 2` where `(r|s) = dim L/Z(L)`.
fn class_two_criterion(a: &SuperAlgebra) -> bool {
    if a.nilpotency_class() != Some(2) {
        return false;
    }
    let q = a.dim() - a.center().dim();
    let (r, s) = (q.even as i64, q.odd as i64);
    let target = (r + s) * (r + s) + (s - r);
    target >= 0 && target % 2 == 0 && (target / 2) as usize == a.derived().dim().total()
}

/// Attaches `L^2` as the witness when it passes the epicenter test.
fn with_derived_witness(a: &SuperAlgebra, mut v: CapabilityVerdict) -> Result<CapabilityVerdict, CapabilityError> {
    if v.status == Status::NonCapable {
        let t = epicenter_contains(a, &a.derived())?;
        if t.contained {
            v.witness = Some(t);
        } else {
            v.notes.push_str("; L^2 fails the epicenter test");
        }
    }
    Ok(v)
}

pub fn capability_verdict(a: &SuperAlgebra, grid_bound: usize) -> Result<CapabilityVerdict, CapabilityError> {
    a.ensure_valid()?;
    a.ensure_nilpotent()?;

    let partial = partial_capability(a);
    if partial.status == Status::NonCapable {
        return Ok(CapabilityVerdict::new(
            Status::NonCapable,
            Rule::NotPartiallyCapable,
            format!("{}: {}", partial.rule, partial.notes),
        ));
    }

    let family = recognize(a)?;
    let closed = match &family {
        FamilyDescriptor::Abelian(d) => {
            let capable = (d.even == 0 && d.odd == 1) || d.total() >= 2;
            Some((capable, Rule::AbelianCapable, Rule::AbelianNonCapable))
        }
        FamilyDescriptor::EvenHeisenberg { m, n } => {
            Some((*m == 1 && *n == 0, Rule::EvenHeisenbergCapable, Rule::EvenHeisenbergNonCapable))
        }
        FamilyDescriptor::OddHeisenberg { m } => {
            Some((*m == 1, Rule::OddHeisenbergCapable, Rule::OddHeisenbergNonCapable))
        }
        FamilyDescriptor::HeisenbergPlusAbelian { core, .. } => {
            let capable = matches!(
                core.as_ref(),
                FamilyDescriptor::EvenHeisenberg { m: 1, n: 0 } | FamilyDescriptor::OddHeisenberg { m: 1 }
            );
            Some((capable, Rule::DerivedDimOneCapable, Rule::DerivedDimOneNonCapable))
        }
        _ => None,
    };
    if let Some((capable, yes, no)) = closed {
        let (status, rule) = if capable { (Status::Capable, yes) } else { (Status::NonCapable, no) };
        let v = CapabilityVerdict::new(status, rule, format!("recognized as {family}"));
        return with_derived_witness(a, v);
    }

    if a.dim().odd == 0 && partial.status == Status::Capable {
        return Ok(CapabilityVerdict::new(
            Status::Capable,
            Rule::LieAlgebraCapable,
            format!("{}: {}", partial.rule, partial.notes),
        ));
    }

    if class_two_criterion(a) {
        let q = a.dim() - a.center().dim();
        return Ok(CapabilityVerdict::new(
            Status::Capable,
            Rule::ClassTwoDimension,
            format!("dim L/Z(L) = {q}, dim L^2 = {}", a.derived().dim().total()),
        ));
    }

    if let Some(t) = witness_search(a, grid_bound)? {
        let mut v = CapabilityVerdict::new(
            Status::NonCapable,
            Rule::EpicenterWitness,
            format!(
                "dim M(L/N) = {} = {} + {}",
                t.dim_m_quotient.total(),
                t.dim_m_l.total(),
                t.dim_n_cap_l2
            ),
        );
        v.witness = Some(t);
        return Ok(v);
    }

    let z = a.center().dim();
    if z.even <= 1 && z.odd <= 1 {
        return Ok(CapabilityVerdict::new(
            Status::Capable,
            Rule::ExhaustiveExclusion,
            format!("center {z}; every homogeneous central ray fails the epicenter test"),
        ));
    }

    Ok(CapabilityVerdict::new(
        Status::Undetermined,
        Rule::Undetermined,
        format!("center {z}; no witness with coefficients up to {grid_bound}"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{ratio, unit};
    use crate::recognize::build_canonical;

    fn canonical(d: FamilyDescriptor) -> SuperAlgebra {
        build_canonical(&d).unwrap()
    }

    fn l24() -> SuperAlgebra {
        SuperAlgebra::abelian("L24", vec!["x1", "x2", "x3"], vec!["x4", "x5"])
            .with_bracket(0, 1, unit(5, 2))
            .with_bracket(0, 4, unit(5, 3))
    }

    fn l8() -> SuperAlgebra {
        SuperAlgebra::abelian("L8", vec!["x1", "x2"], vec!["x3", "x4"])
            .with_bracket(0, 2, unit(4, 3))
            .with_bracket(2, 2, unit(4, 1))
    }

    #[test]
    fn l24_rays_are_not_in_the_epicenter() {
        let l = l24();
        let n = GradedIdeal::new(&l, vec![unit(5, 2)]).unwrap();
        let t = epicenter_contains(&l, &n).unwrap();
        assert_eq!((t.dim_m_quotient.total(), t.dim_m_l.total(), t.dim_n_cap_l2), (4, 6, 1));
        assert!(!t.contained);
        let k = GradedIdeal::new(&l, vec![unit(5, 3)]).unwrap();
        let t = epicenter_contains(&l, &k).unwrap();
        assert_eq!(t.dim_m_quotient.total(), 5);
        assert!(!t.contained);
    }

    #[test]
    fn zero_ideal_is_contained() {
        let l = l24();
        assert!(epicenter_contains(&l, &GradedIdeal::zero(&l)).unwrap().contained);
    }

    #[test]
    fn non_central_ideal_is_rejected() {
        let l = l24();
        let n = GradedIdeal::new(&l, vec![unit(5, 1), unit(5, 2)]).unwrap();
        assert_eq!(epicenter_contains(&l, &n), Err(CapabilityError::NotCentral));
    }

    #[test]
    fn scaling_does_not_change_containment() {
        let l = canonical(FamilyDescriptor::EvenHeisenberg { m: 2, n: 0 });
        let z = unit(5, 4);
        let scaled: Vec<Scalar> = z.iter().map(|c| c * ratio(-7, 3)).collect();
        let a = epicenter_contains(&l, &GradedIdeal::new(&l, vec![z]).unwrap()).unwrap();
        let b = epicenter_contains(&l, &GradedIdeal::new(&l, vec![scaled]).unwrap()).unwrap();
        assert!(a.contained && b.contained);
    }

    #[test]
    fn witness_search_examples() {
        let h20 = canonical(FamilyDescriptor::EvenHeisenberg { m: 2, n: 0 });
        let w = witness_search(&h20, 1).unwrap().unwrap();
        assert_eq!(w.ideal.space(), h20.derived().space());
        let h10 = canonical(FamilyDescriptor::EvenHeisenberg { m: 1, n: 0 });
        assert_eq!(witness_search(&h10, 3).unwrap(), None);
    }

    #[test]
    fn center_of_capable_algebra_is_not_contained() {
        let h10 = canonical(FamilyDescriptor::EvenHeisenberg { m: 1, n: 0 });
        assert!(!epicenter_contains(&h10, &h10.center()).unwrap().contained);
    }

    #[test]
    fn candidate_rays_are_deduplicated() {
        let a = SuperAlgebra::abelian_dim("A", GradedDim::new(2, 0));
        let c = witness_candidates(&a, 1);
        // rays of Z^2 with entries in {-1,0,1}: x1, x2, x1+x2, x1-x2
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn closed_verdicts() {
        let v = capability_verdict(&canonical(FamilyDescriptor::EvenHeisenberg { m: 1, n: 0 }), 2).unwrap();
        assert_eq!((v.status, v.rule), (Status::Capable, Rule::EvenHeisenbergCapable));
        let v = capability_verdict(&canonical(FamilyDescriptor::EvenHeisenberg { m: 1, n: 1 }), 2).unwrap();
        assert_eq!((v.status, v.rule), (Status::NonCapable, Rule::EvenHeisenbergNonCapable));
        assert!(v.witness.unwrap().contained);
        let v = capability_verdict(&SuperAlgebra::abelian_dim("A", GradedDim::new(0, 1)), 2).unwrap();
        assert_eq!(v.status, Status::Capable);
        let v = capability_verdict(&SuperAlgebra::abelian_dim("A", GradedDim::new(1, 0)), 2).unwrap();
        assert_eq!((v.status, v.rule), (Status::NonCapable, Rule::NotPartiallyCapable));
    }

    #[test]
    fn odd_heisenberg_is_not_partially_capable() {
        // even part of H_1 is A(1|0)
        let h1 = canonical(FamilyDescriptor::OddHeisenberg { m: 1 });
        let v = capability_verdict(&h1, 2).unwrap();
        assert_eq!((v.status, v.rule), (Status::NonCapable, Rule::NotPartiallyCapable));
        assert!(v.witness.is_none());
    }

    #[test]
    fn l1_is_not_partially_capable() {
        let l1 = SuperAlgebra::abelian("L1", vec!["x1"], vec!["x2"]).with_bracket(1, 1, unit(2, 0));
        assert_eq!(partial_capability(&l1).status, Status::NonCapable);
        let v = capability_verdict(&l1, 2).unwrap();
        assert_eq!(v.rule, Rule::NotPartiallyCapable);
    }

    #[test]
    fn class_two_criterion_on_l8() {
        let v = capability_verdict(&l8(), 2).unwrap();
        assert_eq!((v.status, v.rule), (Status::Capable, Rule::ClassTwoDimension));
    }

    #[test]
    fn l24_is_capable_by_exclusion() {
        let v = capability_verdict(&l24(), 2).unwrap();
        assert_eq!((v.status, v.rule), (Status::Capable, Rule::ExhaustiveExclusion));
    }

    #[test]
    fn five_dim_lie_algebras() {
        // L_{5,8}: [x1,x2]=x4, [x1,x3]=x5
        let names = vec!["x1", "x2", "x3", "x4", "x5"];
        let l58 = SuperAlgebra::abelian("L58", names.clone(), vec![])
            .with_bracket(0, 1, unit(5, 3))
            .with_bracket(0, 2, unit(5, 4));
        assert_eq!(partial_capability(&l58).rule, "five-dim-table");
        let v = capability_verdict(&l58, 2).unwrap();
        assert_eq!((v.status, v.rule), (Status::Capable, Rule::LieAlgebraCapable));
        // L_{4,3} + A(1|0) has the same series as L_{5,5} but a larger center
        let l43a = SuperAlgebra::abelian("L43A", names, vec![])
            .with_bracket(0, 1, unit(5, 2))
            .with_bracket(0, 2, unit(5, 3));
        assert_eq!(partial_capability(&l43a).status, Status::Undetermined);
    }

    #[test]
    fn class_two_bound_on_even_part() {
        // L_{4,3}: [x1,x2]=x3, [x1,x3]=x4 has dim L^2 = 2 and dim 4
        let l43 = SuperAlgebra::abelian("L43", vec!["x1", "x2", "x3", "x4"], vec![])
            .with_bracket(0, 1, unit(4, 2))
            .with_bracket(0, 2, unit(4, 3));
        let p = partial_capability(&l43);
        assert_eq!((p.status, p.rule), (Status::NonCapable, "class-two-bound"));
    }

    #[test]
    fn rejects_non_nilpotent() {
        let a = SuperAlgebra::abelian("ax+b", vec!["x1", "x2"], Vec::<&str>::new()).with_bracket(1, 0, unit(2, 0));
        assert!(matches!(capability_verdict(&a, 2), Err(CapabilityError::Algebra(AlgebraError::NotNilpotent(_)))));
    }
}
