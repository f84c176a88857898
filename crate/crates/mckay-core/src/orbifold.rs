//! Ages, the age filtration, and the orbifold cohomology ring of a
//! symplectic quotient [V/G], realized as the associated graded of the
//! center of the group algebra.
//!
//! Everything here is exact and exhaustively verifiable at desk scale:
//! the age-codimension identity, transversality of fixed spaces against
//! the additivity of ages, associativity of the graded product, and the
//! agreement of the two independent Betti-number computations (eigenvalue
//! multiplicities vs fixed-space ranks).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num::BigInt;

use crate::cyclotomic::Rational;
use crate::error::{Error, Result};
use crate::group::FiniteMatrixGroup;
use crate::linalg::{
    eigen_multiplicities, subspace_intersection, subspace_intersection_dim, CycMatrix, Subspace,
};

/// Eigenvalue data of one group element: order `r`, multiplicities of the
/// eigenvalues `zeta_r^j`, the age, and the codimension of the fixed space.
#[derive(Clone, Debug)]
pub struct AgeData {
    pub element: usize,
    pub order: u64,
    pub multiplicities: Vec<usize>,
    pub age: usize,
    pub codim: usize,
}

/// Age of a single element: multiplicities via exact kernel ranks, age as
/// the weighted eigenvalue-exponent sum divided by the order.
///
/// The division is exact for volume-preserving groups; a nonintegral age on
/// such a group would be an arithmetic bug and is reported as an internal
/// failure.
pub fn age_data(group: &FiniteMatrixGroup, element: usize) -> Result<AgeData> {
    let r = group.order_of(element);
    let multiplicities = eigen_multiplicities(group.element(element), r)?;
    let weighted: u64 = multiplicities
        .iter()
        .enumerate()
        .map(|(j, &m)| j as u64 * m as u64)
        .sum();
    if weighted % r != 0 {
        if group.is_in_sl() {
            return Err(Error::Internal(format!(
                "age of element {element} is {weighted}/{r} despite det = 1"
            )));
        }
        return Err(Error::NonIntegralAge {
            element,
            weighted,
            order: r,
        });
    }
    let age = (weighted / r) as usize;
    let codim = group.dim() - multiplicities[0];
    Ok(AgeData {
        element,
        order: r,
        multiplicities,
        age,
        codim,
    })
}

/// One conjugacy class with its grading data, in report order.
#[derive(Clone, Debug)]
pub struct ClassData {
    /// Index into `group.conjugacy_classes()`.
    pub group_class: usize,
    pub representative: usize,
    pub size: usize,
    pub order: u64,
    pub age: usize,
    pub codim: usize,
}

/// Orbifold Betti numbers: dimension per (even) cohomological degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbifoldBetti {
    pub dims: BTreeMap<usize, usize>,
}

impl OrbifoldBetti {
    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn dim_in_degree(&self, k: usize) -> usize {
        self.dims.get(&k).copied().unwrap_or(0)
    }
}

/// The graded ring on the class-sum basis: basis element `i` sits in degree
/// `2 * age`, and a structure constant survives only when the degrees add.
#[derive(Clone, Debug)]
pub struct GradedRing {
    /// `(class index, degree)` per basis element, in report order.
    pub basis: Vec<(usize, usize)>,
    /// `(i, j) -> k -> constant`; zero entries are omitted.
    pub constants: BTreeMap<(usize, usize), BTreeMap<usize, Rational>>,
}

impl GradedRing {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.basis[i].1
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.constants
            .get(&(i, j))
            .and_then(|m| m.get(&k))
            .cloned()
            .unwrap_or_else(|| Rational::from_integer(BigInt::from(0)))
    }
}

/// Result of one verification sweep. Counterexample strings are
/// deterministic (index order) and truncated to a fixed window.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub checked: u64,
    pub failures: u64,
    pub counterexamples: Vec<String>,
}

const COUNTEREXAMPLE_WINDOW: usize = 100;

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome {
            name,
            checked: 0,
            failures: 0,
            counterexamples: Vec::new(),
        }
    }

    fn fail(&mut self, message: String) {
        self.failures += 1;
        if self.counterexamples.len() < COUNTEREXAMPLE_WINDOW {
            self.counterexamples.push(message);
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: pass ({} checked)", self.name, self.checked)
        } else {
            write!(
                f,
                "{}: FAIL ({} of {} checks, e.g. {})",
                self.name,
                self.failures,
                self.checked,
                self.counterexamples.first().map(String::as_str).unwrap_or("?")
            )
        }
    }
}

/// Sweep mode for the associativity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssocMode {
    /// All `|G|^3` triples of group elements.
    Elements,
    /// All quadruples of basis classes of the graded ring.
    Classes,
}

impl AssocMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            AssocMode::Elements => "elements",
            AssocMode::Classes => "classes",
        }
    }
}

/// Largest group order accepted by the element-mode associativity sweep.
pub const ASSOC_ELEMENTS_MAX: usize = 2048;

/// Per-element and per-class age data of a closed group, plus every
/// verification sweep built on it.
///
/// Construction computes the eigenvalue data of all elements and checks
/// that age and codimension are constant on conjugacy classes. Classes are
/// then ordered by `(age, codim, smallest member)` for reporting.
pub struct OrbifoldAnalysis {
    group: FiniteMatrixGroup,
    element_data: Vec<AgeData>,
    classes: Vec<ClassData>,
    sorted_class_of: Vec<u32>,
    fixed_spaces: OnceLock<Vec<Subspace>>,
}

impl OrbifoldAnalysis {
    pub fn new(group: FiniteMatrixGroup) -> Result<Self> {
        if !group.is_in_sl() {
            return Err(Error::NotSpecialLinear);
        }
        let element_data: Vec<AgeData> = (0..group.order())
            .map(|i| age_data(&group, i))
            .collect::<Result<_>>()?;

        let group_classes = group.conjugacy_classes();
        let mut classes: Vec<ClassData> = Vec::with_capacity(group_classes.len());
        for (gc, class) in group_classes.iter().enumerate() {
            let rep = class.representative;
            let age = element_data[rep].age;
            let codim = element_data[rep].codim;
            for &m in &class.members {
                if element_data[m].age != age || element_data[m].codim != codim {
                    return Err(Error::Internal(format!(
                        "age/codim not constant on conjugacy class {gc}: \
                         element {m} has ({}, {}), representative has ({age}, {codim})",
                        element_data[m].age, element_data[m].codim
                    )));
                }
            }
            classes.push(ClassData {
                group_class: gc,
                representative: rep,
                size: class.size(),
                order: group.order_of(rep),
                age,
                codim,
            });
        }
        classes.sort_by_key(|c| (c.age, c.codim, c.representative));

        let mut sorted_class_of = vec![0u32; group.order()];
        for (sid, c) in classes.iter().enumerate() {
            for &m in &group_classes[c.group_class].members {
                sorted_class_of[m] = sid as u32;
            }
        }

        Ok(OrbifoldAnalysis {
            group,
            element_data,
            classes,
            sorted_class_of,
            fixed_spaces: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &FiniteMatrixGroup {
        &self.group
    }

    pub fn element_data(&self) -> &[AgeData] {
        &self.element_data
    }

    /// Classes in report order: ascending `(age, codim, smallest member)`.
    pub fn classes(&self) -> &[ClassData] {
        &self.classes
    }

    pub fn class_members(&self, class: usize) -> &[usize] {
        &self.group.conjugacy_classes()[self.classes[class].group_class].members
    }

    /// Report-order class index of an element.
    pub fn class_of(&self, element: usize) -> usize {
        self.sorted_class_of[element] as usize
    }

    pub fn age_of(&self, element: usize) -> usize {
        self.element_data[element].age
    }

    pub fn codim_of(&self, element: usize) -> usize {
        self.element_data[element].codim
    }

    fn require_symplectic(&self) -> Result<()> {
        if self.group.is_in_sp() {
            Ok(())
        } else {
            Err(Error::NotSymplectic)
        }
    }

    fn fixed_space_list(&self) -> &[Subspace] {
        self.fixed_spaces.get_or_init(|| {
            self.group
                .elements()
                .iter()
                .map(|g| g.fixed_space().expect("group elements are square"))
                .collect()
        })
    }

    /// Betti numbers by degree `2 * age`, one count per conjugacy class.
    pub fn orbifold_betti(&self) -> OrbifoldBetti {
        let mut dims = BTreeMap::new();
        for c in &self.classes {
            *dims.entry(2 * c.age).or_insert(0) += 1;
        }
        OrbifoldBetti { dims }
    }

    fn hochschild_dims_unchecked(&self) -> BTreeMap<usize, usize> {
        // Codimension via a fresh fixed-space rank, independent of the
        // eigenvalue-multiplicity path used for ages.
        let mut dims = BTreeMap::new();
        let id = CycMatrix::identity(self.group.dim(), self.group.conductor());
        for c in &self.classes {
            let rank = self.group.element(c.representative).sub(&id).rank();
            *dims.entry(rank).or_insert(0) += 1;
        }
        dims
    }

    /// Class counts by `codim V^g`, the Hochschild-side grading.
    ///
    /// On a symplectic group this must agree with [`Self::orbifold_betti`]
    /// under the identification `degree = codim = 2 * age`; a mismatch is
    /// reported as an internal failure.
    pub fn hochschild_dims(&self) -> Result<BTreeMap<usize, usize>> {
        let dims = self.hochschild_dims_unchecked();
        if self.group.is_in_sp() {
            let betti = self.orbifold_betti().dims;
            if dims != betti {
                return Err(Error::Internal(format!(
                    "fixed-space grading {dims:?} disagrees with age grading {betti:?}"
                )));
            }
        }
        Ok(dims)
    }

    /// 1 iff the ages of `g1` and `g2` add up to the age of `g1 g2`.
    pub fn structure_constant_age(&self, g1: usize, g2: usize) -> u8 {
        let p = self.group.product_index(g1, g2);
        u8::from(self.element_data[g1].age + self.element_data[g2].age == self.element_data[p].age)
    }

    /// 1 iff the fixed spaces of `g1` and `g2` intersect transversally.
    pub fn structure_constant_transversal(&self, g1: usize, g2: usize) -> Result<u8> {
        self.require_symplectic()?;
        let fs = self.fixed_space_list();
        let inter = subspace_intersection_dim(&fs[g1], &fs[g2])?;
        Ok(u8::from(
            fs[g1].dim() + fs[g2].dim() - inter == self.group.dim(),
        ))
    }

    /// Report-order indices of the classes of age exactly 1. Their count is
    /// `dim H^2` and the number of deformation parameters of the quotient.
    pub fn symplectic_reflections(&self) -> Vec<usize> {
        self.classes
            .iter()
            .enumerate()
            .filter(|(_, c)| c.age == 1)
            .map(|(i, _)| i)
            .collect()
    }

    /// The associated graded ring of the center of the group algebra with
    /// respect to the age filtration: class sums graded by `2 * age`, with
    /// the structure constants of the center kept exactly when the grading
    /// adds and zeroed otherwise.
    pub fn gr_center_ring(&self) -> Result<GradedRing> {
        self.require_symplectic()?;
        let nc = self.classes.len();
        let of_group: BTreeMap<usize, usize> = self
            .classes
            .iter()
            .enumerate()
            .map(|(sid, c)| (c.group_class, sid))
            .collect();
        let basis = self
            .classes
            .iter()
            .enumerate()
            .map(|(sid, c)| (sid, 2 * c.age))
            .collect();
        let mut constants = BTreeMap::new();
        for i in 0..nc {
            for j in 0..nc {
                let raw = self
                    .group
                    .class_sum_product(self.classes[i].group_class, self.classes[j].group_class);
                let mut kept = BTreeMap::new();
                for (gk, count) in raw {
                    let k = of_group[&gk];
                    if self.classes[k].age == self.classes[i].age + self.classes[j].age {
                        kept.insert(k, Rational::from_integer(BigInt::from(count)));
                    }
                }
                if !kept.is_empty() {
                    constants.insert((i, j), kept);
                }
            }
        }
        let ring = GradedRing { basis, constants };
        // commutativity and associativity checked at construction
        for i in 0..nc {
            for j in i + 1..nc {
                if ring.constants.get(&(i, j)) != ring.constants.get(&(j, i)) {
                    return Err(Error::Internal(format!(
                        "graded ring is not commutative at ({i}, {j})"
                    )));
                }
            }
        }
        let assoc = self.graded_ring_associativity(&ring);
        if !assoc.passed() {
            return Err(Error::Internal(format!(
                "graded ring failed its associativity check: {}",
                assoc.counterexamples.first().map(String::as_str).unwrap_or("?")
            )));
        }
        Ok(ring)
    }

    /// Age = codim/2 and palindromic eigenvalue multiplicities, for every
    /// element of a symplectic group.
    pub fn verify_age_codim(&self) -> Result<CheckOutcome> {
        self.require_symplectic()?;
        let mut outcome = CheckOutcome::new("age-codim");
        for data in &self.element_data {
            outcome.checked += 1;
            if 2 * data.age != data.codim {
                outcome.fail(format!(
                    "element {}: age {} != codim {} / 2",
                    data.element, data.age, data.codim
                ));
            }
            let r = data.order as usize;
            for j in 1..r {
                if data.multiplicities[j] != data.multiplicities[r - j] {
                    outcome.fail(format!(
                        "element {}: multiplicity m_{j} != m_{}",
                        data.element,
                        r - j
                    ));
                }
            }
        }
        Ok(outcome)
    }

    /// Exhaustive pair sweep: whenever the fixed spaces of `g1`, `g2` are
    /// transversal, `V^(g1 g2)` must equal their intersection; and on every
    /// pair the age-additivity constant must agree with the transversality
    /// constant.
    pub fn verify_trans_lemma(&self) -> Result<CheckOutcome> {
        self.require_symplectic()?;
        let mut outcome = CheckOutcome::new("transversality");
        let n = self.group.order();
        let dim = self.group.dim();
        let fs = self.fixed_space_list();
        for g1 in 0..n {
            for g2 in 0..n {
                outcome.checked += 1;
                let p = self.group.product_index(g1, g2);
                let inter_dim = subspace_intersection_dim(&fs[g1], &fs[g2])?;
                let transversal = fs[g1].dim() + fs[g2].dim() - inter_dim == dim;
                if transversal {
                    let inter = subspace_intersection(&fs[g1], &fs[g2])?;
                    if !fs[p].same_space(&inter)? {
                        outcome.fail(format!(
                            "pair ({g1}, {g2}): fixed space of the product differs from \
                             the intersection (dims {} vs {inter_dim})",
                            fs[p].dim()
                        ));
                    }
                }
                let by_age = self.structure_constant_age(g1, g2);
                if by_age != u8::from(transversal) {
                    outcome.fail(format!(
                        "pair ({g1}, {g2}): age constant {by_age} != transversality {}",
                        u8::from(transversal)
                    ));
                }
            }
        }
        Ok(outcome)
    }

    /// `codim V^(g1 g2) <= codim V^(g1) + codim V^(g2)` on all pairs: the
    /// age filtration is compatible with multiplication.
    pub fn verify_filtration(&self) -> CheckOutcome {
        let mut outcome = CheckOutcome::new("filtration");
        let n = self.group.order();
        self.group.cayley_table();
        for g1 in 0..n {
            for g2 in 0..n {
                outcome.checked += 1;
                let p = self.group.product_index(g1, g2);
                if self.element_data[p].codim
                    > self.element_data[g1].codim + self.element_data[g2].codim
                {
                    outcome.fail(format!(
                        "pair ({g1}, {g2}): codim {} exceeds {} + {}",
                        self.element_data[p].codim,
                        self.element_data[g1].codim,
                        self.element_data[g2].codim
                    ));
                }
            }
        }
        outcome
    }

    /// The two Betti computations (eigenvalue multiplicities vs fixed-space
    /// ranks) agree degree by degree.
    pub fn verify_betti_paths(&self) -> Result<CheckOutcome> {
        self.require_symplectic()?;
        let mut outcome = CheckOutcome::new("betti-paths");
        let betti = self.orbifold_betti().dims;
        let hochschild = self.hochschild_dims_unchecked();
        let degrees: std::collections::BTreeSet<usize> =
            betti.keys().chain(hochschild.keys()).copied().collect();
        for d in degrees {
            outcome.checked += 1;
            let a = betti.get(&d).copied().unwrap_or(0);
            let b = hochschild.get(&d).copied().unwrap_or(0);
            if a != b {
                outcome.fail(format!("degree {d}: age grading {a} != rank grading {b}"));
            }
        }
        Ok(outcome)
    }

    /// Associativity of the orbifold product.
    ///
    /// Element mode sweeps all `|G|^3` triples, checking both the scalar
    /// cocycle identity and the product carrier; class mode checks the
    /// structure constants of the graded ring.
    pub fn verify_associativity(&self, mode: AssocMode) -> Result<CheckOutcome> {
        match mode {
            AssocMode::Elements => self.element_associativity(),
            AssocMode::Classes => {
                let ring = self.gr_center_ring()?;
                Ok(self.graded_ring_associativity(&ring))
            }
        }
    }

    fn element_associativity(&self) -> Result<CheckOutcome> {
        let n = self.group.order();
        if n > ASSOC_ELEMENTS_MAX {
            return Err(Error::Internal(format!(
                "group of order {n} exceeds the element-mode sweep limit {ASSOC_ELEMENTS_MAX}; \
                 use class mode"
            )));
        }
        let table = self
            .group
            .cayley_table()
            .expect("order within the table limit");
        let ages: Vec<usize> = self.element_data.iter().map(|d| d.age).collect();
        let mut outcome = CheckOutcome::new("associativity");
        for g1 in 0..n {
            let a1 = ages[g1];
            let row1 = &table[g1 * n..(g1 + 1) * n];
            for g2 in 0..n {
                let a2 = ages[g2];
                let g12 = row1[g2] as usize;
                let c12 = a1 + a2 == ages[g12];
                let row12 = &table[g12 * n..(g12 + 1) * n];
                let row2 = &table[g2 * n..(g2 + 1) * n];
                for g3 in 0..n {
                    outcome.checked += 1;
                    let left_carrier = row12[g3] as usize;
                    let g23 = row2[g3] as usize;
                    let right_carrier = row1[g23] as usize;
                    if left_carrier != right_carrier {
                        outcome.fail(format!(
                            "triple ({g1}, {g2}, {g3}): group product not associative"
                        ));
                        continue;
                    }
                    let left = c12 && ages[g12] + ages[g3] == ages[left_carrier];
                    let right = (a2 + ages[g3] == ages[g23]) && (a1 + ages[g23] == ages[right_carrier]);
                    if left != right {
                        outcome.fail(format!(
                            "triple ({g1}, {g2}, {g3}): c(g1,g2)c(g1g2,g3) = {} but \
                             c(g2,g3)c(g1,g2g3) = {}",
                            u8::from(left),
                            u8::from(right)
                        ));
                    }
                }
            }
        }
        Ok(outcome)
    }

    fn graded_ring_associativity(&self, ring: &GradedRing) -> CheckOutcome {
        let mut outcome = CheckOutcome::new("associativity");
        let nc = ring.rank();
        let empty = BTreeMap::new();
        let table = |i: usize, j: usize| ring.constants.get(&(i, j)).unwrap_or(&empty);
        for i in 0..nc {
            for j in 0..nc {
                let n_ij = table(i, j);
                for l in 0..nc {
                    let n_jl = table(j, l);
                    for m in 0..nc {
                        outcome.checked += 1;
                        let mut lhs = Rational::from_integer(BigInt::from(0));
                        for (k, v) in n_ij {
                            lhs += v * ring.constant(*k, l, m);
                        }
                        let mut rhs = Rational::from_integer(BigInt::from(0));
                        for (k, v) in n_jl {
                            rhs += v * ring.constant(i, *k, m);
                        }
                        if lhs != rhs {
                            outcome.fail(format!(
                                "classes ({i}, {j}, {l}) -> {m}: {lhs} != {rhs}"
                            ));
                        }
                    }
                }
            }
        }
        outcome
    }
}

impl fmt::Debug for OrbifoldAnalysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrbifoldAnalysis")
            .field("group", &self.group)
            .field("classes", &self.classes.len())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycNum;
    use crate::families;
    use crate::group::{close_generators, Caps};

    fn analysis(group: FiniteMatrixGroup) -> OrbifoldAnalysis {
        OrbifoldAnalysis::new(group).unwrap()
    }

    fn minus_identity_group() -> OrbifoldAnalysis {
        analysis(families::cyclic_sl2(2, &Caps::default()).unwrap())
    }

    fn s3() -> OrbifoldAnalysis {
        analysis(families::symmetric_group_action(3, &Caps::default()).unwrap())
    }

    #[test]
    fn age_examples() {
        let a = s3();
        // identity
        assert_eq!(a.age_of(0), 0);
        assert_eq!(a.codim_of(0), 0);
        // transpositions have age 1 and codim 2, the three-cycles age 2
        let ages: Vec<usize> = a.classes().iter().map(|c| c.age).collect();
        assert_eq!(ages, vec![0, 1, 2]);
        let codims: Vec<usize> = a.classes().iter().map(|c| c.codim).collect();
        assert_eq!(codims, vec![0, 2, 4]);

        let m = minus_identity_group();
        let data = &m.element_data()[1];
        assert_eq!(data.order, 2);
        assert_eq!(data.multiplicities, vec![0, 2]);
        assert_eq!(data.age, 1);
        assert_eq!(data.codim, 2);
    }

    #[test]
    fn transposition_in_s2_has_age_one() {
        let a = analysis(families::symmetric_group_action(2, &Caps::default()).unwrap());
        let data = &a.element_data()[1];
        assert_eq!(data.multiplicities, vec![2, 2]);
        assert_eq!(data.age, 1);
        assert_eq!(data.codim, 2);
    }

    #[test]
    fn age_codim_identity_holds() {
        for a in [
            minus_identity_group(),
            s3(),
            analysis(families::cyclic_sl2(5, &Caps::default()).unwrap()),
        ] {
            let outcome = a.verify_age_codim().unwrap();
            assert!(outcome.passed(), "{outcome}");
        }
        // all four nontrivial elements of the cyclic group of order 5 have age 1
        let c5 = analysis(families::cyclic_sl2(5, &Caps::default()).unwrap());
        assert!(c5.element_data()[1..].iter().all(|d| d.age == 1));
    }

    #[test]
    fn betti_tables() {
        assert_eq!(
            minus_identity_group().orbifold_betti().dims,
            BTreeMap::from([(0, 1), (2, 1)])
        );
        assert_eq!(
            s3().orbifold_betti().dims,
            BTreeMap::from([(0, 1), (2, 1), (4, 1)])
        );
        let s4 = analysis(families::symmetric_group_action(4, &Caps::default()).unwrap());
        assert_eq!(
            s4.orbifold_betti().dims,
            BTreeMap::from([(0, 1), (2, 1), (4, 2), (6, 1)])
        );
        // invariants: total = class count, degree 0 is the identity class only
        for a in [minus_identity_group(), s3(), s4] {
            let betti = a.orbifold_betti();
            assert_eq!(betti.total(), a.classes().len());
            assert_eq!(betti.dim_in_degree(0), 1);
        }
    }

    #[test]
    fn structure_constants_on_s3() {
        let a = s3();
        // classes are sorted by age: c0 identity, c1 transpositions, c2 cycles
        let transpositions: Vec<usize> = a.class_members(1).to_vec();
        let t = transpositions[0];
        // identity against anything
        for g in 0..a.group().order() {
            assert_eq!(a.structure_constant_age(0, g), 1);
            assert_eq!(a.structure_constant_transversal(0, g).unwrap(), 1);
        }
        // (t, t): ages 1 + 1 = 2, but t^2 = e has age 0
        assert_eq!(a.structure_constant_age(t, t), 0);
        assert_eq!(a.structure_constant_transversal(t, t).unwrap(), 0);
        // distinct transpositions multiply to a three-cycle
        let u = transpositions[1];
        assert_eq!(a.structure_constant_age(t, u), 1);
        assert_eq!(a.structure_constant_transversal(t, u).unwrap(), 1);
    }

    #[test]
    fn transversality_lemma_sweeps() {
        for a in [
            minus_identity_group(),
            s3(),
            analysis(families::cyclic_sl2(3, &Caps::default()).unwrap()),
        ] {
            let outcome = a.verify_trans_lemma().unwrap();
            assert!(outcome.passed(), "{outcome}");
            assert_eq!(outcome.checked, (a.group().order() as u64).pow(2));
        }
    }

    #[test]
    fn graded_ring_of_s3() {
        let ring = s3().gr_center_ring().unwrap();
        assert_eq!(ring.basis, vec![(0, 0), (1, 2), (2, 4)]);
        // T * T = 3 C: the nine ordered pairs of transpositions leave the
        // age-0 identity component and keep the six three-cycle terms
        assert_eq!(
            ring.constant(1, 1, 2),
            Rational::from_integer(BigInt::from(3))
        );
        assert!(ring.constant(1, 1, 0).is_integer());
        assert_eq!(ring.constant(1, 1, 0), Rational::from_integer(BigInt::from(0)));
        // commutative on the class-sum basis
        assert_eq!(ring.constants.get(&(1, 2)), ring.constants.get(&(2, 1)));
    }

    #[test]
    fn graded_ring_of_cyclic_groups_truncates() {
        let a = analysis(families::cyclic_sl2(5, &Caps::default()).unwrap());
        let ring = a.gr_center_ring().unwrap();
        assert_eq!(ring.rank(), 5);
        // no classes of age 2: all degree-2 products vanish
        for i in 1..5 {
            for j in 1..5 {
                assert!(!ring.constants.contains_key(&(i, j)));
            }
        }
    }

    #[test]
    fn graded_ring_of_trivial_group() {
        let a = analysis(families::cyclic_sl2(1, &Caps::default()).unwrap());
        let ring = a.gr_center_ring().unwrap();
        assert_eq!(ring.basis, vec![(0, 0)]);
        assert_eq!(
            ring.constant(0, 0, 0),
            Rational::from_integer(BigInt::from(1))
        );
    }

    #[test]
    fn associativity_small_groups() {
        let pm = minus_identity_group();
        let outcome = pm.verify_associativity(AssocMode::Elements).unwrap();
        assert!(outcome.passed());
        assert_eq!(outcome.checked, 8);

        let outcome = s3().verify_associativity(AssocMode::Elements).unwrap();
        assert!(outcome.passed());
        assert_eq!(outcome.checked, 216);

        let bd3 = analysis(families::binary_dihedral(3, &Caps::default()).unwrap());
        let outcome = bd3.verify_associativity(AssocMode::Elements).unwrap();
        assert!(outcome.passed());
        assert_eq!(outcome.checked, 1728);
        let outcome = bd3.verify_associativity(AssocMode::Classes).unwrap();
        assert!(outcome.passed(), "{outcome}");
    }

    #[test]
    fn reflection_classes() {
        for n in [2usize, 3, 4] {
            let a = analysis(
                families::symmetric_group_action(n as u64, &Caps::default()).unwrap(),
            );
            assert_eq!(a.symplectic_reflections().len(), 1, "S_{n}");
        }
        for m in [2u64, 3, 7] {
            let a = analysis(families::cyclic_sl2(m, &Caps::default()).unwrap());
            assert_eq!(a.symplectic_reflections().len(), (m - 1) as usize);
        }
        let trivial = analysis(families::cyclic_sl2(1, &Caps::default()).unwrap());
        assert!(trivial.symplectic_reflections().is_empty());
    }

    #[test]
    fn hochschild_grading_matches() {
        assert_eq!(
            s3().hochschild_dims().unwrap(),
            BTreeMap::from([(0, 1), (2, 1), (4, 1)])
        );
        assert_eq!(
            minus_identity_group().hochschild_dims().unwrap(),
            BTreeMap::from([(0, 1), (2, 1)])
        );
        let trivial = analysis(families::cyclic_sl2(1, &Caps::default()).unwrap());
        assert_eq!(trivial.hochschild_dims().unwrap(), BTreeMap::from([(0, 1)]));
        for a in [s3(), minus_identity_group()] {
            assert!(a.verify_betti_paths().unwrap().passed());
        }
    }

    #[test]
    fn filtration_is_multiplicative() {
        for a in [
            s3(),
            analysis(families::binary_dihedral(3, &Caps::default()).unwrap()),
        ] {
            let outcome = a.verify_filtration();
            assert!(outcome.passed(), "{outcome}");
        }
    }

    #[test]
    fn inverse_age_and_determinant_identities() {
        for a in [
            s3(),
            analysis(families::binary_dihedral(3, &Caps::default()).unwrap()),
        ] {
            let g = a.group();
            for e in 0..g.order() {
                // age(g) + age(g^-1) = codim V^g, by the pairing a <-> r - a
                let inv = g.inverse_index(e);
                assert_eq!(a.age_of(e) + a.age_of(inv), a.codim_of(e));
                // det(g) = zeta_r^(sum j m_j), the product of the eigenvalues
                let data = &a.element_data()[e];
                let weighted: u64 = data
                    .multiplicities
                    .iter()
                    .enumerate()
                    .map(|(j, &m)| j as u64 * m as u64)
                    .sum();
                let det = g.element(e).determinant().unwrap();
                let step = g.conductor() / data.order;
                let expected =
                    CycNum::root_of_unity(g.conductor(), step * (weighted % data.order));
                assert_eq!(det, expected);
            }
        }
    }

    #[test]
    fn fractional_age_is_rejected_outside_sl() {
        // diag(z3, 1) has determinant z3, and its age 1/3 is not an integer
        let g = CycMatrix::from_rows(vec![
            vec![CycNum::root_of_unity(3, 1), CycNum::zero(3)],
            vec![CycNum::zero(3), CycNum::one(3)],
        ])
        .unwrap();
        let omega = families::omega_blocks(1);
        let group = close_generators(&[g], &omega, &Caps::default()).unwrap();
        assert!(!group.is_in_sl());
        assert!(matches!(
            age_data(&group, 1),
            Err(Error::NonIntegralAge {
                element: 1,
                weighted: 1,
                order: 3
            })
        ));
        assert!(matches!(
            OrbifoldAnalysis::new(group),
            Err(Error::NotSpecialLinear)
        ));
    }

    #[test]
    fn symplectic_only_operations_refuse_non_symplectic_groups() {
        // cyclic group of order 3 inside SL(2) but with a scaled form that it
        // does NOT preserve... instead use an SL(4) group that is not in Sp:
        // diag(z3, z3, z3, 1) has det 1 but scales the standard form.
        let z = CycNum::root_of_unity(3, 1);
        let mut g = CycMatrix::identity(4, 3);
        g.set(0, 0, z.clone());
        g.set(1, 1, z.clone());
        g.set(2, 2, z.clone());
        let mut omega = CycMatrix::zero(4, 4, 1);
        for i in 0..2 {
            omega.set(i, 2 + i, CycNum::one(1));
            omega.set(2 + i, i, CycNum::from_integer(1, -1));
        }
        let group = close_generators(&[g], &omega, &Caps::default()).unwrap();
        assert!(group.is_in_sl());
        assert!(!group.is_in_sp());
        let a = OrbifoldAnalysis::new(group).unwrap();
        assert!(matches!(a.verify_age_codim(), Err(Error::NotSymplectic)));
        assert!(matches!(a.gr_center_ring(), Err(Error::NotSymplectic)));
        assert!(matches!(a.verify_trans_lemma(), Err(Error::NotSymplectic)));
    }
}
