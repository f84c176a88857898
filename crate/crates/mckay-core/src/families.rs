//! Constructors for the standard symplectic families -- cyclic subgroups of
//! SL(2), binary dihedral groups, symmetric groups doubled on C^n + C^n,
//! and wreath products -- plus the partition oracle giving the Betti
//! numbers of the Hilbert scheme of points in the plane.

use std::collections::BTreeMap;

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::group::{close_generators, Caps, FiniteMatrixGroup};
use crate::linalg::CycMatrix;

/// Inner group of a wreath product: a finite subgroup of SL(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InnerFamily {
    CyclicSl2 { m: u64 },
    BinaryDihedral { m: u64 },
}

impl InnerFamily {
    pub fn order(&self) -> u64 {
        match self {
            InnerFamily::CyclicSl2 { m } => *m,
            InnerFamily::BinaryDihedral { m } => 4 * m,
        }
    }

    fn generators(&self) -> Result<Vec<CycMatrix>> {
        match self {
            InnerFamily::CyclicSl2 { m } => {
                require_positive(*m, "cyclic family parameter m")?;
                Ok(vec![diag_root_pair(*m)])
            }
            InnerFamily::BinaryDihedral { m } => {
                if *m < 2 {
                    return Err(Error::InvalidParameter(format!(
                        "binary dihedral family needs m >= 2, got {m}"
                    )));
                }
                Ok(vec![diag_root_pair(2 * m), rotation_j()])
            }
        }
    }
}

/// A named family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    CyclicSl2 { m: u64 },
    BinaryDihedral { m: u64 },
    Symmetric { n: u64 },
    Wreath { inner: InnerFamily, n: u64 },
}

/// Builds the group a [`FamilySpec`] describes.
pub fn build(spec: &FamilySpec, caps: &Caps) -> Result<FiniteMatrixGroup> {
    match spec {
        FamilySpec::CyclicSl2 { m } => cyclic_sl2(*m, caps),
        FamilySpec::BinaryDihedral { m } => binary_dihedral(*m, caps),
        FamilySpec::Symmetric { n } => symmetric_group_action(*n, caps),
        FamilySpec::Wreath { inner, n } => wreath_product(inner, *n, caps),
    }
}

fn require_positive(v: u64, what: &str) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidParameter(format!("{what} must be positive")))
    } else {
        Ok(())
    }
}

/// `diag(zeta_m, zeta_m^(m-1))`, the standard cyclic generator in SL(2).
fn diag_root_pair(m: u64) -> CycMatrix {
    let mut g = CycMatrix::zero(2, 2, m);
    g.set(0, 0, CycNum::root_of_unity(m, 1));
    g.set(1, 1, CycNum::root_of_unity(m, m - 1));
    g
}

/// `[[0, 1], [-1, 0]]`.
fn rotation_j() -> CycMatrix {
    let mut b = CycMatrix::zero(2, 2, 1);
    b.set(0, 1, CycNum::one(1));
    b.set(1, 0, CycNum::from_integer(1, -1));
    b
}

/// The direct sum of `half` standard 2x2 symplectic blocks.
pub fn omega_blocks(half: usize) -> CycMatrix {
    let mut w = CycMatrix::zero(2 * half, 2 * half, 1);
    for i in 0..half {
        w.set(2 * i, 2 * i + 1, CycNum::one(1));
        w.set(2 * i + 1, 2 * i, CycNum::from_integer(1, -1));
    }
    w
}

/// The standard pairing between the two summands of C^n + C^n.
pub fn omega_pairing(n: usize) -> CycMatrix {
    let mut w = CycMatrix::zero(2 * n, 2 * n, 1);
    for i in 0..n {
        w.set(i, n + i, CycNum::one(1));
        w.set(n + i, i, CycNum::from_integer(1, -1));
    }
    w
}

/// The cyclic group of order m generated by `diag(zeta_m, zeta_m^-1)` on
/// C^2 with the standard form.
pub fn cyclic_sl2(m: u64, caps: &Caps) -> Result<FiniteMatrixGroup> {
    require_positive(m, "cyclic family parameter m")?;
    close_generators(&[diag_root_pair(m)], &omega_blocks(1), caps)
}

/// The binary dihedral group of order 4m, generated by
/// `a = diag(zeta_2m, zeta_2m^-1)` and `b = [[0, 1], [-1, 0]]`.
pub fn binary_dihedral(m: u64, caps: &Caps) -> Result<FiniteMatrixGroup> {
    let gens = InnerFamily::BinaryDihedral { m }.generators()?;
    close_generators(&gens, &omega_blocks(1), caps)
}

/// Permutation of `{0..n}` doubled onto C^n + C^n.
fn doubled_permutation(n: usize, perm: &[usize]) -> CycMatrix {
    let mut g = CycMatrix::zero(2 * n, 2 * n, 1);
    for (i, &pi) in perm.iter().enumerate() {
        g.set(pi, i, CycNum::one(1));
        g.set(n + pi, n + i, CycNum::one(1));
    }
    g
}

/// The symmetric group S_n acting diagonally on C^n + C^n by doubled
/// permutation matrices, generated by the adjacent transpositions;
/// omega is the standard pairing between the two summands.
pub fn symmetric_group_action(n: u64, caps: &Caps) -> Result<FiniteMatrixGroup> {
    require_positive(n, "symmetric family parameter n")?;
    let n = n as usize;
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        gens.push(doubled_permutation(n, &perm));
    }
    close_generators(&gens, &omega_pairing(n), caps)
}

/// Block permutation of the n slots of (C^2)^n swapping slots i and i+1.
fn block_transposition(n: usize, i: usize) -> CycMatrix {
    let mut g = CycMatrix::identity(2 * n, 1);
    for t in 0..2 {
        g.set(2 * i + t, 2 * i + t, CycNum::zero(1));
        g.set(2 * (i + 1) + t, 2 * (i + 1) + t, CycNum::zero(1));
        g.set(2 * (i + 1) + t, 2 * i + t, CycNum::one(1));
        g.set(2 * i + t, 2 * (i + 1) + t, CycNum::one(1));
    }
    g
}

/// The wreath product of an inner SL(2) family with S_n, acting on
/// (C^2)^n: inner generators embedded in the first slot, plus the adjacent
/// block transpositions; omega is the direct sum of standard 2x2 blocks.
pub fn wreath_product(inner: &InnerFamily, n: u64, caps: &Caps) -> Result<FiniteMatrixGroup> {
    require_positive(n, "wreath family parameter n")?;
    let inner_gens = inner.generators()?;
    let n = n as usize;
    // |Gamma|^n * n! elements; refuse early when that cannot fit the cap.
    let mut expected: u128 = 1;
    for i in 1..=n as u128 {
        expected = expected.saturating_mul(inner.order() as u128).saturating_mul(i);
    }
    if expected > caps.closure as u128 {
        return Err(Error::ClosureCapExceeded {
            cap: caps.closure,
            found: expected.min(usize::MAX as u128) as usize,
        });
    }
    let mut gens = Vec::new();
    for inner_gen in &inner_gens {
        let mut g = CycMatrix::identity(2 * n, inner_gen.conductor());
        for r in 0..2 {
            for c in 0..2 {
                g.set(r, c, inner_gen.get(r, c).clone());
            }
        }
        gens.push(g);
    }
    for i in 0..n.saturating_sub(1) {
        gens.push(block_transposition(n, i));
    }
    close_generators(&gens, &omega_blocks(n), caps)
}

/// Betti numbers of the Hilbert scheme of n points in the plane:
/// `dims[2k]` counts the partitions of n with exactly n - k parts.
pub fn hilbert_betti(n: u64) -> BTreeMap<usize, usize> {
    assert!(n >= 1, "hilbert_betti: n must be positive");
    let n = n as usize;
    // exact_parts[i][k]: partitions of i with exactly k parts; a partition
    // either contains a part 1 or all parts can be lowered by one.
    let mut exact_parts = vec![vec![0usize; n + 1]; n + 1];
    exact_parts[0][0] = 1;
    for i in 1..=n {
        for k in 1..=i {
            exact_parts[i][k] = exact_parts[i - 1][k - 1]
                + if i >= k { exact_parts[i - k][k] } else { 0 };
        }
    }
    let mut dims = BTreeMap::new();
    for k in 1..=n {
        if exact_parts[n][k] > 0 {
            *dims.entry(2 * (n - k)).or_insert(0) += exact_parts[n][k];
        }
    }
    dims
}
