//! Finite matrix-group machinery: closure from generators, conjugacy
//! classes, element orders, and the structure constants of the center of
//! the group algebra on the class-sum basis.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num::integer::lcm;

use crate::error::{Error, Result};
use crate::linalg::{is_symplectic, validate_symplectic_form, CycMatrix};

/// Resource caps for closure and order searches.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Maximum number of group elements materialized by closure.
    pub closure: usize,
    /// Maximum element order probed before giving up.
    pub element_order: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            closure: 20_000,
            element_order: 10_000,
        }
    }
}

/// Largest group order for which a full Cayley table is materialized.
const CAYLEY_TABLE_MAX: usize = 2048;

/// A conjugacy class, held as sorted element indices. The representative is
/// the smallest member.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A finite matrix group, fully enumerated, with every entry embedded at a
/// single ambient conductor.
///
/// Elements are indexed in breadth-first discovery order with the identity
/// at index 0, which makes all downstream reports reproducible.
pub struct FiniteMatrixGroup {
    dim: usize,
    conductor: u64,
    exponent: u64,
    omega: CycMatrix,
    elements: Vec<CycMatrix>,
    generator_indices: Vec<usize>,
    orders: Vec<u64>,
    in_sl: bool,
    in_sp: bool,
    /// BFS provenance: `elements[i] = elements[p] * gen[s]` for `(p, s)`.
    parent: Vec<Option<(u32, u32)>>,
    /// Right-multiplication by each generator, `|G| x num_gens`, row-major.
    gen_action: Vec<u32>,
    num_gens: usize,
    inverse_cache: OnceLock<Vec<u32>>,
    cayley_cache: OnceLock<Option<Vec<u32>>>,
    class_cache: OnceLock<(Vec<ConjugacyClass>, Vec<u32>)>,
}

/// Least `r >= 1` with `g^r = 1`, probed by successive multiplication.
pub fn element_order(g: &CycMatrix, cap: u64) -> Result<u64> {
    if !g.is_square() {
        return Err(Error::NotSquare {
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    let mut p = g.clone();
    let mut ord = 1u64;
    while !p.is_identity() {
        ord += 1;
        if ord > cap {
            return Err(Error::OrderCapExceeded { cap });
        }
        p = p.mul(g);
    }
    Ok(ord)
}

/// Breadth-first closure of a generator list under multiplication.
///
/// Closure runs at the lcm of the generator entry conductors and generator
/// orders; once the group exponent is known the whole group is re-embedded
/// at it (or at its lcm with the closure conductor when the entries need a
/// larger field).
pub fn close_generators(
    gens: &[CycMatrix],
    omega: &CycMatrix,
    caps: &Caps,
) -> Result<FiniteMatrixGroup> {
    validate_symplectic_form(omega)?;
    let dim = omega.rows();
    for (i, g) in gens.iter().enumerate() {
        if g.rows() != dim || g.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "generator {i} is {}x{}, expected {dim}x{dim}",
                g.rows(),
                g.cols()
            )));
        }
    }

    let mut base = omega.conductor();
    for g in gens {
        base = lcm(base, g.conductor());
    }
    let gens_base: Vec<CycMatrix> = gens
        .iter()
        .map(|g| g.embed(base))
        .collect::<Result<_>>()?;
    for (i, g) in gens_base.iter().enumerate() {
        if g.rank() != dim {
            return Err(Error::SingularGenerator { index: i });
        }
    }
    let mut closure_conductor = base;
    for g in &gens_base {
        closure_conductor = lcm(closure_conductor, element_order(g, caps.element_order)?);
    }
    let gens_closed: Vec<CycMatrix> = gens_base
        .iter()
        .map(|g| g.embed(closure_conductor))
        .collect::<Result<_>>()?;
    let num_gens = gens_closed.len();

    let mut elements = vec![CycMatrix::identity(dim, closure_conductor)];
    let mut index: HashMap<CycMatrix, u32> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut parent: Vec<Option<(u32, u32)>> = vec![None];
    let mut gen_action: Vec<u32> = Vec::new();

    let mut i = 0;
    while i < elements.len() {
        let g = elements[i].clone();
        for (s, gen) in gens_closed.iter().enumerate() {
            let h = g.mul(gen);
            let idx = match index.get(&h) {
                Some(&j) => j,
                None => {
                    if elements.len() >= caps.closure {
                        return Err(Error::ClosureCapExceeded {
                            cap: caps.closure,
                            found: elements.len() + 1,
                        });
                    }
                    let j = elements.len() as u32;
                    elements.push(h.clone());
                    index.insert(h, j);
                    parent.push(Some((i as u32, s as u32)));
                    j
                }
            };
            gen_action.push(idx);
        }
        i += 1;
    }
    drop(index);
    let n = elements.len();

    let walk = |a: u32, b: u32| walk_mul(&parent, &gen_action, num_gens, a, b);
    let mut orders = Vec::with_capacity(n);
    for e in 0..n as u32 {
        let mut ord = 1u64;
        let mut p = e;
        while p != 0 {
            p = walk(p, e);
            ord += 1;
        }
        orders.push(ord);
    }
    let exponent = orders.iter().fold(1u64, |acc, &o| lcm(acc, o));
    let ambient = if exponent % closure_conductor == 0 {
        exponent
    } else {
        lcm(closure_conductor, exponent)
    };

    let elements: Vec<CycMatrix> = elements
        .into_iter()
        .map(|g| g.embed(ambient))
        .collect::<Result<_>>()?;
    let omega = omega.embed(ambient)?;

    let generator_indices = gens_closed
        .iter()
        .map(|g| {
            let g = g.embed(ambient).expect("ambient embedding");
            elements.iter().position(|e| *e == g).expect("generator in closure")
        })
        .collect();

    let mut in_sl = true;
    let mut in_sp = true;
    for g in &elements {
        if in_sl && !g.determinant()?.is_one() {
            in_sl = false;
        }
        if in_sp && !is_symplectic(g, &omega)? {
            in_sp = false;
        }
        if !in_sl && !in_sp {
            break;
        }
    }

    Ok(FiniteMatrixGroup {
        dim,
        conductor: ambient,
        exponent,
        omega,
        elements,
        generator_indices,
        orders,
        in_sl,
        in_sp,
        parent,
        gen_action,
        num_gens,
        inverse_cache: OnceLock::new(),
        cayley_cache: OnceLock::new(),
        class_cache: OnceLock::new(),
    })
}

/// `a * b` through the generator word of `b` recorded during closure.
fn walk_mul(
    parent: &[Option<(u32, u32)>],
    gen_action: &[u32],
    num_gens: usize,
    a: u32,
    b: u32,
) -> u32 {
    let mut word = Vec::new();
    let mut cur = b;
    while let Some((p, s)) = parent[cur as usize] {
        word.push(s);
        cur = p;
    }
    let mut x = a;
    for &s in word.iter().rev() {
        x = gen_action[x as usize * num_gens + s as usize];
    }
    x
}

impl FiniteMatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Ambient conductor of every stored entry. Equals the group exponent
    /// whenever the generator entries live in the exponent field.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn omega(&self) -> &CycMatrix {
        &self.omega
    }

    pub fn elements(&self) -> &[CycMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &CycMatrix {
        &self.elements[i]
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order_of(&self, i: usize) -> u64 {
        self.orders[i]
    }

    pub fn is_in_sl(&self) -> bool {
        self.in_sl
    }

    pub fn is_in_sp(&self) -> bool {
        self.in_sp
    }

    /// `(in_SL, in_Sp)`, computed element by element at construction.
    pub fn membership_flags(&self) -> (bool, bool) {
        (self.in_sl, self.in_sp)
    }

    fn built_table(&self) -> Option<&Vec<u32>> {
        self.cayley_cache.get().and_then(|t| t.as_ref())
    }

    /// Index of `elements[a] * elements[b]`.
    ///
    /// Uses the full Cayley table when one has been materialized, and the
    /// generator-word walk otherwise.
    pub fn product_index(&self, a: usize, b: usize) -> usize {
        if let Some(t) = self.built_table() {
            t[a * self.order() + b] as usize
        } else {
            walk_mul(
                &self.parent,
                &self.gen_action,
                self.num_gens,
                a as u32,
                b as u32,
            ) as usize
        }
    }

    /// The full `|G| x |G|` Cayley table, built on first use. Returns `None`
    /// for groups too large to tabulate; `product_index` still works there.
    pub fn cayley_table(&self) -> Option<&[u32]> {
        self.cayley_cache
            .get_or_init(|| {
                let n = self.order();
                if n > CAYLEY_TABLE_MAX {
                    return None;
                }
                let mut t = vec![0u32; n * n];
                for a in 0..n {
                    t[a * n] = a as u32;
                }
                for b in 1..n {
                    let (p, s) = self.parent[b].expect("non-identity has a parent");
                    for a in 0..n {
                        let ap = t[a * n + p as usize] as usize;
                        t[a * n + b] = self.gen_action[ap * self.num_gens + s as usize];
                    }
                }
                Some(t)
            })
            .as_deref()
    }

    fn inverse_table(&self) -> &[u32] {
        self.inverse_cache.get_or_init(|| {
            (0..self.order())
                .map(|a| {
                    let mut prev = 0u32;
                    let mut cur = a as u32;
                    while cur != 0 {
                        prev = cur;
                        cur = walk_mul(
                            &self.parent,
                            &self.gen_action,
                            self.num_gens,
                            cur,
                            a as u32,
                        );
                    }
                    prev
                })
                .collect()
        })
    }

    /// Index of the inverse element.
    pub fn inverse_index(&self, a: usize) -> usize {
        self.inverse_table()[a] as usize
    }

    fn class_data(&self) -> &(Vec<ConjugacyClass>, Vec<u32>) {
        self.class_cache.get_or_init(|| {
            let n = self.order();
            let gen_elems: Vec<usize> = self.generator_indices.clone();
            let inv_gens: Vec<usize> = gen_elems.iter().map(|&s| self.inverse_index(s)).collect();
            let mut class_of = vec![u32::MAX; n];
            let mut classes = Vec::new();
            for start in 0..n {
                if class_of[start] != u32::MAX {
                    continue;
                }
                let cid = classes.len() as u32;
                class_of[start] = cid;
                let mut members = vec![start];
                let mut queue = VecDeque::from([start]);
                while let Some(x) = queue.pop_front() {
                    for (&s, &s_inv) in gen_elems.iter().zip(&inv_gens) {
                        let y = self.product_index(self.product_index(s_inv, x), s);
                        if class_of[y] == u32::MAX {
                            class_of[y] = cid;
                            members.push(y);
                            queue.push_back(y);
                        }
                    }
                }
                members.sort_unstable();
                classes.push(ConjugacyClass {
                    representative: start,
                    members,
                });
            }
            (classes, class_of)
        })
    }

    /// Conjugacy classes in deterministic order (ascending smallest member).
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.class_data().0
    }

    /// Class index of each element.
    pub fn class_of(&self) -> &[u32] {
        &self.class_data().1
    }

    /// Structure constants of the center of the group algebra on the
    /// class-sum basis: `N_{ij}^k` counts ordered pairs `(x, y)` in
    /// `C_i x C_j` with `x y = z`, for `z` the representative of class `k`
    /// (the count is independent of the choice of `z` within the class).
    pub fn class_sum_product(&self, i: usize, j: usize) -> BTreeMap<usize, u64> {
        let (classes, class_of) = self.class_data();
        let mut out = BTreeMap::new();
        for (k, ck) in classes.iter().enumerate() {
            let z = ck.representative;
            let mut count = 0u64;
            for &x in &classes[i].members {
                let y = self.product_index(self.inverse_index(x), z);
                if class_of[y] as usize == j {
                    count += 1;
                }
            }
            if count > 0 {
                out.insert(k, count);
            }
        }
        out
    }

    /// Finds an element by matrix value, embedding into the ambient
    /// conductor first. Linear scan; intended for tests and small lookups.
    pub fn position(&self, g: &CycMatrix) -> Option<usize> {
        let g = g.embed(self.conductor).ok()?;
        self.elements.iter().position(|e| *e == g)
    }
}

impl fmt::Debug for FiniteMatrixGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteMatrixGroup")
            .field("dim", &self.dim)
            .field("order", &self.order())
            .field("conductor", &self.conductor)
            .field("exponent", &self.exponent)
            .field("in_sl", &self.in_sl)
            .field("in_sp", &self.in_sp)
            .finish()
    }
}
