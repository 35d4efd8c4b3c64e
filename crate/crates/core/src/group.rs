//! Fully enumerated finite groups with precomputed multiplication tables.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::GroupError;
use crate::perm::Perm;

/// Hard ceiling on group order; the dense tables assume u16 indices and the
/// enumeration algorithms assume everything fits comfortably in memory.
pub const MAX_SUPPORTED_ORDER: usize = 512;

/// Default order bound for closure, deliberately below the hard ceiling.
pub const DEFAULT_MAX_ORDER: usize = 200;

/// Bounds applied while generating a group's elements.
#[derive(Clone, Copy, Debug)]
pub struct BuildLimits {
    pub max_order: usize,
}

impl BuildLimits {
    pub fn with_max_order(max_order: usize) -> BuildLimits {
        BuildLimits { max_order }
    }

    fn effective(&self) -> usize {
        self.max_order.min(MAX_SUPPORTED_ORDER)
    }
}

impl Default for BuildLimits {
    fn default() -> BuildLimits {
        BuildLimits {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// A finite permutation group with every element enumerated.
///
/// Elements are sorted lexicographically by image table, so the identity is
/// always index 0 and indices are canonical for the element set. The
/// multiplication table, inverses and element orders are precomputed; all
/// hot-path arithmetic is u16 index arithmetic.
///
/// Each group gets a process-unique id. Subgroups and quotient views carry
/// their parent's id, which is how cross-group misuse is detected.
pub struct FiniteGroup {
    id: u64,
    degree: usize,
    elements: Vec<Perm>,
    gens: Vec<u16>,
    mult: Box<[u16]>,
    inv: Box<[u16]>,
    elem_order: Box<[u32]>,
    abelian: bool,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FiniteGroup(order {}, degree {}, id {})",
            self.order(),
            self.degree,
            self.id
        )
    }
}

impl FiniteGroup {
    /// Builds the group generated by `gens` inside Sym(degree).
    pub fn generate(
        degree: usize,
        gens: &[Perm],
        limits: BuildLimits,
    ) -> Result<Arc<FiniteGroup>, GroupError> {
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let bound = limits.effective();
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        let mut queue: Vec<Perm> = Vec::new();
        let identity = Perm::identity(degree);
        seen.insert(identity.clone(), ());
        queue.push(identity);
        let mut head = 0;
        while head < queue.len() {
            let current = queue[head].clone();
            head += 1;
            for g in gens {
                let next = current.then(g);
                if !seen.contains_key(&next) {
                    if seen.len() >= bound {
                        return Err(GroupError::ClosureExceedsBound { bound });
                    }
                    seen.insert(next.clone(), ());
                    queue.push(next);
                }
            }
        }
        queue.sort_unstable();
        let group = FiniteGroup::from_sorted_elements(degree, queue);
        let gen_indices = {
            let mut v: Vec<u16> = gens
                .iter()
                .filter(|g| !g.is_identity())
                .map(|g| group_index(&group.elements, g).expect("generator is in its own closure"))
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        Ok(Arc::new(FiniteGroup {
            gens: gen_indices,
            ..group
        }))
    }

    /// Assembles the tables for an element list already known to be a sorted,
    /// closed set of permutations. Generator indices are left empty.
    pub(crate) fn from_sorted_elements(degree: usize, elements: Vec<Perm>) -> FiniteGroup {
        let n = elements.len();
        debug_assert!(n >= 1 && elements[0].is_identity());
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let index: HashMap<&Perm, u16> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i as u16))
            .collect();
        let mut mult = vec![0u16; n * n].into_boxed_slice();
        for (a, pa) in elements.iter().enumerate() {
            for (b, pb) in elements.iter().enumerate() {
                let prod = pa.then(pb);
                mult[a * n + b] = *index
                    .get(&prod)
                    .expect("element set is closed under multiplication");
            }
        }
        let mut inv = vec![0u16; n].into_boxed_slice();
        for (a, pa) in elements.iter().enumerate() {
            inv[a] = *index
                .get(&pa.inverse())
                .expect("element set is closed under inversion");
        }
        let mut elem_order = vec![0u32; n].into_boxed_slice();
        for a in 0..n {
            let mut k = 1u32;
            let mut x = a as u16;
            while x != 0 {
                x = mult[x as usize * n + a];
                k += 1;
            }
            elem_order[a] = k;
        }
        let abelian = (0..n as u16)
            .all(|a| (0..a).all(|b| mult[a as usize * n + b as usize] == mult[b as usize * n + a as usize]));
        FiniteGroup {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            degree,
            elements,
            gens: Vec::new(),
            mult,
            inv,
            elem_order,
            abelian,
        }
    }

    pub(crate) fn set_gens(&mut self, gens: Vec<u16>) {
        self.gens = gens;
    }

    /// Process-unique identity of this group value.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn elem(&self, index: u16) -> &Perm {
        &self.elements[index as usize]
    }

    /// Indices of the defining generators: sorted, deduplicated, identity
    /// dropped. Empty for the trivial group.
    pub fn gen_indices(&self) -> &[u16] {
        &self.gens
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mult[a as usize * self.elements.len() + b as usize]
    }

    pub fn inv(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }

    /// Conjugate `a` by `x`, that is `x⁻¹ a x`.
    pub fn conj(&self, a: u16, x: u16) -> u16 {
        self.mul(self.mul(self.inv(x), a), x)
    }

    pub fn order_of(&self, a: u16) -> u32 {
        self.elem_order[a as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<u16> {
        group_index(&self.elements, p)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index_of(p).is_some()
    }

    /// Full element set as a bitset over this group's indices.
    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.order())
    }

    /// Closure of `seed` under multiplication, as a bitset. The identity is
    /// always included.
    pub fn close_indices(&self, seed: &[u16]) -> ElemSet {
        let mut set = ElemSet::singleton(self.order(), 0);
        let mut queue: Vec<u16> = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &s in seed {
                let y = self.mul(x, s);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    /// Extends a closed set by extra elements and recloses it.
    pub fn close_union(&self, base: &ElemSet, extra: &[u16]) -> ElemSet {
        let mut set = base.clone();
        let mut queue: Vec<u16> = base.iter().collect();
        for &e in extra {
            if set.insert(e) {
                queue.push(e);
            }
        }
        let gens: Vec<u16> = queue.clone();
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &s in gens.iter() {
                let y = self.mul(x, s);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }
}

fn group_index(sorted: &[Perm], p: &Perm) -> Option<u16> {
    sorted.binary_search(p).ok().map(|i| i as u16)
}

/// Builds the group generated by `gens` inside Sym(degree).
pub fn build_group(
    degree: usize,
    gens: &[Perm],
    limits: BuildLimits,
) -> Result<Arc<FiniteGroup>, GroupError> {
    FiniteGroup::generate(degree, gens, limits)
}

/// A direct product together with its two canonically embedded factors.
pub struct DirectProduct {
    pub group: Arc<FiniteGroup>,
    pub left: crate::subgroup::Subgroup,
    pub right: crate::subgroup::Subgroup,
}

/// Direct product acting on the disjoint union of the factors' point sets.
pub fn direct_product(
    a: &Arc<FiniteGroup>,
    b: &Arc<FiniteGroup>,
    limits: BuildLimits,
) -> Result<DirectProduct, GroupError> {
    let target = a.order() * b.order();
    if target > limits.effective() {
        return Err(GroupError::ClosureExceedsBound {
            bound: limits.effective(),
        });
    }
    let degree = a.degree() + b.degree();
    let left_gens: Vec<Perm> = a
        .gen_indices()
        .iter()
        .map(|&gi| embed_left(a.elem(gi), degree))
        .collect();
    let right_gens: Vec<Perm> = b
        .gen_indices()
        .iter()
        .map(|&gi| embed_right(b.elem(gi), a.degree(), degree))
        .collect();
    let mut gens = left_gens.clone();
    gens.extend(right_gens.iter().cloned());
    let group = FiniteGroup::generate(degree, &gens, limits)?;
    assert_eq!(
        group.order(),
        target,
        "factors act on disjoint points, so the closure is the full product"
    );
    let left = crate::subgroup::subgroup_from_perms(&group, &left_gens)?;
    let right = crate::subgroup::subgroup_from_perms(&group, &right_gens)?;
    Ok(DirectProduct { group, left, right })
}

fn embed_left(p: &Perm, degree: usize) -> Perm {
    let mut images: Vec<u16> = (0..degree as u16).collect();
    for (i, &img) in p.images().iter().enumerate() {
        images[i] = img;
    }
    Perm::from_images(images).expect("embedding preserves bijectivity")
}

fn embed_right(p: &Perm, offset: usize, degree: usize) -> Perm {
    let mut images: Vec<u16> = (0..degree as u16).collect();
    for (i, &img) in p.images().iter().enumerate() {
        images[offset + i] = offset as u16 + img;
    }
    Perm::from_images(images).expect("embedding preserves bijectivity")
}

/// An action of one group on another by automorphisms, tabulated per acting
/// element as a map on the acted-on group's element indices.
#[derive(Debug)]
pub struct Action {
    maps: Vec<Vec<u16>>,
}

impl Action {
    /// The trivial action: every acting element fixes everything.
    pub fn trivial(normal: &FiniteGroup, acting: &FiniteGroup) -> Action {
        let id: Vec<u16> = (0..normal.order() as u16).collect();
        Action {
            maps: vec![id; acting.order()],
        }
    }

    /// Builds an action from one automorphism per generator of the acting
    /// group, in `gen_indices()` order, extending multiplicatively to the
    /// whole acting group. Fails if the assignment is inconsistent, which is
    /// exactly when it does not define a homomorphism.
    pub fn from_gen_images(
        normal: &FiniteGroup,
        acting: &FiniteGroup,
        per_gen: &[Vec<u16>],
    ) -> Result<Action, GroupError> {
        assert_eq!(per_gen.len(), acting.gen_indices().len());
        let n = normal.order();
        for map in per_gen {
            check_automorphism(normal, map)?;
        }
        let mut maps: Vec<Option<Vec<u16>>> = vec![None; acting.order()];
        maps[0] = Some((0..n as u16).collect());
        let mut queue: Vec<u16> = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let phi_x = maps[x as usize].clone().expect("queued entries are set");
            for (k, &gi) in acting.gen_indices().iter().enumerate() {
                let y = acting.mul(x, gi);
                // φ(x·g) = φ(x) ∘ φ(g): apply φ(g) first, then φ(x).
                let composed: Vec<u16> = per_gen[k].iter().map(|&m| phi_x[m as usize]).collect();
                match &maps[y as usize] {
                    None => {
                        maps[y as usize] = Some(composed);
                        queue.push(y);
                    }
                    Some(existing) => {
                        if *existing != composed {
                            return Err(GroupError::NotAHomomorphism);
                        }
                    }
                }
            }
        }
        if maps.iter().any(|m| m.is_none()) {
            // Unreachable when the generator indices really generate.
            return Err(GroupError::NotAHomomorphism);
        }
        let action = Action {
            maps: maps.into_iter().map(|m| m.expect("checked")).collect(),
        };
        action.validate(normal, acting)?;
        Ok(action)
    }

    /// Full tabulated action; index by acting element, then by element index.
    pub fn from_maps(
        normal: &FiniteGroup,
        acting: &FiniteGroup,
        maps: Vec<Vec<u16>>,
    ) -> Result<Action, GroupError> {
        assert_eq!(maps.len(), acting.order());
        let action = Action { maps };
        for map in &action.maps {
            check_automorphism(normal, map)?;
        }
        action.validate(normal, acting)?;
        Ok(action)
    }

    fn validate(&self, normal: &FiniteGroup, acting: &FiniteGroup) -> Result<(), GroupError> {
        let n = normal.order();
        for m in &self.maps {
            assert_eq!(m.len(), n);
        }
        if self.maps[0].iter().enumerate().any(|(i, &img)| i as u16 != img) {
            return Err(GroupError::NotAHomomorphism);
        }
        for a in 0..acting.order() as u16 {
            for b in 0..acting.order() as u16 {
                let ab = acting.mul(a, b) as usize;
                let pa = &self.maps[a as usize];
                let pb = &self.maps[b as usize];
                let composed_ok = self.maps[ab]
                    .iter()
                    .enumerate()
                    .all(|(x, &img)| pa[pb[x] as usize] == img);
                if !composed_ok {
                    return Err(GroupError::NotAHomomorphism);
                }
            }
        }
        Ok(())
    }

    pub fn apply(&self, acting_index: u16, normal_index: u16) -> u16 {
        self.maps[acting_index as usize][normal_index as usize]
    }
}

fn check_automorphism(group: &FiniteGroup, map: &[u16]) -> Result<(), GroupError> {
    let n = group.order();
    if map.len() != n {
        return Err(GroupError::NotAnAutomorphism);
    }
    let mut seen = vec![false; n];
    for &img in map {
        let img = img as usize;
        if img >= n || seen[img] {
            return Err(GroupError::NotAnAutomorphism);
        }
        seen[img] = true;
    }
    if map[0] != 0 {
        return Err(GroupError::NotAnAutomorphism);
    }
    for a in 0..n as u16 {
        for b in 0..n as u16 {
            if map[group.mul(a, b) as usize] != group.mul(map[a as usize], map[b as usize]) {
                return Err(GroupError::NotAnAutomorphism);
            }
        }
    }
    Ok(())
}

/// A semidirect product together with its embedded normal and acting parts.
pub struct SemidirectProduct {
    pub group: Arc<FiniteGroup>,
    pub normal_part: crate::subgroup::Subgroup,
    pub acting_part: crate::subgroup::Subgroup,
}

/// Semidirect product N ⋊ H for a validated action of H on N, realized by
/// left translation on the |N|·|H| pairs (n, h).
///
/// Pair (n, h) is the point n·|H| + h. Multiplication is
/// (n₁, h₁)(n₂, h₂) = (n₁·φ_{h₁}(n₂), h₁h₂), and each generator of N or H
/// acts by left multiplication with (g, e) or (e, k) respectively.
pub fn semidirect_product(
    normal: &Arc<FiniteGroup>,
    acting: &Arc<FiniteGroup>,
    action: &Action,
    limits: BuildLimits,
) -> Result<SemidirectProduct, GroupError> {
    action.validate(normal, acting)?;
    let target = normal.order() * acting.order();
    if target > limits.effective() {
        return Err(GroupError::ClosureExceedsBound {
            bound: limits.effective(),
        });
    }
    let nh = acting.order();
    let degree = target;
    let point = |n: u16, h: u16| n as usize * nh + h as usize;
    let mut normal_gens = Vec::new();
    for &gi in normal.gen_indices() {
        let mut images = vec![0u16; degree];
        for n in 0..normal.order() as u16 {
            for h in 0..acting.order() as u16 {
                images[point(n, h)] = point(normal.mul(gi, n), h) as u16;
            }
        }
        normal_gens.push(Perm::from_images(images)?);
    }
    let mut acting_gens = Vec::new();
    for &ki in acting.gen_indices() {
        let mut images = vec![0u16; degree];
        for n in 0..normal.order() as u16 {
            for h in 0..acting.order() as u16 {
                images[point(n, h)] = point(action.apply(ki, n), acting.mul(ki, h)) as u16;
            }
        }
        acting_gens.push(Perm::from_images(images)?);
    }
    let mut gens = normal_gens.clone();
    gens.extend(acting_gens.iter().cloned());
    let group = FiniteGroup::generate(degree, &gens, limits)?;
    assert_eq!(
        group.order(),
        target,
        "left translation on pairs is faithful and transitive"
    );
    let normal_part = crate::subgroup::subgroup_from_perms(&group, &normal_gens)?;
    let acting_part = crate::subgroup::subgroup_from_perms(&group, &acting_gens)?;
    Ok(SemidirectProduct {
        group,
        normal_part,
        acting_part,
    })
}
