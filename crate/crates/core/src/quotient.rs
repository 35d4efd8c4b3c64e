//! Quotient groups realized through the translation action on cosets.

use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::GroupError;
use crate::group::FiniteGroup;
use crate::perm::Perm;
use crate::structure;
use crate::subgroup::{self, Subgroup};

/// A quotient G/K materialized as a standalone permutation group on the
/// cosets of K, together with the projection and a section.
///
/// Cosets are numbered by ascending least member, so the projection table is
/// canonical. `lift` maps each quotient element index back to the least base
/// element projecting onto it.
pub struct QuotientView {
    base: Arc<FiniteGroup>,
    kernel: Subgroup,
    quotient: Arc<FiniteGroup>,
    project: Box<[u16]>,
    lift: Box<[u16]>,
}

impl std::fmt::Debug for QuotientView {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "QuotientView(|G| {}, |K| {})",
            self.base.order(),
            self.kernel.order()
        )
    }
}

impl QuotientView {
    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.quotient
    }

    pub fn project_index(&self, base_index: u16) -> u16 {
        self.project[base_index as usize]
    }

    pub fn lift_index(&self, quotient_index: u16) -> u16 {
        self.lift[quotient_index as usize]
    }

    /// Image of a base-group element set.
    pub fn project_set(&self, set: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.quotient.order());
        for i in set.iter() {
            out.insert(self.project[i as usize]);
        }
        out
    }

    /// Image of HK/K as a subgroup of the quotient.
    pub fn project_subgroup(&self, h: &Subgroup) -> Result<Subgroup, GroupError> {
        if h.parent().id() != self.base.id() {
            return Err(GroupError::WrongParent);
        }
        let set = self.project_set(h.set());
        let mut gens: Vec<u16> = h
            .gen_indices()
            .iter()
            .map(|&i| self.project[i as usize])
            .filter(|&q| q != 0)
            .collect();
        gens.sort_unstable();
        gens.dedup();
        Ok(subgroup::subgroup_from_set(&self.quotient, set, gens))
    }

    /// Full preimage of a quotient element set.
    pub fn preimage_set(&self, set: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.base.order());
        for (i, &q) in self.project.iter().enumerate() {
            if set.contains(q) {
                out.insert(i as u16);
            }
        }
        out
    }
}

/// Builds G/K. Fails unless K is normal in G.
pub fn quotient(base: &Arc<FiniteGroup>, kernel: &Subgroup) -> Result<QuotientView, GroupError> {
    if kernel.parent().id() != base.id() {
        return Err(GroupError::WrongParent);
    }
    if !structure::is_normal(base, kernel)? {
        return Err(GroupError::NotNormal);
    }
    let n = base.order();
    if kernel.is_trivial() {
        // G/1 is G itself; reuse the same group value.
        let identity: Vec<u16> = (0..n as u16).collect();
        return Ok(QuotientView {
            base: base.clone(),
            kernel: kernel.clone(),
            quotient: base.clone(),
            project: identity.clone().into_boxed_slice(),
            lift: identity.into_boxed_slice(),
        });
    }
    let members: Vec<u16> = kernel.set().iter().collect();
    let mut coset_of = vec![u16::MAX; n];
    let mut reps: Vec<u16> = Vec::new();
    for i in 0..n as u16 {
        if coset_of[i as usize] != u16::MAX {
            continue;
        }
        let c = reps.len() as u16;
        reps.push(i);
        for &m in &members {
            coset_of[base.mul(i, m) as usize] = c;
        }
    }
    let coset_count = reps.len();
    // Right translation permutes cosets: (Kx)·g = K(xg). Composing two
    // translations left to right matches the element product, so the
    // projection below is a homomorphism under the group's composition
    // convention.
    let mut raw_perms: Vec<Perm> = Vec::with_capacity(n);
    for g in 0..n as u16 {
        let images: Vec<u16> = reps.iter().map(|&r| coset_of[base.mul(r, g) as usize]).collect();
        raw_perms.push(Perm::from_images(images).expect("coset translation is a bijection"));
    }
    let mut distinct: Vec<Perm> = raw_perms.clone();
    distinct.sort_unstable();
    distinct.dedup();
    assert_eq!(distinct.len(), coset_count, "kernel of the coset action is K");
    let mut quotient_group = FiniteGroup::from_sorted_elements(coset_count, distinct);
    let project: Vec<u16> = raw_perms
        .iter()
        .map(|p| {
            quotient_group
                .elements()
                .binary_search(p)
                .expect("every translation image is present") as u16
        })
        .collect();
    let mut lift = vec![u16::MAX; coset_count];
    for (g, &q) in project.iter().enumerate() {
        if lift[q as usize] == u16::MAX {
            lift[q as usize] = g as u16;
        }
    }
    let mut qgens: Vec<u16> = base
        .gen_indices()
        .iter()
        .map(|&g| project[g as usize])
        .filter(|&q| q != 0)
        .collect();
    qgens.sort_unstable();
    qgens.dedup();
    quotient_group.set_gens(qgens);
    Ok(QuotientView {
        base: base.clone(),
        kernel: kernel.clone(),
        quotient: Arc::new(quotient_group),
        project: project.into_boxed_slice(),
        lift: lift.into_boxed_slice(),
    })
}
