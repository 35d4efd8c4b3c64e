//! Brute-force isomorphism testing for small groups.
//!
//! Backtracking over generator images with closure-based pruning. Fine for
//! the orders the test suites throw at it (a few hundred); not intended for
//! anything bigger.

use crate::group::FiniteGroup;
use crate::structure;

/// Whether two groups are isomorphic.
pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    if a.order() != b.order() {
        return false;
    }
    if a.is_abelian() != b.is_abelian() {
        return false;
    }
    let mut ha: Vec<u32> = (0..a.order() as u16).map(|i| a.order_of(i)).collect();
    let mut hb: Vec<u32> = (0..b.order() as u16).map(|i| b.order_of(i)).collect();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return false;
    }
    let gens = structure::reduce_generators(a, &a.full_set());
    if gens.is_empty() {
        return true;
    }
    let mut images: Vec<(u16, u16)> = Vec::new();
    assign(a, b, &gens, &mut images)
}

fn assign(a: &FiniteGroup, b: &FiniteGroup, gens: &[u16], images: &mut Vec<(u16, u16)>) -> bool {
    if images.len() == gens.len() {
        return true;
    }
    let g = gens[images.len()];
    for cand in 0..b.order() as u16 {
        if b.order_of(cand) != a.order_of(g) {
            continue;
        }
        images.push((g, cand));
        if partial_embedding_exists(a, b, images) && assign(a, b, gens, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Extends the generator assignment to the subgroup it generates, failing on
/// any homomorphism conflict or collision of images.
fn partial_embedding_exists(a: &FiniteGroup, b: &FiniteGroup, pairs: &[(u16, u16)]) -> bool {
    let mut map: Vec<Option<u16>> = vec![None; a.order()];
    let mut used = vec![false; b.order()];
    map[0] = Some(0);
    used[0] = true;
    let mut queue: Vec<u16> = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let mx = map[x as usize].expect("queued elements are mapped");
        for &(g, img) in pairs {
            let y = a.mul(x, g);
            let my = b.mul(mx, img);
            match map[y as usize] {
                None => {
                    if used[my as usize] {
                        return false;
                    }
                    used[my as usize] = true;
                    map[y as usize] = Some(my);
                    queue.push(y);
                }
                Some(existing) => {
                    if existing != my {
                        return false;
                    }
                }
            }
        }
    }
    true
}
