//! The group corpus the verifier sweeps.
//!
//! The builtin corpus covers cyclic, dihedral, dicyclic, elementary abelian,
//! symmetric and alternating groups plus a handful of semidirect and direct
//! products chosen to exercise every status a check can produce. A corpus
//! directory of group files can replace it.

use std::path::Path;
use std::sync::Arc;

use pinilot_core::group::MAX_SUPPORTED_ORDER;
use pinilot_core::{
    build_group, direct_product, semidirect_product, Action, BuildLimits, FiniteGroup, Perm,
};

use crate::error::HarnessError;
use crate::format::read_group_file;

/// A corpus member ready for checking.
#[derive(Debug, Clone)]
pub struct NamedGroup {
    pub name: String,
    pub group: Arc<FiniteGroup>,
}

/// A corpus member that could not be loaded.
#[derive(Debug, Clone)]
pub struct SkippedGroup {
    pub name: String,
    pub reason: String,
}

/// Loaded corpus: buildable groups in deterministic order, plus skip records.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub groups: Vec<NamedGroup>,
    pub skipped: Vec<SkippedGroup>,
}

fn full_limits() -> BuildLimits {
    BuildLimits {
        max_order: MAX_SUPPORTED_ORDER,
    }
}

/// Cyclic group of order n on n points.
pub fn cyclic(n: usize) -> Result<Arc<FiniteGroup>, HarnessError> {
    let gens = if n == 1 {
        vec![Perm::identity(1)]
    } else {
        vec![Perm::from_cycles(n, &[(0..n as u16).collect()])?]
    };
    Ok(build_group(n.max(1), &gens, full_limits())?)
}

/// Dihedral group of order 2n acting on n points, n at least 3.
pub fn dihedral(n: usize) -> Result<Arc<FiniteGroup>, HarnessError> {
    let rot = Perm::from_cycles(n, &[(0..n as u16).collect()])?;
    let refl = Perm::from_images((0..n).map(|i| ((n - i) % n) as u16).collect())?;
    Ok(build_group(n, &[rot, refl], full_limits())?)
}

/// Dicyclic group of order 4n on 4n points: an order-2n rotation `a` and an
/// order-4 element `b` with `b^2 = a^n` and `b^-1 a b = a^-1`.
pub fn dicyclic(n: usize) -> Result<Arc<FiniteGroup>, HarnessError> {
    let two_n = 2 * n;
    let degree = 4 * n;
    let point = |i: usize, j: usize| (i + two_n * j) as u16;
    let mut a = vec![0u16; degree];
    let mut b = vec![0u16; degree];
    for i in 0..two_n {
        a[point(i, 0) as usize] = point((i + 1) % two_n, 0);
        a[point(i, 1) as usize] = point((i + 1) % two_n, 1);
        b[point(i, 0) as usize] = point((two_n - i) % two_n, 1);
        b[point(i, 1) as usize] = point((two_n + n - i) % two_n, 0);
    }
    let a = Perm::from_images(a)?;
    let b = Perm::from_images(b)?;
    Ok(build_group(degree, &[a, b], full_limits())?)
}

/// Elementary abelian group of order p^k as k disjoint p-cycles.
pub fn elementary(p: usize, k: usize) -> Result<Arc<FiniteGroup>, HarnessError> {
    let degree = p * k;
    let gens: Vec<Perm> = (0..k)
        .map(|blk| {
            let cycle: Vec<u16> = (0..p).map(|i| (blk * p + i) as u16).collect();
            Perm::from_cycles(degree, &[cycle])
        })
        .collect::<Result<_, _>>()?;
    Ok(build_group(degree, &gens, full_limits())?)
}

/// Symmetric group on n points.
pub fn symmetric(n: usize) -> Result<Arc<FiniteGroup>, HarnessError> {
    let swap = Perm::from_cycles(n, &[vec![0, 1]])?;
    let cycle = Perm::from_cycles(n, &[(0..n as u16).collect()])?;
    Ok(build_group(n, &[swap, cycle], full_limits())?)
}

/// Alternating group on n points, n at least 3.
pub fn alternating(n: usize) -> Result<Arc<FiniteGroup>, HarnessError> {
    let three = Perm::from_cycles(n, &[vec![0, 1, 2]])?;
    let long = if n % 2 == 1 {
        Perm::from_cycles(n, &[(0..n as u16).collect()])?
    } else {
        Perm::from_cycles(n, &[(1..n as u16).collect()])?
    };
    Ok(build_group(n, &[three, long], full_limits())?)
}

/// Automorphism of a group generated by two commuting elements `a`, `b` of
/// order p, sending `a` to `a^aa b^ab` and `b` to `a^ba b^bb`. Returns the
/// full element-index map.
fn two_gen_automorphism(
    group: &Arc<FiniteGroup>,
    p: usize,
    aa: usize,
    ab: usize,
    ba: usize,
    bb: usize,
) -> Vec<u16> {
    let gens = group.gen_indices();
    assert_eq!(gens.len(), 2, "two generators expected");
    let (ga, gb) = (gens[0], gens[1]);
    let pow = |base: u16, e: usize| -> u16 {
        let mut acc = 0u16;
        for _ in 0..e {
            acc = group.mul(acc, base);
        }
        acc
    };
    let mut map = vec![0u16; group.order()];
    for i in 0..p {
        for j in 0..p {
            let src = group.mul(pow(ga, i), pow(gb, j));
            let ei = (aa * i + ba * j) % p;
            let ej = (ab * i + bb * j) % p;
            let dst = group.mul(pow(ga, ei), pow(gb, ej));
            map[src as usize] = dst;
        }
    }
    map
}

/// `C_p x C_p` semidirect `C_q` where the generator of `C_q` acts by the given
/// matrix entries on exponents.
pub fn two_gen_semidirect(
    p: usize,
    q: usize,
    aa: usize,
    ab: usize,
    ba: usize,
    bb: usize,
) -> Result<Arc<FiniteGroup>, HarnessError> {
    let base = elementary(p, 2)?;
    let top = cyclic(q)?;
    let map = two_gen_automorphism(&base, p, aa, ab, ba, bb);
    let action = Action::from_gen_images(&base, &top, &[map])?;
    Ok(semidirect_product(&base, &top, &action, full_limits())?.group)
}

fn direct(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Result<Arc<FiniteGroup>, HarnessError> {
    Ok(direct_product(a, b, full_limits())?.group)
}

struct Builtin {
    name: String,
    order: usize,
    build: Box<dyn Fn() -> Result<Arc<FiniteGroup>, HarnessError>>,
}

fn builtin_catalog() -> Vec<Builtin> {
    let mut cat: Vec<Builtin> = Vec::new();
    let mut push = |name: String, order: usize, build: Box<dyn Fn() -> Result<Arc<FiniteGroup>, HarnessError>>| {
        cat.push(Builtin { name, order, build });
    };

    for n in 1..=32usize {
        push(format!("C{n}"), n, Box::new(move || cyclic(n)));
    }
    for n in 3..=16usize {
        push(format!("D{}", 2 * n), 2 * n, Box::new(move || dihedral(n)));
    }
    for n in 2..=8usize {
        push(format!("Q{}", 4 * n), 4 * n, Box::new(move || dicyclic(n)));
    }
    for (p, k) in [
        (2usize, 2usize),
        (2, 3),
        (2, 4),
        (2, 5),
        (2, 6),
        (2, 7),
        (3, 2),
        (3, 3),
        (3, 4),
        (5, 2),
        (5, 3),
        (7, 2),
        (11, 2),
    ] {
        let order = p.pow(k as u32);
        push(format!("E{order}"), order, Box::new(move || elementary(p, k)));
    }
    push("S3".into(), 6, Box::new(|| symmetric(3)));
    push("S4".into(), 24, Box::new(|| symmetric(4)));
    push("S5".into(), 120, Box::new(|| symmetric(5)));
    push("A4".into(), 12, Box::new(|| alternating(4)));
    push("A5".into(), 60, Box::new(|| alternating(5)));
    push(
        "A5xC5".into(),
        300,
        Box::new(|| direct(&alternating(5)?, &cyclic(5)?)),
    );
    push(
        "S4xC3".into(),
        72,
        Box::new(|| direct(&symmetric(4)?, &cyclic(3)?)),
    );
    // The C3 generator acts by an order-3 matrix with no eigenvector, so the
    // Sylow 5-subgroup is a minimal normal subgroup.
    push(
        "C5C5_rtimes_C3".into(),
        75,
        Box::new(|| two_gen_semidirect(5, 3, 1, 1, 2, 3)),
    );
    push(
        "C3C3_rtimes_C2".into(),
        18,
        Box::new(|| two_gen_semidirect(3, 2, 2, 0, 0, 2)),
    );
    push(
        "C5C5_rtimes_C2".into(),
        50,
        Box::new(|| two_gen_semidirect(5, 2, 4, 0, 0, 4)),
    );
    push(
        "C7C7_rtimes_C3".into(),
        147,
        Box::new(|| two_gen_semidirect(7, 3, 2, 0, 0, 4)),
    );
    // Order-3 matrix with irreducible characteristic polynomial mod 11.
    push(
        "C11C11_rtimes_C3".into(),
        363,
        Box::new(|| two_gen_semidirect(11, 3, 0, 1, 10, 10)),
    );
    cat
}

/// Build the builtin corpus, keeping groups of order at most `max_order`.
pub fn builtin_corpus(max_order: usize) -> Result<Corpus, HarnessError> {
    let mut corpus = Corpus::default();
    for item in builtin_catalog() {
        if item.order > max_order {
            continue;
        }
        let group = (item.build)()?;
        debug_assert_eq!(group.order(), item.order, "{} order", item.name);
        corpus.groups.push(NamedGroup {
            name: item.name,
            group,
        });
    }
    Ok(corpus)
}

/// Load every `*.group` file in a directory, sorted by file name. Files that
/// fail to parse or exceed `max_order` become skip records, not errors.
pub fn load_corpus_dir(dir: &Path, max_order: usize) -> Result<Corpus, HarnessError> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .map(|e| e.path())
        .filter(|p| {
            p.is_file() && p.extension().and_then(|e| e.to_str()) == Some("group")
        })
        .collect();
    paths.sort();

    let mut corpus = Corpus::default();
    let limits = BuildLimits {
        max_order: max_order.min(MAX_SUPPORTED_ORDER),
    };
    for path in paths {
        let label = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("unnamed")
            .to_string();
        match read_group_file(&path) {
            Ok(file) => match file.build(limits) {
                Ok(group) => corpus.groups.push(NamedGroup {
                    name: file.name,
                    group,
                }),
                Err(e) => corpus.skipped.push(SkippedGroup {
                    name: file.name,
                    reason: e.to_string(),
                }),
            },
            Err(e) => corpus.skipped.push(SkippedGroup {
                name: label,
                reason: e.to_string(),
            }),
        }
    }
    Ok(corpus)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dicyclic_groups_have_one_involution() {
        for n in 2..=8 {
            let g = dicyclic(n).unwrap();
            assert_eq!(g.order(), 4 * n);
            assert!(!g.is_abelian());
            let involutions = (0..g.order() as u16)
                .filter(|&e| g.order_of(e) == 2)
                .count();
            assert_eq!(involutions, 1, "Q{} involutions", 4 * n);
        }
    }

    #[test]
    fn order_75_group_has_minimal_sylow_5() {
        let g = two_gen_semidirect(5, 3, 1, 1, 2, 3).unwrap();
        assert_eq!(g.order(), 75);
        assert!(!g.is_abelian());
        let order_15 = (0..g.order() as u16).filter(|&e| g.order_of(e) == 15).count();
        assert_eq!(order_15, 0, "the action must have no fixed line");
    }

    #[test]
    fn order_363_group_builds() {
        let g = two_gen_semidirect(11, 3, 0, 1, 10, 10).unwrap();
        assert_eq!(g.order(), 363);
        let order_33 = (0..g.order() as u16).filter(|&e| g.order_of(e) == 33).count();
        assert_eq!(order_33, 0);
    }

    #[test]
    fn builtin_corpus_is_deterministic_and_filtered() {
        let small = builtin_corpus(100).unwrap();
        assert!(small.groups.iter().all(|g| g.group.order() <= 100));
        assert!(small.skipped.is_empty());
        let names: Vec<_> = small.groups.iter().map(|g| g.name.clone()).collect();
        let again: Vec<_> = builtin_corpus(100)
            .unwrap()
            .groups
            .iter()
            .map(|g| g.name.clone())
            .collect();
        assert_eq!(names, again);
        assert!(names.contains(&"S4".to_string()));
        assert!(!names.contains(&"S5".to_string()));
    }

    #[test]
    fn full_corpus_count() {
        let all = builtin_corpus(MAX_SUPPORTED_ORDER).unwrap();
        assert_eq!(all.groups.len(), 78);
    }
}
