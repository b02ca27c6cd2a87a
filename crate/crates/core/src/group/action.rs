//! Orbits, block systems and parity containment for a group given by
//! generators.

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Sorted orbit of `point` under the group generated by `gens`.
pub fn orbit(degree: usize, gens: &[Perm], point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut queue = vec![point];
    let mut i = 0;
    while i < queue.len() {
        let p = queue[i];
        for g in gens {
            let q = g.image(p);
            if !seen[q] {
                seen[q] = true;
                queue.push(q);
            }
        }
        i += 1;
    }
    queue.sort_unstable();
    queue
}

pub fn is_transitive(degree: usize, gens: &[Perm]) -> bool {
    degree == 0 || orbit(degree, gens, 0).len() == degree
}

/// All parity checks pass on the generators.
pub fn in_alternating(gens: &[Perm]) -> bool {
    gens.iter().all(|g| g.parity().is_even())
}

/// A partition of the points into blocks of equal size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    /// Block id of each point; ids are numbered by first appearance.
    block_of: Vec<usize>,
    block_count: usize,
}

impl BlockSystem {
    pub fn degree(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self, point: usize) -> usize {
        self.block_of[point]
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn block_size(&self) -> usize {
        self.degree() / self.block_count
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count];
        for (p, &b) in self.block_of.iter().enumerate() {
            out[b].push(p);
        }
        out
    }

    /// Every generator maps each block onto a block.
    pub fn is_invariant(&self, gens: &[Perm]) -> bool {
        gens.iter().all(|g| {
            let mut target = vec![usize::MAX; self.block_count];
            self.block_of.iter().enumerate().all(|(p, &b)| {
                let image_block = self.block_of[g.image(p)];
                if target[b] == usize::MAX {
                    target[b] = image_block;
                }
                target[b] == image_block
            })
        })
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Finest block system in which `p1` and `p2` share a block, or `None` when
/// that forces a single block.
pub fn minimal_block_system(
    degree: usize,
    gens: &[Perm],
    p1: usize,
    p2: usize,
) -> Result<Option<BlockSystem>> {
    for p in [p1, p2] {
        if p >= degree {
            return Err(Error::IndexOutOfRange {
                index: p,
                points: degree,
            });
        }
    }
    if !is_transitive(degree, gens) {
        return Err(Error::Intransitive);
    }
    Ok(merge_closure(degree, gens, p1, p2))
}

fn merge_closure(degree: usize, gens: &[Perm], p1: usize, p2: usize) -> Option<BlockSystem> {
    let mut uf = UnionFind::new(degree);
    let mut pending = Vec::new();
    if uf.union(p1, p2) {
        pending.push((p1, p2));
    }
    let mut classes = degree - pending.len();
    while let Some((a, b)) = pending.pop() {
        for g in gens {
            let (x, y) = (uf.find(g.image(a)), uf.find(g.image(b)));
            if uf.union(x, y) {
                classes -= 1;
                if classes == 1 {
                    return None;
                }
                pending.push((x, y));
            }
        }
    }
    if classes == 1 {
        return None;
    }
    let mut id_of_root = vec![usize::MAX; degree];
    let mut block_of = vec![0; degree];
    let mut block_count = 0;
    for (p, slot) in block_of.iter_mut().enumerate() {
        let r = uf.find(p);
        if id_of_root[r] == usize::MAX {
            id_of_root[r] = block_count;
            block_count += 1;
        }
        *slot = id_of_root[r];
    }
    Some(BlockSystem {
        block_of,
        block_count,
    })
}

/// Transitive with no nontrivial block system.
pub fn is_primitive(degree: usize, gens: &[Perm]) -> bool {
    if !is_transitive(degree, gens) {
        return false;
    }
    (1..degree).all(|p| merge_closure(degree, gens, 0, p).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn orbit_examples() {
        let g = [cyc(4, &[&[0, 1], &[2, 3]])];
        assert_eq!(orbit(4, &g, 0), vec![0, 1]);
        assert!(!is_transitive(4, &g));
        assert!(!is_transitive(3, &[Perm::identity(3)]));
        assert!(is_transitive(1, &[]));
    }

    #[test]
    fn klein_blocks() {
        let klein = [cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])];
        let blocks = minimal_block_system(4, &klein, 0, 1).unwrap().unwrap();
        assert_eq!(blocks.blocks(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(blocks.block_size(), 2);
        assert!(blocks.is_invariant(&klein));
        assert!(!is_primitive(4, &klein));
    }

    #[test]
    fn symmetric_is_primitive() {
        let s4 = [cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])];
        assert!(is_primitive(4, &s4));
        assert_eq!(minimal_block_system(4, &s4, 0, 2).unwrap(), None);
    }

    #[test]
    fn intransitive_flagged() {
        let g = [cyc(4, &[&[0, 1]])];
        assert_eq!(
            minimal_block_system(4, &g, 0, 1).unwrap_err(),
            Error::Intransitive
        );
        assert!(!is_primitive(4, &g));
    }

    #[test]
    fn cyclic_of_composite_order_is_imprimitive() {
        let c6 = [Perm::full_cycle(6)];
        let b = minimal_block_system(6, &c6, 0, 3).unwrap().unwrap();
        assert_eq!(b.blocks(), vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
        let b = minimal_block_system(6, &c6, 0, 2).unwrap().unwrap();
        assert_eq!(b.block_count(), 2);
        assert!(is_primitive(5, &[Perm::full_cycle(5)]));
    }

    #[test]
    fn parity_containment() {
        assert!(in_alternating(&[Perm::identity(4)]));
        assert!(in_alternating(&[]));
        assert!(!in_alternating(&[cyc(4, &[&[1, 2]])]));
    }
}
