use crate::error::Result;
use crate::gate::{decode_unchecked, Gate};
use crate::perm::Perm;

/// A gate of `S_A wr S_n` in product action: output coordinate `j` is
/// `maps[j]` applied to input coordinate `α⁻¹(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathWitness {
    /// Wire permutation on `0..n`.
    pub alpha: Perm,
    /// One permutation of the alphabet per output coordinate.
    pub maps: Vec<Perm>,
}

impl WreathWitness {
    /// `π_α • (g_1 ⊕ .. ⊕ g_n)`.
    pub fn to_gate(&self, k: usize) -> Result<Gate> {
        let mut local = Gate::unary(k, self.maps[0].clone())?;
        for m in &self.maps[1..] {
            local = local.parallel(&Gate::unary(k, m.clone())?)?;
        }
        Gate::wire_permutation(&self.alpha, k)?.serial(&local)
    }
}

/// Decomposes `f` as a member of `S_A wr S_n`, or `None` if some output
/// coordinate depends on more than one input coordinate.
pub fn wreath_decompose(f: &Gate) -> Option<WreathWitness> {
    let (k, n) = (f.alphabet(), f.arity());
    let tuples: Vec<Vec<usize>> = (0..f.points())
        .map(|p| decode_unchecked(p, k, n))
        .collect();
    let mut source = vec![usize::MAX; n];
    let mut maps = Vec::with_capacity(n);
    for (j, slot) in source.iter_mut().enumerate() {
        let found = (0..n).find_map(|i| {
            // f_j must be a bijective function of x_i alone
            let mut table = vec![usize::MAX; k];
            for (p, x) in tuples.iter().enumerate() {
                let out = tuples[f.perm().image(p)][j];
                if table[x[i]] == usize::MAX {
                    table[x[i]] = out;
                } else if table[x[i]] != out {
                    return None;
                }
            }
            let images = table.into_iter().map(|v| v as u32).collect();
            Perm::from_images(images).ok().map(|m| (i, m))
        });
        let (i, m) = found?;
        *slot = i;
        maps.push(m);
    }
    // α(source[j]) = j
    let mut alpha = vec![u32::MAX; n];
    for (j, &i) in source.iter().enumerate() {
        alpha[i] = j as u32;
    }
    let alpha = Perm::from_images(alpha).ok()?;
    let witness = WreathWitness { alpha, maps };
    debug_assert_eq!(witness.to_gate(k).ok().as_ref(), Some(f));
    Some(witness)
}

/// Generators of `S_A wr S_n`: a transposition and a `k`-cycle on the first
/// coordinate, plus generators of the wire permutations.
pub fn wreath_group_generators(k: usize, n: usize) -> Result<Vec<Gate>> {
    let mut out = vec![
        Gate::unary(k, Perm::transposition(k, 0, 1))?.pad_to(n)?,
        Gate::unary(k, Perm::full_cycle(k))?.pad_to(n)?,
    ];
    out.extend(crate::closure::wire_generators(k, n)?);
    Ok(out)
}
