//! Explicit words in unary/binary gates and wire permutations that send any
//! three distinct points of `A^3` to `(0,0,0)`, `(0,0,1)`, `(0,0,2)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gate::{encode, Gate};
use crate::perm::Perm;

/// The canonical images, written `111`, `112`, `113` with 1-based symbols.
pub const CANONICAL_TARGETS: [[usize; 3]; 3] = [[0, 0, 0], [0, 0, 1], [0, 0, 2]];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    /// A wire permutation of all three wires.
    Wire,
    /// A binary gate on two adjacent wires.
    Local,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordStep {
    pub kind: StepKind,
    /// 1-based wires the gate acts on, in order.
    pub wires: Vec<usize>,
    pub gate: Gate,
}

impl WordStep {
    fn wire(g: Gate) -> WordStep {
        WordStep {
            kind: StepKind::Wire,
            wires: vec![1, 2, 3],
            gate: g,
        }
    }

    fn local(first_wire: usize, g: Gate) -> WordStep {
        WordStep {
            kind: StepKind::Local,
            wires: vec![first_wire, first_wire + 1],
            gate: g,
        }
    }

    /// The step as a ternary gate.
    pub fn expand(&self) -> Result<Gate> {
        let k = self.gate.alphabet();
        let before = self.wires[0] - 1;
        let mut g = self.gate.clone();
        if before > 0 {
            g = Gate::identity(k, before)?.parallel(&g)?;
        }
        g.pad_to(3)
    }
}

/// Serial composition of the steps, first step applied first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GateWord {
    pub alphabet: usize,
    pub steps: Vec<WordStep>,
}

impl GateWord {
    pub fn compose(&self) -> Result<Gate> {
        self.steps
            .iter()
            .try_fold(Gate::identity(self.alphabet, 3)?, |acc, s| acc.serial(&s.expand()?))
    }

    pub fn apply(&self, x: &[usize]) -> Result<Vec<usize>> {
        self.steps
            .iter()
            .try_fold(x.to_vec(), |acc, s| s.expand()?.apply(&acc))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    fn push(&mut self, step: WordStep, points: &mut [Vec<usize>; 3]) -> Result<()> {
        let g = step.expand()?;
        for p in points.iter_mut() {
            *p = g.apply(p)?;
        }
        self.steps.push(step);
        Ok(())
    }

    /// Merges neighbouring steps on the same wires and drops identities.
    fn simplify(&mut self) -> Result<()> {
        loop {
            let before = self.steps.len();
            self.steps.retain(|s| !s.gate.is_identity());
            let mut merged: Vec<WordStep> = Vec::with_capacity(self.steps.len());
            for s in self.steps.drain(..) {
                match merged.last_mut() {
                    Some(last) if last.kind == s.kind && last.wires == s.wires => {
                        last.gate = last.gate.serial(&s.gate)?;
                    }
                    _ => merged.push(s),
                }
            }
            self.steps = merged;
            if self.steps.len() == before && self.steps.iter().all(|s| !s.gate.is_identity()) {
                return Ok(());
            }
        }
    }
}

/// Bijection of `0..points` extending the given source→target pairs;
/// leftover sources go to leftover targets in increasing order.
fn completing_bijection(points: usize, pairs: &[(usize, usize)]) -> Perm {
    let mut images = vec![u32::MAX; points];
    let mut hit = vec![false; points];
    for &(s, t) in pairs {
        images[s] = t as u32;
        hit[t] = true;
    }
    let mut free = (0..points).filter(|&t| !hit[t]);
    for img in images.iter_mut().filter(|i| **i == u32::MAX) {
        *img = free.next().expect("as many free targets as free sources") as u32;
    }
    Perm::from_images(images).expect("distinct sources and targets")
}

fn pair_gate(k: usize, pairs: &[([usize; 2], [usize; 2])]) -> Result<Gate> {
    let pairs: Vec<(usize, usize)> = pairs
        .iter()
        .map(|(s, t)| Ok((encode(k, s)?, encode(k, t)?)))
        .collect::<Result<_>>()?;
    Gate::from_perm(k, 2, completing_bijection(k * k, &pairs))
}

/// A word sending `a, b, c` (0-based symbols) to the canonical targets.
pub fn three_transitive_witness(k: usize, a: [usize; 3], b: [usize; 3], c: [usize; 3]) -> Result<GateWord> {
    if k < 3 {
        return Err(Error::AlphabetTooSmallFor {
            what: "three-transitivity",
            min: 3,
            k,
        });
    }
    for x in [a, b, c] {
        encode(k, &x)?;
    }
    if a == b || b == c || a == c {
        return Err(Error::NotDistinct);
    }
    let swap23 = Gate::wire_swap(k, 3, 2, 3)?;
    let mut word = GateWord {
        alphabet: k,
        steps: Vec::new(),
    };
    let mut pts = [a.to_vec(), b.to_vec(), c.to_vec()];

    // All third coordinates equal: bring a varying coordinate to wire 3.
    if pts.iter().all(|p| p[2] == pts[0][2]) {
        let from = if pts.iter().any(|p| p[0] != pts[0][0]) { 1 } else { 2 };
        word.push(WordStep::wire(Gate::wire_swap(k, 3, from, 3)?), &mut pts)?;
    }

    // Two third coordinates agree: separate them with a transposition.
    let pair = [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
        .into_iter()
        .find(|&(x, y, _)| pts[x][2] == pts[y][2]);
    if let Some((x, y, z)) = pair {
        let (px, py, pz) = (pts[x].clone(), pts[y].clone(), pts[z].clone());
        let d = (0..k).find(|&d| d != px[2] && d != pz[2]).expect("k >= 3");
        if px[0] != py[0] {
            let delta = pair_gate(k, &[([px[0], px[2]], [px[0], d]), ([px[0], d], [px[0], px[2]])])?;
            word.push(WordStep::wire(swap23.clone()), &mut pts)?;
            word.push(WordStep::local(1, delta), &mut pts)?;
            word.push(WordStep::wire(swap23.clone()), &mut pts)?;
        } else {
            let delta = pair_gate(k, &[([px[1], px[2]], [px[1], d]), ([px[1], d], [px[1], px[2]])])?;
            word.push(WordStep::local(2, delta), &mut pts)?;
        }
    }

    // Distinct third coordinates: clear coordinate 1, then place (2,3).
    let alpha = pair_gate(
        k,
        &[
            ([pts[0][0], pts[0][2]], [0, pts[0][2]]),
            ([pts[1][0], pts[1][2]], [0, pts[1][2]]),
            ([pts[2][0], pts[2][2]], [0, pts[2][2]]),
        ],
    )?;
    word.push(WordStep::wire(swap23.clone()), &mut pts)?;
    word.push(WordStep::local(1, alpha), &mut pts)?;
    word.push(WordStep::wire(swap23), &mut pts)?;
    let beta = pair_gate(
        k,
        &[
            ([pts[0][1], pts[0][2]], [0, 0]),
            ([pts[1][1], pts[1][2]], [0, 1]),
            ([pts[2][1], pts[2][2]], [0, 2]),
        ],
    )?;
    word.push(WordStep::local(2, beta), &mut pts)?;
    debug_assert!(pts.iter().zip(CANONICAL_TARGETS).all(|(p, t)| p[..] == t[..]));

    word.simplify()?;
    Ok(word)
}
