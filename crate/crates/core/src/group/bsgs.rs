//! Base and strong generating sets via Schreier–Sims.
//!
//! Small degrees run the deterministic algorithm. Large degrees first run
//! the randomized variant and then either certify the result by the order
//! bound or finish with the deterministic algorithm, so every returned
//! `Bsgs` is exact.
//!
//! The order bound works because each basic orbit of a partial chain is
//! contained in the corresponding orbit of the true stabilizer chain, so the
//! product of the partial orbit lengths never exceeds `|G|`. When that
//! product reaches `m!`, or `m!/2` with every generator even, it is `|G|`.

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::Perm;

const NONE: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `m!/2` for `m >= 2`, `1` otherwise.
pub fn alternating_order(m: usize) -> BigUint {
    if m < 2 {
        BigUint::one()
    } else {
        factorial(m) / 2u32
    }
}

#[derive(Clone, Debug)]
pub struct BsgsOptions {
    /// Degrees above this use randomized Schreier–Sims plus verification.
    pub randomized_above: usize,
    /// Degrees up to this store explicit coset representatives; larger
    /// degrees use Schreier vectors.
    pub explicit_up_to: usize,
    /// Consecutive sifts to identity that end the randomized phase.
    pub random_streak: usize,
    pub seed: u64,
}

impl Default for BsgsOptions {
    fn default() -> Self {
        BsgsOptions {
            randomized_above: 100,
            explicit_up_to: 64,
            random_streak: 40,
            seed: 0x5EED,
        }
    }
}

/// How the chain was shown to be complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Every Schreier generator sifts through the chain.
    SchreierSims,
    /// The partial order reached the symmetric or alternating bound.
    OrderBound,
}

#[derive(Clone, Debug)]
struct Level {
    point: u32,
    gens: Vec<usize>,
    orbit: Vec<u32>,
    /// Schreier vector: strong generator id of the tree edge into each point.
    label: Vec<u32>,
    /// Inverse coset representatives, indexed by point, when stored explicitly.
    inv_reps: Option<Vec<Option<Perm>>>,
    /// Per orbit position: how many of `gens` have had their Schreier
    /// generator checked.
    checked: Vec<usize>,
}

impl Level {
    fn new(point: usize, degree: usize, explicit: bool) -> Level {
        let mut label = vec![NONE; degree];
        label[point] = ROOT;
        let inv_reps = explicit.then(|| {
            let mut reps = vec![None; degree];
            reps[point] = Some(Perm::identity(degree));
            reps
        });
        Level {
            point: point as u32,
            gens: Vec::new(),
            orbit: vec![point as u32],
            label,
            inv_reps,
            checked: vec![0],
        }
    }

    fn contains(&self, p: usize) -> bool {
        self.label[p] != NONE
    }

    fn record(&mut self, q: usize, from: usize, gid: usize, inv_gens: &[Perm]) {
        self.label[q] = gid as u32;
        self.orbit.push(q as u32);
        self.checked.push(0);
        if let Some(reps) = self.inv_reps.as_mut() {
            // u_q = u_from * g, so u_q⁻¹ = g⁻¹ * u_from⁻¹
            let inv = inv_gens[gid].then(reps[from].as_ref().expect("orbit point has a rep"));
            reps[q] = Some(inv);
        }
    }

    fn add_gen(&mut self, gid: usize, gens: &[Perm], inv_gens: &[Perm]) {
        self.gens.push(gid);
        let existing = self.orbit.len();
        for i in 0..existing {
            let p = self.orbit[i] as usize;
            let q = gens[gid].image(p);
            if !self.contains(q) {
                self.record(q, p, gid, inv_gens);
            }
        }
        let mut i = existing;
        while i < self.orbit.len() {
            let p = self.orbit[i] as usize;
            for j in 0..self.gens.len() {
                let h = self.gens[j];
                let q = gens[h].image(p);
                if !self.contains(q) {
                    self.record(q, p, h, inv_gens);
                }
            }
            i += 1;
        }
    }

    /// `h := h * u_p⁻¹`, which sends `p` back to the base point.
    fn strip(&self, h: &mut Perm, mut p: usize, inv_gens: &[Perm]) {
        if let Some(reps) = &self.inv_reps {
            h.then_assign(reps[p].as_ref().expect("orbit point has a rep"));
            return;
        }
        while p != self.point as usize {
            let gid = self.label[p] as usize;
            h.then_assign(&inv_gens[gid]);
            p = inv_gens[gid].image(p);
        }
    }

    /// The coset representative `u_p` mapping the base point to `p`.
    fn rep(&self, p: usize, degree: usize, inv_gens: &[Perm]) -> Perm {
        let mut inv = Perm::identity(degree);
        self.strip(&mut inv, p, inv_gens);
        inv.inverse()
    }
}

#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    gens: Vec<Perm>,
    inv_gens: Vec<Perm>,
    levels: Vec<Level>,
    explicit: bool,
    certificate: Certificate,
}

impl Bsgs {
    pub fn build(degree: usize, generators: &[Perm]) -> Result<Bsgs> {
        Bsgs::build_with(degree, generators, &BsgsOptions::default())
    }

    pub fn build_with(degree: usize, generators: &[Perm], opts: &BsgsOptions) -> Result<Bsgs> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(g.degree(), degree));
            }
        }
        let mut bsgs = Bsgs {
            degree,
            gens: Vec::new(),
            inv_gens: Vec::new(),
            levels: Vec::new(),
            explicit: degree <= opts.explicit_up_to,
            certificate: Certificate::SchreierSims,
        };
        let mut seen = std::collections::HashSet::new();
        let input: Vec<Perm> = generators
            .iter()
            .filter(|g| !g.is_identity() && seen.insert((*g).clone()))
            .cloned()
            .collect();
        let ceiling = if input.iter().all(|g| g.parity().is_even()) {
            alternating_order(degree)
        } else {
            factorial(degree)
        };

        for g in &input {
            let (r, level) = bsgs.first_moved_level(g);
            debug_assert!(!r.is_identity());
            bsgs.add_strong_gen(r, 0, level);
        }

        if bsgs.order() == ceiling {
            bsgs.certificate = Certificate::OrderBound;
            return Ok(bsgs);
        }
        if degree > opts.randomized_above
            && !input.is_empty()
            && bsgs.randomized(&input, &ceiling, opts)
        {
            bsgs.certificate = Certificate::OrderBound;
            return Ok(bsgs);
        }
        if bsgs.complete(&ceiling) {
            bsgs.certificate = Certificate::OrderBound;
        }
        Ok(bsgs)
    }

    /// The first level whose base point `g` moves (`len` if it fixes them all).
    fn first_moved_level(&self, g: &Perm) -> (Perm, usize) {
        let level = self
            .levels
            .iter()
            .position(|l| g.image(l.point as usize) != l.point as usize)
            .unwrap_or(self.levels.len());
        (g.clone(), level)
    }

    /// Adds `r` (which fixes the first `upto` base points) to levels
    /// `from..=upto`, opening a new level if `upto == len`.
    fn add_strong_gen(&mut self, r: Perm, from: usize, upto: usize) {
        let gid = self.gens.len();
        self.inv_gens.push(r.inverse());
        if upto == self.levels.len() {
            let point = r.smallest_moved().expect("non-identity residue");
            self.levels
                .push(Level::new(point, self.degree, self.explicit));
        }
        self.gens.push(r);
        for l in from..=upto {
            self.levels[l].add_gen(gid, &self.gens, &self.inv_gens);
        }
    }

    /// Sifts `h` through levels `from..`, returning the residue and the level
    /// where it dropped out (`len` if it passed every level).
    fn sift(&self, mut h: Perm, from: usize) -> (Perm, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let p = h.image(level.point as usize);
            if !level.contains(p) {
                return (h, i);
            }
            level.strip(&mut h, p, &self.inv_gens);
        }
        (h, self.levels.len())
    }

    /// Randomized phase; returns true if the order bound was reached.
    fn randomized(&mut self, input: &[Perm], ceiling: &BigUint, opts: &BsgsOptions) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut pool = ProductReplacement::new(input, self.degree, &mut rng);
        let mut streak = 0;
        while streak < opts.random_streak {
            let g = pool.next(&mut rng);
            let (r, level) = self.sift(g, 0);
            if level == self.levels.len() && r.is_identity() {
                streak += 1;
                continue;
            }
            streak = 0;
            self.add_strong_gen(r, 0, level);
            if &self.order() == ceiling {
                return true;
            }
        }
        false
    }

    /// Deterministic Schreier–Sims from the current partial chain; returns
    /// true if it stopped early at the order bound.
    fn complete(&mut self, ceiling: &BigUint) -> bool {
        let mut i = self.levels.len();
        while i > 0 {
            let level = i - 1;
            match self.failing_schreier_generator(level) {
                Some((r, drop)) => {
                    self.add_strong_gen(r, level + 1, drop);
                    if &self.order() == ceiling {
                        return true;
                    }
                    i = drop + 1;
                }
                None => i -= 1,
            }
        }
        false
    }

    fn failing_schreier_generator(&mut self, i: usize) -> Option<(Perm, usize)> {
        let mut pos = 0;
        while pos < self.levels[i].orbit.len() {
            while self.levels[i].checked[pos] < self.levels[i].gens.len() {
                let level = &self.levels[i];
                let s = &self.gens[level.gens[level.checked[pos]]];
                let p = level.orbit[pos] as usize;
                let q = s.image(p);
                let mut h = level.rep(p, self.degree, &self.inv_gens).then(s);
                level.strip(&mut h, q, &self.inv_gens);
                self.levels[i].checked[pos] += 1;
                if h.is_identity() {
                    continue;
                }
                let (r, drop) = self.sift(h, i + 1);
                if drop < self.levels.len() || !r.is_identity() {
                    return Some((r, drop));
                }
            }
            pos += 1;
        }
        None
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point as usize).collect()
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.gens
    }

    /// Strong generators assigned to level `i` (each fixes base points `0..i`).
    pub fn level_generators(&self, i: usize) -> impl Iterator<Item = &Perm> {
        self.levels[i].gens.iter().map(|&g| &self.gens[g])
    }

    pub fn basic_orbit(&self, i: usize) -> Vec<usize> {
        self.levels[i].orbit.iter().map(|&p| p as usize).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn certificate(&self) -> Certificate {
        self.certificate
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * l.orbit.len())
    }

    pub fn contains(&self, p: &Perm) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(p.degree(), self.degree));
        }
        let (r, level) = self.sift(p.clone(), 0);
        Ok(level == self.levels.len() && r.is_identity())
    }

    pub fn is_symmetric(&self) -> bool {
        self.order() == factorial(self.degree)
    }

    pub fn is_alternating(&self) -> bool {
        self.degree >= 2 && self.order() == alternating_order(self.degree)
    }
}

/// Product replacement random elements.
struct ProductReplacement {
    slots: Vec<Perm>,
    acc: Perm,
}

impl ProductReplacement {
    fn new(gens: &[Perm], degree: usize, rng: &mut impl Rng) -> ProductReplacement {
        let mut slots: Vec<Perm> = gens.to_vec();
        while slots.len() < 10 {
            slots.push(gens[slots.len() % gens.len()].clone());
        }
        let mut pr = ProductReplacement {
            slots,
            acc: Perm::identity(degree),
        };
        for _ in 0..50 {
            pr.next(rng);
        }
        pr
    }

    fn next(&mut self, rng: &mut impl Rng) -> Perm {
        let n = self.slots.len();
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let other = if rng.gen_bool(0.5) {
            self.slots[j].clone()
        } else {
            self.slots[j].inverse()
        };
        if rng.gen_bool(0.5) {
            self.slots[i] = self.slots[i].then(&other);
        } else {
            self.slots[i] = other.then(&self.slots[i]);
        }
        self.acc = self.acc.then(&self.slots[i]);
        self.acc.clone()
    }
}
