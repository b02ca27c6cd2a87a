//! Arity slices of generated gate classes, and borrow/ancilla reduction.
//!
//! The arity-`n` slice of the class generated by `F` is the permutation
//! group on `A^n` generated by the wire permutations of `n` wires together
//! with every `f ⊕ i_{n-m}` for `f ∈ F` of arity `m <= n`. Any `i_a ⊕ g` is a
//! wire conjugate of `g ⊕ i_a`, and padding distributes over `•`, so nothing
//! else is needed. [`brute_force_closure`] applies `⊕` and `•` literally and
//! serves as the oracle for that equality.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::gate::Gate;
use crate::group::{alternating_order, factorial, Bsgs};
use crate::perm::Perm;

/// Rounds after which [`windowed_closure`] gives up.
pub const MAX_ROUNDS: usize = 50;

/// Generators `F` of a gate class; arities may be mixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GateSet {
    k: usize,
    gates: Vec<Gate>,
}

impl GateSet {
    pub fn new(k: usize, gates: Vec<Gate>) -> Result<GateSet> {
        crate::gate::check_alphabet(k)?;
        if let Some(g) = gates.iter().find(|g| g.alphabet() != k) {
            return Err(Error::AlphabetMismatch(k, g.alphabet()));
        }
        Ok(GateSet { k, gates })
    }

    pub fn empty(k: usize) -> Result<GateSet> {
        GateSet::new(k, Vec::new())
    }

    /// Generators of `B_1(A) ∪ .. ∪ B_m(A)` for each listed arity `m`.
    pub fn full_groups(k: usize, arities: &[usize]) -> Result<GateSet> {
        let mut gates = Vec::new();
        for &m in arities {
            gates.extend(Gate::full_group_generators(k, m)?);
        }
        GateSet::new(k, gates)
    }

    pub fn alphabet(&self) -> usize {
        self.k
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn push(&mut self, g: Gate) -> Result<()> {
        if g.alphabet() != self.k {
            return Err(Error::AlphabetMismatch(self.k, g.alphabet()));
        }
        self.gates.push(g);
        Ok(())
    }

    pub fn max_arity(&self) -> usize {
        self.gates.iter().map(Gate::arity).max().unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosureMode {
    Plain,
    Borrow,
    /// Ancilla reduction; borrow reduction is applied as well.
    Ancilla,
}

impl fmt::Display for ClosureMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosureMode::Plain => "plain",
            ClosureMode::Borrow => "borrow",
            ClosureMode::Ancilla => "ancilla",
        })
    }
}

impl FromStr for ClosureMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "plain" => Ok(ClosureMode::Plain),
            "borrow" => Ok(ClosureMode::Borrow),
            "ancilla" => Ok(ClosureMode::Ancilla),
            other => Err(format!("unknown closure mode `{other}`")),
        }
    }
}

/// Generators of the wire permutations on `n` wires: `π_(1 2)` and the
/// `n`-cycle `π_(1 2 .. n)`.
pub fn wire_generators(k: usize, n: usize) -> Result<Vec<Gate>> {
    let mut out = Vec::new();
    if n >= 2 {
        out.push(Gate::wire_swap(k, n, 1, 2)?);
    }
    if n >= 3 {
        out.push(Gate::wire_permutation(&Perm::full_cycle(n), k)?);
    }
    Ok(out)
}

/// Permutations of `A^n` generating the arity-`n` slice of `⟨F⟩`.
pub fn slice_generators(set: &GateSet, n: usize, cfg: &Config) -> Result<Vec<Perm>> {
    if n == 0 {
        return Err(Error::ZeroArity);
    }
    cfg.slice_degree(set.k, n)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let padded = set
        .gates
        .iter()
        .filter(|g| g.arity() <= n)
        .map(|g| g.pad_to(n));
    for g in wire_generators(set.k, n)?.into_iter().map(Ok).chain(padded) {
        let p = g?.into_perm();
        if !p.is_identity() && seen.insert(p.clone()) {
            out.push(p);
        }
    }
    Ok(out)
}

pub fn slice_group(set: &GateSet, n: usize, cfg: &Config) -> Result<Bsgs> {
    let degree = cfg.slice_degree(set.k, n)?;
    Bsgs::build_with(degree, &slice_generators(set, n, cfg)?, &cfg.bsgs_options())
}

pub fn slice_order(set: &GateSet, n: usize, cfg: &Config) -> Result<BigUint> {
    Ok(slice_group(set, n, cfg)?.order())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SliceTarget {
    Sym,
    Alt,
    Order(BigUint),
}

impl SliceTarget {
    pub fn order(&self, degree: usize) -> BigUint {
        match self {
            SliceTarget::Sym => factorial(degree),
            SliceTarget::Alt => alternating_order(degree),
            SliceTarget::Order(o) => o.clone(),
        }
    }
}

/// Exact comparison of the slice order with a target. `Alt` additionally
/// requires the slice to consist of even permutations.
pub fn slice_equals(set: &GateSet, n: usize, target: &SliceTarget, cfg: &Config) -> Result<bool> {
    let degree = cfg.slice_degree(set.k, n)?;
    let gens = slice_generators(set, n, cfg)?;
    if *target == SliceTarget::Alt && !crate::group::in_alternating(&gens) {
        return Ok(false);
    }
    let order = Bsgs::build_with(degree, &gens, &cfg.bsgs_options())?.order();
    Ok(order == target.order(degree))
}

/// `f` when `g = f ⊕ i_1`.
pub fn borrow_reduce(g: &Gate) -> Option<Gate> {
    if g.arity() < 2 {
        return None;
    }
    let k = g.alphabet();
    let rows = g.points() / k;
    let mut images = Vec::with_capacity(rows);
    for row in 0..rows {
        let head = g.perm().image(row * k) / k;
        for last in 0..k {
            if g.perm().image(row * k + last) != head * k + last {
                return None;
            }
        }
        images.push(head as u32);
    }
    Gate::new(k, g.arity() - 1, images).ok()
}

/// `f` with `f(x) = g(x, a)` restricted to the leading wires, when `g`
/// returns `a` on its last wire whenever that wire is fed `a`.
pub fn ancilla_reduce(g: &Gate, a: usize) -> Option<Gate> {
    let k = g.alphabet();
    if g.arity() < 2 || a >= k {
        return None;
    }
    let rows = g.points() / k;
    let mut images = Vec::with_capacity(rows);
    for row in 0..rows {
        let y = g.perm().image(row * k + a);
        if y % k != a {
            return None;
        }
        images.push((y / k) as u32);
    }
    // g maps the a-slice injectively into itself, so this always succeeds
    Gate::new(k, g.arity() - 1, images).ok()
}

/// Every reduction of `g` obtainable after moving one wire to the last
/// position by a wire swap.
pub fn reductions(g: &Gate, mode: ClosureMode) -> Result<Vec<Gate>> {
    let n = g.arity();
    let mut out = Vec::new();
    if mode == ClosureMode::Plain || n < 2 {
        return Ok(out);
    }
    for wire in 1..=n {
        let moved = if wire == n {
            g.clone()
        } else {
            g.conjugate_by(&Gate::wire_swap(g.alphabet(), n, wire, n)?)?
        };
        out.extend(borrow_reduce(&moved));
        if mode == ClosureMode::Ancilla {
            out.extend((0..g.alphabet()).filter_map(|a| ancilla_reduce(&moved, a)));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct SliceReport {
    pub arity: usize,
    pub degree: usize,
    pub order: BigUint,
    /// True only in plain mode; reduction closures are under-approximations.
    pub exact: bool,
    pub group: Bsgs,
}

#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub mode: ClosureMode,
    pub max_arity: usize,
    pub rounds: usize,
    pub slices: Vec<SliceReport>,
    /// Gates found by reduction, in discovery order.
    pub reduced: Vec<Gate>,
    /// Slice orders after each round, for monotonicity checks.
    pub history: Vec<Vec<BigUint>>,
}

/// Slices `1..=max_arity` of the closure of `F` under the given mode.
///
/// Borrow and ancilla modes scan each slice's strong generators and their
/// pairwise products for reducible gates, add the reductions as generators
/// and rebuild until nothing new appears.
pub fn windowed_closure(
    set: &GateSet,
    mode: ClosureMode,
    max_arity: usize,
    cfg: &Config,
) -> Result<ClosureReport> {
    if max_arity == 0 {
        return Err(Error::ZeroArity);
    }
    if set.max_arity() > max_arity {
        return Err(Error::ArityMismatch(set.max_arity(), max_arity));
    }
    cfg.slice_degree(set.k, max_arity)?;

    let mut current = set.clone();
    let mut reduced: Vec<Gate> = Vec::new();
    let mut history = Vec::new();
    for round in 1..=MAX_ROUNDS {
        let groups = (1..=max_arity)
            .map(|n| slice_group(&current, n, cfg))
            .collect::<Result<Vec<_>>>()?;
        history.push(groups.iter().map(Bsgs::order).collect());

        let mut found: Vec<Gate> = Vec::new();
        if mode != ClosureMode::Plain {
            let mut seen: HashSet<Gate> = HashSet::new();
            for n in 2..=max_arity {
                let lower = &groups[n - 2];
                for candidate in scan_candidates(set.k, n, &groups[n - 1])? {
                    for f in reductions(&candidate, mode)? {
                        if !lower.contains(f.perm())? && seen.insert(f.clone()) {
                            found.push(f);
                        }
                    }
                }
            }
        }

        if found.is_empty() {
            let slices = groups
                .into_iter()
                .enumerate()
                .map(|(i, group)| SliceReport {
                    arity: i + 1,
                    degree: group.degree(),
                    order: group.order(),
                    exact: mode == ClosureMode::Plain,
                    group,
                })
                .collect();
            return Ok(ClosureReport {
                mode,
                max_arity,
                rounds: round,
                slices,
                reduced,
                history,
            });
        }
        for f in found {
            current.push(f.clone())?;
            reduced.push(f);
        }
    }
    Err(Error::FixpointDiverged(MAX_ROUNDS))
}

/// Strong generators of a slice and their pairwise products.
fn scan_candidates(k: usize, n: usize, group: &Bsgs) -> Result<Vec<Gate>> {
    let strong = group.strong_generators();
    let mut out = Vec::with_capacity(strong.len() * strong.len());
    for (i, s) in strong.iter().enumerate() {
        out.push(Gate::from_perm(k, n, s.clone())?);
        for (j, t) in strong.iter().enumerate() {
            if i != j {
                out.push(Gate::from_perm(k, n, s.then(t))?);
            }
        }
    }
    Ok(out)
}

/// Literal closure of `F ∪ Π` under `⊕` (up to `max_arity`) and `•`.
///
/// Returns the gates of each arity `1..=max_arity`, sorted by image table.
/// Meant as a test oracle for small state spaces.
pub fn brute_force_closure(
    set: &GateSet,
    max_arity: usize,
    size_cap: usize,
) -> Result<Vec<Vec<Gate>>> {
    if max_arity == 0 {
        return Err(Error::ZeroArity);
    }
    if set.max_arity() > max_arity {
        return Err(Error::ArityMismatch(set.max_arity(), max_arity));
    }
    let k = set.k;
    let mut members: Vec<HashSet<Gate>> = vec![HashSet::new(); max_arity];
    let mut lists: Vec<Vec<Gate>> = vec![Vec::new(); max_arity];
    let mut queue = VecDeque::new();
    let mut total = 0usize;

    let mut insert = |g: Gate,
                      members: &mut Vec<HashSet<Gate>>,
                      lists: &mut Vec<Vec<Gate>>,
                      queue: &mut VecDeque<Gate>|
     -> Result<()> {
        let slot = g.arity() - 1;
        if members[slot].insert(g.clone()) {
            total += 1;
            if total > size_cap {
                return Err(Error::SizeCapExceeded(size_cap));
            }
            lists[slot].push(g.clone());
            queue.push_back(g);
        }
        Ok(())
    };

    for n in 1..=max_arity {
        for alpha in all_permutations(n) {
            insert(Gate::wire_permutation(&alpha, k)?, &mut members, &mut lists, &mut queue)?;
        }
    }
    for g in &set.gates {
        insert(g.clone(), &mut members, &mut lists, &mut queue)?;
    }

    while let Some(e) = queue.pop_front() {
        for slot in 0..max_arity {
            let mut idx = 0;
            while idx < lists[slot].len() {
                let x = lists[slot][idx].clone();
                idx += 1;
                if e.arity() + x.arity() <= max_arity {
                    insert(e.parallel(&x)?, &mut members, &mut lists, &mut queue)?;
                    insert(x.parallel(&e)?, &mut members, &mut lists, &mut queue)?;
                }
                insert(e.serial(&x)?, &mut members, &mut lists, &mut queue)?;
                insert(x.serial(&e)?, &mut members, &mut lists, &mut queue)?;
            }
        }
    }

    for list in lists.iter_mut() {
        list.sort_by(|a, b| a.images().cmp(b.images()));
    }
    Ok(lists)
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn all_permutations(n: usize) -> Vec<Perm> {
    fn go(prefix: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if prefix.len() == used.len() {
            out.push(Perm::from_images_unchecked(prefix.clone()));
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i as u32);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
