//! Structure tests against the maximal-subgroup types, and the table of
//! possible maximal gate classes.

mod affine;
mod maxclass;
mod witness;
mod wreath;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

pub use affine::{affine_group_generators, affine_group_order, affine_test, AffineWitness};
pub use maxclass::{
    maximal_class_options, ClassEntry, ClassType, MaxClassTable, Status, SIMPLE_GROUP_ORDERS,
};
pub use witness::{three_transitive_witness, GateWord, StepKind, WordStep, CANONICAL_TARGETS};
pub use wreath::{wreath_decompose, wreath_group_generators, WreathWitness};

use crate::closure::{wire_generators, GateSet};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::FieldTable;
use crate::gate::Gate;
use crate::group::{self, Bsgs};
use crate::perm::Perm;

pub(crate) fn decimal<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_str_radix(10))
}

/// Findings about the group generated by gates of a single arity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub alphabet: usize,
    pub arity: usize,
    pub degree: usize,
    pub transitive: bool,
    pub primitive: bool,
    pub in_alternating: bool,
    /// Every generator lies in `S_A wr S_n`.
    pub wreath_member: bool,
    /// The field order when every generator is affine over it.
    pub affine_member: Option<usize>,
    #[serde(serialize_with = "decimal")]
    pub order: BigUint,
}

impl ClassReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Runs every structure test on the group generated by `gates`.
pub fn classify_slice(gates: &[Gate], cfg: &Config) -> Result<ClassReport> {
    let first = gates.first().ok_or(Error::ZeroArity)?;
    let (k, n) = (first.alphabet(), first.arity());
    for g in gates {
        if g.alphabet() != k {
            return Err(Error::AlphabetMismatch(k, g.alphabet()));
        }
        if g.arity() != n {
            return Err(Error::ArityMismatch(n, g.arity()));
        }
    }
    let degree = cfg.slice_degree(k, n)?;
    let perms: Vec<Perm> = gates.iter().map(|g| g.perm().clone()).collect();
    let order = Bsgs::build_with(degree, &perms, &cfg.bsgs_options())?.order();
    let affine_member = match FieldTable::get(k) {
        Ok(field) => {
            let mut all = true;
            for g in gates {
                if affine_test(g, field)?.is_none() {
                    all = false;
                    break;
                }
            }
            all.then_some(k)
        }
        Err(_) => None,
    };
    Ok(ClassReport {
        alphabet: k,
        arity: n,
        degree,
        transitive: group::is_transitive(degree, &perms),
        primitive: group::is_primitive(degree, &perms),
        in_alternating: group::in_alternating(&perms),
        wreath_member: gates.iter().all(|g| wreath_decompose(g).is_some()),
        affine_member,
        order,
    })
}

/// [`classify_slice`] on the arity-`n` slice of the class generated by `set`:
/// the wire permutations plus every gate of arity at most `n`, padded.
pub fn classify_arity(set: &GateSet, n: usize, cfg: &Config) -> Result<ClassReport> {
    if n == 0 {
        return Err(Error::ZeroArity);
    }
    let k = set.alphabet();
    cfg.slice_degree(k, n)?;
    let mut gates = vec![Gate::identity(k, n)?];
    gates.extend(wire_generators(k, n)?);
    for g in set.gates().iter().filter(|g| g.arity() <= n) {
        gates.push(g.pad_to(n)?);
    }
    classify_slice(&gates, cfg)
}
