//! Which maximal subgroup types can be the single proper slice of a maximal
//! gate class, for a given alphabet size and arity.

use std::fmt;

use serde::Serialize;

/// Orders of the nonabelian finite simple groups up to 10⁴.
pub const SIMPLE_GROUP_ORDERS: [usize; 16] = [
    60, 168, 360, 504, 660, 1092, 2448, 2520, 3420, 4080, 5616, 6048, 6072, 7800, 7920, 9828,
];
const SIMPLE_ORDER_LIMIT: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Certain,
    PossibleOpen,
    Impossible,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Certain => "certain",
            Status::PossibleOpen => "possible-open",
            Status::Impossible => "impossible",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassType {
    Alternating,
    Intransitive,
    Imprimitive,
    Affine,
    Diagonal,
    Wreath,
    AlmostSimple,
}

impl fmt::Display for ClassType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            ClassType::Alternating => "alternating",
            ClassType::Intransitive => "intransitive",
            ClassType::Imprimitive => "imprimitive",
            ClassType::Affine => "affine",
            ClassType::Diagonal => "diagonal",
            ClassType::Wreath => "wreath",
            ClassType::AlmostSimple => "almost-simple",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub class: ClassType,
    /// The slice group, e.g. `AGL_2(3)` or `Alt(A^3)`.
    pub group: String,
    pub status: Status,
    /// Case number (1–8) of the classification this entry comes from.
    pub case: u8,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxClassTable {
    pub alphabet: usize,
    pub arity: usize,
    pub entries: Vec<ClassEntry>,
}

impl MaxClassTable {
    pub fn status_of(&self, class: ClassType) -> Option<Status> {
        self.entries.iter().find(|e| e.class == class).map(|e| e.status)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serialization cannot fail")
    }
}

fn entry(class: ClassType, group: &str, status: Status, case: u8, reason: &str) -> ClassEntry {
    ClassEntry {
        class,
        group: group.to_string(),
        status,
        case,
        reason: reason.to_string(),
    }
}

/// `(p, d)` with `n = p^d` for a prime `p`.
fn prime_power(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut m = n;
    let mut d = 0;
    while m % p == 0 {
        m /= p;
        d += 1;
    }
    (m == 1).then_some((p, d))
}

/// Some `m >= 5` and `l >= 2` with `n = m^l`.
fn proper_power_base(n: usize) -> Option<usize> {
    (5..n).find(|&m| {
        let mut x = m * m;
        while x < n {
            x *= m;
        }
        x == n
    })
}

/// `n = |T|^j` for some tabulated simple order `|T|` and `j >= 1`.
fn power_of_simple_order(n: usize) -> bool {
    SIMPLE_GROUP_ORDERS.iter().any(|&t| {
        let mut x = t;
        while x < n {
            x *= t;
        }
        x == n
    })
}

/// Maximal-class options for alphabet size `k >= 2` and arity `i >= 1`.
pub fn maximal_class_options(k: usize, i: usize) -> MaxClassTable {
    let entries = match i {
        1 => unary_options(k),
        2 => binary_options(k),
        _ if k % 2 == 0 => vec![entry(
            ClassType::Alternating,
            &format!("Alt(A^{i})"),
            Status::Certain,
            8,
            "even alphabet: every proper slice above arity 2 is the alternating group",
        )],
        _ => Vec::new(),
    };
    MaxClassTable {
        alphabet: k,
        arity: i,
        entries,
    }
}

fn unary_options(k: usize) -> Vec<ClassEntry> {
    use ClassType::*;
    use Status::*;
    let composite = (2..k).any(|d| k % d == 0);
    let affine = match prime_power(k) {
        None => (Impossible, "alphabet size is not a prime power"),
        Some(_) if k <= 4 => (Impossible, "the affine group is the whole symmetric group"),
        Some((2, d)) if d >= 3 => (Impossible, "AGL_d(2) lies in the alternating group for d >= 3"),
        Some(_) => (
            PossibleOpen,
            "maximal unless listed among the known exceptions",
        ),
    };
    let diagonal = if power_of_simple_order(k) {
        (PossibleOpen, "alphabet size is a power of a simple group order")
    } else if k > SIMPLE_ORDER_LIMIT {
        (PossibleOpen, "beyond the tabulated simple group orders")
    } else {
        (Impossible, "alphabet size is no power of a simple group order")
    };
    let wreath = match proper_power_base(k) {
        Some(_) => (PossibleOpen, "alphabet size is m^l with m >= 5, l >= 2"),
        None => (Impossible, "alphabet size is not m^l with m >= 5, l >= 2"),
    };
    let almost_simple = if k >= 5 {
        (PossibleOpen, "depends on the primitive groups of this degree")
    } else {
        (Impossible, "no nonabelian simple group acts primitively on fewer than 5 points")
    };
    vec![
        entry(Alternating, "Alt(A)", Certain, 1, "the alternating group is maximal"),
        if k >= 3 {
            entry(Intransitive, "S_a x S_b", Certain, 1, "a + b = |A| with a != b")
        } else {
            entry(Intransitive, "S_a x S_b", Impossible, 1, "no split a + b = 2 with a != b")
        },
        if composite {
            entry(Imprimitive, "S_m wr S_l", Certain, 1, "|A| = m·l with m, l > 1")
        } else {
            entry(Imprimitive, "S_m wr S_l", Impossible, 1, "alphabet size is prime")
        },
        entry(Affine, "AGL_d(p)", affine.0, 1, affine.1),
        entry(Diagonal, "T^l.(Out(T) x S_l)", diagonal.0, 1, diagonal.1),
        entry(Wreath, "S_m wr S_l (product action)", wreath.0, 1, wreath.1),
        entry(AlmostSimple, "T <= G <= Aut(T)", almost_simple.0, 1, almost_simple.1),
    ]
}

fn binary_options(k: usize) -> Vec<ClassEntry> {
    use ClassType::*;
    use Status::*;
    if k == 3 {
        return vec![entry(
            Affine,
            "AGL_2(3)",
            Certain,
            2,
            "S_3 wr S_2 embeds in the affine group over GF(3)",
        )];
    }
    if k % 2 == 1 {
        return vec![entry(
            Wreath,
            "S_A wr S_2",
            Certain,
            3,
            "odd alphabet of size at least 5: the wreath product is maximal",
        )];
    }
    if k % 4 == 2 {
        return vec![entry(
            Wreath,
            "S_A wr S_2",
            Certain,
            4,
            "the coordinate swap is odd, so the wreath product is not in Alt(A^2)",
        )];
    }
    let diagonal = if k > SIMPLE_ORDER_LIMIT {
        (PossibleOpen, "beyond the tabulated simple group orders")
    } else if SIMPLE_GROUP_ORDERS.contains(&k) {
        (PossibleOpen, "alphabet size equals a simple group order; existence open")
    } else {
        (Impossible, "alphabet size is not the order of a nonabelian simple group")
    };
    let almost_simple = if k == 4 {
        (Impossible, "every primitive group of degree 16 lies in Alt(16)")
    } else {
        (PossibleOpen, "existence open")
    };
    vec![
        entry(
            Alternating,
            "Alt(A^2)",
            Certain,
            5,
            "4 divides |A|, so S_A wr S_2 lies in Alt(A^2)",
        ),
        entry(Diagonal, "T^3.(Out(T) x S_3)", diagonal.0, 6, diagonal.1),
        entry(AlmostSimple, "almost simple", almost_simple.0, 7, almost_simple.1),
    ]
}
