//! Reversible gates: bijections of `A^n` stored as dense image tables.
//!
//! Tuples `(x_1, .., x_n)` are encoded big-endian, so coordinate 1 is the most
//! significant digit. Wire numbers in the public helpers are 1-based; symbols
//! and point indices are 0-based.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Parity, Perm};

/// Number of points `k^n`, failing on overflow.
pub fn point_count(k: usize, n: usize) -> Result<usize> {
    check_alphabet(k)?;
    k.checked_pow(n as u32).ok_or(Error::CapExceeded {
        degree: u128::MAX,
        cap: usize::MAX,
    })
}

pub(crate) fn check_alphabet(k: usize) -> Result<()> {
    if k < 2 {
        Err(Error::AlphabetTooSmall(k))
    } else {
        Ok(())
    }
}

/// Big-endian mixed radix encoding of a tuple over `0..k`.
pub fn encode(k: usize, tuple: &[usize]) -> Result<usize> {
    check_alphabet(k)?;
    tuple.iter().try_fold(0usize, |acc, &x| {
        if x >= k {
            return Err(Error::SymbolOutOfRange { symbol: x, k });
        }
        Ok(acc * k + x)
    })
}

pub fn decode(index: usize, k: usize, n: usize) -> Result<Vec<usize>> {
    let points = point_count(k, n)?;
    if index >= points {
        return Err(Error::IndexOutOfRange { index, points });
    }
    Ok(decode_unchecked(index, k, n))
}

pub(crate) fn decode_unchecked(mut index: usize, k: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = index % k;
        index /= k;
    }
    out
}

/// A reversible `n`-ary gate over an alphabet of size `k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "GateFile", into = "GateFile")]
pub struct Gate {
    k: usize,
    n: usize,
    perm: Perm,
}

/// On-disk form: `{"k": .., "n": .., "perm": [..]}`.
#[derive(Serialize, Deserialize)]
struct GateFile {
    k: usize,
    n: usize,
    perm: Vec<u32>,
}

impl TryFrom<GateFile> for Gate {
    type Error = Error;

    fn try_from(file: GateFile) -> Result<Gate> {
        Gate::new(file.k, file.n, file.perm)
    }
}

impl From<Gate> for GateFile {
    fn from(g: Gate) -> GateFile {
        GateFile {
            k: g.k,
            n: g.n,
            perm: g.perm.into_images(),
        }
    }
}

impl Gate {
    pub fn new(k: usize, n: usize, images: Vec<u32>) -> Result<Gate> {
        Gate::from_perm(k, n, Perm::from_images(images)?)
    }

    pub fn from_perm(k: usize, n: usize, perm: Perm) -> Result<Gate> {
        if n == 0 {
            return Err(Error::ZeroArity);
        }
        let points = point_count(k, n)?;
        if perm.degree() != points {
            return Err(Error::TableLength {
                expected: points,
                found: perm.degree(),
            });
        }
        Ok(Gate { k, n, perm })
    }

    /// Builds a gate from a tuple map; fails unless the map is a bijection.
    pub fn from_fn(k: usize, n: usize, f: impl Fn(&[usize]) -> Vec<usize>) -> Result<Gate> {
        if n == 0 {
            return Err(Error::ZeroArity);
        }
        let points = point_count(k, n)?;
        let mut images = Vec::with_capacity(points);
        for p in 0..points {
            let y = f(&decode_unchecked(p, k, n));
            if y.len() != n {
                return Err(Error::TupleLength {
                    expected: n,
                    found: y.len(),
                });
            }
            images.push(encode(k, &y)? as u32);
        }
        Gate::new(k, n, images)
    }

    pub fn identity(k: usize, n: usize) -> Result<Gate> {
        if n == 0 {
            return Err(Error::ZeroArity);
        }
        Ok(Gate {
            k,
            n,
            perm: Perm::identity(point_count(k, n)?),
        })
    }

    /// Arity-1 gate of a permutation of the alphabet.
    pub fn unary(k: usize, p: Perm) -> Result<Gate> {
        Gate::from_perm(k, 1, p)
    }

    /// `π_α`: output coordinate `j` is input coordinate `α⁻¹(j)`.
    ///
    /// `alpha` acts on wires `0..n` (wire `j+1` in 1-based numbering).
    pub fn wire_permutation(alpha: &Perm, k: usize) -> Result<Gate> {
        let n = alpha.degree();
        Gate::from_fn(k, n, |x| {
            let mut y = vec![0; n];
            for (i, &xi) in x.iter().enumerate() {
                y[alpha.image(i)] = xi;
            }
            y
        })
    }

    /// Wire transposition `π_(i j)` on `n` wires; `i`, `j` are 1-based.
    pub fn wire_swap(k: usize, n: usize, i: usize, j: usize) -> Result<Gate> {
        for w in [i, j] {
            if w == 0 || w > n {
                return Err(Error::IndexOutOfRange {
                    index: w,
                    points: n,
                });
            }
        }
        Gate::wire_permutation(&Perm::transposition(n, i - 1, j - 1), k)
    }

    /// Applies `p` to the last coordinate exactly when the leading
    /// coordinates equal `controls`.
    pub fn controlled(k: usize, controls: &[usize], p: &Perm) -> Result<Gate> {
        check_alphabet(k)?;
        if p.degree() != k {
            return Err(Error::DegreeMismatch(p.degree(), k));
        }
        let key = encode(k, controls)?;
        let n = controls.len() + 1;
        let points = point_count(k, n)?;
        let images = (0..points)
            .map(|idx| {
                let (ctrl, target) = (idx / k, idx % k);
                if ctrl == key {
                    (ctrl * k + p.image(target)) as u32
                } else {
                    idx as u32
                }
            })
            .collect();
        Ok(Gate {
            k,
            n,
            perm: Perm::from_images_unchecked(images),
        })
    }

    /// Generators of the full gate group `B_n(A)`: a transposition and a
    /// cycle through all `k^n` points.
    pub fn full_group_generators(k: usize, n: usize) -> Result<Vec<Gate>> {
        let points = point_count(k, n)?;
        Ok(vec![
            Gate::from_perm(k, n, Perm::transposition(points, 0, 1))?,
            Gate::from_perm(k, n, Perm::full_cycle(points))?,
        ])
    }

    #[inline]
    pub fn alphabet(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn points(&self) -> usize {
        self.perm.degree()
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn into_perm(self) -> Perm {
        self.perm
    }

    pub fn images(&self) -> &[u32] {
        self.perm.images()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    /// `f ⊕ g`: `f` on the leading wires, `g` on the trailing wires.
    pub fn parallel(&self, other: &Gate) -> Result<Gate> {
        if self.k != other.k {
            return Err(Error::AlphabetMismatch(self.k, other.k));
        }
        let n = self.n + other.n;
        point_count(self.k, n)?;
        let low = other.points();
        let mut images = Vec::with_capacity(self.points() * low);
        for &hi in self.images() {
            let base = hi as usize * low;
            images.extend(other.images().iter().map(|&lo| (base + lo as usize) as u32));
        }
        Ok(Gate {
            k: self.k,
            n,
            perm: Perm::from_images_unchecked(images),
        })
    }

    /// `f ⊕ i_{m-n}`; returns `self` unchanged when `m <= n`.
    pub fn pad_to(&self, m: usize) -> Result<Gate> {
        if m <= self.n {
            return Ok(self.clone());
        }
        self.parallel(&Gate::identity(self.k, m - self.n)?)
    }

    /// `f • g` (right action): apply `f`, then `g`, after padding the smaller
    /// arity with identity wires.
    pub fn serial(&self, other: &Gate) -> Result<Gate> {
        if self.k != other.k {
            return Err(Error::AlphabetMismatch(self.k, other.k));
        }
        let n = self.n.max(other.n);
        let f = self.pad_to(n)?;
        let g = other.pad_to(n)?;
        Ok(Gate {
            k: self.k,
            n,
            perm: f.perm.then(&g.perm),
        })
    }

    pub fn inverse(&self) -> Gate {
        Gate {
            k: self.k,
            n: self.n,
            perm: self.perm.inverse(),
        }
    }

    /// `w⁻¹ • self • w` for a gate `w` of the same arity.
    pub fn conjugate_by(&self, w: &Gate) -> Result<Gate> {
        w.inverse().serial(self)?.serial(w)
    }

    pub fn sign(&self) -> Parity {
        self.perm.parity()
    }

    pub fn apply(&self, x: &[usize]) -> Result<Vec<usize>> {
        if x.len() != self.n {
            return Err(Error::TupleLength {
                expected: self.n,
                found: x.len(),
            });
        }
        let p = encode(self.k, x)?;
        Ok(decode_unchecked(self.perm.image(p), self.k, self.n))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("gate serialization cannot fail")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Gate> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn not() -> Gate {
        Gate::new(2, 1, vec![1, 0]).unwrap()
    }

    fn cnot() -> Gate {
        Gate::new(2, 2, vec![0, 1, 3, 2]).unwrap()
    }

    #[test]
    fn encode_decode_examples() {
        assert_eq!(encode(2, &[1, 0]).unwrap(), 2);
        assert_eq!(encode(3, &[0, 0, 0]).unwrap(), 0);
        assert_eq!(decode(26, 3, 3).unwrap(), vec![2, 2, 2]);
        assert!(matches!(
            encode(3, &[0, 3]),
            Err(Error::SymbolOutOfRange { symbol: 3, k: 3 })
        ));
        assert!(matches!(
            decode(27, 3, 3),
            Err(Error::IndexOutOfRange { index: 27, .. })
        ));
        assert!(matches!(encode(1, &[0]), Err(Error::AlphabetTooSmall(1))));
    }

    #[test]
    fn encode_decode_exhaustive() {
        for k in 2..=4 {
            for n in 1..=4 {
                for p in 0..point_count(k, n).unwrap() {
                    assert_eq!(encode(k, &decode(p, k, n).unwrap()).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn identity_examples() {
        assert_eq!(Gate::identity(2, 1).unwrap().images(), &[0, 1]);
        assert_eq!(Gate::identity(2, 2).unwrap().images(), &[0, 1, 2, 3]);
        let i3 = Gate::identity(3, 3).unwrap();
        for p in 0..27 {
            let x = decode(p, 3, 3).unwrap();
            assert_eq!(i3.apply(&x).unwrap(), x);
        }
        assert_eq!(Gate::identity(2, 0), Err(Error::ZeroArity));
    }

    #[test]
    fn wire_permutation_examples() {
        let swap = Gate::wire_permutation(&Perm::transposition(2, 0, 1), 2).unwrap();
        assert_eq!(swap.images(), &[0, 2, 1, 3]);
        let id = Gate::wire_permutation(&Perm::identity(2), 2).unwrap();
        assert_eq!(id, Gate::identity(2, 2).unwrap());
        let swap3 = Gate::wire_swap(3, 2, 1, 2).unwrap();
        assert_eq!(swap3.perm().image(1), 3);
    }

    #[test]
    fn wire_permutation_moves_coordinates() {
        // α = (1 2 3): coordinate 1 lands on wire 2.
        let alpha = Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let g = Gate::wire_permutation(&alpha, 3).unwrap();
        assert_eq!(g.apply(&[0, 1, 2]).unwrap(), vec![2, 0, 1]);
    }

    #[test]
    fn parallel_examples() {
        assert_eq!(not().parallel(&not()).unwrap().images(), &[3, 2, 1, 0]);
        let i1 = Gate::identity(2, 1).unwrap();
        assert_eq!(not().parallel(&i1).unwrap().images(), &[2, 3, 0, 1]);
        assert_eq!(i1.parallel(&i1).unwrap(), Gate::identity(2, 2).unwrap());
        let t = Gate::identity(3, 1).unwrap();
        assert_eq!(not().parallel(&t), Err(Error::AlphabetMismatch(2, 3)));
    }

    #[test]
    fn serial_examples() {
        assert_eq!(not().serial(&cnot()).unwrap().images(), &[3, 2, 0, 1]);
        let f = not();
        let i3 = Gate::identity(2, 3).unwrap();
        assert_eq!(f.serial(&i3).unwrap(), f.pad_to(3).unwrap());
        assert!(cnot().serial(&cnot().inverse()).unwrap().is_identity());
        assert_eq!(f.serial(&i3).unwrap().arity(), 3);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(not().inverse(), not());
        let swap = Gate::new(2, 2, vec![0, 2, 1, 3]).unwrap();
        assert_eq!(swap.inverse(), swap);
        let c = Gate::new(3, 1, vec![1, 2, 0]).unwrap();
        assert_eq!(c.inverse().images(), &[2, 0, 1]);
    }

    #[test]
    fn sign_examples() {
        let swap2 = Gate::wire_swap(2, 2, 1, 2).unwrap();
        assert_eq!(swap2.sign(), Parity::Odd);
        let swap4 = Gate::wire_swap(4, 2, 1, 2).unwrap();
        assert_eq!(swap4.sign(), Parity::Even);
        let padded = not().pad_to(2).unwrap();
        assert_eq!(padded.images(), &[2, 3, 0, 1]);
        assert_eq!(padded.sign(), Parity::Even);
    }

    #[test]
    fn controlled_examples() {
        let toffoli = Gate::controlled(2, &[1, 1], &Perm::transposition(2, 0, 1)).unwrap();
        assert_eq!(toffoli.images(), &[0, 1, 2, 3, 4, 5, 7, 6]);
        let c = Gate::controlled(2, &[1], &Perm::transposition(2, 0, 1)).unwrap();
        assert_eq!(c, cnot());
        let p = Perm::full_cycle(3);
        let bare = Gate::controlled(3, &[], &p).unwrap();
        assert_eq!(bare, Gate::unary(3, p).unwrap());
        assert!(matches!(
            Gate::controlled(2, &[2], &Perm::identity(2)),
            Err(Error::SymbolOutOfRange { .. })
        ));
    }

    #[test]
    fn apply_examples() {
        let toffoli = Gate::controlled(2, &[1, 1], &Perm::transposition(2, 0, 1)).unwrap();
        assert_eq!(toffoli.apply(&[1, 1, 0]).unwrap(), vec![1, 1, 1]);
        let nn = not().parallel(&not()).unwrap();
        assert_eq!(nn.apply(&[0, 1]).unwrap(), vec![1, 0]);
        assert!(matches!(
            nn.apply(&[0]),
            Err(Error::TupleLength { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn wire_permutations_form_a_homomorphism() {
        fn all_perms(n: usize) -> Vec<Perm> {
            let mut out = vec![];
            let mut idx: Vec<u32> = (0..n as u32).collect();
            permute(&mut idx, 0, &mut out);
            out
        }
        fn permute(v: &mut Vec<u32>, i: usize, out: &mut Vec<Perm>) {
            if i == v.len() {
                out.push(Perm::from_images(v.clone()).unwrap());
                return;
            }
            for j in i..v.len() {
                v.swap(i, j);
                permute(v, i + 1, out);
                v.swap(i, j);
            }
        }
        for n in 1..=3 {
            let perms = all_perms(n);
            for k in 2..=3 {
                for a in &perms {
                    for b in &perms {
                        let lhs = Gate::wire_permutation(a, k)
                            .unwrap()
                            .serial(&Gate::wire_permutation(b, k).unwrap())
                            .unwrap();
                        let rhs = Gate::wire_permutation(&a.then(b), k).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn json_format() {
        let g = cnot();
        assert_eq!(g.to_json(), r#"{"k":2,"n":2,"perm":[0,1,3,2]}"#);
        assert_eq!(Gate::from_json(&g.to_json()).unwrap(), g);
        assert!(Gate::from_json(r#"{"k":2,"n":2,"perm":[0,1,2]}"#).is_err());
        assert!(Gate::from_json(r#"{"k":2,"n":1,"perm":[0,0]}"#).is_err());
        // 64 points could be 2^6, 4^3 or 8^2; the header decides.
        let g = Gate::from_json(&format!(
            r#"{{"k":4,"n":3,"perm":{:?}}}"#,
            (0..64).collect::<Vec<u32>>()
        ))
        .unwrap();
        assert_eq!((g.alphabet(), g.arity()), (4, 3));
    }
}
