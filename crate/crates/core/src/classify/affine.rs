use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldTable;
use crate::gate::{decode_unchecked, encode, Gate};
use crate::perm::Perm;

/// `x ↦ Mx + t` over GF(q), with `x` the column of coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineWitness {
    pub matrix: Vec<Vec<usize>>,
    pub translation: Vec<usize>,
}

impl AffineWitness {
    pub fn eval(&self, field: &FieldTable, x: &[usize]) -> Vec<usize> {
        self.matrix
            .iter()
            .zip(&self.translation)
            .map(|(row, &t)| {
                row.iter()
                    .zip(x)
                    .fold(t, |acc, (&m, &xi)| field.add(acc, field.mul(m, xi)))
            })
            .collect()
    }
}

/// Tests whether `f` is an affine map of `GF(q)^n`.
///
/// Subtracts `f(0)` and checks additivity over every pair of points; over
/// non-prime fields additivity only gives linearity over the prime field, so
/// scalar homogeneity is checked as well. The witness is read off the images
/// of the unit vectors and checked against the whole table.
pub fn affine_test(f: &Gate, field: &FieldTable) -> Result<Option<AffineWitness>> {
    let (k, n) = (f.alphabet(), f.arity());
    if k != field.order() {
        return Err(Error::AlphabetMismatch(k, field.order()));
    }
    let tuples: Vec<Vec<usize>> = (0..f.points()).map(|p| decode_unchecked(p, k, n)).collect();
    let translation = tuples[f.perm().image(0)].clone();
    let linear: Vec<Vec<usize>> = (0..f.points())
        .map(|p| {
            tuples[f.perm().image(p)]
                .iter()
                .zip(&translation)
                .map(|(&y, &t)| field.sub(y, t))
                .collect()
        })
        .collect();
    let index = |v: &[usize]| encode(k, v).expect("field elements are symbols");
    let combine = |a: &[usize], b: &[usize]| -> Vec<usize> {
        a.iter().zip(b).map(|(&x, &y)| field.add(x, y)).collect()
    };

    for (p, x) in tuples.iter().enumerate() {
        for (r, y) in tuples.iter().enumerate().skip(p) {
            let sum = index(&combine(x, y));
            if linear[sum] != combine(&linear[p], &linear[r]) {
                return Ok(None);
            }
        }
    }
    if !field.is_prime_field() {
        for c in 2..k {
            for (p, x) in tuples.iter().enumerate() {
                let scaled: Vec<usize> = x.iter().map(|&xi| field.mul(c, xi)).collect();
                let expect: Vec<usize> = linear[p].iter().map(|&yi| field.mul(c, yi)).collect();
                if linear[index(&scaled)] != expect {
                    return Ok(None);
                }
            }
        }
    }

    let mut matrix = vec![vec![0; n]; n];
    for j in 0..n {
        let mut unit = vec![0; n];
        unit[j] = 1;
        for (i, row) in matrix.iter_mut().enumerate() {
            row[j] = linear[index(&unit)][i];
        }
    }
    let witness = AffineWitness {
        matrix,
        translation,
    };
    let reproduces = tuples
        .iter()
        .enumerate()
        .all(|(p, x)| witness.eval(field, x) == tuples[f.perm().image(p)]);
    assert!(reproduces, "additive map must be reproduced by its matrix");
    Ok(Some(witness))
}

/// Generators of `AGL_n(q)` as `n`-ary gates: the transvection
/// `x_1 += x_2`, the wire permutations, the translation `x_1 += 1` and, for
/// `q > 2`, the scaling of `x_1` by a primitive element.
pub fn affine_group_generators(q: usize, n: usize) -> Result<Vec<Gate>> {
    let field = FieldTable::get(q)?;
    let mut out = Vec::new();
    if n >= 2 {
        out.push(Gate::from_fn(q, 2, |x| vec![field.add(x[0], x[1]), x[1]])?.pad_to(n)?);
    }
    out.extend(crate::closure::wire_generators(q, n)?);
    let shift = (0..q).map(|a| field.add(a, 1) as u32).collect();
    out.push(Gate::unary(q, Perm::from_images(shift)?)?.pad_to(n)?);
    if q > 2 {
        let w = field.primitive_element();
        let scale = (0..q).map(|a| field.mul(w, a) as u32).collect();
        out.push(Gate::unary(q, Perm::from_images(scale)?)?.pad_to(n)?);
    }
    Ok(out)
}

/// `q^n · ∏_{i<n} (q^n - q^i)`.
pub fn affine_group_order(q: usize, n: usize) -> num_bigint::BigUint {
    use num_bigint::BigUint;
    let qn = BigUint::from(q).pow(n as u32);
    (0..n).fold(qn.clone(), |acc, i| {
        acc * (&qn - BigUint::from(q).pow(i as u32))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cnot_over_gf2() {
        let gf2 = FieldTable::get(2).unwrap();
        let cnot = Gate::new(2, 2, vec![0, 1, 3, 2]).unwrap();
        let w = affine_test(&cnot, gf2).unwrap().unwrap();
        assert_eq!(w.matrix, vec![vec![1, 0], vec![1, 1]]);
        assert_eq!(w.translation, vec![0, 0]);
    }

    #[test]
    fn toffoli_is_not_affine() {
        let gf2 = FieldTable::get(2).unwrap();
        let toffoli = Gate::new(2, 3, vec![0, 1, 2, 3, 4, 5, 7, 6]).unwrap();
        assert_eq!(affine_test(&toffoli, gf2).unwrap(), None);
    }

    #[test]
    fn alphabet_must_match_field() {
        let gf3 = FieldTable::get(3).unwrap();
        let cnot = Gate::new(2, 2, vec![0, 1, 3, 2]).unwrap();
        assert_eq!(affine_test(&cnot, gf3).unwrap_err(), Error::AlphabetMismatch(2, 3));
    }

    #[test]
    fn frobenius_is_additive_but_not_affine() {
        // x ↦ x^2 on GF(4) is GF(2)-linear only.
        let gf4 = FieldTable::get(4).unwrap();
        let frob = Gate::from_fn(4, 1, |x| vec![gf4.mul(x[0], x[0])]).unwrap();
        assert_eq!(affine_test(&frob, gf4).unwrap(), None);
        let scale = Gate::from_fn(4, 1, |x| vec![gf4.add(gf4.mul(2, x[0]), 3)]).unwrap();
        let w = affine_test(&scale, gf4).unwrap().unwrap();
        assert_eq!((w.matrix, w.translation), (vec![vec![2]], vec![3]));
    }

    #[test]
    fn order_formula() {
        assert_eq!(affine_group_order(2, 2), 24u32.into());
        assert_eq!(affine_group_order(3, 2), 432u32.into());
        assert_eq!(affine_group_order(2, 3), 1344u32.into());
    }
}
