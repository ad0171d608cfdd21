use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::multipoly::{Coeff, UPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SturmReport {
    pub degree: usize,
    pub distinct_real_roots: usize,
    pub squarefree_degree: usize,
    pub is_real_rooted: bool,
}

/// Counts distinct real roots exactly with a Sturm chain on the squarefree part.
pub fn sturm(p: &UPoly) -> Result<SturmReport> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    let sf = p.squarefree();
    let squarefree_degree = sf.degree().expect("nonzero");
    let chain = sturm_chain(&sf);
    let at_neg = sign_changes(chain.iter().map(sign_at_neg_infinity));
    let at_pos = sign_changes(chain.iter().map(sign_at_pos_infinity));
    let distinct_real_roots = at_neg - at_pos;
    Ok(SturmReport {
        degree,
        distinct_real_roots,
        squarefree_degree,
        is_real_rooted: distinct_real_roots == squarefree_degree,
    })
}

pub fn sturm_chain(p: &UPoly) -> Vec<UPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain[chain.len() - 1].is_zero() {
        let k = chain.len();
        let (_, r) = chain[k - 2].div_rem(&chain[k - 1]);
        // only signs matter, so keep the remainders primitive
        chain.push((-&r).primitive_positive());
    }
    chain.pop();
    chain
}

fn sign_at_pos_infinity(q: &UPoly) -> i8 {
    q.leading().map_or(0, sign)
}

fn sign_at_neg_infinity(q: &UPoly) -> i8 {
    let s = sign_at_pos_infinity(q);
    if q.degree().unwrap_or(0) % 2 == 1 {
        -s
    } else {
        s
    }
}

fn sign(c: &Coeff) -> i8 {
    if c.is_zero() {
        0
    } else if c.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_changes<I: Iterator<Item = i8>>(signs: I) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = sturm(&UPoly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!((r.distinct_real_roots, r.is_real_rooted), (0, false));
        let r = sturm(&UPoly::from_ints(&[1, 4, 1])).unwrap();
        assert_eq!((r.distinct_real_roots, r.is_real_rooted), (2, true));
        let r = sturm(&UPoly::from_ints(&[1, 2, 1])).unwrap();
        assert_eq!((r.squarefree_degree, r.distinct_real_roots, r.is_real_rooted), (1, 1, true));
        assert!(sturm(&UPoly::zero()).is_err());
        assert!(sturm(&UPoly::one()).unwrap().is_real_rooted);
    }
}
