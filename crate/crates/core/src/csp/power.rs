use crate::error::{Error, Result};
use crate::structure::FiniteStructure;

pub const POWER_DOMAIN_CAP: usize = 100_000;
const POWER_TUPLE_CAP: u64 = 5_000_000;

/// Encodes a `k`-tuple over `0..d` with the first coordinate most
/// significant.
pub fn encode(tuple: &[usize], d: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * d + x)
}

pub fn decode(mut code: usize, d: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = code % d;
        code /= d;
    }
    out
}

/// The `k`-th direct power: elements are `k`-tuples, and a tuple of them is
/// in a relation iff every coordinate projection is.
pub fn structure_power(tmpl: &FiniteStructure, k: usize) -> Result<FiniteStructure> {
    if k == 0 {
        return Err(Error::range("power exponent must be positive"));
    }
    let d = tmpl.domain_size();
    let size = (d as u64)
        .checked_pow(k as u32)
        .filter(|&s| s <= POWER_DOMAIN_CAP as u64)
        .ok_or_else(|| Error::size(format!("{d}^{k} elements exceeds {POWER_DOMAIN_CAP}")))?;
    let mut out = FiniteStructure::new(size as usize, tmpl.signature().to_vec())?;
    for (idx, sym) in tmpl.signature().iter().enumerate() {
        let rel: Vec<&Vec<usize>> = tmpl.relation(idx).iter().collect();
        if rel.is_empty() {
            continue;
        }
        if (rel.len() as u64).checked_pow(k as u32).is_none_or(|t| t > POWER_TUPLE_CAP) {
            return Err(Error::size(format!("{}^{k} tuples for {}", rel.len(), sym.name)));
        }
        // Odometer over k choices of relation tuples.
        let mut pick = vec![0usize; k];
        'tuples: loop {
            let tuple: Vec<usize> = (0..sym.arity)
                .map(|pos| {
                    let coords: Vec<usize> = pick.iter().map(|&i| rel[i][pos]).collect();
                    encode(&coords, d)
                })
                .collect();
            out.add_tuple(&sym.name, tuple)?;
            for i in (0..k).rev() {
                pick[i] += 1;
                if pick[i] < rel.len() {
                    continue 'tuples;
                }
                pick[i] = 0;
            }
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{clique, one_in_three, struct_a};

    #[test]
    fn clique_square() {
        let p = structure_power(&clique(2), 2).unwrap();
        assert_eq!(p.domain_size(), 4);
        let e = p.relation_by_name("E").unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let (x, y) = (decode(a, 2, 2), decode(b, 2, 2));
                let both_differ = x[0] != y[0] && x[1] != y[1];
                assert_eq!(e.contains(&vec![a, b]), both_differ);
            }
        }
    }

    #[test]
    fn first_power_is_identity() {
        for t in [clique(3), one_in_three(), struct_a()] {
            assert_eq!(structure_power(&t, 1).unwrap(), t);
        }
    }

    #[test]
    fn one_in_three_square_has_nine_tuples() {
        let p = structure_power(&one_in_three(), 2).unwrap();
        assert_eq!(p.relation(0).len(), 9);
        assert!(structure_power(&one_in_three(), 0).is_err());
        assert!(matches!(structure_power(&struct_a(), 11), Err(Error::Size(_))));
    }

    #[test]
    fn projections_are_homomorphisms() {
        for (t, k) in [(clique(3), 2), (one_in_three(), 3), (struct_a(), 2)] {
            let p = structure_power(&t, k).unwrap();
            for coord in 0..k {
                for (idx, _) in p.signature().iter().enumerate() {
                    for tuple in p.relation(idx) {
                        let image: Vec<usize> = tuple
                            .iter()
                            .map(|&e| decode(e, t.domain_size(), k)[coord])
                            .collect();
                        assert!(t.relation(idx).contains(&image));
                    }
                }
            }
        }
    }
}
