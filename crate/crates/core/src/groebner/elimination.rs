use super::buchberger::{groebner_basis, BuchbergerOptions};
use super::ideal::Ideal;
use crate::error::Result;
use crate::polyring::{MonomialOrder, Ring};

/// Order used for the eliminated block and for the kept block.
pub(crate) fn elimination_order(split: usize) -> MonomialOrder {
    MonomialOrder::block(split, MonomialOrder::GrevLex, MonomialOrder::GrevLex)
}

/// Computes `I ∩ Q[keep]`. The result lives in the ring of `I`; its
/// generators involve only the kept variables.
pub fn elimination_ideal(ideal: &Ideal, keep: &[&str]) -> Result<Ideal> {
    let ring = ideal.ring();
    let mut keep_idx = Vec::with_capacity(keep.len());
    for name in keep {
        let i = ring.require_index(name)?;
        if !keep_idx.contains(&i) {
            keep_idx.push(i);
        }
    }
    keep_idx.sort_unstable();
    let elim_idx: Vec<usize> = (0..ring.nvars()).filter(|i| !keep_idx.contains(i)).collect();

    if elim_idx.is_empty() {
        return Ok(ideal.canonical());
    }
    if keep_idx.is_empty() {
        return Ok(if ideal.is_unit() { Ideal::unit(ring) } else { Ideal::zero(ring) });
    }

    // block ring: eliminated variables first, then kept, each in declaration order
    let layout: Vec<usize> = elim_idx.iter().chain(keep_idx.iter()).copied().collect();
    let names: Vec<&str> = layout.iter().map(|&i| ring.variables()[i].as_str()).collect();
    let block = Ring::new(&names, elimination_order(elim_idx.len()))?;
    let mut forward = vec![None; ring.nvars()];
    for (pos, &i) in layout.iter().enumerate() {
        forward[i] = Some(pos);
    }
    let gens = ideal.generators().iter().map(|g| g.transfer(&block, &forward)).collect::<Result<Vec<_>>>()?;
    let gb = groebner_basis(&block, &gens, BuchbergerOptions::default());
    let backward: Vec<Option<usize>> = layout.iter().map(|&i| Some(i)).collect();
    let split = elim_idx.len();
    let kept = gb
        .iter()
        .filter(|g| (0..split).all(|v| !g.involves(v)))
        .map(|g| g.transfer(ring, &backward))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, kept)
}

/// True iff every generator of `result` avoids the eliminated variables and
/// lies in `ideal`.
pub fn check_elimination(ideal: &Ideal, keep: &[&str], result: &Ideal) -> Result<bool> {
    let ring = ideal.ring();
    let only_kept =
        result.generators().iter().all(|g| g.support().iter().all(|&v| keep.contains(&ring.variables()[v].as_str())));
    Ok(only_kept && ideal.contains_all(result.generators())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn cubic() -> Ideal {
        let r = Ring::new(&["x", "y", "z"], MonomialOrder::Lex).unwrap();
        let g = ["y - x^2", "z - x^3"].iter().map(|s| parse_polynomial(s, &r).unwrap()).collect();
        Ideal::new(&r, g).unwrap()
    }

    #[test]
    fn twisted_cubic_elimination() {
        let i = cubic();
        let e = elimination_ideal(&i, &["y", "z"]).unwrap();
        assert_eq!(e.generators().len(), 1);
        let expected = parse_polynomial("y^3 - z^2", i.ring()).unwrap();
        assert_eq!(e.generators()[0].monic(), expected.monic());
        assert!(check_elimination(&i, &["y", "z"], &e).unwrap());
    }

    #[test]
    fn eliminating_nothing_gives_basis() {
        let i = cubic();
        let e = elimination_ideal(&i, &["x", "y", "z"]).unwrap();
        assert_eq!(e.generators(), i.groebner_basis());
    }

    #[test]
    fn eliminating_everything_from_proper_ideal() {
        let i = cubic();
        assert!(elimination_ideal(&i, &[]).unwrap().is_zero());
    }
}
