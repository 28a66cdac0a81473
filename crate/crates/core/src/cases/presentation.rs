//! Module presentations of the deformed quotient and the rewriting that
//! turns `x`- and `y`-multiples of the generators into combinations with
//! coefficients in the deformation coordinates.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::{parse_polynomial, Polynomial, Ring};

/// Square matrix of deformation-ring polynomials; `ops[l][i][j]` is the
/// coefficient of `q_j` in `ℓ·q_i`.
pub type Operator = Vec<Vec<Polynomial>>;

/// A vector of coefficients with respect to the surviving generators.
pub type ModuleElement = Vec<Polynomial>;

/// The presentation at one support point.
#[derive(Debug, Clone)]
pub struct PresentationBlock {
    pub name: String,
    pub local_vars: [String; 2],
    /// Names of the generators left after eliminating unit columns.
    pub generators: Vec<String>,
    /// `(q, coefficients)`: generator `q` equals the given combination of
    /// the surviving generators.
    pub eliminated: Vec<(String, ModuleElement)>,
    /// Multiplication by each local variable, in the deformation ring.
    pub operators: [Operator; 2],
    /// Length of the quotient at the point.
    pub length: u32,
    /// The deformed presentation matrix, over local and deformation variables.
    pub matrix: Vec<Vec<Polynomial>>,
}

/// Deformed presentation of the quotient sheaf, one block per support point.
#[derive(Debug, Clone)]
pub struct ModulePresentation {
    pub ring: Ring,
    pub blocks: Vec<PresentationBlock>,
}

fn local_part(f: &Polynomial, local: [usize; 2]) -> (Polynomial, Polynomial) {
    let ring = f.ring();
    let (with, without): (Vec<_>, Vec<_>) =
        f.terms().iter().cloned().partition(|(m, _)| m.involves(local[0]) || m.involves(local[1]));
    (Polynomial::from_terms(ring, with), Polynomial::from_terms(ring, without))
}

impl PresentationBlock {
    /// Reads the rewrite rules off the columns of a deformed presentation
    /// matrix. Row `i` corresponds to the generator `q{i+1}`.
    ///
    /// A column with a constant entry and no local variable expresses that
    /// row's generator through the others. Every other column must contain
    /// exactly one entry of the form `ℓ + (deformation terms)` and gives the
    /// rule for `ℓ` times that row's generator.
    pub fn from_matrix(
        name: &str,
        matrix: Vec<Vec<Polynomial>>,
        local_vars: [&str; 2],
        deformation: &Ring,
        length: u32,
    ) -> Result<PresentationBlock> {
        let bad = |msg: String| Error::InvalidMap(format!("block {name}: {msg}"));
        let k = matrix.len();
        let m = matrix.first().map_or(0, Vec::len);
        if k == 0 || matrix.iter().any(|r| r.len() != m) {
            return Err(bad("ragged matrix".into()));
        }
        let pring = matrix[0][0].ring().clone();
        let local = [pring.require_index(local_vars[0])?, pring.require_index(local_vars[1])?];
        let to_def = |p: &Polynomial| p.embed(deformation);

        // substitution table: generator index -> combination of all generators
        let mut subst: Vec<Option<Vec<Polynomial>>> = vec![None; k];
        let mut rule_columns = Vec::new();
        for c in 0..m {
            let col: Vec<&Polynomial> = matrix.iter().map(|r| &r[c]).collect();
            let has_local = col.iter().any(|e| e.involves(local[0]) || e.involves(local[1]));
            let unit_row = col.iter().position(|e| e.is_constant() && !e.is_zero());
            match (has_local, unit_row) {
                (false, Some(r)) => {
                    if subst[r].is_some() {
                        return Err(bad(format!("generator q{} eliminated twice", r + 1)));
                    }
                    let inv = col[r].leading_coeff().unwrap().recip();
                    let combo = (0..k)
                        .map(|i| {
                            if i == r {
                                Ok(Polynomial::zero(deformation))
                            } else {
                                Ok(to_def(col[i])?.scale(&-inv.clone()))
                            }
                        })
                        .collect::<Result<Vec<_>>>()?;
                    subst[r] = Some(combo);
                }
                (true, _) => rule_columns.push(c),
                (false, None) => return Err(bad(format!("column {} has neither a local variable nor a unit", c + 1))),
            }
        }
        let survivors: Vec<usize> = (0..k).filter(|&i| subst[i].is_none()).collect();
        // rewrite a combination over all generators into one over the survivors
        let reduce = |v: Vec<Polynomial>| -> ModuleElement {
            let mut out: Vec<Polynomial> = survivors.iter().map(|&i| v[i].clone()).collect();
            for (r, s) in subst.iter().enumerate() {
                if let Some(combo) = s {
                    if v[r].is_zero() {
                        continue;
                    }
                    for (slot, &i) in survivors.iter().enumerate() {
                        out[slot] = &out[slot] + &(&v[r] * &combo[i]);
                    }
                }
            }
            out
        };

        let n = survivors.len();
        let mut ops: [Vec<Vec<Option<Polynomial>>>; 2] = [vec![vec![None; n]; n], vec![vec![None; n]; n]];
        let mut covered = [vec![false; n], vec![false; n]];
        for c in rule_columns {
            let mut anchor = None;
            let mut rest = Vec::with_capacity(k);
            for (r, row) in matrix.iter().enumerate() {
                let (loc, tail) = local_part(&row[c], local);
                if !loc.is_zero() {
                    if anchor.is_some() {
                        return Err(bad(format!("column {} has two local entries", c + 1)));
                    }
                    let l = local
                        .iter()
                        .position(|&v| loc == Polynomial::var_index(&pring, v))
                        .ok_or_else(|| bad(format!("entry {loc} is not a bare local variable")))?;
                    anchor = Some((r, l));
                }
                rest.push(-to_def(&tail)?);
            }
            let (r, l) = anchor.unwrap();
            let slot = survivors
                .iter()
                .position(|&i| i == r)
                .ok_or_else(|| bad(format!("rule for eliminated generator q{}", r + 1)))?;
            if covered[l][slot] {
                return Err(bad(format!("two rules for {}·q{}", local_vars[l], r + 1)));
            }
            covered[l][slot] = true;
            for (j, coeff) in reduce(rest).into_iter().enumerate() {
                ops[l][slot][j] = Some(coeff);
            }
        }
        if covered.iter().flatten().any(|c| !c) {
            return Err(bad("rewrite rules do not cover every generator".into()));
        }
        let operators = ops.map(|op| op.into_iter().map(|row| row.into_iter().map(Option::unwrap).collect()).collect());
        let eliminated =
            (0..k).filter_map(|i| subst[i].clone().map(|combo| (format!("q{}", i + 1), reduce(combo)))).collect();
        Ok(PresentationBlock {
            name: name.to_string(),
            local_vars: local_vars.map(str::to_string),
            generators: survivors.iter().map(|i| format!("q{}", i + 1)).collect(),
            eliminated,
            operators,
            length,
            matrix,
        })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    fn ring(&self) -> &Ring {
        self.operators[0][0][0].ring()
    }

    /// The `i`-th surviving generator as a module element.
    pub fn basis_vector(&self, i: usize) -> ModuleElement {
        (0..self.rank())
            .map(|j| if i == j { Polynomial::one(self.ring()) } else { Polynomial::zero(self.ring()) })
            .collect()
    }

    /// Multiplies `v` by the local variables in `word`, one rule application
    /// per letter, first letter first.
    pub fn apply_word(&self, word: &[usize], v: &ModuleElement) -> ModuleElement {
        let mut cur = v.clone();
        for &l in word {
            let op = &self.operators[l];
            cur = (0..self.rank())
                .map(|j| {
                    let mut acc = Polynomial::zero(self.ring());
                    for (i, c) in cur.iter().enumerate() {
                        if !c.is_zero() {
                            acc = &acc + &(c * &op[i][j]);
                        }
                    }
                    acc
                })
                .collect();
        }
        cur
    }

    /// The operator of a whole word, multiplied out before it is applied.
    pub fn word_operator(&self, word: &[usize]) -> Operator {
        let n = self.rank();
        let mut acc: Operator = (0..n).map(|i| self.basis_vector(i)).collect();
        for &l in word {
            let op = &self.operators[l];
            acc = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let mut s = Polynomial::zero(self.ring());
                            for (k, a) in acc[i].iter().enumerate() {
                                s = &s + &(a * &op[k][j]);
                            }
                            s
                        })
                        .collect()
                })
                .collect();
        }
        acc
    }

    /// The block with every deformation coordinate set to zero.
    pub fn at_origin(&self) -> PresentationBlock {
        let ring = self.ring().clone();
        let zero_out = |p: &Polynomial| Polynomial::constant(&ring, p.constant_term());
        let mut b = self.clone();
        for op in b.operators.iter_mut() {
            for row in op.iter_mut() {
                for c in row.iter_mut() {
                    *c = zero_out(c);
                }
            }
        }
        for (_, combo) in b.eliminated.iter_mut() {
            for c in combo.iter_mut() {
                *c = zero_out(c);
            }
        }
        b
    }

    /// Torus weights of the deformation coordinates under
    /// `P̃ ↦ diag(row_weights)·P̃·diag(column weights)`, where each column
    /// weight is fixed by requiring its local-variable or unit entry to be
    /// invariant.
    pub fn torus_weights(&self, row_weights: &[i64]) -> Result<Vec<(String, i64)>> {
        let pring = self.matrix[0][0].ring().clone();
        let local = [pring.require_index(&self.local_vars[0])?, pring.require_index(&self.local_vars[1])?];
        let mut out: Vec<(String, i64)> = Vec::new();
        for c in 0..self.matrix[0].len() {
            let anchor = (0..self.matrix.len())
                .find(|&r| {
                    let e = &self.matrix[r][c];
                    e.involves(local[0]) || e.involves(local[1]) || !e.constant_term().is_zero()
                })
                .ok_or_else(|| Error::InvalidMap(format!("column {} has no anchor entry", c + 1)))?;
            let col_weight = -row_weights[anchor];
            for (r, row) in self.matrix.iter().enumerate() {
                for v in row[c].support() {
                    if local.contains(&v) {
                        continue;
                    }
                    let name = pring.variables()[v].clone();
                    let w = row_weights[r] + col_weight;
                    match out.iter().find(|(n, _)| *n == name) {
                        Some((_, w0)) if *w0 != w => {
                            return Err(Error::NotSemiInvariant(format!("{name} has weights {w0} and {w}")))
                        }
                        Some(_) => {}
                        None => out.push((name, w)),
                    }
                }
            }
        }
        Ok(out)
    }
}

impl ModulePresentation {
    /// Same presentation with all deformation coordinates set to zero.
    pub fn at_origin(&self) -> ModulePresentation {
        ModulePresentation { ring: self.ring.clone(), blocks: self.blocks.iter().map(|b| b.at_origin()).collect() }
    }
}

/// Parses a row-major presentation matrix over `ring`.
pub(crate) fn parse_matrix(rows: &[&[&str]], ring: &Ring) -> Result<Vec<Vec<Polynomial>>> {
    rows.iter().map(|r| r.iter().map(|s| parse_polynomial(s, ring)).collect()).collect()
}

/// The entries of `y(x·q_i) − x(y·q_i)`, arranged as one column per
/// generator and block, together with the ideal they generate.
pub fn commutator_syzygies(mp: &ModulePresentation) -> Result<(Vec<ModuleElement>, Ideal)> {
    let mut columns = Vec::new();
    let mut entries = Vec::new();
    for b in &mp.blocks {
        for i in 0..b.rank() {
            let e = b.basis_vector(i);
            // x(y·q) − y(x·q): apply y then x, minus x then y
            let yx = b.apply_word(&[1, 0], &e);
            let xy = b.apply_word(&[0, 1], &e);
            let col: ModuleElement = yx.iter().zip(&xy).map(|(a, c)| a - c).collect();
            entries.extend(col.iter().filter(|p| !p.is_zero()).cloned());
            columns.push(col);
        }
    }
    Ok((columns, Ideal::new(&mp.ring, entries)?))
}

/// Coefficients of `x^i y^j · q_k` with `i + j` equal to each block's length,
/// applying the `y`'s first.
pub fn support_ideal(mp: &ModulePresentation) -> Result<Ideal> {
    let mut gens = Vec::new();
    for b in &mp.blocks {
        let n = b.length as usize;
        for i in 0..=n {
            let word: Vec<usize> = std::iter::repeat_n(1, n - i).chain(std::iter::repeat_n(0, i)).collect();
            for k in 0..b.rank() {
                gens.extend(b.apply_word(&word, &b.basis_vector(k)).into_iter().filter(|p| !p.is_zero()));
            }
        }
    }
    Ideal::new(&mp.ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(rows: &[&[&str]], vars: &[&str]) -> Result<PresentationBlock> {
        let mut names = vec!["x", "y"];
        names.extend(vars);
        let pring = Ring::grevlex(&names)?;
        let dring = Ring::grevlex(vars)?;
        PresentationBlock::from_matrix("p", parse_matrix(rows, &pring)?, ["x", "y"], &dring, 1)
    }

    #[test]
    fn cyclic_block_rules() {
        let b = single(&[&["x + a", "y + b"]], &["a", "b"]).unwrap();
        assert_eq!(b.generators, vec!["q1"]);
        assert_eq!(b.operators[0][0][0].to_string(), "-a");
        assert_eq!(b.operators[1][0][0].to_string(), "-b");
    }

    #[test]
    fn unit_column_eliminates_generator() {
        let b = single(&[&["x + a", "y + b", "c"], &["0", "0", "1"]], &["a", "b", "c"]).unwrap();
        assert_eq!(b.generators, vec!["q1"]);
        assert_eq!(b.eliminated[0].0, "q2");
        assert_eq!(b.eliminated[0].1[0].to_string(), "-c");
    }

    #[test]
    fn incomplete_rules_rejected() {
        assert!(single(&[&["x + a", "b"]], &["a", "b"]).is_err());
        assert!(single(&[&["x + a", "x + b"]], &["a", "b"]).is_err());
        assert!(single(&[&["x*y", "y"]], &["a"]).is_err());
    }
}
