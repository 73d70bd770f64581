//! Generating functions `F_mu(z, 1) = sum_n |Av_n(mu)| z^n` for super-strict
//! patterns, by running the operator word read off the southeast border.
//!
//! The bivariate series `F_i(z, t)` are never built. Only their
//! specialisations at `t = z^k` and `t = 0` are needed, and the operator
//! rules express each of those through specialisations one level down.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::ratfunc::{IntPoly, RatFunc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Op {
    E,
    N,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ThetaWord(pub Vec<Op>);

impl ThetaWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_adjacent_n(&self) -> bool {
        self.0.windows(2).any(|w| w == [Op::N, Op::N])
    }
}

impl fmt::Display for ThetaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.0.iter().map(|op| if *op == Op::E { "E" } else { "N" }).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Reads the southeast border bottom-left to top-right, drops the first east
/// step and the final east and north steps, and records `n e` as `N` and a
/// lone `e` as `E`. For strict patterns whose top two parts differ by one the
/// border ends in a bare `n`, which is recorded as `N`.
pub fn theta_from_border(mu: &Partition) -> Result<ThetaWord> {
    if !mu.is_strict() {
        return Err(Error::NotStrict(mu.to_string()));
    }
    if mu.weight() < 2 {
        return Err(Error::TooSmall(mu.to_string()));
    }
    // true = east, false = north
    let mut steps = Vec::new();
    let mut x = 0;
    for &p in mu.parts().iter().rev() {
        steps.extend(std::iter::repeat_n(true, (p - x) as usize));
        steps.push(false);
        x = p;
    }
    steps.remove(0);
    steps.pop();
    let last_e = steps.iter().rposition(|&s| s).expect("border has an east step");
    steps.remove(last_e);
    let mut word = Vec::new();
    let mut i = 0;
    while i < steps.len() {
        if steps[i] {
            word.push(Op::E);
            i += 1;
        } else {
            word.push(Op::N);
            i += if steps.get(i + 1) == Some(&true) { 2 } else { 1 };
        }
    }
    Ok(ThetaWord(word))
}

/// The same word via the recursion on the top two parts.
pub fn theta_recursive(mu: &Partition) -> Result<ThetaWord> {
    if !mu.is_super_strict() {
        return Err(Error::NotSuperStrict(mu.to_string()));
    }
    if mu.weight() < 2 {
        return Err(Error::TooSmall(mu.to_string()));
    }
    let mut word = Vec::new();
    let mut cur = mu.parts().to_vec();
    while cur != [2] {
        let (m1, m2) = (cur[0], cur.get(1).copied().unwrap_or(0));
        if m1 >= m2 + 3 {
            cur[0] -= 1;
            word.push(Op::E);
        } else {
            cur.remove(0);
            cur[0] += 1;
            word.push(Op::N);
        }
    }
    word.reverse();
    Ok(ThetaWord(word))
}

/// Which specialisation of `t` a node stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TSpec {
    /// `t = z^k`; `k = 0` is `t = 1`.
    Pow(u32),
    Zero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EvalKey {
    pub level: usize,
    pub t: TSpec,
}

/// Memoised evaluation of `F_level(z, t)` for one operator word.
pub struct Evaluator<'a> {
    word: &'a ThetaWord,
    memo: HashMap<EvalKey, RatFunc>,
}

fn one_minus_z_pow(d: u32) -> IntPoly {
    &IntPoly::one() - &IntPoly::monomial(1.into(), d as usize)
}

impl<'a> Evaluator<'a> {
    pub fn new(word: &'a ThetaWord) -> Self {
        Evaluator { word, memo: HashMap::new() }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn eval(&mut self, key: EvalKey) -> Result<RatFunc> {
        if key.level > self.word.len() {
            return Err(Error::Invariant(format!("level {} beyond word length {}", key.level, self.word.len())));
        }
        if let Some(f) = self.memo.get(&key) {
            return Ok(f.clone());
        }
        let value = self.compute(key)?;
        self.memo.insert(key, value.clone());
        Ok(value)
    }

    fn at(&mut self, level: usize, t: TSpec) -> Result<RatFunc> {
        self.eval(EvalKey { level, t })
    }

    fn compute(&mut self, key: EvalKey) -> Result<RatFunc> {
        let EvalKey { level, t } = key;
        if level == 0 {
            // F_0(z, t) = zt / (1 - zt)
            return Ok(match t {
                TSpec::Pow(k) => RatFunc::geometric_tail(k as usize + 1),
                TSpec::Zero => RatFunc::zero(),
            });
        }
        let prev = level - 1;
        match (self.word.0[prev], t) {
            (Op::E, TSpec::Zero) => self.at(prev, TSpec::Pow(0)),
            (Op::N, TSpec::Zero) => Err(Error::NZeroUnsupported(level)),
            (Op::E, TSpec::Pow(k)) => {
                let at_one = self.at(prev, TSpec::Pow(0))?;
                let shifted = self.at(prev, TSpec::Pow(k + 1))?;
                let zk1 = RatFunc::z_power(k as usize + 1);
                let num = &at_one - &(&zk1 * &shifted);
                num.checked_div(&RatFunc::from_poly(one_minus_z_pow(k + 1)))
            }
            (Op::N, TSpec::Pow(k)) => {
                let at_zero = self.at(prev, TSpec::Zero)?;
                let mut sum = RatFunc::zero();
                for j in 0..=k {
                    sum = &sum + &(&self.at(prev, TSpec::Pow(j))? - &at_zero);
                }
                let scaled = sum.checked_div(&RatFunc::from_poly(one_minus_z_pow(k + 1)))?;
                Ok(&scaled + &at_zero)
            }
        }
    }
}

/// `F(z, 1)` for the given word.
pub fn eval_word(word: &ThetaWord) -> Result<RatFunc> {
    Evaluator::new(word).eval(EvalKey { level: word.len(), t: TSpec::Pow(0) })
}

/// `sum_{n >= 1} |Av_n(mu)| z^n` for super-strict `mu`. The constant term is
/// whatever the operator calculus yields, which is zero for every pattern
/// tested; callers wanting the empty partition counted add 1.
pub fn gf_avoid(mu: &Partition) -> Result<RatFunc> {
    if mu.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if !mu.is_super_strict() {
        return Err(Error::NotSuperStrict(mu.to_string()));
    }
    if mu.weight() == 1 {
        return Ok(RatFunc::zero());
    }
    eval_word(&theta_recursive(mu)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{av_series, partitions_of};
    use crate::part;
    use crate::ratfunc::parse_ratfunc;
    use Op::{E, N};

    fn super_strict_up_to(w: u64) -> Vec<Partition> {
        (1..=w).flat_map(|n| partitions_of(n).unwrap().filter(Partition::is_super_strict)).collect()
    }

    #[test]
    fn words_from_border() {
        assert_eq!(theta_from_border(&part![8, 5, 3]).unwrap().0, vec![E, E, N, E, N, E]);
        assert!(theta_from_border(&part![2]).unwrap().is_empty());
        assert_eq!(theta_from_border(&part![5, 1]).unwrap().0, vec![N, E, E]);
        assert_eq!(theta_from_border(&part![3, 2]).unwrap().0, vec![E, N]);
        assert!(matches!(theta_from_border(&part![3, 3]), Err(Error::NotStrict(_))));
        assert!(matches!(theta_from_border(&part![1]), Err(Error::TooSmall(_))));
    }

    #[test]
    fn recursive_words() {
        assert_eq!(theta_recursive(&part![3]).unwrap().0, vec![E]);
        assert!(theta_recursive(&part![2]).unwrap().is_empty());
        assert_eq!(theta_recursive(&part![5, 2]).unwrap().0, vec![E, N, E]);
        assert!(matches!(theta_recursive(&part![3, 2]), Err(Error::NotSuperStrict(_))));
        for mu in super_strict_up_to(30).into_iter().filter(|m| m.weight() >= 2) {
            let w = theta_recursive(&mu).unwrap();
            assert_eq!(w, theta_from_border(&mu).unwrap(), "{mu:?}");
            assert!(!w.has_adjacent_n(), "{mu:?}");
            assert_eq!(w.len(), mu.largest() as usize - 2, "{mu:?}");
        }
    }

    #[test]
    fn node_examples() {
        let empty = ThetaWord::default();
        assert_eq!(eval_word(&empty).unwrap(), parse_ratfunc("z/(1-z)").unwrap());
        assert_eq!(eval_word(&ThetaWord(vec![E])).unwrap(), parse_ratfunc("1/((1-z^2)(1-z)) - 1").unwrap());
        assert_eq!(eval_word(&ThetaWord(vec![N])).unwrap(), parse_ratfunc("z/(1-z)^2").unwrap());
        let nn = ThetaWord(vec![N, N]);
        assert_eq!(eval_word(&nn), Err(Error::NZeroUnsupported(1)));
        let mut ev = Evaluator::new(&empty);
        assert!(ev.eval(EvalKey { level: 1, t: TSpec::Pow(0) }).is_err());
    }

    #[test]
    fn known_generating_functions() {
        let g = parse_ratfunc("-z*(z^7 - 2*z^5 + z^3 + z^2 - z - 1)/((z - 1)^4*(z + 1)^2*(z^2 + z + 1))").unwrap();
        assert_eq!(gf_avoid(&part![5, 2]).unwrap(), g);
        assert_eq!(gf_avoid(&part![2]).unwrap(), parse_ratfunc("z/(1-z)").unwrap());
        assert!(gf_avoid(&part![1]).unwrap().is_zero());
        assert!(matches!(gf_avoid(&part![4, 3]), Err(Error::NotSuperStrict(_))));
        assert_eq!(gf_avoid(&Partition::empty()), Err(Error::EmptyPartition));
    }

    #[test]
    fn series_match_enumeration() {
        for mu in super_strict_up_to(8) {
            let counts = av_series(&mu, 20).unwrap().counts;
            let s = gf_avoid(&mu).unwrap().integer_series(20).unwrap();
            assert_eq!(s[0], 0.into(), "{mu:?}");
            for n in 1..=20 {
                assert_eq!(s[n], counts[n - 1].into(), "{mu:?} n={n}");
            }
        }
    }
}
