use std::collections::BTreeMap;

use super::{Symbol, Word};
use crate::error::{Error, Result};

/// A substitution defined on a finite alphabet; every image is non-empty
/// and uses only alphabet symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    rules: BTreeMap<Symbol, Word>,
}

impl Morphism {
    pub fn new(rules: BTreeMap<Symbol, Word>) -> Result<Self> {
        if rules.is_empty() {
            return Err(Error::InvalidMorphism("no rules".into()));
        }
        for (a, image) in &rules {
            if image.is_empty() {
                return Err(Error::InvalidMorphism(format!("image of {a} is empty")));
            }
            if let Some(b) = image.iter().find(|b| !rules.contains_key(b)) {
                return Err(Error::InvalidMorphism(format!(
                    "image of {a} uses {b}, which has no rule"
                )));
            }
        }
        Ok(Morphism { rules })
    }

    /// Parses `0>01,1>10`. Returns the morphism and the left-hand side of the
    /// first rule, which the CLI uses as the default seed.
    pub fn parse(spec: &str) -> Result<(Self, Symbol)> {
        let mut rules = BTreeMap::new();
        let mut first = None;
        for rule in spec.split(',') {
            let (lhs, rhs) = rule
                .split_once('>')
                .ok_or_else(|| Error::InvalidMorphism(format!("rule `{rule}` lacks `>`")))?;
            let lhs = Word::parse(lhs)?;
            if lhs.len() != 1 {
                return Err(Error::InvalidMorphism(format!("`{rule}`: left side must be one symbol")));
            }
            let a = lhs[0];
            if rules.insert(a, Word::parse(rhs)?).is_some() {
                return Err(Error::InvalidMorphism(format!("duplicate rule for {a}")));
            }
            first.get_or_insert(a);
        }
        let m = Morphism::new(rules)?;
        Ok((m, first.expect("split yields at least one rule")))
    }

    pub fn thue_morse() -> Self {
        Self::parse("0>01,1>10").unwrap().0
    }

    pub fn sierpinski() -> Self {
        Self::parse("0>010,1>111").unwrap().0
    }

    pub fn image(&self, a: Symbol) -> Option<&Word> {
        self.rules.get(&a)
    }

    pub fn rules(&self) -> &BTreeMap<Symbol, Word> {
        &self.rules
    }

    pub fn apply(&self, u: &[Symbol]) -> Result<Word> {
        let mut out = Vec::with_capacity(u.len() * 2);
        for a in u {
            let img = self
                .rules
                .get(a)
                .ok_or_else(|| Error::SymbolAbsent(a.to_string()))?;
            out.extend_from_slice(img);
        }
        Ok(Word::new(out))
    }

    pub fn is_prolongable(&self, seed: Symbol) -> bool {
        matches!(self.rules.get(&seed), Some(img) if img.len() >= 2 && img[0] == seed)
    }

    /// First `n` symbols of the fixed point starting with `seed`.
    pub fn fixed_point_prefix(&self, seed: Symbol, n: usize) -> Result<Word> {
        if !self.is_prolongable(seed) {
            return Err(Error::NotProlongable(seed.to_string()));
        }
        let mut out: Vec<Symbol> = Vec::with_capacity(n + 16);
        out.extend_from_slice(&self.rules[&seed]);
        // x = phi(x): the images of x_2, x_3, ... follow phi(x_1) in order.
        let mut next = 1;
        while out.len() < n {
            let a = out[next];
            out.extend_from_slice(&self.rules[&a]);
            next += 1;
        }
        out.truncate(n);
        Ok(Word::new(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_validate() {
        let (m, seed) = Morphism::parse("0>010,1>111").unwrap();
        assert_eq!(seed, Symbol(0));
        assert!(m.is_prolongable(Symbol(0)));
        assert!(m.is_prolongable(Symbol(1)));
        assert!(!Morphism::parse("0>10,1>0").unwrap().0.is_prolongable(Symbol(0)));
        assert!(Morphism::parse("0>012,1>1").is_err());
        assert!(Morphism::parse("0>").is_err());
        assert!(Morphism::parse("0>1,0>0").is_err());
        assert!(Morphism::parse("00>1").is_err());
    }

    #[test]
    fn non_prolongable_seed() {
        let (m, _) = Morphism::parse("0>10,1>01").unwrap();
        assert_eq!(
            m.fixed_point_prefix(Symbol(0), 5),
            Err(Error::NotProlongable("0".into()))
        );
    }

    #[test]
    fn fixed_point_is_preserved() {
        let m = Morphism::sierpinski();
        let p = m.fixed_point_prefix(Symbol(0), 100).unwrap();
        let img = m.apply(&p).unwrap();
        assert_eq!(&img[..100], &p[..]);
    }
}
