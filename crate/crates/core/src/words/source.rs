use std::fmt;

use super::{Morphism, Symbol, Word};
use crate::error::{Error, Result};

/// A description of an infinite word from which prefixes can be drawn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordSource {
    MorphicFixedPoint { morphism: Morphism, seed: Symbol },
    UltimatelyPeriodic { preperiod: Word, period: Word },
    /// Characteristic Sturmian word for a directive sequence `d_1, d_2, ...`,
    /// built as `s_{-1} = 1`, `s_0 = 0`, `s_n = s_{n-1}^{d_n} s_{n-2}`.
    /// A finite directive list is repeated cyclically.
    SturmianCharacteristic { directive: Vec<u64> },
    /// A finite word; prefixes longer than it are truncated to its length.
    Explicit(Word),
}

impl WordSource {
    pub fn thue_morse() -> Self {
        WordSource::MorphicFixedPoint { morphism: Morphism::thue_morse(), seed: Symbol(0) }
    }

    pub fn sierpinski() -> Self {
        WordSource::MorphicFixedPoint { morphism: Morphism::sierpinski(), seed: Symbol(0) }
    }

    pub fn fibonacci() -> Self {
        WordSource::SturmianCharacteristic { directive: vec![1] }
    }

    pub fn periodic(preperiod: Word, period: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(WordSource::UltimatelyPeriodic { preperiod, period })
    }

    /// Parses the source aliases accepted on the command line:
    /// `thue-morse`, `sierpinski`, `fibonacci-sturmian`, `sturmian:<d1,d2,..>`,
    /// `periodic:<pre>:<per>` and `morphic:<rules>` (seed = first rule).
    pub fn parse(spec: &str) -> Result<Self> {
        match spec {
            "thue-morse" => return Ok(Self::thue_morse()),
            "sierpinski" => return Ok(Self::sierpinski()),
            "fibonacci-sturmian" | "fibonacci" => return Ok(Self::fibonacci()),
            _ => {}
        }
        if let Some(rest) = spec.strip_prefix("periodic:") {
            let (pre, per) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected periodic:<pre>:<per>, got `{spec}`")))?;
            return Self::periodic(Word::parse(pre)?, Word::parse(per)?);
        }
        if let Some(rules) = spec.strip_prefix("morphic:") {
            let (morphism, seed) = Morphism::parse(rules)?;
            if !morphism.is_prolongable(seed) {
                return Err(Error::NotProlongable(seed.to_string()));
            }
            return Ok(WordSource::MorphicFixedPoint { morphism, seed });
        }
        if let Some(ds) = spec.strip_prefix("sturmian:") {
            let directive = ds
                .split(',')
                .map(|d| d.trim().parse::<u64>().map_err(|_| Error::InvalidDirective))
                .collect::<Result<Vec<_>>>()?;
            if directive.is_empty() || directive.contains(&0) {
                return Err(Error::InvalidDirective);
            }
            return Ok(WordSource::SturmianCharacteristic { directive });
        }
        Err(Error::Parse(format!("unknown source `{spec}`")))
    }

    /// The first `n` symbols. Deterministic, and `prefix(n)` is always a
    /// prefix of `prefix(n + 1)`.
    pub fn prefix(&self, n: usize) -> Result<Word> {
        match self {
            WordSource::MorphicFixedPoint { morphism, seed } => morphism.fixed_point_prefix(*seed, n),
            WordSource::UltimatelyPeriodic { preperiod, period } => {
                if period.is_empty() {
                    return Err(Error::EmptyPeriod);
                }
                Ok(preperiod.iter().chain(period.iter().cycle()).take(n).copied().collect())
            }
            WordSource::SturmianCharacteristic { directive } => sturmian_prefix(directive, n),
            WordSource::Explicit(w) => Ok(Word::from(&w[..n.min(w.len())])),
        }
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self, WordSource::UltimatelyPeriodic { .. })
    }
}

fn sturmian_prefix(directive: &[u64], n: usize) -> Result<Word> {
    if directive.is_empty() || directive.contains(&0) {
        return Err(Error::InvalidDirective);
    }
    let mut older = vec![Symbol(1)];
    let mut prev = vec![Symbol(0)];
    let mut idx = 0;
    // s_n for n >= 1 is a prefix of s_{n+1}; s_0 = 0 is a prefix of every s_n.
    while prev.len() < n || idx == 0 {
        let d = directive[idx % directive.len()];
        let mut next = Vec::with_capacity(prev.len() * d.min(64) as usize + older.len());
        let mut reps = 0;
        while reps < d && next.len() < n {
            next.extend_from_slice(&prev);
            reps += 1;
        }
        // Stopping early keeps `next` a prefix of s_n: prev^reps with reps <= d.
        if reps == d {
            next.extend_from_slice(&older);
        }
        older = prev;
        prev = next;
        idx += 1;
    }
    prev.truncate(n);
    Ok(Word::new(prev))
}

impl fmt::Display for WordSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordSource::MorphicFixedPoint { morphism, seed } => {
                let rules: Vec<String> =
                    morphism.rules().iter().map(|(a, img)| format!("{a}>{img}")).collect();
                write!(f, "morphic:{} (seed {seed})", rules.join(","))
            }
            WordSource::UltimatelyPeriodic { preperiod, period } => write!(f, "periodic:{preperiod}:{period}"),
            WordSource::SturmianCharacteristic { directive } => {
                let ds: Vec<String> = directive.iter().map(u64::to_string).collect();
                write!(f, "sturmian:{}", ds.join(","))
            }
            WordSource::Explicit(w) => write!(f, "explicit:{w}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// s_0 = 0, s_1 = 01, s_n = s_{n-1} s_{n-2}.
    fn fibonacci_oracle(n: usize) -> String {
        let (mut a, mut b) = ("0".to_string(), "01".to_string());
        while b.len() < n {
            let c = format!("{b}{a}");
            a = b;
            b = c;
        }
        b[..n].to_string()
    }

    #[test]
    fn known_prefixes() {
        assert_eq!(WordSource::thue_morse().prefix(16).unwrap(), w("0110100110010110"));
        assert_eq!(
            WordSource::sierpinski().prefix(25).unwrap(),
            w("0101110101111111110101110")
        );
        let p = WordSource::periodic(Word::empty(), w("110100")).unwrap();
        assert_eq!(p.prefix(12).unwrap(), w("110100110100"));
    }

    #[test]
    fn fibonacci_matches_recurrence() {
        assert_eq!(WordSource::fibonacci().prefix(10).unwrap(), w("0100101001"));
        for n in [0, 1, 2, 3, 7, 50, 233] {
            assert_eq!(WordSource::fibonacci().prefix(n).unwrap(), w(&fibonacci_oracle(n)));
        }
    }

    #[test]
    fn sturmian_with_larger_directive() {
        // d = 2,1,...: s_1 = 001, s_2 = 0010, s_3 = 0010001
        let s = WordSource::parse("sturmian:2,1").unwrap();
        assert_eq!(s.prefix(7).unwrap(), w("0010001"));
    }

    #[test]
    fn errors() {
        assert_eq!(WordSource::periodic(w("0"), Word::empty()), Err(Error::EmptyPeriod));
        assert_eq!(WordSource::parse("sturmian:1,0"), Err(Error::InvalidDirective));
        assert!(WordSource::parse("morphic:0>10,1>01").is_err());
        assert!(WordSource::parse("nope").is_err());
        let bad = WordSource::SturmianCharacteristic { directive: vec![0] };
        assert_eq!(bad.prefix(3), Err(Error::InvalidDirective));
    }

    #[test]
    fn aliases() {
        assert_eq!(
            WordSource::parse("morphic:0>01,1>10").unwrap().prefix(8).unwrap(),
            w("01101001")
        );
        assert_eq!(
            WordSource::parse("periodic:2:01").unwrap().prefix(5).unwrap(),
            w("20101")
        );
    }

    proptest::proptest! {
        #[test]
        fn prefix_monotone(n in 0usize..300, which in 0usize..4) {
            let src = match which {
                0 => WordSource::thue_morse(),
                1 => WordSource::sierpinski(),
                2 => WordSource::parse("sturmian:1,3,2").unwrap(),
                _ => WordSource::parse("periodic:01:110").unwrap(),
            };
            let a = src.prefix(n).unwrap();
            let b = src.prefix(n + 1).unwrap();
            proptest::prop_assert_eq!(a.len(), n);
            proptest::prop_assert_eq!(&b[..n], &a[..]);
        }
    }
}
