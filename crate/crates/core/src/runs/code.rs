use std::fmt;

use serde::{Serialize, Serializer};

use super::MeasureProfile;
use crate::error::{Error, Result};
use crate::palcore::{Factorization, UnitKind};

/// The word of non-zero `m(n)` values on `w[i..j]`, with their positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Code {
    #[serde(serialize_with = "digits")]
    pub letters: Vec<u8>,
    pub anchors: Vec<usize>,
    pub interval: (usize, usize),
}

fn digits<S: Serializer>(letters: &[u8], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&letters.iter().map(|d| char::from(b'0' + d)).collect::<String>())
}

impl Code {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `n_0 = i - 1`.
    pub fn origin(&self) -> usize {
        self.interval.0 - 1
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|d| write!(f, "{d}"))
    }
}

pub fn code(profile: &MeasureProfile, i: usize, j: usize) -> Result<Code> {
    profile.check(i, j)?;
    let mut letters = Vec::new();
    let mut anchors = Vec::new();
    for n in i..=j {
        let m = profile.at(n);
        if m != 0 {
            letters.push(m);
            anchors.push(n);
        }
    }
    Ok(Code { letters, anchors, interval: (i, j) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarCode {
    pub letters: String,
    pub stars: usize,
}

impl StarCode {
    /// The code letters with the stars removed.
    pub fn unstarred(&self) -> String {
        self.letters.chars().filter(|&c| c != '*').collect()
    }
}

impl fmt::Display for StarCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.letters)
    }
}

/// Inserts a star before `a_h` for every boundary `b` of `f` with
/// `n_{h-1} <= b < n_h`; boundaries at or past the last anchor give stars
/// after the last letter.
pub fn star_code(code: &Code, f: &Factorization) -> Result<StarCode> {
    if f.kind != UnitKind::Palindromic {
        return Err(Error::InvalidFactorization("star codes need a palindromic factorization".into()));
    }
    let (i, j) = code.interval;
    if let Some(&b) = f.boundaries.iter().find(|&&b| b + 1 < i || b > j) {
        return Err(Error::InvalidFactorization(format!("boundary {b} lies outside {}..={j}", i - 1)));
    }
    let mut before = vec![0usize; code.len() + 1];
    for &b in &f.boundaries {
        let h = code.anchors.partition_point(|&n| n <= b);
        before[h] += 1;
    }
    let mut letters = String::with_capacity(code.len() + f.boundaries.len());
    for (h, stars) in before.iter().enumerate() {
        letters.extend(std::iter::repeat_n('*', *stars));
        if let Some(d) = code.letters.get(h) {
            letters.push(char::from(b'0' + d));
        }
    }
    Ok(StarCode { letters, stars: f.boundaries.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::runs::measure_profile;
    use crate::words::{Word, WordSource};

    fn sierpinski25() -> Word {
        WordSource::sierpinski().prefix(25).unwrap()
    }

    #[test]
    fn sierpinski_code_and_stars() {
        let s = sierpinski25();
        let p = measure_profile(&s, 3).unwrap();
        let c = code(&p, 1, 25).unwrap();
        assert_eq!(c.to_string(), "111111");
        assert_eq!(c.anchors, vec![4, 6, 10, 18, 22, 24]);
        assert_eq!(c.origin(), 0);
        let f = Factorization::from_boundaries(&s, UnitKind::Palindromic, vec![0, 3, 5, 22]).unwrap();
        let sc = star_code(&c, &f).unwrap();
        assert_eq!(sc.letters, "**1*1111*1");
        assert_eq!(sc.stars, f.len() + 1);
        assert_eq!(sc.unstarred(), c.to_string());
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"letters":"111111","anchors":[4,6,10,18,22,24],"interval":[1,25]}"#);
    }

    #[test]
    fn single_boundary_gives_leading_star() {
        let s = sierpinski25();
        let c = code(&measure_profile(&s, 3).unwrap(), 1, 25).unwrap();
        let f = Factorization::from_boundaries(&s, UnitKind::Palindromic, vec![0]).unwrap();
        assert_eq!(star_code(&c, &f).unwrap().letters, "*111111");
    }

    #[test]
    fn trailing_stars_and_errors() {
        let s = sierpinski25();
        let p = measure_profile(&s, 3).unwrap();
        let c = code(&p, 1, 25).unwrap();
        let f = crate::palcore::min_decomposition(&s, UnitKind::Palindromic).unwrap();
        let sc = star_code(&c, &f).unwrap();
        assert!(sc.letters.ends_with("1*"));
        assert_eq!(sc.stars, f.len() + 1);
        let inner = code(&p, 5, 20).unwrap();
        assert_eq!(inner.anchors, vec![6, 10, 18]);
        assert!(star_code(&inner, &f).is_err());
        let g = Factorization::from_boundaries(&s, UnitKind::Privileged, vec![0, 1]).unwrap();
        assert!(star_code(&c, &g).is_err());
    }

    #[test]
    fn code_of_measure_example() {
        let v: Word = "111000100010000".parse().unwrap();
        let p = measure_profile(&v, 3).unwrap();
        let c = code(&p, 1, 15).unwrap();
        assert_eq!(c.to_string(), "12111");
        assert_eq!(c.anchors, vec![1, 3, 12, 14, 15]);
        assert!(code(&p, 5, 11).unwrap().is_empty());
        assert!(code(&p, 4, 16).is_err());
    }
}
