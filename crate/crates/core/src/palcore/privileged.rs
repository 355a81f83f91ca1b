//! Privileged words by border climbing.
//!
//! If `u` is a complete first return to `v`, then `v` is the longest proper
//! border of `u`: a longer border would carry a third occurrence of `v`. So
//! `u` (with `|u| >= 2`) is privileged iff its longest proper border `b` is
//! non-empty and privileged and occurs in `u` only as prefix and suffix.

use crate::words::Symbol;

/// Fills `flags[l]` (for `l` in `0..=u.len()`) with whether `u[..l]` is
/// privileged. Linear time.
pub fn privileged_prefix_flags(u: &[Symbol], flags: &mut Vec<bool>) {
    let n = u.len();
    flags.clear();
    flags.resize(n + 1, true);
    if n < 2 {
        return;
    }
    let mut border = vec![0usize; n];
    // first_end[b]: smallest end e >= b with border[e] >= b, i.e. the end of
    // the second occurrence of u[..b]. Monotone in b, so it fills left to right.
    let mut first_end = vec![usize::MAX; n + 1];
    let mut filled = 0usize;
    for e in 1..n {
        let mut k = border[e - 1];
        while k > 0 && u[e] != u[k] {
            k = border[k - 1];
        }
        if u[e] == u[k] {
            k += 1;
        }
        border[e] = k;
        while filled < k {
            filled += 1;
            first_end[filled] = e;
        }
        flags[e + 1] = k > 0 && flags[k] && first_end[k] == e;
    }
}

pub fn is_privileged(u: &[Symbol]) -> bool {
    let mut flags = Vec::new();
    privileged_prefix_flags(u, &mut flags);
    flags[u.len()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Word;
    use proptest::prelude::*;

    /// Literal recursive definition.
    fn oracle(u: &[Symbol]) -> bool {
        if u.len() <= 1 {
            return true;
        }
        (1..u.len()).any(|b| {
            let v = &u[..b];
            u.ends_with(v)
                && (0..=u.len() - b).filter(|&i| &u[i..i + b] == v).count() == 2
                && oracle(v)
        })
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert!(is_privileged(&w("00101100")));
        assert!(is_privileged(&w("00")));
        assert!(!is_privileged(&w("1231321")));
        assert!(!is_privileged(&w("00101100110100")));
        assert!(is_privileged(&w("a")));
        assert!(is_privileged(&[]));
        assert!(is_privileged(&w("aaaa")));
        assert!(!is_privileged(&w("01")));
    }

    proptest! {
        #[test]
        fn flags_match_definition(v in prop::collection::vec(0u16..3, 0..18)) {
            let u: Vec<Symbol> = v.into_iter().map(Symbol).collect();
            let mut flags = Vec::new();
            privileged_prefix_flags(&u, &mut flags);
            for l in 0..=u.len() {
                prop_assert_eq!(flags[l], oracle(&u[..l]), "prefix {}", l);
            }
        }
    }
}
