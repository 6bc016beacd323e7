//! LZ78 incremental parsing, cross-parsing against a reference sequence, and
//! the Ziv–Merhav relative entropy estimator built from the two counts.

use super::SymbolSeq;
use crate::error::{Error, Result};

/// Phrase spans `(start, length)` partitioning a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseResult {
    pub phrases: Vec<(usize, usize)>,
}

impl ParseResult {
    /// Number of phrases.
    pub fn phrase_count(&self) -> usize {
        self.phrases.len()
    }
}

/// LZ78 parsing: each phrase is the shortest prefix of the remaining input
/// that was not an earlier phrase. The last phrase may repeat an earlier one.
pub fn lz78_parse(z: &SymbolSeq) -> Result<ParseResult> {
    let s = z.symbols();
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    // binary trie of phrases; child index 0 means "absent" (0 is the root)
    let mut trie: Vec<[u32; 2]> = vec![[0, 0]];
    let mut phrases = Vec::new();
    let mut node = 0usize;
    let mut start = 0usize;
    for (i, &sym) in s.iter().enumerate() {
        let child = trie[node][sym as usize];
        if child != 0 {
            node = child as usize;
            continue;
        }
        trie.push([0, 0]);
        trie[node][sym as usize] = (trie.len() - 1) as u32;
        phrases.push((start, i + 1 - start));
        start = i + 1;
        node = 0;
    }
    if start < s.len() {
        phrases.push((start, s.len() - start));
    }
    Ok(ParseResult { phrases })
}

/// Suffix automaton over the binary alphabet; recognizes every substring.
struct SuffixAutomaton {
    next: Vec<[u32; 2]>,
    link: Vec<u32>,
    len: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl SuffixAutomaton {
    fn build(s: &[u8]) -> Self {
        let mut sam = Self {
            next: Vec::with_capacity(2 * s.len() + 1),
            link: Vec::with_capacity(2 * s.len() + 1),
            len: Vec::with_capacity(2 * s.len() + 1),
        };
        sam.push_state(0, NONE, [NONE, NONE]);
        let mut last = 0u32;
        for &sym in s {
            let c = sym as usize;
            let cur = sam.push_state(sam.len[last as usize] + 1, NONE, [NONE, NONE]);
            let mut p = last;
            while p != NONE && sam.next[p as usize][c] == NONE {
                sam.next[p as usize][c] = cur;
                p = sam.link[p as usize];
            }
            if p == NONE {
                sam.link[cur as usize] = 0;
            } else {
                let q = sam.next[p as usize][c];
                if sam.len[p as usize] + 1 == sam.len[q as usize] {
                    sam.link[cur as usize] = q;
                } else {
                    let clone = sam.push_state(
                        sam.len[p as usize] + 1,
                        sam.link[q as usize],
                        sam.next[q as usize],
                    );
                    while p != NONE && sam.next[p as usize][c] == q {
                        sam.next[p as usize][c] = clone;
                        p = sam.link[p as usize];
                    }
                    sam.link[q as usize] = clone;
                    sam.link[cur as usize] = clone;
                }
            }
            last = cur;
        }
        sam
    }

    fn push_state(&mut self, len: u32, link: u32, next: [u32; 2]) -> u32 {
        self.next.push(next);
        self.link.push(link);
        self.len.push(len);
        (self.next.len() - 1) as u32
    }

    /// Length of the longest prefix of `s` that occurs in the indexed text.
    fn longest_match(&self, s: &[u8]) -> usize {
        let mut state = 0usize;
        for (k, &sym) in s.iter().enumerate() {
            match self.next[state][sym as usize] {
                NONE => return k,
                t => state = t as usize,
            }
        }
        s.len()
    }
}

/// Sequential parsing of `z` against `x`: each phrase is the longest prefix of
/// the remaining `z` occurring as a substring of `x`, extended by one more
/// symbol when input remains. A phrase with no match is a single symbol.
pub fn cross_parse(z: &SymbolSeq, x: &SymbolSeq) -> Result<ParseResult> {
    if z.is_empty() || x.is_empty() {
        return Err(Error::EmptyInput);
    }
    let sam = SuffixAutomaton::build(x.symbols());
    let s = z.symbols();
    let mut phrases = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let matched = sam.longest_match(&s[i..]);
        let len = (matched + 1).min(s.len() - i);
        phrases.push((i, len));
        i += len;
    }
    Ok(ParseResult { phrases })
}

/// Ziv–Merhav estimate of `D(q||p)` from `z ~ q` and `x ~ p`:
/// `(1/n) [c(z|x) log2 n - c(z) log2 c(z)]`.
pub fn zm_estimate(z: &SymbolSeq, x: &SymbolSeq) -> Result<f64> {
    if z.is_empty() || x.is_empty() {
        return Err(Error::EmptyInput);
    }
    if z.len() != x.len() {
        return Err(Error::DimensionMismatch(z.len(), x.len()));
    }
    let n = z.len();
    if n < 2 {
        return Err(Error::SampleTooShort(n, 2));
    }
    let cross = cross_parse(z, x)?.phrase_count() as f64;
    let own = lz78_parse(z)?.phrase_count() as f64;
    let nf = n as f64;
    Ok((cross * nf.log2() - own * own.log2()) / nf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coding::{relative_entropy, sample_iid, ProbDist};
    use proptest::prelude::*;

    fn seq(s: &str) -> SymbolSeq {
        SymbolSeq::from_bits_str(s).unwrap()
    }

    // naive oracle: scans every window of x
    fn naive_longest_match(s: &[u8], x: &[u8]) -> usize {
        let mut best = 0;
        for start in 0..x.len() {
            let l = s
                .iter()
                .zip(&x[start..])
                .take_while(|(a, b)| a == b)
                .count();
            best = best.max(l);
        }
        best
    }

    fn naive_cross_parse(z: &[u8], x: &[u8]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < z.len() {
            let len = (naive_longest_match(&z[i..], x) + 1).min(z.len() - i);
            out.push((i, len));
            i += len;
        }
        out
    }

    #[test]
    fn lz78_alternating() {
        let r = lz78_parse(&seq("0101010101")).unwrap();
        assert_eq!(
            r.phrases,
            vec![(0, 1), (1, 1), (2, 2), (4, 3), (7, 2), (9, 1)]
        );
        assert_eq!(r.phrase_count(), 6);
    }

    #[test]
    fn lz78_phrases_are_distinct_except_last() {
        let z = sample_iid(&ProbDist::uniform(2), 5000, 4).unwrap();
        let r = lz78_parse(&z).unwrap();
        let s = z.symbols();
        let mut seen = std::collections::HashSet::new();
        let last = r.phrases.len() - 1;
        let mut covered = 0;
        for (k, &(start, len)) in r.phrases.iter().enumerate() {
            assert_eq!(start, covered);
            covered += len;
            let inserted = seen.insert(&s[start..start + len]);
            if k != last {
                assert!(inserted);
                // every proper prefix was seen before
                if len > 1 {
                    assert!(seen.contains(&s[start..start + len - 1]));
                }
            }
        }
        assert_eq!(covered, s.len());
    }

    #[test]
    fn cross_parse_self_and_disjoint() {
        let z = sample_iid(&ProbDist::new(vec![0.7, 0.3]).unwrap(), 2000, 8).unwrap();
        let own = lz78_parse(&z).unwrap().phrase_count();
        let cross = cross_parse(&z, &z).unwrap().phrase_count();
        assert_eq!(cross, 1);
        assert!(cross <= own);

        let n = 64;
        let ones = SymbolSeq::new(vec![1; n]).unwrap();
        let zeros = SymbolSeq::new(vec![0; n]).unwrap();
        assert_eq!(cross_parse(&ones, &zeros).unwrap().phrase_count(), n);
    }

    #[test]
    fn cross_parse_small_example() {
        // z = 0110 against x = 011: longest match "011", extended by "0"
        assert_eq!(
            cross_parse(&seq("0110"), &seq("011")).unwrap().phrases,
            vec![(0, 4)]
        );
        // z = 111 against x = 10: match "1", extended to "11"; then "1"
        assert_eq!(
            cross_parse(&seq("111"), &seq("10")).unwrap().phrases,
            vec![(0, 2), (2, 1)]
        );
    }

    #[test]
    fn empty_inputs() {
        let empty = SymbolSeq::new(vec![]).unwrap();
        assert_eq!(lz78_parse(&empty).unwrap_err(), Error::EmptyInput);
        assert_eq!(
            cross_parse(&empty, &seq("0")).unwrap_err(),
            Error::EmptyInput
        );
        assert_eq!(
            zm_estimate(&seq("0"), &empty).unwrap_err(),
            Error::EmptyInput
        );
        assert_eq!(
            zm_estimate(&seq("0"), &seq("1")).unwrap_err(),
            Error::SampleTooShort(1, 2)
        );
        assert!(zm_estimate(&seq("01"), &seq("1")).is_err());
    }

    #[test]
    fn estimator_orders_divergent_sources() {
        let n = 1 << 14;
        let q = ProbDist::new(vec![0.9, 0.1]).unwrap();
        let p = ProbDist::uniform(2);
        assert!((relative_entropy(&q, &p).unwrap() - 0.531_004_406_410_719).abs() < 1e-12);
        let z = sample_iid(&q, n, 1).unwrap();
        let x = sample_iid(&p, n, 2).unwrap();
        let same = sample_iid(&p, n, 3).unwrap();
        let far = zm_estimate(&z, &x).unwrap();
        let near = zm_estimate(&same, &x).unwrap();
        assert!(far > near + 0.3, "far {far} near {near}");
    }

    proptest! {
        #[test]
        fn suffix_automaton_matches_naive(
            z in proptest::collection::vec(0u8..2, 1..80),
            x in proptest::collection::vec(0u8..2, 1..80),
        ) {
            let got = cross_parse(&SymbolSeq::new(z.clone()).unwrap(), &SymbolSeq::new(x.clone()).unwrap()).unwrap();
            prop_assert_eq!(got.phrases, naive_cross_parse(&z, &x));
        }
    }
}
