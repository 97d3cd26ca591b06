//! Palindromic tree (eertree) over the binary alphabet.

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug)]
struct Node {
    /// Palindrome length; -1 for the imaginary root.
    len: i64,
    link: u32,
    next: [u32; 2],
}

/// Node 0 is the imaginary root (length -1), node 1 the empty palindrome.
/// Every other node is one distinct nonempty palindromic factor.
#[derive(Clone, Debug)]
pub struct Eertree {
    nodes: Vec<Node>,
    text: Vec<u8>,
    suffix: u32,
}

impl Default for Eertree {
    fn default() -> Self {
        Self::new()
    }
}

impl Eertree {
    pub fn new() -> Self {
        Eertree {
            nodes: vec![
                Node { len: -1, link: 0, next: [NONE; 2] },
                Node { len: 0, link: 0, next: [NONE; 2] },
            ],
            text: Vec::new(),
            suffix: 1,
        }
    }

    pub fn build(word: &[u8]) -> Self {
        let mut t = Self::new();
        t.text.reserve(word.len());
        for &c in word {
            t.push(c);
        }
        t
    }

    /// Number of distinct nonempty palindromic factors.
    pub fn distinct(&self) -> usize {
        self.nodes.len() - 2
    }

    fn extendable(&self, v: u32, c: u8) -> bool {
        let i = self.text.len() as i64 - 1;
        let j = i - self.nodes[v as usize].len - 1;
        j >= 0 && self.text[j as usize] == c
    }

    pub fn push(&mut self, c: u8) {
        let c = c & 1;
        self.text.push(c);
        let mut v = self.suffix;
        while !self.extendable(v, c) {
            v = self.nodes[v as usize].link;
        }
        let existing = self.nodes[v as usize].next[usize::from(c)];
        if existing != NONE {
            self.suffix = existing;
            return;
        }
        let len = self.nodes[v as usize].len + 2;
        let link = if len == 1 {
            1
        } else {
            let mut u = self.nodes[v as usize].link;
            while !self.extendable(u, c) {
                u = self.nodes[u as usize].link;
            }
            self.nodes[u as usize].next[usize::from(c)]
        };
        let id = self.nodes.len() as u32;
        self.nodes.push(Node { len, link, next: [NONE; 2] });
        self.nodes[v as usize].next[usize::from(c)] = id;
        self.suffix = id;
    }

    /// `out[n]` = number of distinct palindromic factors of length `n`,
    /// for `0 <= n <= len`, with the empty word counted at `n = 0`.
    pub fn palindrome_counts(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.text.len() + 1];
        out[0] = 1;
        for node in &self.nodes[2..] {
            out[node.len as usize] += 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn brute(word: &[u8]) -> Vec<u64> {
        let mut out = vec![1];
        for n in 1..=word.len() {
            let pals: HashSet<&[u8]> = word
                .windows(n)
                .filter(|w| w.iter().eq(w.iter().rev()))
                .collect();
            out.push(pals.len() as u64);
        }
        out
    }

    #[test]
    fn small_words() {
        for w in [&[1u8, 0, 1, 1, 0, 1, 0, 1][..], &[0, 0, 0], &[1], &[0, 1, 0, 0, 1, 0]] {
            assert_eq!(Eertree::build(w).palindrome_counts(), brute(w));
        }
        assert_eq!(Eertree::build(&[]).palindrome_counts(), vec![1]);
    }

    #[test]
    fn pseudo_random_words() {
        let mut x = 0x2545_f491_u32;
        for len in [5usize, 40, 200] {
            let w: Vec<u8> = (0..len)
                .map(|_| {
                    x ^= x << 13;
                    x ^= x >> 17;
                    x ^= x << 5;
                    (x >> 3 & 1) as u8
                })
                .collect();
            let t = Eertree::build(&w);
            assert_eq!(t.palindrome_counts(), brute(&w));
            assert!(t.distinct() <= len);
        }
    }
}
