//! Suffix automaton over the binary alphabet.

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug)]
struct State {
    len: u32,
    link: u32,
    next: [u32; 2],
}

/// Online suffix automaton; at most `2n - 1` states for a word of length `n`.
#[derive(Clone, Debug)]
pub struct SuffixAutomaton {
    states: Vec<State>,
    last: u32,
}

impl Default for SuffixAutomaton {
    fn default() -> Self {
        Self::new()
    }
}

impl SuffixAutomaton {
    pub fn new() -> Self {
        SuffixAutomaton {
            states: vec![State { len: 0, link: NONE, next: [NONE; 2] }],
            last: 0,
        }
    }

    pub fn with_capacity(n: usize) -> Self {
        let mut sa = Self::new();
        sa.states.reserve(2 * n);
        sa
    }

    pub fn build(word: &[u8]) -> Self {
        let mut sa = Self::with_capacity(word.len());
        for &c in word {
            sa.push(c);
        }
        sa
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn push(&mut self, c: u8) {
        let c = usize::from(c & 1);
        let cur = self.states.len() as u32;
        let cur_len = self.states[self.last as usize].len + 1;
        self.states.push(State { len: cur_len, link: 0, next: [NONE; 2] });
        let mut p = self.last;
        while p != NONE && self.states[p as usize].next[c] == NONE {
            self.states[p as usize].next[c] = cur;
            p = self.states[p as usize].link;
        }
        if p != NONE {
            let q = self.states[p as usize].next[c];
            if self.states[p as usize].len + 1 == self.states[q as usize].len {
                self.states[cur as usize].link = q;
            } else {
                let clone = self.states.len() as u32;
                let mut st = self.states[q as usize];
                st.len = self.states[p as usize].len + 1;
                self.states.push(st);
                while p != NONE && self.states[p as usize].next[c] == q {
                    self.states[p as usize].next[c] = clone;
                    p = self.states[p as usize].link;
                }
                self.states[q as usize].link = clone;
                self.states[cur as usize].link = clone;
            }
        }
        self.last = cur;
    }

    /// `out[n]` = number of distinct factors of length `n`, for `0 <= n <= len`.
    ///
    /// Every state stands for the factors with lengths in
    /// `(len(link), len]`, each exactly once.
    pub fn factor_counts(&self) -> Vec<u64> {
        let total = self.states[self.last as usize].len as usize;
        let mut diff = vec![0i64; total + 2];
        for st in &self.states[1..] {
            let lo = self.states[st.link as usize].len as usize + 1;
            diff[lo] += 1;
            diff[st.len as usize + 1] -= 1;
        }
        let mut out = Vec::with_capacity(total + 1);
        out.push(1);
        let mut acc = 0i64;
        for d in &diff[1..=total] {
            acc += d;
            out.push(acc as u64);
        }
        out
    }

    /// Total number of distinct nonempty factors.
    pub fn distinct_factors(&self) -> u64 {
        self.states[1..]
            .iter()
            .map(|st| u64::from(st.len - self.states[st.link as usize].len))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn brute(word: &[u8]) -> Vec<u64> {
        let mut out = vec![1];
        for n in 1..=word.len() {
            out.push(word.windows(n).collect::<HashSet<_>>().len() as u64);
        }
        out
    }

    #[test]
    fn small_words() {
        let w = [1, 0, 1, 1, 0, 1, 0, 1];
        let sa = SuffixAutomaton::build(&w);
        assert_eq!(sa.factor_counts(), brute(&w));
        assert_eq!(sa.factor_counts()[3], 4);
        assert_eq!(sa.distinct_factors(), brute(&w).iter().skip(1).sum::<u64>());
    }

    #[test]
    fn unary_and_empty() {
        assert_eq!(SuffixAutomaton::build(&[]).factor_counts(), vec![1]);
        assert_eq!(SuffixAutomaton::build(&[0; 5]).factor_counts(), vec![1; 6]);
    }

    #[test]
    fn pseudo_random_words() {
        let mut x = 0x9e37_79b9_u32;
        for len in [1usize, 2, 7, 33, 120] {
            let w: Vec<u8> = (0..len)
                .map(|_| {
                    x ^= x << 13;
                    x ^= x >> 17;
                    x ^= x << 5;
                    (x & 1) as u8
                })
                .collect();
            assert_eq!(SuffixAutomaton::build(&w).factor_counts(), brute(&w));
            assert!(SuffixAutomaton::build(&w).num_states() < 2 * len.max(1) + 1);
        }
    }
}
