//! Growable bitset over nonnegative integers, with the shift-or primitive
//! the sumset tables are built from.

const WORD: usize = 64;

#[derive(Clone, Debug, Default)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn significant(&self) -> &[u64] {
        let end = self
            .words
            .iter()
            .rposition(|&w| w != 0)
            .map_or(0, |i| i + 1);
        &self.words[..end]
    }
}

// Trailing zero words do not affect identity.
impl PartialEq for BitSet {
    fn eq(&self, other: &Self) -> bool {
        self.significant() == other.significant()
    }
}

impl Eq for BitSet {}

impl std::hash::Hash for BitSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.significant().hash(state);
    }
}

impl BitSet {
    /// Empty set able to hold `0..len` without reallocating.
    pub fn with_len(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn insert(&mut self, idx: usize) {
        let w = idx / WORD;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (idx % WORD);
    }

    pub fn remove(&mut self, idx: usize) {
        if let Some(word) = self.words.get_mut(idx / WORD) {
            *word &= !(1 << (idx % WORD));
        }
    }

    #[inline]
    pub fn contains(&self, idx: usize) -> bool {
        self.words
            .get(idx / WORD)
            .is_some_and(|w| w & (1 << (idx % WORD)) != 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD + bit)
            })
        })
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn max(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    /// `dst |= src << shift`, keeping only the words `dst` already has.
    pub(crate) fn or_shifted_into(dst: &mut [u64], src: &[u64], shift: usize) {
        let word_shift = shift / WORD;
        let bit_shift = shift % WORD;
        if word_shift >= dst.len() {
            return;
        }
        for i in (word_shift..dst.len()).rev() {
            let j = i - word_shift;
            let lo = src.get(j).copied().unwrap_or(0);
            let mut v = lo << bit_shift;
            if bit_shift != 0 && j > 0 {
                v |= src.get(j - 1).copied().unwrap_or(0) >> (WORD - bit_shift);
            }
            dst[i] |= v;
        }
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = BitSet::default();
        for x in iter {
            set.insert(x);
        }
        set
    }
}
