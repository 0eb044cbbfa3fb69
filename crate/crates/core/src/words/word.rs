use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use super::WordError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A word over `{x, y}`, packed one bit per letter (`y` = 1), most
/// significant bit first within each 64-bit block. Unused bits are zero.
///
/// Words are ordered by length, then height, then lexicographically with
/// `x < y`; this is the canonical term order for printing polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    len: usize,
    blocks: SmallVec<[u64; 2]>,
}

/// Run-length encoding of a word: the lengths of its maximal blocks of equal
/// letters together with the first letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub runs: Vec<usize>,
    /// `None` exactly for the trivial word.
    pub leading: Option<Letter>,
}

impl Signature {
    /// Rebuilds the word with alternating runs.
    pub fn to_word(&self) -> Word {
        match self.leading {
            None => Word::empty(),
            Some(l) => Word::from_runs(l, &self.runs),
        }
    }

    /// Positions `s` (0-based) with `i_{s-1} >= i_s < i_{s+1}`.
    pub fn valleys(&self) -> impl Iterator<Item = usize> + '_ {
        let r = &self.runs;
        (1..r.len().saturating_sub(1)).filter(move |&s| r[s - 1] >= r[s] && r[s] < r[s + 1])
    }

    /// No valley positions.
    pub fn is_irreducible(&self) -> bool {
        self.valleys().next().is_none()
    }

    /// Strictly increasing up to some peak, nonincreasing afterwards.
    pub fn is_unimodal(&self) -> bool {
        let r = &self.runs;
        let mut t = 0;
        while t + 1 < r.len() && r[t] < r[t + 1] {
            t += 1;
        }
        r[t..].windows(2).all(|w| w[0] >= w[1])
    }
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = Word::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Alternating runs starting with `leading`; zero-length runs are
    /// skipped, so neighbouring runs of the same letter merge.
    pub fn from_runs(leading: Letter, runs: &[usize]) -> Self {
        let mut w = Word::empty();
        let mut l = leading;
        for &n in runs {
            w.push_run(l, n);
            l = l.swap();
        }
        w
    }

    /// `l^n`.
    pub fn power(l: Letter, n: usize) -> Self {
        let mut w = Word::empty();
        w.push_run(l, n);
        w
    }

    pub fn x() -> Self {
        Self::power(Letter::X, 1)
    }

    pub fn y() -> Self {
        Self::power(Letter::Y, 1)
    }

    pub fn push(&mut self, l: Letter) {
        let (b, off) = (self.len / 64, self.len % 64);
        if off == 0 {
            self.blocks.push(0);
        }
        if l == Letter::Y {
            self.blocks[b] |= 1u64 << (63 - off);
        }
        self.len += 1;
    }

    pub fn push_run(&mut self, l: Letter, n: usize) {
        for _ in 0..n {
            self.push(l);
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Letter at 0-based position `i`.
    pub fn letter(&self, i: usize) -> Letter {
        assert!(i < self.len, "letter index out of range");
        if self.blocks[i / 64] >> (63 - i % 64) & 1 == 1 {
            Letter::Y
        } else {
            Letter::X
        }
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        (0..self.len).map(move |i| self.letter(i))
    }

    pub fn y_count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn x_count(&self) -> usize {
        self.len - self.y_count()
    }

    /// `(number of x, number of y)`.
    pub fn bidegree(&self) -> (usize, usize) {
        (self.x_count(), self.y_count())
    }

    /// Number of `x` minus number of `y`.
    pub fn height(&self) -> i64 {
        self.x_count() as i64 - self.y_count() as i64
    }

    /// `(h_0, ..., h_n)` where `h_i` is the height of the suffix after
    /// position `i`; `h_n = 0` and `h_0` is the height of the word.
    pub fn height_vector(&self) -> Vec<i64> {
        let mut h = vec![0i64; self.len + 1];
        for i in (0..self.len).rev() {
            h[i] = h[i + 1]
                + match self.letter(i) {
                    Letter::X => 1,
                    Letter::Y => -1,
                };
        }
        h
    }

    pub fn is_balanced(&self) -> bool {
        self.height() == 0
    }

    /// Palindromic height vector.
    pub fn is_height_symmetric(&self) -> bool {
        let h = self.height_vector();
        h.iter().eq(h.iter().rev())
    }

    /// Some suffix has negative height.
    pub fn is_nil(&self) -> bool {
        self.height_vector().iter().any(|&h| h < 0)
    }

    pub fn runs(&self) -> Vec<(Letter, usize)> {
        let mut out: Vec<(Letter, usize)> = Vec::new();
        for l in self.letters() {
            match out.last_mut() {
                Some((last, n)) if *last == l => *n += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }

    pub fn signature(&self) -> Signature {
        let runs = self.runs();
        Signature {
            leading: runs.first().map(|r| r.0),
            runs: runs.into_iter().map(|r| r.1).collect(),
        }
    }

    /// No valley `i_{s-1} >= i_s < i_{s+1}` in the signature.
    pub fn is_irreducible(&self) -> bool {
        self.signature().is_irreducible()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for l in other.letters() {
            w.push(l);
        }
        w
    }

    /// Letters `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word::from_letters((start..end).map(|i| self.letter(i)))
    }

    /// Image under the letter swap `x <-> y`.
    pub fn swap_letters(&self) -> Word {
        let mut w = self.clone();
        for (k, b) in w.blocks.iter_mut().enumerate() {
            let used = (self.len - 64 * k).min(64);
            let mask = if used == 64 { u64::MAX } else { !(u64::MAX >> used) };
            *b = !*b & mask;
        }
        w
    }

    pub fn reversed(&self) -> Word {
        Word::from_letters(self.letters().rev())
    }

    /// Compact form such as `xxyx`; the empty word is `1`.
    pub fn compact(&self) -> String {
        if self.is_empty() {
            return "1".into();
        }
        self.letters().map(Letter::as_char).collect()
    }

    /// All `2^n` words of length `n` in canonical order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = Word> {
        assert!(n < 64, "exhaustive enumeration limited to length < 64");
        (0u64..(1u64 << n)).map(move |bits| Word::from_letters((0..n).map(|i| {
            if bits >> (n - 1 - i) & 1 == 1 {
                Letter::Y
            } else {
                Letter::X
            }
        })))
    }

    /// All words with `nx` letters `x` and `ny` letters `y`.
    pub fn all_of_bidegree(nx: usize, ny: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut cur = Word::empty();
        fn rec(nx: usize, ny: usize, cur: &mut Word, out: &mut Vec<Word>) {
            if nx == 0 && ny == 0 {
                out.push(cur.clone());
                return;
            }
            for (l, left) in [(Letter::X, nx), (Letter::Y, ny)] {
                if left > 0 {
                    let saved = cur.clone();
                    cur.push(l);
                    if l == Letter::X {
                        rec(nx - 1, ny, cur, out);
                    } else {
                        rec(nx, ny - 1, cur, out);
                    }
                    *cur = saved;
                }
            }
        }
        rec(nx, ny, &mut cur, &mut out);
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.height().cmp(&other.height()))
            .then_with(|| self.blocks.cmp(&other.blocks))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exponent form joined by `·`, e.g. `x^2·y·x^3`; the empty word is `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .runs()
            .into_iter()
            .map(|(l, n)| {
                if n == 1 {
                    l.as_char().to_string()
                } else {
                    format!("{}^{n}", l.as_char())
                }
            })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.compact())
    }
}

/// Accepts compact words (`xyxx`), exponent form joined by `*`, `·` or
/// juxtaposition (`x^2*y*x^3`, `x^2y`), and `1` for the empty word.
impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "1" || t.is_empty() {
            return Ok(Word::empty());
        }
        let chars: Vec<char> = t.chars().filter(|c| !c.is_whitespace()).collect();
        let mut w = Word::empty();
        let mut i = 0;
        while i < chars.len() {
            let l = match chars[i] {
                'x' => Letter::X,
                'y' => Letter::Y,
                '*' | '·' => {
                    i += 1;
                    continue;
                }
                c => return Err(WordError::Parse(format!("unexpected {c:?} in word {s:?}"))),
            };
            i += 1;
            let mut n = 1usize;
            if chars.get(i) == Some(&'^') {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                n = digits
                    .parse()
                    .map_err(|_| WordError::Parse(format!("bad exponent in word {s:?}")))?;
            }
            w.push_run(l, n);
        }
        Ok(w)
    }
}
