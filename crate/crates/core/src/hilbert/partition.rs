use std::fmt;

/// A partition as a nonincreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn has_odd_parts(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

fn rec(n: usize, max: usize, distinct: bool, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(n)).rev() {
        cur.push(p);
        rec(n - p, if distinct { p - 1 } else { p }, distinct, cur, out);
        cur.pop();
    }
}

/// All partitions of `n`, in reverse lexicographic order of parts.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    rec(n, n, false, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` into mutually distinct parts.
pub fn distinct_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    rec(n, n, true, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` into odd parts.
pub fn odd_partitions(n: usize) -> Vec<Partition> {
    partitions(n).into_iter().filter(Partition::has_odd_parts).collect()
}
