use super::{Partition, PartitionError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PartFilter {
    Any,
    /// Parts not divisible by the modulus.
    Regular(u32),
}

impl PartFilter {
    /// Largest admissible part `<= x`, for `x >= 1`. Part 1 is always admissible.
    fn largest_at_most(self, x: u32) -> u32 {
        match self {
            PartFilter::Any => x,
            PartFilter::Regular(t) if x % t == 0 => x - 1,
            PartFilter::Regular(_) => x,
        }
    }
}

/// Streams the partitions of `n` in descending lexicographic order.
///
/// The stream yields owned [`Partition`]s through [`Iterator`]; hot loops can use
/// [`PartitionStream::advance`] to borrow the current parts without allocating.
#[derive(Debug, Clone)]
pub struct PartitionStream {
    n: u32,
    filter: PartFilter,
    parts: Vec<u32>,
    started: bool,
    done: bool,
}

/// All partitions of `n`, each exactly once, largest first part first.
pub fn enumerate_partitions(n: u32) -> PartitionStream {
    PartitionStream::new(n, PartFilter::Any)
}

/// Partitions of `n` with no part divisible by `t`.
pub fn enumerate_t_regular(n: u32, t: u32) -> Result<PartitionStream, PartitionError> {
    if t < 2 {
        return Err(PartitionError::InvalidModulus(t));
    }
    Ok(PartitionStream::new(n, PartFilter::Regular(t)))
}

impl PartitionStream {
    fn new(n: u32, filter: PartFilter) -> Self {
        Self { n, filter, parts: Vec::with_capacity(n as usize), started: false, done: false }
    }

    pub fn weight(&self) -> u32 {
        self.n
    }

    /// Greedily appends admissible parts `<= cap` summing to `rem`.
    fn fill(&mut self, mut rem: u32, cap: u32) {
        while rem > 0 {
            let p = self.filter.largest_at_most(cap.min(rem));
            let reps = rem / p;
            self.parts.extend(std::iter::repeat(p).take(reps as usize));
            rem -= reps * p;
        }
    }

    /// Moves to the next partition and returns its parts.
    pub fn advance(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill(self.n, self.n);
            return Some(&self.parts);
        }
        // Strip trailing ones, then lower the last part that is > 1 and
        // refill the freed weight with parts no larger than the new value.
        let mut rem = 0u32;
        while let Some(&last) = self.parts.last() {
            if last == 1 {
                rem += 1;
                self.parts.pop();
            } else {
                break;
            }
        }
        match self.parts.pop() {
            None => {
                self.done = true;
                None
            }
            Some(v) => {
                let lowered = self.filter.largest_at_most(v - 1);
                self.parts.push(lowered);
                self.fill(rem + v - lowered, lowered);
                Some(&self.parts)
            }
        }
    }
}

impl Iterator for PartitionStream {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.advance().map(|parts| Partition::from_sorted(parts.to_vec()))
    }
}
