//! Exhaustive and sampled generation of coalitional rankings.
//!
//! A ranking over `n` individuals is an ordered set partition of the
//! `m = 2^n − 1` coalitions, so there are `a(m)` of them, the ordered Bell
//! (Fubini) number.
//!
//! Exhaustive order: the top class is chosen first, running through the
//! nonempty subsets of the remaining coalitions in lexicographic order of
//! their sorted mask tuples, and the rest of the ranking is enumerated
//! recursively under each choice. Fixing the top class therefore selects a
//! contiguous block of the stream, which is how sweeps split work.

use num_bigint::{BigUint, RandBigInt};
use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{all_coalitions, coalition_count, Coalition, CoalitionalRanking};

/// Largest `n` accepted for exhaustive enumeration.
pub const MAX_EXHAUSTIVE: usize = 4;

/// Largest `n` accepted for sampling.
pub const MAX_SAMPLED: usize = 8;

/// Ordered Bell number `a(m)`.
pub fn fubini(m: usize) -> BigUint {
    fubini_table(m).pop().expect("table has m + 1 entries")
}

/// `a(0), ..., a(m)`.
pub fn fubini_table(m: usize) -> Vec<BigUint> {
    let mut a: Vec<BigUint> = Vec::with_capacity(m + 1);
    a.push(BigUint::from(1u32));
    for j in 1..=m {
        let mut binom = BigUint::from(1u32);
        let mut total = BigUint::from(0u32);
        for k in 1..=j {
            binom = binom * (j - k + 1) / k;
            total += &binom * &a[j - k];
        }
        a.push(total);
    }
    a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Exhaustive,
    Sample { count: u64, seed: u64 },
}

fn check_size(n: usize, mode: Mode) -> Result<()> {
    if n == 0 {
        return Err(Error::UniverseTooSmall {
            n,
            min: 1,
            what: "enumeration",
        });
    }
    let (max, what) = match mode {
        Mode::Exhaustive => (MAX_EXHAUSTIVE, "exhaustive enumeration"),
        Mode::Sample { .. } => (MAX_SAMPLED, "sampling"),
    };
    if n > max {
        return Err(Error::UniverseTooLarge { n, max, what });
    }
    Ok(())
}

/// Every ranking over `n` individuals, each exactly once, in canonical order.
pub fn enumerate_rankings(n: usize) -> Result<RankingStream> {
    RankingStream::new(n, Mode::Exhaustive)
}

/// The choices of top class, in stream order.
pub fn top_class_choices(n: usize) -> Result<Vec<Vec<Coalition>>> {
    check_size(n, Mode::Exhaustive)?;
    let all: Vec<Coalition> = all_coalitions(n).collect();
    let mut out = Vec::new();
    let mut pick = vec![0];
    loop {
        out.push(pick.iter().map(|&i| all[i]).collect());
        if !next_subset(&mut pick, all.len()) {
            return Ok(out);
        }
    }
}

/// Advances `pick` to the next nonempty index subset of `0..m` in
/// lexicographic order. Returns false once exhausted.
fn next_subset(pick: &mut Vec<usize>, m: usize) -> bool {
    let last = *pick.last().expect("pick is nonempty");
    if last + 1 < m {
        pick.push(last + 1);
        return true;
    }
    pick.pop();
    match pick.last_mut() {
        Some(prev) => {
            *prev += 1;
            true
        }
        None => false,
    }
}

struct Frame {
    remaining: Vec<Coalition>,
    pick: Vec<usize>,
}

impl Frame {
    fn new(remaining: Vec<Coalition>) -> Self {
        Self {
            remaining,
            pick: vec![0],
        }
    }

    fn chosen(&self) -> Vec<Coalition> {
        self.pick.iter().map(|&i| self.remaining[i]).collect()
    }

    fn rest(&self) -> Vec<Coalition> {
        let mut keep = vec![true; self.remaining.len()];
        for &i in &self.pick {
            keep[i] = false;
        }
        self.remaining
            .iter()
            .zip(keep)
            .filter_map(|(&c, k)| k.then_some(c))
            .collect()
    }
}

struct Exhaustive {
    n: usize,
    frames: Vec<Frame>,
    /// Frames below this depth are never advanced.
    floor: usize,
    fresh: bool,
}

impl Exhaustive {
    fn advance(&mut self) -> bool {
        while self.frames.len() > self.floor {
            let top = self.frames.last_mut().expect("frames above floor");
            let m = top.remaining.len();
            if next_subset(&mut top.pick, m) {
                return true;
            }
            self.frames.pop();
        }
        false
    }

    fn next_ranking(&mut self) -> Option<CoalitionalRanking> {
        if !self.fresh && !self.advance() {
            self.frames.clear();
            return None;
        }
        self.fresh = false;
        if self.frames.is_empty() {
            return None;
        }
        loop {
            let rest = self.frames.last().expect("nonempty").rest();
            if rest.is_empty() {
                break;
            }
            self.frames.push(Frame::new(rest));
        }
        let classes = self.frames.iter().map(Frame::chosen).collect();
        Some(CoalitionalRanking::assemble(self.n, classes))
    }
}

/// Weighted sampler over weak orders of up to `m` items.
pub struct Sampler {
    fubini: Vec<BigUint>,
}

impl Sampler {
    pub fn new(max_items: usize) -> Self {
        Self {
            fubini: fubini_table(max_items),
        }
    }

    /// A uniformly random ranking over `n` individuals.
    pub fn sample(&self, n: usize, rng: &mut ChaCha8Rng) -> CoalitionalRanking {
        let mut remaining: Vec<Coalition> = all_coalitions(n).collect();
        assert!(
            remaining.len() < self.fubini.len(),
            "sampler table too small"
        );
        let mut classes = Vec::new();
        while !remaining.is_empty() {
            let m = remaining.len();
            let k = self.top_size(m, rng);
            let mut chosen: Vec<usize> = index::sample(rng, m, k).into_vec();
            chosen.sort_unstable();
            let mut class = Vec::with_capacity(k);
            for &i in chosen.iter().rev() {
                class.push(remaining.remove(i));
            }
            classes.push(class);
        }
        CoalitionalRanking::assemble(n, classes)
    }

    /// Draws `k` with probability `C(m,k)·a(m−k)/a(m)`.
    fn top_size(&self, m: usize, rng: &mut ChaCha8Rng) -> usize {
        let mut r = rng.gen_biguint_below(&self.fubini[m]);
        let mut binom = BigUint::from(1u32);
        for k in 1..=m {
            binom = binom * (m - k + 1) / k;
            let weight = &binom * &self.fubini[m - k];
            if r < weight {
                return k;
            }
            r -= weight;
        }
        unreachable!("weights sum to a(m)")
    }
}

/// The generator for sample `index` of a stream seeded with `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A uniformly random ranking; the same seed always gives the same ranking.
pub fn sample_ranking(n: usize, seed: u64) -> Result<CoalitionalRanking> {
    check_size(n, Mode::Sample { count: 1, seed })?;
    Ok(Sampler::new(coalition_count(n)).sample(n, &mut sample_rng(seed, 0)))
}

enum Cursor {
    Exhaustive(Exhaustive),
    Sample {
        sampler: Sampler,
        seed: u64,
        next: u64,
        count: u64,
    },
}

/// Lazy stream of rankings over one universe.
pub struct RankingStream {
    n: usize,
    mode: Mode,
    cursor: Cursor,
}

impl RankingStream {
    pub fn new(n: usize, mode: Mode) -> Result<Self> {
        check_size(n, mode)?;
        let cursor = match mode {
            Mode::Exhaustive => Cursor::Exhaustive(Exhaustive {
                n,
                frames: vec![Frame::new(all_coalitions(n).collect())],
                floor: 0,
                fresh: true,
            }),
            Mode::Sample { count, seed } => Cursor::Sample {
                sampler: Sampler::new(coalition_count(n)),
                seed,
                next: 0,
                count,
            },
        };
        Ok(Self { n, mode, cursor })
    }

    /// The block of the exhaustive stream whose top class is `top`.
    pub fn with_top_class(n: usize, top: &[Coalition]) -> Result<Self> {
        check_size(n, Mode::Exhaustive)?;
        let all: Vec<Coalition> = all_coalitions(n).collect();
        let mut pick = Vec::with_capacity(top.len());
        for c in top {
            let i = all
                .binary_search(c)
                .map_err(|_| Error::OutOfUniverse(c.to_string()))?;
            pick.push(i);
        }
        pick.sort_unstable();
        pick.dedup();
        if pick.is_empty() || pick.len() != top.len() {
            return Err(Error::InvalidUniverse(
                "top class must be a nonempty set of coalitions".into(),
            ));
        }
        Ok(Self {
            n,
            mode: Mode::Exhaustive,
            cursor: Cursor::Exhaustive(Exhaustive {
                n,
                frames: vec![Frame {
                    remaining: all,
                    pick,
                }],
                floor: 1,
                fresh: true,
            }),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }
}

impl Iterator for RankingStream {
    type Item = CoalitionalRanking;

    fn next(&mut self) -> Option<CoalitionalRanking> {
        match &mut self.cursor {
            Cursor::Exhaustive(e) => e.next_ranking(),
            Cursor::Sample {
                sampler,
                seed,
                next,
                count,
            } => {
                if *next >= *count {
                    return None;
                }
                let r = sampler.sample(self.n, &mut sample_rng(*seed, *next));
                *next += 1;
                Some(r)
            }
        }
    }
}
