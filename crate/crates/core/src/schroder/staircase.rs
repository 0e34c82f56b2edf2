//! Bounding staircases: the N/E/S outline traced by a permutation's
//! left-to-right maxima on the way up and right-to-left maxima on the way
//! down, and the bijection to Schröder paths of one size smaller.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use super::path::{SchroderPath, Step};
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum StairStep {
    N,
    E,
    S,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BoundingStaircase {
    steps: Vec<StairStep>,
    size: usize,
}

/// A maximal run of E steps: `len` steps at `height`, starting at x = `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct EastRun {
    x: usize,
    height: usize,
    len: usize,
    descending: bool,
}

fn east_runs(steps: &[StairStep]) -> Vec<EastRun> {
    let mut runs: Vec<EastRun> = Vec::new();
    let (mut x, mut y) = (0usize, 0usize);
    let mut seen_s = false;
    let mut prev = None;
    for &s in steps {
        match s {
            StairStep::N => y += 1,
            StairStep::S => {
                y -= 1;
                seen_s = true;
            }
            StairStep::E => {
                if prev == Some(StairStep::E) {
                    runs.last_mut().expect("run in progress").len += 1;
                } else {
                    runs.push(EastRun {
                        x,
                        height: y,
                        len: 1,
                        descending: seen_s,
                    });
                }
                x += 1;
            }
        }
        prev = Some(s);
    }
    runs
}

impl BoundingStaircase {
    /// Validates the step word: n steps of each kind, all N before all S,
    /// East runs at distinct heights, and the i-th N/S pair from the top at
    /// least i apart, the topmost exactly 1 apart.
    pub fn new(steps: Vec<StairStep>) -> Result<Self> {
        let count = |k: StairStep| steps.iter().filter(|s| **s == k).count();
        let n = count(StairStep::N);
        if n == 0 || count(StairStep::E) != n || count(StairStep::S) != n {
            return Err(Error::InvalidStaircase(format!(
                "need n >= 1 steps of each of N, E, S; got {} N, {} E, {} S",
                n,
                count(StairStep::E),
                count(StairStep::S)
            )));
        }
        if let (Some(last_n), Some(first_s)) = (
            steps.iter().rposition(|s| *s == StairStep::N),
            steps.iter().position(|s| *s == StairStep::S),
        ) {
            if last_n > first_s {
                return Err(Error::InvalidStaircase(format!(
                    "N step at {} follows the S step at {}",
                    last_n + 1,
                    first_s + 1
                )));
            }
        }
        let runs = east_runs(&steps);
        let mut heights = BTreeSet::new();
        for r in &runs {
            if !heights.insert(r.height) {
                return Err(Error::InvalidStaircase(format!(
                    "two East runs at height {}",
                    r.height
                )));
            }
        }
        // x coordinate of the N step into height h and the S step out of it
        let mut north_x = vec![0usize; n + 1];
        let mut south_x = vec![0usize; n + 1];
        let (mut x, mut y) = (0usize, 0usize);
        for s in &steps {
            match s {
                StairStep::N => {
                    y += 1;
                    north_x[y] = x;
                }
                StairStep::S => {
                    south_x[y] = x;
                    y -= 1;
                }
                StairStep::E => x += 1,
            }
        }
        for i in 1..=n {
            let h = n + 1 - i;
            let gap = south_x[h] - north_x[h];
            if gap < i || (i == 1 && gap != 1) {
                return Err(Error::InvalidStaircase(format!(
                    "N/S pair {i} from the top (height {h}) is {gap} apart"
                )));
            }
        }
        Ok(BoundingStaircase { steps, size: n })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn steps(&self) -> &[StairStep] {
        &self.steps
    }

    /// The staircase of any nonempty permutation.
    pub fn of_permutation(p: &Permutation) -> Result<Self> {
        let n = p.len();
        if n == 0 {
            return Err(Error::Precondition(
                "the empty permutation has no bounding staircase".into(),
            ));
        }
        let ext = p.extrema();
        let mut steps = Vec::with_capacity(3 * n);
        let mut height = 0;
        let lr = &ext.lr_max;
        for (k, &pos) in lr.iter().enumerate() {
            let v = p.at(pos);
            steps.extend(std::iter::repeat_n(StairStep::N, v - height));
            height = v;
            let next = lr.get(k + 1).copied().unwrap_or(pos + 1);
            steps.extend(std::iter::repeat_n(StairStep::E, next - pos));
        }
        let rl = &ext.rl_max;
        for (k, &pos) in rl.iter().enumerate() {
            let below = rl.get(k + 1).map(|&q| p.at(q)).unwrap_or(0);
            steps.extend(std::iter::repeat_n(StairStep::S, p.at(pos) - below));
            if let Some(&q) = rl.get(k + 1) {
                steps.extend(std::iter::repeat_n(StairStep::E, q - pos));
            }
        }
        BoundingStaircase::new(steps)
    }

    /// Fixed entries: LR maxima from ascending runs (left end of each run),
    /// RL maxima from descending runs (right end), keyed by 1-based position.
    fn slots(&self) -> Result<BTreeMap<usize, usize>> {
        let mut slots = BTreeMap::new();
        for r in east_runs(&self.steps) {
            let pos = if r.descending { r.x + r.len } else { r.x + 1 };
            if let Some(old) = slots.insert(pos, r.height) {
                if old != r.height {
                    return Err(Error::InvalidStaircase(format!(
                        "position {pos} would hold both {old} and {}",
                        r.height
                    )));
                }
            }
        }
        Ok(slots)
    }

    /// The lexicographically least permutation with this staircase: fixed
    /// slots first, then the free slots right to left, each taking the
    /// largest unused entry that does not become a new RL maximum.
    pub fn to_permutation(&self) -> Result<Permutation> {
        let n = self.size;
        let slots = self.slots()?;
        let mut unused: BTreeSet<usize> = (1..=n).collect();
        for v in slots.values() {
            unused.remove(v);
        }
        let mut values = vec![0usize; n];
        let mut right_max = 0;
        for pos in (1..=n).rev() {
            let v = match slots.get(&pos) {
                Some(&v) => v,
                None => {
                    let v = unused
                        .range(..right_max)
                        .next_back()
                        .copied()
                        .ok_or_else(|| {
                            Error::InvalidStaircase(format!("no entry fits free position {pos}"))
                        })?;
                    unused.remove(&v);
                    v
                }
            };
            values[pos - 1] = v;
            right_max = right_max.max(v);
        }
        let p = Permutation::new(values)?;
        if BoundingStaircase::of_permutation(&p)? != *self {
            return Err(Error::InvalidStaircase(format!(
                "greedy filling gives {p}, whose staircase differs"
            )));
        }
        Ok(p)
    }

    /// Moves each descending East run up to the ascending side at the same
    /// height (marking its first step), drops the final N E Sⁿ, and turns each
    /// marked N E corner into a D step.
    pub fn to_schroder(&self) -> Result<SchroderPath> {
        let first_s = self
            .steps
            .iter()
            .position(|s| *s == StairStep::S)
            .expect("validated staircase has S steps");
        let moved: BTreeMap<usize, usize> = east_runs(&self.steps)
            .into_iter()
            .filter(|r| r.descending)
            .map(|r| (r.height, r.len))
            .collect();

        // (step, marked) with the moved runs reinserted
        let mut word: Vec<(StairStep, bool)> = Vec::with_capacity(2 * self.size);
        let mut y = 0;
        for &s in &self.steps[..first_s] {
            word.push((s, false));
            if s == StairStep::N {
                y += 1;
                if let Some(&len) = moved.get(&y) {
                    word.push((StairStep::E, true));
                    word.extend(std::iter::repeat_n((StairStep::E, false), len - 1));
                }
            }
        }
        let tail = word.split_off(word.len() - 2);
        if tail != [(StairStep::N, false), (StairStep::E, false)] {
            return Err(Error::InvalidStaircase(
                "does not end its ascent with N E".into(),
            ));
        }

        let mut steps = Vec::with_capacity(word.len());
        let mut i = 0;
        while i < word.len() {
            let (s, _) = word[i];
            if s == StairStep::N && word.get(i + 1).is_some_and(|&(_, marked)| marked) {
                steps.push(Step::D);
                i += 2;
                continue;
            }
            steps.push(match s {
                StairStep::N => Step::N,
                StairStep::E => Step::E,
                StairStep::S => unreachable!("no S steps before the first S"),
            });
            i += 1;
        }
        SchroderPath::new(steps).map_err(|e| Error::InvalidStaircase(e.to_string()))
    }

    /// Inverse of [`BoundingStaircase::to_schroder`]; the staircase has size
    /// `path.size() + 1`.
    pub fn from_schroder(path: &SchroderPath) -> Result<Self> {
        let n = path.size() + 1;
        let mut word: Vec<(StairStep, bool)> = Vec::new();
        for s in path.steps() {
            match s {
                Step::N => word.push((StairStep::N, false)),
                Step::E => word.push((StairStep::E, false)),
                Step::D => word.extend([(StairStep::N, false), (StairStep::E, true)]),
            }
        }
        let mut ascent = Vec::with_capacity(2 * n);
        let mut moved: BTreeMap<usize, usize> = BTreeMap::new();
        let mut y = 0;
        let mut current_marked = None;
        for &(s, marked) in &word {
            match s {
                StairStep::N => {
                    y += 1;
                    current_marked = None;
                    ascent.push(s);
                }
                StairStep::E => {
                    if marked {
                        current_marked = Some(y);
                    }
                    match current_marked {
                        Some(h) => *moved.entry(h).or_insert(0) += 1,
                        None => ascent.push(s),
                    }
                }
                StairStep::S => unreachable!(),
            }
        }
        ascent.extend([StairStep::N, StairStep::E]);
        let mut steps = ascent;
        for h in (1..=n).rev() {
            steps.push(StairStep::S);
            if let Some(&len) = moved.get(&(h - 1)) {
                steps.extend(std::iter::repeat_n(StairStep::E, len));
            }
        }
        BoundingStaircase::new(steps)
    }
}

impl fmt::Display for BoundingStaircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .steps
            .iter()
            .map(|s| match s {
                StairStep::N => 'N',
                StairStep::E => 'E',
                StairStep::S => 'S',
            })
            .collect();
        f.write_str(&s)
    }
}

impl FromStr for BoundingStaircase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'N' => Ok(StairStep::N),
                'E' => Ok(StairStep::E),
                'S' => Ok(StairStep::S),
                other => Err(Error::InvalidStaircase(format!("unknown step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        BoundingStaircase::new(steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// N⁵E³N⁴E³N¹E¹S³E²S⁴E¹S³, the outline of 5 1 4 9 6 8 10 2 7 3.
    const FIGURE_STAIRCASE: &str = "NNNNNEEENNNNEEENESSSEESSSSESSS";

    #[test]
    fn staircase_of_the_ten_entry_example() {
        let p: Permutation = "5 1 4 9 6 8 10 2 7 3".parse().unwrap();
        let st = BoundingStaircase::of_permutation(&p).unwrap();
        assert_eq!(st.to_string(), FIGURE_STAIRCASE);
    }

    #[test]
    fn size_one() {
        let st = BoundingStaircase::of_permutation(&Permutation::identity(1)).unwrap();
        assert_eq!(st.to_string(), "NES");
        assert_eq!(st.to_permutation().unwrap(), Permutation::identity(1));
        assert_eq!(st.to_schroder().unwrap(), SchroderPath::empty());
        assert!(BoundingStaircase::of_permutation(&Permutation::empty()).is_err());
    }

    #[test]
    fn size_two_staircases_are_distinct() {
        let a = BoundingStaircase::of_permutation(&"1 2".parse().unwrap()).unwrap();
        let b = BoundingStaircase::of_permutation(&"2 1".parse().unwrap()).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.to_string(), "NENESS");
        assert_eq!(b.to_string(), "NNESES");
    }

    #[test]
    fn figure_staircase_maps_to_the_figure_path() {
        let st: BoundingStaircase = FIGURE_STAIRCASE.parse().unwrap();
        let path = st.to_schroder().unwrap();
        assert_eq!(path.to_string(), "NNDNNEEENDENNEEE");
        assert_eq!(path.size(), 9);
        assert_eq!(BoundingStaircase::from_schroder(&path).unwrap(), st);
    }

    #[test]
    fn greedy_fill_is_lexicographically_least() {
        let st: BoundingStaircase = FIGURE_STAIRCASE.parse().unwrap();
        let least = st.to_permutation().unwrap();
        // the example contains 3214 (5 4 2 7), so it is not the least one
        let original: Permutation = "5 1 4 9 6 8 10 2 7 3".parse().unwrap();
        assert!(least < original);
        assert!(least.avoids(&crate::classes::schroder_pair()));
        assert_eq!(BoundingStaircase::of_permutation(&least).unwrap(), st);
    }

    #[test]
    fn validation_errors() {
        assert!("NSE".parse::<BoundingStaircase>().is_err());
        assert!("ENS".parse::<BoundingStaircase>().is_err());
        // top pair two apart
        assert!("NNEESS".parse::<BoundingStaircase>().is_err());
        // S before N
        assert!("NESNES".parse::<BoundingStaircase>().is_err());
        assert!("NEX".parse::<BoundingStaircase>().is_err());
    }
}
