use std::fmt;
use std::str::FromStr;

use crate::enumerate::SizeGuard;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    /// (0, 1)
    N,
    /// (1, 1)
    D,
    /// (1, 0)
    E,
}

impl Step {
    fn letter(self) -> char {
        match self {
            Step::N => 'N',
            Step::D => 'D',
            Step::E => 'E',
        }
    }
}

/// A lattice path from the origin that never drops below y = x and ends on
/// it. Its size is #N + #D.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SchroderPath {
    steps: Vec<Step>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PathStats {
    pub size: usize,
    pub peaks: usize,
    pub components: usize,
    pub indecomposable: bool,
}

impl SchroderPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut excess: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::N => excess += 1,
                Step::E => excess -= 1,
                Step::D => {}
            }
            if excess < 0 {
                return Err(Error::InvalidPath {
                    position: i + 1,
                    reason: "drops below the diagonal".into(),
                });
            }
        }
        if excess != 0 {
            return Err(Error::InvalidPath {
                position: steps.len(),
                reason: format!("ends {excess} unit(s) above the diagonal"),
            });
        }
        Ok(SchroderPath { steps })
    }

    pub fn empty() -> Self {
        SchroderPath::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn size(&self) -> usize {
        self.steps.iter().filter(|s| **s != Step::E).count()
    }

    /// Number of adjacent N E pairs.
    pub fn peaks(&self) -> usize {
        self.steps
            .windows(2)
            .filter(|w| w[0] == Step::N && w[1] == Step::E)
            .count()
    }

    /// The maximal pieces between consecutive returns to the diagonal.
    pub fn components(&self) -> Vec<SchroderPath> {
        let mut out = Vec::new();
        let mut start = 0;
        let mut excess = 0i64;
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::N => excess += 1,
                Step::E => excess -= 1,
                Step::D => {}
            }
            if excess == 0 {
                out.push(SchroderPath {
                    steps: self.steps[start..=i].to_vec(),
                });
                start = i + 1;
            }
        }
        out
    }

    pub fn stats(&self) -> PathStats {
        let components = self.components().len();
        PathStats {
            size: self.size(),
            peaks: self.peaks(),
            components,
            indecomposable: components == 1,
        }
    }

    pub fn at_most_one_peak_per_component(&self) -> bool {
        self.components().iter().all(|c| c.peaks() <= 1)
    }
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.steps.iter().map(|s| s.letter()).collect();
        f.write_str(&s)
    }
}

impl FromStr for SchroderPath {
    type Err = Error;

    /// Uppercase step letters, e.g. `"NDENE"`.
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'N' => Ok(Step::N),
                'D' => Ok(Step::D),
                'E' => Ok(Step::E),
                other => Err(Error::InvalidPath {
                    position: i + 1,
                    reason: format!("unknown step {other:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        SchroderPath::new(steps)
    }
}

fn generate(
    n: usize,
    ups: usize,
    excess: usize,
    steps: &mut Vec<Step>,
    out: &mut Vec<SchroderPath>,
) {
    if ups == n && excess == 0 {
        out.push(SchroderPath {
            steps: steps.clone(),
        });
        return;
    }
    if ups < n {
        steps.push(Step::N);
        generate(n, ups + 1, excess + 1, steps, out);
        steps.pop();
        steps.push(Step::D);
        generate(n, ups + 1, excess, steps, out);
        steps.pop();
    }
    if excess > 0 {
        steps.push(Step::E);
        generate(n, ups, excess - 1, steps, out);
        steps.pop();
    }
}

/// All Schröder paths of size n, in lexicographic order of their step words
/// (N < D < E).
pub fn enumerate_paths(n: usize, guard: SizeGuard) -> Result<Vec<SchroderPath>> {
    guard.check(n)?;
    let mut out = Vec::new();
    generate(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    Ok(out)
}

/// Peak statistics over all Schröder paths of one size.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PeakCensus {
    pub n: usize,
    pub total: u64,
    /// by_peaks[k] = number of paths with exactly k peaks.
    pub by_peaks: Vec<u64>,
    /// indecomposable_by_peaks[k] = number of indecomposable paths with k peaks.
    pub indecomposable_by_peaks: Vec<u64>,
    /// Paths in which every component has at most one peak.
    pub at_most_one_peak_per_component: u64,
}

impl PeakCensus {
    pub fn with_peaks(&self, k: usize) -> u64 {
        self.by_peaks.get(k).copied().unwrap_or(0)
    }

    pub fn indecomposable_with_peaks(&self, k: usize) -> u64 {
        self.indecomposable_by_peaks.get(k).copied().unwrap_or(0)
    }
}

pub fn peak_census(n: usize, guard: SizeGuard) -> Result<PeakCensus> {
    let paths = enumerate_paths(n, guard)?;
    let mut census = PeakCensus {
        n,
        total: paths.len() as u64,
        by_peaks: vec![0; n + 1],
        indecomposable_by_peaks: vec![0; n + 1],
        at_most_one_peak_per_component: 0,
    };
    for p in &paths {
        let stats = p.stats();
        census.by_peaks[stats.peaks] += 1;
        if stats.indecomposable {
            census.indecomposable_by_peaks[stats.peaks] += 1;
        }
        if p.at_most_one_peak_per_component() {
            census.at_most_one_peak_per_component += 1;
        }
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> SchroderPath {
        s.parse().unwrap()
    }

    #[test]
    fn stats_examples() {
        assert_eq!(
            path("NNEE").stats(),
            PathStats {
                size: 2,
                peaks: 1,
                components: 1,
                indecomposable: true
            }
        );
        assert_eq!(
            path("D").stats(),
            PathStats {
                size: 1,
                peaks: 0,
                components: 1,
                indecomposable: true
            }
        );
        let s = path("NENE").stats();
        assert_eq!((s.peaks, s.components, s.indecomposable), (2, 2, false));
        let e = SchroderPath::empty().stats();
        assert_eq!((e.size, e.components, e.indecomposable), (0, 0, false));
    }

    #[test]
    fn invalid_paths_report_first_violation() {
        assert!(matches!(
            "NEEN".parse::<SchroderPath>(),
            Err(Error::InvalidPath { position: 3, .. })
        ));
        assert!(matches!(
            "NNE".parse::<SchroderPath>(),
            Err(Error::InvalidPath { position: 3, .. })
        ));
        assert!(matches!(
            "NXE".parse::<SchroderPath>(),
            Err(Error::InvalidPath { position: 2, .. })
        ));
    }

    #[test]
    fn size_two_paths() {
        let mut got: Vec<String> = enumerate_paths(2, SizeGuard::default())
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        got.sort();
        let mut want = vec!["DD", "DNE", "NED", "NDE", "NNEE", "NENE"];
        want.sort();
        assert_eq!(got, want);
        let zero = enumerate_paths(0, SizeGuard::default()).unwrap();
        assert_eq!(zero, vec![SchroderPath::empty()]);
    }

    #[test]
    fn large_schroder_numbers() {
        let expected = [1u64, 2, 6, 22, 90, 394, 1806, 8558];
        for (n, &r) in expected.iter().enumerate() {
            assert_eq!(
                enumerate_paths(n, SizeGuard::default()).unwrap().len() as u64,
                r
            );
        }
        assert!(enumerate_paths(11, SizeGuard::default()).is_err());
    }

    #[test]
    fn census_small() {
        let c = peak_census(2, SizeGuard::default()).unwrap();
        assert_eq!((c.with_peaks(0), c.with_peaks(1)), (2, 3));
        let c = peak_census(3, SizeGuard::default()).unwrap();
        assert_eq!((c.with_peaks(0), c.with_peaks(1)), (5, 10));
        let c = peak_census(1, SizeGuard::default()).unwrap();
        // NE has its peak, D has none
        assert_eq!(
            (
                c.indecomposable_with_peaks(0),
                c.indecomposable_with_peaks(1)
            ),
            (1, 1)
        );
    }
}
