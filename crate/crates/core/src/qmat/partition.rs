use std::fmt;

use crate::{Error, Result};

/// Ordered list of disjoint subsystem-index groups covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    groups: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(groups: Vec<Vec<usize>>, n_subsystems: usize) -> Result<Self> {
        let mut seen = vec![false; n_subsystems];
        for g in &groups {
            if g.is_empty() {
                return Err(Error::InvalidPartition("empty group".into()));
            }
            for &i in g {
                if i >= n_subsystems {
                    return Err(Error::InvalidPartition(format!(
                        "subsystem {i} out of range for {n_subsystems} subsystems"
                    )));
                }
                if seen[i] {
                    return Err(Error::InvalidPartition(format!(
                        "subsystem {i} appears in more than one group"
                    )));
                }
                seen[i] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!(
                "subsystem {missing} is not covered"
            )));
        }
        let groups = groups
            .into_iter()
            .map(|mut g| {
                g.sort_unstable();
                g
            })
            .collect();
        Ok(Self { groups })
    }

    /// Each subsystem is its own party.
    pub fn singletons(n_subsystems: usize) -> Self {
        Self {
            groups: (0..n_subsystems).map(|i| vec![i]).collect(),
        }
    }

    /// `0..n_a | n_a..n_a+n_b` for contiguous blocks.
    pub fn contiguous(sizes: &[usize]) -> Self {
        let mut start = 0;
        let groups = sizes
            .iter()
            .map(|&s| {
                let g: Vec<usize> = (start..start + s).collect();
                start += s;
                g
            })
            .collect();
        Self { groups }
    }

    /// Parses `"0,1|2"`-style syntax: groups separated by `|`, indices by `,`.
    pub fn parse(text: &str, n_subsystems: usize) -> Result<Self> {
        let mut groups = Vec::new();
        for part in text.split('|') {
            let mut g = Vec::new();
            for tok in part.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    continue;
                }
                let i = tok.parse::<usize>().map_err(|_| {
                    Error::InvalidPartition(format!("bad subsystem index {tok:?} in {text:?}"))
                })?;
                g.push(i);
            }
            groups.push(g);
        }
        Self::new(groups, n_subsystems)
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn n_subsystems(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }

    /// Same groups in reverse order; swaps the roles of A and B.
    pub fn swapped(&self) -> Self {
        let mut groups = self.groups.clone();
        groups.reverse();
        Self { groups }
    }

    pub(crate) fn expect_groups(&self, k: usize, dims_len: usize) -> Result<()> {
        if self.groups.len() != k {
            return Err(Error::InvalidPartition(format!(
                "expected {k} groups, got {}",
                self.groups.len()
            )));
        }
        if self.n_subsystems() != dims_len {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} subsystems but the state has {dims_len}",
                self.n_subsystems()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .groups
            .iter()
            .map(|g| g.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", s.join("|"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = Partition::parse("0,2|1,3", 4).unwrap();
        assert_eq!(p.groups(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(p.to_string(), "0,2|1,3");
    }

    #[test]
    fn rejects_overlap_and_gaps() {
        assert!(Partition::parse("0,1|1", 2).is_err());
        assert!(Partition::parse("0|2", 3).is_err());
        assert!(Partition::parse("0|x", 2).is_err());
        assert!(Partition::parse("0|", 1).is_err());
    }
}
