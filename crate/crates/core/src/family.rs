use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::region::ConvexRegion;

/// An ordered collection of uniquely labeled regions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub name: String,
    regions: Vec<ConvexRegion>,
}

impl Family {
    pub fn new(name: impl Into<String>, regions: Vec<ConvexRegion>) -> Result<Self> {
        let mut seen = HashSet::new();
        for r in &regions {
            if !seen.insert(r.label.as_str()) {
                return Err(Error::DuplicateLabel(r.label.clone()));
            }
        }
        Ok(Family {
            name: name.into(),
            regions,
        })
    }

    pub fn regions(&self) -> &[ConvexRegion] {
        &self.regions
    }

    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<&ConvexRegion> {
        self.regions.iter().find(|r| r.label == label)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.regions.iter().position(|r| r.label == label)
    }

    pub fn labels(&self) -> Vec<String> {
        self.regions.iter().map(|r| r.label.clone()).collect()
    }

    pub fn push(&mut self, region: ConvexRegion) -> Result<()> {
        if self.get(&region.label).is_some() {
            return Err(Error::DuplicateLabel(region.label));
        }
        self.regions.push(region);
        Ok(())
    }

    /// The first `n` regions.
    pub fn prefix(&self, n: usize) -> Family {
        Family {
            name: self.name.clone(),
            regions: self.regions[..n.min(self.regions.len())].to_vec(),
        }
    }

    /// Every region intersected with `clip`, labels kept.
    pub fn clipped(&self, name: impl Into<String>, clip: &ConvexRegion) -> Family {
        Family {
            name: name.into(),
            regions: self.regions.iter().map(|r| r.intersect(clip)).collect(),
        }
    }
}
