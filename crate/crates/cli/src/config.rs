use clusterpos::rootsys::{RootSystem, WeylWord};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Numeric,
    Symbolic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Job settings as they appear in a config file or inlined in an input file.
/// Every field is optional so that layers can be merged.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutations: Option<Vec<i32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
}

impl JobConfig {
    /// Fields set in `over` win.
    pub fn merge(self, over: JobConfig) -> JobConfig {
        JobConfig {
            family: over.family.or(self.family),
            rank: over.rank.or(self.rank),
            k: over.k.or(self.k),
            word: over.word.or(self.word),
            mutations: over.mutations.or(self.mutations),
            mode: over.mode.or(self.mode),
            format: over.format.or(self.format),
        }
    }

    /// Validates against the root system and fills in the default word.
    pub fn resolve(self) -> Result<Job, CliError> {
        let family = self
            .family
            .ok_or_else(|| CliError::Input("missing family (use --family or a config file)".into()))?;
        let rank = self
            .rank
            .ok_or_else(|| CliError::Input("missing rank (use --rank or a config file)".into()))?;
        let rs = RootSystem::build(&family, rank)?;
        let mut k = self.k.unwrap_or_default();
        k.sort_unstable();
        k.dedup();
        let word = match self.word {
            Some(w) => WeylWord(w),
            None => rs.adapted_longest_word(&k)?,
        };
        rs.word_indexing(&word, &k)?;
        Ok(Job {
            rs,
            word,
            k,
            mutations: self.mutations.unwrap_or_default(),
            mode: self.mode.unwrap_or_default(),
            format: self.format.unwrap_or_default(),
        })
    }
}

/// A validated job.
#[derive(Debug, Clone)]
pub struct Job {
    pub rs: RootSystem,
    pub word: WeylWord,
    pub k: Vec<usize>,
    pub mutations: Vec<i32>,
    pub mode: Mode,
    pub format: Format,
}
