//! The fifteen top-level web directory topics used as the
//! classification label space.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A top-level directory topic.
///
/// The declaration order is the canonical order used for deterministic
/// tie-breaking throughout the re-ranking pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OdpTopic {
    Arts,
    Business,
    Computers,
    Games,
    Health,
    Home,
    News,
    Recreation,
    Reference,
    Regional,
    Science,
    Shopping,
    Society,
    Sports,
    KidsAndTeens,
}

impl OdpTopic {
    /// All topics in canonical order.
    pub const ALL: [OdpTopic; 15] = [
        OdpTopic::Arts,
        OdpTopic::Business,
        OdpTopic::Computers,
        OdpTopic::Games,
        OdpTopic::Health,
        OdpTopic::Home,
        OdpTopic::News,
        OdpTopic::Recreation,
        OdpTopic::Reference,
        OdpTopic::Regional,
        OdpTopic::Science,
        OdpTopic::Shopping,
        OdpTopic::Society,
        OdpTopic::Sports,
        OdpTopic::KidsAndTeens,
    ];

    /// Display name, as used in data files.
    pub const fn name(self) -> &'static str {
        match self {
            OdpTopic::Arts => "Arts",
            OdpTopic::Business => "Business",
            OdpTopic::Computers => "Computers",
            OdpTopic::Games => "Games",
            OdpTopic::Health => "Health",
            OdpTopic::Home => "Home",
            OdpTopic::News => "News",
            OdpTopic::Recreation => "Recreation",
            OdpTopic::Reference => "Reference",
            OdpTopic::Regional => "Regional",
            OdpTopic::Science => "Science",
            OdpTopic::Shopping => "Shopping",
            OdpTopic::Society => "Society",
            OdpTopic::Sports => "Sports",
            OdpTopic::KidsAndTeens => "Kids & Teens",
        }
    }
}

impl fmt::Display for OdpTopic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OdpTopic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        OdpTopic::ALL
            .iter()
            .find(|t| t.name() == trimmed)
            .copied()
            .ok_or_else(|| Error::InvalidInput(format!("unknown topic {s:?}")))
    }
}
