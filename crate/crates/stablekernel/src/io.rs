//! Reading theories and auction instances, writing JSON results.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};
use stablekernel_core::auction::AuctionInstance;
use stablekernel_core::syntax::parse_theory;
use stablekernel_core::{Interpretation, Theory, Weight};

/// A theory file failed to parse. Keeps the file name for the message.
#[derive(Debug, thiserror::Error)]
#[error("{path}:{error}")]
pub struct FileParseError {
    pub path: String,
    pub error: stablekernel_core::syntax::ParseError,
}

pub fn read_theory(path: &Path) -> anyhow::Result<Theory> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_theory(&text).map_err(|error| {
        FileParseError {
            path: path.display().to_string(),
            error,
        }
        .into()
    })
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ModelsJson {
    pub models: Vec<Vec<String>>,
}

impl ModelsJson {
    pub fn new(models: &[Interpretation]) -> Self {
        ModelsJson {
            models: models.iter().map(model_names).collect(),
        }
    }
}

pub fn model_names(m: &Interpretation) -> Vec<String> {
    m.iter().map(|a| a.name().to_string()).collect()
}

/// `{"models":[["p"],["q"]]}`
pub fn models_to_json(models: &[Interpretation]) -> String {
    serde_json::to_string(&ModelsJson::new(models)).expect("plain data serializes")
}

/// A weight in JSON: an integer or a string such as `"7/2"` or `"0.5"`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum WeightJson {
    Int(i64),
    Text(String),
}

impl WeightJson {
    fn to_weight(&self) -> anyhow::Result<Weight> {
        match self {
            WeightJson::Int(n) => Ok(Weight::from(*n)),
            WeightJson::Text(s) => Weight::parse(s.trim()).with_context(|| format!("invalid weight `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct BidJson {
    /// 0-based item indices.
    pub items: BTreeSet<usize>,
    pub value: WeightJson,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AuctionJson {
    pub bids: Vec<BidJson>,
    pub junk_cost: Vec<WeightJson>,
}

impl AuctionJson {
    pub fn to_instance(&self) -> anyhow::Result<AuctionInstance> {
        let inst = AuctionInstance {
            n_bids: self.bids.len(),
            n_items: self.junk_cost.len(),
            bid_items: self.bids.iter().map(|b| b.items.clone()).collect(),
            bid_value: self.bids.iter().map(|b| b.value.to_weight()).collect::<Result<_, _>>()?,
            junk_cost: self.junk_cost.iter().map(WeightJson::to_weight).collect::<Result<_, _>>()?,
        };
        if let Err(e) = inst.validate() {
            bail!("invalid auction: {e}");
        }
        Ok(inst)
    }
}

pub fn parse_auction(text: &str) -> anyhow::Result<AuctionInstance> {
    let raw: AuctionJson = serde_json::from_str(text).context("invalid auction JSON")?;
    raw.to_instance()
}

pub fn read_auction(path: &Path) -> anyhow::Result<AuctionInstance> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_auction(&text).with_context(|| path.display().to_string())
}

/// Accepted bids as `{b1,b3}`, 1-based like the atom names.
pub fn format_bids(bids: &BTreeSet<usize>) -> String {
    let names: Vec<String> = bids.iter().map(|j| format!("b{}", j + 1)).collect();
    format!("{{{}}}", names.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn models_json_shape() {
        let ms = [Interpretation::from_names(&["p"]), Interpretation::from_names(&["q"])];
        assert_eq!(models_to_json(&ms), r#"{"models":[["p"],["q"]]}"#);
        assert_eq!(models_to_json(&[]), r#"{"models":[]}"#);
        assert_eq!(models_to_json(&[Interpretation::new()]), r#"{"models":[[]]}"#);
    }

    #[test]
    fn auction_weights() {
        let inst = parse_auction(r#"{"bids":[{"items":[0],"value":"7/2"}],"junk_cost":["0.5"]}"#).unwrap();
        assert_eq!(inst.bid_value[0], Weight::new(7, 2));
        assert_eq!(inst.junk_cost[0], Weight::new(1, 2));
    }

    #[test]
    fn auction_rejects_bad_input() {
        assert!(parse_auction(r#"{"bids":[{"items":[1],"value":1}],"junk_cost":[0]}"#).is_err());
        assert!(parse_auction(r#"{"bids":[],"junk_cost":[-1]}"#).is_err());
        assert!(parse_auction(r#"{"bids":[],"junk_cost":["x"]}"#).is_err());
        assert!(parse_auction(r#"{"bids":[],"junk_cost":[],"extra":1}"#).is_err());
    }

    #[test]
    fn bids_format() {
        assert_eq!(format_bids(&[0, 2].into_iter().collect()), "{b1,b3}");
        assert_eq!(format_bids(&BTreeSet::new()), "{}");
    }
}
