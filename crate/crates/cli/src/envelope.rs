use std::collections::BTreeMap;

use serde::{de::DeserializeOwned, Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

/// Wrapper around every JSON report. Parameters live in a sorted map so
/// identical invocations serialize to identical bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope<T> {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: T,
    pub schema_version: String,
}

impl<T: Serialize + DeserializeOwned> ReportEnvelope<T> {
    pub fn new(command: &str, parameters: BTreeMap<String, String>, results: T) -> Self {
        ReportEnvelope {
            command: command.to_string(),
            parameters,
            results,
            schema_version: SCHEMA_VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// Builds a parameter map from `(key, value)` pairs.
pub fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let env = ReportEnvelope::new("demo", params([("mod", "5".into())]), vec![1u64, 2, 3]);
        let json = env.to_json().unwrap();
        assert_eq!(ReportEnvelope::<Vec<u64>>::from_json(&json).unwrap(), env);
        assert!(json.contains("\"schema_version\": \"1\""));
    }
}
