use std::net::SocketAddr;

use nomen_core::model::DEFAULT_NAMESPACE;

pub const DEFAULT_MAX_DEPTH: usize = 3;
pub const DEFAULT_ADDR: &str = "127.0.0.1:8080";

#[derive(Debug, Clone)]
pub struct Config {
    /// Prefix for minted entity and nomen IRIs.
    pub namespace: String,
    pub default_lang: Option<String>,
    pub max_depth: usize,
    pub bind: SocketAddr,
    /// Allowed CORS origin; any origin when unset.
    pub cors_origin: Option<String>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            namespace: DEFAULT_NAMESPACE.to_string(),
            default_lang: None,
            max_depth: DEFAULT_MAX_DEPTH,
            bind: DEFAULT_ADDR.parse().unwrap(),
            cors_origin: None,
        }
    }
}
