// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

//! Synchronizing languages, reset words and desk-scale exhaustive searches.

mod search;
mod syn;

pub use search::{
    min_strongly_connected_search, reset_complexity_search, SearchLimits, SearchResult,
};
pub use syn::{
    is_synchronizing, shortest_reset_word, syn_language, verify_construction, SynConfig,
    SynReport, Verification,
};
