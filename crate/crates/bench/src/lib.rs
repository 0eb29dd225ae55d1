//! Shared fixtures for the kernel benchmarks.

use std::sync::Arc;

use entwine_core::corpus;
use entwine_core::{EntwiningMap, HopfAlgebraData};

pub fn h4() -> Arc<HopfAlgebraData> {
    Arc::new(corpus::sweedler_h4())
}

pub fn yd_h4() -> Arc<EntwiningMap> {
    Arc::new(corpus::yd_datum(h4()))
}
