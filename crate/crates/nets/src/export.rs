//! Trace persistence for demos.

use crate::forward::UNetTrace;
use grid_core::{write_signal_file, FormatError};
use std::fs;
use std::path::Path;

/// Write every trace signal into `dir` with a manifest listing the
/// files in pass order.
pub fn export_trace(dir: &Path, trace: &UNetTrace) -> Result<(), FormatError> {
    fs::create_dir_all(dir)?;
    let mut manifest = String::new();
    for (i, level) in trace.encoder.iter().enumerate() {
        let name = format!("encoder_{i}.txt");
        write_signal_file(&dir.join(&name), level)?;
        manifest.push_str(&format!("encoder {i} {name}\n"));
    }
    for (i, skip) in trace.skips.iter().enumerate() {
        let name = format!("skip_{i}.txt");
        write_signal_file(&dir.join(&name), skip)?;
        manifest.push_str(&format!("skip {i} {name}\n"));
    }
    for (i, level) in trace.decoder.iter().enumerate() {
        let name = format!("decoder_{i}.txt");
        write_signal_file(&dir.join(&name), level)?;
        manifest.push_str(&format!("decoder {i} {name}\n"));
    }
    write_signal_file(&dir.join("output.txt"), &trace.output)?;
    manifest.push_str("output - output.txt\n");
    fs::write(dir.join("manifest.txt"), manifest)?;
    Ok(())
}
