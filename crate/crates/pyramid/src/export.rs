use crate::laplacian::PyramidLevel;
use grid_core::{read_signal_file, write_signal_file, FormatError};
use std::path::Path;

/// Writes each level as a pair of plain-text signals plus a manifest.
///
/// The manifest lists one `approximation detail` file pair per line in
/// analysis order, so a directory round-trips without guessing names.
pub fn export_levels(dir: &Path, levels: &[PyramidLevel]) -> Result<(), FormatError> {
    std::fs::create_dir_all(dir).map_err(FormatError::Io)?;
    let mut manifest = String::new();
    for (i, level) in levels.iter().enumerate() {
        let approx_name = format!("approximation_{i}.txt");
        let detail_name = format!("detail_{i}.txt");
        write_signal_file(&dir.join(&approx_name), &level.approximation)?;
        write_signal_file(&dir.join(&detail_name), &level.detail)?;
        manifest.push_str(&format!("{approx_name} {detail_name}\n"));
    }
    std::fs::write(dir.join("manifest.txt"), manifest).map_err(FormatError::Io)
}

/// Reads back a directory written by `export_levels`.
pub fn import_levels(dir: &Path) -> Result<Vec<PyramidLevel>, FormatError> {
    let manifest = std::fs::read_to_string(dir.join("manifest.txt")).map_err(FormatError::Io)?;
    let mut levels = Vec::new();
    for line in manifest.lines().filter(|l| !l.trim().is_empty()) {
        let mut names = line.split_whitespace();
        let approx_name = names.next().ok_or(FormatError::MissingHeader("manifest entry"))?;
        let detail_name = names.next().ok_or(FormatError::MissingHeader("manifest entry"))?;
        levels.push(PyramidLevel {
            approximation: read_signal_file(&dir.join(approx_name))?,
            detail: read_signal_file(&dir.join(detail_name))?,
        });
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laplacian::{binomial_kernel, laplacian_pyramid};
    use grid_core::Signal;

    #[test]
    fn exported_levels_round_trip() {
        let f = Signal::from_f64_1d(&[3.0, 1.0, 4.0, 1.0, 5.0, 9.0]);
        let levels = laplacian_pyramid(&f, &binomial_kernel(), 2);
        let dir = std::env::temp_dir().join("pyramid-export-round-trip");
        export_levels(&dir, &levels).expect("writable temp dir");
        let back = import_levels(&dir).expect("manifest lists what was written");
        assert_eq!(back, levels);
        std::fs::remove_dir_all(&dir).expect("cleanup");
    }
}
