use std::fmt::Write as _;
use std::io::Read as _;
use std::path::Path;

use thiserror::Error;

use crate::ext_real::ExtReal;
use crate::signal::{Signal, SignalError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("missing header line {0}")]
    MissingHeader(&'static str),
    #[error("bad dimension header: {0:?}")]
    BadDimsHeader(String),
    #[error("bad extent token: {0:?}")]
    BadExtent(String),
    #[error("bad sample token: {0:?}")]
    BadSample(String),
    #[error("expected {expected} samples, got {got}")]
    SampleCount { expected: usize, got: usize },
    #[error("bad pgm magic: {0:?}")]
    BadMagic(String),
    #[error("pgm header ended early")]
    PgmHeaderTruncated,
    #[error("pgm maxval {0} out of range 1..=255")]
    PgmMaxval(u32),
    #[error("pgm pixel data truncated: expected {expected} bytes, got {got}")]
    PgmTruncated { expected: usize, got: usize },
    #[error(transparent)]
    Signal(#[from] SignalError),
}

fn parse_sample(tok: &str) -> Result<ExtReal, FormatError> {
    match tok {
        "-inf" => Ok(ExtReal::Bottom),
        "+inf" | "inf" => Ok(ExtReal::Top),
        _ => tok
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .map(ExtReal::Finite)
            .ok_or_else(|| FormatError::BadSample(tok.to_string())),
    }
}

/// Parses the plain signal format: `d <dims>`, extents line, row-major samples.
pub fn parse_signal_text(text: &str) -> Result<Signal, FormatError> {
    let mut lines = text.lines().filter(|l| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    });
    let dims_line = lines.next().ok_or(FormatError::MissingHeader("dims"))?.trim();
    let dims: usize = dims_line
        .strip_prefix("d ")
        .and_then(|r| r.trim().parse().ok())
        .ok_or_else(|| FormatError::BadDimsHeader(dims_line.to_string()))?;
    let extents_line = lines.next().ok_or(FormatError::MissingHeader("extents"))?;
    let extents: Vec<usize> = extents_line
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| FormatError::BadExtent(tok.to_string()))
        })
        .collect::<Result<_, _>>()?;
    let mut data = Vec::new();
    for line in lines {
        for tok in line.split_whitespace() {
            data.push(parse_sample(tok)?);
        }
    }
    let expected: usize = extents.iter().product();
    if data.len() != expected {
        return Err(FormatError::SampleCount {
            expected,
            got: data.len(),
        });
    }
    Ok(Signal::new(dims, &extents, data)?)
}

fn format_sample(v: ExtReal, out: &mut String) {
    match v {
        ExtReal::Bottom => out.push_str("-inf"),
        ExtReal::Top => out.push_str("+inf"),
        ExtReal::Finite(x) => {
            let _ = write!(out, "{}", x);
        }
    }
}

/// Writes the plain signal format; 2D signals get one row per line.
pub fn write_signal_text(f: &Signal) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "d {}", f.dims());
    let extents = f.extents();
    let _ = writeln!(out, "{}", extents.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "));
    let row_len = if f.dims() == 2 { extents[1] } else { f.len() };
    for (i, &v) in f.samples().iter().enumerate() {
        if i > 0 {
            out.push(if i % row_len == 0 { '\n' } else { ' ' });
        }
        format_sample(v, &mut out);
    }
    out.push('\n');
    out
}

pub fn read_signal_file(path: &Path) -> Result<Signal, FormatError> {
    let text = std::fs::read_to_string(path)?;
    parse_signal_text(&text)
}

pub fn write_signal_file(path: &Path, f: &Signal) -> Result<(), FormatError> {
    std::fs::write(path, write_signal_text(f))?;
    Ok(())
}

fn pgm_token(bytes: &[u8], pos: &mut usize) -> Result<String, FormatError> {
    loop {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
        if *pos < bytes.len() && bytes[*pos] == b'#' {
            while *pos < bytes.len() && bytes[*pos] != b'\n' {
                *pos += 1;
            }
            continue;
        }
        break;
    }
    let start = *pos;
    while *pos < bytes.len() && !bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
    if start == *pos {
        return Err(FormatError::PgmHeaderTruncated);
    }
    Ok(String::from_utf8_lossy(&bytes[start..*pos]).into_owned())
}

/// Parses a binary PGM (P5) image into a 2D signal with values 0..=maxval.
pub fn parse_pgm(bytes: &[u8]) -> Result<Signal, FormatError> {
    let mut pos = 0usize;
    let magic = pgm_token(bytes, &mut pos)?;
    if magic != "P5" {
        return Err(FormatError::BadMagic(magic));
    }
    let width: usize = pgm_token(bytes, &mut pos)?
        .parse()
        .map_err(|_| FormatError::PgmHeaderTruncated)?;
    let height: usize = pgm_token(bytes, &mut pos)?
        .parse()
        .map_err(|_| FormatError::PgmHeaderTruncated)?;
    let maxval: u32 = pgm_token(bytes, &mut pos)?
        .parse()
        .map_err(|_| FormatError::PgmHeaderTruncated)?;
    if maxval == 0 || maxval > 255 {
        return Err(FormatError::PgmMaxval(maxval));
    }
    pos += 1;
    let expected = width * height;
    let pixel = &bytes[pos.min(bytes.len())..];
    if pixel.len() < expected {
        return Err(FormatError::PgmTruncated {
            expected,
            got: pixel.len(),
        });
    }
    let data: Vec<ExtReal> = pixel[..expected]
        .iter()
        .map(|&b| ExtReal::Finite(b as f64))
        .collect();
    Ok(Signal::new(2, &[height, width], data)?)
}

/// Writes a binary PGM (P5); samples are clamped to 0..=255 and rounded.
pub fn write_pgm(f: &Signal) -> Vec<u8> {
    assert_eq!(f.dims(), 2, "pgm output needs a 2D signal");
    let [rows, cols] = [f.extents()[0], f.extents()[1]];
    let mut out = format!("P5\n{} {}\n255\n", cols, rows).into_bytes();
    out.extend(f.samples().iter().map(|v| match v {
        ExtReal::Bottom => 0u8,
        ExtReal::Top => 255u8,
        ExtReal::Finite(x) => x.round().clamp(0.0, 255.0) as u8,
    }));
    out
}

pub fn read_pgm_file(path: &Path) -> Result<Signal, FormatError> {
    let mut bytes = Vec::new();
    std::fs::File::open(path)?.read_to_end(&mut bytes)?;
    parse_pgm(&bytes)
}

pub fn write_pgm_file(path: &Path, f: &Signal) -> Result<(), FormatError> {
    std::fs::write(path, write_pgm(f))?;
    Ok(())
}
