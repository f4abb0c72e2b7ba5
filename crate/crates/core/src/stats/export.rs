use std::io::Write;
use std::str::FromStr;

use crate::bits;
use crate::error::{Error, Result};

/// On-disk encodings accepted by external test suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    /// Bytes packed MSB-first; a trailing partial byte is zero-padded.
    RawBytes,
    /// One `'0'`/`'1'` character per bit, no separators, trailing newline.
    Ascii01,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "raw" | "raw-bytes" => Ok(ExportFormat::RawBytes),
            "ascii" | "ascii-01" => Ok(ExportFormat::Ascii01),
            other => Err(format!("unknown stream format {other:?}")),
        }
    }
}

pub fn encode_stream(bits: &[u8], format: ExportFormat) -> Result<Vec<u8>> {
    if bits.is_empty() {
        return Err(Error::Config("refusing to export an empty stream".into()));
    }
    Ok(match format {
        ExportFormat::RawBytes => bits::pack_msb_first(bits),
        ExportFormat::Ascii01 => {
            let mut text = bits::to_ascii(bits).into_bytes();
            text.push(b'\n');
            text
        }
    })
}

pub fn export_stream(bits: &[u8], format: ExportFormat, mut out: impl Write) -> Result<()> {
    out.write_all(&encode_stream(bits, format)?)?;
    out.flush()?;
    Ok(())
}

pub fn import_stream(data: &[u8], format: ExportFormat) -> Result<Vec<u8>> {
    match format {
        ExportFormat::RawBytes => Ok(bits::unpack_msb_first(data)),
        ExportFormat::Ascii01 => {
            let text = std::str::from_utf8(data)
                .map_err(|e| Error::Config(format!("ascii stream is not UTF-8: {e}")))?;
            Ok(bits::parse_ascii(text)?)
        }
    }
}
