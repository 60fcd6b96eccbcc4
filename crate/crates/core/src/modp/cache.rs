//! On-disk cache of `S(n, k) mod p` rows.
//!
//! Layout (all integers little-endian):
//!
//! ```text
//! "STIR" | version: u8 | p: u64 | n_max: u64 | residues...
//! ```
//!
//! Residues follow row-major for rows `0..=n_max` (row `n` holds `n + 1`
//! values), each stored in `ceil(ceil(log2 p) / 8)` bytes.

use std::fs;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use super::prime::PrimeModulus;
use super::tables::stirling2_table_modp;
use crate::error::{Error, Result};
use crate::limits::Limits;

pub const MAGIC: &[u8; 4] = b"STIR";
pub const VERSION: u8 = 1;
const HEADER_LEN: usize = 4 + 1 + 8 + 8;

/// Bytes per stored residue for modulus `p`.
pub fn residue_width(p: PrimeModulus) -> usize {
    // ceil(log2 p) for p >= 2
    let bits = 64 - (p.get() - 1).leading_zeros() as usize;
    bits.div_ceil(8).max(1)
}

pub fn encode_rows<W: Write>(
    mut w: W,
    p: PrimeModulus,
    rows: impl IntoIterator<Item = Vec<u64>>,
    n_max: usize,
) -> Result<()> {
    let width = residue_width(p);
    w.write_all(MAGIC)?;
    w.write_all(&[VERSION])?;
    w.write_all(&p.get().to_le_bytes())?;
    w.write_all(&(n_max as u64).to_le_bytes())?;
    let mut written = 0;
    for (n, row) in rows.into_iter().take(n_max + 1).enumerate() {
        if row.len() != n + 1 {
            return Err(Error::InvalidArgument(format!(
                "row {n} has {} entries, expected {}",
                row.len(),
                n + 1
            )));
        }
        for v in row {
            w.write_all(&v.to_le_bytes()[..width])?;
        }
        written += 1;
    }
    if written != n_max + 1 {
        return Err(Error::InvalidArgument(format!(
            "expected {} rows, got {written}",
            n_max + 1
        )));
    }
    w.flush()?;
    Ok(())
}

/// Decodes a whole cache image, returning `(p, rows)`.
pub fn decode_rows<R: Read>(mut r: R) -> Result<(u64, Vec<Vec<u64>>)> {
    let mut header = [0u8; HEADER_LEN];
    r.read_exact(&mut header)
        .map_err(|_| corrupt("truncated header"))?;
    if &header[..4] != MAGIC {
        return Err(corrupt("bad magic"));
    }
    if header[4] != VERSION {
        return Err(corrupt("unsupported version"));
    }
    let p = u64::from_le_bytes(header[5..13].try_into().unwrap());
    let n_max = u64::from_le_bytes(header[13..21].try_into().unwrap()) as usize;
    let modulus = PrimeModulus::new(p).map_err(|_| corrupt("bad modulus"))?;
    let width = residue_width(modulus);
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = Vec::with_capacity(n + 1);
        for _ in 0..=n {
            let mut buf = [0u8; 8];
            r.read_exact(&mut buf[..width])
                .map_err(|_| corrupt("truncated body"))?;
            let v = u64::from_le_bytes(buf);
            if v >= p {
                return Err(corrupt("residue out of range"));
            }
            row.push(v);
        }
        rows.push(row);
    }
    Ok((p, rows))
}

fn corrupt(why: &str) -> Error {
    Error::Io(format!("corrupt stirling cache: {why}"))
}

/// Directory of per-prime cache files.
#[derive(Debug, Clone)]
pub struct StirlingCache {
    dir: PathBuf,
}

impl StirlingCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, p: PrimeModulus) -> PathBuf {
        self.dir.join(format!("stirling2_p{}.bin", p.get()))
    }

    /// Computes and stores rows `0..=n_max` for `p`.
    pub fn warm(&self, p: PrimeModulus, n_max: usize, limits: &Limits) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(p);
        let tmp = path.with_extension("bin.tmp");
        {
            let file = fs::File::create(&tmp)?;
            encode_rows(
                BufWriter::new(file),
                p,
                stirling2_table_modp(n_max, p, limits)?,
                n_max,
            )?;
        }
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    /// Rows `0..=n_max` when the cache for `p` covers them, `None` on a miss.
    pub fn load(&self, p: PrimeModulus, n_max: usize) -> Result<Option<Vec<Vec<u64>>>> {
        let path = self.path_for(p);
        let file = match fs::File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let (stored_p, mut rows) = decode_rows(BufReader::new(file))?;
        if stored_p != p.get() {
            return Err(corrupt("modulus does not match file name"));
        }
        if rows.len() <= n_max {
            return Ok(None);
        }
        rows.truncate(n_max + 1);
        Ok(Some(rows))
    }

    /// Rows from the cache, or computed (and stored) on a miss.
    pub fn rows(&self, p: PrimeModulus, n_max: usize, limits: &Limits) -> Result<Vec<Vec<u64>>> {
        if let Some(rows) = self.load(p, n_max)? {
            return Ok(rows);
        }
        self.warm(p, n_max, limits)?;
        Ok(stirling2_table_modp(n_max, p, limits)?.collect())
    }

    /// Removes every cache file in the directory; returns how many were deleted.
    pub fn clear(&self) -> Result<usize> {
        let entries = match fs::read_dir(&self.dir) {
            Ok(e) => e,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(e.into()),
        };
        let mut removed = 0;
        for entry in entries {
            let path = entry?.path();
            let name = path.file_name().and_then(|s| s.to_str()).unwrap_or("");
            if name.starts_with("stirling2_p") && name.ends_with(".bin") {
                fs::remove_file(&path)?;
                removed += 1;
            }
        }
        Ok(removed)
    }
}
