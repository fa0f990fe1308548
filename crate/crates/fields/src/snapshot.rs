//! Binary snapshot format for scalar fields.
//!
//! Layout: an 8-byte magic `STRIEUL1`, then `nx` and `ny` as little-endian
//! u64, then `spacing`, `origin.x`, `origin.y` as little-endian f64 (48
//! header bytes total), followed by the row-major f64 payload.  Vector and
//! matrix fields are written as one file per component plane.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::{FieldError, Grid2, ScalarField2, Vec2};

pub const SNAPSHOT_MAGIC: &[u8; 8] = b"STRIEUL1";

pub fn write_scalar(path: &Path, field: &ScalarField2) -> Result<(), FieldError> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(SNAPSHOT_MAGIC)?;
    w.write_all(&(field.grid.nx as u64).to_le_bytes())?;
    w.write_all(&(field.grid.ny as u64).to_le_bytes())?;
    w.write_all(&field.grid.spacing.to_le_bytes())?;
    w.write_all(&field.grid.origin.x.to_le_bytes())?;
    w.write_all(&field.grid.origin.y.to_le_bytes())?;
    for v in &field.data {
        w.write_all(&v.to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}

fn read_u64(r: &mut impl Read) -> Result<u64, FieldError> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)?;
    Ok(u64::from_le_bytes(b))
}

fn read_f64(r: &mut impl Read) -> Result<f64, FieldError> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)?;
    Ok(f64::from_le_bytes(b))
}

pub fn read_scalar(path: &Path) -> Result<ScalarField2, FieldError> {
    let mut r = BufReader::new(File::open(path)?);
    let mut magic = [0u8; 8];
    r.read_exact(&mut magic)?;
    if &magic != SNAPSHOT_MAGIC {
        return Err(FieldError::BadSnapshot(format!(
            "bad magic {:?}",
            magic
        )));
    }
    let nx = read_u64(&mut r)? as usize;
    let ny = read_u64(&mut r)? as usize;
    let spacing = read_f64(&mut r)?;
    let ox = read_f64(&mut r)?;
    let oy = read_f64(&mut r)?;
    if nx.checked_mul(ny).is_none() || nx * ny > (1usize << 28) {
        return Err(FieldError::BadSnapshot(format!(
            "implausible dimensions {}x{}",
            nx, ny
        )));
    }
    let grid = Grid2::new(nx, ny, Vec2::new(ox, oy), spacing)
        .map_err(|e| FieldError::BadSnapshot(e.to_string()))?;
    let mut data = vec![0.0; nx * ny];
    for v in data.iter_mut() {
        *v = read_f64(&mut r)?;
    }
    ScalarField2::from_data(grid, data)
}
