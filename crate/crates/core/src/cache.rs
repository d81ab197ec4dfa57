//! Shared kernel store: kernels are built once per (family, field) and
//! optionally persisted to a directory in a small binary format.
//!
//! File layout (little endian): magic `RDK1`, family tag `u8` (0 = gr,
//! 1 = flag), `k: u32`, `n: u32`, matrix `rows: u32`, `cols: u32`, the
//! matrix entries as `i64`, then `classes: u32` and for each class its
//! length `u32` followed by `(a: u32, b: u32)` member pairs.

use std::collections::HashMap;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::ideal::{Family, Kernel, MonomialIndex};
use crate::matching_field::MatchingField;

pub const CACHE_ENV: &str = "RICHDEGEN_CACHE_DIR";
const MAGIC: &[u8; 4] = b"RDK1";

type MemoryKey = (Family, Vec<Vec<i64>>);

#[derive(Debug, Default)]
pub struct KernelStore {
    dir: Option<PathBuf>,
    memory: Mutex<HashMap<MemoryKey, Arc<Kernel>>>,
}

impl KernelStore {
    pub fn in_memory() -> Self {
        KernelStore::default()
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        KernelStore { dir: Some(dir.into()), memory: Mutex::default() }
    }

    /// Uses `RICHDEGEN_CACHE_DIR` when set and nonempty.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_ENV) {
            Some(dir) if !dir.is_empty() => KernelStore::with_dir(dir),
            _ => KernelStore::in_memory(),
        }
    }

    pub fn get(&self, field: &MatchingField, family: Family) -> Result<Arc<Kernel>> {
        let key = (family, field.matrix().to_rows());
        if let Some(k) = self.memory.lock().unwrap().get(&key) {
            return Ok(Arc::clone(k));
        }
        let kernel = Arc::new(self.load_or_build(field, family)?);
        Ok(Arc::clone(self.memory.lock().unwrap().entry(key).or_insert(kernel)))
    }

    fn load_or_build(&self, field: &MatchingField, family: Family) -> Result<Kernel> {
        let Some(dir) = &self.dir else {
            return Kernel::build(field, family);
        };
        let path = dir.join(file_name(field, family));
        if let Ok(bytes) = fs::read(&path) {
            if let Ok(classes) = decode(&bytes, field, family) {
                return Kernel::from_classes(field, family, classes);
            }
        }
        let kernel = Kernel::build(field, family)?;
        write_atomic(&path, &encode(field, family, kernel.classes()))
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        Ok(kernel)
    }
}

fn file_name(field: &MatchingField, family: Family) -> String {
    // FNV-1a over the matrix, so custom matrices get distinct files
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for e in field.matrix().to_rows().concat() {
        for b in e.to_le_bytes() {
            h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
        }
    }
    let (k, n) = family_dims(family);
    format!("{}-k{k}-n{n}-{}-{h:016x}.rdk", family.label(), field.label())
}

fn family_dims(family: Family) -> (usize, usize) {
    match family {
        Family::Grassmannian { k, n } => (k, n),
        Family::Flag { n } => (0, n),
    }
}

fn header(field: &MatchingField, family: Family) -> Vec<u8> {
    let m = field.matrix();
    let (k, n) = family_dims(family);
    let mut out = MAGIC.to_vec();
    out.push(matches!(family, Family::Flag { .. }) as u8);
    for x in [k, n, m.rows(), m.cols()] {
        out.extend((x as u32).to_le_bytes());
    }
    for e in m.to_rows().concat() {
        out.extend(e.to_le_bytes());
    }
    out
}

fn encode(field: &MatchingField, family: Family, classes: &[Vec<MonomialIndex>]) -> Vec<u8> {
    let mut out = header(field, family);
    out.extend((classes.len() as u32).to_le_bytes());
    for class in classes {
        out.extend((class.len() as u32).to_le_bytes());
        for &(a, b) in class {
            out.extend(a.to_le_bytes());
            out.extend(b.to_le_bytes());
        }
    }
    out
}

fn decode(bytes: &[u8], field: &MatchingField, family: Family) -> io::Result<Vec<Vec<MonomialIndex>>> {
    let expected = header(field, family);
    if !bytes.starts_with(&expected) {
        return Err(io::Error::new(io::ErrorKind::InvalidData, "header mismatch"));
    }
    let mut rest = &bytes[expected.len()..];
    let mut u32_at = || -> io::Result<u32> {
        let mut buf = [0u8; 4];
        rest.read_exact(&mut buf)?;
        Ok(u32::from_le_bytes(buf))
    };
    let count = u32_at()?;
    let mut classes = Vec::with_capacity(count as usize);
    for _ in 0..count {
        let len = u32_at()?;
        let mut class = Vec::with_capacity(len as usize);
        for _ in 0..len {
            class.push((u32_at()?, u32_at()?));
        }
        classes.push(class);
    }
    if !rest.is_empty() {
        return Err(io::Error::new(io::ErrorKind::InvalidData, "trailing bytes"));
    }
    Ok(classes)
}

fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)
}
