//! JSON persistence of modules. Matrix entries are packed little-endian
//! `u32` words, base64 encoded, one string per generator.

use std::sync::Arc;

use base64::engine::general_purpose::STANDARD;
use base64::Engine;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fqlinalg::{FqMatrix, Gf2e};
use crate::group::PermGroup;

use super::ModuleRep;

pub const FORMAT: &str = "endotriv-module";
pub const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleDoc {
    format: String,
    version: u32,
    group: String,
    fingerprint: String,
    field_degree: u32,
    dim: usize,
    generators: Vec<String>,
}

pub fn save_module(m: &ModuleRep) -> serde_json::Value {
    let generators = m
        .gens()
        .iter()
        .map(|g| {
            let bytes: Vec<u8> = g.data().iter().flat_map(|x| x.to_le_bytes()).collect();
            STANDARD.encode(bytes)
        })
        .collect();
    let doc = ModuleDoc {
        format: FORMAT.into(),
        version: VERSION,
        group: m.group().name().into(),
        fingerprint: m.group().fingerprint(),
        field_degree: m.field().degree(),
        dim: m.dim(),
        generators,
    };
    serde_json::to_value(doc).expect("module document serializes")
}

/// Loads a module for `g`, checking the group fingerprint and the relations.
pub fn load_module(g: &Arc<PermGroup>, value: &serde_json::Value) -> Result<ModuleRep> {
    let doc: ModuleDoc = serde_json::from_value(value.clone()).map_err(|e| Error::SchemaError(e.to_string()))?;
    if doc.format != FORMAT || doc.version != VERSION {
        return Err(Error::SchemaError(format!("unknown format {} v{}", doc.format, doc.version)));
    }
    if doc.fingerprint != g.fingerprint() {
        return Err(Error::GroupMismatch);
    }
    let field = Gf2e::new(doc.field_degree)?;
    let mut gens = Vec::with_capacity(doc.generators.len());
    for s in &doc.generators {
        let bytes = STANDARD.decode(s).map_err(|e| Error::SchemaError(e.to_string()))?;
        if bytes.len() != 4 * doc.dim * doc.dim {
            return Err(Error::SchemaError("generator has the wrong number of entries".into()));
        }
        let data: Vec<u32> = bytes.chunks_exact(4).map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]])).collect();
        if data.iter().any(|&x| !field.contains(x)) {
            return Err(Error::SchemaError("entry outside the field".into()));
        }
        gens.push(FqMatrix::from_vec(&field, doc.dim, doc.dim, data));
    }
    ModuleRep::new(g.clone(), field, gens).map_err(|e| match e {
        Error::Invalid(s) => Error::SchemaError(s),
        e => e,
    })
}
