//! Versioned JSON format for character tables.

use std::sync::Arc;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::{CharacterTable, ClassFunction, ClassInfo};
use crate::error::{Error, Result};
use crate::fqlinalg::Cyclotomic;

pub const FORMAT: &str = "endotriv-character-table";
pub const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassDoc {
    order: u64,
    size: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PowerMapDoc {
    prime: u64,
    map: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    format: String,
    version: u32,
    fingerprint: String,
    group_order: u64,
    classes: Vec<ClassDoc>,
    power_maps: Vec<PowerMapDoc>,
    /// Values are power-basis coefficient vectors of Q(z_n) for this `n`
    /// (halved when it is 2 mod 4).
    conductor: u64,
    rows: Vec<Vec<Vec<String>>>,
}

fn parse_rational(s: &str) -> Result<Rational64> {
    let bad = || Error::SchemaError(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if b == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(a, b))
        }
        None => Ok(Rational64::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

pub fn export_table(t: &CharacterTable) -> serde_json::Value {
    let info = t.info();
    let n = t.conductor() as u32;
    let doc = TableDoc {
        format: FORMAT.into(),
        version: VERSION,
        fingerprint: info.fingerprint.clone(),
        group_order: info.group_order,
        classes: info.orders.iter().zip(&info.sizes).map(|(&order, &size)| ClassDoc { order, size }).collect(),
        power_maps: info.power_maps.iter().map(|(p, m)| PowerMapDoc { prime: *p, map: m.clone() }).collect(),
        conductor: t.conductor(),
        rows: t
            .irr()
            .iter()
            .map(|chi| {
                chi.values()
                    .iter()
                    .map(|v| v.coeffs_at(n).expect("value in conductor field").iter().map(|q| q.to_string()).collect())
                    .collect()
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("table serializes")
}

pub fn import_table(doc: &serde_json::Value) -> Result<CharacterTable> {
    let doc: TableDoc = serde_json::from_value(doc.clone()).map_err(|e| Error::SchemaError(e.to_string()))?;
    if doc.format != FORMAT || doc.version != VERSION {
        return Err(Error::SchemaError(format!("unsupported format {} v{}", doc.format, doc.version)));
    }
    let r = doc.classes.len();
    if doc.conductor == 0 || doc.conductor > u32::MAX as u64 || r == 0 {
        return Err(Error::SchemaError("empty table or bad conductor".into()));
    }
    if doc.power_maps.iter().any(|p| p.map.len() != r || p.map.iter().any(|&c| c >= r)) {
        return Err(Error::SchemaError("power map out of range".into()));
    }
    let info = Arc::new(ClassInfo {
        fingerprint: doc.fingerprint,
        group_order: doc.group_order,
        orders: doc.classes.iter().map(|c| c.order).collect(),
        sizes: doc.classes.iter().map(|c| c.size).collect(),
        power_maps: doc.power_maps.into_iter().map(|p| (p.prime, p.map)).collect(),
    });
    if info.sizes.iter().sum::<u64>() != info.group_order {
        return Err(Error::OrthogonalityError("class sizes do not sum to the group order".into()));
    }
    let mut irr = Vec::new();
    for row in doc.rows {
        if row.len() != r {
            return Err(Error::SchemaError("row length differs from class count".into()));
        }
        let values = row
            .iter()
            .map(|cs| {
                let q = cs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
                Cyclotomic::from_coeffs(doc.conductor as u32, q)
                    .ok_or_else(|| Error::SchemaError("coefficient vector has wrong length".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        irr.push(ClassFunction::new(info.clone(), values));
    }
    CharacterTable::from_parts(info, irr, doc.conductor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::spec::{build_group, GroupSpec};

    fn table(r: &str) -> CharacterTable {
        let g = build_group(&GroupSpec::recipe(r), u64::MAX).unwrap();
        CharacterTable::compute(&g, None).unwrap()
    }

    #[test]
    fn round_trips() {
        for r in ["A4", "A5"] {
            let t = table(r);
            let doc = export_table(&t);
            assert_eq!(import_table(&doc).unwrap(), t);
        }
        let doc = export_table(&table("A4"));
        assert_eq!(doc["rows"].as_array().unwrap().len(), 4);
        assert_eq!(doc["conductor"], 6);
    }

    #[test]
    fn tampered_table_is_rejected() {
        let mut doc = export_table(&table("A5"));
        doc["rows"][4][1][0] = serde_json::Value::String("2".into());
        assert!(matches!(import_table(&doc), Err(Error::OrthogonalityError(_))));
        let mut doc = export_table(&table("A4"));
        doc["version"] = 7.into();
        assert!(matches!(import_table(&doc), Err(Error::SchemaError(_))));
    }
}
