//! JSON code descriptors. Everything needed to verify or repair a code is in
//! the file; nothing is recomputed from construction parameters on load.

use std::collections::HashSet;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::construct::{CodeParams, LrcCode, RecoverySets};
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldElement, FiniteField};
use crate::group::{GroupDescriptor, RecoveryGroup};
use crate::linalg::Matrix;
use crate::tower::{Place, TowerSpec, Variant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerDescriptor {
    pub variant: Variant,
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub field: FieldDescriptor,
    pub tower: TowerDescriptor,
    pub group1: GroupDescriptor,
    pub group2: GroupDescriptor,
    pub places: Vec<Vec<u32>>,
    pub generator_matrix: Vec<Vec<u32>>,
    pub recovery_sets: Vec<RecoverySets>,
    pub params: CodeParams,
}

impl CodeDescriptor {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Descriptor(e.to_string()))
    }
}

impl LrcCode {
    pub fn descriptor(&self) -> CodeDescriptor {
        let vals = |v: &[FieldElement]| v.iter().map(|x| x.value()).collect();
        CodeDescriptor {
            field: self.spec.field().descriptor(),
            tower: TowerDescriptor {
                variant: self.spec.variant(),
                m: self.spec.m(),
            },
            group1: self.groups[0].descriptor(),
            group2: self.groups[1].descriptor(),
            places: self.places.iter().map(|p| vals(&p.coords)).collect(),
            generator_matrix: (0..self.generator.rows())
                .map(|i| vals(self.generator.row(i)))
                .collect(),
            recovery_sets: self.recovery_sets.clone(),
            params: self.params,
        }
    }

    /// Rebuilds a code from a descriptor. Field, tower, groups, places and
    /// matrix shape are validated here; recovery sets are taken as given and
    /// judged by verification.
    pub fn from_descriptor(d: &CodeDescriptor) -> Result<Self> {
        let field = Arc::new(FiniteField::from_descriptor(&d.field)?);
        let spec = TowerSpec::new(d.tower.variant, field, d.tower.m)?;
        let f = spec.field();
        let h1 = RecoveryGroup::from_descriptor(&spec, &d.group1)?;
        let h2 = RecoveryGroup::from_descriptor(&spec, &d.group2)?;

        let n = d.params.n;
        if d.places.len() != n {
            return Err(Error::Descriptor(format!(
                "{} places listed but n = {n}",
                d.places.len()
            )));
        }
        let mut seen = HashSet::new();
        let mut places = Vec::with_capacity(n);
        for (index, raw) in d.places.iter().enumerate() {
            let coords = raw
                .iter()
                .map(|&v| f.element(v))
                .collect::<Result<Vec<_>>>()?;
            spec.check_place(&coords)
                .map_err(|e| Error::Descriptor(format!("place {index}: {e}")))?;
            if !seen.insert(coords.clone()) {
                return Err(Error::Descriptor(format!("place {index} is listed twice")));
            }
            places.push(Place { coords, index });
        }

        if d.generator_matrix.len() != d.params.k {
            return Err(Error::Descriptor(format!(
                "generator matrix has {} rows but k = {}",
                d.generator_matrix.len(),
                d.params.k
            )));
        }
        let mut rows = Vec::with_capacity(d.params.k);
        for (i, raw) in d.generator_matrix.iter().enumerate() {
            if raw.len() != n {
                return Err(Error::Descriptor(format!(
                    "generator row {i} has length {} but n = {n}",
                    raw.len()
                )));
            }
            rows.push(raw.iter().map(|&v| f.element(v)).collect::<Result<Vec<_>>>()?);
        }
        let generator = Matrix::from_rows(n, rows);
        if generator.rank(f) != d.params.k {
            return Err(Error::Descriptor("generator matrix is not of full row rank".into()));
        }
        if d.recovery_sets.len() != n {
            return Err(Error::Descriptor(format!(
                "{} recovery entries but n = {n}",
                d.recovery_sets.len()
            )));
        }
        if (d.params.r1, d.params.r2) != (h1.locality(), h2.locality()) {
            return Err(Error::Descriptor(
                "localities in params disagree with the group orders".into(),
            ));
        }

        Ok(LrcCode {
            spec,
            groups: [h1, h2],
            places,
            generator,
            recovery_sets: d.recovery_sets.clone(),
            params: d.params,
            construction: None,
        })
    }

    pub fn to_json(&self) -> String {
        self.descriptor().to_json()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Self::from_descriptor(&CodeDescriptor::from_json(s)?)
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json())
            .map_err(|e| Error::Descriptor(format!("{}: {e}", path.display())))
    }

    pub fn read_json(path: &Path) -> Result<Self> {
        let s = std::fs::read_to_string(path)
            .map_err(|e| Error::Descriptor(format!("{}: {e}", path.display())))?;
        Self::from_json(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{construct_lrc, ConstructOptions};
    use crate::field::square_field;
    use crate::group::{build_recovery_group, GroupParams};

    fn golden() -> LrcCode {
        let spec = TowerSpec::new(Variant::Gs96, Arc::new(square_field(3).unwrap()), 1).unwrap();
        let h1 = build_recovery_group(&spec, &GroupParams::AdditiveKernel).unwrap();
        let h2 = build_recovery_group(&spec, &GroupParams::Multiplicative { order: 2 }).unwrap();
        construct_lrc(&spec, &h1, &h2, 2, &ConstructOptions::default()).unwrap()
    }

    #[test]
    fn golden_json_layout() {
        let json = golden().to_json();
        assert!(json.starts_with(
            r#"{"field":{"p":3,"k":2,"modulus":[1,0,1]},"tower":{"variant":"gs96","m":1},"group1":{"kind":"additive","shifts":[0,3,6]},"group2":{"kind":"multiplicative","scalars":[1,2]},"places":[[1],[2],[4],[5],[7],[8]]"#
        ));
        assert!(json.contains(r#""recovery_sets":[{"coord":0,"set1":["#));
        assert!(json.ends_with(r#""params":{"n":6,"k":2,"d_designed":2,"r1":2,"r2":1}}"#));
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let json = golden().to_json();
        let back = LrcCode::from_json(&json).unwrap();
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn rejects_bad_places_and_shapes() {
        let good = golden().descriptor();

        let mut d = good.clone();
        d.places[0] = vec![3];
        assert!(matches!(LrcCode::from_descriptor(&d), Err(Error::Descriptor(_))));

        let mut d = good.clone();
        d.places[1] = d.places[0].clone();
        assert!(matches!(LrcCode::from_descriptor(&d), Err(Error::Descriptor(_))));

        let mut d = good.clone();
        d.generator_matrix[1] = d.generator_matrix[0].clone();
        assert!(matches!(LrcCode::from_descriptor(&d), Err(Error::Descriptor(_))));

        let mut d = good.clone();
        d.generator_matrix[0].pop();
        assert!(matches!(LrcCode::from_descriptor(&d), Err(Error::Descriptor(_))));

        let mut d = good;
        d.group2 = GroupDescriptor::Multiplicative { scalars: vec![1, 4] };
        assert!(LrcCode::from_descriptor(&d).is_err());

        assert!(matches!(LrcCode::from_json("{"), Err(Error::Descriptor(_))));
    }
}
