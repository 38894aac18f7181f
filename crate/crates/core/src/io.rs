//! On-disk formats: polynomials as JSON term lists with decimal-string
//! coefficients (bit-exact round trip), family and point files, and the
//! CSV / JSON-lines report writers.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{CurveFamily, FamilyPoint, RatFunc};
use crate::mpoly::MPoly;

/// A polynomial as a list of `[exponent-vector, coefficient]` pairs, with
/// the coefficient as a decimal string so arbitrary precision survives the
/// round trip. Terms are written leading-term first.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyJson(pub Vec<(Vec<u32>, String)>);

impl PolyJson {
    pub fn from_poly(p: &MPoly) -> Self {
        PolyJson(
            p.terms_desc()
                .map(|(m, c)| (m.0.clone(), c.to_string()))
                .collect(),
        )
    }

    pub fn to_poly(&self, nvars: usize) -> Result<MPoly> {
        let mut terms = Vec::with_capacity(self.0.len());
        for (exps, coeff) in &self.0 {
            if exps.len() != nvars {
                return Err(Error::Parse(format!(
                    "exponent vector length {} does not match {} variables",
                    exps.len(),
                    nvars
                )));
            }
            let c = BigInt::from_str(coeff)
                .map_err(|e| Error::Parse(format!("bad coefficient {:?}: {}", coeff, e)))?;
            terms.push((exps.clone(), c));
        }
        Ok(MPoly::from_terms(nvars, terms))
    }
}

/// Family file: variable names plus the two Weierstrass coefficients.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyJson {
    pub vars: Vec<String>,
    #[serde(rename = "A")]
    pub a: PolyJson,
    #[serde(rename = "B")]
    pub b: PolyJson,
}

impl FamilyJson {
    pub fn from_family(fam: &CurveFamily, vars: &[String]) -> Self {
        FamilyJson {
            vars: vars.to_vec(),
            a: PolyJson::from_poly(fam.a()),
            b: PolyJson::from_poly(fam.b()),
        }
    }

    pub fn to_family(&self) -> Result<CurveFamily> {
        let n = self.vars.len();
        CurveFamily::new(self.a.to_poly(n)?, self.b.to_poly(n)?)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: PolyJson,
    pub den: PolyJson,
}

impl RatFuncJson {
    pub fn from_ratfunc(f: &RatFunc) -> Self {
        RatFuncJson {
            num: PolyJson::from_poly(f.num()),
            den: PolyJson::from_poly(f.den()),
        }
    }

    pub fn to_ratfunc(&self, nvars: usize) -> Result<RatFunc> {
        RatFunc::new(self.num.to_poly(nvars)?, self.den.to_poly(nvars)?)
    }
}

/// Point file: the two coordinates of a family point as rational functions.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointJson {
    pub x: RatFuncJson,
    pub y: RatFuncJson,
}

impl PointJson {
    pub fn from_point(p: &FamilyPoint) -> Self {
        PointJson {
            x: RatFuncJson::from_ratfunc(p.x()),
            y: RatFuncJson::from_ratfunc(p.y()),
        }
    }

    pub fn to_point(&self, fam: &CurveFamily) -> Result<FamilyPoint> {
        let n = fam.nvars();
        FamilyPoint::new(self.x.to_ratfunc(n)?, self.y.to_ratfunc(n)?, fam)
    }
}

pub fn read_family(path: &std::path::Path) -> Result<(CurveFamily, Vec<String>)> {
    let text = std::fs::read_to_string(path)?;
    let fj: FamilyJson = serde_json::from_str(&text)?;
    let fam = fj.to_family()?;
    Ok((fam, fj.vars))
}

pub fn read_point(path: &std::path::Path, fam: &CurveFamily) -> Result<FamilyPoint> {
    let text = std::fs::read_to_string(path)?;
    let pj: PointJson = serde_json::from_str(&text)?;
    pj.to_point(fam)
}

pub fn write_json<T: Serialize>(path: &std::path::Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_round_trip_is_exact() {
        let p = MPoly::from_terms(
            2,
            vec![
                (vec![6, 0], BigInt::from(64)),
                (vec![0, 4], BigInt::from(-432)),
                (vec![0, 0], "123456789012345678901234567890".parse::<BigInt>().unwrap()),
            ],
        );
        let j = PolyJson::from_poly(&p);
        let text = serde_json::to_string(&j).unwrap();
        let back: PolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_poly(2).unwrap(), p);
        // Canonical output: serializing again yields identical bytes.
        assert_eq!(serde_json::to_string(&PolyJson::from_poly(&back.to_poly(2).unwrap())).unwrap(), text);
    }
}
