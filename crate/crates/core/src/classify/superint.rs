use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_integer::Integer as _;
use serde::{Deserialize, Serialize};

use super::forms::{base_forms, decorations};
use crate::exact::rational::{gcd_all, int};
use crate::exact::{ConfigMatrix, Integer};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegralityStatus {
    NotStronglyIntegral,
    StronglyIntegralOnly,
    SuperIntegral,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperIntegralityClass {
    pub status: IntegralityStatus,
    /// Curvature divisor; absent when `M` is not integral.
    pub g: Option<String>,
    /// Column gcds of `W`; present only for super-integral input.
    pub gvector: Option<[String; 4]>,
}

/// Classification from `M` alone: `g = 1` always lifts to an integral `W`;
/// `g = 2` iff each row has `bx + by` odd; `g = 4` iff the `(bx, by)` columns
/// are all `≡ (1,0)` or all `≡ (0,1)` mod 2; no other divisor does.
pub fn super_integrality_class(m: &ConfigMatrix) -> Result<SuperIntegralityClass> {
    if !m.is_integral() {
        return Ok(SuperIntegralityClass { status: IntegralityStatus::NotStronglyIntegral, g: None, gvector: None });
    }
    let rows: Vec<[Integer; 3]> = m.0.iter().map(|r| r.clone().map(|x| x.to_integer())).collect();
    let g = gcd_all(rows.iter().map(|r| &r[0]));
    if g == int(0) {
        return Err(Error::ZeroQuadruple);
    }
    let parity = |r: &[Integer; 3]| (r[1].is_odd(), r[2].is_odd());
    let ok = if g == int(1) {
        true
    } else if g == int(2) {
        rows.iter().all(|r| (&r[1] + &r[2]).is_odd())
    } else if g == int(4) {
        let p: Vec<_> = rows.iter().map(parity).collect();
        p.iter().all(|&x| x == (true, false)) || p.iter().all(|&x| x == (false, true))
    } else {
        false
    };
    let gvector = if ok {
        let w = m.to_augmented()?;
        let v = w.column_gcds().expect("criterion guarantees integral cocurvatures");
        Some(v.map(|x| x.to_string()))
    } else {
        None
    };
    let status = if ok { IntegralityStatus::SuperIntegral } else { IntegralityStatus::StronglyIntegralOnly };
    Ok(SuperIntegralityClass { status, g: Some(g.to_string()), gvector })
}

/// One row of the super-integral orbit census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub gvector: [Integer; 4],
    pub count: usize,
    /// Base-form names, in generation order.
    pub representatives: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub rows: Vec<CensusRow>,
    pub total: usize,
}

/// Instantiates the 48 decorations of every base form for the divisors
/// that can be super-integral, classifies each, and groups the survivors by
/// column-gcd vector. Rows are ordered by divisor, then by first
/// appearance.
pub fn orbit_census() -> Census {
    let mut order: Vec<[Integer; 4]> = Vec::new();
    let mut by_g: BTreeMap<[Integer; 4], (usize, Vec<String>)> = BTreeMap::new();
    for g in [1, 2, 4] {
        for base in base_forms(&int(g)) {
            let mut hit = false;
            for f in decorations(&base) {
                let w = f.instantiate_augmented();
                let Some(v) = w.column_gcds() else { continue };
                let class = super_integrality_class(&w.config()).expect("integral form");
                debug_assert_eq!(class.status, IntegralityStatus::SuperIntegral);
                let entry = by_g.entry(v.clone()).or_insert_with(|| {
                    order.push(v.clone());
                    (0, Vec::new())
                });
                entry.0 += 1;
                if !hit {
                    entry.1.push(base.name());
                    hit = true;
                }
            }
        }
    }
    let rows: Vec<CensusRow> = order
        .into_iter()
        .map(|v| {
            let (count, representatives) = by_g.remove(&v).unwrap();
            CensusRow { gvector: v, count, representatives }
        })
        .collect();
    let total = rows.iter().map(|r| r.count).sum();
    Census { rows, total }
}

impl Census {
    /// CSV with columns `gvector,count,representatives`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("gvector,count,representatives\n");
        for r in &self.rows {
            let g: Vec<String> = r.gvector.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "\"({})\",{},\"{}\"", g.join(","), r.count, r.representatives.join(" "));
        }
        let _ = writeln!(s, "total,{},", self.total);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::forms::{Family, ReducedForm};

    fn class(f: Family, m: u8, n: u8, g: i64) -> IntegralityStatus {
        super_integrality_class(&ReducedForm::base(f, m, n, int(g)).instantiate()).unwrap().status
    }

    #[test]
    fn examples() {
        assert_eq!(class(Family::A, 1, 1, 1), IntegralityStatus::SuperIntegral);
        assert_eq!(class(Family::A, 0, 0, 2), IntegralityStatus::StronglyIntegralOnly);
        assert_eq!(class(Family::A, 0, 1, 2), IntegralityStatus::SuperIntegral);
        assert_eq!(class(Family::B, 1, 0, 4), IntegralityStatus::SuperIntegral);
        assert_eq!(class(Family::A, 1, 1, 3), IntegralityStatus::StronglyIntegralOnly);
        let half = ConfigMatrix(
            ReducedForm::base(Family::A, 1, 1, int(2))
                .instantiate()
                .0
                .map(|r| r.map(|x| x / crate::exact::rational::rat(4))),
        );
        assert_eq!(super_integrality_class(&half).unwrap().status, IntegralityStatus::NotStronglyIntegral);
    }

    #[test]
    fn criterion_matches_direct_lift() {
        for g in 1..=8 {
            for f in base_forms(&int(g)) {
                let m = f.instantiate();
                let direct = m.to_augmented().unwrap().is_super_integral();
                let got = super_integrality_class(&m).unwrap().status == IntegralityStatus::SuperIntegral;
                assert_eq!(got, direct, "{}", f.name());
            }
        }
    }

    #[test]
    fn table_one() {
        let c = orbit_census();
        let rows: Vec<([i64; 4], usize, Vec<&str>)> = vec![
            ([1, 1, 1, 1], 96, vec!["A_{1,1}[1]", "B_{1,1}[1]"]),
            ([2, 1, 1, 1], 96, vec!["A_{1,0}[1]", "B_{0,1}[1]"]),
            ([1, 1, 2, 1], 48, vec!["A_{0,0}[1]"]),
            ([1, 1, 1, 2], 48, vec!["B_{0,0}[1]"]),
            ([4, 1, 2, 1], 48, vec!["A_{0,1}[1]"]),
            ([4, 1, 1, 2], 48, vec!["B_{1,0}[1]"]),
            ([1, 2, 1, 1], 96, vec!["A_{1,0}[2]", "B_{0,1}[2]"]),
            ([2, 2, 2, 1], 48, vec!["A_{0,1}[2]"]),
            ([2, 2, 1, 2], 48, vec!["B_{1,0}[2]"]),
            ([1, 4, 2, 1], 48, vec!["A_{0,1}[4]"]),
            ([1, 4, 1, 2], 48, vec!["B_{1,0}[4]"]),
        ];
        let mut got: Vec<_> = c.rows.iter().map(|r| (r.gvector.clone(), r.count, r.representatives.clone())).collect();
        let mut want: Vec<_> = rows
            .into_iter()
            .map(|(g, n, r)| (g.map(int), n, r.into_iter().map(String::from).collect::<Vec<_>>()))
            .collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(c.total, 672);
    }
}
