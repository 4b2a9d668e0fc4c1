//! Yearly reserve-composition panel: CSV ingestion, joins, log
//! transforms, currency dummies, and design-matrix construction.
//!
//! All level inputs are billions of USD; logs are taken on that scale.
//! Reserve levels come from quarterly data and the Q4 row of each year
//! is the annual observation.

use crate::regress::{DesignMatrix, RegressError};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PanelError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Csv { path: String, message: String },
    #[error("Q4 row missing for ({currency}, {year})")]
    MissingQ4 { currency: String, year: i32 },
    #[error("duplicate Q4 rows for ({currency}, {year})")]
    DuplicateQ4 { currency: String, year: i32 },
    #[error("{file}: no match for ({issuer}, {year})")]
    UnmatchedKey {
        file: &'static str,
        issuer: String,
        year: i32,
    },
    #[error("non-positive {column} level {value} for ({issuer}, {year})")]
    NonPositiveLevel {
        column: &'static str,
        issuer: String,
        year: i32,
        value: f64,
    },
    #[error(transparent)]
    Regress(#[from] RegressError),
}

/// Issuer code of the aggregated "other currencies" row.
pub const OTHER_ISSUER: &str = "OTH";
/// Issuer code of the renminbi row.
pub const RMB_ISSUER: &str = "CNY";

pub type LevelMap = BTreeMap<(String, i32), f64>;

fn read_csv<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<Vec<T>, PanelError> {
    let text = std::fs::read_to_string(path).map_err(|source| PanelError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_csv(&text, &path.display().to_string())
}

fn parse_csv<T: for<'de> Deserialize<'de>>(text: &str, origin: &str) -> Result<Vec<T>, PanelError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    reader
        .deserialize()
        .collect::<Result<Vec<T>, _>>()
        .map_err(|e| PanelError::Csv {
            path: origin.to_string(),
            message: e.to_string(),
        })
}

#[derive(Debug, Deserialize)]
struct CoferRow {
    currency: String,
    year: i32,
    quarter: u8,
    claims_usd_billions: f64,
}

/// Reserve levels by (currency, year), taking the Q4 row of each year.
/// A year with quarterly rows but no Q4 is an error, as is a duplicated
/// Q4 row.
pub fn load_cofer(path: &Path) -> Result<LevelMap, PanelError> {
    load_cofer_str(
        &std::fs::read_to_string(path).map_err(|source| PanelError::Io {
            path: path.display().to_string(),
            source,
        })?,
        &path.display().to_string(),
    )
}

pub fn load_cofer_str(text: &str, origin: &str) -> Result<LevelMap, PanelError> {
    let rows: Vec<CoferRow> = parse_csv(text, origin)?;
    let mut seen_any: BTreeSet<(String, i32)> = BTreeSet::new();
    let mut q4: LevelMap = BTreeMap::new();
    for row in &rows {
        let key = (row.currency.clone(), row.year);
        seen_any.insert(key.clone());
        if row.quarter == 4 {
            if q4.insert(key, row.claims_usd_billions).is_some() {
                return Err(PanelError::DuplicateQ4 {
                    currency: row.currency.clone(),
                    year: row.year,
                });
            }
        }
    }
    for (currency, year) in seen_any {
        if !q4.contains_key(&(currency.clone(), year)) {
            return Err(PanelError::MissingQ4 { currency, year });
        }
    }
    Ok(q4)
}

#[derive(Debug, Deserialize)]
struct LevelRow {
    issuer: String,
    year: i32,
    #[serde(alias = "ms_usd_billions", alias = "gdp_usd_billions", alias = "gold_usd_billions")]
    value: f64,
}

/// Generic issuer-year level table (ms.csv, gdp.csv, gold.csv).
pub fn load_levels(path: &Path) -> Result<LevelMap, PanelError> {
    let rows: Vec<LevelRow> = read_csv(path)?;
    Ok(rows
        .into_iter()
        .map(|r| ((r.issuer, r.year), r.value))
        .collect())
}

pub fn load_levels_str(text: &str, origin: &str) -> Result<LevelMap, PanelError> {
    let rows: Vec<LevelRow> = parse_csv(text, origin)?;
    Ok(rows
        .into_iter()
        .map(|r| ((r.issuer, r.year), r.value))
        .collect())
}

#[derive(Debug, Deserialize)]
struct TradeRow {
    issuer: String,
    year: i32,
    exports_usd_billions: f64,
    imports_usd_billions: f64,
}

/// International trade as the sum of exports and imports.
pub fn load_trade(path: &Path) -> Result<LevelMap, PanelError> {
    let text = std::fs::read_to_string(path).map_err(|source| PanelError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load_trade_str(&text, &path.display().to_string())
}

pub fn load_trade_str(text: &str, origin: &str) -> Result<LevelMap, PanelError> {
    let rows: Vec<TradeRow> = parse_csv(text, origin)?;
    Ok(rows
        .into_iter()
        .map(|r| {
            (
                (r.issuer, r.year),
                r.exports_usd_billions + r.imports_usd_billions,
            )
        })
        .collect())
}

#[derive(Debug, Deserialize)]
struct M2Row {
    issuer: String,
    year: i32,
    m2_pct_gdp: f64,
}

/// Broad money levels from the monetization ratio: M2 = ratio/100 * GDP.
/// Every ratio row must find its GDP level.
pub fn load_m2(path: &Path, gdp: &LevelMap) -> Result<LevelMap, PanelError> {
    let text = std::fs::read_to_string(path).map_err(|source| PanelError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load_m2_str(&text, &path.display().to_string(), gdp)
}

pub fn load_m2_str(text: &str, origin: &str, gdp: &LevelMap) -> Result<LevelMap, PanelError> {
    let rows: Vec<M2Row> = parse_csv(text, origin)?;
    let mut out = BTreeMap::new();
    for row in rows {
        let key = (row.issuer.clone(), row.year);
        let gdp_level = gdp.get(&key).ok_or(PanelError::UnmatchedKey {
            file: "m2.csv",
            issuer: row.issuer,
            year: row.year,
        })?;
        out.insert(key, row.m2_pct_gdp / 100.0 * gdp_level);
    }
    Ok(out)
}

/// All source tables keyed by (issuer, year).
#[derive(Debug, Default)]
pub struct PanelSources {
    pub cofer: LevelMap,
    pub ms: LevelMap,
    pub gdp: LevelMap,
    pub gold: LevelMap,
    pub trade: LevelMap,
    pub m2: LevelMap,
}

impl PanelSources {
    /// Load every table from a directory laid out with the canonical
    /// file names (cofer.csv, ms.csv, gdp.csv, gold.csv, trade.csv,
    /// m2.csv).
    pub fn from_dir(dir: &Path) -> Result<Self, PanelError> {
        let gdp = load_levels(&dir.join("gdp.csv"))?;
        Ok(PanelSources {
            cofer: load_cofer(&dir.join("cofer.csv"))?,
            ms: load_levels(&dir.join("ms.csv"))?,
            gold: load_levels(&dir.join("gold.csv"))?,
            trade: load_trade(&dir.join("trade.csv"))?,
            m2: load_m2(&dir.join("m2.csv"), &gdp)?,
            gdp,
        })
    }
}

/// Predictor columns of the panel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    Ms,
    Gdp,
    Gold,
    Trade,
    M2,
}

impl Column {
    pub fn name(self) -> &'static str {
        match self {
            Column::Ms => "ln_ms",
            Column::Gdp => "ln_gdp",
            Column::Gold => "ln_gold",
            Column::Trade => "ln_trade",
            Column::M2 => "ln_m2",
        }
    }

    pub fn parse(text: &str) -> Option<Column> {
        match text.to_ascii_lowercase().as_str() {
            "ms" | "ln_ms" => Some(Column::Ms),
            "gdp" | "ln_gdp" => Some(Column::Gdp),
            "gold" | "ln_gold" => Some(Column::Gold),
            "trade" | "it" | "ln_trade" => Some(Column::Trade),
            "m2" | "ln_m2" => Some(Column::M2),
            _ => None,
        }
    }

    pub fn all() -> [Column; 5] {
        [Column::Ms, Column::Gdp, Column::Gold, Column::Trade, Column::M2]
    }
}

/// One panel observation. Non-required predictors may be absent.
#[derive(Debug, Clone)]
pub struct PanelRow {
    pub year: i32,
    pub issuer: String,
    pub ln_fer: f64,
    pub ln_ms: Option<f64>,
    pub ln_gdp: Option<f64>,
    pub ln_gold: Option<f64>,
    pub ln_trade: Option<f64>,
    pub ln_m2: Option<f64>,
    pub dv_rmb: u8,
    pub dv_other: u8,
}

impl PanelRow {
    pub fn get(&self, column: Column) -> Option<f64> {
        match column {
            Column::Ms => self.ln_ms,
            Column::Gdp => self.ln_gdp,
            Column::Gold => self.ln_gold,
            Column::Trade => self.ln_trade,
            Column::M2 => self.ln_m2,
        }
    }

    pub fn is_western(&self) -> bool {
        self.dv_rmb == 0 && self.dv_other == 0
    }
}

#[derive(Debug, Clone)]
pub struct DropRecord {
    pub issuer: String,
    pub year: i32,
    pub reason: String,
}

/// The assembled panel plus the record of dropped issuer-years.
#[derive(Debug, Clone, Default)]
pub struct PanelDataset {
    pub rows: Vec<PanelRow>,
    pub drops: Vec<DropRecord>,
}

fn checked_ln(
    value: f64,
    column: &'static str,
    issuer: &str,
    year: i32,
) -> Result<f64, PanelError> {
    if value <= 0.0 {
        return Err(PanelError::NonPositiveLevel {
            column,
            issuer: issuer.to_string(),
            year,
            value,
        });
    }
    Ok(value.ln())
}

/// Join the sources into a panel over the requested years. Issuer-years
/// without a reserve observation are dropped and recorded, as are rows
/// missing one of the `required` predictors. Optional predictors stay
/// absent without dropping the row. Rows are ordered by (year, issuer).
pub fn build_panel(
    sources: &PanelSources,
    years: std::ops::RangeInclusive<i32>,
    required: &[Column],
) -> Result<PanelDataset, PanelError> {
    let mut issuers: BTreeSet<String> = BTreeSet::new();
    for map in [
        &sources.cofer,
        &sources.ms,
        &sources.gdp,
        &sources.gold,
        &sources.trade,
        &sources.m2,
    ] {
        issuers.extend(map.keys().map(|(issuer, _)| issuer.clone()));
    }
    let mut panel = PanelDataset::default();
    for year in years {
        for issuer in &issuers {
            let key = (issuer.clone(), year);
            let Some(&fer) = sources.cofer.get(&key) else {
                panel.drops.push(DropRecord {
                    issuer: issuer.clone(),
                    year,
                    reason: "absent from reserve data".to_string(),
                });
                continue;
            };
            let take = |map: &LevelMap| map.get(&key).copied();
            let mut row = PanelRow {
                year,
                issuer: issuer.clone(),
                ln_fer: checked_ln(fer, "fer", issuer, year)?,
                ln_ms: None,
                ln_gdp: None,
                ln_gold: None,
                ln_trade: None,
                ln_m2: None,
                dv_rmb: u8::from(issuer == RMB_ISSUER),
                dv_other: u8::from(issuer == OTHER_ISSUER),
            };
            if let Some(v) = take(&sources.ms) {
                row.ln_ms = Some(checked_ln(v, "ms", issuer, year)?);
            }
            if let Some(v) = take(&sources.gdp) {
                row.ln_gdp = Some(checked_ln(v, "gdp", issuer, year)?);
            }
            if let Some(v) = take(&sources.gold) {
                row.ln_gold = Some(checked_ln(v, "gold", issuer, year)?);
            }
            if let Some(v) = take(&sources.trade) {
                row.ln_trade = Some(checked_ln(v, "trade", issuer, year)?);
            }
            if let Some(v) = take(&sources.m2) {
                row.ln_m2 = Some(checked_ln(v, "m2", issuer, year)?);
            }
            if let Some(missing) = required.iter().find(|&&c| row.get(c).is_none()) {
                panel.drops.push(DropRecord {
                    issuer: issuer.clone(),
                    year,
                    reason: format!("missing required predictor {}", missing.name()),
                });
                continue;
            }
            panel.rows.push(row);
        }
    }
    Ok(panel)
}

impl PanelDataset {
    /// Render the panel as CSV in the canonical column order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "year,issuer,ln_fer,ln_ms,ln_gdp,ln_gold,ln_trade,ln_m2,dv_rmb,dv_other\n",
        );
        let cell = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                row.year,
                row.issuer,
                row.ln_fer,
                cell(row.ln_ms),
                cell(row.ln_gdp),
                cell(row.ln_gold),
                cell(row.ln_trade),
                cell(row.ln_m2),
                row.dv_rmb,
                row.dv_other,
            ));
        }
        out
    }

    /// Drops manifest as CSV.
    pub fn drops_csv(&self) -> String {
        let mut out = String::from("issuer,year,reason\n");
        for drop in &self.drops {
            out.push_str(&format!("{},{},{}\n", drop.issuer, drop.year, drop.reason));
        }
        out
    }

    /// Parse a panel back from its CSV rendering.
    pub fn from_csv_str(text: &str) -> Result<Self, PanelError> {
        #[derive(Debug, Deserialize)]
        struct Row {
            year: i32,
            issuer: String,
            ln_fer: f64,
            ln_ms: Option<f64>,
            ln_gdp: Option<f64>,
            ln_gold: Option<f64>,
            ln_trade: Option<f64>,
            ln_m2: Option<f64>,
            dv_rmb: u8,
            dv_other: u8,
        }
        let rows: Vec<Row> = parse_csv(text, "panel.csv")?;
        Ok(PanelDataset {
            rows: rows
                .into_iter()
                .map(|r| PanelRow {
                    year: r.year,
                    issuer: r.issuer,
                    ln_fer: r.ln_fer,
                    ln_ms: r.ln_ms,
                    ln_gdp: r.ln_gdp,
                    ln_gold: r.ln_gold,
                    ln_trade: r.ln_trade,
                    ln_m2: r.ln_m2,
                    dv_rmb: r.dv_rmb,
                    dv_other: r.dv_other,
                })
                .collect(),
            drops: Vec::new(),
        })
    }

    pub fn years(&self) -> Vec<i32> {
        let set: BTreeSet<i32> = self.rows.iter().map(|r| r.year).collect();
        set.into_iter().collect()
    }

    fn rows_for(&self, year: Option<i32>, western_only: bool, columns: &[Column]) -> Vec<&PanelRow> {
        self.rows
            .iter()
            .filter(|r| year.is_none_or(|y| r.year == y))
            .filter(|r| !western_only || r.is_western())
            .filter(|r| columns.iter().all(|&c| r.get(c).is_some()))
            .collect()
    }

    /// Response and design for the size regression on western issuers
    /// only (no dummies).
    pub fn simple_design(
        &self,
        year: i32,
        predictor: Column,
    ) -> Result<(Vec<f64>, DesignMatrix), PanelError> {
        let rows = self.rows_for(Some(year), true, &[predictor]);
        let y: Vec<f64> = rows.iter().map(|r| r.ln_fer).collect();
        let x: Vec<f64> = rows.iter().map(|r| r.get(predictor).unwrap()).collect();
        let design = DesignMatrix::from_columns(&[predictor.name()], &[x], true)?;
        Ok((y, design))
    }

    /// Response and design with size predictor, optional controls, and
    /// the RMB/Other dummies, over all issuers with complete data.
    pub fn multiple_design(
        &self,
        year: Option<i32>,
        predictor: Column,
        controls: &[Column],
        include_other: bool,
    ) -> Result<(Vec<f64>, DesignMatrix), PanelError> {
        let mut needed = vec![predictor];
        needed.extend_from_slice(controls);
        let rows: Vec<&PanelRow> = self
            .rows_for(year, false, &needed)
            .into_iter()
            .filter(|r| include_other || r.dv_other == 0)
            .collect();
        let y: Vec<f64> = rows.iter().map(|r| r.ln_fer).collect();
        let mut names = vec![predictor.name()];
        let mut columns: Vec<Vec<f64>> =
            vec![rows.iter().map(|r| r.get(predictor).unwrap()).collect()];
        for &control in controls {
            names.push(control.name());
            columns.push(rows.iter().map(|r| r.get(control).unwrap()).collect());
        }
        names.push("dv_rmb");
        columns.push(rows.iter().map(|r| r.dv_rmb as f64).collect());
        if include_other {
            names.push("dv_other");
            columns.push(rows.iter().map(|r| r.dv_other as f64).collect());
        }
        let design = DesignMatrix::from_columns(&names, &columns, true)?;
        Ok((y, design))
    }

    /// Western-only two-predictor design (size and output) for the
    /// penalized regressions.
    pub fn penalized_design(&self, year: i32) -> Result<(Vec<f64>, DesignMatrix), PanelError> {
        let rows = self.rows_for(Some(year), true, &[Column::Ms, Column::Gdp]);
        let y: Vec<f64> = rows.iter().map(|r| r.ln_fer).collect();
        let ms: Vec<f64> = rows.iter().map(|r| r.ln_ms.unwrap()).collect();
        let gdp: Vec<f64> = rows.iter().map(|r| r.ln_gdp.unwrap()).collect();
        let design = DesignMatrix::from_columns(&["ln_ms", "ln_gdp"], &[ms, gdp], true)?;
        Ok((y, design))
    }

    /// Pooled response/design over all years with the western/rest split
    /// mask for the stability test.
    pub fn pooled_design(
        &self,
        predictor: Column,
    ) -> Result<(Vec<f64>, DesignMatrix, Vec<bool>), PanelError> {
        let rows = self.rows_for(None, false, &[predictor]);
        let y: Vec<f64> = rows.iter().map(|r| r.ln_fer).collect();
        let x: Vec<f64> = rows.iter().map(|r| r.get(predictor).unwrap()).collect();
        let mask: Vec<bool> = rows.iter().map(|r| !r.is_western()).collect();
        let design = DesignMatrix::from_columns(&[predictor.name()], &[x], true)?;
        Ok((y, design, mask))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_sources() -> PanelSources {
        let cofer = "\
currency,year,quarter,claims_usd_billions
USD,2010,1,3000
USD,2010,4,3100
EUR,2010,4,1200
CNY,2016,4,84.5
USD,2016,4,5000
EUR,2016,4,1559
OTH,2016,4,202
";
        let gdp = "\
issuer,year,gdp_usd_billions
USD,2010,15049
EUR,2010,12600
AUD,2010,1146
USD,2016,18804
EUR,2016,11971
CNY,2016,11233
OTH,2016,23019
";
        let ms = "\
issuer,year,ms_usd_billions
USD,2010,698
EUR,2010,170
USD,2016,639
EUR,2016,162
CNY,2016,216
OTH,2016,512
";
        let m2 = "\
issuer,year,m2_pct_gdp
USD,2016,71.2
EUR,2016,102
CNY,2016,208
OTH,2016,100
";
        let gdp_map = load_levels_str(gdp, "gdp.csv").unwrap();
        PanelSources {
            cofer: load_cofer_str(cofer, "cofer.csv").unwrap(),
            ms: load_levels_str(ms, "ms.csv").unwrap(),
            m2: load_m2_str(m2, "m2.csv", &gdp_map).unwrap(),
            gdp: gdp_map,
            gold: BTreeMap::new(),
            trade: BTreeMap::new(),
        }
    }

    #[test]
    fn q4_selection_takes_the_fourth_quarter() {
        let sources = sample_sources();
        assert_eq!(sources.cofer[&("USD".to_string(), 2010)], 3100.0);
    }

    #[test]
    fn missing_q4_is_an_error() {
        let text = "\
currency,year,quarter,claims_usd_billions
USD,2010,1,3000
USD,2010,2,3050
";
        let err = load_cofer_str(text, "cofer.csv").unwrap_err();
        assert!(matches!(
            err,
            PanelError::MissingQ4 { ref currency, year: 2010 } if currency == "USD"
        ));
    }

    #[test]
    fn duplicate_q4_is_an_error() {
        let text = "\
currency,year,quarter,claims_usd_billions
USD,2010,4,3000
USD,2010,4,3001
";
        assert!(matches!(
            load_cofer_str(text, "cofer.csv").unwrap_err(),
            PanelError::DuplicateQ4 { .. }
        ));
    }

    #[test]
    fn m2_requires_matching_gdp() {
        let gdp = load_levels_str("issuer,year,gdp_usd_billions\nUSD,2016,18804\n", "gdp.csv")
            .unwrap();
        let err = load_m2_str(
            "issuer,year,m2_pct_gdp\nUSD,2016,71.2\nEUR,2016,102\n",
            "m2.csv",
            &gdp,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            PanelError::UnmatchedKey { issuer, year: 2016, .. } if issuer == "EUR"
        ));
        let ok = load_m2_str("issuer,year,m2_pct_gdp\nUSD,2016,100\n", "m2.csv", &gdp).unwrap();
        assert_eq!(ok[&("USD".to_string(), 2016)], 18804.0);
    }

    #[test]
    fn build_panel_drops_and_records_missing_reserve_rows() {
        let sources = sample_sources();
        let panel = build_panel(&sources, 2010..=2016, &[Column::Gdp]).unwrap();
        // AUD has GDP in 2010 but never appears in the reserve data
        assert!(panel
            .drops
            .iter()
            .any(|d| d.issuer == "AUD" && d.year == 2010));
        assert!(!panel.rows.iter().any(|r| r.issuer == "AUD"));
        // stable ordering by year then issuer
        let order: Vec<(i32, &str)> = panel
            .rows
            .iter()
            .map(|r| (r.year, r.issuer.as_str()))
            .collect();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted);
    }

    #[test]
    fn dummies_are_exclusive_and_correct() {
        let sources = sample_sources();
        let panel = build_panel(&sources, 2016..=2016, &[]).unwrap();
        for row in &panel.rows {
            assert!(row.dv_rmb * row.dv_other == 0);
            match row.issuer.as_str() {
                "CNY" => assert_eq!((row.dv_rmb, row.dv_other), (1, 0)),
                "OTH" => assert_eq!((row.dv_rmb, row.dv_other), (0, 1)),
                _ => assert_eq!((row.dv_rmb, row.dv_other), (0, 0)),
            }
        }
    }

    #[test]
    fn log_scale_is_billions() {
        let sources = sample_sources();
        let panel = build_panel(&sources, 2016..=2016, &[]).unwrap();
        let usd = panel
            .rows
            .iter()
            .find(|r| r.issuer == "USD" && r.year == 2016)
            .unwrap();
        assert!((usd.ln_fer - 5000f64.ln()).abs() < 1e-12);
        // ln(1000) would be ~6.9078 on this scale
        assert!((1000f64.ln() - 6.907755278982137).abs() < 1e-12);
    }

    #[test]
    fn rebuild_is_byte_identical() {
        let sources = sample_sources();
        let a = build_panel(&sources, 2010..=2016, &[Column::Ms]).unwrap();
        let b = build_panel(&sources, 2010..=2016, &[Column::Ms]).unwrap();
        assert_eq!(a.to_csv(), b.to_csv());
        assert_eq!(a.drops_csv(), b.drops_csv());
    }

    #[test]
    fn non_positive_level_is_an_error() {
        let mut sources = sample_sources();
        sources
            .gold
            .insert(("USD".to_string(), 2016), 0.0);
        let err = build_panel(&sources, 2016..=2016, &[]).unwrap_err();
        assert!(matches!(err, PanelError::NonPositiveLevel { column: "gold", .. }));
    }

    #[test]
    fn panel_csv_roundtrip() {
        let sources = sample_sources();
        let panel = build_panel(&sources, 2010..=2016, &[]).unwrap();
        let parsed = PanelDataset::from_csv_str(&panel.to_csv()).unwrap();
        assert_eq!(parsed.rows.len(), panel.rows.len());
        assert_eq!(parsed.to_csv(), panel.to_csv());
    }

    #[test]
    fn design_builders_partition_issuers() {
        let sources = sample_sources();
        let panel = build_panel(&sources, 2016..=2016, &[]).unwrap();
        let (y, design) = panel.simple_design(2016, Column::Gdp).unwrap();
        assert_eq!(y.len(), 2); // USD and EUR are the western rows
        assert_eq!(design.predictors(), 1);
        let (y, design) = panel
            .multiple_design(Some(2016), Column::Ms, &[], true)
            .unwrap();
        assert_eq!(y.len(), 4);
        assert_eq!(design.names, vec!["ln_ms", "dv_rmb", "dv_other"]);
    }
}
