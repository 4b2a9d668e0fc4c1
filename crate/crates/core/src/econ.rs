//! GDP initialization and growth, military spending, monetary expansion,
//! and the inflation feedback.

use crate::config::SimConfig;
use crate::network::CurrencyLabel;
use crate::state::WorldState;
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EconError {
    #[error("need at least two annual points, got {0}")]
    TooFewPoints(usize),
    #[error("years must be strictly increasing: {0} then {1}")]
    NonIncreasingYears(i32, i32),
    #[error("non-positive value {value} at year {year}")]
    NonPositiveValue { year: i32, value: f64 },
    #[error("annual growth rate must be > -1, got {0}")]
    GrowthOutOfRange(f64),
    #[error("dedollarized fraction must lie in [0, 1), got {0}")]
    InflationDomain(f64),
    #[error("core GDP history parse error: {0}")]
    HistoryParse(String),
}

/// Origin of a node's GDP path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GdpSource {
    /// Interpolated historical data, then constant-rate extrapolation.
    HistoricalExtrapolated,
    /// Initial level drawn from a Pareto distribution.
    ParetoDrawn,
}

/// Monthly GDP path for one node.
#[derive(Debug, Clone)]
pub struct GdpSeries {
    pub node: usize,
    pub values: Vec<f64>,
    pub source: GdpSource,
}

/// Log-linear interpolation of annual observations to monthly frequency.
/// Between consecutive annual values `a` and `b` spanning `dy` years,
/// month `k` yields `a * (b/a)^(k / (12 dy))`, so the annual endpoints
/// are matched exactly. The result covers both endpoints inclusive.
pub fn interpolate_monthly(annual: &[(i32, f64)]) -> Result<Vec<f64>, EconError> {
    if annual.len() < 2 {
        return Err(EconError::TooFewPoints(annual.len()));
    }
    for window in annual.windows(2) {
        if window[1].0 <= window[0].0 {
            return Err(EconError::NonIncreasingYears(window[0].0, window[1].0));
        }
    }
    if let Some(&(year, value)) = annual.iter().find(|&&(_, v)| v <= 0.0) {
        return Err(EconError::NonPositiveValue { year, value });
    }
    let mut out = Vec::new();
    out.push(annual[0].1);
    for window in annual.windows(2) {
        let (y0, a) = window[0];
        let (y1, b) = window[1];
        let months = 12 * (y1 - y0) as usize;
        let ratio = b / a;
        for k in 1..=months {
            out.push(a * ratio.powf(k as f64 / months as f64));
        }
    }
    Ok(out)
}

/// Convert an annual growth rate to the equivalent monthly factor.
pub fn annual_to_monthly_factor(annual_rate: f64) -> Result<f64, EconError> {
    if annual_rate <= -1.0 {
        return Err(EconError::GrowthOutOfRange(annual_rate));
    }
    Ok((1.0 + annual_rate).powf(1.0 / 12.0))
}

/// One draw from a Pareto(shape, scale) distribution via inversion:
/// `scale * U^(-1/shape)` with U uniform on (0, 1].
pub fn pareto_draw<R: Rng>(rng: &mut R, shape: f64, scale: f64) -> f64 {
    let u = 1.0 - rng.random::<f64>(); // (0, 1]
    scale * u.powf(-1.0 / shape)
}

/// Annual GDP history for the three core nodes (US, China, Russia).
#[derive(Debug, Clone, Default)]
pub struct CoreGdpHistory {
    pub series: [Vec<(i32, f64)>; 3],
}

/// Constant seeds used when no history is supplied: 2010-scale output
/// levels (purchasing-power basis) for the US, China, and Russia.
pub const SYNTHETIC_2010_GDP: [f64; 3] = [15.049e12, 12.321e12, 3.241e12];

impl CoreGdpHistory {
    /// History bundled with the crate: annual output 2010-2024 on a
    /// purchasing-power basis, under which China's output passes the US
    /// level in early 2016.
    pub fn bundled() -> Self {
        Self::from_csv_str(include_str!("../data/core_gdp.csv"))
            .expect("bundled core GDP data is well-formed")
    }

    /// An empty history; core paths fall back to the synthetic 2010
    /// seeds grown at the configured rates.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Parse `node_id,year,gdp_usd` rows for nodes 0-2.
    pub fn from_csv_str(text: &str) -> Result<Self, EconError> {
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let mut history = CoreGdpHistory::default();
        for record in reader.records() {
            let record = record.map_err(|e| EconError::HistoryParse(e.to_string()))?;
            let parse = |i: usize| -> Result<&str, EconError> {
                record
                    .get(i)
                    .ok_or_else(|| EconError::HistoryParse(format!("short row: {record:?}")))
            };
            let node: usize = parse(0)?
                .trim()
                .parse()
                .map_err(|e| EconError::HistoryParse(format!("node_id: {e}")))?;
            let year: i32 = parse(1)?
                .trim()
                .parse()
                .map_err(|e| EconError::HistoryParse(format!("year: {e}")))?;
            let gdp: f64 = parse(2)?
                .trim()
                .parse()
                .map_err(|e| EconError::HistoryParse(format!("gdp_usd: {e}")))?;
            if node > 2 {
                return Err(EconError::HistoryParse(format!(
                    "node_id {node} is not a core node"
                )));
            }
            history.series[node].push((year, gdp));
        }
        for series in &mut history.series {
            series.sort_by_key(|&(year, _)| year);
        }
        Ok(history)
    }

    pub fn is_empty(&self) -> bool {
        self.series.iter().all(Vec::is_empty)
    }
}

/// Build the monthly GDP path of every node out to `horizon` months.
/// Core nodes follow their interpolated history and are extrapolated at
/// the configured rates once the history runs out; peripheral nodes draw
/// an initial level from a Pareto distribution and grow at the uniform
/// peripheral rate.
pub fn init_gdps<R: Rng>(
    config: &SimConfig,
    history: &CoreGdpHistory,
    rng: &mut R,
) -> Result<Vec<GdpSeries>, EconError> {
    let horizon = config.horizon_months.max(1);
    let core_growth = [config.growth_us, config.growth_cn, config.growth_ru];
    let mut all = Vec::with_capacity(config.n_countries);
    for node in 0..3.min(config.n_countries) {
        let factor = annual_to_monthly_factor(core_growth[node])?;
        let annual = &history.series[node];
        let mut values = match annual.len() {
            0 => vec![SYNTHETIC_2010_GDP[node]],
            1 => vec![annual[0].1],
            _ => interpolate_monthly(annual)?,
        };
        while values.len() < horizon {
            let last = *values.last().expect("non-empty");
            values.push(last * factor);
        }
        values.truncate(horizon);
        all.push(GdpSeries {
            node,
            values,
            source: GdpSource::HistoricalExtrapolated,
        });
    }
    let periph_factor = annual_to_monthly_factor(config.growth_periph)?;
    for node in 3..config.n_countries {
        let initial = pareto_draw(rng, config.pareto_shape, config.pareto_scale);
        let mut values = Vec::with_capacity(horizon);
        let mut v = initial;
        for _ in 0..horizon {
            values.push(v);
            v *= periph_factor;
        }
        all.push(GdpSeries {
            node,
            values,
            source: GdpSource::ParetoDrawn,
        });
    }
    Ok(all)
}

/// Military spending as a fixed share of GDP.
pub fn military_spending(gdp: f64, ms_share: f64) -> f64 {
    debug_assert!(gdp >= 0.0 && (0.0..=1.0).contains(&ms_share));
    ms_share * gdp
}

/// Distribute newly printed dollars among dollarized countries in
/// proportion to GDP, and accrue debt interest on the expansion.
pub fn monetary_expansion(
    state: &mut WorldState,
    printed: f64,
    debt_interest_rate: f64,
) {
    debug_assert!(printed >= 0.0);
    let total: f64 = state
        .countries
        .iter()
        .filter(|c| c.currency == CurrencyLabel::Usd)
        .map(|c| c.gdp)
        .sum();
    // Node 0 never leaves the dollar, so the denominator is positive.
    for country in &mut state.countries {
        if country.currency == CurrencyLabel::Usd {
            country.dollars_received += printed * country.gdp / total;
        }
    }
    state.cumulative_printed += printed;
    state.us_debt_interest += debt_interest_rate * printed;
}

/// Effective inflation faced by the issuer at dedollarization level `f`:
/// `base / (1 - f)`.
pub fn effective_inflation(dedollarized: f64, base: f64) -> Result<f64, EconError> {
    if !(0.0..1.0).contains(&dedollarized) {
        return Err(EconError::InflationDomain(dedollarized));
    }
    Ok(base / (1.0 - dedollarized))
}
