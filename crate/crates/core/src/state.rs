//! Per-country and world state carried through a simulation run.

use crate::network::{CurrencyLabel, Graph};
use serde::{Deserialize, Serialize};

pub const US: usize = 0;
pub const CHINA: usize = 1;
pub const RUSSIA: usize = 2;

/// First node that is free to dedollarize; nodes below it are the
/// currency issuers themselves.
pub const FIRST_PERIPHERAL: usize = 3;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CountryState {
    pub id: usize,
    /// Current GDP, USD per year.
    pub gdp: f64,
    /// Dedollarization level in [0, 1]; non-decreasing over a run.
    pub dedollarization: f64,
    pub currency: CurrencyLabel,
    /// Dollar fraction of reserves in [0, 1]; non-increasing over a run.
    pub dollar_holding: f64,
    /// Cumulative dollars received through monetary expansion.
    pub dollars_received: f64,
}

/// Full world state at one month.
#[derive(Debug, Clone)]
pub struct WorldState {
    pub month: usize,
    pub countries: Vec<CountryState>,
    pub graph: Graph,
    /// Reserve-stock weights: output levels at month 0. Reserves are
    /// sized once at setup, so the world dollar share is a weighted mean
    /// over these fixed weights and declines monotonically as holdings
    /// fall.
    pub fer_weights: Vec<f64>,
    /// Month China's GDP first exceeds US GDP, if within the horizon.
    pub trigger_month: Option<usize>,
    /// US debt-service burden, USD per year.
    pub us_debt_interest: f64,
    /// Total dollars printed so far.
    pub cumulative_printed: f64,
    /// GDP-weighted mean dollar-holding share across all countries.
    pub fer_dollar_share: f64,
    /// Fraction of countries with any dedollarization (d > 0).
    pub dedollarized_fraction: f64,
    /// Mean dedollarization level across all countries; drives the
    /// effective-inflation feedback.
    pub mean_dedollarization: f64,
}

impl WorldState {
    pub fn new(graph: Graph, initial_gdps: &[f64], initial_dollar_share: f64) -> Self {
        let n = graph.node_count();
        assert_eq!(initial_gdps.len(), n);
        let countries = (0..n)
            .map(|id| CountryState {
                id,
                gdp: initial_gdps[id],
                dedollarization: 0.0,
                currency: match id {
                    CHINA => CurrencyLabel::Cny,
                    RUSSIA => CurrencyLabel::Rub,
                    _ => CurrencyLabel::Usd,
                },
                dollar_holding: initial_dollar_share,
                dollars_received: 0.0,
            })
            .collect();
        WorldState {
            month: 0,
            countries,
            graph,
            fer_weights: initial_gdps.to_vec(),
            trigger_month: None,
            us_debt_interest: 0.0,
            cumulative_printed: 0.0,
            fer_dollar_share: initial_dollar_share,
            dedollarized_fraction: 0.0,
            mean_dedollarization: 0.0,
        }
    }

    pub fn n(&self) -> usize {
        self.countries.len()
    }

    pub fn labels(&self) -> Vec<CurrencyLabel> {
        self.countries.iter().map(|c| c.currency).collect()
    }

    pub fn dedollarization_levels(&self) -> Vec<f64> {
        self.countries.iter().map(|c| c.dedollarization).collect()
    }

    /// Fraction of countries carrying the given label.
    pub fn currency_share(&self, label: CurrencyLabel) -> f64 {
        let count = self
            .countries
            .iter()
            .filter(|c| c.currency == label)
            .count();
        count as f64 / self.n() as f64
    }

    /// GDP-weighted fraction of world output under the given label.
    pub fn currency_share_gdp_weighted(&self, label: CurrencyLabel) -> f64 {
        let total: f64 = self.countries.iter().map(|c| c.gdp).sum();
        let held: f64 = self
            .countries
            .iter()
            .filter(|c| c.currency == label)
            .map(|c| c.gdp)
            .sum();
        held / total
    }

    /// Recompute the derived aggregate fields from per-country state.
    pub fn refresh_aggregates(&mut self) {
        let n = self.n() as f64;
        let dedollarized = self
            .countries
            .iter()
            .filter(|c| c.dedollarization > 0.0)
            .count();
        self.dedollarized_fraction = dedollarized as f64 / n;
        self.mean_dedollarization =
            self.countries.iter().map(|c| c.dedollarization).sum::<f64>() / n;
        let total_weight: f64 = self.fer_weights.iter().sum();
        let weighted: f64 = self
            .countries
            .iter()
            .zip(&self.fer_weights)
            .map(|(c, &w)| w * c.dollar_holding)
            .sum();
        self.fer_dollar_share = weighted / total_weight;
    }
}
