//! Single runs and Monte Carlo ensembles: the monthly step loop, metric
//! trajectories, pointwise ensemble statistics, per-currency subgraph
//! measures, and network snapshots.

use crate::cascade::{
    currency_switch_step, decay_envelope, detect_trigger, inherent_shock_step,
    neighbor_influence_step, CascadeError, CascadeEvent,
};
use crate::config::SimConfig;
use crate::econ::{effective_inflation, init_gdps, monetary_expansion, CoreGdpHistory, EconError};
use crate::network::{build_network, CurrencyLabel, Graph, NetworkError, NodeLinkGraph};
use crate::rng::run_stream;
use crate::state::{WorldState, CHINA, US};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SimError {
    #[error(transparent)]
    Econ(#[from] EconError),
    #[error(transparent)]
    Network(#[from] NetworkError),
    #[error(transparent)]
    Cascade(#[from] CascadeError),
    #[error(transparent)]
    Config(#[from] crate::config::ConfigError),
    #[error("snapshot I/O: {0}")]
    Io(#[from] std::io::Error),
}

/// Per-month metric series for one run.
#[derive(Debug, Clone, Default)]
pub struct Trajectory {
    /// Month China's output first exceeds the US level, if within the
    /// horizon.
    pub trigger_month: Option<usize>,
    /// Mean dedollarization level across all countries.
    pub mean_dedollarization: Vec<f64>,
    /// Effective US inflation driven by the mean dedollarization level.
    pub inflation: Vec<f64>,
    /// Currency shares as fractions of countries.
    pub share_usd: Vec<f64>,
    pub share_cny: Vec<f64>,
    pub share_rub: Vec<f64>,
    /// US debt-service burden, USD per year.
    pub debt_interest: Vec<f64>,
    /// GDP-weighted dollar share of reserves.
    pub fer_dollar_share: Vec<f64>,
    /// Fraction of countries with any dedollarization; auxiliary series.
    pub dedollarized_fraction: Vec<f64>,
    /// GDP-weighted currency shares; auxiliary series.
    pub gdpw_share_usd: Vec<f64>,
    pub gdpw_share_cny: Vec<f64>,
    pub gdpw_share_rub: Vec<f64>,
    /// Final cumulative dollars received, per country.
    pub dollars_received_final: Vec<f64>,
}

/// Column order of the trajectory CSV. The first eight series form the
/// stable export contract; the rest are auxiliary.
pub const SERIES_NAMES: [&str; 11] = [
    "mean_d",
    "inflation",
    "share_usd",
    "share_cny",
    "share_rub",
    "debt_interest",
    "fer_dollar_share",
    "dedollarized_fraction",
    "gdpw_share_usd",
    "gdpw_share_cny",
    "gdpw_share_rub",
];

impl Trajectory {
    pub fn months(&self) -> usize {
        self.mean_dedollarization.len()
    }

    /// Named series in CSV column order.
    pub fn series(&self) -> [(&'static str, &Vec<f64>); 11] {
        [
            ("mean_d", &self.mean_dedollarization),
            ("inflation", &self.inflation),
            ("share_usd", &self.share_usd),
            ("share_cny", &self.share_cny),
            ("share_rub", &self.share_rub),
            ("debt_interest", &self.debt_interest),
            ("fer_dollar_share", &self.fer_dollar_share),
            ("dedollarized_fraction", &self.dedollarized_fraction),
            ("gdpw_share_usd", &self.gdpw_share_usd),
            ("gdpw_share_cny", &self.gdpw_share_cny),
            ("gdpw_share_rub", &self.gdpw_share_rub),
        ]
    }

    /// Render the trajectory as CSV, one row per month.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("month,");
        out.push_str(&SERIES_NAMES.join(","));
        out.push('\n');
        let series = self.series();
        for month in 0..self.months() {
            out.push_str(&format!("{month}"));
            for (_, values) in &series {
                out.push_str(&format!(",{}", values[month]));
            }
            out.push('\n');
        }
        out
    }
}

/// Pointwise mean and standard deviation of one metric over runs.
#[derive(Debug, Clone)]
pub struct SeriesStats {
    pub mean: Vec<f64>,
    pub std: Vec<f64>,
}

/// Ensemble aggregate over R runs.
#[derive(Debug, Clone)]
pub struct EnsembleStats {
    pub runs: usize,
    pub master_seed: u64,
    pub months: usize,
    /// (series name, stats) in CSV column order.
    pub series: Vec<(&'static str, SeriesStats)>,
    pub trigger_months: Vec<Option<usize>>,
    /// Mean and std of final dollars received, per country.
    pub dollars_received_final: SeriesStats,
}

impl EnsembleStats {
    pub fn get(&self, name: &str) -> Option<&SeriesStats> {
        self.series
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, s)| s)
    }

    /// Render the ensemble as CSV with `_mean`/`_std` suffixed columns.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("month");
        for (name, _) in &self.series {
            out.push_str(&format!(",{name}_mean,{name}_std"));
        }
        out.push('\n');
        for month in 0..self.months {
            out.push_str(&format!("{month}"));
            for (_, stats) in &self.series {
                out.push_str(&format!(",{},{}", stats.mean[month], stats.std[month]));
            }
            out.push('\n');
        }
        out
    }
}

/// Options for a full run: event capture and snapshot schedule.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub record_events: bool,
    /// Capture a network snapshot every this many months (plus the final
    /// month). `None` disables snapshots.
    pub snapshot_every: Option<usize>,
}

/// Everything a single run can produce.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub trajectory: Trajectory,
    pub events: Vec<CascadeEvent>,
    pub snapshots: Vec<(usize, NodeLinkGraph)>,
}

/// Driving state of one simulation run; step it manually for
/// invariant-level inspection, or use [`run_simulation`].
pub struct SimEngine {
    config: SimConfig,
    world: WorldState,
    gdp_paths: Vec<Vec<f64>>,
    rng: ChaCha8Rng,
    month: usize,
    pub events: Vec<CascadeEvent>,
    record_events: bool,
}

impl SimEngine {
    pub fn new(
        config: &SimConfig,
        history: &CoreGdpHistory,
        run_index: u64,
    ) -> Result<Self, SimError> {
        config.validate()?;
        let mut rng = run_stream(config.master_seed, run_index);
        let series = init_gdps(config, history, &mut rng)?;
        let gdp_paths: Vec<Vec<f64>> = series.into_iter().map(|s| s.values).collect();
        let initial: Vec<f64> = gdp_paths.iter().map(|v| v[0]).collect();
        let trigger = detect_trigger(&gdp_paths[US], &gdp_paths[CHINA])?;
        let graph = build_network(config, &initial, &mut rng)?;
        let mut world = WorldState::new(graph, &initial, config.initial_dollar_share);
        world.trigger_month = trigger;
        world.us_debt_interest = config.initial_debt_interest;
        Ok(SimEngine {
            config: config.clone(),
            world,
            gdp_paths,
            rng,
            month: 0,
            events: Vec::new(),
            record_events: false,
        })
    }

    pub fn record_events(&mut self, on: bool) {
        self.record_events = on;
    }

    pub fn world(&self) -> &WorldState {
        &self.world
    }

    pub fn trigger_month(&self) -> Option<usize> {
        self.world.trigger_month
    }

    pub fn months_done(&self) -> usize {
        self.month
    }

    /// Advance one month. Returns false once the horizon is reached.
    ///
    /// Step order within a month: GDP growth, monetary expansion,
    /// inherent shocks, neighbor influence, currency switches, metric
    /// refresh.
    pub fn step(&mut self) -> bool {
        if self.month >= self.config.horizon_months {
            return false;
        }
        let t = self.month;
        self.world.month = t;
        for (node, path) in self.gdp_paths.iter().enumerate() {
            self.world.countries[node].gdp = path[t];
        }
        let printed = self.config.money_printed(self.world.countries[US].gdp);
        monetary_expansion(&mut self.world, printed, self.config.debt_interest_rate);

        let mut scratch = Vec::new();
        let events = if self.record_events {
            &mut self.events
        } else {
            &mut scratch
        };
        if let Some(trigger) = self.world.trigger_month {
            if t >= trigger {
                let envelope = decay_envelope(t, trigger, self.config.decay_horizon_months);
                if envelope > 0.0 {
                    inherent_shock_step(
                        &mut self.world,
                        envelope,
                        &self.config,
                        &mut self.rng,
                        events,
                    );
                    neighbor_influence_step(
                        &mut self.world,
                        envelope,
                        &self.config,
                        &mut self.rng,
                        events,
                    );
                }
            }
        }
        let events = if self.record_events {
            &mut self.events
        } else {
            &mut scratch
        };
        currency_switch_step(&mut self.world, &self.config, &mut self.rng, events);
        self.world.refresh_aggregates();
        self.month += 1;
        true
    }

    fn record_into(&self, trajectory: &mut Trajectory) {
        let world = &self.world;
        trajectory
            .mean_dedollarization
            .push(world.mean_dedollarization);
        let inflation = effective_inflation(world.mean_dedollarization, self.config.base_inflation)
            .expect("mean dedollarization stays below 1 while the hub holds dollars");
        trajectory.inflation.push(inflation);
        trajectory
            .share_usd
            .push(world.currency_share(CurrencyLabel::Usd));
        trajectory
            .share_cny
            .push(world.currency_share(CurrencyLabel::Cny));
        trajectory
            .share_rub
            .push(world.currency_share(CurrencyLabel::Rub));
        trajectory.debt_interest.push(world.us_debt_interest);
        trajectory.fer_dollar_share.push(world.fer_dollar_share);
        trajectory
            .dedollarized_fraction
            .push(world.dedollarized_fraction);
        trajectory
            .gdpw_share_usd
            .push(world.currency_share_gdp_weighted(CurrencyLabel::Usd));
        trajectory
            .gdpw_share_cny
            .push(world.currency_share_gdp_weighted(CurrencyLabel::Cny));
        trajectory
            .gdpw_share_rub
            .push(world.currency_share_gdp_weighted(CurrencyLabel::Rub));
    }

    /// Run to the horizon, recording every month.
    pub fn run(mut self, options: &RunOptions) -> RunOutput {
        self.record_events = self.record_events || options.record_events;
        let mut trajectory = Trajectory {
            trigger_month: self.world.trigger_month,
            ..Trajectory::default()
        };
        let mut snapshots = Vec::new();
        while self.step() {
            self.record_into(&mut trajectory);
            let t = self.month - 1;
            if let Some(every) = options.snapshot_every {
                let last = t + 1 == self.config.horizon_months;
                if (every > 0 && t % every == 0) || last {
                    snapshots.push((
                        t,
                        NodeLinkGraph::new(
                            &self.world.graph,
                            &self.world.labels(),
                            &self.world.dedollarization_levels(),
                        ),
                    ));
                }
            }
        }
        trajectory.dollars_received_final = self
            .world
            .countries
            .iter()
            .map(|c| c.dollars_received)
            .collect();
        RunOutput {
            trajectory,
            events: self.events,
            snapshots,
        }
    }
}

/// One deterministic run: the stream is derived from
/// `(config.master_seed, run_index)`.
pub fn run_simulation(
    config: &SimConfig,
    history: &CoreGdpHistory,
    run_index: u64,
) -> Result<Trajectory, SimError> {
    let engine = SimEngine::new(config, history, run_index)?;
    Ok(engine.run(&RunOptions::default()).trajectory)
}

/// A full run with event capture and snapshots.
pub fn run_simulation_full(
    config: &SimConfig,
    history: &CoreGdpHistory,
    run_index: u64,
    options: &RunOptions,
) -> Result<RunOutput, SimError> {
    let engine = SimEngine::new(config, history, run_index)?;
    Ok(engine.run(options))
}

/// Pointwise mean/std aggregation of trajectories; population standard
/// deviation, so a single run reports zero spread.
pub fn aggregate_trajectories(
    trajectories: &[Trajectory],
    master_seed: u64,
) -> EnsembleStats {
    assert!(!trajectories.is_empty());
    let months = trajectories[0].months();
    let runs = trajectories.len();
    let mut series = Vec::new();
    for (index, name) in SERIES_NAMES.iter().enumerate() {
        let columns: Vec<&Vec<f64>> = trajectories
            .iter()
            .map(|t| t.series()[index].1)
            .collect();
        series.push((*name, pointwise_stats(&columns, months)));
    }
    let received: Vec<&Vec<f64>> = trajectories
        .iter()
        .map(|t| &t.dollars_received_final)
        .collect();
    let countries = received.first().map(|v| v.len()).unwrap_or(0);
    EnsembleStats {
        runs,
        master_seed,
        months,
        series,
        trigger_months: trajectories.iter().map(|t| t.trigger_month).collect(),
        dollars_received_final: pointwise_stats(&received, countries),
    }
}

fn pointwise_stats(columns: &[&Vec<f64>], length: usize) -> SeriesStats {
    let runs = columns.len() as f64;
    let mut mean = vec![0.0; length];
    let mut std = vec![0.0; length];
    for t in 0..length {
        let sum: f64 = columns.iter().map(|c| c[t]).sum();
        mean[t] = sum / runs;
        let variance: f64 = columns
            .iter()
            .map(|c| {
                let d = c[t] - mean[t];
                d * d
            })
            .sum::<f64>()
            / runs;
        std[t] = variance.sqrt();
    }
    SeriesStats { mean, std }
}

/// Run the full ensemble. Runs execute in parallel but aggregation is
/// index-ordered, so the result is independent of thread scheduling.
pub fn monte_carlo(
    config: &SimConfig,
    history: &CoreGdpHistory,
) -> Result<EnsembleStats, SimError> {
    config.validate()?;
    let trajectories: Vec<Trajectory> = (0..config.runs as u64)
        .into_par_iter()
        .map(|index| run_simulation(config, history, index))
        .collect::<Result<_, _>>()?;
    Ok(aggregate_trajectories(&trajectories, config.master_seed))
}

/// Metrics of the subgraph induced by one currency's adopters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubgraphMetrics {
    pub node_count: usize,
    pub avg_degree: f64,
    pub global_clustering: f64,
}

/// Induced-subgraph statistics for the given currency label.
pub fn subgraph_metrics(
    graph: &Graph,
    labels: &[CurrencyLabel],
    currency: CurrencyLabel,
) -> SubgraphMetrics {
    assert_eq!(labels.len(), graph.node_count());
    let keep: Vec<bool> = labels.iter().map(|&l| l == currency).collect();
    let sub = graph.induced(&keep);
    let nodes = sub.node_count();
    if nodes == 0 {
        return SubgraphMetrics {
            node_count: 0,
            avg_degree: 0.0,
            global_clustering: 0.0,
        };
    }
    let avg_degree = 2.0 * sub.edge_count() as f64 / nodes as f64;
    let triples = sub.connected_triples();
    let global_clustering = if triples == 0 {
        0.0
    } else {
        3.0 * sub.triangle_count() as f64 / triples as f64
    };
    SubgraphMetrics {
        node_count: nodes,
        avg_degree,
        global_clustering,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SnapshotFormat {
    Json,
    Dot,
}

/// Serialize the world's network with currency and dedollarization
/// attributes.
pub fn snapshot_to_string(world: &WorldState, format: SnapshotFormat) -> String {
    let labels = world.labels();
    match format {
        SnapshotFormat::Json => {
            let doc = NodeLinkGraph::new(&world.graph, &labels, &world.dedollarization_levels());
            serde_json::to_string_pretty(&doc).expect("snapshot serializes")
        }
        SnapshotFormat::Dot => crate::network::to_dot(&world.graph, &labels),
    }
}

/// Write a snapshot file; see [`snapshot_to_string`].
pub fn export_snapshot(
    world: &WorldState,
    path: &std::path::Path,
    format: SnapshotFormat,
) -> Result<(), SimError> {
    std::fs::write(path, snapshot_to_string(world, format))?;
    Ok(())
}

/// Load a JSON node-link snapshot back into a graph with labels and
/// dedollarization levels.
pub fn load_snapshot_json(
    text: &str,
) -> Result<(Graph, Vec<CurrencyLabel>, Vec<f64>), SimError> {
    let doc: NodeLinkGraph = serde_json::from_str(text)
        .map_err(|e| SimError::Io(std::io::Error::new(std::io::ErrorKind::InvalidData, e)))?;
    Ok(doc.to_graph()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn fast_config() -> SimConfig {
        SimConfig {
            n_countries: 40,
            horizon_months: 120,
            runs: 4,
            ..SimConfig::default()
        }
    }

    /// Single-point histories that cross at an analytically known month.
    fn crossing_history(us0: f64, cn0: f64) -> CoreGdpHistory {
        CoreGdpHistory {
            series: [
                vec![(2010, us0)],
                vec![(2010, cn0)],
                vec![(2010, 0.5e12)],
            ],
        }
    }

    #[test]
    fn no_trigger_means_flat_zero() {
        // China stays below the US for the whole horizon.
        let config = SimConfig {
            horizon_months: 60,
            ..fast_config()
        };
        let history = crossing_history(20.0e12, 10.0e12);
        let trajectory = run_simulation(&config, &history, 0).unwrap();
        assert_eq!(trajectory.trigger_month, None);
        for t in 0..trajectory.months() {
            assert_eq!(trajectory.mean_dedollarization[t], 0.0);
            assert_relative_eq!(trajectory.inflation[t], 0.02);
        }
    }

    #[test]
    fn trigger_matches_closed_form_crossing() {
        let config = SimConfig {
            horizon_months: 200,
            ..fast_config()
        };
        let us0 = 20.0e12;
        let cn0 = 18.0e12;
        let history = crossing_history(us0, cn0);
        let trajectory = run_simulation(&config, &history, 0).unwrap();
        // strict crossing: first integer t with cn0*b^t > us0*a^t,
        // i.e. t > ln(us0/cn0) / ln(b/a)
        let a = 1.02f64.powf(1.0 / 12.0);
        let b = 1.03f64.powf(1.0 / 12.0);
        let x = (us0 / cn0).ln() / (b / a).ln();
        let expected = x.floor() as usize + 1;
        assert_eq!(trajectory.trigger_month, Some(expected));
        for t in 0..expected {
            assert_eq!(trajectory.mean_dedollarization[t], 0.0);
        }
        assert!(trajectory.mean_dedollarization[trajectory.months() - 1] > 0.0);
    }

    #[test]
    fn same_seed_and_index_bit_identical() {
        let config = fast_config();
        let history = CoreGdpHistory::bundled();
        let a = run_simulation(&config, &history, 2).unwrap();
        let b = run_simulation(&config, &history, 2).unwrap();
        assert_eq!(a.to_csv(), b.to_csv());
    }

    #[test]
    fn horizon_zero_gives_empty_trajectory() {
        let config = SimConfig {
            horizon_months: 0,
            ..fast_config()
        };
        let trajectory = run_simulation(&config, &CoreGdpHistory::bundled(), 0).unwrap();
        assert_eq!(trajectory.months(), 0);
        assert!(trajectory.to_csv().lines().count() == 1);
    }

    #[test]
    fn single_run_ensemble_has_zero_std() {
        let config = SimConfig {
            runs: 1,
            ..fast_config()
        };
        let history = CoreGdpHistory::bundled();
        let stats = monte_carlo(&config, &history).unwrap();
        let single = run_simulation(&config, &history, 0).unwrap();
        let mean_d = stats.get("mean_d").unwrap();
        assert_eq!(mean_d.mean, single.mean_dedollarization);
        assert!(mean_d.std.iter().all(|&s| s == 0.0));
    }

    #[test]
    fn monte_carlo_matches_sequential_index_order() {
        // the parallel ensemble must equal a plain sequential loop over
        // run indices, whatever the thread scheduling did
        let config = fast_config();
        let history = CoreGdpHistory::bundled();
        let parallel = monte_carlo(&config, &history).unwrap();
        let trajectories: Vec<Trajectory> = (0..config.runs as u64)
            .map(|i| run_simulation(&config, &history, i).unwrap())
            .collect();
        let sequential = aggregate_trajectories(&trajectories, config.master_seed);
        assert_eq!(parallel.to_csv(), sequential.to_csv());
    }

    #[test]
    fn shares_sum_to_one_each_month() {
        let config = fast_config();
        let trajectory = run_simulation(&config, &CoreGdpHistory::bundled(), 1).unwrap();
        for t in 0..trajectory.months() {
            let sum =
                trajectory.share_usd[t] + trajectory.share_cny[t] + trajectory.share_rub[t];
            assert_relative_eq!(sum, 1.0, max_relative = 1e-9);
        }
    }

    #[test]
    fn recorded_inflation_matches_formula() {
        let config = fast_config();
        let trajectory = run_simulation(&config, &CoreGdpHistory::bundled(), 3).unwrap();
        for t in 0..trajectory.months() {
            let expected = 0.02 / (1.0 - trajectory.mean_dedollarization[t]);
            assert!((trajectory.inflation[t] - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn triangle_clustering_is_one() {
        let mut graph = Graph::with_nodes(3);
        graph.add_edge(0, 1).unwrap();
        graph.add_edge(1, 2).unwrap();
        graph.add_edge(0, 2).unwrap();
        let labels = vec![CurrencyLabel::Usd; 3];
        let metrics = subgraph_metrics(&graph, &labels, CurrencyLabel::Usd);
        assert_eq!(metrics.node_count, 3);
        assert_relative_eq!(metrics.avg_degree, 2.0);
        assert_relative_eq!(metrics.global_clustering, 1.0);
    }

    #[test]
    fn star_clustering_is_zero() {
        let mut graph = Graph::with_nodes(5);
        for i in 1..5 {
            graph.add_edge(0, i).unwrap();
        }
        let labels = vec![CurrencyLabel::Usd; 5];
        let metrics = subgraph_metrics(&graph, &labels, CurrencyLabel::Usd);
        assert_relative_eq!(metrics.avg_degree, 8.0 / 5.0);
        assert_relative_eq!(metrics.global_clustering, 0.0);
        let empty = subgraph_metrics(&graph, &labels, CurrencyLabel::Rub);
        assert_eq!(empty.node_count, 0);
        assert_relative_eq!(empty.avg_degree, 0.0);
    }

    #[test]
    fn mixed_label_metrics_match_bruteforce() {
        // 6-node graph with mixed labels; brute-force triangle and
        // triple enumeration over the induced USD subgraph.
        let mut graph = Graph::with_nodes(6);
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (0, 5)];
        for (a, b) in edges {
            graph.add_edge(a, b).unwrap();
        }
        let labels = vec![
            CurrencyLabel::Usd,
            CurrencyLabel::Cny,
            CurrencyLabel::Usd,
            CurrencyLabel::Usd,
            CurrencyLabel::Usd,
            CurrencyLabel::Rub,
        ];
        let keep: Vec<usize> = (0..6).filter(|&i| labels[i] == CurrencyLabel::Usd).collect();
        let has = |a: usize, b: usize| {
            labels[a] == CurrencyLabel::Usd
                && labels[b] == CurrencyLabel::Usd
                && graph.has_edge(a, b)
        };
        let mut triangles = 0;
        let mut triples = 0;
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate().skip(i + 1) {
                for &c in keep.iter().skip(j + 1) {
                    let e = [has(a, b), has(a, c), has(b, c)];
                    let count = e.iter().filter(|&&x| x).count();
                    if count == 3 {
                        triangles += 1;
                    }
                }
            }
            let degree = keep.iter().filter(|&&b| b != a && has(a, b)).count();
            triples += degree * degree.saturating_sub(1) / 2;
        }
        let expected_clustering = if triples == 0 {
            0.0
        } else {
            3.0 * triangles as f64 / triples as f64
        };
        let metrics = subgraph_metrics(&graph, &labels, CurrencyLabel::Usd);
        assert_eq!(metrics.node_count, keep.len());
        assert_relative_eq!(metrics.global_clustering, expected_clustering);
    }

    #[test]
    fn snapshot_roundtrip_and_pretrigger_labels() {
        let config = SimConfig {
            horizon_months: 24,
            ..fast_config()
        };
        // trigger far beyond the horizon
        let history = crossing_history(20.0e12, 10.0e12);
        let output = run_simulation_full(
            &config,
            &history,
            0,
            &RunOptions {
                record_events: true,
                snapshot_every: Some(12),
            },
        )
        .unwrap();
        assert!(output.events.is_empty());
        let (_, snapshot) = &output.snapshots[0];
        for node in snapshot.nodes.iter().skip(3) {
            assert_eq!(node.currency, CurrencyLabel::Usd);
        }
        let json = serde_json::to_string(snapshot).unwrap();
        let (graph, labels, d) = load_snapshot_json(&json).unwrap();
        let reexport = NodeLinkGraph::new(&graph, &labels, &d);
        assert_eq!(&reexport, snapshot);
    }

    #[test]
    fn dot_snapshot_conforms_to_grammar_subset() {
        let config = SimConfig {
            n_countries: 8,
            horizon_months: 1,
            min_degree: 3,
            ..SimConfig::default()
        };
        let engine = SimEngine::new(&config, &CoreGdpHistory::bundled(), 0).unwrap();
        let dot = snapshot_to_string(engine.world(), SnapshotFormat::Dot);
        // minimal DOT grammar check: graph block, node statements with
        // attribute lists, edge statements with `--`, closing brace
        let mut lines = dot.lines();
        assert_eq!(lines.next(), Some("graph world {"));
        let mut saw_edge = false;
        let mut closed = false;
        for line in lines {
            let line = line.trim();
            if line == "}" {
                closed = true;
                continue;
            }
            assert!(!closed, "content after closing brace");
            assert!(line.ends_with(';'), "unterminated statement: {line}");
            let statement = &line[..line.len() - 1];
            if statement.contains("--") {
                saw_edge = true;
                let parts: Vec<&str> = statement.split("--").collect();
                assert_eq!(parts.len(), 2);
                parts[0].trim().parse::<usize>().unwrap();
                parts[1].trim().parse::<usize>().unwrap();
            } else if let Some(bracket) = statement.find('[') {
                assert!(statement.ends_with(']'));
                let head = statement[..bracket].trim();
                if head != "node" {
                    head.parse::<usize>().unwrap();
                }
            }
        }
        assert!(saw_edge);
        assert!(closed);
    }
}
