//! The dedollarization cascade: trigger detection, decaying contagion
//! envelope, inherent shocks, neighbor influence, and currency switching.

use crate::config::SimConfig;
use crate::econ::military_spending;
use crate::network::CurrencyLabel;
use crate::state::{WorldState, FIRST_PERIPHERAL, US};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CascadeError {
    #[error("GDP series length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EventKind {
    Inherent,
    Neighbor,
    Switch,
}

impl EventKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EventKind::Inherent => "inherent",
            EventKind::Neighbor => "neighbor",
            EventKind::Switch => "switch",
        }
    }
}

/// Audit record of one cascade mechanism firing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CascadeEvent {
    pub month: usize,
    pub node: usize,
    pub kind: EventKind,
    /// Dedollarization increment; zero for switches.
    pub magnitude: f64,
    pub new_currency: Option<CurrencyLabel>,
}

/// First month at which China's GDP strictly exceeds US GDP, if any.
pub fn detect_trigger(gdp_us: &[f64], gdp_cn: &[f64]) -> Result<Option<usize>, CascadeError> {
    if gdp_us.len() != gdp_cn.len() {
        return Err(CascadeError::LengthMismatch(gdp_us.len(), gdp_cn.len()));
    }
    Ok(gdp_us
        .iter()
        .zip(gdp_cn)
        .position(|(us, cn)| cn > us))
}

/// Contagion envelope: full strength at the trigger, decaying linearly
/// to zero over `decay_months`, clamped to [0, 1].
pub fn decay_envelope(month: usize, trigger_month: usize, decay_months: usize) -> f64 {
    debug_assert!(decay_months >= 1);
    let elapsed = month.saturating_sub(trigger_month) as f64;
    (1.0 - elapsed / decay_months as f64).max(0.0)
}

/// Draw a dedollarization increment and apply it: `d` rises and the
/// dollar-holding share falls by the same amount, both clamped.
fn apply_increment<R: Rng>(world: &mut WorldState, node: usize, rng: &mut R) -> f64 {
    let magnitude = rng.random::<f64>() * world.fer_dollar_share;
    let country = &mut world.countries[node];
    country.dedollarization = (country.dedollarization + magnitude).min(1.0);
    country.dollar_holding = (country.dollar_holding - magnitude).max(0.0);
    magnitude
}

/// Idiosyncratic shocks: each peripheral node dedollarizes further with
/// probability `p_inherent_scale * envelope`.
pub fn inherent_shock_step<R: Rng>(
    world: &mut WorldState,
    envelope: f64,
    config: &SimConfig,
    rng: &mut R,
    events: &mut Vec<CascadeEvent>,
) {
    let p = config.p_inherent_scale * envelope;
    if p <= 0.0 {
        return;
    }
    for node in FIRST_PERIPHERAL..world.n() {
        if rng.random::<f64>() < p {
            let magnitude = apply_increment(world, node, rng);
            events.push(CascadeEvent {
                month: world.month,
                node,
                kind: EventKind::Inherent,
                magnitude,
                new_currency: None,
            });
        }
    }
}

/// Mean dedollarization among a node's neighbors, the US hub excluded.
/// Nodes whose only neighbor is the hub score zero.
pub fn neighbor_mean_dedollarization(world: &WorldState, node: usize) -> f64 {
    let mut sum = 0.0;
    let mut count = 0;
    for &j in world.graph.neighbors(node) {
        if j == US {
            continue;
        }
        sum += world.countries[j].dedollarization;
        count += 1;
    }
    if count == 0 {
        0.0
    } else {
        sum / count as f64
    }
}

/// Peer pressure: nodes whose neighborhood is sufficiently dedollarized
/// receive increments with probability `p_neighbor_scale * envelope`,
/// but only while US debt service exceeds US military spending.
pub fn neighbor_influence_step<R: Rng>(
    world: &mut WorldState,
    envelope: f64,
    config: &SimConfig,
    rng: &mut R,
    events: &mut Vec<CascadeEvent>,
) {
    let p = config.p_neighbor_scale * envelope;
    if p <= 0.0 {
        return;
    }
    let us_ms = military_spending(world.countries[US].gdp, config.ms_share);
    if world.us_debt_interest <= us_ms {
        return;
    }
    for node in FIRST_PERIPHERAL..world.n() {
        let neighborhood = neighbor_mean_dedollarization(world, node);
        if neighborhood >= config.neighbor_threshold && rng.random::<f64>() < p {
            let magnitude = apply_increment(world, node, rng);
            events.push(CascadeEvent {
                month: world.month,
                node,
                kind: EventKind::Neighbor,
                magnitude,
                new_currency: None,
            });
        }
    }
}

/// Currency adoption: a USD-labeled node whose dedollarization strictly
/// exceeds the switch threshold adopts the most common alternative
/// currency among its neighbors; ties, or a neighborhood with no
/// alternative adopters, resolve by a fair coin. Switches are permanent.
pub fn currency_switch_step<R: Rng>(
    world: &mut WorldState,
    config: &SimConfig,
    rng: &mut R,
    events: &mut Vec<CascadeEvent>,
) {
    for node in FIRST_PERIPHERAL..world.n() {
        let country = &world.countries[node];
        if country.currency != CurrencyLabel::Usd
            || country.dedollarization <= config.switch_threshold
        {
            continue;
        }
        let mut cny = 0;
        let mut rub = 0;
        for &j in world.graph.neighbors(node) {
            match world.countries[j].currency {
                CurrencyLabel::Cny => cny += 1,
                CurrencyLabel::Rub => rub += 1,
                CurrencyLabel::Usd => {}
            }
        }
        let new_currency = match cny.cmp(&rub) {
            std::cmp::Ordering::Greater => CurrencyLabel::Cny,
            std::cmp::Ordering::Less => CurrencyLabel::Rub,
            std::cmp::Ordering::Equal => {
                if rng.random::<bool>() {
                    CurrencyLabel::Cny
                } else {
                    CurrencyLabel::Rub
                }
            }
        };
        world.countries[node].currency = new_currency;
        events.push(CascadeEvent {
            month: world.month,
            node,
            kind: EventKind::Switch,
            magnitude: 0.0,
            new_currency: Some(new_currency),
        });
    }
}

/// Dollar share of world reserves: holdings averaged over the fixed
/// setup-time output weights. With a uniform reserves-to-GDP ratio the
/// ratio cancels.
pub fn update_fer_share(world: &mut WorldState) -> f64 {
    let total: f64 = world.fer_weights.iter().sum();
    let weighted: f64 = world
        .countries
        .iter()
        .zip(&world.fer_weights)
        .map(|(c, &w)| w * c.dollar_holding)
        .sum();
    world.fer_dollar_share = weighted / total;
    world.fer_dollar_share
}

/// Render the event log as CSV.
pub fn events_to_csv(events: &[CascadeEvent]) -> String {
    let mut out = String::from("month,node,kind,magnitude,new_currency\n");
    for event in events {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            event.month,
            event.node,
            event.kind.as_str(),
            event.magnitude,
            event.new_currency.map(|c| c.as_str()).unwrap_or("")
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{build_network, Graph};
    use crate::rng::run_stream;
    use approx::assert_relative_eq;

    fn world_with_ring(n: usize) -> WorldState {
        let mut graph = Graph::with_nodes(n);
        for i in 1..n {
            graph.add_edge(0, i).unwrap();
        }
        for i in 1..n {
            let j = if i + 1 < n { i + 1 } else { 1 };
            if !graph.has_edge(i, j) {
                graph.add_edge(i, j).unwrap();
            }
        }
        WorldState::new(graph, &vec![1.0e12; n], 0.56)
    }

    #[test]
    fn trigger_detection() {
        assert_eq!(
            detect_trigger(&[3.0, 3.0, 3.0], &[1.0, 2.0, 2.9]).unwrap(),
            None
        );
        let us: Vec<f64> = (0..60).map(|t| 100.0 - t as f64).collect();
        let cn: Vec<f64> = (0..60).map(|t| 60.0 + t as f64).collect();
        // us(t) = 100 - t, cn(t) = 60 + t; strict crossing at t = 21
        assert_eq!(detect_trigger(&us, &cn).unwrap(), Some(21));
        assert_eq!(detect_trigger(&[1.0, 1.0], &[1.0, 1.0]).unwrap(), None);
        assert!(detect_trigger(&[1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn constructed_series_crossing_at_month_37() {
        let us: Vec<f64> = (0..80).map(|t| 1000.0 * 1.001f64.powi(t)).collect();
        let cn: Vec<f64> = (0..80).map(|t| 900.0 * 1.004f64.powi(t)).collect();
        // solve 900 * 1.004^t > 1000 * 1.001^t:
        // t > ln(1000/900)/ln(1.004/1.001) = 35.17 -> first strict month 36
        assert_eq!(detect_trigger(&us, &cn).unwrap(), Some(36));
    }

    #[test]
    fn envelope_anchor_points() {
        assert_relative_eq!(decay_envelope(50, 60, 180), 1.0);
        assert_relative_eq!(decay_envelope(60, 60, 180), 1.0);
        assert_relative_eq!(decay_envelope(150, 60, 180), 0.5);
        assert_relative_eq!(decay_envelope(240, 60, 180), 0.0);
        assert_relative_eq!(decay_envelope(500, 60, 180), 0.0);
    }

    #[test]
    fn zero_envelope_fires_nothing() {
        let mut world = world_with_ring(12);
        let config = SimConfig::default();
        let mut events = Vec::new();
        let mut rng = run_stream(5, 0);
        inherent_shock_step(&mut world, 0.0, &config, &mut rng, &mut events);
        assert!(events.is_empty());
    }

    #[test]
    fn inherent_rate_calibration() {
        // At full envelope each peripheral node fires with p = 0.02.
        // 10^5 node-months: binomial sd = sqrt(p(1-p)/n) ~ 4.4e-4.
        let config = SimConfig::default();
        let n = 103; // 100 peripheral nodes
        let mut world = world_with_ring(n);
        let mut rng = run_stream(77, 0);
        let mut fired = 0usize;
        let rounds = 1000;
        for _ in 0..rounds {
            let mut events = Vec::new();
            inherent_shock_step(&mut world, 1.0, &config, &mut rng, &mut events);
            fired += events.len();
            for c in &mut world.countries {
                c.dedollarization = 0.0;
                c.dollar_holding = 0.56;
            }
        }
        let rate = fired as f64 / (rounds * (n - 3)) as f64;
        assert!((rate - 0.02).abs() < 0.002, "empirical rate {rate}");
    }

    #[test]
    fn increments_are_bounded_by_fer_share() {
        let config = SimConfig::default();
        let mut world = world_with_ring(40);
        world.fer_dollar_share = 0.3;
        let mut rng = run_stream(8, 0);
        let mut events = Vec::new();
        for _ in 0..200 {
            inherent_shock_step(&mut world, 1.0, &config, &mut rng, &mut events);
        }
        assert!(!events.is_empty());
        for event in &events {
            assert!(event.magnitude <= 0.3);
            assert!(event.magnitude >= 0.0);
        }
    }

    #[test]
    fn neighbor_influence_respects_gates() {
        let config = SimConfig::default();
        let mut rng = run_stream(21, 0);

        // all neighbors at zero: nothing can fire
        let mut world = world_with_ring(12);
        world.us_debt_interest = 1.0e15;
        let mut events = Vec::new();
        neighbor_influence_step(&mut world, 1.0, &config, &mut rng, &mut events);
        assert!(events.is_empty());

        // neighborhood hot but debt gate closed
        let mut world = world_with_ring(12);
        for node in 3..12 {
            world.countries[node].dedollarization = 0.3;
        }
        world.us_debt_interest = 0.0;
        let mut events = Vec::new();
        neighbor_influence_step(&mut world, 1.0, &config, &mut rng, &mut events);
        assert!(events.is_empty());
    }

    #[test]
    fn neighbor_boundary_is_inclusive_and_rate_calibrated() {
        // neighborhood mean exactly at the threshold fires at p = 0.008
        let config = SimConfig::default();
        let n = 103;
        let mut world = world_with_ring(n);
        for node in 1..n {
            world.countries[node].dedollarization = 0.25;
        }
        world.us_debt_interest = 1.0e15; // gate open
        let mut rng = run_stream(31, 0);
        let mut fired = 0usize;
        let rounds = 1000;
        for _ in 0..rounds {
            let mut events = Vec::new();
            neighbor_influence_step(&mut world, 1.0, &config, &mut rng, &mut events);
            fired += events.len();
            for node in 3..n {
                world.countries[node].dedollarization = 0.25;
                world.countries[node].dollar_holding = 0.56;
            }
        }
        let rate = fired as f64 / (rounds * (n - 3)) as f64;
        assert!((rate - 0.008).abs() < 0.001, "empirical rate {rate}");
    }

    #[test]
    fn hub_only_neighborhood_scores_zero() {
        let mut graph = Graph::with_nodes(4);
        graph.add_edge(0, 1).unwrap();
        graph.add_edge(0, 2).unwrap();
        graph.add_edge(0, 3).unwrap();
        graph.add_edge(1, 2).unwrap();
        let mut world = WorldState::new(graph, &[1.0e12; 4], 0.56);
        world.countries[1].dedollarization = 0.9;
        world.countries[2].dedollarization = 0.9;
        // node 3 only touches the hub
        assert_relative_eq!(neighbor_mean_dedollarization(&world, 3), 0.0);
    }

    #[test]
    fn switch_takes_strict_majority() {
        let mut graph = Graph::with_nodes(7);
        for i in 1..7 {
            graph.add_edge(0, i).unwrap();
        }
        for i in [1, 3, 4] {
            if !graph.has_edge(6, i) {
                graph.add_edge(6, i).unwrap();
            }
        }
        graph.add_edge(6, 2).unwrap();
        let mut world = WorldState::new(graph, &[1.0e12; 7], 0.56);
        // neighbors of 6: hub, CNY(=1), RUB(=2), and nodes 3,4 switched to CNY
        world.countries[3].currency = CurrencyLabel::Cny;
        world.countries[4].currency = CurrencyLabel::Cny;
        world.countries[6].dedollarization = 0.6;
        let config = SimConfig::default();
        let mut events = Vec::new();
        currency_switch_step(&mut world, &config, &mut run_stream(4, 0), &mut events);
        assert_eq!(world.countries[6].currency, CurrencyLabel::Cny);
        assert_eq!(events.len(), 1);
        assert_eq!(events[0].kind, EventKind::Switch);
    }

    #[test]
    fn switch_threshold_is_strict() {
        let mut world = world_with_ring(6);
        world.countries[4].dedollarization = 0.5;
        let config = SimConfig::default();
        let mut events = Vec::new();
        currency_switch_step(&mut world, &config, &mut run_stream(4, 0), &mut events);
        assert!(events.is_empty());
        assert_eq!(world.countries[4].currency, CurrencyLabel::Usd);
    }

    #[test]
    fn tie_break_is_fair() {
        // 2-2 neighborhoods resolve by coin flip; over 10^4 trials the
        // CNY frequency should be 0.5 +/- 0.02 (binomial sd 0.005).
        let config = SimConfig::default();
        let mut rng = run_stream(99, 0);
        let mut cny_wins = 0usize;
        let trials = 10_000;
        for _ in 0..trials {
            let mut graph = Graph::with_nodes(8);
            for i in 1..8 {
                graph.add_edge(0, i).unwrap();
            }
            for i in [1, 2, 3, 4] {
                graph.add_edge(7, i).unwrap();
            }
            let mut world = WorldState::new(graph, &[1.0e12; 8], 0.56);
            world.countries[3].currency = CurrencyLabel::Cny;
            world.countries[4].currency = CurrencyLabel::Rub;
            // neighbors of 7: hub + CNY(1), RUB(2), CNY(3), RUB(4) -> 2-2
            world.countries[7].dedollarization = 0.8;
            let mut events = Vec::new();
            currency_switch_step(&mut world, &config, &mut rng, &mut events);
            if world.countries[7].currency == CurrencyLabel::Cny {
                cny_wins += 1;
            }
        }
        let frequency = cny_wins as f64 / trials as f64;
        assert!((frequency - 0.5).abs() < 0.02, "CNY tie rate {frequency}");
    }

    #[test]
    fn fer_share_examples() {
        let mut world = world_with_ring(5);
        for c in &mut world.countries {
            c.dollar_holding = 0.56;
        }
        assert_relative_eq!(update_fer_share(&mut world), 0.56, max_relative = 1e-12);
        for c in &mut world.countries {
            c.dollar_holding = 0.0;
        }
        assert_relative_eq!(update_fer_share(&mut world), 0.0);
        // two equal-GDP nodes averaging 0.2 and 0.6
        let mut graph = Graph::with_nodes(2);
        graph.add_edge(0, 1).unwrap();
        let mut world = WorldState::new(graph, &[1.0e12, 1.0e12], 0.56);
        world.countries[0].dollar_holding = 0.2;
        world.countries[1].dollar_holding = 0.6;
        assert_relative_eq!(update_fer_share(&mut world), 0.4, max_relative = 1e-12);
    }

    #[test]
    fn event_csv_has_expected_shape() {
        let events = vec![
            CascadeEvent {
                month: 61,
                node: 10,
                kind: EventKind::Inherent,
                magnitude: 0.25,
                new_currency: None,
            },
            CascadeEvent {
                month: 90,
                node: 10,
                kind: EventKind::Switch,
                magnitude: 0.0,
                new_currency: Some(CurrencyLabel::Cny),
            },
        ];
        let csv = events_to_csv(&events);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("month,node,kind,magnitude,new_currency"));
        assert_eq!(lines.next(), Some("61,10,inherent,0.25,"));
        assert_eq!(lines.next(), Some("90,10,switch,0,CNY"));
    }
}
