use reserve_shift::econ::CoreGdpHistory;
use reserve_shift::{monte_carlo, SimConfig};

fn main() {
    let history = CoreGdpHistory::bundled();
    for debt0 in [0.20e12, 0.22e12, 0.24e12, 0.30e12_f64] {
        let config = SimConfig {
            initial_debt_interest: debt0,
            ..SimConfig::default()
        };
        let stats = monte_carlo(&config, &history).unwrap();
        let trigger = stats.trigger_months[0].unwrap();
        let last = config.horizon_months - 1;
        let mean_d = &stats.get("mean_d").unwrap().mean;
        println!(
            "debt0={:.2}e12: d@+130={:.4} I@+220={:.4} USD {:.3} CNY {:.3} RUB {:.3}",
            debt0 / 1e12,
            mean_d[(trigger + 130).min(last)],
            stats.get("inflation").unwrap().mean[(trigger + 220).min(last)],
            stats.get("share_usd").unwrap().mean[last],
            stats.get("share_cny").unwrap().mean[last],
            stats.get("share_rub").unwrap().mean[last]
        );
    }
}
