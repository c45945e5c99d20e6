#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frost/common/exec.hpp"
#include "frost/telemetry/telemetry.hpp"

namespace frost::fridgesim {

struct FridgeSpec {
  std::string fridge_id;
  std::string store_id;
  double k_cool = 9e-4;     // 1/s, relaxation toward the evaporator temperature
  double k_warm = 2e-4;     // 1/s, relaxation toward ambient while off
  double T_evap = -2.0;     // cooling asymptote, below T_set_low
  double T_set_low = 2.0;
  double T_set_high = 5.0;
  double T_ambient = 20.0;
  double threshold = 8.0;
  double power_kw = 1.0;
  double noise_sigma = 0.0;
  int defrosts_per_day = 4;
  double defrost_max_s = 5400;
  double defrost_phase_s = 0;  // offset of the first defrost after midnight
};

struct DsrEvent {
  double start_ts = 0;
  double primary_s = 30;
  double secondary_s = 1800;  // how long participants are held off
  double target_shed_kw = 1;
};

struct ScheduledEvent {
  DsrEvent event;
  std::vector<std::string> participants;
};

struct Range {
  double lo = 0;
  double hi = 0;
};

// Faults are preceded by a window where the fridge warms faster than usual.
struct FaultPlan {
  int faults_per_fridge = 0;
  double warm_multiplier = 2.5;
  double precursor_s = 36 * 3600.0;
  double min_spacing_s = 5 * 86400.0;
  double earliest_s = 3 * 86400.0;  // from simulation start
};

using telemetry::WorkOrder;

struct SimConfig {
  int n_fridges = 1;
  int n_stores = 1;
  double days = 1;
  double step_s = 60;
  std::uint64_t seed = 0;
  double start_ts = 1577836800;  // 2020-01-01T00:00:00Z

  Range k_cool{7e-4, 1.2e-3};
  Range k_warm{1.5e-4, 2.5e-4};
  Range T_set_low{1.5, 2.5};
  Range T_set_high{4.5, 5.5};
  Range T_ambient{19.5, 20.5};
  Range power_kw{0.8, 2.0};
  double evap_offset = 4.0;  // T_evap = T_set_low - evap_offset
  double threshold = 8.0;
  double noise_sigma = 0.01;
  int defrosts_per_day = 4;
  double defrost_max_s = 5400;
  double door_rate_per_hour = 0.3;
  double door_impulse = 0.3;

  std::vector<ScheduledEvent> events;
  FaultPlan faults;
};

// Throws BadConfig.
void validate(const SimConfig& config);

std::string fridge_id(int index);
std::vector<FridgeSpec> fleet_specs(const SimConfig& config);

struct FridgeFaults {
  std::vector<double> fault_ts;
  std::vector<WorkOrder> work_orders;
};
FridgeFaults fault_schedule(const SimConfig& config, int index);

// One fridge's stream; independent of every other fridge.
std::vector<telemetry::TelemetryRecord> simulate_fridge(const SimConfig& config, int index);

// All fridges, sorted by (fridge_id, timestamp). Byte-identical per config.
std::vector<telemetry::TelemetryRecord> simulate_fleet(const SimConfig& config, Exec exec = Exec::parallel);
std::vector<WorkOrder> fleet_work_orders(const SimConfig& config);

// Noise-free Newton warming time from T0 to the threshold. Throws BadTemperatureOrder.
double true_time_to_threshold(const FridgeSpec& spec, double T0);

// Re-simulates the participants with the event added; everyone else is
// returned untouched. Throws OutOfRange when the event leaves the simulated span.
std::vector<telemetry::TelemetryRecord> inject_dsr_event(std::vector<telemetry::TelemetryRecord> records,
                                                         SimConfig& config, const DsrEvent& event,
                                                         const std::vector<std::string>& participants);

// Total compressor draw across the fleet at each timestamp.
std::vector<std::pair<double, double>> fleet_power(const std::vector<telemetry::TelemetryRecord>& records);

}  // namespace frost::fridgesim
