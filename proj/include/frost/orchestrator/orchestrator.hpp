#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "frost/common/errors.hpp"

namespace frost::orchestrator {

inline const std::vector<std::string> kStageNames = {"wrangle", "serve", "learn", "infer"};

// A built-in task name, or an external executable with its arguments.
struct TaskDescriptor {
  std::string task;
  std::string executable;
  std::vector<std::string> args;
  std::map<std::string, std::string> extra_args;

  std::string label() const;
  bool operator==(const TaskDescriptor&) const = default;
};

struct StageSpec {
  std::string name;
  std::vector<TaskDescriptor> scripts;
  std::size_t pool_width = 1;
};

// Throws BadConfig for unknown stage names, pool_width 0, or empty descriptors.
void validate(const StageSpec& stage);

struct WorkerContext {
  std::size_t pe_index = 0;
  std::size_t pe_total = 0;
  std::size_t window_width = 0;
  std::string stage_name;
  std::string config_path;
  std::string store_path;
  std::map<std::string, std::string> extra_args;
};

struct ContextBase {
  std::string config_path;
  std::string store_path;
  std::filesystem::path log_dir;  // empty: workers inherit stdout/stderr
};

struct ScriptResult {
  std::size_t pe_index = 0;
  std::string label;
  double start = 0;
  double end = 0;
  int exit_status = 0;
  std::string log_path;
  bool ok() const noexcept { return exit_status == 0; }
};

struct StageReport {
  std::string stage;
  std::vector<ScriptResult> scripts;  // in pe_index order
  bool success = true;

  std::vector<std::size_t> failed() const;
};

// One start or end, appended in the order the orchestrator observed them.
struct Event {
  double time = 0;
  bool start = true;
  std::size_t stage_seq = 0;  // position of the stage in the pipeline
  std::size_t pe_index = 0;
};
using EventLog = std::vector<Event>;

class Launcher {
 public:
  struct Exit {
    std::uint64_t handle = 0;
    int status = 0;
  };

  virtual ~Launcher() = default;
  virtual double now() = 0;
  virtual std::uint64_t launch(const TaskDescriptor& task, const WorkerContext& ctx, const std::string& log_path) = 0;
  // Blocks until one launched script finishes.
  virtual Exit wait_any() = 0;
};

// Each script is a child process. Built-in tasks go through `resolve`, which
// maps them to an argv; every worker also gets the context as --pe-index,
// --pe-total, --window-width, --stage flags and as PE_INDEX, PE_TOTAL,
// WINDOW_WIDTH, STAGE, STORE_PATH, CONFIG_PATH in its environment.
class ProcessLauncher : public Launcher {
 public:
  using Resolver = std::function<std::vector<std::string>(const TaskDescriptor&, const WorkerContext&)>;
  explicit ProcessLauncher(Resolver resolve = {});

  double now() override;
  std::uint64_t launch(const TaskDescriptor& task, const WorkerContext& ctx, const std::string& log_path) override;
  Exit wait_any() override;

 private:
  Resolver resolve_;
  double origin_;
  std::map<int, std::uint64_t> running_;  // pid -> handle
  std::vector<Exit> finished_;            // scripts that never started
  std::uint64_t next_ = 0;
};

// Simulated scripts on a virtual clock: `behave` gives each script's
// duration and exit status. Deterministic; nothing is executed.
class VirtualClockLauncher : public Launcher {
 public:
  struct Outcome {
    double duration = 0;
    int status = 0;
  };
  using Behaviour = std::function<Outcome(const TaskDescriptor&, const WorkerContext&)>;
  explicit VirtualClockLauncher(Behaviour behave) : behave_(std::move(behave)) {}

  double now() override { return clock_; }
  std::uint64_t launch(const TaskDescriptor& task, const WorkerContext& ctx, const std::string& log_path) override;
  Exit wait_any() override;

 private:
  struct Running {
    double end;
    std::uint64_t handle;
    int status;
  };
  Behaviour behave_;
  double clock_ = 0;
  std::vector<Running> running_;
  std::uint64_t next_ = 0;
};

// Sliding window: at most pool_width scripts at once, the next pending one
// starting as soon as any finishes. A failed script does not cancel the rest.
StageReport run_stage(const StageSpec& stage, const ContextBase& base, Launcher& launcher, EventLog* log = nullptr,
                      std::size_t stage_seq = 0);

class StageFailure : public Error {
 public:
  StageFailure(const std::string& stage, std::vector<StageReport> reports)
      : Error(Errc::stage_failure, "stage " + stage + " failed"), reports_(std::move(reports)) {}
  const std::vector<StageReport>& reports() const noexcept { return reports_; }

 private:
  std::vector<StageReport> reports_;
};

// Stages run strictly one after another. With stop_on_failure a failed stage
// throws StageFailure carrying the reports so far; otherwise later stages run.
std::vector<StageReport> run_pipeline(const std::vector<StageSpec>& stages, const ContextBase& base,
                                      Launcher& launcher, bool stop_on_failure, EventLog* log = nullptr);

// Highest number of scripts running at once, replaying the log in order.
std::size_t max_concurrency(const EventLog& log);
// True when a script of one stage starts before every script of an earlier stage has ended.
bool stages_interleave(const EventLog& log);

}  // namespace frost::orchestrator
