#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frost/cli/config.hpp"

namespace frost::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitTaskFailure = 1;
inline constexpr int kExitConfigError = 2;

// Runs one built-in task against the config's store. `model` narrows
// learn_* and report to a single named entry.
void run_task(const std::string& task, const RunConfig& config, const std::optional<std::string>& model = {});

// The argv a worker process runs for a built-in task; the launcher appends
// the context flags.
std::vector<std::string> worker_argv(const std::string& self_exe, const orchestrator::TaskDescriptor& task,
                                     const orchestrator::WorkerContext& ctx);

// The full pipeline through the orchestrator. The store must not exist yet.
// Returns the report documents it produced.
std::vector<docstore::Json> run_pipeline(const RunConfig& config, const std::string& self_exe);

int main(int argc, char** argv);

}  // namespace frost::cli
