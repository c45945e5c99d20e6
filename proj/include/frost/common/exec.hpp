#pragma once

namespace frost {

// Selects between the OpenMP kernel and its serial reference. Both paths
// produce bit-identical results; the serial one exists for verification.
enum class Exec { serial, parallel };

int max_threads() noexcept;

}  // namespace frost
