#pragma once

namespace qperm {

/// Selects the serial reference loop or the OpenMP kernel for batch work.
enum class Exec { serial, parallel };

}  // namespace qperm
