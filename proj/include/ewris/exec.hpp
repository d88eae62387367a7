// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace ewris {

// Execution policy for the element-level kernels. Both paths give
// bit-identical results; Serial is the reference.
enum class Exec { Serial, Parallel };

} // namespace ewris
