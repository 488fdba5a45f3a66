#pragma once

// Published rows of the P/Q table (n = 0..15) and the R/S/T table
// (n = 0..12) in polytext form.

#include <array>
#include <string_view>

namespace airyderiv::tables {

inline constexpr unsigned kTable1Rows = 16;
inline constexpr unsigned kTable2Rows = 13;

extern const std::array<std::string_view, kTable1Rows> kP;
extern const std::array<std::string_view, kTable1Rows> kQ;
extern const std::array<std::string_view, kTable2Rows> kR;
extern const std::array<std::string_view, kTable2Rows> kS;
extern const std::array<std::string_view, kTable2Rows> kT;

}  // namespace airyderiv::tables
