#pragma once

#include <cstddef>
#include <string>
#include <string_view>

// Basis conventions shared by every module.
//
//   physical ion:  |e> -> 0, |g> -> 1
//   logical pair:  |1~> = |eg> -> 0, |0~> = |ge> -> 1
//   tensor order:  the lowest-numbered ion/pair is the most significant bit
//
// So the two-pair logical basis (|1~1~>, |1~0~>, |0~1~>, |0~0~>) is the
// physical (|egeg>, |egge>, |geeg>, |gege>).
namespace dfsion::basis {

inline constexpr std::size_t kExcited = 0;
inline constexpr std::size_t kGround = 1;
inline constexpr std::size_t kLogicalOne = 0;
inline constexpr std::size_t kLogicalZero = 1;

inline constexpr int kMaxSubsystems = 12;

// "egge" -> 1 etc. Throws DimensionError on characters other than e/g.
std::size_t physical_index(std::string_view label);
std::string physical_label(std::size_t index, int ions);

// Logical labels use the digits '1' (|1~>) and '0' (|0~>).
std::size_t logical_index(std::string_view label);
std::string logical_label(std::size_t index, int pairs);

// "10" -> "egge"
std::string logical_to_physical_label(std::string_view logical);
// "egge" -> "10"; throws LayoutError for labels outside the pair sectors.
std::string physical_to_logical_label(std::string_view physical);

// Bit position of subsystem `k` in a register of `n` subsystems.
constexpr int bit_of(int k, int n) { return n - 1 - k; }

}  // namespace dfsion::basis
