#include "dfsion/core/basis.hpp"

#include "dfsion/core/errors.hpp"

namespace dfsion::basis {

namespace {

void check_length(std::size_t length) {
  if (length > static_cast<std::size_t>(kMaxSubsystems)) {
    throw DimensionError("label longer than " + std::to_string(kMaxSubsystems) + " subsystems");
  }
}

void check_index(std::size_t index, int n) {
  if (n < 0 || n > kMaxSubsystems || index >= (std::size_t{1} << n)) {
    throw DimensionError("basis index " + std::to_string(index) + " out of range for " +
                         std::to_string(n) + " subsystems");
  }
}

}  // namespace

std::size_t physical_index(std::string_view label) {
  check_length(label.size());
  std::size_t index = 0;
  for (char c : label) {
    index <<= 1;
    if (c == 'g') {
      index |= kGround;
    } else if (c != 'e') {
      throw DimensionError(std::string("invalid ion label character '") + c + "'");
    }
  }
  return index;
}

std::string physical_label(std::size_t index, int ions) {
  check_index(index, ions);
  std::string out(static_cast<std::size_t>(ions), 'e');
  for (int k = 0; k < ions; ++k) {
    if ((index >> bit_of(k, ions)) & 1U) out[static_cast<std::size_t>(k)] = 'g';
  }
  return out;
}

std::size_t logical_index(std::string_view label) {
  check_length(label.size());
  std::size_t index = 0;
  for (char c : label) {
    index <<= 1;
    if (c == '0') {
      index |= kLogicalZero;
    } else if (c != '1') {
      throw DimensionError(std::string("invalid logical label character '") + c + "'");
    }
  }
  return index;
}

std::string logical_label(std::size_t index, int pairs) {
  check_index(index, pairs);
  std::string out(static_cast<std::size_t>(pairs), '1');
  for (int k = 0; k < pairs; ++k) {
    if ((index >> bit_of(k, pairs)) & 1U) out[static_cast<std::size_t>(k)] = '0';
  }
  return out;
}

std::string logical_to_physical_label(std::string_view logical) {
  logical_index(logical);  // validates
  std::string out;
  out.reserve(2 * logical.size());
  for (char c : logical) out += (c == '1') ? "eg" : "ge";
  return out;
}

std::string physical_to_logical_label(std::string_view physical) {
  physical_index(physical);
  if (physical.size() % 2 != 0) throw LayoutError("odd number of ions cannot form pairs");
  std::string out;
  for (std::size_t i = 0; i < physical.size(); i += 2) {
    auto pair = physical.substr(i, 2);
    if (pair == "eg") {
      out += '1';
    } else if (pair == "ge") {
      out += '0';
    } else {
      throw LayoutError("ion pair '" + std::string(pair) + "' is outside the encoded subspace");
    }
  }
  return out;
}

}  // namespace dfsion::basis
