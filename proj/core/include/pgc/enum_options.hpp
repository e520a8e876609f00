#pragma once

#include <cstdint>

namespace pgc {

struct EnumOptions {
  // Maximum number of points (rank evaluations) a single enumeration may visit.
  std::uint64_t budget = 1'000'000'000ULL;
  unsigned threads = 1;
  // Refuse tables of class c >= p. Turning this off only makes sense for pure
  // rank counts, where no group is attached to the table.
  bool check_class = true;
};

}  // namespace pgc
