#pragma once

// A compact run of the library's invariants, for the verify command.

#include <cstdint>
#include <string>
#include <vector>

namespace charseq {

struct VerifyRow {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Geometry checks run over F_modulus (realization uses F_101).
std::vector<VerifyRow> run_invariant_corpus(std::uint32_t modulus, std::uint64_t seed);

}  // namespace charseq
