#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "knotid/egc.hpp"
#include "knotid/polynomial.hpp"

namespace knotid {

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HomflyLimits {
  int max_crossings = 50;
  std::uint64_t max_nodes = 10'000'000;
};

// HOMFLY-PT polynomial in the Lickorish-Millett normalization:
//
//   H(unknot) = 1
//   L H(D+) + L^-1 H(D-) + M H(D0) = 0
//   H(A u B) = -(L + L^-1) M^-1 H(A) H(B)   for split unions
//
// Evaluation resolves crossings toward a descending diagram (an unlink):
// with components taken in order from their first token, the first crossing
// met on its under strand is switched and smoothed. Every branch is reduced
// with Reidemeister I/II moves and split into its connected parts, and
// results are memoized on the canonical code of each part.
//
// An engine is not thread-safe; use one per thread. Its memo table only
// holds exact values, so reusing an engine across diagrams is safe.
class HomflyEngine {
 public:
  explicit HomflyEngine(HomflyLimits limits = {});

  LMPolynomial compute(const Diagram& d);

  // Skein nodes visited by the last compute() call.
  std::uint64_t last_node_count() const { return nodes_; }
  std::size_t memo_size() const { return memo_.size(); }
  void clear_memo() { memo_.clear(); }

 private:
  LMPolynomial evaluate(std::vector<Component> comps);
  LMPolynomial evaluate_connected(std::vector<Component> comps);

  HomflyLimits limits_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<std::string, LMPolynomial> memo_;
};

LMPolynomial homfly(const Diagram& d, HomflyLimits limits = {});

}  // namespace knotid
