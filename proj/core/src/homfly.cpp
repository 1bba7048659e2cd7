#include "knotid/homfly.hpp"

#include <numeric>
#include <unordered_set>

#include "knotid/simplify.hpp"

namespace knotid {

namespace {

struct Position {
  std::size_t comp = 0;
  std::size_t index = 0;
};

// First crossing (in basepoint order) whose first passage is on the under
// strand; 0 when the diagram is descending.
int first_ascending_crossing(const std::vector<Component>& comps) {
  std::unordered_set<int> seen;
  for (const auto& c : comps) {
    for (const auto& t : c) {
      if (!seen.insert(t.label).second) continue;
      if (t.strand == Strand::under) return t.label;
    }
  }
  return 0;
}

std::pair<Position, Position> find_label(const std::vector<Component>& comps, int label) {
  Position found[2];
  int n = 0;
  for (std::size_t c = 0; c < comps.size() && n < 2; ++c) {
    for (std::size_t i = 0; i < comps[c].size(); ++i) {
      if (comps[c][i].label == label) found[n++] = {c, i};
    }
  }
  return {found[0], found[1]};
}

std::vector<Component> switched(std::vector<Component> comps, int label) {
  for (auto& c : comps) {
    for (auto& t : c) {
      if (t.label != label) continue;
      t.strand = opposite(t.strand);
      t.sign = -t.sign;
    }
  }
  return comps;
}

// Oriented resolution of one crossing: a self-crossing splits its component
// in two, a crossing between components merges them.
std::vector<Component> smoothed(std::vector<Component> comps, int label) {
  const auto [p, q] = find_label(comps, label);
  if (p.comp == q.comp) {
    const Component& t = comps[p.comp];
    Component inner(t.begin() + static_cast<std::ptrdiff_t>(p.index) + 1,
                    t.begin() + static_cast<std::ptrdiff_t>(q.index));
    Component outer(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(p.index));
    outer.insert(outer.end(), t.begin() + static_cast<std::ptrdiff_t>(q.index) + 1, t.end());
    comps[p.comp] = std::move(outer);
    comps.insert(comps.begin() + static_cast<std::ptrdiff_t>(p.comp) + 1, std::move(inner));
    return comps;
  }
  const Component& a = comps[p.comp];
  const Component& b = comps[q.comp];
  Component merged(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(p.index));
  merged.insert(merged.end(), b.begin() + static_cast<std::ptrdiff_t>(q.index) + 1, b.end());
  merged.insert(merged.end(), b.begin(), b.begin() + static_cast<std::ptrdiff_t>(q.index));
  merged.insert(merged.end(), a.begin() + static_cast<std::ptrdiff_t>(p.index) + 1, a.end());
  comps[p.comp] = std::move(merged);
  comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(q.comp));
  return comps;
}

// Groups of components connected through shared crossings, each group in
// original component order.
std::vector<std::vector<Component>> split_parts(std::vector<Component> comps) {
  const std::size_t n = comps.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::unordered_map<int, std::size_t> owner;
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& t : comps[c]) {
      auto [it, inserted] = owner.try_emplace(t.label, c);
      if (!inserted) parent[find(c)] = find(it->second);
    }
  }
  std::vector<std::vector<Component>> parts;
  std::unordered_map<std::size_t, std::size_t> part_of_root;
  for (std::size_t c = 0; c < n; ++c) {
    auto [it, inserted] = part_of_root.try_emplace(find(c), parts.size());
    if (inserted) parts.emplace_back();
    parts[it->second].push_back(std::move(comps[c]));
  }
  return parts;
}

}  // namespace

HomflyEngine::HomflyEngine(HomflyLimits limits) : limits_(limits) {}

LMPolynomial HomflyEngine::compute(const Diagram& d) {
  if (d.crossing_count() > limits_.max_crossings) {
    throw ResourceLimitError("diagram has " + std::to_string(d.crossing_count()) +
                             " crossings, limit is " + std::to_string(limits_.max_crossings));
  }
  nodes_ = 0;
  if (d.empty()) throw EgcError("cannot evaluate an empty diagram");
  return evaluate(d.components());
}

LMPolynomial HomflyEngine::evaluate(std::vector<Component> comps) {
  if (++nodes_ > limits_.max_nodes) {
    throw ResourceLimitError("skein node limit of " + std::to_string(limits_.max_nodes) +
                             " exceeded");
  }
  rewrite::reduce_unprotected(comps);
  const auto free_loops = static_cast<unsigned>(
      std::erase_if(comps, [](const Component& c) { return c.empty(); }));
  const LMPolynomial delta = LMPolynomial::split_factor();
  if (comps.empty()) return poly_pow(delta, free_loops - 1);

  auto parts = split_parts(std::move(comps));
  LMPolynomial result = poly_pow(delta, free_loops + static_cast<unsigned>(parts.size()) - 1);
  for (auto& part : parts) result = result * evaluate_connected(std::move(part));
  return result;
}

LMPolynomial HomflyEngine::evaluate_connected(std::vector<Component> comps) {
  relabel_canonical(comps);
  std::string key = format_components(comps);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  LMPolynomial value;
  const int x = first_ascending_crossing(comps);
  if (x == 0) {
    value = poly_pow(LMPolynomial::split_factor(), static_cast<unsigned>(comps.size()) - 1);
  } else {
    int sign = 0;
    for (const auto& t : comps[find_label(comps, x).first.comp]) {
      if (t.label == x) sign = t.sign;
    }
    const LMPolynomial flip = evaluate(switched(comps, x));
    const LMPolynomial smooth = evaluate(smoothed(comps, x));
    // L H(D+) + L^-1 H(D-) + M H(D0) = 0, solved for the current crossing.
    if (sign > 0) {
      value = poly_mono_mul(flip, -1, -2, 0) + poly_mono_mul(smooth, -1, -1, 1);
    } else {
      value = poly_mono_mul(flip, -1, 2, 0) + poly_mono_mul(smooth, -1, 1, 1);
    }
  }
  memo_.emplace(std::move(key), value);
  return value;
}

LMPolynomial homfly(const Diagram& d, HomflyLimits limits) {
  HomflyEngine engine(limits);
  return engine.compute(d);
}

}  // namespace knotid
