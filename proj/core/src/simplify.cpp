#include "knotid/simplify.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace knotid {

namespace {

struct R1Site {
  int label = 0;
  bool whole_component = false;  // the kink is the component's only crossing
};

int max_label(const std::vector<Component>& comps) {
  int m = 0;
  for (const auto& c : comps) {
    for (const auto& t : c) m = std::max(m, t.label);
  }
  return m;
}

bool is_twist_form(const Component& c) {
  return c.size() == 2 && c[0].strand == Strand::under && c[1].strand == Strand::over &&
         c[0].sign < 0;
}

std::optional<R1Site> find_r1(const std::vector<Component>& comps, bool protect) {
  std::optional<R1Site> best;
  for (const auto& comp : comps) {
    const std::size_t n = comp.size();
    if (n < 2) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + 1) % n;
      if (comp[i].label != comp[j].label) continue;
      const int label = comp[i].label;
      if (best && best->label <= label) continue;
      if (n == 2 && protect) {
        if (is_twist_form(comp)) continue;
        best = R1Site{label, true};
      } else {
        best = R1Site{label, n == 2};
      }
    }
  }
  return best;
}

std::optional<std::pair<int, int>> find_r2(const std::vector<Component>& comps) {
  const int top = max_label(comps);
  std::vector<int> sign(static_cast<std::size_t>(top) + 1, 0);
  for (const auto& c : comps) {
    for (const auto& t : c) sign[static_cast<std::size_t>(t.label)] = t.sign;
  }
  // bit 1: an over/over adjacency exists, bit 2: an under/under one.
  std::map<std::pair<int, int>, int> seen;
  for (const auto& comp : comps) {
    const std::size_t n = comp.size();
    if (n < 2) continue;
    const std::size_t pairs = n == 2 ? 1 : n;
    for (std::size_t i = 0; i < pairs; ++i) {
      const Token& s = comp[i];
      const Token& t = comp[(i + 1) % n];
      if (s.label == t.label || s.strand != t.strand) continue;
      if (sign[static_cast<std::size_t>(s.label)] != -sign[static_cast<std::size_t>(t.label)]) {
        continue;
      }
      auto key = std::minmax(s.label, t.label);
      seen[{key.first, key.second}] |= s.strand == Strand::over ? 1 : 2;
    }
  }
  for (const auto& [key, bits] : seen) {
    if (bits == 3) return key;
  }
  return std::nullopt;
}

void erase_labels(std::vector<Component>& comps, int x, int y) {
  for (auto& c : comps) {
    std::erase_if(c, [&](const Token& t) { return t.label == x || t.label == y; });
  }
}

// Refills emptied components with fresh twists.
void protect_components(std::vector<Component>& comps) {
  int next = max_label(comps) + 1;
  for (auto& c : comps) {
    if (!c.empty()) continue;
    c = {Token{Strand::under, next, -1}, Token{Strand::over, next, -1}};
    ++next;
  }
}

}  // namespace

std::optional<Diagram> reduce_r1_once(const Diagram& d) {
  auto comps = d.components();
  const auto site = find_r1(comps, /*protect=*/true);
  if (!site) return std::nullopt;
  erase_labels(comps, site->label, site->label);
  protect_components(comps);
  relabel_canonical(comps);
  return Diagram(std::move(comps));
}

std::optional<Diagram> reduce_r2_once(const Diagram& d) {
  auto comps = d.components();
  const auto site = find_r2(comps);
  if (!site) return std::nullopt;
  erase_labels(comps, site->first, site->second);
  protect_components(comps);
  relabel_canonical(comps);
  return Diagram(std::move(comps));
}

Diagram simplify(const Diagram& d) {
  Diagram cur = d.canonical();
  // Each step removes a crossing or turns a component into a protected twist,
  // so the loop is bounded by twice the token count.
  const std::size_t limit = 4 * static_cast<std::size_t>(cur.crossing_count()) + 4;
  for (std::size_t step = 0; step < limit; ++step) {
    if (auto next = reduce_r1_once(cur)) {
      cur = std::move(*next);
      continue;
    }
    if (auto next = reduce_r2_once(cur)) {
      cur = std::move(*next);
      continue;
    }
    break;
  }
  return cur;
}

namespace rewrite {

int reduce_unprotected(std::vector<Component>& components) {
  int removed = 0;
  for (;;) {
    if (auto site = find_r1(components, /*protect=*/false)) {
      erase_labels(components, site->label, site->label);
      removed += 1;
      continue;
    }
    if (auto site = find_r2(components)) {
      erase_labels(components, site->first, site->second);
      removed += 2;
      continue;
    }
    return removed;
  }
}

}  // namespace rewrite

}  // namespace knotid
