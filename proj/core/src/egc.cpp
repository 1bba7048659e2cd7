#include "knotid/egc.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace knotid {

namespace {

struct LabelUse {
  int count = 0;
  int over = 0;
  int sign = 0;
};

}  // namespace

void validate_components(const std::vector<Component>& components) {
  std::unordered_map<int, LabelUse> uses;
  for (const auto& comp : components) {
    if (comp.empty()) throw EgcError("empty component");
    for (const auto& t : comp) {
      if (t.label < 1) throw EgcError("label must be positive: " + std::to_string(t.label));
      if (t.sign != 1 && t.sign != -1) throw EgcError("sign must be +1 or -1");
      auto& u = uses[t.label];
      if (u.count > 0 && u.sign != t.sign) {
        throw EgcError("label " + std::to_string(t.label) + " has mismatched signs");
      }
      u.sign = t.sign;
      ++u.count;
      if (t.strand == Strand::over) ++u.over;
    }
  }
  for (const auto& [label, u] : uses) {
    if (u.count != 2) {
      throw EgcError("label " + std::to_string(label) + " occurs " + std::to_string(u.count) +
                     " time(s), expected 2");
    }
    if (u.over != 1) {
      throw EgcError("label " + std::to_string(label) + " must be over once and under once");
    }
  }
}

void relabel_canonical(std::vector<Component>& components) {
  std::unordered_map<int, int> fresh;
  for (auto& comp : components) {
    for (auto& t : comp) {
      auto [it, inserted] = fresh.try_emplace(t.label, static_cast<int>(fresh.size()) + 1);
      t.label = it->second;
    }
  }
}

Diagram::Diagram(std::vector<Component> components) : components_(std::move(components)) {
  validate_components(components_);
  std::size_t tokens = 0;
  for (const auto& c : components_) tokens += c.size();
  crossings_ = static_cast<int>(tokens / 2);
}

Diagram Diagram::canonical() const {
  Diagram out = *this;
  relabel_canonical(out.components_);
  return out;
}

bool Diagram::is_canonical() const {
  int next = 1;
  std::vector<bool> seen(static_cast<std::size_t>(crossings_) + 2, false);
  for (const auto& comp : components_) {
    for (const auto& t : comp) {
      if (t.label > crossings_) return false;
      if (seen[static_cast<std::size_t>(t.label)]) continue;
      if (t.label != next) return false;
      seen[static_cast<std::size_t>(t.label)] = true;
      ++next;
    }
  }
  return true;
}

Diagram parse_egc(std::string_view line) {
  std::vector<Component> comps(1);
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw EgcError(what + " at column " + std::to_string(i + 1));
  };
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == ',') {
      if (comps.back().empty()) fail("empty component");
      comps.emplace_back();
      ++i;
      continue;
    }
    if (c != 'a' && c != 'b') fail(std::string("unexpected character '") + c + "'");
    Token t;
    t.strand = c == 'a' ? Strand::over : Strand::under;
    ++i;
    long long label = 0;
    std::size_t digits = 0;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
      label = label * 10 + (line[i] - '0');
      if (label > 1'000'000'000) fail("label too large");
      ++i;
      ++digits;
    }
    if (digits == 0) fail("missing crossing label");
    if (i >= line.size() || (line[i] != '+' && line[i] != '-')) fail("missing crossing sign");
    t.sign = line[i] == '+' ? 1 : -1;
    ++i;
    if (label < 1) fail("label must be positive");
    t.label = static_cast<int>(label);
    comps.back().push_back(t);
  }
  if (comps.size() == 1 && comps.back().empty()) throw EgcError("empty extended Gauss code");
  if (comps.back().empty()) throw EgcError("empty component at end of line");
  Diagram d(std::move(comps));
  return d.canonical();
}

std::string format_components(const std::vector<Component>& components) {
  std::string out;
  out.reserve(components.size() * 16);
  bool first = true;
  for (const auto& comp : components) {
    if (!first) out.push_back(',');
    first = false;
    for (const auto& t : comp) {
      out.push_back(static_cast<char>(t.strand));
      out += std::to_string(t.label);
      out.push_back(t.sign > 0 ? '+' : '-');
    }
  }
  return out;
}

std::string format_egc(const Diagram& d) { return format_components(d.components()); }

Diagram mirror(const Diagram& d) {
  auto comps = d.components();
  for (auto& comp : comps) {
    for (auto& t : comp) {
      t.strand = opposite(t.strand);
      t.sign = -t.sign;
    }
  }
  return Diagram(std::move(comps));
}

Diagram reverse(const Diagram& d) {
  auto comps = d.components();
  for (auto& comp : comps) std::reverse(comp.begin(), comp.end());
  return Diagram(std::move(comps));
}

int writhe(const Diagram& d) {
  int sum = 0;
  for (const auto& comp : d.components()) {
    for (const auto& t : comp) sum += t.sign;
  }
  return sum / 2;
}

Diagram connected_sum(const Diagram& lhs, const Diagram& rhs) {
  if (lhs.component_count() != 1 || rhs.component_count() != 1) {
    throw EgcError("connected sum requires two one-component diagrams");
  }
  const Diagram a = lhs.canonical();
  const Diagram b = rhs.canonical();
  Component joined = a.components().front();
  for (Token t : b.components().front()) {
    t.label += a.crossing_count();
    joined.push_back(t);
  }
  return Diagram({std::move(joined)});
}

Diagram twist_unknot() {
  return Diagram({{Token{Strand::under, 1, -1}, Token{Strand::over, 1, -1}}});
}

}  // namespace knotid
