#include "knotid/knotdb.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace knotid {

namespace {

int prefix_rank(ChiralPrefix p) {
  switch (p) {
    case ChiralPrefix::plus: return 0;
    case ChiralPrefix::minus: return 1;
    case ChiralPrefix::shared: return 2;
    case ChiralPrefix::achiral: return 3;
  }
  return 4;
}

int alt_rank(AltFlag a) {
  switch (a) {
    case AltFlag::none: return 0;
    case AltFlag::alternating: return 1;
    case AltFlag::nonalternating: return 2;
  }
  return 3;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// "<crossing>.<index>[a|n]" after any prefix has been consumed.
void parse_base(std::string_view text, std::string_view whole, int& crossing, int& index, AltFlag& alt) {
  auto fail = [&](const std::string& why) {
    throw KnotNameError("bad knot name \"" + std::string(whole) + "\": " + why);
  };
  std::size_t i = 0;
  auto number = [&]() {
    const std::size_t start = i;
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 100'000'000) fail("number too large");
      ++i;
    }
    if (i == start) fail("expected a number");
    return static_cast<int>(v);
  };
  crossing = number();
  if (i >= text.size() || text[i] != '.') fail("expected '.'");
  ++i;
  index = number();
  alt = AltFlag::none;
  if (i < text.size()) {
    if (text[i] == 'a') {
      alt = AltFlag::alternating;
    } else if (text[i] == 'n') {
      alt = AltFlag::nonalternating;
    } else {
      fail("unexpected trailing characters");
    }
    ++i;
  }
  if (i != text.size()) fail("unexpected trailing characters");
}

void validate_factor(const PrimeFactor& f, const std::string& shown) {
  auto fail = [&](const std::string& why) {
    throw KnotNameError("bad knot name \"" + shown + "\": " + why);
  };
  if (f.index < 1) fail("index must be positive");
  if (f.crossing == 0) {
    if (f.index != 1 || f.prefix != ChiralPrefix::achiral) fail("the unknot is a0.1");
  } else if (f.crossing < 3) {
    fail("no prime knot has fewer than three crossings");
  }
  const bool needs_flag = f.crossing >= 11;
  if (needs_flag && f.alt == AltFlag::none) fail("names from 11 crossings carry 'a' or 'n'");
  if (!needs_flag && f.alt != AltFlag::none) fail("'a'/'n' only applies from 11 crossings");
}

std::string format_factor(const PrimeFactor& f) {
  std::string out(1, static_cast<char>(f.prefix));
  out += std::to_string(f.crossing);
  out.push_back('.');
  out += std::to_string(f.index);
  if (f.alt != AltFlag::none) out.push_back(static_cast<char>(f.alt));
  return out;
}

std::string canonical_key(std::string_view poly) { return format_poly(parse_poly(trim(poly))); }

}  // namespace

std::strong_ordering factor_order(const PrimeFactor& a, const PrimeFactor& b) {
  if (auto c = a.crossing <=> b.crossing; c != 0) return c;
  if (auto c = alt_rank(a.alt) <=> alt_rank(b.alt); c != 0) return c;
  if (auto c = a.index <=> b.index; c != 0) return c;
  return prefix_rank(a.prefix) <=> prefix_rank(b.prefix);
}

KnotTypeName::KnotTypeName(std::vector<PrimeFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw KnotNameError("knot name needs at least one factor");
  std::string shown;
  for (const auto& f : factors_) {
    if (!shown.empty()) shown.push_back('#');
    shown += format_factor(f);
  }
  for (const auto& f : factors_) {
    validate_factor(f, shown);
    if (f.crossing == 0 && factors_.size() > 1) {
      throw KnotNameError("bad knot name \"" + shown + "\": the unknot cannot be a factor");
    }
  }
  for (std::size_t i = 1; i < factors_.size(); ++i) {
    if (factor_order(factors_[i - 1], factors_[i]) > 0) {
      throw KnotNameError("bad knot name \"" + shown + "\": factors out of canonical order");
    }
  }
}

KnotTypeName KnotTypeName::unknot() {
  return KnotTypeName({PrimeFactor{ChiralPrefix::achiral, 0, 1, AltFlag::none}});
}

int KnotTypeName::crossing_number() const {
  int sum = 0;
  for (const auto& f : factors_) sum += f.crossing;
  return sum;
}

std::uint64_t KnotTypeName::chiral_type_count() const {
  std::uint64_t count = 1;
  std::size_t i = 0;
  while (i < factors_.size()) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j].same_base(factors_[i])) ++j;
    std::uint64_t shared = 0;
    for (std::size_t k = i; k < j; ++k) shared += factors_[k].prefix == ChiralPrefix::shared;
    count *= shared + 1;
    i = j;
  }
  return count;
}

bool table_order_less(const KnotTypeName& a, const KnotTypeName& b) {
  if (a.crossing_number() != b.crossing_number()) return a.crossing_number() < b.crossing_number();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  if (fa.size() != fb.size()) return fa.size() < fb.size();
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (auto c = factor_order(fa[i], fb[i]); c != 0) return c < 0;
  }
  return false;
}

KnotTypeName parse_knot_name(std::string_view text) {
  const std::string_view whole = trim(text);
  std::vector<PrimeFactor> factors;
  for (std::string_view part : split(whole, '#')) {
    if (part.empty()) throw KnotNameError("bad knot name \"" + std::string(whole) + "\": empty factor");
    PrimeFactor f;
    switch (part.front()) {
      case 'p': f.prefix = ChiralPrefix::plus; break;
      case 'm': f.prefix = ChiralPrefix::minus; break;
      case 'h': f.prefix = ChiralPrefix::shared; break;
      case 'a': f.prefix = ChiralPrefix::achiral; break;
      default:
        throw KnotNameError("bad knot name \"" + std::string(whole) + "\": prefix must be p, m, h or a");
    }
    parse_base(part.substr(1), whole, f.crossing, f.index, f.alt);
    factors.push_back(f);
  }
  return KnotTypeName(std::move(factors));
}

std::string format_knot_name(const KnotTypeName& k) {
  std::string out;
  for (const auto& f : k.factors()) {
    if (!out.empty()) out.push_back('#');
    out += format_factor(f);
  }
  return out;
}

void KnotTable::add(const LMPolynomial& poly, const KnotTypeName& name) { add(format_poly(poly), name); }

void KnotTable::add(const std::string& canonical_poly, const KnotTypeName& name) {
  auto& names = entries_[canonical_poly];
  const std::string shown = format_knot_name(name);
  auto pos = std::lower_bound(names.begin(), names.end(), shown,
                              [](const KnotTypeName& k, const std::string& s) { return format_knot_name(k) < s; });
  if (pos != names.end() && *pos == name) return;
  names.insert(pos, name);
}

const std::vector<KnotTypeName>* KnotTable::lookup(std::string_view canonical_poly) const {
  auto it = entries_.find(std::string(canonical_poly));
  return it == entries_.end() ? nullptr : &it->second;
}

const std::vector<KnotTypeName>* KnotTable::lookup(const LMPolynomial& poly) const {
  return lookup(format_poly(poly));
}

KnotTable load_table(std::istream& in) {
  KnotTable t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (line.front() == '#') {
      t.header().push_back(line);
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() < 2) {
      throw TableError("table line " + std::to_string(line_no) + ": expected POLY,name[,name...]");
    }
    try {
      const std::string key = canonical_key(fields[0]);
      for (std::size_t i = 1; i < fields.size(); ++i) t.add(key, parse_knot_name(fields[i]));
    } catch (const std::exception& e) {
      throw TableError("table line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return t;
}

KnotTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open table file " + path);
  return load_table(in);
}

KnotTable load_table_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_table(in);
}

void save_table(const KnotTable& t, std::ostream& out) {
  struct Row {
    const std::string* key;
    const std::vector<KnotTypeName>* names;
    const KnotTypeName* first;
  };
  std::vector<Row> rows;
  rows.reserve(t.size());
  for (const auto& [key, names] : t.entries()) {
    const KnotTypeName* first = &*std::min_element(names.begin(), names.end(), table_order_less);
    rows.push_back(Row{&key, &names, first});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (table_order_less(*a.first, *b.first)) return true;
    if (table_order_less(*b.first, *a.first)) return false;
    return *a.key < *b.key;
  });
  for (const auto& h : t.header()) out << h << '\n';
  for (const auto& r : rows) {
    out << *r.key;
    for (const auto& n : *r.names) out << ',' << format_knot_name(n);
    out << '\n';
  }
}

void save_table_file(const KnotTable& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw TableError("cannot write table file " + path);
  save_table(t, out);
}

std::string format_lookup(const std::vector<KnotTypeName>* names) {
  if (names == nullptr || names->empty()) return std::string(kUnknownKnot);
  std::string out;
  for (const auto& n : *names) {
    if (!out.empty()) out.push_back(',');
    out += format_knot_name(n);
  }
  return out;
}

std::vector<SeedEntry> load_seeds(std::istream& in) {
  std::vector<SeedEntry> seeds;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      throw TableError("seed line " + std::to_string(line_no) + ": " + why);
    };
    const auto fields = split(line, ',');
    if (fields.size() < 4) fail("expected name,class,override,egc");
    SeedEntry s;
    try {
      parse_base(trim(fields[0]), fields[0], s.crossing, s.index, s.alt);
    } catch (const KnotNameError& e) {
      fail(e.what());
    }
    const std::string_view cls = trim(fields[1]);
    if (cls == "achiral") {
      s.chirality = ChiralityClass::achiral;
    } else if (cls == "chiral") {
      s.chirality = ChiralityClass::chiral;
    } else {
      fail("class must be achiral or chiral");
    }
    const std::string_view ov = trim(fields[2]);
    if (ov == "p") {
      s.pm_override = ChiralPrefix::plus;
    } else if (ov == "m") {
      s.pm_override = ChiralPrefix::minus;
    } else if (!ov.empty()) {
      fail("override must be p, m or empty");
    }
    // Multi-component codes never appear in the seed set, but keep the
    // separator intact if they do.
    std::string egc(fields[3]);
    for (std::size_t i = 4; i < fields.size(); ++i) egc += "," + std::string(fields[i]);
    s.egc = std::string(trim(egc));
    try {
      const Diagram d = parse_egc(s.egc);
      const int expected = s.crossing == 0 ? 1 : s.crossing;
      if (d.crossing_count() != expected || d.component_count() != 1) {
        fail("diagram has " + std::to_string(d.crossing_count()) + " crossings, expected " +
             std::to_string(expected));
      }
    } catch (const EgcError& e) {
      fail(e.what());
    }
    seeds.push_back(std::move(s));
  }
  return seeds;
}

std::vector<SeedEntry> load_seeds_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_seeds(in);
}

std::vector<PrimeRecord> designate_primes(const std::vector<SeedEntry>& seeds, HomflyEngine& engine) {
  std::vector<PrimeRecord> records;
  for (const auto& s : seeds) {
    const Diagram d = parse_egc(s.egc);
    const LMPolynomial poly = engine.compute(d);
    const LMPolynomial mirror_poly = engine.compute(mirror(d));
    auto named = [&](ChiralPrefix p) { return KnotTypeName({PrimeFactor{p, s.crossing, s.index, s.alt}}); };
    const std::string base = format_factor(PrimeFactor{ChiralPrefix::achiral, s.crossing, s.index, s.alt}).substr(1);

    if (s.chirality == ChiralityClass::achiral) {
      if (poly != mirror_poly) {
        throw TableError("seed " + base + " is declared achiral but its polynomial differs from its mirror's");
      }
      records.push_back({named(ChiralPrefix::achiral), poly});
      continue;
    }
    if (poly == mirror_poly) {
      records.push_back({named(ChiralPrefix::shared), poly});
      continue;
    }
    const int w = writhe(d);
    ChiralPrefix own;
    if (w > 0) {
      own = ChiralPrefix::plus;
    } else if (w < 0) {
      own = ChiralPrefix::minus;
    } else if (s.pm_override) {
      own = *s.pm_override;
    } else {
      throw TableError("seed " + base + " has writhe 0 and no p/m override");
    }
    const bool own_plus = own == ChiralPrefix::plus;
    records.push_back({named(ChiralPrefix::plus), own_plus ? poly : mirror_poly});
    records.push_back({named(ChiralPrefix::minus), own_plus ? mirror_poly : poly});
  }
  return records;
}

KnotTable build_prime_table(const std::vector<SeedEntry>& seeds) {
  HomflyEngine engine;
  KnotTable t;
  for (const auto& r : designate_primes(seeds, engine)) t.add(r.poly, r.name);
  return t;
}

std::size_t extend_with_composites(KnotTable& t, const std::vector<PrimeRecord>& primes, int max_crossing) {
  std::vector<const PrimeRecord*> pool;
  for (const auto& p : primes) {
    if (!p.name.is_prime()) throw TableError("composite building blocks must be prime");
    if (p.name.crossing_number() > 0) pool.push_back(&p);
  }
  std::sort(pool.begin(), pool.end(), [](const PrimeRecord* a, const PrimeRecord* b) {
    return factor_order(a->name.factors().front(), b->name.factors().front()) < 0;
  });

  std::size_t added = 0;
  std::vector<PrimeFactor> factors;
  std::function<void(std::size_t, int, const LMPolynomial&)> grow = [&](std::size_t from, int crossings,
                                                                        const LMPolynomial& poly) {
    for (std::size_t i = from; i < pool.size(); ++i) {
      const int c = crossings + pool[i]->name.crossing_number();
      if (c > max_crossing) break;
      factors.push_back(pool[i]->name.factors().front());
      const LMPolynomial next = poly * pool[i]->poly;
      if (factors.size() >= 2) {
        t.add(next, KnotTypeName(factors));
        ++added;
      }
      grow(i, c, next);
      factors.pop_back();
    }
  };
  grow(0, 0, LMPolynomial::constant(1));
  return added;
}

TableStats table_stats(const KnotTable& t, int max_crossing) {
  TableStats stats;
  for (const auto& [key, names] : t.entries()) {
    std::uint64_t types = 0;
    for (const auto& n : names) {
      if (n.crossing_number() <= max_crossing) types += n.chiral_type_count();
    }
    if (types == 0) continue;
    stats.chiral_types += types;
    stats.polynomials += 1;
    stats.collision_histogram[types] += 1;
  }
  return stats;
}

const KnotTable& builtin_table() {
  static const KnotTable table = load_table_text(builtin_table_text());
  return table;
}

KnotTable generate_table(const std::vector<SeedEntry>& seeds, int max_crossing) {
  std::vector<SeedEntry> chosen;
  for (const auto& s : seeds) {
    if (s.crossing <= max_crossing) chosen.push_back(s);
  }
  HomflyEngine engine;
  const auto primes = designate_primes(chosen, engine);
  KnotTable t;
  for (const auto& r : primes) t.add(r.poly, r.name);
  extend_with_composites(t, primes, max_crossing);

  auto& h = t.header();
  h.push_back("# HOMFLY-PT polynomial (Lickorish-Millett normalization) -> chiral knot types");
  h.push_back("# Prime and composite knot types with crossing number <= " + std::to_string(max_crossing) +
              "; composites assume additive crossing number.");
  h.push_back("# Prefixes: a achiral, h chiral with one polynomial for both mirror images,");
  h.push_back("# p/m chiral, p on the polynomial of the positive-writhe minimal diagram.");
  if (max_crossing >= 10) {
    h.push_back("# 10.83/10.86 follow KnotInfo's assignment; the Perko pair is 10.161.");
  }
  return t;
}

}  // namespace knotid
