#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "knotid/egc.hpp"
#include "knotid/homfly.hpp"
#include "knotid/polynomial.hpp"

namespace knotid {

class KnotNameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// p: plus, m: minus, h: chiral but both mirror images share one polynomial,
// a: achiral.
enum class ChiralPrefix : char { plus = 'p', minus = 'm', shared = 'h', achiral = 'a' };

// Alternating / non-alternating marker of the DT-style names used from 11
// crossings on (e.g. 11.99a); absent in the classical tables.
enum class AltFlag : char { none = 0, alternating = 'a', nonalternating = 'n' };

struct PrimeFactor {
  ChiralPrefix prefix = ChiralPrefix::achiral;
  int crossing = 0;
  int index = 1;
  AltFlag alt = AltFlag::none;

  bool same_base(const PrimeFactor& o) const {
    return crossing == o.crossing && index == o.index && alt == o.alt;
  }
  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

// Canonical factor order: crossing, alternating flag, index, then p before m.
std::strong_ordering factor_order(const PrimeFactor& a, const PrimeFactor& b);

class KnotTypeName {
 public:
  KnotTypeName() = default;
  // Validates ordering and per-factor consistency.
  explicit KnotTypeName(std::vector<PrimeFactor> factors);

  static KnotTypeName unknot();

  const std::vector<PrimeFactor>& factors() const { return factors_; }
  bool is_prime() const { return factors_.size() == 1; }
  int crossing_number() const;

  // Number of chiral knot types this name stands for: an 'h' base occurring
  // k times covers k + 1 chirality combinations.
  std::uint64_t chiral_type_count() const;

  friend bool operator==(const KnotTypeName&, const KnotTypeName&) = default;

 private:
  std::vector<PrimeFactor> factors_;
};

// Table order: crossing number, factor count, then factors.
bool table_order_less(const KnotTypeName& a, const KnotTypeName& b);

KnotTypeName parse_knot_name(std::string_view text);
std::string format_knot_name(const KnotTypeName& k);

// Polynomial -> matching chiral knot types.
class KnotTable {
 public:
  // Adds `name` under the canonical form of `poly`, keeping each list sorted
  // lexicographically by formatted name and duplicate-free.
  void add(const LMPolynomial& poly, const KnotTypeName& name);
  void add(const std::string& canonical_poly, const KnotTypeName& name);

  // nullptr when the polynomial is not in the table.
  const std::vector<KnotTypeName>* lookup(std::string_view canonical_poly) const;
  const std::vector<KnotTypeName>* lookup(const LMPolynomial& poly) const;

  std::size_t size() const { return entries_.size(); }
  const std::unordered_map<std::string, std::vector<KnotTypeName>>& entries() const { return entries_; }

  std::vector<std::string>& header() { return header_; }
  const std::vector<std::string>& header() const { return header_; }

  friend bool operator==(const KnotTable&, const KnotTable&) = default;

 private:
  std::unordered_map<std::string, std::vector<KnotTypeName>> entries_;
  std::vector<std::string> header_;
};

// Comma-delimited "POLY,name[,name...]" lines; lines starting with '#' are
// header comments. Keys are canonicalized and duplicate keys merged.
KnotTable load_table(std::istream& in);
KnotTable load_table_file(const std::string& path);
KnotTable load_table_text(std::string_view text);
void save_table(const KnotTable& t, std::ostream& out);
void save_table_file(const KnotTable& t, const std::string& path);

// Comma-joined names, or "unknown".
std::string format_lookup(const std::vector<KnotTypeName>* names);
inline constexpr std::string_view kUnknownKnot = "unknown";

enum class ChiralityClass { achiral, chiral };

struct SeedEntry {
  int crossing = 0;
  int index = 1;
  AltFlag alt = AltFlag::none;
  ChiralityClass chirality = ChiralityClass::chiral;
  std::string egc;
  // Designation of the seed diagram's own polynomial, used when its writhe
  // is zero.
  std::optional<ChiralPrefix> pm_override;
};

// "name,class,override,egc" lines, '#' comments; e.g. "3.1,chiral,,b1+a2+b3+a1+b2+a3+".
std::vector<SeedEntry> load_seeds(std::istream& in);
std::vector<SeedEntry> load_seeds_text(std::string_view text);

struct PrimeRecord {
  KnotTypeName name;
  LMPolynomial poly;
};

// One record per chiral name: a, h, or a p/m pair designated by writhe.
std::vector<PrimeRecord> designate_primes(const std::vector<SeedEntry>& seeds,
                                          HomflyEngine& engine);
KnotTable build_prime_table(const std::vector<SeedEntry>& seeds);

// Adds every multiset of at least two non-trivial prime names with total
// crossing number at most `max_crossing`, keyed by the product polynomial.
// Returns the number of composite names added.
std::size_t extend_with_composites(KnotTable& t, const std::vector<PrimeRecord>& primes,
                                   int max_crossing);

struct TableStats {
  std::uint64_t chiral_types = 0;  // NCKT
  std::uint64_t polynomials = 0;   // NHF
  // chiral types per polynomial -> number of polynomials
  std::map<std::uint64_t, std::uint64_t> collision_histogram;
};

// Statistics over names with crossing number at most `max_crossing`.
TableStats table_stats(const KnotTable& t, int max_crossing);

// Seeds and table generated from them, compiled into the library.
std::string_view builtin_seeds_text();
std::string_view builtin_table_text();
const KnotTable& builtin_table();

// Full generation: primes from seeds up to `max_crossing`, then composites.
KnotTable generate_table(const std::vector<SeedEntry>& seeds, int max_crossing);

}  // namespace knotid
