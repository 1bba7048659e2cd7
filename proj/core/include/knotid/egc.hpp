#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotid {

class EgcError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Which strand of a crossing a token passes along: serialized as 'a' (over)
// or 'b' (under).
enum class Strand : char { over = 'a', under = 'b' };

constexpr Strand opposite(Strand s) { return s == Strand::over ? Strand::under : Strand::over; }

struct Token {
  Strand strand = Strand::over;
  int label = 1;
  int sign = 1;  // +1 or -1

  friend bool operator==(const Token&, const Token&) = default;
};

using Component = std::vector<Token>;

// An extended Gauss code: one cyclic token sequence per link component.
//
// Every label occurs exactly twice across the diagram, once over and once
// under, both occurrences carrying the same sign. Labels need not be
// contiguous; canonical() renumbers them 1..c by first occurrence.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<Component> components);

  const std::vector<Component>& components() const { return components_; }
  std::size_t component_count() const { return components_.size(); }
  int crossing_count() const { return crossings_; }
  bool empty() const { return components_.empty(); }

  // Labels renumbered to 1..c in order of first occurrence.
  Diagram canonical() const;
  bool is_canonical() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Component> components_;
  int crossings_ = 0;
};

// Relabels raw component lists in place (1..c by first occurrence). No
// validation; empty components are allowed.
void relabel_canonical(std::vector<Component>& components);

// Throws EgcError unless `components` is a valid crossing structure.
void validate_components(const std::vector<Component>& components);

Diagram parse_egc(std::string_view line);
std::string format_egc(const Diagram& d);
// Serializes raw components with the same syntax (empty components allowed).
std::string format_components(const std::vector<Component>& components);

Diagram mirror(const Diagram& d);
Diagram reverse(const Diagram& d);
int writhe(const Diagram& d);
Diagram connected_sum(const Diagram& lhs, const Diagram& rhs);

// The protected one-crossing twist "b1-a1-".
Diagram twist_unknot();

}  // namespace knotid
