#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seaweed {

/// Ambient algebra family: gl(n), sl(n), so(2n+1), sp(2n), so(2n).
enum class AlgebraType { GL, A, B, C, D };

std::string_view to_string(AlgebraType t);
std::optional<AlgebraType> algebra_from_string(std::string_view tag);

/// GL and A take full compositions; B, C and D take partial ones.
inline bool uses_partial_compositions(AlgebraType t) {
  return t == AlgebraType::B || t == AlgebraType::C || t == AlgebraType::D;
}

/// An ordered list of parts. Empty is a valid partial composition.
struct Composition {
  std::vector<int> parts;

  int sum() const;
  std::size_t size() const { return parts.size(); }
  bool empty() const { return parts.empty(); }
  int operator[](std::size_t i) const { return parts[i]; }

  friend bool operator==(const Composition&, const Composition&) = default;
};

/// A seaweed p^T_n(top | bottom). For GL/A `n` is the matrix size; for B/C/D
/// it is the rank parameter of so(2n+1), sp(2n) or so(2n).
struct SeaweedSpec {
  AlgebraType algebra = AlgebraType::A;
  int n = 1;
  Composition top;
  Composition bottom;

  friend bool operator==(const SeaweedSpec&, const SeaweedSpec&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Thrown by parse_spec; `offset` is the byte offset into the original text.
class SpecSyntaxError : public std::runtime_error {
 public:
  SpecSyntaxError(const std::string& what, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Thrown by operations that require a valid spec.
class InvalidSpecError : public std::invalid_argument {
 public:
  explicit InvalidSpecError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Parses `<T><n>:<top>/<bottom>`, e.g. "C5:1|4/3" or "D5:1|4/".
/// Whitespace anywhere is ignored. Only syntax is checked here.
SeaweedSpec parse_spec(std::string_view text);

/// Canonical form, no spaces: "A5:4|1/2|1|2".
std::string format_spec(const SeaweedSpec& spec);

ValidationReport validate(const SeaweedSpec& spec);

/// Throws InvalidSpecError when validate() reports violations.
void require_valid(const SeaweedSpec& spec);

/// All compositions of n, largest first part first: (3), (2,1), (1,2), (1,1,1).
std::vector<Composition> compositions(int n);

/// All compositions of 0..n, larger totals first, each total as in compositions().
std::vector<Composition> partial_compositions(int n);

/// Every valid spec of the given family and size, in a fixed order: tops in
/// the order above, and for each top every admissible bottom in the same order.
std::vector<SeaweedSpec> enumerate_specs(AlgebraType algebra, int n);

/// Streams the same sequence as enumerate_specs without materializing it.
void for_each_spec(AlgebraType algebra, int n,
                   const std::function<void(const SeaweedSpec&)>& visit);

}  // namespace seaweed
