#include "seaweed/spec.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

namespace seaweed {

std::string_view to_string(AlgebraType t) {
  switch (t) {
    case AlgebraType::GL: return "GL";
    case AlgebraType::A: return "A";
    case AlgebraType::B: return "B";
    case AlgebraType::C: return "C";
    case AlgebraType::D: return "D";
  }
  return "?";
}

std::optional<AlgebraType> algebra_from_string(std::string_view tag) {
  if (tag == "GL") return AlgebraType::GL;
  if (tag == "A") return AlgebraType::A;
  if (tag == "B") return AlgebraType::B;
  if (tag == "C") return AlgebraType::C;
  if (tag == "D") return AlgebraType::D;
  return std::nullopt;
}

int Composition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

SpecSyntaxError::SpecSyntaxError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

namespace {

std::string join_violations(const ValidationReport& r) {
  std::string out = "invalid seaweed spec:";
  for (const auto& v : r.violations) out += " " + v;
  return out;
}

// Cursor over the non-whitespace bytes of the input, remembering where each
// byte sat in the original text so errors can point at it.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) kept_.push_back(i);
    }
  }

  bool done() const { return pos_ == kept_.size(); }
  char peek() const { return done() ? '\0' : text_[kept_[pos_]]; }
  void advance() { ++pos_; }
  std::size_t offset() const { return done() ? text_.size() : kept_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { throw SpecSyntaxError(what, offset()); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  int integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a decimal integer");
    const std::size_t start = offset();
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > std::numeric_limits<int>::max()) throw SpecSyntaxError("integer too large", start);
      advance();
    }
    return static_cast<int>(value);
  }

  // A possibly empty '|'-separated list, terminated by `stop` (or end of input
  // when stop is '\0').
  Composition parts(char stop) {
    Composition c;
    if (peek() == stop) return c;
    c.parts.push_back(integer());
    while (peek() == '|') {
      advance();
      c.parts.push_back(integer());
    }
    if (peek() != stop) {
      if (stop == '\0') fail("unexpected trailing input");
      fail(std::string("expected '|' or '") + stop + "'");
    }
    return c;
  }

 private:
  std::string_view text_;
  std::vector<std::size_t> kept_;
  std::size_t pos_ = 0;
};

}  // namespace

InvalidSpecError::InvalidSpecError(ValidationReport report)
    : std::invalid_argument(join_violations(report)), report_(std::move(report)) {}

SeaweedSpec parse_spec(std::string_view text) {
  Cursor cur(text);
  SeaweedSpec spec;

  std::string tag;
  while (std::isalpha(static_cast<unsigned char>(cur.peek()))) {
    tag.push_back(cur.peek());
    cur.advance();
  }
  const auto algebra = algebra_from_string(tag);
  if (!algebra) throw SpecSyntaxError("unknown algebra type '" + tag + "'", 0);
  spec.algebra = *algebra;

  spec.n = cur.integer();
  cur.expect(':');
  spec.top = cur.parts('/');
  cur.expect('/');
  spec.bottom = cur.parts('\0');
  return spec;
}

std::string format_spec(const SeaweedSpec& spec) {
  std::ostringstream os;
  os << to_string(spec.algebra) << spec.n << ':';
  auto emit = [&os](const Composition& c) {
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "|" : "") << c[i];
  };
  emit(spec.top);
  os << '/';
  emit(spec.bottom);
  return os.str();
}

ValidationReport validate(const SeaweedSpec& spec) {
  ValidationReport r;
  auto violate = [&r](std::string rule) {
    r.ok = false;
    r.violations.push_back(std::move(rule));
  };

  if (spec.n < 1) violate("n-positive");
  auto positive = [](const Composition& c) {
    for (int p : c.parts)
      if (p < 1) return false;
    return true;
  };
  if (!positive(spec.top) || !positive(spec.bottom)) violate("parts-positive");

  const int top = spec.top.sum();
  const int bottom = spec.bottom.sum();
  if (uses_partial_compositions(spec.algebra)) {
    if (top > spec.n) violate("top-sum-le-n");
    if (bottom > spec.n) violate("bottom-sum-le-n");
    if (top < bottom) violate("top-sum-ge-bottom-sum");
  } else if (top != spec.n || bottom != spec.n) {
    violate(std::string(to_string(spec.algebra)) + "-sums-equal-n");
  }
  return r;
}

void require_valid(const SeaweedSpec& spec) {
  auto report = validate(spec);
  if (!report.ok) throw InvalidSpecError(std::move(report));
}

namespace {

void compositions_into(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.push_back(Composition{prefix});
    return;
  }
  for (int first = remaining; first >= 1; --first) {
    prefix.push_back(first);
    compositions_into(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  compositions_into(n, prefix, out);
  return out;
}

std::vector<Composition> partial_compositions(int n) {
  std::vector<Composition> out;
  for (int total = n; total >= 0; --total) {
    auto block = compositions(total);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

void for_each_spec(AlgebraType algebra, int n,
                   const std::function<void(const SeaweedSpec&)>& visit) {
  if (n < 1) return;
  const auto pool = uses_partial_compositions(algebra) ? partial_compositions(n) : compositions(n);
  SeaweedSpec spec;
  spec.algebra = algebra;
  spec.n = n;
  for (const auto& top : pool) {
    const int top_sum = top.sum();
    for (const auto& bottom : pool) {
      if (bottom.sum() > top_sum) continue;
      spec.top = top;
      spec.bottom = bottom;
      visit(spec);
    }
  }
}

std::vector<SeaweedSpec> enumerate_specs(AlgebraType algebra, int n) {
  std::vector<SeaweedSpec> out;
  for_each_spec(algebra, n, [&out](const SeaweedSpec& s) { out.push_back(s); });
  return out;
}

}  // namespace seaweed
