#include "seaweed/index.hpp"

#include <cassert>
#include <numeric>

namespace seaweed {

std::string_view to_string(IndexMethod m) {
  switch (m) {
    case IndexMethod::Meander: return "meander";
    case IndexMethod::ClosedForm: return "closed_form";
    case IndexMethod::Oracle: return "oracle";
  }
  return "?";
}

IndexReport index_combinatorial(const SeaweedSpec& spec) {
  const auto summary = components(build_meander(spec));
  IndexReport r;
  r.method = IndexMethod::Meander;
  r.cycles = summary.cycles;
  r.paths = summary.paths;
  r.tailed_paths = summary.tailed_paths;
  switch (spec.algebra) {
    case AlgebraType::GL: r.index = 2 * r.cycles + r.paths; break;
    case AlgebraType::A: r.index = 2 * r.cycles + r.paths - 1; break;
    default: r.index = 2 * r.cycles + r.tailed_paths; break;
  }
  return r;
}

namespace {

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

// Rules shared by types B and C (and reached from type D by reduction).
std::optional<ClosedFormIndex> closed_form_bc(int n, const Composition& top, const Composition& bottom) {
  if (top.size() == 2 && bottom.size() == 1 && top.sum() == n) {
    const int b = top[1];
    const int c = bottom[0];
    if (c == n - 1 || c == n - 2) return ClosedFormIndex{std::gcd(n, b + c) - 1, "THM_4_4"};
  }
  if (top.size() == 1 && top[0] == n && bottom.size() == 2) {
    const int a = bottom[0];
    const int b = bottom[1];
    if (a + b == n - 1) return ClosedFormIndex{std::gcd(a + b, b + 1) - 1, "THM_4_5_i"};
    if (a + b == n - 2) return ClosedFormIndex{std::gcd(a + b, b + 2) - 1, "THM_4_5_ii"};
  }
  if (top.size() == 1 && bottom.size() == 1) {
    const int a = top[0];
    const int b = bottom[0];
    if (a == b) return ClosedFormIndex{n, "EXERCISE_C2"};
    const int extra = a % 2 == 0 ? floor_div2(a - b) : floor_div2(a - b - 1);
    return ClosedFormIndex{n - a + extra, "EXERCISE_C2"};
  }
  return std::nullopt;
}

std::optional<ClosedFormIndex> closed_form_a(int n, const Composition& top, const Composition& bottom) {
  if (top.size() == 3 && bottom.size() == 1) {
    return ClosedFormIndex{std::gcd(top[0] + top[1], top[1] + top[2]) - 1, "THM_3_2"};
  }
  if (top.size() == 2 && bottom.size() == 2) {
    return ClosedFormIndex{std::gcd(top[0] + top[1], top[1] + bottom[0]) - 1, "THM_3_2"};
  }
  if (top.size() == 2 && bottom.size() == 1) {
    return ClosedFormIndex{std::gcd(top[0], top[1]) - 1, "THM_3_3"};
  }
  (void)n;
  return std::nullopt;
}

std::optional<ClosedFormIndex> closed_form_d(const SeaweedSpec& spec) {
  const int n = spec.n;
  const int r = spec.top.sum();
  switch (tail(spec).config) {
    case TailConfig::I: {
      auto c = closed_form_bc(n, spec.top, spec.bottom);
      if (c) c->rule = "CONFIG_I+" + c->rule;
      return c;
    }
    case TailConfig::II: {
      auto c = closed_form_bc(r, spec.top, spec.bottom);
      if (!c) return std::nullopt;
      return ClosedFormIndex{n - (r + 1) + c->index, "CONFIG_II+" + c->rule};
    }
    case TailConfig::III: {
      if (spec.top.size() != 2 || spec.bottom.size() != 1) return std::nullopt;
      const int a = spec.top[0];
      const int b = spec.top[1];
      const int c = spec.bottom[0];
      if (b != n - c) return std::nullopt;
      // b = n - c is odd in configuration III.
      if (b == 1) return ClosedFormIndex{a + 1, "CASE1"};
      return ClosedFormIndex{a + floor_div2(b - 3), "CASE1"};
    }
    case TailConfig::NONE: break;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ClosedFormIndex> index_closed_form(const SeaweedSpec& spec) {
  require_valid(spec);
  switch (spec.algebra) {
    case AlgebraType::GL: return std::nullopt;
    case AlgebraType::A: return closed_form_a(spec.n, spec.top, spec.bottom);
    case AlgebraType::B:
    case AlgebraType::C: return closed_form_bc(spec.n, spec.top, spec.bottom);
    case AlgebraType::D: return closed_form_d(spec);
  }
  return std::nullopt;
}

namespace {

struct RuleOutcome {
  std::optional<bool> verdict;
  std::string tag;
  FrobeniusCertificate certificate;
};

RuleOutcome from_closed_form(const std::optional<ClosedFormIndex>& cf) {
  RuleOutcome out;
  if (!cf) return out;
  out.verdict = cf->index == 0;
  out.tag = cf->rule;
  out.certificate.closed_form_index = cf->index;
  return out;
}

RuleOutcome classify_bc(int n, const Composition& top, const Composition& bottom) {
  RuleOutcome out;
  if (top.size() == 2 && bottom.size() == 1 && top.sum() == n) {
    const int a = top[0];
    const int b = top[1];
    const int c = bottom[0];
    const int g = std::gcd(a + b, b + c);
    out.certificate.gcd = g;
    if (c == n - 1 && g == 1) {
      out.verdict = true;
      out.tag = "THM_4_6_i";
    } else if (c == n - 2 && g == 1) {
      out.verdict = true;
      out.tag = "THM_4_6_ii";
    } else if (c == n - 3 && a % 2 == 1 && b % 2 == 1 && c % 2 == 1 && g == 2) {
      out.verdict = true;
      out.tag = "THM_4_6_iii";
    } else {
      out.verdict = false;
      out.tag = "THM_4_6";
    }
    return out;
  }
  return from_closed_form(closed_form_bc(n, top, bottom));
}

RuleOutcome classify_d_config_iii(const SeaweedSpec& spec) {
  RuleOutcome out;
  const int n = spec.n;
  const auto& top = spec.top;
  const auto& bottom = spec.bottom;

  if (top.size() == 2 && bottom.size() == 1) {
    const int a = top[0];
    const int b = top[1];
    const int c = bottom[0];
    if (b == n - c) return from_closed_form(closed_form_d(spec));
    if (b < n - c) {
      if (b == 2 && c == n - 3) {
        out.verdict = true;
        out.tag = "CASE2_i";
      } else if (b == 3 && c == n - 5 && n % 2 == 0) {
        out.verdict = true;
        out.tag = "CASE2_ii";
      } else {
        out.verdict = false;
        out.tag = "CASE2";
      }
      return out;
    }
    // b > n - c
    const int g = std::gcd(a + b, b + c);
    out.certificate.gcd = g;
    if (c == n - 3) {
      if (g == 3) {
        out.verdict = true;
        out.tag = "GCD3";
      } else if (g == 1) {
        const int delta = (a + (n - c)) % n;
        const Rational x = xi(n, delta);
        out.certificate.delta = delta;
        out.certificate.xi = x;
        out.verdict = x.strictly_between_zero_and_half();
        out.tag = "XI_TAIL2";
      } else {
        out.verdict = false;
        out.tag = "TAIL2_GCD";
      }
      return out;
    }
    if (c == n - 5) {
      if (a % 2 == 1 && b % 2 == 1 && c % 2 == 1 && g == 2) {
        const int delta = (a + (n - c)) % n;
        const Rational x = xi(n / 2, delta / 2);
        out.certificate.delta = delta;
        out.certificate.xi = x;
        out.verdict = x.strictly_between_zero_and_half();
        out.tag = "XI_TAIL4";
      } else {
        out.verdict = false;
        out.tag = "SIZE4_NECESSARY";
      }
      return out;
    }
    out.verdict = false;
    out.tag = "TAIL_SIZE";
    return out;
  }

  if (!top.empty()) {
    const int last = top.parts.back();
    if (last < n - bottom.sum() && last != 2 && last != 3) {
      out.verdict = false;
      out.tag = "ATTACHING_LEMMA";
    }
  }
  return out;
}

RuleOutcome classify_d(const SeaweedSpec& spec) {
  const int n = spec.n;
  const int r = spec.top.sum();
  switch (tail(spec).config) {
    case TailConfig::I: {
      auto out = classify_bc(n, spec.top, spec.bottom);
      if (out.verdict) out.tag = "CONFIG_I+" + out.tag;
      return out;
    }
    case TailConfig::II: {
      RuleOutcome out;
      if (r + 1 < n) {
        // v_{r+2}..v_n are isolated and tail-free.
        out.verdict = false;
        out.tag = "CONFIG_II";
        return out;
      }
      out = classify_bc(r, spec.top, spec.bottom);
      if (out.verdict) out.tag = "CONFIG_II+" + out.tag;
      return out;
    }
    case TailConfig::III: return classify_d_config_iii(spec);
    case TailConfig::NONE: break;
  }
  return {};
}

}  // namespace

FrobeniusVerdict classify_frobenius(const SeaweedSpec& spec) {
  require_valid(spec);

  RuleOutcome rule;
  switch (spec.algebra) {
    case AlgebraType::GL:
      rule.verdict = false;
      rule.tag = "GL_NEVER";
      break;
    case AlgebraType::A: rule = from_closed_form(closed_form_a(spec.n, spec.top, spec.bottom)); break;
    case AlgebraType::B:
    case AlgebraType::C: rule = classify_bc(spec.n, spec.top, spec.bottom); break;
    case AlgebraType::D: rule = classify_d(spec); break;
  }

  FrobeniusVerdict v;
  v.frobenius = index_combinatorial(spec).index == 0;
  v.rule_verdict = rule.verdict;
  v.justification = rule.verdict ? rule.tag : "MEANDER_FOREST";
  v.certificate = rule.certificate;
  assert(!v.rule_verdict || *v.rule_verdict == v.frobenius);
  return v;
}

}  // namespace seaweed
