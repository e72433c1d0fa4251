#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "skewrs/code.hpp"
#include "skewrs/cyclotomic_field.hpp"
#include "skewrs/errors.hpp"
#include "skewrs/expression_parser.hpp"
#include "skewrs/finite_field.hpp"
#include "skewrs/rational_function_field.hpp"
#include "skewrs/skew_poly.hpp"

namespace skewrs {

// Code config files are `key = value` lines. `#` starts a comment, blank lines
// are ignored, keys are unique. Recognised keys:
//
//   field.kind              finite | rational | cyclotomic
//   field.p, field.degree   base field GF(p^d) (finite, rational)
//   field.modulus           monic polynomial in the generator symbol, e.g. a^2 + a + 1
//   field.generator         generator symbol (default a)
//   field.variable          rational-function indeterminate (default z)
//   sigma.frobenius_power   finite: sigma = Frob^e
//   sigma.mobius            rational: a, b, c, d with sigma(z) = (az + b)/(cz + d)
//   sigma.exponent          cyclotomic: sigma(chi) = chi^k
//   cyclotomic.order        cyclotomic: prime m, chi a primitive m-th root of unity
//   cyclotomic.symbol       cyclotomic root symbol (default chi)
//   alpha                   normal element (default: searched)
//   r, delta                offset and designed distance
//
// A code bundle is a config plus `code.*` lines written by `build`; on load the
// stored generator is checked against the rebuilt one.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& msg, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class Config {
 public:
  struct Entry {
    std::string value;
    std::size_t line = 0;
  };

  static Config parse(std::string_view text) {
    Config cfg;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const auto line = trim(raw);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line_no);
      const auto key = std::string(trim(line.substr(0, eq)));
      const auto value = std::string(trim(line.substr(eq + 1)));
      if (key.empty()) throw ConfigError("empty key", line_no);
      if (!cfg.entries_.emplace(key, Entry{value, line_no}).second)
        throw ConfigError("duplicate key '" + key + "'", line_no);
      cfg.order_.push_back(key);
    }
    return cfg;
  }

  static Config load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  bool has(const std::string& key) const { return entries_.count(key) > 0; }

  const Entry& entry(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) throw ConfigError("missing key '" + key + "'");
    return it->second;
  }

  std::string get(const std::string& key, std::string fallback) const {
    return has(key) ? entry(key).value : fallback;
  }

  std::uint64_t get_uint(const std::string& key) const {
    const auto& e = entry(key);
    std::uint64_t v = 0;
    const auto* end = e.value.data() + e.value.size();
    const auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
    if (ec != std::errc{} || ptr != end)
      throw ConfigError("'" + key + "' must be a non-negative integer", e.line);
    return v;
  }

  std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const {
    return has(key) ? get_uint(key) : fallback;
  }

  std::size_t line_of(const std::string& key) const { return has(key) ? entry(key).line : 0; }

  /// Keys in file order.
  const std::vector<std::string>& keys() const { return order_; }

 private:
  static std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
  }

  std::map<std::string, Entry> entries_;
  std::vector<std::string> order_;
};

namespace detail {

/// Runs `fn`, rethrowing parse and domain errors as ConfigErrors on `key`'s line.
template <class Fn>
auto at_key(const Config& cfg, const std::string& key, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("'" + key + "': " + e.what(), cfg.line_of(key));
  }
}

inline std::vector<std::uint32_t> parse_modulus(const Config& cfg, std::uint32_t p, std::uint32_t degree,
                                               const std::string& symbol) {
  if (!cfg.has("field.modulus")) return {};
  return at_key(cfg, "field.modulus", [&] {
    const GaloisField prime(p, 1);
    const auto terms = ExpressionParser<GaloisField>(prime, cfg.entry("field.modulus").value, symbol)
                           .parse_polynomial();
    std::vector<std::uint32_t> coeffs(degree + 1, 0);
    for (const auto& [deg, c] : terms) {
      if (deg < 0 || deg > static_cast<long long>(degree))
        throw std::invalid_argument("modulus must have degree " + std::to_string(degree));
      coeffs[deg] = c.value;
    }
    return coeffs;
  });
}

inline GaloisField base_field(const Config& cfg) {
  const auto p = static_cast<std::uint32_t>(cfg.get_uint("field.p"));
  const auto degree = static_cast<std::uint32_t>(cfg.get_uint("field.degree", 1));
  const auto symbol = cfg.get("field.generator", "a");
  bool prime = p >= 2;
  for (std::uint32_t d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
  if (!prime) throw ConfigError("'field.p' must be prime", cfg.line_of("field.p"));
  auto modulus = parse_modulus(cfg, p, degree, symbol);
  const auto key = cfg.has("field.modulus") ? std::string("field.modulus") : std::string("field.degree");
  return at_key(cfg, key, [&] { return GaloisField(p, degree, std::move(modulus), symbol); });
}

}  // namespace detail

using AnyField = std::variant<FiniteField, RationalFunctionField, CyclotomicField>;

inline AnyField build_field(const Config& cfg) {
  const auto kind = cfg.get("field.kind", "finite");
  if (kind == "finite") {
    auto base = detail::base_field(cfg);
    const auto e = static_cast<std::uint32_t>(cfg.get_uint("sigma.frobenius_power"));
    return FiniteField(std::move(base), e);
  }
  if (kind == "rational") {
    auto base = detail::base_field(cfg);
    const auto& text = cfg.entry("sigma.mobius");
    std::vector<GfElem> m;
    std::istringstream parts(text.value);
    for (std::string item; std::getline(parts, item, ',');)
      m.push_back(detail::at_key(cfg, "sigma.mobius", [&] { return parse_element(base, item); }));
    if (m.size() != 4) throw ConfigError("'sigma.mobius' needs four coefficients a, b, c, d", text.line);
    return detail::at_key(cfg, "sigma.mobius", [&] {
      return RationalFunctionField(base, {m[0], m[1], m[2], m[3]}, cfg.get("field.variable", "z"));
    });
  }
  if (kind == "cyclotomic") {
    const auto m = static_cast<std::uint32_t>(cfg.get_uint("cyclotomic.order"));
    const auto k = static_cast<std::uint32_t>(cfg.get_uint("sigma.exponent"));
    return detail::at_key(cfg, "cyclotomic.order",
                          [&] { return CyclotomicField(m, k, cfg.get("cyclotomic.symbol", "chi")); });
  }
  throw ConfigError("unknown field.kind '" + kind + "' (finite, rational, cyclotomic)", cfg.line_of("field.kind"));
}

/// A field together with a code over it. The field lives on the heap so the
/// code's reference to it survives moves of the bundle.
template <SkewField F>
struct CodeBundle {
  std::unique_ptr<F> field;
  std::optional<SkewRSCode<F>> code;
  Config config;
};

using AnyBundle = std::variant<CodeBundle<FiniteField>, CodeBundle<RationalFunctionField>,
                               CodeBundle<CyclotomicField>>;

template <SkewField F>
CodeBundle<F> build_bundle(F field, const Config& cfg) {
  CodeBundle<F> b{std::make_unique<F>(std::move(field)), std::nullopt, cfg};
  const F& L = *b.field;
  const auto alpha = cfg.has("alpha")
                         ? detail::at_key(cfg, "alpha", [&] { return L.parse(cfg.entry("alpha").value); })
                         : find_normal_element(L);
  const auto r = cfg.get_uint("r", 0);
  const auto delta = cfg.get_uint("delta");
  const auto n = static_cast<std::uint64_t>(L.order());
  if (delta < 2 || delta > n)
    throw ConfigError("'delta' must satisfy 2 <= delta <= n = " + std::to_string(n), cfg.line_of("delta"));
  const auto key = cfg.has("alpha") ? std::string("alpha") : std::string("delta");
  b.code.emplace(detail::at_key(cfg, key, [&] { return build_code(L, alpha, r, delta); }));
  if (cfg.has("code.generator")) {
    const auto stored = detail::at_key(cfg, "code.generator",
                                       [&] { return parse_poly(L, cfg.entry("code.generator").value); });
    if (!(stored == b.code->generator()))
      throw ConfigError("stored generator does not match the rebuilt code", cfg.line_of("code.generator"));
  }
  return b;
}

inline AnyBundle load_bundle(const Config& cfg) {
  return std::visit([&cfg](auto field) -> AnyBundle { return build_bundle(std::move(field), cfg); },
                    build_field(cfg));
}

/// The config keys followed by derived `code.*` lines.
template <SkewField F>
std::string format_bundle(const CodeBundle<F>& b) {
  std::string out;
  for (const auto& key : b.config.keys()) {
    if (key.rfind("code.", 0) == 0) continue;
    out += key + " = " + b.config.entry(key).value + "\n";
  }
  const auto& c = *b.code;
  const F& L = *b.field;
  if (!b.config.has("alpha")) out += "alpha = " + L.format(c.alpha()) + "\n";
  out += "code.length = " + std::to_string(c.length()) + "\n";
  out += "code.dimension = " + std::to_string(c.dimension()) + "\n";
  out += "code.t = " + std::to_string(c.correction_capability()) + "\n";
  out += "code.beta = " + L.format(c.beta()) + "\n";
  out += "code.generator = " + format_poly(c.generator()) + "\n";
  return out;
}

template <SkewField F>
std::string format_summary(const CodeBundle<F>& b) {
  const auto& c = *b.code;
  const F& L = *b.field;
  std::string out = L.describe() + "\n";
  out += "n = " + std::to_string(c.length()) + ", k = " + std::to_string(c.dimension()) +
         ", delta = " + std::to_string(c.designed_distance()) + ", t = " +
         std::to_string(c.correction_capability()) + ", r = " + std::to_string(c.offset()) + "\n";
  out += "alpha = " + L.format(c.alpha()) + "\n";
  out += "beta = " + L.format(c.beta()) + "\n";
  out += "g = " + format_poly(c.generator()) + "\n";
  return out;
}

}  // namespace skewrs
