#include <gtest/gtest.h>

#include "support.hpp"

using namespace skewrs;

namespace {

const std::string kFinite =
    "# comment line\n"
    "field.kind = finite\n"
    "field.p = 2\n"
    "field.degree = 12\n"
    "field.modulus = a^12 + a^7 + a^6 + a^5 + a^3 + a + 1   # trailing comment\n"
    "sigma.frobenius_power = 10\n"
    "alpha = a\n"
    "delta = 5\n";

std::size_t error_line(const std::string& text) {
  try {
    load_bundle(Config::parse(text));
  } catch (const ConfigError& e) {
    return e.line();
  }
  return 0;
}

std::string replace(std::string text, const std::string& from, const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

}  // namespace

TEST(Config, ParsesKeysInOrder) {
  const auto cfg = Config::parse(kFinite);
  EXPECT_EQ(cfg.keys().front(), "field.kind");
  EXPECT_EQ(cfg.keys().size(), 7u);
  EXPECT_EQ(cfg.get_uint("delta"), 5u);
  EXPECT_EQ(cfg.line_of("alpha"), 7u);
  EXPECT_EQ(cfg.entry("field.modulus").value, "a^12 + a^7 + a^6 + a^5 + a^3 + a + 1");
  EXPECT_EQ(cfg.get("r", "0"), "0");
}

TEST(Config, SyntaxErrorsCarryLineNumbers) {
  try {
    Config::parse("field.p = 2\nno equals sign\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  try {
    Config::parse("a = 1\n\nb = 2\na = 3\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(Config::parse(" = 3\n"), ConfigError);
}

TEST(Config, SemanticErrorsPointAtTheKey) {
  EXPECT_EQ(error_line(replace(kFinite, "delta = 5", "delta = 9")), 8u);
  EXPECT_EQ(error_line(replace(kFinite, "delta = 5", "delta = five")), 8u);
  EXPECT_EQ(error_line(replace(kFinite, "alpha = a", "alpha = a +")), 7u);
  EXPECT_EQ(error_line(replace(kFinite, "alpha = a", "alpha = 1")), 7u);  // not normal
  EXPECT_EQ(error_line(replace(kFinite, "a^7 + a^6 + a^5 + a^3 + a + 1", "1")), 5u);
  EXPECT_EQ(error_line(replace(kFinite, "field.kind = finite", "field.kind = p-adic")), 2u);
  EXPECT_EQ(error_line(replace(kFinite, "field.p = 2", "field.p = 4")), 3u);
  EXPECT_THROW(load_bundle(Config::parse(replace(kFinite, "delta = 5\n", ""))), ConfigError);
}

TEST(Config, BuildsEachFieldKind) {
  const auto rational = Config::parse(
      "field.kind = rational\nfield.p = 2\nfield.degree = 2\nfield.modulus = a^2 + a + 1\n"
      "sigma.mobius = 1, a, 1, a^2\nalpha = z\ndelta = 5\n");
  const auto b1 = load_bundle(rational);
  ASSERT_TRUE(std::holds_alternative<CodeBundle<RationalFunctionField>>(b1));
  EXPECT_EQ(std::get<CodeBundle<RationalFunctionField>>(b1).code->length(), 5u);

  const auto cyclo = Config::parse("field.kind = cyclotomic\ncyclotomic.order = 7\nsigma.exponent = 3\ndelta = 3\n");
  const auto b2 = load_bundle(cyclo);
  ASSERT_TRUE(std::holds_alternative<CodeBundle<CyclotomicField>>(b2));
  EXPECT_EQ(std::get<CodeBundle<CyclotomicField>>(b2).code->dimension(), 4u);

  EXPECT_EQ(error_line("field.kind = rational\nfield.p = 2\nfield.degree = 2\nsigma.mobius = 1, a, 1\ndelta = 3\n"),
            4u);
}

TEST(Config, BundleRoundTrip) {
  const auto bundle = load_bundle(Config::parse("field.kind = finite\nfield.p = 2\nfield.degree = 4\n"
                                                "sigma.frobenius_power = 1\ndelta = 3\n"));
  const auto& b = std::get<CodeBundle<FiniteField>>(bundle);
  const auto text = format_bundle(b);
  EXPECT_NE(text.find("alpha = "), std::string::npos);  // searched alpha is recorded
  EXPECT_NE(text.find("code.t = 1\n"), std::string::npos);

  const auto reloaded = load_bundle(Config::parse(text));
  const auto& r = std::get<CodeBundle<FiniteField>>(reloaded);
  EXPECT_EQ(r.code->generator(), b.code->generator());
  EXPECT_EQ(format_bundle(r), text);

  // Tampering with the stored generator is detected.
  const auto tampered = text.substr(0, text.find("code.generator")) + "code.generator = x^2 + 1\n";
  EXPECT_THROW(load_bundle(Config::parse(tampered)), ConfigError);
}

TEST(Config, LoadMissingFile) {
  EXPECT_THROW(Config::load("/nonexistent/skewrs.conf"), ConfigError);
}
