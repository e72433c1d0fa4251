// skewrs: build, encode, decode and test skew Reed-Solomon codes.
//
// Exit status: 0 pass, 1 verification failure, 2 usage or config error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "skewrs/skewrs.hpp"

namespace {

using namespace skewrs;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string config;
  std::string in;
  std::string out;
  std::size_t trials = 1000;
  std::string weights;
  std::uint64_t seed = 1;
  std::uint64_t budget = 1u << 22;
  int which = 0;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
}

// "0-2" or "1,2,2".
std::vector<std::size_t> parse_weights(const std::string& text) {
  std::vector<std::size_t> out;
  if (const auto dash = text.find('-'); dash != std::string::npos) {
    const auto lo = std::stoul(text.substr(0, dash));
    const auto hi = std::stoul(text.substr(dash + 1));
    if (lo > hi) throw std::invalid_argument("empty weight range '" + text + "'");
    for (auto w = lo; w <= hi; ++w) out.push_back(w);
    return out;
  }
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(std::stoul(item));
  if (out.empty()) throw std::invalid_argument("no weights given");
  return out;
}

AnyBundle load(const Options& o) { return load_bundle(Config::load(o.config)); }

int cmd_build(const Options& o) {
  return std::visit(
      [&](const auto& b) {
        std::cout << format_summary(b);
        if (!o.out.empty()) write_output(o.out, format_bundle(b));
        return kPass;
      },
      load(o));
}

int cmd_encode(const Options& o) {
  return std::visit(
      [&](const auto& b) {
        const auto m = parse_poly(*b.field, read_input(o.in));
        write_output(o.out, format_poly(encode(*b.code, m)) + "\n");
        return kPass;
      },
      load(o));
}

int cmd_decode(const Options& o) {
  return std::visit(
      [&](const auto& b) {
        const auto y = parse_poly(*b.field, read_input(o.in));
        if (y.degree() >= static_cast<int>(b.code->length()))
          throw std::invalid_argument("received word has degree >= n");
        const auto report = decode(*b.code, y);
        write_output(o.out, format_report(report, *b.field));
        return report.ok() ? kPass : kFail;
      },
      load(o));
}

int cmd_simulate(const Options& o) {
  return std::visit(
      [&](const auto& b) {
        SimulationOptions opts;
        opts.trials = o.trials;
        opts.seed = o.seed;
        opts.weights = o.weights.empty() ? std::vector<std::size_t>{0, b.code->correction_capability()}
                                         : parse_weights(o.weights);
        for (auto w : opts.weights)
          if (w > b.code->length()) throw std::invalid_argument("error weight exceeds n");
        const auto stats = simulate(*b.code, opts);
        write_output(o.out, format_stats(stats));
        // Failures only count against the decoder within its capability.
        for (const auto& [w, ws] : stats.per_weight)
          if (w <= b.code->correction_capability() && ws.successes != ws.trials) return kFail;
        return kPass;
      },
      load(o));
}

int cmd_oracle(const Options& o) {
  return std::visit(
      [&](const auto& b) -> int {
        using F = std::decay_t<decltype(*b.field)>;
        if constexpr (!EnumerableField<F>) {
          std::cerr << "oracle: " << to_string(b.field->kind())
                    << " fields are infinite; run the property tests instead\n";
          return kUsage;
        } else {
          const auto& code = *b.code;
          std::ostringstream out;
          const auto d = min_distance_oracle(code, o.budget);
          out << "min_distance = " << d << " (designed " << code.designed_distance() << ")\n";
          bool ok = d == code.designed_distance();
          try {
            const auto rep = nearest_codeword_oracle(code, o.budget);
            out << "vectors_scanned = " << rep.vectors_scanned << "\n"
                << "within_radius = " << rep.within_radius << "\n"
                << "disagreements = " << rep.disagreements << "\n";
            for (const auto& y : rep.examples) out << "disagreement at y = " << y << "\n";
            ok = ok && rep.disagreements == 0;
          } catch (const std::length_error& e) {
            out << "nearest-codeword scan skipped: " << e.what() << "\n";
          }
          out << (ok ? "PASS" : "FAIL") << "\n";
          write_output(o.out, out.str());
          return ok ? kPass : kFail;
        }
      },
      load(o));
}

int cmd_example(const Options& o) {
  bool ok = true;
  for (int w = 1; w <= 3; ++w) {
    if (o.which != 0 && o.which != w) continue;
    const auto t = worked_example(w);
    std::cout << t.format();
    ok = ok && t.passed();
  }
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew Reed-Solomon codes with Peterson-Gorenstein-Zierler decoding"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "construct a code from a config file and print its summary");
  build->add_option("--config", o.config, "code config file")->required();
  build->add_option("--out", o.out, "write the code bundle here");

  auto* enc = app.add_subcommand("encode", "encode a message polynomial");
  auto* dec = app.add_subcommand("decode", "decode a received polynomial");
  for (auto* sub : {enc, dec}) {
    sub->add_option("--config", o.config, "code config or bundle")->required();
    sub->add_option("--in", o.in, "input polynomial file, - for stdin")->required();
    sub->add_option("--out", o.out, "output file (default stdout)");
  }

  auto* sim = app.add_subcommand("simulate", "random encode/corrupt/decode trials");
  sim->add_option("--config", o.config, "code config or bundle")->required();
  sim->add_option("--trials", o.trials, "number of trials")->capture_default_str();
  sim->add_option("--weights", o.weights, "error weights: range 0-2 or list 1,2 (default 0,t)");
  sim->add_option("--seed", o.seed, "master seed")->capture_default_str();
  sim->add_option("--out", o.out, "output file (default stdout)");

  auto* ex = app.add_subcommand("example", "rerun a worked example and check every intermediate");
  ex->add_option("which", o.which, "1, 2 or 3 (default all)")->check(CLI::Range(0, 3));

  auto* orc = app.add_subcommand("oracle", "exhaustive distance and nearest-codeword checks");
  orc->add_option("--config", o.config, "code config or bundle")->required();
  orc->add_option("--budget", o.budget, "enumeration budget")->capture_default_str();
  orc->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*build) return cmd_build(o);
    if (*enc) return cmd_encode(o);
    if (*dec) return cmd_decode(o);
    if (*sim) return cmd_simulate(o);
    if (*ex) return cmd_example(o);
    if (*orc) return cmd_oracle(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error at offset " << e.position() << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
