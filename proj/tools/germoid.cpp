#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "germoid/error.hpp"
#include "germoid/fixtures.hpp"
#include "germoid/germs.hpp"
#include "germoid/io.hpp"
#include "germoid/partact.hpp"
#include "germoid/verify.hpp"

namespace {

using germoid::Errc;
using germoid::Error;
namespace io = germoid::io;

// Exit codes: 0 success, 1 failed check or invalid input, 2 IO or parse.
constexpr int kFail = 1;
constexpr int kIo = 2;

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") std::cout << text;
  else io::write_text(out, text);
}

germoid::InvSemigroup load(const std::string& path) { return io::semigroup_from_json(io::read_json(path)); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_analyze(const std::string& file) {
  const auto s = load(file);
  const auto sigma = germoid::max_group_image(s);
  const auto plain = germoid::CharSpace::of(s, false);
  std::cout << "elements: " << s.size() << "\n"
            << "idempotents: " << s.idempotents().size() << "\n"
            << "zero: " << (s.zero() ? s.name(*s.zero()) : "none") << "\n"
            << "E-unitary: " << yes_no(germoid::is_e_unitary(s, sigma)) << "\n"
            << "0-E-unitary: " << (s.has_zero() ? yes_no(germoid::is_zero_e_unitary(s)) : "n/a") << "\n"
            << "max group image order: " << sigma.group.size() << "\n"
            << "filters: " << plain.size() << "\n";
  if (s.has_zero()) {
    const auto contracted = germoid::CharSpace::of(s, true);
    std::cout << "filters contracted: " << contracted.size() << "\n"
              << "tight: " << germoid::tight_spectrum(contracted).size() << "\n";
  }
  return 0;
}

struct Built {
  germoid::FiniteGroupoid groupoid;
  io::json json;
};

Built build_groupoid(const germoid::InvSemigroup& s, const std::string& variant) {
  if (variant == "universal" || variant == "contracted") {
    if (variant == "contracted" && !s.has_zero())
      throw Error(Errc::VariantUnavailable, "the contracted groupoid needs a zero");
    auto u = germoid::universal_groupoid(s, variant == "contracted");
    return {u.groupoid(), io::to_json(u.germs)};
  }
  if (variant == "tight") {
    if (!s.has_zero()) throw Error(Errc::VariantUnavailable, "the tight groupoid needs a zero");
    auto t = germoid::tight_groupoid(s);
    return {t.germs.groupoid, io::to_json(t.germs)};
  }
  if (variant == "partial") {
    if (!germoid::is_e_unitary(s)) throw Error(Errc::VariantUnavailable, "G⋉Ê needs an E-unitary semigroup");
    auto p = germoid::partial_trans_groupoid(germoid::theta_from_sigma(s).theta);
    return {p.groupoid, io::to_json(p.groupoid)};
  }
  throw Error(Errc::InvalidParams, "unknown variant " + variant);
}

std::string summary(const germoid::FiniteGroupoid& g) {
  std::map<std::size_t, std::size_t> isotropy;
  for (germoid::Id u = 0; u < g.num_units(); ++u) ++isotropy[g.isotropy(u).size()];
  std::ostringstream out;
  out << "units: " << g.num_units() << ", arrows: " << g.num_arrows() << ", isotropy:";
  for (const auto& [order, count] : isotropy) out << " " << order << "x" << count;
  return out.str();
}

int cmd_verify(const std::string& suite, const std::vector<std::string>& files, bool timing) {
  std::vector<std::pair<std::string, std::string>> fixtures;
  for (const auto& f : files) fixtures.emplace_back(std::filesystem::path(f).stem().string(), f);
  std::sort(fixtures.begin(), fixtures.end());
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& [name, path] : fixtures) {
    const auto s = load(path);
    auto reports = germoid::run_suite(suite, name, s);
    std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) { return a.check < b.check; });
    for (const auto& r : reports) {
      std::cout << r.to_json(timing).dump() << "\n";
      if (r.skipped) ++skipped;
      else if (r.pass) ++passed;
      else {
        ++failed;
        std::cerr << "FAIL " << r.fixture << " " << r.check << ": " << r.reason << "\n";
      }
    }
  }
  std::cerr << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return failed == 0 ? 0 : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite inverse semigroups and their groupoids"};
  app.require_subcommand(1);

  std::string out;

  auto* gen = app.add_subcommand("gen", "Generate a semigroup fixture");
  std::string kind;
  germoid::fixtures::FixtureParams params;
  std::vector<std::string> operands;
  gen->add_option("kind", kind, "chain | group | brandt | symmetric_inverse | semidirect | direct_product | "
                                "adjoin_zero | preset")
      ->required();
  gen->add_option("--n", params.n, "size parameter");
  gen->add_option("--group-order", params.group_order, "order of the cyclic group");
  gen->add_flag("--zero", params.zero, "bottom of a chain is a zero");
  gen->add_option("--preset", params.preset, "preset name");
  gen->add_option("--seed", params.seed, "seed for random semidirect products");
  gen->add_option("--operand", operands, "semigroup JSON operand files");
  gen->add_option("-o,--out", out, "output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "Print invariants of a semigroup");
  std::string file;
  analyze->add_option("file", file)->required();

  auto* groupoid = app.add_subcommand("groupoid", "Build a groupoid of a semigroup");
  std::string variant = "universal", format = "json";
  groupoid->add_option("file", file)->required();
  groupoid->add_option("--variant", variant)->check(CLI::IsMember({"universal", "contracted", "tight", "partial"}));
  groupoid->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  groupoid->add_option("-o,--out", out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run verification suites; JSON lines on stdout");
  std::string suite;
  std::vector<std::string> files;
  bool timing = false;
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(germoid::suite_names()));
  verify->add_option("files", files)->required();
  verify->add_flag("--timing", timing, "include wall time per check");

  auto* dot = app.add_subcommand("export-dot", "Convert groupoid JSON to DOT");
  dot->add_option("file", file)->required();
  dot->add_option("-o,--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kIo;
  }

  try {
    if (gen->parsed()) {
      for (const auto& f : operands) params.operands.push_back(load(f));
      emit(out, io::to_json(germoid::fixtures::generate_fixture(kind, params)).dump(2) + "\n");
      return 0;
    }
    if (analyze->parsed()) return cmd_analyze(file);
    if (groupoid->parsed()) {
      const auto built = build_groupoid(load(file), variant);
      emit(out, format == "dot" ? io::to_dot(built.groupoid, variant) : built.json.dump(2) + "\n");
      std::cerr << summary(built.groupoid) << "\n";
      return 0;
    }
    if (verify->parsed()) return cmd_verify(suite, files, timing);
    if (dot->parsed()) {
      const auto g = io::groupoid_from_json(io::read_json(file));
      emit(out, io::to_dot(g, std::filesystem::path(file).stem().string()));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::ParseError ? kIo : kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return 0;
}
