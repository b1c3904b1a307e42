// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "hic/chordal.hpp"
#include "hic/domination.hpp"
#include "hic/homology.hpp"
#include "hic/verify.hpp"

using namespace hic;

namespace {

struct Result {
  bool ok = false;
  std::string detail;
};

std::string run_command(const std::string& cmd, int& status) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  status = pclose(pipe);
  return out;
}

std::string cli(const std::string& args, int& status) {
  return run_command(std::string(HIC_CLI_PATH) + " " + args, status);
}

HomotopyType path_formula(std::size_t n, unsigned r) {
  for (std::size_t k = 1; (r + 2) * k - 1 <= n; ++k) {
    if (n == (r + 2) * k || n == (r + 2) * k - 1) return HomotopyType::sphere(static_cast<int>(r * k) - 1);
  }
  return HomotopyType::contractible();
}

SuiteReport suite(const std::string& name, std::size_t trials, std::size_t max_n, unsigned r_max,
                  std::uint64_t seed = 20240601) {
  SuiteConfig c;
  c.suite = name;
  c.trials = trials;
  c.max_n = max_n;
  c.r_max = r_max;
  c.seed = seed;
  return run_suite(c);
}

std::string tally(const SuiteReport& r) {
  std::ostringstream out;
  out << r.suite << " run=" << r.run << " passed=" << r.passed << " failed=" << r.failed
      << " skipped=" << r.skipped << " vacuous=" << r.vacuous;
  return out.str();
}

bool clean(const SuiteReport& r, std::size_t expected_run) {
  return r.run == expected_run && r.failed == 0 && r.skipped == 0 && !r.inconclusive();
}

Result golden_fig2() {
  const std::string graph = std::string(HIC_TEST_DATA_DIR) + "/fig2.txt";
  int s1 = 0;
  int s2 = 0;
  const auto type = Json::parse(cli("chordal --graph " + graph + " --r 2", s1));
  const auto hom = Json::parse(cli("homology --graph " + graph + " --r 2", s2));
  const bool ok = s1 == 0 && s2 == 0 && homotopy_type_from_json(type) == HomotopyType::wedge({{1, 1}, {3, 2}}) &&
                  hom.at("homology") == to_json(homology_of_type(HomotopyType::wedge({{1, 1}, {3, 2}})));
  return {ok, "chordal " + type.dump() + ", homology " + hom.at("homology").dump()};
}

Result golden_fig1() {
  const auto g = fixtures::fig1();
  const auto gamma = distance_domination_number(g, 2).value;
  const auto omega = set_domination_number(g, 2).value;
  return {gamma == 1 && omega == 5, "gamma_2=" + std::to_string(gamma) + " omega_2=" + std::to_string(omega)};
}

Result path_table() {
  std::size_t checked = 0;
  for (unsigned r : {2u, 3u}) {
    for (std::size_t n = 1; n <= 12; ++n) {
      const auto g = path_graph(n);
      const auto expected = path_formula(n, r);
      if (chordal_homotopy_type(g, r).type != expected) {
        return {false, "engine mismatch at r=" + std::to_string(r) + " n=" + std::to_string(n)};
      }
      if (reduced_homology(build_ind_complex(g, r)) != homology_of_type(expected)) {
        return {false, "homology mismatch at r=" + std::to_string(r) + " n=" + std::to_string(n)};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (r, n) pairs"};
}

Result wheel_family() {
  std::ostringstream detail;
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto h = reduced_homology(build_ind_complex(wheel_graph(n), static_cast<unsigned>(n - 1)));
    const bool ok = h.nonzero().size() == 1 && h.betti(static_cast<int>(n) - 2) == n && h.torsion_free();
    detail << "W" << n << ":" << to_json(h).dump() << " ";
    if (!ok) return {false, detail.str()};
  }
  return {true, detail.str()};
}

Result oracle_equivalence() {
  const auto r = suite("chordal-oracle", 100, 12, 3);
  return {clean(r, 100), tally(r)};
}

Result theorem_domination() {
  const auto a = suite("thm-domination", 200, 9, 3);
  const auto b = suite("thm-set-domination", 200, 9, 3);
  std::ostringstream detail;
  detail << tally(a) << " vacuous_fraction=" << a.vacuous_fraction() << "; " << tally(b)
         << " vacuous_fraction=" << b.vacuous_fraction();
  const bool ok = clean(a, 200) && clean(b, 200) && a.vacuous_fraction() < 1.0 && b.vacuous_fraction() < 1.0;
  return {ok, detail.str()};
}

Result chordal_omega() {
  const auto r = suite("chordal-omega", 100, 12, 3);
  std::ostringstream detail;
  detail << tally(r) << " vacuous_fraction=" << r.vacuous_fraction();
  return {clean(r, 100), detail.str()};
}

Result synthesis_round_trip() {
  const auto r = suite("synth-roundtrip", 1, 14, 3);
  return {clean(r, 84), tally(r)};
}

Result structural() {
  const auto star = suite("star-cover", 50, 9, 3);
  const auto remark = suite("remark-supports", 1, 7, 2);
  const auto cor44 = suite("cor44-torsion", 50, 9, 3);
  const bool ok = clean(star, 50) && clean(remark, 996) && clean(cor44, 50) && cor44.vacuous == 0;
  return {ok, tally(star) + "; " + tally(remark) + "; " + tally(cor44)};
}

Result determinism() {
  std::size_t compared = 0;
  for (const auto& name : suite_names()) {
    const auto a = to_json(suite(name, 25, name == "wheels" ? 6 : 8, 3, 99)).dump();
    const auto b = to_json(suite(name, 25, name == "wheels" ? 6 : 8, 3, 99)).dump();
    if (a != b) return {false, "suite " + name + " differs between runs"};
    ++compared;
  }
  int s1 = 0;
  int s2 = 0;
  const std::string args = "verify --suite chordal-oracle --trials 30 --max-n 10 --r-max 3 --seed 5 --json ";
  cli(args + "acceptance_a.json", s1);
  cli(args + "acceptance_b.json", s2);
  int s3 = 0;
  run_command("cmp -s acceptance_a.json acceptance_b.json", s3);
  if (s1 != 0 || s2 != 0 || s3 != 0) return {false, "CLI reports differ"};
  return {true, std::to_string(compared) + " suites in process, CLI report files identical"};
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Result()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden worked example", 10, golden_fig2},
      {2, "golden star of paths", 1, golden_fig1},
      {3, "path table", 60, path_table},
      {4, "wheel family", 120, wheel_family},
      {5, "oracle equivalence", 600, oracle_equivalence},
      {6, "domination vanishing suites", 900, theorem_domination},
      {7, "set domination on chordal graphs", 900, chordal_omega},
      {8, "synthesis round trip", 600, synthesis_round_trip},
      {9, "structural suites", 900, structural},
      {10, "determinism", 900, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds) {
      result.ok = false;
      result.detail += " [over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit]";
    }
    std::printf("%s %d %s (%.2f s): %s\n", result.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                result.detail.c_str());
    failures += result.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
