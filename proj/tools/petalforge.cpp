#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>
#include <vector>

#include "petalforge/braid.hpp"
#include "petalforge/petal.hpp"
#include "petalforge/torus.hpp"

namespace {

using namespace petalforge;

struct VerifyReport {
  int failed = 0;
  std::string text;
};

VerifyReport run_verify(int r, int s, bool deep) {
  PipelineTrace trace = transformation_chain(r, s, deep);
  VerifyReport report;
  std::ostringstream out;
  out << "T(" << r << "," << s << ")\n";
  for (const auto& c : trace.certificates) {
    if (!c.ok) ++report.failed;
    out << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.kind << ' ' << c.from << "->"
        << c.to << '\n';
  }
  out << "  petal " << trace.petal.to_string() << " [" << trace.petal.petals()
      << " petals]\n";
  if (!trace.alexander_matched) ++report.failed;
  out << "  alexander " << (trace.alexander_matched ? "matches" : "MISMATCH") << ": "
      << trace.alexander.to_string() << '\n';
  report.text = out.str();
  return report;
}

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"petal diagrams and braid reductions of torus knots"};
  app.require_subcommand(1);

  long long seed = 0;
  app.add_option("--seed", seed)->group("");  // reserved; output is deterministic

  int r = 0, s = 0, smax = 9, jobs = 1;
  bool deep = false;
  std::string format = "json", out_path, strands_opt;

  auto* synth = app.add_subcommand("synth", "produce the trace, petal, or drawing of T(r,s)");
  synth->add_option("--r", r, "first torus parameter")->required();
  synth->add_option("--s", s, "second torus parameter")->required();
  synth->add_option("--format", format, "json, petal, or svg")
      ->check(CLI::IsMember({"json", "petal", "svg"}));
  synth->add_option("--out", out_path, "output file (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "check every pipeline certificate for T(r,s)");
  verify->add_option("--r", r)->required();
  verify->add_option("--s", s)->required();
  verify->add_flag("--deep", deep, "also cross-check invariants through the diagram route");

  auto* sweep = app.add_subcommand("sweep", "verify all coprime pairs with s up to a bound");
  sweep->add_option("--smax", smax, "largest s (hard cap 12)")->check(CLI::Range(3, 12));
  sweep->add_flag("--deep", deep);
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));

  auto* braid_cmd = app.add_subcommand("braid", "braid word utilities");
  braid_cmd->require_subcommand(1);
  int strands = 0;
  std::string word1, word2;
  auto* nf_cmd = braid_cmd->add_subcommand("nf", "left-greedy normal form of a word");
  nf_cmd->add_option("--strands", strands)->required();
  nf_cmd->add_option("word", word1, "signed letters, e.g. \"1 2 -1\"");
  auto* eq_cmd = braid_cmd->add_subcommand("eq", "decide equality of two words");
  eq_cmd->add_option("--strands", strands)->required();
  eq_cmd->add_option("first", word1);
  eq_cmd->add_option("second", word2);
  auto* perm_cmd = braid_cmd->add_subcommand("perm", "underlying permutation of a word");
  perm_cmd->add_option("--strands", strands)->required();
  perm_cmd->add_option("word", word1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth->parsed()) {
      std::string payload;
      int failed = 0;
      if (format == "json") {
        PipelineTrace trace = transformation_chain(r, s);
        for (const auto& c : trace.certificates)
          if (!c.ok) ++failed;
        payload = trace_to_json(trace).dump(2) + "\n";
      } else if (format == "petal") {
        payload = torus_petal(r, s).to_string() + "\n";
      } else {
        payload = render_svg(torus_petal(r, s));
      }
      emit(out_path, payload);
      return failed == 0 ? 0 : 1;
    }
    if (verify->parsed()) {
      VerifyReport report = run_verify(r, s, deep);
      std::cout << report.text;
      return report.failed == 0 ? 0 : 1;
    }
    if (sweep->parsed()) {
      std::vector<std::pair<int, int>> pairs;  // (s, r) ascending
      for (int ss = 3; ss <= smax; ++ss)
        for (int rr = 2; rr < ss; ++rr)
          if (std::gcd(rr, ss) == 1) pairs.emplace_back(ss, rr);
      std::vector<VerifyReport> reports(pairs.size());
      std::atomic<std::size_t> cursor{0};
      auto worker = [&] {
        for (std::size_t i; (i = cursor.fetch_add(1)) < pairs.size();)
          reports[i] = run_verify(pairs[i].second, pairs[i].first, deep);
      };
      std::vector<std::thread> pool;
      for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();
      int failed = 0;
      for (const auto& rep : reports) {
        std::cout << rep.text;
        failed += rep.failed;
      }
      std::cout << "pairs: " << pairs.size() << ", failed checks: " << failed << '\n';
      return failed == 0 ? 0 : 1;
    }
    if (nf_cmd->parsed()) {
      std::cout << normal_form(BraidWord::parse(strands, word1)).to_string() << '\n';
      return 0;
    }
    if (eq_cmd->parsed()) {
      const bool equal =
          braids_equal(BraidWord::parse(strands, word1), BraidWord::parse(strands, word2));
      std::cout << (equal ? "equal" : "different") << '\n';
      return equal ? 0 : 1;
    }
    if (perm_cmd->parsed()) {
      std::cout << underlying_permutation(BraidWord::parse(strands, word1)).to_string()
                << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
