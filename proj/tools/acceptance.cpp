#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>

#include "checks.hpp"

using namespace fsc;
using namespace fsc::cli;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
  Json details;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  status = pclose(pipe.release());
  return out;
}

Outcome from(const Check& c) { return {c.pass, c.summary, to_json(c)}; }

Outcome tau_calibration() {
  const auto t0 = std::chrono::steady_clock::now();
  Check c = check_tau_calibration(RangeConfig{});
  const double t = seconds_since(t0);
  Outcome o = from(c);
  o.pass = o.pass && t < 300;
  o.summary += ", " + std::to_string(t) + " s";
  return o;
}

Outcome conjecture() {
  const std::uint64_t seeds[] = {0, 1, 2};
  return from(check_conjecture(RangeConfig{}, seeds));
}

Outcome ll_table() {
  const auto t0 = std::chrono::steady_clock::now();
  Check c = check_ll_table(RangeConfig{});
  const double t = seconds_since(t0);
  Outcome o = from(c);
  o.pass = o.pass && t < 1;
  o.summary += ", " + std::to_string(t) + " s";
  return o;
}

Outcome properties() {
  RangeConfig range;
  range.max_tau = 8;
  const Check inv = check_equivalence_invariance(range, 0, 20);
  const Check sb = check_standard_basis_properties(0);
  const std::string cmd = std::string(FSC_CLI_PATH) + " verify-all --seed 0 --json";
  int s1 = 0, s2 = 0;
  const std::string r1 = run_capture(cmd, s1);
  const std::string r2 = run_capture(cmd, s2);
  const bool same = !r1.empty() && r1 == r2 && s1 == s2;
  Outcome o;
  o.pass = inv.pass && sb.pass && same;
  o.summary = inv.summary + "; " + sb.summary + "; verify-all output " +
              (same ? "identical across runs (" + std::to_string(r1.size()) + " bytes)" : "differs");
  o.details["equivalence"] = to_json(inv);
  o.details["standard_basis"] = to_json(sb);
  o.details["determinism"] = same;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool details = argc > 1 && std::string(argv[1]) == "--details";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"tau calibration", tau_calibration},
      {"milnor equals tjurina", conjecture},
      {"ll index table", ll_table},
      {"discriminant free divisor", [] { return from(check_discriminant(0, 100)); }},
      {"bifurcation diagram", [] { return from(check_bifurcation(0, 100)); }},
      {"covering property", [] { return from(check_covering(0)); }},
      {"property suites", properties},
  };
  int failed = 0;
  Json all = Json::array();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.summary = std::string("error: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
              << ": " << o.summary << std::endl;
    all.push_back(o.details);
  }
  if (details) std::cout << all.dump(2) << "\n";
  return failed == 0 ? 0 : 1;
}
