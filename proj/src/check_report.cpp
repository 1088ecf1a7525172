#include "snb/check_report.hpp"

#include <sstream>

#include "snb/sampler.hpp"

namespace snb {

void CheckReport::record(Failure f, bool new_trial) {
  if (new_trial) ++failure_count;
  if (failures.size() < params.max_recorded_failures) failures.push_back(std::move(f));
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures)
    fails.push_back({{"relation", f.relation}, {"args", f.args}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return {{"suite", suite},
          {"spec", spec},
          {"seed", params.seed},
          {"params", {{"samples", params.samples}, {"max_degree", params.max_degree}}},
          {"trials", trials},
          {"failure_count", failure_count},
          {"asserted", asserted},
          {"passed", passed()},
          {"failures", fails},
          {"details", details}};
}

std::string render_text(const CheckReport& report) {
  std::ostringstream out;
  const char* verdict = report.passed() ? "PASS" : (report.asserted ? "FAIL" : "FOUND");
  out << report.suite << " [" << report.spec << "]: " << verdict << " (" << report.trials << " trials, "
      << report.failure_count << " failing)";
  if (!report.asserted) out << " report-only";
  out << '\n';
  for (const auto& f : report.failures) {
    out << "  " << f.relation << " args=(";
    for (std::size_t i = 0; i < f.args.size(); ++i) out << (i ? "; " : "") << f.args[i];
    out << ")\n    lhs = " << f.lhs << "\n    rhs = " << f.rhs << '\n';
  }
  if (!report.details.empty()) out << "  details: " << report.details.dump() << '\n';
  return out.str();
}

std::vector<std::vector<int>> parity_patterns(const GradedSpace& space, std::size_t nargs) {
  std::vector<std::vector<int>> out;
  if (space.fermionic_count() == 0) {
    out.emplace_back(nargs, 0);
    return out;
  }
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << nargs); ++code) {
    std::vector<int> p(nargs);
    for (std::size_t i = 0; i < nargs; ++i) p[i] = static_cast<int>((code >> i) & 1u);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::string> format_all(std::span<const Supernumber> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(format(v));
  return out;
}

CheckReport run_trials(std::string suite, std::string spec_name, const SpacePtr& space, std::size_t nargs,
                       const CheckParams& params, const TrialFn& fn) {
  CheckReport report;
  report.suite = std::move(suite);
  report.spec = std::move(spec_name);
  report.params = params;
  const auto patterns = parity_patterns(*space, nargs);
  std::vector<Supernumber> args;
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    for (std::size_t s = 0; s < params.samples; ++s) {
      Sampler sampler(derive_seed(params.seed, p * params.samples + s));
      args.clear();
      for (int bit : patterns[p]) args.push_back(sampler.homogeneous(space, bit, params.max_degree));
      ++report.trials;
      bool first = true;
      for (auto& eq : fn(args, patterns[p])) {
        if (eq.lhs == eq.rhs) continue;
        report.record({eq.relation, format_all(args), format(eq.lhs), format(eq.rhs)}, first);
        first = false;
      }
    }
  }
  return report;
}

}  // namespace snb
