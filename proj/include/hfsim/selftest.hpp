#ifndef HFSIM_SELFTEST_HPP
#define HFSIM_SELFTEST_HPP

#include <string>
#include <vector>

namespace hfsim {

struct SelfTestOptions {
  std::string filter;  // substring match on check names; empty = all
  // Fault-injection switch: negate stage-1 oracle estimates so the
  // reconstruction check must fail. Exists to prove the check has teeth.
  bool flip_stage1_sign = false;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Fast invariant suite behind `selftest`: model identities, calibration
/// and reconstruction oracles. Each check is independent and seeded.
std::vector<CheckResult> run_selftest(const SelfTestOptions& opts);

}  // namespace hfsim

#endif  // HFSIM_SELFTEST_HPP
