#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace multilat {

struct CheckOutcome {
  enum class Status { Pass, Fail, Discrepancy };
  std::string id;
  Status status = Status::Fail;
  std::string detail;
  double millis = 0;
};

struct RunReport {
  std::vector<CheckOutcome> outcomes;
  bool ok() const {
    for (const auto& o : outcomes)
      if (o.status == CheckOutcome::Status::Fail) return false;
    return true;
  }
};

struct ReproduceOptions {
  std::string only;        // run a single check by id when nonempty
  std::uint64_t seed = 0;  // drives every randomized sweep
  int jobs = 1;
};

/// The full desk-scale result suite. Check ids:
///   rml7-verify, noprml, ml6-implication, minimality, fig2-ml6, containsm6,
///   ordinal-sums, function-space, concept-bounds, concept-algebra, corollary,
///   crisp-oracle, search-soundness.
/// Documented discrepancies report status Discrepancy and do not fail the run.
RunReport run_reproduce(const ReproduceOptions& opt = {});

nlohmann::json report_to_json(const RunReport& report, const ReproduceOptions& opt);
std::string report_table(const RunReport& report);

}  // namespace multilat
