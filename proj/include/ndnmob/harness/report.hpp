#ifndef NDNMOB_HARNESS_REPORT_HPP
#define NDNMOB_HARNESS_REPORT_HPP

#include "ndnmob/harness/handover-study.hpp"
#include "ndnmob/harness/properties.hpp"
#include "ndnmob/metrics/metrics.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ndnmob {

/// One measured quantity compared against its band.
struct CheckResult
{
  std::string label;
  std::string measured;
  std::string band;
  bool pass = false;
};

struct CriterionResult
{
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;

  bool
  passed() const noexcept;
};

struct PropertyEvidence
{
  std::vector<PropertyOutcome> outcomes;
  double seconds = 0;
};

struct HandoverEvidence
{
  std::vector<SpeedHandovers> speeds;
  double seconds = 0;
};

struct DeterminismEvidence
{
  /// What was compared, e.g. "sampled 57 runs with 1 and 4 workers".
  std::string how;
  bool identical = false;
  /// Wall time of the full suite.
  double suiteSeconds = 0;
  double budgetSeconds = 1800;
};

struct ReportInputs
{
  /// Every row of the suite, rescored video rows included.
  const std::vector<RunMetrics>* runs = nullptr;
  std::optional<PropertyEvidence> properties;
  std::optional<HandoverEvidence> handovers;
  std::optional<DeterminismEvidence> determinism;
};

/// Evaluates criteria 1 to 8. Missing evidence fails the criterion it feeds.
std::vector<CriterionResult>
evaluateCriteria(const ReportInputs& in);

bool
allPassed(const std::vector<CriterionResult>& results);

/// One "criterion N PASS|FAIL title" line per criterion, each followed by
/// its indented checks.
void
writeReport(std::ostream& os, const std::vector<CriterionResult>& results);

/// Runs every property check at full size and times it.
PropertyEvidence
collectPropertyEvidence(std::uint64_t seed);

/// Runs the mobility-only study and times it.
HandoverEvidence
collectHandoverEvidence(const HandoverStudyParams& p);

/// Empirical CDF rows of the single-AS interarrival series, one block per speed.
std::vector<SpeedCdf>
handoverCdfs(const HandoverEvidence& ev);

} // namespace ndnmob

#endif // NDNMOB_HARNESS_REPORT_HPP
