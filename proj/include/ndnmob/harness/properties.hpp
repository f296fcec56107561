#ifndef NDNMOB_HARNESS_PROPERTIES_HPP
#define NDNMOB_HARNESS_PROPERTIES_HPP

#include <cstdint>
#include <string>

namespace ndnmob {

/// Outcome of one randomized (or exhaustive) property check.
struct PropertyOutcome
{
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string firstFailure;

  bool
  passed() const noexcept
  {
    return cases > 0 && failures == 0;
  }
};

/// FIB longest-prefix match against a linear scan, one fresh FIB per case.
PropertyOutcome
checkLpmProperty(std::uint64_t seed, std::size_t cases = 10'000);

/// N Interests for one name from N faces leave the router once, and the
/// returning Data reaches each of the N faces once.
PropertyOutcome
checkPitAggregationProperty(std::uint64_t seed, std::size_t cases = 1'000);

/// Content store against the reference LRU over random operation sequences.
PropertyOutcome
checkLruProperty(std::uint64_t seed, std::size_t sequences = 10'000);

/// On random DAG topologies, no link ever carries more Data for a name than
/// Interests for that name went the other way, and every request is served.
PropertyOutcome
checkConservationProperty(std::uint64_t seed, std::size_t topologies = 300);

/// Frame-level decode rule against the dependency-closure model on every
/// loss pattern of the 15 frames of a GOP.
PropertyOutcome
checkGopExhaustive();

} // namespace ndnmob

#endif // NDNMOB_HARNESS_PROPERTIES_HPP
