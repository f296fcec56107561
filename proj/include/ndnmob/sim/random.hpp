#ifndef NDNMOB_SIM_RANDOM_HPP
#define NDNMOB_SIM_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace ndnmob {

/**
 * Named, independently seeded random stream.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the
 * standard. The distribution transforms below are written out by hand because
 * the <random> distributions are implementation-defined, and runs must be
 * reproducible across standard libraries.
 */
class RngStream
{
public:
  RngStream(std::string label, std::uint64_t seed);

  const std::string&
  label() const noexcept
  {
    return m_label;
  }

  std::uint64_t
  seed() const noexcept
  {
    return m_seed;
  }

  std::uint64_t
  nextU64()
  {
    return m_engine();
  }

  /// Uniform on [0, 1) with 53 random bits.
  double
  uniform01();

  /// Uniform on [lo, hi).
  double
  uniform(double lo, double hi)
  {
    return lo + (hi - lo) * uniform01();
  }

  /// Exponential with the given mean.
  double
  exponential(double mean);

private:
  std::string m_label;
  std::uint64_t m_seed;
  std::mt19937_64 m_engine;
};

/// SplitMix64 finalizer; a bijective 64-bit mixer.
std::uint64_t
mix64(std::uint64_t x) noexcept;

/// Seeds a stream from (root seed, label). Distinct labels give unrelated
/// streams; the same pair always gives the same sequence.
RngStream
deriveStream(std::uint64_t rootSeed, std::string_view label);

} // namespace ndnmob

#endif // NDNMOB_SIM_RANDOM_HPP
