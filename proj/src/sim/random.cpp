#include "ndnmob/sim/random.hpp"

#include <cmath>

namespace ndnmob {

std::uint64_t
mix64(std::uint64_t x) noexcept
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

std::uint64_t
fnv1a(std::string_view s) noexcept
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

} // namespace

RngStream::RngStream(std::string label, std::uint64_t seed)
  : m_label(std::move(label))
  , m_seed(seed)
  , m_engine(seed)
{
}

double
RngStream::uniform01()
{
  return static_cast<double>(m_engine() >> 11) * 0x1.0p-53;
}

double
RngStream::exponential(double mean)
{
  return -mean * std::log1p(-uniform01());
}

RngStream
deriveStream(std::uint64_t rootSeed, std::string_view label)
{
  return RngStream(std::string(label), mix64(mix64(rootSeed) ^ fnv1a(label)));
}

} // namespace ndnmob
