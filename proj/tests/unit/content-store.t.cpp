#include "ndnmob/check/reference-models.hpp"
#include "ndnmob/ndn/content-store.hpp"
#include "ndnmob/sim/random.hpp"

#include "doctest.h"

using namespace ndnmob;

TEST_CASE("insert then lookup hits")
{
  ContentStore cs(10);
  cs.insert(Data{Name("/x/1")});
  const Data* d = cs.lookup(Name("/x/1"));
  REQUIRE(d != nullptr);
  CHECK(d->name == Name("/x/1"));
  CHECK(cs.nHits() == 1);
}

TEST_CASE("least recently used is evicted")
{
  ContentStore cs(2);
  cs.insert(Data{Name("/a")});
  cs.insert(Data{Name("/b")});
  CHECK(cs.lookup(Name("/a")) != nullptr);
  cs.insert(Data{Name("/c")});
  CHECK(cs.contains(Name("/a")));
  CHECK_FALSE(cs.contains(Name("/b")));
  CHECK(cs.contains(Name("/c")));
}

TEST_CASE("lookup is exact match only")
{
  ContentStore cs(10);
  cs.insert(Data{Name("/x/1")});
  CHECK(cs.lookup(Name("/x")) == nullptr);
  CHECK(cs.nMisses() == 1);
}

TEST_CASE("zero capacity caches nothing and shrinking evicts")
{
  ContentStore none(0);
  none.insert(Data{Name("/a")});
  CHECK(none.size() == 0);

  ContentStore cs(3);
  for (auto s : {"/a", "/b", "/c"}) {
    cs.insert(Data{Name(s)});
  }
  cs.setCapacity(1);
  CHECK(cs.namesByRecency() == std::vector<Name>{Name("/c")});
}

TEST_CASE("content equals the reference LRU model over random sequences")
{
  auto rng = deriveStream(99, "cs-property");
  for (int round = 0; round < 100; ++round) {
    std::size_t cap = rng.nextU64() % 8;
    ContentStore cs(cap);
    check::ReferenceLru ref(cap);
    for (int op = 0; op < 100; ++op) {
      Name n{"k" + std::to_string(rng.nextU64() % 12)};
      if (rng.uniform01() < 0.5) {
        cs.insert(Data{n});
        ref.insert(n);
      }
      else {
        REQUIRE((cs.lookup(n) != nullptr) == ref.lookup(n));
      }
      REQUIRE(cs.size() <= cap);
      REQUIRE(cs.namesByRecency() == ref.contents());
    }
  }
}
