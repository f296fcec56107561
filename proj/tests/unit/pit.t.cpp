#include "ndnmob/ndn/dead-nonce-list.hpp"
#include "ndnmob/ndn/pit.hpp"

#include "doctest.h"

using namespace ndnmob;
using namespace std::chrono_literals;

TEST_CASE("in-records are keyed by face and refreshed")
{
  PitEntry e(Name("/x/2"));
  e.insertInRecord(1, 10, atMicros(0), 1s);
  e.insertInRecord(2, 11, atMicros(100), 1s);
  e.insertInRecord(1, 12, atMicros(500), 2s);
  REQUIRE(e.inRecords().size() == 2);
  CHECK(e.findInRecord(1)->nonce == 12);
  CHECK(toMicros(e.lifetimeEnd()) == 2'000'500);
}

TEST_CASE("out-records track nacks and tried faces")
{
  PitEntry e(Name("/x"));
  e.insertOutRecord(4, 1, atMicros(0));
  e.insertOutRecord(5, 1, atMicros(0));
  CHECK(e.wasTried(4));
  CHECK_FALSE(e.wasTried(6));
  CHECK_FALSE(e.allOutRecordsNacked());
  e.findOutRecord(4)->nacked = true;
  e.findOutRecord(5)->nacked = true;
  CHECK(e.allOutRecordsNacked());
  e.insertOutRecord(5, 2, atMicros(10));
  CHECK_FALSE(e.findOutRecord(5)->nacked);
}

TEST_CASE("nonce set")
{
  PitEntry e(Name("/x"));
  e.addNonce(3);
  e.addNonce(3);
  CHECK(e.hasNonce(3));
  CHECK(e.nonces().size() == 1);
}

TEST_CASE("pit capacity bound")
{
  Pit pit(2);
  CHECK(pit.insert(Name("/a")) != nullptr);
  CHECK(pit.insert(Name("/b")) != nullptr);
  CHECK(pit.insert(Name("/a")) == pit.find(Name("/a")));
  CHECK(pit.insert(Name("/c")) == nullptr);
  pit.erase(Name("/a"));
  CHECK(pit.insert(Name("/c")) != nullptr);
  CHECK(Pit().capacity() == 0);
}

TEST_CASE("dead nonces are forgotten after the grace period")
{
  DeadNonceList dnl(1s);
  dnl.add(Name("/x"), 5, atMicros(0));
  CHECK(dnl.has(Name("/x"), 5, atMicros(999'999)));
  CHECK_FALSE(dnl.has(Name("/y"), 5, atMicros(10)));
  CHECK_FALSE(dnl.has(Name("/x"), 6, atMicros(10)));
  CHECK_FALSE(dnl.has(Name("/x"), 5, atMicros(1'000'000)));
  CHECK(dnl.size() == 0);
}
