#include "ndnmob/ndn/name.hpp"
#include "ndnmob/ndn/packet.hpp"

#include "doctest.h"

#include <sstream>

using namespace ndnmob;

TEST_CASE("Name parses and prints the slash form")
{
  Name n("/as3/producer/app/stream/seg_0421");
  REQUIRE(n.size() == 5);
  CHECK(n[0] == "as3");
  CHECK(n[4] == "seg_0421");
  CHECK(n.toUri() == "/as3/producer/app/stream/seg_0421");
  CHECK(Name("//a///b/").toUri() == "/a/b");
  CHECK(Name().toUri() == "/");

  std::ostringstream os;
  os << Name{"x", "y"};
  CHECK(os.str() == "/x/y");
}

TEST_CASE("Name prefix relation is component-wise")
{
  Name ab("/a/b");
  CHECK(ab.isPrefixOf(Name("/a/b/c")));
  CHECK(ab.isPrefixOf(ab));
  CHECK_FALSE(ab.isPrefixOf(Name("/a/bc")));
  CHECK_FALSE(ab.isPrefixOf(Name("/a")));
  CHECK(Name().isPrefixOf(ab));
  CHECK(Name("/a/b/c").getPrefix(2) == ab);
}

TEST_CASE("Name ordering and hashing")
{
  CHECK(Name("/a") < Name("/a/b"));
  CHECK(Name("/a/b") == Name{"a", "b"});
  CHECK(std::hash<Name>{}(Name("/a/b")) == std::hash<Name>{}(Name{"a", "b"}));
  CHECK(std::hash<Name>{}(Name("/ab")) != std::hash<Name>{}(Name("/a/b")));
}

TEST_CASE("packet helpers")
{
  Packet i = Interest{Name("/x/1"), 7, std::chrono::seconds(1)};
  Packet d = Data{Name("/x/1")};
  Packet n = Nack{Name("/x/1"), NackReason::Timeout, 7};
  CHECK(packetTag(i) == 'I');
  CHECK(packetTag(d) == 'D');
  CHECK(packetTag(n) == 'N');
  CHECK(packetSize(i) == 28);
  CHECK(packetSize(d) == 1024);
  CHECK(packetName(n) == Name("/x/1"));
  CHECK(toString(NackReason::NoRoute) == "NO_ROUTE");
  CHECK(toString(NackReason::Duplicate) == "DUPLICATE");
}
