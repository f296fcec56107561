#include "ndnmob/ndn/fib.hpp"

#include <algorithm>
#include <unordered_map>

namespace ndnmob {

void
FibEntry::addNextHop(FaceId face, std::uint32_t cost)
{
  removeNextHop(face);
  NextHop hop{face, cost};
  auto pos = std::upper_bound(m_nextHops.begin(), m_nextHops.end(), hop,
                              [] (const NextHop& a, const NextHop& b) {
                                return a.cost != b.cost ? a.cost < b.cost : a.face < b.face;
                              });
  m_nextHops.insert(pos, hop);
}

bool
FibEntry::removeNextHop(FaceId face)
{
  return std::erase_if(m_nextHops, [face] (const NextHop& nh) { return nh.face == face; }) > 0;
}

struct Fib::Node
{
  std::unordered_map<std::string, std::unique_ptr<Node>> children;
  std::optional<FibEntry> entry;
};

Fib::Fib()
  : m_root(std::make_unique<Node>())
{
}

Fib::~Fib() = default;
Fib::Fib(Fib&&) noexcept = default;
Fib& Fib::operator=(Fib&&) noexcept = default;

FibEntry&
Fib::insert(const Name& prefix)
{
  Node* node = m_root.get();
  for (const auto& c : prefix) {
    auto& child = node->children[c];
    if (!child) {
      child = std::make_unique<Node>();
    }
    node = child.get();
  }
  if (!node->entry) {
    node->entry.emplace(prefix);
    ++m_size;
  }
  return *node->entry;
}

void
Fib::addNextHop(const Name& prefix, FaceId face, std::uint32_t cost)
{
  insert(prefix).addNextHop(face, cost);
}

bool
Fib::erase(const Name& prefix)
{
  // walk down remembering the path so empty branches can be pruned
  std::vector<std::pair<Node*, const std::string*>> path;
  Node* node = m_root.get();
  for (const auto& c : prefix) {
    auto it = node->children.find(c);
    if (it == node->children.end()) {
      return false;
    }
    path.emplace_back(node, &c);
    node = it->second.get();
  }
  if (!node->entry) {
    return false;
  }
  node->entry.reset();
  --m_size;

  while (!path.empty()) {
    auto [parent, key] = path.back();
    Node* child = parent->children.at(*key).get();
    if (child->entry || !child->children.empty()) {
      break;
    }
    parent->children.erase(*key);
    path.pop_back();
  }
  return true;
}

const FibEntry*
Fib::findExactMatch(const Name& prefix) const
{
  const Node* node = m_root.get();
  for (const auto& c : prefix) {
    auto it = node->children.find(c);
    if (it == node->children.end()) {
      return nullptr;
    }
    node = it->second.get();
  }
  return node->entry ? &*node->entry : nullptr;
}

const FibEntry*
Fib::findLongestPrefixMatch(const Name& name) const
{
  const Node* node = m_root.get();
  const FibEntry* best = node->entry ? &*node->entry : nullptr;
  for (const auto& c : name) {
    auto it = node->children.find(c);
    if (it == node->children.end()) {
      break;
    }
    node = it->second.get();
    if (node->entry) {
      best = &*node->entry;
    }
  }
  return best;
}

} // namespace ndnmob
