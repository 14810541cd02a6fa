#include "elp/atom.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace elp {
namespace {

struct AtomTable {
  std::mutex mu;
  std::deque<std::string> names{""};  // id 0 reserved; deque keeps references stable
  std::unordered_map<std::string, std::uint32_t> index;
};

AtomTable& table() {
  static AtomTable t;
  return t;
}

}  // namespace

Atom Atom::intern(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.index.find(std::string(name));
  if (it != t.index.end()) return Atom(it->second);
  auto id = static_cast<std::uint32_t>(t.names.size());
  t.names.emplace_back(name);
  t.index.emplace(std::string(name), id);
  return Atom(id);
}

bool Atom::interned(std::string_view name) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.index.count(std::string(name)) != 0;
}

const std::string& Atom::name() const {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.names[id_];
}

bool Atom::operator<(const Atom& o) const {
  if (id_ == o.id_) return false;
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.names[id_] < t.names[o.id_];
}

}  // namespace elp
