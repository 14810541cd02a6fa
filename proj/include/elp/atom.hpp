#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace elp {

/// Interned ground atom. Equality is id comparison; ordering is
/// lexicographic on the name so canonical output is alphabetical.
class Atom {
 public:
  Atom() = default;  // the reserved empty atom; only valid as a placeholder

  static Atom intern(std::string_view name);
  static bool interned(std::string_view name);

  const std::string& name() const;
  std::uint32_t id() const { return id_; }

  bool operator==(const Atom& o) const { return id_ == o.id_; }
  bool operator!=(const Atom& o) const { return id_ != o.id_; }
  bool operator<(const Atom& o) const;
  bool operator<=(const Atom& o) const { return *this == o || *this < o; }

 private:
  explicit Atom(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

}  // namespace elp
