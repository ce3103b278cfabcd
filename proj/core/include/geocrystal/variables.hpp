#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace geocrystal {

/// Index into the process-wide variable registry. Lower indices are more
/// significant in the monomial order.
struct VarId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(VarId, VarId) = default;
};

/// Append-only name <-> VarId table. x0..x5, y0..y5, c, d, t are registered
/// first, in that order, so their indices are stable.
class VarRegistry {
 public:
  static VarId intern(std::string_view name);
  static std::optional<VarId> find(std::string_view name);
  static const std::string& name(VarId id);
  static std::size_t size();
};

namespace vars {
VarId x(int k);
VarId y(int k);
VarId c();
VarId d();
VarId t();
}  // namespace vars

}  // namespace geocrystal

template <>
struct std::hash<geocrystal::VarId> {
  std::size_t operator()(geocrystal::VarId v) const noexcept { return v.index; }
};
