#pragma once
// A norm on the coefficient space together with what is known analytically
// about the coordinate basis in that norm.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "core.hpp"
#include "kinds.hpp"

namespace greedybasis {

struct SpaceMetadata {
  /// ||P_A f|| <= ||f|| for all A, f (lattice-type norm).
  bool one_unconditional = false;
  /// Exact values of constants where they are known in closed form.
  std::map<ConstantKind, double> analytic;
  /// Declared bounds c1 <= ||e_n|| <= c2.
  double c1 = 0.0;
  double c2 = 0.0;
  /// ||e_n^*|| when known in closed form.
  std::optional<std::vector<double>> dual_norms;

  std::optional<double> constant(ConstantKind k) const {
    auto it = analytic.find(k);
    if (it == analytic.end()) return std::nullopt;
    return it->second;
  }
};

using NormFunction = std::function<double(std::span<const double>)>;

/// Immutable, cheaply copyable handle; safe to share across threads.
class Space {
 public:
  Space(std::size_t dim, NormFunction norm, SpaceMetadata meta, nlohmann::json descriptor)
      : impl_(std::make_shared<const Impl>(Impl{dim, std::move(norm), std::move(meta), std::move(descriptor)})) {}

  std::size_t dim() const { return impl_->dim; }
  const SpaceMetadata& metadata() const { return impl_->meta; }
  const nlohmann::json& descriptor() const { return impl_->descriptor; }

  double norm(const CoeffVector& v) const {
    if (v.dim() != dim()) throw DimensionMismatch(dim(), v.dim());
    return impl_->norm(v.values());
  }
  /// Hot-path evaluation; the caller guarantees v.size() == dim().
  double norm(std::span<const double> v) const { return impl_->norm(v); }

  /// Same space with the norm multiplied by t > 0. Metadata constants are
  /// ratios and carry over; c1, c2 and dual norms rescale.
  Space scaled(double t) const {
    if (!(t > 0.0)) throw Error("scale factor must be positive");
    SpaceMetadata meta = metadata();
    meta.c1 *= t;
    meta.c2 *= t;
    if (meta.dual_norms)
      for (double& d : *meta.dual_norms) d /= t;
    nlohmann::json desc = descriptor();
    desc["scale"] = t;
    NormFunction inner = impl_->norm;
    return Space(dim(), [inner, t](std::span<const double> v) { return t * inner(v); }, std::move(meta),
                 std::move(desc));
  }

 private:
  struct Impl {
    std::size_t dim;
    NormFunction norm;
    SpaceMetadata meta;
    nlohmann::json descriptor;
  };
  std::shared_ptr<const Impl> impl_;
};

inline double norm(const Space& space, const CoeffVector& v) { return space.norm(v); }

}  // namespace greedybasis
