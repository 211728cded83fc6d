#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ybmaps/dual.hpp"
#include "ybmaps/matrix.hpp"
#include "ybmaps/state.hpp"

namespace ybmaps {

template <class S>
struct MapFns {
    std::function<PairState<S>(const PairState<S>&)> apply;
    std::function<std::vector<S>(const PairState<S>&)> guards;
    std::function<std::vector<S>(const PairState<S>&)> invariants;
    std::function<std::vector<S>(const PairState<S>&)> casimirs;  // null if none declared
};

/// Everything the verification engine needs to know about one registered map.
/// Immutable after registration; evaluation is pure.
struct MapDescriptor {
    std::string name;
    int half_len = 2;              // scalars per half (2N for vector maps at the default N)
    bool has_aux = false;          // six-dimensional maps carry (X, Y)
    int param_arity = 0;           // 0 or 2
    bool vector_blocks = false;    // halves are (x1 | x2) blocks of runtime length N
    bool expected_involutive = false;
    bool reversible_asserted = false;  // false: reversibility is measured and recorded only
    std::vector<std::string> guard_names;
    std::vector<std::string> invariant_names;
    std::vector<std::string> casimir_names;
    std::string lax_name;          // empty when no Lax matrix is registered

    MapFns<Rational> exact;
    MapFns<DualRational> dual;
    MapFns<Real> numeric;

    std::function<Mat<Rational>(const PairState<Rational>&)> poisson;  // null if none
    int poisson_rank = 0;

    int dim() const { return 2 * half_len + (has_aux ? 2 : 0); }
    bool has_poisson() const { return static_cast<bool>(poisson); }
    bool has_casimirs() const { return !casimir_names.empty(); }
};

class Catalog {
  public:
    Catalog() = default;

    /// The built-in registry with every map of the catalog, built once.
    static const Catalog& instance();

    void add(MapDescriptor d);
    const MapDescriptor& get(const std::string& name) const;   // throws UnknownName
    const MapDescriptor* find(const std::string& name) const;  // nullptr if absent
    const std::vector<std::string>& names() const { return order_; }
    bool empty() const { return order_.empty(); }

  private:
    std::vector<std::string> order_;
    std::map<std::string, MapDescriptor> by_name_;
};

/// Vector NLS evaluated under an explicit sign convention; used by the
/// convention-resolution check. scalar_aligned = true is the shipped map.
PairState<Rational> vector_nls_with_convention(const PairState<Rational>& s, bool scalar_aligned);

/// Value of one named invariant at a state. Throws UnknownName for an
/// invariant the map does not declare.
Rational eval_invariant(const MapDescriptor& map, const std::string& invariant,
                        const PairState<Rational>& state);

}  // namespace ybmaps
