#include "ybmaps/catalog.hpp"

#include "ybmaps/errors.hpp"
#include "ybmaps/maps.hpp"

namespace ybmaps {

namespace {

template <class M, class S>
void bind_fns(MapFns<S>& f) {
    f.apply = [](const PairState<S>& s) { return M::apply(s); };
    f.guards = [](const PairState<S>& s) { return M::guards(s); };
    f.invariants = [](const PairState<S>& s) { return M::invariants(s); };
}

template <class M>
MapDescriptor base_descriptor() {
    MapDescriptor d;
    d.name = M::name;
    d.guard_names = M::guard_names();
    d.invariant_names = M::invariant_names();
    bind_fns<M>(d.exact);
    bind_fns<M>(d.dual);
    bind_fns<M>(d.numeric);
    return d;
}

}  // namespace

void Catalog::add(MapDescriptor d) {
    order_.push_back(d.name);
    by_name_.emplace(d.name, std::move(d));
}

const MapDescriptor& Catalog::get(const std::string& name) const {
    const MapDescriptor* d = find(name);
    if (!d) throw UnknownName("map", name);
    return *d;
}

const MapDescriptor* Catalog::find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &it->second;
}

const Catalog& Catalog::instance() {
    static const Catalog catalog = [] {
        Catalog c;

        {
            auto d = base_descriptor<maps::Adler>();
            d.half_len = 1;
            d.param_arity = 2;
            d.expected_involutive = true;
            d.lax_name = "adler";
            c.add(std::move(d));
        }
        {
            auto d = base_descriptor<maps::Nls6>();
            d.has_aux = true;
            d.lax_name = "nls6";
            c.add(std::move(d));
        }
        {
            auto d = base_descriptor<maps::AdlerYamilov>();
            d.param_arity = 2;
            d.reversible_asserted = true;
            d.lax_name = "adler-yamilov";
            d.poisson = &maps::AdlerYamilov::poisson;
            d.poisson_rank = maps::AdlerYamilov::poisson_rank;
            c.add(std::move(d));
        }
        {
            auto d = base_descriptor<maps::Dnls6Orig>();
            d.has_aux = true;
            d.lax_name = "dnls6-orig";
            c.add(std::move(d));
        }
        {
            auto d = base_descriptor<maps::Dnls6Reparam>();
            d.has_aux = true;
            d.lax_name = "dnls6-reparam";
            c.add(std::move(d));
        }
        {
            auto d = base_descriptor<maps::Dnls4>();
            d.param_arity = 2;
            d.reversible_asserted = true;
            d.lax_name = "dnls4";
            d.poisson = &maps::Dnls4::poisson;
            d.poisson_rank = maps::Dnls4::poisson_rank;
            d.casimir_names = maps::Dnls4::casimir_names();
            d.exact.casimirs = [](const PairState<Rational>& s) { return maps::Dnls4::casimirs(s); };
            d.dual.casimirs = [](const PairState<DualRational>& s) { return maps::Dnls4::casimirs(s); };
            d.numeric.casimirs = [](const PairState<Real>& s) { return maps::Dnls4::casimirs(s); };
            c.add(std::move(d));
        }
        {
            auto d = base_descriptor<maps::Dihedral6>();
            d.has_aux = true;
            d.param_arity = 2;
            d.lax_name = "dihedral6";
            c.add(std::move(d));
        }
        {
            auto d = base_descriptor<maps::DihedralLinear>();
            d.param_arity = 2;
            d.reversible_asserted = true;
            c.add(std::move(d));
        }
        {
            auto d = base_descriptor<maps::VectorNls>();
            d.param_arity = 2;
            d.vector_blocks = true;
            d.half_len = 4;  // default N = 2
            d.reversible_asserted = true;
            d.lax_name = "vector-nls";
            c.add(std::move(d));
        }
        {
            auto d = base_descriptor<maps::VectorZ2>();
            d.param_arity = 2;
            d.vector_blocks = true;
            d.half_len = 4;
            d.reversible_asserted = true;
            d.lax_name = "vector-z2";
            c.add(std::move(d));
        }
        {
            auto d = base_descriptor<maps::Permutation>();
            d.expected_involutive = true;
            d.reversible_asserted = true;
            d.poisson = &maps::Permutation::poisson_canonical;
            d.poisson_rank = 4;
            c.add(std::move(d));
        }

        return c;
    }();
    return catalog;
}

PairState<Rational> vector_nls_with_convention(const PairState<Rational>& s, bool scalar_aligned) {
    return maps::VectorNls::apply_with_convention(s, scalar_aligned);
}

Rational eval_invariant(const MapDescriptor& map, const std::string& invariant,
                        const PairState<Rational>& state) {
    for (std::size_t i = 0; i < map.invariant_names.size(); ++i)
        if (map.invariant_names[i] == invariant) return map.exact.invariants(state)[i];
    for (std::size_t i = 0; i < map.casimir_names.size(); ++i)
        if (map.casimir_names[i] == invariant) return map.exact.casimirs(state)[i];
    throw UnknownName("invariant", invariant);
}

}  // namespace ybmaps
