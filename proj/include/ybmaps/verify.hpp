#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybmaps/catalog.hpp"
#include "ybmaps/sampling.hpp"
#include "ybmaps/state.hpp"

namespace ybmaps {

enum class Check {
    Yb,
    Reversibility,
    Involutivity,
    Invariants,
    Trace,
    Refactor,
    Det,
    Poisson,
    Involution,
    Casimirs,
    Rank,
    Leaf,
};

const std::vector<Check>& all_checks();
std::string check_name(Check c);
Check parse_check(const std::string& name);  // throws UnknownName

// ---------------------------------------------------------------------------
// YB composition. Slots 1..3 of a triple carry (point, aux?) and parameter
// slots carry (a, b, c); Y^{ij} applies the pair map to slots i and j with
// their attached parameters, leaving the third slot untouched.
// ---------------------------------------------------------------------------
template <class S, class F>
TripleState<S> apply_embedding(F&& pair_map, const TripleState<S>& t, int i, int j) {
    auto point = [&](int k) -> const std::vector<S>& { return k == 1 ? t.x : k == 2 ? t.y : t.z; };
    auto aux = [&](int k) { return k == 1 ? t.X : k == 2 ? t.Y : t.Z; };
    auto param = [&](int k) { return k == 1 ? t.a : k == 2 ? t.b : t.c; };

    PairState<S> p;
    p.x = point(i);
    p.y = point(j);
    p.X = aux(i);
    p.Y = aux(j);
    p.a = param(i);
    p.b = param(j);
    const PairState<S> q = pair_map(p);

    TripleState<S> r = t;
    auto store = [&](int k, const std::vector<S>& w, const std::optional<S>& ax) {
        (k == 1 ? r.x : k == 2 ? r.y : r.z) = w;
        (k == 1 ? r.X : k == 2 ? r.Y : r.Z) = ax;
    };
    store(i, q.x, q.X);
    store(j, q.y, q.Y);
    return r;
}

template <class S, class F>
std::pair<TripleState<S>, TripleState<S>> yb_both_sides(F&& pair_map, const TripleState<S>& t) {
    // left: Y12 o Y13 o Y23, right: Y23 o Y13 o Y12 (rightmost acts first)
    TripleState<S> left = apply_embedding(pair_map, t, 2, 3);
    left = apply_embedding(pair_map, left, 1, 3);
    left = apply_embedding(pair_map, left, 1, 2);
    TripleState<S> right = apply_embedding(pair_map, t, 1, 2);
    right = apply_embedding(pair_map, right, 1, 3);
    right = apply_embedding(pair_map, right, 2, 3);
    return {left, right};
}

// ---------------------------------------------------------------------------
// Pointwise checks (exact scalars). All throw SingularLocus when the input or
// an intermediate image hits a guard locus; callers resample.
// ---------------------------------------------------------------------------
bool check_yb_equation(const MapDescriptor& map, const TripleState<Rational>& triple);
bool check_reversibility(const MapDescriptor& map, const PairState<Rational>& state);
bool is_involution_point(const MapDescriptor& map, const PairState<Rational>& state);
bool check_invariants(const MapDescriptor& map, const PairState<Rational>& state);
bool check_poisson_invariance(const MapDescriptor& map, const PairState<Rational>& state);
bool check_involution_of_invariants(const MapDescriptor& map, const PairState<Rational>& state);
bool check_casimirs(const MapDescriptor& map, const PairState<Rational>& state);
int check_rank(const MapDescriptor& map, const PairState<Rational>& state);

/// Exact Jacobian of the flattened map at the state via dual numbers.
Mat<Rational> jacobian(const MapDescriptor& map, const PairState<Rational>& state);

// ---------------------------------------------------------------------------
// Suite runner.
// ---------------------------------------------------------------------------
struct CheckReport {
    std::string map;
    std::string check;
    int trials = 0;
    int failures = 0;
    std::optional<std::string> first_counterexample;
    std::uint64_t seed = 0;
    std::string status;  // "ok" | "failed" | "recorded" | "skipped"
    std::string note;    // skip reason, witness trial, measured outcome, ...

    bool counts_as_failure() const { return status == "failed"; }
};

struct SuiteOptions {
    int trials = 100;
    std::uint64_t seed = 7;
    int n = 2;             // block length for vector maps
    bool parallel = true;  // OpenMP batch; the serial path is the reference
};

CheckReport run_check(const MapDescriptor& map, Check check, const SuiteOptions& opts);
std::vector<CheckReport> run_suite(const std::string& map, const std::vector<Check>& checks,
                                   const SuiteOptions& opts);

/// Runs the refactorisation identity under both vector NLS sign conventions
/// and describes the one that passes (the shipped convention).
std::string resolve_vector_nls_convention(std::uint64_t seed, int trials);

/// Tests both leaf-parameter pairings for the given 4-dim/6-dim pair and
/// describes the passing one.
std::string resolve_leaf_pairing(const std::string& map4_name, std::uint64_t seed, int trials);

}  // namespace ybmaps
