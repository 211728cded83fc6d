#include "ybmaps/sampling.hpp"

#include "ybmaps/errors.hpp"

namespace ybmaps {

namespace {

std::vector<Rational> sample_point(TrialRng& rng, int len) {
    std::vector<Rational> w;
    w.reserve(len);
    for (int i = 0; i < len; ++i) w.push_back(rng.rational());
    return w;
}

bool guards_ok(const MapDescriptor& map, const PairState<Rational>& s) {
    for (const Rational& g : map.exact.guards(s))
        if (g.is_zero()) return false;
    return true;
}

int half_len(const MapDescriptor& map, const SampleOptions& opts) {
    return map.vector_blocks ? 2 * opts.n : map.half_len;
}

}  // namespace

PairState<Rational> sample_state(const MapDescriptor& map, TrialRng& rng,
                                 const SampleOptions& opts) {
    const int len = half_len(map, opts);
    for (int attempt = 0; attempt < opts.max_rejects; ++attempt) {
        PairState<Rational> s;
        s.x = sample_point(rng, len);
        s.y = sample_point(rng, len);
        if (map.has_aux) {
            s.X = rng.rational();
            s.Y = rng.rational();
        }
        if (map.param_arity == 2) {
            s.a = rng.rational();
            s.b = rng.rational();
            if (opts.distinct_params && *s.a == *s.b) continue;
        }
        if (guards_ok(map, s)) return s;
    }
    throw SamplingExhausted("no guarded state for " + map.name + " within " +
                            std::to_string(opts.max_rejects) + " draws");
}

PairState<Rational> sample_state(const MapDescriptor& map, std::uint64_t seed, std::uint64_t index,
                                 const SampleOptions& opts) {
    TrialRng rng(seed, index);
    return sample_state(map, rng, opts);
}

TripleState<Rational> sample_triple(const MapDescriptor& map, std::uint64_t seed,
                                    std::uint64_t index, const SampleOptions& opts,
                                    const std::function<bool(const TripleState<Rational>&)>& valid) {
    TrialRng rng(seed, index);
    const int len = half_len(map, opts);
    for (int attempt = 0; attempt < opts.max_rejects; ++attempt) {
        TripleState<Rational> t;
        t.x = sample_point(rng, len);
        t.y = sample_point(rng, len);
        t.z = sample_point(rng, len);
        if (map.has_aux) {
            t.X = rng.rational();
            t.Y = rng.rational();
            t.Z = rng.rational();
        }
        if (map.param_arity == 2) {
            t.a = rng.rational();
            t.b = rng.rational();
            t.c = rng.rational();
            if (opts.distinct_params && (*t.a == *t.b || *t.b == *t.c || *t.a == *t.c)) continue;
        }
        if (valid && !valid(t)) continue;
        return t;
    }
    throw SamplingExhausted("no guarded triple for " + map.name + " within " +
                            std::to_string(opts.max_rejects) + " draws");
}

}  // namespace ybmaps
