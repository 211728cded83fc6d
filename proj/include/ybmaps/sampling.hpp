#pragma once

#include <cstdint>
#include <functional>

#include "ybmaps/catalog.hpp"
#include "ybmaps/state.hpp"

namespace ybmaps {

/// Deterministic splittable generator; the stream for trial t of a run is a
/// pure function of (seed, t), so reports are identical across thread counts.
class TrialRng {
  public:
    TrialRng(std::uint64_t seed, std::uint64_t index)
        : s_(mix(seed * 0x9E3779B97F4A7C15ULL + index + 0x94D049BB133111EBULL)) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi]; the tiny modulo bias is irrelevant here.
    long draw(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }

    /// Rational of bounded height: numerator in [-9,9], denominator in [1,9].
    Rational rational() { return Rational(draw(-9, 9), draw(1, 9)); }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDULL;
        z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ULL;
        return z ^ (z >> 33);
    }
    std::uint64_t s_;
};

struct SampleOptions {
    int n = 2;                    // block length for vector maps
    bool distinct_params = false; // reject a == b (non-involutivity trials)
    int max_rejects = 10000;
};

/// Deterministic guarded state: coordinates of bounded height outside every
/// declared guard locus; identical for identical (seed, index).
PairState<Rational> sample_state(const MapDescriptor& map, std::uint64_t seed, std::uint64_t index,
                                 const SampleOptions& opts = {});

/// As sample_state but driven by an already-positioned generator, so a caller
/// can keep drawing replacements from the same per-trial stream.
PairState<Rational> sample_state(const MapDescriptor& map, TrialRng& rng,
                                 const SampleOptions& opts = {});

/// Guarded triple; `valid` (when given) may reject a candidate whose
/// composition chain hits an intermediate guard locus, triggering a resample.
TripleState<Rational> sample_triple(const MapDescriptor& map, std::uint64_t seed,
                                    std::uint64_t index, const SampleOptions& opts = {},
                                    const std::function<bool(const TripleState<Rational>&)>&
                                        valid = {});

}  // namespace ybmaps
