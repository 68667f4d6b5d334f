#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>

namespace semifield {

// Deterministic generator. All randomized checks receive an explicit seed and
// draw through nextU64/below so transcripts are reproducible bit-for-bit.
using Rng = std::mt19937_64;

inline std::uint64_t nextU64(Rng& rng) { return rng(); }

// Uniform-ish draw in [0, n); bias is irrelevant for sampling purposes and
// avoiding std distributions keeps the stream implementation-independent.
inline std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }

inline std::int64_t intIn(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Opaque instance-scoped value. The payload is the instance's exact
// representation; the key is a canonical byte encoding, injective on
// equivalence classes, used for hashing and deterministic ordering.
struct Element {
  std::string instance;
  std::shared_ptr<const void> payload;
  std::string key;
};

template <class T>
const T& payloadAs(const Element& e) {
  return *static_cast<const T*>(e.payload.get());
}

template <class T>
Element makeElement(std::string instance, T value, std::string key) {
  return Element{std::move(instance),
                 std::shared_ptr<const void>(std::make_shared<const T>(std::move(value))),
                 std::move(key)};
}

}  // namespace semifield
