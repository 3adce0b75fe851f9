#pragma once

#include <cstdint>
#include <string>

#include "cqs/schur.hpp"

namespace cqs {

// On-disk copy of a Schur algebra's product memo. Each file starts with a
// header naming the algebra (n, r, field, q, Q, poset hash, flavor, format
// version) and a checksum of the body. A missing or mismatched file means
// recompute; a checksum failure is reported as corruption and the file is
// rewritten.
struct CacheLoad {
    enum class Status { Missing, Loaded, Mismatch, Corrupt };
    Status status = Status::Missing;
    std::size_t records = 0;
    std::string detail;
};

struct CacheStat {
    std::size_t files = 0, bytes = 0;
};

std::uint64_t fnv1a64(const std::string& s);

class ComposeCache {
public:
    explicit ComposeCache(std::string dir) : dir_(std::move(dir)) {}
    bool enabled() const { return !dir_.empty(); }

    std::string path_for(const std::string& header) const;

    template <class Alg>
    CacheLoad load(SchurAlgebra<Alg>& S, const std::string& header) const;
    // writes only when the memo holds more records than the file
    template <class Alg>
    void save(const SchurAlgebra<Alg>& S, const std::string& header, std::size_t loaded) const;

    CacheStat stat() const;
    std::size_t clear() const;

private:
    std::string dir_;
};

}  // namespace cqs
