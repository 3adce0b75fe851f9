#include "cqs/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace cqs {

namespace fs = std::filesystem;

namespace {

constexpr const char* kMagic = "cqs-cache 1";

std::string hex64(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

template <class K>
std::string body_of(const std::vector<std::tuple<std::uint32_t, std::uint32_t, SparseVec<K>>>& recs) {
    std::ostringstream os;
    for (const auto& [i, j, v] : recs) {
        os << i << ' ' << j;
        for (const auto& [k, c] : v) os << ' ' << k << ':' << c.str();
        os << '\n';
    }
    return os.str();
}

}  // namespace

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string ComposeCache::path_for(const std::string& header) const {
    return (fs::path(dir_) / (hex64(fnv1a64(header)) + ".cqs")).string();
}

template <class Alg>
CacheLoad ComposeCache::load(SchurAlgebra<Alg>& S, const std::string& header) const {
    using K = typename SchurAlgebra<Alg>::K;
    CacheLoad res;
    if (!enabled()) return res;
    std::ifstream f(path_for(header), std::ios::binary);
    if (!f) return res;
    std::string magic, head, sum;
    std::getline(f, magic);
    std::getline(f, head);
    std::getline(f, sum);
    if (magic != kMagic || head != header) {
        res.status = CacheLoad::Status::Mismatch;
        res.detail = "header does not match this configuration";
        return res;
    }
    std::stringstream rest;
    rest << f.rdbuf();
    const std::string body = rest.str();
    if (sum != "checksum " + hex64(fnv1a64(body))) {
        res.status = CacheLoad::Status::Corrupt;
        res.detail = "checksum mismatch in " + path_for(header);
        return res;
    }
    std::vector<std::tuple<std::uint32_t, std::uint32_t, SparseVec<K>>> recs;
    try {
        std::istringstream in(body);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::uint32_t i, j;
            if (!(ls >> i >> j)) throw std::runtime_error("bad record");
            SparseVec<K> v;
            std::string tok;
            while (ls >> tok) {
                auto colon = tok.find(':');
                if (colon == std::string::npos) throw std::runtime_error("bad entry");
                v.emplace_back(static_cast<std::uint32_t>(std::stoul(tok.substr(0, colon))),
                               K::parse(tok.substr(colon + 1)));
            }
            if (i >= S.dim() || j >= S.dim()) throw std::runtime_error("index out of range");
            recs.emplace_back(i, j, std::move(v));
        }
    } catch (const std::exception& e) {
        res.status = CacheLoad::Status::Corrupt;
        res.detail = std::string("unreadable record: ") + e.what();
        return res;
    }
    for (auto& [i, j, v] : recs) S.preload(i, j, std::move(v));
    res.status = CacheLoad::Status::Loaded;
    res.records = recs.size();
    return res;
}

template <class Alg>
void ComposeCache::save(const SchurAlgebra<Alg>& S, const std::string& header, std::size_t loaded) const {
    if (!enabled()) return;
    auto recs = S.table();
    if (recs.size() <= loaded && fs::exists(path_for(header))) return;
    fs::create_directories(dir_);
    const std::string body = body_of(recs);
    const std::string path = path_for(header);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write cache file " + tmp);
        f << kMagic << '\n' << header << '\n' << "checksum " << hex64(fnv1a64(body)) << '\n' << body;
    }
    fs::rename(tmp, path);
}

CacheStat ComposeCache::stat() const {
    CacheStat s;
    if (!enabled() || !fs::exists(dir_)) return s;
    for (const auto& e : fs::directory_iterator(dir_))
        if (e.is_regular_file() && e.path().extension() == ".cqs") {
            ++s.files;
            s.bytes += e.file_size();
        }
    return s;
}

std::size_t ComposeCache::clear() const {
    std::size_t n = 0;
    if (!enabled() || !fs::exists(dir_)) return n;
    for (const auto& e : fs::directory_iterator(dir_))
        if (e.is_regular_file() && e.path().extension() == ".cqs") {
            fs::remove(e.path());
            ++n;
        }
    return n;
}

#define CQS_CACHE_INST(Alg)                                                                 \
    template CacheLoad ComposeCache::load<Alg>(SchurAlgebra<Alg>&, const std::string&) const; \
    template void ComposeCache::save<Alg>(const SchurAlgebra<Alg>&, const std::string&, std::size_t) const;

CQS_CACHE_INST(AKAlgebra<Fp>)
CQS_CACHE_INST(AKAlgebra<Rational>)
CQS_CACHE_INST(FlatAlgebra<Fp>)
CQS_CACHE_INST(FlatAlgebra<Rational>)
#undef CQS_CACHE_INST

}  // namespace cqs
