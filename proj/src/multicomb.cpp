#include "cqs/multicomb.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cqs {

int Multicomp::size() const {
    int s = 0;
    for (const auto& c : comp) s += std::accumulate(c.begin(), c.end(), 0);
    return s;
}

int Multicomp::comp_size(int i) const { return std::accumulate(comp[i].begin(), comp[i].end(), 0); }

bool Multicomp::is_partition() const {
    for (const auto& c : comp)
        for (std::size_t j = 1; j < c.size(); ++j)
            if (c[j] > c[j - 1]) return false;
    return true;
}

std::vector<int> Multicomp::flat() const {
    std::vector<int> f;
    for (const auto& c : comp) f.insert(f.end(), c.begin(), c.end());
    return f;
}

std::string Multicomp::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < comp.size(); ++i) {
        os << (i ? "," : "") << '[';
        for (std::size_t j = 0; j < comp[i].size(); ++j) os << (j ? "," : "") << comp[i][j];
        os << ']';
    }
    os << ']';
    return os.str();
}

Multicomp Multicomp::parse(const std::string& s) {
    Multicomp mu;
    std::size_t pos = 0;
    auto skip = [&] { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; };
    auto expect = [&](char c) {
        skip();
        if (pos >= s.size() || s[pos] != c) throw std::invalid_argument("bad multicomposition: " + s);
        ++pos;
    };
    expect('[');
    skip();
    if (pos < s.size() && s[pos] == ']') throw std::invalid_argument("empty multicomposition: " + s);
    for (;;) {
        expect('[');
        std::vector<int> parts;
        skip();
        if (s[pos] != ']') {
            for (;;) {
                skip();
                std::size_t used = 0;
                int v = std::stoi(s.substr(pos), &used);
                if (v < 0) throw std::invalid_argument("negative part: " + s);
                parts.push_back(v);
                pos += used;
                skip();
                if (s[pos] == ',') { ++pos; continue; }
                break;
            }
        }
        expect(']');
        mu.comp.push_back(std::move(parts));
        skip();
        if (pos < s.size() && s[pos] == ',') { ++pos; continue; }
        break;
    }
    expect(']');
    return mu;
}

TypeAndCumulative type_and_cumulative(const Multicomp& mu) {
    TypeAndCumulative tc;
    int acc = 0;
    for (int i = 0; i < mu.r(); ++i) {
        tc.avec.push_back(acc);
        int s = mu.comp_size(i);
        tc.alpha.push_back(s);
        acc += s;
    }
    return tc;
}

std::vector<int> alpha_of(const Multicomp& mu) { return type_and_cumulative(mu).alpha; }
std::vector<int> avec_of(const Multicomp& mu) { return type_and_cumulative(mu).avec; }

bool avec_greater(const std::vector<int>& a, const std::vector<int>& b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return false;
        if (a[i] > b[i]) strict = true;
    }
    return strict;
}

bool dominates(const Multicomp& lambda, const Multicomp& mu) {
    if (lambda.r() != mu.r() || lambda.size() != mu.size())
        throw std::invalid_argument("dominance needs equal size and level");
    int bl = 0, bm = 0;
    for (int s = 0; s < lambda.r(); ++s) {
        const auto& L = lambda.comp[s];
        const auto& M = mu.comp[s];
        std::size_t len = std::max<std::size_t>({L.size(), M.size(), 1});
        int pl = bl, pm = bm;
        for (std::size_t i = 0; i < len; ++i) {
            pl += i < L.size() ? L[i] : 0;
            pm += i < M.size() ? M[i] : 0;
            if (pl < pm) return false;
        }
        bl = pl;
        bm = pm;
    }
    return true;
}

std::vector<Node> nodes_of(const Multicomp& lambda) {
    std::vector<Node> out;
    for (int k = 0; k < lambda.r(); ++k)
        for (int i = 0; i < static_cast<int>(lambda.comp[k].size()); ++i)
            for (int j = 0; j < lambda.comp[k][i]; ++j) out.push_back({k, i, j});
    return out;
}

namespace {

// index of node (k,i,j) in nodes_of order
struct NodeIndex {
    std::vector<std::vector<int>> row_start;
    explicit NodeIndex(const Multicomp& lambda) {
        int pos = 0;
        row_start.resize(lambda.r());
        for (int k = 0; k < lambda.r(); ++k)
            for (int len : lambda.comp[k]) {
                row_start[k].push_back(pos);
                pos += len;
            }
    }
    int at(int k, int i, int j) const { return row_start[k][i] + j; }
};

// entry (i,k) for each number 1..n under t^mu
std::vector<Entry> row_labels(const Multicomp& mu) {
    std::vector<Entry> lab;
    lab.push_back({0, 0});
    for (int k = 0; k < mu.r(); ++k)
        for (int i = 0; i < static_cast<int>(mu.comp[k].size()); ++i)
            for (int j = 0; j < mu.comp[k][i]; ++j) lab.push_back({i + 1, k + 1});
    return lab;
}

}  // namespace

std::vector<StdTableau> std_tableaux(const Multicomp& lambda) {
    if (!lambda.is_partition()) throw std::invalid_argument("std_tableaux needs a multipartition");
    auto nodes = nodes_of(lambda);
    NodeIndex idx(lambda);
    int n = static_cast<int>(nodes.size());
    std::vector<int> fill(n, 0);
    std::vector<StdTableau> out;
    std::function<void(int)> rec = [&](int next) {
        if (next > n) {
            StdTableau t;
            t.fill = fill;
            t.d.resize(n);
            for (int x = 0; x < n; ++x) t.d[x] = static_cast<std::uint8_t>(fill[x] - 1);
            t.length = perm_length(t.d);
            out.push_back(std::move(t));
            return;
        }
        for (int x = 0; x < n; ++x) {
            if (fill[x]) continue;
            const Node& nd = nodes[x];
            if (nd.col > 0 && !fill[idx.at(nd.comp, nd.row, nd.col - 1)]) continue;
            if (nd.row > 0 && !fill[idx.at(nd.comp, nd.row - 1, nd.col)]) continue;
            fill[x] = next;
            rec(next + 1);
            fill[x] = 0;
        }
    };
    rec(1);
    std::sort(out.begin(), out.end(), [](const StdTableau& a, const StdTableau& b) { return a.fill < b.fill; });
    return out;
}

std::string SSTableau::str() const {
    std::ostringstream os;
    auto nodes = nodes_of(shape);
    os << '[';
    std::size_t x = 0;
    for (int k = 0; k < shape.r(); ++k) {
        os << (k ? "," : "") << '[';
        bool first_row = true;
        for (int len : shape.comp[k]) {
            if (len == 0) continue;
            os << (first_row ? "" : ",") << '[';
            first_row = false;
            for (int j = 0; j < len; ++j, ++x)
                os << (j ? "," : "") << '(' << entries[x].row << ',' << entries[x].comp << ')';
            os << ']';
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

bool is_semistandard(const SSTableau& T) {
    auto nodes = nodes_of(T.shape);
    NodeIndex idx(T.shape);
    for (std::size_t x = 0; x < nodes.size(); ++x) {
        const Node& nd = nodes[x];
        const Entry& e = T.entries[x];
        if (e.comp < nd.comp + 1) return false;
        if (nd.col > 0 && T.entries[idx.at(nd.comp, nd.row, nd.col - 1)] > e) return false;
        if (nd.row > 0 && !(T.entries[idx.at(nd.comp, nd.row - 1, nd.col)] < e)) return false;
    }
    return true;
}

std::vector<SSTableau> semistandard_tableaux(const Multicomp& lambda, const Multicomp& mu) {
    std::vector<SSTableau> out;
    if (!lambda.is_partition() || lambda.r() != mu.r() || lambda.size() != mu.size()) return out;
    if (!dominates(lambda, mu)) return out;
    auto nodes = nodes_of(lambda);
    NodeIndex idx(lambda);
    std::vector<Entry> kinds;
    std::vector<int> count;
    for (int k = 0; k < mu.r(); ++k)
        for (int i = 0; i < static_cast<int>(mu.comp[k].size()); ++i)
            if (mu.comp[k][i] > 0) {
                kinds.push_back({i + 1, k + 1});
                count.push_back(mu.comp[k][i]);
            }
    std::vector<Entry> cur(nodes.size());
    std::function<void(std::size_t)> rec = [&](std::size_t x) {
        if (x == nodes.size()) {
            out.push_back({lambda, mu, cur});
            return;
        }
        const Node& nd = nodes[x];
        for (std::size_t c = 0; c < kinds.size(); ++c) {
            if (!count[c]) continue;
            const Entry& e = kinds[c];
            if (e.comp < nd.comp + 1) continue;
            if (nd.col > 0 && cur[idx.at(nd.comp, nd.row, nd.col - 1)] > e) continue;
            if (nd.row > 0 && !(cur[idx.at(nd.comp, nd.row - 1, nd.col)] < e)) continue;
            --count[c];
            cur[x] = e;
            rec(x + 1);
            ++count[c];
        }
    };
    rec(0);
    return out;
}

std::vector<SSTableau> t0_plus(const Multicomp& lambda, const Multicomp& mu) {
    if (avec_of(lambda) != avec_of(mu)) return {};
    return semistandard_tableaux(lambda, mu);
}

std::pair<SSTableau, bool> mu_of(const StdTableau& t, const Multicomp& lambda, const Multicomp& mu) {
    auto lab = row_labels(mu);
    SSTableau T{lambda, mu, {}};
    T.entries.reserve(t.fill.size());
    for (int v : t.fill) T.entries.push_back(lab[v]);
    bool ok = is_semistandard(T);
    return {std::move(T), ok};
}

SSTableau canonical_tableau(const Multicomp& lambda) {
    StdTableau t;
    int n = lambda.size();
    t.fill.resize(n);
    std::iota(t.fill.begin(), t.fill.end(), 1);
    t.d = perm_identity(n);
    return mu_of(t, lambda, lambda).first;
}

std::pair<Multicomp, SSTableau> lambda_dagger(const Multicomp& lambda, const std::vector<int>& pad) {
    int r = lambda.r();
    int l = 0;
    while (l < r && lambda.comp_size(l) == 0) ++l;
    if (l >= r - 1) throw std::invalid_argument("lambda_dagger: (lambda,1) is not in Omega");
    Multicomp dag;
    dag.comp.resize(r);
    for (int j = 0; j < r; ++j) {
        int len = lambda.comp_size(j) + (j == l ? -1 : 0) + (j == l + 1 ? 1 : 0);
        if (len > pad[j]) throw std::invalid_argument("lambda_dagger: column does not fit the poset");
        dag.comp[j].assign(pad[j], 0);
        for (int i = 0; i < len; ++i) dag.comp[j][i] = 1;
    }
    StdTableau t;
    int n = lambda.size();
    t.fill.resize(n);
    std::iota(t.fill.begin(), t.fill.end(), 1);
    t.d = perm_identity(n);
    return {dag, mu_of(t, lambda, dag).first};
}

Poset::Poset(int n, int r, std::vector<int> m, Kind kind, std::vector<Multicomp> elts)
    : n_(n), r_(r), m_(std::move(m)), kind_(kind), elts_(std::move(elts)) {
    std::sort(elts_.begin(), elts_.end(),
              [](const Multicomp& a, const Multicomp& b) { return a.flat() > b.flat(); });
    for (int i = 0; i < size(); ++i) {
        index_[elts_[i]] = i;
        if (elts_[i].is_partition()) plus_.push_back(i);
    }
    dom_.resize(static_cast<std::size_t>(size()) * size());
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) dom_[a * size() + b] = dominates(elts_[a], elts_[b]);
}

Poset Poset::ptilde(int n, int r, const std::vector<int>& m) {
    if (n < 1 || r < 1 || static_cast<int>(m.size()) != r)
        throw std::invalid_argument("ptilde needs n >= 1, r >= 1 and r entries in m");
    int total = std::accumulate(m.begin(), m.end(), 0);
    if (total == 0) throw std::invalid_argument("ptilde: m has no parts");
    std::vector<Multicomp> elts;
    std::vector<int> parts(total);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == total - 1) {
            parts[pos] = left;
            Multicomp mu;
            int at = 0;
            for (int i = 0; i < r; ++i) {
                mu.comp.emplace_back(parts.begin() + at, parts.begin() + at + m[i]);
                at += m[i];
            }
            elts.push_back(std::move(mu));
            return;
        }
        for (int v = left; v >= 0; --v) {
            parts[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, n);
    return Poset(n, r, m, Kind::PTilde, std::move(elts));
}

Poset Poset::partitions_only(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("partitions_only needs n >= 1, r >= 1");
    std::vector<Multicomp> elts;
    Poset full = ptilde(n, r, std::vector<int>(r, n));
    for (const auto& mu : full.elements())
        if (mu.is_partition()) elts.push_back(mu);
    return Poset(n, r, std::vector<int>(r, n), Kind::PartitionsOnly, std::move(elts));
}

int Poset::index(const Multicomp& mu) const {
    auto it = index_.find(mu);
    return it == index_.end() ? -1 : it->second;
}

bool Poset::is_saturated() const {
    const Poset all = partitions_only(n_, r_);
    for (const auto& lam : all.elements()) {
        bool needed = std::any_of(elts_.begin(), elts_.end(),
                                  [&](const Multicomp& mu) { return dominates(lam, mu); });
        if (!needed) continue;
        Multicomp padded;
        for (int k = 0; k < r_; ++k) {
            std::vector<int> c;
            for (int v : lam.comp[k])
                if (v) c.push_back(v);
            if (static_cast<int>(c.size()) > m_[k]) return false;
            c.resize(m_[k], 0);
            padded.comp.push_back(std::move(c));
        }
        if (index(padded) < 0) return false;
    }
    return true;
}

std::string Poset::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    feed(std::to_string(n_) + ":" + std::to_string(r_) + ":");
    for (const auto& mu : elts_) feed(mu.str() + ";");
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

std::vector<OmegaElt> omega(const Poset& P) {
    std::vector<OmegaElt> out;
    for (int l : P.plus()) {
        out.push_back({l, 0});
        auto al = avec_of(P.at(l));
        for (int m = 0; m < P.size(); ++m) {
            if (!avec_greater(al, avec_of(P.at(m)))) continue;
            if (!semistandard_tableaux(P.at(l), P.at(m)).empty()) {
                out.push_back({l, 1});
                break;
            }
        }
    }
    return out;
}

bool omega_greater(const Poset& P, const OmegaElt& a, const OmegaElt& b) {
    if (a.lambda == b.lambda) return a.eps > b.eps;
    return P.dom(a.lambda, b.lambda);
}

}  // namespace cqs
