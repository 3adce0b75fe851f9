#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cqs/perm.hpp"

namespace cqs {

// An r-tuple of integer sequences. Trailing zero parts are significant: inside
// P~_{n,r}(m) component i always has exactly m_i parts.
struct Multicomp {
    std::vector<std::vector<int>> comp;

    int r() const { return static_cast<int>(comp.size()); }
    int size() const;
    int comp_size(int i) const;
    bool is_partition() const;
    std::vector<int> flat() const;  // the 1-composition {mu}
    std::string str() const;        // [[3,2,1],[2,2]]
    static Multicomp parse(const std::string& s);

    auto operator<=>(const Multicomp&) const = default;
};

struct TypeAndCumulative {
    std::vector<int> alpha;
    std::vector<int> avec;
};

TypeAndCumulative type_and_cumulative(const Multicomp& mu);
std::vector<int> alpha_of(const Multicomp& mu);
std::vector<int> avec_of(const Multicomp& mu);

// componentwise >= with at least one strict entry
bool avec_greater(const std::vector<int>& a, const std::vector<int>& b);

// lambda dominates mu. Throws std::invalid_argument on size/level mismatch.
bool dominates(const Multicomp& lambda, const Multicomp& mu);
inline bool strictly_dominates(const Multicomp& lambda, const Multicomp& mu) {
    return lambda != mu && dominates(lambda, mu);
}

// Nodes of a multipartition in row-major order: component, then row, then column.
struct Node {
    int comp, row, col;
};
std::vector<Node> nodes_of(const Multicomp& lambda);

struct StdTableau {
    std::vector<int> fill;  // entry (1..n) per node in nodes_of order
    Perm d;                 // t = t^lambda * d(t)
    int length = 0;         // l(d(t))
};

std::vector<StdTableau> std_tableaux(const Multicomp& lambda);

// An entry (i,s) of a Tableau: row i of component s of the type (1-based).
struct Entry {
    int row, comp;
    auto operator<=>(const Entry& o) const {
        if (auto c = comp <=> o.comp; c != 0) return c;
        return row <=> o.row;
    }
    bool operator==(const Entry&) const = default;
};

struct SSTableau {
    Multicomp shape;
    Multicomp type;
    std::vector<Entry> entries;  // per node in nodes_of(shape) order

    std::string str() const;
    auto operator<=>(const SSTableau&) const = default;
};

bool is_semistandard(const SSTableau& T);

// T_0(lambda, mu) in a fixed backtracking order
std::vector<SSTableau> semistandard_tableaux(const Multicomp& lambda, const Multicomp& mu);
std::vector<SSTableau> t0_plus(const Multicomp& lambda, const Multicomp& mu);

// mu(t) and whether it is semistandard
std::pair<SSTableau, bool> mu_of(const StdTableau& t, const Multicomp& lambda, const Multicomp& mu);

// T^lambda = lambda(t^lambda)
SSTableau canonical_tableau(const Multicomp& lambda);

// The associated column-shape multipartition and T^{lambda dagger}. The
// padding of each component is taken from `pad` (component lengths of the
// ambient poset); throws std::invalid_argument when (lambda,1) is not in Omega
// or the result does not fit.
std::pair<Multicomp, SSTableau> lambda_dagger(const Multicomp& lambda, const std::vector<int>& pad);

class Poset {
public:
    enum class Kind { PTilde, PartitionsOnly };

    // P~_{n,r}(m) in reverse-lexicographic order
    static Poset ptilde(int n, int r, const std::vector<int>& m);
    // all r-partitions of n, each component padded to n parts
    static Poset partitions_only(int n, int r);

    int n() const { return n_; }
    int r() const { return r_; }
    Kind kind() const { return kind_; }
    const std::vector<int>& m() const { return m_; }
    int size() const { return static_cast<int>(elts_.size()); }
    const Multicomp& at(int i) const { return elts_[i]; }
    const std::vector<Multicomp>& elements() const { return elts_; }
    const std::vector<int>& plus() const { return plus_; }  // indices of multipartitions
    int index(const Multicomp& mu) const;                   // -1 if absent
    bool dom(int a, int b) const { return dom_[a * size() + b]; }
    bool is_saturated() const;
    std::string hash() const;  // stable content hash of the element list

private:
    Poset(int n, int r, std::vector<int> m, Kind kind, std::vector<Multicomp> elts);
    int n_, r_;
    std::vector<int> m_;
    Kind kind_;
    std::vector<Multicomp> elts_;
    std::vector<int> plus_;
    std::map<Multicomp, int> index_;
    std::vector<char> dom_;
};

struct OmegaElt {
    int lambda;  // poset index
    int eps;
    bool operator==(const OmegaElt&) const = default;
};

std::vector<OmegaElt> omega(const Poset& P);
bool omega_greater(const Poset& P, const OmegaElt& a, const OmegaElt& b);

}  // namespace cqs
