#ifndef MACKEY_ROOT_DATUM_HPP
#define MACKEY_ROOT_DATUM_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mackey/errors.hpp"
#include "mackey/linalg.hpp"
#include "mackey/rational.hpp"

namespace mackey {

// Weights (characters of the compact torus) carry integer coordinates in the
// fundamental-weight basis; continuous parameters carry rational ones.  The
// i-th coordinate of a vector is its pairing with the i-th simple coroot, so
// simple reflections read s_i(v)_j = v_j - v_i * cartan[i][j].
using WeightVec = IntVec;
using NuVector = RatVec;

struct WeylElement {
    // w = s_{word[0]} s_{word[1]} ... ; the rightmost letter acts first.
    // Invariant: mat is the product of the generator matrices of word.
    // Elements produced by RootDatum carry the lexicographically earliest
    // reduced word for their group element.
    std::vector<int> word;
    IntMat mat;

    std::size_t length() const { return word.size(); }
    int det() const { return word.size() % 2 == 0 ? 1 : -1; }

    template <typename Vec>
    Vec apply(const Vec& v) const {
        Vec out(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) {
            typename Vec::value_type acc{};
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!(mat[j][k] == 0)) acc += v[k] * typename Vec::value_type(mat[j][k]);
            out[j] = acc;
        }
        return out;
    }
};

class RootDatum;

RootDatum validate_root_datum(const IntMat& cartan, int rank_central = 0,
                              std::int64_t weyl_order_cap = 10000);

class RootDatum {
  public:
    int ss_rank() const { return int(cartan_.size()); }
    int rank_central() const { return rank_central_; }
    int rank() const { return ss_rank() + rank_central_; }
    const IntMat& cartan() const { return cartan_; }
    std::int64_t weyl_order_cap() const { return cap_; }

    const std::vector<WeightVec>& simple_roots() const { return simple_roots_; }
    const std::vector<WeightVec>& positive_roots() const { return positive_roots_; }
    // Root-basis coordinates of positive_roots()[k]; nonnegative integers.
    const std::vector<IntVec>& positive_root_coords() const { return positive_root_coords_; }
    const WeightVec& rho() const { return rho_; }

    std::int64_t weyl_order() const { return std::int64_t(elements_.size()); }
    const std::vector<WeylElement>& weyl_elements() const { return elements_; }
    const WeylElement& identity() const { return elements_.front(); }

    const WeylElement& simple_reflection(int i) const {
        check_index(i);
        return elements_[generators_[std::size_t(i)]];
    }

    // Canonical table element with the same matrix (lex-earliest reduced word).
    const WeylElement& canonical(const IntMat& mat) const {
        auto it = index_.find(flatten(mat));
        if (it == index_.end()) throw Error("Weyl element not in enumerated group");
        return elements_[it->second];
    }

    WeylElement compose(const WeylElement& a, const WeylElement& b) const {
        WeylElement r;
        r.word = a.word;
        r.word.insert(r.word.end(), b.word.begin(), b.word.end());
        r.mat = mat_mul(a.mat, b.mat);
        return r;
    }

    WeylElement inverse(const WeylElement& a) const {
        WeylElement r;
        r.word.assign(a.word.rbegin(), a.word.rend());
        r.mat = identity_mat(rank());
        for (int i : r.word) r.mat = mat_mul(r.mat, generator_mat(i));
        return r;
    }

    template <typename Vec>
    Vec reflect(const Vec& v, int i) const {
        check_index(i);
        check_length(v);
        Vec out = v;
        const auto vi = v[std::size_t(i)];
        for (int j = 0; j < ss_rank(); ++j)
            out[std::size_t(j)] -= vi * typename Vec::value_type(cartan_[std::size_t(i)][std::size_t(j)]);
        return out;
    }

    template <typename Vec>
    bool is_dominant(const Vec& v) const {
        check_length(v);
        for (int i = 0; i < ss_rank(); ++i)
            if (v[std::size_t(i)] < typename Vec::value_type(0)) return false;
        return true;
    }

    friend bool operator==(const RootDatum& a, const RootDatum& b) {
        return a.cartan_ == b.cartan_ && a.rank_central_ == b.rank_central_;
    }
    friend bool operator!=(const RootDatum& a, const RootDatum& b) { return !(a == b); }

    template <typename Vec>
    void check_length(const Vec& v) const {
        if (int(v.size()) != rank())
            throw InvalidInput("vector length " + std::to_string(v.size()) +
                               " does not match datum rank " + std::to_string(rank()));
    }

  private:
    friend RootDatum validate_root_datum(const IntMat&, int, std::int64_t);
    RootDatum() = default;

    void check_index(int i) const {
        if (i < 0 || i >= ss_rank())
            throw IndexOutOfRange("simple root index " + std::to_string(i) +
                                  " out of range [0," + std::to_string(ss_rank()) + ")");
    }

    static IntMat identity_mat(int n) {
        IntMat m(std::size_t(n), IntVec(std::size_t(n), 0));
        for (int i = 0; i < n; ++i) m[std::size_t(i)][std::size_t(i)] = 1;
        return m;
    }

    static IntMat mat_mul(const IntMat& a, const IntMat& b) {
        const std::size_t n = a.size();
        IntMat c(n, IntVec(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (a[i][k] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
            }
        return c;
    }

    static IntVec flatten(const IntMat& m) {
        IntVec f;
        f.reserve(m.size() * m.size());
        for (const auto& row : m) f.insert(f.end(), row.begin(), row.end());
        return f;
    }

    IntMat generator_mat(int i) const {
        IntMat s = identity_mat(rank());
        for (int j = 0; j < ss_rank(); ++j)
            s[std::size_t(j)][std::size_t(i)] -= cartan_[std::size_t(i)][std::size_t(j)];
        return s;
    }

    IntMat cartan_;
    int rank_central_ = 0;
    std::int64_t cap_ = 10000;
    std::vector<WeightVec> simple_roots_;
    std::vector<WeightVec> positive_roots_;
    std::vector<IntVec> positive_root_coords_;
    WeightVec rho_;
    std::vector<WeylElement> elements_;
    // Indices into elements_, not pointers, so the implicit copy stays valid.
    std::vector<std::size_t> generators_;
    std::map<IntVec, std::size_t> index_;
};

inline RootDatum validate_root_datum(const IntMat& cartan, int rank_central,
                                     std::int64_t weyl_order_cap) {
    const std::size_t n = cartan.size();
    if (rank_central < 0) throw InvalidInput("rank_central must be >= 0");
    if (weyl_order_cap < 1) throw InvalidInput("weyl_order_cap must be >= 1");
    for (std::size_t i = 0; i < n; ++i) {
        if (cartan[i].size() != n) throw NotCartan("Cartan matrix is not square");
        if (cartan[i][i] != 2)
            throw NotCartan("diagonal entry " + std::to_string(cartan[i][i]) +
                            " at position " + std::to_string(i) + " (must be 2)");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan[i][j] > 0)
                throw NotCartan("positive off-diagonal entry at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
                throw NotCartan("zero pattern not symmetric at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
        }
    }

    RootDatum d;
    d.cartan_ = cartan;
    d.rank_central_ = rank_central;
    d.cap_ = weyl_order_cap;
    const int rank = d.rank();

    for (std::size_t i = 0; i < n; ++i) {
        WeightVec alpha(std::size_t(rank), 0);
        for (std::size_t j = 0; j < n; ++j) alpha[j] = cartan[i][j];
        d.simple_roots_.push_back(alpha);
    }
    d.rho_.assign(std::size_t(rank), 0);
    for (std::size_t i = 0; i < n; ++i) d.rho_[i] = 1;

    // Breadth-first enumeration of the Weyl group.  Generators are tried in
    // increasing index, so the first word reaching an element is its
    // lexicographically earliest reduced word.
    WeylElement id;
    id.mat = RootDatum::identity_mat(rank);
    d.elements_.push_back(id);
    d.index_[RootDatum::flatten(id.mat)] = 0;
    std::vector<IntMat> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(d.generator_mat(int(i)));
    for (std::size_t head = 0; head < d.elements_.size(); ++head) {
        for (std::size_t i = 0; i < n; ++i) {
            IntMat m = RootDatum::mat_mul(d.elements_[head].mat, gens[i]);
            IntVec key = RootDatum::flatten(m);
            if (d.index_.count(key)) continue;
            if (std::int64_t(d.elements_.size()) >= weyl_order_cap)
                throw OrderCapExceeded("Weyl group order exceeds cap " +
                                       std::to_string(weyl_order_cap));
            WeylElement w;
            w.word = d.elements_[head].word;
            w.word.push_back(int(i));
            w.mat = std::move(m);
            d.index_[std::move(key)] = d.elements_.size();
            d.elements_.push_back(std::move(w));
        }
    }
    d.generators_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = d.index_.find(RootDatum::flatten(gens[i]));
        d.generators_[i] = it->second;
    }

    // Roots are the orbit of the simple roots; a root is positive exactly
    // when its root-basis coordinates are all nonnegative.
    std::vector<RatVec> simple_rat;
    for (const auto& a : d.simple_roots_) simple_rat.push_back(to_rat(a));
    std::map<WeightVec, IntVec> positives;
    for (const auto& w : d.elements_) {
        for (const auto& alpha : d.simple_roots_) {
            WeightVec beta = w.apply(alpha);
            if (positives.count(beta)) continue;
            auto coords = solve_in_span(simple_rat, to_rat(beta));
            if (!coords) throw Error("root outside simple-root span");
            IntVec c(n, 0);
            bool nonneg = true;
            for (std::size_t j = 0; j < n; ++j) {
                if (!(*coords)[j].is_integer()) throw Error("root with non-integer coordinates");
                c[j] = (*coords)[j].num();
                if (c[j] < 0) nonneg = false;
            }
            if (nonneg) positives.emplace(std::move(beta), std::move(c));
        }
    }
    std::vector<std::pair<WeightVec, IntVec>> sorted(positives.begin(), positives.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        std::int64_t ha = 0, hb = 0;
        for (auto x : a.second) ha += x;
        for (auto x : b.second) hb += x;
        if (ha != hb) return ha < hb;
        return a.second < b.second;
    });
    for (auto& [root, coords] : sorted) {
        d.positive_roots_.push_back(root);
        d.positive_root_coords_.push_back(coords);
    }
    return d;
}

template <typename Vec>
struct OrbitPoint {
    Vec v;
    WeylElement w; // w applied to the orbit seed gives v
};

// Full orbit with witnesses, deterministic order (breadth-first, generators
// in increasing index; witnesses canonicalized through the element table).
template <typename Vec>
std::vector<OrbitPoint<Vec>> weyl_orbit(const RootDatum& d, const Vec& v) {
    d.check_length(v);
    std::vector<OrbitPoint<Vec>> orbit;
    std::map<Vec, std::size_t> seen;
    orbit.push_back({v, d.identity()});
    seen[v] = 0;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
        Vec cur = orbit[head].v;
        WeylElement wcur = orbit[head].w;
        for (int i = 0; i < d.ss_rank(); ++i) {
            Vec nxt = d.reflect(cur, i);
            if (seen.count(nxt)) continue;
            WeylElement w = d.compose(d.simple_reflection(i), wcur);
            seen[nxt] = orbit.size();
            orbit.push_back({std::move(nxt), d.canonical(w.mat)});
        }
    }
    return orbit;
}

template <typename Vec>
struct DominantRep {
    Vec rep;
    WeylElement w; // w.apply(input) == rep
};

// Unique dominant representative.  Greedy descent on the smallest negative
// coordinate finds the minimal-length conjugator; the returned element is
// the table entry for it, whose word is the lex-earliest reduced expression.
template <typename Vec>
DominantRep<Vec> dominant_rep(const RootDatum& d, const Vec& v) {
    d.check_length(v);
    Vec cur = v;
    WeylElement w = d.identity();
    for (;;) {
        int neg = -1;
        for (int i = 0; i < d.ss_rank(); ++i) {
            if (cur[std::size_t(i)] < typename Vec::value_type(0)) {
                neg = i;
                break;
            }
        }
        if (neg < 0) break;
        cur = d.reflect(cur, neg);
        w = d.compose(d.simple_reflection(neg), w);
    }
    return {cur, d.canonical(w.mat)};
}

template <typename Vec>
struct Stabilizer {
    std::vector<int> indices; // simple roots of the parent fixing the dominant rep
    RootDatum sub;            // datum on those roots (its own coordinates)
    WeylElement to_dominant;  // maps the input to dominant position
    Vec dominant;
};

// Stabilizer sub-datum at v: after conjugating v to dominant position the
// isotropy group is generated by the simple reflections orthogonal to it.
template <typename Vec>
Stabilizer<Vec> stabilizer(const RootDatum& d, const Vec& v) {
    auto dom = dominant_rep(d, v);
    std::vector<int> indices;
    for (int i = 0; i < d.ss_rank(); ++i)
        if (dom.rep[std::size_t(i)] == typename Vec::value_type(0)) indices.push_back(i);
    IntMat sub(indices.size(), IntVec(indices.size(), 0));
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = 0; b < indices.size(); ++b)
            sub[a][b] = d.cartan()[std::size_t(indices[a])][std::size_t(indices[b])];
    return Stabilizer<Vec>{std::move(indices), validate_root_datum(sub, 0, d.weyl_order_cap()),
                           dom.w, dom.rep};
}

// Restriction of a parent-coordinate vector to the coordinates of a
// stabilizer sub-datum (pairings with the selected simple coroots).
template <typename Vec>
Vec restrict_to_sub(const std::vector<int>& indices, const Vec& v) {
    Vec out(indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a) out[a] = v[std::size_t(indices[a])];
    return out;
}

} // namespace mackey

#endif
