#pragma once

// Permutations on small domains, breadth-first group enumeration with a
// hard element cap, conjugacy classes with a canonical ordering, and
// class fusion under a normalizing supergroup (the modelled Aut action).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ppbound {

inline constexpr std::size_t kEnumerationCap = 10'000'000;

/// Bijection on {0, ..., degree-1}; images[i] is the image of point i.
struct Permutation {
    std::vector<std::uint8_t> images;

    static Permutation identity(unsigned degree) {
        Permutation p;
        p.images.resize(degree);
        std::iota(p.images.begin(), p.images.end(), 0);
        return p;
    }

    unsigned degree() const { return static_cast<unsigned>(images.size()); }
    bool is_identity() const {
        for (std::size_t i = 0; i < images.size(); ++i)
            if (images[i] != i) return false;
        return true;
    }

    /// (a * b)(x) = a(b(x))
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        Permutation r;
        r.images.resize(a.images.size());
        for (std::size_t i = 0; i < a.images.size(); ++i) r.images[i] = a.images[b.images[i]];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.images.resize(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) r.images[images[i]] = static_cast<std::uint8_t>(i);
        return r;
    }

    std::uint64_t order() const {
        std::vector<bool> seen(images.size(), false);
        std::uint64_t o = 1;
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (seen[i]) continue;
            std::uint64_t len = 0;
            std::size_t j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = images[j];
                ++len;
            }
            o = std::lcm(o, len);
        }
        return o;
    }

    /// cycle lengths, descending
    std::vector<unsigned> cycle_type() const {
        std::vector<bool> seen(images.size(), false);
        std::vector<unsigned> t;
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (seen[i]) continue;
            unsigned len = 0;
            std::size_t j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = images[j];
                ++len;
            }
            t.push_back(len);
        }
        std::sort(t.rbegin(), t.rend());
        return t;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images == b.images;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images < b.images;
    }
};

struct PermHash {
    std::size_t operator()(const Permutation& p) const {
        // FNV-1a over the image bytes
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint8_t b : p.images) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

class capacity_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A permutation group given by generators; elements materialized lazily by
/// breadth-first closure, capped at kEnumerationCap. Immutable once
/// enumerated; safe to share read-only afterwards.
class PermGroup {
  public:
    PermGroup(unsigned degree, std::vector<Permutation> generators,
              std::size_t cap = kEnumerationCap)
        : degree_(degree), cap_(cap), gens_(std::move(generators)) {
        for (const auto& g : gens_)
            if (g.degree() != degree_)
                throw std::invalid_argument("generator degree mismatch");
    }

    unsigned degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    const std::vector<Permutation>& elements() const {
        if (elems_.empty()) enumerate();
        return elems_;
    }
    std::size_t order() const { return elements().size(); }
    bool contains(const Permutation& p) const {
        elements();
        return index_.count(p) != 0;
    }
    std::size_t index_of(const Permutation& p) const {
        elements();
        auto it = index_.find(p);
        if (it == index_.end()) throw std::invalid_argument("element not in group");
        return it->second;
    }

  private:
    unsigned degree_;
    std::size_t cap_;
    std::vector<Permutation> gens_;
    mutable std::vector<Permutation> elems_;
    mutable std::unordered_map<Permutation, std::size_t, PermHash> index_;

    void enumerate() const {
        std::unordered_set<Permutation, PermHash> seen;
        std::vector<Permutation> frontier{Permutation::identity(degree_)};
        seen.insert(frontier[0]);
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& x : frontier) {
                for (const auto& g : gens_) {
                    Permutation y = g * x;
                    if (seen.insert(y).second) {
                        if (seen.size() > cap_)
                            throw capacity_error(
                                "enumeration exceeds the element cap of " +
                                std::to_string(cap_));
                        next.push_back(std::move(y));
                    }
                }
            }
            frontier = std::move(next);
        }
        elems_.assign(seen.begin(), seen.end());
        std::sort(elems_.begin(), elems_.end());
        index_.reserve(elems_.size());
        for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
    }
};

struct ConjClass {
    Permutation representative;  // lexicographically least member
    std::uint64_t size;
    std::uint64_t element_order;
};

/// Conjugacy classes in deterministic order: by element order, then size,
/// then least representative.
inline std::vector<ConjClass> conjugacy_classes(const PermGroup& g,
                                                std::vector<std::uint32_t>* class_of_index = nullptr) {
    const auto& elems = g.elements();
    std::vector<std::uint32_t> cls(elems.size(), UINT32_MAX);
    std::vector<std::pair<Permutation, std::uint64_t>> reps;  // (min member, size)
    std::vector<std::pair<const Permutation*, const Permutation*>> conj;
    std::vector<Permutation> inv;
    inv.reserve(g.generators().size());
    for (const auto& gen : g.generators()) inv.push_back(gen.inverse());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (cls[i] != UINT32_MAX) continue;
        std::uint32_t id = static_cast<std::uint32_t>(reps.size());
        std::vector<std::size_t> frontier{i};
        cls[i] = id;
        Permutation least = elems[i];
        std::uint64_t count = 1;
        while (!frontier.empty()) {
            std::vector<std::size_t> next;
            for (std::size_t x : frontier) {
                for (std::size_t k = 0; k < g.generators().size(); ++k) {
                    Permutation y = g.generators()[k] * elems[x] * inv[k];
                    std::size_t yi = g.index_of(y);
                    if (cls[yi] == UINT32_MAX) {
                        cls[yi] = id;
                        ++count;
                        if (y < least) least = y;
                        next.push_back(yi);
                    }
                }
            }
            frontier = std::move(next);
        }
        reps.emplace_back(std::move(least), count);
    }
    std::vector<ConjClass> out;
    out.reserve(reps.size());
    for (auto& [rep, size] : reps)
        out.push_back({rep, size, rep.order()});
    // canonical order; remap class ids accordingly
    std::vector<std::uint32_t> perm(out.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (out[a].element_order != out[b].element_order)
            return out[a].element_order < out[b].element_order;
        if (out[a].size != out[b].size) return out[a].size < out[b].size;
        return out[a].representative < out[b].representative;
    });
    std::vector<ConjClass> sorted;
    sorted.reserve(out.size());
    std::vector<std::uint32_t> newid(out.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) {
        newid[perm[i]] = i;
        sorted.push_back(std::move(out[perm[i]]));
    }
    if (class_of_index) {
        class_of_index->resize(cls.size());
        for (std::size_t i = 0; i < cls.size(); ++i) (*class_of_index)[i] = newid[cls[i]];
    }
    return sorted;
}

/// Conjugacy classes of T together with their orbits under conjugation by
/// a supergroup A >= T realizing the modelled automorphisms.
struct FusionMap {
    std::vector<ConjClass> t_classes;
    std::vector<std::uint32_t> orbit_of_class;       // class index -> orbit id
    std::vector<std::vector<std::uint32_t>> aut_orbits;  // orbit id -> class indices
    std::vector<std::uint32_t> class_of_element;     // index into T's element order

    std::uint32_t orbit_of(const PermGroup& t, const Permutation& x) const {
        return orbit_of_class[class_of_element[t.index_of(x)]];
    }
};

/// A's generators must normalize T (checked); A itself need not be
/// enumerated. Orbits are canonically numbered by least class index.
inline FusionMap fuse_classes(const PermGroup& t, const std::vector<Permutation>& aut_gens) {
    FusionMap fm;
    fm.t_classes = conjugacy_classes(t, &fm.class_of_element);
    std::size_t n = fm.t_classes.size();
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint32_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto unite = [&](std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (const auto& g : aut_gens) {
        Permutation gi = g.inverse();
        for (std::uint32_t c = 0; c < n; ++c) {
            Permutation y = g * fm.t_classes[c].representative * gi;
            if (!t.contains(y))
                throw std::invalid_argument("automorphism generator does not normalize T");
            unite(c, fm.class_of_element[t.index_of(y)]);
        }
    }
    std::unordered_map<std::uint32_t, std::uint32_t> root_to_orbit;
    fm.orbit_of_class.resize(n);
    for (std::uint32_t c = 0; c < n; ++c) {
        std::uint32_t r = find(c);
        auto [it, fresh] = root_to_orbit.emplace(r, static_cast<std::uint32_t>(fm.aut_orbits.size()));
        if (fresh) fm.aut_orbits.emplace_back();
        fm.orbit_of_class[c] = it->second;
        fm.aut_orbits[it->second].push_back(c);
    }
    return fm;
}

}  // namespace ppbound
