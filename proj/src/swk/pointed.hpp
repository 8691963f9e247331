#pragma once

#include <string>
#include <vector>

#include "swk/core.hpp"

namespace swk {

// A map of pointed finite sets [src]_+ -> [dst]_+: elements 1..n, basepoint
// 0, map[0] == 0.
struct PointedMap {
    int src = 0, dst = 0;
    std::vector<int> map;  // size src + 1

    static PointedMap identity(int n);
    int apply(int i) const { return map.at(i); }
    void validate() const;  // throws StructuralError
    std::string to_string() const;

    bool operator==(const PointedMap& o) const = default;
};

// g after f.
PointedMap compose_pointed(const PointedMap& f, const PointedMap& g);

// Cofibrations are monomorphisms (injective maps).
bool is_pointed_mono(const PointedMap& f);
// Fibrations are surjections whose non-basepoint fibers are singletons.
bool is_pointed_fib(const PointedMap& p);
// (i, q) a cofiber sequence: q is the collapse of im(i), up to nothing --
// q a fibration killing exactly im(i) with |C| = |B| - |A|.
bool is_cofiber_sequence(const PointedMap& i, const PointedMap& q);

// Canonical cofiber projection of a mono, preserving the order of the
// surviving elements.
PointedMap cofiber_projection(const PointedMap& i);

// Wrong-way maps: f^* collapses the corange, p^* picks the unique
// non-basepoint preimage.
PointedMap wrongway_cof(const PointedMap& f);
PointedMap wrongway_fib(const PointedMap& p);

// Enumerations (deterministic, lexicographic in the map vector).
std::vector<PointedMap> all_pointed_maps(int src, int dst);
std::vector<PointedMap> all_pointed_monos(int src, int dst);
std::vector<PointedMap> all_pointed_fibs(int src, int dst);
// Fibrations that collapse a subset and keep the others in order; every
// fibration is an isomorphism after one of these.
std::vector<PointedMap> canonical_collapses(int src);

}  // namespace swk
