#include "swk/pointed.hpp"

#include <sstream>

namespace swk {

PointedMap PointedMap::identity(int n) {
    PointedMap f;
    f.src = f.dst = n;
    f.map.resize(n + 1);
    for (int i = 0; i <= n; ++i) f.map[i] = i;
    return f;
}

void PointedMap::validate() const {
    if (src < 0 || dst < 0 || (int)map.size() != src + 1)
        throw StructuralError("pointed map: bad shape");
    if (map[0] != 0) throw StructuralError("pointed map: basepoint moved");
    for (int i = 0; i <= src; ++i)
        if (map[i] < 0 || map[i] > dst)
            throw StructuralError("pointed map: value out of range");
}

std::string PointedMap::to_string() const {
    std::ostringstream os;
    os << "[" << src << "]+->[" << dst << "]+:";
    for (int i = 1; i <= src; ++i) {
        if (i > 1) os << ",";
        os << map[i];
    }
    return os.str();
}

PointedMap compose_pointed(const PointedMap& f, const PointedMap& g) {
    if (f.dst != g.src)
        throw StructuralError("pointed compose: endpoint mismatch");
    PointedMap h;
    h.src = f.src;
    h.dst = g.dst;
    h.map.resize(f.src + 1);
    for (int i = 0; i <= f.src; ++i) h.map[i] = g.map[f.map[i]];
    return h;
}

bool is_pointed_mono(const PointedMap& f) {
    std::vector<bool> hit(f.dst + 1, false);
    for (int i = 1; i <= f.src; ++i) {
        int v = f.map[i];
        if (v == 0 || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

bool is_pointed_fib(const PointedMap& p) {
    std::vector<int> count(p.dst + 1, 0);
    for (int i = 1; i <= p.src; ++i) ++count[p.map[i]];
    for (int v = 1; v <= p.dst; ++v)
        if (count[v] != 1) return false;
    return true;
}

bool is_cofiber_sequence(const PointedMap& i, const PointedMap& q) {
    if (!is_pointed_mono(i) || !is_pointed_fib(q)) return false;
    if (i.dst != q.src) return false;
    if (q.dst != i.dst - i.src) return false;
    // q kills exactly the image of i
    std::vector<bool> in_image(i.dst + 1, false);
    for (int a = 1; a <= i.src; ++a) in_image[i.map[a]] = true;
    for (int b = 1; b <= q.src; ++b)
        if ((q.map[b] == 0) != in_image[b]) return false;
    return true;
}

PointedMap cofiber_projection(const PointedMap& i) {
    if (!is_pointed_mono(i))
        throw StructuralError("cofiber projection: not a monomorphism");
    std::vector<bool> in_image(i.dst + 1, false);
    for (int a = 1; a <= i.src; ++a) in_image[i.map[a]] = true;
    PointedMap q;
    q.src = i.dst;
    q.dst = i.dst - i.src;
    q.map.assign(i.dst + 1, 0);
    int next = 1;
    for (int b = 1; b <= i.dst; ++b)
        if (!in_image[b]) q.map[b] = next++;
    return q;
}

PointedMap wrongway_cof(const PointedMap& f) {
    if (!is_pointed_mono(f))
        throw StructuralError("wrongway_cof: not a monomorphism");
    PointedMap g;
    g.src = f.dst;
    g.dst = f.src;
    g.map.assign(f.dst + 1, 0);
    for (int a = 1; a <= f.src; ++a) g.map[f.map[a]] = a;
    return g;
}

PointedMap wrongway_fib(const PointedMap& p) {
    if (!is_pointed_fib(p))
        throw StructuralError("wrongway_fib: not a fibration");
    PointedMap g;
    g.src = p.dst;
    g.dst = p.src;
    g.map.assign(p.dst + 1, 0);
    for (int a = 1; a <= p.src; ++a)
        if (p.map[a] != 0) g.map[p.map[a]] = a;
    return g;
}

std::vector<PointedMap> all_pointed_maps(int src, int dst) {
    std::vector<PointedMap> out;
    PointedMap f;
    f.src = src;
    f.dst = dst;
    f.map.assign(src + 1, 0);
    while (true) {
        out.push_back(f);
        int i = src;
        while (i >= 1 && f.map[i] == dst) f.map[i--] = 0;
        if (i < 1) break;
        ++f.map[i];
    }
    return out;
}

std::vector<PointedMap> all_pointed_monos(int src, int dst) {
    std::vector<PointedMap> out;
    for (PointedMap& f : all_pointed_maps(src, dst))
        if (is_pointed_mono(f)) out.push_back(std::move(f));
    return out;
}

std::vector<PointedMap> all_pointed_fibs(int src, int dst) {
    std::vector<PointedMap> out;
    for (PointedMap& f : all_pointed_maps(src, dst))
        if (is_pointed_fib(f)) out.push_back(std::move(f));
    return out;
}

std::vector<PointedMap> canonical_collapses(int src) {
    std::vector<PointedMap> out;
    for (int bits = 0; bits < (1 << src); ++bits) {
        PointedMap f;
        f.src = src;
        f.map.assign(src + 1, 0);
        int next = 1;
        for (int i = 1; i <= src; ++i)
            if (bits & (1 << (i - 1))) f.map[i] = next++;
        f.dst = next - 1;
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace swk
