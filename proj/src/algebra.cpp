#include "qza/algebra.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace qza {

LieType lie_type_from_char(char c) {
    switch (c) {
        case 'A': case 'a': return LieType::A;
        case 'B': case 'b': return LieType::B;
        case 'C': case 'c': return LieType::C;
        case 'D': case 'd': return LieType::D;
        case 'E': case 'e': return LieType::E;
        case 'F': case 'f': return LieType::F;
        case 'G': case 'g': return LieType::G;
    }
    throw std::domain_error(std::string("unknown Lie type '") + c + "'");
}

char lie_type_char(LieType t) {
    switch (t) {
        case LieType::A: return 'A';
        case LieType::B: return 'B';
        case LieType::C: return 'C';
        case LieType::D: return 'D';
        case LieType::E: return 'E';
        case LieType::F: return 'F';
        case LieType::G: return 'G';
    }
    return '?';
}

Frac CartanData::pair_roots(const std::vector<Frac>& x, const std::vector<Frac>& y) const {
    Frac s{0, 1};
    for (int i = 0; i < rank; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < rank; ++j) s += x[i] * gram[i][j] * y[j];
    }
    return s;
}

Frac CartanData::pair_root_simple(const std::vector<Frac>& x, int i) const {
    Frac s{0, 1};
    for (int j = 0; j < rank; ++j) s += x[j] * gram[j][i];
    return s;
}

Frac CartanData::weight_norm(int j) const { return pair_roots(fund[j], fund[j]); }

std::string CartanData::name() const {
    return std::string(1, lie_type_char(type)) + std::to_string(rank);
}

std::vector<Frac> solve_frac_system(std::vector<std::vector<Frac>> m, std::vector<Frac> rhs) {
    int n = static_cast<int>(m.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) throw std::domain_error("solve_frac_system: singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        Frac inv = Frac{1, 1} / m[col][col];
        for (int c = col; c < n; ++c) m[col][c] = m[col][c] * inv;
        rhs[col] = rhs[col] * inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Frac f = m[r][col];
            for (int c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
            rhs[r] = rhs[r] - f * rhs[col];
        }
    }
    return rhs;
}

namespace {

struct Edge { int a, b; };

// Builds the Gram matrix from half squared lengths and the bond list; bonded
// simple roots meet at the obtuse angle forced by their lengths, i.e.
// (alpha_a|alpha_b) = -max(d_a, d_b) for a single/double/triple bond in these
// normalizations.
std::vector<std::vector<Frac>> gram_from_diagram(const std::vector<Frac>& d,
                                                 const std::vector<Edge>& edges) {
    int n = static_cast<int>(d.size());
    std::vector<std::vector<Frac>> g(n, std::vector<Frac>(n, Frac{0, 1}));
    for (int i = 0; i < n; ++i) g[i][i] = d[i] + d[i];
    for (const Edge& e : edges) {
        Frac v = -std::max(d[e.a], d[e.b]);
        g[e.a][e.b] = v;
        g[e.b][e.a] = v;
    }
    return g;
}

void fill_derived(CartanData& cd) {
    int n = cd.rank;
    cd.cartan.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Frac a = cd.gram[i][j] / cd.d[i];
            if (!a.is_integer())
                throw std::logic_error("cartan entry not integral for " + cd.name());
            cd.cartan[i][j] = static_cast<int>(a.to_int());
        }
    cd.simply_laced = true;
    for (int i = 0; i < n; ++i)
        if (cd.d[i] != Frac{1, 1}) cd.simply_laced = false;

    // fundamental weights: solve Gram * c = d_j e_j
    cd.fund.resize(n);
    for (int j = 0; j < n; ++j) {
        std::vector<Frac> rhs(n, Frac{0, 1});
        rhs[j] = cd.d[j];
        cd.fund[j] = solve_frac_system(cd.gram, rhs);
    }

    // positive roots by height induction, to find the highest root's marks
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    auto pairing = [&](const std::vector<int>& b, int i) {
        Frac s{0, 1};
        for (int j = 0; j < n; ++j)
            if (b[j]) s += Frac{b[j], 1} * cd.gram[j][i];
        Frac c = s / cd.d[i];
        return static_cast<int>(c.to_int());
    };
    std::vector<int> highest;
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& b : frontier) {
            for (int i = 0; i < n; ++i) {
                int p = 0;
                std::vector<int> down = b;
                while (true) {
                    down[i] -= 1;
                    if (down[i] < 0 || !roots.count(down)) break;
                    ++p;
                }
                if (p - pairing(b, i) > 0) {
                    std::vector<int> up = b;
                    up[i] += 1;
                    if (roots.insert(up).second) next.push_back(up);
                }
            }
        }
        if (next.empty()) {
            highest = frontier.back();
            for (const auto& b : frontier) {
                int hb = 0, hh = 0;
                for (int v : b) hb += v;
                for (int v : highest) hh += v;
                if (hb > hh) highest = b;
            }
        }
        frontier = std::move(next);
    }
    cd.marks = highest;

    cd.minuscule_nodes.clear();
    if (cd.simply_laced)
        for (int r = 0; r < n; ++r)
            if (cd.marks[r] == 1) cd.minuscule_nodes.push_back(r);
}

CartanData build(LieType t, int rank) {
    CartanData cd;
    cd.type = t;
    cd.rank = rank;
    auto chain = [&](int n) {
        std::vector<Edge> e;
        for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
        return e;
    };
    Frac one{1, 1}, half{1, 2};
    switch (t) {
        case LieType::A: {
            if (rank < 1) throw std::domain_error("A rank >= 1");
            cd.d.assign(rank, one);
            cd.gram = gram_from_diagram(cd.d, chain(rank));
            break;
        }
        case LieType::B: {
            if (rank < 2) throw std::domain_error("B rank >= 2");
            cd.d.assign(rank, one);
            cd.d[rank - 1] = half; // short spin node
            cd.gram = gram_from_diagram(cd.d, chain(rank));
            break;
        }
        case LieType::C: {
            if (rank < 2) throw std::domain_error("C rank >= 2");
            cd.d.assign(rank, half); // short nodes
            cd.d[rank - 1] = one;    // long node
            cd.gram = gram_from_diagram(cd.d, chain(rank));
            break;
        }
        case LieType::D: {
            if (rank < 3) throw std::domain_error("D rank >= 3");
            cd.d.assign(rank, one);
            std::vector<Edge> e;
            for (int i = 0; i + 1 < rank - 1; ++i) e.push_back({i, i + 1});
            e.push_back({rank - 3, rank - 1});
            cd.gram = gram_from_diagram(cd.d, e);
            break;
        }
        case LieType::E: {
            if (rank < 6 || rank > 8) throw std::domain_error("E rank in {6,7,8}");
            cd.d.assign(rank, one);
            // branch node 3 (0-based) carries node 1; chain 0-2-3-4-...
            std::vector<Edge> e = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
            for (int i = 4; i + 1 < rank; ++i) e.push_back({i, i + 1});
            cd.gram = gram_from_diagram(cd.d, e);
            break;
        }
        case LieType::F: {
            if (rank != 4) throw std::domain_error("F rank = 4");
            // first two nodes short, last two long
            cd.d = {half, half, one, one};
            cd.gram = gram_from_diagram(cd.d, chain(4));
            break;
        }
        case LieType::G: {
            if (rank != 2) throw std::domain_error("G rank = 2");
            cd.d = {one, Frac{1, 3}};
            cd.gram = gram_from_diagram(cd.d, chain(2));
            break;
        }
    }
    fill_derived(cd);
    return cd;
}

} // namespace

const CartanData& cartan_data(LieType t, int rank) {
    static std::map<std::pair<int, int>, CartanData> cache;
    auto key = std::make_pair(static_cast<int>(t), rank);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build(t, rank)).first;
    return it->second;
}

} // namespace qza
