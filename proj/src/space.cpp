#include "qza/space.hpp"

#include "qza/qseries.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qza {

QRat boson_bracket(const SpaceSpec& sp, int fam, int i, int j, long m) {
    const BosonFamilySpec& f = sp.bosons.at(fam);
    const Frac& p = f.gram.at(i).at(j);
    if (p.is_zero()) return QRat::integer(0, sp.D);
    QRat b = f.classical ? QRat::rational(p * Frac{m, 1}, sp.D)
                         : q_int(p * Frac{m, 1}, sp.D) * q_int(f.kmul * Frac{m, 1}, sp.D) /
                               QRat::integer(m, sp.D);
    if (!f.extra_q.is_zero()) b = b * QRat::q_power(f.extra_q, sp.D);
    return b;
}

State boson_apply(const SpaceSpec& sp, int fam, int idx, long m, const BasisVector& bv,
                  const QRat& coeff) {
    State out;
    if (coeff.is_zero()) return out;
    if (m == 0) throw std::domain_error("boson_apply: zero mode");
    if (m < 0) {
        BasisVector nb = bv;
        std::array<int, 3> key{fam, idx, static_cast<int>(-m)};
        nb.bosons.insert(std::upper_bound(nb.bosons.begin(), nb.bosons.end(), key), key);
        out.emplace(std::move(nb), coeff);
        return out;
    }
    // annihilation: contract against each distinct matching creation mode
    for (size_t pos = 0; pos < bv.bosons.size(); ++pos) {
        const auto& b = bv.bosons[pos];
        if (b[0] != fam || b[2] != m) continue;
        if (pos > 0 && bv.bosons[pos - 1] == b) continue; // count each distinct entry once
        size_t mult = 1;
        while (pos + mult < bv.bosons.size() && bv.bosons[pos + mult] == b) ++mult;
        QRat br = boson_bracket(sp, fam, idx, b[1], m);
        if (br.is_zero()) continue;
        BasisVector nb = bv;
        nb.bosons.erase(nb.bosons.begin() + pos);
        state_add(out, nb, coeff * QRat::integer(static_cast<long>(mult), sp.D) * br);
    }
    return out;
}

int cocycle_sign(const LatticeSpec& lat, const std::vector<int>& gamma,
                 const std::vector<long long>& b) {
    if (lat.eps.empty()) return 1;
    long long acc = 0;
    for (int i = 0; i < lat.dim; ++i) {
        if (!gamma[i]) continue;
        for (int j = 0; j < lat.dim; ++j) {
            if (!b[j] || lat.eps[i][j] > 0) continue;
            acc += static_cast<long long>(gamma[i]) * b[j];
        }
    }
    return (acc % 2) ? -1 : 1;
}

State lattice_shift_apply(const SpaceSpec& sp, const std::vector<int>& gamma,
                          const BasisVector& bv, const QRat& coeff) {
    State out;
    if (coeff.is_zero()) return out;
    int sign = cocycle_sign(sp.lattice, gamma, bv.lat);
    BasisVector nb = bv;
    for (int i = 0; i < sp.lattice.dim; ++i) nb.lat[i] += gamma[i];
    QRat c = coeff;
    if (sign < 0) c = -c;
    out.emplace(std::move(nb), c);
    return out;
}

Frac label_pair(const SpaceSpec& sp, const std::vector<Frac>& cov, const BasisVector& bv,
                const Frac& off) {
    Frac s = off;
    const LatticeSpec& L = sp.lattice;
    if (L.dim == 0) return s;
    const std::vector<Frac>& rep = L.cosets.at(bv.coset);
    for (int i = 0; i < L.dim; ++i) {
        if (cov[i].is_zero()) continue;
        for (int j = 0; j < L.dim; ++j) {
            Frac bj = rep[j] + Frac{bv.lat[j], 1};
            if (!bj.is_zero()) s += cov[i] * L.gram[i][j] * bj;
        }
    }
    return s;
}

State fermion_apply(const SpaceSpec& sp, long long m2, const BasisVector& bv,
                    const QRat& coeff) {
    State out;
    if (coeff.is_zero()) return out;
    const FermionSpec& F = sp.fermion;
    if (!F.present) throw std::domain_error("fermion_apply: no fermions in this space");
    if (m2 == 0) {
        if (F.half) throw std::domain_error("fermion_apply: zero mode needs integer moding");
        BasisVector nb = bv;
        QRat c = coeff;
        if (bv.ferm2.size() % 2) c = -c;
        if (F.tagdim == 2) nb.tag = 1 - nb.tag;
        out.emplace(std::move(nb), c);
        return out;
    }
    if (m2 > 0) {
        // contraction
        for (size_t j = 0; j < bv.ferm2.size(); ++j) {
            if (bv.ferm2[j] != m2) continue;
            QRat val = QRat::q_power(F.p * Frac{m2, 2}, sp.D) +
                       QRat::q_power(-(F.p * Frac{m2, 2}), sp.D);
            BasisVector nb = bv;
            nb.ferm2.erase(nb.ferm2.begin() + j);
            QRat c = coeff * val;
            if (j % 2) c = -c;
            out.emplace(std::move(nb), c);
            break;
        }
        return out;
    }
    // insertion: weights kept strictly decreasing
    long long w = -m2;
    size_t pos = 0;
    while (pos < bv.ferm2.size() && bv.ferm2[pos] > w) ++pos;
    if (pos < bv.ferm2.size() && bv.ferm2[pos] == w) return out; // square is zero
    BasisVector nb = bv;
    nb.ferm2.insert(nb.ferm2.begin() + pos, w);
    QRat c = coeff;
    if (pos % 2) c = -c;
    out.emplace(std::move(nb), c);
    return out;
}

bool sector_ok(const SpaceSpec& sp, const BasisVector& bv) {
    if (!sp.sector.active) return true;
    long long acc = static_cast<long long>(bv.ferm2.size());
    for (int i = 0; i < sp.lattice.dim; ++i) acc += sp.sector.cov[i] * bv.lat[i];
    return ((acc % 2) + 2) % 2 == sp.sector.parity;
}

namespace {

Frac lattice_degree(const SpaceSpec& sp, int coset, const std::vector<long long>& x) {
    const LatticeSpec& L = sp.lattice;
    if (L.dim == 0) return Frac{0, 1};
    const std::vector<Frac>& rep = L.cosets.at(coset);
    std::vector<Frac> B(L.dim);
    for (int i = 0; i < L.dim; ++i) B[i] = rep[i] + Frac{x[i], 1};
    auto quad = [&](int lo, int hi, const std::vector<Frac>& u, const std::vector<Frac>& v) {
        Frac s{0, 1};
        for (int i = lo; i < hi; ++i) {
            if (u[i].is_zero()) continue;
            for (int j = lo; j < hi; ++j) s += u[i] * L.gram[i][j] * v[j];
        }
        return s;
    };
    if (sp.degree.kind == DegreeRule::Kind::printed_symplectic) {
        int sp_ = sp.degree.split;
        std::vector<Frac> BmL = B;
        for (int i = sp_; i < L.dim; ++i) BmL[i] -= sp.degree.aux.at(i - sp_);
        return quad(0, sp_, B, B) - quad(sp_, L.dim, B, BmL);
    }
    Frac norm = quad(0, L.dim, B, B);
    Frac lnorm = quad(0, L.dim, rep, rep);
    return -(norm - lnorm) / (sp.degree.k + sp.degree.k);
}

} // namespace

Frac degree_of(const SpaceSpec& sp, const BasisVector& bv) {
    Frac d{0, 1};
    for (const auto& b : bv.bosons) d -= Frac{b[2], 1};
    for (long long f : bv.ferm2) d -= Frac{f, 2};
    return d + lattice_degree(sp, bv.coset, bv.lat);
}

namespace {

// integer points x with quad energy <= budget, positive-definite path:
// Q(rep + x) - Q(rep) <= 2k * budget
struct PdEnum {
    int n;
    std::vector<Frac> diag;
    std::vector<std::vector<Frac>> l;
    std::vector<Frac> rep;
    Frac bound; // on Q(rep+x)
    std::vector<long long> cur;
    std::vector<std::vector<long long>>* out;

    void run(int i, const Frac& rem, std::vector<Frac>& ys) {
        if (i < 0) {
            out->push_back(cur);
            return;
        }
        Frac c{0, 1};
        for (int j = i + 1; j < n; ++j) c += l[i][j] * ys[j];
        Frac s = rep[i] + c; // t_i = x_i + s
        auto fits = [&](long long x) {
            Frac t = Frac{x, 1} + s;
            return !(rem < diag[i] * t * t);
        };
        Frac fl = (-s).floor();
        long long x0 = fl.num; // floor(-s)
        for (long long x = x0; fits(x); --x) {
            cur[i] = x;
            Frac t = Frac{x, 1} + s;
            ys[i] = rep[i] + Frac{x, 1};
            run(i - 1, rem - diag[i] * t * t, ys);
        }
        for (long long x = x0 + 1; fits(x); ++x) {
            cur[i] = x;
            Frac t = Frac{x, 1} + s;
            ys[i] = rep[i] + Frac{x, 1};
            run(i - 1, rem - diag[i] * t * t, ys);
        }
        cur[i] = 0;
        ys[i] = rep[i];
    }
};

// Cholesky-style decomposition over the rationals; returns false unless
// positive definite.
bool frac_cholesky(std::vector<std::vector<Frac>> a, std::vector<Frac>& diag,
                   std::vector<std::vector<Frac>>& l) {
    int n = static_cast<int>(a.size());
    diag.assign(n, Frac{0, 1});
    l.assign(n, std::vector<Frac>(n, Frac{0, 1}));
    for (int i = 0; i < n; ++i) {
        if (!(Frac{0, 1} < a[i][i])) return false;
        diag[i] = a[i][i];
        for (int j = i + 1; j < n; ++j) l[i][j] = a[i][j] / diag[i];
        for (int j = i + 1; j < n; ++j)
            for (int m = i + 1; m < n; ++m) a[j][m] -= diag[i] * l[i][j] * l[i][m];
    }
    return true;
}

std::vector<std::vector<long long>> lattice_points(const SpaceSpec& sp, int coset,
                                                   const Frac& emax, int cap) {
    const LatticeSpec& L = sp.lattice;
    std::vector<std::vector<long long>> pts;
    if (L.dim == 0) {
        pts.push_back({});
        return pts;
    }
    const std::vector<Frac>& rep = L.cosets.at(coset);
    bool pd_path = sp.degree.kind == DegreeRule::Kind::standard && Frac{0, 1} < sp.degree.k;
    std::vector<Frac> diag;
    std::vector<std::vector<Frac>> l;
    if (pd_path && frac_cholesky(L.gram, diag, l)) {
        Frac repnorm{0, 1};
        for (int i = 0; i < L.dim; ++i)
            for (int j = 0; j < L.dim; ++j) repnorm += rep[i] * L.gram[i][j] * rep[j];
        PdEnum en;
        en.n = L.dim;
        en.diag = diag;
        en.l = l;
        en.rep = rep;
        en.bound = (sp.degree.k + sp.degree.k) * emax + repnorm;
        en.cur.assign(L.dim, 0);
        en.out = &pts;
        std::vector<Frac> ys(rep);
        en.run(L.dim - 1, en.bound, ys);
        return pts;
    }
    // box fallback for indefinite pairings
    std::vector<long long> x(L.dim, -cap);
    while (true) {
        if (!(emax < -lattice_degree(sp, coset, x))) pts.push_back(x);
        int i = 0;
        for (; i < L.dim; ++i) {
            if (x[i] < cap) {
                ++x[i];
                break;
            }
            x[i] = -cap;
        }
        if (i == L.dim) break;
    }
    return pts;
}

void boson_multisets(const SpaceSpec& sp, long energy,
                     std::vector<std::vector<std::array<int, 3>>>& out) {
    // slots: (family, index) pairs in order
    std::vector<std::pair<int, int>> slots;
    for (size_t f = 0; f < sp.bosons.size(); ++f)
        for (int i = 0; i < sp.bosons[f].count(); ++i) slots.push_back({static_cast<int>(f), i});
    std::vector<std::array<int, 3>> cur;
    // within a slot: parts listed non-increasing to avoid duplicates
    std::function<void(size_t, long, long)> rec = [&](size_t si, long rem, long maxpart) {
        if (rem == 0 && si == slots.size()) {
            out.push_back(cur);
            return;
        }
        if (si == slots.size()) return;
        if (maxpart == 0) {
            // move to next slot
            rec(si + 1, rem, rem <= 0 ? 0 : rem);
            return;
        }
        // either skip this slot entirely, or place parts
        // place a part of size p <= maxpart, p <= rem
        rec(si, rem, 0); // finish slot (no more parts here)
        auto [f, i] = slots[si];
        for (long p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back({f, i, static_cast<int>(p)});
            rec(si, rem - p, p);
            cur.pop_back();
        }
    };
    rec(0, energy, energy);
}

void fermion_wedges(const SpaceSpec& sp, const Frac& emax,
                    std::vector<std::pair<std::vector<long long>, Frac>>& out) {
    if (!sp.fermion.present) {
        out.push_back({{}, Frac{0, 1}});
        return;
    }
    long long first = sp.fermion.half ? 1 : 2; // doubled weights: 1/2 -> 1, 1 -> 2
    std::vector<long long> cur;
    std::function<void(long long, Frac)> rec = [&](long long minw2, Frac used) {
        out.push_back({cur, used});
        for (long long w2 = minw2;; w2 += 2) {
            Frac nu = used + Frac{w2, 2};
            if (emax < nu) break;
            cur.push_back(w2);
            rec(w2 + 2, nu);
            cur.pop_back();
        }
    };
    rec(first, Frac{0, 1});
    // wedges were built increasing; store strictly decreasing
    for (auto& [w, e] : out) std::reverse(w.begin(), w.end());
}

} // namespace

std::vector<BasisVector> basis_at_degree(const SpaceSpec& sp, const Frac& deg, int cap) {
    std::vector<BasisVector> out;
    Frac energy = -deg;
    int ncos = sp.lattice.dim == 0 ? 1 : static_cast<int>(sp.lattice.cosets.size());
    int ntag = sp.fermion.present ? sp.fermion.tagdim : 1;
    std::vector<std::pair<std::vector<long long>, Frac>> wedges;
    Frac wedge_emax = energy; // fermion energy can't exceed total unless lattice degree is positive
    bool pd = sp.degree.kind == DegreeRule::Kind::standard && Frac{0, 1} < sp.degree.k;
    if (!pd) wedge_emax = energy + Frac{2 * cap * cap * sp.lattice.dim * 4, 1}; // generous
    fermion_wedges(sp, wedge_emax, wedges);
    for (int c = 0; c < ncos; ++c) {
        auto pts = lattice_points(sp, c, energy, cap);
        for (const auto& x : pts) {
            Frac elat = -lattice_degree(sp, c, x);
            for (const auto& [w, ef] : wedges) {
                Frac eb = energy - elat - ef;
                if (eb < Frac{0, 1} || !eb.is_integer()) continue;
                std::vector<std::vector<std::array<int, 3>>> boss;
                boson_multisets(sp, static_cast<long>(eb.to_int()), boss);
                for (const auto& bos : boss) {
                    for (int t = 0; t < ntag; ++t) {
                        BasisVector bv;
                        bv.bosons = bos;
                        bv.lat = x;
                        bv.ferm2 = w;
                        bv.coset = c;
                        bv.tag = t;
                        if (sector_ok(sp, bv)) out.push_back(std::move(bv));
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long graded_dim(const SpaceSpec& sp, const Frac& deg, int cap) {
    return static_cast<long>(basis_at_degree(sp, deg, cap).size());
}

} // namespace qza
