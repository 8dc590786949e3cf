#include "qza/eval.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "qza/qseries.hpp"

namespace qza {

namespace {

struct Term {
    BasisVector bv;
    QRat coeff;
    std::vector<Frac> e;  // accumulated exponent per variable
    std::vector<Frac> md; // per-member exponent delta, live while a group is being applied
};

bool term_key_less(const Term& a, const Term& b) {
    return std::tie(a.bv, a.e, a.md) < std::tie(b.bv, b.e, b.md);
}

// combine terms with identical (state, exponents, member deltas)
void merge_terms(std::vector<Term>& ts) {
    if (ts.size() < 2) return;
    std::sort(ts.begin(), ts.end(), term_key_less);
    std::vector<Term> out;
    for (auto& t : ts) {
        if (!out.empty() && !term_key_less(out.back(), t) && !term_key_less(t, out.back()))
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
    ts.swap(out);
}

// bilinear pairing (cov | coset rep + lat + delta) + off
Frac cov_pair(const SpaceSpec& sp, const std::vector<Frac>& cov, const BasisVector& bv,
              const std::vector<long long>* delta, Frac off) {
    Frac acc = off;
    const auto& rep = sp.lattice.cosets.at(bv.coset);
    size_t n = cov.size();
    for (size_t i = 0; i < n; ++i) {
        if (cov[i] == Frac(0)) continue;
        for (size_t j = 0; j < n; ++j) {
            Frac g = sp.lattice.gram[i][j];
            if (g == Frac(0)) continue;
            Frac bj = rep[j] + Frac(bv.lat[j] + (delta ? (*delta)[j] : 0));
            acc = acc + cov[i] * g * bj;
        }
    }
    return acc;
}

Frac ferm_total(const BasisVector& bv) {
    long long s = 0;
    for (long long w : bv.ferm2) s += w;
    return Frac(s, 2);
}

// total mode weight an annihilator with the given generators can absorb: only
// modes whose index pairs nontrivially with one of the generators count
Frac fam_weight(const SpaceSpec& sp, const BasisVector& bv,
                const std::vector<std::array<int, 2>>& gens) {
    long long s = 0;
    for (const auto& b : bv.bosons) {
        bool coupled = false;
        for (const auto& g : gens)
            if (g[0] == b[0] && !(sp.bosons[g[0]].gram[g[1]][b[1]] == Frac(0))) {
                coupled = true;
                break;
            }
        if (coupled) s += b[2];
    }
    return Frac(s);
}

class Engine {
  public:
    Engine(const SpaceSpec& sp, const ProductExpr& pe, const std::vector<EvalWindow>& win)
        : sp_(sp), pe_(pe), win_(win), nv_(static_cast<int>(pe.fields.size())) {
        if (static_cast<int>(win.size()) != nv_)
            throw std::invalid_argument("evaluate_product: one window per variable required");
        for (const auto& w : win)
            if (w.hi < w.lo) throw std::invalid_argument("evaluate_product: window hi < lo");
        for (const auto& cs : pe_.cross) {
            if (cs.num_var < 0 || cs.num_var >= nv_ || cs.den_var < 0 || cs.den_var >= nv_ ||
                cs.num_var == cs.den_var)
                throw std::invalid_argument("evaluate_product: bad scalar variable pair");
        }
        if (pe_.scalar.is_zero()) throw std::invalid_argument("evaluate_product: zero prefactor");
    }

    ExtractMap run(const BasisVector& u) {
        ExtractMap out;
        std::vector<size_t> combo(pe_.fields.size(), 0);
        run_combos(u, 0, combo, out);
        for (auto it = out.begin(); it != out.end();) {
            std::erase_if(it->second, [](const auto& kv) { return kv.second.is_zero(); });
            if (it->second.empty())
                it = out.erase(it);
            else
                ++it;
        }
        return out;
    }

  private:
    const SpaceSpec& sp_;
    const ProductExpr& pe_;
    std::vector<EvalWindow> win_;
    int nv_;

    void run_combos(const BasisVector& u, size_t fi, std::vector<size_t>& combo, ExtractMap& out) {
        if (fi == pe_.fields.size()) {
            run_pure(u, combo, out);
            return;
        }
        for (size_t b = 0; b < pe_.fields[fi].branches.size(); ++b) {
            combo[fi] = b;
            run_combos(u, fi + 1, combo, out);
        }
    }

    // Guard against orderings the exponent-cap argument cannot cover: within
    // one variable no annihilation half of a family may act after (left of) a
    // creation half of the same family outside its own normal-ordered group.
    void check_order(const std::vector<Factor>& fl) const {
        // (family, index) pairs; {-1, 0} stands for the fermion slot
        std::set<std::array<int, 2>> cre_seen;
        for (auto it = fl.rbegin(); it != fl.rend(); ++it) {
            const Factor& f = *it;
            if (f.kind == Factor::Kind::fermion_series) {
                if (cre_seen.count({-1, 0}))
                    throw std::logic_error("field expression: fermion contraction after creation");
                cre_seen.insert({-1, 0});
            } else if (f.kind == Factor::Kind::group) {
                for (const auto& m : f.members)
                    if (m.ann_coef)
                        for (const auto& g : m.gens)
                            for (const auto& c : cre_seen)
                                if (c[0] == g[0] &&
                                    !(sp_.bosons[g[0]].gram[g[1]][c[1]] == Frac(0)))
                                    throw std::logic_error("field expression: annihilator left "
                                                           "of a coupled creator");
                for (const auto& m : f.members)
                    if (m.cre_coef)
                        for (const auto& g : m.gens) cre_seen.insert(g);
            }
        }
    }

    bool field_creates(const std::vector<Factor>& fl) const {
        for (const auto& f : fl) {
            if (f.kind == Factor::Kind::fermion_series) return true;
            if (f.kind == Factor::Kind::group)
                for (const auto& m : f.members)
                    if (m.cre_coef) return true;
        }
        return false;
    }

    // Slack granted to variable v beyond win_[v].hi: a later scalar factor
    // z_num^m / z_v^m can pull an overshoot back down by up to the headroom
    // still available on its numerator variable.
    Frac den_allowance(int v, const std::vector<Term>& terms,
                       const std::vector<Factor>& fl) const {
        Frac allow(0);
        bool creates = field_creates(fl);
        for (const auto& cs : pe_.cross) {
            if (cs.den_var != v) continue;
            if (!creates) continue;
            if (cs.num_var < v)
                throw std::logic_error(
                    "evaluate_product: scalar lowers a variable whose field still creates");
            if (terms.empty()) continue;
            Frac mn = terms.front().e[cs.num_var];
            for (const auto& t : terms) mn = std::min(mn, t.e[cs.num_var]);
            Frac head = win_[cs.num_var].hi - mn;
            if (head > Frac(0)) allow = allow + head;
        }
        return allow;
    }

    // Lower bound on the total exponent contribution variable v still has to
    // absorb from the factors at positions < p (those applied after fl[p]).
    Frac min_remaining(const std::vector<Factor>& fl, int p, const Term& t) const {
        Frac acc(0);
        std::vector<long long> delta(sp_.lattice.dim, 0);
        for (int q = p - 1; q >= 0; --q) {
            const Factor& f = fl[q];
            switch (f.kind) {
            case Factor::Kind::monomial:
                acc = acc + f.zshift;
                break;
            case Factor::Kind::z_power:
                acc = acc + cov_pair(sp_, f.zcov, t.bv, &delta, f.zoff);
                break;
            case Factor::Kind::lattice_shift:
                for (size_t i = 0; i < delta.size(); ++i) delta[i] += f.shift[i];
                break;
            case Factor::Kind::fermion_series:
                acc = acc - ferm_total(t.bv);
                break;
            case Factor::Kind::group: {
                for (const auto& m : f.members) {
                    if (m.ann_coef) acc = acc - fam_weight(sp_, t.bv, m.gens);
                    if (!m.zcov.empty()) acc = acc + cov_pair(sp_, m.zcov, t.bv, &delta, m.zoff);
                    acc = acc - Frac(m.qdiff);
                }
                for (const auto& m : f.members)
                    if (!m.shift.empty())
                        for (size_t i = 0; i < delta.size(); ++i) delta[i] += m.shift[i];
                break;
            }
            default:
                break; // label powers and parity signs carry no z-exponent
            }
        }
        return acc;
    }

    void run_pure(const BasisVector& u, const std::vector<size_t>& combo, ExtractMap& out) {
        QRat c0 = pe_.scalar;
        for (size_t fi = 0; fi < pe_.fields.size(); ++fi)
            c0 = c0 * pe_.fields[fi].branches[combo[fi]].coeff;
        if (c0.is_zero()) return;
        std::vector<Term> terms;
        terms.push_back(Term{u, c0, std::vector<Frac>(nv_, Frac(0)), {}});

        for (int v = nv_ - 1; v >= 0; --v) {
            const auto& fl = pe_.fields[v].branches[combo[v]].factors;
            check_order(fl);
            Frac hi_eff = win_[v].hi + den_allowance(v, terms, fl);
            for (int p = static_cast<int>(fl.size()) - 1; p >= 0; --p) {
                apply_factor(terms, fl, p, v, hi_eff);
                merge_terms(terms);
                if (terms.empty()) break;
            }
            if (terms.empty()) break;
        }
        apply_cross(terms);
        for (auto& t : terms) {
            bool keep = true;
            for (int v = 0; v < nv_; ++v)
                if (t.e[v] < win_[v].lo || win_[v].hi < t.e[v]) {
                    keep = false;
                    break;
                }
            if (keep && !t.coeff.is_zero()) state_add(out[t.e], t.bv, t.coeff);
        }
    }

    void apply_factor(std::vector<Term>& terms, const std::vector<Factor>& fl, int p, int v,
                      const Frac& hi_eff) {
        const Factor& f = fl[p];
        switch (f.kind) {
        case Factor::Kind::monomial:
            for (auto& t : terms) {
                t.e[v] = t.e[v] + f.zshift;
                t.coeff *= f.mcoef;
            }
            break;
        case Factor::Kind::z_power:
            for (auto& t : terms) t.e[v] = t.e[v] + cov_pair(sp_, f.zcov, t.bv, nullptr, f.zoff);
            break;
        case Factor::Kind::label_q_pow:
            for (auto& t : terms) {
                Frac val = f.mult * cov_pair(sp_, f.zcov, t.bv, nullptr, Frac(0)) + f.zoff;
                t.coeff *= QRat::q_power(val, t.coeff.root_order());
            }
            break;
        case Factor::Kind::parity_sign:
            for (auto& t : terms) {
                Frac s = cov_pair(sp_, f.zcov, t.bv, nullptr, f.zoff);
                if (!s.is_integer())
                    throw std::logic_error("parity sign on non-integral label pairing");
                if (s.to_int() % 2 != 0) t.coeff = -t.coeff;
            }
            break;
        case Factor::Kind::lattice_shift:
            for (auto& t : terms) {
                if (cocycle_sign(sp_.lattice, f.shift, t.bv.lat) < 0) t.coeff = -t.coeff;
                for (size_t i = 0; i < f.shift.size(); ++i) t.bv.lat[i] += f.shift[i];
            }
            break;
        case Factor::Kind::fermion_series:
            apply_fermion(terms, fl, p, v, hi_eff, f);
            break;
        case Factor::Kind::group:
            apply_group(terms, fl, p, v, hi_eff, f);
            break;
        }
    }

    void apply_fermion(std::vector<Term>& terms, const std::vector<Factor>& fl, int p, int v,
                       const Frac& hi_eff, const Factor& f) {
        std::vector<Term> out;
        for (auto& t : terms) {
            Frac mr = min_remaining(fl, p, t);
            // contractions against every weight present
            for (long long w2 : t.bv.ferm2) {
                State s = fermion_apply(sp_, w2, t.bv, t.coeff * f.fcoef);
                for (auto& [bv2, c2] : s) {
                    Term nt{bv2, c2, t.e, t.md};
                    nt.e[v] = nt.e[v] - Frac(w2, 2);
                    out.push_back(std::move(nt));
                }
            }
            // zero mode in the integer-moded sector
            if (!sp_.fermion.half) {
                State s = fermion_apply(sp_, 0, t.bv, t.coeff * f.fcoef);
                for (auto& [bv2, c2] : s) out.push_back(Term{bv2, c2, t.e, t.md});
            }
            // creations up to the cap
            Frac cap = hi_eff - t.e[v] - mr;
            long long m2 = sp_.fermion.half ? 1 : 2;
            for (; Frac(m2, 2) <= cap; m2 += 2) {
                State s = fermion_apply(sp_, -m2, t.bv, t.coeff * f.fcoef);
                for (auto& [bv2, c2] : s) {
                    Term nt{bv2, c2, t.e, t.md};
                    nt.e[v] = nt.e[v] + Frac(m2, 2);
                    out.push_back(std::move(nt));
                }
            }
        }
        terms.swap(out);
    }

    // one application of the annihilation generator sum of member m, divided by r
    std::vector<Term> ann_step(const std::vector<Term>& layer, const GroupMember& gm, int mi,
                               int v, long r) const {
        std::vector<Term> next;
        for (const auto& t : layer) {
            for (size_t j = 0; j < gm.gens.size(); ++j) {
                int fam = gm.gens[j][0], idx = gm.gens[j][1];
                std::set<long long> modes;
                for (const auto& b : t.bv.bosons)
                    if (b[0] == fam) modes.insert(b[2]);
                for (long long n : modes) {
                    QRat c = gm.ann_coef(n) * gm.gen_weights[j] *
                             QRat::rational(1, r, t.coeff.root_order());
                    if (c.is_zero()) continue;
                    State s = boson_apply(sp_, fam, idx, n, t.bv, t.coeff * c);
                    for (auto& [bv2, c2] : s) {
                        Term nt{bv2, c2, t.e, t.md};
                        nt.e[v] = nt.e[v] - Frac(n);
                        nt.md[mi] = nt.md[mi] - Frac(n);
                        next.push_back(std::move(nt));
                    }
                }
            }
        }
        return next;
    }

    std::vector<Term> cre_step(const std::vector<Term>& layer, const GroupMember& gm, int mi,
                               int v, long r, const Frac& cap_base) const {
        std::vector<Term> next;
        for (const auto& t : layer) {
            Frac cap = cap_base - t.e[v];
            if (cap < Frac(1)) continue;
            long long nmax = cap.floor();
            for (long long n = 1; n <= nmax; ++n) {
                for (size_t j = 0; j < gm.gens.size(); ++j) {
                    QRat c = gm.cre_coef(n) * gm.gen_weights[j] *
                             QRat::rational(1, r, t.coeff.root_order());
                    if (c.is_zero()) continue;
                    State s =
                        boson_apply(sp_, gm.gens[j][0], gm.gens[j][1], -n, t.bv, t.coeff * c);
                    for (auto& [bv2, c2] : s) {
                        Term nt{bv2, c2, t.e, t.md};
                        nt.e[v] = nt.e[v] + Frac(n);
                        nt.md[mi] = nt.md[mi] + Frac(n);
                        next.push_back(std::move(nt));
                    }
                }
            }
        }
        return next;
    }

    void apply_group(std::vector<Term>& terms, const std::vector<Factor>& fl, int p, int v,
                     const Frac& hi_eff, const Factor& f) {
        int nm = static_cast<int>(f.members.size());
        for (auto& t : terms) t.md.assign(nm, Frac(0));
        long qdiff_total = 0;
        for (const auto& m : f.members) qdiff_total += m.qdiff;

        // annihilation halves, rightmost member first
        for (int mi = nm - 1; mi >= 0; --mi) {
            const auto& gm = f.members[mi];
            if (!gm.ann_coef) continue;
            std::vector<Term> acc = terms;
            std::vector<Term> layer = std::move(terms);
            for (long r = 1; !layer.empty(); ++r) {
                layer = ann_step(layer, gm, mi, v, r);
                merge_terms(layer);
                for (const auto& t : layer) acc.push_back(t);
            }
            terms = std::move(acc);
            merge_terms(terms);
        }

        // zero-mode z powers, read off the label before any member shift
        for (int mi = nm - 1; mi >= 0; --mi) {
            const auto& gm = f.members[mi];
            if (gm.zcov.empty()) continue;
            for (auto& t : terms) {
                Frac val = cov_pair(sp_, gm.zcov, t.bv, nullptr, gm.zoff);
                t.e[v] = t.e[v] + val;
                t.md[mi] = t.md[mi] + val;
            }
        }

        // lattice shifts, rightmost member first
        for (int mi = nm - 1; mi >= 0; --mi) {
            const auto& gm = f.members[mi];
            if (gm.shift.empty()) continue;
            for (auto& t : terms) {
                if (cocycle_sign(sp_.lattice, gm.shift, t.bv.lat) < 0) t.coeff = -t.coeff;
                for (size_t i = 0; i < gm.shift.size(); ++i) t.bv.lat[i] += gm.shift[i];
            }
        }

        // creation halves, capped; pending q-difference steps refund exponent
        for (int mi = nm - 1; mi >= 0; --mi) {
            const auto& gm = f.members[mi];
            if (!gm.cre_coef) continue;
            std::vector<Term> acc = terms;
            std::vector<Term> layer = std::move(terms);
            for (long r = 1; !layer.empty(); ++r) {
                std::vector<Term> next;
                for (const auto& t : layer) {
                    Frac cap_base = hi_eff + Frac(qdiff_total) - min_remaining(fl, p, t);
                    std::vector<Term> one{t};
                    auto stepped = cre_step(one, gm, mi, v, r, cap_base);
                    for (auto& s : stepped) next.push_back(std::move(s));
                }
                merge_terms(next);
                layer = std::move(next);
                for (const auto& t : layer) acc.push_back(t);
            }
            terms = std::move(acc);
            merge_terms(terms);
        }

        // member finalization: q-difference steps, then argument rescale
        for (auto& t : terms) {
            for (int mi = 0; mi < nm; ++mi) {
                const auto& gm = f.members[mi];
                for (int r = 0; r < gm.qdiff; ++r) {
                    Frac d = t.md[mi] - Frac(r);
                    t.coeff *= q_int_base(d, Frac(1, 2), t.coeff.root_order());
                }
                if (gm.qdiff > 0) {
                    t.md[mi] = t.md[mi] - Frac(gm.qdiff);
                    t.e[v] = t.e[v] - Frac(gm.qdiff);
                }
                if (!(gm.argscale == Frac(0)))
                    t.coeff *= QRat::q_power(gm.argscale * t.md[mi], t.coeff.root_order());
            }
            t.md.clear();
        }
        std::erase_if(terms, [](const Term& t) { return t.coeff.is_zero(); });
    }

    void apply_cross(std::vector<Term>& terms) {
        if (pe_.cross.empty()) return;
        // finite factors first, then infinite series ordered by numerator
        std::vector<const CrossScalar*> finite, infinite;
        for (const auto& cs : pe_.cross) {
            if (cs.kind == CrossScalar::Kind::linear || cs.kind == CrossScalar::Kind::one_minus)
                finite.push_back(&cs);
            else
                infinite.push_back(&cs);
        }
        std::stable_sort(infinite.begin(), infinite.end(),
                         [](const CrossScalar* a, const CrossScalar* b) {
                             return a->num_var < b->num_var;
                         });
        for (const CrossScalar* cs : finite) {
            std::vector<Term> out;
            for (auto& t : terms) {
                if (cs->kind == CrossScalar::Kind::linear) {
                    Term t1 = t;
                    t1.coeff *= cs->lead;
                    t1.e[cs->den_var] = t1.e[cs->den_var] + Frac(1);
                    out.push_back(std::move(t1));
                    Term t2 = std::move(t);
                    t2.coeff *= -cs->tail;
                    t2.e[cs->num_var] = t2.e[cs->num_var] + Frac(1);
                    out.push_back(std::move(t2));
                } else { // 1 - c w/z
                    Term t2 = t;
                    t2.coeff *= -cs->c;
                    t2.e[cs->num_var] = t2.e[cs->num_var] + Frac(1);
                    t2.e[cs->den_var] = t2.e[cs->den_var] - Frac(1);
                    out.push_back(std::move(t));
                    out.push_back(std::move(t2));
                }
            }
            terms.swap(out);
            merge_terms(terms);
        }
        for (size_t si = 0; si < infinite.size(); ++si) {
            const CrossScalar& cs = *infinite[si];
            // numerator-side headroom is only a valid cut when no later series
            // can lower that variable again
            bool num_clean = true;
            for (size_t sj = si + 1; sj < infinite.size(); ++sj)
                if (infinite[sj]->den_var == cs.num_var) num_clean = false;
            if (terms.empty()) continue;
            std::vector<Term> out;
            // longest expansion needed across terms, for one shared series
            long long mglobal = 0;
            std::vector<long long> mmaxper(terms.size(), -1);
            for (size_t ti = 0; ti < terms.size(); ++ti) {
                const auto& t = terms[ti];
                Frac den_room = t.e[cs.den_var] - win_[cs.den_var].lo;
                if (den_room < Frac(0)) continue;
                long long m = den_room.floor();
                if (num_clean) {
                    Frac num_room = win_[cs.num_var].hi - t.e[cs.num_var];
                    if (num_room < Frac(0)) continue;
                    m = std::min(m, num_room.floor());
                }
                mmaxper[ti] = m;
                mglobal = std::max(mglobal, m);
            }
            unsigned D = terms.front().coeff.root_order();
            TruncatedSeries ser =
                TruncatedSeries::constant(QRat::integer(1, D), Frac(mglobal), D);
            if (cs.kind == CrossScalar::Kind::one_minus_inv) {
                QRat cm = QRat::integer(1, D);
                for (long long m = 1; m <= mglobal; ++m) {
                    cm = cm * cs.c;
                    ser.add_term(Frac(m), cm);
                }
            } else { // qk_power
                ser = qk_power_series(cs.a, cs.k, cs.c, Frac(mglobal), D,
                                      PowerSeriesRoute::exponential);
            }
            for (size_t ti = 0; ti < terms.size(); ++ti) {
                if (mmaxper[ti] < 0) continue;
                const Term& t = terms[ti];
                for (long long m = 0; m <= mmaxper[ti]; ++m) {
                    QRat sc = ser.coeff(Frac(m));
                    if (sc.is_zero()) continue;
                    Term nt = t;
                    nt.coeff *= sc;
                    nt.e[cs.num_var] = nt.e[cs.num_var] + Frac(m);
                    nt.e[cs.den_var] = nt.e[cs.den_var] - Frac(m);
                    out.push_back(std::move(nt));
                }
            }
            terms.swap(out);
            merge_terms(terms);
        }
    }
};

} // namespace

ExtractMap evaluate_product(const SpaceSpec& sp, const ProductExpr& pe, const BasisVector& u,
                            const std::vector<EvalWindow>& win) {
    Engine eng(sp, pe, win);
    return eng.run(u);
}

std::map<Frac, State> evaluate_field(const SpaceSpec& sp, const FieldExpr& fe,
                                     const BasisVector& u, const EvalWindow& win) {
    ProductExpr pe;
    pe.scalar = QRat::integer(1, sp.D);
    pe.fields.push_back(fe);
    auto full = evaluate_product(sp, pe, u, {win});
    std::map<Frac, State> out;
    for (auto& [key, st] : full) out[key[0]] = std::move(st);
    return out;
}

} // namespace qza
