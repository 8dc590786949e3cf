#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qza/eval.hpp"
#include "qza/qseries.hpp"
#include "qza/rep.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace qza;

namespace {

Frac fr(long long n, long long d = 1) { return Frac{n, d}; }

RepConfig make_cfg(std::string id, LieType t, int rank, Frac level, int weight = 0) {
    RepConfig c;
    c.id = std::move(id);
    c.type = t;
    c.rank = rank;
    c.level = level;
    c.weight = weight;
    return c;
}

QRat one(const Representation& r) { return QRat::integer(1, r.space().D); }
QRat qpw(const Representation& r, const Frac& e) { return QRat::q_power(e, r.space().D); }
QRat qmq(const Representation& r) { return qpw(r, fr(1)) - qpw(r, fr(-1)); }

State hw_state(const Representation& r) { return State{{r.hwv(), one(r)}}; }

BasisVector bv_lat(std::vector<long long> lat) {
    BasisVector bv;
    bv.lat = std::move(lat);
    return bv;
}

State sub(const Representation& r, State a, const State& b) {
    state_add(a, b, QRat::integer(-1, r.space().D));
    return a;
}

// x_i^{sign}(n) v, reading one component off the field expansion
State apply_mode(const Representation& r, int i, int sign, long n, const State& v) {
    FieldExpr fe = r.x_field(i, sign);
    Frac e = fr(-n) - r.ladder_offset(i, sign);
    State out;
    for (const auto& [bv, c] : v) {
        auto res = evaluate_field(r.space(), fe, bv, EvalWindow{e, e});
        auto it = res.find(e);
        if (it != res.end()) state_add(out, it->second, c);
    }
    return out;
}

void partitions_rec(long p, long cap, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
    if (p == 0) {
        out.push_back(cur);
        return;
    }
    for (long part = std::min(p, cap); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(p - part, part, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<long>> partitions(long p) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    partitions_rec(p, p, cur, out);
    return out;
}

// psi_i(p) v for dir = +1 and phi_i(-p) v for dir = -1, p >= 0, expanded
// directly from the exponential of Heisenberg modes followed by the
// group-like factor.  Serves as the independent oracle for ladder brackets.
State cartan_series(const Representation& r, int i, long p, int dir, const State& v) {
    unsigned D = r.space().D;
    QRat base = dir > 0 ? qmq(r) : -qmq(r);
    State acc;
    for (const auto& lam : partitions(p)) {
        State t = v;
        QRat c = QRat::integer(1, D);
        for (long part : lam) {
            t = r.a_mode(i, dir * part, t);
            c = c * base;
        }
        long long fact = 1;
        size_t a = 0;
        while (a < lam.size()) {
            size_t b = a;
            while (b < lam.size() && lam[b] == lam[a]) ++b;
            for (size_t m = 2; m <= b - a; ++m) fact *= static_cast<long long>(m);
            a = b;
        }
        state_add(acc, t, c * QRat::rational(1, fact, D));
    }
    State out;
    for (const auto& [bv, c] : acc) {
        Frac kp = r.k_pair(i, bv);
        state_add(out, bv, c * qpw(r, dir > 0 ? kp : fr(0) - kp));
    }
    return out;
}

State xpm_rhs(const Representation& r, int i, int j, long m, long n, const State& v) {
    State out;
    if (i != j) return out;
    long p = m + n;
    Frac k = r.level();
    if (p >= 0) state_add(out, cartan_series(r, i, p, +1, v), qpw(r, k * fr(m - n) / fr(2)));
    if (p <= 0) state_add(out, cartan_series(r, i, -p, -1, v), -qpw(r, k * fr(n - m) / fr(2)));
    QRat den = qpw(r, r.qden(i)) - qpw(r, fr(0) - r.qden(i));
    return state_scaled(out, one(r) / den);
}

State xpm_lhs(const Representation& r, int i, int j, long m, long n, const State& v) {
    State a = apply_mode(r, i, +1, m, apply_mode(r, j, -1, n, v));
    State b = apply_mode(r, j, -1, n, apply_mode(r, i, +1, m, v));
    return sub(r, std::move(a), b);
}

bool xpm_holds(const Representation& r, int i, int j, long m, long n, const State& v) {
    return state_equal(xpm_lhs(r, i, j, m, n, v), xpm_rhs(r, i, j, m, n, v));
}

// checks [x_i^+(m), x_j^-(n)] against the Cartan series over a mode square,
// returning how many instances had something nonzero on either side
int xpm_grid(const Representation& r, int i, int j, long lo, long hi, const State& v) {
    int live = 0;
    for (long m = lo; m <= hi; ++m)
        for (long n = lo; n <= hi; ++n) {
            State lhs = xpm_lhs(r, i, j, m, n, v);
            State rhs = xpm_rhs(r, i, j, m, n, v);
            if (!state_is_zero(lhs) || !state_is_zero(rhs)) ++live;
            CHECK_MESSAGE(state_equal(lhs, rhs),
                          "nodes (" << i << "," << j << ") modes (" << m << "," << n << "): "
                                    << state_to_string(lhs) << " vs " << state_to_string(rhs));
        }
    return live;
}

bool ax_holds(const Representation& r, int ai, int xj, int sign, long m, long n,
              const State& v) {
    State t1 = r.a_mode(ai, m, apply_mode(r, xj, sign, n, v));
    State t2 = apply_mode(r, xj, sign, n, r.a_mode(ai, m, v));
    State lhs = sub(r, std::move(t1), t2);
    unsigned D = r.space().D;
    Frac p = r.space().bosons[0].gram[ai][xj];
    QRat coef = QRat::integer(sign, D) * q_int(p * fr(m), D) * QRat::rational(1, m, D) *
                qpw(r, fr(-sign) * r.level() * fr(m < 0 ? -m : m) / fr(2));
    State rhs = state_scaled(apply_mode(r, xj, sign, m + n, v), coef);
    return state_equal(lhs, rhs);
}

bool aa_holds(const Representation& r, int i, int j, long m, const State& v) {
    State t1 = r.a_mode(i, m, r.a_mode(j, -m, v));
    State t2 = r.a_mode(j, -m, r.a_mode(i, m, v));
    State lhs = sub(r, std::move(t1), t2);
    unsigned D = r.space().D;
    Frac p = r.space().bosons[0].gram[i][j];
    QRat coef = q_int(p * fr(m), D) * q_int(r.level() * fr(m), D) * QRat::rational(1, m, D);
    return state_equal(lhs, state_scaled(v, coef));
}

// every extracted component must move the degree by minus its exponent minus
// the registered offset, and must stay inside the parity sector
void grading_scan(const Representation& r, int depth, size_t fanout = 5) {
    std::vector<BasisVector> frontier = {r.hwv()};
    std::set<BasisVector> seen(frontier.begin(), frontier.end());
    for (int step = 0; step < depth; ++step) {
        std::vector<BasisVector> next;
        for (const auto& u : frontier) {
            Frac du = degree_of(r.space(), u);
            for (int i = 0; i < r.rank(); ++i)
                for (int s : {-1, +1}) {
                    auto res =
                        evaluate_field(r.space(), r.x_field(i, s), u, EvalWindow{fr(-2), fr(2)});
                    for (const auto& [e, st] : res)
                        for (const auto& [w, c] : st) {
                            (void)c;
                            Frac want = du - e - r.ladder_offset(i, s);
                            CHECK_MESSAGE(degree_of(r.space(), w) == want,
                                          r.config().id << " node " << i << " sign " << s
                                                        << ": exponent " << e.to_string()
                                                        << " lands on " << w.to_string());
                            CHECK(sector_ok(r.space(), w));
                            if (next.size() < fanout && seen.insert(w).second)
                                next.push_back(w);
                        }
                }
        }
        frontier = std::move(next);
    }
}

std::vector<RepConfig> canonical_configs() {
    std::vector<RepConfig> out = {
        make_cfg("fj", LieType::A, 1, fr(1)),
        make_cfg("fj", LieType::A, 1, fr(1), 1),
        make_cfg("fj", LieType::A, 2, fr(1)),
        make_cfg("fj", LieType::A, 2, fr(1), 1),
        make_cfg("fj", LieType::D, 4, fr(1)),
        make_cfg("bl1", LieType::B, 2, fr(1), 0),
        make_cfg("bl1", LieType::B, 2, fr(1), 1),
        make_cfg("bl1", LieType::B, 2, fr(1), 2),
        make_cfg("bl1", LieType::B, 3, fr(1), 0),
        make_cfg("sl2-l2", LieType::A, 1, fr(2)),
        make_cfg("sl2-l2-mixed", LieType::A, 1, fr(2)),
        make_cfg("wakimoto-sl2", LieType::A, 1, fr(1)),
        make_cfg("wakimoto-sl2", LieType::A, 1, fr(1, 2)),
        make_cfg("wakimoto-sl2", LieType::A, 1, fr(-1)),
        make_cfg("cl1", LieType::C, 2, fr(1), 0),
        make_cfg("cl1", LieType::C, 3, fr(1), 0),
        make_cfg("f4l1", LieType::F, 4, fr(1)),
        make_cfg("cl-neg-half", LieType::C, 2, fr(-1, 2)),
        make_cfg("g2l1", LieType::G, 2, fr(1)),
    };
    return out;
}

} // namespace

TEST_CASE("catalog builds and config validation throws") {
    CHECK(Representation::catalog().size() == 9);
    for (const auto& c : canonical_configs()) CHECK_NOTHROW(Representation::build(c));

    CHECK_THROWS_AS(Representation::build(make_cfg("nope", LieType::A, 1, fr(1))),
                    std::invalid_argument);
    CHECK_THROWS_AS(Representation::build(make_cfg("fj", LieType::B, 2, fr(1))),
                    std::invalid_argument);
    CHECK_THROWS_AS(Representation::build(make_cfg("fj", LieType::A, 1, fr(2))),
                    std::invalid_argument);
    CHECK_THROWS_AS(Representation::build(make_cfg("fj", LieType::A, 2, fr(1), 5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Representation::build(make_cfg("bl1", LieType::B, 1, fr(1))),
                    std::invalid_argument);
    CHECK_THROWS_AS(Representation::build(make_cfg("bl1", LieType::B, 3, fr(1), 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Representation::build(make_cfg("wakimoto-sl2", LieType::A, 1, fr(-2))),
                    std::invalid_argument);
    CHECK_THROWS_AS(Representation::build(make_cfg("cl1", LieType::C, 2, fr(2))),
                    std::invalid_argument);
    CHECK_THROWS_AS(Representation::build(make_cfg("cl1", LieType::C, 2, fr(1), 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Representation::build(make_cfg("sl2-l2", LieType::A, 2, fr(2))),
                    std::invalid_argument);
    CHECK_THROWS_AS(Representation::build(make_cfg("g2l1", LieType::G, 2, fr(2))),
                    std::invalid_argument);

    RepConfig bad = make_cfg("fj", LieType::A, 1, fr(1));
    bad.variants["no_such_knob"] = "x";
    CHECK_THROWS_AS(Representation::build(bad), std::invalid_argument);
    RepConfig badval = make_cfg("wakimoto-sl2", LieType::A, 1, fr(1));
    badval.variants["b_arg"] = "thirds";
    CHECK_THROWS_AS(Representation::build(badval), std::invalid_argument);
}

TEST_CASE("highest weight vector axioms across the catalog") {
    for (const auto& c : canonical_configs()) {
        auto r = Representation::build(c);
        State hw = hw_state(r);
        INFO(c.id << " rank " << c.rank << " weight " << c.weight);
        CHECK(degree_of(r.space(), r.hwv()) == fr(0));
        CHECK(sector_ok(r.space(), r.hwv()));
        for (int i = 0; i < r.rank(); ++i) {
            INFO("node " << i);
            CHECK(state_is_zero(apply_mode(r, i, +1, 0, hw)));
            CHECK(state_is_zero(apply_mode(r, i, +1, 1, hw)));
            CHECK(state_is_zero(apply_mode(r, i, -1, 1, hw)));
            CHECK(state_is_zero(apply_mode(r, i, -1, 2, hw)));
            bool marked = !(r.k_pair(i, r.hwv()) == fr(0));
            CHECK(state_is_zero(apply_mode(r, i, -1, 0, hw)) == !marked);
            if (!marked) {
                CHECK(!state_is_zero(apply_mode(r, i, +1, -1, hw)));
                CHECK(!state_is_zero(apply_mode(r, i, -1, -1, hw)));
            }
        }
    }
}

TEST_CASE("simply laced level one: frozen vacuum module actions") {
    auto r = Representation::build(make_cfg("fj", LieType::A, 1, fr(1)));
    State hw = hw_state(r);
    CHECK(r.level() == fr(1));
    CHECK(r.k_pair(0, r.hwv()) == fr(0));

    CHECK(state_equal(apply_mode(r, 0, +1, -1, hw), State{{bv_lat({1}), one(r)}}));
    CHECK(state_equal(apply_mode(r, 0, -1, -1, hw), State{{bv_lat({-1}), one(r)}}));

    BasisVector dressed = bv_lat({1});
    dressed.bosons = {{0, 0, 1}};
    CHECK(state_equal(apply_mode(r, 0, +1, -2, hw), State{{dressed, qpw(r, fr(-1, 2))}}));

    CHECK(state_equal(xpm_lhs(r, 0, 0, -1, 1, hw), state_scaled(hw, -one(r))));
    CHECK(state_equal(xpm_lhs(r, 0, 0, -2, 2, hw),
                      state_scaled(hw, -(qpw(r, fr(1)) + qpw(r, fr(-1))))));

    CHECK(xpm_grid(r, 0, 0, -2, 2, hw) >= 3);
    State down = apply_mode(r, 0, -1, -1, hw);
    State heis = r.a_mode(0, -1, hw);
    CHECK(xpm_grid(r, 0, 0, -1, 1, down) >= 2);
    CHECK(xpm_grid(r, 0, 0, -1, 1, heis) >= 2);
}

TEST_CASE("simply laced level one: minuscule module") {
    auto r = Representation::build(make_cfg("fj", LieType::A, 1, fr(1), 1));
    State hw = hw_state(r);
    CHECK(r.k_pair(0, r.hwv()) == fr(1));
    CHECK(state_is_zero(apply_mode(r, 0, +1, -1, hw)));
    CHECK(state_equal(apply_mode(r, 0, -1, 0, hw), State{{bv_lat({-1}), one(r)}}));
    CHECK(state_equal(apply_mode(r, 0, +1, -2, hw), State{{bv_lat({1}), one(r)}}));
    CHECK(xpm_grid(r, 0, 0, -2, 2, hw) >= 3);

    auto r2 = Representation::build(make_cfg("fj", LieType::A, 2, fr(1), 1));
    CHECK(r2.k_pair(0, r2.hwv()) == fr(1));
    CHECK(r2.k_pair(1, r2.hwv()) == fr(0));
}

TEST_CASE("rank two cross brackets and the lattice sign twist") {
    auto r = Representation::build(make_cfg("fj", LieType::A, 2, fr(1)));
    State hw = hw_state(r);

    // both operator orders reach the same vector; the two-cocycle makes the
    // coefficients agree so the bracket vanishes
    State up = apply_mode(r, 0, +1, -2, hw);
    BasisVector mixed = bv_lat({1, 0});
    mixed.bosons = {{0, 0, 1}};
    CHECK(state_equal(up, State{{mixed, qpw(r, fr(-1, 2))}}));
    State t2 = apply_mode(r, 1, -1, -1, up);
    CHECK(state_equal(t2, State{{bv_lat({1, -1}), one(r)}}));
    State t1 = apply_mode(r, 0, +1, -2, apply_mode(r, 1, -1, -1, hw));
    CHECK(state_equal(t1, t2));

    for (long m = -2; m <= 1; ++m)
        for (long n = -2; n <= 1; ++n) {
            INFO("modes " << m << "," << n);
            CHECK(state_is_zero(xpm_lhs(r, 0, 1, m, n, hw)));
            CHECK(state_is_zero(xpm_lhs(r, 1, 0, m, n, hw)));
        }
    CHECK(xpm_grid(r, 0, 0, -1, 1, hw) >= 2);
    CHECK(xpm_grid(r, 1, 1, -1, 1, hw) >= 2);
}

TEST_CASE("Heisenberg brackets against ladder fields") {
    auto r = Representation::build(make_cfg("fj", LieType::A, 1, fr(1)));
    State hw = hw_state(r);
    CHECK(aa_holds(r, 0, 0, 1, hw));
    CHECK(aa_holds(r, 0, 0, 2, hw));
    for (int sign : {-1, +1})
        for (long m : {-2L, -1L, 1L, 2L})
            for (long n : {-2L, -1L, 0L}) {
                INFO("sign " << sign << " a-mode " << m << " ladder mode " << n);
                CHECK(ax_holds(r, 0, 0, sign, m, n, hw));
            }
    // one instance with a visible contraction on both sides
    State lhs = sub(r, r.a_mode(0, 1, apply_mode(r, 0, +1, -2, hw)),
                    apply_mode(r, 0, +1, -2, r.a_mode(0, 1, hw)));
    State rhs = state_scaled(apply_mode(r, 0, +1, -1, hw),
                             (qpw(r, fr(1)) + qpw(r, fr(-1))) * qpw(r, fr(-1, 2)));
    CHECK(state_equal(lhs, rhs));
    CHECK(!state_is_zero(lhs));

    auto r2 = Representation::build(make_cfg("fj", LieType::A, 2, fr(1)));
    State hw2 = hw_state(r2);
    for (long m : {-1L, 1L}) {
        CHECK(aa_holds(r2, 0, 1, m, hw2));
        CHECK(ax_holds(r2, 0, 1, +1, m, -1, hw2));
        CHECK(ax_holds(r2, 1, 0, -1, m, -1, hw2));
    }

    auto rw = Representation::build(make_cfg("wakimoto-sl2", LieType::A, 1, fr(1)));
    State hww = hw_state(rw);
    CHECK(aa_holds(rw, 0, 0, 1, hww));
    for (int sign : {-1, +1})
        for (long m : {-1L, 1L, 2L}) {
            INFO("sign " << sign << " a-mode " << m);
            CHECK(ax_holds(rw, 0, 0, sign, m, -1, hww));
        }
}

TEST_CASE("orthogonal level one: fermionic short node and plain long nodes") {
    auto r = Representation::build(make_cfg("bl1", LieType::B, 2, fr(1), 0));
    State hw = hw_state(r);
    CHECK(r.k_pair(0, r.hwv()) == fr(0));
    CHECK(r.k_pair(1, r.hwv()) == fr(0));
    CHECK(r.ladder_offset(1, +1) == fr(1, 2));

    BasisVector kup = bv_lat({0, 1});
    kup.ferm2 = {1};
    BasisVector kdown = bv_lat({0, -1});
    kdown.ferm2 = {1};
    CHECK(state_equal(apply_mode(r, 1, +1, -1, hw), State{{kup, one(r)}}));
    CHECK(state_equal(apply_mode(r, 1, -1, -1, hw), State{{kdown, one(r)}}));
    CHECK(state_equal(apply_mode(r, 0, -1, -1, hw), State{{bv_lat({-1, 1}), one(r)}}));

    CHECK(xpm_grid(r, 1, 1, -2, 1, hw) >= 2);
    CHECK(xpm_grid(r, 0, 0, -1, 1, hw) >= 2);
    for (long m = -2; m <= 1; ++m)
        for (long n = -2; n <= 1; ++n) {
            INFO("modes " << m << "," << n);
            CHECK(state_is_zero(xpm_lhs(r, 0, 1, m, n, hw)));
            CHECK(state_is_zero(xpm_lhs(r, 1, 0, m, n, hw)));
        }
    State deep = apply_mode(r, 1, +1, -1, hw);
    CHECK(xpm_grid(r, 1, 1, -1, 1, deep) >= 2);

    auto rv = Representation::build(make_cfg("bl1", LieType::B, 2, fr(1), 1));
    State hv = hw_state(rv);
    CHECK(rv.k_pair(0, rv.hwv()) == fr(1));
    CHECK(rv.k_pair(1, rv.hwv()) == fr(0));
    CHECK(state_equal(apply_mode(rv, 0, -1, 0, hv), State{{bv_lat({-1, 1}), one(rv)}}));
    CHECK(xpm_grid(rv, 0, 0, -1, 1, hv) >= 2);
    CHECK(xpm_grid(rv, 1, 1, -1, 1, hv) >= 2);

    auto rs = Representation::build(make_cfg("bl1", LieType::B, 2, fr(1), 2));
    State hs = hw_state(rs);
    CHECK(rs.k_pair(0, rs.hwv()) == fr(0));
    CHECK(rs.k_pair(1, rs.hwv()) == fr(1, 2));
    CHECK(state_equal(apply_mode(rs, 1, -1, 0, hs), State{{bv_lat({0, -1}), one(rs)}}));
    CHECK(state_is_zero(apply_mode(rs, 1, +1, 0, hs)));
    CHECK(xpm_grid(rs, 1, 1, -1, 1, hs) >= 2);
    CHECK(xpm_grid(rs, 0, 0, -1, 1, hs) >= 2);
}

TEST_CASE("rank one level two: fermion against a doubled lattice") {
    auto r = Representation::build(make_cfg("sl2-l2", LieType::A, 1, fr(2)));
    State hw = hw_state(r);
    CHECK(r.level() == fr(2));
    CHECK(r.ladder_offset(0, +1) == fr(0));

    BasisVector kup = bv_lat({1});
    kup.ferm2 = {1};
    CHECK(state_equal(apply_mode(r, 0, +1, -1, hw), State{{kup, one(r)}}));
    CHECK(state_is_zero(apply_mode(r, 0, +1, 0, hw)));
    CHECK(state_equal(xpm_lhs(r, 0, 0, -1, 1, hw),
                      state_scaled(hw, -(qpw(r, fr(1)) + qpw(r, fr(-1))))));
    CHECK(xpm_grid(r, 0, 0, -1, 1, hw) >= 2);
    State deep = apply_mode(r, 0, +1, -1, hw);
    CHECK(xpm_grid(r, 0, 0, -1, 1, deep) >= 2);
}

TEST_CASE("rank one level two: mixed sector with a tag swapping zero mode") {
    auto r = Representation::build(make_cfg("sl2-l2-mixed", LieType::A, 1, fr(2)));
    State hw = hw_state(r);
    CHECK(r.k_pair(0, r.hwv()) == fr(1));

    BasisVector down = bv_lat({-1});
    down.tag = 1;
    CHECK(state_equal(apply_mode(r, 0, -1, 0, hw), State{{down, one(r)}}));
    CHECK(state_is_zero(apply_mode(r, 0, +1, 0, hw)));
    // the zero mode swaps the tag twice, landing back on the start vector
    CHECK(state_equal(xpm_lhs(r, 0, 0, 0, 0, hw), hw));
    CHECK(xpm_grid(r, 0, 0, -1, 1, hw) >= 3);
}

TEST_CASE("generic level rank one: branch cancellation and ladder brackets") {
    auto r = Representation::build(make_cfg("wakimoto-sl2", LieType::A, 1, fr(1)));
    State hw = hw_state(r);
    CHECK(state_is_zero(apply_mode(r, 0, +1, 0, hw)));
    CHECK(state_is_zero(apply_mode(r, 0, -1, 0, hw)));

    // the two dressed branches cancel the plain exponential term and leave
    // the two auxiliary one-mode terms
    QRat half = one(r) / (qpw(r, fr(1)) + qpw(r, fr(-1)));
    BasisVector b1 = bv_lat({-1, -1});
    b1.bosons = {{1, 0, 1}};
    BasisVector c1 = bv_lat({-1, -1});
    c1.bosons = {{2, 0, 1}};
    State want{{b1, half * qpw(r, fr(-3, 2))}, {c1, -half * qpw(r, fr(-1, 2))}};
    CHECK(state_equal(apply_mode(r, 0, -1, -1, hw), want));

    CHECK(xpm_grid(r, 0, 0, -1, 1, hw) >= 2);
    State deep = apply_mode(r, 0, +1, -1, hw);
    CHECK(!state_is_zero(deep));
    CHECK(xpm_grid(r, 0, 0, -1, 1, deep) >= 2);

    auto rh = Representation::build(make_cfg("wakimoto-sl2", LieType::A, 1, fr(1, 2)));
    CHECK(xpm_grid(rh, 0, 0, -1, 1, hw_state(rh)) >= 2);

    // the auxiliary argument scale drops out of raising/lowering products, so
    // the alternate reading passes the same instances
    RepConfig alt = make_cfg("wakimoto-sl2", LieType::A, 1, fr(1));
    alt.variants["b_arg"] = "whole";
    auto ra = Representation::build(alt);
    CHECK(xpm_grid(ra, 0, 0, -1, 1, hw_state(ra)) >= 2);
}

TEST_CASE("symplectic level one: dressed short nodes against a plain long node") {
    auto r = Representation::build(make_cfg("cl1", LieType::C, 2, fr(1), 0));
    State hw = hw_state(r);
    CHECK(r.qden(0) == fr(1, 2));
    CHECK(r.qden(1) == fr(1));

    CHECK(state_equal(apply_mode(r, 1, -1, -1, hw), State{{bv_lat({0, -1, 0}), one(r)}}));
    State up = apply_mode(r, 0, +1, -1, hw);
    State want{{bv_lat({1, 0, 1}), one(r)}, {bv_lat({1, 0, -1}), one(r)}};
    CHECK(state_equal(up, want));

    CHECK(xpm_grid(r, 0, 0, -1, 1, hw) >= 2);
    CHECK(xpm_grid(r, 1, 1, -1, 1, hw) >= 2);
    for (long m = -2; m <= 1; ++m)
        for (long n = -2; n <= 1; ++n) {
            INFO("modes " << m << "," << n);
            CHECK(state_is_zero(xpm_lhs(r, 0, 1, m, n, hw)));
            CHECK(state_is_zero(xpm_lhs(r, 1, 0, m, n, hw)));
        }
    CHECK(xpm_grid(r, 0, 0, -1, 1, up) >= 2);
}

TEST_CASE("four by four level one: dressed and plain nodes together") {
    auto r = Representation::build(make_cfg("f4l1", LieType::F, 4, fr(1)));
    State hw = hw_state(r);
    CHECK(r.qden(0) == fr(1, 2));
    CHECK(r.qden(2) == fr(1));
    CHECK(xpm_grid(r, 0, 0, -1, 1, hw) >= 2);
    CHECK(xpm_grid(r, 1, 1, -1, 1, hw) >= 2);
    CHECK(xpm_grid(r, 3, 3, -1, 1, hw) >= 2);
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {0, 2}})
        for (long m = -2; m <= 1; ++m)
            for (long n = -2; n <= 1; ++n) {
                INFO("nodes " << i << "," << j << " modes " << m << "," << n);
                CHECK(state_is_zero(xpm_lhs(r, i, j, m, n, hw)));
                CHECK(state_is_zero(xpm_lhs(r, j, i, m, n, hw)));
            }
}

TEST_CASE("symplectic level minus one half: difference operator ladder parts") {
    auto r = Representation::build(make_cfg("cl-neg-half", LieType::C, 2, fr(-1, 2)));
    State hw = hw_state(r);
    CHECK(r.level() == fr(-1, 2));

    QRat two_cos = qpw(r, fr(1, 2)) + qpw(r, fr(-1, 2));
    CHECK(state_equal(apply_mode(r, 1, -1, -1, hw),
                      State{{bv_lat({0, -2, 0, -2}), one(r) / two_cos}}));
    CHECK(!state_is_zero(apply_mode(r, 1, +1, -1, hw)));
    CHECK(!state_is_zero(apply_mode(r, 0, +1, -1, hw)));

    CHECK(xpm_grid(r, 0, 0, -1, 1, hw) >= 2);
    CHECK(xpm_grid(r, 1, 1, -1, 1, hw) >= 2);
    for (long m = -1; m <= 1; ++m)
        for (long n = -1; n <= 1; ++n) {
            INFO("modes " << m << "," << n);
            CHECK(state_is_zero(xpm_lhs(r, 0, 1, m, n, hw)));
            CHECK(state_is_zero(xpm_lhs(r, 1, 0, m, n, hw)));
        }
    State deep = apply_mode(r, 1, -1, -1, hw);
    CHECK(xpm_grid(r, 1, 1, -1, 1, deep) >= 2);

    RepConfig alt = make_cfg("cl-neg-half", LieType::C, 2, fr(-1, 2));
    alt.variants["zl_plus_args"] = "split";
    auto ra = Representation::build(alt);
    CHECK(xpm_grid(ra, 1, 1, -1, 1, hw_state(ra)) >= 2);
}

TEST_CASE("G2 level one: plain long node and triple-dressed short node") {
    auto r = Representation::build(make_cfg("g2l1", LieType::G, 2, fr(1)));
    State hw = hw_state(r);
    CHECK(r.qden(0) == fr(1));
    CHECK(r.qden(1) == fr(1, 3));

    CHECK(state_equal(apply_mode(r, 0, +1, -1, hw), State{{bv_lat({1, 0, 0}), one(r)}}));
    CHECK(state_is_zero(apply_mode(r, 1, +1, 0, hw)));
    CHECK(state_is_zero(apply_mode(r, 1, -1, 0, hw)));
    CHECK(!state_is_zero(apply_mode(r, 1, +1, -1, hw)));

    CHECK(xpm_grid(r, 0, 0, -1, 1, hw) >= 2);
    CHECK(xpm_grid(r, 1, 1, -1, 1, hw) >= 2);
    for (long m = -1; m <= 1; ++m)
        for (long n = -1; n <= 1; ++n) {
            INFO("modes " << m << "," << n);
            CHECK(state_is_zero(xpm_lhs(r, 0, 1, m, n, hw)));
            CHECK(state_is_zero(xpm_lhs(r, 1, 0, m, n, hw)));
        }
}

TEST_CASE("ladder components move the degree by their mode") {
    for (const auto& c : canonical_configs()) {
        INFO(c.id << " rank " << c.rank << " weight " << c.weight);
        auto r = Representation::build(c);
        int depth = (c.id == "f4l1" || c.rank >= 3) ? 1 : 2;
        grading_scan(r, depth);
    }
}

TEST_CASE("seeded defects break the relations they target") {
    State probe;

    SUBCASE("forgetting the lattice cocycle breaks cross brackets") {
        RepConfig c = make_cfg("fj", LieType::A, 2, fr(1));
        auto good = Representation::build(c);
        CHECK(state_is_zero(xpm_lhs(good, 0, 1, -2, -1, hw_state(good))));
        c.mutations.cocycle_sign = true;
        auto bad = Representation::build(c);
        CHECK(!state_is_zero(xpm_lhs(bad, 0, 1, -2, -1, hw_state(bad))));
    }

    SUBCASE("scaling the Heisenberg bracket shows up in ladder pairs") {
        RepConfig c = make_cfg("fj", LieType::A, 1, fr(1));
        auto good = Representation::build(c);
        CHECK(xpm_holds(good, 0, 0, -2, 2, hw_state(good)));
        CHECK(aa_holds(good, 0, 0, 1, hw_state(good)));
        c.mutations.bracket_coefficient = true;
        auto bad = Representation::build(c);
        CHECK(!xpm_holds(bad, 0, 0, -2, 2, hw_state(bad)));
        CHECK(!aa_holds(bad, 0, 0, 1, hw_state(bad)));
    }

    SUBCASE("flipping the dressing q power breaks Heisenberg-ladder brackets") {
        RepConfig c = make_cfg("fj", LieType::A, 1, fr(1));
        auto good = Representation::build(c);
        CHECK(ax_holds(good, 0, 0, +1, 1, -2, hw_state(good)));
        c.mutations.e_exp_q_power = true;
        auto bad = Representation::build(c);
        CHECK(!ax_holds(bad, 0, 0, +1, 1, -2, hw_state(bad)));
    }

    SUBCASE("shifting the mode dictionary breaks ladder pairs and grading") {
        RepConfig c = make_cfg("fj", LieType::A, 1, fr(1));
        auto good = Representation::build(c);
        CHECK(xpm_holds(good, 0, 0, -1, 1, hw_state(good)));
        c.mutations.mode_convention = true;
        auto bad = Representation::build(c);
        CHECK(!xpm_holds(bad, 0, 0, -1, 1, hw_state(bad)));
        Frac e = fr(0);
        auto res = evaluate_field(bad.space(), bad.x_field(0, +1), bad.hwv(), EvalWindow{e, e});
        REQUIRE(res.count(e) == 1);
        for (const auto& [w, cc] : res[e]) {
            (void)cc;
            CHECK(degree_of(bad.space(), w) != fr(0) - e - bad.ladder_offset(0, +1));
        }
    }

    (void)probe;
}
