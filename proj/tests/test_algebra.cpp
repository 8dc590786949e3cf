#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qza/algebra.hpp"

using namespace qza;

namespace {
Frac fr(long long n, long long d = 1) { return Frac{n, d}; }

std::vector<std::vector<int>> cartan_matrix(LieType t, int rank) {
    return cartan_data(t, rank).cartan;
}

Frac highest_root_norm(const CartanData& cd) {
    std::vector<Frac> theta(cd.rank, fr(0));
    for (int i = 0; i < cd.rank; ++i) theta[i] = fr(cd.marks[i]);
    return cd.pair_roots(theta, theta);
}
} // namespace

TEST_CASE("cartan matrices of the small rank-2 types") {
    CHECK(cartan_matrix(LieType::A, 2) == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    // short root first, long root second
    CHECK(cartan_matrix(LieType::C, 2) == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
    // long root first, short root second
    CHECK(cartan_matrix(LieType::B, 2) == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
    CHECK(cartan_matrix(LieType::G, 2) == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
}

TEST_CASE("root lengths") {
    const auto& b3 = cartan_data(LieType::B, 3);
    CHECK(b3.d == std::vector<Frac>{fr(1), fr(1), fr(1, 2)});
    const auto& c3 = cartan_data(LieType::C, 3);
    CHECK(c3.d == std::vector<Frac>{fr(1, 2), fr(1, 2), fr(1)});
    const auto& f4 = cartan_data(LieType::F, 4);
    CHECK(f4.d == std::vector<Frac>{fr(1, 2), fr(1, 2), fr(1), fr(1)});
    const auto& g2 = cartan_data(LieType::G, 2);
    CHECK(g2.d == std::vector<Frac>{fr(1), fr(1, 3)});
    CHECK(g2.gram == std::vector<std::vector<Frac>>{{fr(2), fr(-1)}, {fr(-1), fr(2, 3)}});
}

TEST_CASE("f4 cartan matrix with the short nodes leading") {
    CHECK(cartan_matrix(LieType::F, 4) ==
          std::vector<std::vector<int>>{
              {2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
}

TEST_CASE("fundamental weights pair as d_i delta_ij") {
    for (const CartanData* cd :
         {&cartan_data(LieType::A, 3), &cartan_data(LieType::B, 2), &cartan_data(LieType::C, 2),
          &cartan_data(LieType::D, 4), &cartan_data(LieType::F, 4), &cartan_data(LieType::G, 2),
          &cartan_data(LieType::E, 6)}) {
        for (int j = 0; j < cd->rank; ++j)
            for (int i = 0; i < cd->rank; ++i) {
                Frac want = (i == j) ? cd->d[i] : fr(0);
                CHECK(cd->pair_root_simple(cd->fund[j], i) == want);
            }
    }
}

TEST_CASE("frozen weight norms") {
    CHECK(cartan_data(LieType::A, 2).weight_norm(0) == fr(2, 3));
    CHECK(cartan_data(LieType::C, 2).weight_norm(0) == fr(1, 2));
    CHECK(cartan_data(LieType::B, 3).weight_norm(2) == fr(3, 4));
    CHECK(cartan_data(LieType::D, 4).weight_norm(0) == fr(1));
}

TEST_CASE("highest root marks and normalization") {
    CHECK(cartan_data(LieType::A, 3).marks == std::vector<int>{1, 1, 1});
    CHECK(cartan_data(LieType::B, 2).marks == std::vector<int>{1, 2});
    CHECK(cartan_data(LieType::C, 2).marks == std::vector<int>{2, 1});
    CHECK(cartan_data(LieType::D, 4).marks == std::vector<int>{1, 2, 1, 1});
    CHECK(cartan_data(LieType::G, 2).marks == std::vector<int>{2, 3});
    CHECK(cartan_data(LieType::F, 4).marks == std::vector<int>{2, 4, 3, 2});
    CHECK(cartan_data(LieType::E, 6).marks == std::vector<int>{1, 2, 2, 3, 2, 1});
    CHECK(cartan_data(LieType::E, 7).marks == std::vector<int>{2, 2, 3, 4, 3, 2, 1});
    CHECK(cartan_data(LieType::E, 8).marks == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
    for (const CartanData* cd :
         {&cartan_data(LieType::A, 1), &cartan_data(LieType::B, 3), &cartan_data(LieType::C, 3),
          &cartan_data(LieType::D, 5), &cartan_data(LieType::E, 8), &cartan_data(LieType::F, 4),
          &cartan_data(LieType::G, 2)})
        CHECK(highest_root_norm(*cd) == fr(2));
}

TEST_CASE("minuscule nodes") {
    CHECK(cartan_data(LieType::A, 3).minuscule_nodes == std::vector<int>{0, 1, 2});
    CHECK(cartan_data(LieType::D, 4).minuscule_nodes == std::vector<int>{0, 2, 3});
    CHECK(cartan_data(LieType::D, 5).minuscule_nodes == std::vector<int>{0, 3, 4});
    CHECK(cartan_data(LieType::E, 6).minuscule_nodes == std::vector<int>{0, 5});
    CHECK(cartan_data(LieType::E, 7).minuscule_nodes == std::vector<int>{6});
    CHECK(cartan_data(LieType::E, 8).minuscule_nodes.empty());
    CHECK(cartan_data(LieType::B, 3).minuscule_nodes.empty());
}

TEST_CASE("serre exponents on the doubly and triply bonded pairs") {
    CHECK(cartan_data(LieType::A, 2).serre_exponent(0, 1) == 2);
    CHECK(cartan_data(LieType::C, 2).serre_exponent(0, 1) == 3);
    CHECK(cartan_data(LieType::C, 2).serre_exponent(1, 0) == 2);
    CHECK(cartan_data(LieType::B, 2).serre_exponent(1, 0) == 3);
    CHECK(cartan_data(LieType::B, 2).serre_exponent(0, 1) == 2);
    CHECK(cartan_data(LieType::G, 2).serre_exponent(1, 0) == 4);
    CHECK(cartan_data(LieType::G, 2).serre_exponent(0, 1) == 2);
}

TEST_CASE("type names and bounds") {
    CHECK(cartan_data(LieType::A, 1).name() == "A1");
    CHECK(cartan_data(LieType::E, 7).name() == "E7");
    CHECK(lie_type_from_char('D') == LieType::D);
    CHECK(lie_type_char(LieType::G) == 'G');
    CHECK_THROWS(cartan_data(LieType::E, 9));
    CHECK_THROWS(cartan_data(LieType::B, 1));
    CHECK_THROWS(lie_type_from_char('X'));
}

TEST_CASE("rational linear solve") {
    auto x = solve_frac_system({{fr(2), fr(-1)}, {fr(-1), fr(2)}}, {fr(1), fr(0)});
    CHECK(x == std::vector<Frac>{fr(2, 3), fr(1, 3)});
    CHECK_THROWS(solve_frac_system({{fr(1), fr(2)}, {fr(2), fr(4)}}, {fr(1), fr(1)}));
}
