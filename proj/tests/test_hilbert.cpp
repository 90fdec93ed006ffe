#include <doctest.h>

#include <set>

#include "hilbert.hpp"

using namespace qwalk;

TEST_CASE("layout shapes") {
    CHECK(make_layout(2).graph_sizes == std::vector<int>{2});
    CHECK(make_layout(3).graph_sizes == std::vector<int>{4});
    CHECK(make_layout(4).graph_sizes == std::vector<int>{4, 2});
    CHECK(make_layout(5).graph_sizes == std::vector<int>{4, 4});
    CHECK(make_layout(6).graph_sizes == std::vector<int>{4, 4, 2});
    CHECK(make_layout(7).graph_sizes == std::vector<int>{4, 4, 4});
    CHECK(make_layout(5).dim() == 32);
    CHECK(make_layout(5).pos_dim() == 16);
    CHECK_THROWS_AS(make_layout(1), std::invalid_argument);
}

TEST_CASE("vertex/bit maps are inverse bijections") {
    for (Convention conv : {Convention::Gray, Convention::Binary}) {
        for (int sz : {2, 4}) {
            std::set<std::vector<int>> seen;
            for (int m = 0; m < sz; ++m) {
                auto bits = position_to_bits(m, sz, conv);
                CHECK(static_cast<int>(bits.size()) == (sz == 2 ? 1 : 2));
                CHECK(vertex_of_bits(bits, sz, conv) == m);
                seen.insert(bits);
            }
            CHECK(static_cast<int>(seen.size()) == sz);
        }
    }
}

TEST_CASE("gray adjacency: neighbouring vertices differ in one bit") {
    for (int m = 0; m < 4; ++m) {
        auto a = position_to_bits(m, 4, Convention::Gray);
        auto b = position_to_bits((m + 1) % 4, 4, Convention::Gray);
        CHECK((a[0] != b[0]) + (a[1] != b[1]) == 1);
    }
}

TEST_CASE("qubit seats") {
    Layout lay5 = make_layout(5);
    CHECK(qubit_seat(2, lay5).level == 0);
    CHECK(qubit_seat(2, lay5).bit == 0);
    CHECK(qubit_seat(3, lay5).level == 0);
    CHECK(qubit_seat(3, lay5).bit == 1);
    CHECK(qubit_seat(4, lay5).level == 1);
    CHECK(qubit_seat(4, lay5).bit == 0);
    CHECK(qubit_seat(5, lay5).level == 1);
    CHECK(qubit_seat(5, lay5).bit == 1);
    Layout lay4 = make_layout(4);
    CHECK(qubit_seat(4, lay4).level == 1);  // tail graph
    CHECK(qubit_seat(4, lay4).bit == 0);
    CHECK_THROWS_AS(qubit_seat(1, lay4), std::invalid_argument);
}

TEST_CASE("index encode/decode round trip and qubit map is a permutation") {
    for (Convention conv : {Convention::Gray, Convention::Binary}) {
        for (int n : {2, 3, 4, 5}) {
            Layout lay = make_layout(n, conv);
            std::set<int> qidx;
            for (int w = 0; w < lay.dim(); ++w) {
                int coin;
                std::vector<int> pos;
                decode_index(w, lay, coin, pos);
                CHECK(basis_index(coin, pos, lay) == w);
                qidx.insert(qubit_index_of(w, lay));
            }
            CHECK(static_cast<int>(qidx.size()) == lay.dim());
        }
    }
}

TEST_CASE("measurement") {
    Layout lay = make_layout(3);
    WalkState st = init_state(lay, 1, {2});
    auto probs = measure_all(st);
    double total = 0;
    for (auto& [k, v] : probs) total += v;
    CHECK(total == doctest::Approx(1.0));
    // coin bit leads the string
    std::string key = "1" + std::to_string(position_to_bits(2, 4, lay.conv)[0]) +
                      std::to_string(position_to_bits(2, 4, lay.conv)[1]);
    CHECK(probs.at(key) == doctest::Approx(1.0));
    st.amp *= 2.0;
    CHECK_THROWS_AS(measure_all(st), invalid_state);
}
