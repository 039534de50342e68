#include <doctest.h>

#include "lsmr/generate.hpp"
#include "lsmr/lss.hpp"
#include "lsmr/reduce_moment.hpp"

using namespace lsmr;

namespace {

Lss two_mode_identity() {
    Lss sys;
    sys.p = 1;
    sys.m = 1;
    sys.n = 2;
    sys.D = 2;
    for (int q = 0; q < 2; ++q) {
        LssMode md;
        md.A = Matrix::Identity(2, 2);
        md.B = Matrix::Ones(2, 1) * (q + 1);
        md.C = Matrix::Ones(1, 2);
        sys.modes.push_back(md);
    }
    sys.x0 = Vector::Zero(2);
    return sys;
}

}  // namespace

TEST_CASE("validate accepts a well-formed system") {
    CHECK(validate(two_mode_identity()).empty());
}

TEST_CASE("validate reports dimension mismatches by mode and field") {
    Lss sys = two_mode_identity();
    sys.modes[0].B = Matrix::Ones(3, 1);
    auto errs = validate(sys);
    REQUIRE(errs.size() == 1);
    CHECK(errs[0].find("mode 1") != std::string::npos);
    CHECK(errs[0].find("B") != std::string::npos);

    Lss sys2 = two_mode_identity();
    sys2.x0 = Vector::Zero(5);
    auto errs2 = validate(sys2);
    REQUIRE(errs2.size() == 1);
    CHECK(errs2[0].find("x0") != std::string::npos);
}

TEST_CASE("word serialization") {
    CHECK(word_to_string({}) == "");
    CHECK(word_to_string({1, 2, 1}) == "121");
    CHECK(word_from_string("212") == Word{2, 1, 2});
    CHECK(word_from_string("") == Word{});
    CHECK_THROWS(word_from_string("x"));
}

TEST_CASE("a_word applies the first letter first") {
    Lss sys = random_lss(3, 2, 1, 1, {1.0}, 11);
    CHECK((a_word(sys, {}) - Matrix::Identity(3, 3)).norm() == 0.0);
    // w = 12 means A_2 * A_1
    CHECK((a_word(sys, {1, 2}) - sys.mode(2).A * sys.mode(1).A).norm() < 1e-14);
}

TEST_CASE("single-mode word products match the naive power oracle") {
    Lss sys = random_lss(4, 1, 1, 1, {1.0}, 3);
    Matrix naive = Matrix::Identity(4, 4);
    for (int k = 0; k < 3; ++k) naive = sys.mode(1).A * naive;
    CHECK((a_word(sys, {1, 1, 1}) - naive).norm() < 1e-12);
}

TEST_CASE("markov parameter shape is Dp x (mD+1)") {
    Lss sys = random_lss(3, 2, 1, 1, {1.0}, 5);
    Matrix m = markov_parameter(sys, {2});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
}

TEST_CASE("identity dynamics: M(v) = Ctilde Btilde for every v") {
    Lss sys = two_mode_identity();
    sys.x0 << 1, -1;
    const Matrix m0 = c_tilde(sys) * b_tilde(sys);
    for (const Word& v : words_up_to(2, 3)) CHECK((markov_parameter(sys, v) - m0).norm() < 1e-13);
}

TEST_CASE("markov parameter equals the elementwise triple product oracle") {
    Lss sys = random_lss(3, 2, 1, 1, {1.0}, 17);
    // v = 21 means A_1 A_2
    const Matrix oracle = c_tilde(sys) * (sys.mode(1).A * sys.mode(2).A) * b_tilde(sys);
    CHECK((markov_parameter(sys, {2, 1}) - oracle).norm() < 1e-12);
}

TEST_CASE("markov parameter counts") {
    Lss sys2 = random_lss(2, 2, 1, 1, {1.0}, 1);
    CHECK(markov_parameters_up_to(sys2, 1).size() == 3);  // eps, 1, 2

    Lss sys1 = random_lss(2, 1, 1, 1, {1.0}, 2);
    CHECK(markov_parameters_up_to(sys1, 4).size() == 5);

    Lss sys3 = random_lss(2, 3, 1, 1, {1.0}, 3);
    auto params = markov_parameters_up_to(sys3, 2);
    CHECK(params.size() == 13);
    // cross-check against explicit enumeration
    size_t count = 0;
    for (int len = 0; len <= 2; ++len) count += words_of_length(3, len).size();
    CHECK(params.size() == count);
}

TEST_CASE("a_word concatenation property") {
    Lss sys = random_lss(4, 3, 1, 1, {1.0}, 23);
    for (const Word& u : words_up_to(3, 2)) {
        for (const Word& v : words_up_to(3, 2)) {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            CHECK((a_word(sys, uv) - a_word(sys, v) * a_word(sys, u)).norm() < 1e-10);
        }
    }
}

TEST_CASE("minimize keeps an already-minimal system's dimension") {
    Lss sys = random_lss(4, 2, 1, 1, {1.0}, 31);  // random systems are minimal a.s.
    Lss min1 = minimize(sys);
    CHECK(min1.n == 4);
    CHECK(check_partial_realization(sys, min1, 4) < 1e-9);
}

TEST_CASE("minimize drops an unreachable-unobservable block") {
    // Embed a minimal n=2 system into n=4 coordinates with a decoupled block.
    Lss small = random_lss(2, 2, 1, 1, {1.0}, 37);
    Lss big;
    big.p = 1;
    big.m = 1;
    big.n = 4;
    big.D = 2;
    for (int q = 1; q <= 2; ++q) {
        LssMode md;
        md.A = Matrix::Zero(4, 4);
        md.A.topLeftCorner(2, 2) = small.mode(q).A;
        md.A.bottomRightCorner(2, 2) = Matrix::Identity(2, 2) * 0.5;
        md.B = Matrix::Zero(4, 1);
        md.B.topRows(2) = small.mode(q).B;
        md.C = Matrix::Zero(1, 4);
        md.C.leftCols(2) = small.mode(q).C;
        big.modes.push_back(md);
    }
    big.x0 = Vector::Zero(4);
    big.x0.head(2) = small.x0;

    Lss reduced = minimize(big);
    CHECK(reduced.n == 2);
    CHECK(check_partial_realization(big, reduced, 2 * 4) < 1e-9);
}

TEST_CASE("minimize of a 0-state system is a no-op") {
    Lss sys;
    sys.p = 1;
    sys.m = 1;
    sys.n = 0;
    sys.D = 1;
    sys.modes.push_back({Matrix(0, 0), Matrix(0, 1), Matrix(1, 0)});
    sys.x0 = Vector(0);
    CHECK(minimize(sys).n == 0);
}

TEST_CASE("minimize is idempotent up to dimension and Markov parameters") {
    Lss sys = random_lss(5, 2, 1, 1, {1.0}, 41);
    Lss a = minimize(sys);
    Lss b = minimize(a);
    CHECK(a.n == b.n);
    CHECK(check_partial_realization(a, b, 2 * sys.n) < 1e-9);
}

TEST_CASE("JSON round trip is bit-identical") {
    Lss sys = random_lss(3, 2, 2, 1, {0.9}, 51);
    const std::string once = lss_to_json(sys);
    const std::string twice = lss_to_json(lss_from_json(once));
    CHECK(once == twice);
}
